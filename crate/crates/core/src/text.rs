//! Line-oriented text format for multipoles.
//!
//! ```text
//! # comment
//! multipole poleA
//! vertices 10
//! link 0 2
//! dangle 0 cut0
//! connector cut0
//! end
//! ```
//!
//! Emission is canonical (links in sorted order); parsing any permutation
//! of the same lines yields the same multipole, so `emit(parse(t))` is the
//! canonical form of `t`. Structural invariants beyond syntax are left to
//! [`Multipole::validate`].

use crate::multipole::{Dangling, Multipole};
use std::fmt;
use thiserror::Error;

#[derive(Clone, PartialEq, Eq, Debug, Error)]
#[error("line {line}: {kind}")]
pub struct TextError {
    pub line: usize,
    pub kind: TextErrorKind,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TextErrorKind {
    ExpectedMultipoleHeader,
    DuplicateDirective(&'static str),
    UnknownDirective(String),
    WrongArity { directive: &'static str, expected: usize },
    BadInteger(String),
    DuplicateDanglingLabel(String),
    MissingVertices,
    MissingEnd,
    ContentAfterEnd,
}

impl fmt::Display for TextErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TextErrorKind::ExpectedMultipoleHeader => {
                write!(f, "expected `multipole <name>` header")
            }
            TextErrorKind::DuplicateDirective(d) => write!(f, "duplicate `{d}` directive"),
            TextErrorKind::UnknownDirective(d) => write!(f, "unknown directive `{d}`"),
            TextErrorKind::WrongArity { directive, expected } => {
                write!(f, "`{directive}` takes {expected} argument(s)")
            }
            TextErrorKind::BadInteger(t) => write!(f, "`{t}` is not a vertex number"),
            TextErrorKind::DuplicateDanglingLabel(l) => {
                write!(f, "dangling label `{l}` declared twice")
            }
            TextErrorKind::MissingVertices => write!(f, "missing `vertices` directive"),
            TextErrorKind::MissingEnd => write!(f, "missing `end`"),
            TextErrorKind::ContentAfterEnd => write!(f, "content after `end`"),
        }
    }
}

fn err(line: usize, kind: TextErrorKind) -> TextError {
    TextError { line, kind }
}

/// Parses one `multipole ... end` block; returns its name and the multipole.
pub fn parse_multipole_text(text: &str) -> Result<(String, Multipole), TextError> {
    let mut name = None;
    let mut vertices: Option<usize> = None;
    let mut links = Vec::new();
    let mut danglings: Vec<Dangling> = Vec::new();
    let mut connectors: Vec<Vec<String>> = Vec::new();
    let mut ended = false;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        last_line = line_no;
        if ended {
            return Err(err(line_no, TextErrorKind::ContentAfterEnd));
        }
        if name.is_none() {
            if tokens[0] != "multipole" || tokens.len() != 2 {
                return Err(err(line_no, TextErrorKind::ExpectedMultipoleHeader));
            }
            name = Some(tokens[1].to_string());
            continue;
        }
        match tokens[0] {
            "vertices" => {
                if tokens.len() != 2 {
                    return Err(err(
                        line_no,
                        TextErrorKind::WrongArity { directive: "vertices", expected: 1 },
                    ));
                }
                if vertices.is_some() {
                    return Err(err(line_no, TextErrorKind::DuplicateDirective("vertices")));
                }
                vertices = Some(parse_int(tokens[1], line_no)?);
            }
            "link" => {
                if tokens.len() != 3 {
                    return Err(err(
                        line_no,
                        TextErrorKind::WrongArity { directive: "link", expected: 2 },
                    ));
                }
                links.push((parse_int(tokens[1], line_no)?, parse_int(tokens[2], line_no)?));
            }
            "dangle" => {
                if tokens.len() != 3 {
                    return Err(err(
                        line_no,
                        TextErrorKind::WrongArity { directive: "dangle", expected: 2 },
                    ));
                }
                let label = tokens[2].to_string();
                if danglings.iter().any(|d| d.label == label) {
                    return Err(err(line_no, TextErrorKind::DuplicateDanglingLabel(label)));
                }
                danglings.push(Dangling {
                    vertex: parse_int(tokens[1], line_no)?,
                    label,
                });
            }
            "connector" => {
                if tokens.len() < 2 {
                    return Err(err(
                        line_no,
                        TextErrorKind::WrongArity { directive: "connector", expected: 1 },
                    ));
                }
                connectors.push(tokens[1..].iter().map(|s| s.to_string()).collect());
            }
            "end" => {
                if tokens.len() != 1 {
                    return Err(err(
                        line_no,
                        TextErrorKind::WrongArity { directive: "end", expected: 0 },
                    ));
                }
                ended = true;
            }
            other => {
                return Err(err(line_no, TextErrorKind::UnknownDirective(other.to_string())));
            }
        }
    }

    let name = name.ok_or_else(|| err(last_line.max(1), TextErrorKind::ExpectedMultipoleHeader))?;
    let vertices = vertices.ok_or_else(|| err(last_line, TextErrorKind::MissingVertices))?;
    if !ended {
        return Err(err(last_line, TextErrorKind::MissingEnd));
    }
    Ok((
        name,
        Multipole::new_unchecked(vertices, links, danglings, connectors),
    ))
}

fn parse_int(token: &str, line: usize) -> Result<usize, TextError> {
    token
        .parse()
        .map_err(|_| err(line, TextErrorKind::BadInteger(token.to_string())))
}

/// Canonical text form: links in canonical order, danglings and connectors
/// in declaration order.
pub fn emit_multipole_text(name: &str, m: &Multipole) -> String {
    let mut out = String::new();
    out.push_str(&format!("multipole {name}\n"));
    out.push_str(&format!("vertices {}\n", m.vertex_count()));
    for &(u, v) in m.links() {
        out.push_str(&format!("link {u} {v}\n"));
    }
    for d in m.danglings() {
        out.push_str(&format!("dangle {} {}\n", d.vertex, d.label));
    }
    for connector in m.connectors() {
        out.push_str("connector");
        for label in connector {
            out.push_str(&format!(" {label}"));
        }
        out.push('\n');
    }
    out.push_str("end\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::pole_a;

    #[test]
    fn pole_a_round_trip() {
        let a = pole_a();
        let text = emit_multipole_text("poleA", &a);
        let (name, back) = parse_multipole_text(&text).unwrap();
        assert_eq!(name, "poleA");
        assert_eq!(back, a);
        assert!(back.validate().is_valid());
    }

    #[test]
    fn emit_of_parse_is_canonical() {
        let scrambled = "\
# rearranged lines, unsorted links
multipole tiny
vertices 4
dangle 0 x
link 1 0
link 2 1
dangle 1 y
link 3 2
link 0 3
dangle 2 w
dangle 3 z
connector x y
connector w z
end
";
        let (name, m) = parse_multipole_text(scrambled).unwrap();
        let canonical = emit_multipole_text(&name, &m);
        let (name2, m2) = parse_multipole_text(&canonical).unwrap();
        assert_eq!(name, name2);
        assert_eq!(m, m2);
        assert_eq!(canonical, emit_multipole_text(&name2, &m2));
        assert!(m.validate().is_valid());
    }

    #[test]
    fn duplicate_label_is_a_parse_error() {
        let text = "multipole m\nvertices 2\nlink 0 1\ndangle 0 d\ndangle 1 d\nend\n";
        let e = parse_multipole_text(text).unwrap_err();
        assert_eq!(e.line, 5);
        assert!(matches!(e.kind, TextErrorKind::DuplicateDanglingLabel(_)));
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let text = "multipole m\nvertices 4\nlink 0\nend\n";
        let e = parse_multipole_text(text).unwrap_err();
        assert_eq!(e.line, 3);
    }

    #[test]
    fn invariant_checks_are_deferred_to_validate() {
        // parses fine, degrees are wrong
        let text = "multipole m\nvertices 3\nlink 0 1\nlink 1 2\nend\n";
        let (_, m) = parse_multipole_text(text).unwrap();
        assert!(!m.validate().is_valid());
    }
}
