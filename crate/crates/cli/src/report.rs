//! Line-delimited report records with a stable field order.
//!
//! One record per line: a record name followed by `key=value` fields.
//! Values containing whitespace are double-quoted. Rationals are always
//! emitted as `p/q` strings, never as decimals; timing fields come last so
//! reports are byte-identical across runs up to timing.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

pub struct Report {
    out: Box<dyn Write>,
}

impl Report {
    pub fn stdout() -> Report {
        Report { out: Box::new(io::stdout()) }
    }

    pub fn file(path: &Path) -> io::Result<Report> {
        Ok(Report { out: Box::new(BufWriter::new(File::create(path)?)) })
    }

    pub fn record(&mut self, name: &str, fields: &[(&str, String)]) {
        let owned: Vec<(String, String)> = fields
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect();
        self.record_owned(name, &owned);
    }

    pub fn record_owned(&mut self, name: &str, fields: &[(String, String)]) {
        let mut line = String::from(name);
        for (key, value) in fields {
            line.push(' ');
            line.push_str(key);
            line.push('=');
            if value.is_empty() || value.chars().any(|c| c.is_whitespace() || c == '"') {
                line.push('"');
                line.push_str(&value.replace('"', "'"));
                line.push('"');
            } else {
                line.push_str(value);
            }
        }
        writeln!(self.out, "{line}").expect("report write");
    }

    pub fn finish(mut self) {
        self.out.flush().expect("report flush");
    }
}

/// `covered/total` plus its reduced form.
pub fn fraction_fields(covered: usize, total: usize) -> [(&'static str, String); 2] {
    let reduced = num_rational::Ratio::new(covered as i64, total as i64);
    [
        ("value", format!("{covered}/{total}")),
        ("reduced", format!("{}/{}", reduced.numer(), reduced.denom())),
    ]
}
