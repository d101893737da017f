//! Named verification checks: each check re-derives a structural fact about
//! the gadget blocks or families from scratch and reports machine-checkable
//! evidence (counts, minima, witnesses). Nothing is cached between checks
//! and no expected value is taken from the generators themselves.

use crate::edgeset::EdgeSet;
use crate::generators::{
    build_family_assembly, i_extension, params_for_fraction, pole_a, pole_a_prime,
    pole_b_default, blanusa_block, petersen, small_cubic_graphs, FamilyKind, FamilySpec,
    FractionTarget,
};
use crate::m3::{m3_bruteforce, m3_ring, uncovered_counts};
use crate::matching::{edge_colorings, is_perfect_matching, perfect_matchings, PerfectMatching};
use crate::multipole::{Edge, Graph, Multipole};
use crate::structure::{
    cyclic_connectivity_oracle, cyclic_edge_connectivity, girth, is_bridgeless,
    is_cycle_separating, shortest_cycle_through, ConnectivityResult, ORACLE_VERTEX_LIMIT,
};
use num_rational::Ratio;
use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum VerifyError {
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
    #[error("check `{check}` needs parameter `{param}`")]
    MissingParam { check: String, param: &'static str },
    #[error("bad parameter `{0}`; expected key=value with keys a, b, p, q")]
    BadParam(String),
}

/// Identifiers of the available checks.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum CheckId {
    PetersenM3,
    LemmaA2,
    LemmaB2,
    LemmaA4,
    BlanusaPairing,
    LemmaI,
    Fraction2,
    Fraction4,
    TheoremCc2,
    TheoremCc4,
}

impl CheckId {
    pub const ALL: [CheckId; 10] = [
        CheckId::PetersenM3,
        CheckId::LemmaA2,
        CheckId::LemmaB2,
        CheckId::LemmaA4,
        CheckId::BlanusaPairing,
        CheckId::LemmaI,
        CheckId::Fraction2,
        CheckId::Fraction4,
        CheckId::TheoremCc2,
        CheckId::TheoremCc4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::PetersenM3 => "petersen-m3",
            CheckId::LemmaA2 => "lemma-A2",
            CheckId::LemmaB2 => "lemma-B2",
            CheckId::LemmaA4 => "lemma-A4",
            CheckId::BlanusaPairing => "blanusa-pairing",
            CheckId::LemmaI => "lemma-I",
            CheckId::Fraction2 => "fraction2",
            CheckId::Fraction4 => "fraction4",
            CheckId::TheoremCc2 => "theorem-cc2",
            CheckId::TheoremCc4 => "theorem-cc4",
        }
    }

    pub fn parse(text: &str) -> Result<CheckId, VerifyError> {
        CheckId::ALL
            .into_iter()
            .find(|id| id.as_str() == text)
            .ok_or_else(|| VerifyError::UnknownCheck(text.to_string()))
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Optional numeric parameters; which ones are required depends on the id.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct CheckParams {
    pub a: Option<u64>,
    pub b: Option<u64>,
    pub p: Option<u64>,
    pub q: Option<u64>,
}

impl CheckParams {
    pub fn ab(a: u64, b: u64) -> CheckParams {
        CheckParams { a: Some(a), b: Some(b), ..Default::default() }
    }

    pub fn pq(p: u64, q: u64) -> CheckParams {
        CheckParams { p: Some(p), q: Some(q), ..Default::default() }
    }

    /// Parses `key=value` strings as produced by a command line.
    pub fn from_args(args: &[String]) -> Result<CheckParams, VerifyError> {
        let mut params = CheckParams::default();
        for arg in args {
            let (key, value) = arg
                .split_once('=')
                .ok_or_else(|| VerifyError::BadParam(arg.clone()))?;
            let value: u64 = value
                .parse()
                .map_err(|_| VerifyError::BadParam(arg.clone()))?;
            match key {
                "a" => params.a = Some(value),
                "b" => params.b = Some(value),
                "p" => params.p = Some(value),
                "q" => params.q = Some(value),
                _ => return Err(VerifyError::BadParam(arg.clone())),
            }
        }
        Ok(params)
    }

    fn pairs(&self) -> Vec<(String, u64)> {
        let mut out = Vec::new();
        for (key, value) in [("a", self.a), ("b", self.b), ("p", self.p), ("q", self.q)] {
            if let Some(v) = value {
                out.push((key.to_string(), v));
            }
        }
        out
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Pass,
    Fail,
}

/// Outcome of one check run: evidence rows plus pass/fail.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub id: CheckId,
    pub params: Vec<(String, u64)>,
    pub verdict: Verdict,
    pub evidence: Vec<(String, String)>,
    pub runtime: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Evidence accumulator; failed expectations flip the verdict and are
/// recorded alongside the evidence.
struct Checker {
    evidence: Vec<(String, String)>,
    failures: Vec<String>,
}

impl Checker {
    fn new() -> Checker {
        Checker { evidence: Vec::new(), failures: Vec::new() }
    }

    fn note(&mut self, key: impl Into<String>, value: impl ToString) {
        self.evidence.push((key.into(), value.to_string()));
    }

    fn expect(&mut self, condition: bool, failure: impl Into<String>) {
        if !condition {
            self.failures.push(failure.into());
        }
    }

    fn finish(mut self, id: CheckId, params: &CheckParams, start: Instant) -> CheckReport {
        let verdict = if self.failures.is_empty() {
            Verdict::Pass
        } else {
            let joined = self.failures.join("; ");
            self.evidence.push(("failure".to_string(), joined));
            Verdict::Fail
        };
        CheckReport {
            id,
            params: params.pairs(),
            verdict,
            evidence: self.evidence,
            runtime: start.elapsed(),
        }
    }
}

fn format_edge_set(m: &Multipole, set: &EdgeSet) -> String {
    set.iter()
        .map(|e| match m.edge(e).expect("edge in range") {
            Edge::Link(u, v) => format!("{u}-{v}"),
            Edge::Dangling(_, label) => format!("~{label}"),
        })
        .collect::<Vec<_>>()
        .join(",")
}

fn triple_union(pms: &[&PerfectMatching]) -> EdgeSet {
    let mut union = pms[0].edge_set().clone();
    union.union_in_place(pms[1].edge_set());
    union.union_in_place(pms[2].edge_set());
    union
}

fn require(
    params: &CheckParams,
    id: CheckId,
    field: fn(&CheckParams) -> Option<u64>,
    name: &'static str,
) -> Result<u64, VerifyError> {
    field(params).ok_or(VerifyError::MissingParam { check: id.as_str().to_string(), param: name })
}

/// Runs one check.
pub fn check(id: CheckId, params: &CheckParams) -> Result<CheckReport, VerifyError> {
    let start = Instant::now();
    let report = match id {
        CheckId::PetersenM3 => check_petersen_m3(params, start),
        CheckId::LemmaA2 => check_lemma_a2(params, start),
        CheckId::LemmaB2 => check_lemma_b2(params, start),
        CheckId::LemmaA4 => check_lemma_a4(params, start),
        CheckId::BlanusaPairing => check_blanusa_pairing(params, start),
        CheckId::LemmaI => check_lemma_i(params, start),
        CheckId::Fraction2 => {
            let a = require(params, id, |p| p.a, "a")?;
            let b = require(params, id, |p| p.b, "b")?;
            check_fraction(FamilyKind::Cc2, a, b, params, start)
        }
        CheckId::Fraction4 => {
            let a = require(params, id, |p| p.a, "a")?;
            let b = require(params, id, |p| p.b, "b")?;
            check_fraction(FamilyKind::Cc4, a, b, params, start)
        }
        CheckId::TheoremCc2 => {
            let p = require(params, id, |p| p.p, "p")?;
            let q = require(params, id, |p| p.q, "q")?;
            check_theorem(FamilyKind::Cc2, p, q, params, start)
        }
        CheckId::TheoremCc4 => {
            let p = require(params, id, |p| p.p, "p")?;
            let q = require(params, id, |p| p.q, "q")?;
            check_theorem(FamilyKind::Cc4, p, q, params, start)
        }
    };
    Ok(report)
}

fn check_petersen_m3(params: &CheckParams, start: Instant) -> CheckReport {
    let mut c = Checker::new();
    let p = petersen();
    match m3_bruteforce(&p, None) {
        Ok(result) => {
            c.note("covered", result.covered);
            c.note("total", result.total);
            c.note("value", format!("{}/{}", result.covered, result.total));
            c.expect(result.covered == 12, format!("covered {} != 12", result.covered));
            c.expect(result.total == 15, format!("total {} != 15", result.total));
            for pm in &result.witness {
                c.expect(
                    is_perfect_matching(p.as_multipole(), pm.edge_set()),
                    "witness member is not a perfect matching",
                );
            }
            c.note("witness", format_edge_set(p.as_multipole(), &triple_union(&[
                &result.witness[0], &result.witness[1], &result.witness[2],
            ])));
        }
        Err(e) => c.expect(false, format!("solver error: {e}")),
    }
    c.finish(CheckId::PetersenM3, params, start)
}

fn check_lemma_a2(params: &CheckParams, start: Instant) -> CheckReport {
    let mut c = Checker::new();
    let a = pole_a();
    let d0 = a.edge_ref_of_dangling(0);
    let d1 = a.edge_ref_of_dangling(1);
    let pms = perfect_matchings(&a, None);
    c.note("matchings", pms.len());

    // (a) each matching uses both danglings or neither
    for pm in &pms {
        c.expect(
            pm.contains(d0) == pm.contains(d1),
            "matching with exactly one dangling edge",
        );
    }

    // (b) triples avoiding the danglings leave at least 2 links uncovered
    // (c) triples using a dangling leave at least 3 links uncovered
    let mut min_free: Option<(usize, [usize; 3])> = None;
    let mut min_used: Option<(usize, [usize; 3])> = None;
    for i in 0..pms.len() {
        for j in i..pms.len() {
            for k in j..pms.len() {
                let union = triple_union(&[&pms[i], &pms[j], &pms[k]]);
                let (links_uncovered, _) = uncovered_counts(&a, &union);
                let uses_dangling =
                    pms[i].contains(d0) || pms[j].contains(d0) || pms[k].contains(d0);
                let slot = if uses_dangling { &mut min_used } else { &mut min_free };
                if slot.is_none() || links_uncovered < slot.unwrap().0 {
                    *slot = Some((links_uncovered, [i, j, k]));
                }
            }
        }
    }
    match min_free {
        Some((min, triple)) => {
            c.note("min_uncovered_links_danglings_out", min);
            c.note(
                "witness_danglings_out",
                format_edge_set(&a, &triple_union(&[&pms[triple[0]], &pms[triple[1]], &pms[triple[2]]])),
            );
            c.expect(min == 2, format!("dangling-free minimum {min} != 2"));
        }
        None => c.expect(false, "no dangling-free triple exists"),
    }
    match min_used {
        Some((min, triple)) => {
            c.note("min_uncovered_links_danglings_in", min);
            c.note(
                "witness_danglings_in",
                format_edge_set(&a, &triple_union(&[&pms[triple[0]], &pms[triple[1]], &pms[triple[2]]])),
            );
            c.expect(min == 3, format!("dangling-using minimum {min} != 3"));
        }
        None => c.expect(false, "no dangling-using triple exists"),
    }
    c.finish(CheckId::LemmaA2, params, start)
}

fn check_lemma_b2(params: &CheckParams, start: Instant) -> CheckReport {
    let mut c = Checker::new();
    let b = pole_b_default();
    let pms = perfect_matchings(&b, None);
    c.note("matchings", pms.len());
    let mut witness = None;
    'outer: for i in 0..pms.len() {
        for j in i..pms.len() {
            for k in j..pms.len() {
                let union = triple_union(&[&pms[i], &pms[j], &pms[k]]);
                if union.len() == b.edge_count() {
                    witness = Some(union);
                    break 'outer;
                }
            }
        }
    }
    match witness {
        Some(union) => {
            c.note("covering_triple", format_edge_set(&b, &union));
            c.note("uncovered", 0);
        }
        None => c.expect(false, "no triple covers every edge of B"),
    }
    c.finish(CheckId::LemmaB2, params, start)
}

fn check_lemma_a4(params: &CheckParams, start: Instant) -> CheckReport {
    let mut c = Checker::new();
    let a = pole_a_prime();
    let pms = perfect_matchings(&a, None);
    c.note("matchings", pms.len());
    let mut min_weight = usize::MAX;
    let mut witness_three_links: Option<EdgeSet> = None;
    let mut witness_two_two: Option<EdgeSet> = None;
    let mut property_violations = 0usize;
    for i in 0..pms.len() {
        for j in i..pms.len() {
            let pair = pms[i].edge_set().union(pms[j].edge_set());
            for third in pms.iter().skip(j) {
                let union = pair.union(third.edge_set());
                let (links, danglings) = uncovered_counts(&a, &union);
                let weight = 2 * links + danglings;
                min_weight = min_weight.min(weight);
                if !(links >= 3 || (links >= 2 && danglings >= 2)) {
                    property_violations += 1;
                }
                if links == 3 && danglings == 0 && witness_three_links.is_none() {
                    witness_three_links = Some(union.clone());
                }
                if links == 2 && danglings == 2 && witness_two_two.is_none() {
                    witness_two_two = Some(union.clone());
                }
            }
        }
    }
    c.note("min_weight_half_units", min_weight);
    c.note("property_violations", property_violations);
    c.expect(property_violations == 0, "triple leaving fewer than the lemma's uncovered edges");
    c.expect(min_weight == 6, format!("minimum weight {min_weight} != 6"));
    match &witness_three_links {
        Some(union) => c.note("witness_three_links", format_edge_set(&a, union)),
        None => c.expect(false, "three-uncovered-links pattern not attained"),
    }
    match &witness_two_two {
        Some(union) => c.note("witness_two_links_two_danglings", format_edge_set(&a, union)),
        None => c.expect(false, "two-links-two-danglings pattern not attained"),
    }
    c.finish(CheckId::LemmaA4, params, start)
}

fn check_blanusa_pairing(params: &CheckParams, start: Instant) -> CheckReport {
    let mut c = Checker::new();
    let block = blanusa_block();
    let colorings = edge_colorings(&block, &BTreeMap::new());
    c.note("colorings", colorings.len());
    c.expect(!colorings.is_empty(), "the block must be 3-edge-colorable");
    let mut all_same = 0usize;
    for coloring in &colorings {
        let color = |label: &str| coloring.color_of_dangling(&block, label).unwrap();
        c.expect(color("f1") == color("f3"), "coloring with f1 != f3");
        c.expect(color("f2") == color("f4"), "coloring with f2 != f4");
        if color("f1") == color("f2") && color("f2") == color("f3") && color("f3") == color("f4") {
            all_same += 1;
        }
    }
    c.note("all_same_boundary_colorings", all_same);
    c.expect(all_same > 0, "no coloring with all four danglings alike");
    let split: BTreeMap<String, u8> = [("f1", 1), ("f3", 1), ("f2", 2), ("f4", 2)]
        .into_iter()
        .map(|(l, v)| (l.to_string(), v))
        .collect();
    let split_count = edge_colorings(&block, &split).len();
    c.note("f1f3_one_f2f4_two_colorings", split_count);
    c.expect(split_count > 0, "no coloring with f1,f3=1 and f2,f4=2");
    c.finish(CheckId::BlanusaPairing, params, start)
}

fn check_lemma_i(params: &CheckParams, start: Instant) -> CheckReport {
    let mut c = Checker::new();
    let mut corpus: Vec<Graph> = Vec::new();
    for n in [4usize, 6, 8, 10] {
        corpus.extend(small_cubic_graphs(n));
    }
    c.note("corpus_graphs", corpus.len());
    let mut extensions = 0usize;
    let mut violations = 0usize;
    for g in &corpus {
        let base = cyclic_connectivity_oracle(g)
            .expect("corpus graphs are within the oracle bound")
            .value_or_inf();
        let edge_count = g.links().len();
        for e1 in 0..edge_count {
            for e2 in e1..edge_count {
                let (extended, new_edge) =
                    i_extension(g, crate::multipole::EdgeRef(e1), crate::multipole::EdgeRef(e2))
                        .expect("links of a graph");
                let extended_cyc = cyclic_connectivity_oracle(&extended)
                    .expect("extensions stay within the oracle bound")
                    .value_or_inf();
                let through_new = shortest_cycle_through(extended.as_multipole(), new_edge)
                    .expect("the new edge is a link")
                    .map_or(usize::MAX, |len| len);
                extensions += 1;
                if extended_cyc < base.min(through_new) {
                    violations += 1;
                }
            }
        }
    }
    c.note("extensions", extensions);
    c.note("violations", violations);
    c.expect(violations == 0, "an extension dropped below both bounds");
    c.finish(CheckId::LemmaI, params, start)
}

fn check_fraction(
    kind: FamilyKind,
    a: u64,
    b: u64,
    params: &CheckParams,
    start: Instant,
) -> CheckReport {
    let id = match kind {
        FamilyKind::Cc2 => CheckId::Fraction2,
        FamilyKind::Cc4 => CheckId::Fraction4,
    };
    let mut c = Checker::new();
    let spec = match FamilySpec::new(kind, a, b) {
        Ok(spec) => spec,
        Err(e) => {
            c.expect(false, format!("bad family parameters: {e}"));
            return c.finish(id, params, start);
        }
    };
    let (expect_covered, expect_total) = spec.expected_m3();
    match build_family_assembly(&spec).map_err(crate::m3::M3Error::from).and_then(|assembly| {
        let dp = m3_ring(&assembly)?;
        Ok((assembly, dp))
    }) {
        Ok((assembly, dp)) => {
            c.note("edges", assembly.graph.edge_count());
            c.note("dp_value", format!("{}/{}", dp.covered, dp.total));
            c.expect(
                dp.covered as u64 == expect_covered && dp.total as u64 == expect_total,
                format!(
                    "ring solver {}/{} != formula {}/{}",
                    dp.covered, dp.total, expect_covered, expect_total
                ),
            );
            if assembly.graph.edge_count() <= 36 {
                match m3_bruteforce(&assembly.graph, None) {
                    Ok(brute) => {
                        c.note("brute_value", format!("{}/{}", brute.covered, brute.total));
                        c.expect(
                            brute.covered == dp.covered,
                            format!("brute force {} != ring {}", brute.covered, dp.covered),
                        );
                    }
                    Err(e) => c.expect(false, format!("brute force failed: {e}")),
                }
            } else {
                c.note("brute_value", "skipped-above-36-edges");
            }
        }
        Err(e) => c.expect(false, format!("solver error: {e}")),
    }
    c.finish(id, params, start)
}

fn check_theorem(
    kind: FamilyKind,
    p: u64,
    q: u64,
    params: &CheckParams,
    start: Instant,
) -> CheckReport {
    let id = match kind {
        FamilyKind::Cc2 => CheckId::TheoremCc2,
        FamilyKind::Cc4 => CheckId::TheoremCc4,
    };
    let mut c = Checker::new();
    let (a, b) = match params_for_fraction(kind, FractionTarget { p, q }) {
        Ok(ab) => ab,
        Err(e) => {
            c.expect(false, format!("fraction outside the family interval: {e}"));
            return c.finish(id, params, start);
        }
    };
    c.note("a", a);
    c.note("b", b);
    let target = Ratio::new(p as i64, q as i64);
    for scale in [1u64, 2] {
        let label = |name: &str| format!("scale{scale}_{name}");
        let spec = match FamilySpec::new(kind, a, b).and_then(|s| s.scaled(scale)) {
            Ok(spec) => spec,
            Err(e) => {
                c.expect(false, format!("family construction failed: {e}"));
                continue;
            }
        };
        let assembly = match build_family_assembly(&spec) {
            Ok(assembly) => assembly,
            Err(e) => {
                c.expect(false, format!("assembly failed: {e}"));
                continue;
            }
        };
        let graph = &assembly.graph;
        c.note(label("vertices"), graph.vertex_count());
        c.note(label("edges"), graph.edge_count());
        match m3_ring(&assembly) {
            Ok(dp) => {
                c.note(label("m3"), format!("{}/{}", dp.covered, dp.total));
                c.expect(
                    dp.value() == target,
                    format!("m3 {}/{} != target {p}/{q}", dp.covered, dp.total),
                );
            }
            Err(e) => c.expect(false, format!("ring solver failed: {e}")),
        }
        match kind {
            FamilyKind::Cc2 => {
                c.expect(is_bridgeless(graph.as_multipole()), "family graph has a bridge");
                // the two fused edges around block 0 form a 2-cut
                let n_blocks = assembly.blocks.len();
                let cut: Vec<_> = [
                    assembly.layout.interfaces[n_blocks - 1][0],
                    assembly.layout.interfaces[0][0],
                ]
                .iter()
                .map(|&(u, v)| graph.edge_ref_of_link(u, v).expect("interface link"))
                .collect();
                let separating = is_cycle_separating(graph, &cut);
                c.note(label("two_cut_separates"), separating);
                c.expect(separating, "interface pair is not cycle-separating");
                if graph.vertex_count() <= ORACLE_VERTEX_LIMIT {
                    let oracle = cyclic_connectivity_oracle(graph).expect("within bound");
                    c.note(label("cyclic_connectivity"), oracle.value_or_inf());
                    c.expect(oracle.value_or_inf() == 2, "oracle disagrees with 2");
                } else {
                    // bridgeless rules out 1-cuts; the witnessed 2-cut closes it
                    c.note(label("cyclic_connectivity"), 2);
                    c.note(label("oracle"), "out-of-range");
                }
            }
            FamilyKind::Cc4 => {
                c.note(label("girth"), girth(graph.as_multipole()).unwrap_or(0));
                c.expect(girth(graph.as_multipole()) == Some(5), "girth is not 5");
                match cyclic_edge_connectivity(graph) {
                    Ok(ConnectivityResult::Cut { value, cut, .. }) => {
                        c.note(label("cyclic_connectivity"), value);
                        c.expect(value == 4, format!("cyclic connectivity {value} != 4"));
                        c.expect(
                            is_cycle_separating(graph, &cut),
                            "reported cut is not cycle-separating",
                        );
                        if graph.vertex_count() <= ORACLE_VERTEX_LIMIT {
                            let oracle =
                                cyclic_connectivity_oracle(graph).expect("within bound");
                            c.expect(
                                oracle.value_or_inf() == value,
                                "oracle disagrees with the cycle-pair algorithm",
                            );
                        } else {
                            c.note(label("oracle"), "out-of-range");
                        }
                    }
                    Ok(ConnectivityResult::NoTwoDisjointCycles) => {
                        c.expect(false, "family graph lost its disjoint cycles")
                    }
                    Err(e) => c.expect(false, format!("connectivity failed: {e}")),
                }
            }
        }
    }
    c.finish(id, params, start)
}

/// The default full suite: every check at its standard parameters.
pub fn default_suite() -> Vec<(CheckId, CheckParams)> {
    let mut suite = vec![
        (CheckId::PetersenM3, CheckParams::default()),
        (CheckId::LemmaA2, CheckParams::default()),
        (CheckId::LemmaB2, CheckParams::default()),
        (CheckId::LemmaA4, CheckParams::default()),
        (CheckId::BlanusaPairing, CheckParams::default()),
        (CheckId::LemmaI, CheckParams::default()),
    ];
    for a in 1..=3 {
        for b in 0..=2 {
            suite.push((CheckId::Fraction2, CheckParams::ab(a, b)));
        }
    }
    for (a, b) in [(1, 0), (1, 1), (2, 0), (1, 2)] {
        suite.push((CheckId::Fraction4, CheckParams::ab(a, b)));
    }
    for (p, q) in [(4, 5), (5, 6), (9, 11)] {
        suite.push((CheckId::TheoremCc2, CheckParams::pq(p, q)));
    }
    for (p, q) in [(9, 10), (11, 12)] {
        suite.push((CheckId::TheoremCc4, CheckParams::pq(p, q)));
    }
    suite
}

/// Runs the default suite in order.
pub fn run_default_suite() -> Vec<CheckReport> {
    default_suite()
        .into_iter()
        .map(|(id, params)| check(id, &params).expect("suite parameters are valid"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_checks_pass() {
        for id in [
            CheckId::PetersenM3,
            CheckId::LemmaA2,
            CheckId::LemmaB2,
            CheckId::BlanusaPairing,
        ] {
            let report = check(id, &CheckParams::default()).unwrap();
            assert!(report.passed(), "{id}: {:?}", report.evidence);
        }
    }

    #[test]
    fn fraction_checks_pass() {
        let report = check(CheckId::Fraction2, &CheckParams::ab(1, 1)).unwrap();
        assert!(report.passed(), "{:?}", report.evidence);
        let value = report
            .evidence
            .iter()
            .find(|(k, _)| k == "dp_value")
            .map(|(_, v)| v.clone())
            .unwrap();
        assert_eq!(value, "18/21");
    }

    #[test]
    fn unknown_id_is_an_error() {
        assert!(matches!(
            CheckId::parse("lemma-X9"),
            Err(VerifyError::UnknownCheck(_))
        ));
    }

    #[test]
    fn missing_params_are_reported() {
        assert!(matches!(
            check(CheckId::Fraction2, &CheckParams::default()),
            Err(VerifyError::MissingParam { .. })
        ));
    }

    #[test]
    fn params_parse_from_key_value_args() {
        let params =
            CheckParams::from_args(&["a=2".to_string(), "b=1".to_string()]).unwrap();
        assert_eq!(params.a, Some(2));
        assert_eq!(params.b, Some(1));
        assert!(CheckParams::from_args(&["z=1".to_string()]).is_err());
    }
}
