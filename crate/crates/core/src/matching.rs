//! Exhaustive enumeration of perfect matchings and proper 3-edge-colorings
//! of multipoles, with optional boundary constraints on dangling edges.
//!
//! A perfect matching of a multipole is a set of links and danglings meeting
//! every vertex exactly once; loops can never participate. Colorings are
//! enumerated as ordered triples of color classes, each class a perfect
//! matching, reusing the single matching kernel.

use crate::edgeset::EdgeSet;
use crate::multipole::{Edge, EdgeRef, Multipole};
use std::collections::BTreeMap;

/// A perfect matching, stored as an edge set of the host multipole.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PerfectMatching {
    edges: EdgeSet,
}

impl PerfectMatching {
    /// Wraps a raw edge set; callers are responsible for the matching
    /// property (checkable via [`is_perfect_matching`]).
    pub fn from_edge_set(edges: EdgeSet) -> PerfectMatching {
        PerfectMatching { edges }
    }

    pub fn edge_set(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn contains(&self, e: EdgeRef) -> bool {
        self.edges.contains(e)
    }

    pub fn edges(&self) -> Vec<EdgeRef> {
        self.edges.iter().collect()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Is `set` a perfect matching of `m`? Every vertex must be met exactly once.
pub fn is_perfect_matching(m: &Multipole, set: &EdgeSet) -> bool {
    let mut met = vec![0usize; m.vertex_count()];
    for e in set.iter() {
        match m.edge(e) {
            Some(Edge::Link(u, v)) => {
                if u == v {
                    return false; // loops cover a vertex twice
                }
                met[u] += 1;
                met[v] += 1;
            }
            Some(Edge::Dangling(v, _)) => met[v] += 1,
            None => return false,
        }
    }
    met.iter().all(|&c| c == 1)
}

/// Requirement on one dangling edge during enumeration.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DanglingRequirement {
    RequiredIn,
    RequiredOut,
}

/// Partial map from dangling labels to requirements.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BoundaryConstraint {
    map: BTreeMap<String, DanglingRequirement>,
}

impl BoundaryConstraint {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn require_in(mut self, label: &str) -> Self {
        self.map.insert(label.to_string(), DanglingRequirement::RequiredIn);
        self
    }

    pub fn require_out(mut self, label: &str) -> Self {
        self.map.insert(label.to_string(), DanglingRequirement::RequiredOut);
        self
    }

    pub fn get(&self, label: &str) -> Option<DanglingRequirement> {
        self.map.get(label).copied()
    }

    pub fn labels(&self) -> impl Iterator<Item = (&str, DanglingRequirement)> {
        self.map.iter().map(|(l, &r)| (l.as_str(), r))
    }
}

/// Backtracking enumerator over the lowest uncovered vertex. Presented
/// matchings are pushed through `visit`; returning `false` stops early.
struct Enumerator<'a> {
    m: &'a Multipole,
    allowed: Vec<bool>,
    covered: Vec<bool>,
    chosen: EdgeSet,
}

impl<'a> Enumerator<'a> {
    /// `allowed` restricts the candidate edges; `constraint` pre-selects or
    /// bans dangling edges. Returns `None` when the constraints are
    /// immediately contradictory (no matchings).
    fn new(
        m: &'a Multipole,
        constraint: Option<&BoundaryConstraint>,
        allowed_set: Option<&EdgeSet>,
    ) -> Option<Self> {
        let edge_count = m.edge_count();
        let mut allowed = vec![true; edge_count];
        if let Some(set) = allowed_set {
            for (i, a) in allowed.iter_mut().enumerate() {
                *a = set.contains(EdgeRef(i));
            }
        }
        // loops can never be matched
        for (i, &(u, v)) in m.links().iter().enumerate() {
            if u == v {
                allowed[i] = false;
            }
        }
        let mut covered = vec![false; m.vertex_count()];
        let mut chosen = EdgeSet::empty(edge_count);
        if let Some(constraint) = constraint {
            for (label, requirement) in constraint.labels() {
                let index = m
                    .dangling_index(label)
                    .unwrap_or_else(|| panic!("constraint names unknown dangling {label}"));
                let e = m.edge_ref_of_dangling(index);
                match requirement {
                    DanglingRequirement::RequiredOut => allowed[e.0] = false,
                    DanglingRequirement::RequiredIn => {
                        if !allowed[e.0] {
                            return None;
                        }
                        let v = m.danglings()[index].vertex;
                        if covered[v] {
                            return None; // two required danglings at one vertex
                        }
                        covered[v] = true;
                        chosen.insert(e);
                    }
                }
            }
        }
        Some(Enumerator {
            m,
            allowed,
            covered,
            chosen,
        })
    }

    fn run(&mut self, visit: &mut impl FnMut(&EdgeSet) -> bool) {
        self.recurse(0, visit);
    }

    /// The lowest uncovered vertex only ever moves forward, so scanning may
    /// start at `from`.
    fn recurse(&mut self, from: usize, visit: &mut impl FnMut(&EdgeSet) -> bool) -> bool {
        let v = match (from..self.m.vertex_count()).find(|&v| !self.covered[v]) {
            Some(v) => v,
            None => return visit(&self.chosen),
        };
        for idx in 0..self.m.edges_at(v).len() {
            let e = self.m.edges_at(v)[idx];
            if !self.allowed[e.0] || self.chosen.contains(e) {
                continue;
            }
            match self.m.edge(e).expect("incidence lists valid edges") {
                Edge::Link(a, b) => {
                    let other = if a == v { b } else { a };
                    if self.covered[other] {
                        continue;
                    }
                    self.covered[v] = true;
                    self.covered[other] = true;
                    self.chosen.insert(e);
                    let keep_going = self.recurse(v + 1, visit);
                    self.chosen.remove(e);
                    self.covered[v] = false;
                    self.covered[other] = false;
                    if !keep_going {
                        return false;
                    }
                }
                Edge::Dangling(..) => {
                    self.covered[v] = true;
                    self.chosen.insert(e);
                    let keep_going = self.recurse(v + 1, visit);
                    self.chosen.remove(e);
                    self.covered[v] = false;
                    if !keep_going {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn enumerate(
    m: &Multipole,
    constraint: Option<&BoundaryConstraint>,
    allowed: Option<&EdgeSet>,
    visit: &mut impl FnMut(&EdgeSet) -> bool,
) {
    if let Some(mut enumerator) = Enumerator::new(m, constraint, allowed) {
        enumerator.run(visit);
    }
}

/// All perfect matchings of `m` satisfying `constraint`, each exactly once,
/// sorted ascending by edge bitmask.
pub fn perfect_matchings(
    m: &Multipole,
    constraint: Option<&BoundaryConstraint>,
) -> Vec<PerfectMatching> {
    let mut out = Vec::new();
    enumerate(m, constraint, None, &mut |set| {
        out.push(PerfectMatching { edges: set.clone() });
        true
    });
    out.sort();
    out
}

/// Number of perfect matchings, counted without materializing them.
pub fn count_perfect_matchings(m: &Multipole) -> usize {
    let mut count = 0;
    enumerate(m, None, None, &mut |_| {
        count += 1;
        true
    });
    count
}

/// A proper 3-edge-coloring: a color in {1,2,3} per edge such that each
/// color class is a perfect matching.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeColoring {
    colors: Vec<u8>,
}

impl EdgeColoring {
    pub fn color(&self, e: EdgeRef) -> u8 {
        self.colors[e.0]
    }

    pub fn color_of_dangling(&self, m: &Multipole, label: &str) -> Option<u8> {
        m.dangling_index(label)
            .map(|i| self.colors[m.edge_ref_of_dangling(i).0])
    }

    pub fn class(&self, color: u8) -> EdgeSet {
        let mut set = EdgeSet::empty(self.colors.len());
        for (i, &c) in self.colors.iter().enumerate() {
            if c == color {
                set.insert(EdgeRef(i));
            }
        }
        set
    }
}

fn class_constraint(fixed: &BTreeMap<String, u8>, color: u8) -> BoundaryConstraint {
    let mut constraint = BoundaryConstraint::new();
    for (label, &c) in fixed {
        constraint = if c == color {
            constraint.require_in(label)
        } else {
            constraint.require_out(label)
        };
    }
    constraint
}

fn colorings_inner(
    m: &Multipole,
    fixed: &BTreeMap<String, u8>,
    visit: &mut impl FnMut(EdgeColoring) -> bool,
) {
    if m.has_loop() {
        return; // a loop is self-adjacent, never properly colorable
    }
    let edge_count = m.edge_count();
    let all = EdgeSet::full(edge_count);
    let first = perfect_matchings(m, Some(&class_constraint(fixed, 1)));
    let second_constraint = class_constraint(fixed, 2);
    'outer: for m1 in &first {
        let rest = all.difference(m1.edge_set());
        let second = {
            let mut out = Vec::new();
            enumerate(m, Some(&second_constraint), Some(&rest), &mut |set| {
                out.push(set.clone());
                true
            });
            out.sort();
            out
        };
        for m2 in &second {
            let m3 = rest.difference(m2);
            if !is_perfect_matching(m, &m3) {
                continue;
            }
            let mut colors = vec![3u8; edge_count];
            for e in m1.edge_set().iter() {
                colors[e.0] = 1;
            }
            for e in m2.iter() {
                colors[e.0] = 2;
            }
            if !visit(EdgeColoring { colors }) {
                break 'outer;
            }
        }
    }
}

/// Every proper 3-edge-coloring of `m` extending the partial assignment of
/// colors to dangling labels. Color permutations are distinct colorings.
pub fn edge_colorings(m: &Multipole, fixed: &BTreeMap<String, u8>) -> Vec<EdgeColoring> {
    let mut out = Vec::new();
    colorings_inner(m, fixed, &mut |coloring| {
        out.push(coloring);
        true
    });
    out
}

/// Short-circuiting colorability test.
pub fn is_3_edge_colorable(m: &Multipole) -> bool {
    let mut found = false;
    colorings_inner(m, &BTreeMap::new(), &mut |_| {
        found = true;
        false
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{blanusa_block, k4, petersen, pole_a, pole_b_default, prism};

    /// Independent oracle: filter every subset of the edge set.
    fn matchings_by_subset_oracle(m: &Multipole) -> Vec<EdgeSet> {
        let edge_count = m.edge_count();
        assert!(edge_count <= 20, "oracle is exponential");
        let mut out = Vec::new();
        for mask in 0u32..(1 << edge_count) {
            let mut set = EdgeSet::empty(edge_count);
            for i in 0..edge_count {
                if mask >> i & 1 == 1 {
                    set.insert(EdgeRef(i));
                }
            }
            if is_perfect_matching(m, &set) {
                out.push(set);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn enumeration_matches_subset_oracle() {
        for m in [
            petersen().as_multipole().clone(),
            k4().as_multipole().clone(),
            prism().as_multipole().clone(),
            pole_a(),
            pole_b_default(),
            blanusa_block(),
        ] {
            let by_enumeration: Vec<EdgeSet> = perfect_matchings(&m, None)
                .into_iter()
                .map(|pm| pm.edge_set().clone())
                .collect();
            assert_eq!(by_enumeration, matchings_by_subset_oracle(&m));
        }
    }

    #[test]
    fn counts() {
        assert_eq!(count_perfect_matchings(petersen().as_multipole()), 6);
        assert_eq!(count_perfect_matchings(k4().as_multipole()), 3);
        // a triangle has no perfect matching (odd vertex count, no danglings)
        let triangle = Multipole::new_unchecked(3, vec![(0, 1), (1, 2), (0, 2)], vec![], vec![]);
        assert_eq!(count_perfect_matchings(&triangle), 0);
    }

    #[test]
    fn pole_a_parity() {
        let a = pole_a();
        let d0 = a.edge_ref_of_dangling(0);
        let d1 = a.edge_ref_of_dangling(1);
        let all = perfect_matchings(&a, None);
        assert_eq!(all.len(), 6);
        for pm in &all {
            assert_eq!(pm.contains(d0), pm.contains(d1), "both danglings or none");
        }
        let both_out = perfect_matchings(
            &a,
            Some(&BoundaryConstraint::new().require_out("cut0").require_out("cut1")),
        );
        assert_eq!(both_out.len(), 4);
        assert!(both_out.iter().all(|pm| !pm.contains(d0) && !pm.contains(d1)));
        // exactly one dangling in: impossible by parity
        let one_in = perfect_matchings(
            &a,
            Some(&BoundaryConstraint::new().require_in("cut0").require_out("cut1")),
        );
        assert!(one_in.is_empty());
    }

    #[test]
    fn pole_b_parity() {
        let b = pole_b_default();
        let d0 = b.edge_ref_of_dangling(0);
        let d1 = b.edge_ref_of_dangling(1);
        for pm in perfect_matchings(&b, None) {
            assert_eq!(pm.contains(d0), pm.contains(d1));
        }
    }

    #[test]
    fn colorability() {
        assert!(is_3_edge_colorable(k4().as_multipole()));
        assert!(is_3_edge_colorable(prism().as_multipole()));
        assert!(!is_3_edge_colorable(petersen().as_multipole()));
        assert!(!is_3_edge_colorable(&pole_a()));
    }

    #[test]
    fn k4_has_six_ordered_colorings() {
        // the unique partition into three matchings, times 3! orderings
        let colorings = edge_colorings(k4().as_multipole(), &BTreeMap::new());
        assert_eq!(colorings.len(), 6);
    }

    #[test]
    fn color_classes_are_perfect_matchings() {
        let block = blanusa_block();
        let colorings = edge_colorings(&block, &BTreeMap::new());
        assert!(!colorings.is_empty());
        for coloring in &colorings {
            for color in 1..=3 {
                assert!(is_perfect_matching(&block, &coloring.class(color)));
            }
        }
    }

    #[test]
    fn blanusa_boundary_pairing() {
        let block = blanusa_block();
        for coloring in edge_colorings(&block, &BTreeMap::new()) {
            let c = |label: &str| coloring.color_of_dangling(&block, label).unwrap();
            assert_eq!(c("f1"), c("f3"));
            assert_eq!(c("f2"), c("f4"));
        }
        // the all-same-color boundary exists
        let fixed: BTreeMap<String, u8> =
            [("f1", 2), ("f2", 2), ("f3", 2), ("f4", 2)]
                .into_iter()
                .map(|(l, c)| (l.to_string(), c))
                .collect();
        assert!(!edge_colorings(&block, &fixed).is_empty());
    }

    #[test]
    fn loops_kill_matchability_and_colorability() {
        // one vertex with a loop plus a dangling: degree 3
        let m = Multipole::new_unchecked(
            1,
            vec![(0, 0)],
            vec![crate::multipole::Dangling { vertex: 0, label: "d".into() }],
            vec![],
        );
        // the dangling alone covers the vertex; the loop can never be chosen
        let pms = perfect_matchings(&m, None);
        assert_eq!(pms.len(), 1);
        assert!(!is_3_edge_colorable(&m));
    }
}
