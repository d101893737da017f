//! Multipoles (cubic graph fragments with links, dangling edges, and
//! ordered connectors) and the cut/join composition algebra.
//!
//! A link joins two vertices (a loop joins a vertex to itself and counts
//! twice towards its degree), a dangling edge has exactly one incident
//! vertex. Isolated edges (no incident vertex) are not representable.
//! Connectors group dangling edges into ordered join interfaces; joins are
//! position-wise, so the i-th dangling of one connector always fuses with
//! the i-th dangling of the other.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

/// Index of an edge in a multipole's canonical edge order: links sorted
/// lexicographically by endpoint pair, then danglings in declaration order.
/// Indices are dense in `0..edge_count` and survive serialization.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeRef(pub usize);

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// A dangling edge: one end at `vertex`, the other end free.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Dangling {
    pub vertex: usize,
    pub label: String,
}

/// Resolved view of one edge of a multipole.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Edge<'a> {
    Link(usize, usize),
    Dangling(usize, &'a str),
}

/// Cubic graph fragment. Immutable after construction; all operations
/// produce new values.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Multipole {
    vertex_count: usize,
    links: Vec<(usize, usize)>,
    danglings: Vec<Dangling>,
    connectors: Vec<Vec<String>>,
    /// Derived: edges incident with each vertex, ascending. A loop appears
    /// twice in its vertex's list.
    incidence: Vec<Vec<EdgeRef>>,
}

/// One invariant violation found by [`Multipole::validate`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ValidationIssue {
    LinkEndpointOutOfRange { link: (usize, usize) },
    DanglingVertexOutOfRange { label: String, vertex: usize },
    WrongDegree { vertex: usize, degree: usize },
    DuplicateDanglingLabel { label: String },
    UnknownConnectorLabel { connector: usize, label: String },
    LabelInMultipleConnectors { label: String },
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationIssue::LinkEndpointOutOfRange { link } => {
                write!(f, "link {}-{} has an endpoint out of range", link.0, link.1)
            }
            ValidationIssue::DanglingVertexOutOfRange { label, vertex } => {
                write!(f, "dangling edge {label} sits at out-of-range vertex {vertex}")
            }
            ValidationIssue::WrongDegree { vertex, degree } => {
                write!(f, "vertex {vertex} has degree {degree}, expected 3")
            }
            ValidationIssue::DuplicateDanglingLabel { label } => {
                write!(f, "dangling label {label} declared twice")
            }
            ValidationIssue::UnknownConnectorLabel { connector, label } => {
                write!(f, "connector {connector} names unknown dangling {label}")
            }
            ValidationIssue::LabelInMultipleConnectors { label } => {
                write!(f, "dangling {label} appears in two connectors")
            }
        }
    }
}

/// Report of every invariant violated by a multipole; empty iff valid.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ValidationReport {
    pub issues: Vec<ValidationIssue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            return write!(f, "valid multipole");
        }
        for (i, issue) in self.issues.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{issue}")?;
        }
        Ok(())
    }
}

/// Errors of the cut/join algebra.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum AlgebraError {
    #[error("edge {0} is not a link")]
    NotALink(EdgeRef),
    #[error("edge {0} does not exist")]
    NoSuchEdge(EdgeRef),
    #[error("connector {0} does not exist")]
    NoSuchConnector(usize),
    #[error("connector widths differ: {left} vs {right}")]
    WidthMismatch { left: usize, right: usize },
    #[error("join_self needs two distinct connectors")]
    SameConnector,
    #[error("no dangling edge labelled {0}")]
    UnknownLabel(String),
    #[error("dangling label {0} would occur twice after the operation")]
    LabelClash(String),
    #[error("vertex {0} does not exist")]
    NoSuchVertex(usize),
    #[error("wiring is not a permutation of the connector positions")]
    BadPermutation,
}

/// Errors when promoting a multipole to a [`Graph`].
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum GraphError {
    #[error("graph still has {0} dangling edges")]
    HasDanglings(usize),
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: usize, degree: usize },
    #[error("invalid structure: {0}")]
    Invalid(String),
}

impl Multipole {
    /// Builds without invariant checks, normalizing the canonical edge order
    /// (link endpoints sorted within each pair, pairs sorted).
    pub fn new_unchecked(
        vertex_count: usize,
        links: Vec<(usize, usize)>,
        danglings: Vec<Dangling>,
        connectors: Vec<Vec<String>>,
    ) -> Multipole {
        let mut links: Vec<(usize, usize)> = links
            .into_iter()
            .map(|(u, v)| if u <= v { (u, v) } else { (v, u) })
            .collect();
        links.sort_unstable();
        let mut incidence = vec![Vec::new(); vertex_count];
        for (i, &(u, v)) in links.iter().enumerate() {
            if u < vertex_count {
                incidence[u].push(EdgeRef(i));
            }
            if v < vertex_count {
                incidence[v].push(EdgeRef(i));
            }
        }
        for (i, d) in danglings.iter().enumerate() {
            if d.vertex < vertex_count {
                incidence[d.vertex].push(EdgeRef(links.len() + i));
            }
        }
        Multipole {
            vertex_count,
            links,
            danglings,
            connectors,
            incidence,
        }
    }

    /// Builds and validates; returns the full report on failure.
    pub fn new(
        vertex_count: usize,
        links: Vec<(usize, usize)>,
        danglings: Vec<Dangling>,
        connectors: Vec<Vec<String>>,
    ) -> Result<Multipole, ValidationReport> {
        let m = Multipole::new_unchecked(vertex_count, links, danglings, connectors);
        let report = m.validate();
        if report.is_valid() {
            Ok(m)
        } else {
            Err(report)
        }
    }

    /// Checks every multipole invariant and reports all violations.
    pub fn validate(&self) -> ValidationReport {
        let mut issues = Vec::new();
        for &(u, v) in &self.links {
            if u >= self.vertex_count || v >= self.vertex_count {
                issues.push(ValidationIssue::LinkEndpointOutOfRange { link: (u, v) });
            }
        }
        for d in &self.danglings {
            if d.vertex >= self.vertex_count {
                issues.push(ValidationIssue::DanglingVertexOutOfRange {
                    label: d.label.clone(),
                    vertex: d.vertex,
                });
            }
        }
        for v in 0..self.vertex_count {
            let degree = self.degree(v);
            if degree != 3 {
                issues.push(ValidationIssue::WrongDegree { vertex: v, degree });
            }
        }
        let mut seen = BTreeSet::new();
        for d in &self.danglings {
            if !seen.insert(d.label.as_str()) {
                issues.push(ValidationIssue::DuplicateDanglingLabel {
                    label: d.label.clone(),
                });
            }
        }
        let mut in_connector = BTreeSet::new();
        for (ci, connector) in self.connectors.iter().enumerate() {
            for label in connector {
                if !seen.contains(label.as_str()) {
                    issues.push(ValidationIssue::UnknownConnectorLabel {
                        connector: ci,
                        label: label.clone(),
                    });
                }
                if !in_connector.insert(label.as_str()) {
                    issues.push(ValidationIssue::LabelInMultipleConnectors {
                        label: label.clone(),
                    });
                }
            }
        }
        ValidationReport { issues }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn links(&self) -> &[(usize, usize)] {
        &self.links
    }

    pub fn danglings(&self) -> &[Dangling] {
        &self.danglings
    }

    pub fn connectors(&self) -> &[Vec<String>] {
        &self.connectors
    }

    pub fn edge_count(&self) -> usize {
        self.links.len() + self.danglings.len()
    }

    /// Degree of a vertex: loops count twice, danglings once.
    pub fn degree(&self, v: usize) -> usize {
        self.incidence.get(v).map_or(0, |edges| edges.len())
    }

    /// Edges incident with `v` (ascending; a loop appears twice).
    pub fn edges_at(&self, v: usize) -> &[EdgeRef] {
        &self.incidence[v]
    }

    pub fn edge(&self, e: EdgeRef) -> Option<Edge<'_>> {
        if e.0 < self.links.len() {
            let (u, v) = self.links[e.0];
            Some(Edge::Link(u, v))
        } else {
            self.danglings
                .get(e.0 - self.links.len())
                .map(|d| Edge::Dangling(d.vertex, d.label.as_str()))
        }
    }

    pub fn is_link(&self, e: EdgeRef) -> bool {
        e.0 < self.links.len()
    }

    /// First link with the given endpoints, if any.
    pub fn edge_ref_of_link(&self, u: usize, v: usize) -> Option<EdgeRef> {
        let pair = if u <= v { (u, v) } else { (v, u) };
        self.links
            .binary_search(&pair)
            .ok()
            .map(|mut i| {
                while i > 0 && self.links[i - 1] == pair {
                    i -= 1;
                }
                EdgeRef(i)
            })
    }

    pub fn dangling_index(&self, label: &str) -> Option<usize> {
        self.danglings.iter().position(|d| d.label == label)
    }

    pub fn edge_ref_of_dangling(&self, index: usize) -> EdgeRef {
        EdgeRef(self.links.len() + index)
    }

    pub fn is_graph(&self) -> bool {
        self.danglings.is_empty() && self.connectors.is_empty()
    }

    pub fn has_loop(&self) -> bool {
        self.links.iter().any(|&(u, v)| u == v)
    }

    pub fn has_parallel_links(&self) -> bool {
        self.links.windows(2).any(|w| w[0] == w[1])
    }

    pub fn is_simple(&self) -> bool {
        !self.has_loop() && !self.has_parallel_links()
    }

    /// Cuts a link into a pair of dangling edges, each placed in its own
    /// width-1 connector appended after the existing ones. The dangling at
    /// the smaller endpoint is labelled `cut0`, the other `cut1`; if those
    /// labels are taken the lowest free even pair `cut2k`/`cut2k+1` is used.
    pub fn cut_edge(&self, e: EdgeRef) -> Result<Multipole, AlgebraError> {
        let (u, v) = match self.edge(e) {
            Some(Edge::Link(u, v)) => (u, v),
            Some(Edge::Dangling(..)) => return Err(AlgebraError::NotALink(e)),
            None => return Err(AlgebraError::NoSuchEdge(e)),
        };
        let (low, high) = {
            let mut base = 0usize;
            loop {
                let low = format!("cut{base}");
                let high = format!("cut{}", base + 1);
                if self.dangling_index(&low).is_none() && self.dangling_index(&high).is_none() {
                    break (low, high);
                }
                base += 2;
            }
        };
        let mut links = self.links.clone();
        links.remove(e.0);
        let mut danglings = self.danglings.clone();
        danglings.push(Dangling {
            vertex: u,
            label: low.clone(),
        });
        danglings.push(Dangling {
            vertex: v,
            label: high.clone(),
        });
        let mut connectors = self.connectors.clone();
        connectors.push(vec![low]);
        connectors.push(vec![high]);
        Ok(Multipole::new_unchecked(
            self.vertex_count,
            links,
            danglings,
            connectors,
        ))
    }

    /// Position-wise join: the i-th dangling of `self`'s connector `c1`
    /// fuses with the i-th dangling of `other`'s connector `c2` into a link.
    /// `other`'s vertices are appended after `self`'s. Consumed connectors
    /// disappear; the rest keep their order, `self`'s first.
    pub fn join(
        &self,
        c1: usize,
        other: &Multipole,
        c2: usize,
    ) -> Result<Multipole, AlgebraError> {
        let width = self
            .connectors
            .get(c1)
            .ok_or(AlgebraError::NoSuchConnector(c1))?
            .len();
        let identity: Vec<usize> = (0..width).collect();
        self.join_permuted(c1, other, c2, &identity)
    }

    /// Join with an explicit wiring: position `i` of `c1` fuses with
    /// position `permutation[i]` of `c2`. [`Multipole::join`] is the
    /// identity-permutation case.
    pub fn join_permuted(
        &self,
        c1: usize,
        other: &Multipole,
        c2: usize,
        permutation: &[usize],
    ) -> Result<Multipole, AlgebraError> {
        let left = self
            .connectors
            .get(c1)
            .ok_or(AlgebraError::NoSuchConnector(c1))?;
        let right = other
            .connectors
            .get(c2)
            .ok_or(AlgebraError::NoSuchConnector(c2))?;
        if left.len() != right.len() {
            return Err(AlgebraError::WidthMismatch {
                left: left.len(),
                right: right.len(),
            });
        }
        if permutation.len() != right.len()
            || (0..right.len()).any(|p| !permutation.contains(&p))
        {
            return Err(AlgebraError::BadPermutation);
        }
        let shift = self.vertex_count;
        let mut links = self.links.clone();
        links.extend(other.links.iter().map(|&(u, v)| (u + shift, v + shift)));
        let mut consumed_left = BTreeSet::new();
        let mut consumed_right = BTreeSet::new();
        let paired = left
            .iter()
            .zip(permutation.iter().map(|&p| &right[p]));
        for (la, lb) in paired {
            let da = self
                .dangling_index(la)
                .ok_or_else(|| AlgebraError::UnknownLabel(la.clone()))?;
            let db = other
                .dangling_index(lb)
                .ok_or_else(|| AlgebraError::UnknownLabel(lb.clone()))?;
            links.push((self.danglings[da].vertex, other.danglings[db].vertex + shift));
            consumed_left.insert(da);
            consumed_right.insert(db);
        }
        let mut danglings: Vec<Dangling> = self
            .danglings
            .iter()
            .enumerate()
            .filter(|(i, _)| !consumed_left.contains(i))
            .map(|(_, d)| d.clone())
            .collect();
        danglings.extend(
            other
                .danglings
                .iter()
                .enumerate()
                .filter(|(i, _)| !consumed_right.contains(i))
                .map(|(_, d)| Dangling {
                    vertex: d.vertex + shift,
                    label: d.label.clone(),
                }),
        );
        let mut seen = BTreeSet::new();
        for d in &danglings {
            if !seen.insert(d.label.as_str()) {
                return Err(AlgebraError::LabelClash(d.label.clone()));
            }
        }
        let mut connectors: Vec<Vec<String>> = self
            .connectors
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != c1)
            .map(|(_, c)| c.clone())
            .collect();
        connectors.extend(
            other
                .connectors
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != c2)
                .map(|(_, c)| c.clone()),
        );
        Ok(Multipole::new_unchecked(
            self.vertex_count + other.vertex_count,
            links,
            danglings,
            connectors,
        ))
    }

    /// As [`Multipole::join`] but fusing two connectors of the same
    /// multipole; closes a chain of blocks into a ring.
    pub fn join_self(&self, c1: usize, c2: usize) -> Result<Multipole, AlgebraError> {
        if c1 == c2 {
            return Err(AlgebraError::SameConnector);
        }
        let left = self
            .connectors
            .get(c1)
            .ok_or(AlgebraError::NoSuchConnector(c1))?;
        let right = self
            .connectors
            .get(c2)
            .ok_or(AlgebraError::NoSuchConnector(c2))?;
        if left.len() != right.len() {
            return Err(AlgebraError::WidthMismatch {
                left: left.len(),
                right: right.len(),
            });
        }
        let mut links = self.links.clone();
        let mut consumed = BTreeSet::new();
        for (la, lb) in left.iter().zip(right.iter()) {
            let da = self
                .dangling_index(la)
                .ok_or_else(|| AlgebraError::UnknownLabel(la.clone()))?;
            let db = self
                .dangling_index(lb)
                .ok_or_else(|| AlgebraError::UnknownLabel(lb.clone()))?;
            if da == db {
                // a dangling cannot fuse with itself
                return Err(AlgebraError::SameConnector);
            }
            links.push((self.danglings[da].vertex, self.danglings[db].vertex));
            consumed.insert(da);
            consumed.insert(db);
        }
        let danglings: Vec<Dangling> = self
            .danglings
            .iter()
            .enumerate()
            .filter(|(i, _)| !consumed.contains(i))
            .map(|(_, d)| d.clone())
            .collect();
        let connectors: Vec<Vec<String>> = self
            .connectors
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != c1 && i != c2)
            .map(|(_, c)| c.clone())
            .collect();
        Ok(Multipole::new_unchecked(
            self.vertex_count,
            links,
            danglings,
            connectors,
        ))
    }

    /// Disjoint union; `other`'s vertices are shifted. Dangling labels must
    /// stay unique across both operands.
    pub fn disjoint_union(&self, other: &Multipole) -> Result<Multipole, AlgebraError> {
        let shift = self.vertex_count;
        let mut links = self.links.clone();
        links.extend(other.links.iter().map(|&(u, v)| (u + shift, v + shift)));
        let mut danglings = self.danglings.clone();
        danglings.extend(other.danglings.iter().map(|d| Dangling {
            vertex: d.vertex + shift,
            label: d.label.clone(),
        }));
        let mut seen = BTreeSet::new();
        for d in &danglings {
            if !seen.insert(d.label.as_str()) {
                return Err(AlgebraError::LabelClash(d.label.clone()));
            }
        }
        let mut connectors = self.connectors.clone();
        connectors.extend(other.connectors.iter().cloned());
        Ok(Multipole::new_unchecked(
            self.vertex_count + other.vertex_count,
            links,
            danglings,
            connectors,
        ))
    }

    /// Returns a copy with every dangling label prefixed; connectors follow.
    pub fn relabeled(&self, prefix: &str) -> Multipole {
        let danglings = self
            .danglings
            .iter()
            .map(|d| Dangling {
                vertex: d.vertex,
                label: format!("{prefix}{}", d.label),
            })
            .collect();
        let connectors = self
            .connectors
            .iter()
            .map(|c| c.iter().map(|l| format!("{prefix}{l}")).collect())
            .collect();
        Multipole::new_unchecked(self.vertex_count, self.links.clone(), danglings, connectors)
    }

    /// Deletes a vertex together with its incident links and danglings.
    /// Higher vertex ids shift down by one. The neighbours lose degree, so
    /// the result generally fails validation.
    pub fn delete_vertex_raw(&self, v: usize) -> Result<Multipole, AlgebraError> {
        self.delete_vertex_inner(v, None)
    }

    /// Deletes a vertex, replacing each removed link by a dangling edge at
    /// the surviving endpoint (labels `{prefix}0`, `{prefix}1`, ...).
    pub fn delete_vertex_dangling(
        &self,
        v: usize,
        prefix: &str,
    ) -> Result<Multipole, AlgebraError> {
        self.delete_vertex_inner(v, Some(prefix))
    }

    fn delete_vertex_inner(
        &self,
        v: usize,
        prefix: Option<&str>,
    ) -> Result<Multipole, AlgebraError> {
        if v >= self.vertex_count {
            return Err(AlgebraError::NoSuchVertex(v));
        }
        let remap = |u: usize| if u > v { u - 1 } else { u };
        let mut links = Vec::new();
        let mut new_danglings = Vec::new();
        for &(a, b) in &self.links {
            match (a == v, b == v) {
                (false, false) => links.push((remap(a), remap(b))),
                (true, true) => {} // loop at v disappears
                (true, false) => new_danglings.push(remap(b)),
                (false, true) => new_danglings.push(remap(a)),
            }
        }
        let mut danglings: Vec<Dangling> = self
            .danglings
            .iter()
            .filter(|d| d.vertex != v)
            .map(|d| Dangling {
                vertex: remap(d.vertex),
                label: d.label.clone(),
            })
            .collect();
        let kept: BTreeSet<String> = danglings.iter().map(|d| d.label.clone()).collect();
        if let Some(prefix) = prefix {
            for (i, &u) in new_danglings.iter().enumerate() {
                let label = format!("{prefix}{i}");
                if kept.contains(&label) {
                    return Err(AlgebraError::LabelClash(label));
                }
                danglings.push(Dangling { vertex: u, label });
            }
        }
        let connectors = self
            .connectors
            .iter()
            .map(|c| c.iter().filter(|l| kept.contains(*l)).cloned().collect())
            .filter(|c: &Vec<String>| !c.is_empty())
            .collect();
        Ok(Multipole::new_unchecked(
            self.vertex_count - 1,
            links,
            danglings,
            connectors,
        ))
    }

    /// Restriction to a vertex subset: links leaving the subset become
    /// dangling edges (labels `b0`, `b1`, ... in link order), kept danglings
    /// survive, connectors are dropped. Vertices are relabelled to
    /// `0..keep.len()` following `keep`'s order.
    pub fn induced_with_danglings(&self, keep: &[usize]) -> Result<Multipole, AlgebraError> {
        let mut position = BTreeMap::new();
        for (i, &v) in keep.iter().enumerate() {
            if v >= self.vertex_count {
                return Err(AlgebraError::NoSuchVertex(v));
            }
            position.insert(v, i);
        }
        let mut links = Vec::new();
        let mut danglings = Vec::new();
        let mut next = 0;
        for &(a, b) in &self.links {
            match (position.get(&a), position.get(&b)) {
                (Some(&pa), Some(&pb)) => links.push((pa, pb)),
                (Some(&pa), None) => {
                    danglings.push(Dangling {
                        vertex: pa,
                        label: format!("b{next}"),
                    });
                    next += 1;
                }
                (None, Some(&pb)) => {
                    danglings.push(Dangling {
                        vertex: pb,
                        label: format!("b{next}"),
                    });
                    next += 1;
                }
                (None, None) => {}
            }
        }
        for d in &self.danglings {
            if let Some(&p) = position.get(&d.vertex) {
                danglings.push(Dangling {
                    vertex: p,
                    label: d.label.clone(),
                });
            }
        }
        Ok(Multipole::new_unchecked(
            keep.len(),
            links,
            danglings,
            Vec::new(),
        ))
    }

    /// Promotes to a graph; requires no danglings and all degrees 3.
    pub fn into_graph(self) -> Result<Graph, GraphError> {
        Graph::from_multipole(self)
    }
}

/// A cubic graph: a multipole with no dangling edges and no connectors.
/// Parallel edges and loops are representable; the family generators
/// reject them.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    inner: Multipole,
}

impl Graph {
    pub fn new(vertex_count: usize, links: Vec<(usize, usize)>) -> Result<Graph, GraphError> {
        Graph::from_multipole(Multipole::new_unchecked(
            vertex_count,
            links,
            Vec::new(),
            Vec::new(),
        ))
    }

    pub fn from_multipole(m: Multipole) -> Result<Graph, GraphError> {
        if !m.danglings.is_empty() {
            return Err(GraphError::HasDanglings(m.danglings.len()));
        }
        for &(u, v) in &m.links {
            if u >= m.vertex_count || v >= m.vertex_count {
                return Err(GraphError::Invalid(format!(
                    "link {u}-{v} has an endpoint out of range"
                )));
            }
        }
        for v in 0..m.vertex_count {
            let degree = m.degree(v);
            if degree != 3 {
                return Err(GraphError::NotCubic { vertex: v, degree });
            }
        }
        let inner = if m.connectors.is_empty() {
            m
        } else {
            Multipole::new_unchecked(m.vertex_count, m.links, Vec::new(), Vec::new())
        };
        Ok(Graph { inner })
    }

    pub fn as_multipole(&self) -> &Multipole {
        &self.inner
    }

    pub fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    pub fn links(&self) -> &[(usize, usize)] {
        self.inner.links()
    }

    pub fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.inner.degree(v)
    }

    pub fn edges_at(&self, v: usize) -> &[EdgeRef] {
        self.inner.edges_at(v)
    }

    pub fn edge(&self, e: EdgeRef) -> Option<Edge<'_>> {
        self.inner.edge(e)
    }

    pub fn edge_ref_of_link(&self, u: usize, v: usize) -> Option<EdgeRef> {
        self.inner.edge_ref_of_link(u, v)
    }

    pub fn is_simple(&self) -> bool {
        self.inner.is_simple()
    }

    pub fn cut_edge(&self, e: EdgeRef) -> Result<Multipole, AlgebraError> {
        self.inner.cut_edge(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{k4, petersen, pole_a, pole_b_default, pole_a_prime, pole_b_prime};
    use crate::structure::multipole_isomorphic;

    #[test]
    fn petersen_validates() {
        let p = petersen();
        assert!(p.as_multipole().validate().is_valid());
        assert_eq!(p.vertex_count(), 10);
        assert_eq!(p.edge_count(), 15);
    }

    #[test]
    fn deleting_a_vertex_breaks_cubicity() {
        let broken = petersen().as_multipole().delete_vertex_raw(0).unwrap();
        let report = broken.validate();
        assert!(!report.is_valid());
        let degree_two = report
            .issues
            .iter()
            .filter(|i| matches!(i, ValidationIssue::WrongDegree { degree: 2, .. }))
            .count();
        assert_eq!(degree_two, 3, "three neighbours dropped to degree 2");
    }

    #[test]
    fn pole_a_is_valid() {
        let a = pole_a();
        assert!(a.validate().is_valid());
    }

    #[test]
    fn handshake_identity_on_all_gadgets() {
        for m in [
            pole_a(),
            pole_b_default(),
            pole_a_prime(),
            pole_b_prime(),
            petersen().as_multipole().clone(),
            k4().as_multipole().clone(),
        ] {
            assert_eq!(
                3 * m.vertex_count(),
                2 * m.links().len() + m.danglings().len(),
                "handshake identity"
            );
        }
    }

    #[test]
    fn cut_edge_counts() {
        let p = petersen();
        let cut = p.cut_edge(EdgeRef(0)).unwrap();
        assert_eq!(cut.vertex_count(), 10);
        assert_eq!(cut.links().len(), 14);
        assert_eq!(cut.danglings().len(), 2);

        let cut4 = k4().cut_edge(EdgeRef(0)).unwrap();
        assert_eq!(cut4.vertex_count(), 4);
        assert_eq!(cut4.links().len(), 5);
        assert_eq!(cut4.danglings().len(), 2);
    }

    #[test]
    fn cut_then_rejoin_is_identity_up_to_iso() {
        for g in [petersen(), k4()] {
            let e = EdgeRef(2);
            let cut = g.cut_edge(e).unwrap();
            let back = cut.join_self(1, 0).unwrap();
            assert!(back.is_graph());
            assert!(multipole_isomorphic(&back, g.as_multipole()));
        }
    }

    #[test]
    fn join_of_two_k4_poles() {
        let b = pole_b_default();
        let joined = b.join(1, &b, 0).unwrap();
        assert_eq!(joined.vertex_count(), 8);
        assert_eq!(joined.links().len(), 11);
        assert_eq!(joined.danglings().len(), 2);
        assert_eq!(joined.connectors().len(), 2);
    }

    #[test]
    fn join_width_mismatch_is_an_error() {
        let a = pole_a();
        let bp = pole_b_prime();
        assert!(matches!(
            a.join(0, &bp, 0),
            Err(AlgebraError::WidthMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn permuted_joins_rewire_the_interface() {
        let b = pole_b_prime();
        let identity = b.join(1, &b, 0).unwrap();
        let swapped = b.join_permuted(1, &b, 0, &[1, 0]).unwrap();
        assert!(identity.validate().is_valid());
        assert!(swapped.validate().is_valid());
        assert_ne!(identity.links(), swapped.links());
        assert!(matches!(
            b.join_permuted(1, &b, 0, &[0, 0]),
            Err(AlgebraError::BadPermutation)
        ));
    }

    #[test]
    fn join_self_same_connector_is_an_error() {
        let a = pole_a();
        assert!(matches!(a.join_self(0, 0), Err(AlgebraError::SameConnector)));
    }

    #[test]
    fn cut_on_dangling_is_an_error() {
        let a = pole_a();
        let d = a.edge_ref_of_dangling(0);
        assert!(matches!(a.cut_edge(d), Err(AlgebraError::NotALink(_))));
    }

    #[test]
    fn join_then_cut_recovers_the_operands() {
        let a = pole_a();
        let b = pole_b_default();
        let joined = a.join(1, &b, 0).unwrap();
        // the fused link is the unique link with one endpoint in each copy
        let fused = joined
            .links()
            .iter()
            .position(|&(u, v)| u < 10 && v >= 10)
            .map(EdgeRef)
            .unwrap();
        let cut = joined.cut_edge(fused).unwrap();
        let both = a.relabeled("a.").disjoint_union(&b.relabeled("b.")).unwrap();
        assert!(multipole_isomorphic(&cut, &both));
    }
}
