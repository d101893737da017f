//! Structural analysis: connectivity, girth, shortest cycles, bridges,
//! cyclic edge connectivity, and isomorphism checking.
//!
//! Cyclic edge connectivity comes in two flavours. The oracle enumerates
//! every vertex bipartition whose sides both contain a cycle; that is the
//! definition itself, exact but limited to 26 vertices. The scalable
//! algorithm searches pairs of vertex-disjoint short cycles and separates
//! them with max-flow; it is accepted because it matches the oracle
//! everywhere the oracle runs.

use crate::multipole::{Edge, EdgeRef, Graph, Multipole};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use thiserror::Error;

/// Oracle limit: bipartitions are enumerated as bitmasks.
pub const ORACLE_VERTEX_LIMIT: usize = 26;

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum StructureError {
    #[error("graph has {0} vertices, oracle limit is {ORACLE_VERTEX_LIMIT}")]
    OracleBoundExceeded(usize),
    #[error("edge {0} is not a link")]
    NotALink(EdgeRef),
    #[error("edge {0} does not exist")]
    NoSuchEdge(EdgeRef),
}

/// Result of a cyclic edge connectivity computation.
///
/// Graphs without two vertex-disjoint cycles have no cycle-separating cut;
/// that outcome is a sentinel, not an error.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ConnectivityResult {
    Cut {
        value: usize,
        /// A cycle-separating cut of exactly `value` edges.
        cut: Vec<EdgeRef>,
        /// Vertex bipartition induced by the cut; both sides contain a cycle.
        sides: (Vec<usize>, Vec<usize>),
    },
    NoTwoDisjointCycles,
}

impl ConnectivityResult {
    /// Cut size, or `usize::MAX` as infinity for the sentinel.
    pub fn value_or_inf(&self) -> usize {
        match self {
            ConnectivityResult::Cut { value, .. } => *value,
            ConnectivityResult::NoTwoDisjointCycles => usize::MAX,
        }
    }
}

/// Component id per vertex, by BFS over links.
pub fn components(m: &Multipole) -> Vec<usize> {
    let n = m.vertex_count();
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = next;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &e in m.edges_at(v) {
                if let Some(Edge::Link(a, b)) = m.edge(e) {
                    let w = if a == v { b } else { a };
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
        }
        next += 1;
    }
    comp
}

pub fn is_connected(m: &Multipole) -> bool {
    m.vertex_count() == 0 || components(m).iter().all(|&c| c == 0)
}

/// Length of the shortest cycle through link `e`: BFS between its endpoints
/// avoiding `e` itself, plus one. `None` when `e` is a bridge. A loop yields
/// 1 and an edge with a parallel partner yields 2.
pub fn shortest_cycle_through(m: &Multipole, e: EdgeRef) -> Result<Option<usize>, StructureError> {
    let (u, v) = match m.edge(e) {
        Some(Edge::Link(u, v)) => (u, v),
        Some(Edge::Dangling(..)) => return Err(StructureError::NotALink(e)),
        None => return Err(StructureError::NoSuchEdge(e)),
    };
    if u == v {
        return Ok(Some(1));
    }
    let mut dist = vec![usize::MAX; m.vertex_count()];
    dist[u] = 0;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            return Ok(Some(dist[v] + 1));
        }
        for &f in m.edges_at(x) {
            if f == e {
                continue;
            }
            if let Some(Edge::Link(a, b)) = m.edge(f) {
                let y = if a == x { b } else { a };
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }
    Ok(None)
}

/// Girth of the link graph; `None` for forests. Loops count as cycles of
/// length 1, parallel edges as length 2.
pub fn girth(m: &Multipole) -> Option<usize> {
    let mut best: Option<usize> = None;
    for i in 0..m.links().len() {
        if let Ok(Some(len)) = shortest_cycle_through(m, EdgeRef(i)) {
            best = Some(best.map_or(len, |b| b.min(len)));
        }
    }
    best
}

/// 2-edge-connectivity of the link graph via DFS low-points. Parallel edges
/// are never bridges; dangling edges are ignored.
pub fn is_bridgeless(m: &Multipole) -> bool {
    let n = m.vertex_count();
    if n == 0 {
        return true;
    }
    let mut order = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut next = 0;
    // iterative DFS: (vertex, incoming link index, edge cursor)
    for root in 0..n {
        if order[root] != usize::MAX {
            continue;
        }
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        order[root] = next;
        low[root] = next;
        next += 1;
        while !stack.is_empty() {
            let top = stack.len() - 1;
            let (v, in_edge, cursor) = stack[top];
            if cursor >= m.edges_at(v).len() {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    if low[v] > order[p] && in_edge != usize::MAX {
                        return false; // the incoming link is a bridge
                    }
                    low[p] = low[p].min(low[v]);
                }
                continue;
            }
            stack[top].2 += 1;
            let e = m.edges_at(v)[cursor];
            if e.0 == in_edge {
                continue;
            }
            if let Some(Edge::Link(a, b)) = m.edge(e) {
                let w = if a == v { b } else { a };
                if w == v {
                    continue; // loop
                }
                if order[w] == usize::MAX {
                    order[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push((w, e.0, 0));
                } else {
                    low[v] = low[v].min(order[w]);
                }
            }
        }
    }
    true
}

/// Checks that removing `cut` splits the graph into parts such that at least
/// two distinct components each contain a cycle.
pub fn is_cycle_separating(g: &Graph, cut: &[EdgeRef]) -> bool {
    let m = g.as_multipole();
    let removed: BTreeSet<usize> = cut.iter().map(|e| e.0).collect();
    let n = g.vertex_count();
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = next;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &e in m.edges_at(v) {
                if removed.contains(&e.0) {
                    continue;
                }
                if let Some(Edge::Link(a, b)) = m.edge(e) {
                    let w = if a == v { b } else { a };
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
        }
        next += 1;
    }
    if next < 2 {
        return false;
    }
    // per component: cycle iff surviving edges >= vertices
    let mut vertices = vec![0usize; next];
    let mut edges = vec![0usize; next];
    for v in 0..n {
        vertices[comp[v]] += 1;
    }
    for (i, &(u, v)) in m.links().iter().enumerate() {
        if !removed.contains(&i) && comp[u] == comp[v] {
            edges[comp[u]] += 1;
        }
    }
    let cyclic = (0..next).filter(|&c| edges[c] >= vertices[c]).count();
    cyclic >= 2
}

/// Exhaustive cyclic edge connectivity: minimum crossing-edge count over all
/// vertex bipartitions whose two sides each contain a cycle. Exact by
/// definition; limited to [`ORACLE_VERTEX_LIMIT`] vertices.
pub fn cyclic_connectivity_oracle(g: &Graph) -> Result<ConnectivityResult, StructureError> {
    let n = g.vertex_count();
    if n > ORACLE_VERTEX_LIMIT {
        return Err(StructureError::OracleBoundExceeded(n));
    }
    if n < 2 {
        return Ok(ConnectivityResult::NoTwoDisjointCycles);
    }
    let links = g.links();
    let mut best: Option<(usize, u32)> = None;
    // vertex n-1 stays on the complement side, halving the enumeration
    let top: u32 = 1 << (n - 1);
    for mask in 1..top {
        let crossing = links
            .iter()
            .filter(|&&(u, v)| (mask >> u & 1) != (mask >> v & 1))
            .count();
        if let Some((b, _)) = best {
            if crossing >= b {
                continue;
            }
        }
        if side_has_cycle(g, mask, n) && side_has_cycle(g, !mask & ((1u32 << n) - 1), n) {
            best = Some((crossing, mask));
        }
    }
    match best {
        None => Ok(ConnectivityResult::NoTwoDisjointCycles),
        Some((value, mask)) => {
            let cut: Vec<EdgeRef> = links
                .iter()
                .enumerate()
                .filter(|&(_, &(u, v))| (mask >> u & 1) != (mask >> v & 1))
                .map(|(i, _)| EdgeRef(i))
                .collect();
            let side_a: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let side_b: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
            debug_assert_eq!(cut.len(), value);
            Ok(ConnectivityResult::Cut {
                value,
                cut,
                sides: (side_a, side_b),
            })
        }
    }
}

/// Does the subgraph induced by `mask` contain a cycle? True iff some
/// component has at least as many induced edges (with multiplicity, loops
/// included) as vertices.
fn side_has_cycle(g: &Graph, mask: u32, n: usize) -> bool {
    let m = g.as_multipole();
    let mut seen = 0u32;
    for start in 0..n {
        if mask >> start & 1 == 0 || seen >> start & 1 == 1 {
            continue;
        }
        let mut stack = vec![start];
        seen |= 1 << start;
        let mut vertices = 0usize;
        let mut edge_ends = 0usize;
        while let Some(v) = stack.pop() {
            vertices += 1;
            for &e in m.edges_at(v) {
                if let Some(Edge::Link(a, b)) = m.edge(e) {
                    let w = if a == v { b } else { a };
                    if mask >> w & 1 == 1 {
                        edge_ends += 1; // counts each induced edge twice, loops twice
                        if seen >> w & 1 == 0 {
                            seen |= 1 << w;
                            stack.push(w);
                        }
                    }
                }
            }
        }
        if edge_ends / 2 >= vertices {
            return true;
        }
    }
    false
}

/// Scalable cyclic edge connectivity: over pairs of vertex-disjoint cycles
/// drawn from the set of shortest cycles through each link, take the
/// minimum max-flow cut separating the two contracted cycles.
pub fn cyclic_edge_connectivity(g: &Graph) -> Result<ConnectivityResult, StructureError> {
    let m = g.as_multipole();
    let mut cycles: Vec<BTreeSet<usize>> = Vec::new();
    for i in 0..m.links().len() {
        for cycle in shortest_cycles_through(m, EdgeRef(i))? {
            if !cycles.contains(&cycle) {
                cycles.push(cycle);
            }
        }
    }
    let mut best: Option<(usize, Vec<EdgeRef>, Vec<bool>)> = None;
    for i in 0..cycles.len() {
        for j in (i + 1)..cycles.len() {
            if !cycles[i].is_disjoint(&cycles[j]) {
                continue;
            }
            let limit = best.as_ref().map(|(v, _, _)| *v);
            if let Some((value, cut, side)) = min_cut_between(g, &cycles[i], &cycles[j], limit) {
                if best.as_ref().is_none_or(|(b, _, _)| value < *b) {
                    best = Some((value, cut, side));
                }
            }
        }
    }
    match best {
        None => Ok(ConnectivityResult::NoTwoDisjointCycles),
        Some((value, cut, side)) => {
            let side_a: Vec<usize> = (0..g.vertex_count()).filter(|&v| side[v]).collect();
            let side_b: Vec<usize> = (0..g.vertex_count()).filter(|&v| !side[v]).collect();
            debug_assert!(is_cycle_separating(g, &cut));
            Ok(ConnectivityResult::Cut {
                value,
                cut,
                sides: (side_a, side_b),
            })
        }
    }
}

/// Vertex sets of every shortest cycle through `e`: all shortest paths
/// between its endpoints in the graph minus `e`, walked back through the
/// BFS level structure. Empty for bridges.
fn shortest_cycles_through(
    m: &Multipole,
    e: EdgeRef,
) -> Result<Vec<BTreeSet<usize>>, StructureError> {
    let (u, v) = match m.edge(e) {
        Some(Edge::Link(u, v)) => (u, v),
        Some(Edge::Dangling(..)) => return Err(StructureError::NotALink(e)),
        None => return Err(StructureError::NoSuchEdge(e)),
    };
    if u == v {
        return Ok(vec![BTreeSet::from([u])]);
    }
    let n = m.vertex_count();
    let mut dist = vec![usize::MAX; n];
    dist[u] = 0;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        for &f in m.edges_at(x) {
            if f == e {
                continue;
            }
            if let Some(Edge::Link(a, b)) = m.edge(f) {
                let y = if a == x { b } else { a };
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }
    if dist[v] == usize::MAX {
        return Ok(Vec::new());
    }
    // walk every strictly-descending path from v back to u
    let mut cycles = Vec::new();
    let mut path = vec![v];
    collect_descending_paths(m, e, &dist, u, v, &mut path, &mut cycles);
    Ok(cycles)
}

fn collect_descending_paths(
    m: &Multipole,
    e: EdgeRef,
    dist: &[usize],
    u: usize,
    current: usize,
    path: &mut Vec<usize>,
    cycles: &mut Vec<BTreeSet<usize>>,
) {
    if current == u {
        cycles.push(path.iter().copied().collect());
        return;
    }
    for &f in m.edges_at(current) {
        if f == e {
            continue;
        }
        if let Some(Edge::Link(a, b)) = m.edge(f) {
            let y = if a == current { b } else { a };
            if dist[y] != usize::MAX && dist[y] + 1 == dist[current] {
                path.push(y);
                collect_descending_paths(m, e, dist, u, y, path, cycles);
                path.pop();
            }
        }
    }
}

/// Unit-capacity max-flow between the contractions of two vertex sets.
/// Returns the cut value, its edges, and the source-side indicator, or
/// `None` when an early bound shows the cut cannot beat `limit`.
fn min_cut_between(
    g: &Graph,
    source_set: &BTreeSet<usize>,
    sink_set: &BTreeSet<usize>,
    limit: Option<usize>,
) -> Option<(usize, Vec<EdgeRef>, Vec<bool>)> {
    let n = g.vertex_count();
    // contracted node ids: 0 = source, 1 = sink, others 2..
    let mut node = vec![usize::MAX; n];
    let mut next = 2;
    for (v, slot) in node.iter_mut().enumerate() {
        *slot = if source_set.contains(&v) {
            0
        } else if sink_set.contains(&v) {
            1
        } else {
            let id = next;
            next += 1;
            id
        };
    }
    let mut net = FlowNetwork::new(next);
    for &(u, v) in g.links() {
        if node[u] != node[v] {
            net.add_undirected(node[u], node[v]);
        }
    }
    let flow = net.max_flow(0, 1, limit);
    if let Some(limit) = limit {
        if flow >= limit {
            return None;
        }
    }
    let reach = net.residual_reachable(0);
    let side: Vec<bool> = (0..n).map(|v| reach[node[v]]).collect();
    let cut: Vec<EdgeRef> = g
        .links()
        .iter()
        .enumerate()
        .filter(|&(_, &(u, v))| side[u] != side[v])
        .map(|(i, _)| EdgeRef(i))
        .collect();
    debug_assert_eq!(cut.len(), flow);
    Some((flow, cut, side))
}

/// Minimal Edmonds–Karp network with unit edges stored as residual pairs.
struct FlowNetwork {
    to: Vec<usize>,
    cap: Vec<u32>,
    adjacency: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(n: usize) -> Self {
        FlowNetwork {
            to: Vec::new(),
            cap: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    /// Undirected unit edge: both arcs start with capacity one and serve as
    /// each other's residual.
    fn add_undirected(&mut self, u: usize, v: usize) {
        let arc = self.to.len();
        self.to.push(v);
        self.cap.push(1);
        self.adjacency[u].push(arc);
        self.to.push(u);
        self.cap.push(1);
        self.adjacency[v].push(arc + 1);
    }

    fn max_flow(&mut self, s: usize, t: usize, stop_at: Option<usize>) -> usize {
        let mut flow = 0;
        loop {
            if let Some(cap) = stop_at {
                if flow >= cap {
                    return flow;
                }
            }
            let mut parent_arc = vec![usize::MAX; self.adjacency.len()];
            let mut seen = vec![false; self.adjacency.len()];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                if v == t {
                    break;
                }
                for &arc in &self.adjacency[v] {
                    let w = self.to[arc];
                    if !seen[w] && self.cap[arc] > 0 {
                        seen[w] = true;
                        parent_arc[w] = arc;
                        queue.push_back(w);
                    }
                }
            }
            if !seen[t] {
                return flow;
            }
            let mut v = t;
            while v != s {
                let arc = parent_arc[v];
                self.cap[arc] -= 1;
                self.cap[arc ^ 1] += 1;
                v = self.to[arc ^ 1];
            }
            flow += 1;
        }
    }

    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut reach = vec![false; self.adjacency.len()];
        reach[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &arc in &self.adjacency[v] {
                let w = self.to[arc];
                if !reach[w] && self.cap[arc] > 0 {
                    reach[w] = true;
                    queue.push_back(w);
                }
            }
        }
        reach
    }
}

/// Exact graph isomorphism for small multigraphs: colour refinement for
/// invariants, then backtracking over refinement classes.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    multigraphs_isomorphic(
        a.vertex_count(),
        &multiplicity(a.as_multipole()),
        b.vertex_count(),
        &multiplicity(b.as_multipole()),
    )
}

/// Multipole isomorphism: dangling edges become pendant vertices (labels and
/// connector grouping are ignored), then plain graph isomorphism.
pub fn multipole_isomorphic(a: &Multipole, b: &Multipole) -> bool {
    let (na, adj_a) = augmented(a);
    let (nb, adj_b) = augmented(b);
    multigraphs_isomorphic(na, &adj_a, nb, &adj_b)
}

type Adjacency = Vec<BTreeMap<usize, usize>>;

fn multiplicity(m: &Multipole) -> Adjacency {
    let mut adj: Adjacency = vec![BTreeMap::new(); m.vertex_count()];
    for &(u, v) in m.links() {
        *adj[u].entry(v).or_insert(0) += 1;
        if u != v {
            *adj[v].entry(u).or_insert(0) += 1;
        }
    }
    adj
}

fn augmented(m: &Multipole) -> (usize, Adjacency) {
    let n = m.vertex_count();
    let total = n + m.danglings().len();
    let mut adj: Adjacency = vec![BTreeMap::new(); total];
    for &(u, v) in m.links() {
        *adj[u].entry(v).or_insert(0) += 1;
        if u != v {
            *adj[v].entry(u).or_insert(0) += 1;
        }
    }
    for (i, d) in m.danglings().iter().enumerate() {
        let pendant = n + i;
        *adj[d.vertex].entry(pendant).or_insert(0) += 1;
        *adj[pendant].entry(d.vertex).or_insert(0) += 1;
    }
    (total, adj)
}

fn multigraphs_isomorphic(na: usize, a: &Adjacency, nb: usize, b: &Adjacency) -> bool {
    if na != nb {
        return false;
    }
    if na == 0 {
        return true;
    }
    let colors_a = refine(na, a);
    let colors_b = refine(nb, b);
    let mut histo_a: BTreeMap<u64, usize> = BTreeMap::new();
    let mut histo_b: BTreeMap<u64, usize> = BTreeMap::new();
    for &c in &colors_a {
        *histo_a.entry(c).or_insert(0) += 1;
    }
    for &c in &colors_b {
        *histo_b.entry(c).or_insert(0) += 1;
    }
    if histo_a != histo_b {
        return false;
    }
    // map vertices of `a` in order of rarest colour class first
    let mut order: Vec<usize> = (0..na).collect();
    order.sort_by_key(|&v| (histo_a[&colors_a[v]], colors_a[v], v));
    let mut mapping = vec![usize::MAX; na];
    let mut used = vec![false; nb];
    backtrack(a, b, &colors_a, &colors_b, &order, 0, &mut mapping, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    a: &Adjacency,
    b: &Adjacency,
    colors_a: &[u64],
    colors_b: &[u64],
    order: &[usize],
    depth: usize,
    mapping: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    'candidates: for w in 0..b.len() {
        if used[w] || colors_b[w] != colors_a[v] {
            continue;
        }
        if a[v].get(&v).copied().unwrap_or(0) != b[w].get(&w).copied().unwrap_or(0) {
            continue; // loop multiplicity
        }
        for (&x, &mult) in &a[v] {
            if x == v {
                continue;
            }
            if mapping[x] != usize::MAX && b[w].get(&mapping[x]).copied().unwrap_or(0) != mult {
                continue 'candidates;
            }
        }
        // reverse direction: mapped neighbours of w must be neighbours of v
        for (&y, &mult) in &b[w] {
            if y == w {
                continue;
            }
            if let Some(x) = mapping.iter().position(|&img| img == y) {
                if a[v].get(&x).copied().unwrap_or(0) != mult {
                    continue 'candidates;
                }
            }
        }
        mapping[v] = w;
        used[w] = true;
        if backtrack(a, b, colors_a, colors_b, order, depth + 1, mapping, used) {
            return true;
        }
        mapping[v] = usize::MAX;
        used[w] = false;
    }
    false
}

/// Colour refinement (1-WL) with multiplicities; stable colouring hashes.
fn refine(n: usize, adj: &Adjacency) -> Vec<u64> {
    let mut colors: Vec<u64> = (0..n)
        .map(|v| {
            let degree: usize = adj[v].values().sum::<usize>()
                + adj[v].get(&v).copied().unwrap_or(0); // loops count twice
            let loops = adj[v].get(&v).copied().unwrap_or(0);
            hash_pair(degree as u64, loops as u64)
        })
        .collect();
    for _ in 0..n {
        let mut next = Vec::with_capacity(n);
        for v in 0..n {
            let mut signature: Vec<(u64, usize)> = adj[v]
                .iter()
                .map(|(&w, &mult)| (colors[w], mult))
                .collect();
            signature.sort_unstable();
            let mut h = colors[v];
            for (c, mult) in signature {
                h = hash_pair(h, hash_pair(c, mult as u64));
            }
            next.push(h);
        }
        if class_count(&next) == class_count(&colors) {
            colors = next;
            break;
        }
        colors = next;
    }
    colors
}

fn class_count(colors: &[u64]) -> usize {
    colors.iter().collect::<BTreeSet<_>>().len()
}

fn hash_pair(a: u64, b: u64) -> u64 {
    // FNV-style mixing; only needs to be deterministic
    let mut h = 0xcbf29ce484222325u64;
    for byte in a.to_le_bytes().into_iter().chain(b.to_le_bytes()) {
        h ^= byte as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{k4, petersen, prism};
    use crate::multipole::Graph;

    /// Two K4's, one subdivided edge each, joined by a bridge between the
    /// two degree-2 vertices.
    fn bridged_cubic() -> Graph {
        let links = vec![
            (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4),
            (5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 9), (8, 9),
            (4, 9),
        ];
        Graph::new(10, links).unwrap()
    }

    #[test]
    fn girths() {
        assert_eq!(girth(petersen().as_multipole()), Some(5));
        assert_eq!(girth(k4().as_multipole()), Some(3));
        assert_eq!(girth(prism().as_multipole()), Some(3));
    }

    #[test]
    fn shortest_cycle_through_every_petersen_edge_is_five() {
        let p = petersen();
        for i in 0..15 {
            assert_eq!(
                shortest_cycle_through(p.as_multipole(), EdgeRef(i)).unwrap(),
                Some(5)
            );
        }
    }

    #[test]
    fn bridge_has_no_cycle() {
        let g = bridged_cubic();
        let bridge = g.edge_ref_of_link(4, 9).unwrap();
        assert_eq!(shortest_cycle_through(g.as_multipole(), bridge).unwrap(), None);
        assert!(!is_bridgeless(g.as_multipole()));
        assert!(is_bridgeless(petersen().as_multipole()));
    }

    #[test]
    fn parallel_edges_are_never_bridges() {
        // two vertices joined by a triple edge
        let g = Graph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap();
        assert!(is_bridgeless(g.as_multipole()));
        assert_eq!(girth(g.as_multipole()), Some(2));
        assert_eq!(
            shortest_cycle_through(g.as_multipole(), EdgeRef(0)).unwrap(),
            Some(2)
        );
    }

    #[test]
    fn oracle_on_small_graphs() {
        assert_eq!(
            cyclic_connectivity_oracle(&petersen()).unwrap().value_or_inf(),
            5
        );
        assert_eq!(
            cyclic_connectivity_oracle(&k4()).unwrap(),
            ConnectivityResult::NoTwoDisjointCycles
        );
        assert_eq!(
            cyclic_connectivity_oracle(&prism()).unwrap().value_or_inf(),
            3
        );
    }

    #[test]
    fn oracle_witness_is_cycle_separating() {
        let g = prism();
        match cyclic_connectivity_oracle(&g).unwrap() {
            ConnectivityResult::Cut { value, cut, .. } => {
                assert_eq!(value, cut.len());
                assert!(is_cycle_separating(&g, &cut));
            }
            ConnectivityResult::NoTwoDisjointCycles => panic!("prism has disjoint triangles"),
        }
    }

    #[test]
    fn algorithm_matches_oracle_on_basics() {
        for g in [petersen(), prism(), k4(), bridged_cubic()] {
            let oracle = cyclic_connectivity_oracle(&g).unwrap();
            let scalable = cyclic_edge_connectivity(&g).unwrap();
            assert_eq!(oracle.value_or_inf(), scalable.value_or_inf());
        }
    }

    #[test]
    fn oracle_rejects_large_graphs() {
        use crate::generators::{build_family, FamilyKind, FamilySpec};
        let g = build_family(&FamilySpec::new(FamilyKind::Cc4, 1, 1).unwrap()).unwrap();
        assert_eq!(g.vertex_count(), 28);
        assert!(matches!(
            cyclic_connectivity_oracle(&g),
            Err(StructureError::OracleBoundExceeded(28))
        ));
        // the scalable algorithm handles it
        assert_eq!(cyclic_edge_connectivity(&g).unwrap().value_or_inf(), 4);
    }

    #[test]
    fn petersen_is_isomorphic_to_a_relabelling() {
        let p = petersen();
        // relabel via v -> (v * 3) mod 10 (a permutation)
        let relinked: Vec<(usize, usize)> = p
            .links()
            .iter()
            .map(|&(u, v)| ((u * 3) % 10, (v * 3) % 10))
            .collect();
        let q = Graph::new(10, relinked).unwrap();
        assert!(are_isomorphic(&p, &q));
    }

    #[test]
    fn petersen_is_not_prism_like() {
        let p = petersen();
        assert!(!are_isomorphic(&p, &bridged_cubic()));
    }
}
