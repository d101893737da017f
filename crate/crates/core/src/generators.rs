//! Generators for every gadget and graph family used by the toolkit:
//! Petersen and K4, the 2-poles A and B cut from them, the Blanuša block
//! and its (2,2)-pole arrangements A' and B', circular ring families, the
//! I-extension, and a corpus of all small connected cubic graphs.
//!
//! Gadget constructors run verification gates at first use (cached
//! afterwards) and panic loudly if a gate fails: the gates, not the literal
//! edge lists, are what certify the constructions.

use crate::matching::is_3_edge_colorable;
use crate::multipole::{AlgebraError, Dangling, EdgeRef, Graph, Multipole};
use crate::structure::{girth, is_bridgeless, is_connected, multipole_isomorphic};
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum GeneratorError {
    #[error("base graph is not 3-edge-colorable")]
    NotThreeEdgeColorable,
    #[error("invalid family description: {0}")]
    InvalidFamilySpec(String),
    #[error("fraction {p}/{q} outside [{lo_num}/{lo_den}, 1)")]
    FractionOutOfRange {
        p: u64,
        q: u64,
        lo_num: u64,
        lo_den: u64,
    },
    #[error("edge {0} is not a link")]
    NotALink(EdgeRef),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Petersen graph in the standard labelling: outer cycle 0-4, spokes
/// i-(i+5), inner edges (5+i)-(5+((i+2) mod 5)). 15 edges, girth 5.
pub fn petersen() -> Graph {
    static CACHE: OnceLock<Graph> = OnceLock::new();
    CACHE
        .get_or_init(|| {
            let mut links = Vec::with_capacity(15);
            for i in 0..5 {
                links.push((i, (i + 1) % 5));
                links.push((i, i + 5));
                links.push((5 + i, 5 + (i + 2) % 5));
            }
            let g = Graph::new(10, links).expect("Petersen graph is cubic");
            assert_eq!(g.edge_count(), 15);
            assert_eq!(girth(g.as_multipole()), Some(5));
            g
        })
        .clone()
}

/// Complete graph on four vertices.
pub fn k4() -> Graph {
    Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        .expect("K4 is cubic")
}

/// Triangular prism: two triangles joined by a matching.
pub fn prism() -> Graph {
    Graph::new(6, vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
        .expect("prism is cubic")
}

/// The 2-pole A: Petersen with the canonical edge 0-1 cut into danglings
/// `cut0`@0 and `cut1`@1, each in its own width-1 connector. Edge choice is
/// immaterial because Petersen is edge-transitive.
pub fn pole_a() -> Multipole {
    static CACHE: OnceLock<Multipole> = OnceLock::new();
    CACHE
        .get_or_init(|| {
            let p = petersen();
            let e = p.edge_ref_of_link(0, 1).expect("0-1 is a Petersen edge");
            let a = p.cut_edge(e).expect("cutting a link");
            assert_eq!(a.links().len(), 14);
            assert_eq!(a.danglings().len(), 2);
            assert!(a.validate().is_valid());
            a
        })
        .clone()
}

/// The 2-pole B cut from a 3-edge-colorable cubic graph.
pub fn pole_b(g: &Graph, e: EdgeRef) -> Result<Multipole, GeneratorError> {
    if !g.as_multipole().is_link(e) {
        return Err(GeneratorError::NotALink(e));
    }
    if !is_3_edge_colorable(g.as_multipole()) {
        return Err(GeneratorError::NotThreeEdgeColorable);
    }
    Ok(g.cut_edge(e)?)
}

/// Default B: K4 with its first edge cut. 5 links, 2 danglings.
pub fn pole_b_default() -> Multipole {
    static CACHE: OnceLock<Multipole> = OnceLock::new();
    CACHE
        .get_or_init(|| {
            let b = pole_b(&k4(), EdgeRef(0)).expect("K4 is 3-edge-colorable");
            assert_eq!(b.links().len(), 5);
            b
        })
        .clone()
}

/// Blanuša block in canonical form: 8-cycle u0..u7 plus chords u1-u5 and
/// u3-u7, danglings f1..f4 at u0, u2, u4, u6 in cycle order. Verified
/// isomorphic to Petersen minus two adjacent vertices.
pub fn blanusa_block() -> Multipole {
    static CACHE: OnceLock<Multipole> = OnceLock::new();
    CACHE
        .get_or_init(|| {
            let mut links = Vec::new();
            for i in 0..8 {
                links.push((i, (i + 1) % 8));
            }
            links.push((1, 5));
            links.push((3, 7));
            let danglings = [(0, "f1"), (2, "f2"), (4, "f3"), (6, "f4")]
                .into_iter()
                .map(|(v, l)| Dangling { vertex: v, label: l.to_string() })
                .collect();
            let block = Multipole::new(8, links, danglings, Vec::new())
                .expect("Blanuša block is a valid multipole");

            // deletion oracle: remove the adjacent vertices 0 and 1 from
            // Petersen, replacing lost links by danglings
            let deleted = petersen()
                .as_multipole()
                .delete_vertex_dangling(1, "x")
                .and_then(|m| m.delete_vertex_dangling(0, "y"))
                .expect("deleting two vertices");
            assert!(
                multipole_isomorphic(&block, &deleted),
                "Blanuša block gate: canonical form must match Petersen minus two adjacent vertices"
            );
            block
        })
        .clone()
}

/// The (2,2)-pole B': Blanuša block with connectors (f1,f4) and (f3,f2).
pub fn pole_b_prime() -> Multipole {
    static CACHE: OnceLock<Multipole> = OnceLock::new();
    CACHE
        .get_or_init(|| {
            let block = blanusa_block();
            let connectors = vec![
                vec!["f1".to_string(), "f4".to_string()],
                vec!["f3".to_string(), "f2".to_string()],
            ];
            let b = Multipole::new_unchecked(
                block.vertex_count(),
                block.links().to_vec(),
                block.danglings().to_vec(),
                connectors,
            );
            assert!(b.validate().is_valid());
            b
        })
        .clone()
}

/// The (2,2)-pole A': two Blanuša blocks H1 (vertices 2..9) and H2
/// (10..17) wired through four extra vertices 0, 1, 18, 19. Danglings sit
/// at v1, v6 (first connector, in this order) and v18, v19 (second).
///
/// The constructor gates the wiring: cubic, connected, girth 5 with the
/// 5-cycle v2 v3 v7 v8 v9 present, both H-blocks isomorphic to the Blanuša
/// block, and not 3-edge-colorable. Construction panics if any gate fails.
pub fn pole_a_prime() -> Multipole {
    static CACHE: OnceLock<Multipole> = OnceLock::new();
    CACHE
        .get_or_init(|| {
            let mut links = Vec::new();
            // H1: 8-cycle v2..v9 with chords v3-v7, v5-v9
            let h1_cycle = [2, 3, 4, 5, 6, 7, 8, 9];
            for i in 0..8 {
                links.push((h1_cycle[i], h1_cycle[(i + 1) % 8]));
            }
            links.push((3, 7));
            links.push((5, 9));
            // H2: 8-cycle v10..v17 with chords v11-v15, v13-v17
            let h2_cycle = [10, 11, 12, 13, 14, 15, 16, 17];
            for i in 0..8 {
                links.push((h2_cycle[i], h2_cycle[(i + 1) % 8]));
            }
            links.push((11, 15));
            links.push((13, 17));
            // junction
            links.extend([
                (0, 1),
                (0, 4),
                (0, 14),
                (1, 2),
                (8, 10),
                (18, 19),
                (12, 19),
                (16, 18),
            ]);
            let danglings = [(1, "d1"), (6, "d6"), (18, "d18"), (19, "d19")]
                .into_iter()
                .map(|(v, l)| Dangling { vertex: v, label: l.to_string() })
                .collect();
            let connectors = vec![
                vec!["d1".to_string(), "d6".to_string()],
                vec!["d18".to_string(), "d19".to_string()],
            ];
            let a = Multipole::new(20, links, danglings, connectors)
                .expect("A' gate: must be a valid cubic multipole");
            assert_eq!(a.links().len(), 28, "A' gate: 28 links");
            assert!(is_connected(&a), "A' gate: connected");
            assert_eq!(girth(&a), Some(5), "A' gate: girth 5");
            for (u, v) in [(2, 3), (3, 7), (7, 8), (8, 9), (2, 9)] {
                assert!(
                    a.edge_ref_of_link(u, v).is_some(),
                    "A' gate: 5-cycle v2 v3 v7 v8 v9 must be present"
                );
            }
            let block = blanusa_block();
            let h1 = a.induced_with_danglings(&h1_cycle).expect("H1 restriction");
            let h2 = a.induced_with_danglings(&h2_cycle).expect("H2 restriction");
            assert!(
                multipole_isomorphic(&h1, &block),
                "A' gate: H1 must be a Blanuša block"
            );
            assert!(
                multipole_isomorphic(&h2, &block),
                "A' gate: H2 must be a Blanuša block"
            );
            assert!(
                !is_3_edge_colorable(&a),
                "A' gate: must not be 3-edge-colorable"
            );
            a
        })
        .clone()
}

/// Which family: ring of A/B (cyclic connectivity 2) or A'/B' (cyclic
/// connectivity 4).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyKind {
    Cc2,
    Cc4,
}

impl FamilyKind {
    pub fn k(self) -> u32 {
        match self {
            FamilyKind::Cc2 => 2,
            FamilyKind::Cc4 => 4,
        }
    }
}

/// Ring family description: `a` copies of the uncolorable block and `b`
/// copies of the diluting block arranged around a circle following `order`,
/// the whole pattern repeated `scale` times.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub a: u64,
    pub b: u64,
    pub order: String,
    pub scale: u64,
}

impl FamilySpec {
    /// Default arrangement: all A blocks first, then all B blocks.
    pub fn new(kind: FamilyKind, a: u64, b: u64) -> Result<FamilySpec, GeneratorError> {
        let order: String = "A".repeat(a as usize) + &"B".repeat(b as usize);
        FamilySpec::with_order(kind, a, b, order, 1)
    }

    pub fn with_order(
        kind: FamilyKind,
        a: u64,
        b: u64,
        order: String,
        scale: u64,
    ) -> Result<FamilySpec, GeneratorError> {
        let spec = FamilySpec { kind, a, b, order, scale };
        spec.check()?;
        Ok(spec)
    }

    pub fn scaled(mut self, scale: u64) -> Result<FamilySpec, GeneratorError> {
        self.scale = scale;
        self.check()?;
        Ok(self)
    }

    fn check(&self) -> Result<(), GeneratorError> {
        if self.a < 1 {
            return Err(GeneratorError::InvalidFamilySpec(
                "need at least one A block".into(),
            ));
        }
        if self.scale < 1 {
            return Err(GeneratorError::InvalidFamilySpec("scale must be positive".into()));
        }
        let a_count = self.order.chars().filter(|&c| c == 'A').count() as u64;
        let b_count = self.order.chars().filter(|&c| c == 'B').count() as u64;
        if a_count + b_count != self.order.chars().count() as u64 {
            return Err(GeneratorError::InvalidFamilySpec(
                "order may only contain 'A' and 'B'".into(),
            ));
        }
        if a_count != self.a || b_count != self.b {
            return Err(GeneratorError::InvalidFamilySpec(format!(
                "order {:?} does not match a={}, b={}",
                self.order, self.a, self.b
            )));
        }
        Ok(())
    }

    /// Block pattern repeated `scale` times.
    pub fn block_sequence(&self) -> Vec<char> {
        let mut seq = Vec::new();
        for _ in 0..self.scale {
            seq.extend(self.order.chars());
        }
        seq
    }

    /// Edge count of the generated graph.
    pub fn expected_edges(&self) -> u64 {
        let (a, b) = (self.a * self.scale, self.b * self.scale);
        match self.kind {
            FamilyKind::Cc2 => 15 * a + 6 * b,
            FamilyKind::Cc4 => 30 * a + 12 * b,
        }
    }

    /// The closed-form cover fraction as (covered, total), unreduced.
    pub fn expected_m3(&self) -> (u64, u64) {
        let (a, b) = (self.a * self.scale, self.b * self.scale);
        match self.kind {
            FamilyKind::Cc2 => (12 * a + 6 * b, 15 * a + 6 * b),
            FamilyKind::Cc4 => (27 * a + 12 * b, 30 * a + 12 * b),
        }
    }
}

/// Target fraction p/q for family generation (not necessarily reduced).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FractionTarget {
    pub p: u64,
    pub q: u64,
}

/// Block counts hitting m3 = p/q exactly: (2q-2p, 5p-4q) for the cc2 family
/// on [4/5, 1), (4q-4p, 10p-9q) for the cc4 family on [9/10, 1).
pub fn params_for_fraction(kind: FamilyKind, t: FractionTarget) -> Result<(u64, u64), GeneratorError> {
    let FractionTarget { p, q } = t;
    let (lo_num, lo_den) = match kind {
        FamilyKind::Cc2 => (4, 5),
        FamilyKind::Cc4 => (9, 10),
    };
    if p == 0 || q == 0 || p >= q || lo_den * p < lo_num * q {
        return Err(GeneratorError::FractionOutOfRange { p, q, lo_num, lo_den });
    }
    Ok(match kind {
        FamilyKind::Cc2 => (2 * q - 2 * p, 5 * p - 4 * q),
        FamilyKind::Cc4 => (4 * q - 4 * p, 10 * p - 9 * q),
    })
}

/// One block of a ring: a multipole and which of its connectors face the
/// previous (`left`) and next (`right`) block.
#[derive(Clone, Debug)]
pub struct RingBlock {
    pub multipole: Multipole,
    pub left: usize,
    pub right: usize,
}

impl RingBlock {
    pub fn new(multipole: Multipole, left: usize, right: usize) -> RingBlock {
        RingBlock { multipole, left, right }
    }

    pub fn interface_width(&self) -> usize {
        self.multipole.connectors()[self.right].len()
    }
}

/// Where each block landed in the assembled ring.
#[derive(Clone, Debug)]
pub struct RingLayout {
    /// Vertex offset of each block in the ring graph.
    pub offsets: Vec<usize>,
    /// `interfaces[i][p]`: global endpoints of the link fusing position `p`
    /// of block i's right connector with position `p` of block (i+1)'s left.
    pub interfaces: Vec<Vec<(usize, usize)>>,
}

/// A family instance with its assembly layout kept for block-wise solvers.
#[derive(Clone, Debug)]
pub struct RingAssembly {
    pub graph: Graph,
    pub layout: RingLayout,
    pub blocks: Vec<RingBlock>,
}

/// Joins the blocks into a circle: block i's right connector fuses
/// position-wise with block (i+1 mod n)'s left connector.
pub fn assemble_ring(blocks: Vec<RingBlock>) -> Result<RingAssembly, GeneratorError> {
    if blocks.is_empty() {
        return Err(GeneratorError::InvalidFamilySpec("empty ring".into()));
    }
    for (i, block) in blocks.iter().enumerate() {
        let connectors = block.multipole.connectors();
        if connectors.len() != 2 {
            return Err(GeneratorError::InvalidFamilySpec(format!(
                "ring block {i} must have exactly two connectors"
            )));
        }
        if block.left == block.right
            || block.left >= connectors.len()
            || block.right >= connectors.len()
        {
            return Err(GeneratorError::InvalidFamilySpec(format!(
                "block {i} has bad connector indices"
            )));
        }
        let next = &blocks[(i + 1) % blocks.len()];
        let right_width = connectors[block.right].len();
        let left_width = next.multipole.connectors()[next.left].len();
        if right_width != left_width {
            return Err(GeneratorError::Algebra(AlgebraError::WidthMismatch {
                left: right_width,
                right: left_width,
            }));
        }
    }

    let n = blocks.len();
    let mut offsets = Vec::with_capacity(n);
    let mut total = 0;
    for block in &blocks {
        offsets.push(total);
        total += block.multipole.vertex_count();
    }

    let ring = if n == 1 {
        blocks[0]
            .multipole
            .join_self(blocks[0].right, blocks[0].left)?
    } else {
        // chain keeps connector 0 = open left end, connector 1 = open right end
        let mut chain = blocks[0].multipole.clone();
        let mut chain_left = blocks[0].left;
        let mut chain_right = blocks[0].right;
        for block in &blocks[1..] {
            chain = chain.join(chain_right, &block.multipole, block.left)?;
            chain_left = if chain_left > chain_right { chain_left - 1 } else { chain_left };
            chain_right = chain.connectors().len() - 1;
        }
        chain.join_self(chain_right, chain_left)?
    };
    let graph = Graph::from_multipole(ring).map_err(|e| {
        GeneratorError::InvalidFamilySpec(format!("ring did not close into a cubic graph: {e}"))
    })?;

    // derive and verify the interface links
    let mut interfaces = Vec::with_capacity(n);
    for (i, block) in blocks.iter().enumerate() {
        let next_index = (i + 1) % n;
        let next = &blocks[next_index];
        let right = &block.multipole.connectors()[block.right];
        let left = &next.multipole.connectors()[next.left];
        let mut fused = Vec::with_capacity(right.len());
        for (la, lb) in right.iter().zip(left.iter()) {
            let da = block.multipole.dangling_index(la).expect("validated label");
            let db = next.multipole.dangling_index(lb).expect("validated label");
            let u = block.multipole.danglings()[da].vertex + offsets[i];
            let v = next.multipole.danglings()[db].vertex + offsets[next_index];
            assert!(
                graph.edge_ref_of_link(u, v).is_some(),
                "assembled ring must contain the fused link {u}-{v}"
            );
            fused.push((u, v));
        }
        interfaces.push(fused);
    }
    Ok(RingAssembly {
        graph,
        layout: RingLayout { offsets, interfaces },
        blocks,
    })
}

/// Gadget blocks for one family flavour.
fn gadget(kind: FamilyKind, which: char) -> Multipole {
    match (kind, which) {
        (FamilyKind::Cc2, 'A') => pole_a(),
        (FamilyKind::Cc2, 'B') => pole_b_default(),
        (FamilyKind::Cc4, 'A') => pole_a_prime(),
        (FamilyKind::Cc4, 'B') => pole_b_prime(),
        _ => unreachable!("validated order string"),
    }
}

/// Builds the ring family together with its layout.
pub fn build_family_assembly(spec: &FamilySpec) -> Result<RingAssembly, GeneratorError> {
    spec.check()?;
    let blocks: Vec<RingBlock> = spec
        .block_sequence()
        .into_iter()
        .map(|which| RingBlock::new(gadget(spec.kind, which), 0, 1))
        .collect();
    let assembly = assemble_ring(blocks)?;
    let graph = &assembly.graph;
    assert_eq!(graph.edge_count() as u64, spec.expected_edges());
    assert!(graph.is_simple(), "family graphs are simple");
    assert!(is_connected(graph.as_multipole()), "family graphs are connected");
    assert!(is_bridgeless(graph.as_multipole()), "family graphs are bridgeless");
    Ok(assembly)
}

/// Builds the ring family graph described by `spec`.
pub fn build_family(spec: &FamilySpec) -> Result<Graph, GeneratorError> {
    Ok(build_family_assembly(spec)?.graph)
}

/// I-extension: subdivide links `e1` and `e2` (possibly the same link) with
/// new vertices and join them by a new edge. Picking the same link twice
/// produces a parallel edge. Returns the extended graph and the new edge.
pub fn i_extension(g: &Graph, e1: EdgeRef, e2: EdgeRef) -> Result<(Graph, EdgeRef), GeneratorError> {
    let m = g.as_multipole();
    for e in [e1, e2] {
        if !m.is_link(e) {
            return Err(GeneratorError::NotALink(e));
        }
    }
    let n = g.vertex_count();
    let (x, y) = (n, n + 1);
    let mut links: Vec<(usize, usize)> = Vec::with_capacity(g.links().len() + 3);
    for (i, &(u, v)) in g.links().iter().enumerate() {
        if i != e1.0 && i != e2.0 {
            links.push((u, v));
        }
    }
    if e1 == e2 {
        // a-x-y-b path plus the x-y bridge edge: parallel pair x-y
        let (a, b) = g.links()[e1.0];
        links.extend([(a, x), (x, y), (y, b)]);
    } else {
        let (a1, b1) = g.links()[e1.0];
        let (a2, b2) = g.links()[e2.0];
        links.extend([(a1, x), (x, b1), (a2, y), (y, b2)]);
    }
    links.push((x, y));
    let extended = Graph::new(n + 2, links).map_err(|e| {
        GeneratorError::InvalidFamilySpec(format!("extension is not cubic: {e}"))
    })?;
    let new_edge = extended
        .edge_ref_of_link(x, y)
        .expect("the added edge exists");
    Ok((extended, new_edge))
}

/// All connected simple cubic graphs on `n` vertices, one per isomorphism
/// class. Backtracking over adjacency rows in a breadth-first labelling
/// (each new vertex must be introduced by a smaller one), deduplicated by
/// exact isomorphism.
pub fn small_cubic_graphs(n: usize) -> Vec<Graph> {
    assert!(n.is_multiple_of(2) && n >= 4, "cubic graphs need an even order >= 4");
    let mut found: Vec<Graph> = Vec::new();
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
    generate(&mut adjacency, 0, 1, n, &mut found);
    found
}

fn generate(
    adjacency: &mut Vec<Vec<usize>>,
    v: usize,
    introduced: usize,
    n: usize,
    found: &mut Vec<Graph>,
) {
    if v == n {
        if introduced == n {
            let mut links = Vec::new();
            for (u, nbrs) in adjacency.iter().enumerate() {
                for &w in nbrs {
                    if u < w {
                        links.push((u, w));
                    }
                }
            }
            let g = Graph::new(n, links).expect("construction keeps degrees at 3");
            if !found.iter().any(|h| crate::structure::are_isomorphic(h, &g)) {
                found.push(g);
            }
        }
        return;
    }
    if adjacency[v].len() == 3 {
        generate(adjacency, v + 1, introduced, n, found);
        return;
    }
    // vertices past v with no neighbour yet can only be reached later if
    // they are still introducible in order; candidates are existing later
    // vertices or exactly the next fresh one
    let min_candidate = adjacency[v].last().map_or(v + 1, |&w| w + 1);
    for w in min_candidate..=introduced.min(n - 1) {
        if w == v || adjacency[w].len() == 3 || adjacency[v].contains(&w) {
            continue;
        }
        adjacency[v].push(w);
        adjacency[w].push(v);
        let newly = if w == introduced { introduced + 1 } else { introduced };
        generate(adjacency, v, newly, n, found);
        adjacency[v].pop();
        adjacency[w].pop();
    }
}
