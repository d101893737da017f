//! Exact analysis of perfect-matching covers of cubic graphs.
//!
//! The crate models cubic graphs and multipoles (cubic graph fragments with
//! dangling edges), composes them with a cut/join algebra, and computes
//! m3, the maximum fraction of edges coverable by the union of three
//! perfect matchings, exactly: both by exhaustive enumeration and by a
//! min-plus transfer-matrix dynamic program over ring decompositions.
//!
//! On top of the solvers sit generators for the Petersen/K4 and Blanuša-based
//! gadget families, structure analysis (girth, cyclic edge connectivity,
//! isomorphism), and a verification harness of named checks that certify the
//! combinatorial facts the family constructions rely on.
//!
//! All arithmetic is integer or rational; there is no floating point.

pub mod edgeset;
pub mod generators;
pub mod graph6;
pub mod m3;
pub mod matching;
pub mod multipole;
pub mod structure;
pub mod text;
pub mod verify;

pub use multipole::{EdgeRef, Graph, Multipole};

#[cfg(test)]
mod tests {
    // every domain type is immutable after construction and shareable
    // across workers
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn domain_types_are_share_safe() {
        assert_send_sync::<crate::Multipole>();
        assert_send_sync::<crate::Graph>();
        assert_send_sync::<crate::matching::PerfectMatching>();
        assert_send_sync::<crate::matching::EdgeColoring>();
        assert_send_sync::<crate::m3::CoverProfile>();
        assert_send_sync::<crate::m3::M3Result>();
        assert_send_sync::<crate::generators::FamilySpec>();
        assert_send_sync::<crate::structure::ConnectivityResult>();
    }
}
