//! Randomized invariants over the composition algebra and the codecs.

use matchcover::generators::{build_family_assembly, FamilyKind, FamilySpec};
use matchcover::graph6::{decode_graph6, encode_graph6};
use matchcover::multipole::EdgeRef;
use matchcover::structure::{are_isomorphic, multipole_isomorphic};
use matchcover::text::{emit_multipole_text, parse_multipole_text};
use proptest::prelude::*;

/// Arrangement strings over {A,B} with at least one A, up to 4 blocks.
fn arb_order() -> impl Strategy<Value = String> {
    proptest::collection::vec(prop_oneof![Just('A'), Just('B')], 1..=4)
        .prop_map(|mut chars| {
            if !chars.contains(&'A') {
                chars[0] = 'A';
            }
            chars.into_iter().collect()
        })
}

fn spec_from_order(kind: FamilyKind, order: &str) -> FamilySpec {
    let a = order.chars().filter(|&c| c == 'A').count() as u64;
    let b = order.len() as u64 - a;
    FamilySpec::with_order(kind, a, b, order.to_string(), 1).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// graph6 round trip is the identity on links (and hence isomorphic).
    #[test]
    fn graph6_round_trip(order in arb_order(), kind_is_cc4 in any::<bool>()) {
        let kind = if kind_is_cc4 { FamilyKind::Cc4 } else { FamilyKind::Cc2 };
        let graph = build_family_assembly(&spec_from_order(kind, &order)).unwrap().graph;
        let encoded = encode_graph6(&graph).unwrap();
        let decoded = decode_graph6(&encoded).unwrap();
        prop_assert_eq!(decoded.links(), graph.links());
        prop_assert!(are_isomorphic(&decoded, &graph));
    }

    /// Cutting any link of a family graph and rejoining the two new
    /// danglings restores the graph up to isomorphism.
    #[test]
    fn cut_then_rejoin_round_trip(order in arb_order(), edge_seed in any::<u32>()) {
        let graph = build_family_assembly(&spec_from_order(FamilyKind::Cc2, &order))
            .unwrap()
            .graph;
        let e = EdgeRef(edge_seed as usize % graph.edge_count());
        let cut = graph.cut_edge(e).unwrap();
        // handshake identity holds on the cut multipole
        prop_assert_eq!(
            3 * cut.vertex_count(),
            2 * cut.links().len() + cut.danglings().len()
        );
        let connectors = cut.connectors().len();
        let closed = cut.join_self(connectors - 1, connectors - 2).unwrap();
        prop_assert!(closed.is_graph());
        prop_assert!(multipole_isomorphic(&closed, graph.as_multipole()));
    }

    /// Text round trip: emit ∘ parse ∘ emit is stable and label-preserving.
    #[test]
    fn multipole_text_round_trip(order in arb_order(), edge_seed in any::<u32>()) {
        let graph = build_family_assembly(&spec_from_order(FamilyKind::Cc2, &order))
            .unwrap()
            .graph;
        let e = EdgeRef(edge_seed as usize % graph.edge_count());
        let cut = graph.cut_edge(e).unwrap();
        let text = emit_multipole_text("probe", &cut);
        let (name, parsed) = parse_multipole_text(&text).unwrap();
        prop_assert_eq!(name, "probe");
        prop_assert_eq!(&parsed, &cut);
        prop_assert_eq!(emit_multipole_text("probe", &parsed), text);
    }

    /// EdgeRef identifiers are dense and stable across the text round trip.
    #[test]
    fn edge_refs_stable_under_round_trip(order in arb_order()) {
        let graph = build_family_assembly(&spec_from_order(FamilyKind::Cc2, &order))
            .unwrap()
            .graph;
        let cut = graph.cut_edge(EdgeRef(0)).unwrap();
        let (_, parsed) = parse_multipole_text(&emit_multipole_text("m", &cut)).unwrap();
        for i in 0..cut.edge_count() {
            prop_assert_eq!(cut.edge(EdgeRef(i)), parsed.edge(EdgeRef(i)));
        }
    }
}
