mod common;

use common::*;
use pfam_core::predicates::{
    component_count, contains_full_out_cut, has_cutvertex, has_hamilton_cycle, has_hamilton_path,
    is_connected, is_strongly_connected, is_two_edge_connected, satisfies,
};
use pfam_core::{DirectedGraph, Graph, OrientedGraph, Property, SimpleGraph};

#[test]
fn simple_predicates_match_oracles_up_to_five_vertices() {
    for n in 1..=5 {
        for g in SimpleGraph::enumerate_all(n).unwrap() {
            let edges: Vec<_> = g.edges().collect();
            let m = simple_matrix(n, &edges);
            let d = g.to_digits();
            assert_eq!(component_count(&g), components(&m), "{d}");
            assert_eq!(is_connected(&g), components(&m) == 1, "{d}");
            assert_eq!(has_hamilton_cycle(&g), ham_cycle(&m), "{d}");
            assert_eq!(has_hamilton_path(&g), ham_path(&m), "{d}");
            assert_eq!(
                satisfies(&g, Property::NoCutvertex).unwrap(),
                no_cutvertex(&m),
                "{d}"
            );
            assert_eq!(is_two_edge_connected(&g), two_edge_connected(&m), "{d}");
            if is_connected(&g) && n >= 3 {
                assert_eq!(has_cutvertex(&g), !no_cutvertex(&m), "{d}");
            }
            for k in 1..=n {
                assert_eq!(
                    satisfies(&g, Property::AtMostKComponents(k)).unwrap(),
                    components(&m) <= k
                );
            }
        }
    }
}

#[test]
fn oriented_strong_connectivity_matches_closure() {
    for n in 1..=4 {
        for g in OrientedGraph::enumerate_all(n).unwrap() {
            let arcs = g.arcs();
            assert_eq!(
                is_strongly_connected(&g),
                all_reach(&arc_matrix(n, &arcs)),
                "{}",
                g.to_digits()
            );
        }
    }
}

#[test]
fn directed_strong_connectivity_matches_closure() {
    for n in 1..=3 {
        let all = DirectedGraph::enumerate_all(n).unwrap();
        let strong = all
            .iter()
            .filter(|g| {
                let arcs = g.arcs();
                let ok = all_reach(&arc_matrix(n, &arcs));
                assert_eq!(is_strongly_connected(*g), ok);
                ok
            })
            .count();
        if n == 3 {
            assert_eq!(strong, 18);
        }
    }
}

#[test]
fn implication_chain_holds_from_three_vertices() {
    for n in 3..=6 {
        for g in SimpleGraph::enumerate_all(n).unwrap() {
            let hc = has_hamilton_cycle(&g);
            let nc = satisfies(&g, Property::NoCutvertex).unwrap();
            let tec = is_two_edge_connected(&g);
            let hp = has_hamilton_path(&g);
            let c = is_connected(&g);
            assert!(!hc || nc);
            assert!(!nc || tec);
            assert!(!tec || c);
            assert!(!hc || hp);
            assert!(!hp || c);
        }
    }
}

#[test]
fn strong_connectivity_is_missing_no_full_out_cut() {
    // A digraph is strongly connected iff its complement contains no full
    // out-cut.
    for n in 2..=3 {
        for g in DirectedGraph::enumerate_all(n).unwrap() {
            let rest = g.xor(&DirectedGraph::complete(n).unwrap());
            let blocked = (1u32..(1 << n) - 1).any(|a| contains_full_out_cut(&rest, a).unwrap());
            assert_eq!(is_strongly_connected(&g), !blocked, "{}", g.to_digits());
        }
    }
}

#[test]
fn kind_mismatches_are_rejected() {
    let g = SimpleGraph::complete(3).unwrap();
    assert!(satisfies(&g, Property::StronglyConnected).is_err());
    let o = OrientedGraph::empty(3).unwrap();
    assert!(satisfies(&o, Property::Connected).is_err());
    assert!(contains_full_out_cut(&g, 1).is_err());
}
