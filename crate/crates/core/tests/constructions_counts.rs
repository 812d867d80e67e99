use num_bigint::BigUint;
use pfam_core::constructions::*;
use pfam_core::predicates::satisfies;
use pfam_core::{
    pair_count, verify_family, DirectedGraph, Graph, OrientedGraph, Property, SimpleGraph,
};

fn pow2(e: usize) -> BigUint {
    BigUint::from(2u32).pow(e as u32)
}

fn upset_matches<G: Graph>(h: &G) {
    let f = upset_of(h).unwrap();
    assert_eq!(BigUint::from(f.len()), upset_count(h));
    let all = G::enumerate_all(h.n()).unwrap();
    let brute: Vec<G> = all.into_iter().filter(|g| h.is_subgraph_of(g)).collect();
    assert_eq!(f.members(), &brute[..]);
}

#[test]
fn upsets_are_exactly_the_supergraphs() {
    for n in 1..=4 {
        let path: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        upset_matches(&SimpleGraph::from_edges(n, &path).unwrap());
        upset_matches(&OrientedGraph::from_arcs(n, &path).unwrap());
    }
    upset_matches(&DirectedGraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap());
    upset_matches(&DirectedGraph::from_arcs(3, &[(0, 1), (1, 0)]).unwrap());
}

#[test]
fn directed_cycle_upset_meets_the_coset_bound_at_three() {
    let h = DirectedGraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
    assert_eq!(upset_count(&h), BigUint::from(8u32));
    assert!(
        verify_family(&upset_of(&h).unwrap(), Property::StronglyConnected)
            .unwrap()
            .ok
    );
    let h = OrientedGraph::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    assert_eq!(upset_count(&h), BigUint::from(9u32));
}

#[test]
fn hamilton_cycle_family_sizes() {
    for n in 3..=6 {
        let order: Vec<usize> = (0..n).collect();
        let f = hamilton_cycle_family(&order, n).unwrap();
        assert_eq!(BigUint::from(f.len()), pow2(pair_count(n) - n));
        assert_eq!(hamilton_cycle_count(n).unwrap(), pow2(pair_count(n) - n));
        if n <= 5 {
            assert!(verify_family(&f, Property::HamiltonianCycle).unwrap().ok);
        }
    }
}

#[test]
fn cycle_minus_one_sizes() {
    for n in 3..=6 {
        let order: Vec<usize> = (0..n).collect();
        let f = cycle_minus_one_family(&order, n).unwrap();
        let closed = BigUint::from(n + 1) * pow2(pair_count(n) - n);
        assert_eq!(BigUint::from(f.len()), closed);
        assert_eq!(cycle_minus_one_count(n).unwrap(), closed);
        if n <= 5 {
            assert!(
                verify_family(&f, Property::AtMostKComponents(2))
                    .unwrap()
                    .ok
            );
        }
    }
    assert_eq!(cycle_minus_one_count(4).unwrap(), BigUint::from(20u32));
}

#[test]
fn flower_sizes() {
    assert_eq!(balanced_two_flower(5), Some(vec![3, 3]));
    let f = flower_family(&[3, 3], 5).unwrap();
    assert_eq!(f.len(), 256);
    assert_eq!(
        BigUint::from(256u32),
        BigUint::from(64u32) * pow2(pair_count(5)) / 8u32 / 32u32
    );
    assert!(
        verify_family(&f, Property::AtMostKComponents(3))
            .unwrap()
            .ok
    );
    for n in 5..=6 {
        let lengths = balanced_two_flower(n).unwrap();
        let f = flower_family(&lengths, n).unwrap();
        assert_eq!(BigUint::from(f.len()), flower_count(&lengths, n).unwrap());
        // Each cycle of length l keeps all but at most one edge: l + 1 ways.
        let ways: usize = lengths.iter().map(|l| l + 1).product();
        let petals: usize = lengths.iter().sum();
        assert_eq!(
            BigUint::from(f.len()),
            BigUint::from(ways) * pow2(pair_count(n) - petals)
        );
    }
    assert_eq!(
        flower_count(&[3, 3, 3], 7).unwrap(),
        BigUint::from(64u32) * pow2(pair_count(7) - 9)
    );
    assert!(flower_family(&[3, 4], 5).is_err());
}

#[test]
fn all_but_one_matches_product_formula() {
    let blocks = vec![
        SimpleGraph::from_edges(6, &[(0, 1), (1, 2)]).unwrap(),
        SimpleGraph::from_edges(6, &[(3, 4), (4, 5), (3, 5)]).unwrap(),
    ];
    let f = all_but_one_of_each(6, &blocks).unwrap();
    assert_eq!(
        BigUint::from(f.len()),
        all_but_one_count(6, &blocks).unwrap()
    );
    assert_eq!(f.len(), 3 * 4 * (1 << (15 - 5)));
}

#[test]
fn non_upset_hamilton_path_family() {
    for n in 4..=6 {
        let f = hamilton_path_noneq_family(n).unwrap();
        assert_eq!(
            BigUint::from(f.len()),
            hamilton_path_noneq_count(n).unwrap()
        );
        assert_eq!(BigUint::from(f.len()), pow2(pair_count(n) - (n - 1)));
        assert!(f
            .members()
            .iter()
            .all(|g| satisfies(g, Property::HamiltonianPath).unwrap()));
    }
    let f = hamilton_path_noneq_family(5).unwrap();
    assert_eq!(f.len(), 64);
    assert!(verify_family(&f, Property::HamiltonianPath).unwrap().ok);
    // not an upset: the members share no common spanning subgraph generating them
    let common = f
        .members()
        .iter()
        .fold(SimpleGraph::complete(5).unwrap(), |acc, g| {
            acc.intersect(g).unwrap()
        });
    assert_ne!(upset_count(&common), BigUint::from(64u32));
}
