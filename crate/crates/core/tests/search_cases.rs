use pfam_core::constructions::upset_count;
use pfam_core::projections::{is_cuboid, PointSet};
use pfam_core::search::*;
use pfam_core::{DirectedGraph, Graph, OrientedGraph, Property, SimpleGraph};
use std::collections::BTreeSet;

fn all() -> SearchOptions {
    SearchOptions {
        enumerate_all: true,
        ..SearchOptions::default()
    }
}

fn is_upset<G: Graph>(members: &[G]) -> bool {
    let core = members
        .iter()
        .fold(members[0], |acc, g| acc.intersect(g).unwrap());
    upset_count(&core) == members.len().into()
}

#[test]
fn directed_three_strong() {
    let r = max_family::<DirectedGraph>(3, Property::StronglyConnected, &all()).unwrap();
    assert_eq!(r.stats.candidates, 18);
    assert_eq!(r.max_size, 8);
    assert_eq!(r.status, SearchStatus::Complete);
    for f in r.all_maximum.unwrap() {
        assert!(is_upset(f.members()));
    }
}

#[test]
fn oriented_four_strong_maxima_are_cycle_upsets() {
    let r = max_family::<OrientedGraph>(4, Property::StronglyConnected, &all()).unwrap();
    assert_eq!(r.max_size, 9);
    let families = r.all_maximum.unwrap();
    assert_eq!(families.len(), 6);
    for f in &families {
        let core = f
            .members()
            .iter()
            .fold(f.members()[0], |acc, g| acc.intersect(g).unwrap());
        assert_eq!(core.size(), 4);
        assert!(pfam_core::predicates::is_strongly_connected(&core));
        assert!(is_upset(f.members()));
        let c = is_cuboid(&PointSet::from_family(f));
        assert!(c.is_cuboid);
        assert_eq!(c.sides.iter().filter(|s| s.len() == 1).count(), 4);
    }
}

#[test]
fn hamiltonian_four_has_three_maxima() {
    let r = max_family::<SimpleGraph>(4, Property::HamiltonianCycle, &all()).unwrap();
    assert_eq!(r.max_size, 4);
    let families = r.all_maximum.unwrap();
    assert_eq!(families.len(), 3);
    let cores: BTreeSet<_> = families
        .iter()
        .map(|f| {
            let core = f
                .members()
                .iter()
                .fold(f.members()[0], |acc, g| acc.intersect(g).unwrap());
            assert!(pfam_core::predicates::has_hamilton_cycle(&core));
            assert_eq!(core.size(), 4);
            core
        })
        .collect();
    assert_eq!(cores.len(), 3);
}

#[test]
fn connected_four_has_a_non_upset_maximum() {
    let r = max_family::<SimpleGraph>(4, Property::Connected, &all()).unwrap();
    assert_eq!(r.max_size, 8);
    let families = r.all_maximum.unwrap();
    assert!(families.iter().any(|f| !is_upset(f.members())));
    assert!(families.iter().any(|f| is_upset(f.members())));
}

#[test]
fn options_do_not_change_the_answer() {
    let base = max_family::<SimpleGraph>(5, Property::HamiltonianCycle, &SearchOptions::default())
        .unwrap();
    for (symmetry, seed) in [(true, false), (false, true), (true, true)] {
        let r = max_family::<SimpleGraph>(
            5,
            Property::HamiltonianCycle,
            &SearchOptions {
                symmetry,
                seed_construction: seed,
                ..SearchOptions::default()
            },
        )
        .unwrap();
        assert_eq!(r.max_size, base.max_size);
        assert_eq!(r.witness, base.witness);
    }
    assert_eq!(base.max_size, 32);
}

#[test]
fn deterministic_across_thread_counts() {
    let mut outputs = Vec::new();
    for threads in [1, 2, 8] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        let r = pool.install(|| {
            let a = max_family::<OrientedGraph>(4, Property::StronglyConnected, &all()).unwrap();
            let b = max_family::<SimpleGraph>(4, Property::Connected, &all()).unwrap();
            (
                a.max_size,
                a.witness,
                a.all_maximum,
                b.max_size,
                b.witness,
                b.all_maximum,
            )
        });
        outputs.push(r);
    }
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn capacity_guard_and_timeout() {
    let err = max_family::<SimpleGraph>(7, Property::Connected, &SearchOptions::default());
    assert!(matches!(err, Err(pfam_core::Error::Capacity(_))));
    let r = max_family::<SimpleGraph>(
        5,
        Property::AtMostKComponents(2),
        &SearchOptions {
            time_limit: Some(std::time::Duration::ZERO),
            seed_construction: true,
            ..SearchOptions::default()
        },
    )
    .unwrap();
    assert_eq!(r.status, SearchStatus::TimeoutLowerBound);
    // the incumbent is still a valid family
    assert!(
        pfam_core::verify_family(&r.witness, Property::AtMostKComponents(2))
            .unwrap()
            .ok
    );
    assert!(r.max_size >= 6 * 32);
}

#[test]
fn conjecture_reports_at_four() {
    let opts = SearchOptions::default();
    let t = conjecture_report(4, Conjecture::TwoEdgeConnected, &opts).unwrap();
    assert_eq!(t.conjectured_bound, Some(4u32.into()));
    assert_eq!(t.search_status, SearchStatus::Complete);
    assert_ne!(t.verdict, Verdict::Open);
    let c = conjecture_report(4, Conjecture::TwoComponents, &opts).unwrap();
    assert_eq!(c.conjectured_bound, Some(20u32.into()));
    assert_eq!(c.construction_size, Some(20));
    assert_eq!(c.construction_verified, Some(true));
    assert!(c.search_max >= 20);
    let three = conjecture_report(4, Conjecture::ThreeComponents, &opts).unwrap();
    assert_eq!(three.verdict, Verdict::Open);
}

/// Plain Bron-Kerbosch over the compatibility relation, sharing nothing
/// with the branch-and-bound solver.
fn naive_max_family(n: usize, p: Property) -> usize {
    fn bk(r: usize, mut cand: Vec<usize>, adj: &[Vec<bool>], best: &mut usize) {
        if cand.is_empty() {
            *best = (*best).max(r);
            return;
        }
        if r + cand.len() <= *best {
            return;
        }
        while let Some(v) = cand.pop() {
            let next: Vec<usize> = cand.iter().copied().filter(|&u| adj[v][u]).collect();
            bk(r + 1, next, adj, best);
            if r + cand.len() <= *best {
                return;
            }
        }
    }
    let verts: Vec<SimpleGraph> = SimpleGraph::enumerate_all(n)
        .unwrap()
        .into_iter()
        .filter(|g| pfam_core::predicates::satisfies(g, p).unwrap())
        .collect();
    let adj: Vec<Vec<bool>> = verts
        .iter()
        .map(|a| {
            verts
                .iter()
                .map(|b| pfam_core::predicates::satisfies(&a.intersect(b).unwrap(), p).unwrap())
                .collect()
        })
        .collect();
    let mut best = 0;
    bk(0, (0..verts.len()).collect(), &adj, &mut best);
    best
}

#[test]
fn two_components_at_four_beats_the_conjectured_bound() {
    let p = Property::AtMostKComponents(2);
    assert_eq!(naive_max_family(4, p), 22);
    let r = max_family::<SimpleGraph>(4, p, &SearchOptions::default()).unwrap();
    assert_eq!(r.max_size, 22);
    // all graphs with at least four of the six edges: any two share two
    // edges, and two edges leave at most two components
    let heavy: Vec<SimpleGraph> = SimpleGraph::enumerate_all(4)
        .unwrap()
        .into_iter()
        .filter(|g| g.size() >= 4)
        .collect();
    assert_eq!(r.witness.members(), &heavy[..]);
    let report =
        conjecture_report(4, Conjecture::TwoComponents, &SearchOptions::default()).unwrap();
    assert_eq!(report.verdict, Verdict::Counterexample);
}

#[test]
fn naive_oracle_agrees_on_small_cases() {
    for (n, p, want) in [
        (4, Property::Connected, 8),
        (4, Property::HamiltonianCycle, 4),
        (4, Property::TwoEdgeConnected, 4),
        (4, Property::AtMostKComponents(3), 32),
        (3, Property::AtMostKComponents(2), 4),
    ] {
        assert_eq!(naive_max_family(n, p), want, "{p} n={n}");
        let r = max_family::<SimpleGraph>(n, p, &SearchOptions::default()).unwrap();
        assert_eq!(r.max_size, want, "{p} n={n}");
    }
}
