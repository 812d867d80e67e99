use num_bigint::BigUint;
use pfam_core::constructions::upset_of;
use pfam_core::projections::*;
use pfam_core::{pair_count, Family, Graph, OrientedGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_points(rng: &mut ChaCha8Rng, q: u8, arity: usize) -> PointSet {
    let count = rng.gen_range(1..=40);
    let points = (0..count)
        .map(|_| (0..arity).map(|_| rng.gen_range(0..q)).collect())
        .collect();
    PointSet::new(q, arity, points).unwrap()
}

#[test]
fn uniform_cover_inequality_on_random_families() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for draw in 0..1000 {
        let n = rng.gen_range(3..=6);
        let q = rng.gen_range(2..=3);
        let pts = random_points(&mut rng, q, pair_count(n));
        for cover in [
            CoverSpec::stars(n).unwrap(),
            CoverSpec::vertex_deletions(n).unwrap(),
        ] {
            let check = shearer_bound_check(&pts, &cover).unwrap();
            assert!(
                check.holds,
                "draw {draw} n={n}: {} > {}",
                check.lhs, check.rhs
            );
        }
    }
}

#[test]
fn cover_multiplicities() {
    for n in 3..=12 {
        assert_eq!(CoverSpec::stars(n).unwrap().multiplicity, 2);
        assert_eq!(CoverSpec::vertex_deletions(n).unwrap().multiplicity, n - 2);
    }
    assert!(uniform_cover_multiplicity(&[vec![0, 1], vec![1]], 2).is_err());
}

#[test]
fn pipelines_match_closed_forms() {
    for n in 3..=12 {
        let e = (pair_count(n) - n) as u32;
        let o = oriented_star_pipeline(n).unwrap();
        assert_eq!(o.bound, BigUint::from(3u32).pow(e), "n={n}");
        let h = hamiltonian_deletion_pipeline(n).unwrap();
        assert_eq!(h.bound, BigUint::from(2u32).pow(e), "n={n}");
        assert_eq!(h.multiplicity, n - 2);
    }
}

#[test]
fn two_agreement_oracle() {
    assert_eq!(ft_max_2agree(3, 3).unwrap().0, 3);
    let (size, witness) = ft_max_2agree(4, 3).unwrap();
    assert_eq!(size, 9);
    for a in witness.points() {
        for b in witness.points() {
            assert!(agreement(a, b).unwrap() >= 2);
        }
    }
    // q = 2: any two points of a 2-dimensional point set agree in both only if equal
    assert_eq!(max_agreeing_set(2, 2, 2).unwrap().0, 1);
}

#[test]
fn strong_upsets_project_to_agreeing_stars_and_are_cuboids() {
    let h = OrientedGraph::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let f = upset_of(&h).unwrap();
    for i in 0..4 {
        assert!(check_projected_agreement(&f, i).unwrap());
    }
    let c = is_cuboid(&PointSet::from_family(&f));
    assert!(c.is_cuboid);
    assert_eq!(c.sides.iter().filter(|s| s.len() == 1).count(), 4);
    let mixed = Family::new(
        3,
        vec![
            OrientedGraph::from_digits("000", 3).unwrap(),
            OrientedGraph::from_digits("111", 3).unwrap(),
        ],
    )
    .unwrap();
    assert!(!is_cuboid(&PointSet::from_family(&mixed)).is_cuboid);
}
