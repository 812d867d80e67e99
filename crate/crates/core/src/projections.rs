//! Projection bounds.
//!
//! A family of graphs is a point set in `[q]^m` (one coordinate per edge
//! slot). If blocks of coordinates cover every coordinate exactly `k` times,
//! the uniform-cover inequality gives `|F|^k <= ∏ |π_B(F)|`. Capping each
//! projection by an intersecting-family bound on the block then caps `|F|`.
//!
//! Two covers of the `K_n` slots matter here: the `n` stars (each slot lies
//! in 2 stars) and the `n` vertex deletions, i.e. copies of `K_{n-1}` (each
//! slot lies in `n - 2` of them).

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::clique::{maximum_clique, BitGraph, CliqueOptions};
use crate::error::{invalid, Error, Result};
use crate::family::Family;
use crate::graph::{check_n, pair_count, slot_unchecked, Graph, OrientedGraph};

/// Duplicate-free tuples in `[0, q)^m`, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    q: u8,
    arity: usize,
    points: Vec<Vec<u8>>,
}

impl PointSet {
    pub fn new(q: u8, arity: usize, points: Vec<Vec<u8>>) -> Result<Self> {
        if q == 0 {
            return invalid("alphabet must be nonempty");
        }
        for p in &points {
            if p.len() != arity {
                return invalid(format!("point {p:?} does not have arity {arity}"));
            }
            if let Some(&x) = p.iter().find(|&&x| x >= q) {
                return invalid(format!("point {p:?} has entry {x} outside [0,{q})"));
            }
        }
        let points: BTreeSet<Vec<u8>> = points.into_iter().collect();
        Ok(PointSet {
            q,
            arity,
            points: points.into_iter().collect(),
        })
    }

    /// The family's members as coordinate tuples.
    pub fn from_family<G: Graph>(family: &Family<G>) -> Self {
        let points = family.members().iter().map(|g| g.coordinates()).collect();
        PointSet::new(G::alphabet(), G::KIND.digit_len(family.n()), points)
            .expect("graph coordinates are in range")
    }

    /// All of `[0, q)^m`.
    pub fn full(q: u8, arity: usize) -> Result<Self> {
        let total = (q as u64)
            .checked_pow(arity as u32)
            .filter(|&t| t <= 1 << 24);
        let Some(total) = total else {
            return Err(Error::Capacity(format!("{q}^{arity} points")));
        };
        let points = (0..total).map(|i| decode(i, q, arity)).collect();
        PointSet::new(q, arity, points)
    }

    pub fn alphabet(&self) -> u8 {
        self.q
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<u8>] {
        &self.points
    }

    /// Image under the projection onto `coords` (in the given order).
    pub fn project(&self, coords: &[usize]) -> Result<PointSet> {
        if let Some(&c) = coords.iter().find(|&&c| c >= self.arity) {
            return invalid(format!("coordinate {c} outside arity {}", self.arity));
        }
        let image: BTreeSet<Vec<u8>> = self
            .points
            .iter()
            .map(|p| coords.iter().map(|&c| p[c]).collect())
            .collect();
        Ok(PointSet {
            q: self.q,
            arity: coords.len(),
            points: image.into_iter().collect(),
        })
    }
}

fn decode(mut index: u64, q: u8, arity: usize) -> Vec<u8> {
    let mut p = vec![0u8; arity];
    for slot in p.iter_mut().rev() {
        *slot = (index % q as u64) as u8;
        index /= q as u64;
    }
    p
}

/// Slots of the edges at vertex `i`.
pub fn star_coords(i: usize, n: usize) -> Result<Vec<usize>> {
    check_n(n)?;
    if i >= n {
        return invalid(format!("vertex {i} out of range for n={n}"));
    }
    let mut out: Vec<usize> = (0..n)
        .filter(|&j| j != i)
        .map(|j| slot_unchecked(i.min(j), i.max(j)))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Slots of the edges avoiding vertex `i`.
pub fn vertex_deletion_coords(i: usize, n: usize) -> Result<Vec<usize>> {
    let star = star_coords(i, n)?;
    Ok((0..pair_count(n))
        .filter(|s| star.binary_search(s).is_err())
        .collect())
}

/// Number of positions where `u` and `v` agree.
pub fn agreement(u: &[u8], v: &[u8]) -> Result<usize> {
    if u.len() != v.len() {
        return invalid(format!("arities differ: {} vs {}", u.len(), v.len()));
    }
    Ok(u.iter().zip(v).filter(|(a, b)| a == b).count())
}

/// Largest point count the agreement oracle accepts.
pub const AGREEMENT_ORACLE_LIMIT: u64 = 1_000_000;

/// Exact maximum size of a subset of `[q]^m` in which every two points agree
/// in at least `t` coordinates, with one maximum subset.
pub fn max_agreeing_set(m: usize, q: u8, t: usize) -> Result<(usize, PointSet)> {
    let total = (q as u64).checked_pow(m as u32);
    if total.is_none_or(|x| x > AGREEMENT_ORACLE_LIMIT) {
        return Err(Error::Capacity(format!(
            "{q}^{m} points exceed the oracle limit {AGREEMENT_ORACLE_LIMIT}"
        )));
    }
    let all = PointSet::full(q, m)?;
    let pts = all.points();
    let mut g = BitGraph::new(pts.len());
    for a in 0..pts.len() {
        for b in a + 1..pts.len() {
            if pts[a].iter().zip(&pts[b]).filter(|(x, y)| x == y).count() >= t {
                g.add_edge(a, b);
            }
        }
    }
    let best = maximum_clique(&g, &CliqueOptions::default());
    let witness = best.clique.iter().map(|&i| pts[i].clone()).collect();
    Ok((best.clique.len(), PointSet::new(q, m, witness)?))
}

/// [`max_agreeing_set`] with `t = 2`.
pub fn ft_max_2agree(m: usize, q: u8) -> Result<(usize, PointSet)> {
    max_agreeing_set(m, q, 2)
}

/// Checks that the star projections at `i` of every two members agree in at
/// least two coordinates.
pub fn check_projected_agreement(family: &Family<OrientedGraph>, i: usize) -> Result<bool> {
    let coords = star_coords(i, family.n())?;
    let projected: Vec<Vec<u8>> = family
        .members()
        .iter()
        .map(|g| {
            let c = g.coordinates();
            coords.iter().map(|&s| c[s]).collect()
        })
        .collect();
    Ok(projected.iter().enumerate().all(|(a, u)| {
        projected[a..]
            .iter()
            .all(|v| u.iter().zip(v).filter(|(x, y)| x == y).count() >= 2)
    }))
}

/// Blocks of coordinates covering each of `total_coords` exactly
/// `multiplicity` times.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverSpec {
    pub total_coords: usize,
    pub blocks: Vec<Vec<usize>>,
    pub multiplicity: usize,
}

impl CoverSpec {
    pub fn new(blocks: Vec<Vec<usize>>, total_coords: usize) -> Result<Self> {
        let multiplicity = uniform_cover_multiplicity(&blocks, total_coords)?;
        if multiplicity == 0 {
            return Err(Error::Validation("cover has multiplicity 0".into()));
        }
        Ok(CoverSpec {
            total_coords,
            blocks,
            multiplicity,
        })
    }

    /// The `n` stars of `K_n`.
    pub fn stars(n: usize) -> Result<Self> {
        let blocks = (0..n).map(|i| star_coords(i, n)).collect::<Result<_>>()?;
        CoverSpec::new(blocks, pair_count(n))
    }

    /// The `n` copies of `K_{n-1}` obtained by deleting one vertex.
    pub fn vertex_deletions(n: usize) -> Result<Self> {
        let blocks = (0..n)
            .map(|i| vertex_deletion_coords(i, n))
            .collect::<Result<_>>()?;
        CoverSpec::new(blocks, pair_count(n))
    }
}

/// The common number of blocks containing each coordinate.
pub fn uniform_cover_multiplicity(blocks: &[Vec<usize>], total_coords: usize) -> Result<usize> {
    let mut hits = vec![0usize; total_coords];
    for b in blocks {
        let set: BTreeSet<usize> = b.iter().copied().collect();
        for c in set {
            if c >= total_coords {
                return Err(Error::Validation(format!(
                    "coordinate {c} is outside 0..{total_coords}"
                )));
            }
            hits[c] += 1;
        }
    }
    let Some(&k) = hits.first() else {
        return Ok(0);
    };
    match hits.iter().position(|&h| h != k) {
        Some(c) => Err(Error::Validation(format!(
            "coordinate {c} is covered {} times, coordinate 0 {k} times",
            hits[c]
        ))),
        None => Ok(k),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShearerCheck {
    pub holds: bool,
    /// `|F|^k`.
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub lhs: BigUint,
    /// `∏ |π_B(F)|`.
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub rhs: BigUint,
    pub block_sizes: Vec<usize>,
}

/// Evaluates both sides of the uniform-cover inequality exactly.
pub fn shearer_bound_check(points: &PointSet, cover: &CoverSpec) -> Result<ShearerCheck> {
    if cover.total_coords != points.arity() {
        return invalid(format!(
            "cover spans {} coordinates, points have arity {}",
            cover.total_coords,
            points.arity()
        ));
    }
    let block_sizes = cover
        .blocks
        .iter()
        .map(|b| points.project(b).map(|p| p.len()))
        .collect::<Result<Vec<_>>>()?;
    let lhs = BigUint::from(points.len()).pow(cover.multiplicity as u32);
    let rhs = block_sizes
        .iter()
        .fold(BigUint::one(), |acc, &s| acc * BigUint::from(s));
    Ok(ShearerCheck {
        holds: lhs <= rhs,
        lhs,
        rhs,
        block_sizes,
    })
}

/// Largest `B` with `B^k <= ∏ caps`.
pub fn bound_from_projection_caps(cover: &CoverSpec, caps: &[BigUint]) -> Result<BigUint> {
    if caps.len() != cover.blocks.len() {
        return invalid(format!(
            "{} caps for {} blocks",
            caps.len(),
            cover.blocks.len()
        ));
    }
    let product = caps.iter().fold(BigUint::one(), |acc, c| acc * c);
    if product.is_zero() {
        return Ok(BigUint::zero());
    }
    Ok(product.nth_root(cover.multiplicity as u32))
}

/// One row of a projection-bound pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockRow {
    pub block: usize,
    pub coords: usize,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub cap: BigUint,
}

/// The full projection argument for one `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PipelineReport {
    pub n: usize,
    pub cover: String,
    pub alphabet: u8,
    pub multiplicity: usize,
    pub rows: Vec<BlockRow>,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub product: BigUint,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub bound: BigUint,
    /// `bound` as `q^e`, when it is an exact power.
    pub exponent: Option<u32>,
}

fn exact_log(value: &BigUint, base: u32) -> Option<u32> {
    let mut e = 0;
    let mut p = BigUint::one();
    while &p < value {
        p *= base;
        e += 1;
    }
    (&p == value).then_some(e)
}

fn pipeline(n: usize, cover: CoverSpec, name: &str, q: u8, cap: BigUint) -> Result<PipelineReport> {
    let caps = vec![cap; cover.blocks.len()];
    let bound = bound_from_projection_caps(&cover, &caps)?;
    let product = caps.iter().fold(BigUint::one(), |acc, c| acc * c);
    let rows = cover
        .blocks
        .iter()
        .zip(caps)
        .enumerate()
        .map(|(i, (b, cap))| BlockRow {
            block: i,
            coords: b.len(),
            cap,
        })
        .collect();
    Ok(PipelineReport {
        n,
        cover: name.into(),
        alphabet: q,
        multiplicity: cover.multiplicity,
        rows,
        exponent: exact_log(&bound, q as u32),
        product,
        bound,
    })
}

/// Oriented strongly-connected-intersecting families: each star projection
/// is a 2-agreeing subset of `{0,1,2}^(n-1)`, capped at `3^(n-3)`; the star
/// cover has multiplicity 2.
pub fn oriented_star_pipeline(n: usize) -> Result<PipelineReport> {
    if n < 3 {
        return invalid("the star pipeline needs n >= 3");
    }
    let cap = BigUint::from(3u32).pow((n - 3) as u32);
    pipeline(n, CoverSpec::stars(n)?, "stars", 3, cap)
}

/// Hamiltonian (or cutvertex-free) intersecting families: each vertex
/// deletion projection is connected-intersecting on `n - 1` vertices,
/// capped at `2^(C(n-1,2) - (n-2))`; the deletion cover has multiplicity
/// `n - 2`.
pub fn hamiltonian_deletion_pipeline(n: usize) -> Result<PipelineReport> {
    if n < 3 {
        return invalid("the deletion pipeline needs n >= 3");
    }
    let cap = BigUint::from(2u32).pow((pair_count(n - 1) - (n - 2)) as u32);
    pipeline(
        n,
        CoverSpec::vertex_deletions(n)?,
        "vertex-deletions",
        2,
        cap,
    )
}

/// Side sets of a point set, one per coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuboidCheck {
    pub is_cuboid: bool,
    pub sides: Vec<Vec<u8>>,
}

/// True iff the set is the product of its single-coordinate projections.
pub fn is_cuboid(points: &PointSet) -> CuboidCheck {
    let sides: Vec<Vec<u8>> = (0..points.arity())
        .map(|c| {
            let s: BTreeSet<u8> = points.points().iter().map(|p| p[c]).collect();
            s.into_iter().collect()
        })
        .collect();
    let product = sides
        .iter()
        .fold(BigUint::one(), |acc, s| acc * BigUint::from(s.len()));
    // the set always lies inside the product, so equal sizes mean equality
    let is_cuboid = !points.is_empty() && product == BigUint::from(points.len());
    CuboidCheck { is_cuboid, sides }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(q: u8, pts: &[&[u8]]) -> PointSet {
        PointSet::new(q, pts[0].len(), pts.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    #[test]
    fn projection_examples() {
        let f = ps(3, &[&[0, 1, 2], &[0, 1, 0]]);
        assert_eq!(f.project(&[0, 1]).unwrap().points(), &[vec![0, 1]]);
        assert_eq!(f.project(&[0, 1, 2]).unwrap(), f);
        assert!(f.project(&[3]).is_err());
    }

    #[test]
    fn coordinate_blocks() {
        assert_eq!(star_coords(0, 4).unwrap(), vec![0, 1, 3]);
        assert_eq!(vertex_deletion_coords(0, 4).unwrap(), vec![2, 4, 5]);
        assert!(star_coords(4, 4).is_err());
    }

    #[test]
    fn agreement_examples() {
        assert_eq!(agreement(&[0, 1, 2], &[0, 1, 0]).unwrap(), 2);
        assert_eq!(agreement(&[0, 1, 2], &[0, 1, 2]).unwrap(), 3);
        assert_eq!(agreement(&[0, 1, 2], &[1, 2, 0]).unwrap(), 0);
        assert!(agreement(&[0], &[0, 1]).is_err());
    }

    #[test]
    fn cover_multiplicities() {
        assert_eq!(CoverSpec::stars(5).unwrap().multiplicity, 2);
        assert_eq!(CoverSpec::vertex_deletions(5).unwrap().multiplicity, 3);
        let err = uniform_cover_multiplicity(&[vec![0], vec![0, 1]], 2).unwrap_err();
        assert!(err.to_string().contains("coordinate 1"));
    }

    #[test]
    fn small_agreement_oracle() {
        assert_eq!(ft_max_2agree(2, 3).unwrap().0, 1);
        assert_eq!(ft_max_2agree(3, 3).unwrap().0, 3);
        let (size, witness) = ft_max_2agree(3, 3).unwrap();
        assert_eq!(witness.len(), size);
        for u in witness.points() {
            for v in witness.points() {
                assert!(agreement(u, v).unwrap() >= 2);
            }
        }
        assert!(matches!(ft_max_2agree(13, 3), Err(Error::Capacity(_))));
    }

    #[test]
    fn full_cube_is_tight() {
        let cube = PointSet::full(3, 4).unwrap();
        let cover =
            CoverSpec::new(vec![vec![0, 1], vec![2, 3], vec![1, 2], vec![3, 0]], 4).unwrap();
        let check = shearer_bound_check(&cube, &cover).unwrap();
        assert!(check.holds);
        assert_eq!(check.lhs, check.rhs);
    }

    #[test]
    fn pipelines_match_closed_forms() {
        assert_eq!(
            oriented_star_pipeline(5).unwrap().bound,
            BigUint::from(243u32)
        );
        assert_eq!(
            hamiltonian_deletion_pipeline(5).unwrap().bound,
            BigUint::from(32u32)
        );
        assert_eq!(hamiltonian_deletion_pipeline(6).unwrap().exponent, Some(9));
    }

    #[test]
    fn non_power_caps_floor() {
        let cover = CoverSpec::stars(3).unwrap();
        let caps = vec![
            BigUint::from(2u32),
            BigUint::from(3u32),
            BigUint::from(5u32),
        ];
        // 30 = 5.47..^2
        assert_eq!(
            bound_from_projection_caps(&cover, &caps).unwrap(),
            BigUint::from(5u32)
        );
    }

    #[test]
    fn cuboids() {
        let not = ps(2, &[&[0, 0], &[1, 1]]);
        assert!(!is_cuboid(&not).is_cuboid);
        let single = ps(3, &[&[2, 0, 1]]);
        let c = is_cuboid(&single);
        assert!(c.is_cuboid);
        assert!(c.sides.iter().all(|s| s.len() == 1));
    }
}
