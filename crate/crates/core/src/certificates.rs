//! Coset certificates over GF(2).
//!
//! Graphs are vectors over GF(2) (one coordinate per edge slot, or per arc
//! position for directed graphs). If every nonzero element `H` of a subspace
//! `S` has the property that `G ∩ (G + H)` fails P for all `G`, then a
//! P-intersecting family meets each coset of `S` at most once and so has at
//! most `2^(dim - rank S)` members. This module builds the star and out-star
//! spans, checks the cut property of every span element, and evaluates the
//! coset bound.

use std::collections::HashSet;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::family::Family;
use crate::graph::{
    check_n, pair_count, slot_unchecked, DirectedGraph, Graph, OrientedGraph, SimpleGraph,
};
use crate::predicates::{component_count, out_cut_contained};

/// Largest ambient dimension a [`BitVector`] holds.
pub const MAX_DIM: usize = 256;

/// Largest rank whose span is enumerated element by element.
pub const MAX_ENUMERATED_RANK: usize = 24;

/// A vector over GF(2) of dimension at most [`MAX_DIM`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct BitVector([u64; 4]);

impl BitVector {
    pub fn zero() -> Self {
        BitVector([0; 4])
    }

    pub fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn xor(&self, other: &Self) -> Self {
        let mut w = self.0;
        for (a, b) in w.iter_mut().zip(other.0) {
            *a ^= b;
        }
        BitVector(w)
    }

    pub fn and(&self, other: &Self) -> Self {
        let mut w = self.0;
        for (a, b) in w.iter_mut().zip(other.0) {
            *a &= b;
        }
        BitVector(w)
    }

    pub fn count_ones(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Lowest set coordinate.
    pub fn lowest(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(k, w)| 64 * k + w.trailing_zeros() as usize)
    }

    /// True iff no coordinate at or beyond `dim` is set.
    pub fn fits(&self, dim: usize) -> bool {
        (dim..MAX_DIM).all(|i| !self.get(i))
    }

    fn from_u128_pair(lo: u128, hi: u128) -> Self {
        BitVector([lo as u64, (lo >> 64) as u64, hi as u64, (hi >> 64) as u64])
    }

    fn low_u128(&self) -> u128 {
        self.0[0] as u128 | (self.0[1] as u128) << 64
    }

    /// Digit string of the first `dim` coordinates.
    pub fn to_digits(&self, dim: usize) -> String {
        (0..dim)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }
}

/// Graph kinds that live in a GF(2) vector space.
pub trait Gf2Graph: Graph {
    fn ambient_dim(n: usize) -> usize;
    fn to_vector(&self) -> BitVector;
    fn from_vector(n: usize, v: &BitVector) -> Self;
}

impl Gf2Graph for SimpleGraph {
    fn ambient_dim(n: usize) -> usize {
        pair_count(n)
    }

    fn to_vector(&self) -> BitVector {
        BitVector::from_u128_pair(self.bits(), 0)
    }

    fn from_vector(n: usize, v: &BitVector) -> Self {
        SimpleGraph::from_mask(n, v.low_u128()).expect("vector fits the slot range")
    }
}

impl Gf2Graph for DirectedGraph {
    fn ambient_dim(n: usize) -> usize {
        2 * pair_count(n)
    }

    /// Arc at digit position `p` becomes coordinate `p`.
    fn to_vector(&self) -> BitVector {
        let mut v = BitVector::zero();
        for s in 0..pair_count(self.n()) {
            if self.forward() >> s & 1 == 1 {
                v.set(2 * s);
            }
            if self.backward() >> s & 1 == 1 {
                v.set(2 * s + 1);
            }
        }
        v
    }

    fn from_vector(n: usize, v: &BitVector) -> Self {
        let (mut f, mut b) = (0u128, 0u128);
        for s in 0..pair_count(n) {
            if v.get(2 * s) {
                f |= 1 << s;
            }
            if v.get(2 * s + 1) {
                b |= 1 << s;
            }
        }
        DirectedGraph::from_masks(n, f, b).expect("vector fits the arc range")
    }
}

/// The undirected star of all edges at `center`.
pub fn star(center: usize, n: usize) -> Result<SimpleGraph> {
    check_n(n)?;
    if center >= n {
        return invalid(format!("vertex {center} out of range for n={n}"));
    }
    let edges: Vec<_> = (0..n)
        .filter(|&j| j != center)
        .map(|j| (center, j))
        .collect();
    SimpleGraph::from_edges(n, &edges)
}

/// All arcs leaving `center`.
pub fn out_star(center: usize, n: usize) -> Result<DirectedGraph> {
    check_n(n)?;
    if center >= n {
        return invalid(format!("vertex {center} out of range for n={n}"));
    }
    let arcs: Vec<_> = (0..n)
        .filter(|&j| j != center)
        .map(|j| (center, j))
        .collect();
    DirectedGraph::from_arcs(n, &arcs)
}

/// All edges between `set` and its complement.
pub fn edge_cut(set: u32, n: usize) -> Result<SimpleGraph> {
    check_n(n)?;
    let mut bits = 0u128;
    for j in 0..n {
        for i in 0..j {
            if (set >> i & 1) != (set >> j & 1) {
                bits |= 1 << slot_unchecked(i, j);
            }
        }
    }
    SimpleGraph::from_mask(n, bits)
}

/// A subspace of GF(2)^dim in reduced row-echelon form.
///
/// Each basis row has a distinct pivot (its lowest set coordinate) and every
/// other row is zero at that pivot. Rows are sorted by pivot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<BitVector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BitVector] {
        &self.basis
    }

    /// Clears every pivot coordinate; two vectors share a coset iff their
    /// reductions agree.
    pub fn reduce(&self, v: &BitVector) -> BitVector {
        let mut r = *v;
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r.get(p) {
                r = r.xor(row);
            }
        }
        r
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// The span element with coefficient bits `coeffs` over the basis; this
    /// index is the canonical order of span elements.
    pub fn element(&self, coeffs: u64) -> BitVector {
        let mut v = BitVector::zero();
        let mut c = coeffs;
        while c != 0 {
            let t = c.trailing_zeros() as usize;
            c &= c - 1;
            v = v.xor(&self.basis[t]);
        }
        v
    }

    fn enumerable(&self) -> Result<u64> {
        if self.rank() > MAX_ENUMERATED_RANK {
            return Err(Error::Capacity(format!(
                "span of rank {} exceeds the enumeration guard {MAX_ENUMERATED_RANK}",
                self.rank()
            )));
        }
        Ok(1u64 << self.rank())
    }
}

/// Row-reduces `generators`; dependent generators are absorbed.
pub fn span_of(generators: &[BitVector], ambient_dim: usize) -> Result<Subspace> {
    if ambient_dim > MAX_DIM {
        return invalid(format!("ambient dimension {ambient_dim} exceeds {MAX_DIM}"));
    }
    let mut basis: Vec<BitVector> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for g in generators {
        if !g.fits(ambient_dim) {
            return invalid("generator has coordinates beyond the ambient dimension");
        }
        let mut r = *g;
        for (row, &p) in basis.iter().zip(&pivots) {
            if r.get(p) {
                r = r.xor(row);
            }
        }
        if let Some(p) = r.lowest() {
            for row in basis.iter_mut() {
                if row.get(p) {
                    *row = row.xor(&r);
                }
            }
            basis.push(r);
            pivots.push(p);
        }
    }
    let mut rows: Vec<_> = pivots.into_iter().zip(basis).collect();
    rows.sort_by_key(|(p, _)| *p);
    let (pivots, basis) = rows.into_iter().unzip();
    Ok(Subspace {
        ambient_dim,
        basis,
        pivots,
    })
}

/// Span of the stars at `0..n-1` (all but the last vertex).
pub fn star_span(n: usize) -> Result<Subspace> {
    let gens = (0..n.saturating_sub(1))
        .map(|i| star(i, n).map(|s| s.to_vector()))
        .collect::<Result<Vec<_>>>()?;
    span_of(&gens, SimpleGraph::ambient_dim(n))
}

/// Span of the out-stars at every vertex.
pub fn out_star_span(n: usize) -> Result<Subspace> {
    let gens = (0..n)
        .map(|i| out_star(i, n).map(|s| s.to_vector()))
        .collect::<Result<Vec<_>>>()?;
    span_of(&gens, DirectedGraph::ambient_dim(n))
}

/// Per-element evidence of the cut property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutWitness {
    /// Span element as a digit string.
    pub element: String,
    /// Undirected: the side of a disconnecting bipartition of the complement
    /// containing vertex 0. Directed: the first vertex set whose full out-cut
    /// the element contains.
    pub side: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutCertificate {
    pub valid: bool,
    pub rank: usize,
    pub ambient_dim: usize,
    pub elements_checked: u64,
    /// Smallest failing element in coefficient order.
    pub failing_element: Option<String>,
    /// Present when witnesses were requested and the certificate is valid.
    pub witnesses: Option<Vec<CutWitness>>,
}

fn vertex_list(set: u32) -> Vec<usize> {
    (0..32).filter(|v| set >> v & 1 == 1).collect()
}

fn complement_side(h: &SimpleGraph) -> Option<u32> {
    let rest = h.complement();
    if component_count(&rest) == 1 {
        return None;
    }
    let adj = rest.out_neighbours();
    let mut side = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & !side;
        side |= new;
        frontier |= new;
    }
    Some(side)
}

fn first_out_cut(h: &DirectedGraph) -> Option<u32> {
    let n = h.n();
    let adj = h.out_neighbours();
    (1u32..(1 << n) - 1).find(|&set| out_cut_contained(&adj, n, set))
}

fn run_certificate<F>(
    s: &Subspace,
    dim: usize,
    want_witnesses: bool,
    check: F,
) -> Result<CutCertificate>
where
    F: Fn(&BitVector) -> Option<u32> + Sync,
{
    let total = s.enumerable()?;
    let failing = (1..total)
        .into_par_iter()
        .find_first(|&c| check(&s.element(c)).is_none());
    let witnesses = (want_witnesses && failing.is_none()).then(|| {
        (1..total)
            .into_par_iter()
            .map(|c| {
                let e = s.element(c);
                CutWitness {
                    element: e.to_digits(dim),
                    side: vertex_list(check(&e).expect("checked above")),
                }
            })
            .collect()
    });
    Ok(CutCertificate {
        valid: failing.is_none(),
        rank: s.rank(),
        ambient_dim: s.ambient_dim(),
        elements_checked: total - 1,
        failing_element: failing.map(|c| s.element(c).to_digits(dim)),
        witnesses,
    })
}

/// Checks that `K_n - H` is disconnected for every nonzero `H` in `s`.
pub fn verify_undirected_cut_property(
    s: &Subspace,
    n: usize,
    want_witnesses: bool,
) -> Result<CutCertificate> {
    check_n(n)?;
    let dim = SimpleGraph::ambient_dim(n);
    if s.ambient_dim() != dim {
        return invalid(format!(
            "subspace dimension {} is not C({n},2)",
            s.ambient_dim()
        ));
    }
    run_certificate(s, dim, want_witnesses, |v| {
        complement_side(&SimpleGraph::from_vector(n, v))
    })
}

/// Checks that every nonzero `H` in `s` contains all arcs from some nonempty
/// proper vertex set to its complement. Witness sets are searched in
/// increasing bit-mask order.
pub fn verify_directed_cut_property(
    s: &Subspace,
    n: usize,
    want_witnesses: bool,
) -> Result<CutCertificate> {
    check_n(n)?;
    let dim = DirectedGraph::ambient_dim(n);
    if s.ambient_dim() != dim {
        return invalid(format!(
            "subspace dimension {} is not 2*C({n},2)",
            s.ambient_dim()
        ));
    }
    run_certificate(s, dim, want_witnesses, |v| {
        first_out_cut(&DirectedGraph::from_vector(n, v))
    })
}

/// For every nonempty set `T` of centres, the sum of the out-stars in `T`
/// contains the full out-cut of `{i}` for each `i` in `T`.
pub fn out_star_shortcut_holds(n: usize) -> Result<bool> {
    check_n(n)?;
    if n > MAX_ENUMERATED_RANK {
        return Err(Error::Capacity(format!("2^{n} out-star sums")));
    }
    let stars = (0..n).map(|i| out_star(i, n)).collect::<Result<Vec<_>>>()?;
    Ok((1u32..1 << n).into_par_iter().all(|t| {
        let sum = (0..n)
            .filter(|i| t >> i & 1 == 1)
            .fold(DirectedGraph::empty(n).unwrap(), |acc, i| {
                acc.xor(&stars[i])
            });
        let adj = sum.out_neighbours();
        (0..n)
            .filter(|i| t >> i & 1 == 1)
            .all(|i| out_cut_contained(&adj, n, 1 << i))
    }))
}

/// `2^(dim - rank)`: the number of cosets.
pub fn coset_bound(s: &Subspace) -> BigUint {
    BigUint::from(2u32).pow((s.ambient_dim() - s.rank()) as u32)
}

/// True iff no two distinct members lie in the same coset of `s`.
pub fn verify_coset_disjointness<G: Gf2Graph>(family: &Family<G>, s: &Subspace) -> Result<bool> {
    if s.ambient_dim() != G::ambient_dim(family.n()) {
        return invalid("subspace and family live in different spaces");
    }
    let mut seen = HashSet::with_capacity(family.len());
    Ok(family
        .members()
        .iter()
        .all(|g| seen.insert(s.reduce(&g.to_vector()))))
}

fn trit_add(a: &OrientedGraph, b: &OrientedGraph, times: u8) -> OrientedGraph {
    let coords: Vec<u8> = a
        .coordinates()
        .iter()
        .zip(b.coordinates())
        .map(|(&x, y)| (x + times * y) % 3)
        .collect();
    OrientedGraph::from_coordinates(a.n(), &coords).unwrap()
}

/// Outcome of [`explore_gf3_cut_span`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gf3Exploration {
    pub generators: usize,
    /// Distinct span elements, `3^dimension`.
    pub span_size: u64,
    pub dimension: u32,
    /// Nonzero elements lacking a full directed out-cut.
    pub elements_without_cut: u64,
    /// Smallest such element in canonical order.
    pub first_without_cut: Option<String>,
}

/// Enumerates the GF(3) span of oriented graphs, where arcs in opposite
/// directions cancel and equal arcs add to the reversed arc, and reports the
/// elements that contain no full directed out-cut. Exploration aid only.
pub fn explore_gf3_cut_span(generators: &[OrientedGraph]) -> Result<Gf3Exploration> {
    let Some(first) = generators.first() else {
        return invalid("need at least one generator");
    };
    let n = first.n();
    if generators.iter().any(|g| g.n() != n) {
        return invalid("generators live on different vertex counts");
    }
    if generators.len() > 13 {
        return Err(Error::Capacity(format!(
            "3^{} combinations",
            generators.len()
        )));
    }
    let mut elements: HashSet<OrientedGraph> = HashSet::new();
    elements.insert(OrientedGraph::empty(n)?);
    for g in generators {
        let current: Vec<_> = elements.iter().copied().collect();
        for e in current {
            elements.insert(trit_add(&e, g, 1));
            elements.insert(trit_add(&e, g, 2));
        }
    }
    let mut missing: Vec<_> = elements
        .iter()
        .filter(|e| e.size() > 0 && first_out_cut(&e.to_directed()).is_none())
        .copied()
        .collect();
    missing.sort_unstable();
    let span_size = elements.len() as u64;
    let mut dimension = 0;
    while 3u64.pow(dimension) < span_size {
        dimension += 1;
    }
    Ok(Gf3Exploration {
        generators: generators.len(),
        span_size,
        dimension,
        elements_without_cut: missing.len() as u64,
        first_without_cut: missing.first().map(|g| g.to_digits()),
    })
}
