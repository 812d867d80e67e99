//! Generators for the extremal and conjectured-extremal families.
//!
//! Every generator has a counting twin (`*_count`) that returns the family
//! size from its structure without materializing members, so sizes can be
//! checked well beyond the materialization guard.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{invalid, Error, Result};
use crate::family::Family;
use crate::graph::{full_mask, pair_count, Graph, SimpleGraph};

/// Largest family any generator materializes.
pub const MATERIALIZE_LIMIT: u64 = 1 << 22;

fn guard(size: &BigUint) -> Result<()> {
    if *size > BigUint::from(MATERIALIZE_LIMIT) {
        return Err(Error::Capacity(format!(
            "family of size {size} exceeds the materialization limit {MATERIALIZE_LIMIT}"
        )));
    }
    Ok(())
}

/// Number of graphs of `h`'s kind that contain `h`.
pub fn upset_count<G: Graph>(h: &G) -> BigUint {
    let free = h.coordinates().iter().filter(|&&c| c == 0).count() as u32;
    BigUint::from(G::alphabet()).pow(free)
}

/// All graphs containing `h`. For oriented graphs every arc of `h` must be
/// present with its direction.
pub fn upset_of<G: Graph>(h: &G) -> Result<Family<G>> {
    guard(&upset_count(h))?;
    let base = h.coordinates();
    let free: Vec<usize> = (0..base.len()).filter(|&p| base[p] == 0).collect();
    let q = G::alphabet();
    let mut members = Vec::new();
    let mut digits = vec![0u8; free.len()];
    loop {
        let mut coords = base.clone();
        for (&p, &d) in free.iter().zip(&digits) {
            coords[p] = d;
        }
        members.push(G::from_coordinates(h.n(), &coords)?);
        // mixed-radix increment
        let mut pos = 0;
        while pos < digits.len() && digits[pos] + 1 == q {
            digits[pos] = 0;
            pos += 1;
        }
        if pos == digits.len() {
            break;
        }
        digits[pos] += 1;
    }
    Family::new(h.n(), members)
}

fn check_order(order: &[usize], n: usize) -> Result<()> {
    if n < 3 {
        return invalid(format!("cycles need n >= 3, got n={n}"));
    }
    let mut seen = vec![false; n];
    if order.len() != n {
        return invalid(format!("cycle order must list all {n} vertices"));
    }
    for &v in order {
        if v >= n || seen[v] {
            return invalid(format!(
                "cycle order {order:?} is not a permutation of 0..{n}"
            ));
        }
        seen[v] = true;
    }
    Ok(())
}

/// The simple cycle visiting `order` in sequence.
pub fn cycle_graph(order: &[usize], n: usize) -> Result<SimpleGraph> {
    check_order(order, n)?;
    let edges: Vec<_> = (0..n).map(|t| (order[t], order[(t + 1) % n])).collect();
    SimpleGraph::from_edges(n, &edges)
}

/// Graphs containing the Hamilton cycle through `order`.
pub fn hamilton_cycle_family(order: &[usize], n: usize) -> Result<Family<SimpleGraph>> {
    upset_of(&cycle_graph(order, n)?)
}

pub fn hamilton_cycle_count(n: usize) -> Result<BigUint> {
    Ok(upset_count(&cycle_graph(&identity(n), n)?))
}

pub(crate) fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// Graphs that contain, for every block, all edges of the block except at
/// most one. Blocks must be edge-disjoint and nonempty.
pub fn all_but_one_of_each(n: usize, blocks: &[SimpleGraph]) -> Result<Family<SimpleGraph>> {
    guard(&all_but_one_count(n, blocks)?)?;
    let mut used = 0u128;
    for b in blocks {
        used |= b.bits();
    }
    let mut patterns = vec![0u128];
    for b in blocks {
        let bits = b.bits();
        let mut choices = vec![bits];
        let mut e = bits;
        while e != 0 {
            let low = e & e.wrapping_neg();
            e &= e - 1;
            choices.push(bits & !low);
        }
        patterns = patterns
            .iter()
            .flat_map(|p| choices.iter().map(move |c| p | c))
            .collect();
    }
    let free = full_mask(n) & !used;
    let mut members = Vec::with_capacity(patterns.len() << free.count_ones());
    for p in patterns {
        let mut sub = 0u128;
        loop {
            members.push(SimpleGraph::from_mask(n, p | sub)?);
            sub = sub.wrapping_sub(free) & free;
            if sub == 0 {
                break;
            }
        }
    }
    Family::new(n, members)
}

/// Size of [`all_but_one_of_each`]: `∏ (|block| + 1) · 2^(free slots)`.
pub fn all_but_one_count(n: usize, blocks: &[SimpleGraph]) -> Result<BigUint> {
    let mut used = 0u128;
    let mut count = BigUint::one();
    for b in blocks {
        if b.n() != n {
            return invalid("block lives on a different vertex count");
        }
        if b.bits() == 0 {
            return invalid("blocks must be nonempty");
        }
        if used & b.bits() != 0 {
            return invalid("blocks must be edge-disjoint");
        }
        used |= b.bits();
        count *= b.size() as u32 + 1;
    }
    let free = pair_count(n) as u32 - used.count_ones();
    Ok(count * BigUint::from(2u32).pow(free))
}

/// Graphs containing at least `n - 1` edges of the cycle through `order`.
pub fn cycle_minus_one_family(order: &[usize], n: usize) -> Result<Family<SimpleGraph>> {
    all_but_one_of_each(n, &[cycle_graph(order, n)?])
}

pub fn cycle_minus_one_count(n: usize) -> Result<BigUint> {
    all_but_one_count(n, &[cycle_graph(&identity(n), n)?])
}

/// The cycles of a flower: all pass through vertex 0, cycle `t` continues
/// through the next `lengths[t] - 1` labels in increasing order.
pub fn flower_cycles(lengths: &[usize], n: usize) -> Result<Vec<SimpleGraph>> {
    if lengths.is_empty() {
        return invalid("a flower needs at least one cycle");
    }
    if let Some(l) = lengths.iter().find(|&&l| l < 3) {
        return invalid(format!("cycle length {l} is below 3"));
    }
    let petals: usize = lengths.iter().map(|l| l - 1).sum();
    if petals + 1 != n {
        return invalid(format!(
            "cycle lengths {lengths:?} cover {} vertices, not n={n}",
            petals + 1
        ));
    }
    let mut next = 1;
    let mut cycles = Vec::with_capacity(lengths.len());
    for &len in lengths {
        let mut verts = vec![0];
        verts.extend(next..next + len - 1);
        next += len - 1;
        let edges: Vec<_> = (0..len).map(|t| (verts[t], verts[(t + 1) % len])).collect();
        cycles.push(SimpleGraph::from_edges(n, &edges)?);
    }
    Ok(cycles)
}

/// Graphs missing at most one edge of each flower cycle.
pub fn flower_family(lengths: &[usize], n: usize) -> Result<Family<SimpleGraph>> {
    all_but_one_of_each(n, &flower_cycles(lengths, n)?)
}

pub fn flower_count(lengths: &[usize], n: usize) -> Result<BigUint> {
    all_but_one_count(n, &flower_cycles(lengths, n)?)
}

/// Two cycles of lengths as equal as possible sharing vertex 0, or `None`
/// when `n` is too small for two cycles.
pub fn balanced_two_flower(n: usize) -> Option<Vec<usize>> {
    if n < 5 {
        return None;
    }
    // l1 + l2 = n + 1
    let short = n.div_ceil(2);
    Some(vec![short, n + 1 - short])
}

/// `(fixed edges, the three optional edges)` of the Hamilton-path family
/// that is not an upset: a path through `2..n`, the edge `01`, and two of
/// `02`, `12`, `0(n-1)`.
pub fn noneq_hampath_parts(n: usize) -> Result<(SimpleGraph, [(usize, usize); 3])> {
    if n < 4 {
        return invalid(format!("the family needs n >= 4, got n={n}"));
    }
    let mut edges: Vec<_> = (2..n - 1).map(|v| (v, v + 1)).collect();
    edges.push((0, 1));
    Ok((
        SimpleGraph::from_edges(n, &edges)?,
        [(0, 2), (1, 2), (0, n - 1)],
    ))
}

/// Graphs containing the path `2-3-..-(n-1)`, the edge `01` and at least two
/// of `02`, `12`, `0(n-1)`. Hamilton-path-intersecting with the same size as a
/// spanning-tree upset, without being an upset.
pub fn hamilton_path_noneq_family(n: usize) -> Result<Family<SimpleGraph>> {
    guard(&hamilton_path_noneq_count(n)?)?;
    let (fixed, special) = noneq_hampath_parts(n)?;
    let special_bits: Vec<u128> = special
        .iter()
        .map(|&(i, j)| SimpleGraph::from_edges(n, &[(i, j)]).map(|g| g.bits()))
        .collect::<Result<_>>()?;
    let all_special = special_bits.iter().fold(0, |a, b| a | b);
    let free = full_mask(n) & !fixed.bits() & !all_special;
    let mut members = Vec::new();
    for pick in 0u32..8 {
        if pick.count_ones() < 2 {
            continue;
        }
        let chosen = (0..3)
            .filter(|t| pick >> t & 1 == 1)
            .fold(0u128, |a, t| a | special_bits[t]);
        let mut sub = 0u128;
        loop {
            members.push(SimpleGraph::from_mask(n, fixed.bits() | chosen | sub)?);
            sub = sub.wrapping_sub(free) & free;
            if sub == 0 {
                break;
            }
        }
    }
    Family::new(n, members)
}

pub fn hamilton_path_noneq_count(n: usize) -> Result<BigUint> {
    let (fixed, _) = noneq_hampath_parts(n)?;
    let free = pair_count(n) as u32 - fixed.size() as u32 - 3;
    Ok(BigUint::from(4u32) * BigUint::from(2u32).pow(free))
}
