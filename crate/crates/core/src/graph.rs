//! Bit-level encodings of simple, oriented and directed graphs on `0..n`.
//!
//! Every unordered pair `{i, j}` with `i < j` owns one *edge slot*, numbered in
//! colex order: `slot = j * (j - 1) / 2 + i`. The three graph kinds differ only
//! in what they store per slot:
//!
//! | kind     | per slot                         | digit string                     |
//! |----------|----------------------------------|----------------------------------|
//! | simple   | one bit                          | `C(n,2)` digits over `0,1`       |
//! | oriented | one trit (0 absent, 1 i→j, 2 j→i)| `C(n,2)` digits over `0,1,2`     |
//! | directed | two bits (i→j, j→i)              | `2*C(n,2)` digits over `0,1`     |
//!
//! Digit strings list slots left to right starting from slot 0. For directed
//! graphs position `2*slot` holds the low→high arc and `2*slot + 1` the
//! high→low arc. Families are ordered by the numeric value of these strings.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Largest vertex count any predicate accepts.
pub const MAX_VERTICES: usize = 16;

/// Number of unordered pairs on `n` vertices.
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        return invalid(format!("vertex count {n} outside 1..={MAX_VERTICES}"));
    }
    Ok(())
}

/// Colex slot of the pair `{i, j}`; the order of `i` and `j` does not matter
/// but they must differ.
pub fn edge_slot(i: usize, j: usize, n: usize) -> Result<usize> {
    check_n(n)?;
    if i == j {
        return invalid(format!("loop at vertex {i} has no edge slot"));
    }
    if i >= n || j >= n {
        return invalid(format!("pair ({i},{j}) out of range for n={n}"));
    }
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    Ok(slot_unchecked(lo, hi))
}

#[inline]
pub(crate) const fn slot_unchecked(lo: usize, hi: usize) -> usize {
    hi * (hi - 1) / 2 + lo
}

/// Inverse of [`edge_slot`]; always returns `(i, j)` with `i < j`.
pub fn slot_edge(slot: usize, n: usize) -> Result<(usize, usize)> {
    check_n(n)?;
    if slot >= pair_count(n) {
        return invalid(format!("slot {slot} out of range for n={n}"));
    }
    Ok(slot_pair(slot))
}

#[inline]
pub(crate) fn slot_pair(slot: usize) -> (usize, usize) {
    let mut hi = 1;
    while slot_unchecked(0, hi + 1) <= slot {
        hi += 1;
    }
    (slot - slot_unchecked(0, hi), hi)
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u128 {
    let m = pair_count(n);
    if m == 128 {
        u128::MAX
    } else {
        (1u128 << m) - 1
    }
}

/// Which of the three encodings a graph or family uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Simple,
    Oriented,
    Directed,
}

impl GraphKind {
    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Simple => "simple",
            GraphKind::Oriented => "oriented",
            GraphKind::Directed => "directed",
        }
    }

    /// Length of the digit string for `n` vertices.
    pub fn digit_len(self, n: usize) -> usize {
        match self {
            GraphKind::Directed => 2 * pair_count(n),
            _ => pair_count(n),
        }
    }

    /// Number of distinct graphs of this kind on `n` vertices.
    pub fn universe_size(self, n: usize) -> BigUint {
        let m = pair_count(n) as u32;
        match self {
            GraphKind::Simple => BigUint::from(2u32).pow(m),
            GraphKind::Oriented => BigUint::from(3u32).pow(m),
            GraphKind::Directed => BigUint::from(4u32).pow(m),
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "simple" | "undirected" => Ok(GraphKind::Simple),
            "oriented" => Ok(GraphKind::Oriented),
            "directed" => Ok(GraphKind::Directed),
            _ => invalid(format!("unknown graph kind '{s}'")),
        }
    }
}

/// Operations shared by the three encodings.
pub trait Graph: Copy + Eq + Ord + Hash + fmt::Debug + Send + Sync + 'static {
    const KIND: GraphKind;

    fn n(&self) -> usize;

    fn empty(n: usize) -> Result<Self>;

    /// Edges (simple) or arcs (oriented, directed) common to both graphs.
    fn intersect(&self, other: &Self) -> Result<Self>;

    fn is_subgraph_of(&self, other: &Self) -> bool;

    /// Number of edges or arcs.
    fn size(&self) -> usize;

    /// Out-neighbourhood of every vertex as a bit mask (symmetric for
    /// simple graphs).
    fn out_neighbours(&self) -> [u32; MAX_VERTICES];

    /// Relabel vertex `v` as `perm[v]`.
    fn permute(&self, perm: &[usize]) -> Self;

    /// Per-slot coordinate values: bits for simple graphs, trits for oriented
    /// graphs, and one bit per ordered arc position for directed graphs.
    fn coordinates(&self) -> Vec<u8>;

    /// Inverse of [`Graph::coordinates`].
    fn from_coordinates(n: usize, coords: &[u8]) -> Result<Self>;

    /// Alphabet size of [`Graph::coordinates`].
    fn alphabet() -> u8;

    /// The digit-string serialization.
    fn to_digits(&self) -> String {
        self.coordinates()
            .into_iter()
            .map(|d| char::from(b'0' + d))
            .collect()
    }

    /// Parses a digit string, reporting the offending position on failure.
    fn from_digits(s: &str, n: usize) -> Result<Self> {
        check_n(n)?;
        let want = Self::KIND.digit_len(n);
        let q = Self::alphabet();
        let mut coords = Vec::with_capacity(want);
        for (position, ch) in s.chars().enumerate() {
            let d = ch.to_digit(10).map(|d| d as u8).filter(|&d| d < q);
            match d {
                Some(d) => coords.push(d),
                None => {
                    return Err(Error::Parse {
                        position,
                        message: format!(
                            "'{ch}' is not a digit below {q} for a {} graph",
                            Self::KIND
                        ),
                    })
                }
            }
        }
        if coords.len() != want {
            return Err(Error::Parse {
                position: coords.len().min(want),
                message: format!(
                    "expected {want} digits for a {} graph on {n} vertices, found {}",
                    Self::KIND,
                    coords.len()
                ),
            });
        }
        Self::from_coordinates(n, &coords)
    }

    /// Every graph of this kind on `n` vertices, in canonical order.
    fn enumerate_all(n: usize) -> Result<Vec<Self>>;
}

#[inline]
fn cmp_first_slot(a: u128, b: u128) -> Option<Ordering> {
    let diff = a ^ b;
    if diff == 0 {
        return None;
    }
    let low = diff & diff.wrapping_neg();
    Some(if a & low != 0 {
        Ordering::Greater
    } else {
        Ordering::Less
    })
}

// ---------------------------------------------------------------------------
// simple graphs

/// A spanning subgraph of `K_n`, one bit per edge slot.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: u8,
    bits: u128,
}

impl SimpleGraph {
    pub fn from_mask(n: usize, bits: u128) -> Result<Self> {
        check_n(n)?;
        if bits & !full_mask(n) != 0 {
            return invalid(format!("mask has bits beyond C({n},2)"));
        }
        Ok(SimpleGraph { n: n as u8, bits })
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(SimpleGraph {
            n: n as u8,
            bits: full_mask(n),
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_n(n)?;
        let mut bits = 0u128;
        for &(i, j) in edges {
            bits |= 1u128 << edge_slot(i, j, n)?;
        }
        Ok(SimpleGraph { n: n as u8, bits })
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && i < self.n() && j < self.n() && {
            let (lo, hi) = if i < j { (i, j) } else { (j, i) };
            self.bits >> slot_unchecked(lo, hi) & 1 == 1
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        BitIter(self.bits).map(slot_pair)
    }

    /// Symmetric difference; the vector-space sum over GF(2).
    pub fn xor(&self, other: &Self) -> Self {
        SimpleGraph {
            n: self.n,
            bits: self.bits ^ other.bits,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        SimpleGraph {
            n: self.n,
            bits: self.bits | other.bits,
        }
    }

    pub fn complement(&self) -> Self {
        SimpleGraph {
            n: self.n,
            bits: !self.bits & full_mask(self.n()),
        }
    }
}

impl Ord for SimpleGraph {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| cmp_first_slot(self.bits, other.bits).unwrap_or(Ordering::Equal))
    }
}

impl PartialOrd for SimpleGraph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Simple[n={}]({})", self.n, self.to_digits())
    }
}

impl Graph for SimpleGraph {
    const KIND: GraphKind = GraphKind::Simple;

    fn n(&self) -> usize {
        self.n as usize
    }

    fn empty(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(SimpleGraph {
            n: n as u8,
            bits: 0,
        })
    }

    fn intersect(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return invalid(format!("vertex counts differ: {} vs {}", self.n, other.n));
        }
        Ok(SimpleGraph {
            n: self.n,
            bits: self.bits & other.bits,
        })
    }

    fn is_subgraph_of(&self, other: &Self) -> bool {
        self.n == other.n && self.bits & !other.bits == 0
    }

    fn size(&self) -> usize {
        self.bits.count_ones() as usize
    }

    fn out_neighbours(&self) -> [u32; MAX_VERTICES] {
        let mut adj = [0u32; MAX_VERTICES];
        for (i, j) in self.edges() {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        adj
    }

    fn permute(&self, perm: &[usize]) -> Self {
        let mut bits = 0u128;
        for (i, j) in self.edges() {
            let (a, b) = (perm[i], perm[j]);
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            bits |= 1u128 << slot_unchecked(lo, hi);
        }
        SimpleGraph { n: self.n, bits }
    }

    fn coordinates(&self) -> Vec<u8> {
        (0..pair_count(self.n()))
            .map(|s| (self.bits >> s & 1) as u8)
            .collect()
    }

    fn from_coordinates(n: usize, coords: &[u8]) -> Result<Self> {
        check_n(n)?;
        if coords.len() != pair_count(n) {
            return invalid(format!("expected {} coordinates", pair_count(n)));
        }
        let mut bits = 0u128;
        for (s, &c) in coords.iter().enumerate() {
            match c {
                0 => {}
                1 => bits |= 1u128 << s,
                _ => return invalid(format!("coordinate {s} has value {c} > 1")),
            }
        }
        Ok(SimpleGraph { n: n as u8, bits })
    }

    fn alphabet() -> u8 {
        2
    }

    fn enumerate_all(n: usize) -> Result<Vec<Self>> {
        check_n(n)?;
        let m = pair_count(n);
        if m > 24 {
            return Err(Error::Capacity(format!("2^{m} simple graphs")));
        }
        let mut all: Vec<Self> = (0..1u128 << m)
            .map(|bits| SimpleGraph { n: n as u8, bits })
            .collect();
        all.sort_unstable();
        Ok(all)
    }
}

// ---------------------------------------------------------------------------
// oriented and directed graphs share the (forward, backward) layout

/// An oriented graph: at most one arc per vertex pair. `forward` marks slots
/// holding the low→high arc and `backward` the high→low arc.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrientedGraph {
    n: u8,
    forward: u128,
    backward: u128,
}

/// A directed graph where both arcs of a pair may be present.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct DirectedGraph {
    n: u8,
    forward: u128,
    backward: u128,
}

fn arc_bits(n: usize, arcs: &[(usize, usize)]) -> Result<(u128, u128)> {
    let (mut fwd, mut bwd) = (0u128, 0u128);
    for &(u, v) in arcs {
        let s = edge_slot(u, v, n)?;
        if u < v {
            fwd |= 1 << s;
        } else {
            bwd |= 1 << s;
        }
    }
    Ok((fwd, bwd))
}

fn arc_out_neighbours(forward: u128, backward: u128) -> [u32; MAX_VERTICES] {
    let mut adj = [0u32; MAX_VERTICES];
    for (i, j) in BitIter(forward).map(slot_pair) {
        adj[i] |= 1 << j;
    }
    for (i, j) in BitIter(backward).map(slot_pair) {
        adj[j] |= 1 << i;
    }
    adj
}

fn permute_arcs(forward: u128, backward: u128, perm: &[usize]) -> (u128, u128) {
    let (mut f, mut b) = (0u128, 0u128);
    let mut put = |u: usize, v: usize| {
        let (pu, pv) = (perm[u], perm[v]);
        if pu < pv {
            f |= 1 << slot_unchecked(pu, pv);
        } else {
            b |= 1 << slot_unchecked(pv, pu);
        }
    };
    for (i, j) in BitIter(forward).map(slot_pair) {
        put(i, j);
    }
    for (i, j) in BitIter(backward).map(slot_pair) {
        put(j, i);
    }
    (f, b)
}

macro_rules! arc_graph_common {
    ($ty:ident) => {
        impl $ty {
            pub fn forward(&self) -> u128 {
                self.forward
            }

            pub fn backward(&self) -> u128 {
                self.backward
            }

            pub fn has_arc(&self, u: usize, v: usize) -> bool {
                if u == v || u >= self.n() || v >= self.n() {
                    return false;
                }
                if u < v {
                    self.forward >> slot_unchecked(u, v) & 1 == 1
                } else {
                    self.backward >> slot_unchecked(v, u) & 1 == 1
                }
            }

            /// All arcs `(tail, head)`, forward slots first.
            pub fn arcs(&self) -> Vec<(usize, usize)> {
                let mut out: Vec<_> = BitIter(self.forward).map(slot_pair).collect();
                out.extend(BitIter(self.backward).map(slot_pair).map(|(i, j)| (j, i)));
                out
            }
        }

        impl PartialOrd for $ty {
            fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
                Some(self.cmp(other))
            }
        }

        impl fmt::Debug for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}[n={}]({})", stringify!($ty), self.n, self.to_digits())
            }
        }
    };
}

arc_graph_common!(OrientedGraph);
arc_graph_common!(DirectedGraph);

impl OrientedGraph {
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        check_n(n)?;
        let (forward, backward) = arc_bits(n, arcs)?;
        if forward & backward != 0 {
            return invalid("an oriented graph cannot hold both arcs of a pair");
        }
        Ok(OrientedGraph {
            n: n as u8,
            forward,
            backward,
        })
    }

    pub fn from_masks(n: usize, forward: u128, backward: u128) -> Result<Self> {
        check_n(n)?;
        if (forward | backward) & !full_mask(n) != 0 {
            return invalid(format!("mask has bits beyond C({n},2)"));
        }
        if forward & backward != 0 {
            return invalid("an oriented graph cannot hold both arcs of a pair");
        }
        Ok(OrientedGraph {
            n: n as u8,
            forward,
            backward,
        })
    }

    /// Trit at `slot`: 0 absent, 1 low→high, 2 high→low.
    pub fn trit(&self, slot: usize) -> u8 {
        (self.forward >> slot & 1) as u8 + 2 * (self.backward >> slot & 1) as u8
    }

    pub fn to_directed(&self) -> DirectedGraph {
        DirectedGraph {
            n: self.n,
            forward: self.forward,
            backward: self.backward,
        }
    }
}

impl Ord for OrientedGraph {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            let diff = (self.forward ^ other.forward) | (self.backward ^ other.backward);
            if diff == 0 {
                return Ordering::Equal;
            }
            let s = diff.trailing_zeros() as usize;
            self.trit(s).cmp(&other.trit(s))
        })
    }
}

impl Graph for OrientedGraph {
    const KIND: GraphKind = GraphKind::Oriented;

    fn n(&self) -> usize {
        self.n as usize
    }

    fn empty(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(OrientedGraph {
            n: n as u8,
            forward: 0,
            backward: 0,
        })
    }

    fn intersect(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return invalid(format!("vertex counts differ: {} vs {}", self.n, other.n));
        }
        Ok(OrientedGraph {
            n: self.n,
            forward: self.forward & other.forward,
            backward: self.backward & other.backward,
        })
    }

    fn is_subgraph_of(&self, other: &Self) -> bool {
        self.n == other.n
            && self.forward & !other.forward == 0
            && self.backward & !other.backward == 0
    }

    fn size(&self) -> usize {
        (self.forward.count_ones() + self.backward.count_ones()) as usize
    }

    fn out_neighbours(&self) -> [u32; MAX_VERTICES] {
        arc_out_neighbours(self.forward, self.backward)
    }

    fn permute(&self, perm: &[usize]) -> Self {
        let (forward, backward) = permute_arcs(self.forward, self.backward, perm);
        OrientedGraph {
            n: self.n,
            forward,
            backward,
        }
    }

    fn coordinates(&self) -> Vec<u8> {
        (0..pair_count(self.n())).map(|s| self.trit(s)).collect()
    }

    fn from_coordinates(n: usize, coords: &[u8]) -> Result<Self> {
        check_n(n)?;
        if coords.len() != pair_count(n) {
            return invalid(format!("expected {} coordinates", pair_count(n)));
        }
        let (mut forward, mut backward) = (0u128, 0u128);
        for (s, &c) in coords.iter().enumerate() {
            match c {
                0 => {}
                1 => forward |= 1 << s,
                2 => backward |= 1 << s,
                _ => return invalid(format!("coordinate {s} has value {c} > 2")),
            }
        }
        Ok(OrientedGraph {
            n: n as u8,
            forward,
            backward,
        })
    }

    fn alphabet() -> u8 {
        3
    }

    fn enumerate_all(n: usize) -> Result<Vec<Self>> {
        check_n(n)?;
        let m = pair_count(n);
        if m > 15 {
            return Err(Error::Capacity(format!("3^{m} oriented graphs")));
        }
        let total = 3usize.pow(m as u32);
        let mut all = Vec::with_capacity(total);
        for mut code in 0..total {
            let (mut forward, mut backward) = (0u128, 0u128);
            for s in 0..m {
                match code % 3 {
                    1 => forward |= 1 << s,
                    2 => backward |= 1 << s,
                    _ => {}
                }
                code /= 3;
            }
            all.push(OrientedGraph {
                n: n as u8,
                forward,
                backward,
            });
        }
        all.sort_unstable();
        Ok(all)
    }
}

impl DirectedGraph {
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        check_n(n)?;
        let (forward, backward) = arc_bits(n, arcs)?;
        Ok(DirectedGraph {
            n: n as u8,
            forward,
            backward,
        })
    }

    pub fn from_masks(n: usize, forward: u128, backward: u128) -> Result<Self> {
        check_n(n)?;
        if (forward | backward) & !full_mask(n) != 0 {
            return invalid(format!("mask has bits beyond C({n},2)"));
        }
        Ok(DirectedGraph {
            n: n as u8,
            forward,
            backward,
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(DirectedGraph {
            n: n as u8,
            forward: full_mask(n),
            backward: full_mask(n),
        })
    }

    pub fn xor(&self, other: &Self) -> Self {
        DirectedGraph {
            n: self.n,
            forward: self.forward ^ other.forward,
            backward: self.backward ^ other.backward,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        DirectedGraph {
            n: self.n,
            forward: self.forward | other.forward,
            backward: self.backward | other.backward,
        }
    }
}

impl Ord for DirectedGraph {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            let diff = (self.forward ^ other.forward) | (self.backward ^ other.backward);
            if diff == 0 {
                return Ordering::Equal;
            }
            let low = diff & diff.wrapping_neg();
            if (self.forward ^ other.forward) & low != 0 {
                cmp_first_slot(self.forward & low, other.forward & low).unwrap()
            } else {
                cmp_first_slot(self.backward & low, other.backward & low).unwrap()
            }
        })
    }
}

impl Graph for DirectedGraph {
    const KIND: GraphKind = GraphKind::Directed;

    fn n(&self) -> usize {
        self.n as usize
    }

    fn empty(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(DirectedGraph {
            n: n as u8,
            forward: 0,
            backward: 0,
        })
    }

    fn intersect(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return invalid(format!("vertex counts differ: {} vs {}", self.n, other.n));
        }
        Ok(DirectedGraph {
            n: self.n,
            forward: self.forward & other.forward,
            backward: self.backward & other.backward,
        })
    }

    fn is_subgraph_of(&self, other: &Self) -> bool {
        self.n == other.n
            && self.forward & !other.forward == 0
            && self.backward & !other.backward == 0
    }

    fn size(&self) -> usize {
        (self.forward.count_ones() + self.backward.count_ones()) as usize
    }

    fn out_neighbours(&self) -> [u32; MAX_VERTICES] {
        arc_out_neighbours(self.forward, self.backward)
    }

    fn permute(&self, perm: &[usize]) -> Self {
        let (forward, backward) = permute_arcs(self.forward, self.backward, perm);
        DirectedGraph {
            n: self.n,
            forward,
            backward,
        }
    }

    fn coordinates(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(2 * pair_count(self.n()));
        for s in 0..pair_count(self.n()) {
            out.push((self.forward >> s & 1) as u8);
            out.push((self.backward >> s & 1) as u8);
        }
        out
    }

    fn from_coordinates(n: usize, coords: &[u8]) -> Result<Self> {
        check_n(n)?;
        if coords.len() != 2 * pair_count(n) {
            return invalid(format!("expected {} coordinates", 2 * pair_count(n)));
        }
        let (mut forward, mut backward) = (0u128, 0u128);
        for (p, &c) in coords.iter().enumerate() {
            let target = if p % 2 == 0 {
                &mut forward
            } else {
                &mut backward
            };
            match c {
                0 => {}
                1 => *target |= 1 << (p / 2),
                _ => return invalid(format!("coordinate {p} has value {c} > 1")),
            }
        }
        Ok(DirectedGraph {
            n: n as u8,
            forward,
            backward,
        })
    }

    fn alphabet() -> u8 {
        2
    }

    fn enumerate_all(n: usize) -> Result<Vec<Self>> {
        check_n(n)?;
        let m = pair_count(n);
        if m > 12 {
            return Err(Error::Capacity(format!("4^{m} directed graphs")));
        }
        let mut all = Vec::with_capacity(1 << (2 * m));
        for forward in 0..1u128 << m {
            for backward in 0..1u128 << m {
                all.push(DirectedGraph {
                    n: n as u8,
                    forward,
                    backward,
                });
            }
        }
        all.sort_unstable();
        Ok(all)
    }
}

/// Iterates the indices of set bits, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u128);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let t = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slot_examples() {
        assert_eq!(edge_slot(0, 1, 4).unwrap(), 0);
        assert_eq!(edge_slot(2, 3, 4).unwrap(), 5);
        assert_eq!(slot_edge(4, 4).unwrap(), (1, 3));
        assert!(edge_slot(2, 2, 4).is_err());
        assert!(edge_slot(0, 4, 4).is_err());
        assert!(slot_edge(6, 4).is_err());
    }

    #[test]
    fn slots_round_trip_up_to_sixteen() {
        for n in 1..=MAX_VERTICES {
            let mut seen = vec![false; pair_count(n)];
            for j in 0..n {
                for i in 0..j {
                    let s = edge_slot(i, j, n).unwrap();
                    assert!(!seen[s]);
                    seen[s] = true;
                    assert_eq!(slot_edge(s, n).unwrap(), (i, j));
                }
            }
            assert!(seen.into_iter().all(|b| b));
        }
    }

    #[test]
    fn intersect_examples() {
        let g = SimpleGraph::from_digits("111000", 4).unwrap();
        let h = SimpleGraph::from_digits("101010", 4).unwrap();
        assert_eq!(g.intersect(&h).unwrap().to_digits(), "101000");

        let a = OrientedGraph::from_digits("120", 3).unwrap();
        let b = OrientedGraph::from_digits("110", 3).unwrap();
        assert_eq!(a.intersect(&b).unwrap().to_digits(), "100");

        let d = DirectedGraph::from_digits("110110", 3).unwrap();
        assert_eq!(d.intersect(&d).unwrap(), d);

        let other = SimpleGraph::empty(5).unwrap();
        assert!(g.intersect(&other).is_err());
    }

    #[test]
    fn trit_direction_convention() {
        // slot 0 is {0,1}; trit 1 means 0→1, trit 2 means 1→0
        let g = OrientedGraph::from_digits("102", 3).unwrap();
        assert!(g.has_arc(0, 1));
        assert!(g.has_arc(2, 1));
        assert_eq!(g.arcs().len(), 2);
        let d = DirectedGraph::from_arcs(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(d.to_digits(), "011000");
    }

    #[test]
    fn parse_errors_name_position() {
        match SimpleGraph::from_digits("1021", 3) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            OrientedGraph::from_digits("12", 3),
            Err(Error::Parse { .. })
        ));
        assert!(OrientedGraph::from_digits("123", 3).is_err());
    }

    #[test]
    fn canonical_order_matches_digit_strings() {
        for all in [
            SimpleGraph::enumerate_all(4)
                .unwrap()
                .iter()
                .map(|g| g.to_digits())
                .collect::<Vec<_>>(),
            OrientedGraph::enumerate_all(3)
                .unwrap()
                .iter()
                .map(|g| g.to_digits())
                .collect(),
            DirectedGraph::enumerate_all(3)
                .unwrap()
                .iter()
                .map(|g| g.to_digits())
                .collect(),
        ] {
            let mut sorted = all.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(all, sorted);
        }
    }

    #[test]
    fn permutation_preserves_size() {
        let g = OrientedGraph::from_arcs(4, &[(0, 1), (1, 2), (3, 2)]).unwrap();
        let p = g.permute(&[3, 2, 1, 0]);
        assert!(p.has_arc(3, 2) && p.has_arc(2, 1) && p.has_arc(0, 1));
        assert_eq!(p.size(), 3);
    }
}
