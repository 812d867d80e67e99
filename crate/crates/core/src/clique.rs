//! Exact maximum-clique search on bitset graphs.
//!
//! Two phases share one graph representation:
//!
//! * [`maximum_clique`] finds the clique number with a colour-bounded
//!   branch and bound (vertices ordered by descending degree, greedy
//!   sequential colouring as the upper bound). Root branches run in
//!   parallel against a shared monotone incumbent.
//! * [`cliques_of_size`] walks cliques in lexicographic order of their
//!   sorted vertex lists and returns either the first clique of a given
//!   size or all of them. Root branches are independent, so results are
//!   identical for any thread count.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;

/// Wall-clock deadline; `None` never expires.
#[derive(Debug, Clone, Copy, Default)]
pub struct Deadline {
    #[cfg(not(target_arch = "wasm32"))]
    at: Option<std::time::Instant>,
}

impl Deadline {
    pub fn none() -> Self {
        Deadline::default()
    }

    /// Deadlines are unavailable on wasm; there the search always runs to
    /// completion.
    #[allow(unused_variables)]
    pub fn after(limit: Option<std::time::Duration>) -> Self {
        #[cfg(not(target_arch = "wasm32"))]
        {
            Deadline {
                at: limit.map(|d| std::time::Instant::now() + d),
            }
        }
        #[cfg(target_arch = "wasm32")]
        {
            Deadline::default()
        }
    }

    pub fn expired(&self) -> bool {
        #[cfg(not(target_arch = "wasm32"))]
        {
            self.at.is_some_and(|t| std::time::Instant::now() >= t)
        }
        #[cfg(target_arch = "wasm32")]
        {
            false
        }
    }
}

/// Undirected graph with one adjacency bitset per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitGraph {
    order: usize,
    words: usize,
    adj: Vec<u64>,
}

#[inline]
fn bit_iter(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(k, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let t = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(64 * k + t)
        })
    })
}

#[inline]
fn first_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .position(|&w| w != 0)
        .map(|k| 64 * k + words[k].trailing_zeros() as usize)
}

#[inline]
fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
fn is_empty(words: &[u64]) -> bool {
    words.iter().all(|&w| w == 0)
}

impl BitGraph {
    pub fn new(order: usize) -> Self {
        let words = order.div_ceil(64).max(1);
        BitGraph {
            order,
            words,
            adj: vec![0; order * words],
        }
    }

    /// Builds a graph from per-vertex rows; `rows[v]` lists neighbours of `v`
    /// as a bitset of `order` bits. Rows must be symmetric.
    pub fn from_rows(order: usize, rows: Vec<Vec<u64>>) -> Self {
        let mut g = BitGraph::new(order);
        for (v, row) in rows.into_iter().enumerate() {
            debug_assert_eq!(row.len(), g.words);
            g.adj[v * g.words..(v + 1) * g.words].copy_from_slice(&row);
        }
        g
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn words(&self) -> usize {
        self.words
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not allowed");
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn neighbours(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        popcount(self.neighbours(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(a, &u)| {
            vertices[a + 1..]
                .iter()
                .all(|&v| u != v && self.has_edge(u, v))
        })
    }

    fn full_set(&self) -> Vec<u64> {
        let mut set = vec![0u64; self.words];
        for v in 0..self.order {
            set[v / 64] |= 1 << (v % 64);
        }
        set
    }

    /// Relabels vertex `perm[v]` as `v`.
    fn reordered(&self, perm: &[usize]) -> BitGraph {
        let mut inverse = vec![0; self.order];
        for (new, &old) in perm.iter().enumerate() {
            inverse[old] = new;
        }
        let mut g = BitGraph::new(self.order);
        for (new, &old) in perm.iter().enumerate() {
            for w in bit_iter(self.neighbours(old)) {
                let nw = inverse[w];
                g.adj[new * g.words + nw / 64] |= 1 << (nw % 64);
            }
        }
        g
    }

    /// Greedy sequential colouring of `set` in index order. Returns the
    /// vertices sorted by colour and the colour (1-based) of each.
    fn colour_sort(&self, set: &[u64]) -> (Vec<usize>, Vec<usize>) {
        let mut uncoloured = set.to_vec();
        let mut verts = Vec::with_capacity(popcount(set));
        let mut colours = Vec::with_capacity(verts.capacity());
        let mut colour = 0;
        let mut avail = vec![0u64; self.words];
        while !is_empty(&uncoloured) {
            colour += 1;
            avail.copy_from_slice(&uncoloured);
            while let Some(v) = first_bit(&avail) {
                uncoloured[v / 64] &= !(1 << (v % 64));
                for (a, n) in avail.iter_mut().zip(self.neighbours(v)) {
                    *a &= !n;
                }
                avail[v / 64] &= !(1 << (v % 64));
                verts.push(v);
                colours.push(colour);
            }
        }
        (verts, colours)
    }

    fn colour_bound(&self, set: &[u64]) -> usize {
        match self.colour_sort(set).1.last() {
            Some(&c) => c,
            None => 0,
        }
    }
}

/// Knobs for [`maximum_clique`].
#[derive(Debug, Clone, Default)]
pub struct CliqueOptions {
    pub deadline: Deadline,
    /// A known clique used as the starting incumbent.
    pub seed: Option<Vec<usize>>,
    /// When set, only cliques containing one of these vertices are explored
    /// at the root. Sound when every maximum clique can be mapped onto one
    /// containing a listed vertex by an automorphism.
    pub root_vertices: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueOutcome {
    /// Best clique found, vertex indices ascending.
    pub clique: Vec<usize>,
    /// False when the deadline stopped the search early.
    pub complete: bool,
    pub nodes: u64,
}

struct Shared<'a> {
    graph: &'a BitGraph,
    best_size: AtomicUsize,
    best: Mutex<Vec<usize>>,
    nodes: AtomicU64,
    timed_out: AtomicBool,
    deadline: Deadline,
}

impl Shared<'_> {
    fn offer(&self, clique: &[usize]) {
        let mut best = self.best.lock().unwrap();
        if clique.len() > best.len() {
            *best = clique.to_vec();
            self.best_size.store(clique.len(), Ordering::SeqCst);
        }
    }

    fn tick(&self) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed);
        if n.is_multiple_of(1024) && self.deadline.expired() {
            self.timed_out.store(true, Ordering::Relaxed);
        }
        self.timed_out.load(Ordering::Relaxed)
    }

    fn expand(&self, current: &mut Vec<usize>, mut candidates: Vec<u64>) {
        if self.tick() {
            return;
        }
        let g = self.graph;
        let (verts, colours) = g.colour_sort(&candidates);
        for idx in (0..verts.len()).rev() {
            if current.len() + colours[idx] <= self.best_size.load(Ordering::Relaxed) {
                return;
            }
            let v = verts[idx];
            current.push(v);
            let next: Vec<u64> = candidates
                .iter()
                .zip(g.neighbours(v))
                .map(|(a, b)| a & b)
                .collect();
            if is_empty(&next) {
                self.offer(current);
            } else {
                self.expand(current, next);
            }
            current.pop();
            candidates[v / 64] &= !(1 << (v % 64));
            if self.timed_out.load(Ordering::Relaxed) {
                return;
            }
        }
    }
}

/// Finds a maximum clique. With a deadline the result may be a lower bound
/// (`complete == false`).
pub fn maximum_clique(graph: &BitGraph, options: &CliqueOptions) -> CliqueOutcome {
    let order = graph.order();
    if order == 0 {
        return CliqueOutcome {
            clique: Vec::new(),
            complete: true,
            nodes: 0,
        };
    }
    // descending degree, ties by index
    let mut perm: Vec<usize> = (0..order).collect();
    perm.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
    let mut position = vec![0; order];
    for (new, &old) in perm.iter().enumerate() {
        position[old] = new;
    }
    let g = graph.reordered(&perm);

    let seed: Vec<usize> = match &options.seed {
        Some(s) if graph.is_clique(s) => s.iter().map(|&v| position[v]).collect(),
        _ => vec![0],
    };
    let shared = Shared {
        graph: &g,
        best_size: AtomicUsize::new(seed.len()),
        best: Mutex::new(seed),
        nodes: AtomicU64::new(0),
        timed_out: AtomicBool::new(false),
        deadline: options.deadline,
    };

    // Root branches: each is (root vertex, candidates, colour bound).
    let roots: Vec<(usize, Vec<u64>, usize)> = match &options.root_vertices {
        Some(reps) => reps
            .iter()
            .map(|&r| {
                let v = position[r];
                let cand = g.neighbours(v).to_vec();
                let bound = 1 + g.colour_bound(&cand);
                (v, cand, bound)
            })
            .collect(),
        None => {
            let all = g.full_set();
            let (verts, colours) = g.colour_sort(&all);
            let mut remaining = all;
            let mut out = Vec::with_capacity(verts.len());
            for idx in (0..verts.len()).rev() {
                let v = verts[idx];
                remaining[v / 64] &= !(1 << (v % 64));
                let cand: Vec<u64> = remaining
                    .iter()
                    .zip(g.neighbours(v))
                    .map(|(a, b)| a & b)
                    .collect();
                out.push((v, cand, colours[idx]));
            }
            out
        }
    };

    roots.into_par_iter().for_each(|(v, cand, bound)| {
        if bound <= shared.best_size.load(Ordering::Relaxed)
            || shared.timed_out.load(Ordering::Relaxed)
        {
            return;
        }
        let mut current = vec![v];
        if is_empty(&cand) {
            shared.offer(&current);
        } else {
            shared.expand(&mut current, cand);
        }
    });

    let mut clique: Vec<usize> = shared
        .best
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|v| perm[v])
        .collect();
    clique.sort_unstable();
    CliqueOutcome {
        clique,
        complete: !shared.timed_out.load(Ordering::Relaxed),
        nodes: shared.nodes.load(Ordering::Relaxed),
    }
}

/// Which cliques [`cliques_of_size`] returns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Collect {
    /// The lexicographically smallest clique only.
    First,
    /// Every clique, in lexicographic order.
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueList {
    pub cliques: Vec<Vec<usize>>,
    pub complete: bool,
    pub nodes: u64,
}

struct LexWalk<'a> {
    graph: &'a BitGraph,
    target: usize,
    nodes: AtomicU64,
    timed_out: AtomicBool,
    deadline: Deadline,
}

impl LexWalk<'_> {
    /// `candidates` are the common neighbours of `current` above its last
    /// vertex.
    fn walk(
        &self,
        current: &mut Vec<usize>,
        candidates: &[u64],
        mode: Collect,
        out: &mut Vec<Vec<usize>>,
    ) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed);
        if n.is_multiple_of(1024) && self.deadline.expired() {
            self.timed_out.store(true, Ordering::Relaxed);
        }
        if self.timed_out.load(Ordering::Relaxed) {
            return true;
        }
        if current.len() == self.target {
            out.push(current.clone());
            return mode == Collect::First;
        }
        let need = self.target - current.len();
        if popcount(candidates) < need || self.graph.colour_bound(candidates) < need {
            return false;
        }
        let g = self.graph;
        let mut rest = candidates.to_vec();
        for v in bit_iter(candidates) {
            rest[v / 64] &= !(1 << (v % 64));
            if popcount(&rest) + 1 < need {
                break;
            }
            let next: Vec<u64> = rest
                .iter()
                .zip(g.neighbours(v))
                .map(|(a, b)| a & b)
                .collect();
            current.push(v);
            let stop = self.walk(current, &next, mode, out);
            current.pop();
            if stop {
                return true;
            }
        }
        false
    }
}

/// Cliques with exactly `size` vertices, lexicographically ordered by their
/// ascending vertex lists.
pub fn cliques_of_size(
    graph: &BitGraph,
    size: usize,
    mode: Collect,
    deadline: Deadline,
) -> CliqueList {
    let walker = LexWalk {
        graph,
        target: size,
        nodes: AtomicU64::new(0),
        timed_out: AtomicBool::new(false),
        deadline,
    };
    if size == 0 {
        return CliqueList {
            cliques: vec![Vec::new()],
            complete: true,
            nodes: 0,
        };
    }
    let order = graph.order();
    let branch = |v: usize| -> Vec<Vec<usize>> {
        let mut above = vec![0u64; graph.words()];
        for w in v + 1..order {
            above[w / 64] |= 1 << (w % 64);
        }
        let cand: Vec<u64> = above
            .iter()
            .zip(graph.neighbours(v))
            .map(|(a, b)| a & b)
            .collect();
        let mut out = Vec::new();
        walker.walk(&mut vec![v], &cand, mode, &mut out);
        out
    };
    let cliques = match mode {
        Collect::First => (0..order)
            .into_par_iter()
            .find_map_first(|v| branch(v).into_iter().next())
            .into_iter()
            .collect(),
        Collect::All => (0..order)
            .into_par_iter()
            .map(branch)
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect(),
    };
    CliqueList {
        cliques,
        complete: !walker.timed_out.load(Ordering::Relaxed),
        nodes: walker.nodes.load(Ordering::Relaxed),
    }
}
