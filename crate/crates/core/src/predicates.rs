//! Graph properties evaluated on intersections.
//!
//! All predicates work on spanning subgraphs: every vertex of `0..n` is part
//! of the graph whether or not it has edges. Conventions for tiny graphs:
//! Hamilton cycles need `n >= 3`, a single vertex has a Hamilton path, a
//! single vertex is connected, and no graph on `n <= 2` vertices has a
//! cutvertex.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, GraphKind, SimpleGraph, MAX_VERTICES};

type Adjacency = [u32; MAX_VERTICES];

#[inline]
fn all_vertices(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// The properties an intersection may be required to have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "k", rename_all = "kebab-case")]
pub enum Property {
    Connected,
    StronglyConnected,
    HamiltonianCycle,
    HamiltonianPath,
    /// Connected and without a cutvertex.
    NoCutvertex,
    TwoEdgeConnected,
    AtMostKComponents(usize),
}

impl Property {
    pub fn at_most_components(k: usize) -> Result<Self> {
        if k == 0 {
            return invalid("component bound k must be at least 1");
        }
        Ok(Property::AtMostKComponents(k))
    }

    /// Whether the property is defined for graphs of `kind`.
    pub fn applies_to(self, kind: GraphKind) -> bool {
        match self {
            Property::StronglyConnected => kind != GraphKind::Simple,
            _ => kind == GraphKind::Simple,
        }
    }

    /// Canonical name, e.g. `at-most-2-components`.
    pub fn name(self) -> String {
        match self {
            Property::Connected => "connected".into(),
            Property::StronglyConnected => "strongly-connected".into(),
            Property::HamiltonianCycle => "hamiltonian-cycle".into(),
            Property::HamiltonianPath => "hamiltonian-path".into(),
            Property::NoCutvertex => "no-cutvertex".into(),
            Property::TwoEdgeConnected => "two-edge-connected".into(),
            Property::AtMostKComponents(k) => format!("at-most-{k}-components"),
        }
    }

    /// Parses a property name; `k` fills in `at-most-k-components`.
    pub fn parse(name: &str, k: Option<usize>) -> Result<Self> {
        match name {
            "connected" => Ok(Property::Connected),
            "strongly-connected" | "strong" => Ok(Property::StronglyConnected),
            "hamiltonian-cycle" | "hamiltonian" => Ok(Property::HamiltonianCycle),
            "hamiltonian-path" => Ok(Property::HamiltonianPath),
            "no-cutvertex" => Ok(Property::NoCutvertex),
            "two-edge-connected" => Ok(Property::TwoEdgeConnected),
            "at-most-k-components" => match k {
                Some(k) => Property::at_most_components(k),
                None => invalid("at-most-k-components needs --k"),
            },
            other => {
                let inner = other
                    .strip_prefix("at-most-")
                    .and_then(|r| r.strip_suffix("-components"))
                    .and_then(|d| d.parse::<usize>().ok());
                match inner {
                    Some(k) => Property::at_most_components(k),
                    None => invalid(format!("unknown property '{other}'")),
                }
            }
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::parse(s, None)
    }
}

fn components_of(adj: &Adjacency, n: usize, within: u32) -> usize {
    let mut left = within;
    let mut count = 0;
    while left != 0 {
        let mut reached = left & left.wrapping_neg();
        let mut frontier = reached;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & within & !reached;
            reached |= new;
            frontier |= new;
        }
        debug_assert!(reached & !all_vertices(n) == 0);
        left &= !reached;
        count += 1;
    }
    count
}

fn reach(adj: &Adjacency, from: usize) -> u32 {
    let mut reached = 1u32 << from;
    let mut frontier = reached;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & !reached;
        reached |= new;
        frontier |= new;
    }
    reached
}

/// Connected components of the spanning subgraph; isolated vertices count.
pub fn component_count(g: &SimpleGraph) -> usize {
    components_of(&g.out_neighbours(), g.n(), all_vertices(g.n()))
}

pub fn is_connected(g: &SimpleGraph) -> bool {
    component_count(g) == 1
}

fn strongly_connected(adj: &Adjacency, n: usize) -> bool {
    let all = all_vertices(n);
    if reach(adj, 0) != all {
        return false;
    }
    let mut rev = [0u32; MAX_VERTICES];
    for (u, &out) in adj.iter().enumerate().take(n) {
        let mut o = out;
        while o != 0 {
            let v = o.trailing_zeros() as usize;
            o &= o - 1;
            rev[v] |= 1 << u;
        }
    }
    reach(&rev, 0) == all
}

/// True iff every vertex reaches every other along arcs. Works for oriented
/// and directed graphs; a single vertex is strongly connected.
pub fn is_strongly_connected<G: Graph>(g: &G) -> bool {
    strongly_connected(&g.out_neighbours(), g.n())
}

fn hamilton_cycle(adj: &Adjacency, n: usize) -> bool {
    if n <= 2 {
        return false;
    }
    // Paths start at vertex 0; subsets range over vertices 1..n, shifted down.
    let others = n - 1;
    let full = (1usize << others) - 1;
    let mut ends = vec![0u32; full + 1];
    for v in 1..n {
        if adj[0] >> v & 1 == 1 {
            ends[1 << (v - 1)] |= 1 << (v - 1);
        }
    }
    for set in 1..=full {
        let e = ends[set];
        if e == 0 {
            continue;
        }
        let mut reachable = 0u32;
        let mut it = e;
        while it != 0 {
            let v = it.trailing_zeros() as usize + 1;
            it &= it - 1;
            reachable |= adj[v] >> 1;
        }
        let mut next = reachable & !(set as u32) & full as u32;
        while next != 0 {
            let w = next.trailing_zeros();
            next &= next - 1;
            ends[set | 1 << w] |= 1 << w;
        }
    }
    ends[full] & (adj[0] >> 1) != 0
}

/// True iff a spanning cycle exists (never for `n <= 2`).
pub fn has_hamilton_cycle(g: &SimpleGraph) -> bool {
    hamilton_cycle(&g.out_neighbours(), g.n())
}

fn hamilton_path(adj: &Adjacency, n: usize) -> bool {
    let full = (1usize << n) - 1;
    let mut ends = vec![0u32; full + 1];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for set in 1..full {
        let e = ends[set];
        if e == 0 {
            continue;
        }
        let mut reachable = 0u32;
        let mut it = e;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            reachable |= adj[v];
        }
        let mut next = reachable & !(set as u32);
        while next != 0 {
            let w = next.trailing_zeros();
            next &= next - 1;
            ends[set | 1 << w] |= 1 << w;
        }
    }
    ends[full] != 0
}

/// True iff a spanning path exists (always for a single vertex).
pub fn has_hamilton_path(g: &SimpleGraph) -> bool {
    hamilton_path(&g.out_neighbours(), g.n())
}

/// Articulation points and bridges from one low-link pass.
struct LowLink {
    cut_vertices: u32,
    bridges: usize,
}

fn low_link(adj: &Adjacency, n: usize) -> LowLink {
    struct State<'a> {
        adj: &'a Adjacency,
        order: [u8; MAX_VERTICES],
        low: [u8; MAX_VERTICES],
        visited: u32,
        clock: u8,
        cut_vertices: u32,
        bridges: usize,
    }

    fn dfs(st: &mut State<'_>, v: usize, parent: Option<usize>) {
        st.visited |= 1 << v;
        st.order[v] = st.clock;
        st.low[v] = st.clock;
        st.clock += 1;
        let mut children = 0;
        let mut nb = st.adj[v];
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if Some(w) == parent {
                continue;
            }
            if st.visited >> w & 1 == 1 {
                st.low[v] = st.low[v].min(st.order[w]);
            } else {
                children += 1;
                dfs(st, w, Some(v));
                st.low[v] = st.low[v].min(st.low[w]);
                if parent.is_some() && st.low[w] >= st.order[v] {
                    st.cut_vertices |= 1 << v;
                }
                if st.low[w] > st.order[v] {
                    st.bridges += 1;
                }
            }
        }
        if parent.is_none() && children > 1 {
            st.cut_vertices |= 1 << v;
        }
    }

    let mut st = State {
        adj,
        order: [0; MAX_VERTICES],
        low: [0; MAX_VERTICES],
        visited: 0,
        clock: 0,
        cut_vertices: 0,
        bridges: 0,
    };
    for v in 0..n {
        if st.visited >> v & 1 == 0 {
            dfs(&mut st, v, None);
        }
    }
    LowLink {
        cut_vertices: st.cut_vertices,
        bridges: st.bridges,
    }
}

/// Vertices whose removal increases the number of components.
pub fn cut_vertices(g: &SimpleGraph) -> Vec<usize> {
    if g.n() <= 2 {
        return Vec::new();
    }
    let mask = low_link(&g.out_neighbours(), g.n()).cut_vertices;
    (0..g.n()).filter(|v| mask >> v & 1 == 1).collect()
}

/// True iff removing some vertex increases the number of components. On
/// connected graphs this is the usual cutvertex; always false for `n <= 2`.
pub fn has_cutvertex(g: &SimpleGraph) -> bool {
    g.n() > 2 && low_link(&g.out_neighbours(), g.n()).cut_vertices != 0
}

/// Connected and bridgeless.
pub fn is_two_edge_connected(g: &SimpleGraph) -> bool {
    let adj = g.out_neighbours();
    components_of(&adj, g.n(), all_vertices(g.n())) == 1 && low_link(&adj, g.n()).bridges == 0
}

fn check_kind<G: Graph>(p: Property) -> Result<()> {
    if p.applies_to(G::KIND) {
        Ok(())
    } else {
        invalid(format!(
            "property {p} is not defined for {} graphs",
            G::KIND
        ))
    }
}

/// Evaluates `p` on `g`.
pub fn satisfies<G: Graph>(g: &G, p: Property) -> Result<bool> {
    check_kind::<G>(p)?;
    Ok(satisfies_unchecked(g, p))
}

/// [`satisfies`] without the kind check; callers must have validated it.
pub(crate) fn satisfies_unchecked<G: Graph>(g: &G, p: Property) -> bool {
    let adj = g.out_neighbours();
    let n = g.n();
    match p {
        Property::StronglyConnected => strongly_connected(&adj, n),
        Property::Connected => components_of(&adj, n, all_vertices(n)) == 1,
        Property::HamiltonianCycle => hamilton_cycle(&adj, n),
        Property::HamiltonianPath => hamilton_path(&adj, n),
        Property::NoCutvertex => {
            components_of(&adj, n, all_vertices(n)) == 1
                && (n <= 2 || low_link(&adj, n).cut_vertices == 0)
        }
        Property::TwoEdgeConnected => {
            components_of(&adj, n, all_vertices(n)) == 1 && low_link(&adj, n).bridges == 0
        }
        Property::AtMostKComponents(k) => components_of(&adj, n, all_vertices(n)) <= k,
    }
}

/// Vertex subset given as a bit mask over `0..n`.
pub fn check_proper_subset(set: u32, n: usize) -> Result<()> {
    let all = all_vertices(n);
    if set == 0 || set & all == all || set & !all != 0 {
        return invalid(format!(
            "vertex set {set:#b} must be a nonempty proper subset of 0..{n}"
        ));
    }
    Ok(())
}

/// True iff every arc from `set` to its complement is present.
pub fn contains_full_out_cut<G: Graph>(g: &G, set: u32) -> Result<bool> {
    if G::KIND == GraphKind::Simple {
        return invalid("out-cuts are defined for oriented and directed graphs");
    }
    check_proper_subset(set, g.n())?;
    Ok(out_cut_contained(&g.out_neighbours(), g.n(), set))
}

pub(crate) fn out_cut_contained(adj: &Adjacency, n: usize, set: u32) -> bool {
    let outside = all_vertices(n) & !set;
    let mut s = set;
    while s != 0 {
        let u = s.trailing_zeros() as usize;
        s &= s - 1;
        if adj[u] & outside != outside {
            return false;
        }
    }
    true
}
