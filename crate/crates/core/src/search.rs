//! Exact maximum P-intersecting families.
//!
//! Members of a P-intersecting family must themselves have P (`G ∩ G = G`),
//! so the search universe is the set of P-graphs. Two of them are compatible
//! when their intersection has P, and maximum families are exactly the
//! maximum cliques of this compatibility graph.

use std::time::Duration;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::clique::{cliques_of_size, maximum_clique, BitGraph, CliqueOptions, Collect, Deadline};
use crate::constructions::{
    all_but_one_of_each, balanced_two_flower, cycle_graph, flower_family, hamilton_cycle_family,
    identity, upset_of,
};
use crate::error::{invalid, Error, Result};
use crate::family::{verify_family, Family};
use crate::graph::{pair_count, DirectedGraph, Graph, GraphKind, OrientedGraph, SimpleGraph};
use crate::predicates::{satisfies_unchecked, Property};

/// Largest vertex count per kind enumerated without `force`.
pub fn universe_guard(kind: GraphKind) -> usize {
    match kind {
        GraphKind::Simple => 6,
        GraphKind::Oriented => 4,
        GraphKind::Directed => 3,
    }
}

/// Largest compatibility graph built without `force`.
pub const MAX_COMPATIBILITY_VERTICES: usize = 20_000;

/// All graphs of kind `G` on `n` vertices in canonical order, optionally
/// restricted to those with `filter`.
pub fn enumerate_universe<G: Graph>(
    n: usize,
    filter: Option<Property>,
    force: bool,
) -> Result<Vec<G>> {
    if !force && n > universe_guard(G::KIND) {
        return Err(Error::Capacity(format!(
            "{} universe on n={n} exceeds the guard n <= {} (use force)",
            G::KIND,
            universe_guard(G::KIND)
        )));
    }
    if let Some(p) = filter {
        if !p.applies_to(G::KIND) {
            return invalid(format!(
                "property {p} is not defined for {} graphs",
                G::KIND
            ));
        }
    }
    let all = G::enumerate_all(n)?;
    Ok(match filter {
        Some(p) => all
            .into_par_iter()
            .filter(|g| satisfies_unchecked(g, p))
            .collect(),
        None => all,
    })
}

/// P-graphs joined when their intersection has P.
#[derive(Debug, Clone)]
pub struct CompatibilityGraph<G: Graph> {
    pub vertices: Vec<G>,
    pub graph: BitGraph,
}

impl<G: Graph> CompatibilityGraph<G> {
    pub fn build(n: usize, property: Property, force: bool) -> Result<Self> {
        let vertices = enumerate_universe::<G>(n, Some(property), force)?;
        if !force && vertices.len() > MAX_COMPATIBILITY_VERTICES {
            return Err(Error::Capacity(format!(
                "{} candidate graphs exceed the compatibility guard {MAX_COMPATIBILITY_VERTICES}",
                vertices.len()
            )));
        }
        let order = vertices.len();
        let words = order.div_ceil(64).max(1);
        let mut rows: Vec<Vec<u64>> = (0..order)
            .into_par_iter()
            .map(|i| {
                let mut row = vec![0u64; words];
                for j in i + 1..order {
                    let meet = vertices[i].intersect(&vertices[j]).unwrap();
                    if satisfies_unchecked(&meet, property) {
                        row[j / 64] |= 1 << (j % 64);
                    }
                }
                row
            })
            .collect();
        for i in 0..order {
            for j in i + 1..order {
                if rows[i][j / 64] >> (j % 64) & 1 == 1 {
                    rows[j][i / 64] |= 1 << (i % 64);
                }
            }
        }
        Ok(CompatibilityGraph {
            vertices,
            graph: BitGraph::from_rows(order, rows),
        })
    }

    pub fn index_of(&self, g: &G) -> Option<usize> {
        self.vertices.binary_search(g).ok()
    }

    fn family(&self, clique: &[usize], n: usize) -> Family<G> {
        Family::new(n, clique.iter().map(|&i| self.vertices[i]).collect())
            .expect("vertices share n")
    }
}

#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    pub time_limit: Option<Duration>,
    /// Branch only on vertex-relabelling orbit representatives at the root.
    pub symmetry: bool,
    /// Start from the matching construction as incumbent.
    pub seed_construction: bool,
    /// Also list every maximum family.
    pub enumerate_all: bool,
    /// Skip the universe and compatibility guards.
    pub force: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    Complete,
    TimeoutLowerBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Graphs having the property.
    pub candidates: usize,
    pub compatible_pairs: usize,
    pub nodes: u64,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult<G: Graph> {
    pub n: usize,
    pub property: Property,
    pub max_size: usize,
    /// Lexicographically smallest maximum family when complete, otherwise
    /// the best family found.
    pub witness: Family<G>,
    pub all_maximum: Option<Vec<Family<G>>>,
    pub status: SearchStatus,
    pub stats: SearchStats,
}

/// The family each property's extremal construction produces, when one
/// is known for this `n`.
pub fn seed_family<G: Graph>(n: usize, property: Property) -> Result<Option<Family<G>>> {
    let cycle_arcs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let family: Option<Family<SimpleGraph>> = match (G::KIND, property) {
        (GraphKind::Oriented, Property::StronglyConnected) if n >= 3 => {
            let h = OrientedGraph::from_arcs(n, &cycle_arcs)?;
            return convert(upset_of(&h)?);
        }
        (GraphKind::Directed, Property::StronglyConnected) if n >= 2 => {
            let h = if n == 2 {
                DirectedGraph::from_arcs(2, &[(0, 1), (1, 0)])?
            } else {
                DirectedGraph::from_arcs(n, &cycle_arcs)?
            };
            return convert(upset_of(&h)?);
        }
        (GraphKind::Simple, Property::Connected | Property::HamiltonianPath) => {
            let path: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Some(upset_of(&SimpleGraph::from_edges(n, &path)?)?)
        }
        (
            GraphKind::Simple,
            Property::HamiltonianCycle | Property::NoCutvertex | Property::TwoEdgeConnected,
        ) if n >= 3 => Some(hamilton_cycle_family(&identity(n), n)?),
        (GraphKind::Simple, Property::AtMostKComponents(2)) if n >= 3 => {
            Some(all_but_one_of_each(n, &[cycle_graph(&identity(n), n)?])?)
        }
        (GraphKind::Simple, Property::AtMostKComponents(3)) => match balanced_two_flower(n) {
            Some(lengths) => Some(flower_family(&lengths, n)?),
            None => None,
        },
        _ => None,
    };
    family.map(convert).transpose().map(Option::flatten)
}

fn convert<A: Graph, B: Graph>(family: Family<A>) -> Result<Option<Family<B>>> {
    if A::KIND != B::KIND {
        return Ok(None);
    }
    let members = family
        .members()
        .iter()
        .map(|g| B::from_coordinates(g.n(), &g.coordinates()))
        .collect::<Result<Vec<_>>>()?;
    Family::new(family.n(), members).map(Some)
}

/// Vertex relabellings of `0..n`, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = identity(n);
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| current[i] < current[i + 1])
        else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    out
}

/// Smallest relabelling of `g`.
pub fn canonical_form<G: Graph>(g: &G, perms: &[Vec<usize>]) -> G {
    perms.iter().map(|p| g.permute(p)).min().unwrap_or(*g)
}

fn orbit_representatives<G: Graph>(vertices: &[G], n: usize) -> Vec<usize> {
    let perms = permutations(n);
    (0..vertices.len())
        .into_par_iter()
        .filter(|&i| canonical_form(&vertices[i], &perms) == vertices[i])
        .collect()
}

struct Timer {
    #[cfg(not(target_arch = "wasm32"))]
    start: std::time::Instant,
}

impl Timer {
    fn start() -> Self {
        Timer {
            #[cfg(not(target_arch = "wasm32"))]
            start: std::time::Instant::now(),
        }
    }

    fn elapsed_ms(&self) -> u64 {
        #[cfg(not(target_arch = "wasm32"))]
        {
            self.start.elapsed().as_millis() as u64
        }
        #[cfg(target_arch = "wasm32")]
        {
            0
        }
    }
}

/// Exact maximum P-intersecting family of kind `G` on `n` vertices.
pub fn max_family<G: Graph>(
    n: usize,
    property: Property,
    options: &SearchOptions,
) -> Result<SearchResult<G>> {
    let timer = Timer::start();
    let deadline = Deadline::after(options.time_limit);
    let compat = CompatibilityGraph::<G>::build(n, property, options.force)?;
    let stats = |nodes| SearchStats {
        candidates: compat.vertices.len(),
        compatible_pairs: compat.graph.edge_count(),
        nodes,
        elapsed_ms: timer.elapsed_ms(),
    };
    if compat.vertices.is_empty() {
        return Ok(SearchResult {
            n,
            property,
            max_size: 0,
            witness: Family::new(n, Vec::new())?,
            all_maximum: options
                .enumerate_all
                .then(|| vec![Family::new(n, Vec::new()).unwrap()]),
            status: SearchStatus::Complete,
            stats: stats(0),
        });
    }

    let seed = if options.seed_construction {
        match seed_family::<G>(n, property)? {
            Some(f) => {
                let idx: Option<Vec<usize>> =
                    f.members().iter().map(|g| compat.index_of(g)).collect();
                idx.filter(|i| compat.graph.is_clique(i))
            }
            None => None,
        }
    } else {
        None
    };
    let root_vertices = options
        .symmetry
        .then(|| orbit_representatives(&compat.vertices, n));
    let found = maximum_clique(
        &compat.graph,
        &CliqueOptions {
            deadline,
            seed,
            root_vertices,
        },
    );
    if !found.complete {
        return Ok(SearchResult {
            n,
            property,
            max_size: found.clique.len(),
            witness: compat.family(&found.clique, n),
            all_maximum: None,
            status: SearchStatus::TimeoutLowerBound,
            stats: stats(found.nodes),
        });
    }

    let size = found.clique.len();
    let mode = if options.enumerate_all {
        Collect::All
    } else {
        Collect::First
    };
    let listed = cliques_of_size(&compat.graph, size, mode, deadline);
    let nodes = found.nodes + listed.nodes;
    if !listed.complete || listed.cliques.is_empty() {
        // Timed out while ordering witnesses; the size itself is exact but
        // the lexicographic witness is not certified.
        return Ok(SearchResult {
            n,
            property,
            max_size: size,
            witness: compat.family(&found.clique, n),
            all_maximum: None,
            status: SearchStatus::TimeoutLowerBound,
            stats: stats(nodes),
        });
    }
    let witness = compat.family(&listed.cliques[0], n);
    let all_maximum = options
        .enumerate_all
        .then(|| listed.cliques.iter().map(|c| compat.family(c, n)).collect());
    Ok(SearchResult {
        n,
        property,
        max_size: size,
        witness,
        all_maximum,
        status: SearchStatus::Complete,
        stats: stats(nodes),
    })
}

/// Every maximum family, in lexicographic order.
pub fn enumerate_maximum_families<G: Graph>(
    n: usize,
    property: Property,
    options: &SearchOptions,
) -> Result<SearchResult<G>> {
    let options = SearchOptions {
        enumerate_all: true,
        ..options.clone()
    };
    max_family(n, property, &options)
}

/// An upper bound on P-intersecting families with its provenance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundRef {
    pub source: String,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub value: BigUint,
    /// False for conjectured bounds.
    pub proven: bool,
}

/// Known bounds for `(kind, n, property)`: proven ones from the coset and
/// projection arguments, conjectured ones where stated.
pub fn known_bounds(kind: GraphKind, n: usize, property: Property) -> Vec<BoundRef> {
    let m = pair_count(n) as u32;
    let pow = |b: u32, e: u32| BigUint::from(b).pow(e);
    let mut out = Vec::new();
    let connected = |out: &mut Vec<BoundRef>| {
        if n >= 1 {
            out.push(BoundRef {
                source: "star-span coset bound 2^(C(n,2)-(n-1))".into(),
                value: pow(2, m - (n as u32 - 1)),
                proven: true,
            })
        }
    };
    match (kind, property) {
        (GraphKind::Simple, Property::Connected | Property::HamiltonianPath) => connected(&mut out),
        (GraphKind::Simple, Property::HamiltonianCycle | Property::NoCutvertex) if n >= 3 => out
            .push(BoundRef {
                source: "vertex-deletion cover bound 2^(C(n,2)-n)".into(),
                value: pow(2, m - n as u32),
                proven: true,
            }),
        (GraphKind::Simple, Property::TwoEdgeConnected) if n >= 3 => {
            connected(&mut out);
            out.push(BoundRef {
                source: "conjectured 2^(C(n,2)-n)".into(),
                value: pow(2, m - n as u32),
                proven: false,
            });
        }
        (GraphKind::Simple, Property::AtMostKComponents(2)) if n >= 3 => out.push(BoundRef {
            source: "conjectured (n+1)*2^(C(n,2)-n)".into(),
            value: BigUint::from(n + 1) * pow(2, m - n as u32),
            proven: false,
        }),
        (GraphKind::Simple, Property::AtMostKComponents(3)) if n >= 3 && n % 2 == 1 => {
            out.push(BoundRef {
                source: "conjectured (n+3)^2/8*2^(C(n,2)-n), odd n".into(),
                value: BigUint::from((n + 3) * (n + 3)) * pow(2, m - n as u32) / 8u32,
                proven: false,
            })
        }
        (GraphKind::Oriented, Property::StronglyConnected) if n >= 3 => out.push(BoundRef {
            source: "star cover bound 3^(C(n,2)-n)".into(),
            value: pow(3, m - n as u32),
            proven: true,
        }),
        (GraphKind::Directed, Property::StronglyConnected) => out.push(BoundRef {
            source: "out-star coset bound 4^C(n,2)/2^n".into(),
            value: pow(4, m) / pow(2, n as u32),
            proven: true,
        }),
        _ => {}
    }
    out
}

/// Which open problem a [`ConjectureReport`] probes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conjecture {
    TwoEdgeConnected,
    TwoComponents,
    ThreeComponents,
}

impl Conjecture {
    pub const ALL: [Conjecture; 3] = [
        Conjecture::TwoEdgeConnected,
        Conjecture::TwoComponents,
        Conjecture::ThreeComponents,
    ];

    pub fn property(self) -> Property {
        match self {
            Conjecture::TwoEdgeConnected => Property::TwoEdgeConnected,
            Conjecture::TwoComponents => Property::AtMostKComponents(2),
            Conjecture::ThreeComponents => Property::AtMostKComponents(3),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Conjecture::TwoEdgeConnected => "two-edge-connected",
            Conjecture::TwoComponents => "two-components",
            Conjecture::ThreeComponents => "three-components",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Conjecture::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown conjecture '{s}'")))
    }

    /// The conjectured maximum, or `None` where none is stated.
    pub fn bound(self, n: usize) -> Option<BigUint> {
        known_bounds(GraphKind::Simple, n, self.property())
            .into_iter()
            .find(|b| !b.proven)
            .map(|b| b.value)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// The exact maximum does not exceed the conjectured bound.
    Consistent,
    /// A family larger than the conjectured bound was found.
    Counterexample,
    /// Neither settled at this size.
    Open,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub conjecture: Conjecture,
    pub n: usize,
    pub property: String,
    #[serde(serialize_with = "crate::decimal::serialize_option")]
    pub conjectured_bound: Option<BigUint>,
    pub construction_size: Option<usize>,
    pub construction_verified: Option<bool>,
    pub search_max: usize,
    pub search_status: SearchStatus,
    pub verdict: Verdict,
    /// Members of the certified witness family.
    pub witness: Vec<String>,
    pub nodes: u64,
}

/// Compares the conjectured bound, the candidate construction and an exact
/// search at `n`.
pub fn conjecture_report(
    n: usize,
    which: Conjecture,
    options: &SearchOptions,
) -> Result<ConjectureReport> {
    let property = which.property();
    let construction = seed_family::<SimpleGraph>(n, property)?;
    let construction_verified = construction
        .as_ref()
        .map(|f| verify_family(f, property).map(|c| c.ok))
        .transpose()?;
    let result = max_family::<SimpleGraph>(n, property, options)?;
    let bound = which.bound(n);
    let verdict = match (&bound, result.status) {
        (Some(b), _) if BigUint::from(result.max_size) > *b => Verdict::Counterexample,
        (Some(_), SearchStatus::Complete) => Verdict::Consistent,
        _ => Verdict::Open,
    };
    Ok(ConjectureReport {
        conjecture: which,
        n,
        property: property.name(),
        conjectured_bound: bound,
        construction_size: construction.as_ref().map(|f| f.len()),
        construction_verified,
        search_max: result.max_size,
        search_status: result.status,
        verdict,
        witness: result
            .witness
            .members()
            .iter()
            .map(|g| g.to_digits())
            .collect(),
        nodes: result.stats.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universe_sizes() {
        assert_eq!(
            enumerate_universe::<SimpleGraph>(3, None, false)
                .unwrap()
                .len(),
            8
        );
        assert_eq!(
            enumerate_universe::<OrientedGraph>(3, None, false)
                .unwrap()
                .len(),
            27
        );
        assert!(matches!(
            enumerate_universe::<SimpleGraph>(7, None, false),
            Err(Error::Capacity(_))
        ));
        assert!(
            enumerate_universe::<SimpleGraph>(3, Some(Property::StronglyConnected), false).is_err()
        );
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(1), vec![vec![0]]);
    }

    #[test]
    fn hamiltonian_n3_has_only_k3() {
        let r = max_family::<SimpleGraph>(3, Property::HamiltonianCycle, &SearchOptions::default())
            .unwrap();
        assert_eq!(r.max_size, 1);
        assert_eq!(r.witness.members()[0], SimpleGraph::complete(3).unwrap());
    }

    #[test]
    fn seeds_are_valid_families() {
        for (n, p) in [
            (4, Property::Connected),
            (4, Property::HamiltonianCycle),
            (4, Property::AtMostKComponents(2)),
            (5, Property::AtMostKComponents(3)),
        ] {
            let f = seed_family::<SimpleGraph>(n, p).unwrap().unwrap();
            assert!(verify_family(&f, p).unwrap().ok, "{p} n={n}");
        }
        let f = seed_family::<OrientedGraph>(4, Property::StronglyConnected)
            .unwrap()
            .unwrap();
        assert_eq!(f.len(), 9);
        assert!(seed_family::<SimpleGraph>(4, Property::StronglyConnected)
            .unwrap()
            .is_none());
    }

    #[test]
    fn conjecture_bounds() {
        assert_eq!(
            Conjecture::TwoEdgeConnected.bound(4),
            Some(BigUint::from(4u32))
        );
        assert_eq!(
            Conjecture::TwoComponents.bound(4),
            Some(BigUint::from(20u32))
        );
        assert_eq!(
            Conjecture::ThreeComponents.bound(5),
            Some(BigUint::from(256u32))
        );
        assert_eq!(Conjecture::ThreeComponents.bound(4), None);
    }
}
