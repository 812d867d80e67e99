//! Browser bindings. Every function returns a JSON string; failures come
//! back as `{"error": "..."}` rather than exceptions.

use pfam_core::predicates::{
    component_count, cut_vertices, has_hamilton_cycle, has_hamilton_path, is_strongly_connected,
    is_two_edge_connected, satisfies,
};
use pfam_core::projections::{hamiltonian_deletion_pipeline, oriented_star_pipeline};
use pfam_core::search::{known_bounds, max_family, SearchOptions, SearchResult};
use pfam_core::{DirectedGraph, Graph, GraphKind, OrientedGraph, Property, Result, SimpleGraph};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest n the page may search; there is no clock to stop a long search.
pub const DEMO_SEARCH_LIMIT: usize = 4;

fn respond(result: Result<Value>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

fn arc_list<G: Graph>(g: &G) -> Vec<[usize; 2]> {
    let n = g.n();
    let adj = g.out_neighbours();
    (0..n)
        .flat_map(|u| {
            (0..n)
                .filter(move |&v| adj[u] >> v & 1 == 1)
                .map(move |v| [u, v])
        })
        .collect()
}

fn properties(digits: &str, n: usize, kind: &str) -> Result<Value> {
    let kind: GraphKind = kind.parse()?;
    Ok(match kind {
        GraphKind::Simple => {
            let g = SimpleGraph::from_digits(digits, n)?;
            let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
            json!({
                "kind": kind, "n": n, "edges": edges, "directed": false,
                "properties": {
                    "components": component_count(&g),
                    "connected": component_count(&g) == 1,
                    "hamiltonian-cycle": has_hamilton_cycle(&g),
                    "hamiltonian-path": has_hamilton_path(&g),
                    "no-cutvertex": satisfies(&g, Property::NoCutvertex)?,
                    "cutvertices": cut_vertices(&g),
                    "two-edge-connected": is_two_edge_connected(&g),
                }
            })
        }
        GraphKind::Oriented => {
            let g = OrientedGraph::from_digits(digits, n)?;
            json!({
                "kind": kind, "n": n, "edges": arc_list(&g), "directed": true,
                "properties": { "strongly-connected": is_strongly_connected(&g) }
            })
        }
        GraphKind::Directed => {
            let g = DirectedGraph::from_digits(digits, n)?;
            json!({
                "kind": kind, "n": n, "edges": arc_list(&g), "directed": true,
                "properties": { "strongly-connected": is_strongly_connected(&g) }
            })
        }
    })
}

/// Property table plus the edge list for drawing.
#[wasm_bindgen]
pub fn graph_properties(digits: &str, n: usize, kind: &str) -> String {
    respond(properties(digits, n, kind))
}

fn bound(kind: &str, n: usize) -> Result<Value> {
    let report = match kind.parse::<GraphKind>()? {
        GraphKind::Oriented => oriented_star_pipeline(n)?,
        GraphKind::Simple => hamiltonian_deletion_pipeline(n)?,
        GraphKind::Directed => {
            return Err(pfam_core::Error::InvalidArgument(
                "directed graphs use the out-star coset bound, not a projection".into(),
            ))
        }
    };
    Ok(serde_json::to_value(report).expect("reports serialize"))
}

/// Star pipeline for oriented graphs, vertex-deletion pipeline for
/// Hamiltonian simple graphs.
#[wasm_bindgen]
pub fn projection_bound(kind: &str, n: usize) -> String {
    respond(bound(kind, n))
}

fn summary<G: Graph>(r: SearchResult<G>) -> Value {
    let witness: Vec<Value> = r
        .witness
        .members()
        .iter()
        .map(|g| json!({ "digits": g.to_digits(), "edges": arc_list(g) }))
        .collect();
    json!({
        "kind": G::KIND,
        "n": r.n,
        "property": r.property.name(),
        "max_size": r.max_size,
        "status": r.status,
        "candidates": r.stats.candidates,
        "bound_refs": known_bounds(G::KIND, r.n, r.property),
        "witness": witness,
    })
}

fn search(kind: &str, n: usize, property: &str, k: Option<usize>) -> Result<Value> {
    if n > DEMO_SEARCH_LIMIT {
        return Err(pfam_core::Error::Capacity(format!(
            "the page searches up to n={DEMO_SEARCH_LIMIT}; use the command line beyond"
        )));
    }
    let property = Property::parse(property, k)?;
    let opts = SearchOptions::default();
    Ok(match kind.parse::<GraphKind>()? {
        GraphKind::Simple => summary(max_family::<SimpleGraph>(n, property, &opts)?),
        GraphKind::Oriented => summary(max_family::<OrientedGraph>(n, property, &opts)?),
        GraphKind::Directed => summary(max_family::<DirectedGraph>(n, property, &opts)?),
    })
}

/// Exact maximum intersecting family with its lexicographically first
/// witness. `k` is only read for `at-most-k-components`.
#[wasm_bindgen]
pub fn search_max_family(kind: &str, n: usize, property: &str, k: Option<usize>) -> String {
    respond(search(kind, n, property, k))
}
