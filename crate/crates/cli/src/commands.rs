use std::fmt::Write as _;
use std::time::Duration;

use num_bigint::BigUint;
use pfam_core::certificates::{
    coset_bound, explore_gf3_cut_span, out_star_shortcut_holds, out_star_span, star_span,
    verify_directed_cut_property, verify_undirected_cut_property, CutCertificate,
};
use pfam_core::constructions::{
    balanced_two_flower, cycle_minus_one_count, cycle_minus_one_family, flower_count,
    flower_family, hamilton_cycle_count, hamilton_cycle_family, hamilton_path_noneq_count,
    hamilton_path_noneq_family, upset_count, upset_of,
};
use pfam_core::family::parse_header;
use pfam_core::predicates::{
    component_count, cut_vertices, has_hamilton_cycle, has_hamilton_path, is_connected,
    is_strongly_connected, is_two_edge_connected, satisfies,
};
use pfam_core::projections::{
    ft_max_2agree, hamiltonian_deletion_pipeline, max_agreeing_set, oriented_star_pipeline,
    shearer_bound_check, CoverSpec, PipelineReport, PointSet,
};
use pfam_core::search::{
    conjecture_report, known_bounds, max_family, ConjectureReport, SearchOptions, SearchResult,
    SearchStatus,
};
use pfam_core::{
    pair_count, verify_family, DirectedGraph, Family, Graph, GraphKind, OrientedGraph, Property,
    SimpleGraph,
};
use serde_json::{json, Value};

use crate::args::{Cli, RunConfig};
use crate::render::{power_form, row, share, Report};
use crate::CliError;

fn infer_n(digits: &str, kind: GraphKind) -> Result<usize, CliError> {
    (1..=pfam_core::MAX_VERTICES)
        .find(|&n| kind.digit_len(n) == digits.len())
        .ok_or_else(|| {
            CliError::Validation(format!(
                "a {kind} digit string of length {} matches no vertex count; pass --n",
                digits.len()
            ))
        })
}

fn yes(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

pub fn props(cli: &Cli, cfg: &RunConfig) -> Result<Report, CliError> {
    let digits = cli
        .graph
        .as_deref()
        .ok_or_else(|| CliError::Validation("props needs --graph".into()))?;
    let n = match cfg.n {
        Some(n) => n,
        None => infer_n(digits, cfg.kind)?,
    };
    let mut rows: Vec<(String, Value)> = Vec::new();
    match cfg.kind {
        GraphKind::Simple => {
            let g = SimpleGraph::from_digits(digits, n)?;
            rows.push(("edges".into(), json!(g.size())));
            rows.push(("components".into(), json!(component_count(&g))));
            rows.push(("connected".into(), json!(is_connected(&g))));
            rows.push(("hamiltonian-cycle".into(), json!(has_hamilton_cycle(&g))));
            rows.push(("hamiltonian-path".into(), json!(has_hamilton_path(&g))));
            rows.push((
                "no-cutvertex".into(),
                json!(satisfies(&g, Property::NoCutvertex)?),
            ));
            rows.push(("cutvertices".into(), json!(cut_vertices(&g))));
            rows.push((
                "two-edge-connected".into(),
                json!(is_two_edge_connected(&g)),
            ));
        }
        GraphKind::Oriented => {
            let g = OrientedGraph::from_digits(digits, n)?;
            rows.push(("arcs".into(), json!(g.size())));
            rows.push((
                "strongly-connected".into(),
                json!(is_strongly_connected(&g)),
            ));
        }
        GraphKind::Directed => {
            let g = DirectedGraph::from_digits(digits, n)?;
            rows.push(("arcs".into(), json!(g.size())));
            rows.push((
                "strongly-connected".into(),
                json!(is_strongly_connected(&g)),
            ));
        }
    }
    let mut text = format!("graph {digits} ({}, n={n})\n", cfg.kind);
    for (k, v) in &rows {
        let _ = writeln!(text, "{k}: {}", compact(v));
    }
    let mut props = serde_json::Map::new();
    for (k, v) in &rows {
        props.insert(k.clone(), v.clone());
    }
    let mut csv = vec![row(["graph", "kind", "n", "property", "value"])];
    for (k, v) in &rows {
        csv.push(row([
            digits.to_string(),
            cfg.kind.to_string(),
            n.to_string(),
            k.clone(),
            compact(v),
        ]));
    }
    Ok(Report {
        text,
        json: json!({ "graph": digits, "kind": cfg.kind, "n": n, "properties": props }),
        csv,
        timed_out: false,
    })
}

fn compact(v: &Value) -> String {
    match v {
        Value::Array(items) => items.iter().map(compact).collect::<Vec<_>>().join(","),
        other => other.to_string(),
    }
}

/// A materialized or counted construction, erased over kind.
struct Built {
    property: Property,
    size: BigUint,
    members: Option<Vec<String>>,
    text: Option<String>,
    verified: Option<bool>,
}

fn finish<G: Graph>(
    family: Option<Family<G>>,
    size: BigUint,
    property: Property,
    verify: bool,
) -> Result<Built, CliError> {
    let verified = match (&family, verify) {
        (Some(f), true) => Some(verify_family(f, property)?.ok),
        _ => None,
    };
    Ok(Built {
        property,
        size,
        members: family
            .as_ref()
            .map(|f| f.members().iter().map(|g| g.to_digits()).collect()),
        text: family.as_ref().map(|f| f.to_text()),
        verified,
    })
}

fn upset_built<G: Graph>(
    digits: &str,
    n: usize,
    property: Property,
    count_only: bool,
    verify: bool,
) -> Result<Built, CliError> {
    let h = G::from_digits(digits, n)?;
    let family = (!count_only).then(|| upset_of(&h)).transpose()?;
    finish(family, upset_count(&h), property, verify)
}

pub fn construct(
    cli: &Cli,
    cfg: &RunConfig,
    name: &str,
    lengths: Option<&[usize]>,
    count_only: bool,
    verify: bool,
) -> Result<Report, CliError> {
    if name != "upset" && cfg.kind != GraphKind::Simple {
        return Err(CliError::Validation(format!(
            "--kind {} cannot be combined with construct {name}",
            cfg.kind
        )));
    }
    let n = match (name, cfg.n, cli.graph.as_deref()) {
        (_, Some(n), _) => n,
        ("upset", None, Some(d)) => infer_n(d, cfg.kind)?,
        _ => return Err(CliError::Validation(format!("construct {name} needs --n"))),
    };
    let order: Vec<usize> = (0..n).collect();
    let materialize = !count_only;
    let built = match name {
        "hamilton-cycle" => {
            let f = materialize
                .then(|| hamilton_cycle_family(&order, n))
                .transpose()?;
            finish(
                f,
                hamilton_cycle_count(n)?,
                Property::HamiltonianCycle,
                verify,
            )?
        }
        "cycle-minus-one" => {
            let f = materialize
                .then(|| cycle_minus_one_family(&order, n))
                .transpose()?;
            finish(
                f,
                cycle_minus_one_count(n)?,
                Property::AtMostKComponents(2),
                verify,
            )?
        }
        "flower" => {
            let lengths = match lengths {
                Some(l) => l.to_vec(),
                None => balanced_two_flower(n).ok_or_else(|| {
                    CliError::Validation(format!("no default flower for n={n}; pass --lengths"))
                })?,
            };
            let property = Property::AtMostKComponents(lengths.len() + 1);
            let f = materialize
                .then(|| flower_family(&lengths, n))
                .transpose()?;
            finish(f, flower_count(&lengths, n)?, property, verify)?
        }
        "noneq-hampath" => {
            let f = materialize
                .then(|| hamilton_path_noneq_family(n))
                .transpose()?;
            finish(
                f,
                hamilton_path_noneq_count(n)?,
                Property::HamiltonianPath,
                verify,
            )?
        }
        "upset" => {
            let digits = cli
                .graph
                .as_deref()
                .ok_or_else(|| CliError::Validation("construct upset needs --graph".into()))?;
            match cfg.kind {
                GraphKind::Simple => {
                    upset_built::<SimpleGraph>(digits, n, Property::Connected, count_only, verify)?
                }
                GraphKind::Oriented => upset_built::<OrientedGraph>(
                    digits,
                    n,
                    Property::StronglyConnected,
                    count_only,
                    verify,
                )?,
                GraphKind::Directed => upset_built::<DirectedGraph>(
                    digits,
                    n,
                    Property::StronglyConnected,
                    count_only,
                    verify,
                )?,
            }
        }
        other => {
            return Err(CliError::Validation(format!(
                "unknown construction '{other}' (hamilton-cycle, cycle-minus-one, flower, \
                 noneq-hampath, upset)"
            )))
        }
    };
    let kind = if name == "upset" {
        cfg.kind
    } else {
        GraphKind::Simple
    };
    let share = share(&built.size, kind, n);
    // after a listing the summary goes in comments so the output reads back as a family file
    let lead = if built.text.is_some() { "# " } else { "" };
    let mut text = built.text.clone().unwrap_or_default();
    let _ = writeln!(text, "{lead}size: {}, {share}", built.size);
    if let Some(v) = built.verified {
        let _ = writeln!(text, "{lead}{}-intersecting: {}", built.property, yes(v));
    }
    let json = json!({
        "construction": name,
        "kind": kind,
        "n": n,
        "property": built.property.name(),
        "size": built.size.to_string(),
        "share": share,
        "verified": built.verified,
        "members": built.members,
    });
    let csv = vec![
        row(["construction", "kind", "n", "property", "size", "verified"]),
        row([
            name.to_string(),
            kind.to_string(),
            n.to_string(),
            built.property.name(),
            built.size.to_string(),
            built
                .verified
                .map(|v| yes(v).to_string())
                .unwrap_or_default(),
        ]),
    ];
    Ok(Report {
        text,
        json,
        csv,
        timed_out: false,
    })
}

fn certificate_text(text: &mut String, cert: &CutCertificate, what: &str, want_witnesses: bool) {
    let _ = writeln!(text, "nonzero elements checked: {}", cert.elements_checked);
    match &cert.failing_element {
        None => {
            let _ = writeln!(text, "every nonzero element {what}");
        }
        Some(e) => {
            let _ = writeln!(text, "fails at element {e}");
        }
    }
    if want_witnesses {
        for w in cert.witnesses.iter().flatten() {
            let side: Vec<String> = w.side.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(text, "  {} side {{{}}}", w.element, side.join(","));
        }
    }
}

pub fn certify(cli: &Cli, cfg: &RunConfig) -> Result<Report, CliError> {
    let n = cfg.require_n("certify")?;
    let mut text = String::new();
    let (cert, span, bound, extra) = match cfg.kind {
        GraphKind::Simple => {
            let s = star_span(n)?;
            let cert = verify_undirected_cut_property(&s, n, cli.witnesses)?;
            let _ = writeln!(text, "star span, simple, n={n}");
            let _ = writeln!(
                text,
                "rank: {} (n-1 = {}), ambient dimension {}",
                s.rank(),
                n.saturating_sub(1),
                s.ambient_dim()
            );
            certificate_text(
                &mut text,
                &cert,
                "has a disconnected complement",
                cli.witnesses,
            );
            (cert, "stars", coset_bound(&s), Value::Null)
        }
        GraphKind::Directed => {
            let s = out_star_span(n)?;
            let cert = verify_directed_cut_property(&s, n, cli.witnesses)?;
            let shortcut = out_star_shortcut_holds(n)?;
            let _ = writeln!(text, "out-star span, directed, n={n}");
            let _ = writeln!(
                text,
                "rank: {} (n = {n}), ambient dimension {}",
                s.rank(),
                s.ambient_dim()
            );
            certificate_text(&mut text, &cert, "contains a full out-cut", cli.witnesses);
            let _ = writeln!(
                text,
                "each sum of out-stars contains the out-cut of each of its centres: {}",
                yes(shortcut)
            );
            (
                cert,
                "out-stars",
                coset_bound(&s),
                json!({ "out_star_shortcut": shortcut }),
            )
        }
        GraphKind::Oriented => {
            let gens = (0..n)
                .map(|i| {
                    let arcs: Vec<_> = (0..n).filter(|&j| j != i).map(|j| (i, j)).collect();
                    OrientedGraph::from_arcs(n, &arcs)
                })
                .collect::<Result<Vec<_>, _>>()?;
            let e = explore_gf3_cut_span(&gens)?;
            let _ = writeln!(
                text,
                "GF(3) span of oriented out-stars, n={n} (exploration only)"
            );
            let _ = writeln!(text, "span size: {} = 3^{}", e.span_size, e.dimension);
            let _ = writeln!(
                text,
                "nonzero elements without a full out-cut: {}",
                e.elements_without_cut
            );
            if let Some(first) = &e.first_without_cut {
                let _ = writeln!(text, "first such element: {first}");
            }
            let csv = vec![
                row([
                    "kind",
                    "n",
                    "span_size",
                    "dimension",
                    "elements_without_cut",
                ]),
                row([
                    "oriented".to_string(),
                    n.to_string(),
                    e.span_size.to_string(),
                    e.dimension.to_string(),
                    e.elements_without_cut.to_string(),
                ]),
            ];
            return Ok(Report {
                text,
                json: json!({ "kind": "oriented", "n": n, "exploration": e }),
                csv,
                timed_out: false,
            });
        }
    };
    let _ = writeln!(
        text,
        "coset bound: {}, {}",
        power_form(&bound, 2),
        share(&bound, cfg.kind, n)
    );
    let _ = writeln!(
        text,
        "certificate: {}",
        if cert.valid { "valid" } else { "invalid" }
    );
    let csv = vec![
        row([
            "kind",
            "n",
            "span",
            "rank",
            "elements_checked",
            "coset_bound",
            "valid",
        ]),
        row([
            cfg.kind.to_string(),
            n.to_string(),
            span.to_string(),
            cert.rank.to_string(),
            cert.elements_checked.to_string(),
            bound.to_string(),
            yes(cert.valid).to_string(),
        ]),
    ];
    Ok(Report {
        text,
        json: json!({
            "kind": cfg.kind,
            "n": n,
            "span": span,
            "certificate": cert,
            "coset_bound": bound.to_string(),
            "extra": extra,
        }),
        csv,
        timed_out: false,
    })
}

fn pipeline_report(p: &PipelineReport, kind: GraphKind, what: &str) -> Report {
    let q = p.alphabet as u32;
    let mut text = format!("{} pipeline, {kind}, n={}\n", p.cover, p.n);
    let _ = writeln!(
        text,
        "cover: {} blocks of {} coordinates, each coordinate covered {} times",
        p.rows.len(),
        p.rows.first().map_or(0, |r| r.coords),
        p.multiplicity
    );
    if let Some(r) = p.rows.first() {
        let _ = writeln!(text, "block cap: {} ({what})", power_form(&r.cap, q));
    }
    let _ = writeln!(text, "product of caps: {}", power_form(&p.product, q));
    let _ = writeln!(
        text,
        "bound: {}, {}",
        power_form(&p.bound, q),
        share(&p.bound, kind, p.n)
    );
    let mut csv = vec![row(["n", "cover", "block", "coords", "cap"])];
    for r in &p.rows {
        csv.push(row([
            p.n.to_string(),
            p.cover.clone(),
            r.block.to_string(),
            r.coords.to_string(),
            r.cap.to_string(),
        ]));
    }
    csv.push(row([
        p.n.to_string(),
        p.cover.clone(),
        "bound".to_string(),
        pair_count(p.n).to_string(),
        p.bound.to_string(),
    ]));
    Report {
        text,
        json: serde_json::to_value(p).expect("reports serialize"),
        csv,
        timed_out: false,
    }
}

fn family_cover_checks<G: Graph>(text: &str) -> Result<Report, CliError> {
    let family = Family::<G>::from_text(text)?;
    let n = family.n();
    let points = PointSet::from_family(&family);
    let mut out = format!("family of {} {} graphs, n={n}\n", family.len(), G::KIND);
    let mut records = Vec::new();
    let mut csv = vec![row(["cover", "multiplicity", "lhs", "rhs", "holds"])];
    for (name, cover) in [
        ("stars", CoverSpec::stars(n)?),
        ("vertex-deletions", CoverSpec::vertex_deletions(n)?),
    ] {
        let c = shearer_bound_check(&points, &cover)?;
        let _ = writeln!(
            out,
            "{name}: |F|^{} = {} <= {} = product of projections: {}",
            cover.multiplicity,
            c.lhs,
            c.rhs,
            yes(c.holds)
        );
        csv.push(row([
            name.to_string(),
            cover.multiplicity.to_string(),
            c.lhs.to_string(),
            c.rhs.to_string(),
            yes(c.holds).to_string(),
        ]));
        records.push(json!({ "cover": name, "multiplicity": cover.multiplicity, "check": c }));
    }
    Ok(Report {
        text: out,
        json: json!({ "kind": G::KIND, "n": n, "size": family.len(), "covers": records }),
        csv,
        timed_out: false,
    })
}

pub fn bound(
    cli: &Cli,
    cfg: &RunConfig,
    family: Option<&std::path::Path>,
) -> Result<Report, CliError> {
    if let Some(path) = family {
        if cli.n.is_some() || cli.kind.is_some() || cli.property.is_some() {
            return Err(CliError::Validation(
                "--family cannot be combined with --n, --kind or --property".into(),
            ));
        }
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        let header = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))
            .ok_or_else(|| CliError::Validation("empty family file".into()))?;
        return match parse_header(header)?.kind {
            GraphKind::Simple => family_cover_checks::<SimpleGraph>(&text),
            GraphKind::Oriented => family_cover_checks::<OrientedGraph>(&text),
            GraphKind::Directed => family_cover_checks::<DirectedGraph>(&text),
        };
    }
    let n = cfg.require_n("bound")?;
    match (cfg.kind, cfg.property) {
        (GraphKind::Oriented, None | Some(Property::StronglyConnected)) => Ok(pipeline_report(
            &oriented_star_pipeline(n)?,
            GraphKind::Oriented,
            "2-agreeing subsets of {0,1,2}^(n-1)",
        )),
        (GraphKind::Simple, None | Some(Property::HamiltonianCycle | Property::NoCutvertex)) => {
            Ok(pipeline_report(
                &hamiltonian_deletion_pipeline(n)?,
                GraphKind::Simple,
                "connected-intersecting on n-1 vertices",
            ))
        }
        (kind, p) => Err(CliError::Validation(format!(
            "--kind {kind} and --property {} have no projection pipeline",
            p.map(|p| p.name()).unwrap_or_else(|| "(none)".into())
        ))),
    }
}

pub fn search_options(cli: &Cli) -> SearchOptions {
    SearchOptions {
        time_limit: Some(Duration::from_secs(cli.time_limit)),
        symmetry: cli.symmetry,
        seed_construction: cli.seed_construction,
        enumerate_all: cli.all,
        force: cli.force,
    }
}

fn status_name(s: SearchStatus) -> &'static str {
    match s {
        SearchStatus::Complete => "complete",
        SearchStatus::TimeoutLowerBound => "timeout-lower-bound",
    }
}

fn digits<G: Graph>(f: &Family<G>) -> Vec<String> {
    f.members().iter().map(|g| g.to_digits()).collect()
}

fn search_report<G: Graph>(r: &SearchResult<G>, with_all: bool) -> Report {
    let kind = G::KIND;
    let bounds = known_bounds(kind, r.n, r.property);
    let size = BigUint::from(r.max_size);
    let mut text = format!("search {kind} n={} property={}\n", r.n, r.property);
    let _ = writeln!(text, "candidates: {}", r.stats.candidates);
    match r.status {
        SearchStatus::Complete => {
            let _ = writeln!(text, "maximum: {} (exact)", r.max_size);
        }
        SearchStatus::TimeoutLowerBound => {
            let _ = writeln!(
                text,
                "maximum: at least {} (time limit reached; certified lower bound)",
                r.max_size
            );
        }
    }
    let _ = writeln!(text, "share: {}", share(&size, kind, r.n));
    for b in &bounds {
        let tag = if b.proven { "proven" } else { "conjectured" };
        let rel = if size == b.value {
            "attained"
        } else if size > b.value {
            "exceeded"
        } else {
            "not attained"
        };
        let _ = writeln!(text, "bound ({tag}): {} = {}, {rel}", b.source, b.value);
    }
    let _ = writeln!(text, "witness:");
    text.push_str(&r.witness.to_text());
    if with_all {
        if let Some(all) = &r.all_maximum {
            let _ = writeln!(text, "maximum families: {}", all.len());
            for (i, f) in all.iter().enumerate() {
                let _ = writeln!(text, "# {}", i + 1);
                text.push_str(&f.to_text());
            }
        }
    }
    let json = json!({
        "kind": kind,
        "n": r.n,
        "property": r.property.name(),
        "max_size": r.max_size,
        "status": r.status,
        "witness": digits(&r.witness),
        "all_maximum": r.all_maximum.as_ref().map(|all| all.iter().map(digits).collect::<Vec<_>>()),
        "bound_refs": bounds,
        "stats": r.stats,
    });
    let csv = vec![
        row([
            "kind",
            "n",
            "property",
            "max_size",
            "status",
            "maximum_families",
            "candidates",
            "compatible_pairs",
            "nodes",
            "elapsed_ms",
        ]),
        row([
            kind.to_string(),
            r.n.to_string(),
            r.property.name(),
            r.max_size.to_string(),
            status_name(r.status).to_string(),
            r.all_maximum
                .as_ref()
                .map(|a| a.len().to_string())
                .unwrap_or_default(),
            r.stats.candidates.to_string(),
            r.stats.compatible_pairs.to_string(),
            r.stats.nodes.to_string(),
            r.stats.elapsed_ms.to_string(),
        ]),
    ];
    Report {
        text,
        json,
        csv,
        timed_out: r.status == SearchStatus::TimeoutLowerBound,
    }
}

pub fn search(cli: &Cli, cfg: &RunConfig) -> Result<Report, CliError> {
    let n = cfg.require_n("search")?;
    let property = cfg
        .property
        .ok_or_else(|| CliError::Validation("search needs --property".into()))?;
    let opts = search_options(cli);
    Ok(match cfg.kind {
        GraphKind::Simple => {
            search_report(&max_family::<SimpleGraph>(n, property, &opts)?, cli.all)
        }
        GraphKind::Oriented => {
            search_report(&max_family::<OrientedGraph>(n, property, &opts)?, cli.all)
        }
        GraphKind::Directed => {
            search_report(&max_family::<DirectedGraph>(n, property, &opts)?, cli.all)
        }
    })
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref()
        .map(|x| x.to_string())
        .unwrap_or_else(|| "-".into())
}

pub fn conjectures(cli: &Cli, cfg: &RunConfig) -> Result<Report, CliError> {
    let n = cfg.require_n("conjectures")?;
    let opts = SearchOptions {
        enumerate_all: false,
        ..search_options(cli)
    };
    let reports: Vec<ConjectureReport> = cfg
        .conjectures
        .iter()
        .map(|&c| conjecture_report(n, c, &opts))
        .collect::<Result<_, _>>()?;
    let header = [
        "conjecture",
        "n",
        "property",
        "conjectured_bound",
        "construction_size",
        "construction_verified",
        "search_max",
        "status",
        "verdict",
    ];
    let mut csv = vec![row(header.iter().chain(&["nodes"]))];
    let mut table = vec![row(header)];
    for r in &reports {
        let cells = row([
            r.conjecture.name().to_string(),
            n.to_string(),
            r.property.clone(),
            opt(&r.conjectured_bound),
            opt(&r.construction_size),
            opt(&r.construction_verified.map(yes)),
            r.search_max.to_string(),
            status_name(r.search_status).to_string(),
            verdict_name(r),
        ]);
        let mut with_nodes = cells.clone();
        with_nodes.push(r.nodes.to_string());
        csv.push(with_nodes);
        table.push(cells);
    }
    let widths: Vec<usize> = (0..header.len())
        .map(|c| table.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let mut text = String::new();
    for r in &table {
        let line: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        let _ = writeln!(text, "{}", line.join("  ").trim_end());
    }
    for r in &reports {
        let _ = writeln!(
            text,
            "witness for {} (size {}):",
            r.conjecture.name(),
            r.search_max
        );
        let _ = writeln!(text, "family n={n} kind=simple count={}", r.witness.len());
        for w in &r.witness {
            let _ = writeln!(text, "{w}");
        }
    }
    let timed_out = reports
        .iter()
        .any(|r| r.search_status == SearchStatus::TimeoutLowerBound);
    Ok(Report {
        text,
        json: serde_json::to_value(&reports).expect("reports serialize"),
        csv,
        timed_out,
    })
}

fn verdict_name(r: &ConjectureReport) -> String {
    serde_json::to_value(r.verdict)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

pub fn oracle(m: usize, q: u8, t: usize) -> Result<Report, CliError> {
    let (size, witness) = if t == 2 {
        ft_max_2agree(m, q)?
    } else {
        max_agreeing_set(m, q, t)?
    };
    let mut text = format!(
        "largest subset of [{q}]^{m} with pairwise agreement >= {t}: {}\n",
        power_form(&BigUint::from(size), q as u32)
    );
    for p in witness.points() {
        let s: String = p.iter().map(|d| char::from(b'0' + d)).collect();
        let _ = writeln!(text, "{s}");
    }
    let points: Vec<String> = witness
        .points()
        .iter()
        .map(|p| p.iter().map(|d| char::from(b'0' + d)).collect())
        .collect();
    Ok(Report {
        text,
        json: json!({ "m": m, "q": q, "t": t, "max_size": size, "witness": points }),
        csv: vec![
            row(["m", "q", "t", "max_size"]),
            row([
                m.to_string(),
                q.to_string(),
                t.to_string(),
                size.to_string(),
            ]),
        ],
        timed_out: false,
    })
}
