//! Families of graphs on a common vertex set and the pairwise check that
//! makes a family P-intersecting.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::graph::{check_n, Graph, GraphKind};
use crate::predicates::{satisfies_unchecked, Property};

/// A duplicate-free family of graphs kept in canonical (ascending digit
/// string) order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Family<G: Graph> {
    n: usize,
    members: Vec<G>,
}

impl<G: Graph> Family<G> {
    /// Sorts and deduplicates `members`; all must live on `n` vertices.
    pub fn new(n: usize, mut members: Vec<G>) -> Result<Self> {
        check_n(n)?;
        if let Some(g) = members.iter().find(|g| g.n() != n) {
            return invalid(format!("member {g:?} is not on {n} vertices"));
        }
        members.sort_unstable();
        members.dedup();
        Ok(Family { n, members })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> GraphKind {
        G::KIND
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[G] {
        &self.members
    }

    pub fn contains(&self, g: &G) -> bool {
        self.members.binary_search(g).is_ok()
    }

    pub fn into_members(self) -> Vec<G> {
        self.members
    }

    /// Line format: a header `family n=<n> kind=<kind> count=<count>`
    /// followed by one digit string per member in canonical order.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "family n={} kind={} count={}\n",
            self.n,
            G::KIND,
            self.members.len()
        );
        for g in &self.members {
            let _ = writeln!(out, "{}", g.to_digits());
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Validation("empty family file".into()))?;
        let header = parse_header(header)?;
        if header.kind != G::KIND {
            return invalid(format!(
                "family file holds {} graphs, expected {}",
                header.kind,
                G::KIND
            ));
        }
        let members = lines
            .map(|l| G::from_digits(l, header.n))
            .collect::<Result<Vec<_>>>()?;
        if members.len() != header.count {
            return Err(Error::Validation(format!(
                "header announces {} members, file lists {}",
                header.count,
                members.len()
            )));
        }
        let family = Family::new(header.n, members)?;
        if family.len() != header.count {
            return Err(Error::Validation("family file lists duplicates".into()));
        }
        Ok(family)
    }
}

/// Parsed `family n=.. kind=.. count=..` header line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyHeader {
    pub n: usize,
    pub kind: GraphKind,
    pub count: usize,
}

pub fn parse_header(line: &str) -> Result<FamilyHeader> {
    let mut words = line.split_whitespace();
    if words.next() != Some("family") {
        return Err(Error::Validation(format!("bad family header '{line}'")));
    }
    let (mut n, mut kind, mut count) = (None, None, None);
    for w in words {
        let (key, value) = w
            .split_once('=')
            .ok_or_else(|| Error::Validation(format!("bad header field '{w}'")))?;
        let bad = |_| Error::Validation(format!("bad header field '{w}'"));
        match key {
            "n" => n = Some(value.parse::<usize>().map_err(bad)?),
            "kind" => kind = Some(value.parse::<GraphKind>()?),
            "count" => count = Some(value.parse::<usize>().map_err(bad)?),
            _ => return Err(Error::Validation(format!("unknown header field '{key}'"))),
        }
    }
    match (n, kind, count) {
        (Some(n), Some(kind), Some(count)) => Ok(FamilyHeader { n, kind, count }),
        _ => Err(Error::Validation(format!(
            "incomplete family header '{line}'"
        ))),
    }
}

/// Outcome of [`verify_family`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyCheck {
    pub ok: bool,
    /// Member indices `(i, j)`, `i <= j`, of the first pair whose
    /// intersection fails, in row-major order.
    pub first_failure: Option<(usize, usize)>,
}

/// Checks that `G ∩ H` has `property` for every pair, including `G = H`.
pub fn verify_family<G: Graph>(family: &Family<G>, property: Property) -> Result<FamilyCheck> {
    if !property.applies_to(G::KIND) {
        return invalid(format!(
            "property {property} is not defined for {} graphs",
            G::KIND
        ));
    }
    let m = family.members();
    let first_failure = (0..m.len()).into_par_iter().find_map_first(|i| {
        (i..m.len())
            .find(|&j| !satisfies_unchecked(&m[i].intersect(&m[j]).unwrap(), property))
            .map(|j| (i, j))
    });
    Ok(FamilyCheck {
        ok: first_failure.is_none(),
        first_failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{OrientedGraph, SimpleGraph};

    #[test]
    fn canonical_and_deduplicated() {
        let a = SimpleGraph::from_digits("100", 3).unwrap();
        let b = SimpleGraph::from_digits("011", 3).unwrap();
        let f = Family::new(3, vec![a, b, a]).unwrap();
        assert_eq!(f.members(), &[b, a]);
        assert!(Family::new(4, vec![a]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let g = OrientedGraph::from_digits("120", 3).unwrap();
        let h = OrientedGraph::from_digits("012", 3).unwrap();
        let f = Family::new(3, vec![g, h]).unwrap();
        let text = f.to_text();
        assert!(text.starts_with("family n=3 kind=oriented count=2\n012\n120\n"));
        assert_eq!(Family::<OrientedGraph>::from_text(&text).unwrap(), f);
        assert!(Family::<SimpleGraph>::from_text(&text).is_err());
        assert!(
            Family::<OrientedGraph>::from_text("family n=3 kind=oriented count=3\n012\n").is_err()
        );
    }

    #[test]
    fn triangles_sharing_an_edge_are_not_connected_intersecting() {
        let t1 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let t2 = SimpleGraph::from_edges(4, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        let f = Family::new(4, vec![t1, t2]).unwrap();
        let check = verify_family(&f, Property::Connected).unwrap();
        assert!(!check.ok);
        assert_eq!(check.first_failure, Some((0, 0)));
        assert!(verify_family(&f, Property::StronglyConnected).is_err());
    }
}
