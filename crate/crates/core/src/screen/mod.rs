//! Necessary conditions for quantum isomorphism, relation export, and
//! certificates of noncommutativity.

mod bundle;

use std::collections::BTreeMap;

use serde::Serialize;

pub use bundle::{
    export_groundset_relations, export_pointed_relations, is_structure_tuple, parse_bundle,
    substitution_table, write_substitutions, GridKind, ParsedBundle, Relation, RelationBundle,
    Substitution, Term,
};

use crate::error::{Error, Result};
use crate::graph::{
    disjoint_automorphism_pair, lift_to_vertices, private_pair_pattern, DisjointPair, GraphIso,
    RelColoredGraph, GROUP_ENUMERATION_CAP,
};
use crate::matroid::Matroid;
use crate::structures::{covers, structure_sets, IsoStructure};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "possibly quantum isomorphic")]
    Possibly,
    #[serde(rename = "not quantum isomorphic")]
    Not,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScreenReport {
    pub structure: IsoStructure,
    pub forced: bool,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
}

fn size_profile(m: &Matroid, s: IsoStructure) -> Result<BTreeMap<usize, usize>> {
    let mut out = BTreeMap::new();
    for a in structure_sets(m, s)? {
        *out.entry(a.len()).or_insert(0) += 1;
    }
    out.remove(&0);
    Ok(out)
}

fn refuse_uncovered(m: &Matroid, n: &Matroid, s: IsoStructure) -> Result<()> {
    for (side, x) in [("M", m), ("N", n)] {
        if let Some(w) = covers(x, s)?.witness {
            return Err(Error::NotCovering {
                structure: format!("{s} on {side}"),
                witness: w,
            });
        }
    }
    Ok(())
}

/// Screen `(m, n)` against the counting obstructions. Both matroids must be
/// covered by `s`.
pub fn screen_quantum_iso(m: &Matroid, n: &Matroid, s: IsoStructure) -> Result<ScreenReport> {
    refuse_uncovered(m, n, s)?;
    screen_unchecked(m, n, s, false)
}

/// The same checks without the covering precondition.
pub fn screen_quantum_iso_forced(
    m: &Matroid,
    n: &Matroid,
    s: IsoStructure,
) -> Result<ScreenReport> {
    screen_unchecked(m, n, s, true)
}

fn screen_unchecked(
    m: &Matroid,
    n: &Matroid,
    s: IsoStructure,
    forced: bool,
) -> Result<ScreenReport> {
    let mut checks = vec![Check {
        name: "ground-set-size".into(),
        passed: m.n() == n.n(),
        detail: format!("{} vs {}", m.n(), n.n()),
    }];
    let (pm, pn) = (size_profile(m, s)?, size_profile(n, s)?);
    checks.push(Check {
        name: "sizes-by-cardinality".into(),
        passed: pm == pn,
        detail: format!("{pm:?} vs {pn:?}"),
    });
    if matches!(s, IsoStructure::Bases | IsoStructure::NonBases) {
        checks.push(Check {
            name: "rank".into(),
            passed: m.rank() == n.rank(),
            detail: format!("{} vs {}", m.rank(), n.rank()),
        });
    }
    if s == IsoStructure::Circuits && m.rank() == n.rank() {
        let (a, b) = (m.is_paving()?, n.is_paving()?);
        checks.push(Check {
            name: "paving".into(),
            passed: a == b,
            detail: format!("{a} vs {b}"),
        });
    }
    let verdict = if checks.iter().all(|c| c.passed) {
        Verdict::Possibly
    } else {
        Verdict::Not
    };
    Ok(ScreenReport {
        structure: s,
        forced,
        checks,
        verdict,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateRoute {
    PrivatePairs,
    GroupScan,
}

/// Two disjoint nontrivial automorphisms of `G(M, S)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct NoncommutativityCertificate {
    pub structure: IsoStructure,
    pub route: CertificateRoute,
    /// The two ground-set transpositions, for the private-pair route.
    pub swaps: Option<[(usize, usize); 2]>,
    pub first: GraphIso,
    pub second: GraphIso,
    pub supports: [Vec<usize>; 2],
    pub verified: bool,
}

fn transposition(n: usize, a: usize, b: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.swap(a, b);
    p
}

/// Try the private-pair pattern first, then scan the automorphism group of
/// the relation graph.
pub fn noncommutativity_certificate(
    m: &Matroid,
    s: IsoStructure,
) -> Result<Option<NoncommutativityCertificate>> {
    refuse_uncovered(m, m, s)?;
    let g = RelColoredGraph::build(m, s)?;
    let family = structure_sets(m, s)?;
    let found = match private_pair_pattern(&family, m.n()) {
        Some(((a, b), (c, d))) => {
            let first = lift_to_vertices(&g, &g, &transposition(m.n(), a, b))?;
            let second = lift_to_vertices(&g, &g, &transposition(m.n(), c, d))?;
            Some((
                CertificateRoute::PrivatePairs,
                Some([(a, b), (c, d)]),
                DisjointPair { first, second },
            ))
        }
        None => disjoint_automorphism_pair(g.colored(), GROUP_ENUMERATION_CAP)?
            .map(|p| (CertificateRoute::GroupScan, None, p)),
    };
    Ok(found.map(|(route, swaps, pair)| {
        let verified = pair.verify(g.colored());
        NoncommutativityCertificate {
            structure: s,
            route,
            swaps,
            supports: [pair.first.support(), pair.second.support()],
            first: pair.first,
            second: pair.second,
            verified,
        }
    }))
}

/// Rank `r` on `r + 2` elements whose nonbases are `E - {0, 1}` and
/// `E - {2, 3}`.
pub fn two_nonbasis_family(r: usize) -> Result<Matroid> {
    let n = r + 2;
    let e = crate::Subset::full(n);
    Matroid::from_nonbases(
        n,
        r,
        [
            e.difference(crate::Subset::from_elems([0, 1])),
            e.difference(crate::Subset::from_elems([2, 3])),
        ],
    )
}
