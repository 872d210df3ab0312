//! Isomorphism structures, pointed sets and the `rel` score.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IsoStructure {
    Bases,
    NonBases,
    Independent,
    Circuits,
    Flats,
    Hyperplanes,
}

impl IsoStructure {
    pub const ALL: [IsoStructure; 6] = [
        IsoStructure::Bases,
        IsoStructure::NonBases,
        IsoStructure::Independent,
        IsoStructure::Circuits,
        IsoStructure::Flats,
        IsoStructure::Hyperplanes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IsoStructure::Bases => "bases",
            IsoStructure::NonBases => "nonbases",
            IsoStructure::Independent => "independent",
            IsoStructure::Circuits => "circuits",
            IsoStructure::Flats => "flats",
            IsoStructure::Hyperplanes => "hyperplanes",
        }
    }
}

impl fmt::Display for IsoStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IsoStructure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IsoStructure::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown structure {s:?}")))
    }
}

/// A member of a structure family together with one of its elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointedSet {
    pub set: Subset,
    pub point: usize,
}

impl PointedSet {
    pub fn new(set: Subset, point: usize) -> PointedSet {
        debug_assert!(set.contains(point));
        PointedSet { set, point }
    }
}

/// The subset family a structure assigns to `m`.
pub fn structure_sets(m: &Matroid, s: IsoStructure) -> Result<Vec<Subset>> {
    match s {
        IsoStructure::Bases => Ok(m.bases().to_vec()),
        IsoStructure::NonBases => Ok(m.nonbases()),
        IsoStructure::Independent => m.independent_sets(),
        IsoStructure::Circuits => m.circuits(),
        IsoStructure::Flats => m.flats(),
        IsoStructure::Hyperplanes => m.hyperplanes(),
    }
}

/// Every `(A, p)` with `p ∈ A ∈ S(M)`, by set in colex order, then by point.
pub fn pointed_sets(m: &Matroid, s: IsoStructure) -> Result<Vec<PointedSet>> {
    Ok(pointed_sets_of(&structure_sets(m, s)?))
}

pub fn pointed_sets_of(family: &[Subset]) -> Vec<PointedSet> {
    family
        .iter()
        .flat_map(|&a| a.iter().map(move |p| PointedSet::new(a, p)))
        .collect()
}

/// 0: same set and point; 1: same point only; 2: same set only; 3: neither.
pub fn rel(a: &PointedSet, b: &PointedSet) -> u8 {
    match (a.set == b.set, a.point == b.point) {
        (true, true) => 0,
        (false, true) => 1,
        (true, false) => 2,
        (false, false) => 3,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub covers: bool,
    /// Least uncovered element.
    pub witness: Option<usize>,
    /// The structural characterization, when one exists for this kind.
    pub characterization: Option<bool>,
}

/// Whether every element lies in a member of `S(M)`. For bases, circuits and
/// nonbases the structural characterization is evaluated too and must agree.
pub fn covers(m: &Matroid, s: IsoStructure) -> Result<CoverReport> {
    let union = structure_sets(m, s)?
        .iter()
        .fold(Subset::EMPTY, |u, a| u.union(*a));
    let witness = union.complement(m.n()).min_elem();
    let covers = witness.is_none();
    let characterization = covers_by_characterization(m, s)?;
    if let Some(c) = characterization {
        if c != covers {
            return Err(Error::InvariantViolation(format!(
                "{s} covering: definition says {covers}, characterization says {c}"
            )));
        }
    }
    Ok(CoverReport {
        covers,
        witness,
        characterization,
    })
}

/// Bases cover iff there are no loops; circuits cover iff there are no
/// coloops; nonbases fail to cover iff some element `e` is either a coloop
/// with `M \ e` uniform, or makes `M` the free extension of the paving
/// matroid `M \ e`. Flats always cover; hyperplanes cover unless the rank
/// is 0 or 1 on a nonempty ground set, where the nonloops lie in none.
pub fn covers_by_characterization(m: &Matroid, s: IsoStructure) -> Result<Option<bool>> {
    Ok(match s {
        IsoStructure::Bases => Some(m.loops().is_empty()),
        IsoStructure::Circuits => Some(m.coloops().is_empty()),
        IsoStructure::Flats => Some(true),
        IsoStructure::Hyperplanes => Some(m.n() == 0 || m.rank() >= 2),
        IsoStructure::Independent => None,
        IsoStructure::NonBases => {
            let r = m.rank();
            let mut bad = false;
            for e in 0..m.n() {
                let rest = m.delete(Subset::singleton(e))?;
                if m.coloops().contains(e) {
                    if rest == Matroid::uniform(r - 1, m.n() - 1) {
                        bad = true;
                        break;
                    }
                } else if rest.is_paving()? && is_free_extension_at(m, &rest, e)? {
                    bad = true;
                    break;
                }
            }
            Some(!bad)
        }
    })
}

/// Whether `m` equals the free extension of `rest = m \ e` with the new
/// element placed back at position `e`.
fn is_free_extension_at(m: &Matroid, rest: &Matroid, e: usize) -> Result<bool> {
    let ext = rest.free_extension()?;
    let n = m.n();
    let perm: Vec<usize> = (0..n)
        .map(|i| {
            if i == n - 1 {
                e
            } else if i < e {
                i
            } else {
                i + 1
            }
        })
        .collect();
    Ok(ext.permuted(&perm) == *m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{grid_matroid, sets1};

    #[test]
    fn u23_pointed_bases() {
        let u = Matroid::uniform(2, 3);
        assert_eq!(
            structure_sets(&u, IsoStructure::Bases).unwrap(),
            sets1(&["12", "13", "23"])
        );
        let ps = pointed_sets(&u, IsoStructure::Bases).unwrap();
        assert_eq!(ps.len(), 6);
        assert_eq!(ps[0], PointedSet::new(sets1(&["12"])[0], 0));
        assert_eq!(ps[1], PointedSet::new(sets1(&["12"])[0], 1));
        assert!(pointed_sets(&u, IsoStructure::NonBases).unwrap().is_empty());
    }

    #[test]
    fn rel_values() {
        let s = sets1(&["12", "13", "23"]);
        let a = PointedSet::new(s[0], 0);
        assert_eq!(rel(&a, &a), 0);
        assert_eq!(rel(&a, &PointedSet::new(s[1], 0)), 1);
        assert_eq!(rel(&a, &PointedSet::new(s[0], 1)), 2);
        assert_eq!(rel(&a, &PointedSet::new(s[2], 2)), 3);
    }

    #[test]
    fn covering_examples() {
        let u = Matroid::uniform(2, 3);
        assert!(covers(&u, IsoStructure::Bases).unwrap().covers);
        let nb = covers(&u, IsoStructure::NonBases).unwrap();
        assert_eq!((nb.covers, nb.witness), (false, Some(0)));
        assert!(
            covers(&grid_matroid(), IsoStructure::NonBases)
                .unwrap()
                .covers
        );
    }

    #[test]
    fn hyperplanes_in_low_rank() {
        let r = covers(&Matroid::uniform(1, 1), IsoStructure::Hyperplanes).unwrap();
        assert_eq!((r.covers, r.witness), (false, Some(0)));
        assert!(
            !covers(&Matroid::uniform(0, 2), IsoStructure::Hyperplanes)
                .unwrap()
                .covers
        );
        assert!(
            covers(&Matroid::uniform(2, 2), IsoStructure::Hyperplanes)
                .unwrap()
                .covers
        );
    }

    #[test]
    fn grid_hyperplanes() {
        let hs = structure_sets(&grid_matroid(), IsoStructure::Hyperplanes).unwrap();
        // six lines plus the 2-point flats not on a line: 36 - 18 = 18 pairs
        assert_eq!(hs.len(), 24);
        assert_eq!(hs.iter().filter(|h| h.len() == 3).count(), 6);
    }

    #[test]
    fn structure_names_roundtrip() {
        for k in IsoStructure::ALL {
            assert_eq!(k.name().parse::<IsoStructure>().unwrap(), k);
        }
        assert!("spanning".parse::<IsoStructure>().is_err());
    }
}
