//! From a rank-3 sparse paving matroid and signs on its cyclic hyperplanes,
//! build the signed linear system and the matroid `M_S` on `E x {+1, -1}`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{Constraint, Lbcs};
use crate::matroid::{grid_matroid, isomorphic, CyclicFlatPresentation, Matroid};
use crate::subset::{k_subsets, Subset};

/// Signs on the cyclic hyperplanes of a matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignAssignment {
    pub signs: BTreeMap<Subset, i8>,
}

impl SignAssignment {
    pub fn homogeneous(m: &Matroid) -> Result<SignAssignment> {
        Ok(SignAssignment {
            signs: m
                .cyclic_hyperplanes()?
                .into_iter()
                .map(|h| (h, 1))
                .collect(),
        })
    }

    /// All +1 except the listed hyperplanes.
    pub fn with_negative(m: &Matroid, negative: &[Subset]) -> Result<SignAssignment> {
        let mut s = SignAssignment::homogeneous(m)?;
        for h in negative {
            match s.signs.get_mut(h) {
                Some(v) => *v = -1,
                None => {
                    return Err(Error::SignDomainMismatch(format!(
                        "{h:?} is not a cyclic hyperplane"
                    )))
                }
            }
        }
        Ok(s)
    }

    fn check_domain(&self, m: &Matroid) -> Result<Vec<Subset>> {
        let hs = m.cyclic_hyperplanes()?;
        let keys: Vec<Subset> = self.signs.keys().copied().collect();
        if keys != hs {
            return Err(Error::SignDomainMismatch(format!(
                "expected {hs:?}, got {keys:?}"
            )));
        }
        if let Some((h, s)) = self.signs.iter().find(|(_, &s)| s != 1 && s != -1) {
            return Err(Error::SignDomainMismatch(format!("sign {s} on {h:?}")));
        }
        Ok(hs)
    }
}

/// Element `(a, s)` of `E x {+1, -1}` has index `2a` for `s = +1` and
/// `2a + 1` for `s = -1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SignedGroundElement {
    pub base: usize,
    pub sign: i8,
}

impl SignedGroundElement {
    pub fn index(self) -> usize {
        2 * self.base + usize::from(self.sign == -1)
    }

    pub fn from_index(i: usize) -> SignedGroundElement {
        SignedGroundElement {
            base: i / 2,
            sign: if i.is_multiple_of(2) { 1 } else { -1 },
        }
    }

    pub fn label(self) -> String {
        format!(
            "({},{})",
            self.base + 1,
            if self.sign == 1 { "+1" } else { "-1" }
        )
    }
}

/// The projection `pi` onto `E`.
pub fn project(s: Subset) -> Subset {
    s.iter().fold(Subset::EMPTY, |p, i| p.insert(i / 2))
}

/// One variable per element, one constraint per cyclic hyperplane in colex
/// order.
pub fn lbcs_from_matroid(m: &Matroid, signs: &SignAssignment) -> Result<Lbcs> {
    let hs = signs.check_domain(m)?;
    let constraints = hs
        .iter()
        .map(|h| Constraint {
            vars: h.iter().collect(),
            sign: signs.signs[h],
        })
        .collect();
    Lbcs::new(m.n(), constraints)
}

/// The signed copies `K` of a hyperplane `H`: one element over each point
/// of `H`, with sign product `s_H`.
fn signed_lifts(h: Subset, sign: i8) -> Vec<Subset> {
    let pts: Vec<usize> = h.iter().collect();
    let k = pts.len();
    (0..1u32 << k)
        .filter(|mask| {
            if mask.count_ones() % 2 == 0 {
                sign == 1
            } else {
                sign == -1
            }
        })
        .map(|mask| {
            pts.iter().enumerate().fold(Subset::EMPTY, |s, (j, &a)| {
                s.insert(2 * a + (mask >> j & 1) as usize)
            })
        })
        .collect()
}

/// The cyclic flat presentation of `M_S`: the empty set, the whole ground
/// set, and every signed lift of a cyclic hyperplane at rank 2.
pub fn m_s_presentation(m: &Matroid, signs: &SignAssignment) -> Result<CyclicFlatPresentation> {
    let hs = signs.check_domain(m)?;
    let n = 2 * m.n();
    let mut pairs = vec![(Subset::EMPTY, 0), (Subset::full(n), 3)];
    for h in &hs {
        pairs.extend(signed_lifts(*h, signs.signs[h]).into_iter().map(|k| (k, 2)));
    }
    Ok(CyclicFlatPresentation::new(n, pairs))
}

pub fn m_s_matroid(m: &Matroid, signs: &SignAssignment) -> Result<Matroid> {
    if m.rank() != 3 || !m.is_sparse_paving()? {
        return Err(Error::NotSparsePavingRank3);
    }
    if m.is_sparse_paving_rank3_characterization()? != Some(true) {
        return Err(Error::NotSparsePavingRank3);
    }
    let pres = m_s_presentation(m, signs)?;
    let ms = Matroid::from_cyclic_flats(&pres)?;
    // the nonbases are exactly the fulfilling assignments of each equation
    let hs = signs.check_domain(m)?;
    let direct: Vec<Subset> = hs
        .iter()
        .flat_map(|h| signed_lifts(*h, signs.signs[h]))
        .collect();
    let check = Matroid::from_nonbases(ms.n(), 3, direct)?;
    if check != ms {
        return Err(Error::InvariantViolation(
            "cyclic-flat and nonbasis descriptions of M_S differ".into(),
        ));
    }
    let labels = (0..ms.n())
        .map(|i| SignedGroundElement::from_index(i).label())
        .collect();
    Ok(ms.with_labels(labels))
}

/// `P = M_hom` and `Q = M_S` with `s_789 = -1`, built from the grid matroid.
pub fn build_paper_pair() -> (Matroid, Matroid) {
    let g = grid_matroid();
    let hom = SignAssignment::homogeneous(&g).expect("grid is small");
    let row3 = Subset::from_elems([6, 7, 8]);
    let signed = SignAssignment::with_negative(&g, &[row3]).expect("789 is a line");
    let p = m_s_matroid(&g, &hom).expect("grid is rank-3 sparse paving");
    let q = m_s_matroid(&g, &signed).expect("grid is rank-3 sparse paving");
    (p, q)
}

/// The signs for `Q`.
pub fn paper_q_signs() -> SignAssignment {
    let g = grid_matroid();
    SignAssignment::with_negative(&g, &[Subset::from_elems([6, 7, 8])]).expect("789 is a line")
}

/// Rank 3 on nine elements with three disjoint nonbases `123, 456, 789`.
pub fn obstruction_n() -> Matroid {
    Matroid::from_nonbases(
        9,
        3,
        [
            Subset::from_elems([0, 1, 2]),
            Subset::from_elems([3, 4, 5]),
            Subset::from_elems([6, 7, 8]),
        ],
    )
    .expect("valid")
}

/// `{(1,+1), .., (6,+1), (7,-1), (8,-1), (9,-1)}`.
pub fn restriction_witness() -> Subset {
    Subset::from_elems([0, 2, 4, 6, 8, 10, 13, 15, 17])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RestrictionWitness {
    #[serde(rename = "Y")]
    pub y: Vec<usize>,
    pub iso: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SideScan {
    pub subsets: u64,
    pub matches: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MinorCertificate {
    pub pair: String,
    pub restriction_witness: Option<RestrictionWitness>,
    pub p_side_scan: SideScan,
}

/// Count the `k`-subsets `X` of `m` with `m|X` isomorphic to `target`.
pub fn scan_restrictions(m: &Matroid, target: &Matroid) -> SideScan {
    let subsets: Vec<Subset> = k_subsets(m.n(), target.n()).collect();
    let matches = subsets
        .par_iter()
        .filter(|&&x| {
            let r = m.restrict_unchecked(x);
            r.rank() == target.rank()
                && r.bases().len() == target.bases().len()
                && isomorphic(&r, target).is_some()
        })
        .count();
    SideScan {
        subsets: subsets.len() as u64,
        matches: matches as u64,
    }
}

/// `Q|Y` is isomorphic to `N` for the fixed witness `Y`, and no restriction
/// of `P` to nine elements is.
pub fn minor_obstruction_certificate(p: &Matroid, q: &Matroid) -> Result<MinorCertificate> {
    let n = obstruction_n();
    let y = restriction_witness();
    let qy = q.restrict(y)?;
    let restriction_witness = isomorphic(&qy, &n).map(|iso| RestrictionWitness {
        y: y.iter().collect(),
        iso,
    });
    Ok(MinorCertificate {
        pair: "P,Q".into(),
        restriction_witness,
        p_side_scan: scan_restrictions(p, &n),
    })
}
