//! Matroids given by their basis family, plus the derived structures and
//! operations everything else in the crate is built on.

mod cyclic;
mod derive;
mod iso;
mod ops;
mod predicates;
mod realize;
mod tutte;

pub use cyclic::{CyclicFlatPresentation, LatticeOps};
pub use derive::{Girth, SubsetReport};
pub use iso::{
    brute_force_isomorphic, brute_force_isomorphic_with_guard, count_automorphisms, isomorphic,
    BRUTE_FORCE_GUARD,
};
pub use predicates::{Connectivity, Predicates, CONNECTIVITY_GUARD};
pub use realize::{grid_matrix, Rational};
pub use tutte::{Polynomial, TuttePolynomial, TUTTE_GUARD};

use crate::error::{elems, Error, Result};
use crate::subset::{k_subsets, Subset, MAX_ELEMENTS};

/// Full enumeration of flats, circuits etc. is refused above this size.
pub const ENUMERATION_GUARD: usize = 24;

#[derive(Clone, Debug)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<Subset>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rank == other.rank && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl Matroid {
    /// Validate a basis family and bring it into canonical (colex) order.
    pub fn from_bases<I: IntoIterator<Item = Subset>>(n: usize, bases: I) -> Result<Matroid> {
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge {
                n,
                max: MAX_ELEMENTS,
            });
        }
        let full = Subset::full(n);
        let mut bases: Vec<Subset> = bases.into_iter().collect();
        let Some(first) = bases.first() else {
            return Err(Error::EmptyFamily);
        };
        let rank = first.len();
        for b in &bases {
            if !b.is_subset(full) {
                let element = b.difference(full).min_elem().unwrap_or(n);
                return Err(Error::OutOfRange { element, n });
            }
            if b.len() != rank {
                return Err(Error::CardinalityMismatch {
                    expected: rank,
                    found: b.len(),
                });
            }
        }
        bases.sort_unstable();
        bases.dedup();
        check_exchange(&bases)?;
        Ok(Matroid {
            n,
            rank,
            bases,
            labels: None,
        })
    }

    /// Internal constructor for families that are matroids by construction.
    pub(crate) fn from_sorted_bases_unchecked(
        n: usize,
        rank: usize,
        bases: Vec<Subset>,
    ) -> Matroid {
        debug_assert!(bases.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(bases.iter().all(|b| b.len() == rank));
        Matroid {
            n,
            rank,
            bases,
            labels: None,
        }
    }

    pub(crate) fn from_bases_unchecked(n: usize, rank: usize, mut bases: Vec<Subset>) -> Matroid {
        bases.sort_unstable();
        bases.dedup();
        Matroid::from_sorted_bases_unchecked(n, rank, bases)
    }

    /// The matroid whose bases are the `r`-subsets not listed in `nonbases`.
    pub fn from_nonbases<I: IntoIterator<Item = Subset>>(
        n: usize,
        r: usize,
        nonbases: I,
    ) -> Result<Matroid> {
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge {
                n,
                max: MAX_ELEMENTS,
            });
        }
        let full = Subset::full(n);
        let mut nb: Vec<Subset> = nonbases.into_iter().collect();
        for s in &nb {
            if !s.is_subset(full) {
                let element = s.difference(full).min_elem().unwrap_or(n);
                return Err(Error::OutOfRange { element, n });
            }
            if s.len() != r {
                return Err(Error::CardinalityMismatch {
                    expected: r,
                    found: s.len(),
                });
            }
        }
        nb.sort_unstable();
        nb.dedup();
        let bases: Vec<Subset> = k_subsets(n, r)
            .filter(|s| nb.binary_search(s).is_err())
            .collect();
        Matroid::from_bases(n, bases)
    }

    /// The uniform matroid `U(r, n)`.
    pub fn uniform(r: usize, n: usize) -> Matroid {
        assert!(r <= n && n <= MAX_ELEMENTS);
        Matroid::from_sorted_bases_unchecked(n, r, k_subsets(n, r).collect())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Matroid {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ground_set(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, e: usize) -> String {
        match &self.labels {
            Some(l) => l[e].clone(),
            None => e.to_string(),
        }
    }

    pub fn is_basis(&self, s: Subset) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    /// `r`-subsets that are not bases, in colex order.
    pub fn nonbases(&self) -> Vec<Subset> {
        k_subsets(self.n, self.rank)
            .filter(|s| !self.is_basis(*s))
            .collect()
    }

    pub(crate) fn check_subset(&self, a: Subset) -> Result<()> {
        let full = self.ground_set();
        if a.is_subset(full) {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                element: a.difference(full).min_elem().unwrap_or(self.n),
                n: self.n,
            })
        }
    }

    /// Rank as the largest intersection with a basis.
    pub fn rank_of(&self, a: Subset) -> Result<usize> {
        self.check_subset(a)?;
        Ok(self.rank_unchecked(a))
    }

    pub(crate) fn rank_unchecked(&self, a: Subset) -> usize {
        let cap = a.len().min(self.rank);
        let mut best = 0;
        for b in &self.bases {
            let k = b.intersection(a).len();
            if k > best {
                best = k;
                if best == cap {
                    break;
                }
            }
        }
        best
    }

    pub fn is_independent(&self, a: Subset) -> bool {
        a.len() <= self.rank && self.rank_unchecked(a) == a.len()
    }

    pub fn closure(&self, a: Subset) -> Result<Subset> {
        self.check_subset(a)?;
        Ok(self.closure_unchecked(a))
    }

    pub(crate) fn closure_unchecked(&self, a: Subset) -> Subset {
        let r = self.rank_unchecked(a);
        let mut cl = a;
        for e in a.complement(self.n).iter() {
            if self.rank_unchecked(a.insert(e)) == r {
                cl = cl.insert(e);
            }
        }
        cl
    }

    /// Elements in no basis.
    pub fn loops(&self) -> Subset {
        let used = self.bases.iter().fold(Subset::EMPTY, |u, b| u.union(*b));
        used.complement(self.n)
    }

    /// Elements in every basis.
    pub fn coloops(&self) -> Subset {
        self.bases
            .iter()
            .fold(self.ground_set(), |u, b| u.intersection(*b))
    }

    /// Rank of every subset, indexed by mask. `O(n 2^n)`.
    pub fn rank_table(&self) -> Result<Vec<u8>> {
        if self.n > ENUMERATION_GUARD {
            return Err(Error::GuardExceeded {
                what: "rank table",
                size: self.n,
                guard: ENUMERATION_GUARD,
            });
        }
        let size = 1usize << self.n;
        let mut indep = vec![false; size];
        for b in &self.bases {
            indep[b.bits() as usize] = true;
        }
        for mask in (0..size).rev() {
            if indep[mask] || (mask.count_ones() as usize) >= self.rank {
                continue;
            }
            let mut free = !mask & (size - 1);
            while free != 0 {
                let bit = free & free.wrapping_neg();
                if indep[mask | bit] {
                    indep[mask] = true;
                    break;
                }
                free &= free - 1;
            }
        }
        let mut rank = vec![0u8; size];
        for mask in 1..size {
            if indep[mask] {
                rank[mask] = mask.count_ones() as u8;
            } else {
                let mut best = 0u8;
                let mut rest = mask;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    best = best.max(rank[mask ^ bit]);
                    rest &= rest - 1;
                }
                rank[mask] = best;
            }
        }
        Ok(rank)
    }

    /// Apply an element relabeling `e -> perm[e]`.
    pub fn permuted(&self, perm: &[usize]) -> Matroid {
        assert_eq!(perm.len(), self.n);
        let bases = self.bases.iter().map(|b| b.map(perm)).collect();
        let mut m = Matroid::from_bases_unchecked(self.n, self.rank, bases);
        if let Some(labels) = &self.labels {
            let mut new = vec![String::new(); self.n];
            for (e, l) in labels.iter().enumerate() {
                new[perm[e]] = l.clone();
            }
            m.labels = Some(new);
        }
        m
    }
}

fn check_exchange(bases: &[Subset]) -> Result<()> {
    for &a in bases {
        for &b in bases {
            if a == b {
                continue;
            }
            for x in a.difference(b).iter() {
                let base = a.remove(x);
                let ok = b
                    .difference(a)
                    .iter()
                    .any(|y| bases.binary_search(&base.insert(y)).is_ok());
                if !ok {
                    return Err(Error::ExchangeAxiomViolation {
                        a: elems(a),
                        b: elems(b),
                        element: x,
                    });
                }
            }
        }
    }
    Ok(())
}

/// Build a subset from 1-based element labels, as matroids are written by hand.
pub fn set1(elems: &[usize]) -> Subset {
    Subset::from_elems(elems.iter().map(|e| e - 1))
}

/// Parse compact 1-based digit strings such as `"123"` into subsets.
pub fn sets1(digits: &[&str]) -> Vec<Subset> {
    digits
        .iter()
        .map(|d| {
            Subset::from_elems(
                d.chars()
                    .map(|c| c.to_digit(10).expect("digit") as usize - 1),
            )
        })
        .collect()
}

/// The rank-3 matroid on a 3x3 grid of points whose nonbases are the rows
/// and columns.
pub fn grid_matroid() -> Matroid {
    Matroid::from_nonbases(9, 3, sets1(&["123", "456", "789", "147", "258", "369"]))
        .expect("grid matroid is valid")
}
