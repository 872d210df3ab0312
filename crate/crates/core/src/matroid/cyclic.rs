use super::Matroid;
use crate::error::{elems, Error, Result};
use crate::subset::{k_subsets, Subset, MAX_ELEMENTS};

/// A lattice of subsets together with a rank on each member, from which a
/// matroid can be rebuilt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicFlatPresentation {
    pub n: usize,
    pub flats: Vec<Subset>,
    pub rho: Vec<usize>,
}

/// Join and meet tables of a finite poset of subsets, indexed like the
/// presentation's `flats`.
#[derive(Clone, Debug)]
pub struct LatticeOps {
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
    bottom: usize,
}

impl LatticeOps {
    /// Least upper bounds and greatest lower bounds under inclusion, or
    /// `NotALattice` if some pair lacks one.
    pub fn new(flats: &[Subset]) -> Result<LatticeOps> {
        let k = flats.len();
        let below = |i: usize, j: usize| flats[i].is_subset(flats[j]);
        let bound = |cands: Vec<usize>, least: bool| -> Option<usize> {
            cands.iter().copied().find(|&c| {
                cands
                    .iter()
                    .all(|&d| if least { below(c, d) } else { below(d, c) })
            })
        };
        let mut join = vec![vec![0; k]; k];
        let mut meet = vec![vec![0; k]; k];
        for i in 0..k {
            for j in i..k {
                let ups: Vec<usize> = (0..k).filter(|&c| below(i, c) && below(j, c)).collect();
                let downs: Vec<usize> = (0..k).filter(|&c| below(c, i) && below(c, j)).collect();
                let Some(u) = bound(ups, true) else {
                    return Err(Error::NotALattice(format!(
                        "no join of {:?} and {:?}",
                        flats[i], flats[j]
                    )));
                };
                let Some(d) = bound(downs, false) else {
                    return Err(Error::NotALattice(format!(
                        "no meet of {:?} and {:?}",
                        flats[i], flats[j]
                    )));
                };
                join[i][j] = u;
                join[j][i] = u;
                meet[i][j] = d;
                meet[j][i] = d;
            }
        }
        let bottom = match k {
            0 => return Err(Error::NotALattice("empty family".into())),
            _ => (1..k).fold(0, |b, i| meet[b][i]),
        };
        Ok(LatticeOps { join, meet, bottom })
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i][j]
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i][j]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }
}

impl CyclicFlatPresentation {
    pub fn new(
        n: usize,
        pairs: impl IntoIterator<Item = (Subset, usize)>,
    ) -> CyclicFlatPresentation {
        let mut pairs: Vec<(Subset, usize)> = pairs.into_iter().collect();
        pairs.sort_unstable();
        pairs.dedup_by_key(|p| p.0);
        CyclicFlatPresentation {
            n,
            flats: pairs.iter().map(|p| p.0).collect(),
            rho: pairs.iter().map(|p| p.1).collect(),
        }
    }

    pub fn rank_of(&self, flat: Subset) -> Option<usize> {
        self.flats.binary_search(&flat).ok().map(|i| self.rho[i])
    }

    /// Check the three axioms, returning the first violation found.
    pub fn check_axioms(&self) -> Result<LatticeOps> {
        if self.n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge {
                n: self.n,
                max: MAX_ELEMENTS,
            });
        }
        if self.flats.len() != self.rho.len() {
            return Err(Error::NotALattice(
                "ranks and flats differ in length".into(),
            ));
        }
        let full = Subset::full(self.n);
        if let Some(bad) = self.flats.iter().find(|f| !f.is_subset(full)) {
            return Err(Error::OutOfRange {
                element: bad.difference(full).min_elem().unwrap_or(self.n),
                n: self.n,
            });
        }
        let ops = LatticeOps::new(&self.flats)?;
        let bottom = ops.bottom();
        if self.rho[bottom] != 0 {
            let b = elems(self.flats[bottom]);
            return Err(Error::AxiomViolation {
                axiom: 1,
                x: b.clone(),
                y: b,
            });
        }
        let k = self.flats.len();
        for i in 0..k {
            for j in 0..k {
                let (x, y) = (self.flats[i], self.flats[j]);
                if i != j && x.is_subset(y) {
                    let gap = self.rho[j] as i64 - self.rho[i] as i64;
                    if !(0 < gap && gap < y.difference(x).len() as i64) {
                        return Err(Error::AxiomViolation {
                            axiom: 2,
                            x: elems(x),
                            y: elems(y),
                        });
                    }
                }
            }
        }
        for i in 0..k {
            for j in i + 1..k {
                let (x, y) = (self.flats[i], self.flats[j]);
                let (u, d) = (ops.join(i, j), ops.meet(i, j));
                let lhs = self.rho[i] + self.rho[j];
                let rhs =
                    self.rho[u] + self.rho[d] + x.intersection(y).difference(self.flats[d]).len();
                if lhs < rhs {
                    return Err(Error::AxiomViolation {
                        axiom: 3,
                        x: elems(x),
                        y: elems(y),
                    });
                }
            }
        }
        Ok(ops)
    }

    /// `rk(A) = min over Z of rho(F) + |A - F|`.
    pub fn rank(&self, a: Subset) -> usize {
        self.flats
            .iter()
            .zip(&self.rho)
            .map(|(f, r)| r + a.difference(*f).len())
            .min()
            .unwrap_or(a.len())
    }
}

impl Matroid {
    /// The unique matroid with the given cyclic flats and ranks.
    pub fn from_cyclic_flats(pres: &CyclicFlatPresentation) -> Result<Matroid> {
        pres.check_axioms()?;
        let r = pres.rank(Subset::full(pres.n));
        let bases: Vec<Subset> = k_subsets(pres.n, r)
            .filter(|b| pres.rank(*b) == r)
            .collect();
        Ok(Matroid::from_sorted_bases_unchecked(pres.n, r, bases))
    }

    /// Cyclic flats with their ranks.
    pub fn cyclic_flat_presentation(&self) -> Result<CyclicFlatPresentation> {
        let flats = self.cyclic_flats()?;
        Ok(CyclicFlatPresentation::new(
            self.n,
            flats.into_iter().map(|f| (f, self.rank_unchecked(f))),
        ))
    }
}
