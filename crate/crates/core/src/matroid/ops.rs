use super::Matroid;
use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_ELEMENTS};

impl Matroid {
    pub fn dual(&self) -> Matroid {
        let full = self.ground_set();
        let bases = self.bases.iter().map(|b| full.difference(*b)).collect();
        let mut d = Matroid::from_bases_unchecked(self.n, self.n - self.rank, bases);
        d.labels = self.labels.clone();
        d
    }

    /// `M|A`, re-indexed so that the elements of `A` become `0..|A|` in order.
    pub fn restrict(&self, a: Subset) -> Result<Matroid> {
        self.check_subset(a)?;
        Ok(self.restrict_unchecked(a))
    }

    pub(crate) fn restrict_unchecked(&self, a: Subset) -> Matroid {
        let r = self.rank_unchecked(a);
        let bases = self
            .bases
            .iter()
            .map(|b| b.intersection(a))
            .filter(|b| b.len() == r)
            .map(|b| b.compress(a))
            .collect();
        let mut m = Matroid::from_bases_unchecked(a.len(), r, bases);
        if let Some(labels) = &self.labels {
            m.labels = Some(a.iter().map(|e| labels[e].clone()).collect());
        }
        m
    }

    /// `M \ A`, on the remaining elements in order.
    pub fn delete(&self, a: Subset) -> Result<Matroid> {
        self.check_subset(a)?;
        Ok(self.restrict_unchecked(a.complement(self.n)))
    }

    /// `M / A = (M* \ A)*`, on the remaining elements in order.
    pub fn contract(&self, a: Subset) -> Result<Matroid> {
        self.check_subset(a)?;
        Ok(self.dual().delete(a)?.dual())
    }

    /// Elements of `other` are shifted up by `self.n()`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n = self.n + other.n;
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge {
                n,
                max: MAX_ELEMENTS,
            });
        }
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for a in &self.bases {
            for b in &other.bases {
                bases.push(Subset(a.bits() | (b.bits() << self.n)));
            }
        }
        let mut m = Matroid::from_bases_unchecked(n, self.rank + other.rank, bases);
        if let (Some(l1), Some(l2)) = (&self.labels, &other.labels) {
            m.labels = Some(l1.iter().chain(l2).cloned().collect());
        }
        Ok(m)
    }

    /// Free extension by a new element with index `n`: keeps every basis and
    /// adds `A + e` for each independent `A` of size `rank - 1`.
    pub fn free_extension(&self) -> Result<Matroid> {
        self.extension_by_hyperplanes(&[])
    }

    /// Single-element extension by a new element with index `n` whose modular
    /// cut is generated by the given hyperplanes: `I + e` becomes a basis for
    /// every independent `(rank - 1)`-set `I` whose closure is not listed.
    /// An empty list gives the free extension; all hyperplanes give a loop.
    ///
    /// The caller is responsible for the list being a linear subclass.
    pub fn extension_by_hyperplanes(&self, cut: &[Subset]) -> Result<Matroid> {
        let n = self.n + 1;
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge {
                n,
                max: MAX_ELEMENTS,
            });
        }
        let e = self.n;
        let mut bases = self.bases.clone();
        if self.rank > 0 {
            let mut seen = std::collections::HashSet::new();
            for b in &self.bases {
                for x in b.iter() {
                    let i = b.remove(x);
                    if !seen.insert(i) {
                        continue;
                    }
                    let h = self.closure_unchecked(i);
                    if !cut.contains(&h) {
                        bases.push(i.insert(e));
                    }
                }
            }
        }
        Ok(Matroid::from_bases_unchecked(n, self.rank, bases))
    }

    /// Append a coloop with index `n`.
    pub fn add_coloop(&self) -> Result<Matroid> {
        self.direct_sum(&Matroid::uniform(1, 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{grid_matroid, sets1};

    #[test]
    fn dual_of_u23() {
        assert_eq!(Matroid::uniform(2, 3).dual(), Matroid::uniform(1, 3));
    }

    #[test]
    fn free_extension_of_u22() {
        assert_eq!(
            Matroid::uniform(2, 2).free_extension().unwrap(),
            Matroid::uniform(2, 3)
        );
    }

    #[test]
    fn loop_extension() {
        let u = Matroid::uniform(2, 3);
        let hs = u.hyperplanes().unwrap();
        let m = u.extension_by_hyperplanes(&hs).unwrap();
        assert_eq!(m.loops(), Subset::singleton(3));
    }

    #[test]
    fn minors_of_grid() {
        let g = grid_matroid();
        // deleting row 3 leaves two disjoint lines in the plane
        let d = g.delete(sets1(&["789"])[0]).unwrap();
        assert_eq!(d.n(), 6);
        assert_eq!(d.nonbases(), sets1(&["123", "456"]));
        // contracting a point of a line makes the other two points parallel
        let c = g.contract(sets1(&["1"])[0]).unwrap();
        assert_eq!(c.rank(), 2);
        assert!(!c.is_basis(Subset::from_elems([0, 1])));
        assert!(!c.is_basis(Subset::from_elems([2, 5])));
        assert!(c.is_basis(Subset::from_elems([0, 2])));
    }

    #[test]
    fn direct_sum_shifts_second_summand() {
        let m = Matroid::uniform(1, 1)
            .direct_sum(&Matroid::uniform(1, 2))
            .unwrap();
        assert_eq!(m.bases(), &sets1(&["12", "13"])[..]);
        assert_eq!(m.coloops(), Subset::singleton(0));
    }
}
