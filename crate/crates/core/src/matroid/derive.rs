use std::collections::{BTreeSet, HashSet, VecDeque};

use super::{Matroid, ENUMERATION_GUARD};
use crate::error::{Error, Result};
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

/// Every family the crate derives from a basis family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetReport {
    pub independents: Vec<Subset>,
    pub circuits: Vec<Subset>,
    pub flats: Vec<Subset>,
    pub hyperplanes: Vec<Subset>,
    pub cyclic_flats: Vec<Subset>,
    pub loops: Subset,
    pub coloops: Subset,
    pub girth: Girth,
}

impl Matroid {
    fn guard(&self, what: &'static str) -> Result<()> {
        if self.n > ENUMERATION_GUARD {
            Err(Error::GuardExceeded {
                what,
                size: self.n,
                guard: ENUMERATION_GUARD,
            })
        } else {
            Ok(())
        }
    }

    fn independent_set_index(&self) -> HashSet<Subset> {
        let mut seen: HashSet<Subset> = self.bases.iter().copied().collect();
        let mut queue: VecDeque<Subset> = self.bases.iter().copied().collect();
        while let Some(s) = queue.pop_front() {
            for e in s.iter() {
                let t = s.remove(e);
                if seen.insert(t) {
                    queue.push_back(t);
                }
            }
        }
        seen
    }

    pub fn independent_sets(&self) -> Result<Vec<Subset>> {
        self.guard("independent set enumeration")?;
        let mut v: Vec<Subset> = self.independent_set_index().into_iter().collect();
        v.sort_unstable();
        Ok(v)
    }

    /// Minimal dependent sets. Each circuit `C` is found exactly once, from the
    /// independent set `C - max(C)`.
    pub fn circuits(&self) -> Result<Vec<Subset>> {
        self.guard("circuit enumeration")?;
        let indep = self.independent_set_index();
        let mut out = Vec::new();
        for &i in &indep {
            let start = i.max_elem().map_or(0, |m| m + 1);
            for e in start..self.n {
                let c = i.insert(e);
                if indep.contains(&c) {
                    continue;
                }
                if c.iter().all(|f| indep.contains(&c.remove(f))) {
                    out.push(c);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// All flats, found by walking covers `cl(F + e)` up from `cl(empty)`.
    pub fn flats(&self) -> Result<Vec<Subset>> {
        self.guard("flat enumeration")?;
        let bottom = self.closure_unchecked(Subset::EMPTY);
        let mut seen: BTreeSet<Subset> = BTreeSet::from([bottom]);
        let mut queue = VecDeque::from([bottom]);
        while let Some(f) = queue.pop_front() {
            let mut rest = f.complement(self.n);
            while let Some(e) = rest.min_elem() {
                let g = self.closure_unchecked(f.insert(e));
                rest = rest.difference(g);
                if seen.insert(g) {
                    queue.push_back(g);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    pub fn hyperplanes(&self) -> Result<Vec<Subset>> {
        if self.rank == 0 {
            return Ok(Vec::new());
        }
        Ok(self
            .flats()?
            .into_iter()
            .filter(|f| self.rank_unchecked(*f) == self.rank - 1)
            .collect())
    }

    fn is_cyclic_set(&self, f: Subset) -> bool {
        let r = self.rank_unchecked(f);
        f.iter().all(|e| self.rank_unchecked(f.remove(e)) == r)
    }

    /// Flats that are unions of circuits, i.e. whose restriction has no coloops.
    pub fn cyclic_flats(&self) -> Result<Vec<Subset>> {
        Ok(self
            .flats()?
            .into_iter()
            .filter(|f| self.is_cyclic_set(*f))
            .collect())
    }

    pub fn cyclic_hyperplanes(&self) -> Result<Vec<Subset>> {
        if self.rank == 0 {
            return Ok(Vec::new());
        }
        Ok(self
            .cyclic_flats()?
            .into_iter()
            .filter(|f| self.rank_unchecked(*f) == self.rank - 1)
            .collect())
    }

    pub fn girth(&self) -> Result<Girth> {
        Ok(self
            .circuits()?
            .iter()
            .map(|c| c.len())
            .min()
            .map_or(Girth::Infinite, Girth::Finite))
    }

    pub fn derive_sets(&self) -> Result<SubsetReport> {
        let independents = self.independent_sets()?;
        let circuits = self.circuits()?;
        let flats = self.flats()?;
        let hyperplanes = if self.rank == 0 {
            Vec::new()
        } else {
            flats
                .iter()
                .copied()
                .filter(|f| self.rank_unchecked(*f) == self.rank - 1)
                .collect()
        };
        let cyclic_flats = flats
            .iter()
            .copied()
            .filter(|f| self.is_cyclic_set(*f))
            .collect();
        let girth = circuits
            .iter()
            .map(|c| c.len())
            .min()
            .map_or(Girth::Infinite, Girth::Finite);
        Ok(SubsetReport {
            independents,
            circuits,
            flats,
            hyperplanes,
            cyclic_flats,
            loops: self.loops(),
            coloops: self.coloops(),
            girth,
        })
    }
}
