use super::{Girth, Matroid};
use crate::error::{Error, Result};

/// Exhaustive separation scans are refused above this ground-set size.
pub const CONNECTIVITY_GUARD: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Connectivity {
    Finite(usize),
    Infinite,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Predicates {
    pub is_simple: bool,
    pub is_paving: bool,
    pub is_sparse_paving: bool,
    pub girth: Girth,
    pub connectivity: Connectivity,
}

impl Matroid {
    /// No loops and no parallel pairs.
    pub fn is_simple(&self) -> Result<bool> {
        Ok(self.circuits()?.iter().all(|c| c.len() >= 3))
    }

    /// Every circuit has at least `rank` elements.
    pub fn is_paving(&self) -> Result<bool> {
        Ok(self.circuits()?.iter().all(|c| c.len() >= self.rank))
    }

    pub fn is_sparse_paving(&self) -> Result<bool> {
        Ok(self.is_paving()? && self.dual().is_paving()?)
    }

    /// The rank-3 characterization: simple, and every cyclic hyperplane has
    /// exactly three elements. `None` for other ranks.
    pub fn is_sparse_paving_rank3_characterization(&self) -> Result<Option<bool>> {
        if self.rank != 3 {
            return Ok(None);
        }
        Ok(Some(
            self.is_simple()? && self.cyclic_hyperplanes()?.iter().all(|h| h.len() == 3),
        ))
    }

    /// Tutte connectivity: the least `k` for which some bipartition `(X, Y)`
    /// with `|X|, |Y| >= k` has `rk(X) + rk(Y) - rk(M) + 1 <= k`.
    pub fn connectivity_with_guard(&self, guard: usize) -> Result<Connectivity> {
        if self.n > guard {
            return Err(Error::GuardExceeded {
                what: "connectivity scan",
                size: self.n,
                guard,
            });
        }
        let rank = self.rank_table()?;
        let full = (1usize << self.n) - 1;
        let mut best: Option<usize> = None;
        for x in 1..full {
            // each bipartition once
            if x & 1 == 0 {
                continue;
            }
            let y = full ^ x;
            let order = rank[x] as usize + rank[y] as usize + 1 - self.rank;
            let small = (x.count_ones() as usize).min(y.count_ones() as usize);
            if order <= small {
                best = Some(best.map_or(order, |b: usize| b.min(order)));
            }
        }
        Ok(best.map_or(Connectivity::Infinite, Connectivity::Finite))
    }

    pub fn connectivity(&self) -> Result<Connectivity> {
        self.connectivity_with_guard(CONNECTIVITY_GUARD)
    }

    /// All predicates. For rank 3 the sparse paving test is evaluated both by
    /// definition and by the simple/cyclic-hyperplane characterization.
    pub fn predicates(&self) -> Result<Predicates> {
        let circuits = self.circuits()?;
        let is_simple = circuits.iter().all(|c| c.len() >= 3);
        let is_paving = circuits.iter().all(|c| c.len() >= self.rank);
        let is_sparse_paving = is_paving && self.dual().is_paving()?;
        if let Some(ch) = self.is_sparse_paving_rank3_characterization()? {
            assert_eq!(
                ch, is_sparse_paving,
                "sparse paving definition and rank-3 characterization disagree"
            );
        }
        let girth = circuits
            .iter()
            .map(|c| c.len())
            .min()
            .map_or(Girth::Infinite, Girth::Finite);
        Ok(Predicates {
            is_simple,
            is_paving,
            is_sparse_paving,
            girth,
            connectivity: self.connectivity()?,
        })
    }
}
