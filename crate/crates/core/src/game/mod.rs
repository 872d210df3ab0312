//! The matroid isomorphism game and the linear binary constraint system game.

mod lbcs;

pub use lbcs::{
    lbcs_predicate, lbcs_solutions, lbcs_solutions_with_guard, Constraint, Lbcs, LBCS_GUARD,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::structures::{covers, pointed_sets, rel, IsoStructure, PointedSet};

/// Alphabets above this size are not scanned for bisynchronicity.
pub const BISYNC_GUARD: usize = 1024;

/// The exhaustive strategy oracle refuses larger alphabets by default.
pub const ORACLE_ALPHABET_GUARD: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    M,
    N,
}

#[derive(Clone, Debug)]
pub struct IsoGameInstance {
    pub m: Matroid,
    pub n: Matroid,
    pub structure: IsoStructure,
    /// Pointed sets of `m` followed by those of `n`.
    pub alphabet: Vec<PointedSet>,
    m_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeterministicStrategy {
    pub map: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrategyReport {
    pub perfect: bool,
    pub counterexample: Option<(usize, usize)>,
}

impl IsoGameInstance {
    /// Refuses structures that do not cover both matroids.
    pub fn new(m: Matroid, n: Matroid, structure: IsoStructure) -> Result<IsoGameInstance> {
        for x in [&m, &n] {
            let c = covers(x, structure)?;
            if let Some(w) = c.witness {
                return Err(Error::NotCovering {
                    structure: structure.to_string(),
                    witness: w,
                });
            }
        }
        let mut alphabet = pointed_sets(&m, structure)?;
        let m_count = alphabet.len();
        alphabet.extend(pointed_sets(&n, structure)?);
        Ok(IsoGameInstance {
            m,
            n,
            structure,
            alphabet,
            m_count,
        })
    }

    pub fn len(&self) -> usize {
        self.alphabet.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphabet.is_empty()
    }

    pub fn m_count(&self) -> usize {
        self.m_count
    }

    pub fn side(&self, i: usize) -> Side {
        if i < self.m_count {
            Side::M
        } else {
            Side::N
        }
    }

    fn check(&self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::OutOfAlphabet {
                index: i,
                size: self.len(),
            })
        }
    }

    /// `V(x, y | a, b)` over alphabet indices.
    pub fn predicate(&self, a: usize, b: usize, x: usize, y: usize) -> Result<u8> {
        for i in [a, b, x, y] {
            self.check(i)?;
        }
        Ok(self.predicate_unchecked(a, b, x, y))
    }

    fn predicate_unchecked(&self, a: usize, b: usize, x: usize, y: usize) -> u8 {
        if self.side(a) == self.side(x) || self.side(b) == self.side(y) {
            return 0;
        }
        let split = |q: usize, r: usize| {
            if self.side(q) == Side::M {
                (q, r)
            } else {
                (r, q)
            }
        };
        let (c, v) = split(a, x);
        let (d, w) = split(b, y);
        let al = &self.alphabet;
        u8::from(rel(&al[c], &al[d]) == rel(&al[v], &al[w]))
    }

    /// Equal questions force equal answers and vice versa.
    pub fn check_bisynchronous(&self) -> Result<bool> {
        self.check_bisynchronous_with_guard(BISYNC_GUARD)
    }

    pub fn check_bisynchronous_with_guard(&self, guard: usize) -> Result<bool> {
        let k = self.len();
        if k > guard {
            return Err(Error::GuardExceeded {
                what: "bisynchronicity scan",
                size: k,
                guard,
            });
        }
        for a in 0..k {
            for x in 0..k {
                for y in 0..k {
                    if x != y && self.predicate_unchecked(a, a, x, y) == 1 {
                        return Ok(false);
                    }
                    // the same scan with questions and answers exchanged
                    if x != y && self.predicate_unchecked(x, y, a, a) == 1 {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Perfect iff every question pair wins; otherwise the least losing pair.
    pub fn evaluate_strategy(&self, phi: &DeterministicStrategy) -> Result<StrategyReport> {
        if phi.map.len() != self.len() {
            return Err(Error::OutOfAlphabet {
                index: phi.map.len(),
                size: self.len(),
            });
        }
        for &x in &phi.map {
            self.check(x)?;
        }
        for a in 0..self.len() {
            for b in 0..self.len() {
                if self.predicate_unchecked(a, b, phi.map[a], phi.map[b]) == 0 {
                    return Ok(StrategyReport {
                        perfect: false,
                        counterexample: Some((a, b)),
                    });
                }
            }
        }
        Ok(StrategyReport {
            perfect: true,
            counterexample: None,
        })
    }

    /// `(S, p) -> (phi(S), phi(p))` on the `m` side and the inverse on the
    /// `n` side.
    pub fn strategy_from_iso(&self, varphi: &[usize]) -> Result<DeterministicStrategy> {
        if !self.m.is_isomorphism_to(&self.n, varphi) {
            return Err(Error::NotAnIsomorphism(format!("{varphi:?}")));
        }
        let mut inv = vec![0; varphi.len()];
        for (e, &f) in varphi.iter().enumerate() {
            inv[f] = e;
        }
        let (ms, ns) = self.alphabet.split_at(self.m_count);
        let find = |side: &[PointedSet], offset: usize, p: PointedSet| -> Result<usize> {
            side.binary_search(&p)
                .map(|i| i + offset)
                .map_err(|_| Error::NotAnIsomorphism(format!("{p:?} is not a pointed set")))
        };
        let mut map = Vec::with_capacity(self.len());
        for a in ms {
            map.push(find(
                ns,
                self.m_count,
                PointedSet::new(a.set.map(varphi), varphi[a.point]),
            )?);
        }
        for x in ns {
            map.push(find(ms, 0, PointedSet::new(x.set.map(&inv), inv[x.point]))?);
        }
        Ok(DeterministicStrategy { map })
    }

    /// Every perfect deterministic strategy, by backtracking over answer
    /// maps with pairwise pruning. Meant as a test oracle.
    pub fn perfect_strategies_exhaustive(
        &self,
        guard: usize,
    ) -> Result<Vec<DeterministicStrategy>> {
        let k = self.len();
        if k > guard {
            return Err(Error::GuardExceeded {
                what: "exhaustive strategy search",
                size: k,
                guard,
            });
        }
        let mut out = Vec::new();
        let mut map = vec![0; k];
        self.extend(0, &mut map, &mut out);
        Ok(out)
    }

    fn extend(&self, a: usize, map: &mut Vec<usize>, out: &mut Vec<DeterministicStrategy>) {
        if a == self.len() {
            out.push(DeterministicStrategy { map: map.clone() });
            return;
        }
        for x in 0..self.len() {
            map[a] = x;
            let ok = (0..=a).all(|b| {
                self.predicate_unchecked(a, b, x, map[b]) == 1
                    && self.predicate_unchecked(b, a, map[b], x) == 1
            });
            if ok {
                self.extend(a + 1, map, out);
            }
        }
    }
}
