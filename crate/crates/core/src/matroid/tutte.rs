use std::collections::BTreeMap;
use std::fmt;

use super::Matroid;
use crate::error::{Error, Result};

/// The corank-nullity sum visits all `2^n` subsets.
pub const TUTTE_GUARD: usize = 24;

/// Bivariate polynomial with nonnegative integer coefficients, keyed by
/// exponent pair `(i, j)` of `x^i y^j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TuttePolynomial {
    pub coeffs: BTreeMap<(u32, u32), u64>,
}

/// Univariate integer polynomial, `coeffs[k]` is the coefficient of `t^k`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    pub coeffs: Vec<i64>,
}

impl TuttePolynomial {
    pub fn eval(&self, x: i64, y: i64) -> i64 {
        self.coeffs
            .iter()
            .map(|(&(i, j), &c)| c as i64 * x.pow(i) * y.pow(j))
            .sum()
    }

    /// `T(y, x)`.
    pub fn swapped(&self) -> TuttePolynomial {
        TuttePolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(i, j), &c)| ((j, i), c))
                .collect(),
        }
    }

    /// Terms sorted by `(x, y)` exponent.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, u64)> + '_ {
        self.coeffs.iter().map(|(&(i, j), &c)| (i, j, c))
    }
}

impl fmt::Display for TuttePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), &c) in self.coeffs.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono = match (i, j) {
                (0, 0) => String::new(),
                _ => {
                    let mut s = String::new();
                    if i > 0 {
                        s.push('x');
                        if i > 1 {
                            s.push_str(&format!("^{i}"));
                        }
                    }
                    if j > 0 {
                        s.push('y');
                        if j > 1 {
                            s.push_str(&format!("^{j}"));
                        }
                    }
                    s
                }
            };
            match (c, mono.is_empty()) {
                (_, true) => write!(f, "{c}")?,
                (1, false) => write!(f, "{mono}")?,
                _ => write!(f, "{c}{mono}")?,
            }
        }
        Ok(())
    }
}

impl Polynomial {
    pub fn eval(&self, t: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * t + c)
    }
}

/// Coefficients of `(x - 1)^a`.
fn shifted_powers(a: u32) -> Vec<i64> {
    let mut c = vec![1i64];
    for _ in 0..a {
        let mut next = vec![0i64; c.len() + 1];
        for (k, &v) in c.iter().enumerate() {
            next[k + 1] += v;
            next[k] -= v;
        }
        c = next;
    }
    c
}

impl Matroid {
    pub fn tutte_polynomial(&self) -> Result<TuttePolynomial> {
        if self.n > TUTTE_GUARD {
            return Err(Error::GuardExceeded {
                what: "Tutte polynomial",
                size: self.n,
                guard: TUTTE_GUARD,
            });
        }
        let rank = self.rank_table()?;
        // tally subsets by (corank, nullity) first
        let mut tally: BTreeMap<(u32, u32), i64> = BTreeMap::new();
        for (mask, &rk) in rank.iter().enumerate() {
            let rk = rk as u32;
            let corank = self.rank as u32 - rk;
            let nullity = mask.count_ones() - rk;
            *tally.entry((corank, nullity)).or_default() += 1;
        }
        let mut signed: BTreeMap<(u32, u32), i64> = BTreeMap::new();
        for (&(a, b), &count) in &tally {
            let px = shifted_powers(a);
            let py = shifted_powers(b);
            for (i, &cx) in px.iter().enumerate() {
                for (j, &cy) in py.iter().enumerate() {
                    *signed.entry((i as u32, j as u32)).or_default() += count * cx * cy;
                }
            }
        }
        let mut coeffs = BTreeMap::new();
        for (k, c) in signed {
            if c < 0 {
                return Err(Error::InvariantViolation(format!(
                    "negative Tutte coefficient {c} at {k:?}"
                )));
            }
            if c > 0 {
                coeffs.insert(k, c as u64);
            }
        }
        Ok(TuttePolynomial { coeffs })
    }

    /// `chi(t) = (-1)^r T(1 - t, 0)`.
    pub fn characteristic_polynomial(&self) -> Result<Polynomial> {
        let t = self.tutte_polynomial()?;
        let mut coeffs = vec![0i64; self.rank + 1];
        for (&(i, j), &c) in &t.coeffs {
            if j != 0 {
                continue;
            }
            // (1 - t)^i = (-1)^i (t - 1)^i
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for (k, v) in shifted_powers(i).into_iter().enumerate() {
                let v = sign * v;
                if k >= coeffs.len() {
                    coeffs.resize(k + 1, 0);
                }
                coeffs[k] += c as i64 * v;
            }
        }
        if self.rank % 2 == 1 {
            coeffs.iter_mut().for_each(|c| *c = -*c);
        }
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Ok(Polynomial { coeffs })
    }
}
