use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest system whose assignments are enumerated exhaustively.
pub const LBCS_GUARD: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub vars: Vec<usize>,
    pub sign: i8,
}

/// Linear binary constraint system: `prod_{i in vars} x_i = sign` over
/// `x_i in {+1, -1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lbcs {
    #[serde(rename = "vars")]
    pub num_vars: usize,
    pub constraints: Vec<Constraint>,
}

impl Lbcs {
    pub fn new(num_vars: usize, constraints: Vec<Constraint>) -> Result<Lbcs> {
        let l = Lbcs {
            num_vars,
            constraints,
        };
        l.validate()?;
        Ok(l)
    }

    pub fn validate(&self) -> Result<()> {
        for (i, c) in self.constraints.iter().enumerate() {
            if c.vars.is_empty() {
                return Err(Error::MalformedLbcs(format!("constraint {i} is empty")));
            }
            if let Some(&v) = c.vars.iter().find(|&&v| v >= self.num_vars) {
                return Err(Error::MalformedLbcs(format!(
                    "constraint {i} uses variable {v} of {}",
                    self.num_vars
                )));
            }
            if c.sign != 1 && c.sign != -1 {
                return Err(Error::MalformedLbcs(format!(
                    "constraint {i} has sign {}",
                    c.sign
                )));
            }
        }
        Ok(())
    }

    /// Whether a full assignment satisfies every constraint.
    pub fn satisfied_by(&self, x: &[i8]) -> bool {
        self.constraints
            .iter()
            .all(|c| c.vars.iter().map(|&v| x[v]).product::<i8>() == c.sign)
    }

    /// The +-1 patterns on a constraint's variables that satisfy it, in
    /// lexicographic order with +1 before -1.
    pub fn fulfilling(&self, h: usize) -> Vec<Vec<i8>> {
        let c = &self.constraints[h];
        let k = c.vars.len();
        (0..1u32 << k)
            .map(|mask| {
                (0..k)
                    .map(|j| if mask >> (k - 1 - j) & 1 == 1 { -1 } else { 1 })
                    .collect::<Vec<i8>>()
            })
            .filter(|p| p.iter().product::<i8>() == c.sign)
            .collect()
    }
}

fn check_assignment(l: &Lbcs, h: usize, k: &[i8]) -> Result<()> {
    let c = l
        .constraints
        .get(h)
        .ok_or_else(|| Error::MalformedAssignment(format!("no constraint {h}")))?;
    if k.len() != c.vars.len() {
        return Err(Error::MalformedAssignment(format!(
            "constraint {h} has {} variables, assignment has {}",
            c.vars.len(),
            k.len()
        )));
    }
    if k.iter().any(|&v| v != 1 && v != -1) {
        return Err(Error::MalformedAssignment("values must be +1 or -1".into()));
    }
    Ok(())
}

/// The LBCS game rule: both answers satisfy their constraints and agree on
/// shared variables.
pub fn lbcs_predicate(l: &Lbcs, ha: usize, hb: usize, ka: &[i8], kb: &[i8]) -> Result<u8> {
    check_assignment(l, ha, ka)?;
    check_assignment(l, hb, kb)?;
    let (ca, cb) = (&l.constraints[ha], &l.constraints[hb]);
    let sat = |c: &Constraint, k: &[i8]| k.iter().product::<i8>() == c.sign;
    if !sat(ca, ka) || !sat(cb, kb) {
        return Ok(0);
    }
    for (i, &v) in ca.vars.iter().enumerate() {
        if let Some(j) = cb.vars.iter().position(|&w| w == v) {
            if ka[i] != kb[j] {
                return Ok(0);
            }
        }
    }
    Ok(1)
}

/// Every satisfying global assignment, enumerated over `2^vars` candidates
/// in the order where bit `i` of the counter flips `x_i` to -1.
pub fn lbcs_solutions(l: &Lbcs) -> Result<Vec<Vec<i8>>> {
    lbcs_solutions_with_guard(l, LBCS_GUARD)
}

pub fn lbcs_solutions_with_guard(l: &Lbcs, guard: usize) -> Result<Vec<Vec<i8>>> {
    if l.num_vars > guard {
        return Err(Error::GuardExceeded {
            what: "LBCS assignment enumeration",
            size: l.num_vars,
            guard,
        });
    }
    l.validate()?;
    let n = l.num_vars;
    let masks: Vec<u64> = l
        .constraints
        .iter()
        .map(|c| c.vars.iter().fold(0u64, |m, &v| m ^ (1 << v)))
        .collect();
    let mut out = Vec::new();
    for x in 0..1u64 << n {
        let ok = masks.iter().zip(&l.constraints).all(|(m, c)| {
            let neg = (x & m).count_ones() % 2 == 1;
            neg == (c.sign == -1)
        });
        if ok {
            out.push(
                (0..n)
                    .map(|i| if x >> i & 1 == 1 { -1 } else { 1 })
                    .collect(),
            );
        }
    }
    Ok(out)
}
