//! Finite-dimensional quantum strategies: the Mermin-Peres grid, the
//! linear system game it wins, and the projection family for the
//! `(P, Q, nonbases)` isomorphism game.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::construct::project;
use crate::error::{Error, Result};
use crate::game::{Constraint, Lbcs};
use crate::matroid::Matroid;
use crate::structures::{pointed_sets, rel, IsoStructure, PointedSet};

pub type CMatrix = DMatrix<Complex64>;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn identity(dim: usize) -> CMatrix {
    CMatrix::identity(dim, dim)
}

pub fn zeros(dim: usize) -> CMatrix {
    CMatrix::zeros(dim, dim)
}

/// Largest entry modulus, used as the size of a defect.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn hermitian_defect(m: &CMatrix) -> f64 {
    max_abs(&(m - m.adjoint()))
}

pub fn idempotent_defect(m: &CMatrix) -> f64 {
    max_abs(&(m * m - m))
}

pub fn commutator_defect(a: &CMatrix, b: &CMatrix) -> f64 {
    max_abs(&(a * b - b * a))
}

/// Normalized trace.
pub fn tau(m: &CMatrix) -> Complex64 {
    m.trace() / m.nrows() as f64
}

pub fn pauli(name: char) -> CMatrix {
    let (o, l, i) = (c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0));
    let entries = match name {
        'I' => [l, o, o, l],
        'X' => [o, l, l, o],
        'Y' => [o, -i, i, o],
        'Z' => [l, o, o, -l],
        _ => panic!("unknown Pauli {name}"),
    };
    CMatrix::from_row_slice(2, 2, &entries)
}

fn pauli2(a: char, b: char) -> CMatrix {
    pauli(a).kronecker(&pauli(b))
}

/// A 3x3 grid of commuting-line observables.
#[derive(Clone, Debug)]
pub struct ObservableGrid {
    pub grid: [[CMatrix; 3]; 3],
    pub row_signs: [i8; 3],
    pub col_signs: [i8; 3],
}

impl ObservableGrid {
    pub fn dim(&self) -> usize {
        self.grid[0][0].nrows()
    }

    fn line_product(&self, cells: [(usize, usize); 3]) -> CMatrix {
        cells
            .iter()
            .fold(identity(self.dim()), |acc, &(i, j)| acc * &self.grid[i][j])
    }

    fn line_sign(&self, cells: [(usize, usize); 3]) -> Option<i8> {
        let p = self.line_product(cells);
        let id = identity(self.dim());
        if max_abs(&(&p - &id)) < 1e-12 {
            Some(1)
        } else if max_abs(&(&p + &id)) < 1e-12 {
            Some(-1)
        } else {
            None
        }
    }

    fn rows() -> [[(usize, usize); 3]; 3] {
        [0, 1, 2].map(|i| [0, 1, 2].map(|j| (i, j)))
    }

    fn cols() -> [[(usize, usize); 3]; 3] {
        [0, 1, 2].map(|j| [0, 1, 2].map(|i| (i, j)))
    }

    /// Every observable a Hermitian involution, lines commuting, line
    /// products matching the recorded signs.
    pub fn check(&self) -> Result<()> {
        let id = identity(self.dim());
        for row in &self.grid {
            for o in row {
                if hermitian_defect(o) > 1e-12 || max_abs(&(o * o - &id)) > 1e-12 {
                    return Err(Error::InvariantViolation(
                        "grid entry is not a Hermitian involution".into(),
                    ));
                }
            }
        }
        for (lines, signs) in [
            (Self::rows(), self.row_signs),
            (Self::cols(), self.col_signs),
        ] {
            for (line, sign) in lines.iter().zip(signs) {
                for a in 0..3 {
                    for b in a + 1..3 {
                        let (x, y) = (line[a], line[b]);
                        if commutator_defect(&self.grid[x.0][x.1], &self.grid[y.0][y.1]) > 1e-12 {
                            return Err(Error::NonCommuting(format!("{x:?} and {y:?}")));
                        }
                    }
                }
                if self.line_sign(*line) != Some(sign) {
                    return Err(Error::InvariantViolation(format!(
                        "line {line:?} does not multiply to {sign}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Observables for the nine variables of the magic-square system, whose
    /// lines are `123, 456, 789` and `147, 258, 369`. Variable `3i + j`
    /// takes grid entry `(j, i)`, so the three grid columns become the
    /// three system rows.
    pub fn variable_observables(&self) -> Vec<CMatrix> {
        (0..9).map(|v| self.grid[v % 3][v / 3].clone()).collect()
    }
}

/// The two-qubit Pauli grid. Rows multiply to `+I`, columns to `+I, +I, -I`.
pub fn magic_square_observables() -> Result<ObservableGrid> {
    let g = ObservableGrid {
        grid: [
            [pauli2('X', 'I'), pauli2('I', 'X'), pauli2('X', 'X')],
            [pauli2('I', 'Z'), pauli2('Z', 'I'), pauli2('Z', 'Z')],
            [pauli2('X', 'Z'), pauli2('Z', 'X'), pauli2('Y', 'Y')],
        ],
        row_signs: [1, 1, 1],
        col_signs: [1, 1, -1],
    };
    g.check()?;
    Ok(g)
}

/// The joint eigenprojections `prod_j (I + k_j O_j) / 2` of a constraint's
/// observables, one per fulfilling pattern `k`, in the order of
/// [`Lbcs::fulfilling`].
pub fn joint_projections(
    observables: &[CMatrix],
    l: &Lbcs,
    h: usize,
) -> Result<Vec<(Vec<i8>, CMatrix)>> {
    let Constraint { vars, .. } = &l.constraints[h];
    let dim = observables.first().map_or(0, |o| o.nrows());
    if let Some(&v) = vars.iter().find(|&&v| v >= observables.len()) {
        return Err(Error::DimensionMismatch(format!(
            "no observable for variable {v}"
        )));
    }
    for (a, &x) in vars.iter().enumerate() {
        for &y in &vars[a + 1..] {
            if commutator_defect(&observables[x], &observables[y]) > 1e-12 {
                return Err(Error::NonCommuting(format!("variables {x} and {y}")));
            }
        }
    }
    let id = identity(dim);
    Ok(l.fulfilling(h)
        .into_iter()
        .map(|k| {
            let p = vars.iter().zip(&k).fold(id.clone(), |acc, (&v, &kv)| {
                acc * (&id + &observables[v] * c(f64::from(kv), 0.0)) * c(0.5, 0.0)
            });
            (k, p)
        })
        .collect())
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LbcsQuantumReport {
    pub perfect: bool,
    pub min_pair_prob: f64,
    pub tolerance: f64,
}

/// Winning probability of every ordered constraint pair when Alice measures
/// the joint projections and Bob their complex conjugates on a maximally
/// entangled state: `sum (1/d) Tr(P_A P_B)` over answers agreeing on the
/// shared variables.
pub fn verify_lbcs_quantum_strategy(
    l: &Lbcs,
    observables: &[CMatrix],
    tolerance: f64,
) -> Result<LbcsQuantumReport> {
    if observables.len() != l.num_vars {
        return Err(Error::DimensionMismatch(format!(
            "{} observables for {} variables",
            observables.len(),
            l.num_vars
        )));
    }
    let projs = (0..l.constraints.len())
        .map(|h| joint_projections(observables, l, h))
        .collect::<Result<Vec<_>>>()?;
    let mut min = 1.0f64;
    for (a, pa) in projs.iter().enumerate() {
        for (b, pb) in projs.iter().enumerate() {
            min = min.min(pair_probability(l, a, b, pa, pb));
        }
    }
    Ok(LbcsQuantumReport {
        perfect: min >= 1.0 - tolerance,
        min_pair_prob: min,
        tolerance,
    })
}

pub fn pair_probability(
    l: &Lbcs,
    a: usize,
    b: usize,
    pa: &[(Vec<i8>, CMatrix)],
    pb: &[(Vec<i8>, CMatrix)],
) -> f64 {
    let (va, vb) = (&l.constraints[a].vars, &l.constraints[b].vars);
    let mut total = 0.0;
    for (ka, p) in pa {
        for (kb, q) in pb {
            let agree = va
                .iter()
                .zip(ka)
                .all(|(v, x)| vb.iter().position(|w| w == v).is_none_or(|j| kb[j] == *x));
            if agree {
                total += tau(&(p * q)).re;
            }
        }
    }
    total
}

/// Projections `F[(a, x)]` for questions `a` on the `M` side and answers `x`
/// on the `N` side. Missing entries are zero.
#[derive(Clone, Debug)]
pub struct SyncStrategyPVM {
    pub dim: usize,
    pub questions: Vec<PointedSet>,
    pub answers: Vec<PointedSet>,
    pub projections: BTreeMap<(usize, usize), CMatrix>,
}

impl SyncStrategyPVM {
    pub fn get(&self, a: usize, x: usize) -> Option<&CMatrix> {
        self.projections.get(&(a, x))
    }

    /// `p(x, y | a, b) = tau(F_ax F_by)`.
    pub fn correlation(&self, a: usize, x: usize, b: usize, y: usize) -> Complex64 {
        match (self.get(a, x), self.get(b, y)) {
            (Some(f), Some(g)) => tau(&(f * g)),
            _ => c(0.0, 0.0),
        }
    }

    /// The classical strategy of an isomorphism `phi`, as 1x1 projections.
    pub fn from_isomorphism(
        m: &Matroid,
        n: &Matroid,
        s: IsoStructure,
        phi: &[usize],
    ) -> Result<SyncStrategyPVM> {
        let questions = pointed_sets(m, s)?;
        let answers = pointed_sets(n, s)?;
        let mut projections = BTreeMap::new();
        for (a, q) in questions.iter().enumerate() {
            let img = PointedSet::new(q.set.map(phi), phi[q.point]);
            let x = answers
                .binary_search(&img)
                .map_err(|_| Error::NotAnIsomorphism(format!("{:?} has no image", q.set)))?;
            projections.insert((a, x), identity(1));
        }
        Ok(SyncStrategyPVM {
            dim: 1,
            questions,
            answers,
            projections,
        })
    }
}

/// The strategy induced by the grid on the `(P, Q, nonbases)` game: the
/// players play the linear system game on the hyperplane under their
/// nonbases. Question `(K, (x, a))` and answer `(K', (y, b))` get the joint
/// projection for `k = t * t'` when `K` and `K'` lie over the same
/// hyperplane and `x = y`.
pub fn iso_game_pvms(
    p: &Matroid,
    q: &Matroid,
    system: &Lbcs,
    observables: &[CMatrix],
) -> Result<SyncStrategyPVM> {
    let questions = pointed_sets(p, IsoStructure::NonBases)?;
    let answers = pointed_sets(q, IsoStructure::NonBases)?;
    let dim = observables.first().map_or(0, |o| o.nrows());
    let projs = (0..system.constraints.len())
        .map(|h| joint_projections(observables, system, h))
        .collect::<Result<Vec<_>>>()?;
    let signs = |s: crate::Subset| -> Vec<i8> {
        s.iter().map(|i| if i % 2 == 0 { 1 } else { -1 }).collect()
    };
    let mut projections = BTreeMap::new();
    for (a, qa) in questions.iter().enumerate() {
        let h = project(qa.set);
        let hv: Vec<usize> = h.iter().collect();
        let ci = system
            .constraints
            .iter()
            .position(|c| c.vars == hv)
            .ok_or_else(|| {
                Error::ConstructionInconsistency(format!("no constraint over {hv:?}"))
            })?;
        let t = signs(qa.set);
        for (x, ax) in answers.iter().enumerate() {
            if project(ax.set) != h || ax.point / 2 != qa.point / 2 {
                continue;
            }
            let k: Vec<i8> = t.iter().zip(signs(ax.set)).map(|(u, v)| u * v).collect();
            let f = projs[ci].iter().find(|(kk, _)| *kk == k).ok_or_else(|| {
                Error::ConstructionInconsistency(format!(
                    "pattern {k:?} does not fulfil constraint {ci}"
                ))
            })?;
            projections.insert((a, x), f.1.clone());
        }
    }
    Ok(SyncStrategyPVM {
        dim,
        questions,
        answers,
        projections,
    })
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SyncConditions {
    pub projections: f64,
    pub row_sums: f64,
    pub col_sums: f64,
    pub rel_orthogonality: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SyncReport {
    pub conditions: SyncConditions,
    pub perfect: bool,
    pub tolerance: f64,
}

/// Each `F_ax` a projection; `sum_x F_ax = I` for each question;
/// `sum_a F_ax = I` for each answer; `F_ax F_by = 0` whenever the two
/// pairs disagree on `rel`. Defects are maximum entry moduli.
pub fn verify_sync_conditions(st: &SyncStrategyPVM, tolerance: f64) -> SyncReport {
    let id = identity(st.dim);
    let projections = st
        .projections
        .values()
        .map(|f| hermitian_defect(f).max(idempotent_defect(f)))
        .fold(0.0, f64::max);
    let mut rows = vec![zeros(st.dim); st.questions.len()];
    let mut cols = vec![zeros(st.dim); st.answers.len()];
    for (&(a, x), f) in &st.projections {
        rows[a] += f;
        cols[x] += f;
    }
    let defect = |sums: &[CMatrix]| sums.iter().map(|s| max_abs(&(s - &id))).fold(0.0, f64::max);
    let row_sums = defect(&rows);
    let col_sums = defect(&cols);
    let entries: Vec<(&(usize, usize), &CMatrix)> = st.projections.iter().collect();
    let rel_orthogonality = entries
        .par_iter()
        .map(|&(&(a, x), f)| {
            let mut worst = 0.0f64;
            for &(&(b, y), g) in &entries {
                let ra = rel(&st.questions[a], &st.questions[b]);
                let rx = rel(&st.answers[x], &st.answers[y]);
                if ra != rx {
                    worst = worst.max(max_abs(&(f * g)));
                }
            }
            worst
        })
        .reduce(|| 0.0, f64::max);
    SyncReport {
        perfect: [projections, row_sums, col_sums, rel_orthogonality]
            .iter()
            .all(|&d| d < tolerance),
        conditions: SyncConditions {
            projections,
            row_sums,
            col_sums,
            rel_orthogonality,
        },
        tolerance,
    }
}
