use mig_core::construct::{build_paper_pair, lbcs_from_matroid, paper_q_signs};
use mig_core::game::lbcs_solutions;
use mig_core::matroid::grid_matroid;
use mig_core::quantum::*;
use num_complex::Complex64;

fn signed_system() -> mig_core::game::Lbcs {
    lbcs_from_matroid(&grid_matroid(), &paper_q_signs()).unwrap()
}

fn paper_strategy() -> SyncStrategyPVM {
    let (p, q) = build_paper_pair();
    let obs = magic_square_observables().unwrap().variable_observables();
    iso_game_pvms(&p, &q, &signed_system(), &obs).unwrap()
}

#[test]
fn p_q_strategy_is_perfect() {
    let st = paper_strategy();
    assert_eq!((st.questions.len(), st.answers.len(), st.dim), (72, 72, 4));
    assert_eq!(st.projections.len(), 72 * 4);
    let r = verify_sync_conditions(&st, DEFAULT_TOLERANCE);
    assert!(r.perfect, "{r:?}");
}

#[test]
fn correlations_are_probabilities() {
    let st = paper_strategy();
    let by_question = |a: usize| -> Vec<usize> {
        st.projections
            .keys()
            .filter(|k| k.0 == a)
            .map(|k| k.1)
            .collect()
    };
    for a in 0..72 {
        for b in 0..72 {
            let mut total = Complex64::new(0.0, 0.0);
            for &x in &by_question(a) {
                for &y in &by_question(b) {
                    let p = st.correlation(a, x, b, y);
                    assert!(p.im.abs() < 1e-9);
                    assert!(p.re > -1e-9 && p.re < 1.0 + 1e-9);
                    total += p;
                }
            }
            assert!((total.re - 1.0).abs() < 1e-9);
        }
    }
}

#[test]
fn perturbed_projection_breaks_row_sums() {
    let mut st = paper_strategy();
    let mut h = zeros(4);
    for i in 0..4 {
        for j in 0..4 {
            let v = Complex64::new(
                ((i * 7 + j * 3) % 5) as f64 - 2.0,
                ((i + 2 * j) % 3) as f64 - 1.0,
            );
            h[(i, j)] += v;
            h[(j, i)] += v.conj();
        }
    }
    let key = *st.projections.keys().next().unwrap();
    let f = st.projections.get_mut(&key).unwrap();
    *f += h * Complex64::new(0.01, 0.0);
    let r = verify_sync_conditions(&st, DEFAULT_TOLERANCE);
    assert!(!r.perfect);
    assert!(r.conditions.row_sums > 1e-3);
}

#[test]
fn classical_gap() {
    let g = grid_matroid();
    let hom = lbcs_from_matroid(
        &g,
        &mig_core::construct::SignAssignment::homogeneous(&g).unwrap(),
    )
    .unwrap();
    assert_eq!(lbcs_solutions(&hom).unwrap().len(), 16);
    let signed = signed_system();
    assert!(lbcs_solutions(&signed).unwrap().is_empty());
    let obs = magic_square_observables().unwrap().variable_observables();
    let r = verify_lbcs_quantum_strategy(&signed, &obs, DEFAULT_TOLERANCE).unwrap();
    assert!(r.perfect && r.min_pair_prob >= 1.0 - 1e-9);
}

/// `<psi| P (x) conj(Q) |psi>` on the maximally entangled state of two
/// four-level systems.
fn entangled_value(p: &CMatrix, q: &CMatrix) -> f64 {
    let mut psi = nalgebra::DVector::<Complex64>::zeros(16);
    for i in 0..4 {
        psi[i * 4 + i] = Complex64::new(0.5, 0.0);
    }
    let op = p.kronecker(&q.map(|z| z.conj()));
    (psi.adjoint() * op * &psi)[(0, 0)].re
}

#[test]
fn trace_formula_matches_entangled_state() {
    let l = signed_system();
    let obs = magic_square_observables().unwrap().variable_observables();
    let projs: Vec<_> = (0..l.constraints.len())
        .map(|h| joint_projections(&obs, &l, h).unwrap())
        .collect();
    for a in 0..projs.len() {
        for b in 0..projs.len() {
            let trace = pair_probability(&l, a, b, &projs[a], &projs[b]);
            let (va, vb) = (&l.constraints[a].vars, &l.constraints[b].vars);
            let mut state = 0.0;
            for (ka, p) in &projs[a] {
                for (kb, q) in &projs[b] {
                    let agree = va
                        .iter()
                        .zip(ka)
                        .all(|(v, x)| vb.iter().position(|w| w == v).is_none_or(|j| kb[j] == *x));
                    if agree {
                        state += entangled_value(p, q);
                    }
                }
            }
            assert!((trace - state).abs() < 1e-12);
            assert!((trace - 1.0).abs() < 1e-9);
        }
    }
}
