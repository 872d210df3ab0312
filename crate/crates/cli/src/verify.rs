use std::time::Instant;

use anyhow::Result;
use num_bigint::BigUint;
use serde::Serialize;

use mig_core::catalog::catalog;
use mig_core::construct::{
    lbcs_from_matroid, minor_obstruction_certificate, paper_q_signs, SignAssignment,
};
use mig_core::game::lbcs_solutions;
use mig_core::graph::{automorphism_group, find_isomorphism, RelColoredGraph};
use mig_core::matroid::{brute_force_isomorphic, grid_matroid, Matroid};
use mig_core::quantum::{
    iso_game_pvms, magic_square_observables, verify_lbcs_quantum_strategy, verify_sync_conditions,
};
use mig_core::screen::{
    noncommutativity_certificate, screen_quantum_iso, two_nonbasis_family, Verdict,
};
use mig_core::structures::{covers, IsoStructure};
use mig_core::Subset;

#[derive(Debug, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

fn timed(name: &'static str, f: impl FnOnce() -> Result<(bool, String)>) -> CheckResult {
    let start = Instant::now();
    let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e:#}")));
    CheckResult {
        name,
        passed,
        detail,
        seconds: start.elapsed().as_secs_f64(),
    }
}

fn rotate(m: &Matroid) -> Matroid {
    let n = m.n();
    m.permuted(&(0..n).map(|i| (i + 1) % n).collect::<Vec<_>>())
}

fn reverse(m: &Matroid) -> Matroid {
    let n = m.n();
    m.permuted(&(0..n).rev().collect::<Vec<_>>())
}

/// The nonbases of `M_S` over the grid, listed from the sign patterns.
fn listed_nonbases(signs: &SignAssignment) -> Vec<Subset> {
    let mut out = Vec::new();
    for (h, &s) in &signs.signs {
        let pts: Vec<usize> = h.iter().collect();
        for mask in 0..8u32 {
            let product: i8 = (0..3)
                .map(|j| if mask >> j & 1 == 1 { -1 } else { 1 })
                .product();
            if product == s {
                out.push(Subset::from_elems(
                    (0..3).map(|j| 2 * pts[j] + (mask >> j & 1) as usize),
                ));
            }
        }
    }
    out.sort();
    out
}

pub fn run_all(p: &Matroid, q: &Matroid, tolerance: f64) -> Result<Vec<CheckResult>> {
    let g = grid_matroid();
    let hom = SignAssignment::homogeneous(&g)?;
    let signed = paper_q_signs();
    let mut out = Vec::new();

    out.push(timed("paper-pair", || {
        let ok = [(p, &hom), (q, &signed)]
            .iter()
            .all(|(m, s)| m.n() == 18 && m.rank() == 3 && m.nonbases() == listed_nonbases(s));
        Ok((
            ok,
            format!("{} and {} nonbases", p.nonbases().len(), q.nonbases().len()),
        ))
    }));

    out.push(timed("non-isomorphism", || {
        let gp = RelColoredGraph::build(p, IsoStructure::NonBases)?;
        let gq = RelColoredGraph::build(q, IsoStructure::NonBases)?;
        let found = find_isomorphism(gp.colored(), gq.colored());
        Ok((
            found.is_none(),
            format!(
                "{} vertices each, isomorphism found: {}",
                gp.len(),
                found.is_some()
            ),
        ))
    }));

    out.push(timed("minor-obstruction", || {
        let c = minor_obstruction_certificate(p, q)?;
        let ok = c.restriction_witness.is_some() && c.p_side_scan.matches == 0;
        Ok((
            ok,
            format!(
                "{} subsets of P scanned, {} matches",
                c.p_side_scan.subsets, c.p_side_scan.matches
            ),
        ))
    }));

    out.push(timed("shared-invariants", || {
        let counts = |m: &Matroid| -> Result<[usize; 4]> {
            Ok([
                m.bases().len(),
                m.circuits()?.len(),
                m.flats()?.len(),
                m.hyperplanes()?.len(),
            ])
        };
        let (cp, cq) = (counts(p)?, counts(q)?);
        let same_tutte = p.tutte_polynomial()? == q.tutte_polynomial()?;
        let order = |m: &Matroid| -> Result<BigUint> {
            Ok(
                automorphism_group(RelColoredGraph::build(m, IsoStructure::NonBases)?.colored())
                    .order,
            )
        };
        let (op, oq) = (order(p)?, order(q)?);
        let ok = cp == cq && same_tutte && op == BigUint::from(1152u32) && oq == op;
        Ok((
            ok,
            format!("counts {cp:?} / {cq:?}, same Tutte {same_tutte}, orders {op} / {oq}"),
        ))
    }));

    out.push(timed("magic-square", || {
        let lh = lbcs_from_matroid(&g, &hom)?;
        let ls = lbcs_from_matroid(&g, &signed)?;
        let (nh, ns) = (lbcs_solutions(&lh)?.len(), lbcs_solutions(&ls)?.len());
        let obs = magic_square_observables()?.variable_observables();
        let r = verify_lbcs_quantum_strategy(&ls, &obs, tolerance)?;
        Ok((
            nh == 16 && ns == 0 && r.perfect,
            format!(
                "{nh} and {ns} classical solutions, min pair probability {}",
                r.min_pair_prob
            ),
        ))
    }));

    out.push(timed("quantum-witness", || {
        let ls = lbcs_from_matroid(&g, &signed)?;
        let obs = magic_square_observables()?.variable_observables();
        let st = iso_game_pvms(p, q, &ls, &obs)?;
        let r = verify_sync_conditions(&st, tolerance);
        let c = &r.conditions;
        let worst = [c.projections, c.row_sums, c.col_sums, c.rel_orthogonality]
            .into_iter()
            .fold(0.0, f64::max);
        Ok((
            r.perfect,
            format!(
                "{} projections in dimension {}, max defect {worst:e}",
                st.projections.len(),
                st.dim
            ),
        ))
    }));

    let levels = catalog(6);

    out.push(timed("oracle-equivalence", || {
        let (mut pairs, mut comparisons, mut disagreements) = (0usize, 0usize, 0usize);
        for level in &levels[..=5] {
            let mut items: Vec<(&Matroid, Matroid)> = Vec::new();
            for (i, m) in level.iter().enumerate() {
                items.push((m, rotate(m)));
                items.push((m, reverse(m)));
                for n in &level[i + 1..] {
                    items.push((m, n.clone()));
                }
            }
            for (m, n) in &items {
                let truth = brute_force_isomorphic(m, n)?.is_some();
                pairs += 1;
                for s in IsoStructure::ALL {
                    if !covers(m, s)?.covers || !covers(n, s)?.covers {
                        continue;
                    }
                    let gm = RelColoredGraph::build(m, s)?;
                    let gn = RelColoredGraph::build(n, s)?;
                    comparisons += 1;
                    if find_isomorphism(gm.colored(), gn.colored()).is_some() != truth {
                        disagreements += 1;
                    }
                }
            }
        }
        Ok((pairs >= 1000 && disagreements == 0, format!("{pairs} matroid pairs, {comparisons} covered comparisons, {disagreements} disagreements")))
    }));

    out.push(timed("covering-characterization", || {
        let mut checked = 0;
        for m in levels.iter().flatten() {
            for s in [
                IsoStructure::Bases,
                IsoStructure::Circuits,
                IsoStructure::NonBases,
            ] {
                // disagreement between the two routes is an error
                covers(m, s)?;
                checked += 1;
            }
        }
        Ok((true, format!("{checked} matroid-structure pairs agree")))
    }));

    out.push(timed("noncommutativity", || {
        let mut ok = true;
        let mut found = Vec::new();
        for r in 3..=5 {
            let m = two_nonbasis_family(r)?;
            let c = noncommutativity_certificate(&m, IsoStructure::NonBases)?;
            ok &= c.as_ref().is_some_and(|c| c.verified);
            found.push(c.map(|c| c.supports.map(|s| s.len())));
        }
        Ok((ok, format!("support sizes {found:?}")))
    }));

    out.push(timed("screener", || {
        let pq = screen_quantum_iso(p, q, IsoStructure::NonBases)?.verdict == Verdict::Possibly;
        let sizes = screen_quantum_iso(&Matroid::uniform(2, 3), &Matroid::uniform(2, 4), IsoStructure::Bases)?
            .verdict
            == Verdict::Not;
        let ranks = screen_quantum_iso(&Matroid::uniform(2, 4), &Matroid::uniform(3, 4), IsoStructure::Bases)?
            .verdict
            == Verdict::Not;
        let mut false_negatives = 0;
        for m in levels.iter().flatten() {
            for s in IsoStructure::ALL {
                if covers(m, s)?.covers && screen_quantum_iso(m, &rotate(m), s)?.verdict == Verdict::Not {
                    false_negatives += 1;
                }
            }
        }
        Ok((pq && sizes && ranks && false_negatives == 0, format!(
            "P,Q pass {pq}, size mismatch caught {sizes}, rank mismatch caught {ranks}, {false_negatives} isomorphic pairs rejected"
        )))
    }));

    Ok(out)
}
