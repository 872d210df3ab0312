//! Exhaustive checks over every matroid on a few elements.

use std::collections::HashSet;
use std::sync::OnceLock;

use mig_core::catalog::{catalog, KNOWN_COUNTS};
use mig_core::game::IsoGameInstance;
use mig_core::graph::{
    automorphism_group, disjoint_automorphism_pair, find_isomorphism, lift_to_vertices,
    RelColoredGraph, GROUP_ENUMERATION_CAP,
};
use mig_core::matroid::{brute_force_isomorphic, count_automorphisms, Matroid};
use mig_core::screen::{screen_quantum_iso, Verdict};
use mig_core::structures::{covers, IsoStructure};
use mig_core::Subset;
use num_bigint::BigUint;

fn levels() -> &'static Vec<Vec<Matroid>> {
    static L: OnceLock<Vec<Vec<Matroid>>> = OnceLock::new();
    L.get_or_init(|| catalog(7))
}

fn up_to(n: usize) -> impl Iterator<Item = &'static Matroid> {
    levels()[..=n].iter().flatten()
}

fn rotate(m: &Matroid) -> Matroid {
    let n = m.n();
    m.permuted(&(0..n).map(|i| (i + 1) % n).collect::<Vec<_>>())
}

fn covering(m: &Matroid) -> Vec<IsoStructure> {
    IsoStructure::ALL
        .into_iter()
        .filter(|&s| covers(m, s).unwrap().covers)
        .collect()
}

#[test]
fn catalog_matches_known_counts() {
    let counts: Vec<usize> = levels().iter().map(|l| l.len()).collect();
    assert_eq!(counts, KNOWN_COUNTS);
}

#[test]
fn catalog_has_no_duplicates() {
    for level in &levels()[..=6] {
        for (i, m) in level.iter().enumerate() {
            for n in &level[i + 1..] {
                assert!(brute_force_isomorphic(m, n).unwrap().is_none());
            }
        }
    }
}

#[test]
fn hyperplanes_are_complements_of_dual_circuits() {
    for m in up_to(7) {
        let e = m.ground_set();
        let mut from_dual: Vec<Subset> = m
            .dual()
            .circuits()
            .unwrap()
            .into_iter()
            .map(|c| e.difference(c))
            .collect();
        from_dual.sort();
        assert_eq!(m.hyperplanes().unwrap(), from_dual);
    }
}

#[test]
fn cyclic_flats_reconstruct() {
    for m in up_to(7) {
        let pres = m.cyclic_flat_presentation().unwrap();
        pres.check_axioms().unwrap();
        let back = Matroid::from_cyclic_flats(&pres).unwrap();
        assert_eq!(&back, m);
    }
}

#[test]
fn tutte_duality() {
    for m in up_to(7) {
        assert_eq!(
            m.dual().tutte_polynomial().unwrap(),
            m.tutte_polynomial().unwrap().swapped()
        );
    }
}

#[test]
fn sparse_paving_characterization_in_rank_three() {
    for m in up_to(7).filter(|m| m.rank() == 3) {
        assert_eq!(
            m.is_sparse_paving_rank3_characterization().unwrap(),
            Some(m.is_sparse_paving().unwrap())
        );
    }
}

#[test]
fn covering_characterization() {
    for m in up_to(6) {
        for s in IsoStructure::ALL {
            // errors when the two routes disagree
            let r = covers(m, s).unwrap();
            assert_eq!(r.covers, r.witness.is_none());
        }
    }
}

/// Pairs `(M, N)` on the same ground set: all distinct catalog pairs plus
/// each matroid against a relabeled copy.
fn pairs(n: usize) -> Vec<(Matroid, Matroid)> {
    let mut out = Vec::new();
    for level in &levels()[..=n] {
        for (i, m) in level.iter().enumerate() {
            out.push((m.clone(), rotate(m)));
            for n in &level[i + 1..] {
                out.push((m.clone(), n.clone()));
            }
        }
    }
    out
}

#[test]
fn graph_search_agrees_with_brute_force() {
    let mut compared = 0;
    let mut disagreements = Vec::new();
    for (m, n) in pairs(5) {
        let truth = brute_force_isomorphic(&m, &n).unwrap().is_some();
        for s in covering(&m) {
            if !covers(&n, s).unwrap().covers {
                continue;
            }
            let gm = RelColoredGraph::build(&m, s).unwrap();
            let gn = RelColoredGraph::build(&n, s).unwrap();
            compared += 1;
            match find_isomorphism(gm.colored(), gn.colored()) {
                Some(theta) => {
                    assert!(gm.colored().is_isomorphism_to(gn.colored(), &theta.map));
                    if !truth {
                        disagreements.push((s, m.rank(), n.rank(), m.n()));
                    }
                }
                None => assert!(!truth, "{s}: isomorphic but no graph isomorphism"),
            }
        }
    }
    assert!(compared >= 1000);
    // The empty flat has no points, so U(0, n) and U(1, n) have the same
    // flat graph; nothing else may disagree.
    let expected: Vec<_> = (1..=5).map(|n| (IsoStructure::Flats, 0, 1, n)).collect();
    assert_eq!(disagreements, expected);
}

#[test]
fn automorphism_group_is_faithful() {
    for m in up_to(6) {
        let aut = count_automorphisms(m);
        for s in covering(m) {
            if s == IsoStructure::Flats && m.rank() <= 1 {
                continue;
            }
            let g = RelColoredGraph::build(m, s).unwrap();
            let group = automorphism_group(g.colored());
            assert_eq!(group.order, BigUint::from(aut), "{s} on {:?}", m.bases());
        }
    }
}

#[test]
fn disjoint_pairs_generate_klein_four_groups() {
    let mut found = 0;
    for m in up_to(5) {
        for s in covering(m) {
            let g = RelColoredGraph::build(m, s).unwrap();
            if let Some(pair) =
                disjoint_automorphism_pair(g.colored(), GROUP_ENUMERATION_CAP).unwrap()
            {
                found += 1;
                assert!(pair.verify(g.colored()));
                let (a, b) = (&pair.first, &pair.second);
                let ab = a.compose(b);
                assert_eq!(ab, b.compose(a));
                let group: HashSet<_> = [a.compose(a), a.clone(), b.clone(), ab]
                    .into_iter()
                    .collect();
                assert_eq!(group.len(), 4);
                assert!(a.compose(a).is_identity() && b.compose(b).is_identity());
            }
        }
    }
    assert!(found > 0);
}

#[test]
fn games_are_bisynchronous() {
    for m in up_to(4) {
        for s in covering(m) {
            let g = IsoGameInstance::new(m.clone(), rotate(m), s).unwrap();
            assert!(g.check_bisynchronous().unwrap());
        }
    }
}

#[test]
fn perfect_strategies_come_from_isomorphisms() {
    let mut checked = 0;
    for (m, n) in pairs(5) {
        for s in covering(&m) {
            if !covers(&n, s).unwrap().covers {
                continue;
            }
            let Ok(g) = IsoGameInstance::new(m.clone(), n.clone(), s) else {
                continue;
            };
            if g.len() > 8 {
                continue;
            }
            let found = g.perfect_strategies_exhaustive(8).unwrap();
            let mut from_isos = Vec::new();
            let mut phis = Vec::new();
            permutations(m.n(), &mut Vec::new(), &mut phis);
            for phi in phis {
                if m.is_isomorphism_to(&n, &phi) {
                    from_isos.push(g.strategy_from_iso(&phi).unwrap());
                }
            }
            from_isos.sort_by(|a, b| a.map.cmp(&b.map));
            from_isos.dedup();
            let mut found_sorted = found.clone();
            found_sorted.sort_by(|a, b| a.map.cmp(&b.map));
            if !(s == IsoStructure::Flats && m.rank() != n.rank()) {
                assert_eq!(found_sorted, from_isos, "{s}");
            }
            for st in &from_isos {
                assert!(g.evaluate_strategy(st).unwrap().perfect);
            }
            checked += 1;
        }
    }
    assert_eq!(checked, 93);
}

fn permutations(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if prefix.len() == n {
        out.push(prefix.clone());
        return;
    }
    for e in 0..n {
        if !prefix.contains(&e) {
            prefix.push(e);
            permutations(n, prefix, out);
            prefix.pop();
        }
    }
}

#[test]
fn screener_accepts_isomorphic_pairs() {
    for m in up_to(6) {
        for s in covering(m) {
            let r = screen_quantum_iso(m, &rotate(m), s).unwrap();
            assert_eq!(r.verdict, Verdict::Possibly, "{s} on {:?}", m.bases());
        }
    }
}

#[test]
fn vertex_lifts_of_automorphisms_preserve_rel() {
    let m = &levels()[5][20];
    for s in covering(m) {
        let g = RelColoredGraph::build(m, s).unwrap();
        let phi: Vec<usize> = (0..m.n()).collect();
        let id = lift_to_vertices(&g, &g, &phi).unwrap();
        assert!(id.is_identity());
    }
}
