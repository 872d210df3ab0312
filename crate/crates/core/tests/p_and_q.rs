use mig_core::construct::{build_paper_pair, minor_obstruction_certificate, obstruction_n};
use mig_core::graph::{automorphism_group, find_isomorphism, RelColoredGraph};
use mig_core::matroid::isomorphic;
use mig_core::structures::IsoStructure;
use mig_core::Subset;
use num_bigint::BigUint;

fn e(a: usize, s: i8) -> usize {
    2 * (a - 1) + usize::from(s == -1)
}

fn triple(v: [(usize, i8); 3]) -> Subset {
    Subset::from_elems(v.map(|(a, s)| e(a, s)))
}

#[test]
fn q_row_789_nonbases() {
    let (p, q) = build_paper_pair();
    let q789: Vec<Subset> = vec![
        triple([(7, 1), (8, 1), (9, -1)]),
        triple([(7, 1), (8, -1), (9, 1)]),
        triple([(7, -1), (8, 1), (9, 1)]),
        triple([(7, -1), (8, -1), (9, -1)]),
    ];
    let p789: Vec<Subset> = vec![
        triple([(7, 1), (8, 1), (9, 1)]),
        triple([(7, 1), (8, -1), (9, -1)]),
        triple([(7, -1), (8, 1), (9, -1)]),
        triple([(7, -1), (8, -1), (9, 1)]),
    ];
    let over = |nb: Vec<Subset>| -> Vec<Subset> {
        let row = Subset::from_elems(12..18);
        let mut v: Vec<Subset> = nb.into_iter().filter(|s| s.is_subset(row)).collect();
        v.sort();
        v
    };
    let mut q789s = q789.clone();
    q789s.sort();
    let mut p789s = p789.clone();
    p789s.sort();
    assert_eq!(over(q.nonbases()), q789s);
    assert_eq!(over(p.nonbases()), p789s);
}

#[test]
fn p_and_q_nonbasis_graphs_are_not_isomorphic() {
    let (p, q) = build_paper_pair();
    let gp = RelColoredGraph::build(&p, IsoStructure::NonBases).unwrap();
    let gq = RelColoredGraph::build(&q, IsoStructure::NonBases).unwrap();
    assert_eq!((gp.len(), gq.len()), (72, 72));
    assert_eq!(find_isomorphism(gp.colored(), gq.colored()), None);
}

#[test]
fn p_and_q_groups_have_order_1152() {
    let (p, q) = build_paper_pair();
    for m in [&p, &q] {
        let g = RelColoredGraph::build(m, IsoStructure::NonBases).unwrap();
        let aut = automorphism_group(g.colored());
        assert_eq!(aut.order, BigUint::from(1152u32));
        for a in &aut.generators {
            assert!(g.colored().is_isomorphism_to(g.colored(), &a.map));
        }
    }
}

#[test]
fn minor_obstruction() {
    let (p, q) = build_paper_pair();
    let cert = minor_obstruction_certificate(&p, &q).unwrap();
    let w = cert.restriction_witness.expect("Q|Y is N");
    assert_eq!(w.y, vec![0, 2, 4, 6, 8, 10, 13, 15, 17]);
    assert_eq!(cert.p_side_scan.subsets, 48620);
    assert_eq!(cert.p_side_scan.matches, 0);
    assert!(isomorphic(&obstruction_n(), &obstruction_n()).is_some());
}
