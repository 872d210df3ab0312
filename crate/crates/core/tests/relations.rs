use std::collections::{BTreeMap, BTreeSet};

use mig_core::matroid::{grid_matrix, grid_matroid, sets1, Matroid};
use mig_core::screen::{
    export_groundset_relations, export_pointed_relations, parse_bundle, substitution_table,
    write_substitutions, GridKind,
};
use mig_core::structures::{pointed_sets, rel, IsoStructure};

fn rel_histogram(m: &Matroid, s: IsoStructure) -> BTreeMap<u8, usize> {
    let v = pointed_sets(m, s).unwrap();
    let mut h = BTreeMap::new();
    for a in &v {
        for b in &v {
            *h.entry(rel(a, b)).or_insert(0) += 1;
        }
    }
    h
}

fn mismatches(m: &Matroid, n: &Matroid, s: IsoStructure) -> usize {
    let (hm, hn) = (rel_histogram(m, s), rel_histogram(n, s));
    let total: usize = hm.values().sum::<usize>() * hn.values().sum::<usize>();
    let agree: usize = hm
        .iter()
        .map(|(k, c)| c * hn.get(k).copied().unwrap_or(0))
        .sum();
    total - agree
}

#[test]
fn pointed_ideal_counts() {
    let u = Matroid::uniform(2, 3);
    for s in [
        IsoStructure::Bases,
        IsoStructure::Circuits,
        IsoStructure::Hyperplanes,
    ] {
        let b = export_pointed_relations(&u, &u, s).unwrap();
        let k = pointed_sets(&u, s).unwrap().len();
        assert_eq!((b.rows, b.cols), (k, k));
        assert_eq!(
            b.magic_unitary().count(),
            k * k + 2 * k * k * (k - 1) + 2 * k
        );
        assert_eq!(b.ideal().count(), mismatches(&u, &u, s), "{s}");
    }
}

#[test]
fn pointed_ideal_between_different_matroids() {
    let m = Matroid::uniform(2, 4);
    let n = Matroid::from_bases(4, sets1(&["12", "13", "14", "23", "24"])).unwrap();
    let b = export_pointed_relations(&m, &n, IsoStructure::Bases).unwrap();
    assert_eq!((b.rows, b.cols), (12, 10));
    assert_eq!(b.ideal().count(), mismatches(&m, &n, IsoStructure::Bases));
}

#[test]
fn bases_and_nonbases_give_the_same_groundset_ideal() {
    let u = Matroid::from_nonbases(4, 2, sets1(&["12", "34"])).unwrap();
    let n = Matroid::from_nonbases(4, 2, sets1(&["13", "24"])).unwrap();
    let a: BTreeSet<String> = export_groundset_relations(&u, &n, IsoStructure::Bases)
        .unwrap()
        .relations()
        .map(|r| r.render('w'))
        .collect();
    let b: BTreeSet<String> = export_groundset_relations(&u, &n, IsoStructure::NonBases)
        .unwrap()
        .relations()
        .map(|r| r.render('w'))
        .collect();
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn groundset_counts() {
    // ordered pairs: 6 of 9 are basis tuples of U(2,3), 4 of 9 for {12, 13}
    let u = Matroid::uniform(2, 3);
    let b = export_groundset_relations(&u, &u, IsoStructure::Bases).unwrap();
    assert_eq!((b.rows, b.cols), (3, 3));
    assert_eq!(b.ideal().count(), 6 * 3 + 3 * 6);
    let w = Matroid::from_bases(3, sets1(&["12", "13"])).unwrap();
    let d = export_groundset_relations(&u, &w, IsoStructure::Bases).unwrap();
    assert_eq!(d.ideal().count(), 6 * 5 + 3 * 4);
    // lengths 1 and 2 both appear against U(1,3)
    let v = Matroid::uniform(1, 3);
    let c = export_groundset_relations(&u, &v, IsoStructure::Bases).unwrap();
    assert_eq!(c.ideal().count(), 3 * 3 + 6 * 9);
}

#[test]
fn written_bundles_parse_back() {
    let u = Matroid::uniform(2, 3);
    for b in [
        export_pointed_relations(&u, &u, IsoStructure::Circuits).unwrap(),
        export_groundset_relations(&u, &u, IsoStructure::Circuits).unwrap(),
    ] {
        let mut buf = Vec::new();
        b.write(&mut buf).unwrap();
        let parsed = parse_bundle(std::str::from_utf8(&buf).unwrap()).unwrap();
        assert_eq!(parsed.kind, b.kind);
        assert_eq!((parsed.rows, parsed.cols), (b.rows, b.cols));
        assert_eq!(parsed.legend.len(), b.rows + b.cols);
        assert_eq!(parsed.relations, b.relations().collect::<Vec<_>>());
    }
    assert!(parse_bundle("grid POINTED 1 1\nu[0][3]").is_err());
    assert!(parse_bundle("grid OTHER 1 1").is_err());
}

#[test]
fn substitutions_cover_the_grid() {
    let u = Matroid::uniform(2, 3);
    let t = substitution_table(&u, &u, IsoStructure::Bases).unwrap();
    assert_eq!(t.len(), 9);
    // each element lies in two bases of U(2,3)
    assert!(t.iter().all(|s| s.image.len() == 2));
    let mut buf = Vec::new();
    write_substitutions(&t, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert_eq!(text.lines().next(), Some("w[0][0] -> u[0][0] + u[0][2]"));
    assert_eq!(GridKind::Groundset.letter(), 'w');
}

#[test]
fn grid_from_vectors_matches_listed_nonbases() {
    assert_eq!(
        Matroid::from_integer_vectors(&grid_matrix()).unwrap(),
        grid_matroid()
    );
}
