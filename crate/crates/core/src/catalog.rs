//! Every matroid on a small ground set, up to isomorphism.
//!
//! Each matroid on `n + 1` elements is a single-element extension of its
//! deletion of the last element: either by a coloop, or by the modular cut
//! generated by a linear subclass of hyperplanes. Extensions are generated
//! from a catalog for `n` and deduplicated by isomorphism.

use std::collections::HashMap;

use crate::matroid::{isomorphic, Matroid};
use crate::subset::Subset;

/// Number of nonisomorphic matroids on `n` elements for `n = 0..=7`.
pub const KNOWN_COUNTS: [usize; 8] = [1, 2, 4, 8, 17, 38, 98, 306];

type Key = (usize, usize, usize, Vec<usize>, Vec<usize>);

fn invariant_key(m: &Matroid) -> Key {
    let mut deg = vec![0; m.n()];
    for b in m.bases() {
        for e in b.iter() {
            deg[e] += 1;
        }
    }
    deg.sort_unstable();
    let mut circuit_sizes = vec![0; m.n() + 1];
    for c in m.circuits().expect("catalog sizes are small") {
        circuit_sizes[c.len()] += 1;
    }
    (m.n(), m.rank(), m.bases().len(), deg, circuit_sizes)
}

/// All linear subclasses of the hyperplanes of `m`: sets closed under adding
/// every hyperplane through `H1 ∩ H2` whenever `H1, H2` are included and
/// `rk(H1 ∩ H2) = r - 2`.
pub fn linear_subclasses(m: &Matroid) -> Vec<Vec<Subset>> {
    let hs = m.hyperplanes().expect("catalog sizes are small");
    if m.rank() == 0 {
        return vec![Vec::new()];
    }
    let k = hs.len();
    // forced[i][j]: hyperplanes implied by including both i and j
    let mut forced = vec![vec![0u64; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let meet = hs[i].intersection(hs[j]);
            if m.rank_unchecked(meet) + 2 == m.rank() {
                let mask = (0..k)
                    .filter(|&l| meet.is_subset(hs[l]))
                    .fold(0u64, |acc, l| acc | 1 << l);
                forced[i][j] = mask;
                forced[j][i] = mask;
            }
        }
    }
    let close = |mut set: u64| -> u64 {
        loop {
            let mut next = set;
            for (i, row) in forced.iter().enumerate() {
                if set >> i & 1 == 0 {
                    continue;
                }
                for (j, &f) in row.iter().enumerate().skip(i + 1) {
                    if set >> j & 1 == 1 {
                        next |= f;
                    }
                }
            }
            if next == set {
                return set;
            }
            set = next;
        }
    };
    let mut out = Vec::new();
    // decide hyperplanes in order; `excluded` may never be forced back in
    fn walk(
        i: usize,
        k: usize,
        included: u64,
        excluded: u64,
        close: &dyn Fn(u64) -> u64,
        out: &mut Vec<u64>,
    ) {
        if i == k {
            out.push(included);
            return;
        }
        if included >> i & 1 == 1 {
            walk(i + 1, k, included, excluded, close, out);
            return;
        }
        walk(i + 1, k, included, excluded | 1 << i, close, out);
        let with = close(included | 1 << i);
        if with & excluded == 0 {
            walk(i + 1, k, with, excluded, close, out);
        }
    }
    let mut masks = Vec::new();
    walk(0, k, 0, 0, &close, &mut masks);
    for mask in masks {
        out.push(
            (0..k)
                .filter(|&l| mask >> l & 1 == 1)
                .map(|l| hs[l])
                .collect(),
        );
    }
    out
}

/// All single-element extensions of `m` (with repetition up to isomorphism).
pub fn extensions(m: &Matroid) -> Vec<Matroid> {
    let mut out = vec![m.add_coloop().expect("small")];
    for cut in linear_subclasses(m) {
        out.push(m.extension_by_hyperplanes(&cut).expect("small"));
    }
    out
}

/// Representatives of all isomorphism classes of matroids on exactly
/// `0, 1, ..., max_n` elements, indexed by size.
pub fn catalog(max_n: usize) -> Vec<Vec<Matroid>> {
    let mut levels: Vec<Vec<Matroid>> = vec![vec![Matroid::uniform(0, 0)]];
    for _ in 0..max_n {
        let prev = levels.last().expect("nonempty");
        let mut buckets: HashMap<Key, Vec<Matroid>> = HashMap::new();
        let mut order: Vec<Matroid> = Vec::new();
        for m in prev {
            for e in extensions(m) {
                let bucket = buckets.entry(invariant_key(&e)).or_default();
                if bucket.iter().any(|b| isomorphic(b, &e).is_some()) {
                    continue;
                }
                bucket.push(e.clone());
                order.push(e);
            }
        }
        order.sort_by(|a, b| (a.rank(), a.bases()).cmp(&(b.rank(), b.bases())));
        levels.push(order);
    }
    levels
}

/// All catalog matroids on at most `max_n` elements, flattened.
pub fn all_up_to(max_n: usize) -> Vec<Matroid> {
    catalog(max_n).into_iter().flatten().collect()
}
