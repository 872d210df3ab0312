use super::Matroid;
use crate::error::{Error, Result};
use crate::subset::{k_subsets, Subset};

/// The exhaustive bijection oracle refuses ground sets larger than this.
pub const BRUTE_FORCE_GUARD: usize = 9;

/// Number of bases through each element, an isomorphism invariant.
fn element_degrees(m: &Matroid) -> Vec<usize> {
    let mut deg = vec![0; m.n()];
    for b in m.bases() {
        for e in b.iter() {
            deg[e] += 1;
        }
    }
    deg
}

struct Search<'a> {
    m: &'a Matroid,
    n: &'a Matroid,
    deg_m: Vec<usize>,
    deg_n: Vec<usize>,
    map: Vec<usize>,
    used: Subset,
}

impl Search<'_> {
    fn compatible(&self, i: usize) -> bool {
        // every subset of the assigned prefix that contains i and has at
        // most rank elements keeps its independence
        let r = self.m.rank();
        for k in 0..r.min(i + 1) {
            for s in k_subsets(i, k) {
                let s = s.insert(i);
                let img = s.map(&self.map);
                let (a, b) = if s.len() == r {
                    (self.m.is_basis(s), self.n.is_basis(img))
                } else {
                    (self.m.is_independent(s), self.n.is_independent(img))
                };
                if a != b {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, i: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if i == self.m.n() {
            return visit(&self.map);
        }
        for y in 0..self.n.n() {
            if self.used.contains(y) || self.deg_m[i] != self.deg_n[y] {
                continue;
            }
            self.map[i] = y;
            self.used = self.used.insert(y);
            let stop = self.compatible(i) && self.run(i + 1, visit);
            self.used = self.used.remove(y);
            if stop {
                return true;
            }
        }
        false
    }
}

fn same_shape(m: &Matroid, n: &Matroid) -> bool {
    m.n() == n.n() && m.rank() == n.rank() && m.bases().len() == n.bases().len()
}

/// Visit every isomorphism `m -> n` in lexicographic order of the image
/// vector until `visit` returns `true`.
fn for_each_isomorphism(m: &Matroid, n: &Matroid, visit: &mut dyn FnMut(&[usize]) -> bool) {
    if !same_shape(m, n) {
        return;
    }
    let deg_m = element_degrees(m);
    let deg_n = element_degrees(n);
    let mut a = deg_m.clone();
    let mut b = deg_n.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return;
    }
    let mut s = Search {
        m,
        n,
        deg_m,
        deg_n,
        map: vec![0; m.n()],
        used: Subset::EMPTY,
    };
    s.run(0, visit);
}

/// Search all bijections with pruning, up to `guard` elements.
pub fn brute_force_isomorphic_with_guard(
    m: &Matroid,
    n: &Matroid,
    guard: usize,
) -> Result<Option<Vec<usize>>> {
    let size = m.n().max(n.n());
    if size > guard {
        return Err(Error::GuardExceeded {
            what: "brute-force isomorphism",
            size,
            guard,
        });
    }
    Ok(isomorphic(m, n))
}

pub fn brute_force_isomorphic(m: &Matroid, n: &Matroid) -> Result<Option<Vec<usize>>> {
    brute_force_isomorphic_with_guard(m, n, BRUTE_FORCE_GUARD)
}

/// Lexicographically least isomorphism `e -> phi[e]`, unguarded.
pub fn isomorphic(m: &Matroid, n: &Matroid) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_isomorphism(m, n, &mut |phi| {
        found = Some(phi.to_vec());
        true
    });
    found
}

/// `|Aut(M)|` by exhaustive search, unguarded.
pub fn count_automorphisms(m: &Matroid) -> u64 {
    let mut count = 0;
    for_each_isomorphism(m, m, &mut |_| {
        count += 1;
        false
    });
    count
}

impl Matroid {
    /// Whether `phi` maps the bases of `self` exactly onto those of `other`.
    pub fn is_isomorphism_to(&self, other: &Matroid, phi: &[usize]) -> bool {
        if phi.len() != self.n() || self.n() != other.n() || self.rank() != other.rank() {
            return false;
        }
        let img = Subset::from_elems(phi.iter().copied());
        if img != other.ground_set() {
            return false;
        }
        self.bases().len() == other.bases().len()
            && self.bases().iter().all(|b| other.is_basis(b.map(phi)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{grid_matroid, sets1};

    #[test]
    fn u23_self_iso_is_identity() {
        let u = Matroid::uniform(2, 3);
        assert_eq!(brute_force_isomorphic(&u, &u).unwrap(), Some(vec![0, 1, 2]));
    }

    #[test]
    fn different_ranks() {
        assert_eq!(
            brute_force_isomorphic(&Matroid::uniform(2, 3), &Matroid::uniform(1, 3)).unwrap(),
            None
        );
    }

    #[test]
    fn grid_under_row_cycling() {
        let g = grid_matroid();
        let perm = [1, 2, 0, 4, 5, 3, 7, 8, 6];
        let h = g.permuted(&perm);
        let phi = brute_force_isomorphic(&g, &h).unwrap().unwrap();
        assert!(g.is_isomorphism_to(&h, &phi));
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(count_automorphisms(&Matroid::uniform(2, 3)), 6);
        // the grid's symmetries: row and column permutations plus transposition
        assert_eq!(count_automorphisms(&grid_matroid()), 72);
        let m = Matroid::from_nonbases(5, 3, sets1(&["345", "125"])).unwrap();
        assert_eq!(count_automorphisms(&m), 8);
    }

    #[test]
    fn guard() {
        let u = Matroid::uniform(2, 10);
        assert!(matches!(
            brute_force_isomorphic(&u, &u),
            Err(Error::GuardExceeded { .. })
        ));
    }
}
