use num_rational::BigRational;
use num_traits::Zero;

use super::Matroid;
use crate::error::{Error, Result};
use crate::subset::{k_subsets, Subset, MAX_ELEMENTS};

pub type Rational = BigRational;

/// Row-reduce in place, returning the rank.
fn rank_of_rows(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        let (top, below) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot;
            for (x, p) in row[c..cols].iter_mut().zip(&pivot_row[c..cols]) {
                *x -= &f * p;
            }
        }
        rank += 1;
    }
    rank
}

impl Matroid {
    /// Column matroid of an `r x n` rational matrix of full row rank.
    pub fn from_vectors(matrix: &[Vec<Rational>]) -> Result<Matroid> {
        let r = matrix.len();
        let n = matrix.first().map_or(0, |row| row.len());
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge {
                n,
                max: MAX_ELEMENTS,
            });
        }
        if let Some(row) = matrix.iter().find(|row| row.len() != n) {
            return Err(Error::CardinalityMismatch {
                expected: n,
                found: row.len(),
            });
        }
        let found = rank_of_rows(matrix.to_vec());
        if found < r {
            return Err(Error::RankDeficient { rows: r, found });
        }
        let bases: Vec<Subset> = k_subsets(n, r)
            .filter(|s| {
                let sub: Vec<Vec<Rational>> = matrix
                    .iter()
                    .map(|row| s.iter().map(|c| row[c].clone()).collect())
                    .collect();
                rank_of_rows(sub) == r
            })
            .collect();
        Ok(Matroid::from_sorted_bases_unchecked(n, r, bases))
    }

    pub fn from_integer_vectors(matrix: &[Vec<i64>]) -> Result<Matroid> {
        let m: Vec<Vec<Rational>> = matrix
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| Rational::from_integer(v.into()))
                    .collect()
            })
            .collect();
        Matroid::from_vectors(&m)
    }

    /// Cycle matroid of a multigraph given as an edge list; edge `i` is
    /// element `i`. Loops become matroid loops.
    pub fn from_graph(edges: &[(usize, usize)]) -> Result<Matroid> {
        let n = edges.len();
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge {
                n,
                max: MAX_ELEMENTS,
            });
        }
        let vertices = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        let forest = |s: Subset| -> bool {
            let mut uf = UnionFind::new(vertices);
            s.iter().all(|e| uf.union(edges[e].0, edges[e].1))
        };
        let r = {
            let mut uf = UnionFind::new(vertices);
            edges.iter().filter(|&&(u, v)| uf.union(u, v)).count()
        };
        let bases: Vec<Subset> = k_subsets(n, r).filter(|s| forest(*s)).collect();
        Ok(Matroid::from_sorted_bases_unchecked(n, r, bases))
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// The 3x9 matrix realizing the grid matroid over the rationals.
pub fn grid_matrix() -> Vec<Vec<i64>> {
    vec![
        vec![1, 0, 1, 0, 2, 2, 1, 1, 1],
        vec![0, 1, 1, 0, 5, 5, 0, 3, 2],
        vec![0, 0, 0, 1, 2, 6, 4, 1, 2],
    ]
}
