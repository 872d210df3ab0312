//! Subsets of a ground set of at most 64 elements, stored as bit-masks.
//!
//! The derived `Ord` on [`Subset`] compares the raw masks, which is exactly
//! the colexicographic order on subsets: `A < B` iff the largest element of
//! the symmetric difference lies in `B`. Every family in this crate is kept
//! sorted under this order.

use std::fmt;

pub const MAX_ELEMENTS: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// The full ground set `{0, .., n-1}`.
    pub fn full(n: usize) -> Subset {
        if n >= 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Subset {
        Subset(1u64 << e)
    }

    pub fn from_elems<I: IntoIterator<Item = usize>>(elems: I) -> Subset {
        Subset(elems.into_iter().fold(0u64, |m, e| m | (1u64 << e)))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        e < 64 && self.0 >> e & 1 == 1
    }

    #[inline]
    pub fn insert(self, e: usize) -> Subset {
        Subset(self.0 | (1u64 << e))
    }

    #[inline]
    pub fn remove(self, e: usize) -> Subset {
        Subset(self.0 & !(1u64 << e))
    }

    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn complement(self, n: usize) -> Subset {
        Subset::full(n).difference(self)
    }

    pub fn max_elem(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn min_elem(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// Image under an element map.
    pub fn map(self, f: &[usize]) -> Subset {
        self.iter().fold(Subset::EMPTY, |s, e| s.insert(f[e]))
    }

    /// Re-index a subset of `domain` so that the elements of `domain` become
    /// `0..domain.len()` in increasing order.
    pub fn compress(self, domain: Subset) -> Subset {
        let mut out = 0u64;
        for (i, e) in domain.iter().enumerate() {
            if self.contains(e) {
                out |= 1 << i;
            }
        }
        Subset(out)
    }

    /// Inverse of [`Subset::compress`].
    pub fn expand(self, domain: Subset) -> Subset {
        let mut out = 0u64;
        for (i, e) in domain.iter().enumerate() {
            if self.contains(i) {
                out |= 1 << e;
            }
        }
        Subset(out)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// All `k`-element subsets of `{0, .., n-1}` in colex order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    let next = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else if k >= 64 {
        Some(u64::MAX)
    } else {
        Some((1u64 << k) - 1)
    };
    KSubsets {
        next,
        limit: if n >= 64 { u64::MAX } else { (1u64 << n) - 1 },
    }
}

pub struct KSubsets {
    next: Option<u64>,
    limit: u64,
}

impl Iterator for KSubsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let nxt = (((r ^ cur) >> 2) / c) | r;
                (nxt & !self.limit == 0).then_some(nxt)
            }
        };
        Some(Subset(cur))
    }
}

/// All subsets of `set`, in increasing mask order.
pub fn subsets_of(set: Subset) -> impl Iterator<Item = Subset> {
    let full = set.0;
    let mut cur = Some(0u64);
    std::iter::from_fn(move || {
        let c = cur?;
        cur = if c == full {
            None
        } else {
            Some((c.wrapping_sub(full)) & full)
        };
        Some(Subset(c))
    })
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gosper_counts_match_binomials() {
        for n in 0..=10 {
            for k in 0..=n + 1 {
                let all: Vec<_> = k_subsets(n, k).collect();
                assert_eq!(all.len() as u64, binomial(n, k), "n={n} k={k}");
                assert!(all.windows(2).all(|w| w[0] < w[1]));
                assert!(all
                    .iter()
                    .all(|s| s.len() == k && s.is_subset(Subset::full(n))));
            }
        }
    }

    #[test]
    fn subsets_of_enumerates_power_set() {
        let s = Subset::from_elems([1, 3, 4]);
        let all: Vec<_> = subsets_of(s).collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|x| x.is_subset(s)));
    }

    #[test]
    fn compress_expand_roundtrip() {
        let domain = Subset::from_elems([2, 5, 7, 9]);
        let s = Subset::from_elems([5, 9]);
        let c = s.compress(domain);
        assert_eq!(c, Subset::from_elems([1, 3]));
        assert_eq!(c.expand(domain), s);
    }

    #[test]
    fn mask_order_is_colex() {
        // 12 < 13 < 23 < 14 in colex
        let a = Subset::from_elems([0, 1]);
        let b = Subset::from_elems([0, 2]);
        let c = Subset::from_elems([1, 2]);
        let d = Subset::from_elems([0, 3]);
        assert!(a < b && b < c && c < d);
    }
}
