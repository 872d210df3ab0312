use std::collections::HashSet;

use serde::Serialize;

use super::search::automorphism_group;
use super::{ColoredGraph, GraphIso};
use crate::error::{Error, Result};
use crate::subset::Subset;

/// Groups larger than this are not enumerated element by element.
pub const GROUP_ENUMERATION_CAP: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DisjointPair {
    pub first: GraphIso,
    pub second: GraphIso,
}

impl DisjointPair {
    /// Both nontrivial, color preserving, with disjoint supports.
    pub fn verify(&self, g: &ColoredGraph) -> bool {
        let a = &self.first;
        let b = &self.second;
        !a.is_identity()
            && !b.is_identity()
            && g.is_isomorphism_to(g, &a.map)
            && g.is_isomorphism_to(g, &b.map)
            && (0..a.map.len()).all(|i| a.map[i] == i || b.map[i] == i)
    }
}

/// Elements `a, b` lying in a single member `A` and no other, and `c, d`
/// likewise for a member `B`, all four distinct. Swapping `a <-> b` and
/// `c <-> d` then gives disjoint automorphisms of the relation graph.
pub fn private_pair_pattern(
    family: &[Subset],
    n: usize,
) -> Option<((usize, usize), (usize, usize))> {
    let mut home: Vec<Option<usize>> = vec![None; n];
    let mut count = vec![0usize; n];
    for (i, s) in family.iter().enumerate() {
        for e in s.iter() {
            count[e] += 1;
            home[e] = Some(i);
        }
    }
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if count[a] == 1 && count[b] == 1 && home[a] == home[b] {
                pairs.push((a, b));
            }
        }
    }
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for &(c, d) in &pairs[i + 1..] {
            if c != a && c != b && d != a && d != b {
                return Some(((a, b), (c, d)));
            }
        }
    }
    None
}

fn enumerate_group(k: usize, gens: &[GraphIso], cap: usize) -> Result<Vec<GraphIso>> {
    let id = GraphIso::identity(k);
    let mut seen: HashSet<GraphIso> = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = g.compose(&x);
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(Error::GuardExceeded {
                        what: "automorphism group enumeration",
                        size: seen.len(),
                        guard: cap,
                    });
                }
                queue.push(y);
            }
        }
    }
    let mut all: Vec<GraphIso> = seen.into_iter().collect();
    all.sort();
    Ok(all)
}

fn support_bits(a: &GraphIso) -> Vec<u64> {
    let mut bits = vec![0u64; a.map.len().div_ceil(64)];
    for (i, &j) in a.map.iter().enumerate() {
        if i != j {
            bits[i / 64] |= 1 << (i % 64);
        }
    }
    bits
}

/// Two nontrivial automorphisms with disjoint supports, found by scanning
/// the whole group. Pairs of involutions are preferred. `Ok(None)` is an
/// exhaustive answer; groups beyond `cap` elements are refused.
pub fn disjoint_automorphism_pair(g: &ColoredGraph, cap: usize) -> Result<Option<DisjointPair>> {
    let aut = automorphism_group(g);
    let elems: Vec<GraphIso> = enumerate_group(g.len(), &aut.generators, cap)?
        .into_iter()
        .filter(|a| !a.is_identity())
        .collect();
    let supports: Vec<Vec<u64>> = elems.iter().map(support_bits).collect();
    let involution = |a: &GraphIso| a.compose(a).is_identity();
    let disjoint = |i: usize, j: usize| {
        supports[i]
            .iter()
            .zip(&supports[j])
            .all(|(x, y)| x & y == 0)
    };
    for only_involutions in [true, false] {
        for i in 0..elems.len() {
            if only_involutions && !involution(&elems[i]) {
                continue;
            }
            for j in i + 1..elems.len() {
                if only_involutions && !involution(&elems[j]) {
                    continue;
                }
                if disjoint(i, j) {
                    return Ok(Some(DisjointPair {
                        first: elems[i].clone(),
                        second: elems[j].clone(),
                    }));
                }
            }
        }
    }
    Ok(None)
}
