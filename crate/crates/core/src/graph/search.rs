//! Individualization-refinement search for color-preserving bijections.
//!
//! Both graphs are refined in lockstep so that cell numbers mean the same
//! thing on each side; a mismatch in cell sizes prunes the branch.

use num_bigint::BigUint;
use serde::Serialize;

use super::{ColoredGraph, GraphIso};

type Cells = Vec<u32>;

fn signature(g: &ColoredGraph, cells: &[u32], v: usize) -> (u32, Vec<u64>) {
    let mut nbrs: Vec<u64> = g
        .row(v)
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c == 1 || c == 2)
        .map(|(u, &c)| (cells[u] as u64) << 2 | c as u64)
        .collect();
    nbrs.sort_unstable();
    (cells[v], nbrs)
}

fn cell_count(cells: &[u32]) -> usize {
    cells.iter().max().map_or(0, |&m| m as usize + 1)
}

/// Refine both partitions to the coarsest equitable pair. `None` when the
/// two sides stop matching.
fn refine(
    g: &ColoredGraph,
    h: &ColoredGraph,
    mut cg: Cells,
    mut ch: Cells,
) -> Option<(Cells, Cells)> {
    loop {
        let before = cell_count(&cg);
        let sg: Vec<_> = (0..g.len()).map(|v| signature(g, &cg, v)).collect();
        let sh: Vec<_> = (0..h.len()).map(|v| signature(h, &ch, v)).collect();
        let mut all: Vec<&(u32, Vec<u64>)> = sg.iter().chain(sh.iter()).collect();
        all.sort_unstable();
        all.dedup();
        let id = |s: &(u32, Vec<u64>)| all.binary_search(&s).expect("present") as u32;
        cg = sg.iter().map(id).collect();
        ch = sh.iter().map(id).collect();
        let mut count = vec![0i64; all.len()];
        for &c in &cg {
            count[c as usize] += 1;
        }
        for &c in &ch {
            count[c as usize] -= 1;
        }
        if count.iter().any(|&c| c != 0) {
            return None;
        }
        if all.len() == before {
            return Some((cg, ch));
        }
    }
}

fn individualize(cells: &[u32], v: usize) -> Cells {
    let c = cells[v];
    cells
        .iter()
        .enumerate()
        .map(|(u, &x)| {
            if x > c || (x == c && u != v) {
                x + 1
            } else {
                x
            }
        })
        .collect()
}

/// Smallest nonsingleton cell, ties broken by cell number.
fn target_cell(cells: &[u32]) -> Option<u32> {
    let mut size = vec![0usize; cell_count(cells)];
    for &c in cells {
        size[c as usize] += 1;
    }
    size.iter()
        .enumerate()
        .filter(|&(_, &s)| s > 1)
        .min_by_key(|&(c, &s)| (s, c))
        .map(|(c, _)| c as u32)
}

fn search(
    g: &ColoredGraph,
    h: &ColoredGraph,
    cg: Cells,
    ch: Cells,
    limit: usize,
    out: &mut Vec<GraphIso>,
) {
    let Some((cg, ch)) = refine(g, h, cg, ch) else {
        return;
    };
    let Some(c) = target_cell(&cg) else {
        let mut at = vec![0; ch.len()];
        for (w, &x) in ch.iter().enumerate() {
            at[x as usize] = w;
        }
        let map: Vec<usize> = cg.iter().map(|&x| at[x as usize]).collect();
        if g.is_isomorphism_to(h, &map) {
            out.push(GraphIso { map });
        }
        return;
    };
    let v = cg.iter().position(|&x| x == c).expect("cell nonempty");
    let gv = individualize(&cg, v);
    for w in (0..ch.len()).filter(|&w| ch[w] == c) {
        search(g, h, gv.clone(), individualize(&ch, w), limit, out);
        if out.len() >= limit {
            return;
        }
    }
}

/// Up to `limit` color-preserving bijections `g -> h`, in search order.
pub fn find_all(g: &ColoredGraph, h: &ColoredGraph, limit: usize) -> Vec<GraphIso> {
    let mut out = Vec::new();
    if g.len() != h.len() || limit == 0 {
        return out;
    }
    search(g, h, vec![0; g.len()], vec![0; h.len()], limit, &mut out);
    out
}

pub fn find_isomorphism(g: &ColoredGraph, h: &ColoredGraph) -> Option<GraphIso> {
    find_all(g, h, 1).pop()
}

#[derive(Clone, Debug, Serialize)]
pub struct AutomorphismGroup {
    pub generators: Vec<GraphIso>,
    #[serde(serialize_with = "as_decimal")]
    pub order: BigUint,
    pub base: Vec<usize>,
    pub orbit_sizes: Vec<usize>,
}

fn as_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn orbit(k: usize, point: usize, gens: &[GraphIso]) -> Vec<bool> {
    let mut seen = vec![false; k];
    seen[point] = true;
    let mut stack = vec![point];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.map[x];
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Generators and order of `Aut(g)` via a chain of point stabilizers.
pub fn automorphism_group(g: &ColoredGraph) -> AutomorphismGroup {
    let k = g.len();
    let mut levels: Vec<(Cells, usize)> = Vec::new();
    let (mut cells, _) = refine(g, g, vec![0; k], vec![0; k]).expect("a graph matches itself");
    while let Some(c) = target_cell(&cells) {
        let b = cells.iter().position(|&x| x == c).expect("cell nonempty");
        let next = individualize(&cells, b);
        levels.push((cells, b));
        cells = refine(g, g, next.clone(), next)
            .expect("a graph matches itself")
            .0;
    }
    let mut generators: Vec<GraphIso> = Vec::new();
    let mut orbit_sizes = vec![0; levels.len()];
    // Deepest level first: every generator found so far fixes the base
    // points above the current level, so it lies in the current stabilizer.
    for (i, (cells, b)) in levels.iter().enumerate().rev() {
        let mut seen = orbit(k, *b, &generators);
        let gb = individualize(cells, *b);
        for w in (0..k).filter(|&w| cells[w] == cells[*b]) {
            if seen[w] {
                continue;
            }
            let mut found = Vec::new();
            search(g, g, gb.clone(), individualize(cells, w), 1, &mut found);
            if let Some(a) = found.pop() {
                generators.push(a);
                seen = orbit(k, *b, &generators);
            }
        }
        orbit_sizes[i] = seen.iter().filter(|&&s| s).count();
    }
    let order = orbit_sizes
        .iter()
        .fold(BigUint::from(1u32), |acc, &s| acc * BigUint::from(s));
    AutomorphismGroup {
        generators,
        order,
        base: levels.iter().map(|l| l.1).collect(),
        orbit_sizes,
    }
}
