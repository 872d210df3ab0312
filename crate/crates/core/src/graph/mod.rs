//! The relation colored graph of a matroid and a structure, and colored
//! graph isomorphism search.

mod disjoint;
mod search;

pub use disjoint::{
    disjoint_automorphism_pair, private_pair_pattern, DisjointPair, GROUP_ENUMERATION_CAP,
};
pub use search::{automorphism_group, find_all, find_isomorphism, AutomorphismGroup};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::structures::{pointed_sets, rel, IsoStructure, PointedSet};
use crate::subset::Subset;

/// A complete graph whose edges carry colors in `0..=3`, stored as a dense
/// symmetric table. Color 0 appears only on the diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    k: usize,
    colors: Vec<u8>,
}

impl ColoredGraph {
    pub fn from_fn(k: usize, f: impl Fn(usize, usize) -> u8) -> ColoredGraph {
        let mut colors = vec![0; k * k];
        for i in 0..k {
            for j in 0..k {
                colors[i * k + j] = f(i, j);
            }
        }
        ColoredGraph { k, colors }
    }

    pub fn len(&self) -> usize {
        self.k
    }

    pub fn is_empty(&self) -> bool {
        self.k == 0
    }

    #[inline]
    pub fn color(&self, i: usize, j: usize) -> u8 {
        self.colors[i * self.k + j]
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.colors[i * self.k..(i + 1) * self.k]
    }

    /// Whether `map` is a bijection preserving every color.
    pub fn is_isomorphism_to(&self, other: &ColoredGraph, map: &[usize]) -> bool {
        if self.k != other.k || map.len() != self.k {
            return false;
        }
        let mut seen = vec![false; self.k];
        for &w in map {
            if w >= self.k || std::mem::replace(&mut seen[w], true) {
                return false;
            }
        }
        (0..self.k).all(|i| (0..self.k).all(|j| self.color(i, j) == other.color(map[i], map[j])))
    }
}

/// `G(M, S)`: pointed sets as vertices, colored by `rel`. Edges are the
/// pairs of color 1 or 2.
#[derive(Clone, Debug)]
pub struct RelColoredGraph {
    pub vertices: Vec<PointedSet>,
    graph: ColoredGraph,
}

/// A vertex bijection between two colored graphs, `i -> map[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GraphIso {
    pub map: Vec<usize>,
}

impl GraphIso {
    pub fn identity(k: usize) -> GraphIso {
        GraphIso {
            map: (0..k).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Points moved by the map.
    pub fn support(&self) -> Vec<usize> {
        self.map
            .iter()
            .enumerate()
            .filter(|(i, j)| i != *j)
            .map(|(i, _)| i)
            .collect()
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &GraphIso) -> GraphIso {
        GraphIso {
            map: other.map.iter().map(|&j| self.map[j]).collect(),
        }
    }

    pub fn inverse(&self) -> GraphIso {
        let mut inv = vec![0; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        GraphIso { map: inv }
    }
}

impl RelColoredGraph {
    pub fn from_pointed_sets(vertices: Vec<PointedSet>) -> RelColoredGraph {
        let graph = ColoredGraph::from_fn(vertices.len(), |i, j| rel(&vertices[i], &vertices[j]));
        RelColoredGraph { vertices, graph }
    }

    pub fn build(m: &Matroid, s: IsoStructure) -> Result<RelColoredGraph> {
        Ok(RelColoredGraph::from_pointed_sets(pointed_sets(m, s)?))
    }

    pub fn colored(&self) -> &ColoredGraph {
        &self.graph
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn color(&self, i: usize, j: usize) -> u8 {
        self.graph.color(i, j)
    }

    pub fn index_of(&self, v: &PointedSet) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    /// Edges `(i, j, color)` with `i < j` and color 1 or 2.
    pub fn edges(&self) -> Vec<(usize, usize, u8)> {
        let k = self.len();
        let mut out = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                let c = self.color(i, j);
                if c == 1 || c == 2 {
                    out.push((i, j, c));
                }
            }
        }
        out
    }

    pub fn edge_count(&self, color: u8) -> usize {
        self.edges().iter().filter(|e| e.2 == color).count()
    }

    /// The element/set incidence graph: one node per ground element, then
    /// one per distinct set; edges `(element, set)` for membership.
    pub fn bipartite(&self) -> (Vec<Subset>, Vec<(usize, usize)>) {
        let mut sets: Vec<Subset> = self.vertices.iter().map(|v| v.set).collect();
        sets.dedup();
        let edges = self
            .vertices
            .iter()
            .map(|v| (v.point, sets.binary_search(&v.set).expect("present")))
            .collect();
        (sets, edges)
    }

    /// The line graph of [`RelColoredGraph::bipartite`]: vertices are the
    /// pointed sets, adjacent when they share a point or a set.
    pub fn line_graph(&self) -> Vec<(usize, usize)> {
        self.edges().into_iter().map(|(i, j, _)| (i, j)).collect()
    }
}

/// Recover the ground-set map `phi` with `theta(a) = (phi(S_a), phi(p_a))`
/// and check that it is an isomorphism `m -> n`.
pub fn matroid_iso_from_graph_iso(
    m: &Matroid,
    n: &Matroid,
    gm: &RelColoredGraph,
    gn: &RelColoredGraph,
    theta: &GraphIso,
) -> Result<Vec<usize>> {
    if !gm.colored().is_isomorphism_to(gn.colored(), &theta.map) {
        return Err(Error::NotInduced("map does not preserve rel".into()));
    }
    if m.n() != n.n() {
        return Err(Error::NotInduced("ground sets differ in size".into()));
    }
    let mut phi = vec![usize::MAX; m.n()];
    for (i, a) in gm.vertices.iter().enumerate() {
        let x = gn.vertices[theta.map[i]];
        match phi[a.point] {
            usize::MAX => phi[a.point] = x.point,
            q if q != x.point => {
                return Err(Error::NotInduced(format!(
                    "element {} sent to both {} and {}",
                    a.point, q, x.point
                )))
            }
            _ => {}
        }
    }
    if let Some(e) = phi.iter().position(|&q| q == usize::MAX) {
        return Err(Error::NotInduced(format!("element {e} is not covered")));
    }
    for (i, a) in gm.vertices.iter().enumerate() {
        let x = gn.vertices[theta.map[i]];
        if a.set.map(&phi) != x.set {
            return Err(Error::NotInduced(format!(
                "set {:?} is not mapped to {:?}",
                a.set, x.set
            )));
        }
    }
    if !m.is_isomorphism_to(n, &phi) {
        return Err(Error::NotInduced(
            "ground-set map is not a matroid isomorphism".into(),
        ));
    }
    Ok(phi)
}

/// Lift a ground-set bijection to the pointed sets of `S`.
pub fn lift_to_vertices(
    from: &RelColoredGraph,
    to: &RelColoredGraph,
    phi: &[usize],
) -> Result<GraphIso> {
    let map = from
        .vertices
        .iter()
        .map(|a| {
            let img = PointedSet::new(a.set.map(phi), phi[a.point]);
            to.index_of(&img)
                .ok_or_else(|| Error::NotAnIsomorphism(format!("{img:?} is not a pointed set")))
        })
        .collect::<Result<Vec<usize>>>()?;
    Ok(GraphIso { map })
}
