//! Finite presentations of row-finite k-graphs.
//!
//! A presentation is a k-colored skeleton together with commuting-square
//! data: every composable two-edge word whose colors differ is paired with
//! exactly one other such word with the colors in the opposite order. The
//! path category generated by the skeleton modulo the squares is the k-graph.

mod dot;
mod omega;
mod parse;
mod validate;

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

pub use dot::to_dot;
pub use omega::{edge_name as omega_edge_name, omega, vertex_name as omega_vertex_name};
pub use dot::color_style;
pub use parse::{parse_kg, print_kg};
pub use validate::{validate, Violation, ViolationKind, ValidationReport};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct VertexId(pub u32);

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct EdgeId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Unvalidated skeleton data, as read from a `.kg` file.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Presentation {
    pub rank: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeDecl>,
    pub squares: Vec<SquareDecl>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeDecl {
    pub name: String,
    pub range: String,
    pub source: String,
    /// 1-based color.
    pub color: usize,
}

/// `left.0 . left.1 ~ right.0 . right.1`, words listed from the range end.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SquareDecl {
    pub left: (String, String),
    pub right: (String, String),
}

#[derive(Clone, Debug)]
pub struct Edge {
    pub name: String,
    pub range: VertexId,
    pub source: VertexId,
    /// 0-based color.
    pub color: usize,
}

/// A validated k-graph presentation.
#[derive(Clone, Debug)]
pub struct KGraph {
    rank: usize,
    vertex_names: Vec<String>,
    vertex_index: HashMap<String, VertexId>,
    edges: Vec<Edge>,
    edge_index: HashMap<String, EdgeId>,
    /// `[vertex][color]` -> edges with that range and color.
    by_range: Vec<Vec<Vec<EdgeId>>>,
    /// Involution on composable bi-colored pairs given by the squares.
    swap: HashMap<(EdgeId, EdgeId), (EdgeId, EdgeId)>,
    fingerprint: u64,
}

impl KGraph {
    /// Validates `presentation` and builds the graph. The error carries the
    /// code of the first violation and lists all of them.
    pub fn from_presentation(presentation: &Presentation) -> Result<KGraph> {
        let report = validate(presentation);
        if let Some(first) = report.violations.first() {
            let msg = report
                .violations
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join("; ");
            return Err(match first.kind {
                ViolationKind::Malformed => Error::Malformed(msg),
                ViolationKind::IncompleteSquares => Error::IncompleteSquares(msg),
                ViolationKind::CubeInconsistent => Error::CubeInconsistent(msg),
            });
        }
        Ok(Self::build_unchecked(presentation))
    }

    pub fn parse(text: &str) -> Result<KGraph> {
        Self::from_presentation(&parse_kg(text)?)
    }

    /// Assumes the names resolve; squares are taken as given.
    pub(crate) fn build_unchecked(p: &Presentation) -> KGraph {
        let vertex_index: HashMap<String, VertexId> = p
            .vertices
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), VertexId(i as u32)))
            .collect();
        let edges: Vec<Edge> = p
            .edges
            .iter()
            .map(|e| Edge {
                name: e.name.clone(),
                range: vertex_index[&e.range],
                source: vertex_index[&e.source],
                color: e.color - 1,
            })
            .collect();
        let edge_index: HashMap<String, EdgeId> = edges
            .iter()
            .enumerate()
            .map(|(i, e)| (e.name.clone(), EdgeId(i as u32)))
            .collect();
        let mut by_range = vec![vec![Vec::new(); p.rank]; p.vertices.len()];
        for (i, e) in edges.iter().enumerate() {
            by_range[e.range.index()][e.color].push(EdgeId(i as u32));
        }
        let mut swap = HashMap::new();
        for sq in &p.squares {
            let l = (edge_index[&sq.left.0], edge_index[&sq.left.1]);
            let r = (edge_index[&sq.right.0], edge_index[&sq.right.1]);
            swap.insert(l, r);
            swap.insert(r, l);
        }
        let mut g = KGraph {
            rank: p.rank,
            vertex_names: p.vertices.clone(),
            vertex_index,
            edges,
            edge_index,
            by_range,
            swap,
            fingerprint: 0,
        };
        let mut hasher = DefaultHasher::new();
        print_kg(&g.to_presentation()).hash(&mut hasher);
        g.fingerprint = hasher.finish();
        g
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_names.len() as u32).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v.index()]
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.vertex_index.get(name).copied()
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.index()]
    }

    pub fn edge_id(&self, name: &str) -> Option<EdgeId> {
        self.edge_index.get(name).copied()
    }

    /// `v Λ^{e_color}`.
    pub fn edges_at(&self, v: VertexId, color: usize) -> &[EdgeId] {
        &self.by_range[v.index()][color]
    }

    /// `v Λ^1`, all colors, in color order.
    pub fn edges_with_range(&self, v: VertexId) -> Vec<EdgeId> {
        self.by_range[v.index()].iter().flatten().copied().collect()
    }

    /// Square partner of a composable bi-colored pair.
    pub fn swap_pair(&self, a: EdgeId, b: EdgeId) -> Option<(EdgeId, EdgeId)> {
        self.swap.get(&(a, b)).copied()
    }

    /// Square count, each square counted once.
    pub fn square_count(&self) -> usize {
        self.swap.len() / 2
    }

    /// The presentation this graph was built from, squares written with the
    /// lower color first on the left.
    pub fn to_presentation(&self) -> Presentation {
        let mut squares: Vec<((EdgeId, EdgeId), (EdgeId, EdgeId))> = self
            .swap
            .iter()
            .filter(|((a, b), _)| self.edge(*a).color < self.edge(*b).color)
            .map(|(l, r)| (*l, *r))
            .collect();
        squares.sort();
        let name = |e: EdgeId| self.edge(e).name.clone();
        Presentation {
            rank: self.rank,
            vertices: self.vertex_names.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeDecl {
                    name: e.name.clone(),
                    range: self.vertex_name(e.range).to_string(),
                    source: self.vertex_name(e.source).to_string(),
                    color: e.color + 1,
                })
                .collect(),
            squares: squares
                .into_iter()
                .map(|(l, r)| SquareDecl {
                    left: (name(l.0), name(l.1)),
                    right: (name(r.0), name(r.1)),
                })
                .collect(),
        }
    }

    /// Vertices `v` with `vΛ^{e_i} = ∅` for some color `i`.
    pub fn sources(&self) -> Vec<VertexId> {
        self.vertices()
            .filter(|v| self.by_range[v.index()].iter().any(|es| es.is_empty()))
            .collect()
    }

    pub fn has_no_sources(&self) -> bool {
        self.sources().is_empty()
    }
}

impl PartialEq for KGraph {
    fn eq(&self, other: &Self) -> bool {
        self.to_presentation() == other.to_presentation()
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn lambda2_sizes() {
        let g = lambda2();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.square_count(), 1);
        assert!(g.has_no_sources());
    }

    #[test]
    fn lambda1_source_is_w() {
        let g = lambda1();
        let names: Vec<_> = g.sources().into_iter().map(|v| g.vertex_name(v).to_string()).collect();
        assert_eq!(names, vec!["w"]);
    }

    #[test]
    fn presentation_roundtrip_through_graph() {
        let g = lambda2();
        let again = KGraph::from_presentation(&g.to_presentation()).unwrap();
        assert_eq!(g, again);
    }
}
