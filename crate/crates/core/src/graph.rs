//! Bipartite treatment/block graphs.

use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::design::IncidenceMatrix;
use crate::matrix::Matrix;

/// A vertex on either side. Numeric labels put treatments at `1..=v` and
/// blocks at `v+1..=v+b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Vertex {
    Treatment(usize),
    Block(usize),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Treatment(t) => write!(f, "t{t}"),
            Vertex::Block(b) => write!(f, "b{b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartiteGraph {
    left: usize,
    right: usize,
    /// `(treatment, block)`, 1-based, lexicographic.
    edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    /// Graph on `left + right` vertices from explicit edges; edges are
    /// sorted and deduplicated.
    pub fn from_edges(
        left: usize,
        right: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let mut edges: Vec<(usize, usize)> = edges
            .into_iter()
            .inspect(|&(t, b)| {
                assert!(
                    (1..=left).contains(&t) && (1..=right).contains(&b),
                    "edge ({t}, {b}) out of range"
                );
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        BipartiteGraph { left, right, edges }
    }

    pub fn left_size(&self) -> usize {
        self.left
    }

    pub fn right_size(&self) -> usize {
        self.right
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (1..=self.left)
            .map(Vertex::Treatment)
            .chain((1..=self.right).map(Vertex::Block))
    }

    /// Numeric label: treatments `1..=v`, blocks offset by `v`.
    pub fn label(&self, vertex: Vertex) -> usize {
        match vertex {
            Vertex::Treatment(t) => t,
            Vertex::Block(b) => self.left + b,
        }
    }

    fn vertex_of_label(&self, label: usize) -> Vertex {
        if label <= self.left {
            Vertex::Treatment(label)
        } else {
            Vertex::Block(label - self.left)
        }
    }

    pub fn degree(&self, vertex: Vertex) -> usize {
        match vertex {
            Vertex::Treatment(t) => self.edges.iter().filter(|e| e.0 == t).count(),
            Vertex::Block(b) => self.edges.iter().filter(|e| e.1 == b).count(),
        }
    }

    pub fn left_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.left];
        for &(t, _) in &self.edges {
            d[t - 1] += 1;
        }
        d
    }

    pub fn right_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.right];
        for &(_, b) in &self.edges {
            d[b - 1] += 1;
        }
        d
    }

    /// Recovers the incidence cells.
    pub fn to_incidence_cells(&self) -> Matrix<u8> {
        let mut m = Matrix::filled(self.left, self.right, 0u8);
        for &(t, b) in &self.edges {
            m.set(t - 1, b - 1, 1);
        }
        m
    }
}

pub fn bipartite_graph(inc: &IncidenceMatrix) -> BipartiteGraph {
    let cells = inc.cells();
    let edges = (0..cells.nrows())
        .flat_map(|r| (0..cells.ncols()).map(move |c| (r, c)))
        .filter(|&(r, c)| cells.at(r, c) == 1)
        .map(|(r, c)| (r + 1, c + 1));
    BipartiteGraph::from_edges(inc.treatments(), inc.blocks(), edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Regularity {
    pub is_regular: bool,
    pub degree: Option<usize>,
    pub left_size: usize,
    pub right_size: usize,
    pub edge_count: usize,
}

pub fn check_regular(g: &BipartiteGraph) -> Regularity {
    let mut degrees = g.left_degrees().into_iter().chain(g.right_degrees());
    let first = degrees.next();
    let is_regular = degrees.all(|d| Some(d) == first);
    Regularity {
        is_regular,
        degree: if is_regular { first } else { None },
        left_size: g.left_size(),
        right_size: g.right_size(),
        edge_count: g.edges().len(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Components {
    pub count: usize,
    /// Each component sorted by numeric label; components ordered by their
    /// smallest label.
    pub components: Vec<Vec<Vertex>>,
}

pub fn connected_components(g: &BipartiteGraph) -> Components {
    let total = g.left_size() + g.right_size();
    let mut uf = UnionFind::<usize>::new(total);
    for &(t, b) in g.edges() {
        uf.union(t - 1, g.left_size() + b - 1);
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot_of_root = vec![usize::MAX; total];
    // labels visited in ascending order, so groups come out ordered by
    // their smallest label and sorted internally
    for idx in 0..total {
        let root = uf.find(idx);
        if slot_of_root[root] == usize::MAX {
            slot_of_root[root] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot_of_root[root]].push(idx + 1);
    }
    Components {
        count: groups.len(),
        components: groups
            .into_iter()
            .map(|labels| labels.into_iter().map(|l| g.vertex_of_label(l)).collect())
            .collect(),
    }
}
