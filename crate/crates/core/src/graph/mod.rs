//! Edge-colored simple undirected graphs.
//!
//! Vertices and colors carry string names; internally both are interned to
//! dense indices. A graph is immutable once built: every mutation goes through
//! [`GraphBuilder`], which enforces simplicity and total coloring.

mod blocks;
mod document;
pub(crate) mod paths;
mod witness;

pub use blocks::{biconnected_components, Block, BlockDecomposition};
pub(crate) use blocks::biconnected_components_filtered;
pub use document::{load_graph, save_graph, EdgeDocument, GraphDocument};
pub use paths::{
    all_pairs_distances, bfs_distances, count_shortest_paths, diameter,
    enumerate_shortest_paths, shortest_path_dag, Distances, ShortestPathDag,
};
pub use witness::{PathWitness, WitnessError};

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Dense index of a vertex inside one [`EdgeColoredGraph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Dense index of an interned color, in `0..k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorId(pub u32);

impl ColorId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Dense index of an edge, in insertion order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub u32);

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub color: ColorId,
}

impl Edge {
    /// The endpoint opposite to `x`.
    #[inline]
    pub fn other(&self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex name must be non-empty")]
    EmptyName,
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex id {0} is out of range")]
    VertexOutOfRange(u32),
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(String, String),
    #[error("edge ({0}, {1}) has no color")]
    MissingColor(String, String),
    #[error("no edge ({0}, {1}) to recolor")]
    UnknownEdge(String, String),
    #[error("graph is not connected: no path between `{0}` and `{1}`")]
    Disconnected(String, String),
    #[error("graph has no vertices")]
    Empty,
    #[error("malformed graph document: {0}")]
    Document(String),
}

/// A simple undirected graph with a total edge coloring.
#[derive(Clone)]
pub struct EdgeColoredGraph {
    names: Vec<String>,
    index: HashMap<String, VertexId>,
    colors: Vec<String>,
    color_index: HashMap<String, ColorId>,
    edges: Vec<Edge>,
    // neighbors sorted by vertex name
    adj: Vec<Vec<(VertexId, EdgeId)>>,
    edge_lookup: HashMap<(u32, u32), EdgeId>,
    // rank[v] = position of v in name order
    rank: Vec<u32>,
    by_name: Vec<VertexId>,
}

impl fmt::Debug for EdgeColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EdgeColoredGraph")
            .field("vertices", &self.names.len())
            .field("edges", &self.edges.len())
            .field("colors", &self.colors.len())
            .finish()
    }
}

impl PartialEq for EdgeColoredGraph {
    /// Structural equality on names: same vertex sequence, same edge
    /// sequence (as unordered pairs) with the same color names.
    fn eq(&self, other: &Self) -> bool {
        if self.names != other.names || self.edges.len() != other.edges.len() {
            return false;
        }
        self.edges.iter().zip(&other.edges).all(|(a, b)| {
            let (au, av) = (self.name(a.u), self.name(a.v));
            let (bu, bv) = (other.name(b.u), other.name(b.v));
            let same_ends = (au == bu && av == bv) || (au == bv && av == bu);
            same_ends && self.color_name(a.color) == other.color_name(b.color)
        })
    }
}

impl EdgeColoredGraph {
    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of distinct colors in use (`k`).
    pub fn color_count(&self) -> usize {
        self.colors.len()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + '_ {
        (0..self.names.len() as u32).map(VertexId)
    }

    /// Vertices in lexicographic order of their names.
    pub fn vertices_by_name(&self) -> &[VertexId] {
        &self.by_name
    }

    /// Position of `v` in lexicographic name order.
    pub fn name_rank(&self, v: VertexId) -> u32 {
        self.rank[v.index()]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.index()]
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.index()]
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.index.get(name).copied()
    }

    /// Looks up a vertex by name, failing with [`GraphError::UnknownVertex`].
    pub fn require(&self, name: &str) -> Result<VertexId, GraphError> {
        self.vertex(name)
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v.index() < self.names.len() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange(v.0))
        }
    }

    pub fn color_name(&self, c: ColorId) -> &str {
        &self.colors[c.index()]
    }

    pub fn color(&self, name: &str) -> Option<ColorId> {
        self.color_index.get(name).copied()
    }

    pub fn color_names(&self) -> &[String] {
        &self.colors
    }

    /// Neighbors of `v` with the connecting edge, in name order.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v.index()]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.index()].len()
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.edge_lookup.get(&key(u, v)).copied()
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_between(u, v).is_some()
    }

    pub fn edge_color(&self, u: VertexId, v: VertexId) -> Option<ColorId> {
        self.edge_between(u, v).map(|e| self.edges[e.index()].color)
    }

    pub fn is_connected(&self) -> bool {
        if self.names.is_empty() {
            return true;
        }
        let dist = paths::bfs_unchecked(self, VertexId(0));
        dist.iter().all(Option::is_some)
    }

    /// Builds a graph from `(u, v, color)` triples, creating vertices on first
    /// mention. Convenient for tests and small examples.
    pub fn from_edges<'a, I>(edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (&'a str, &'a str, &'a str)>,
    {
        let mut b = GraphBuilder::new();
        for (u, v, c) in edges {
            b.ensure_vertex(u)?;
            b.ensure_vertex(v)?;
            b.add_edge(u, v, c)?;
        }
        Ok(b.build())
    }
}

#[inline]
fn key(u: VertexId, v: VertexId) -> (u32, u32) {
    if u.0 < v.0 {
        (u.0, v.0)
    } else {
        (v.0, u.0)
    }
}

/// Incremental construction of an [`EdgeColoredGraph`].
///
/// Edges keep insertion order; colors are interned when the graph is built,
/// in first-seen order over the final edge list.
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    names: Vec<String>,
    index: HashMap<String, VertexId>,
    edges: Vec<(VertexId, VertexId, String)>,
    edge_lookup: HashMap<(u32, u32), usize>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<VertexId, GraphError> {
        if name.is_empty() {
            return Err(GraphError::EmptyName);
        }
        if self.index.contains_key(name) {
            return Err(GraphError::DuplicateVertex(name.to_string()));
        }
        let id = VertexId(self.names.len() as u32);
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), id);
        Ok(id)
    }

    /// Adds the vertex unless it already exists.
    pub fn ensure_vertex(&mut self, name: &str) -> Result<VertexId, GraphError> {
        match self.index.get(name) {
            Some(&v) => Ok(v),
            None => self.add_vertex(name),
        }
    }

    pub fn has_vertex(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    fn lookup(&self, name: &str) -> Result<VertexId, GraphError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    /// Adds edge `(u, v)` with `color`. Both endpoints must exist.
    pub fn add_edge(&mut self, u: &str, v: &str, color: &str) -> Result<(), GraphError> {
        let (a, b) = (self.lookup(u)?, self.lookup(v)?);
        if a == b {
            return Err(GraphError::SelfLoop(u.to_string()));
        }
        if color.is_empty() {
            return Err(GraphError::MissingColor(u.to_string(), v.to_string()));
        }
        let k = key(a, b);
        if self.edge_lookup.contains_key(&k) {
            return Err(GraphError::DuplicateEdge(u.to_string(), v.to_string()));
        }
        self.edge_lookup.insert(k, self.edges.len());
        self.edges.push((a, b, color.to_string()));
        Ok(())
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        match (self.index.get(u), self.index.get(v)) {
            (Some(&a), Some(&b)) => self.edge_lookup.contains_key(&key(a, b)),
            _ => false,
        }
    }

    /// Replaces the color of an existing edge.
    pub fn recolor(&mut self, u: &str, v: &str, color: &str) -> Result<(), GraphError> {
        let (a, b) = (self.lookup(u)?, self.lookup(v)?);
        let slot = self
            .edge_lookup
            .get(&key(a, b))
            .copied()
            .ok_or_else(|| GraphError::UnknownEdge(u.to_string(), v.to_string()))?;
        self.edges[slot].2 = color.to_string();
        Ok(())
    }

    pub fn edge_color(&self, u: &str, v: &str) -> Option<&str> {
        let (a, b) = (self.index.get(u)?, self.index.get(v)?);
        let slot = self.edge_lookup.get(&key(*a, *b))?;
        Some(&self.edges[*slot].2)
    }

    pub fn build(self) -> EdgeColoredGraph {
        let n = self.names.len();
        let mut colors = Vec::new();
        let mut color_index: HashMap<String, ColorId> = HashMap::new();
        let mut edges = Vec::with_capacity(self.edges.len());
        let mut edge_lookup = HashMap::with_capacity(self.edges.len());
        let mut adj = vec![Vec::new(); n];
        for (i, (u, v, cname)) in self.edges.into_iter().enumerate() {
            let color = match color_index.get(&cname) {
                Some(&c) => c,
                None => {
                    let c = ColorId(colors.len() as u32);
                    colors.push(cname.clone());
                    color_index.insert(cname, c);
                    c
                }
            };
            let e = EdgeId(i as u32);
            edges.push(Edge { u, v, color });
            edge_lookup.insert(key(u, v), e);
            adj[u.index()].push((v, e));
            adj[v.index()].push((u, e));
        }
        let mut by_name: Vec<VertexId> = (0..n as u32).map(VertexId).collect();
        by_name.sort_by(|a, b| self.names[a.index()].cmp(&self.names[b.index()]));
        let mut rank = vec![0u32; n];
        for (r, v) in by_name.iter().enumerate() {
            rank[v.index()] = r as u32;
        }
        for list in &mut adj {
            list.sort_by_key(|(w, _)| rank[w.index()]);
        }
        EdgeColoredGraph {
            names: self.names,
            index: self.index,
            colors,
            color_index,
            edges,
            adj,
            edge_lookup,
            rank,
            by_name,
        }
    }
}
