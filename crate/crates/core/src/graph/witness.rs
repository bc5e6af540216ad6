use std::collections::HashSet;

use thiserror::Error;

use super::{paths::bfs_unchecked, ColorId, EdgeColoredGraph, VertexId};

/// A vertex sequence together with the colors of the traversed edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathWitness {
    pub vertices: Vec<VertexId>,
    pub colors: Vec<ColorId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("witness is empty")]
    Empty,
    #[error("witness has {colors} colors for {vertices} vertices")]
    LengthMismatch { vertices: usize, colors: usize },
    #[error("`{0}` and `{1}` are not adjacent")]
    NotAdjacent(String, String),
    #[error("edge ({0}, {1}) is not colored `{2}`")]
    WrongColor(String, String, String),
    #[error("vertex `{0}` repeats")]
    RepeatedVertex(String),
    #[error("color `{0}` repeats")]
    RepeatedColor(String),
    #[error("path has length {length} but the distance is {distance}")]
    NotShortest { length: usize, distance: usize },
}

impl PathWitness {
    /// Reads the colors off consecutive vertices. `None` if some pair is not
    /// adjacent.
    pub fn from_vertices(g: &EdgeColoredGraph, vertices: Vec<VertexId>) -> Option<Self> {
        let colors = vertices
            .windows(2)
            .map(|w| g.edge_color(w[0], w[1]))
            .collect::<Option<Vec<_>>>()?;
        Some(PathWitness { vertices, colors })
    }

    pub(crate) fn from_vertices_unchecked(g: &EdgeColoredGraph, vertices: Vec<VertexId>) -> Self {
        Self::from_vertices(g, vertices).expect("consecutive vertices are adjacent")
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    pub fn is_rainbow(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.colors.len());
        self.colors.iter().all(|c| seen.insert(*c))
    }

    pub fn names<'g>(&self, g: &'g EdgeColoredGraph) -> Vec<&'g str> {
        self.vertices.iter().map(|&v| g.name(v)).collect()
    }

    pub fn color_names<'g>(&self, g: &'g EdgeColoredGraph) -> Vec<&'g str> {
        self.colors.iter().map(|&c| g.color_name(c)).collect()
    }

    /// Checks that this is a simple path of `g` whose recorded colors match
    /// the coloring and are pairwise distinct.
    pub fn validate_rainbow(&self, g: &EdgeColoredGraph) -> Result<(), WitnessError> {
        if self.vertices.is_empty() {
            return Err(WitnessError::Empty);
        }
        if self.colors.len() + 1 != self.vertices.len() {
            return Err(WitnessError::LengthMismatch {
                vertices: self.vertices.len(),
                colors: self.colors.len(),
            });
        }
        let mut seen_v = HashSet::new();
        for &v in &self.vertices {
            if v.index() >= g.vertex_count() || !seen_v.insert(v) {
                return Err(WitnessError::RepeatedVertex(
                    g.names_get(v).unwrap_or("?").to_string(),
                ));
            }
        }
        let mut seen_c = HashSet::new();
        for (w, &c) in self.vertices.windows(2).zip(&self.colors) {
            let (a, b) = (g.name(w[0]).to_string(), g.name(w[1]).to_string());
            let Some(actual) = g.edge_color(w[0], w[1]) else {
                return Err(WitnessError::NotAdjacent(a, b));
            };
            if actual != c {
                return Err(WitnessError::WrongColor(a, b, g.color_name(c).to_string()));
            }
            if !seen_c.insert(c) {
                return Err(WitnessError::RepeatedColor(g.color_name(c).to_string()));
            }
        }
        Ok(())
    }

    /// [`validate_rainbow`](Self::validate_rainbow) plus: the length equals
    /// the BFS distance between the endpoints.
    pub fn validate_strong(&self, g: &EdgeColoredGraph) -> Result<(), WitnessError> {
        self.validate_rainbow(g)?;
        let dist = bfs_unchecked(g, self.start())[self.end().index()].unwrap_or(u32::MAX) as usize;
        if dist != self.len() {
            return Err(WitnessError::NotShortest { length: self.len(), distance: dist });
        }
        Ok(())
    }
}

impl EdgeColoredGraph {
    fn names_get(&self, v: VertexId) -> Option<&str> {
        (v.index() < self.vertex_count()).then(|| self.name(v))
    }
}
