use std::collections::VecDeque;

use super::{EdgeColoredGraph, EdgeId, GraphError, PathWitness, VertexId};

/// Unweighted distances from one source; `None` marks unreachable vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distances(Vec<Option<u32>>);

impl Distances {
    pub fn get(&self, v: VertexId) -> Option<u32> {
        self.0[v.index()]
    }

    pub fn as_slice(&self) -> &[Option<u32>] {
        &self.0
    }

    pub fn max_finite(&self) -> u32 {
        self.0.iter().flatten().copied().max().unwrap_or(0)
    }
}

pub(crate) fn bfs_unchecked(g: &EdgeColoredGraph, s: VertexId) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[s.index()] = Some(0);
    queue.push_back(s);
    while let Some(x) = queue.pop_front() {
        let d = dist[x.index()].unwrap();
        for &(w, _) in g.neighbors(x) {
            if dist[w.index()].is_none() {
                dist[w.index()] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn bfs_distances(g: &EdgeColoredGraph, s: VertexId) -> Result<Distances, GraphError> {
    g.check_vertex(s)?;
    Ok(Distances(bfs_unchecked(g, s)))
}

/// One BFS per vertex, indexed by source.
pub fn all_pairs_distances(g: &EdgeColoredGraph) -> Vec<Distances> {
    g.vertices().map(|s| Distances(bfs_unchecked(g, s))).collect()
}

/// Largest distance over all vertex pairs.
///
/// Fails on a disconnected graph, naming the lexicographically first
/// unreachable pair.
pub fn diameter(g: &EdgeColoredGraph) -> Result<u32, GraphError> {
    if g.vertex_count() == 0 {
        return Err(GraphError::Empty);
    }
    let mut best = 0;
    for &s in g.vertices_by_name() {
        let dist = bfs_unchecked(g, s);
        for &t in g.vertices_by_name() {
            match dist[t.index()] {
                Some(d) => best = best.max(d),
                None => {
                    let (a, b) = if g.name_rank(s) < g.name_rank(t) { (s, t) } else { (t, s) };
                    return Err(GraphError::Disconnected(
                        g.name(a).to_string(),
                        g.name(b).to_string(),
                    ));
                }
            }
        }
    }
    Ok(best)
}

/// The DAG of all shortest paths leaving one source.
///
/// An edge `u -> v` is tight when `dist(v) = dist(u) + 1`; every shortest
/// path from the source is a directed path of tight edges and vice versa.
#[derive(Debug, Clone)]
pub struct ShortestPathDag {
    source: VertexId,
    dist: Vec<Option<u32>>,
    preds: Vec<Vec<(VertexId, EdgeId)>>,
    path_count: Vec<u64>,
    // vertices reachable from the source, by nondecreasing distance
    order: Vec<VertexId>,
}

impl ShortestPathDag {
    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn dist(&self, v: VertexId) -> Option<u32> {
        self.dist[v.index()]
    }

    /// Tight in-edges of `v`, predecessors in name order.
    pub fn preds(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.preds[v.index()]
    }

    /// Number of shortest source-to-`v` paths, saturating at `u64::MAX`.
    pub fn path_count(&self, v: VertexId) -> u64 {
        self.path_count[v.index()]
    }

    /// Reachable vertices in BFS order (nondecreasing distance).
    pub fn topological_order(&self) -> &[VertexId] {
        &self.order
    }

    pub fn tight_edges(&self) -> impl Iterator<Item = (VertexId, VertexId, EdgeId)> + '_ {
        self.order
            .iter()
            .flat_map(move |&v| self.preds[v.index()].iter().map(move |&(u, e)| (u, v, e)))
    }
}

pub fn shortest_path_dag(g: &EdgeColoredGraph, s: VertexId) -> Result<ShortestPathDag, GraphError> {
    g.check_vertex(s)?;
    Ok(dag_unchecked(g, s))
}

pub(crate) fn dag_unchecked(g: &EdgeColoredGraph, s: VertexId) -> ShortestPathDag {
    let n = g.vertex_count();
    let mut dist = vec![None; n];
    let mut preds = vec![Vec::new(); n];
    let mut path_count = vec![0u64; n];
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    dist[s.index()] = Some(0u32);
    path_count[s.index()] = 1;
    queue.push_back(s);
    while let Some(x) = queue.pop_front() {
        order.push(x);
        let d = dist[x.index()].unwrap();
        for &(w, e) in g.neighbors(x) {
            match dist[w.index()] {
                None => {
                    dist[w.index()] = Some(d + 1);
                    queue.push_back(w);
                }
                Some(dw) if dw != d + 1 => continue,
                Some(_) => {}
            }
            preds[w.index()].push((x, e));
            path_count[w.index()] = path_count[w.index()].saturating_add(path_count[x.index()]);
        }
    }
    for list in &mut preds {
        list.sort_by_key(|(u, _)| g.name_rank(*u));
    }
    ShortestPathDag { source: s, dist, preds, path_count, order }
}

/// Exact number of shortest `u`-`v` paths; zero when disconnected.
pub fn count_shortest_paths(g: &EdgeColoredGraph, u: VertexId, v: VertexId) -> Result<u64, GraphError> {
    g.check_vertex(v)?;
    Ok(shortest_path_dag(g, u)?.path_count(v))
}

/// Shortest `u`-`v` paths in lexicographic order of vertex names, at most
/// `cap` of them (`None` = all).
pub fn enumerate_shortest_paths(
    g: &EdgeColoredGraph,
    u: VertexId,
    v: VertexId,
    cap: Option<usize>,
) -> Result<Vec<PathWitness>, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let from_u = bfs_unchecked(g, u);
    let to_v = bfs_unchecked(g, v);
    let mut out = Vec::new();
    let Some(total) = from_u[v.index()] else {
        return Ok(out);
    };
    let cap = cap.unwrap_or(usize::MAX);
    if cap == 0 {
        return Ok(out);
    }
    // iterative DFS; stack holds (vertex, next neighbor slot)
    let mut path = vec![u];
    let mut stack = vec![(u, 0usize)];
    while let Some(&mut (x, ref mut slot)) = stack.last_mut() {
        if x == v {
            out.push(PathWitness::from_vertices_unchecked(g, path.clone()));
            if out.len() >= cap {
                break;
            }
            stack.pop();
            path.pop();
            continue;
        }
        let dx = from_u[x.index()].unwrap();
        let nbrs = g.neighbors(x);
        let mut next = None;
        while *slot < nbrs.len() {
            let (w, _) = nbrs[*slot];
            *slot += 1;
            let on_geodesic = from_u[w.index()] == Some(dx + 1)
                && to_v[w.index()].is_some_and(|d| dx + 1 + d == total);
            if on_geodesic {
                next = Some(w);
                break;
            }
        }
        match next {
            Some(w) => {
                path.push(w);
                stack.push((w, 0));
            }
            None => {
                stack.pop();
                path.pop();
            }
        }
    }
    Ok(out)
}
