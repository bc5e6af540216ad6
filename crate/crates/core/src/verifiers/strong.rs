use super::{ordered_pairs, Algorithm, Stats, Verdict, VerifyError};
use crate::graph::paths::{bfs_unchecked, dag_unchecked};
use crate::graph::{ColorId, EdgeColoredGraph, GraphError, PathWitness, VertexId};

/// How many shortest paths per pair the enumeration verifier may face.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapPolicy {
    Unlimited,
    /// Refuse unless every pair has at most this many shortest paths.
    AtMost(u64),
}

/// Depth-first search along the geodesics from `u` to `v`, skipping any
/// prefix that repeats a color. Returns the lexicographically first rainbow
/// geodesic.
struct GeodesicSearch<'g> {
    g: &'g EdgeColoredGraph,
    used: Vec<bool>,
    states: u64,
}

impl<'g> GeodesicSearch<'g> {
    fn new(g: &'g EdgeColoredGraph) -> Self {
        GeodesicSearch { g, used: vec![false; g.color_count()], states: 0 }
    }

    fn run(
        &mut self,
        u: VertexId,
        v: VertexId,
        from_u: &[Option<u32>],
        to_v: &[Option<u32>],
    ) -> Option<Vec<VertexId>> {
        let total = from_u[v.index()]?;
        let g = self.g;
        let mut path = vec![u];
        let mut colors: Vec<ColorId> = Vec::new();
        let mut slots = vec![0usize];
        loop {
            let x = *path.last().unwrap();
            if x == v {
                for c in colors {
                    self.used[c.index()] = false;
                }
                return Some(path);
            }
            let depth = path.len() as u32 - 1;
            let nbrs = g.neighbors(x);
            let slot = slots.last_mut().unwrap();
            let mut advanced = false;
            while *slot < nbrs.len() {
                let (w, e) = nbrs[*slot];
                *slot += 1;
                let c = g.edge(e).color;
                let on_geodesic = from_u[w.index()] == Some(depth + 1)
                    && to_v[w.index()] == Some(total - depth - 1);
                if on_geodesic && !self.used[c.index()] {
                    self.states += 1;
                    self.used[c.index()] = true;
                    colors.push(c);
                    path.push(w);
                    slots.push(0);
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                path.pop();
                slots.pop();
                if path.is_empty() {
                    return None;
                }
                let c = colors.pop().unwrap();
                self.used[c.index()] = false;
            }
        }
    }
}

/// Finds a rainbow shortest `u`-`v` path, if any, with a witness.
pub fn rainbow_shortest_path_between(
    g: &EdgeColoredGraph,
    u: VertexId,
    v: VertexId,
) -> Result<Verdict, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let from_u = bfs_unchecked(g, u);
    let to_v = bfs_unchecked(g, v);
    let mut search = GeodesicSearch::new(g);
    let found = search.run(u, v, &from_u, &to_v);
    let stats = Stats { pairs_checked: 1, states_explored: search.states };
    Ok(match found {
        Some(path) => Verdict {
            connected: true,
            failing_pair: None,
            witness: Some(PathWitness::from_vertices_unchecked(g, path)),
            algorithm: Algorithm::Enumerate,
            stats,
        },
        None => Verdict::no(Algorithm::Enumerate, (u, v), stats),
    })
}

/// Strong rainbow connectivity by walking the shortest paths of every pair.
///
/// With [`CapPolicy::AtMost`], shortest-path counts are checked for all
/// pairs before any path is inspected.
pub fn src_verify_enumerate(g: &EdgeColoredGraph, cap: CapPolicy) -> Result<Verdict, VerifyError> {
    if let CapPolicy::AtMost(cap) = cap {
        if let Some((u, v, count)) = first_pair_above(g, cap) {
            return Err(VerifyError::CapExceeded {
                u: g.name(u).to_string(),
                v: g.name(v).to_string(),
                count,
                cap,
            });
        }
    }
    Ok(enumerate_all(g, Algorithm::Enumerate))
}

fn enumerate_all(g: &EdgeColoredGraph, algorithm: Algorithm) -> Verdict {
    let dist: Vec<Vec<Option<u32>>> = g.vertices().map(|s| bfs_unchecked(g, s)).collect();
    let mut search = GeodesicSearch::new(g);
    let mut stats = Stats::default();
    for (u, v) in ordered_pairs(g) {
        stats.pairs_checked += 1;
        let found = search.run(u, v, &dist[u.index()], &dist[v.index()]);
        if found.is_none() {
            stats.states_explored = search.states;
            return Verdict::no(algorithm, (u, v), stats);
        }
    }
    stats.states_explored = search.states;
    Verdict::yes(algorithm, stats)
}

/// First pair in name order with more than `cap` shortest paths.
fn first_pair_above(g: &EdgeColoredGraph, cap: u64) -> Option<(VertexId, VertexId, u64)> {
    let order = g.vertices_by_name();
    for (i, &u) in order.iter().enumerate() {
        let dag = dag_unchecked(g, u);
        for &v in &order[i + 1..] {
            let count = dag.path_count(v);
            if count > cap {
                return Some((u, v, count));
            }
        }
    }
    None
}

/// Strong rainbow connectivity on graphs with at most `k_max` shortest paths
/// between any two vertices; refuses otherwise.
pub fn src_verify_kgeodetic(g: &EdgeColoredGraph, k_max: u64) -> Result<Verdict, VerifyError> {
    if let Some((u, v, count)) = first_pair_above(g, k_max) {
        return Err(VerifyError::GeodecityExceeded {
            u: g.name(u).to_string(),
            v: g.name(v).to_string(),
            count,
            k_max,
        });
    }
    Ok(enumerate_all(g, Algorithm::KGeodetic))
}

/// Strong rainbow connectivity on geodetic graphs: the unique shortest path
/// of every pair lies on the BFS tree of either endpoint, so one tree walk
/// per source suffices.
pub fn src_verify_geodetic(g: &EdgeColoredGraph) -> Result<Verdict, VerifyError> {
    if let Some((u, v, count)) = first_pair_above(g, 1) {
        return Err(VerifyError::GeodecityExceeded {
            u: g.name(u).to_string(),
            v: g.name(v).to_string(),
            count,
            k_max: 1,
        });
    }
    let n = g.vertex_count();
    let mut stats = Stats::default();
    let order = g.vertices_by_name();
    let mut used = vec![0u32; g.color_count()];
    for (i, &u) in order.iter().enumerate() {
        let dag = dag_unchecked(g, u);
        // rainbow[v]: the tree path u..v has distinct colors
        let mut rainbow = vec![false; n];
        let mut children: Vec<Vec<(VertexId, ColorId)>> = vec![Vec::new(); n];
        for &v in dag.topological_order().iter().skip(1) {
            let (p, e) = dag.preds(v)[0];
            children[p.index()].push((v, g.edge(e).color));
        }
        rainbow[u.index()] = true;
        // iterative DFS keeping color multiplicities of the current path
        let mut stack: Vec<(VertexId, Option<ColorId>, usize)> = vec![(u, None, 0)];
        while let Some(top) = stack.last_mut() {
            let (x, _, slot) = *top;
            if slot < children[x.index()].len() {
                top.2 += 1;
                let (w, c) = children[x.index()][slot];
                used[c.index()] += 1;
                rainbow[w.index()] = rainbow[x.index()] && used[c.index()] == 1;
                stats.states_explored += 1;
                stack.push((w, Some(c), 0));
            } else {
                if let Some(c) = top.1 {
                    used[c.index()] -= 1;
                }
                stack.pop();
            }
        }
        for &v in &order[i + 1..] {
            stats.pairs_checked += 1;
            if !rainbow[v.index()] {
                return Ok(Verdict::no(Algorithm::Geodetic, (u, v), stats));
            }
        }
    }
    Ok(Verdict::yes(Algorithm::Geodetic, stats))
}
