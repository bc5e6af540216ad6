use super::Membership;
use crate::graph::biconnected_components;
use crate::graph::{EdgeColoredGraph, VertexId};

/// One Hamiltonian cycle per non-bridge block; in an outerplanar embedding
/// each is the boundary of its block's outer face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterCycles(pub Vec<Vec<VertexId>>);

impl OuterCycles {
    /// Checks that every listed cycle is a cycle of `g` whose remaining
    /// edges between its vertices are pairwise non-crossing chords, and that
    /// every edge of `g` is either a cycle edge, a chord or a bridge. The
    /// cycles must meet in a tree-like way, each pair sharing at most one
    /// vertex with no ring of cycles.
    pub fn validate(&self, g: &EdgeColoredGraph) -> bool {
        let n = g.vertex_count();
        let mut covered = vec![false; g.edge_count()];
        // union-find over vertices followed by one node per cycle
        let mut parent: Vec<usize> = (0..n + self.0.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (c, cycle) in self.0.iter().enumerate() {
            for v in cycle {
                if v.index() >= n {
                    return false;
                }
                let (a, b) = (find(&mut parent, n + c), find(&mut parent, v.index()));
                if a == b {
                    return false;
                }
                parent[a] = b;
            }
        }
        for cycle in &self.0 {
            if cycle.len() < 3 {
                return false;
            }
            let mut pos = vec![usize::MAX; n];
            for (i, v) in cycle.iter().enumerate() {
                if v.index() >= n || pos[v.index()] != usize::MAX {
                    return false;
                }
                pos[v.index()] = i;
            }
            let k = cycle.len();
            for i in 0..k {
                match g.edge_between(cycle[i], cycle[(i + 1) % k]) {
                    Some(e) => covered[e.index()] = true,
                    None => return false,
                }
            }
            let mut chords = Vec::new();
            for (idx, e) in g.edges().iter().enumerate() {
                let (a, b) = (pos[e.u.index()], pos[e.v.index()]);
                if a != usize::MAX && b != usize::MAX {
                    covered[idx] = true;
                    if (a + 1) % k != b && (b + 1) % k != a {
                        chords.push((a.min(b), a.max(b)));
                    }
                }
            }
            if crossing_pair(&chords).is_some() {
                return false;
            }
        }
        // uncovered edges must be bridges: removing one disconnects its ends
        g.edges().iter().enumerate().filter(|(i, _)| !covered[*i]).all(|(i, e)| is_bridge(g, i, e.u, e.v))
    }
}

fn is_bridge(g: &EdgeColoredGraph, skip: usize, u: VertexId, v: VertexId) -> bool {
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = vec![u];
    seen[u.index()] = true;
    while let Some(x) = stack.pop() {
        for &(w, e) in g.neighbors(x) {
            if e.index() != skip && !seen[w.index()] {
                seen[w.index()] = true;
                stack.push(w);
            }
        }
    }
    !seen[v.index()]
}

/// Why a graph is not outerplanar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotOuterplanar {
    /// A block with more than `2n - 3` edges.
    TooManyEdges { block: Vec<VertexId>, edges: usize },
    /// A biconnected block without a Hamiltonian cycle.
    NoHamiltonianCycle { block: Vec<VertexId> },
    /// Two crossing chords of a block's Hamiltonian cycle; the cycle and the
    /// chords contract to a `K4`.
    CrossingChords { cycle: Vec<VertexId>, first: (VertexId, VertexId), second: (VertexId, VertexId) },
}

/// Node budget for each Hamiltonian cycle search.
pub const HAMILTONIAN_BUDGET: u64 = 5_000_000;

pub fn is_outerplanar(g: &EdgeColoredGraph) -> Membership<OuterCycles, NotOuterplanar> {
    let decomposition = biconnected_components(g);
    let mut cycles = Vec::new();
    for block in decomposition.blocks.iter().filter(|b| !b.is_bridge()) {
        let mut vs = block.vertices.clone();
        vs.sort_by_key(|&v| g.name_rank(v));
        if block.edges.len() + 3 > 2 * vs.len() {
            return Membership::No(NotOuterplanar::TooManyEdges { block: vs, edges: block.edges.len() });
        }
        let cycle = match hamiltonian_cycle(g, &vs, &block.edges) {
            Ok(Some(c)) => c,
            Ok(None) => return Membership::No(NotOuterplanar::NoHamiltonianCycle { block: vs }),
            Err(()) => {
                return Membership::Unknown(format!(
                    "hamiltonian cycle search exceeded {HAMILTONIAN_BUDGET} steps on a block of {} vertices",
                    vs.len()
                ))
            }
        };
        // a biconnected outerplanar graph has exactly one Hamiltonian cycle
        let k = cycle.len();
        let mut pos = vec![usize::MAX; g.vertex_count()];
        for (i, v) in cycle.iter().enumerate() {
            pos[v.index()] = i;
        }
        let chords: Vec<(usize, usize)> = block
            .edges
            .iter()
            .map(|&e| {
                let e = g.edge(e);
                let (a, b) = (pos[e.u.index()], pos[e.v.index()]);
                (a.min(b), a.max(b))
            })
            .filter(|&(a, b)| b - a != 1 && !(a == 0 && b == k - 1))
            .collect();
        if let Some((x, y)) = crossing_pair(&chords) {
            let (first, second) = ((cycle[x.0], cycle[x.1]), (cycle[y.0], cycle[y.1]));
            return Membership::No(NotOuterplanar::CrossingChords { cycle, first, second });
        }
        cycles.push(cycle);
    }
    Membership::Yes(OuterCycles(cycles))
}

/// Two chords `(a, b)`, `(c, d)` with `a < c < b < d`, by cycle position.
fn crossing_pair(chords: &[(usize, usize)]) -> Option<((usize, usize), (usize, usize))> {
    let mut sorted = chords.to_vec();
    sorted.sort();
    for (i, &(a, b)) in sorted.iter().enumerate() {
        for &(c, d) in &sorted[i + 1..] {
            if c >= b {
                break;
            }
            if a < c && b < d {
                return Some(((a, b), (c, d)));
            }
        }
    }
    None
}

/// Backtracking search for a Hamiltonian cycle of one block. `Err` when the
/// budget runs out.
fn hamiltonian_cycle(
    g: &EdgeColoredGraph,
    vertices: &[VertexId],
    edges: &[crate::graph::EdgeId],
) -> Result<Option<Vec<VertexId>>, ()> {
    let n = g.vertex_count();
    let mut local = vec![usize::MAX; n];
    for (i, v) in vertices.iter().enumerate() {
        local[v.index()] = i;
    }
    let k = vertices.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); k];
    for &e in edges {
        let e = g.edge(e);
        let (a, b) = (local[e.u.index()], local[e.v.index()]);
        adj[a].push(b);
        adj[b].push(a);
    }
    let start = (0..k).min_by_key(|&i| (adj[i].len(), i)).unwrap();
    let mut on_path = vec![false; k];
    let mut path = vec![start];
    on_path[start] = true;
    let mut steps = 0u64;
    let found = extend(&adj, start, &mut path, &mut on_path, &mut steps)?;
    Ok(found.then(|| path.into_iter().map(|i| vertices[i]).collect()))
}

fn extend(
    adj: &[Vec<usize>],
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    steps: &mut u64,
) -> Result<bool, ()> {
    let x = *path.last().unwrap();
    if path.len() == adj.len() {
        return Ok(adj[x].contains(&start));
    }
    // an unvisited vertex with fewer than two usable neighbors is a dead end
    for w in 0..adj.len() {
        if !on_path[w] {
            let free = adj[w].iter().filter(|&&y| !on_path[y] || y == x || y == start).count();
            if free < 2 {
                return Ok(false);
            }
        }
    }
    for &w in &adj[x] {
        if on_path[w] {
            continue;
        }
        *steps += 1;
        if *steps > HAMILTONIAN_BUDGET {
            return Err(());
        }
        on_path[w] = true;
        path.push(w);
        if extend(adj, start, path, on_path, steps)? {
            return Ok(true);
        }
        path.pop();
        on_path[w] = false;
    }
    Ok(false)
}
