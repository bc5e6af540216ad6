//! Single-pair rainbow path search.
//!
//! The search runs over states (vertex, used colors) and accepts rainbow
//! walks; a rainbow walk shortcuts to a rainbow path on a subset of its
//! colors, so existence is unchanged. Three reductions keep the state space
//! small on bridge-rich graphs:
//!
//! 1. Color cuts. If `u` and `v` share a component `K` of the graph minus all
//!    edges of color `c`, every edge leaving `K` has color `c`, and a path
//!    that leaves `K` must also come back. So the search may stay inside `K`.
//! 2. Blocks. Every simple `u`-`v` path crosses the same chain of blocks in
//!    the block-cut tree, entering and leaving each at fixed vertices. Bridge
//!    colors are forced and removed from every other block.
//! 3. Projection. Between blocks only the used colors that still occur later
//!    on the chain are remembered, and dominated color sets are dropped.

use std::collections::{HashMap, VecDeque};

use super::{Algorithm, ColorBits, Stats, Verdict};
use crate::graph::{
    biconnected_components_filtered, ColorId, EdgeColoredGraph, EdgeId, GraphError, PathWitness,
    VertexId,
};

/// Decides whether `u` and `v` are joined by a rainbow path. A yes verdict
/// carries a witness; a no verdict names the pair.
pub fn rainbow_path_between(
    g: &EdgeColoredGraph,
    u: VertexId,
    v: VertexId,
) -> Result<Verdict, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let (found, states) = search(g, u, v);
    let stats = Stats { pairs_checked: 1, states_explored: states };
    Ok(match found {
        Some(w) => Verdict {
            connected: true,
            failing_pair: None,
            witness: Some(w),
            algorithm: Algorithm::Brute,
            stats,
        },
        None => Verdict::no(Algorithm::Brute, (u, v), stats),
    })
}

pub(super) fn search(g: &EdgeColoredGraph, u: VertexId, v: VertexId) -> (Option<PathWitness>, u64) {
    if u == v {
        return (Some(PathWitness { vertices: vec![u], colors: vec![] }), 0);
    }
    let allowed = color_cut_restriction(g, u, v);
    let Some(chain) = block_chain(g, &allowed, u, v) else {
        return (None, 0);
    };

    // forced bridge colors
    let k = g.color_count();
    let mut forced = ColorBits::empty(k);
    for seg in &chain {
        if let Segment::Bridge(e) = seg {
            let c = g.edge(*e).color;
            if forced.contains(c) {
                return (None, 0);
            }
            forced.insert(c);
        }
    }

    // colors usable in each segment and in everything after it
    let blocks: Vec<&BlockSeg> = chain
        .iter()
        .filter_map(|s| match s {
            Segment::Block(b) => Some(b),
            Segment::Bridge(_) => None,
        })
        .collect();
    let mut later = vec![ColorBits::empty(k); blocks.len() + 1];
    for i in (0..blocks.len()).rev() {
        let mut acc = later[i + 1].clone();
        for &e in &blocks[i].edges {
            let c = g.edge(e).color;
            if !forced.contains(c) {
                acc.insert(c);
            }
        }
        later[i] = acc;
    }

    let mut arena = Arena::default();
    let mut states = 0u64;
    // frontier: (arena node at the current entry vertex, remembered colors)
    let mut frontier: Vec<(usize, ColorBits)> = vec![(arena.push(u, None), ColorBits::empty(k))];
    let mut block_idx = 0;
    for seg in &chain {
        match seg {
            Segment::Bridge(e) => {
                let edge = g.edge(*e);
                frontier = frontier
                    .into_iter()
                    .map(|(node, used)| {
                        let at = arena.nodes[node].0;
                        (arena.push(edge.other(at), Some(node)), used)
                    })
                    .collect();
            }
            Segment::Block(b) => {
                let keep = &later[block_idx];
                let project = &later[block_idx + 1];
                frontier = cross_block(g, b, &forced, keep, project, frontier, &mut arena, &mut states);
                block_idx += 1;
                if frontier.is_empty() {
                    return (None, states);
                }
            }
        }
    }
    let (end, _) = frontier[0];
    let walk = arena.walk(end);
    debug_assert_eq!(*walk.last().unwrap(), v);
    (Some(PathWitness::from_vertices_unchecked(g, shortcut(walk))), states)
}

#[derive(Default)]
struct Arena {
    nodes: Vec<(VertexId, Option<usize>)>,
}

impl Arena {
    fn push(&mut self, v: VertexId, parent: Option<usize>) -> usize {
        self.nodes.push((v, parent));
        self.nodes.len() - 1
    }

    fn walk(&self, mut node: usize) -> Vec<VertexId> {
        let mut out = Vec::new();
        loop {
            let (v, parent) = self.nodes[node];
            out.push(v);
            match parent {
                Some(p) => node = p,
                None => break,
            }
        }
        out.reverse();
        out
    }
}

/// Removes closed sub-walks, leaving a simple path with the same ends.
fn shortcut(walk: Vec<VertexId>) -> Vec<VertexId> {
    let mut pos: HashMap<VertexId, usize> = HashMap::new();
    let mut out: Vec<VertexId> = Vec::with_capacity(walk.len());
    for v in walk {
        if let Some(&i) = pos.get(&v) {
            for w in out.drain(i + 1..) {
                pos.remove(&w);
            }
        } else {
            pos.insert(v, out.len());
            out.push(v);
        }
    }
    out
}

struct BlockSeg {
    entry: VertexId,
    exit: VertexId,
    edges: Vec<EdgeId>,
}

enum Segment {
    Bridge(EdgeId),
    Block(BlockSeg),
}

/// Multi-source label search across one block. Returns the exit labels,
/// projected and minimized.
#[allow(clippy::too_many_arguments)]
fn cross_block(
    g: &EdgeColoredGraph,
    b: &BlockSeg,
    forced: &ColorBits,
    keep: &ColorBits,
    project: &ColorBits,
    frontier: Vec<(usize, ColorBits)>,
    arena: &mut Arena,
    states: &mut u64,
) -> Vec<(usize, ColorBits)> {
    // local adjacency restricted to the block minus forced colors
    let mut adj: HashMap<VertexId, Vec<(VertexId, ColorId)>> = HashMap::new();
    for &e in &b.edges {
        let edge = g.edge(e);
        if forced.contains(edge.color) {
            continue;
        }
        adj.entry(edge.u).or_default().push((edge.v, edge.color));
        adj.entry(edge.v).or_default().push((edge.u, edge.color));
    }
    for list in adj.values_mut() {
        list.sort_by_key(|(w, _)| g.name_rank(*w));
    }

    let mut seen: HashMap<VertexId, Vec<ColorBits>> = HashMap::new();
    let mut queue: VecDeque<(usize, ColorBits)> = VecDeque::new();
    for (node, used) in frontier {
        let used = used.and(keep);
        if insert_min_bits(seen.entry(b.entry).or_default(), &used) {
            queue.push_back((node, used));
        }
    }
    let mut exits: Vec<(usize, ColorBits)> = Vec::new();
    while let Some((node, used)) = queue.pop_front() {
        let at = arena.nodes[node].0;
        if !seen[&at].contains(&used) {
            continue;
        }
        *states += 1;
        if at == b.exit {
            let label = used.and(project);
            if !exits.iter().any(|(_, l)| l.is_subset(&label)) {
                exits.retain(|(_, l)| !label.is_subset(l));
                exits.push((node, label));
            }
            // the exit is a cut vertex or the target; continuing inside the
            // block would only revisit it
            continue;
        }
        let Some(nbrs) = adj.get(&at) else { continue };
        for &(w, c) in nbrs {
            if used.contains(c) {
                continue;
            }
            let next = used.with(c);
            if insert_min_bits(seen.entry(w).or_default(), &next) {
                let child = arena.push(w, Some(node));
                queue.push_back((child, next));
            }
        }
    }
    exits
}

fn insert_min_bits(family: &mut Vec<ColorBits>, s: &ColorBits) -> bool {
    if family.iter().any(|m| m.is_subset(s)) {
        return false;
    }
    family.retain(|m| !s.is_subset(m));
    family.push(s.clone());
    true
}

/// Edge mask after repeated color-cut restriction.
fn color_cut_restriction(g: &EdgeColoredGraph, u: VertexId, v: VertexId) -> Vec<bool> {
    let n = g.vertex_count();
    let mut allowed = vec![true; g.edge_count()];
    let mut comp = vec![u32::MAX; n];
    let mut changed = true;
    while changed {
        changed = false;
        for c in 0..g.color_count() as u32 {
            let c = ColorId(c);
            // component of u in (allowed minus color c)
            comp.iter_mut().for_each(|x| *x = u32::MAX);
            comp[u.index()] = 0;
            let mut queue = VecDeque::from([u]);
            while let Some(x) = queue.pop_front() {
                for &(w, e) in g.neighbors(x) {
                    if allowed[e.index()] && g.edge(e).color != c && comp[w.index()] == u32::MAX {
                        comp[w.index()] = 0;
                        queue.push_back(w);
                    }
                }
            }
            if comp[v.index()] == u32::MAX {
                continue;
            }
            for (i, e) in g.edges().iter().enumerate() {
                if allowed[i] && (comp[e.u.index()] != 0 || comp[e.v.index()] != 0) {
                    allowed[i] = false;
                    changed = true;
                }
            }
        }
    }
    allowed
}

/// The chain of bridges and blocks every simple `u`-`v` path crosses inside
/// the allowed subgraph. `None` when `v` is unreachable.
fn block_chain(g: &EdgeColoredGraph, allowed: &[bool], u: VertexId, v: VertexId) -> Option<Vec<Segment>> {
    let bd = biconnected_components_filtered(g, |e| allowed[e.index()]);
    let n = g.vertex_count();
    // block-vertex incidence tree: nodes 0..n are vertices, n.. are blocks
    let nb = bd.blocks.len();
    let mut tree: Vec<Vec<usize>> = vec![Vec::new(); n + nb];
    for (i, block) in bd.blocks.iter().enumerate() {
        for &x in &block.vertices {
            tree[x.index()].push(n + i);
            tree[n + i].push(x.index());
        }
    }
    let mut parent = vec![usize::MAX; n + nb];
    parent[u.index()] = u.index();
    let mut queue = VecDeque::from([u.index()]);
    while let Some(x) = queue.pop_front() {
        if x == v.index() {
            break;
        }
        for &y in &tree[x] {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    if parent[v.index()] == usize::MAX {
        return None;
    }
    let mut nodes = vec![v.index()];
    while *nodes.last().unwrap() != u.index() {
        nodes.push(parent[*nodes.last().unwrap()]);
    }
    nodes.reverse();
    // nodes alternate vertex, block, vertex, ...
    let chain = nodes
        .windows(3)
        .step_by(2)
        .map(|w| {
            let block = &bd.blocks[w[1] - n];
            let (entry, exit) = (VertexId(w[0] as u32), VertexId(w[2] as u32));
            if block.is_bridge() {
                Segment::Bridge(block.edges[0])
            } else {
                Segment::Block(BlockSeg { entry, exit, edges: block.edges.clone() })
            }
        })
        .collect();
    Some(chain)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(g: &EdgeColoredGraph, a: &str, b: &str) -> (VertexId, VertexId) {
        (g.vertex(a).unwrap(), g.vertex(b).unwrap())
    }

    #[test]
    fn adjacent_pair_is_the_edge() {
        let g = EdgeColoredGraph::from_edges([("a", "b", "1"), ("b", "c", "1")]).unwrap();
        let (a, b) = ids(&g, "a", "b");
        let v = rainbow_path_between(&g, a, b).unwrap();
        assert_eq!(v.witness.unwrap().names(&g), ["a", "b"]);
    }

    #[test]
    fn c4_1122_opposite_corners() {
        let g = EdgeColoredGraph::from_edges([("a", "b", "1"), ("b", "c", "1"), ("c", "d", "2"), ("d", "a", "2")])
            .unwrap();
        let (a, c) = ids(&g, "a", "c");
        let v = rainbow_path_between(&g, a, c).unwrap();
        assert!(!v.connected);
        assert_eq!(v.failing_names(&g), Some(("a", "c")));
    }

    #[test]
    fn repeated_bridge_color_blocks() {
        let g = EdgeColoredGraph::from_edges([("a", "b", "1"), ("b", "c", "2"), ("c", "d", "1")]).unwrap();
        let (a, d) = ids(&g, "a", "d");
        assert!(!rainbow_path_between(&g, a, d).unwrap().connected);
    }

    #[test]
    fn walk_is_shortcut_to_a_path() {
        assert_eq!(
            shortcut([0, 1, 2, 1, 3].map(VertexId).to_vec()),
            [0, 1, 3].map(VertexId).to_vec()
        );
        assert_eq!(shortcut([0, 1, 0, 2].map(VertexId).to_vec()), [0, 2].map(VertexId).to_vec());
    }

    #[test]
    fn detour_through_a_block() {
        // a-b bridge colored x; triangle b-c-d where b-d shares x
        let g = EdgeColoredGraph::from_edges([
            ("a", "b", "x"),
            ("b", "d", "x"),
            ("b", "c", "y"),
            ("c", "d", "z"),
        ])
        .unwrap();
        let (a, d) = ids(&g, "a", "d");
        let w = rainbow_path_between(&g, a, d).unwrap().witness.unwrap();
        assert_eq!(w.names(&g), ["a", "b", "c", "d"]);
        w.validate_rainbow(&g).unwrap();
    }

    #[test]
    fn same_vertex() {
        let g = EdgeColoredGraph::from_edges([("a", "b", "1")]).unwrap();
        let a = g.vertex("a").unwrap();
        let v = rainbow_path_between(&g, a, a).unwrap();
        assert!(v.connected && v.witness.unwrap().is_empty());
    }
}
