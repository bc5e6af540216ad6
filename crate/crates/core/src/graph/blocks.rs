use super::{EdgeColoredGraph, EdgeId, VertexId};

/// A maximal biconnected subgraph. A bridge forms a block with one edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Sorted by vertex name.
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    /// Vertices lying in two or more blocks, sorted by name.
    pub cut_vertices: Vec<VertexId>,
}

/// Block decomposition of `g`. Isolated vertices belong to no block.
pub fn biconnected_components(g: &EdgeColoredGraph) -> BlockDecomposition {
    biconnected_components_filtered(g, |_| true)
}

const UNSEEN: u32 = u32::MAX;

/// Block decomposition of the spanning subgraph whose edges satisfy `keep`.
pub(crate) fn biconnected_components_filtered<F>(g: &EdgeColoredGraph, keep: F) -> BlockDecomposition
where
    F: Fn(EdgeId) -> bool,
{
    let n = g.vertex_count();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut clock = 0u32;
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut raw_blocks: Vec<Vec<EdgeId>> = Vec::new();
    // (vertex, tree edge into it, next neighbor slot)
    let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = Vec::new();

    for root in g.vertices() {
        if disc[root.index()] != UNSEEN {
            continue;
        }
        disc[root.index()] = clock;
        low[root.index()] = clock;
        clock += 1;
        stack.push((root, None, 0));
        while let Some(top) = stack.last_mut() {
            let (v, parent_edge) = (top.0, top.1);
            let nbrs = g.neighbors(v);
            if top.2 < nbrs.len() {
                let (w, e) = nbrs[top.2];
                top.2 += 1;
                if !keep(e) || Some(e) == parent_edge {
                    continue;
                }
                if disc[w.index()] == UNSEEN {
                    edge_stack.push(e);
                    disc[w.index()] = clock;
                    low[w.index()] = clock;
                    clock += 1;
                    stack.push((w, Some(e), 0));
                } else if disc[w.index()] < disc[v.index()] {
                    edge_stack.push(e);
                    low[v.index()] = low[v.index()].min(disc[w.index()]);
                }
                continue;
            }
            stack.pop();
            let Some(&(u, _, _)) = stack.last() else { continue };
            low[u.index()] = low[u.index()].min(low[v.index()]);
            if low[v.index()] >= disc[u.index()] {
                let tree_edge = parent_edge.expect("non-root has a tree edge");
                let mut block = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    block.push(e);
                    if e == tree_edge {
                        break;
                    }
                }
                raw_blocks.push(block);
            }
        }
    }

    let mut membership = vec![0u32; n];
    let blocks: Vec<Block> = raw_blocks
        .into_iter()
        .map(|mut edges| {
            edges.sort();
            let mut vertices: Vec<VertexId> =
                edges.iter().flat_map(|&e| [g.edge(e).u, g.edge(e).v]).collect();
            vertices.sort_by_key(|&v| g.name_rank(v));
            vertices.dedup();
            for v in &vertices {
                membership[v.index()] += 1;
            }
            Block { vertices, edges }
        })
        .collect();
    let mut cut_vertices: Vec<VertexId> = g.vertices().filter(|v| membership[v.index()] >= 2).collect();
    cut_vertices.sort_by_key(|&v| g.name_rank(v));
    BlockDecomposition { blocks, cut_vertices }
}
