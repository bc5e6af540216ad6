//! Whole-graph rainbow connectivity with the subset DP and with the
//! per-pair search.

use rainbow_core::graph::EdgeColoredGraph;
use rainbow_core::verifiers::{rc_verify, RcAlgorithm};

fn main() {
    let graphs = [
        ("C4 1212", [("a", "b", "1"), ("b", "c", "2"), ("c", "d", "1"), ("d", "a", "2")]),
        ("C4 1122", [("a", "b", "1"), ("b", "c", "1"), ("c", "d", "2"), ("d", "a", "2")]),
    ];
    for (label, edges) in graphs {
        let g = EdgeColoredGraph::from_edges(edges).unwrap();
        for algo in [RcAlgorithm::Fpt, RcAlgorithm::Brute] {
            let v = rc_verify(&g, algo).unwrap();
            match v.failing_names(&g) {
                Some((u, w)) => println!("{label} {algo:?}: no, {u} and {w} have no rainbow path"),
                None => println!("{label} {algo:?}: yes ({} pairs)", v.stats.pairs_checked),
            }
        }
    }
}
