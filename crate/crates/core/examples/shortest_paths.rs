//! Distances, shortest-path DAGs, path counts and blocks on a small graph.

use rainbow_core::graph::{
    biconnected_components, count_shortest_paths, diameter, enumerate_shortest_paths, shortest_path_dag,
    EdgeColoredGraph,
};

fn main() {
    // a 4-cycle with a pendant triangle hanging off d
    let g = EdgeColoredGraph::from_edges([
        ("a", "b", "1"),
        ("b", "c", "2"),
        ("c", "d", "3"),
        ("d", "a", "4"),
        ("d", "e", "5"),
        ("e", "f", "6"),
        ("f", "d", "7"),
    ])
    .unwrap();
    let id = |s| g.vertex(s).unwrap();
    println!("diameter {}", diameter(&g).unwrap());

    let dag = shortest_path_dag(&g, id("b")).unwrap();
    for &v in dag.topological_order() {
        println!("b -> {}: distance {:?}, {} shortest paths", g.name(v), dag.dist(v), dag.path_count(v));
    }

    println!("b..e count {}", count_shortest_paths(&g, id("b"), id("e")).unwrap());
    for p in enumerate_shortest_paths(&g, id("b"), id("e"), None).unwrap() {
        println!("  {}", p.names(&g).join(" "));
    }

    let blocks = biconnected_components(&g);
    for b in &blocks.blocks {
        let names: Vec<&str> = b.vertices.iter().map(|&v| g.name(v)).collect();
        println!("block {}", names.join(" "));
    }
    let cuts: Vec<&str> = blocks.cut_vertices.iter().map(|&v| g.name(v)).collect();
    println!("cut vertices {}", cuts.join(" "));
}
