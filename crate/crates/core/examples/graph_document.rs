//! Save a reduction as an interchange document and load it back.

use rainbow_core::graph::{load_graph, save_graph};
use rainbow_core::reductions::build_interval_outerplanar;
use rainbow_core::sat::CnfFormula;

fn main() {
    let f = CnfFormula::from_signed(2, &[&[1, 2], &[-1, -2]]).unwrap();
    let r = build_interval_outerplanar(&f).unwrap();
    let text = save_graph(&r.graph, Some(r.meta()));
    println!("{} bytes", text.len());

    let (g, meta) = load_graph(&text).unwrap();
    assert_eq!(g.vertex_count(), r.graph.vertex_count());
    assert_eq!(g.edge_count(), r.graph.edge_count());
    let meta = meta.unwrap();
    println!("construction {}, source {}, sink {}", meta["construction"], meta["source"], meta["sink"]);
    println!("first edges:");
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    for e in doc["edges"].as_array().unwrap().iter().take(4) {
        println!("  {e}");
    }
}
