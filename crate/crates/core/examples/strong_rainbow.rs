//! Strong rainbow connectivity: rainbow paths that are also shortest.
//! Four verifiers, one answer.

use rainbow_core::graph::EdgeColoredGraph;
use rainbow_core::recognizers::geodecity;
use rainbow_core::verifiers::{
    src_verify_enumerate, src_verify_fpt, src_verify_geodetic, src_verify_kgeodetic, CapPolicy,
};

fn main() {
    // a bowtie is geodetic; recolor one edge to break it
    let mut edges = [
        ("a", "b", "1"),
        ("b", "c", "2"),
        ("a", "c", "3"),
        ("c", "d", "4"),
        ("d", "e", "5"),
        ("c", "e", "6"),
    ];
    for round in 0..2 {
        let g = EdgeColoredGraph::from_edges(edges).unwrap();
        let k = geodecity(&g).unwrap().max;
        let verdicts = [
            ("enumerate", src_verify_enumerate(&g, CapPolicy::Unlimited).unwrap()),
            ("fpt", src_verify_fpt(&g).unwrap()),
            ("kgeodetic", src_verify_kgeodetic(&g, k).unwrap()),
            ("geodetic", src_verify_geodetic(&g).unwrap()),
        ];
        println!("round {round}, geodecity {k}");
        for (name, v) in verdicts {
            println!("  {name:<10} connected={} failing={:?}", v.connected, v.failing_names(&g));
        }
        edges[3].2 = "3";
    }

    // the cap refuses before any path is walked
    let c4 = EdgeColoredGraph::from_edges([("a", "b", "1"), ("b", "c", "2"), ("c", "d", "1"), ("d", "a", "2")]).unwrap();
    println!("{}", src_verify_enumerate(&c4, CapPolicy::AtMost(1)).unwrap_err());
}
