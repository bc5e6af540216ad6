//! The color-subset DP behind the FPT verifier: for each target, the
//! minimal color sets of rainbow paths from one source.

use rainbow_core::graph::EdgeColoredGraph;
use rainbow_core::verifiers::{rainbow_reach_fpt, ColorSet};

fn main() {
    let g = EdgeColoredGraph::from_edges([
        ("s", "x", "red"),
        ("x", "t", "red"),
        ("s", "y", "blue"),
        ("y", "t", "green"),
        ("s", "t", "red"),
    ])
    .unwrap();
    let s = g.vertex("s").unwrap();
    let reach = rainbow_reach_fpt(&g, s).unwrap();
    for &v in g.vertices_by_name() {
        let sets: Vec<String> = reach
            .family(v)
            .iter()
            .map(|set| {
                let names: Vec<&str> = set.iter().map(|c| g.color_name(c)).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect();
        println!("{:<2} {}", g.name(v), sets.join(" "));
    }
    let t = g.vertex("t").unwrap();
    let no_red: ColorSet = [g.color("blue").unwrap(), g.color("green").unwrap()].into_iter().collect();
    println!("t reachable without red: {}", reach.reachable_within(t, no_red));
}
