//! Graphviz export.

use std::fmt::Write;

use crate::graph::{EdgeColoredGraph, VertexId};
use crate::reductions::Reduction;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT text with one node per vertex and one edge per graph edge labeled by
/// its color. Nodes and edges are listed in name order.
pub fn export_dot(g: &EdgeColoredGraph) -> String {
    render(g, &[])
}

/// Like [`export_dot`], with the source and sink drawn as double circles.
pub fn export_reduction_dot(r: &Reduction) -> String {
    render(&r.graph, &[r.source, r.sink])
}

fn render(g: &EdgeColoredGraph, marked: &[VertexId]) -> String {
    let mut out = String::from("graph G {\n");
    for &v in g.vertices_by_name() {
        let shape = if marked.contains(&v) { " [shape=doublecircle]" } else { "" };
        writeln!(out, "  {}{shape};", quote(g.name(v))).unwrap();
    }
    let mut edges: Vec<(&str, &str, &str)> = g
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = (g.name(e.u), g.name(e.v));
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            (a, b, g.color_name(e.color))
        })
        .collect();
    edges.sort_unstable();
    for (a, b, c) in edges {
        writeln!(out, "  {} -- {} [label={}];", quote(a), quote(b), quote(c)).unwrap();
    }
    out.push_str("}\n");
    out
}
