//! Build every gadget construction for one formula and print its size.

use rainbow_core::reductions::{build, Construction};
use rainbow_core::sat::CnfFormula;

fn main() {
    let f = CnfFormula::from_signed(4, &[&[1, -2, 3], &[-1, 2, 4], &[2, -3, -4]]).unwrap();
    let constructions = [
        Construction::Base,
        Construction::IntervalOuterplanar,
        Construction::IntervalBlock,
        Construction::Cubic,
        Construction::KRegular(4),
        Construction::KRegular(5),
    ];
    println!("{:<8} {:>6} {:>6} {:>7}  source -> sink", "name", "|V|", "|E|", "colors");
    for c in constructions {
        let r = build(&f, c).unwrap();
        let g = &r.graph;
        println!(
            "{:<8} {:>6} {:>6} {:>7}  {} -> {}",
            c.to_string(),
            g.vertex_count(),
            g.edge_count(),
            g.color_count(),
            r.source_name(),
            r.sink_name()
        );
    }

    let r = build(&f, Construction::Base).unwrap();
    for (gadget, vertices) in r.gadget_map.iter().take(3) {
        let names: Vec<&str> = vertices.iter().map(|&v| r.graph.name(v)).collect();
        println!("{gadget}: {}", names.join(" "));
    }
}
