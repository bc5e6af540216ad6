//! Single-pair rainbow path search on a reduction: the source reaches the
//! sink along a rainbow path exactly when the formula is satisfiable.

use rainbow_core::reductions::build_base;
use rainbow_core::sat::CnfFormula;
use rainbow_core::verifiers::rainbow_path_between;

fn main() {
    for (label, clauses) in [("sat", vec![&[1, 2][..], &[-1, 3][..]]), ("unsat", vec![&[1][..], &[-1][..]])] {
        let f = CnfFormula::from_signed(3, &clauses).unwrap();
        let r = build_base(&f).unwrap();
        let v = rainbow_path_between(&r.graph, r.source, r.sink).unwrap();
        println!("{label}: connected={} states={}", v.connected, v.stats.states_explored);
        if let Some(w) = v.witness {
            w.validate_rainbow(&r.graph).unwrap();
            println!("  path   {}", w.names(&r.graph).join(" "));
            println!("  colors {}", w.color_names(&r.graph).join(" "));
        }
    }
}
