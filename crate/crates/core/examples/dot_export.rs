//! Graphviz output with colors as edge labels. Pipe into `dot -Tsvg`.

use rainbow_core::dot::export_reduction_dot;
use rainbow_core::reductions::build_base;
use rainbow_core::sat::CnfFormula;

fn main() {
    let f = CnfFormula::from_signed(2, &[&[1, -2]]).unwrap();
    let r = build_base(&f).unwrap();
    print!("{}", export_reduction_dot(&r));
}
