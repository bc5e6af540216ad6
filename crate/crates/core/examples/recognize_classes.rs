//! Graph class recognition on the reduction outputs, with each certificate
//! checked by its own validator.

use rainbow_core::recognizers::{
    is_bipartite, is_chordal, is_interval, is_outerplanar, max_clique_size_chordal, recognize, GraphClass,
    Membership,
};
use rainbow_core::reductions::{build, Construction};
use rainbow_core::sat::CnfFormula;

fn main() {
    let f = CnfFormula::from_signed(3, &[&[1, -2, 3], &[-1, 2], &[2, -3]]).unwrap();

    let base = build(&f, Construction::Base).unwrap().graph;
    if let Membership::Yes(c) = is_bipartite(&base) {
        println!("base bipartite, coloring valid: {}", c.validate(&base));
    }
    if let Membership::Yes(c) = is_outerplanar(&base) {
        println!("base outerplanar, {} outer cycles, valid: {}", c.0.len(), c.validate(&base));
    }

    let io = build(&f, Construction::IntervalOuterplanar).unwrap().graph;
    if let Membership::Yes(peo) = is_chordal(&io) {
        println!("io chordal, elimination order valid: {}", peo.validate(&io));
    }
    if let Membership::Yes(path) = is_interval(&io) {
        println!("io interval, {} cliques in a path, valid: {}", path.0.len(), path.validate(&io));
    }
    println!("io max clique: {:?}", max_clique_size_chordal(&io));

    let ib = build(&f, Construction::IntervalBlock).unwrap().graph;
    for class in ["block", "interval", "geodetic"] {
        let report = recognize(&ib, class.parse::<GraphClass>().unwrap());
        println!("ib {class}: {}", report.verdict);
    }

    // counterexamples come with certificates too
    let kreg = build(&f, Construction::KRegular(4)).unwrap().graph;
    let report = recognize(&kreg, GraphClass::Chordal);
    println!("kreg(4) chordal: {} {}", report.verdict, report.certificate);
}
