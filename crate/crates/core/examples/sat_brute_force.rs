//! Parse a DIMACS formula, check the occurrence limit and solve it by
//! exhaustive search.

use rainbow_core::sat::{brute_force_sat, parse_dimacs, validate_occurrence, SatResult};

const FORMULA: &str = "c three clauses over three variables
p cnf 3 3
1 -2 3 0
-1 2 0
-3 0
";

fn main() {
    let f = parse_dimacs(FORMULA).expect("valid DIMACS");
    println!("{} variables, {} clauses", f.variable_count(), f.clause_count());
    assert!(validate_occurrence(&f).is_ok());

    match brute_force_sat(&f).unwrap() {
        SatResult::Satisfiable(a) => {
            for (i, v) in a.values().iter().enumerate() {
                println!("x{} = {v}", i + 1);
            }
            assert!(f.is_satisfied_by(&a));
        }
        SatResult::Unsatisfiable => println!("unsatisfiable"),
    }

    // a fourth occurrence of x1 is rejected at parse time
    let err = parse_dimacs("p cnf 1 4\n1 0\n1 0\n-1 0\n1 0\n").unwrap_err();
    println!("rejected: {err}");
}
