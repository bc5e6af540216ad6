mod common;

use common::*;
use rainbow_core::sat::{
    brute_force_sat, literal_positions, pad_to_min_clauses, parse_dimacs, random_formula, validate_occurrence,
    CnfFormula, Rank, SatError, SatResult, Site,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn three_clauses() -> CnfFormula {
    CnfFormula::from_signed(3, &[&[1, 2, 3], &[-1, 2, 3], &[1, -2, -3]]).unwrap()
}

#[test]
fn dimacs_parsing() {
    let f = parse_dimacs("p cnf 1 1\n1 0\n").unwrap();
    assert_eq!((f.variable_count(), f.clause_count(), f.clause(0).len()), (1, 1, 1));

    let f = parse_dimacs("c comment\np cnf 3 2\n1 -2\n 3 0 -1 0\n").unwrap();
    assert_eq!(signed(&f), [vec![1, -2, 3], vec![-1]]);

    assert!(matches!(parse_dimacs("p cnf 4 1\n1 2 3 4 0\n"), Err(SatError::ClauseTooLong { clause: 1, size: 4 })));
    let four = "p cnf 1 4\n1 0\n1 0\n-1 0\n1 0\n";
    match parse_dimacs(four) {
        Err(SatError::TooManyOccurrences { variable: 1, fourth, .. }) => assert_eq!(fourth, Site { clause: 4, slot: 1 }),
        other => panic!("{other:?}"),
    }
    assert!(matches!(parse_dimacs("p cnf 2 1\n1 3 0\n"), Err(SatError::Syntax { line: 2, .. })));
    assert!(matches!(CnfFormula::from_signed(2, &[&[1, 3]]), Err(SatError::VariableOutOfRange { variable: 3, .. })));
    assert!(matches!(parse_dimacs("p cnf 2 2\n1 0\n"), Err(SatError::ClauseCountMismatch { declared: 2, found: 1 })));
    assert!(matches!(parse_dimacs("p cnf 2 1\n1 x 0\n"), Err(SatError::Syntax { .. })));
}

#[test]
fn dimacs_round_trip() {
    let mut rng = StdRng::seed_from_u64(41);
    for _ in 0..50 {
        let (n, m) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let f = random_formula(&mut rng, n, m);
        assert_eq!(parse_dimacs(&f.to_dimacs()).unwrap(), f);
    }
}

#[test]
fn occurrence_bound() {
    assert!(validate_occurrence(&three_clauses()).is_ok());
    let over = CnfFormula::from_signed(2, &[&[1], &[1, 2], &[1], &[-1]]).unwrap();
    let violations = validate_occurrence(&over).unwrap_err();
    assert_eq!(violations.len(), 1);
    assert_eq!(violations[0].variable, 1);
    assert_eq!(violations[0].sites.len(), 4);
    assert!(validate_occurrence(&CnfFormula::from_signed(0, &[]).unwrap()).is_ok());
}

#[test]
fn brute_force() {
    let unit = CnfFormula::from_signed(1, &[&[1]]).unwrap();
    match brute_force_sat(&unit).unwrap() {
        SatResult::Satisfiable(a) => assert!(a.value(1)),
        SatResult::Unsatisfiable => panic!(),
    }
    let contra = CnfFormula::from_signed(1, &[&[1], &[-1]]).unwrap();
    assert_eq!(brute_force_sat(&contra).unwrap(), SatResult::Unsatisfiable);

    let f = three_clauses();
    let SatResult::Satisfiable(a) = brute_force_sat(&f).unwrap() else { panic!() };
    for clause in signed(&f) {
        assert!(clause.iter().any(|&l| a.value(l.unsigned_abs()) == (l > 0)));
    }
}

#[test]
fn brute_force_matches_oracle() {
    let mut rng = StdRng::seed_from_u64(42);
    for _ in 0..300 {
        let (n, m) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
        let f = random_formula(&mut rng, n, m);
        assert!(validate_occurrence(&f).is_ok());
        let result = brute_force_sat(&f).unwrap();
        assert_eq!(result.is_sat(), sat_oracle(n, &signed(&f)));
        if let SatResult::Satisfiable(a) = result {
            assert!(f.is_satisfied_by(&a));
        }
    }
}

#[test]
fn ranks() {
    let f = CnfFormula::from_signed(2, &[&[1, 2], &[2], &[-1]]).unwrap();
    let idx = literal_positions(&f).unwrap();
    assert_eq!((idx.rank(0, 0), idx.rank(2, 0)), (Rank::First, Rank::Second));
    let tie = CnfFormula::from_signed(1, &[&[1, 1, -1]]).unwrap();
    assert_eq!(literal_positions(&tie).unwrap().clause_ranks(0), [Rank::First, Rank::Second, Rank::Third]);

    let mut rng = StdRng::seed_from_u64(43);
    for _ in 0..200 {
        let (n, m) = (rng.gen_range(1..=6), rng.gen_range(1..=8));
        let f = random_formula(&mut rng, n, m);
        let idx = literal_positions(&f).unwrap();
        // independent count: occurrences so far, scanning clause then slot
        let mut seen = vec![0u32; n as usize + 1];
        for (j, clause) in signed(&f).iter().enumerate() {
            for (k, l) in clause.iter().enumerate() {
                seen[l.unsigned_abs() as usize] += 1;
                assert_eq!(idx.rank(j, k).number(), seen[l.unsigned_abs() as usize]);
                assert!(idx.rank(j, k) <= Rank::Third);
            }
        }
    }
}

#[test]
fn padding() {
    let one = CnfFormula::from_signed(2, &[&[1, -2]]).unwrap();
    let padded = pad_to_min_clauses(&one, 3);
    assert_eq!(signed(&padded), [vec![1, -2], vec![3], vec![4]]);
    assert_eq!(pad_to_min_clauses(&three_clauses(), 3), three_clauses());

    let mut rng = StdRng::seed_from_u64(44);
    for _ in 0..100 {
        let (n, m) = (rng.gen_range(1..=6), rng.gen_range(1..=4));
        let f = random_formula(&mut rng, n, m);
        let p = pad_to_min_clauses(&f, 3);
        assert!(p.clause_count() >= 3);
        assert!(validate_occurrence(&p).is_ok());
        assert_eq!(brute_force_sat(&p).unwrap().is_sat(), brute_force_sat(&f).unwrap().is_sat());
    }
}
