//! 3-Occurrence 3-SAT instances.
//!
//! A formula has clauses of one to three literals; the 3-occurrence property
//! (every variable appears at most three times, counting repeats) is checked
//! separately by [`validate_occurrence`] so that violating inputs can still be
//! represented and reported.

mod dimacs;

pub use dimacs::parse_dimacs;

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

/// Largest variable count [`brute_force_sat`] accepts.
pub const BRUTE_FORCE_GUARD: u32 = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Literal {
    /// 1-based variable index.
    pub variable: u32,
    pub positive: bool,
}

impl Literal {
    pub fn pos(variable: u32) -> Self {
        Literal { variable, positive: true }
    }

    pub fn neg(variable: u32) -> Self {
        Literal { variable, positive: false }
    }

    /// `3` is `x3`, `-3` is `¬x3`. Panics on zero.
    pub fn from_dimacs(lit: i32) -> Self {
        assert!(lit != 0, "0 is the clause terminator, not a literal");
        Literal { variable: lit.unsigned_abs(), positive: lit > 0 }
    }

    pub fn to_dimacs(self) -> i32 {
        let v = self.variable as i32;
        if self.positive {
            v
        } else {
            -v
        }
    }

    pub fn holds(self, assignment: &Assignment) -> bool {
        assignment.value(self.variable) == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "x{}", self.variable)
        } else {
            write!(f, "¬x{}", self.variable)
        }
    }
}

/// 1-based position of a literal: clause `clause`, slot `slot`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Site {
    pub clause: usize,
    pub slot: usize,
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "clause {} slot {}", self.clause, self.slot)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccurrenceViolation {
    pub variable: u32,
    /// Every site of the variable, in scan order.
    pub sites: Vec<Site>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("clause {clause} is empty")]
    EmptyClause { clause: usize },
    #[error("clause {clause} has {size} literals (at most 3 allowed)")]
    ClauseTooLong { clause: usize, size: usize },
    #[error("variable {variable} at {site} is outside 1..={count}")]
    VariableOutOfRange { variable: u32, count: u32, site: Site },
    #[error("variable x{variable} occurs more than three times; fourth occurrence at {fourth}")]
    TooManyOccurrences { variable: u32, fourth: Site, sites: Vec<Site> },
    #[error("header declares {declared} clauses but {found} were read")]
    ClauseCountMismatch { declared: usize, found: usize },
    #[error("{count} variables exceed the brute-force guard of {guard}; use a real SAT solver")]
    TooManyVariables { count: u32, guard: u32 },
}

/// A CNF formula over variables `1..=variable_count` with clauses of size
/// one to three, kept in the order written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    variable_count: u32,
    clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    /// Checks clause sizes and variable ranges; the occurrence bound is not
    /// checked here.
    pub fn new(variable_count: u32, clauses: Vec<Vec<Literal>>) -> Result<Self, SatError> {
        for (j, clause) in clauses.iter().enumerate() {
            match clause.len() {
                0 => return Err(SatError::EmptyClause { clause: j + 1 }),
                1..=3 => {}
                size => return Err(SatError::ClauseTooLong { clause: j + 1, size }),
            }
            for (k, lit) in clause.iter().enumerate() {
                if lit.variable == 0 || lit.variable > variable_count {
                    return Err(SatError::VariableOutOfRange {
                        variable: lit.variable,
                        count: variable_count,
                        site: Site { clause: j + 1, slot: k + 1 },
                    });
                }
            }
        }
        Ok(CnfFormula { variable_count, clauses })
    }

    /// Shorthand with DIMACS-style signed literals.
    pub fn from_signed(variable_count: u32, clauses: &[&[i32]]) -> Result<Self, SatError> {
        let clauses = clauses
            .iter()
            .map(|c| c.iter().map(|&l| Literal::from_dimacs(l)).collect())
            .collect();
        Self::new(variable_count, clauses)
    }

    pub fn variable_count(&self) -> u32 {
        self.variable_count
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    pub fn clause(&self, j: usize) -> &[Literal] {
        &self.clauses[j]
    }

    pub fn is_satisfied_by(&self, assignment: &Assignment) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|l| l.holds(assignment)))
    }

    /// Full 3-Occurrence 3-SAT check, failing on the first violation.
    pub fn validate(&self) -> Result<(), SatError> {
        match validate_occurrence(self) {
            Ok(()) => Ok(()),
            Err(violations) => {
                let v = &violations[0];
                Err(SatError::TooManyOccurrences {
                    variable: v.variable,
                    fourth: v.sites[3],
                    sites: v.sites.clone(),
                })
            }
        }
    }

    /// DIMACS text; parsing it back yields an equal formula.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.variable_count, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                out.push_str(&lit.to_dimacs().to_string());
                out.push(' ');
            }
            out.push_str("0\n");
        }
        out
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clauses.is_empty() {
            return write!(f, "⊤");
        }
        for (j, clause) in self.clauses.iter().enumerate() {
            if j > 0 {
                write!(f, " ∧ ")?;
            }
            write!(f, "(")?;
            for (k, lit) in clause.iter().enumerate() {
                if k > 0 {
                    write!(f, " ∨ ")?;
                }
                write!(f, "{lit}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Lists every variable occurring more than three times.
pub fn validate_occurrence(f: &CnfFormula) -> Result<(), Vec<OccurrenceViolation>> {
    let mut sites: Vec<Vec<Site>> = vec![Vec::new(); f.variable_count as usize + 1];
    for (j, clause) in f.clauses.iter().enumerate() {
        for (k, lit) in clause.iter().enumerate() {
            sites[lit.variable as usize].push(Site { clause: j + 1, slot: k + 1 });
        }
    }
    let violations: Vec<OccurrenceViolation> = sites
        .into_iter()
        .enumerate()
        .filter(|(_, s)| s.len() > 3)
        .map(|(variable, sites)| OccurrenceViolation { variable: variable as u32, sites })
        .collect();
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// Which occurrence of its variable a literal is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rank {
    First = 1,
    Second = 2,
    Third = 3,
}

impl Rank {
    pub fn number(self) -> u32 {
        self as u32
    }

    fn from_count(count: u32) -> Option<Self> {
        match count {
            1 => Some(Rank::First),
            2 => Some(Rank::Second),
            3 => Some(Rank::Third),
            _ => None,
        }
    }
}

/// Occurrence rank of every literal, indexed by 0-based clause and slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccurrenceIndex {
    ranks: Vec<Vec<Rank>>,
}

impl OccurrenceIndex {
    pub fn rank(&self, clause: usize, slot: usize) -> Rank {
        self.ranks[clause][slot]
    }

    pub fn clause_ranks(&self, clause: usize) -> &[Rank] {
        &self.ranks[clause]
    }
}

/// Ranks literals by scanning clauses in order, then slots in order; ties
/// inside one clause are therefore broken by slot.
pub fn literal_positions(f: &CnfFormula) -> Result<OccurrenceIndex, SatError> {
    f.validate()?;
    let mut seen = vec![0u32; f.variable_count as usize + 1];
    let ranks = f
        .clauses
        .iter()
        .map(|clause| {
            clause
                .iter()
                .map(|lit| {
                    seen[lit.variable as usize] += 1;
                    Rank::from_count(seen[lit.variable as usize]).expect("validated")
                })
                .collect()
        })
        .collect();
    Ok(OccurrenceIndex { ranks })
}

/// Total truth assignment over `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment(Vec<bool>);

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Assignment(values)
    }

    /// Value of the 1-based variable.
    pub fn value(&self, variable: u32) -> bool {
        self.0[variable as usize - 1]
    }

    pub fn values(&self) -> &[bool] {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SatResult {
    Satisfiable(Assignment),
    Unsatisfiable,
}

impl SatResult {
    pub fn is_sat(&self) -> bool {
        matches!(self, SatResult::Satisfiable(_))
    }
}

/// Exhaustive satisfiability check over all `2^n` assignments.
pub fn brute_force_sat(f: &CnfFormula) -> Result<SatResult, SatError> {
    let n = f.variable_count;
    if n > BRUTE_FORCE_GUARD {
        return Err(SatError::TooManyVariables { count: n, guard: BRUTE_FORCE_GUARD });
    }
    let masks: Vec<(u32, u32)> = f
        .clauses
        .iter()
        .map(|c| {
            c.iter().fold((0, 0), |(pos, neg), l| {
                let bit = 1u32 << (l.variable - 1);
                if l.positive {
                    (pos | bit, neg)
                } else {
                    (pos, neg | bit)
                }
            })
        })
        .collect();
    for bits in 0u32..(1u32 << n) {
        if masks.iter().all(|&(pos, neg)| bits & pos != 0 || !bits & neg != 0) {
            let values = (0..n).map(|i| bits >> i & 1 == 1).collect();
            return Ok(SatResult::Satisfiable(Assignment(values)));
        }
    }
    Ok(SatResult::Unsatisfiable)
}

/// Appends unit clauses `(y)` on fresh variables until there are at least
/// `m_min` clauses. Each fresh variable occurs once, so the result stays
/// 3-occurrence and is satisfiable exactly when `f` is.
pub fn pad_to_min_clauses(f: &CnfFormula, m_min: usize) -> CnfFormula {
    let mut padded = f.clone();
    while padded.clauses.len() < m_min {
        padded.variable_count += 1;
        padded.clauses.push(vec![Literal::pos(padded.variable_count)]);
    }
    padded
}

/// Random 3-Occurrence formula with `n` variables and (up to) `m` clauses of
/// size 1 to 3. Literals draw from variables with remaining occurrence
/// budget, so repeats inside a clause can happen. When the budget runs out
/// before `m` clauses exist, fewer clauses are produced.
pub fn random_formula<R: Rng + ?Sized>(rng: &mut R, n: u32, m: usize) -> CnfFormula {
    let mut budget = vec![3u32; n as usize + 1];
    budget[0] = 0;
    let mut clauses = Vec::with_capacity(m);
    for j in 0..m {
        let remaining_total: u32 = budget.iter().sum();
        let still_needed = (m - j - 1) as u32;
        if remaining_total == 0 {
            break;
        }
        let max_size = 3.min(remaining_total.saturating_sub(still_needed).max(1)) as usize;
        let size = rng.gen_range(1..=max_size);
        let mut clause = Vec::with_capacity(size);
        for _ in 0..size {
            let open: Vec<u32> = (1..=n).filter(|&v| budget[v as usize] > 0).collect();
            let Some(&v) = open.choose(rng) else { break };
            budget[v as usize] -= 1;
            clause.push(Literal { variable: v, positive: rng.gen_bool(0.5) });
        }
        if clause.is_empty() {
            break;
        }
        clauses.push(clause);
    }
    CnfFormula::new(n, clauses).expect("generator respects sizes and ranges")
}
