use super::{CnfFormula, Literal, SatError};

fn syntax(line: usize, message: impl Into<String>) -> SatError {
    SatError::Syntax { line, message: message.into() }
}

/// Parses DIMACS CNF: `c` comment lines, one `p cnf <n> <m>` header, then
/// clauses as whitespace-separated literals terminated by `0` (clauses may
/// span lines). Clause and literal order are preserved.
///
/// Rejects clauses of size 0 or above 3 and variables occurring more than
/// three times.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, SatError> {
    let mut header: Option<(u32, usize)> = None;
    let mut clauses: Vec<Vec<Literal>> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(syntax(line_no, "duplicate problem line"));
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 4 || parts[0] != "p" || parts[1] != "cnf" {
                return Err(syntax(line_no, "expected `p cnf <variables> <clauses>`"));
            }
            let n = parts[2]
                .parse::<u32>()
                .map_err(|_| syntax(line_no, format!("bad variable count `{}`", parts[2])))?;
            let m = parts[3]
                .parse::<usize>()
                .map_err(|_| syntax(line_no, format!("bad clause count `{}`", parts[3])))?;
            header = Some((n, m));
            continue;
        }
        let Some((n, _)) = header else {
            return Err(syntax(line_no, "clause before the `p cnf` header"));
        };
        for tok in line.split_whitespace() {
            let lit: i32 = tok
                .parse()
                .map_err(|_| syntax(line_no, format!("bad literal `{tok}`")))?;
            if lit == 0 {
                let clause = std::mem::take(&mut current);
                match clause.len() {
                    0 => return Err(SatError::EmptyClause { clause: clauses.len() + 1 }),
                    1..=3 => clauses.push(clause),
                    size => {
                        return Err(SatError::ClauseTooLong { clause: clauses.len() + 1, size })
                    }
                }
                continue;
            }
            if lit.unsigned_abs() > n {
                return Err(syntax(line_no, format!("literal {lit} exceeds {n} variables")));
            }
            current.push(Literal::from_dimacs(lit));
        }
    }
    let Some((n, m)) = header else {
        return Err(syntax(last_line.max(1), "missing `p cnf` header"));
    };
    if !current.is_empty() {
        return Err(syntax(last_line, "last clause is not terminated by 0"));
    }
    if clauses.len() != m {
        return Err(SatError::ClauseCountMismatch { declared: m, found: clauses.len() });
    }
    let f = CnfFormula::new(n, clauses)?;
    f.validate()?;
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sat::Site;

    #[test]
    fn unit_clause() {
        let f = parse_dimacs("p cnf 1 1\n1 0\n").unwrap();
        assert_eq!(f.variable_count(), 1);
        assert_eq!(f.clauses(), [vec![Literal::pos(1)]]);
    }

    #[test]
    fn comments_and_multiline_clauses() {
        let f = parse_dimacs("c hello\np cnf 3 2\n1 -2\n 3 0 -1\n0\n").unwrap();
        assert_eq!(f.clause(0), [Literal::pos(1), Literal::neg(2), Literal::pos(3)]);
        assert_eq!(f.clause(1), [Literal::neg(1)]);
    }

    #[test]
    fn four_literals_is_a_size_error() {
        assert_eq!(
            parse_dimacs("p cnf 4 1\n1 2 3 4 0\n"),
            Err(SatError::ClauseTooLong { clause: 1, size: 4 })
        );
    }

    #[test]
    fn fourth_occurrence_is_named() {
        let err = parse_dimacs("p cnf 2 4\n1 0\n2 1 0\n-1 0\n2 -1 0\n").unwrap_err();
        match err {
            SatError::TooManyOccurrences { variable, fourth, .. } => {
                assert_eq!(variable, 1);
                assert_eq!(fourth, Site { clause: 4, slot: 2 });
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(parse_dimacs("1 0\n"), Err(SatError::Syntax { .. })));
        assert!(matches!(parse_dimacs("p cnf 1 1\nx 0\n"), Err(SatError::Syntax { line: 2, .. })));
        assert!(matches!(parse_dimacs("p cnf 1 1\n2 0\n"), Err(SatError::Syntax { .. })));
        assert!(matches!(parse_dimacs("p cnf 1 1\n1\n"), Err(SatError::Syntax { .. })));
        assert_eq!(parse_dimacs("p cnf 1 1\n0\n"), Err(SatError::EmptyClause { clause: 1 }));
        assert_eq!(
            parse_dimacs("p cnf 1 2\n1 0\n"),
            Err(SatError::ClauseCountMismatch { declared: 2, found: 1 })
        );
    }

    #[test]
    fn print_parse_identity() {
        let f = CnfFormula::from_signed(3, &[&[1, -2, 3], &[-3], &[2, 2]]).unwrap();
        assert_eq!(parse_dimacs(&f.to_dimacs()).unwrap(), f);
    }
}
