use crate::sat::{Literal, Rank};

use super::{Construction, ReductionError};

/// Vertex names shared by all constructions.
pub mod names {
    pub fn a(i: usize) -> String {
        format!("a.{i}")
    }
    pub fn u(i: usize) -> String {
        format!("u.{i}")
    }
    pub fn v(i: usize) -> String {
        format!("v.{i}")
    }
    pub fn b(i: usize) -> String {
        format!("b.{i}")
    }
    pub fn ub(i: usize) -> String {
        format!("ub.{i}")
    }
    pub fn vb(i: usize) -> String {
        format!("vb.{i}")
    }
    pub fn p(j: usize) -> String {
        format!("p.{j}")
    }
    pub fn pp(j: usize) -> String {
        format!("pp.{j}")
    }
    pub fn q(j: usize) -> String {
        format!("q.{j}")
    }
    pub fn qp(j: usize) -> String {
        format!("qp.{j}")
    }
    pub fn r(j: usize, k: usize) -> String {
        format!("r.{j}.{k}")
    }
    pub fn rp(j: usize, k: usize) -> String {
        format!("rp.{j}.{k}")
    }
    pub fn s(j: usize) -> String {
        format!("s.{j}")
    }
    pub fn sp(j: usize) -> String {
        format!("sp.{j}")
    }
    pub fn t(i: usize) -> String {
        format!("t.{i}")
    }
}

/// Color names of the gadget constructions, plus a counter for fresh colors.
///
/// | color | name |
/// |---|---|
/// | positive path of `x_i`, edge `r` | `c.i.r` |
/// | negative path of `x_i`, edge `r` | `cb.i.r` |
/// | chords of `X_i` | `cb.i` |
/// | clause `j` | `c.j`, `c'.j` |
/// | fresh | `f.N` |
/// | inter-copy cliques | `c*` |
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GadgetPalette {
    fresh: u32,
}

impl GadgetPalette {
    pub const STAR: &'static str = "c*";

    pub fn new() -> Self {
        Self::default()
    }

    pub fn positive(i: u32, r: u32) -> String {
        format!("c.{i}.{r}")
    }

    pub fn negative(i: u32, r: u32) -> String {
        format!("cb.{i}.{r}")
    }

    pub fn variable_chord(i: u32) -> String {
        format!("cb.{i}")
    }

    pub fn clause(j: usize) -> String {
        format!("c.{j}")
    }

    pub fn clause_prime(j: usize) -> String {
        format!("c'.{j}")
    }

    /// A color not used anywhere else.
    pub fn fresh(&mut self) -> String {
        self.fresh += 1;
        format!("f.{}", self.fresh)
    }

    pub fn fresh_count(&self) -> u32 {
        self.fresh
    }
}

/// Color of the chord for literal `lit` when it is the `rank`-th occurrence
/// of its variable: a positive literal takes the matching negative-path
/// color and vice versa, so the chord is blocked exactly when the variable
/// path contradicting the literal was taken.
pub fn literal_chord_color(rank: Rank, lit: Literal) -> String {
    if lit.positive {
        GadgetPalette::negative(lit.variable, rank.number())
    } else {
        GadgetPalette::positive(lit.variable, rank.number())
    }
}

/// Vertices and colored edges of one clause gadget, entered at `p.j` and
/// left at `qp.j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseGadget {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String, String)>,
}

impl ClauseGadget {
    fn edge(&mut self, u: String, v: String, color: String) {
        self.edges.push((u, v, color));
    }

    fn has_edge(&self, u: &str, v: &str) -> bool {
        self.edges.iter().any(|(a, b, _)| (a == u && b == v) || (a == v && b == u))
    }
}

/// Builds the gadget of clause `j` (1-based) for a construction.
///
/// A clause of `s` literals has `s` lanes, one literal chord each. Shorter
/// clauses drop lanes from the size-3 pattern; the chord pattern around the
/// remaining lanes is unchanged.
pub fn clause_gadget(
    construction: Construction,
    j: usize,
    clause: &[Literal],
    ranks: &[Rank],
    palette: &mut GadgetPalette,
) -> Result<ClauseGadget, ReductionError> {
    let s = clause.len();
    if s == 0 {
        return Err(ReductionError::EmptyClause { clause: j });
    }
    if s > 3 {
        return Err(ReductionError::ClauseTooLong { clause: j, size: s });
    }
    debug_assert_eq!(ranks.len(), s);
    Ok(match construction {
        Construction::Cubic | Construction::KRegular(_) => cubic_gadget(j, clause, ranks, palette),
        _ => {
            let mut g = cycle_gadget(j, clause, ranks, palette);
            if construction != Construction::Base {
                interval_chords(&mut g, j, s);
            }
            if construction == Construction::IntervalBlock {
                complete(&mut g, j);
            }
            g
        }
    })
}

/// Cycle `p, r_1..r_s, q, q', r'_s..r'_1, p'` with one chord per literal.
fn cycle_gadget(j: usize, clause: &[Literal], ranks: &[Rank], palette: &mut GadgetPalette) -> ClauseGadget {
    use names::*;
    let s = clause.len();
    let mut top = vec![p(j)];
    top.extend((1..=s).map(|k| r(j, k)));
    top.push(q(j));
    let mut bottom = vec![qp(j)];
    bottom.extend((1..=s).rev().map(|k| rp(j, k)));
    bottom.push(pp(j));
    let mut g = ClauseGadget { vertices: top.iter().chain(&bottom).cloned().collect(), edges: vec![] };
    for w in top.windows(2) {
        g.edge(w[0].clone(), w[1].clone(), palette.fresh());
    }
    g.edge(q(j), qp(j), GadgetPalette::clause(j));
    for w in bottom.windows(2) {
        g.edge(w[0].clone(), w[1].clone(), palette.fresh());
    }
    g.edge(pp(j), p(j), GadgetPalette::clause_prime(j));
    for k in 1..=s {
        g.edge(r(j, k), rp(j, k), literal_chord_color(ranks[k - 1], clause[k - 1]));
    }
    g
}

/// The staircase `(r_k, r'_{k-1})` with `r'_0 = p'`, closed by `(q, r'_s)`.
fn interval_chords(g: &mut ClauseGadget, j: usize, lanes: usize) {
    use names::*;
    let color = GadgetPalette::clause_prime(j);
    for k in 1..=lanes {
        let lower = if k == 1 { pp(j) } else { rp(j, k - 1) };
        g.edge(r(j, k), lower, color.clone());
    }
    g.edge(q(j), rp(j, lanes), color);
}

/// Adds every missing chord in `c'_j`, in cycle order.
fn complete(g: &mut ClauseGadget, j: usize) {
    let color = GadgetPalette::clause_prime(j);
    let cyc = g.vertices.clone();
    for x in 0..cyc.len() {
        for y in x + 1..cyc.len() {
            if !g.has_edge(&cyc[x], &cyc[y]) {
                g.edge(cyc[x].clone(), cyc[y].clone(), color.clone());
            }
        }
    }
}

/// Cycle `p, r_1..r_{2s-1}, q, q', r'_{2s-1}..r'_1, p'` with literal chords
/// at odd positions and `c'_j` chords `(r'_{2i-2}, r_{2i})`, where
/// `r'_0 = p'` and `r_{2s} = q`. Every vertex ends with degree 3 once the
/// two outside edges at `p` and `q'` are attached.
fn cubic_gadget(j: usize, clause: &[Literal], ranks: &[Rank], palette: &mut GadgetPalette) -> ClauseGadget {
    use names::*;
    let s = clause.len();
    let len = 2 * s - 1;
    let mut top = vec![p(j)];
    top.extend((1..=len).map(|k| r(j, k)));
    top.push(q(j));
    let mut bottom = vec![qp(j)];
    bottom.extend((1..=len).rev().map(|k| rp(j, k)));
    bottom.push(pp(j));
    let mut g = ClauseGadget { vertices: top.iter().chain(&bottom).cloned().collect(), edges: vec![] };
    for w in top.windows(2) {
        g.edge(w[0].clone(), w[1].clone(), palette.fresh());
    }
    g.edge(q(j), qp(j), GadgetPalette::clause(j));
    for w in bottom.windows(2) {
        g.edge(w[0].clone(), w[1].clone(), palette.fresh());
    }
    g.edge(pp(j), p(j), GadgetPalette::clause_prime(j));
    for k in 1..=s {
        let pos = 2 * k - 1;
        g.edge(r(j, pos), rp(j, pos), literal_chord_color(ranks[k - 1], clause[k - 1]));
    }
    for i in 1..=s {
        let lower = if i == 1 { pp(j) } else { rp(j, 2 * i - 2) };
        let upper = if i == s { q(j) } else { r(j, 2 * i) };
        g.edge(lower, upper, GadgetPalette::clause_prime(j));
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lits(signed: &[i32]) -> Vec<Literal> {
        signed.iter().map(|&l| Literal::from_dimacs(l)).collect()
    }

    #[test]
    fn chord_colors() {
        assert_eq!(literal_chord_color(Rank::First, Literal::pos(2)), "cb.2.1");
        assert_eq!(literal_chord_color(Rank::Third, Literal::neg(5)), "c.5.3");
    }

    #[test]
    fn gadget_sizes() {
        let ranks = [Rank::First; 3];
        let mut pal = GadgetPalette::new();
        let cl = lits(&[1, 2, -3]);
        let size = |c, pal: &mut GadgetPalette| {
            let g = clause_gadget(c, 1, &cl, &ranks, pal).unwrap();
            (g.vertices.len(), g.edges.len())
        };
        assert_eq!(size(Construction::Base, &mut pal), (10, 13));
        assert_eq!(size(Construction::IntervalOuterplanar, &mut pal), (10, 17));
        assert_eq!(size(Construction::IntervalBlock, &mut pal), (10, 45));
        assert_eq!(size(Construction::Cubic, &mut pal), (14, 20));
        for s in 1..=3usize {
            let cl = lits(&[1, 2, 3][..s]);
            let g = clause_gadget(Construction::Base, 1, &cl, &ranks[..s], &mut pal).unwrap();
            assert_eq!(g.edges.len(), 3 * s + 4);
            let g = clause_gadget(Construction::IntervalOuterplanar, 1, &cl, &ranks[..s], &mut pal).unwrap();
            assert_eq!(g.edges.len(), 4 * s + 5);
            let g = clause_gadget(Construction::Cubic, 1, &cl, &ranks[..s], &mut pal).unwrap();
            assert_eq!(g.edges.len(), 6 * s + 2);
        }
        assert_eq!(
            clause_gadget(Construction::Base, 4, &[], &[], &mut pal),
            Err(ReductionError::EmptyClause { clause: 4 })
        );
    }
}
