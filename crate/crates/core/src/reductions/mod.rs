//! Gadget reductions from 3-Occurrence 3-SAT to rainbow connectivity.
//!
//! Every builder maps a formula `f` to an edge-colored graph with a source
//! and a sink such that a rainbow source-sink path exists exactly when `f`
//! is satisfiable.
//!
//! | tag | builder | graph class |
//! |---|---|---|
//! | `base` | [`build_base`] | bipartite, outerplanar |
//! | `io` | [`build_interval_outerplanar`] | interval, outerplanar, claw-free |
//! | `ib` | [`build_interval_block`] | interval, block |
//! | `cubic` | [`build_cubic`] | 3-regular |
//! | `kreg` | [`build_k_regular`] | k-regular |

mod gadgets;

pub use gadgets::{clause_gadget, literal_chord_color, names, ClauseGadget, GadgetPalette};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};
use thiserror::Error;

use crate::graph::{EdgeColoredGraph, GraphBuilder, GraphDocument, GraphError, VertexId};
use crate::sat::{literal_positions, pad_to_min_clauses, CnfFormula, SatError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Construction {
    Base,
    IntervalOuterplanar,
    IntervalBlock,
    Cubic,
    /// Degree `k > 3`.
    KRegular(u32),
}

impl Construction {
    /// Short tag: `base`, `io`, `ib`, `cubic` or `kreg`.
    pub fn tag(self) -> &'static str {
        match self {
            Construction::Base => "base",
            Construction::IntervalOuterplanar => "io",
            Construction::IntervalBlock => "ib",
            Construction::Cubic => "cubic",
            Construction::KRegular(_) => "kreg",
        }
    }

    /// Parses a tag; `kreg` needs `k`.
    pub fn from_tag(tag: &str, k: Option<u32>) -> Result<Self, ReductionError> {
        match (tag, k) {
            ("base", _) => Ok(Construction::Base),
            ("io", _) => Ok(Construction::IntervalOuterplanar),
            ("ib", _) => Ok(Construction::IntervalBlock),
            ("cubic", _) => Ok(Construction::Cubic),
            ("kreg", Some(k)) if k > 3 => Ok(Construction::KRegular(k)),
            ("kreg", Some(k)) => Err(ReductionError::DegreeTooSmall(k)),
            ("kreg", None) => Err(ReductionError::MissingDegree),
            (other, _) => Err(ReductionError::UnknownConstruction(other.to_string())),
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::KRegular(k) => write!(f, "kreg({k})"),
            other => f.write_str(other.tag()),
        }
    }
}

impl FromStr for Construction {
    type Err = ReductionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.strip_prefix("kreg(").and_then(|r| r.strip_suffix(')')) {
            Some(k) => {
                let k = k.parse().map_err(|_| ReductionError::UnknownConstruction(s.to_string()))?;
                Construction::from_tag("kreg", Some(k))
            }
            None => Construction::from_tag(s, None),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error(transparent)]
    Formula(#[from] SatError),
    #[error("formula has no clauses")]
    NoClauses,
    #[error("clause {clause} is empty")]
    EmptyClause { clause: usize },
    #[error("clause {clause} has {size} literals")]
    ClauseTooLong { clause: usize, size: usize },
    #[error("k-regular construction needs k > 3, got {0}")]
    DegreeTooSmall(u32),
    #[error("k-regular construction needs a degree k")]
    MissingDegree,
    #[error("unknown construction `{0}` (expected base, io, ib, cubic or kreg)")]
    UnknownConstruction(String),
    #[error("construction produced an invalid graph: {0}")]
    Graph(#[from] GraphError),
}

/// A built gadget graph.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub graph: EdgeColoredGraph,
    pub source: VertexId,
    pub sink: VertexId,
    /// `s'_1` in the cubic and k-regular constructions.
    pub alt_source: Option<VertexId>,
    /// Gadget id (`X.i`, `C.j`, `tail`, `head`, prefixed by `h<h>.` per copy)
    /// to its vertices. The sets partition the vertex set.
    pub gadget_map: BTreeMap<String, Vec<VertexId>>,
    pub construction: Construction,
    /// Some clause gadget came from the shortened one- or two-lane pattern.
    pub reconstructed: bool,
    /// The formula actually encoded (after padding, for cubic and k-regular).
    pub formula: CnfFormula,
    pub palette: GadgetPalette,
}

impl Reduction {
    pub fn source_name(&self) -> &str {
        self.graph.name(self.source)
    }

    pub fn sink_name(&self) -> &str {
        self.graph.name(self.sink)
    }

    /// The `meta` block of the interchange document.
    pub fn meta(&self) -> Value {
        let g = &self.graph;
        let gadgets: BTreeMap<&str, Vec<&str>> = self
            .gadget_map
            .iter()
            .map(|(id, vs)| (id.as_str(), vs.iter().map(|&v| g.name(v)).collect()))
            .collect();
        let k = match self.construction {
            Construction::KRegular(k) => Some(k),
            _ => None,
        };
        json!({
            "construction": self.construction.tag(),
            "k": k,
            "source": self.source_name(),
            "sink": self.sink_name(),
            "alt_source": self.alt_source.map(|v| g.name(v)),
            "reconstructed": self.reconstructed,
            "gadget_map": gadgets,
            "palette": {
                "colors": g.color_names(),
                "fresh": self.palette.fresh_count(),
            },
        })
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument { meta: Some(self.meta()), ..GraphDocument::from_graph(&self.graph) }
    }
}

/// Builds the named construction.
pub fn build(f: &CnfFormula, construction: Construction) -> Result<Reduction, ReductionError> {
    match construction {
        Construction::Base | Construction::IntervalOuterplanar | Construction::IntervalBlock => {
            build_layered(f, construction)
        }
        Construction::Cubic => build_cubic(f),
        Construction::KRegular(k) => build_k_regular(f, k),
    }
}

/// The bipartite outerplanar construction.
pub fn build_base(f: &CnfFormula) -> Result<Reduction, ReductionError> {
    build_layered(f, Construction::Base)
}

/// The base construction plus three chords per variable gadget, a chord
/// staircase per clause gadget, and the variable-to-variable bridges
/// recolored with the chord color of the gadget they leave.
pub fn build_interval_outerplanar(f: &CnfFormula) -> Result<Reduction, ReductionError> {
    build_layered(f, Construction::IntervalOuterplanar)
}

/// The interval outerplanar construction with every gadget completed to a
/// clique.
pub fn build_interval_block(f: &CnfFormula) -> Result<Reduction, ReductionError> {
    build_layered(f, Construction::IntervalBlock)
}

struct Assembly {
    builder: GraphBuilder,
    gadgets: Vec<(String, Vec<String>)>,
    palette: GadgetPalette,
}

impl Assembly {
    fn new() -> Self {
        Assembly { builder: GraphBuilder::new(), gadgets: Vec::new(), palette: GadgetPalette::new() }
    }

    fn gadget(&mut self, id: String, vertices: Vec<String>) -> Result<(), GraphError> {
        for v in &vertices {
            self.builder.add_vertex(v)?;
        }
        self.gadgets.push((id, vertices));
        Ok(())
    }

    fn edge(&mut self, u: &str, v: &str, color: &str) -> Result<(), GraphError> {
        self.builder.add_edge(u, v, color)
    }

    fn finish(
        self,
        construction: Construction,
        formula: CnfFormula,
        source: &str,
        sink: &str,
        alt_source: Option<&str>,
    ) -> Result<Reduction, ReductionError> {
        let graph = self.builder.build();
        let id = |name: &str| graph.require(name);
        let gadget_map = self
            .gadgets
            .iter()
            .map(|(gid, vs)| Ok((gid.clone(), vs.iter().map(|v| id(v)).collect::<Result<_, _>>()?)))
            .collect::<Result<BTreeMap<_, _>, GraphError>>()?;
        let reconstructed = formula.clauses().iter().any(|c| c.len() < 3);
        Ok(Reduction {
            source: id(source)?,
            sink: id(sink)?,
            alt_source: alt_source.map(id).transpose()?,
            graph,
            gadget_map,
            construction,
            reconstructed,
            formula,
            palette: self.palette,
        })
    }
}

fn check_formula(f: &CnfFormula) -> Result<(), ReductionError> {
    f.validate()?;
    if f.clause_count() == 0 {
        return Err(ReductionError::NoClauses);
    }
    Ok(())
}

/// Variable gadget: the six-cycle `a, u, v, b, v̄, ū` with its two colored
/// `a`-`b` paths.
fn variable_gadget(asm: &mut Assembly, i: usize) -> Result<(), GraphError> {
    use names::*;
    let iv = i as u32;
    asm.gadget(format!("X.{i}"), vec![a(i), u(i), v(i), b(i), vb(i), ub(i)])?;
    asm.edge(&a(i), &u(i), &GadgetPalette::positive(iv, 1))?;
    asm.edge(&u(i), &v(i), &GadgetPalette::positive(iv, 2))?;
    asm.edge(&v(i), &b(i), &GadgetPalette::positive(iv, 3))?;
    asm.edge(&a(i), &ub(i), &GadgetPalette::negative(iv, 1))?;
    asm.edge(&ub(i), &vb(i), &GadgetPalette::negative(iv, 2))?;
    asm.edge(&vb(i), &b(i), &GadgetPalette::negative(iv, 3))
}

fn clause_gadgets(asm: &mut Assembly, f: &CnfFormula, construction: Construction) -> Result<(), ReductionError> {
    let ranks = literal_positions(f)?;
    for (idx, clause) in f.clauses().iter().enumerate() {
        let j = idx + 1;
        let g = clause_gadget(construction, j, clause, ranks.clause_ranks(idx), &mut asm.palette)?;
        asm.gadget(format!("C.{j}"), g.vertices)?;
        for (u, v, c) in &g.edges {
            asm.edge(u, v, c)?;
        }
    }
    Ok(())
}

fn build_layered(f: &CnfFormula, construction: Construction) -> Result<Reduction, ReductionError> {
    use names::*;
    check_formula(f)?;
    let (n, m) = (f.variable_count() as usize, f.clause_count());
    let interval = construction != Construction::Base;
    let block = construction == Construction::IntervalBlock;
    let mut asm = Assembly::new();

    for i in 1..=n {
        variable_gadget(&mut asm, i)?;
        let chord = GadgetPalette::variable_chord(i as u32);
        if interval {
            asm.edge(&u(i), &ub(i), &chord)?;
            asm.edge(&u(i), &vb(i), &chord)?;
            asm.edge(&v(i), &vb(i), &chord)?;
        }
        if block {
            for (x, y) in [(a(i), vb(i)), (a(i), b(i)), (a(i), v(i)), (u(i), b(i)), (v(i), ub(i)), (b(i), ub(i))] {
                asm.edge(&x, &y, &chord)?;
            }
        }
    }
    clause_gadgets(&mut asm, f, construction)?;
    asm.gadget("tail".into(), (1..=m).map(s).collect())?;
    asm.gadget("head".into(), vec!["t".into()])?;

    // U: bridges out of each variable gadget
    let mut bridges = Vec::with_capacity(n);
    for i in 1..=n {
        let next = if i < n { a(i + 1) } else { p(1) };
        let color = asm.palette.fresh();
        asm.edge(&b(i), &next, &color)?;
        bridges.push((b(i), next));
    }
    for j in 1..m {
        asm.edge(&qp(j), &p(j + 1), &GadgetPalette::clause_prime(j))?;
    }
    asm.edge(&qp(m), "t", &GadgetPalette::clause_prime(m))?;
    for j in 1..m {
        asm.edge(&s(j), &s(j + 1), &GadgetPalette::clause(j))?;
    }
    asm.edge(&s(m), &a(1), &GadgetPalette::clause(m))?;

    if interval {
        for (i, (x, y)) in bridges.iter().enumerate() {
            asm.builder.recolor(x, y, &GadgetPalette::variable_chord(i as u32 + 1))?;
        }
    }
    asm.finish(construction, f.clone(), &s(1), "t", None)
}

/// The cubic construction. Formulas with fewer than three clauses are first
/// padded with unit clauses on fresh variables.
pub fn build_cubic(f: &CnfFormula) -> Result<Reduction, ReductionError> {
    build_cubic_as(f, Construction::Cubic)
}

fn build_cubic_as(f: &CnfFormula, construction: Construction) -> Result<Reduction, ReductionError> {
    use names::*;
    check_formula(f)?;
    let f = pad_to_min_clauses(f, 3);
    let (n, m) = (f.variable_count() as usize, f.clause_count());
    let mut asm = Assembly::new();

    for i in 1..=n {
        variable_gadget(&mut asm, i)?;
        let chord = GadgetPalette::variable_chord(i as u32);
        asm.edge(&u(i), &vb(i), &chord)?;
        asm.edge(&ub(i), &v(i), &chord)?;
    }
    clause_gadgets(&mut asm, &f, Construction::Cubic)?;

    // tail: two rails s and s' on m-1 vertices, tied off at a.0
    let mut tail: Vec<String> = (1..m).map(s).collect();
    tail.extend((1..m).map(sp));
    tail.push(a(0));
    asm.gadget("tail".into(), tail)?;
    for j in 1..m - 1 {
        asm.edge(&s(j), &s(j + 1), &GadgetPalette::clause(j))?;
        asm.edge(&sp(j), &sp(j + 1), &GadgetPalette::clause(j))?;
    }
    let c1 = GadgetPalette::clause(1);
    asm.edge(&s(1), &sp(2), &c1)?;
    asm.edge(&s(2), &sp(1), &c1)?;
    let fresh = asm.palette.fresh();
    asm.edge(&s(1), &sp(1), &fresh)?;
    for j in 3..m {
        let fresh = asm.palette.fresh();
        asm.edge(&s(j), &sp(j), &fresh)?;
    }
    let last = GadgetPalette::clause(m - 1);
    asm.edge(&s(m - 1), &a(0), &last)?;
    asm.edge(&sp(m - 1), &a(0), &last)?;

    // head: K4 on t.1..t.4 minus (t.1, t.2), plus t.0
    asm.gadget("head".into(), (0..=4).map(t).collect())?;
    for (x, y) in [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)] {
        let fresh = asm.palette.fresh();
        asm.edge(&t(x), &t(y), &fresh)?;
    }

    for i in 1..=n {
        let next = if i < n { a(i + 1) } else { p(1) };
        asm.edge(&b(i), &next, &GadgetPalette::variable_chord(i as u32))?;
    }
    for j in 1..m {
        asm.edge(&qp(j), &p(j + 1), &GadgetPalette::clause_prime(j))?;
    }
    asm.edge(&t(0), &qp(m), &GadgetPalette::clause_prime(m))?;
    asm.edge(&a(0), &a(1), &GadgetPalette::clause(m))?;

    asm.finish(construction, f, &s(1), &t(0), Some(&sp(1)))
}

/// `k - 2` identically colored copies of the cubic construction, with the
/// copies of each vertex joined into a clique colored `c*`. Source and sink
/// are those of copy 1.
pub fn build_k_regular(f: &CnfFormula, k: u32) -> Result<Reduction, ReductionError> {
    if k <= 3 {
        return Err(ReductionError::DegreeTooSmall(k));
    }
    let cubic = build_cubic_as(f, Construction::KRegular(k))?;
    let g = &cubic.graph;
    let copies = (k - 2) as usize;
    let prefixed = |h: usize, name: &str| format!("h{h}.{name}");
    let mut asm = Assembly::new();
    asm.palette = cubic.palette.clone();
    for h in 1..=copies {
        for (id, vs) in &cubic.gadget_map {
            asm.gadget(prefixed(h, id), vs.iter().map(|&v| prefixed(h, g.name(v))).collect())?;
        }
        for e in g.edges() {
            asm.edge(&prefixed(h, g.name(e.u)), &prefixed(h, g.name(e.v)), g.color_name(e.color))?;
        }
    }
    for l in g.vertices() {
        for h1 in 1..=copies {
            for h2 in h1 + 1..=copies {
                asm.edge(&prefixed(h1, g.name(l)), &prefixed(h2, g.name(l)), GadgetPalette::STAR)?;
            }
        }
    }
    let source = prefixed(1, cubic.source_name());
    let sink = prefixed(1, cubic.sink_name());
    let alt = cubic.alt_source.map(|v| prefixed(1, g.name(v)));
    asm.finish(Construction::KRegular(k), cubic.formula, &source, &sink, alt.as_deref())
}
