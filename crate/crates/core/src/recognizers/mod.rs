//! Graph class recognizers. Every answer carries a certificate that can be
//! checked without rerunning the recognizer.

mod chordal;
mod outerplanar;

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::graph::biconnected_components;
use crate::graph::paths::dag_unchecked;
use crate::graph::{EdgeColoredGraph, GraphError, VertexId};

pub use chordal::{
    is_chordal, is_interval, is_interval_with_budget, max_clique_size_chordal, maximal_cliques, CliquePath,
    EliminationOrder, NotInterval, INTERVAL_BUDGET,
};
pub use outerplanar::{is_outerplanar, NotOuterplanar, OuterCycles, HAMILTONIAN_BUDGET};

/// Outcome of a recognizer: a membership certificate, a counterexample, or
/// a refusal once a search budget runs out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership<Y, N> {
    Yes(Y),
    No(N),
    Unknown(String),
}

impl<Y, N> Membership<Y, N> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Membership::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Membership::No(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Membership::Yes(_) => "yes",
            Membership::No(_) => "no",
            Membership::Unknown(_) => "unknown",
        }
    }
}

/// A cycle given in order; consecutive vertices and the last and first are
/// adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycle(pub Vec<VertexId>);

/// A chordless cycle of length at least 4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedCycle(pub Vec<VertexId>);

fn is_cycle(g: &EdgeColoredGraph, cycle: &[VertexId]) -> bool {
    let k = cycle.len();
    let mut seen = vec![false; g.vertex_count()];
    for v in cycle {
        if v.index() >= seen.len() || std::mem::replace(&mut seen[v.index()], true) {
            return false;
        }
    }
    k >= 3 && (0..k).all(|i| g.adjacent(cycle[i], cycle[(i + 1) % k]))
}

impl OddCycle {
    pub fn validate(&self, g: &EdgeColoredGraph) -> bool {
        self.0.len() % 2 == 1 && is_cycle(g, &self.0)
    }
}

impl InducedCycle {
    pub fn validate(&self, g: &EdgeColoredGraph) -> bool {
        let c = &self.0;
        let k = c.len();
        k >= 4
            && is_cycle(g, c)
            && (0..k).all(|i| (i + 2..k).all(|j| (i == 0 && j == k - 1) || !g.adjacent(c[i], c[j])))
    }
}

/// A proper 2-coloring, indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoColoring(pub Vec<bool>);

impl TwoColoring {
    pub fn validate(&self, g: &EdgeColoredGraph) -> bool {
        self.0.len() == g.vertex_count() && g.edges().iter().all(|e| self.0[e.u.index()] != self.0[e.v.index()])
    }
}

pub fn is_bipartite(g: &EdgeColoredGraph) -> Membership<TwoColoring, OddCycle> {
    let n = g.vertex_count();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for &root in g.vertices_by_name() {
        if side[root.index()].is_some() {
            continue;
        }
        side[root.index()] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &(w, _) in g.neighbors(x) {
                match side[w.index()] {
                    None => {
                        side[w.index()] = Some(!side[x.index()].unwrap());
                        parent[w.index()] = x.index();
                        depth[w.index()] = depth[x.index()] + 1;
                        queue.push_back(w);
                    }
                    Some(s) if s == side[x.index()].unwrap() => {
                        return Membership::No(OddCycle(tree_cycle(&parent, &depth, x.index(), w.index())));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Membership::Yes(TwoColoring(side.into_iter().map(|s| s.unwrap()).collect()))
}

/// The cycle closed by the non-tree edge `(a, b)` in a BFS forest.
fn tree_cycle(parent: &[usize], depth: &[usize], a: usize, b: usize) -> Vec<VertexId> {
    let (mut x, mut y) = (a, b);
    let mut left = vec![x];
    let mut right = vec![y];
    while depth[x] > depth[y] {
        x = parent[x];
        left.push(x);
    }
    while depth[y] > depth[x] {
        y = parent[y];
        right.push(y);
    }
    while x != y {
        x = parent[x];
        y = parent[y];
        left.push(x);
        right.push(y);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left.into_iter().map(|i| VertexId(i as u32)).collect()
}

/// Either the common degree or the first vertex (by name) whose degree
/// differs from the most common one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regularity {
    Regular(usize),
    Irregular { vertex: VertexId, degree: usize, expected: usize },
}

pub fn regularity(g: &EdgeColoredGraph) -> Regularity {
    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    for v in g.vertices() {
        *histogram.entry(g.degree(v)).or_default() += 1;
    }
    // ties go to the smaller degree
    let expected = histogram.iter().max_by_key(|&(d, c)| (*c, std::cmp::Reverse(*d))).map_or(0, |(d, _)| *d);
    match g.vertices_by_name().iter().find(|&&v| g.degree(v) != expected) {
        Some(&vertex) => Regularity::Irregular { vertex, degree: g.degree(vertex), expected },
        None => Regularity::Regular(expected),
    }
}

/// A block of a non-block graph with two non-adjacent vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncompleteBlock {
    pub block: Vec<VertexId>,
    pub missing: (VertexId, VertexId),
}

/// Block graphs: every biconnected component is a clique.
pub fn is_block_graph(g: &EdgeColoredGraph) -> Membership<(), IncompleteBlock> {
    for block in biconnected_components(g).blocks {
        let mut vs = block.vertices.clone();
        vs.sort_by_key(|&v| g.name_rank(v));
        for (i, &x) in vs.iter().enumerate() {
            if let Some(&y) = vs[i + 1..].iter().find(|&&y| !g.adjacent(x, y)) {
                return Membership::No(IncompleteBlock { block: vs, missing: (x, y) });
            }
        }
    }
    Membership::Yes(())
}

/// An induced `K_{1,3}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claw {
    pub center: VertexId,
    pub leaves: [VertexId; 3],
}

impl Claw {
    pub fn validate(&self, g: &EdgeColoredGraph) -> bool {
        let [a, b, c] = self.leaves;
        self.leaves.iter().all(|&l| l != self.center && g.adjacent(self.center, l))
            && a != b
            && b != c
            && a != c
            && !g.adjacent(a, b)
            && !g.adjacent(b, c)
            && !g.adjacent(a, c)
    }
}

pub fn is_claw_free(g: &EdgeColoredGraph) -> Membership<(), Claw> {
    for &center in g.vertices_by_name() {
        let mut nbrs: Vec<VertexId> = g.neighbors(center).iter().map(|&(w, _)| w).collect();
        nbrs.sort_by_key(|&v| g.name_rank(v));
        for (i, &a) in nbrs.iter().enumerate() {
            for (j, &b) in nbrs.iter().enumerate().skip(i + 1) {
                if g.adjacent(a, b) {
                    continue;
                }
                if let Some(&c) = nbrs[j + 1..].iter().find(|&&c| !g.adjacent(a, c) && !g.adjacent(b, c)) {
                    return Membership::No(Claw { center, leaves: [a, b, c] });
                }
            }
        }
    }
    Membership::Yes(())
}

/// Largest number of shortest paths between two vertices, with the first
/// pair (by name) attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Geodecity {
    pub max: u64,
    pub pair: Option<(VertexId, VertexId)>,
}

pub fn geodecity(g: &EdgeColoredGraph) -> Result<Geodecity, GraphError> {
    let order = g.vertices_by_name();
    let mut best = Geodecity { max: if order.is_empty() { 0 } else { 1 }, pair: None };
    for (i, &u) in order.iter().enumerate() {
        let dag = dag_unchecked(g, u);
        for &v in &order[i + 1..] {
            if dag.dist(v).is_none() {
                return Err(GraphError::Disconnected(g.name(u).to_string(), g.name(v).to_string()));
            }
            let count = dag.path_count(v);
            if best.pair.is_none() || count > best.max {
                best = Geodecity { max: count, pair: Some((u, v)) };
            }
        }
    }
    Ok(best)
}

/// A class that the `recognize` command can test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphClass {
    Bipartite,
    Outerplanar,
    Chordal,
    Interval,
    ClawFree,
    Block,
    /// `Some(k)` asks for exactly `k`-regular.
    Regular(Option<usize>),
    /// At most this many shortest paths per pair; 1 means geodetic.
    Geodetic(u64),
    /// Chordal with largest clique exactly this size.
    MaxClique(usize),
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphClass::Bipartite => f.write_str("bipartite"),
            GraphClass::Outerplanar => f.write_str("outerplanar"),
            GraphClass::Chordal => f.write_str("chordal"),
            GraphClass::Interval => f.write_str("interval"),
            GraphClass::ClawFree => f.write_str("claw-free"),
            GraphClass::Block => f.write_str("block"),
            GraphClass::Regular(None) => f.write_str("regular"),
            GraphClass::Regular(Some(k)) => write!(f, "regular={k}"),
            GraphClass::Geodetic(1) => f.write_str("geodetic"),
            GraphClass::Geodetic(k) => write!(f, "geodetic={k}"),
            GraphClass::MaxClique(k) => write!(f, "max-clique={k}"),
        }
    }
}

impl FromStr for GraphClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (name, arg) = match s.split_once('=') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        let number = |a: Option<&str>| -> Result<u64, String> {
            a.ok_or_else(|| format!("class `{name}` needs a parameter, as in `{name}=K`"))?
                .parse()
                .map_err(|_| format!("bad parameter in class `{s}`"))
        };
        Ok(match (name, arg) {
            ("bipartite", None) => GraphClass::Bipartite,
            ("outerplanar", None) => GraphClass::Outerplanar,
            ("chordal", None) => GraphClass::Chordal,
            ("interval", None) => GraphClass::Interval,
            ("claw-free", None) => GraphClass::ClawFree,
            ("block", None) => GraphClass::Block,
            ("regular", None) => GraphClass::Regular(None),
            ("regular", a) => GraphClass::Regular(Some(number(a)? as usize)),
            ("geodetic", None) => GraphClass::Geodetic(1),
            ("geodetic", a) => GraphClass::Geodetic(number(a)?),
            ("max-clique", a) => GraphClass::MaxClique(number(a)? as usize),
            _ => return Err(format!("unknown class `{s}`")),
        })
    }
}

/// One recognizer answer in serializable form.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ClassReport {
    pub class: String,
    /// `yes`, `no` or `unknown`.
    pub verdict: String,
    pub certificate: Value,
}

fn names(g: &EdgeColoredGraph, vs: &[VertexId]) -> Value {
    vs.iter().map(|&v| g.name(v)).collect()
}

fn report(class: GraphClass, verdict: &str, certificate: Value) -> ClassReport {
    ClassReport { class: class.to_string(), verdict: verdict.to_string(), certificate }
}

fn membership_report<Y, N>(
    class: GraphClass,
    m: Membership<Y, N>,
    yes: impl FnOnce(Y) -> Value,
    no: impl FnOnce(N) -> Value,
) -> ClassReport {
    match m {
        Membership::Yes(y) => report(class, "yes", yes(y)),
        Membership::No(n) => report(class, "no", no(n)),
        Membership::Unknown(why) => report(class, "unknown", json!({ "reason": why })),
    }
}

/// Runs the recognizer for `class` and packages its certificate.
pub fn recognize(g: &EdgeColoredGraph, class: GraphClass) -> ClassReport {
    let pair = |(a, b): (VertexId, VertexId)| json!([g.name(a), g.name(b)]);
    match class {
        GraphClass::Bipartite => membership_report(
            class,
            is_bipartite(g),
            |c| {
                let part = |s: bool| -> Vec<&str> {
                    g.vertices_by_name().iter().filter(|v| c.0[v.index()] == s).map(|&v| g.name(v)).collect()
                };
                json!({ "sides": [part(false), part(true)] })
            },
            |c| json!({ "odd_cycle": names(g, &c.0) }),
        ),
        GraphClass::Outerplanar => membership_report(
            class,
            is_outerplanar(g),
            |c| json!({ "outer_cycles": c.0.iter().map(|cy| names(g, cy)).collect::<Vec<_>>() }),
            |n| match n {
                NotOuterplanar::TooManyEdges { block, edges } => {
                    json!({ "dense_block": names(g, &block), "edges": edges })
                }
                NotOuterplanar::NoHamiltonianCycle { block } => json!({ "non_hamiltonian_block": names(g, &block) }),
                NotOuterplanar::CrossingChords { cycle, first, second } => json!({
                    "cycle": names(g, &cycle),
                    "crossing_chords": [pair(first), pair(second)],
                }),
            },
        ),
        GraphClass::Chordal => membership_report(
            class,
            is_chordal(g),
            |o| json!({ "elimination_order": names(g, &o.0) }),
            |c| json!({ "induced_cycle": names(g, &c.0) }),
        ),
        GraphClass::Interval => membership_report(
            class,
            is_interval(g),
            |p| json!({ "clique_path": p.0.iter().map(|c| names(g, c)).collect::<Vec<_>>() }),
            |n| match n {
                NotInterval::NotChordal(c) => json!({ "induced_cycle": names(g, &c.0) }),
                NotInterval::NoCliquePath => json!({ "no_clique_path": true }),
            },
        ),
        GraphClass::ClawFree => membership_report(
            class,
            is_claw_free(g),
            |()| Value::Null,
            |c| json!({ "center": g.name(c.center), "leaves": names(g, &c.leaves) }),
        ),
        GraphClass::Block => membership_report(
            class,
            is_block_graph(g),
            |()| Value::Null,
            |b| json!({ "block": names(g, &b.block), "missing_edge": pair(b.missing) }),
        ),
        GraphClass::Regular(want) => match regularity(g) {
            Regularity::Regular(k) if want.is_none_or(|w| w == k) => report(class, "yes", json!({ "degree": k })),
            Regularity::Regular(k) => report(class, "no", json!({ "degree": k })),
            Regularity::Irregular { vertex, degree, expected } => report(
                class,
                "no",
                json!({ "vertex": g.name(vertex), "degree": degree, "expected": expected }),
            ),
        },
        GraphClass::Geodetic(k) => match geodecity(g) {
            Ok(geo) => {
                let cert = json!({ "geodecity": geo.max, "pair": geo.pair.map(pair) });
                report(class, if geo.max <= k { "yes" } else { "no" }, cert)
            }
            Err(e) => report(class, "no", json!({ "reason": e.to_string() })),
        },
        GraphClass::MaxClique(k) => match is_chordal(g) {
            Membership::Yes(_) => {
                let size = max_clique_size_chordal(g).unwrap_or(0);
                report(class, if size == k { "yes" } else { "no" }, json!({ "max_clique": size }))
            }
            Membership::No(c) => report(class, "no", json!({ "induced_cycle": names(g, &c.0) })),
            Membership::Unknown(why) => report(class, "unknown", json!({ "reason": why })),
        },
    }
}
