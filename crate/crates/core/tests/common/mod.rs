//! Oracles shared by the integration tests. Nothing here calls into the
//! algorithms under test; graphs are read only through adjacency and names.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rainbow_core::graph::{ColorId, EdgeColoredGraph, GraphBuilder, VertexId};
use rainbow_core::sat::CnfFormula;
use rand::Rng;

/// Signed DIMACS clauses of a formula.
pub fn signed(f: &CnfFormula) -> Vec<Vec<i32>> {
    f.clauses().iter().map(|c| c.iter().map(|l| l.to_dimacs()).collect()).collect()
}

/// Satisfiability by trying every assignment.
pub fn sat_oracle(n: u32, clauses: &[Vec<i32>]) -> bool {
    (0u64..1 << n).any(|bits| {
        clauses.iter().all(|c| {
            c.iter().any(|&l| {
                let value = bits >> (l.unsigned_abs() - 1) & 1 == 1;
                if l > 0 { value } else { !value }
            })
        })
    })
}

/// Formula with `m` size-3 clauses where every variable occurs at most
/// three times. Needs `m <= n`.
pub fn random_size3_formula<R: Rng>(rng: &mut R, n: u32, m: usize) -> CnfFormula {
    assert!(m <= n as usize);
    loop {
        let mut slots: Vec<u32> = (1..=n).flat_map(|v| [v, v, v]).collect();
        let mut clauses: Vec<Vec<i32>> = Vec::new();
        for _ in 0..m {
            let mut clause = Vec::new();
            for _ in 0..3 {
                let v = slots.swap_remove(rng.gen_range(0..slots.len()));
                clause.push(if rng.gen_bool(0.5) { v as i32 } else { -(v as i32) });
            }
            clauses.push(clause);
        }
        let refs: Vec<&[i32]> = clauses.iter().map(|c| c.as_slice()).collect();
        if let Ok(f) = CnfFormula::from_signed(n, &refs) {
            return f;
        }
    }
}

/// Adjacency matrix with color ids, `None` for non-edges.
pub fn matrix(g: &EdgeColoredGraph) -> Vec<Vec<Option<usize>>> {
    let n = g.vertex_count();
    let mut m = vec![vec![None; n]; n];
    for e in g.edges() {
        m[e.u.index()][e.v.index()] = Some(e.color.index());
        m[e.v.index()][e.u.index()] = Some(e.color.index());
    }
    m
}

/// All-pairs distances by Floyd–Warshall; `u32::MAX` when unreachable.
pub fn floyd_warshall(g: &EdgeColoredGraph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let adj = matrix(g);
    let mut d = vec![vec![u32::MAX; n]; n];
    for i in 0..n {
        d[i][i] = 0;
        for j in 0..n {
            if adj[i][j].is_some() {
                d[i][j] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] != u32::MAX && d[k][j] != u32::MAX && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

fn dfs(
    adj: &[Vec<Option<usize>>],
    x: usize,
    target: usize,
    visited: &mut Vec<bool>,
    used: &mut BTreeSet<usize>,
    step_ok: &dyn Fn(usize, usize) -> bool,
) -> bool {
    if x == target {
        return true;
    }
    for w in 0..adj.len() {
        let Some(c) = adj[x][w] else { continue };
        if visited[w] || used.contains(&c) || !step_ok(x, w) {
            continue;
        }
        visited[w] = true;
        used.insert(c);
        let found = dfs(adj, w, target, visited, used, step_ok);
        used.remove(&c);
        visited[w] = false;
        if found {
            return true;
        }
    }
    false
}

/// Is there a rainbow simple path from `u` to `v`? Exhaustive.
pub fn rainbow_path_oracle(g: &EdgeColoredGraph, u: VertexId, v: VertexId) -> bool {
    let adj = matrix(g);
    let mut visited = vec![false; adj.len()];
    visited[u.index()] = true;
    dfs(&adj, u.index(), v.index(), &mut visited, &mut BTreeSet::new(), &|_, _| true)
}

/// Is there a rainbow shortest path from `u` to `v`? Walks only edges that
/// make progress along a geodesic.
pub fn rainbow_geodesic_oracle(g: &EdgeColoredGraph, d: &[Vec<u32>], u: VertexId, v: VertexId) -> bool {
    let (s, t) = (u.index(), v.index());
    if d[s][t] == u32::MAX {
        return false;
    }
    let adj = matrix(g);
    let mut visited = vec![false; adj.len()];
    visited[s] = true;
    let step = |x: usize, w: usize| d[s][w] == d[s][x] + 1 && d[w][t] + 1 == d[x][t];
    dfs(&adj, s, t, &mut visited, &mut BTreeSet::new(), &step)
}

/// Pairs `(u, v)` with `name(u) < name(v)`, in name order.
pub fn pairs_by_name(g: &EdgeColoredGraph) -> Vec<(VertexId, VertexId)> {
    let mut vs: Vec<VertexId> = g.vertices().collect();
    vs.sort_by(|a, b| g.name(*a).cmp(g.name(*b)));
    let mut out = Vec::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            out.push((vs[i], vs[j]));
        }
    }
    out
}

/// First failing pair for rainbow connectivity, or `None` if connected.
pub fn rc_oracle(g: &EdgeColoredGraph) -> Option<(VertexId, VertexId)> {
    pairs_by_name(g).into_iter().find(|&(u, v)| !rainbow_path_oracle(g, u, v))
}

/// First failing pair for strong rainbow connectivity.
pub fn src_oracle(g: &EdgeColoredGraph) -> Option<(VertexId, VertexId)> {
    let d = floyd_warshall(g);
    pairs_by_name(g).into_iter().find(|&(u, v)| !rainbow_geodesic_oracle(g, &d, u, v))
}

/// Number of shortest `u`-`v` paths by explicit enumeration.
pub fn shortest_path_count_oracle(g: &EdgeColoredGraph, d: &[Vec<u32>], u: usize, v: usize) -> u64 {
    if u == v {
        return 1;
    }
    let adj = matrix(g);
    (0..adj.len())
        .filter(|&w| adj[u][w].is_some() && d[w][v] != u32::MAX && d[w][v] + 1 == d[u][v])
        .map(|w| shortest_path_count_oracle(g, d, w, v))
        .sum()
}

/// Random connected graph on `v0..v{n-1}` with colors `k0..k{k-1}`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64, k: usize) -> EdgeColoredGraph {
    loop {
        let mut b = GraphBuilder::new();
        for i in 0..n {
            b.add_vertex(&format!("v{i}")).unwrap();
        }
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    b.add_edge(&format!("v{i}"), &format!("v{j}"), &format!("k{}", rng.gen_range(0..k))).unwrap();
                }
            }
        }
        let g = b.build();
        let d = floyd_warshall(&g);
        if d[0].iter().all(|&x| x != u32::MAX) {
            return g;
        }
    }
}

/// Colors an edge may carry in an expected edge list. Fresh colors only
/// have to be unique, so they are compared by kind.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Paint {
    Named(String),
    Fresh,
}

pub type EdgeList = BTreeMap<(String, String), Paint>;

fn key(a: &str, b: &str) -> (String, String) {
    if a <= b { (a.to_string(), b.to_string()) } else { (b.to_string(), a.to_string()) }
}

fn add(list: &mut EdgeList, a: &str, b: &str, paint: Paint) {
    let previous = list.insert(key(a, b), paint);
    assert!(previous.is_none(), "oracle listed ({a}, {b}) twice");
}

fn named(s: String) -> Paint {
    Paint::Named(s)
}

/// Color of the chord for each literal, as `(clause, slot) -> color`.
/// Occurrence ranks follow clause order, then slot order.
fn literal_colors(clauses: &[Vec<i32>]) -> BTreeMap<(usize, usize), String> {
    let mut seen: BTreeMap<u32, u32> = BTreeMap::new();
    let mut out = BTreeMap::new();
    for (j, c) in clauses.iter().enumerate() {
        for (k, &l) in c.iter().enumerate() {
            let i = l.unsigned_abs();
            let rank = seen.entry(i).and_modify(|r| *r += 1).or_insert(1);
            // a positive literal is blocked by the negative path and vice versa
            let color = if l > 0 { format!("cb.{i}.{rank}") } else { format!("c.{i}.{rank}") };
            out.insert((j + 1, k + 1), color);
        }
    }
    out
}

/// Which layered construction to list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layer {
    Base,
    Io,
    Ib,
}

/// Expected edges of the base, interval outerplanar or interval block
/// construction for a formula whose clauses all have three literals.
pub fn layered_edges(layer: Layer, n: usize, clauses: &[Vec<i32>]) -> EdgeList {
    let m = clauses.len();
    let lit = literal_colors(clauses);
    let mut e = EdgeList::new();
    for i in 1..=n {
        let (a, u, v, b, ub, vb) =
            (format!("a.{i}"), format!("u.{i}"), format!("v.{i}"), format!("b.{i}"), format!("ub.{i}"), format!("vb.{i}"));
        add(&mut e, &a, &u, named(format!("c.{i}.1")));
        add(&mut e, &u, &v, named(format!("c.{i}.2")));
        add(&mut e, &v, &b, named(format!("c.{i}.3")));
        add(&mut e, &a, &ub, named(format!("cb.{i}.1")));
        add(&mut e, &ub, &vb, named(format!("cb.{i}.2")));
        add(&mut e, &vb, &b, named(format!("cb.{i}.3")));
        let bar = format!("cb.{i}");
        if layer != Layer::Base {
            for (x, y) in [(&u, &ub), (&u, &vb), (&v, &vb)] {
                add(&mut e, x, y, named(bar.clone()));
            }
        }
        if layer == Layer::Ib {
            for (x, y) in [(&a, &vb), (&a, &b), (&a, &v), (&u, &b), (&v, &ub), (&b, &ub)] {
                add(&mut e, x, y, named(bar.clone()));
            }
        }
        let next = if i < n { format!("a.{}", i + 1) } else { "p.1".to_string() };
        let paint = if layer == Layer::Base { Paint::Fresh } else { named(bar) };
        add(&mut e, &b, &next, paint);
    }
    for j in 1..=m {
        let p = format!("p.{j}");
        let pp = format!("pp.{j}");
        let q = format!("q.{j}");
        let qp = format!("qp.{j}");
        let r = |k: usize| format!("r.{j}.{k}");
        let rp = |k: usize| format!("rp.{j}.{k}");
        let prime = format!("c'.{j}");
        // W: the thick top and bottom paths
        for (x, y) in [(p.clone(), r(1)), (r(1), r(2)), (r(2), r(3)), (r(3), q.clone())] {
            add(&mut e, &x, &y, Paint::Fresh);
        }
        for (x, y) in [(qp.clone(), rp(3)), (rp(3), rp(2)), (rp(2), rp(1)), (rp(1), pp.clone())] {
            add(&mut e, &x, &y, Paint::Fresh);
        }
        add(&mut e, &p, &pp, named(prime.clone()));
        add(&mut e, &q, &qp, named(format!("c.{j}")));
        for k in 1..=3 {
            add(&mut e, &r(k), &rp(k), named(lit[&(j, k)].clone()));
        }
        if layer != Layer::Base {
            for (x, y) in [(r(1), pp.clone()), (r(2), rp(1)), (r(3), rp(2)), (q.clone(), rp(3))] {
                add(&mut e, &x, &y, named(prime.clone()));
            }
        }
        if layer == Layer::Ib {
            let z: Vec<(String, String)> = vec![
                (p.clone(), r(2)),
                (p.clone(), r(3)),
                (p.clone(), q.clone()),
                (p.clone(), qp.clone()),
                (p.clone(), rp(3)),
                (p.clone(), rp(2)),
                (p.clone(), rp(1)),
                (r(1), r(3)),
                (r(1), q.clone()),
                (r(1), qp.clone()),
                (r(1), rp(3)),
                (r(1), rp(2)),
                (r(2), q.clone()),
                (r(2), qp.clone()),
                (r(2), rp(3)),
                (r(2), pp.clone()),
                (r(3), qp.clone()),
                (r(3), rp(1)),
                (r(3), pp.clone()),
                (q.clone(), rp(2)),
                (q.clone(), rp(1)),
                (q.clone(), pp.clone()),
                (qp.clone(), rp(2)),
                (qp.clone(), rp(1)),
                (qp.clone(), pp.clone()),
                (rp(3), rp(1)),
                (rp(3), pp.clone()),
                (rp(2), pp.clone()),
            ];
            for (x, y) in z {
                add(&mut e, &x, &y, named(prime.clone()));
            }
        }
        let next = if j < m { format!("p.{}", j + 1) } else { "t".to_string() };
        add(&mut e, &qp, &next, named(prime));
    }
    for j in 1..m {
        add(&mut e, &format!("s.{j}"), &format!("s.{}", j + 1), named(format!("c.{j}")));
    }
    add(&mut e, &format!("s.{m}"), "a.1", named(format!("c.{m}")));
    e
}

/// Expected edges of the cubic construction for size-3 clauses, `m >= 3`.
pub fn cubic_edges(n: usize, clauses: &[Vec<i32>]) -> EdgeList {
    let m = clauses.len();
    assert!(m >= 3);
    let lit = literal_colors(clauses);
    let mut e = EdgeList::new();
    for i in 1..=n {
        let (a, u, v, b, ub, vb) =
            (format!("a.{i}"), format!("u.{i}"), format!("v.{i}"), format!("b.{i}"), format!("ub.{i}"), format!("vb.{i}"));
        add(&mut e, &a, &u, named(format!("c.{i}.1")));
        add(&mut e, &u, &v, named(format!("c.{i}.2")));
        add(&mut e, &v, &b, named(format!("c.{i}.3")));
        add(&mut e, &a, &ub, named(format!("cb.{i}.1")));
        add(&mut e, &ub, &vb, named(format!("cb.{i}.2")));
        add(&mut e, &vb, &b, named(format!("cb.{i}.3")));
        add(&mut e, &u, &vb, named(format!("cb.{i}")));
        add(&mut e, &ub, &v, named(format!("cb.{i}")));
        let next = if i < n { format!("a.{}", i + 1) } else { "p.1".to_string() };
        add(&mut e, &b, &next, named(format!("cb.{i}")));
    }
    for j in 1..=m {
        let p = format!("p.{j}");
        let pp = format!("pp.{j}");
        let q = format!("q.{j}");
        let qp = format!("qp.{j}");
        let r = |k: usize| format!("r.{j}.{k}");
        let rp = |k: usize| format!("rp.{j}.{k}");
        let prime = format!("c'.{j}");
        let top = [p.clone(), r(1), r(2), r(3), r(4), r(5), q.clone()];
        for w in top.windows(2) {
            add(&mut e, &w[0], &w[1], Paint::Fresh);
        }
        let bottom = [qp.clone(), rp(5), rp(4), rp(3), rp(2), rp(1), pp.clone()];
        for w in bottom.windows(2) {
            add(&mut e, &w[0], &w[1], Paint::Fresh);
        }
        add(&mut e, &p, &pp, named(prime.clone()));
        add(&mut e, &q, &qp, named(format!("c.{j}")));
        for k in 1..=3 {
            add(&mut e, &r(2 * k - 1), &rp(2 * k - 1), named(lit[&(j, k)].clone()));
        }
        for (x, y) in [(pp.clone(), r(2)), (rp(2), r(4)), (rp(4), q.clone())] {
            add(&mut e, &x, &y, named(prime.clone()));
        }
        let next = if j < m { format!("p.{}", j + 1) } else { "t.0".to_string() };
        add(&mut e, &qp, &next, named(prime));
    }
    let s = |j: usize| format!("s.{j}");
    let sp = |j: usize| format!("sp.{j}");
    for j in 1..m - 1 {
        add(&mut e, &s(j), &s(j + 1), named(format!("c.{j}")));
        add(&mut e, &sp(j), &sp(j + 1), named(format!("c.{j}")));
    }
    for j in 3..m {
        add(&mut e, &s(j), &sp(j), Paint::Fresh);
    }
    add(&mut e, &s(1), &sp(1), Paint::Fresh);
    add(&mut e, &sp(1), &s(2), named("c.1".into()));
    add(&mut e, &s(1), &sp(2), named("c.1".into()));
    add(&mut e, &s(m - 1), "a.0", named(format!("c.{}", m - 1)));
    add(&mut e, &sp(m - 1), "a.0", named(format!("c.{}", m - 1)));
    add(&mut e, "a.0", "a.1", named(format!("c.{m}")));
    for (x, y) in [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)] {
        add(&mut e, &format!("t.{x}"), &format!("t.{y}"), Paint::Fresh);
    }
    e
}

/// The graph's edges in the same form, with fresh colors (`f.N`) abstracted.
pub fn actual_edges(g: &EdgeColoredGraph) -> EdgeList {
    let mut e = EdgeList::new();
    for edge in g.edges() {
        let c = g.color_name(edge.color);
        let paint = if c.starts_with("f.") { Paint::Fresh } else { named(c.to_string()) };
        add(&mut e, g.name(edge.u), g.name(edge.v), paint);
    }
    e
}

/// Fresh colors must each appear on exactly one edge.
pub fn fresh_colors_unique(g: &EdgeColoredGraph) -> bool {
    let mut count: BTreeMap<&str, usize> = BTreeMap::new();
    for e in g.edges() {
        *count.entry(g.color_name(e.color)).or_default() += 1;
    }
    count.iter().filter(|(c, _)| c.starts_with("f.")).all(|(_, &k)| k == 1)
}

/// Random graph of diameter exactly 2.
pub fn random_diameter_two<R: Rng>(rng: &mut R, n: usize, p: f64, k: usize) -> EdgeColoredGraph {
    loop {
        let g = random_connected_graph(rng, n, p, k);
        let d = floyd_warshall(&g);
        if d.iter().flatten().max() == Some(&2) {
            return g;
        }
    }
}

/// Graph from `(u, v, color)` triples.
pub fn graph(edges: &[(&str, &str, &str)]) -> EdgeColoredGraph {
    EdgeColoredGraph::from_edges(edges.iter().copied()).unwrap()
}

/// The subgraph keeping only edges whose color passes `keep`.
pub fn color_subgraph(g: &EdgeColoredGraph, keep: impl Fn(ColorId) -> bool) -> EdgeColoredGraph {
    let mut b = GraphBuilder::new();
    for v in g.vertices() {
        b.add_vertex(g.name(v)).unwrap();
    }
    for e in g.edges().iter().filter(|e| keep(e.color)) {
        b.add_edge(g.name(e.u), g.name(e.v), g.color_name(e.color)).unwrap();
    }
    b.build()
}
