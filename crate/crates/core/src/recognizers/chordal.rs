use std::collections::{HashMap, HashSet, VecDeque};

use super::{InducedCycle, Membership};
use crate::graph::{EdgeColoredGraph, VertexId};

/// A perfect elimination order: each vertex's neighbors later in the order
/// form a clique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrder(pub Vec<VertexId>);

impl EliminationOrder {
    /// Positions of each vertex in the order.
    fn positions(&self, n: usize) -> Option<Vec<usize>> {
        let mut pos = vec![usize::MAX; n];
        for (i, v) in self.0.iter().enumerate() {
            if v.index() >= n || pos[v.index()] != usize::MAX {
                return None;
            }
            pos[v.index()] = i;
        }
        pos.iter().all(|&p| p != usize::MAX).then_some(pos)
    }

    /// Neighbors of `v` placed after it.
    fn later(&self, g: &EdgeColoredGraph, pos: &[usize], v: VertexId) -> Vec<VertexId> {
        g.neighbors(v)
            .iter()
            .map(|&(w, _)| w)
            .filter(|w| pos[w.index()] > pos[v.index()])
            .collect()
    }

    /// Independent check that this is a perfect elimination order of `g`.
    pub fn validate(&self, g: &EdgeColoredGraph) -> bool {
        let Some(pos) = self.positions(g.vertex_count()) else {
            return false;
        };
        self.0.iter().all(|&v| {
            let later = self.later(g, &pos, v);
            later.iter().enumerate().all(|(i, &x)| later[i + 1..].iter().all(|&y| g.adjacent(x, y)))
        })
    }
}

/// Maximum cardinality search; the reverse visiting order is a perfect
/// elimination order exactly when the graph is chordal.
fn mcs_order(g: &EdgeColoredGraph) -> Vec<VertexId> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut buckets: Vec<Vec<VertexId>> = vec![Vec::new(); n + 1];
    // reverse name order so pops come out in name order
    for &v in g.vertices_by_name().iter().rev() {
        buckets[0].push(v);
    }
    let mut top = 0usize;
    let mut visit = Vec::with_capacity(n);
    while visit.len() < n {
        let v = loop {
            match buckets[top].pop() {
                Some(v) if !done[v.index()] && weight[v.index()] == top => break v,
                Some(_) => continue,
                None => top -= 1,
            }
        };
        done[v.index()] = true;
        visit.push(v);
        for &(w, _) in g.neighbors(v) {
            if !done[w.index()] {
                weight[w.index()] += 1;
                buckets[weight[w.index()]].push(w);
                top = top.max(weight[w.index()]);
            }
        }
    }
    visit.reverse();
    visit
}

/// Chordality with a perfect elimination order, or an induced cycle of
/// length at least 4.
pub fn is_chordal(g: &EdgeColoredGraph) -> Membership<EliminationOrder, InducedCycle> {
    let order = EliminationOrder(mcs_order(g));
    if order.validate(g) {
        return Membership::Yes(order);
    }
    Membership::No(find_induced_cycle(g).expect("a non-chordal graph has a long induced cycle"))
}

/// Searches every vertex `v` and pair of non-adjacent neighbors `x`, `y`
/// for a shortest `x`-`y` path avoiding the rest of `N[v]`.
fn find_induced_cycle(g: &EdgeColoredGraph) -> Option<InducedCycle> {
    let n = g.vertex_count();
    for &v in g.vertices_by_name() {
        let nbrs: Vec<VertexId> = g.neighbors(v).iter().map(|&(w, _)| w).collect();
        let mut blocked = vec![false; n];
        blocked[v.index()] = true;
        for w in &nbrs {
            blocked[w.index()] = true;
        }
        for (i, &x) in nbrs.iter().enumerate() {
            for &y in &nbrs[i + 1..] {
                if g.adjacent(x, y) {
                    continue;
                }
                if let Some(path) = bfs_path(g, x, y, &blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(InducedCycle(cycle));
                }
            }
        }
    }
    None
}

/// Shortest `x`-`y` path whose interior avoids `blocked`.
fn bfs_path(g: &EdgeColoredGraph, x: VertexId, y: VertexId, blocked: &[bool]) -> Option<Vec<VertexId>> {
    let mut parent: HashMap<VertexId, VertexId> = HashMap::new();
    parent.insert(x, x);
    let mut queue = VecDeque::from([x]);
    while let Some(a) = queue.pop_front() {
        for &(b, _) in g.neighbors(a) {
            if parent.contains_key(&b) {
                continue;
            }
            if b == y {
                let mut path = vec![y, a];
                let mut cur = a;
                while cur != x {
                    cur = parent[&cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            if !blocked[b.index()] {
                parent.insert(b, a);
                queue.push_back(b);
            }
        }
    }
    None
}

/// Maximal cliques of a chordal graph, read off its elimination order.
pub fn maximal_cliques(g: &EdgeColoredGraph, peo: &EliminationOrder) -> Vec<Vec<VertexId>> {
    let pos = peo.positions(g.vertex_count()).expect("order covers the graph");
    let mut candidates: Vec<Vec<VertexId>> = peo
        .0
        .iter()
        .map(|&v| {
            let mut c = peo.later(g, &pos, v);
            c.push(v);
            c.sort_by_key(|&w| g.name_rank(w));
            c
        })
        .collect();
    candidates.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let mut kept: Vec<Vec<VertexId>> = Vec::new();
    let mut kept_sets: Vec<HashSet<VertexId>> = Vec::new();
    for c in candidates {
        if kept_sets.iter().any(|k| c.iter().all(|v| k.contains(v))) {
            continue;
        }
        kept_sets.push(c.iter().copied().collect());
        kept.push(c);
    }
    kept
}

/// Largest clique size of a chordal graph; `None` if `g` is not chordal.
pub fn max_clique_size_chordal(g: &EdgeColoredGraph) -> Option<usize> {
    let Membership::Yes(peo) = is_chordal(g) else {
        return None;
    };
    let pos = peo.positions(g.vertex_count())?;
    Some(peo.0.iter().map(|&v| 1 + peo.later(g, &pos, v).len()).max().unwrap_or(0))
}

/// Maximal cliques in a linear order where the cliques containing any
/// vertex are consecutive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliquePath(pub Vec<Vec<VertexId>>);

impl CliquePath {
    /// Checks that every clique is complete, every edge lies in some clique,
    /// and each vertex's cliques are consecutive. Maximality is not checked.
    pub fn validate(&self, g: &EdgeColoredGraph) -> bool {
        let n = g.vertex_count();
        let mut first = vec![usize::MAX; n];
        let mut last = vec![0usize; n];
        let mut count = vec![0usize; n];
        for (i, c) in self.0.iter().enumerate() {
            for (a, &x) in c.iter().enumerate() {
                if x.index() >= n || c[a + 1..].iter().any(|&y| y == x || !g.adjacent(x, y)) {
                    return false;
                }
                first[x.index()] = first[x.index()].min(i);
                last[x.index()] = i;
                count[x.index()] += 1;
            }
        }
        let consecutive = (0..n).all(|v| count[v] == 0 || last[v] - first[v] + 1 == count[v]);
        let covered = g.edges().iter().all(|e| {
            let (a, b) = (e.u.index(), e.v.index());
            first[a] != usize::MAX
                && first[b] != usize::MAX
                && first[a].max(first[b]) <= last[a].min(last[b])
        });
        consecutive && covered && g.vertices().all(|v| count[v.index()] > 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotInterval {
    NotChordal(InducedCycle),
    /// No linear arrangement of the maximal cliques exists.
    NoCliquePath,
}

/// Search budget for the clique arrangement, in placement attempts.
pub const INTERVAL_BUDGET: u64 = 2_000_000;

pub fn is_interval(g: &EdgeColoredGraph) -> Membership<CliquePath, NotInterval> {
    is_interval_with_budget(g, INTERVAL_BUDGET)
}

pub fn is_interval_with_budget(g: &EdgeColoredGraph, budget: u64) -> Membership<CliquePath, NotInterval> {
    let peo = match is_chordal(g) {
        Membership::Yes(peo) => peo,
        Membership::No(cycle) => return Membership::No(NotInterval::NotChordal(cycle)),
        Membership::Unknown(why) => return Membership::Unknown(why),
    };
    if g.vertex_count() == 0 {
        return Membership::Yes(CliquePath(vec![]));
    }
    // isolated vertices are cliques of their own and fit anywhere
    let cliques = maximal_cliques(g, &peo);
    let mut search = Arrangement::new(g, &cliques, budget);
    let end = lexbfs_last(g);
    let mut starts: Vec<usize> = (0..cliques.len()).filter(|&i| cliques[i].contains(&end)).collect();
    starts.extend((0..cliques.len()).filter(|&i| !cliques[i].contains(&end)));
    for s in starts {
        match search.run_from(s) {
            Some(Some(order)) => {
                return Membership::Yes(CliquePath(order.into_iter().map(|i| cliques[i].clone()).collect()))
            }
            Some(None) => continue,
            None => {
                return Membership::Unknown(format!(
                    "clique arrangement exceeded {budget} steps over {} cliques",
                    cliques.len()
                ))
            }
        }
    }
    Membership::No(NotInterval::NoCliquePath)
}

/// Last vertex of a lexicographic breadth-first search started at the
/// first vertex by name.
fn lexbfs_last(g: &EdgeColoredGraph) -> VertexId {
    let n = g.vertex_count();
    // partition refinement over a list of classes
    let mut classes: Vec<Vec<VertexId>> = vec![g.vertices_by_name().to_vec()];
    let mut done = vec![false; n];
    let mut last = g.vertices_by_name()[0];
    while let Some(front) = classes.first_mut() {
        let v = front.remove(0);
        if front.is_empty() {
            classes.remove(0);
        }
        done[v.index()] = true;
        last = v;
        let adjacent: HashSet<VertexId> =
            g.neighbors(v).iter().map(|&(w, _)| w).filter(|w| !done[w.index()]).collect();
        let mut refined = Vec::with_capacity(classes.len() * 2);
        for class in classes {
            let (inside, outside): (Vec<_>, Vec<_>) = class.into_iter().partition(|w| adjacent.contains(w));
            if !inside.is_empty() {
                refined.push(inside);
            }
            if !outside.is_empty() {
                refined.push(outside);
            }
        }
        classes = refined;
    }
    last
}

struct Arrangement<'a> {
    cliques: &'a [Vec<VertexId>],
    // cliques containing each vertex
    member_of: Vec<Vec<usize>>,
    budget: u64,
    steps: u64,
    failed: HashSet<(Vec<u64>, usize)>,
}

impl<'a> Arrangement<'a> {
    fn new(g: &EdgeColoredGraph, cliques: &'a [Vec<VertexId>], budget: u64) -> Self {
        let mut member_of = vec![Vec::new(); g.vertex_count()];
        for (i, c) in cliques.iter().enumerate() {
            for v in c {
                member_of[v.index()].push(i);
            }
        }
        Arrangement { cliques, member_of, budget, steps: 0, failed: HashSet::new() }
    }

    /// `Some(Some(order))` on success, `Some(None)` when no arrangement
    /// starts at `start`, `None` when the budget ran out.
    fn run_from(&mut self, start: usize) -> Option<Option<Vec<usize>>> {
        let k = self.cliques.len();
        let mut placed = vec![0u64; k.div_ceil(64)];
        set(&mut placed, start);
        let mut order = vec![start];
        match self.extend(&mut placed, &mut order) {
            Ok(true) => Some(Some(order)),
            Ok(false) => Some(None),
            Err(()) => None,
        }
    }

    fn extend(&mut self, placed: &mut Vec<u64>, order: &mut Vec<usize>) -> Result<bool, ()> {
        if order.len() == self.cliques.len() {
            return Ok(true);
        }
        let last = *order.last().unwrap();
        if self.failed.contains(&(placed.clone(), last)) {
            return Ok(false);
        }
        // vertices of the last clique that still have unplaced cliques must
        // continue into the next one
        let open: Vec<VertexId> = self.cliques[last]
            .iter()
            .copied()
            .filter(|v| self.member_of[v.index()].iter().any(|&c| !get(placed, c)))
            .collect();
        let candidates: Vec<usize> = match open.first() {
            Some(v) => self.member_of[v.index()].iter().copied().filter(|&c| !get(placed, c)).collect(),
            None => (0..self.cliques.len()).filter(|&c| !get(placed, c)).collect(),
        };
        for next in candidates {
            self.steps += 1;
            if self.steps > self.budget {
                return Err(());
            }
            if !open.iter().all(|v| self.cliques[next].contains(v)) {
                continue;
            }
            // a vertex seen before must still be running in the last clique
            let reopens = self.cliques[next].iter().any(|v| {
                !self.cliques[last].contains(v) && self.member_of[v.index()].iter().any(|&c| get(placed, c))
            });
            if reopens {
                continue;
            }
            set(placed, next);
            order.push(next);
            if self.extend(placed, order)? {
                return Ok(true);
            }
            order.pop();
            unset(placed, next);
        }
        self.failed.insert((placed.clone(), last));
        Ok(false)
    }
}

fn get(bits: &[u64], i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

fn set(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn unset(bits: &mut [u64], i: usize) {
    bits[i / 64] &= !(1 << (i % 64));
}
