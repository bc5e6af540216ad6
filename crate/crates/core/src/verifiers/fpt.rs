use std::collections::VecDeque;

use super::colorset::insert_minimal;
use super::{Algorithm, ColorSet, Stats, Verdict, VerifyError, COLOR_GUARD};
use crate::graph::paths::dag_unchecked;
use crate::graph::{EdgeColoredGraph, VertexId};

/// Minimal color sets of rainbow paths from one source.
///
/// `family(v)` is an antichain: every set of colors used by some rainbow
/// source-to-`v` path contains one of its members, and every member is the
/// exact color set of such a path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachFamilies {
    source: VertexId,
    families: Vec<Vec<ColorSet>>,
}

impl ReachFamilies {
    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn family(&self, v: VertexId) -> &[ColorSet] {
        &self.families[v.index()]
    }

    pub fn reachable(&self, v: VertexId) -> bool {
        !self.families[v.index()].is_empty()
    }

    /// Is there a rainbow path to `v` using only colors from `allowed`?
    pub fn reachable_within(&self, v: VertexId, allowed: ColorSet) -> bool {
        self.families[v.index()].iter().any(|s| s.is_subset(allowed))
    }

    fn total_sets(&self) -> u64 {
        self.families.iter().map(|f| f.len() as u64).sum()
    }
}

fn check_guard(g: &EdgeColoredGraph, guard: usize) -> Result<(), VerifyError> {
    let guard = guard.min(32);
    if g.color_count() > guard {
        return Err(VerifyError::ColorGuard { colors: g.color_count(), guard });
    }
    Ok(())
}

/// Rainbow reachability from `s` with the default color guard.
pub fn rainbow_reach_fpt(g: &EdgeColoredGraph, s: VertexId) -> Result<ReachFamilies, VerifyError> {
    rainbow_reach_fpt_with_guard(g, s, COLOR_GUARD)
}

/// Rainbow reachability from `s`; refuses when the graph has more than
/// `guard` colors (hard cap 32).
pub fn rainbow_reach_fpt_with_guard(
    g: &EdgeColoredGraph,
    s: VertexId,
    guard: usize,
) -> Result<ReachFamilies, VerifyError> {
    g.check_vertex(s)?;
    check_guard(g, guard)?;
    Ok(reach(g, s))
}

fn reach(g: &EdgeColoredGraph, s: VertexId) -> ReachFamilies {
    let mut families = vec![Vec::new(); g.vertex_count()];
    families[s.index()].push(ColorSet::EMPTY);
    // FIFO pops sets by nondecreasing size, so nothing popped was dominated
    // after being queued
    let mut queue = VecDeque::from([(s, ColorSet::EMPTY)]);
    while let Some((v, used)) = queue.pop_front() {
        for &(w, e) in g.neighbors(v) {
            let c = g.edge(e).color;
            if used.contains(c) {
                continue;
            }
            let next = used.with(c);
            if insert_minimal(&mut families[w.index()], next) {
                queue.push_back((w, next));
            }
        }
    }
    ReachFamilies { source: s, families }
}

pub(super) fn rc_verify_fpt(g: &EdgeColoredGraph, guard: usize) -> Result<Verdict, VerifyError> {
    check_guard(g, guard)?;
    let mut stats = Stats::default();
    let order = g.vertices_by_name();
    for (i, &u) in order.iter().enumerate() {
        let fam = reach(g, u);
        stats.states_explored += fam.total_sets();
        for &v in &order[i + 1..] {
            stats.pairs_checked += 1;
            if !fam.reachable(v) {
                return Ok(Verdict::no(Algorithm::Fpt, (u, v), stats));
            }
        }
    }
    Ok(Verdict::yes(Algorithm::Fpt, stats))
}

/// Strong rainbow connectivity by the subset DP restricted to each source's
/// shortest-path DAG. Every DAG path is a shortest path, so a nonempty family
/// at `v` means a rainbow geodesic exists.
pub fn src_verify_fpt(g: &EdgeColoredGraph) -> Result<Verdict, VerifyError> {
    check_guard(g, COLOR_GUARD)?;
    let mut stats = Stats::default();
    let order = g.vertices_by_name();
    for (i, &u) in order.iter().enumerate() {
        let dag = dag_unchecked(g, u);
        let mut families: Vec<Vec<ColorSet>> = vec![Vec::new(); g.vertex_count()];
        families[u.index()].push(ColorSet::EMPTY);
        for &v in dag.topological_order().iter().skip(1) {
            let mut fam = Vec::new();
            for &(p, e) in dag.preds(v) {
                let c = g.edge(e).color;
                for &set in &families[p.index()] {
                    if !set.contains(c) {
                        insert_minimal(&mut fam, set.with(c));
                    }
                }
            }
            stats.states_explored += fam.len() as u64;
            families[v.index()] = fam;
        }
        for &v in &order[i + 1..] {
            stats.pairs_checked += 1;
            if families[v.index()].is_empty() {
                return Ok(Verdict::no(Algorithm::Fpt, (u, v), stats));
            }
        }
    }
    Ok(Verdict::yes(Algorithm::Fpt, stats))
}
