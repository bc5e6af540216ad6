//! Deciding rainbow and strong rainbow connectivity.
//!
//! | question | algorithm | entry point |
//! |---|---|---|
//! | rainbow, all pairs | color-subset DP | [`rc_verify`] with [`RcAlgorithm::Fpt`] |
//! | rainbow, all pairs | per-pair state search | [`rc_verify`] with [`RcAlgorithm::Brute`] |
//! | rainbow, one pair | state search with witness | [`rainbow_path_between`] |
//! | strong, all pairs | geodesic enumeration | [`src_verify_enumerate`] |
//! | strong, all pairs | bounded geodecity | [`src_verify_kgeodetic`], [`src_verify_geodetic`] |
//! | strong, all pairs | color-subset DP on geodesic DAGs | [`src_verify_fpt`] |
//!
//! Every all-pairs verdict reports the lexicographically first failing pair
//! (by vertex names); unreachable pairs count as failures.

mod colorset;
mod fpt;
mod search;
mod strong;

pub use colorset::ColorSet;
pub(crate) use colorset::ColorBits;
pub use fpt::{rainbow_reach_fpt, rainbow_reach_fpt_with_guard, src_verify_fpt, ReachFamilies};
pub use search::rainbow_path_between;
pub use strong::{
    rainbow_shortest_path_between, src_verify_enumerate, src_verify_geodetic,
    src_verify_kgeodetic, CapPolicy,
};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgeColoredGraph, GraphError, PathWitness, VertexId};

/// Default bound on the number of colors the subset DP accepts.
pub const COLOR_GUARD: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Fpt,
    Brute,
    Enumerate,
    Geodetic,
    KGeodetic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Stats {
    pub pairs_checked: u64,
    pub states_explored: u64,
}

/// Outcome of a connectivity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub connected: bool,
    /// Present exactly when `connected` is false.
    pub failing_pair: Option<(VertexId, VertexId)>,
    /// Only single-pair queries attach a witness.
    pub witness: Option<PathWitness>,
    pub algorithm: Algorithm,
    pub stats: Stats,
}

impl Verdict {
    fn yes(algorithm: Algorithm, stats: Stats) -> Self {
        Verdict { connected: true, failing_pair: None, witness: None, algorithm, stats }
    }

    fn no(algorithm: Algorithm, pair: (VertexId, VertexId), stats: Stats) -> Self {
        Verdict { connected: false, failing_pair: Some(pair), witness: None, algorithm, stats }
    }

    pub fn failing_names<'g>(&self, g: &'g EdgeColoredGraph) -> Option<(&'g str, &'g str)> {
        self.failing_pair.map(|(u, v)| (g.name(u), g.name(v)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("{colors} colors exceed the subset-DP guard of {guard}; use the brute or enumeration algorithm")]
    ColorGuard { colors: usize, guard: usize },
    #[error("pair ({u}, {v}) has {count} shortest paths, above the cap of {cap}")]
    CapExceeded { u: String, v: String, count: u64, cap: u64 },
    #[error("pair ({u}, {v}) has {count} shortest paths; graph is not {k_max}-geodetic")]
    GeodecityExceeded { u: String, v: String, count: u64, k_max: u64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RcAlgorithm {
    Fpt,
    Brute,
}

/// Decides whether every pair of vertices is joined by a rainbow path.
pub fn rc_verify(g: &EdgeColoredGraph, algo: RcAlgorithm) -> Result<Verdict, VerifyError> {
    match algo {
        RcAlgorithm::Fpt => fpt::rc_verify_fpt(g, COLOR_GUARD),
        RcAlgorithm::Brute => Ok(rc_verify_brute(g)),
    }
}

fn rc_verify_brute(g: &EdgeColoredGraph) -> Verdict {
    let mut stats = Stats::default();
    let order = g.vertices_by_name();
    for (i, &u) in order.iter().enumerate() {
        for &v in &order[i + 1..] {
            stats.pairs_checked += 1;
            let (found, states) = search::search(g, u, v);
            stats.states_explored += states;
            if found.is_none() {
                return Verdict::no(Algorithm::Brute, (u, v), stats);
            }
        }
    }
    Verdict::yes(Algorithm::Brute, stats)
}

/// Pairs `(u, v)` with `u` before `v` in name order, in lexicographic order.
pub(crate) fn ordered_pairs(g: &EdgeColoredGraph) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
    let order = g.vertices_by_name();
    order
        .iter()
        .enumerate()
        .flat_map(move |(i, &u)| order[i + 1..].iter().map(move |&v| (u, v)))
}
