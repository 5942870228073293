//! Eulerian tours on the corresponding graph: Hierholzer search
//! (deterministic and seeded) and exhaustive tour enumeration, which serves
//! as the brute-force counting oracle.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::CorrespondingGraph;

/// Default edge-count cap for exhaustive tour enumeration.
pub const BRUTE_FORCE_EDGE_CAP: usize = 16;

/// A closed walk using every edge exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerianTour {
    start: usize,
    edges: Vec<usize>,
}

impl EulerianTour {
    pub fn start(&self) -> usize {
        self.start
    }

    /// Edge ordinals in traversal order.
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Checks the closed-tour invariants against the graph.
    pub fn is_valid_on(&self, g: &CorrespondingGraph) -> bool {
        if self.edges.len() != g.edge_count() {
            return false;
        }
        let mut used = vec![false; g.edge_count()];
        let mut at = self.start;
        for &e in &self.edges {
            if used[e] || g.edges()[e].from != at {
                return false;
            }
            used[e] = true;
            at = g.edges()[e].to;
        }
        at == self.start
    }
}

/// Finds a closed Eulerian tour starting at vertex 0 by Hierholzer's
/// algorithm, splicing sub-tours at the earliest position that still has
/// unused outgoing edges.
///
/// Without a seed, unused edges are taken smallest emitted code first, so the
/// result is fully deterministic. With a seed, each step picks uniformly
/// among the unused outgoing edges using ChaCha8 (a fixed, portable
/// generator), so identical seeds reproduce identical tours on any platform.
pub fn hierholzer_tour(g: &CorrespondingGraph, seed: Option<u64>) -> EulerianTour {
    let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
    let mut used = vec![false; g.edge_count()];
    // out_edges are sorted by emitted code, so taking the first unused one
    // realizes smallest-code-first in the deterministic mode
    let pick = |at: usize, used: &[bool], rng: &mut Option<ChaCha8Rng>| -> Option<usize> {
        let avail: Vec<usize> = g
            .out_edges(at)
            .iter()
            .copied()
            .filter(|&e| !used[e])
            .collect();
        if avail.is_empty() {
            return None;
        }
        match rng {
            Some(r) => Some(avail[r.gen_range(0..avail.len())]),
            None => Some(avail[0]),
        }
    };

    let walk = |start: usize, used: &mut Vec<bool>, rng: &mut Option<ChaCha8Rng>| -> Vec<usize> {
        let mut at = start;
        let mut cycle = Vec::new();
        // balance guarantees every walk from `start` closes at `start`
        while let Some(e) = pick(at, used, rng) {
            used[e] = true;
            at = g.edges()[e].to;
            cycle.push(e);
        }
        debug_assert_eq!(at, start);
        cycle
    };

    let mut tour = walk(0, &mut used, &mut rng);
    let mut pos = 0;
    while pos < tour.len() {
        let v = g.edges()[tour[pos]].from;
        if g.out_edges(v).iter().any(|&e| !used[e]) {
            let sub = walk(v, &mut used, &mut rng);
            let tail = tour.split_off(pos);
            tour.extend(sub);
            tour.extend(tail);
        } else {
            pos += 1;
        }
    }

    let tour = EulerianTour {
        start: 0,
        edges: tour,
    };
    debug_assert!(tour.is_valid_on(g));
    tour
}

/// Counts, by exhaustive backtracking, the Eulerian tours of `g` whose first
/// edge is `first_edge`. Factorial-time; refuses graphs above `limit` edges
/// (default [`BRUTE_FORCE_EDGE_CAP`]).
pub fn enumerate_tours(
    g: &CorrespondingGraph,
    first_edge: usize,
    limit: Option<usize>,
) -> Result<BigUint> {
    let cap = limit.unwrap_or(BRUTE_FORCE_EDGE_CAP);
    if g.edge_count() > cap {
        return Err(Error::SizeLimit {
            what: "edge count for brute-force enumeration",
            actual: g.edge_count(),
            cap,
        });
    }
    let start = g.edges()[first_edge].from;
    let mut used = vec![false; g.edge_count()];
    used[first_edge] = true;
    let mut count = BigUint::zero();
    backtrack(
        g,
        g.edges()[first_edge].to,
        start,
        g.edge_count() - 1,
        &mut used,
        &mut count,
    );
    Ok(count)
}

fn backtrack(
    g: &CorrespondingGraph,
    at: usize,
    start: usize,
    remaining: usize,
    used: &mut Vec<bool>,
    count: &mut BigUint,
) {
    if remaining == 0 {
        if at == start {
            *count += BigUint::one();
        }
        return;
    }
    for &e in g.out_edges(at) {
        if !used[e] {
            used[e] = true;
            backtrack(g, g.edges()[e].to, start, remaining - 1, used, count);
            used[e] = false;
        }
    }
}
