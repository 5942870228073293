//! Sequence generation from Eulerian tours, validation against the
//! adjacency-hopping de Bruijn definition, and truncation for applications
//! that need fewer codes.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::euler::{hierholzer_tour, EulerianTour};
use crate::graph::{adjacency_hopping_words, build_graph, CorrespondingGraph};
use crate::types::{Code, CyclicSequence, LinearSequence, Parameters};

/// Outcome of checking a sequence against the H(k, n) definition. The three
/// failure classes are reported independently.
#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub is_adjacency_hopping: bool,
    pub covered: usize,
    pub expected: usize,
    pub duplicates: Vec<Vec<Code>>,
    pub missing: Vec<Vec<Code>>,
    pub length_ok: bool,
    pub verdict: bool,
}

/// Reads the sequence off a tour: the emitted code of each edge in order.
pub fn tour_to_sequence(tour: &EulerianTour, g: &CorrespondingGraph) -> CyclicSequence {
    let codes = tour
        .edges()
        .iter()
        .map(|&e| g.edges()[e].emitted_code)
        .collect();
    CyclicSequence::new(codes)
}

/// Generates an H(k, n), returned in canonical rotation.
///
/// For k >= 2 and n >= 2 this builds the corresponding graph and converts an
/// Eulerian tour. For n = 1 it returns the identity permutation, or a seeded
/// shuffle with the first code fixed. Unseeded calls are fully deterministic;
/// identical seeds give identical sequences.
pub fn generate(params: Parameters, seed: Option<u64>) -> Result<CyclicSequence> {
    let (k, n) = (params.k, params.n);
    if k == 1 && n > 1 {
        return Err(Error::NonexistentSequence { n });
    }
    if n == 1 {
        let mut codes: Vec<Code> = (0..k as Code).collect();
        if let Some(s) = seed {
            // fix the first code; rotation classes of permutations are counted
            // with the initial code pinned
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            codes[1..].shuffle(&mut rng);
        }
        return Ok(CyclicSequence::new(codes).canonical_rotation());
    }
    let g = build_graph(params)?;
    let tour = hierholzer_tour(&g, seed);
    Ok(tour_to_sequence(&tour, &g).canonical_rotation())
}

/// Validates a sequence against the H(k, n) definition: cyclic
/// adjacency-hopping, exact coverage of every adjacency-hopping length-n
/// word, and the k(k-1)^(n-1) length.
pub fn validate(s: &CyclicSequence, params: Parameters) -> Result<ValidationReport> {
    let (k, n) = (params.k, params.n);
    for &c in s.codes() {
        if c as usize >= k {
            return Err(Error::CodeOutOfRange { code: c, k });
        }
    }
    let q = s.len();

    // (a) every code differs from its cyclic successor; vacuous for q = 1
    let is_adjacency_hopping = q == 1 || (0..q).all(|i| s.get(i) != s.get(i + 1));

    // (b) the q cyclic windows must be exactly the adjacency-hopping
    // length-n words, each once
    let valid_words = adjacency_hopping_words(k, n);
    let expected = valid_words.len();
    let mut seen: HashMap<Vec<Code>, usize> = HashMap::new();
    for i in 0..q {
        *seen.entry(s.window(i, n)).or_insert(0) += 1;
    }
    let mut duplicates: Vec<Vec<Code>> = seen
        .iter()
        .filter(|(w, &c)| c > 1 || !valid_words.contains(w))
        .map(|(w, _)| w.clone())
        .collect();
    duplicates.sort();
    let missing: Vec<Vec<Code>> = valid_words
        .iter()
        .filter(|w| !seen.contains_key(*w))
        .cloned()
        .collect();
    let covered = valid_words.iter().filter(|w| seen.contains_key(*w)).count();

    // (c) length matches the existence theorem
    let length_ok = if params.is_feasible() {
        q == params.sequence_length()
    } else {
        false
    };

    let verdict = is_adjacency_hopping && duplicates.is_empty() && missing.is_empty() && length_ok;
    Ok(ValidationReport {
        is_adjacency_hopping,
        covered,
        expected,
        duplicates,
        missing,
        length_ok,
        verdict,
    })
}

/// Takes the first `len` codes of `s` as a linear (non-cyclic) sequence.
/// The result keeps distinct linear windows and adjacency-hopping neighbors.
pub fn truncate(s: &CyclicSequence, len: usize, params: Parameters) -> Result<LinearSequence> {
    let q = s.len();
    let n = params.n;
    if len < n || len > q {
        return Err(Error::InvalidLength {
            len,
            min: n,
            max: q,
        });
    }
    Ok(LinearSequence::new(s.codes()[..len].to_vec()))
}
