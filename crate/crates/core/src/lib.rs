//! Adjacency-hopping de Bruijn sequences H(k, n): cyclic sequences over k
//! codes in which every adjacency-hopping length-n word occurs exactly once
//! and no two neighboring codes are equal.
//!
//! The crate builds the corresponding graph whose Eulerian tours are exactly
//! these sequences, generates tours (deterministic or seeded Hierholzer),
//! validates and truncates sequences, counts them exactly by three
//! independent methods, decodes length-n windows in constant time, and
//! renders sequences as color fringe patterns for structured-light coding.

pub mod enumerate;
pub mod error;
pub mod euler;
pub mod generate;
pub mod graph;
pub mod matching;
pub mod pattern;
pub mod types;

pub use enumerate::{
    characteristic_polynomial, count_all_methods, count_best_theorem, count_closed_form,
    expected_characteristic_polynomial, laplacian_matrix, CountReport,
};
pub use error::{Error, Result};
pub use euler::{enumerate_tours, hierholzer_tour, EulerianTour};
pub use generate::{generate, tour_to_sequence, truncate, validate, ValidationReport};
pub use graph::{build_graph, CorrespondingGraph, GraphReport, IntMatrix};
pub use matching::LookupTable;
pub use pattern::{render, standard_rgb_alphabet, FringeSpec, Image};
pub use types::{Alphabet, Code, CyclicSequence, Label, LinearSequence, Parameters};
