//! Foundational domain types: parameters, alphabets and cyclic sequences.

use serde::Serialize;

use crate::error::{Error, Result};

/// A symbol of the sequence, always an integer in `0..k`.
pub type Code = u32;

/// The pair (k, n): code-set size and sequence order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Parameters {
    pub k: usize,
    pub n: usize,
}

impl Parameters {
    pub fn new(k: usize, n: usize) -> Self {
        assert!(k >= 1 && n >= 1, "k and n must be positive");
        Parameters { k, n }
    }

    /// No H(1, n) exists for n > 1.
    pub fn is_feasible(&self) -> bool {
        !(self.k == 1 && self.n > 1)
    }

    /// Length of H(k, n): k(k-1)^(n-1).
    pub fn sequence_length(&self) -> usize {
        self.k * (self.k - 1).pow(self.n as u32 - 1)
    }

    /// Vertex count of the corresponding graph: k(k-1)^(n-2). Requires n >= 2.
    pub fn vertex_count(&self) -> usize {
        debug_assert!(self.n >= 2);
        self.k * (self.k - 1).pow(self.n as u32 - 2)
    }
}

/// A display label for one code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Label {
    Char(char),
    Rgb([u8; 3]),
}

/// Presentation mapping from internal codes 0..k-1 to display labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    labels: Vec<Label>,
}

impl Alphabet {
    /// Builds an alphabet from explicit labels. Labels must be pairwise distinct.
    pub fn new(labels: Vec<Label>) -> Self {
        assert!(!labels.is_empty(), "alphabet must have at least one label");
        for (i, a) in labels.iter().enumerate() {
            for b in &labels[i + 1..] {
                assert!(a != b, "alphabet labels must be pairwise distinct");
            }
        }
        Alphabet { labels }
    }

    /// Character alphabet for size k: "rgb" for k=3 (matching the usual
    /// three-color examples), otherwise a-z, A-Z, 0-9. Panics for k > 62.
    pub fn chars(k: usize) -> Self {
        assert!(k <= 62, "character alphabets support at most 62 labels");
        if k == 3 {
            return Alphabet::new(vec![Label::Char('r'), Label::Char('g'), Label::Char('b')]);
        }
        let pool: Vec<char> = ('a'..='z').chain('A'..='Z').chain('0'..='9').collect();
        Alphabet::new(pool[..k].iter().map(|&c| Label::Char(c)).collect())
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, code: Code) -> Option<Label> {
        self.labels.get(code as usize).copied()
    }

    /// Code for a character label, if present.
    pub fn code_of_char(&self, c: char) -> Option<Code> {
        self.labels
            .iter()
            .position(|&l| l == Label::Char(c))
            .map(|i| i as Code)
    }

    /// Code for an RGB label, if present.
    pub fn code_of_rgb(&self, rgb: [u8; 3]) -> Option<Code> {
        self.labels
            .iter()
            .position(|&l| l == Label::Rgb(rgb))
            .map(|i| i as Code)
    }

    pub fn rgb(&self, code: Code) -> Option<[u8; 3]> {
        match self.label(code) {
            Some(Label::Rgb(c)) => Some(c),
            _ => None,
        }
    }
}

/// An ordered list of codes with cyclic indexing; rotations are equivalent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicSequence {
    codes: Vec<Code>,
}

impl CyclicSequence {
    pub fn new(codes: Vec<Code>) -> Self {
        assert!(!codes.is_empty(), "cyclic sequence must be non-empty");
        CyclicSequence { codes }
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn codes(&self) -> &[Code] {
        &self.codes
    }

    /// Element at cyclic index i (wraps modulo the length).
    pub fn get(&self, i: usize) -> Code {
        self.codes[i % self.codes.len()]
    }

    /// The cyclic window of `n` codes starting at index `i`.
    pub fn window(&self, i: usize, n: usize) -> Vec<Code> {
        assert!(n >= 1);
        let q = self.codes.len();
        (0..n).map(|j| self.codes[(i + j) % q]).collect()
    }

    /// Rotation by `j` positions: element 0 of the result is element j of self.
    pub fn rotate(&self, j: usize) -> CyclicSequence {
        let q = self.codes.len();
        let j = j % q;
        let mut codes = Vec::with_capacity(q);
        codes.extend_from_slice(&self.codes[j..]);
        codes.extend_from_slice(&self.codes[..j]);
        CyclicSequence { codes }
    }

    /// The lexicographically least rotation; the canonical representative
    /// of this sequence's rotation-equivalence class.
    pub fn canonical_rotation(&self) -> CyclicSequence {
        let q = self.codes.len();
        let mut best = 0;
        for cand in 1..q {
            for j in 0..q {
                let a = self.codes[(cand + j) % q];
                let b = self.codes[(best + j) % q];
                if a < b {
                    best = cand;
                    break;
                }
                if a > b {
                    break;
                }
            }
        }
        self.rotate(best)
    }

    /// True if the two sequences are rotations of each other.
    pub fn rotation_equivalent(&self, other: &CyclicSequence) -> bool {
        self.len() == other.len() && self.canonical_rotation() == other.canonical_rotation()
    }

    /// Renders using the alphabet's character labels, no separators.
    /// Falls back to comma-separated integers when any label is not a char.
    pub fn display(&self, alphabet: &Alphabet) -> String {
        display_codes(&self.codes, alphabet)
    }
}

/// A truncated, non-cyclic sequence. Windows do not wrap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSequence {
    codes: Vec<Code>,
}

impl LinearSequence {
    pub fn new(codes: Vec<Code>) -> Self {
        assert!(!codes.is_empty());
        LinearSequence { codes }
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn codes(&self) -> &[Code] {
        &self.codes
    }

    /// The linear window of `n` codes starting at `i`; None if it runs off the end.
    pub fn window(&self, i: usize, n: usize) -> Option<Vec<Code>> {
        if i + n > self.codes.len() {
            return None;
        }
        Some(self.codes[i..i + n].to_vec())
    }

    pub fn display(&self, alphabet: &Alphabet) -> String {
        display_codes(&self.codes, alphabet)
    }
}

fn display_codes(codes: &[Code], alphabet: &Alphabet) -> String {
    let all_chars = codes
        .iter()
        .all(|&c| matches!(alphabet.label(c), Some(Label::Char(_))));
    if all_chars {
        codes
            .iter()
            .map(|&c| match alphabet.label(c) {
                Some(Label::Char(ch)) => ch,
                _ => unreachable!(),
            })
            .collect()
    } else {
        codes
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Parses a sequence from its text encoding: character labels with no
/// separators, or comma-separated integers.
pub fn parse_codes(text: &str, alphabet: &Alphabet, k: usize) -> Result<Vec<Code>> {
    let text = text.trim();
    let codes: Vec<Code> = if text.contains(',') || text.chars().all(|c| c.is_ascii_digit()) {
        let mut out = Vec::new();
        if text.contains(',') {
            for part in text.split(',') {
                let v: Code = part
                    .trim()
                    .parse()
                    .map_err(|_| Error::CodeOutOfRange { code: 0, k })?;
                out.push(v);
            }
        } else {
            // Unseparated digits: each digit is one code (only sound for k <= 10,
            // which is the common CLI case).
            for c in text.chars() {
                out.push(c.to_digit(10).unwrap() as Code);
            }
        }
        out
    } else {
        let mut out = Vec::new();
        for c in text.chars() {
            match alphabet.code_of_char(c) {
                Some(code) => out.push(code),
                None => return Err(Error::CodeOutOfRange { code: c as Code, k }),
            }
        }
        out
    };
    for &c in &codes {
        if c as usize >= k {
            return Err(Error::CodeOutOfRange { code: c, k });
        }
    }
    Ok(codes)
}
