//! Window-to-position lookup tables: the O(1) decoding that motivates using
//! de Bruijn-style sequences for coding in the first place.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::types::{Code, CyclicSequence, LinearSequence, Parameters};

// Windows are keyed by their packed radix-k value when k^n fits in a u64,
// otherwise by the code list itself.
#[derive(Debug, Clone)]
enum Keys {
    Packed(HashMap<u64, usize>),
    Words(HashMap<Vec<Code>, usize>),
}

/// Immutable map from each length-n window of a sequence to its unique
/// start position.
#[derive(Debug, Clone)]
pub struct LookupTable {
    params: Parameters,
    source_len: usize,
    keys: Keys,
}

fn pack(word: &[Code], k: usize) -> Option<u64> {
    // value = sum w_j * k^j; representable iff k^n fits
    let mut radix: u64 = 1;
    let mut value: u64 = 0;
    for &c in word {
        value = value.checked_add((c as u64).checked_mul(radix)?)?;
        radix = radix.checked_mul(k as u64)?;
    }
    Some(value)
}

fn packable(k: usize, n: usize) -> bool {
    (k as u64).checked_pow(n as u32).is_some()
}

impl LookupTable {
    fn build<I: Iterator<Item = (usize, Vec<Code>)>>(
        params: Parameters,
        source_len: usize,
        windows: I,
    ) -> Result<LookupTable> {
        let mut keys = if packable(params.k, params.n) {
            Keys::Packed(HashMap::new())
        } else {
            Keys::Words(HashMap::new())
        };
        for (pos, w) in windows {
            let clash = match &mut keys {
                Keys::Packed(map) => map.insert(pack(&w, params.k).unwrap(), pos),
                Keys::Words(map) => map.insert(w.clone(), pos),
            };
            if let Some(first) = clash {
                return Err(Error::DuplicateWindow {
                    window: w,
                    first,
                    second: pos,
                });
            }
        }
        Ok(LookupTable {
            params,
            source_len,
            keys,
        })
    }

    /// Builds a table over all q cyclic windows of a full sequence.
    /// The sequence must validate; duplicate windows are rejected.
    pub fn for_cyclic(s: &CyclicSequence, params: Parameters) -> Result<LookupTable> {
        LookupTable::build(
            params,
            s.len(),
            (0..s.len()).map(|i| (i, s.window(i, params.n))),
        )
    }

    /// Builds a table over the L-n+1 linear windows of a truncated sequence.
    pub fn for_linear(s: &LinearSequence, params: Parameters) -> Result<LookupTable> {
        let n = params.n;
        LookupTable::build(
            params,
            s.len(),
            (0..=s.len() - n).map(|i| (i, s.window(i, n).unwrap())),
        )
    }

    pub fn len(&self) -> usize {
        match &self.keys {
            Keys::Packed(m) => m.len(),
            Keys::Words(m) => m.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn source_len(&self) -> usize {
        self.source_len
    }

    /// The unique start position of window `w`, in average-case constant time.
    pub fn decode(&self, w: &[Code]) -> Result<usize> {
        let k = self.params.k;
        if w.len() != self.params.n {
            return Err(Error::WindowNotFound { window: w.to_vec() });
        }
        for &c in w {
            if c as usize >= k {
                return Err(Error::CodeOutOfRange { code: c, k });
            }
        }
        let hit = match &self.keys {
            Keys::Packed(map) => map.get(&pack(w, k).unwrap()).copied(),
            Keys::Words(map) => map.get(w).copied(),
        };
        hit.ok_or_else(|| Error::WindowNotFound { window: w.to_vec() })
    }
}

/// Brute-force matcher used as the decode oracle in tests: scans every
/// cyclic window of `s` for `w`.
pub fn linear_scan_cyclic(s: &CyclicSequence, w: &[Code]) -> Option<usize> {
    (0..s.len()).find(|&i| s.window(i, w.len()) == w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paper_sequence() -> CyclicSequence {
        CyclicSequence::new(vec![0, 2, 1, 2, 0, 2, 0, 1, 2, 1, 0, 1])
    }

    #[test]
    fn table_over_paper_sequence() {
        let params = Parameters::new(3, 3);
        let t = LookupTable::for_cyclic(&paper_sequence(), params).unwrap();
        assert_eq!(t.len(), 12);
        assert_eq!(t.decode(&[0, 2, 1]).unwrap(), 0); // rbg -> 0
        assert_eq!(t.decode(&[1, 2, 1]).unwrap(), 7); // gbg -> 7
    }

    #[test]
    fn wraparound_windows_on_two_cycle() {
        let params = Parameters::new(2, 3);
        let s = CyclicSequence::new(vec![0, 1]);
        let t = LookupTable::for_cyclic(&s, params).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.decode(&[0, 1, 0]).unwrap(), 0);
        assert_eq!(t.decode(&[1, 0, 1]).unwrap(), 1);
    }

    #[test]
    fn miss_on_non_hopping_window() {
        let t = LookupTable::for_cyclic(&paper_sequence(), Parameters::new(3, 3)).unwrap();
        assert!(matches!(
            t.decode(&[0, 0, 1]), // rrg cannot occur
            Err(Error::WindowNotFound { .. })
        ));
    }

    #[test]
    fn duplicate_window_rejected() {
        let params = Parameters::new(2, 2);
        // 0101: window 01 occurs at 0 and 2
        let s = CyclicSequence::new(vec![0, 1, 0, 1]);
        assert!(matches!(
            LookupTable::for_cyclic(&s, params),
            Err(Error::DuplicateWindow { .. })
        ));
    }

    #[test]
    fn non_hopping_but_window_unique_input_builds() {
        // [0,0,1] fails validation (adjacent repeat) but its windows
        // {00, 01, 10} are distinct, so a table still builds; validation
        // is a separate precondition, not re-checked here
        let s = CyclicSequence::new(vec![0, 0, 1]);
        let t = LookupTable::for_cyclic(&s, Parameters::new(2, 2)).unwrap();
        assert_eq!(t.len(), 3);
    }

    #[test]
    fn round_trip_over_full_sequence() {
        let params = Parameters::new(3, 3);
        let s = paper_sequence();
        let t = LookupTable::for_cyclic(&s, params).unwrap();
        for i in 0..s.len() {
            assert_eq!(t.decode(&s.window(i, 3)).unwrap(), i);
        }
    }

    #[test]
    fn decode_agrees_with_linear_scan() {
        let params = Parameters::new(3, 3);
        let s = paper_sequence();
        let t = LookupTable::for_cyclic(&s, params).unwrap();
        // all 27 possible 3-code words, hits and misses alike
        for a in 0..3u32 {
            for b in 0..3u32 {
                for c in 0..3u32 {
                    let w = [a, b, c];
                    assert_eq!(t.decode(&w).ok(), linear_scan_cyclic(&s, &w));
                }
            }
        }
    }

    #[test]
    fn truncated_table_has_no_wraparound() {
        let params = Parameters::new(3, 3);
        let lin = LinearSequence::new(vec![0, 2, 1, 2, 0]); // rbgbr
        let t = LookupTable::for_linear(&lin, params).unwrap();
        assert_eq!(t.len(), 3); // L - n + 1
        assert_eq!(t.decode(&[0, 2, 1]).unwrap(), 0);
        // the cyclic continuation past the cut is a miss
        assert!(t.decode(&[2, 0, 2]).is_err());
    }

    #[test]
    fn wrong_length_and_out_of_range_queries() {
        let t = LookupTable::for_cyclic(&paper_sequence(), Parameters::new(3, 3)).unwrap();
        assert!(matches!(t.decode(&[0, 2]), Err(Error::WindowNotFound { .. })));
        assert!(matches!(
            t.decode(&[0, 2, 9]),
            Err(Error::CodeOutOfRange { .. })
        ));
    }
}
