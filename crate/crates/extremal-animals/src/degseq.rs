//! Cyclic words of perimeter vertex degrees, generated by substitution.
//!
//! The word d_k lists the degrees of the perimeter vertices of the
//! k-layered animal counter-clockwise from the anchor vertex of layer k.
//! d_1 is 2 repeated p times; d_k is obtained from d_{k-1} by replacing
//! every element with a fixed block:
//!
//! * p >= 4, q >= 4: d is replaced by q-d groups "3,2,...,2", the first of
//!   length p-3, the rest of length p-2.
//! * p = 3 (so q >= 6): d is replaced by "4,3,...,3" of length q-d-1.
//! * q = 3 (so p >= 6): a 2 becomes "3,2,...,2" of length p-3 when its
//!   cyclic predecessor in d_{k-1} is a 2, of length p-4 when it is a 3;
//!   a 3 is erased. Predecessors are taken in d_{k-1} before any erasure.
//!
//! Words are stored run-length compressed. Runs never grow past u64 here
//! because sequences are only materialised for moderate k; the layer
//! formulas carry the exponential regime.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::bigint::BigInt;
use num::Zero;

use crate::error::{Error, Result};
use crate::layers::DegreeCounts;
use crate::tessellation::SchlafliPair;

/// Run-length compressed cyclic degree word of one layer perimeter.
///
/// Adjacent runs always differ in degree, except possibly across the cyclic
/// seam (the last run may share its degree with the first). Element 0 is
/// the anchor vertex of the layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    pair: SchlafliPair,
    k: u32,
    runs: Vec<(u32, u64)>,
}

impl DegreeSequence {
    pub fn pair(&self) -> SchlafliPair {
        self.pair
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Runs of (degree, repeat count).
    pub fn runs(&self) -> &[(u32, u64)] {
        &self.runs
    }

    pub fn len(&self) -> u64 {
        self.runs.iter().map(|(_, c)| c).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Expands to individual degrees. Only sensible for small words.
    pub fn elements(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.len() as usize);
        for &(d, c) in &self.runs {
            out.extend(std::iter::repeat_n(d, c as usize));
        }
        out
    }

    /// Histogram degree -> count, comparable with the layer degree counts.
    pub fn histogram(&self) -> DegreeCounts {
        let mut h = DegreeCounts::new();
        for &(d, c) in &self.runs {
            *h.entry(d).or_insert_with(BigInt::zero) += BigInt::from(c);
        }
        h
    }

    /// True if `other` is a rotation of `self` as a cyclic word.
    pub fn cyclically_equal(&self, other: &DegreeSequence) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let a = self.elements();
        let mut b2 = other.elements();
        b2.extend(other.elements());
        b2.windows(a.len()).any(|w| w == a.as_slice())
    }

    fn from_parts(pair: SchlafliPair, k: u32, runs: Vec<(u32, u64)>) -> Self {
        DegreeSequence { pair, k, runs }
    }

    /// Run-length compresses an explicit degree list (e.g. one read off an
    /// explicitly built animal).
    pub fn from_degrees(pair: SchlafliPair, k: u32, degrees: &[u32]) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::OutOfValidRange("empty degree word".into()));
        }
        let mut buf = RunBuf::default();
        for &d in degrees {
            buf.push(d, 1);
        }
        Ok(DegreeSequence::from_parts(pair, k, buf.runs))
    }
}

/// Builder that merges adjacent equal-degree runs.
#[derive(Default)]
struct RunBuf {
    runs: Vec<(u32, u64)>,
}

impl RunBuf {
    fn push(&mut self, degree: u32, count: u64) {
        if count == 0 {
            return;
        }
        match self.runs.last_mut() {
            Some((d, c)) if *d == degree => *c += count,
            _ => self.runs.push((degree, count)),
        }
    }
}

/// d_1: the single tile exposes p corners of degree 2.
pub fn initial_sequence(pair: SchlafliPair) -> DegreeSequence {
    DegreeSequence::from_parts(pair, 1, vec![(2, pair.p() as u64)])
}

/// One substitution step d_k -> d_{k+1}.
pub fn substitute(seq: &DegreeSequence) -> Result<DegreeSequence> {
    let pair = seq.pair;
    let (p, q) = (pair.p() as u64, pair.q());
    let mut out = RunBuf::default();

    let check = |d: u32, allowed: &[u32]| -> Result<()> {
        if allowed.contains(&d) {
            Ok(())
        } else {
            Err(Error::InvalidDegree { p: pair.p(), q: pair.q(), k: seq.k, degree: d })
        }
    };

    if q == 3 {
        // Predecessor of element 0 is the last element of the cyclic word.
        let mut prev = seq
            .runs
            .last()
            .map(|&(d, _)| d)
            .ok_or_else(|| Error::OutOfValidRange("empty degree sequence".into()))?;
        for &(d, c) in &seq.runs {
            check(d, if seq.k == 1 { &[2] } else { &[2, 3] })?;
            match d {
                3 => {}
                _ => {
                    // First element of the run sees `prev`; the rest see a 2.
                    let first_len = if prev == 2 { p - 3 } else { p - 4 };
                    out.push(3, 1);
                    out.push(2, first_len - 1);
                    for _ in 1..c {
                        out.push(3, 1);
                        out.push(2, p - 3 - 1);
                    }
                }
            }
            prev = d;
        }
    } else if pair.p() == 3 {
        for &(d, c) in &seq.runs {
            check(d, if seq.k == 1 { &[2] } else { &[3, 4] })?;
            // d -> "4,3,...,3" of total length q - d - 1.
            let threes = (q - d - 2) as u64;
            for _ in 0..c {
                out.push(4, 1);
                out.push(3, threes);
            }
        }
    } else {
        for &(d, c) in &seq.runs {
            check(d, if seq.k == 1 { &[2] } else { &[2, 3] })?;
            let groups = (q - d) as u64;
            for _ in 0..c {
                // First group has length p-3, the remaining q-d-1 have p-2.
                out.push(3, 1);
                out.push(2, p - 4);
                for _ in 1..groups {
                    out.push(3, 1);
                    out.push(2, p - 3);
                }
            }
        }
    }

    Ok(DegreeSequence::from_parts(pair, seq.k + 1, out.runs))
}

type SeqCache = Mutex<HashMap<(u32, u32, u32), Arc<DegreeSequence>>>;

fn cache() -> &'static SeqCache {
    static CACHE: OnceLock<SeqCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// d_k for the given pair, memoized per (p, q, k).
pub fn degree_sequence(pair: SchlafliPair, k: u32) -> Arc<DegreeSequence> {
    assert!(k >= 1);
    let key = (pair.p(), pair.q(), k);
    if let Some(hit) = cache().lock().unwrap().get(&key) {
        return Arc::clone(hit);
    }
    // Iterate up from the deepest cached ancestor.
    let mut seq = {
        let guard = cache().lock().unwrap();
        (1..k)
            .rev()
            .find_map(|j| guard.get(&(pair.p(), pair.q(), j)).map(Arc::clone))
            .map(|a| (*a).clone())
            .unwrap_or_else(|| initial_sequence(pair))
    };
    while seq.k < k {
        seq = substitute(&seq).expect("generated sequences stay in the valid alphabet");
    }
    let arc = Arc::new(seq);
    cache().lock().unwrap().insert(key, Arc::clone(&arc));
    arc
}

/// Cumulative sums of q - d over the first `limit` elements, run by run.
pub fn prefix_gap_sums(seq: &DegreeSequence, limit: u64) -> Vec<BigInt> {
    assert!(limit <= seq.len(), "limit past the end of the word");
    let q = seq.pair.q();
    let mut out = Vec::with_capacity(limit as usize);
    let mut acc = BigInt::zero();
    let mut remaining = limit;
    for &(d, c) in &seq.runs {
        let gap = BigInt::from(q - d);
        for _ in 0..c.min(remaining) {
            acc += &gap;
            out.push(acc.clone());
        }
        remaining = remaining.saturating_sub(c);
        if remaining == 0 {
            break;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tessellation::validate_pair;

    fn seq_of(p: u32, q: u32, k: u32) -> Vec<u32> {
        degree_sequence(validate_pair(p, q).unwrap(), k).elements()
    }

    fn repeat_block(block: &[u32], times: usize) -> Vec<u32> {
        let mut v = Vec::new();
        for _ in 0..times {
            v.extend_from_slice(block);
        }
        v
    }

    #[test]
    fn initial_word_is_all_twos() {
        assert_eq!(seq_of(4, 5, 1), vec![2, 2, 2, 2]);
        assert_eq!(seq_of(3, 7, 1), vec![2, 2, 2]);
        assert_eq!(seq_of(7, 3, 1), vec![2; 7]);
    }

    #[test]
    fn triangle_words() {
        // {3,6}: 2 -> 4,3,3;  3 -> 4,3;  4 -> 4.
        assert_eq!(seq_of(3, 6, 2), repeat_block(&[4, 3, 3], 3));
        assert_eq!(seq_of(3, 6, 3), repeat_block(&[4, 4, 3, 4, 3], 3));
        assert_eq!(seq_of(3, 6, 4), repeat_block(&[4, 4, 4, 3, 4, 4, 3], 3));
        // {3,7}: 2 -> 4,3,3,3;  3 -> 4,3,3;  4 -> 4,3.
        assert_eq!(seq_of(3, 7, 2), repeat_block(&[4, 3, 3, 3], 3));
        assert_eq!(
            seq_of(3, 7, 3),
            repeat_block(&[4, 3, 4, 3, 3, 4, 3, 3, 4, 3, 3], 3)
        );
    }

    #[test]
    fn square_words() {
        // {4,4}: 3 -> 3;  2 -> 3,3,2.
        assert_eq!(seq_of(4, 4, 2), repeat_block(&[3, 3, 2], 4));
        assert_eq!(seq_of(4, 4, 3), repeat_block(&[3, 3, 3, 3, 2], 4));
        assert_eq!(seq_of(4, 4, 4), repeat_block(&[3, 3, 3, 3, 3, 3, 2], 4));
        // {4,5}: 3 -> 3,3,2;  2 -> 3,3,2,3,2.
        assert_eq!(seq_of(4, 5, 2), repeat_block(&[3, 3, 2, 3, 2], 4));
        assert_eq!(
            seq_of(4, 5, 3),
            repeat_block(
                &[3, 3, 2, 3, 3, 2, 3, 3, 2, 3, 2, 3, 3, 2, 3, 3, 2, 3, 2],
                4
            )
        );
    }

    #[test]
    fn trivalent_words() {
        // {6,3}: 3 erased; 2 after 3 -> 3,2; 2 after 2 -> 3,2,2.
        assert_eq!(seq_of(6, 3, 2), repeat_block(&[3, 2, 2], 6));
        assert_eq!(seq_of(6, 3, 3), repeat_block(&[3, 2, 3, 2, 2], 6));
        // {7,3}: 3 erased; 2 after 3 -> 3,2,2; 2 after 2 -> 3,2,2,2.
        assert_eq!(seq_of(7, 3, 2), repeat_block(&[3, 2, 2, 2], 7));
        assert_eq!(
            seq_of(7, 3, 3),
            repeat_block(&[3, 2, 2, 3, 2, 2, 2, 3, 2, 2, 2], 7)
        );
    }

    #[test]
    fn word_length_and_histogram_match_layer_data() {
        use crate::layers::{layer_params_recursive, perimeter_degree_counts};
        for (p, q) in [(3, 6), (4, 4), (6, 3), (3, 7), (4, 5), (5, 4), (6, 4), (7, 3), (5, 5)] {
            let pair = validate_pair(p, q).unwrap();
            for k in 1..=7 {
                let seq = degree_sequence(pair, k);
                let params = layer_params_recursive(pair, k);
                assert_eq!(
                    BigInt::from(seq.len()),
                    params.e1,
                    "length mismatch {{{p},{q}}} k={k}"
                );
                assert_eq!(
                    seq.histogram(),
                    normalized(perimeter_degree_counts(pair, k)),
                    "histogram mismatch {{{p},{q}}} k={k}"
                );
            }
        }
        fn normalized(mut c: DegreeCounts) -> DegreeCounts {
            c.retain(|_, v| !v.is_zero());
            c
        }
    }

    #[test]
    fn compression_is_canonical() {
        for (p, q, k) in [(4, 5, 6), (7, 3, 6), (3, 7, 6), (6, 4, 5)] {
            let seq = degree_sequence(validate_pair(p, q).unwrap(), k);
            for w in seq.runs().windows(2) {
                assert_ne!(w[0].0, w[1].0, "adjacent runs share a degree");
            }
        }
    }

    #[test]
    fn gap_sums_match_worked_examples() {
        let p45 = validate_pair(4, 5).unwrap();
        let d2 = degree_sequence(p45, 2);
        assert_eq!(
            prefix_gap_sums(&d2, 5),
            [2, 4, 7, 9, 12].map(BigInt::from).to_vec()
        );

        let sq = validate_pair(4, 4).unwrap();
        let d2 = degree_sequence(sq, 2);
        assert_eq!(
            prefix_gap_sums(&d2, 3),
            [1, 2, 4].map(BigInt::from).to_vec()
        );
        assert!(prefix_gap_sums(&d2, 0).is_empty());
    }

    #[test]
    fn substitute_rejects_foreign_degrees() {
        let pair = validate_pair(4, 5).unwrap();
        let bogus = DegreeSequence::from_parts(pair, 2, vec![(5, 4)]);
        assert!(matches!(
            substitute(&bogus),
            Err(Error::InvalidDegree { degree: 5, .. })
        ));
    }

    #[test]
    fn cyclic_equality_detects_rotations() {
        let pair = validate_pair(6, 3).unwrap();
        let a = DegreeSequence::from_parts(pair, 3, vec![(3, 1), (2, 2), (3, 1), (2, 1)]);
        let b = DegreeSequence::from_parts(pair, 3, vec![(3, 1), (2, 1), (3, 1), (2, 2)]);
        assert!(a.cyclically_equal(&b));
        let c = DegreeSequence::from_parts(pair, 3, vec![(3, 2), (2, 3)]);
        assert!(!a.cyclically_equal(&c));
    }
}
