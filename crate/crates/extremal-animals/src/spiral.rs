//! Graph parameters of the n-tile spiral and the minimum perimeter P(n).
//!
//! With k the layer such that n(k) <= n < n(k+1) and m the number of layer-k
//! perimeter vertices saturated by the first n - n(k) tiles of layer k+1:
//!
//!   e(n)  = (p-1)(n - n(k)) + e(k)  - m
//!   v(n)  = (p-2)(n - n(k)) + v(k)  - m
//!   e1(n) = (p-2)(n - n(k)) + e1(k) - 2m
//!   e2(n) = e2(k) + n - n(k) + m
//!
//! m is located on the degree word d_k: it is the largest m whose prefix of
//! gaps q - d_{k,i} sums to at most n - n(k) - 1. At exact layer boundaries
//! m is reported as 0 against layer k, which reduces every formula to the
//! layer values.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use std::sync::Arc;

use crate::degseq::{degree_sequence, DegreeSequence};
use crate::error::{Error, Result};
use crate::layers::{LayerParams, LayerTable};
use crate::tessellation::{Geometry, SchlafliPair};

/// Largest layer whose degree word will be materialised on demand.
const MAX_MATERIALIZED_LAYER: u32 = 1 << 20;

/// Graph parameters of the spiral with n tiles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpiralParams {
    pub n: BigInt,
    /// Layer with n(k) <= n < n(k+1).
    pub k: u32,
    /// Saturated perimeter vertices of the k-layered core (0 at boundaries).
    pub m: BigInt,
    pub v: BigInt,
    pub e: BigInt,
    pub e1: BigInt,
    pub e2: BigInt,
    pub v_int: BigInt,
}

impl SpiralParams {
    pub fn assert_invariants(&self, pair: SchlafliPair) {
        assert_eq!(&self.v - &self.e + &self.n, BigInt::one(), "Euler failed");
        assert_eq!(self.e, &self.e1 + &self.e2);
        assert_eq!(
            BigInt::from(pair.p()) * &self.n,
            &self.e1 + BigInt::from(2) * &self.e2
        );
        assert_eq!(self.v_int, BigInt::one() + &self.e2 - &self.n);
    }
}

/// Prefix sums of the gap word q - d_{k,i}, cumulated per run, used to
/// locate m by binary search over run boundaries.
#[derive(Debug, Clone)]
struct GapIndex {
    /// Elements up to and including run i.
    cum_elems: Vec<u64>,
    /// Gap sum up to and including run i.
    cum_gaps: Vec<BigInt>,
    gaps: Vec<u32>,
}

impl GapIndex {
    fn build(seq: &DegreeSequence) -> GapIndex {
        let q = seq.pair().q();
        let mut cum_elems = Vec::with_capacity(seq.runs().len());
        let mut cum_gaps = Vec::with_capacity(seq.runs().len());
        let mut gaps = Vec::with_capacity(seq.runs().len());
        let mut elems = 0u64;
        let mut gap_acc = BigInt::zero();
        for &(d, c) in seq.runs() {
            let gap = q - d;
            elems += c;
            gap_acc += BigInt::from(gap as u64) * BigInt::from(c);
            cum_elems.push(elems);
            cum_gaps.push(gap_acc.clone());
            gaps.push(gap);
        }
        GapIndex { cum_elems, cum_gaps, gaps }
    }

    /// Largest m with S(m) <= target, where S is the element-wise prefix
    /// gap sum. Requires target < S(total).
    fn saturated_prefix(&self, target: &BigInt) -> BigInt {
        debug_assert!(target >= &BigInt::zero());
        debug_assert!(target < self.cum_gaps.last().expect("nonempty word"));
        // First run whose cumulative gap sum exceeds the target.
        let i = self.cum_gaps.partition_point(|g| g <= target);
        let (prev_elems, prev_gaps) = if i == 0 {
            (0u64, BigInt::zero())
        } else {
            (self.cum_elems[i - 1], self.cum_gaps[i - 1].clone())
        };
        let g = self.gaps[i];
        debug_assert!(g > 0, "search cannot land inside a zero-gap run");
        let extra = (target - prev_gaps).div_floor(&BigInt::from(g));
        BigInt::from(prev_elems) + extra
    }
}

/// Shared evaluation context for one pair: layer table plus per-layer gap
/// indexes. Functions below take &mut; clone per thread for parallel use.
#[derive(Debug, Clone)]
pub struct SpiralCtx {
    table: LayerTable,
    gap_indexes: Vec<Option<Arc<GapIndex>>>,
}

impl SpiralCtx {
    pub fn new(pair: SchlafliPair) -> Self {
        SpiralCtx { table: LayerTable::new(pair), gap_indexes: Vec::new() }
    }

    pub fn pair(&self) -> SchlafliPair {
        self.table.pair()
    }

    pub fn layer(&mut self, k: u32) -> &LayerParams {
        self.table.params(k)
    }

    /// The unique k with n(k) <= n < n(k+1), found by galloping.
    pub fn locate_layer(&mut self, n: &BigInt) -> u32 {
        assert!(n >= &BigInt::one(), "spirals need at least one tile");
        let mut hi = 1u32;
        while self.table.params(hi + 1).n <= *n {
            hi = hi.checked_mul(2).expect("layer index overflow");
        }
        // n(hi) may overshoot; binary search k in [1, hi] with n(k) <= n.
        let mut lo = 1u32;
        while lo < hi {
            let mid = lo + (hi - lo).div_ceil(2);
            if self.table.params(mid).n <= *n {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        lo
    }

    fn gap_index(&mut self, k: u32) -> Result<Arc<GapIndex>> {
        if k > MAX_MATERIALIZED_LAYER {
            return Err(Error::OutOfValidRange(format!(
                "degree word of layer {k} is too deep to materialise"
            )));
        }
        let idx = k as usize - 1;
        if self.gap_indexes.len() <= idx {
            self.gap_indexes.resize(idx + 1, None);
        }
        if self.gap_indexes[idx].is_none() {
            let seq = degree_sequence(self.pair(), k);
            self.gap_indexes[idx] = Some(Arc::new(GapIndex::build(&seq)));
        }
        Ok(Arc::clone(self.gap_indexes[idx].as_ref().unwrap()))
    }

    /// m: how many perimeter vertices of the layer-k core are saturated in
    /// the n-tile spiral. Zero at layer boundaries by convention.
    pub fn saturation_count(&mut self, n: &BigInt) -> Result<BigInt> {
        let k = self.locate_layer(n);
        let filled = n - self.table.params(k).n.clone();
        if filled.is_zero() {
            return Ok(BigInt::zero());
        }
        let target = filled - 1;
        Ok(self.gap_index(k)?.saturated_prefix(&target))
    }

    pub fn spiral_params(&mut self, n: &BigInt) -> Result<SpiralParams> {
        let k = self.locate_layer(n);
        let m = self.saturation_count(n)?;
        let base = self.table.params(k).clone();
        let (p, _q) = (self.pair().p() as i64, self.pair().q());
        let extra = n - &base.n;

        let e = BigInt::from(p - 1) * &extra + &base.e - &m;
        let v = BigInt::from(p - 2) * &extra + &base.v - &m;
        let e1 = BigInt::from(p - 2) * &extra + &base.e1 - BigInt::from(2) * &m;
        let e2 = &base.e2 + &extra + &m;
        let v_int = BigInt::one() + &e2 - n;
        let params = SpiralParams { n: n.clone(), k, m, v, e, e1, e2, v_int };
        params.assert_invariants(self.pair());
        Ok(params)
    }

    /// Minimum perimeter P(n): the spiral attains it.
    pub fn min_perimeter(&mut self, n: &BigInt) -> Result<BigInt> {
        Ok(self.spiral_params(n)?.e1)
    }

    /// P(n+1) - P(n); lands in {p-2, p-4} for q > 3 and {p-4, p-6} for
    /// q = 3 (n >= 2). A value outside that set is a formula bug.
    pub fn perimeter_increment(&mut self, n: &BigInt) -> Result<i64> {
        let a = self.min_perimeter(n)?;
        let b = self.min_perimeter(&(n + 1))?;
        let diff = &b - &a;
        let diff_i64: i64 = (&diff).try_into().expect("increment is tiny");
        let p = self.pair().p() as i64;
        let in_law = if self.pair().q() > 3 {
            diff_i64 == p - 2 || diff_i64 == p - 4
        } else {
            diff_i64 == p - 4 || diff_i64 == p - 6
        };
        let law_applies = self.pair().q() > 3 || n >= &BigInt::from(2);
        assert!(
            !law_applies || in_law,
            "perimeter increment {diff_i64} out of range for {}",
            self.pair()
        );
        Ok(diff_i64)
    }
}

/// One-shot convenience wrappers around a fresh context.
pub fn locate_layer(pair: SchlafliPair, n: &BigInt) -> u32 {
    SpiralCtx::new(pair).locate_layer(n)
}

pub fn saturation_count(pair: SchlafliPair, n: &BigInt) -> Result<BigInt> {
    SpiralCtx::new(pair).saturation_count(n)
}

pub fn spiral_params(pair: SchlafliPair, n: &BigInt) -> Result<SpiralParams> {
    SpiralCtx::new(pair).spiral_params(n)
}

pub fn min_perimeter(pair: SchlafliPair, n: &BigInt) -> Result<BigInt> {
    SpiralCtx::new(pair).min_perimeter(n)
}

fn ceil_sqrt(n: &BigInt) -> BigInt {
    debug_assert!(!n.is_negative());
    let s = n.sqrt();
    if &(&s * &s) < n {
        s + 1
    } else {
        s
    }
}

/// Closed-form minimum perimeter for the three Euclidean tessellations,
/// with exact integer square-root ceilings (the formulas are off-by-2
/// sensitive at perfect squares).
pub fn euclidean_min_perimeter(pair: SchlafliPair, n: &BigInt) -> Result<BigInt> {
    if pair.geometry() != Geometry::Euclidean {
        return Err(Error::EuclideanOnly { p: pair.p(), q: pair.q() });
    }
    if n < &BigInt::one() {
        return Err(Error::OutOfValidRange("need n >= 1".into()));
    }
    let two = BigInt::from(2);
    Ok(match (pair.p(), pair.q()) {
        // 2·ceil(2√n)
        (4, 4) => two * ceil_sqrt(&(BigInt::from(4) * n)),
        // 2·ceil(√(12n-3))
        (6, 3) => two * ceil_sqrt(&(BigInt::from(12) * n - 3)),
        // 2·ceil((n+√(6n))/2) - n
        (3, 6) => {
            let f = n + ceil_sqrt(&(BigInt::from(6) * n));
            let c = f.div_ceil(&two);
            two * c - n
        }
        _ => unreachable!(),
    })
}

/// The stated rational envelope for interior edges of the spiral:
/// for p >= 4 and n > n(3),  n + (n-1)/(q-2) <= e2(n) <= n + (n-1)/(q-3);
/// for p = 3 and n > n(4),   n + (n-1)/(q-3) <= e2(n) <= n + (n-1)/(q-4).
pub fn e2_bounds(pair: SchlafliPair, n: &BigInt) -> Result<(BigRational, BigRational)> {
    if pair.is_euclidean() {
        return Err(Error::EuclideanPair { p: pair.p(), q: pair.q() });
    }
    if pair.q() == 3 {
        // The q=3 upper bound would divide by q-3; the envelope is only
        // stated for q >= 4.
        return Err(Error::OutOfValidRange(
            "e2 envelope is undefined for q = 3".into(),
        ));
    }
    let q = pair.q() as i64;
    let threshold_layer = if pair.p() == 3 { 4 } else { 3 };
    let mut table = LayerTable::new(pair);
    let threshold = table.params(threshold_layer).n.clone();
    if n <= &threshold {
        return Err(Error::OutOfValidRange(format!(
            "e2 bounds need n > {threshold} for {pair}"
        )));
    }
    let shift = if pair.p() == 3 { 1 } else { 0 };
    let nm1 = BigRational::from_integer(n - 1);
    let nr = BigRational::from_integer(n.clone());
    let lower = &nr + &nm1 / BigRational::from_integer(BigInt::from(q - 2 - shift));
    let upper = &nr + &nm1 / BigRational::from_integer(BigInt::from(q - 3 - shift));
    Ok((lower, upper))
}

/// Sampled ratio sequence e2(n)/n for empirical comparison against the
/// conjectured limit (q-1)/(q-2) + 1/(α(q-2)). Makes no claim about the
/// conjecture; the caller decides what to do with the numbers.
pub fn e2_ratio_estimate(
    pair: SchlafliPair,
    n_max: &BigInt,
    samples: usize,
) -> Result<Vec<(BigInt, BigRational)>> {
    if pair.is_euclidean() {
        return Err(Error::EuclideanPair { p: pair.p(), q: pair.q() });
    }
    let mut ctx = SpiralCtx::new(pair);
    let total: BigInt = n_max.clone();
    if total < BigInt::one() {
        return Err(Error::OutOfValidRange("need n_max >= 1".into()));
    }
    let samples = samples.max(2);
    let mut out = Vec::with_capacity(samples);
    let mut last = BigInt::zero();
    for i in 1..=samples {
        let n = (&total * BigInt::from(i as u64)).div_floor(&BigInt::from(samples as u64));
        let n = n.max(BigInt::one());
        if n == last {
            continue;
        }
        let params = ctx.spiral_params(&n)?;
        out.push((n.clone(), BigRational::new(params.e2, n.clone())));
        last = n;
    }
    Ok(out)
}
