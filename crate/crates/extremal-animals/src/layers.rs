//! Graph parameters of the complete k-layered animal.
//!
//! Two independent routes are provided: integer recurrences over perimeter
//! degree counts (the source of truth) and exact closed forms evaluated in
//! Q(√D). Tests assert the two agree field by field.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::tessellation::{QuadRat, SchlafliPair};

/// Perimeter degree histogram of one layer: degree -> count.
pub type DegreeCounts = BTreeMap<u32, BigInt>;

/// Graph parameters of the complete k-layered animal.
///
/// Satisfies Euler (v - e + n = 1), the edge partition p·n = e1 + 2·e2,
/// e = e1 + e2, and v = v_int + perimeter count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerParams {
    pub k: u32,
    /// Tiles.
    pub n: BigInt,
    /// Vertices.
    pub v: BigInt,
    /// Edges.
    pub e: BigInt,
    /// Perimeter edges.
    pub e1: BigInt,
    /// Interior edges.
    pub e2: BigInt,
    /// Interior (saturated) vertices.
    pub v_int: BigInt,
    /// Perimeter vertices by degree.
    pub deg_counts: DegreeCounts,
}

impl LayerParams {
    pub fn perimeter_len(&self) -> BigInt {
        self.deg_counts.values().sum()
    }

    /// Checks the structural identities every layer must satisfy.
    pub fn assert_invariants(&self, pair: SchlafliPair) {
        let one = BigInt::one();
        assert_eq!(&self.v - &self.e + &self.n, one, "Euler failed at k={}", self.k);
        assert_eq!(self.e, &self.e1 + &self.e2);
        assert_eq!(
            BigInt::from(pair.p()) * &self.n,
            &self.e1 + BigInt::from(2) * &self.e2,
            "edge partition failed at k={}",
            self.k
        );
        assert_eq!(self.e1, self.perimeter_len(), "perimeter is a cycle");
        assert_eq!(self.v, &self.v_int + self.perimeter_len());
    }
}

/// Perimeter degree counts of the k-layered animal.
///
/// For p = 3 the counts follow
///   v3(k) = (q-5)·v3(k-1) + (q-6)·v4(k-1),  v4(k) = v3(k-1) + v4(k-1)
/// from v3(2) = 3(q-4), v4(2) = 3; a single triangle (k = 1) has three
/// degree-2 corners. For p >= 4,
///   v2(k) = ((p-3)(q-2)-1)·v2(k-1) + ((p-3)(q-3)-1)·v3(k-1),
///   v3(k) = (q-2)·v2(k-1) + (q-3)·v3(k-1)
/// from v2(1) = p, v3(1) = 0.
pub fn perimeter_degree_counts(pair: SchlafliPair, k: u32) -> DegreeCounts {
    assert!(k >= 1, "layer index starts at 1");
    let (p, q) = (pair.p() as i64, pair.q() as i64);
    let mut counts = DegreeCounts::new();
    if pair.p() == 3 {
        if k == 1 {
            counts.insert(2, BigInt::from(3));
            return counts;
        }
        let mut v3 = BigInt::from(3 * (q - 4));
        let mut v4 = BigInt::from(3);
        for _ in 2..k {
            let n3 = BigInt::from(q - 5) * &v3 + BigInt::from(q - 6) * &v4;
            let n4 = &v3 + &v4;
            v3 = n3;
            v4 = n4;
        }
        counts.insert(3, v3);
        counts.insert(4, v4);
    } else {
        let mut v2 = BigInt::from(p);
        let mut v3 = BigInt::zero();
        for _ in 1..k {
            let n2 = BigInt::from((p - 3) * (q - 2) - 1) * &v2
                + BigInt::from((p - 3) * (q - 3) - 1) * &v3;
            let n3 = BigInt::from(q - 2) * &v2 + BigInt::from(q - 3) * &v3;
            v2 = n2;
            v3 = n3;
        }
        counts.insert(2, v2);
        counts.insert(3, v3);
    }
    counts
}

/// Incremental table of layer parameters for one pair, extended on demand.
///
/// Row k-1 holds layer k. Accumulation over layers:
/// the perimeter of layer j contributes its vertices to v, and each
/// perimeter vertex of degree d gains q-d+1 edges toward layer j+1 plus has
/// its two flanking perimeter edges absorbed, which nets a weight of q-d+1
/// interior edges per vertex.
#[derive(Debug, Clone)]
pub struct LayerTable {
    pair: SchlafliPair,
    rows: Vec<LayerParams>,
}

impl LayerTable {
    pub fn new(pair: SchlafliPair) -> Self {
        LayerTable { pair, rows: Vec::new() }
    }

    pub fn pair(&self) -> SchlafliPair {
        self.pair
    }

    pub fn params(&mut self, k: u32) -> &LayerParams {
        self.ensure(k);
        &self.rows[(k - 1) as usize]
    }

    pub fn computed_up_to(&self) -> u32 {
        self.rows.len() as u32
    }

    fn ensure(&mut self, k: u32) {
        assert!(k >= 1);
        let q = BigInt::from(self.pair.q());
        while self.rows.len() < k as usize {
            let k_next = self.rows.len() as u32 + 1;
            let deg_counts = perimeter_degree_counts(self.pair, k_next);
            let perimeter: BigInt = deg_counts.values().sum();
            let (prev_v, prev_e2) = match self.rows.last() {
                Some(prev) => {
                    let gain: BigInt = prev
                        .deg_counts
                        .iter()
                        .map(|(d, c)| (&q - BigInt::from(*d) + 1) * c)
                        .sum();
                    (prev.v.clone(), &prev.e2 + gain)
                }
                None => (BigInt::zero(), BigInt::zero()),
            };
            let v = prev_v + &perimeter;
            let e1 = perimeter.clone();
            let e2 = prev_e2;
            let e = &e1 + &e2;
            let n = BigInt::one() - &v + &e;
            let v_int = &v - &perimeter;
            let row = LayerParams { k: k_next, n, v, e, e1, e2, v_int, deg_counts };
            self.rows.push(row);
        }
    }
}

/// Layer parameters by integer recurrence.
pub fn layer_params_recursive(pair: SchlafliPair, k: u32) -> LayerParams {
    let mut table = LayerTable::new(pair);
    table.params(k).clone()
}

/// Layer parameters by exact closed form.
///
/// Euclidean pairs use the polynomial forms; hyperbolic pairs evaluate the
/// α-power expressions in Q(√D) and demote to integers, where a failed
/// demotion is a bug and panics.
pub fn layer_params_closed(pair: SchlafliPair, k: u32) -> LayerParams {
    assert!(k >= 1);
    if pair.is_euclidean() {
        euclidean_closed(pair, k)
    } else {
        hyperbolic_closed(pair, k)
    }
}

fn euclidean_closed(pair: SchlafliPair, k: u32) -> LayerParams {
    let (p, q) = (pair.p() as i64, pair.q() as i64);
    let kk = BigInt::from(k);
    let p_big = BigInt::from(p);

    // v = p·k², e = p·k·(q·k - q + 2)/2, n = 1 + p(q-2)(k² - k)/2.
    let v = &p_big * &kk * &kk;
    let e = {
        let num = &p_big * &kk * (BigInt::from(q) * &kk - q + 2);
        exact_half(num)
    };
    let n = BigInt::one() + exact_half(&p_big * (q - 2) * (&kk * &kk - &kk));

    let deg_counts = euclidean_closed_degree_counts(pair, k);
    let e1: BigInt = deg_counts.values().sum();
    let e2 = &e - &e1;
    let v_int = &v - &e1;
    LayerParams { k, n, v, e, e1, e2, v_int, deg_counts }
}

fn euclidean_closed_degree_counts(pair: SchlafliPair, k: u32) -> DegreeCounts {
    let k = k as i64;
    let mut counts = DegreeCounts::new();
    match (pair.p(), pair.q()) {
        (3, 6) => {
            if k == 1 {
                counts.insert(2, BigInt::from(3));
            } else {
                counts.insert(3, BigInt::from(6));
                counts.insert(4, BigInt::from(3 + 6 * (k - 2)));
            }
        }
        (4, 4) => {
            counts.insert(2, BigInt::from(4));
            counts.insert(3, BigInt::from(8 * (k - 1)));
        }
        (6, 3) => {
            counts.insert(2, BigInt::from(6 * k));
            counts.insert(3, BigInt::from(6 * (k - 1)));
        }
        _ => unreachable!("only three Euclidean pairs exist"),
    }
    counts
}

fn exact_half(n: BigInt) -> BigInt {
    let (q, r) = num::Integer::div_rem(&n, &BigInt::from(2));
    assert!(r.is_zero(), "expected an even value, got {n}");
    q
}

fn hyperbolic_closed(pair: SchlafliPair, k: u32) -> LayerParams {
    let d = pair.discriminant();
    let (p, q, t) = (pair.p() as i64, pair.q() as i64, pair.t());
    let alpha = pair.alpha();
    let int = |n: i64| QuadRat::from_integer(n, d);
    let one = int(1);

    let ak = alpha.pow(k);
    let ak1 = alpha.pow(k - 1);
    let inv_ak = ak.conj(); // α^{-k} = β^k
    let inv_ak1 = ak1.conj();
    let sqrt_d = QuadRat::sqrt_d(d);
    let am1_sqrt = (&alpha - &one) * &sqrt_d;

    // n = 1 + p(q-2)/((α-1)√D) · (α^k + α^{1-k} - α - 1)
    let n = &one + int(p * (q - 2)) / &am1_sqrt * (&ak + &inv_ak1 - &alpha - &one);

    // v = p/(t-2) · (α^k + α^{-k} - 2)
    let v = int(p) / int(t - 2) * (&ak + &inv_ak - int(2));

    // e = p/((α-1)√D) · ((α+q-1)α^k + (αq-α+1)α^{-k} - q(α+1))
    let e = int(p) / &am1_sqrt
        * ((&alpha + int(q - 1)) * &ak + (&alpha * int(q - 1) + &one) * &inv_ak
            - int(q) * (&alpha + &one));

    // e1 = p(α+1)/√D · (α^{k-1} - α^{-k})
    let e1 = int(p) * (&alpha + &one) / &sqrt_d * (&ak1 - &inv_ak);

    // e2 = p/((α-1)√D) · ((αq-α+1)α^{k-1} + (q-1+α)α^{1-k} - q(α+1))
    let e2 = int(p) / &am1_sqrt
        * ((&alpha * int(q - 1) + &one) * &ak1 + (int(q - 1) + &alpha) * &inv_ak1
            - int(q) * (&alpha + &one));

    // v_int = p/(t-2) · (α^{k-1} + α^{1-k} - 2)
    let v_int = int(p) / int(t - 2) * (&ak1 + &inv_ak1 - int(2));

    let deg_counts = hyperbolic_closed_degree_counts(pair, k);
    let params = LayerParams {
        k,
        n: n.demote_integer(),
        v: v.demote_integer(),
        e: e.demote_integer(),
        e1: e1.demote_integer(),
        e2: e2.demote_integer(),
        v_int: v_int.demote_integer(),
        deg_counts,
    };
    params.assert_invariants(pair);
    params
}

/// Closed forms for the perimeter degree counts, hyperbolic case.
fn hyperbolic_closed_degree_counts(pair: SchlafliPair, k: u32) -> DegreeCounts {
    let d = pair.discriminant();
    let (p, q) = (pair.p() as i64, pair.q() as i64);
    let alpha = pair.alpha();
    let beta = pair.beta();
    let int = |n: i64| QuadRat::from_integer(n, d);
    let sqrt_d = QuadRat::sqrt_d(d);
    let mut counts = DegreeCounts::new();
    if pair.p() == 3 {
        if k == 1 {
            counts.insert(2, BigInt::from(3));
            return counts;
        }
        // v3 = 3/(α-β)·((α-1)(q-3-β)α^{k-2} + (1-β)(q-3-α)β^{k-2})
        // v4 = 3/(α-β)·((q-3-β)α^{k-2} - (q-3-α)β^{k-2})
        let ak2 = alpha.pow(k - 2);
        let bk2 = beta.pow(k - 2);
        let qa = int(q - 3) - &alpha;
        let qb = int(q - 3) - &beta;
        let coef = int(3) / &sqrt_d;
        let v3 = &coef * ((&alpha - int(1)) * &qb * &ak2 + (int(1) - &beta) * &qa * &bk2);
        let v4 = &coef * (&qb * &ak2 - &qa * &bk2);
        counts.insert(3, v3.demote_integer());
        counts.insert(4, v4.demote_integer());
    } else {
        // v2 = p/(α-β)·(-(q-3-α)α^{k-1} + (q-3-β)β^{k-1})
        // v3 = p(q-2)/(α-β)·(α^{k-1} - β^{k-1})
        let ak1 = alpha.pow(k - 1);
        let bk1 = beta.pow(k - 1);
        let qa = int(q - 3) - &alpha;
        let qb = int(q - 3) - &beta;
        let coef = int(p) / &sqrt_d;
        let v2 = &coef * (&qb * &bk1 - &qa * &ak1);
        let v3 = &coef * int(q - 2) * (&ak1 - &bk1);
        counts.insert(2, v2.demote_integer());
        counts.insert(3, v3.demote_integer());
    }
    counts
}

/// Exact growth constant α for hyperbolic pairs; parameters of consecutive
/// layers approach ratio α. Euclidean growth is polynomial, so the request
/// is rejected there.
pub fn growth_ratio_limit(pair: SchlafliPair) -> Result<QuadRat> {
    if pair.is_euclidean() {
        return Err(Error::EuclideanPair { p: pair.p(), q: pair.q() });
    }
    Ok(pair.alpha())
}

/// Conjectured limit of e2(n)/n: (q-1)/(q-2) + 1/(α(q-2)).
pub fn e2_ratio_conjectured_limit(pair: SchlafliPair) -> Result<QuadRat> {
    if pair.is_euclidean() {
        return Err(Error::EuclideanPair { p: pair.p(), q: pair.q() });
    }
    let d = pair.discriminant();
    let q = pair.q() as i64;
    let int = |n: i64| QuadRat::from_integer(n, d);
    let first = QuadRat::from_rational(
        BigRational::new(BigInt::from(q - 1), BigInt::from(q - 2)),
        d,
    );
    let second = &int(1) / &(&pair.alpha() * &int(q - 2));
    first.checked_add(&second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tessellation::validate_pair;
    use num::Signed;

    fn counts(pairs: &[(u32, i64)]) -> DegreeCounts {
        pairs.iter().map(|(d, c)| (*d, BigInt::from(*c))).collect()
    }

    #[test]
    fn degree_counts_match_worked_values() {
        let sq = validate_pair(4, 4).unwrap();
        assert_eq!(perimeter_degree_counts(sq, 3), counts(&[(2, 4), (3, 16)]));

        let p45 = validate_pair(4, 5).unwrap();
        assert_eq!(perimeter_degree_counts(p45, 1), counts(&[(2, 4), (3, 0)]));
        assert_eq!(perimeter_degree_counts(p45, 2), counts(&[(2, 8), (3, 12)]));

        let p37 = validate_pair(3, 7).unwrap();
        assert_eq!(perimeter_degree_counts(p37, 2), counts(&[(3, 9), (4, 3)]));
        assert_eq!(perimeter_degree_counts(p37, 3), counts(&[(3, 21), (4, 12)]));
    }

    #[test]
    fn recursive_matches_known_layers() {
        let p45 = validate_pair(4, 5).unwrap();
        let l2 = layer_params_recursive(p45, 2);
        assert_eq!(l2.n, BigInt::from(13));
        assert_eq!(l2.v, BigInt::from(24));
        assert_eq!(l2.e, BigInt::from(36));
        assert_eq!(l2.e1, BigInt::from(20));
        assert_eq!(l2.e2, BigInt::from(16));
        assert_eq!(l2.v_int, BigInt::from(4));

        let hex = validate_pair(6, 3).unwrap();
        let l2 = layer_params_recursive(hex, 2);
        assert_eq!(l2.n, BigInt::from(7));
        assert_eq!(l2.v, BigInt::from(24));
        assert_eq!(l2.e, BigInt::from(30));
        assert_eq!(l2.e1, BigInt::from(18));

        let sq = validate_pair(4, 4).unwrap();
        let l1 = layer_params_recursive(sq, 1);
        assert_eq!(l1.n, BigInt::from(1));
        assert_eq!(l1.v, BigInt::from(4));
        assert_eq!(l1.e, BigInt::from(4));
        assert_eq!(l1.e1, BigInt::from(4));
        assert_eq!(l1.e2, BigInt::zero());
        assert_eq!(l1.v_int, BigInt::zero());
    }

    #[test]
    fn closed_matches_known_layers() {
        let tri = validate_pair(3, 6).unwrap();
        let l3 = layer_params_closed(tri, 3);
        assert_eq!(l3.n, BigInt::from(37));
        assert_eq!(l3.v, BigInt::from(27));
        assert_eq!(l3.e, BigInt::from(63));

        let p37 = validate_pair(3, 7).unwrap();
        let l2 = layer_params_closed(p37, 2);
        assert_eq!(l2.n, BigInt::from(16));
        assert_eq!(l2.v, BigInt::from(15));
        assert_eq!(l2.e, BigInt::from(30));

        let p45 = validate_pair(4, 5).unwrap();
        let l2 = layer_params_closed(p45, 2);
        assert_eq!(l2.e1, BigInt::from(20));
        assert_eq!(l2.e2, BigInt::from(16));
        assert_eq!(l2.v_int, BigInt::from(4));
    }

    #[test]
    fn recursive_equals_closed_for_many_layers() {
        for (p, q) in [(3, 6), (4, 4), (6, 3), (3, 7), (4, 5), (5, 4), (6, 4), (7, 3), (5, 5)] {
            let pair = validate_pair(p, q).unwrap();
            let mut table = LayerTable::new(pair);
            for k in 1..=20 {
                let rec = table.params(k).clone();
                let closed = layer_params_closed(pair, k);
                assert_eq!(rec, closed, "mismatch at {{{p},{q}}} k={k}");
                rec.assert_invariants(pair);
            }
        }
    }

    #[test]
    fn interior_vertices_equal_previous_layer_vertices() {
        for (p, q) in [(3, 7), (4, 5), (7, 3), (4, 4), (3, 6), (6, 3)] {
            let pair = validate_pair(p, q).unwrap();
            let mut table = LayerTable::new(pair);
            for k in 2..=12 {
                let prev_v = table.params(k - 1).v.clone();
                assert_eq!(table.params(k).v_int, prev_v);
            }
        }
    }

    #[test]
    fn growth_limit_is_alpha() {
        let p45 = validate_pair(4, 5).unwrap();
        let alpha = growth_ratio_limit(p45).unwrap();
        assert_eq!(alpha, p45.alpha());
        assert!(matches!(
            growth_ratio_limit(validate_pair(4, 4).unwrap()),
            Err(Error::EuclideanPair { .. })
        ));
    }

    #[test]
    fn vertex_ratio_converges_to_alpha_monotonically() {
        for (p, q) in [(4, 5), (3, 7), (7, 3)] {
            let pair = validate_pair(p, q).unwrap();
            let (lo, hi) = pair.alpha().to_interval(256);
            let mut table = LayerTable::new(pair);
            let mut last_gap: Option<(BigRational, BigRational)> = None;
            for k in 2..=14 {
                let vk = table.params(k).v.clone();
                let vk1 = table.params(k + 1).v.clone();
                let ratio = BigRational::new(vk1, vk);
                // |ratio - α| as an interval.
                let gap_lo = (&ratio - &hi).abs().min((&ratio - &lo).abs());
                let gap_hi = (&ratio - &hi).abs().max((&ratio - &lo).abs());
                if let Some((prev_lo, _)) = &last_gap {
                    assert!(
                        gap_hi < *prev_lo,
                        "{{{p},{q}}}: |v(k+1)/v(k) - α| not decreasing at k={k}"
                    );
                }
                last_gap = Some((gap_lo, gap_hi));
            }
        }
    }

    #[test]
    fn deep_layers_stay_exact() {
        // k = 40 exceeds u128 range comfortably; exactness must survive.
        let pair = validate_pair(4, 5).unwrap();
        let rec = layer_params_recursive(pair, 40);
        let closed = layer_params_closed(pair, 40);
        assert_eq!(rec, closed);
        assert!(rec.n.to_string().len() > 20);
    }

    #[test]
    fn euclidean_recurrence_agrees_with_polynomials_to_1e6() {
        // Streaming recurrence in machine words; polynomial growth keeps
        // everything far below u128.
        for (p, q) in [(4i128, 4i128), (3, 6), (6, 3)] {
            let pair = validate_pair(p as u32, q as u32).unwrap();
            let milestones = [1i128, 10, 1_000, 100_000, 1_000_000];
            let (mut lo, mut hi); // degree-2/3 counts for p>=4, 3/4 for p=3
            if p == 3 {
                lo = 3; // degree-2 corners at k=1, then degree-3 counts
                hi = 0;
            } else {
                lo = p;
                hi = 0;
            }
            let mut v = 0i128;
            let mut e2 = 0i128;
            for k in 1..=1_000_000i128 {
                if k > 1 {
                    let (nlo, nhi) = if p == 3 {
                        if k == 2 {
                            (3 * (q - 4), 3)
                        } else {
                            ((q - 5) * lo + (q - 6) * hi, lo + hi)
                        }
                    } else {
                        (
                            ((p - 3) * (q - 2) - 1) * lo + ((p - 3) * (q - 3) - 1) * hi,
                            (q - 2) * lo + (q - 3) * hi,
                        )
                    };
                    // Weight q - d + 1 per perimeter vertex of layer k-1.
                    let (wlo, whi) = if p == 3 && k > 2 {
                        (q - 2, q - 3)
                    } else {
                        (q - 1, q - 2)
                    };
                    e2 += wlo * lo + whi * hi;
                    lo = nlo;
                    hi = nhi;
                }
                v += lo + hi;
                if milestones.contains(&k) {
                    let closed = layer_params_closed(pair, k as u32);
                    assert_eq!(closed.v, BigInt::from(v), "{{{p},{q}}} v at k={k}");
                    let e1 = lo + hi;
                    assert_eq!(closed.e1, BigInt::from(e1), "{{{p},{q}}} e1 at k={k}");
                    assert_eq!(closed.e2, BigInt::from(e2), "{{{p},{q}}} e2 at k={k}");
                    assert_eq!(
                        closed.n,
                        BigInt::from(1 + e1 + e2 - v),
                        "{{{p},{q}}} n at k={k}"
                    );
                }
            }
        }
    }
}
