//! Cross-checking suites: every formula against the lattice oracle, every
//! stated invariant against enumeration. Shared by the CLI `verify`
//! subcommand and the acceptance tests.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::Signed;

use crate::animal::build::{build_layered, build_seq, build_spiral_with, SeqKind};
use crate::degseq::degree_sequence;
use crate::enumerate::{enumerate_animals, EnumOpts};
use crate::error::Result;
use crate::layers::{e2_ratio_conjectured_limit, layer_params_closed, LayerTable};
use crate::spiral::{euclidean_min_perimeter, SpiralCtx};
use crate::tessellation::SchlafliPair;

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult { name: name.into(), passed: true, detail: detail.into() }
    }

    fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult { name: name.into(), passed: false, detail: detail.into() }
    }

    fn from(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckResult { name: name.into(), passed, detail: detail.into() }
    }
}

/// Spiral formulas vs. the explicitly built spiral, all six parameters at
/// every 1 <= n <= n_max.
pub fn check_spiral_against_oracle(
    pair: SchlafliPair,
    n_max: usize,
    cap: usize,
) -> Result<CheckResult> {
    let name = format!("spiral formulas vs oracle, {pair}, n <= {n_max}");
    let mut ctx = SpiralCtx::new(pair);
    let mut mismatches = Vec::new();
    build_spiral_with(pair, n_max, cap, |n, map| {
        let c = map.counts();
        let f = match ctx.spiral_params(&BigInt::from(n)) {
            Ok(f) => f,
            Err(e) => {
                mismatches.push(format!("n={n}: {e}"));
                return;
            }
        };
        let got = [c.n, c.v, c.e, c.e1, c.e2, c.v_int].map(BigInt::from);
        let want = [f.n, f.v, f.e, f.e1, f.e2, f.v_int];
        if got != want {
            mismatches.push(format!("n={n}: oracle {got:?} vs formulas {want:?}"));
        }
    })?;
    Ok(if mismatches.is_empty() {
        CheckResult::pass(name, format!("{n_max} sizes, 6 parameters each"))
    } else {
        CheckResult::fail(name, mismatches.join("; "))
    })
}

/// Layer recurrences vs. closed forms for k <= k_max.
pub fn check_layer_closed_forms(pair: SchlafliPair, k_max: u32) -> CheckResult {
    let name = format!("layer recurrences vs closed forms, {pair}, k <= {k_max}");
    let mut table = LayerTable::new(pair);
    for k in 1..=k_max {
        let rec = table.params(k).clone();
        let closed = layer_params_closed(pair, k);
        if rec != closed {
            return CheckResult::fail(name, format!("k={k}: {rec:?} vs {closed:?}"));
        }
        rec.assert_invariants(pair);
    }
    CheckResult::pass(name, format!("{k_max} layers, exact equality"))
}

/// Iterative minimum perimeter vs. the closed Euclidean ceiling formulas.
pub fn check_euclidean_perimeter(pair: SchlafliPair, n_max: u64) -> Result<CheckResult> {
    let name = format!("iterative P(n) vs closed form, {pair}, n <= {n_max}");
    let mut ctx = SpiralCtx::new(pair);
    for n in 1..=n_max {
        let n = BigInt::from(n);
        let iterative = ctx.min_perimeter(&n)?;
        let closed = euclidean_min_perimeter(pair, &n)?;
        if iterative != closed {
            return Ok(CheckResult::fail(
                name,
                format!("n={n}: iterative {iterative} vs closed {closed}"),
            ));
        }
    }
    Ok(CheckResult::pass(name, format!("{n_max} values")))
}

/// Degree words generated by substitution vs. words read off built animals.
pub fn check_degree_sequences(pair: SchlafliPair, k_max: u32, cap: usize) -> Result<CheckResult> {
    let name = format!("degree words vs oracle, {pair}, k <= {k_max}");
    for k in 1..=k_max {
        let map = build_layered(pair, k, cap)?;
        let read = map.read_degree_sequence()?;
        let generated = degree_sequence(pair, k);
        if read.runs() != generated.runs() {
            return Ok(CheckResult::fail(
                name,
                format!("k={k}: oracle word differs from substitution word"),
            ));
        }
        let params = map.graph_params();
        if BigInt::from(generated.len()) != BigInt::from(params.e1) {
            return Ok(CheckResult::fail(name, format!("k={k}: word length vs e1")));
        }
        if generated.histogram() != params.degree_counts() {
            return Ok(CheckResult::fail(name, format!("k={k}: histogram mismatch")));
        }
    }
    Ok(CheckResult::pass(name, format!("{k_max} layers, anchored element-wise")))
}

/// Exhaustive extremality: no enumerated class (holes allowed) beats the
/// spiral in e1, e2 or v_int; interior-vertex bounds hold on every class.
pub fn check_exhaustive_extremality(
    pair: SchlafliPair,
    n_max: usize,
    opts: EnumOpts,
) -> Result<CheckResult> {
    let name = format!("exhaustive extremality, {pair}, n <= {n_max}");
    let enumeration = enumerate_animals(pair, n_max, opts)?;
    let mut ctx = SpiralCtx::new(pair);
    let q = pair.q() as u64;
    let mut classes = 0u64;
    for (idx, level) in enumeration.levels.iter().enumerate() {
        let n = idx + 1;
        let spiral = ctx.spiral_params(&BigInt::from(n))?;
        let (se1, se2, svint) = (
            u64::try_from(&spiral.e1).unwrap(),
            u64::try_from(&spiral.e2).unwrap(),
            u64::try_from(&spiral.v_int).unwrap(),
        );
        let mut spiral_seen = false;
        for class in level {
            classes += 1;
            let s = &class.stats;
            if s.e1 < se1 || s.e2 > se2 || s.v_int > svint {
                return Ok(CheckResult::fail(
                    name,
                    format!("n={n}: class beats the spiral: {s:?}"),
                ));
            }
            if s.e1 == se1 {
                spiral_seen = true;
                if s.e2 != se2 || s.v_int != svint || s.e != u64::try_from(&spiral.e).unwrap() {
                    return Ok(CheckResult::fail(
                        name,
                        format!("n={n}: extremal class disagrees beyond e1: {s:?}"),
                    ));
                }
            }
            // Interior-vertex bounds for {p,q}-graphs.
            let bound_ok = if q == 3 {
                s.v_int <= 2 * s.n - 2
            } else {
                s.v_int < s.n && (q < 6 || 2 * s.v_int < s.n)
            };
            if !bound_ok {
                return Ok(CheckResult::fail(
                    name,
                    format!("n={n}: v_int bound violated: {s:?}"),
                ));
            }
        }
        if !spiral_seen {
            return Ok(CheckResult::fail(name, format!("n={n}: no class attains P(n)")));
        }
    }
    Ok(CheckResult::pass(name, format!("{classes} classes checked")))
}

/// Dual statistics of layered/seeded animals against the dual pair's
/// members, k <= k_max.
pub fn check_duality(pair: SchlafliPair, k_max: u32, cap: usize) -> Result<CheckResult> {
    let name = format!("duality structure, {pair}, k <= {k_max}");
    let dual_pair = pair.dual();
    for k in 2..=k_max {
        let a = build_layered(pair, k, cap)?;
        let da = a.dual_animal_params()?;
        let b = build_seq(dual_pair, SeqKind::B, k, cap)?;
        let gb = b.graph_params();
        if (da.n, da.v, da.e, da.e1, da.e2, da.v_int)
            != (gb.n, gb.v, gb.e, gb.e1, gb.e2, gb.v_int)
        {
            return Ok(CheckResult::fail(
                name,
                format!("k={k}: dual of the layered animal is not the vertex-seeded one"),
            ));
        }
        let db = b.dual_animal_params()?;
        let a_prev = build_layered(pair, k - 1, cap)?;
        let ga = a_prev.graph_params();
        if (db.n, db.v, db.e, db.e1, db.e2, db.v_int)
            != (ga.n, ga.v, ga.e, ga.e1, ga.e2, ga.v_int)
        {
            return Ok(CheckResult::fail(
                name,
                format!("k={k}: dual of the vertex-seeded animal is not the previous layer"),
            ));
        }
    }
    Ok(CheckResult::pass(name, format!("layers 2..={k_max} both directions")))
}

/// Dual of the spiral: e22 equals the interior edges of the dual-pair
/// spiral on v_int tiles, and the stray-edge count obeys
/// e20 <= q - 2 - eps.
pub fn check_spiral_duality(pair: SchlafliPair, n_max: usize, cap: usize) -> Result<CheckResult> {
    let name = format!("spiral dual structure, {pair}, n <= {n_max}");
    let mut dual_ctx = SpiralCtx::new(pair.dual());
    let mut failures = Vec::new();
    build_spiral_with(pair, n_max, cap, |n, map| {
        if n < 2 {
            return;
        }
        let stats = map.dual_stats();
        if stats.n_dual == 0 {
            return;
        }
        let n_dual = BigInt::from(stats.n_dual);
        let expect_e22 = dual_ctx.spiral_params(&n_dual).map(|s| s.e2);
        match expect_e22 {
            Ok(e22) if BigInt::from(stats.e22) == e22 => {}
            other => failures.push(format!("n={n}: e22 {} vs {:?}", stats.e22, other)),
        }
        // Gluing parameter of the next dual tile bounds the stray path.
        let next = dual_ctx
            .spiral_params(&(&n_dual + 1))
            .and_then(|a| dual_ctx.spiral_params(&n_dual).map(|b| a.e2 - b.e2));
        if let Ok(eps) = next {
            let bound = BigInt::from(pair.q()) - 2 - eps;
            if BigInt::from(stats.e20) > bound {
                failures.push(format!("n={n}: e20 {} > bound {bound}", stats.e20));
            }
        }
    })?;
    Ok(if failures.is_empty() {
        CheckResult::pass(name, "dual spiral and stray-path bound")
    } else {
        CheckResult::fail(name, failures.join("; "))
    })
}

/// Perimeter increment law, cumulative e2 bounds and superadditivity over a
/// deterministic sample of (n, l) pairs.
pub fn check_spiral_properties(pair: SchlafliPair, samples: u64) -> Result<CheckResult> {
    let name = format!("spiral increment/superadditivity laws, {pair}");
    let mut ctx = SpiralCtx::new(pair);
    let q3 = pair.q() == 3;
    // Deterministic LCG over a spread of sizes.
    let mut state = 0x243F6A8885A308D3u64 ^ (pair.p() as u64) << 32 ^ pair.q() as u64;
    let mut next = |m: u64| {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (state >> 33) % m + 1
    };
    for _ in 0..samples {
        let n = next(10_000);
        let l = next(400);
        let d = ctx.perimeter_increment(&BigInt::from(n))?;
        let p = pair.p() as i64;
        let legal = if q3 {
            n == 1 || d == p - 4 || d == p - 6
        } else {
            d == p - 2 || d == p - 4
        };
        if !legal {
            return Ok(CheckResult::fail(name, format!("increment {d} at n={n}")));
        }
        let e2n = ctx.spiral_params(&BigInt::from(n))?.e2;
        let e2nl = ctx.spiral_params(&BigInt::from(n + l))?.e2;
        let delta = &e2nl - &e2n;
        let cap = BigInt::from(if q3 { 3 * l } else { 2 * l });
        if delta > cap {
            return Ok(CheckResult::fail(
                name,
                format!("e2({})-e2({n}) = {delta} > {cap}", n + l),
            ));
        }
        if n > 1 {
            let el = ctx.spiral_params(&BigInt::from(l))?.e;
            if &e2n + &el < e2nl {
                return Ok(CheckResult::fail(
                    name,
                    format!("superadditivity failed at n={n}, l={l}"),
                ));
            }
        }
    }
    Ok(CheckResult::pass(name, format!("{samples} sampled (n, l) pairs")))
}

/// Empirical support for the interior-edge density limit; informational.
pub fn check_e2_ratio_conjecture(
    pair: SchlafliPair,
    k: u32,
    tolerance: (i64, i64),
) -> Result<CheckResult> {
    let name = format!("e2(n)/n vs conjectured limit, {pair}, n = layer {k} (informational)");
    let mut table = LayerTable::new(pair);
    let params = table.params(k);
    let ratio = BigRational::new(params.e2.clone(), params.n.clone());
    let limit = e2_ratio_conjectured_limit(pair)?;
    let (lo, hi) = limit.to_interval(192);
    let gap_bound = {
        let d1 = (&ratio - &lo).abs();
        let d2 = (&ratio - &hi).abs();
        if d1 > d2 {
            d1
        } else {
            d2
        }
    };
    let tol = BigRational::new(BigInt::from(tolerance.0), BigInt::from(tolerance.1));
    Ok(CheckResult::from(
        name,
        gap_bound <= tol,
        format!(
            "|e2/n - limit| <= {} (limit ~ {:.6})",
            gap_bound_display(&gap_bound),
            limit.to_f64()
        ),
    ))
}

fn gap_bound_display(r: &BigRational) -> String {
    let scaled = (r * BigRational::from_integer(BigInt::from(10u64.pow(12)))).to_integer();
    format!("{}e-12", scaled)
}

/// The whole suite at CLI-friendly sizes.
pub fn run_all(pair: SchlafliPair, n_max: usize, cap: usize) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    out.push(check_spiral_against_oracle(pair, n_max.min(cap), cap)?);
    out.push(check_layer_closed_forms(pair, if pair.is_euclidean() { 200 } else { 40 }));
    if pair.is_euclidean() {
        out.push(check_euclidean_perimeter(pair, n_max as u64 * 10)?);
    }
    let k_cap = max_layer_within(pair, cap.min(20_000));
    out.push(check_degree_sequences(pair, k_cap, cap)?);
    let enum_cap = if pair.is_euclidean() { 8 } else { 7 };
    out.push(check_exhaustive_extremality(pair, enum_cap, EnumOpts::default())?);
    out.push(check_duality(pair, k_cap.min(4), cap)?);
    out.push(check_spiral_duality(pair, n_max.min(500), cap)?);
    out.push(check_spiral_properties(pair, 300)?);
    if pair.is_hyperbolic() {
        out.push(check_e2_ratio_conjecture(pair, 10, (1, 10_000))?);
    }
    Ok(out)
}

/// Largest k with layer tile count within the cap.
pub fn max_layer_within(pair: SchlafliPair, cap: usize) -> u32 {
    let mut table = LayerTable::new(pair);
    let cap = BigInt::from(cap);
    let mut k = 1;
    while table.params(k + 1).n <= cap {
        k += 1;
    }
    k
}
