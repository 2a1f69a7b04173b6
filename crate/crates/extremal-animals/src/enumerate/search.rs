//! Minimum-perimeter searches over the enumeration tree.

use num::bigint::BigInt;

use super::{
    canonical_code, default_cap, extend_level, subset_code, CanonicalCode, ClassInfo,
    CodeScratch, Patch,
};
use crate::animal::build::{build_seq, SeqKind};
use crate::error::{Error, Result};
use crate::spiral::SpiralCtx;
use crate::tessellation::SchlafliPair;

/// Options for the pruned extremal search.
#[derive(Debug, Clone, Copy)]
pub struct SearchOpts {
    /// Largest n allowed (defaults a little above the exhaustive cap).
    pub cap: Option<usize>,
    pub patch_cap: usize,
    /// Cap on reported witness codes.
    pub witness_cap: usize,
}

impl Default for SearchOpts {
    fn default() -> Self {
        SearchOpts { cap: None, patch_cap: 4_000_000, witness_cap: 8 }
    }
}

/// Result of an extremal search at one tile count.
#[derive(Debug, Clone)]
pub struct ExtremalReport {
    pub pair: SchlafliPair,
    pub n: usize,
    /// Smallest perimeter any enumerated n-tile animal attained.
    pub min_e1_found: u64,
    /// Number of isometry classes attaining it.
    pub count_extremal: u64,
    /// Canonical codes of extremal classes (capped).
    pub witnesses: Vec<CanonicalCode>,
    /// Whether min_e1_found equals the spiral perimeter P(n).
    pub matches_formula: bool,
}

/// Enumerates n-tile animals that can still reach the spiral perimeter and
/// counts those that do.
///
/// Pruning is sound for animals with holes: gluing one tile changes e1 by
/// p - 2ε with ε <= p, so a partial animal with perimeter b and r tiles to
/// go ends at e1 >= b - p·r. Classes that cannot reach P(n) are dropped.
pub fn extremal_search(pair: SchlafliPair, n: usize, opts: SearchOpts) -> Result<ExtremalReport> {
    let cap = opts.cap.unwrap_or_else(|| default_cap(pair) + 2);
    if n > cap {
        return Err(Error::CapExceeded(format!(
            "n = {n} exceeds the pruned-search cap {cap} for {pair}"
        )));
    }
    assert!(n >= 1);
    let mut ctx = SpiralCtx::new(pair);
    let target_e1 = ctx.min_perimeter(&BigInt::from(n))?;
    let target: u64 = (&target_e1).try_into().expect("search sizes are small");

    let patch = Patch::for_enumeration(pair, n, opts.patch_cap)?;
    let p = pair.p() as u64;
    let root = vec![0u32];
    let mut scratch = CodeScratch::default();
    let mut level = vec![ClassInfo {
        code: subset_code(&patch, &root, &mut scratch),
        stats: patch.subset_stats(&root),
        rep: root,
    }];
    for size in 2..=n {
        let remaining = (n - size) as u64;
        level = extend_level(&patch, &level, size, |stats| {
            stats.e1.saturating_sub(p * remaining) <= target
        });
    }

    let min_e1_found = level.iter().map(|c| c.stats.e1).min().unwrap_or(u64::MAX);
    let extremal: Vec<&ClassInfo> = level
        .iter()
        .filter(|c| c.stats.e1 == min_e1_found)
        .collect();
    Ok(ExtremalReport {
        pair,
        n,
        min_e1_found,
        count_extremal: extremal.len() as u64,
        witnesses: extremal
            .iter()
            .take(opts.witness_cap)
            .map(|c| c.code.clone())
            .collect(),
        matches_formula: min_e1_found == target,
    })
}

/// Checks that the k-th member of a layered sequence is the unique
/// minimum-perimeter animal at its tile count, and that the search witness
/// is the built member itself.
pub fn verify_uniqueness(
    pair: SchlafliPair,
    kind: SeqKind,
    k: u32,
    opts: SearchOpts,
) -> Result<bool> {
    let member = build_seq(pair, kind, k, opts.patch_cap)?;
    let n = member.tile_count();
    let report = extremal_search(pair, n, opts)?;
    let member_code = canonical_code(&member);
    Ok(report.matches_formula
        && report.count_extremal == 1
        && report.witnesses.first() == Some(&member_code))
}
