//! Exhaustive enumeration of animals up to isometry, extremal searches and
//! uniqueness checks.
//!
//! Enumeration works inside a pre-grown patch of the tessellation: a
//! layered animal deep enough that every tile within reach of the search
//! has its full neighbourhood identified. Animals are tile subsets of the
//! patch; isometry classes are separated by canonical codes.

mod code;
mod search;

pub use code::{canonical_code, AnimalView, CanonicalCode, CodeScratch, MapView};
pub use search::{extremal_search, verify_uniqueness, ExtremalReport, SearchOpts};

use std::collections::HashMap;
use std::io::Read;

use rayon::prelude::*;

use crate::animal::build::build_layered;
use crate::animal::{AnimalMap, NONE};
use crate::error::{Error, Result};
use crate::tessellation::SchlafliPair;

/// Enumeration caps: exhaustive search is exponential, so sizes are gated.
#[derive(Debug, Clone, Copy)]
pub struct EnumOpts {
    /// Largest n allowed; defaults depend on the pair.
    pub cap: Option<usize>,
    /// Tile cap for the ambient patch.
    pub patch_cap: usize,
}

impl Default for EnumOpts {
    fn default() -> Self {
        EnumOpts { cap: None, patch_cap: 4_000_000 }
    }
}

fn default_cap(pair: SchlafliPair) -> usize {
    match (pair.p(), pair.q()) {
        (4, 4) => 12,
        (3, 6) => 12,
        (6, 3) => 9,
        _ => 10,
    }
}

/// Ambient lattice patch: a deep layered animal with precomputed tile
/// adjacency, used as the board enumeration plays on.
pub struct Patch {
    pair: SchlafliPair,
    p: usize,
    map: AnimalMap,
    /// Neighbour tile per (tile, slot); NONE at the patch rim.
    neighbor: Vec<u32>,
    /// Slot of the shared edge on the neighbour side.
    twin: Vec<u8>,
    /// Tiles whose whole neighbourhood is identified in the patch.
    complete: Vec<bool>,
    /// Dual-graph distance from the root tile.
    dist: Vec<u32>,
}

impl Patch {
    /// Grows a patch able to host every animal with at most `n` tiles that
    /// contains the root tile: layered depth n+1.
    pub fn for_enumeration(pair: SchlafliPair, n: usize, patch_cap: usize) -> Result<Patch> {
        let map = build_layered(pair, n as u32 + 1, patch_cap)?;
        Ok(Patch::from_map(pair, map))
    }

    fn from_map(pair: SchlafliPair, map: AnimalMap) -> Patch {
        let p = pair.p() as usize;
        let tiles = map.tile_count();
        let mut neighbor = vec![NONE; tiles * p];
        let mut twin = vec![0u8; tiles * p];
        let mut complete = vec![true; tiles];
        for t in 0..tiles as u32 {
            let edges = map.tile_edge_ids(t);
            for (slot, &e) in edges.iter().enumerate() {
                let (t1, t2) = map.edge_tiles(e);
                let nb = if t1 == t { t2 } else { t1 };
                if nb == NONE {
                    complete[t as usize] = false;
                    continue;
                }
                neighbor[t as usize * p + slot] = nb;
                twin[t as usize * p + slot] = map
                    .tile_edge_ids(nb)
                    .iter()
                    .position(|&ne| ne == e)
                    .expect("shared edge present on both sides")
                    as u8;
            }
        }
        // BFS over the dual graph from the root tile.
        let mut dist = vec![u32::MAX; tiles];
        let mut queue = std::collections::VecDeque::new();
        dist[0] = 0;
        queue.push_back(0u32);
        while let Some(t) = queue.pop_front() {
            for slot in 0..p {
                let nb = neighbor[t as usize * p + slot];
                if nb != NONE && dist[nb as usize] == u32::MAX {
                    dist[nb as usize] = dist[t as usize] + 1;
                    queue.push_back(nb);
                }
            }
        }
        Patch { pair, p, map, neighbor, twin, complete, dist }
    }

    pub fn pair(&self) -> SchlafliPair {
        self.pair
    }

    pub fn tile_count(&self) -> usize {
        self.map.tile_count()
    }

    pub fn map(&self) -> &AnimalMap {
        &self.map
    }

    fn nb(&self, t: u32, slot: usize) -> u32 {
        self.neighbor[t as usize * self.p + slot]
    }

    /// Tiles usable by an n-tile search: complete neighbourhood and within
    /// dual distance n-1 of the root.
    fn in_universe(&self, t: u32, n: usize) -> bool {
        self.complete[t as usize] && (self.dist[t as usize] as usize) < n
    }

    /// Direct parameter counts for a tile subset of the patch.
    pub fn subset_stats(&self, tiles: &[u32]) -> SubsetStats {
        let p = self.p as u64;
        let n = tiles.len() as u64;
        let inset = |t: u32| tiles.binary_search(&t).is_ok();

        let mut shared = 0u64;
        for &t in tiles {
            for slot in 0..self.p {
                let nb = self.nb(t, slot);
                if nb != NONE && inset(nb) {
                    shared += 1;
                }
            }
        }
        let e2 = shared / 2;
        let e1 = p * n - 2 * e2;
        let e = p * n - e2;

        let mut verts: Vec<u32> = tiles
            .iter()
            .flat_map(|&t| self.map.tile_vertices(t))
            .collect();
        verts.sort_unstable();
        verts.dedup();
        let v = verts.len() as u64;
        let mut v_int = 0u64;
        for &vt in &verts {
            if self.map.vertex_is_saturated(vt)
                && self.map.vertex_fan(vt).iter().all(|&ft| inset(ft))
            {
                v_int += 1;
            }
        }
        // Euler with holes: v - e + n = 1 - holes.
        let holes = (1 + e as i64 - v as i64 - n as i64).max(0) as u32;
        SubsetStats { n, v, e, e1, e2, v_int, holes }
    }

    /// Number of boundary walks of a subset (1 + holes for hole-free
    /// regions). A directed boundary side (t, slot) keeps its bounding
    /// region on the right; the walk rotates around the head vertex across
    /// the region (over absent fan tiles) to the next side, which keeps
    /// walks of distinct regions separate even at pinch vertices where two
    /// regions meet.
    pub fn subset_boundary_walks(&self, tiles: &[u32]) -> usize {
        let inset = |t: u32| tiles.binary_search(&t).is_ok();
        let mut open: Vec<(u32, usize)> = Vec::new();
        for &t in tiles {
            for slot in 0..self.p {
                let nb = self.nb(t, slot);
                if nb == NONE || !inset(nb) {
                    open.push((t, slot));
                }
            }
        }
        open.sort_unstable();
        let mut seen = vec![false; open.len()];
        let mut walks = 0;
        for i in 0..open.len() {
            if seen[i] {
                continue;
            }
            walks += 1;
            let (mut t, mut slot) = open[i];
            loop {
                let idx = open.binary_search(&(t, slot)).expect("walk stays on boundary");
                if seen[idx] {
                    break;
                }
                seen[idx] = true;
                // Head vertex of this side and the full lattice fan there.
                let head = self.map.tile_vertices(t)[(slot + 1) % self.p];
                let fan = self.map.vertex_fan(head);
                let a = fan.iter().position(|&f| f == t).expect("tile is in its corner fan");
                // Sweep counter-clockwise across absent tiles to the next
                // present one; the edge between it and its cw predecessor
                // is the next boundary side, leaving the head vertex.
                let q = fan.len();
                let mut b = (a + 1) % q;
                while !inset(fan[b]) {
                    b = (b + 1) % q;
                }
                let nt = fan[b];
                let ns = self
                    .map
                    .tile_vertices(nt)
                    .iter()
                    .position(|&v| v == head)
                    .expect("fan tile touches its vertex");
                t = nt;
                slot = ns;
            }
        }
        walks
    }
}

/// Direct counts of one enumerated animal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetStats {
    pub n: u64,
    pub v: u64,
    pub e: u64,
    pub e1: u64,
    pub e2: u64,
    pub v_int: u64,
    pub holes: u32,
}

/// One isometry class found by enumeration.
#[derive(Debug, Clone)]
pub struct ClassInfo {
    pub code: CanonicalCode,
    /// One concrete embedding (sorted patch tile ids).
    pub rep: Vec<u32>,
    pub stats: SubsetStats,
}

/// Classes by size: `levels[s-1]` holds the animals with s tiles.
pub struct Enumeration {
    pub pair: SchlafliPair,
    pub levels: Vec<Vec<ClassInfo>>,
}

impl Enumeration {
    pub fn counts(&self, allow_holes: bool) -> Vec<u64> {
        self.levels
            .iter()
            .map(|l| {
                l.iter()
                    .filter(|c| allow_holes || c.stats.holes == 0)
                    .count() as u64
            })
            .collect()
    }
}

struct PatchView<'a> {
    patch: &'a Patch,
    tiles: &'a [u32],
}

impl AnimalView for PatchView<'_> {
    fn p(&self) -> usize {
        self.patch.p
    }

    fn len(&self) -> usize {
        self.tiles.len()
    }

    fn tile_ids(&self) -> Vec<u32> {
        self.tiles.to_vec()
    }

    fn neighbor(&self, tile: u32, slot: usize) -> Option<(u32, u8)> {
        let nb = self.patch.nb(tile, slot);
        if nb == NONE || self.tiles.binary_search(&nb).is_err() {
            None
        } else {
            Some((nb, self.patch.twin[tile as usize * self.patch.p + slot]))
        }
    }
}

pub(crate) fn subset_code(patch: &Patch, tiles: &[u32], scratch: &mut CodeScratch) -> CanonicalCode {
    let view = PatchView { patch, tiles };
    scratch.canonical(&view, patch.tile_count())
}

/// Interior edges of a subset split by saturated endpoints (e20, e21, e22).
pub fn subset_dual_breakdown(patch: &Patch, tiles: &[u32]) -> (u64, u64, u64) {
    let inset = |t: u32| tiles.binary_search(&t).is_ok();
    let saturated = |v: u32| {
        patch.map.vertex_is_saturated(v) && patch.map.vertex_fan(v).iter().all(|&ft| inset(ft))
    };
    let (mut e20, mut e21, mut e22) = (0u64, 0u64, 0u64);
    for &t in tiles {
        let verts = patch.map.tile_vertices(t);
        for slot in 0..patch.p {
            let nb = patch.nb(t, slot);
            if nb == NONE || !inset(nb) || nb < t {
                continue; // count each interior edge once
            }
            let a = verts[slot];
            let b = verts[(slot + 1) % patch.p];
            match saturated(a) as u8 + saturated(b) as u8 {
                0 => e20 += 1,
                1 => e21 += 1,
                _ => e22 += 1,
            }
        }
    }
    (e20, e21, e22)
}

/// View of one connected component of the dual animal of a subset: tiles
/// are animal-saturated vertices, the q slots of a dual tile are the
/// lattice edges around the vertex in fan order, and two dual tiles are
/// adjacent when joined by a lattice edge with both endpoints saturated.
struct DualComponentView<'a> {
    q: usize,
    comp: Vec<u32>,
    rings: &'a std::collections::HashMap<u32, Vec<u32>>,
}

impl AnimalView for DualComponentView<'_> {
    fn p(&self) -> usize {
        self.q
    }

    fn len(&self) -> usize {
        self.comp.len()
    }

    fn tile_ids(&self) -> Vec<u32> {
        self.comp.clone()
    }

    fn neighbor(&self, tile: u32, slot: usize) -> Option<(u32, u8)> {
        let far = self.rings[&tile][slot];
        let ring = self.rings.get(&far)?;
        let twin = ring
            .iter()
            .position(|&w| w == tile)
            .expect("dual adjacency is symmetric") as u8;
        Some((far, twin))
    }
}

/// Canonical code of the dual animal of a subset: the sorted component
/// codes joined by a 0xFF separator (the dual animal may be disconnected).
/// None when the subset has no saturated vertex.
pub fn dual_subset_code(
    patch: &Patch,
    tiles: &[u32],
    scratch: &mut CodeScratch,
) -> Option<CanonicalCode> {
    let inset = |t: u32| tiles.binary_search(&t).is_ok();
    let mut verts: Vec<u32> = tiles
        .iter()
        .flat_map(|&t| patch.map.tile_vertices(t))
        .filter(|&v| {
            patch.map.vertex_is_saturated(v)
                && patch.map.vertex_fan(v).iter().all(|&ft| inset(ft))
        })
        .collect();
    verts.sort_unstable();
    verts.dedup();
    if verts.is_empty() {
        return None;
    }
    // Edge ring around each saturated vertex: the fan tile's incoming edge
    // at the vertex leads to the neighbouring dual vertex.
    let mut rings = std::collections::HashMap::new();
    for &v in &verts {
        let fan = patch.map.vertex_fan(v);
        let mut ring = Vec::with_capacity(fan.len());
        for &t in &fan {
            let cycle = patch.map.tile_vertices(t);
            let j = cycle
                .iter()
                .position(|&x| x == v)
                .expect("fan tile touches its vertex");
            ring.push(cycle[(j + cycle.len() - 1) % cycle.len()]);
        }
        rings.insert(v, ring);
    }
    // Split into connected components through saturated neighbours.
    let universe = patch.map.vertex_ids().count();
    let q = patch.pair.q() as usize;
    let mut assigned: std::collections::HashSet<u32> = Default::default();
    let mut codes: Vec<Vec<u8>> = Vec::new();
    for &start in &verts {
        if assigned.contains(&start) {
            continue;
        }
        let mut comp = vec![start];
        assigned.insert(start);
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            for &far in &rings[&v] {
                if rings.contains_key(&far) && assigned.insert(far) {
                    comp.push(far);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        let view = DualComponentView { q, comp, rings: &rings };
        codes.push(scratch.canonical(&view, universe).0);
    }
    codes.sort_unstable();
    Some(CanonicalCode(codes.join(&0xFFu8)))
}

/// Enumerates every isometry class of {p,q}-animals with 1..=n tiles.
///
/// Classes are grown level by level: each class of size s is extended by
/// every adjacent universe tile, children are canonicalised and deduplicated
/// by code. Holes appear naturally; filter on `stats.holes` if unwanted.
/// Output order is deterministic (sorted by code at every level).
pub fn enumerate_animals(pair: SchlafliPair, n: usize, opts: EnumOpts) -> Result<Enumeration> {
    let cap = opts.cap.unwrap_or_else(|| default_cap(pair));
    if n > cap {
        return Err(Error::CapExceeded(format!(
            "n = {n} exceeds the exhaustive cap {cap} for {pair}"
        )));
    }
    if n == 0 {
        return Ok(Enumeration { pair, levels: Vec::new() });
    }
    let patch = Patch::for_enumeration(pair, n, opts.patch_cap)?;
    let mut levels: Vec<Vec<ClassInfo>> = Vec::with_capacity(n);

    let root = vec![0u32];
    let mut scratch = CodeScratch::default();
    levels.push(vec![ClassInfo {
        code: subset_code(&patch, &root, &mut scratch),
        stats: patch.subset_stats(&root),
        rep: root,
    }]);

    for s in 1..n {
        let next = extend_level(&patch, &levels[s - 1], s + 1, |_| true);
        levels.push(next);
    }
    Ok(Enumeration { pair, levels })
}

/// Grows every class of `prev` by one tile, keeping children that pass
/// `keep`, deduplicated by canonical code. `size` is the child size, used
/// for the universe restriction.
pub(crate) fn extend_level<F>(
    patch: &Patch,
    prev: &[ClassInfo],
    size: usize,
    keep: F,
) -> Vec<ClassInfo>
where
    F: Fn(&SubsetStats) -> bool + Sync,
{
    let maps: Vec<HashMap<CanonicalCode, ClassInfo>> = prev
        .par_iter()
        .fold(
            || (CodeScratch::default(), HashMap::new()),
            |(mut scratch, mut acc), class: &ClassInfo| {
                let mut candidates: Vec<u32> = class
                    .rep
                    .iter()
                    .flat_map(|&t| (0..patch.p).map(move |s| patch.nb(t, s)))
                    .filter(|&nb| {
                        nb != NONE
                            && patch.in_universe(nb, size)
                            && class.rep.binary_search(&nb).is_err()
                    })
                    .collect();
                candidates.sort_unstable();
                candidates.dedup();
                for cand in candidates {
                    let mut tiles = class.rep.clone();
                    let pos = tiles.binary_search(&cand).unwrap_err();
                    tiles.insert(pos, cand);
                    let stats = patch.subset_stats(&tiles);
                    if !keep(&stats) {
                        continue;
                    }
                    let code = subset_code(patch, &tiles, &mut scratch);
                    acc.entry(code.clone())
                        .or_insert_with(|| ClassInfo { code, rep: tiles, stats });
                }
                (scratch, acc)
            },
        )
        .map(|(_, acc)| acc)
        .collect();

    let mut merged: HashMap<CanonicalCode, ClassInfo> = HashMap::new();
    for m in maps {
        for (k, v) in m {
            merged.entry(k).or_insert(v);
        }
    }
    let mut out: Vec<ClassInfo> = merged.into_values().collect();
    out.sort_unstable_by(|a, b| a.code.cmp(&b.code));
    out
}

/// Independent engine for cross-validation: enumerates every connected tile
/// subset of the universe that contains the root tile, exactly once, then
/// canonicalises. Exponential; intended for n <= 6.
pub fn enumerate_animals_by_subsets(
    pair: SchlafliPair,
    n: usize,
    opts: EnumOpts,
) -> Result<Vec<u64>> {
    if n > 7 {
        return Err(Error::CapExceeded(
            "subset cross-validation engine is capped at n = 7".into(),
        ));
    }
    let patch = Patch::for_enumeration(pair, n, opts.patch_cap)?;
    let mut scratch = CodeScratch::default();
    let mut seen: Vec<std::collections::HashSet<CanonicalCode>> =
        (0..n).map(|_| Default::default()).collect();

    fn frontier(patch: &Patch, tiles: &[u32], forbidden: &[u32], n: usize) -> Vec<u32> {
        let mut out: Vec<u32> = tiles
            .iter()
            .flat_map(|&t| (0..patch.p).map(move |s| patch.nb(t, s)))
            .filter(|&nb| {
                nb != NONE
                    && patch.in_universe(nb, n)
                    && tiles.binary_search(&nb).is_err()
                    && !forbidden.contains(&nb)
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn rec(
        patch: &Patch,
        tiles: &mut Vec<u32>,
        forbidden: &mut Vec<u32>,
        n: usize,
        scratch: &mut CodeScratch,
        seen: &mut [std::collections::HashSet<CanonicalCode>],
    ) {
        let mut sorted = tiles.clone();
        sorted.sort_unstable();
        seen[sorted.len() - 1].insert(subset_code(patch, &sorted, scratch));
        if tiles.len() == n {
            return;
        }
        let cands = frontier(patch, &sorted, forbidden, n);
        let base_forbidden = forbidden.len();
        for &c in &cands {
            tiles.push(c);
            rec(patch, tiles, forbidden, n, scratch, seen);
            tiles.pop();
            forbidden.push(c);
        }
        forbidden.truncate(base_forbidden);
    }
    let mut tiles: Vec<u32> = vec![0];
    let mut forbidden: Vec<u32> = Vec::new();
    rec(&patch, &mut tiles, &mut forbidden, n, &mut scratch, &mut seen);
    Ok(seen.into_iter().map(|s| s.len() as u64).collect())
}

/// A published reference enumeration value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RefCount {
    pub p: u32,
    pub q: u32,
    pub n: u32,
    pub count: u64,
}

/// Reads reference counts from CSV with header `p,q,n,count`.
pub fn read_reference_counts<R: Read>(reader: R) -> Result<Vec<RefCount>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let mut out = Vec::new();
    for (i, record) in rdr.records().enumerate() {
        let record = record.map_err(|e| Error::MalformedReference(e.to_string()))?;
        if record.len() != 4 {
            return Err(Error::MalformedReference(format!(
                "row {}: expected 4 columns, got {}",
                i + 2,
                record.len()
            )));
        }
        let parse = |j: usize| -> Result<u64> {
            record[j].parse().map_err(|_| {
                Error::MalformedReference(format!("row {}: bad number {:?}", i + 2, &record[j]))
            })
        };
        out.push(RefCount {
            p: parse(0)? as u32,
            q: parse(1)? as u32,
            n: parse(2)? as u32,
            count: parse(3)?,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tessellation::validate_pair;

    fn counts(p: u32, q: u32, n: usize) -> Vec<u64> {
        enumerate_animals(validate_pair(p, q).unwrap(), n, EnumOpts::default())
            .unwrap()
            .counts(true)
    }

    #[test]
    fn free_polyomino_counts() {
        assert_eq!(counts(4, 4, 7), vec![1, 1, 2, 5, 12, 35, 108]);
    }

    #[test]
    fn free_polyiamond_counts() {
        assert_eq!(counts(3, 6, 7), vec![1, 1, 1, 3, 4, 12, 24]);
    }

    #[test]
    fn free_polyhex_counts() {
        assert_eq!(counts(6, 3, 5), vec![1, 1, 3, 7, 22]);
    }

    #[test]
    fn hyperbolic_small_counts() {
        // Two trominoes as in the square lattice; five tetromino classes
        // (the 2x2 block does not close around a 5-valent vertex but is
        // still one class).
        let c = counts(4, 5, 4);
        assert_eq!(c, vec![1, 1, 2, 5]);
        let c = counts(3, 7, 3);
        assert_eq!(c, vec![1, 1, 1]);
    }

    #[test]
    fn engines_agree_on_small_sizes() {
        for (p, q, n) in [(4, 4, 6), (3, 6, 6), (6, 3, 5), (4, 5, 6), (3, 7, 5), (7, 3, 5)] {
            let pair = validate_pair(p, q).unwrap();
            let a = enumerate_animals(pair, n, EnumOpts::default())
                .unwrap()
                .counts(true);
            let b = enumerate_animals_by_subsets(pair, n, EnumOpts::default()).unwrap();
            assert_eq!(a, b, "engines disagree on {{{p},{q}}}");
        }
    }

    #[test]
    fn equal_duals_imply_equal_animals_when_no_stray_edges() {
        // Classes whose dual graph has no face-free edge are pinned down by
        // their dual: among them, dual codes are pairwise distinct.
        for (p, q, n_max) in [(4, 4, 8), (4, 5, 7), (3, 7, 8), (6, 3, 6)] {
            let pair = validate_pair(p, q).unwrap();
            let patch = Patch::for_enumeration(pair, n_max, EnumOpts::default().patch_cap).unwrap();
            let enumeration = enumerate_animals(pair, n_max, EnumOpts::default()).unwrap();
            let mut scratch = CodeScratch::default();
            for level in &enumeration.levels {
                let mut seen: HashMap<CanonicalCode, &ClassInfo> = HashMap::new();
                for class in level {
                    if class.stats.v_int == 0 {
                        continue;
                    }
                    let (e20, _, _) = subset_dual_breakdown(&patch, &class.rep);
                    if e20 != 0 {
                        continue;
                    }
                    let dual = dual_subset_code(&patch, &class.rep, &mut scratch).unwrap();
                    if let Some(other) = seen.insert(dual, class) {
                        panic!(
                            "{{{p},{q}}}: two distinct {}-tile classes share a dual: {:?} vs {:?}",
                            class.stats.n, other.rep, class.rep
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn hole_counts_match_published_values() {
        // Polyominoes with holes: none below 7 cells, one heptomino,
        // six octominoes.
        let pair = validate_pair(4, 4).unwrap();
        let enumeration = enumerate_animals(pair, 8, EnumOpts::default()).unwrap();
        let holey: Vec<u64> = enumeration
            .levels
            .iter()
            .map(|l| l.iter().filter(|c| c.stats.holes > 0).count() as u64)
            .collect();
        assert_eq!(holey, vec![0, 0, 0, 0, 0, 0, 1, 6]);
        // The full 3x3 square minus its centre: a ring with two boundary
        // walks.
        let patch = Patch::for_enumeration(pair, 8, EnumOpts::default().patch_cap).unwrap();
        let ring: Vec<&ClassInfo> = enumeration.levels[7]
            .iter()
            .filter(|c| c.stats.holes > 0 && c.stats.e1 == 16)
            .collect();
        assert_eq!(ring.len(), 1);
        assert_eq!(ring[0].stats.e2, 8);
        assert_eq!(ring[0].stats.v_int, 0);
        assert_eq!(patch.subset_boundary_walks(&ring[0].rep), 2);
    }

    #[test]
    fn boundary_walks_match_euler_holes() {
        let pair = validate_pair(4, 4).unwrap();
        let enumeration = enumerate_animals(pair, 8, EnumOpts::default()).unwrap();
        let patch = Patch::for_enumeration(pair, 8, EnumOpts::default().patch_cap).unwrap();
        for level in &enumeration.levels {
            for class in level {
                assert_eq!(
                    patch.subset_boundary_walks(&class.rep),
                    class.stats.holes as usize + 1
                );
            }
        }
    }

    #[test]
    fn reference_csv_parses() {
        let csv = "p,q,n,count\n4,4,1,1\n4,4,2,1\n";
        let rows = read_reference_counts(csv.as_bytes()).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[1], RefCount { p: 4, q: 4, n: 2, count: 1 });
        assert!(read_reference_counts("p,q\n1,2\n".as_bytes()).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_animals(validate_pair(4, 5).unwrap(), 11, EnumOpts::default()),
            Err(Error::CapExceeded(_))
        ));
    }
}
