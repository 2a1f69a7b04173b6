//! Builders for the layered, spiral and seeded-growth animal families.

use num::bigint::BigInt;

use super::{AnimalMap, AttachSite, LayerMark, NONE};
use crate::error::{Error, Result};
use crate::tessellation::SchlafliPair;

/// Which seeded layered sequence to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqKind {
    /// Layered growth of a single tile.
    A,
    /// Layered growth of a single vertex (all q tiles around it at step 2).
    B,
    /// Layered growth of the two-tile animal.
    C,
    /// Layered growth of a single edge (its incident tiles at step 2).
    D,
}

impl std::str::FromStr for SeqKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(SeqKind::A),
            "B" | "b" => Ok(SeqKind::B),
            "C" | "c" => Ok(SeqKind::C),
            "D" | "d" => Ok(SeqKind::D),
            other => Err(Error::OutOfValidRange(format!(
                "unknown sequence kind {other:?}, expected A, B, C or D"
            ))),
        }
    }
}

impl AnimalMap {
    /// Saturates every perimeter vertex of the current animal once, in
    /// counter-clockwise order from `start`. Returns the anchor vertex of
    /// the new layer: the first fresh vertex of the first tile glued.
    fn grow_layer(&mut self, start: u32, cap: usize) -> Result<u32> {
        let targets = self.perimeter_cycle(start);
        let mut anchor = NONE;
        for &tv in &targets {
            let before = self.tile_count() as u32;
            self.saturate_vertex(tv, cap)?;
            if anchor == NONE && self.tile_count() as u32 > before {
                // Cycle position 2 of the first glued tile is w1, the vertex
                // adjacent to the previous layer's last perimeter vertex.
                anchor = self.tile_verts[before as usize * self.p + 2];
            }
        }
        assert_ne!(anchor, NONE, "a layer never comes out empty");
        Ok(self.vfind(anchor))
    }

    fn record_layer(&mut self, anchor: u32) {
        let k = self.layer_marks.last().map_or(1, |m| m.k + 1);
        let tiles = self.tile_count() as u32;
        self.layer_marks.push(LayerMark { k, anchor, tiles });
    }
}

/// The complete k-layered animal, frozen, with per-layer anchors recorded.
pub fn build_layered(pair: SchlafliPair, k: u32, cap: usize) -> Result<AnimalMap> {
    assert!(k >= 1);
    let mut map = AnimalMap::seed(pair);
    for _ in 2..=k {
        let start = map.layer_marks.last().unwrap().anchor;
        let anchor = map.grow_layer(start, cap)?;
        map.record_layer(anchor);
    }
    map.freeze();
    Ok(map)
}

/// The n-tile spiral: complete layers first, then the partial layer tile by
/// tile in counter-clockwise saturation order.
pub fn build_spiral(pair: SchlafliPair, n: usize, cap: usize) -> Result<AnimalMap> {
    build_spiral_with(pair, n, cap, |_, _| {})
}

/// Spiral builder invoking `observe(tiles_so_far, &map)` after every glued
/// tile, for callers that need the whole parameter trajectory.
pub fn build_spiral_with<F>(
    pair: SchlafliPair,
    n: usize,
    cap: usize,
    mut observe: F,
) -> Result<AnimalMap>
where
    F: FnMut(usize, &AnimalMap),
{
    assert!(n >= 1);
    if n > cap {
        return Err(Error::SizeCapExceeded { cap });
    }
    let mut map = AnimalMap::seed(pair);
    observe(1, &map);
    'outer: while map.tile_count() < n {
        let start = map.layer_marks.last().unwrap().anchor;
        let targets = map.perimeter_cycle(start);
        let mut anchor = NONE;
        for &tv in &targets {
            loop {
                let r = map.vfind(tv);
                if map.vertex_is_saturated(r) {
                    break;
                }
                if map.tile_count() == n {
                    break 'outer;
                }
                let e = map.flank_ccw(r);
                let before = map.tile_count() as u32;
                map.add_tile(AttachSite::Edge(e))?;
                observe(map.tile_count(), &map);
                if anchor == NONE {
                    anchor = map.tile_verts[before as usize * map.p + 2];
                }
            }
        }
        let anchor = map.vfind(anchor);
        map.record_layer(anchor);
    }
    map.freeze();
    Ok(map)
}

/// Seeded layered sequences. `k = 1` is only an animal for kinds A and C;
/// for B and D the k = 1 seeds are a bare vertex and a bare edge, so k >= 2
/// is required there.
pub fn build_seq(pair: SchlafliPair, kind: SeqKind, k: u32, cap: usize) -> Result<AnimalMap> {
    match kind {
        SeqKind::A => build_layered(pair, k, cap),
        SeqKind::B => {
            if k < 2 {
                return Err(Error::OutOfValidRange(
                    "B(1) is a single vertex, not an animal; need k >= 2".into(),
                ));
            }
            let mut map = AnimalMap::seed(pair);
            // B(2): all q tiles around one vertex of the seed.
            map.saturate_vertex(map.tile_verts[0], cap)?;
            map.layer_marks.clear();
            grow_rounds(&mut map, k - 2, cap)?;
            map.freeze();
            Ok(map)
        }
        SeqKind::C => {
            let mut map = AnimalMap::seed(pair);
            let e = map.tile_edges[0];
            map.add_tile(AttachSite::Edge(e))?;
            map.layer_marks.clear();
            grow_rounds(&mut map, k - 1, cap)?;
            map.freeze();
            Ok(map)
        }
        SeqKind::D => {
            if k < 2 {
                return Err(Error::OutOfValidRange(
                    "D(1) is a single edge, not an animal; need k >= 2".into(),
                ));
            }
            let mut map = AnimalMap::seed(pair);
            // D(2): all tiles incident to either endpoint of one edge.
            let (a, b) = map.edge_endpoints(map.tile_edges[0]);
            map.saturate_vertex(a, cap)?;
            map.saturate_vertex(b, cap)?;
            map.layer_marks.clear();
            grow_rounds(&mut map, k - 2, cap)?;
            map.freeze();
            Ok(map)
        }
    }
}

fn grow_rounds(map: &mut AnimalMap, rounds: u32, cap: usize) -> Result<()> {
    for _ in 0..rounds {
        let start = map
            .vertex_ids()
            .find(|&v| !map.vertex_is_saturated(v))
            .expect("finite animals always have a perimeter");
        map.grow_layer(start, cap)?;
    }
    Ok(())
}

/// Tile count of a seeded sequence member without keeping the map.
pub fn seq_tile_count(pair: SchlafliPair, kind: SeqKind, k: u32, cap: usize) -> Result<BigInt> {
    Ok(BigInt::from(build_seq(pair, kind, k, cap)?.tile_count()))
}
