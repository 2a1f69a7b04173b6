//! Canonical codes: isometry-invariant byte encodings of embedded animals.
//!
//! A transcript develops the animal tile by tile from a root tile, a
//! starting edge slot and a traversal handedness: tiles are numbered in
//! BFS discovery order, and for each tile the p edge slots are scanned
//! rotationally from its entry edge, emitting 0 for an absent neighbour and
//! the neighbour's 1-based BFS number otherwise. The transcript determines
//! the animal up to the isometry pinned by the chosen flag, so the
//! lexicographic minimum over all (root, slot, handedness) is equal for two
//! animals exactly when some isometry of the tessellation maps one onto the
//! other, reflections included.

use crate::animal::AnimalMap;

/// Lexicographically minimal transcript; `n * p` bytes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(pub Vec<u8>);

impl CanonicalCode {
    pub fn tiles(&self, p: usize) -> usize {
        self.0.len() / p
    }

    pub fn hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Adjacency view of one embedded animal.
///
/// Tiles are identified by ids valid for the view; `neighbor` resolves an
/// edge slot to the neighbouring tile inside the animal (with the slot of
/// the shared edge on the neighbour's side), or None when the slot faces
/// outward.
pub trait AnimalView {
    fn p(&self) -> usize;
    fn len(&self) -> usize;
    fn is_empty(&self) -> bool {
        self.len() == 0
    }
    fn tile_ids(&self) -> Vec<u32>;
    fn neighbor(&self, tile: u32, slot: usize) -> Option<(u32, u8)>;
}

/// Reusable buffers for transcript generation.
#[derive(Default)]
pub struct CodeScratch {
    index_of: Vec<u8>,
    touched: Vec<u32>,
    order: Vec<u32>,
    entry: Vec<u8>,
    buf: Vec<u8>,
    best: Vec<u8>,
}

impl CodeScratch {
    fn reset(&mut self, universe: usize) {
        if self.index_of.len() < universe {
            self.index_of.resize(universe, 0);
        }
        for &t in &self.touched {
            self.index_of[t as usize] = 0;
        }
        self.touched.clear();
        self.order.clear();
        self.entry.clear();
        self.buf.clear();
    }

    /// One transcript; returns false if it was abandoned as worse than the
    /// current best.
    fn transcript<V: AnimalView>(
        &mut self,
        view: &V,
        universe: usize,
        root: u32,
        start: u8,
        reversed: bool,
        compare: bool,
    ) -> bool {
        self.reset(universe);
        let p = view.p();
        self.order.push(root);
        self.entry.push(start);
        self.index_of[root as usize] = 1;
        self.touched.push(root);
        let mut bi = 0;
        while bi < self.order.len() {
            let t = self.order[bi];
            let e0 = self.entry[bi] as usize;
            for j in 0..p {
                let slot = if reversed { (e0 + p - j) % p } else { (e0 + j) % p };
                let byte = match view.neighbor(t, slot) {
                    None => 0,
                    Some((nb, twin)) => {
                        let idx = self.index_of[nb as usize];
                        if idx != 0 {
                            idx
                        } else {
                            let new = (self.order.len() + 1) as u8;
                            self.index_of[nb as usize] = new;
                            self.touched.push(nb);
                            self.order.push(nb);
                            self.entry.push(twin);
                            new
                        }
                    }
                };
                if compare {
                    let pos = self.buf.len();
                    match byte.cmp(&self.best[pos]) {
                        std::cmp::Ordering::Greater => return false,
                        std::cmp::Ordering::Less => {
                            // Strictly better: stop comparing, just emit.
                            self.buf.push(byte);
                            self.finish_transcript(view, universe, bi, j + 1, reversed);
                            return true;
                        }
                        std::cmp::Ordering::Equal => self.buf.push(byte),
                    }
                }
                if !compare {
                    self.buf.push(byte);
                }
            }
            bi += 1;
        }
        true
    }

    /// Completes a transcript that already proved strictly smaller.
    fn finish_transcript<V: AnimalView>(
        &mut self,
        view: &V,
        _universe: usize,
        mut bi: usize,
        mut j0: usize,
        reversed: bool,
    ) {
        let p = view.p();
        while bi < self.order.len() {
            let t = self.order[bi];
            let e0 = self.entry[bi] as usize;
            for j in j0..p {
                let slot = if reversed { (e0 + p - j) % p } else { (e0 + j) % p };
                let byte = match view.neighbor(t, slot) {
                    None => 0,
                    Some((nb, twin)) => {
                        let idx = self.index_of[nb as usize];
                        if idx != 0 {
                            idx
                        } else {
                            let new = (self.order.len() + 1) as u8;
                            self.index_of[nb as usize] = new;
                            self.touched.push(nb);
                            self.order.push(nb);
                            self.entry.push(twin);
                            new
                        }
                    }
                };
                self.buf.push(byte);
            }
            j0 = 0;
            bi += 1;
        }
    }

    /// Minimal transcript over all roots, starting slots and handedness.
    pub fn canonical<V: AnimalView>(&mut self, view: &V, universe: usize) -> CanonicalCode {
        let n = view.len();
        assert!((1..=254).contains(&n), "codes support 1..=254 tiles");
        let p = view.p();
        let roots = view.tile_ids();
        let mut have_best = false;
        self.best.clear();
        for &root in &roots {
            for start in 0..p as u8 {
                for reversed in [false, true] {
                    if !have_best {
                        self.transcript(view, universe, root, start, reversed, false);
                        self.best = self.buf.clone();
                        have_best = true;
                        continue;
                    }
                    if self.transcript(view, universe, root, start, reversed, true)
                        && self.buf.len() == n * p
                        && self.buf < self.best
                    {
                        std::mem::swap(&mut self.best, &mut self.buf);
                    }
                }
            }
        }
        debug_assert_eq!(self.best.len(), n * p);
        CanonicalCode(self.best.clone())
    }
}

/// View over a whole frozen [`AnimalMap`].
pub struct MapView<'a> {
    map: &'a AnimalMap,
}

impl<'a> MapView<'a> {
    pub fn new(map: &'a AnimalMap) -> Self {
        MapView { map }
    }
}

impl AnimalView for MapView<'_> {
    fn p(&self) -> usize {
        self.map.pair().p() as usize
    }

    fn len(&self) -> usize {
        self.map.tile_count()
    }

    fn tile_ids(&self) -> Vec<u32> {
        (0..self.map.tile_count() as u32).collect()
    }

    fn neighbor(&self, tile: u32, slot: usize) -> Option<(u32, u8)> {
        let e = self.map.tile_edge_ids(tile)[slot];
        let (t1, t2) = self.map.edge_tiles(e);
        let nb = if t1 == tile { t2 } else { t1 };
        if nb == crate::animal::NONE {
            return None;
        }
        let twin = self
            .map
            .tile_edge_ids(nb)
            .iter()
            .position(|&ne| ne == e)
            .expect("shared edge is in both tiles") as u8;
        Some((nb, twin))
    }
}

/// Canonical code of a built animal.
pub fn canonical_code(map: &AnimalMap) -> CanonicalCode {
    let view = MapView::new(map);
    let universe = map.tile_count();
    CodeScratch::default().canonical(&view, universe)
}
