//! Explicit lattice engine: animals as combinatorial maps.
//!
//! Tiles are oriented p-cycles of vertices and edges; each vertex carries its
//! fan of incident tiles in counter-clockwise order together with the two
//! perimeter edges flanking the fan. No global coordinates are kept. When a
//! fan fills up to q tiles the two flanking edges are forced to be the same
//! lattice edge and get identified, merging their far endpoints; the merge
//! can saturate further vertices, so identification cascades. For animals
//! grown in saturation order every lattice identification is forced through
//! such a closure, which pins the map into the {p,q} tessellation.
//!
//! Growth discipline used by all builders: pick a target perimeter vertex,
//! glue tiles onto its counter-clockwise flank edge until it saturates, then
//! move to the next perimeter vertex.

pub mod build;
mod serial;
mod stats;

pub use serial::parse_animal;
pub use stats::{DualAnimalParams, DualStats, GraphParams};

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::tessellation::SchlafliPair;

pub(crate) const NONE: u32 = u32::MAX;

/// Default tile cap for explicitly built animals.
pub const DEFAULT_ORACLE_CAP: usize = 100_000;

type Fan = SmallVec<[u32; 8]>;

#[derive(Debug, Clone)]
struct VertData {
    /// Incident tiles, counter-clockwise.
    fan: Fan,
    /// Outgoing perimeter edge of fan[0] at this vertex.
    flank_cw: u32,
    /// Incoming perimeter edge of fan[last] at this vertex.
    flank_ccw: u32,
    saturated: bool,
}

#[derive(Debug, Clone, Copy)]
struct EdgeData {
    a: u32,
    b: u32,
    t1: u32,
    t2: u32,
}

/// How a tile was attached, for replay and rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Insertion {
    /// Host tile the new tile was glued to (NONE for the seed).
    pub host: u32,
    /// Edge slot of the host along which it was glued.
    pub slot: u8,
    /// Gluing degree: edges shared with the animal as it stood.
    pub glue: u8,
}

/// Anchor bookkeeping for one completed layer of a layered build.
#[derive(Debug, Clone, Copy)]
pub struct LayerMark {
    pub k: u32,
    /// First perimeter vertex of the layer (x_{k,1}).
    pub anchor: u32,
    /// Tiles present once the layer completed.
    pub tiles: u32,
}

/// Running parameter counters, maintained incrementally by the growth events
/// and cross-checked against full recounts in tests.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunningCounts {
    pub n: u64,
    pub v: u64,
    pub e: u64,
    pub e1: u64,
    pub e2: u64,
    pub v_int: u64,
}

/// A {p,q}-animal as a mutable combinatorial map.
#[derive(Debug, Clone)]
pub struct AnimalMap {
    pair: SchlafliPair,
    p: usize,
    q: usize,
    tile_verts: Vec<u32>,
    tile_edges: Vec<u32>,
    vert_parent: Vec<u32>,
    vert_data: Vec<Option<VertData>>,
    edge_parent: Vec<u32>,
    edge_data: Vec<Option<EdgeData>>,
    insertions: Vec<Insertion>,
    layer_marks: Vec<LayerMark>,
    counts: RunningCounts,
    frozen: bool,
}

/// Attachment site accepted by [`AnimalMap::add_tile`].
#[derive(Debug, Clone, Copy)]
pub enum AttachSite {
    /// Glue along this perimeter edge.
    Edge(u32),
    /// Glue along the counter-clockwise flank edge of this perimeter vertex
    /// (the next free slot of its fan).
    Corner(u32),
}

impl AnimalMap {
    /// The single-tile animal.
    pub fn seed(pair: SchlafliPair) -> Self {
        let p = pair.p() as usize;
        let mut map = AnimalMap {
            pair,
            p,
            q: pair.q() as usize,
            tile_verts: Vec::new(),
            tile_edges: Vec::new(),
            vert_parent: Vec::new(),
            vert_data: Vec::new(),
            edge_parent: Vec::new(),
            edge_data: Vec::new(),
            insertions: Vec::new(),
            layer_marks: Vec::new(),
            counts: RunningCounts::default(),
            frozen: false,
        };
        let verts: Vec<u32> = (0..p).map(|_| map.new_vert()).collect();
        let edges: Vec<u32> = (0..p)
            .map(|i| map.new_edge(verts[i], verts[(i + 1) % p], 0))
            .collect();
        for i in 0..p {
            let incoming = edges[(i + p - 1) % p];
            let outgoing = edges[i];
            let data = map.vert_data[verts[i] as usize].as_mut().unwrap();
            data.fan.push(0);
            data.flank_cw = outgoing;
            data.flank_ccw = incoming;
        }
        map.tile_verts.extend(&verts);
        map.tile_edges.extend(&edges);
        map.insertions.push(Insertion { host: NONE, slot: 0, glue: 0 });
        map.counts = RunningCounts {
            n: 1,
            v: p as u64,
            e: p as u64,
            e1: p as u64,
            e2: 0,
            v_int: 0,
        };
        map.layer_marks.push(LayerMark { k: 1, anchor: verts[0], tiles: 1 });
        map
    }

    pub fn pair(&self) -> SchlafliPair {
        self.pair
    }

    pub fn tile_count(&self) -> usize {
        self.tile_verts.len() / self.p
    }

    pub fn insertions(&self) -> &[Insertion] {
        &self.insertions
    }

    pub fn layer_marks(&self) -> &[LayerMark] {
        &self.layer_marks
    }

    pub fn counts(&self) -> RunningCounts {
        self.counts
    }

    pub fn is_frozen(&self) -> bool {
        self.frozen
    }

    fn new_vert(&mut self) -> u32 {
        let id = self.vert_parent.len() as u32;
        self.vert_parent.push(id);
        self.vert_data.push(Some(VertData {
            fan: Fan::new(),
            flank_cw: NONE,
            flank_ccw: NONE,
            saturated: false,
        }));
        id
    }

    fn new_edge(&mut self, a: u32, b: u32, t1: u32) -> u32 {
        let id = self.edge_parent.len() as u32;
        self.edge_parent.push(id);
        self.edge_data.push(Some(EdgeData { a, b, t1, t2: NONE }));
        id
    }

    pub(crate) fn vfind(&mut self, mut v: u32) -> u32 {
        while self.vert_parent[v as usize] != v {
            let gp = self.vert_parent[self.vert_parent[v as usize] as usize];
            self.vert_parent[v as usize] = gp;
            v = gp;
        }
        v
    }

    pub(crate) fn efind(&mut self, mut e: u32) -> u32 {
        while self.edge_parent[e as usize] != e {
            let gp = self.edge_parent[self.edge_parent[e as usize] as usize];
            self.edge_parent[e as usize] = gp;
            e = gp;
        }
        e
    }

    fn vfind_ro(&self, mut v: u32) -> u32 {
        while self.vert_parent[v as usize] != v {
            v = self.vert_parent[v as usize];
        }
        v
    }

    fn efind_ro(&self, mut e: u32) -> u32 {
        while self.edge_parent[e as usize] != e {
            e = self.edge_parent[e as usize];
        }
        e
    }

    /// Resolved vertex cycle of a tile.
    pub fn tile_vertices(&self, t: u32) -> Vec<u32> {
        (0..self.p)
            .map(|i| self.vfind_ro(self.tile_verts[t as usize * self.p + i]))
            .collect()
    }

    /// Resolved edge cycle of a tile; edge i joins cycle vertices i, i+1.
    pub fn tile_edge_ids(&self, t: u32) -> Vec<u32> {
        (0..self.p)
            .map(|i| self.efind_ro(self.tile_edges[t as usize * self.p + i]))
            .collect()
    }

    /// Tiles incident to an edge (1 or 2).
    pub fn edge_tiles(&self, e: u32) -> (u32, u32) {
        let d = self.edge_data[self.efind_ro(e) as usize].as_ref().unwrap();
        (d.t1, d.t2)
    }

    pub fn edge_endpoints(&self, e: u32) -> (u32, u32) {
        let d = self.edge_data[self.efind_ro(e) as usize].as_ref().unwrap();
        (self.vfind_ro(d.a), self.vfind_ro(d.b))
    }

    pub fn is_perimeter_edge(&self, e: u32) -> bool {
        self.edge_data[self.efind_ro(e) as usize].as_ref().unwrap().t2 == NONE
    }

    pub fn vertex_is_saturated(&self, v: u32) -> bool {
        self.vert_data[self.vfind_ro(v) as usize]
            .as_ref()
            .unwrap()
            .saturated
    }

    /// Tiles around a vertex, counter-clockwise.
    pub fn vertex_fan(&self, v: u32) -> Vec<u32> {
        self.vert_data[self.vfind_ro(v) as usize]
            .as_ref()
            .unwrap()
            .fan
            .to_vec()
    }

    /// Degree of a vertex: fan+1 edges while on the perimeter, q when
    /// saturated.
    pub fn vertex_degree(&self, v: u32) -> u32 {
        let d = self.vert_data[self.vfind_ro(v) as usize].as_ref().unwrap();
        if d.saturated {
            self.q as u32
        } else {
            d.fan.len() as u32 + 1
        }
    }

    fn vert_data_mut(&mut self, v: u32) -> &mut VertData {
        let r = self.vfind(v);
        self.vert_data[r as usize].as_mut().unwrap()
    }

    pub(crate) fn flank_ccw(&mut self, v: u32) -> u32 {
        let r = self.vfind(v);
        let e = self.vert_data[r as usize].as_ref().unwrap().flank_ccw;
        self.efind(e)
    }

    pub(crate) fn flank_cw(&mut self, v: u32) -> u32 {
        let r = self.vfind(v);
        let e = self.vert_data[r as usize].as_ref().unwrap().flank_cw;
        self.efind(e)
    }

    /// Next perimeter vertex counter-clockwise: the far end of the outgoing
    /// flank edge.
    pub fn perimeter_next(&self, v: u32) -> u32 {
        let r = self.vfind_ro(v);
        let data = self.vert_data[r as usize].as_ref().unwrap();
        assert!(!data.saturated, "interior vertices are not on the perimeter");
        let e = self.efind_ro(data.flank_cw);
        let ed = self.edge_data[e as usize].as_ref().unwrap();
        let (a, b) = (self.vfind_ro(ed.a), self.vfind_ro(ed.b));
        if a == r {
            b
        } else {
            a
        }
    }

    /// Full perimeter cycle starting at `start`, counter-clockwise.
    pub fn perimeter_cycle(&self, start: u32) -> Vec<u32> {
        let start = self.vfind_ro(start);
        let mut out = vec![start];
        let mut cur = self.perimeter_next(start);
        while cur != start {
            out.push(cur);
            cur = self.perimeter_next(cur);
            assert!(out.len() <= self.vert_parent.len(), "perimeter walk diverged");
        }
        out
    }

    /// Glues a fresh tile onto the animal.
    ///
    /// Returns (tile id, gluing degree). The gluing degree counts all edges
    /// the new tile ends up sharing, including those identified by fan
    /// closure cascades. On error the map may be left mid-cascade and must
    /// be discarded.
    pub fn add_tile(&mut self, site: AttachSite) -> Result<(u32, u32)> {
        let edge = match site {
            AttachSite::Edge(e) => self.efind(e),
            AttachSite::Corner(v) => {
                let r = self.vfind(v);
                let data = self.vert_data[r as usize].as_ref().unwrap();
                if data.saturated {
                    return Err(Error::OverSaturation);
                }
                self.flank_ccw(r)
            }
        };
        self.add_tile_on_edge(edge)
    }

    fn add_tile_on_edge(&mut self, e: u32) -> Result<(u32, u32)> {
        assert!(!self.frozen, "frozen maps are immutable");
        let e = self.efind(e);
        let ed = *self.edge_data[e as usize].as_ref().unwrap();
        if ed.t2 != NONE {
            return Err(Error::Collision);
        }
        let host = ed.t1;
        let p = self.p;

        // Slot of e in the host and the oriented endpoints a -> b.
        let slot = (0..p)
            .find(|&i| self.efind(self.tile_edges[host as usize * p + i]) == e)
            .expect("edge belongs to its tile");
        let a = self.vfind(self.tile_verts[host as usize * p + slot]);
        let b = self.vfind(self.tile_verts[host as usize * p + (slot + 1) % p]);

        // Pre-check: both endpoint fans must have room.
        for v in [a, b] {
            let d = self.vert_data[v as usize].as_ref().unwrap();
            if d.saturated || d.fan.len() >= self.q {
                return Err(Error::OverSaturation);
            }
        }

        let t = self.tile_count() as u32;
        // New tile cycle: b, a, w1, ..., w_{p-2} counter-clockwise.
        let fresh: Vec<u32> = (0..p - 2).map(|_| self.new_vert()).collect();
        let mut cycle = Vec::with_capacity(p);
        cycle.push(b);
        cycle.push(a);
        cycle.extend(&fresh);
        let mut edges = Vec::with_capacity(p);
        edges.push(e);
        for i in 1..p {
            edges.push(self.new_edge(cycle[i], cycle[(i + 1) % p], t));
        }
        self.tile_verts.extend(&cycle);
        self.tile_edges.extend(&edges);
        self.edge_data[e as usize].as_mut().unwrap().t2 = t;

        // Fresh vertices: fan is just t, flanked by their own tile edges.
        for (i, &w) in fresh.iter().enumerate() {
            let pos = i + 2;
            let data = self.vert_data[w as usize].as_mut().unwrap();
            data.fan.push(t);
            data.flank_ccw = edges[pos - 1];
            data.flank_cw = edges[pos % p];
        }

        // a: the new tile is its clockwise-most neighbour now.
        {
            let flank = self.flank_cw(a);
            assert_eq!(flank, e, "glue edge must be the cw flank of its source");
            let data = self.vert_data_mut(a);
            data.fan.insert(0, t);
            data.flank_cw = edges[1];
        }
        // b: the new tile is its counter-clockwise-most neighbour.
        {
            let flank = self.flank_ccw(b);
            assert_eq!(flank, e, "glue edge must be the ccw flank of its target");
            let data = self.vert_data_mut(b);
            data.fan.push(t);
            data.flank_ccw = edges[p - 1];
        }

        self.counts.n += 1;
        self.counts.v += (p - 2) as u64;
        self.counts.e += (p - 1) as u64;
        self.counts.e1 += (p - 2) as u64;
        self.counts.e2 += 1;

        // Closure cascade.
        let mut glue = 1u32;
        let mut worklist = vec![a, b];
        while let Some(v) = worklist.pop() {
            let v = self.vfind(v);
            let data = self.vert_data[v as usize].as_ref().unwrap();
            if data.saturated {
                continue;
            }
            if data.fan.len() > self.q {
                return Err(Error::OverSaturation);
            }
            if data.fan.len() == self.q {
                let (merged_vertex, involves_new) = self.close_fan(v)?;
                if involves_new {
                    glue += 1;
                }
                // The merged far vertex is the only fan that grew.
                worklist.push(merged_vertex);
            }
        }
        self.insertions.push(Insertion {
            host,
            slot: slot as u8,
            glue: glue.min(u8::MAX as u32) as u8,
        });
        Ok((t, glue))
    }

    /// Identifies the two flank edges of a saturated vertex and merges their
    /// far endpoints. Returns the merged far vertex and whether the newest
    /// tile owns one of the merged edges (used for the gluing census).
    fn close_fan(&mut self, v: u32) -> Result<(u32, bool)> {
        let newest_tile = self.tile_count() as u32 - 1;
        let e_cw = self.flank_cw(v);
        let e_ccw = self.flank_ccw(v);
        assert_ne!(e_cw, e_ccw, "fan closure with a single flank edge");
        let d_cw = *self.edge_data[e_cw as usize].as_ref().unwrap();
        let d_ccw = *self.edge_data[e_ccw as usize].as_ref().unwrap();
        assert!(d_cw.t2 == NONE && d_ccw.t2 == NONE, "flanks must be perimeter edges");

        let other = |d: &EdgeData, map: &mut Self| {
            let (a, b) = (map.vfind(d.a), map.vfind(d.b));
            if a == v {
                b
            } else {
                debug_assert_eq!(b, v);
                a
            }
        };
        let x = other(&d_cw, self);
        let y = other(&d_ccw, self);

        // Merge edges: keep e_cw as the root.
        self.edge_parent[e_ccw as usize] = e_cw;
        self.edge_data[e_ccw as usize] = None;
        self.edge_data[e_cw as usize] = Some(EdgeData {
            a: v,
            b: x,
            t1: d_cw.t1,
            t2: d_ccw.t1,
        });
        self.counts.e -= 1;
        self.counts.e1 -= 2;
        self.counts.e2 += 1;

        let involves_new = d_cw.t1 == newest_tile || d_ccw.t1 == newest_tile;

        assert_ne!(x, y, "flank far endpoints already identified");
        // Merge vertices x (cw side) and y (ccw side): around the merged
        // vertex the cw-side fan comes first.
        let dx = self.vert_data[x as usize].take().unwrap();
        let dy = self.vert_data[y as usize].take().unwrap();
        if dx.saturated || dy.saturated {
            return Err(Error::OverSaturation);
        }
        let mut fan = dx.fan;
        fan.extend_from_slice(&dy.fan);
        if fan.len() > self.q {
            return Err(Error::OverSaturation);
        }
        self.vert_parent[y as usize] = x;
        self.vert_data[x as usize] = Some(VertData {
            fan,
            flank_cw: dx.flank_cw,
            flank_ccw: dy.flank_ccw,
            saturated: false,
        });
        self.counts.v -= 1;

        // v itself is now interior.
        let data = self.vert_data[v as usize].as_mut().unwrap();
        data.saturated = true;
        data.flank_cw = e_cw;
        data.flank_ccw = e_cw;
        self.counts.v_int += 1;

        Ok((x, involves_new))
    }

    /// Saturates a perimeter vertex by gluing tiles onto its ccw flank until
    /// its fan is full. Returns the number of tiles added.
    pub(crate) fn saturate_vertex(&mut self, v: u32, cap: usize) -> Result<usize> {
        let mut added = 0;
        loop {
            let r = self.vfind(v);
            if self.vert_data[r as usize].as_ref().unwrap().saturated {
                return Ok(added);
            }
            if self.tile_count() >= cap {
                return Err(Error::SizeCapExceeded { cap });
            }
            let e = self.flank_ccw(r);
            self.add_tile_on_edge(e)?;
            added += 1;
        }
    }

    /// Compacts union-find indirections and marks the map immutable.
    pub fn freeze(&mut self) {
        if self.frozen {
            return;
        }
        let mut vmap = vec![NONE; self.vert_parent.len()];
        let mut next = 0u32;
        for i in 0..self.vert_parent.len() as u32 {
            if self.vfind(i) == i {
                vmap[i as usize] = next;
                next += 1;
            }
        }
        let vcount = next as usize;
        let mut emap = vec![NONE; self.edge_parent.len()];
        let mut next = 0u32;
        for i in 0..self.edge_parent.len() as u32 {
            if self.efind(i) == i {
                emap[i as usize] = next;
                next += 1;
            }
        }
        let ecount = next as usize;

        let vres = |this: &mut Self, x: u32, vmap: &[u32]| {
            let r = this.vfind(x);
            vmap[r as usize]
        };

        for i in 0..self.tile_verts.len() {
            let r = self.vfind(self.tile_verts[i]);
            self.tile_verts[i] = vmap[r as usize];
        }
        for i in 0..self.tile_edges.len() {
            let r = self.efind(self.tile_edges[i]);
            self.tile_edges[i] = emap[r as usize];
        }

        let mut new_vdata: Vec<Option<VertData>> = vec![None; vcount];
        for i in 0..self.vert_parent.len() as u32 {
            if self.vfind(i) != i {
                continue;
            }
            let mut d = self.vert_data[i as usize].take().unwrap();
            d.flank_cw = if d.flank_cw == NONE {
                NONE
            } else {
                emap[self.efind(d.flank_cw) as usize]
            };
            d.flank_ccw = if d.flank_ccw == NONE {
                NONE
            } else {
                emap[self.efind(d.flank_ccw) as usize]
            };
            new_vdata[vmap[i as usize] as usize] = Some(d);
        }

        let mut new_edata: Vec<Option<EdgeData>> = vec![None; ecount];
        for i in 0..self.edge_parent.len() as u32 {
            if self.efind(i) != i {
                continue;
            }
            let mut d = self.edge_data[i as usize].take().unwrap();
            d.a = vres(self, d.a, &vmap);
            d.b = vres(self, d.b, &vmap);
            new_edata[emap[i as usize] as usize] = Some(d);
        }

        let resolved: Vec<u32> = self
            .layer_marks
            .iter()
            .map(|m| vmap[self.vfind_ro(m.anchor) as usize])
            .collect();
        for (mark, anchor) in self.layer_marks.iter_mut().zip(resolved) {
            mark.anchor = anchor;
        }

        self.vert_data = new_vdata;
        self.vert_parent = (0..vcount as u32).collect();
        self.edge_data = new_edata;
        self.edge_parent = (0..ecount as u32).collect();
        self.frozen = true;
    }

    /// Iterator over live edge ids.
    pub fn edge_ids(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.edge_parent.len() as u32).filter(move |&i| self.edge_data[i as usize].is_some())
    }

    /// Iterator over live vertex ids.
    pub fn vertex_ids(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.vert_parent.len() as u32).filter(move |&i| self.vert_data[i as usize].is_some())
    }
}
