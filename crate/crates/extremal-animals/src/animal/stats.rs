//! Direct parameter counts and dual-graph statistics of a built animal.

use std::collections::BTreeMap;

use num::bigint::BigInt;

use super::{AnimalMap, NONE};
use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};
use crate::layers::DegreeCounts;

/// Directly counted parameters of an animal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphParams {
    pub n: u64,
    pub v: u64,
    pub e: u64,
    pub e1: u64,
    pub e2: u64,
    pub v_int: u64,
    /// Vertex degree histogram over perimeter vertices.
    pub perimeter_degrees: BTreeMap<u32, u64>,
}

impl GraphParams {
    pub fn degree_counts(&self) -> DegreeCounts {
        self.perimeter_degrees
            .iter()
            .map(|(d, c)| (*d, BigInt::from(*c)))
            .collect()
    }
}

/// Dual-graph statistics: the dual has one vertex per tile, one edge per
/// interior edge, and one face per saturated vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualStats {
    /// Faces of the dual = interior vertices of the primal.
    pub n_dual: u64,
    /// Edges of the dual = interior edges of the primal.
    pub e_dual: u64,
    /// Interior edges by number of saturated endpoints.
    pub e20: u64,
    pub e21: u64,
    pub e22: u64,
    /// Connected components of the dual graph.
    pub c_dual: u64,
}

/// Parameters of the dual animal (the union of dual faces), defined when
/// every dual edge borders a dual face (e20 = 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualAnimalParams {
    pub n: u64,
    pub v: u64,
    pub e: u64,
    pub e1: u64,
    pub e2: u64,
    pub v_int: u64,
}

impl AnimalMap {
    /// Full direct recount; also validates the incremental counters.
    pub fn graph_params(&self) -> GraphParams {
        let q = self.q as u32;
        let mut v = 0u64;
        let mut v_int = 0u64;
        let mut perimeter_degrees = BTreeMap::new();
        for vid in self.vertex_ids() {
            v += 1;
            let data = self.vert_data[vid as usize].as_ref().unwrap();
            if data.saturated {
                v_int += 1;
            } else {
                let deg = data.fan.len() as u32 + 1;
                debug_assert!(deg <= q);
                *perimeter_degrees.entry(deg).or_insert(0) += 1;
            }
        }
        let mut e = 0u64;
        let mut e1 = 0u64;
        for eid in self.edge_ids() {
            e += 1;
            if self.edge_data[eid as usize].as_ref().unwrap().t2 == NONE {
                e1 += 1;
            }
        }
        let e2 = e - e1;
        let params = GraphParams {
            n: self.tile_count() as u64,
            v,
            e,
            e1,
            e2,
            v_int,
            perimeter_degrees,
        };
        let c = self.counts();
        debug_assert_eq!(
            (c.n, c.v, c.e, c.e1, c.e2, c.v_int),
            (params.n, params.v, params.e, params.e1, params.e2, params.v_int),
            "running counters diverged from recount"
        );
        params
    }

    /// Number of boundary walks; one for a hole-free animal. Walks follow
    /// the cw flank from every perimeter vertex, so each boundary cycle is
    /// traversed exactly once.
    pub fn boundary_walks(&self) -> usize {
        let mut seen = vec![false; self.vert_parent.len()];
        let mut walks = 0;
        for v in self.vertex_ids() {
            if seen[v as usize] || self.vertex_is_saturated(v) {
                continue;
            }
            walks += 1;
            let mut cur = v;
            loop {
                seen[cur as usize] = true;
                cur = self.perimeter_next(cur);
                if cur == v {
                    break;
                }
            }
        }
        walks
    }

    /// Dual statistics, with the two structural identities asserted:
    /// n - e2 + v_int = c' and (q-1)·e2 = q(n-c') - e20 + e22.
    pub fn dual_stats(&self) -> DualStats {
        let params = self.graph_params();
        let mut e20 = 0u64;
        let mut e21 = 0u64;
        let mut e22 = 0u64;
        // Union-find over tiles through interior edges for c'.
        let mut parent: Vec<u32> = (0..self.tile_count() as u32).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                let gp = parent[parent[x as usize] as usize];
                parent[x as usize] = gp;
                x = gp;
            }
            x
        }
        for eid in self.edge_ids() {
            let data = self.edge_data[eid as usize].as_ref().unwrap();
            if data.t2 == NONE {
                continue;
            }
            let (a, b) = self.edge_endpoints(eid);
            let sat = self.vertex_is_saturated(a) as u64 + self.vertex_is_saturated(b) as u64;
            match sat {
                0 => e20 += 1,
                1 => e21 += 1,
                _ => e22 += 1,
            }
            let (ra, rb) = (find(&mut parent, data.t1), find(&mut parent, data.t2));
            if ra != rb {
                parent[ra as usize] = rb;
            }
        }
        let mut c_dual = 0u64;
        for t in 0..self.tile_count() as u32 {
            if find(&mut parent, t) == t {
                c_dual += 1;
            }
        }
        let stats = DualStats {
            n_dual: params.v_int,
            e_dual: params.e2,
            e20,
            e21,
            e22,
            c_dual,
        };
        assert_eq!(stats.e20 + stats.e21 + stats.e22, stats.e_dual);
        assert_eq!(
            params.n as i128 - params.e2 as i128 + params.v_int as i128,
            stats.c_dual as i128,
            "Euler lift failed"
        );
        let q = self.q as i128;
        assert_eq!(
            (q - 1) * params.e2 as i128,
            q * (params.n as i128 - stats.c_dual as i128) - stats.e20 as i128
                + stats.e22 as i128,
            "interior-edge identity failed"
        );
        stats
    }

    /// Parameters of the dual animal: tiles are the saturated vertices.
    /// Requires e20 = 0, otherwise the dual graph carries edges that lie on
    /// no dual face and is not an animal.
    pub fn dual_animal_params(&self) -> Result<DualAnimalParams> {
        let stats = self.dual_stats();
        if stats.e20 != 0 {
            return Err(Error::OutOfValidRange(format!(
                "dual graph has {} face-free edges; not an animal",
                stats.e20
            )));
        }
        // Dual vertices: tiles incident to at least one saturated vertex.
        let mut v = 0u64;
        'tiles: for t in 0..self.tile_count() as u32 {
            for vtx in self.tile_vertices(t) {
                if self.vertex_is_saturated(vtx) {
                    v += 1;
                    continue 'tiles;
                }
            }
        }
        // Dual interior vertices: tiles all of whose corners are saturated.
        let mut v_int = 0u64;
        for t in 0..self.tile_count() as u32 {
            if self
                .tile_vertices(t)
                .into_iter()
                .all(|vtx| self.vertex_is_saturated(vtx))
            {
                v_int += 1;
            }
        }
        Ok(DualAnimalParams {
            n: stats.n_dual,
            v,
            e: stats.e_dual,
            e1: stats.e21,
            e2: stats.e22,
            v_int,
        })
    }

    /// Degrees along the perimeter of a layered animal, counter-clockwise
    /// from the anchor x_{k,1}, run-length compressed.
    pub fn read_degree_sequence(&self) -> Result<DegreeSequence> {
        let mark = self.layer_marks.last().ok_or(Error::MissingLabels)?;
        if mark.tiles as usize != self.tile_count() {
            // Grown past the recorded layer (partial spiral): labels stale.
            return Err(Error::MissingLabels);
        }
        let cycle = self.perimeter_cycle(mark.anchor);
        let degrees: Vec<u32> = cycle.into_iter().map(|v| self.vertex_degree(v)).collect();
        DegreeSequence::from_degrees(self.pair, mark.k, &degrees)
    }
}
