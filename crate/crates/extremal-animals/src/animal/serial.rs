//! Deterministic text serialization: tiles in insertion order with
//! attachment descriptors, replayable into an identical map.

use super::{AnimalMap, AttachSite, NONE};
use crate::error::{Error, Result};
use crate::tessellation::validate_pair;

impl AnimalMap {
    /// One line per tile: `<index> host=<tile> slot=<edge-slot> glue=<eps>`,
    /// with a header naming the pair and the tile count.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "animal p={} q={} tiles={}\n",
            self.pair.p(),
            self.pair.q(),
            self.tile_count()
        ));
        for (i, ins) in self.insertions.iter().enumerate() {
            if ins.host == NONE {
                out.push_str(&format!("{i} seed\n"));
            } else {
                out.push_str(&format!(
                    "{i} host={} slot={} glue={}\n",
                    ins.host, ins.slot, ins.glue
                ));
            }
        }
        out
    }
}

/// Rebuilds an animal by replaying a serialized attachment transcript.
pub fn parse_animal(text: &str) -> Result<AnimalMap> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::OutOfValidRange("empty animal text".into()))?;
    let mut p = None;
    let mut q = None;
    for field in header.split_whitespace().skip(1) {
        match field.split_once('=') {
            Some(("p", v)) => p = v.parse().ok(),
            Some(("q", v)) => q = v.parse().ok(),
            _ => {}
        }
    }
    let (p, q) = match (p, q) {
        (Some(p), Some(q)) => (p, q),
        _ => return Err(Error::OutOfValidRange(format!("bad header: {header}"))),
    };
    let pair = validate_pair(p, q)?;
    let mut map: Option<AnimalMap> = None;
    for line in lines {
        let mut fields = line.split_whitespace();
        fields.next(); // index, informational
        let rest: Vec<&str> = fields.collect();
        if rest == ["seed"] {
            if map.is_some() {
                return Err(Error::OutOfValidRange("duplicate seed line".into()));
            }
            map = Some(AnimalMap::seed(pair));
            continue;
        }
        let m = map
            .as_mut()
            .ok_or_else(|| Error::OutOfValidRange("tile before seed".into()))?;
        let mut host = None;
        let mut slot = None;
        for f in rest {
            match f.split_once('=') {
                Some(("host", v)) => host = v.parse::<u32>().ok(),
                Some(("slot", v)) => slot = v.parse::<usize>().ok(),
                Some(("glue", _)) => {}
                _ => return Err(Error::OutOfValidRange(format!("bad field: {f}"))),
            }
        }
        let (host, slot) = match (host, slot) {
            (Some(h), Some(s)) if (h as usize) < m.tile_count() && s < p as usize => (h, s),
            _ => return Err(Error::OutOfValidRange(format!("bad tile line: {line}"))),
        };
        let e = m.tile_edge_ids(host)[slot];
        m.add_tile(AttachSite::Edge(e))?;
    }
    let mut map = map.ok_or_else(|| Error::OutOfValidRange("no tiles".into()))?;
    map.freeze();
    Ok(map)
}
