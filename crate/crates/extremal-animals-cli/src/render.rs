//! SVG rendering: Euclidean animals in the plane, hyperbolic animals in the
//! Poincaré disk. All combinatorics stay exact upstream; this module is the
//! only place coordinates exist.
//!
//! Tiles are placed by reflecting the host polygon across the shared edge,
//! in insertion order: a Euclidean mirror in the plane, a circle inversion
//! across the geodesic through the edge in the disk.

use extremal_animals::{AnimalMap, Geometry, SchlafliPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Projection {
    Plane,
    PoincareDisk,
}

impl Projection {
    pub fn for_pair(pair: SchlafliPair) -> Projection {
        match pair.geometry() {
            Geometry::Euclidean => Projection::Plane,
            Geometry::Hyperbolic => Projection::PoincareDisk,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Highlight {
    None,
    /// Grayscale ramp by insertion order.
    GrowthOrder,
    /// Dots on saturated (interior) vertices.
    SaturatedVertices,
}

#[derive(Debug, Clone, Copy)]
pub struct RenderConfig {
    pub projection: Projection,
    pub stroke_width: f64,
    pub scale: f64,
    pub highlight: Highlight,
}

impl RenderConfig {
    pub fn new(pair: SchlafliPair) -> Self {
        RenderConfig {
            projection: Projection::for_pair(pair),
            stroke_width: 1.0,
            scale: 400.0,
            highlight: Highlight::None,
        }
    }
}

type Pt = [f64; 2];

fn reflect_line(a: Pt, b: Pt, z: Pt) -> Pt {
    let dx = b[0] - a[0];
    let dy = b[1] - a[1];
    let len2 = dx * dx + dy * dy;
    let t = ((z[0] - a[0]) * dx + (z[1] - a[1]) * dy) / len2;
    let foot = [a[0] + t * dx, a[1] + t * dy];
    [2.0 * foot[0] - z[0], 2.0 * foot[1] - z[1]]
}

/// Circle through a and b orthogonal to the unit circle; None if the
/// geodesic is a diameter.
fn geodesic_circle(a: Pt, b: Pt) -> Option<(Pt, f64)> {
    // Solve 2·a·c = |a|²+1 and 2·b·c = |b|²+1.
    let (a1, a2) = (2.0 * a[0], 2.0 * a[1]);
    let (b1, b2) = (2.0 * b[0], 2.0 * b[1]);
    let ra = a[0] * a[0] + a[1] * a[1] + 1.0;
    let rb = b[0] * b[0] + b[1] * b[1] + 1.0;
    let det = a1 * b2 - a2 * b1;
    if det.abs() < 1e-9 {
        return None;
    }
    let cx = (ra * b2 - a2 * rb) / det;
    let cy = (a1 * rb - ra * b1) / det;
    let r2 = cx * cx + cy * cy - 1.0;
    Some(([cx, cy], r2.max(1e-12).sqrt()))
}

fn invert((c, r): (Pt, f64), z: Pt) -> Pt {
    let dx = z[0] - c[0];
    let dy = z[1] - c[1];
    let d2 = dx * dx + dy * dy;
    let s = r * r / d2;
    [c[0] + s * dx, c[1] + s * dy]
}

fn reflect(projection: Projection, a: Pt, b: Pt, z: Pt) -> Pt {
    match projection {
        Projection::Plane => reflect_line(a, b, z),
        Projection::PoincareDisk => match geodesic_circle(a, b) {
            Some(circle) => invert(circle, z),
            None => reflect_line([0.0, 0.0], if a == [0.0, 0.0] { b } else { a }, z),
        },
    }
}

/// Per-tile polygon coordinates, cycle-aligned with the map's tile cycles.
pub fn layout(map: &AnimalMap, projection: Projection) -> Vec<Vec<Pt>> {
    let pair = map.pair();
    let p = pair.p() as usize;
    let n = map.tile_count();
    let circumradius = match projection {
        Projection::Plane => 1.0,
        Projection::PoincareDisk => {
            let pa = std::f64::consts::PI / pair.p() as f64;
            let qa = std::f64::consts::PI / pair.q() as f64;
            let cosh_r = (pa.tan() * qa.tan()).recip();
            // tanh(R/2) from cosh R.
            ((cosh_r - 1.0) / (cosh_r + 1.0)).sqrt()
        }
    };
    let mut polys: Vec<Vec<Pt>> = Vec::with_capacity(n);
    let root: Vec<Pt> = (0..p)
        .map(|i| {
            let th = 2.0 * std::f64::consts::PI * (i as f64 + 0.5) / p as f64;
            [circumradius * th.cos(), circumradius * th.sin()]
        })
        .collect();
    polys.push(root);
    for (t, ins) in map.insertions().iter().enumerate().skip(1) {
        let host = &polys[ins.host as usize];
        let s = ins.slot as usize;
        let a = host[s];
        let b = host[(s + 1) % p];
        // New cycle: b, a, then reflections of the host cycle walked
        // backwards from a.
        let mut poly = Vec::with_capacity(p);
        poly.push(b);
        poly.push(a);
        for i in 1..p - 1 {
            let src = host[(s + p - i) % p];
            poly.push(reflect(projection, a, b, src));
        }
        polys.push(poly);
        debug_assert_eq!(t + 1, polys.len());
    }
    polys
}

fn fmt(x: f64) -> String {
    format!("{:.6}", x)
}

fn path_for(
    poly: &[Pt],
    projection: Projection,
) -> String {
    let mut d = format!("M {} {}", fmt(poly[0][0]), fmt(poly[0][1]));
    for i in 0..poly.len() {
        let z1 = poly[i];
        let z2 = poly[(i + 1) % poly.len()];
        match projection {
            Projection::Plane => {
                d.push_str(&format!(" L {} {}", fmt(z2[0]), fmt(z2[1])));
            }
            Projection::PoincareDisk => match geodesic_circle(z1, z2) {
                Some((c, r)) => {
                    let cross = (z1[0] - c[0]) * (z2[1] - c[1]) - (z1[1] - c[1]) * (z2[0] - c[0]);
                    let sweep = if cross > 0.0 { 1 } else { 0 };
                    d.push_str(&format!(
                        " A {} {} 0 0 {} {} {}",
                        fmt(r),
                        fmt(r),
                        sweep,
                        fmt(z2[0]),
                        fmt(z2[1])
                    ));
                }
                None => d.push_str(&format!(" L {} {}", fmt(z2[0]), fmt(z2[1]))),
            },
        }
    }
    d.push_str(" Z");
    d
}

/// Renders the animal as a self-contained SVG document. Deterministic:
/// identical inputs produce identical bytes.
pub fn render_svg(map: &AnimalMap, config: &RenderConfig) -> String {
    let polys = layout(map, config.projection);
    let n = polys.len();

    // Vertex coordinates: first writer wins (duplicates agree up to fp).
    let mut vert_coord: Vec<Option<Pt>> = Vec::new();
    for (t, poly) in polys.iter().enumerate() {
        let cycle = map.tile_vertices(t as u32);
        for (j, &v) in cycle.iter().enumerate() {
            let v = v as usize;
            if vert_coord.len() <= v {
                vert_coord.resize(v + 1, None);
            }
            if vert_coord[v].is_none() {
                vert_coord[v] = Some(poly[j]);
            }
        }
    }

    let (view, width) = match config.projection {
        Projection::PoincareDisk => ("-1.06 -1.06 2.12 2.12".to_string(), 2.12),
        Projection::Plane => {
            let xs = polys.iter().flatten().map(|z| z[0]);
            let ys = polys.iter().flatten().map(|z| z[1]);
            let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
            for x in xs {
                x0 = x0.min(x);
                x1 = x1.max(x);
            }
            for y in ys {
                y0 = y0.min(y);
                y1 = y1.max(y);
            }
            let m = 0.2;
            (
                format!(
                    "{} {} {} {}",
                    fmt(x0 - m),
                    fmt(y0 - m),
                    fmt(x1 - x0 + 2.0 * m),
                    fmt(y1 - y0 + 2.0 * m)
                ),
                x1 - x0 + 2.0 * m,
            )
        }
    };
    let px = (config.scale * width).ceil() as u64;
    let stroke = config.stroke_width * width / config.scale.max(1.0);

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{px}\" height=\"{px}\" viewBox=\"{view}\">\n"
    ));
    svg.push_str("<g transform=\"scale(1,-1)\">\n");
    if config.projection == Projection::PoincareDisk {
        svg.push_str(&format!(
            "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#888888\" stroke-width=\"{}\"/>\n",
            fmt(stroke)
        ));
    }
    for (t, poly) in polys.iter().enumerate() {
        let fill = match config.highlight {
            Highlight::GrowthOrder => {
                let shade = if n > 1 {
                    230 - (170 * t / (n - 1)) as i32
                } else {
                    230
                };
                format!("rgb({shade},{shade},{})", (shade + 20).min(255))
            }
            _ => "none".to_string(),
        };
        svg.push_str(&format!(
            "<path d=\"{}\" fill=\"{}\" stroke=\"#222222\" stroke-width=\"{}\"/>\n",
            path_for(poly, config.projection),
            fill,
            fmt(stroke)
        ));
    }
    if config.highlight == Highlight::SaturatedVertices {
        for v in map.vertex_ids() {
            if map.vertex_is_saturated(v) {
                if let Some(Some(z)) = vert_coord.get(v as usize) {
                    svg.push_str(&format!(
                        "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#cc3333\"/>\n",
                        fmt(z[0]),
                        fmt(z[1]),
                        fmt(stroke * 3.0)
                    ));
                }
            }
        }
    }
    svg.push_str("</g>\n</svg>\n");
    svg
}
