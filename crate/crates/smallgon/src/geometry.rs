//! Measurement engine: per-side heights, height graph, width, diameter.
//!
//! Conventions. Vertices are indexed `0..n` counterclockwise with `v0` at the
//! origin and the polygon in the upper half-plane; sides are indexed `1..=n`,
//! side `i` joining `v_{i-1}` to `v_{i mod n}`. Index arithmetic on vertices
//! is modulo `n`. All lengths are dimensionless, with small polygons scaled
//! to unit diameter.

use thiserror::Error;

/// Tolerance for metric comparisons (widths, distances).
pub const METRIC_TOL: f64 = 1e-12;
/// Tolerance for boolean flags (smallness, equilaterality).
pub const FLAG_TOL: f64 = 1e-9;
/// Band within which two height maximizers count as tied.
pub const TIE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dist(self, other: Point) -> f64 {
        ((self.x - other.x).powi(2) + (self.y - other.y).powi(2)).sqrt()
    }
}

#[derive(Clone, Debug)]
pub struct Polygon {
    pub name: String,
    pub vertices: Vec<Point>,
}

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("side {side} has length {length:.3e}, degenerate")]
    DegenerateSide { side: usize, length: f64 },
    #[error("vertex order is not counterclockwise convex at vertex {0}")]
    NotConvex(usize),
    #[error("side index {side} out of range 1..={n}")]
    SideOutOfRange { side: usize, n: usize },
    #[error("vertex index {vertex} out of range 0..{n}")]
    VertexOutOfRange { vertex: usize, n: usize },
}

impl Polygon {
    pub fn new(name: impl Into<String>, vertices: Vec<Point>) -> Result<Self, GeometryError> {
        if vertices.len() < 3 {
            return Err(GeometryError::TooFewVertices(vertices.len()));
        }
        Ok(Polygon { name: name.into(), vertices })
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    /// Length of side `i` (`1..=n`).
    pub fn side_length(&self, i: usize) -> f64 {
        let n = self.n();
        self.vertices[i - 1].dist(self.vertices[i % n])
    }
}

/// Signed height of vertex `k` above the line through side `i`.
///
/// Evaluates `[(x_{i-1}-x_k)(y_i-y_k) - (y_{i-1}-y_k)(x_i-x_k)] / |side i|`,
/// positive when `v_k` lies on the interior side of a counterclockwise
/// polygon and zero when `k` is one of the side's endpoints.
pub fn point_side_height(p: &Polygon, side: usize, vertex: usize) -> Result<f64, GeometryError> {
    let n = p.n();
    if side < 1 || side > n {
        return Err(GeometryError::SideOutOfRange { side, n });
    }
    if vertex >= n {
        return Err(GeometryError::VertexOutOfRange { vertex, n });
    }
    let a = p.vertices[side - 1];
    let b = p.vertices[side % n];
    let length = a.dist(b);
    if length <= METRIC_TOL {
        return Err(GeometryError::DegenerateSide { side, length });
    }
    let v = p.vertices[vertex];
    Ok(((a.x - v.x) * (b.y - v.y) - (a.y - v.y) * (b.x - v.x)) / length)
}

/// One side's height data: `h = max_k h_{ik}` and the set of maximizers
/// within [`TIE_TOL`].
#[derive(Clone, Debug)]
pub struct SideHeight {
    pub h: f64,
    pub maximizers: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct HeightGraph {
    /// Entry `i` describes side `i+1`.
    pub sides: Vec<SideHeight>,
    pub width: f64,
    /// Side (`1..=n`) attaining the width.
    pub argmin_side: usize,
}

fn convexity_violation(p: &Polygon) -> Option<usize> {
    let n = p.n();
    for i in 0..n {
        let a = p.vertices[(i + n - 1) % n];
        let b = p.vertices[i];
        let c = p.vertices[(i + 1) % n];
        let cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
        if cross < -METRIC_TOL {
            return Some(i);
        }
    }
    None
}

pub fn is_convex_ccw(p: &Polygon) -> bool {
    convexity_violation(p).is_none()
}

/// Heights of all sides with their maximizer sets. Requires a convex
/// counterclockwise vertex order.
pub fn height_graph(p: &Polygon) -> Result<HeightGraph, GeometryError> {
    let n = p.n();
    for side in 1..=n {
        let len = p.side_length(side);
        if len <= METRIC_TOL {
            return Err(GeometryError::DegenerateSide { side, length: len });
        }
    }
    if let Some(i) = convexity_violation(p) {
        return Err(GeometryError::NotConvex(i));
    }
    let mut sides = Vec::with_capacity(n);
    let mut width = f64::INFINITY;
    let mut argmin_side = 1;
    for side in 1..=n {
        let mut h = f64::NEG_INFINITY;
        let mut all = Vec::with_capacity(n);
        for vertex in 0..n {
            let hv = point_side_height(p, side, vertex)?;
            all.push(hv);
            if hv > h {
                h = hv;
            }
        }
        let maximizers: Vec<usize> = (0..n).filter(|&k| all[k] >= h - TIE_TOL).collect();
        if h < width {
            width = h;
            argmin_side = side;
        }
        sides.push(SideHeight { h, maximizers });
    }
    Ok(HeightGraph { sides, width, argmin_side })
}

/// Polygon width as the minimum side height.
pub fn width(p: &Polygon) -> Result<f64, GeometryError> {
    Ok(height_graph(p)?.width)
}

/// Polygon width by the supporting-lines route: for each side direction,
/// the spread of vertex projections onto the side normal; the width is the
/// minimum spread. Agrees with [`width`] within [`METRIC_TOL`] on convex
/// input and shares no arithmetic with the height formula.
pub fn width_by_supports(p: &Polygon) -> Result<f64, GeometryError> {
    let n = p.n();
    if let Some(i) = convexity_violation(p) {
        return Err(GeometryError::NotConvex(i));
    }
    let mut best = f64::INFINITY;
    for side in 1..=n {
        let a = p.vertices[side - 1];
        let b = p.vertices[side % n];
        let len = a.dist(b);
        if len <= METRIC_TOL {
            return Err(GeometryError::DegenerateSide { side, length: len });
        }
        let (nx, ny) = (-(b.y - a.y) / len, (b.x - a.x) / len);
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for v in &p.vertices {
            let t = nx * v.x + ny * v.y;
            lo = lo.min(t);
            hi = hi.max(t);
        }
        best = best.min(hi - lo);
    }
    Ok(best)
}

/// Largest pairwise vertex distance, plus every vertex pair at distance
/// `>= 1 - FLAG_TOL`. For a small polygon the pair list is the edge set of
/// its diameter graph.
pub fn diameter(p: &Polygon) -> (f64, Vec<(usize, usize)>) {
    let n = p.n();
    let mut max = 0.0f64;
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let d = p.vertices[i].dist(p.vertices[j]);
            max = max.max(d);
            if d >= 1.0 - FLAG_TOL {
                pairs.push((i, j));
            }
        }
    }
    (max, pairs)
}

pub fn perimeter(p: &Polygon) -> f64 {
    (1..=p.n()).map(|i| p.side_length(i)).sum()
}

#[derive(Clone, Copy, Debug)]
pub struct WidthReport {
    pub width: f64,
    pub diameter: f64,
    pub perimeter: f64,
    pub side_min: f64,
    pub side_max: f64,
    pub is_small: bool,
    pub is_equilateral: bool,
    pub is_convex: bool,
    pub tol: f64,
}

/// Aggregate metrics and flags at tolerance `tol`.
pub fn classify(p: &Polygon, tol: f64) -> Result<WidthReport, GeometryError> {
    let hg = height_graph(p)?;
    let (diam, _) = diameter(p);
    let mut side_min = f64::INFINITY;
    let mut side_max = f64::NEG_INFINITY;
    for i in 1..=p.n() {
        let s = p.side_length(i);
        side_min = side_min.min(s);
        side_max = side_max.max(s);
    }
    Ok(WidthReport {
        width: hg.width,
        diameter: diam,
        perimeter: perimeter(p),
        side_min,
        side_max,
        is_small: (diam - 1.0).abs() <= tol,
        is_equilateral: side_max - side_min <= tol,
        is_convex: true,
        tol,
    })
}

/// Translate `v0` to the origin, make the order counterclockwise (reversing
/// if needed, keeping `v0` first), and rotate so the interior bisector at
/// `v0` points along `+y`. Convex input in any pose ends up in the canonical
/// frame: `v0 = (0,0)`, all `y >= 0`, counterclockwise.
pub fn canonicalize(p: &Polygon) -> Result<Polygon, GeometryError> {
    let n = p.n();
    let v0 = p.vertices[0];
    let mut vs: Vec<Point> = p
        .vertices
        .iter()
        .map(|v| Point::new(v.x - v0.x, v.y - v0.y))
        .collect();
    let signed_area: f64 = (0..n)
        .map(|i| {
            let a = vs[i];
            let b = vs[(i + 1) % n];
            a.x * b.y - a.y * b.x
        })
        .sum();
    if signed_area < 0.0 {
        vs[1..].reverse();
    }
    let unit_to = |k: usize| -> Result<(f64, f64), GeometryError> {
        let d = vs[0].dist(vs[k]);
        if d <= METRIC_TOL {
            return Err(GeometryError::DegenerateSide { side: k, length: d });
        }
        Ok((vs[k].x / d, vs[k].y / d))
    };
    let (u1x, u1y) = unit_to(1)?;
    let (u2x, u2y) = unit_to(n - 1)?;
    let (mut bx, mut by) = (u1x + u2x, u1y + u2y);
    let norm = (bx * bx + by * by).sqrt();
    if norm <= METRIC_TOL {
        // Straight angle at v0: take the interior normal of the first edge.
        bx = -u1y;
        by = u1x;
    } else {
        bx /= norm;
        by /= norm;
    }
    let (cos_r, sin_r) = {
        // Rotation taking (bx, by) to (0, 1).
        let theta = by.atan2(bx);
        let r = std::f64::consts::FRAC_PI_2 - theta;
        (r.cos(), r.sin())
    };
    let rotated: Vec<Point> = vs
        .iter()
        .map(|v| Point::new(cos_r * v.x - sin_r * v.y, sin_r * v.x + cos_r * v.y))
        .collect();
    Polygon::new(p.name.clone(), rotated)
}
