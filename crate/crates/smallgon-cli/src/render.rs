//! SVG and TikZ output. Stroke classes follow the figure conventions:
//! polygon sides dashed, unit-distance segments solid, sub-unit
//! height-graph edges dotted.

use smallgon::geometry::{self, Polygon, FLAG_TOL};

struct EdgeClasses {
    dashed: Vec<(usize, usize)>,
    solid: Vec<(usize, usize)>,
    dotted: Vec<(usize, usize)>,
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn classify_edges(p: &Polygon) -> EdgeClasses {
    let n = p.n();
    let mut solid = Vec::new();
    for (i, j) in geometry::diameter(p).1 {
        solid.push(key(i, j));
    }
    let mut dashed = Vec::new();
    for i in 0..n {
        let e = key(i, (i + 1) % n);
        if !solid.contains(&e) {
            dashed.push(e);
        }
    }
    let mut dotted = Vec::new();
    if let Ok(hg) = geometry::height_graph(p) {
        for (idx, side) in hg.sides.iter().enumerate() {
            for &k in &side.maximizers {
                for end in [idx, (idx + 1) % n] {
                    if end == k {
                        continue;
                    }
                    let e = key(end, k);
                    let adjacent = e.1 == e.0 + 1 || (e.0 == 0 && e.1 == n - 1);
                    if adjacent || solid.contains(&e) || dotted.contains(&e) {
                        continue;
                    }
                    if p.vertices[e.0].dist(p.vertices[e.1]) < 1.0 - FLAG_TOL {
                        dotted.push(e);
                    }
                }
            }
        }
    }
    EdgeClasses { dashed, solid, dotted }
}

pub fn svg(p: &Polygon) -> String {
    let scale = 400.0;
    let pad = 20.0;
    let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for v in &p.vertices {
        x0 = x0.min(v.x);
        y0 = y0.min(v.y);
        x1 = x1.max(v.x);
        y1 = y1.max(v.y);
    }
    let w = (x1 - x0) * scale + 2.0 * pad;
    let h = (y1 - y0) * scale + 2.0 * pad;
    let map = |i: usize| {
        let v = p.vertices[i];
        ((v.x - x0) * scale + pad, (y1 - v.y) * scale + pad)
    };
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.1}\" height=\"{h:.1}\" viewBox=\"0 0 {w:.1} {h:.1}\">\n"
    ));
    out.push_str(&format!("  <title>{}</title>\n", p.name));
    let classes = classify_edges(p);
    let mut line = |edges: &[(usize, usize)], dash: &str| {
        for &(a, b) in edges {
            let (ax, ay) = map(a);
            let (bx, by) = map(b);
            out.push_str(&format!(
                "  <line x1=\"{ax:.2}\" y1=\"{ay:.2}\" x2=\"{bx:.2}\" y2=\"{by:.2}\" stroke=\"black\" stroke-width=\"1.5\"{dash}/>\n"
            ));
        }
    };
    line(&classes.dashed, " stroke-dasharray=\"7 4\"");
    line(&classes.solid, "");
    line(&classes.dotted, " stroke-dasharray=\"1.5 3.5\"");
    for i in 0..p.n() {
        let (cx, cy) = map(i);
        out.push_str(&format!("  <circle cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"2.5\" fill=\"black\"/>\n"));
    }
    out.push_str("</svg>\n");
    out
}

pub fn tikz(p: &Polygon) -> String {
    let mut out = String::new();
    out.push_str("\\begin{tikzpicture}[scale=4]\n");
    let classes = classify_edges(p);
    let mut draw = |edges: &[(usize, usize)], style: &str| {
        for &(a, b) in edges {
            let va = p.vertices[a];
            let vb = p.vertices[b];
            out.push_str(&format!(
                "  \\draw{style} ({:.6},{:.6}) -- ({:.6},{:.6});\n",
                va.x, va.y, vb.x, vb.y
            ));
        }
    };
    draw(&classes.dashed, "[dashed]");
    draw(&classes.solid, "");
    draw(&classes.dotted, "[dotted]");
    for v in &p.vertices {
        out.push_str(&format!("  \\fill ({:.6},{:.6}) circle (0.4pt);\n", v.x, v.y));
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}
