//! Polygon JSON: `{"name": string, "n": integer, "vertices": [[x, y], ...]}`.
//! Numbers are written with 17 significant digits so reading them back
//! reproduces the exact binary64 values.

use serde_json::Value;
use smallgon::geometry::{Point, Polygon};

pub fn to_json(p: &Polygon) -> String {
    let mut s = String::new();
    s.push_str("{\n");
    s.push_str(&format!("  \"name\": {},\n", Value::String(p.name.clone())));
    s.push_str(&format!("  \"n\": {},\n", p.n()));
    s.push_str("  \"vertices\": [\n");
    for (i, v) in p.vertices.iter().enumerate() {
        let sep = if i + 1 < p.n() { "," } else { "" };
        s.push_str(&format!("    [{:.16e}, {:.16e}]{}\n", v.x, v.y, sep));
    }
    s.push_str("  ]\n}\n");
    s
}

pub fn from_json(text: &str) -> Result<Polygon, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| format!("json parse error: {e}"))?;
    let obj = v.as_object().ok_or("top level must be an object")?;
    let name = obj
        .get("name")
        .and_then(Value::as_str)
        .ok_or("missing string field \"name\"")?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or("missing integer field \"n\"")? as usize;
    let raw = obj
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or("missing array field \"vertices\"")?;
    if raw.len() != n {
        return Err(format!("\"n\" is {n} but \"vertices\" has {} entries", raw.len()));
    }
    let mut pts = Vec::with_capacity(n);
    for (i, entry) in raw.iter().enumerate() {
        let pair = entry.as_array().filter(|a| a.len() == 2).ok_or_else(|| {
            format!("vertex {i} must be a two-element array")
        })?;
        let x = pair[0].as_f64().ok_or_else(|| format!("vertex {i}: x is not a number"))?;
        let y = pair[1].as_f64().ok_or_else(|| format!("vertex {i}: y is not a number"))?;
        if !x.is_finite() || !y.is_finite() {
            return Err(format!("vertex {i} is not finite"));
        }
        pts.push(Point::new(x, y));
    }
    Polygon::new(name, pts).map_err(|e| e.to_string())
}
