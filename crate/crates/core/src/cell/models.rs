//! Standard models: the interval, the one-vertex disc, the triangle boundary
//! and the three based triangle models.

use crate::bch::bch_list;
use crate::element::Element;
use crate::error::{config, Result};
use crate::generators::{GeneratorTable, Space};

use super::CellModel;

/// Triangle edges as `(edge, source, target)`: `e: b→c`, `f: c→a`, `g: a→b`.
pub const TRIANGLE_EDGES: [(&str, &str, &str); 3] = [("e", "b", "c"), ("f", "c", "a"), ("g", "a", "b")];

/// Generators `a, b, c` (grading -1), `e, f, g` (0) and `h` (1).
pub fn triangle_space(max_len: usize) -> Result<Space> {
    let t = GeneratorTable::new([("a", -1), ("b", -1), ("c", -1), ("e", 0), ("f", 0), ("g", 0), ("h", 1)])?;
    Space::new(t, max_len)
}

/// Interval on `a, b, e` with `e: a→b`.
pub fn interval_model(max_len: usize) -> Result<CellModel> {
    let t = GeneratorTable::new([("a", -1), ("b", -1), ("e", 0)])?;
    let s = Space::new(t, max_len)?;
    CellModel::new(&s).vertex("a")?.vertex("b")?.edge("e", "a", "b")
}

/// Disc with one vertex: `∂e = [e,a]`, `∂h = e - [a,h]`.
pub fn one_vertex_disc_model(max_len: usize) -> Result<CellModel> {
    let t = GeneratorTable::new([("a", -1), ("e", 0), ("h", 1)])?;
    let s = Space::new(t, max_len)?;
    let a = Element::generator(&s, "a")?;
    let e = Element::generator(&s, "e")?;
    let h = Element::generator(&s, "h")?;
    let de = e.bracket(&a)?;
    let dh = &e - &a.bracket(&h)?;
    CellModel::new(&s).vertex("a")?.explicit("e", de)?.explicit("h", dh)
}

/// Vertices and edges of the triangle; `h` has no rule yet.
pub fn triangle_boundary_model(max_len: usize) -> Result<CellModel> {
    let s = triangle_space(max_len)?;
    let mut m = CellModel::new(&s).vertex("a")?.vertex("b")?.vertex("c")?;
    for (e, src, tgt) in TRIANGLE_EDGES {
        m = m.edge(e, src, tgt)?;
    }
    Ok(m)
}

/// Model based at a vertex: `∂h = BCH(loop at base) - [base, h]`, the loop
/// being `g,e,f` at `a`, `e,f,g` at `b`, and `f,g,e` at `c`.
pub fn based_triangle_model(base: &str, max_len: usize) -> Result<CellModel> {
    let loop_names = match base {
        "a" => ["g", "e", "f"],
        "b" => ["e", "f", "g"],
        "c" => ["f", "g", "e"],
        other => return config(format!("triangle base must be a, b or c, not {other:?}")),
    };
    let m = triangle_boundary_model(max_len)?;
    let s = m.space().clone();
    let edges = loop_names
        .iter()
        .map(|n| Element::generator(&s, n))
        .collect::<Result<Vec<_>>>()?;
    let q = bch_list(&s, &edges)?;
    let base_el = Element::generator(&s, base)?;
    let h = Element::generator(&s, "h")?;
    m.explicit("h", &q - &base_el.bracket(&h)?)
}
