//! The symmetric model of the triangle and of `k`-gons.
//!
//! The boundary of the polygon is flattened, the inscribed-midpoint
//! subdivision is encoded as a substitution `σ` of the free Lie algebra `B`
//! on the flattened edges, and the connector from the base vertex to the
//! symmetric point is the fixed point of `σ(α) = BCH(−s_0/2, α)`.

mod cycle;
mod data;
mod fixed_point;
mod kgon;
mod polygon;
mod universal;

#[cfg(test)]
mod tests;

pub use cycle::EdgeCycle;
pub use data::{connector_names, Corruption, NamedElement, SymmetricData, SymmetricDataDoc, SymmetricTriangleData};
pub use fixed_point::{iterates, slice_basis, slice_operator, slice_vector, solve_fixed_point};
pub use kgon::{kgon_linear_part, kgon_symmetric_data, LinearPart};
pub use polygon::Polygon;
pub use universal::{universal_word, UniversalWord};

use crate::bch::bch;
use crate::cell::CellModel;
use crate::element::Element;
use crate::error::Result;
use crate::generators::Space;
use crate::rational::frac;
use crate::substitution::Substitution;

/// The free algebra `B = ⟨e0, f0⟩` truncated at word length `max_len`.
pub fn triangle_b_space(max_len: usize) -> Result<Space> {
    Polygon::triangle().b_space(max_len)
}

fn e0_f0_g0(b: &Space) -> Result<(Element, Element, Element)> {
    let e0 = Element::generator(b, "e0")?;
    let f0 = Element::generator(b, "f0")?;
    let g0 = -&bch(&e0, &f0)?;
    Ok((e0, f0, g0))
}

/// `τ: e0 ↦ BCH(f0/2, −BCH(e0,f0)/2)`, `f0 ↦ BCH(−BCH(e0,f0)/2, e0/2)`.
pub fn make_tau(b: &Space) -> Result<Substitution> {
    let (e0, f0, g0) = e0_f0_g0(b)?;
    let h = frac(1, 2);
    Substitution::new(b, b)
        .with("e0", bch(&f0.scale(&h), &g0.scale(&h))?)?
        .with("f0", bch(&g0.scale(&h), &e0.scale(&h))?)
}

/// `σ: e0 ↦ BCH(e0/2, f0/2)`, `f0 ↦ BCH(f0/2, −BCH(e0,f0)/2)`.
pub fn make_sigma(b: &Space) -> Result<Substitution> {
    let (e0, f0, g0) = e0_f0_g0(b)?;
    let h = frac(1, 2);
    Substitution::new(b, b)
        .with("e0", bch(&e0.scale(&h), &f0.scale(&h))?)?
        .with("f0", bch(&f0.scale(&h), &g0.scale(&h))?)
}

/// The flattened triangle `(e0, f0, g0)` in `B`, as an edge cycle in the
/// triangle order.
pub fn triangle_cycle(b: &Space) -> Result<EdgeCycle> {
    let (e0, f0, g0) = e0_f0_g0(b)?;
    EdgeCycle::new(vec![e0, f0, g0])
}

/// `α` through `depth`, from the exact slice-by-slice solve.
pub fn alpha_exact(depth: usize) -> Result<Element> {
    let b = triangle_b_space(depth + 1)?;
    let (_, _, g0) = e0_f0_g0(&b)?;
    solve_fixed_point(&make_sigma(&b)?, &g0.scale(&frac(-1, 2)))
}

/// `BCH(g0/2, σ(g0/2), …, σ^{n-1}(g0/2))` through `depth`.
pub fn alpha_iterative(n_steps: usize, depth: usize) -> Result<Element> {
    Ok(alpha_iterates(n_steps, depth)?.pop().expect("n_steps >= 1"))
}

/// All partial products of [`alpha_iterative`] for `1..=n_steps`.
pub fn alpha_iterates(n_steps: usize, depth: usize) -> Result<Vec<Element>> {
    if n_steps == 0 {
        return crate::error::config("n_steps must be at least 1");
    }
    let b = triangle_b_space(depth + 1)?;
    let (_, _, g0) = e0_f0_g0(&b)?;
    iterates(&make_sigma(&b)?, &g0.scale(&frac(1, 2)), n_steps)
}

/// `(α, β, γ)` in `B` through `depth`: `β = BCH(−g0, α)` and `γ` is the
/// rotation image of `β`. Fails if the rotation of `γ` is not `α`.
pub fn connectors(depth: usize) -> Result<(Element, Element, Element)> {
    let b = triangle_b_space(depth + 1)?;
    let (_, f0, g0) = e0_f0_g0(&b)?;
    let alpha = solve_fixed_point(&make_sigma(&b)?, &g0.scale(&frac(-1, 2)))?;
    let beta = bch(&-&g0, &alpha)?;
    let rotation = Substitution::new(&b, &b).with("e0", f0)?.with("f0", g0)?;
    let gamma = rotation.apply(&beta)?;
    if rotation.apply(&gamma)? != alpha {
        return crate::error::internal("rotation of gamma is not alpha");
    }
    Ok((alpha, beta, gamma))
}

/// The symmetric point `x = u_α(a)` of the triangle.
pub fn symmetric_point(depth: usize) -> Result<Element> {
    Ok(SymmetricData::triangle(depth, None)?.point)
}

/// `q = BCH(−α, g, e, f, α)` with `α` in ambient generators.
pub fn q_element(depth: usize) -> Result<Element> {
    Ok(SymmetricData::triangle(depth, None)?.q)
}

/// The symmetric model `∂h = q − [x, h]` of the triangle.
pub fn symmetric_triangle_model(depth: usize) -> Result<CellModel> {
    Ok(SymmetricData::triangle(depth, None)?.model)
}

/// Applies a named triangle symmetry (`identity`, `rotation`, `rotation^2`,
/// `reflection_a`, `reflection_b`, `reflection_c`) to an element of the
/// triangle algebra.
pub fn s3_apply(name: &str, x: &Element) -> Result<Element> {
    Polygon::triangle().group_element(x.space(), name)?.apply(x)
}
