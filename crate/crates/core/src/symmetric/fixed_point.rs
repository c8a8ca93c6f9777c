//! Degree-by-degree solution of `σ(α) = BCH(shift, α)` in a free Lie algebra.

use std::collections::HashMap;

use num_traits::Zero;

use crate::bch::bch;
use crate::element::Element;
use crate::error::{internal, Result};
use crate::generators::Space;
use crate::linalg::{solve, Matrix};
use crate::lyndon::{lyndon_coordinates, lyndon_words, LyndonMonomial};
use crate::rational::Rational;
use crate::substitution::Substitution;

/// Lyndon basis of the word-length-`n` slice of the free Lie algebra on the
/// (grading-0) generators of `space`.
pub fn slice_basis(space: &Space, n: usize) -> Vec<LyndonMonomial> {
    let letters: Vec<u8> = (0..space.table().len() as u8).collect();
    let mut words = lyndon_words(&letters, n);
    words.sort();
    words.into_iter().map(LyndonMonomial).collect()
}

/// Coordinates of a homogeneous Lie element against a fixed slice basis.
pub fn slice_vector(x: &Element, basis: &[LyndonMonomial]) -> Result<Vec<Rational>> {
    let index: HashMap<&[u8], usize> = basis.iter().enumerate().map(|(i, m)| (m.0.as_slice(), i)).collect();
    let mut v = vec![Rational::zero(); basis.len()];
    for (m, c) in lyndon_coordinates(x)? {
        match index.get(m.0.as_slice()) {
            Some(&i) => v[i] = c,
            None => return internal(format!("coordinate {m:?} outside the slice")),
        }
    }
    Ok(v)
}

/// Matrix of the linear map `x ↦ lin(x) − x` on the length-`n` slice, where
/// `lin` is a linear substitution.
pub fn slice_operator(lin: &Substitution, basis: &[LyndonMonomial]) -> Result<Matrix> {
    let space = lin.source();
    let n = basis.len();
    let mut m = vec![vec![Rational::zero(); n]; n];
    for (j, b) in basis.iter().enumerate() {
        let x = b.expand(space);
        let col = slice_vector(&(&lin.apply(&x)? - &x), basis)?;
        for (i, c) in col.into_iter().enumerate() {
            m[i][j] = c;
        }
    }
    Ok(m)
}

/// The unique Lie element `α` with `σ(α) = BCH(shift, α)` through the
/// truncation of `σ`'s space.
///
/// At word length `n` the unknown slice `α_n` satisfies
/// `(σ' − 1)·α_n = [BCH(shift, α_{<n}) − σ(α_{<n})]_n`, where `σ'` is the
/// linear part of `σ`. A singular slice system is an internal error.
pub fn solve_fixed_point(sigma: &Substitution, shift: &Element) -> Result<Element> {
    let space = sigma.source().clone();
    sigma.target().check_same(&space)?;
    let lin = sigma.linear_part();
    let mut alpha = Element::zero(&space);
    for n in 1..=space.max_len() {
        let rhs_full = &bch(shift, &alpha)? - &sigma.apply(&alpha)?;
        let rhs = rhs_full.length_component(n);
        if rhs.is_zero() {
            continue;
        }
        let basis = slice_basis(&space, n);
        let op = slice_operator(&lin, &basis)?;
        let b = slice_vector(&rhs, &basis)?;
        let Some(sol) = solve(&op, &b) else {
            return internal(format!("fixed-point slice system at word length {n} is singular"));
        };
        for (m, c) in basis.iter().zip(sol) {
            if !c.is_zero() {
                alpha.add_scaled(&m.expand(&space), &c)?;
            }
        }
    }
    Ok(alpha)
}

/// Partial products `BCH(t, σ(t), …, σ^{n-1}(t))` for `n = 1..=steps`.
pub fn iterates(sigma: &Substitution, t: &Element, steps: usize) -> Result<Vec<Element>> {
    let mut out = Vec::with_capacity(steps);
    let mut term = t.clone();
    let mut acc = t.clone();
    for n in 0..steps {
        if n > 0 {
            term = sigma.apply(&term)?;
            acc = bch(&acc, &term)?;
        }
        out.push(acc.clone());
    }
    Ok(out)
}
