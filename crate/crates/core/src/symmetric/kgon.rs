//! Depth-0 spectrum of the subdivision map and symmetric data of `k`-gons.

use num_traits::Zero;

use crate::element::{Element, Word};
use crate::error::{config, domain, Result};
use crate::linalg::{
    characteristic_polynomial, conjugate_pair_modulus_squared, roots_in_unit_disc, Matrix, Polynomial, SpectrumDoc,
};
use crate::rational::{format_rational, frac, Rational};

use super::data::{Corruption, SymmetricData};
use super::polygon::Polygon;

/// The depth-0 part of the subdivision substitution of a `k`-gon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearPart {
    pub k: usize,
    /// Names of the free generators, indexing rows and columns.
    pub generators: Vec<String>,
    /// `matrix[i][j]` is the coefficient of generator `i` in the image of
    /// generator `j`.
    pub matrix: Matrix,
    pub characteristic: Polynomial,
}

impl LinearPart {
    pub fn zero_root_multiplicity(&self) -> usize {
        self.characteristic.zero_root_multiplicity()
    }

    /// Squared modulus of the nonzero roots when they form one conjugate pair.
    pub fn nonzero_modulus_squared(&self) -> Option<Rational> {
        conjugate_pair_modulus_squared(&self.characteristic.deflate_zero_roots())
    }

    pub fn is_contracting(&self) -> bool {
        roots_in_unit_disc(&self.characteristic)
    }

    pub fn to_doc(&self) -> SpectrumDoc {
        let mut notes = Vec::new();
        let p = &self.characteristic;
        let z = Rational::zero();
        let h = frac(1, 2);
        let is_root = |re: &Rational, im: &Rational| p.eval_complex(re, im) == (z.clone(), z.clone());
        if self.k == 4 {
            let plus = is_root(&h, &h) && is_root(&h, &-&h);
            let minus = is_root(&-&h, &h) || is_root(&-&h, &-&h);
            notes.push(format!(
                "nonzero roots are 1/2(1±i): {plus}; 1/2(-1±i) are roots: {minus}; \
                 only the modulus bound is asserted"
            ));
        }
        if let Some(m2) = self.nonzero_modulus_squared() {
            notes.push(format!("nonzero roots form a conjugate pair of squared modulus {}", format_rational(&m2)));
        }
        SpectrumDoc {
            matrix: self.matrix.iter().map(|r| r.iter().map(format_rational).collect()).collect(),
            characteristic_polynomial: p.coefficient_strings(),
            rendered: p.render(),
            zero_root_multiplicity: self.zero_root_multiplicity(),
            nonzero_root_modulus_squared: self.nonzero_modulus_squared().map(|r| format_rational(&r)),
            roots_in_unit_disc: self.is_contracting(),
            notes,
        }
    }
}

fn polygon_for(k: usize) -> Result<Polygon> {
    if k < 3 {
        return config(format!("k must be at least 3, got {k}"));
    }
    Ok(if k == 3 { Polygon::triangle() } else { Polygon::kgon(k)? })
}

/// Matrix and characteristic polynomial of the depth-0 subdivision map.
pub fn kgon_linear_part(k: usize) -> Result<LinearPart> {
    let polygon = polygon_for(k)?;
    let b = polygon.b_space(1)?;
    let lin = polygon.sigma(&b)?.linear_part();
    let n = k - 1;
    let mut matrix = vec![vec![Rational::zero(); n]; n];
    for j in 0..n {
        let img: &Element = lin.image(&polygon.flat[j + 1])?;
        for (i, row) in matrix.iter_mut().enumerate() {
            row[j] = img.coeff(&Word::letter(i as u8));
        }
    }
    let characteristic = characteristic_polynomial(&matrix);
    Ok(LinearPart { k, generators: polygon.flat[1..].to_vec(), matrix, characteristic })
}

/// Symmetric data of the `k`-gon through `depth`. Triangles use the
/// specialised construction.
pub fn kgon_symmetric_data(k: usize, depth: usize, corrupt: Option<Corruption>) -> Result<SymmetricData> {
    let lp = kgon_linear_part(k)?;
    if !lp.is_contracting() {
        return domain(format!("the depth-0 subdivision map of the {k}-gon is not contracting"));
    }
    if k == 3 {
        SymmetricData::triangle(depth, corrupt)
    } else {
        SymmetricData::generic(&Polygon::kgon(k)?, depth, corrupt)
    }
}
