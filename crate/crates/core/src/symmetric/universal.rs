//! `γ` as a universal Lie word in `α` and `β`.

use num_traits::Zero;

use crate::element::Element;
use crate::error::{internal, Result};
use crate::generators::{GeneratorTable, Space};
use crate::linalg::solve;
use crate::lyndon::{lyndon_coordinates, LyndonMonomial};
use crate::rational::Rational;
use crate::substitution::Substitution;

/// `F ∈ C = ⟨alpha, beta⟩` with `F(α, β) = γ`.
#[derive(Clone, Debug)]
pub struct UniversalWord {
    pub space: Space,
    pub word: Element,
}

impl UniversalWord {
    pub fn coordinates(&self) -> Result<Vec<(LyndonMonomial, Rational)>> {
        lyndon_coordinates(&self.word)
    }

    fn generators(&self) -> Result<(Element, Element)> {
        Ok((Element::generator(&self.space, "alpha")?, Element::generator(&self.space, "beta")?))
    }

    /// `F(β, α) − F(α, β)`.
    pub fn swap_residual(&self) -> Result<Element> {
        let (a, b) = self.generators()?;
        let swap = Substitution::new(&self.space, &self.space).with("alpha", b)?.with("beta", a)?;
        Ok(&swap.apply(&self.word)? - &self.word)
    }

    /// `F(α, F(α, β)) − β`.
    pub fn involution_residual(&self) -> Result<Element> {
        let (a, b) = self.generators()?;
        let sub = Substitution::new(&self.space, &self.space).with("alpha", a)?.with("beta", self.word.clone())?;
        Ok(&sub.apply(&self.word)? - &b)
    }
}

/// Solves `Ψ(F) = γ` degree by degree, where `Ψ: alpha ↦ α, beta ↦ β`.
///
/// The depth-0 parts of `α` and `β` must be independent; then `Ψ` is
/// invertible and each slice of `F` is the inverse linear substitution applied
/// to the current defect.
pub fn universal_word(alpha: &Element, beta: &Element, gamma: &Element) -> Result<UniversalWord> {
    let b = alpha.space();
    b.check_same(beta.space())?;
    b.check_same(gamma.space())?;
    if b.table().len() != 2 {
        return internal("the universal word needs a two-generator algebra");
    }
    let c = Space::new(GeneratorTable::new([("alpha", 0), ("beta", 0)])?, b.max_len())?;
    let psi = Substitution::new(&c, b).with("alpha", alpha.clone())?.with("beta", beta.clone())?;

    // Columns: depth-0 coordinates of α and β.
    let lin_a = alpha.length_component(1);
    let lin_b = beta.length_component(1);
    let coord = |x: &Element, l: u8| x.coeff(&crate::element::Word::letter(l));
    let m = vec![vec![coord(&lin_a, 0), coord(&lin_b, 0)], vec![coord(&lin_a, 1), coord(&lin_b, 1)]];
    let (ca, cb) = (Element::generator(&c, "alpha")?, Element::generator(&c, "beta")?);
    let mut inverse = Substitution::new(b, &c);
    for row in 0..2 {
        let name = b.table().name(row as u8).to_string();
        let mut rhs = vec![Rational::zero(); 2];
        rhs[row] = Rational::from_integer(1.into());
        let Some(sol) = solve(&m, &rhs) else {
            return internal("depth-0 parts of alpha and beta are dependent");
        };
        inverse.set(&name, &ca.scale(&sol[0]) + &cb.scale(&sol[1]))?;
    }

    let mut word = Element::zero(&c);
    for n in 1..=c.max_len() {
        let defect = (gamma - &psi.apply(&word)?).length_component(n);
        if !defect.is_zero() {
            word += &inverse.apply(&defect)?;
        }
    }
    let check = gamma - &psi.apply(&word)?;
    if !check.is_zero() {
        return internal("universal word does not reproduce gamma");
    }
    Ok(UniversalWord { space: c, word })
}
