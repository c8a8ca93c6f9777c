//! Lie-algebra homomorphisms given by images of generators.

use std::collections::HashMap;

use num_traits::One;

use crate::element::{Element, Word};
use crate::error::{config, Result};
use crate::generators::Space;
use crate::rational::Rational;

/// Map determined by generator images, extended multiplicatively to words and
/// linearly to elements. Images must be constant-free and carry the grading
/// of their generator, so the map is a graded homomorphism that never
/// shortens words (truncation commutes with it).
#[derive(Clone, Debug)]
pub struct Substitution {
    source: Space,
    target: Space,
    images: Vec<Option<Element>>,
}

impl Substitution {
    /// A substitution with no images yet; add them with [`Self::set`].
    pub fn new(source: &Space, target: &Space) -> Self {
        Substitution {
            source: source.clone(),
            target: target.clone(),
            images: vec![None; source.table().len()],
        }
    }

    /// Identity on a space.
    pub fn identity(space: &Space) -> Self {
        let mut s = Self::new(space, space);
        for l in 0..space.table().len() as u8 {
            s.images[l as usize] = Some(Element::letter(space, l));
        }
        s
    }

    pub fn set(&mut self, name: &str, image: Element) -> Result<()> {
        let l = self.source.table().require(name)?;
        self.target.check_same(image.space())?;
        if !image.is_constant_free() {
            return config(format!("image of {name:?} has a constant term"));
        }
        let g = self.source.table().grading(l);
        if !image.has_grading(g) {
            return config(format!("image of {name:?} does not have grading {g}"));
        }
        self.images[l as usize] = Some(image);
        Ok(())
    }

    pub fn with(mut self, name: &str, image: Element) -> Result<Self> {
        self.set(name, image)?;
        Ok(self)
    }

    pub fn source(&self) -> &Space {
        &self.source
    }

    pub fn target(&self) -> &Space {
        &self.target
    }

    pub fn image(&self, name: &str) -> Result<&Element> {
        let l = self.source.table().require(name)?;
        match &self.images[l as usize] {
            Some(e) => Ok(e),
            None => config(format!("no image for generator {name:?}")),
        }
    }

    /// Applies the homomorphism, truncating in the target space.
    pub fn apply(&self, x: &Element) -> Result<Element> {
        let src_table = self.source.table();
        if *x.table() != *src_table {
            return config("substitution applied to an element of another generator table");
        }
        // Images of prefixes are memoised, so each word costs one product.
        let mut prefix: HashMap<Vec<u8>, Element> = HashMap::new();
        let mut out = Element::zero(&self.target);
        for (w, c) in x.terms() {
            let img = self.word_image(w.letters(), &mut prefix)?;
            out.add_scaled(&img, c)?;
        }
        Ok(out)
    }

    fn word_image(&self, w: &[u8], memo: &mut HashMap<Vec<u8>, Element>) -> Result<Element> {
        if w.is_empty() {
            return Ok(Element::one(&self.target));
        }
        if let Some(e) = memo.get(w) {
            return Ok(e.clone());
        }
        let last = w[w.len() - 1];
        let img = match &self.images[last as usize] {
            Some(e) => e,
            None => {
                return config(format!(
                    "no image for generator {:?}",
                    self.source.table().name(last)
                ))
            }
        };
        let head = self.word_image(&w[..w.len() - 1], memo)?;
        let r = head.product(img)?;
        memo.insert(w.to_vec(), r.clone());
        Ok(r)
    }

    /// `self` after `first`: `x -> self(first(x))`.
    pub fn compose(&self, first: &Substitution) -> Result<Substitution> {
        first.target.check_same(&self.source)?;
        let mut out = Substitution::new(&first.source, &self.target);
        for (i, img) in first.images.iter().enumerate() {
            if let Some(img) = img {
                out.images[i] = Some(self.apply(img)?);
            }
        }
        Ok(out)
    }

    /// The linear part: every image replaced by its word-length-1 component.
    pub fn linear_part(&self) -> Substitution {
        Substitution {
            source: self.source.clone(),
            target: self.target.clone(),
            images: self
                .images
                .iter()
                .map(|i| i.as_ref().map(|e| e.length_component(1)))
                .collect(),
        }
    }
}

/// Convenience: the element `sum c_i * generator_i`.
pub fn linear_combination(space: &Space, parts: &[(&str, Rational)]) -> Result<Element> {
    let mut out = Element::zero(space);
    for (name, c) in parts {
        let l = space.table().require(name)?;
        out.add_scaled(&Element::monomial(space, Word::letter(l), Rational::one()), c)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::GeneratorTable;
    use crate::rational::frac;

    fn space() -> Space {
        Space::new(GeneratorTable::new([("e", 0), ("f", 0)]).unwrap(), 4).unwrap()
    }

    #[test]
    fn identity_is_identity() {
        let s = space();
        let e = Element::generator(&s, "e").unwrap();
        let f = Element::generator(&s, "f").unwrap();
        let x = &e.bracket(&f).unwrap() + &e.product(&f).unwrap().product(&f).unwrap();
        assert_eq!(Substitution::identity(&s).apply(&x).unwrap(), x);
    }

    #[test]
    fn missing_image_is_config_error() {
        let s = space();
        let e = Element::generator(&s, "e").unwrap();
        let sub = Substitution::new(&s, &s).with("e", e.clone()).unwrap();
        let f = Element::generator(&s, "f").unwrap();
        assert!(matches!(sub.apply(&f), Err(crate::Error::Config(_))));
        assert_eq!(sub.apply(&e).unwrap(), e);
    }

    #[test]
    fn rejects_grading_or_constant_violations() {
        let t = GeneratorTable::new([("a", -1), ("e", 0)]).unwrap();
        let s = Space::new(t, 3).unwrap();
        let e = Element::generator(&s, "e").unwrap();
        assert!(Substitution::new(&s, &s).with("a", e.clone()).is_err());
        assert!(Substitution::new(&s, &s).with("e", Element::one(&s)).is_err());
    }

    #[test]
    fn commutes_with_bracket() {
        let s = space();
        let e = Element::generator(&s, "e").unwrap();
        let f = Element::generator(&s, "f").unwrap();
        let phi = Substitution::new(&s, &s)
            .with("e", &e.scale(&frac(1, 2)) + &e.bracket(&f).unwrap())
            .unwrap()
            .with("f", &f - &e)
            .unwrap();
        let x = &e + &e.bracket(&f).unwrap();
        let y = f.scale(&frac(3, 2));
        let lhs = phi.apply(&x.bracket(&y).unwrap()).unwrap();
        let rhs = phi.apply(&x).unwrap().bracket(&phi.apply(&y).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}
