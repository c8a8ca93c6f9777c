//! Symmetry actions by signed permutations of generators.

use num_traits::One;

use crate::element::{Element, Word};
use crate::error::{config, Result};
use crate::generators::Space;
use crate::rational::Rational;

/// A generator permutation with signs, extended to a graded Lie automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutationAction {
    name: String,
    space: Space,
    // images[i] = (target letter, negated)
    images: Vec<(u8, bool)>,
}

impl SignedPermutationAction {
    pub fn identity(space: &Space) -> Self {
        SignedPermutationAction {
            name: "identity".into(),
            space: space.clone(),
            images: (0..space.table().len() as u8).map(|l| (l, false)).collect(),
        }
    }

    /// Builds from `(from, to, sign)` triples; generators not listed are fixed.
    pub fn new(name: &str, space: &Space, moves: &[(&str, &str, i8)]) -> Result<Self> {
        let table = space.table();
        let mut images: Vec<(u8, bool)> = (0..table.len() as u8).map(|l| (l, false)).collect();
        for &(from, to, sign) in moves {
            let f = table.require(from)?;
            let t = table.require(to)?;
            if table.grading(f) != table.grading(t) {
                return config(format!("{from} and {to} have different gradings"));
            }
            if sign != 1 && sign != -1 {
                return config("signs must be +1 or -1");
            }
            images[f as usize] = (t, sign < 0);
        }
        let mut seen = vec![false; images.len()];
        for &(t, _) in &images {
            if std::mem::replace(&mut seen[t as usize], true) {
                return config(format!("action {name:?} is not a permutation"));
            }
        }
        Ok(SignedPermutationAction { name: name.into(), space: space.clone(), images })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: &str) -> Self {
        self.name = name.into();
        self
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    /// Image of a generator as (letter, negated).
    pub fn image_of(&self, letter: u8) -> (u8, bool) {
        self.images[letter as usize]
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        if *x.table() != *self.space.table() {
            return config("action applied to an element of another generator table");
        }
        let terms = x.terms().iter().map(|(w, c)| {
            let mut neg = false;
            let letters = w
                .letters()
                .iter()
                .map(|&l| {
                    let (t, s) = self.images[l as usize];
                    neg ^= s;
                    t
                })
                .collect();
            (Word(letters), if neg { -c.clone() } else { c.clone() })
        });
        Element::from_terms(x.space(), terms)
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &SignedPermutationAction) -> Result<Self> {
        self.space.check_same(&other.space).or_else(|_| {
            if self.space.table() == other.space.table() {
                Ok(())
            } else {
                config("actions on different generator tables")
            }
        })?;
        let images = other
            .images
            .iter()
            .map(|&(t, s)| {
                let (u, s2) = self.images[t as usize];
                (u, s ^ s2)
            })
            .collect();
        Ok(SignedPermutationAction {
            name: format!("{}*{}", self.name, other.name),
            space: self.space.clone(),
            images,
        })
    }

    pub fn same_map(&self, other: &SignedPermutationAction) -> bool {
        self.images == other.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &(t, s))| t as usize == i && !s)
    }

    /// Sign as a rational, for the generator `letter`.
    pub fn sign_of(&self, letter: u8) -> Rational {
        if self.images[letter as usize].1 {
            -Rational::one()
        } else {
            Rational::one()
        }
    }

    /// Order of the action as a group element (bounded search).
    pub fn order(&self) -> usize {
        let mut cur = self.clone();
        for n in 1..=64 {
            if cur.is_identity() {
                return n;
            }
            cur = self.compose(&cur).expect("same table");
        }
        0
    }
}

/// `true` when `action(x) == sign * x`.
pub fn transforms_with_sign(action: &SignedPermutationAction, x: &Element, sign: i8) -> Result<bool> {
    let y = action.apply(x)?;
    let target = if sign < 0 { -x } else { x.clone() };
    Ok(y == target)
}
