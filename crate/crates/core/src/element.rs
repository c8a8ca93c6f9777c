//! Sparse exact elements of a truncated free graded associative algebra.
//!
//! Lie elements live here as their images under the graded-commutator
//! embedding, so every identity between Lie series is checked by plain
//! coefficient comparison on words.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{config, domain, Result};
use crate::generators::{GeneratorTable, Space};
use crate::rational::{display_rational, Rational};

/// A word in the generators, stored as letter indices.
///
/// Words are ordered by length first and lexicographically (by declaration
/// order of the letters) within a length.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: u8) -> Self {
        Word(vec![l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn grading(&self, table: &GeneratorTable) -> i64 {
        self.0.iter().map(|&l| table.grading(l)).sum()
    }

    pub fn render(&self, table: &GeneratorTable) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let names: Vec<&str> = self.0.iter().map(|&l| table.name(l)).collect();
        if names.iter().all(|n| n.chars().count() == 1) {
            names.concat()
        } else {
            names.join("·")
        }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sign `(-1)^{p q}`.
pub(crate) fn koszul_sign(p: i64, q: i64) -> bool {
    (p * q).rem_euclid(2) == 1
}

/// Hash-map accumulator used by the product-like operations.
#[derive(Default)]
pub(crate) struct Accumulator {
    map: HashMap<Word, Rational>,
}

impl Accumulator {
    pub(crate) fn add(&mut self, w: Word, c: Rational) {
        match self.map.get_mut(&w) {
            Some(x) => *x += c,
            None => {
                self.map.insert(w, c);
            }
        }
    }

    pub(crate) fn finish(self, space: &Space) -> Element {
        let terms = self
            .map
            .into_iter()
            .filter(|(w, c)| !c.is_zero() && w.len() <= space.max_len())
            .collect();
        Element { space: space.clone(), terms }
    }
}

/// A finite rational combination of words, truncated by word length.
///
/// Zero coefficients are never stored and no stored word is longer than the
/// space's truncation. The arithmetic operators (`+`, `-`, unary `-`) panic on
/// mismatched spaces; the named operations return [`crate::Error::Config`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element {
    space: Space,
    terms: BTreeMap<Word, Rational>,
}

impl Element {
    pub fn zero(space: &Space) -> Self {
        Element { space: space.clone(), terms: BTreeMap::new() }
    }

    pub fn one(space: &Space) -> Self {
        Self::monomial(space, Word::empty(), Rational::one())
    }

    pub fn monomial(space: &Space, word: Word, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() && word.len() <= space.max_len() {
            terms.insert(word, coeff);
        }
        Element { space: space.clone(), terms }
    }

    pub fn letter(space: &Space, letter: u8) -> Self {
        Self::monomial(space, Word::letter(letter), Rational::one())
    }

    pub fn generator(space: &Space, name: &str) -> Result<Self> {
        Ok(Self::letter(space, space.table().require(name)?))
    }

    /// Builds from arbitrary terms: duplicates are summed, zeros and
    /// over-long words dropped, letters validated.
    pub fn from_terms(space: &Space, terms: impl IntoIterator<Item = (Word, Rational)>) -> Result<Self> {
        let n = space.table().len();
        let mut out: BTreeMap<Word, Rational> = BTreeMap::new();
        for (w, c) in terms {
            if w.0.iter().any(|&l| l as usize >= n) {
                return config("word uses a letter outside the generator table");
            }
            if w.len() > space.max_len() {
                continue;
            }
            *out.entry(w).or_insert_with(Rational::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        Ok(Element { space: space.clone(), terms: out })
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn table(&self) -> &GeneratorTable {
        self.space.table()
    }

    pub fn terms(&self) -> &BTreeMap<Word, Rational> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Word::empty())
    }

    pub fn is_constant_free(&self) -> bool {
        !self.terms.contains_key(&Word::empty())
    }

    /// Shortest word length carrying a nonzero coefficient.
    pub fn min_len(&self) -> Option<usize> {
        self.terms.keys().next().map(Word::len)
    }

    /// The single grading of all terms, `None` for zero or mixed elements.
    pub fn homogeneous_grading(&self) -> Option<i64> {
        let t = self.table();
        let mut it = self.terms.keys().map(|w| w.grading(t));
        let first = it.next()?;
        it.all(|g| g == first).then_some(first)
    }

    pub fn gradings(&self) -> Vec<i64> {
        let t = self.table();
        let mut gs: Vec<i64> = self.terms.keys().map(|w| w.grading(t)).collect();
        gs.sort_unstable();
        gs.dedup();
        gs
    }

    /// True when every term has grading `g` (vacuously for zero).
    pub fn has_grading(&self, g: i64) -> bool {
        let t = self.table();
        self.terms.keys().all(|w| w.grading(t) == g)
    }

    fn filter(&self, keep: impl Fn(&Word) -> bool) -> Element {
        Element {
            space: self.space.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn grading_component(&self, g: i64) -> Element {
        let t = self.space.table().clone();
        self.filter(|w| w.grading(&t) == g)
    }

    /// Terms of word length exactly `n`.
    pub fn length_component(&self, n: usize) -> Element {
        self.filter(|w| w.len() == n)
    }

    /// Terms with exactly `r` Lie brackets, i.e. word length `r + 1`.
    pub fn depth_component(&self, r: usize) -> Element {
        self.length_component(r + 1)
    }

    /// Terms of word length at most `n`, in the same space.
    pub fn up_to_length(&self, n: usize) -> Element {
        self.filter(|w| w.len() <= n)
    }

    /// Moves the element to a different truncation of the same generators.
    /// Raising the truncation is exact only in the sense that no new terms
    /// appear; the caller decides whether that is meaningful.
    pub fn retruncate(&self, max_len: usize) -> Result<Element> {
        let space = self.space.retruncated(max_len)?;
        Ok(Element {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() <= max_len)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
            space,
        })
    }

    pub fn scale(&self, c: &Rational) -> Element {
        if c.is_zero() {
            return Element::zero(&self.space);
        }
        Element {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element> {
        self.space.check_same(&other.space)?;
        let mut out = self.clone();
        out.add_in_place(other, &Rational::one());
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Element) -> Result<Element> {
        self.space.check_same(&other.space)?;
        let mut out = self.clone();
        out.add_in_place(other, &-Rational::one());
        Ok(out)
    }

    /// `self += c * other` (spaces assumed equal).
    fn add_in_place(&mut self, other: &Element, c: &Rational) {
        for (w, x) in &other.terms {
            let v = x * c;
            match self.terms.get_mut(w) {
                Some(y) => {
                    *y += v;
                    if y.is_zero() {
                        self.terms.remove(w);
                    }
                }
                None => {
                    if !v.is_zero() {
                        self.terms.insert(w.clone(), v);
                    }
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Rational) -> Result<()> {
        self.space.check_same(&other.space)?;
        self.add_in_place(other, c);
        Ok(())
    }

    /// Concatenation product; words beyond the truncation are dropped.
    pub fn product(&self, other: &Element) -> Result<Element> {
        self.space.check_same(&other.space)?;
        let max = self.space.max_len();
        let rhs: Vec<(&Word, &Rational)> = other.terms.iter().collect();
        let mut acc = Accumulator::default();
        for (u, cu) in &self.terms {
            let room = max - u.len();
            for &(v, cv) in &rhs {
                if v.len() > room {
                    break;
                }
                acc.add(u.concat(v), cu * cv);
            }
        }
        Ok(acc.finish(&self.space))
    }

    /// Graded commutator `[x, y] = xy - (-1)^{|x||y|} yx`, extended bilinearly
    /// over the homogeneous components.
    pub fn bracket(&self, other: &Element) -> Result<Element> {
        self.space.check_same(&other.space)?;
        let table = self.space.table();
        let max = self.space.max_len();
        let lhs: Vec<(&Word, &Rational, i64)> =
            self.terms.iter().map(|(w, c)| (w, c, w.grading(table))).collect();
        let rhs: Vec<(&Word, &Rational, i64)> =
            other.terms.iter().map(|(w, c)| (w, c, w.grading(table))).collect();
        let mut acc = Accumulator::default();
        for &(u, cu, gu) in &lhs {
            let room = max - u.len();
            for &(v, cv, gv) in &rhs {
                if v.len() > room {
                    break;
                }
                let c = cu * cv;
                if koszul_sign(gu, gv) {
                    acc.add(v.concat(u), c.clone());
                } else {
                    acc.add(v.concat(u), -c.clone());
                }
                acc.add(u.concat(v), c);
            }
        }
        Ok(acc.finish(&self.space))
    }

    /// Truncated exponential of a constant-free grading-0 element.
    pub fn exp(&self) -> Result<Element> {
        if !self.is_constant_free() {
            return domain("exp needs a constant-free argument");
        }
        if !self.has_grading(0) {
            return domain("exp is only defined here for grading-0 elements");
        }
        let mut result = Element::one(&self.space);
        let mut term = Element::one(&self.space);
        for k in 1..=self.space.max_len() {
            term = term.product(self)?.scale(&Rational::new(BigInt::one(), BigInt::from(k)));
            if term.is_zero() {
                break;
            }
            result.add_in_place(&term, &Rational::one());
        }
        Ok(result)
    }

    /// Truncated logarithm of an element with constant term 1.
    pub fn log(&self) -> Result<Element> {
        if self.constant_term() != Rational::one() {
            return domain("log needs constant term 1");
        }
        let z = self.clone() - Element::one(&self.space);
        let mut result = Element::zero(&self.space);
        let mut power = z.clone();
        for k in 1..=self.space.max_len() {
            if power.is_zero() {
                break;
            }
            let c = Rational::new(if k % 2 == 1 { BigInt::one() } else { -BigInt::one() }, BigInt::from(k));
            result.add_in_place(&power, &c);
            power = power.product(&z)?;
        }
        Ok(result)
    }

    /// `ad_self(x) = [self, x]`.
    pub fn ad(&self, x: &Element) -> Result<Element> {
        self.bracket(x)
    }

    /// `sum_k coeff(k) (ad_self)^k x`, stopping once the iterate vanishes.
    /// `self` must be constant-free so that the series terminates.
    pub fn ad_series(&self, x: &Element, coeff: impl Fn(usize) -> Rational) -> Result<Element> {
        if !self.is_constant_free() {
            return domain("ad-series needs a constant-free generator element");
        }
        self.space.check_same(&x.space)?;
        let mut result = Element::zero(&self.space);
        let mut iterate = x.clone();
        let mut k = 0;
        while !iterate.is_zero() {
            let c = coeff(k);
            result.add_in_place(&iterate, &c);
            iterate = self.bracket(&iterate)?;
            k += 1;
        }
        Ok(result)
    }

    /// `exp(t ad_self) x`.
    pub fn exp_ad(&self, t: &Rational, x: &Element) -> Result<Element> {
        let t = t.clone();
        self.ad_series(x, move |k| {
            let mut p = Rational::one();
            for _ in 0..k {
                p *= &t;
            }
            p / Rational::from_integer(crate::rational::factorial(k))
        })
    }

    /// Largest absolute coefficient (zero for the zero element).
    pub fn max_abs_coeff(&self) -> Rational {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_else(Rational::zero)
    }

    /// Deepest Lie depth through which `self` vanishes: `None` when the whole
    /// truncated element is zero, otherwise `Some(min_len - 2)` clamped below
    /// (a nonzero depth-0 part gives `Some(-1)`).
    pub fn vanishes_through_depth(&self) -> Option<i64> {
        self.min_len().map(|n| n as i64 - 2)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let t = self.table();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if mag.is_one() {
                write!(f, "{}", w.render(t))?;
            } else if w.is_empty() {
                write!(f, "{}", display_rational(&mag))?;
            } else {
                write!(f, "{} {}", display_rational(&mag), w.render(t))?;
            }
        }
        Ok(())
    }
}

impl Add<&Element> for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.checked_add(rhs).expect("adding elements of different spaces")
    }
}

impl Add for Element {
    type Output = Element;
    fn add(mut self, rhs: Element) -> Element {
        self += &rhs;
        self
    }
}

impl Sub<&Element> for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.checked_sub(rhs).expect("subtracting elements of different spaces")
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(mut self, rhs: Element) -> Element {
        self -= &rhs;
        self
    }
}

impl AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        self.space.check_same(&rhs.space).expect("adding elements of different spaces");
        self.add_in_place(rhs, &Rational::one());
    }
}

impl SubAssign<&Element> for Element {
    fn sub_assign(&mut self, rhs: &Element) {
        self.space.check_same(&rhs.space).expect("subtracting elements of different spaces");
        self.add_in_place(rhs, &-Rational::one());
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&-Rational::one())
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        (&self).neg()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn space(max_len: usize) -> Space {
        let t = GeneratorTable::new([("a", -1), ("e", 0), ("f", 0), ("g", 0), ("h", 1)]).unwrap();
        Space::new(t, max_len).unwrap()
    }

    fn w(s: &Space, names: &str) -> Word {
        Word(names.chars().map(|c| s.table().require(&c.to_string()).unwrap()).collect())
    }

    fn el(s: &Space, terms: &[(&str, Rational)]) -> Element {
        Element::from_terms(s, terms.iter().map(|(n, c)| (w(s, n), c.clone()))).unwrap()
    }

    #[test]
    fn even_self_bracket_vanishes() {
        let s = space(4);
        let e = Element::generator(&s, "e").unwrap();
        assert!(e.bracket(&e).unwrap().is_zero());
    }

    #[test]
    fn odd_self_bracket_is_twice_square() {
        let s = space(4);
        let a = Element::generator(&s, "a").unwrap();
        assert_eq!(a.bracket(&a).unwrap(), el(&s, &[("aa", int(2))]));
    }

    #[test]
    fn nested_bracket_expansion() {
        let s = space(4);
        let e = Element::generator(&s, "e").unwrap();
        let f = Element::generator(&s, "f").unwrap();
        let x = e.bracket(&e.bracket(&f).unwrap()).unwrap();
        assert_eq!(x, el(&s, &[("eef", int(1)), ("efe", int(-2)), ("fee", int(1))]));
    }

    #[test]
    fn odd_even_bracket_sign() {
        // [a,h] with |a|=-1, |h|=1 is the anticommutator.
        let s = space(4);
        let a = Element::generator(&s, "a").unwrap();
        let h = Element::generator(&s, "h").unwrap();
        assert_eq!(a.bracket(&h).unwrap(), el(&s, &[("ah", int(1)), ("ha", int(1))]));
    }

    #[test]
    fn product_unit_and_overflow() {
        let s = space(2);
        let e = Element::generator(&s, "e").unwrap();
        let f = Element::generator(&s, "f").unwrap();
        let g = Element::generator(&s, "g").unwrap();
        assert_eq!(e.product(&f).unwrap(), el(&s, &[("ef", int(1))]));
        assert_eq!(e.product(&Element::one(&s)).unwrap(), e);
        assert!(e.product(&f).unwrap().product(&g).unwrap().is_zero());
    }

    #[test]
    fn mismatched_spaces_are_config_errors() {
        let e3 = Element::generator(&space(3), "e").unwrap();
        let e4 = Element::generator(&space(4), "e").unwrap();
        assert!(matches!(e3.bracket(&e4), Err(crate::Error::Config(_))));
        assert!(matches!(e3.product(&e4), Err(crate::Error::Config(_))));
    }

    #[test]
    fn exp_series_by_hand() {
        let s = space(3);
        let e = Element::generator(&s, "e").unwrap();
        let expected = el(&s, &[("", int(1)), ("e", int(1)), ("ee", frac(1, 2)), ("eee", frac(1, 6))]);
        assert_eq!(e.exp().unwrap(), expected);
        assert_eq!(Element::zero(&s).exp().unwrap(), Element::one(&s));
    }

    #[test]
    fn log_inverts_exp() {
        for n in 1..=6 {
            let s = space(n);
            let e = Element::generator(&s, "e").unwrap();
            assert_eq!(e.exp().unwrap().log().unwrap(), e);
            let x = el(&s, &[("e", frac(1, 3)), ("f", int(-2)), ("ef", frac(5, 7)), ("gfe", int(1))]);
            assert_eq!(x.exp().unwrap().log().unwrap(), x);
        }
    }

    #[test]
    fn exp_log_domain_errors() {
        let s = space(3);
        let a = Element::generator(&s, "a").unwrap();
        assert!(matches!(a.exp(), Err(crate::Error::Domain(_))));
        assert!(matches!(Element::one(&s).exp(), Err(crate::Error::Domain(_))));
        assert!(matches!(Element::zero(&s).log(), Err(crate::Error::Domain(_))));
    }

    #[test]
    fn depth_components() {
        let s = space(4);
        let e = Element::generator(&s, "e").unwrap();
        let f = Element::generator(&s, "f").unwrap();
        let ef = e.bracket(&f).unwrap();
        let x = &e + &ef.scale(&frac(1, 2));
        assert_eq!(x.depth_component(1), ef.scale(&frac(1, 2)));
        assert!(e.depth_component(3).is_zero());
    }

    #[test]
    fn word_order_is_length_then_lex() {
        let mut v = vec![Word(vec![1, 0]), Word(vec![2]), Word(vec![0, 1]), Word(vec![])];
        v.sort();
        assert_eq!(v, vec![Word(vec![]), Word(vec![2]), Word(vec![0, 1]), Word(vec![1, 0])]);
    }
}
