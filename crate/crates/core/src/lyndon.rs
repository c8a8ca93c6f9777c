//! Lyndon-word basis of free Lie algebras on grading-0 generators, and the
//! Dynkin test for Lie elements.
//!
//! Basis monomials use the standard factorization `w = u v` (with `v` the
//! longest proper Lyndon suffix), but each bracket is written with the shorter
//! factor on the left: `[B(v), B(u)]` when `|v| < |u|`. This only flips signs
//! relative to the textbook bracketing, and it yields right-normed monomials
//! such as `[f,[e,f]]` wherever possible.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::element::{koszul_sign, Accumulator, Element, Word};
use crate::error::{domain, Result};
use crate::generators::{GeneratorTable, Space};
use crate::rational::Rational;

/// True if `w` is strictly smaller than each of its proper suffixes.
pub fn is_lyndon(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// All Lyndon words of length exactly `n` over `letters` (in the given
/// order, which must be increasing), listed lexicographically.
pub fn lyndon_words(letters: &[u8], n: usize) -> Vec<Vec<u8>> {
    let k = letters.len();
    if n == 0 || k == 0 {
        return Vec::new();
    }
    // Duval's generation over positions 0..k, mapped to letters at the end.
    let mut out = Vec::new();
    let mut w: Vec<usize> = vec![0];
    loop {
        if w.len() == n {
            out.push(w.iter().map(|&i| letters[i]).collect());
        }
        let m = w.len();
        while w.len() < n {
            let c = w[w.len() - m];
            w.push(c);
        }
        while let Some(&last) = w.last() {
            if last == k - 1 {
                w.pop();
            } else {
                break;
            }
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

/// Standard factorization of a Lyndon word of length >= 2.
pub fn standard_factorization(w: &[u8]) -> (&[u8], &[u8]) {
    debug_assert!(w.len() >= 2 && is_lyndon(w));
    let split = (1..w.len())
        .find(|&i| is_lyndon(&w[i..]))
        .expect("a Lyndon word has a Lyndon proper suffix");
    (&w[..split], &w[split..])
}

/// A basis monomial, identified by its Lyndon word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LyndonMonomial(pub Vec<u8>);

impl LyndonMonomial {
    pub fn depth(&self) -> usize {
        self.0.len() - 1
    }

    /// Bracket expression such as `[e0,[e0,f0]]`.
    pub fn render(&self, table: &GeneratorTable) -> String {
        fn go(w: &[u8], t: &GeneratorTable) -> String {
            if w.len() == 1 {
                return t.name(w[0]).to_string();
            }
            let (u, v) = standard_factorization(w);
            if v.len() < u.len() {
                format!("[{},{}]", go(v, t), go(u, t))
            } else {
                format!("[{},{}]", go(u, t), go(v, t))
            }
        }
        go(&self.0, table)
    }

    /// Expansion of the monomial in the tensor algebra.
    pub fn expand(&self, space: &Space) -> Element {
        let terms = expand_integer(&self.0);
        Element::from_terms(
            space,
            terms.into_iter().map(|(w, c)| (Word(w), Rational::from_integer(c.into()))),
        )
        .expect("letters come from the same table")
    }
}

impl Ord for LyndonMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        Word(self.0.clone()).cmp(&Word(other.0.clone()))
    }
}

impl PartialOrd for LyndonMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// Integer expansion of the bracketed Lyndon word (all letters grading 0).
fn expand_integer(w: &[u8]) -> Vec<(Vec<u8>, i64)> {
    if w.len() == 1 {
        return vec![(w.to_vec(), 1)];
    }
    let (u, v) = standard_factorization(w);
    let (l, r) = if v.len() < u.len() { (v, u) } else { (u, v) };
    let le = expand_integer(l);
    let re = expand_integer(r);
    let mut acc: HashMap<Vec<u8>, i64> = HashMap::new();
    for (a, ca) in &le {
        for (b, cb) in &re {
            let mut ab = a.clone();
            ab.extend_from_slice(b);
            *acc.entry(ab).or_insert(0) += ca * cb;
            let mut ba = b.clone();
            ba.extend_from_slice(a);
            *acc.entry(ba).or_insert(0) -= ca * cb;
        }
    }
    acc.into_iter().filter(|(_, c)| *c != 0).collect()
}

/// Coordinates of a Lie element in the Lyndon basis, sorted by
/// (depth, Lyndon word).
///
/// All letters occurring in `x` must have grading 0. Fails with a domain error
/// when `x` is not a Lie element: the peeling below only succeeds on Lie input,
/// since each basis monomial is its Lyndon word plus lexicographically larger
/// words.
pub fn lyndon_coordinates(x: &Element) -> Result<Vec<(LyndonMonomial, Rational)>> {
    let table = x.table();
    if !x.is_constant_free() {
        return domain("a Lie element has no constant term");
    }
    for w in x.terms().keys() {
        if w.letters().iter().any(|&l| table.grading(l) != 0) {
            return domain("Lyndon coordinates are only defined on grading-0 generators");
        }
    }
    let space = x.space().clone();
    let mut rest = x.clone();
    let mut out = Vec::new();
    while let Some((w, c)) = rest.terms().iter().next().map(|(w, c)| (w.clone(), c.clone())) {
        if !is_lyndon(w.letters()) {
            return domain(format!(
                "not a Lie element (leading word {} is not Lyndon)",
                w.render(table)
            ));
        }
        let m = LyndonMonomial(w.0.clone());
        let basis = m.expand(&space);
        let lead = basis.coeff(&w);
        let coord = c / lead;
        rest.add_scaled(&basis, &-coord.clone())?;
        out.push((m, coord));
    }
    Ok(out)
}

/// Inverse of [`lyndon_coordinates`].
pub fn from_lyndon_coordinates(space: &Space, coords: &[(LyndonMonomial, Rational)]) -> Element {
    let mut out = Element::zero(space);
    for (m, c) in coords {
        out.add_scaled(&m.expand(space), c).expect("same space");
    }
    out
}

/// Dimension of the depth-`r` slice of the free Lie algebra on `k` generators,
/// counted by enumerating Lyndon words.
pub fn lie_slice_dimension(k: usize, r: usize) -> usize {
    let letters: Vec<u8> = (0..k as u8).collect();
    lyndon_words(&letters, r + 1).len()
}

// Right-normed graded bracket [w1,[w2,...,[w_{n-1},w_n]]] of a word.
fn right_normed(w: &[u8], table: &GeneratorTable) -> Vec<(Vec<u8>, i64)> {
    let n = w.len();
    let mut cur: Vec<(Vec<u8>, i64)> = vec![(vec![w[n - 1]], 1)];
    let mut grading = table.grading(w[n - 1]);
    for i in (0..n - 1).rev() {
        let l = w[i];
        let gl = table.grading(l);
        let odd = koszul_sign(gl, grading);
        let mut next = Vec::with_capacity(cur.len() * 2);
        for (v, c) in &cur {
            let mut lv = Vec::with_capacity(v.len() + 1);
            lv.push(l);
            lv.extend_from_slice(v);
            next.push((lv, *c));
            let mut vl = v.clone();
            vl.push(l);
            next.push((vl, if odd { *c } else { -*c }));
        }
        cur = next;
        grading += gl;
    }
    cur
}

/// Decides whether `x` lies in the free graded Lie subalgebra, using the
/// Dynkin idempotent: a length-`n` component `x_n` is Lie iff
/// `D(x_n) = n x_n`, where `D` right-normed-brackets every word.
pub fn is_lie_element(x: &Element) -> bool {
    if !x.is_constant_free() {
        return false;
    }
    let table = x.table();
    let space = x.space();
    let mut acc = Accumulator::default();
    for (w, c) in x.terms() {
        let n = Rational::from_integer((w.len() as i64).into());
        acc.add(w.clone(), -(c * n));
        for (v, k) in right_normed(w.letters(), table) {
            acc.add(Word(v), c * Rational::from_integer(k.into()));
        }
    }
    acc.finish(space).is_zero()
}

impl fmt::Display for LyndonMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Renders coordinates as `c [monomial] + ...`, mainly for diagnostics.
pub fn render_coordinates(table: &GeneratorTable, coords: &[(LyndonMonomial, Rational)]) -> String {
    if coords.is_empty() {
        return "0".into();
    }
    coords
        .iter()
        .map(|(m, c)| {
            if c.is_one() {
                m.render(table)
            } else {
                format!("({}) {}", crate::rational::display_rational(c), m.render(table))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Coordinate of a given monomial in a coordinate list (zero if absent).
pub fn coordinate_of(coords: &[(LyndonMonomial, Rational)], word: &[u8]) -> Rational {
    coords
        .iter()
        .find(|(m, _)| m.0 == word)
        .map(|(_, c)| c.clone())
        .unwrap_or_else(Rational::zero)
}
