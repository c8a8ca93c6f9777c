//! Seeded random sparse elements for property suites.

use rand::Rng;

use crate::element::{Element, Word};
use crate::generators::Space;
use crate::rational::frac;

/// A random sparse element of the given grading, built from words over
/// `letters` with lengths in `1..=max_word_len` and small rational
/// coefficients. May be zero if no word of that grading is found.
pub fn random_homogeneous<R: Rng>(
    rng: &mut R,
    space: &Space,
    letters: &[u8],
    grading: i64,
    max_word_len: usize,
    terms: usize,
) -> Element {
    let table = space.table();
    let max_word_len = max_word_len.min(space.max_len()).max(1);
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < terms && attempts < 200 * terms.max(1) {
        attempts += 1;
        let len = rng.gen_range(1..=max_word_len);
        let w: Vec<u8> = (0..len).map(|_| letters[rng.gen_range(0..letters.len())]).collect();
        let g: i64 = w.iter().map(|&l| table.grading(l)).sum();
        if g != grading {
            continue;
        }
        let mut p = rng.gen_range(-5i64..=5);
        if p == 0 {
            p = 1;
        }
        let q = rng.gen_range(1i64..=4);
        out.push((Word(w), frac(p, q)));
    }
    Element::from_terms(space, out).expect("letters belong to the space")
}

/// A random Lie element: a combination of brackets of random generators,
/// with the given grading.
pub fn random_lie<R: Rng>(
    rng: &mut R,
    space: &Space,
    letters: &[u8],
    grading: i64,
    max_word_len: usize,
    terms: usize,
) -> Element {
    let table = space.table();
    let max_word_len = max_word_len.min(space.max_len()).max(1);
    let mut out = Element::zero(space);
    let mut found = 0;
    let mut attempts = 0;
    while found < terms && attempts < 200 * terms.max(1) {
        attempts += 1;
        let len = rng.gen_range(1..=max_word_len);
        let w: Vec<u8> = (0..len).map(|_| letters[rng.gen_range(0..letters.len())]).collect();
        let g: i64 = w.iter().map(|&l| table.grading(l)).sum();
        if g != grading {
            continue;
        }
        let mut m = Element::letter(space, w[len - 1]);
        for &l in w[..len - 1].iter().rev() {
            m = Element::letter(space, l).bracket(&m).expect("same space");
        }
        if m.is_zero() {
            continue;
        }
        let mut p = rng.gen_range(-5i64..=5);
        if p == 0 {
            p = 1;
        }
        let q = rng.gen_range(1i64..=4);
        out.add_scaled(&m, &frac(p, q)).expect("same space");
        found += 1;
    }
    out
}
