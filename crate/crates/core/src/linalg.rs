//! Exact linear algebra over the rationals: Gaussian elimination,
//! characteristic polynomials and a unit-disc root test.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{format_rational, int, Rational};

/// Dense square or rectangular matrix, row major.
pub type Matrix = Vec<Vec<Rational>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let inner = b.len();
    let mut out = vec![vec![Rational::zero(); m]; n];
    for i in 0..n {
        for k in 0..inner {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

pub fn mat_vec(a: &Matrix, v: &[Rational]) -> Vec<Rational> {
    a.iter()
        .map(|row| row.iter().zip(v).fold(Rational::zero(), |acc, (x, y)| acc + x * y))
        .collect()
}

/// Solves `a·x = b` for square `a`. Returns `None` when `a` is singular.
pub fn solve(a: &Matrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    assert_eq!(b.len(), n, "right-hand side length");
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for v in &mut m[col][col..] {
            *v = &*v * &inv;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *v -= &f * p;
                }
            }
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial(pub Vec<Rational>);

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial(coeffs)
    }

    pub fn from_ints_over(num: &[i64], den: i64) -> Self {
        Polynomial::new(num.iter().map(|&n| Rational::new(n.into(), den.into())).collect())
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.0.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Multiplicity of the root 0.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.0.iter().take_while(|c| c.is_zero()).count()
    }

    /// Removes the factor `λ^k` for the zero roots.
    pub fn deflate_zero_roots(&self) -> Polynomial {
        Polynomial(self.0[self.zero_root_multiplicity()..].to_vec())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Evaluation at the Gaussian rational `re + i·im`, returned as (re, im).
    pub fn eval_complex(&self, re: &Rational, im: &Rational) -> (Rational, Rational) {
        let (mut ar, mut ai) = (Rational::zero(), Rational::zero());
        for c in self.0.iter().rev() {
            let nr = &ar * re - &ai * im + c;
            let ni = &ar * im + &ai * re;
            ar = nr;
            ai = ni;
        }
        (ar, ai)
    }

    /// Human readable form in the variable `λ`, highest degree first.
    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let a = c.abs();
            let mag = if a.is_one() && i > 0 { String::new() } else { format_rational(&a) };
            let var = match i {
                0 => String::new(),
                1 => "λ".to_string(),
                _ => format!("λ^{i}"),
            };
            let body = match (mag.is_empty(), var.is_empty()) {
                (true, _) => var,
                (false, true) => mag,
                (false, false) => format!("{mag}·{var}"),
            };
            parts.push((sign, body));
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (sign, body)) in parts.into_iter().enumerate() {
            if k == 0 {
                if sign == "-" {
                    s.push('-');
                }
            } else {
                s.push_str(&format!(" {sign} "));
            }
            s.push_str(&body);
        }
        s
    }

    pub fn coefficient_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }
}

/// Monic characteristic polynomial `det(λI − A)` by the Faddeev-LeVerrier
/// recursion.
pub fn characteristic_polynomial(a: &Matrix) -> Polynomial {
    let n = a.len();
    // c[n] = 1, M_0 = 0; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k)/k
    let mut c = vec![Rational::zero(); n + 1];
    c[n] = Rational::one();
    let mut mk = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        let mut next = mat_mul(a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c[n - k + 1];
        }
        mk = next;
        let am = mat_mul(a, &mk);
        let tr = (0..n).fold(Rational::zero(), |acc, i| acc + &am[i][i]);
        c[n - k] = -tr / int(k as i64);
    }
    Polynomial::new(c)
}

/// Whether every root of `p` lies in the open unit disc, decided exactly by
/// the Schur-Cohn reduction.
pub fn roots_in_unit_disc(p: &Polynomial) -> bool {
    let mut cur = p.0.clone();
    loop {
        let n = match cur.len() {
            0 => return false,
            1 => return true,
            l => l - 1,
        };
        let a0 = cur[0].clone();
        let an = cur[n].clone();
        if an.abs() <= a0.abs() {
            return false;
        }
        // q(z) = (a_n p(z) - a_0 p*(z)) / z, where p*(z) = z^n p(1/z)
        cur = (1..=n).map(|i| &an * &cur[i] - &a0 * &cur[n - i]).collect();
    }
}

/// Squared modulus of the complex-conjugate root pair of a real quadratic
/// `c2 λ² + c1 λ + c0` with negative discriminant.
pub fn conjugate_pair_modulus_squared(p: &Polynomial) -> Option<Rational> {
    if p.degree() != Some(2) {
        return None;
    }
    let (c0, c1, c2) = (p.coeff(0), p.coeff(1), p.coeff(2));
    let disc = &c1 * &c1 - int(4) * &c0 * &c2;
    if disc.is_negative() {
        Some(c0 / c2)
    } else {
        None
    }
}

/// Serializable summary of a spectrum computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumDoc {
    pub matrix: Vec<Vec<String>>,
    /// Coefficients of the characteristic polynomial, lowest degree first.
    pub characteristic_polynomial: Vec<String>,
    pub rendered: String,
    pub zero_root_multiplicity: usize,
    /// Present when the nonzero roots form one conjugate pair.
    pub nonzero_root_modulus_squared: Option<String>,
    pub roots_in_unit_disc: bool,
    pub notes: Vec<String>,
}
