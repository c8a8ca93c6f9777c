//! Bernoulli numbers with `B_1 = -1/2`, i.e. `x / (e^x - 1) = sum B_n x^n / n!`.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::rational::Rational;

static CACHE: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// `B_n`, from the recurrence `sum_{k=0}^{n} C(n+1, k) B_k = 0` (n >= 1).
pub fn bernoulli(n: usize) -> Rational {
    let mut cache = CACHE.lock().expect("bernoulli cache poisoned");
    if cache.is_empty() {
        cache.push(Rational::one());
    }
    while cache.len() <= n {
        let m = cache.len();
        let mut s = Rational::zero();
        for (k, b) in cache.iter().enumerate() {
            s += b * Rational::from_integer(binomial(BigInt::from(m + 1), BigInt::from(k)));
        }
        cache.push(-s / Rational::from_integer(BigInt::from(m + 1)));
    }
    cache[n].clone()
}
