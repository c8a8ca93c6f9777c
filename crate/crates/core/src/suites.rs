//! Seeded randomized property suites over the triangle algebra.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bch::bch;
use crate::cell::{based_triangle_model, triangle_space};
use crate::certificate::{describe_residual, Check};
use crate::element::Element;
use crate::error::Result;
use crate::random::random_lie;
use crate::rational::int;

/// Parameters shared by the suites.
#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub instances: usize,
    pub depth: usize,
}

// Per-suite stream so adding a suite does not change the others.
fn rng(cfg: &SuiteConfig, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(cfg.seed);
    r.set_stream(stream);
    r
}

fn outcome(name: &str, cfg: &SuiteConfig, failure: Option<(usize, Element)>) -> Check {
    match failure {
        None => Check::new(name, cfg.depth, true, format!("{} random instances hold exactly", cfg.instances)),
        Some((i, r)) => Check::new(name, cfg.depth, false, format!("instance {i}: {}", describe_residual(&r))),
    }
}

const ALL_LETTERS: [u8; 7] = [0, 1, 2, 3, 4, 5, 6];
const EDGE_LETTERS: [u8; 3] = [3, 4, 5];

/// `[x,[y,z]] = [[x,y],z] + (−1)^{|x||y|} [y,[x,z]]` on random homogeneous
/// Lie elements of gradings −1, 0 and 1.
pub fn graded_jacobi(cfg: &SuiteConfig) -> Result<Check> {
    let s = triangle_space(cfg.depth + 1)?;
    let mut rng = rng(cfg, 1);
    for i in 0..cfg.instances {
        let g: Vec<i64> = (0..3).map(|_| rng.gen_range(-1..=1)).collect();
        let x = random_lie(&mut rng, &s, &ALL_LETTERS, g[0], 2, 2);
        let y = random_lie(&mut rng, &s, &ALL_LETTERS, g[1], 2, 2);
        let z = random_lie(&mut rng, &s, &ALL_LETTERS, g[2], 2, 2);
        let sign = if (g[0] * g[1]).rem_euclid(2) == 1 { int(-1) } else { int(1) };
        let lhs = x.bracket(&y.bracket(&z)?)?;
        let rhs = &x.bracket(&y)?.bracket(&z)? + &y.bracket(&x.bracket(&z)?)?.scale(&sign);
        let r = &lhs - &rhs;
        if !r.is_zero() {
            return Ok(outcome("property_graded_jacobi", cfg, Some((i, r))));
        }
    }
    Ok(outcome("property_graded_jacobi", cfg, None))
}

/// `BCH(BCH(x,y),z) = BCH(x,BCH(y,z))` on random grading-0 Lie elements.
pub fn bch_associativity(cfg: &SuiteConfig) -> Result<Check> {
    let s = triangle_space(cfg.depth + 1)?;
    let mut rng = rng(cfg, 2);
    for i in 0..cfg.instances {
        let x = random_lie(&mut rng, &s, &EDGE_LETTERS, 0, 2, 2);
        let y = random_lie(&mut rng, &s, &EDGE_LETTERS, 0, 2, 2);
        let z = random_lie(&mut rng, &s, &EDGE_LETTERS, 0, 2, 2);
        let r = &bch(&bch(&x, &y)?, &z)? - &bch(&x, &bch(&y, &z)?)?;
        if !r.is_zero() {
            return Ok(outcome("property_bch_associativity", cfg, Some((i, r))));
        }
    }
    Ok(outcome("property_bch_associativity", cfg, None))
}

/// `u_f(u_e(x)) = u_{BCH(e,f)}(x)` in the based triangle model, for random
/// grading-0 `e, f` and random grading −1 `x`.
pub fn flow_composition(cfg: &SuiteConfig) -> Result<Check> {
    let m = based_triangle_model("a", cfg.depth + 1)?;
    let s = m.space().clone();
    let mut rng = rng(cfg, 3);
    for i in 0..cfg.instances {
        let e = random_lie(&mut rng, &s, &ALL_LETTERS, 0, 2, 2);
        let f = random_lie(&mut rng, &s, &ALL_LETTERS, 0, 2, 2);
        let x = random_lie(&mut rng, &s, &ALL_LETTERS, -1, 2, 2);
        let r = &m.flow_unit(&f, &m.flow_unit(&e, &x)?)? - &m.flow_unit(&bch(&e, &f)?, &x)?;
        if !r.is_zero() {
            return Ok(outcome("property_flow_composition", cfg, Some((i, r))));
        }
    }
    Ok(outcome("property_flow_composition", cfg, None))
}

/// Flows of a vertex by random grading-0 elements stay Maurer-Cartan.
pub fn mc_preservation(cfg: &SuiteConfig) -> Result<Check> {
    let m = based_triangle_model("a", cfg.depth + 1)?;
    let s = m.space().clone();
    let vertices = ["a", "b", "c"];
    let mut rng = rng(cfg, 4);
    for i in 0..cfg.instances {
        let v = Element::generator(&s, vertices[rng.gen_range(0..3)])?;
        let e = random_lie(&mut rng, &s, &ALL_LETTERS, 0, 2, 3);
        let f = random_lie(&mut rng, &s, &ALL_LETTERS, 0, 2, 2);
        let p = m.flow_unit(&f, &m.flow_unit(&e, &v)?)?;
        let r = m.mc_residual(&p)?;
        if !r.is_zero() {
            return Ok(outcome("property_mc_preservation", cfg, Some((i, r))));
        }
    }
    Ok(outcome("property_mc_preservation", cfg, None))
}

pub fn all(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    Ok(vec![graded_jacobi(cfg)?, bch_associativity(cfg)?, flow_composition(cfg)?, mc_preservation(cfg)?])
}
