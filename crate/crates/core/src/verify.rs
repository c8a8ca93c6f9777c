//! The full verification run behind the `verify` command.

use crate::certificate::{Certificate, Check};
use crate::error::{config, Result};
use crate::lyndon::{coordinate_of, lyndon_coordinates, LyndonMonomial};
use crate::rational::{frac, Rational};
use crate::suites::{self, SuiteConfig};
use crate::symmetric::{
    kgon_linear_part, kgon_symmetric_data, make_tau, triangle_cycle, universal_word, Corruption, Polygon,
    SymmetricData,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Triangle,
    Kgon(usize),
}

impl Shape {
    pub fn k(&self) -> usize {
        match self {
            Shape::Triangle => 3,
            Shape::Kgon(k) => *k,
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub shape: Shape,
    pub depth: usize,
    pub seed: u64,
    pub property_instances: usize,
    /// Depth used by the randomized suites.
    pub property_depth: usize,
    pub corrupt: Option<Corruption>,
}

impl VerifyConfig {
    pub fn new(shape: Shape, depth: usize, seed: u64) -> Self {
        VerifyConfig { shape, depth, seed, property_instances: 100, property_depth: 4, corrupt: None }
    }
}

/// Lyndon coordinates of `α` through depth 2, keyed by Lyndon word
/// (0 = e0, 1 = f0).
pub fn reference_alpha() -> Vec<(Vec<u8>, Rational)> {
    vec![
        (vec![0], frac(-1, 3)),
        (vec![1], frac(-2, 3)),
        (vec![0, 1], frac(-1, 6)),
        (vec![0, 0, 1], frac(-1, 54)),
        (vec![0, 1, 1], frac(1, 36)),
    ]
}

pub fn reference_beta_depth0() -> Vec<(Vec<u8>, Rational)> {
    vec![(vec![0], frac(2, 3)), (vec![1], frac(1, 3))]
}

/// `γ` through depth 2: `(f0 − e0)/3 − (1/108)[e0+f0,[e0,f0]]`.
pub fn reference_gamma() -> Vec<(Vec<u8>, Rational)> {
    vec![
        (vec![0], frac(-1, 3)),
        (vec![1], frac(1, 3)),
        (vec![0, 1], frac(0, 1)),
        (vec![0, 0, 1], frac(-1, 108)),
        (vec![0, 1, 1], frac(-1, 108)),
    ]
}

fn compare_coordinates(
    name: &str,
    depth: usize,
    x: &crate::element::Element,
    expected: &[(Vec<u8>, Rational)],
) -> Result<Check> {
    let c: Vec<(LyndonMonomial, Rational)> = lyndon_coordinates(x)?;
    for (w, v) in expected {
        let got = coordinate_of(&c, w);
        if &got != v {
            let table = x.table();
            let label = LyndonMonomial(w.clone()).render(table);
            return Ok(Check::new(name, depth, false, format!("coefficient of {label}: got {got}, expected {v}")));
        }
    }
    Ok(Check::new(name, depth, true, format!("{} coefficients match", expected.len())))
}

/// Checks specific to the triangle.
pub fn triangle_checks(data: &SymmetricData) -> Result<Vec<Check>> {
    let d = data.depth;
    let b = &data.b;
    let mut out = Vec::new();

    let tau = make_tau(b)?;
    let mut cycle = triangle_cycle(b)?;
    let mut tn = cycle.labels()[0].clone();
    let mut res = Vec::new();
    let mut sig = Vec::new();
    for n in 1..=2 {
        let prev = cycle.clone();
        cycle = cycle.inscribe_step()?;
        tn = tau.apply(&tn)?;
        res.push((format!("tau^{n}(e0) - e_{n}"), &tn - &cycle.labels()[0]));
        sig.push((format!("sigma(g_{}) - f_{n}", n - 1), &data.sigma.apply(&prev.labels()[2])? - &cycle.labels()[1]));
    }
    out.push(Check::residuals("tau_subdivision", d, res.iter().map(|(l, r)| (l.clone(), r))));
    out.push(Check::residuals("sigma_subdivision", d, sig.iter().map(|(l, r)| (l.clone(), r))));

    let cd = d.min(2);
    out.push(compare_coordinates("alpha_coefficients", cd, &data.alpha().up_to_length(cd + 1), &reference_alpha()[..lens(cd)])?);
    out.push(compare_coordinates("beta_coefficients", 0, &data.beta().up_to_length(1), &reference_beta_depth0())?);
    out.push(compare_coordinates("gamma_coefficients", cd, &data.gamma().up_to_length(cd + 1), &reference_gamma()[..lens(cd)])?);

    let u = universal_word(data.alpha(), data.beta(), data.gamma())?;
    let low: Vec<(String, crate::element::Element)> =
        (1..=d.min(3)).map(|r| (format!("depth {r}"), u.word.depth_component(r))).collect();
    out.push(Check::residuals("universal_word_low_depths", d, low.iter().map(|(l, r)| (l.clone(), r))));
    out.push(Check::residuals(
        "universal_word_symmetry",
        d,
        [
            ("F(beta,alpha) - F(alpha,beta)".to_string(), &u.swap_residual()?),
            ("F(alpha,F(alpha,beta)) - beta".to_string(), &u.involution_residual()?),
        ],
    ));
    if d >= 4 {
        let r = &u.word.depth_component(4) - &universal_depth4_reference(&u.space)?;
        out.push(Check::residual("universal_word_depth4", 4, &r));
    }
    Ok(out)
}

fn lens(depth: usize) -> usize {
    [2, 3, 5][depth]
}

/// `(17/5940)(A⁴β + B⁴α − A²B²α − B²A²β + ½(AB³α + BA³β))` with
/// `A = ad_alpha`, `B = ad_beta`.
pub fn universal_depth4_reference(space: &crate::generators::Space) -> Result<crate::element::Element> {
    use crate::element::Element;
    let a = Element::generator(space, "alpha")?;
    let b = Element::generator(space, "beta")?;
    // ops applied right to left: word "AABB" on x means A(A(B(B x)))
    let ad = |ops: &str, x: &Element| -> Result<Element> {
        let mut y = x.clone();
        for c in ops.chars().rev() {
            y = if c == 'A' { a.bracket(&y)? } else { b.bracket(&y)? };
        }
        Ok(y)
    };
    let mut s = &ad("AAAA", &b)? + &ad("BBBB", &a)?;
    s -= &ad("AABB", &a)?;
    s -= &ad("BBAA", &b)?;
    s += &(&ad("ABBB", &a)? + &ad("BAAA", &b)?).scale(&frac(1, 2));
    Ok(s.scale(&frac(17, 5940)))
}

/// Runs every check for the configured shape.
pub fn verify(cfg: &VerifyConfig) -> Result<Certificate> {
    if cfg.depth == 0 {
        return config("depth must be at least 1");
    }
    let k = cfg.shape.k();
    let lp = kgon_linear_part(k)?;
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    checks.push(Check::new(
        "linear_part_contracting",
        0,
        lp.is_contracting(),
        format!("characteristic polynomial {}", lp.characteristic.render()),
    ));
    let data = kgon_symmetric_data(k, cfg.depth, cfg.corrupt)?;
    checks.extend(data.checks()?);
    if k == 3 {
        checks.extend(triangle_checks(&data)?);
        let generic = SymmetricData::generic(&Polygon::triangle(), cfg.depth, cfg.corrupt)?;
        checks.push(Check::new(
            "generic_path_agreement",
            cfg.depth,
            generic.same_as(&data)?,
            "triangle-specialised and generic polygon constructions",
        ));
    }
    let scfg = SuiteConfig { seed: cfg.seed, instances: cfg.property_instances, depth: cfg.property_depth };
    if cfg.property_instances > 0 {
        checks.extend(suites::all(&scfg)?);
    }
    let spectrum = lp.to_doc();
    notes.extend(spectrum.notes.iter().cloned());
    notes.push(format!("truncation: words of length at most {}", cfg.depth + 1));
    Ok(Certificate {
        shape: match cfg.shape {
            Shape::Triangle => "triangle".into(),
            Shape::Kgon(_) => "kgon".into(),
        },
        k,
        depth: cfg.depth,
        seed: cfg.seed,
        checks,
        spectrum: Some(spectrum),
        notes,
    })
}
