//! DGLA models of cell complexes: differentials, flows, Maurer-Cartan
//! residuals and `∂² = 0` checks.
//!
//! Every generator differential is constant-free, so `∂` never shortens a
//! word. Consequently a truncated computation of `∂` (or `∂²`) agrees with the
//! untruncated one on every word it keeps, and a vanishing truncated `∂²` is an
//! exact statement through the truncation depth.

mod models;
mod realisation;

pub use models::{
    based_triangle_model, interval_model, one_vertex_disc_model, triangle_boundary_model,
    triangle_space, TRIANGLE_EDGES,
};
pub use realisation::{
    flat_realisation_check, EdgeFlowCheck, Graph, GraphEdge, LoopCheck, Realisation, RealisationReport,
};

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::action::SignedPermutationAction;
use crate::bch::bch_list;
use crate::bernoulli::bernoulli;
use crate::element::{koszul_sign, Accumulator, Element, Word};
use crate::error::{config, domain, Result};
use crate::generators::Space;
use crate::rational::{factorial, frac, Rational};
use crate::serial::ElementDoc;

/// How the differential of one generator is determined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rule {
    /// Maurer-Cartan: `∂a = -1/2 [a,a]`.
    Vertex,
    /// Interval formula: the edge flows from `source` to `target`.
    Edge { source: String, target: String },
    /// A given value.
    Explicit(Element),
}

/// Generators, their differential rules, and a truncation.
#[derive(Clone, Debug)]
pub struct CellModel {
    space: Space,
    rules: Vec<Option<Rule>>,
    differentials: Vec<Option<Element>>,
}

impl CellModel {
    /// A model with no rules yet.
    pub fn new(space: &Space) -> Self {
        let n = space.table().len();
        CellModel { space: space.clone(), rules: vec![None; n], differentials: vec![None; n] }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn vertex(mut self, name: &str) -> Result<Self> {
        let l = self.space.table().require(name)?;
        if self.space.table().grading(l) != -1 {
            return config(format!("vertex {name:?} must have grading -1"));
        }
        let a = Element::letter(&self.space, l);
        let d = a.bracket(&a)?.scale(&frac(-1, 2));
        self.rules[l as usize] = Some(Rule::Vertex);
        self.differentials[l as usize] = Some(d);
        Ok(self)
    }

    pub fn edge(mut self, name: &str, source: &str, target: &str) -> Result<Self> {
        let table = self.space.table();
        let l = table.require(name)?;
        if table.grading(l) != 0 {
            return config(format!("edge {name:?} must have grading 0"));
        }
        for v in [source, target] {
            if table.grading(table.require(v)?) != -1 {
                return config(format!("edge endpoint {v:?} must have grading -1"));
            }
        }
        let d = edge_differential(&self.space, name, source, target)?;
        self.rules[l as usize] = Some(Rule::Edge { source: source.into(), target: target.into() });
        self.differentials[l as usize] = Some(d);
        Ok(self)
    }

    pub fn explicit(mut self, name: &str, value: Element) -> Result<Self> {
        let l = self.space.table().require(name)?;
        self.space.check_same(value.space())?;
        let g = self.space.table().grading(l);
        if !value.has_grading(g - 1) {
            return config(format!("differential of {name:?} must have grading {}", g - 1));
        }
        if !value.is_constant_free() {
            return config("differentials must be constant-free");
        }
        self.rules[l as usize] = Some(Rule::Explicit(value.clone()));
        self.differentials[l as usize] = Some(value);
        Ok(self)
    }

    pub fn rule(&self, name: &str) -> Result<Option<&Rule>> {
        let l = self.space.table().require(name)?;
        Ok(self.rules[l as usize].as_ref())
    }

    /// `∂` of a generator.
    pub fn generator_differential(&self, name: &str) -> Result<&Element> {
        let l = self.space.table().require(name)?;
        self.differential_of_letter(l)
    }

    fn differential_of_letter(&self, l: u8) -> Result<&Element> {
        match &self.differentials[l as usize] {
            Some(d) => Ok(d),
            None => config(format!(
                "no differential rule for generator {:?}",
                self.space.table().name(l)
            )),
        }
    }

    /// `∂` extended as a graded derivation:
    /// `∂(uv) = ∂(u) v + (-1)^{|u|} u ∂(v)`.
    pub fn differential(&self, x: &Element) -> Result<Element> {
        self.space.check_same(x.space())?;
        let table = self.space.table();
        let max = self.space.max_len();
        let mut acc = Accumulator::default();
        for (w, c) in x.terms() {
            let letters = w.letters();
            let mut prefix_grading = 0i64;
            for (i, &l) in letters.iter().enumerate() {
                let d = self.differential_of_letter(l)?;
                let neg = koszul_sign(prefix_grading, 1);
                let room = max - (letters.len() - 1);
                for (v, cv) in d.terms() {
                    if v.len() > room {
                        break;
                    }
                    let mut nw = Vec::with_capacity(letters.len() - 1 + v.len());
                    nw.extend_from_slice(&letters[..i]);
                    nw.extend_from_slice(v.letters());
                    nw.extend_from_slice(&letters[i + 1..]);
                    let coeff = c * cv;
                    acc.add(Word(nw), if neg { -coeff } else { coeff });
                }
                prefix_grading += table.grading(l);
            }
        }
        Ok(acc.finish(&self.space))
    }

    /// Localised differential `∂_p y = ∂y + [p, y]` at a point `p`.
    pub fn twisted_differential(&self, point: &Element, y: &Element) -> Result<Element> {
        Ok(&self.differential(y)? + &point.bracket(y)?)
    }

    /// Unit-time flow by `e`: `exp(-ad_e) x` on gradings >= 0, and the affine
    /// flow of [`Self::flow_point`] on grading -1. A zero `x` is returned as is;
    /// use `flow_point` to flow the origin of grading -1.
    pub fn flow_unit(&self, e: &Element, x: &Element) -> Result<Element> {
        check_flow_generator(e)?;
        if x.is_zero() {
            return Ok(x.clone());
        }
        match x.homogeneous_grading() {
            Some(-1) => self.flow_point(e, x),
            Some(_) => e.exp_ad(&-Rational::one(), x),
            None => domain("flow needs a grading-homogeneous element"),
        }
    }

    /// Closed-form solution of `dx/dt = ∂e - ad_e x` at `t = 1`:
    /// `exp(-E) x + ((1 - exp(-E))/E) ∂e` with `E = ad_e`.
    pub fn flow_point(&self, e: &Element, x: &Element) -> Result<Element> {
        check_flow_generator(e)?;
        if !x.has_grading(-1) {
            return domain("flow_point needs a grading -1 element");
        }
        let moved = e.exp_ad(&-Rational::one(), x)?;
        let de = self.differential(e)?;
        let inhomogeneous = e.ad_series(&de, |k| {
            let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            Rational::new(sign, factorial(k + 1))
        })?;
        Ok(&moved + &inhomogeneous)
    }

    /// `∂x + 1/2 [x,x]`.
    pub fn mc_residual(&self, x: &Element) -> Result<Element> {
        if !x.has_grading(-1) {
            return domain("Maurer-Cartan residual needs a grading -1 element");
        }
        Ok(&self.differential(x)? + &x.bracket(x)?.scale(&frac(1, 2)))
    }

    /// True iff `∂e + [x,e] = 0`, i.e. `e` is localised at the point `x`.
    pub fn localized_kernel_check(&self, e: &Element, x: &Element) -> Result<bool> {
        Ok(self.twisted_differential(x, e)?.is_zero())
    }

    /// `∂(∂g)` for every generator with a rule.
    pub fn verify_d_squared(&self) -> Result<DSquaredReport> {
        let table = self.space.table();
        let mut entries = Vec::new();
        for (l, d) in self.differentials.iter().enumerate() {
            if let Some(d) = d {
                entries.push(DSquaredEntry {
                    generator: table.name(l as u8).to_string(),
                    residual: self.differential(d)?,
                });
            }
        }
        Ok(DSquaredReport { depth: self.space.depth(), entries })
    }

    /// The conjugated model `A ∂ A^{-1}` under a symmetry action. Vertex and
    /// edge rules are kept when the transported differential still matches
    /// the rule's formula; anything else becomes explicit.
    pub fn transformed(&self, action: &SignedPermutationAction) -> Result<CellModel> {
        let table = self.space.table();
        let mut out = CellModel::new(&self.space);
        for (l, rule) in self.rules.iter().enumerate() {
            let Some(rule) = rule else { continue };
            let (t, neg) = action.image_of(l as u8);
            let mut value = action.apply(self.differentials[l].as_ref().expect("rule has value"))?;
            if neg {
                value = -value;
            }
            let name = table.name(t).to_string();
            let candidate = match rule {
                Rule::Vertex => out.clone().vertex(&name).ok(),
                Rule::Edge { source, target } => {
                    let s = action.image_of(table.require(source)?);
                    let g = action.image_of(table.require(target)?);
                    if s.1 || g.1 {
                        None
                    } else {
                        let (s, g) = (table.name(s.0).to_string(), table.name(g.0).to_string());
                        let (s, g) = if neg { (g, s) } else { (s, g) };
                        out.clone().edge(&name, &s, &g).ok()
                    }
                }
                Rule::Explicit(_) => None,
            };
            out = match candidate {
                Some(m) if m.differentials[t as usize].as_ref() == Some(&value) => m,
                _ => out.explicit(&name, value)?,
            };
        }
        Ok(out)
    }

    /// Document form: every generator with its rule and expanded differential.
    pub fn to_doc(&self) -> ModelDoc {
        let table = self.space.table();
        let mut differentials = Vec::new();
        for (l, rule) in self.rules.iter().enumerate() {
            let Some(rule) = rule else { continue };
            let (kind, source, target) = match rule {
                Rule::Vertex => ("vertex", None, None),
                Rule::Edge { source, target } => ("edge", Some(source.clone()), Some(target.clone())),
                Rule::Explicit(_) => ("explicit", None, None),
            };
            differentials.push(DifferentialDoc {
                generator: table.name(l as u8).to_string(),
                rule: kind.to_string(),
                source,
                target,
                value: ElementDoc::from_element(self.differentials[l].as_ref().expect("rule has value")),
            });
        }
        ModelDoc {
            generators: table.generators().to_vec(),
            truncation: self.space.max_len(),
            differentials,
        }
    }

    /// Rebuilds a model from its document; explicit values are taken as given.
    pub fn from_doc(doc: &ModelDoc) -> Result<CellModel> {
        let table = crate::generators::GeneratorTable::new(
            doc.generators.iter().map(|g| (g.name.clone(), g.grading)),
        )?;
        let space = Space::new(table, doc.truncation)?;
        let mut m = CellModel::new(&space);
        for d in &doc.differentials {
            m = match d.rule.as_str() {
                "vertex" => m.vertex(&d.generator)?,
                "edge" => match (&d.source, &d.target) {
                    (Some(s), Some(t)) => m.edge(&d.generator, s, t)?,
                    _ => return config("edge rule needs source and target"),
                },
                "explicit" => m.explicit(&d.generator, d.value.to_element_in(&space)?)?,
                other => return config(format!("unknown rule {other:?}")),
            };
        }
        Ok(m)
    }
}

fn check_flow_generator(e: &Element) -> Result<()> {
    if !e.has_grading(0) {
        return domain("flows are generated by grading-0 elements");
    }
    if !e.is_constant_free() {
        return domain("flow generator must be constant-free");
    }
    Ok(())
}

/// Interval differential of the edge `e` from `a` to `b`:
/// `ad_e b + sum_i (B_i / i!) (ad_e)^i (b - a)`.
pub fn edge_differential(space: &Space, e: &str, a: &str, b: &str) -> Result<Element> {
    let e = Element::generator(space, e)?;
    let a = Element::generator(space, a)?;
    let b = Element::generator(space, b)?;
    let series = e.ad_series(&(&b - &a), |i| bernoulli(i) / Rational::from_integer(factorial(i)))?;
    Ok(&e.bracket(&b)? + &series)
}

/// Orientation of an edge along a path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    Forward,
    Reversed,
}

/// BCH of a path: the n-ary BCH of its oriented labels.
pub fn path_bch(space: &Space, edges: &[(Element, Orientation)]) -> Result<Element> {
    let labels: Vec<Element> = edges
        .iter()
        .map(|(x, o)| match o {
            Orientation::Forward => x.clone(),
            Orientation::Reversed => -x,
        })
        .collect();
    bch_list(space, &labels)
}

#[derive(Clone, Debug)]
pub struct DSquaredEntry {
    pub generator: String,
    pub residual: Element,
}

impl DSquaredEntry {
    pub fn vanishes(&self) -> bool {
        self.residual.is_zero()
    }

    /// Deepest depth through which `∂²g` vanishes (`-1` if already nonzero at
    /// depth 0), capped at the model depth.
    pub fn vanishes_through(&self, model_depth: usize) -> i64 {
        self.residual.vanishes_through_depth().unwrap_or(model_depth as i64)
    }
}

#[derive(Clone, Debug)]
pub struct DSquaredReport {
    pub depth: usize,
    pub entries: Vec<DSquaredEntry>,
}

impl DSquaredReport {
    pub fn all_vanish(&self) -> bool {
        self.entries.iter().all(DSquaredEntry::vanishes)
    }

    pub fn entry(&self, generator: &str) -> Option<&DSquaredEntry> {
        self.entries.iter().find(|e| e.generator == generator)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferentialDoc {
    pub generator: String,
    pub rule: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub source: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub target: Option<String>,
    pub value: ElementDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelDoc {
    pub generators: Vec<crate::generators::Generator>,
    pub truncation: usize,
    pub differentials: Vec<DifferentialDoc>,
}

#[cfg(test)]
mod tests;
