//! Symmetric data of a polygon: flattened edges, connectors, the symmetric
//! point and the symmetric model of the cell.

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::bch::{bch, bch_list};
use crate::cell::{triangle_boundary_model, CellModel, ModelDoc};
use crate::certificate::Check;
use crate::element::Element;
use crate::error::{config, internal, Result};
use crate::generators::Space;
use crate::rational::{frac, Rational};
use crate::serial::ElementDoc;
use crate::substitution::Substitution;

use super::cycle::EdgeCycle;
use super::fixed_point::solve_fixed_point;
use super::polygon::Polygon;

/// Debug perturbations for negative controls. Each adds a small multiple
/// of a generator right after the named quantity is computed, so every later
/// quantity is built from the corrupted value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corruption {
    Alpha,
    Point,
    Q,
}

impl Corruption {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "alpha" => Ok(Corruption::Alpha),
            "x" | "point" => Ok(Corruption::Point),
            "q" => Ok(Corruption::Q),
            _ => config(format!("unknown corruption target {name:?} (expected alpha, x or q)")),
        }
    }
}

fn perturbation() -> Rational {
    frac(1, 1000)
}

/// Symmetric data of a `k`-gon through a fixed depth.
///
/// `B` is the free Lie algebra on the flattened edges `s_1, …, s_{k-1}`;
/// connector `i` joins vertex `i` to the symmetric point. Elements of `B`
/// are re-expressed in the ambient algebra through the flattening of the
/// boundary edges.
#[derive(Clone, Debug)]
pub struct SymmetricData {
    pub polygon: Polygon,
    pub depth: usize,
    pub b: Space,
    pub ambient: Space,
    /// `s_0, …, s_{k-1}` in `B`.
    pub flat: Vec<Element>,
    pub sigma: Substitution,
    pub rotation: Substitution,
    /// Connectors in `B`, one per vertex.
    pub connectors: Vec<Element>,
    pub flat_ambient: EdgeCycle,
    pub embedding: Substitution,
    pub connectors_ambient: Vec<Element>,
    pub boundary: CellModel,
    pub point: Element,
    pub q: Element,
    pub model: CellModel,
}

/// The triangle case, with `α, β, γ` based at `a, b, c`.
pub type SymmetricTriangleData = SymmetricData;

impl SymmetricData {
    pub fn k(&self) -> usize {
        self.polygon.k
    }

    pub fn alpha(&self) -> &Element {
        &self.connectors[0]
    }

    pub fn beta(&self) -> &Element {
        &self.connectors[1]
    }

    pub fn gamma(&self) -> &Element {
        &self.connectors[2]
    }

    pub fn shift(&self) -> Element {
        self.flat[0].scale(&frac(-1, 2))
    }

    /// The model with `∂h = q − [x, h]` on top of the boundary model.
    fn assemble_model(boundary: &CellModel, cell: &str, q: &Element, x: &Element) -> Result<CellModel> {
        let h = Element::generator(boundary.space(), cell)?;
        boundary.clone().explicit(cell, q - &x.bracket(&h)?)
    }

    /// The triangle-specialised construction: `σ`, the rotation and the
    /// flattening are written out for the triangle rather than derived from
    /// the polygon tables.
    pub fn triangle(depth: usize, corrupt: Option<Corruption>) -> Result<Self> {
        if depth == 0 {
            return config("depth must be at least 1");
        }
        let polygon = Polygon::triangle();
        let max_len = depth + 1;
        let b = polygon.b_space(max_len)?;
        let e0 = Element::generator(&b, "e0")?;
        let f0 = Element::generator(&b, "f0")?;
        let g0 = -&bch(&e0, &f0)?;
        let sigma = super::make_sigma(&b)?;
        let mut alpha = solve_fixed_point(&sigma, &g0.scale(&frac(-1, 2)))?;
        if corrupt == Some(Corruption::Alpha) {
            alpha.add_scaled(&e0, &perturbation())?;
        }
        let beta = bch(&-&g0, &alpha)?;
        let rotation = Substitution::new(&b, &b).with("e0", f0.clone())?.with("f0", g0.clone())?;
        let gamma = rotation.apply(&beta)?;

        let ambient = crate::cell::triangle_space(max_len)?;
        let gen = |n: &str| Element::generator(&ambient, n);
        let (e, f, g) = (gen("e")?, gen("f")?, gen("g")?);
        let third = frac(-1, 3);
        let flat_edge = |loop_: &[Element], edge: &Element| -> Result<Element> {
            bch(&bch_list(&ambient, loop_)?.scale(&third), edge)
        };
        let e0a = flat_edge(&[e.clone(), f.clone(), g.clone()], &e)?;
        let f0a = flat_edge(&[f.clone(), g.clone(), e.clone()], &f)?;
        let g0a = flat_edge(&[g.clone(), e.clone(), f.clone()], &g)?;
        let flat_ambient = EdgeCycle::new(vec![g0a, e0a.clone(), f0a.clone()])?;
        let embedding = Substitution::new(&b, &ambient).with("e0", e0a)?.with("f0", f0a)?;
        let connectors = vec![alpha, beta, gamma];
        let connectors_ambient = connectors.iter().map(|c| embedding.apply(c)).collect::<Result<Vec<_>>>()?;

        let boundary = triangle_boundary_model(max_len)?;
        let mut point = boundary.flow_point(&connectors_ambient[0], &gen("a")?)?;
        if corrupt == Some(Corruption::Point) {
            point.add_scaled(&gen("b")?, &perturbation())?;
        }
        let a0 = &connectors_ambient[0];
        let mut q = bch_list(&ambient, &[-a0, g, e.clone(), f, a0.clone()])?;
        if corrupt == Some(Corruption::Q) {
            q.add_scaled(&e, &perturbation())?;
        }
        let model = Self::assemble_model(&boundary, "h", &q, &point)?;
        Ok(SymmetricData {
            polygon,
            depth,
            b,
            ambient,
            flat: vec![g0, e0, f0],
            sigma,
            rotation,
            connectors,
            flat_ambient,
            embedding,
            connectors_ambient,
            boundary,
            point,
            q,
            model,
        })
    }

    /// The construction for any polygon, driven by its name tables.
    pub fn generic(polygon: &Polygon, depth: usize, corrupt: Option<Corruption>) -> Result<Self> {
        if depth == 0 {
            return config("depth must be at least 1");
        }
        let k = polygon.k;
        let max_len = depth + 1;
        let b = polygon.b_space(max_len)?;
        let flat = polygon.b_edges(&b)?;
        let sigma = polygon.sigma(&b)?;
        let rotation = polygon.rotation(&b)?;
        let mut alpha = solve_fixed_point(&sigma, &flat[0].scale(&frac(-1, 2)))?;
        if corrupt == Some(Corruption::Alpha) {
            alpha.add_scaled(&flat[1], &perturbation())?;
        }
        let mut connectors = vec![alpha];
        for i in 0..k - 1 {
            let next = bch(&-&flat[i], &connectors[i])?;
            connectors.push(next);
        }

        let ambient = polygon.ambient_space(max_len)?;
        let flat_ambient = polygon.flattened_ambient(&ambient)?;
        let embedding = polygon.embedding(&b, &flat_ambient)?;
        let connectors_ambient = connectors.iter().map(|c| embedding.apply(c)).collect::<Result<Vec<_>>>()?;
        let boundary = polygon.boundary_model(&ambient)?;
        let v0 = Element::generator(&ambient, &polygon.vertices[0])?;
        let mut point = boundary.flow_point(&connectors_ambient[0], &v0)?;
        if corrupt == Some(Corruption::Point) {
            point.add_scaled(&Element::generator(&ambient, &polygon.vertices[1])?, &perturbation())?;
        }
        let a0 = &connectors_ambient[0];
        let mut word = vec![-a0];
        word.extend(polygon.ambient_edges(&ambient)?);
        word.push(a0.clone());
        let mut q = bch_list(&ambient, &word)?;
        if corrupt == Some(Corruption::Q) {
            q.add_scaled(&Element::generator(&ambient, &polygon.edges[0])?, &perturbation())?;
        }
        let model = Self::assemble_model(&boundary, &polygon.cell, &q, &point)?;
        Ok(SymmetricData {
            polygon: polygon.clone(),
            depth,
            b,
            ambient,
            flat,
            sigma,
            rotation,
            connectors,
            flat_ambient,
            embedding,
            connectors_ambient,
            boundary,
            point,
            q,
            model,
        })
    }

    /// Invariant checks shared by every polygon, in dependency order.
    pub fn checks(&self) -> Result<Vec<Check>> {
        let d = self.depth;
        let k = self.k();
        let p = &self.polygon;
        let mut out = Vec::new();

        out.push(Check::residual("flat_cycle", d, &bch_list(&self.b, &self.flat)?));
        out.push(Check::residual("flat_boundary", d, &bch_list(&self.ambient, self.flat_ambient.labels())?));
        let mut flows = Vec::new();
        for i in 0..k {
            let src = Element::generator(&self.ambient, &p.vertices[i])?;
            let tgt = Element::generator(&self.ambient, &p.vertices[(i + 1) % k])?;
            let r = &self.boundary.flow_point(&self.flat_ambient.labels()[i], &src)? - &tgt;
            flows.push((format!("{} flows {}→{}", p.flat[i], p.vertices[i], p.vertices[(i + 1) % k]), r));
        }
        out.push(Check::residuals("flattened_edge_flows", d, flows.iter().map(|(l, r)| (l.clone(), r))));
        let embedded: Vec<(String, Element)> = (0..k)
            .map(|i| Ok((p.flat[i].clone(), &self.embedding.apply(&self.flat[i])? - &self.flat_ambient.labels()[i])))
            .collect::<Result<_>>()?;
        out.push(Check::residuals("embedding", d, embedded.iter().map(|(l, r)| (l.clone(), r))));

        let fp = &self.sigma.apply(self.alpha())? - &bch(&self.shift(), self.alpha())?;
        out.push(Check::residual("fixed_point", d, &fp));

        let mut rot = Vec::new();
        let mut loops = Vec::new();
        for i in 0..k {
            let next = &self.connectors[(i + 1) % k];
            rot.push((format!("rotation of connector {i}"), &self.rotation.apply(&self.connectors[i])? - next));
            let l = bch_list(&self.b, &[self.flat[i].clone(), next.clone(), -&self.connectors[i]])?;
            loops.push((format!("BCH({}, connector {}, -connector {i})", p.flat[i], (i + 1) % k), l));
        }
        out.push(Check::residuals("connector_rotation", d, rot.iter().map(|(l, r)| (l.clone(), r))));
        out.push(Check::residuals("connector_loops", d, loops.iter().map(|(l, r)| (l.clone(), r))));

        let c0 = EdgeCycle::new(self.flat.clone())?;
        let c1 = c0.inscribe_step()?;
        let c2 = c1.inscribe_step()?;
        out.push(Check::residuals(
            "inscribed_flatness",
            d,
            [("first subdivision".to_string(), &c1.loop_at(0)?), ("second subdivision".to_string(), &c2.loop_at(0)?)],
        ));

        let mut point_flows = Vec::new();
        for i in 0..k {
            let v = Element::generator(&self.ambient, &p.vertices[i])?;
            point_flows.push((
                format!("connector {i} from {}", p.vertices[i]),
                &self.boundary.flow_point(&self.connectors_ambient[i], &v)? - &self.point,
            ));
        }
        out.push(Check::residuals("connector_flows", d, point_flows.iter().map(|(l, r)| (l.clone(), r))));
        out.push(Check::residual("maurer_cartan", d, &self.boundary.mc_residual(&self.point)?));

        let group = p.dihedral_group(&self.ambient)?;
        let mut sym = Vec::new();
        let mut anti = Vec::new();
        let mut model_sym = Vec::new();
        let model_doc = self.model.to_doc();
        for (g, sign) in &group {
            sym.push((g.name().to_string(), &g.apply(&self.point)? - &self.point));
            let s = if *sign > 0 { Rational::one() } else { -Rational::one() };
            anti.push((g.name().to_string(), &g.apply(&self.q)? - &self.q.scale(&s)));
            model_sym.push((g.name().to_string(), self.model.transformed(g)?.to_doc() == model_doc));
        }
        out.push(Check::residuals("symmetric_point", d, sym.iter().map(|(l, r)| (l.clone(), r))));

        let edges_sum = p.ambient_edges(&self.ambient)?.iter().fold(Element::zero(&self.ambient), |acc, x| &acc + x);
        out.push(Check::residual("q_depth_zero", d, &(&self.q.depth_component(0) - &edges_sum)));
        let conj = self.connectors_ambient[0].exp_ad(&-Rational::one(), &p.boundary_loop(&self.ambient)?)?;
        out.push(Check::residual("q_conjugate_of_loop", d, &(&self.q - &conj)));
        out.push(Check::residuals("q_antisymmetry", d, anti.iter().map(|(l, r)| (l.clone(), r))));
        out.push(Check::residual(
            "q_localized_kernel",
            d,
            &self.boundary.twisted_differential(&self.point, &self.q)?,
        ));
        let report = self.model.verify_d_squared()?;
        out.push(Check::residuals(
            "d_squared",
            d,
            report.entries.iter().map(|e| (format!("∂²{}", e.generator), &e.residual)),
        ));
        let bad = model_sym.iter().find(|(_, ok)| !ok);
        out.push(Check::new(
            "model_symmetry",
            d,
            bad.is_none(),
            match bad {
                Some((n, _)) => format!("model transformed by {n} differs"),
                None => format!("model invariant under all {} symmetries", model_sym.len()),
            },
        ));
        Ok(out)
    }

    /// Applies the named symmetry to an ambient element.
    pub fn apply_symmetry(&self, name: &str, x: &Element) -> Result<Element> {
        self.polygon.group_element(&self.ambient, name)?.apply(x)
    }

    /// Re-expresses an element of `B` in the ambient algebra.
    pub fn to_ambient(&self, x: &Element) -> Result<Element> {
        self.embedding.apply(x)
    }

    /// Serializable form: the named elements plus the given certificates.
    pub fn to_doc(&self, certificates: Vec<Check>) -> SymmetricDataDoc {
        let p = &self.polygon;
        let mut elements = Vec::new();
        let names = connector_names(p.k);
        for (n, x) in p.flat.iter().zip(&self.flat) {
            elements.push(NamedElement::new(n, x));
        }
        for (n, x) in names.iter().zip(&self.connectors) {
            elements.push(NamedElement::new(n, x));
        }
        for (n, x) in p.flat.iter().zip(self.flat_ambient.labels()) {
            elements.push(NamedElement::new(&format!("{n}_ambient"), x));
        }
        for (n, x) in names.iter().zip(&self.connectors_ambient) {
            elements.push(NamedElement::new(&format!("{n}_ambient"), x));
        }
        elements.push(NamedElement::new("x", &self.point));
        elements.push(NamedElement::new("q", &self.q));
        SymmetricDataDoc {
            shape: if p.k == 3 && p.vertices[0] == "a" { "triangle".into() } else { "kgon".into() },
            k: p.k,
            depth: self.depth,
            truncation: self.depth + 1,
            elements,
            model: self.model.to_doc(),
            certificates,
        }
    }

    /// Consistency with another construction of the same polygon.
    pub fn same_as(&self, other: &SymmetricData) -> Result<bool> {
        if self.polygon != other.polygon || self.depth != other.depth {
            return internal("comparing data of different polygons");
        }
        Ok(self.flat == other.flat
            && self.connectors == other.connectors
            && self.flat_ambient == other.flat_ambient
            && self.connectors_ambient == other.connectors_ambient
            && self.point == other.point
            && self.q == other.q
            && self.model.to_doc() == other.model.to_doc())
    }
}

/// Display names of the connectors: `alpha, beta, gamma` for triangles,
/// `alpha0, alpha1, …` otherwise.
pub fn connector_names(k: usize) -> Vec<String> {
    if k == 3 {
        vec!["alpha".into(), "beta".into(), "gamma".into()]
    } else {
        (0..k).map(|i| format!("alpha{i}")).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedElement {
    pub name: String,
    pub value: ElementDoc,
}

impl NamedElement {
    pub fn new(name: &str, x: &Element) -> Self {
        NamedElement { name: name.into(), value: ElementDoc::from_element(x) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricDataDoc {
    pub shape: String,
    pub k: usize,
    pub depth: usize,
    pub truncation: usize,
    pub elements: Vec<NamedElement>,
    pub model: ModelDoc,
    pub certificates: Vec<Check>,
}
