//! Naming and the basic maps of a `k`-gon: the ambient boundary model, the
//! free algebra `B` on the flattened edges, the inscribed-subdivision
//! substitution, the rotation, and the dihedral group.

use crate::action::SignedPermutationAction;
use crate::bch::{bch, bch_list};
use crate::cell::CellModel;
use crate::element::Element;
use crate::error::{config, Result};
use crate::generators::{GeneratorTable, Space};
use crate::rational::frac;
use crate::substitution::Substitution;

use super::cycle::EdgeCycle;

/// Generator names of a polygon.
///
/// Vertex `i` is `vertices[i]`; edge `i` runs from vertex `i` to vertex
/// `i + 1`; `flat[i]` names the flattened version of edge `i`. The algebra
/// `B` is free on `flat[1..]`, with `flat[0] = -BCH(flat[1], …, flat[k-1])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    pub k: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<String>,
    pub flat: Vec<String>,
    pub cell: String,
    ambient_order: Vec<(String, i64)>,
}

impl Polygon {
    /// The triangle with vertices `a, b, c` and edges `e: b→c`, `f: c→a`,
    /// `g: a→b`, based at `a`.
    pub fn triangle() -> Self {
        let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        Polygon {
            k: 3,
            vertices: s(&["a", "b", "c"]),
            edges: s(&["g", "e", "f"]),
            flat: s(&["g0", "e0", "f0"]),
            cell: "h".into(),
            ambient_order: [("a", -1), ("b", -1), ("c", -1), ("e", 0), ("f", 0), ("g", 0), ("h", 1)]
                .iter()
                .map(|&(n, g)| (n.to_string(), g))
                .collect(),
        }
    }

    /// A `k`-gon with vertices `v0…`, edges `t0…` (`t_i: v_i → v_{i+1}`),
    /// flattened edges `s0…` and cell `h`.
    pub fn kgon(k: usize) -> Result<Self> {
        if k < 3 {
            return config(format!("polygons need k >= 3, got {k}"));
        }
        if 2 * k + 1 > 255 {
            return config(format!("k = {k} is too large"));
        }
        let vertices: Vec<String> = (0..k).map(|i| format!("v{i}")).collect();
        let edges: Vec<String> = (0..k).map(|i| format!("t{i}")).collect();
        let flat = (0..k).map(|i| format!("s{i}")).collect();
        let ambient_order = vertices
            .iter()
            .map(|v| (v.clone(), -1))
            .chain(edges.iter().map(|e| (e.clone(), 0)))
            .chain([("h".to_string(), 1)])
            .collect();
        Ok(Polygon { k, vertices, edges, flat, cell: "h".into(), ambient_order })
    }

    pub fn ambient_space(&self, max_len: usize) -> Result<Space> {
        Space::new(GeneratorTable::new(self.ambient_order.clone())?, max_len)
    }

    /// Vertices and edges of the boundary, without a rule for the cell.
    pub fn boundary_model(&self, space: &Space) -> Result<CellModel> {
        let mut m = CellModel::new(space);
        for v in &self.vertices {
            m = m.vertex(v)?;
        }
        for i in 0..self.k {
            m = m.edge(&self.edges[i], &self.vertices[i], &self.vertices[(i + 1) % self.k])?;
        }
        Ok(m)
    }

    pub fn ambient_edges(&self, space: &Space) -> Result<Vec<Element>> {
        self.edges.iter().map(|e| Element::generator(space, e)).collect()
    }

    /// The loop BCH based at vertex 0.
    pub fn boundary_loop(&self, space: &Space) -> Result<Element> {
        bch_list(space, &self.ambient_edges(space)?)
    }

    pub fn b_space(&self, max_len: usize) -> Result<Space> {
        Space::new(GeneratorTable::new(self.flat[1..].iter().map(|n| (n.clone(), 0)))?, max_len)
    }

    /// The `k` flattened edges as elements of `B`.
    pub fn b_edges(&self, b: &Space) -> Result<Vec<Element>> {
        let free: Vec<Element> = self.flat[1..].iter().map(|n| Element::generator(b, n)).collect::<Result<_>>()?;
        let mut out = vec![-&bch_list(b, &free)?];
        out.extend(free);
        Ok(out)
    }

    /// Inscribed-subdivision substitution `s_i ↦ BCH(s_i/2, s_{i+1}/2)`.
    pub fn sigma(&self, b: &Space) -> Result<Substitution> {
        let edges = self.b_edges(b)?;
        let half = frac(1, 2);
        let mut s = Substitution::new(b, b);
        for i in 1..self.k {
            let img = bch(&edges[i].scale(&half), &edges[(i + 1) % self.k].scale(&half))?;
            s.set(&self.flat[i], img)?;
        }
        Ok(s)
    }

    /// Rotation `s_i ↦ s_{i+1}` of `B`.
    pub fn rotation(&self, b: &Space) -> Result<Substitution> {
        let edges = self.b_edges(b)?;
        let mut s = Substitution::new(b, b);
        for i in 1..self.k {
            s.set(&self.flat[i], edges[(i + 1) % self.k].clone())?;
        }
        Ok(s)
    }

    /// Flattened ambient edges, from the boundary edges.
    pub fn flattened_ambient(&self, ambient: &Space) -> Result<EdgeCycle> {
        EdgeCycle::new(self.ambient_edges(ambient)?)?.flatten()
    }

    /// `B → ambient`, sending each free generator to its flattened edge.
    pub fn embedding(&self, b: &Space, flattened: &EdgeCycle) -> Result<Substitution> {
        let mut s = Substitution::new(b, flattened.space());
        for i in 1..self.k {
            s.set(&self.flat[i], flattened.labels()[i].clone())?;
        }
        Ok(s)
    }

    /// The rotation `v_i → v_{i+1}`, `t_i → t_{i+1}` of the ambient algebra.
    pub fn ambient_rotation(&self, space: &Space) -> Result<SignedPermutationAction> {
        let k = self.k;
        let mut moves = Vec::new();
        for i in 0..k {
            moves.push((self.vertices[i].as_str(), self.vertices[(i + 1) % k].as_str(), 1));
            moves.push((self.edges[i].as_str(), self.edges[(i + 1) % k].as_str(), 1));
        }
        SignedPermutationAction::new("rotation", space, &moves)
    }

    /// The reflection fixing vertex 0: `v_i ↔ v_{-i}`, `t_i ↦ -t_{-i-1}`,
    /// `h ↦ -h`.
    pub fn ambient_reflection(&self, space: &Space) -> Result<SignedPermutationAction> {
        let k = self.k;
        let mut moves = Vec::new();
        for i in 0..k {
            moves.push((self.vertices[i].as_str(), self.vertices[(k - i) % k].as_str(), 1));
            moves.push((self.edges[i].as_str(), self.edges[(2 * k - i - 1) % k].as_str(), -1));
        }
        moves.push((self.cell.as_str(), self.cell.as_str(), -1));
        SignedPermutationAction::new(&format!("reflection_{}", self.vertices[0]), space, &moves)
    }

    /// All `2k` symmetries, each paired with its orientation sign.
    ///
    /// Order: identity, rotations by `1..k-1` steps, then the reflections.
    pub fn dihedral_group(&self, space: &Space) -> Result<Vec<(SignedPermutationAction, i8)>> {
        let r = self.ambient_rotation(space)?;
        let s = self.ambient_reflection(space)?;
        let mut rotations = vec![SignedPermutationAction::identity(space)];
        for j in 1..self.k {
            let next = r.compose(&rotations[j - 1])?.renamed(&if j == 1 {
                "rotation".to_string()
            } else {
                format!("rotation^{j}")
            });
            rotations.push(next);
        }
        let mut out: Vec<(SignedPermutationAction, i8)> = rotations.iter().map(|g| (g.clone(), 1)).collect();
        for g in &rotations {
            let refl = s.compose(g)?;
            let name = self.reflection_name(&refl);
            out.push((refl.renamed(&name), -1));
        }
        Ok(out)
    }

    fn reflection_name(&self, refl: &SignedPermutationAction) -> String {
        let table = refl.space().table();
        let fixed: Vec<&str> = self
            .vertices
            .iter()
            .filter(|v| {
                let l = table.index_of(v).expect("vertex in table");
                refl.image_of(l).0 == l
            })
            .map(|v| v.as_str())
            .collect();
        if fixed.is_empty() {
            // k even: an edge-midpoint reflection
            let l = table.index_of(&self.vertices[0]).expect("vertex in table");
            let to = table.name(refl.image_of(l).0);
            format!("reflection_{}{}", self.vertices[0], to)
        } else {
            format!("reflection_{}", fixed.join(""))
        }
    }

    /// Looks a group element up by name.
    pub fn group_element(&self, space: &Space, name: &str) -> Result<SignedPermutationAction> {
        for (g, _) in self.dihedral_group(space)? {
            if g.name() == name {
                return Ok(g);
            }
        }
        config(format!("unknown group element {name:?}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_group_tables() {
        let p = Polygon::triangle();
        let s = p.ambient_space(3).unwrap();
        let group = p.dihedral_group(&s).unwrap();
        let names: Vec<&str> = group.iter().map(|(g, _)| g.name()).collect();
        assert_eq!(
            names,
            ["identity", "rotation", "rotation^2", "reflection_a", "reflection_b", "reflection_c"]
        );
        let refl = p.group_element(&s, "reflection_a").unwrap();
        let t = s.table();
        let img = |n: &str| {
            let (l, neg) = refl.image_of(t.require(n).unwrap());
            (t.name(l).to_string(), neg)
        };
        assert_eq!(img("a"), ("a".into(), false));
        assert_eq!(img("b"), ("c".into(), false));
        assert_eq!(img("e"), ("e".into(), true));
        assert_eq!(img("f"), ("g".into(), true));
        assert_eq!(img("g"), ("f".into(), true));
        assert_eq!(img("h"), ("h".into(), true));
        let rot = p.group_element(&s, "rotation").unwrap();
        assert_eq!(rot.order(), 3);
        assert_eq!(refl.order(), 2);
        // every product lands in the group
        for (x, sx) in &group {
            for (y, sy) in &group {
                let xy = x.compose(y).unwrap();
                let hit = group.iter().find(|(z, _)| z.same_map(&xy)).expect("closed under products");
                assert_eq!(hit.1, sx * sy);
            }
        }
        assert!(matches!(p.group_element(&s, "glide"), Err(crate::Error::Config(_))));
    }

    #[test]
    fn square_group_is_dihedral() {
        let p = Polygon::kgon(4).unwrap();
        let s = p.ambient_space(3).unwrap();
        let group = p.dihedral_group(&s).unwrap();
        assert_eq!(group.len(), 8);
        for (i, (x, _)) in group.iter().enumerate() {
            for (y, _) in &group[i + 1..] {
                assert!(!x.same_map(y));
            }
        }
        assert!(Polygon::kgon(2).is_err());
    }

    #[test]
    fn triangle_sigma_linear_part() {
        let p = Polygon::triangle();
        let b = p.b_space(3).unwrap();
        let lin = p.sigma(&b).unwrap().linear_part();
        let e0 = Element::generator(&b, "e0").unwrap();
        let f0 = Element::generator(&b, "f0").unwrap();
        assert_eq!(lin.image("e0").unwrap(), &(&e0 + &f0).scale(&frac(1, 2)));
        assert_eq!(lin.image("f0").unwrap(), &e0.scale(&frac(-1, 2)));
    }
}
