//! Closed edge cycles: flattening and inscribed subdivision.

use crate::bch::{bch, bch_list};
use crate::element::Element;
use crate::error::{config, domain, Result};
use crate::generators::Space;
use crate::rational::{frac, int, Rational};

/// The grading-0 labels of the boundary edges of a polygon, in cyclic order:
/// edge `i` runs from vertex `i` to vertex `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCycle {
    labels: Vec<Element>,
}

impl EdgeCycle {
    pub fn new(labels: Vec<Element>) -> Result<Self> {
        let Some(first) = labels.first() else {
            return config("an edge cycle needs at least one edge");
        };
        for l in &labels {
            first.space().check_same(l.space())?;
            if !l.is_constant_free() || l.gradings().iter().any(|&g| g != 0) {
                return domain("edge labels must be constant-free and of grading 0");
            }
        }
        Ok(EdgeCycle { labels })
    }

    pub fn k(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Element] {
        &self.labels
    }

    pub fn into_labels(self) -> Vec<Element> {
        self.labels
    }

    pub fn space(&self) -> &Space {
        self.labels[0].space()
    }

    /// BCH of the loop that starts with edge `i`.
    pub fn loop_at(&self, i: usize) -> Result<Element> {
        let k = self.k();
        let rotated: Vec<Element> = (0..k).map(|j| self.labels[(i + j) % k].clone()).collect();
        bch_list(self.space(), &rotated)
    }

    /// Whether the loop BCH vanishes through the truncation.
    pub fn is_flat(&self) -> Result<bool> {
        Ok(self.loop_at(0)?.is_zero())
    }

    /// Replaces each label `l_i` by `BCH(-(1/k)·L_i, l_i)`, where `L_i` is the
    /// loop starting at edge `i`. The result is flat and each new label still
    /// flows between the original endpoints.
    pub fn flatten(&self) -> Result<EdgeCycle> {
        let k = self.k();
        if k < 3 {
            return config(format!("flattening needs k >= 3, got {k}"));
        }
        let c = frac(-1, k as i64);
        let labels = (0..k)
            .map(|i| bch(&self.loop_at(i)?.scale(&c), &self.labels[i]))
            .collect::<Result<Vec<_>>>()?;
        Ok(EdgeCycle { labels })
    }

    /// Labels of the polygon joining the edge midpoints.
    ///
    /// For triangles the labels `(e, f, g)` become
    /// `(BCH(f/2, g/2), BCH(g/2, e/2), BCH(e/2, f/2))`; for `k >= 4` label `i`
    /// becomes `BCH(l_i/2, l_{i+1}/2)`.
    pub fn inscribe_step(&self) -> Result<EdgeCycle> {
        let k = self.k();
        if k < 3 {
            return config(format!("subdivision needs k >= 3, got {k}"));
        }
        if !self.is_flat()? {
            return domain("inscribed subdivision of a non-flat cycle: the inner loops would not close");
        }
        let half = frac(1, 2);
        let mid = |i: usize| -> Result<Element> {
            bch(&self.labels[i % k].scale(&half), &self.labels[(i + 1) % k].scale(&half))
        };
        let shift = if k == 3 { 1 } else { 0 };
        let labels = (0..k).map(|i| mid(i + shift)).collect::<Result<Vec<_>>>()?;
        Ok(EdgeCycle { labels })
    }

    /// Labels scaled by a rational.
    pub fn scaled(&self, c: &Rational) -> EdgeCycle {
        EdgeCycle { labels: self.labels.iter().map(|l| l.scale(c)).collect() }
    }

    /// Largest absolute coefficient over all labels.
    pub fn max_abs_coeff(&self) -> Rational {
        self.labels.iter().map(|l| l.max_abs_coeff()).max().unwrap_or_else(|| int(0))
    }
}
