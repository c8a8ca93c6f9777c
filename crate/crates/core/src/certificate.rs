//! Check results and certificates.

use serde::{Deserialize, Serialize};

use crate::element::Element;
use crate::linalg::SpectrumDoc;

/// Outcome of one named invariant check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub depth: usize,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, depth: usize, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), depth, passed, detail: detail.into() }
    }

    /// Passes iff every residual vanishes; the detail names the first
    /// offending residual.
    pub fn residuals<'a>(
        name: &str,
        depth: usize,
        residuals: impl IntoIterator<Item = (String, &'a Element)>,
    ) -> Self {
        let mut count = 0;
        for (label, r) in residuals {
            count += 1;
            if !r.is_zero() {
                return Check::new(name, depth, false, format!("{label}: {}", describe_residual(r)));
            }
        }
        Check::new(name, depth, true, format!("{count} residual(s) vanish through depth {depth}"))
    }

    pub fn residual(name: &str, depth: usize, r: &Element) -> Self {
        Check::residuals(name, depth, [(name.to_string(), r)])
    }
}

/// Short description of a nonzero residual: its lowest depth and leading
/// terms.
pub fn describe_residual(r: &Element) -> String {
    let Some(d) = r.vanishes_through_depth() else {
        return "zero".into();
    };
    let low = r.depth_component((d + 1).max(0) as usize);
    let table = r.table();
    let shown: Vec<String> = low
        .terms()
        .iter()
        .take(3)
        .map(|(w, c)| format!("{} {}", crate::rational::display_rational(c), w.render(table)))
        .collect();
    format!(
        "nonzero residual at depth {} ({} term(s) there; {}{})",
        d + 1,
        low.num_terms(),
        shown.join(", "),
        if low.num_terms() > 3 { ", …" } else { "" }
    )
}

/// A full verification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub shape: String,
    pub k: usize,
    pub depth: usize,
    pub seed: u64,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumDoc>,
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}
