//! JSON element format.
//!
//! ```json
//! {"generators": [{"name": "e", "grading": 0}], "truncation": 3,
//!  "terms": [{"word": ["e"], "coeff": "1/2"}]}
//! ```
//! Terms are emitted in canonical word order (length, then letter order) and
//! coefficients always as `p/q`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::element::{Element, Word};
use crate::error::{config, Error, Result};
use crate::generators::{Generator, GeneratorTable, Space};
use crate::rational::{format_rational, parse_rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub word: Vec<String>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementDoc {
    pub generators: Vec<Generator>,
    pub truncation: usize,
    pub terms: Vec<TermDoc>,
}

impl ElementDoc {
    pub fn from_element(x: &Element) -> Self {
        let t = x.table();
        ElementDoc {
            generators: t.generators().to_vec(),
            truncation: x.space().max_len(),
            terms: x
                .terms()
                .iter()
                .map(|(w, c)| TermDoc {
                    word: w.letters().iter().map(|&l| t.name(l).to_string()).collect(),
                    coeff: format_rational(c),
                })
                .collect(),
        }
    }

    /// Rebuilds the element in a fresh space described by the document.
    pub fn to_element(&self) -> Result<Element> {
        let table = GeneratorTable::new(self.generators.iter().map(|g| (g.name.clone(), g.grading)))?;
        let space = Space::with_table(Arc::new(table), self.truncation)?;
        self.to_element_in(&space)
    }

    /// Rebuilds the element inside an existing space, which must match.
    pub fn to_element_in(&self, space: &Space) -> Result<Element> {
        if space.table().generators() != self.generators.as_slice() || space.max_len() != self.truncation {
            return config("document does not match the target space");
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.word.len() > self.truncation {
                return Err(Error::Parse(format!("word {:?} exceeds the truncation", t.word)));
            }
            let letters = t
                .word
                .iter()
                .map(|n| space.table().require(n))
                .collect::<Result<Vec<u8>>>()?;
            terms.push((Word(letters), parse_rational(&t.coeff)?));
        }
        Element::from_terms(space, terms)
    }
}

pub fn element_to_json(x: &Element) -> String {
    serde_json::to_string(&ElementDoc::from_element(x)).expect("element documents always serialize")
}

pub fn element_from_json(s: &str) -> Result<Element> {
    let doc: ElementDoc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    doc.to_element()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use proptest::prelude::*;

    fn space() -> Space {
        Space::new(GeneratorTable::new([("a", -1), ("e", 0), ("f", 0)]).unwrap(), 4).unwrap()
    }

    #[test]
    fn exact_text_form() {
        let s = space();
        let e = Element::generator(&s, "e").unwrap();
        let a = Element::generator(&s, "a").unwrap();
        let x = &e.scale(&frac(-1, 3)) + &a.bracket(&e).unwrap();
        let json = element_to_json(&x);
        assert_eq!(
            json,
            r#"{"generators":[{"name":"a","grading":-1},{"name":"e","grading":0},{"name":"f","grading":0}],"truncation":4,"terms":[{"word":["e"],"coeff":"-1/3"},{"word":["a","e"],"coeff":"1/1"},{"word":["e","a"],"coeff":"-1/1"}]}"#
        );
        assert_eq!(element_from_json(&json).unwrap(), x);
    }

    #[test]
    fn rejects_unknown_names_and_long_words() {
        let bad = r#"{"generators":[{"name":"e","grading":0}],"truncation":1,"terms":[{"word":["e","e"],"coeff":"1/1"}]}"#;
        assert!(element_from_json(bad).is_err());
        let bad = r#"{"generators":[{"name":"e","grading":0}],"truncation":2,"terms":[{"word":["x"],"coeff":"1/1"}]}"#;
        assert!(element_from_json(bad).is_err());
    }

    proptest! {
        #[test]
        fn json_round_trip(terms in proptest::collection::vec(
            (proptest::collection::vec(0u8..3, 0..=4), -50i64..50, 1i64..30), 0..12)) {
            let s = space();
            let x = Element::from_terms(&s, terms.into_iter().map(|(w, p, q)| (Word(w), frac(p, q)))).unwrap();
            let back = element_from_json(&element_to_json(&x)).unwrap();
            prop_assert_eq!(back, x);
        }
    }
}
