//! Generator tables and truncated spaces.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{config, Result};

/// A named free generator with an integer grading.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub grading: i64,
}

/// Ordered generator list. Declaration order is the letter order used for
/// canonical words and Lyndon bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorTable {
    generators: Vec<Generator>,
}

impl GeneratorTable {
    pub fn new<S: Into<String>>(gens: impl IntoIterator<Item = (S, i64)>) -> Result<Self> {
        let generators: Vec<Generator> = gens
            .into_iter()
            .map(|(name, grading)| Generator { name: name.into(), grading })
            .collect();
        if generators.len() > u8::MAX as usize {
            return config("at most 255 generators are supported");
        }
        for (i, g) in generators.iter().enumerate() {
            if g.name.is_empty() {
                return config("generator names must be non-empty");
            }
            if generators[..i].iter().any(|h| h.name == g.name) {
                return config(format!("duplicate generator name {:?}", g.name));
            }
        }
        Ok(Self { generators })
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn index_of(&self, name: &str) -> Option<u8> {
        self.generators.iter().position(|g| g.name == name).map(|i| i as u8)
    }

    pub fn require(&self, name: &str) -> Result<u8> {
        match self.index_of(name) {
            Some(i) => Ok(i),
            None => config(format!("unknown generator {name:?}")),
        }
    }

    pub fn name(&self, letter: u8) -> &str {
        &self.generators[letter as usize].name
    }

    pub fn grading(&self, letter: u8) -> i64 {
        self.generators[letter as usize].grading
    }
}

/// A free graded associative algebra on a generator table, truncated at a
/// maximal word length. Depth `r` corresponds to word length `r + 1`.
#[derive(Clone, Debug)]
pub struct Space {
    table: Arc<GeneratorTable>,
    max_len: usize,
}

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        self.max_len == other.max_len
            && (Arc::ptr_eq(&self.table, &other.table) || *self.table == *other.table)
    }
}

impl Eq for Space {}

impl Space {
    pub fn new(table: GeneratorTable, max_len: usize) -> Result<Self> {
        Self::with_table(Arc::new(table), max_len)
    }

    pub fn with_table(table: Arc<GeneratorTable>, max_len: usize) -> Result<Self> {
        if max_len == 0 {
            return config("truncation (maximal word length) must be positive");
        }
        Ok(Self { table, max_len })
    }

    /// Space exact through Lie depth `depth` (words up to length `depth + 1`).
    pub fn through_depth(table: GeneratorTable, depth: usize) -> Result<Self> {
        Self::new(table, depth + 1)
    }

    pub fn table(&self) -> &GeneratorTable {
        &self.table
    }

    pub fn table_arc(&self) -> &Arc<GeneratorTable> {
        &self.table
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn depth(&self) -> usize {
        self.max_len - 1
    }

    /// Same generators, different truncation.
    pub fn retruncated(&self, max_len: usize) -> Result<Self> {
        Self::with_table(self.table.clone(), max_len)
    }

    pub fn check_same(&self, other: &Space) -> Result<()> {
        if self.max_len != other.max_len {
            return config(format!(
                "truncation mismatch: {} vs {}",
                self.max_len, other.max_len
            ));
        }
        if !(Arc::ptr_eq(&self.table, &other.table) || *self.table == *other.table) {
            return config("generator table mismatch");
        }
        Ok(())
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self
            .table
            .generators()
            .iter()
            .map(|g| format!("{}:{}", g.name, g.grading))
            .collect();
        write!(f, "<{}>/len>{}", names.join(","), self.max_len)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_zero_truncation() {
        assert!(GeneratorTable::new([("a", -1), ("a", 0)]).is_err());
        let t = GeneratorTable::new([("a", -1)]).unwrap();
        assert!(Space::new(t, 0).is_err());
    }

    #[test]
    fn structural_equality() {
        let t = || GeneratorTable::new([("e", 0), ("f", 0)]).unwrap();
        let s1 = Space::new(t(), 3).unwrap();
        let s2 = Space::new(t(), 3).unwrap();
        assert_eq!(s1, s2);
        assert!(s1.check_same(&s2.retruncated(4).unwrap()).is_err());
    }
}
