use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::{Error, Result};

/// The degree of a symbol. Any integer is allowed; only the parity enters
/// a sign.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Degree(pub i64);

impl Degree {
    pub fn value(self) -> i64 {
        self.0
    }

    /// Parity with a mathematical modulus, so `-3` is odd.
    pub fn is_odd(self) -> bool {
        self.0.rem_euclid(2) == 1
    }

    pub fn parity(self) -> u8 {
        self.is_odd() as u8
    }
}

impl From<i64> for Degree {
    fn from(value: i64) -> Self {
        Degree(value)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A labelled symbol with a degree. The label is opaque and never affects
/// a sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Symbol {
    pub label: Arc<str>,
    pub degree: Degree,
}

/// An ordered sequence of `n >= 2` symbols with pairwise distinct labels.
///
/// The base sequence `f` and every reordering `g = rho(f)` are values of this
/// type; the length is fixed at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedSequence {
    entries: Vec<Symbol>,
}

impl GradedSequence {
    /// Builds `f = (f1, ..., fn)` with the given degrees.
    pub fn from_degrees<D: Into<Degree> + Copy>(degrees: &[D]) -> Result<Self> {
        Self::new(
            degrees
                .iter()
                .enumerate()
                .map(|(i, &d)| Symbol {
                    label: format!("f{}", i + 1).into(),
                    degree: d.into(),
                })
                .collect(),
        )
    }

    pub fn with_labels<L: AsRef<str>, D: Into<Degree> + Copy>(
        labels: &[L],
        degrees: &[D],
    ) -> Result<Self> {
        Error::check_len(labels.len(), degrees.len())?;
        Self::new(
            labels
                .iter()
                .zip(degrees)
                .map(|(l, &d)| Symbol {
                    label: l.as_ref().into(),
                    degree: d.into(),
                })
                .collect(),
        )
    }

    pub fn new(entries: Vec<Symbol>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::Domain(format!(
                "a graded sequence needs at least 2 symbols, got {}",
                entries.len()
            )));
        }
        let mut seen = HashSet::with_capacity(entries.len());
        for s in &entries {
            if !seen.insert(&s.label) {
                return Err(Error::Domain(format!("duplicate symbol label {:?}", s.label)));
            }
        }
        Ok(GradedSequence { entries })
    }

    /// Internal constructor for reorderings of an already valid sequence.
    pub(crate) fn from_valid(entries: Vec<Symbol>) -> Self {
        debug_assert!(entries.len() >= 2);
        GradedSequence { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[Symbol] {
        &self.entries
    }

    /// 0-based access.
    pub fn get(&self, i: usize) -> &Symbol {
        &self.entries[i]
    }

    pub fn degrees(&self) -> Vec<Degree> {
        self.entries.iter().map(|s| s.degree).collect()
    }

    pub fn labels(&self) -> Vec<&str> {
        self.entries.iter().map(|s| &*s.label).collect()
    }

    pub fn parities(&self) -> Vec<bool> {
        self.entries.iter().map(|s| s.degree.is_odd()).collect()
    }

    /// Same labels, each degree replaced by `map(position, degree)`.
    pub fn map_degrees(&self, mut map: impl FnMut(usize, Degree) -> Degree) -> Self {
        GradedSequence::from_valid(
            self.entries
                .iter()
                .enumerate()
                .map(|(i, s)| Symbol {
                    label: s.label.clone(),
                    degree: map(i, s.degree),
                })
                .collect(),
        )
    }
}

impl fmt::Display for GradedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, s) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(&s.label)?;
        }
        f.write_str(")")
    }
}
