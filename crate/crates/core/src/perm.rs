use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use itertools::Itertools;

use crate::{Error, Result, Sign};

/// An element of the symmetric group `S_n`.
///
/// Stored 0-based: `images[i] = sigma(i)`. Text forms (one-line `[a1,...,an]`
/// and cycle notation) are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// From 0-based images.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (pos, &v) in images.iter().enumerate() {
            if v >= n {
                return Err(Error::Domain(format!(
                    "image {} at position {} is out of range 1..={n}",
                    v + 1,
                    pos + 1
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::Domain(format!("image {} appears twice", v + 1)));
            }
        }
        Ok(Permutation { images })
    }

    /// From 1-based one-line notation: `one_line[i-1] = sigma(i)`.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        if let Some(pos) = one_line.iter().position(|&v| v == 0) {
            return Err(Error::Domain(format!(
                "image 0 at position {} is out of range 1..={}",
                pos + 1,
                one_line.len()
            )));
        }
        Self::new(one_line.iter().map(|&v| v - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The adjacent transposition `s_i = (i, i+1)`, 1-based `i` in `1..n`.
    pub fn adjacent(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::Domain(format!(
                "adjacent transposition s{i} is not defined for n = {n}"
            )));
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, i);
        Ok(Permutation { images })
    }

    /// All of `S_n` in lexicographic order of one-line form, so the k-th
    /// element has [`rank`](Self::rank) `k`.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..n)
            .permutations(n)
            .map(|images| Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 0-based `sigma(i)`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// 1-based one-line form.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`: `other` is applied first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        Error::check_len(self.len(), other.len())?;
        Ok(Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// Inversion pairs `(i, j)`, 0-based, with `i < j` and `sigma(i) > sigma(j)`.
    pub fn inversions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.len();
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.images[i] > self.images[j])
    }

    pub fn inversion_count(&self) -> usize {
        self.inversions().count()
    }

    pub fn signature(&self) -> Sign {
        Sign::from_exponent((self.inversion_count() & 1) as u8)
    }

    /// Lexicographic rank of the one-line form within `S_n` (Lehmer code).
    pub fn rank(&self) -> usize {
        let n = self.len();
        let mut rank = 0;
        for i in 0..n {
            let smaller_later = self.images[i + 1..]
                .iter()
                .filter(|&&v| v < self.images[i])
                .count();
            rank = rank * (n - i) + smaller_later;
        }
        rank
    }

    /// Inverse of [`rank`](Self::rank).
    pub fn unrank(n: usize, mut rank: usize) -> Result<Permutation> {
        let total = factorial(n);
        if rank >= total {
            return Err(Error::Domain(format!("rank {rank} out of range for S_{n}")));
        }
        let mut digits = vec![0; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = rank % base;
            rank /= base;
        }
        let mut pool: Vec<usize> = (0..n).collect();
        let images = digits.into_iter().map(|d| pool.remove(d)).collect();
        Ok(Permutation { images })
    }

    /// Nontrivial cycles, 1-based, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut visited = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if visited[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Disjoint cycle notation, e.g. `(1 2)(3 5 4)`; the identity is `()`.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_owned();
        }
        cycles
            .iter()
            .map(|c| format!("({})", c.iter().join(" ")))
            .collect()
    }
}

pub(crate) fn factorial(n: usize) -> usize {
    (1..=n).product()
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on a length mismatch; use [`Permutation::compose`] otherwise.
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs).expect("composing permutations of different degree")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.one_line().iter().join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// One-line form; the length is inferred.
    fn from_str(s: &str) -> Result<Self> {
        crate::parse::parse_one_line(s, None)
    }
}
