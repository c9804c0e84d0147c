//! The free group `F_{n-1}` on the adjacent transpositions `s_1, ..., s_{n-1}`.
//!
//! A [`Word`] is any finite product of generators and their inverses. Words
//! act on graded sequences through the quotient map to `S_n`, and carry their
//! own sign map [`Word::kappa`], which multiplies generator signs along the
//! partially applied suffixes of the word. The sign is evaluated on the word as
//! written; free cancellation never changes it, and neither does inserting
//! any relator of the standard presentation of `S_n` (see [`relators`]).

use std::fmt;
use std::ops::Mul;

use rand::Rng;

use crate::{Error, GradedSequence, Permutation, Result, Sign};

/// `s_index` or its inverse. `index` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub index: usize,
    pub inverse: bool,
}

impl Generator {
    pub fn s(index: usize) -> Self {
        Generator {
            index,
            inverse: false,
        }
    }

    pub fn s_inv(index: usize) -> Self {
        Generator {
            index,
            inverse: true,
        }
    }

    pub fn inverted(self) -> Self {
        Generator {
            inverse: !self.inverse,
            ..self
        }
    }

    /// Exponent `+1` or `-1`.
    pub fn exponent(self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn cancels(self, other: Generator) -> bool {
        self.index == other.index && self.inverse != other.inverse
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.index)?;
        if self.inverse {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

/// A word in the generators of `F_{n-1}`, for an ambient `n >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    n: usize,
    letters: Vec<Generator>,
}

impl Word {
    pub fn new(n: usize, letters: Vec<Generator>) -> Result<Self> {
        check_ambient(n)?;
        if let Some(bad) = letters.iter().find(|g| g.index == 0 || g.index >= n) {
            return Err(Error::Domain(format!(
                "generator {bad} is not defined for n = {n}"
            )));
        }
        Ok(Word { n, letters })
    }

    pub(crate) fn from_valid(n: usize, letters: Vec<Generator>) -> Self {
        Word { n, letters }
    }

    /// The empty word `e`.
    pub fn identity(n: usize) -> Result<Self> {
        Word::new(n, Vec::new())
    }

    pub fn generator(n: usize, g: Generator) -> Result<Self> {
        Word::new(n, vec![g])
    }

    /// Parses the whitespace-separated grammar `s2 s1^-1 s3'`; see
    /// [`crate::parse::parse_word`].
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        crate::parse::parse_word(text, n)
    }

    /// Uniform letters, length uniform in `0..=max_len`.
    pub fn random<R: Rng + ?Sized>(n: usize, max_len: usize, rng: &mut R) -> Result<Self> {
        check_ambient(n)?;
        let len = rng.gen_range(0..=max_len);
        let letters = (0..len)
            .map(|_| Generator {
                index: rng.gen_range(1..n),
                inverse: rng.gen(),
            })
            .collect();
        Ok(Word { n, letters })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The product `self * other` in `F_{n-1}`, without cancellation.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        Error::check_len(self.n, other.n)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word { n: self.n, letters })
    }

    pub fn inverse(&self) -> Word {
        Word {
            n: self.n,
            letters: self.letters.iter().rev().map(|g| g.inverted()).collect(),
        }
    }

    /// The freely reduced form. Only `s_i s_i^-1 -> e` is applied; `s_i s_i`
    /// is left alone.
    pub fn reduce(&self) -> Word {
        let mut stack: Vec<Generator> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            match stack.last() {
                Some(&top) if top.cancels(g) => {
                    stack.pop();
                }
                _ => stack.push(g),
            }
        }
        Word {
            n: self.n,
            letters: stack,
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| !w[0].cancels(w[1]))
    }

    /// The image in `S_n`. The leftmost letter is applied last.
    pub fn project(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.n).collect();
        // images accumulates the product of the processed suffix; post-composing
        // with s_i swaps the values i-1 and i.
        for g in self.letters.iter().rev() {
            let (a, b) = (g.index - 1, g.index);
            for v in images.iter_mut() {
                if *v == a {
                    *v = b;
                } else if *v == b {
                    *v = a;
                }
            }
        }
        Permutation::new(images).expect("product of transpositions is a bijection")
    }

    /// `x(g)`: the letters act right to left, `s_i` and `s_i^-1` both swapping
    /// positions `i` and `i+1`.
    pub fn act(&self, g: &GradedSequence) -> Result<GradedSequence> {
        Error::check_len(self.n, g.len())?;
        let mut entries = g.entries().to_vec();
        for l in self.letters.iter().rev() {
            entries.swap(l.index - 1, l.index);
        }
        Ok(GradedSequence::from_valid(entries))
    }

    /// The sign map on the free group: with `x = t_1 ... t_m`,
    /// `kappa(x, g) = kappa(t_1, t_2...t_m(g)) ... kappa(t_m, g)` and
    /// `kappa(s_i^±1, h) = (-1)^{|h_i||h_{i+1}|}`.
    pub fn kappa(&self, g: &GradedSequence) -> Result<Sign> {
        Error::check_len(self.n, g.len())?;
        Ok(self.sign_on_parities(&mut g.parities()))
    }

    /// Evaluates right to left, leaving `state` equal to the parities of `x(g)`.
    pub(crate) fn sign_on_parities(&self, state: &mut [bool]) -> Sign {
        let mut odd = false;
        for l in self.letters.iter().rev() {
            let (a, b) = (l.index - 1, l.index);
            odd ^= state[a] & state[b];
            state.swap(a, b);
        }
        Sign::from_exponent(odd as u8)
    }
}

impl Mul for &Word {
    type Output = Word;

    /// Panics when the ambient `n` differ; use [`Word::concat`] otherwise.
    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs).expect("multiplying words of different ambient n")
    }
}

impl fmt::Display for Word {
    /// Letters separated by spaces; the empty word prints as `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (i, g) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

fn check_ambient(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::Domain(format!("n must be at least 2, got {n}")))
    } else {
        Ok(())
    }
}

/// The defining relators of `S_n` as single words `r` with `r = e` in `S_n`:
/// `s_i s_i`, then `s_i s_j s_i^-1 s_j^-1` for `j > i + 1`, then the braid
/// words `s_i s_{i+1} s_i s_{i+1}^-1 s_i^-1 s_{i+1}^-1`.
pub fn relators(n: usize) -> Result<Vec<Word>> {
    check_ambient(n)?;
    use Generator as G;
    let mut out = Vec::new();
    for i in 1..n {
        out.push(Word::from_valid(n, vec![G::s(i), G::s(i)]));
    }
    for i in 1..n {
        for j in i + 2..n {
            out.push(Word::from_valid(
                n,
                vec![G::s(i), G::s(j), G::s_inv(i), G::s_inv(j)],
            ));
        }
    }
    for i in 1..n.saturating_sub(1) {
        out.push(Word::from_valid(
            n,
            vec![
                G::s(i),
                G::s(i + 1),
                G::s(i),
                G::s_inv(i + 1),
                G::s_inv(i),
                G::s_inv(i + 1),
            ],
        ));
    }
    Ok(out)
}
