//! The sign map as a 2-cochain on `S_n` with values in `{+1, -1}`.
//!
//! `c_f(sigma, rho) = kappa(sigma, rho(f))`. A structure of `S_n`-module on
//! `{+1, -1}` is a morphism `u : S_n -> {+1, -1}`, either trivial or the
//! signature. With respect to `u` the coboundaries are
//!
//! ```text
//! d(v)(sigma, tau)      = u(sigma) v(tau) v(sigma tau)^-1 v(sigma)
//! d(c)(sigma, tau, rho) = u(sigma) c(tau, rho) c(sigma tau, rho)^-1 c(sigma, tau rho) c(sigma, tau)^-1
//! ```
//!
//! and `c_f` is a cocycle exactly when `kappa(-, f)` is a morphism and `u` is
//! the structure read off the degrees ([`ModuleStructure::from_degrees`]); in
//! that case `c_f = d(u)`.
//!
//! Tables are dense and indexed by the lexicographic rank of permutations
//! ([`Permutation::rank`]).

use std::borrow::Cow;

use serde::Serialize;

use crate::perm::factorial;
use crate::{act, kappa, Degree, Error, GradedSequence, Permutation, Result, Sign};

/// Default cap on `n` for exhaustive sweeps over triples (`120^3` at `n = 5`).
pub const DEFAULT_TRIPLE_BOUND: usize = 5;

/// `S_n` with its multiplication table, for `n` up to a bound.
#[derive(Debug, Clone)]
pub struct SymmetricGroup {
    n: usize,
    elements: Vec<Permutation>,
    product: Vec<u32>,
    inverse: Vec<u32>,
}

impl SymmetricGroup {
    pub fn new(n: usize, bound: usize) -> Result<Self> {
        Error::check_bound(n, bound)?;
        let elements: Vec<Permutation> = Permutation::all(n).collect();
        let size = elements.len();
        let mut product = Vec::with_capacity(size * size);
        for a in &elements {
            for b in &elements {
                product.push((a * b).rank() as u32);
            }
        }
        let inverse = elements.iter().map(|p| p.inverse().rank() as u32).collect();
        Ok(SymmetricGroup {
            n,
            elements,
            product,
            inverse,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in rank order.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, rank: usize) -> &Permutation {
        &self.elements[rank]
    }

    /// Rank of `elements[a] ∘ elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.product[a * self.order() + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }
}

/// A structure of `S_n`-module on `{+1, -1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleStructure {
    /// `u = 1`.
    Trivial,
    /// `u = sgn`.
    Signature,
}

impl ModuleStructure {
    /// Common value `u(s_i)` on the adjacent transpositions.
    pub fn generator_value(self) -> Sign {
        match self {
            ModuleStructure::Trivial => Sign::Plus,
            ModuleStructure::Signature => Sign::Minus,
        }
    }

    pub fn eval(self, sigma: &Permutation) -> Sign {
        match self {
            ModuleStructure::Trivial => Sign::Plus,
            ModuleStructure::Signature => sigma.signature(),
        }
    }

    /// The morphism with `u(s_i) = value` for every `i`.
    pub fn from_generator_value(value: Sign) -> Self {
        match value {
            Sign::Plus => ModuleStructure::Trivial,
            Sign::Minus => ModuleStructure::Signature,
        }
    }

    /// `u(s_i) = (-1)^{|f_i||f_{i+1}|}` when these all agree, else `None`.
    pub fn from_degrees(degrees: &[Degree]) -> Option<Self> {
        let mut values = degrees
            .windows(2)
            .map(|w| Sign::from_exponent(w[0].parity() & w[1].parity()));
        let first = values.next()?;
        values
            .all(|v| v == first)
            .then(|| ModuleStructure::from_generator_value(first))
    }

    pub fn name(self) -> &'static str {
        match self {
            ModuleStructure::Trivial => "trivial",
            ModuleStructure::Signature => "signature",
        }
    }
}

/// A map `S_n -> {+1, -1}`, stored by rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneCochain {
    n: usize,
    values: Vec<Sign>,
}

impl OneCochain {
    pub fn from_fn(n: usize, bound: usize, mut f: impl FnMut(&Permutation) -> Sign) -> Result<Self> {
        Error::check_bound(n, bound)?;
        Ok(OneCochain {
            n,
            values: Permutation::all(n).map(|s| f(&s)).collect(),
        })
    }

    /// `u` viewed as a 1-cochain.
    pub fn from_module(u: ModuleStructure, n: usize, bound: usize) -> Result<Self> {
        Self::from_fn(n, bound, |s| u.eval(s))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, sigma: &Permutation) -> Result<Sign> {
        Error::check_len(self.n, sigma.len())?;
        Ok(self.values[sigma.rank()])
    }

    pub fn get_by_rank(&self, rank: usize) -> Sign {
        self.values[rank]
    }

    pub fn values(&self) -> &[Sign] {
        &self.values
    }
}

/// A map `S_n x S_n -> {+1, -1}`, stored densely by `(rank sigma, rank rho)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCochain {
    n: usize,
    order: usize,
    values: Vec<Sign>,
}

impl TwoCochain {
    pub fn from_fn(
        n: usize,
        bound: usize,
        mut f: impl FnMut(&Permutation, &Permutation) -> Sign,
    ) -> Result<Self> {
        Error::check_bound(n, bound)?;
        let elements: Vec<Permutation> = Permutation::all(n).collect();
        let mut values = Vec::with_capacity(elements.len() * elements.len());
        for sigma in &elements {
            for rho in &elements {
                values.push(f(sigma, rho));
            }
        }
        Ok(TwoCochain {
            n,
            order: elements.len(),
            values,
        })
    }

    pub fn constant(n: usize, bound: usize, value: Sign) -> Result<Self> {
        Self::from_fn(n, bound, |_, _| value)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, sigma: &Permutation, rho: &Permutation) -> Result<Sign> {
        Error::check_len(self.n, sigma.len())?;
        Error::check_len(self.n, rho.len())?;
        Ok(self.get_by_rank(sigma.rank(), rho.rank()))
    }

    pub fn get_by_rank(&self, sigma: usize, rho: usize) -> Sign {
        self.values[sigma * self.order + rho]
    }

    /// `sigma ↦ c(sigma, rho)`; for `c_f` and `rho = e` this is `kappa(-, f)`.
    pub fn column(&self, rho: &Permutation) -> Result<OneCochain> {
        Error::check_len(self.n, rho.len())?;
        let r = rho.rank();
        Ok(OneCochain {
            n: self.n,
            values: (0..self.order).map(|s| self.get_by_rank(s, r)).collect(),
        })
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.get_by_rank(a, b) == self.get_by_rank(b, a)))
    }

    /// `(rank sigma, rank rho, value)` in row-major rank order.
    pub fn records(&self) -> impl Iterator<Item = (usize, usize, Sign)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(move |(k, &s)| (k / self.order, k % self.order, s))
    }
}

/// `c_f(sigma, rho) = kappa(sigma, rho(f))` as a dense table.
pub fn build_cf(f: &GradedSequence, bound: usize) -> Result<TwoCochain> {
    let n = f.len();
    Error::check_bound(n, bound)?;
    let elements: Vec<Permutation> = Permutation::all(n).collect();
    let order = elements.len();
    let mut values = vec![Sign::Plus; order * order];
    for (r, rho) in elements.iter().enumerate() {
        let g = act(rho, f)?;
        for (s, sigma) in elements.iter().enumerate() {
            values[s * order + r] = kappa(sigma, &g)?;
        }
    }
    Ok(TwoCochain { n, order, values })
}

/// The 3-cochain `d(c)` for the module structure `u`, evaluated on demand.
#[derive(Debug, Clone)]
pub struct Coboundary2<'a> {
    cochain: &'a TwoCochain,
    u: ModuleStructure,
    group: Cow<'a, SymmetricGroup>,
}

/// `d(c)` with respect to `u`.
pub fn coboundary2(c: &TwoCochain, u: ModuleStructure) -> Result<Coboundary2<'_>> {
    let group = SymmetricGroup::new(c.n, c.n)?;
    Ok(Coboundary2 {
        cochain: c,
        u,
        group: Cow::Owned(group),
    })
}

/// [`coboundary2`] reusing an already built multiplication table.
pub fn coboundary2_in<'a>(
    c: &'a TwoCochain,
    u: ModuleStructure,
    group: &'a SymmetricGroup,
) -> Result<Coboundary2<'a>> {
    Error::check_len(c.n, group.n())?;
    Ok(Coboundary2 {
        cochain: c,
        u,
        group: Cow::Borrowed(group),
    })
}

impl Coboundary2<'_> {
    pub fn eval(&self, sigma: &Permutation, tau: &Permutation, rho: &Permutation) -> Result<Sign> {
        let n = self.cochain.n;
        for p in [sigma, tau, rho] {
            Error::check_len(n, p.len())?;
        }
        Ok(self.eval_by_rank(sigma.rank(), tau.rank(), rho.rank()))
    }

    pub fn eval_by_rank(&self, sigma: usize, tau: usize, rho: usize) -> Sign {
        let c = self.cochain;
        let g = &*self.group;
        self.u.eval(g.element(sigma))
            * c.get_by_rank(tau, rho)
            * c.get_by_rank(g.mul(sigma, tau), rho).inverse()
            * c.get_by_rank(sigma, g.mul(tau, rho))
            * c.get_by_rank(sigma, tau).inverse()
    }

    /// First triple `(rank sigma, rank tau, rank rho)` where `d(c) != +1`.
    pub fn find_nontrivial(&self, bound: usize) -> Result<Option<(usize, usize, usize)>> {
        Error::check_bound(self.cochain.n, bound)?;
        let order = self.group.order();
        for s in 0..order {
            for t in 0..order {
                for r in 0..order {
                    if !self.eval_by_rank(s, t, r).is_plus() {
                        return Ok(Some((s, t, r)));
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn group(&self) -> &SymmetricGroup {
        &self.group
    }
}

/// `d(v)(sigma, tau) = u(sigma) v(tau) v(sigma tau)^-1 v(sigma)`.
pub fn coboundary1(v: &OneCochain, u: ModuleStructure) -> Result<TwoCochain> {
    let group = SymmetricGroup::new(v.n, v.n)?;
    let order = group.order();
    let mut values = Vec::with_capacity(order * order);
    for s in 0..order {
        for t in 0..order {
            values.push(
                u.eval(group.element(s))
                    * v.get_by_rank(t)
                    * v.get_by_rank(group.mul(s, t)).inverse()
                    * v.get_by_rank(s),
            );
        }
    }
    debug_assert_eq!(order, factorial(v.n));
    Ok(TwoCochain {
        n: v.n,
        order,
        values,
    })
}

/// Whether `c_f` is a 2-cocycle for the module structure `u`, checked over
/// every triple of `S_n`.
pub fn is_cocycle(f: &GradedSequence, u: ModuleStructure, bound: usize) -> Result<bool> {
    Error::check_bound(f.len(), bound)?;
    let cf = build_cf(f, bound)?;
    Ok(coboundary2(&cf, u)?.find_nontrivial(bound)?.is_none())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CocycleCheck {
    /// The generator values `(-1)^{|f_i||f_{i+1}|}` disagree, so no module
    /// structure is singled out by the degrees.
    NoAdmissibleModule,
    Checked { module: ModuleStructure, cocycle: bool },
}

impl CocycleCheck {
    pub fn is_cocycle(self) -> bool {
        matches!(self, CocycleCheck::Checked { cocycle: true, .. })
    }
}

/// [`is_cocycle`] with `u` taken from [`ModuleStructure::from_degrees`].
pub fn is_cocycle_auto(f: &GradedSequence, bound: usize) -> Result<CocycleCheck> {
    Error::check_bound(f.len(), bound)?;
    match ModuleStructure::from_degrees(&f.degrees()) {
        None => Ok(CocycleCheck::NoAdmissibleModule),
        Some(module) => Ok(CocycleCheck::Checked {
            module,
            cocycle: is_cocycle(f, module, bound)?,
        }),
    }
}
