//! The Koszul sign map.
//!
//! Symbols carry integer degrees; permuting a sequence of symbols picks up the
//! sign `(-1)^{|a||b|}` every time two symbols of degrees `a` and `b` cross.
//! This crate computes that sign as a map `kappa : S_n x E_f -> {+1, -1}`,
//! where `E_f` is the set of reorderings of a base sequence `f`, and exposes
//!
//! * the left action of permutations on graded sequences ([`act`]),
//! * the sign map itself, evaluated through a bubble-sort word in adjacent
//!   transpositions ([`kappa`]) and through an inversion-sum closed form
//!   ([`kappa_exponent`]),
//! * words in the free group on the adjacent transpositions ([`words`]),
//! * the criteria for `kappa(-, f)` to be a group morphism,
//! * the 2-cochain `c_f(sigma, rho) = kappa(sigma, rho(f))` and its coboundaries
//!   ([`cohomology`]),
//! * an exhaustive verification suite ([`verify`]).
//!
//! Conventions: permutations act on the left, `sigma(g)_i = g_{sigma^-1(i)}`,
//! and `(sigma tau)(g) = sigma(tau(g))`, so `tau` is applied first. Indices
//! are 1-based in every piece of user-facing text and 0-based inside
//! [`Permutation`]'s storage.

pub mod cohomology;
mod error;
mod graded;
mod kappa;
pub mod parse;
mod perm;
mod sign;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use graded::{Degree, GradedSequence, Symbol};
pub use kappa::{
    act, decompose_adjacent, is_constant_one, is_morphism, kappa, kappa_exponent, kappa_terms,
    morphism_bruteforce, odd_count, DEFAULT_EXHAUSTIVE_BOUND,
};
pub use perm::Permutation;
pub use sign::Sign;
pub use words::{Generator, Word};
