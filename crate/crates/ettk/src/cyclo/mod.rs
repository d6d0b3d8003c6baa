//! Exact arithmetic in cyclotomic fields and reduction modulo primes above p.
//!
//! Every character value in this crate is a [`Cyclotomic`]. Values are kept
//! in the power basis of Q(ζ_n) for the smallest possible n, which makes the
//! representation unique.

mod cyclotomic;
mod literal;
pub mod polyfp;
mod residue;

pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic};
pub use literal::parse_rational;
pub use residue::{
    cyclotomic_factors_mod_p, residue_reduce, FiniteFieldElement, ResidueField, ResidueMap,
};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum CycloError {
    #[error("exponent {j} is not coprime to conductor {n}")]
    NonCoprimeExponent { j: i64, n: u32 },
    #[error("value is not an algebraic integer")]
    NotAlgebraicInteger,
    #[error("ideal choice {choice} out of range ({count} prime factors)")]
    IdealChoiceOutOfRange { choice: usize, count: usize },
    #[error("conductor {conductor} does not divide {modulus}")]
    ConductorMismatch { conductor: u32, modulus: u64 },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("bad cyclotomic literal: {0}")]
    Parse(String),
}
