//! Permutation groups by closure enumeration, conjugacy classes, and
//! Dixon–Schneider character tables.

mod classes;
mod dixon;
mod group;
mod io;
mod modp;

pub use classes::{conjugacy_data, ConjugacyClass, ConjugacyData};
pub use dixon::{dixon_prime, dixon_table};
pub use group::{compose, enumerate_group, enumerate_group_with_cap, inverse, order_of, PermGroup, DEFAULT_CAP};
pub use io::GeneratorFile;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("group closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("generator {index} is not a permutation of 0..{degree}")]
    InvalidGenerator { index: usize, degree: usize },
    #[error("character lift failed: {0}")]
    LiftFailure(String),
    #[error("generator file: {0}")]
    Format(String),
    #[error("io: {0}")]
    Io(String),
}
