//! Character tables and class-function calculus.

mod fusion;
mod io;
mod linear;
mod ops;
mod table;
mod validate;

pub use fusion::FusionMap;
pub use io::FusionJson;
pub use linear::{linear_order, linear_p_prime_group, LinearCharacterGroup};
pub use ops::{
    decompose, induce, inner_product, inner_products, restrict, tensor, Decomposition,
    NotACharacter,
};
pub use table::{CharacterTable, ClassFunction, ClassInfo, Irreducible};
pub use validate::{validate_table, ValidationReport, Violation};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ChartabError {
    #[error("class functions live on different tables ({left} vs {right})")]
    TableMismatch { left: String, right: String },
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("no irreducible {id:?} in table {table}")]
    UnknownCharacter { table: String, id: String },
    #[error("malformed table data: {0}")]
    Format(String),
    #[error("{0}")]
    Io(String),
}
