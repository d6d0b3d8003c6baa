//! Endotriviality criteria on characters, Green correspondent candidates and
//! the cyclic Sylow rules for T(G).

mod candidates;
mod criteria;
mod cyclic;

pub use candidates::{green_candidates, BlockScope, Candidate, CandidateOptions, CandidateSet};
pub use criteria::{
    cyclic_permutation_test, dim_congruence, et_value_test, et_verdict, lift_value_test, trivial_source_test, ClassFailure,
    EtVerdict, ValueTest,
};
pub use cyclic::{cyclic_tg, high_rank_tt_rules, CyclicRule, OmegaOrder, TGroupReport, TtFlags};

use crate::blocks::BlockError;
use crate::chartab::ChartabError;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum EtError {
    #[error("{distinct} distinct constituents exceed the cap of {cap}")]
    CapExceeded { distinct: usize, cap: usize },
    #[error("{0} is not a linear character")]
    NotLinear(String),
    #[error("{id} has order {order}, divisible by p")]
    NotPPrimeOrder { id: String, order: u32 },
    #[error("induced character did not decompose: {0}")]
    Decomposition(String),
    #[error(transparent)]
    Chartab(#[from] ChartabError),
    #[error(transparent)]
    Block(#[from] BlockError),
}
