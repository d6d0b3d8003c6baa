//! Character-level tools for endotrivial modules over finite groups.
//!
//! The guide in `book/` walks through the modules with runnable examples.

pub mod abelian;
pub mod arith;
pub mod chartab;
pub mod cyclo;
pub mod blocks;
pub mod etcheck;
pub mod perm;
pub mod rank;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/cyclotomics.md")]
    mod cyclotomics {}
    #[doc = include_str!("../../../book/src/character-tables.md")]
    mod character_tables {}
    #[doc = include_str!("../../../book/src/blocks.md")]
    mod blocks {}
    #[doc = include_str!("../../../book/src/candidates.md")]
    mod candidates {}
    #[doc = include_str!("../../../book/src/cyclic-sylow.md")]
    mod cyclic_sylow {}
    #[doc = include_str!("../../../book/src/projective-line.md")]
    mod projective_line {}
    #[doc = include_str!("../../../book/src/dixon.md")]
    mod dixon {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/fixtures.md")]
    mod fixtures {}
}
