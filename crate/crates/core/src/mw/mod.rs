//! Monads in ordinary and no-iteration form, their algebras and the
//! translations between them.

mod algebra;
mod monad;
mod mwmonad;

pub use algebra::{
    algebra_counts, check_em_algebra, em_to_mw_algebra, enumerate_em_algebras,
    enumerate_mw_algebras, mw_algebra_to_em, MwAlgebra, EM_TAGS, MW_ALGEBRA_TAGS,
};
pub use monad::{enumerate_monads, Monad, DEFAULT_MORPHISM_BOUND, MONAD_TAGS};
pub use mwmonad::{enumerate_mw, kleisli_mw, monad_to_mw, mw_to_monad, MwMonad, MW_TAGS};
