//! Finite categories, functors, natural transformations, finite sets and the
//! colimits the rest of the crate needs (coequalizers, computed either as
//! quotients of finite sets or by exhaustive universal-cofork search).

mod category;
mod colimit;
mod finset;
mod functor;

pub use category::{CategoryReport, FinCat, LawViolation, MorId, MorphismData, ObjId};
pub use colimit::{
    check_coequalizer, check_preservation, check_preservation_by_right_tensor, coequalizer_search, coforks, factor_through,
    is_coequalizer, Cofork, CoforkFailure,
};
pub use finset::{coequalizer_finset, quotient_by_pairs, FinSetMap, FinSetObj};
pub use functor::{
    enumerate_functors, enumerate_nat_trans, opposite_category, product_category, FinFunctor,
    NatTrans,
};
