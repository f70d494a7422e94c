//! Finite profunctors, their coend composition, the skew monoidal
//! hom-category `K(A, B)` over a discrete `A`, and its monoids.

mod homcat;
mod prof;

pub use homcat::{
    discrete_inclusion, hom_skew_moncat, monad_to_endo_monoid, monoid_mw_correspondence,
    monoid_to_mw, mw_to_monoid, u_functor, EndoHom, HomSkewMonCat, UFunctor,
};
pub use prof::{
    adjunction_units, associator, coend, compose_mor, hom_prof, is_functor_valued, left_unitor,
    lower_star, nat_transformations, prof_compose, representation, representing_functor,
    prof_coequalizer, prof_factor, prof_is_coequalizer, right_unitor, triangle_identities,
    upper_star, Adjunction, Coend, FinProf, ProfMor, Summand,
};
