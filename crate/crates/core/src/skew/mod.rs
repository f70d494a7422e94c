//! Skew monoidal categories and skew bicategories: the generic
//! [`SkewMonoidal`] interface with its checkers, explicit finite tables,
//! monoids and monoidal functors.

mod bicat;
mod functor;
mod moncat;
mod monoid;
mod monoidal;

pub use bicat::{OneCell, SkewBicat, Triple, TwoCell};
pub use functor::{
    check_monoidal_functor, is_normal, transport_monoid, IdentityMonoidal, MonoidalFunctor,
    FUNCTOR_TAGS,
};
pub use moncat::{SkewMonCat, TableMonoidalFunctor};
pub use monoid::{check_monoid, enumerate_monoids, is_monoid, monoid_laws, Monoid, MONOID_TAGS};
pub use monoidal::{
    check_skew_monoidal, is_monoidal_on, is_right_normal_on, right_normal_witness,
    structural_errors, SkewMonoidal, AXIOM_NAMES, AXIOM_TAGS,
};
