//! Finite models of skew monoidal categories, skew bicategories, skew
//! warpings, no-iteration (mw) monads, profunctor hom-categories and right
//! normalization, with exhaustive checkers for every coherence law.

pub mod error;
pub mod fincore;
pub mod fixtures;
pub mod format;
pub mod mw;
pub mod normalize;
pub mod profhom;
pub mod report;
pub mod search;
pub mod skew;
pub mod warpings;

pub use error::StructureError;
pub use report::{Entry, Report, Status};
