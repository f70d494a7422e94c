//! Skew warpings on skew bicategories, their Kleisli construction and
//! algebras, and the redundancy checks for warpings on bicategories.

mod algebra;
mod generate;
mod warping;

pub use algebra::{
    check_redundancy_algebra, mw_algebra_as_warping_algebra, WarpingAlgebra, ALGEBRA_LAW_NAMES,
};
pub use generate::{
    algebra_shapes, enumerate_algebras, enumerate_warpings, fill_warping, random_algebra,
    random_warping, warping_shapes, Fill,
};
pub use warping::{
    check_redundancy_warping, kleisli_warping, mw_as_warping, remark_trace, underlying_category,
    warping_as_mw, AxiomTrace, SkewWarping, LAW_NAMES,
};
