//! Right `I`-modules, the wedge tensor and the normalization of a skew
//! monoidal category.

mod coeq;
mod diagrams;
mod factor;
mod lazy;
mod materialize;
mod modules;
mod theorem2;

pub use coeq::Coequalizers;
pub use diagrams::{diagram_report, normalization_report, DIAGRAM_TAGS};
pub use factor::{all_factorizations, factor_through_normalization, lifted_module, Factorization};
pub use lazy::{module_label, Forgetful, ModMor, Normalization};
pub use materialize::{normalize, NormalizationResult, DEFAULT_MODULE_BOUND};
pub use theorem2::{theorem2_instance, THEOREM2_TAGS};
pub use modules::{
    enumerate_imodules, is_module, is_module_morphism, module_laws, module_morphisms, rho_prime, tensor_module,
    unit_module, unit_monad, unit_monad_laws, unit_monad_mult, wedge, wedge_pair, IModule, Wedge,
};
