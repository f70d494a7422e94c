use crate::fincore::{coequalizer_search, factor_through, is_coequalizer, MorId};
use crate::profhom::{prof_coequalizer, prof_factor, prof_is_coequalizer, EndoHom, HomSkewMonCat, ProfMor};
use crate::skew::{SkewMonCat, SkewMonoidal};

/// The colimits normalization needs: coequalizers of parallel pairs and
/// factorization through them.
pub trait Coequalizers: SkewMonoidal {
    /// A coequalizer `q` of `u, v`, if one exists.
    fn coequalizer(&self, u: &Self::Mor, v: &Self::Mor) -> Option<Self::Mor>;
    fn is_coequalizer(&self, u: &Self::Mor, v: &Self::Mor, q: &Self::Mor) -> bool;
    /// The unique `h` with `h∘q = t`, if there is exactly one.
    fn factor(&self, q: &Self::Mor, t: &Self::Mor) -> Option<Self::Mor>;
}

/// Finite tables: exhaustive cofork search in the base category.
impl Coequalizers for SkewMonCat {
    fn coequalizer(&self, u: &MorId, v: &MorId) -> Option<MorId> {
        coequalizer_search(&self.base, *u, *v).map(|c| c.leg)
    }
    fn is_coequalizer(&self, u: &MorId, v: &MorId, q: &MorId) -> bool {
        is_coequalizer(&self.base, *u, *v, *q)
    }
    fn factor(&self, q: &MorId, t: &MorId) -> Option<MorId> {
        factor_through(&self.base, *q, *t)
    }
}

/// Profunctors: colimits are computed cell by cell.
impl Coequalizers for HomSkewMonCat {
    fn coequalizer(&self, u: &ProfMor, v: &ProfMor) -> Option<ProfMor> {
        Some(prof_coequalizer(u, v))
    }
    fn is_coequalizer(&self, u: &ProfMor, v: &ProfMor, q: &ProfMor) -> bool {
        prof_is_coequalizer(u, v, q)
    }
    fn factor(&self, q: &ProfMor, t: &ProfMor) -> Option<ProfMor> {
        prof_factor(q, t)
    }
}

impl Coequalizers for EndoHom {
    fn coequalizer(&self, u: &ProfMor, v: &ProfMor) -> Option<ProfMor> {
        Some(prof_coequalizer(u, v))
    }
    fn is_coequalizer(&self, u: &ProfMor, v: &ProfMor, q: &ProfMor) -> bool {
        prof_is_coequalizer(u, v, q)
    }
    fn factor(&self, q: &ProfMor, t: &ProfMor) -> Option<ProfMor> {
        prof_factor(q, t)
    }
}
