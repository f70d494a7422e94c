use serde::{Deserialize, Serialize};

use super::category::{FinCat, MorId, ObjId};
use super::functor::FinFunctor;

/// A cofork `q: Y → Q` on a parallel pair `u, v: X → Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cofork {
    pub u: MorId,
    pub v: MorId,
    pub apex: ObjId,
    pub leg: MorId,
}

/// Why a candidate cofork is not a coequalizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoforkFailure {
    /// `q∘u ≠ q∘v`.
    NotCofork,
    /// The cofork `other` factors through the candidate in `factorizations` ways (≠ 1).
    NotUniversal { other: MorId, factorizations: usize },
}

/// Every cofork on `(u, v)`, ordered by (apex, leg).
pub fn coforks(c: &FinCat, u: MorId, v: MorId) -> Vec<(ObjId, MorId)> {
    let y = c.tgt(u);
    (0..c.num_objects())
        .flat_map(|q_obj| c.hom(y, q_obj).iter().map(move |&q| (q_obj, q)))
        .filter(|&(_, q)| c.compose(q, u) == c.compose(q, v))
        .collect()
}

/// Checks that `q` coequalizes `(u, v)` and that every cofork factors through
/// it exactly once.
pub fn check_coequalizer(c: &FinCat, u: MorId, v: MorId, q: MorId) -> Result<(), CoforkFailure> {
    assert_eq!((c.src(u), c.tgt(u)), (c.src(v), c.tgt(v)), "non-parallel pair");
    if c.src(q) != c.tgt(u) || c.compose(q, u) != c.compose(q, v) {
        return Err(CoforkFailure::NotCofork);
    }
    let apex = c.tgt(q);
    for (other_apex, other) in coforks(c, u, v) {
        let factorizations = c
            .hom(apex, other_apex)
            .iter()
            .filter(|&&h| c.compose(h, q) == other)
            .count();
        if factorizations != 1 {
            return Err(CoforkFailure::NotUniversal {
                other,
                factorizations,
            });
        }
    }
    Ok(())
}

pub fn is_coequalizer(c: &FinCat, u: MorId, v: MorId, q: MorId) -> bool {
    check_coequalizer(c, u, v, q).is_ok()
}

/// Exhaustive coequalizer search: the least universal cofork in (apex, leg)
/// order, or `None` if no cofork is universal.
pub fn coequalizer_search(c: &FinCat, u: MorId, v: MorId) -> Option<Cofork> {
    coforks(c, u, v)
        .into_iter()
        .find(|&(_, q)| is_coequalizer(c, u, v, q))
        .map(|(apex, leg)| Cofork { u, v, apex, leg })
}

/// The unique `h` with `h∘q = t`, when `q` is a coequalizer and `t` a cofork.
pub fn factor_through(c: &FinCat, q: MorId, t: MorId) -> Option<MorId> {
    let mut it = c
        .hom(c.tgt(q), c.tgt(t))
        .iter()
        .copied()
        .filter(|&h| c.compose(h, q) == t);
    let h = it.next()?;
    it.next().is_none().then_some(h)
}

/// Whether the endofunctor `f` sends the colimiting cofork to a colimiting cofork.
pub fn check_preservation(
    c: &FinCat,
    cofork: &Cofork,
    f: &FinFunctor,
) -> Result<(), CoforkFailure> {
    debug_assert!(std::ptr::eq(&*f.dom, c) || *f.dom == *c);
    check_coequalizer(c, f.mor(cofork.u), f.mor(cofork.v), f.mor(cofork.leg))
}

/// Whether `− ⊗ Z` sends the colimiting cofork to a colimiting cofork, for
/// a tensor given as a functor `C × C → C` (domain indexed as in
/// [`product_category`](super::product_category)).
pub fn check_preservation_by_right_tensor(
    tensor: &FinFunctor,
    cofork: &Cofork,
    z: ObjId,
) -> Result<(), CoforkFailure> {
    let c = &*tensor.cod;
    let m = c.num_morphisms();
    let idz = c.identity(z);
    let t = |f: MorId| tensor.mor(f * m + idz);
    check_coequalizer(c, t(cofork.u), t(cofork.v), t(cofork.leg))
}
