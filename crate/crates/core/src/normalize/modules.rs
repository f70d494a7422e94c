use serde::{Deserialize, Serialize};

use super::coeq::Coequalizers;
use crate::error::{Result, StructureError};
use crate::mw::Monad;
use crate::skew::{SkewMonCat, SkewMonoidal};

/// A right `I`-module: an algebra `x: X⊗I → X` for the monad `−⊗I`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IModule<O, M> {
    pub carrier: O,
    pub action: M,
}

/// Multiplication `(1⊗λ)∘α: (X⊗I)⊗I → X⊗I` of the monad `−⊗I`.
pub fn unit_monad_mult<S: SkewMonoidal>(s: &S, x: &S::Obj) -> S::Mor {
    let i = s.unit();
    s.compose(&s.left_whisker(x, &s.lambda(&i)), &s.alpha(x, &i, &i))
}

/// Associativity and the two unit laws of `−⊗I` at `x`.
pub fn unit_monad_laws<S: SkewMonoidal>(s: &S, x: &S::Obj) -> [bool; 3] {
    let i = s.unit();
    let xi = s.tensor(x, &i);
    let mu = unit_monad_mult(s, x);
    let assoc = s.compose(&mu, &s.right_whisker(&mu, &i)) == s.compose(&mu, &unit_monad_mult(s, &xi));
    let left = s.compose(&mu, &s.rho(&xi)) == s.identity(&xi);
    let right = s.compose(&mu, &s.right_whisker(&s.rho(x), &i)) == s.identity(&xi);
    [assoc, left, right]
}

/// The monad `−⊗I` on the base of a finite skew monoidal category, with its
/// laws verified.
pub fn unit_monad(c: &SkewMonCat) -> Result<Monad> {
    let d = c.right_tensor_functor(c.unit);
    let objs = c.objects();
    let mult = objs.iter().map(|x| unit_monad_mult(c, x)).collect();
    let unit = objs.iter().map(|x| c.rho[*x]).collect();
    let m = Monad::new(d, mult, unit);
    if m.is_valid() {
        Ok(m)
    } else {
        Err(StructureError::Falsified(format!(
            "the monad −⊗I fails its laws: {}",
            m.check().summary()
        )))
    }
}

fn typed<S: SkewMonoidal>(s: &S, f: &S::Mor, src: &S::Obj, tgt: &S::Obj) -> bool {
    s.src(f) == *src && s.tgt(f) == *tgt
}

/// Associativity `x∘(x⊗1) = x∘(1⊗λ)∘α` and unit `x∘ρ = 1`; `None` when the
/// action is ill-typed.
pub fn module_laws<S: SkewMonoidal>(s: &S, m: &IModule<S::Obj, S::Mor>) -> Option<[bool; 2]> {
    let (x, act) = (&m.carrier, &m.action);
    let i = s.unit();
    if !typed(s, act, &s.tensor(x, &i), x) {
        return None;
    }
    let assoc = s.compose(act, &s.right_whisker(act, &i)) == s.compose(act, &unit_monad_mult(s, x));
    let unit = s.compose(act, &s.rho(x)) == s.identity(x);
    Some([assoc, unit])
}

pub fn is_module<S: SkewMonoidal>(s: &S, m: &IModule<S::Obj, S::Mor>) -> bool {
    module_laws(s, m) == Some([true, true])
}

/// Every module structure on each listed carrier, in carrier then action order.
pub fn enumerate_imodules<S: SkewMonoidal>(s: &S, carriers: &[S::Obj]) -> Vec<IModule<S::Obj, S::Mor>> {
    let i = s.unit();
    carriers
        .iter()
        .flat_map(|x| {
            s.hom(&s.tensor(x, &i), x).into_iter().map(move |action| IModule {
                carrier: x.clone(),
                action,
            })
        })
        .filter(|m| is_module(s, m))
        .collect()
}

/// `(I, λ_I)`.
pub fn unit_module<S: SkewMonoidal>(s: &S) -> IModule<S::Obj, S::Mor> {
    let i = s.unit();
    IModule {
        action: s.lambda(&i),
        carrier: i,
    }
}

/// `X⊗Y` with action `(1⊗y)∘α: (XY)I → XY`.
pub fn tensor_module<S: SkewMonoidal>(s: &S, x: &S::Obj, m: &IModule<S::Obj, S::Mor>) -> IModule<S::Obj, S::Mor> {
    let i = s.unit();
    IModule {
        carrier: s.tensor(x, &m.carrier),
        action: s.compose(&s.left_whisker(x, &m.action), &s.alpha(x, &m.carrier, &i)),
    }
}

/// `f∘x = y∘(f⊗1)`.
pub fn is_module_morphism<S: SkewMonoidal>(
    s: &S,
    m1: &IModule<S::Obj, S::Mor>,
    m2: &IModule<S::Obj, S::Mor>,
    f: &S::Mor,
) -> bool {
    typed(s, f, &m1.carrier, &m2.carrier)
        && s.compose(f, &m1.action) == s.compose(&m2.action, &s.right_whisker(f, &s.unit()))
}

pub fn module_morphisms<S: SkewMonoidal>(
    s: &S,
    m1: &IModule<S::Obj, S::Mor>,
    m2: &IModule<S::Obj, S::Mor>,
) -> Vec<S::Mor> {
    s.hom(&m1.carrier, &m2.carrier)
        .into_iter()
        .filter(|f| is_module_morphism(s, m1, m2, f))
        .collect()
}

/// The reflexive pair `x⊗1, (1⊗λ)∘α: (XI)Y → XY`, split by `ρ⊗1`.
pub fn wedge_pair<S: SkewMonoidal>(
    s: &S,
    m1: &IModule<S::Obj, S::Mor>,
    m2: &IModule<S::Obj, S::Mor>,
) -> (S::Mor, S::Mor) {
    let (x, y) = (&m1.carrier, &m2.carrier);
    let i = s.unit();
    let d0 = s.right_whisker(&m1.action, y);
    let d1 = s.compose(&s.left_whisker(x, &s.lambda(y)), &s.alpha(x, &i, y));
    (d0, d1)
}

/// `X∧Y` with its lifted action, and the quotient `q: XY → X∧Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wedge<O, M> {
    pub module: IModule<O, M>,
    pub q: M,
}

/// The wedge of two modules. The coequalizer must exist and be preserved by
/// `−⊗Z` for `Z = I` and every `Z` in `zs`; both are checked.
pub fn wedge<S: Coequalizers>(
    s: &S,
    m1: &IModule<S::Obj, S::Mor>,
    m2: &IModule<S::Obj, S::Mor>,
    zs: &[S::Obj],
) -> Result<Wedge<S::Obj, S::Mor>> {
    let at = || format!("({}, {})", s.obj_label(&m1.carrier), s.obj_label(&m2.carrier));
    let (d0, d1) = wedge_pair(s, m1, m2);
    let q = s
        .coequalizer(&d0, &d1)
        .ok_or_else(|| StructureError::Precondition(format!("no coequalizer of the wedge pair at {}", at())))?;
    let i = s.unit();
    for z in std::iter::once(&i).chain(zs) {
        let t = |f: &S::Mor| s.right_whisker(f, z);
        if !s.is_coequalizer(&t(&d0), &t(&d1), &t(&q)) {
            return Err(StructureError::Precondition(format!(
                "−⊗{} does not preserve the wedge coequalizer at {}",
                s.obj_label(z),
                at()
            )));
        }
    }
    let tm = tensor_module(s, &m1.carrier, m2);
    let action = s
        .factor(&s.right_whisker(&q, &i), &s.compose(&q, &tm.action))
        .ok_or_else(|| StructureError::Falsified(format!("the action does not descend to the wedge at {}", at())))?;
    let module = IModule {
        carrier: s.tgt(&q),
        action,
    };
    if !is_module(s, &module) {
        return Err(StructureError::Falsified(format!("the wedge at {} is not a module", at())));
    }
    Ok(Wedge { module, q })
}

/// `ρ′ = q∘ρ: X → X∧I`.
pub fn rho_prime<S: Coequalizers>(s: &S, m: &IModule<S::Obj, S::Mor>) -> Result<S::Mor> {
    let w = wedge(s, m, &unit_module(s), &[])?;
    Ok(s.compose(&w.q, &s.rho(&m.carrier)))
}
