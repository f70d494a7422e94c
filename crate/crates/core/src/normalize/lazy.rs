use std::collections::HashMap;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use super::coeq::Coequalizers;
use super::modules::{enumerate_imodules, is_module, module_morphisms, unit_module, wedge, IModule, Wedge};
use crate::error::{Result, StructureError};
use crate::skew::{MonoidalFunctor, SkewMonoidal};

/// A morphism of modules: a morphism of the source commuting with actions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModMor<O, M> {
    pub src: IModule<O, M>,
    pub tgt: IModule<O, M>,
    pub mor: M,
}

type Mod<S> = IModule<<S as SkewMonoidal>::Obj, <S as SkewMonoidal>::Mor>;
type WedgeOf<S> = Wedge<<S as SkewMonoidal>::Obj, <S as SkewMonoidal>::Mor>;

/// The category of right `I`-modules of `S` with the wedge tensor, computed
/// on demand.
///
/// Wedges are checked against `−⊗Z` for `Z = I` and every carrier of the
/// modules passed to [`Normalization::new`]; all pairs of those modules are
/// wedged eagerly, so precondition failures surface there.
///
/// # Panics
///
/// Structure maps at modules reached only through further wedges are computed
/// lazily and panic if a wedge precondition fails there.
pub struct Normalization<S: Coequalizers> {
    pub source: S,
    pub modules: Vec<Mod<S>>,
    zs: Vec<S::Obj>,
    cache: Mutex<HashMap<(Mod<S>, Mod<S>), WedgeOf<S>>>,
    alphas: Mutex<HashMap<[Mod<S>; 3], ModMor<S::Obj, S::Mor>>>,
    wedged_mors: Mutex<HashMap<[ModMor<S::Obj, S::Mor>; 2], ModMor<S::Obj, S::Mor>>>,
}

impl<S: Coequalizers> Normalization<S> {
    pub fn new(source: S, modules: Vec<Mod<S>>) -> Result<Self> {
        for m in &modules {
            if !is_module(&source, m) {
                return Err(StructureError::Precondition(format!(
                    "{} is not an I-module",
                    module_label(&source, m)
                )));
            }
        }
        let mut zs: Vec<S::Obj> = Vec::new();
        for m in &modules {
            if !zs.contains(&m.carrier) {
                zs.push(m.carrier.clone());
            }
        }
        let n = Normalization {
            source,
            modules,
            zs,
            cache: Mutex::new(HashMap::new()),
            alphas: Mutex::new(HashMap::new()),
            wedged_mors: Mutex::new(HashMap::new()),
        };
        let listed: Vec<_> = std::iter::once(unit_module(&n.source)).chain(n.modules.clone()).collect();
        for a in &listed {
            for b in &listed {
                n.try_wedge(a, b)?;
            }
        }
        Ok(n)
    }

    /// Every module on the listed carriers, failing past `bound` modules.
    pub fn on_carriers(source: S, carriers: &[S::Obj], bound: usize) -> Result<Self> {
        let modules = enumerate_imodules(&source, carriers);
        if modules.len() > bound {
            return Err(StructureError::BoundExceeded(format!(
                "{} I-modules, bound {bound}",
                modules.len()
            )));
        }
        Normalization::new(source, modules)
    }

    pub fn try_wedge(&self, m1: &Mod<S>, m2: &Mod<S>) -> Result<WedgeOf<S>> {
        let key = (m1.clone(), m2.clone());
        if let Some(w) = self.cache.lock().unwrap().get(&key) {
            return Ok(w.clone());
        }
        let w = wedge(&self.source, m1, m2, &self.zs)?;
        self.cache.lock().unwrap().insert(key, w.clone());
        Ok(w)
    }

    pub fn wedge(&self, m1: &Mod<S>, m2: &Mod<S>) -> WedgeOf<S> {
        self.try_wedge(m1, m2).unwrap_or_else(|e| panic!("{e}"))
    }

    /// `q: X⊗Y → X∧Y`.
    pub fn q(&self, m1: &Mod<S>, m2: &Mod<S>) -> S::Mor {
        self.wedge(m1, m2).q
    }

    fn factor_or_panic(&self, q: &S::Mor, t: &S::Mor, what: &str) -> S::Mor {
        self.source
            .factor(q, t)
            .unwrap_or_else(|| panic!("{}", StructureError::Falsified(format!("{what} does not factor"))))
    }

    /// `α₁: (X∧Y)⊗Z → X∧(Y∧Z)`, the factorization of
    /// `q∘(1⊗q)∘α: (XY)Z → X∧(Y∧Z)` through `q⊗1`.
    pub fn try_alpha1(&self, x: &Mod<S>, y: &Mod<S>, z: &Mod<S>) -> Option<S::Mor> {
        let s = &self.source;
        let yz = self.wedge(y, z);
        let t = s.compose_path(&[
            s.alpha(&x.carrier, &y.carrier, &z.carrier),
            s.left_whisker(&x.carrier, &yz.q),
            self.q(x, &yz.module),
        ]);
        s.factor(&s.right_whisker(&self.q(x, y), &z.carrier), &t)
    }

    pub fn alpha1(&self, x: &Mod<S>, y: &Mod<S>, z: &Mod<S>) -> S::Mor {
        self.try_alpha1(x, y, z)
            .unwrap_or_else(|| panic!("{}", StructureError::Falsified("α₁ does not factor".into())))
    }

    /// `q∘ρ: X → X∧I`.
    pub fn rho_prime(&self, m: &Mod<S>) -> S::Mor {
        let s = &self.source;
        s.compose(&self.q(m, &unit_module(s)), &s.rho(&m.carrier))
    }

    /// Every listed module with the unit module first if it is not listed.
    pub fn objects(&self) -> Vec<Mod<S>> {
        let u = unit_module(&self.source);
        let mut out = self.modules.clone();
        if !out.contains(&u) {
            out.insert(0, u);
        }
        out
    }

    /// The forgetful functor back to the source.
    pub fn forgetful(&self) -> Forgetful<'_, S> {
        Forgetful(self)
    }
}

pub fn module_label<S: SkewMonoidal>(s: &S, m: &IModule<S::Obj, S::Mor>) -> String {
    format!("({}, {})", s.obj_label(&m.carrier), s.mor_label(&m.action))
}

impl<S: Coequalizers> SkewMonoidal for Normalization<S> {
    type Obj = Mod<S>;
    type Mor = ModMor<S::Obj, S::Mor>;

    fn unit(&self) -> Mod<S> {
        unit_module(&self.source)
    }
    fn tensor(&self, x: &Mod<S>, y: &Mod<S>) -> Mod<S> {
        self.wedge(x, y).module
    }
    /// `f∧g`, the factorization of `q∘(f⊗g)` through `q`.
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor {
        let key = [f.clone(), g.clone()];
        if let Some(h) = self.wedged_mors.lock().unwrap().get(&key) {
            return h.clone();
        }
        let s = &self.source;
        let (src, tgt) = (self.wedge(&f.src, &g.src), self.wedge(&f.tgt, &g.tgt));
        let t = s.compose(&tgt.q, &s.tensor_mor(&f.mor, &g.mor));
        let h = ModMor {
            mor: self.factor_or_panic(&src.q, &t, "f∧g"),
            src: src.module,
            tgt: tgt.module,
        };
        self.wedged_mors.lock().unwrap().insert(key, h.clone());
        h
    }
    fn src(&self, f: &Self::Mor) -> Mod<S> {
        f.src.clone()
    }
    fn tgt(&self, f: &Self::Mor) -> Mod<S> {
        f.tgt.clone()
    }
    fn identity(&self, x: &Mod<S>) -> Self::Mor {
        ModMor {
            src: x.clone(),
            tgt: x.clone(),
            mor: self.source.identity(&x.carrier),
        }
    }
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor {
        ModMor {
            src: f.src.clone(),
            tgt: g.tgt.clone(),
            mor: self.source.compose(&g.mor, &f.mor),
        }
    }
    fn hom(&self, x: &Mod<S>, y: &Mod<S>) -> Vec<Self::Mor> {
        module_morphisms(&self.source, x, y)
            .into_iter()
            .map(|mor| ModMor {
                src: x.clone(),
                tgt: y.clone(),
                mor,
            })
            .collect()
    }
    /// `α′`, the factorization of `α₁` through `q: (X∧Y)⊗Z → (X∧Y)∧Z`.
    fn alpha(&self, x: &Mod<S>, y: &Mod<S>, z: &Mod<S>) -> Self::Mor {
        let key = [x.clone(), y.clone(), z.clone()];
        if let Some(a) = self.alphas.lock().unwrap().get(&key) {
            return a.clone();
        }
        let xy = self.wedge(x, y);
        let src = self.wedge(&xy.module, z);
        let tgt = self.tensor(x, &self.tensor(y, z));
        let a = ModMor {
            mor: self.factor_or_panic(&src.q, &self.alpha1(x, y, z), "α′"),
            src: src.module,
            tgt,
        };
        self.alphas.lock().unwrap().insert(key, a.clone());
        a
    }
    /// `λ′`, the factorization of `λ: IX → X` through `q: IX → I∧X`.
    fn lambda(&self, x: &Mod<S>) -> Self::Mor {
        let w = self.wedge(&self.unit(), x);
        ModMor {
            mor: self.factor_or_panic(&w.q, &self.source.lambda(&x.carrier), "λ′"),
            src: w.module,
            tgt: x.clone(),
        }
    }
    fn rho(&self, x: &Mod<S>) -> Self::Mor {
        ModMor {
            src: x.clone(),
            tgt: self.tensor(x, &self.unit()),
            mor: self.rho_prime(x),
        }
    }
    fn obj_label(&self, x: &Mod<S>) -> String {
        module_label(&self.source, x)
    }
    fn mor_label(&self, f: &Self::Mor) -> String {
        self.source.mor_label(&f.mor)
    }
    fn inverse(&self, f: &Self::Mor) -> Option<Self::Mor> {
        self.source.inverse(&f.mor).map(|mor| ModMor {
            src: f.tgt.clone(),
            tgt: f.src.clone(),
            mor,
        })
    }
}

/// `U`: carrier and underlying morphism, with `U2 = q` and `U0 = 1`.
pub struct Forgetful<'a, S: Coequalizers>(pub &'a Normalization<S>);

impl<S: Coequalizers> MonoidalFunctor for Forgetful<'_, S> {
    type Dom = Normalization<S>;
    type Cod = S;

    fn dom(&self) -> &Normalization<S> {
        self.0
    }
    fn cod(&self) -> &S {
        &self.0.source
    }
    fn map_obj(&self, x: &Mod<S>) -> S::Obj {
        x.carrier.clone()
    }
    fn map_mor(&self, f: &ModMor<S::Obj, S::Mor>) -> S::Mor {
        f.mor.clone()
    }
    fn f2(&self, x: &Mod<S>, y: &Mod<S>) -> S::Mor {
        self.0.q(x, y)
    }
    fn f0(&self) -> S::Mor {
        let s = &self.0.source;
        s.identity(&s.unit())
    }
}
