use std::sync::Arc;

use super::functor::{check_monoidal_functor, MonoidalFunctor};
use super::monoid::{enumerate_monoids, Monoid};
use super::monoidal::{check_skew_monoidal, is_monoidal_on, is_right_normal_on, SkewMonoidal};
use crate::fincore::{
    product_category, FinCat, FinFunctor, MorId, ObjId,
};
use crate::report::Report;

/// A skew monoidal category on an explicit finite base.
///
/// The tensor is a functor from `base × base` (indexed as in
/// [`product_category`]). Component tables are indexed by objects:
/// `alpha[(x*n + y)*n + z]`, `lambda[x]`, `rho[x]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewMonCat {
    pub base: Arc<FinCat>,
    pub tensor: FinFunctor,
    pub unit: ObjId,
    pub alpha: Vec<MorId>,
    pub lambda: Vec<MorId>,
    pub rho: Vec<MorId>,
}

impl SkewMonCat {
    /// Builds the tables from functions; nothing is checked.
    pub fn from_fns(
        base: Arc<FinCat>,
        tensor_obj: impl Fn(ObjId, ObjId) -> ObjId,
        tensor_mor: impl Fn(MorId, MorId) -> MorId,
        unit: ObjId,
        alpha: impl Fn(ObjId, ObjId, ObjId) -> MorId,
        lambda: impl Fn(ObjId) -> MorId,
        rho: impl Fn(ObjId) -> MorId,
    ) -> SkewMonCat {
        let n = base.num_objects();
        let m = base.num_morphisms();
        let prod = Arc::new(product_category(&base, &base));
        let tensor = FinFunctor {
            dom: prod,
            cod: base.clone(),
            obj_map: (0..n * n).map(|p| tensor_obj(p / n, p % n)).collect(),
            mor_map: (0..m * m).map(|p| tensor_mor(p / m, p % m)).collect(),
        };
        let alpha = (0..n * n * n)
            .map(|t| alpha(t / (n * n), (t / n) % n, t % n))
            .collect();
        SkewMonCat {
            base,
            tensor,
            unit,
            alpha,
            lambda: (0..n).map(&lambda).collect(),
            rho: (0..n).map(&rho).collect(),
        }
    }

    /// A strict monoidal category: α, λ, ρ are identities. The caller is
    /// responsible for ⊗ being strictly associative and unital.
    pub fn strict(
        base: Arc<FinCat>,
        tensor_obj: impl Fn(ObjId, ObjId) -> ObjId,
        tensor_mor: impl Fn(MorId, MorId) -> MorId,
        unit: ObjId,
    ) -> SkewMonCat {
        let ids = base.clone();
        let alpha_src = |x, y, z| tensor_obj(tensor_obj(x, y), z);
        SkewMonCat::from_fns(
            base,
            &tensor_obj,
            tensor_mor,
            unit,
            |x, y, z| ids.identity(alpha_src(x, y, z)),
            |x| ids.identity(x),
            |x| ids.identity(x),
        )
    }

    pub fn num_objects(&self) -> usize {
        self.base.num_objects()
    }

    pub fn objects(&self) -> Vec<ObjId> {
        (0..self.num_objects()).collect()
    }

    pub fn tensor_obj(&self, x: ObjId, y: ObjId) -> ObjId {
        self.tensor.obj(x * self.num_objects() + y)
    }

    pub fn tensor_mor(&self, f: MorId, g: MorId) -> MorId {
        self.tensor.mor(f * self.base.num_morphisms() + g)
    }

    pub fn alpha_index(&self, x: ObjId, y: ObjId, z: ObjId) -> usize {
        let n = self.num_objects();
        (x * n + y) * n + z
    }

    pub fn alpha_at(&self, x: ObjId, y: ObjId, z: ObjId) -> MorId {
        self.alpha[self.alpha_index(x, y, z)]
    }

    /// Table-level problems (invalid base, tensor not a functor, dangling
    /// or ill-typed components). Empty means the laws can be checked.
    pub fn structural_errors(&self) -> Vec<String> {
        let b = &*self.base;
        let (n, m) = (b.num_objects(), b.num_morphisms());
        let mut out = Vec::new();
        let rep = b.validate();
        if !rep.is_ok() {
            out.extend(rep.violations.iter().map(|v| format!("base: {} {:?}", v.law, v.witness)));
            return out;
        }
        if *self.tensor.cod != *b || self.tensor.dom.num_objects() != n * n
            || self.tensor.dom.num_morphisms() != m * m
        {
            out.push("tensor is not a functor base × base → base".into());
            return out;
        }
        for v in self.tensor.validate() {
            out.push(format!("tensor: {} {:?}", v.law, v.witness));
        }
        if self.unit >= n {
            out.push("unit object is dangling".into());
        }
        if self.alpha.len() != n * n * n || self.lambda.len() != n || self.rho.len() != n {
            out.push("component table has the wrong size".into());
        }
        let dangling = self
            .alpha
            .iter()
            .chain(&self.lambda)
            .chain(&self.rho)
            .any(|&f| f >= m);
        if dangling {
            out.push("component refers to a missing morphism".into());
        }
        if out.is_empty() {
            out.extend(super::monoidal::structural_errors(self, &self.objects()));
        }
        out
    }

    /// Naturality and the five axioms at every tuple of objects.
    pub fn check(&self) -> Report {
        let errs = self.structural_errors();
        if !errs.is_empty() {
            return Report {
                subject: "skew monoidal category".into(),
                structural: errs,
                entries: Vec::new(),
            };
        }
        check_skew_monoidal(self, &self.objects(), "skew monoidal category")
    }

    pub fn is_right_normal(&self) -> bool {
        is_right_normal_on(self, &self.objects())
    }

    /// α, λ, ρ all invertible.
    pub fn is_monoidal(&self) -> bool {
        is_monoidal_on(self, &self.objects())
    }

    pub fn monoids(&self) -> Vec<Monoid<ObjId, MorId>> {
        enumerate_monoids(self, &self.objects())
    }

    /// The endofunctor `− ⊗ Z` of the base.
    pub fn right_tensor_functor(&self, z: ObjId) -> FinFunctor {
        let b = &self.base;
        let idz = b.identity(z);
        FinFunctor {
            dom: b.clone(),
            cod: b.clone(),
            obj_map: (0..b.num_objects()).map(|x| self.tensor_obj(x, z)).collect(),
            mor_map: (0..b.num_morphisms()).map(|f| self.tensor_mor(f, idz)).collect(),
        }
    }

    /// Componentwise product; object `(x, y)` has index `x * |ob other| + y`.
    pub fn product(&self, other: &SkewMonCat) -> SkewMonCat {
        let base = Arc::new(product_category(&self.base, &other.base));
        let (nb, mb) = (other.num_objects(), other.base.num_morphisms());
        SkewMonCat::from_fns(
            base,
            |x, y| self.tensor_obj(x / nb, y / nb) * nb + other.tensor_obj(x % nb, y % nb),
            |f, g| self.tensor_mor(f / mb, g / mb) * mb + other.tensor_mor(f % mb, g % mb),
            self.unit * nb + other.unit,
            |x, y, z| {
                self.alpha_at(x / nb, y / nb, z / nb) * mb + other.alpha_at(x % nb, y % nb, z % nb)
            },
            |x| self.lambda[x / nb] * mb + other.lambda[x % nb],
            |x| self.rho[x / nb] * mb + other.rho[x % nb],
        )
    }

    /// Transports the structure along the identity functor equipped with
    /// invertible `F2_{X,Y}: X⊗Y → X⊗Y` and `F0: I → I`, so that the identity
    /// becomes a monoidal functor from `self` to the result. `F2` must be
    /// natural for the result to be skew monoidal.
    pub fn gauge_twist(&self, f2: impl Fn(ObjId, ObjId) -> MorId, f0: MorId) -> SkewMonCat {
        let b = &*self.base;
        let inv = |f: MorId| b.inverse(f).expect("gauge components must be invertible");
        let i = self.unit;
        let mut out = self.clone();
        for x in 0..self.num_objects() {
            out.lambda[x] = b.compose_path(&[
                self.tensor_mor(f0, b.identity(x)),
                f2(i, x),
                self.lambda[x],
            ]);
            out.rho[x] = b.compose_path(&[
                self.rho[x],
                inv(f2(x, i)),
                self.tensor_mor(b.identity(x), inv(f0)),
            ]);
            for y in 0..self.num_objects() {
                for z in 0..self.num_objects() {
                    let xy = self.tensor_obj(x, y);
                    let yz = self.tensor_obj(y, z);
                    let idx = self.alpha_index(x, y, z);
                    out.alpha[idx] = b.compose_path(&[
                        self.tensor_mor(f2(x, y), b.identity(z)),
                        f2(xy, z),
                        self.alpha[idx],
                        inv(f2(x, yz)),
                        self.tensor_mor(b.identity(x), inv(f2(y, z))),
                    ]);
                }
            }
        }
        out
    }
}

impl SkewMonoidal for SkewMonCat {
    type Obj = ObjId;
    type Mor = MorId;

    fn unit(&self) -> ObjId {
        self.unit
    }
    fn tensor(&self, x: &ObjId, y: &ObjId) -> ObjId {
        self.tensor_obj(*x, *y)
    }
    fn tensor_mor(&self, f: &MorId, g: &MorId) -> MorId {
        SkewMonCat::tensor_mor(self, *f, *g)
    }
    fn src(&self, f: &MorId) -> ObjId {
        self.base.src(*f)
    }
    fn tgt(&self, f: &MorId) -> ObjId {
        self.base.tgt(*f)
    }
    fn identity(&self, x: &ObjId) -> MorId {
        self.base.identity(*x)
    }
    fn compose(&self, g: &MorId, f: &MorId) -> MorId {
        self.base.compose(*g, *f)
    }
    fn hom(&self, x: &ObjId, y: &ObjId) -> Vec<MorId> {
        self.base.hom(*x, *y).to_vec()
    }
    fn alpha(&self, x: &ObjId, y: &ObjId, z: &ObjId) -> MorId {
        self.alpha_at(*x, *y, *z)
    }
    fn lambda(&self, x: &ObjId) -> MorId {
        self.lambda[*x]
    }
    fn rho(&self, x: &ObjId) -> MorId {
        self.rho[*x]
    }
    fn obj_label(&self, x: &ObjId) -> String {
        self.base.object_name(*x).to_string()
    }
    fn mor_label(&self, f: &MorId) -> String {
        self.base.morphism_name(*f).to_string()
    }
    fn inverse(&self, f: &MorId) -> Option<MorId> {
        self.base.inverse(*f)
    }
}

/// A monoidal functor between table skew monoidal categories.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableMonoidalFunctor {
    pub dom: Arc<SkewMonCat>,
    pub cod: Arc<SkewMonCat>,
    pub functor: FinFunctor,
    /// `f2[x * |ob dom| + y]`.
    pub f2: Vec<MorId>,
    pub f0: MorId,
}

impl TableMonoidalFunctor {
    pub fn identity(c: &Arc<SkewMonCat>) -> TableMonoidalFunctor {
        let n = c.num_objects();
        TableMonoidalFunctor {
            dom: c.clone(),
            cod: c.clone(),
            functor: FinFunctor::identity(&c.base),
            f2: (0..n * n)
                .map(|p| c.base.identity(c.tensor_obj(p / n, p % n)))
                .collect(),
            f0: c.base.identity(c.unit),
        }
    }

    pub fn check(&self) -> Report {
        let subject = "monoidal functor";
        let n = self.dom.num_objects();
        let mut errs: Vec<String> = self
            .functor
            .validate()
            .iter()
            .map(|v| format!("functor: {} {:?}", v.law, v.witness))
            .collect();
        if self.f2.len() != n * n
            || self.f2.iter().any(|&f| f >= self.cod.base.num_morphisms())
            || self.f0 >= self.cod.base.num_morphisms()
        {
            errs.push("F2/F0 table malformed".into());
        }
        if !errs.is_empty() {
            return Report {
                subject: subject.into(),
                structural: errs,
                entries: Vec::new(),
            };
        }
        check_monoidal_functor(self, &self.dom.objects(), subject)
    }
}

impl MonoidalFunctor for TableMonoidalFunctor {
    type Dom = SkewMonCat;
    type Cod = SkewMonCat;

    fn dom(&self) -> &SkewMonCat {
        &self.dom
    }
    fn cod(&self) -> &SkewMonCat {
        &self.cod
    }
    fn map_obj(&self, x: &ObjId) -> ObjId {
        self.functor.obj(*x)
    }
    fn map_mor(&self, f: &MorId) -> MorId {
        self.functor.mor(*f)
    }
    fn f2(&self, x: &ObjId, y: &ObjId) -> MorId {
        self.f2[x * self.dom.num_objects() + y]
    }
    fn f0(&self) -> MorId {
        self.f0
    }
}
