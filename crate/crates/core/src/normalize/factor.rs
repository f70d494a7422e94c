use super::coeq::Coequalizers;
use super::lazy::{ModMor, Normalization};
use super::materialize::NormalizationResult;
use super::modules::IModule;
use crate::error::{Result, StructureError};
use crate::fincore::{factor_through, FinFunctor, MorId, ObjId};
use crate::search::Csp;
use crate::skew::{MonoidalFunctor, SkewMonoidal, TableMonoidalFunctor};

type DObj<F> = <<F as MonoidalFunctor>::Dom as SkewMonoidal>::Obj;
type CObj<F> = <<F as MonoidalFunctor>::Cod as SkewMonoidal>::Obj;
type CMor<F> = <<F as MonoidalFunctor>::Cod as SkewMonoidal>::Mor;

/// `MX` with action `M(ρ⁻¹)∘M2∘(1⊗M0): MX⊗I → MX`; `None` if `ρ_X` is not
/// invertible.
pub fn lifted_module<F: MonoidalFunctor>(m: &F, x: &DObj<F>) -> Option<IModule<CObj<F>, CMor<F>>> {
    let (d, c) = (m.dom(), m.cod());
    let rho_inv = d.inverse(&d.rho(x))?;
    let mx = m.map_obj(x);
    let action = c.compose_path(&[
        c.left_whisker(&mx, &m.f0()),
        m.f2(x, &d.unit()),
        m.map_mor(&rho_inv),
    ]);
    Some(IModule { carrier: mx, action })
}

/// The factorization `N` of `M` through the forgetful functor of `n`, for a
/// right normal domain: `NX` is [`lifted_module`], `N2` is `M2` passed to the
/// quotient and `N0 = M0`.
///
/// # Panics
///
/// When the domain is not right normal at a mapped object or `M2` does not
/// descend to the wedge.
pub struct Factorization<'a, F: MonoidalFunctor>
where
    F::Cod: Coequalizers,
{
    pub m: &'a F,
    pub n: &'a Normalization<F::Cod>,
}

impl<F: MonoidalFunctor> MonoidalFunctor for Factorization<'_, F>
where
    F::Cod: Coequalizers,
{
    type Dom = F::Dom;
    type Cod = Normalization<F::Cod>;

    fn dom(&self) -> &F::Dom {
        self.m.dom()
    }
    fn cod(&self) -> &Normalization<F::Cod> {
        self.n
    }
    fn map_obj(&self, x: &DObj<F>) -> IModule<CObj<F>, CMor<F>> {
        lifted_module(self.m, x).expect("domain is not right normal")
    }
    fn map_mor(&self, f: &<F::Dom as SkewMonoidal>::Mor) -> ModMor<CObj<F>, CMor<F>> {
        let d = self.m.dom();
        ModMor {
            src: self.map_obj(&d.src(f)),
            tgt: self.map_obj(&d.tgt(f)),
            mor: self.m.map_mor(f),
        }
    }
    fn f2(&self, x: &DObj<F>, y: &DObj<F>) -> ModMor<CObj<F>, CMor<F>> {
        let (nx, ny) = (self.map_obj(x), self.map_obj(y));
        let w = self.n.wedge(&nx, &ny);
        let mor = self
            .n
            .source
            .factor(&w.q, &self.m.f2(x, y))
            .expect("M2 does not pass to the quotient");
        ModMor {
            src: w.module,
            tgt: self.map_obj(&self.m.dom().tensor(x, y)),
            mor,
        }
    }
    fn f0(&self) -> ModMor<CObj<F>, CMor<F>> {
        let d = self.m.dom();
        ModMor {
            src: self.n.unit(),
            tgt: self.map_obj(&d.unit()),
            mor: self.m.f0(),
        }
    }
}

/// `N: D → C^I` with `UN = M` as tables.
pub fn factor_through_normalization(m: &TableMonoidalFunctor, n: &NormalizationResult) -> Result<TableMonoidalFunctor> {
    if *m.cod != *n.source {
        return Err(StructureError::Precondition("M does not land in the normalized category".into()));
    }
    let d = &*m.dom;
    if !d.is_right_normal() {
        return Err(StructureError::Precondition("the domain of M is not right normal".into()));
    }
    let obj_map = d
        .objects()
        .iter()
        .map(|x| {
            let lifted = lifted_module(m, x).expect("right normal");
            n.module_index(&lifted).ok_or_else(|| {
                StructureError::Precondition(format!("the module over {} is not enumerated", d.base.object_name(*x)))
            })
        })
        .collect::<Result<Vec<usize>>>()?;
    let lift = |i: usize, j: usize, f: MorId, what: &str| {
        n.lift(i, j, f)
            .ok_or_else(|| StructureError::Falsified(format!("{what} is not a module morphism")))
    };
    let b = &d.base;
    let mor_map = (0..b.num_morphisms())
        .map(|f| {
            lift(obj_map[b.src(f)], obj_map[b.tgt(f)], m.functor.mor(f), b.morphism_name(f))
        })
        .collect::<Result<Vec<_>>>()?;
    let k = d.num_objects();
    let mut f2 = Vec::with_capacity(k * k);
    for x in 0..k {
        for y in 0..k {
            let (i, j) = (obj_map[x], obj_map[y]);
            let h = factor_through(&n.source.base, n.q_at(i, j), m.f2[x * k + y])
                .ok_or_else(|| StructureError::Falsified("M2 does not pass to the quotient".into()))?;
            f2.push(lift(n.mod_cat.tensor_obj(i, j), obj_map[d.tensor_obj(x, y)], h, "N2")?);
        }
    }
    let f0 = lift(n.mod_cat.unit, obj_map[d.unit], m.f0, "N0")?;
    Ok(TableMonoidalFunctor {
        dom: m.dom.clone(),
        cod: n.mod_cat.clone(),
        functor: FinFunctor {
            dom: d.base.clone(),
            cod: n.mod_cat.base.clone(),
            obj_map,
            mor_map,
        },
        f2,
        f0,
    })
}

/// Every monoidal `N` with `UN = M`, by search over module structures on each
/// `MX`. Morphisms, `N2` and `N0` are forced by faithfulness of `U` and the
/// quotients being epimorphisms, so only the object assignment varies.
/// Returns the object assignments.
pub fn all_factorizations(m: &TableMonoidalFunctor, n: &NormalizationResult, limit: Option<usize>) -> Vec<Vec<ObjId>> {
    let d = &*m.dom;
    let b = &d.base;
    let domains = d
        .objects()
        .iter()
        .map(|&x| {
            let mx = m.functor.obj(x);
            (0..n.num_modules()).filter(|&i| n.modules[i].carrier == mx).collect()
        })
        .collect();
    let mut csp = Csp::new(domains);
    for f in 0..b.num_morphisms() {
        let (x, y, mf) = (b.src(f), b.tgt(f), m.functor.mor(f));
        csp.constrain([x, y], move |a| match (a[x], a[y]) {
            (Some(i), Some(j)) => n.lift(i, j, mf).is_some(),
            _ => true,
        });
    }
    let k = d.num_objects();
    for x in 0..k {
        for y in 0..k {
            let xy = d.tensor_obj(x, y);
            let m2 = m.f2[x * k + y];
            csp.constrain([x, y, xy], move |a| match (a[x], a[y], a[xy]) {
                (Some(i), Some(j), Some(l)) => factor_through(&n.source.base, n.q_at(i, j), m2)
                    .is_some_and(|h| n.lift(n.mod_cat.tensor_obj(i, j), l, h).is_some()),
                _ => true,
            });
        }
    }
    let u = d.unit;
    csp.constrain([u], move |a| a[u].is_none_or(|l| n.lift(n.mod_cat.unit, l, m.f0).is_some()));
    csp.solve(limit)
}
