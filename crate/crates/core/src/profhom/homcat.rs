use std::collections::HashMap;
use std::sync::Arc;

use super::prof::{
    associator, coend, hom_prof, left_unitor, lower_star, nat_transformations, representation,
    right_unitor, FinProf, ProfMor,
};
use crate::error::{Result, StructureError};
use crate::fincore::{FinCat, FinFunctor, MorId, ObjId};
use crate::mw::{Monad, MwMonad, MW_TAGS};
use crate::skew::{monoid_laws, Monoid, MonoidalFunctor, SkewMonoidal};

/// The hom-category `K(A, B)` of profunctors `A ⇸ B` for `A` the discrete
/// category on the objects of `B`, with `g⊗f = g·i^*·f` and unit `i_*`.
///
/// The tensor is computed on demand; `objects` is the fragment at which laws
/// are instantiated.
#[derive(Debug, Clone)]
pub struct HomSkewMonCat {
    pub base: Arc<FinCat>,
    pub disc: Arc<FinCat>,
    pub incl: FinFunctor,
    pub objects: Vec<Arc<FinProf>>,
    unit: Arc<FinProf>,
}

/// Summands `(a′, x, y)` of `(g⊗f)(b, a)`, sorted by element word.
pub(crate) struct Tensor {
    pub(crate) prof: Arc<FinProf>,
    pub(crate) summands: Vec<Vec<(ObjId, usize, usize)>>,
    pub(crate) index: Vec<HashMap<(ObjId, usize, usize), usize>>,
}

/// Elements of tensors are dot-joined words; ordering by atoms (shorter
/// first) keeps numerals in numeric order.
fn word_key(s: &str) -> Vec<(usize, &str)> {
    s.split('.').map(|t| (t.len(), t)).collect()
}

/// The inclusion of the discrete category on the objects of `b`.
pub fn discrete_inclusion(b: &Arc<FinCat>) -> FinFunctor {
    let disc = Arc::new(FinCat::discrete(b.objects().to_vec()));
    FinFunctor {
        obj_map: (0..b.num_objects()).collect(),
        mor_map: (0..b.num_objects()).map(|x| b.identity(x)).collect(),
        dom: disc,
        cod: b.clone(),
    }
}

pub fn hom_skew_moncat(b: &Arc<FinCat>, objects: Vec<FinProf>) -> Result<HomSkewMonCat> {
    let incl = discrete_inclusion(b);
    let unit = Arc::new(lower_star(&incl));
    let mut objs = vec![unit.clone()];
    for p in objects {
        if p.cod != *b {
            return Err(StructureError::Precondition("profunctor codomain is not the base".into()));
        }
        if !p.dom.is_discrete() || p.dom.num_objects() != b.num_objects() {
            return Err(StructureError::Precondition(
                "profunctor domain is not the discrete category on the base objects".into(),
            ));
        }
        p.validate()?;
        // the discrete domain is taken to be ours, so object lists compare equal
        let p = Arc::new(FinProf {
            dom: incl.dom.clone(),
            ..p
        });
        if !objs.contains(&p) {
            objs.push(p);
        }
    }
    Ok(HomSkewMonCat {
        base: b.clone(),
        disc: incl.dom.clone(),
        incl,
        objects: objs,
        unit,
    })
}

impl HomSkewMonCat {
    /// Adopts a profunctor `A ⇸ B` given over any discrete copy of `A`.
    pub fn adopt(&self, p: &FinProf) -> Arc<FinProf> {
        Arc::new(FinProf {
            dom: self.disc.clone(),
            ..p.clone()
        })
    }

    pub(crate) fn tensor_table(&self, g: &FinProf, f: &FinProf) -> Tensor {
        let b = &*self.base;
        let n = b.num_objects();
        let mut summands: Vec<Vec<((ObjId, usize, usize), String)>> = Vec::with_capacity(n * n);
        for c in 0..n {
            for a in 0..n {
                let mut cell: Vec<_> = (0..n)
                    .flat_map(|m| {
                        (0..g.size(c, m)).flat_map(move |x| (0..f.size(m, a)).map(move |y| (m, x, y)))
                    })
                    .map(|(m, x, y)| {
                        let name = format!("{}.{}.{}", g.name(c, m, x), b.object_name(m), f.name(m, a, y));
                        ((m, x, y), name)
                    })
                    .collect();
                cell.sort_by(|p, q| word_key(&p.1).cmp(&word_key(&q.1)));
                summands.push(cell);
            }
        }
        let index: Vec<HashMap<_, _>> = summands
            .iter()
            .map(|cell| cell.iter().enumerate().map(|(i, (s, _))| (*s, i)).collect())
            .collect();
        let prof = FinProf::from_fn(
            self.disc.clone(),
            self.base.clone(),
            |c, a| summands[c * n + a].iter().map(|(_, name)| name.clone()).collect(),
            |beta, a, k| {
                let (c1, c) = (b.src(beta), b.tgt(beta));
                let (m, x, y) = summands[c * n + a][k].0;
                index[c1 * n + a][&(m, g.act_left(beta, m, x), y)]
            },
            |_, _, x| x,
        );
        Tensor {
            prof: Arc::new(prof),
            summands: summands.into_iter().map(|cell| cell.into_iter().map(|(s, _)| s).collect()).collect(),
            index,
        }
    }

    /// Position of the summand `(a′, x, y)` in `(g⊗f)(b, a)`.
    pub fn tensor_position(&self, g: &FinProf, f: &FinProf, b: ObjId, a: ObjId, s: (ObjId, usize, usize)) -> usize {
        self.tensor_table(g, f).index[b * self.base.num_objects() + a][&s]
    }

    /// The summand at position `k` of `(g⊗f)(b, a)`.
    fn tensor_summand(t: &Tensor, cell: usize, k: usize) -> (ObjId, usize, usize) {
        t.summands[cell][k]
    }

    /// Canonical isomorphism from the closed tensor `g⊗f` to the composite
    /// `g·(i^*·f)` computed by coends.
    pub fn closed_to_coend(&self, g: &Arc<FinProf>, f: &Arc<FinProf>) -> Result<ProfMor> {
        let t = self.tensor_table(g, f);
        let upper = Arc::new(super::prof::upper_star(&self.incl));
        let inner = coend(&upper, f)?;
        let outer = coend(g, &inner.prof)?;
        let b = &*self.base;
        let n = b.num_objects();
        Ok(ProfMor::from_fn(t.prof.clone(), outer.prof.clone(), |c, a, k| {
            let (m, x, y) = Self::tensor_summand(&t, c * n + a, k);
            let id = b.hom(m, m).iter().position(|&h| h == b.identity(m)).unwrap();
            outer.class(c, a, (m, x, inner.class(m, a, (m, id, y))))
        }))
    }

    /// Every listed object is a valid profunctor over the right categories.
    pub fn structural_errors(&self) -> Vec<String> {
        self.objects
            .iter()
            .flat_map(|p| p.structural_errors())
            .collect()
    }
}

impl SkewMonoidal for HomSkewMonCat {
    type Obj = Arc<FinProf>;
    type Mor = ProfMor;

    fn unit(&self) -> Arc<FinProf> {
        self.unit.clone()
    }

    fn tensor(&self, x: &Arc<FinProf>, y: &Arc<FinProf>) -> Arc<FinProf> {
        self.tensor_table(x, y).prof
    }

    fn tensor_mor(&self, f: &ProfMor, g: &ProfMor) -> ProfMor {
        let src = self.tensor_table(&f.src, &g.src);
        let tgt = self.tensor_table(&f.tgt, &g.tgt);
        let n = self.base.num_objects();
        ProfMor::from_fn(src.prof.clone(), tgt.prof.clone(), |c, a, k| {
            let (m, x, y) = Self::tensor_summand(&src, c * n + a, k);
            tgt.index[c * n + a][&(m, f.apply(c, m, x), g.apply(m, a, y))]
        })
    }

    fn src(&self, f: &ProfMor) -> Arc<FinProf> {
        f.src.clone()
    }

    fn tgt(&self, f: &ProfMor) -> Arc<FinProf> {
        f.tgt.clone()
    }

    fn identity(&self, x: &Arc<FinProf>) -> ProfMor {
        ProfMor::identity(x)
    }

    fn compose(&self, g: &ProfMor, f: &ProfMor) -> ProfMor {
        f.then(g)
    }

    fn hom(&self, x: &Arc<FinProf>, y: &Arc<FinProf>) -> Vec<ProfMor> {
        nat_transformations(x, y, None)
    }

    /// The closed formula reassociates by relabelling words, so `α` is an
    /// identity.
    fn alpha(&self, x: &Arc<FinProf>, y: &Arc<FinProf>, z: &Arc<FinProf>) -> ProfMor {
        ProfMor::identity(&self.tensor(&self.tensor(x, y), z))
    }

    /// Evaluation `(β, a′, y) ↦ yβ`, the counit of `i_* ⊣ i^*` whiskered.
    fn lambda(&self, x: &Arc<FinProf>) -> ProfMor {
        let t = self.tensor_table(&self.unit, x);
        let b = &*self.base;
        let n = b.num_objects();
        ProfMor::from_fn(t.prof.clone(), x.clone(), |c, a, k| {
            let (m, beta, y) = Self::tensor_summand(&t, c * n + a, k);
            x.act_left(b.hom(c, m)[beta], a, y)
        })
    }

    /// `x ↦ (x, a, 1_a)`, the unit of `i_* ⊣ i^*` whiskered.
    fn rho(&self, x: &Arc<FinProf>) -> ProfMor {
        let t = self.tensor_table(x, &self.unit);
        let b = &*self.base;
        let n = b.num_objects();
        ProfMor::from_fn(x.clone(), t.prof.clone(), |c, a, k| {
            let id = b.hom(a, a).iter().position(|&h| h == b.identity(a)).unwrap();
            t.index[c * n + a][&(a, k, id)]
        })
    }

    fn obj_label(&self, x: &Arc<FinProf>) -> String {
        x.label()
    }

    fn mor_label(&self, f: &ProfMor) -> String {
        f.label()
    }

    /// Bijective components are inverse to a natural family.
    fn inverse(&self, f: &ProfMor) -> Option<ProfMor> {
        f.inverse()
    }
}

/// Endo-profunctors `B ⇸ B` under coend composition, unit `hom_B`.
#[derive(Debug, Clone)]
pub struct EndoHom {
    pub base: Arc<FinCat>,
    unit: Arc<FinProf>,
}

impl EndoHom {
    pub fn new(base: &Arc<FinCat>) -> EndoHom {
        EndoHom {
            base: base.clone(),
            unit: Arc::new(hom_prof(base)),
        }
    }
}

impl SkewMonoidal for EndoHom {
    type Obj = Arc<FinProf>;
    type Mor = ProfMor;

    fn unit(&self) -> Arc<FinProf> {
        self.unit.clone()
    }

    fn tensor(&self, x: &Arc<FinProf>, y: &Arc<FinProf>) -> Arc<FinProf> {
        coend(x, y).expect("endo-profunctors compose").prof
    }

    fn tensor_mor(&self, f: &ProfMor, g: &ProfMor) -> ProfMor {
        super::prof::compose_mor(f, g).expect("endo-profunctors compose")
    }

    fn src(&self, f: &ProfMor) -> Arc<FinProf> {
        f.src.clone()
    }

    fn tgt(&self, f: &ProfMor) -> Arc<FinProf> {
        f.tgt.clone()
    }

    fn identity(&self, x: &Arc<FinProf>) -> ProfMor {
        ProfMor::identity(x)
    }

    fn compose(&self, g: &ProfMor, f: &ProfMor) -> ProfMor {
        f.then(g)
    }

    fn hom(&self, x: &Arc<FinProf>, y: &Arc<FinProf>) -> Vec<ProfMor> {
        nat_transformations(x, y, None)
    }

    fn alpha(&self, x: &Arc<FinProf>, y: &Arc<FinProf>, z: &Arc<FinProf>) -> ProfMor {
        associator(x, y, z).expect("endo-profunctors compose")
    }

    fn lambda(&self, x: &Arc<FinProf>) -> ProfMor {
        left_unitor(x).expect("endo-profunctors compose")
    }

    fn rho(&self, x: &Arc<FinProf>) -> ProfMor {
        right_unitor(x)
            .expect("endo-profunctors compose")
            .inverse()
            .expect("right unitor is invertible")
    }

    fn obj_label(&self, x: &Arc<FinProf>) -> String {
        x.label()
    }

    fn mor_label(&self, f: &ProfMor) -> String {
        f.label()
    }

    /// Bijective components are inverse to a natural family.
    fn inverse(&self, f: &ProfMor) -> Option<ProfMor> {
        f.inverse()
    }
}

/// `u = K(i, 1)`: restriction of an endo-profunctor along `i`,
/// `u(g)(b, a) = g(b, ia)`.
pub struct UFunctor<'a> {
    endo: EndoHom,
    hom: &'a HomSkewMonCat,
}

pub fn u_functor(h: &HomSkewMonCat) -> UFunctor<'_> {
    UFunctor {
        endo: EndoHom::new(&h.base),
        hom: h,
    }
}

impl MonoidalFunctor for UFunctor<'_> {
    type Dom = EndoHom;
    type Cod = HomSkewMonCat;

    fn dom(&self) -> &EndoHom {
        &self.endo
    }

    fn cod(&self) -> &HomSkewMonCat {
        self.hom
    }

    fn map_obj(&self, g: &Arc<FinProf>) -> Arc<FinProf> {
        let n = self.hom.base.num_objects();
        Arc::new(FinProf {
            dom: self.hom.disc.clone(),
            cod: self.hom.base.clone(),
            values: g.values.clone(),
            left: g.left.clone(),
            right: (0..n)
                .map(|a| (0..n).map(|b| (0..g.size(b, a)).collect()).collect())
                .collect(),
        })
    }

    fn map_mor(&self, f: &ProfMor) -> ProfMor {
        ProfMor {
            src: self.map_obj(&f.src),
            tgt: self.map_obj(&f.tgt),
            components: f.components.clone(),
        }
    }

    /// `(x, a′, y) ↦ [(x, ia′, y)]`, the counit of `i_* ⊣ i^*` between `g`
    /// and `f`.
    fn f2(&self, g: &Arc<FinProf>, f: &Arc<FinProf>) -> ProfMor {
        let (ug, uf) = (self.map_obj(g), self.map_obj(f));
        let t = self.hom.tensor_table(&ug, &uf);
        let co = coend(g, f).expect("endo-profunctors compose");
        let n = self.hom.base.num_objects();
        ProfMor::from_fn(t.prof.clone(), self.map_obj(&co.prof), |c, a, k| {
            let s = HomSkewMonCat::tensor_summand(&t, c * n + a, k);
            co.class(c, a, s)
        })
    }

    /// `i_* = u(hom_B)` on the nose.
    fn f0(&self) -> ProfMor {
        ProfMor::identity(&self.hom.unit)
    }
}

fn hom_pos(c: &FinCat, x: ObjId, y: ObjId, f: MorId) -> usize {
    c.hom(x, y).iter().position(|&g| g == f).expect("morphism in hom-set")
}

/// The monad `(d, μ, η)` as a monoid on `d_*` in the endo-profunctors.
pub fn monad_to_endo_monoid(m: &Monad) -> Monoid<Arc<FinProf>, ProfMor> {
    let c = &*m.base;
    let endo = EndoHom::new(&m.base);
    let carrier = Arc::new(lower_star(&m.d));
    let sq = coend(&carrier, &carrier).expect("endo-profunctors compose");
    let d = |x: ObjId| m.d.obj(x);
    let mult = ProfMor::from_fn(sq.prof.clone(), carrier.clone(), |b, z, k| {
        let (y, beta, gamma) = sq.rep(b, z, k);
        let (beta, gamma) = (c.hom(b, d(y))[beta], c.hom(y, d(z))[gamma]);
        let h = c.compose_path(&[beta, m.d.mor(gamma), m.mult.component(z)]);
        hom_pos(c, b, d(z), h)
    });
    let unit = ProfMor::from_fn(endo.unit(), carrier.clone(), |b, z, k| {
        let h = c.compose(m.unit.component(z), c.hom(b, z)[k]);
        hom_pos(c, b, d(z), h)
    });
    Monoid { carrier, mult, unit }
}

/// The monoid in `K(A, B)` on `D_*` with unit `K` and multiplication
/// `(β, a′, f) ↦ T(f)∘β`.
pub fn mw_to_monoid(h: &HomSkewMonCat, t: &MwMonad) -> Result<Monoid<Arc<FinProf>, ProfMor>> {
    if t.base != h.base {
        return Err(StructureError::Precondition("mw-monad lives on a different category".into()));
    }
    let c = &*h.base;
    let n = c.num_objects();
    let d = FinFunctor {
        dom: h.disc.clone(),
        cod: h.base.clone(),
        obj_map: t.d.clone(),
        mor_map: t.d.iter().map(|&y| c.identity(y)).collect(),
    };
    let carrier = Arc::new(lower_star(&d));
    let sq = h.tensor_table(&carrier, &carrier);
    let mult = ProfMor::from_fn(sq.prof.clone(), carrier.clone(), |b, a, k| {
        let (m, beta, f) = HomSkewMonCat::tensor_summand(&sq, b * n + a, k);
        let (beta, f) = (c.hom(b, t.d[m])[beta], c.hom(m, t.d[a])[f]);
        hom_pos(c, b, t.d[a], c.compose(t.ext(a, f), beta))
    });
    let unit = ProfMor::from_fn(h.unit(), carrier.clone(), |b, a, k| {
        hom_pos(c, b, t.d[a], c.compose(t.k[a], c.hom(b, a)[k]))
    });
    Ok(Monoid { carrier, mult, unit })
}

/// The mw-monad of a monoid whose carrier is functor-valued, read off
/// through the universal elements of the carrier.
pub fn monoid_to_mw(h: &HomSkewMonCat, m: &Monoid<Arc<FinProf>, ProfMor>) -> Result<MwMonad> {
    let p = &m.carrier;
    let rep = representation(p)
        .ok_or_else(|| StructureError::Precondition("carrier is not functor-valued".into()))?;
    let c = &*h.base;
    let n = c.num_objects();
    let d: Vec<ObjId> = rep.iter().map(|&(r, _)| r).collect();
    // β ∈ B(b, Da) from its image eβ ∈ P(b, a)
    let unrep = |b: ObjId, a: ObjId, x: usize| -> MorId {
        let (r, e) = rep[a];
        *c.hom(b, r)
            .iter()
            .find(|&&beta| p.act_left(beta, a, e) == x)
            .expect("universal element")
    };
    let k: Vec<MorId> = (0..n)
        .map(|a| unrep(a, a, m.unit.apply(a, a, hom_pos(c, a, a, c.identity(a)))))
        .collect();
    let sq = h.tensor_table(p, p);
    Ok(MwMonad::from_fn(h.base.clone(), d.clone(), k, |y, f| {
        let x = c.src(f);
        let (_, ex) = rep[x];
        let fy = p.act_left(f, y, rep[y].1);
        let s = sq.index[d[x] * n + y][&(x, ex, fy)];
        unrep(d[x], y, m.mult.apply(d[x], y, s))
    }))
}

/// Monoid equations in `K(A, B)` paired with the mw-monad equations of the
/// same data: associativity, then `Tf∘K = f` against the left unit law,
/// then `T(K) = 1` against the right unit law.
pub fn monoid_mw_correspondence(h: &HomSkewMonCat, t: &MwMonad) -> Result<[(&'static str, bool, bool); 3]> {
    let m = mw_to_monoid(h, t)?;
    let laws = monoid_laws(h, &m);
    let report = t.check();
    Ok([0, 1, 2].map(|i| (MW_TAGS[i].0, laws[i], report.passed(MW_TAGS[i].0))))
}
