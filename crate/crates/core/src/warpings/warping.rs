use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Result, StructureError};
use crate::fincore::{product_category, FinCat, FinFunctor, MorId, MorphismData, ObjId};
use crate::mw::MwMonad;
use crate::report::{Report, Status, Tally};
use crate::skew::{OneCell, SkewBicat, TwoCell, AXIOM_NAMES};

/// A skew warping on a skew bicategory.
///
/// Arguments of `T` are written as 1-cells of the Kleisli bicategory:
/// `OneCell { src: x, tgt: y, obj }` stands for the object `obj` of the
/// ambient `hom(x, D y)`, and likewise for [`TwoCell`]s. This keeps the
/// target `y` explicit when `D` is not injective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewWarping {
    pub ambient: Arc<SkewBicat>,
    pub d: Vec<usize>,
    /// `t[x*n + y]`: `hom(x, D y) → hom(D x, D y)`.
    pub t: Vec<FinFunctor>,
    /// `K_x` as an object of `hom(x, D x)`.
    pub k: Vec<ObjId>,
    /// `v_{f,g}: T(Tg·f) → Tg·Tf`, keyed by `(f, g)`.
    pub v: HashMap<(OneCell, OneCell), MorId>,
    /// `k_f: f → Tf·K`.
    pub kc: HashMap<OneCell, MorId>,
    /// `v0_y: T(K_y) → 1_{D y}`.
    pub v0: Vec<MorId>,
}

/// Entry names of [`SkewWarping::check`], in report order.
pub const LAW_NAMES: [&str; 7] = [
    "warping.naturality.v",
    "warping.naturality.k",
    "warping.axiom1",
    "warping.axiom2",
    "warping.axiom3",
    "warping.axiom4",
    "warping.axiom5",
];

const LAW_TAGS: [&str; 7] = [
    "naturality of v",
    "naturality of k",
    "warping axiom 1: v against alpha",
    "warping axiom 2: T(k) against rho",
    "warping axiom 3: v0 against lambda",
    "warping axiom 4: k against alpha",
    "warping axiom 5: k, v0 and lambda on K",
];

/// One instance of a naturality condition or axiom. Arguments are Kleisli
/// 1-cells and 2-cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum WarpingLaw {
    NatK { f: OneCell, f2: OneCell, phi: TwoCell },
    NatVLeft { f: OneCell, f2: OneCell, phi: TwoCell, g: OneCell },
    NatVRight { f: OneCell, g: OneCell, g2: OneCell, psi: TwoCell },
    Axiom1 { f: OneCell, g: OneCell, h: OneCell },
    Axiom2 { f: OneCell },
    Axiom3 { f: OneCell },
    Axiom4 { f: OneCell, g: OneCell },
    Axiom5 { x: usize },
}

impl WarpingLaw {
    /// Position of the law's entry in [`LAW_NAMES`].
    pub(crate) fn index(&self) -> usize {
        use WarpingLaw::*;
        match self {
            NatVLeft { .. } | NatVRight { .. } => 0,
            NatK { .. } => 1,
            Axiom1 { .. } => 2,
            Axiom2 { .. } => 3,
            Axiom3 { .. } => 4,
            Axiom4 { .. } => 5,
            Axiom5 { .. } => 6,
        }
    }
}

/// A component of `v`, `k` or `v0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum Key {
    V(OneCell, OneCell),
    K(OneCell),
    V0(usize),
}

/// Source of 2-cell components, possibly partial.
pub(crate) trait Components {
    fn v(&self, f: OneCell, g: OneCell) -> Option<MorId>;
    fn k(&self, f: OneCell) -> Option<MorId>;
    fn v0(&self, y: usize) -> Option<MorId>;
}

impl Components for SkewWarping {
    fn v(&self, f: OneCell, g: OneCell) -> Option<MorId> {
        self.v.get(&(f, g)).copied()
    }

    fn k(&self, f: OneCell) -> Option<MorId> {
        self.kc.get(&f).copied()
    }

    fn v0(&self, y: usize) -> Option<MorId> {
        self.v0.get(y).copied()
    }
}

impl SkewWarping {
    pub fn num_cells0(&self) -> usize {
        self.d.len()
    }

    /// The identity warping: `D = 1`, `T = 1`, `K = j`, `v = 1`, `k = ρ`,
    /// `v0 = 1`.
    pub fn identity(b: &Arc<SkewBicat>) -> SkewWarping {
        let n = b.num_cells0();
        let t = (0..n * n).map(|p| FinFunctor::identity(&b.homs[p])).collect();
        let mut w = SkewWarping {
            ambient: b.clone(),
            d: (0..n).collect(),
            t,
            k: b.units.clone(),
            v: HashMap::new(),
            kc: HashMap::new(),
            v0: (0..n).map(|x| b.id2(b.j(x)).mor).collect(),
        };
        for f in b.all_one_cells() {
            w.kc.insert(f, b.rho_at(f).mor);
            for g in b.all_one_cells().into_iter().filter(|g| g.src == f.tgt) {
                w.v.insert((f, g), b.id2(b.m1(g, f)).mor);
            }
        }
        w
    }

    pub fn t_functor(&self, x: usize, y: usize) -> &FinFunctor {
        &self.t[x * self.num_cells0() + y]
    }

    /// Kleisli 1-cells `x → y`, i.e. objects of `hom(x, D y)`.
    pub fn cells(&self, x: usize, y: usize) -> Vec<OneCell> {
        (0..self.ambient.hom(x, self.d[y]).num_objects())
            .map(|obj| OneCell { src: x, tgt: y, obj })
            .collect()
    }

    pub fn all_cells(&self) -> Vec<OneCell> {
        let n = self.num_cells0();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .flat_map(|(x, y)| self.cells(x, y))
            .collect()
    }

    /// Kleisli 2-cells `f ⇒ f'`.
    pub fn two_cells(&self, f: OneCell, f2: OneCell) -> Vec<TwoCell> {
        self.ambient
            .two_cells(self.under(f), self.under(f2))
            .into_iter()
            .map(|a| TwoCell { tgt: f.tgt, ..a })
            .collect()
    }

    /// The ambient 1-cell `x → D y` underlying a Kleisli 1-cell.
    pub fn under(&self, f: OneCell) -> OneCell {
        OneCell {
            tgt: self.d[f.tgt],
            ..f
        }
    }

    pub fn under2(&self, a: TwoCell) -> TwoCell {
        TwoCell {
            tgt: self.d[a.tgt],
            ..a
        }
    }

    /// Reads an ambient 1-cell `x → D y` as a Kleisli 1-cell `x → y`.
    pub fn lift(&self, c: OneCell, y: usize) -> OneCell {
        debug_assert_eq!(c.tgt, self.d[y]);
        OneCell { tgt: y, ..c }
    }

    pub fn lift2(&self, a: TwoCell, y: usize) -> TwoCell {
        debug_assert_eq!(a.tgt, self.d[y]);
        TwoCell { tgt: y, ..a }
    }

    /// `Tf: D x → D y`.
    pub fn t1(&self, f: OneCell) -> OneCell {
        OneCell {
            src: self.d[f.src],
            tgt: self.d[f.tgt],
            obj: self.t_functor(f.src, f.tgt).obj(f.obj),
        }
    }

    pub fn t2(&self, a: TwoCell) -> TwoCell {
        TwoCell {
            src: self.d[a.src],
            tgt: self.d[a.tgt],
            mor: self.t_functor(a.src, a.tgt).mor(a.mor),
        }
    }

    /// `K_x` as a Kleisli 1-cell `x → x`.
    pub fn kk(&self, x: usize) -> OneCell {
        OneCell {
            src: x,
            tgt: x,
            obj: self.k[x],
        }
    }

    /// `K_x` as an ambient 1-cell `x → D x`.
    pub fn kb(&self, x: usize) -> OneCell {
        self.under(self.kk(x))
    }

    /// Kleisli composite `Tg·f`.
    pub fn bind(&self, g: OneCell, f: OneCell) -> OneCell {
        self.lift(self.ambient.m1(self.t1(g), self.under(f)), g.tgt)
    }

    pub fn v_at(&self, f: OneCell, g: OneCell) -> TwoCell {
        TwoCell {
            src: self.d[f.src],
            tgt: self.d[g.tgt],
            mor: self.v[&(f, g)],
        }
    }

    pub fn k_at(&self, f: OneCell) -> TwoCell {
        TwoCell {
            src: f.src,
            tgt: self.d[f.tgt],
            mor: self.kc[&f],
        }
    }

    pub fn v0_at(&self, y: usize) -> TwoCell {
        TwoCell {
            src: self.d[y],
            tgt: self.d[y],
            mor: self.v0[y],
        }
    }

    pub fn label(&self, f: OneCell) -> String {
        self.ambient.label1(self.under(f))
    }

    /// Problems with table sizes, `T` as functors, and the typing of `v`,
    /// `k`, `v0`. The ambient's own structural errors come first.
    pub fn structural_errors(&self) -> Vec<String> {
        let b = &*self.ambient;
        let mut out = b.structural_errors();
        if !out.is_empty() {
            return out;
        }
        let n = b.num_cells0();
        if self.d.len() != n || self.d.iter().any(|&y| y >= n) {
            out.push("object function D is malformed".into());
            return out;
        }
        if self.t.len() != n * n || self.k.len() != n || self.v0.len() != n {
            out.push("T, K or v0 table has the wrong size".into());
            return out;
        }
        for x in 0..n {
            for y in 0..n {
                let t = self.t_functor(x, y);
                if *t.dom != **b.hom(x, self.d[y]) || *t.cod != **b.hom(self.d[x], self.d[y]) {
                    out.push(format!("T at ({}, {}) has the wrong boundary", b.cells0[x], b.cells0[y]));
                } else if let Some(v) = t.validate().first() {
                    out.push(format!(
                        "T at ({}, {}) is not a functor: {}",
                        b.cells0[x], b.cells0[y], v.law
                    ));
                }
            }
            if self.k[x] >= b.hom(x, self.d[x]).num_objects() {
                out.push(format!("K at {} is dangling", b.cells0[x]));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for y in 0..n {
            let a = self.v0_at(y);
            if !b.typed(a, self.t1(self.kk(y)), b.j(self.d[y])) {
                out.push(format!("v0 at {} is ill-typed", b.cells0[y]));
            }
        }
        let cells = self.all_cells();
        for &f in &cells {
            match self.kc.get(&f) {
                None => out.push(format!("missing k at {}", self.label(f))),
                Some(_) => {
                    let tgt = b.m1(self.t1(f), self.kb(f.src));
                    if !b.typed(self.k_at(f), self.under(f), tgt) {
                        out.push(format!("k at {} is ill-typed", self.label(f)));
                    }
                }
            }
            for g in cells.iter().copied().filter(|g| g.src == f.tgt) {
                match self.v.get(&(f, g)) {
                    None => out.push(format!("missing v at ({}, {})", self.label(f), self.label(g))),
                    Some(_) => {
                        let src = self.t1(self.bind(g, f));
                        let tgt = b.m1(self.t1(g), self.t1(f));
                        if !b.typed(self.v_at(f, g), src, tgt) {
                            out.push(format!(
                                "v at ({}, {}) is ill-typed",
                                self.label(f),
                                self.label(g)
                            ));
                        }
                    }
                }
            }
        }
        out
    }

    /// Naturality of `v` and `k`, then the five axioms over every
    /// composable string of Kleisli 1-cells.
    pub fn check(&self) -> Report {
        let subject = "skew warping";
        let errs = self.structural_errors();
        if !errs.is_empty() {
            return Report {
                subject: subject.into(),
                structural: errs,
                entries: Vec::new(),
            };
        }
        let mut tallies: Vec<Tally> = LAW_NAMES.iter().zip(LAW_TAGS).map(|(n, t)| Tally::new(n, t)).collect();
        for law in self.laws() {
            let ok = self.eval(law, self).unwrap_or(false);
            tallies[law.index()].record(ok, || self.witness(law));
        }
        let mut r = Report::new(subject);
        for t in tallies {
            r.push(t.finish());
        }
        r
    }

    pub fn is_valid(&self) -> bool {
        self.check().all_pass()
    }

    /// Every law instance, naturality first, then axioms 1 to 5.
    pub(crate) fn laws(&self) -> Vec<WarpingLaw> {
        let cells = self.all_cells();
        let after = |f: OneCell| cells.iter().copied().filter(move |g| g.src == f.tgt);
        let parallel = |f: OneCell| cells.iter().copied().filter(move |c| (c.src, c.tgt) == (f.src, f.tgt));
        let mut out = Vec::new();
        for &f in &cells {
            for f2 in parallel(f) {
                for phi in self.two_cells(f, f2) {
                    out.push(WarpingLaw::NatK { f, f2, phi });
                    for g in after(f) {
                        out.push(WarpingLaw::NatVLeft { f, f2, phi, g });
                    }
                }
            }
            for g in after(f) {
                for g2 in parallel(g) {
                    for psi in self.two_cells(g, g2) {
                        out.push(WarpingLaw::NatVRight { f, g, g2, psi });
                    }
                }
            }
        }
        for &f in &cells {
            for g in after(f) {
                for h in after(g) {
                    out.push(WarpingLaw::Axiom1 { f, g, h });
                }
            }
        }
        out.extend(cells.iter().map(|&f| WarpingLaw::Axiom2 { f }));
        out.extend(cells.iter().map(|&f| WarpingLaw::Axiom3 { f }));
        for &f in &cells {
            out.extend(after(f).map(|g| WarpingLaw::Axiom4 { f, g }));
        }
        out.extend((0..self.num_cells0()).map(|x| WarpingLaw::Axiom5 { x }));
        out
    }

    /// Components read by a law instance.
    pub(crate) fn keys(&self, law: WarpingLaw) -> Vec<Key> {
        use WarpingLaw::*;
        match law {
            NatK { f, f2, .. } => vec![Key::K(f2), Key::K(f)],
            NatVLeft { f, f2, g, .. } => vec![Key::V(f2, g), Key::V(f, g)],
            NatVRight { f, g, g2, .. } => vec![Key::V(f, g2), Key::V(f, g)],
            Axiom1 { f, g, h } => vec![
                Key::V(f, self.bind(h, g)),
                Key::V(g, h),
                Key::V(self.bind(g, f), h),
                Key::V(f, g),
            ],
            Axiom2 { f } => vec![Key::K(f), Key::V(self.kk(f.src), f), Key::V0(f.src)],
            Axiom3 { f } => vec![Key::V(f, self.kk(f.tgt)), Key::V0(f.tgt)],
            Axiom4 { f, g } => vec![Key::K(self.bind(g, f)), Key::V(f, g), Key::K(f)],
            Axiom5 { x } => vec![Key::K(self.kk(x)), Key::V0(x)],
        }
    }

    fn witness(&self, law: WarpingLaw) -> Vec<String> {
        use WarpingLaw::*;
        let b = &*self.ambient;
        let l = |f: OneCell| self.label(f);
        let l2 = |a: TwoCell| b.label2(self.under2(a));
        match law {
            NatK { phi, .. } => vec![l2(phi)],
            NatVLeft { phi, g, .. } => vec![l2(phi), l(g)],
            NatVRight { f, psi, .. } => vec![l(f), l2(psi)],
            Axiom1 { f, g, h } => vec![l(f), l(g), l(h)],
            Axiom2 { f } | Axiom3 { f } => vec![l(f)],
            Axiom4 { f, g } => vec![l(f), l(g)],
            Axiom5 { x } => vec![l(self.kk(x))],
        }
    }

    /// Evaluates one law instance with components drawn from `c`; `None`
    /// if a component it reads is unknown.
    pub(crate) fn eval(&self, law: WarpingLaw, c: &impl Components) -> Option<bool> {
        use WarpingLaw::*;
        let b = &*self.ambient;
        let v = |f: OneCell, g: OneCell| {
            c.v(f, g).map(|mor| TwoCell { src: self.d[f.src], tgt: self.d[g.tgt], mor })
        };
        let k = |f: OneCell| c.k(f).map(|mor| TwoCell { src: f.src, tgt: self.d[f.tgt], mor });
        let v0 = |y: usize| c.v0(y).map(|mor| TwoCell { src: self.d[y], tgt: self.d[y], mor });
        Some(match law {
            NatK { f, f2, phi } => {
                let lhs = b.vcomp(k(f2)?, self.under2(phi));
                lhs == b.vcomp(b.wr(self.t2(phi), self.kb(f.src)), k(f)?)
            }
            NatVLeft { f, f2, phi, g } => {
                let whisk = self.lift2(b.wl(self.t1(g), self.under2(phi)), g.tgt);
                let lhs = b.vcomp(v(f2, g)?, self.t2(whisk));
                lhs == b.vcomp(b.wl(self.t1(g), self.t2(phi)), v(f, g)?)
            }
            NatVRight { f, g, g2, psi } => {
                let whisk = self.lift2(b.wr(self.t2(psi), self.under(f)), g.tgt);
                let lhs = b.vcomp(v(f, g2)?, self.t2(whisk));
                lhs == b.vcomp(b.wr(self.t2(psi), self.t1(f)), v(f, g)?)
            }
            Axiom1 { f, g, h } => {
                let (tf, tg, th, uf) = (self.t1(f), self.t1(g), self.t1(h), self.under(f));
                let vgh = v(g, h)?;
                let top = b.vpath(&[v(f, self.bind(h, g))?, b.wr(vgh, tf), b.alpha_at(tf, tg, th)]);
                let bottom = b.vpath(&[
                    self.t2(self.lift2(b.wr(vgh, uf), h.tgt)),
                    self.t2(self.lift2(b.alpha_at(uf, tg, th), h.tgt)),
                    v(self.bind(g, f), h)?,
                    b.wl(th, v(f, g)?),
                ]);
                top == bottom
            }
            Axiom2 { f } => {
                let (x, tf) = (f.src, self.t1(f));
                let lhs = b.vpath(&[
                    self.t2(self.lift2(k(f)?, f.tgt)),
                    v(self.kk(x), f)?,
                    b.wl(tf, v0(x)?),
                ]);
                lhs == b.rho_at(tf)
            }
            Axiom3 { f } => {
                let (y, tf, uf) = (f.tgt, self.t1(f), self.under(f));
                let v0y = v0(y)?;
                let lhs = b.vpath(&[v(f, self.kk(y))?, b.wr(v0y, tf), b.lambda_at(tf)]);
                let rhs = b.vcomp(
                    self.t2(self.lift2(b.lambda_at(uf), y)),
                    self.t2(self.lift2(b.wr(v0y, uf), y)),
                );
                lhs == rhs
            }
            Axiom4 { f, g } => {
                let (kx, tf, tg) = (self.kb(f.src), self.t1(f), self.t1(g));
                let lhs = b.vpath(&[k(self.bind(g, f))?, b.wr(v(f, g)?, kx), b.alpha_at(kx, tf, tg)]);
                lhs == b.wl(tg, k(f)?)
            }
            Axiom5 { x } => {
                let kx = self.kb(x);
                let lhs = b.vpath(&[k(self.kk(x))?, b.wr(v0(x)?, kx), b.lambda_at(kx)]);
                lhs == b.id2(kx)
            }
        })
    }

    /// Whether every component of `v`, `k` and `v0` has a two-sided inverse.
    pub fn components_invertible(&self) -> bool {
        let b = &*self.ambient;
        self.v.keys().all(|&(f, g)| b.is_iso2(self.v_at(f, g)))
            && self.kc.keys().all(|&f| b.is_iso2(self.k_at(f)))
            && (0..self.num_cells0()).all(|y| b.is_iso2(self.v0_at(y)))
    }

    /// A valid skew warping whose `v`, `k`, `v0` are invertible.
    pub fn is_warping(&self) -> bool {
        self.is_valid() && self.components_invertible()
    }
}

/// The Kleisli skew bicategory: `hom_T(x, y) = hom(x, D y)`, composite
/// `Tg·f`, units `K`, `α_T = α∘(v·1)`, `λ_T = λ∘(v0·1)`, `ρ_T = k`.
///
/// The warping must be structurally sound; laws are not required, so the
/// construction can be traced axiom by axiom.
pub fn kleisli_warping(w: &SkewWarping) -> Result<SkewBicat> {
    if let Some(e) = w.structural_errors().first() {
        return Err(StructureError::Malformed(e.clone()));
    }
    let b = &*w.ambient;
    let n = w.num_cells0();
    let homs: Vec<Arc<FinCat>> = (0..n * n).map(|p| b.hom(p / n, w.d[p % n]).clone()).collect();
    let mut comp = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (hyz, hxy) = (&homs[y * n + z], &homs[x * n + y]);
                let dom = Arc::new(product_category(hyz, hxy));
                let (nf, mf) = (hxy.num_objects(), hxy.num_morphisms());
                let obj_map = (0..dom.num_objects())
                    .map(|p| {
                        let g = OneCell { src: y, tgt: z, obj: p / nf };
                        let f = OneCell { src: x, tgt: y, obj: p % nf };
                        w.bind(g, f).obj
                    })
                    .collect();
                let mor_map = (0..dom.num_morphisms())
                    .map(|q| {
                        let psi = TwoCell { src: y, tgt: z, mor: q / mf };
                        let phi = TwoCell { src: x, tgt: y, mor: q % mf };
                        b.m2(w.t2(psi), w.under2(phi)).mor
                    })
                    .collect();
                comp.push(FinFunctor {
                    dom,
                    cod: homs[x * n + z].clone(),
                    obj_map,
                    mor_map,
                });
            }
        }
    }
    let mut out = SkewBicat {
        cells0: b.cells0.clone(),
        homs,
        comp,
        units: w.k.clone(),
        alpha: HashMap::new(),
        lambda: HashMap::new(),
        rho: HashMap::new(),
    };
    for (f, g, h) in out.composable_triples() {
        let a = b.vcomp(
            b.alpha_at(w.under(f), w.t1(g), w.t1(h)),
            b.wr(w.v_at(g, h), w.under(f)),
        );
        out.alpha.insert((f, g, h), a.mor);
    }
    for f in out.all_one_cells() {
        let uf = w.under(f);
        let l = b.vcomp(b.lambda_at(uf), b.wr(w.v0_at(f.tgt), uf));
        out.lambda.insert(f, l.mor);
        out.rho.insert(f, w.k_at(f).mor);
    }
    Ok(out)
}

/// The category underlying a locally discrete skew bicategory; morphisms are
/// listed by (source, target, object).
pub fn underlying_category(b: &SkewBicat) -> Result<FinCat> {
    if !b.is_locally_discrete() {
        return Err(StructureError::Precondition(
            "ambient is not locally discrete".into(),
        ));
    }
    let cells = b.all_one_cells();
    let index: HashMap<OneCell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let morphisms = cells
        .iter()
        .map(|&c| MorphismData {
            name: b.hom(c.src, c.tgt).object_name(c.obj).to_string(),
            src: c.src,
            tgt: c.tgt,
        })
        .collect();
    let ids = (0..b.num_cells0()).map(|x| index[&b.j(x)]).collect();
    Ok(FinCat::from_fn(b.cells0.clone(), morphisms, ids, |g, f| {
        index[&b.m1(cells[g], cells[f])]
    }))
}

/// An mw-monad as a skew warping on the locally discrete skew bicategory of
/// its category, with identity 2-cells. Components whose identity would be
/// ill-typed are set to the identity of their source, so a violated mw
/// equation surfaces as a structural error of the warping.
pub fn mw_as_warping(t: &MwMonad) -> Result<SkewWarping> {
    let c = &*t.base;
    let b = Arc::new(SkewBicat::locally_discrete(c)?);
    let n = c.num_objects();
    let pos = |f: MorId| {
        c.hom(c.src(f), c.tgt(f))
            .iter()
            .position(|&g| g == f)
            .expect("morphism lies in its hom-set")
    };
    let tf = (0..n * n)
        .map(|p| {
            let (x, y) = (p / n, p % n);
            let obj_map: Vec<ObjId> = t.t[p].iter().map(|&g| pos(g)).collect();
            FinFunctor {
                dom: b.hom(x, t.d[y]).clone(),
                cod: b.hom(t.d[x], t.d[y]).clone(),
                mor_map: obj_map.clone(),
                obj_map,
            }
        })
        .collect();
    let mut w = SkewWarping {
        ambient: b.clone(),
        d: t.d.clone(),
        t: tf,
        k: t.k.iter().map(|&k| pos(k)).collect(),
        v: HashMap::new(),
        kc: HashMap::new(),
        v0: Vec::new(),
    };
    // discrete homs: the identity 2-cell on object i is morphism i
    w.v0 = (0..n).map(|y| w.t1(w.kk(y)).obj).collect();
    for f in w.all_cells() {
        w.kc.insert(f, f.obj);
        for g in w.all_cells().into_iter().filter(|g| g.src == f.tgt) {
            let src = w.t1(w.bind(g, f)).obj;
            w.v.insert((f, g), src);
        }
    }
    Ok(w)
}

/// Inverse of [`mw_as_warping`] on locally discrete ambients; the base
/// category is [`underlying_category`] of the ambient.
pub fn warping_as_mw(w: &SkewWarping) -> Result<MwMonad> {
    let b = &*w.ambient;
    let c = Arc::new(underlying_category(b)?);
    let n = w.num_cells0();
    let index: HashMap<OneCell, usize> =
        b.all_one_cells().into_iter().enumerate().map(|(i, c)| (c, i)).collect();
    let table = (0..n * n)
        .map(|p| {
            let (x, y) = (p / n, p % n);
            w.cells(x, y).into_iter().map(|f| index[&w.t1(f)]).collect()
        })
        .collect();
    Ok(MwMonad {
        base: c,
        d: w.d.clone(),
        k: (0..n).map(|x| index[&w.kb(x)]).collect(),
        t: table,
    })
}

/// Per-axiom verdicts of the ambient, the warping and the Kleisli
/// construction on one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomTrace {
    pub axiom: usize,
    pub ambient: bool,
    pub warping: bool,
    pub kleisli: bool,
}

impl AxiomTrace {
    /// Axiom `n` of the ambient and of the warping give axiom `n` of the
    /// Kleisli construction.
    pub fn consistent(&self) -> bool {
        !(self.ambient && self.warping) || self.kleisli
    }
}

/// Checks each axiom separately on the ambient, the warping and its Kleisli
/// construction. Requires the naturality conditions of both the ambient and
/// the warping, which every axiom relies on.
pub fn remark_trace(w: &SkewWarping) -> Result<[AxiomTrace; 5]> {
    let wr = w.check();
    if wr.has_structural_errors() {
        return Err(StructureError::Malformed(wr.structural[0].clone()));
    }
    let ar = w.ambient.check();
    let natural = |r: &Report| {
        r.entries
            .iter()
            .filter(|e| e.name.contains("naturality"))
            .all(|e| e.status == Status::Pass)
    };
    if !natural(&ar) || !natural(&wr) {
        return Err(StructureError::Precondition(
            "naturality of the ambient and the warping".into(),
        ));
    }
    let kr = kleisli_warping(w)?.check();
    Ok(std::array::from_fn(|i| AxiomTrace {
        axiom: i + 1,
        ambient: ar.passed(AXIOM_NAMES[i]),
        warping: wr.passed(LAW_NAMES[i + 2]),
        kleisli: kr.passed(AXIOM_NAMES[i]),
    }))
}

/// Verifies axioms 3 to 5 of a warping on a bicategory that satisfies
/// axioms 1 and 2 with invertible `v`, `k`, `v0`. A failing axiom is a
/// falsification of the redundancy claim.
pub fn check_redundancy_warping(w: &SkewWarping) -> Result<Report> {
    let full = w.check();
    if let Some(e) = full.structural.first() {
        return Err(StructureError::Malformed(e.clone()));
    }
    if !w.ambient.is_bicategory() {
        return Err(StructureError::Precondition("ambient is not a bicategory".into()));
    }
    if !w.components_invertible() {
        return Err(StructureError::Precondition("v, k and v0 must be invertible".into()));
    }
    let assumed = &LAW_NAMES[..4];
    if let Some(bad) = assumed.iter().find(|name| !full.passed(name)) {
        return Err(StructureError::Precondition(format!("{bad} does not hold")));
    }
    let mut r = Report::new("warping redundancy: axioms 3-5 from 1-2");
    for mut e in full.entries.into_iter().filter(|e| LAW_NAMES[4..].contains(&e.name.as_str())) {
        if e.status == Status::Fail {
            e.status = Status::Falsification;
        }
        r.push(e);
    }
    Ok(r)
}
