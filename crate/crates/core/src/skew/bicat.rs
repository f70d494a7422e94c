use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::moncat::SkewMonCat;
use super::monoidal::{AXIOM_NAMES, AXIOM_TAGS};
use crate::error::{Result, StructureError};
use crate::fincore::{product_category, FinCat, FinFunctor, MorId, ObjId};
use crate::report::{Report, Tally};

/// A 1-cell: object `obj` of the hom-category from 0-cell `src` to `tgt`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OneCell {
    pub src: usize,
    pub tgt: usize,
    pub obj: ObjId,
}

/// A 2-cell: morphism `mor` of the hom-category from `src` to `tgt`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TwoCell {
    pub src: usize,
    pub tgt: usize,
    pub mor: MorId,
}

/// Key of an associator component `α_{f,g,h}: (hg)f → h(gf)`.
pub type Triple = (OneCell, OneCell, OneCell);

/// A skew bicategory with finitely many 0-cells and finite hom-categories.
///
/// `homs[x*n + y]` is the hom-category from `x` to `y`; `comp[(x*n + y)*n + z]`
/// is the composition functor `hom(y,z) × hom(x,y) → hom(x,z)` with domain
/// indexed as in [`product_category`]. Composition is written `M(g, f) = gf`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewBicat {
    pub cells0: Vec<String>,
    pub homs: Vec<Arc<FinCat>>,
    pub comp: Vec<FinFunctor>,
    pub units: Vec<ObjId>,
    pub alpha: HashMap<Triple, MorId>,
    pub lambda: HashMap<OneCell, MorId>,
    pub rho: HashMap<OneCell, MorId>,
}

impl SkewBicat {
    pub fn num_cells0(&self) -> usize {
        self.cells0.len()
    }

    pub fn hom(&self, x: usize, y: usize) -> &Arc<FinCat> {
        &self.homs[x * self.num_cells0() + y]
    }

    pub fn comp_functor(&self, x: usize, y: usize, z: usize) -> &FinFunctor {
        let n = self.num_cells0();
        &self.comp[(x * n + y) * n + z]
    }

    pub fn one_cells(&self, x: usize, y: usize) -> Vec<OneCell> {
        (0..self.hom(x, y).num_objects())
            .map(|obj| OneCell { src: x, tgt: y, obj })
            .collect()
    }

    /// Every 1-cell, ordered by (source, target, object).
    pub fn all_one_cells(&self) -> Vec<OneCell> {
        let n = self.num_cells0();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .flat_map(|(x, y)| self.one_cells(x, y))
            .collect()
    }

    /// Composable triples `(f, g, h)` with `f: W→X, g: X→Y, h: Y→Z`.
    pub fn composable_triples(&self) -> Vec<Triple> {
        let cells = self.all_one_cells();
        let mut out = Vec::new();
        for &f in &cells {
            for &g in cells.iter().filter(|g| g.src == f.tgt) {
                for &h in cells.iter().filter(|h| h.src == g.tgt) {
                    out.push((f, g, h));
                }
            }
        }
        out
    }

    pub fn j(&self, x: usize) -> OneCell {
        OneCell {
            src: x,
            tgt: x,
            obj: self.units[x],
        }
    }

    /// `gf` for `f: X→Y`, `g: Y→Z`.
    pub fn m1(&self, g: OneCell, f: OneCell) -> OneCell {
        assert_eq!(g.src, f.tgt, "composing non-composable 1-cells");
        let (x, y, z) = (f.src, f.tgt, g.tgt);
        let nf = self.hom(x, y).num_objects();
        OneCell {
            src: x,
            tgt: z,
            obj: self.comp_functor(x, y, z).obj(g.obj * nf + f.obj),
        }
    }

    /// Horizontal composite `β·α` of 2-cells.
    pub fn m2(&self, b: TwoCell, a: TwoCell) -> TwoCell {
        assert_eq!(b.src, a.tgt, "composing non-composable 2-cells");
        let (x, y, z) = (a.src, a.tgt, b.tgt);
        let mf = self.hom(x, y).num_morphisms();
        TwoCell {
            src: x,
            tgt: z,
            mor: self.comp_functor(x, y, z).mor(b.mor * mf + a.mor),
        }
    }

    pub fn id2(&self, f: OneCell) -> TwoCell {
        TwoCell {
            src: f.src,
            tgt: f.tgt,
            mor: self.hom(f.src, f.tgt).identity(f.obj),
        }
    }

    /// Vertical composite `b∘a`.
    pub fn vcomp(&self, b: TwoCell, a: TwoCell) -> TwoCell {
        assert_eq!((b.src, b.tgt), (a.src, a.tgt), "2-cells in different homs");
        TwoCell {
            mor: self.hom(a.src, a.tgt).compose(b.mor, a.mor),
            ..a
        }
    }

    /// Vertical composite of a path given in application order.
    pub fn vpath(&self, path: &[TwoCell]) -> TwoCell {
        let (first, rest) = path.split_first().expect("empty path");
        rest.iter().fold(*first, |acc, &next| self.vcomp(next, acc))
    }

    pub fn dom2(&self, a: TwoCell) -> OneCell {
        OneCell {
            src: a.src,
            tgt: a.tgt,
            obj: self.hom(a.src, a.tgt).src(a.mor),
        }
    }

    pub fn cod2(&self, a: TwoCell) -> OneCell {
        OneCell {
            src: a.src,
            tgt: a.tgt,
            obj: self.hom(a.src, a.tgt).tgt(a.mor),
        }
    }

    /// 2-cells `f ⇒ f'`.
    pub fn two_cells(&self, f: OneCell, f2: OneCell) -> Vec<TwoCell> {
        debug_assert_eq!((f.src, f.tgt), (f2.src, f2.tgt));
        self.hom(f.src, f.tgt)
            .hom(f.obj, f2.obj)
            .iter()
            .map(|&mor| TwoCell {
                src: f.src,
                tgt: f.tgt,
                mor,
            })
            .collect()
    }

    /// `kα` (left whiskering by a 1-cell).
    pub fn wl(&self, k: OneCell, a: TwoCell) -> TwoCell {
        self.m2(self.id2(k), a)
    }

    /// `αf` (right whiskering by a 1-cell).
    pub fn wr(&self, a: TwoCell, f: OneCell) -> TwoCell {
        self.m2(a, self.id2(f))
    }

    pub fn alpha_at(&self, f: OneCell, g: OneCell, h: OneCell) -> TwoCell {
        TwoCell {
            src: f.src,
            tgt: h.tgt,
            mor: self.alpha[&(f, g, h)],
        }
    }

    pub fn lambda_at(&self, f: OneCell) -> TwoCell {
        TwoCell {
            src: f.src,
            tgt: f.tgt,
            mor: self.lambda[&f],
        }
    }

    pub fn rho_at(&self, f: OneCell) -> TwoCell {
        TwoCell {
            src: f.src,
            tgt: f.tgt,
            mor: self.rho[&f],
        }
    }

    pub fn inverse2(&self, a: TwoCell) -> Option<TwoCell> {
        self.hom(a.src, a.tgt)
            .inverse(a.mor)
            .map(|mor| TwoCell { mor, ..a })
    }

    pub fn is_iso2(&self, a: TwoCell) -> bool {
        self.inverse2(a).is_some()
    }

    pub(crate) fn typed(&self, a: TwoCell, src: OneCell, tgt: OneCell) -> bool {
        (a.src, a.tgt) == (src.src, src.tgt)
            && a.mor < self.hom(a.src, a.tgt).num_morphisms()
            && self.dom2(a) == src
            && self.cod2(a) == tgt
    }

    /// Table-level problems: invalid hom-categories or composition functors,
    /// missing or ill-typed components.
    pub fn structural_errors(&self) -> Vec<String> {
        let n = self.num_cells0();
        let mut out = Vec::new();
        if self.homs.len() != n * n || self.comp.len() != n * n * n || self.units.len() != n {
            out.push("table sizes do not match the number of 0-cells".into());
            return out;
        }
        for x in 0..n {
            for y in 0..n {
                let rep = self.hom(x, y).validate();
                if !rep.is_ok() {
                    out.push(format!(
                        "hom({}, {}) is not a category: {}",
                        self.cells0[x], self.cells0[y], rep.violations[0].law
                    ));
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        for x in 0..n {
            if self.units[x] >= self.hom(x, x).num_objects() {
                out.push(format!("unit at {} is dangling", self.cells0[x]));
            }
            for y in 0..n {
                for z in 0..n {
                    let m = self.comp_functor(x, y, z);
                    let expected = product_category(self.hom(y, z), self.hom(x, y));
                    if m.dom.num_objects() != expected.num_objects()
                        || m.dom.num_morphisms() != expected.num_morphisms()
                        || *m.cod != **self.hom(x, z)
                    {
                        out.push(format!(
                            "composition at ({}, {}, {}) has the wrong boundary",
                            self.cells0[x], self.cells0[y], self.cells0[z]
                        ));
                    } else if let Some(v) = m.validate().first() {
                        out.push(format!(
                            "composition at ({}, {}, {}) is not a functor: {}",
                            self.cells0[x], self.cells0[y], self.cells0[z], v.law
                        ));
                    }
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        for f in self.all_one_cells() {
            let (jx, jy) = (self.j(f.src), self.j(f.tgt));
            match self.lambda.get(&f) {
                None => out.push(format!("missing lambda at {}", self.label1(f))),
                Some(&mor) => {
                    let a = TwoCell { src: f.src, tgt: f.tgt, mor };
                    if !self.typed(a, self.m1(jy, f), f) {
                        out.push(format!("lambda at {} is ill-typed", self.label1(f)));
                    }
                }
            }
            match self.rho.get(&f) {
                None => out.push(format!("missing rho at {}", self.label1(f))),
                Some(&mor) => {
                    let a = TwoCell { src: f.src, tgt: f.tgt, mor };
                    if !self.typed(a, f, self.m1(f, jx)) {
                        out.push(format!("rho at {} is ill-typed", self.label1(f)));
                    }
                }
            }
        }
        for (f, g, h) in self.composable_triples() {
            match self.alpha.get(&(f, g, h)) {
                None => out.push(format!(
                    "missing alpha at ({}, {}, {})",
                    self.label1(f),
                    self.label1(g),
                    self.label1(h)
                )),
                Some(&mor) => {
                    let a = TwoCell { src: f.src, tgt: h.tgt, mor };
                    let src = self.m1(self.m1(h, g), f);
                    let tgt = self.m1(h, self.m1(g, f));
                    if !self.typed(a, src, tgt) {
                        out.push(format!(
                            "alpha at ({}, {}, {}) is ill-typed",
                            self.label1(f),
                            self.label1(g),
                            self.label1(h)
                        ));
                    }
                }
            }
        }
        out
    }

    pub fn label1(&self, f: OneCell) -> String {
        format!(
            "{}:{}->{}",
            self.hom(f.src, f.tgt).object_name(f.obj),
            self.cells0[f.src],
            self.cells0[f.tgt]
        )
    }

    pub fn label2(&self, a: TwoCell) -> String {
        format!(
            "{}:{}->{}",
            self.hom(a.src, a.tgt).morphism_name(a.mor),
            self.cells0[a.src],
            self.cells0[a.tgt]
        )
    }

    /// Naturality of α, λ, ρ and the five axioms over all composable 1-cells.
    pub fn check(&self) -> Report {
        let subject = "skew bicategory";
        let errs = self.structural_errors();
        if !errs.is_empty() {
            return Report {
                subject: subject.into(),
                structural: errs,
                entries: Vec::new(),
            };
        }
        let mut report = Report::new(subject);
        let l = |f: OneCell| self.label1(f);
        let mut nat_a = Tally::new("skew.naturality.alpha", "naturality of alpha");
        let mut nat_l = Tally::new("skew.naturality.lambda", "naturality of lambda");
        let mut nat_r = Tally::new("skew.naturality.rho", "naturality of rho");
        let cells = self.all_one_cells();
        let parallel = |f: OneCell| cells.iter().filter(move |c| (c.src, c.tgt) == (f.src, f.tgt));
        for &f in &cells {
            for &f2 in parallel(f) {
                for phi in self.two_cells(f, f2) {
                    let (jx, jy) = (self.j(f.src), self.j(f.tgt));
                    let lhs = self.vcomp(self.lambda_at(f2), self.wl(jy, phi));
                    let rhs = self.vcomp(phi, self.lambda_at(f));
                    nat_l.record(lhs == rhs, || vec![self.label2(phi)]);
                    let lhs = self.vcomp(self.rho_at(f2), phi);
                    let rhs = self.vcomp(self.wr(phi, jx), self.rho_at(f));
                    nat_r.record(lhs == rhs, || vec![self.label2(phi)]);
                }
            }
        }
        for (f, g, h) in self.composable_triples() {
            // α_{f,g,h}: (hg)f → h(gf), natural in each argument
            for &f2 in parallel(f) {
                for phi in self.two_cells(f, f2) {
                    let lhs = self.vcomp(self.alpha_at(f2, g, h), self.wl(self.m1(h, g), phi));
                    let rhs = self.vcomp(self.wl(h, self.wl(g, phi)), self.alpha_at(f, g, h));
                    nat_a.record(lhs == rhs, || vec![self.label2(phi), l(g), l(h)]);
                }
            }
            for &g2 in parallel(g) {
                for phi in self.two_cells(g, g2) {
                    let lhs = self.vcomp(self.alpha_at(f, g2, h), self.wr(self.wl(h, phi), f));
                    let rhs = self.vcomp(self.wl(h, self.wr(phi, f)), self.alpha_at(f, g, h));
                    nat_a.record(lhs == rhs, || vec![l(f), self.label2(phi), l(h)]);
                }
            }
            for &h2 in parallel(h) {
                for phi in self.two_cells(h, h2) {
                    let lhs = self.vcomp(self.alpha_at(f, g, h2), self.wr(self.wr(phi, g), f));
                    let rhs = self.vcomp(self.wr(phi, self.m1(g, f)), self.alpha_at(f, g, h));
                    nat_a.record(lhs == rhs, || vec![l(f), l(g), self.label2(phi)]);
                }
            }
        }
        report.push(nat_a.finish());
        report.push(nat_l.finish());
        report.push(nat_r.finish());

        let mut ax: Vec<Tally> = AXIOM_NAMES
            .iter()
            .zip(AXIOM_TAGS)
            .map(|(n, t)| Tally::new(n, t))
            .collect();
        for (f, g, h) in self.composable_triples() {
            for k in cells.iter().copied().filter(|k| k.src == h.tgt) {
                let top = self.vpath(&[
                    self.wr(self.alpha_at(g, h, k), f),
                    self.alpha_at(f, self.m1(h, g), k),
                    self.wl(k, self.alpha_at(f, g, h)),
                ]);
                let bottom = self.vcomp(
                    self.alpha_at(self.m1(g, f), h, k),
                    self.alpha_at(f, g, self.m1(k, h)),
                );
                ax[0].record(top == bottom, || vec![l(f), l(g), l(h), l(k)]);
            }
        }
        for &f in &cells {
            for g in cells.iter().copied().filter(|g| g.src == f.tgt) {
                let (jy, jz) = (self.j(f.tgt), self.j(g.tgt));
                let gf = self.m1(g, f);
                let lhs = self.vpath(&[
                    self.wr(self.rho_at(g), f),
                    self.alpha_at(f, jy, g),
                    self.wl(g, self.lambda_at(f)),
                ]);
                ax[1].record(lhs == self.id2(gf), || vec![l(f), l(g)]);
                let lhs = self.vcomp(self.lambda_at(gf), self.alpha_at(f, g, jz));
                ax[2].record(lhs == self.wr(self.lambda_at(g), f), || vec![l(f), l(g)]);
                let jx = self.j(f.src);
                let lhs = self.vcomp(self.alpha_at(jx, f, g), self.rho_at(gf));
                ax[3].record(lhs == self.wl(g, self.rho_at(f)), || vec![l(f), l(g)]);
            }
        }
        for x in 0..self.num_cells0() {
            let jx = self.j(x);
            let lhs = self.vcomp(self.lambda_at(jx), self.rho_at(jx));
            ax[4].record(lhs == self.id2(jx), || vec![l(jx)]);
        }
        for t in ax {
            report.push(t.finish());
        }
        report
    }

    /// α, λ, ρ all invertible.
    pub fn is_bicategory(&self) -> bool {
        let a = self.alpha.iter().all(|(&(f, _, h), &mor)| {
            self.is_iso2(TwoCell { src: f.src, tgt: h.tgt, mor })
        });
        let lr = self
            .lambda
            .iter()
            .chain(&self.rho)
            .all(|(&f, &mor)| self.is_iso2(TwoCell { src: f.src, tgt: f.tgt, mor }));
        a && lr
    }

    /// Whether every hom-category has only identity morphisms.
    pub fn is_locally_discrete(&self) -> bool {
        self.homs.iter().all(|h| h.is_discrete())
    }

    /// A category as a skew bicategory with only identity 2-cells: the
    /// objects of `hom(x, y)` are the morphisms `x → y` in declaration order.
    pub fn locally_discrete(c: &FinCat) -> Result<SkewBicat> {
        let n = c.num_objects();
        let position = |f: MorId| c.hom(c.src(f), c.tgt(f)).iter().position(|&g| g == f);
        let mut homs = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let names = c.hom(x, y).iter().map(|&f| c.morphism_name(f).to_string());
                homs.push(Arc::new(FinCat::discrete(names.collect())));
            }
        }
        let mut comp = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (hyz, hxy) = (&homs[y * n + z], &homs[x * n + y]);
                    let dom = Arc::new(product_category(hyz, hxy));
                    let cod = homs[x * n + z].clone();
                    let nf = hxy.num_objects();
                    let obj_map = (0..dom.num_objects())
                        .map(|p| {
                            let g = c.hom(y, z)[p / nf];
                            let f = c.hom(x, y)[p % nf];
                            let gf = c.compose(g, f);
                            if (c.src(gf), c.tgt(gf)) != (x, z) {
                                return Err(StructureError::IllTyped {
                                    name: c.morphism_name(gf).into(),
                                    detail: format!(
                                        "composite of {} and {}",
                                        c.morphism_name(g),
                                        c.morphism_name(f)
                                    ),
                                });
                            }
                            Ok(position(gf).expect("typed morphism lies in its hom-set"))
                        })
                        .collect::<Result<Vec<ObjId>>>()?;
                    // discrete categories: morphism index = object index
                    comp.push(FinFunctor {
                        dom,
                        cod,
                        mor_map: obj_map.clone(),
                        obj_map,
                    });
                }
            }
        }
        let units = (0..n)
            .map(|x| {
                position(c.identity(x)).ok_or_else(|| StructureError::IllTyped {
                    name: c.morphism_name(c.identity(x)).into(),
                    detail: "identity with wrong endpoints".into(),
                })
            })
            .collect::<Result<_>>()?;
        let mut b = SkewBicat {
            cells0: c.objects().to_vec(),
            homs,
            comp,
            units,
            alpha: HashMap::new(),
            lambda: HashMap::new(),
            rho: HashMap::new(),
        };
        b.fill_identity_constraints();
        Ok(b)
    }

    /// Sets α, λ, ρ to identity 2-cells wherever source equals target; used
    /// for locally discrete and strict structures.
    pub fn fill_identity_constraints(&mut self) {
        for (f, g, h) in self.composable_triples() {
            let t = self.m1(h, self.m1(g, f));
            self.alpha.insert((f, g, h), self.id2(t).mor);
        }
        for f in self.all_one_cells() {
            let fl = self.id2(f).mor;
            self.lambda.insert(f, fl);
            self.rho.insert(f, fl);
        }
    }

    /// The one-object skew bicategory of a skew monoidal category:
    /// `M(g, f) = g ⊗ f`, so `α_{f,g,h} = α_{h,g,f}` of the monoidal side.
    pub fn suspension(c: &SkewMonCat) -> SkewBicat {
        let cell = |obj| OneCell { src: 0, tgt: 0, obj };
        let n = c.num_objects();
        let mut alpha = HashMap::new();
        for f in 0..n {
            for g in 0..n {
                for h in 0..n {
                    alpha.insert((cell(f), cell(g), cell(h)), c.alpha_at(h, g, f));
                }
            }
        }
        SkewBicat {
            cells0: vec!["*".into()],
            homs: vec![c.base.clone()],
            comp: vec![c.tensor.clone()],
            units: vec![c.unit],
            alpha,
            lambda: (0..n).map(|x| (cell(x), c.lambda[x])).collect(),
            rho: (0..n).map(|x| (cell(x), c.rho[x])).collect(),
        }
    }

    /// Inverse of [`SkewBicat::suspension`].
    pub fn desuspension(&self) -> Result<SkewMonCat> {
        if self.num_cells0() != 1 {
            return Err(StructureError::Precondition(format!(
                "desuspension needs exactly one 0-cell, found {}",
                self.num_cells0()
            )));
        }
        let cell = |obj| OneCell { src: 0, tgt: 0, obj };
        let base = self.homs[0].clone();
        let n = base.num_objects();
        let get = |m: &HashMap<OneCell, MorId>, x| {
            m.get(&cell(x))
                .copied()
                .ok_or_else(|| StructureError::Malformed(format!("missing component at {x}")))
        };
        let mut alpha = vec![0; n * n * n];
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    alpha[(x * n + y) * n + z] = *self
                        .alpha
                        .get(&(cell(z), cell(y), cell(x)))
                        .ok_or_else(|| StructureError::Malformed("missing alpha component".into()))?;
                }
            }
        }
        Ok(SkewMonCat {
            base,
            tensor: self.comp[0].clone(),
            unit: self.units[0],
            alpha,
            lambda: (0..n).map(|x| get(&self.lambda, x)).collect::<Result<_>>()?,
            rho: (0..n).map(|x| get(&self.rho, x)).collect::<Result<_>>()?,
        })
    }
}
