use std::collections::HashMap;
use std::sync::Arc;

use super::warping::{mw_as_warping, SkewWarping};
use crate::error::{Result, StructureError};
use crate::fincore::{FinFunctor, MorId};
use crate::mw::MwAlgebra;
use crate::report::{Report, Status, Tally};
use crate::skew::{OneCell, TwoCell};

/// An algebra for a skew warping: a carrier 0-cell `A`, functors
/// `E: hom(x, A) → hom(D x, A)` and 2-cells `e`, `e0`.
///
/// `a` arguments are ambient 1-cells `y → A`; `x` arguments are Kleisli
/// 1-cells as in [`SkewWarping`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WarpingAlgebra {
    pub warping: Arc<SkewWarping>,
    pub carrier: usize,
    /// `e[x]`: `hom(x, A) → hom(D x, A)`.
    pub e: Vec<FinFunctor>,
    /// `e_{a,x}: E(Ea·x) → Ea·Tx`, keyed by `(x, a)`.
    pub ec: HashMap<(OneCell, OneCell), MorId>,
    /// `e0_a: a → Ea·K`.
    pub e0: HashMap<OneCell, MorId>,
}

pub const ALGEBRA_LAW_NAMES: [&str; 5] = [
    "algebra.naturality.e",
    "algebra.naturality.e0",
    "algebra.axiom1",
    "algebra.axiom2",
    "algebra.axiom3",
];

const ALGEBRA_LAW_TAGS: [&str; 5] = [
    "naturality of e",
    "naturality of e0",
    "algebra axiom 1: e against v and alpha",
    "algebra axiom 2: E(e0) against v0 and rho",
    "algebra axiom 3: e0 against k and alpha",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum AlgebraLaw {
    NatE0 { a: OneCell, a2: OneCell, phi: TwoCell },
    NatEA { x: OneCell, a: OneCell, a2: OneCell, phi: TwoCell },
    NatEX { x: OneCell, x2: OneCell, psi: TwoCell, a: OneCell },
    Axiom1 { y: OneCell, x: OneCell, a: OneCell },
    Axiom2 { a: OneCell },
    Axiom3 { x: OneCell, a: OneCell },
}

impl AlgebraLaw {
    pub(crate) fn index(&self) -> usize {
        use AlgebraLaw::*;
        match self {
            NatEA { .. } | NatEX { .. } => 0,
            NatE0 { .. } => 1,
            Axiom1 { .. } => 2,
            Axiom2 { .. } => 3,
            Axiom3 { .. } => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum AlgKey {
    E(OneCell, OneCell),
    E0(OneCell),
}

pub(crate) trait AlgComponents {
    fn e(&self, x: OneCell, a: OneCell) -> Option<MorId>;
    fn e0(&self, a: OneCell) -> Option<MorId>;
}

impl AlgComponents for WarpingAlgebra {
    fn e(&self, x: OneCell, a: OneCell) -> Option<MorId> {
        self.ec.get(&(x, a)).copied()
    }

    fn e0(&self, a: OneCell) -> Option<MorId> {
        self.e0.get(&a).copied()
    }
}

impl WarpingAlgebra {
    /// The free algebra on `D x`: `E = T`, `e = v`, `e0 = k`.
    pub fn free(w: &Arc<SkewWarping>, x: usize) -> WarpingAlgebra {
        let n = w.num_cells0();
        let mut alg = WarpingAlgebra {
            warping: w.clone(),
            carrier: w.d[x],
            e: (0..n).map(|y| w.t_functor(y, x).clone()).collect(),
            ec: HashMap::new(),
            e0: HashMap::new(),
        };
        for y in 0..n {
            for a in w.cells(y, x) {
                alg.e0.insert(w.under(a), w.kc[&a]);
                for xx in w.all_cells().into_iter().filter(|c| c.tgt == y) {
                    alg.ec.insert((xx, w.under(a)), w.v[&(xx, a)]);
                }
            }
        }
        alg
    }

    /// Ambient 1-cells `y → A`.
    pub fn arrows(&self) -> Vec<OneCell> {
        (0..self.warping.num_cells0())
            .flat_map(|y| self.warping.ambient.one_cells(y, self.carrier))
            .collect()
    }

    /// `Ea: D y → A`.
    pub fn e1(&self, a: OneCell) -> OneCell {
        OneCell {
            src: self.warping.d[a.src],
            tgt: a.tgt,
            obj: self.e[a.src].obj(a.obj),
        }
    }

    pub fn e2(&self, phi: TwoCell) -> TwoCell {
        TwoCell {
            src: self.warping.d[phi.src],
            tgt: phi.tgt,
            mor: self.e[phi.src].mor(phi.mor),
        }
    }

    /// `Ea·x` as an ambient 1-cell into `A`.
    pub fn act(&self, a: OneCell, x: OneCell) -> OneCell {
        self.warping.ambient.m1(self.e1(a), self.warping.under(x))
    }

    pub fn structural_errors(&self) -> Vec<String> {
        let w = &*self.warping;
        let b = &*w.ambient;
        let mut out = w.structural_errors();
        if !out.is_empty() {
            return out;
        }
        let n = w.num_cells0();
        if self.carrier >= n || self.e.len() != n {
            out.push("carrier or E table is malformed".into());
            return out;
        }
        let a0 = self.carrier;
        for y in 0..n {
            let e = &self.e[y];
            if *e.dom != **b.hom(y, a0) || *e.cod != **b.hom(w.d[y], a0) {
                out.push(format!("E at {} has the wrong boundary", b.cells0[y]));
            } else if let Some(v) = e.validate().first() {
                out.push(format!("E at {} is not a functor: {}", b.cells0[y], v.law));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for a in self.arrows() {
            match self.e0.get(&a) {
                None => out.push(format!("missing e0 at {}", b.label1(a))),
                Some(&mor) => {
                    let cell = TwoCell { src: a.src, tgt: a0, mor };
                    if !b.typed(cell, a, b.m1(self.e1(a), w.kb(a.src))) {
                        out.push(format!("e0 at {} is ill-typed", b.label1(a)));
                    }
                }
            }
            for x in w.all_cells().into_iter().filter(|x| x.tgt == a.src) {
                match self.ec.get(&(x, a)) {
                    None => out.push(format!("missing e at ({}, {})", w.label(x), b.label1(a))),
                    Some(&mor) => {
                        let cell = TwoCell { src: w.d[x.src], tgt: a0, mor };
                        let src = self.e1(self.act(a, x));
                        let tgt = b.m1(self.e1(a), w.t1(x));
                        if !b.typed(cell, src, tgt) {
                            out.push(format!("e at ({}, {}) is ill-typed", w.label(x), b.label1(a)));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn check(&self) -> Report {
        let subject = "warping algebra";
        let errs = self.structural_errors();
        if !errs.is_empty() {
            return Report {
                subject: subject.into(),
                structural: errs,
                entries: Vec::new(),
            };
        }
        let mut tallies: Vec<Tally> = ALGEBRA_LAW_NAMES
            .iter()
            .zip(ALGEBRA_LAW_TAGS)
            .map(|(n, t)| Tally::new(n, t))
            .collect();
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

    pub(crate) fn laws(&self) -> Vec<AlgebraLaw> {
        let w = &*self.warping;
        let b = &*w.ambient;
        let arrows = self.arrows();
        let cells = w.all_cells();
        let into = |y: usize| cells.iter().copied().filter(move |x| x.tgt == y);
        let parallel = |a: OneCell| arrows.iter().copied().filter(move |c| c.src == a.src);
        let mut out = Vec::new();
        for &a in &arrows {
            for a2 in parallel(a) {
                for phi in b.two_cells(a, a2) {
                    out.push(AlgebraLaw::NatE0 { a, a2, phi });
                    for x in into(a.src) {
                        out.push(AlgebraLaw::NatEA { x, a, a2, phi });
                    }
                }
            }
            for x in into(a.src) {
                for x2 in cells.iter().copied().filter(|c| (c.src, c.tgt) == (x.src, x.tgt)) {
                    for psi in w.two_cells(x, x2) {
                        out.push(AlgebraLaw::NatEX { x, x2, psi, a });
                    }
                }
            }
        }
        for &a in &arrows {
            for x in into(a.src) {
                for y in into(x.src) {
                    out.push(AlgebraLaw::Axiom1 { y, x, a });
                }
            }
        }
        out.extend(arrows.iter().map(|&a| AlgebraLaw::Axiom2 { a }));
        for &a in &arrows {
            out.extend(into(a.src).map(|x| AlgebraLaw::Axiom3 { x, a }));
        }
        out
    }

    pub(crate) fn keys(&self, law: AlgebraLaw) -> Vec<AlgKey> {
        use AlgebraLaw::*;
        let w = &*self.warping;
        match law {
            NatE0 { a, a2, .. } => vec![AlgKey::E0(a2), AlgKey::E0(a)],
            NatEA { x, a, a2, .. } => vec![AlgKey::E(x, a2), AlgKey::E(x, a)],
            NatEX { x, x2, a, .. } => vec![AlgKey::E(x2, a), AlgKey::E(x, a)],
            Axiom1 { y, x, a } => vec![
                AlgKey::E(y, self.act(a, x)),
                AlgKey::E(x, a),
                AlgKey::E(w.bind(x, y), a),
            ],
            Axiom2 { a } => vec![AlgKey::E0(a), AlgKey::E(w.kk(a.src), a)],
            Axiom3 { x, a } => vec![AlgKey::E0(self.act(a, x)), AlgKey::E(x, a)],
        }
    }

    fn witness(&self, law: AlgebraLaw) -> Vec<String> {
        use AlgebraLaw::*;
        let w = &*self.warping;
        let b = &*w.ambient;
        let l = |f: OneCell| b.label1(f);
        match law {
            NatE0 { phi, .. } | NatEA { phi, .. } => vec![b.label2(phi)],
            NatEX { psi, a, .. } => vec![b.label2(w.under2(psi)), l(a)],
            Axiom1 { y, x, a } => vec![w.label(y), w.label(x), l(a)],
            Axiom2 { a } => vec![l(a)],
            Axiom3 { x, a } => vec![w.label(x), l(a)],
        }
    }

    pub(crate) fn eval(&self, law: AlgebraLaw, c: &impl AlgComponents) -> Option<bool> {
        use AlgebraLaw::*;
        let w = &*self.warping;
        let b = &*w.ambient;
        let a0 = self.carrier;
        let e = |x: OneCell, a: OneCell| c.e(x, a).map(|mor| TwoCell { src: w.d[x.src], tgt: a0, mor });
        let e0 = |a: OneCell| c.e0(a).map(|mor| TwoCell { src: a.src, tgt: a0, mor });
        Some(match law {
            NatE0 { a, a2, phi } => {
                let lhs = b.vcomp(e0(a2)?, phi);
                lhs == b.vcomp(b.wr(self.e2(phi), w.kb(a.src)), e0(a)?)
            }
            NatEA { x, a, a2, phi } => {
                let lhs = b.vcomp(e(x, a2)?, self.e2(b.wr(self.e2(phi), w.under(x))));
                lhs == b.vcomp(b.wr(self.e2(phi), w.t1(x)), e(x, a)?)
            }
            NatEX { x, x2, psi, a } => {
                let lhs = b.vcomp(e(x2, a)?, self.e2(b.wl(self.e1(a), w.under2(psi))));
                lhs == b.vcomp(b.wl(self.e1(a), w.t2(psi)), e(x, a)?)
            }
            Axiom1 { y, x, a } => {
                let (ea, tx, ty, uy) = (self.e1(a), w.t1(x), w.t1(y), w.under(y));
                let exa = e(x, a)?;
                let top = b.vpath(&[e(y, self.act(a, x))?, b.wr(exa, ty), b.alpha_at(ty, tx, ea)]);
                let bottom = b.vpath(&[
                    self.e2(b.wr(exa, uy)),
                    self.e2(b.alpha_at(uy, tx, ea)),
                    e(w.bind(x, y), a)?,
                    b.wl(ea, w.v_at(y, x)),
                ]);
                top == bottom
            }
            Axiom2 { a } => {
                let (y, ea) = (a.src, self.e1(a));
                let lhs = b.vpath(&[self.e2(e0(a)?), e(w.kk(y), a)?, b.wl(ea, w.v0_at(y))]);
                lhs == b.rho_at(ea)
            }
            Axiom3 { x, a } => {
                let (kx, ea, tx) = (w.kb(x.src), self.e1(a), w.t1(x));
                let lhs = b.vpath(&[e0(self.act(a, x))?, b.wr(e(x, a)?, kx), b.alpha_at(kx, tx, ea)]);
                lhs == b.wl(ea, w.k_at(x))
            }
        })
    }

    pub fn components_invertible(&self) -> bool {
        let w = &*self.warping;
        let b = &*w.ambient;
        let a0 = self.carrier;
        self.ec
            .iter()
            .all(|(&(x, _), &mor)| b.is_iso2(TwoCell { src: w.d[x.src], tgt: a0, mor }))
            && self.e0.iter().all(|(&a, &mor)| b.is_iso2(TwoCell { src: a.src, tgt: a0, mor }))
    }
}

/// Verifies the third algebra axiom for an algebra satisfying the first two,
/// over a warping on a bicategory, with invertible `e` and `e0`. A failure is
/// a falsification of the redundancy claim.
pub fn check_redundancy_algebra(a: &WarpingAlgebra) -> Result<Report> {
    let full = a.check();
    if let Some(e) = full.structural.first() {
        return Err(StructureError::Malformed(e.clone()));
    }
    let w = &*a.warping;
    if !w.ambient.is_bicategory() {
        return Err(StructureError::Precondition("ambient is not a bicategory".into()));
    }
    if !w.is_warping() {
        return Err(StructureError::Precondition("the skew warping is not a warping".into()));
    }
    if !a.components_invertible() {
        return Err(StructureError::Precondition("e and e0 must be invertible".into()));
    }
    if let Some(bad) = ALGEBRA_LAW_NAMES[..4].iter().find(|name| !full.passed(name)) {
        return Err(StructureError::Precondition(format!("{bad} does not hold")));
    }
    let mut r = Report::new("algebra redundancy: axiom 3 from 1-2");
    for mut e in full.entries.into_iter().filter(|e| e.name == ALGEBRA_LAW_NAMES[4]) {
        if e.status == Status::Fail {
            e.status = Status::Falsification;
        }
        r.push(e);
    }
    Ok(r)
}

/// An mw-algebra as an algebra for the corresponding warping, with identity
/// 2-cells. As in [`mw_as_warping`], a violated equation surfaces as an
/// ill-typed component.
pub fn mw_algebra_as_warping_algebra(alg: &MwAlgebra) -> Result<WarpingAlgebra> {
    let w = Arc::new(mw_as_warping(&alg.monad)?);
    let c = &*alg.monad.base;
    let b = w.ambient.clone();
    let n = c.num_objects();
    let a0 = alg.carrier;
    let pos = |f: MorId| {
        c.hom(c.src(f), c.tgt(f))
            .iter()
            .position(|&g| g == f)
            .expect("morphism lies in its hom-set")
    };
    let e = (0..n)
        .map(|x| {
            let obj_map: Vec<usize> = alg.e[x].iter().map(|&g| pos(g)).collect();
            FinFunctor {
                dom: b.hom(x, a0).clone(),
                cod: b.hom(alg.monad.d[x], a0).clone(),
                mor_map: obj_map.clone(),
                obj_map,
            }
        })
        .collect();
    let mut out = WarpingAlgebra {
        warping: w.clone(),
        carrier: a0,
        e,
        ec: HashMap::new(),
        e0: HashMap::new(),
    };
    // discrete homs: the identity on object i is morphism i
    for a in out.arrows() {
        out.e0.insert(a, a.obj);
        for x in w.all_cells().into_iter().filter(|x| x.tgt == a.src) {
            let src = out.e1(out.act(a, x)).obj;
            out.ec.insert((x, a), src);
        }
    }
    Ok(out)
}
