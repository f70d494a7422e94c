use std::sync::Arc;

use super::monad::Monad;
use super::mwmonad::{mw_to_monad, MwMonad};
use crate::error::Result;
use crate::fincore::{MorId, ObjId};
use crate::report::{Report, Tally};
use crate::search::Csp;

/// An algebra for an mw-monad: a carrier `A` and `E: hom(X, A) → hom(DX, A)`
/// for every `X`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MwAlgebra {
    pub monad: Arc<MwMonad>,
    pub carrier: ObjId,
    /// `e[x][i]` is `E` of the `i`-th morphism of `hom(x, A)`.
    pub e: Vec<Vec<MorId>>,
}

pub const MW_ALGEBRA_TAGS: [(&str, &str); 2] = [
    ("mw_algebra.unit", "mw algebra equation: Eg K = g"),
    ("mw_algebra.extension", "mw algebra equation: Eg Tf = E(Eg f)"),
];

pub const EM_TAGS: [(&str, &str); 2] = [
    ("em_algebra.unit", "h K_A = 1"),
    ("em_algebra.associativity", "h m_A = h D(h)"),
];

impl MwAlgebra {
    pub fn from_fn(monad: Arc<MwMonad>, carrier: ObjId, e: impl Fn(MorId) -> MorId) -> MwAlgebra {
        let c = monad.base.clone();
        let table = (0..c.num_objects())
            .map(|x| c.hom(x, carrier).iter().map(|&g| e(g)).collect())
            .collect();
        MwAlgebra {
            monad,
            carrier,
            e: table,
        }
    }

    /// `E g` for `g: X → A`.
    pub fn ext(&self, g: MorId) -> MorId {
        let c = &self.monad.base;
        let x = c.src(g);
        let pos = c
            .hom(x, self.carrier)
            .iter()
            .position(|&h| h == g)
            .expect("argument of E lies in hom(X, A)");
        self.e[x][pos]
    }

    pub fn check(&self) -> Report {
        let t = &*self.monad;
        let c = &*t.base;
        let n = c.num_objects();
        let subject = format!("mw-algebra on {}", c.object_name(self.carrier));
        let a = self.carrier;
        let typed = self.e.len() == n
            && (0..n).all(|x| {
                self.e[x].len() == c.hom(x, a).len()
                    && self.e[x]
                        .iter()
                        .all(|&h| h < c.num_morphisms() && c.src(h) == t.d[x] && c.tgt(h) == a)
            });
        if !typed {
            return Report::structural_error(subject, "E table is malformed or ill-typed");
        }
        let name = |f: MorId| c.morphism_name(f).to_string();
        let mut tl: Vec<Tally> = MW_ALGEBRA_TAGS.iter().map(|(p, q)| Tally::new(p, q)).collect();
        for y in 0..n {
            for &g in c.hom(y, a) {
                let eg = self.ext(g);
                tl[0].record(c.compose(eg, t.k[y]) == g, || vec![name(g)]);
                for x in 0..n {
                    for &f in c.hom(x, t.d[y]) {
                        let lhs = c.compose(eg, t.ext(y, f));
                        let rhs = self.ext(c.compose(eg, f));
                        tl[1].record(lhs == rhs, || vec![name(f), name(g)]);
                    }
                }
            }
        }
        let mut r = Report::new(subject);
        for x in tl {
            r.push(x.finish());
        }
        r
    }

    pub fn is_valid(&self) -> bool {
        self.check().all_pass()
    }
}

/// The Eilenberg–Moore structure map `E(1_A): DA → A`.
pub fn mw_algebra_to_em(a: &MwAlgebra) -> MorId {
    a.ext(a.monad.base.identity(a.carrier))
}

/// `E g = h ∘ T(K∘g)` for a structure map `h: DA → A`.
pub fn em_to_mw_algebra(t: &Arc<MwMonad>, carrier: ObjId, h: MorId) -> MwAlgebra {
    let c = t.base.clone();
    MwAlgebra::from_fn(t.clone(), carrier, |g| {
        let dg = t.ext(carrier, c.compose(t.k[carrier], g));
        c.compose(h, dg)
    })
}

/// The two Eilenberg–Moore laws for `h: DA → A`.
pub fn check_em_algebra(m: &Monad, carrier: ObjId, h: MorId) -> Report {
    let c = &*m.base;
    let subject = format!("Eilenberg-Moore algebra on {}", c.object_name(carrier));
    let da = m.d.obj(carrier);
    if h >= c.num_morphisms() || c.src(h) != da || c.tgt(h) != carrier {
        return Report::structural_error(subject, "structure map is not DA → A");
    }
    let mut tl: Vec<Tally> = EM_TAGS.iter().map(|(p, q)| Tally::new(p, q)).collect();
    let w = || vec![c.morphism_name(h).to_string()];
    tl[0].record(c.compose(h, m.unit.component(carrier)) == c.identity(carrier), w);
    let lhs = c.compose(h, m.mult.component(carrier));
    tl[1].record(lhs == c.compose(h, m.d.mor(h)), w);
    let mut r = Report::new(subject);
    for x in tl {
        r.push(x.finish());
    }
    r
}

/// Every Eilenberg–Moore algebra `(A, h)`, ordered by carrier then `h`.
pub fn enumerate_em_algebras(m: &Monad) -> Vec<(ObjId, MorId)> {
    let c = &*m.base;
    (0..c.num_objects())
        .flat_map(|a| c.hom(m.d.obj(a), a).iter().map(move |&h| (a, h)))
        .filter(|&(a, h)| check_em_algebra(m, a, h).all_pass())
        .collect()
}

/// Every mw-algebra, ordered by carrier then `E` table, by constraint search
/// over the `E` values.
pub fn enumerate_mw_algebras(t: &Arc<MwMonad>) -> Vec<MwAlgebra> {
    let c = &*t.base;
    let n = c.num_objects();
    let mut out = Vec::new();
    for a in 0..n {
        let mut domains = Vec::new();
        let mut offset = vec![0; n + 1];
        for x in 0..n {
            offset[x] = domains.len();
            for _ in c.hom(x, a) {
                domains.push(c.hom(t.d[x], a).to_vec());
            }
        }
        offset[n] = domains.len();
        let var_of = |g: MorId| {
            let x = c.src(g);
            offset[x] + c.hom(x, a).iter().position(|&h| h == g).unwrap()
        };
        let mut csp = Csp::new(domains);
        for y in 0..n {
            for &g in c.hom(y, a) {
                let vg = var_of(g);
                let ky = t.k[y];
                csp.constrain([vg], move |s| s[vg].is_none_or(|eg| c.compose(eg, ky) == g));
                for x in 0..n {
                    let block = offset[x]..offset[x + 1];
                    for &f in c.hom(x, t.d[y]) {
                        let tf = t.ext(y, f);
                        csp.constrain(std::iter::once(vg).chain(block.clone()), move |s| {
                            let Some(eg) = s[vg] else { return true };
                            s[var_of(c.compose(eg, f))].is_none_or(|e| c.compose(eg, tf) == e)
                        });
                    }
                }
            }
        }
        for sol in csp.solve(None) {
            out.push(MwAlgebra {
                monad: t.clone(),
                carrier: a,
                e: (0..n).map(|x| sol[offset[x]..offset[x + 1]].to_vec()).collect(),
            });
        }
    }
    out
}

/// Numbers of mw-algebras of `t` and of Eilenberg–Moore algebras of the
/// induced monad.
pub fn algebra_counts(t: &Arc<MwMonad>) -> Result<(usize, usize)> {
    let m = mw_to_monad(t)?;
    Ok((enumerate_mw_algebras(t).len(), enumerate_em_algebras(&m).len()))
}
