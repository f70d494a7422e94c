use std::sync::Arc;

use super::monad::{check_bound, Monad};
use crate::error::{Result, StructureError};
use crate::fincore::{FinCat, FinFunctor, MorId, MorphismData, ObjId};
use crate::report::{Report, Tally};
use crate::search::Csp;

/// Limit on object maps tried by [`enumerate_mw`].
const OBJECT_MAP_LIMIT: usize = 1_000_000;

/// A monad in no-iteration form: `D` on objects, units `K_X: X → DX` and an
/// extension `T: hom(X, DY) → hom(DX, DY)` per pair of objects.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MwMonad {
    pub base: Arc<FinCat>,
    pub d: Vec<ObjId>,
    pub k: Vec<MorId>,
    /// `t[x*n + y][i]` is `T` of the `i`-th morphism of `hom(x, D y)`.
    pub t: Vec<Vec<MorId>>,
}

pub const MW_TAGS: [(&str, &str); 3] = [
    ("mw.associativity", "mw equation: Tg Tf = T(Tg f)"),
    ("mw.unit", "mw equation: Tf K = f"),
    ("mw.extension_of_unit", "mw equation: T(K) = 1"),
];

impl MwMonad {
    /// Tabulates `T` from a function of `(Y, f)`.
    pub fn from_fn(
        base: Arc<FinCat>,
        d: Vec<ObjId>,
        k: Vec<MorId>,
        t: impl Fn(ObjId, MorId) -> MorId,
    ) -> MwMonad {
        let n = base.num_objects();
        let table = (0..n * n)
            .map(|p| {
                let (x, y) = (p / n, p % n);
                base.hom(x, d[y]).iter().map(|&f| t(y, f)).collect()
            })
            .collect();
        MwMonad {
            base,
            d,
            k,
            t: table,
        }
    }

    pub fn identity(c: &Arc<FinCat>) -> MwMonad {
        MwMonad::from_fn(
            c.clone(),
            (0..c.num_objects()).collect(),
            c.identities().to_vec(),
            |_, f| f,
        )
    }

    pub fn num_objects(&self) -> usize {
        self.base.num_objects()
    }

    /// `T_{X,Y}(f)` where `X` is the source of `f: X → DY`.
    pub fn ext(&self, y: ObjId, f: MorId) -> MorId {
        let x = self.base.src(f);
        let pos = self.position(x, y, f);
        self.t[x * self.num_objects() + y][pos]
    }

    fn position(&self, x: ObjId, y: ObjId, f: MorId) -> usize {
        self.base
            .hom(x, self.d[y])
            .iter()
            .position(|&g| g == f)
            .expect("argument of T lies in hom(X, DY)")
    }

    pub fn structural_errors(&self) -> Vec<String> {
        let c = &*self.base;
        let n = c.num_objects();
        let mut out = Vec::new();
        if self.d.len() != n || self.d.iter().any(|&y| y >= n) {
            out.push("object map D is malformed".into());
            return out;
        }
        if self.k.len() != n || self.t.len() != n * n {
            out.push("K or T table has the wrong size".into());
            return out;
        }
        for x in 0..n {
            let kx = self.k[x];
            if kx >= c.num_morphisms() || c.src(kx) != x || c.tgt(kx) != self.d[x] {
                out.push(format!("K at {} is ill-typed", c.object_name(x)));
            }
            for y in 0..n {
                let row = &self.t[x * n + y];
                if row.len() != c.hom(x, self.d[y]).len() {
                    out.push(format!(
                        "T table for ({}, {}) has the wrong size",
                        c.object_name(x),
                        c.object_name(y)
                    ));
                    continue;
                }
                for &tf in row {
                    if tf >= c.num_morphisms() || c.src(tf) != self.d[x] || c.tgt(tf) != self.d[y] {
                        out.push(format!(
                            "T value in ({}, {}) is ill-typed",
                            c.object_name(x),
                            c.object_name(y)
                        ));
                    }
                }
            }
        }
        out
    }

    /// The three equations, each quantified over every valid argument.
    pub fn check(&self) -> Report {
        let subject = "mw-monad";
        let errs = self.structural_errors();
        if !errs.is_empty() {
            return Report {
                subject: subject.into(),
                structural: errs,
                entries: Vec::new(),
            };
        }
        let c = &*self.base;
        let n = self.num_objects();
        let name = |f: MorId| c.morphism_name(f).to_string();
        let mut t: Vec<Tally> = MW_TAGS.iter().map(|(a, b)| Tally::new(a, b)).collect();
        for x in 0..n {
            for y in 0..n {
                for &f in c.hom(x, self.d[y]) {
                    let tf = self.ext(y, f);
                    for z in 0..n {
                        for &g in c.hom(y, self.d[z]) {
                            let tg = self.ext(z, g);
                            let lhs = c.compose(tg, tf);
                            let rhs = self.ext(z, c.compose(tg, f));
                            t[0].record(lhs == rhs, || vec![name(f), name(g)]);
                        }
                    }
                    t[1].record(c.compose(tf, self.k[x]) == f, || vec![name(f)]);
                }
            }
            let tk = self.ext(x, self.k[x]);
            t[2].record(tk == c.identity(self.d[x]), || vec![c.object_name(x).into()]);
        }
        let mut r = Report::new(subject);
        for x in t {
            r.push(x.finish());
        }
        r
    }

    pub fn is_valid(&self) -> bool {
        self.check().all_pass()
    }
}

/// `D f = T(K∘f)`, `m_X = T(1_{DX})`, unit `K`. Functoriality of the induced
/// `D` and the monad laws are verified; a failure on valid input is reported
/// as an error.
pub fn mw_to_monad(t: &MwMonad) -> Result<Monad> {
    let c = &t.base;
    let n = c.num_objects();
    let d = FinFunctor {
        dom: c.clone(),
        cod: c.clone(),
        obj_map: t.d.clone(),
        mor_map: (0..c.num_morphisms())
            .map(|f| {
                let y = c.tgt(f);
                t.ext(y, c.compose(t.k[y], f))
            })
            .collect(),
    };
    let mult = (0..n).map(|x| t.ext(x, c.identity(t.d[x]))).collect();
    let m = Monad::new(d, mult, t.k.clone());
    let report = m.check();
    if !report.all_pass() {
        return Err(StructureError::Malformed(format!(
            "induced monad fails {:?}",
            report.failed_names()
        )));
    }
    Ok(m)
}

/// `T f = m_Y ∘ D f`, with the same unit.
pub fn monad_to_mw(m: &Monad) -> MwMonad {
    let c = &*m.base;
    MwMonad::from_fn(
        m.base.clone(),
        m.d.obj_map.clone(),
        m.unit.components.clone(),
        |y, f| c.compose(m.mult.component(y), m.d.mor(f)),
    )
}

/// Every mw-monad on `c`: object maps in lexicographic order, then `K`,
/// then `T` tables, found by constraint search.
pub fn enumerate_mw(c: &Arc<FinCat>, bound: usize) -> Result<Vec<MwMonad>> {
    check_bound(c, bound)?;
    let n = c.num_objects();
    let maps = (n as u32)
        .checked_pow(n as u32)
        .filter(|&m| (m as usize) <= OBJECT_MAP_LIMIT)
        .ok_or_else(|| StructureError::BoundExceeded(format!("{n}^{n} object maps")))?;
    let mut out = Vec::new();
    for code in 0..maps as usize {
        let mut d = vec![0; n];
        let mut rest = code;
        for slot in d.iter_mut().rev() {
            *slot = rest % n;
            rest /= n;
        }
        out.extend(mw_with_object_map(c, &d));
    }
    Ok(out)
}

fn mw_with_object_map(c: &Arc<FinCat>, d: &[ObjId]) -> Vec<MwMonad> {
    let n = c.num_objects();
    // variables: K_x at index x, then T blocks in (x, y) order
    let mut domains: Vec<Vec<usize>> = (0..n).map(|x| c.hom(x, d[x]).to_vec()).collect();
    if domains.iter().any(|dom| dom.is_empty()) {
        return Vec::new();
    }
    let mut offset = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            offset[x * n + y] = domains.len();
            let values = c.hom(d[x], d[y]).to_vec();
            for _ in c.hom(x, d[y]) {
                domains.push(values.clone());
            }
        }
    }
    let var_of = |x: usize, y: usize, f: MorId| {
        offset[x * n + y] + c.hom(x, d[y]).iter().position(|&g| g == f).unwrap()
    };
    let block = |x: usize, y: usize| offset[x * n + y]..offset[x * n + y] + c.hom(x, d[y]).len();
    let mut csp = Csp::new(domains);
    for x in 0..n {
        for y in 0..n {
            for &f in c.hom(x, d[y]) {
                let vf = var_of(x, y, f);
                csp.constrain([x, vf], move |s| match (s[x], s[vf]) {
                    (Some(k), Some(tf)) => c.compose(tf, k) == f,
                    _ => true,
                });
                for z in 0..n {
                    for &g in c.hom(y, d[z]) {
                        let vg = var_of(y, z, g);
                        let vars = [vf, vg].into_iter().chain(block(x, z));
                        csp.constrain(vars, move |s| {
                            let (Some(tf), Some(tg)) = (s[vf], s[vg]) else {
                                return true;
                            };
                            match s[var_of(x, z, c.compose(tg, f))] {
                                Some(t) => c.compose(tg, tf) == t,
                                None => true,
                            }
                        });
                    }
                }
            }
        }
        let dx = d[x];
        csp.constrain(std::iter::once(x).chain(block(x, x)), move |s| {
            let Some(k) = s[x] else { return true };
            s[var_of(x, x, k)].is_none_or(|t| t == c.identity(dx))
        });
    }
    csp.solve(None)
        .into_iter()
        .map(|sol| MwMonad {
            base: c.clone(),
            d: d.to_vec(),
            k: sol[..n].to_vec(),
            t: (0..n * n).map(|p| sol[block(p / n, p % n)].to_vec()).collect(),
        })
        .collect()
}

/// The Kleisli category: same objects, `hom_T(X, Y) = hom(X, DY)`, identity
/// `K_X` and composite `Tg ∘ f`.
///
/// Morphisms are listed by the underlying morphism in declaration order,
/// then by target `Y` among the objects with `DY` equal to its codomain. A
/// morphism keeps its underlying name unless `D` identifies its target with
/// another object, in which case it is named `f/Y`.
pub fn kleisli_mw(t: &MwMonad) -> FinCat {
    let c = &*t.base;
    let n = c.num_objects();
    let mut entries = Vec::new();
    for f in 0..c.num_morphisms() {
        let fibre: Vec<ObjId> = (0..n).filter(|&y| t.d[y] == c.tgt(f)).collect();
        for &y in &fibre {
            let name = if fibre.len() == 1 {
                c.morphism_name(f).to_string()
            } else {
                format!("{}/{}", c.morphism_name(f), c.object_name(y))
            };
            entries.push((f, y, name));
        }
    }
    let index = |f: MorId, y: ObjId| {
        entries
            .iter()
            .position(|&(g, z, _)| g == f && z == y)
            .expect("Kleisli morphism exists")
    };
    let morphisms = entries
        .iter()
        .map(|(f, y, name)| MorphismData {
            name: name.clone(),
            src: c.src(*f),
            tgt: *y,
        })
        .collect();
    let ids = (0..n).map(|x| index(t.k[x], x)).collect();
    FinCat::from_fn(c.objects().to_vec(), morphisms, ids, |g, f| {
        let (gu, z) = (entries[g].0, entries[g].1);
        let fu = entries[f].0;
        index(c.compose(t.ext(z, gu), fu), z)
    })
}
