use std::sync::Arc;

use crate::error::{Result, StructureError};
use crate::fincore::{enumerate_functors, enumerate_nat_trans, FinCat, FinFunctor, MorId, NatTrans};
use crate::report::{Report, Tally};

/// Default bound on the number of morphisms of a category whose monads are
/// enumerated.
pub const DEFAULT_MORPHISM_BOUND: usize = 40;

/// Upper limit on endofunctor candidates during monad enumeration.
const FUNCTOR_LIMIT: usize = 1_000_000;

/// A monad `(D, m: D² → D, K: 1 → D)` on a finite category.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monad {
    pub base: Arc<FinCat>,
    pub d: FinFunctor,
    pub mult: NatTrans,
    pub unit: NatTrans,
}

pub const MONAD_TAGS: [(&str, &str); 5] = [
    ("monad.functor", "D is a functor"),
    ("monad.naturality", "m and K are natural"),
    ("monad.associativity", "monad law: m(mD) = m(Dm)"),
    ("monad.left_unit", "monad law: m(KD) = 1"),
    ("monad.right_unit", "monad law: m(DK) = 1"),
];

impl Monad {
    /// Packages component tables; nothing is checked.
    pub fn new(d: FinFunctor, mult: Vec<MorId>, unit: Vec<MorId>) -> Monad {
        let base = d.dom.clone();
        Monad {
            mult: NatTrans {
                dom: d.then(&d),
                cod: d.clone(),
                components: mult,
            },
            unit: NatTrans {
                dom: FinFunctor::identity(&base),
                cod: d.clone(),
                components: unit,
            },
            base,
            d,
        }
    }

    pub fn identity(c: &Arc<FinCat>) -> Monad {
        let ids = c.identities().to_vec();
        Monad::new(FinFunctor::identity(c), ids.clone(), ids)
    }

    pub fn check(&self) -> Report {
        let subject = "monad";
        let c = &*self.base;
        let n = c.num_objects();
        if self.mult.components.len() != n
            || self.unit.components.len() != n
            || self.mult.components.iter().chain(&self.unit.components).any(|&f| f >= c.num_morphisms())
        {
            return Report::structural_error(subject, "component tables malformed");
        }
        let mut t: Vec<Tally> = MONAD_TAGS.iter().map(|(a, b)| Tally::new(a, b)).collect();
        let fv = self.d.validate();
        t[0].record(fv.is_empty(), || fv.first().map(|v| v.witness.clone()).unwrap_or_default());
        if !fv.is_empty() {
            let mut r = Report::new(subject);
            r.push(t.remove(0).finish());
            return r;
        }
        for nt in [&self.mult, &self.unit] {
            let v = nt.validate();
            t[1].record(v.is_empty(), || {
                let mut w = vec![v[0].law.clone()];
                w.extend(v[0].witness.clone());
                w
            });
        }
        if t[1].ok() {
            for x in 0..n {
                let dx = self.d.obj(x);
                let mx = self.mult.component(x);
                let lhs = c.compose(mx, self.mult.component(dx));
                let rhs = c.compose(mx, self.d.mor(mx));
                t[2].record(lhs == rhs, || vec![c.object_name(x).into()]);
                let l = c.compose(mx, self.unit.component(dx));
                t[3].record(l == c.identity(dx), || vec![c.object_name(x).into()]);
                let r = c.compose(mx, self.d.mor(self.unit.component(x)));
                t[4].record(r == c.identity(dx), || vec![c.object_name(x).into()]);
            }
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

pub(crate) fn check_bound(c: &FinCat, bound: usize) -> Result<()> {
    if c.num_morphisms() > bound {
        return Err(StructureError::BoundExceeded(format!(
            "{} morphisms exceed the enumeration bound {bound}",
            c.num_morphisms()
        )));
    }
    Ok(())
}

/// Every monad on `c`, ordered by (functor, multiplication, unit).
pub fn enumerate_monads(c: &Arc<FinCat>, bound: usize) -> Result<Vec<Monad>> {
    check_bound(c, bound)?;
    let functors = enumerate_functors(c, c, FUNCTOR_LIMIT).ok_or_else(|| {
        StructureError::BoundExceeded(format!("more than {FUNCTOR_LIMIT} endofunctors"))
    })?;
    let id = FinFunctor::identity(c);
    let mut out = Vec::new();
    for d in functors {
        let dd = d.then(&d);
        let units = enumerate_nat_trans(&id, &d);
        if units.is_empty() {
            continue;
        }
        for mult in enumerate_nat_trans(&dd, &d) {
            for unit in &units {
                let m = Monad {
                    base: c.clone(),
                    d: d.clone(),
                    mult: mult.clone(),
                    unit: unit.clone(),
                };
                if m.is_valid() {
                    out.push(m);
                }
            }
        }
    }
    Ok(out)
}
