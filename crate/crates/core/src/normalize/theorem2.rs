use std::collections::HashSet;
use std::sync::Arc;

use super::factor::{lifted_module, Factorization};
use super::lazy::Normalization;
use super::modules::enumerate_imodules;
use crate::error::{Result, StructureError};
use crate::fincore::FinCat;
use crate::profhom::{
    adjunction_units, associator, coend, compose_mor, discrete_inclusion, hom_prof, hom_skew_moncat,
    left_unitor, prof_coequalizer, prof_is_coequalizer, right_unitor, u_functor, FinProf, HomSkewMonCat, ProfMor,
};
use super::modules::IModule;
use crate::report::{Entry, Report, Tally};
use crate::skew::{enumerate_monoids, is_monoid, transport_monoid, MonoidalFunctor, SkewMonoidal};

pub const THEOREM2_TAGS: [(&str, &str); 4] = [
    ("theorem2.cofork_coequalizer", "gε is a coequalizer of gεii* and gii*ε"),
    ("theorem2.wedge_iso", "gi ∧ fi ≅ (gf)i through the induced N2"),
    ("theorem2.equivalence_on_lists", "v is fully faithful on the endo list and reaches every listed module up to iso"),
    ("theorem2.monoid_bijection", "v induces a bijection of monoids on the listed carriers"),
];

/// Instance checks of the comparison `K(B,B) → K(A,B)^I` for `A` discrete on
/// the objects of `B`: `endo` lists profunctors `B ⇸ B`, `homs` lists
/// profunctors `A ⇸ B` whose modules must be reached. The endo list is
/// extended by [`module_to_endo`] of every module on a listed carrier.
pub fn theorem2_instance(b: &Arc<FinCat>, endo: Vec<FinProf>, homs: Vec<FinProf>) -> Result<Report> {
    for g in &endo {
        g.validate()?;
        if *g.dom != **b || *g.cod != **b {
            return Err(StructureError::Precondition(format!("{} is not an endo-profunctor", g.label())));
        }
    }
    let h = hom_skew_moncat(b, homs)?;
    let u = u_functor(&h);
    let endo: Vec<Arc<FinProf>> = endo.into_iter().map(Arc::new).collect();
    let mut report = Report::new("comparison K(B,B) → K(A,B)^I");

    let listed = enumerate_imodules(&h, &h.objects);
    let mut endo = endo;
    for m in &listed {
        let g = module_to_endo(&h, m)?;
        if !endo.contains(&g) {
            endo.push(g);
        }
    }
    report.push(cofork_check(b, &endo)?);
    let images: Vec<_> = endo
        .iter()
        .map(|g| lifted_module(&u, g).expect("K(B,B) is right normal"))
        .collect();
    let mut modules = images.clone();
    modules.extend(listed.iter().cloned());
    let n = Normalization::new(h.clone(), modules)?;
    let v = Factorization { m: &u, n: &n };
    let e = u.dom();

    let mut t = Tally::new(THEOREM2_TAGS[1].0, THEOREM2_TAGS[1].1).falsifying();
    for g in &endo {
        for f in &endo {
            t.record(n.is_iso(&v.f2(g, f)), || vec![g.label(), f.label()]);
        }
    }
    report.push(t.finish());

    let mut t = Tally::new(THEOREM2_TAGS[2].0, THEOREM2_TAGS[2].1).falsifying();
    for (g, vg) in endo.iter().zip(&images) {
        for (f, vf) in endo.iter().zip(&images) {
            let mapped: Vec<ProfMor> = e.hom(g, f).iter().map(|m| v.map_mor(m).mor).collect();
            let distinct: HashSet<&ProfMor> = mapped.iter().collect();
            let target: HashSet<ProfMor> = n.hom(vg, vf).into_iter().map(|m| m.mor).collect();
            let ok = distinct.len() == mapped.len() && distinct.len() == target.len()
                && mapped.iter().all(|m| target.contains(m));
            t.record(ok, || vec![format!("hom({}, {})", g.label(), f.label())]);
        }
    }
    for m in &listed {
        let reached = images
            .iter()
            .any(|vg| n.hom(vg, m).iter().any(|f| n.is_iso(f)));
        t.record(reached, || vec![n.obj_label(m)]);
    }
    report.push(t.finish());

    let mut t = Tally::new(THEOREM2_TAGS[3].0, THEOREM2_TAGS[3].1).falsifying();
    let source = enumerate_monoids(e, &endo);
    let transported: Vec<_> = source.iter().map(|m| transport_monoid(&v, m)).collect();
    let target = enumerate_monoids(&n, &images);
    let distinct: HashSet<_> = transported.iter().collect();
    for (m, tm) in source.iter().zip(&transported) {
        t.record(is_monoid(&n, tm) && target.contains(tm), || vec![m.carrier.label()]);
    }
    t.record(distinct.len() == transported.len() && target.len() == source.len(), || {
        vec![format!("{} monoids in K(B,B), {} among the images", source.len(), target.len())]
    });
    report.push(t.finish());
    Ok(report)
}

/// The endo-profunctor of a module `(X, x)`: the coequalizer of
/// `X i*·ε` and `x i*` from `X i*·ii*` to `X i*`.
pub fn module_to_endo(h: &HomSkewMonCat, m: &IModule<Arc<FinProf>, ProfMor>) -> Result<Arc<FinProf>> {
    let adj = adjunction_units(&h.incl)?;
    let (x, i, up) = (&m.carrier, &adj.lower, &adj.upper);
    let p = adj.eps.src.clone();
    let xu = coend(x, up)?.prof;
    let by_counit = compose_mor(&ProfMor::identity(&xu), &adj.eps)?.then(&right_unitor(&xu)?);
    let inv = |f: ProfMor| f.inverse().expect("canonical map is invertible");
    let ui = coend(up, i)?.prof;
    let action = inv(h.closed_to_coend(x, &h.unit())?).then(&m.action);
    let by_action = associator(x, up, &p)?
        .then(&compose_mor(&ProfMor::identity(x), &inv(associator(up, i, up)?))?)
        .then(&inv(associator(x, &ui, up)?))
        .then(&compose_mor(&action, &ProfMor::identity(up))?);
    Ok(prof_coequalizer(&by_counit, &by_action).tgt)
}

/// Whether `gε: g·ii* → g` coequalizes `gε·ii*, g·ii*·ε: g·ii*·ii* → g·ii*`,
/// computed with explicit unitors.
fn cofork_check(b: &Arc<FinCat>, endo: &[Arc<FinProf>]) -> Result<Entry> {
    let adj = adjunction_units(&discrete_inclusion(b))?;
    let eps = &adj.eps;
    let p = eps.src.clone();
    let id_p = ProfMor::identity(&p);
    let d0 = compose_mor(eps, &id_p)?.then(&left_unitor(&p)?);
    let d1 = compose_mor(&id_p, eps)?.then(&right_unitor(&p)?);
    let mut t = Tally::new(THEOREM2_TAGS[0].0, THEOREM2_TAGS[0].1).falsifying();
    let hom = Arc::new(hom_prof(b));
    for g in std::iter::once(&hom).chain(endo) {
        let id_g = ProfMor::identity(g);
        let e = compose_mor(&id_g, eps)?.then(&right_unitor(g)?);
        let ok = prof_is_coequalizer(&compose_mor(&id_g, &d0)?, &compose_mor(&id_g, &d1)?, &e);
        t.record(ok, || vec![g.label()]);
    }
    Ok(t.finish())
}
