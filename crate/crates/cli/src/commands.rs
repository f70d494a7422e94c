use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde_json::{json, Value};
use skewcat_core::fincore::FinCat;
use skewcat_core::format::{
    self, AlgebraDoc, BicatDoc, CategoryDoc, FResult, HomBundleDoc, MonadDoc, MwMonadDoc, ProfDoc, SkewMonCatDoc,
    WarpingDoc,
};
use skewcat_core::mw::{enumerate_mw, kleisli_mw, monad_to_mw, mw_to_monad, DEFAULT_MORPHISM_BOUND};
use skewcat_core::normalize::{normalization_report, normalize, theorem2_instance, Normalization, DEFAULT_MODULE_BOUND};
use skewcat_core::profhom::{
    hom_prof, hom_skew_moncat, is_functor_valued, monoid_to_mw, mw_to_monoid, prof_compose, u_functor, FinProf,
};
use skewcat_core::report::Tally;
use skewcat_core::skew::{
    check_monoidal_functor, check_skew_monoidal, enumerate_monoids, is_monoid, is_normal, SkewBicat, SkewMonoidal,
};
use skewcat_core::warpings::{
    check_redundancy_algebra, check_redundancy_warping, kleisli_warping, random_algebra, random_warping,
    remark_trace, Fill,
};
use skewcat_core::{Report, Status};

use crate::outcome::{Failure, InputDigest, Outcome};

/// Upper limit on discrete shapes tried by the random generators.
const SHAPE_LIMIT: usize = 100_000;

pub struct Options {
    pub bound: Option<usize>,
    pub seeds: u64,
    pub max_hom_size: usize,
}

/// Loaded inputs and the options of one run.
pub struct Ctx {
    pub inputs: Vec<InputDigest>,
    pub opts: Options,
}

type Run = Result<Outcome, Failure>;

impl Ctx {
    pub fn new(opts: Options) -> Self {
        Ctx {
            inputs: Vec::new(),
            opts,
        }
    }

    fn read(&mut self, path: &Path) -> Result<String, Failure> {
        let bytes = fs::read(path).map_err(|e| Failure::structural(format!("cannot read: {e}")).in_file(path))?;
        self.inputs.push(InputDigest::of(path, &bytes));
        String::from_utf8(bytes).map_err(|_| Failure::structural("input is not UTF-8").in_file(path))
    }

    fn load<T: DeserializeOwned>(&mut self, path: &Path) -> Result<T, Failure> {
        let text = self.read(path)?;
        format::parse(&text).map_err(|e| Failure::from(e).in_file(path))
    }
}

fn located<T>(r: FResult<T>, path: &Path) -> Result<T, Failure> {
    r.map_err(|e| Failure::from(e).in_file(path))
}

/// Runs a computation whose lazy parts may panic on violated preconditions.
fn guarded<T>(what: &str, f: impl FnOnce() -> Result<T, Failure>) -> Result<T, Failure> {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(Failure {
            code: crate::outcome::EXIT_PRECONDITION,
            file: None,
            path: None,
            message: format!("{what} aborted: {msg}"),
        })
    })
}

fn category_report(c: &FinCat) -> Report {
    const LAWS: [(&str, &str, &str); 5] = [
        ("category.identity_typing", "identity typing", "identities are endomorphisms of their object"),
        ("category.composite_typing", "source/target mismatch", "g∘f runs from the source of f to the target of g"),
        ("category.left_unit", "left unit", "1∘f = f"),
        ("category.right_unit", "right unit", "f∘1 = f"),
        ("category.associativity", "associativity", "(hg)f = h(gf)"),
    ];
    let violations = c.validate().violations;
    let mut r = Report::new("finite category");
    for (name, law, tag) in LAWS {
        let mut t = Tally::new(name, tag);
        let bad = violations.iter().find(|v| v.law == law);
        t.record(bad.is_none(), || bad.map(|v| v.witness.clone()).unwrap_or_default());
        r.push(t.finish());
    }
    r
}

pub fn check_category(ctx: &mut Ctx, file: &Path) -> Run {
    let d: CategoryDoc = ctx.load(file)?;
    let c = located(d.to_cat("$"), file)?;
    Ok(Outcome::new(category_report(&c)))
}

pub fn check_moncat(ctx: &mut Ctx, file: &Path) -> Run {
    let d: SkewMonCatDoc = ctx.load(file)?;
    let s = located(d.to_moncat(), file)?;
    let r = s.check();
    let mut out = Outcome::new(r);
    if !out.report.has_structural_errors() {
        out = out.with_result(json!({
            "right_normal": s.is_right_normal(),
            "monoidal": s.is_monoidal(),
        }));
    }
    Ok(out)
}

pub fn check_bicat(ctx: &mut Ctx, file: &Path) -> Run {
    let d: BicatDoc = ctx.load(file)?;
    let b = located(d.to_bicat(), file)?;
    let r = b.check();
    let mut out = Outcome::new(r);
    if !out.report.has_structural_errors() {
        out = out.with_result(json!({ "bicategory": b.is_bicategory() }));
    }
    Ok(out)
}

pub fn mw_check(ctx: &mut Ctx, file: &Path) -> Run {
    let d: MwMonadDoc = ctx.load(file)?;
    let t = located(d.to_mw(), file)?;
    Ok(Outcome::new(t.check()))
}

pub fn mw_to_monad_cmd(ctx: &mut Ctx, file: &Path) -> Run {
    let d: MwMonadDoc = ctx.load(file)?;
    let t = located(d.to_mw(), file)?;
    let mut r = t.check();
    if !r.all_pass() {
        return Ok(Outcome::new(r).note("not an mw-monad; no monad constructed"));
    }
    let m = mw_to_monad(&t)?;
    r.extend(m.check());
    let mut rt = Tally::new("mw.roundtrip", "the monad translates back to the same mw-monad");
    rt.record(monad_to_mw(&m) == t, Vec::new);
    r.push(rt.finish());
    Ok(Outcome::new(r).with_result(MonadDoc::from_monad(&m)))
}

pub fn mw_kleisli(ctx: &mut Ctx, file: &Path) -> Run {
    let d: MwMonadDoc = ctx.load(file)?;
    let t = located(d.to_mw(), file)?;
    let mut r = t.check();
    if !r.all_pass() {
        return Ok(Outcome::new(r).note("not an mw-monad; no Kleisli category constructed"));
    }
    let k = kleisli_mw(&t);
    r.extend(category_report(&k));
    Ok(Outcome::new(r).with_result(CategoryDoc::from_cat(&k)))
}

pub fn mw_enumerate(ctx: &mut Ctx, file: &Path) -> Run {
    let d: CategoryDoc = ctx.load(file)?;
    let c = Arc::new(located(d.to_cat("$"), file)?);
    let cr = category_report(&c);
    if !cr.all_pass() {
        return Ok(Outcome::new(cr).note("input is not a category"));
    }
    let bound = ctx.opts.bound.unwrap_or(DEFAULT_MORPHISM_BOUND);
    let all = enumerate_mw(&c, bound)?;
    let mut r = Report::new(format!("mw-monads on a category with {} objects", c.num_objects()));
    let mut valid = Tally::new("mw.enumerated", "every enumerated mw-monad satisfies the mw equations");
    let mut rt = Tally::new("mw.roundtrip", "mw-monad to monad and back is the identity");
    let witness = |t: &skewcat_core::mw::MwMonad| t.d.iter().map(|&y| c.object_name(y).to_string()).collect();
    for t in &all {
        valid.record(t.is_valid(), || witness(t));
        rt.record(mw_to_monad(t).is_ok_and(|m| monad_to_mw(&m) == *t), || witness(t));
    }
    r.push(valid.finish());
    r.push(rt.finish());
    let docs: Vec<MwMonadDoc> = all.iter().map(MwMonadDoc::from_mw).collect();
    Ok(Outcome::new(r).with_result(docs).note(format!("{} mw-monads", all.len())))
}

pub fn warping_check(ctx: &mut Ctx, file: &Path) -> Run {
    let d: WarpingDoc = ctx.load(file)?;
    let w = located(d.to_warping(), file)?;
    let r = w.check();
    let mut out = Outcome::new(r);
    if !out.report.has_structural_errors() {
        out = out.with_result(json!({ "invertible": w.components_invertible() }));
    }
    Ok(out)
}

pub fn warping_kleisli(ctx: &mut Ctx, file: &Path) -> Run {
    let d: WarpingDoc = ctx.load(file)?;
    let w = located(d.to_warping(), file)?;
    let wr = w.check();
    if wr.has_structural_errors() {
        return Ok(Outcome::new(wr));
    }
    let kb = kleisli_warping(&w)?;
    let mut r = kb.check();
    let mut out = Outcome::default();
    match remark_trace(&w) {
        Ok(trace) => {
            let mut t = Tally::new(
                "warping.remark_trace",
                "axiom n of the ambient and of the warping gives axiom n of the Kleisli construction",
            );
            for a in trace {
                t.record(a.consistent(), || vec![format!("axiom {}", a.axiom)]);
            }
            r.push(t.finish());
        }
        Err(e) => out = out.note(format!("axiom trace skipped: {e}")),
    }
    out.report = r;
    Ok(out.with_result(BicatDoc::from_bicat(&kb)))
}

/// Adds entries of `more` into `into`, summing instances of equally named
/// entries and keeping the first non-passing witness.
fn absorb(into: &mut Report, more: Report) {
    into.structural.extend(more.structural);
    for e in more.entries {
        match into.entries.iter_mut().find(|x| x.name == e.name) {
            Some(x) => {
                x.instances += e.instances;
                if x.status == Status::Pass && e.status != Status::Pass {
                    x.status = e.status;
                    x.witness = e.witness;
                }
            }
            None => into.push(e),
        }
    }
}

fn guard_hom_size(b: &SkewBicat, k: usize) -> Result<(), Failure> {
    match b.homs.iter().map(|h| h.num_objects()).max() {
        Some(m) if m > k => Err(skewcat_core::StructureError::BoundExceeded(format!(
            "a hom-category has {m} objects, --max-hom-size is {k}"
        ))
        .into()),
        _ => Ok(()),
    }
}

pub fn warping_redundancy(ctx: &mut Ctx, file: &Path) -> Run {
    let d: WarpingDoc = ctx.load(file)?;
    let w = located(d.to_warping(), file)?;
    let mut r = check_redundancy_warping(&w)?;
    let mut out = Outcome::default();
    if ctx.opts.seeds > 0 {
        guard_hom_size(&w.ambient, ctx.opts.max_hom_size)?;
        let mut found = 0;
        for seed in 0..ctx.opts.seeds {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            if let Some(x) = random_warping(&w.ambient, Fill::FIRST_TWO_INVERTIBLE, &mut rng, SHAPE_LIMIT)? {
                absorb(&mut r, check_redundancy_warping(&x)?);
                found += 1;
            }
        }
        out = out.note(format!("{found} random warpings from {} seeds", ctx.opts.seeds));
    }
    out.report = r;
    Ok(out)
}

pub fn algebra_check(ctx: &mut Ctx, file: &Path) -> Run {
    let d: AlgebraDoc = ctx.load(file)?;
    let a = located(d.to_algebra(), file)?;
    Ok(Outcome::new(a.check()))
}

pub fn algebra_redundancy(ctx: &mut Ctx, file: &Path) -> Run {
    let d: AlgebraDoc = ctx.load(file)?;
    let a = located(d.to_algebra(), file)?;
    let mut r = check_redundancy_algebra(&a)?;
    let mut out = Outcome::default();
    if ctx.opts.seeds > 0 {
        guard_hom_size(&a.warping.ambient, ctx.opts.max_hom_size)?;
        let mut found = 0;
        for seed in 0..ctx.opts.seeds {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            if let Some(x) = random_algebra(&a.warping, Fill::FIRST_TWO_INVERTIBLE, &mut rng, SHAPE_LIMIT)? {
                absorb(&mut r, check_redundancy_algebra(&x)?);
                found += 1;
            }
        }
        out = out.note(format!("{found} random algebras from {} seeds", ctx.opts.seeds));
    }
    out.report = r;
    Ok(out)
}

fn load_prof(ctx: &mut Ctx, file: &Path) -> Result<Arc<FinProf>, Failure> {
    let d: ProfDoc = ctx.load(file)?;
    let p = located(d.to_prof(), file)?;
    p.validate().map_err(|e| Failure::from(e).in_file(file))?;
    Ok(Arc::new(p))
}

pub fn prof_compose_cmd(ctx: &mut Ctx, g: &Path, f: &Path) -> Run {
    let (g, f) = (load_prof(ctx, g)?, load_prof(ctx, f)?);
    let gf = prof_compose(&g, &f)?;
    let mut t = Tally::new("prof.composite", "the coend composite is a profunctor");
    t.record(gf.validate().is_ok(), || gf.structural_errors());
    let mut r = Report::new("profunctor composition");
    r.push(t.finish());
    Ok(Outcome::new(r).with_result(ProfDoc::from_prof(&gf)))
}

fn load_bundle(ctx: &mut Ctx, file: &Path) -> Result<skewcat_core::fixtures::HomBundle, Failure> {
    let d: HomBundleDoc = ctx.load(file)?;
    located(d.to_bundle(), file)
}

pub fn prof_homcat(ctx: &mut Ctx, file: &Path) -> Run {
    let b = load_bundle(ctx, file)?;
    let h = hom_skew_moncat(&b.base, b.objects)?;
    let r = check_skew_monoidal(&h, &h.objects, "hom category K(A, B)");
    let labels: Vec<String> = h.objects.iter().map(|p| h.obj_label(p)).collect();
    Ok(Outcome::new(r).with_result(json!({ "objects": labels })))
}

pub fn prof_u(ctx: &mut Ctx, file: &Path) -> Run {
    let b = load_bundle(ctx, file)?;
    let h = hom_skew_moncat(&b.base, Vec::new())?;
    let u = u_functor(&h);
    let mut objs = vec![Arc::new(hom_prof(&b.base))];
    for p in b.endo {
        let p = Arc::new(p);
        if !objs.contains(&p) {
            objs.push(p);
        }
    }
    let mut r = check_monoidal_functor(&u, &objs, "u: K(B, B) → K(A, B)");
    let mut t = Tally::new("prof.u_normal", "u0 is invertible");
    t.record(is_normal(&u), Vec::new);
    r.push(t.finish());
    Ok(Outcome::new(r))
}

pub fn prof_monoids(ctx: &mut Ctx, file: &Path) -> Run {
    let b = load_bundle(ctx, file)?;
    let h = hom_skew_moncat(&b.base, b.objects)?;
    let monoids = enumerate_monoids(&h, &h.objects);
    let mut laws = Tally::new("prof.monoid_laws", "every enumerated monoid satisfies the monoid equations");
    let mut dict = Tally::new(
        "prof.monoid_mw_dictionary",
        "monoids on functor-valued carriers and mw-monads correspond bijectively",
    );
    let mut listed = Vec::new();
    let mut mws = Vec::new();
    for m in &monoids {
        let label = h.obj_label(&m.carrier);
        laws.record(is_monoid(&h, m), || vec![label.clone()]);
        let mw = if is_functor_valued(&m.carrier) {
            let t = monoid_to_mw(&h, m).ok();
            let ok = t
                .as_ref()
                .is_some_and(|t| t.is_valid() && mw_to_monoid(&h, t).is_ok_and(|back| back == *m) && !mws.contains(t));
            dict.record(ok, || vec![label.clone()]);
            if let Some(t) = &t {
                mws.push(t.clone());
            }
            t.map(|t| MwMonadDoc::from_mw(&t))
        } else {
            None
        };
        listed.push(json!({ "carrier": label, "mw_monad": mw }));
    }
    let mut r = Report::new("monoids of K(A, B) on the listed carriers");
    r.push(laws.finish());
    r.push(dict.finish());
    Ok(Outcome::new(r)
        .with_result(listed)
        .note(format!("{} monoids, {} with functor-valued carriers", monoids.len(), mws.len())))
}

pub fn normalize_cmd(ctx: &mut Ctx, file: &Path) -> Run {
    let text = ctx.read(file)?;
    let value: Value = format::parse(&text).map_err(|e| Failure::from(e).in_file(file))?;
    let bound = ctx.opts.bound.unwrap_or(DEFAULT_MODULE_BOUND);
    if value.get("base").is_some() {
        let d: HomBundleDoc = format::parse(&text).map_err(|e| Failure::from(e).in_file(file))?;
        let b = located(d.to_bundle(), file)?;
        let h = hom_skew_moncat(&b.base, b.objects)?;
        let carriers = h.objects.clone();
        return guarded("normalization", || {
            let n = Normalization::on_carriers(h, &carriers, bound)?;
            let r = normalization_report(&n);
            let modules: Vec<Value> = n
                .objects()
                .iter()
                .map(|m| json!({ "carrier": n.source.obj_label(&m.carrier), "action": n.source.mor_label(&m.action) }))
                .collect();
            let count = modules.len();
            Ok(Outcome::new(r)
                .with_result(json!({ "modules": modules }))
                .note(format!("{count} modules on the listed carriers")))
        });
    }
    let d: SkewMonCatDoc = format::parse(&text).map_err(|e| Failure::from(e).in_file(file))?;
    let s = located(d.to_moncat(), file)?;
    let sr = s.check();
    if sr.has_structural_errors() {
        return Ok(Outcome::new(sr));
    }
    let s = Arc::new(s);
    guarded("normalization", || {
        let n = normalize(&s, bound)?;
        let r = n.check();
        let c = &n.source.base;
        let modules: Vec<(String, String)> = n
            .modules
            .iter()
            .map(|m| (c.object_name(m.carrier).to_string(), c.morphism_name(m.action).to_string()))
            .collect();
        Ok(Outcome::new(r)
            .with_result(json!({
                "category": SkewMonCatDoc::from_moncat(&n.mod_cat),
                "modules": modules,
                "right_normal": n.mod_cat.is_right_normal(),
            }))
            .note(format!("{} modules", n.num_modules())))
    })
}

pub fn theorem2_cmd(ctx: &mut Ctx, base: &Path, endo: &Path, hom: &Path) -> Run {
    let bd: CategoryDoc = ctx.load(base)?;
    let b = Arc::new(located(bd.to_cat("$"), base)?);
    let list = |ctx: &mut Ctx, file: &Path| -> Result<Vec<FinProf>, Failure> {
        let docs: Vec<ProfDoc> = ctx.load(file)?;
        docs.iter()
            .enumerate()
            .map(|(i, d)| located(d.to_prof_at(&format!("$[{i}]")), file))
            .collect()
    };
    let endo = list(ctx, endo)?;
    let homs = list(ctx, hom)?;
    guarded("comparison", || Ok(Outcome::new(theorem2_instance(&b, endo, homs)?)))
}

pub fn fixture(name: Option<&str>) -> Run {
    let lib = crate::library::library();
    match name {
        None => {
            let list: Vec<Value> = lib.iter().map(|f| json!({ "name": f.name, "kind": f.kind })).collect();
            let mut out = Outcome::new(Report::new("fixtures")).with_result(list);
            for f in &lib {
                out = out.note(format!("{:<32} {}", f.name, f.kind));
            }
            Ok(out)
        }
        Some(n) => {
            let f = lib.iter().find(|f| f.name == n).ok_or_else(|| {
                Failure::structural(format!("no fixture named {n}; run without a name for the list"))
            })?;
            Ok(Outcome::new(Report::new(format!("fixture {n}"))).with_result((f.build)()))
        }
    }
}
