use super::monoid::Monoid;
use super::monoidal::SkewMonoidal;
use crate::report::{Report, Tally};

type DObj<F> = <<F as MonoidalFunctor>::Dom as SkewMonoidal>::Obj;
type DMor<F> = <<F as MonoidalFunctor>::Dom as SkewMonoidal>::Mor;
type CObj<F> = <<F as MonoidalFunctor>::Cod as SkewMonoidal>::Obj;
type CMor<F> = <<F as MonoidalFunctor>::Cod as SkewMonoidal>::Mor;

/// A (lax) monoidal functor between skew monoidal categories.
pub trait MonoidalFunctor {
    type Dom: SkewMonoidal;
    type Cod: SkewMonoidal;

    fn dom(&self) -> &Self::Dom;
    fn cod(&self) -> &Self::Cod;
    fn map_obj(&self, x: &DObj<Self>) -> CObj<Self>;
    fn map_mor(&self, f: &DMor<Self>) -> CMor<Self>;
    /// `F2_{X,Y}: FX⊗FY → F(X⊗Y)`.
    fn f2(&self, x: &DObj<Self>, y: &DObj<Self>) -> CMor<Self>;
    /// `F0: I → FI`.
    fn f0(&self) -> CMor<Self>;
}

pub const FUNCTOR_TAGS: [(&str, &str); 5] = [
    ("monoidal_functor.functoriality", "F preserves identities and composition"),
    ("monoidal_functor.naturality", "naturality of F2"),
    (
        "monoidal_functor.associativity",
        "F(alpha) F2 (F2 1) = F2 (1 F2) alpha",
    ),
    ("monoidal_functor.left_unit", "F(lambda) F2 (F0 1) = lambda"),
    ("monoidal_functor.right_unit", "F2 (1 F0) rho = F(rho)"),
];

fn structural<F: MonoidalFunctor>(f: &F, objects: &[DObj<F>]) -> Vec<String> {
    let (d, c) = (f.dom(), f.cod());
    let mut out = Vec::new();
    let f0 = f.f0();
    if c.src(&f0) != c.unit() || c.tgt(&f0) != f.map_obj(&d.unit()) {
        out.push("F0 is not a morphism I → F(I)".into());
    }
    for x in objects {
        for y in objects {
            let m = f.f2(x, y);
            let src = c.tensor(&f.map_obj(x), &f.map_obj(y));
            if c.src(&m) != src || c.tgt(&m) != f.map_obj(&d.tensor(x, y)) {
                out.push(format!(
                    "F2 at ({}, {}) is ill-typed",
                    d.obj_label(x),
                    d.obj_label(y)
                ));
            }
            for g in d.hom(x, y) {
                let fg = f.map_mor(&g);
                if c.src(&fg) != f.map_obj(x) || c.tgt(&fg) != f.map_obj(y) {
                    out.push(format!("F({}) is ill-typed", d.mor_label(&g)));
                }
            }
        }
    }
    out
}

/// Functoriality, naturality of `F2` and the three coherence diagrams at
/// every tuple of listed objects.
pub fn check_monoidal_functor<F: MonoidalFunctor>(f: &F, objects: &[DObj<F>], subject: &str) -> Report {
    let errs = structural(f, objects);
    if !errs.is_empty() {
        return Report {
            subject: subject.into(),
            structural: errs,
            entries: Vec::new(),
        };
    }
    let (d, c) = (f.dom(), f.cod());
    let fo = |x: &DObj<F>| f.map_obj(x);
    let l = |x: &DObj<F>| d.obj_label(x);
    let mut tallies = FUNCTOR_TAGS
        .iter()
        .map(|(n, t)| Tally::new(n, t))
        .collect::<Vec<_>>();

    for x in objects {
        tallies[0].record(f.map_mor(&d.identity(x)) == c.identity(&fo(x)), || vec![l(x)]);
        for y in objects {
            for g in d.hom(x, y) {
                for z in objects {
                    for h in d.hom(y, z) {
                        let lhs = f.map_mor(&d.compose(&h, &g));
                        let rhs = c.compose(&f.map_mor(&h), &f.map_mor(&g));
                        tallies[0].record(lhs == rhs, || vec![d.mor_label(&g), d.mor_label(&h)]);
                    }
                    // naturality of F2 in the first and second variables
                    let lhs = c.compose(&f.map_mor(&d.right_whisker(&g, z)), &f.f2(x, z));
                    let rhs = c.compose(&f.f2(y, z), &c.right_whisker(&f.map_mor(&g), &fo(z)));
                    tallies[1].record(lhs == rhs, || vec![d.mor_label(&g), l(z)]);
                    let lhs = c.compose(&f.map_mor(&d.left_whisker(z, &g)), &f.f2(z, x));
                    let rhs = c.compose(&f.f2(z, y), &c.left_whisker(&fo(z), &f.map_mor(&g)));
                    tallies[1].record(lhs == rhs, || vec![l(z), d.mor_label(&g)]);
                }
            }
            for z in objects {
                let lhs = c.compose_path(&[
                    c.right_whisker(&f.f2(x, y), &fo(z)),
                    f.f2(&d.tensor(x, y), z),
                    f.map_mor(&d.alpha(x, y, z)),
                ]);
                let rhs = c.compose_path(&[
                    c.alpha(&fo(x), &fo(y), &fo(z)),
                    c.left_whisker(&fo(x), &f.f2(y, z)),
                    f.f2(x, &d.tensor(y, z)),
                ]);
                tallies[2].record(lhs == rhs, || vec![l(x), l(y), l(z)]);
            }
        }
        let i = d.unit();
        let lhs = c.compose_path(&[
            c.right_whisker(&f.f0(), &fo(x)),
            f.f2(&i, x),
            f.map_mor(&d.lambda(x)),
        ]);
        tallies[3].record(lhs == c.lambda(&fo(x)), || vec![l(x)]);
        let lhs = c.compose_path(&[
            c.rho(&fo(x)),
            c.left_whisker(&fo(x), &f.f0()),
            f.f2(x, &i),
        ]);
        tallies[4].record(lhs == f.map_mor(&d.rho(x)), || vec![l(x)]);
    }
    let mut report = Report::new(subject);
    for t in tallies {
        report.push(t.finish());
    }
    report
}

/// A monoidal functor is normal when `F0` is invertible.
pub fn is_normal<F: MonoidalFunctor>(f: &F) -> bool {
    f.cod().is_iso(&f.f0())
}

/// The image of a monoid: carrier `FM`, multiplication `Fμ∘F2`, unit `Fη∘F0`.
pub fn transport_monoid<F: MonoidalFunctor>(
    f: &F,
    m: &Monoid<DObj<F>, DMor<F>>,
) -> Monoid<CObj<F>, CMor<F>> {
    let c = f.cod();
    Monoid {
        carrier: f.map_obj(&m.carrier),
        mult: c.compose(&f.map_mor(&m.mult), &f.f2(&m.carrier, &m.carrier)),
        unit: c.compose(&f.map_mor(&m.unit), &f.f0()),
    }
}

/// The identity monoidal functor.
pub struct IdentityMonoidal<'a, S>(pub &'a S);

impl<S: SkewMonoidal> MonoidalFunctor for IdentityMonoidal<'_, S> {
    type Dom = S;
    type Cod = S;

    fn dom(&self) -> &S {
        self.0
    }
    fn cod(&self) -> &S {
        self.0
    }
    fn map_obj(&self, x: &S::Obj) -> S::Obj {
        x.clone()
    }
    fn map_mor(&self, f: &S::Mor) -> S::Mor {
        f.clone()
    }
    fn f2(&self, x: &S::Obj, y: &S::Obj) -> S::Mor {
        self.0.identity(&self.0.tensor(x, y))
    }
    fn f0(&self) -> S::Mor {
        self.0.identity(&self.0.unit())
    }
}
