use std::fmt::Debug;
use std::hash::Hash;

use crate::report::{Report, Tally};

/// A skew monoidal category presented computationally.
///
/// Implementations may be explicit finite tables or categories whose objects
/// are computed on demand (profunctors, modules). Every checker in this crate
/// takes an explicit list of objects to instantiate the laws at, so lazily
/// presented categories are checked on finite fragments.
pub trait SkewMonoidal {
    type Obj: Clone + Eq + Hash + Debug;
    type Mor: Clone + Eq + Hash + Debug;

    fn unit(&self) -> Self::Obj;
    fn tensor(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Obj;
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    fn src(&self, f: &Self::Mor) -> Self::Obj;
    fn tgt(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, x: &Self::Obj) -> Self::Mor;
    /// `g∘f`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor;
    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> Vec<Self::Mor>;
    /// `(X⊗Y)⊗Z → X⊗(Y⊗Z)`.
    fn alpha(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> Self::Mor;
    /// `I⊗X → X`.
    fn lambda(&self, x: &Self::Obj) -> Self::Mor;
    /// `X → X⊗I`.
    fn rho(&self, x: &Self::Obj) -> Self::Mor;
    fn obj_label(&self, x: &Self::Obj) -> String;
    fn mor_label(&self, f: &Self::Mor) -> String;

    /// Composes a path given in application order.
    fn compose_path(&self, path: &[Self::Mor]) -> Self::Mor {
        let (first, rest) = path.split_first().expect("empty path");
        rest.iter()
            .fold(first.clone(), |acc, next| self.compose(next, &acc))
    }

    /// Two-sided inverse by exhaustive search of the reverse hom-set.
    fn inverse(&self, f: &Self::Mor) -> Option<Self::Mor> {
        let (x, y) = (self.src(f), self.tgt(f));
        let (ix, iy) = (self.identity(&x), self.identity(&y));
        self.hom(&y, &x)
            .into_iter()
            .find(|g| self.compose(g, f) == ix && self.compose(f, g) == iy)
    }

    fn is_iso(&self, f: &Self::Mor) -> bool {
        self.inverse(f).is_some()
    }

    /// `f ⊗ 1_Y`.
    fn right_whisker(&self, f: &Self::Mor, y: &Self::Obj) -> Self::Mor {
        self.tensor_mor(f, &self.identity(y))
    }

    /// `1_X ⊗ g`.
    fn left_whisker(&self, x: &Self::Obj, g: &Self::Mor) -> Self::Mor {
        self.tensor_mor(&self.identity(x), g)
    }
}

pub const AXIOM_NAMES: [&str; 5] = [
    "skew.axiom1",
    "skew.axiom2",
    "skew.axiom3",
    "skew.axiom4",
    "skew.axiom5",
];

pub const AXIOM_TAGS: [&str; 5] = [
    "skew axiom 1: pentagon for alpha",
    "skew axiom 2: rho-alpha-lambda triangle (g1)f",
    "skew axiom 3: lambda-alpha triangle (1g)f",
    "skew axiom 4: rho-alpha triangle (gf)1",
    "skew axiom 5: lambda_1 after rho_1 is the identity",
];

fn typed<S: SkewMonoidal>(s: &S, f: &S::Mor, src: &S::Obj, tgt: &S::Obj) -> bool {
    s.src(f) == *src && s.tgt(f) == *tgt
}

/// Typing of the structure components at the listed objects. Non-empty
/// output means the structure is malformed and laws were not checked.
pub fn structural_errors<S: SkewMonoidal>(s: &S, objects: &[S::Obj]) -> Vec<String> {
    let mut out = Vec::new();
    let i = s.unit();
    for x in objects {
        if !typed(s, &s.lambda(x), &s.tensor(&i, x), x) {
            out.push(format!("lambda at {} is ill-typed", s.obj_label(x)));
        }
        if !typed(s, &s.rho(x), x, &s.tensor(x, &i)) {
            out.push(format!("rho at {} is ill-typed", s.obj_label(x)));
        }
        for y in objects {
            for z in objects {
                let a = s.alpha(x, y, z);
                let src = s.tensor(&s.tensor(x, y), z);
                let tgt = s.tensor(x, &s.tensor(y, z));
                if !typed(s, &a, &src, &tgt) {
                    out.push(format!(
                        "alpha at ({}, {}, {}) is ill-typed",
                        s.obj_label(x),
                        s.obj_label(y),
                        s.obj_label(z)
                    ));
                }
            }
        }
    }
    out
}

/// Naturality of α, λ, ρ (in each variable separately, which together with
/// functoriality of ⊗ is equivalent to joint naturality) and the five skew
/// monoidal axioms, instantiated at every tuple of listed objects.
pub fn check_skew_monoidal<S: SkewMonoidal>(s: &S, objects: &[S::Obj], subject: &str) -> Report {
    let structural = structural_errors(s, objects);
    if !structural.is_empty() {
        return Report {
            subject: subject.into(),
            structural,
            entries: Vec::new(),
        };
    }
    let mut report = Report::new(subject);
    let i = s.unit();
    let l = |x: &S::Obj| s.obj_label(x);
    let id = |x: &S::Obj| s.identity(x);

    let mut nat_a = Tally::new("skew.naturality.alpha", "naturality of alpha");
    let mut nat_l = Tally::new("skew.naturality.lambda", "naturality of lambda");
    let mut nat_r = Tally::new("skew.naturality.rho", "naturality of rho");
    for x in objects {
        for x2 in objects {
            for phi in s.hom(x, x2) {
                let lhs = s.compose(&s.lambda(x2), &s.left_whisker(&i, &phi));
                let rhs = s.compose(&phi, &s.lambda(x));
                nat_l.record(lhs == rhs, || vec![s.mor_label(&phi)]);
                let lhs = s.compose(&s.rho(x2), &phi);
                let rhs = s.compose(&s.right_whisker(&phi, &i), &s.rho(x));
                nat_r.record(lhs == rhs, || vec![s.mor_label(&phi)]);
                for y in objects {
                    for z in objects {
                        // first variable
                        let lhs = s.compose(
                            &s.alpha(x2, y, z),
                            &s.tensor_mor(&s.tensor_mor(&phi, &id(y)), &id(z)),
                        );
                        let rhs = s.compose(
                            &s.tensor_mor(&phi, &id(&s.tensor(y, z))),
                            &s.alpha(x, y, z),
                        );
                        nat_a.record(lhs == rhs, || {
                            vec!["first".into(), s.mor_label(&phi), l(y), l(z)]
                        });
                        // second variable
                        let lhs = s.compose(
                            &s.alpha(y, x2, z),
                            &s.tensor_mor(&s.tensor_mor(&id(y), &phi), &id(z)),
                        );
                        let rhs = s.compose(
                            &s.tensor_mor(&id(y), &s.tensor_mor(&phi, &id(z))),
                            &s.alpha(y, x, z),
                        );
                        nat_a.record(lhs == rhs, || {
                            vec!["second".into(), l(y), s.mor_label(&phi), l(z)]
                        });
                        // third variable
                        let lhs = s.compose(
                            &s.alpha(y, z, x2),
                            &s.tensor_mor(&id(&s.tensor(y, z)), &phi),
                        );
                        let rhs = s.compose(
                            &s.tensor_mor(&id(y), &s.tensor_mor(&id(z), &phi)),
                            &s.alpha(y, z, x),
                        );
                        nat_a.record(lhs == rhs, || {
                            vec!["third".into(), l(y), l(z), s.mor_label(&phi)]
                        });
                    }
                }
            }
        }
    }
    report.push(nat_a.finish());
    report.push(nat_l.finish());
    report.push(nat_r.finish());

    let mut ax = AXIOM_NAMES
        .iter()
        .zip(AXIOM_TAGS)
        .map(|(n, t)| Tally::new(n, t))
        .collect::<Vec<_>>();
    for a in objects {
        for b in objects {
            for c in objects {
                for d in objects {
                    let top = s.compose_path(&[
                        s.right_whisker(&s.alpha(a, b, c), d),
                        s.alpha(a, &s.tensor(b, c), d),
                        s.left_whisker(a, &s.alpha(b, c, d)),
                    ]);
                    let bottom = s.compose(
                        &s.alpha(a, b, &s.tensor(c, d)),
                        &s.alpha(&s.tensor(a, b), c, d),
                    );
                    ax[0].record(top == bottom, || vec![l(a), l(b), l(c), l(d)]);
                }
            }
            let lhs = s.compose_path(&[
                s.right_whisker(&s.rho(a), b),
                s.alpha(a, &i, b),
                s.left_whisker(a, &s.lambda(b)),
            ]);
            ax[1].record(lhs == id(&s.tensor(a, b)), || vec![l(a), l(b)]);
            let lhs = s.compose(&s.lambda(&s.tensor(a, b)), &s.alpha(&i, a, b));
            ax[2].record(lhs == s.right_whisker(&s.lambda(a), b), || vec![l(a), l(b)]);
            let lhs = s.compose(&s.alpha(a, b, &i), &s.rho(&s.tensor(a, b)));
            ax[3].record(lhs == s.left_whisker(a, &s.rho(b)), || vec![l(a), l(b)]);
        }
    }
    let lhs = s.compose(&s.lambda(&i), &s.rho(&i));
    ax[4].record(lhs == id(&i), || vec![l(&i)]);
    for t in ax {
        report.push(t.finish());
    }
    report
}

/// Whether every `ρ_X` for listed `X` has a two-sided inverse; on failure
/// returns the first offending object.
pub fn right_normal_witness<S: SkewMonoidal>(s: &S, objects: &[S::Obj]) -> Option<S::Obj> {
    objects.iter().find(|x| !s.is_iso(&s.rho(x))).cloned()
}

pub fn is_right_normal_on<S: SkewMonoidal>(s: &S, objects: &[S::Obj]) -> bool {
    right_normal_witness(s, objects).is_none()
}

/// Whether α, λ, ρ are invertible at every listed instance.
pub fn is_monoidal_on<S: SkewMonoidal>(s: &S, objects: &[S::Obj]) -> bool {
    objects.iter().all(|x| s.is_iso(&s.lambda(x)) && s.is_iso(&s.rho(x)))
        && objects.iter().all(|x| {
            objects
                .iter()
                .all(|y| objects.iter().all(|z| s.is_iso(&s.alpha(x, y, z))))
        })
}
