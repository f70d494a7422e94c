use super::coeq::Coequalizers;
use super::lazy::Normalization;
use super::modules::{is_module, tensor_module, unit_module, unit_monad_laws, wedge_pair};
use crate::report::{Report, Tally};
use crate::skew::{check_monoidal_functor, check_skew_monoidal, SkewMonoidal};

pub const DIAGRAM_TAGS: [(&str, &str); 11] = [
    ("normalize.unit_monad", "-⊗I is a monad with multiplication (1λ)α and unit ρ"),
    ("normalize.tensor_module", "X⊗Y is a module with action (1y)α"),
    ("normalize.alpha1_factorization", "q(1q)α factors through q1 and coequalizes the next wedge pair"),
    ("normalize.alpha_pentagon", "α′ satisfies the pentagon"),
    ("normalize.unit_module", "(I, λ) is a module"),
    ("normalize.lambda_factorization", "λ factors through q: IX → I∧X as a module map"),
    ("normalize.split_coequalizer", "x is a split coequalizer of x1 and (1λ)α, so ρ′ is invertible"),
    ("normalize.alpha_rho", "α′ρ′ = 1∧ρ′"),
    ("normalize.alpha_lambda", "λ′α′ = λ′∧1"),
    ("normalize.triple", "(1∧λ′)α′(ρ′∧1) = 1"),
    ("normalize.lambda_rho", "λ′ρ′ = 1 at I"),
];

fn tally(i: usize) -> Tally {
    Tally::new(DIAGRAM_TAGS[i].0, DIAGRAM_TAGS[i].1).falsifying()
}

/// Each intermediate diagram of the normalization as a standalone equality,
/// instantiated at every tuple of the listed modules (unit included).
pub fn diagram_report<S: Coequalizers>(n: &Normalization<S>) -> Report {
    let s = &n.source;
    let ms = n.objects();
    let label = |m: &_| n.obj_label(m);
    let mut carriers: Vec<S::Obj> = Vec::new();
    for m in &ms {
        if !carriers.contains(&m.carrier) {
            carriers.push(m.carrier.clone());
        }
    }
    let i = s.unit();
    let mut report = Report::new("normalization diagrams");

    let mut t = tally(0);
    for x in &carriers {
        t.record(unit_monad_laws(s, x) == [true; 3], || vec![s.obj_label(x)]);
    }
    report.push(t.finish());

    let mut t = tally(1);
    for x in &carriers {
        for m in &ms {
            t.record(is_module(s, &tensor_module(s, x, m)), || vec![s.obj_label(x), label(m)]);
        }
    }
    report.push(t.finish());

    let mut t = tally(2);
    for x in &ms {
        for y in &ms {
            let xy = n.wedge(x, y).module;
            for z in &ms {
                let ok = n.try_alpha1(x, y, z).is_some_and(|a1| {
                    let (d0, d1) = wedge_pair(s, &xy, z);
                    s.compose(&a1, &d0) == s.compose(&a1, &d1)
                });
                t.record(ok, || vec![label(x), label(y), label(z)]);
            }
        }
    }
    report.push(t.finish());

    let mut t = tally(3);
    for w in &ms {
        for x in &ms {
            for y in &ms {
                for z in &ms {
                    let wx = n.tensor(w, x);
                    let yz = n.tensor(y, z);
                    let lhs = n.compose(&n.alpha(w, x, &yz), &n.alpha(&wx, y, z));
                    let rhs = n.compose_path(&[
                        n.right_whisker(&n.alpha(w, x, y), z),
                        n.alpha(w, &n.tensor(x, y), z),
                        n.left_whisker(w, &n.alpha(x, y, z)),
                    ]);
                    t.record(lhs == rhs, || vec![label(w), label(x), label(y), label(z)]);
                }
            }
        }
    }
    report.push(t.finish());

    let mut t = tally(4);
    t.record(is_module(s, &unit_module(s)), Vec::new);
    report.push(t.finish());

    let mut t = tally(5);
    for x in &ms {
        let w = n.wedge(&n.unit(), x);
        let ok = s.factor(&w.q, &s.lambda(&x.carrier)).is_some_and(|l| {
            s.compose(&l, &w.q) == s.lambda(&x.carrier)
                && n.hom(&w.module, x).iter().any(|f| f.mor == l)
        });
        t.record(ok, || vec![label(x)]);
    }
    report.push(t.finish());

    let mut t = tally(6);
    for m in &ms {
        let (x, act) = (&m.carrier, &m.action);
        let xi = s.tensor(x, &i);
        let mu = s.compose(&s.left_whisker(x, &s.lambda(&i)), &s.alpha(x, &i, &i));
        let eqs = [
            s.compose(act, &s.right_whisker(act, &i)) == s.compose(act, &mu),
            s.compose(act, &s.rho(x)) == s.identity(x),
            s.compose(&mu, &s.rho(&xi)) == s.identity(&xi),
            s.compose(&s.right_whisker(act, &i), &s.rho(&xi)) == s.compose(&s.rho(x), act),
        ];
        let rho = n.rho(m);
        let invertible = n
            .inverse(&rho)
            .is_some_and(|r| n.compose(&r, &rho) == n.identity(m) && n.compose(&rho, &r) == n.identity(&rho.tgt));
        t.record(eqs.iter().all(|&e| e) && invertible, || vec![label(m)]);
    }
    report.push(t.finish());

    let mut t = tally(7);
    for x in &ms {
        for y in &ms {
            let xy = n.tensor(x, y);
            let lhs = n.compose(&n.alpha(x, y, &n.unit()), &n.rho(&xy));
            t.record(lhs == n.left_whisker(x, &n.rho(y)), || vec![label(x), label(y)]);
        }
    }
    report.push(t.finish());

    let mut t = tally(8);
    for x in &ms {
        for y in &ms {
            let lhs = n.compose(&n.lambda(&n.tensor(x, y)), &n.alpha(&n.unit(), x, y));
            t.record(lhs == n.right_whisker(&n.lambda(x), y), || vec![label(x), label(y)]);
        }
    }
    report.push(t.finish());

    let mut t = tally(9);
    for x in &ms {
        for y in &ms {
            let lhs = n.compose_path(&[
                n.right_whisker(&n.rho(x), y),
                n.alpha(x, &n.unit(), y),
                n.left_whisker(x, &n.lambda(y)),
            ]);
            t.record(lhs == n.identity(&n.tensor(x, y)), || vec![label(x), label(y)]);
        }
    }
    report.push(t.finish());

    let mut t = tally(10);
    let u = n.unit();
    t.record(n.compose(&n.lambda(&u), &n.rho(&u)) == n.identity(&u), Vec::new);
    report.push(t.finish());

    report
}

/// The diagram checks, the skew monoidal laws on the listed modules, right
/// normality and the monoidal functor laws of `U`.
pub fn normalization_report<S: Coequalizers>(n: &Normalization<S>) -> Report {
    let ms = n.objects();
    let mut r = Report::new("normalization");
    r.extend(diagram_report(n));
    r.extend(check_skew_monoidal(n, &ms, "modules"));
    let mut t = Tally::new("normalize.right_normal", "ρ′ is invertible at every module").falsifying();
    for m in &ms {
        t.record(n.is_iso(&n.rho(m)), || vec![n.obj_label(m)]);
    }
    r.push(t.finish());
    r.extend(check_monoidal_functor(&n.forgetful(), &ms, "forgetful functor"));
    r
}
