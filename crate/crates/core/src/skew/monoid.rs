use serde::{Deserialize, Serialize};

use super::monoidal::SkewMonoidal;
use crate::report::{Report, Tally};

/// A monoid `(M, μ: M⊗M → M, η: I → M)` in a skew monoidal category.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monoid<O, M> {
    pub carrier: O,
    pub mult: M,
    pub unit: M,
}

pub const MONOID_TAGS: [(&str, &str); 3] = [
    ("monoid.associativity", "monoid equation: mu(mu 1) = mu(1 mu) alpha"),
    ("monoid.left_unit", "monoid equation: mu(eta 1) = lambda"),
    ("monoid.right_unit", "monoid equation: mu(1 eta) rho = 1"),
];

fn monoid_structural<S: SkewMonoidal>(s: &S, m: &Monoid<S::Obj, S::Mor>) -> Vec<String> {
    let mut out = Vec::new();
    let c = &m.carrier;
    if s.src(&m.mult) != s.tensor(c, c) || s.tgt(&m.mult) != *c {
        out.push("multiplication is not a morphism M⊗M → M".into());
    }
    if s.src(&m.unit) != s.unit() || s.tgt(&m.unit) != *c {
        out.push("unit is not a morphism I → M".into());
    }
    out
}

/// The three monoid equations, each as a separate entry.
pub fn check_monoid<S: SkewMonoidal>(s: &S, m: &Monoid<S::Obj, S::Mor>) -> Report {
    let subject = format!("monoid on {}", s.obj_label(&m.carrier));
    let structural = monoid_structural(s, m);
    if !structural.is_empty() {
        return Report {
            subject,
            structural,
            entries: Vec::new(),
        };
    }
    let mut report = Report::new(subject);
    for (k, ok) in monoid_laws(s, m).into_iter().enumerate() {
        let mut t = Tally::new(MONOID_TAGS[k].0, MONOID_TAGS[k].1);
        t.record(ok, || vec![s.obj_label(&m.carrier)]);
        report.push(t.finish());
    }
    report
}

/// Truth values of the three monoid equations (associativity, left unit,
/// right unit) for well-typed data.
pub fn monoid_laws<S: SkewMonoidal>(s: &S, m: &Monoid<S::Obj, S::Mor>) -> [bool; 3] {
    let (c, mu, eta) = (&m.carrier, &m.mult, &m.unit);
    let assoc = s.compose(mu, &s.right_whisker(mu, c))
        == s.compose_path(&[s.alpha(c, c, c), s.left_whisker(c, mu), mu.clone()]);
    let left = s.compose(mu, &s.right_whisker(eta, c)) == s.lambda(c);
    let right = s.compose_path(&[s.rho(c), s.left_whisker(c, eta), mu.clone()]) == s.identity(c);
    [assoc, left, right]
}

pub fn is_monoid<S: SkewMonoidal>(s: &S, m: &Monoid<S::Obj, S::Mor>) -> bool {
    monoid_structural(s, m).is_empty() && monoid_laws(s, m).iter().all(|&b| b)
}

/// All monoids with carrier among `carriers`, in carrier, then
/// multiplication, then unit order.
pub fn enumerate_monoids<S: SkewMonoidal>(s: &S, carriers: &[S::Obj]) -> Vec<Monoid<S::Obj, S::Mor>> {
    let i = s.unit();
    let mut out = Vec::new();
    for c in carriers {
        let units = s.hom(&i, c);
        for mult in s.hom(&s.tensor(c, c), c) {
            for unit in &units {
                let m = Monoid {
                    carrier: c.clone(),
                    mult: mult.clone(),
                    unit: unit.clone(),
                };
                if monoid_laws(s, &m).iter().all(|&b| b) {
                    out.push(m);
                }
            }
        }
    }
    out
}
