use std::sync::Arc;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewcat_core::fincore::{
    check_preservation_by_right_tensor, coequalizer_search, CoforkFailure, FinCat,
};
use skewcat_core::fixtures::{self, categorical_group, twisted_categorical_group};
use skewcat_core::skew::{
    check_monoid, check_monoidal_functor, enumerate_monoids, is_monoid, is_normal,
    transport_monoid, IdentityMonoidal, Monoid, SkewBicat, SkewMonCat, SkewMonoidal,
    TableMonoidalFunctor, AXIOM_NAMES,
};

#[test]
fn every_fixture_is_skew_monoidal() {
    for (name, c) in fixtures::skew_moncat_fixtures() {
        let r = c.check();
        assert!(r.all_pass(), "{name}\n{}", r.summary());
    }
}

#[test]
fn right_normality_of_fixtures() {
    assert!(fixtures::strict_z2().is_right_normal());
    assert!(fixtures::strict_z2().is_monoidal());
    assert!(!fixtures::right_projection_ch2().is_right_normal());
    assert!(!fixtures::skew_ch3().is_right_normal());
    let tw = twisted_categorical_group(2, 3, fixtures::sample_cochain);
    assert!(tw.is_monoidal());
    // the twist makes the associator non-trivial
    assert!(tw.alpha.iter().any(|&a| !tw.base.is_identity(a)));
}

#[test]
fn suspension_roundtrip_and_agreement() {
    for (name, c) in fixtures::skew_moncat_fixtures() {
        let b = SkewBicat::suspension(&c);
        assert_eq!(b.num_cells0(), 1);
        assert_eq!(b.desuspension().unwrap(), c, "{name}");
        let (rb, rc) = (b.check(), c.check());
        let verdicts = |r: &skewcat_core::Report| {
            r.entries
                .iter()
                .map(|e| (e.name.clone(), e.status))
                .collect::<Vec<_>>()
        };
        assert_eq!(verdicts(&rb), verdicts(&rc), "{name}");
        assert_eq!(b.is_bicategory(), c.is_monoidal(), "{name}");
    }
}

#[test]
fn suspension_of_strict_z2_has_discrete_hom() {
    let b = SkewBicat::suspension(&fixtures::strict_z2());
    assert_eq!(b.homs[0].num_objects(), 2);
    assert!(b.is_locally_discrete());
}

#[test]
fn desuspension_rejects_many_zero_cells() {
    let b = SkewBicat::locally_discrete(&fixtures::ch2()).unwrap();
    assert!(b.desuspension().is_err());
}

#[test]
fn locally_discrete_chains_pass() {
    for n in 1..=4 {
        let b = SkewBicat::locally_discrete(&FinCat::chain(n)).unwrap();
        assert!(b.check().all_pass());
        assert!(b.is_bicategory());
    }
    let b = SkewBicat::locally_discrete(&FinCat::cyclic_group(3)).unwrap();
    assert!(b.check().all_pass());
}

#[test]
fn locally_discrete_of_broken_category_fails() {
    let c = fixtures::ch3();
    let f = c.morphism_index("0<=1").unwrap();
    let g = c.morphism_index("1<=2").unwrap();
    let broken = c.with_composite_overridden(g, f, c.morphism_index("1_0").unwrap());
    assert!(!broken.validate().is_ok());
    let passes = SkewBicat::locally_discrete(&broken).is_ok_and(|b| b.check().all_pass());
    assert!(!passes);
}

#[test]
fn mutated_associator_breaks_an_axiom() {
    let c = twisted_categorical_group(2, 3, fixtures::sample_cochain);
    for t in 0..c.alpha.len() {
        let mut m = c.clone();
        let a = m.alpha[t];
        // another automorphism of the same object
        m.alpha[t] = (a / 3) * 3 + (a % 3 + 1) % 3;
        let r = m.check();
        assert!(!r.all_pass(), "alpha mutation {t} went unnoticed");
    }
}

#[test]
fn mutated_lambda_breaks_axiom_3_or_5() {
    let c = categorical_group(1, 3);
    let mut m = c.clone();
    m.lambda[0] = 1;
    let r = m.check();
    assert!(!r.passed("skew.axiom3") || !r.passed("skew.axiom5"), "{}", r.summary());
}

#[test]
fn mutated_rho_breaks_axiom_2() {
    let mut m = categorical_group(2, 2);
    m.rho[1] = 3;
    let r = m.check();
    assert!(!r.passed("skew.axiom2"), "{}", r.summary());
    assert!(!r.entry("skew.axiom2").unwrap().witness.is_empty());
}

#[test]
fn ill_typed_component_is_structural() {
    let mut m = fixtures::skew_ch3();
    m.lambda[1] = m.base.identity(0);
    let r = m.check();
    assert!(r.has_structural_errors());
    assert!(r.entries.is_empty());
}

/// Naive monoid oracle: every (carrier, μ, η) triple of base morphisms,
/// filtered by typing and the three equations written out directly.
fn monoid_oracle(c: &SkewMonCat) -> Vec<Monoid<usize, usize>> {
    let b = &c.base;
    let mut out = Vec::new();
    for m in 0..b.num_objects() {
        for mu in 0..b.num_morphisms() {
            for eta in 0..b.num_morphisms() {
                if b.src(mu) != c.tensor_obj(m, m) || b.tgt(mu) != m {
                    continue;
                }
                if b.src(eta) != c.unit || b.tgt(eta) != m {
                    continue;
                }
                let id = b.identity(m);
                let a = b.compose(mu, c.tensor_mor(mu, id));
                let a2 = b.compose(mu, b.compose(c.tensor_mor(id, mu), c.alpha_at(m, m, m)));
                let l = b.compose(mu, c.tensor_mor(eta, id)) == c.lambda[m];
                let r = b.compose(mu, b.compose(c.tensor_mor(id, eta), c.rho[m])) == id;
                if a == a2 && l && r {
                    out.push(Monoid {
                        carrier: m,
                        mult: mu,
                        unit: eta,
                    });
                }
            }
        }
    }
    out
}

#[test]
fn monoid_enumeration_matches_oracle() {
    for (name, c) in fixtures::skew_moncat_fixtures() {
        let got = c.monoids();
        assert_eq!(got, monoid_oracle(&c), "{name}");
        assert_eq!(got, c.monoids(), "deterministic");
        for m in &got {
            assert!(check_monoid(&c, m).all_pass());
        }
    }
    assert_eq!(fixtures::terminal_skew().monoids().len(), 1);
    assert_eq!(fixtures::strict_z2().monoids().len(), 1);
}

#[test]
fn identity_monoidal_functor_passes() {
    for (name, c) in fixtures::skew_moncat_fixtures() {
        let f = IdentityMonoidal(&c);
        let r = check_monoidal_functor(&f, &c.objects(), name);
        assert!(r.all_pass(), "{}", r.summary());
        assert!(is_normal(&f));
        let t = TableMonoidalFunctor::identity(&Arc::new(c.clone()));
        assert!(t.check().all_pass());
    }
}

fn gauge_functor(g: usize, h: usize, cocycle: fn(usize, usize) -> usize) -> TableMonoidalFunctor {
    let strict = Arc::new(categorical_group(g, h));
    let twisted = Arc::new(twisted_categorical_group(g, h, cocycle));
    let n = g;
    TableMonoidalFunctor {
        dom: strict.clone(),
        cod: twisted,
        functor: skewcat_core::fincore::FinFunctor::identity(&strict.base),
        f2: (0..n * n)
            .map(|p| ((p / n + p % n) % g) * h + cocycle(p / n, p % n) % h)
            .collect(),
        f0: 0,
    }
}

#[test]
fn gauge_identity_is_monoidal_and_scrambling_breaks_it() {
    let f = gauge_functor(2, 3, fixtures::sample_cochain);
    assert!(f.check().all_pass(), "{}", f.check().summary());
    let mut bad = f.clone();
    bad.f2[2] = (bad.f2[2] / 3) * 3 + (bad.f2[2] + 1) % 3;
    let r = bad.check();
    assert!(!r.passed("monoidal_functor.associativity"), "{}", r.summary());
}

#[test]
fn monoidal_functors_send_monoids_to_monoids() {
    let f = gauge_functor(3, 3, fixtures::sample_cochain);
    for m in f.dom.monoids() {
        let t = transport_monoid(&f, &m);
        assert!(is_monoid(&*f.cod, &t));
    }
    assert_eq!(f.dom.monoids().len(), f.cod.monoids().len());
}

#[test]
fn right_tensor_preservation() {
    let c = fixtures::strict_z2();
    let cf = coequalizer_search(&c.base, 1, 1).unwrap();
    assert!(check_preservation_by_right_tensor(&c.tensor, &cf, c.unit).is_ok());
    let (cat, cofork, tensor) = fixtures::collapsing_tensor();
    assert_eq!(coequalizer_search(&cat, cofork.u, cofork.v), Some(cofork));
    match check_preservation_by_right_tensor(&tensor, &cofork, 0) {
        Err(CoforkFailure::NotUniversal { other, .. }) => {
            assert_eq!(cat.morphism_name(other), "1X");
        }
        other => panic!("expected a universality failure, got {other:?}"),
    }
}

/// Random invertible constraint data on a categorical group: every
/// component is an arbitrary automorphism.
fn random_constraints(g: usize, h: usize, rng: &mut ChaCha8Rng) -> SkewMonCat {
    let mut c = categorical_group(g, h);
    for a in c.alpha.iter_mut().chain(c.lambda.iter_mut()).chain(c.rho.iter_mut()) {
        *a = (*a / h) * h + rng.gen_range(0..h);
    }
    c
}

#[test]
fn bicategory_axioms_3_to_5_follow_from_1_and_2() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut hits = 0;
    for _ in 0..3000 {
        let (g, h) = [(1, 2), (1, 3), (2, 2)][rng.gen_range(0..3)];
        let c = random_constraints(g, h, &mut rng);
        let r = c.check();
        if !r.passed("skew.naturality.alpha") || !r.passed("skew.naturality.lambda")
            || !r.passed("skew.naturality.rho")
        {
            continue;
        }
        if r.passed(AXIOM_NAMES[0]) && r.passed(AXIOM_NAMES[1]) {
            hits += 1;
            for n in &AXIOM_NAMES[2..] {
                assert!(r.passed(n), "{}", r.summary());
            }
        }
    }
    assert!(hits > 10, "only {hits} instances satisfied axioms 1-2");
}

proptest! {
    #[test]
    fn twisted_groups_stay_skew_monoidal(table in proptest::collection::vec(0usize..3, 9)) {
        let c = twisted_categorical_group(3, 3, |x, y| table[x * 3 + y]);
        prop_assert!(c.check().all_pass());
        prop_assert!(c.is_right_normal());
        prop_assert_eq!(c.monoids().len(), monoid_oracle(&c).len());
    }
}

#[test]
fn generic_and_table_inverse_agree() {
    let c = fixtures::skew_ch3();
    for f in 0..c.base.num_morphisms() {
        assert_eq!(SkewMonoidal::inverse(&c, &f), c.base.inverse(f));
    }
    let m = Monoid {
        carrier: 2usize,
        mult: c.base.identity(2),
        unit: c.base.hom(0, 2)[0],
    };
    assert!(enumerate_monoids(&c, &[2]).contains(&m));
}
