use std::collections::HashSet;
use std::sync::Arc;

use proptest::prelude::*;
use serde::de::DeserializeOwned;
use serde::Serialize;
use skewcat_core::fincore::{FinCat, FinFunctor, NatTrans};
use skewcat_core::fixtures;
use skewcat_core::format::{
    parse, print, AlgebraDoc, BicatDoc, CategoryDoc, FunctorDoc, HomBundleDoc, MonadDoc, MwMonadDoc,
    NatTransDoc, ProfDoc, SkewMonCatDoc, WarpingDoc,
};
use skewcat_core::mw::{enumerate_monads, enumerate_mw, enumerate_mw_algebras, DEFAULT_MORPHISM_BOUND, MW_ALGEBRA_TAGS, MW_TAGS};
use skewcat_core::normalize::{normalize, DEFAULT_MODULE_BOUND, DIAGRAM_TAGS, THEOREM2_TAGS};
use skewcat_core::profhom::hom_prof;
use skewcat_core::skew::{check_monoid, enumerate_monoids, SkewBicat, AXIOM_NAMES, AXIOM_TAGS, MONOID_TAGS};
use skewcat_core::warpings::{mw_as_warping, SkewWarping, WarpingAlgebra, ALGEBRA_LAW_NAMES, LAW_NAMES};
use skewcat_core::{Entry, Report, Status};

/// Printing, parsing and printing again gives the same bytes.
fn stable<T: Serialize + DeserializeOwned>(doc: &T) -> String {
    let text = print(doc);
    let again: T = parse(&text).unwrap();
    assert_eq!(print(&again), text);
    text
}

fn categories() -> Vec<FinCat> {
    vec![
        FinCat::terminal(),
        fixtures::ch2(),
        fixtures::ch3(),
        FinCat::cyclic_group(2),
        FinCat::cyclic_group(3),
        fixtures::cofork_category().0,
    ]
}

#[test]
fn categories_round_trip_byte_identically() {
    for c in categories() {
        let doc = CategoryDoc::from_cat(&c);
        stable(&doc);
        assert_eq!(doc.to_cat("$").unwrap(), c);
    }
}

#[test]
fn functors_and_transformations_round_trip() {
    let c = Arc::new(fixtures::ch3());
    let m = &enumerate_monads(&c, DEFAULT_MORPHISM_BOUND).unwrap()[1];
    let doc = FunctorDoc::from_functor(&m.d);
    stable(&doc);
    assert_eq!(doc.to_functor("$").unwrap(), m.d);
    let doc = NatTransDoc::from_nat(&m.mult);
    stable(&doc);
    assert_eq!(doc.to_nat("$").unwrap(), m.mult);
    let id = NatTrans::identity(&FinFunctor::identity(&c));
    assert_eq!(NatTransDoc::from_nat(&id).to_nat("$").unwrap(), id);
}

#[test]
fn finite_sets_round_trip() {
    let s = skewcat_core::fincore::FinSetObj::new(vec!["a".into(), "b".into()]);
    let text = print(&s);
    assert_eq!(parse::<skewcat_core::fincore::FinSetObj>(&text).unwrap(), s);
}

#[test]
fn skew_monoidal_categories_round_trip() {
    for (name, s) in fixtures::skew_moncat_fixtures() {
        let doc = SkewMonCatDoc::from_moncat(&s);
        stable(&doc);
        assert_eq!(doc.to_moncat().unwrap(), s, "{name}");
    }
}

#[test]
fn bicategories_warpings_and_algebras_round_trip() {
    for (name, s) in fixtures::skew_moncat_fixtures() {
        let b = Arc::new(SkewBicat::suspension(&s));
        let doc = BicatDoc::from_bicat(&b);
        stable(&doc);
        assert_eq!(doc.to_bicat().unwrap(), *b, "{name}");
        let w = Arc::new(SkewWarping::identity(&b));
        let doc = WarpingDoc::from_warping(&w);
        stable(&doc);
        assert_eq!(doc.to_warping().unwrap(), *w, "{name}");
        let a = WarpingAlgebra::free(&w, 0);
        let doc = AlgebraDoc::from_algebra(&a);
        stable(&doc);
        assert_eq!(doc.to_algebra().unwrap(), a, "{name}");
    }
    // a warping with non-identity D on a many-object ambient
    let t = fixtures::chain_closure_mw(&[1, 1, 2]);
    let w = Arc::new(mw_as_warping(&t).unwrap());
    let doc = WarpingDoc::from_warping(&w);
    stable(&doc);
    assert_eq!(doc.to_warping().unwrap(), *w);
    for x in 0..3 {
        let a = WarpingAlgebra::free(&w, x);
        assert_eq!(AlgebraDoc::from_algebra(&a).to_algebra().unwrap(), a);
    }
}

#[test]
fn monads_and_mw_monads_round_trip() {
    for c in categories() {
        let c = Arc::new(c);
        for m in enumerate_monads(&c, DEFAULT_MORPHISM_BOUND).unwrap() {
            let doc = MonadDoc::from_monad(&m);
            stable(&doc);
            assert_eq!(doc.to_monad().unwrap(), m);
        }
        for t in enumerate_mw(&c, DEFAULT_MORPHISM_BOUND).unwrap() {
            let doc = MwMonadDoc::from_mw(&t);
            stable(&doc);
            assert_eq!(doc.to_mw().unwrap(), t);
        }
    }
}

#[test]
fn profunctors_and_bundles_round_trip() {
    for (name, bundle) in fixtures::hom_bundles() {
        let doc = HomBundleDoc::from_bundle(&bundle);
        stable(&doc);
        let back = doc.to_bundle().unwrap();
        assert_eq!(back.objects, bundle.objects, "{name}");
        assert_eq!(back.endo, bundle.endo, "{name}");
        for p in bundle.objects.iter().chain(&bundle.endo) {
            assert_eq!(ProfDoc::from_prof(p).to_prof().unwrap(), *p, "{name}");
        }
    }
    let p = hom_prof(&Arc::new(FinCat::cyclic_group(3)));
    assert_eq!(ProfDoc::from_prof(&p).to_prof().unwrap(), p);
}

#[test]
fn errors_carry_json_paths() {
    let mut doc = CategoryDoc::from_cat(&fixtures::ch3());
    doc.comp[4].2 = "nope".into();
    let err = doc.to_cat("$").unwrap_err();
    assert_eq!(err.path, "$.comp[4]");

    let err = parse::<CategoryDoc>(r#"{"objects": ["a"], "morphisms": [["i", "a", 7]], "identities": [], "comp": []}"#)
        .unwrap_err();
    assert_eq!(err.path, "$.morphisms[0][2]");

    let mut doc = SkewMonCatDoc::from_moncat(&fixtures::strict_z2());
    doc.alpha.pop();
    assert_eq!(doc.to_moncat().unwrap_err().path, "$.alpha");
    let mut doc = SkewMonCatDoc::from_moncat(&fixtures::strict_z2());
    doc.lambda[1].1 = "zzz".into();
    assert_eq!(doc.to_moncat().unwrap_err().path, "$.lambda[1]");

    let mut doc = WarpingDoc::from_warping(&mw_as_warping(&fixtures::chain_closure_mw(&[1, 1, 2])).unwrap());
    doc.v[0].5 = "zzz".into();
    assert_eq!(doc.to_warping().unwrap_err().path, "$.v[0]");
    doc.ambient.units.clear();
    assert_eq!(doc.to_warping().unwrap_err().path, "$.ambient.units");
}

fn arb_report() -> impl Strategy<Value = Report> {
    let status = prop_oneof![Just(Status::Pass), Just(Status::Fail), Just(Status::Falsification)];
    let entry = ("[a-z.]{1,12}", "[ -~]{0,20}", status, 0usize..1000, prop::collection::vec("[a-z0-9(),]{1,6}", 0..3))
        .prop_map(|(name, tag, status, instances, witness)| Entry {
            name,
            tag,
            status,
            instances,
            witness,
        });
    (
        "[ -~]{0,16}",
        prop::collection::vec("[ -~]{1,10}", 0..2),
        prop::collection::vec(entry, 0..6),
    )
        .prop_map(|(subject, structural, entries)| Report {
            subject,
            structural,
            entries,
        })
}

proptest! {
    #[test]
    fn reports_round_trip(r in arb_report()) {
        let text = print(&r);
        let back: Report = parse(&text).unwrap();
        prop_assert_eq!(&back, &r);
        prop_assert_eq!(print(&back), text);
    }
}

/// Every equation and axiom has a named, tagged entry in some report.
#[test]
fn tag_inventory_is_complete() {
    let mut seen: HashSet<(String, String)> = HashSet::new();
    let mut collect = |r: &Report| {
        for e in &r.entries {
            assert!(!e.tag.is_empty(), "{} has no tag", e.name);
            seen.insert((e.name.clone(), e.tag.clone()));
        }
    };
    let s = Arc::new(fixtures::strict_z2());
    collect(&s.check());
    let b = Arc::new(SkewBicat::suspension(&s));
    collect(&b.check());
    let w = Arc::new(SkewWarping::identity(&b));
    collect(&w.check());
    collect(&WarpingAlgebra::free(&w, 0).check());
    let t = Arc::new(fixtures::chain_closure_mw(&[1, 1, 2]));
    collect(&t.check());
    for a in enumerate_mw_algebras(&t) {
        collect(&a.check());
    }
    for m in enumerate_monoids(&*s, &s.objects()) {
        collect(&check_monoid(&*s, &m));
    }
    let n = normalize(&s, DEFAULT_MODULE_BOUND).unwrap();
    collect(&n.check());
    let bundle = &fixtures::hom_bundles()[1].1;
    collect(
        &skewcat_core::normalize::theorem2_instance(&bundle.base, bundle.endo.clone(), bundle.objects.clone()).unwrap(),
    );

    let has = |name: &str, tag: Option<&str>| {
        seen.iter().any(|(n, t)| n == name && tag.is_none_or(|tag| t == tag))
    };
    let mut inventory: Vec<(&str, Option<&str>)> = Vec::new();
    inventory.extend(DIAGRAM_TAGS.iter().map(|(n, t)| (*n, Some(*t))));
    inventory.extend(AXIOM_NAMES.iter().zip(AXIOM_TAGS).map(|(n, t)| (*n, Some(t))));
    inventory.extend(LAW_NAMES[2..].iter().map(|n| (*n, None)));
    inventory.extend(ALGEBRA_LAW_NAMES[2..].iter().map(|n| (*n, None)));
    inventory.extend(MW_TAGS.iter().map(|(n, t)| (*n, Some(*t))));
    inventory.extend(MW_ALGEBRA_TAGS.iter().map(|(n, t)| (*n, Some(*t))));
    inventory.extend(MONOID_TAGS.iter().map(|(n, t)| (*n, Some(*t))));
    inventory.extend(THEOREM2_TAGS.iter().map(|(n, t)| (*n, Some(*t))));
    assert_eq!(inventory.len(), 11 + 5 + 5 + 3 + 3 + 2 + 3 + 4);
    for (name, tag) in &inventory {
        assert!(has(name, *tag), "no report entry {name}");
    }
    let names: HashSet<&str> = inventory.iter().map(|(n, _)| *n).collect();
    assert_eq!(names.len(), inventory.len());
}
