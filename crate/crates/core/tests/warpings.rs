use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewcat_core::fincore::FinCat;
use skewcat_core::fixtures::{self, categorical_group, twisted_categorical_group};
use skewcat_core::mw::{enumerate_mw, enumerate_mw_algebras, kleisli_mw, MwMonad, DEFAULT_MORPHISM_BOUND};
use skewcat_core::skew::{SkewBicat, SkewMonCat};
use skewcat_core::warpings::{
    check_redundancy_algebra, check_redundancy_warping, enumerate_algebras, enumerate_warpings,
    kleisli_warping, mw_algebra_as_warping_algebra, mw_as_warping, random_algebra, random_warping,
    remark_trace, warping_as_mw, Fill, SkewWarping, WarpingAlgebra,
};
use skewcat_core::Status;

const LIMIT: usize = 100_000;

fn susp(c: SkewMonCat) -> Arc<SkewBicat> {
    Arc::new(SkewBicat::suspension(&c))
}

fn z3_twisted() -> Arc<SkewBicat> {
    susp(twisted_categorical_group(3, 3, fixtures::sample_cochain))
}

#[test]
fn identity_warping_passes_and_is_trivial_kleisli() {
    for (name, c) in fixtures::skew_moncat_fixtures() {
        let b = susp(c);
        let w = SkewWarping::identity(&b);
        let r = w.check();
        assert!(r.all_pass(), "{name}\n{}", r.summary());
        assert_eq!(kleisli_warping(&w).unwrap(), *b, "{name}");
    }
    let w = SkewWarping::identity(&susp(fixtures::strict_z2()));
    assert!(w.is_warping());
}

#[test]
fn non_invertible_k_is_not_a_warping() {
    let w = SkewWarping::identity(&susp(fixtures::skew_ch3()));
    assert!(w.is_valid());
    assert!(!w.is_warping());
}

#[test]
fn strict_z2_has_two_skew_warpings() {
    let ws = enumerate_warpings(&susp(fixtures::strict_z2()), Fill::SKEW, LIMIT).unwrap();
    assert_eq!(ws.len(), 2);
    assert!(ws.iter().all(|w| w.is_warping()));
}

#[test]
fn mw_monads_are_warpings_on_locally_discrete_ambients() {
    let c = Arc::new(fixtures::ch3());
    let mws = enumerate_mw(&c, DEFAULT_MORPHISM_BOUND).unwrap();
    assert_eq!(mws.len(), 4);
    for t in &mws {
        let w = mw_as_warping(t).unwrap();
        let r = w.check();
        assert!(r.all_pass(), "{}", r.summary());
        assert!(w.is_warping());
        assert_eq!(&warping_as_mw(&w).unwrap(), t);
        assert_eq!(mw_as_warping(&warping_as_mw(&w).unwrap()).unwrap(), w);
    }
    // the locally discrete Ch3 carries exactly its four monads as warpings
    let b = Arc::new(SkewBicat::locally_discrete(&c).unwrap());
    assert_eq!(enumerate_warpings(&b, Fill::SKEW, LIMIT).unwrap().len(), 4);
    let id = MwMonad::identity(&c);
    assert_eq!(warping_as_mw(&mw_as_warping(&id).unwrap()).unwrap(), id);
}

#[test]
fn warping_as_mw_rejects_non_discrete_ambients() {
    let w = SkewWarping::identity(&susp(categorical_group(2, 2)));
    assert!(warping_as_mw(&w).is_err());
}

#[test]
fn kleisli_warping_matches_kleisli_mw() {
    let c = Arc::new(fixtures::ch3());
    for t in enumerate_mw(&c, DEFAULT_MORPHISM_BOUND).unwrap() {
        let bt = kleisli_warping(&mw_as_warping(&t).unwrap()).unwrap();
        let kc = SkewBicat::locally_discrete(&kleisli_mw(&t)).unwrap();
        assert!(bt.check().all_pass());
        assert_eq!(bt.units, kc.units);
        for (p, q) in bt.comp.iter().zip(&kc.comp) {
            assert_eq!(p.obj_map, q.obj_map);
        }
        for (p, q) in bt.homs.iter().zip(&kc.homs) {
            assert_eq!(p.num_objects(), q.num_objects());
        }
    }
}

/// Perturbing an mw-monad's `T` table: the warping and mw verdicts agree.
#[test]
fn warping_laws_agree_with_mw_laws_under_perturbation() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let bases = [Arc::new(fixtures::ch3()), Arc::new(FinCat::cyclic_group(3))];
    let mut disagreements = 0;
    let mut broken = 0;
    for base in &bases {
        for t in enumerate_mw(base, DEFAULT_MORPHISM_BOUND).unwrap() {
            for _ in 0..30 {
                let mut p = t.clone();
                let rows: Vec<usize> = (0..p.t.len()).filter(|&i| !p.t[i].is_empty()).collect();
                let row = rows[rng.gen_range(0..rows.len())];
                let col = rng.gen_range(0..p.t[row].len());
                let (x, y) = (row / base.num_objects(), row % base.num_objects());
                let cands = base.hom(p.d[x], p.d[y]);
                p.t[row][col] = cands[rng.gen_range(0..cands.len())];
                let mw_ok = p.is_valid();
                broken += usize::from(!mw_ok);
                let w_ok = mw_as_warping(&p).unwrap().is_valid();
                disagreements += usize::from(mw_ok != w_ok);
            }
        }
    }
    assert_eq!(disagreements, 0);
    assert!(broken > 0);
}

#[test]
fn perturbed_v0_breaks_only_axioms_that_mention_it() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let b = z3_twisted();
    let fill = Fill {
        axioms: [true; 5],
        invertible: true,
    };
    let mut detected = 0;
    for _ in 0..20 {
        let w = random_warping(&b, fill, &mut rng, LIMIT).unwrap().expect("a warping exists");
        assert!(w.is_warping());
        let mut p = w.clone();
        let hom = b.hom(0, 0);
        // move v0 to another automorphism of the same object
        let others: Vec<usize> = hom
            .hom(hom.src(p.v0[0]), hom.tgt(p.v0[0]))
            .iter()
            .copied()
            .filter(|&m| m != p.v0[0])
            .collect();
        p.v0[0] = others[rng.gen_range(0..others.len())];
        let r = p.check();
        let failed = r.failed_names();
        assert!(failed
            .iter()
            .all(|n| ["warping.axiom2", "warping.axiom3", "warping.axiom5"].contains(n)));
        if !failed.is_empty() {
            detected += 1;
            let e = r.entries.iter().find(|e| e.status == Status::Fail).unwrap();
            assert!(!e.witness.is_empty());
        }
    }
    assert_eq!(detected, 20);
}

fn small_ambients() -> Vec<(&'static str, Arc<SkewBicat>)> {
    let mut out: Vec<(&'static str, Arc<SkewBicat>)> = vec![
        ("strict Z/2", susp(fixtures::strict_z2())),
        ("categorical group (2,2)", susp(categorical_group(2, 2))),
        ("skew Ch3", susp(fixtures::skew_ch3())),
        ("right projection Ch2", susp(fixtures::right_projection_ch2())),
        ("terminal", susp(fixtures::terminal_skew())),
    ];
    out.push(("locally discrete Ch3", Arc::new(SkewBicat::locally_discrete(&fixtures::ch3()).unwrap())));
    out
}

#[test]
fn kleisli_construction_of_every_small_warping_is_a_skew_bicategory() {
    for (name, b) in small_ambients() {
        let ws = enumerate_warpings(&b, Fill::SKEW, LIMIT).unwrap();
        assert!(!ws.is_empty(), "{name}");
        for w in ws {
            let r = kleisli_warping(&w).unwrap().check();
            assert!(r.all_pass(), "{name}\n{}", r.summary());
        }
    }
}

#[test]
fn remark_trace_on_natural_data() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let ambients = small_ambients();
    let mut rows = 0;
    let mut varied = [false; 5];
    for seed in 0..60 {
        let (_, b) = &ambients[seed % ambients.len()];
        let Some(w) = random_warping(b, Fill::NATURAL, &mut rng, LIMIT).unwrap() else { continue };
        for t in remark_trace(&w).unwrap() {
            assert!(t.consistent(), "{t:?}");
            varied[t.axiom - 1] |= !t.warping;
            rows += 1;
        }
    }
    assert!(rows > 0);
    // the sample includes data failing each warping axiom
    assert!(varied.iter().filter(|&&v| v).count() >= 3, "{varied:?}");
}

#[test]
fn redundancy_of_warping_axioms() {
    let b = susp(categorical_group(2, 2));
    let r = check_redundancy_warping(&SkewWarping::identity(&b)).unwrap();
    assert!(r.all_pass());
    let ws = enumerate_warpings(&b, Fill::FIRST_TWO_INVERTIBLE, LIMIT).unwrap();
    assert!(!ws.is_empty());
    for w in &ws {
        let r = check_redundancy_warping(w).unwrap();
        assert!(!r.has_falsification(), "{}", r.summary());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let b = z3_twisted();
    for _ in 0..10 {
        let w = random_warping(&b, Fill::FIRST_TWO_INVERTIBLE, &mut rng, LIMIT).unwrap().unwrap();
        assert!(!check_redundancy_warping(&w).unwrap().has_falsification());
    }
}

#[test]
fn redundancy_preconditions_are_enforced() {
    let w = SkewWarping::identity(&susp(fixtures::skew_ch3()));
    assert!(check_redundancy_warping(&w).is_err());
}

#[test]
fn free_algebras_pass() {
    for (name, b) in small_ambients() {
        let w = Arc::new(SkewWarping::identity(&b));
        for x in 0..b.num_cells0() {
            let a = WarpingAlgebra::free(&w, x);
            assert!(a.check().all_pass(), "{name}\n{}", a.check().summary());
        }
    }
    let b = z3_twisted();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let w = random_warping(&b, Fill::SKEW, &mut rng, LIMIT).unwrap().unwrap();
    let a = WarpingAlgebra::free(&Arc::new(w), 0);
    assert!(a.is_valid(), "{}", a.check().summary());
}

#[test]
fn mw_algebras_are_warping_algebras() {
    let c = Arc::new(fixtures::ch3());
    for t in enumerate_mw(&c, DEFAULT_MORPHISM_BOUND).unwrap() {
        let t = Arc::new(t);
        let algs = enumerate_mw_algebras(&t);
        for alg in &algs {
            let wa = mw_algebra_as_warping_algebra(alg).unwrap();
            assert!(wa.check().all_pass(), "{}", wa.check().summary());
        }
        let w = Arc::new(mw_as_warping(&t).unwrap());
        assert_eq!(enumerate_algebras(&w, Fill::SKEW, LIMIT).unwrap().len(), algs.len());
    }
}

#[test]
fn redundancy_of_third_algebra_axiom() {
    let b = susp(categorical_group(2, 2));
    let fill = Fill {
        axioms: [true, true, false, false, false],
        invertible: true,
    };
    for w in enumerate_warpings(&b, Fill { axioms: [true; 5], invertible: true }, LIMIT).unwrap() {
        let w = Arc::new(w);
        for a in enumerate_algebras(&w, fill, LIMIT).unwrap() {
            let r = check_redundancy_algebra(&a).unwrap();
            assert!(!r.has_falsification(), "{}", r.summary());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let b = z3_twisted();
    for _ in 0..5 {
        let w = random_warping(&b, Fill { axioms: [true; 5], invertible: true }, &mut rng, LIMIT)
            .unwrap()
            .unwrap();
        let w = Arc::new(w);
        let a = random_algebra(&w, fill, &mut rng, LIMIT).unwrap().unwrap();
        assert!(!check_redundancy_algebra(&a).unwrap().has_falsification());
    }
}

/// On one-object ambients the Kleisli construction desuspends to a skew
/// monoidal category whose direct check agrees with the bicategory check.
#[test]
fn one_object_reduction_agrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for (name, b) in small_ambients().into_iter().filter(|(_, b)| b.num_cells0() == 1) {
        for _ in 0..5 {
            let Some(w) = random_warping(&b, Fill::NATURAL, &mut rng, LIMIT).unwrap() else { continue };
            let bt = kleisli_warping(&w).unwrap();
            let m = bt.desuspension().unwrap();
            let (rb, rm) = (bt.check(), m.check());
            for e in &rb.entries {
                assert_eq!(Some(e.status), rm.entry(&e.name).map(|x| x.status), "{name}: {}", e.name);
            }
        }
    }
}
