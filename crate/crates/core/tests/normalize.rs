use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use proptest::prelude::*;
use skewcat_core::fincore::{FinCat, FinFunctor};
use skewcat_core::fixtures::{self, hom_bundles, HomBundle};
use skewcat_core::normalize::*;
use skewcat_core::profhom::{hom_skew_moncat, FinProf, HomSkewMonCat, ProfMor};
use skewcat_core::skew::*;

fn normalized(c: SkewMonCat) -> NormalizationResult {
    normalize(&Arc::new(c), DEFAULT_MODULE_BOUND).unwrap()
}

fn hom_category(b: &HomBundle) -> HomSkewMonCat {
    hom_skew_moncat(&b.base, b.objects.clone()).unwrap()
}

fn is_bijection(map: &[usize], n: usize) -> bool {
    map.len() == n && map.iter().collect::<HashSet<_>>().len() == n
}

#[test]
fn strict_categories_normalize_to_themselves() {
    for c in [fixtures::strict_z2(), fixtures::strict_cyclic(3), fixtures::categorical_group(2, 2)] {
        let n = normalized(c.clone());
        assert!(n.check().all_pass(), "{}", n.check().summary());
        assert_eq!(n.num_modules(), c.num_objects());
        for m in &n.modules {
            assert!(c.base.is_identity(m.action));
        }
        assert!(n.q.iter().all(|&q| c.base.is_identity(q)));
        let u = &n.u.functor;
        assert!(is_bijection(&u.obj_map, c.num_objects()));
        assert!(is_bijection(&u.mor_map, c.base.num_morphisms()));
        // U carries every structure table onto the source's
        let k = n.num_modules();
        for x in 0..k {
            for y in 0..k {
                assert_eq!(u.obj(n.mod_cat.tensor_obj(x, y)), c.tensor_obj(u.obj(x), u.obj(y)));
                for z in 0..k {
                    assert_eq!(u.mor(n.mod_cat.alpha_at(x, y, z)), c.alpha_at(u.obj(x), u.obj(y), u.obj(z)));
                }
            }
        }
    }
}

#[test]
fn unit_monad_of_strict_category_is_identity() {
    let c = fixtures::strict_z2();
    let m = unit_monad(&c).unwrap();
    assert_eq!(m.d, FinFunctor::identity(&c.base));
    for (x, f) in (0..c.num_objects()).zip(m.unit.components.iter()) {
        assert_eq!(*f, c.base.identity(x));
    }
}

#[test]
fn unit_monad_exists_on_every_fixture() {
    for (name, c) in fixtures::skew_moncat_fixtures() {
        let m = unit_monad(&c).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(m.is_valid(), "{name}");
        // with ρ invertible the unit of −⊗I is invertible
        if c.is_right_normal() {
            assert!(m.unit.components.iter().all(|&f| c.base.is_iso(f)), "{name}");
        }
    }
    for (name, b) in hom_bundles() {
        let h = hom_category(&b);
        for x in &h.objects {
            assert_eq!(unit_monad_laws(&h, x), [true; 3], "{name}");
        }
    }
}

#[test]
fn unit_is_a_module() {
    for (name, c) in fixtures::skew_moncat_fixtures() {
        assert!(is_module(&c, &unit_module(&c)), "{name}");
    }
    for (name, b) in hom_bundles() {
        let h = hom_category(&b);
        assert!(is_module(&h, &unit_module(&h)), "{name}");
    }
}

/// Every family of cell maps `X⊗I → X`, kept when natural and satisfying both
/// module laws written out with profunctor morphisms.
fn brute_force_module_count(h: &HomSkewMonCat, x: &Arc<FinProf>) -> usize {
    let i = h.unit();
    let xi = h.tensor(x, &i);
    let cells: Vec<(usize, usize)> = (0..xi.cod.num_objects())
        .flat_map(|b| (0..xi.dom.num_objects()).map(move |a| (b, a)))
        .collect();
    let choices: Vec<Vec<Vec<usize>>> = cells
        .iter()
        .map(|&(b, a)| all_maps(xi.size(b, a), x.size(b, a)))
        .collect();
    let mut count = 0;
    let mut idx = vec![0; cells.len()];
    loop {
        if choices.iter().all(|c| !c.is_empty()) {
            let components: Vec<Vec<usize>> = idx.iter().zip(&choices).map(|(&k, c)| c[k].clone()).collect();
            let act = ProfMor {
                src: xi.clone(),
                tgt: x.clone(),
                components,
            };
            if act.is_natural() {
                let mu = ProfMor::identity(&h.tensor(&xi, &i))
                    .then(&h.alpha(x, &i, &i))
                    .then(&h.left_whisker(x, &h.lambda(&i)));
                let assoc = h.right_whisker(&act, &i).then(&act) == mu.then(&act);
                let unit = h.rho(x).then(&act) == ProfMor::identity(x);
                if assoc && unit {
                    count += 1;
                }
            }
        } else {
            return 0;
        }
        let mut p = 0;
        loop {
            if p == idx.len() {
                return count;
            }
            idx[p] += 1;
            if idx[p] < choices[p].len() {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
    }
}

fn all_maps(from: usize, to: usize) -> Vec<Vec<usize>> {
    if from == 0 {
        return vec![vec![]];
    }
    if to == 0 {
        return vec![];
    }
    (0..to.pow(from as u32))
        .map(|code| (0..from).map(|i| code / to.pow(i as u32) % to).collect())
        .collect()
}

#[test]
fn module_count_matches_brute_force_on_ch2_hom_category() {
    let (_, b) = hom_bundles().into_iter().find(|(n, _)| *n == "K(Ch2)").unwrap();
    let h = hom_category(&b);
    let mut total = 0;
    for x in &h.objects {
        let found = enumerate_imodules(&h, std::slice::from_ref(x)).len();
        assert_eq!(found, brute_force_module_count(&h, x), "{}", x.label());
        total += found;
    }
    assert!(total >= h.objects.len());
}

/// Classes of the equivalence relation generated by `u(z) ~ v(z)`, by
/// relabelling to the least reachable element until nothing changes.
fn naive_classes(size: usize, pairs: &[(usize, usize)]) -> Vec<usize> {
    let mut label: Vec<usize> = (0..size).collect();
    loop {
        let mut changed = false;
        for &(a, b) in pairs {
            let (m, big) = (label[a].min(label[b]), label[a].max(label[b]));
            for l in label.iter_mut() {
                if *l == big && big != m {
                    *l = m;
                    changed = true;
                }
            }
        }
        if !changed {
            return label;
        }
    }
}

#[test]
fn wedges_match_pointwise_quotient_oracle() {
    for (name, b) in hom_bundles() {
        let h = hom_category(&b);
        let ms = enumerate_imodules(&h, &h.objects);
        for m1 in &ms {
            for m2 in &ms {
                let w = wedge(&h, m1, m2, &[]).unwrap();
                let (d0, d1) = wedge_pair(&h, m1, m2);
                let xy = &w.q.src;
                for bb in 0..xy.cod.num_objects() {
                    for a in 0..xy.dom.num_objects() {
                        let pairs: Vec<(usize, usize)> = (0..d0.src.size(bb, a))
                            .map(|z| (d0.apply(bb, a, z), d1.apply(bb, a, z)))
                            .collect();
                        let classes = naive_classes(xy.size(bb, a), &pairs);
                        let distinct: HashSet<_> = classes.iter().collect();
                        assert_eq!(distinct.len(), w.module.carrier.size(bb, a), "{name}");
                        for s in 0..xy.size(bb, a) {
                            for t in 0..xy.size(bb, a) {
                                assert_eq!(
                                    classes[s] == classes[t],
                                    w.q.apply(bb, a, s) == w.q.apply(bb, a, t),
                                    "{name}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn normalization_is_right_normal_on_every_fixture() {
    for (name, c) in fixtures::skew_moncat_fixtures() {
        let n = normalized(c);
        let r = n.check();
        assert!(r.all_pass(), "{name}\n{}", r.summary());
        assert!(n.mod_cat.is_right_normal(), "{name}");
        for t in DIAGRAM_TAGS {
            assert!(r.passed(t.0), "{name}: {}", t.0);
        }
    }
}

#[test]
fn skew_sources_are_not_right_normal() {
    assert!(!fixtures::skew_ch3().is_right_normal());
    assert!(!fixtures::right_projection_ch2().is_right_normal());
    for c in [fixtures::skew_ch3(), fixtures::right_projection_ch2()] {
        assert!(normalized(c).mod_cat.is_right_normal());
    }
}

#[test]
fn wedge_with_unit_is_split() {
    for (name, c) in fixtures::skew_moncat_fixtures() {
        for m in enumerate_imodules(&c, &c.objects()) {
            let r = rho_prime(&c, &m).unwrap();
            assert!(c.base.is_iso(r), "{name}");
        }
    }
}

#[test]
fn monoid_counts_agree() {
    for (name, c) in fixtures::skew_moncat_fixtures() {
        let n = normalized(c.clone());
        assert_eq!(c.monoids().len(), n.mod_cat.monoids().len(), "{name}");
    }
    for (name, b) in hom_bundles() {
        let h = hom_category(&b);
        let carriers = h.objects.clone();
        let n = Normalization::on_carriers(h.clone(), &carriers, DEFAULT_MODULE_BOUND).unwrap();
        let ms = n.objects();
        assert_eq!(
            enumerate_monoids(&h, &carriers).len(),
            enumerate_monoids(&n, &ms).len(),
            "{name}"
        );
    }
}

#[test]
fn hom_categories_normalize() {
    for (name, b) in hom_bundles() {
        let h = hom_category(&b);
        let carriers = h.objects.clone();
        let n = Normalization::on_carriers(h, &carriers, DEFAULT_MODULE_BOUND).unwrap();
        let r = normalization_report(&n);
        assert!(r.all_pass(), "{name}\n{}", r.summary());
        assert!(is_right_normal_on(&n, &n.objects()), "{name}");
    }
}

#[test]
fn forgetful_functor_factors_through_itself() {
    for (name, c) in fixtures::skew_moncat_fixtures() {
        let n = normalized(c);
        let u = n.u.clone();
        let m = TableMonoidalFunctor {
            dom: n.mod_cat.clone(),
            ..u
        };
        let f = factor_through_normalization(&m, &n).unwrap();
        assert_eq!(f.functor, FinFunctor::identity(&n.mod_cat.base), "{name}");
        let id = TableMonoidalFunctor::identity(&n.mod_cat);
        assert_eq!((f.f2, f.f0), (id.f2, id.f0), "{name}");
        assert_eq!(all_factorizations(&m, &n, None).len(), 1, "{name}");
    }
}

fn monoid_as_functor(c: &Arc<SkewMonCat>, m: &Monoid<usize, usize>) -> TableMonoidalFunctor {
    let t = Arc::new(fixtures::terminal_skew());
    TableMonoidalFunctor {
        functor: FinFunctor {
            dom: t.base.clone(),
            cod: c.base.clone(),
            obj_map: vec![m.carrier],
            mor_map: vec![c.base.identity(m.carrier)],
        },
        dom: t,
        cod: c.clone(),
        f2: vec![m.mult],
        f0: m.unit,
    }
}

#[test]
fn monoids_factor_uniquely() {
    for (name, c) in fixtures::skew_moncat_fixtures() {
        let n = normalized(c.clone());
        let c = n.source.clone();
        let mut images = HashSet::new();
        for m in c.monoids() {
            let f = monoid_as_functor(&c, &m);
            assert!(f.check().all_pass(), "{name}");
            let lifted = factor_through_normalization(&f, &n).unwrap();
            assert!(lifted.check().all_pass(), "{name}");
            assert_eq!(all_factorizations(&f, &n, None).len(), 1, "{name}");
            let one = lifted.dom.monoids().pop().unwrap();
            let image = transport_monoid(&lifted, &one);
            assert!(is_monoid(&*n.mod_cat, &image), "{name}");
            images.insert(image);
        }
        assert_eq!(images.len(), n.mod_cat.monoids().len(), "{name}");
    }
}

#[test]
fn automorphism_of_strict_z2_factors_as_isomorphism() {
    let c = Arc::new(fixtures::strict_z2());
    let n = normalize(&c, DEFAULT_MODULE_BOUND).unwrap();
    let m = TableMonoidalFunctor::identity(&c);
    let f = factor_through_normalization(&m, &n).unwrap();
    assert!(f.check().all_pass());
    assert!(is_bijection(&f.functor.obj_map, 2));
    assert!(is_bijection(&f.functor.mor_map, 2));
    assert_eq!(all_factorizations(&m, &n, None).len(), 1);
}

#[test]
fn factorization_requires_right_normal_domain() {
    let n = normalized(fixtures::strict_z2());
    let c = Arc::new(fixtures::skew_ch3());
    let m = TableMonoidalFunctor::identity(&c);
    assert!(factor_through_normalization(&m, &n).is_err());
    let nc = normalize(&c, DEFAULT_MODULE_BOUND).unwrap();
    assert!(matches!(
        factor_through_normalization(&m, &nc),
        Err(skewcat_core::error::StructureError::Precondition(_))
    ));
}

#[test]
fn theorem2_holds_on_hom_bundles() {
    for (name, b) in hom_bundles() {
        let r = theorem2_instance(&b.base, b.endo.clone(), b.objects.clone()).unwrap();
        assert!(r.all_pass(), "{name}\n{}", r.summary());
        for t in THEOREM2_TAGS {
            assert!(r.passed(t.0), "{name}: {}", t.0);
        }
    }
}

#[test]
fn closure_monoids_biject_on_ch3() {
    let (_, b) = hom_bundles().into_iter().find(|(n, _)| *n == "K(Ch3)").unwrap();
    let endo = skewcat_core::profhom::EndoHom::new(&b.base);
    let carriers: Vec<_> = b.endo.iter().cloned().map(Arc::new).collect();
    assert_eq!(enumerate_monoids(&endo, &carriers).len(), 4);
    let r = theorem2_instance(&b.base, b.endo.clone(), b.objects.clone()).unwrap();
    assert!(r.passed("theorem2.monoid_bijection"));
}

#[test]
fn bound_is_enforced() {
    let c = Arc::new(fixtures::strict_cyclic(3));
    assert!(matches!(
        normalize(&c, 2),
        Err(skewcat_core::error::StructureError::BoundExceeded(_))
    ));
}

#[test]
fn module_morphisms_are_closed_under_composition() {
    for (name, c) in fixtures::skew_moncat_fixtures() {
        let n = normalized(c);
        let base: &FinCat = &n.mod_cat.base;
        assert!(base.validate().is_ok(), "{name}");
        let by_triple: HashMap<_, _> = n.morphisms.iter().enumerate().map(|(k, t)| (*t, k)).collect();
        assert_eq!(by_triple.len(), n.morphisms.len(), "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn twisted_categorical_groups_normalize(
        table in proptest::collection::vec(0usize..3, 9),
        g in 2usize..4,
    ) {
        let c = fixtures::twisted_categorical_group(g, 3, |x, y| table[x * 3 + y]);
        prop_assume!(c.check().all_pass());
        let n = normalized(c.clone());
        prop_assert!(n.check().all_pass());
        prop_assert_eq!(n.num_modules(), c.num_objects());
        prop_assert_eq!(c.monoids().len(), n.mod_cat.monoids().len());
    }

    #[test]
    fn products_with_skew_chains_normalize(t1 in 1usize..3, t2 in 0usize..2) {
        let t = [0, t1, 2];
        prop_assume!(t[1] <= t[2] && t1 >= 1);
        let chain = fixtures::closure_skew_chain(&t);
        let c = chain.product(&fixtures::strict_cyclic(t2 + 1));
        let n = normalized(c.clone());
        prop_assert!(n.check().all_pass());
        prop_assert!(n.mod_cat.is_right_normal());
        prop_assert_eq!(c.monoids().len(), n.mod_cat.monoids().len());
    }
}
