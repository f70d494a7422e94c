use std::collections::HashMap;
use std::sync::Arc;

use proptest::prelude::*;
use skewcat_core::fincore::{enumerate_functors, FinCat, FinFunctor, FinSetObj};
use skewcat_core::fixtures;
use skewcat_core::mw::{enumerate_monads, enumerate_mw, monad_to_mw, MwMonad, DEFAULT_MORPHISM_BOUND};
use skewcat_core::profhom::{
    adjunction_units, coend, compose_mor, discrete_inclusion, hom_prof, hom_skew_moncat,
    is_functor_valued, left_unitor, lower_star, monad_to_endo_monoid, monoid_mw_correspondence,
    monoid_to_mw, mw_to_monoid, nat_transformations, prof_compose, representing_functor,
    right_unitor, triangle_identities, u_functor, upper_star, EndoHom, FinProf, ProfMor,
};
use skewcat_core::skew::{
    check_monoid, check_monoidal_functor, check_skew_monoidal, enumerate_monoids, is_monoid,
    is_normal, transport_monoid, MonoidalFunctor, SkewMonoidal,
};

fn ch2() -> Arc<FinCat> {
    Arc::new(fixtures::ch2())
}

fn ch3() -> Arc<FinCat> {
    Arc::new(fixtures::ch3())
}

fn functors(a: &Arc<FinCat>, b: &Arc<FinCat>) -> Vec<FinFunctor> {
    enumerate_functors(a, b, 1000).unwrap()
}

/// A sample of profunctors between the chains: lower and upper stars of
/// every functor, and the identities.
fn sample_profs() -> Vec<Arc<FinProf>> {
    let mut out = Vec::new();
    for a in [ch2(), ch3()] {
        for b in [ch2(), ch3()] {
            for f in functors(&a, &b) {
                out.push(Arc::new(lower_star(&f)));
                out.push(Arc::new(upper_star(&f)));
            }
        }
        out.push(Arc::new(hom_prof(&a)));
    }
    out
}

fn isomorphic(p: &Arc<FinProf>, q: &Arc<FinProf>) -> bool {
    nat_transformations(p, q, None).iter().any(|m| m.is_iso())
}

/// Naive quotient: relabel every summand by the least label in its class
/// until nothing changes.
fn oracle_classes(g: &FinProf, f: &FinProf, c: usize, a: usize) -> HashMap<(usize, usize, usize), usize> {
    let mid = &*f.cod;
    let mut label = HashMap::new();
    let mut k = 0;
    for b in 0..mid.num_objects() {
        for x in 0..g.size(c, b) {
            for y in 0..f.size(b, a) {
                label.insert((b, x, y), k);
                k += 1;
            }
        }
    }
    let mut pairs = Vec::new();
    for beta in 0..mid.num_morphisms() {
        let (b, b1) = (mid.src(beta), mid.tgt(beta));
        for x in 0..g.size(c, b) {
            for y in 0..f.size(b1, a) {
                pairs.push(((b1, g.right[beta][c][x], y), (b, x, f.left[beta][a][y])));
            }
        }
    }
    loop {
        let mut changed = false;
        for (s, t) in &pairs {
            let m = label[s].min(label[t]);
            for key in [s, t] {
                if label[key] != m {
                    label.insert(*key, m);
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
fn coend_matches_naive_quotient() {
    let profs = sample_profs();
    let mut checked = 0;
    for g in &profs {
        for f in &profs {
            if g.dom != f.cod {
                continue;
            }
            let co = coend(g, f).unwrap();
            assert!(co.prof.validate().is_ok());
            assert!(co.actions_well_defined());
            for c in 0..g.cod.num_objects() {
                for a in 0..f.dom.num_objects() {
                    let oracle = oracle_classes(g, f, c, a);
                    for (s, l) in &oracle {
                        for (t, m) in &oracle {
                            assert_eq!(l == m, co.class(c, a, *s) == co.class(c, a, *t));
                        }
                    }
                }
            }
            checked += 1;
        }
    }
    assert!(checked > 100);
}

#[test]
fn quotient_merges_classes_on_ch2() {
    // two middle objects: (0≤0, 0≤1) and (0≤1, 1_1) are identified
    let hom = Arc::new(hom_prof(&ch2()));
    let co = coend(&hom, &hom).unwrap();
    assert_eq!(co.summands(0, 1).len(), 2);
    assert_eq!(co.prof.size(0, 1), 1);
    let total: usize = (0..2).flat_map(|c| (0..2).map(move |a| (c, a))).map(|(c, a)| co.summands(c, a).len()).sum();
    let classes: usize = co.prof.values.iter().map(FinSetObj::len).sum();
    assert!(classes < total);
}

#[test]
fn composing_with_identity_is_canonically_isomorphic() {
    for f in sample_profs() {
        for m in [left_unitor(&f).unwrap(), right_unitor(&f).unwrap()] {
            assert!(m.is_natural());
            assert!(m.is_iso());
        }
    }
}

#[test]
fn lower_stars_compose() {
    for (a, b) in [(ch2(), ch3()), (ch3(), ch2()), (ch3(), ch3())] {
        let gs = functors(&a, &b);
        let fs = functors(&b, &ch3());
        for g in &gs {
            for f in &fs {
                let lhs = Arc::new(prof_compose(&Arc::new(lower_star(f)), &Arc::new(lower_star(g))).unwrap());
                let rhs = Arc::new(lower_star(&g.then(f)));
                assert!(isomorphic(&lhs, &rhs));
            }
        }
    }
}

#[test]
fn identity_stars_are_hom() {
    for c in [ch2(), ch3(), Arc::new(FinCat::cyclic_group(3))] {
        let id = FinFunctor::identity(&c);
        let hom = hom_prof(&c);
        assert_eq!(lower_star(&id), hom);
        assert_eq!(upper_star(&id), hom);
        let adj = adjunction_units(&id).unwrap();
        assert!(adj.eta.is_iso() && adj.eps.is_iso());
        assert!(adj.eta.is_natural() && adj.eps.is_natural());
    }
}

#[test]
fn inclusion_lower_star_is_hom_table() {
    let c = ch3();
    let i_star = lower_star(&discrete_inclusion(&c));
    for b in 0..3 {
        for a in 0..3 {
            assert_eq!(i_star.size(b, a), c.hom(b, a).len());
            assert_eq!(i_star.size(b, a), usize::from(b <= a));
        }
    }
}

#[test]
fn triangle_identities_hold() {
    for c in [ch2(), ch3()] {
        let adj = adjunction_units(&discrete_inclusion(&c)).unwrap();
        assert_eq!(triangle_identities(&adj).unwrap(), [true, true]);
    }
    for f in functors(&ch2(), &ch3()).iter().chain(&functors(&ch3(), &ch3())) {
        let adj = adjunction_units(f).unwrap();
        assert!(adj.eta.is_natural() && adj.eps.is_natural());
        assert_eq!(triangle_identities(&adj).unwrap(), [true, true]);
    }
}

/// `d_*` over the discrete category for an object map `d`.
fn discrete_star(c: &Arc<FinCat>, d: &[usize]) -> FinProf {
    let i = discrete_inclusion(c);
    let f = FinFunctor {
        dom: i.dom.clone(),
        cod: c.clone(),
        obj_map: d.to_vec(),
        mor_map: d.iter().map(|&y| c.identity(y)).collect(),
    };
    lower_star(&f)
}

fn object_maps(n: usize) -> Vec<Vec<usize>> {
    (0..n.pow(n as u32))
        .map(|code| (0..n).map(|i| code / n.pow(i as u32) % n).collect())
        .collect()
}

#[test]
fn hom_category_is_skew_monoidal() {
    let one = Arc::new(FinCat::terminal());
    let h = hom_skew_moncat(&one, vec![discrete_star(&one, &[0])]).unwrap();
    let r = check_skew_monoidal(&h, &h.objects, "K(1,1)");
    assert!(r.all_pass(), "{}", r.summary());

    // d = the constant functor at 1 on the two-chain
    let c = ch2();
    let h = hom_skew_moncat(&c, vec![discrete_star(&c, &[1, 1])]).unwrap();
    let r = check_skew_monoidal(&h, &h.objects, "K(A,Ch2)");
    assert!(r.all_pass(), "{}", r.summary());
    let d = h.objects[1].clone();
    assert!(!h.is_iso(&h.rho(&d)));
    // the unit of the adjunction is not invertible even at i_*, though it splits
    let i = h.unit();
    assert!(!h.is_iso(&h.rho(&i)));
    assert_eq!(h.compose(&h.lambda(&i), &h.rho(&i)), h.identity(&i));

    let c = ch3();
    let objs = [[0, 1, 2], [1, 1, 2], [2, 2, 2], [0, 2, 2]]
        .iter()
        .map(|d| discrete_star(&c, d))
        .collect();
    let h = hom_skew_moncat(&c, objs).unwrap();
    let r = check_skew_monoidal(&h, &h.objects, "K(A,Ch3)");
    assert!(r.all_pass(), "{}", r.summary());
}

#[test]
fn tensor_is_strictly_associative() {
    let c = ch3();
    let h = hom_skew_moncat(&c, object_maps(3).iter().take(12).map(|d| discrete_star(&c, d)).collect()).unwrap();
    let mut extra = vec![h.tensor(&h.unit(), &h.unit())];
    extra.extend(h.objects.iter().cloned());
    for x in &extra {
        for y in &extra {
            for z in h.objects.iter().take(5) {
                assert_eq!(h.tensor(&h.tensor(x, y), z), h.tensor(x, &h.tensor(y, z)));
            }
        }
    }
}

#[test]
fn closed_tensor_agrees_with_coends() {
    for c in [ch2(), ch3()] {
        let h = hom_skew_moncat(&c, object_maps(c.num_objects()).iter().map(|d| discrete_star(&c, d)).collect()).unwrap();
        let i = h.incl.clone();
        let adj = adjunction_units(&i).unwrap();
        let (lo, up) = (h.adopt(&adj.lower), adj.upper.clone());
        assert_eq!(lo, h.unit());
        for g in &h.objects {
            for f in &h.objects {
                let m = h.closed_to_coend(g, f).unwrap();
                assert!(m.is_iso() && m.is_natural());
            }
            // λ is the counit: i(i^*g) → (i i^*)g → hom·g → g
            let via_eps = h
                .closed_to_coend(&lo, g)
                .unwrap()
                .then(&skewcat_core::profhom::associator(&lo, &up, g).unwrap().inverse().unwrap())
                .then(&compose_mor(&adj.eps, &ProfMor::identity(g)).unwrap())
                .then(&left_unitor(g).unwrap());
            assert_eq!(via_eps.components, h.lambda(g).components);
            // ρ is the unit: g → g·hom → g(i^* i)
            let via_eta = right_unitor(g)
                .unwrap()
                .inverse()
                .unwrap()
                .then(&compose_mor(&ProfMor::identity(g), &adj.eta).unwrap());
            let rho = h.rho(g).then(&h.closed_to_coend(g, &lo).unwrap());
            assert_eq!(rho.components, via_eta.components);
        }
    }
}

fn endofunctor_stars(c: &Arc<FinCat>) -> Vec<Arc<FinProf>> {
    functors(c, c).iter().map(|f| Arc::new(lower_star(f))).collect()
}

#[test]
fn u_is_normal_monoidal() {
    for c in [ch2(), ch3()] {
        let h = hom_skew_moncat(&c, Vec::new()).unwrap();
        let u = u_functor(&h);
        let hom = u.dom().unit();
        assert_eq!(u.map_obj(&hom), h.unit());
        for g in functors(&c, &c) {
            let restricted = lower_star(&discrete_inclusion(&c).then(&g));
            assert_eq!(*u.map_obj(&Arc::new(lower_star(&g))), restricted);
        }
        let mut objs = endofunctor_stars(&c);
        objs.truncate(6);
        objs.push(hom);
        let r = check_monoidal_functor(&u, &objs, "u");
        assert!(r.all_pass(), "{}", r.summary());
        assert!(is_normal(&u));
    }
}

#[test]
fn u_sends_monads_to_monoids() {
    let c = ch3();
    let h = hom_skew_moncat(&c, Vec::new()).unwrap();
    let u = u_functor(&h);
    let endo = EndoHom::new(&c);
    let monads = enumerate_monads(&c, DEFAULT_MORPHISM_BOUND).unwrap();
    assert_eq!(monads.len(), 4);
    for m in &monads {
        let mon = monad_to_endo_monoid(m);
        assert!(check_monoid(&endo, &mon).all_pass());
        let image = transport_monoid(&u, &mon);
        assert!(check_monoid(&h, &image).all_pass());
        assert_eq!(monoid_to_mw(&h, &image).unwrap(), monad_to_mw(m));
    }
}

#[test]
fn monoids_and_mw_monads_correspond() {
    for c in [ch2(), ch3(), Arc::new(FinCat::cyclic_group(3))] {
        let h = hom_skew_moncat(&c, Vec::new()).unwrap();
        for t in enumerate_mw(&c, DEFAULT_MORPHISM_BOUND).unwrap() {
            let m = mw_to_monoid(&h, &t).unwrap();
            assert!(is_monoid(&h, &m));
            assert_eq!(monoid_to_mw(&h, &m).unwrap(), t);
        }
    }
    let c = ch3();
    let h = hom_skew_moncat(&c, Vec::new()).unwrap();
    let id = mw_to_monoid(&h, &MwMonad::identity(&c)).unwrap();
    assert_eq!(id.carrier, h.unit());
}

#[test]
fn functor_valued_monoids_on_ch3() {
    let c = ch3();
    let h = hom_skew_moncat(&c, Vec::new()).unwrap();
    let carriers: Vec<_> = object_maps(3).iter().map(|d| h.adopt(&discrete_star(&c, d))).collect();
    let monoids = enumerate_monoids(&h, &carriers);
    assert_eq!(monoids.len(), enumerate_mw(&c, DEFAULT_MORPHISM_BOUND).unwrap().len());
}

#[test]
fn non_functor_valued_carrier_is_rejected() {
    let c = ch2();
    let h = hom_skew_moncat(&c, Vec::new()).unwrap();
    let i = h.unit();
    let sq = h.tensor(&i, &i);
    assert!(!is_functor_valued(&sq));
    let m = skewcat_core::skew::Monoid {
        carrier: sq.clone(),
        mult: ProfMor::identity(&h.tensor(&sq, &sq)),
        unit: ProfMor::identity(&i),
    };
    assert!(monoid_to_mw(&h, &m).is_err());
}

/// A presheaf-valued endo-profunctor that is not representable: `hom ⊔ hom`
/// in the column of `a0`.
fn doubled(c: &Arc<FinCat>, a0: usize) -> FinProf {
    let hom = hom_prof(c);
    let copies = |a: usize| if a == a0 { 2 } else { 1 };
    FinProf::from_fn(
        c.clone(),
        c.clone(),
        |b, a| {
            (0..copies(a))
                .flat_map(|k| hom.value(b, a).elements.iter().map(move |e| format!("{e}#{k}")))
                .collect()
        },
        |beta, a, x| {
            let (s, t) = (c.src(beta), c.tgt(beta));
            let n = hom.size(t, a);
            let k = x / n.max(1);
            k * hom.size(s, a) + hom.act_left(beta, a, x % n)
        },
        |alpha, b, x| {
            let (s, t) = (c.src(alpha), c.tgt(alpha));
            let n = hom.size(b, s);
            let k = (x / n.max(1)).min(copies(t) - 1);
            k * hom.size(b, t) + hom.act_right(alpha, b, x % n)
        },
    )
}

#[test]
fn functor_valued_iff_restriction_is() {
    for c in [ch2(), ch3()] {
        let h = hom_skew_moncat(&c, Vec::new()).unwrap();
        let u = u_functor(&h);
        let mut profs = endofunctor_stars(&c);
        for f in functors(&c, &c) {
            profs.push(Arc::new(upper_star(&f)));
        }
        let hom = Arc::new(hom_prof(&c));
        profs.push(Arc::new(prof_compose(&hom, &hom).unwrap()));
        let top = c.num_objects() - 1;
        let d = Arc::new(doubled(&c, top));
        assert!(d.validate().is_ok(), "{:?}", d.structural_errors());
        profs.push(d);
        let mut seen = [0, 0];
        for g in &profs {
            let fv = is_functor_valued(g);
            assert_eq!(fv, is_functor_valued(&u.map_obj(g)));
            seen[usize::from(fv)] += 1;
            if let Some(d) = representing_functor(g) {
                assert!(d.validate().is_empty());
                assert!(isomorphic(g, &Arc::new(lower_star(&d))));
            }
        }
        assert!(seen[0] > 0 && seen[1] > 0);
    }
}

/// An mw-monad with `D`, `K` taken from a valid one on Ch3 or on `Z/3` and
/// an arbitrary well-typed `T` table. Chains are thin, so only the group
/// actually perturbs `T`.
fn perturbed_mw() -> impl Strategy<Value = MwMonad> {
    let bases: Vec<MwMonad> = [ch3(), Arc::new(FinCat::cyclic_group(3))]
        .iter()
        .flat_map(|c| enumerate_mw(c, DEFAULT_MORPHISM_BOUND).unwrap())
        .collect();
    (0..bases.len(), proptest::collection::vec(0usize..8, 9)).prop_map(move |(i, picks)| {
        let mut t = bases[i].clone();
        let c = t.base.clone();
        let n = c.num_objects();
        for x in 0..n {
            for y in 0..n {
                let choices = c.hom(t.d[x], t.d[y]);
                for (j, v) in t.t[x * n + y].iter_mut().enumerate() {
                    *v = choices[(picks[x * n + y] + j) % choices.len()];
                }
            }
        }
        t
    })
}

proptest! {
    #[test]
    fn monoid_equations_are_mw_equations(t in perturbed_mw()) {
        let h = hom_skew_moncat(&t.base, Vec::new()).unwrap();
        for (name, monoid, mw) in monoid_mw_correspondence(&h, &t).unwrap() {
            prop_assert_eq!(monoid, mw, "{}", name);
        }
    }
}
