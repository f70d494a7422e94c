//! Named small structures used by the tests, the acceptance suite and the CLI.

use std::sync::Arc;

use crate::fincore::{product_category, Cofork, FinCat, FinFunctor, MorId, MorphismData, ObjId};
use crate::mw::MwMonad;
use crate::profhom::{discrete_inclusion, hom_prof, hom_skew_moncat, lower_star, FinProf};
use crate::skew::{SkewMonCat, SkewMonoidal};

/// The 2-element chain `0 ≤ 1`.
pub fn ch2() -> FinCat {
    FinCat::chain(2)
}

/// The 3-element chain `0 ≤ 1 ≤ 2`.
pub fn ch3() -> FinCat {
    FinCat::chain(3)
}

/// `(Z/n, +, 0)` as a discrete strict monoidal category.
pub fn strict_cyclic(n: usize) -> SkewMonCat {
    let names = (0..n).map(|i| i.to_string()).collect();
    let base = Arc::new(FinCat::discrete(names));
    // discrete: identity of x has index x
    SkewMonCat::strict(base, move |x, y| (x + y) % n, move |f, g| (f + g) % n, 0)
}

/// `(Z/2, +, 0)` as a discrete strict monoidal category.
pub fn strict_z2() -> SkewMonCat {
    strict_cyclic(2)
}

/// The terminal skew monoidal category.
pub fn terminal_skew() -> SkewMonCat {
    SkewMonCat::strict(Arc::new(FinCat::terminal()), |_, _| 0, |_, _| 0, 0)
}

/// Base category of a categorical group: objects `Z/g`, every hom-set empty
/// except `hom(x, x) = Z/h`. Morphism `(x, k)` has index `x*h + k` and is
/// named `x:k`.
pub fn categorical_group_base(g: usize, h: usize) -> FinCat {
    let objects = (0..g).map(|x| x.to_string()).collect();
    let morphisms = (0..g * h)
        .map(|f| MorphismData {
            name: format!("{}:{}", f / h, f % h),
            src: f / h,
            tgt: f / h,
        })
        .collect();
    let ids = (0..g).map(|x| x * h).collect();
    FinCat::from_fn(objects, morphisms, ids, |a, b| (a / h) * h + (a % h + b % h) % h)
}

/// The strict categorical group with objects `Z/g` and automorphisms `Z/h`,
/// tensor adding both components.
pub fn categorical_group(g: usize, h: usize) -> SkewMonCat {
    let base = Arc::new(categorical_group_base(g, h));
    SkewMonCat::strict(
        base,
        move |x, y| (x + y) % g,
        move |a, b| ((a / h + b / h) % g) * h + (a % h + b % h) % h,
        0,
    )
}

/// A categorical group made non-strict by an invertible gauge `F2_{x,y} =
/// (x+y, c(x,y))`; its associator is the coboundary of `c`.
pub fn twisted_categorical_group(g: usize, h: usize, c: impl Fn(ObjId, ObjId) -> usize) -> SkewMonCat {
    let strict = categorical_group(g, h);
    strict.gauge_twist(|x, y| ((x + y) % g) * h + c(x, y) % h, 0)
}

/// Skew structure on the chain `0 ≤ … ≤ n-1` with `X⊗Y = max(T X, Y)` and
/// unit `0`, for a closure operator `T` with `T(0) = 0`. Associator and
/// left unitor are identities; `ρ_X` is `X ≤ T X`.
pub fn closure_skew_chain(t: &[usize]) -> SkewMonCat {
    let n = t.len();
    let base = Arc::new(FinCat::chain(n));
    let mor = |i: usize, j: usize| base.hom(i, j)[0];
    let tensor_obj = |x: usize, y: usize| t[x].max(y);
    SkewMonCat::from_fns(
        base.clone(),
        tensor_obj,
        |f, g| {
            let (sf, tf, sg, tg) = (base.src(f), base.tgt(f), base.src(g), base.tgt(g));
            mor(tensor_obj(sf, sg), tensor_obj(tf, tg))
        },
        0,
        |x, y, z| base.identity(tensor_obj(tensor_obj(x, y), z)),
        |x| base.identity(x),
        |x| mor(x, t[x]),
    )
}

/// `X⊗Y = max(T X, Y)` on `0 ≤ 1 ≤ 2` with `T = (0, 2, 2)`; `ρ_1` is not
/// invertible.
pub fn skew_ch3() -> SkewMonCat {
    closure_skew_chain(&[0, 2, 2])
}

/// The chain `0 ≤ 1` with `X⊗Y = Y` and unit `1`; `ρ_0 = (0 ≤ 1)` is not
/// invertible.
pub fn right_projection_ch2() -> SkewMonCat {
    let base = Arc::new(FinCat::chain(2));
    let b = base.clone();
    SkewMonCat::from_fns(
        base.clone(),
        |_, y| y,
        |_, g| g,
        1,
        move |_, _, z| b.identity(z),
        |x| base.identity(x),
        |x| if x == 0 { 1 } else { 2 },
    )
}

/// A non-bilinear 2-cochain, so the gauge twist by it has a non-identity
/// associator.
pub fn sample_cochain(x: ObjId, y: ObjId) -> usize {
    x + 2 * y * y + x * x * y
}

/// Skew monoidal categories with non-trivial parallel morphisms and
/// non-invertible constraints: products of the skew chains with small
/// (twisted) categorical groups.
pub fn skew_products() -> Vec<(&'static str, SkewMonCat)> {
    let twisted = twisted_categorical_group(2, 3, sample_cochain);
    vec![
        ("right-projection x BZ2", right_projection_ch2().product(&categorical_group(1, 2))),
        ("skew Ch3 x BZ2", skew_ch3().product(&categorical_group(1, 2))),
        ("right-projection x twisted(2,3)", right_projection_ch2().product(&twisted)),
    ]
}

/// Every named skew monoidal fixture.
pub fn skew_moncat_fixtures() -> Vec<(&'static str, SkewMonCat)> {
    let mut out = vec![
        ("terminal", terminal_skew()),
        ("strict Z/2", strict_z2()),
        ("strict Z/3", strict_cyclic(3)),
        ("categorical group (2,2)", categorical_group(2, 2)),
        ("twisted categorical group (2,3)", twisted_categorical_group(2, 3, sample_cochain)),
        ("twisted categorical group (3,3)", twisted_categorical_group(3, 3, sample_cochain)),
        ("right-projection Ch2", right_projection_ch2()),
        ("skew Ch3", skew_ch3()),
    ];
    out.extend(skew_products());
    out
}

/// Objects `X, Y, Q`; morphisms `u, v: X → Y`, `q: Y → Q`, `w = q∘u = q∘v`.
/// The cofork `q` is a coequalizer of `(u, v)`.
pub fn cofork_category() -> (FinCat, Cofork) {
    let names = ["1X", "1Y", "1Q", "u", "v", "q", "w"];
    let ends = [(0, 0), (1, 1), (2, 2), (0, 1), (0, 1), (1, 2), (0, 2)];
    let morphisms = names
        .iter()
        .zip(ends)
        .map(|(n, (src, tgt))| MorphismData {
            name: n.to_string(),
            src,
            tgt,
        })
        .collect();
    let objects = ["X", "Y", "Q"].iter().map(|s| s.to_string()).collect();
    let c = FinCat::from_fn(objects, morphisms, vec![0, 1, 2], |g, f| match (g, f) {
        (0..=2, f) => f,
        (g, 0..=2) => g,
        _ => 6,
    });
    let m = |n: &str| c.morphism_index(n).unwrap();
    let cofork = Cofork {
        u: m("u"),
        v: m("v"),
        apex: c.object_index("Q").unwrap(),
        leg: m("q"),
    };
    (c, cofork)
}

/// A tensor `A ⊗ B = F(A)` on [`cofork_category`], where `F` collapses `Y`
/// onto `X`: `F` sends `u, v, 1Y` to `1X` and `q, w` to `w`. The image of the
/// coequalizer `q` is not a coequalizer.
pub fn collapsing_tensor() -> (FinCat, Cofork, FinFunctor) {
    let (c, cofork) = cofork_category();
    let m = |n: &str| c.morphism_index(n).unwrap();
    let o = |n: &str| c.object_index(n).unwrap();
    let obj_f = [o("X"), o("X"), o("Q")];
    let mor_f: Vec<MorId> = ["1X", "1X", "1Q", "1X", "1X", "w", "w"]
        .iter()
        .map(|n| m(n))
        .collect();
    let c = Arc::new(c);
    let prod = Arc::new(product_category(&c, &c));
    let (n, k) = (c.num_objects(), c.num_morphisms());
    let tensor = FinFunctor {
        dom: prod,
        cod: c.clone(),
        obj_map: (0..n * n).map(|p| obj_f[p / n]).collect(),
        mor_map: (0..k * k).map(|p| mor_f[p / k]).collect(),
    };
    ((*c).clone(), cofork, tensor)
}

/// The closure operator `x ↦ t[x]` on the chain of length `t.len()` as an
/// mw-monad; every `T` value is the unique morphism `DX → DY`.
pub fn chain_closure_mw(t: &[ObjId]) -> MwMonad {
    let c = Arc::new(FinCat::chain(t.len()));
    let k = (0..t.len()).map(|x| c.hom(x, t[x])[0]).collect();
    let base = c.clone();
    MwMonad::from_fn(c, t.to_vec(), k, move |y, f| base.hom(t[base.src(f)], t[y])[0])
}

/// The constant closure at the top of `Ch3`.
pub fn const_top_closure() -> MwMonad {
    chain_closure_mw(&[2, 2, 2])
}

/// `d_*: A ⇸ B` for the functor from the discrete category on the objects of
/// `c` sending object `a` to `d[a]`.
pub fn discrete_star(c: &Arc<FinCat>, d: &[ObjId]) -> FinProf {
    let i = discrete_inclusion(c);
    let f = FinFunctor {
        dom: i.dom.clone(),
        cod: c.clone(),
        obj_map: d.to_vec(),
        mor_map: d.iter().map(|&y| c.identity(y)).collect(),
    };
    lower_star(&f)
}

/// `d_*: B ⇸ B` for a monotone object map `d` of a thin category.
pub fn endo_star(c: &Arc<FinCat>, d: &[ObjId]) -> FinProf {
    let f = FinFunctor {
        dom: c.clone(),
        cod: c.clone(),
        obj_map: d.to_vec(),
        mor_map: (0..c.num_morphisms())
            .map(|m| c.hom(d[c.src(m)], d[c.tgt(m)])[0])
            .collect(),
    };
    lower_star(&f)
}

/// Object lists for a hom category `K(A, B)` and the endo-hom `K(B, B)`.
#[derive(Debug, Clone)]
pub struct HomBundle {
    pub base: Arc<FinCat>,
    /// Profunctors `A ⇸ B`; the unit `i_*` is added by the hom category.
    pub objects: Vec<FinProf>,
    /// Profunctors `B ⇸ B`.
    pub endo: Vec<FinProf>,
}

/// `K(A, 1)`, `K(A, Ch2)` with the non-functor-valued `i_*⊗i_*`, and
/// `K(A, Ch3)` with the three non-identity closure operators.
pub fn hom_bundles() -> Vec<(&'static str, HomBundle)> {
    let one = Arc::new(FinCat::terminal());
    let c2 = Arc::new(ch2());
    let h = hom_skew_moncat(&c2, Vec::new()).expect("valid base");
    let i = h.unit();
    let ii = (*h.tensor(&i, &i)).clone();
    let c3 = Arc::new(ch3());
    let closures = [[1, 1, 2], [2, 2, 2], [0, 2, 2]];
    vec![
        (
            "K(1)",
            HomBundle {
                objects: vec![],
                endo: vec![hom_prof(&one)],
                base: one,
            },
        ),
        (
            "K(Ch2)",
            HomBundle {
                objects: vec![discrete_star(&c2, &[1, 1]), ii],
                endo: vec![hom_prof(&c2), endo_star(&c2, &[1, 1])],
                base: c2,
            },
        ),
        (
            "K(Ch3)",
            HomBundle {
                objects: closures.iter().map(|d| discrete_star(&c3, d)).collect(),
                endo: std::iter::once(hom_prof(&c3))
                    .chain(closures.iter().map(|d| endo_star(&c3, d)))
                    .collect(),
                base: c3,
            },
        ),
    ]
}
