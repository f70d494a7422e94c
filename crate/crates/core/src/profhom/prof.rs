use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Result, StructureError};
use crate::fincore::{coequalizer_finset, FinCat, FinFunctor, FinSetMap, FinSetObj, MorId, ObjId};
use crate::search::Csp;

/// A finite profunctor `P: A ⇸ B`, a set `P(b, a)` for every pair of
/// objects, contravariant in `b ∈ B` and covariant in `a ∈ A`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinProf {
    pub dom: Arc<FinCat>,
    pub cod: Arc<FinCat>,
    /// `values[b * |A| + a] = P(b, a)`.
    pub values: Vec<FinSetObj>,
    /// `left[β][a]` is the action `P(b, a) → P(b′, a)` of `β: b′ → b`.
    pub left: Vec<Vec<Vec<usize>>>,
    /// `right[α][b]` is the action `P(b, a) → P(b, a′)` of `α: a → a′`.
    pub right: Vec<Vec<Vec<usize>>>,
}

impl FinProf {
    /// Tabulates a profunctor. `left(β, a, x)` is the action of `β: b′ → b`
    /// on `x ∈ P(b, a)`; `right(α, b, x)` that of `α: a → a′` on `x ∈ P(b, a)`.
    pub fn from_fn(
        dom: Arc<FinCat>,
        cod: Arc<FinCat>,
        values: impl Fn(ObjId, ObjId) -> Vec<String>,
        left: impl Fn(MorId, ObjId, usize) -> usize,
        right: impl Fn(MorId, ObjId, usize) -> usize,
    ) -> FinProf {
        let (na, nb) = (dom.num_objects(), cod.num_objects());
        let values: Vec<FinSetObj> = (0..nb * na)
            .map(|p| FinSetObj::new(values(p / na, p % na)))
            .collect();
        let size = |b: ObjId, a: ObjId| values[b * na + a].len();
        let left = (0..cod.num_morphisms())
            .map(|m| {
                (0..na)
                    .map(|a| (0..size(cod.tgt(m), a)).map(|x| left(m, a, x)).collect())
                    .collect()
            })
            .collect();
        let right = (0..dom.num_morphisms())
            .map(|m| {
                (0..nb)
                    .map(|b| (0..size(b, dom.src(m))).map(|x| right(m, b, x)).collect())
                    .collect()
            })
            .collect();
        FinProf {
            dom,
            cod,
            values,
            left,
            right,
        }
    }

    pub fn cell(&self, b: ObjId, a: ObjId) -> usize {
        b * self.dom.num_objects() + a
    }

    pub fn value(&self, b: ObjId, a: ObjId) -> &FinSetObj {
        &self.values[self.cell(b, a)]
    }

    pub fn size(&self, b: ObjId, a: ObjId) -> usize {
        self.value(b, a).len()
    }

    pub fn act_left(&self, beta: MorId, a: ObjId, x: usize) -> usize {
        self.left[beta][a][x]
    }

    pub fn act_right(&self, alpha: MorId, b: ObjId, x: usize) -> usize {
        self.right[alpha][b][x]
    }

    pub fn name(&self, b: ObjId, a: ObjId, x: usize) -> &str {
        &self.value(b, a).elements[x]
    }

    /// Cell sizes, one row per object of the codomain.
    pub fn label(&self) -> String {
        let na = self.dom.num_objects();
        let rows: Vec<String> = (0..self.cod.num_objects())
            .map(|b| {
                (0..na)
                    .map(|a| self.size(b, a).to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        format!("[{}]", rows.join("|"))
    }

    /// Table shapes, element names, functoriality of both actions and their
    /// commutation.
    pub fn structural_errors(&self) -> Vec<String> {
        let (a_cat, b_cat) = (&*self.dom, &*self.cod);
        let (na, nb) = (a_cat.num_objects(), b_cat.num_objects());
        let mut out = Vec::new();
        if self.values.len() != na * nb
            || self.left.len() != b_cat.num_morphisms()
            || self.right.len() != a_cat.num_morphisms()
        {
            out.push("profunctor tables have the wrong number of entries".into());
            return out;
        }
        for b in 0..nb {
            for a in 0..na {
                let els = &self.value(b, a).elements;
                let mut seen = std::collections::HashSet::new();
                if let Some(dup) = els.iter().find(|e| !seen.insert(*e)) {
                    out.push(format!("duplicate element {dup} at ({b}, {a})"));
                }
            }
        }
        for m in 0..b_cat.num_morphisms() {
            let (s, t) = (b_cat.src(m), b_cat.tgt(m));
            let ok = self.left[m].len() == na
                && (0..na).all(|a| {
                    self.left[m][a].len() == self.size(t, a)
                        && self.left[m][a].iter().all(|&x| x < self.size(s, a))
                });
            if !ok {
                out.push(format!("left action of {} is ill-typed", b_cat.morphism_name(m)));
            }
        }
        for m in 0..a_cat.num_morphisms() {
            let (s, t) = (a_cat.src(m), a_cat.tgt(m));
            let ok = self.right[m].len() == nb
                && (0..nb).all(|b| {
                    self.right[m][b].len() == self.size(b, s)
                        && self.right[m][b].iter().all(|&x| x < self.size(b, t))
                });
            if !ok {
                out.push(format!("right action of {} is ill-typed", a_cat.morphism_name(m)));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for b in 0..nb {
            let id = b_cat.identity(b);
            if (0..na).any(|a| self.left[id][a].iter().enumerate().any(|(x, &y)| x != y)) {
                out.push(format!("left action of {} is not the identity", b_cat.morphism_name(id)));
            }
        }
        for a in 0..na {
            let id = a_cat.identity(a);
            if (0..nb).any(|b| self.right[id][b].iter().enumerate().any(|(x, &y)| x != y)) {
                out.push(format!("right action of {} is not the identity", a_cat.morphism_name(id)));
            }
        }
        // β∘β′ acts as the action of β followed by that of β′
        for (g, f, gf) in b_cat.comp_triples() {
            for a in 0..na {
                for x in 0..self.size(b_cat.tgt(g), a) {
                    if self.left[gf][a][x] != self.left[f][a][self.left[g][a][x]] {
                        out.push(format!(
                            "left action does not preserve {}∘{}",
                            b_cat.morphism_name(g),
                            b_cat.morphism_name(f)
                        ));
                    }
                }
            }
        }
        for (g, f, gf) in a_cat.comp_triples() {
            for b in 0..nb {
                for x in 0..self.size(b, a_cat.src(f)) {
                    if self.right[gf][b][x] != self.right[g][b][self.right[f][b][x]] {
                        out.push(format!(
                            "right action does not preserve {}∘{}",
                            a_cat.morphism_name(g),
                            a_cat.morphism_name(f)
                        ));
                    }
                }
            }
        }
        for beta in 0..b_cat.num_morphisms() {
            let (b1, b) = (b_cat.src(beta), b_cat.tgt(beta));
            for alpha in 0..a_cat.num_morphisms() {
                let (a, a1) = (a_cat.src(alpha), a_cat.tgt(alpha));
                for x in 0..self.size(b, a) {
                    let lr = self.right[alpha][b1][self.left[beta][a][x]];
                    let rl = self.left[beta][a1][self.right[alpha][b][x]];
                    if lr != rl {
                        out.push(format!(
                            "actions of {} and {} do not commute",
                            b_cat.morphism_name(beta),
                            a_cat.morphism_name(alpha)
                        ));
                    }
                }
            }
        }
        out.dedup();
        out
    }

    pub fn validate(&self) -> Result<()> {
        let errs = self.structural_errors();
        if errs.is_empty() {
            Ok(())
        } else {
            Err(StructureError::Malformed(errs.join("; ")))
        }
    }
}

/// A natural family `P ⇒ Q` of maps `P(b, a) → Q(b, a)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProfMor {
    pub src: Arc<FinProf>,
    pub tgt: Arc<FinProf>,
    /// `components[cell][x]`, cells indexed as in [`FinProf::values`].
    pub components: Vec<Vec<usize>>,
}

impl ProfMor {
    pub fn from_fn(
        src: Arc<FinProf>,
        tgt: Arc<FinProf>,
        f: impl Fn(ObjId, ObjId, usize) -> usize,
    ) -> ProfMor {
        let na = src.dom.num_objects();
        let components = (0..src.values.len())
            .map(|p| {
                let (b, a) = (p / na, p % na);
                (0..src.size(b, a)).map(|x| f(b, a, x)).collect()
            })
            .collect();
        ProfMor {
            src,
            tgt,
            components,
        }
    }

    pub fn identity(p: &Arc<FinProf>) -> ProfMor {
        ProfMor::from_fn(p.clone(), p.clone(), |_, _, x| x)
    }

    pub fn apply(&self, b: ObjId, a: ObjId, x: usize) -> usize {
        self.components[self.src.cell(b, a)][x]
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &ProfMor) -> ProfMor {
        assert_eq!(self.tgt, next.src, "composite of non-composable profunctor maps");
        ProfMor::from_fn(self.src.clone(), next.tgt.clone(), |b, a, x| {
            next.apply(b, a, self.apply(b, a, x))
        })
    }

    pub fn structural_errors(&self) -> Vec<String> {
        let (p, q) = (&*self.src, &*self.tgt);
        if p.dom != q.dom || p.cod != q.cod {
            return vec!["source and target have different boundaries".into()];
        }
        let ok = self.components.len() == p.values.len()
            && self.components.iter().enumerate().all(|(c, comp)| {
                comp.len() == p.values[c].len() && comp.iter().all(|&y| y < q.values[c].len())
            });
        if !ok {
            return vec!["components are ill-typed".into()];
        }
        let mut out = Vec::new();
        let (na, nb) = (p.dom.num_objects(), p.cod.num_objects());
        for beta in 0..p.cod.num_morphisms() {
            let (b1, b) = (p.cod.src(beta), p.cod.tgt(beta));
            for a in 0..na {
                for x in 0..p.size(b, a) {
                    if self.apply(b1, a, p.act_left(beta, a, x)) != q.act_left(beta, a, self.apply(b, a, x)) {
                        out.push(format!("not natural at {}", p.cod.morphism_name(beta)));
                    }
                }
            }
        }
        for alpha in 0..p.dom.num_morphisms() {
            let (a, a1) = (p.dom.src(alpha), p.dom.tgt(alpha));
            for b in 0..nb {
                for x in 0..p.size(b, a) {
                    if self.apply(b, a1, p.act_right(alpha, b, x)) != q.act_right(alpha, b, self.apply(b, a, x)) {
                        out.push(format!("not natural at {}", p.dom.morphism_name(alpha)));
                    }
                }
            }
        }
        out.dedup();
        out
    }

    pub fn is_natural(&self) -> bool {
        self.structural_errors().is_empty()
    }

    /// Inverse family when every component is a bijection.
    pub fn inverse(&self) -> Option<ProfMor> {
        let mut inv = Vec::with_capacity(self.components.len());
        for (c, comp) in self.components.iter().enumerate() {
            let n = self.tgt.values[c].len();
            if comp.len() != n {
                return None;
            }
            let mut back = vec![usize::MAX; n];
            for (x, &y) in comp.iter().enumerate() {
                if back[y] != usize::MAX {
                    return None;
                }
                back[y] = x;
            }
            inv.push(back);
        }
        Some(ProfMor {
            src: self.tgt.clone(),
            tgt: self.src.clone(),
            components: inv,
        })
    }

    pub fn is_iso(&self) -> bool {
        self.inverse().is_some()
    }

    pub fn label(&self) -> String {
        format!("{:?}", self.components)
    }
}

/// All natural families `p ⇒ q`, in lexicographic order of component
/// tables, stopping after `limit` if given.
pub fn nat_transformations(p: &Arc<FinProf>, q: &Arc<FinProf>, limit: Option<usize>) -> Vec<ProfMor> {
    if p.dom != q.dom || p.cod != q.cod {
        return Vec::new();
    }
    let (na, nb) = (p.dom.num_objects(), p.cod.num_objects());
    let mut offset = Vec::with_capacity(p.values.len() + 1);
    offset.push(0);
    for v in &p.values {
        offset.push(offset.last().unwrap() + v.len());
    }
    let var = |b: ObjId, a: ObjId, x: usize| offset[b * na + a] + x;
    let domains = (0..p.values.len())
        .flat_map(|c| std::iter::repeat_n((0..q.values[c].len()).collect::<Vec<_>>(), p.values[c].len()))
        .collect();
    let mut csp = Csp::new(domains);
    for beta in 0..p.cod.num_morphisms() {
        let (b1, b) = (p.cod.src(beta), p.cod.tgt(beta));
        for a in 0..na {
            for x in 0..p.size(b, a) {
                let (u, v) = (var(b, a, x), var(b1, a, p.act_left(beta, a, x)));
                csp.constrain([u, v], move |s| match (s[u], s[v]) {
                    (Some(fx), Some(fy)) => q.act_left(beta, a, fx) == fy,
                    _ => true,
                });
            }
        }
    }
    for alpha in 0..p.dom.num_morphisms() {
        let (a, a1) = (p.dom.src(alpha), p.dom.tgt(alpha));
        for b in 0..nb {
            for x in 0..p.size(b, a) {
                let (u, v) = (var(b, a, x), var(b, a1, p.act_right(alpha, b, x)));
                csp.constrain([u, v], move |s| match (s[u], s[v]) {
                    (Some(fx), Some(fy)) => q.act_right(alpha, b, fx) == fy,
                    _ => true,
                });
            }
        }
    }
    csp.solve(limit)
        .into_iter()
        .map(|sol| ProfMor::from_fn(p.clone(), q.clone(), |b, a, x| sol[var(b, a, x)]))
        .collect()
}

/// `f_*(b, a) = B(b, fa)` for a functor `f: A → B`.
pub fn lower_star(f: &FinFunctor) -> FinProf {
    let (a_cat, b_cat) = (f.dom.clone(), f.cod.clone());
    let c = &*b_cat;
    let pos = |b: ObjId, t: ObjId, m: MorId| c.hom(b, t).iter().position(|&g| g == m).unwrap();
    FinProf::from_fn(
        a_cat.clone(),
        b_cat.clone(),
        |b, a| c.hom(b, f.obj(a)).iter().map(|&m| c.morphism_name(m).to_string()).collect(),
        |beta, a, x| {
            let (b1, b) = (c.src(beta), c.tgt(beta));
            let g = c.hom(b, f.obj(a))[x];
            pos(b1, f.obj(a), c.compose(g, beta))
        },
        |alpha, b, x| {
            let (a, a1) = (a_cat.src(alpha), a_cat.tgt(alpha));
            let g = c.hom(b, f.obj(a))[x];
            pos(b, f.obj(a1), c.compose(f.mor(alpha), g))
        },
    )
}

/// `f^*(a, b) = B(fa, b)` for a functor `f: A → B`, a profunctor `B ⇸ A`.
pub fn upper_star(f: &FinFunctor) -> FinProf {
    let (a_cat, b_cat) = (f.dom.clone(), f.cod.clone());
    let c = &*b_cat;
    let pos = |s: ObjId, b: ObjId, m: MorId| c.hom(s, b).iter().position(|&g| g == m).unwrap();
    FinProf::from_fn(
        b_cat.clone(),
        a_cat.clone(),
        |a, b| c.hom(f.obj(a), b).iter().map(|&m| c.morphism_name(m).to_string()).collect(),
        |alpha, b, x| {
            let (a1, a) = (a_cat.src(alpha), a_cat.tgt(alpha));
            let g = c.hom(f.obj(a), b)[x];
            pos(f.obj(a1), b, c.compose(g, f.mor(alpha)))
        },
        |beta, a, x| {
            let (b, b1) = (c.src(beta), c.tgt(beta));
            let g = c.hom(f.obj(a), b)[x];
            pos(f.obj(a), b1, c.compose(beta, g))
        },
    )
}

/// The identity profunctor `hom_C`.
pub fn hom_prof(c: &Arc<FinCat>) -> FinProf {
    lower_star(&FinFunctor::identity(c))
}

/// Summand `(b, x, y)` of a coend: middle object `b`, `x ∈ G(c, b)`,
/// `y ∈ F(b, a)`.
pub type Summand = (ObjId, usize, usize);

/// The coend `∫^b G(−, b) × F(b, −)` with its quotient bookkeeping.
#[derive(Debug, Clone)]
pub struct Coend {
    pub g: Arc<FinProf>,
    pub f: Arc<FinProf>,
    pub prof: Arc<FinProf>,
    summands: Vec<Vec<Summand>>,
    index: Vec<HashMap<Summand, usize>>,
    class_of: Vec<Vec<usize>>,
    reps: Vec<Vec<usize>>,
}

impl Coend {
    /// Class of a summand at cell `(c, a)`.
    pub fn class(&self, c: ObjId, a: ObjId, s: Summand) -> usize {
        let cell = self.prof.cell(c, a);
        self.class_of[cell][self.index[cell][&s]]
    }

    /// Least summand of class `k` at cell `(c, a)`.
    pub fn rep(&self, c: ObjId, a: ObjId, k: usize) -> Summand {
        let cell = self.prof.cell(c, a);
        self.summands[cell][self.reps[cell][k]]
    }

    pub fn summands(&self, c: ObjId, a: ObjId) -> &[Summand] {
        &self.summands[self.prof.cell(c, a)]
    }

    /// Whether the actions, computed on representatives, agree with the
    /// actions of every member of each class.
    pub fn actions_well_defined(&self) -> bool {
        let (g, f, p) = (&*self.g, &*self.f, &*self.prof);
        let (na, nc) = (p.dom.num_objects(), p.cod.num_objects());
        for c in 0..nc {
            for a in 0..na {
                for &(b, x, y) in self.summands(c, a) {
                    let k = self.class(c, a, (b, x, y));
                    for gamma in 0..p.cod.num_morphisms() {
                        if p.cod.tgt(gamma) == c {
                            let img = self.class(p.cod.src(gamma), a, (b, g.act_left(gamma, b, x), y));
                            if img != p.act_left(gamma, a, k) {
                                return false;
                            }
                        }
                    }
                    for alpha in 0..p.dom.num_morphisms() {
                        if p.dom.src(alpha) == a {
                            let img = self.class(c, p.dom.tgt(alpha), (b, x, f.act_right(alpha, b, y)));
                            if img != p.act_right(alpha, c, k) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

/// Composite `G·F: A ⇸ C` of `F: A ⇸ B` and `G: B ⇸ C`, as the quotient of
/// `Σ_b G(c, b) × F(b, a)` by `(xβ, y) ~ (x, βy)`. Classes are named by
/// their least summand.
pub fn coend(g: &Arc<FinProf>, f: &Arc<FinProf>) -> Result<Coend> {
    if g.dom != f.cod {
        return Err(StructureError::Precondition(
            "composite of profunctors with mismatched middle category".into(),
        ));
    }
    let mid = &*f.cod;
    let (na, nm, nc) = (f.dom.num_objects(), mid.num_objects(), g.cod.num_objects());
    let mut summands = Vec::with_capacity(nc * na);
    let mut index = Vec::with_capacity(nc * na);
    let mut class_of = Vec::with_capacity(nc * na);
    let mut reps = Vec::with_capacity(nc * na);
    let mut values = Vec::with_capacity(nc * na);
    for c in 0..nc {
        for a in 0..na {
            let sum: Vec<Summand> = (0..nm)
                .flat_map(|b| {
                    (0..g.size(c, b)).flat_map(move |x| (0..f.size(b, a)).map(move |y| (b, x, y)))
                })
                .collect();
            let idx: HashMap<Summand, usize> = sum.iter().enumerate().map(|(i, &s)| (s, i)).collect();
            let (mut us, mut vs) = (Vec::new(), Vec::new());
            for beta in 0..mid.num_morphisms() {
                let (b, b1) = (mid.src(beta), mid.tgt(beta));
                for x in 0..g.size(c, b) {
                    for y in 0..f.size(b1, a) {
                        us.push(idx[&(b1, g.act_right(beta, c, x), y)]);
                        vs.push(idx[&(b, x, f.act_left(beta, a, y))]);
                    }
                }
            }
            let names: Vec<String> = sum
                .iter()
                .map(|&(b, x, y)| format!("{}.{}.{}", g.name(c, b, x), mid.object_name(b), f.name(b, a, y)))
                .collect();
            let sum_set = FinSetObj::new(names);
            let rel = FinSetObj::of_size(us.len());
            let map = |table| FinSetMap {
                dom: rel.clone(),
                cod: sum_set.clone(),
                table,
            };
            let (quotient, q) = coequalizer_finset(&map(us), &map(vs));
            let mut first = vec![usize::MAX; quotient.len()];
            for (i, &k) in q.table.iter().enumerate().rev() {
                first[k] = i;
            }
            summands.push(sum);
            index.push(idx);
            class_of.push(q.table);
            reps.push(first);
            values.push(quotient);
        }
    }
    let mut co = Coend {
        g: g.clone(),
        f: f.clone(),
        prof: Arc::new(FinProf {
            dom: f.dom.clone(),
            cod: g.cod.clone(),
            values,
            left: Vec::new(),
            right: Vec::new(),
        }),
        summands,
        index,
        class_of,
        reps,
    };
    let (a_cat, c_cat) = (f.dom.clone(), g.cod.clone());
    let prof = FinProf::from_fn(
        a_cat,
        c_cat.clone(),
        |c, a| co.prof.value(c, a).elements.clone(),
        |gamma, a, k| {
            let (c1, c) = (c_cat.src(gamma), c_cat.tgt(gamma));
            let (b, x, y) = co.rep(c, a, k);
            co.class(c1, a, (b, g.act_left(gamma, b, x), y))
        },
        |alpha, c, k| {
            let (a, a1) = (f.dom.src(alpha), f.dom.tgt(alpha));
            let (b, x, y) = co.rep(c, a, k);
            co.class(c, a1, (b, x, f.act_right(alpha, b, y)))
        },
    );
    co.prof = Arc::new(prof);
    Ok(co)
}

/// `G·F` by coend.
pub fn prof_compose(g: &Arc<FinProf>, f: &Arc<FinProf>) -> Result<FinProf> {
    Ok((*coend(g, f)?.prof).clone())
}

/// `ψ·φ: G·F ⇒ G′·F′` for `ψ: G ⇒ G′` and `φ: F ⇒ F′`.
pub fn compose_mor(psi: &ProfMor, phi: &ProfMor) -> Result<ProfMor> {
    let src = coend(&psi.src, &phi.src)?;
    let tgt = coend(&psi.tgt, &phi.tgt)?;
    Ok(whisker_between(&src, &tgt, psi, phi))
}

fn whisker_between(src: &Coend, tgt: &Coend, psi: &ProfMor, phi: &ProfMor) -> ProfMor {
    ProfMor::from_fn(src.prof.clone(), tgt.prof.clone(), |c, a, k| {
        let (b, x, y) = src.rep(c, a, k);
        tgt.class(c, a, (b, psi.apply(c, b, x), phi.apply(b, a, y)))
    })
}

/// `hom_B·F ⇒ F`, `[(β, y)] ↦ yβ`.
pub fn left_unitor(f: &Arc<FinProf>) -> Result<ProfMor> {
    let hom = Arc::new(hom_prof(&f.cod));
    let co = coend(&hom, f)?;
    let c = &*f.cod;
    Ok(ProfMor::from_fn(co.prof.clone(), f.clone(), |b0, a, k| {
        let (b, x, y) = co.rep(b0, a, k);
        f.act_left(c.hom(b0, b)[x], a, y)
    }))
}

/// `F·hom_A ⇒ F`, `[(x, α)] ↦ αx`.
pub fn right_unitor(f: &Arc<FinProf>) -> Result<ProfMor> {
    let hom = Arc::new(hom_prof(&f.dom));
    let co = coend(f, &hom)?;
    let d = &*f.dom;
    Ok(ProfMor::from_fn(co.prof.clone(), f.clone(), |b, a0, k| {
        let (a, x, y) = co.rep(b, a0, k);
        f.act_right(d.hom(a, a0)[y], b, x)
    }))
}

/// `(H·G)·F ⇒ H·(G·F)`.
pub fn associator(h: &Arc<FinProf>, g: &Arc<FinProf>, f: &Arc<FinProf>) -> Result<ProfMor> {
    let hg = coend(h, g)?;
    let gf = coend(g, f)?;
    let lhs = coend(&hg.prof, f)?;
    let rhs = coend(h, &gf.prof)?;
    Ok(ProfMor::from_fn(lhs.prof.clone(), rhs.prof.clone(), |d, a, k| {
        let (b, w, y) = lhs.rep(d, a, k);
        let (c, z, x) = hg.rep(d, b, w);
        rhs.class(d, a, (c, z, gf.class(c, a, (b, x, y))))
    }))
}

/// Unit and counit of `f_* ⊣ f^*`.
#[derive(Debug, Clone)]
pub struct Adjunction {
    pub lower: Arc<FinProf>,
    pub upper: Arc<FinProf>,
    /// `hom_A ⇒ f^*·f_*`.
    pub eta: ProfMor,
    /// `f_*·f^* ⇒ hom_B`.
    pub eps: ProfMor,
}

pub fn adjunction_units(f: &FinFunctor) -> Result<Adjunction> {
    let lower = Arc::new(lower_star(f));
    let upper = Arc::new(upper_star(f));
    let (a_cat, b_cat) = (&*f.dom, &*f.cod);
    let hom_a = Arc::new(hom_prof(&f.dom));
    let hom_b = Arc::new(hom_prof(&f.cod));
    let pos = |s: ObjId, t: ObjId, m: MorId| b_cat.hom(s, t).iter().position(|&g| g == m).unwrap();
    let ul = coend(&upper, &lower)?;
    let eta = ProfMor::from_fn(hom_a, ul.prof.clone(), |a1, a, x| {
        let alpha = a_cat.hom(a1, a)[x];
        let fa = f.obj(a);
        let s = (fa, pos(f.obj(a1), fa, f.mor(alpha)), pos(fa, fa, b_cat.identity(fa)));
        ul.class(a1, a, s)
    });
    let lu = coend(&lower, &upper)?;
    let eps = ProfMor::from_fn(lu.prof.clone(), hom_b, |b, b1, k| {
        let (a, x, y) = lu.rep(b, b1, k);
        let fa = f.obj(a);
        let m = b_cat.compose(b_cat.hom(fa, b1)[y], b_cat.hom(b, fa)[x]);
        pos(b, b1, m)
    });
    Ok(Adjunction {
        lower,
        upper,
        eta,
        eps,
    })
}

/// The two triangle identities, each computed as a composite of canonical
/// isomorphisms and whiskered unit/counit and compared with the identity.
pub fn triangle_identities(adj: &Adjunction) -> Result<[bool; 2]> {
    let (lo, up) = (&adj.lower, &adj.upper);
    let id_lo = ProfMor::identity(lo);
    let id_up = ProfMor::identity(up);
    let inv = |m: ProfMor| m.inverse().expect("canonical map is invertible");

    let first = inv(right_unitor(lo)?)
        .then(&compose_mor(&id_lo, &adj.eta)?)
        .then(&inv(associator(lo, up, lo)?))
        .then(&compose_mor(&adj.eps, &id_lo)?)
        .then(&left_unitor(lo)?);
    let second = inv(left_unitor(up)?)
        .then(&compose_mor(&adj.eta, &id_up)?)
        .then(&associator(up, lo, up)?)
        .then(&compose_mor(&id_up, &adj.eps)?)
        .then(&right_unitor(up)?);
    Ok([first == id_lo, second == id_up])
}

/// For each `a`, a representing object `r` and universal element
/// `e ∈ P(r, a)`: `β ↦ eβ` is a bijection `B(b, r) → P(b, a)` for every `b`.
/// The first candidate in `(r, e)` order is returned.
pub fn representation(p: &FinProf) -> Option<Vec<(ObjId, usize)>> {
    let c = &*p.cod;
    (0..p.dom.num_objects())
        .map(|a| {
            (0..c.num_objects()).find_map(|r| {
                (0..p.size(r, a))
                    .find(|&e| {
                        (0..c.num_objects()).all(|b| {
                            let hom = c.hom(b, r);
                            if hom.len() != p.size(b, a) {
                                return false;
                            }
                            let mut hit = vec![false; hom.len()];
                            hom.iter().all(|&beta| !std::mem::replace(&mut hit[p.act_left(beta, a, e)], true))
                        })
                    })
                    .map(|e| (r, e))
            })
        })
        .collect()
}

pub fn is_functor_valued(p: &FinProf) -> bool {
    representation(p).is_some()
}

/// The functor `d: A → B` with `P ≅ d_*`, when every `P(−, a)` is representable.
pub fn representing_functor(p: &FinProf) -> Option<FinFunctor> {
    let rep = representation(p)?;
    let (a_cat, c) = (&*p.dom, &*p.cod);
    let mor_map = (0..a_cat.num_morphisms())
        .map(|alpha| {
            let ((r, e), (r1, e1)) = (rep[a_cat.src(alpha)], rep[a_cat.tgt(alpha)]);
            let image = p.act_right(alpha, r, e);
            *c.hom(r, r1)
                .iter()
                .find(|&&beta| p.act_left(beta, a_cat.tgt(alpha), e1) == image)
                .expect("universal element")
        })
        .collect();
    Some(FinFunctor {
        dom: p.dom.clone(),
        cod: p.cod.clone(),
        obj_map: rep.iter().map(|&(r, _)| r).collect(),
        mor_map,
    })
}

/// Pointwise coequalizer `q: Q → Q/~` of natural families `u, v: P ⇒ Q`,
/// classes named by their least element.
pub fn prof_coequalizer(u: &ProfMor, v: &ProfMor) -> ProfMor {
    let q = &*u.tgt;
    let mut class_of = Vec::with_capacity(q.values.len());
    let mut reps = Vec::with_capacity(q.values.len());
    for cell in 0..q.values.len() {
        let pairs = (0..u.src.values[cell].len()).map(|x| (u.components[cell][x], v.components[cell][x]));
        let (cls, rep) = crate::fincore::quotient_by_pairs(q.values[cell].len(), pairs);
        class_of.push(cls);
        reps.push(rep);
    }
    let na = q.dom.num_objects();
    let quotient = FinProf::from_fn(
        q.dom.clone(),
        q.cod.clone(),
        |b, a| reps[b * na + a].iter().map(|&r| q.name(b, a, r).to_string()).collect(),
        |beta, a, k| {
            let (b1, b) = (q.cod.src(beta), q.cod.tgt(beta));
            class_of[b1 * na + a][q.act_left(beta, a, reps[b * na + a][k])]
        },
        |alpha, b, k| {
            let (a, a1) = (q.dom.src(alpha), q.dom.tgt(alpha));
            class_of[b * na + a1][q.act_right(alpha, b, reps[b * na + a][k])]
        },
    );
    ProfMor {
        src: u.tgt.clone(),
        tgt: Arc::new(quotient),
        components: class_of,
    }
}

/// Whether `q` coequalizes `(u, v)` and is, cell by cell, the quotient by
/// the generated relation. Colimits of profunctors are pointwise, so this
/// is the universal property.
pub fn prof_is_coequalizer(u: &ProfMor, v: &ProfMor, q: &ProfMor) -> bool {
    if u.tgt != q.src || v.tgt != q.src || u.src != v.src || !q.is_natural() {
        return false;
    }
    (0..q.src.values.len()).all(|cell| {
        let n = q.src.values[cell].len();
        let pairs = (0..u.src.values[cell].len()).map(|x| (u.components[cell][x], v.components[cell][x]));
        let (cls, reps) = crate::fincore::quotient_by_pairs(n, pairs);
        let comp = &q.components[cell];
        let mut hit = vec![false; q.tgt.values[cell].len()];
        comp.iter().for_each(|&z| hit[z] = true);
        reps.len() == hit.len()
            && hit.iter().all(|&h| h)
            && (0..n).all(|x| (0..n).all(|y| (cls[x] == cls[y]) == (comp[x] == comp[y])))
    })
}

/// The unique `h` with `h∘q = t`, when `q` is pointwise surjective and `t`
/// is constant on its fibres.
pub fn prof_factor(q: &ProfMor, t: &ProfMor) -> Option<ProfMor> {
    if q.src != t.src {
        return None;
    }
    let mut comps = Vec::with_capacity(q.tgt.values.len());
    for cell in 0..q.tgt.values.len() {
        let mut h = vec![usize::MAX; q.tgt.values[cell].len()];
        for (x, &z) in q.components[cell].iter().enumerate() {
            let tx = t.components[cell][x];
            if h[z] != usize::MAX && h[z] != tx {
                return None;
            }
            h[z] = tx;
        }
        if h.contains(&usize::MAX) {
            return None;
        }
        comps.push(h);
    }
    Some(ProfMor {
        src: q.tgt.clone(),
        tgt: t.tgt.clone(),
        components: comps,
    })
}
