use std::sync::Arc;

use super::category::{FinCat, LawViolation, MorId, MorphismData, ObjId};

/// A functor between finite categories, stored extensionally.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinFunctor {
    pub dom: Arc<FinCat>,
    pub cod: Arc<FinCat>,
    pub obj_map: Vec<ObjId>,
    pub mor_map: Vec<MorId>,
}

impl FinFunctor {
    pub fn identity(c: &Arc<FinCat>) -> FinFunctor {
        FinFunctor {
            dom: c.clone(),
            cod: c.clone(),
            obj_map: (0..c.num_objects()).collect(),
            mor_map: (0..c.num_morphisms()).collect(),
        }
    }

    pub fn obj(&self, x: ObjId) -> ObjId {
        self.obj_map[x]
    }

    pub fn mor(&self, f: MorId) -> MorId {
        self.mor_map[f]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &FinFunctor) -> FinFunctor {
        FinFunctor {
            dom: self.dom.clone(),
            cod: other.cod.clone(),
            obj_map: self.obj_map.iter().map(|&x| other.obj(x)).collect(),
            mor_map: self.mor_map.iter().map(|&f| other.mor(f)).collect(),
        }
    }

    /// Exhaustive check of typing, identities and composition.
    pub fn validate(&self) -> Vec<LawViolation> {
        let (d, c) = (&*self.dom, &*self.cod);
        let mut out = Vec::new();
        if self.obj_map.len() != d.num_objects() || self.mor_map.len() != d.num_morphisms() {
            out.push(LawViolation {
                law: "table size".into(),
                witness: vec![],
            });
            return out;
        }
        if self.obj_map.iter().any(|&x| x >= c.num_objects())
            || self.mor_map.iter().any(|&f| f >= c.num_morphisms())
        {
            out.push(LawViolation {
                law: "dangling image".into(),
                witness: vec![],
            });
            return out;
        }
        for f in 0..d.num_morphisms() {
            let ff = self.mor(f);
            if c.src(ff) != self.obj(d.src(f)) || c.tgt(ff) != self.obj(d.tgt(f)) {
                out.push(LawViolation {
                    law: "functor typing".into(),
                    witness: vec![d.morphism_name(f).into()],
                });
            }
        }
        if !out.is_empty() {
            return out;
        }
        for x in 0..d.num_objects() {
            if self.mor(d.identity(x)) != c.identity(self.obj(x)) {
                out.push(LawViolation {
                    law: "preserves identities".into(),
                    witness: vec![d.object_name(x).into()],
                });
            }
        }
        for (g, f, gf) in d.comp_triples() {
            if c.compose(self.mor(g), self.mor(f)) != self.mor(gf) {
                out.push(LawViolation {
                    law: "preserves composition".into(),
                    witness: vec![d.morphism_name(g).into(), d.morphism_name(f).into()],
                });
            }
        }
        out
    }
}

/// A natural transformation between parallel functors, by components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NatTrans {
    pub dom: FinFunctor,
    pub cod: FinFunctor,
    pub components: Vec<MorId>,
}

impl NatTrans {
    pub fn identity(f: &FinFunctor) -> NatTrans {
        NatTrans {
            dom: f.clone(),
            cod: f.clone(),
            components: (0..f.dom.num_objects())
                .map(|x| f.cod.identity(f.obj(x)))
                .collect(),
        }
    }

    pub fn component(&self, x: ObjId) -> MorId {
        self.components[x]
    }

    /// Component typing and the naturality square for every morphism.
    pub fn validate(&self) -> Vec<LawViolation> {
        let (d, c) = (&*self.dom.dom, &*self.dom.cod);
        let mut out = Vec::new();
        for x in 0..d.num_objects() {
            let a = self.components[x];
            if c.src(a) != self.dom.obj(x) || c.tgt(a) != self.cod.obj(x) {
                out.push(LawViolation {
                    law: "component typing".into(),
                    witness: vec![d.object_name(x).into()],
                });
            }
        }
        if !out.is_empty() {
            return out;
        }
        for f in 0..d.num_morphisms() {
            let (x, y) = (d.src(f), d.tgt(f));
            let lhs = c.compose(self.components[y], self.dom.mor(f));
            let rhs = c.compose(self.cod.mor(f), self.components[x]);
            if lhs != rhs {
                out.push(LawViolation {
                    law: "naturality".into(),
                    witness: vec![d.morphism_name(f).into()],
                });
            }
        }
        out
    }
}

/// Product category. Object `(x, y)` has index `x * |ob b| + y`, morphism
/// `(f, g)` has index `f * |mor b| + g`.
pub fn product_category(a: &FinCat, b: &FinCat) -> FinCat {
    let (na, nb) = (a.num_objects(), b.num_objects());
    let mb = b.num_morphisms();
    let mut objects = Vec::with_capacity(na * nb);
    for x in 0..na {
        for y in 0..nb {
            objects.push(format!("({},{})", a.object_name(x), b.object_name(y)));
        }
    }
    let mut morphisms = Vec::with_capacity(a.num_morphisms() * mb);
    for f in 0..a.num_morphisms() {
        for g in 0..mb {
            morphisms.push(MorphismData {
                name: format!("({},{})", a.morphism_name(f), b.morphism_name(g)),
                src: a.src(f) * nb + b.src(g),
                tgt: a.tgt(f) * nb + b.tgt(g),
            });
        }
    }
    let mut ids = Vec::with_capacity(na * nb);
    for x in 0..na {
        for y in 0..nb {
            ids.push(a.identity(x) * mb + b.identity(y));
        }
    }
    FinCat::from_fn(objects, morphisms, ids, |g, f| {
        a.compose(g / mb, f / mb) * mb + b.compose(g % mb, f % mb)
    })
}

/// Opposite category: same identifiers, source and target swapped.
pub fn opposite_category(c: &FinCat) -> FinCat {
    let morphisms = c
        .morphisms()
        .iter()
        .map(|m| MorphismData {
            name: m.name.clone(),
            src: m.tgt,
            tgt: m.src,
        })
        .collect();
    FinCat::from_fn(
        c.objects().to_vec(),
        morphisms,
        c.identities().to_vec(),
        |g, f| c.compose(f, g),
    )
}

/// All functors `dom → cod`, in lexicographic order of (object map, morphism map).
/// Returns `None` if more than `limit` candidates would be produced.
pub fn enumerate_functors(
    dom: &Arc<FinCat>,
    cod: &Arc<FinCat>,
    limit: usize,
) -> Option<Vec<FinFunctor>> {
    let (d, c) = (&**dom, &**cod);
    let n_obj = d.num_objects();
    let n_mor = d.num_morphisms();
    // constraints[k]: composition triples whose largest index is k
    let mut constraints = vec![Vec::new(); n_mor];
    for (g, f, gf) in d.comp_triples() {
        constraints[g.max(f).max(gf)].push((g, f, gf));
    }
    let mut out = Vec::new();
    if n_obj > 0 && c.num_objects() == 0 {
        return Some(out);
    }
    let mut obj_map = vec![0; n_obj];
    loop {
        let mut mor_map = vec![usize::MAX; n_mor];
        if !fill_morphisms(d, c, &obj_map, &constraints, 0, &mut mor_map, &mut out, dom, cod, limit)
        {
            return None;
        }
        // next object map (odometer)
        let mut i = n_obj;
        loop {
            if i == 0 {
                return Some(out);
            }
            i -= 1;
            obj_map[i] += 1;
            if obj_map[i] < c.num_objects() {
                break;
            }
            obj_map[i] = 0;
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn fill_morphisms(
    d: &FinCat,
    c: &FinCat,
    obj_map: &[ObjId],
    constraints: &[Vec<(MorId, MorId, MorId)>],
    k: usize,
    mor_map: &mut Vec<MorId>,
    out: &mut Vec<FinFunctor>,
    dom: &Arc<FinCat>,
    cod: &Arc<FinCat>,
    limit: usize,
) -> bool {
    if k == d.num_morphisms() {
        if out.len() >= limit {
            return false;
        }
        out.push(FinFunctor {
            dom: dom.clone(),
            cod: cod.clone(),
            obj_map: obj_map.to_vec(),
            mor_map: mor_map.clone(),
        });
        return true;
    }
    let (x, y) = (obj_map[d.src(k)], obj_map[d.tgt(k)]);
    let candidates: Vec<MorId> = if d.is_identity(k) {
        if x != y {
            return true;
        }
        vec![c.identity(x)]
    } else {
        c.hom(x, y).to_vec()
    };
    for cand in candidates {
        mor_map[k] = cand;
        let ok = constraints[k]
            .iter()
            .all(|&(g, f, gf)| c.compose(mor_map[g], mor_map[f]) == mor_map[gf]);
        if ok && !fill_morphisms(d, c, obj_map, constraints, k + 1, mor_map, out, dom, cod, limit)
        {
            return false;
        }
    }
    mor_map[k] = usize::MAX;
    true
}

/// All natural transformations `f ⇒ g`, by backtracking over objects.
pub fn enumerate_nat_trans(f: &FinFunctor, g: &FinFunctor) -> Vec<NatTrans> {
    let d = &*f.dom;
    let c = &*f.cod;
    // a morphism's square is checked once both its endpoints are assigned
    let mut checks = vec![Vec::new(); d.num_objects()];
    for m in 0..d.num_morphisms() {
        checks[d.src(m).max(d.tgt(m))].push(m);
    }
    let mut out = Vec::new();
    let mut comps = vec![usize::MAX; d.num_objects()];
    fn go(
        x: usize,
        d: &FinCat,
        c: &FinCat,
        f: &FinFunctor,
        g: &FinFunctor,
        checks: &[Vec<MorId>],
        comps: &mut Vec<MorId>,
        out: &mut Vec<NatTrans>,
    ) {
        if x == d.num_objects() {
            out.push(NatTrans {
                dom: f.clone(),
                cod: g.clone(),
                components: comps.clone(),
            });
            return;
        }
        for &a in c.hom(f.obj(x), g.obj(x)) {
            comps[x] = a;
            let ok = checks[x].iter().all(|&m| {
                c.compose(comps[d.tgt(m)], f.mor(m)) == c.compose(g.mor(m), comps[d.src(m)])
            });
            if ok {
                go(x + 1, d, c, f, g, checks, comps, out);
            }
        }
    }
    go(0, d, c, f, g, &checks, &mut comps, &mut out);
    out
}
