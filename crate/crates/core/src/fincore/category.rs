use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::StructureError;

pub type ObjId = usize;
pub type MorId = usize;

/// A morphism record: name plus source and target object indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MorphismData {
    pub name: String,
    pub src: ObjId,
    pub tgt: ObjId,
}

/// A finite category given by explicit tables.
///
/// Objects and morphisms are addressed by their index in declaration order,
/// which is also the canonical order used for every "least candidate" choice.
/// Composition is stored densely: `comp[g * n + f]` is `Some(g∘f)` exactly on
/// composable pairs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinCat {
    objects: Vec<String>,
    morphisms: Vec<MorphismData>,
    identities: Vec<MorId>,
    comp: Vec<Option<MorId>>,
    homs: Vec<Vec<MorId>>,
}

impl fmt::Debug for FinCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinCat")
            .field("objects", &self.objects)
            .field("morphisms", &self.morphisms.len())
            .finish()
    }
}

impl FinCat {
    /// Builds a category from index-level tables, checking only that every
    /// table is total and refers to existing identifiers. Laws are left to
    /// [`FinCat::validate`].
    pub fn from_parts(
        objects: Vec<String>,
        morphisms: Vec<MorphismData>,
        identities: Vec<MorId>,
        comp_triples: &[(MorId, MorId, MorId)],
    ) -> Result<FinCat, StructureError> {
        let n_obj = objects.len();
        let n = morphisms.len();
        for m in &morphisms {
            if m.src >= n_obj || m.tgt >= n_obj {
                return Err(StructureError::Dangling(format!(
                    "morphism {} has an unknown endpoint",
                    m.name
                )));
            }
        }
        if identities.len() != n_obj {
            return Err(StructureError::Malformed(format!(
                "{} identities for {} objects",
                identities.len(),
                n_obj
            )));
        }
        if let Some(&bad) = identities.iter().find(|&&i| i >= n) {
            return Err(StructureError::Dangling(format!("identity index {bad}")));
        }
        let mut comp = vec![None; n * n];
        for &(g, f, gf) in comp_triples {
            if g >= n || f >= n || gf >= n {
                return Err(StructureError::Dangling(format!(
                    "composition triple ({g}, {f}, {gf})"
                )));
            }
            if morphisms[f].tgt != morphisms[g].src {
                return Err(StructureError::NotComposable(
                    morphisms[g].name.clone(),
                    morphisms[f].name.clone(),
                ));
            }
            if comp[g * n + f].replace(gf).is_some() {
                return Err(StructureError::Malformed(format!(
                    "duplicate composite for ({}, {})",
                    morphisms[g].name, morphisms[f].name
                )));
            }
        }
        for g in 0..n {
            for f in 0..n {
                if morphisms[f].tgt == morphisms[g].src && comp[g * n + f].is_none() {
                    return Err(StructureError::Malformed(format!(
                        "missing composite for ({}, {})",
                        morphisms[g].name, morphisms[f].name
                    )));
                }
            }
        }
        Ok(Self::assemble(objects, morphisms, identities, comp))
    }

    /// Builds a category whose composition is given by a function. Used by
    /// constructions whose output is correct by construction; the result is
    /// still subject to `validate` in tests.
    pub fn from_fn(
        objects: Vec<String>,
        morphisms: Vec<MorphismData>,
        identities: Vec<MorId>,
        mut compose: impl FnMut(MorId, MorId) -> MorId,
    ) -> FinCat {
        let n = morphisms.len();
        let mut comp = vec![None; n * n];
        for g in 0..n {
            for f in 0..n {
                if morphisms[f].tgt == morphisms[g].src {
                    comp[g * n + f] = Some(compose(g, f));
                }
            }
        }
        Self::assemble(objects, morphisms, identities, comp)
    }

    fn assemble(
        objects: Vec<String>,
        morphisms: Vec<MorphismData>,
        identities: Vec<MorId>,
        comp: Vec<Option<MorId>>,
    ) -> FinCat {
        let n_obj = objects.len();
        let mut homs = vec![Vec::new(); n_obj * n_obj];
        for (i, m) in morphisms.iter().enumerate() {
            homs[m.src * n_obj + m.tgt].push(i);
        }
        FinCat {
            objects,
            morphisms,
            identities,
            comp,
            homs,
        }
    }

    /// Builds a category from name-level tables (the JSON shape).
    pub fn from_names(
        objects: &[String],
        morphisms: &[(String, String, String)],
        identities: &[(String, String)],
        comp: &[(String, String, String)],
    ) -> Result<FinCat, StructureError> {
        let obj_ix: HashMap<&str, usize> = index_names(objects.iter().map(|s| s.as_str()))?;
        let mut mors = Vec::with_capacity(morphisms.len());
        for (name, s, t) in morphisms {
            let src = *obj_ix
                .get(s.as_str())
                .ok_or_else(|| StructureError::Dangling(format!("object {s}")))?;
            let tgt = *obj_ix
                .get(t.as_str())
                .ok_or_else(|| StructureError::Dangling(format!("object {t}")))?;
            mors.push(MorphismData {
                name: name.clone(),
                src,
                tgt,
            });
        }
        let mor_ix = index_names(mors.iter().map(|m| m.name.as_str()))?;
        let lookup = |s: &str| {
            mor_ix
                .get(s)
                .copied()
                .ok_or_else(|| StructureError::Dangling(format!("morphism {s}")))
        };
        let mut ids = vec![usize::MAX; objects.len()];
        for (o, m) in identities {
            let oi = *obj_ix
                .get(o.as_str())
                .ok_or_else(|| StructureError::Dangling(format!("object {o}")))?;
            ids[oi] = lookup(m)?;
        }
        if let Some(i) = ids.iter().position(|&m| m == usize::MAX) {
            return Err(StructureError::Malformed(format!(
                "object {} has no identity",
                objects[i]
            )));
        }
        let triples = comp
            .iter()
            .map(|(g, f, gf)| Ok((lookup(g)?, lookup(f)?, lookup(gf)?)))
            .collect::<Result<Vec<_>, StructureError>>()?;
        FinCat::from_parts(objects.to_vec(), mors, ids, &triples)
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[MorphismData] {
        &self.morphisms
    }

    pub fn object_name(&self, x: ObjId) -> &str {
        &self.objects[x]
    }

    pub fn morphism_name(&self, f: MorId) -> &str {
        &self.morphisms[f].name
    }

    pub fn object_index(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn morphism_index(&self, name: &str) -> Option<MorId> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    pub fn src(&self, f: MorId) -> ObjId {
        self.morphisms[f].src
    }

    pub fn tgt(&self, f: MorId) -> ObjId {
        self.morphisms[f].tgt
    }

    pub fn identity(&self, x: ObjId) -> MorId {
        self.identities[x]
    }

    pub fn identities(&self) -> &[MorId] {
        &self.identities
    }

    pub fn is_identity(&self, f: MorId) -> bool {
        self.identities[self.src(f)] == f
    }

    /// `g∘f`; panics on a non-composable pair, which is always a caller bug.
    pub fn compose(&self, g: MorId, f: MorId) -> MorId {
        self.try_compose(g, f).unwrap_or_else(|| {
            panic!(
                "non-composable pair ({}, {})",
                self.morphisms[g].name, self.morphisms[f].name
            )
        })
    }

    pub fn try_compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.comp[g * self.morphisms.len() + f]
    }

    /// Composes a path given in application order: `compose_path(&[f, g, h]) = h∘g∘f`.
    pub fn compose_path(&self, path: &[MorId]) -> MorId {
        let mut it = path.iter();
        let first = *it.next().expect("empty path");
        it.fold(first, |acc, &next| self.compose(next, acc))
    }

    pub fn hom(&self, x: ObjId, y: ObjId) -> &[MorId] {
        &self.homs[x * self.objects.len() + y]
    }

    /// Composable-pair table as name triples `[g, f, g∘f]`, in `(g, f)` index order.
    pub fn comp_triples(&self) -> Vec<(MorId, MorId, MorId)> {
        let n = self.morphisms.len();
        let mut out = Vec::new();
        for g in 0..n {
            for f in 0..n {
                if let Some(gf) = self.comp[g * n + f] {
                    out.push((g, f, gf));
                }
            }
        }
        out
    }

    /// Two-sided inverse of `f`, found by exhaustive search of the reverse hom-set.
    pub fn inverse(&self, f: MorId) -> Option<MorId> {
        let (x, y) = (self.src(f), self.tgt(f));
        self.hom(y, x).iter().copied().find(|&g| {
            self.compose(g, f) == self.identity(x) && self.compose(f, g) == self.identity(y)
        })
    }

    pub fn is_iso(&self, f: MorId) -> bool {
        self.inverse(f).is_some()
    }

    /// Whether every hom-set contains only identities (a discrete category).
    pub fn is_discrete(&self) -> bool {
        (0..self.morphisms.len()).all(|f| self.is_identity(f))
    }

    /// Discrete category on the given object names; identity of `x` is named `1_x`.
    pub fn discrete(objects: Vec<String>) -> FinCat {
        let morphisms = objects
            .iter()
            .enumerate()
            .map(|(i, o)| MorphismData {
                name: format!("1_{o}"),
                src: i,
                tgt: i,
            })
            .collect();
        let ids = (0..objects.len()).collect();
        FinCat::from_fn(objects, morphisms, ids, |g, _| g)
    }

    /// The total order `0 ≤ 1 ≤ … ≤ n-1` as a category. The morphism `i ≤ j`
    /// is named `i<=j` and identities `1_i`; morphisms are declared in
    /// `(src, tgt)` lexicographic order.
    pub fn chain(n: usize) -> FinCat {
        let objects: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let mut morphisms = Vec::new();
        let mut index = HashMap::new();
        let mut ids = vec![0; n];
        for i in 0..n {
            for j in i..n {
                let name = if i == j {
                    format!("1_{i}")
                } else {
                    format!("{i}<={j}")
                };
                if i == j {
                    ids[i] = morphisms.len();
                }
                index.insert((i, j), morphisms.len());
                morphisms.push(MorphismData {
                    name,
                    src: i,
                    tgt: j,
                });
            }
        }
        let ends: Vec<(usize, usize)> = morphisms.iter().map(|m| (m.src, m.tgt)).collect();
        FinCat::from_fn(objects, morphisms, ids, |g, f| index[&(ends[f].0, ends[g].1)])
    }

    /// One-object category of the cyclic group `Z/n`; morphism `k` is named `k`.
    pub fn cyclic_group(n: usize) -> FinCat {
        let morphisms = (0..n)
            .map(|k| MorphismData {
                name: k.to_string(),
                src: 0,
                tgt: 0,
            })
            .collect();
        FinCat::from_fn(vec!["*".into()], morphisms, vec![0], |g, f| (g + f) % n)
    }

    /// The terminal category: one object, one morphism.
    pub fn terminal() -> FinCat {
        FinCat::discrete(vec!["*".into()])
    }

    /// Replaces the composite `g∘f` without any checking; used to build
    /// deliberately broken tables for checker tests.
    pub fn with_composite_overridden(&self, g: MorId, f: MorId, gf: MorId) -> FinCat {
        let mut out = self.clone();
        let n = out.morphisms.len();
        out.comp[g * n + f] = Some(gf);
        out
    }
}

pub(crate) fn index_names<'a>(
    names: impl Iterator<Item = &'a str>,
) -> Result<HashMap<&'a str, usize>, StructureError> {
    let mut out = HashMap::new();
    for (i, n) in names.enumerate() {
        if out.insert(n, i).is_some() {
            return Err(StructureError::Malformed(format!("duplicate identifier {n}")));
        }
    }
    Ok(out)
}

/// A single violated category law with the identifiers that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawViolation {
    pub law: String,
    pub witness: Vec<String>,
}

/// Outcome of [`FinCat::validate`]; empty means the tables form a category.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryReport {
    pub violations: Vec<LawViolation>,
}

impl CategoryReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl FinCat {
    /// Checks identity typing, composite typing, unit laws and associativity
    /// over every composable pair and triple.
    pub fn validate(&self) -> CategoryReport {
        let mut violations = Vec::new();
        let name = |f: MorId| self.morphisms[f].name.clone();
        for (x, &i) in self.identities.iter().enumerate() {
            if self.src(i) != x || self.tgt(i) != x {
                violations.push(LawViolation {
                    law: "identity typing".into(),
                    witness: vec![self.objects[x].clone(), name(i)],
                });
            }
        }
        let triples = self.comp_triples();
        for &(g, f, gf) in &triples {
            if self.src(gf) != self.src(f) || self.tgt(gf) != self.tgt(g) {
                violations.push(LawViolation {
                    law: "source/target mismatch".into(),
                    witness: vec![name(g), name(f), name(gf)],
                });
            }
        }
        if !violations.is_empty() {
            return CategoryReport { violations };
        }
        for f in 0..self.morphisms.len() {
            if self.compose(self.identity(self.tgt(f)), f) != f {
                violations.push(LawViolation {
                    law: "left unit".into(),
                    witness: vec![name(f)],
                });
            }
            if self.compose(f, self.identity(self.src(f))) != f {
                violations.push(LawViolation {
                    law: "right unit".into(),
                    witness: vec![name(f)],
                });
            }
        }
        for &(g, f, gf) in &triples {
            for &h in &self.homs_from(self.tgt(g)) {
                let lhs = self.compose(h, gf);
                let rhs = self.compose(self.compose(h, g), f);
                if lhs != rhs {
                    violations.push(LawViolation {
                        law: "associativity".into(),
                        witness: vec![name(h), name(g), name(f)],
                    });
                }
            }
        }
        CategoryReport { violations }
    }

    fn homs_from(&self, x: ObjId) -> Vec<MorId> {
        (0..self.objects.len())
            .flat_map(|y| self.hom(x, y).iter().copied())
            .collect()
    }
}
