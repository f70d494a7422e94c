use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{at, dense, keyed, mor, obj, FResult};
use crate::error::StructureError;
use crate::fincore::{FinCat, FinFunctor, NatTrans};
use crate::mw::{Monad, MwMonad};

/// A finite category: names, `[name, src, tgt]` morphisms, `[object,
/// identity]` pairs and the composition table as `[g, f, g∘f]` triples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    pub objects: Vec<String>,
    pub morphisms: Vec<(String, String, String)>,
    pub identities: Vec<(String, String)>,
    pub comp: Vec<(String, String, String)>,
}

impl CategoryDoc {
    pub fn from_cat(c: &FinCat) -> Self {
        let on = |x| c.object_name(x).to_string();
        let mn = |f| c.morphism_name(f).to_string();
        CategoryDoc {
            objects: c.objects().to_vec(),
            morphisms: c
                .morphisms()
                .iter()
                .map(|m| (m.name.clone(), on(m.src), on(m.tgt)))
                .collect(),
            identities: (0..c.num_objects()).map(|x| (on(x), mn(c.identity(x)))).collect(),
            comp: c.comp_triples().into_iter().map(|(g, f, gf)| (mn(g), mn(f), mn(gf))).collect(),
        }
    }

    /// The tables as a category; laws are not checked.
    pub fn to_cat(&self, path: &str) -> FResult<FinCat> {
        let dangling = |field: &str, i: usize, what: &str, name: &str| {
            at(format!("{path}.{field}[{i}]"), StructureError::Dangling(format!("{what} {name}")))
        };
        let has_obj = |x: &String| self.objects.contains(x);
        let has_mor = |f: &String| self.morphisms.iter().any(|m| m.0 == *f);
        for (i, (_, s, t)) in self.morphisms.iter().enumerate() {
            if let Some(x) = [s, t].into_iter().find(|x| !has_obj(x)) {
                return Err(dangling("morphisms", i, "object", x));
            }
        }
        for (i, (x, f)) in self.identities.iter().enumerate() {
            if !has_obj(x) {
                return Err(dangling("identities", i, "object", x));
            }
            if !has_mor(f) {
                return Err(dangling("identities", i, "morphism", f));
            }
        }
        for (i, (g, f, gf)) in self.comp.iter().enumerate() {
            if let Some(m) = [g, f, gf].into_iter().find(|m| !has_mor(m)) {
                return Err(dangling("comp", i, "morphism", m));
            }
        }
        FinCat::from_names(&self.objects, &self.morphisms, &self.identities, &self.comp)
            .map_err(|e| at(path, e))
    }
}

/// The object and morphism assignments of a functor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDoc {
    pub objects: Vec<(String, String)>,
    pub morphisms: Vec<(String, String)>,
}

impl MapDoc {
    pub fn from_functor(f: &FinFunctor) -> Self {
        let (d, c) = (&f.dom, &f.cod);
        MapDoc {
            objects: (0..d.num_objects())
                .map(|x| (d.object_name(x).to_string(), c.object_name(f.obj(x)).to_string()))
                .collect(),
            morphisms: (0..d.num_morphisms())
                .map(|m| (d.morphism_name(m).to_string(), c.morphism_name(f.mor(m)).to_string()))
                .collect(),
        }
    }

    pub fn to_functor(&self, dom: &Arc<FinCat>, cod: &Arc<FinCat>, path: &str) -> FResult<FinFunctor> {
        let op = format!("{path}.objects");
        let obj_map = dense(
            dom.num_objects(),
            self.objects.iter().enumerate().map(|(i, (x, y))| {
                let p = format!("{op}[{i}]");
                Ok((obj(dom, x, &p)?, obj(cod, y, &p)?))
            }),
            &op,
            |x| format!("object {}", dom.object_name(x)),
        )?;
        let mp = format!("{path}.morphisms");
        let mor_map = dense(
            dom.num_morphisms(),
            self.morphisms.iter().enumerate().map(|(i, (f, g))| {
                let p = format!("{mp}[{i}]");
                Ok((mor(dom, f, &p)?, mor(cod, g, &p)?))
            }),
            &mp,
            |f| format!("morphism {}", dom.morphism_name(f)),
        )?;
        Ok(FinFunctor {
            dom: dom.clone(),
            cod: cod.clone(),
            obj_map,
            mor_map,
        })
    }
}

/// A functor with its domain and codomain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    pub dom: CategoryDoc,
    pub cod: CategoryDoc,
    #[serde(flatten)]
    pub map: MapDoc,
}

impl FunctorDoc {
    pub fn from_functor(f: &FinFunctor) -> Self {
        FunctorDoc {
            dom: CategoryDoc::from_cat(&f.dom),
            cod: CategoryDoc::from_cat(&f.cod),
            map: MapDoc::from_functor(f),
        }
    }

    pub fn to_functor(&self, path: &str) -> FResult<FinFunctor> {
        let dom = Arc::new(self.dom.to_cat(&format!("{path}.dom"))?);
        let cod = Arc::new(self.cod.to_cat(&format!("{path}.cod"))?);
        self.map.to_functor(&dom, &cod, path)
    }
}

/// A natural transformation: both functors and `[object, component]` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NatTransDoc {
    pub dom: FunctorDoc,
    pub cod: FunctorDoc,
    pub components: Vec<(String, String)>,
}

impl NatTransDoc {
    pub fn from_nat(t: &NatTrans) -> Self {
        NatTransDoc {
            dom: FunctorDoc::from_functor(&t.dom),
            cod: FunctorDoc::from_functor(&t.cod),
            components: components_doc(&t.dom.dom, &t.dom.cod, &t.components),
        }
    }

    pub fn to_nat(&self, path: &str) -> FResult<NatTrans> {
        let dom = self.dom.to_functor(&format!("{path}.dom"))?;
        let cod = self.cod.to_functor(&format!("{path}.cod"))?;
        if *dom.dom != *cod.dom || *dom.cod != *cod.cod {
            return Err(at(path, StructureError::Precondition("functors are not parallel".into())));
        }
        let components = components_table(&dom.dom, &dom.cod, &self.components, &format!("{path}.components"))?;
        Ok(NatTrans { dom, cod, components })
    }
}

fn components_doc(src: &FinCat, tgt: &FinCat, comps: &[usize]) -> Vec<(String, String)> {
    comps
        .iter()
        .enumerate()
        .map(|(x, &m)| (src.object_name(x).to_string(), tgt.morphism_name(m).to_string()))
        .collect()
}

fn components_table(src: &FinCat, tgt: &FinCat, entries: &[(String, String)], path: &str) -> FResult<Vec<usize>> {
    dense(
        src.num_objects(),
        entries.iter().enumerate().map(|(i, (x, m))| {
            let p = format!("{path}[{i}]");
            Ok((obj(src, x, &p)?, mor(tgt, m, &p)?))
        }),
        path,
        |x| format!("object {}", src.object_name(x)),
    )
}

/// A monad in ordinary form: the endofunctor's assignments and the
/// components of multiplication and unit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonadDoc {
    pub category: CategoryDoc,
    pub functor: MapDoc,
    pub mult: Vec<(String, String)>,
    pub unit: Vec<(String, String)>,
}

impl MonadDoc {
    pub fn from_monad(m: &Monad) -> Self {
        let c = &m.base;
        MonadDoc {
            category: CategoryDoc::from_cat(c),
            functor: MapDoc::from_functor(&m.d),
            mult: components_doc(c, c, &m.mult.components),
            unit: components_doc(c, c, &m.unit.components),
        }
    }

    pub fn to_monad(&self) -> FResult<Monad> {
        let c = Arc::new(self.category.to_cat("$.category")?);
        let d = self.functor.to_functor(&c, &c, "$.functor")?;
        let mult = components_table(&c, &c, &self.mult, "$.mult")?;
        let unit = components_table(&c, &c, &self.unit, "$.unit")?;
        Ok(Monad::new(d, mult, unit))
    }
}

/// A monad in no-iteration form: `D` on objects, `K` as `[X, K_X]` and `T`
/// as `[X, Y, f, Tf]` for every `f: X → DY`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MwMonadDoc {
    pub category: CategoryDoc,
    pub d: Vec<(String, String)>,
    pub k: Vec<(String, String)>,
    pub t: Vec<(String, String, String, String)>,
}

impl MwMonadDoc {
    pub fn from_mw(t: &MwMonad) -> Self {
        let c = &t.base;
        let n = c.num_objects();
        let on = |x| c.object_name(x).to_string();
        let mn = |f| c.morphism_name(f).to_string();
        let mut table = Vec::new();
        for x in 0..n {
            for y in 0..n {
                for (i, &f) in c.hom(x, t.d[y]).iter().enumerate() {
                    table.push((on(x), on(y), mn(f), mn(t.t[x * n + y][i])));
                }
            }
        }
        MwMonadDoc {
            category: CategoryDoc::from_cat(c),
            d: (0..n).map(|x| (on(x), on(t.d[x]))).collect(),
            k: (0..n).map(|x| (on(x), mn(t.k[x]))).collect(),
            t: table,
        }
    }

    pub fn to_mw(&self) -> FResult<MwMonad> {
        self.to_mw_at("$")
    }

    pub fn to_mw_at(&self, path: &str) -> FResult<MwMonad> {
        let c = Arc::new(self.category.to_cat(&format!("{path}.category"))?);
        let n = c.num_objects();
        let name = |x| format!("object {}", c.object_name(x));
        let dp = format!("{path}.d");
        let d = dense(
            n,
            self.d.iter().enumerate().map(|(i, (x, y))| {
                let p = format!("{dp}[{i}]");
                Ok((obj(&c, x, &p)?, obj(&c, y, &p)?))
            }),
            &dp,
            name,
        )?;
        let k = components_table(&c, &c, &self.k, &format!("{path}.k"))?;
        let tp = format!("{path}.t");
        let entries = keyed(
            self.t.iter().enumerate().map(|(i, (x, y, f, tf))| {
                let p = format!("{tp}[{i}]");
                let (x, y) = (obj(&c, x, &p)?, obj(&c, y, &p)?);
                let f = mor(&c, f, &p)?;
                if c.src(f) != x || c.tgt(f) != d[y] {
                    return Err(at(
                        &p,
                        StructureError::IllTyped {
                            name: c.morphism_name(f).into(),
                            detail: "argument of T must be X → DY".into(),
                        },
                    ));
                }
                Ok(((x, y, f), mor(&c, tf, &p)?))
            }),
            &tp,
        )?;
        let mut t = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let row = c
                    .hom(x, d[y])
                    .iter()
                    .map(|&f| {
                        entries.get(&(x, y, f)).copied().ok_or_else(|| {
                            at(
                                &tp,
                                StructureError::Malformed(format!("missing T of {}", c.morphism_name(f))),
                            )
                        })
                    })
                    .collect::<FResult<Vec<_>>>()?;
                t.push(row);
            }
        }
        Ok(MwMonad { base: c, d, k, t })
    }
}
