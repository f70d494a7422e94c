use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::category::CategoryDoc;
use super::{at, dense, index_of, keyed, mor, obj, FResult};
use crate::error::StructureError;
use crate::fincore::{product_category, FinCat, FinFunctor};
use crate::skew::{OneCell, SkewBicat, SkewMonCat};

/// The tensor as two tables: `[X, Y, X⊗Y]` and `[f, g, f⊗g]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorDoc {
    pub objects: Vec<(String, String, String)>,
    pub morphisms: Vec<(String, String, String)>,
}

/// A skew monoidal category on a finite category. Components are keyed by
/// object tuples: `alpha` holds `[X, Y, Z, α]`, `lambda` and `rho` hold
/// `[X, λ]` and `[X, ρ]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SkewMonCatDoc {
    pub category: CategoryDoc,
    pub unit: String,
    pub tensor: TensorDoc,
    pub alpha: Vec<(String, String, String, String)>,
    pub lambda: Vec<(String, String)>,
    pub rho: Vec<(String, String)>,
}

/// Reads a functor `a × b → c` from `[x, y, F(x, y)]` and `[f, g, F(f, g)]`.
fn binary_functor(
    a: &FinCat,
    b: &FinCat,
    c: &Arc<FinCat>,
    objects: &[(String, String, String)],
    morphisms: &[(String, String, String)],
    path: &str,
) -> FResult<FinFunctor> {
    let prod = Arc::new(product_category(a, b));
    let (nb, mb) = (b.num_objects(), b.num_morphisms());
    let op = format!("{path}.objects");
    let obj_map = dense(
        prod.num_objects(),
        objects.iter().enumerate().map(|(i, (x, y, z))| {
            let p = format!("{op}[{i}]");
            Ok((obj(a, x, &p)? * nb + obj(b, y, &p)?, obj(c, z, &p)?))
        }),
        &op,
        |k| format!("pair {}", prod.object_name(k)),
    )?;
    let mp = format!("{path}.morphisms");
    let mor_map = dense(
        prod.num_morphisms(),
        morphisms.iter().enumerate().map(|(i, (f, g, h))| {
            let p = format!("{mp}[{i}]");
            Ok((mor(a, f, &p)? * mb + mor(b, g, &p)?, mor(c, h, &p)?))
        }),
        &mp,
        |k| format!("pair {}", prod.morphism_name(k)),
    )?;
    Ok(FinFunctor {
        dom: prod,
        cod: c.clone(),
        obj_map,
        mor_map,
    })
}

fn binary_tables(f: &FinFunctor, a: &FinCat, b: &FinCat) -> (Vec<(String, String, String)>, Vec<(String, String, String)>) {
    let c = &f.cod;
    let (nb, mb) = (b.num_objects(), b.num_morphisms());
    let objects = (0..f.dom.num_objects())
        .map(|k| {
            (
                a.object_name(k / nb).to_string(),
                b.object_name(k % nb).to_string(),
                c.object_name(f.obj(k)).to_string(),
            )
        })
        .collect();
    let morphisms = (0..f.dom.num_morphisms())
        .map(|k| {
            (
                a.morphism_name(k / mb).to_string(),
                b.morphism_name(k % mb).to_string(),
                c.morphism_name(f.mor(k)).to_string(),
            )
        })
        .collect();
    (objects, morphisms)
}

impl SkewMonCatDoc {
    pub fn from_moncat(s: &SkewMonCat) -> Self {
        let c = &*s.base;
        let on = |x| c.object_name(x).to_string();
        let mn = |f| c.morphism_name(f).to_string();
        let n = c.num_objects();
        let (objects, morphisms) = binary_tables(&s.tensor, c, c);
        let mut alpha = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    alpha.push((on(x), on(y), on(z), mn(s.alpha_at(x, y, z))));
                }
            }
        }
        SkewMonCatDoc {
            category: CategoryDoc::from_cat(c),
            unit: on(s.unit),
            tensor: TensorDoc { objects, morphisms },
            alpha,
            lambda: (0..n).map(|x| (on(x), mn(s.lambda[x]))).collect(),
            rho: (0..n).map(|x| (on(x), mn(s.rho[x]))).collect(),
        }
    }

    /// The tables as a skew monoidal category; laws are not checked.
    pub fn to_moncat(&self) -> FResult<SkewMonCat> {
        let base = Arc::new(self.category.to_cat("$.category")?);
        let c = &*base;
        let n = c.num_objects();
        let unit = obj(c, &self.unit, "$.unit")?;
        let tensor = binary_functor(c, c, &base, &self.tensor.objects, &self.tensor.morphisms, "$.tensor")?;
        let alpha = dense(
            n * n * n,
            self.alpha.iter().enumerate().map(|(i, (x, y, z, m))| {
                let p = format!("$.alpha[{i}]");
                let k = (obj(c, x, &p)? * n + obj(c, y, &p)?) * n + obj(c, z, &p)?;
                Ok((k, mor(c, m, &p)?))
            }),
            "$.alpha",
            |k| {
                format!(
                    "triple ({}, {}, {})",
                    c.object_name(k / (n * n)),
                    c.object_name((k / n) % n),
                    c.object_name(k % n)
                )
            },
        )?;
        let unary = |entries: &[(String, String)], path: &str| {
            dense(
                n,
                entries.iter().enumerate().map(|(i, (x, m))| {
                    let p = format!("{path}[{i}]");
                    Ok((obj(c, x, &p)?, mor(c, m, &p)?))
                }),
                path,
                |x| format!("object {}", c.object_name(x)),
            )
        };
        let lambda = unary(&self.lambda, "$.lambda")?;
        let rho = unary(&self.rho, "$.rho")?;
        Ok(SkewMonCat {
            base,
            tensor,
            unit,
            alpha,
            lambda,
            rho,
        })
    }
}

/// The hom-category between two 0-cells.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomDoc {
    pub src: String,
    pub tgt: String,
    pub category: CategoryDoc,
}

/// Composition `hom(mid, tgt) × hom(src, mid) → hom(src, tgt)` as
/// `[g, f, gf]` and `[β, α, βα]` tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompDoc {
    pub src: String,
    pub mid: String,
    pub tgt: String,
    pub objects: Vec<(String, String, String)>,
    pub morphisms: Vec<(String, String, String)>,
}

/// A skew bicategory. 1-cells are named by their endpoints and an object of
/// the hom-category: `alpha` holds `[W, X, Y, Z, f, g, h, α]` for
/// `f: W→X, g: X→Y, h: Y→Z`; `lambda` and `rho` hold `[X, Y, f, 2-cell]`;
/// `units` holds `[X, j_X]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BicatDoc {
    pub cells0: Vec<String>,
    pub homs: Vec<HomDoc>,
    pub comp: Vec<CompDoc>,
    pub units: Vec<(String, String)>,
    pub alpha: Vec<(String, String, String, String, String, String, String, String)>,
    pub lambda: Vec<(String, String, String, String)>,
    pub rho: Vec<(String, String, String, String)>,
}

type UnitorEntry = (String, String, String, String);

impl BicatDoc {
    pub fn from_bicat(b: &SkewBicat) -> Self {
        let n = b.num_cells0();
        let c0 = |x: usize| b.cells0[x].clone();
        let o1 = |f: OneCell| b.hom(f.src, f.tgt).object_name(f.obj).to_string();
        let m2 = |x, y, m| b.hom(x, y).morphism_name(m).to_string();
        let mut homs = Vec::with_capacity(n * n);
        let mut comp = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                homs.push(HomDoc {
                    src: c0(x),
                    tgt: c0(y),
                    category: CategoryDoc::from_cat(b.hom(x, y)),
                });
                for z in 0..n {
                    let (objects, morphisms) = binary_tables(b.comp_functor(x, y, z), b.hom(y, z), b.hom(x, y));
                    comp.push(CompDoc {
                        src: c0(x),
                        mid: c0(y),
                        tgt: c0(z),
                        objects,
                        morphisms,
                    });
                }
            }
        }
        let alpha = b
            .composable_triples()
            .into_iter()
            .filter_map(|(f, g, h)| {
                let m = *b.alpha.get(&(f, g, h))?;
                Some((c0(f.src), c0(f.tgt), c0(g.tgt), c0(h.tgt), o1(f), o1(g), o1(h), m2(f.src, h.tgt, m)))
            })
            .collect();
        let unitor = |map: &std::collections::HashMap<OneCell, usize>| -> Vec<UnitorEntry> {
            b.all_one_cells()
                .into_iter()
                .filter_map(|f| Some((c0(f.src), c0(f.tgt), o1(f), m2(f.src, f.tgt, *map.get(&f)?))))
                .collect()
        };
        BicatDoc {
            cells0: b.cells0.clone(),
            homs,
            comp,
            units: (0..n).map(|x| (c0(x), o1(b.j(x)))).collect(),
            alpha,
            lambda: unitor(&b.lambda),
            rho: unitor(&b.rho),
        }
    }

    pub fn to_bicat(&self) -> FResult<SkewBicat> {
        self.to_bicat_at("$")
    }

    pub fn to_bicat_at(&self, path: &str) -> FResult<SkewBicat> {
        let cells0 = self.cells0.clone();
        let n = cells0.len();
        if let Some(i) = (0..n).find(|&i| cells0[..i].contains(&cells0[i])) {
            return Err(at(
                format!("{path}.cells0[{i}]"),
                StructureError::Malformed(format!("duplicate identifier {}", cells0[i])),
            ));
        }
        let cell = |name: &str, p: &str| index_of(&cells0, name, "0-cell", p);
        let hp = format!("{path}.homs");
        let homs: Vec<Arc<FinCat>> = dense(
            n * n,
            self.homs.iter().enumerate().map(|(i, h)| {
                let p = format!("{hp}[{i}]");
                let k = cell(&h.src, &p)? * n + cell(&h.tgt, &p)?;
                Ok((k, Arc::new(h.category.to_cat(&format!("{p}.category"))?)))
            }),
            &hp,
            |k| format!("hom({}, {})", cells0[k / n], cells0[k % n]),
        )?;
        let hom = |x: usize, y: usize| &homs[x * n + y];
        let cp = format!("{path}.comp");
        let comp = dense(
            n * n * n,
            self.comp.iter().enumerate().map(|(i, c)| {
                let p = format!("{cp}[{i}]");
                let (x, y, z) = (cell(&c.src, &p)?, cell(&c.mid, &p)?, cell(&c.tgt, &p)?);
                let f = binary_functor(hom(y, z), hom(x, y), hom(x, z), &c.objects, &c.morphisms, &p)?;
                Ok(((x * n + y) * n + z, f))
            }),
            &cp,
            |k| format!("composition {} → {} → {}", cells0[k / (n * n)], cells0[(k / n) % n], cells0[k % n]),
        )?;
        let one = |x: &str, y: &str, f: &str, p: &str| -> FResult<OneCell> {
            let (x, y) = (cell(x, p)?, cell(y, p)?);
            Ok(OneCell {
                src: x,
                tgt: y,
                obj: obj(hom(x, y), f, p)?,
            })
        };
        let up = format!("{path}.units");
        let units = dense(
            n,
            self.units.iter().enumerate().map(|(i, (x, j))| {
                let p = format!("{up}[{i}]");
                let x = cell(x, &p)?;
                Ok((x, obj(hom(x, x), j, &p)?))
            }),
            &up,
            |x| format!("0-cell {}", cells0[x]),
        )?;
        let ap = format!("{path}.alpha");
        let alpha = keyed(
            self.alpha.iter().enumerate().map(|(i, (w, x, y, z, f, g, h, m))| {
                let p = format!("{ap}[{i}]");
                let (f, g, h) = (one(w, x, f, &p)?, one(x, y, g, &p)?, one(y, z, h, &p)?);
                Ok(((f, g, h), mor(hom(f.src, h.tgt), m, &p)?))
            }),
            &ap,
        )?;
        let unitor = |entries: &[UnitorEntry], path: String| {
            keyed(
                entries.iter().enumerate().map(|(i, (x, y, f, m))| {
                    let p = format!("{path}[{i}]");
                    let f = one(x, y, f, &p)?;
                    Ok((f, mor(hom(f.src, f.tgt), m, &p)?))
                }),
                &path,
            )
        };
        let lambda = unitor(&self.lambda, format!("{path}.lambda"))?;
        let rho = unitor(&self.rho, format!("{path}.rho"))?;
        Ok(SkewBicat {
            cells0,
            homs,
            comp,
            units,
            alpha,
            lambda,
            rho,
        })
    }
}
