use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::category::CategoryDoc;
use super::{at, keyed, mor, obj, FResult};
use crate::error::StructureError;
use crate::fincore::{FinCat, FinSetObj};
use crate::fixtures::HomBundle;
use crate::profhom::FinProf;

type Cell = (String, String, Vec<String>);

/// A profunctor `dom ⇸ cod`. `values` holds `[b, a, elements]`; `left`
/// holds `[β, a, images]` for `β: b′ → b`, listing the image in `P(b′, a)`
/// of each element of `P(b, a)`; `right` holds `[α, b, images]` likewise
/// for `α: a → a′`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfDoc {
    pub dom: CategoryDoc,
    pub cod: CategoryDoc,
    pub values: Vec<Cell>,
    pub left: Vec<Cell>,
    pub right: Vec<Cell>,
}

impl ProfDoc {
    pub fn from_prof(p: &FinProf) -> Self {
        let (a, b) = (&*p.dom, &*p.cod);
        let (na, nb) = (a.num_objects(), b.num_objects());
        let names = |bb, aa, xs: &[usize]| xs.iter().map(|&x| p.name(bb, aa, x).to_string()).collect();
        let values = (0..nb * na)
            .map(|k| {
                let (bb, aa) = (k / na, k % na);
                (b.object_name(bb).into(), a.object_name(aa).into(), p.value(bb, aa).elements.clone())
            })
            .collect();
        let left = (0..b.num_morphisms())
            .flat_map(|m| {
                (0..na).map(move |aa| {
                    (b.morphism_name(m).into(), a.object_name(aa).into(), names(b.src(m), aa, &p.left[m][aa]))
                })
            })
            .collect();
        let right = (0..a.num_morphisms())
            .flat_map(|m| {
                (0..nb).map(move |bb| {
                    (a.morphism_name(m).into(), b.object_name(bb).into(), names(bb, a.tgt(m), &p.right[m][bb]))
                })
            })
            .collect();
        ProfDoc {
            dom: CategoryDoc::from_cat(a),
            cod: CategoryDoc::from_cat(b),
            values,
            left,
            right,
        }
    }

    pub fn to_prof(&self) -> FResult<FinProf> {
        self.to_prof_at("$")
    }

    /// The tables as a profunctor; functoriality of the actions is not
    /// checked.
    pub fn to_prof_at(&self, path: &str) -> FResult<FinProf> {
        let a = Arc::new(self.dom.to_cat(&format!("{path}.dom"))?);
        let b = Arc::new(self.cod.to_cat(&format!("{path}.cod"))?);
        let (na, nb) = (a.num_objects(), b.num_objects());
        let vp = format!("{path}.values");
        let cells = keyed(
            self.values.iter().enumerate().map(|(i, (bb, aa, xs))| {
                let p = format!("{vp}[{i}]");
                if let Some(j) = (0..xs.len()).find(|&j| xs[..j].contains(&xs[j])) {
                    return Err(at(p, StructureError::Malformed(format!("duplicate element {}", xs[j]))));
                }
                Ok(((obj(&b, bb, &p)?, obj(&a, aa, &p)?), FinSetObj::new(xs.clone())))
            }),
            &vp,
        )?;
        let values = (0..nb * na)
            .map(|k| {
                let (bb, aa) = (k / na, k % na);
                cells.get(&(bb, aa)).cloned().ok_or_else(|| {
                    at(
                        &vp,
                        StructureError::Malformed(format!(
                            "missing value at ({}, {})",
                            b.object_name(bb),
                            a.object_name(aa)
                        )),
                    )
                })
            })
            .collect::<FResult<Vec<_>>>()?;
        let value = |bb: usize, aa: usize| &values[bb * na + aa];
        let table = |from: &FinSetObj, to: &FinSetObj, imgs: &[String], p: &str| -> FResult<Vec<usize>> {
            if imgs.len() != from.len() {
                return Err(at(p, StructureError::Malformed(format!("{} images for {} elements", imgs.len(), from.len()))));
            }
            imgs.iter()
                .map(|y| {
                    to.elements
                        .iter()
                        .position(|e| e == y)
                        .ok_or_else(|| at(p, StructureError::Dangling(format!("element {y}"))))
                })
                .collect()
        };
        let lp = format!("{path}.left");
        let left_entries = keyed(
            self.left.iter().enumerate().map(|(i, (m, aa, imgs))| {
                let p = format!("{lp}[{i}]");
                let (m, aa) = (mor(&b, m, &p)?, obj(&a, aa, &p)?);
                Ok(((m, aa), table(value(b.tgt(m), aa), value(b.src(m), aa), imgs, &p)?))
            }),
            &lp,
        )?;
        let rp = format!("{path}.right");
        let right_entries = keyed(
            self.right.iter().enumerate().map(|(i, (m, bb, imgs))| {
                let p = format!("{rp}[{i}]");
                let (m, bb) = (mor(&a, m, &p)?, obj(&b, bb, &p)?);
                Ok(((m, bb), table(value(bb, a.src(m)), value(bb, a.tgt(m)), imgs, &p)?))
            }),
            &rp,
        )?;
        let assemble = |entries: &std::collections::HashMap<(usize, usize), Vec<usize>>,
                        c: &FinCat,
                        other: usize,
                        p: &str| {
            (0..c.num_morphisms())
                .map(|m| {
                    (0..other)
                        .map(|o| {
                            entries.get(&(m, o)).cloned().ok_or_else(|| {
                                at(p, StructureError::Malformed(format!("missing action of {}", c.morphism_name(m))))
                            })
                        })
                        .collect::<FResult<Vec<_>>>()
                })
                .collect::<FResult<Vec<_>>>()
        };
        let left = assemble(&left_entries, &b, na, &lp)?;
        let right = assemble(&right_entries, &a, nb, &rp)?;
        Ok(FinProf {
            dom: a,
            cod: b,
            values,
            left,
            right,
        })
    }
}

/// A base category with profunctor lists: `objects` are `A ⇸ B` over the
/// discrete `A` on the base objects, `endo` are `B ⇸ B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomBundleDoc {
    pub base: CategoryDoc,
    #[serde(default)]
    pub objects: Vec<ProfDoc>,
    #[serde(default)]
    pub endo: Vec<ProfDoc>,
}

impl HomBundleDoc {
    pub fn from_bundle(h: &HomBundle) -> Self {
        HomBundleDoc {
            base: CategoryDoc::from_cat(&h.base),
            objects: h.objects.iter().map(ProfDoc::from_prof).collect(),
            endo: h.endo.iter().map(ProfDoc::from_prof).collect(),
        }
    }

    pub fn to_bundle(&self) -> FResult<HomBundle> {
        let base = Arc::new(self.base.to_cat("$.base")?);
        let over = |docs: &[ProfDoc], field: &str, endo: bool| {
            docs.iter()
                .enumerate()
                .map(|(i, d)| {
                    let p = format!("$.{field}[{i}]");
                    let prof = d.to_prof_at(&p)?;
                    if *prof.cod != *base || (endo && *prof.dom != *base) {
                        return Err(at(p, StructureError::Precondition("profunctor is not over the base".into())));
                    }
                    let dom = if endo { base.clone() } else { prof.dom.clone() };
                    Ok(FinProf {
                        dom,
                        cod: base.clone(),
                        ..prof
                    })
                })
                .collect::<FResult<Vec<_>>>()
        };
        Ok(HomBundle {
            objects: over(&self.objects, "objects", false)?,
            endo: over(&self.endo, "endo", true)?,
            base,
        })
    }
}
