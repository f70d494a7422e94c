use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::category::MapDoc;
use super::skew::BicatDoc;
use super::{at, dense, index_of, keyed, mor, obj, FResult};
use crate::error::StructureError;
use crate::skew::{OneCell, SkewBicat};
use crate::warpings::{SkewWarping, WarpingAlgebra};

/// One extension functor, from `hom(src, ·)` to `hom(D src, ·)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionDoc {
    pub src: String,
    pub tgt: String,
    #[serde(flatten)]
    pub map: MapDoc,
}

/// A skew warping keyed by the ambient's names. A Kleisli 1-cell `f: X → Y`
/// is written `X, Y, f` with `f` an object of `hom(X, DY)`.
///
/// `t` has one functor `hom(X, DY) → hom(DX, DY)` per pair; `k` holds
/// `[X, K_X]`; `v` holds `[X, Y, Z, f, g, v_{f,g}]`; `kc` holds
/// `[X, Y, f, k_f]`; `v0` holds `[Y, v0_Y]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WarpingDoc {
    pub ambient: BicatDoc,
    pub d: Vec<(String, String)>,
    pub t: Vec<ExtensionDoc>,
    pub k: Vec<(String, String)>,
    pub v: Vec<(String, String, String, String, String, String)>,
    pub kc: Vec<(String, String, String, String)>,
    pub v0: Vec<(String, String)>,
}

impl WarpingDoc {
    pub fn from_warping(w: &SkewWarping) -> Self {
        let b = &*w.ambient;
        let n = w.num_cells0();
        let c0 = |x: usize| b.cells0[x].clone();
        let kl = |f: OneCell| b.hom(f.src, w.d[f.tgt]).object_name(f.obj).to_string();
        let m2 = |x, y, m| b.hom(x, y).morphism_name(m).to_string();
        let mut t = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                t.push(ExtensionDoc {
                    src: c0(x),
                    tgt: c0(y),
                    map: MapDoc::from_functor(w.t_functor(x, y)),
                });
            }
        }
        let cells = w.all_cells();
        let mut v = Vec::new();
        for &f in &cells {
            for &g in cells.iter().filter(|g| g.src == f.tgt) {
                if let Some(&m) = w.v.get(&(f, g)) {
                    v.push((c0(f.src), c0(f.tgt), c0(g.tgt), kl(f), kl(g), m2(w.d[f.src], w.d[g.tgt], m)));
                }
            }
        }
        let kc = cells
            .iter()
            .filter_map(|&f| Some((c0(f.src), c0(f.tgt), kl(f), m2(f.src, w.d[f.tgt], *w.kc.get(&f)?))))
            .collect();
        WarpingDoc {
            ambient: BicatDoc::from_bicat(b),
            d: (0..n).map(|x| (c0(x), c0(w.d[x]))).collect(),
            t,
            k: (0..n).map(|x| (c0(x), kl(w.kk(x)))).collect(),
            v,
            kc,
            v0: (0..n).map(|y| (c0(y), m2(w.d[y], w.d[y], w.v0[y]))).collect(),
        }
    }

    pub fn to_warping(&self) -> FResult<SkewWarping> {
        self.to_warping_at("$")
    }

    pub fn to_warping_at(&self, path: &str) -> FResult<SkewWarping> {
        let b: Arc<SkewBicat> = Arc::new(self.ambient.to_bicat_at(&format!("{path}.ambient"))?);
        let n = b.num_cells0();
        let cell = |name: &str, p: &str| index_of(&b.cells0, name, "0-cell", p);
        let name = |x: usize| format!("0-cell {}", b.cells0[x]);
        let dp = format!("{path}.d");
        let d = dense(
            n,
            self.d.iter().enumerate().map(|(i, (x, y))| {
                let p = format!("{dp}[{i}]");
                Ok((cell(x, &p)?, cell(y, &p)?))
            }),
            &dp,
            name,
        )?;
        let tp = format!("{path}.t");
        let t = dense(
            n * n,
            self.t.iter().enumerate().map(|(i, e)| {
                let p = format!("{tp}[{i}]");
                let (x, y) = (cell(&e.src, &p)?, cell(&e.tgt, &p)?);
                Ok((x * n + y, e.map.to_functor(b.hom(x, d[y]), b.hom(d[x], d[y]), &p)?))
            }),
            &tp,
            |k| format!("pair ({}, {})", b.cells0[k / n], b.cells0[k % n]),
        )?;
        let kleisli = |x: &str, y: &str, f: &str, p: &str| -> FResult<OneCell> {
            let (x, y) = (cell(x, p)?, cell(y, p)?);
            Ok(OneCell {
                src: x,
                tgt: y,
                obj: obj(b.hom(x, d[y]), f, p)?,
            })
        };
        let kp = format!("{path}.k");
        let k = dense(
            n,
            self.k.iter().enumerate().map(|(i, (x, kx))| {
                let p = format!("{kp}[{i}]");
                let f = kleisli(x, x, kx, &p)?;
                Ok((f.src, f.obj))
            }),
            &kp,
            name,
        )?;
        let vp = format!("{path}.v");
        let v = keyed(
            self.v.iter().enumerate().map(|(i, (x, y, z, f, g, m))| {
                let p = format!("{vp}[{i}]");
                let (f, g) = (kleisli(x, y, f, &p)?, kleisli(y, z, g, &p)?);
                Ok(((f, g), mor(b.hom(d[f.src], d[g.tgt]), m, &p)?))
            }),
            &vp,
        )?;
        let cp = format!("{path}.kc");
        let kc = keyed(
            self.kc.iter().enumerate().map(|(i, (x, y, f, m))| {
                let p = format!("{cp}[{i}]");
                let f = kleisli(x, y, f, &p)?;
                Ok((f, mor(b.hom(f.src, d[f.tgt]), m, &p)?))
            }),
            &cp,
        )?;
        let zp = format!("{path}.v0");
        let v0 = dense(
            n,
            self.v0.iter().enumerate().map(|(i, (y, m))| {
                let p = format!("{zp}[{i}]");
                let y = cell(y, &p)?;
                Ok((y, mor(b.hom(d[y], d[y]), m, &p)?))
            }),
            &zp,
            name,
        )?;
        Ok(SkewWarping {
            ambient: b,
            d,
            t,
            k,
            v,
            kc,
            v0,
        })
    }
}

/// An algebra for a warping: the carrier 0-cell, one functor
/// `hom(Y, A) → hom(DY, A)` per 0-cell, `ec` as `[X, Y, x, a, e_{a,x}]` with
/// `x` a Kleisli 1-cell and `a: Y → A`, and `e0` as `[Y, a, e0_a]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub warping: WarpingDoc,
    pub carrier: String,
    pub e: Vec<ExtensionDoc>,
    pub ec: Vec<(String, String, String, String, String)>,
    pub e0: Vec<(String, String, String)>,
}

impl AlgebraDoc {
    pub fn from_algebra(alg: &WarpingAlgebra) -> Self {
        let w = &*alg.warping;
        let b = &*w.ambient;
        let a0 = alg.carrier;
        let c0 = |x: usize| b.cells0[x].clone();
        let o1 = |f: OneCell| b.hom(f.src, f.tgt).object_name(f.obj).to_string();
        let m2 = |x, y, m| b.hom(x, y).morphism_name(m).to_string();
        let e = (0..w.num_cells0())
            .map(|y| ExtensionDoc {
                src: c0(y),
                tgt: c0(a0),
                map: MapDoc::from_functor(&alg.e[y]),
            })
            .collect();
        let arrows = alg.arrows();
        let mut ec = Vec::new();
        for x in w.all_cells() {
            for &a in arrows.iter().filter(|a| a.src == x.tgt) {
                if let Some(&m) = alg.ec.get(&(x, a)) {
                    ec.push((c0(x.src), c0(x.tgt), o1(w.under(x)), o1(a), m2(w.d[x.src], a0, m)));
                }
            }
        }
        let e0 = arrows
            .iter()
            .filter_map(|&a| Some((c0(a.src), o1(a), m2(a.src, a0, *alg.e0.get(&a)?))))
            .collect();
        AlgebraDoc {
            warping: WarpingDoc::from_warping(w),
            carrier: c0(a0),
            e,
            ec,
            e0,
        }
    }

    pub fn to_algebra(&self) -> FResult<WarpingAlgebra> {
        let w = Arc::new(self.warping.to_warping_at("$.warping")?);
        let b = &*w.ambient;
        let n = w.num_cells0();
        let cell = |name: &str, p: &str| index_of(&b.cells0, name, "0-cell", p);
        let a0 = cell(&self.carrier, "$.carrier")?;
        let e = dense(
            n,
            self.e.iter().enumerate().map(|(i, e)| {
                let p = format!("$.e[{i}]");
                let y = cell(&e.src, &p)?;
                if cell(&e.tgt, &p)? != a0 {
                    return Err(at(&p, StructureError::Malformed("target is not the carrier".into())));
                }
                Ok((y, e.map.to_functor(b.hom(y, a0), b.hom(w.d[y], a0), &p)?))
            }),
            "$.e",
            |y| format!("0-cell {}", b.cells0[y]),
        )?;
        let arrow = |y: &str, a: &str, p: &str| -> FResult<OneCell> {
            let y = cell(y, p)?;
            Ok(OneCell {
                src: y,
                tgt: a0,
                obj: obj(b.hom(y, a0), a, p)?,
            })
        };
        let ec = keyed(
            self.ec.iter().enumerate().map(|(i, (x0, y, x, a, m))| {
                let p = format!("$.ec[{i}]");
                let (x0, y0) = (cell(x0, &p)?, cell(y, &p)?);
                let x = OneCell {
                    src: x0,
                    tgt: y0,
                    obj: obj(b.hom(x0, w.d[y0]), x, &p)?,
                };
                Ok(((x, arrow(y, a, &p)?), mor(b.hom(w.d[x0], a0), m, &p)?))
            }),
            "$.ec",
        )?;
        let e0 = keyed(
            self.e0.iter().enumerate().map(|(i, (y, a, m))| {
                let p = format!("$.e0[{i}]");
                let a = arrow(y, a, &p)?;
                Ok((a, mor(b.hom(a.src, a0), m, &p)?))
            }),
            "$.e0",
        )?;
        Ok(WarpingAlgebra {
            warping: w,
            carrier: a0,
            e,
            ec,
            e0,
        })
    }
}
