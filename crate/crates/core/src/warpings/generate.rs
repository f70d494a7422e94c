//! Exhaustive and randomized generation of warpings and algebras.
//!
//! The discrete part (`D`, `T`, `K`, or the carrier and `E`) is enumerated
//! first; the 2-cell components are then found by constraint search in which
//! every naturality instance and the requested axioms are constraints.

use std::collections::HashMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use super::algebra::{AlgComponents, AlgKey, WarpingAlgebra};
use super::warping::{Components, Key, SkewWarping};
use crate::error::{Result, StructureError};
use crate::fincore::{enumerate_functors, FinFunctor, MorId};
use crate::search::Csp;
use crate::skew::{OneCell, SkewBicat, TwoCell};

/// Which laws generated data must satisfy, and whether its 2-cells must be
/// invertible. Naturality is always imposed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fill {
    /// `axioms[i]` imposes axiom `i + 1`.
    pub axioms: [bool; 5],
    pub invertible: bool,
}

impl Fill {
    /// Every axiom; 2-cells arbitrary.
    pub const SKEW: Fill = Fill {
        axioms: [true; 5],
        invertible: false,
    };
    /// No axioms; 2-cells arbitrary.
    pub const NATURAL: Fill = Fill {
        axioms: [false; 5],
        invertible: false,
    };
    /// The first two axioms with invertible 2-cells.
    pub const FIRST_TWO_INVERTIBLE: Fill = Fill {
        axioms: [true, true, false, false, false],
        invertible: true,
    };

    fn imposes(&self, law_index: usize) -> bool {
        // law indices 0 and 1 are naturality
        law_index < 2 || self.axioms[law_index - 2]
    }
}

/// Every choice of `D`, `T` and `K` on `b`, as warpings with empty 2-cell
/// tables. Errors if more than `limit` shapes exist.
pub fn warping_shapes(b: &Arc<SkewBicat>, limit: usize) -> Result<Vec<SkewWarping>> {
    let n = b.num_cells0();
    let too_many = || StructureError::BoundExceeded(format!("more than {limit} warping shapes"));
    let maps = n.checked_pow(n as u32).filter(|&m| m <= limit).ok_or_else(too_many)?;
    let mut out = Vec::new();
    for code in 0..maps {
        let d: Vec<usize> = (0..n).map(|i| code / n.pow((n - 1 - i) as u32) % n).collect();
        let mut per_pair: Vec<Vec<FinFunctor>> = Vec::with_capacity(n * n);
        for p in 0..n * n {
            let (x, y) = (p / n, p % n);
            let fs = enumerate_functors(b.hom(x, d[y]), b.hom(d[x], d[y]), limit).ok_or_else(too_many)?;
            per_pair.push(fs);
        }
        let ks: Vec<usize> = (0..n).map(|x| b.hom(x, d[x]).num_objects()).collect();
        let mut choice = vec![0usize; n * n + n];
        let radix: Vec<usize> = per_pair.iter().map(Vec::len).chain(ks.iter().copied()).collect();
        if radix.contains(&0) {
            continue;
        }
        loop {
            if out.len() >= limit {
                return Err(too_many());
            }
            out.push(SkewWarping {
                ambient: b.clone(),
                d: d.clone(),
                t: (0..n * n).map(|p| per_pair[p][choice[p]].clone()).collect(),
                k: choice[n * n..].to_vec(),
                v: HashMap::new(),
                kc: HashMap::new(),
                v0: Vec::new(),
            });
            // odometer, last position fastest
            let mut i = choice.len();
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                choice[i] += 1;
                if choice[i] < radix[i] {
                    break;
                }
                choice[i] = 0;
            }
            if choice.iter().all(|&c| c == 0) {
                break;
            }
        }
    }
    Ok(out)
}

struct Assignment<'s, 'i, K> {
    values: &'s [Option<usize>],
    index: &'i HashMap<K, usize>,
}

impl<K: std::hash::Hash + Eq> Assignment<'_, '_, K> {
    fn get(&self, key: &K) -> Option<usize> {
        self.index.get(key).and_then(|&i| self.values[i])
    }
}

impl Components for Assignment<'_, '_, Key> {
    fn v(&self, f: OneCell, g: OneCell) -> Option<MorId> {
        self.get(&Key::V(f, g))
    }

    fn k(&self, f: OneCell) -> Option<MorId> {
        self.get(&Key::K(f))
    }

    fn v0(&self, y: usize) -> Option<MorId> {
        self.get(&Key::V0(y))
    }
}

impl AlgComponents for Assignment<'_, '_, AlgKey> {
    fn e(&self, x: OneCell, a: OneCell) -> Option<MorId> {
        self.get(&AlgKey::E(x, a))
    }

    fn e0(&self, a: OneCell) -> Option<MorId> {
        self.get(&AlgKey::E0(a))
    }
}

/// Component keys of a shape with their admissible 2-cells, or `None` if
/// some component has no candidate.
fn warping_domains(shape: &SkewWarping, invertible: bool) -> Option<(Vec<Key>, Vec<Vec<usize>>)> {
    let b = &*shape.ambient;
    let n = shape.num_cells0();
    let mut keys = Vec::new();
    let mut domains = Vec::new();
    let mut push = |key: Key, src: OneCell, tgt: OneCell| {
        let cands: Vec<usize> = b
            .two_cells(src, tgt)
            .into_iter()
            .filter(|&a| !invertible || b.is_iso2(a))
            .map(|a| a.mor)
            .collect();
        keys.push(key);
        let empty = cands.is_empty();
        domains.push(cands);
        !empty
    };
    for y in 0..n {
        if !push(Key::V0(y), shape.t1(shape.kk(y)), b.j(shape.d[y])) {
            return None;
        }
    }
    let cells = shape.all_cells();
    for &f in &cells {
        if !push(Key::K(f), shape.under(f), b.m1(shape.t1(f), shape.kb(f.src))) {
            return None;
        }
    }
    for &f in &cells {
        for g in cells.iter().copied().filter(|g| g.src == f.tgt) {
            let src = shape.t1(shape.bind(g, f));
            if !push(Key::V(f, g), src, b.m1(shape.t1(g), shape.t1(f))) {
                return None;
            }
        }
    }
    Some((keys, domains))
}

enum Mode<'r, R> {
    All(Option<usize>),
    Random(&'r mut R, usize),
}

fn fill_warping_with<R: Rng>(shape: &SkewWarping, fill: Fill, mode: Mode<'_, R>) -> Vec<SkewWarping> {
    let Some((keys, domains)) = warping_domains(shape, fill.invertible) else {
        return Vec::new();
    };
    let index: HashMap<Key, usize> = keys.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let mut csp = Csp::new(domains);
    for law in shape.laws() {
        if !fill.imposes(law.index()) {
            continue;
        }
        let vars: Vec<usize> = shape.keys(law).iter().map(|k| index[k]).collect();
        let index = &index;
        csp.constrain(vars, move |s| {
            shape
                .eval(law, &Assignment { values: s, index })
                .unwrap_or(true)
        });
    }
    let sols = match mode {
        Mode::All(limit) => csp.solve(limit),
        Mode::Random(rng, limit) => csp.solve_random(rng, limit),
    };
    sols.into_iter()
        .map(|sol| {
            let mut w = shape.clone();
            w.v0 = vec![0; shape.num_cells0()];
            for (key, value) in keys.iter().zip(sol) {
                match *key {
                    Key::V(f, g) => {
                        w.v.insert((f, g), value);
                    }
                    Key::K(f) => {
                        w.kc.insert(f, value);
                    }
                    Key::V0(y) => w.v0[y] = value,
                }
            }
            w
        })
        .collect()
}

/// Every filling of a shape's 2-cell tables, in search order.
pub fn fill_warping(shape: &SkewWarping, fill: Fill, limit: Option<usize>) -> Vec<SkewWarping> {
    fill_warping_with::<rand_chacha::ChaCha8Rng>(shape, fill, Mode::All(limit))
}

/// Every warping on `b` satisfying `fill`.
pub fn enumerate_warpings(b: &Arc<SkewBicat>, fill: Fill, limit: usize) -> Result<Vec<SkewWarping>> {
    let mut out = Vec::new();
    for shape in warping_shapes(b, limit)? {
        out.extend(fill_warping(&shape, fill, Some(limit + 1 - out.len())));
        if out.len() > limit {
            return Err(StructureError::BoundExceeded(format!("more than {limit} warpings")));
        }
    }
    Ok(out)
}

/// A random warping on `b` satisfying `fill`: shapes are tried in random
/// order, 2-cells in random order within each shape.
pub fn random_warping(b: &Arc<SkewBicat>, fill: Fill, rng: &mut impl Rng, limit: usize) -> Result<Option<SkewWarping>> {
    let mut shapes = warping_shapes(b, limit)?;
    shapes.shuffle(rng);
    for shape in &shapes {
        if let Some(w) = fill_warping_with(shape, fill, Mode::Random(rng, 1)).pop() {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Every choice of carrier and `E` for algebras of `w`.
pub fn algebra_shapes(w: &Arc<SkewWarping>, limit: usize) -> Result<Vec<WarpingAlgebra>> {
    let b = &*w.ambient;
    let n = w.num_cells0();
    let too_many = || StructureError::BoundExceeded(format!("more than {limit} algebra shapes"));
    let mut out = Vec::new();
    for a0 in 0..n {
        let mut per_x = Vec::with_capacity(n);
        for x in 0..n {
            per_x.push(enumerate_functors(b.hom(x, a0), b.hom(w.d[x], a0), limit).ok_or_else(too_many)?);
        }
        if per_x.iter().any(Vec::is_empty) {
            continue;
        }
        let mut choice = vec![0usize; n];
        loop {
            if out.len() >= limit {
                return Err(too_many());
            }
            out.push(WarpingAlgebra {
                warping: w.clone(),
                carrier: a0,
                e: (0..n).map(|x| per_x[x][choice[x]].clone()).collect(),
                ec: HashMap::new(),
                e0: HashMap::new(),
            });
            let mut i = n;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                choice[i] += 1;
                if choice[i] < per_x[i].len() {
                    break;
                }
                choice[i] = 0;
            }
            if choice.iter().all(|&c| c == 0) {
                break;
            }
        }
    }
    Ok(out)
}

fn algebra_domains(shape: &WarpingAlgebra, invertible: bool) -> Option<(Vec<AlgKey>, Vec<Vec<usize>>)> {
    let w = &*shape.warping;
    let b = &*w.ambient;
    let mut keys = Vec::new();
    let mut domains = Vec::new();
    let mut push = |key: AlgKey, src: OneCell, tgt: OneCell| {
        let cands: Vec<usize> = b
            .two_cells(src, tgt)
            .into_iter()
            .filter(|&a: &TwoCell| !invertible || b.is_iso2(a))
            .map(|a| a.mor)
            .collect();
        keys.push(key);
        let empty = cands.is_empty();
        domains.push(cands);
        !empty
    };
    let arrows = shape.arrows();
    for &a in &arrows {
        if !push(AlgKey::E0(a), a, b.m1(shape.e1(a), w.kb(a.src))) {
            return None;
        }
    }
    for &a in &arrows {
        for x in w.all_cells().into_iter().filter(|x| x.tgt == a.src) {
            let src = shape.e1(shape.act(a, x));
            if !push(AlgKey::E(x, a), src, b.m1(shape.e1(a), w.t1(x))) {
                return None;
            }
        }
    }
    Some((keys, domains))
}

fn fill_algebra_with<R: Rng>(shape: &WarpingAlgebra, fill: Fill, mode: Mode<'_, R>) -> Vec<WarpingAlgebra> {
    let Some((keys, domains)) = algebra_domains(shape, fill.invertible) else {
        return Vec::new();
    };
    let index: HashMap<AlgKey, usize> = keys.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let mut csp = Csp::new(domains);
    for law in shape.laws() {
        if !fill.imposes(law.index()) {
            continue;
        }
        let vars: Vec<usize> = shape.keys(law).iter().map(|k| index[k]).collect();
        let index = &index;
        csp.constrain(vars, move |s| {
            shape
                .eval(law, &Assignment { values: s, index })
                .unwrap_or(true)
        });
    }
    let sols = match mode {
        Mode::All(limit) => csp.solve(limit),
        Mode::Random(rng, limit) => csp.solve_random(rng, limit),
    };
    sols.into_iter()
        .map(|sol| {
            let mut a = shape.clone();
            for (key, value) in keys.iter().zip(sol) {
                match *key {
                    AlgKey::E(x, arr) => {
                        a.ec.insert((x, arr), value);
                    }
                    AlgKey::E0(arr) => {
                        a.e0.insert(arr, value);
                    }
                }
            }
            a
        })
        .collect()
}

/// Every algebra for `w` satisfying `fill`; only the first three entries
/// of `fill.axioms` are read.
pub fn enumerate_algebras(w: &Arc<SkewWarping>, fill: Fill, limit: usize) -> Result<Vec<WarpingAlgebra>> {
    let mut out = Vec::new();
    for shape in algebra_shapes(w, limit)? {
        out.extend(fill_algebra_with::<rand_chacha::ChaCha8Rng>(&shape, fill, Mode::All(Some(limit + 1 - out.len()))));
        if out.len() > limit {
            return Err(StructureError::BoundExceeded(format!("more than {limit} algebras")));
        }
    }
    Ok(out)
}

/// A random algebra for `w` satisfying `fill`.
pub fn random_algebra(
    w: &Arc<SkewWarping>,
    fill: Fill,
    rng: &mut impl Rng,
    limit: usize,
) -> Result<Option<WarpingAlgebra>> {
    let mut shapes = algebra_shapes(w, limit)?;
    shapes.shuffle(rng);
    for shape in &shapes {
        if let Some(a) = fill_algebra_with(shape, fill, Mode::Random(rng, 1)).pop() {
            return Ok(Some(a));
        }
    }
    Ok(None)
}
