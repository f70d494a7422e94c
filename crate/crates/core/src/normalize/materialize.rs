use std::collections::HashMap;
use std::sync::Arc;

use super::diagrams::diagram_report;
use super::lazy::{ModMor, Normalization};
use super::modules::{enumerate_imodules, module_morphisms, unit_monad, IModule};
use crate::error::{Result, StructureError};
use crate::fincore::{FinCat, FinFunctor, MorId, MorphismData, ObjId};
use crate::report::{Report, Tally};
use crate::skew::{SkewMonCat, SkewMonoidal, TableMonoidalFunctor};

pub const DEFAULT_MODULE_BOUND: usize = 64;

/// The category of `I`-modules of a finite skew monoidal category as tables.
#[derive(Debug, Clone)]
pub struct NormalizationResult {
    pub source: Arc<SkewMonCat>,
    /// Object `i` of `mod_cat` is `modules[i]`.
    pub modules: Vec<IModule<ObjId, MorId>>,
    /// Morphism `k` of `mod_cat` is `(src module, tgt module, base morphism)`.
    pub morphisms: Vec<(usize, usize, MorId)>,
    pub mod_cat: Arc<SkewMonCat>,
    /// `q[i * n + j]: X_i ⊗ X_j → X_i ∧ X_j` in the source.
    pub q: Vec<MorId>,
    /// The forgetful functor, `U2 = q` and `U0 = 1`.
    pub u: TableMonoidalFunctor,
    pub diagrams: Report,
}

impl NormalizationResult {
    pub fn num_modules(&self) -> usize {
        self.modules.len()
    }

    pub fn module_index(&self, m: &IModule<ObjId, MorId>) -> Option<usize> {
        self.modules.iter().position(|x| x == m)
    }

    /// The action of the wedge `X_i ∧ X_j`, a morphism of the source.
    pub fn wedge_action(&self, i: usize, j: usize) -> MorId {
        self.modules[self.mod_cat.tensor_obj(i, j)].action
    }

    pub fn q_at(&self, i: usize, j: usize) -> MorId {
        self.q[i * self.num_modules() + j]
    }

    /// The morphism of `mod_cat` over base morphism `f` from module `i` to `j`.
    pub fn lift(&self, i: usize, j: usize, f: MorId) -> Option<MorId> {
        self.morphisms.iter().position(|&m| m == (i, j, f))
    }

    /// The diagram checks, the skew monoidal laws of `mod_cat`, its right
    /// normality and the monoidal functor laws of `U`.
    pub fn check(&self) -> Report {
        let mut r = Report::new("normalization");
        r.extend(self.diagrams.clone());
        r.extend(self.mod_cat.check());
        let mut t = Tally::new("normalize.right_normal", "ρ′ is invertible at every module").falsifying();
        for x in self.mod_cat.objects() {
            t.record(self.mod_cat.base.is_iso(self.mod_cat.rho[x]), || {
                vec![self.mod_cat.base.object_name(x).to_string()]
            });
        }
        r.push(t.finish());
        r.extend(self.u.check());
        r
    }
}

/// Builds the category of `I`-modules with the wedge tensor and `α′, λ′, ρ′`.
/// Fails with `Precondition` when a wedge coequalizer is missing or not
/// preserved, `BoundExceeded` past `bound` modules, and `Falsified` if a
/// construction the theory guarantees breaks.
pub fn normalize(c: &Arc<SkewMonCat>, bound: usize) -> Result<NormalizationResult> {
    let errs = c.structural_errors();
    if !errs.is_empty() {
        return Err(StructureError::Malformed(errs.join("; ")));
    }
    if !c.check().all_pass() {
        return Err(StructureError::Precondition("source is not skew monoidal".into()));
    }
    unit_monad(c)?;
    let modules = enumerate_imodules(&**c, &c.objects());
    if modules.len() > bound {
        return Err(StructureError::BoundExceeded(format!(
            "{} I-modules, bound {bound}",
            modules.len()
        )));
    }
    let lazy = Normalization::new((**c).clone(), modules.clone())?;
    let diagrams = diagram_report(&lazy);
    let n = modules.len();
    let index = |m: &IModule<ObjId, MorId>| {
        modules
            .iter()
            .position(|x| x == m)
            .ok_or_else(|| StructureError::Falsified(format!("{} is missing from the module list", lazy.obj_label(m))))
    };

    let mut morphisms = Vec::new();
    let mut identities = vec![0; n];
    for i in 0..n {
        for j in 0..n {
            for f in module_morphisms(&**c, &modules[i], &modules[j]) {
                if i == j && c.base.is_identity(f) {
                    identities[i] = morphisms.len();
                }
                morphisms.push((i, j, f));
            }
        }
    }
    let mor_index: HashMap<(usize, usize, MorId), usize> =
        morphisms.iter().enumerate().map(|(k, &m)| (m, k)).collect();
    let lift = |f: &ModMor<ObjId, MorId>| -> Result<MorId> {
        let key = (index(&f.src)?, index(&f.tgt)?, f.mor);
        mor_index
            .get(&key)
            .copied()
            .ok_or_else(|| StructureError::Falsified(format!("{} is not a module morphism", lazy.mor_label(f))))
    };
    let names: Vec<String> = modules.iter().map(|m| lazy.obj_label(m)).collect();
    let data: Vec<MorphismData> = morphisms
        .iter()
        .map(|&(i, j, f)| MorphismData {
            name: format!("{}[{i},{j}]", c.base.morphism_name(f)),
            src: i,
            tgt: j,
        })
        .collect();
    let base = Arc::new(FinCat::from_fn(names, data, identities, |g, f| {
        let ((_, k, g), (i, _, f)) = (morphisms[g], morphisms[f]);
        mor_index[&(i, k, c.base.compose(g, f))]
    }));

    let ms = |k: MorId| ModMor {
        src: modules[morphisms[k].0].clone(),
        tgt: modules[morphisms[k].1].clone(),
        mor: morphisms[k].2,
    };
    let mut tensor_obj = vec![0; n * n];
    let mut q = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            let w = lazy.try_wedge(&modules[i], &modules[j])?;
            tensor_obj[i * n + j] = index(&w.module)?;
            q[i * n + j] = w.q;
        }
    }
    let m = morphisms.len();
    let mut tensor_mor = vec![0; m * m];
    for f in 0..m {
        for g in 0..m {
            tensor_mor[f * m + g] = lift(&lazy.tensor_mor(&ms(f), &ms(g)))?;
        }
    }
    let mut alpha = vec![0; n * n * n];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                alpha[(x * n + y) * n + z] = lift(&lazy.alpha(&modules[x], &modules[y], &modules[z]))?;
            }
        }
    }
    let lambda = modules.iter().map(|x| lift(&lazy.lambda(x))).collect::<Result<Vec<_>>>()?;
    let rho = modules.iter().map(|x| lift(&lazy.rho(x))).collect::<Result<Vec<_>>>()?;
    let unit = index(&lazy.unit())?;
    let mod_cat = Arc::new(SkewMonCat::from_fns(
        base.clone(),
        |x, y| tensor_obj[x * n + y],
        |f, g| tensor_mor[f * m + g],
        unit,
        |x, y, z| alpha[(x * n + y) * n + z],
        |x| lambda[x],
        |x| rho[x],
    ));
    let u = TableMonoidalFunctor {
        dom: mod_cat.clone(),
        cod: c.clone(),
        functor: FinFunctor {
            dom: base,
            cod: c.base.clone(),
            obj_map: modules.iter().map(|x| x.carrier).collect(),
            mor_map: morphisms.iter().map(|&(_, _, f)| f).collect(),
        },
        f2: q.clone(),
        f0: c.base.identity(c.unit),
    };
    Ok(NormalizationResult {
        source: c.clone(),
        modules,
        morphisms,
        mod_cat,
        q,
        u,
        diagrams,
    })
}
