use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

/// A finite set of named elements; elements are addressed by index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FinSetObj {
    pub elements: Vec<String>,
}

impl FinSetObj {
    pub fn new(elements: Vec<String>) -> Self {
        FinSetObj { elements }
    }

    pub fn of_size(n: usize) -> Self {
        FinSetObj {
            elements: (0..n).map(|i| i.to_string()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// A total function between finite sets, as an index table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FinSetMap {
    pub dom: FinSetObj,
    pub cod: FinSetObj,
    pub table: Vec<usize>,
}

impl FinSetMap {
    pub fn is_valid(&self) -> bool {
        self.table.len() == self.dom.len() && self.table.iter().all(|&y| y < self.cod.len())
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }
}

/// Quotient of `n` points by the equivalence relation generated by `pairs`.
///
/// Classes are numbered in order of their least member and each class is
/// named by that member. Returns `(class_of, representatives)`.
pub fn quotient_by_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> (Vec<usize>, Vec<usize>) {
    let mut uf = UnionFind::<usize>::new(n);
    for (a, b) in pairs {
        uf.union(a, b);
    }
    let mut class_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    let mut root_class = vec![usize::MAX; n];
    for x in 0..n {
        let r = uf.find(x);
        if root_class[r] == usize::MAX {
            root_class[r] = reps.len();
            reps.push(x);
        }
        class_of[x] = root_class[r];
    }
    (class_of, reps)
}

/// Coequalizer of a parallel pair of finite-set maps: the quotient of the
/// common codomain by the relation generated by `u(x) ~ v(x)`, together with
/// the canonical surjection.
pub fn coequalizer_finset(u: &FinSetMap, v: &FinSetMap) -> (FinSetObj, FinSetMap) {
    assert_eq!(u.dom, v.dom, "coequalizer of non-parallel maps");
    assert_eq!(u.cod, v.cod, "coequalizer of non-parallel maps");
    let (class_of, reps) = quotient_by_pairs(
        u.cod.len(),
        (0..u.dom.len()).map(|x| (u.apply(x), v.apply(x))),
    );
    let quotient = FinSetObj::new(reps.iter().map(|&r| u.cod.elements[r].clone()).collect());
    let q = FinSetMap {
        dom: u.cod.clone(),
        cod: quotient.clone(),
        table: class_of,
    };
    (quotient, q)
}
