//! Backtracking search over finite domains.
//!
//! Variables are assigned in index order. A constraint lists the variables it
//! may read; it is re-evaluated whenever one of them is assigned and must
//! return `false` only when the partial assignment already violates it.

use rand::seq::SliceRandom;
use rand::Rng;

type Check<'a> = Box<dyn Fn(&[Option<usize>]) -> bool + 'a>;

pub struct Csp<'a> {
    domains: Vec<Vec<usize>>,
    checks: Vec<Check<'a>>,
    watchers: Vec<Vec<usize>>,
}

impl<'a> Csp<'a> {
    pub fn new(domains: Vec<Vec<usize>>) -> Self {
        let n = domains.len();
        Csp {
            domains,
            checks: Vec::new(),
            watchers: vec![Vec::new(); n],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.domains.len()
    }

    /// Adds a constraint reading (at most) `vars`.
    pub fn constrain(
        &mut self,
        vars: impl IntoIterator<Item = usize>,
        check: impl Fn(&[Option<usize>]) -> bool + 'a,
    ) {
        let id = self.checks.len();
        self.checks.push(Box::new(check));
        let mut vars: Vec<usize> = vars.into_iter().collect();
        vars.sort_unstable();
        vars.dedup();
        for v in vars {
            self.watchers[v].push(id);
        }
    }

    /// All solutions in lexicographic order of value indices, stopping after
    /// `limit` solutions if given.
    pub fn solve(&self, limit: Option<usize>) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let orders: Vec<Vec<usize>> = self.domains.clone();
        let mut assignment = vec![None; self.num_vars()];
        self.descend(0, &orders, &mut assignment, &mut out, limit);
        out
    }

    /// Up to `limit` solutions, trying values in a random order per variable.
    pub fn solve_random(&self, rng: &mut impl Rng, limit: usize) -> Vec<Vec<usize>> {
        let orders: Vec<Vec<usize>> = self
            .domains
            .iter()
            .map(|d| {
                let mut d = d.clone();
                d.shuffle(rng);
                d
            })
            .collect();
        let mut out = Vec::new();
        let mut assignment = vec![None; self.num_vars()];
        self.descend(0, &orders, &mut assignment, &mut out, Some(limit));
        out
    }

    fn descend(
        &self,
        var: usize,
        orders: &[Vec<usize>],
        assignment: &mut Vec<Option<usize>>,
        out: &mut Vec<Vec<usize>>,
        limit: Option<usize>,
    ) {
        if limit.is_some_and(|l| out.len() >= l) {
            return;
        }
        if var == self.num_vars() {
            out.push(assignment.iter().map(|v| v.unwrap()).collect());
            return;
        }
        for &value in &orders[var] {
            assignment[var] = Some(value);
            if self.watchers[var].iter().all(|&c| (self.checks[c])(assignment)) {
                self.descend(var + 1, orders, assignment, out, limit);
                if limit.is_some_and(|l| out.len() >= l) {
                    break;
                }
            }
        }
        assignment[var] = None;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn all_different_triples() {
        let mut csp = Csp::new(vec![vec![0, 1, 2]; 3]);
        for a in 0..3 {
            for b in a + 1..3 {
                csp.constrain([a, b], move |s| match (s[a], s[b]) {
                    (Some(x), Some(y)) => x != y,
                    _ => true,
                });
            }
        }
        let sols = csp.solve(None);
        assert_eq!(sols.len(), 6);
        assert_eq!(sols[0], vec![0, 1, 2]);
        assert_eq!(csp.solve(Some(2)).len(), 2);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let r = csp.solve_random(&mut rng, 1);
        assert_eq!(r.len(), 1);
        assert!(sols.contains(&r[0]));
    }

    #[test]
    fn empty_domain_has_no_solution() {
        let csp = Csp::new(vec![vec![0], vec![]]);
        assert!(csp.solve(None).is_empty());
        assert_eq!(Csp::new(vec![]).solve(None), vec![Vec::<usize>::new()]);
    }
}
