//! Randomized searches for complements: conjugates of a fixed subalgebra, and
//! torus-stable subalgebras built from root spaces.

use serde::Serialize;

use crate::error::Result;
use crate::lie::{centralizer_basis, jordan_nilpotent, AlgebraKind, SubalgebraBasis};
use crate::partitions::{orbit_dim, Partition};
use crate::ratlin::{rat, RatMatrix, Rational, SeededRng};
use crate::strange::pair::ab_from_bases;

/// A random integer matrix with nonzero determinant, with its inverse.
pub fn random_invertible(n: usize, height: u64, rng: &mut SeededRng) -> (RatMatrix, RatMatrix) {
    loop {
        let entries = (0..n * n).map(|_| rat(rng.int_in(height))).collect();
        let g = RatMatrix::from_entries(n, n, entries).expect("n^2 entries");
        if let Some(inv) = g.inverse() {
            return (g, inv);
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchHit {
    /// `g^{-1} h0 g`, a complement to the centralizer of the Jordan matrix.
    pub h: SubalgebraBasis,
    pub g: RatMatrix,
    /// One-based number of the successful trial.
    pub trials_used: usize,
}

/// Tries `g^{-1} h0 g` for random invertible `g` until one meets the
/// centralizer of `jordan_nilpotent(lambda)` trivially. Conjugating `h0` by
/// `g^{-1}` is the same test as conjugating `e` by `g`.
pub fn random_conjugate_search(
    lambda: &Partition,
    h0: &SubalgebraBasis,
    trials: usize,
    height: u64,
    rng: &SeededRng,
) -> Result<Option<SearchHit>> {
    let kind = h0.kind();
    if lambda.n() != kind.n || h0.dim() != orbit_dim(lambda) {
        return Ok(None);
    }
    let stab = centralizer_basis(&jordan_nilpotent(lambda), kind)?;
    for t in 0..trials {
        let mut r = rng.fork(t as u64);
        let (g, g_inv) = random_invertible(kind.n, height, &mut r);
        let h = h0.conjugate(&g_inv, &g);
        if ab_from_bases(kind.dim(), &stab, &h) == (0, 0) {
            return Ok(Some(SearchHit {
                h,
                g,
                trials_used: t + 1,
            }));
        }
    }
    Ok(None)
}

/// `h = t' ⊕ span{e_ij : (i,j) positive, not removed} ⊕ g_{-alpha}`, where
/// `t'` is a torus of `sl_n` containing the coroot of `alpha` when both root
/// spaces `±alpha` are present. Indices are 0-based; `alpha = a` is the simple
/// root `(a, a+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootCandidate {
    pub alpha: usize,
    pub removed: Vec<(usize, usize)>,
    pub torus_dim: usize,
}

fn positive_roots(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

impl RootCandidate {
    fn keeps(&self, root: (usize, usize)) -> bool {
        !self.removed.contains(&root)
    }

    /// Closure of the root part under brackets, checked on root indices.
    fn roots_closed(&self, n: usize) -> bool {
        let kept: Vec<(usize, usize)> = positive_roots(n).into_iter().filter(|&r| self.keeps(r)).collect();
        for &(i, j) in &kept {
            for &(k, l) in &kept {
                if j == k && !self.keeps((i, l)) {
                    return false;
                }
            }
        }
        let a = self.alpha;
        // [e_{a+1,a}, e_{ij}] involves e_{a+1,j} (when i = a) and e_{i,a} (when j = a+1).
        for &(i, j) in &kept {
            if i == a && j != a + 1 && !self.keeps((a + 1, j)) {
                return false;
            }
            if j == a + 1 && i != a && !self.keeps((i, a)) {
                return false;
            }
        }
        true
    }

    fn needs_coroot(&self) -> bool {
        self.keeps((self.alpha, self.alpha + 1))
    }

    /// Draws the torus part at random and returns the subalgebra, or `None`
    /// if the draw is degenerate.
    pub fn build(&self, n: usize, height: u64, rng: &mut SeededRng) -> Option<SubalgebraBasis> {
        let kind = AlgebraKind::sl(n);
        let mut mats = Vec::new();
        if self.needs_coroot() {
            mats.push(&RatMatrix::unit(n, self.alpha, self.alpha) - &RatMatrix::unit(n, self.alpha + 1, self.alpha + 1));
        }
        while mats.len() < self.torus_dim {
            let mut diag: Vec<Rational> = (0..n).map(|_| rat(rng.int_in(height))).collect();
            let tr: Rational = diag.iter().sum();
            diag[n - 1] -= tr;
            mats.push(RatMatrix::diagonal(&diag));
        }
        mats.truncate(self.torus_dim);
        for (i, j) in positive_roots(n) {
            if self.keeps((i, j)) {
                mats.push(RatMatrix::unit(n, i, j));
            }
        }
        mats.push(RatMatrix::unit(n, self.alpha + 1, self.alpha));
        SubalgebraBasis::new(kind, mats).ok()
    }
}

/// Candidates of total dimension `dim` in `sl_n`, removing at most
/// `max_removed` positive roots, ordered by the number removed, then `alpha`,
/// then the removed set.
pub fn root_candidates(n: usize, dim: usize, max_removed: usize) -> Vec<RootCandidate> {
    let roots = positive_roots(n);
    let npos = roots.len();
    let mut out = Vec::new();
    for r in 0..=max_removed.min(npos) {
        // dim = torus + (npos - r) + 1
        let Some(torus_dim) = (dim + r).checked_sub(npos + 1) else {
            continue;
        };
        if torus_dim > n - 1 {
            continue;
        }
        let mut subsets = Vec::new();
        choose(&roots, r, 0, &mut Vec::new(), &mut subsets);
        for alpha in 0..n - 1 {
            for removed in &subsets {
                let c = RootCandidate {
                    alpha,
                    removed: removed.clone(),
                    torus_dim,
                };
                if (!c.needs_coroot() || torus_dim >= 1) && c.roots_closed(n) {
                    out.push(c);
                }
            }
        }
    }
    out
}

fn choose(
    items: &[(usize, usize)],
    r: usize,
    start: usize,
    cur: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if cur.len() == r {
        out.push(cur.clone());
        return;
    }
    for i in start..items.len() {
        cur.push(items[i]);
        choose(items, r, i + 1, cur, out);
        cur.pop();
    }
}

#[derive(Clone, Debug)]
pub struct RootSearchHit {
    pub candidate: RootCandidate,
    /// The unconjugated candidate subalgebra.
    pub base: SubalgebraBasis,
    pub hit: SearchHit,
}

/// Tries each candidate with `per_candidate` conjugation trials, drawing a
/// fresh torus per candidate, until `budget` trials are spent.
pub fn root_subalgebra_search(
    lambda: &Partition,
    max_removed: usize,
    per_candidate: usize,
    budget: usize,
    height: u64,
    rng: &SeededRng,
) -> Result<Option<RootSearchHit>> {
    let n = lambda.n();
    let mut spent = 0;
    for (ci, candidate) in root_candidates(n, orbit_dim(lambda), max_removed).into_iter().enumerate() {
        if spent >= budget {
            break;
        }
        let mut r = rng.fork_path(&[ci as u64, 0]);
        let Some(base) = candidate.build(n, height, &mut r) else {
            continue;
        };
        if !base.is_closed() {
            continue;
        }
        let trials = per_candidate.min(budget - spent);
        let found = random_conjugate_search(lambda, &base, trials, height, &rng.fork_path(&[ci as u64, 1]))?;
        spent += trials;
        if let Some(mut hit) = found {
            hit.trials_used += spent - trials;
            return Ok(Some(RootSearchHit { candidate, base, hit }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seaweed::{levi_composition, seaweed_basis, SeaweedSpec};
    use crate::lie::Family;
    use std::collections::BTreeSet;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn dim_mismatch_returns_none() {
        let h = seaweed_basis(&SeaweedSpec::borel(4), Family::Sl).unwrap();
        let hit = random_conjugate_search(&p("2,2"), &h, 50, 10, &SeededRng::new(1)).unwrap();
        assert!(hit.is_none());
    }

    #[test]
    fn minimal_frobenius_parabolic_for_321() {
        let a: BTreeSet<usize> = [2, 5].into_iter().collect();
        let comp = levi_composition(&a, 6).unwrap();
        let h = seaweed_basis(&SeaweedSpec::parabolic(comp), Family::Sl).unwrap();
        assert_eq!(h.dim(), 22);
        let hit = random_conjugate_search(&p("3,2,1"), &h, 200, 10, &SeededRng::new(1))
            .unwrap()
            .expect("a complement is found");
        assert!(hit.trials_used <= 200);
        assert!(hit.h.is_closed());
    }

    #[test]
    fn root_candidates_are_closed() {
        for c in root_candidates(5, 14, 1) {
            let b = c.build(5, 10, &mut SeededRng::new(4)).unwrap();
            assert_eq!(b.dim(), 14);
            assert!(b.is_closed(), "{c:?}");
        }
    }

    #[test]
    fn hook_orbits_found_by_root_search() {
        for lambda in ["3,1,1", "3,1,1,1"] {
            let lambda = p(lambda);
            let hit = root_subalgebra_search(&lambda, 2, 4, 400, 10, &SeededRng::new(1))
                .unwrap()
                .expect("found");
            assert_eq!(hit.hit.h.dim(), orbit_dim(&lambda));
        }
    }
}
