use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{LieError, Result};
use crate::exactlin::{int, Rational};
use crate::liecore::{classify_element, Element, ElementKind, LieAlgebra, Subspace};

pub const DEFAULT_BUDGET: usize = 10_000;
pub const SEED_VAR: &str = "LIEEMBED_SEED";

/// Budget and seed for the element searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub budget: usize,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: DEFAULT_BUDGET, seed: 0 }
    }
}

impl SearchConfig {
    /// Default budget, seed taken from `LIEEMBED_SEED` when set.
    pub fn from_env() -> Self {
        let seed = std::env::var(SEED_VAR).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(0);
        SearchConfig { seed, ..Default::default() }
    }
}

const PAIR_COEFFS: [i64; 4] = [1, -1, 2, -2];
const DIGITS: [i64; 5] = [0, 1, -1, 2, -2];

/// Candidate elements of a subspace in a fixed order: basis vectors, then
/// `b_i + c b_j`, then all combinations with coefficients in `-2..=2`, then
/// seeded random rational combinations. At most `cfg.budget` are produced.
pub fn candidates(space: &Subspace, cfg: SearchConfig) -> impl Iterator<Item = Element> + '_ {
    let basis = space.basis();
    let n = space.ambient();
    let k = basis.len();
    let comb = move |c: &[Rational]| Element::lin_comb(n, &c.iter().cloned().zip(basis.iter()).collect::<Vec<_>>());
    let singles = basis.iter().cloned();
    let pairs = (0..k).flat_map(move |i| {
        (i + 1..k).flat_map(move |j| PAIR_COEFFS.iter().map(move |&c| basis[i].axpy(&int(c), &basis[j])))
    });
    // odometer over DIGITS^k, skipping vectors with fewer than three nonzeros
    let grid = {
        let mut idx = vec![0usize; k];
        let mut done = k == 0;
        std::iter::from_fn(move || loop {
            if done {
                return None;
            }
            let mut p = 0;
            loop {
                if p == k {
                    done = true;
                    break;
                }
                idx[p] += 1;
                if idx[p] < DIGITS.len() {
                    break;
                }
                idx[p] = 0;
                p += 1;
            }
            if done {
                return None;
            }
            if idx.iter().filter(|&&i| i != 0).count() >= 3 {
                let c: Vec<Rational> = idx.iter().map(|&i| int(DIGITS[i])).collect();
                return Some(comb(&c));
            }
        })
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let random = std::iter::from_fn(move || {
        if k == 0 {
            return None;
        }
        let c: Vec<Rational> = (0..k)
            .map(|_| Rational::new(BigInt::from(rng.gen_range(-9i64..=9)), BigInt::from(rng.gen_range(1i64..=5))))
            .collect();
        Some(comb(&c))
    });
    singles.chain(pairs).chain(grid).chain(random).filter(|e| !e.is_zero()).take(cfg.budget)
}

/// First candidate of `space` whose adjoint action on `L` is semisimple with
/// rational eigenvalues, not all zero.
pub fn find_real_semisimple(l: &LieAlgebra, space: &Subspace, cfg: SearchConfig) -> Result<Element> {
    candidates(space, cfg)
        .find(|x| {
            classify_element(l, x).is_ok_and(|c| c.kind == ElementKind::RealSemisimple && c.extension == 0)
        })
        .ok_or(LieError::NoRealSemisimpleFound)
}

/// First candidate of `space` that is compact semisimple on `L`; when `field`
/// is given its eigenvalues must lie in `Q(sqrt(field))`.
pub fn find_compact(l: &LieAlgebra, space: &Subspace, field: Option<i64>, cfg: SearchConfig) -> Result<Element> {
    candidates(space, cfg)
        .find(|x| {
            classify_element(l, x).is_ok_and(|c| {
                c.kind == ElementKind::CompactSemisimple && field.map_or(true, |d| c.extension == d)
            })
        })
        .ok_or(LieError::NoCompactFound)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn candidate_order_and_budget() {
        let s = Subspace::full(3);
        let v: Vec<Element> = candidates(&s, SearchConfig { budget: 20, seed: 0 }).collect();
        assert_eq!(v.len(), 20);
        assert_eq!(v[0], Element::unit(3, 0));
        assert_eq!(v[3], Element(vec![int(1), int(1), int(0)]));
        // three singles, twelve pairs, then the grid
        assert!(v[15].0.iter().all(|x| *x != int(0)));
    }

    #[test]
    fn random_tail_depends_on_seed() {
        let s = Subspace::full(2);
        let a: Vec<Element> = candidates(&s, SearchConfig { budget: 12, seed: 0 }).collect();
        let b: Vec<Element> = candidates(&s, SearchConfig { budget: 12, seed: 1 }).collect();
        assert_eq!(a[..6], b[..6]);
        assert_ne!(a[6..], b[6..]);
    }
}
