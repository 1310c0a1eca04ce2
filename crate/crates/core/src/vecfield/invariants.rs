use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::PolyVectorField;
use crate::exactlin::{RatMatrix, Rational};

const FIRST_POINT: [i64; 12] = [1, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31];
const RANDOM_POINTS: usize = 4;
const POINT_SEED: u64 = 0;

/// Evaluation points used for generic rank: one fixed point, then a few
/// seeded pseudo-random rational points.
pub fn sample_points(nvars: usize) -> Vec<Vec<Rational>> {
    let mut pts = vec![(0..nvars)
        .map(|i| Rational::from_integer(BigInt::from(FIRST_POINT[i % FIRST_POINT.len()] + (i / FIRST_POINT.len()) as i64)))
        .collect()];
    let mut rng = ChaCha8Rng::seed_from_u64(POINT_SEED);
    for _ in 0..RANDOM_POINTS {
        pts.push(
            (0..nvars)
                .map(|_| {
                    let num: i64 = rng.gen_range(-60..=60);
                    let den: i64 = rng.gen_range(1..=9);
                    Rational::new(BigInt::from(num), BigInt::from(den))
                })
                .collect(),
        );
    }
    pts
}

/// Rank of the coefficient matrix of the fields at a generic point, taken as
/// the maximum over the sample points.
pub fn generic_rank(fields: &[PolyVectorField]) -> usize {
    let Some(first) = fields.first() else { return 0 };
    let n = first.nvars();
    sample_points(n)
        .iter()
        .map(|pt| RatMatrix::from_rows(&fields.iter().map(|f| f.eval(pt)).collect::<Vec<_>>()).rank())
        .max()
        .unwrap_or(0)
}

/// Number of functionally independent invariants of the fields: the number of
/// variables minus the generic rank.
pub fn invariant_count(nvars: usize, fields: &[PolyVectorField]) -> usize {
    nvars - generic_rank(fields)
}
