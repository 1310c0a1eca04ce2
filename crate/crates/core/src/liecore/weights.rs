use num_traits::Zero;

use super::algebra::{Element, LieAlgebra};
use super::structure::{is_abelian, restricted_ad};
use super::subspace::Subspace;
use crate::error::{LieError, Result};
use crate::exactlin::{eigenvalues, lift, rref_rows, ExactMatrix, ExactScalar, Rational};

/// A joint eigenvalue of an ordered family of commuting operators, with its
/// eigenspace given by echelon vectors in the coordinates of `L`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightSpace {
    pub weight: Vec<ExactScalar>,
    pub space: Vec<Vec<ExactScalar>>,
}

/// Joint eigenspace decomposition of `ambient` under `ad(h_1), ..., ad(h_r)`.
/// The `h_i` must commute, act semisimply on `ambient`, and have all their
/// eigenvalues in one field `Q(sqrt(d))`. Weight spaces come back sorted by
/// weight, the zero weight included.
pub fn joint_eigenspaces(l: &LieAlgebra, ambient: &Subspace, torus: &[Element]) -> Result<Vec<WeightSpace>> {
    let n = l.dim();
    let k = ambient.dim();
    let tspan = Subspace::span(n, torus);
    if !is_abelian(l, &tspan) {
        return Err(LieError::NotATorus("elements do not commute".into()));
    }
    let mats = torus
        .iter()
        .map(|h| restricted_ad(l, ambient, h))
        .collect::<Result<Vec<_>>>()
        .map_err(|_| LieError::NotATorus("ambient subspace is not stable".into()))?;
    let mut d = 0i64;
    let mut spectra = vec![];
    for m in &mats {
        let eig = eigenvalues(m)?;
        for (e, _) in &eig {
            if e.d() != 0 {
                if d != 0 && d != e.d() {
                    return Err(LieError::ExtensionDegreeTooHigh(format!(
                        "torus eigenvalues in Q(sqrt({d})) and Q(sqrt({}))",
                        e.d()
                    )));
                }
                d = e.d();
            }
        }
        spectra.push(eig.into_iter().map(|(e, _)| e).collect::<Vec<_>>());
    }
    let one = |i: usize| {
        let mut v = vec![ExactScalar::zero(); k];
        v[i] = <ExactScalar as num_traits::One>::one();
        v
    };
    let mut parts: Vec<(Vec<ExactScalar>, Vec<Vec<ExactScalar>>)> = vec![(vec![], (0..k).map(one).collect())];
    for (m, spec) in mats.iter().zip(&spectra) {
        let em: ExactMatrix = lift(m);
        let mut next = vec![];
        for (w, basis) in parts {
            for mu in spec {
                // (m - mu) sum c_i v_i = 0
                let shifted = em.shift(mu);
                let cols: Vec<Vec<ExactScalar>> = basis.iter().map(|v| shifted.mul_vec(v)).collect();
                let sys = ExactMatrix::from_cols(&cols, k);
                let ker = sys.kernel();
                if ker.is_empty() {
                    continue;
                }
                let vecs: Vec<Vec<ExactScalar>> = ker
                    .iter()
                    .map(|c| {
                        let mut v = vec![ExactScalar::zero(); k];
                        for (ci, b) in c.iter().zip(&basis) {
                            if ci.is_zero() {
                                continue;
                            }
                            for (vj, bj) in v.iter_mut().zip(b) {
                                *vj = vj.clone() + ci.clone() * bj;
                            }
                        }
                        v
                    })
                    .collect();
                let mut w2 = w.clone();
                w2.push(mu.clone());
                next.push((w2, vecs));
            }
        }
        parts = next;
    }
    let total: usize = parts.iter().map(|(_, b)| b.len()).sum();
    if total != k {
        return Err(LieError::NotATorus("some element does not act semisimply".into()));
    }
    let mut out: Vec<WeightSpace> = parts
        .into_iter()
        .map(|(weight, basis)| {
            let full: Vec<Vec<ExactScalar>> = basis.iter().map(|c| to_ambient(ambient, c)).collect();
            WeightSpace { weight, space: rref_rows(&full, n) }
        })
        .collect();
    out.sort_by(|a, b| a.weight.cmp(&b.weight));
    Ok(out)
}

fn to_ambient(ambient: &Subspace, c: &[ExactScalar]) -> Vec<ExactScalar> {
    let n = ambient.ambient();
    let mut v = vec![ExactScalar::zero(); n];
    for (ci, b) in c.iter().zip(ambient.basis()) {
        if ci.is_zero() {
            continue;
        }
        for (vj, bj) in v.iter_mut().zip(&b.0) {
            if !bj.is_zero() {
                *vj = vj.clone() + ci.clone() * &ExactScalar::rational(bj.clone());
            }
        }
    }
    v
}

/// Splits a vector over `Q(sqrt(d))` as `p + sqrt(d) q` with `p`, `q` rational.
pub fn rational_parts(v: &[ExactScalar]) -> (Vec<Rational>, Vec<Rational>) {
    (v.iter().map(|x| x.a().clone()).collect(), v.iter().map(|x| x.b().clone()).collect())
}

/// `(real part, compact part)` of a torus: the elements on which every weight
/// is real, and those on which every weight is imaginary.
pub fn torus_split(l: &LieAlgebra, torus: &Subspace) -> Result<(Subspace, Subspace)> {
    let n = l.dim();
    let basis = torus.basis().to_vec();
    let r = basis.len();
    if r == 0 {
        return Ok((Subspace::zero(n), Subspace::zero(n)));
    }
    let ws = joint_eigenspaces(l, &Subspace::full(n), &basis)?;
    let mut im_rows: Vec<Vec<Rational>> = vec![];
    let mut re_rows: Vec<Vec<Rational>> = vec![];
    for w in &ws {
        let d = w.weight.iter().map(|x| x.d()).find(|&d| d != 0).unwrap_or(0);
        let (a, b) = rational_parts(&w.weight);
        if d < 0 {
            re_rows.push(a);
            im_rows.push(b);
        } else {
            re_rows.push(a);
            re_rows.push(b);
        }
    }
    let solve = |rows: &Vec<Vec<Rational>>| -> Subspace {
        let rows: Vec<Vec<Rational>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
        let coeffs: Vec<Vec<Rational>> = if rows.is_empty() {
            (0..r).map(|i| (0..r).map(|j| if i == j { num_traits::One::one() } else { Rational::zero() }).collect()).collect()
        } else {
            crate::exactlin::RatMatrix::from_rows(&rows).kernel()
        };
        let elems: Vec<Element> = coeffs
            .iter()
            .map(|c| Element::lin_comb(n, &c.iter().cloned().zip(basis.iter()).collect::<Vec<_>>()))
            .collect();
        Subspace::span(n, &elems)
    };
    Ok((solve(&im_rows), solve(&re_rows)))
}
