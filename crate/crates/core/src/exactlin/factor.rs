//! Splitting rational polynomials into linear and quadratic factors, which is
//! all the eigenvalue machinery needs: anything beyond a single quadratic
//! extension of Q is reported as `ExtensionDegreeTooHigh`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::RatMatrix;
use super::poly::{char_poly, Poly};
use super::scalar::{divisors, ExactScalar, Rational};
use crate::error::{LieError, Result};

type QPoly = Poly<Rational>;

fn int_eval(c: &[BigInt], x: &BigInt) -> BigInt {
    c.iter().rev().fold(BigInt::zero(), |acc, a| acc * x + a)
}

/// Rational roots of a polynomial by the rational root theorem.
pub fn rational_roots(p: &QPoly) -> Vec<Rational> {
    let mut roots = vec![];
    if p.is_constant() {
        return roots;
    }
    let mut c = p.primitive_integer();
    let mut k = 0;
    while c.first().is_some_and(|x| x.is_zero()) {
        c.remove(0);
        k += 1;
    }
    if k > 0 {
        roots.push(Rational::zero());
    }
    if c.len() <= 1 {
        return roots;
    }
    let lead = c.last().unwrap().clone();
    let cst = c[0].clone();
    let dl = divisors(&lead);
    let dc = divisors(&cst);
    let mut found = vec![];
    for q in &dl {
        for pp in &dc {
            for s in [1i32, -1] {
                let r = Rational::new(pp * BigInt::from(s), q.clone());
                if found.contains(&r) {
                    continue;
                }
                // c(p/q) * q^n == 0
                let n = c.len() - 1;
                let mut acc = BigInt::zero();
                let num = r.numer().clone();
                let den = r.denom().clone();
                for (i, ci) in c.iter().enumerate() {
                    acc += ci * num.pow(i as u32) * den.pow((n - i) as u32);
                }
                if acc.is_zero() {
                    found.push(r);
                }
            }
        }
    }
    found.sort();
    roots.extend(found);
    roots
}

/// Looks for a quadratic factor `a t^2 + b t + c` of a primitive integer
/// polynomial without rational roots.
fn quadratic_factor(c: &[BigInt]) -> Option<QPoly> {
    let lead = c.last()?.clone();
    let cst = c[0].clone();
    let v1 = int_eval(c, &BigInt::one());
    let vm1 = int_eval(c, &-BigInt::one());
    let target = QPoly::from_integers(c);
    for a in divisors(&lead) {
        for f0 in divisors(&cst) {
            for f in [f0.clone(), -f0.clone()] {
                for s0 in divisors(&v1) {
                    for s in [s0.clone(), -s0.clone()] {
                        let b = &s - &a - &f;
                        let q1 = &a - &b + &f;
                        if q1.is_zero() || !(&vm1 % &q1).is_zero() {
                            continue;
                        }
                        let cand = QPoly::from_integers(&[f.clone(), b, a.clone()]);
                        if target.divrem(&cand).1.is_zero() {
                            return Some(cand);
                        }
                    }
                }
            }
        }
    }
    None
}

/// Even polynomials `G(t^2)`: factors `t^2 - s` for rational roots `s` of `G`.
fn even_split(p: &QPoly) -> Option<QPoly> {
    let c = p.coeffs();
    if c.iter().enumerate().any(|(k, x)| k % 2 == 1 && !x.is_zero()) {
        return None;
    }
    let g = QPoly::from_coeffs(c.iter().step_by(2).cloned().collect());
    let s = rational_roots(&g).into_iter().next()?;
    Some(QPoly::from_coeffs(vec![-s, Rational::zero(), Rational::one()]))
}

/// Irreducible factors of degree at most two of a squarefree polynomial, all
/// monic. Fails when an irreducible factor of higher degree remains.
pub fn split_squarefree(p: &QPoly) -> Result<Vec<QPoly>> {
    let mut out = vec![];
    let mut rest = p.monic();
    for r in rational_roots(&rest) {
        let lin = QPoly::linear(r);
        rest = rest.exact_div(&lin);
        out.push(lin);
    }
    let mut stack = vec![rest];
    while let Some(h) = stack.pop() {
        match h.deg() {
            0 => {}
            1 | 2 => out.push(h.monic()),
            3 => return Err(LieError::ExtensionDegreeTooHigh(format!("irreducible cubic {h:?}"))),
            _ => {
                let q = even_split(&h).or_else(|| quadratic_factor(&h.primitive_integer()));
                match q {
                    Some(q) => {
                        let q = q.monic();
                        stack.push(h.exact_div(&q));
                        out.push(q);
                    }
                    None => {
                        return Err(LieError::ExtensionDegreeTooHigh(format!(
                            "no factor of degree <= 2 in {h:?}"
                        )))
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Roots of a monic linear or quadratic polynomial.
pub fn small_roots(q: &QPoly) -> Result<Vec<ExactScalar>> {
    match q.deg() {
        1 => Ok(vec![ExactScalar::rational(-q.coeff(0))]),
        2 => {
            let b = q.coeff(1);
            let c = q.coeff(0);
            let half = Rational::new(BigInt::one(), BigInt::from(2));
            let mid = -(&b * &half);
            let disc = &mid * &mid - &c;
            let s = ExactScalar::sqrt_of(&disc)?;
            let m = ExactScalar::rational(mid);
            Ok(vec![&m + &s, &m - &s])
        }
        _ => Err(LieError::ExtensionDegreeTooHigh(format!("{q:?}"))),
    }
}

/// Roots with multiplicities of a rational polynomial, sorted. All non-rational
/// roots must live in one common field `Q(sqrt(d))`.
pub fn poly_roots(p: &QPoly) -> Result<Vec<(ExactScalar, usize)>> {
    let mut roots: Vec<(ExactScalar, usize)> = vec![];
    for (f, mult) in p.squarefree_decomposition() {
        for q in split_squarefree(&f)? {
            for r in small_roots(&q)? {
                roots.push((r, mult));
            }
        }
    }
    let mut d = 0;
    for (r, _) in &roots {
        if r.d() != 0 {
            if d != 0 && d != r.d() {
                return Err(LieError::ExtensionDegreeTooHigh(format!(
                    "roots in both Q(sqrt({d})) and Q(sqrt({}))",
                    r.d()
                )));
            }
            d = r.d();
        }
    }
    roots.sort();
    Ok(roots)
}

/// Eigenvalues of a rational matrix with algebraic multiplicities.
pub fn eigenvalues(m: &RatMatrix) -> Result<Vec<(ExactScalar, usize)>> {
    poly_roots(&char_poly(m))
}

/// The radicand shared by the non-rational eigenvalues, or 0.
pub fn extension_of(eigs: &[(ExactScalar, usize)]) -> i64 {
    eigs.iter().map(|(e, _)| e.d()).find(|&d| d != 0).unwrap_or(0)
}
