use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::scalar::{format_rational, Field, Rational};

/// Dense univariate polynomial, coefficients from the constant term up.
#[derive(Clone, PartialEq)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: F) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    /// `t - c`.
    pub fn linear(c: F) -> Self {
        Self::from_coeffs(vec![-c, F::one()])
    }

    pub fn monomial(c: F, k: usize) -> Self {
        let mut v = vec![F::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b;
                }
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, s: &F) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.clone() * s).collect())
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.deg();
        let inv = F::one() / &d.lc();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![F::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].clone() * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                if !dj.is_zero() {
                    r[k + j] = r[k + j].clone() - c.clone() * dj;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::from_coeffs(q), Self::from_coeffs(r))
    }

    /// Quotient of an exact division; panics if the remainder is nonzero.
    pub fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = F::one() / &self.lc();
        self.scale(&inv)
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * &F::from_rational(&Rational::from_integer(BigInt::from(k))))
                .collect(),
        )
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &Matrix<F>) -> Matrix<F> {
        let n = m.nrows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            for i in 0..n {
                acc[(i, i)] = acc[(i, i)].clone() + c;
            }
        }
        acc
    }

    /// Squarefree part `p / gcd(p, p')`, made monic.
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return Self::one();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).monic()
    }

    /// Yun's squarefree decomposition: monic factors `a_i` with `p = lc * prod a_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = vec![];
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0);
        let c = df.exact_div(&a0);
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            b = b.exact_div(&a);
            let c = d.exact_div(&a);
            d = c.sub(&b.derivative());
            if !a.is_constant() {
                out.push((a.monic(), i));
            }
            i += 1;
        }
        out
    }
}

impl<F: Field + fmt::Debug> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c:?}"),
                1 => format!("({c:?})t"),
                _ => format!("({c:?})t^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Poly<Rational> {
    /// Integer coefficients with positive leading coefficient and content 1.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return vec![];
        }
        let l = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        for c in &mut ints {
            *c /= &g;
        }
        if ints.last().is_some_and(|c| c < &BigInt::zero()) {
            for c in &mut ints {
                *c = -c.clone();
            }
        }
        ints
    }

    pub fn from_integers(c: &[BigInt]) -> Self {
        Self::from_coeffs(c.iter().map(|x| Rational::from_integer(x.clone())).collect())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }
}

/// Determinant of `t*I - m` by fraction-free (Bareiss) elimination over `F[t]`.
/// Leading principal minors of `t*I - m` are monic, so no pivoting is needed
/// and every division is exact.
pub fn char_poly_generic<F: Field>(m: &Matrix<F>) -> Poly<F> {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.nrows();
    if n == 0 {
        return Poly::one();
    }
    let mut a: Vec<Vec<Poly<F>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = -m[(i, j)].clone();
                    if i == j {
                        Poly::from_coeffs(vec![c, F::one()])
                    } else {
                        Poly::constant(c)
                    }
                })
                .collect()
        })
        .collect();
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        let pivot = a[k][k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = pivot.mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.exact_div(&prev);
            }
        }
        prev = pivot;
    }
    a[n - 1][n - 1].clone()
}

/// Characteristic polynomial `det(t*I - m)` of a rational matrix. The matrix is
/// scaled to integer entries first so that the elimination stays in `Z[t]`.
pub fn char_poly(m: &Matrix<Rational>) -> Poly<Rational> {
    let n = m.nrows();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in 0..n {
            den = den.lcm(m[(i, j)].denom());
        }
    }
    if den.is_one() {
        return char_poly_generic(m);
    }
    let dr = Rational::from_integer(den);
    let p = char_poly_generic(&m.scale(&dr));
    // det(tI - M) = D^-n det(D t I - D M)
    let mut coeffs = p.coeffs().to_vec();
    let mut pow = Rational::one();
    for k in (0..coeffs.len()).rev() {
        coeffs[k] = coeffs[k].clone() / &pow;
        pow = pow * &dr;
    }
    Poly::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::{int, rat};

    fn p(c: &[i64]) -> Poly<Rational> {
        Poly::from_coeffs(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn yun_multiplicities() {
        // (t-1)^3 (t+2)^2 t
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[-1, 1])).mul(&p(&[2, 1])).mul(&p(&[2, 1])).mul(&p(&[0, 1]));
        let dec = f.squarefree_decomposition();
        assert_eq!(dec.len(), 3);
        assert_eq!(dec[0], (p(&[0, 1]), 1));
        assert_eq!(dec[1], (p(&[2, 1]), 2));
        assert_eq!(dec[2], (p(&[-1, 1]), 3));
    }

    #[test]
    fn char_poly_small() {
        let m = Matrix::from_rows(&[vec![rat(1, 2), int(1)], vec![int(0), int(3)]]);
        assert_eq!(char_poly(&m), Poly::from_coeffs(vec![rat(3, 2), rat(-7, 2), int(1)]));
    }
}
