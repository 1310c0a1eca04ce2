use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::algebra::{Element, LieAlgebra};
use crate::error::{LieError, Result};
use crate::exactlin::{char_poly, extension_of, poly_roots, ExactScalar, Poly, RatMatrix, Rational};

/// Semisimple part of a matrix by Newton iteration on the squarefree part of
/// its characteristic polynomial: `S <- S - q(S) q'(S)^-1` converges in
/// `O(log n)` steps and stays a polynomial in the input.
pub fn semisimple_part(a: &RatMatrix) -> Result<RatMatrix> {
    let q = char_poly(a).squarefree_part();
    let dq = q.derivative();
    let mut s = a.clone();
    for _ in 0..=usize::BITS {
        let qs = q.eval_matrix(&s);
        if qs.is_zero() {
            return Ok(s);
        }
        let inv = dq
            .eval_matrix(&s)
            .inverse()
            .ok_or_else(|| LieError::Invariant("q'(S) is singular in Jordan iteration".into()))?;
        s = s.sub(&qs.mul(&inv));
    }
    Err(LieError::Invariant("Jordan iteration did not converge".into()))
}

/// `(x_s, x_n)` with `ad(x_s)` and `ad(x_n)` the semisimple and nilpotent parts
/// of `ad(x)`. When the algebra has a center, `x_s` is the solution of
/// `ad(x_s) = ad(x)_s` whose central coordinates are zero.
pub fn jordan_decomposition(l: &LieAlgebra, x: &Element) -> Result<(Element, Element)> {
    let a = l.ad(x);
    let s = semisimple_part(&a)?;
    if s == a {
        return Ok((x.clone(), Element::zero(l.dim())));
    }
    let xs = pull_back(l, &s)?;
    let xn = x - &xs;
    Ok((xs, xn))
}

/// Solves `ad(y) = m` for `y`.
pub fn pull_back(l: &LieAlgebra, m: &RatMatrix) -> Result<Element> {
    let n = l.dim();
    let mut sys = RatMatrix::zeros(n * n, n);
    let mut rhs = vec![Rational::zero(); n * n];
    for i in 0..n {
        let ad = l.ad_basis(i);
        for r in 0..n {
            for c in 0..n {
                sys[(r * n + c, i)] = ad[(r, c)].clone();
            }
        }
    }
    for r in 0..n {
        for c in 0..n {
            rhs[r * n + c] = m[(r, c)].clone();
        }
    }
    sys.solve(&rhs)
        .map(Element)
        .ok_or_else(|| LieError::Invariant("matrix is not in ad(L)".into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ElementKind {
    /// `ad(x)` nilpotent, including central elements.
    Nilpotent,
    /// Semisimple with real eigenvalues, not all zero.
    RealSemisimple,
    /// Semisimple with purely imaginary eigenvalues, not all zero.
    CompactSemisimple,
    /// Semisimple with some eigenvalue neither real nor imaginary, or with both
    /// nonzero real and nonzero imaginary eigenvalues.
    Semisimple,
    /// Neither semisimple nor nilpotent.
    Mixed,
}

#[derive(Clone, Debug)]
pub struct ElementClass {
    pub kind: ElementKind,
    /// Eigenvalues of `ad(x)` with multiplicities; `None` for nilpotent and
    /// mixed elements whose spectrum was not needed.
    pub eigenvalues: Option<Vec<(ExactScalar, usize)>>,
    /// Radicand of the eigenvalue field, 0 when rational.
    pub extension: i64,
}

pub fn classify_element(l: &LieAlgebra, x: &Element) -> Result<ElementClass> {
    classify_matrix(&l.ad(x))
}

pub fn classify_matrix(a: &RatMatrix) -> Result<ElementClass> {
    let p = char_poly(a);
    let n = a.nrows();
    if p == Poly::monomial(Rational::one(), n) {
        return Ok(ElementClass { kind: ElementKind::Nilpotent, eigenvalues: None, extension: 0 });
    }
    let q = p.squarefree_part();
    if !q.eval_matrix(a).is_zero() {
        return Ok(ElementClass { kind: ElementKind::Mixed, eigenvalues: None, extension: 0 });
    }
    let eig = poly_roots(&p)?;
    let d = extension_of(&eig);
    let real = eig.iter().all(|(e, _)| e.is_real());
    let imag = eig.iter().all(|(e, _)| e.is_zero() || e.is_imaginary());
    let kind = if real {
        ElementKind::RealSemisimple
    } else if imag {
        ElementKind::CompactSemisimple
    } else {
        ElementKind::Semisimple
    };
    Ok(ElementClass { kind, eigenvalues: Some(eig), extension: d })
}

/// Sum of the eigenspaces of `m` (acting on `Q^k`) for positive real rational
/// eigenvalues, as rational vectors.
pub fn positive_eigenvectors(m: &RatMatrix) -> Result<Vec<Vec<Rational>>> {
    let mut out = vec![];
    for (e, _) in poly_roots(&char_poly(m))? {
        if let Some(r) = e.as_rational() {
            if r.is_positive() {
                out.extend(m.shift(r).kernel());
            }
        }
    }
    Ok(out)
}
