use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::algebra::Element;
use crate::exactlin::{rref_rows, RatMatrix, Rational};

/// Rational subspace of `Q^n` stored by its reduced row echelon basis, so two
/// subspaces are equal exactly when their stored bases are.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Element>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: &[Element]) -> Self {
        let rows: Vec<Vec<Rational>> = vectors.iter().map(|v| v.0.clone()).collect();
        let rows = rref_rows(&rows, ambient);
        let pivots = rows.iter().map(|r| r.iter().position(|x| !x.is_zero()).unwrap()).collect();
        Subspace { ambient, basis: rows.into_iter().map(Element).collect(), pivots }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: vec![], pivots: vec![] }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, &(0..ambient).map(|i| Element::unit(ambient, i)).collect::<Vec<_>>())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Element] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates with respect to the echelon basis, or `None` when outside.
    pub fn coords(&self, v: &Element) -> Option<Vec<Rational>> {
        let c: Vec<Rational> = self.pivots.iter().map(|&p| v.0[p].clone()).collect();
        let back = self.from_coords(&c);
        (back == *v).then_some(c)
    }

    pub fn from_coords(&self, c: &[Rational]) -> Element {
        let mut out = Element::zero(self.ambient);
        for (ci, b) in c.iter().zip(&self.basis) {
            if !ci.is_zero() {
                out = out.axpy(ci, b);
            }
        }
        out
    }

    pub fn contains(&self, v: &Element) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_space(&self, o: &Subspace) -> bool {
        o.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        let mut v = self.basis.clone();
        v.extend(o.basis.iter().cloned());
        Subspace::span(self.ambient, &v)
    }

    pub fn extend(&self, extra: &[Element]) -> Subspace {
        let mut v = self.basis.clone();
        v.extend(extra.iter().cloned());
        Subspace::span(self.ambient, &v)
    }

    pub fn intersect(&self, o: &Subspace) -> Subspace {
        if self.is_zero() || o.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // a_i u_i - b_j w_j = 0
        let mut cols: Vec<Vec<Rational>> = self.basis.iter().map(|u| u.0.clone()).collect();
        cols.extend(o.basis.iter().map(|w| w.0.iter().map(|x| -x).collect::<Vec<_>>()));
        let m = RatMatrix::from_cols(&cols, self.ambient);
        let k = self.dim();
        let vs: Vec<Element> = m.kernel().into_iter().map(|c| self.from_coords(&c[..k])).collect();
        Subspace::span(self.ambient, &vs)
    }

    /// Vectors `w` with `w . v = 0` for every `v` in the subspace.
    pub fn annihilator(&self) -> Vec<Vec<Rational>> {
        if self.is_zero() {
            return (0..self.ambient)
                .map(|i| (0..self.ambient).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
                .collect();
        }
        let m = RatMatrix::from_rows(&self.basis.iter().map(|b| b.0.clone()).collect::<Vec<_>>());
        m.kernel()
    }

    /// Greedy complement: the echelon rows of `larger` that are independent
    /// modulo `self`, in order.
    pub fn complement_in(&self, larger: &Subspace) -> Vec<Element> {
        let mut acc = self.clone();
        let mut out = vec![];
        for v in larger.basis() {
            if !acc.contains(v) {
                acc = acc.extend(std::slice::from_ref(v));
                out.push(v.clone());
            }
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct SubspaceRepr {
    ambient: usize,
    basis: Vec<Element>,
}

/// Serialized as `{"ambient": n, "basis": [...]}`; reading re-echelonizes.
impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubspaceRepr { ambient: self.ambient, basis: self.basis.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subspace {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = SubspaceRepr::deserialize(d)?;
        if r.basis.iter().any(|b| b.dim() != r.ambient) {
            return Err(serde::de::Error::custom("basis vector length differs from ambient dimension"));
        }
        Ok(Subspace::span(r.ambient, &r.basis))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;

    fn e(v: &[i64]) -> Element {
        Element(v.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn canonical_and_intersection() {
        let a = Subspace::span(3, &[e(&[1, 1, 0]), e(&[0, 1, 1])]);
        let b = Subspace::span(3, &[e(&[1, 0, -1]), e(&[1, 2, 1])]);
        assert_eq!(a, b);
        let c = Subspace::span(3, &[e(&[1, 0, 0]), e(&[0, 0, 1])]);
        let i = a.intersect(&c);
        assert_eq!(i, Subspace::span(3, &[e(&[1, 0, -1])]));
        assert_eq!(c.complement_in(&Subspace::full(3)), vec![e(&[0, 1, 0])]);
    }
}
