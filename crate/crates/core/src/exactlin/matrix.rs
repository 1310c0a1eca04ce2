use std::fmt;
use std::ops::{Index, IndexMut};

use super::scalar::{ExactScalar, Field, Rational};

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

pub type RatMatrix = Matrix<Rational>;
pub type ExactMatrix = Matrix<ExactScalar>;

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<F>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().cloned());
        }
        Matrix { rows: r, cols: c, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<F>], nrows: usize) -> Self {
        let mut m = Self::zeros(nrows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows);
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        let v = a.clone() * b;
                        out[(i, j)] = out[(i, j)].clone() + v;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(F::zero(), |acc, (a, b)| {
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        acc + a.clone() * b
                    }
                })
            })
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.clone() - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &F) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.clone() * s).collect() }
    }

    /// `self - s * I`.
    pub fn shift(&self, s: &F) -> Self {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            m[(i, i)] = m[(i, i)].clone() - s;
        }
        m
    }

    /// Stacks `o` underneath `self`.
    pub fn vstack(&self, o: &Self) -> Self {
        if self.rows == 0 {
            return o.clone();
        }
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Matrix { rows: self.rows + o.rows, cols: self.cols, data }
    }

    /// Reduced row echelon form, returning the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = vec![];
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = F::one() / &self[(r, c)];
            if !inv.is_one() {
                for j in c..self.cols {
                    self[(r, j)] = self[(r, j)].clone() * &inv;
                }
            }
            let pivot_row: Vec<F> = self.row(r)[c..].to_vec();
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for (off, pv) in pivot_row.iter().enumerate() {
                    if !pv.is_zero() {
                        let j = c + off;
                        self[(i, j)] = self[(i, j)].clone() - f.clone() * pv;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place();
        (m, p)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, one vector per free column, with the free
    /// variable set to 1 and the others to 0.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = vec![];
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[(i, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Particular solution of `self * x = rhs` with free variables set to 0.
    pub fn solve(&self, rhs: &[F]) -> Option<Vec<F>> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = rhs[i].clone();
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = aug[(i, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = F::one();
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// Determinant by Gaussian elimination with row swaps.
    pub fn det(&self) -> F {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[(r, c)].is_zero()) else {
                return F::zero();
            };
            if p != c {
                a.swap_rows(p, c);
                det = -det;
            }
            let piv = a[(c, c)].clone();
            det = det * &piv;
            for r in c + 1..n {
                if a[(r, c)].is_zero() {
                    continue;
                }
                let f = a[(r, c)].clone() / &piv;
                for j in c..n {
                    let v = a[(r, j)].clone() - f.clone() * &a[(c, j)];
                    a[(r, j)] = v;
                }
            }
        }
        det
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> =
                (0..self.cols).map(|j| format!("{:?}", self.data[i * self.cols + j])).collect();
            writeln!(f, "  {}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Row-reduces a list of vectors and keeps the nonzero rows.
pub fn rref_rows<F: Field>(vectors: &[Vec<F>], width: usize) -> Vec<Vec<F>> {
    if vectors.is_empty() {
        return vec![];
    }
    let m = Matrix::from_rows(vectors);
    assert_eq!(m.ncols(), width);
    let (r, pivots) = m.rref();
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

pub fn lift(m: &RatMatrix) -> ExactMatrix {
    m.map(|x| ExactScalar::rational(x.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::int;
    use num_traits::Zero;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        Matrix::from_rows(&rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn kernel_and_solve() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&k[0]).iter().all(|x| x.is_zero()));
        let x = a.solve(&[int(6), int(12), int(2)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![int(6), int(12), int(2)]);
        assert!(a.solve(&[int(1), int(1), int(1)]).is_none());
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), RatMatrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn determinant_with_swap() {
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det(), int(-1));
        assert_eq!(m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]).det(), int(18));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det(), int(0));
    }
}
