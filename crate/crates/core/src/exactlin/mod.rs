//! Exact linear algebra over Q and over a single quadratic extension Q(sqrt(d)).

pub mod factor;
pub mod matrix;
pub mod poly;
pub mod scalar;

pub use factor::{eigenvalues, extension_of, poly_roots};
pub use matrix::{lift, rref_rows, ExactMatrix, Matrix, RatMatrix};
pub use poly::{char_poly, char_poly_generic, Poly};
pub use scalar::{format_rational, int, parse_rational, rat, ExactScalar, Field, Rational};

pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    m.rref()
}

pub fn kernel<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    m.kernel()
}

pub fn solve_linear<F: Field>(m: &Matrix<F>, rhs: &[F]) -> Option<Vec<F>> {
    m.solve(rhs)
}
