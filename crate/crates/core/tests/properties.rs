use lieembed::exactlin::{char_poly, int, Poly, RatMatrix, Rational};
use lieembed::liecore::{signature, Element, LieAlgebra, Subspace};
use lieembed::vecfield::{algebra, reference_table};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn matrix(n: usize, entries: &[i64]) -> RatMatrix {
    let rows: Vec<Vec<Rational>> = (0..n).map(|i| (0..n).map(|j| int(entries[i * n + j])).collect()).collect();
    RatMatrix::from_rows(&rows)
}

fn square(max: usize) -> impl Strategy<Value = RatMatrix> {
    (1..=max).prop_flat_map(|n| prop::collection::vec(-4i64..=4, n * n).prop_map(move |e| matrix(n, &e)))
}

/// Faddeev-LeVerrier: coefficients of det(tI - A), lowest degree first.
fn leverrier(a: &RatMatrix) -> Vec<Rational> {
    let n = a.nrows();
    let mut c = vec![Rational::zero(); n + 1];
    c[n] = Rational::one();
    let mut m = RatMatrix::zeros(n, n);
    for k in 1..=n {
        m = a.mul(&m).add(&RatMatrix::identity(n).scale(&c[n - k + 1]));
        c[n - k] = -a.mul(&m).trace() / int(k as i64);
    }
    c
}

fn padded(p: &Poly<Rational>, len: usize) -> Vec<Rational> {
    (0..len).map(|k| p.coeff(k)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn char_poly_matches_leverrier(a in square(6)) {
        let n = a.nrows();
        prop_assert_eq!(padded(&char_poly(&a), n + 1), leverrier(&a));
    }

    #[test]
    fn cayley_hamilton(a in square(6)) {
        prop_assert!(char_poly(&a).eval_matrix(&a).is_zero());
    }

    #[test]
    fn char_poly_of_scaled_matrix(a in square(5), num in 1i64..5, den in 1i64..5) {
        // p_{sA}(t) = s^n p_A(t/s)
        let s = Rational::new(num.into(), den.into());
        let n = a.nrows();
        let p = char_poly(&a);
        let q = char_poly(&a.scale(&s));
        for k in 0..=n {
            let mut f = Rational::one();
            for _ in 0..n - k {
                f *= &s;
            }
            prop_assert_eq!(q.coeff(k), p.coeff(k) * f);
        }
    }

    #[test]
    fn signature_invariant_under_congruence(
        diag in prop::collection::vec(-3i64..=3, 1..7),
        lower in prop::collection::vec(-3i64..=3, 36),
        perm_seed in 0usize..720,
    ) {
        let n = diag.len();
        let d = RatMatrix::from_rows(
            &(0..n).map(|i| (0..n).map(|j| if i == j { int(diag[i]) } else { Rational::zero() }).collect()).collect::<Vec<_>>(),
        );
        let expected = (
            diag.iter().filter(|x| **x > 0).count(),
            diag.iter().filter(|x| **x < 0).count(),
            diag.iter().filter(|x| **x == 0).count(),
        );
        // unit lower triangular times a permutation is invertible
        let mut p = RatMatrix::identity(n);
        for i in 0..n {
            for j in 0..i {
                p[(i, j)] = int(lower[i * 6 + j]);
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        let mut s = perm_seed;
        for i in (1..n).rev() {
            order.swap(i, s % (i + 1));
            s /= i + 1;
        }
        let perm = RatMatrix::from_rows(
            &order.iter().map(|&k| (0..n).map(|j| if j == k { Rational::one() } else { Rational::zero() }).collect()).collect::<Vec<_>>(),
        );
        let q = p.mul(&perm);
        let m = q.transpose().mul(&d).mul(&q);
        prop_assert_eq!(signature(&m), expected);
    }

    #[test]
    fn subspace_dimension_formula(
        a in prop::collection::vec(prop::collection::vec(-2i64..=2, 6), 0..5),
        b in prop::collection::vec(prop::collection::vec(-2i64..=2, 6), 0..5),
    ) {
        let el = |v: &Vec<i64>| Element(v.iter().map(|x| int(*x)).collect());
        let sa = Subspace::span(6, &a.iter().map(el).collect::<Vec<_>>());
        let sb = Subspace::span(6, &b.iter().map(el).collect::<Vec<_>>());
        let sum = sa.sum(&sb);
        let meet = sa.intersect(&sb);
        prop_assert_eq!(sum.dim() + meet.dim(), sa.dim() + sb.dim());
        prop_assert!(sum.contains_space(&sa) && sum.contains_space(&sb));
        prop_assert!(sa.contains_space(&meet) && sb.contains_space(&meet));
        for v in sa.complement_in(&sum) {
            prop_assert!(!sa.contains(&v));
        }
    }

    #[test]
    fn determinant_is_multiplicative(a in square(4), b in prop::collection::vec(-3i64..=3, 16)) {
        let n = a.nrows();
        let b = matrix(n, &b[..n * n]);
        prop_assert_eq!(a.mul(&b).det(), a.det() * b.det());
    }
}

fn catalog() -> Vec<(&'static str, LieAlgebra)> {
    let mut out: Vec<(&str, LieAlgebra)> = ["wave16", "wave15", "g2", "sl2", "so(4,0)", "so(2,2)", "so(1,3)", "so(3,2)"]
        .into_iter()
        .map(|n| (n, algebra(n).unwrap()))
        .collect();
    out.push(("wave16 table", reference_table("wave16").unwrap()));
    out.push(("g2 table", reference_table("g2").unwrap()));
    out
}

#[test]
fn antisymmetry_and_jacobi_on_basis_triples() {
    for (name, l) in catalog() {
        let n = l.dim();
        for i in 0..n {
            assert!(l.bracket_basis(i, i).is_zero(), "{name}: [b{i}, b{i}] != 0");
            for j in 0..n {
                let ij = l.bracket_basis(i, j);
                let ji = l.bracket_basis(j, i);
                assert!(ij.axpy(&Rational::one(), &ji).is_zero(), "{name}: antisymmetry fails at {i},{j}");
                for k in j + 1..n {
                    let (x, y, z) = (l.basis(i), l.basis(j), l.basis(k));
                    let s = l
                        .bracket(&x, &l.bracket(&y, &z))
                        .axpy(&Rational::one(), &l.bracket(&y, &l.bracket(&z, &x)))
                        .axpy(&Rational::one(), &l.bracket(&z, &l.bracket(&x, &y)));
                    assert!(s.is_zero(), "{name}: Jacobi fails at {i},{j},{k}");
                }
            }
        }
    }
}

#[test]
fn killing_form_symmetric_and_degenerate_only_with_scaling() {
    for (name, l) in catalog() {
        let k = lieembed::liecore::killing_form(&l);
        assert_eq!(k, k.transpose(), "{name}");
        let det = k.det();
        assert_eq!(det.is_zero(), name == "wave16" || name == "wave16 table", "{name}: det {det}");
    }
}
