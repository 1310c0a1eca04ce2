use num_traits::{Signed, Zero};

use super::algebra::{Element, LieAlgebra};
use super::subspace::Subspace;
use crate::error::{LieError, Result};
use crate::exactlin::{RatMatrix, Rational};

pub fn is_subalgebra(l: &LieAlgebra, s: &Subspace) -> bool {
    let b = s.basis();
    (0..b.len()).all(|i| (i + 1..b.len()).all(|j| s.contains(&l.bracket(&b[i], &b[j]))))
}

pub fn is_abelian(l: &LieAlgebra, s: &Subspace) -> bool {
    let b = s.basis();
    (0..b.len()).all(|i| (i + 1..b.len()).all(|j| l.bracket(&b[i], &b[j]).is_zero()))
}

/// Matrix of `ad(x)` restricted to an `ad(x)`-stable subspace, in the
/// subspace's echelon coordinates.
pub fn restricted_ad(l: &LieAlgebra, s: &Subspace, x: &Element) -> Result<RatMatrix> {
    let k = s.dim();
    let mut m = RatMatrix::zeros(k, k);
    for (j, b) in s.basis().iter().enumerate() {
        let c = s.coords(&l.bracket(x, b)).ok_or(LieError::NotASubalgebra)?;
        for (i, ci) in c.into_iter().enumerate() {
            m[(i, j)] = ci;
        }
    }
    Ok(m)
}

fn trace_of_product(a: &RatMatrix, b: &RatMatrix) -> Rational {
    let n = a.nrows();
    let mut t = Rational::zero();
    for i in 0..n {
        for k in 0..n {
            let x = &a[(i, k)];
            if !x.is_zero() {
                let y = &b[(k, i)];
                if !y.is_zero() {
                    t += x * y;
                }
            }
        }
    }
    t
}

/// Gram matrix of `tr(ad x ad y)` on the algebra's basis.
pub fn killing_form(l: &LieAlgebra) -> RatMatrix {
    gram(&(0..l.dim()).map(|i| l.ad_basis(i).clone()).collect::<Vec<_>>())
}

/// Killing form of a subalgebra regarded as a Lie algebra in its own right,
/// on its echelon basis.
pub fn killing_form_of(l: &LieAlgebra, s: &Subspace) -> Result<RatMatrix> {
    let ads: Result<Vec<RatMatrix>> = s.basis().iter().map(|b| restricted_ad(l, s, b)).collect();
    Ok(gram(&ads?))
}

fn gram(ads: &[RatMatrix]) -> RatMatrix {
    let n = ads.len();
    let mut k = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let t = trace_of_product(&ads[i], &ads[j]);
            k[(j, i)] = t.clone();
            k[(i, j)] = t;
        }
    }
    k
}

/// Inertia `(positive, negative, zero)` of a symmetric rational matrix by
/// congruence diagonalization.
pub fn signature(m: &RatMatrix) -> (usize, usize, usize) {
    let mut a = m.clone();
    let n = a.nrows();
    let (mut pos, mut neg) = (0, 0);
    let mut k = 0;
    while k < n {
        if a[(k, k)].is_zero() {
            if let Some(p) = (k + 1..n).find(|&i| !a[(i, i)].is_zero()) {
                sym_swap(&mut a, k, p);
            } else if let Some(p) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) {
                // row/col k += row/col p gives a[k][k] = 2 a[k][p]
                sym_add(&mut a, k, p);
            } else if let Some((i, j)) =
                (k + 1..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[(i, j)].is_zero())
            {
                sym_add(&mut a, i, j);
                sym_swap(&mut a, k, i);
            } else {
                break;
            }
        }
        let p = a[(k, k)].clone();
        if p.is_zero() {
            break;
        }
        if p.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = &a[(i, k)] / &p;
            for j in k..n {
                let v = &a[(i, j)] - &f * &a[(k, j)];
                a[(i, j)] = v;
            }
            for j in k..n {
                let v = &a[(j, i)] - &f * &a[(j, k)];
                a[(j, i)] = v;
            }
        }
        k += 1;
    }
    (pos, neg, n - pos - neg)
}

fn sym_swap(a: &mut RatMatrix, i: usize, j: usize) {
    let n = a.nrows();
    for c in 0..n {
        let t = a[(i, c)].clone();
        a[(i, c)] = a[(j, c)].clone();
        a[(j, c)] = t;
    }
    for r in 0..n {
        let t = a[(r, i)].clone();
        a[(r, i)] = a[(r, j)].clone();
        a[(r, j)] = t;
    }
}

fn sym_add(a: &mut RatMatrix, i: usize, j: usize) {
    let n = a.nrows();
    for c in 0..n {
        let v = &a[(i, c)] + &a[(j, c)];
        a[(i, c)] = v;
    }
    for r in 0..n {
        let v = &a[(r, i)] + &a[(r, j)];
        a[(r, i)] = v;
    }
}

/// Killing form of `L` restricted to a subspace, on its echelon basis.
pub fn restricted_killing_form(l: &LieAlgebra, s: &Subspace) -> RatMatrix {
    gram(&s.basis().iter().map(|b| l.ad(b)).collect::<Vec<_>>())
}

/// True when the Killing form of `L` is negative definite on `s`.
pub fn is_compact_subspace(l: &LieAlgebra, s: &Subspace) -> bool {
    let (p, _, z) = signature(&restricted_killing_form(l, s));
    p == 0 && z == 0
}

pub fn killing_signature(l: &LieAlgebra, s: Option<&Subspace>) -> Result<(usize, usize, usize)> {
    Ok(signature(&match s {
        Some(s) => killing_form_of(l, s)?,
        None => killing_form(l),
    }))
}

/// True when the subalgebra's own Killing form is negative definite. The zero
/// subalgebra counts as negative definite.
pub fn is_negative_definite(l: &LieAlgebra, s: &Subspace) -> Result<bool> {
    let (p, _, z) = killing_signature(l, Some(s))?;
    Ok(p == 0 && z == 0)
}

pub fn derived_algebra(l: &LieAlgebra, s: &Subspace) -> Subspace {
    let b = s.basis();
    let mut v = vec![];
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            v.push(l.bracket(&b[i], &b[j]));
        }
    }
    Subspace::span(l.dim(), &v)
}

/// `s, [s,s], [[s,s],[s,s]], ...` down to the first repeated term.
pub fn derived_series(l: &LieAlgebra, s: &Subspace) -> Vec<Subspace> {
    let mut out = vec![s.clone()];
    loop {
        let next = derived_algebra(l, out.last().unwrap());
        if next == *out.last().unwrap() {
            return out;
        }
        let done = next.is_zero();
        out.push(next);
        if done {
            return out;
        }
    }
}

pub fn is_solvable(l: &LieAlgebra, s: &Subspace) -> bool {
    derived_series(l, s).last().unwrap().is_zero()
}

/// Elements of `L` commuting with every element of `s`.
pub fn centralizer(l: &LieAlgebra, s: &Subspace) -> Subspace {
    let n = l.dim();
    let mut m = RatMatrix::zeros(0, n);
    for b in s.basis() {
        m = m.vstack(&l.ad(b));
    }
    if m.nrows() == 0 {
        return Subspace::full(n);
    }
    Subspace::span(n, &m.kernel().into_iter().map(Element).collect::<Vec<_>>())
}

/// Elements of `L` normalizing `s`.
pub fn normalizer(l: &LieAlgebra, s: &Subspace) -> Subspace {
    let n = l.dim();
    let ann = s.annihilator();
    if ann.is_empty() {
        return Subspace::full(n);
    }
    let mut rows = vec![];
    for b in s.basis() {
        let adb = l.ad(b);
        for w in &ann {
            // w . [x, b] = -w . ad(b) x
            let row: Vec<Rational> = (0..n).map(|j| (0..n).fold(Rational::zero(), |acc, i| acc + &w[i] * &adb[(i, j)])).collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Subspace::full(n);
    }
    let m = RatMatrix::from_rows(&rows);
    Subspace::span(n, &m.kernel().into_iter().map(Element).collect::<Vec<_>>())
}

/// Center of a subalgebra.
pub fn center(l: &LieAlgebra, s: &Subspace) -> Subspace {
    let n = l.dim();
    let b = s.basis();
    let k = b.len();
    if k == 0 {
        return Subspace::zero(n);
    }
    let mut m = RatMatrix::zeros(n * k, k);
    for j in 0..k {
        for i in 0..k {
            let c = l.bracket(&b[i], &b[j]);
            for r in 0..n {
                m[(j * n + r, i)] = c.0[r].clone();
            }
        }
    }
    let vs: Vec<Element> = m.kernel().into_iter().map(|c| s.from_coords(&c)).collect();
    Subspace::span(n, &vs)
}

/// Solvable radical of a subalgebra: the Killing-orthogonal complement of its
/// derived algebra, taken with the subalgebra's own Killing form.
pub fn radical(l: &LieAlgebra, s: &Subspace) -> Result<Subspace> {
    let n = l.dim();
    if s.is_zero() {
        return Ok(Subspace::zero(n));
    }
    let k = killing_form_of(l, s)?;
    let d = derived_algebra(l, s);
    let rad = if d.is_zero() {
        s.clone()
    } else {
        let rows: Vec<Vec<Rational>> = d
            .basis()
            .iter()
            .map(|v| {
                let c = s.coords(v).expect("derived algebra lies in the subalgebra");
                k.mul_vec(&c)
            })
            .collect();
        let m = RatMatrix::from_rows(&rows);
        Subspace::span(n, &m.kernel().into_iter().map(|c| s.from_coords(&c)).collect::<Vec<_>>())
    };
    if !is_solvable(l, &rad) {
        return Err(LieError::Invariant("radical is not solvable".into()));
    }
    Ok(rad)
}

/// `(S, R)` with `R` the radical and `S` a semisimple subalgebra complementary
/// to it. The complement starts from the echelon rows of `s` independent of `R`
/// and is corrected along the derived series of `R` by linear solves.
pub fn levi_decomposition(l: &LieAlgebra, s: &Subspace) -> Result<(Subspace, Subspace)> {
    let n = l.dim();
    let r = radical(l, s)?;
    let mut x = r.complement_in(s);
    let m = x.len();
    if m == 0 {
        return Ok((Subspace::zero(n), r));
    }
    // structure constants of s/R on the images of x
    let mut gamma = vec![vec![vec![Rational::zero(); m]; m]; m];
    for a in 0..m {
        for b in a + 1..m {
            let mod_r = coords_mod(&r, &x, &l.bracket(&x[a], &x[b])).ok_or(LieError::NotASubalgebra)?;
            for (cc, v) in mod_r.into_iter().enumerate() {
                gamma[a][b][cc] = v.clone();
                gamma[b][a][cc] = -v;
            }
        }
    }
    let series = derived_series(l, &r);
    for level in 0..series.len() - 1 {
        let ri = &series[level];
        let rnext = &series[level + 1];
        let residual = |x: &[Element], a: usize, b: usize| -> Element {
            let mut v = l.bracket(&x[a], &x[b]);
            for (c, g) in gamma[a][b].iter().enumerate() {
                if !g.is_zero() {
                    v = v.axpy(&-g.clone(), &x[c]);
                }
            }
            v
        };
        let pairs: Vec<(usize, usize)> = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).collect();
        if pairs.iter().all(|&(a, b)| rnext.contains(&residual(&x, a, b))) {
            continue;
        }
        let di = ri.dim();
        let dn = rnext.dim();
        let ny = m * di;
        let cols = ny + pairs.len() * dn;
        let mut mat = RatMatrix::zeros(pairs.len() * n, cols);
        let mut rhs = vec![Rational::zero(); pairs.len() * n];
        for (p, &(a, b)) in pairs.iter().enumerate() {
            let res = residual(&x, a, b);
            for row in 0..n {
                rhs[p * n + row] = -res.0[row].clone();
            }
            for (t, y) in ri.basis().iter().enumerate() {
                // [x_a, y_b] + [y_a, x_b] - sum_c gamma_ab^c y_c
                let xa_y = l.bracket(&x[a], y);
                let y_xb = l.bracket(y, &x[b]);
                for row in 0..n {
                    let cb = b * di + t;
                    mat[(p * n + row, cb)] = &mat[(p * n + row, cb)] + &xa_y.0[row];
                    let ca = a * di + t;
                    mat[(p * n + row, ca)] = &mat[(p * n + row, ca)] + &y_xb.0[row];
                }
                for (c, g) in gamma[a][b].iter().enumerate() {
                    if g.is_zero() {
                        continue;
                    }
                    let cc = c * di + t;
                    for row in 0..n {
                        mat[(p * n + row, cc)] = &mat[(p * n + row, cc)] - g * &y.0[row];
                    }
                }
            }
            for (t, z) in rnext.basis().iter().enumerate() {
                let cz = ny + p * dn + t;
                for row in 0..n {
                    mat[(p * n + row, cz)] = z.0[row].clone();
                }
            }
        }
        let sol = mat
            .solve(&rhs)
            .ok_or_else(|| LieError::Invariant("Levi lifting system is inconsistent".into()))?;
        for (a, xa) in x.iter_mut().enumerate() {
            let ya = ri.from_coords(&sol[a * di..(a + 1) * di]);
            *xa = &*xa + &ya;
        }
    }
    let sub = Subspace::span(n, &x);
    if !is_subalgebra(l, &sub) || sub.dim() != m {
        return Err(LieError::Invariant("Levi complement is not a subalgebra".into()));
    }
    Ok((sub, r))
}

/// Coefficients of `v` on `x` modulo `r`, or `None` if `v` is outside `r + span(x)`.
fn coords_mod(r: &Subspace, x: &[Element], v: &Element) -> Option<Vec<Rational>> {
    let n = v.dim();
    let mut cols: Vec<Vec<Rational>> = x.iter().map(|e| e.0.clone()).collect();
    cols.extend(r.basis().iter().map(|e| e.0.clone()));
    let m = RatMatrix::from_cols(&cols, n);
    let sol = m.solve(&v.0)?;
    Some(sol[..x.len()].to_vec())
}

/// Smallest subalgebra containing the given elements.
pub fn subalgebra_generated(l: &LieAlgebra, gens: &[Element]) -> Subspace {
    let n = l.dim();
    let mut s = Subspace::span(n, gens);
    loop {
        let b = s.basis().to_vec();
        let mut extra = vec![];
        let mut acc = s.clone();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                let c = l.bracket(&b[i], &b[j]);
                if !acc.contains(&c) {
                    acc = acc.extend(std::slice::from_ref(&c));
                    extra.push(c);
                }
            }
        }
        if extra.is_empty() {
            return s;
        }
        s = acc;
    }
}

/// True when every element of the subalgebra is ad-nilpotent on `L`: the
/// associative algebra generated by `ad(s)` must kill `L` after `dim L` steps.
pub fn is_ad_nilpotent(l: &LieAlgebra, s: &Subspace) -> bool {
    let n = l.dim();
    let ads: Vec<RatMatrix> = s.basis().iter().map(|b| l.ad(b)).collect();
    let mut v = Subspace::full(n);
    for _ in 0..=n {
        if v.is_zero() {
            return true;
        }
        let mut img = vec![];
        for a in &ads {
            for b in v.basis() {
                img.push(Element(a.mul_vec(&b.0)));
            }
        }
        let next = Subspace::span(n, &img);
        if next == v {
            return false;
        }
        v = next;
    }
    v.is_zero()
}
