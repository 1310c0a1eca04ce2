use num_traits::{Signed, Zero};

use crate::error::{LieError, Result};
use crate::exactlin::{int, ExactScalar, RatMatrix, Rational};
use crate::liecore::{joint_eigenspaces, Element, LieAlgebra, Subspace, WeightSpace};

/// A root as its values on an ordered torus basis.
pub type Root = Vec<ExactScalar>;

#[derive(Clone, Debug, PartialEq)]
pub struct RootSpaceDecomposition {
    pub torus: Vec<Element>,
    /// Joint kernel of the torus in the ambient algebra.
    pub zero_space: Subspace,
    /// Nonzero roots with their root spaces, sorted by root.
    pub roots: Vec<WeightSpace>,
    /// Radicand of the field the roots live in, 0 when rational.
    pub extension: i64,
}

impl RootSpaceDecomposition {
    pub fn root_list(&self) -> Vec<Root> {
        self.roots.iter().map(|w| w.weight.clone()).collect()
    }

    pub fn space(&self, root: &Root) -> Option<&[Vec<ExactScalar>]> {
        self.roots.iter().find(|w| &w.weight == root).map(|w| w.space.as_slice())
    }

    pub fn multiplicity(&self, root: &Root) -> usize {
        self.space(root).map_or(0, |s| s.len())
    }

    /// Echelon basis of a root space when it is defined over Q.
    pub fn rational_space(&self, root: &Root) -> Option<Vec<Element>> {
        let sp = self.space(root)?;
        sp.iter()
            .map(|v| v.iter().map(|x| x.as_rational().cloned()).collect::<Option<Vec<_>>>().map(Element))
            .collect()
    }
}

fn decompose(l: &LieAlgebra, ambient: &Subspace, torus: &[Element]) -> Result<RootSpaceDecomposition> {
    let n = l.dim();
    let ws = joint_eigenspaces(l, ambient, torus)?;
    let mut zero_space = Subspace::zero(n);
    let mut roots = vec![];
    let mut d = 0;
    for w in ws {
        if w.weight.iter().all(|x| x.is_zero()) {
            let vecs: Vec<Element> = w
                .space
                .iter()
                .map(|v| Element(v.iter().map(|x| x.as_rational().cloned().expect("zero weight space is rational")).collect()))
                .collect();
            zero_space = Subspace::span(n, &vecs);
        } else {
            if let Some(x) = w.weight.iter().find(|x| x.d() != 0) {
                d = x.d();
            }
            roots.push(w);
        }
    }
    Ok(RootSpaceDecomposition { torus: torus.to_vec(), zero_space, roots, extension: d })
}

/// Roots of `L` with respect to an ordered Cartan basis, over `Q(sqrt(d))`.
pub fn root_space_decomposition(l: &LieAlgebra, cartan: &[Element]) -> Result<RootSpaceDecomposition> {
    decompose(l, &Subspace::full(l.dim()), cartan)
}

/// Real roots of a real torus acting on an ambient subalgebra.
pub fn restricted_roots(l: &LieAlgebra, ambient: &Subspace, torus: &[Element]) -> Result<RootSpaceDecomposition> {
    let r = decompose(l, ambient, torus)?;
    if r.roots.iter().any(|w| w.weight.iter().any(|x| !x.is_real())) {
        return Err(LieError::NotATorus("torus has non-real eigenvalues".into()));
    }
    Ok(r)
}

/// First nonzero coordinate is complex-positive.
pub fn is_positive(root: &[ExactScalar]) -> bool {
    root.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive())
}

pub fn positive_roots(rsd: &RootSpaceDecomposition) -> Vec<Root> {
    rsd.roots.iter().map(|w| w.weight.clone()).filter(|r| is_positive(r)).collect()
}

pub fn add_roots(a: &[ExactScalar], b: &[ExactScalar]) -> Root {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale_root(a: &[ExactScalar], k: i64) -> Root {
    let k = ExactScalar::rational(int(k));
    a.iter().map(|x| x * &k).collect()
}

pub fn neg_root(a: &[ExactScalar]) -> Root {
    a.iter().map(|x| -x.clone()).collect()
}

/// Positive roots that are not the sum of two positive roots, sorted.
pub fn simple_roots(positives: &[Root]) -> Vec<Root> {
    let mut out: Vec<Root> = positives
        .iter()
        .filter(|r| {
            !positives.iter().any(|a| {
                let rest: Root = r.iter().zip(a.iter()).map(|(x, y)| x - y).collect();
                positives.contains(&rest)
            })
        })
        .cloned()
        .collect();
    out.sort();
    out.dedup();
    out
}

/// `(i, j)` index pairs with `roots[j]` the complex conjugate of `roots[i]`.
pub fn conjugation_pairing(rsd: &RootSpaceDecomposition) -> Result<Vec<(usize, usize)>> {
    let roots = rsd.root_list();
    roots
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let c: Root = r.iter().map(|x| x.conj()).collect();
            roots
                .iter()
                .position(|s| *s == c)
                .map(|j| (i, j))
                .ok_or_else(|| LieError::Invariant("root system is not closed under conjugation".into()))
        })
        .collect()
}

/// Normalized `sl2` triple `(X, Y, H)` with `X` in the root space of `root`,
/// `[X, Y] = H`, `[H, X] = 2X` and `[H, Y] = -2Y`. `X` is the first echelon
/// vector of the root space; `Y` is the unique solution of `[X, Y] = H`,
/// `[H, Y] = -2Y` for an `H` built from the opposite root space.
pub fn sl2_triple(l: &LieAlgebra, rsd: &RootSpaceDecomposition, root: &Root) -> Result<(Element, Element, Element)> {
    let n = l.dim();
    let degenerate = || LieError::DegenerateRoot(format!("{root:?}"));
    let xs = rsd.rational_space(root).ok_or_else(degenerate)?;
    let ws = rsd.rational_space(&neg_root(root)).ok_or_else(degenerate)?;
    let x = xs.first().ok_or_else(degenerate)?.clone();
    // [[X, y], X] = 2X for y in the opposite root space
    let cols: Vec<Vec<Rational>> = ws.iter().map(|w| l.bracket(&l.bracket(&x, w), &x).0).collect();
    let m = RatMatrix::from_cols(&cols, n);
    let coef = m.solve(&x.scale(&int(2)).0).ok_or_else(degenerate)?;
    let y1 = Element::lin_comb(n, &coef.into_iter().zip(ws.iter()).collect::<Vec<_>>());
    let h = l.bracket(&x, &y1);
    // [X, Y] = H and (ad H + 2) Y = 0
    let sys = l.ad(&x).vstack(&l.ad(&h).shift(&int(-2)));
    let mut rhs = h.0.clone();
    rhs.extend(std::iter::repeat(Rational::zero()).take(n));
    let y = Element(sys.solve(&rhs).ok_or_else(degenerate)?);
    Ok((x, y, h))
}

/// `X` and `Y0`, the first echelon vectors of the root spaces of `root` and
/// `-root`, together with `c` in `[[X, Y0], X] = c X`.
pub fn root_pair(l: &LieAlgebra, rsd: &RootSpaceDecomposition, root: &Root) -> Result<(Element, Element, Rational)> {
    let degenerate = || LieError::DegenerateRoot(format!("{root:?}"));
    let x = rsd.rational_space(root).and_then(|v| v.into_iter().next()).ok_or_else(degenerate)?;
    let y = rsd.rational_space(&neg_root(root)).and_then(|v| v.into_iter().next()).ok_or_else(degenerate)?;
    let hx = l.bracket(&l.bracket(&x, &y), &x);
    let p = x.0.iter().position(|c| !c.is_zero()).ok_or_else(degenerate)?;
    let c = &hx.0[p] / &x.0[p];
    if c.is_zero() || hx != x.scale(&c) {
        return Err(degenerate());
    }
    Ok((x, y, c))
}

/// The element `X - Y` of the rotation generator of an `sl2`, with `Y = +-Y0`
/// chosen so that `[[X, Y], X]` is a positive multiple of `X`.
pub fn circle_element(l: &LieAlgebra, rsd: &RootSpaceDecomposition, root: &Root) -> Result<Element> {
    let (x, y0, c) = root_pair(l, rsd, root)?;
    Ok(if c.is_positive() { &x - &y0 } else { &x + &y0 })
}
