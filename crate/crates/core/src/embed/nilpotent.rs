use num_traits::Signed;

use super::search::{find_real_semisimple, SearchConfig};
use super::torus::{embed_real_torus, CartanData, RealTorusEmbedding};
use super::trace::EmbeddingTrace;
use crate::error::{LieError, Result};
use crate::exactlin::{eigenvalues, RatMatrix};
use crate::liecore::{
    centralizer, derived_algebra, is_abelian, is_ad_nilpotent, is_negative_definite, is_subalgebra,
    jordan_decomposition, levi_decomposition, normalizer, restricted_ad, torus_split, Element, LieAlgebra, Subspace,
};

#[derive(Clone, Debug)]
pub struct NilpotentEmbedding {
    pub nilpotent: Subspace,
    /// Real part of a torus complementary to the result in the radical of its
    /// normalizer.
    pub torus: Subspace,
    /// The full complementary torus, real and compact parts together.
    pub complement_torus: Subspace,
    pub split_cartan: CartanData,
    pub trace: EmbeddingTrace,
    pub torus_trace: EmbeddingTrace,
}

/// Nilpotent parts of the given elements that fall outside `u`.
fn nilpotent_parts(l: &LieAlgebra, u: &Subspace, elems: &[Element]) -> Result<Vec<Element>> {
    let mut out: Vec<Element> = vec![];
    let mut acc = u.clone();
    for v in elems {
        let (_, xn) = jordan_decomposition(l, v)?;
        if !xn.is_zero() && !acc.contains(&xn) {
            acc = acc.extend(std::slice::from_ref(&xn));
            out.push(xn);
        }
    }
    Ok(out)
}

/// Eigenvectors of `ad(alpha)` on `s` for positive eigenvalues, grouped by
/// eigenvalue from the largest down, in the coordinates of `L`.
fn positive_eigenspaces(l: &LieAlgebra, s: &Subspace, alpha: &Element) -> Result<Vec<Vec<Element>>> {
    let m: RatMatrix = restricted_ad(l, s, alpha)?;
    let mut eig: Vec<_> = eigenvalues(&m)?
        .into_iter()
        .filter_map(|(e, _)| e.as_rational().filter(|r| r.is_positive()).cloned())
        .collect();
    eig.sort();
    eig.reverse();
    Ok(eig
        .iter()
        .map(|r| m.shift(r).kernel().iter().map(|c| s.from_coords(c)).collect())
        .collect())
}

fn check_nilpotent_input(l: &LieAlgebra, u: &Subspace) -> Result<()> {
    if !is_subalgebra(l, u) {
        return Err(LieError::NotASubalgebra);
    }
    if !is_ad_nilpotent(l, u) {
        return Err(LieError::NotNilpotent);
    }
    Ok(())
}

/// Enlarges an abelian subalgebra of ad-nilpotent elements to a maximal one.
/// With `Z(U) = S + R` the Levi decomposition of the centralizer: adjoin one
/// element of `R'` outside `U`; otherwise adjoin one nilpotent part of an
/// element of `R` outside `U`; otherwise, when `S` has an indefinite Killing
/// form, adjoin the top eigenspace of `ad(alpha)` on `S` for a real
/// semisimple `alpha`. Stops when none applies.
pub fn embed_abelian_nilpotent(l: &LieAlgebra, u: &Subspace, cfg: SearchConfig) -> Result<EmbeddingTrace> {
    check_nilpotent_input(l, u)?;
    if !is_abelian(l, u) {
        return Err(LieError::NotAbelian);
    }
    let mut trace = EmbeddingTrace::new("abelian-nilpotent", u);
    for _ in 0..=l.dim() {
        let cur = trace.result.clone();
        let z = centralizer(l, &cur);
        let (s, r) = levi_decomposition(l, &z)?;
        let rd = derived_algebra(l, &r);
        if let Some(x) = cur.complement_in(&cur.sum(&rd)).into_iter().next() {
            trace.push("abelian-nilpotent/adjoin-derived", vec![x], None);
            continue;
        }
        if let Some(x) = nilpotent_parts(l, &cur, &cur.complement_in(&r))?.into_iter().next() {
            trace.push("abelian-nilpotent/jordan-nilpotent", vec![x], None);
            continue;
        }
        if !is_negative_definite(l, &s)? {
            let alpha = find_real_semisimple(l, &s, cfg)?;
            let top = positive_eigenspaces(l, &s, &alpha)?
                .into_iter()
                .next()
                .ok_or_else(|| LieError::Invariant("real semisimple element acts trivially on S".into()))?;
            trace.push("abelian-nilpotent/eigenvector", top, Some(alpha));
            continue;
        }
        if !is_abelian(l, &trace.result) || !is_ad_nilpotent(l, &trace.result) {
            return Err(LieError::Invariant("result is not abelian and ad-nilpotent".into()));
        }
        return Ok(trace);
    }
    Err(LieError::Invariant("abelian nilpotent loop exceeded its iteration bound".into()))
}

/// Enlarges a subalgebra of ad-nilpotent elements to a maximal one. With
/// `N(U) = S + R`: adjoin `R'`; then the nilpotent parts of a complement of
/// `U` in `R`; then, when `S` has an indefinite Killing form, the positive
/// eigenvectors of `ad(alpha)` on `S` for a real semisimple `alpha`. At the end
/// a torus complementary to `U` in `R` is built and its real part is enlarged
/// to a maximally split Cartan subalgebra.
pub fn embed_nilpotent(l: &LieAlgebra, u: &Subspace, cfg: SearchConfig) -> Result<NilpotentEmbedding> {
    check_nilpotent_input(l, u)?;
    let mut trace = EmbeddingTrace::new("nilpotent", u);
    let mut rad = None;
    for _ in 0..=l.dim() {
        let cur = trace.result.clone();
        let nu = normalizer(l, &cur);
        let (s, r) = levi_decomposition(l, &nu)?;
        let rd = derived_algebra(l, &r);
        let extra = cur.complement_in(&cur.sum(&rd));
        if !extra.is_empty() {
            trace.push("nilpotent/adjoin-derived", extra, None);
            continue;
        }
        let nil = nilpotent_parts(l, &cur, &cur.complement_in(&r))?;
        if !nil.is_empty() {
            trace.push("nilpotent/jordan-nilpotent", nil, None);
            continue;
        }
        if !is_negative_definite(l, &s)? {
            let alpha = find_real_semisimple(l, &s, cfg)?;
            let pos: Vec<Element> = positive_eigenspaces(l, &s, &alpha)?.into_iter().flatten().collect();
            if pos.is_empty() {
                return Err(LieError::Invariant("real semisimple element acts trivially on S".into()));
            }
            trace.push("nilpotent/eigenvector", pos, Some(alpha));
            continue;
        }
        rad = Some(r);
        break;
    }
    let r = rad.ok_or_else(|| LieError::Invariant("nilpotent loop exceeded its iteration bound".into()))?;
    let result = trace.result.clone();
    if !is_subalgebra(l, &result) || !is_ad_nilpotent(l, &result) {
        return Err(LieError::Invariant("result is not an ad-nilpotent subalgebra".into()));
    }
    let complement_torus = complementary_torus(l, &result, &r)?;
    let (torus, _) = torus_split(l, &complement_torus)?;
    let RealTorusEmbedding { cartan, trace: torus_trace, .. } = embed_real_torus(l, &torus, cfg)?;
    Ok(NilpotentEmbedding { nilpotent: result, torus, complement_torus, split_cartan: cartan, trace, torus_trace })
}

/// A torus `T` with `R = U + T`, for `U` an ideal of the solvable `R` with
/// `R/U` abelian and semisimple: semisimple parts of complement elements are
/// taken one at a time, each inside the centralizer of those already chosen.
pub fn complementary_torus(l: &LieAlgebra, u: &Subspace, r: &Subspace) -> Result<Subspace> {
    let n = l.dim();
    let mut t = Subspace::zero(n);
    let target = r.dim() - u.dim();
    while t.dim() < target {
        let pool = centralizer(l, &t).intersect(r);
        let next = u
            .sum(&t)
            .complement_in(&pool)
            .into_iter()
            .next()
            .ok_or_else(|| LieError::Invariant("no complement element commutes with the torus".into()))?;
        let (xs, _) = jordan_decomposition(l, &next)?;
        if u.sum(&t).contains(&xs) {
            return Err(LieError::Invariant("semisimple part falls into U".into()));
        }
        t = t.extend(&[xs]);
    }
    if !is_abelian(l, &t) {
        return Err(LieError::NotATorus("complementary torus is not abelian".into()));
    }
    Ok(t)
}
