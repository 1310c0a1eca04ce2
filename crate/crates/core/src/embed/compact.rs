use super::torus::CartanData;
use crate::error::{LieError, Result};
use crate::liecore::{
    is_compact_subspace, is_subalgebra, rational_parts, subalgebra_generated, Element, LieAlgebra, Subspace,
};
use crate::rootsys::{
    circle_element, is_positive, positive_roots, root_space_decomposition, simple_roots, Root, RootSpaceDecomposition,
};

/// Maximal compact subalgebra of a split algebra, generated by the circle
/// elements `X - Y` of the simple roots of a split Cartan subalgebra.
/// `positives` fixes the positive system; when `None` the lexicographic one
/// on the Cartan basis is used. Returns the generators and the generated
/// subalgebra.
pub fn maximal_compact_split(
    l: &LieAlgebra,
    cartan: &CartanData,
    rsd: &RootSpaceDecomposition,
    positives: Option<&[Root]>,
) -> Result<(Vec<Element>, Subspace)> {
    if !cartan.compact_part.is_zero() {
        return Err(LieError::NotSplit(format!("Cartan subalgebra has a compact part of dimension {}", cartan.compact_part.dim())));
    }
    if rsd.roots.iter().any(|w| w.weight.iter().any(|x| x.d() != 0)) {
        return Err(LieError::NotSplit("roots are not rational".into()));
    }
    let pos = positives.map_or_else(|| positive_roots(rsd), <[Root]>::to_vec);
    let gens: Vec<Element> = simple_roots(&pos).iter().map(|r| circle_element(l, rsd, r)).collect::<Result<_>>()?;
    let k = subalgebra_generated(l, &gens);
    if !is_compact_subspace(l, &k) {
        return Err(LieError::Invariant("circle elements generate a non-compact subalgebra".into()));
    }
    Ok((gens, k))
}

/// Real and imaginary parts of a root vector as rational elements.
pub fn root_vector_parts(v: &[crate::exactlin::ExactScalar]) -> (Element, Element) {
    let (a, b) = rational_parts(v);
    (Element(a), Element(b))
}

/// Compact subalgebra generated by the real and imaginary parts of the root
/// vectors of one root, when that subalgebra is compact.
pub fn compact_root_algebra(l: &LieAlgebra, space: &[Vec<crate::exactlin::ExactScalar>]) -> Option<Subspace> {
    let gens: Vec<Element> = space
        .iter()
        .flat_map(|v| {
            let (a, b) = root_vector_parts(v);
            [a, b]
        })
        .filter(|e| !e.is_zero())
        .collect();
    let g = subalgebra_generated(l, &gens);
    is_compact_subspace(l, &g).then_some(g)
}

/// Maximal compact subalgebra containing a compact Cartan subalgebra: the
/// Cartan subalgebra plus the real and imaginary parts of the root vectors of
/// every root whose root algebra is compact.
pub fn maximal_compact_from_cartan(l: &LieAlgebra, cartan: &CartanData) -> Result<Subspace> {
    if !cartan.real_part.is_zero() {
        return Err(LieError::NotATorus("Cartan subalgebra has a real part".into()));
    }
    let rsd = root_space_decomposition(l, cartan.cartan.basis())?;
    let mut k = cartan.cartan.clone();
    for w in rsd.roots.iter().filter(|w| is_positive(&w.weight)) {
        if let Some(g) = compact_root_algebra(l, &w.space) {
            k = k.sum(&g);
        }
    }
    if !is_subalgebra(l, &k) || !is_compact_subspace(l, &k) {
        return Err(LieError::Invariant("compact roots do not span a compact subalgebra".into()));
    }
    Ok(k)
}
