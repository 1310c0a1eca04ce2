use serde::{Deserialize, Serialize};

use super::search::{find_compact, find_real_semisimple, SearchConfig};
use super::trace::EmbeddingTrace;
use crate::error::{LieError, Result};
use crate::liecore::{
    center, centralizer, derived_algebra, is_abelian, is_negative_definite, torus_split, Element, LieAlgebra,
    Subspace,
};

/// A Cartan subalgebra with its real and compact parts.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CartanData {
    pub cartan: Subspace,
    pub real_part: Subspace,
    pub compact_part: Subspace,
}

impl CartanData {
    pub fn from_cartan(l: &LieAlgebra, cartan: Subspace) -> Result<Self> {
        let (real_part, compact_part) = torus_split(l, &cartan)?;
        if real_part.sum(&compact_part) != cartan {
            return Err(LieError::NotATorus("Cartan subalgebra is not the sum of its real and compact parts".into()));
        }
        Ok(CartanData { cartan, real_part, compact_part })
    }

    /// Basis with the real part first, then the compact part.
    pub fn ordered_basis(&self) -> Vec<Element> {
        self.real_part.basis().iter().chain(self.compact_part.basis()).cloned().collect()
    }
}

#[derive(Clone, Debug)]
pub struct RealTorusEmbedding {
    pub torus: Subspace,
    pub cartan: CartanData,
    pub trace: EmbeddingTrace,
}

fn check_real_torus(l: &LieAlgebra, a: &Subspace) -> Result<()> {
    if !is_abelian(l, a) {
        return Err(LieError::NotATorus("elements do not commute".into()));
    }
    let (re, _) = torus_split(l, a)?;
    if re != *a {
        return Err(LieError::NotATorus("some element has non-real eigenvalues".into()));
    }
    Ok(())
}

fn check_compact_torus(l: &LieAlgebra, t: &Subspace) -> Result<()> {
    if !is_abelian(l, t) {
        return Err(LieError::NotATorus("elements do not commute".into()));
    }
    let (_, im) = torus_split(l, t)?;
    if im != *t {
        return Err(LieError::NotATorus("some element is not compact".into()));
    }
    Ok(())
}

/// Radicand of the field holding the eigenvalues of a torus, if any is irrational.
fn torus_field(l: &LieAlgebra, t: &Subspace) -> Result<Option<i64>> {
    let ws = crate::liecore::joint_eigenspaces(l, &Subspace::full(l.dim()), t.basis())?;
    Ok(ws.iter().flat_map(|w| w.weight.iter()).map(|x| x.d()).find(|&d| d != 0))
}

/// Enlarges a real torus to a maximal one and then to a maximally real Cartan
/// subalgebra. While the derived algebra of the centralizer has an indefinite
/// Killing form, a real semisimple element of it is adjoined; the real part of
/// the center of the final centralizer is the maximal real torus. A maximal
/// torus of the remaining compact derived algebra completes the Cartan.
pub fn embed_real_torus(l: &LieAlgebra, a: &Subspace, cfg: SearchConfig) -> Result<RealTorusEmbedding> {
    check_real_torus(l, a)?;
    let mut trace = EmbeddingTrace::new("real-torus", a);
    let mut z;
    loop {
        z = centralizer(l, &trace.result);
        let d = derived_algebra(l, &z);
        if is_negative_definite(l, &d)? {
            break;
        }
        let x = find_real_semisimple(l, &d, cfg)?;
        trace.push("real-torus/adjoin-real-semisimple", vec![x], None);
        if trace.steps.len() > l.dim() {
            return Err(LieError::Invariant("real torus loop exceeded its iteration bound".into()));
        }
    }
    let (re, _) = torus_split(l, &center(l, &z))?;
    let extra = trace.result.complement_in(&re);
    if !extra.is_empty() {
        trace.push("real-torus/center-real-part", extra, None);
    }
    if trace.result != re {
        return Err(LieError::Invariant("real torus is not the real part of its centralizer's center".into()));
    }
    let (cartan, _) = saturate_compact(l, &center(l, &z), None, cfg)?;
    let cartan = CartanData::from_cartan(l, cartan)?;
    if cartan.real_part != re {
        return Err(LieError::Invariant("Cartan real part differs from the maximal real torus".into()));
    }
    Ok(RealTorusEmbedding { torus: re, cartan, trace })
}

/// Adjoins compact elements of the centralizer's derived algebra until the
/// centralizer is abelian; returns that centralizer and the adjoined elements.
fn saturate_compact(
    l: &LieAlgebra,
    start: &Subspace,
    field: Option<i64>,
    cfg: SearchConfig,
) -> Result<(Subspace, Vec<Element>)> {
    let mut t = start.clone();
    let mut field = match field {
        Some(d) => Some(d),
        None => torus_field(l, &t)?.filter(|d| *d < 0),
    };
    let mut added = vec![];
    loop {
        let z = centralizer(l, &t);
        let d = derived_algebra(l, &z);
        if d.is_zero() {
            return Ok((z, added));
        }
        let x = find_compact(l, &d, field, cfg)?;
        if field.is_none() {
            field = Some(crate::liecore::classify_element(l, &x)?.extension);
        }
        t = t.extend(std::slice::from_ref(&x));
        added.push(x);
        if added.len() > l.dim() {
            return Err(LieError::Invariant("compact torus loop exceeded its iteration bound".into()));
        }
    }
}

/// Enlarges a compact torus to a maximally compact Cartan subalgebra by
/// adjoining compact elements from the derived algebra of its centralizer.
/// The trace ends at the compact part of the Cartan subalgebra.
pub fn embed_compact_torus(l: &LieAlgebra, t: &Subspace, cfg: SearchConfig) -> Result<(CartanData, EmbeddingTrace)> {
    check_compact_torus(l, t)?;
    let mut trace = EmbeddingTrace::new("compact-torus", t);
    let (cartan, added) = saturate_compact(l, t, None, cfg)?;
    for x in added {
        trace.push("compact-torus/adjoin-compact", vec![x], None);
    }
    let cartan = CartanData::from_cartan(l, cartan)?;
    let extra = trace.result.complement_in(&cartan.compact_part);
    if !extra.is_empty() {
        trace.push("compact-torus/centralizer-compact-part", extra, None);
    }
    Ok((cartan, trace))
}
