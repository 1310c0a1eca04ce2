use std::collections::BTreeSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::mpoly::MPoly;
use crate::error::{LieError, Result};
use crate::exactlin::{format_rational, parse_rational, RatMatrix, Rational};
use crate::liecore::{Element, LieAlgebra};

/// Polynomial vector field `sum_i c_i(x) d/dx_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyVectorField {
    pub name: String,
    pub components: Vec<MPoly>,
}

impl PolyVectorField {
    pub fn nvars(&self) -> usize {
        self.components.len()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        PolyVectorField { name: self.name.clone(), components: self.components.iter().map(|c| c.scale(s)).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        PolyVectorField {
            name: self.name.clone(),
            components: self.components.iter().zip(&o.components).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, x: &[Rational]) -> Vec<Rational> {
        self.components.iter().map(|c| c.eval(x)).collect()
    }
}

/// Lie bracket `[V, W]_i = sum_j (V_j dW_i/dx_j - W_j dV_i/dx_j)`.
pub fn vf_bracket(v: &PolyVectorField, w: &PolyVectorField) -> PolyVectorField {
    let n = v.nvars();
    let components = (0..n)
        .map(|i| {
            let mut acc = MPoly::zero(n);
            for j in 0..n {
                acc = acc.add(&v.components[j].mul(&w.components[i].diff(j)));
                acc = acc.sub(&w.components[j].mul(&v.components[i].diff(j)));
            }
            acc
        })
        .collect();
    PolyVectorField { name: format!("[{},{}]", v.name, w.name), components }
}

/// Named variables with a list of polynomial vector fields over them.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldSet {
    pub vars: Vec<String>,
    pub fields: Vec<PolyVectorField>,
}

impl FieldSet {
    pub fn names(&self) -> Vec<String> {
        self.fields.iter().map(|f| f.name.clone()).collect()
    }

    pub fn by_name(&self, name: &str) -> Option<&PolyVectorField> {
        self.fields.iter().find(|f| f.name == name)
    }

    /// The field `sum_k x_k F_k` for an element given in field coordinates.
    pub fn combine(&self, x: &Element) -> PolyVectorField {
        let n = self.vars.len();
        let mut acc = PolyVectorField { name: String::new(), components: vec![MPoly::zero(n); n] };
        for (c, f) in x.0.iter().zip(&self.fields) {
            if !c.is_zero() {
                acc = acc.add(&f.scale(c));
            }
        }
        acc
    }

    /// Monomial keys `(component, exponents)` used by any field, in order.
    fn keys(&self, extra: &[&PolyVectorField]) -> Vec<(usize, Vec<u32>)> {
        let mut keys = BTreeSet::new();
        for f in self.fields.iter().chain(extra.iter().copied()) {
            for (i, c) in f.components.iter().enumerate() {
                for (e, _) in c.terms() {
                    keys.insert((i, e.clone()));
                }
            }
        }
        keys.into_iter().collect()
    }

    pub fn to_json(&self) -> FieldSetJson {
        FieldSetJson {
            vars: self.vars.clone(),
            fields: self
                .fields
                .iter()
                .map(|f| FieldJson {
                    name: f.name.clone(),
                    components: f
                        .components
                        .iter()
                        .map(|c| c.terms().map(|(e, r)| (e.clone(), format_rational(r))).collect())
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &FieldSetJson) -> Result<Self> {
        let n = j.vars.len();
        let mut fields = vec![];
        for f in &j.fields {
            if f.components.len() != n {
                return Err(LieError::DimensionMismatch { expected: n, got: f.components.len() });
            }
            let mut comps = vec![];
            for c in &f.components {
                let mut terms = vec![];
                for (e, r) in c {
                    if e.len() != n {
                        return Err(LieError::DimensionMismatch { expected: n, got: e.len() });
                    }
                    terms.push((e.clone(), parse_rational(r)?));
                }
                comps.push(MPoly::from_terms(n, terms));
            }
            fields.push(PolyVectorField { name: f.name.clone(), components: comps });
        }
        Ok(FieldSet { vars: j.vars.clone(), fields })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct FieldJson {
    pub name: String,
    /// One list of `[exponents, coefficient]` terms per variable.
    pub components: Vec<Vec<(Vec<u32>, String)>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct FieldSetJson {
    pub vars: Vec<String>,
    pub fields: Vec<FieldJson>,
}

/// Structure constants of the span of the fields, which must be linearly
/// independent and closed under the bracket.
pub fn structure_constants(set: &FieldSet) -> Result<LieAlgebra> {
    let m = set.fields.len();
    let mut brackets = vec![];
    for i in 0..m {
        for j in i + 1..m {
            brackets.push((i, j, vf_bracket(&set.fields[i], &set.fields[j])));
        }
    }
    let extra: Vec<&PolyVectorField> = brackets.iter().map(|(_, _, b)| b).collect();
    let keys = set.keys(&extra);
    let flatten = |f: &PolyVectorField| -> Vec<Rational> { keys.iter().map(|(i, e)| f.components[*i].coeff(e)).collect() };
    let cols: Vec<Vec<Rational>> = set.fields.iter().map(flatten).collect();
    let basis = RatMatrix::from_cols(&cols, keys.len());
    if basis.rank() != m {
        return Err(LieError::Invariant("vector fields are linearly dependent".into()));
    }
    let mut table = vec![];
    for (i, j, b) in &brackets {
        if b.is_zero() {
            continue;
        }
        let c = basis
            .solve(&flatten(b))
            .ok_or_else(|| LieError::NotClosed(set.fields[*i].name.clone(), set.fields[*j].name.clone()))?;
        let terms: Vec<(usize, Rational)> = c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
        table.push((*i, *j, terms));
    }
    LieAlgebra::new(set.names(), &table)
}
