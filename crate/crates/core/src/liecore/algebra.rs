use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{LieError, Result};
use crate::exactlin::scalar::rational_vec_serde;
use crate::exactlin::{format_rational, parse_rational, RatMatrix, Rational};

/// Coordinates of a Lie algebra element in the algebra's basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element(#[serde(with = "rational_vec_serde")] pub Vec<Rational>);

impl Element {
    pub fn zero(n: usize) -> Self {
        Element(vec![Rational::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = Self::zero(n);
        e.0[i] = Rational::one();
        e
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Element(self.0.iter().map(|c| c * s).collect())
    }

    /// `self + s * o`.
    pub fn axpy(&self, s: &Rational, o: &Self) -> Self {
        Element(self.0.iter().zip(&o.0).map(|(a, b)| a + s * b).collect())
    }

    pub fn lin_comb(n: usize, terms: &[(Rational, &Element)]) -> Self {
        terms.iter().fold(Self::zero(n), |acc, (c, e)| acc.axpy(c, e))
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, o: &Element) -> Element {
        Element(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, o: &Element) -> Element {
        Element(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element(self.0.iter().map(|a| -a).collect())
    }
}

/// Real Lie algebra given by rational structure constants on a named basis.
#[derive(Clone)]
pub struct LieAlgebra {
    names: Vec<String>,
    /// `table[i][j]` holds the nonzero coefficients of `[e_i, e_j]`.
    table: Vec<Vec<Vec<(usize, Rational)>>>,
    ad_basis: Vec<RatMatrix>,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra(dim {}, basis {:?})", self.dim(), self.names)
    }
}

impl LieAlgebra {
    /// Builds an algebra from brackets `[e_i, e_j] = sum c_k e_k`. Each unordered
    /// pair may be given once in either order, or in both orders if the two
    /// entries are negatives of each other. Antisymmetry and Jacobi are checked.
    pub fn new(names: Vec<String>, brackets: &[(usize, usize, Vec<(usize, Rational)>)]) -> Result<Self> {
        let n = names.len();
        let mut dense: Vec<Vec<Option<Vec<Rational>>>> = vec![vec![None; n]; n];
        for (i, j, c) in brackets {
            let (i, j) = (*i, *j);
            if i >= n || j >= n {
                return Err(LieError::DimensionMismatch { expected: n, got: i.max(j) + 1 });
            }
            let mut v = vec![Rational::zero(); n];
            for (k, x) in c {
                if *k >= n {
                    return Err(LieError::DimensionMismatch { expected: n, got: k + 1 });
                }
                v[*k] = &v[*k] + x;
            }
            if i == j {
                if v.iter().any(|x| !x.is_zero()) {
                    return Err(LieError::NotAntisymmetric(i, j));
                }
                continue;
            }
            let neg: Vec<Rational> = v.iter().map(|x| -x).collect();
            for (a, b, val) in [(i, j, v), (j, i, neg)] {
                match &dense[a][b] {
                    Some(prev) if *prev != val => return Err(LieError::NotAntisymmetric(i, j)),
                    _ => dense[a][b] = Some(val),
                }
            }
        }
        let table: Vec<Vec<Vec<(usize, Rational)>>> = dense
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|c| {
                        c.map(|v| v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
                            .unwrap_or_default()
                    })
                    .collect()
            })
            .collect();
        let ad_basis = (0..n)
            .map(|i| {
                let mut m = RatMatrix::zeros(n, n);
                for j in 0..n {
                    for (k, c) in &table[i][j] {
                        m[(*k, j)] = c.clone();
                    }
                }
                m
            })
            .collect();
        let alg = LieAlgebra { names, table, ad_basis };
        alg.check_jacobi()?;
        Ok(alg)
    }

    /// From dense structure constants `c[i][j][k]`; checked like `new`.
    pub fn from_dense(names: Vec<String>, c: &[Vec<Vec<Rational>>]) -> Result<Self> {
        let n = names.len();
        let mut br = vec![];
        for i in 0..n {
            for j in 0..n {
                let terms: Vec<(usize, Rational)> =
                    c[i][j].iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k, x.clone())).collect();
                if !terms.is_empty() {
                    br.push((i, j, terms));
                }
            }
        }
        Self::new(names, &br)
    }

    fn check_jacobi(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                let eij = self.bracket_basis(i, j);
                for k in j + 1..n {
                    let a = self.bracket(&Element::unit(n, i), &self.bracket_basis(j, k));
                    let b = self.bracket(&Element::unit(n, j), &self.bracket_basis(k, i));
                    let c = self.bracket(&Element::unit(n, k), &eij);
                    if !(&(&a + &b) + &c).is_zero() {
                        return Err(LieError::JacobiViolation(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn basis(&self, i: usize) -> Element {
        Element::unit(self.dim(), i)
    }

    pub fn named(&self, name: &str) -> Element {
        self.basis(self.index_of(name).unwrap_or_else(|| panic!("no basis element {name}")))
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Element {
        let mut e = Element::zero(self.dim());
        for (k, c) in &self.table[i][j] {
            e.0[*k] = c.clone();
        }
        e
    }

    /// Nonzero structure constants `c_ij^k` for `i < j`.
    pub fn structure_constants(&self) -> Vec<(usize, usize, Vec<(usize, Rational)>)> {
        let n = self.dim();
        let mut out = vec![];
        for i in 0..n {
            for j in i + 1..n {
                if !self.table[i][j].is_empty() {
                    out.push((i, j, self.table[i][j].clone()));
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &Element, y: &Element) -> Element {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.0.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.0.iter().enumerate() {
                if yj.is_zero() || self.table[i][j].is_empty() {
                    continue;
                }
                let s = xi * yj;
                for (k, c) in &self.table[i][j] {
                    out[*k] = &out[*k] + &s * c;
                }
            }
        }
        Element(out)
    }

    /// Matrix of `ad(x)` acting on coordinate columns.
    pub fn ad(&self, x: &Element) -> RatMatrix {
        let n = self.dim();
        let mut m = RatMatrix::zeros(n, n);
        for (i, xi) in x.0.iter().enumerate() {
            if !xi.is_zero() {
                m = m.add(&self.ad_basis[i].scale(xi));
            }
        }
        m
    }

    pub fn ad_basis(&self, i: usize) -> &RatMatrix {
        &self.ad_basis[i]
    }

    pub fn format_element(&self, x: &Element) -> String {
        let mut s = String::new();
        for (i, c) in x.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if neg {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            if !a.is_one() {
                s.push_str(&format_rational(&a));
                s.push('*');
            }
            s.push_str(&self.names[i]);
        }
        if s.is_empty() {
            "0".into()
        } else {
            s
        }
    }

    /// Parses linear combinations such as `e12+1/2*e5` or `-e6 + e13`.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let n = self.dim();
        let src: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(LieError::Parse("empty element".into()));
        }
        if src == "0" {
            return Ok(Element::zero(n));
        }
        let mut by_len: Vec<usize> = (0..n).collect();
        by_len.sort_by_key(|&i| std::cmp::Reverse(self.names[i].len()));
        let mut out = Element::zero(n);
        let mut rest = src.as_str();
        while !rest.is_empty() {
            let mut sign = Rational::one();
            while let Some(c) = rest.chars().next().filter(|c| *c == '+' || *c == '-') {
                if c == '-' {
                    sign = -sign;
                }
                rest = &rest[1..];
            }
            let num_len = rest.find(|c: char| !(c.is_ascii_digit() || c == '/')).unwrap_or(rest.len());
            let coef = if num_len > 0 { parse_rational(&rest[..num_len])? } else { Rational::one() };
            rest = &rest[num_len..];
            rest = rest.strip_prefix('*').unwrap_or(rest);
            let idx = by_len
                .iter()
                .copied()
                .find(|&i| rest.starts_with(self.names[i].as_str()))
                .ok_or_else(|| LieError::Parse(format!("unknown basis element in '{text}'")))?;
            rest = &rest[self.names[idx].len()..];
            out.0[idx] = &out.0[idx] + sign * coef;
            if !(rest.is_empty() || rest.starts_with('+') || rest.starts_with('-')) {
                return Err(LieError::Parse(format!("unexpected text in '{text}'")));
            }
        }
        Ok(out)
    }

    /// Comma separated list of elements.
    pub fn parse_elements(&self, text: &str) -> Result<Vec<Element>> {
        if text.trim().is_empty() {
            return Ok(vec![]);
        }
        text.split(',').map(|t| self.parse_element(t)).collect()
    }

    pub fn to_json(&self) -> AlgebraJson {
        AlgebraJson {
            dim: self.dim(),
            basis: self.names.clone(),
            brackets: self
                .structure_constants()
                .into_iter()
                .map(|(i, j, c)| BracketJson {
                    i,
                    j,
                    c: c.into_iter().map(|(k, x)| (k.to_string(), format_rational(&x))).collect(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &AlgebraJson) -> Result<Self> {
        if j.basis.len() != j.dim {
            return Err(LieError::DimensionMismatch { expected: j.dim, got: j.basis.len() });
        }
        let mut br = vec![];
        for b in &j.brackets {
            let mut terms = vec![];
            for (k, v) in &b.c {
                let k: usize = k.parse().map_err(|_| LieError::Parse(format!("bad index '{k}'")))?;
                terms.push((k, parse_rational(v)?));
            }
            br.push((b.i, b.j, terms));
        }
        Self::new(j.basis.clone(), &br)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: AlgebraJson = serde_json::from_str(s).map_err(|e| LieError::Parse(e.to_string()))?;
        Self::from_json(&j)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct BracketJson {
    pub i: usize,
    pub j: usize,
    pub c: BTreeMap<String, String>,
}

/// Serialized form: zero-based indices, only nonzero brackets listed.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AlgebraJson {
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketJson>,
}
