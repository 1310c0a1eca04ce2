use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{LieError, Result};
use crate::exactlin::{format_rational, parse_rational, Rational};

/// Sparse multivariate polynomial with rational coefficients, keyed by
/// exponent vectors.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, Rational::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &MPoly) -> MPoly {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, o: &MPoly) -> MPoly {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> MPoly {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect() }
    }

    pub fn mul(&self, o: &MPoly) -> MPoly {
        let mut p = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, c1 * c2);
            }
        }
        p
    }

    pub fn diff(&self, i: usize) -> MPoly {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                p.add_term(e2, c * Rational::from_integer(e[i].into()));
            }
        }
        p
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (e, c)| {
            let mut t = c.clone();
            for (xi, k) in x.iter().zip(e) {
                for _ in 0..*k {
                    t *= xi;
                }
            }
            acc + t
        })
    }

    /// True when variable `i` does not occur.
    pub fn free_of(&self, i: usize) -> bool {
        self.terms.keys().all(|e| e[i] == 0)
    }

    /// Drops variable `i`, which must not occur.
    pub fn drop_var(&self, i: usize) -> MPoly {
        assert!(self.free_of(i));
        MPoly {
            nvars: self.nvars - 1,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.remove(i);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Adds trailing variables that do not occur.
    pub fn widen(&self, nvars: usize) -> MPoly {
        MPoly {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.resize(nvars, 0);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Parses sums of monomials such as `1/2*u*v + 4/9*p^3 - u*p*q`.
    pub fn parse(text: &str, vars: &[&str]) -> Result<MPoly> {
        let n = vars.len();
        let src: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Self::zero(n);
        if src == "0" || src.is_empty() {
            return Ok(p);
        }
        let bad = || LieError::Parse(format!("bad polynomial '{text}'"));
        let mut terms = vec![];
        let mut start = 0;
        for (i, ch) in src.char_indices() {
            if (ch == '+' || ch == '-') && i > start {
                terms.push(&src[start..i]);
                start = i;
            }
        }
        terms.push(&src[start..]);
        for t in terms {
            let (sign, body) = match t.as_bytes()[0] {
                b'-' => (-Rational::one(), &t[1..]),
                b'+' => (Rational::one(), &t[1..]),
                _ => (Rational::one(), t),
            };
            let mut coef = sign;
            let mut e = vec![0u32; n];
            for f in body.split('*') {
                if f.is_empty() {
                    return Err(bad());
                }
                if f.starts_with(|c: char| c.is_ascii_digit()) {
                    coef *= parse_rational(f)?;
                    continue;
                }
                let (name, pow) = match f.split_once('^') {
                    Some((a, b)) => (a, b.parse::<u32>().map_err(|_| bad())?),
                    None => (f, 1),
                };
                let i = vars.iter().position(|v| *v == name).ok_or_else(bad)?;
                e[i] += pow;
            }
            p.add_term(e, coef);
        }
        Ok(p)
    }

    pub fn format(&self, vars: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, k)| **k > 0)
                .map(|(i, k)| if *k == 1 { vars[i].clone() } else { format!("{}^{k}", vars[i]) })
                .collect();
            let a = c.abs();
            if c.is_negative() {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            if mono.is_empty() {
                s.push_str(&format_rational(&a));
            } else {
                if !a.is_one() {
                    s.push_str(&format_rational(&a));
                    s.push('*');
                }
                s.push_str(&mono.join("*"));
            }
        }
        s
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.format(&names))
    }
}
