use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{LieError, Result};

pub type Rational = BigRational;

/// Operations shared by `Rational` and `ExactScalar` so that elimination code
/// can be written once.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    fn from_rational(r: &Rational) -> Self;
}

impl Field for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || LieError::Parse(format!("bad rational '{s}'"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(p))
        }
    }
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub mod rational_serde {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

pub mod rational_vec_serde {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&format_rational(r))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Splits a nonzero integer as `k^2 * f` with `f` squarefree; returns `(k, f)`.
pub fn square_split(n: &BigInt) -> (BigInt, BigInt) {
    let sign = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut m = n.abs();
    let mut k = BigInt::one();
    let mut f = BigInt::one();
    let mut p = BigInt::from(2u32);
    while &p * &p <= m {
        let mut e = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            k *= p.pow(e / 2);
            if e % 2 == 1 {
                f *= &p;
            }
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if m > BigInt::one() {
        let r = m.sqrt();
        if &r * &r == m {
            k *= r;
        } else {
            f *= m;
        }
    }
    (k, sign * f)
}

/// `a + b*sqrt(d)` with `d` a squarefree integer other than 0 and 1, or a plain
/// rational when `b == 0` (then `d` is stored as 0).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    a: Rational,
    b: Rational,
    d: i64,
}

impl ExactScalar {
    pub fn rational(a: Rational) -> Self {
        ExactScalar { a, b: Rational::zero(), d: 0 }
    }

    /// Builds `a + b*sqrt(d)` for an arbitrary nonzero integer `d`, pulling
    /// square factors out of the radicand.
    pub fn new(a: Rational, b: Rational, d: i64) -> Self {
        if b.is_zero() || d == 0 {
            return Self::rational(a);
        }
        let (k, f) = square_split(&BigInt::from(d));
        let b = b * Rational::from_integer(k);
        if f.is_one() {
            return Self::rational(a + b);
        }
        ExactScalar { a, b, d: f.to_i64().expect("radicand fits in i64") }
    }

    /// `sqrt(r)` for a rational `r`, as an element of `Q(sqrt(d))`.
    pub fn sqrt_of(r: &Rational) -> Result<Self> {
        if r.is_zero() {
            return Ok(Self::zero());
        }
        let n = r.numer() * r.denom();
        let (k, f) = square_split(&n);
        let coeff = Rational::new(k, r.denom().clone());
        let d = f
            .to_i64()
            .ok_or_else(|| LieError::ExtensionDegreeTooHigh("radicand too large".into()))?;
        Ok(Self::new(Rational::zero(), coeff, d))
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// The radicand, or 0 for a rational value.
    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.b.is_zero() || self.d > 0
    }

    /// Purely imaginary and nonzero.
    pub fn is_imaginary(&self) -> bool {
        self.d < 0 && self.a.is_zero() && !self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        if self.d < 0 {
            ExactScalar { a: self.a.clone(), b: -self.b.clone(), d: self.d }
        } else {
            self.clone()
        }
    }

    /// Galois conjugate `a - b*sqrt(d)`.
    pub fn galois(&self) -> Self {
        ExactScalar { a: self.a.clone(), b: -self.b.clone(), d: self.d }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.b.is_zero().then_some(&self.a)
    }

    /// Sign of the real number `a + b*sqrt(d)`; `None` if the value is not real.
    pub fn real_sign(&self) -> Option<Ordering> {
        if !self.is_real() {
            return None;
        }
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        if sb == Ordering::Equal {
            return Some(sa);
        }
        if sa == Ordering::Equal || sa == sb {
            return Some(sb);
        }
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * int(self.d);
        Some(match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        })
    }

    /// Real part for `d < 0`; the whole value when real.
    pub fn re(&self) -> ExactScalar {
        if self.d < 0 {
            Self::rational(self.a.clone())
        } else {
            self.clone()
        }
    }

    /// Coefficient of `i` as an element of `Q(sqrt(-d))`.
    pub fn im(&self) -> ExactScalar {
        if self.d < 0 {
            Self::new(Rational::zero(), self.b.clone(), -self.d)
        } else {
            Self::zero()
        }
    }

    /// Complex positivity: positive real part, or zero real part and positive
    /// imaginary part.
    pub fn is_positive(&self) -> bool {
        if self.d < 0 {
            self.a.is_positive() || (self.a.is_zero() && self.b.is_positive())
        } else {
            self.real_sign() == Some(Ordering::Greater)
        }
    }

    fn merge_d(&self, other: &Self) -> i64 {
        match (self.b.is_zero(), other.b.is_zero()) {
            (true, _) => other.d,
            (_, true) => self.d,
            _ => {
                assert_eq!(
                    self.d, other.d,
                    "arithmetic across different quadratic fields"
                );
                self.d
            }
        }
    }

    fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * int(self.d)
    }

    fn add_ref(&self, o: &Self) -> Self {
        let d = self.merge_d(o);
        Self::new(&self.a + &o.a, &self.b + &o.b, d)
    }

    fn sub_ref(&self, o: &Self) -> Self {
        let d = self.merge_d(o);
        Self::new(&self.a - &o.a, &self.b - &o.b, d)
    }

    fn mul_ref(&self, o: &Self) -> Self {
        let d = self.merge_d(o);
        let a = &self.a * &o.a + &self.b * &o.b * int(d);
        let b = &self.a * &o.b + &self.b * &o.a;
        Self::new(a, b, d)
    }

    fn div_ref(&self, o: &Self) -> Self {
        assert!(!o.is_zero(), "division by zero");
        let n = o.norm();
        let num = self.mul_ref(&o.galois());
        Self::new(num.a / &n, num.b / &n, num.d)
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", format_rational(&self.a));
        }
        let rad = if self.d == -1 { "i".to_string() } else { format!("sqrt({})", self.d) };
        let b = if self.b.is_one() {
            String::new()
        } else if (-self.b.clone()).is_one() {
            "-".to_string()
        } else {
            format!("{}*", format_rational(&self.b))
        };
        if self.a.is_zero() {
            write!(f, "{b}{rad}")
        } else if self.b.is_negative() {
            let nb = -self.b.clone();
            let nb = if nb.is_one() { String::new() } else { format!("{}*", format_rational(&nb)) };
            write!(f, "{}-{nb}{rad}", format_rational(&self.a))
        } else {
            write!(f, "{}+{b}{rad}", format_rational(&self.a))
        }
    }
}

impl PartialOrd for ExactScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Structural order on `(a, b)`: real part first, then the radical coefficient.
impl Ord for ExactScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.a.cmp(&other.a).then_with(|| self.b.cmp(&other.b)).then(self.d.cmp(&other.d))
    }
}

impl Zero for ExactScalar {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for ExactScalar {
    fn one() -> Self {
        Self::rational(Rational::one())
    }
}

impl Neg for ExactScalar {
    type Output = Self;
    fn neg(self) -> Self {
        ExactScalar { a: -self.a, b: -self.b, d: self.d }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl $tr for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, o: ExactScalar) -> ExactScalar {
                self.$inner(&o)
            }
        }
        impl<'a> $tr<&'a ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, o: &'a ExactScalar) -> ExactScalar {
                self.$inner(o)
            }
        }
        impl<'a, 'b> $tr<&'b ExactScalar> for &'a ExactScalar {
            type Output = ExactScalar;
            fn $m(self, o: &'b ExactScalar) -> ExactScalar {
                self.$inner(o)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);

impl Field for ExactScalar {
    fn from_rational(r: &Rational) -> Self {
        Self::rational(r.clone())
    }
}

impl From<Rational> for ExactScalar {
    fn from(r: Rational) -> Self {
        Self::rational(r)
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    a: String,
    b: String,
    d: i64,
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ScalarRepr { a: format_rational(&self.a), b: format_rational(&self.b), d: self.d }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = ScalarRepr::deserialize(d)?;
        let a = parse_rational(&r.a).map_err(serde::de::Error::custom)?;
        let b = parse_rational(&r.b).map_err(serde::de::Error::custom)?;
        Ok(ExactScalar::new(a, b, r.d))
    }
}

/// Small integer helper used by divisor enumeration.
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![];
    }
    let mut small = vec![];
    let mut large = vec![];
    let mut i = BigInt::one();
    while &i * &i <= n {
        if n.is_multiple_of(&i) {
            let q = &n / &i;
            if q != i {
                large.push(q);
            }
            small.push(i.clone());
        }
        i += 1u32;
    }
    large.reverse();
    small.extend(large);
    small
}
