//! Exact arithmetic in `Z[q, q^-1]`.
//!
//! A [`LaurentPoly`] is a sparse list of `(exponent, coefficient)` pairs kept
//! sorted by exponent with no zero coefficients, so structural equality is
//! polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(i32, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    /// `c q^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i32) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: vec![(exp, c)],
        }
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut map: BTreeMap<i32, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c.into();
        }
        LaurentPoly {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Non-zero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i32) -> BigInt {
        match self.terms.binary_search_by_key(&exp, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// The bar involution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(e, c)| (-e, c.clone()))
                .collect(),
        }
    }

    pub fn is_bar_symmetric(&self) -> bool {
        *self == self.bar()
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// The quantum integer `[m] = q^{m-1} + q^{m-3} + ... + q^{1-m}`.
    pub fn quantum_int(m: u32) -> Self {
        let m = m as i32;
        LaurentPoly {
            terms: (0..m).map(|k| (1 - m + 2 * k, BigInt::one())).collect(),
        }
    }

    /// `[h] = (q^h - q^-h) / (q - q^-1)` for any integer `h`.
    pub fn quantum_int_signed(h: i32) -> Self {
        if h >= 0 {
            Self::quantum_int(h as u32)
        } else {
            -Self::quantum_int((-h) as u32)
        }
    }

    /// `[m]! = [m][m-1]...[1]`, with `[0]! = 1`.
    pub fn quantum_factorial(m: u32) -> Self {
        (1..=m).fold(Self::one(), |acc, k| &acc * &Self::quantum_int(k))
    }

    /// Exact quotient `self / d`; fails unless `d` divides `self` in
    /// `Z[q, q^-1]`.
    pub fn exact_div(&self, d: &LaurentPoly) -> Result<LaurentPoly> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let inexact = || Error::InexactDivision {
            numerator: self.to_string(),
            denominator: d.to_string(),
        };
        if d.terms.len() == 1 {
            let (de, dc) = &d.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (e, c) in &self.terms {
                if !(c % dc).is_zero() {
                    return Err(inexact());
                }
                out.push((e - de, c / dc));
            }
            return Ok(LaurentPoly { terms: out });
        }
        // long division from the top degree down
        let (d_lo, d_hi) = (d.min_exp().unwrap(), d.max_exp().unwrap());
        let lead = d.terms.last().unwrap().1.clone();
        let mut rem: BTreeMap<i32, BigInt> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(i32, BigInt)> = Vec::new();
        while let Some((&top, c)) = rem.iter().next_back() {
            let low = *rem.keys().next().unwrap();
            if top - d_hi < low - d_lo {
                return Err(inexact());
            }
            if !(c % &lead).is_zero() {
                return Err(inexact());
            }
            let qc = c / &lead;
            let qe = top - d_hi;
            for (e, dc) in &d.terms {
                let entry = rem.entry(qe + e).or_default();
                *entry -= &qc * dc;
                if entry.is_zero() {
                    rem.remove(&(qe + e));
                }
            }
            quot.push((qe, qc));
        }
        quot.reverse();
        Ok(LaurentPoly { terms: quot })
    }

    /// `true` iff every exponent is at least 1 (the zero polynomial included).
    pub fn in_qzq(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 1)
    }

    /// The unique bar-symmetric `alpha` with `self - alpha` supported in
    /// exponents `>= 1`: the constant term plus `p_{-d}(q^d + q^-d)` for each
    /// negative exponent `-d`.
    pub fn alpha_extract(&self) -> BarSymmetric {
        let mut terms = Vec::new();
        for (e, c) in &self.terms {
            match e.cmp(&0) {
                std::cmp::Ordering::Less => {
                    terms.push((*e, c.clone()));
                    terms.push((-e, c.clone()));
                }
                std::cmp::Ordering::Equal => terms.push((0, c.clone())),
                std::cmp::Ordering::Greater => {}
            }
        }
        BarSymmetric(LaurentPoly::from_terms(terms))
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c).sum()
    }

    fn merge(&self, other: &LaurentPoly, negate: bool) -> LaurentPoly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &BigInt| if negate { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, sign(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(e, c)| (*e, sign(c))));
        LaurentPoly { terms: out }
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::monomial(c, 0)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge(rhs, false)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        self.merge(&rhs, false)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge(rhs, true)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        self.merge(&rhs, true)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.merge(rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.merge(rhs, true);
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if rhs.terms.len() == 1 {
            let (e, c) = &rhs.terms[0];
            return LaurentPoly {
                terms: self.terms.iter().map(|(x, d)| (x + e, d * c)).collect(),
            };
        }
        let mut acc: BTreeMap<i32, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                *acc.entry(ea + eb).or_default() += ca * cb;
            }
        }
        LaurentPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl fmt::Display for LaurentPoly {
    /// Increasing exponents, e.g. `1+q^2`, `-q^-1+2q`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if neg {
                write!(f, "-")?;
            } else if idx > 0 {
                write!(f, "+")?;
            }
            let unit = mag.is_one();
            match (*e, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (e, true) => write!(f, "q^{e}")?,
                (e, false) => write!(f, "{mag}q^{e}")?,
            }
        }
        Ok(())
    }
}

/// Serialized as a map from decimal exponent strings to integers, e.g.
/// `{"0":1,"2":3}` for `1 + 3q^2`. Coefficients outside the `i64` range are
/// written as decimal strings.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            match c.to_i64() {
                Some(v) => map.serialize_entry(&e.to_string(), &v)?,
                None => map.serialize_entry(&e.to_string(), &c.to_string())?,
            }
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coeff {
            Int(i64),
            Text(String),
        }

        struct PolyVisitor;

        impl<'de> Visitor<'de> for PolyVisitor {
            type Value = LaurentPoly;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a map from exponent strings to integers")
            }

            fn visit_map<A: MapAccess<'de>>(
                self,
                mut access: A,
            ) -> std::result::Result<LaurentPoly, A::Error> {
                let mut terms = Vec::new();
                while let Some((key, value)) = access.next_entry::<String, Coeff>()? {
                    let exp: i32 = key
                        .parse()
                        .map_err(|_| de::Error::custom(format!("bad exponent {key:?}")))?;
                    let c = match value {
                        Coeff::Int(v) => BigInt::from(v),
                        Coeff::Text(s) => s
                            .parse()
                            .map_err(|_| de::Error::custom(format!("bad coefficient {s:?}")))?,
                    };
                    terms.push((exp, c));
                }
                Ok(LaurentPoly::from_terms(terms))
            }
        }

        deserializer.deserialize_map(PolyVisitor)
    }
}

/// A Laurent polynomial fixed by the bar involution, i.e. an element of
/// `Z[q + q^-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BarSymmetric(LaurentPoly);

impl BarSymmetric {
    pub fn new(p: LaurentPoly) -> Option<Self> {
        p.is_bar_symmetric().then_some(BarSymmetric(p))
    }

    pub fn as_poly(&self) -> &LaurentPoly {
        &self.0
    }

    pub fn into_inner(self) -> LaurentPoly {
        self.0
    }
}
