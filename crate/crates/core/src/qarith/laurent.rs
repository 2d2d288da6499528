use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element of `Z[q, q^-1]`.
///
/// Stored densely: `coeffs[k]` is the coefficient of `q^(low + k)`. Both ends
/// of `coeffs` are nonzero; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(e: i64) -> Self {
        Self::monomial(BigInt::one(), e)
    }

    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: e, coeffs: vec![c] }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut acc = Self::zero();
        for (e, c) in terms {
            acc += &Self::monomial(c, e);
        }
        acc
    }

    fn from_raw(low: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        Self { low: low + lead_zeros as i64, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let k = e - self.low;
        if k < 0 || k >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| (self.low + k as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// If `self = c q^e`, returns `(c, e)`.
    pub fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        (self.coeffs.len() == 1).then(|| (&self.coeffs[0], self.low))
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Substitution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(hi) => Self { low: -hi, coeffs: self.coeffs.iter().rev().cloned().collect() },
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        self.bar() == *self
    }

    /// Substitution `q -> q^k` for `k > 0`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k > 0);
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, x: &num_rational::BigRational) -> num_rational::BigRational {
        let mut acc = num_rational::BigRational::zero();
        for (e, c) in self.terms() {
            let p =
                if e >= 0 { num_traits::pow(x.clone(), e as usize) } else { num_traits::pow(x.recip(), (-e) as usize) };
            acc += p * num_rational::BigRational::from_integer(c.clone());
        }
        acc
    }

    /// True if every coefficient is nonnegative, i.e. the value lies in `N[q, q^-1]`.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Gcd of the integer coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Exact division in `Z[q, q^-1]`; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.coeffs.len();
        let m = divisor.coeffs.len();
        if n < m {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let lead = divisor.coeffs.last().unwrap();
        let mut quot = vec![BigInt::zero(); n - m + 1];
        for k in (0..=n - m).rev() {
            let top = &rem[k + m - 1];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &qk * d;
            }
            quot[k] = qk;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_raw(self.low - divisor.low, quot))
    }

    /// Greatest common divisor in `Z[q, q^-1]`, normalized to have minimal
    /// exponent 0 and positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return other.normalize_unit();
        }
        if other.is_zero() {
            return self.normalize_unit();
        }
        let c = self.content().gcd(&other.content());
        let mut a = self.primitive_poly();
        let mut b = other.primitive_poly();
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = if r.is_zero() { r } else { r.primitive_poly() };
        }
        a.primitive_poly().scale(&c)
    }

    /// Drops the unit `±q^k` and the integer content: minimal exponent 0,
    /// positive leading coefficient, coprime coefficients.
    fn primitive_poly(&self) -> LaurentPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.coeffs.last().unwrap().is_negative() {
            c = -c;
        }
        Self { low: 0, coeffs: self.coeffs.iter().map(|x| x / &c).collect() }
    }

    /// Same polynomial with minimal exponent 0 and positive leading coefficient.
    pub fn normalize_unit(&self) -> LaurentPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let p = Self { low: 0, coeffs: self.coeffs.clone() };
        if self.coeffs.last().unwrap().is_negative() {
            -p
        } else {
            p
        }
    }

    /// Pseudo-remainder of ordinary polynomials (both with `low == 0`).
    fn pseudo_rem(&self, b: &LaurentPoly) -> LaurentPoly {
        let mut r = self.coeffs.clone();
        let m = b.coeffs.len();
        let lead = b.coeffs.last().unwrap();
        while r.len() >= m {
            let top = r.last().unwrap().clone();
            let shift = r.len() - m;
            for c in r.iter_mut() {
                *c *= lead;
            }
            for (j, d) in b.coeffs.iter().enumerate() {
                r[shift + j] -= &top * d;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Self::from_raw(0, r)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders e.g. `q^-2 + 2 + q^2`, `-q^-1 + 3q`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let var = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            if var.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{abs}{var}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the rendering produced by `Display`, e.g. `-q^-1 + 3 + 2q^2`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid Laurent polynomial `{s}`"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        // split before every sign that does not follow `^`
        let mut terms = Vec::new();
        let mut cur = String::new();
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() && !cur.ends_with('^') {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        let mut acc = LaurentPoly::zero();
        for t in terms {
            let (sign, term) = match t.as_bytes()[0] {
                b'+' => (1, &t[1..]),
                b'-' => (-1, &t[1..]),
                _ => (1, &t[..]),
            };
            if term.is_empty() {
                return Err(bad());
            }
            let (coef, exp) = match term.find('q') {
                None => (term.parse::<BigInt>().map_err(|_| bad())?, 0),
                Some(p) => {
                    let c = if p == 0 {
                        BigInt::one()
                    } else {
                        term[..p].trim_end_matches('*').parse::<BigInt>().map_err(|_| bad())?
                    };
                    let e = match &term[p + 1..] {
                        "" => 1,
                        e if e.starts_with('^') => e[1..].parse::<i64>().map_err(|_| bad())?,
                        _ => return Err(bad()),
                    };
                    (c, e)
                }
            };
            acc += &LaurentPoly::monomial(coef * sign, exp);
        }
        Ok(acc)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.num_terms()))?;
        for (e, c) in self.terms() {
            seq.serialize_element(&(e, IntRepr(c.clone())))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(i64, IntRepr)> = Vec::deserialize(d)?;
        let mut last = None;
        for (e, _) in &pairs {
            if last.is_some_and(|l| l >= *e) {
                return Err(D::Error::custom("exponents must be strictly increasing"));
            }
            last = Some(*e);
        }
        Ok(LaurentPoly::from_terms(pairs.into_iter().map(|(e, c)| (e, c.0))))
    }
}

/// Integer that serializes as a JSON number when it fits in an `i64`, and as a
/// decimal string otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntRepr(pub BigInt);

impl Serialize for IntRepr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) => s.serialize_i64(v),
            Err(_) => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for IntRepr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(IntRepr(BigInt::from(v))),
            Raw::Str(s) => s.parse().map(IntRepr).map_err(D::Error::custom),
        }
    }
}

fn add_into(a: &LaurentPoly, b: &LaurentPoly, sign_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if sign_b { b.clone() } else { -b.clone() };
    }
    let low = a.low.min(b.low);
    let high = a.max_exp().unwrap().max(b.max_exp().unwrap());
    let mut out = vec![BigInt::zero(); (high - low + 1) as usize];
    for (k, c) in a.coeffs.iter().enumerate() {
        out[(a.low - low) as usize + k] += c;
    }
    for (k, c) in b.coeffs.iter().enumerate() {
        let slot = &mut out[(b.low - low) as usize + k];
        if sign_b {
            *slot += c;
        } else {
            *slot -= c;
        }
    }
    LaurentPoly::from_raw(low, out)
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_into(self, rhs, true)
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_into(self, rhs, false)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        LaurentPoly::from_raw(self.low + rhs.low, out)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.coeffs.iter_mut() {
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

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self - rhs;
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary total order used only for deterministic sorting.
impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.low.cmp(&other.low).then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}
