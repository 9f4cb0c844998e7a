//! Exact sparse polynomials in `s` and `t` with big-integer coefficients, plus a
//! dense univariate companion type used for specializations in `q`.
//!
//! Terms are kept in a map keyed by `(s-exponent, t-exponent)`. Zero
//! coefficients are never stored, so structural equality is polynomial
//! equality. Canonical order is lexicographic with `s > t`, largest first.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exponent pair `(a, b)` of the monomial `s^a t^b`.
pub type Exponents = (u32, u32);

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BivariatePolynomial {
    terms: BTreeMap<Exponents, BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// The polynomial `s`.
    pub fn s() -> Self {
        Self::monomial(1, 1, 0)
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `c * s^a * t^b`; the zero polynomial when `c == 0`.
    pub fn monomial(c: impl Into<BigInt>, a: u32, b: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        Self { terms }
    }

    /// Builds a polynomial from arbitrary `(a, b, c)` triples, merging repeated
    /// exponents and dropping zeros.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (a, b, c) in terms {
            p.add_term((a, b), c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    /// Terms in canonical order: descending `s`-exponent, then descending `t`-exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Exponents, &BigInt)> + '_ {
        self.terms.iter().rev().map(|(e, c)| (*e, c))
    }

    /// Leading term under lexicographic order with `s > t`.
    pub fn leading(&self) -> Option<(Exponents, &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// Largest `s`-exponent, or `None` for the zero polynomial.
    pub fn degree_s(&self) -> Option<u32> {
        self.leading().map(|((a, _), _)| a)
    }

    pub fn max_degree_t(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, b)| b).max()
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
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

    /// Adds `c * s^a * t^b * other` into `self`.
    fn add_scaled_shifted(&mut self, other: &Self, c: &BigInt, a: u32, b: u32) {
        for (&(oa, ob), oc) in &other.terms {
            self.add_term((oa + a, ob + b), oc * c);
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Divides every coefficient by `d`, or returns `None` if some coefficient
    /// is not a multiple of `d`.
    pub fn div_coefficients_exact(&self, d: &BigInt) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            terms.insert(*e, q);
        }
        Some(Self { terms })
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor` by repeated cancellation of leading terms
    /// (lexicographic, `s > t`). Fails if any leading term cannot be cancelled
    /// or a remainder survives.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let ((da, db), dc) = divisor
            .leading()
            .ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(((a, b), c)) = rem.leading() {
            if a < da || b < db {
                return Err(Error::Indivisible(format!(
                    "leading term s^{a}*t^{b} of remainder is not a multiple of s^{da}*t^{db}"
                )));
            }
            let (q, r) = c.div_rem(&dc);
            if !r.is_zero() {
                return Err(Error::Indivisible(format!(
                    "coefficient {c} is not a multiple of {dc}"
                )));
            }
            rem.add_scaled_shifted(divisor, &-&q, a - da, b - db);
            quot.add_term((a - da, b - db), q);
        }
        Ok(quot)
    }

    /// Exact integer value at `(s, t) = (s0, t0)`.
    pub fn eval_int(&self, s0: &BigInt, t0: &BigInt) -> BigInt {
        let mut s_pows: Vec<BigInt> = vec![BigInt::one()];
        let mut t_pows: Vec<BigInt> = vec![BigInt::one()];
        let mut total = BigInt::zero();
        for (&(a, b), c) in &self.terms {
            while s_pows.len() <= a as usize {
                let next = s_pows.last().unwrap() * s0;
                s_pows.push(next);
            }
            while t_pows.len() <= b as usize {
                let next = t_pows.last().unwrap() * t0;
                t_pows.push(next);
            }
            total += c * &s_pows[a as usize] * &t_pows[b as usize];
        }
        total
    }

    /// Substitutes `s = s_sub(q)` and `t = t_sub(q)` and expands.
    pub fn subst_univar(
        &self,
        s_sub: &UnivariatePolynomial,
        t_sub: &UnivariatePolynomial,
    ) -> UnivariatePolynomial {
        let max_a = self.terms.keys().map(|e| e.0).max().unwrap_or(0) as usize;
        let max_b = self.terms.keys().map(|e| e.1).max().unwrap_or(0) as usize;
        let powers = |base: &UnivariatePolynomial, n: usize| {
            let mut out = vec![UnivariatePolynomial::one()];
            for i in 0..n {
                out.push(&out[i] * base);
            }
            out
        };
        let s_pows = powers(s_sub, max_a);
        let t_pows = powers(t_sub, max_b);
        let mut acc = UnivariatePolynomial::zero();
        for (&(a, b), c) in &self.terms {
            let term = (&s_pows[a as usize] * &t_pows[b as usize]).scale(c);
            acc = &acc + &term;
        }
        acc
    }

    /// Canonical plain-text rendering, e.g. `s^3 + 2*s*t` or `-t^2`.
    pub fn to_canonical_text(&self) -> String {
        self.to_string()
    }

    /// LaTeX rendering in canonical order, e.g. `s^{3} + 2 s t`.
    pub fn to_latex(&self) -> String {
        render(self, |a, b, coeff| {
            let mut parts: Vec<String> = Vec::new();
            if let Some(c) = coeff {
                parts.push(c.to_string());
            }
            for (var, e) in [("s", a), ("t", b)] {
                match e {
                    0 => {}
                    1 => parts.push(var.to_string()),
                    _ => parts.push(format!("{var}^{{{e}}}")),
                }
            }
            parts.join(" ")
        })
    }

    /// Parses the canonical text form. Also accepts repeated factors and
    /// uncombined like terms, which are merged.
    pub fn parse(text: &str) -> Result<Self> {
        Parser::new(text).polynomial()
    }
}

/// Shared sign/term layout for the text and LaTeX renderers. `body` receives
/// the exponents and the absolute coefficient when it must be printed.
fn render(p: &BivariatePolynomial, body: impl Fn(u32, u32, Option<&BigInt>) -> String) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, ((a, b), c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        let coeff = if (a, b) == (0, 0) || !abs.is_one() {
            Some(&abs)
        } else {
            None
        };
        out.push_str(&body(a, b, coeff));
    }
    out
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = render(self, |a, b, coeff| {
            let mut parts: Vec<String> = Vec::new();
            if let Some(c) = coeff {
                parts.push(c.to_string());
            }
            for (var, e) in [("s", a), ("t", b)] {
                match e {
                    0 => {}
                    1 => parts.push(var.to_string()),
                    _ => parts.push(format!("{var}^{e}")),
                }
            }
            parts.join("*")
        });
        f.write_str(&text)
    }
}

impl fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl FromStr for BivariatePolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        // digits are ASCII
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn polynomial(mut self) -> Result<BivariatePolynomial> {
        let mut poly = BivariatePolynomial::zero();
        let mut negative = self.eat(b'-');
        loop {
            let (e, c) = self.term()?;
            poly.add_term(e, if negative { -c } else { c });
            match self.peek() {
                None => return Ok(poly),
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return self.err("expected '+', '-' or end of input"),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Exponents, BigInt)> {
        let mut coeff = BigInt::one();
        let mut exps: Exponents = (0, 0);
        let mut need_factor = true;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let d = self.digits()?;
            coeff = d.parse().expect("digit string");
            if !self.eat(b'*') {
                return Ok((exps, coeff));
            }
        }
        while need_factor {
            let var = match self.peek() {
                Some(v @ (b's' | b't')) => v,
                _ => return self.err("expected 's' or 't'"),
            };
            self.pos += 1;
            let e: u32 = if self.eat(b'^') {
                match self.digits()?.parse() {
                    Ok(e) => e,
                    Err(_) => return self.err("exponent out of range"),
                }
            } else {
                1
            };
            let slot = if var == b's' { &mut exps.0 } else { &mut exps.1 };
            *slot = match slot.checked_add(e) {
                Some(v) => v,
                None => return self.err("exponent overflow"),
            };
            need_factor = self.eat(b'*');
        }
        Ok((exps, coeff))
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    terms: Vec<(u32, u32, String)>,
}

impl Serialize for BivariatePolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            terms: self
                .terms()
                .map(|((a, b), c)| (a, b, c.to_string()))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BivariatePolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(deserializer)?;
        let mut p = Self::zero();
        for (a, b, c) in raw.terms {
            let c: BigInt = c.parse().map_err(serde::de::Error::custom)?;
            p.add_term((a, b), c);
        }
        Ok(p)
    }
}

impl Add<&BivariatePolynomial> for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&BivariatePolynomial> for BivariatePolynomial {
    fn add_assign(&mut self, rhs: &BivariatePolynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&BivariatePolynomial> for BivariatePolynomial {
    fn sub_assign(&mut self, rhs: &BivariatePolynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Sub<&BivariatePolynomial> for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&BivariatePolynomial> for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(a, b), c) in &self.terms {
            out.add_scaled_shifted(rhs, c, a, b);
        }
        out
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $($tr:ident $method:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned_binop!(BivariatePolynomial, Add add, Sub sub, Mul mul);
forward_owned_binop!(UnivariatePolynomial, Add add, Sub sub, Mul mul);

impl Neg for BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn neg(self) -> BivariatePolynomial {
        -&self
    }
}

/// Dense polynomial in `q`; `coeffs[i]` is the coefficient of `q^i`.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct UnivariatePolynomial {
    coeffs: Vec<BigInt>,
}

impl UnivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The polynomial `q`.
    pub fn q() -> Self {
        Self::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    /// `c * q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c.into();
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, q0: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q0 + c)
    }

    /// Exact long division; fails if the divisor's leading coefficient does not
    /// divide a running leading coefficient or a remainder survives.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() {
                Ok(Self::zero())
            } else {
                Err(Error::Indivisible("dividend degree below divisor degree".into()))
            };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::Indivisible(format!(
                    "coefficient {top} is not a multiple of {lead}"
                )));
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * dc;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::Indivisible("nonzero remainder".into()));
        }
        Ok(Self::from_coeffs(quot))
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Pow<u32> for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn pow(self, exp: u32) -> UnivariatePolynomial {
        UnivariatePolynomial::pow(self, exp)
    }
}

impl Add<&UnivariatePolynomial> for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn add(self, rhs: &UnivariatePolynomial) -> UnivariatePolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        UnivariatePolynomial::from_coeffs(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub<&UnivariatePolynomial> for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn sub(self, rhs: &UnivariatePolynomial) -> UnivariatePolynomial {
        self + &rhs.scale(&BigInt::from(-1))
    }
}

impl Mul<&UnivariatePolynomial> for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn mul(self, rhs: &UnivariatePolynomial) -> UnivariatePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return UnivariatePolynomial::zero();
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
        UnivariatePolynomial::from_coeffs(out)
    }
}

impl fmt::Display for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sep = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            f.write_str(sep)?;
            let abs = c.abs();
            match e {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if e == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> BivariatePolynomial {
        text.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(BivariatePolynomial::s() + BivariatePolynomial::t(), p("s + t"));
        assert_eq!(p("s^3 + s*t") + p("s*t"), p("s^3 + 2*s*t"));
        assert_eq!(p("s^3 + s*t") + BivariatePolynomial::zero(), p("s^3 + s*t"));
        assert!((p("s - t") + p("t - s")).is_zero());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("s^2 + t") * p("s^2 + 2*t"), p("s^4 + 3*s^2*t + 2*t^2"));
        let q = p("3*s^2*t - 7");
        assert_eq!(&q * &BivariatePolynomial::one(), q);
        assert!((&q * &BivariatePolynomial::zero()).is_zero());
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(p("s^2 - t^2").exact_div(&p("s - t")).unwrap(), p("s + t"));
        let num = p("s").pow(1) * p("s^2 + t") * p("s^3 + 2*s*t");
        assert_eq!(num.exact_div(&(p("s") * p("s"))).unwrap(), p("s^4 + 3*s^2*t + 2*t^2"));
        assert!(matches!(
            p("s + t").exact_div(&p("s*t")),
            Err(Error::Indivisible(_))
        ));
        assert!(matches!(
            p("s").exact_div(&BivariatePolynomial::zero()),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            p("3*s").exact_div(&p("2*s")),
            Err(Error::Indivisible(_))
        ));
    }

    #[test]
    fn eval_examples() {
        let one = BigInt::one();
        assert_eq!(p("s^3 + 2*s*t").eval_int(&one, &one), BigInt::from(3));
        assert_eq!(BivariatePolynomial::zero().eval_int(&BigInt::from(5), &one), BigInt::zero());
        assert_eq!(p("s^4 + 3*s^2*t + 2*t^2").eval_int(&one, &one), BigInt::from(6));
        assert_eq!(p("s^2 - t").eval_int(&BigInt::from(-2), &BigInt::from(3)), BigInt::from(1));
    }

    #[test]
    fn subst_examples() {
        let s_sub = &UnivariatePolynomial::q() + &UnivariatePolynomial::one();
        let t_sub = UnivariatePolynomial::monomial(-1, 1);
        let got = p("s^2 + t").subst_univar(&s_sub, &t_sub);
        // [3]_q = (q^3 - 1)/(q - 1)
        let oracle = (&UnivariatePolynomial::monomial(1, 3) - &UnivariatePolynomial::one())
            .exact_div(&(&UnivariatePolynomial::q() - &UnivariatePolynomial::one()))
            .unwrap();
        assert_eq!(got, oracle);
        assert_eq!(got.to_string(), "q^2 + q + 1");
        assert_eq!(p("7").subst_univar(&s_sub, &t_sub), UnivariatePolynomial::constant(7));
        assert_eq!(p("s").subst_univar(&s_sub, &t_sub), s_sub);
    }

    #[test]
    fn text_rendering() {
        assert_eq!(p("s^3 + 2*s*t").to_canonical_text(), "s^3 + 2*s*t");
        assert_eq!(BivariatePolynomial::zero().to_canonical_text(), "0");
        assert_eq!(BivariatePolynomial::monomial(-1, 0, 2).to_canonical_text(), "-t^2");
        assert_eq!(p("t - 1 + s").to_canonical_text(), "s + t - 1");
        assert_eq!(p("-3*s^2*t^4 - 1").to_canonical_text(), "-3*s^2*t^4 - 1");
        assert_eq!(p("s^6*t^7").to_latex(), "s^{6} t^{7}");
        assert_eq!(p("s^3 + 2*s*t - 1").to_latex(), "s^{3} + 2 s t - 1");
    }

    #[test]
    fn parse_merges_and_rejects() {
        assert_eq!(p("s*s*t + s^2*t"), p("2*s^2*t"));
        assert_eq!(p("  s ^ 2  -  s^2 "), BivariatePolynomial::zero());
        for bad in ["", "+", "s +", "2**s", "x", "s^", "s^99999999999", "1 2", "s^4294967295*s"] {
            assert!(BivariatePolynomial::parse(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn json_schema() {
        let poly = p("s^3 + 2*s*t - 5");
        let json = serde_json::to_string(&poly).unwrap();
        assert_eq!(json, r#"{"terms":[[3,0,"1"],[1,1,"2"],[0,0,"-5"]]}"#);
        let back: BivariatePolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, poly);
    }

    #[test]
    fn univariate_division() {
        let num = &UnivariatePolynomial::monomial(1, 4) - &UnivariatePolynomial::one();
        let den = &UnivariatePolynomial::monomial(1, 2) - &UnivariatePolynomial::one();
        let q = num.exact_div(&den).unwrap();
        assert_eq!(q.to_string(), "q^2 + 1");
        assert!(UnivariatePolynomial::q().exact_div(&den).is_err());
        assert_eq!(q.eval(&BigInt::from(2)), BigInt::from(5));
    }
}
