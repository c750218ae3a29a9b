//! Exact arithmetic in Q(q), the field of rational functions of q over the
//! rationals, together with q-integers and q-binomial coefficients.
//!
//! Elements are ratios of integer-coefficient Laurent polynomials kept in a
//! canonical form, so equality, hashing and ordering are structural:
//!
//! * the denominator is an ordinary polynomial with nonzero constant term
//!   and positive leading coefficient;
//! * numerator and denominator share no polynomial factor over Q[q] and no
//!   integer content.
//!
//! The subring A = { f/g : f,g in Q[q], g(0) != 0 } of functions regular at
//! q = 0 is recognized by [`LaurentRational::is_in_a`]; this is the
//! coefficient ring of crystal lattices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;

/// Integer-coefficient Laurent polynomial in q, stored sparsely as
/// exponent -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// c * q^k.
    pub fn monomial<T: Into<BigInt>>(c: T, k: i64) -> Self {
        let c: BigInt = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LaurentPoly { terms }
    }

    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn q_pow(k: i64) -> Self {
        Self::monomial(1, k)
    }

    /// Build from (exponent, coefficient) pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in it {
            p.add_term(k, &BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, k: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    /// Multiply by q^k.
    pub fn shifted(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitute q -> q^-1.
    pub fn inverted_q(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Dense coefficients of self / q^min_exp, ascending from degree 0.
    fn to_dense(&self) -> (i64, Vec<BigInt>) {
        if self.is_zero() {
            return (0, Vec::new());
        }
        let lo = self.min_exp().unwrap();
        let hi = self.max_exp().unwrap();
        let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    fn from_dense(shift: i64, v: &[BigInt]) -> Self {
        let mut terms = BTreeMap::new();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                terms.insert(shift + i as i64, c.clone());
            }
        }
        LaurentPoly { terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, &(-c));
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                out.add_term(ka + kb, &(ca * cb));
            }
        }
        out
    }
}

// ---- dense polynomial helpers (ascending coefficients, no trailing zeros) ----

fn dense_trim(v: &mut Vec<BigInt>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

fn dense_content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
    }
    g
}

fn dense_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    dense_trim(&mut v);
    if v.is_empty() {
        return v;
    }
    let mut g = dense_content(&v);
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    for c in &mut v {
        *c = &*c / &g;
    }
    v
}

fn dense_mul_scalar(v: &mut [BigInt], s: &BigInt) {
    for c in v.iter_mut() {
        *c = &*c * s;
    }
}

/// Pseudo-remainder of a by b (b nonzero): lc(b)^(deg a - deg b + 1) * a mod b.
fn dense_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = a.to_vec();
    dense_trim(&mut r);
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r.last().unwrap().clone();
        dense_mul_scalar(&mut r, &lb);
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            let t = &lr * bc;
            r[i + shift] = &r[i + shift] - t;
        }
        dense_trim(&mut r);
    }
    r
}

/// Primitive gcd of two integer polynomials over Q[q], positive leading
/// coefficient, via the primitive pseudo-remainder sequence.
fn dense_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut a = dense_primitive(a.to_vec());
    let mut b = dense_primitive(b.to_vec());
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = dense_pseudo_rem(&a, &b);
        a = b;
        b = dense_primitive(r);
    }
    dense_primitive(a)
}

/// Exact division of dense polynomials; panics if not exact.
fn dense_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = a.to_vec();
    dense_trim(&mut r);
    if r.is_empty() {
        return r;
    }
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut q = vec![BigInt::zero(); r.len() - db];
    while r.len() >= b.len() && !r.is_empty() {
        let dr = r.len() - 1;
        let (c, rem) = r.last().unwrap().div_rem(lb);
        assert!(rem.is_zero(), "non-exact polynomial division");
        let shift = dr - db;
        q[shift] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            let t = &c * bc;
            r[i + shift] = &r[i + shift] - t;
        }
        dense_trim(&mut r);
    }
    assert!(r.is_empty(), "non-exact polynomial division");
    q
}

/// Element of Q(q) in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LaurentRational {
    num: LaurentPoly,
    den: LaurentPoly, // polynomial, den(0) != 0, positive leading coefficient
}

impl LaurentRational {
    pub fn zero() -> Self {
        LaurentRational {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(LaurentPoly::monomial(n, 0))
    }

    pub fn q() -> Self {
        Self::from_poly(LaurentPoly::q())
    }

    pub fn q_pow(k: i64) -> Self {
        Self::from_poly(LaurentPoly::q_pow(k))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        LaurentRational {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    /// num / den, reduced to canonical form. Panics if den is zero.
    pub fn ratio(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "division by the zero polynomial");
        if num.is_zero() {
            return Self::zero();
        }
        let (sn, nd) = num.to_dense();
        let (sd, dd) = den.to_dense();
        let g = dense_gcd(&nd, &dd);
        let mut nd = dense_div_exact(&nd, &g);
        let mut dd = dense_div_exact(&dd, &g);
        // integer content and sign normalization
        let mut c = dense_content(&nd).gcd(&dense_content(&dd));
        if dd.last().unwrap().is_negative() {
            c = -c;
        }
        for x in nd.iter_mut() {
            *x = &*x / &c;
        }
        for x in dd.iter_mut() {
            *x = &*x / &c;
        }
        LaurentRational {
            num: LaurentPoly::from_dense(sn - sd, &nd),
            den: LaurentPoly::from_dense(0, &dd),
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one()
    }

    /// True when the denominator reduced to 1 (a Laurent polynomial).
    pub fn is_laurent_polynomial(&self) -> bool {
        self.den == LaurentPoly::one()
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::ratio(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, n: i64) -> Self {
        if n < 0 {
            return self.inv().pow(-n);
        }
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute q -> q^-1.
    pub fn inverted_q(&self) -> Self {
        Self::ratio(self.num.inverted_q(), self.den.inverted_q())
    }

    /// Membership in A = { f/g : g(0) != 0 }: no pole at q = 0.
    pub fn is_in_a(&self) -> bool {
        self.num.is_zero() || self.num.min_exp().unwrap() >= 0
    }

    /// Value at q = 0; defined exactly on A.
    pub fn evaluate_at_zero(&self) -> Result<BigRational, Error> {
        if !self.is_in_a() {
            return Err(Error::NotInA);
        }
        Ok(BigRational::new(self.num.coeff(0), self.den.coeff(0)))
    }
}

impl Add for &LaurentRational {
    type Output = LaurentRational;
    fn add(self, rhs: &LaurentRational) -> LaurentRational {
        LaurentRational::ratio(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &LaurentRational {
    type Output = LaurentRational;
    fn sub(self, rhs: &LaurentRational) -> LaurentRational {
        LaurentRational::ratio(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &LaurentRational {
    type Output = LaurentRational;
    fn mul(self, rhs: &LaurentRational) -> LaurentRational {
        LaurentRational::ratio(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &LaurentRational {
    type Output = LaurentRational;
    fn neg(self) -> LaurentRational {
        LaurentRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

/// q-integer [n]_t = (t^n - t^-n)/(t - t^-1).
pub fn q_integer(n: i64, base: &LaurentRational) -> LaurentRational {
    let num = &base.pow(n) - &base.pow(-n);
    let den = &base.pow(1) - &base.pow(-1);
    if num.is_zero() {
        return LaurentRational::zero();
    }
    &num * &den.inv()
}

/// q-binomial [m choose n]_t as the product
/// prod_{i=0}^{n-1} (t^(m-i) - t^-(m-i)) / (t^(i+1) - t^-(i+1)).
pub fn q_binomial(m: i64, n: i64, base: &LaurentRational) -> Result<LaurentRational, Error> {
    if n < 0 || n > m {
        return Err(Error::QBinomialRange { m, n });
    }
    let mut acc = LaurentRational::one();
    for i in 0..n {
        let num = &base.pow(m - i) - &base.pow(-(m - i));
        let den = &base.pow(i + 1) - &base.pow(-(i + 1));
        acc = &acc * &(&num * &den.inv());
    }
    Ok(acc)
}

// ---- rendering and parsing ----

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = abs.is_one();
            match (*k, unit) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{abs}*q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{abs}*q^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for LaurentRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

fn parse_poly(s: &str) -> Result<LaurentPoly, Error> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut out = LaurentPoly::zero();
    let mut term = String::new();
    let mut sign = 1i64;
    let mut pending_sign = 1i64;
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    let flush = |term: &mut String, sign: i64, out: &mut LaurentPoly| -> Result<(), Error> {
        let t = term.trim();
        if t.is_empty() {
            return Err(Error::Parse(format!("bad term in '{s}'")));
        }
        let (coeff_str, exp) = if let Some(pos) = t.find('q') {
            let coeff = t[..pos].trim().trim_end_matches('*').trim();
            let rest = t[pos + 1..].trim();
            let exp = if rest.is_empty() {
                1
            } else {
                let r = rest
                    .strip_prefix('^')
                    .ok_or_else(|| Error::Parse(format!("bad exponent in '{t}'")))?;
                r.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad exponent in '{t}'")))?
            };
            (coeff, exp)
        } else {
            (t, 0)
        };
        let c: BigInt = if coeff_str.is_empty() {
            BigInt::one()
        } else {
            coeff_str
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient in '{t}'")))?
        };
        out.add_term(exp, &(c * BigInt::from(sign)));
        term.clear();
        Ok(())
    };
    while i < chars.len() {
        let c = chars[i];
        // a sign is a separator only when not part of an exponent like q^-2
        let in_exponent = term.trim_end().ends_with('^');
        if (c == '+' || c == '-') && !in_exponent && !term.trim().is_empty() {
            flush(&mut term, sign * pending_sign, &mut out)?;
            sign = if c == '-' { -1 } else { 1 };
            pending_sign = 1;
        } else if (c == '+' || c == '-') && !in_exponent && term.trim().is_empty() {
            if c == '-' {
                pending_sign = -pending_sign;
            }
        } else {
            term.push(c);
        }
        i += 1;
    }
    flush(&mut term, sign * pending_sign, &mut out)?;
    Ok(out)
}

impl std::str::FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        parse_poly(s)
    }
}

impl std::str::FromStr for LaurentRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if let Some(pos) = s.find(")/(") {
            let num = s
                .get(..pos + 1)
                .and_then(|t| t.strip_prefix('('))
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| Error::Parse(format!("bad rational '{s}'")))?;
            let den = s
                .get(pos + 2..)
                .and_then(|t| t.strip_prefix('('))
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| Error::Parse(format!("bad rational '{s}'")))?;
            Ok(LaurentRational::ratio(parse_poly(num)?, parse_poly(den)?))
        } else {
            Ok(LaurentRational::from_poly(parse_poly(s)?))
        }
    }
}
