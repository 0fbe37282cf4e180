//! Exact Laurent polynomials in `x1..x6` with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub const NVARS: usize = 6;

/// Exponent vector of `x1..x6`. Ordered lexicographically.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial(pub [i32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    /// `x_i` with `i` in `1..=6`.
    pub fn var(i: usize) -> Self {
        let mut e = [0; NVARS];
        e[i - 1] = 1;
        Monomial(e)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(o.0.iter()) {
            *a += b;
        }
        Monomial(e)
    }

    pub fn div(&self, o: &Monomial) -> Monomial {
        self.mul(&o.inv())
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.map(|a| -a))
    }

    pub fn pow(&self, k: i32) -> Monomial {
        Monomial(self.0.map(|a| a * k))
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; NVARS]
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// A finite sum of monomials with nonzero integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn var(i: usize) -> Self {
        Self::term(Monomial::var(i), 1)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    /// Builds from possibly repeated terms, summing duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(it: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single term, if there is exactly one.
    pub fn as_monomial(&self) -> Option<(Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c))
        } else {
            None
        }
    }

    /// Largest monomial in lexicographic order with its coefficient.
    pub fn leading(&self) -> Option<(Monomial, &BigInt)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Minimum and maximum exponent of `x_i` (1-based) over all terms.
    pub fn degree_range(&self, i: usize) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|m| m.0[i - 1]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / q`, or `NotDivisible`.
    ///
    /// Leading-term elimination in lexicographic order. Lex order on Z^6 is not
    /// a well-order, so every quotient term is checked against the box of
    /// exponents a true quotient could possibly use; that bounds the loop.
    pub fn div_exact(&self, q: &LaurentPoly) -> Result<LaurentPoly> {
        if q.is_zero() {
            return Err(Error::NotDivisible);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        if let Some((m, c)) = q.as_monomial() {
            let inv = m.inv();
            let mut out = BTreeMap::new();
            for (k, v) in &self.terms {
                let (d, r) = v.div_rem(c);
                if !r.is_zero() {
                    return Err(Error::NotDivisible);
                }
                out.insert(k.mul(&inv), d);
            }
            return Ok(LaurentPoly { terms: out });
        }
        let mut lo = [0i32; NVARS];
        let mut hi = [0i32; NVARS];
        for v in 0..NVARS {
            let (plo, phi) = self.degree_range(v + 1).unwrap();
            let (qlo, qhi) = q.degree_range(v + 1).unwrap();
            lo[v] = plo - qhi;
            hi[v] = phi - qlo;
        }
        let (qm, qc) = q.leading().unwrap();
        let qc = qc.clone();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some((pm, pc)) = rem.leading() {
            let t = pm.div(&qm);
            if (0..NVARS).any(|v| t.0[v] < lo[v] || t.0[v] > hi[v]) {
                return Err(Error::NotDivisible);
            }
            let (c, r) = pc.div_rem(&qc);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (k, v) in &q.terms {
                rem.add_term(k.mul(&t), -(v * &c));
            }
            quot.add_term(t, c);
        }
        Ok(quot)
    }

    /// Exact value at the given point.
    pub fn specialize(&self, values: &[BigRational; NVARS]) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if e < 0 && values[v].is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                t *= values[v].pow(e);
            }
            total += t;
        }
        Ok(total)
    }

    /// Value at `x1 = … = x6 = 1`, i.e. the coefficient sum.
    pub fn at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Value at the given point modulo a prime `p`; `None` if a denominator vanishes.
    pub fn eval_mod(&self, values: &[u64; NVARS], p: u64) -> Option<u64> {
        let inv: Vec<u64> = values.iter().map(|&v| modpow(v % p, p - 2, p)).collect();
        if values.iter().any(|&v| v % p == 0) {
            if self.terms.keys().any(|m| (0..NVARS).any(|i| m.0[i] < 0 && values[i] % p == 0)) {
                return None;
            }
        }
        let mut acc: u128 = 0;
        for (m, c) in &self.terms {
            let cm = c.mod_floor(&BigInt::from(p));
            let mut t: u128 = cm.try_into().unwrap_or(0u128);
            for (i, &e) in m.0.iter().enumerate() {
                let b = if e >= 0 { values[i] % p } else { inv[i] };
                t = t * modpow(b, e.unsigned_abs() as u64, p) as u128 % p as u128;
            }
            acc = (acc + t) % p as u128;
        }
        Some(acc as u64)
    }

    /// Canonical text form; terms in decreasing lexicographic order.
    pub fn canonical_string(&self) -> String {
        self.to_string()
    }

    pub fn parse(s: &str) -> Result<LaurentPoly> {
        s.parse()
    }
}

fn modpow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r: u128 = 1;
    let mut b128 = (b % p) as u128;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b128 % p as u128;
        }
        b128 = b128 * b128 % p as u128;
        e >>= 1;
    }
    b = r as u64;
    b
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else if (-c).is_one() {
                write!(f, "-{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let s = s.trim();
        if s.is_empty() {
            return Err(bad());
        }
        let mut p = LaurentPoly::zero();
        for term in s.split('+') {
            let mut term = term.trim();
            let mut coef = BigInt::one();
            if let Some(rest) = term.strip_prefix('-') {
                if !rest.starts_with(|c: char| c.is_ascii_digit()) {
                    coef = -coef;
                    term = rest;
                }
            }
            let mut m = Monomial::ONE;
            for factor in term.split('*') {
                let factor = factor.trim();
                if let Some(v) = factor.strip_prefix('x') {
                    let (idx, exp) = match v.split_once('^') {
                        Some((i, e)) => (i, e.parse::<i32>().map_err(|_| bad())?),
                        None => (v, 1),
                    };
                    let idx: usize = idx.parse().map_err(|_| bad())?;
                    if !(1..=NVARS).contains(&idx) {
                        return Err(bad());
                    }
                    m.0[idx - 1] += exp;
                } else {
                    coef *= factor.parse::<BigInt>().map_err(|_| bad())?;
                }
            }
            p.add_term(m, coef);
        }
        Ok(p)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, c.clone());
        }
        r
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, -c);
        }
        r
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        let mut acc: FxHashMap<Monomial, BigInt> = FxHashMap::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        LaurentPoly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, o: LaurentPoly) -> LaurentPoly {
                (&self).$f(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// A fraction of Laurent polynomials, compared by cross-multiplication.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RationalExpr {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl RationalExpr {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RationalExpr { num, den })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalExpr { num: p, den: LaurentPoly::one() }
    }

    /// Parses `num / den` written as two canonical strings.
    pub fn parse(num: &str, den: &str) -> Result<Self> {
        RationalExpr::new(num.parse()?, den.parse()?)
    }

    pub fn mul(&self, o: &RationalExpr) -> RationalExpr {
        RationalExpr { num: &self.num * &o.num, den: &self.den * &o.den }
    }

    pub fn add(&self, o: &RationalExpr) -> RationalExpr {
        if self.den == o.den {
            return RationalExpr { num: &self.num + &o.num, den: self.den.clone() };
        }
        RationalExpr {
            num: &(&self.num * &o.den) + &(&o.num * &self.den),
            den: &self.den * &o.den,
        }
    }

    /// Integer power; negative exponents swap numerator and denominator.
    pub fn pow(&self, k: i64) -> Result<RationalExpr> {
        let e = k.unsigned_abs() as u32;
        if k >= 0 {
            Ok(RationalExpr { num: self.num.pow(e), den: self.den.pow(e) })
        } else {
            RationalExpr::new(self.den.pow(e), self.num.pow(e))
        }
    }

    /// The exact quotient, or `NotLaurent`.
    pub fn to_laurent(&self) -> Result<LaurentPoly> {
        self.num.div_exact(&self.den).map_err(|_| Error::NotLaurent)
    }
}

impl PartialEq for RationalExpr {
    fn eq(&self, o: &RationalExpr) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }
}

impl fmt::Display for RationalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Formal substitution `x_var := value`, returned as a fraction.
pub fn substitute(p: &LaurentPoly, var: usize, value: &RationalExpr) -> RationalExpr {
    let Some((lo, hi)) = p.degree_range(var) else {
        return RationalExpr::from_poly(p.clone());
    };
    if lo == 0 && hi == 0 {
        return RationalExpr::from_poly(p.clone());
    }
    // Group by the exponent of x_var.
    let mut parts: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
    for (m, c) in p.terms() {
        let e = m.0[var - 1];
        let mut rest = *m;
        rest.0[var - 1] = 0;
        parts.entry(e).or_default().add_term(rest, c.clone());
    }
    let span = (hi - lo) as usize;
    let mut npow = vec![LaurentPoly::one()];
    let mut dpow = vec![LaurentPoly::one()];
    for k in 1..=span {
        npow.push(&npow[k - 1] * &value.num);
        dpow.push(&dpow[k - 1] * &value.den);
    }
    // sum_e p_e N^e D^-e = [sum_e p_e N^(e-lo) D^(hi-e)] * N^lo * D^-hi
    let mut num = LaurentPoly::zero();
    for (e, pe) in &parts {
        let t = &(pe * &npow[(e - lo) as usize]) * &dpow[(hi - e) as usize];
        num = &num + &t;
    }
    let mut den = LaurentPoly::one();
    if lo >= 0 {
        num = &num * &value.num.pow(lo as u32);
    } else {
        den = &den * &value.num.pow((-lo) as u32);
    }
    if hi >= 0 {
        den = &den * &value.den.pow(hi as u32);
    } else {
        num = &num * &value.den.pow((-hi) as u32);
    }
    RationalExpr { num, den }
}

/// Shorthand used by tests and constant tables: parse or panic.
pub fn poly(s: &str) -> LaurentPoly {
    s.parse().unwrap_or_else(|e| panic!("bad polynomial literal {s:?}: {e}"))
}
