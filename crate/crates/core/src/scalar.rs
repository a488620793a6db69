//! Exact arithmetic in Q(v), the field of rational functions in one
//! formal variable v.
//!
//! v plays the role of t^{1/N}: after the specializations t = v^N,
//! q = v^{-2kN}, s = v, Upsilon = v^{1-N^2}, every parameter is a
//! monomial and all fractional powers of t become integer powers of v.
//! Elements are kept in a canonical form (numerator and denominator
//! coprime, denominator exponent-anchored at 0 with constant term 1),
//! so equality is structural and decidable.

use num::rational::Rational64;
use num::{BigRational, One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Small exact rational used for weight exponents and diagonal labels.
pub type Rat = Rational64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero in Q(v)")]
    DivisionByZero,
    #[error("pole at v = {0}")]
    PoleAt(String),
}

/// A Laurent polynomial over Q: a finite map exponent -> nonzero coefficient.
///
/// The zero polynomial is the empty map; no zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, BigRational::one())
    }

    /// c * v^exp. Returns zero if c is zero.
    pub fn monomial(exp: i64, c: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        LaurentPoly { coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(terms: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.coeffs
            .get(&exp)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Multiply by v^d.
    pub fn shifted(&self, d: i64) -> Self {
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + d, c.clone()))
                .collect(),
        }
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Exact evaluation at v = c. Errors when c = 0 meets a negative exponent.
    pub fn eval(&self, c: &BigRational) -> Result<BigRational, ScalarError> {
        let mut acc = BigRational::zero();
        for (e, coeff) in &self.coeffs {
            let p = if *e >= 0 {
                num::pow::pow(c.clone(), *e as usize)
            } else {
                if c.is_zero() {
                    return Err(ScalarError::PoleAt(c.to_string()));
                }
                num::pow::pow(c.clone(), (-*e) as usize).recip()
            };
            acc += coeff * p;
        }
        Ok(acc)
    }

    /// Dense coefficient vector (ascending from min_exp) for ordinary-poly work.
    fn dense(&self) -> (i64, Vec<BigRational>) {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => {
                let mut v = vec![BigRational::zero(); (hi - lo + 1) as usize];
                for (e, c) in &self.coeffs {
                    v[(e - lo) as usize] = c.clone();
                }
                (lo, v)
            }
            _ => (0, Vec::new()),
        }
    }

    fn from_dense(lo: i64, v: Vec<BigRational>) -> Self {
        LaurentPoly::from_terms(v.into_iter().enumerate().map(|(i, c)| (lo + i as i64, c)))
    }
}

fn dense_trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Remainder of a by b over Q, both dense ascending, b nonzero.
fn dense_rem(mut a: Vec<BigRational>, b: &[BigRational]) -> Vec<BigRational> {
    let db = b.len() - 1;
    let lead = b[db].clone();
    while a.len() > db {
        let da = a.len() - 1;
        let factor = a[da].clone() / lead.clone();
        for i in 0..=db {
            let t = &b[i] * &factor;
            a[da - db + i] -= t;
        }
        dense_trim(&mut a);
        if a.is_empty() {
            break;
        }
    }
    a
}

/// Monic gcd of two ordinary polynomials over Q (dense ascending, not both zero).
fn dense_gcd(mut a: Vec<BigRational>, mut b: Vec<BigRational>) -> Vec<BigRational> {
    dense_trim(&mut a);
    dense_trim(&mut b);
    while !b.is_empty() {
        let r = dense_rem(a, &b);
        a = b;
        b = r;
    }
    let lead = a.last().expect("gcd of nonzero polys is nonzero").clone();
    for c in &mut a {
        *c /= lead.clone();
    }
    a
}

/// Quotient a / b when the division is exact.
fn dense_exact_div(mut a: Vec<BigRational>, b: &[BigRational]) -> Vec<BigRational> {
    dense_trim(&mut a);
    if a.is_empty() {
        return a;
    }
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut q = vec![BigRational::zero(); a.len() - db];
    while a.len() > db || (a.len() == db + 1 && !a.is_empty()) {
        if a.len() < db + 1 {
            break;
        }
        let da = a.len() - 1;
        let factor = a[da].clone() / lead.clone();
        q[da - db] = factor.clone();
        for i in 0..=db {
            let t = &b[i] * &factor;
            a[da - db + i] -= t;
        }
        dense_trim(&mut a);
        if a.is_empty() {
            break;
        }
    }
    debug_assert!(a.is_empty(), "division was not exact");
    q
}

/// An element of Q(v) in canonical form.
///
/// Canonical form: numerator and denominator coprime over Q, the
/// denominator's lowest exponent is 0 and its constant coefficient is 1.
/// Zero is 0/1. Equality of canonical forms is structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElement {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl FieldElement {
    pub fn zero() -> Self {
        FieldElement {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        FieldElement {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    /// v^exp.
    pub fn monomial(exp: i64) -> Self {
        FieldElement {
            num: LaurentPoly::monomial(exp, BigRational::one()),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        FieldElement {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        FieldElement::from_poly(LaurentPoly::monomial(
            0,
            BigRational::from_integer(n.into()),
        ))
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::canonicalize(num, den))
    }

    fn canonicalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return FieldElement::zero();
        }
        // Anchor the denominator at exponent 0 (shift both by the same power of v).
        let dlo = den.min_exp().unwrap();
        let num = num.shifted(-dlo);
        let den = den.shifted(-dlo);
        // Strip the numerator's pure v-power before the ordinary-poly gcd.
        let nlo = num.min_exp().unwrap();
        let (_, ndense) = num.shifted(-nlo).dense();
        let (_, ddense) = den.dense();
        let g = dense_gcd(ndense.clone(), ddense.clone());
        let (nq, dq) = if g.len() > 1 {
            (dense_exact_div(ndense, &g), dense_exact_div(ddense, &g))
        } else {
            (ndense, ddense)
        };
        let num = LaurentPoly::from_dense(nlo, nq);
        let den = LaurentPoly::from_dense(0, dq);
        // Scale so the denominator's constant term is exactly 1.
        let c = den.coeff(0);
        debug_assert!(!c.is_zero());
        let inv = c.recip();
        FieldElement {
            num: num.scaled(&inv),
            den: den.scaled(&inv),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        *self == FieldElement::one()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::canonicalize(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::canonicalize(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::canonicalize(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn neg(&self) -> Self {
        FieldElement {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::canonicalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        if other.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::canonicalize(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut acc = FieldElement::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Exact rational value at v = c. Errors when the denominator vanishes.
    pub fn eval_at_rational(&self, c: &BigRational) -> Result<BigRational, ScalarError> {
        let d = self.den.eval(c)?;
        if d.is_zero() {
            return Err(ScalarError::PoleAt(c.to_string()));
        }
        Ok(self.num.eval(c)? / d)
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::add(self, rhs)
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::sub(self, rhs)
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::mul(self, rhs)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(e, c)| {
                if *e == 0 {
                    c.to_string()
                } else {
                    format!("{c}*v^{e}")
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == LaurentPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Serialize for FieldElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// v^exp, the free constructor the rest of the crate builds scalars from.
pub fn monomial(exp: i64) -> FieldElement {
    FieldElement::monomial(exp)
}

/// The parameter specializations for rank N and rectangle width k.
///
/// With q0 = v^N, the table realizes t = q0, q = q0^{-2k} (GL side) and
/// s = q0^{1/N}, Upsilon = s^{1-N^2} (SL side), all as monomials in v.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamTable {
    rank: usize,
    width: usize,
}

impl ParamTable {
    pub fn new(rank_n: usize, k: usize) -> Self {
        assert!(rank_n >= 1 && k >= 1, "N and k must be positive");
        ParamTable {
            rank: rank_n,
            width: k,
        }
    }

    pub fn rank_n(&self) -> usize {
        self.rank
    }

    pub fn k(&self) -> usize {
        self.width
    }

    pub fn n(&self) -> usize {
        self.rank * self.width
    }

    pub fn t_exp(&self) -> i64 {
        self.rank as i64
    }

    pub fn q_exp(&self) -> i64 {
        -2 * (self.width as i64) * (self.rank as i64)
    }

    pub fn s_exp(&self) -> i64 {
        1
    }

    pub fn upsilon_exp(&self) -> i64 {
        1 - (self.rank as i64) * (self.rank as i64)
    }

    /// t = v^N
    pub fn t(&self) -> FieldElement {
        monomial(self.t_exp())
    }

    /// q = v^{-2kN} = t^{-2k}
    pub fn q(&self) -> FieldElement {
        monomial(self.q_exp())
    }

    /// s = v = t^{1/N}
    pub fn s_dot(&self) -> FieldElement {
        monomial(self.s_exp())
    }

    /// Upsilon = v^{1-N^2} = s^{1-N^2}
    pub fn upsilon(&self) -> FieldElement {
        monomial(self.upsilon_exp())
    }

    /// t^e for a rational e with denominator dividing N; exact in v.
    pub fn t_pow(&self, e: Rat) -> FieldElement {
        let scaled = e * Rat::from_integer(self.rank as i64);
        assert!(
            scaled.is_integer(),
            "t-exponent {e} does not clear denominator N={}",
            self.rank
        );
        monomial(scaled.to_integer())
    }
}
