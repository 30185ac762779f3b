//! Exact univariate polynomials in q over the integers.
//!
//! Provides the q-factorial (q)_n = prod_{i=1}^{n} (1 + q + ... + q^{i-1}),
//! the q-binomial [a+b; a, b] = (q)_{a+b} / ((q)_a (q)_b), cyclotomic
//! polynomials Phi_k, and exact evaluation at a primitive k-th root of unity
//! as a residue in Z[q]/Phi_k(q). No floating point anywhere: vanishing at a
//! root of unity is decided by exact reduction.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense polynomial in q with exact integer coefficients.
///
/// Invariant: no trailing zero coefficient is stored, so the zero polynomial
/// is the empty coefficient vector and `degree()` returns `None` for it.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        IntPolynomial::from_coeffs(vec![BigInt::from(c)])
    }

    /// Monomial c * q^e.
    pub fn monomial(c: i64, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = BigInt::from(c);
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Coefficients listed from exponent 0 upward.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Adds c * q^e in place.
    pub fn add_term(&mut self, c: &BigInt, e: usize) {
        if c.is_zero() {
            return;
        }
        if self.coeffs.len() <= e {
            self.coeffs.resize(e + 1, BigInt::zero());
        }
        self.coeffs[e] += c;
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Value at q = 1 (e.g. the cardinality under a generating polynomial).
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// c * self.
    pub fn scaled(&self, c: &BigInt) -> IntPolynomial {
        if c.is_zero() {
            return IntPolynomial::zero();
        }
        IntPolynomial { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// q^shift * self.
    pub fn shifted(&self, shift: usize) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); shift];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// q^d * p(1/q) for d >= deg(p): the coefficient list reversed into
    /// degree d. Converts between the cocharge and charge normalizations.
    pub fn reversed(&self, d: usize) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let deg = self.degree().unwrap();
        assert!(d >= deg, "reversal degree below polynomial degree");
        let mut coeffs = vec![BigInt::zero(); d + 1];
        for (e, c) in self.coeffs.iter().enumerate() {
            coeffs[d - e] = c.clone();
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Substitutes q -> q^e.
    pub fn substitute_power(&self, e: usize) -> IntPolynomial {
        assert!(e >= 1);
        let mut out = IntPolynomial::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            out.add_term(c, i * e);
        }
        out
    }

    /// Exact division; fails if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &IntPolynomial) -> Result<IntPolynomial> {
        let (quot, rem) = self.div_rem(divisor)?;
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::Parse("exact division left a remainder".into()))
        }
    }

    /// Euclidean division by a divisor whose leading coefficient is a unit.
    pub fn div_rem(&self, divisor: &IntPolynomial) -> Result<(IntPolynomial, IntPolynomial)> {
        if divisor.is_zero() {
            return Err(Error::Parse("division by the zero polynomial".into()));
        }
        let dd = divisor.degree().unwrap();
        let lead = divisor.coeffs[dd].clone();
        if !lead.is_one() && lead != -BigInt::one() {
            return Err(Error::Parse("divisor must have unit leading coefficient".into()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let e = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() * &lead; // lead is +-1
            if !factor.is_zero() {
                quot[e] = factor.clone();
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    let v = &factor * c;
                    rem[e + i] -= v;
                }
            }
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() > dd && rem.len() - 1 - dd == e {
                break; // no progress; cannot happen with unit lead
            }
        }
        Ok((IntPolynomial::from_coeffs(quot), IntPolynomial::from_coeffs(rem)))
    }

    /// Exponent -> coefficient map, for JSON export.
    pub fn to_exponent_map(&self) -> BTreeMap<usize, BigInt> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e, c.clone()))
            .collect()
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl AddAssign<&IntPolynomial> for IntPolynomial {
    fn add_assign(&mut self, rhs: &IntPolynomial) {
        *self = &*self + rhs;
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs.clone())
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for IntPolynomial {
    /// Canonical text form, descending exponents: "3*q^5+17*q^4+...+18*q+5".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let unit = mag.is_one();
            match (e, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::str::FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = IntPolynomial::zero();
        let mut term = String::new();
        let mut sign = 1i64;
        for ch in compact.chars() {
            match ch {
                '+' | '-' if !term.is_empty() => {
                    let (coeff, expo) = parse_term(&term)?;
                    out.add_term(&(BigInt::from(sign) * coeff), expo);
                    term.clear();
                    sign = if ch == '-' { -1 } else { 1 };
                }
                '-' => sign = -sign,
                '+' => {}
                _ => term.push(ch),
            }
        }
        if term.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {s:?}")));
        }
        let (coeff, expo) = parse_term(&term)?;
        out.add_term(&(BigInt::from(sign) * coeff), expo);
        Ok(out)
    }
}

fn parse_term(term: &str) -> Result<(BigInt, usize)> {
    let bad = || Error::Parse(format!("bad polynomial term {term:?}"));
    if let Some(rest) = term.strip_prefix("q") {
        // q or q^e
        let coeff = BigInt::one();
        return parse_expo(rest).map(|e| (coeff, e)).ok_or_else(bad);
    }
    if let Some((c, q)) = term.split_once("*q") {
        let coeff: BigInt = c.parse().map_err(|_| bad())?;
        return parse_expo(q).map(|e| (coeff, e)).ok_or_else(bad);
    }
    let coeff: BigInt = term.parse().map_err(|_| bad())?;
    Ok((coeff, 0))
}

fn parse_expo(rest: &str) -> Option<usize> {
    if rest.is_empty() {
        Some(1)
    } else {
        rest.strip_prefix('^')?.parse().ok()
    }
}

/// The q-factorial (q)_n = prod_{i=1}^{n} (1 + q + ... + q^{i-1}).
pub fn q_factorial(n: usize) -> IntPolynomial {
    let mut out = IntPolynomial::one();
    for i in 1..=n {
        let factor = IntPolynomial::from_coeffs(vec![BigInt::one(); i]);
        out = &out * &factor;
    }
    out
}

/// The q-binomial coefficient [a+b; a, b], computed by the Pascal recurrence
/// [a+b; a, b] = [a+b-1; a-1, b] + q^a [a+b-1; a, b-1].
pub fn q_binomial(a: usize, b: usize) -> IntPolynomial {
    let mut table: Vec<Vec<IntPolynomial>> = vec![vec![IntPolynomial::zero(); b + 1]; a + 1];
    for row in table.iter_mut() {
        row[0] = IntPolynomial::one();
    }
    for j in 0..=b {
        table[0][j] = IntPolynomial::one();
    }
    for i in 1..=a {
        for j in 1..=b {
            let up = table[i - 1][j].clone();
            let left = table[i][j - 1].shifted(i);
            table[i][j] = &up + &left;
        }
    }
    table[a][b].clone()
}

/// The k-th cyclotomic polynomial, by exact division of q^k - 1 by the
/// cyclotomic polynomials of the proper divisors of k.
pub fn cyclotomic_polynomial(k: usize) -> IntPolynomial {
    assert!(k >= 1);
    if k == 1 {
        return IntPolynomial::from_i64_coeffs(&[-1, 1]);
    }
    let mut num = IntPolynomial::monomial(1, k);
    num.add_term(&BigInt::from(-1), 0);
    let mut result = num;
    for d in 1..k {
        if k % d == 0 {
            result = result.exact_div(&cyclotomic_polynomial(d)).expect("cyclotomic division");
        }
    }
    result
}

/// The value of a polynomial at a primitive k-th root of unity, represented
/// exactly as a residue in Z[q]/Phi_k(q). The residue is independent of which
/// primitive root is chosen.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclotomicValue {
    order: usize,
    residue: IntPolynomial,
}

impl CyclotomicValue {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn residue(&self) -> &IntPolynomial {
        &self.residue
    }

    pub fn from_integer(order: usize, v: i64) -> Self {
        eval_at_primitive_root(&IntPolynomial::constant(v), order)
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    /// True iff the value is a rational integer, i.e. the residue is constant.
    pub fn is_integer(&self) -> bool {
        self.residue.degree().map_or(true, |d| d == 0)
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.residue.coeff(0))
    }

    pub fn add(&self, rhs: &CyclotomicValue) -> CyclotomicValue {
        assert_eq!(self.order, rhs.order, "mixed cyclotomic orders");
        eval_at_primitive_root(&(&self.residue + &rhs.residue), self.order)
    }

    pub fn mul(&self, rhs: &CyclotomicValue) -> CyclotomicValue {
        assert_eq!(self.order, rhs.order, "mixed cyclotomic orders");
        eval_at_primitive_root(&(&self.residue * &rhs.residue), self.order)
    }
}

impl fmt::Display for CyclotomicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.residue.coeff(0))
        } else {
            write!(f, "{} (mod Phi_{})", self.residue, self.order)
        }
    }
}

/// Reduces a polynomial modulo Phi_k, giving its exact value at every
/// primitive k-th root of unity at once.
pub fn eval_at_primitive_root(p: &IntPolynomial, k: usize) -> CyclotomicValue {
    let phi = cyclotomic_polynomial(k);
    let (_, rem) = p.div_rem(&phi).expect("cyclotomic modulus is monic");
    CyclotomicValue { order: k, residue: rem }
}

/// The value of p(zeta^e) as a residue mod Phi_k.
pub fn eval_at_root_power(p: &IntPolynomial, k: usize, e: usize) -> CyclotomicValue {
    eval_at_primitive_root(&p.substitute_power(e), k)
}
