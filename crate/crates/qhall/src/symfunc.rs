//! Bounded-degree symmetric functions: monomial, elementary, complete,
//! power-sum and Schur bases, Hall-Littlewood expansions, power-sum
//! plethysms, and root-of-unity verification.
//!
//! The Hall-Littlewood function indexed by lambda (cocharge-normalized) is
//! expanded on monomials with the inversion polynomials of the tuple of rows
//! ((lambda_l), ..., (lambda_1)) as coefficients; its Schur expansion follows
//! by inverting the Kostka matrix. Basis conversions route through the
//! power sums with exact rational arithmetic; every user-facing result is
//! checked integral. The plethysm by p_k scales power-sum indices:
//! p_k o p_lambda = p_(k lambda).
//!
//! All transition tables are built once per degree up to a budget fixed at
//! construction time; requests beyond the budget fail fast.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::qpoly::{eval_at_primitive_root, CyclotomicValue, IntPolynomial};
use crate::ribbon;
use crate::tuples;

/// Classical bases of the ring of symmetric functions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Basis {
    Monomial,
    Elementary,
    Complete,
    PowerSum,
    Schur,
}

impl Basis {
    pub fn tag(&self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Elementary => "e",
            Basis::Complete => "h",
            Basis::PowerSum => "p",
            Basis::Schur => "s",
        }
    }
}

impl std::str::FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(Basis::Monomial),
            "e" => Ok(Basis::Elementary),
            "h" => Ok(Basis::Complete),
            "p" => Ok(Basis::PowerSum),
            "s" => Ok(Basis::Schur),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

/// A homogeneous symmetric function: coefficients indexed by partitions of
/// the degree, over a coefficient ring C.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymFunction<C> {
    basis: Basis,
    degree: usize,
    coeffs: BTreeMap<Partition, C>,
}

/// Hall-Littlewood expansions carry q-polynomial coefficients.
pub type QSym = SymFunction<IntPolynomial>;
/// Exact-rational coefficients for basis conversion and plethysm.
pub type RSym = SymFunction<BigRational>;
/// Root-of-unity specializations carry cyclotomic residues.
pub type CSym = SymFunction<CyclotomicValue>;

impl<C> SymFunction<C> {
    pub fn new(basis: Basis, degree: usize) -> Self {
        SymFunction { basis, degree, coeffs: BTreeMap::new() }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, index: &Partition) -> Option<&C> {
        self.coeffs.get(index)
    }

    /// Terms in display order: reverse-lexicographic, largest part first.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.coeffs.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn map_coeffs<D, F: Fn(&C) -> D>(&self, f: F) -> SymFunction<D> {
        SymFunction {
            basis: self.basis,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), f(v))).collect(),
        }
    }
}

impl QSym {
    pub fn insert(&mut self, index: Partition, coeff: IntPolynomial) {
        assert_eq!(index.weight(), self.degree, "index weight must match the degree");
        if !coeff.is_zero() {
            self.coeffs.insert(index, coeff);
        }
    }
}

impl RSym {
    pub fn insert(&mut self, index: Partition, coeff: BigRational) {
        assert_eq!(index.weight(), self.degree, "index weight must match the degree");
        if !coeff.is_zero() {
            self.coeffs.insert(index, coeff);
        }
    }

    /// Extracts integer coefficients; fails if any denominator is not 1.
    pub fn to_integer_coeffs(&self) -> Result<BTreeMap<Partition, BigInt>> {
        let mut out = BTreeMap::new();
        for (index, c) in &self.coeffs {
            if !c.is_integer() {
                return Err(Error::Parse(format!(
                    "coefficient of {index:?} is not integral: {c}"
                )));
            }
            out.insert(index.clone(), c.to_integer());
        }
        Ok(out)
    }
}

impl CSym {
    pub fn insert(&mut self, index: Partition, coeff: CyclotomicValue) {
        assert_eq!(index.weight(), self.degree, "index weight must match the degree");
        if !coeff.is_zero() {
            self.coeffs.insert(index, coeff);
        }
    }
}

impl<C: fmt::Display> fmt::Display for SymFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (index, c) in self.terms() {
            if !first {
                writeln!(f)?;
            }
            first = false;
            write!(f, "{}{}: {}", self.basis.tag(), index, c)?;
        }
        Ok(())
    }
}

/// eta(lambda) = sum (i - 1) lambda_i, the degree of the charge/cocharge
/// reversal.
pub fn eta(lambda: &Partition) -> usize {
    lambda.parts().iter().enumerate().map(|(i, &p)| i * p).sum()
}

/// Coefficient-wise evaluation at a primitive k-th root of unity.
pub fn specialize(f: &QSym, k: usize) -> CSym {
    let mut out = CSym::new(f.basis, f.degree);
    for (index, c) in &f.coeffs {
        out.insert(index.clone(), eval_at_primitive_root(c, k));
    }
    out
}

/// Charge-normalized twist: coefficient-wise q^eta * c(1/q), with eta the
/// reversal degree of the indexing partition. Converts the cocharge-
/// normalized expansion into its charge-normalized companion.
pub fn charge_normalized(f: &QSym, eta: usize) -> QSym {
    let mut out = QSym::new(f.basis, f.degree);
    for (index, c) in &f.coeffs {
        out.insert(index.clone(), c.reversed(eta));
    }
    out
}

// ---------------------------------------------------------------------------
// transition tables
// ---------------------------------------------------------------------------

struct DegreeTables {
    parts: Vec<Partition>,
    index: BTreeMap<Partition, usize>,
    kostka: Vec<Vec<BigInt>>,
    kostka_inv: Vec<Vec<BigInt>>,
    p_to_m: Vec<Vec<BigRational>>,
    m_to_p: Vec<Vec<BigRational>>,
    h_to_p: Vec<Vec<BigRational>>,
    p_to_h: Vec<Vec<BigRational>>,
    e_to_p: Vec<Vec<BigRational>>,
    p_to_e: Vec<Vec<BigRational>>,
}

/// Exact transition tables between the five bases, per degree up to a fixed
/// budget.
pub struct SymTables {
    budget: usize,
    degrees: Vec<DegreeTables>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn zeros(n: usize) -> Vec<BigRational> {
    vec![BigRational::zero(); n]
}

/// Multiplies the monomial expansion by the power sum p_r: each term m_mu
/// spawns m_kappa for kappa = mu with r added to one part value (or as a new
/// part), with multiplicity the number of parts of kappa equal to that value.
fn multiply_power_sum(map: &BTreeMap<Partition, BigInt>, r: usize) -> BTreeMap<Partition, BigInt> {
    let mut out: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for (mu, c) in map {
        let mut values: Vec<usize> = mu.parts().to_vec();
        values.push(0);
        values.dedup();
        for &v in values.iter().collect::<std::collections::BTreeSet<_>>() {
            let mut parts = mu.parts().to_vec();
            if v == 0 {
                parts.push(r);
            } else {
                let pos = parts.iter().position(|&x| x == v).unwrap();
                parts[pos] = v + r;
            }
            let kappa = Partition::from_unsorted(parts);
            let mult = kappa.parts().iter().filter(|&&x| x == v + r).count();
            *out.entry(kappa).or_default() += c * BigInt::from(mult);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// z_lambda = prod over part values i of i^(mult_i) * mult_i!.
fn z_of(lambda: &Partition) -> BigInt {
    let mut z = BigInt::one();
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in lambda.parts() {
        *mult.entry(p).or_default() += 1;
    }
    for (value, m) in mult {
        for _ in 0..m {
            z *= BigInt::from(value);
        }
        for t in 1..=m {
            z *= BigInt::from(t);
        }
    }
    z
}

/// Exact inverse of a square matrix over the rationals.
fn invert(matrix: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = matrix.len();
    let mut a: Vec<Vec<BigRational>> = matrix.to_vec();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { rat(1) } else { rat(0) }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).expect("singular matrix");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let scale = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &scale;
            inv[col][j] = &inv[col][j] / &scale;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for j in 0..n {
                    let av = &a[col][j] * &factor;
                    a[r][j] = &a[r][j] - &av;
                    let iv = &inv[col][j] * &factor;
                    inv[r][j] = &inv[r][j] - &iv;
                }
            }
        }
    }
    inv
}

impl DegreeTables {
    fn build(n: usize) -> Self {
        let parts = partitions_of(n);
        let count = parts.len();
        let index: BTreeMap<Partition, usize> =
            parts.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();

        // Kostka numbers K[lam][mu] counted as semistandard tableaux, via the
        // 1-ribbon enumeration. Upper-unitriangular in the dominance-
        // compatible order of `partitions_of`.
        let mut kostka = vec![vec![BigInt::zero(); count]; count];
        for (i, lam) in parts.iter().enumerate() {
            for (j, mu) in parts.iter().enumerate() {
                let tabs = ribbon::enumerate_ribbon_tableaux(lam, mu.parts(), 1)
                    .expect("weights match by construction");
                kostka[i][j] = BigInt::from(tabs.len());
            }
        }
        let kostka_inv = invert_unitriangular(&kostka);

        // power sums expanded on monomials
        let mut p_to_m = vec![zeros(count); count];
        for (i, lam) in parts.iter().enumerate() {
            let mut acc: BTreeMap<Partition, BigInt> = BTreeMap::new();
            acc.insert(Partition::empty(), BigInt::one());
            for &r in lam.parts() {
                acc = multiply_power_sum(&acc, r);
            }
            for (mu, c) in acc {
                p_to_m[i][index[&mu]] = BigRational::from_integer(c);
            }
        }
        let m_to_p = invert(&p_to_m);

        // h_n = sum over lambda of p_lambda / z_lambda; products concatenate
        // power-sum indices
        let h_to_p = product_rows(&parts, &index, |m| {
            partitions_of(m)
                .into_iter()
                .map(|lam| {
                    let z = z_of(&lam);
                    (lam, BigRational::new(BigInt::one(), z))
                })
                .collect()
        });
        let p_to_h = invert(&h_to_p);

        // e_n carries the sign (-1)^(n - l(lambda))
        let e_to_p = product_rows(&parts, &index, |m| {
            partitions_of(m)
                .into_iter()
                .map(|lam| {
                    let z = z_of(&lam);
                    let sign = if (m - lam.len()) % 2 == 0 { 1 } else { -1 };
                    (lam, BigRational::new(BigInt::from(sign), z))
                })
                .collect()
        });
        let p_to_e = invert(&e_to_p);

        DegreeTables {
            parts,
            index,
            kostka,
            kostka_inv,
            p_to_m,
            m_to_p,
            h_to_p,
            p_to_h,
            e_to_p,
            p_to_e,
        }
    }
}

/// Expands multiplicative-basis elements indexed by partitions on power sums:
/// `single(m)` gives the expansion of the degree-m generator, rows are built
/// as products (power-sum indices concatenate).
fn product_rows(
    parts: &[Partition],
    index: &BTreeMap<Partition, usize>,
    single: impl Fn(usize) -> Vec<(Partition, BigRational)>,
) -> Vec<Vec<BigRational>> {
    let count = parts.len();
    let mut rows = vec![zeros(count); count];
    for (i, lam) in parts.iter().enumerate() {
        let mut acc: BTreeMap<Partition, BigRational> = BTreeMap::new();
        acc.insert(Partition::empty(), rat(1));
        for &r in lam.parts() {
            let factor = single(r);
            let mut next: BTreeMap<Partition, BigRational> = BTreeMap::new();
            for (alpha, ca) in &acc {
                for (beta, cb) in &factor {
                    let mut union = alpha.parts().to_vec();
                    union.extend_from_slice(beta.parts());
                    let key = Partition::from_unsorted(union);
                    let add = ca * cb;
                    *next.entry(key).or_insert_with(BigRational::zero) += add;
                }
            }
            acc = next;
        }
        for (mu, c) in acc {
            if !c.is_zero() {
                rows[i][index[&mu]] = c;
            }
        }
    }
    rows
}

/// Inverts an upper-unitriangular integer matrix exactly.
fn invert_unitriangular(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = m.len();
    let mut inv = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        inv[i][i] = BigInt::one();
    }
    for i in (0..n).rev() {
        assert!(m[i][i].is_one(), "matrix must be unitriangular");
        for j in i + 1..n {
            // inv[i][j] = -(sum over i < t <= j of m[i][t] * inv[t][j])
            let mut sum = BigInt::zero();
            for t in i + 1..=j {
                sum += &m[i][t] * &inv[t][j];
            }
            inv[i][j] = -sum;
        }
    }
    inv
}

impl SymTables {
    /// Builds every transition table for degrees 0..=budget.
    pub fn new(budget: usize) -> Self {
        let degrees = (0..=budget).map(DegreeTables::build).collect();
        SymTables { budget, degrees }
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    fn degree(&self, n: usize) -> Result<&DegreeTables> {
        self.degrees.get(n).ok_or(Error::DegreeBudget { requested: n, budget: self.budget })
    }

    /// Partitions of n in the canonical (reverse-lexicographic) order.
    pub fn partitions(&self, n: usize) -> Result<&[Partition]> {
        Ok(&self.degree(n)?.parts)
    }

    /// The Kostka matrix at degree n as (lambda, mu) -> count.
    pub fn kostka_matrix(&self, n: usize) -> Result<BTreeMap<(Partition, Partition), BigInt>> {
        let t = self.degree(n)?;
        let mut out = BTreeMap::new();
        for (i, lam) in t.parts.iter().enumerate() {
            for (j, mu) in t.parts.iter().enumerate() {
                if !t.kostka[i][j].is_zero() {
                    out.insert((lam.clone(), mu.clone()), t.kostka[i][j].clone());
                }
            }
        }
        Ok(out)
    }

    /// The cocharge-normalized Hall-Littlewood function of lambda, expanded
    /// on monomials: the coefficient of m_mu is the inversion polynomial of
    /// the tuple of single rows ((lambda_l), ..., (lambda_1)) with weight mu.
    pub fn hl_monomial(&self, lambda: &Partition) -> Result<QSym> {
        let n = lambda.weight();
        let t = self.degree(n)?;
        let mut out = QSym::new(Basis::Monomial, n);
        if lambda.is_empty() {
            out.insert(Partition::empty(), IntPolynomial::one());
            return Ok(out);
        }
        let l = lambda.len();
        let shapes = lambda.scale(l).k_quotient(l).entries().to_vec();
        for mu in &t.parts {
            let poly = tuples::inversion_polynomial(&shapes, mu.parts())?;
            out.insert(mu.clone(), poly);
        }
        Ok(out)
    }

    /// Schur expansion of the Hall-Littlewood function.
    pub fn hl_schur(&self, lambda: &Partition) -> Result<QSym> {
        let m = self.hl_monomial(lambda)?;
        self.to_schur(&m)
    }

    /// Converts a monomial expansion with q-polynomial coefficients to the
    /// Schur basis by inverting the unitriangular Kostka matrix.
    pub fn to_schur(&self, f: &QSym) -> Result<QSym> {
        if f.basis != Basis::Monomial {
            return Err(Error::ShapeMismatch("to_schur expects a monomial expansion".into()));
        }
        let t = self.degree(f.degree)?;
        let n = t.parts.len();
        let mut c: Vec<IntPolynomial> = vec![IntPolynomial::zero(); n];
        for (mu, poly) in &f.coeffs {
            c[t.index[mu]] = poly.clone();
        }
        // solve K^T d = c by forward substitution (K upper-unitriangular)
        let mut d: Vec<IntPolynomial> = vec![IntPolynomial::zero(); n];
        for j in 0..n {
            let mut value = c[j].clone();
            for i in 0..j {
                if !t.kostka[i][j].is_zero() && !d[i].is_zero() {
                    value = &value - &d[i].scaled(&t.kostka[i][j]);
                }
            }
            d[j] = value;
        }
        let mut out = QSym::new(Basis::Schur, f.degree);
        for (i, poly) in d.into_iter().enumerate() {
            out.insert(t.parts[i].clone(), poly);
        }
        Ok(out)
    }

    /// Expands a Schur expansion with q-polynomial coefficients on monomials.
    pub fn schur_to_monomial(&self, f: &QSym) -> Result<QSym> {
        if f.basis != Basis::Schur {
            return Err(Error::ShapeMismatch("expected a Schur expansion".into()));
        }
        let t = self.degree(f.degree)?;
        let mut out = QSym::new(Basis::Monomial, f.degree);
        for (j, mu) in t.parts.iter().enumerate() {
            let mut value = IntPolynomial::zero();
            for (lam, poly) in &f.coeffs {
                let i = t.index[lam];
                if !t.kostka[i][j].is_zero() {
                    value += &poly.scaled(&t.kostka[i][j]);
                }
            }
            out.insert(mu.clone(), value);
        }
        Ok(out)
    }

    fn to_m_matrix(&self, n: usize, basis: Basis) -> Result<Vec<Vec<BigRational>>> {
        let t = self.degree(n)?;
        let count = t.parts.len();
        let identity = || {
            (0..count)
                .map(|i| (0..count).map(|j| if i == j { rat(1) } else { rat(0) }).collect())
                .collect::<Vec<Vec<BigRational>>>()
        };
        Ok(match basis {
            Basis::Monomial => identity(),
            Basis::Schur => t
                .kostka
                .iter()
                .map(|row| row.iter().map(|v| BigRational::from_integer(v.clone())).collect())
                .collect(),
            Basis::PowerSum => t.p_to_m.clone(),
            Basis::Complete => mat_mul(&t.h_to_p, &t.p_to_m),
            Basis::Elementary => mat_mul(&t.e_to_p, &t.p_to_m),
        })
    }

    fn from_m_matrix(&self, n: usize, basis: Basis) -> Result<Vec<Vec<BigRational>>> {
        let t = self.degree(n)?;
        let count = t.parts.len();
        let identity = || {
            (0..count)
                .map(|i| (0..count).map(|j| if i == j { rat(1) } else { rat(0) }).collect())
                .collect::<Vec<Vec<BigRational>>>()
        };
        Ok(match basis {
            Basis::Monomial => identity(),
            Basis::Schur => t
                .kostka_inv
                .iter()
                .map(|row| row.iter().map(|v| BigRational::from_integer(v.clone())).collect())
                .collect(),
            Basis::PowerSum => t.m_to_p.clone(),
            Basis::Complete => mat_mul(&t.m_to_p, &t.p_to_h),
            Basis::Elementary => mat_mul(&t.m_to_p, &t.p_to_e),
        })
    }

    /// Exact conversion between any two of the five bases.
    pub fn convert(&self, f: &RSym, target: Basis) -> Result<RSym> {
        let t = self.degree(f.degree)?;
        let count = t.parts.len();
        let mut vector = zeros(count);
        for (lam, c) in &f.coeffs {
            vector[t.index[lam]] = c.clone();
        }
        let to_m = self.to_m_matrix(f.degree, f.basis)?;
        let from_m = self.from_m_matrix(f.degree, target)?;
        let in_m = vec_mat(&vector, &to_m);
        let out_vec = vec_mat(&in_m, &from_m);
        let mut out = RSym::new(target, f.degree);
        for (i, c) in out_vec.into_iter().enumerate() {
            out.insert(t.parts[i].clone(), c);
        }
        Ok(out)
    }

    /// The plethysm by the power sum p_k: indices of the power-sum expansion
    /// are scaled by k, and the result converted back to the original basis.
    pub fn plethysm_pk(&self, f: &RSym, k: usize) -> Result<RSym> {
        assert!(k >= 1);
        let p_form = self.convert(f, Basis::PowerSum)?;
        let target_degree = f.degree * k;
        let t = self.degree(target_degree)?;
        let mut scaled = RSym::new(Basis::PowerSum, target_degree);
        for (lam, c) in &p_form.coeffs {
            scaled.insert(lam.scale(k), c.clone());
        }
        let _ = t;
        self.convert(&scaled, f.basis)
    }

    /// The complete symmetric function h_n as a one-term expansion.
    pub fn h(&self, n: usize) -> Result<RSym> {
        self.degree(n)?;
        let mut out = RSym::new(Basis::Complete, n);
        out.insert(if n == 0 { Partition::empty() } else { Partition::new(vec![n])? }, rat(1));
        Ok(out)
    }

    /// The elementary symmetric function e_n as a one-term expansion.
    pub fn e(&self, n: usize) -> Result<RSym> {
        self.degree(n)?;
        let mut out = RSym::new(Basis::Elementary, n);
        out.insert(if n == 0 { Partition::empty() } else { Partition::new(vec![n])? }, rat(1));
        Ok(out)
    }

    /// p_k o h_n expanded on monomials, with integer coefficients.
    pub fn plethysm_pk_h(&self, n: usize, k: usize) -> Result<BTreeMap<Partition, BigInt>> {
        let h = self.h(n)?;
        let plethysm = self.plethysm_pk(&h, k)?;
        self.convert(&plethysm, Basis::Monomial)?.to_integer_coeffs()
    }

    /// p_k o e_n expanded on monomials, with integer coefficients.
    pub fn plethysm_pk_e(&self, n: usize, k: usize) -> Result<BTreeMap<Partition, BigInt>> {
        let e = self.e(n)?;
        let plethysm = self.plethysm_pk(&e, k)?;
        self.convert(&plethysm, Basis::Monomial)?.to_integer_coeffs()
    }
}

fn mat_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let m = b[0].len();
    let mut out = vec![zeros(m); n];
    for i in 0..n {
        for (t, av) in a[i].iter().enumerate() {
            if av.is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[t][j].is_zero() {
                    let add = av * &b[t][j];
                    out[i][j] += add;
                }
            }
        }
    }
    out
}

fn vec_mat(v: &[BigRational], m: &[Vec<BigRational>]) -> Vec<BigRational> {
    let cols = m[0].len();
    let mut out = zeros(cols);
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for j in 0..cols {
            if !m[i][j].is_zero() {
                let add = c * &m[i][j];
                out[j] += add;
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// verification reports
// ---------------------------------------------------------------------------

/// Outcome of one verification run: a pass/fail flag plus per-item detail
/// lines. Failures are reported, not thrown.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub title: String,
    pub ok: bool,
    pub lines: Vec<(String, bool)>,
}

impl VerifyReport {
    fn new(title: String) -> Self {
        VerifyReport { title, ok: true, lines: vec![] }
    }

    fn push(&mut self, line: String, ok: bool) {
        self.ok &= ok;
        self.lines.push((line, ok));
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.title, if self.ok { "OK" } else { "FAIL" })?;
        for (line, ok) in &self.lines {
            writeln!(f, "  [{}] {}", if *ok { "ok" } else { "FAIL" }, line)?;
        }
        Ok(())
    }
}

/// Verifies the rectangular specialization: the Hall-Littlewood function of
/// (n^k) at a primitive k-th root of unity equals p_k o h_n; the charge-
/// normalized version picks up the sign (-1)^((k-1) n) via
/// zeta^eta(n^k) = (-1)^((k-1) n).
pub fn verify_rectangular_theorem(n: usize, k: usize, tables: &SymTables) -> Result<VerifyReport> {
    let lambda = Partition::rectangle(n, k);
    let mut report = VerifyReport::new(format!("rectangular n={n} k={k}"));
    let hl = tables.hl_monomial(&lambda)?;
    let rhs = tables.plethysm_pk_h(n, k)?;
    let eta_value = eta(&lambda);
    let sign = if ((k - 1) * n) % 2 == 0 { 1 } else { -1 };

    // sign identity zeta^eta = (-1)^((k-1) n)
    let zeta_eta = eval_at_primitive_root(&IntPolynomial::monomial(1, eta_value), k);
    let sign_ok = zeta_eta == CyclotomicValue::from_integer(k, sign);
    report.push(format!("zeta^eta({}) = {}", eta_value, sign), sign_ok);

    for mu in tables.partitions(n * k)? {
        let coeff = hl.coeff(mu).cloned().unwrap_or_else(IntPolynomial::zero);
        let expected = rhs.get(mu).cloned().unwrap_or_else(BigInt::zero);
        let divisible = mu.parts().iter().all(|p| p % k == 0);
        let dichotomy_ok = expected == BigInt::from(u8::from(divisible));

        let lhs = eval_at_primitive_root(&coeff, k);
        let tilde_ok = lhs.as_integer().as_ref() == Some(&expected);

        // charge-normalized: zeta^eta * coeff(zeta^(k-1)) = sign * expected
        let twisted = IntPolynomial::monomial(1, eta_value);
        let twisted = &twisted * &coeff.substitute_power(if k == 1 { 1 } else { k - 1 });
        let prime_lhs = eval_at_primitive_root(&twisted, k);
        let prime_ok =
            prime_lhs.as_integer() == Some(BigInt::from(sign) * &expected);

        report.push(
            format!("m{}: value {}, plethysm {}", mu, lhs, expected),
            tilde_ok && prime_ok && dichotomy_ok,
        );
    }
    Ok(report)
}

/// Verifies the column specialization: the cospin generating function of
/// k-ribbon tableaux of the rectangle with nk rows of length k, specialized
/// at a primitive k-th root of unity, equals p_k o e_n.
pub fn verify_column_case(n: usize, k: usize, tables: &SymTables) -> Result<VerifyReport> {
    let shape = Partition::rectangle(k, n * k);
    let mut report = VerifyReport::new(format!("column n={n} k={k}"));
    let rhs = tables.plethysm_pk_e(n, k)?;
    for mu in tables.partitions(n * k)? {
        let poly = ribbon::cospin_polynomial(&shape, mu.parts(), k)?;
        let lhs = eval_at_primitive_root(&poly, k);
        let expected = rhs.get(mu).cloned().unwrap_or_else(BigInt::zero);
        let ok = lhs.as_integer().as_ref() == Some(&expected);
        report.push(format!("m{}: value {}, plethysm {}", mu, lhs, expected), ok);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn poly(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64_coeffs(coeffs)
    }

    fn tables() -> SymTables {
        SymTables::new(6)
    }

    #[test]
    fn hl_monomial_of_single_row_is_complete() {
        let t = tables();
        let hl = t.hl_monomial(&p(&[4])).unwrap();
        for mu in t.partitions(4).unwrap() {
            assert_eq!(hl.coeff(mu), Some(&IntPolynomial::one()), "mu = {mu:?}");
        }
    }

    #[test]
    fn hl_monomial_cocharge_normalized_values() {
        // coefficients of the function indexed by (2,1,1); the charge
        // normalization (reversal by eta = 3) is also pinned
        let t = tables();
        let hl = t.hl_monomial(&p(&[2, 1, 1])).unwrap();
        assert_eq!(hl.coeff(&p(&[4])), Some(&poly(&[1])));
        assert_eq!(hl.coeff(&p(&[3, 1])), Some(&poly(&[1, 1, 1])));
        assert_eq!(hl.coeff(&p(&[2, 2])), Some(&poly(&[1, 1, 2])));
        assert_eq!(hl.coeff(&p(&[2, 1, 1])), Some(&poly(&[1, 2, 3, 1])));
        assert_eq!(hl.coeff(&p(&[1, 1, 1, 1])), Some(&poly(&[1, 3, 5, 3])));
        let prime = charge_normalized(&hl, eta(&p(&[2, 1, 1])));
        assert_eq!(prime.coeff(&p(&[4])), Some(&poly(&[0, 0, 0, 1])));
        assert_eq!(prime.coeff(&p(&[3, 1])), Some(&poly(&[0, 1, 1, 1])));
        assert_eq!(prime.coeff(&p(&[2, 2])), Some(&poly(&[0, 2, 1, 1])));
        assert_eq!(prime.coeff(&p(&[2, 1, 1])), Some(&poly(&[1, 3, 2, 1])));
        assert_eq!(prime.coeff(&p(&[1, 1, 1, 1])), Some(&poly(&[3, 5, 3, 1])));
    }

    #[test]
    fn hl_routes_agree() {
        // monomial coefficients agree along all three routes: inversions,
        // ribbon cospin, and the fermionic formula
        let t = tables();
        for n in 1..=5 {
            for lambda in partitions_of(n) {
                let hl = t.hl_monomial(&lambda).unwrap();
                let l = lambda.len();
                let scaled = lambda.scale(l);
                for mu in t.partitions(n).unwrap() {
                    let inversion =
                        hl.coeff(mu).cloned().unwrap_or_else(IntPolynomial::zero);
                    let cospin =
                        ribbon::cospin_polynomial(&scaled, mu.parts(), l).unwrap();
                    assert_eq!(inversion, cospin, "cospin route for {lambda:?}/{mu:?}");
                    let fermionic = crate::rigged::fermionic_polynomial(mu, &lambda);
                    assert_eq!(inversion, fermionic, "fermionic route for {lambda:?}/{mu:?}");
                }
            }
        }
    }

    #[test]
    fn schur_expansion_golden() {
        let t = tables();
        let s = t.hl_schur(&p(&[2, 2, 2])).unwrap();
        assert_eq!(s.len(), 7);
        assert_eq!(s.coeff(&p(&[2, 2, 2])), Some(&poly(&[0, 0, 0, 0, 0, 0, 1])));
        assert_eq!(s.coeff(&p(&[3, 2, 1])), Some(&poly(&[0, 0, 0, 0, 1, 1])));
        assert_eq!(s.coeff(&p(&[3, 3])), Some(&poly(&[0, 0, 0, 1])));
        assert_eq!(s.coeff(&p(&[4, 1, 1])), Some(&poly(&[0, 0, 0, 1])));
        assert_eq!(s.coeff(&p(&[4, 2])), Some(&poly(&[0, 0, 1, 1, 1])));
        assert_eq!(s.coeff(&p(&[5, 1])), Some(&poly(&[0, 1, 1])));
        assert_eq!(s.coeff(&p(&[6])), Some(&IntPolynomial::one()));
    }

    #[test]
    fn schur_monomial_round_trip() {
        let t = tables();
        // the monomial expansion of s_(n) is all ones; converting to Schur
        // recovers the single term
        let mut f = QSym::new(Basis::Monomial, 4);
        for mu in t.partitions(4).unwrap() {
            f.insert(mu.clone(), IntPolynomial::one());
        }
        let s = t.to_schur(&f).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.coeff(&p(&[4])), Some(&IntPolynomial::one()));
        // and round-trips are identities on arbitrary vectors
        let mut g = QSym::new(Basis::Monomial, 5);
        for (i, mu) in t.partitions(5).unwrap().iter().enumerate() {
            g.insert(mu.clone(), poly(&[i as i64 + 1, 2, 0, 1]));
        }
        let back = t.schur_to_monomial(&t.to_schur(&g).unwrap()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn specialization_golden() {
        // the function of (2,2,2) at a primitive cube root of unity
        let t = tables();
        let s = t.hl_schur(&p(&[2, 2, 2])).unwrap();
        let spec = specialize(&s, 3);
        let one = CyclotomicValue::from_integer(3, 1);
        let minus = CyclotomicValue::from_integer(3, -1);
        assert_eq!(spec.coeff(&p(&[2, 2, 2])), Some(&one));
        assert_eq!(spec.coeff(&p(&[3, 2, 1])), Some(&minus));
        assert_eq!(spec.coeff(&p(&[3, 3])), Some(&one));
        assert_eq!(spec.coeff(&p(&[4, 1, 1])), Some(&one));
        assert_eq!(spec.coeff(&p(&[4, 2])), None, "coefficient vanishes");
        assert_eq!(spec.coeff(&p(&[5, 1])), Some(&minus));
        assert_eq!(spec.coeff(&p(&[6])), Some(&one));
        // constant-coefficient functions are unchanged
        let mut f = QSym::new(Basis::Monomial, 2);
        f.insert(p(&[2]), poly(&[7]));
        let spec = specialize(&f, 4);
        assert_eq!(spec.coeff(&p(&[2])), Some(&CyclotomicValue::from_integer(4, 7)));
    }

    #[test]
    fn basis_conversion_goldens() {
        let t = tables();
        // h_2 = 1/2 p_11 + 1/2 p_2
        let h2 = t.h(2).unwrap();
        let in_p = t.convert(&h2, Basis::PowerSum).unwrap();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        assert_eq!(in_p.coeff(&p(&[1, 1])), Some(&half));
        assert_eq!(in_p.coeff(&p(&[2])), Some(&half));
        // p_n on monomials is m_(n)
        let mut pn = RSym::new(Basis::PowerSum, 5);
        pn.insert(p(&[5]), rat(1));
        let in_m = t.convert(&pn, Basis::Monomial).unwrap();
        assert_eq!(in_m.len(), 1);
        assert_eq!(in_m.coeff(&p(&[5])), Some(&rat(1)));
    }

    #[test]
    fn omega_duality() {
        // omega flips h and e: in the power-sum basis it scales p_lambda by
        // (-1)^(|lambda| - l(lambda)); checked for all degrees <= 6
        let t = tables();
        for n in 0..=6 {
            let h = t.h(n).unwrap();
            let h_in_p = t.convert(&h, Basis::PowerSum).unwrap();
            let mut omega = RSym::new(Basis::PowerSum, n);
            for (lam, c) in h_in_p.coeffs.iter() {
                let sign = if (n - lam.len()) % 2 == 0 { 1 } else { -1 };
                omega.insert(lam.clone(), c * rat(sign));
            }
            let e = t.convert(&omega, Basis::Elementary).unwrap();
            let expected = t.e(n).unwrap();
            assert_eq!(e, expected, "omega(h_{n}) = e_{n}");
        }
    }

    #[test]
    fn basis_round_trips() {
        let t = tables();
        for n in 1..=5 {
            let parts = t.partitions(n).unwrap().to_vec();
            for basis in [
                Basis::Monomial,
                Basis::Elementary,
                Basis::Complete,
                Basis::PowerSum,
                Basis::Schur,
            ] {
                let mut f = RSym::new(Basis::Monomial, n);
                for (i, mu) in parts.iter().enumerate() {
                    f.insert(mu.clone(), rat(i as i64 + 1) / rat(3));
                }
                let converted = t.convert(&f, basis).unwrap();
                let back = t.convert(&converted, Basis::Monomial).unwrap();
                assert_eq!(back, f, "round trip through {basis:?} at degree {n}");
            }
        }
    }

    #[test]
    fn plethysm_goldens() {
        let t = tables();
        // p_3 o h_2 = 1/2 (p_33 + p_6)
        let big = SymTables::new(6);
        let h2 = big.h(2).unwrap();
        let result = big.plethysm_pk(&h2, 3).unwrap();
        let in_p = big.convert(&result, Basis::PowerSum).unwrap();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        assert_eq!(in_p.coeff(&p(&[3, 3])), Some(&half));
        assert_eq!(in_p.coeff(&p(&[6])), Some(&half));
        assert_eq!(in_p.len(), 2);
        // p_1 is the identity
        let h3 = t.h(3).unwrap();
        assert_eq!(t.plethysm_pk(&h3, 1).unwrap(), h3);
        // p_k o h_n on monomials: 1 exactly on partitions with all parts
        // divisible by k
        for (n, k) in [(2, 2), (2, 3), (1, 4)] {
            let big = SymTables::new(n * k);
            let map = big.plethysm_pk_h(n, k).unwrap();
            for mu in big.partitions(n * k).unwrap() {
                let expected = BigInt::from(u8::from(mu.parts().iter().all(|p| p % k == 0)));
                assert_eq!(map.get(mu).cloned().unwrap_or_default(), expected, "mu {mu:?}");
            }
        }
    }

    #[test]
    fn eta_values() {
        assert_eq!(eta(&p(&[2, 1, 1])), 3);
        assert_eq!(eta(&p(&[2, 2, 2])), 6);
        assert_eq!(eta(&Partition::empty()), 0);
        // eta(n^k) = n k (k-1) / 2 and zeta^eta = (-1)^((k-1) n)
        for n in 1..=5usize {
            for k in 1..=5usize {
                let lambda = Partition::rectangle(n, k);
                assert_eq!(eta(&lambda), n * k * (k - 1) / 2);
                let zeta_eta =
                    eval_at_primitive_root(&IntPolynomial::monomial(1, eta(&lambda)), k);
                let sign = if ((k - 1) * n) % 2 == 0 { 1 } else { -1 };
                assert_eq!(zeta_eta, CyclotomicValue::from_integer(k, sign));
            }
        }
    }

    #[test]
    fn rectangular_verification_small() {
        let t = SymTables::new(6);
        for (n, k) in [(1, 1), (2, 2), (2, 3), (3, 2), (1, 5)] {
            let report = verify_rectangular_theorem(n, k, &t).unwrap();
            assert!(report.ok, "{report}");
        }
    }

    #[test]
    fn column_verification_small() {
        let t = SymTables::new(4);
        for (n, k) in [(1, 1), (1, 2), (2, 2)] {
            let report = verify_column_case(n, k, &t).unwrap();
            assert!(report.ok, "{report}");
        }
    }

    #[test]
    fn budget_is_enforced() {
        let t = SymTables::new(3);
        assert!(matches!(
            t.hl_monomial(&p(&[2, 2])),
            Err(Error::DegreeBudget { requested: 4, budget: 3 })
        ));
    }

    use crate::partition::partitions_of;
}
