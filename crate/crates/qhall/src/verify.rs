//! End-to-end verification suites.
//!
//! Each suite re-derives a family of identities from scratch and reports one
//! line per checked instance. The CLI `verify` subcommand and the acceptance
//! test target are both thin wrappers around these functions.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Result;
use crate::partition::{partitions_of, Partition};
use crate::qpoly::{eval_at_primitive_root, IntPolynomial};
use crate::ribbon::{
    cospin_from_max, cospin_polynomial, enumerate_ribbon_tableaux, max_twice_spin, stanton_white,
};
use crate::rigged::{
    cocharge_polynomial, diagonal_matrix, enumerate_configurations, enumerate_riggings,
    fermionic_polynomial, rectangular_shape_check, shape_from_diagonal, theta,
};
use crate::symfunc::{charge_normalized, eta, specialize, SymTables};
pub use crate::symfunc::{verify_column_case, verify_rectangular_theorem, VerifyReport};
use crate::tuples::{
    diagonal_classes, diagonal_vector, diagonal_vector_with_shifts, enumerate_tuples, inversion_polynomial, inversions,
    inversions_with_shifts, restricted_inversion_polynomial, Ssyt, TupleTableau,
};

fn report(title: &str) -> VerifyReport {
    VerifyReport { title: title.to_string(), ok: true, lines: vec![] }
}

fn push(r: &mut VerifyReport, line: String, ok: bool) {
    r.ok &= ok;
    r.lines.push((line, ok));
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn poly(coeffs: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64_coeffs(coeffs)
}

/// The 27-cell cospin golden: the generating polynomial of the 3-ribbon
/// tableaux of shape (8,7,6,5,1) and weight (3,3,2,1), with 107 tableaux.
pub fn cospin_golden() -> Result<VerifyReport> {
    let mut r = report("cospin golden (8,7,6,5,1) / (3,3,2,1) / k=3");
    let shape = p(&[8, 7, 6, 5, 1]);
    let weight = [3usize, 3, 2, 1];
    let class = enumerate_ribbon_tableaux(&shape, &weight, 3)?;
    for t in &class {
        t.validate()?;
    }
    push(&mut r, format!("tableau count {}", class.len()), class.len() == 107);
    let computed = cospin_polynomial(&shape, &weight, 3)?;
    let expected = poly(&[5, 18, 31, 33, 17, 3]);
    push(&mut r, format!("cospin polynomial {computed}"), computed == expected);
    let max = max_twice_spin(&class).unwrap();
    let in_range = class.iter().all(|t| cospin_from_max(t, max) <= 5);
    push(&mut r, "all cospin values in 0..=5".into(), in_range);
    Ok(r)
}

/// Monomial golden for the function indexed by (2,1,1): the cocharge-
/// normalized coefficients and their charge-normalized companions (the
/// latter are the values printed with the variable t).
pub fn hl_monomial_golden(tables: &SymTables) -> Result<VerifyReport> {
    let mut r = report("monomial golden for lambda = (2,1,1)");
    let lambda = p(&[2, 1, 1]);
    let hl = tables.hl_monomial(&lambda)?;
    let prime = charge_normalized(&hl, eta(&lambda));
    let cocharge_expect: Vec<(Partition, IntPolynomial)> = vec![
        (p(&[4]), poly(&[1])),
        (p(&[3, 1]), poly(&[1, 1, 1])),
        (p(&[2, 2]), poly(&[1, 1, 2])),
        (p(&[2, 1, 1]), poly(&[1, 2, 3, 1])),
        (p(&[1, 1, 1, 1]), poly(&[1, 3, 5, 3])),
    ];
    let charge_expect: Vec<(Partition, IntPolynomial)> = vec![
        (p(&[4]), poly(&[0, 0, 0, 1])),
        (p(&[3, 1]), poly(&[0, 1, 1, 1])),
        (p(&[2, 2]), poly(&[0, 2, 1, 1])),
        (p(&[2, 1, 1]), poly(&[1, 3, 2, 1])),
        (p(&[1, 1, 1, 1]), poly(&[3, 5, 3, 1])),
    ];
    for (mu, expected) in &cocharge_expect {
        let got = hl.coeff(mu).cloned().unwrap_or_else(IntPolynomial::zero);
        push(&mut r, format!("cocharge m{mu}: {got}"), &got == expected);
    }
    for (mu, expected) in &charge_expect {
        let got = prime.coeff(mu).cloned().unwrap_or_else(IntPolynomial::zero);
        push(&mut r, format!("charge   m{mu}: {got}"), &got == expected);
    }
    Ok(r)
}

/// Schur golden for the function indexed by (2,2,2): seven terms.
pub fn hl_schur_golden(tables: &SymTables) -> Result<VerifyReport> {
    let mut r = report("Schur golden for lambda = (2,2,2)");
    let s = tables.hl_schur(&p(&[2, 2, 2]))?;
    push(&mut r, format!("{} terms", s.len()), s.len() == 7);
    let expect: Vec<(Partition, IntPolynomial)> = vec![
        (p(&[2, 2, 2]), poly(&[0, 0, 0, 0, 0, 0, 1])),
        (p(&[3, 2, 1]), poly(&[0, 0, 0, 0, 1, 1])),
        (p(&[3, 3]), poly(&[0, 0, 0, 1])),
        (p(&[4, 1, 1]), poly(&[0, 0, 0, 1])),
        (p(&[4, 2]), poly(&[0, 0, 1, 1, 1])),
        (p(&[5, 1]), poly(&[0, 1, 1])),
        (p(&[6]), poly(&[1])),
    ];
    for (mu, expected) in &expect {
        let got = s.coeff(mu).cloned().unwrap_or_else(IntPolynomial::zero);
        push(&mut r, format!("s{mu}: {got}"), &got == expected);
    }
    Ok(r)
}

/// Root-of-unity golden: the Schur expansion of the (2,2,2) function at a
/// primitive cube root of unity, and its identity with p_3 o h_2.
pub fn root_of_unity_golden(tables: &SymTables) -> Result<VerifyReport> {
    let mut r = report("root-of-unity golden for lambda = (2,2,2), k = 3");
    let s = tables.hl_schur(&p(&[2, 2, 2]))?;
    let spec = specialize(&s, 3);
    let expect: Vec<(Partition, i64)> = vec![
        (p(&[2, 2, 2]), 1),
        (p(&[3, 2, 1]), -1),
        (p(&[3, 3]), 1),
        (p(&[4, 1, 1]), 1),
        (p(&[4, 2]), 0),
        (p(&[5, 1]), -1),
        (p(&[6]), 1),
    ];
    let mut nonzero = 0;
    for (mu, value) in &expect {
        let got = spec.coeff(mu);
        let ok = match got {
            None => *value == 0,
            Some(v) => v.as_integer() == Some(BigInt::from(*value)),
        };
        if *value != 0 {
            nonzero += 1;
        }
        push(&mut r, format!("s{mu}: expected {value}"), ok);
    }
    push(&mut r, format!("{} surviving terms", spec.len()), spec.len() == nonzero);

    // the monomial specialization equals p_3 o h_2 exactly
    let m = tables.hl_monomial(&p(&[2, 2, 2]))?;
    let m_spec = specialize(&m, 3);
    let plethysm = tables.plethysm_pk_h(2, 3)?;
    let mut plethysm_ok = true;
    for mu in tables.partitions(6)? {
        let lhs = m_spec
            .coeff(mu)
            .and_then(|v| v.as_integer())
            .unwrap_or_else(BigInt::zero);
        let rhs = plethysm.get(mu).cloned().unwrap_or_else(BigInt::zero);
        plethysm_ok &= lhs == rhs;
    }
    push(&mut r, "monomial specialization equals p_3 o h_2".into(), plethysm_ok);
    Ok(r)
}

/// Rectangular specialization for every (n, k) with n k <= max_total, k >= 2.
pub fn rectangular_suite(tables: &SymTables, max_total: usize) -> Result<VerifyReport> {
    let mut r = report("rectangular specialization suite");
    for k in 2..=max_total {
        for n in 1..=max_total / k {
            let sub = verify_rectangular_theorem(n, k, tables)?;
            push(&mut r, format!("n={n} k={k}: {} checks", sub.lines.len()), sub.ok);
        }
    }
    Ok(r)
}

/// Column specialization for the given instances.
pub fn column_suite(tables: &SymTables, instances: &[(usize, usize)]) -> Result<VerifyReport> {
    let mut r = report("column specialization suite");
    for &(n, k) in instances {
        let sub = verify_column_case(n, k, tables)?;
        push(&mut r, format!("n={n} k={k}: {} checks", sub.lines.len()), sub.ok);
    }
    Ok(r)
}

/// Statistic transport and bijectivity of the ribbon/tuple correspondence:
/// for every shape of weight <= max_weight and every ribbon size k <= max_k,
/// over all partition weights, the cospin of a tableau equals the inversion
/// count of its image, and the image set is exactly the tuple enumeration.
pub fn transport_suite(max_weight: usize, max_k: usize) -> Result<VerifyReport> {
    let mut r = report("ribbon/tuple transport suite");
    for k in 1..=max_k {
        for n in 0..=max_weight {
            let mut tableaux = 0usize;
            let mut instances = 0usize;
            let mut ok = true;
            for lam in partitions_of(n) {
                let core = lam.k_core(k);
                let count = (n - core.weight()) / k;
                let quotient = lam.k_quotient(k).entries().to_vec();
                let shifts = lam.k_shifts(k);
                for mu in partitions_of(count) {
                    let class = enumerate_ribbon_tableaux(&lam, mu.parts(), k)?;
                    if class.is_empty() {
                        continue;
                    }
                    instances += 1;
                    tableaux += class.len();
                    let max = max_twice_spin(&class).unwrap();
                    let mut images = Vec::with_capacity(class.len());
                    for t in &class {
                        let tuple = stanton_white(t);
                        ok &= inversions_with_shifts(&tuple, &shifts)
                            == cospin_from_max(t, max);
                        images.push(tuple);
                    }
                    images.sort();
                    images.dedup();
                    ok &= images.len() == class.len();
                    let mut all = enumerate_tuples(&quotient, mu.parts())?;
                    all.sort();
                    ok &= images == all;
                }
            }
            if instances > 0 {
                push(
                    &mut r,
                    format!("k={k} |shape|={n}: {tableaux} tableaux in {instances} classes"),
                    ok,
                );
            }
        }
    }
    Ok(r)
}

/// Statistic transport and bijectivity of the rigged-configuration map: over
/// all tuples of weakly increasing single rows of total size <= max_total and
/// all partition weights, cocharge equals inversions and the image is the
/// full configuration fiber.
pub fn theta_transport_suite(max_total: usize) -> Result<VerifyReport> {
    let mut r = report("rigged-configuration transport suite");
    for total in 1..=max_total {
        let mut tuples = 0usize;
        let mut ok = true;
        for sizes in partitions_of(total) {
            let mut shape_sizes = sizes.parts().to_vec();
            shape_sizes.reverse();
            let shapes: Vec<Partition> =
                shape_sizes.iter().map(|&s| p(&[s])).collect();
            for mu in partitions_of(total) {
                let all = enumerate_tuples(&shapes, mu.parts())?;
                let mut images = Vec::with_capacity(all.len());
                for t in &all {
                    let rc = theta(t)?;
                    ok &= rc.cocharge() == inversions(t);
                    images.push(rc);
                }
                tuples += all.len();
                images.sort();
                images.dedup();
                ok &= images.len() == all.len();
                let delta = Partition::from_unsorted(shape_sizes.clone());
                let mut fiber = Vec::new();
                for c in enumerate_configurations(&mu, &delta) {
                    fiber.extend(enumerate_riggings(&c));
                }
                fiber.sort();
                ok &= images == fiber;
            }
        }
        push(&mut r, format!("total size {total}: {tuples} tuples"), ok);
    }
    Ok(r)
}

/// Fermionic equivalences: enumeration against the formula, the formula
/// against inversion polynomials, and the restricted golden on the
/// 12-element class.
pub fn fermionic_suite() -> Result<VerifyReport> {
    let mut r = report("fermionic equivalence suite");

    // cocharge enumeration equals the fermionic formula, and both equal the
    // inversion polynomial of three rows of two, for every weight of 6
    let delta = p(&[2, 2, 2]);
    let shapes = vec![p(&[2]); 3];
    let mut ok = true;
    for mu in partitions_of(6) {
        let formula = fermionic_polynomial(&mu, &delta);
        ok &= cocharge_polynomial(&mu, &delta) == formula;
        ok &= inversion_polynomial(&shapes, mu.parts())? == formula;
    }
    push(&mut r, "delta = (2,2,2): all weights of 6".into(), ok);

    // the ((2),(2),(4)) instance with weight (3,2,2,1)
    let shapes = vec![p(&[2]), p(&[2]), p(&[4])];
    let delta = p(&[4, 2, 2]);
    let mu = p(&[3, 2, 2, 1]);
    let formula = fermionic_polynomial(&mu, &delta);
    let ok = cocharge_polynomial(&mu, &delta) == formula
        && inversion_polynomial(&shapes, mu.parts())? == formula;
    push(&mut r, "instance (3,2,2,1) / ((2),(2),(4))".into(), ok);

    // the unique 12-element diagonal class: restricted inversion polynomial,
    // restricted fermionic form, and the fiber itself all agree
    let classes = diagonal_classes(&shapes, mu.parts())?;
    let twelve: Vec<_> = classes.iter().filter(|c| c.len() == 12).collect();
    let mut ok = twelve.len() == 1;
    if ok {
        let class = twelve[0];
        let expected = poly(&[0, 1, 3, 4, 3, 1]);
        let restricted = restricted_inversion_polynomial(class);
        let config = shape_from_diagonal(&class.vector)?;
        ok &= restricted == expected;
        ok &= config.fermionic_restricted() == expected;
        ok &= crate::rigged::fiber_check(&shapes, mu.parts(), &class.vector)?;
    }
    push(&mut r, "12-element class restricted form q(q+1)^2(q^2+q+1)".into(), ok);

    // every diagonal class of the instance satisfies the fiber identity
    let mut ok = true;
    for class in &classes {
        ok &= crate::rigged::fiber_check(&shapes, mu.parts(), &class.vector)?;
    }
    push(&mut r, "all diagonal classes of the instance".into(), ok);
    Ok(r)
}

/// Diagonal-class laws on k copies of a single row (n): singleton classes
/// exist exactly for weights divisible by k, every larger class vanishes at a
/// primitive k-th root of unity, the class polynomials sum to the inversion
/// polynomial, and the specialization takes only the values 0 and 1.
pub fn diagonal_class_suite(max_total: usize) -> Result<VerifyReport> {
    let mut r = report("diagonal class suite");
    for k in 2..=max_total {
        for n in 1..=max_total / k {
            let shapes = vec![p(&[n]); k];
            let mut ok = true;
            for mu in partitions_of(n * k) {
                let classes = diagonal_classes(&shapes, mu.parts())?;
                let divisible = mu.parts().iter().all(|part| part % k == 0);
                let singletons = classes.iter().filter(|c| c.len() == 1).count();
                if divisible {
                    ok &= singletons == 1;
                    let singleton = classes.iter().find(|c| c.len() == 1).unwrap();
                    ok &= inversions(&singleton.members[0]) == 0;
                    ok &= restricted_inversion_polynomial(singleton) == IntPolynomial::one();
                } else {
                    ok &= singletons == 0;
                }
                let mut sum = IntPolynomial::zero();
                for class in &classes {
                    let restricted = restricted_inversion_polynomial(class);
                    if class.len() >= 2 {
                        ok &= eval_at_primitive_root(&restricted, k).is_zero();
                    }
                    sum += &restricted;
                }
                let total = inversion_polynomial(&shapes, mu.parts())?;
                ok &= sum == total;
                let value = eval_at_primitive_root(&total, k);
                let expected = BigInt::from(u8::from(divisible));
                ok &= value.as_integer() == Some(expected);
            }
            push(&mut r, format!("n={n} k={k}"), ok);
        }
    }
    Ok(r)
}

/// The matrix recoding of the bijection: the displayed 4x4 matrices, shape
/// agreement between the accumulated matrix and the bijection image on whole
/// instances, and the rectangle chains of singleton classes.
pub fn matrix_recoding_suite(max_total: usize) -> Result<VerifyReport> {
    let mut r = report("diagonal-matrix recoding suite");

    let tuple = TupleTableau::new(vec![
        Ssyt::new(vec![vec![1, 4]])?,
        Ssyt::new(vec![vec![1, 2]])?,
        Ssyt::new(vec![vec![1, 2, 3, 3]])?,
    ])?;
    let m = diagonal_matrix(&tuple)?;
    let m_ok = m.rows()
        == [
            vec![3, 0, 0, 0],
            vec![0, 2, 0, 1],
            vec![0, 0, 1, 0],
            vec![0, 0, 1, 0],
        ];
    push(&mut r, "label-count matrix of the displayed tuple".into(), m_ok);
    let acc = m.accumulated();
    let acc_ok = acc.rows()
        == [
            vec![3, 3, 3, 3],
            vec![0, 2, 2, 3],
            vec![0, 0, 1, 1],
            vec![0, 0, 1, 1],
        ];
    push(&mut r, "accumulated matrix of the displayed tuple".into(), acc_ok);
    let rc = theta(&tuple)?;
    let shape_ok = rc.config().shapes()
        == [p(&[3]), p(&[3, 2]), p(&[3, 2, 1, 1]), p(&[3, 3, 1, 1])];
    push(&mut r, "image shape read from the columns".into(), shape_ok);

    // shape agreement on whole instances
    let instances: Vec<(Vec<Partition>, Partition)> = vec![
        (vec![p(&[2]); 3], p(&[2, 2, 2])),
        (vec![p(&[2]), p(&[2]), p(&[4])], p(&[3, 2, 2, 1])),
    ];
    for (shapes, mu) in instances {
        let mut ok = true;
        for t in enumerate_tuples(&shapes, mu.parts())? {
            let rc = theta(&t)?;
            let read = shape_from_diagonal(&diagonal_vector(&t))?;
            ok &= read.shapes() == rc.config().shapes();
        }
        push(&mut r, format!("shape agreement on {shapes:?} / {mu}"), ok);
    }

    // singleton classes map to rectangle chains
    let mut ok = true;
    for k in 2..=max_total {
        for n in 1..=max_total / k {
            for s in partitions_of(n) {
                ok &= rectangular_shape_check(n, k, s.parts())?;
            }
        }
    }
    push(&mut r, "singleton classes give rectangle chains".into(), ok);
    Ok(r)
}

/// For dominoes, the cospin polynomial of every diagonal class (pulled back
/// through the ribbon/tuple correspondence, with the content offsets of the
/// shape) factors as q^a (1+q)^b.
pub fn domino_factorization_suite(max_weight: usize) -> Result<VerifyReport> {
    let mut r = report("domino diagonal-class factorization suite");
    for n in 0..=max_weight {
        let mut classes_checked = 0usize;
        let mut ok = true;
        for lam in partitions_of(n) {
            let core = lam.k_core(2);
            let count = (n - core.weight()) / 2;
            let shifts = lam.k_shifts(2);
            for mu in partitions_of(count) {
                let class = enumerate_ribbon_tableaux(&lam, mu.parts(), 2)?;
                if class.is_empty() {
                    continue;
                }
                let max = max_twice_spin(&class).unwrap();
                let mut groups: std::collections::BTreeMap<_, IntPolynomial> =
                    std::collections::BTreeMap::new();
                for t in &class {
                    let d = diagonal_vector_with_shifts(&stanton_white(t), &shifts);
                    groups
                        .entry(d)
                        .or_insert_with(IntPolynomial::zero)
                        .add_term(&BigInt::from(1), cospin_from_max(t, max));
                }
                for poly in groups.values() {
                    classes_checked += 1;
                    ok &= is_power_shift_of_one_plus_q(poly);
                }
            }
        }
        if classes_checked > 0 {
            push(&mut r, format!("|shape|={n}: {classes_checked} classes"), ok);
        }
    }
    Ok(r)
}

/// True iff poly = q^a (1+q)^b, decided by exact division.
fn is_power_shift_of_one_plus_q(poly: &IntPolynomial) -> bool {
    if poly.is_zero() {
        return false;
    }
    let a = (0..).find(|&e| !poly.coeff(e).is_zero()).unwrap();
    let mut rest = match poly.exact_div(&IntPolynomial::monomial(1, a)) {
        Ok(p) => p,
        Err(_) => return false,
    };
    let one_plus_q = poly1(&[1, 1]);
    while rest.degree().map_or(false, |d| d > 0) {
        match rest.exact_div(&one_plus_q) {
            Ok(next) => rest = next,
            Err(_) => return false,
        }
    }
    rest == IntPolynomial::one()
}

fn poly1(coeffs: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64_coeffs(coeffs)
}

/// Runs every suite at the acceptance parameters and returns the reports.
pub fn run_all(tables: &SymTables) -> Result<Vec<VerifyReport>> {
    Ok(vec![
        cospin_golden()?,
        hl_monomial_golden(tables)?,
        hl_schur_golden(tables)?,
        root_of_unity_golden(tables)?,
        rectangular_suite(tables, 8)?,
        column_suite(tables, &[(1, 2), (2, 2), (1, 3)])?,
        transport_suite(12, 3)?,
        theta_transport_suite(8)?,
        fermionic_suite()?,
        diagonal_class_suite(8)?,
        matrix_recoding_suite(8)?,
        domino_factorization_suite(12)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_predicate() {
        assert!(is_power_shift_of_one_plus_q(&poly1(&[1])));
        assert!(is_power_shift_of_one_plus_q(&poly1(&[0, 1, 1])));
        assert!(is_power_shift_of_one_plus_q(&poly1(&[1, 2, 1])));
        assert!(is_power_shift_of_one_plus_q(&poly1(&[0, 0, 1, 3, 3, 1])));
        assert!(!is_power_shift_of_one_plus_q(&poly1(&[1, 1, 1])));
        assert!(!is_power_shift_of_one_plus_q(&poly1(&[1, 3, 4, 3, 1])));
        assert!(!is_power_shift_of_one_plus_q(&IntPolynomial::zero()));
    }

    #[test]
    fn goldens_pass() {
        let tables = SymTables::new(6);
        assert!(cospin_golden().unwrap().ok);
        assert!(hl_monomial_golden(&tables).unwrap().ok);
        assert!(hl_schur_golden(&tables).unwrap().ok);
        assert!(root_of_unity_golden(&tables).unwrap().ok);
    }

    #[test]
    fn small_suites_pass() {
        assert!(transport_suite(6, 2).unwrap().ok);
        assert!(theta_transport_suite(4).unwrap().ok);
        assert!(fermionic_suite().unwrap().ok);
        assert!(diagonal_class_suite(4).unwrap().ok);
        assert!(matrix_recoding_suite(4).unwrap().ok);
        assert!(domino_factorization_suite(6).unwrap().ok);
    }
}
