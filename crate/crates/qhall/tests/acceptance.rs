//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Run with:
//!   cargo test --release -p qhall --test acceptance -- --nocapture

use std::sync::OnceLock;

use qhall::symfunc::SymTables;
use qhall::verify::{self, VerifyReport};

fn tables() -> &'static SymTables {
    static TABLES: OnceLock<SymTables> = OnceLock::new();
    TABLES.get_or_init(|| SymTables::new(8))
}

fn gate(number: usize, name: &str, report: VerifyReport) {
    let status = if report.ok { "PASS" } else { "FAIL" };
    println!("criterion {number:>2} ({name}): {status}");
    if !report.ok {
        print!("{report}");
    }
    assert!(report.ok, "criterion {number} failed:\n{report}");
}

#[test]
fn criterion_01_cospin_golden() {
    // exact equality of the 27-cell cospin polynomial; 107 tableaux at q = 1
    gate(1, "cospin golden", verify::cospin_golden().unwrap());
}

#[test]
fn criterion_02_hl_monomial_golden() {
    // the five monomial coefficients of the (2,1,1) function, pinned in both
    // the cocharge normalization and its charge-normalized (printed) form
    gate(2, "monomial golden", verify::hl_monomial_golden(tables()).unwrap());
}

#[test]
fn criterion_03_hl_schur_golden() {
    // the seven Schur terms of the (2,2,2) function, exactly
    gate(3, "Schur golden", verify::hl_schur_golden(tables()).unwrap());
}

#[test]
fn criterion_04_root_of_unity_golden() {
    // specialization of the (2,2,2) function at a primitive cube root:
    // alternating Schur signs, and equality with p_3 o h_2; exact residues
    gate(4, "root-of-unity golden", verify::root_of_unity_golden(tables()).unwrap());
}

#[test]
fn criterion_05_rectangular_theorem() {
    // every rectangle n^k with n k <= 8, k >= 2, including the sign identity
    gate(5, "rectangular specialization", verify::rectangular_suite(tables(), 8).unwrap());
}

#[test]
fn criterion_06_column_case() {
    gate(
        6,
        "column specialization",
        verify::column_suite(tables(), &[(1, 2), (2, 2), (1, 3)]).unwrap(),
    );
}

#[test]
fn criterion_07_statistic_transport() {
    // cospin = inversions through the ribbon/tuple correspondence for every
    // shape of weight <= 12 and k <= 3, with image-set bijectivity; and
    // cocharge = inversions through the rigged-configuration map for all
    // single-row tuples of total size <= 8
    gate(7, "ribbon/tuple transport", verify::transport_suite(12, 3).unwrap());
    gate(7, "rigged-configuration transport", verify::theta_transport_suite(8).unwrap());
}

#[test]
fn criterion_08_fermionic_equivalence() {
    // cocharge enumeration = fermionic formula = inversion polynomials on
    // the stated instances, and the 12-element class restricted golden
    gate(8, "fermionic equivalence", verify::fermionic_suite().unwrap());
}

#[test]
fn criterion_09_diagonal_class_laws() {
    // singleton classes iff all weight parts divisible by k; larger classes
    // vanish at the primitive root; class polynomials sum to the total; the
    // specialization takes only the values 0 and 1
    gate(9, "diagonal class laws", verify::diagonal_class_suite(8).unwrap());
}

#[test]
fn criterion_10_matrix_recoding() {
    // the displayed matrices bit-exactly; shape agreement between the
    // accumulated matrix and the bijection on whole instances; rectangle
    // chains for singleton classes
    gate(10, "matrix recoding", verify::matrix_recoding_suite(8).unwrap());
}

#[test]
fn criterion_11_domino_class_factorization() {
    // every domino diagonal-class cospin polynomial with |shape| <= 12
    // factors as q^a (1+q)^b, checked by exact division
    gate(11, "domino class factorization", verify::domino_factorization_suite(12).unwrap());
}
