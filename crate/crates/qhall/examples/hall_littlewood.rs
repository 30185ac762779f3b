//! Hall-Littlewood expansions on monomials and Schur functions.
//!
//! Run with: cargo run --release --example hall_littlewood

use qhall::partition::Partition;
use qhall::symfunc::{charge_normalized, eta, SymTables};

fn main() {
    let tables = SymTables::new(8);

    let lambda: Partition = "2,1,1".parse().unwrap();
    let hl = tables.hl_monomial(&lambda).unwrap();
    println!("monomial expansion for {lambda} (cocharge normalization):");
    println!("{hl}");
    println!("\ncharge normalization (coefficients reversed by eta = {}):", eta(&lambda));
    println!("{}", charge_normalized(&hl, eta(&lambda)));

    let lambda: Partition = "2,2,2".parse().unwrap();
    let schur = tables.hl_schur(&lambda).unwrap();
    println!("\nSchur expansion for {lambda}:");
    println!("{schur}");

    // the coefficient of m_mu is simultaneously a cospin polynomial, an
    // inversion polynomial, and a fermionic polynomial
    let mu = Partition::new(vec![2, 2, 1, 1]).unwrap();
    let inversion = tables.hl_monomial(&lambda).unwrap().coeff(&mu).cloned().unwrap();
    let scaled = lambda.scale(lambda.len());
    let cospin = qhall::ribbon::cospin_polynomial(&scaled, mu.parts(), lambda.len()).unwrap();
    let fermionic = qhall::rigged::fermionic_polynomial(&mu, &lambda);
    println!("\ncoefficient of m{mu} three ways:");
    println!("  inversions over the quotient tuple: {inversion}");
    println!("  cospin over {}-ribbon tableaux of {scaled}: {cospin}", lambda.len());
    println!("  fermionic formula: {fermionic}");
    assert_eq!(inversion, cospin);
    assert_eq!(inversion, fermionic);
}
