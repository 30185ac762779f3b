//! The column companion: cospin functions of rectangles with rows of length
//! k specialize to power-sum plethysms of elementary symmetric functions.
//!
//! Run with: cargo run --release --example column_case

use qhall::partition::Partition;
use qhall::qpoly::eval_at_primitive_root;
use qhall::ribbon::cospin_polynomial;
use qhall::symfunc::{verify_column_case, SymTables};

fn main() {
    let tables = SymTables::new(8);

    // nk rows of length k, tiled by k-ribbons: the k-quotient is a k-tuple of
    // single columns
    let (n, k) = (2usize, 2usize);
    let shape = Partition::rectangle(k, n * k);
    println!("shape {shape}, {k}-quotient {:?}", shape.k_quotient(k));
    for mu in tables.partitions(n * k).unwrap() {
        let poly = cospin_polynomial(&shape, mu.parts(), k).unwrap();
        let value = eval_at_primitive_root(&poly, k);
        println!("  m{mu}: cospin polynomial {poly}, at zeta_{k}: {value}");
    }
    let plethysm = tables.plethysm_pk_e(n, k).unwrap();
    let terms: Vec<String> = plethysm.iter().map(|(mu, c)| format!("{c}*m{mu}")).collect();
    println!("p_{k} o e_{n} = {}", terms.join(" + "));

    for (n, k) in [(1, 2), (2, 2), (1, 3)] {
        let report = verify_column_case(n, k, &tables).unwrap();
        println!(
            "column case n={n} k={k}: {}",
            if report.ok { "specialization equals p_k o e_n" } else { "FAILED" }
        );
        assert!(report.ok);
    }
}
