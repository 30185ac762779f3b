//! Ribbon tableaux and the cospin statistic: the 107-tableau instance.
//!
//! Run with: cargo run --release --example cospin_polynomial

use qhall::partition::Partition;
use qhall::ribbon::{cospin_from_max, enumerate_ribbon_tableaux, max_twice_spin, spin};

fn main() {
    let shape: Partition = "8,7,6,5,1".parse().unwrap();
    let weight = [3, 3, 2, 1];
    let k = 3;

    let class = enumerate_ribbon_tableaux(&shape, &weight, k).unwrap();
    println!("{} {k}-ribbon tableaux of shape {shape} and weight {weight:?}", class.len());

    let max = max_twice_spin(&class).unwrap();
    let mut histogram = std::collections::BTreeMap::new();
    for t in &class {
        *histogram.entry(cospin_from_max(t, max)).or_insert(0usize) += 1;
    }
    println!("cospin histogram: {histogram:?}");
    let poly = qhall::ribbon::cospin_polynomial(&shape, &weight, k).unwrap();
    println!("cospin polynomial: {poly}");

    // show one tableau in full
    let t = &class[0];
    println!("\nfirst tableau (spin {}):", spin(t));
    for r in t.ribbons() {
        let cells: Vec<String> =
            r.cells().iter().map(|c| format!("({},{})", c.row, c.col)).collect();
        println!(
            "  label {} height {} head ({},{}): {}",
            r.label,
            r.height(),
            r.head().row,
            r.head().col,
            cells.join(" ")
        );
    }
}
