//! Root-of-unity specialization: rectangular Hall-Littlewood functions become
//! power-sum plethysms of complete symmetric functions.
//!
//! Run with: cargo run --release --example roots_of_unity

use qhall::partition::Partition;
use qhall::symfunc::{specialize, verify_rectangular_theorem, SymTables};

fn main() {
    let tables = SymTables::new(8);

    // the function indexed by (2,2,2) at a primitive cube root of unity
    let lambda: Partition = "2,2,2".parse().unwrap();
    let schur = tables.hl_schur(&lambda).unwrap();
    let spec = specialize(&schur, 3);
    println!("Schur expansion of the {lambda} function at a primitive cube root:");
    println!("{spec}");

    // p_3 o h_2 on monomials: exactly the weights with all parts divisible by 3
    let plethysm = tables.plethysm_pk_h(2, 3).unwrap();
    let terms: Vec<String> = plethysm.iter().map(|(mu, c)| format!("{c}*m{mu}")).collect();
    println!("\np_3 o h_2 = {}", terms.join(" + "));

    // the full check, for every rectangle with at most 8 cells
    println!();
    for k in 2..=8 {
        for n in 1..=8 / k {
            let report = verify_rectangular_theorem(n, k, &tables).unwrap();
            println!(
                "rectangle n={n} k={k}: {}",
                if report.ok { "specialization equals p_k o h_n" } else { "FAILED" }
            );
            assert!(report.ok);
        }
    }
}
