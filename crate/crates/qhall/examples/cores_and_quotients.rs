//! Partitions on the abacus: k-cores, k-quotients, and the round trip.
//!
//! Run with: cargo run --example cores_and_quotients

use qhall::partition::{from_core_quotient, Partition};

fn main() {
    let lambda: Partition = "8,7,6,5,1".parse().unwrap();
    println!("lambda = {lambda}, |lambda| = {}", lambda.weight());
    println!("conjugate = {}", lambda.conjugate());

    for k in 2..=4 {
        let core = lambda.k_core(k);
        let quotient = lambda.k_quotient(k);
        let components: Vec<String> =
            quotient.entries().iter().map(|p| p.to_string()).collect();
        println!(
            "k = {k}: core {core}, quotient ({})  [{} ribbons removed]",
            components.join(", "),
            (lambda.weight() - core.weight()) / k
        );
        let back = from_core_quotient(&core, &quotient, k).unwrap();
        assert_eq!(back, lambda, "core/quotient decomposition inverts");
    }

    // scaling a partition by its length always leaves an empty core, and the
    // quotient is the reversed sequence of rows
    let small: Partition = "2,1,1".parse().unwrap();
    let scaled = small.scale(small.len());
    println!(
        "{small} scaled by its length {} gives {scaled} with 3-core {} and 3-quotient {:?}",
        small.len(),
        scaled.k_core(3),
        scaled.k_quotient(3),
    );
}
