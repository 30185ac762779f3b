//! Rigged configurations: the bijection from tuples of rows, cocharge, and
//! the fermionic formula.
//!
//! Run with: cargo run --release --example rigged_configurations

use qhall::partition::Partition;
use qhall::rigged::{
    diagonal_matrix, enumerate_configurations, enumerate_riggings, fermionic_polynomial, theta,
};
use qhall::tuples::{inversions, Ssyt, TupleTableau};

fn main() {
    let tuple = TupleTableau::new(vec![
        Ssyt::new(vec![vec![1, 4]]).unwrap(),
        Ssyt::new(vec![vec![1, 2]]).unwrap(),
        Ssyt::new(vec![vec![1, 2, 3, 3]]).unwrap(),
    ])
    .unwrap();
    println!("tuple {:?}, inversions {}", tuple.components(), inversions(&tuple));

    // the matrix of label counts per diagonal, and its row accumulation,
    // read off the shape of the image
    let m = diagonal_matrix(&tuple).unwrap();
    println!("label-count matrix: {:?}", m.rows());
    println!("accumulated:        {:?}", m.accumulated().rows());

    let rc = theta(&tuple).unwrap();
    println!("image (cocharge {}):", rc.cocharge());
    print!("{rc}");

    // the cocharge generating polynomial over all rigged configurations in a
    // context is the fermionic formula
    let mu = Partition::new(vec![3, 2, 2, 1]).unwrap();
    let delta = Partition::new(vec![4, 2, 2]).unwrap();
    println!("\nconfigurations for ({mu}, {delta}):");
    for config in enumerate_configurations(&mu, &delta) {
        let fiber = enumerate_riggings(&config);
        println!(
            "  {:?}: alpha {}, {} riggings, {}",
            config.shapes(),
            config.alpha(),
            fiber.len(),
            config.fermionic_restricted()
        );
    }
    println!("fermionic polynomial: {}", fermionic_polynomial(&mu, &delta));
}
