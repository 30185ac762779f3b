//! Diagonal classes of tuples of rows and their restricted polynomials.
//!
//! Run with: cargo run --release --example diagonal_classes

use qhall::partition::Partition;
use qhall::qpoly::eval_at_primitive_root;
use qhall::rigged::fiber_check;
use qhall::tuples::{diagonal_classes, inversion_polynomial, restricted_inversion_polynomial};

fn main() {
    let shapes: Vec<Partition> =
        vec!["2".parse().unwrap(), "2".parse().unwrap(), "4".parse().unwrap()];
    let weight = [3, 2, 2, 1];

    let classes = diagonal_classes(&shapes, &weight).unwrap();
    println!("{} diagonal classes:", classes.len());
    for class in &classes {
        let poly = restricted_inversion_polynomial(class);
        println!("  size {:>2}  {:?}  {poly}", class.len(), class.vector.diagonals());
        assert!(fiber_check(&shapes, &weight, &class.vector).unwrap());
    }
    let total = inversion_polynomial(&shapes, &weight).unwrap();
    println!("sum over classes = inversion polynomial: {total}");

    // on k equal rows, classes of two or more tuples vanish at a primitive
    // k-th root of unity, so only the singleton classes survive
    let k = 3;
    let shapes = vec![Partition::new(vec![2]).unwrap(); k];
    for weight in [[3usize, 3], [4, 2]] {
        let classes = diagonal_classes(&shapes, &weight).unwrap();
        let value = eval_at_primitive_root(&inversion_polynomial(&shapes, &weight).unwrap(), k);
        println!(
            "3 rows of 2, weight {weight:?}: {} classes, specialization {value}",
            classes.len()
        );
    }
}
