//! The ribbon/tuple correspondence: cospin maps to inversions.
//!
//! Run with: cargo run --release --example stanton_white

use qhall::partition::Partition;
use qhall::ribbon::{
    cospin_from_max, enumerate_ribbon_tableaux, max_twice_spin, stanton_white,
    stanton_white_inverse,
};
use qhall::tuples::{inversions, Ssyt, TupleTableau};

fn main() {
    let shape: Partition = "8,7,6,5,1".parse().unwrap();
    let weight = [3, 3, 2, 1];

    // the displayed image tuple: ([2,2], [[1,1,3],[2,3]], [1,4])
    let tuple = TupleTableau::new(vec![
        Ssyt::new(vec![vec![2, 2]]).unwrap(),
        Ssyt::new(vec![vec![1, 1, 3], vec![2, 3]]).unwrap(),
        Ssyt::new(vec![vec![1, 4]]).unwrap(),
    ])
    .unwrap();
    let t = stanton_white_inverse(&tuple, &Partition::empty(), 3).unwrap();
    println!("tuple {:?}", tuple.components());
    println!("maps back to a 3-ribbon tableau of shape {}:", t.outer());
    for r in t.ribbons() {
        let cells: Vec<String> =
            r.cells().iter().map(|c| format!("({},{})", c.row, c.col)).collect();
        println!("  label {}: {}", r.label, cells.join(" "));
    }
    assert_eq!(stanton_white(&t), tuple);

    // statistics transport across the whole class
    let class = enumerate_ribbon_tableaux(&shape, &weight, 3).unwrap();
    let max = max_twice_spin(&class).unwrap();
    let transported = class
        .iter()
        .all(|t| inversions(&stanton_white(t)) == cospin_from_max(t, max));
    println!(
        "cospin = inversions across all {} tableaux: {}",
        class.len(),
        transported
    );
}
