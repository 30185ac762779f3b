//! Exact q-arithmetic: q-factorials, q-binomials, cyclotomic polynomials,
//! and values at primitive roots of unity.
//!
//! Run with: cargo run --example q_arithmetic

use qhall::qpoly::{
    cyclotomic_polynomial, eval_at_primitive_root, q_binomial, q_factorial,
};

fn main() {
    println!("(q)_3         = {}", q_factorial(3));
    println!("[4; 2, 2]     = {}", q_binomial(2, 2));
    println!("[4; 2, 2](1)  = {}", q_binomial(2, 2).eval_one());

    for k in [1, 2, 3, 4, 6, 12] {
        println!("Phi_{k:<2} = {}", cyclotomic_polynomial(k));
    }

    // every primitive k-th root of unity is a root of [k; a, k-a] for
    // 0 < a < k: the mechanism behind the root-of-unity specializations
    for k in 2..=6 {
        for a in 1..k {
            let value = eval_at_primitive_root(&q_binomial(a, k - a), k);
            println!("[{k}; {a}, {}] at zeta_{k} = {value}", k - a);
            assert!(value.is_zero());
        }
    }
}
