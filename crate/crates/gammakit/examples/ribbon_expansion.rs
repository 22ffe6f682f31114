//! Expanding ribbon Schur Q-functions three ways: the signed coarsening sum
//! over one-row products, the transfer-matrix determinant, and the resulting
//! power-sum expansion. Also demonstrates the product and square rules.

use gammakit::algebra::{ribbon_det, ribbon_p_expansion, ribbon_q_polynomial};
use gammakit::Ribbon;
use num_rational::BigRational;

fn main() {
    for parts in [vec![3], vec![1, 2], vec![1, 1, 2], vec![2, 1, 1], vec![1, 3, 1]] {
        let ribbon = Ribbon::from_parts(parts);
        let alpha = ribbon.composition();
        let q = ribbon_q_polynomial(alpha);
        let p = ribbon_p_expansion(alpha);
        let det = ribbon_det(alpha);
        println!("r({alpha})");
        println!("  coarsening sum : {q}");
        println!("  power sums     : {p}");
        println!(
            "  determinant    : {} routes {}",
            det,
            if det == p { "agree" } else { "DISAGREE" }
        );
        println!();
    }

    // Product rule: a product of two ribbons splits into the concatenation
    // plus the near concatenation.
    let a = Ribbon::from_parts(vec![1, 2]);
    let b = Ribbon::from_parts(vec![2]);
    let product = &ribbon_p_expansion(a.composition()) * &ribbon_p_expansion(b.composition());
    let concat = a.concat(&b);
    let near = a.near_concat(&b);
    let split =
        &ribbon_p_expansion(concat.composition()) + &ribbon_p_expansion(near.composition());
    println!("r(1,2)·r(2)            = {product}");
    println!(
        "r({}) + r({}) = {split}",
        concat.composition(),
        near.composition()
    );
    assert_eq!(product, split);

    // Square rule: r_alpha^2 = 2 r_{alpha·alpha^t}.
    let square = ribbon_p_expansion(a.composition()).pow(2);
    let doubled = a.concat(&a.transpose());
    let two = BigRational::from_integer(2.into());
    let rhs = ribbon_p_expansion(doubled.composition()).scaled(&two);
    println!("r(1,2)^2               = {square}");
    println!("2·r({})       = {rhs}", doubled.composition());
    assert_eq!(square, rhs);
}
