//! Products of connected ribbon functions model disconnected skew shapes.
//! The expectation: a product is p-positive exactly when every factor is.
//! The sweep reports counterexamples instead of asserting, since the
//! statement is conjectural.

use gammakit::algebra::ribbon_p_expansion;
use gammakit::positivity::verify_disconnected_conjecture;
use gammakit::Ribbon;

fn main() {
    // Two positive factors: the product stays positive.
    let a = ribbon_p_expansion(Ribbon::from_parts(vec![3]).composition());
    let product = &a * &a;
    println!("r(3)·r(3)     = {product}");
    assert!(product.is_p_positive());

    // One negative factor drags the product negative here.
    let b = ribbon_p_expansion(Ribbon::from_parts(vec![1, 2]).composition());
    let mixed = &a * &b;
    println!("r(3)·r(1,2)   = {mixed}");
    assert!(!mixed.is_p_positive());

    // Squaring does not rescue a negative factor: the cross terms keep a
    // negative coefficient.
    let square = &b * &b;
    println!("r(1,2)·r(1,2) = {square}");
    assert!(!square.is_p_positive());

    let report = verify_disconnected_conjecture(10);
    println!(
        "all multisets of >= 2 connected ribbons, total size <= {}: {} checked, {}",
        report.max_total,
        report.multisets_checked,
        if report.holds() { "no counterexample" } else { "COUNTEREXAMPLE FOUND" }
    );
    for case in &report.counterexamples {
        let components: Vec<String> =
            case.components.iter().map(|c| c.to_string()).collect();
        println!(
            "  [{}] factors positive: {:?}, product positive: {}",
            components.join(" | "),
            case.factors_positive,
            case.product_positive
        );
    }
}
