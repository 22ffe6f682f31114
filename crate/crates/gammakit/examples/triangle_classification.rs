//! Positivity of the staircase ribbons (1^(k-1), n-k+1): computes the exact
//! expansion for every 1 <= k <= n and compares the verdict with the
//! closed-form prediction (k in {1, 3, n-2, n}, plus {n/2, n/2+1} for even n).

use gammakit::algebra::ribbon_p_expansion;
use gammakit::diagram::triangle;
use gammakit::positivity::classify_triangle;

fn main() {
    let max_n = 12;
    println!("positive staircase ribbons, by size:");
    let mut all_agree = true;
    for n in 1..=max_n {
        let mut positive = Vec::new();
        for k in 1..=n {
            let case = classify_triangle(n, k);
            all_agree &= case.agrees();
            if case.computed {
                positive.push(k.to_string());
            }
        }
        println!("  n={n:2}: k in [{}]", positive.join(", "));
    }
    println!("predictions agree with computation: {all_agree}");
    assert!(all_agree);

    // A look at the two extremes for n = 7: the one-row case is positive,
    // while k = 5 sits outside the predicted set and indeed goes negative.
    let good = triangle(7, 3);
    let bad = triangle(7, 5);
    println!();
    println!("r({}) = {}", good.composition(), ribbon_p_expansion(good.composition()));
    println!("r({}) = {}", bad.composition(), ribbon_p_expansion(bad.composition()));
}
