//! Coefficient identities tied to the corner count of a ribbon, the
//! many-corners negativity criterion, and the odd-size case analysis.

use gammakit::positivity::{corner_identity_check, many_corners_check, odd_size_theorems_check};
use gammakit::Ribbon;

fn main() {
    println!("corner identities (coefficient sum, top part, weighted first-part sum):");
    for parts in [vec![1, 2], vec![1, 1, 1], vec![1, 3, 1], vec![1, 2, 2, 1]] {
        let ribbon = Ribbon::from_parts(parts);
        let report = corner_identity_check(&ribbon);
        println!(
            "  {}: corners={} all identities hold: {}",
            ribbon.composition(),
            report.corner_count,
            report.all_ok()
        );
        assert!(report.all_ok());
    }

    println!();
    println!("many-corners criterion (4c > n + 2 forces negativity):");
    for parts in [vec![6], vec![1, 2, 2, 1], vec![1, 2, 2, 2, 1]] {
        let ribbon = Ribbon::from_parts(parts);
        let report = many_corners_check(&ribbon);
        println!(
            "  {}: corners={} hypothesis {} — {}",
            ribbon.composition(),
            report.corner_count,
            if report.hypothesis_holds { "holds, ribbon not positive" } else { "vacuous" },
            if report.consistent() { "consistent" } else { "INCONSISTENT" }
        );
        assert!(report.consistent());
    }

    println!();
    println!("odd-size case analysis (one-box first row, not a basic block):");
    for parts in [vec![1, 4], vec![1, 3, 1], vec![1, 2, 2], vec![1, 1, 3]] {
        let ribbon = Ribbon::from_parts(parts);
        let report = odd_size_theorems_check(&ribbon);
        match report.case {
            Some(case) => println!(
                "  {}: {} — predicted negative, computed positive: {}",
                ribbon.composition(),
                case.label(),
                report.computed_positive
            ),
            None => println!(
                "  {}: no covered case applies (in scope: {}); computed positive: {}",
                ribbon.composition(),
                report.in_scope,
                report.computed_positive
            ),
        }
        assert!(report.consistent());
    }
}
