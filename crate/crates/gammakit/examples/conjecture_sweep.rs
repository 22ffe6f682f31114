//! Brute-force sweep over all connected ribbons of a given size: compares
//! the exactly-computed set of p-positive canonical ribbons with the
//! predicted set (basic blocks plus the doubling closure).

use gammakit::positivity::{
    basic_block_canonicals, constructible_set, verify_conjecture,
};

fn main() {
    for n in [7, 8, 10, 12] {
        let report = verify_conjecture(n);
        println!(
            "n={n}: {} canonical ribbons positive, prediction {}",
            report.p_positive.len(),
            if report.matched { "matches" } else { "MISMATCHES" }
        );
        for comp in &report.p_positive {
            let from_blocks = basic_block_canonicals(n).contains(comp);
            let from_doubling = constructible_set(n).contains(comp);
            let origin = match (from_blocks, from_doubling) {
                (true, true) => "basic block, also constructible",
                (true, false) => "basic block",
                (false, true) => "constructible by doubling",
                (false, false) => "UNEXPLAINED",
            };
            println!("    {comp}  ({origin})");
        }
        assert!(report.matched);
    }
}
