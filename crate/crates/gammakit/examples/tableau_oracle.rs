//! The combinatorial route: marked shifted tableaux enumerated box by box,
//! their generating function, and exact recovery of the power-sum expansion.
//! A ribbon shape must reproduce the algebraic expansion; a shape that is
//! not a ribbon has coefficients summing to zero and is never p-positive.
//! For larger shapes, counting fillings content by content replaces the
//! full enumeration at a fraction of the cost.

use gammakit::algebra::ribbon_p_expansion;
use gammakit::diagram::shifted_realization;
use gammakit::tableaux::{
    enumerate_tableaux, p_expansion_from_monomial, skew_q_content_counts, skew_q_monomial,
    skew_q_p_expansion,
};
use gammakit::{Partition, Ribbon, SkewShape};

fn main() {
    // All marked tableaux of the one-row shape of size 2 in two letters.
    let row = SkewShape::shifted(Partition::new(vec![2]), Partition::empty()).unwrap();
    println!("marked fillings of a two-box row, letters up to 2:");
    for tableau in enumerate_tableaux(&row, 2) {
        println!("{tableau}");
        println!();
    }

    // The ribbon (1,1,2) realized as the shifted shape 4,3,2/3,2.
    let ribbon = Ribbon::from_parts(vec![1, 1, 2]);
    let shape = shifted_realization(&ribbon);
    println!(
        "ribbon {} realized as shifted shape {}/{}",
        ribbon.composition(),
        shape.outer(),
        shape.inner()
    );
    let n = shape.size();
    let poly = skew_q_monomial(&shape, n as usize);
    let from_tableaux = p_expansion_from_monomial(&poly, n).unwrap();
    let algebraic = ribbon_p_expansion(ribbon.composition());
    println!("  tableau route  : {from_tableaux}");
    println!("  algebraic route: {algebraic}");
    assert_eq!(from_tableaux, algebraic);

    // The shifted shape 3,2 (no inner part) contains a diagonal triple, so
    // it is not a ribbon: its expansion sums to zero and goes negative.
    let shape = SkewShape::shifted(Partition::new(vec![3, 2]), Partition::empty()).unwrap();
    let analysis = shape.analyze();
    assert!(analysis.as_ribbon.is_none());
    let poly = skew_q_monomial(&shape, shape.size() as usize);
    let expansion = p_expansion_from_monomial(&poly, shape.size()).unwrap();
    println!();
    println!("non-ribbon shape 3,2/ : {expansion}");
    println!("  coefficient sum: {}", expansion.coefficient_sum());
    let (lambda, coeff) = expansion.first_negative_term().unwrap();
    println!("  negative coefficient at p[{lambda}]: {coeff}");

    // Content-restricted counting scales much further: the zigzag ribbon
    // (2,2,2,2) admits over 10^8 fillings in 8 letters, yet its per-content
    // counts (and hence its full expansion) come out in milliseconds.
    let zigzag = Ribbon::from_parts(vec![2, 2, 2, 2]);
    let shape = shifted_realization(&zigzag);
    let counts = skew_q_content_counts(&shape);
    println!();
    println!("content counts for the zigzag ribbon {}:", zigzag.composition());
    for (mu, count) in counts.iter().rev().take(3) {
        println!("  content {mu}: {count} fillings");
    }
    println!("  … one count per partition of 8 ({} in total)", counts.len());
    let from_counts = skew_q_p_expansion(&shape).unwrap();
    assert_eq!(from_counts, ribbon_p_expansion(zigzag.composition()));
    println!("recovered expansion matches the algebraic route: {from_counts}");
}
