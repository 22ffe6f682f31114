//! End-to-end acceptance suite. Each test covers one criterion, prints a
//! single `acceptance NN name: PASS/FAIL` line, and enforces the stated
//! time budget. All arithmetic is exact; there are no tolerances.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use gammakit::algebra::{
    q_p_expansion, ribbon_det, ribbon_p_expansion, warm_q_tables, PExpansion,
};
use gammakit::chromatic::{
    chromatic_sym, gamma_membership, near_chromatic, near_star_closed_form, star_closed_form,
    y_basis_check, BasisFamily, SimpleGraph,
};
use gammakit::combinat::{
    compositions_of, odd_partitions, partitions, strict_partitions, Composition, Partition,
};
use gammakit::diagram::{shifted_realization, triangle, Ribbon, SkewShape};
use gammakit::positivity::{
    classify_triangle, corner_identity_check, many_corners_check, staircase_coefficient,
    triangle_alternating_form, verify_conjecture, verify_disconnected_conjecture,
};
use gammakit::tableaux::{
    p_expansion_from_monomial, power_sum_content_coefficient, skew_q_content_counts,
    skew_q_monomial, skew_q_p_expansion,
};

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

fn expansion(terms: &[(&[u32], BigRational)]) -> PExpansion {
    let degree = terms[0].0.iter().sum();
    PExpansion::from_terms(degree, terms.iter().map(|(parts, c)| (p(parts), c.clone())))
}

/// Runs one criterion, prints its verdict line, and enforces the budget.
fn criterion(number: u32, name: &str, budget: Duration, body: impl FnOnce() -> bool) {
    let start = Instant::now();
    let ok = body();
    let elapsed = start.elapsed();
    let in_budget = elapsed <= budget;
    println!(
        "acceptance {number:02} {name}: {} ({elapsed:.2?})",
        if ok && in_budget { "PASS" } else { "FAIL" }
    );
    assert!(ok, "acceptance {number:02} {name}: checks failed");
    assert!(in_budget, "acceptance {number:02} {name}: {elapsed:?} exceeded {budget:?}");
}

#[test]
fn a01_closed_form_constants() {
    criterion(1, "closed-form constants", Duration::from_secs(1), || {
        let mut ok = true;

        // The triangle graph, both functions.
        let triangle_x = expansion(&[
            (&[1, 1, 1], rat(1, 1)),
            (&[2, 1], rat(-3, 1)),
            (&[3], rat(2, 1)),
        ]);
        let triangle_y = expansion(&[(&[1, 1, 1], rat(1, 1)), (&[3], rat(2, 1))]);
        ok &= chromatic_sym(&SimpleGraph::triangle()) == triangle_x;
        ok &= near_chromatic(&SimpleGraph::triangle()) == triangle_y;

        // One-row functions in lowest degrees.
        ok &= *q_p_expansion(1) == expansion(&[(&[1], rat(2, 1))]);
        ok &= *q_p_expansion(2) == expansion(&[(&[1, 1], rat(2, 1))]);

        // Star closed forms against the brute-force edge-subset sweep.
        for n in 1..=10 {
            let star = SimpleGraph::star(n as usize);
            ok &= chromatic_sym(&star) == star_closed_form(n);
            ok &= near_chromatic(&star) == near_star_closed_form(n);
        }
        ok
    });
}

#[test]
fn a02_ribbon_identity_suite() {
    criterion(2, "ribbon identity suite", Duration::from_secs(60), || {
        let mut ok = true;

        // Expansion constant on transpose/rotation orbits, and the
        // determinant route agrees with the coarsening route.
        for n in 1..=9 {
            for alpha in compositions_of(n) {
                let ribbon = Ribbon::new(alpha);
                let base = ribbon_p_expansion(ribbon.composition());
                ok &= base == ribbon_p_expansion(ribbon.transpose().composition());
                ok &= base == ribbon_p_expansion(ribbon.rotate().composition());
                ok &= base == ribbon_det(ribbon.composition());
            }
        }

        // Pairwise products split along concatenation / near concatenation.
        for a in 1..=5 {
            for b in 1..=5 {
                for alpha in compositions_of(a) {
                    let ra = Ribbon::new(alpha);
                    let fa = ribbon_p_expansion(ra.composition());
                    for beta in compositions_of(b) {
                        let rb = Ribbon::new(beta);
                        let product = &fa * &ribbon_p_expansion(rb.composition());
                        let split = &ribbon_p_expansion(ra.concat(&rb).composition())
                            + &ribbon_p_expansion(ra.near_concat(&rb).composition());
                        ok &= product == split;
                    }
                }
            }
        }

        // Squares collapse onto the self-transpose concatenations.
        let two = rat(2, 1);
        for n in 1..=5 {
            for alpha in compositions_of(n) {
                let ribbon = Ribbon::new(alpha);
                let square = ribbon_p_expansion(ribbon.composition()).pow(2);
                let t = ribbon.transpose();
                ok &= square
                    == ribbon_p_expansion(ribbon.concat(&t).composition()).scaled(&two);
                ok &= square
                    == ribbon_p_expansion(ribbon.near_concat(&t).composition()).scaled(&two);
            }
        }
        ok
    });
}

#[test]
fn a03_staircase_closed_forms() {
    criterion(3, "staircase closed forms", Duration::from_secs(30), || {
        let mut ok = true;
        warm_q_tables(20);
        for n in 1..=20u32 {
            let mut by_k: Vec<PExpansion> = Vec::new();
            for k in 1..=n {
                let direct = ribbon_p_expansion(triangle(n, k).composition());
                // Alternating convolution of one-row functions.
                ok &= direct == triangle_alternating_form(n, k);
                by_k.push(direct);
            }
            // Complementary indices carry the same function.
            for k in 1..=n {
                ok &= by_k[(k - 1) as usize] == by_k[(n - k) as usize];
            }
            // One-row coefficients: 2^len / z over odd partitions.
            let expected_row = PExpansion::from_terms(
                n,
                odd_partitions(n)
                    .into_iter()
                    .map(|lambda| (lambda.clone(), staircase_coefficient(1, &lambda))),
            );
            ok &= by_k[0] == expected_row;
            // Three-row staircase coefficients, n >= 3: the same weights
            // scaled by (m1-1)(m1-2)/2 where m1 counts parts equal to 1.
            if n >= 3 {
                let expected = PExpansion::from_terms(
                    n,
                    odd_partitions(n)
                        .into_iter()
                        .map(|lambda| (lambda.clone(), staircase_coefficient(3, &lambda)))
                        .filter(|(_, c)| !c.is_zero()),
                );
                ok &= by_k[2] == expected;
            }
        }
        ok
    });
}

#[test]
fn a04_triangle_classification() {
    criterion(4, "triangle classification", Duration::from_secs(120), || {
        let mut ok = true;
        for n in 1..=14 {
            for k in 1..=n {
                ok &= classify_triangle(n, k).agrees();
            }
        }
        ok
    });
}

#[test]
fn a05_conjecture_through_twelve() {
    criterion(5, "positivity conjecture n <= 12", Duration::from_secs(600), || {
        (1..=12).all(|n| {
            let report = verify_conjecture(n);
            report.matched && report.missing.is_empty() && report.extra.is_empty()
        })
    });
}

#[test]
fn a06_tableau_oracle_equivalence() {
    criterion(6, "tableau oracle equivalence", Duration::from_secs(300), || {
        let mut ok = true;

        // Every connected ribbon of size <= 8, via its shifted realization.
        // Both sides are symmetric functions, so equality is decided by the
        // coefficients on the monomial symmetric functions: the per-content
        // tableau counts against Σ_λ c_λ · [x^μ] p_λ.
        for n in 1..=8u32 {
            let mus = partitions(n);
            let lambdas = partitions(n);
            // Transition matrix from power sums to monomials at this degree.
            let transition: Vec<Vec<BigInt>> = mus
                .iter()
                .map(|mu| {
                    lambdas
                        .iter()
                        .map(|lambda| power_sum_content_coefficient(lambda, mu))
                        .collect()
                })
                .collect();
            for alpha in compositions_of(n) {
                let ribbon = Ribbon::new(alpha);
                let shape = shifted_realization(&ribbon);
                let counts = skew_q_content_counts(&shape);
                let algebraic = ribbon_p_expansion(ribbon.composition());
                let coeffs: Vec<BigRational> =
                    lambdas.iter().map(|lambda| algebraic.coefficient(lambda)).collect();
                for (mu, row) in mus.iter().zip(&transition) {
                    let expected: BigRational = coeffs
                        .iter()
                        .zip(row)
                        .map(|(c, n_entry)| c * BigRational::from_integer(n_entry.clone()))
                        .sum();
                    ok &= BigRational::from_integer(counts[mu].clone()) == expected;
                }
                // Cross-check the full enumeration route (every exponent
                // vector, not just sorted ones) at the smaller sizes, plus
                // the inversion round trip.
                if n <= 6 {
                    let combinatorial = skew_q_monomial(&shape, n as usize);
                    ok &= combinatorial == algebraic.specialize(n as usize);
                    ok &= p_expansion_from_monomial(&combinatorial, n)
                        .is_ok_and(|recovered| recovered == algebraic);
                }
            }
        }

        // Connected non-ribbon shifted skew shapes of size <= 8: the
        // coefficients sum to zero and a negative coefficient exists.
        let mut shapes: BTreeSet<(Partition, Partition)> = BTreeSet::new();
        for outer_size in 2..=16u32 {
            for outer in strict_partitions(outer_size) {
                for inner_size in outer_size.saturating_sub(8)..outer_size {
                    for inner in strict_partitions(inner_size) {
                        let Ok(shape) = SkewShape::shifted(outer.clone(), inner) else {
                            continue;
                        };
                        let analysis = shape.analyze();
                        if analysis.is_connected && analysis.as_ribbon.is_none() {
                            shapes.insert((shape.outer().clone(), shape.inner().clone()));
                        }
                    }
                }
            }
        }
        let sample: Vec<_> = shapes.into_iter().take(40).collect();
        ok &= sample.len() >= 20;
        for (outer, inner) in sample {
            let shape = SkewShape::shifted(outer, inner).unwrap();
            let Ok(expansion) = skew_q_p_expansion(&shape) else {
                ok = false;
                continue;
            };
            ok &= expansion.coefficient_sum().is_zero();
            ok &= expansion.first_negative_term().is_some();
            ok &= !expansion.is_p_positive();
        }
        ok
    });
}

#[test]
fn a07_corner_identities() {
    criterion(7, "corner identities", Duration::from_secs(60), || {
        let mut ok = true;
        for n in 1..=10 {
            for alpha in compositions_of(n) {
                if alpha.parts()[0] != 1 {
                    continue;
                }
                let ribbon = Ribbon::new(alpha);
                ok &= corner_identity_check(&ribbon).all_ok();
                ok &= many_corners_check(&ribbon).consistent();
            }
        }
        ok
    });
}

#[test]
fn a08_chromatic_classification() {
    criterion(8, "chromatic classification", Duration::from_secs(300), || {
        let mut ok = true;

        // Brute force over every labeled graph on <= 6 vertices: membership
        // of X matches "no edges", membership of Y matches the single
        // star-or-triangle criterion, and the involution image of X is
        // p-positive whenever the graph is connected.
        for vertices in 1..=6usize {
            let pairs: Vec<(usize, usize)> = (0..vertices)
                .flat_map(|a| (a + 1..vertices).map(move |b| (a, b)))
                .collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e);
                let graph = SimpleGraph::new(vertices, edges);
                let x = chromatic_sym(&graph);
                ok &= x.is_in_gamma() == (graph.num_edges() == 0);
                let half = rat(1, 2);
                let y = (&x + &x.omega()).scaled(&half);
                ok &= y.is_in_gamma() == graph.edges_form_single_star_or_triangle();
                if graph.is_connected() {
                    ok &= x.omega().is_p_positive();
                }
            }
        }

        // Both generating families have full rank in every degree <= 10.
        for n in 1..=10 {
            let dimension = odd_partitions(n).len();
            for family in [BasisFamily::B1, BasisFamily::B2] {
                let report = y_basis_check(family, n);
                ok &= report.is_basis() && report.dimension == dimension;
            }
        }
        ok
    });
}

#[test]
fn a09_disconnected_conjecture() {
    criterion(9, "disconnected product conjecture", Duration::from_secs(600), || {
        let report = verify_disconnected_conjecture(10);
        // Conjectural statement: counterexamples are reported, not hidden.
        for case in &report.counterexamples {
            let components: Vec<String> =
                case.components.iter().map(Composition::to_string).collect();
            println!(
                "  counterexample: [{}] factors positive {:?}, product positive {}",
                components.join(" | "),
                case.factors_positive,
                case.product_positive
            );
        }
        report.multisets_checked > 0 && report.holds()
    });
}

/// The membership report and the raw expansions must tell the same story;
/// spot-check beyond the brute-force sweep sizes.
#[test]
fn membership_report_consistency() {
    for g in [
        SimpleGraph::cycle(7),
        SimpleGraph::path(7),
        SimpleGraph::star(7),
        SimpleGraph::triangle().disjoint_union(&SimpleGraph::star(4)),
    ] {
        let report = gamma_membership(&g);
        assert_eq!(report.x_in_gamma, report.x_structural, "{g}");
        assert_eq!(report.y_in_gamma, report.y_structural, "{g}");
    }
}
