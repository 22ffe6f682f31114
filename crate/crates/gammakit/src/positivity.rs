//! Positivity of ribbon Schur Q-functions: canonical forms, the triangle
//! classification, the doubling construction of positive ribbons, the
//! conjectured converse, corner identities, and the negativity theorems for
//! odd sizes.
//!
//! Central objects:
//!
//! * [`canonical_ribbon`] — the lexicographically least element of the orbit
//!   `{r, rᵗ, r°, (rᵗ)°}`, on which the expansion is constant;
//! * [`is_p_positive`] — exact positivity verdict with a witness;
//! * [`classify_triangle`] — predicted vs computed positivity for staircase
//!   ribbons `(1^{k-1}, n-k+1)`;
//! * [`constructible_set`] — ribbons reachable from basic blocks by the
//!   size-doubling steps `D ↦ D·Dᵗ` and `D ↦ D⊙Dᵗ`, all provably positive
//!   (each step squares and halves the expansion);
//! * [`verify_conjecture`] — brute-force comparison of the actual positive
//!   set in size `n` against basic blocks plus the doubling closure;
//! * [`corner_identity_check`], [`many_corners_check`],
//!   [`odd_size_theorems_check`] — coefficient identities tied to the corner
//!   count and the head/tail parity conditions that force negativity;
//! * [`verify_disconnected_conjecture`] — product positivity over multisets
//!   of connected ribbons versus componentwise positivity.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use rayon::prelude::*;

use crate::algebra::{q_p_expansion, ribbon_p_expansion, warm_q_tables, PExpansion};
use crate::combinat::{composition_from_mask, compositions_of, z_of, Composition, Partition};
use crate::diagram::{basic_blocks, triangle, Ribbon};

/// Hard size guard for single-ribbon positivity queries.
pub const MAX_RIBBON_SIZE: u32 = 16;
/// Hard size guard for the full conjecture sweep.
pub const MAX_CONJECTURE_SIZE: u32 = 14;
/// Hard total-size guard for the disconnected sweep.
pub const MAX_DISCONNECTED_TOTAL: u32 = 12;

/// The canonical representative of a ribbon: the lexicographically least
/// composition among `{r, rᵗ, r°, (rᵗ)°}`. The expansion is constant on
/// this orbit, and the least representative always starts with the smallest
/// possible first row, so canonicalizing enforces the one-box-first-row
/// convention used throughout the classification.
pub fn canonical_ribbon(r: &Ribbon) -> Ribbon {
    let transposed = r.transpose();
    [r.clone(), transposed.rotate(), transposed, r.rotate()]
        .into_iter()
        .min_by(|a, b| a.composition().cmp(b.composition()))
        .expect("orbit is nonempty")
}

/// Canonical forms of every composition of `n`, one per orbit.
fn canonical_classes(n: u32) -> Vec<Composition> {
    let mut set = BTreeSet::new();
    for alpha in compositions_of(n) {
        set.insert(canonical_ribbon(&Ribbon::new(alpha)).composition().clone());
    }
    set.into_iter().collect()
}

/// Exact positivity verdict for a ribbon Schur Q-function.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PositivityReport {
    pub ribbon: Ribbon,
    pub canonical: Ribbon,
    pub positive: bool,
    /// First negative term in canonical (descending lexicographic) key
    /// order, when not positive.
    pub witness: Option<(Partition, BigRational)>,
}

/// Decides whether `r_α` has only nonnegative power-sum coefficients.
pub fn is_p_positive(r: &Ribbon) -> PositivityReport {
    assert!(
        r.size() <= MAX_RIBBON_SIZE,
        "positivity check guarded at size {MAX_RIBBON_SIZE}, got {}",
        r.size()
    );
    let expansion = ribbon_p_expansion(r.composition());
    PositivityReport {
        ribbon: r.clone(),
        canonical: canonical_ribbon(r),
        positive: expansion.is_p_positive(),
        witness: expansion.first_negative_term(),
    }
}

/// The positivity pattern for staircase ribbons: every size up to two is
/// positive; in odd sizes exactly `k ∈ {1, 3, n-2, n}`; in even sizes
/// additionally the two middle columns `k ∈ {n/2, n/2+1}`.
pub fn predicted_triangle_positive(n: u32, k: u32) -> bool {
    assert!((1..=n).contains(&k), "need 1 <= k <= n");
    if n <= 2 {
        return true;
    }
    if k == 1 || k == 3 || k == n - 2 || k == n {
        return true;
    }
    n.is_multiple_of(2) && (k == n / 2 || k == n / 2 + 1)
}

/// Predicted and computed positivity for the staircase ribbon
/// `(1^{k-1}, n-k+1)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TriangleClassification {
    pub n: u32,
    pub k: u32,
    pub predicted: bool,
    pub computed: bool,
}

impl TriangleClassification {
    pub fn agrees(&self) -> bool {
        self.predicted == self.computed
    }
}

pub fn classify_triangle(n: u32, k: u32) -> TriangleClassification {
    assert!(n <= MAX_RIBBON_SIZE, "triangle classification guarded at size {MAX_RIBBON_SIZE}");
    let predicted = predicted_triangle_positive(n, k);
    let computed = is_p_positive(&triangle(n, k)).positive;
    TriangleClassification { n, k, predicted, computed }
}

/// Canonical forms of the basic blocks of size `n`.
pub fn basic_block_canonicals(n: u32) -> BTreeSet<Composition> {
    basic_blocks(n)
        .iter()
        .map(|b| canonical_ribbon(b).composition().clone())
        .collect()
}

/// `true` when the ribbon's orbit meets the basic blocks of its size.
pub fn is_basic_block(r: &Ribbon) -> bool {
    basic_block_canonicals(r.size()).contains(canonical_ribbon(r).composition())
}

/// Canonical forms of every ribbon obtainable from a basic block of size
/// `m` by `k ≥ 1` doubling steps (`D ↦ D·Dᵗ` or `D ↦ D⊙Dᵗ` at each step),
/// where `n = m·2^k`. Empty for odd `n`. The basic blocks of size `n`
/// itself are *not* included.
pub fn constructible_set(n: u32) -> BTreeSet<Composition> {
    let mut out = BTreeSet::new();
    let mut m = n;
    let mut k = 0u32;
    while m.is_multiple_of(2) {
        m /= 2;
        k += 1;
        for block in basic_blocks(m) {
            let mut level: Vec<Ribbon> = vec![block];
            for _ in 0..k {
                level = level
                    .into_iter()
                    .flat_map(|d| {
                        let t = d.transpose();
                        [d.concat(&t), d.near_concat(&t)]
                    })
                    .collect();
            }
            for d in level {
                out.insert(canonical_ribbon(&d).composition().clone());
            }
        }
    }
    out
}

/// Basic blocks of size `n` together with the doubling closure — the
/// conjectured complete set of positive canonical ribbons.
pub fn predicted_positive_canonicals(n: u32) -> BTreeSet<Composition> {
    let mut out = basic_block_canonicals(n);
    out.extend(constructible_set(n));
    out
}

/// Outcome of the brute-force sweep comparing actual positivity in size `n`
/// with the predicted set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConjectureReport {
    pub n: u32,
    /// `true` when the positive set equals the predicted set exactly.
    pub matched: bool,
    /// Canonical ribbons found positive, sorted.
    pub p_positive: Vec<Composition>,
    /// Predicted canonical ribbons, sorted.
    pub predicted: Vec<Composition>,
    /// Predicted but not actually positive.
    pub missing: Vec<Composition>,
    /// Positive but not predicted.
    pub extra: Vec<Composition>,
    pub elapsed_ms: u128,
}

/// Tests every composition of `n` for positivity (one representative per
/// orbit, in parallel) and compares the resulting canonical set with
/// [`predicted_positive_canonicals`].
pub fn verify_conjecture(n: u32) -> ConjectureReport {
    assert!(
        (1..=MAX_CONJECTURE_SIZE).contains(&n),
        "conjecture sweep guarded at size {MAX_CONJECTURE_SIZE}, got {n}"
    );
    let started = Instant::now();
    warm_q_tables(n);

    let mask_count: u64 = 1u64 << (n - 1);
    let p_positive: BTreeSet<Composition> = (0..mask_count)
        .into_par_iter()
        .filter_map(|mask| {
            let alpha = composition_from_mask(n, mask);
            let ribbon = Ribbon::new(alpha);
            // One representative per orbit: skip non-canonical encodings.
            let canonical = canonical_ribbon(&ribbon);
            if canonical.composition() != ribbon.composition() {
                return None;
            }
            ribbon_p_expansion(ribbon.composition())
                .is_p_positive()
                .then(|| ribbon.composition().clone())
        })
        .collect();

    let predicted: BTreeSet<Composition> = predicted_positive_canonicals(n);
    let missing: Vec<Composition> = predicted.difference(&p_positive).cloned().collect();
    let extra: Vec<Composition> = p_positive.difference(&predicted).cloned().collect();
    ConjectureReport {
        n,
        matched: missing.is_empty() && extra.is_empty(),
        p_positive: p_positive.into_iter().collect(),
        predicted: predicted.into_iter().collect(),
        missing,
        extra,
        elapsed_ms: started.elapsed().as_millis(),
    }
}

/// Exact evaluation of the coefficient identities tied to the corner count
/// `c(D)`: for `r_D = Σ c_λ p_λ`,
///
/// * the coefficients always sum to 2;
/// * for odd sizes the top coefficient is `c_(n) = (-1)^{ℓ+1}·2/n`;
/// * when the first row has one box, `Σ m_1(λ)c_λ` equals `8c(D)` if the
///   last row is longer than one box and `8c(D) - 4` otherwise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CornerReport {
    pub ribbon: Ribbon,
    pub corner_count: u32,
    pub coefficient_sum: BigRational,
    pub sum_ok: bool,
    /// `(actual, expected)` for the coefficient of `p_(n)`; `None` for even
    /// sizes.
    pub top_coefficient: Option<(BigRational, BigRational)>,
    /// `(actual, expected)` for `Σ m_1(λ)c_λ`; `None` unless `α₁ = 1`.
    pub weighted_m1_sum: Option<(BigRational, BigRational)>,
}

impl CornerReport {
    pub fn all_ok(&self) -> bool {
        self.sum_ok
            && self.top_coefficient.as_ref().is_none_or(|(a, e)| a == e)
            && self.weighted_m1_sum.as_ref().is_none_or(|(a, e)| a == e)
    }
}

pub fn corner_identity_check(r: &Ribbon) -> CornerReport {
    let alpha = r.composition();
    let n = r.size();
    let ell = alpha.len() as u32;
    let expansion = ribbon_p_expansion(alpha);
    let corner_count = r.corners();

    let coefficient_sum = expansion.coefficient_sum();
    let sum_ok = coefficient_sum == BigRational::from_integer(BigInt::from(2));

    let top_coefficient = (n % 2 == 1).then(|| {
        let actual = expansion.coefficient(&Partition::new(vec![n]));
        let sign = if ell % 2 == 1 { 1 } else { -1 };
        let expected = BigRational::new(BigInt::from(2 * sign), BigInt::from(n));
        (actual, expected)
    });

    let weighted_m1_sum = (alpha.parts()[0] == 1 && n >= 2).then(|| {
        let actual: BigRational = expansion
            .terms()
            .map(|(lambda, coeff)| {
                BigRational::from_integer(BigInt::from(lambda.multiplicity(1))) * coeff
            })
            .sum();
        let last = *alpha.parts().last().expect("composition is nonempty");
        let expected_int =
            if last > 1 { 8 * i64::from(corner_count) } else { 8 * i64::from(corner_count) - 4 };
        (actual, BigRational::from_integer(BigInt::from(expected_int)))
    });

    CornerReport { ribbon: r.clone(), corner_count, coefficient_sum, sum_ok, top_coefficient, weighted_m1_sum }
}

/// The corner-count bound: a ribbon with `c(D) > 1/2 + n/4` cannot be
/// positive. `consistent` is vacuously true when the hypothesis fails.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ManyCornersReport {
    pub ribbon: Ribbon,
    pub corner_count: u32,
    pub hypothesis_holds: bool,
    pub computed_positive: bool,
}

impl ManyCornersReport {
    pub fn consistent(&self) -> bool {
        !self.hypothesis_holds || !self.computed_positive
    }
}

pub fn many_corners_check(r: &Ribbon) -> ManyCornersReport {
    let n = r.size();
    let corner_count = r.corners();
    // c > 1/2 + n/4 ⟺ 4c > 2 + n in integers.
    let hypothesis_holds = 4 * u64::from(corner_count) > 2 + u64::from(n);
    let computed_positive = is_p_positive(r).positive;
    ManyCornersReport { ribbon: r.clone(), corner_count, hypothesis_holds, computed_positive }
}

/// Which negativity criterion covers an odd-size ribbon outside the basic
/// blocks (first row a single box).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OddSizeCase {
    /// Even number of rows.
    EvenLength,
    /// Odd rows, wide last row, even head length.
    EvenHead,
    /// Odd rows, wide last row, odd head length, even tail length.
    OddHeadEvenTail,
    /// Odd rows, one-box last row, head length equal to tail length.
    MatchedHeadTail,
}

impl OddSizeCase {
    pub fn label(self) -> &'static str {
        match self {
            OddSizeCase::EvenLength => "even-length",
            OddSizeCase::EvenHead => "even-head",
            OddSizeCase::OddHeadEvenTail => "odd-head-even-tail",
            OddSizeCase::MatchedHeadTail => "matched-head-tail",
        }
    }
}

/// Report of the odd-size negativity theorems on one ribbon.
///
/// `in_scope` requires odd size, a one-box first row, and the ribbon not
/// being a basic block. For in-scope ribbons whose parameters match one of
/// the covered cases, negativity is predicted; other parameter combinations
/// are reported without a prediction (the classification there is only
/// conjectural).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OddSizeReport {
    pub ribbon: Ribbon,
    pub in_scope: bool,
    pub head: Option<u32>,
    pub tail: Option<u32>,
    pub case: Option<OddSizeCase>,
    pub predicted_negative: bool,
    pub computed_positive: bool,
}

impl OddSizeReport {
    pub fn consistent(&self) -> bool {
        !self.predicted_negative || !self.computed_positive
    }
}

pub fn odd_size_theorems_check(r: &Ribbon) -> OddSizeReport {
    let alpha = r.composition();
    let n = r.size();
    let head = r.head_length();
    let tail = r.tail_length();
    let in_scope = n % 2 == 1 && alpha.parts()[0] == 1 && !is_basic_block(r);

    let case = if !in_scope {
        None
    } else if alpha.len().is_multiple_of(2) {
        Some(OddSizeCase::EvenLength)
    } else {
        let last = *alpha.parts().last().expect("composition is nonempty");
        // Outside the basic blocks some row has at least two boxes, so the
        // head (and for a one-box last row, the tail) is defined.
        let head = head.expect("in-scope ribbon has a multi-box row");
        if last > 1 {
            if head.is_multiple_of(2) {
                Some(OddSizeCase::EvenHead)
            } else if tail.expect("wide last row has a tail length").is_multiple_of(2) {
                Some(OddSizeCase::OddHeadEvenTail)
            } else {
                None
            }
        } else if head == tail.expect("in-scope ribbon has a multi-box row") {
            Some(OddSizeCase::MatchedHeadTail)
        } else {
            None
        }
    };

    OddSizeReport {
        ribbon: r.clone(),
        in_scope,
        head,
        tail,
        case,
        predicted_negative: case.is_some(),
        computed_positive: is_p_positive(r).positive,
    }
}

/// A multiset of connected ribbons where product positivity and
/// componentwise positivity disagree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DisconnectedCase {
    pub components: Vec<Composition>,
    pub factors_positive: Vec<bool>,
    pub product_positive: bool,
}

/// Outcome of the disconnected sweep: for every multiset of at least two
/// connected ribbons with total size `≤ max_total`, the product expansion
/// should be positive exactly when every factor is.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DisconnectedReport {
    pub max_total: u32,
    pub multisets_checked: u64,
    /// Multisets violating the equivalence. Counterexamples disprove the
    /// conjectured direction, so they are reported rather than asserted
    /// away.
    pub counterexamples: Vec<DisconnectedCase>,
}

impl DisconnectedReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

pub fn verify_disconnected_conjecture(max_total: u32) -> DisconnectedReport {
    assert!(
        (2..=MAX_DISCONNECTED_TOTAL).contains(&max_total),
        "disconnected sweep guarded at total size {MAX_DISCONNECTED_TOTAL}, got {max_total}"
    );
    warm_q_tables(max_total);

    // One representative per orbit and size; a component leaves room for at
    // least one more box.
    let classes: Vec<Composition> =
        (1..max_total).flat_map(canonical_classes).collect();
    let expansions: Vec<PExpansion> =
        classes.par_iter().map(ribbon_p_expansion).collect();
    let positive: Vec<bool> = expansions.iter().map(PExpansion::is_p_positive).collect();

    let mut report =
        DisconnectedReport { max_total, multisets_checked: 0, counterexamples: Vec::new() };

    // The precomputed per-class data the multiset walk reads.
    struct Catalog {
        classes: Vec<Composition>,
        expansions: Vec<PExpansion>,
        positive: Vec<bool>,
    }

    // Depth-first over multisets: indices non-decreasing to avoid repeats.
    fn rec(
        start: usize,
        budget: u32,
        chosen: &mut Vec<usize>,
        product: &PExpansion,
        catalog: &Catalog,
        report: &mut DisconnectedReport,
    ) {
        if chosen.len() >= 2 {
            report.multisets_checked += 1;
            let all_factors_positive = chosen.iter().all(|&i| catalog.positive[i]);
            if product.is_p_positive() != all_factors_positive {
                report.counterexamples.push(DisconnectedCase {
                    components: chosen.iter().map(|&i| catalog.classes[i].clone()).collect(),
                    factors_positive: chosen.iter().map(|&i| catalog.positive[i]).collect(),
                    product_positive: product.is_p_positive(),
                });
            }
        }
        for i in start..catalog.classes.len() {
            let size = catalog.classes[i].size();
            if size > budget {
                continue;
            }
            chosen.push(i);
            let next = product * &catalog.expansions[i];
            rec(i, budget - size, chosen, &next, catalog, report);
            chosen.pop();
        }
    }

    let catalog = Catalog { classes, expansions, positive };
    let mut chosen = Vec::new();
    rec(0, max_total, &mut chosen, &PExpansion::one(), &catalog, &mut report);
    report
}

/// The staircase expansion as an alternating convolution of one-row
/// functions: `r_{(1^{k-1}, n-k+1)} = Σ_{i=0}^{k-1} (-1)^{k+i-1} q_{n-i} q_i`.
pub fn triangle_alternating_form(n: u32, k: u32) -> PExpansion {
    assert!((1..=n).contains(&k), "need 1 <= k <= n");
    let mut out = PExpansion::zero(n);
    for i in 0..k {
        let product = &*q_p_expansion(n - i) * &q_p_expansion(i);
        let sign =
            if (k + i - 1).is_multiple_of(2) { BigRational::one() } else { -BigRational::one() };
        out.add_scaled(&product, &sign);
    }
    out
}

/// Closed-form coefficient of `p_λ` in the staircase expansions:
/// for `k = 1` every odd partition carries `z_λ⁻¹ 2^{ℓ(λ)}`; for `k = 3`
/// that value is further weighted by `(m₁-1)(m₁-2)/2`.
pub fn staircase_coefficient(k: u32, lambda: &Partition) -> BigRational {
    assert!(k == 1 || k == 3, "closed forms cover k = 1 and k = 3 only");
    assert!(lambda.all_parts_odd(), "the expansions are supported on odd partitions");
    let base = BigRational::new(BigInt::one() << lambda.len(), z_of(lambda));
    if k == 1 {
        return base;
    }
    let m1 = i64::from(lambda.multiplicity(1));
    base * BigRational::from_integer(BigInt::from((m1 - 1) * (m1 - 2) / 2))
}
