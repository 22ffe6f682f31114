//! The combinatorial side of Schur Q-functions: marked shifted tableaux,
//! their generating polynomials, and exact recovery of power-sum expansions
//! from monomial data.
//!
//! A *marked* alphabet is `1' < 1 < 2' < 2 < …`. A filling of a (skew,
//! possibly shifted) diagram is a valid tableau when
//!
//! 1. rows and columns weakly increase in that order,
//! 2. each column contains at most one unmarked `k` for every `k`,
//! 3. each row contains at most one marked `k'` for every `k`.
//!
//! The skew Schur Q-function is the content generating function
//! `Q_{λ/μ} = Σ_T x^{content(T)}`. Two exact recovery routes to its
//! power-sum expansion are provided, both entirely independent of the
//! algebraic ribbon expansions:
//!
//! - [`p_expansion_from_monomial`] inverts the polynomial computed with
//!   `k ≥ n` variables (full enumeration; small shapes only);
//! - [`skew_q_p_expansion`] counts fillings content by content
//!   ([`skew_q_content_counts`]) and inverts the power-sum-to-monomial
//!   transition matrix — factorially cheaper, no ambient variables.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{format_rational, PExpansion};
use crate::combinat::{partitions, Partition};
use crate::diagram::SkewShape;
use crate::linalg::solve_unique;
use crate::GammaError;

/// One letter of the marked alphabet `1' < 1 < 2' < 2 < …`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct MarkedLetter {
    code: u32,
}

impl MarkedLetter {
    /// Builds the letter `value` or `value'` (`value ≥ 1`).
    pub fn new(value: u32, marked: bool) -> Self {
        assert!(value >= 1, "letter values start at 1");
        MarkedLetter { code: 2 * value - u32::from(marked) }
    }

    /// Position in the total order, starting at `1` for `1'`.
    pub fn code(self) -> u32 {
        self.code
    }

    pub fn from_code(code: u32) -> Self {
        assert!(code >= 1, "letter codes start at 1");
        MarkedLetter { code }
    }

    pub fn value(self) -> u32 {
        self.code.div_ceil(2)
    }

    pub fn is_marked(self) -> bool {
        self.code % 2 == 1
    }
}

impl fmt::Display for MarkedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value(), if self.is_marked() { "'" } else { "" })
    }
}

/// A marked tableau on an explicit set of boxes (row-major order).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MarkedTableau {
    boxes: Vec<(i64, i64)>,
    letters: Vec<MarkedLetter>,
}

impl MarkedTableau {
    /// Box coordinates paired with their letters, in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = ((i64, i64), MarkedLetter)> + '_ {
        self.boxes.iter().copied().zip(self.letters.iter().copied())
    }

    /// Number of entries with value `v`, for `v = 1..=max_letter`.
    pub fn content(&self, max_letter: u32) -> Vec<u32> {
        let mut counts = vec![0u32; max_letter as usize];
        for letter in &self.letters {
            counts[letter.value() as usize - 1] += 1;
        }
        counts
    }
}

impl fmt::Display for MarkedTableau {
    /// Renders the diagram as an aligned grid, one row per line, `.` for
    /// absent boxes inside the bounding rectangle.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.boxes.is_empty() {
            return write!(f, "(empty)");
        }
        let by_pos: HashMap<(i64, i64), MarkedLetter> = self.entries().collect();
        let rows: Vec<i64> = {
            let (lo, hi) = self.boxes.iter().fold((i64::MAX, i64::MIN), |(lo, hi), &(r, _)| {
                (lo.min(r), hi.max(r))
            });
            (lo..=hi).collect()
        };
        let (col_lo, col_hi) = self.boxes.iter().fold((i64::MAX, i64::MIN), |(lo, hi), &(_, c)| {
            (lo.min(c), hi.max(c))
        });
        for (i, &row) in rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let mut line = String::new();
            for col in col_lo..=col_hi {
                match by_pos.get(&(row, col)) {
                    Some(letter) => line.push_str(&format!("{letter:<3}")),
                    None => line.push_str(".  "),
                }
            }
            write!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

/// Left and upper neighbour indices for each box of a shape, in row-major
/// order — the only geometry the filling rules consult.
struct NeighbourTable {
    left: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
}

impl NeighbourTable {
    fn new(shape: &SkewShape) -> Self {
        let boxes = shape.boxes();
        debug_assert!(boxes.windows(2).all(|w| w[0] < w[1]), "boxes must be row-major");
        let index_of: HashMap<(i64, i64), usize> =
            boxes.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        let left = boxes.iter().map(|&(r, c)| index_of.get(&(r, c - 1)).copied()).collect();
        let above = boxes.iter().map(|&(r, c)| index_of.get(&(r - 1, c)).copied()).collect();
        NeighbourTable { left, above }
    }

    fn len(&self) -> usize {
        self.left.len()
    }

    /// Smallest letter code admissible at box `i` given the earlier codes.
    /// Equality with the left neighbour is allowed only for unmarked (even)
    /// codes, equality with the upper neighbour only for marked (odd) ones.
    fn lower_bound(&self, i: usize, codes: &[u32]) -> u32 {
        let mut lower = 1;
        if let Some(l) = self.left[i] {
            lower = lower.max(codes[l] + codes[l] % 2);
        }
        if let Some(a) = self.above[i] {
            lower = lower.max(codes[a] + (1 - codes[a] % 2));
        }
        lower
    }
}

/// Row-major DFS over all valid fillings with letters `≤ max_letter`.
///
/// With weakly increasing rows and columns, and columns of valid shapes
/// occupying contiguous row ranges, the marking rules reduce to local
/// constraints against the left and upper neighbours, captured by
/// [`NeighbourTable::lower_bound`].
fn for_each_filling(shape: &SkewShape, max_letter: u32, visit: &mut dyn FnMut(&[u32])) {
    let table = NeighbourTable::new(shape);

    fn rec(i: usize, codes: &mut Vec<u32>, table: &NeighbourTable, max_code: u32, visit: &mut dyn FnMut(&[u32])) {
        if i == table.len() {
            visit(codes);
            return;
        }
        for code in table.lower_bound(i, codes)..=max_code {
            codes.push(code);
            rec(i + 1, codes, table, max_code, visit);
            codes.pop();
        }
    }

    let mut codes = Vec::with_capacity(table.len());
    rec(0, &mut codes, &table, 2 * max_letter, visit);
}

/// Number of valid fillings whose letter `v` appears exactly `budget[v-1]`
/// times. The per-letter budgets prune the DFS hard, so this stays cheap
/// even where unrestricted enumeration explodes.
fn count_fillings_with_content(table: &NeighbourTable, budget: &[u32]) -> u64 {
    fn rec(i: usize, codes: &mut Vec<u32>, remaining: &mut [u32], table: &NeighbourTable) -> u64 {
        if i == table.len() {
            return 1;
        }
        let mut total = 0;
        for code in table.lower_bound(i, codes)..=2 * remaining.len() as u32 {
            let slot = code.div_ceil(2) as usize - 1;
            if remaining[slot] == 0 {
                continue;
            }
            remaining[slot] -= 1;
            codes.push(code);
            total += rec(i + 1, codes, remaining, table);
            codes.pop();
            remaining[slot] += 1;
        }
        total
    }

    if budget.iter().map(|&b| u64::from(b)).sum::<u64>() != table.len() as u64 {
        return 0;
    }
    let mut codes = Vec::with_capacity(table.len());
    rec(0, &mut codes, &mut budget.to_vec(), table)
}

/// The content counts of the skew Schur Q-function: for every partition `μ`
/// of the box count, the number of valid fillings in which letter `i`
/// appears exactly `μ_i` times.
///
/// The generating function is symmetric, so these counts are exactly its
/// coefficients on the monomial symmetric functions `m_μ` and determine it
/// completely — no ambient variables needed.
pub fn skew_q_content_counts(shape: &SkewShape) -> BTreeMap<Partition, BigInt> {
    let n = u32::try_from(shape.boxes().len()).expect("box count fits in u32");
    let table = NeighbourTable::new(shape);
    partitions(n)
        .into_iter()
        .map(|mu| {
            let count = count_fillings_with_content(&table, mu.parts());
            (mu, BigInt::from(count))
        })
        .collect()
}

/// The coefficient of the monomial `x_1^{μ_1} ⋯ x_m^{μ_m}` in the power-sum
/// product `p_λ`: the number of ways to assign each part of `λ` to one of
/// the `m` positions so the parts at position `j` sum to `μ_j`.
///
/// Zero when `|λ| ≠ |μ|`. Over all pairs of partitions of `n` this is the
/// transition matrix from the power sums to the monomial symmetric
/// functions, which is invertible because both families are bases.
pub fn power_sum_content_coefficient(lambda: &Partition, mu: &Partition) -> BigInt {
    let mut states: HashMap<Vec<u32>, BigInt> = HashMap::new();
    states.insert(mu.parts().to_vec(), BigInt::one());
    for &part in lambda.parts() {
        let mut next: HashMap<Vec<u32>, BigInt> = HashMap::new();
        for (remaining, ways) in &states {
            for j in 0..remaining.len() {
                if remaining[j] >= part {
                    let mut reduced = remaining.clone();
                    reduced[j] -= part;
                    *next.entry(reduced).or_default() += ways;
                }
            }
        }
        states = next;
    }
    states.remove(&vec![0; mu.parts().len()]).unwrap_or_default()
}

/// All valid marked tableaux of the shape with letters `≤ max_letter`,
/// in lexicographic filling order. Intended for small shapes.
pub fn enumerate_tableaux(shape: &SkewShape, max_letter: u32) -> Vec<MarkedTableau> {
    let boxes = shape.boxes();
    let mut out = Vec::new();
    for_each_filling(shape, max_letter, &mut |codes| {
        out.push(MarkedTableau {
            boxes: boxes.clone(),
            letters: codes.iter().map(|&c| MarkedLetter::from_code(c)).collect(),
        });
    });
    out
}

/// An exact polynomial in `x_1, …, x_k`, stored as a sparse map from
/// full-length exponent vectors to rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialPolynomial {
    vars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl MonomialPolynomial {
    pub fn zero(vars: usize) -> Self {
        MonomialPolynomial { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: usize) -> Self {
        let mut out = MonomialPolynomial::zero(vars);
        out.add_term(vec![0; vars], BigRational::one());
        out
    }

    /// `p_r(x_1,…,x_k) = x_1^r + … + x_k^r`.
    pub fn power_sum(r: u32, vars: usize) -> Self {
        assert!(r >= 1, "power sums are indexed from 1");
        let mut out = MonomialPolynomial::zero(vars);
        for i in 0..vars {
            let mut expo = vec![0; vars];
            expo[i] = r;
            out.add_term(expo, BigRational::one());
        }
        out
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of `x^expo` (zero when absent).
    pub fn coefficient(&self, expo: &[u32]) -> BigRational {
        assert_eq!(expo.len(), self.vars, "exponent vector has the wrong length");
        self.terms.get(expo).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, expo: Vec<u32>, coeff: BigRational) {
        assert_eq!(expo.len(), self.vars, "exponent vector has the wrong length");
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(expo) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// `self += scale · other`.
    pub fn add_scaled(&mut self, other: &MonomialPolynomial, scale: &BigRational) {
        assert_eq!(self.vars, other.vars, "variable counts differ");
        if scale.is_zero() {
            return;
        }
        for (expo, coeff) in &other.terms {
            self.add_term(expo.clone(), coeff * scale);
        }
    }

    pub fn mul(&self, other: &MonomialPolynomial) -> MonomialPolynomial {
        assert_eq!(self.vars, other.vars, "variable counts differ");
        let mut out = MonomialPolynomial::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let expo = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(expo, ca * cb);
            }
        }
        out
    }

    /// Total degree if every monomial has the same one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degree = None;
        for expo in self.terms.keys() {
            let d: u32 = expo.iter().sum();
            match degree {
                None => degree = Some(d),
                Some(existing) if existing != d => return None,
                _ => {}
            }
        }
        degree
    }

    /// Evaluates at `x_i = 1` for `i ≤ ones`, `0` beyond: the sum of
    /// coefficients of monomials supported on the first `ones` variables.
    pub fn eval_ones(&self, ones: usize) -> BigRational {
        assert!(ones <= self.vars);
        self.terms
            .iter()
            .filter(|(expo, _)| expo[ones..].iter().all(|&e| e == 0))
            .map(|(_, coeff)| coeff)
            .sum()
    }
}

impl fmt::Display for MonomialPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (expo, coeff) in self.terms.iter().rev() {
            let magnitude = format_rational(&coeff.abs());
            if first {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{magnitude}")?;
            for (i, &e) in expo.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "·x{}", i + 1)?,
                    _ => write!(f, "·x{}^{e}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialPolynomial({self})")
    }
}

/// The skew Schur Q-function `Q_{λ/μ}(x_1,…,x_k)` as an exact polynomial,
/// by direct tableau enumeration.
pub fn skew_q_monomial(shape: &SkewShape, vars: usize) -> MonomialPolynomial {
    let max_letter = u32::try_from(vars).expect("variable count fits in u32");
    let mut out = MonomialPolynomial::zero(vars);
    for_each_filling(shape, max_letter, &mut |codes| {
        let mut expo = vec![0u32; vars];
        for &code in codes {
            expo[code.div_ceil(2) as usize - 1] += 1;
        }
        out.add_term(expo, BigRational::one());
    });
    out
}

/// The one-row Schur Q-function `q_n(x_1,…,x_k)` by tableau enumeration on
/// the single-row shifted shape — the combinatorial counterpart of its
/// algebraic power-sum expansion.
pub fn q_function_monomial(n: u32, vars: usize) -> MonomialPolynomial {
    if n == 0 {
        return MonomialPolynomial::one(vars);
    }
    let shape = SkewShape::shifted(Partition::new(vec![n]), Partition::empty())
        .expect("a single row is a valid shifted shape");
    skew_q_monomial(&shape, vars)
}

/// Recovers the power-sum expansion of a homogeneous symmetric polynomial of
/// the given degree from its monomial form, by solving the exact linear
/// system that matches coefficients on sorted-exponent monomials.
///
/// Needs at least `degree` variables so the expansion is unique. The
/// solution is verified by full re-expansion; input that is not symmetric,
/// not homogeneous of the right degree, or otherwise outside the power-sum
/// span is reported as an error.
pub fn p_expansion_from_monomial(
    poly: &MonomialPolynomial,
    degree: u32,
) -> Result<PExpansion, GammaError> {
    let vars = poly.vars();
    if (vars as u64) < u64::from(degree) {
        return Err(GammaError::Invalid(format!(
            "recovering a degree-{degree} expansion needs at least {degree} variables, got {vars}"
        )));
    }
    if !poly.is_zero() && poly.homogeneous_degree() != Some(degree) {
        return Err(GammaError::Invalid(format!(
            "polynomial is not homogeneous of degree {degree}"
        )));
    }

    // Unknowns: coefficients of p_λ, λ ⊢ degree. One equation per sorted
    // exponent pattern; the square system is invertible because both the
    // power sums and the monomial symmetric functions are bases.
    let lambdas = partitions(degree);
    let columns: Vec<MonomialPolynomial> = lambdas
        .iter()
        .map(|lambda| PExpansion::term(lambda.clone(), BigRational::one()).specialize(vars))
        .collect();

    let mut matrix = Vec::with_capacity(lambdas.len());
    let mut rhs = Vec::with_capacity(lambdas.len());
    for mu in partitions(degree) {
        let mut expo: Vec<u32> = mu.parts().to_vec();
        expo.resize(vars, 0);
        matrix.push(columns.iter().map(|c| c.coefficient(&expo)).collect::<Vec<_>>());
        rhs.push(poly.coefficient(&expo));
    }

    let solution = solve_unique(&matrix, &rhs)?;
    let expansion = PExpansion::from_terms(
        degree,
        lambdas.into_iter().zip(solution).filter(|(_, c)| !c.is_zero()),
    );

    if expansion.specialize(vars) != *poly {
        return Err(GammaError::Inconsistent(
            "polynomial is not a symmetric function in the power-sum span".into(),
        ));
    }
    Ok(expansion)
}

/// The skew Schur Q-function in the power-sum basis, from tableau data
/// alone: content-restricted counting gives the monomial-basis coefficients,
/// and inverting the power-sum-to-monomial transition matrix converts them.
///
/// This avoids enumerating fillings over a full alphabet (whose count grows
/// factorially faster than the per-content counts), so it stays exact and
/// fast well past where [`skew_q_monomial`] becomes infeasible.
pub fn skew_q_p_expansion(shape: &SkewShape) -> Result<PExpansion, GammaError> {
    let n = u32::try_from(shape.boxes().len()).expect("box count fits in u32");
    let counts = skew_q_content_counts(shape);
    let lambdas = partitions(n);
    let mut matrix = Vec::with_capacity(lambdas.len());
    let mut rhs = Vec::with_capacity(lambdas.len());
    for mu in &lambdas {
        matrix.push(
            lambdas
                .iter()
                .map(|lambda| BigRational::from_integer(power_sum_content_coefficient(lambda, mu)))
                .collect::<Vec<_>>(),
        );
        rhs.push(BigRational::from_integer(counts[mu].clone()));
    }
    let solution = solve_unique(&matrix, &rhs)?;
    Ok(PExpansion::from_terms(
        n,
        lambdas.into_iter().zip(solution).filter(|(_, c)| !c.is_zero()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q_p_expansion, ribbon_p_expansion};
    use crate::combinat::Composition;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn shifted(outer: &[u32], inner: &[u32]) -> SkewShape {
        SkewShape::shifted(Partition::new(outer.to_vec()), Partition::new(inner.to_vec())).unwrap()
    }

    #[test]
    fn letter_order_and_display() {
        let l1m = MarkedLetter::new(1, true);
        let l1 = MarkedLetter::new(1, false);
        let l2m = MarkedLetter::new(2, true);
        assert!(l1m < l1 && l1 < l2m);
        assert_eq!(l1m.to_string(), "1'");
        assert_eq!(l2m.value(), 2);
        assert!(l2m.is_marked());
        assert_eq!(MarkedLetter::from_code(4).to_string(), "2");
    }

    #[test]
    fn single_box_has_marked_and_unmarked_filling() {
        let shape = shifted(&[1], &[]);
        let tableaux = enumerate_tableaux(&shape, 1);
        assert_eq!(tableaux.len(), 2);
        assert_eq!(tableaux[0].content(1), vec![1]);
        let poly = skew_q_monomial(&shape, 1);
        assert_eq!(poly.coefficient(&[1]), rat(2, 1));
        assert_eq!(poly.num_terms(), 1);
    }

    #[test]
    fn one_row_of_two_matches_q2() {
        // q_2(x_1) = 2x_1^2; q_2(x_1,x_2) = 2x_1^2 + 4x_1x_2 + 2x_2^2.
        let one_var = q_function_monomial(2, 1);
        assert_eq!(one_var.coefficient(&[2]), rat(2, 1));
        assert_eq!(one_var.num_terms(), 1);
        let two_vars = q_function_monomial(2, 2);
        assert_eq!(two_vars.coefficient(&[2, 0]), rat(2, 1));
        assert_eq!(two_vars.coefficient(&[1, 1]), rat(4, 1));
        assert_eq!(two_vars.coefficient(&[0, 2]), rat(2, 1));
        assert_eq!(two_vars.num_terms(), 3);
    }

    #[test]
    fn marked_column_repeats_allowed_unmarked_forbidden() {
        // A single column of two boxes: valid pairs are (1',1'), (1',1),
        // (1',2'), … — everything except an unmarked repeat.
        let shape = shifted(&[2, 1], &[1]); // boxes (1,2) and (2,2)
        let tableaux = enumerate_tableaux(&shape, 1);
        let fillings: Vec<Vec<u32>> = tableaux
            .iter()
            .map(|t| t.entries().map(|(_, l)| l.code()).collect())
            .collect();
        assert_eq!(fillings, vec![vec![1, 1], vec![1, 2]]);
    }

    #[test]
    fn tableau_generating_function_matches_algebraic_route_for_q() {
        for n in 0..=6u32 {
            for vars in 1..=3usize {
                let combinatorial = q_function_monomial(n, vars);
                let algebraic = q_p_expansion(n).specialize(vars);
                assert_eq!(combinatorial, algebraic, "n={n}, vars={vars}");
            }
        }
    }

    #[test]
    fn staircase_skew_shape_matches_its_ribbon() {
        // The shifted shape (4,3,2)/(3,2) is the ribbon with rows (1,1,2).
        let shape = shifted(&[4, 3, 2], &[3, 2]);
        let expansion = skew_q_p_expansion(&shape).unwrap();
        assert_eq!(expansion, ribbon_p_expansion(&Composition::new(vec![1, 1, 2])));
    }

    #[test]
    fn non_ribbon_shape_has_vanishing_coefficient_sum() {
        // (3,2)/∅ contains the triple (1,2),(1,3),(2,3), so no filling uses
        // only the letter 1 and the coefficients of the expansion sum to 0 —
        // forcing a negative coefficient.
        let shape = shifted(&[3, 2], &[]);
        let poly = skew_q_monomial(&shape, 5);
        assert_eq!(poly.eval_ones(1), rat(0, 1));
        let expansion = p_expansion_from_monomial(&poly, 5).unwrap();
        assert_eq!(expansion.coefficient_sum(), rat(0, 1));
        assert!(!expansion.is_zero());
        assert!(expansion.first_negative_term().is_some());
    }

    #[test]
    fn one_row_shapes_recover_q_expansions() {
        for n in 1..=6u32 {
            let shape = shifted(&[n], &[]);
            assert_eq!(skew_q_p_expansion(&shape).unwrap(), *q_p_expansion(n), "n={n}");
        }
    }

    #[test]
    fn disconnected_shape_multiplies_component_functions() {
        // (4,1)/(2) splits into a two-box row and a single box that share no
        // row or column, so Q factors as q_2 · q_1.
        let shape = shifted(&[4, 1], &[2]);
        let analysis = shape.analyze();
        assert!(!analysis.is_connected);
        let product = q_function_monomial(2, 3).mul(&q_function_monomial(1, 3));
        assert_eq!(skew_q_monomial(&shape, 3), product);
        let expansion = skew_q_p_expansion(&shape).unwrap();
        assert_eq!(expansion, &*q_p_expansion(2) * &q_p_expansion(1));
    }

    #[test]
    fn generating_polynomials_are_symmetric() {
        // Swapping two variables permutes coefficients: check x1↔x2 on a
        // genuinely skew shifted shape.
        let shape = shifted(&[3, 1], &[1]);
        let poly = skew_q_monomial(&shape, 3);
        for (expo, coeff) in poly.terms() {
            let mut swapped = expo.clone();
            swapped.swap(0, 1);
            assert_eq!(poly.coefficient(&swapped), coeff.clone(), "expo={expo:?}");
        }
        assert!(!poly.is_zero());
    }

    #[test]
    fn empty_shape_is_the_constant_one() {
        let shape = shifted(&[2, 1], &[2, 1]);
        assert_eq!(skew_q_monomial(&shape, 2), MonomialPolynomial::one(2));
        assert_eq!(skew_q_p_expansion(&shape).unwrap(), PExpansion::one());
    }

    #[test]
    fn monomial_inversion_round_trips() {
        for n in 0..=5u32 {
            let expansion = (*q_p_expansion(n)).clone();
            let poly = expansion.specialize(n.max(1) as usize);
            let recovered = p_expansion_from_monomial(&poly, n).unwrap();
            assert_eq!(recovered, expansion, "n={n}");
        }
    }

    #[test]
    fn monomial_inversion_rejects_bad_input() {
        // Too few variables.
        let poly = q_function_monomial(3, 2);
        assert!(matches!(p_expansion_from_monomial(&poly, 3), Err(GammaError::Invalid(_))));
        // Not symmetric.
        let mut asym = MonomialPolynomial::zero(2);
        asym.add_term(vec![2, 0], rat(1, 1));
        assert!(matches!(
            p_expansion_from_monomial(&asym, 2),
            Err(GammaError::Inconsistent(_))
        ));
        // Not homogeneous of the stated degree.
        let mut wrong = MonomialPolynomial::zero(3);
        wrong.add_term(vec![1, 0, 0], rat(1, 1));
        assert!(matches!(p_expansion_from_monomial(&wrong, 2), Err(GammaError::Invalid(_))));
    }

    #[test]
    fn polynomial_display() {
        let mut poly = MonomialPolynomial::zero(2);
        poly.add_term(vec![2, 0], rat(2, 1));
        poly.add_term(vec![1, 1], rat(-1, 3));
        assert_eq!(poly.to_string(), "2·x1^2 - 1/3·x1·x2");
        assert_eq!(MonomialPolynomial::zero(1).to_string(), "0");
        assert_eq!(MonomialPolynomial::one(2).to_string(), "1");
    }

    #[test]
    fn tableau_display_renders_grid() {
        let shape = shifted(&[3, 2], &[]);
        let tableaux = enumerate_tableaux(&shape, 2);
        assert!(!tableaux.is_empty());
        let text = tableaux[0].to_string();
        assert_eq!(text.lines().count(), 2);
        assert!(text.lines().nth(1).unwrap().starts_with('.'));
    }

    #[test]
    fn content_counts_match_full_enumeration() {
        // Per-content counts must agree with the coefficients of the fully
        // enumerated polynomial at the corresponding exponent vectors.
        for (outer, inner) in [
            (vec![4], vec![]),
            (vec![3, 2], vec![]),
            (vec![4, 3, 2], vec![3, 2]),
            (vec![4, 2], vec![1]),
        ] {
            let shape = shifted(&outer, &inner);
            let n = shape.size();
            let poly = skew_q_monomial(&shape, n as usize);
            let counts = skew_q_content_counts(&shape);
            assert_eq!(counts.len(), partitions(n).len());
            for (mu, count) in &counts {
                let mut expo: Vec<u32> = mu.parts().to_vec();
                expo.resize(n as usize, 0);
                assert_eq!(
                    poly.coefficient(&expo),
                    BigRational::from_integer(count.clone()),
                    "shape ({outer:?})/({inner:?}), mu={mu}"
                );
            }
        }
    }

    #[test]
    fn power_sum_content_coefficients_match_specialization() {
        // The counting DP must reproduce the monomial coefficients of the
        // explicitly expanded power-sum products at sorted exponents.
        for n in 1..=6u32 {
            for lambda in partitions(n) {
                let poly =
                    PExpansion::term(lambda.clone(), BigRational::one()).specialize(n as usize);
                for mu in partitions(n) {
                    let mut expo: Vec<u32> = mu.parts().to_vec();
                    expo.resize(n as usize, 0);
                    assert_eq!(
                        BigRational::from_integer(power_sum_content_coefficient(&lambda, &mu)),
                        poly.coefficient(&expo),
                        "lambda={lambda}, mu={mu}"
                    );
                }
            }
        }
        // Different total sizes never match.
        assert_eq!(
            power_sum_content_coefficient(&Partition::new(vec![2]), &Partition::new(vec![1])),
            BigInt::zero()
        );
    }

    #[test]
    fn content_route_expansion_matches_monomial_route() {
        for (outer, inner) in [(vec![5, 2], vec![1]), (vec![4, 3], vec![2]), (vec![3, 2, 1], vec![])]
        {
            let shape = shifted(&outer, &inner);
            let n = shape.size();
            let poly = skew_q_monomial(&shape, n as usize);
            assert_eq!(
                skew_q_p_expansion(&shape).unwrap(),
                p_expansion_from_monomial(&poly, n).unwrap(),
                "shape ({outer:?})/({inner:?})"
            );
        }
    }
}
