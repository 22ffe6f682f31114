//! Exact symmetric-function arithmetic in the power-sum basis.
//!
//! Key items:
//!
//! * [`PExpansion`] — a homogeneous symmetric function stored as a sparse map
//!   `partition → rational coefficient` over the power sums `p_λ`, with exact
//!   `BigRational` arithmetic, the involution [`PExpansion::omega`], the
//!   Hall scalar product, and monomial specialization;
//! * [`QPolynomial`] — an integer combination of products `q_λ` of one-row
//!   Schur Q-functions;
//! * [`q_p_expansion`] — `q_n = Σ_{λ odd ⊢ n} z_λ⁻¹ 2^{ℓ(λ)} p_λ`, memoized
//!   process-wide together with the products `q_λ` ([`q_partition_expansion`]);
//! * [`ribbon_q_polynomial`] / [`ribbon_p_expansion`] — the ribbon Schur
//!   Q-function `r_α = (-1)^{ℓ(α)} Σ_{γ ⪰ α} (-1)^{ℓ(γ)} q_{sort(γ)}` via the
//!   signed sum over coarsenings;
//! * [`ribbon_det`] — the same function through the determinant of the
//!   transfer matrix `(q_{α_i+…+α_j})`, kept as an independent cross-check;
//! * [`schur_onerow_p`] / [`schur_hook_p`] — `s_(n)` and `s_(n-1,1)` in the
//!   power-sum basis;
//! * [`load_q_cache`] / [`save_q_cache`] — optional JSON persistence of the
//!   q-expansion table.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinat::{coarsenings, odd_partitions, partitions, z_of, Composition, Partition};
use crate::tableaux::MonomialPolynomial;
use crate::GammaError;

/// Formats a rational in lowest terms as `num/den`, or plain `num` for
/// integers.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `num` or `num/den` (denominator positive after reduction).
pub fn parse_rational(s: &str) -> Result<BigRational, GammaError> {
    let bad = || GammaError::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        None => {
            let n: BigInt = s.trim().parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(|_| bad())?;
            let d: BigInt = den.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// A homogeneous symmetric function written in the power-sum basis:
/// `Σ_λ c_λ p_λ` with exact rational coefficients. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct PExpansion {
    degree: u32,
    terms: BTreeMap<Partition, BigRational>,
}

impl PExpansion {
    /// The zero function, tagged with a degree so sums stay homogeneous.
    pub fn zero(degree: u32) -> Self {
        PExpansion { degree, terms: BTreeMap::new() }
    }

    /// The constant 1 (the empty power-sum product).
    pub fn one() -> Self {
        PExpansion::term(Partition::empty(), BigRational::one())
    }

    /// A single term `c·p_λ`.
    pub fn term(lambda: Partition, coeff: BigRational) -> Self {
        let degree = lambda.size();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(lambda, coeff);
        }
        PExpansion { degree, terms }
    }

    pub fn from_terms(
        degree: u32,
        terms: impl IntoIterator<Item = (Partition, BigRational)>,
    ) -> Self {
        let mut out = PExpansion::zero(degree);
        for (lambda, coeff) in terms {
            assert_eq!(lambda.size(), degree, "term p[{lambda}] is not of degree {degree}");
            out.add_term(lambda, coeff);
        }
        out
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of `p_λ` (zero when absent).
    pub fn coefficient(&self, lambda: &Partition) -> BigRational {
        self.terms.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in ascending lexicographic key order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    /// Terms in canonical (descending lexicographic) key order — the order
    /// used for display, JSON, and witness selection.
    pub fn terms_canonical(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter().rev()
    }

    fn add_term(&mut self, lambda: Partition, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
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

    /// `self += scale · other` (degrees must match).
    pub fn add_scaled(&mut self, other: &PExpansion, scale: &BigRational) {
        assert_eq!(self.degree, other.degree, "cannot add degree {} to degree {}", other.degree, self.degree);
        if scale.is_zero() {
            return;
        }
        for (lambda, coeff) in &other.terms {
            self.add_term(lambda.clone(), coeff * scale);
        }
    }

    pub fn scaled(&self, scale: &BigRational) -> PExpansion {
        let mut out = PExpansion::zero(self.degree);
        out.add_scaled(self, scale);
        out
    }

    /// `self^k` by repeated multiplication (`k = 0` gives 1).
    pub fn pow(&self, k: u32) -> PExpansion {
        let mut out = PExpansion::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// The involution ω, acting by `ω(p_r) = (-1)^{r-1} p_r`, hence on `p_λ`
    /// by the sign `(-1)^{|λ| - ℓ(λ)}`.
    pub fn omega(&self) -> PExpansion {
        let terms = self.terms.iter().map(|(lambda, coeff)| {
            let sign_exp = lambda.size() - lambda.len() as u32;
            let coeff = if sign_exp.is_multiple_of(2) { coeff.clone() } else { -coeff.clone() };
            (lambda.clone(), coeff)
        });
        PExpansion::from_terms(self.degree, terms)
    }

    /// `true` if the support uses only partitions with odd parts, i.e. the
    /// function lies in the subalgebra Γ.
    pub fn is_in_gamma(&self) -> bool {
        self.terms.keys().all(Partition::all_parts_odd)
    }

    /// The first term with a part of even size, in canonical key order —
    /// a witness that the function lies outside Γ.
    pub fn first_non_odd_term(&self) -> Option<(Partition, BigRational)> {
        self.terms_canonical()
            .find(|(lambda, _)| !lambda.all_parts_odd())
            .map(|(lambda, coeff)| (lambda.clone(), coeff.clone()))
    }

    /// The first negative term in canonical key order, if any.
    pub fn first_negative_term(&self) -> Option<(Partition, BigRational)> {
        self.terms_canonical()
            .find(|(_, coeff)| coeff.is_negative())
            .map(|(lambda, coeff)| (lambda.clone(), coeff.clone()))
    }

    /// `true` if every coefficient is nonnegative.
    pub fn is_p_positive(&self) -> bool {
        self.terms.values().all(|coeff| !coeff.is_negative())
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> BigRational {
        self.terms.values().sum()
    }

    /// The Hall scalar product `⟨p_λ, p_μ⟩ = δ_{λμ} z_λ`, extended
    /// bilinearly. Functions of different degrees are orthogonal.
    pub fn scalar_product(&self, other: &PExpansion) -> BigRational {
        if self.degree != other.degree {
            return BigRational::zero();
        }
        let mut total = BigRational::zero();
        for (lambda, coeff) in &self.terms {
            if let Some(other_coeff) = other.terms.get(lambda) {
                total += coeff * other_coeff * BigRational::from_integer(z_of(lambda));
            }
        }
        total
    }

    /// The image under `p_r ↦ x_1^r + … + x_k^r`: an exact polynomial in `k`
    /// variables.
    pub fn specialize(&self, k: usize) -> MonomialPolynomial {
        let mut out = MonomialPolynomial::zero(k);
        for (lambda, coeff) in &self.terms {
            let mut product = MonomialPolynomial::one(k);
            for &part in lambda.parts() {
                product = product.mul(&MonomialPolynomial::power_sum(part, k));
            }
            out.add_scaled(&product, coeff);
        }
        out
    }
}

impl Add for &PExpansion {
    type Output = PExpansion;
    fn add(self, rhs: &PExpansion) -> PExpansion {
        let mut out = self.clone();
        out.add_scaled(rhs, &BigRational::one());
        out
    }
}

impl Sub for &PExpansion {
    type Output = PExpansion;
    fn sub(self, rhs: &PExpansion) -> PExpansion {
        let mut out = self.clone();
        out.add_scaled(rhs, &-BigRational::one());
        out
    }
}

impl Mul for &PExpansion {
    type Output = PExpansion;
    fn mul(self, rhs: &PExpansion) -> PExpansion {
        let mut out = PExpansion::zero(self.degree + rhs.degree);
        for (lambda, a) in &self.terms {
            for (mu, b) in &rhs.terms {
                out.add_term(lambda.merge(mu), a * b);
            }
        }
        out
    }
}

impl fmt::Display for PExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (lambda, coeff) in self.terms_canonical() {
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
            if lambda.is_empty() {
                write!(f, "{magnitude}")?;
            } else {
                write!(f, "{magnitude}·p[{lambda}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PExpansion({self})")
    }
}

/// An integer combination `Σ_λ c_λ q_λ` of products of one-row Schur
/// Q-functions, `q_λ = q_{λ_1} q_{λ_2} ⋯`.
#[derive(Clone, PartialEq, Eq)]
pub struct QPolynomial {
    degree: u32,
    terms: BTreeMap<Partition, BigInt>,
}

impl QPolynomial {
    pub fn zero(degree: u32) -> Self {
        QPolynomial { degree, terms: BTreeMap::new() }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending lexicographic key order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in canonical (descending lexicographic) key order.
    pub fn terms_canonical(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: BigInt) {
        assert_eq!(lambda.size(), self.degree, "term q[{lambda}] is not of degree {}", self.degree);
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
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

    /// Expands every `q_λ` into power sums and sums up.
    pub fn to_p_expansion(&self) -> PExpansion {
        let mut out = PExpansion::zero(self.degree);
        for (lambda, coeff) in &self.terms {
            let expansion = q_partition_expansion(lambda);
            out.add_scaled(&expansion, &BigRational::from_integer(coeff.clone()));
        }
        out
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (lambda, coeff) in self.terms_canonical() {
            let magnitude = coeff.abs();
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
            if lambda.is_empty() {
                write!(f, "{magnitude}")?;
            } else {
                write!(f, "{magnitude}·q[{lambda}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPolynomial({self})")
    }
}

/// Process-wide memo for `q_n` and `q_λ` expansions. Fills are idempotent
/// (the computation is deterministic), so racing writers agree.
#[derive(Default)]
struct QTable {
    by_degree: RwLock<HashMap<u32, Arc<PExpansion>>>,
    by_partition: RwLock<HashMap<Partition, Arc<PExpansion>>>,
}

static Q_TABLE: LazyLock<QTable> = LazyLock::new(QTable::default);

fn compute_q(n: u32) -> PExpansion {
    let mut out = PExpansion::zero(n);
    for lambda in odd_partitions(n) {
        let two_pow = BigInt::from(1u32) << lambda.len();
        let coeff = BigRational::new(two_pow, z_of(&lambda));
        out.add_term(lambda, coeff);
    }
    out
}

/// The one-row Schur Q-function in power sums:
/// `q_n = Σ_{λ ⊢ n, λ odd} z_λ⁻¹ 2^{ℓ(λ)} p_λ`, with `q_0 = 1`. Memoized.
pub fn q_p_expansion(n: u32) -> Arc<PExpansion> {
    if let Some(hit) = Q_TABLE.by_degree.read().expect("q table poisoned").get(&n) {
        return Arc::clone(hit);
    }
    let fresh = Arc::new(compute_q(n));
    let mut table = Q_TABLE.by_degree.write().expect("q table poisoned");
    Arc::clone(table.entry(n).or_insert(fresh))
}

/// The product `q_λ = q_{λ_1} ⋯ q_{λ_ℓ}` in power sums. Memoized.
pub fn q_partition_expansion(lambda: &Partition) -> Arc<PExpansion> {
    if let Some(hit) = Q_TABLE.by_partition.read().expect("q table poisoned").get(lambda) {
        return Arc::clone(hit);
    }
    let mut product = PExpansion::one();
    for &part in lambda.parts() {
        product = &product * &q_p_expansion(part);
    }
    let fresh = Arc::new(product);
    let mut table = Q_TABLE.by_partition.write().expect("q table poisoned");
    Arc::clone(table.entry(lambda.clone()).or_insert(fresh))
}

/// Precomputes `q_0 … q_n` and all products `q_λ` for `λ ⊢ n`, so later
/// parallel sweeps only read the memo.
pub fn warm_q_tables(n: u32) {
    for i in 0..=n {
        q_p_expansion(i);
    }
    for lambda in partitions(n) {
        q_partition_expansion(&lambda);
    }
}

/// The ribbon Schur Q-function as a signed integer combination of `q_λ`:
/// `r_α = (-1)^{ℓ(α)} Σ_{γ ⪰ α} (-1)^{ℓ(γ)} q_{sort(γ)}` summed over all
/// coarsenings `γ` of `α`.
pub fn ribbon_q_polynomial(alpha: &Composition) -> QPolynomial {
    assert!(!alpha.is_empty(), "ribbon expansion requires a nonempty composition");
    let mut out = QPolynomial::zero(alpha.size());
    let outer_sign = alpha.len() % 2;
    for gamma in coarsenings(alpha) {
        let sign = if (outer_sign + gamma.len()).is_multiple_of(2) { 1 } else { -1 };
        out.add_term(gamma.to_partition(), BigInt::from(sign));
    }
    out
}

/// The ribbon Schur Q-function in power sums, through the coarsening sum.
pub fn ribbon_p_expansion(alpha: &Composition) -> PExpansion {
    ribbon_q_polynomial(alpha).to_p_expansion()
}

/// The ribbon Schur Q-function through the transfer-matrix determinant
/// `det(A(α))`, `A(α)_{ij} = q_{α_i+…+α_j}` for `i ≤ j`, `q_0 = 1` on the
/// subdiagonal, `0` below it.
///
/// Expanding along the first column (which has only two nonzero entries)
/// gives `det A(α) = q_{α_1}·det A(α_2,…,α_ℓ) - det A(α_1+α_2, α_3,…,α_ℓ)`.
/// This is an independent route to [`ribbon_p_expansion`], kept for
/// cross-validation.
pub fn ribbon_det(alpha: &Composition) -> PExpansion {
    assert!(!alpha.is_empty(), "ribbon determinant requires a nonempty composition");
    fn det(parts: &[u32]) -> PExpansion {
        if parts.len() == 1 {
            return (*q_p_expansion(parts[0])).clone();
        }
        let keep = &*q_p_expansion(parts[0]) * &det(&parts[1..]);
        let mut merged = Vec::with_capacity(parts.len() - 1);
        merged.push(parts[0] + parts[1]);
        merged.extend_from_slice(&parts[2..]);
        &keep - &det(&merged)
    }
    det(alpha.parts())
}

/// The one-row Schur function `s_(n) = Σ_{λ ⊢ n} z_λ⁻¹ p_λ`.
pub fn schur_onerow_p(n: u32) -> PExpansion {
    let terms = partitions(n)
        .into_iter()
        .map(|lambda| {
            let coeff = BigRational::new(BigInt::one(), z_of(&lambda));
            (lambda, coeff)
        })
        .collect::<Vec<_>>();
    PExpansion::from_terms(n, terms)
}

/// The hook Schur function `s_(n-1,1) = Σ_{λ ⊢ n} (m_1(λ) - 1) z_λ⁻¹ p_λ`
/// (requires `n ≥ 2`).
pub fn schur_hook_p(n: u32) -> PExpansion {
    assert!(n >= 2, "the hook (n-1,1) needs n >= 2");
    let terms = partitions(n)
        .into_iter()
        .map(|lambda| {
            let m1 = i64::from(lambda.multiplicity(1));
            let coeff = BigRational::new(BigInt::from(m1 - 1), z_of(&lambda));
            (lambda, coeff)
        })
        .collect::<Vec<_>>();
    PExpansion::from_terms(n, terms)
}

/// Serializes the memoized `q_n` table as JSON:
/// `{"n": [["partition", "num/den"], …], …}` with partition keys like
/// `"3,1,1"` and rationals in lowest terms, terms in canonical order.
/// Returns the number of degrees written.
pub fn save_q_cache(path: &std::path::Path) -> Result<usize, GammaError> {
    let table = Q_TABLE.by_degree.read().expect("q table poisoned");
    let mut degrees: Vec<u32> = table.keys().copied().collect();
    degrees.sort_unstable();
    let mut root = serde_json::Map::new();
    for n in &degrees {
        let expansion = &table[n];
        let terms: Vec<serde_json::Value> = expansion
            .terms_canonical()
            .map(|(lambda, coeff)| {
                serde_json::json!([lambda.to_string(), format_rational(coeff)])
            })
            .collect();
        root.insert(n.to_string(), serde_json::Value::Array(terms));
    }
    let text = serde_json::to_string_pretty(&serde_json::Value::Object(root))
        .expect("serializing strings cannot fail");
    std::fs::write(path, text)
        .map_err(|e| GammaError::Invalid(format!("cannot write cache {}: {e}", path.display())))?;
    Ok(degrees.len())
}

/// Loads a JSON cache produced by [`save_q_cache`] into the process-wide
/// memo, validating degrees and odd-part support. Returns the number of
/// degrees accepted.
pub fn load_q_cache(path: &std::path::Path) -> Result<usize, GammaError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| GammaError::Invalid(format!("cannot read cache {}: {e}", path.display())))?;
    let root: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| GammaError::Parse(format!("cache {}: {e}", path.display())))?;
    let object = root
        .as_object()
        .ok_or_else(|| GammaError::Parse("cache root must be a JSON object".into()))?;
    let mut loaded = 0usize;
    for (key, value) in object {
        let n: u32 = key
            .parse()
            .map_err(|_| GammaError::Parse(format!("cache key {key:?} is not a degree")))?;
        let entries = value
            .as_array()
            .ok_or_else(|| GammaError::Parse(format!("cache[{key}] must be an array")))?;
        let mut expansion = PExpansion::zero(n);
        for entry in entries {
            let pair = entry
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| GammaError::Parse(format!("cache[{key}]: malformed term")))?;
            let lambda: Partition = pair[0]
                .as_str()
                .ok_or_else(|| GammaError::Parse(format!("cache[{key}]: partition not a string")))?
                .parse()?;
            let coeff = parse_rational(
                pair[1]
                    .as_str()
                    .ok_or_else(|| GammaError::Parse(format!("cache[{key}]: coefficient not a string")))?,
            )?;
            if lambda.size() != n || !lambda.all_parts_odd() {
                return Err(GammaError::Parse(format!(
                    "cache[{key}]: p[{lambda}] is not an odd partition of {n}"
                )));
            }
            expansion.add_term(lambda, coeff);
        }
        Q_TABLE
            .by_degree
            .write()
            .expect("q table poisoned")
            .entry(n)
            .or_insert_with(|| Arc::new(expansion));
        loaded += 1;
    }
    Ok(loaded)
}
