//! Integer partitions and compositions.
//!
//! Everything downstream (ribbon expansions, tableau weights, chromatic
//! classification) is keyed by partitions or driven by composition sweeps, so
//! this module fixes the conventions once:
//!
//! * parts are positive `u32`s; a [`Partition`] stores them weakly decreasing,
//!   a [`Composition`] in the given order;
//! * enumeration functions ([`partitions`], [`odd_partitions`],
//!   [`strict_partitions`]) list results in descending lexicographic order;
//! * compositions of `n` are indexed by `(n-1)`-bit masks over the gaps
//!   between unit cells ([`composition_from_mask`]), which also gives the
//!   sharding scheme for parallel sweeps;
//! * text encoding is comma-separated parts (`"3,1,1"`), the empty string for
//!   the empty partition/composition.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::GammaError;

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// The derived `Ord` compares part sequences lexicographically, so for
/// partitions of equal size the *largest* partition in canonical (descending
/// lexicographic) order is the `Ord`-maximal one. Iterate maps in reverse to
/// print canonically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from weakly decreasing positive parts.
    ///
    /// Panics if a part is zero or the sequence increases; use
    /// [`Partition::from_unsorted`] for unordered input.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        assert!(!parts.contains(&0), "partition parts must be positive: {parts:?}");
        Partition { parts }
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts equal to `value`.
    pub fn multiplicity(&self, value: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == value).count() as u32
    }

    /// `true` if every part is odd.
    pub fn all_parts_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    /// `true` if parts are strictly decreasing.
    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Merges the parts of two partitions into one (the support of a product
    /// of power sums).
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        // Both inputs are sorted descending; merge keeps it that way.
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(&self.parts, f)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = GammaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts = parse_parts(s)?;
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(GammaError::Parse(format!(
                "partition parts must be weakly decreasing: {s:?}"
            )));
        }
        Ok(Partition { parts })
    }
}

/// A composition: an ordered sequence of positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    /// Builds a composition from positive parts. Panics on a zero part.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(!parts.contains(&0), "composition parts must be positive: {parts:?}");
        Composition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sorts the parts into a partition.
    pub fn to_partition(&self) -> Partition {
        Partition::from_unsorted(self.parts.clone())
    }

    /// The reversed composition.
    pub fn reversed(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(&self.parts, f)
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition({self})")
    }
}

impl FromStr for Composition {
    type Err = GammaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Composition { parts: parse_parts(s)? })
    }
}

fn write_parts(parts: &[u32], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for p in parts {
        if !first {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
        first = false;
    }
    Ok(())
}

fn parse_parts(s: &str) -> Result<Vec<u32>, GammaError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let part: u32 = tok
                .trim()
                .parse()
                .map_err(|_| GammaError::Parse(format!("invalid part {tok:?} in {s:?}")))?;
            if part == 0 {
                return Err(GammaError::Parse(format!("zero part in {s:?}")));
            }
            Ok(part)
        })
        .collect()
}

/// `z_λ = ∏ i^{m_i} · m_i!`, the order of the centralizer of a permutation of
/// cycle type `λ`.
pub fn z_of(lambda: &Partition) -> BigInt {
    let mut z = BigInt::from(1u32);
    let mut run = 0u32;
    let mut prev = 0u32;
    for &part in lambda.parts() {
        if part == prev {
            run += 1;
        } else {
            run = 1;
            prev = part;
        }
        // Each new copy of `part` contributes part * (number of copies so far).
        z *= BigInt::from(part) * BigInt::from(run);
    }
    z
}

/// All partitions of `n`, in descending lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    partitions_filtered(n, |_| true)
}

/// Partitions of `n` with all parts odd, in descending lexicographic order.
pub fn odd_partitions(n: u32) -> Vec<Partition> {
    partitions_filtered(n, |part| part % 2 == 1)
}

/// Partitions of `n` into distinct parts, in descending lexicographic order.
pub fn strict_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    strict_rec(n, n, &mut stack, &mut out);
    out
}

fn partitions_filtered(n: u32, keep: impl Fn(u32) -> bool + Copy) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    parts_rec(n, n, keep, &mut stack, &mut out);
    out
}

fn parts_rec(
    remaining: u32,
    max_part: u32,
    keep: impl Fn(u32) -> bool + Copy,
    stack: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition { parts: stack.clone() });
        return;
    }
    // Largest next part first gives descending lexicographic output order.
    for part in (1..=remaining.min(max_part)).rev() {
        if !keep(part) {
            continue;
        }
        stack.push(part);
        parts_rec(remaining - part, part, keep, stack, out);
        stack.pop();
    }
}

fn strict_rec(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: stack.clone() });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        stack.push(part);
        strict_rec(remaining - part, part - 1, stack, out);
        stack.pop();
    }
}

/// The composition of `n` selected by a gap bitmask.
///
/// Think of `n` unit cells in a row with `n-1` gaps between them; bit `i` of
/// `mask` set means "cut at gap `i`". Mask `0` is the one-part composition
/// `(n)`, the all-ones mask is `(1,…,1)`.
pub fn composition_from_mask(n: u32, mask: u64) -> Composition {
    assert!(n >= 1, "composition_from_mask requires n >= 1");
    assert!(n <= 64, "composition_from_mask supports n <= 64");
    debug_assert!(n == 64 || mask < (1u64 << (n - 1)), "mask out of range for n={n}");
    let mut parts = Vec::new();
    let mut current = 1u32;
    for gap in 0..n - 1 {
        if mask >> gap & 1 == 1 {
            parts.push(current);
            current = 1;
        } else {
            current += 1;
        }
    }
    parts.push(current);
    Composition { parts }
}

/// Iterates over all `2^(n-1)` compositions of `n` in mask order.
pub fn compositions_of(n: u32) -> impl Iterator<Item = Composition> {
    assert!(n >= 1, "compositions_of requires n >= 1");
    assert!(n <= 32, "compositions_of supports n <= 32");
    (0..1u64 << (n - 1)).map(move |mask| composition_from_mask(n, mask))
}

/// All coarsenings of `α`: every composition obtained by merging blocks of
/// consecutive parts. There are exactly `2^(len-1)` of them (including `α`
/// itself and the one-part composition), listed in merge-mask order.
pub fn coarsenings(alpha: &Composition) -> Vec<Composition> {
    let ell = alpha.len();
    assert!(ell >= 1, "coarsenings requires a nonempty composition");
    assert!(ell <= 33, "coarsenings supports length <= 33");
    let mut out = Vec::with_capacity(1 << (ell - 1));
    for mask in 0..1u64 << (ell - 1) {
        let mut parts = Vec::new();
        let mut current = alpha.parts[0];
        for gap in 0..ell - 1 {
            if mask >> gap & 1 == 1 {
                // Merge this gap: the next part joins the current block.
                current += alpha.parts[gap + 1];
            } else {
                parts.push(current);
                current = alpha.parts[gap + 1];
            }
        }
        parts.push(current);
        out.push(Composition { parts });
    }
    out
}
