//! Ribbon diagrams and (shifted) skew shapes.
//!
//! A ribbon is an edgewise-connected skew diagram containing no 2×2 block of
//! boxes; we record it as the [`Composition`] of its row lengths, read top
//! row first. Row `i+1` sits to the lower left of row `i` and shares exactly
//! one column with it. The module implements the diagram operations the
//! algebra layer relies on:
//!
//! * transpose (`★`-word reversal) and 180° rotation, the symmetries fixing
//!   the associated Schur Q-function;
//! * concatenation `·` and near-concatenation `⊙`, plus the composition
//!   transposition `α • D` mixing copies of `D` and its transpose;
//! * staircase ribbons [`triangle`] and the [`basic_blocks`] family;
//! * corner counting and head/tail lengths on the box-set realization;
//! * [`SkewShape`]: shifted or unshifted skew diagrams with connectivity
//!   analysis and ribbon recognition, and [`shifted_realization`] embedding
//!   any ribbon as a shifted skew shape.

use std::collections::BTreeSet;
use std::fmt;

use crate::combinat::{Composition, Partition};
use crate::GammaError;

/// A ribbon diagram, stored as its composition of row lengths (top row
/// first). Always nonempty.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ribbon {
    rows: Composition,
}

impl Ribbon {
    /// Wraps a nonempty composition as a ribbon.
    pub fn new(rows: Composition) -> Self {
        assert!(!rows.is_empty(), "a ribbon has at least one row");
        Ribbon { rows }
    }

    pub fn from_parts(parts: Vec<u32>) -> Self {
        Ribbon::new(Composition::new(parts))
    }

    /// Row lengths, top row first.
    pub fn composition(&self) -> &Composition {
        &self.rows
    }

    pub fn parts(&self) -> &[u32] {
        self.rows.parts()
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.rows.size()
    }

    /// Number of rows. A ribbon always has at least one row, so there is no
    /// matching `is_empty`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    /// The box set, as `(row, column)` pairs with the top row numbered 1 and
    /// columns normalized to start at 1. Row `i+1` ends in the column where
    /// row `i` starts.
    pub fn boxes(&self) -> Vec<(i64, i64)> {
        let parts = self.parts();
        let width = i64::from(self.size()) - parts.len() as i64 + 1;
        let mut out = Vec::with_capacity(self.size() as usize);
        let mut right = width;
        for (i, &len) in parts.iter().enumerate() {
            let left = right - i64::from(len) + 1;
            for col in left..=right {
                out.push((i as i64 + 1, col));
            }
            right = left;
        }
        out
    }

    /// The transposed ribbon (reflection across the main diagonal).
    ///
    /// Implemented on the word encoding: a ribbon is `□★□★…★□` where `★` is
    /// `⊙` between boxes sharing a row and `·` between rows; transposing
    /// reverses the word and swaps the two stars. The geometric reflection of
    /// [`Ribbon::boxes`] is kept as a test oracle.
    pub fn transpose(&self) -> Ribbon {
        let mut stars = Vec::with_capacity(self.size() as usize - 1);
        for (i, &len) in self.parts().iter().enumerate() {
            // ⊙ between boxes sharing a row...
            stars.extend(std::iter::repeat_n(true, len as usize - 1));
            if i + 1 < self.len() {
                stars.push(false); // ...and · between rows.
            }
        }
        stars.reverse();
        let mut parts = Vec::new();
        let mut current = 1u32;
        for same_row in stars {
            // Swapped: a reversed `·` becomes `⊙` and vice versa.
            if same_row {
                parts.push(current);
                current = 1;
            } else {
                current += 1;
            }
        }
        parts.push(current);
        Ribbon::from_parts(parts)
    }

    /// The ribbon rotated by 180°: the row sequence reversed.
    pub fn rotate(&self) -> Ribbon {
        Ribbon::new(self.rows.reversed())
    }

    /// Concatenation `self · other`: `other` continues in a new row below the
    /// last row of `self`.
    pub fn concat(&self, other: &Ribbon) -> Ribbon {
        let mut parts = self.parts().to_vec();
        parts.extend_from_slice(other.parts());
        Ribbon::from_parts(parts)
    }

    /// Near-concatenation `self ⊙ other`: the first row of `other` extends
    /// the last row of `self`.
    pub fn near_concat(&self, other: &Ribbon) -> Ribbon {
        let mut parts = self.parts().to_vec();
        let last = parts.last_mut().expect("ribbon is nonempty");
        *last += other.parts()[0];
        parts.extend_from_slice(&other.parts()[1..]);
        Ribbon::from_parts(parts)
    }

    /// Number of corners: boxes with a box directly above but none directly
    /// below.
    pub fn corners(&self) -> u32 {
        let boxes: BTreeSet<(i64, i64)> = self.boxes().into_iter().collect();
        boxes
            .iter()
            .filter(|&&(r, c)| boxes.contains(&(r - 1, c)) && !boxes.contains(&(r + 1, c)))
            .count() as u32
    }

    /// Head length: the index (1-based, from the top) of the first row with
    /// at least two boxes. `None` for one-column ribbons.
    pub fn head_length(&self) -> Option<u32> {
        self.parts().iter().position(|&len| len >= 2).map(|i| i as u32 + 1)
    }

    /// Tail length: the length of the last row when it has more than one
    /// box; otherwise the index, counted from the bottom, of the first row
    /// with at least two boxes. `None` for one-column ribbons.
    pub fn tail_length(&self) -> Option<u32> {
        let last = *self.parts().last().expect("ribbon is nonempty");
        if last > 1 {
            Some(last)
        } else {
            self.parts().iter().rev().position(|&len| len >= 2).map(|j| j as u32 + 1)
        }
    }
}

impl fmt::Display for Ribbon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rows)
    }
}

impl fmt::Debug for Ribbon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ribbon({})", self.rows)
    }
}

impl From<Composition> for Ribbon {
    fn from(rows: Composition) -> Self {
        Ribbon::new(rows)
    }
}

/// The composition transposition `α • D`.
///
/// Write `α` as the word `□★₁□★₂…★_{k-1}□` on its `k = |α|` boxes, where `★`
/// is `⊙` inside a row and `·` between rows. Substituting `D` for the odd
/// boxes and the transpose `Dᵗ` for the even ones and evaluating the stars as
/// ribbon (near-)concatenation yields a ribbon with `|α|·|D|` boxes.
pub fn comp_transpose(alpha: &Composition, d: &Ribbon) -> Ribbon {
    assert!(!alpha.is_empty(), "comp_transpose requires a nonempty composition");
    let transposed = d.transpose();
    let mut pieces_done = 1u32;
    let mut result = d.clone();
    for (i, &len) in alpha.parts().iter().enumerate() {
        let boxes_in_row = if i == 0 { len - 1 } else { len };
        for j in 0..boxes_in_row {
            let next = if pieces_done.is_multiple_of(2) { d } else { &transposed };
            let same_row = !(i > 0 && j == 0);
            result = if same_row { result.near_concat(next) } else { result.concat(next) };
            pieces_done += 1;
        }
    }
    result
}

/// The staircase ribbon `△_{n,k}`: `k-1` one-box rows above a row of
/// `n-k+1` boxes, i.e. the composition `(1^{k-1}, n-k+1)`.
pub fn triangle(n: u32, k: u32) -> Ribbon {
    assert!(n >= 1 && (1..=n).contains(&k), "triangle requires 1 <= k <= n, got n={n} k={k}");
    let mut parts = vec![1u32; k as usize - 1];
    parts.push(n - k + 1);
    Ribbon::from_parts(parts)
}

/// The basic blocks of size `n`: the one-row ribbon and `△_{n,3}` together
/// with their transposes and rotations, deduplicated. For `n ≤ 2` only the
/// one-row/one-column pair exists.
pub fn basic_blocks(n: u32) -> BTreeSet<Ribbon> {
    assert!(n >= 1, "basic_blocks requires n >= 1");
    let mut set = BTreeSet::new();
    let row = triangle(n, 1);
    set.insert(row.transpose());
    set.insert(row);
    if n >= 3 {
        let tri = triangle(n, 3);
        set.insert(tri.transpose().rotate());
        set.insert(tri.transpose());
        set.insert(tri.rotate());
        set.insert(tri);
    }
    set
}

/// A skew diagram `λ/μ`, shifted or unshifted.
///
/// Unshifted: row `i` (1-based) occupies columns `μ_i+1 ..= λ_i`. Shifted
/// (requires strict `λ`, `μ`): row `i` is additionally indented by `i-1`, so
/// it occupies columns `i+μ_i ..= i+λ_i-1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
    shifted: bool,
}

/// Connectivity and ribbon structure of a [`SkewShape`], as computed by
/// [`SkewShape::analyze`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShapeAnalysis {
    /// Whether the box set is edgewise connected (empty shapes count as
    /// connected).
    pub is_connected: bool,
    /// Edgewise-connected components, each sorted by `(row, column)`.
    pub components: Vec<Vec<(i64, i64)>>,
    /// The row composition if the shape is a single ribbon.
    pub as_ribbon: Option<Ribbon>,
    /// A box `(i,j)` such that `(i,j)`, `(i,j+1)`, `(i+1,j+1)` all lie in the
    /// shape — the pattern whose presence disqualifies a ribbon.
    pub non_ribbon_witness: Option<(i64, i64)>,
}

impl SkewShape {
    /// A shifted skew shape `λ/μ`. Both partitions must be strict and `μ`
    /// must fit inside `λ`.
    pub fn shifted(outer: Partition, inner: Partition) -> Result<Self, GammaError> {
        if !outer.is_strict() || !inner.is_strict() {
            return Err(GammaError::Invalid(format!(
                "shifted shape needs strict partitions, got {outer}/{inner}"
            )));
        }
        Self::build(outer, inner, true)
    }

    /// An ordinary (unshifted) skew shape `λ/μ`.
    pub fn unshifted(outer: Partition, inner: Partition) -> Result<Self, GammaError> {
        Self::build(outer, inner, false)
    }

    fn build(outer: Partition, inner: Partition, shifted: bool) -> Result<Self, GammaError> {
        if inner.len() > outer.len()
            || inner.parts().iter().zip(outer.parts()).any(|(m, l)| m > l)
        {
            return Err(GammaError::Invalid(format!("{inner} does not fit inside {outer}")));
        }
        Ok(SkewShape { outer, inner, shifted })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_shifted(&self) -> bool {
        self.shifted
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    /// The box set as `(row, column)` pairs, sorted row-major.
    pub fn boxes(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for (i, &outer_len) in self.outer.parts().iter().enumerate() {
            let inner_len = self.inner.parts().get(i).copied().unwrap_or(0);
            let shift = if self.shifted { i as i64 } else { 0 };
            let row = i as i64 + 1;
            for col in i64::from(inner_len) + 1..=i64::from(outer_len) {
                out.push((row, col + shift));
            }
        }
        out
    }

    /// Connectivity, components, and ribbon recognition in one pass.
    pub fn analyze(&self) -> ShapeAnalysis {
        let boxes = self.boxes();
        let index: BTreeSet<(i64, i64)> = boxes.iter().copied().collect();

        // Union-find over box indices, edges between side-adjacent boxes.
        let positions: Vec<(i64, i64)> = boxes.clone();
        let lookup: std::collections::HashMap<(i64, i64), usize> =
            positions.iter().enumerate().map(|(k, &b)| (b, k)).collect();
        let mut parent: Vec<usize> = (0..positions.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (k, &(r, c)) in positions.iter().enumerate() {
            for neighbor in [(r, c + 1), (r + 1, c)] {
                if let Some(&j) = lookup.get(&neighbor) {
                    let (a, b) = (find(&mut parent, k), find(&mut parent, j));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<(i64, i64)>> = Default::default();
        for (k, &b) in positions.iter().enumerate() {
            groups.entry(find(&mut parent, k)).or_default().push(b);
        }
        let mut components: Vec<Vec<(i64, i64)>> = groups.into_values().collect();
        components.sort_by_key(|comp| comp[0]);
        let is_connected = components.len() <= 1;

        let non_ribbon_witness = boxes
            .iter()
            .copied()
            .find(|&(r, c)| index.contains(&(r, c + 1)) && index.contains(&(r + 1, c + 1)));

        let as_ribbon = if is_connected && non_ribbon_witness.is_none() && !boxes.is_empty() {
            Some(ribbon_from_boxes(&boxes))
        } else {
            None
        };

        ShapeAnalysis { is_connected, components, as_ribbon, non_ribbon_witness }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// Reads the row composition off a connected ribbon box set (rows must be
/// consecutive; callers guarantee the border-strip property).
fn ribbon_from_boxes(boxes: &[(i64, i64)]) -> Ribbon {
    let mut parts: Vec<u32> = Vec::new();
    let mut current_row = boxes[0].0;
    let mut count = 0u32;
    for &(r, _) in boxes {
        if r == current_row {
            count += 1;
        } else {
            parts.push(count);
            current_row = r;
            count = 1;
        }
    }
    parts.push(count);
    Ribbon::from_parts(parts)
}

/// Embeds a ribbon as a shifted skew shape via suffix sums:
/// `λ_i = α_i + α_{i+1} + … + α_ℓ` and `μ_i = λ_{i+1}`. Every composition is
/// realizable this way, generalizing the staircase shapes `△_{n,k}`.
pub fn shifted_realization(ribbon: &Ribbon) -> SkewShape {
    let parts = ribbon.parts();
    let mut outer = Vec::with_capacity(parts.len());
    let mut suffix = 0u32;
    for &len in parts.iter().rev() {
        suffix += len;
        outer.push(suffix);
    }
    outer.reverse();
    let inner: Vec<u32> = outer[1..].iter().copied().filter(|&x| x > 0).collect();
    SkewShape::shifted(Partition::new(outer), Partition::new(inner))
        .expect("suffix sums are strictly decreasing")
}
