//! Chromatic symmetric functions in the power-sum basis, their even part,
//! and the graph families whose even parts generate the odd subalgebra Γ.
//!
//! For a simple graph `G` on `n` vertices,
//! `X_G = Σ_{S ⊆ E} (-1)^{|S|} p_{λ(S)}` where `λ(S)` lists the component
//! sizes of `(V, S)`. The *near-chromatic* function is the even part
//! `Y_G = (X_G + ω(X_G)) / 2`, which keeps exactly the terms whose partition
//! has an even number of even parts.
//!
//! Membership facts checked here both algebraically and structurally:
//! `X_G ∈ Γ` only for edgeless graphs, while `Y_G ∈ Γ` exactly when every
//! component of `G` is a star or a triangle. Products of the near-chromatic
//! functions of odd stars (optionally with the triangle replacing the
//! three-vertex star) indexed by odd partitions give bases of Γ, which
//! [`y_basis_check`] verifies by exact rank computation.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::algebra::PExpansion;
use crate::combinat::{odd_partitions, Partition};
use crate::linalg;

/// A simple undirected graph on vertices `0..n`, edges stored as ordered
/// pairs `(a, b)` with `a < b`, sorted and duplicate-free.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimpleGraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    /// Builds a graph, normalizing edge endpoints. Panics on loops,
    /// out-of-range endpoints, or duplicate edges.
    pub fn new(vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut normalized: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| {
                assert!(a != b, "loop at vertex {a}");
                assert!(a < vertices && b < vertices, "edge ({a},{b}) out of range");
                (a.min(b), a.max(b))
            })
            .collect();
        normalized.sort_unstable();
        assert!(normalized.windows(2).all(|w| w[0] != w[1]), "duplicate edge");
        SimpleGraph { vertices, edges: normalized }
    }

    /// The star on `n ≥ 1` vertices: vertex 0 joined to all others.
    pub fn star(n: usize) -> Self {
        assert!(n >= 1, "a star needs at least one vertex");
        SimpleGraph::new(n, (1..n).map(|i| (0, i)))
    }

    /// The triangle (three-cycle).
    pub fn triangle() -> Self {
        SimpleGraph::cycle(3)
    }

    /// The cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        SimpleGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The path on `n ≥ 1` vertices.
    pub fn path(n: usize) -> Self {
        assert!(n >= 1, "a path needs at least one vertex");
        SimpleGraph::new(n, (1..n).map(|i| (i - 1, i)))
    }

    /// `n` isolated vertices.
    pub fn null_graph(n: usize) -> Self {
        SimpleGraph::new(n, std::iter::empty())
    }

    /// Disjoint union, relabeling the second graph's vertices upward.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> Self {
        let offset = self.vertices;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(a, b)| (a + offset, b + offset)));
        SimpleGraph::new(self.vertices + other.vertices, edges)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for &(a, b) in &self.edges {
            let ra = find(&mut parent, a);
            let rb = find(&mut parent, b);
            if ra != rb {
                parent[ra] = rb;
            }
        }
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for v in 0..self.vertices {
            let root = find(&mut parent, v);
            groups.entry(root).or_default().push(v);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort_by_key(|group| group[0]);
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Number of unordered pairs of edges sharing no vertex.
    pub fn disjoint_edge_pairs(&self) -> u64 {
        let mut count = 0;
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            for &(c, d) in &self.edges[i + 1..] {
                if a != c && a != d && b != c && b != d {
                    count += 1;
                }
            }
        }
        count
    }

    /// `true` when all edges lie in a single connected component that is a
    /// star (including a lone edge) or a triangle, with every other
    /// component an isolated vertex. Two edged components always contain a
    /// disjoint pair of edges, which contributes an even power sum that the
    /// symmetrization cannot cancel — so this is the exact structural
    /// criterion for the even part of the chromatic function to avoid even
    /// power sums.
    pub fn edges_form_single_star_or_triangle(&self) -> bool {
        let edged: Vec<Vec<usize>> =
            self.components().into_iter().filter(|comp| comp.len() > 1).collect();
        match edged.as_slice() {
            [] => true,
            [comp] => {
                // Every edge of the graph lives in this component.
                let c = comp.len();
                if c == 3 && self.edges.len() == 3 {
                    return true; // triangle
                }
                self.edges.len() == c - 1
                    && comp
                        .iter()
                        .any(|&center| self.edges.iter().all(|&(a, b)| a == center || b == center))
            }
            _ => false,
        }
    }
}

impl fmt::Display for SimpleGraph {
    /// The textual form accepted by the command-line graph parser:
    /// `n=4;edges=0-1,0-2,0-3` (or `n=4;edges=` when edgeless).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};edges=", self.vertices)?;
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}-{b}")?;
        }
        Ok(())
    }
}

/// The chromatic symmetric function `X_G` in power sums, by the signed
/// sum over edge subsets. Exponential in the edge count; guarded at 25
/// edges.
pub fn chromatic_sym(g: &SimpleGraph) -> PExpansion {
    let m = g.edges.len();
    assert!(m <= 25, "edge-subset expansion is exponential; {m} edges exceeds the 25-edge guard");
    let n = g.vertices;

    let mut counts: HashMap<Vec<u32>, i64> = HashMap::new();
    let mut parent: Vec<usize> = vec![0; n];
    let mut size: Vec<u32> = vec![0; n];
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }

    for mask in 0u32..(1u32 << m) {
        for v in 0..n {
            parent[v] = v;
            size[v] = 1;
        }
        for (i, &(a, b)) in g.edges.iter().enumerate() {
            if mask >> i & 1 == 0 {
                continue;
            }
            let ra = find(&mut parent, a);
            let rb = find(&mut parent, b);
            if ra != rb {
                size[rb] += size[ra];
                parent[ra] = rb;
            }
        }
        let mut lambda: Vec<u32> =
            (0..n).filter(|&v| find(&mut parent, v) == v).map(|v| size[v]).collect();
        lambda.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        *counts.entry(lambda).or_insert(0) += sign;
    }

    PExpansion::from_terms(
        n as u32,
        counts.into_iter().filter(|&(_, c)| c != 0).map(|(parts, c)| {
            (Partition::new(parts), BigRational::from_integer(BigInt::from(c)))
        }),
    )
}

/// The near-chromatic symmetric function `Y_G = (X_G + ω(X_G)) / 2`.
pub fn near_chromatic(g: &SimpleGraph) -> PExpansion {
    let x = chromatic_sym(g);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    (&x + &x.omega()).scaled(&half)
}

/// Closed form for the star on `n` vertices:
/// `X_{S_n} = Σ_{r=0}^{n-1} (-1)^r C(n-1, r) p_{r+1} p_1^{n-1-r}`.
pub fn star_closed_form(n: u32) -> PExpansion {
    assert!(n >= 1, "a star needs at least one vertex");
    star_terms(n, false)
}

/// Closed form for the even part of the star function: the even-`r` terms
/// of [`star_closed_form`].
pub fn near_star_closed_form(n: u32) -> PExpansion {
    assert!(n >= 1, "a star needs at least one vertex");
    star_terms(n, true)
}

fn star_terms(n: u32, even_r_only: bool) -> PExpansion {
    let mut binom = BigInt::one(); // C(n-1, r), updated incrementally
    let mut terms = Vec::new();
    for r in 0..n {
        if r > 0 {
            binom = &binom * BigInt::from(n - r) / BigInt::from(r);
        }
        if even_r_only && r % 2 == 1 {
            continue;
        }
        let mut parts = Vec::with_capacity((n - r) as usize);
        parts.push(r + 1);
        parts.extend(std::iter::repeat_n(1, (n - 1 - r) as usize));
        let coeff = if r % 2 == 0 { binom.clone() } else { -binom.clone() };
        terms.push((Partition::from_unsorted(parts), BigRational::from_integer(coeff)));
    }
    PExpansion::from_terms(n, terms)
}

/// Whether the chromatic and near-chromatic functions of a graph lie in the
/// odd subalgebra Γ, reported two independent ways: by inspecting the
/// computed expansions (with a violating term as witness) and by the
/// structural criteria on the graph itself.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GammaMembership {
    /// `X_G ∈ Γ`, decided from the expansion.
    pub x_in_gamma: bool,
    /// First term of `X_G` with an even part, in canonical order.
    pub x_witness: Option<(Partition, BigRational)>,
    /// Structural criterion for `X_G ∈ Γ`: the graph has no edges.
    pub x_structural: bool,
    /// `Y_G ∈ Γ`, decided from the expansion.
    pub y_in_gamma: bool,
    /// First term of `Y_G` with an even part, in canonical order.
    pub y_witness: Option<(Partition, BigRational)>,
    /// Structural criterion for `Y_G ∈ Γ`: a single star or triangle
    /// component carries all the edges.
    pub y_structural: bool,
}

/// Classifies Γ-membership of `X_G` and `Y_G`.
pub fn gamma_membership(g: &SimpleGraph) -> GammaMembership {
    let x = chromatic_sym(g);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let y = (&x + &x.omega()).scaled(&half);
    GammaMembership {
        x_in_gamma: x.is_in_gamma(),
        x_witness: x.first_non_odd_term(),
        x_structural: g.num_edges() == 0,
        y_in_gamma: y.is_in_gamma(),
        y_witness: y.first_non_odd_term(),
        y_structural: g.edges_form_single_star_or_triangle(),
    }
}

/// The two generating families for Γ built from near-chromatic functions of
/// graphs on an odd number of vertices.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BasisFamily {
    /// `{Y_{S_1}, Y_{C_3}, Y_{S_5}, Y_{S_7}, …}` — the triangle stands in
    /// for the three-vertex star.
    B1,
    /// `{Y_{S_1}, Y_{S_3}, Y_{S_5}, …}` — odd stars only.
    B2,
}

impl BasisFamily {
    /// The degree-`r` generator (`r` odd).
    pub fn generator(self, r: u32) -> SimpleGraph {
        assert!(r % 2 == 1, "generators exist in odd degrees only, got {r}");
        match self {
            BasisFamily::B1 if r == 3 => SimpleGraph::triangle(),
            _ => SimpleGraph::star(r as usize),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            BasisFamily::B1 => "b1",
            BasisFamily::B2 => "b2",
        }
    }
}

impl std::str::FromStr for BasisFamily {
    type Err = crate::GammaError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "b1" | "B1" => Ok(BasisFamily::B1),
            "b2" | "B2" => Ok(BasisFamily::B2),
            other => Err(crate::GammaError::Parse(format!(
                "unknown basis family {other:?} (expected b1 or b2)"
            ))),
        }
    }
}

/// Result of checking that the degree-`n` products of a family span Γⁿ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasisReport {
    pub family: BasisFamily,
    pub degree: u32,
    /// `dim Γⁿ` = number of partitions of `n` into odd parts.
    pub dimension: usize,
    /// Rank of the coefficient matrix of the products.
    pub rank: usize,
}

impl BasisReport {
    pub fn is_basis(&self) -> bool {
        self.rank == self.dimension
    }
}

/// Expands every product `∏_i Y_{gen(λ_i)}` for `λ ⊢ n` with odd parts and
/// computes the exact rank of the resulting coefficient matrix over the
/// power sums `p_μ`, `μ ∈ OP(n)`.
pub fn y_basis_check(family: BasisFamily, n: u32) -> BasisReport {
    let basis_partitions = odd_partitions(n);
    let dimension = basis_partitions.len();

    // Near-chromatic functions of the generators, one per odd degree.
    let mut generator_y: HashMap<u32, PExpansion> = HashMap::new();
    for lambda in &basis_partitions {
        for &part in lambda.parts() {
            generator_y
                .entry(part)
                .or_insert_with(|| near_chromatic(&family.generator(part)));
        }
    }

    let matrix: Vec<Vec<BigRational>> = basis_partitions
        .iter()
        .map(|lambda| {
            let mut product = PExpansion::one();
            for &part in lambda.parts() {
                product = &product * &generator_y[&part];
            }
            assert!(product.is_in_gamma(), "product for {lambda} has even-part support");
            basis_partitions.iter().map(|mu| product.coefficient(mu)).collect()
        })
        .collect();

    BasisReport { family, degree: n, dimension, rank: linalg::rank(matrix) }
}
