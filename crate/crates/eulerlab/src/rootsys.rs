//! Exact root-system core in Bourbaki coordinates.
//!
//! Irreducible (restricted) root systems of types A–G and the non-reduced
//! type BC are realized by their standard ε-coordinates (Bourbaki, *Groupes
//! et algèbres de Lie*, Ch. VI, Planches I–IX; the E-series realizations are
//! transcribed from Planche V–VII). The full root set is generated as the
//! orbit of the simple roots under simple reflections; dual bases, coroots,
//! Cartan integers and Weyl orbits are all computed exactly.

use crate::linalg::{dot, vscale, vsub, Matrix, Solver};
use crate::scalar::{frac, int, Scalar};
use serde_json::{json, Value};
use std::fmt;
use thiserror::Error;

/// Errors from root-system construction and queries.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootSysError {
    /// The requested rank is not admissible for the family.
    #[error("invalid rank {rank} for family {family}: {reason}")]
    InvalidRank {
        /// Family label.
        family: String,
        /// Requested rank.
        rank: usize,
        /// Admissibility constraint that failed.
        reason: &'static str,
    },
    /// A vector passed as a root is not a member of the root set.
    #[error("vector is not a root of {0}")]
    NotARoot(String),
}

/// The ten families of irreducible (restricted) root systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
    /// Non-reduced type: union of B and the doubled short roots.
    BC,
}

impl Family {
    /// Short letter used in labels ("A", "BC", ...).
    pub fn letter(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 | Family::E7 | Family::E8 => "E",
            Family::F4 => "F",
            Family::G2 => "G",
            Family::BC => "BC",
        }
    }
}

/// A family together with an admissible rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct RootSystemType {
    /// Root-system family.
    pub family: Family,
    /// Rank (number of simple roots).
    pub rank: usize,
}

impl RootSystemType {
    /// Validates the rank constraints: A: n ≥ 1, B/C: n ≥ 2, D: n ≥ 3,
    /// BC: n ≥ 1, fixed ranks for the exceptional families.
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSysError> {
        let err = |reason| {
            Err(RootSysError::InvalidRank {
                family: format!("{family:?}"),
                rank,
                reason,
            })
        };
        match family {
            Family::A | Family::BC if rank < 1 => err("rank must be at least 1"),
            Family::B | Family::C if rank < 2 => err("rank must be at least 2"),
            Family::D if rank < 3 => err("rank must be at least 3"),
            Family::E6 if rank != 6 => err("E6 has rank 6"),
            Family::E7 if rank != 7 => err("E7 has rank 7"),
            Family::E8 if rank != 8 => err("E8 has rank 8"),
            Family::F4 if rank != 4 => err("F4 has rank 4"),
            Family::G2 if rank != 2 => err("G2 has rank 2"),
            _ => Ok(RootSystemType { family, rank }),
        }
    }

    /// Human-readable label such as "A_3" or "BC_2".
    pub fn label(&self) -> String {
        format!("{}_{}", self.family.letter(), self.rank)
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// An irreducible root system with exact Bourbaki ε-coordinates.
///
/// Roots and coweights are plain coordinate vectors in the ambient space
/// (`rank + 1` dimensions for A, 8 for E6/E7/E8, 3 for G2, `rank` otherwise).
#[derive(Clone)]
pub struct RootSystem<S: Scalar> {
    rst: RootSystemType,
    dim: usize,
    simple: Vec<Vec<S>>,
    roots: Vec<Vec<S>>,
    positive: Vec<Vec<S>>,
}

impl<S: Scalar> RootSystem<S> {
    /// Builds the root system: simple roots in Bourbaki numbering, root set
    /// by reflection closure, positive roots by sign of simple-basis
    /// coordinates.
    pub fn build(rst: RootSystemType) -> Result<Self, RootSysError> {
        let (dim, simple) = simple_roots::<S>(rst);
        let mut roots = generate_roots(&simple);
        if rst.family == Family::BC {
            // Non-reduced part: the doubles of the short roots.
            let two = int::<S>(2);
            let doubled: Vec<Vec<S>> = roots
                .iter()
                .filter(|r| dot(r, r) == S::one())
                .map(|r| vscale(&two, r))
                .collect();
            roots.extend(doubled);
        }
        roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let simple_cols =
            Matrix::from_fn(dim, simple.len(), |i, j| simple[j][i].clone());
        let solver = Solver::new(&simple_cols).expect("simple roots independent");
        let mut positive: Vec<Vec<S>> = roots
            .iter()
            .filter(|r| {
                let coeffs = solver.solve(r).expect("root outside simple span");
                coeffs.iter().all(|c| !c.is_negative())
            })
            .cloned()
            .collect();
        positive.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(2 * positive.len(), roots.len(), "root set not symmetric");
        Ok(RootSystem {
            rst,
            dim,
            simple,
            roots,
            positive,
        })
    }

    /// The type of this system.
    pub fn rst(&self) -> RootSystemType {
        self.rst
    }

    /// Ambient coordinate dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Simple roots in Bourbaki numbering.
    pub fn simple_roots(&self) -> &[Vec<S>] {
        &self.simple
    }

    /// All roots, sorted.
    pub fn roots(&self) -> &[Vec<S>] {
        &self.roots
    }

    /// Positive roots (nonnegative simple-basis coordinates), sorted.
    pub fn positive_roots(&self) -> &[Vec<S>] {
        &self.positive
    }

    /// Membership test in the root set.
    pub fn contains(&self, v: &[S]) -> bool {
        self.roots.iter().any(|r| r.as_slice() == v)
    }

    /// The coroot α^∨ = 2α/(α,α).
    pub fn coroot(&self, alpha: &[S]) -> Result<Vec<S>, RootSysError> {
        if !self.contains(alpha) {
            return Err(RootSysError::NotARoot(self.rst.label()));
        }
        let norm = dot(alpha, alpha);
        Ok(vscale(&(int::<S>(2) / norm), alpha))
    }

    /// The Cartan integer β(α^∨) = 2(β,α)/(α,α).
    pub fn cartan_integer(&self, alpha: &[S], beta: &[S]) -> Result<i64, RootSysError> {
        if !self.contains(alpha) || !self.contains(beta) {
            return Err(RootSysError::NotARoot(self.rst.label()));
        }
        let v = int::<S>(2) * dot(beta, alpha) / dot(alpha, alpha);
        Ok(v.to_int().expect("Cartan pairing must be an integer"))
    }

    /// Reflection s_α(x) = x − (2(x,α)/(α,α)) α, valid for roots and
    /// coweights alike under the Euclidean pairing.
    pub fn reflect(&self, alpha: &[S], x: &[S]) -> Vec<S> {
        let c = int::<S>(2) * dot(x, alpha) / dot(alpha, alpha);
        vsub(x, &vscale(&c, alpha))
    }

    /// The dual basis h_1, …, h_n in span(simple roots): α_k(h_j) = δ_{kj}.
    pub fn dual_basis(&self) -> Vec<Vec<S>> {
        let n = self.simple.len();
        let gram = Matrix::from_fn(n, n, |k, i| dot(&self.simple[k], &self.simple[i]));
        let inv = gram.inverse().expect("Gram matrix invertible");
        (0..n)
            .map(|j| {
                let mut h = vec![S::zero(); self.dim];
                for i in 0..n {
                    let c = inv[(i, j)].clone();
                    for (a, b) in h.iter_mut().zip(&self.simple[i]) {
                        *a += c.clone() * b.clone();
                    }
                }
                h
            })
            .collect()
    }

    /// Evaluation α(h) under the Euclidean pairing.
    pub fn evaluate(&self, alpha: &[S], h: &[S]) -> S {
        dot(alpha, h)
    }

    /// Weyl orbit of a coweight: BFS closure under simple reflections.
    pub fn weyl_orbit(&self, v: &[S]) -> Vec<Vec<S>> {
        let mut orbit: Vec<Vec<S>> = vec![v.to_vec()];
        let mut frontier = vec![v.to_vec()];
        while let Some(x) = frontier.pop() {
            for alpha in &self.simple {
                let y = self.reflect(alpha, &x);
                if !orbit.contains(&y) {
                    orbit.push(y.clone());
                    frontier.push(y);
                }
            }
        }
        orbit.sort_by(|a, b| a.partial_cmp(b).unwrap());
        orbit
    }

    /// JSON form: {family, rank, simple_roots, positive_roots}.
    pub fn to_json(&self) -> Value {
        json!({
            "family": format!("{:?}", self.rst.family),
            "rank": self.rst.rank,
            "simple_roots": self.simple.iter().map(|r| vec_json(r)).collect::<Vec<_>>(),
            "positive_roots": self.positive.iter().map(|r| vec_json(r)).collect::<Vec<_>>(),
        })
    }
}

/// Serializes a rational as a reduced "p/q" (or plain "p") string.
pub fn scalar_string<S: Scalar>(x: &S) -> String {
    match x.to_fraction() {
        Some((n, 1)) => n.to_string(),
        Some((n, d)) => format!("{n}/{d}"),
        None => x.to_string(),
    }
}

/// Serializes a coordinate vector as a list of rational strings.
pub fn vec_json<S: Scalar>(v: &[S]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(scalar_string(x))).collect())
}

/// Reflection closure: orbit of the simple roots under simple reflections.
fn generate_roots<S: Scalar>(simple: &[Vec<S>]) -> Vec<Vec<S>> {
    let mut roots: Vec<Vec<S>> = Vec::new();
    let mut frontier: Vec<Vec<S>> = Vec::new();
    for s in simple {
        if !roots.contains(s) {
            roots.push(s.clone());
            frontier.push(s.clone());
        }
    }
    while let Some(r) = frontier.pop() {
        for alpha in simple {
            let c = int::<S>(2) * dot(&r, alpha) / dot(alpha, alpha);
            let image = vsub(&r, &vscale(&c, alpha));
            if !roots.contains(&image) {
                roots.push(image.clone());
                frontier.push(image);
            }
        }
    }
    roots
}

/// Bourbaki simple roots and ambient dimension for each family.
fn simple_roots<S: Scalar>(rst: RootSystemType) -> (usize, Vec<Vec<S>>) {
    let n = rst.rank;
    let unit = |dim: usize, i: usize| -> Vec<S> {
        let mut v = vec![S::zero(); dim];
        v[i] = S::one();
        v
    };
    let diff = |dim: usize, i: usize, j: usize| -> Vec<S> {
        let mut v = vec![S::zero(); dim];
        v[i] = S::one();
        v[j] = -S::one();
        v
    };
    match rst.family {
        Family::A => {
            let dim = n + 1;
            (dim, (0..n).map(|i| diff(dim, i, i + 1)).collect())
        }
        Family::B | Family::BC => {
            let mut s: Vec<Vec<S>> = (0..n.saturating_sub(1)).map(|i| diff(n, i, i + 1)).collect();
            s.push(unit(n, n - 1));
            (n, s)
        }
        Family::C => {
            let mut s: Vec<Vec<S>> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            let mut last = vec![S::zero(); n];
            last[n - 1] = int(2);
            s.push(last);
            (n, s)
        }
        Family::D => {
            let mut s: Vec<Vec<S>> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            let mut last = vec![S::zero(); n];
            last[n - 2] = S::one();
            last[n - 1] = S::one();
            s.push(last);
            (n, s)
        }
        Family::E6 | Family::E7 | Family::E8 => {
            let dim = 8;
            let mut s: Vec<Vec<S>> = Vec::new();
            // α1 = (e1 + e8 − e2 − e3 − e4 − e5 − e6 − e7)/2
            let mut a1 = vec![frac::<S>(-1, 2); 8];
            a1[0] = frac(1, 2);
            a1[7] = frac(1, 2);
            s.push(a1);
            // α2 = e1 + e2
            let mut a2 = vec![S::zero(); 8];
            a2[0] = S::one();
            a2[1] = S::one();
            s.push(a2);
            // α3 = e2 − e1, α4 = e3 − e2, …, α8 = e7 − e6
            for k in 0..6 {
                s.push(diff(dim, k + 1, k));
            }
            s.truncate(n);
            (dim, s)
        }
        Family::F4 => {
            let mut s = vec![
                diff(4, 1, 2), // e2 − e3
                diff(4, 2, 3), // e3 − e4
                unit(4, 3),    // e4
            ];
            // (e1 − e2 − e3 − e4)/2
            let mut a4 = vec![frac::<S>(-1, 2); 4];
            a4[0] = frac(1, 2);
            s.push(a4);
            (4, s)
        }
        Family::G2 => {
            let a1 = diff(3, 0, 1); // e1 − e2
            let mut a2 = vec![S::zero(); 3]; // −2e1 + e2 + e3
            a2[0] = int(-2);
            a2[1] = S::one();
            a2[2] = S::one();
            (3, vec![a1, a2])
        }
    }
}
