//! Concrete rational-matrix Lie algebras with Euler gradings.
//!
//! The three classical split-relevant families sl(n,R), so(p,q) and
//! sp(2n,R) are realized with explicit rational bases. On top of the
//! algebras the module provides:
//!
//! * Euler elements as matrices and the exact minimal-polynomial Euler test
//!   (`(ad h)^3 = ad h`, `ad h ≠ 0`);
//! * 3-gradings `g = g₋₁ ⊕ g₀ ⊕ g₁` as exact eigenspaces of `ad h`, the
//!   involution `τ_h` (+1 on g₀, −1 on g₋₁ ⊕ g₁) and orthogonality tests;
//! * sl(2)-triples from invertible nilpotents `x ∈ g₁` (solving `[x,y] = 2h`
//!   exactly) and the associated orthogonal Euler element `k = (x+y)/2`;
//! * the Jordan algebra on `g₁` with product `x∗y = [[x,f],y]`, its unit,
//!   invertibility via the exact rank of `(ad x)²: g₋₁ → g₁`, and the
//!   component classifiers that match pair classes;
//! * root-space realizations of the catalog entries: the strongly
//!   orthogonal family `k_1, …, k_r`, the rotation generators
//!   `z_j = [h, k_j]`, and the signed sums `k^j`;
//! * the pinned so(2,2) worked example with every named matrix compared
//!   entry by entry.
//!
//! Everything is exact; every check is a strict equality.

use crate::catalog::{Realization, SoLabel};
use crate::linalg::{rational_roots, Matrix};
use crate::scalar::{frac, int};
use crate::{Mat, RVec, Rat};
use num_traits::{Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

/// Errors from the matrix layer.
#[derive(Debug, Error)]
pub enum MatError {
    /// Invalid construction sizes.
    #[error("invalid size for {family}: {reason}")]
    InvalidSize {
        /// Family label.
        family: String,
        /// Constraint that failed.
        reason: String,
    },
    /// A matrix is not a member of the algebra.
    #[error("matrix is not an element of {0}")]
    NotInAlgebra(String),
    /// A matrix fails the Euler test.
    #[error("matrix is not an Euler element: {0}")]
    NotEuler(String),
    /// Label not valid for the family.
    #[error("invalid Euler label for {family}: {reason}")]
    InvalidLabel {
        /// Family label.
        family: String,
        /// Constraint that failed.
        reason: String,
    },
    /// An element of g₁ is not Jordan invertible.
    #[error("element is not in E^x: (ad x)^2 : g_-1 -> g_1 is not bijective")]
    NotInvertible,
    /// Input lies outside the expected graded component.
    #[error("matrix is not in the expected graded component {0}")]
    WrongComponent(i8),
    /// A defining equation failed.
    #[error("identity failed: {0}")]
    IdentityFailed(String),
}

/// Supported matrix families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatFamily {
    /// sl(n,R), trace-zero n×n matrices.
    Sl(usize),
    /// so(p,q) in the block realization {(a b; bᵀ d): a ∈ so_p, d ∈ so_q}.
    So(usize, usize),
    /// sp(2n,R) in the block realization {(A B; C −Aᵀ): B, C symmetric}.
    Sp(usize),
}

impl MatFamily {
    /// Display label.
    pub fn label(self) -> String {
        match self {
            MatFamily::Sl(n) => format!("sl({n},R)"),
            MatFamily::So(p, q) => format!("so({p},{q})"),
            MatFamily::Sp(n) => format!("sp({},R)", 2 * n),
        }
    }

    /// Matrix size of the realization.
    pub fn size(self) -> usize {
        match self {
            MatFamily::Sl(n) => n,
            MatFamily::So(p, q) => p + q,
            MatFamily::Sp(n) => 2 * n,
        }
    }

    /// Lie algebra dimension.
    pub fn dim(self) -> usize {
        match self {
            MatFamily::Sl(n) => n * n - 1,
            MatFamily::So(p, q) => (p + q) * (p + q - 1) / 2,
            MatFamily::Sp(n) => n * (2 * n + 1),
        }
    }
}

fn e_mat(size: usize, i: usize, j: usize) -> Mat {
    let mut m = Mat::zeros(size, size);
    m[(i, j)] = int(1);
    m
}

/// A concrete rational-matrix Lie algebra with a fixed ordered basis.
#[derive(Debug, Clone)]
pub struct MatrixAlgebra {
    /// Family and parameters.
    pub family: MatFamily,
    /// Matrix size.
    pub size: usize,
    /// Ordered basis.
    pub basis: Vec<Mat>,
}

impl MatrixAlgebra {
    /// Builds the algebra; rejects invalid sizes (sl: n ≥ 2; so: p, q ≥ 1;
    /// sp: n ≥ 1).
    pub fn build(family: MatFamily) -> Result<Self, MatError> {
        let err = |reason: &str| MatError::InvalidSize {
            family: family.label(),
            reason: reason.to_string(),
        };
        let size = family.size();
        let basis = match family {
            MatFamily::Sl(n) => {
                if n < 2 {
                    return Err(err("n must be at least 2"));
                }
                let mut basis = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            basis.push(e_mat(n, i, j));
                        }
                    }
                }
                for k in 0..n - 1 {
                    basis.push(&e_mat(n, k, k) - &e_mat(n, k + 1, k + 1));
                }
                basis
            }
            MatFamily::So(p, q) => {
                if p < 1 || q < 1 {
                    return Err(err("p and q must be at least 1"));
                }
                let mut basis = Vec::new();
                for i in 0..p {
                    for j in i + 1..p {
                        basis.push(&e_mat(size, i, j) - &e_mat(size, j, i));
                    }
                }
                for m in 0..q {
                    for n2 in m + 1..q {
                        basis.push(&e_mat(size, p + m, p + n2) - &e_mat(size, p + n2, p + m));
                    }
                }
                for i in 0..p {
                    for m in 0..q {
                        basis.push(&e_mat(size, i, p + m) + &e_mat(size, p + m, i));
                    }
                }
                basis
            }
            MatFamily::Sp(n) => {
                if n < 1 {
                    return Err(err("n must be at least 1"));
                }
                let mut basis = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        basis.push(&e_mat(size, i, j) - &e_mat(size, n + j, n + i));
                    }
                }
                for i in 0..n {
                    for j in i..n {
                        if i == j {
                            basis.push(e_mat(size, i, n + i));
                        } else {
                            basis.push(&e_mat(size, i, n + j) + &e_mat(size, j, n + i));
                        }
                    }
                }
                for i in 0..n {
                    for j in i..n {
                        if i == j {
                            basis.push(e_mat(size, n + i, i));
                        } else {
                            basis.push(&e_mat(size, n + i, j) + &e_mat(size, n + j, i));
                        }
                    }
                }
                basis
            }
        };
        debug_assert_eq!(basis.len(), family.dim());
        Ok(MatrixAlgebra {
            family,
            size,
            basis,
        })
    }

    /// Lie algebra dimension.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `m` in the algebra basis, or `None` if `m` is not a
    /// member. The basis is coordinate-sparse, so this is direct reading
    /// plus membership checks.
    pub fn coords(&self, m: &Mat) -> Option<Vec<Rat>> {
        if m.nrows() != self.size || m.ncols() != self.size {
            return None;
        }
        let mut c = Vec::with_capacity(self.dim());
        match self.family {
            MatFamily::Sl(n) => {
                if !m.trace().is_zero() {
                    return None;
                }
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            c.push(m[(i, j)].clone());
                        }
                    }
                }
                // Diagonal coordinates in the H_k = E_kk − E_{k+1,k+1} basis
                // are the partial sums of the diagonal entries.
                let mut acc = Rat::zero();
                for k in 0..n - 1 {
                    acc += m[(k, k)].clone();
                    c.push(acc.clone());
                }
            }
            MatFamily::So(p, q) => {
                for i in 0..p {
                    if !m[(i, i)].is_zero() {
                        return None;
                    }
                    for j in i + 1..p {
                        if m[(j, i)] != -m[(i, j)].clone() {
                            return None;
                        }
                        c.push(m[(i, j)].clone());
                    }
                }
                let mut d_coords = Vec::new();
                for a in 0..q {
                    if !m[(p + a, p + a)].is_zero() {
                        return None;
                    }
                    for b in a + 1..q {
                        if m[(p + b, p + a)] != -m[(p + a, p + b)].clone() {
                            return None;
                        }
                        d_coords.push(m[(p + a, p + b)].clone());
                    }
                }
                let mut b_coords = Vec::new();
                for i in 0..p {
                    for a in 0..q {
                        if m[(p + a, i)] != m[(i, p + a)] {
                            return None;
                        }
                        b_coords.push(m[(i, p + a)].clone());
                    }
                }
                // Basis order: a-block, d-block, b-block; the a-block
                // coordinates were pushed above.
                c.extend(d_coords);
                c.extend(b_coords);
            }
            MatFamily::Sp(n) => {
                for i in 0..n {
                    for j in 0..n {
                        if m[(n + j, n + i)] != -m[(i, j)].clone() {
                            return None;
                        }
                        c.push(m[(i, j)].clone());
                    }
                }
                for i in 0..n {
                    for j in i..n {
                        if m[(j, n + i)] != m[(i, n + j)] {
                            return None;
                        }
                        c.push(m[(i, n + j)].clone());
                    }
                }
                for i in 0..n {
                    for j in i..n {
                        if m[(n + j, i)] != m[(n + i, j)] {
                            return None;
                        }
                        c.push(m[(n + i, j)].clone());
                    }
                }
            }
        }
        debug_assert_eq!(c.len(), self.dim());
        Some(c)
    }

    /// Membership test.
    pub fn contains(&self, m: &Mat) -> bool {
        self.coords(m).is_some()
    }

    /// Reassembles a matrix from basis coordinates.
    pub fn from_coords(&self, c: &[Rat]) -> Mat {
        assert_eq!(c.len(), self.dim());
        let mut m = Mat::zeros(self.size, self.size);
        for (coef, b) in c.iter().zip(&self.basis) {
            if !coef.is_zero() {
                m = &m + &b.scale(coef);
            }
        }
        m
    }

    /// Cartan involution θ(x) = −xᵀ (valid for all three realizations).
    pub fn theta(&self, m: &Mat) -> Mat {
        -&m.transpose()
    }

    /// `ad x` as a dim×dim matrix acting on basis coordinates; errors if
    /// `x` is not in the algebra.
    pub fn ad_matrix(&self, x: &Mat) -> Result<Matrix<Rat>, MatError> {
        if !self.contains(x) {
            return Err(MatError::NotInAlgebra(self.family.label()));
        }
        let dim = self.dim();
        let mut m = Matrix::zeros(dim, dim);
        for (j, b) in self.basis.iter().enumerate() {
            let col = self
                .coords(&x.commutator(b))
                .ok_or_else(|| MatError::NotInAlgebra(self.family.label()))?;
            for (i, v) in col.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        Ok(m)
    }

    /// Verifies bracket closure: every `[b_i, b_j]` solves exactly in the
    /// basis (`coords` round-trips it).
    pub fn bracket_closure_check(&self) -> bool {
        for (i, bi) in self.basis.iter().enumerate() {
            for bj in &self.basis[i + 1..] {
                let w = bi.commutator(bj);
                match self.coords(&w) {
                    Some(c) => {
                        if self.from_coords(&c) != w {
                            return false;
                        }
                    }
                    None => return false,
                }
            }
        }
        true
    }
}

/// Euler labels for `euler_matrix`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EulerLabel {
    /// sl(n,R): h = diag(q·1_p, −p·1_q)/n with block size p.
    SlBlock(usize),
    /// so(p,q): the boost h_{1,p+1}.
    SoBoost,
    /// so(n,n): the half-sum of all boosts h_{j,n+j}.
    SoHalfSum,
    /// sp(2n,R): h = ½ diag(1_n, −1_n).
    SpHalf,
}

/// The Euler element of the family for the given label.
pub fn euler_matrix(alg: &MatrixAlgebra, label: EulerLabel) -> Result<Mat, MatError> {
    let err = |reason: &str| MatError::InvalidLabel {
        family: alg.family.label(),
        reason: reason.to_string(),
    };
    match (alg.family, label) {
        (MatFamily::Sl(n), EulerLabel::SlBlock(p)) => {
            if p == 0 || p >= n {
                return Err(err("block size must satisfy 0 < p < n"));
            }
            let q = n - p;
            Ok(Mat::from_fn(n, n, |i, j| {
                if i != j {
                    Rat::zero()
                } else if i < p {
                    frac(q as i64, n as i64)
                } else {
                    frac(-(p as i64), n as i64)
                }
            }))
        }
        (MatFamily::So(p, q), EulerLabel::SoBoost) => {
            if p < 1 || q < 1 {
                return Err(err("p and q must be at least 1"));
            }
            Ok(&e_mat(p + q, 0, p) + &e_mat(p + q, p, 0))
        }
        (MatFamily::So(p, q), EulerLabel::SoHalfSum) => {
            if p != q {
                return Err(err("half-sum label needs p = q"));
            }
            let mut h = Mat::zeros(2 * p, 2 * p);
            for j in 0..p {
                h = &h + &(&e_mat(2 * p, j, p + j) + &e_mat(2 * p, p + j, j)).scale(&frac(1, 2));
            }
            Ok(h)
        }
        (MatFamily::Sp(n), EulerLabel::SpHalf) => Ok(Mat::from_fn(2 * n, 2 * n, |i, j| {
            if i != j {
                Rat::zero()
            } else if i < n {
                frac(1, 2)
            } else {
                frac(-1, 2)
            }
        })),
        _ => Err(err("label does not apply to this family")),
    }
}

/// Exact Euler test for a matrix: `ad h ≠ 0` and the minimal polynomial of
/// `ad h` divides t(t−1)(t+1), checked as `M(M−I)(M+I) = 0`.
pub fn is_euler_matrix(alg: &MatrixAlgebra, h: &Mat) -> Result<bool, MatError> {
    let m = alg.ad_matrix(h)?;
    if m.is_zero() {
        return Ok(false);
    }
    let dim = alg.dim();
    let id = Matrix::identity(dim);
    let prod = m.mul_mat(&(&m - &id)).mul_mat(&(&m + &id));
    Ok(prod.is_zero())
}

/// The 3-grading induced by an Euler element, with exact eigenspace bases.
#[derive(Debug, Clone)]
pub struct GradedDecomposition {
    /// Underlying algebra.
    pub algebra: MatrixAlgebra,
    /// The Euler element.
    pub h: Mat,
    bases: [Vec<Vec<Rat>>; 3], // coordinates of g₋₁, g₀, g₁ bases
    u_inv: Matrix<Rat>,        // inverse of the stacked eigenbasis
}

/// Computes the 3-grading of the algebra by an Euler element.
pub fn grade(alg: &MatrixAlgebra, h: &Mat) -> Result<GradedDecomposition, MatError> {
    if !is_euler_matrix(alg, h)? {
        return Err(MatError::NotEuler(alg.family.label()));
    }
    let m = alg.ad_matrix(h)?;
    let dim = alg.dim();
    let id = Matrix::identity(dim);
    let mut bases: [Vec<Vec<Rat>>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    for (idx, lambda) in [(-1i64, 0usize), (0, 1), (1, 2)].map(|(l, i)| (i, l)) {
        let shifted = &m - &id.scale(&int(lambda));
        bases[idx] = shifted.kernel_basis();
    }
    let total: usize = bases.iter().map(Vec::len).sum();
    if total != dim || bases[0].len() != bases[2].len() {
        return Err(MatError::NotEuler(
            "eigenspaces do not span or dims mismatch".to_string(),
        ));
    }
    let mut u = Matrix::zeros(dim, dim);
    let mut col = 0;
    for part in &bases {
        for v in part {
            for (i, x) in v.iter().enumerate() {
                u[(i, col)] = x.clone();
            }
            col += 1;
        }
    }
    let u_inv = u.inverse().ok_or_else(|| {
        MatError::NotEuler("eigenbasis is singular".to_string())
    })?;
    Ok(GradedDecomposition {
        algebra: alg.clone(),
        h: h.clone(),
        bases,
        u_inv,
    })
}

impl GradedDecomposition {
    /// Dimensions (dim g₋₁, dim g₀, dim g₁).
    pub fn dims(&self) -> (usize, usize, usize) {
        (
            self.bases[0].len(),
            self.bases[1].len(),
            self.bases[2].len(),
        )
    }

    fn part_range(&self, part: i8) -> std::ops::Range<usize> {
        let (d_m1, d_0, d_1) = self.dims();
        match part {
            -1 => 0..d_m1,
            0 => d_m1..d_m1 + d_0,
            1 => d_m1 + d_0..d_m1 + d_0 + d_1,
            _ => panic!("part must be -1, 0 or 1"),
        }
    }

    /// Coordinates of `x` with respect to the stacked eigenbasis.
    fn eigen_coords(&self, x: &Mat) -> Result<Vec<Rat>, MatError> {
        let c = self
            .algebra
            .coords(x)
            .ok_or_else(|| MatError::NotInAlgebra(self.algebra.family.label()))?;
        Ok(self.u_inv.mul_vec(&c))
    }

    /// Projection onto g_part (part ∈ {−1, 0, 1}).
    pub fn project(&self, x: &Mat, part: i8) -> Result<Mat, MatError> {
        let ec = self.eigen_coords(x)?;
        let range = self.part_range(part);
        let mut coords = vec![Rat::zero(); self.algebra.dim()];
        for (local, global) in range.enumerate() {
            let coef = &ec[global];
            if coef.is_zero() {
                continue;
            }
            let basis_vec = &self.bases[(part + 1) as usize][local];
            for (a, b) in coords.iter_mut().zip(basis_vec) {
                *a += coef.clone() * b.clone();
            }
        }
        Ok(self.algebra.from_coords(&coords))
    }

    /// τ_h(x): +1 on g₀, −1 on g₋₁ ⊕ g₁.
    pub fn tau(&self, x: &Mat) -> Result<Mat, MatError> {
        let p0 = self.project(x, 0)?;
        let pm = self.project(x, -1)?;
        let pp = self.project(x, 1)?;
        Ok(&(&p0 - &pm) - &pp)
    }

    /// Whether `x` lies in g_part.
    pub fn in_part(&self, x: &Mat, part: i8) -> Result<bool, MatError> {
        Ok(self.project(x, part)? == *x)
    }

    /// Basis of g_part as matrices.
    pub fn part_basis(&self, part: i8) -> Vec<Mat> {
        self.bases[(part + 1) as usize]
            .iter()
            .map(|c| self.algebra.from_coords(c))
            .collect()
    }
}

/// Applies τ_h (public operation form of [`GradedDecomposition::tau`]).
pub fn tau_apply(decomp: &GradedDecomposition, x: &Mat) -> Result<Mat, MatError> {
    decomp.tau(x)
}

/// Whether `k` forms an orthogonal pair with the grading element: `k` is
/// Euler and τ_h(k) = −k (equivalently, its g₀-component vanishes).
pub fn is_orthogonal_pair(decomp: &GradedDecomposition, k: &Mat) -> Result<bool, MatError> {
    if !decomp.algebra.contains(k) {
        return Err(MatError::NotInAlgebra(decomp.algebra.family.label()));
    }
    if !is_euler_matrix(&decomp.algebra, k)? {
        return Ok(false);
    }
    Ok(decomp.project(k, 0)?.is_zero())
}

/// An orthogonal Euler pair (h, k) with z = [h, k], carrying verified sl(2)
/// relations [h,k] = z, [z,k] = h, [h,z] = k.
#[derive(Debug, Clone)]
pub struct EulerPair {
    /// The grading Euler element.
    pub h: Mat,
    /// The orthogonal Euler element.
    pub k: Mat,
    /// The rotation generator z = [h, k].
    pub z: Mat,
}

impl EulerPair {
    /// Builds and fully verifies the pair.
    pub fn new(decomp: &GradedDecomposition, k: &Mat) -> Result<Self, MatError> {
        if !is_orthogonal_pair(decomp, k)? {
            return Err(MatError::IdentityFailed(
                "k is not an orthogonal Euler element for h".to_string(),
            ));
        }
        let h = decomp.h.clone();
        let z = h.commutator(k);
        if z.commutator(k) != h {
            return Err(MatError::IdentityFailed("[z,k] = h".to_string()));
        }
        if h.commutator(&z) != *k {
            return Err(MatError::IdentityFailed("[h,z] = k".to_string()));
        }
        Ok(EulerPair { h, k: k.clone(), z })
    }
}

/// An sl(2)-triple built from an invertible nilpotent x ∈ g₁.
#[derive(Debug, Clone)]
pub struct Sl2Triple {
    /// The nilpotent x ∈ g₁.
    pub x: Mat,
    /// The opposite nilpotent y ∈ g₋₁ with [x, y] = 2h.
    pub y: Mat,
    /// The orthogonal Euler element k = (x + y)/2.
    pub k: Mat,
    /// The verified pair (h, k).
    pub pair: EulerPair,
}

/// Builds the sl(2)-triple (x, 2h, −y) from an invertible x ∈ g₁ and the
/// orthogonal Euler element k = (x+y)/2; errors with `NotInvertible` when
/// `(ad x)²: g₋₁ → g₁` fails to be bijective.
pub fn sl2_triple_from_nilpotent(
    decomp: &GradedDecomposition,
    x: &Mat,
) -> Result<Sl2Triple, MatError> {
    if !decomp.in_part(x, 1)? {
        return Err(MatError::WrongComponent(1));
    }
    let alg = &decomp.algebra;
    let f_basis = decomp.part_basis(-1);
    let dim = alg.dim();
    // Columns: algebra coordinates of [x, f_i].
    let mut a = Matrix::zeros(dim, f_basis.len());
    for (j, f) in f_basis.iter().enumerate() {
        let col = alg
            .coords(&x.commutator(f))
            .ok_or_else(|| MatError::NotInAlgebra(alg.family.label()))?;
        for (i, v) in col.into_iter().enumerate() {
            a[(i, j)] = v;
        }
    }
    let rhs = alg
        .coords(&decomp.h.scale(&int(2)))
        .ok_or_else(|| MatError::NotInAlgebra(alg.family.label()))?;
    let coeffs = a.solve_unique(&rhs).ok_or(MatError::NotInvertible)?;
    let mut y = Mat::zeros(alg.size, alg.size);
    for (c, f) in coeffs.iter().zip(&f_basis) {
        if !c.is_zero() {
            y = &y + &f.scale(c);
        }
    }
    if x.commutator(&y) != decomp.h.scale(&int(2)) {
        return Err(MatError::IdentityFailed("[x,y] = 2h".to_string()));
    }
    let k = (x + &y).scale(&frac(1, 2));
    let pair = EulerPair::new(decomp, &k)?;
    Ok(Sl2Triple {
        x: x.clone(),
        y,
        k,
        pair,
    })
}

/// Whether x ∈ g₁ is Jordan invertible: `(ad x)²` maps g₋₁ onto g₁
/// (exact rank test).
pub fn jordan_invertible(decomp: &GradedDecomposition, x: &Mat) -> Result<bool, MatError> {
    if !decomp.in_part(x, 1)? {
        return Err(MatError::WrongComponent(1));
    }
    let f_basis = decomp.part_basis(-1);
    let d1 = f_basis.len();
    if d1 == 0 {
        return Ok(false);
    }
    // Matrix of (ad x)² : g₋₁ → g₁ in eigen coordinates.
    let mut m = Matrix::zeros(decomp.algebra.dim(), d1);
    for (j, f) in f_basis.iter().enumerate() {
        let image = x.commutator(&x.commutator(f));
        let col = decomp
            .algebra
            .coords(&image)
            .ok_or_else(|| MatError::NotInAlgebra(decomp.algebra.family.label()))?;
        for (i, v) in col.into_iter().enumerate() {
            m[(i, j)] = v;
        }
    }
    Ok(m.rank() == d1)
}

/// Round-trip check: build k from x via the triple, then verify that twice
/// the g₁-component of k equals x exactly.
pub fn pair_roundtrip(decomp: &GradedDecomposition, x: &Mat) -> Result<bool, MatError> {
    let triple = sl2_triple_from_nilpotent(decomp, x)?;
    let back = triple.pair.k.scale(&int(2));
    let back1 = decomp.project(&back, 1)?;
    Ok(back1 == *x)
}

/// Outcome of a seeded random Jordan battery on g₁.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BatteryOutcome {
    /// Invertible elements drawn and round-tripped.
    pub invertible_tested: usize,
    /// Non-invertible elements drawn (triple construction must fail).
    pub singular_tested: usize,
    /// Round trips that failed to recover x.
    pub roundtrip_failures: usize,
    /// Draws where invertibility and triple success disagreed.
    pub equivalence_failures: usize,
}

/// Draws seeded random g₁ elements with small integer coordinates until
/// `invertible_target` Jordan-invertible ones have been round-tripped.
/// Every draw also cross-checks `jordan_invertible` against success of the
/// sl(2)-triple construction.
pub fn roundtrip_battery(
    decomp: &GradedDecomposition,
    seed: u64,
    invertible_target: usize,
) -> Result<BatteryOutcome, MatError> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let basis = decomp.part_basis(1);
    let size = decomp.h.nrows();
    let mut out = BatteryOutcome {
        invertible_tested: 0,
        singular_tested: 0,
        roundtrip_failures: 0,
        equivalence_failures: 0,
    };
    let mut draws = 0usize;
    while out.invertible_tested < invertible_target {
        draws += 1;
        if draws > invertible_target.max(1) * 200 {
            return Err(MatError::IdentityFailed(
                "random battery found too few invertible elements".to_string(),
            ));
        }
        let mut x = Mat::zeros(size, size);
        for b in &basis {
            let c: i64 = rng.gen_range(-2..=2);
            if c != 0 {
                x = &x + &b.scale(&int(c));
            }
        }
        let invertible = jordan_invertible(decomp, &x)?;
        let triple = sl2_triple_from_nilpotent(decomp, &x);
        if invertible != triple.is_ok() {
            out.equivalence_failures += 1;
        }
        match triple {
            Ok(triple) => {
                out.invertible_tested += 1;
                let back = decomp.project(&triple.pair.k.scale(&int(2)), 1)?;
                if back != x {
                    out.roundtrip_failures += 1;
                }
            }
            Err(_) => out.singular_tested += 1,
        }
    }
    Ok(out)
}

/// The Jordan algebra on g₁: unit e, dual element f with [e, f] = h, and
/// product x∗y = [[x, f], y].
#[derive(Debug, Clone)]
pub struct JordanData {
    /// The grading.
    pub decomp: GradedDecomposition,
    /// Unit element e ∈ g₁.
    pub e: Mat,
    /// Dual element f ∈ g₋₁ with [e, f] = h.
    pub f: Mat,
}

/// Builds the Jordan structure after checking e ∈ g₁, f ∈ g₋₁ and
/// [e, f] = h exactly.
pub fn jordan_build(
    decomp: &GradedDecomposition,
    e: &Mat,
    f: &Mat,
) -> Result<JordanData, MatError> {
    if !decomp.in_part(e, 1)? {
        return Err(MatError::WrongComponent(1));
    }
    if !decomp.in_part(f, -1)? {
        return Err(MatError::WrongComponent(-1));
    }
    if e.commutator(f) != decomp.h {
        return Err(MatError::IdentityFailed("[e,f] = h".to_string()));
    }
    Ok(JordanData {
        decomp: decomp.clone(),
        e: e.clone(),
        f: f.clone(),
    })
}

/// Jordan product x∗y = [[x, f], y] (inputs must lie in g₁).
pub fn jordan_product(jd: &JordanData, x: &Mat, y: &Mat) -> Result<Mat, MatError> {
    if !jd.decomp.in_part(x, 1)? || !jd.decomp.in_part(y, 1)? {
        return Err(MatError::WrongComponent(1));
    }
    Ok(x.commutator(&jd.f).commutator(y))
}

/// Canonical Jordan unit: e = 2·(g₁-component of k^r) from a realization,
/// with f solved from the sl(2)-triple. Requires pairs to be available.
pub fn canonical_jordan(real: &PairRealization) -> Result<JordanData, MatError> {
    if !real.pairs_available {
        return Err(MatError::IdentityFailed(
            "h is not symmetric; no Jordan unit from k^r".to_string(),
        ));
    }
    let k_top = real.k_rep(real.r);
    let e = real.decomp.project(&k_top, 1)?.scale(&int(2));
    let triple = sl2_triple_from_nilpotent(&real.decomp, &e)?;
    let f = triple.y.scale(&frac(1, 2));
    jordan_build(&real.decomp, &e, &f)
}

/// Applies exp(θ ad z) for θ = quarter_turns·π/2 to a target satisfying
/// `(ad z)² target = −target`: result = cos θ·target + sin θ·[z, target]
/// with exact coefficients in {0, ±1}.
pub fn exp_ad_on_plane(z: &Mat, quarter_turns: i64, target: &Mat) -> Result<Mat, MatError> {
    let bracket = z.commutator(target);
    let square = z.commutator(&bracket);
    if square != -target {
        return Err(MatError::IdentityFailed(
            "(ad z)^2 target = -target".to_string(),
        ));
    }
    let (c, s) = match quarter_turns.rem_euclid(4) {
        0 => (1i64, 0i64),
        1 => (0, 1),
        2 => (-1, 0),
        _ => (0, -1),
    };
    Ok(&target.scale(&int(c)) + &bracket.scale(&int(s)))
}

// ---------------------------------------------------------------------------
// Realizations of catalog entries: strongly orthogonal k_j, z_j, and k^j.
// ---------------------------------------------------------------------------

/// A realized Euler configuration: the algebra, the grading by h, the
/// strongly orthogonal family k_1, …, k_r with rotation generators
/// z_j = [h, k_j], and the signed sums k^j.
#[derive(Debug, Clone)]
pub struct PairRealization {
    /// Realization parameters.
    pub spec: Realization,
    /// The algebra.
    pub algebra: MatrixAlgebra,
    /// The grading by h.
    pub decomp: GradedDecomposition,
    /// The Euler element.
    pub h: Mat,
    /// Strongly orthogonal root data in ε-coordinates of the split Cartan.
    pub gammas: Vec<RVec>,
    /// Root vectors e_j ∈ g_{γ_j} ∩ g₁.
    pub e_vecs: Vec<Mat>,
    /// k_j = e_j − θ(e_j), normalized to local sl(2) scale.
    pub k: Vec<Mat>,
    /// z_j = [h, k_j].
    pub z: Vec<Mat>,
    /// Number of strongly orthogonal roots r.
    pub r: usize,
    /// Whether the signed sums k^j are orthogonal Euler elements
    /// (equivalently, h is symmetric in this realization).
    pub pairs_available: bool,
}

/// The split Cartan basis and ε-functional data for a realization.
struct CartanData {
    /// a-basis as matrices.
    a_basis: Vec<Mat>,
    /// ε-values of each a-basis element (row m = ε-vector of a_m).
    eps: Vec<RVec>,
}

fn cartan_data(alg: &MatrixAlgebra, spec: Realization) -> CartanData {
    match spec {
        Realization::SlR { n, .. } => {
            let a_basis: Vec<Mat> = (0..n - 1)
                .map(|k| &e_mat(n, k, k) - &e_mat(n, k + 1, k + 1))
                .collect();
            let eps = (0..n - 1)
                .map(|k| {
                    let mut v = vec![Rat::zero(); n];
                    v[k] = int(1);
                    v[k + 1] = int(-1);
                    v
                })
                .collect();
            CartanData { a_basis, eps }
        }
        Realization::SoPQ { p, q, .. } => {
            let l = p.min(q);
            let size = alg.size;
            let a_basis: Vec<Mat> = (0..l)
                .map(|j| &e_mat(size, j, p + j) + &e_mat(size, p + j, j))
                .collect();
            let eps = (0..l)
                .map(|j| {
                    let mut v = vec![Rat::zero(); l];
                    v[j] = int(1);
                    v
                })
                .collect();
            CartanData { a_basis, eps }
        }
        Realization::SpR { n } => {
            let size = alg.size;
            let a_basis: Vec<Mat> = (0..n)
                .map(|j| &e_mat(size, j, j) - &e_mat(size, n + j, n + j))
                .collect();
            let eps = (0..n)
                .map(|j| {
                    let mut v = vec![Rat::zero(); n];
                    v[j] = int(1);
                    v
                })
                .collect();
            CartanData { a_basis, eps }
        }
    }
}

/// γ-vectors (in ε-coordinates) for a realization.
fn gamma_vectors(spec: Realization) -> Vec<RVec> {
    let eps = |dim: usize, i: usize| -> RVec {
        let mut v = vec![Rat::zero(); dim];
        v[i - 1] = int(1);
        v
    };
    match spec {
        Realization::SlR { n, p } => {
            let q = n - p;
            let r = p.min(q);
            (1..=r)
                .map(|j| {
                    let mut v = eps(n, j);
                    v[p + j - 1] = int(-1);
                    v
                })
                .collect()
        }
        Realization::SoPQ { p, q, label } => {
            let l = p.min(q);
            match label {
                SoLabel::Boost => {
                    if l >= 2 {
                        let mut g1 = eps(l, 1);
                        g1[1] = int(1);
                        let mut g2 = eps(l, 1);
                        g2[1] = int(-1);
                        vec![g1, g2]
                    } else {
                        vec![eps(l, 1)]
                    }
                }
                SoLabel::HalfSum => {
                    let r = l / 2;
                    (1..=r)
                        .map(|j| {
                            let mut v = eps(l, 2 * j - 1);
                            v[2 * j - 1] = int(1);
                            v
                        })
                        .collect()
                }
            }
        }
        Realization::SpR { n } => (1..=n)
            .map(|j| {
                let mut v = vec![Rat::zero(); n];
                v[j - 1] = int(2);
                v
            })
            .collect(),
    }
}

impl PairRealization {
    /// Builds the realization for a catalog `Realization` value.
    pub fn build(spec: Realization) -> Result<Self, MatError> {
        let (family, label) = match spec {
            Realization::SlR { n, p } => (MatFamily::Sl(n), EulerLabel::SlBlock(p)),
            Realization::SoPQ { p, q, label } => (
                MatFamily::So(p, q),
                match label {
                    SoLabel::Boost => EulerLabel::SoBoost,
                    SoLabel::HalfSum => EulerLabel::SoHalfSum,
                },
            ),
            Realization::SpR { n } => (MatFamily::Sp(n), EulerLabel::SpHalf),
        };
        let alg = MatrixAlgebra::build(family)?;
        let h = euler_matrix(&alg, label)?;
        let decomp = grade(&alg, &h)?;
        let cartan = cartan_data(&alg, spec);
        let mut gammas = gamma_vectors(spec);
        let dim = alg.dim();
        let mut ks = Vec::new();
        let mut zs = Vec::new();
        for gamma in &gammas {
            // Root space: simultaneous kernel of (ad a_m − γ(a_m)·id).
            let mut stacked = Matrix::zeros(dim * cartan.a_basis.len(), dim);
            for (m, a) in cartan.a_basis.iter().enumerate() {
                let val = crate::linalg::dot(gamma, &cartan.eps[m]);
                let shifted = &alg.ad_matrix(a)? - &Matrix::identity(dim).scale(&val);
                for i in 0..dim {
                    for j2 in 0..dim {
                        stacked[(m * dim + i, j2)] = shifted[(i, j2)].clone();
                    }
                }
            }
            let kernel = stacked.kernel_basis();
            let x_coords = kernel
                .into_iter()
                .next()
                .ok_or_else(|| MatError::IdentityFailed("empty root space".to_string()))?;
            let x = alg.from_coords(&x_coords);
            // Normalize: k_cand = x − θ(x); the nonzero rational spectrum of
            // ad(k_cand) is {±μ, ±μ/2}; scale so that the extreme value is 1.
            let k_cand = &x - &alg.theta(&x);
            let minpoly = alg.ad_matrix(&k_cand)?.minimal_polynomial();
            let mu = rational_roots(&minpoly)
                .into_iter()
                .max_by(|a, b| a.abs().partial_cmp(&b.abs()).unwrap())
                .ok_or_else(|| MatError::IdentityFailed("no rational spectrum".to_string()))?;
            if mu.is_zero() {
                return Err(MatError::IdentityFailed("k candidate is ad-nilpotent".to_string()));
            }
            let scale = int::<Rat>(1) / mu.abs();
            let k_j = k_cand.scale(&scale);
            let z_j = h.commutator(&k_j);
            ks.push(k_j);
            zs.push(z_j);
        }
        // Fix signs deterministically: make the first winding of each z_j
        // positive on its lowest-index invariant plane (z_j e_a = +c e_b with
        // a < b for the first nonzero column a).
        for (k_j, z_j) in ks.iter_mut().zip(zs.iter_mut()) {
            let size = alg.size;
            'outer: for col in 0..size {
                for row in 0..size {
                    let v = &z_j[(row, col)];
                    if !v.is_zero() {
                        if (row > col) != v.is_positive() {
                            *k_j = -&*k_j;
                            *z_j = -&*z_j;
                        }
                        break 'outer;
                    }
                }
            }
        }
        // Boost realizations with two strongly orthogonal roots: when the
        // SO(q) side is a plain circle its orientation is fixed externally,
        // so order the generators to make z_1 wind positively on the
        // q-plane as well (on larger SO(q) factors the orientation follows
        // z_1 itself and no ordering is needed).
        if let Realization::SoPQ { p, q, label: SoLabel::Boost } = spec {
            if ks.len() == 2 && q == 2 && zs[0][(p + 1, p)].is_negative() {
                ks.swap(0, 1);
                zs.swap(0, 1);
                gammas.swap(0, 1);
            }
        }
        let e_vecs: Vec<Mat> = ks
            .iter()
            .map(|k_j| {
                // Re-extract e_j = g₁-component of k_j after sign fixing.
                decomp.project(k_j, 1).expect("k_j in algebra")
            })
            .collect();
        let r = gammas.len();
        let pairs_available = match spec {
            Realization::SlR { n, p } => 2 * p == n,
            Realization::SoPQ { p, q, label } => match label {
                SoLabel::Boost => true,
                SoLabel::HalfSum => p == q && p % 2 == 0,
            },
            Realization::SpR { .. } => true,
        };
        Ok(PairRealization {
            spec,
            algebra: alg,
            decomp,
            h,
            gammas,
            e_vecs,
            k: ks,
            z: zs,
            r,
            pairs_available,
        })
    }

    /// Signed sum k_σ = Σ σ_j k_j.
    pub fn k_signed(&self, signs: &[i8]) -> Mat {
        assert_eq!(signs.len(), self.r);
        let mut m = Mat::zeros(self.algebra.size, self.algebra.size);
        for (s, k_j) in signs.iter().zip(&self.k) {
            m = if *s >= 0 { &m + k_j } else { &m - k_j };
        }
        m
    }

    /// The representative k^j = k_1 + ⋯ + k_j − k_{j+1} − ⋯ − k_r.
    pub fn k_rep(&self, j: usize) -> Mat {
        let signs: Vec<i8> = (0..self.r).map(|i| if i < j { 1 } else { -1 }).collect();
        self.k_signed(&signs)
    }

    /// The rotation generator z_{h,k^j} = [h, k^j].
    pub fn z_rep(&self, j: usize) -> Mat {
        self.h.commutator(&self.k_rep(j))
    }

    /// Expected dimension of g₁ for the realization.
    pub fn expected_g1_dim(&self) -> usize {
        match self.spec {
            Realization::SlR { n, p } => p * (n - p),
            Realization::SoPQ { p, q, label } => match label {
                SoLabel::Boost => p + q - 2,
                SoLabel::HalfSum => p * (p - 1) / 2,
            },
            Realization::SpR { n } => n * (n + 1) / 2,
        }
    }
}

// ---------------------------------------------------------------------------
// E^x component labels (invertible-set components ↔ pair classes).
// ---------------------------------------------------------------------------

/// Signature (positives, negatives) of a symmetric rational matrix via
/// exact congruence diagonalization.
pub fn signature(sym: &Mat) -> (usize, usize) {
    let n = sym.nrows();
    assert_eq!(sym.ncols(), n);
    let mut m = sym.clone();
    let mut pos = 0;
    let mut neg = 0;
    let mut rows: Vec<usize> = (0..n).collect();
    while !rows.is_empty() {
        // Find a nonzero diagonal pivot among remaining rows.
        let pivot = rows.iter().copied().find(|&i| !m[(i, i)].is_zero());
        match pivot {
            Some(p) => {
                if m[(p, p)].is_positive() {
                    pos += 1;
                } else {
                    neg += 1;
                }
                let d = m[(p, p)].clone();
                let others: Vec<usize> = rows.iter().copied().filter(|&i| i != p).collect();
                for &i in &others {
                    let f = m[(i, p)].clone() / d.clone();
                    for &j in &others {
                        let v = m[(i, j)].clone() - f.clone() * m[(p, j)].clone();
                        m[(i, j)] = v;
                    }
                }
                rows.retain(|&i| i != p);
            }
            None => {
                // All remaining diagonal entries vanish; find an off-diagonal
                // hyperbolic pair (contributes one + and one −), or stop.
                let mut found = None;
                'search: for (ai, &i) in rows.iter().enumerate() {
                    for &j in &rows[ai + 1..] {
                        if !m[(i, j)].is_zero() {
                            found = Some((i, j));
                            break 'search;
                        }
                    }
                }
                match found {
                    Some((i, j)) => {
                        // x_i x_j form: substitute to diagonal ±.
                        pos += 1;
                        neg += 1;
                        let c = m[(i, j)].clone();
                        let others: Vec<usize> =
                            rows.iter().copied().filter(|&r| r != i && r != j).collect();
                        for &a in &others {
                            for &b in &others {
                                let v = m[(a, b)].clone()
                                    - (m[(a, i)].clone() * m[(j, b)].clone()
                                        + m[(a, j)].clone() * m[(i, b)].clone())
                                        / c.clone();
                                m[(a, b)] = v;
                            }
                        }
                        rows.retain(|&r| r != i && r != j);
                    }
                    None => break,
                }
            }
        }
    }
    (pos, neg)
}

/// Pfaffian of a skew-symmetric rational matrix (recursive expansion).
pub fn pfaffian(skew: &Mat) -> Rat {
    let n = skew.nrows();
    assert_eq!(skew.ncols(), n);
    if n % 2 == 1 {
        return Rat::zero();
    }
    if n == 0 {
        return int(1);
    }
    let mut acc = Rat::zero();
    let mut sign = int::<Rat>(1);
    for j in 1..n {
        let v = skew[(0, j)].clone();
        if !v.is_zero() {
            // Minor removing rows/cols 0 and j.
            let keep: Vec<usize> = (0..n).filter(|&i| i != 0 && i != j).collect();
            let minor = Mat::from_fn(n - 2, n - 2, |a, b| skew[(keep[a], keep[b])].clone());
            acc += sign.clone() * v * pfaffian(&minor);
        }
        sign = -sign;
    }
    acc
}

/// Component label of an invertible x ∈ g₁ in the invertible set E^×.
/// Distinct labels ↔ connected components ↔ pair classes.
pub fn component_label(real: &PairRealization, x: &Mat) -> Result<String, MatError> {
    if !real.decomp.in_part(x, 1)? {
        return Err(MatError::WrongComponent(1));
    }
    match real.spec {
        Realization::SlR { n, p } => {
            let q = n - p;
            if p != q {
                return Err(MatError::IdentityFailed(
                    "E^x components require p = q".to_string(),
                ));
            }
            let block = Mat::from_fn(p, p, |i, j| x[(i, p + j)].clone());
            let det = determinant(&block);
            Ok(if det.is_positive() {
                "det+".to_string()
            } else if det.is_negative() {
                "det-".to_string()
            } else {
                "singular".to_string()
            })
        }
        Realization::SpR { n } => {
            let block = Mat::from_fn(n, n, |i, j| x[(i, n + j)].clone());
            let (pos, neg) = signature(&block);
            Ok(format!("sig({pos},{neg})"))
        }
        Realization::SoPQ { p, q, label } => match label {
            SoLabel::Boost => {
                let (u, v) = so_boost_g1_vector(real, x);
                let qval: Rat = u.iter().map(|a| a.clone() * a.clone()).sum::<Rat>()
                    - v.iter().map(|a| a.clone() * a.clone()).sum::<Rat>();
                if qval.is_zero() {
                    return Ok("null".to_string());
                }
                if p == 2 && q >= 3 {
                    // Three components: spacelike, timelike future/past.
                    if qval.is_negative() {
                        Ok("spacelike".to_string())
                    } else if u[0].is_positive() {
                        Ok("timelike+".to_string())
                    } else {
                        Ok("timelike-".to_string())
                    }
                } else if p == 1 || q == 1 {
                    if u.len() + v.len() == 1 {
                        // One-dimensional g₁: two half-line components.
                        let c = u.first().unwrap_or_else(|| &v[0]);
                        Ok(if c.is_positive() { "sign+" } else { "sign-" }.to_string())
                    } else {
                        Ok("invertible".to_string())
                    }
                } else {
                    Ok(if qval.is_positive() { "Q+" } else { "Q-" }.to_string())
                }
            }
            SoLabel::HalfSum => {
                let block = Mat::from_fn(p, p, |i, j| x[(i, p + j)].clone());
                let pf = pfaffian(&block);
                Ok(if pf.is_positive() {
                    "pf+".to_string()
                } else if pf.is_negative() {
                    "pf-".to_string()
                } else {
                    "singular".to_string()
                })
            }
        },
    }
}

/// Extracts the (u, v) ∈ R^{p−1} × R^{q−1} coordinates of x ∈ g₁ for a
/// boost realization: the action of x on the first basis vector.
fn so_boost_g1_vector(real: &PairRealization, x: &Mat) -> (Vec<Rat>, Vec<Rat>) {
    let Realization::SoPQ { p, q, .. } = real.spec else {
        panic!("boost coordinates need an so(p,q) realization");
    };
    let u: Vec<Rat> = (1..p).map(|i| x[(i, 0)].clone()).collect();
    let v: Vec<Rat> = (1..q).map(|m| x[(p + m, 0)].clone()).collect();
    (u, v)
}

/// Exact determinant via elimination.
pub fn determinant(m: &Mat) -> Rat {
    let n = m.nrows();
    assert_eq!(m.ncols(), n);
    let mut a = m.clone();
    let mut det = int::<Rat>(1);
    for c in 0..n {
        let Some(pivot) = (c..n).find(|&i| !a[(i, c)].is_zero()) else {
            return Rat::zero();
        };
        if pivot != c {
            for j in 0..n {
                let tmp = a[(pivot, j)].clone();
                a[(pivot, j)] = a[(c, j)].clone();
                a[(c, j)] = tmp;
            }
            det = -det;
        }
        det *= a[(c, c)].clone();
        let inv = int::<Rat>(1) / a[(c, c)].clone();
        for i in c + 1..n {
            let f = a[(i, c)].clone() * inv.clone();
            if f.is_zero() {
                continue;
            }
            for j in c..n {
                let v = a[(i, j)].clone() - f.clone() * a[(c, j)].clone();
                a[(i, j)] = v;
            }
        }
    }
    det
}

// ---------------------------------------------------------------------------
// The pinned so(2,2) worked example.
// ---------------------------------------------------------------------------

/// Builds and verifies the pinned so(2,2) matrices: e₁, e₂, k₁, k₂, the
/// signed sums k^j, the rotation generators z_{h,k¹}, z_{h,k²}, z₁, and all
/// defining identities, comparing every named matrix entry by entry.
pub fn so22_report() -> Value {
    let alg = MatrixAlgebra::build(MatFamily::So(2, 2)).expect("so(2,2) builds");
    let q4 = |rows: [[i64; 4]; 4], den: i64| -> Mat {
        Mat::from_fn(4, 4, |i, j| frac(rows[i][j], den))
    };
    // Commuting boost Euler elements in the (e1,e4) and (e2,e3) planes.
    let h = q4(
        [[0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0]],
        1,
    );
    let k = q4(
        [[0, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 0]],
        1,
    );
    let e1 = q4(
        [[0, -1, 1, 0], [1, 0, 0, -1], [1, 0, 0, -1], [0, -1, 1, 0]],
        4,
    );
    let e2 = q4(
        [[0, 1, 1, 0], [-1, 0, 0, 1], [1, 0, 0, -1], [0, 1, 1, 0]],
        4,
    );
    let k1 = q4(
        [[0, 0, 1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, -1, 0, 0]],
        2,
    );
    let k2 = q4(
        [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]],
        2,
    );
    let h13 = q4(
        [[0, 0, 1, 0], [0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0]],
        1,
    );
    let h24 = q4(
        [[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 1, 0, 0]],
        1,
    );
    let z_hk2_expected = q4(
        [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]],
        1,
    );
    let z_hk1_expected = q4(
        [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
        1,
    );
    let z1_expected = q4(
        [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]],
        2,
    );

    let mut checks: Vec<(String, bool)> = Vec::new();
    let push = |checks: &mut Vec<(String, bool)>, name: &str, ok: bool| {
        checks.push((name.to_string(), ok));
    };

    push(&mut checks, "h,k,e1,e2 in so(2,2)", [&h, &k, &e1, &e2].iter().all(|m| alg.contains(m)));
    push(&mut checks, "h Euler", is_euler_matrix(&alg, &h).unwrap_or(false));
    push(&mut checks, "k Euler", is_euler_matrix(&alg, &k).unwrap_or(false));
    push(&mut checks, "[h,k] = 0", h.commutator(&k).is_zero());
    push(&mut checks, "[k,e1] = e1", k.commutator(&e1) == e1);
    push(&mut checks, "[k,e2] = -e2", k.commutator(&e2) == -&e2);
    let k1_built = &e1 + &e1.transpose();
    let k2_built = &e2 + &e2.transpose();
    push(&mut checks, "k1 = e1 + e1^T", k1_built == k1);
    push(&mut checks, "k2 = e2 + e2^T", k2_built == k2);
    let k_top = &k1 + &k2;
    let k_mid = &k1 - &k2;
    push(&mut checks, "k^2 = k1 + k2 = h_{1,3}", k_top == h13);
    push(&mut checks, "k^1 = k1 - k2 = -h_{2,4}", k_mid == -&h24);
    let z_hk2 = h.commutator(&k_top);
    let z_hk1 = h.commutator(&k_mid);
    push(&mut checks, "z_{h,k^2} rotation in (e3,e4)", z_hk2 == z_hk2_expected);
    push(&mut checks, "z_{h,k^1} rotation in (e1,e2)", z_hk1 == z_hk1_expected);
    let z1 = h.commutator(&k1);
    push(&mut checks, "z1 = [h,k1] = e1 - e1^T", z1 == (&e1 - &e1.transpose()));
    push(&mut checks, "z1 half-speed rotation in both planes", z1 == z1_expected);
    // sl(2) relations for the orthogonal pairs (h, k^1) and (h, k^2).
    let decomp = grade(&alg, &h).expect("h Euler");
    for (name, kk, zz) in [("k^2", &k_top, &z_hk2), ("k^1", &k_mid, &z_hk1)] {
        let ok = is_orthogonal_pair(&decomp, kk).unwrap_or(false)
            && zz.commutator(kk) == h
            && h.commutator(zz) == *kk;
        push(&mut checks, &format!("(h,{name}) orthogonal pair with sl2 relations"), ok);
    }
    // Quarter/half rotations on the pair plane.
    let quarter = exp_ad_on_plane(&z_hk2, -1, &h).map(|m| m == k_top).unwrap_or(false);
    let half = exp_ad_on_plane(&z_hk2, -2, &h).map(|m| m == -&h).unwrap_or(false);
    push(&mut checks, "exp(-pi/2 ad z) h = k^2", quarter);
    push(&mut checks, "exp(-pi ad z) h = -h", half);

    let all_pass = checks.iter().all(|(_, ok)| *ok);
    json!({
        "algebra": "so(2,2)",
        "matrices": {
            "h": mat_json(&h), "k": mat_json(&k),
            "e1": mat_json(&e1), "e2": mat_json(&e2),
            "k1": mat_json(&k1), "k2": mat_json(&k2),
            "k_rep_2": mat_json(&k_top), "k_rep_1": mat_json(&k_mid),
            "z_h_krep2": mat_json(&z_hk2), "z_h_krep1": mat_json(&z_hk1),
            "z1": mat_json(&z1),
        },
        "checks": checks.iter().map(|(n, ok)| json!({"name": n, "pass": ok})).collect::<Vec<_>>(),
        "pass": all_pass,
    })
}

/// JSON form of a matrix: array of arrays of rational strings.
pub fn mat_json(m: &Mat) -> Value {
    Value::Array(
        (0..m.nrows())
            .map(|i| crate::rootsys::vec_json(m.row(i)))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::SoLabel;

    fn sl(n: usize) -> MatrixAlgebra {
        MatrixAlgebra::build(MatFamily::Sl(n)).unwrap()
    }

    fn so(p: usize, q: usize) -> MatrixAlgebra {
        MatrixAlgebra::build(MatFamily::So(p, q)).unwrap()
    }

    fn sp(n: usize) -> MatrixAlgebra {
        MatrixAlgebra::build(MatFamily::Sp(n)).unwrap()
    }

    #[test]
    fn dimensions_and_closure() {
        assert_eq!(sl(2).dim(), 3);
        assert_eq!(so(2, 2).dim(), 6);
        assert_eq!(sp(2).dim(), 10);
        for alg in [sl(3), so(2, 3), sp(2)] {
            assert!(alg.bracket_closure_check(), "{:?}", alg.family);
        }
        assert!(MatrixAlgebra::build(MatFamily::Sl(1)).is_err());
        assert!(MatrixAlgebra::build(MatFamily::So(0, 3)).is_err());
    }

    #[test]
    fn coords_roundtrip() {
        for alg in [sl(4), so(3, 2), sp(3)] {
            for (i, b) in alg.basis.iter().enumerate() {
                let c = alg.coords(b).unwrap();
                assert_eq!(alg.from_coords(&c), *b, "basis {i}");
            }
            // Non-members rejected.
            let junk = Mat::identity(alg.size);
            assert!(alg.coords(&junk).is_none());
            // θ stays inside the algebra.
            for b in &alg.basis {
                assert!(alg.contains(&alg.theta(b)));
            }
        }
    }

    #[test]
    fn euler_matrices() {
        let alg = sl(2);
        let h0 = euler_matrix(&alg, EulerLabel::SlBlock(1)).unwrap();
        assert_eq!(h0, Mat::from_fn(2, 2, |i, j| if i == j {
            if i == 0 { frac(1, 2) } else { frac(-1, 2) }
        } else { Rat::zero() }));
        assert!(is_euler_matrix(&alg, &h0).unwrap());

        let alg = sl(4);
        let h = euler_matrix(&alg, EulerLabel::SlBlock(2)).unwrap();
        assert!(is_euler_matrix(&alg, &h).unwrap());
        assert!(euler_matrix(&alg, EulerLabel::SlBlock(4)).is_err());

        let alg = so(2, 2);
        let h = euler_matrix(&alg, EulerLabel::SoBoost).unwrap();
        assert!(is_euler_matrix(&alg, &h).unwrap());

        let alg = sp(2);
        let h = euler_matrix(&alg, EulerLabel::SpHalf).unwrap();
        assert!(is_euler_matrix(&alg, &h).unwrap());

        // Non-Euler: a generic nilpotent.
        let alg = sl(3);
        let n = e_mat(3, 0, 1);
        assert!(!is_euler_matrix(&alg, &n).unwrap());
    }

    #[test]
    fn grading_dims_and_laws() {
        let alg = sl(4);
        let h = euler_matrix(&alg, EulerLabel::SlBlock(2)).unwrap();
        let d = grade(&alg, &h).unwrap();
        assert_eq!(d.dims(), (4, 7, 4)); // M_2(R) on each side, g0 dim 7

        let alg = so(3, 4);
        let h = euler_matrix(&alg, EulerLabel::SoBoost).unwrap();
        let d = grade(&alg, &h).unwrap();
        assert_eq!(d.dims().2, 5); // R^{2,3}

        let alg = sp(3);
        let h = euler_matrix(&alg, EulerLabel::SpHalf).unwrap();
        let d = grade(&alg, &h).unwrap();
        assert_eq!(d.dims().2, 6); // Sym_3(R)

        // Grading law on basis pairs via the eigen-equation.
        let alg = sl(3);
        let h = euler_matrix(&alg, EulerLabel::SlBlock(1)).unwrap();
        let d = grade(&alg, &h).unwrap();
        for i in [-1i8, 0, 1] {
            for j in [-1i8, 0, 1] {
                for u in d.part_basis(i) {
                    for v in d.part_basis(j) {
                        let w = u.commutator(&v);
                        let s = i + j;
                        if s.abs() <= 1 {
                            assert_eq!(h.commutator(&w), w.scale(&int(s as i64)));
                        } else {
                            assert!(w.is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tau_properties() {
        let alg = sl(2);
        let h0 = euler_matrix(&alg, EulerLabel::SlBlock(1)).unwrap();
        let d = grade(&alg, &h0).unwrap();
        // τ flips the off-diagonal signs: τ(a b; c −a) = (a −b; −c −a).
        let x = Mat::from_int_rows(&[&[1, 2], &[3, -1]]);
        let tx = d.tau(&x).unwrap();
        assert_eq!(tx, Mat::from_int_rows(&[&[1, -2], &[-3, -1]]));
        // Involution + fixes h.
        assert_eq!(d.tau(&tx).unwrap(), x);
        assert_eq!(d.tau(&h0).unwrap(), h0);
        // Automorphism on basis pairs.
        for u in &alg.basis {
            for v in &alg.basis {
                let lhs = d.tau(&u.commutator(v)).unwrap();
                let rhs = d.tau(u).unwrap().commutator(&d.tau(v).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn orthogonal_pairs_sl2() {
        let alg = sl(2);
        let h0 = euler_matrix(&alg, EulerLabel::SlBlock(1)).unwrap();
        let d = grade(&alg, &h0).unwrap();
        let k0 = Mat::from_fn(2, 2, |i, j| if i != j { frac(1, 2) } else { Rat::zero() });
        assert!(is_orthogonal_pair(&d, &k0).unwrap());
        // k = ½(0 b; 1/b 0) with b = 2.
        let kb = Mat::from_fn(2, 2, |i, j| match (i, j) {
            (0, 1) => frac(2, 2),
            (1, 0) => frac(1, 4),
            _ => Rat::zero(),
        });
        assert!(is_orthogonal_pair(&d, &kb).unwrap());
        assert!(!is_orthogonal_pair(&d, &h0).unwrap());

        let pair = EulerPair::new(&d, &k0).unwrap();
        // z0 = ½(0 1; −1 0).
        let z0 = Mat::from_fn(2, 2, |i, j| match (i, j) {
            (0, 1) => frac(1, 2),
            (1, 0) => frac(-1, 2),
            _ => Rat::zero(),
        });
        assert_eq!(pair.z, z0);
        // Rotations: exp(−π/2 ad z0) h0 = k0, exp(∓π ad z0) h0 = −h0.
        assert_eq!(exp_ad_on_plane(&z0, -1, &h0).unwrap(), k0);
        assert_eq!(exp_ad_on_plane(&z0, -2, &h0).unwrap(), -&h0);
        assert_eq!(exp_ad_on_plane(&z0, 2, &h0).unwrap(), -&h0);
        assert_eq!(exp_ad_on_plane(&z0, 0, &h0).unwrap(), h0);
        // Precondition violation rejected.
        assert!(exp_ad_on_plane(&z0, 1, &z0).is_err());
    }

    #[test]
    fn sl2_triples() {
        let alg = sl(2);
        let h0 = euler_matrix(&alg, EulerLabel::SlBlock(1)).unwrap();
        let d = grade(&alg, &h0).unwrap();
        let x = e_mat(2, 0, 1);
        let t = sl2_triple_from_nilpotent(&d, &x).unwrap();
        assert_eq!(t.y, e_mat(2, 1, 0));
        let k0 = Mat::from_fn(2, 2, |i, j| if i != j { frac(1, 2) } else { Rat::zero() });
        assert_eq!(t.k, k0);
        // x = 0 fails.
        assert!(matches!(
            sl2_triple_from_nilpotent(&d, &Mat::zeros(2, 2)),
            Err(MatError::NotInvertible)
        ));
        // pair_roundtrip.
        assert!(pair_roundtrip(&d, &x).unwrap());
    }

    #[test]
    fn jordan_structure_sl4() {
        let real = PairRealization::build(Realization::SlR { n: 4, p: 2 }).unwrap();
        let jd = canonical_jordan(&real).unwrap();
        // Unit: e·x = x for all basis x of g1; commutativity.
        let g1 = real.decomp.part_basis(1);
        for x in &g1 {
            assert_eq!(jordan_product(&jd, &jd.e, x).unwrap(), *x);
            for y in &g1 {
                assert_eq!(
                    jordan_product(&jd, x, y).unwrap(),
                    jordan_product(&jd, y, x).unwrap()
                );
            }
        }
        // Unit idempotent.
        assert_eq!(jordan_product(&jd, &jd.e, &jd.e).unwrap(), jd.e);
        // Invertibility ⟺ triple succeeds, spot check.
        for x in &g1 {
            let inv = jordan_invertible(&real.decomp, x).unwrap();
            assert_eq!(inv, sl2_triple_from_nilpotent(&real.decomp, x).is_ok());
        }
        // Jordan product on M_2(R) ↔ symmetrized matrix product: check on e.
        assert!(jordan_invertible(&real.decomp, &jd.e).unwrap());
        // (ad x)^3 = 0 on g1.
        for x in &g1 {
            for b in &real.algebra.basis {
                let w = x.commutator(&x.commutator(&x.commutator(b)));
                assert!(w.is_zero());
            }
        }
    }

    #[test]
    fn realization_invariants() {
        for spec in [
            Realization::SlR { n: 2, p: 1 },
            Realization::SlR { n: 4, p: 2 },
            Realization::SlR { n: 3, p: 1 },
            Realization::SoPQ { p: 2, q: 3, label: SoLabel::Boost },
            Realization::SoPQ { p: 1, q: 4, label: SoLabel::Boost },
            Realization::SoPQ { p: 3, q: 3, label: SoLabel::HalfSum },
            Realization::SoPQ { p: 4, q: 4, label: SoLabel::HalfSum },
            Realization::SpR { n: 2 },
            Realization::SpR { n: 3 },
        ] {
            let real = PairRealization::build(spec).unwrap();
            assert_eq!(real.decomp.dims().2, real.expected_g1_dim(), "{spec:?}");
            // z_i pairwise commute and are skew (compact part).
            for zi in &real.z {
                assert_eq!(*zi, -&zi.transpose(), "{spec:?}");
                for zj in &real.z {
                    assert!(zi.commutator(zj).is_zero(), "{spec:?}");
                }
            }
            // k_j = e_j − θ(e_j).
            for (k_j, e_j) in real.k.iter().zip(&real.e_vecs) {
                assert_eq!(*k_j, &*e_j - &real.algebra.theta(e_j), "{spec:?}");
            }
            if real.pairs_available {
                for j in 0..=real.r {
                    let kj = real.k_rep(j);
                    let pair = EulerPair::new(&real.decomp, &kj).unwrap();
                    assert_eq!(pair.z, real.z_rep(j), "{spec:?}");
                }
            } else {
                // Non-symmetric h: k^r is not an Euler element.
                let kr = real.k_rep(real.r);
                assert!(!is_orthogonal_pair(&real.decomp, &kr).unwrap(), "{spec:?}");
            }
        }
    }

    #[test]
    fn sl2_realization_matches_pinned_constants() {
        let real = PairRealization::build(Realization::SlR { n: 2, p: 1 }).unwrap();
        assert_eq!(real.r, 1);
        let k0 = Mat::from_fn(2, 2, |i, j| if i != j { frac(1, 2) } else { Rat::zero() });
        let z0 = Mat::from_fn(2, 2, |i, j| match (i, j) {
            (0, 1) => frac(-1, 2),
            (1, 0) => frac(1, 2),
            _ => Rat::zero(),
        });
        // Sign convention: z normalized so its first winding is positive,
        // i.e. z e_1 = +½ e_2 — this is −z₀ in the classical normalization,
        // corresponding to k = −k₀ (both are orthogonal pairs).
        assert!(real.k[0] == k0 || real.k[0] == -&k0);
        assert!(real.z[0] == z0 || real.z[0] == -&z0);
        assert_eq!(real.z[0][(1, 0)], frac(1, 2));
    }

    #[test]
    fn component_labels_match_pair_classes() {
        // sl(4,R): 2 components by det sign.
        let real = PairRealization::build(Realization::SlR { n: 4, p: 2 }).unwrap();
        let x2 = real.decomp.project(&real.k_rep(2), 1).unwrap().scale(&int(2));
        let x1 = real.decomp.project(&real.k_rep(1), 1).unwrap().scale(&int(2));
        let l2 = component_label(&real, &x2).unwrap();
        let l1 = component_label(&real, &x1).unwrap();
        assert_ne!(l2, l1);
        assert_eq!(l2, "det+");
        assert_eq!(l1, "det-");

        // sp(4,R): signatures give r + 1 = 3 labels.
        let real = PairRealization::build(Realization::SpR { n: 2 }).unwrap();
        let mut labels: Vec<String> = (0..=2)
            .map(|j| {
                let x = real.decomp.project(&real.k_rep(j), 1).unwrap().scale(&int(2));
                component_label(&real, &x).unwrap()
            })
            .collect();
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), 3);

        // so(2,3): 3 components (timelike±, spacelike).
        let real = PairRealization::build(Realization::SoPQ {
            p: 2,
            q: 3,
            label: SoLabel::Boost,
        })
        .unwrap();
        let mut labels: Vec<String> = (0..=2)
            .map(|j| {
                let x = real.decomp.project(&real.k_rep(j), 1).unwrap().scale(&int(2));
                component_label(&real, &x).unwrap()
            })
            .collect();
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), 3, "{labels:?}");

        // so(4,4) half-sum: 2 components by Pfaffian sign.
        let real = PairRealization::build(Realization::SoPQ {
            p: 4,
            q: 4,
            label: SoLabel::HalfSum,
        })
        .unwrap();
        let mut labels: Vec<String> = (1..=2)
            .map(|j| {
                let x = real.decomp.project(&real.k_rep(j), 1).unwrap().scale(&int(2));
                component_label(&real, &x).unwrap()
            })
            .collect();
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), 2, "{labels:?}");
    }

    #[test]
    fn signature_and_pfaffian() {
        let m = Mat::from_int_rows(&[&[2, 0], &[0, -3]]);
        assert_eq!(signature(&m), (1, 1));
        let hyp = Mat::from_int_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(signature(&hyp), (1, 1));
        let pd = Mat::from_int_rows(&[&[2, 1], &[1, 2]]);
        assert_eq!(signature(&pd), (2, 0));
        let j = Mat::from_int_rows(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
        assert_eq!(pfaffian(&j), int(1));
        let j2 = Mat::from_int_rows(&[&[0, 1], &[-1, 0]]);
        assert_eq!(pfaffian(&j2), int(1));
        assert_eq!(determinant(&Mat::from_int_rows(&[&[1, 2], &[3, 4]])), int(-2));
    }

    #[test]
    fn so22_report_passes() {
        let report = so22_report();
        assert_eq!(report["pass"], serde_json::json!(true), "{report}");
    }
}
