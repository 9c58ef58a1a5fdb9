//! Exact dense linear algebra over a generic scalar field.
//!
//! All eliminations are plain Gaussian elimination over the field; with
//! rational scalars every division is exact, so ranks, kernels and solutions
//! are certified rather than approximated. The module also provides minimal
//! polynomials via incremental linear dependence of matrix powers, which the
//! spectral routines elsewhere in the crate rely on.

use crate::scalar::{int, Scalar};
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

/// A dense `rows x cols` matrix stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    /// The zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    /// The `n x n` identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix from integer rows.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    /// Builds a matrix entry-wise.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Number of rows.
    pub fn nrows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Column `j` as an owned vector.
    pub fn col(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// All entries, row-major.
    pub fn entries(&self) -> &[S] {
        &self.data
    }

    /// The matrix flattened to a vector, row-major.
    pub fn to_vec(&self) -> Vec<S> {
        self.data.clone()
    }

    /// Rebuilds a square matrix from a row-major flattening.
    pub fn from_flat(rows: usize, cols: usize, data: Vec<S>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    /// Whether every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &S) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    /// Trace of a square matrix.
    pub fn trace(&self) -> S {
        assert_eq!(self.rows, self.cols);
        let mut t = S::zero();
        for i in 0..self.rows {
            t += self[(i, i)].clone();
        }
        t
    }

    /// Matrix product.
    pub fn mul_mat(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = S::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc += self[(i, j)].clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// Commutator `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &self.mul_mat(other) - &other.mul_mat(self)
    }

    /// Row-reduces in place to reduced row echelon form; returns pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = S::one() / self[(r, c)].clone();
            for j in c..self.cols {
                let v = self[(r, j)].clone() * inv.clone();
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        let v = self[(i, j)].clone() - f.clone() * self[(r, j)].clone();
                        self[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Rank of the matrix.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// A basis of the (right) kernel `{ v : self v = 0 }`.
    pub fn kernel_basis(&self) -> Vec<Vec<S>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let mut basis = Vec::new();
        let mut pivot_of_col = vec![None; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            pivot_of_col[c] = Some(row);
        }
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![S::zero(); self.cols];
            v[free] = S::one();
            for (c, p) in pivot_of_col.iter().enumerate() {
                if let Some(row) = p {
                    v[c] = -m[(*row, free)].clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self x = b`, returning the unique solution if one exists.
    ///
    /// Returns `None` if the system is inconsistent or underdetermined.
    pub fn solve_unique(&self, b: &[S]) -> Option<Vec<S>> {
        let (x, kernel_dim) = self.solve_affine(b)?;
        if kernel_dim == 0 {
            Some(x)
        } else {
            None
        }
    }

    /// Solves `self x = b`, returning a particular solution together with the
    /// kernel dimension, or `None` if inconsistent.
    pub fn solve_affine(&self, b: &[S]) -> Option<(Vec<S>, usize)> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref_in_place();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![S::zero(); self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            x[c] = aug[(row, self.cols)].clone();
        }
        Some((x, self.cols - pivots.len()))
    }

    /// Exact inverse of a square matrix, if invertible.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = S::one();
        }
        let pivots = aug.rref_in_place();
        if pivots.iter().filter(|&&c| c < n).count() != n {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| aug[(i, n + j)].clone()))
    }

    /// Monic minimal polynomial of a square matrix, as coefficients
    /// `c[0] + c[1] t + ... + c[d] t^d` with `c[d] = 1`.
    pub fn minimal_polynomial(&self) -> Vec<S> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        // Echelonized flattened powers, each paired with the coefficient
        // vector expressing it in terms of I, M, M^2, ...
        let mut echelon: Vec<(Vec<S>, Vec<S>)> = Vec::new();
        let mut power = Self::identity(n);
        for k in 0..=n * n {
            let mut vec = power.to_vec();
            let mut combo = vec![S::zero(); k + 1];
            combo[k] = S::one();
            for (row, row_combo) in &echelon {
                let lead = row.iter().position(|x| !x.is_zero()).unwrap();
                if !vec[lead].is_zero() {
                    let f = vec[lead].clone() / row[lead].clone();
                    for (a, b) in vec.iter_mut().zip(row) {
                        *a -= f.clone() * b.clone();
                    }
                    for (i, c) in row_combo.iter().enumerate() {
                        combo[i] -= f.clone() * c.clone();
                    }
                }
            }
            if vec.iter().all(|x| x.is_zero()) {
                let lead = combo[k].clone();
                return combo.into_iter().map(|c| c / lead.clone()).collect();
            }
            echelon.push((vec, combo));
            power = power.mul_mat(self);
        }
        unreachable!("minimal polynomial has degree at most n");
    }
}

impl<S: Scalar> Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<S: Scalar> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<S: Scalar> Add for &Matrix<S> {
    type Output = Matrix<S>;
    fn add(self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<S: Scalar> Sub for &Matrix<S> {
    type Output = Matrix<S>;
    fn sub(self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<S: Scalar> Neg for &Matrix<S> {
    type Output = Matrix<S>;
    fn neg(self) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a.clone()).collect(),
        }
    }
}

impl<S: Scalar> Mul for &Matrix<S> {
    type Output = Matrix<S>;
    fn mul(self, rhs: &Matrix<S>) -> Matrix<S> {
        self.mul_mat(rhs)
    }
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Precomputed elimination data for solving `A x = b` repeatedly against a
/// fixed full-column-rank matrix `A` (e.g. expressing vectors in a basis).
pub struct Solver<S> {
    /// RREF of `A` (left block) with the accumulated row transform `T`
    /// (right block), so that `reduced = [E | T]` with `E = T A`.
    reduced: Matrix<S>,
    pivots: Vec<usize>,
    rows: usize,
    cols: usize,
}

impl<S: Scalar> Solver<S> {
    /// Factorizes `a`; returns `None` if `a` does not have full column rank.
    pub fn new(a: &Matrix<S>) -> Option<Self> {
        let (rows, cols) = (a.nrows(), a.ncols());
        let mut aug = Matrix::zeros(rows, cols + rows);
        for i in 0..rows {
            for j in 0..cols {
                aug[(i, j)] = a[(i, j)].clone();
            }
            aug[(i, cols + i)] = S::one();
        }
        let pivots: Vec<usize> = aug
            .rref_in_place()
            .into_iter()
            .filter(|&c| c < cols)
            .collect();
        if pivots.len() != cols {
            return None;
        }
        Some(Solver {
            reduced: aug,
            pivots,
            rows,
            cols,
        })
    }

    /// Solves `A x = b`; returns `None` if `b` is outside the column span.
    pub fn solve(&self, b: &[S]) -> Option<Vec<S>> {
        assert_eq!(b.len(), self.rows);
        let mut x = vec![S::zero(); self.cols];
        for row in 0..self.rows {
            let mut y = S::zero();
            for k in 0..self.rows {
                let t = &self.reduced[(row, self.cols + k)];
                if !t.is_zero() && !b[k].is_zero() {
                    y += t.clone() * b[k].clone();
                }
            }
            if row < self.pivots.len() {
                x[self.pivots[row]] = y;
            } else if !y.is_zero() {
                return None;
            }
        }
        Some(x)
    }
}

/// Dot product of two equal-length vectors.
pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    assert_eq!(a.len(), b.len());
    let mut acc = S::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x.clone() * y.clone();
        }
    }
    acc
}

/// `a + b` component-wise.
pub fn vadd<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

/// `a - b` component-wise.
pub fn vsub<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

/// `c * a` component-wise.
pub fn vscale<S: Scalar>(c: &S, a: &[S]) -> Vec<S> {
    a.iter().map(|x| c.clone() * x.clone()).collect()
}

/// `-a` component-wise.
pub fn vneg<S: Scalar>(a: &[S]) -> Vec<S> {
    a.iter().map(|x| -x.clone()).collect()
}

/// Whether every component is zero.
pub fn vis_zero<S: Scalar>(a: &[S]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Evaluates a polynomial (coefficients low to high) at a scalar.
pub fn poly_eval<S: Scalar>(coeffs: &[S], x: &S) -> S {
    let mut acc = S::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x.clone() + c.clone();
    }
    acc
}

/// All rational roots of a polynomial with scalar coefficients.
///
/// The coefficients are cleared to integers and candidate roots `p/q`
/// (`p | constant`, `q | leading`) are tested exactly. Roots are returned
/// sorted and de-duplicated. Panics if a coefficient does not fit in `i64`
/// after clearing (never happens for the small spectra handled here).
pub fn rational_roots<S: Scalar>(coeffs: &[S]) -> Vec<S> {
    let mut cs: Vec<S> = coeffs.to_vec();
    while cs.last().map(|c| c.is_zero()).unwrap_or(false) {
        cs.pop();
    }
    if cs.len() <= 1 {
        return Vec::new();
    }
    // Strip zero roots (factor out t^k).
    let mut roots = Vec::new();
    while cs.first().map(|c| c.is_zero()).unwrap_or(false) {
        cs.remove(0);
        if roots.is_empty() {
            roots.push(S::zero());
        }
    }
    // Clear denominators.
    let mut denom_lcm: i64 = 1;
    for c in &cs {
        let (_, d) = c.to_fraction().expect("coefficient too large");
        denom_lcm = lcm(denom_lcm, d);
    }
    let ints: Vec<i64> = cs
        .iter()
        .map(|c| {
            let (n, d) = c.to_fraction().unwrap();
            n.checked_mul(denom_lcm / d).expect("coefficient overflow")
        })
        .collect();
    let a0 = ints[0].unsigned_abs();
    let an = ints.last().unwrap().unsigned_abs();
    if a0 == 0 || an == 0 {
        return roots;
    }
    for p in divisors(a0) {
        for q in divisors(an) {
            for sign in [1i64, -1] {
                let cand = S::ratio(sign * p as i64, q as i64);
                if poly_eval(&cs, &cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;
    use crate::Rat;
    use num_traits::Zero;

    fn m(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_int_rows(rows)
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]);
        assert_eq!(a.rank(), 2);
        let ker = a.kernel_basis();
        assert_eq!(ker.len(), 1);
        for v in &ker {
            assert!(vis_zero(&a.mul_vec(v)));
        }
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let x = a.solve_unique(&[int_vec(&[3, 2])[0].clone(), int(1)]).unwrap();
        assert!(vis_zero(&vsub(&a.mul_vec(&x), &[int(3), int(1)])));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul_mat(&inv), Matrix::identity(2));
        let singular = m(&[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_none());
        assert!(singular.solve_unique(&[int(1), int(3)]).is_none());
    }

    fn int(v: i64) -> Rat {
        crate::scalar::int(v)
    }

    fn int_vec(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn solver_repeated() {
        // Columns span a 2-dim subspace of R^3.
        let a = m(&[&[1, 0], &[1, 1], &[0, 2]]);
        let s = Solver::new(&a).unwrap();
        let x = s.solve(&int_vec(&[1, 3, 4])).unwrap();
        assert_eq!(x, int_vec(&[1, 2]));
        assert!(s.solve(&int_vec(&[0, 0, 1])).is_none());
        // Rank-deficient matrix is rejected.
        assert!(Solver::new(&m(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn minimal_polynomial_examples() {
        // Rotation generator: minimal polynomial t^2 + 1.
        let j = m(&[&[0, -1], &[1, 0]]);
        assert_eq!(j.minimal_polynomial(), int_vec(&[1, 0, 1]));
        // Diagonalizable with repeated eigenvalue: (t-1)(t-2).
        let d = m(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 2]]);
        assert_eq!(d.minimal_polynomial(), int_vec(&[2, -3, 1]));
        // Nilpotent Jordan block: t^2.
        let n = m(&[&[0, 1], &[0, 0]]);
        assert_eq!(n.minimal_polynomial(), int_vec(&[0, 0, 1]));
    }

    #[test]
    fn rational_root_finding() {
        // (t - 1/2)(t + 2) t = t^3 + (3/2)t^2 - t... compute directly:
        let coeffs: Vec<Rat> = vec![
            int(0),
            -int(1),
            frac(3, 2),
            int(1),
        ];
        let roots = rational_roots(&coeffs);
        assert_eq!(roots, vec![int(-2), int(0), frac(1, 2)]);
        // Irrational spectrum yields only the rational part.
        let coeffs2: Vec<Rat> = vec![-int(2), int(0), int(1)]; // t^2 - 2
        assert!(rational_roots(&coeffs2).is_empty());
    }

    #[test]
    fn commutator_and_trace() {
        let a = m(&[&[0, 1], &[0, 0]]);
        let b = m(&[&[0, 0], &[1, 0]]);
        let c = a.commutator(&b);
        assert_eq!(c, m(&[&[1, 0], &[0, -1]]));
        assert!(c.trace().is_zero());
    }
}
