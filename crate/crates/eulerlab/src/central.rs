//! Central elements as winding classes and the Z₁ ⊆ Z₂ ⊆ Z₃ lattice.
//!
//! The maximal compact subgroup K of each realized family is modeled
//! structurally: sl(n,ℝ) → SO(n), so(p,q) → SO(p) × SO(q) (p-part first),
//! sp(2n,ℝ) → U(n). A one-parameter loop t ↦ exp(tTz) with z in the
//! compact part decomposes into exact rational-speed rotation planes
//! (kernels of z² + θ²·id); its homotopy data is the per-factor pair
//! (endpoint sign, doubled winding sum):
//!
//! * SO(2) and U(n) factors carry the signed winding sum in ℤ;
//! * SO(m≥3) factors carry the winding sum modulo 2 (π₁ ≅ ℤ₂), refined
//!   modulo 4 for paths ending at −1;
//! * paths are admitted when they close, or when every coordinate of a
//!   factor is rotated by an odd multiple of π (endpoint −1), which is how
//!   the central elements ζ_{h,k} of the sl₂-subgroups are represented.
//!
//! Plane orientations are fixed per entry by a torus frame: U(n) planes by
//! the standard complex structure J, SO factors by the first rotation
//! generator acting on each plane. On top of the classes the module builds
//! the subgroups Z₂ = ⟨class(z₁, 4π)⟩ and Z₃ = ⟨Z₂ ∪ {ζ_{h,k^j}}⟩, checks
//! |Z₃ : Z₂| ≤ 2, and provides the twisted wedge-complement bookkeeping
//! (complement cosets, quotient tests, difference chains).

use crate::catalog::{RealFormEntry, Realization};
use crate::linalg::{rational_roots, Matrix};
use crate::matrixlie::{MatError, MatFamily, PairRealization};
use crate::pairs::{is_symmetric_pair, pair_classes};
use crate::pi1::FgKind;
use crate::scalar::{int, Scalar};
use crate::{Mat, Rat};
use num_traits::{Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

/// Errors from the central-element layer.
#[derive(Debug, Error)]
pub enum CentralError {
    /// The entry has no matrix realization.
    #[error("no matrix realization available for {0}")]
    Unavailable(String),
    /// The Euler element is not symmetric; ζ classes are undefined.
    #[error("h is not symmetric for {0}; no orthogonal pairs exist")]
    NotSymmetric(String),
    /// The loop does not close (and does not end at a central −1).
    #[error("loop does not close: {0}")]
    NonClosed(String),
    /// The matrix is not in the compact part.
    #[error("matrix is not in the compact part: {0}")]
    NotInCompact(String),
    /// A target class lies outside Z₃.
    #[error("target class is not in Z3: {0}")]
    NotInZ3(String),
    /// Pair class index out of range.
    #[error("pair class index {0} exceeds rank r = {1}")]
    BadClassIndex(usize, usize),
    /// An internal consistency check failed.
    #[error("inconsistent central data: {0}")]
    Inconsistent(String),
    /// Matrix-layer failure.
    #[error(transparent)]
    Matrix(#[from] MatError),
}

/// Kind of one factor of the maximal compact subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorKind {
    /// SO(1): trivial.
    Trivial,
    /// SO(2): π₁ ≅ ℤ.
    SOTwo,
    /// SO(m), m ≥ 3: π₁ ≅ ℤ₂.
    SOBig(usize),
    /// U(n) inside sp(2n,ℝ): π₁ ≅ ℤ.
    U(usize),
}

/// One factor of K with its coordinate block.
#[derive(Debug, Clone)]
pub struct CompactFactor {
    /// Factor kind.
    pub kind: FactorKind,
    /// Display label ("SO(2)", "U(3)", …).
    pub label: String,
    /// First ambient coordinate of the block.
    pub start: usize,
    /// Block length.
    pub len: usize,
}

/// Structural model of K and π₁(K) for a matrix family.
#[derive(Debug, Clone)]
pub struct CompactModel {
    /// Ordered factors (p-part first for so(p,q)).
    pub factors: Vec<CompactFactor>,
    /// Display description of K.
    pub description: String,
}

fn so_factor(m: usize, start: usize) -> CompactFactor {
    let kind = match m {
        1 => FactorKind::Trivial,
        2 => FactorKind::SOTwo,
        _ => FactorKind::SOBig(m),
    };
    CompactFactor {
        kind,
        label: format!("SO({m})"),
        start,
        len: m,
    }
}

impl CompactModel {
    /// The model of K for a matrix family.
    pub fn for_family(family: MatFamily) -> Self {
        match family {
            MatFamily::Sl(n) => {
                let f = so_factor(n, 0);
                CompactModel {
                    description: f.label.clone(),
                    factors: vec![f],
                }
            }
            MatFamily::So(p, q) => {
                let fp = so_factor(p, 0);
                let fq = so_factor(q, p);
                CompactModel {
                    description: format!("{} x {}", fp.label, fq.label),
                    factors: vec![fp, fq],
                }
            }
            MatFamily::Sp(n) => CompactModel {
                factors: vec![CompactFactor {
                    kind: FactorKind::U(n),
                    label: format!("U({n})"),
                    start: 0,
                    len: 2 * n,
                }],
                description: format!("U({n})"),
            },
        }
    }

    /// Free and torsion ranks (a, b) of π₁(K) ≅ ℤ^a × ℤ₂^b.
    pub fn pi1_rank(&self) -> (usize, usize) {
        let mut a = 0;
        let mut b = 0;
        for f in &self.factors {
            match f.kind {
                FactorKind::SOTwo | FactorKind::U(_) => a += 1,
                FactorKind::SOBig(_) => b += 1,
                FactorKind::Trivial => {}
            }
        }
        (a, b)
    }

    /// Display label of π₁(K), e.g. "Z x Z2".
    pub fn pi1_label(&self) -> String {
        let parts: Vec<&str> = self
            .factors
            .iter()
            .filter_map(|f| match f.kind {
                FactorKind::SOTwo | FactorKind::U(_) => Some("Z"),
                FactorKind::SOBig(_) => Some("Z2"),
                FactorKind::Trivial => None,
            })
            .collect();
        if parts.is_empty() {
            "trivial".to_string()
        } else {
            parts.join(" x ")
        }
    }

    /// The identity class.
    pub fn identity(&self) -> LoopClass {
        LoopClass {
            factors: vec![
                FactorClass {
                    minus_endpoint: false,
                    double_winding: 0
                };
                self.factors.len()
            ],
        }
    }

    fn reduce(&self, idx: usize, u: i64) -> i64 {
        match self.factors[idx].kind {
            FactorKind::SOBig(_) => u.rem_euclid(4),
            FactorKind::Trivial => 0,
            _ => u,
        }
    }

    /// Group composition of two classes.
    pub fn compose(&self, a: &LoopClass, b: &LoopClass) -> LoopClass {
        LoopClass {
            factors: a
                .factors
                .iter()
                .zip(&b.factors)
                .enumerate()
                .map(|(i, (x, y))| FactorClass {
                    minus_endpoint: x.minus_endpoint != y.minus_endpoint,
                    double_winding: self.reduce(i, x.double_winding + y.double_winding),
                })
                .collect(),
        }
    }

    /// Group inverse.
    pub fn inverse(&self, a: &LoopClass) -> LoopClass {
        LoopClass {
            factors: a
                .factors
                .iter()
                .enumerate()
                .map(|(i, x)| FactorClass {
                    minus_endpoint: x.minus_endpoint,
                    double_winding: self.reduce(i, -x.double_winding),
                })
                .collect(),
        }
    }

    /// Coordinates and moduli for lattice arithmetic: per factor, an
    /// endpoint bit modulo 2 (where −1 endpoints are possible) and the
    /// doubled winding with modulus 0 (free) or 4 (SO(m≥3)).
    pub fn coords(&self, c: &LoopClass) -> (Vec<i64>, Vec<i64>) {
        let mut values = Vec::new();
        let mut moduli = Vec::new();
        for (f, v) in self.factors.iter().zip(&c.factors) {
            match f.kind {
                FactorKind::Trivial => {}
                FactorKind::SOTwo => {
                    values.push(v.double_winding);
                    moduli.push(0);
                }
                FactorKind::SOBig(_) => {
                    values.push(v.minus_endpoint as i64);
                    moduli.push(2);
                    values.push(v.double_winding);
                    moduli.push(4);
                }
                FactorKind::U(_) => {
                    values.push(v.minus_endpoint as i64);
                    moduli.push(2);
                    values.push(v.double_winding);
                    moduli.push(0);
                }
            }
        }
        (values, moduli)
    }
}

/// The value of a class on one compact factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorClass {
    /// Whether the path ends at −1 on this factor (false for closed loops).
    pub minus_endpoint: bool,
    /// Twice the signed winding sum (reduced mod 4 on SO(m≥3) factors).
    pub double_winding: i64,
}

/// An element of the path-class group over the center of K: closed loops
/// represent π₁(K); paths to a central −1 represent the ζ classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopClass {
    /// Per-factor values, aligned with the model's factor list.
    pub factors: Vec<FactorClass>,
}

impl LoopClass {
    /// Whether this is the identity class.
    pub fn is_identity(&self) -> bool {
        self.factors
            .iter()
            .all(|f| !f.minus_endpoint && f.double_winding == 0)
    }

    /// Compact display such as "(1, 0bar)" or "(1/2)".
    pub fn display(&self, model: &CompactModel) -> String {
        let parts: Vec<String> = model
            .factors
            .iter()
            .zip(&self.factors)
            .map(|(f, v)| match f.kind {
                FactorKind::Trivial => "0".to_string(),
                FactorKind::SOTwo | FactorKind::U(_) => {
                    if v.minus_endpoint {
                        format!("{}/2", v.double_winding)
                    } else {
                        (v.double_winding / 2).to_string()
                    }
                }
                FactorKind::SOBig(_) => {
                    if v.minus_endpoint {
                        format!("{}/2bar", v.double_winding.rem_euclid(4))
                    } else {
                        format!("{}bar", (v.double_winding / 2).rem_euclid(2))
                    }
                }
            })
            .collect();
        format!("({})", parts.join(", "))
    }

    /// JSON form.
    pub fn to_json(&self, model: &CompactModel) -> Value {
        json!({
            "display": self.display(model),
            "factors": model.factors.iter().zip(&self.factors).map(|(f, v)| json!({
                "group": f.label,
                "minus_endpoint": v.minus_endpoint,
                "double_winding": v.double_winding,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Parses a class from its display grammar: comma-separated factor tokens
/// "n", "nbar", "n/2", "n/2bar" (optionally in parentheses).
pub fn parse_loop_class(model: &CompactModel, s: &str) -> Result<LoopClass, CentralError> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    let tokens: Vec<&str> = inner.split(',').map(str::trim).collect();
    if tokens.len() != model.factors.len() {
        return Err(CentralError::Inconsistent(format!(
            "expected {} factor tokens, got {}",
            model.factors.len(),
            tokens.len()
        )));
    }
    let mut factors = Vec::new();
    for (i, (tok, f)) in tokens.iter().zip(&model.factors).enumerate() {
        let bar = tok.ends_with("bar");
        let body = tok.strip_suffix("bar").unwrap_or(tok);
        let half = body.ends_with("/2");
        let num = body.strip_suffix("/2").unwrap_or(body);
        let n: i64 = num
            .parse()
            .map_err(|_| CentralError::Inconsistent(format!("bad class token '{tok}'")))?;
        let is_big = matches!(f.kind, FactorKind::SOBig(_));
        if bar != is_big {
            return Err(CentralError::Inconsistent(format!(
                "token '{tok}' does not match factor {}",
                f.label
            )));
        }
        if matches!(f.kind, FactorKind::Trivial) && (n != 0 || half) {
            return Err(CentralError::Inconsistent(format!(
                "factor {} is trivial; token must be 0",
                f.label
            )));
        }
        let (minus, u) = if half { (true, n) } else { (false, 2 * n) };
        factors.push(FactorClass {
            minus_endpoint: minus,
            double_winding: model.reduce(i, u),
        });
    }
    Ok(LoopClass { factors })
}

// ---------------------------------------------------------------------------
// Torus frames and winding computation.
// ---------------------------------------------------------------------------

/// Per-factor plane orientations: a rational matrix J with J² = −1 on the
/// oriented planes and 0 elsewhere (in block-local coordinates).
#[derive(Debug, Clone)]
pub struct TorusFrame {
    j_loc: Vec<Matrix<Rat>>,
}

fn block_of(z: &Mat, f: &CompactFactor) -> Matrix<Rat> {
    Matrix::from_fn(f.len, f.len, |i, j| z[(f.start + i, f.start + j)].clone())
}

fn standard_j(f: &CompactFactor) -> Matrix<Rat> {
    match f.kind {
        FactorKind::SOTwo => {
            let mut j = Matrix::zeros(2, 2);
            j[(0, 1)] = int(-1);
            j[(1, 0)] = int(1);
            j
        }
        FactorKind::U(n) => {
            let mut j = Matrix::zeros(2 * n, 2 * n);
            for i in 0..n {
                j[(i, n + i)] = int(-1);
                j[(n + i, i)] = int(1);
            }
            j
        }
        _ => Matrix::zeros(f.len, f.len),
    }
}

fn vstack(a: &Matrix<Rat>, b: &Matrix<Rat>) -> Matrix<Rat> {
    assert_eq!(a.ncols(), b.ncols());
    Matrix::from_fn(a.nrows() + b.nrows(), a.ncols(), |i, j| {
        if i < a.nrows() {
            a[(i, j)].clone()
        } else {
            b[(i - a.nrows(), j)].clone()
        }
    })
}

fn rat_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer();
    let d = x.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(Rat::new(sn, sd))
    } else {
        None
    }
}

/// Positive rational rotation speeds of a skew block: the minimal
/// polynomial is t^ε · Π (t² + θ²); the θ are returned sorted.
fn rotation_speeds(m: &Matrix<Rat>) -> Result<Vec<Rat>, CentralError> {
    let p = m.minimal_polynomial();
    let eps = p.iter().position(|c| !c.is_zero()).unwrap_or(0);
    // Only every second coefficient above t^ε may be nonzero.
    let mut q = Vec::new();
    for (k, c) in p.iter().enumerate().skip(eps) {
        if (k - eps) % 2 == 0 {
            q.push(c.clone());
        } else if !c.is_zero() {
            return Err(CentralError::Inconsistent(
                "skew block has non-paired spectrum".to_string(),
            ));
        }
    }
    let mut speeds = Vec::new();
    for root in rational_roots(&q) {
        if root.is_negative() {
            let theta = rat_sqrt(&(-root)).ok_or_else(|| {
                CentralError::Inconsistent("irrational rotation speed".to_string())
            })?;
            speeds.push(theta);
        } else if !root.is_zero() {
            return Err(CentralError::Inconsistent(
                "skew block has positive squared speed".to_string(),
            ));
        }
    }
    speeds.sort();
    Ok(speeds)
}

fn kernel_dim(m: &Matrix<Rat>) -> usize {
    m.ncols() - m.rank()
}

impl TorusFrame {
    /// Builds the frame for a model from an ordered list of commuting
    /// generators in the compact part: U(n) and SO(2) planes carry the
    /// standard orientation; SO(m≥3) planes are oriented by the first
    /// generator moving them.
    pub fn build(model: &CompactModel, generators: &[Mat]) -> Result<Self, CentralError> {
        let mut j_loc = Vec::new();
        for f in &model.factors {
            let mut j = standard_j(f);
            if matches!(f.kind, FactorKind::SOBig(_)) {
                for z in generators {
                    let m = block_of(z, f);
                    if m.is_zero() {
                        continue;
                    }
                    for theta in rotation_speeds(&m)? {
                        let shifted = &m.mul_mat(&m) + &Matrix::identity(f.len).scale(&(theta.clone() * theta.clone()));
                        // Not-yet-oriented part of the θ-eigenspace.
                        let basis = vstack(&shifted, &j).kernel_basis();
                        if basis.is_empty() {
                            continue;
                        }
                        let b = Matrix::from_fn(f.len, basis.len(), |r, c| basis[c][r].clone());
                        let bt = b.transpose();
                        let gram_inv = bt.mul_mat(&b).inverse().ok_or_else(|| {
                            CentralError::Inconsistent("degenerate plane basis".to_string())
                        })?;
                        let proj = b.mul_mat(&gram_inv).mul_mat(&bt);
                        let inv_theta = int::<Rat>(1) / theta;
                        j = &j + &m.mul_mat(&proj).scale(&inv_theta);
                    }
                }
            }
            j_loc.push(j);
        }
        Ok(TorusFrame { j_loc })
    }
}

fn check_compact(model: &CompactModel, z: &Mat) -> Result<(), CentralError> {
    if *z != -&z.transpose() {
        return Err(CentralError::NotInCompact("matrix is not skew".to_string()));
    }
    // Off-diagonal factor blocks must vanish.
    for (a, fa) in model.factors.iter().enumerate() {
        for (b, fb) in model.factors.iter().enumerate() {
            if a == b {
                continue;
            }
            for i in 0..fa.len {
                for j in 0..fb.len {
                    if !z[(fa.start + i, fb.start + j)].is_zero() {
                        return Err(CentralError::NotInCompact(
                            "matrix couples distinct compact factors".to_string(),
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Winding class of the path t ↦ exp(t·T·z), T = `t2pi`·2π, with plane
/// orientations from `frame`. Closed loops yield π₁ classes; paths whose
/// factors all end at ±1 yield central ζ classes; anything else errors.
pub fn winding_class(
    model: &CompactModel,
    frame: &TorusFrame,
    z: &Mat,
    t2pi: &Rat,
) -> Result<LoopClass, CentralError> {
    check_compact(model, z)?;
    let mut factors = Vec::new();
    for (f, j) in model.factors.iter().zip(&frame.j_loc) {
        let m = block_of(z, f);
        if m.is_zero() {
            factors.push(FactorClass {
                minus_endpoint: false,
                double_winding: 0,
            });
            continue;
        }
        if m.mul_mat(j) != j.mul_mat(&m) {
            return Err(CentralError::Inconsistent(
                "rotation does not preserve the torus frame".to_string(),
            ));
        }
        let fixed_dim = kernel_dim(&m);
        let speeds = rotation_speeds(&m)?;
        let mut all_integral = true;
        let mut all_half_odd = true;
        let mut u = Rat::zero();
        let common_kernel = kernel_dim(&vstack(&m, j));
        for theta in &speeds {
            let theta2 = theta.clone() * theta.clone();
            let eig = &m.mul_mat(&m) + &Matrix::identity(f.len).scale(&theta2);
            let v_dim = kernel_dim(&eig);
            let d_plus =
                kernel_dim(&(&m - &j.scale(theta))) - common_kernel;
            let d_minus =
                kernel_dim(&(&m + &j.scale(theta))) - common_kernel;
            if d_plus + d_minus != v_dim {
                return Err(CentralError::Inconsistent(
                    "torus frame does not orient every rotation plane".to_string(),
                ));
            }
            let w = t2pi.clone() * theta.clone();
            let twice = w.clone() + w.clone();
            if !twice.is_integer() {
                return Err(CentralError::NonClosed(format!(
                    "plane winding {} is not half-integral",
                    crate::rootsys::scalar_string(&w)
                )));
            }
            if w.is_integer() {
                all_half_odd = false;
            } else {
                all_integral = false;
            }
            let diff = int::<Rat>(d_plus as i64 - d_minus as i64);
            u += w * diff;
        }
        let minus = if all_integral {
            false
        } else if all_half_odd && fixed_dim == 0 {
            true
        } else {
            return Err(CentralError::NonClosed(format!(
                "endpoint on factor {} is not central",
                f.label
            )));
        };
        if !u.is_integer() {
            return Err(CentralError::Inconsistent(
                "non-integral doubled winding".to_string(),
            ));
        }
        let (num, den) = u
            .to_fraction()
            .ok_or_else(|| CentralError::Inconsistent("winding overflow".to_string()))?;
        debug_assert_eq!(den, 1);
        factors.push(FactorClass {
            minus_endpoint: minus,
            double_winding: num,
        });
    }
    let mut class = LoopClass { factors };
    for (i, v) in class.factors.iter_mut().enumerate() {
        v.double_winding = model.reduce(i, v.double_winding);
    }
    Ok(class)
}

/// Winding class with a self-oriented frame built from `z` alone (standard
/// orientation on SO(2)/U(n); every SO(m≥3) plane oriented positively by
/// `z` itself).
pub fn winding_class_standalone(
    model: &CompactModel,
    z: &Mat,
    t2pi: &Rat,
) -> Result<LoopClass, CentralError> {
    let frame = TorusFrame::build(model, std::slice::from_ref(z))?;
    winding_class(model, &frame, z, t2pi)
}

// ---------------------------------------------------------------------------
// Integer lattice arithmetic in ℤ^a × ℤ₂^b × ℤ₄^c.
// ---------------------------------------------------------------------------

/// Whether `target` lies in the subgroup generated by `gens` (with the
/// moduli relations of the model), via integer column elimination.
fn lattice_member(model: &CompactModel, gens: &[LoopClass], target: &LoopClass) -> bool {
    let (tv, moduli) = model.coords(target);
    let rows = tv.len();
    let mut cols: Vec<Vec<i64>> = gens.iter().map(|g| model.coords(g).0).collect();
    for (i, &m) in moduli.iter().enumerate() {
        if m > 0 {
            let mut e = vec![0i64; rows];
            e[i] = m;
            cols.push(e);
        }
    }
    let mut b = tv;
    let mut active = cols;
    for r in 0..rows {
        // Eliminate row r across active columns down to one pivot.
        loop {
            let nz: Vec<usize> = (0..active.len()).filter(|&c| active[c][r] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let &cmin = nz
                .iter()
                .min_by_key(|&&c| active[c][r].unsigned_abs())
                .unwrap();
            for &c in &nz {
                if c == cmin {
                    continue;
                }
                let q = active[c][r] / active[cmin][r];
                if q != 0 {
                    for i in 0..rows {
                        active[c][i] -= q * active[cmin][i];
                    }
                }
            }
        }
        let pivot = (0..active.len()).find(|&c| active[c][r] != 0);
        match pivot {
            Some(c) => {
                if b[r] % active[c][r] != 0 {
                    return false;
                }
                let q = b[r] / active[c][r];
                for i in 0..rows {
                    b[i] -= q * active[c][i];
                }
                active.remove(c);
            }
            None => {
                if b[r] != 0 {
                    return false;
                }
            }
        }
    }
    b.iter().all(|&x| x == 0)
}

/// Whether two generator lists generate the same subgroup.
pub fn subgroup_equal(
    model: &CompactModel,
    a: &[LoopClass],
    b: &[LoopClass],
) -> bool {
    a.iter().all(|g| lattice_member(model, b, g)) && b.iter().all(|g| lattice_member(model, a, g))
}

// ---------------------------------------------------------------------------
// Entry-level data and the Z-lattice.
// ---------------------------------------------------------------------------

/// Realized central-element data for an entry: the matrix realization, the
/// compact model and the torus frame built from z_1, …, z_r.
pub struct CentralData {
    /// Catalog entry, when built from one.
    pub entry: Option<RealFormEntry>,
    /// Matrix realization.
    pub real: PairRealization,
    /// Compact model of K.
    pub model: CompactModel,
    /// Plane orientations.
    pub frame: TorusFrame,
}

impl CentralData {
    /// Builds the data for a catalog entry; refuses entries without a
    /// matrix realization (quaternionic, exceptional, complex).
    pub fn for_entry(entry: &RealFormEntry) -> Result<Self, CentralError> {
        let spec = entry
            .realization
            .ok_or_else(|| CentralError::Unavailable(entry.name.to_string()))?;
        let mut data = Self::from_realization(spec)?;
        data.entry = Some(entry.clone());
        Ok(data)
    }

    /// Builds the data directly from realization parameters.
    pub fn from_realization(spec: Realization) -> Result<Self, CentralError> {
        let real = PairRealization::build(spec)?;
        let model = CompactModel::for_family(real.algebra.family);
        let frame = TorusFrame::build(&model, &real.z)?;
        Ok(CentralData {
            entry: None,
            real,
            model,
            frame,
        })
    }

    /// Display name.
    pub fn name(&self) -> String {
        match &self.entry {
            Some(e) => e.name.to_string(),
            None => self.real.algebra.family.label(),
        }
    }

    /// ζ_{h,k^j} = class of t ↦ exp(2πt z_{h,k^j}).
    pub fn zeta(&self, j: usize) -> Result<LoopClass, CentralError> {
        if !self.real.pairs_available {
            return Err(CentralError::NotSymmetric(self.name()));
        }
        if j > self.real.r {
            return Err(CentralError::BadClassIndex(j, self.real.r));
        }
        winding_class(&self.model, &self.frame, &self.real.z_rep(j), &int(1))
    }

    /// class(z₁, T) with T = t·2π.
    pub fn z1_class(&self, t2pi: &Rat) -> Result<LoopClass, CentralError> {
        winding_class(&self.model, &self.frame, &self.real.z[0], t2pi)
    }

    /// Pair class indices (the representatives k^j used for ζ generators).
    pub fn class_indices(&self) -> Vec<usize> {
        match &self.entry {
            Some(e) => pair_classes(e).into_iter().map(|c| c.j).collect(),
            None => (0..=self.real.r).collect(),
        }
    }

    /// Base pair class index for chains and cosets. The coset ζ_{h,k}·Z₂
    /// is independent of the chosen class, so the first one serves.
    pub fn base_class(&self) -> Result<usize, CentralError> {
        if !self.real.pairs_available {
            return Err(CentralError::NotSymmetric(self.name()));
        }
        self.class_indices()
            .into_iter()
            .next()
            .ok_or_else(|| CentralError::NotSymmetric(self.name()))
    }

    /// First symmetric pair class, if any (used to exhibit a reflecting
    /// element; for catalog entries only).
    pub fn symmetric_class(&self) -> Option<usize> {
        let e = self.entry.as_ref()?;
        pair_classes(e)
            .into_iter()
            .find(|c| is_symmetric_pair(e, c))
            .map(|c| c.j)
    }
}

/// The lattice Z₁ ⊆ Z₂ ⊆ Z₃ as generator lists over the model. Z₁ (the
/// image of the center) is recorded only where stated and is otherwise the
/// trivial subgroup.
pub struct ZLattice {
    /// Compact model.
    pub model: CompactModel,
    /// Generators of Z₁ (empty: trivial).
    pub z1: Vec<LoopClass>,
    /// Generators of Z₂.
    pub z2: Vec<LoopClass>,
    /// Generators of Z₃.
    pub z3: Vec<LoopClass>,
}

impl ZLattice {
    /// Membership in Z₂.
    pub fn z2_contains(&self, c: &LoopClass) -> bool {
        lattice_member(&self.model, &self.z2, c)
    }

    /// Membership in Z₃.
    pub fn z3_contains(&self, c: &LoopClass) -> bool {
        lattice_member(&self.model, &self.z3, c)
    }

    /// Abstract isomorphism type of Z₂ (cyclic by construction).
    pub fn z2_iso(&self) -> FgKind {
        let nontrivial: Vec<&LoopClass> =
            self.z2.iter().filter(|g| !g.is_identity()).collect();
        if nontrivial.is_empty() {
            return FgKind::Trivial;
        }
        let has_free = nontrivial.iter().any(|g| {
            self.model
                .factors
                .iter()
                .zip(&g.factors)
                .any(|(f, v)| {
                    matches!(f.kind, FactorKind::SOTwo | FactorKind::U(_))
                        && v.double_winding != 0
                })
        });
        if has_free {
            FgKind::Z
        } else {
            FgKind::Z2
        }
    }

    /// Index of Z₂ in Z₃ (1 or 2; errors if the bound |Z₃:Z₂| ≤ 2 fails).
    pub fn index_z3_z2(&self) -> Result<usize, CentralError> {
        let outside: Vec<&LoopClass> = self
            .z3
            .iter()
            .filter(|g| !self.z2_contains(g))
            .collect();
        if outside.is_empty() {
            return Ok(1);
        }
        for g in &outside {
            let sq = self.model.compose(g, g);
            if !self.z2_contains(&sq) {
                return Err(CentralError::Inconsistent(
                    "a Z3 generator has square outside Z2".to_string(),
                ));
            }
        }
        for g in &outside {
            for g2 in &outside {
                let diff = self.model.compose(g, &self.model.inverse(g2));
                if !self.z2_contains(&diff) {
                    return Err(CentralError::Inconsistent(
                        "Z3 generators fall in distinct nontrivial cosets".to_string(),
                    ));
                }
            }
        }
        Ok(2)
    }

    /// JSON form.
    pub fn to_json(&self) -> Value {
        let gens = |v: &Vec<LoopClass>| -> Value {
            Value::Array(v.iter().map(|c| c.to_json(&self.model)).collect())
        };
        json!({
            "pi1_K": self.model.pi1_label(),
            "Z1": if self.z1.is_empty() { Value::Null } else { gens(&self.z1) },
            "Z2_generators": gens(&self.z2),
            "Z3_generators": gens(&self.z3),
        })
    }
}

/// Z₂ = ⟨class(z₁, 4π)⟩ (the partial lattice: Z₃ is set equal to Z₂).
pub fn z2_subgroup(data: &CentralData) -> Result<ZLattice, CentralError> {
    let gen = data.z1_class(&int(2))?;
    Ok(ZLattice {
        model: data.model.clone(),
        z1: Vec::new(),
        z2: vec![gen.clone()],
        z3: vec![gen],
    })
}

/// Z₃ = ⟨Z₂ ∪ {ζ_{h,k^j}}⟩; for non-symmetric h, Z₃ = Z₂ by definition.
pub fn z3_subgroup(data: &CentralData) -> Result<ZLattice, CentralError> {
    let mut lat = z2_subgroup(data)?;
    if data.real.pairs_available {
        for j in data.class_indices() {
            lat.z3.push(data.zeta(j)?);
        }
    }
    Ok(lat)
}

/// ζ_{h,k^j} ζ_{h,k^m}^{−1}; always lies in Z₂.
pub fn zeta_difference(
    data: &CentralData,
    j: usize,
    m: usize,
) -> Result<LoopClass, CentralError> {
    let a = data.zeta(j)?;
    let b = data.zeta(m)?;
    Ok(data.model.compose(&a, &data.model.inverse(&b)))
}

/// Whether a twisted wedge complement exists: exactly when h is symmetric.
pub fn complement_exists(entry: &RealFormEntry) -> bool {
    entry.is_symmetric_euler()
}

/// The complement coset ζ·Z₂ (representative and Z₂ generators);
/// independent of the chosen pair class.
pub fn complement_coset(
    data: &CentralData,
) -> Result<(LoopClass, Vec<LoopClass>), CentralError> {
    let base = data.base_class()?;
    let rep = data.zeta(base)?;
    let lat = z2_subgroup(data)?;
    Ok((rep, lat.z2))
}

/// Whether the untwisted complement lies in the orbit for the quotient by
/// Γ = ⟨quotient_generators⟩: true iff Z₃·Γ = Z₂·Γ.
pub fn untwisted_in_orbit(
    data: &CentralData,
    quotient_generators: &[LoopClass],
) -> Result<bool, CentralError> {
    let lat = z3_subgroup(data)?;
    let mut ambient = lat.z2.clone();
    ambient.extend(quotient_generators.iter().cloned());
    Ok(lat
        .z3
        .iter()
        .all(|g| lattice_member(&data.model, &ambient, g)))
}

fn solve_cyclic(
    model: &CompactModel,
    gen: &LoopClass,
    d: &LoopClass,
) -> Option<i64> {
    if d.is_identity() {
        return Some(0);
    }
    // Free coordinate ratio, if any.
    for (f, (gv, dv)) in model
        .factors
        .iter()
        .zip(gen.factors.iter().zip(&d.factors))
    {
        if matches!(f.kind, FactorKind::SOTwo | FactorKind::U(_)) && gv.double_winding != 0 {
            if dv.double_winding % gv.double_winding != 0 {
                return None;
            }
            let n = dv.double_winding / gv.double_winding;
            return verify_multiple(model, gen, d, n).then_some(n);
        }
    }
    // Torsion generator: order at most 2.
    for n in [1i64, 0] {
        if verify_multiple(model, gen, d, n) {
            return Some(n);
        }
    }
    None
}

fn verify_multiple(model: &CompactModel, gen: &LoopClass, d: &LoopClass, n: i64) -> bool {
    let step = if n >= 0 {
        gen.clone()
    } else {
        model.inverse(gen)
    };
    let mut acc = model.identity();
    for _ in 0..n.unsigned_abs() {
        acc = model.compose(&acc, &step);
    }
    acc == *d
}

/// Expresses `target` as base-ζ times a chain of pair-class differences:
/// returns the list of (j, m) steps whose ζ-differences multiply to
/// target·ζ^{−1}. Errors if the target lies outside Z₃.
pub fn twist_chain(
    data: &CentralData,
    target: &LoopClass,
) -> Result<Vec<(usize, usize)>, CentralError> {
    let lat = z3_subgroup(data)?;
    if !lat.z3_contains(target) {
        return Err(CentralError::NotInZ3(target.display(&data.model)));
    }
    let base = data.base_class()?;
    let zeta_base = data.zeta(base)?;
    let d = data
        .model
        .compose(target, &data.model.inverse(&zeta_base));
    if !lat.z2_contains(&d) {
        return Err(CentralError::NotInZ3(format!(
            "{} is in a different Z2 coset than the base",
            target.display(&data.model)
        )));
    }
    if d.is_identity() {
        return Ok(Vec::new());
    }
    let gen = lat.z2[0].clone();
    let n = solve_cyclic(&data.model, &gen, &d).ok_or_else(|| {
        CentralError::Inconsistent("difference is not a power of the Z2 generator".to_string())
    })?;
    // Find an ordered pair of classes whose ζ-difference is the generator.
    let indices = data.class_indices();
    let mut step = None;
    'outer: for &a in &indices {
        for &b in &indices {
            if a == b {
                continue;
            }
            if zeta_difference(data, a, b)? == gen {
                step = Some((a, b));
                break 'outer;
            }
        }
    }
    let (a, b) = step.ok_or_else(|| {
        CentralError::Inconsistent("no class pair realizes the Z2 generator".to_string())
    })?;
    let step = if n >= 0 { (a, b) } else { (b, a) };
    Ok(vec![step; n.unsigned_abs() as usize])
}

// ---------------------------------------------------------------------------
// Wedge-point bookkeeping.
// ---------------------------------------------------------------------------

/// Which Euler element a wedge point sits over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// The base wedge (+h, τ_h).
    PlusH,
    /// A complement (−h, α τ_h).
    MinusH,
}

/// The (±h, twist) datum of a wedge point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgePoint {
    /// Side of the wedge.
    pub side: Side,
    /// Central twist α as a loop class.
    pub twist: LoopClass,
}

/// Duality W ↦ W': flips the side, keeps the twist. An involution.
pub fn wedge_dual(w: &WedgePoint) -> WedgePoint {
    WedgePoint {
        side: match w.side {
            Side::PlusH => Side::MinusH,
            Side::MinusH => Side::PlusH,
        },
        twist: w.twist.clone(),
    }
}

/// The twisted adjoint action of a central class g on a wedge point: the
/// twist moves by δ_h(g) = g·τ_h(g)^{−1}, which doubles central classes.
pub fn twisted_act(model: &CompactModel, g: &LoopClass, w: &WedgePoint) -> WedgePoint {
    WedgePoint {
        side: w.side,
        twist: model.compose(&w.twist, &model.compose(g, g)),
    }
}
