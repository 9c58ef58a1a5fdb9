//! Curated catalog of simple real Lie algebras carrying Euler elements.
//!
//! Each [`RealFormEntry`] records a classical table row: the restricted root
//! system Σ(g,a), the Euler element h as a dual-basis label, restricted-root
//! multiplicities, the type tag (Complex / Cayley / Split / Non-split), the
//! type of Σ(g*,c) governing pair classification, the long strongly
//! orthogonal roots Γ = {γ_1, …, γ_r} in Σ_1 = {α : α(h) = 1}, and the
//! expected fundamental group of the adjoint orbit. The catalog is
//! compiled-in data with a JSON export; every entry is validated on load
//! (γ_j(h) = 1, pairwise strong orthogonality, |Γ| = r, type consistency).
//!
//! Entries for quaternionic and exceptional algebras are flagged
//! `classification_only`; the matrix modules skip them.

use crate::linalg::{dot, vadd, vsub};
use crate::pi1::FgKind;
use crate::rootsys::{vec_json, Family, RootSystemType};
use crate::scalar::int;
use crate::{RVec, Rat, RootSys};
use num_traits::Zero;
use serde_json::{json, Value};
use thiserror::Error;

/// Catalog data-integrity errors.
#[derive(Debug, Error)]
pub enum CatalogError {
    /// A stored γ fails a defining property.
    #[error("entry {entry}: invalid strongly orthogonal system: {reason}")]
    InvalidGamma {
        /// Entry slug.
        entry: String,
        /// Property that failed.
        reason: String,
    },
    /// Structural inconsistency between stored fields.
    #[error("entry {entry}: inconsistent data: {reason}")]
    Inconsistent {
        /// Entry slug.
        entry: String,
        /// Property that failed.
        reason: String,
    },
}

/// The four classes of pairs (g, h) governing π₁ of the adjoint orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum TypeTag {
    /// g is a complex simple Lie algebra.
    Complex,
    /// Hermitian tube type (Cayley type).
    Cayley,
    /// Split type.
    Split,
    /// Non-split type.
    NonSplit,
}

impl TypeTag {
    /// Expected fundamental group of the adjoint orbit for this type.
    pub fn pi1(self) -> FgKind {
        match self {
            TypeTag::Cayley => FgKind::Z,
            TypeTag::Split => FgKind::Z2,
            TypeTag::Complex | TypeTag::NonSplit => FgKind::Trivial,
        }
    }
}

/// Type of Σ(g*,c): controls orthogonal-pair classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum SigmaStar {
    /// Type A of the given rank (A_0 means an empty system).
    A(usize),
    /// Type C of the given rank.
    C(usize),
    /// Type D of the given rank (D_1 means an empty system, D_2 = A_1⊕A_1).
    D(usize),
}

impl SigmaStar {
    /// Human-readable label such as "A_2" or "D_2".
    pub fn label(&self) -> String {
        match self {
            SigmaStar::A(k) => format!("A_{k}"),
            SigmaStar::C(k) => format!("C_{k}"),
            SigmaStar::D(k) => format!("D_{k}"),
        }
    }
}

/// Restricted-root multiplicities, constant on Weyl orbits (length classes).
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Multiplicity {
    /// All roots share one multiplicity.
    All(u32),
    /// Two length classes with separate multiplicities.
    ByLength {
        /// Multiplicity of the maximal-length roots.
        long: u32,
        /// Multiplicity of the shorter roots.
        short: u32,
    },
}

/// Which Euler element a matrix realization of so(p,q) uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum SoLabel {
    /// The boost h_{1,p+1} (dual-basis element h_1).
    Boost,
    /// The half-sum of all boosts (dual-basis element h_n of D_n, p = q = n).
    HalfSum,
}

/// Concrete rational-matrix realization attached to an entry, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Realization {
    /// sl(n,R) with h = diag(q·1_p, −p·1_q)/n, q = n − p.
    SlR {
        /// Matrix size.
        n: usize,
        /// Size of the positive diagonal block.
        p: usize,
    },
    /// so(p,q) with the indicated Euler element.
    SoPQ {
        /// Signature (+) size.
        p: usize,
        /// Signature (−) size.
        q: usize,
        /// Which Euler element.
        label: SoLabel,
    },
    /// sp(2n,R) with h = ½ diag(1_n, −1_n).
    SpR {
        /// Half the matrix size.
        n: usize,
    },
}

/// One catalog row: a simple real Lie algebra with a chosen Euler element.
#[derive(Debug, Clone)]
pub struct RealFormEntry {
    /// Flat slug used by the CLI (e.g. "sl4R", "soP1Q1_p2_q3").
    pub name: &'static str,
    /// Human-readable algebra name (e.g. "sl(4,R)").
    pub display: &'static str,
    /// Type tag.
    pub type_tag: TypeTag,
    /// Type of the restricted root system Σ(g,a).
    pub sigma_ga_type: RootSystemType,
    /// 1-based dual-basis index of the Euler element h.
    pub euler_label: usize,
    /// Restricted-root multiplicities (`None` = unknown; Wiggerman refuses).
    pub multiplicity: Option<Multiplicity>,
    /// Type of Σ(g*,c).
    pub sigma_star: SigmaStar,
    /// Rank r of Σ(g,c) (type C_r); equals |Γ|.
    pub rank_r: usize,
    /// Long strongly orthogonal roots γ_1, …, γ_r in Σ_1.
    pub gamma: Vec<RVec>,
    /// Description of g₁(h) as a module (table column).
    pub g1_description: &'static str,
    /// Real dimension of g₁(h).
    pub g1_dimension: usize,
    /// Expected π₁ of the adjoint orbit.
    pub pi1_expected: FgKind,
    /// Whether the entry is handled at classification level only (no matrix
    /// realization: quaternionic and exceptional families).
    pub classification_only: bool,
    /// Matrix realization, when available.
    pub realization: Option<Realization>,
}

impl RealFormEntry {
    /// Builds the restricted root system Σ(g,a).
    pub fn sigma_ga(&self) -> RootSys {
        RootSys::build(self.sigma_ga_type).expect("catalog rank validated")
    }

    /// The Euler element h as a coweight of Σ(g,a).
    pub fn euler_coweight(&self, rs: &RootSys) -> RVec {
        rs.dual_basis()[self.euler_label - 1].clone()
    }

    /// Σ_1 = {α ∈ Σ(g,a) : α(h) = 1}.
    pub fn sigma_one(&self, rs: &RootSys) -> Vec<RVec> {
        let h = self.euler_coweight(rs);
        rs.roots()
            .iter()
            .filter(|alpha| rs.evaluate(alpha, &h) == int::<Rat>(1))
            .cloned()
            .collect()
    }

    /// Returns Γ after validating every defining property against Σ(g,a):
    /// membership, γ_j(h) = 1, maximal length within Σ_1, pairwise strong
    /// orthogonality, and |Γ| = r.
    pub fn strongly_orthogonal_roots(&self) -> Result<Vec<RVec>, CatalogError> {
        let rs = self.sigma_ga();
        let err = |reason: String| CatalogError::InvalidGamma {
            entry: self.name.to_string(),
            reason,
        };
        if self.gamma.len() != self.rank_r {
            return Err(err(format!(
                "|gamma| = {} but rank r = {}",
                self.gamma.len(),
                self.rank_r
            )));
        }
        let h = self.euler_coweight(&rs);
        let sigma_one = self.sigma_one(&rs);
        let max_norm = sigma_one
            .iter()
            .map(|a| dot(a, a))
            .max_by(|a, b| a.partial_cmp(b).unwrap())
            .expect("sigma_one nonempty");
        for (j, g) in self.gamma.iter().enumerate() {
            if !rs.contains(g) {
                return Err(err(format!("gamma_{} is not a root", j + 1)));
            }
            if rs.evaluate(g, &h) != int::<Rat>(1) {
                return Err(err(format!("gamma_{}(h) != 1", j + 1)));
            }
            if dot(g, g) != max_norm {
                return Err(err(format!("gamma_{} is not long in Sigma_1", j + 1)));
            }
        }
        for i in 0..self.gamma.len() {
            for j in 0..i {
                let sum = vadd(&self.gamma[i], &self.gamma[j]);
                let diff = vsub(&self.gamma[i], &self.gamma[j]);
                if rs.contains(&sum) || rs.contains(&diff) {
                    return Err(err(format!(
                        "gamma_{} and gamma_{} are not strongly orthogonal",
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(self.gamma.clone())
    }

    /// Multiplicity of a restricted root, by length class.
    pub fn multiplicity_of(&self, rs: &RootSys, root: &[Rat]) -> Option<u32> {
        if !rs.contains(root) {
            return None;
        }
        let mult = self.multiplicity?;
        match mult {
            Multiplicity::All(m) => Some(m),
            Multiplicity::ByLength { long, short } => {
                let max_norm = rs
                    .roots()
                    .iter()
                    .map(|a| dot(a, a))
                    .max_by(|a, b| a.partial_cmp(b).unwrap())
                    .unwrap();
                Some(if dot(root, root) == max_norm { long } else { short })
            }
        }
    }

    /// Multiplicities of the simple roots, in Bourbaki order.
    pub fn simple_multiplicities(&self, rs: &RootSys) -> Option<Vec<u32>> {
        rs.simple_roots()
            .iter()
            .map(|a| self.multiplicity_of(rs, a))
            .collect()
    }

    /// Validates all load-time invariants.
    pub fn validate(&self) -> Result<(), CatalogError> {
        let inconsistent = |reason: String| CatalogError::Inconsistent {
            entry: self.name.to_string(),
            reason,
        };
        let rs = self.sigma_ga();
        let h = self.euler_coweight(&rs);
        if !crate::euler::is_euler(&rs, &h) {
            return Err(inconsistent(format!("h_{} is not Euler", self.euler_label)));
        }
        self.strongly_orthogonal_roots()?;
        let star_ok = matches!(
            (self.type_tag, self.sigma_star),
            (TypeTag::Complex | TypeTag::NonSplit, SigmaStar::C(_))
                | (TypeTag::Cayley, SigmaStar::A(_))
                | (TypeTag::Split, SigmaStar::D(_))
        );
        if !star_ok {
            return Err(inconsistent(format!(
                "sigma_star {:?} inconsistent with type tag {:?}",
                self.sigma_star, self.type_tag
            )));
        }
        let star_rank_ok = match self.sigma_star {
            SigmaStar::A(k) => k + 1 == self.rank_r,
            SigmaStar::C(k) | SigmaStar::D(k) => k == self.rank_r,
        };
        if !star_rank_ok {
            return Err(inconsistent("sigma_star rank inconsistent with r".into()));
        }
        if self.pi1_expected != self.type_tag.pi1() {
            return Err(inconsistent("pi1_expected inconsistent with type tag".into()));
        }
        if self.classification_only && self.realization.is_some() {
            return Err(inconsistent("classification-only entry has realization".into()));
        }
        Ok(())
    }

    /// Whether the Euler element of this entry is symmetric (−h ∈ W·h).
    pub fn is_symmetric_euler(&self) -> bool {
        let rs = self.sigma_ga();
        let h = crate::euler::EulerElement {
            coweight: self.euler_coweight(&rs),
            label: Some(self.euler_label),
        };
        crate::euler::is_symmetric(&rs, &h)
    }

    /// JSON form of the entry.
    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "display": self.display,
            "type_tag": self.type_tag,
            "sigma_ga": self.sigma_ga_type.label(),
            "euler_label": self.euler_label,
            "multiplicity": self.multiplicity,
            "sigma_star": self.sigma_star.label(),
            "rank_r": self.rank_r,
            "gamma": self.gamma.iter().map(|g| vec_json(g)).collect::<Vec<_>>(),
            "g1": {"description": self.g1_description, "dimension": self.g1_dimension},
            "pi1_expected": self.pi1_expected,
            "classification_only": self.classification_only,
            "realization": self.realization,
            "symmetric": self.is_symmetric_euler(),
        })
    }
}

fn eps(dim: usize, i: usize) -> RVec {
    let mut v = vec![Rat::zero(); dim];
    v[i - 1] = int(1);
    v
}

fn eps_diff(dim: usize, i: usize, j: usize) -> RVec {
    vsub(&eps(dim, i), &eps(dim, j))
}

fn eps_sum(dim: usize, i: usize, j: usize) -> RVec {
    vadd(&eps(dim, i), &eps(dim, j))
}

fn two_eps(dim: usize, i: usize) -> RVec {
    vadd(&eps(dim, i), &eps(dim, i))
}

/// γ_j = ε_j − ε_{r+j} (type A_{2r−1} with h_r).
fn gamma_sl_pairs(r: usize) -> Vec<RVec> {
    (1..=r).map(|j| eps_diff(2 * r, j, r + j)).collect()
}

/// γ_j = 2ε_j (type C_r with h_r).
fn gamma_two_eps(r: usize, dim: usize) -> Vec<RVec> {
    (1..=r).map(|j| two_eps(dim, j)).collect()
}

/// γ_1 = ε_1 + ε_2, γ_2 = ε_1 − ε_2 (boost Euler element in B/D systems).
fn gamma_boost(dim: usize) -> Vec<RVec> {
    vec![eps_sum(dim, 1, 2), eps_diff(dim, 1, 2)]
}

/// γ_j = ε_{2j−1} + ε_{2j} (D_n with h_n).
fn gamma_consecutive_sums(r: usize, dim: usize) -> Vec<RVec> {
    (1..=r).map(|j| eps_sum(dim, 2 * j - 1, 2 * j)).collect()
}

/// Greedy maximal system of long strongly orthogonal roots in Σ_1,
/// scanning roots in sorted order (used for the E7 entries).
fn gamma_greedy(rst: RootSystemType, euler_label: usize) -> Vec<RVec> {
    let rs = RootSys::build(rst).expect("valid type");
    let h = rs.dual_basis()[euler_label - 1].clone();
    let sigma_one: Vec<RVec> = rs
        .roots()
        .iter()
        .filter(|a| rs.evaluate(a, &h) == int::<Rat>(1))
        .cloned()
        .collect();
    let max_norm = sigma_one
        .iter()
        .map(|a| dot(a, a))
        .max_by(|a, b| a.partial_cmp(b).unwrap())
        .unwrap();
    let mut gamma: Vec<RVec> = Vec::new();
    for cand in &sigma_one {
        if dot(cand, cand) != max_norm {
            continue;
        }
        let ok = gamma.iter().all(|g| {
            !rs.contains(&vadd(g, cand)) && !rs.contains(&vsub(g, cand))
        });
        if ok {
            gamma.push(cand.clone());
        }
    }
    gamma
}

fn rst(family: Family, rank: usize) -> RootSystemType {
    RootSystemType::new(family, rank).expect("catalog rank admissible")
}

#[allow(clippy::too_many_arguments)]
fn entry(
    name: &'static str,
    display: &'static str,
    type_tag: TypeTag,
    sigma_ga_type: RootSystemType,
    euler_label: usize,
    multiplicity: Multiplicity,
    sigma_star: SigmaStar,
    rank_r: usize,
    gamma: Vec<RVec>,
    g1_description: &'static str,
    g1_dimension: usize,
    realization: Option<Realization>,
) -> RealFormEntry {
    RealFormEntry {
        name,
        display,
        type_tag,
        sigma_ga_type,
        euler_label,
        multiplicity: Some(multiplicity),
        sigma_star,
        rank_r,
        gamma,
        g1_description,
        g1_dimension,
        pi1_expected: type_tag.pi1(),
        classification_only: realization.is_none(),
        realization,
    }
}

/// Loads (and validates) the full compiled-in catalog. The data is built
/// and validated once per process and cloned on each call.
pub fn load_catalog() -> Vec<RealFormEntry> {
    static CATALOG: std::sync::OnceLock<Vec<RealFormEntry>> = std::sync::OnceLock::new();
    CATALOG.get_or_init(build_catalog).clone()
}

fn build_catalog() -> Vec<RealFormEntry> {
    use Family::*;
    use Multiplicity::{All, ByLength};
    use Realization::*;
    use SigmaStar as St;
    use TypeTag::*;

    let mut entries = Vec::new();

    // --- Cayley type (hermitian tube type): pi1 = Z ---------------------
    // su(1,1) = sl(2,R): the rank-1 hermitian algebra; realized as sl(2,R).
    entries.push(entry(
        "su11", "su(1,1)", Cayley, rst(A, 1), 1, All(1), St::A(0), 1,
        vec![eps_diff(2, 1, 2)], "Herm_1(C)", 1,
        Some(SlR { n: 2, p: 1 }),
    ));
    entries.push(entry(
        "su22", "su(2,2)", Cayley, rst(C, 2), 2, ByLength { long: 1, short: 2 },
        St::A(1), 2, gamma_two_eps(2, 2), "Herm_2(C)", 4, None,
    ));
    entries.push(entry(
        "su33", "su(3,3)", Cayley, rst(C, 3), 3, ByLength { long: 1, short: 2 },
        St::A(2), 3, gamma_two_eps(3, 3), "Herm_3(C)", 9, None,
    ));
    entries.push(entry(
        "sp4R", "sp(4,R)", Cayley, rst(C, 2), 2, All(1), St::A(1), 2,
        gamma_two_eps(2, 2), "Sym_2(R)", 3, Some(SpR { n: 2 }),
    ));
    entries.push(entry(
        "sp6R", "sp(6,R)", Cayley, rst(C, 3), 3, All(1), St::A(2), 3,
        gamma_two_eps(3, 3), "Sym_3(R)", 6, Some(SpR { n: 3 }),
    ));
    // so(2,d), 3 ≤ d ≤ 6: restricted system of rank 2 realized as B_2
    // (isomorphic to the classical C_2 labeling), Euler element the boost h_1.
    for (name, display, d, g1, g1dim) in [
        ("so23", "so(2,3)", 3usize, "R^{1,2}", 3usize),
        ("so24", "so(2,4)", 4, "R^{1,3}", 4),
        ("so25", "so(2,5)", 5, "R^{1,4}", 5),
        ("so26", "so(2,6)", 6, "R^{1,5}", 6),
    ] {
        entries.push(entry(
            name, display, Cayley, rst(B, 2), 1,
            ByLength { long: 1, short: (d - 2) as u32 }, St::A(1), 2,
            gamma_boost(2), g1, g1dim,
            Some(SoPQ { p: 2, q: d, label: SoLabel::Boost }),
        ));
    }
    // so(1,2) = sl(2,R): hermitian, hence Cayley (m_α = d − 1 = 1).
    entries.push(entry(
        "so12", "so(1,2)", Cayley, rst(A, 1), 1, All(1), St::A(0), 1,
        vec![eps_diff(2, 1, 2)], "R^{0,1}", 1,
        Some(SoPQ { p: 1, q: 2, label: SoLabel::Boost }),
    ));
    entries.push(entry(
        "e7_25", "e7(-25)", Cayley, rst(C, 3), 3, ByLength { long: 1, short: 8 },
        St::A(2), 3, gamma_two_eps(3, 3), "Herm_3(O)", 27, None,
    ));

    // --- Split type: pi1 = Z2 -------------------------------------------
    entries.push(entry(
        "sl4R", "sl(4,R)", Split, rst(A, 3), 2, All(1), St::D(2), 2,
        gamma_sl_pairs(2), "M_2(R)", 4, Some(SlR { n: 4, p: 2 }),
    ));
    entries.push(entry(
        "sl6R", "sl(6,R)", Split, rst(A, 5), 3, All(1), St::D(3), 3,
        gamma_sl_pairs(3), "M_3(R)", 9, Some(SlR { n: 6, p: 3 }),
    ));
    // so(n,n) with the half-sum Euler element h_n.
    entries.push(entry(
        "so33", "so(3,3) with h_3", Split, rst(D, 3), 3, All(1), St::D(1), 1,
        gamma_consecutive_sums(1, 3), "Skew_3(R)", 3,
        Some(SoPQ { p: 3, q: 3, label: SoLabel::HalfSum }),
    ));
    entries.push(entry(
        "so44", "so(4,4) with h_4", Split, rst(D, 4), 4, All(1), St::D(2), 2,
        gamma_consecutive_sums(2, 4), "Skew_4(R)", 6,
        Some(SoPQ { p: 4, q: 4, label: SoLabel::HalfSum }),
    ));
    // so(p+1,q+1) with the boost Euler element h_1 (p, q ∈ {2, 3}).
    entries.push(entry(
        "soP1Q1_p2_q2", "so(3,3) with h_1", Split, rst(D, 3), 1, All(1),
        St::D(2), 2, gamma_boost(3), "R^{2,2}", 4,
        Some(SoPQ { p: 3, q: 3, label: SoLabel::Boost }),
    ));
    entries.push(entry(
        "soP1Q1_p2_q3", "so(3,4) with h_1", Split, rst(B, 3), 1,
        ByLength { long: 1, short: 1 }, St::D(2), 2, gamma_boost(3),
        "R^{2,3}", 5, Some(SoPQ { p: 3, q: 4, label: SoLabel::Boost }),
    ));
    entries.push(entry(
        "soP1Q1_p3_q3", "so(4,4) with h_1", Split, rst(D, 4), 1, All(1),
        St::D(2), 2, gamma_boost(4), "R^{3,3}", 6,
        Some(SoPQ { p: 4, q: 4, label: SoLabel::Boost }),
    ));
    entries.push(entry(
        "e7R", "e7(R)", Split, rst(E7, 7), 7, All(1), St::D(3), 3,
        gamma_greedy(rst(E7, 7), 7), "Herm_3(O_split)", 27, None,
    ));

    // --- Non-split type: pi1 trivial -------------------------------------
    for (name, display, d, g1) in [
        ("so13", "so(1,3)", 3usize, "R^{0,2}"),
        ("so14", "so(1,4)", 4, "R^{0,3}"),
        ("so15", "so(1,5)", 5, "R^{0,4}"),
        ("so16", "so(1,6)", 6, "R^{0,5}"),
    ] {
        entries.push(entry(
            name, display, NonSplit, rst(A, 1), 1, All((d - 1) as u32),
            St::C(1), 1, vec![eps_diff(2, 1, 2)], g1, d - 1,
            Some(SoPQ { p: 1, q: d, label: SoLabel::Boost }),
        ));
    }
    entries.push(entry(
        "sl2H", "sl(2,H)", NonSplit, rst(A, 1), 1, All(4), St::C(1), 1,
        vec![eps_diff(2, 1, 2)], "M_1(H)", 4, None,
    ));
    entries.push(entry(
        "sl4H", "sl(4,H)", NonSplit, rst(A, 3), 2, All(4), St::C(2), 2,
        gamma_sl_pairs(2), "M_2(H)", 16, None,
    ));
    entries.push(entry(
        "u11H", "u(1,1,H)", NonSplit, rst(A, 1), 1, All(3), St::C(1), 1,
        vec![eps_diff(2, 1, 2)], "Aherm_1(H)", 3, None,
    ));
    entries.push(entry(
        "u22H", "u(2,2,H)", NonSplit, rst(C, 2), 2,
        ByLength { long: 3, short: 4 }, St::C(2), 2, gamma_two_eps(2, 2),
        "Aherm_2(H)", 6, None,
    ));

    // --- Complex type: pi1 trivial ---------------------------------------
    entries.push(entry(
        "sl4C", "sl(4,C)", Complex, rst(A, 3), 2, All(2), St::C(2), 2,
        gamma_sl_pairs(2), "M_2(C)", 8, None,
    ));
    entries.push(entry(
        "sp4C", "sp(4,C)", Complex, rst(C, 2), 2, All(2), St::C(2), 2,
        gamma_two_eps(2, 2), "Sym_2(C)", 6, None,
    ));
    entries.push(entry(
        "so7C", "so(7,C)", Complex, rst(B, 3), 1, All(2), St::C(2), 2,
        gamma_boost(3), "C^5", 10, None,
    ));
    entries.push(entry(
        "so8C", "so(8,C)", Complex, rst(D, 4), 1, All(2), St::C(2), 2,
        gamma_boost(4), "C^6", 12, None,
    ));
    entries.push(entry(
        "e7C", "e7(C)", Complex, rst(E7, 7), 7, All(2), St::C(3), 3,
        gamma_greedy(rst(E7, 7), 7), "Herm_3(O)_C", 54, None,
    ));

    for e in &entries {
        e.validate().expect("catalog entry invalid");
    }
    entries
}

/// Looks up a catalog entry by slug.
pub fn entry_by_name(name: &str) -> Option<RealFormEntry> {
    load_catalog().into_iter().find(|e| e.name == name)
}

/// A row of a reproduced classical table (pipe-separated cells).
#[derive(Debug, Clone, Copy)]
pub struct TableRow {
    /// Section within the table (empty for Table 1).
    pub group: &'static str,
    /// Column cells.
    pub cells: &'static [&'static str],
    /// Whether the row is represented in the compiled-in catalog.
    pub present: bool,
}

/// Columns of the reproduced hermitian table (Table 1).
pub const TABLE1_COLUMNS: &[&str] =
    &["g0 (hermitian)", "Sigma(g0,a0)", "g = (g0)_C", "Sigma(g,a)", "h"];

/// Rows of the reproduced hermitian table (Table 1).
pub const TABLE1_ROWS: &[TableRow] = &[
    TableRow { group: "", cells: &["su_{n,n}(C)", "C_n", "sl_{2n}(C)", "A_{2n-1}", "h_n"], present: true },
    TableRow { group: "", cells: &["so_{2,2n-1}(R), n > 1", "C_2", "so_{2n+1}(C)", "B_n", "h_1"], present: true },
    TableRow { group: "", cells: &["sp_{2n}(R)", "C_n", "sp_{2n}(C)", "C_n", "h_n"], present: true },
    TableRow { group: "", cells: &["so_{2,2n-2}(R), n > 2", "C_2", "so_{2n}(C)", "D_n", "h_1"], present: true },
    TableRow { group: "", cells: &["so*(4n)", "C_n", "so_{4n}(C)", "D_{2n}", "h_{2n-1}, h_{2n}"], present: false },
    TableRow { group: "", cells: &["e_{7(-25)}", "C_3", "e_7", "E_7", "h_7"], present: true },
];

/// Columns of the reproduced symmetric-Euler table (Table 2).
pub const TABLE2_COLUMNS: &[&str] = &[
    "g", "g* = Fix(tau_h theta)", "Sigma(g,a)", "h", "g_1(h)", "Sigma(g,c)", "Sigma(g*,c)",
];

/// Rows of the reproduced symmetric-Euler table (Table 2).
pub const TABLE2_ROWS: &[TableRow] = &[
    // Complex type.
    TableRow { group: "Complex type", cells: &["sl_{2r}(C)", "su_{r,r}(C)", "A_{2r-1}", "h_r", "M_r(C)", "C_r", "C_r"], present: true },
    TableRow { group: "Complex type", cells: &["sp_{2r}(C)", "sp_{2r}(R)", "C_r", "h_r", "Sym_r(C)", "C_r", "C_r"], present: true },
    TableRow { group: "Complex type", cells: &["so_{2n+1}(C), n > 1", "so_{2,2n-1}(R)", "B_n", "h_1", "C^{2n-1}", "C_2", "C_2"], present: true },
    TableRow { group: "Complex type", cells: &["so_{2n}(C), n > 2", "so_{2,2n-2}(R)", "D_n", "h_1", "C^{2n-2}", "C_2", "C_2"], present: true },
    TableRow { group: "Complex type", cells: &["so_{4r}(C)", "so*(4r)", "D_{2r}", "h_{2r-1}, h_{2r}", "Skew_{2r}(C)", "C_r", "C_r"], present: false },
    TableRow { group: "Complex type", cells: &["e_7(C)", "e_{7(-25)}", "E_7", "h_7", "Herm_3(O)_C", "C_3", "C_3"], present: true },
    // Cayley type (CT).
    TableRow { group: "Cayley type (CT)", cells: &["su_{r,r}(C), r >= 1", "R + sl_r(C)", "C_r", "h_r", "Herm_r(C)", "C_r", "A_{r-1}"], present: true },
    TableRow { group: "Cayley type (CT)", cells: &["sp_{2r}(R), r > 1", "R + sl_r(R)", "C_r", "h_r", "Sym_r(R)", "C_r", "A_{r-1}"], present: true },
    TableRow { group: "Cayley type (CT)", cells: &["so_{2,n+1}(R), n > 1", "R + so_{1,n}(R)", "C_2", "h_2", "R^{1,n}", "C_2", "A_1"], present: true },
    TableRow { group: "Cayley type (CT)", cells: &["so*(4r), r > 1", "R + sl_r(H)", "C_r", "h_r", "Herm_r(H)", "C_r", "A_{r-1}"], present: false },
    TableRow { group: "Cayley type (CT)", cells: &["e_{7(-25)}", "R + e_{6(-26)}", "C_3", "h_3", "Herm_3(O)", "C_3", "A_2"], present: true },
    // Split type (ST).
    TableRow { group: "Split type (ST)", cells: &["sl_{2r}(R), r > 1", "so_{r,r}(R)", "A_{2r-1}", "h_r", "M_r(R)", "C_r", "D_r"], present: true },
    TableRow { group: "Split type (ST)", cells: &["so_{2r,2r}(R), r > 1", "so_{2r}(C)", "D_{2r}", "h_{2r-1}, h_{2r}", "Skew_{2r}(R)", "C_r", "D_r"], present: true },
    TableRow { group: "Split type (ST)", cells: &["e_7(R)", "sl_4(H)", "E_7", "h_7", "Herm_3(O_split)", "C_3", "D_3"], present: true },
    TableRow { group: "Split type (ST)", cells: &["so_{p+1,q+1}(R), p,q > 1", "so_{1,p}(R) + so_{1,q}(R)", "B_{p+1} (p<q), D_{p+1} (p=q)", "h_1", "R^{p,q}", "C_2", "D_2 = A_1+A_1"], present: true },
    // Non-split type (NST).
    TableRow { group: "Non-split type (NST)", cells: &["sl_{2r}(H)", "u_{r,r}(H)", "A_{2r-1}", "h_r", "M_r(H)", "C_r", "C_r"], present: true },
    TableRow { group: "Non-split type (NST)", cells: &["u_{r,r}(H)", "sp_{2r}(C)", "C_r", "h_r", "Aherm_r(H)", "C_r", "C_r"], present: true },
    TableRow { group: "Non-split type (NST)", cells: &["so_{1,d+1}(R), d >= 2", "so_{1,d}(R)", "A_1", "h_1", "R^{0,d}", "C_1", "C_1"], present: true },
];

/// The Euler-element list by family, one display line per family.
pub const EULER_LIST_LINES: &[&str] = &[
    "A_n: h_1, ..., h_n",
    "B_n: h_1",
    "C_n: h_n",
    "D_n: h_1, h_{n-1}, h_n",
    "E_6: h_1, h_6",
    "E_7: h_7",
    "BC_n, E_8, F_4, G_2: no Euler elements",
];

/// The symmetric-Euler-element list by family, one display line per family.
pub const SYMMETRIC_LIST_LINES: &[&str] = &[
    "A_{2n-1}: h_n",
    "B_n: h_1",
    "C_n: h_n",
    "D_{2n}: h_1, h_{2n-1}, h_{2n}",
    "D_{2n+1}: h_1",
    "E_7: h_7",
];

/// Metadata note: the two Euler labels h_{n−1}, h_n of D_n rows lead to
/// isomorphic configurations; the catalog stores the h_n representative.
pub const DOUBLE_LABEL_NOTE: &str =
    "D-type rows list two Euler labels h_{n-1}, h_n; both lead to isomorphic \
     configurations and the catalog stores the h_n representative.";
