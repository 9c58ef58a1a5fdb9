//! Fundamental groups of Euler adjoint orbits, computed two independent
//! ways.
//!
//! The structure theorem reads π₁ off the type tag: Cayley → Z, Split → Z2,
//! Complex / Non-split → trivial. Independently, the orbit is a real flag
//! manifold G/P_j for the parabolic attached to the Euler coweight, whose
//! fundamental group follows from the restricted root data: with
//! S* = {α_i simple : m_{α_i} = 1},
//!
//! * π₁ is trivial if m_{α_j} > 1 (α_j ∉ S*);
//! * π₁ ≅ Z2 if α_j ∈ S* and some α_i ∈ S* has α_j(α_i^∨) odd;
//! * π₁ ≅ Z otherwise.
//!
//! The module also handles products of simple factors and the Levi
//! reduction: the radical of a general Lie algebra contributes nothing, so
//! π₁ is computed on the semisimple quotient alone.

use crate::catalog::RealFormEntry;
use crate::RootSys;
use serde_json::{json, Value};
use thiserror::Error;

/// Errors from fundamental-group computations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Pi1Error {
    /// Required multiplicity data is absent.
    #[error("entry {0}: restricted-root multiplicities unknown; refusing to guess")]
    MissingMultiplicities(String),
    /// The coweight is not an Euler element.
    #[error("h_{0} is not an Euler element of the given system")]
    NotEuler(usize),
    /// A product needs at least one component with nonzero h.
    #[error("invalid Euler element: every component of h is zero")]
    AllComponentsZero,
}

/// Isomorphism type of the fundamental group of an Euler adjoint orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum FgKind {
    /// Trivial group.
    Trivial,
    /// Infinite cyclic.
    Z,
    /// Order two.
    Z2,
}

impl FgKind {
    /// Display label ("trivial", "Z", "Z2").
    pub fn label(self) -> &'static str {
        match self {
            FgKind::Trivial => "trivial",
            FgKind::Z => "Z",
            FgKind::Z2 => "Z2",
        }
    }
}

/// A fundamental group together with a description of its generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalGroup {
    /// Isomorphism type.
    pub kind: FgKind,
    /// Loop description of a generator (empty for the trivial group).
    pub generator_note: String,
}

impl FundamentalGroup {
    fn of_kind(kind: FgKind) -> Self {
        let generator_note = match kind {
            FgKind::Trivial => String::new(),
            FgKind::Z => "class of t -> exp(2*pi*t*z_{h,k})".to_string(),
            FgKind::Z2 => "class of t -> exp(4*pi*t*z_1)".to_string(),
        };
        FundamentalGroup {
            kind,
            generator_note,
        }
    }
}

/// A product group Z^a × Z2^b with labeled factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGroup {
    /// Free rank a.
    pub free_rank: usize,
    /// Number of Z2 factors b.
    pub two_torsion_rank: usize,
    /// One label per contributing factor.
    pub factor_labels: Vec<String>,
}

impl ProductGroup {
    /// Display such as "Z^1 x Z2^1" or "trivial".
    pub fn label(&self) -> String {
        match (self.free_rank, self.two_torsion_rank) {
            (0, 0) => "trivial".to_string(),
            (a, 0) => format!("Z^{a}"),
            (0, b) => format!("Z2^{b}"),
            (a, b) => format!("Z^{a} x Z2^{b}"),
        }
    }
}

/// π₁ via the structure theorem: determined by the type tag.
pub fn pi1_structure(entry: &RealFormEntry) -> FundamentalGroup {
    FundamentalGroup::of_kind(entry.type_tag.pi1())
}

/// π₁ via the flag-manifold algorithm, from a restricted root system, the
/// multiplicities of its simple roots (Bourbaki order), and the 1-based
/// index `j` of the simple root with α_j(h_j) = 1.
pub fn pi1_wiggerman(
    rs: &RootSys,
    mult: &[u32],
    j: usize,
) -> Result<FundamentalGroup, Pi1Error> {
    assert_eq!(mult.len(), rs.simple_roots().len(), "one multiplicity per simple root");
    let h = &rs.dual_basis()[j - 1];
    if !crate::euler::is_euler(rs, h) {
        return Err(Pi1Error::NotEuler(j));
    }
    let alpha_j = &rs.simple_roots()[j - 1];
    if mult[j - 1] > 1 {
        return Ok(FundamentalGroup::of_kind(FgKind::Trivial));
    }
    let odd_pairing = rs
        .simple_roots()
        .iter()
        .zip(mult)
        .any(|(alpha_i, &m_i)| {
            m_i == 1
                && rs
                    .cartan_integer(alpha_i, alpha_j)
                    .expect("simple roots are roots")
                    .rem_euclid(2)
                    == 1
        });
    Ok(FundamentalGroup::of_kind(if odd_pairing {
        FgKind::Z2
    } else {
        FgKind::Z
    }))
}

/// π₁ via the flag-manifold algorithm for a catalog entry; refuses when the
/// entry has no multiplicity data.
pub fn pi1_wiggerman_entry(entry: &RealFormEntry) -> Result<FundamentalGroup, Pi1Error> {
    let rs = entry.sigma_ga();
    let mult = entry
        .simple_multiplicities(&rs)
        .ok_or_else(|| Pi1Error::MissingMultiplicities(entry.name.to_string()))?;
    pi1_wiggerman(&rs, &mult, entry.euler_label)
}

/// Whether the two independent computations agree for an entry.
pub fn cross_check_pi1(entry: &RealFormEntry) -> Result<bool, Pi1Error> {
    Ok(pi1_structure(entry).kind == pi1_wiggerman_entry(entry)?.kind)
}

/// π₁ of a product of simple factors: the product over the components on
/// which h is nonzero. Errors if every component is zero.
pub fn pi1_semisimple_product(
    components: &[(RealFormEntry, bool)],
) -> Result<ProductGroup, Pi1Error> {
    if components.iter().all(|(_, nonzero)| !nonzero) {
        return Err(Pi1Error::AllComponentsZero);
    }
    let mut group = ProductGroup {
        free_rank: 0,
        two_torsion_rank: 0,
        factor_labels: Vec::new(),
    };
    for (entry, nonzero) in components {
        if !nonzero {
            continue;
        }
        match pi1_structure(entry).kind {
            FgKind::Z => {
                group.free_rank += 1;
                group.factor_labels.push(format!("{}: Z", entry.name));
            }
            FgKind::Z2 => {
                group.two_torsion_rank += 1;
                group.factor_labels.push(format!("{}: Z2", entry.name));
            }
            FgKind::Trivial => {
                group.factor_labels.push(format!("{}: trivial", entry.name));
            }
        }
    }
    Ok(group)
}

/// Symbolic description of a solvable radical; carries no homotopy data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RadicalDescriptor {
    /// No radical (semisimple algebra).
    None,
    /// Abelian radical of the given dimension (e.g. a translation module).
    Abelian {
        /// Dimension of the radical.
        dim: usize,
        /// Free-form module description (e.g. "R^{1,3}").
        module: String,
    },
    /// General solvable radical.
    Solvable {
        /// Dimension of the radical.
        dim: usize,
    },
}

/// A general Lie algebra: a radical descriptor plus the simple components
/// of the semisimple quotient, each flagged by whether the Euler element's
/// projection to it is nonzero.
#[derive(Debug, Clone)]
pub struct AlgebraDescriptor {
    /// Radical part (irrelevant to π₁ by Levi reduction).
    pub radical: RadicalDescriptor,
    /// Components of the semisimple quotient.
    pub components: Vec<(RealFormEntry, bool)>,
}

/// π₁ through the Levi reduction: the inclusion of the semisimple-quotient
/// orbit is a homotopy equivalence, so the radical contributes nothing.
pub fn pi1_with_radical(spec: &AlgebraDescriptor) -> Result<ProductGroup, Pi1Error> {
    pi1_semisimple_product(&spec.components)
}

/// JSON report for the CLI: {entry, kind, generator_note, agreement}.
pub fn pi1_json(entry: &RealFormEntry, method: &str) -> Result<Value, Pi1Error> {
    let structure = pi1_structure(entry);
    match method {
        "structure" => Ok(json!({
            "entry": entry.name,
            "method": "structure",
            "kind": structure.kind.label(),
            "generator_note": structure.generator_note,
        })),
        "wiggerman" => {
            let w = pi1_wiggerman_entry(entry)?;
            Ok(json!({
                "entry": entry.name,
                "method": "wiggerman",
                "kind": w.kind.label(),
                "generator_note": w.generator_note,
            }))
        }
        _ => {
            let w = pi1_wiggerman_entry(entry)?;
            Ok(json!({
                "entry": entry.name,
                "method": "both",
                "kind": structure.kind.label(),
                "generator_note": structure.generator_note,
                "agreement": structure.kind == w.kind,
            }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{entry_by_name, load_catalog, Multiplicity};
    use crate::rootsys::{Family, RootSystemType};

    #[test]
    fn structure_values() {
        assert_eq!(pi1_structure(&entry_by_name("sp6R").unwrap()).kind, FgKind::Z);
        assert_eq!(pi1_structure(&entry_by_name("sl4R").unwrap()).kind, FgKind::Z2);
        assert_eq!(pi1_structure(&entry_by_name("sl4H").unwrap()).kind, FgKind::Trivial);
        assert_eq!(pi1_structure(&entry_by_name("sl4C").unwrap()).kind, FgKind::Trivial);
    }

    #[test]
    fn wiggerman_spot_checks() {
        // Split A_n (all m = 1): adjacent pairings are odd → Z2.
        let a3 = RootSys::build(RootSystemType::new(Family::A, 3).unwrap()).unwrap();
        assert_eq!(pi1_wiggerman(&a3, &[1, 1, 1], 2).unwrap().kind, FgKind::Z2);
        // C_r, j = r, all m = 1: the long root pairs evenly with everything → Z.
        let c3 = RootSys::build(RootSystemType::new(Family::C, 3).unwrap()).unwrap();
        assert_eq!(pi1_wiggerman(&c3, &[1, 1, 1], 3).unwrap().kind, FgKind::Z);
        // so(1,d): A_1 with m = d − 1 > 1 → trivial.
        let a1 = RootSys::build(RootSystemType::new(Family::A, 1).unwrap()).unwrap();
        assert_eq!(pi1_wiggerman(&a1, &[3], 1).unwrap().kind, FgKind::Trivial);
        // Split E6, j = 1 → Z2.
        let e6 = RootSys::build(RootSystemType::new(Family::E6, 6).unwrap()).unwrap();
        assert_eq!(pi1_wiggerman(&e6, &[1; 6], 1).unwrap().kind, FgKind::Z2);
        // Non-Euler label rejected.
        assert_eq!(pi1_wiggerman(&c3, &[1, 1, 1], 1), Err(Pi1Error::NotEuler(1)));
    }

    #[test]
    fn cross_check_all_entries() {
        for entry in load_catalog() {
            assert!(cross_check_pi1(&entry).unwrap(), "{}", entry.name);
        }
    }

    #[test]
    fn missing_multiplicities_refused() {
        let mut entry = entry_by_name("sl4H").unwrap();
        entry.multiplicity = None;
        assert!(matches!(
            pi1_wiggerman_entry(&entry),
            Err(Pi1Error::MissingMultiplicities(_))
        ));
        let _ = Multiplicity::All(1); // keep import exercised
    }

    #[test]
    fn relabeling_invariance() {
        // The decision depends only on the set of (multiplicity, pairing)
        // data, not the traversal order of simple roots: compare the result
        // against an order-reversed re-computation.
        let a5 = RootSys::build(RootSystemType::new(Family::A, 5).unwrap()).unwrap();
        let j = 3;
        let direct = pi1_wiggerman(&a5, &[1; 5], j).unwrap().kind;
        let alpha_j = &a5.simple_roots()[j - 1];
        let odd = a5
            .simple_roots()
            .iter()
            .rev()
            .any(|alpha_i| a5.cartan_integer(alpha_i, alpha_j).unwrap().rem_euclid(2) == 1);
        let reversed = if odd { FgKind::Z2 } else { FgKind::Z };
        assert_eq!(direct, reversed);
    }

    #[test]
    fn products_and_levi_reduction() {
        let so23 = entry_by_name("so23").unwrap();
        let sl4r = entry_by_name("sl4R").unwrap();
        let g = pi1_semisimple_product(&[(so23.clone(), true), (sl4r, true)]).unwrap();
        assert_eq!((g.free_rank, g.two_torsion_rank), (1, 1));
        assert_eq!(g.label(), "Z^1 x Z2^1");

        let sl2h = entry_by_name("sl2H").unwrap();
        let g = pi1_semisimple_product(&[(sl2h.clone(), true)]).unwrap();
        assert_eq!(g.label(), "trivial");

        assert_eq!(
            pi1_semisimple_product(&[(sl2h, false)]),
            Err(Pi1Error::AllComponentsZero)
        );

        // Poincaré: translations ⋊ so(1,d), h a boost → trivial.
        let poincare = AlgebraDescriptor {
            radical: RadicalDescriptor::Abelian {
                dim: 5,
                module: "R^{1,4}".to_string(),
            },
            components: vec![(entry_by_name("so14").unwrap(), true)],
        };
        assert_eq!(pi1_with_radical(&poincare).unwrap().label(), "trivial");

        // Conformal so(2,d), h a boost → Z, whatever the radical looks like.
        for radical in [
            RadicalDescriptor::None,
            RadicalDescriptor::Abelian {
                dim: 4,
                module: "R^4".to_string(),
            },
            RadicalDescriptor::Solvable { dim: 7 },
        ] {
            let conformal = AlgebraDescriptor {
                radical,
                components: vec![(entry_by_name("so24").unwrap(), true)],
            };
            assert_eq!(pi1_with_radical(&conformal).unwrap().label(), "Z^1");
        }

        // Single sl(2,R) quotient (Cayley r = 1) → Z.
        let sl2 = AlgebraDescriptor {
            radical: RadicalDescriptor::Solvable { dim: 3 },
            components: vec![(entry_by_name("su11").unwrap(), true)],
        };
        assert_eq!(pi1_with_radical(&sl2).unwrap().label(), "Z^1");
    }
}
