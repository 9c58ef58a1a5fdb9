//! Classification of orthogonal Euler pairs by sign vectors.
//!
//! For a symmetric Euler element h with long strongly orthogonal roots
//! γ_1, …, γ_r, every orthogonal Euler element k is conjugate to a signed
//! sum k = σ_1 k_1 + ⋯ + σ_r k_r, and the conjugacy class of (h, k) is
//! determined by the orbit of the sign vector σ under the Weyl group of
//! Σ(g*,c):
//!
//! * type A_{r−1}: permutations — classes indexed by the number of +1's
//!   (j = 0, …, r);
//! * type C_r: permutations and all sign changes — a single class (j = r);
//! * type D_r: permutations and even sign changes — two classes
//!   (j = r−1, r), separated by the parity of the number of −1's.
//!
//! Class representatives are k^j = k_1 + ⋯ + k_j − k_{j+1} − ⋯ − k_r.
//! The pair (h, k^j) is symmetric iff −k^j lies in the same orbit cell:
//! type A needs r even and j = r/2; type C always; type D needs r even.

use crate::catalog::{RealFormEntry, SigmaStar};
use serde_json::{json, Value};
use thiserror::Error;

/// Errors from the pair-classification module.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PairsError {
    /// Sign vector of wrong length.
    #[error("sign vector has length {got}, expected rank r = {expected}")]
    BadLength {
        /// Provided length.
        got: usize,
        /// Entry rank r.
        expected: usize,
    },
    /// Brute-force orbit enumeration guard.
    #[error("rank r = {0} exceeds the tractability guard r <= 12")]
    RankGuard(usize),
}

/// A sign vector σ ∈ {+1, −1}^r.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector(pub Vec<i8>);

impl SignVector {
    /// The representative k^j: j pluses followed by r − j minuses.
    pub fn representative(j: usize, r: usize) -> Self {
        assert!(j <= r);
        SignVector((0..r).map(|i| if i < j { 1 } else { -1 }).collect())
    }

    /// Number of +1 entries.
    pub fn plus_count(&self) -> usize {
        self.0.iter().filter(|&&s| s == 1).count()
    }

    /// Number of −1 entries.
    pub fn minus_count(&self) -> usize {
        self.0.len() - self.plus_count()
    }

    /// Component-wise negation.
    pub fn negate(&self) -> Self {
        SignVector(self.0.iter().map(|s| -s).collect())
    }

    /// Display such as "(+,-,+)".
    pub fn display(&self) -> String {
        let inner: Vec<&str> = self.0.iter().map(|&s| if s == 1 { "+" } else { "-" }).collect();
        format!("({})", inner.join(","))
    }
}

/// A conjugacy class of orthogonal pairs (h, k^j).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairClass {
    /// Class index j ∈ {0, …, r}.
    pub j: usize,
    /// Representative sign vector k^j.
    pub representative: SignVector,
}

/// All pair classes of an entry: r + 1 for type A, 1 for type C, 2 for
/// type D.
pub fn pair_classes(entry: &RealFormEntry) -> Vec<PairClass> {
    let r = entry.rank_r;
    let indices: Vec<usize> = match entry.sigma_star {
        SigmaStar::A(_) => (0..=r).collect(),
        SigmaStar::C(_) => vec![r],
        SigmaStar::D(_) => vec![r - 1, r],
    };
    indices
        .into_iter()
        .map(|j| PairClass {
            j,
            representative: SignVector::representative(j, r),
        })
        .collect()
}

/// Classifies a sign vector into its pair class.
pub fn classify_sign_vector(
    entry: &RealFormEntry,
    sigma: &SignVector,
) -> Result<PairClass, PairsError> {
    let r = entry.rank_r;
    if sigma.0.len() != r {
        return Err(PairsError::BadLength {
            got: sigma.0.len(),
            expected: r,
        });
    }
    let j = match entry.sigma_star {
        SigmaStar::A(_) => sigma.plus_count(),
        SigmaStar::C(_) => r,
        SigmaStar::D(_) => {
            if sigma.minus_count() % 2 == 0 {
                r
            } else {
                r - 1
            }
        }
    };
    Ok(PairClass {
        j,
        representative: SignVector::representative(j, r),
    })
}

/// Whether the pair (h, k^j) is symmetric: type A needs r even and
/// j = r/2; type C always; type D needs r even.
pub fn is_symmetric_pair(entry: &RealFormEntry, cls: &PairClass) -> bool {
    let r = entry.rank_r;
    match entry.sigma_star {
        SigmaStar::A(_) => r % 2 == 0 && cls.j == r / 2,
        SigmaStar::C(_) => true,
        SigmaStar::D(_) => r % 2 == 0,
    }
}

/// Brute-force orbit of a sign vector under the Weyl generators of Σ(g*,c):
/// adjacent transpositions (A), plus all single sign changes (C), plus
/// double sign changes (D). Guarded to r ≤ 12.
pub fn orbit_of_sign_vectors(
    entry: &RealFormEntry,
    sigma: &SignVector,
) -> Result<Vec<SignVector>, PairsError> {
    let r = entry.rank_r;
    if r > 12 {
        return Err(PairsError::RankGuard(r));
    }
    if sigma.0.len() != r {
        return Err(PairsError::BadLength {
            got: sigma.0.len(),
            expected: r,
        });
    }
    let mut orbit: Vec<SignVector> = vec![sigma.clone()];
    let mut frontier = vec![sigma.clone()];
    while let Some(v) = frontier.pop() {
        let mut images: Vec<SignVector> = Vec::new();
        // Adjacent transpositions (all types).
        for i in 0..r.saturating_sub(1) {
            let mut w = v.clone();
            w.0.swap(i, i + 1);
            images.push(w);
        }
        match entry.sigma_star {
            SigmaStar::A(_) => {}
            SigmaStar::C(_) => {
                for i in 0..r {
                    let mut w = v.clone();
                    w.0[i] = -w.0[i];
                    images.push(w);
                }
            }
            SigmaStar::D(_) => {
                for i in 0..r {
                    for k in 0..i {
                        let mut w = v.clone();
                        w.0[i] = -w.0[i];
                        w.0[k] = -w.0[k];
                        images.push(w);
                    }
                }
            }
        }
        for w in images {
            if !orbit.contains(&w) {
                orbit.push(w.clone());
                frontier.push(w);
            }
        }
    }
    orbit.sort();
    Ok(orbit)
}

/// JSON report: {entry, classes: [{j, representative, symmetric}]}.
pub fn pairs_json(entry: &RealFormEntry) -> Value {
    let classes: Vec<Value> = pair_classes(entry)
        .iter()
        .map(|cls| {
            json!({
                "j": cls.j,
                "representative": cls.representative.display(),
                "symmetric": is_symmetric_pair(entry, cls),
            })
        })
        .collect();
    json!({
        "entry": entry.name,
        "sigma_star": entry.sigma_star.label(),
        "rank_r": entry.rank_r,
        "classes": classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{entry_by_name, load_catalog};

    fn all_sign_vectors(r: usize) -> Vec<SignVector> {
        (0..1u32 << r)
            .map(|mask| {
                SignVector(
                    (0..r)
                        .map(|i| if mask >> i & 1 == 1 { 1 } else { -1 })
                        .collect(),
                )
            })
            .collect()
    }

    #[test]
    fn class_counts_per_type() {
        assert_eq!(pair_classes(&entry_by_name("su33").unwrap()).len(), 4); // A, r=3
        assert_eq!(pair_classes(&entry_by_name("sl4H").unwrap()).len(), 1); // C
        assert_eq!(pair_classes(&entry_by_name("sl4R").unwrap()).len(), 2); // D, r=2
        assert_eq!(pair_classes(&entry_by_name("su11").unwrap()).len(), 2); // A_0: r=1
        assert_eq!(pair_classes(&entry_by_name("so33").unwrap()).len(), 2); // D_1: r=1
    }

    #[test]
    fn classification_examples() {
        let su33 = entry_by_name("su33").unwrap();
        let sigma = SignVector(vec![1, -1, 1]);
        assert_eq!(classify_sign_vector(&su33, &sigma).unwrap().j, 2);

        let sl4h = entry_by_name("sl4H").unwrap();
        for sigma in all_sign_vectors(2) {
            assert_eq!(classify_sign_vector(&sl4h, &sigma).unwrap().j, 2);
        }

        let sl4r = entry_by_name("sl4R").unwrap();
        let all_minus = SignVector(vec![-1, -1]);
        assert_eq!(classify_sign_vector(&sl4r, &all_minus).unwrap().j, 2);

        assert!(classify_sign_vector(&su33, &SignVector(vec![1])).is_err());
    }

    #[test]
    fn orbit_cell_structure() {
        // A, r=2: 3 cells of sizes 1, 2, 1.
        let su22 = entry_by_name("su22").unwrap();
        let mut sizes: Vec<usize> = pair_classes(&su22)
            .iter()
            .map(|c| orbit_of_sign_vectors(&su22, &c.representative).unwrap().len())
            .collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2]);

        // C, r=3: 1 cell of size 8.
        let su = entry_by_name("u22H").unwrap(); // C, r=2 → cell of size 4
        let orbit = orbit_of_sign_vectors(&su, &SignVector(vec![1, 1])).unwrap();
        assert_eq!(orbit.len(), 4);

        // D, r=3 (sl6R): 2 cells of size 4 each.
        let sl6r = entry_by_name("sl6R").unwrap();
        for cls in pair_classes(&sl6r) {
            assert_eq!(orbit_of_sign_vectors(&sl6r, &cls.representative).unwrap().len(), 4);
        }
    }

    #[test]
    fn classify_constant_on_cells_and_counts_match() {
        for entry in load_catalog() {
            let r = entry.rank_r;
            let mut cells: Vec<Vec<SignVector>> = Vec::new();
            for sigma in all_sign_vectors(r) {
                if !cells.iter().any(|cell| cell.contains(&sigma)) {
                    cells.push(orbit_of_sign_vectors(&entry, &sigma).unwrap());
                }
            }
            assert_eq!(cells.len(), pair_classes(&entry).len(), "{}", entry.name);
            for cell in &cells {
                let classes: Vec<usize> = cell
                    .iter()
                    .map(|s| classify_sign_vector(&entry, s).unwrap().j)
                    .collect();
                assert!(classes.windows(2).all(|w| w[0] == w[1]), "{}", entry.name);
            }
            // Distinct cells get distinct classes.
            let mut reps: Vec<usize> = cells
                .iter()
                .map(|cell| classify_sign_vector(&entry, &cell[0]).unwrap().j)
                .collect();
            reps.sort_unstable();
            reps.dedup();
            assert_eq!(reps.len(), cells.len(), "{}", entry.name);
        }
    }

    #[test]
    fn symmetric_pair_criterion_and_negation_oracle() {
        for entry in load_catalog() {
            for cls in pair_classes(&entry) {
                let orbit = orbit_of_sign_vectors(&entry, &cls.representative).unwrap();
                let oracle = orbit.contains(&cls.representative.negate());
                assert_eq!(
                    is_symmetric_pair(&entry, &cls),
                    oracle,
                    "{} class {}",
                    entry.name,
                    cls.j
                );
            }
        }
    }

    #[test]
    fn specific_symmetry_values() {
        let su22 = entry_by_name("su22").unwrap();
        let classes = pair_classes(&su22);
        let symm: Vec<usize> = classes
            .iter()
            .filter(|c| is_symmetric_pair(&su22, c))
            .map(|c| c.j)
            .collect();
        assert_eq!(symm, vec![1]); // j = r/2 = 1

        let sl4h = entry_by_name("sl4H").unwrap();
        assert!(pair_classes(&sl4h)
            .iter()
            .all(|c| is_symmetric_pair(&sl4h, c)));

        let sl6r = entry_by_name("sl6R").unwrap();
        assert!(pair_classes(&sl6r)
            .iter()
            .all(|c| !is_symmetric_pair(&sl6r, c)));
    }
}
