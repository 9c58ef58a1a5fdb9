//! Euler elements of a root system and their symmetry.
//!
//! A coweight `h` is an Euler element when `h ≠ 0` and every root evaluates
//! to −1, 0 or 1 on it, i.e. `ad h` has spectrum in {−1, 0, 1}. Among the
//! dual-basis coweights this singles out the minuscule-coweight lists:
//!
//! * `A_n`: h_1, …, h_n
//! * `B_n`: h_1
//! * `C_n`: h_n
//! * `D_n`: h_1, h_{n−1}, h_n
//! * `E_6`: h_1, h_6
//! * `E_7`: h_7
//! * `BC_n`, `E_8`, `F_4`, `G_2`: none
//!
//! `h` is *symmetric* when −h lies in the Weyl orbit of `h`; symmetry is
//! decided here by orbit BFS, with the classical table kept as a test oracle.

use crate::linalg::vneg;
use crate::rootsys::{vec_json, Family, RootSystem};
use crate::scalar::Scalar;
use serde_json::{json, Value};

/// An Euler element drawn from the dual basis of a root system.
#[derive(Debug, Clone, PartialEq)]
pub struct EulerElement<S> {
    /// Coordinates of the coweight in the ambient ε-space.
    pub coweight: Vec<S>,
    /// 1-based dual-basis index `j` such that the element is `h_j`.
    pub label: Option<usize>,
}

/// Whether `h` is an Euler element: `h ≠ 0` and every positive root
/// evaluates to −1, 0 or 1 on `h` (negative roots are redundant by symmetry
/// of the spectrum condition).
pub fn is_euler<S: Scalar>(rs: &RootSystem<S>, h: &[S]) -> bool {
    if h.iter().all(|c| c.is_zero()) {
        return false;
    }
    rs.positive_roots().iter().all(|alpha| {
        let v = rs.evaluate(alpha, h);
        v.is_zero() || v == S::one() || v == -S::one()
    })
}

/// All Euler elements among the dual-basis coweights, with 1-based labels.
pub fn euler_elements<S: Scalar>(rs: &RootSystem<S>) -> Vec<EulerElement<S>> {
    rs.dual_basis()
        .into_iter()
        .enumerate()
        .filter(|(_, h)| is_euler(rs, h))
        .map(|(i, h)| EulerElement {
            coweight: h,
            label: Some(i + 1),
        })
        .collect()
}

/// Whether the Euler element is symmetric, i.e. −h lies in the Weyl orbit
/// of h.
pub fn is_symmetric<S: Scalar>(rs: &RootSystem<S>, h: &EulerElement<S>) -> bool {
    debug_assert!(is_euler(rs, &h.coweight));
    rs.weyl_orbit(&h.coweight).contains(&vneg(&h.coweight))
}

/// Number of Weyl-conjugacy classes of symmetric Euler elements: 3 for
/// `D_{2n}` (n ≥ 2), 1 for the other families admitting symmetric Euler
/// elements, 0 otherwise.
pub fn symmetric_class_count<S: Scalar>(rs: &RootSystem<S>) -> usize {
    let symmetric: Vec<EulerElement<S>> = euler_elements(rs)
        .into_iter()
        .filter(|h| is_symmetric(rs, h))
        .collect();
    let mut classes: Vec<Vec<Vec<S>>> = Vec::new();
    for h in &symmetric {
        if !classes.iter().any(|orbit| orbit.contains(&h.coweight)) {
            classes.push(rs.weyl_orbit(&h.coweight));
        }
    }
    classes.len()
}

/// Dual-basis labels identified by diagram automorphisms (outer, not inner):
/// for `A_n`, `h_j` and `h_{n−j+1}` are swapped. Reported as metadata only;
/// the classes are never merged.
pub fn diagram_identifications<S: Scalar>(rs: &RootSystem<S>) -> Vec<(usize, usize)> {
    match rs.rst().family {
        Family::A => {
            let n = rs.rst().rank;
            (1..=n).filter(|&j| j < n - j + 1).map(|j| (j, n - j + 1)).collect()
        }
        Family::D => {
            let n = rs.rst().rank;
            vec![(n - 1, n)]
        }
        Family::E6 => vec![(1, 6)],
        _ => Vec::new(),
    }
}

/// JSON report for one root system:
/// {family, rank, euler: [labels], symmetric: [labels], class_counts}.
pub fn classify_json<S: Scalar>(rs: &RootSystem<S>) -> Value {
    let elements = euler_elements(rs);
    let euler_labels: Vec<usize> = elements.iter().filter_map(|e| e.label).collect();
    let symmetric_labels: Vec<usize> = elements
        .iter()
        .filter(|e| is_symmetric(rs, e))
        .filter_map(|e| e.label)
        .collect();
    json!({
        "family": format!("{:?}", rs.rst().family),
        "rank": rs.rst().rank,
        "euler": euler_labels,
        "symmetric": symmetric_labels,
        "class_counts": {
            "symmetric_classes": symmetric_class_count(rs),
        },
        "coweights": elements.iter().map(|e| vec_json(&e.coweight)).collect::<Vec<_>>(),
        "diagram_identifications": diagram_identifications(rs),
    })
}

/// The classical list of Euler dual-basis labels for a family/rank, used as
/// an independent oracle in tests and for table reproduction.
pub fn expected_euler_labels(family: Family, rank: usize) -> Vec<usize> {
    match family {
        Family::A => (1..=rank).collect(),
        Family::B => vec![1],
        Family::C => vec![rank],
        Family::D => vec![1, rank - 1, rank],
        Family::E6 => vec![1, 6],
        Family::E7 => vec![7],
        Family::E8 | Family::F4 | Family::G2 | Family::BC => Vec::new(),
    }
}

/// The classical list of symmetric Euler labels for a family/rank, used as
/// an independent oracle in tests and for table reproduction.
pub fn expected_symmetric_labels(family: Family, rank: usize) -> Vec<usize> {
    match family {
        Family::A => {
            if rank % 2 == 1 {
                vec![(rank + 1) / 2]
            } else {
                Vec::new()
            }
        }
        Family::B => vec![1],
        Family::C => vec![rank],
        Family::D => {
            if rank % 2 == 0 {
                vec![1, rank - 1, rank]
            } else {
                vec![1]
            }
        }
        Family::E7 => vec![7],
        Family::E6 | Family::E8 | Family::F4 | Family::G2 | Family::BC => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystemType;
    use crate::Rat;

    fn rs(family: Family, rank: usize) -> RootSystem<Rat> {
        RootSystem::build(RootSystemType::new(family, rank).unwrap()).unwrap()
    }

    fn all_systems(max_rank: usize) -> Vec<RootSystem<Rat>> {
        let mut out = Vec::new();
        for n in 1..=max_rank {
            out.push(rs(Family::A, n));
            out.push(rs(Family::BC, n));
        }
        for n in 2..=max_rank {
            out.push(rs(Family::B, n));
            out.push(rs(Family::C, n));
        }
        for n in 3..=max_rank {
            out.push(rs(Family::D, n));
        }
        out.push(rs(Family::E6, 6));
        out.push(rs(Family::E7, 7));
        out.push(rs(Family::E8, 8));
        out.push(rs(Family::F4, 4));
        out.push(rs(Family::G2, 2));
        out
    }

    #[test]
    fn euler_detection_spot_checks() {
        let a3 = rs(Family::A, 3);
        assert!(is_euler(&a3, &a3.dual_basis()[1]));

        let c3 = rs(Family::C, 3);
        assert!(!is_euler(&c3, &c3.dual_basis()[0])); // 2ε_1 evaluates to 2

        let zero = vec![Rat::from_integer(0.into()); 3];
        assert!(!is_euler(&c3, &zero));
    }

    #[test]
    fn euler_negation_symmetry() {
        for system in [rs(Family::A, 4), rs(Family::D, 4), rs(Family::C, 3)] {
            for h in system.dual_basis() {
                assert_eq!(is_euler(&system, &h), is_euler(&system, &vneg(&h)));
            }
        }
    }

    #[test]
    fn euler_lists_match_oracle_up_to_rank_8() {
        for system in all_systems(8) {
            let labels: Vec<usize> = euler_elements(&system)
                .iter()
                .filter_map(|e| e.label)
                .collect();
            let mut expected =
                expected_euler_labels(system.rst().family, system.rst().rank);
            expected.sort_unstable();
            expected.dedup(); // D_3: h_{n−1} with n = 3 collides with nothing; keep sorted
            assert_eq!(labels, expected, "family {:?}", system.rst());
        }
    }

    #[test]
    fn symmetry_matches_oracle_up_to_rank_8() {
        for system in all_systems(8) {
            let mut expected =
                expected_symmetric_labels(system.rst().family, system.rst().rank);
            expected.sort_unstable();
            expected.dedup();
            let got: Vec<usize> = euler_elements(&system)
                .into_iter()
                .filter(|e| is_symmetric(&system, e))
                .filter_map(|e| e.label)
                .collect();
            assert_eq!(got, expected, "family {:?}", system.rst());
        }
    }

    #[test]
    fn symmetric_class_counts() {
        assert_eq!(symmetric_class_count(&rs(Family::D, 6)), 3);
        assert_eq!(symmetric_class_count(&rs(Family::D, 4)), 3);
        assert_eq!(symmetric_class_count(&rs(Family::D, 5)), 1);
        assert_eq!(symmetric_class_count(&rs(Family::E7, 7)), 1);
        assert_eq!(symmetric_class_count(&rs(Family::E6, 6)), 0);
        assert_eq!(symmetric_class_count(&rs(Family::A, 5)), 1);
        assert_eq!(symmetric_class_count(&rs(Family::A, 4)), 0);
        assert_eq!(symmetric_class_count(&rs(Family::B, 4)), 1);
        assert_eq!(symmetric_class_count(&rs(Family::F4, 4)), 0);
    }

    #[test]
    fn non_members_fail_is_euler() {
        for system in all_systems(6) {
            let expected = expected_euler_labels(system.rst().family, system.rst().rank);
            for (i, h) in system.dual_basis().iter().enumerate() {
                assert_eq!(
                    is_euler(&system, h),
                    expected.contains(&(i + 1)),
                    "{:?} h_{}",
                    system.rst(),
                    i + 1
                );
            }
        }
    }
}
