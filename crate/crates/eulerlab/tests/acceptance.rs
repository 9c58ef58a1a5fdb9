//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`).

use std::time::{Duration, Instant};

use eulerlab::catalog::{entry_by_name, load_catalog, Realization, SigmaStar, SoLabel, TypeTag};
use eulerlab::central::{zeta_difference, CentralData, FactorClass, LoopClass};
use eulerlab::euler::{
    euler_elements, expected_euler_labels, expected_symmetric_labels, is_symmetric,
    symmetric_class_count,
};
use eulerlab::matrixlie::{
    component_label, roundtrip_battery, so22_report, MatFamily, MatrixAlgebra, PairRealization,
};
use eulerlab::pairs::{
    classify_sign_vector, is_symmetric_pair, orbit_of_sign_vectors, pair_classes, SignVector,
};
use eulerlab::pi1::{
    cross_check_pi1, pi1_structure, pi1_with_radical, AlgebraDescriptor, FgKind,
    RadicalDescriptor,
};
use eulerlab::rootsys::{Family, RootSystem, RootSystemType};
use eulerlab::scalar::int;
use eulerlab::Rat;

fn criterion(n: u32, name: &str, ok: bool) {
    println!(
        "criterion {n:02} {name}: {}",
        if ok { "pass" } else { "fail" }
    );
    assert!(ok, "criterion {n:02} {name} failed");
}

fn all_types_up_to_rank_8() -> Vec<RootSystemType> {
    let families = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E6,
        Family::E7,
        Family::E8,
        Family::F4,
        Family::G2,
        Family::BC,
    ];
    let mut out = Vec::new();
    for family in families {
        for rank in 1..=8 {
            if let Ok(rst) = RootSystemType::new(family, rank) {
                out.push(rst);
            }
        }
    }
    out
}

fn closed(w: i64) -> FactorClass {
    FactorClass {
        minus_endpoint: false,
        double_winding: 2 * w,
    }
}

fn loop_of(factors: Vec<FactorClass>) -> LoopClass {
    LoopClass { factors }
}

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
fn criterion_01_euler_element_lists() {
    let start = Instant::now();
    let mut ok = true;
    for rst in all_types_up_to_rank_8() {
        let rs: RootSystem<Rat> = RootSystem::build(rst).expect("type builds");
        let labels: Vec<usize> = euler_elements(&rs).iter().filter_map(|e| e.label).collect();
        ok &= labels == expected_euler_labels(rst.family, rst.rank);
    }
    ok &= start.elapsed() < Duration::from_secs(5);
    criterion(1, "euler element lists for every family up to rank 8", ok);
}

#[test]
fn criterion_02_symmetric_euler_table() {
    let start = Instant::now();
    let mut ok = true;
    for rst in all_types_up_to_rank_8() {
        let rs: RootSystem<Rat> = RootSystem::build(rst).expect("type builds");
        let elements = euler_elements(&rs);
        let symmetric: Vec<usize> = elements
            .iter()
            .filter(|e| is_symmetric(&rs, e))
            .filter_map(|e| e.label)
            .collect();
        ok &= symmetric == expected_symmetric_labels(rst.family, rst.rank);
        ok &= symmetric_class_count(&rs) == symmetric.len();
    }
    ok &= start.elapsed() < Duration::from_secs(10);
    criterion(2, "symmetric euler elements for every family up to rank 8", ok);
}

#[test]
fn criterion_03_pair_class_counts_with_orbit_oracle() {
    let mut ok = true;
    for entry in load_catalog() {
        let classes = pair_classes(&entry);
        let expected = match entry.sigma_star {
            SigmaStar::A(_) => entry.rank_r + 1,
            SigmaStar::C(_) => 1,
            SigmaStar::D(_) => 2,
        };
        ok &= classes.len() == expected;
        // Brute-force Weyl orbits: two sign vectors share a class exactly
        // when the generated orbit connects them.
        let vectors = all_sign_vectors(entry.rank_r);
        for sigma in &vectors {
            let cls = classify_sign_vector(&entry, sigma).expect("length matches");
            let orbit = orbit_of_sign_vectors(&entry, sigma).expect("rank small");
            ok &= orbit.contains(&SignVector::representative(cls.j, entry.rank_r));
            for tau in &vectors {
                let same = classify_sign_vector(&entry, tau).expect("length matches").j == cls.j;
                ok &= same == orbit.contains(tau);
            }
        }
    }
    criterion(3, "pair class counts match brute-force orbits", ok);
}

#[test]
fn criterion_04_symmetric_pair_criterion() {
    let mut ok = true;
    for entry in load_catalog() {
        for cls in pair_classes(&entry) {
            // Independent oracle: the pair is symmetric exactly when the
            // negated representative stays in the same class.
            let neg = cls.representative.negate();
            let neg_class = classify_sign_vector(&entry, &neg).expect("length matches");
            ok &= is_symmetric_pair(&entry, &cls) == (neg_class.j == cls.j);
        }
    }
    criterion(4, "symmetric pair criterion agrees with the negation oracle", ok);
}

#[test]
fn criterion_05_pi1_double_computation() {
    let mut ok = true;
    for entry in load_catalog() {
        ok &= cross_check_pi1(&entry).expect("multiplicities present");
        let expected = match entry.type_tag {
            TypeTag::Cayley => FgKind::Z,
            TypeTag::Split => FgKind::Z2,
            TypeTag::NonSplit | TypeTag::Complex => FgKind::Trivial,
        };
        ok &= pi1_structure(&entry).kind == expected;
    }
    criterion(5, "pi1 by structure theory and flag manifolds agree", ok);
}

#[test]
fn criterion_06_matrix_algebra_battery() {
    let start = Instant::now();
    let mut ok = true;
    let mut families: Vec<MatFamily> = (2..=6).map(MatFamily::Sl).collect();
    for p in 1..=7 {
        for q in p..=7 {
            if p + q <= 8 {
                families.push(MatFamily::So(p, q));
            }
        }
    }
    families.extend((1..=3).map(MatFamily::Sp));
    for family in families {
        let alg = MatrixAlgebra::build(family).expect("family builds");
        ok &= alg.dim() == family.dim();
        ok &= alg.bracket_closure_check();
    }
    ok &= start.elapsed() < Duration::from_secs(60);
    criterion(6, "matrix algebra battery (sl, so, sp)", ok);
}

#[test]
fn criterion_07_winding_classes() {
    let mut ok = true;
    // Lorentzian boosts so(2,d): the top representative winds once in the
    // SO(2) factor, the middle one once in the SO(d) factor.
    for d in 2..=6 {
        let data = CentralData::from_realization(Realization::SoPQ {
            p: 2,
            q: d,
            label: SoLabel::Boost,
        })
        .expect("realization builds");
        ok &= data.zeta(2).expect("zeta") == loop_of(vec![closed(1), closed(0)]);
        ok &= data.zeta(1).expect("zeta") == loop_of(vec![closed(0), closed(1)]);
        // class(z_1, 4*pi) winds once in each factor.
        ok &= data.z1_class(&int(2)).expect("z1 class")
            == loop_of(vec![closed(1), closed(1)]);
    }
    // The pinned so(2,2) worked example agrees entry by entry.
    ok &= so22_report()["pass"].as_bool().unwrap_or(false);
    // Every realized boost entry with p, q >= 2 has the same (1, 1bar) form.
    for name in ["so23", "so24", "so25", "so26", "soP1Q1_p2_q2", "soP1Q1_p2_q3", "soP1Q1_p3_q3"] {
        let entry = entry_by_name(name).expect("entry exists");
        let data = CentralData::for_entry(&entry).expect("realized");
        ok &= data.z1_class(&int(2)).expect("z1 class")
            == loop_of(vec![closed(1), closed(1)]);
    }
    // sl(n, R), n >= 3: class(z_1, 4*pi) generates the Z2 of SO(n).
    for n in 3..=6 {
        let data = CentralData::from_realization(Realization::SlR { n, p: n / 2 })
            .expect("realization builds");
        let g = data.z1_class(&int(2)).expect("z1 class");
        ok &= g == loop_of(vec![closed(1)]);
        ok &= !g.is_identity();
        ok &= data.model.compose(&g, &g).is_identity();
    }
    criterion(7, "winding classes of the rotation generators", ok);
}

#[test]
fn criterion_08_z_lattice() {
    let mut ok = true;
    for entry in load_catalog() {
        if entry.classification_only {
            continue;
        }
        let data = CentralData::for_entry(&entry).expect("realized");
        let lat = eulerlab::central::z3_subgroup(&data).expect("lattice builds");
        // Z2 is generated by class(z_1, 4*pi) and realizes pi1 of the orbit.
        ok &= lat.z2_iso() == pi1_structure(&entry).kind;
        // Z2 <= Z3 with index at most 2.
        ok &= lat.z2.iter().all(|g| lat.z3_contains(g));
        let index = lat.index_z3_z2().expect("index bound");
        ok &= index <= 2;
        if data.real.pairs_available {
            // Z3 is generated over Z2 by the zeta classes, whose pairwise
            // differences land in Z2.
            for &j in &data.class_indices() {
                ok &= lat.z3_contains(&data.zeta(j).expect("zeta"));
                for &m in &data.class_indices() {
                    ok &= lat.z2_contains(&zeta_difference(&data, j, m).expect("difference"));
                }
            }
        }
        // Lorentzian so(2,d): Z2 has index 2 and Z3 is the full group.
        if entry.name.starts_with("so2") {
            ok &= index == 2;
            ok &= lat.z3_contains(&loop_of(vec![closed(1), closed(0)]));
            ok &= lat.z3_contains(&loop_of(vec![closed(0), closed(1)]));
        }
    }
    criterion(8, "lattice Z1 <= Z2 <= Z3 with index bound", ok);
}

#[test]
fn criterion_09_jordan_batteries() {
    let start = Instant::now();
    let mut ok = true;
    for entry in load_catalog() {
        let Some(spec) = entry.realization else { continue };
        let real = PairRealization::build(spec).expect("realization builds");
        if real.pairs_available {
            // At least 100 seeded random invertible elements per entry;
            // the round trip must recover x and invertibility must match
            // sl(2)-triple success on every draw.
            let battery = roundtrip_battery(&real.decomp, 0x5eed, 100).expect("battery runs");
            ok &= battery.invertible_tested >= 100;
            ok &= battery.roundtrip_failures == 0;
            ok &= battery.equivalence_failures == 0;
            // Components of the invertible set match the pair classes.
            let classes = pair_classes(&entry);
            let mut labels: Vec<String> = Vec::new();
            for cls in &classes {
                let k = real.k_signed(&cls.representative.0);
                let x = real.decomp.project(&k, 1).expect("projects").scale(&int(2));
                labels.push(component_label(&real, &x).expect("labels"));
            }
            let mut distinct = labels.clone();
            distinct.sort();
            distinct.dedup();
            ok &= distinct.len() == classes.len();
            // Every sign vector lands in the component of its class.
            for sigma in all_sign_vectors(entry.rank_r) {
                let cls = classify_sign_vector(&entry, &sigma).expect("length matches");
                let pos = classes.iter().position(|c| c.j == cls.j).expect("class listed");
                let k = real.k_signed(&sigma.0);
                let x = real.decomp.project(&k, 1).expect("projects").scale(&int(2));
                ok &= component_label(&real, &x).expect("labels") == labels[pos];
            }
        } else {
            // No Jordan unit (h not symmetric): invertibility must still
            // match triple success; here every draw is singular.
            let battery = roundtrip_battery(&real.decomp, 0x5eed, 0).expect("battery runs");
            ok &= battery.equivalence_failures == 0;
        }
    }
    ok &= start.elapsed() < Duration::from_secs(60);
    criterion(9, "jordan round trips and invertible components", ok);
}

#[test]
fn criterion_10_levi_reduction() {
    // Poincare algebra: translations R^{1,3} + so(1,3); the radical drops
    // out and the Lorentz part is simply connected at orbit level.
    let poincare = AlgebraDescriptor {
        radical: RadicalDescriptor::Abelian {
            dim: 4,
            module: "R^{1,3}".to_string(),
        },
        components: vec![(entry_by_name("so13").expect("entry"), true)],
    };
    let g = pi1_with_radical(&poincare).expect("nonzero component");
    let mut ok = g.free_rank == 0 && g.two_torsion_rank == 0;

    // Conformal algebra so(2,4) of Minkowski space: pi1 = Z.
    let conformal = AlgebraDescriptor {
        radical: RadicalDescriptor::None,
        components: vec![(entry_by_name("so24").expect("entry"), true)],
    };
    let g = pi1_with_radical(&conformal).expect("nonzero component");
    ok &= g.free_rank == 1 && g.two_torsion_rank == 0;

    criterion(10, "levi reduction for poincare and conformal algebras", ok);
}
