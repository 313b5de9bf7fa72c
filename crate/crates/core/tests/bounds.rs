//! Cross-checks between the bound search, the chains, and the upper
//! estimates.

use crossplane::bounds::{
    best_lower_bound, bipartite_chain, chain_certificate, complete_chain, format_rational,
    kplanar_seed_bound, upper_bound_estimate, verify_certificate, BoundCertificate, ChainMode,
    Family, Instance,
};

#[test]
fn search_dominates_hand_built_chains() {
    for end in 21..=40 {
        let chained = bipartite_chain(15, end, 203, ChainMode::Nested).unwrap();
        let best = best_lower_bound(Instance::Bipartite(end, end), 2)
            .unwrap()
            .value;
        assert!(best >= chained, "K_{{{end},{end}}}: {best} < {chained}");
    }
    for end in 25..=80 {
        let chained = complete_chain(25, end, 435).unwrap();
        let best = best_lower_bound(Instance::Complete(end), 2).unwrap().value;
        assert!(best >= chained, "K_{end}: {best} < {chained}");
    }
}

#[test]
fn lower_bounds_stay_below_upper_estimates() {
    for k in 1..=4 {
        for n in 5..=120 {
            let lower = best_lower_bound(Instance::Complete(n), k).unwrap().value;
            let upper = upper_bound_estimate(Instance::Complete(n), k).unwrap();
            assert!(
                num_rational::BigRational::from_integer(lower.into()) <= upper,
                "k={k} K_{n}: {lower} > {}",
                format_rational(&upper)
            );
        }
        for p in (3..=60).step_by(3) {
            let i = Instance::Bipartite(p, p + 1);
            let lower = best_lower_bound(i, k).unwrap().value;
            let upper = upper_bound_estimate(i, k).unwrap();
            assert!(
                num_rational::BigRational::from_integer(lower.into()) <= upper,
                "k={k} {i}"
            );
        }
    }
}

#[test]
fn more_planes_never_raise_the_bound() {
    for n in [10, 40, 150, 400] {
        let values: Vec<u128> = (1..=6)
            .map(|k| best_lower_bound(Instance::Complete(n), k).unwrap().value)
            .collect();
        assert!(values.windows(2).all(|w| w[0] >= w[1]), "K_{n}: {values:?}");
    }
}

#[test]
fn seeds_and_chains_survive_a_json_round_trip() {
    let mut certs = Vec::new();
    for k in 1..=5 {
        certs.push(kplanar_seed_bound(Family::Complete, k).unwrap());
        certs.push(kplanar_seed_bound(Family::Bipartite, k).unwrap());
    }
    for mode in [ChainMode::PerStep, ChainMode::Nested] {
        certs.push(
            chain_certificate(
                Instance::Bipartite(15, 15),
                Instance::Bipartite(21, 21),
                2,
                mode,
            )
            .unwrap(),
        );
    }
    certs.push(
        chain_certificate(
            Instance::Complete(25),
            Instance::Complete(57),
            2,
            ChainMode::PerStep,
        )
        .unwrap(),
    );
    for c in certs {
        let back = BoundCertificate::from_json(&c.to_json().unwrap()).unwrap();
        assert_eq!(back, c);
        assert!(
            verify_certificate(&back).is_valid(),
            "{}",
            verify_certificate(&back)
        );
    }
}

#[test]
fn unknown_fields_are_rejected() {
    let c = best_lower_bound(Instance::Complete(12), 2).unwrap();
    let mut doc: serde_json::Value = serde_json::to_value(&c).unwrap();
    doc["note"] = "extra".into();
    assert!(BoundCertificate::from_json(&doc.to_string()).is_err());
}
