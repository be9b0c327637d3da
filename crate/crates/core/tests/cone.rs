//! Effective-cone certificates: frozen facet data for small torsion orders,
//! membership checks, extremal-ray extraction, and the infinite-order
//! ladder that certifies nothing.

use num_traits::{Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symsquare_core::cone::{
    accumulation_check, effective_cone_xtilde, extremal_rays, gamma_dn_pairing, xtilde_null_class,
    ConeError, ConeSpec, Polyhedrality, TorsionOrder, Verdict,
};
use symsquare_core::surfaces::{build_xtilde_g1, dn_class, gamma_class};
use symsquare_core::verify::{light_cone_samples, SAMPLE_SEED};
use symsquare_core::{rat, rint};

#[test]
fn finite_order_cones_certify_containment() {
    for m in 2..=12u64 {
        let (spec, cert) = effective_cone_xtilde(TorsionOrder::Finite(m), 1).unwrap();
        let expected_gens = (m.div_ceil(2) + 3) as usize;
        assert_eq!(spec.generators().len(), expected_gens, "order {m}");
        assert_eq!(cert.facets().len(), expected_gens, "order {m}");
        assert_eq!(cert.verdict(), Verdict::ContainsLightCone, "order {m}");
        assert_eq!(cert.polyhedral(), Polyhedrality::Polyhedral, "order {m}");
        assert!(cert.all_nsd(), "order {m}");
    }
}

#[test]
fn order_six_certificate_is_frozen() {
    let (spec, cert) = effective_cone_xtilde(TorsionOrder::Finite(6), 1).unwrap();
    let mut labels = spec.labels().to_vec();
    labels.sort();
    assert_eq!(labels, vec!["-K", "D0", "D1", "D2", "Delta-", "Gamma6"]);
    // The cyclic facet walk, starting from the angular sort.
    let pairs: Vec<(&str, &str)> = cert
        .facets()
        .iter()
        .map(|f| (f.left.as_str(), f.right.as_str()))
        .collect();
    assert_eq!(
        pairs,
        vec![
            ("D0", "D1"),
            ("D1", "D2"),
            ("D2", "Gamma6"),
            ("Gamma6", "-K"),
            ("-K", "Delta-"),
            ("Delta-", "D0"),
        ]
    );
    // Three frozen facet Gram matrices.
    let gram_of = |l: &str, r: &str| {
        cert.facets()
            .iter()
            .find(|f| f.left == l && f.right == r)
            .unwrap_or_else(|| panic!("facet {l}/{r} missing"))
            .gram
            .clone()
    };
    let g = gram_of("-K", "Delta-");
    assert_eq!(
        (g.at(0, 0), g.at(0, 1), g.at(1, 1)),
        (&rint(0), &rint(0), &rint(-2))
    );
    let g = gram_of("Delta-", "D0");
    assert_eq!(
        (g.at(0, 0), g.at(0, 1), g.at(1, 1)),
        (&rint(-2), &rint(1), &rat(-1, 2))
    );
    let g = gram_of("D0", "D1");
    assert_eq!(
        (g.at(0, 0), g.at(0, 1), g.at(1, 1)),
        (&rat(-1, 2), &rat(1, 2), &rat(-1, 2))
    );
    for f in cert.facets() {
        assert!(f.nsd, "facet {}/{} must be NSD", f.left, f.right);
    }
}

#[test]
fn anticanonical_ray_is_interior_to_an_edge_for_finite_order() {
    // 2·Γ_m + Δ₋ = −m·K identically, so −K lies on the hull edge between
    // Γ_m and Δ₋ and is not an extremal ray of any finite-order cone.
    let model = build_xtilde_g1().unwrap();
    let k = model.class("K").unwrap();
    let delta_minus = model.class("Delta-").unwrap();
    for m in 2..=9u64 {
        let gamma = gamma_class(&model, m).unwrap();
        let lhs = gamma.scale(&rint(2)).unwrap().add(delta_minus).unwrap();
        assert_eq!(lhs, k.scale(&rint(-(m as i64))).unwrap());

        let (spec, _) = effective_cone_xtilde(TorsionOrder::Finite(m), 1).unwrap();
        let rays = extremal_rays(&spec).unwrap();
        assert_eq!(rays.len(), spec.generators().len() - 1, "order {m}");
        // No extremal ray is proportional to −K = (2, 0, −2).
        let minus_k = k.neg();
        for r in &rays {
            let proportional = {
                let (a, b) = (r.free(), minus_k.free());
                let cross01 = &a[0] * &b[1] - &a[1] * &b[0];
                let cross02 = &a[0] * &b[2] - &a[2] * &b[0];
                cross01.is_zero() && cross02.is_zero()
            };
            assert!(!proportional, "order {m} kept the anticanonical ray");
        }
    }
}

#[test]
fn membership_accepts_generators_and_rejects_their_negatives() {
    let (spec, _) = effective_cone_xtilde(TorsionOrder::Finite(7), 1).unwrap();
    for g in spec.generators() {
        assert!(spec.contains(g).unwrap());
        assert!(!spec.contains(&g.neg()).unwrap());
    }
    // Conic combinations stay inside.
    let sum = spec.generators()[0]
        .add(&spec.generators()[2])
        .unwrap()
        .add(&spec.generators()[4].scale(&rat(7, 3)).unwrap())
        .unwrap();
    assert!(spec.contains(&sum).unwrap());
}

#[test]
fn light_cone_samples_lie_in_every_finite_cone() {
    let model = build_xtilde_g1().unwrap();
    let samples = light_cone_samples(&model, 200, SAMPLE_SEED).unwrap();
    for m in [2u64, 5, 9] {
        let (spec, cert) = effective_cone_xtilde(TorsionOrder::Finite(m), 1).unwrap();
        assert_eq!(cert.verdict(), Verdict::ContainsLightCone);
        for s in &samples {
            assert!(
                spec.contains(s).unwrap(),
                "sample escapes the order-{m} cone"
            );
        }
    }
}

#[test]
fn null_classes_are_isotropic_and_positive_against_the_reference() {
    let model = build_xtilde_g1().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    use rand::Rng;
    for _ in 0..50 {
        let t = rat(rng.gen_range(-40..=40), rng.gen_range(1..=9));
        let null = xtilde_null_class(&model, &t).unwrap();
        assert_eq!(null.self_int(), rint(0));
    }
}

#[test]
fn pairing_closed_form_and_sign_boundary() {
    assert_eq!(gamma_dn_pairing(6, 0).unwrap(), rat(5, 2));
    assert_eq!(gamma_dn_pairing(6, 2).unwrap(), rat(1, 2));
    assert_eq!(gamma_dn_pairing(6, 3).unwrap(), rat(-1, 2));
    // Odd order exactly hits zero at n = (m−1)/2.
    assert_eq!(gamma_dn_pairing(7, 3).unwrap(), rint(0));
    for m in 2..=12u64 {
        for n in 0..=(m + 2) {
            let p = gamma_dn_pairing(m, n).unwrap();
            assert_eq!(p, rat(m as i64 - 1, 2) - rint(n as i64));
            // Nonnegative exactly below the generator cut-off ⌈m/2⌉; odd
            // orders are tangent (pairing zero) at the last generator.
            assert_eq!(!p.is_negative(), n < m.div_ceil(2), "m={m} n={n}");
        }
    }
}

#[test]
fn infinite_order_ladder_never_certifies() {
    for n in [1u64, 5, 30] {
        let (spec, cert) = effective_cone_xtilde(TorsionOrder::Infinite, n).unwrap();
        assert_eq!(spec.generators().len() as u64, n + 3);
        assert_eq!(cert.facets().len() as u64, n + 2);
        assert_eq!(cert.verdict(), Verdict::NotCertified);
        assert_eq!(cert.polyhedral(), Polyhedrality::NonPolyhedralLadder(n));
        assert!(cert.all_nsd());
        assert_eq!(
            cert.polyhedral().describe(),
            format!("non-polyhedral (certified ladder to {n})")
        );
    }
    assert!(matches!(
        effective_cone_xtilde(TorsionOrder::Infinite, 0),
        Err(ConeError::LadderTooShort(0))
    ));
}

#[test]
fn ladder_rays_accumulate_toward_the_anticanonical_direction() {
    assert!(accumulation_check(40).unwrap());
}

#[test]
fn cone_construction_guards() {
    let model = build_xtilde_g1().unwrap();
    let h = model
        .lattice()
        .free_class(vec![rint(4), rint(-1), rint(-1)])
        .unwrap();
    // Zero generator.
    let zero = model.lattice().zero_class();
    assert!(matches!(
        ConeSpec::new(vec![zero], vec!["0".into()], h.clone()),
        Err(ConeError::ZeroGenerator(0))
    ));
    // Non-transversal generator: pairs non-positively with the reference.
    let d0 = dn_class(&model, 0).unwrap();
    assert!(ConeSpec::new(vec![d0.neg()], vec!["-D0".into()], h.clone()).is_err());
    // Negative reference square.
    let e = model.class("E").unwrap().clone();
    assert!(matches!(
        ConeSpec::new(vec![d0.clone()], vec!["D0".into()], e),
        Err(ConeError::NonPositiveReference(_))
    ));
    // Label count mismatch.
    assert!(ConeSpec::new(vec![d0], vec![], h).is_err());
}

#[test]
fn duplicate_rays_cannot_be_certified() {
    let model = build_xtilde_g1().unwrap();
    let h = model
        .lattice()
        .free_class(vec![rint(4), rint(-1), rint(-1)])
        .unwrap();
    let d0 = dn_class(&model, 0).unwrap();
    let double = d0.scale(&rint(2)).unwrap();
    let d1 = dn_class(&model, 1).unwrap();
    let spec = ConeSpec::new(
        vec![d0, double, d1],
        vec!["a".into(), "b".into(), "c".into()],
        h,
    )
    .unwrap();
    assert!(spec.facet_certificates().is_err());
}

#[test]
fn membership_works_across_model_instances() {
    // Classes built from a fresh model instance are structurally equal and
    // must interoperate with a cone built from another instance.
    let (spec, _) = effective_cone_xtilde(TorsionOrder::Finite(4), 1).unwrap();
    let other_model = build_xtilde_g1().unwrap();
    let foreign = dn_class(&other_model, 1).unwrap();
    assert!(spec.contains(&foreign).unwrap());
    let outside = other_model.class("Delta-").unwrap().neg();
    assert!(!spec.contains(&outside).unwrap());
}

#[test]
fn extremal_rays_of_the_ladder_keep_every_rung() {
    let (spec, _) = effective_cone_xtilde(TorsionOrder::Infinite, 12).unwrap();
    let rays = extremal_rays(&spec).unwrap();
    // −K is in the closure of the D_n directions but, at any finite
    // truncation, every listed generator is still extremal except none.
    assert_eq!(rays.len(), spec.generators().len());
}

#[test]
fn torsion_order_display_matches_cli_conventions() {
    assert_eq!(TorsionOrder::Finite(6).to_string(), "6");
    assert_eq!(TorsionOrder::Infinite.to_string(), "infinity");
}

#[test]
fn membership_rejects_foreign_rank() {
    let (spec, _) = effective_cone_xtilde(TorsionOrder::Finite(3), 1).unwrap();
    let z = symsquare_core::surfaces::build_z().unwrap();
    let foreign = z.class("E").unwrap();
    assert!(matches!(
        spec.contains(foreign),
        Err(ConeError::LatticeMismatch)
    ));
}

#[test]
fn boundary_points_of_the_cone_are_members() {
    // Points on a facet (conic combinations of two adjacent generators)
    // are members: the cone is closed.
    let (spec, cert) = effective_cone_xtilde(TorsionOrder::Finite(8), 1).unwrap();
    let by_label = |l: &str| {
        let i = spec.labels().iter().position(|x| x == l).unwrap();
        spec.generators()[i].clone()
    };
    for f in cert.facets() {
        let edge = by_label(&f.left)
            .scale(&rat(2, 5))
            .unwrap()
            .add(&by_label(&f.right).scale(&rat(3, 5)).unwrap())
            .unwrap();
        assert!(spec.contains(&edge).unwrap());
    }
    // Pushing past the Γ₈ vertex along the flat edge line leaves the cone
    // (−K tilted toward Γ only slides along the boundary and stays in).
    let along_edge = by_label("-K")
        .scale(&rat(1001, 1000))
        .unwrap()
        .sub(&by_label("Delta-").scale(&rat(1, 1000)).unwrap())
        .unwrap();
    assert!(spec.contains(&along_edge).unwrap());
    let past_vertex = by_label("Gamma8")
        .sub(&by_label("Delta-").scale(&rat(1, 1000)).unwrap())
        .unwrap();
    assert!(!spec.contains(&past_vertex).unwrap());
}
