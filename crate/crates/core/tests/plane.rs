//! Planar fat-point model: frozen configuration data, interpolation-system
//! shapes, and an independent multiplicity oracle that restricts the
//! computed curves to pencils of lines and counts vanishing orders.

use num_traits::Zero;
use symsquare_core::plane::{
    build_config, default_config, dn_plane_data, interpolation_matrix, kernel_curve,
    monomial_basis, oracle_unique_curve, FatPoint, FatPointSpec, OracleReport, PlaneError,
};
use symsquare_core::poly::{BinaryPoly, ProjPoint3, TernaryPoly};
use symsquare_core::{rat, rint};

#[test]
fn standard_configuration_is_frozen() {
    let cfg = default_config();
    let coords = |p: &ProjPoint3| p.coords().to_vec();
    assert_eq!(coords(&cfg.points()[0]), vec![rint(1), rint(0), rint(0)]);
    assert_eq!(coords(&cfg.points()[1]), vec![rint(1), rint(1), rint(2)]);
    assert_eq!(coords(&cfg.points()[2]), vec![rint(1), rint(1), rint(-2)]);
    assert_eq!(coords(&cfg.points()[3]), vec![rint(1), rint(4), rint(4)]);
    assert_eq!(coords(cfg.q()), vec![rint(1), rint(9), rint(6)]);
    // Diagonal points of the complete quadrilateral on the four points.
    assert_eq!(coords(&cfg.diagonals()[0]), vec![rint(0), rint(1), rint(2)]);
    assert_eq!(
        coords(&cfg.diagonals()[1]),
        vec![rint(1), rat(-1, 2), rint(1)]
    );
    assert_eq!(coords(&cfg.diagonals()[2]), vec![rint(1), rint(1), rint(1)]);
    // All four marked points and q are on the conic; no diagonal point is.
    for p in cfg.points() {
        assert_eq!(cfg.conic().eval(p.coords()), rint(0));
    }
    assert_eq!(cfg.conic().eval(cfg.q().coords()), rint(0));
    for d in cfg.diagonals() {
        assert!(cfg.conic().eval(d.coords()) != rint(0));
    }
    assert!(cfg.tangent().contains(cfg.q()));
}

#[test]
fn first_two_systems_have_corank_one() {
    let cfg = default_config();
    let spec1 = dn_plane_data(&cfg, 1).unwrap();
    assert_eq!(
        oracle_unique_curve(&spec1).unwrap(),
        OracleReport {
            rows: 14,
            cols: 15,
            rank: 14,
            kernel_dim: 1,
            exists: true,
            unique: true,
        }
    );
    let spec2 = dn_plane_data(&cfg, 2).unwrap();
    assert_eq!(
        oracle_unique_curve(&spec2).unwrap(),
        OracleReport {
            rows: 119,
            cols: 120,
            rank: 119,
            kernel_dim: 1,
            exists: true,
            unique: true,
        }
    );
}

#[test]
fn alternate_generic_configuration_matches() {
    let cfg = build_config([rint(1), rint(-2), rat(1, 2), rint(3), rint(-1)]).unwrap();
    let spec = dn_plane_data(&cfg, 1).unwrap();
    let report = oracle_unique_curve(&spec).unwrap();
    assert_eq!((report.rows, report.cols, report.rank), (14, 15, 14));
    assert!(report.exists && report.unique);
}

#[test]
fn interpolation_matrix_shape_follows_the_conditions() {
    let cfg = default_config();
    for n in 1..=3u64 {
        let spec = dn_plane_data(&cfg, n).unwrap();
        let m = interpolation_matrix(&spec).unwrap();
        assert_eq!(m.rows(), spec.condition_count());
        assert_eq!(m.cols(), monomial_basis(spec.degree()).len());
        assert_eq!(m.cols(), (spec.degree() + 1) * (spec.degree() + 2) / 2);
        assert_eq!(spec.arithmetic_genus(), rint(0));
        // Corank one: one more unknown than independent conditions.
        assert_eq!(m.cols(), spec.condition_count() + 1);
    }
}

/// Restricts a ternary form to the line through `a` and `b` (parametrized
/// `s·a + t·b`) and returns the vanishing order at `a`, i.e. at `(1 : 0)`.
fn vanishing_order_along(curve: &TernaryPoly, a: &ProjPoint3, b: &ProjPoint3) -> usize {
    let param: [BinaryPoly; 3] = std::array::from_fn(|i| {
        BinaryPoly::new(vec![a.coords()[i].clone(), b.coords()[i].clone()]).unwrap()
    });
    let restricted = curve.compose_binary(&param).unwrap();
    assert!(
        !restricted.is_zero(),
        "the probe line must not be a component of the curve"
    );
    restricted.root_multiplicity(&rint(1), &rint(0)).unwrap()
}

#[test]
fn first_curve_has_the_assigned_multiplicities() {
    let cfg = default_config();
    let spec = dn_plane_data(&cfg, 1).unwrap();
    let curve = kernel_curve(&spec).unwrap();
    assert_eq!(curve.degree(), 4);
    // Probe points kept off every assigned base point.
    let probes = [
        ProjPoint3::new(rint(1), rint(17), rint(5)).unwrap(),
        ProjPoint3::new(rint(3), rint(-2), rint(11)).unwrap(),
    ];
    // Simple points: the quartic vanishes there to order exactly one along
    // a generic probe line.
    for p in cfg.points() {
        for probe in &probes {
            assert_eq!(vanishing_order_along(&curve, p, probe), 1);
        }
    }
    // Double points at the three diagonals.
    for d in cfg.diagonals() {
        for probe in &probes {
            assert_eq!(vanishing_order_along(&curve, d, probe), 2);
        }
    }
    // Simple point at q (n = 1 has no infinitely near condition).
    for probe in &probes {
        assert_eq!(vanishing_order_along(&curve, cfg.q(), probe), 1);
    }
}

#[test]
fn second_curve_sees_the_infinitely_near_point() {
    let cfg = default_config();
    let spec = dn_plane_data(&cfg, 2).unwrap();
    let curve = kernel_curve(&spec).unwrap();
    assert_eq!(curve.degree(), 14);
    // Multiplicity 4 at q along a chord...
    let chord_order = vanishing_order_along(&curve, cfg.q(), &cfg.points()[0]);
    assert_eq!(chord_order, 4);
    // ...but along the conic tangent the infinitely near multiplicity-3
    // point adds up: vanishing order 4 + 3.
    let t = cfg.tangent().coeffs();
    // A second point on the tangent line, distinct from q.
    let other = if !t[1].is_zero() {
        ProjPoint3::new(rint(0), -t[2].clone(), t[1].clone()).unwrap()
    } else {
        ProjPoint3::new(-t[2].clone(), rint(0), t[0].clone()).unwrap()
    };
    assert!(cfg.tangent().contains(&other));
    let tangent_order = vanishing_order_along(&curve, cfg.q(), &other);
    assert_eq!(tangent_order, 7);
    // Diagonal points carry multiplicity n² + n = 6.
    let probe = ProjPoint3::new(rint(1), rint(17), rint(5)).unwrap();
    for d in cfg.diagonals() {
        assert_eq!(vanishing_order_along(&curve, d, &probe), 6);
    }
    // Conic points carry multiplicity n² = 4.
    for p in cfg.points() {
        assert_eq!(vanishing_order_along(&curve, p, &probe), 4);
    }
}

#[test]
fn overdetermined_and_underdetermined_systems_are_classified() {
    // No line passes through three generic points.
    let mut no_line = FatPointSpec::new(
        1,
        vec![FatPoint::ordinary(
            ProjPoint3::new(rint(1), rint(0), rint(0)).unwrap(),
            1,
        )],
    );
    no_line.push_point(ProjPoint3::new(rint(0), rint(1), rint(0)).unwrap(), 1);
    no_line.push_point(ProjPoint3::new(rint(1), rint(1), rint(1)).unwrap(), 1);
    let report = oracle_unique_curve(&no_line).unwrap();
    assert!(!report.exists);
    assert!(matches!(
        kernel_curve(&no_line),
        Err(PlaneError::NoUniqueCurve(_))
    ));
    // Conics through three points form a net: existence without uniqueness.
    let three_point_conic = FatPointSpec::new(
        2,
        vec![
            FatPoint::ordinary(ProjPoint3::new(rint(1), rint(0), rint(0)).unwrap(), 1),
            FatPoint::ordinary(ProjPoint3::new(rint(0), rint(1), rint(0)).unwrap(), 1),
            FatPoint::ordinary(ProjPoint3::new(rint(0), rint(0), rint(1)).unwrap(), 1),
        ],
    );
    let report = oracle_unique_curve(&three_point_conic).unwrap();
    assert!(report.exists);
    assert!(!report.unique);
    assert_eq!(report.kernel_dim, 3);
}

#[test]
fn family_data_is_frozen_for_small_indices() {
    let cfg = default_config();
    let expected = [
        (1u64, 4usize, 1usize, 2usize, 1usize, 0usize),
        (2, 14, 4, 6, 4, 3),
        (3, 30, 9, 12, 9, 8),
    ];
    for (n, degree, m_pt, m_diag, m_q, m_near) in expected {
        let spec = dn_plane_data(&cfg, n).unwrap();
        assert_eq!(spec.degree(), degree);
        let pts = spec.points();
        assert_eq!(pts.len(), 8);
        for p in &pts[0..4] {
            assert_eq!(p.multiplicity(), m_pt);
            assert_eq!(p.near_multiplicity(), 0);
        }
        for p in &pts[4..7] {
            assert_eq!(p.multiplicity(), m_diag);
        }
        assert_eq!(pts[7].multiplicity(), m_q);
        assert_eq!(pts[7].near_multiplicity(), m_near);
    }
    assert!(matches!(
        dn_plane_data(&cfg, 0),
        Err(PlaneError::IndexOutOfRange(0))
    ));
}

#[test]
fn degenerate_parameters_are_rejected() {
    assert!(matches!(
        build_config([rint(0), rint(0), rint(1), rint(2), rint(3)]),
        Err(PlaneError::ParamsNotDistinct(_))
    ));
    // Distinct parameters always give distinct conic points, so the only
    // degeneracies the gate can see are diagonal collisions; the standard
    // and alternate parameter sets sail through.
    assert!(build_config([rat(1, 3), rat(-1, 3), rint(5), rint(-5), rint(0)]).is_ok());
}

#[test]
fn condition_count_matches_the_binomial_formula() {
    let cfg = default_config();
    for n in 1..=4u64 {
        let spec = dn_plane_data(&cfg, n).unwrap();
        let nn = n as usize;
        let c2 = |m: usize| m * (m + 1) / 2;
        let expected = 4 * c2(nn * nn) + 3 * c2(nn * nn + nn) + c2(nn * nn) + c2(nn * nn - 1);
        assert_eq!(spec.condition_count(), expected);
    }
}
