//! Divisor-class lattices: pairing axioms under random inputs, 2-torsion
//! arithmetic, and the degree-2 cover calculus identities.

use proptest::prelude::*;
use std::sync::Arc;
use symsquare_core::lattice::{DoubleCoverMap, NsLattice};
use symsquare_core::matrix::Matrix;
use symsquare_core::surfaces::{build_sym2, build_x};
use symsquare_core::{rat, rint, Rat, RatMatrix};

fn hyperbolic_plus_torsion() -> Arc<NsLattice> {
    NsLattice::new(
        "U+t",
        vec!["e".into(), "f".into()],
        Matrix::from_rows(vec![vec![rint(0), rint(1)], vec![rint(1), rint(0)]]).unwrap(),
        vec!["eps".into()],
    )
    .unwrap()
}

fn rank3_lattice() -> Arc<NsLattice> {
    // Mixed-signature Gram with fractional entries, no torsion.
    NsLattice::new(
        "G3",
        vec!["a".into(), "b".into(), "c".into()],
        Matrix::symmetric(vec![
            vec![rat(1, 2), rat(1, 2), rint(0)],
            vec![rat(1, 2), rint(0), rint(0)],
            vec![rint(0), rint(0), rat(-1, 2)],
        ])
        .unwrap(),
        vec![],
    )
    .unwrap()
}

fn rat3(cells: &[(i64, i64); 3]) -> Vec<Rat> {
    cells.iter().map(|&(p, q)| rat(p, q)).collect()
}

proptest! {
    #[test]
    fn pairing_is_symmetric_and_bilinear(
        x in proptest::array::uniform3((-9i64..=9, 1i64..=4)),
        y in proptest::array::uniform3((-9i64..=9, 1i64..=4)),
        z in proptest::array::uniform3((-9i64..=9, 1i64..=4)),
        c in (-6i64..=6, 1i64..=3),
    ) {
        let l = rank3_lattice();
        let x = l.free_class(rat3(&x)).unwrap();
        let y = l.free_class(rat3(&y)).unwrap();
        let z = l.free_class(rat3(&z)).unwrap();
        let c = rat(c.0, c.1);
        // Symmetry.
        prop_assert_eq!(x.pair(&y).unwrap(), y.pair(&x).unwrap());
        // Additivity and homogeneity in the first slot.
        let xz = x.add(&z).unwrap();
        prop_assert_eq!(
            xz.pair(&y).unwrap(),
            x.pair(&y).unwrap() + z.pair(&y).unwrap()
        );
        let cx = x.scale(&c).unwrap();
        prop_assert_eq!(cx.pair(&y).unwrap(), c * x.pair(&y).unwrap());
        // Self-intersection is consistent with pair.
        prop_assert_eq!(x.self_int(), x.pair(&x).unwrap());
    }

    #[test]
    fn addition_group_axioms(
        x in proptest::array::uniform3((-9i64..=9, 1i64..=4)),
        y in proptest::array::uniform3((-9i64..=9, 1i64..=4)),
    ) {
        let l = rank3_lattice();
        let x = l.free_class(rat3(&x)).unwrap();
        let y = l.free_class(rat3(&y)).unwrap();
        prop_assert_eq!(x.add(&y).unwrap(), y.add(&x).unwrap());
        prop_assert_eq!(x.sub(&x).unwrap(), l.zero_class());
        prop_assert_eq!(x.add(&x.neg()).unwrap(), l.zero_class());
        prop_assert_eq!(x.sub(&y).unwrap().add(&y).unwrap(), x);
    }

    #[test]
    fn class_from_intersections_inverts_the_pairing(
        probe in proptest::array::uniform3((-9i64..=9, 1i64..=4)),
    ) {
        let l = rank3_lattice();
        let pairings = rat3(&probe);
        let v = l.class_from_intersections(&pairings).unwrap();
        for i in 0..3 {
            prop_assert_eq!(v.pair(&l.basis_class(i)).unwrap(), pairings[i].clone());
        }
    }
}

#[test]
fn torsion_addition_is_componentwise_mod_two() {
    let l = hyperbolic_plus_torsion();
    let a = l.class(vec![rint(1), rint(0)], vec![1]).unwrap();
    let b = l.class(vec![rint(0), rint(1)], vec![1]).unwrap();
    let sum = a.add(&b).unwrap();
    assert_eq!(sum.free(), &[rint(1), rint(1)]);
    assert_eq!(sum.torsion(), &[0]);
    // Torsion never contributes to the pairing.
    assert_eq!(a.pair(&b).unwrap(), rint(1));
    // Torsion bits reduce on construction.
    let c = l.class(vec![rint(0), rint(0)], vec![7]).unwrap();
    assert_eq!(c.torsion(), &[1]);
}

#[test]
fn torsion_scaling_needs_integers() {
    let l = hyperbolic_plus_torsion();
    let t = l.class(vec![rint(0), rint(0)], vec![1]).unwrap();
    assert!(t.scale(&rat(1, 2)).is_err());
    assert!(t.scale(&rint(2)).unwrap().is_zero());
    assert_eq!(t.scale(&rint(3)).unwrap(), t);
}

#[test]
fn gram_validation_rejects_bad_input() {
    let asym = Matrix::from_rows(vec![vec![rint(0), rint(1)], vec![rint(2), rint(0)]]).unwrap();
    assert!(NsLattice::new("bad", vec!["a".into(), "b".into()], asym, vec![]).is_err());
    let gram = Matrix::identity(2);
    assert!(NsLattice::new("bad", vec!["a".into()], gram.clone(), vec![]).is_err());
    assert!(NsLattice::new("bad", vec!["a".into(), "a".into()], gram, vec![]).is_err());
}

#[test]
fn cover_calculus_identities_hold_for_all_genera() {
    for g in 1..=8 {
        let sym2 = build_sym2(g).unwrap();
        let (x, cover) = build_x(g).unwrap();
        let two = rint(2);
        // The cover maps the symmetric product onto the quotient, so
        // pullback lifts quotient classes and pushforward descends.
        // f_* f^* = 2 on the quotient.
        for i in 0..x.lattice().rank() {
            let down = x.lattice().basis_class(i);
            let round = cover.pushforward(&cover.pullback(&down).unwrap()).unwrap();
            assert_eq!(round, down.scale(&two).unwrap());
        }
        // Pairing doubles under pullback.
        for i in 0..2 {
            for j in 0..2 {
                let a = x.lattice().basis_class(i);
                let b = x.lattice().basis_class(j);
                let up = cover
                    .pullback(&a)
                    .unwrap()
                    .pair(&cover.pullback(&b).unwrap())
                    .unwrap();
                assert_eq!(up, &two * a.pair(&b).unwrap());
            }
        }
        // Projection formula: (f^*a) · b = a · (f_* b) for basis classes.
        for i in 0..2 {
            for j in 0..2 {
                let a = x.lattice().basis_class(i);
                let b = sym2.lattice().basis_class(j);
                let lhs = cover.pullback(&a).unwrap().pair(&b).unwrap();
                let rhs = a.pair(&cover.pushforward(&b).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn cover_construction_rejects_non_doubling_maps() {
    let src = NsLattice::new(
        "src",
        vec!["a".into(), "b".into()],
        Matrix::from_rows(vec![vec![rint(0), rint(1)], vec![rint(1), rint(0)]]).unwrap(),
        vec![],
    )
    .unwrap();
    let tgt = Arc::clone(&src);
    // Identity pullback does not double the pairing.
    let id: RatMatrix = Matrix::identity(2);
    assert!(DoubleCoverMap::new(Arc::clone(&src), tgt, id).is_err());
}

#[test]
fn cover_transport_rejects_foreign_classes() {
    let (_, cover) = build_x(1).unwrap();
    let foreign = rank3_lattice().basis_class(0);
    assert!(cover.pullback(&foreign).is_err());
    assert!(cover.pushforward(&foreign).is_err());
}
