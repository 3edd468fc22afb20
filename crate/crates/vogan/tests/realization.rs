mod common;

use common::{desk_types, finite_cartan, finite_positive_roots, ty};
use vogan::chevalley::{lift_automorphism, ChevalleyAlgebra};
use vogan::realize::{
    affine_generators, check_gcm, check_involutions, check_jacobi, check_psi_example, check_sl2, check_structure,
    gcm_recovery, run_checks, sl2_triple, torus_sign_action, twist_data, Check, Psi,
};
use vogan::roots::{p, p_ring, RootVector};
use vogan::{CycloNum, Error, Family, FiniteType};

const SEED: u64 = 20_240_501;

fn loop_types() -> Vec<vogan::AffineType> {
    vec![ty(Family::A2_2, 1), ty(Family::A2lm1_2, 3), ty(Family::Dlp1_2, 2), ty(Family::D4_3, 2)]
}

#[test]
fn loop_identities_at_window_three() {
    for t in loop_types() {
        let r = affine_generators(&t, 3).unwrap();
        let mut reports = Vec::new();
        reports.extend(check_jacobi(&r, 200, SEED).unwrap());
        reports.extend(check_structure(&r).unwrap());
        reports.extend(check_gcm(&r).unwrap());
        reports.push(check_sl2(&r, 3).unwrap());
        for rep in &reports {
            assert!(rep.passed(), "{} {}: {:?}", t, rep.check, &rep.failures[..rep.failures.len().min(3)]);
            assert!(rep.samples > 0, "{} {}", t, rep.check);
        }
        let jac = &reports[1];
        assert!(jac.samples >= 200, "{} {}", t, jac.samples);
        assert_eq!(gcm_recovery(&r).unwrap(), t.gcm(), "{}", t);
    }
}

#[test]
fn generators_on_every_desk_type() {
    for t in desk_types() {
        let r = affine_generators(&t, 2).unwrap();
        assert_eq!(gcm_recovery(&r).unwrap(), t.gcm(), "{}", t);
        let inv = check_involutions(&r, 20, SEED).unwrap();
        assert!(inv.passed(), "{}: {:?}", t, inv.failures.first());
    }
}

/// Dimension of the finite type from an independent root count.
fn oracle_dim(name: &str, n: usize) -> usize {
    2 * finite_positive_roots(&finite_cartan(name, n)).len() + n
}

#[test]
fn fixed_subalgebra_dimensions() {
    let cases = [
        (ty(Family::A2_2, 1), "A", 1),
        (ty(Family::A2lm1_2, 3), "C", 3),
        (ty(Family::A2l_2, 2), "B", 2),
        (ty(Family::Dlp1_2, 2), "B", 2),
        (ty(Family::D4_3, 2), "G", 2),
        (ty(Family::E6_2, 4), "F", 4),
    ];
    let want = [3, 21, 10, 10, 14, 52];
    for ((t, name, n), w) in cases.into_iter().zip(want) {
        let dim = oracle_dim(name, n);
        assert_eq!(dim, w);
        assert_eq!(t.finite_type().dim(), dim, "{}", t);
        let td = twist_data(&t);
        let g = ChevalleyAlgebra::new(td.parent).unwrap();
        let mu = lift_automorphism(&g, &td.nu, t.k(), dim).unwrap();
        assert_eq!(mu.fixed_dim(), dim);
        assert!(mu.pow(t.k()).is_identity());
        assert!(g.is_automorphism(&mu));
        // the trivial-sign lift already has this fixed algebra
        let plus = g.lift(&td.nu, &vec![1; g.rank()]).unwrap();
        assert_eq!(plus.fixed_dim(), dim, "{}", t);
    }
    let g = ChevalleyAlgebra::new(FiniteType::A(2)).unwrap();
    let nu = twist_data(&ty(Family::A2_2, 1)).nu;
    assert!(matches!(lift_automorphism(&g, &nu, 2, 4), Err(Error::LiftFailed { .. })));
}

#[test]
fn torus_signs_follow_the_diagram() {
    for t in desk_types() {
        let r = affine_generators(&t, 1).unwrap();
        let marks = t.marks();
        let n = t.n();
        let mut cases = Vec::new();
        for j in 0..n {
            cases.push((p(&t, j), vec![j]));
        }
        for j in 1..n {
            let painted = if marks[j] % 2 == 0 { vec![j] } else { vec![0, j] };
            cases.push((p_ring(&t, j), painted));
        }
        for (h, painted) in cases {
            for i in 0..n {
                let v = torus_sign_action(&r, &h, r.e(i)).unwrap();
                let want = if painted.contains(&i) { -1 } else { 1 };
                assert_eq!(v.ratio_to(r.e(i)), Some(CycloNum::from_int(want)), "{} {:?} e_{}", t, painted, i);
            }
        }
    }
}

#[test]
fn psi_is_a_homomorphism() {
    let rep = check_psi_example(3, 6, SEED).unwrap();
    assert!(rep.passed(), "{:?}", rep.failures.first());
    assert!(rep.samples > 100);
    let psi = Psi::new(3, 6).unwrap();
    let c = vogan::loop_algebra::LoopElement::central();
    assert_eq!(psi.apply(&c), c.scale(&CycloNum::from_int(2)));
}

#[test]
fn sl2_rejects_non_roots() {
    let t = ty(Family::A2_2, 1);
    let r = affine_generators(&t, 3).unwrap();
    assert!(matches!(sl2_triple(&r, &RootVector(vec![1, 2])), Err(Error::NotARealRoot { .. })));
    assert!(sl2_triple(&r, &RootVector(vec![1, 0])).is_ok());
}

#[test]
fn psi_only_for_its_family() {
    let t = ty(Family::A2_2, 1);
    assert!(matches!(run_checks(&t, 2, Check::Psi, SEED), Err(Error::UnsupportedType { .. })));
    let all = run_checks(&t, 2, Check::All, SEED).unwrap();
    assert!(all.iter().all(|r| r.passed() && r.check != "psi"));
}
