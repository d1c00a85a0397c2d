//! Exact values for the three bundled example graphs.

use dgs_core::cospectral::{
    generalized_cospectral, is_regular_orthogonal, level, q_from_walk_matrices,
    theta_invariance_check, verify_membership, NonMemberReason, QCertificate,
};
use dgs_core::criteria::{
    analyze, check_exclusion_condition, check_improved_condition, check_main_condition,
    check_theorem_old, compute_invariants, ord_p, phi_p, theta_prime_classification, Mode,
    OrdValue, Status,
};
use dgs_core::exactla::{det_exact, mat_poly_eval, nullity_mod_p, IntMatrix, IntPoly};
use dgs_core::fixtures;
use dgs_core::fpoly::{factor_fp, squarefree_part, FpPoly};
use dgs_core::Graph;
use num_bigint::BigInt;

fn big(s: &str) -> BigInt {
    s.parse().unwrap()
}

fn snf_diag(g: &Graph) -> Vec<BigInt> {
    compute_invariants(g).snf_walk.diagonal()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn shifted_dets(g: &Graph) -> (BigInt, BigInt) {
    let a = g.adjacency();
    let aj = &a + &IntMatrix::ones(g.order(), g.order());
    let phi = IntPoly::from_i64(&[1, 1]);
    (
        det_exact(&mat_poly_eval(&phi, &a).unwrap()).unwrap(),
        det_exact(&mat_poly_eval(&phi, &aj).unwrap()).unwrap(),
    )
}

#[test]
fn example1_invariants() {
    let g = fixtures::example1();
    let inv = compute_invariants(&g);
    assert_eq!(inv.det_walk, big("-1312932672"));
    assert_eq!(inv.halved_det, big("-20514573"));
    assert_eq!(inv.delta, big("424319456090918385320095315960579067904"));
    assert_eq!(inv.theta, BigInt::from(27));
    assert_eq!(
        snf_diag(&g),
        ints(&[1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 6, 13676382])
    );
    assert!(!check_theorem_old(&inv));
    assert_eq!(nullity_mod_p(&inv.walk, 3).unwrap(), 2);
    let tp = theta_prime_classification(&inv.theta).unwrap();
    assert_eq!(tp.multiple, ints(&[3]));
    assert!(tp.simple.is_empty());
}

#[test]
fn example1_conditions() {
    let g = fixtures::example1();
    assert_eq!(phi_p(&g, 3).unwrap(), FpPoly::from_i64(3, &[1, 2, 1]).unwrap());
    assert_eq!(shifted_dets(&g), (BigInt::from(-75), BigInt::from(-207)));
    let three = BigInt::from(3);
    assert_eq!(ord_p(&BigInt::from(-75), &three).unwrap(), OrdValue::Finite(1));
    assert_eq!(ord_p(&BigInt::from(-207), &three).unwrap(), OrdValue::Finite(2));

    assert!(!check_exclusion_condition(&g, 3).unwrap().applicable);
    assert!(!check_improved_condition(&g, 3).unwrap().applicable);
    let main = check_main_condition(&g, 3).unwrap();
    assert!(main.passed);
    assert_eq!(main.factors.len(), 1);
    assert_eq!(main.factors[0].min_ord(), OrdValue::Finite(1));

    assert_eq!(analyze(&g, Mode::MainOnly).unwrap().status, Status::DgsCertified);
    assert_eq!(analyze(&g, Mode::Combined).unwrap().status, Status::DgsCertified);
    let old = analyze(&g, Mode::OldEcIc).unwrap();
    assert_eq!(old.status, Status::Inconclusive);
    assert_eq!(old.unresolved_primes, ints(&[3]));
}

#[test]
fn example2_values() {
    let g = fixtures::example2();
    let inv = compute_invariants(&g);
    assert_eq!(snf_diag(&g), ints(&[1, 1, 1, 1, 1, 2, 2, 6, 6, 798]));
    assert_eq!(inv.theta, BigInt::from(27));
    assert_eq!(nullity_mod_p(&inv.walk, 3).unwrap(), 3);

    let phi = phi_p(&g, 3).unwrap();
    assert_eq!(phi, FpPoly::from_i64(3, &[1, 3, 3, 1]).unwrap());
    assert_eq!(squarefree_part(&phi).unwrap(), FpPoly::from_i64(3, &[1, 1]).unwrap());

    let ic = check_improved_condition(&g, 3).unwrap();
    assert!(ic.applicable);
    assert!(!ic.passed);
    assert_eq!((ic.sfp_degree, ic.nullity_p), (1, 3));
    assert!(!check_exclusion_condition(&g, 3).unwrap().applicable);

    assert_eq!(shifted_dets(&g), (BigInt::from(6), BigInt::from(12)));
    assert!(check_main_condition(&g, 3).unwrap().passed);

    assert_eq!(analyze(&g, Mode::MainOnly).unwrap().status, Status::DgsCertified);
    let old = analyze(&g, Mode::OldEcIc).unwrap();
    assert_eq!(old.status, Status::Inconclusive);
    assert_eq!(old.unresolved_primes, ints(&[3]));
}

#[test]
fn example3_table() {
    let g = fixtures::example3();
    let inv = compute_invariants(&g);
    assert_eq!(inv.theta, BigInt::from(164025));
    let d14 = BigInt::from(2 * 243 * 25 * 7 * 31) * 461 * 787;
    assert_eq!(inv.last_invariant_factor(), d14);
    assert_eq!(
        snf_diag(&g),
        [ints(&[1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 6, 6, 30]), vec![d14]].concat()
    );
    let tp = theta_prime_classification(&inv.theta).unwrap();
    assert_eq!(tp.multiple, ints(&[3, 5]));
    assert!(!check_improved_condition(&g, 3).unwrap().applicable);

    let phi3 = phi_p(&g, 3).unwrap();
    assert_eq!(factor_fp(&phi3).unwrap().to_string(), "(x+1)^2 (x+2)^3");
    let m3 = check_main_condition(&g, 3).unwrap();
    let rows: Vec<(String, bool)> = m3
        .factors
        .iter()
        .map(|f| (f.factor.to_string(), f.holds))
        .collect();
    assert_eq!(rows, vec![("x+1".into(), false), ("x+2".into(), true)]);
    assert!(!m3.passed);

    let phi5 = phi_p(&g, 5).unwrap();
    assert_eq!(factor_fp(&phi5).unwrap().to_string(), "(x+2)^2");
    let m5 = check_main_condition(&g, 5).unwrap();
    assert!(m5.passed);
    assert_eq!(m5.factors.len(), 1);

    let v = analyze(&g, Mode::Combined).unwrap();
    assert_eq!(v.status, Status::Inconclusive);
    assert_eq!(v.unresolved_primes, ints(&[3]));
    let p5 = v.analyses.iter().find(|a| a.p == 5).unwrap();
    assert!(p5.excluded);
}

#[test]
fn example3_certificate() {
    let g = fixtures::example3();
    let q = fixtures::example3_q();
    assert!(is_regular_orthogonal(&q));
    assert_eq!(level(&q), BigInt::from(3));

    let cert = QCertificate::verify(q.clone(), &g).unwrap().expect("member");
    assert!(cert.refutes_dgs());
    let inv = compute_invariants(&g);
    let lc = cert.level_constraints(&inv);
    assert!(lc.all_hold(), "{lc:?}");

    let h = cert.mate.clone();
    assert_ne!(h, g);
    assert!(generalized_cospectral(&g, &h));
    assert!(theta_invariance_check(&g, &h).unwrap());
    assert_eq!(compute_invariants(&h).theta, BigInt::from(164025));
    assert_eq!(q_from_walk_matrices(&g, &h).unwrap(), q);
}

#[test]
fn misplaced_q_block_is_rejected() {
    let g = fixtures::example3();
    let q = fixtures::example3_q_misordered();
    assert!(is_regular_orthogonal(&q));
    assert_eq!(level(&q), BigInt::from(3));
    let m = verify_membership(&q, &g).unwrap();
    assert!(!m.member);
    assert_eq!(m.reason, Some(NonMemberReason::NotZeroOne));
}

#[test]
fn graph6_fixtures_decode_to_matrices() {
    for (g6, g) in [
        ("K@nnBNyHlaiu", fixtures::example1()),
        ("IYtVAnvK?", fixtures::example2()),
        ("My{X\\lbE[kpVFJ\\^?", fixtures::example3()),
    ] {
        assert_eq!(g.to_graph6(), g6);
        assert_eq!(dgs_core::graphio::parse_graph6(g6).unwrap(), g);
    }
}
