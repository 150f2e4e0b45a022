use extsq_core::algebra::SymPoly;
use extsq_core::identities::{
    bf_product_side, bf_sum_side, hecke_lhs, hecke_rhs, l0_factor, theorem1_sum_side, verify_bf, verify_hecke,
    verify_hecke_reindex, verify_littlewood, verify_theorem1, BfForm, VerifyOptions,
};
use extsq_core::lseries::{
    global_coefficient, local_coefficient, numeric_verify_theorem1, random_unit_product, SatakeData,
};
use extsq_core::symmetric::{elementary_e, homogeneous_h, lambda_of_index, schur, FourierIndex, IndexConvention, Partition};
use extsq_core::Error;
use num_complex::Complex64;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn opts() -> VerifyOptions {
    VerifyOptions::default()
}

fn unreduced() -> VerifyOptions {
    VerifyOptions {
        quotient: false,
        ..VerifyOptions::default()
    }
}

#[test]
fn index_map() {
    let lam = |k: &[u32]| lambda_of_index(&FourierIndex::new(k.iter().copied()), IndexConvention::Inclusive);
    assert_eq!(lam(&[0, 0, 0]), Partition::empty());
    assert_eq!(lam(&[1, 0]), p("1"));
    assert_eq!(lam(&[0, 1]), p("1+1"));
    let literal = lambda_of_index(&FourierIndex::new([1, 0]), IndexConvention::PaperLiteral);
    assert_eq!(literal, Partition::empty());
}

#[test]
fn l0_examples() {
    let minus_one = |n| SymPoly::constant(n, -1);
    let l2 = l0_factor(2, 3, 3);
    assert_eq!(l2.coeff_or_zero(0, 1), minus_one(2));
    assert_eq!(l2.term_count(), 2);
    assert_eq!(l0_factor(3, 3, 3).coeff_or_zero(1, 1), minus_one(3));
    assert_eq!(l0_factor(4, 3, 3).coeff_or_zero(0, 2), minus_one(4));
}

#[test]
fn bf_side_examples() {
    let s2 = bf_sum_side(2, 3, 2, &opts()).unwrap();
    for a in 0..=3 {
        assert_eq!(s2.coeff_or_zero(a, 0), homogeneous_h(a, 2).quotient_normalize());
        assert!(s2.coeff_or_zero(a, 1).is_zero() && s2.coeff_or_zero(a, 2).is_zero());
    }
    for n in [3, 4] {
        let s = bf_sum_side(n, 2, 2, &opts()).unwrap();
        assert_eq!(s.coeff_or_zero(0, 1), elementary_e(2, n));
    }
    let prod4 = bf_product_side(4, 2, 2, &opts()).unwrap();
    assert!(prod4.coeff_or_zero(0, 0).is_one());
    assert_eq!(prod4.coeff_or_zero(1, 0), homogeneous_h(1, 4));
    assert!(bf_product_side(2, 2, 2, &opts()).unwrap().coeff_or_zero(0, 1).is_zero());
}

#[test]
fn verify_bf_examples() {
    assert!(verify_bf(2, 2, 2, BfForm::Constrained, &opts()).unwrap().passed());
    assert!(verify_bf(3, 3, 3, BfForm::Constrained, &opts()).unwrap().passed());
    let bad = verify_bf(2, 2, 2, BfForm::Constrained, &unreduced()).unwrap();
    assert!(!bad.passed());
    assert!(verify_bf(3, 3, 3, BfForm::Unconstrained, &opts()).unwrap().passed());
}

#[test]
fn theorem1_examples() {
    let s4 = theorem1_sum_side(4, 3, &opts()).unwrap();
    assert_eq!(s4.coeff_or_zero(0, 1), elementary_e(2, 4));
    let s2 = theorem1_sum_side(2, 4, &opts()).unwrap();
    assert!((0..=4).all(|k| s2.coeff_or_zero(0, k).is_one()));
    let s3 = theorem1_sum_side(3, 3, &opts()).unwrap();
    assert_eq!(s3.coeff_or_zero(0, 1), elementary_e(2, 3));
    for (n, cap) in [(3, 4), (4, 4), (5, 3)] {
        assert!(verify_theorem1(n, cap, &opts()).unwrap().passed(), "n={n}");
    }
}

#[test]
fn hecke_examples() {
    let e1e2 = &elementary_e(1, 3) * &elementary_e(2, 3);
    assert_eq!(hecke_lhs(3, 1, &[1], &opts()).unwrap(), e1e2.quotient_normalize());
    assert_eq!(hecke_rhs(3, 1, &[1], &opts()).unwrap(), (&schur(&p("2+1"), 3) + &SymPoly::one(3)).quotient_normalize());
    assert!(verify_hecke(3, 1, &[1], &opts()).unwrap().passed());

    let rhs4 = hecke_rhs(4, 1, &[1], &unreduced()).unwrap();
    assert_eq!(rhs4, &schur(&p("2+1"), 4) + &schur(&p("1+1+1"), 4));
    assert_eq!(hecke_lhs(4, 1, &[1], &unreduced()).unwrap(), rhs4);

    for n in 3..=5 {
        let e = vec![1; (n - 1) / 2];
        assert!(verify_hecke(n, 0, &e, &opts()).unwrap().passed());
    }
    assert!(matches!(verify_hecke(3, 1, &[1, 1], &opts()), Err(Error::TooManyEvenSlots { .. })));
}

#[test]
fn reindexing_consistency() {
    for n in [3, 4] {
        assert!(verify_hecke_reindex(n, 3, 3, &opts()).unwrap().passed(), "n={n}");
    }
}

#[test]
fn littlewood_examples() {
    for n in 2..=5 {
        assert!(verify_littlewood(n, 0, &opts()).unwrap().passed());
        assert!(verify_littlewood(n, 1, &opts()).unwrap().passed());
    }
    assert!(p("1+1").is_conjugate_even());
    let even4: Vec<Partition> = extsq_core::symmetric::enumerate_partitions(4, 4)
        .into_iter()
        .filter(Partition::is_conjugate_even)
        .collect();
    assert_eq!(even4, vec![p("2+2"), p("1+1+1+1")]);
    assert!(verify_littlewood(4, 2, &opts()).unwrap().passed());
}

fn ones(n: usize, primes: &[u64]) -> SatakeData {
    SatakeData::new(n, "trivial", primes.iter().map(|&q| (q, vec![Complex64::new(1.0, 0.0); n]))).unwrap()
}

#[test]
fn satake_loading() {
    let trivial = r#"{"n": 2, "label": "t", "primes": [{"p": 2, "alpha": [[1, 0], [1, 0]]}]}"#;
    assert_eq!(SatakeData::from_json_str(trivial).unwrap().n(), 2);
    let bad = r#"{"n": 3, "label": "b", "primes": [
        {"p": 2, "alpha": [[1, 0], [1, 0], [1, 0]]},
        {"p": 5, "alpha": [[1.5, 0], [1, 0], [1, 0]]}]}"#;
    match SatakeData::from_json_str(bad) {
        Err(Error::SatakeInvalid { prime, .. }) => assert_eq!(prime, 5),
        other => panic!("expected rejection at p=5, got {other:?}"),
    }
    let short = r#"{"n": 3, "label": "s", "primes": [{"p": 3, "alpha": [[1, 0], [1, 0]]}]}"#;
    assert!(SatakeData::from_json_str(short).is_err());
    let random = random_unit_product(3, &[2, 3, 5], 42).unwrap();
    assert!(SatakeData::from_json_str(&random.to_json()).is_ok());
}

#[test]
fn local_and_global_examples() {
    let d = ones(3, &[2, 3, 5]);
    let c = |k: &[u32]| local_coefficient(&FourierIndex::new(k.iter().copied()), 2, &d).unwrap();
    assert_eq!(c(&[0, 0]), Complex64::new(1.0, 0.0));
    assert_eq!(c(&[1, 0]), Complex64::new(3.0, 0.0));
    assert_eq!(c(&[1, 1]), Complex64::new(8.0, 0.0));

    let r = random_unit_product(3, &[2, 3, 5, 7], 8).unwrap();
    assert_eq!(global_coefficient(&[1, 1], &r).unwrap(), Complex64::new(1.0, 0.0));
    let k = FourierIndex::new([2, 1]);
    assert_eq!(global_coefficient(&[4, 2], &r).unwrap(), local_coefficient(&k, 2, &r).unwrap());
    let want = local_coefficient(&FourierIndex::new([1, 0]), 2, &r).unwrap()
        * local_coefficient(&FourierIndex::new([0, 1]), 3, &r).unwrap();
    assert!((global_coefficient(&[2, 3], &r).unwrap() - want).norm() < 1e-12);
    assert!(matches!(global_coefficient(&[11, 1], &r), Err(Error::MissingPrime(11))));
}

#[test]
fn numeric_examples() {
    let d = random_unit_product(2, &[2, 3, 5, 7], 3).unwrap();
    let report = numeric_verify_theorem1(&d, 10, 1e-12).unwrap();
    assert!(report.passed());
    let only2 = random_unit_product(3, &[2], 1).unwrap();
    assert!(matches!(numeric_verify_theorem1(&only2, 3, 1e-9), Err(Error::MissingPrime(3))));
    let ok = random_unit_product(4, &[2, 3, 5, 7], 1).unwrap();
    assert!(matches!(numeric_verify_theorem1(&ok, 7, 0.0), Err(Error::InvalidParameter(_))));
    assert!(numeric_verify_theorem1(&ok, 7, 1e-9).unwrap().passed());
}

#[test]
fn odd_rank_needs_no_quotient() {
    for n in [3, 5] {
        assert!(verify_theorem1(n, 4, &unreduced()).unwrap().passed(), "n={n}");
    }
    assert!(!verify_theorem1(4, 4, &unreduced()).unwrap().passed());
    let scaled = random_unit_product(3, &extsq_core::lseries::primes_up_to(50), 4).unwrap().scaled_at(2, 1.01);
    assert!(numeric_verify_theorem1(&scaled, 50, 1e-9).unwrap().passed());
}
