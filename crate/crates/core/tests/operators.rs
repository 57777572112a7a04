mod common;

use common::r;
use proptest::prelude::*;
use ssym_harmonic::operators::{
    commutator, d_op, delta_lambda, delta_n, dualize_apply, euler_op, kelvin, laplacian, script_d_n, OperatorExpr,
};
use ssym_harmonic::ssym::{parse, Monomial};
use ssym_harmonic::{Partition, SSPoly};

fn p(s: &str) -> SSPoly {
    parse(s).unwrap()
}

fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

#[test]
fn basic_operators() {
    assert_eq!(d_op(&p("Q3")), p("Q2"));
    assert!(d_op(&p("1")).is_zero());
    assert_eq!(d_op(&p("Q2^2")), p("2*Q1*Q2"));
    assert_eq!(euler_op(&p("Q3*Q4")), p("7*Q3*Q4"));
    assert!(euler_op(&p("1")).is_zero());
    assert_eq!(euler_op(&p("Q2^(3/2)")), p("3*Q2^(3/2)"));
}

#[test]
fn laplacian_examples() {
    assert_eq!(laplacian(&p("Q3")), p("-1/2*Q1"));
    assert_eq!(laplacian(&p("Q2")), p("-1/2"));
    assert_eq!(laplacian(&p("Q2^2")), p("Q2 - Q1^2"));
    assert_eq!(script_d_n(2, &p("Q2^2")), p("4*Q2"));
}

#[test]
fn delta_family() {
    let f = p("Q2^2*Q3 - 3*Q5 + Q1*Q4");
    assert_eq!(delta_n(0, &f), f);
    assert!(delta_n(1, &f).is_zero());
    assert_eq!(delta_n(2, &f), laplacian(&f).scale(&r(2, 1)));
    assert_eq!(delta_lambda(&Partition::empty(), &f), f);
    assert_eq!(delta_lambda(&part(&[2]), &f), laplacian(&f).scale(&r(2, 1)));
    // Δ3 = 𝒟3 - 3𝒟2∂ + 3𝒟1∂² - ∂³
    let g = p("Q2^(3/2)");
    let want = script_d_n(3, &g) - script_d_n(2, &d_op(&g)).scale(&r(3, 1)) + script_d_n(1, &d_op(&d_op(&g))).scale(&r(3, 1))
        - d_op(&d_op(&d_op(&g)));
    assert_eq!(delta_lambda(&part(&[3]), &g), want);
    // multinomial prefactor: Δ_(2,2) = C(4; 2,2) Δ2² = 6 Δ2²
    assert_eq!(delta_lambda(&part(&[2, 2]), &f), delta_n(2, &delta_n(2, &f)).scale(&r(6, 1)));
}

#[test]
fn kelvin_and_duals() {
    assert_eq!(kelvin(&p("1")).unwrap(), p("Q2^(3/2)"));
    assert_eq!(kelvin(&p("Q2^(3/2)")).unwrap(), p("1"));
    assert_eq!(kelvin(&p("Q3")).unwrap(), p("Q2^(-3/2)*Q3"));
    assert!(kelvin(&p("Q1*Q2")).is_err());
    let g = p("Q2^3*Q4 + Q3^2");
    assert_eq!(dualize_apply(&p("Q3"), &g).unwrap(), delta_n(3, &g));
    assert_eq!(dualize_apply(&p("1"), &g).unwrap(), g);
    assert_eq!(dualize_apply(&p("Q2^2"), &g).unwrap(), laplacian(&laplacian(&g)).scale(&r(4, 1)));
}

#[test]
fn commutator_examples() {
    let f = p("Q2^2*Q3 + 5*Q1*Q4 - 2/3*Q6");
    let q1 = OperatorExpr::mul_generator(1);
    assert_eq!(commutator(&OperatorExpr::D, &q1, &f).unwrap(), f);
    assert_eq!(commutator(&OperatorExpr::Euler, &OperatorExpr::D, &f).unwrap(), -d_op(&f));
    let want = euler_op(&f) - SSPoly::generator(1) * d_op(&f) - f.scale(&r(1, 2));
    assert_eq!(commutator(&OperatorExpr::Laplacian, &OperatorExpr::mul_generator(2), &f).unwrap(), want);
}

#[test]
fn laplacian_of_q2_powers() {
    let q1sq = SSPoly::generator(1).pow(2);
    for n in -3..=8i64 {
        let q2 = |e: i64| SSPoly::monomial(Monomial::q2_half_power(e));
        let f = q2(2 * n);
        let want = q2(2 * n - 2).scale(&r(n * (2 * n - 3), 2)) - (&q1sq * &q2(2 * n - 4)).scale(&r(n * (n - 1), 2));
        assert_eq!(common::laplacian(&f), want, "n = {n}");
        assert_eq!(laplacian(&f), want, "n = {n}");
    }
}

fn arb_r_element() -> impl Strategy<Value = SSPoly> {
    let mono = prop::collection::vec(1u32..7, 0..4);
    prop::collection::vec((mono, -5i64..6, 1i64..4), 0..4).prop_map(|terms| {
        SSPoly::from_terms(terms.into_iter().map(|(ix, n, d)| (Monomial::product_of(ix), r(n, d))))
    })
}

fn arb_tilde_element() -> impl Strategy<Value = SSPoly> {
    (arb_r_element(), -4i64..5).prop_map(|(f, s)| f.mul_monomial(&Monomial::q2_half_power(s)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn laplacian_matches_oracle(f in arb_tilde_element()) {
        prop_assert_eq!(laplacian(&f), common::laplacian(&f));
    }

    #[test]
    fn script_d_matches_oracle(f in arb_r_element(), n in 0u32..5) {
        prop_assert_eq!(script_d_n(n, &f), common::script_d(n, &f));
    }

    #[test]
    fn script_d_one_is_d(f in arb_r_element()) {
        prop_assert_eq!(script_d_n(1, &f), d_op(&f));
    }

    #[test]
    fn sl2_triple(f in arb_tilde_element()) {
        let x = OperatorExpr::q2_hat();
        let y = OperatorExpr::Laplacian;
        let h = OperatorExpr::e_hat();
        prop_assert_eq!(commutator(&h, &x, &f).unwrap(), x.apply(&f).unwrap().scale(&r(2, 1)));
        prop_assert_eq!(commutator(&h, &y, &f).unwrap(), y.apply(&f).unwrap().scale(&r(-2, 1)));
        prop_assert_eq!(commutator(&y, &x, &f).unwrap(), h.apply(&f).unwrap());
    }

    #[test]
    fn kelvin_is_an_involution(f in arb_tilde_element()) {
        let f = f.filter(|m| !m.contains(1));
        for (_, g) in f.weight_components() {
            prop_assert_eq!(kelvin(&kelvin(&g).unwrap()).unwrap(), g);
        }
    }

    #[test]
    fn delta_lambda_commutes_with_q1(f in arb_r_element(), l in prop::collection::vec(1u32..5, 0..3)) {
        let l = Partition::from_unsorted(l);
        let q1 = SSPoly::generator(1);
        prop_assert_eq!(delta_lambda(&l, &(&q1 * &f)), &q1 * &delta_lambda(&l, &f));
    }
}
