use jack_sov::algebra::{int, rat};
use jack_sov::oracle::jack_oracle;
use jack_sov::separated::{b_lambda, c_lambda, f_lambda_product_form_with, f_lambda_sum_form, xi_coeffs};
use jack_sov::sov::a2::{jack_a2_with, jack_rectangular, s3hat_factorization_sides, Representation};
use jack_sov::sov::coeffs::{cmn_by_expansion, cmn_engine, first_recurrence_residual, xi_coeffs_from_cmn, CoeffProblem};
use jack_sov::sov::{jack_a1_gegenbauer, jack_one_row};
use jack_sov::{CouplingG, Evaluation, Partition, SymPoly};
use num_traits::Zero;
use proptest::prelude::*;

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn coupling() -> impl Strategy<Value = CouplingG> {
    (1i64..12, 1i64..7).prop_map(|(n, d)| CouplingG::from_ratio(n, d).unwrap())
}

fn three_parts() -> impl Strategy<Value = Partition> {
    (0usize..4, 0usize..3, 0usize..2).prop_map(|(a, b, c)| p(&[a + b + c, b + c, c]))
}

#[test]
fn first_recurrence_anchor() {
    // (r1, r2, m, n) = (1, 0, 0, 0): -(3/2) g (1-g) - (3/2) g (3g-1) + 3 g^2 = 0.
    let g = CouplingG::from_ratio(5, 7).unwrap();
    let c = cmn_by_expansion(&p(&[1, 0, 0]), &g).unwrap();
    assert_eq!(c.get(0, 0), rat(3, 2));
    assert!(first_recurrence_residual(&c, 0, 0).is_zero());
}

#[test]
fn factorization_anchor_via_oracle() {
    let g = CouplingG::from_ratio(2, 5).unwrap();
    let l = p(&[1, 0, 0]);
    let jack = jack_oracle(&l, &g, 3).unwrap();
    let (lhs, rhs) = s3hat_factorization_sides(&l, &jack, &g).unwrap();
    assert_eq!(lhs, rhs);
    assert_eq!((lhs.get(0, 0), lhs.get(1, 0), lhs.get(0, 1)), (int(2), int(1), rat(-2, 3)));
}

#[test]
fn xi_two_routes() {
    let g = CouplingG::from_ratio(7, 3).unwrap();
    for l in [p(&[3, 1, 0]), p(&[4, 4, 1]), p(&[2, 0, 0])] {
        assert_eq!(xi_coeffs(&l, &g).unwrap(), xi_coeffs_from_cmn(&l, &g).unwrap());
    }
}

#[test]
fn engine_serves_every_entry_off_the_special_points() {
    let g = CouplingG::from_ratio(3, 2).unwrap();
    for r1 in 0..=5 {
        for r2 in 0..=r1 {
            let problem = CoeffProblem::new(r1, r2, g.clone()).unwrap();
            let engine = cmn_engine(&problem).unwrap();
            assert_eq!(engine.table, cmn_by_expansion(&problem.partition(), &g).unwrap());
        }
    }
}

#[test]
fn schur_at_unit_coupling() {
    let one = CouplingG::from_ratio(1, 1).unwrap();
    let m = |parts: &[usize]| SymPoly::monomial(&p(parts), 2).unwrap();
    // s_(2) = m_(2) + m_(1,1)
    assert_eq!(jack_a1_gegenbauer(&p(&[2, 0]), &one).unwrap(), m(&[2]).add(&m(&[1, 1])));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn representations_match_oracle(l in three_parts(), g in coupling()) {
        let oracle = jack_oracle(&l, &g, 3).unwrap();
        for which in [Representation::First, Representation::Second] {
            prop_assert_eq!(&jack_a2_with(&l, &g, which, Evaluation::Limit).unwrap(), &oracle);
        }
        let ones = vec![int(1); 3];
        prop_assert_eq!(oracle.evaluate(&ones).unwrap(), c_lambda(&l, &g));
    }

    #[test]
    fn product_and_sum_forms_match(l in three_parts(), g in coupling()) {
        let sum = f_lambda_sum_form(&l, &g).unwrap();
        prop_assert_eq!(&f_lambda_product_form_with(&l, &g, Evaluation::Limit).unwrap(), &sum);
        prop_assert_eq!(sum.evaluate(&int(1)), b_lambda(&l, &g));
    }

    #[test]
    fn one_row_stable_in_variable_count(r in 0usize..5, g in coupling()) {
        let mut parts = vec![r];
        parts.resize(4, 0);
        prop_assert_eq!(jack_one_row(r, 4, &g), jack_oracle(&p(&parts), &g, 4).unwrap());
    }

    #[test]
    fn rectangular_in_four_variables(r in 0usize..3, g in coupling()) {
        prop_assert_eq!(jack_rectangular(r, 4, &g).unwrap(), jack_oracle(&p(&[r, r, r, 0]), &g, 4).unwrap());
    }
}
