mod common;

use common::*;
use proptest::prelude::*;
use tcgame::efficiency::minimize_cost;
use tcgame::{Cell, Exposure, Rational, Scalar};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn total_cost_is_affine_in_exposure(t in arb_transaction(6), a in arb_exposure(), b in arb_exposure()) {
        let (ea, eb) = (Exposure::new(a.clone()).unwrap(), Exposure::new(b.clone()).unwrap());
        for c in t.feasible_cells() {
            let slope = t.loss(c).unwrap().clone();
            prop_assert_eq!(t.tc(&eb, c).unwrap() - t.tc(&ea, c).unwrap(), slope * (b.clone() - a.clone()));
        }
    }

    #[test]
    fn cost_plus_yield_is_direct_cost_plus_exposure(t in arb_transaction(6), e in arb_exposure()) {
        let ex = Exposure::new(e.clone()).unwrap();
        for c in t.feasible_cells() {
            let total = t.total_cost(&ex, c).unwrap();
            prop_assert_eq!(total.z1.clone() + total.z2.clone() + total.expected_loss.clone(), total.total.clone());
            prop_assert_eq!(total.total + t.yield_value(&ex, c).unwrap(), t.direct_cost(c) + e.clone());
        }
    }

    #[test]
    fn valid_types_have_no_diagnostics(t in arb_transaction(6)) {
        prop_assert!(t.validate().is_empty());
    }
}

#[test]
fn optimum_moves_with_exposure() {
    let t = table1::<Rational>();
    let at = |e: i64| minimize_cost(&t, &Exposure::new(Rational::from_i64(e)).unwrap()).unwrap();
    let r = at(60);
    assert_eq!((r.value, r.argmin), (q(38, 10), vec![Cell(1, 1)]));
    let r = at(1);
    assert_eq!((r.value, r.argmin), (q(1, 1), vec![Cell(0, 0)]));
    let r = at(120);
    assert_eq!((r.value, r.argmin), (q(52, 10), vec![Cell(2, 2)]));
}

#[test]
fn optimum_display_matches_one_decimal_rounding() {
    let t = table1::<f64>();
    let e = Exposure::new(60.0).unwrap();
    let printed = [[60.0, 4.0, 4.4], [4.0, 3.8, 4.2], [4.4, 4.2, 4.6]];
    for (i, row) in printed.iter().enumerate() {
        for (j, want) in row.iter().enumerate() {
            let shown: f64 = t.tc(&e, Cell(i, j)).unwrap().round_display(1).parse().unwrap();
            assert!((shown - want).abs() <= 0.05, "({},{}) shows {}", i, j, shown);
        }
    }
}

#[test]
fn invalid_inputs_are_rejected() {
    assert!(Exposure::new(0.0).is_err());
    assert!(Exposure::new(f64::NAN).is_err());
    let err = tcgame::TransactionType::full_grid(vec![0.0], vec![0.0], vec![vec![1.5]]).unwrap_err();
    assert!(err.to_string().contains("loss out of [0,1] at (0,0)"), "{}", err);
}
