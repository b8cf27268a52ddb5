mod common;

use common::*;
use proptest::prelude::*;
use tcgame::efficiency::{decision_points, minimize_cost, relevant_set, verify_certificate, Certificate, EliminationReason};
use tcgame::{Exposure, Rational, Scalar};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn kept_points_preserve_the_optimum(t in arb_transaction(6), es in proptest::collection::vec(arb_exposure(), 5)) {
        let rs = relevant_set(&t).unwrap();
        for e in es {
            let e = Exposure::new(e).unwrap();
            let all = minimize_cost(&t, &e).unwrap();
            let kept_min = rs.kept.iter().map(|p| t.tc(&e, p.cell).unwrap()).min().unwrap();
            prop_assert_eq!(&kept_min, &all.value);
            prop_assert!(all.argmin.iter().any(|c| rs.is_kept(*c)));
        }
    }

    #[test]
    fn relevance_ignores_loss_scale(t in arb_transaction(6), k in 1i64..=100) {
        let s = q(k, 100);
        let a = relevant_set(&t).unwrap();
        let b = relevant_set(&t.with_scaled_losses(&s)).unwrap();
        prop_assert_eq!(a.kept_cells(), b.kept_cells());
    }

    #[test]
    fn certificates_verify(t in arb_transaction(6)) {
        let rs = relevant_set(&t).unwrap();
        let points = decision_points(&t);
        prop_assert_eq!(rs.kept.len() + rs.eliminated.len(), points.len());
        for el in &rs.eliminated {
            prop_assert!(verify_certificate(el, &points), "{:?}", el);
            prop_assert!(!rs.is_kept(el.point.cell));
        }
    }

    #[test]
    fn float_and_exact_agree_on_kept_set(t in arb_transaction(4)) {
        let f = t.convert::<f64>().unwrap();
        prop_assert_eq!(relevant_set(&t).unwrap().kept_cells(), relevant_set(&f).unwrap().kept_cells());
    }

    /// A unique minimiser of a strictly positive weighting of (z1, z2, pl)
    /// lies on the lower hull, so it can never be eliminated.
    #[test]
    fn eliminated_points_never_uniquely_minimise_a_weighting(t in arb_transaction(4)) {
        let rs = relevant_set(&t).unwrap();
        let points = decision_points(&t);
        for w1 in 1..=5i64 {
            for w2 in 1..=5i64 {
                for w3 in [1i64, 3, 10, 30, 100, 300] {
                    let score = |p: &tcgame::efficiency::DecisionPoint<Rational>| {
                        Rational::from_i64(w1) * p.z1.clone()
                            + Rational::from_i64(w2) * p.z2.clone()
                            + Rational::from_i64(w3) * p.pl.clone()
                    };
                    let best = points.iter().map(score).min().unwrap();
                    let winners: Vec<_> = points.iter().filter(|p| score(p) == best).collect();
                    if winners.len() == 1 {
                        prop_assert!(rs.is_kept(winners[0].cell));
                    }
                }
            }
        }
    }
}

#[test]
fn table1_keeps_every_pair() {
    let rs = relevant_set(&table1::<Rational>()).unwrap();
    assert_eq!(rs.kept.len(), 9);
    assert!(rs.eliminated.is_empty());
}

#[test]
fn dominated_point_names_its_dominator() {
    let t = tcgame::TransactionType::full_grid(
        vec![q(0, 1), q(1, 1), q(2, 1)],
        vec![q(0, 1)],
        vec![vec![q(1, 2)], vec![q(1, 2)], vec![q(0, 1)]],
    )
    .unwrap();
    let rs = relevant_set(&t).unwrap();
    let el = rs.elimination(tcgame::Cell(1, 0)).unwrap();
    assert_eq!(el.reason, EliminationReason::ParetoDominated);
    assert!(matches!(el.certificate, Certificate::Dominator(tcgame::Cell(0, 0))));
}
