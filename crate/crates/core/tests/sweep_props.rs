mod common;

use common::*;
use proptest::prelude::*;
use tcgame::efficiency::{exposure_sweep, minimize_cost};
use tcgame::{Cell, Exposure, Rational, Scalar};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn sweep_is_concave_and_matches_pointwise_minimum(
        t in arb_transaction(6),
        lo in 1i64..=100,
        width in 1i64..=1000,
        probes in proptest::collection::vec(0i64..=10_000, 100),
    ) {
        let (a, b) = (q(lo, 10), q(lo, 10) + Rational::from_i64(width));
        let sw = exposure_sweep(&t, a.clone(), b.clone()).unwrap();
        let zero = Rational::from_i64(0);
        prop_assert_eq!(&sw.segments.first().unwrap().e_lo, &a);
        prop_assert_eq!(&sw.segments.last().unwrap().e_hi, &b);
        for w in sw.segments.windows(2) {
            prop_assert_eq!(&w[0].e_hi, &w[1].e_lo);
            prop_assert!(w[1].slope < w[0].slope, "slopes must strictly fall at a breakpoint");
            // continuity at the joint
            let x = w[0].e_hi.clone();
            prop_assert_eq!(
                w[0].intercept.clone() + w[0].slope.clone() * x.clone(),
                w[1].intercept.clone() + w[1].slope.clone() * x
            );
        }
        for s in &sw.segments {
            prop_assert!(s.slope >= zero);
            prop_assert!(s.e_lo < s.e_hi);
        }
        let span = b.clone() - a.clone();
        let mut prev: Option<Rational> = None;
        let mut xs: Vec<Rational> = probes.iter().map(|k| a.clone() + span.clone() * q(*k, 10_000)).collect();
        xs.sort();
        for x in &xs {
            let v = sw.value_at(x).unwrap();
            let direct = minimize_cost(&t, &Exposure::new(x.clone()).unwrap()).unwrap().value;
            prop_assert_eq!(&v, &direct);
            if let Some(p) = &prev {
                prop_assert!(v >= *p);
            }
            prev = Some(v);
        }
        // midpoint concavity
        for w in xs.windows(2) {
            let mid = (w[0].clone() + w[1].clone()) / Rational::from_i64(2);
            let avg = (sw.value_at(&w[0]).unwrap() + sw.value_at(&w[1]).unwrap()) / Rational::from_i64(2);
            prop_assert!(sw.value_at(&mid).unwrap() >= avg);
        }
    }

    #[test]
    fn float_sweep_tracks_exact_sweep(t in arb_transaction(4)) {
        let exact = exposure_sweep(&t, q(1, 2), Rational::from_i64(500)).unwrap();
        let float = exposure_sweep(&t.convert::<f64>().unwrap(), 0.5, 500.0).unwrap();
        prop_assert_eq!(exact.breakpoints.len(), float.breakpoints.len());
        for (a, b) in exact.breakpoints.iter().zip(&float.breakpoints) {
            prop_assert!((a.exposure.to_f64() - b.exposure).abs() < 1e-9);
        }
    }
}

#[test]
fn table1_breakpoints_are_exact() {
    let sw = exposure_sweep(&table1::<Rational>(), q(1, 2), Rational::from_i64(250)).unwrap();
    let bps: Vec<Rational> = sw.breakpoints.iter().map(|b| b.exposure.clone()).collect();
    assert_eq!(bps, vec![q(20, 19), q(50, 1), q(100, 1)]);
    assert_eq!(
        sw.breakpoints[2].argmin,
        vec![Cell(1, 1), Cell(1, 2), Cell(2, 1), Cell(2, 2)]
    );
}

#[test]
fn table1_breakpoints_in_floating_point() {
    let sw = exposure_sweep(&table1::<f64>(), 0.5, 250.0).unwrap();
    let want = [20.0 / 19.0, 50.0, 100.0];
    assert_eq!(sw.breakpoints.len(), 3);
    for (b, w) in sw.breakpoints.iter().zip(want) {
        assert!((b.exposure - w).abs() <= 1e-9, "{} vs {}", b.exposure, w);
    }
}
