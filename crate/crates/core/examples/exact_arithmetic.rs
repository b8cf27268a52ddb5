//! The same solvers in f64 and in exact rationals. Rationals give the
//! breakpoints and mixed strategies as fractions.

use tcgame::efficiency::exposure_sweep;
use tcgame::sharing::{build_game, mixed_equilibria, SharingRule};
use tcgame::{Exposure, Rational, Scalar, TransactionType};

fn model<T: Scalar>() -> TransactionType<T> {
    let p = |n| T::ratio(n, 100);
    let costs = || vec![T::from_i64(0), T::from_i64(1), T::from_i64(2)];
    TransactionType::full_grid(
        costs(),
        costs(),
        vec![vec![p(100), p(5), p(4)], vec![p(5), p(3), p(2)], vec![p(4), p(2), p(1)]],
    )
    .unwrap()
}

fn breakpoints<T: Scalar>() -> Vec<String> {
    exposure_sweep(&model::<T>(), T::ratio(1, 2), T::from_i64(250))
        .unwrap()
        .breakpoints
        .iter()
        .map(|b| b.exposure.display_full())
        .collect()
}

fn main() -> tcgame::Result<()> {
    println!("breakpoints f64:      {}", breakpoints::<f64>().join(", "));
    println!("breakpoints rational: {}", breakpoints::<Rational>().join(", "));

    let rule = SharingRule::from_rows(
        [[5, 5, 9], [1, 3, 2], [3, 1, 5]]
            .iter()
            .map(|row| row.iter().map(|k| Rational::ratio(*k, 10)).collect())
            .collect(),
    )?;
    let g = build_game(&model(), &Exposure::new(Rational::from_i64(60))?, &rule)?;
    let m = &mixed_equilibria(&g)?.mixed[0];
    let frac = |v: &[Rational]| v.iter().map(Scalar::display_full).collect::<Vec<_>>().join(" ");
    println!("mixed p: {}", frac(&m.p));
    println!("mixed q: {}", frac(&m.q));
    println!("best-response slack: {}", m.best_response_slack(&g).display_full());
    Ok(())
}
