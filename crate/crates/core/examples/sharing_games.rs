//! A sharing rule splits each pair's total cost between the two players and
//! turns the choice into a bimatrix game. Three rules, three outcomes.

use tcgame::sharing::{build_game, mixed_equilibria, pure_equilibria, SharingRule};
use tcgame::{Exposure, Rational, Scalar, TransactionType};

fn r(x: f64) -> Rational {
    Rational::from_f64(x).unwrap()
}

fn main() -> tcgame::Result<()> {
    let p = |n| Rational::ratio(n, 100);
    let costs = || vec![r(0.0), r(1.0), r(2.0)];
    let t = TransactionType::full_grid(
        costs(),
        costs(),
        vec![vec![p(100), p(5), p(4)], vec![p(5), p(3), p(2)], vec![p(4), p(2), p(1)]],
    )?;
    let e = Exposure::new(Rational::from_i64(60))?;

    let rules = [
        ("equal split", [[0.5; 3]; 3]),
        ("skewed", [[0.5, 0.5, 0.9], [0.1, 0.3, 0.9], [0.3, 0.1, 0.5]]),
        ("cycling", [[0.5, 0.5, 0.9], [0.1, 0.3, 0.2], [0.3, 0.1, 0.5]]),
    ];
    for (name, rows) in rules {
        let rule = SharingRule::from_rows(rows.iter().map(|row| row.iter().map(|x| r(*x)).collect()).collect())?;
        let g = build_game(&t, &e, &rule)?;
        let pure = pure_equilibria(&g);
        let shown: Vec<String> = pure.iter().map(ToString::to_string).collect();
        println!("{}: pure equilibria {}", name, if pure.is_empty() { "none".into() } else { shown.join(" ") });
        if pure.is_empty() {
            for m in mixed_equilibria(&g)?.mixed {
                let show = |v: &[Rational]| v.iter().map(Scalar::display_full).collect::<Vec<_>>().join(", ");
                println!("  mixed p = [{}], q = [{}]", show(&m.p), show(&m.q));
                println!(
                    "  expected costs {} and {}",
                    m.cost1.display_full(),
                    m.cost2.display_full()
                );
            }
        }
    }
    Ok(())
}
