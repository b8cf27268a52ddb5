//! Checking whether a rule steers players to the optimum, and building
//! rules that do: a fixed share, balanced maximum regret, and
//! pay-for-your-mistake.

use tcgame::sharing::{
    build_game, design_balanced_rule, fixed_share_rule, is_optimizer, pay_for_mistake_rule, pure_equilibria,
    SharingRule,
};
use tcgame::{Exposure, Rational, Scalar, TransactionType};

fn show(rule: &SharingRule<Rational>) {
    for row in rule.grid().to_rows() {
        let cells: Vec<String> = row.iter().map(|x| format!("{:>6}", x.display_full())).collect();
        println!("    {}", cells.join(""));
    }
}

fn main() -> tcgame::Result<()> {
    let p = |n| Rational::ratio(n, 100);
    let costs = || vec![Rational::from_i64(0), Rational::from_i64(1), Rational::from_i64(2)];
    let t = TransactionType::full_grid(
        costs(),
        costs(),
        vec![vec![p(100), p(5), p(4)], vec![p(5), p(3), p(2)], vec![p(4), p(2), p(1)]],
    )?;
    let e = Exposure::new(Rational::from_i64(60))?;

    let skewed = SharingRule::from_rows(
        [[5, 5, 9], [1, 3, 9], [3, 1, 5]]
            .iter()
            .map(|row| row.iter().map(|k| Rational::ratio(*k, 10)).collect())
            .collect(),
    )?;
    let check = is_optimizer(&skewed, &t, &e)?;
    println!("skewed rule is an optimizer: {}", check.is_optimizer());
    for v in &check.violations {
        println!("  {}", v);
    }

    let fixed = fixed_share_rule(Rational::ratio(3, 10), t.shape())?;
    println!("fixed 0.3 share is an optimizer: {}", is_optimizer(&fixed, &t, &e)?.is_optimizer());

    let d = design_balanced_rule(&t, &e, None)?;
    println!("balanced design, share at optimum {}:", d.share.display_full());
    show(&d.rule);
    println!(
        "  regrets {} / {}, equilibria {}",
        d.regret.r1.display_full(),
        d.regret.r2.display_full(),
        pure_equilibria(&build_game(&t, &e, &d.rule)?)
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    );

    let m = pay_for_mistake_rule(&t, &e, Rational::ratio(1, 2))?;
    println!("pay for your mistake (base 1/2), clamped at {:?}:", m.clamped);
    show(&m.rule);
    Ok(())
}
