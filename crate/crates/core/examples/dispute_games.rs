//! After the fact the players fight over who carries a loss. Spending more
//! on the dispute moves the expected share; the institution decides who
//! pays the dispute costs.

use tcgame::dispute::{sequential_solve, simultaneous_equilibria, DisputeModel, Institution, Player};
use tcgame::{Grid, Rational, Scalar};

fn main() -> tcgame::Result<()> {
    let levels = vec![Rational::from_i64(0), Rational::from_i64(1), Rational::from_i64(2)];
    let s = [[5, 8, 9], [2, 5, 6], [1, 4, 5]];
    let share = Grid::from_fn(3, 3, |i, j| Some(Rational::ratio(s[i][j], 10)));

    for stake in [3, 5] {
        let d = DisputeModel::new(
            levels.clone(),
            levels.clone(),
            share.clone(),
            Rational::from_i64(stake),
            Institution::EachPaysOwn,
        )?;
        let out = simultaneous_equilibria(&d)?;
        for o in &out.outcomes {
            println!(
                "stake {}: equilibrium {} costs {} / {}{}",
                stake,
                o.cell,
                o.cost1.display_full(),
                o.cost2.display_full(),
                if out.prisoners_dilemma { "  (both worse off than not disputing)" } else { "" }
            );
        }
    }

    let d = DisputeModel::new(
        levels.clone(),
        levels,
        share,
        Rational::from_i64(5),
        Institution::LoserPays,
    )?;
    let out = sequential_solve(&d, Player::One)?;
    println!("loser pays, player 1 moves first:");
    for r in &out.replies {
        println!(
            "  leader {} -> follower {}  ({} / {})",
            r.leader_move,
            r.follower_move,
            r.leader_cost.display_full(),
            r.follower_cost.display_full()
        );
    }
    println!("  path {}", out.outcomes[0].cell);
    Ok(())
}
