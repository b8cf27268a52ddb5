//! Disputes over how the transaction cost is split.
//!
//! Each player may spend on arguing their share down. The dispute function
//! `s1(v1, v2)` gives Player 1's share of the stake after spends `v1` and
//! `v2`; Player 2 carries `1 - s1`. Who pays the spends is decided by the
//! [`Institution`]. Cells where `s1` is undefined are outside the strategy
//! space.

use std::fmt;

use crate::error::{Error, Result};
use crate::grid::{Cell, Grid};
use crate::model::{Exposure, TransactionType};
use crate::scalar::Scalar;
use crate::sharing::{pure_equilibria, BimatrixGame};

#[derive(Debug, Clone, PartialEq)]
pub enum Institution<T> {
    /// Each player pays their own dispute spend.
    EachPaysOwn,
    /// Player 1 pays the fraction `d1` of the combined spend.
    Proportional { d1: T },
    /// Player 1 initiates; unless their share strictly improves on the
    /// initial split they pay all dispute spend, otherwise Player 2 does.
    LoserPays,
}

impl<T: Scalar> fmt::Display for Institution<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Institution::EachPaysOwn => f.write_str("each-pays-own"),
            Institution::Proportional { d1 } => write!(f, "proportional(d1={})", d1.display_full()),
            Institution::LoserPays => f.write_str("loser-pays"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Player {
    One,
    Two,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DisputeModel<T> {
    spend1: Vec<T>,
    spend2: Vec<T>,
    share1: Grid<Option<T>>,
    stake: T,
    institution: Institution<T>,
}

fn check_spends<T: Scalar>(who: &str, spends: &[T]) -> Result<()> {
    let first = spends
        .first()
        .ok_or_else(|| Error::InvalidDispute(format!("{} has no spend levels", who)))?;
    if !first.is_zero() {
        return Err(Error::InvalidDispute(format!(
            "{}'s first spend level must be 0 (no dispute), got {}",
            who,
            first.display_full()
        )));
    }
    for w in spends.windows(2) {
        if !w[1].is_finite() || w[1] <= w[0] {
            return Err(Error::InvalidDispute(format!(
                "{}'s spend levels must be finite and strictly increasing",
                who
            )));
        }
    }
    Ok(())
}

impl<T: Scalar> DisputeModel<T> {
    pub fn new(
        spend1: Vec<T>,
        spend2: Vec<T>,
        share1: Grid<Option<T>>,
        stake: T,
        institution: Institution<T>,
    ) -> Result<Self> {
        check_spends("player 1", &spend1)?;
        check_spends("player 2", &spend2)?;
        if share1.shape() != (spend1.len(), spend2.len()) {
            return Err(Error::ShapeMismatch {
                expected: (spend1.len(), spend2.len()),
                found: share1.shape(),
            });
        }
        if !matches!(share1.get(0, 0), Some(Some(_))) {
            return Err(Error::InvalidDispute(
                "dispute function must be defined at (0,0), the initial split".into(),
            ));
        }
        for (c, v) in share1.iter() {
            if let Some(s) = v {
                if !s.is_finite() || *s < T::zero() || *s > T::one() {
                    return Err(Error::InvalidDispute(format!(
                        "share {} at {} is outside [0,1]",
                        s.display_full(),
                        c
                    )));
                }
            }
        }
        if !stake.is_finite() || stake < T::zero() {
            return Err(Error::InvalidDispute(format!(
                "stake must be nonnegative, got {}",
                stake.display_full()
            )));
        }
        if let Institution::Proportional { d1 } = &institution {
            if !d1.is_finite() || *d1 < T::zero() || *d1 > T::one() {
                return Err(Error::InvalidInstitution(format!(
                    "d1 = {} is outside [0,1]",
                    d1.display_full()
                )));
            }
        }
        Ok(DisputeModel {
            spend1,
            spend2,
            share1,
            stake,
            institution,
        })
    }

    pub fn spend1(&self) -> &[T] {
        &self.spend1
    }

    pub fn spend2(&self) -> &[T] {
        &self.spend2
    }

    pub fn share_grid(&self) -> &Grid<Option<T>> {
        &self.share1
    }

    pub fn share1(&self, c: Cell) -> Option<&T> {
        self.share1.get(c.0, c.1).and_then(Option::as_ref)
    }

    pub fn stake(&self) -> &T {
        &self.stake
    }

    pub fn institution(&self) -> &Institution<T> {
        &self.institution
    }

    pub fn initial_share(&self) -> &T {
        self.share1(Cell(0, 0)).expect("validated on construction")
    }

    pub fn with_stake(&self, stake: T) -> Result<Self> {
        Self::new(
            self.spend1.clone(),
            self.spend2.clone(),
            self.share1.clone(),
            stake,
            self.institution.clone(),
        )
    }

    pub fn with_institution(&self, institution: Institution<T>) -> Result<Self> {
        Self::new(
            self.spend1.clone(),
            self.spend2.clone(),
            self.share1.clone(),
            self.stake.clone(),
            institution,
        )
    }

    /// Payments `(player 1, player 2)` at a defined cell.
    pub fn payments(&self, c: Cell) -> Option<(T, T)> {
        let s = self.share1(c)?.clone();
        let v1 = self.spend1[c.0].clone();
        let v2 = self.spend2[c.1].clone();
        let spend = v1.clone() + v2.clone();
        let part1 = s.clone() * self.stake.clone();
        let part2 = (T::one() - s.clone()) * self.stake.clone();
        Some(match &self.institution {
            Institution::EachPaysOwn => (v1 + part1, v2 + part2),
            Institution::Proportional { d1 } => (
                d1.clone() * spend.clone() + part1,
                (T::one() - d1.clone()) * spend + part2,
            ),
            Institution::LoserPays => {
                if c == Cell(0, 0) {
                    (part1, part2)
                } else if s.definitely_lt(self.initial_share()) {
                    (part1, part2 + spend)
                } else {
                    (part1 + spend, part2)
                }
            }
        })
    }

    /// Advisory shape findings: the share should fall (convexly) in Player 1's
    /// spend and rise (concavely) in Player 2's.
    pub fn shape_warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        let (n, m) = self.share1.shape();
        for j in 0..m {
            let line: Vec<(T, T)> = (0..n)
                .filter_map(|i| self.share1(Cell(i, j)).map(|s| (self.spend1[i].clone(), s.clone())))
                .collect();
            out.extend(check_line(&line, false).into_iter().map(|w| format!("column {}: share {}", j, w)));
        }
        for i in 0..n {
            let line: Vec<(T, T)> = (0..m)
                .filter_map(|j| self.share1(Cell(i, j)).map(|s| (self.spend2[j].clone(), s.clone())))
                .collect();
            out.extend(check_line(&line, true).into_iter().map(|w| format!("row {}: share {}", i, w)));
        }
        out
    }
}

/// `rising`: expect nondecreasing and concave; otherwise nonincreasing and convex.
fn check_line<T: Scalar>(pts: &[(T, T)], rising: bool) -> Vec<String> {
    let mut out = Vec::new();
    let slopes: Vec<T> = pts
        .windows(2)
        .map(|w| (w[1].1.clone() - w[0].1.clone()) / (w[1].0.clone() - w[0].0.clone()))
        .collect();
    if rising && slopes.iter().any(|s| s.definitely_lt(&T::zero())) {
        out.push("decreases in player 2's spend".to_string());
    }
    if !rising && slopes.iter().any(|s| T::zero().definitely_lt(s)) {
        out.push("increases in player 1's own spend".to_string());
    }
    let bends = slopes.windows(2);
    if rising {
        if bends.clone().any(|w| w[0].definitely_lt(&w[1])) {
            out.push("is not concave in player 2's spend".to_string());
        }
    } else if bends.clone().any(|w| w[1].definitely_lt(&w[0])) {
        out.push("is not convex in player 1's spend".to_string());
    }
    out
}

pub fn build_dispute_game<T: Scalar>(d: &DisputeModel<T>) -> Result<BimatrixGame<T>> {
    let (n, m) = d.share1.shape();
    let pay = |i, j| d.payments(Cell(i, j));
    let cost1 = Grid::from_fn(n, m, |i, j| pay(i, j).map_or_else(T::zero, |p| p.0));
    let cost2 = Grid::from_fn(n, m, |i, j| pay(i, j).map_or_else(T::zero, |p| p.1));
    let allowed = d.share1.map(|_, v| v.is_some());
    BimatrixGame::new(cost1, cost2)?
        .with_allowed(allowed)
        .map(|g| g.with_note(format!("institution: {}", d.institution)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlayMode {
    Simultaneous,
    Sequential { leader: Player },
}

#[derive(Debug, Clone, PartialEq)]
pub struct DisputeCell<T> {
    pub cell: Cell,
    pub v1: T,
    pub v2: T,
    pub share1: T,
    pub cost1: T,
    pub cost2: T,
    /// Stake plus both spends.
    pub total: T,
}

/// Follower's best reply to one leader move.
#[derive(Debug, Clone, PartialEq)]
pub struct Reply<T> {
    pub leader_move: usize,
    pub follower_move: usize,
    pub leader_cost: T,
    pub follower_cost: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DisputeOutcome<T> {
    pub mode: PlayMode,
    pub game: BimatrixGame<T>,
    /// Equilibrium cells (simultaneous) or the single induction path.
    pub outcomes: Vec<DisputeCell<T>>,
    /// Backward-induction table; empty for simultaneous play.
    pub replies: Vec<Reply<T>>,
    /// Some outcome leaves both players strictly worse off than not disputing.
    pub prisoners_dilemma: bool,
}

fn describe<T: Scalar>(d: &DisputeModel<T>, c: Cell) -> DisputeCell<T> {
    let (cost1, cost2) = d.payments(c).expect("defined cell");
    let v1 = d.spend1[c.0].clone();
    let v2 = d.spend2[c.1].clone();
    DisputeCell {
        cell: c,
        total: d.stake.clone() + v1.clone() + v2.clone(),
        v1,
        v2,
        share1: d.share1(c).cloned().expect("defined cell"),
        cost1,
        cost2,
    }
}

fn dilemma<T: Scalar>(d: &DisputeModel<T>, cells: &[DisputeCell<T>]) -> bool {
    let (b1, b2) = d.payments(Cell(0, 0)).expect("validated on construction");
    cells
        .iter()
        .any(|x| x.cell != Cell(0, 0) && b1.definitely_lt(&x.cost1) && b2.definitely_lt(&x.cost2))
}

pub fn simultaneous_equilibria<T: Scalar>(d: &DisputeModel<T>) -> Result<DisputeOutcome<T>> {
    let game = build_dispute_game(d)?;
    let outcomes: Vec<_> = pure_equilibria(&game).into_iter().map(|c| describe(d, c)).collect();
    Ok(DisputeOutcome {
        mode: PlayMode::Simultaneous,
        prisoners_dilemma: dilemma(d, &outcomes),
        game,
        outcomes,
        replies: Vec::new(),
    })
}

/// Backward induction. The follower answers each leader move with their
/// cheapest defined cell, the leader picks the move whose answered payment
/// is lowest; ties go to the lower spend on both sides.
pub fn sequential_solve<T: Scalar>(d: &DisputeModel<T>, leader: Player) -> Result<DisputeOutcome<T>> {
    let game = build_dispute_game(d)?;
    let (n, m) = game.shape();
    let (leader_moves, follower_moves) = match leader {
        Player::One => (n, m),
        Player::Two => (m, n),
    };
    let cell = |l: usize, f: usize| match leader {
        Player::One => Cell(l, f),
        Player::Two => Cell(f, l),
    };
    let costs = |c: Cell| {
        let (c1, c2) = (game.cost1()[c].clone(), game.cost2()[c].clone());
        match leader {
            Player::One => (c1, c2),
            Player::Two => (c2, c1),
        }
    };
    let mut replies = Vec::new();
    for l in 0..leader_moves {
        let mut best: Option<(usize, T, T)> = None;
        for f in (0..follower_moves).filter(|&f| game.is_allowed(cell(l, f))) {
            let (lc, fc) = costs(cell(l, f));
            if best.as_ref().is_none_or(|(_, _, b)| fc.definitely_lt(b)) {
                best = Some((f, lc, fc));
            }
        }
        if let Some((f, lc, fc)) = best {
            replies.push(Reply {
                leader_move: l,
                follower_move: f,
                leader_cost: lc,
                follower_cost: fc,
            });
        }
    }
    let chosen = replies
        .iter()
        .fold(None::<&Reply<T>>, |best, r| match best {
            Some(b) if !r.leader_cost.definitely_lt(&b.leader_cost) => Some(b),
            _ => Some(r),
        })
        .ok_or_else(|| Error::InvalidDispute("no defined cells".into()))?;
    let outcomes = vec![describe(d, cell(chosen.leader_move, chosen.follower_move))];
    Ok(DisputeOutcome {
        mode: PlayMode::Sequential { leader },
        prisoners_dilemma: dilemma(d, &outcomes),
        game,
        outcomes,
        replies,
    })
}

/// Total cost including both players' dispute spend.
pub fn grand_total<T: Scalar>(
    t: &TransactionType<T>,
    e: &Exposure<T>,
    c: Cell,
    v1: T,
    v2: T,
) -> Result<T> {
    if v1 < T::zero() || v2 < T::zero() {
        return Err(Error::InvalidDispute("dispute spend must be nonnegative".into()));
    }
    Ok(t.total_cost(e, c)?.total + v1 + v2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(rows: Vec<Vec<Option<f64>>>) -> Grid<Option<f64>> {
        Grid::from_rows(rows).unwrap()
    }

    fn symmetric(stake: f64) -> DisputeModel<f64> {
        let s = |v: [f64; 3]| v.iter().map(|x| Some(*x)).collect();
        DisputeModel::new(
            vec![0.0, 1.0, 2.0],
            vec![0.0, 1.0, 2.0],
            grid(vec![s([0.5, 0.8, 0.9]), s([0.2, 0.5, 0.6]), s([0.1, 0.4, 0.5])]),
            stake,
            Institution::EachPaysOwn,
        )
        .unwrap()
    }

    #[test]
    fn validation() {
        let bad_first = DisputeModel::new(
            vec![1.0],
            vec![0.0],
            grid(vec![vec![Some(0.5)]]),
            1.0,
            Institution::<f64>::EachPaysOwn,
        );
        assert!(bad_first.is_err());
        let undefined_origin = DisputeModel::new(
            vec![0.0],
            vec![0.0],
            grid(vec![vec![None]]),
            1.0,
            Institution::<f64>::EachPaysOwn,
        );
        assert!(undefined_origin.is_err());
        let bad_d1 = symmetric(5.0).with_institution(Institution::Proportional { d1: 1.5 });
        assert!(matches!(bad_d1, Err(Error::InvalidInstitution(_))));
    }

    #[test]
    fn conservation_in_every_institution() {
        let base = symmetric(5.0);
        for inst in [
            Institution::EachPaysOwn,
            Institution::Proportional { d1: 0.3 },
            Institution::LoserPays,
        ] {
            let d = base.with_institution(inst).unwrap();
            for c in d.share_grid().cells() {
                let (a, b) = d.payments(c).unwrap();
                let expect = d.stake() + d.spend1()[c.0] + d.spend2()[c.1];
                assert!((a + b - expect).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn well_shaped_function_has_no_warnings() {
        assert!(symmetric(5.0).shape_warnings().is_empty());
    }

    #[test]
    fn share_rising_in_own_spend_is_flagged() {
        let s = |v: [f64; 2]| v.iter().map(|x| Some(*x)).collect();
        let d = DisputeModel::new(
            vec![0.0, 1.0],
            vec![0.0, 1.0],
            grid(vec![s([0.5, 0.7]), s([0.6, 0.8])]),
            1.0,
            Institution::EachPaysOwn,
        )
        .unwrap();
        let w = d.shape_warnings();
        assert!(w.iter().any(|x| x.contains("increases in player 1's own spend")), "{:?}", w);
    }

    #[test]
    fn one_row_sequential_is_the_follower_reply() {
        let d = DisputeModel::new(
            vec![0.0],
            vec![0.0, 1.0],
            grid(vec![vec![Some(0.5), Some(0.9)]]),
            10.0,
            Institution::EachPaysOwn,
        )
        .unwrap();
        let out = sequential_solve(&d, Player::One).unwrap();
        assert_eq!(out.replies.len(), 1);
        // follower pays 5 at (0,0) and 1 + 1 = 2 at (0,1)
        assert_eq!(out.outcomes[0].cell, Cell(0, 1));
    }

    #[test]
    fn grand_total_adds_spend() {
        let t = TransactionType::full_grid(vec![0.0, 1.0], vec![0.0, 1.0], vec![vec![1.0, 0.05], vec![0.05, 0.03]])
            .unwrap();
        let e = Exposure::new(60.0).unwrap();
        let g = grand_total(&t, &e, Cell(1, 1), 1.0, 1.0).unwrap();
        assert!((g - 5.8).abs() < 1e-12);
        assert_eq!(grand_total(&t, &e, Cell(0, 0), 2.0, 3.0).unwrap(), 65.0);
        assert!(grand_total(&t, &e, Cell(0, 0), -1.0, 0.0).is_err());
    }
}
