use std::fmt;

use crate::error::{Error, Result};
use crate::grid::{Cell, Grid};
use crate::model::{Exposure, TransactionType};
use crate::scalar::Scalar;

use super::game::{argmin_set, BimatrixGame};

/// Player 1's share of the total cost in every cell; Player 2 pays the rest.
#[derive(Debug, Clone, PartialEq)]
pub struct SharingRule<T> {
    c1: Grid<T>,
}

impl<T: Scalar> SharingRule<T> {
    pub fn new(c1: Grid<T>) -> Result<Self> {
        for (c, v) in c1.iter() {
            if !v.is_finite() || *v < T::zero() || *v > T::one() {
                return Err(Error::InvalidShare(format!(
                    "share {} at {} is outside [0,1]",
                    v.display_full(),
                    c
                )));
            }
        }
        Ok(SharingRule { c1 })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let grid = Grid::from_rows(rows).ok_or_else(|| Error::InvalidShare("ragged share matrix".into()))?;
        Self::new(grid)
    }

    pub fn shape(&self) -> (usize, usize) {
        self.c1.shape()
    }

    pub fn c1(&self, c: Cell) -> &T {
        &self.c1[c]
    }

    pub fn c2(&self, c: Cell) -> T {
        T::one() - self.c1[c].clone()
    }

    pub fn grid(&self) -> &Grid<T> {
        &self.c1
    }
}

/// The same share `c` in every cell. Shares of exactly 0 or 1 leave one
/// player with nothing at stake and are rejected.
pub fn fixed_share_rule<T: Scalar>(c: T, shape: (usize, usize)) -> Result<SharingRule<T>> {
    if !(T::zero() < c && c < T::one()) {
        return Err(Error::InvalidShare(format!(
            "fixed share {} must lie strictly between 0 and 1",
            c.display_full()
        )));
    }
    SharingRule::new(Grid::from_fn(shape.0, shape.1, |_, _| c.clone()))
}

/// Payments under `rule`. Executable pairs split the total cost; pairs that
/// cannot execute leave each player with their own direct cost.
pub fn build_game<T: Scalar>(
    t: &TransactionType<T>,
    e: &Exposure<T>,
    rule: &SharingRule<T>,
) -> Result<BimatrixGame<T>> {
    if rule.shape() != t.shape() {
        return Err(Error::ShapeMismatch {
            expected: t.shape(),
            found: rule.shape(),
        });
    }
    let (n, m) = t.shape();
    let split = |c: Cell| match t.tc(e, c) {
        Some(tc) => (rule.c1(c).clone() * tc.clone(), rule.c2(c) * tc),
        None => (t.player1().cost(c.0).clone(), t.player2().cost(c.1).clone()),
    };
    let cost1 = Grid::from_fn(n, m, |i, j| split(Cell(i, j)).0);
    let cost2 = Grid::from_fn(n, m, |i, j| split(Cell(i, j)).1);
    let mut game = BimatrixGame::new(cost1, cost2)?;
    if t.feasible_cells().count() < n * m {
        game = game.with_note("infeasible pairs: each player pays their own direct cost");
    }
    Ok(game)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    /// Player 1 responding to Player 2's column.
    Column(usize),
    /// Player 2 responding to Player 1's row.
    Row(usize),
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Column(j) => write!(f, "column {}", j),
            Line::Row(i) => write!(f, "row {}", i),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub line: Line,
    /// Best responses under the rule's payments.
    pub payment_argmin: Vec<usize>,
    /// Conditional total-cost minima along the same line.
    pub cost_argmin: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: payment-argmin {:?} vs cost-argmin {:?}",
            self.line, self.payment_argmin, self.cost_argmin
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimizerCheck {
    /// Every violating line; columns first, then rows.
    pub violations: Vec<Violation>,
}

impl OptimizerCheck {
    pub fn is_optimizer(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn witness(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

/// Checks that every best response under the rule coincides, as a set, with
/// the conditional total-cost minima. Both sides range over executable pairs
/// only; lines without one are skipped.
pub fn is_optimizer<T: Scalar>(
    rule: &SharingRule<T>,
    t: &TransactionType<T>,
    e: &Exposure<T>,
) -> Result<OptimizerCheck> {
    let game = build_game(t, e, rule)?;
    let (n, m) = t.shape();
    let mut violations = Vec::new();
    for j in 0..m {
        let cost_argmin = argmin_set((0..n).filter_map(|i| t.tc(e, Cell(i, j)).map(|v| (i, v))));
        if cost_argmin.is_empty() {
            continue;
        }
        let payment_argmin = argmin_set(
            (0..n)
                .filter(|&i| t.is_feasible(Cell(i, j)))
                .map(|i| (i, game.cost1()[Cell(i, j)].clone())),
        );
        if payment_argmin != cost_argmin {
            violations.push(Violation {
                line: Line::Column(j),
                payment_argmin,
                cost_argmin,
            });
        }
    }
    for i in 0..n {
        let cost_argmin = argmin_set((0..m).filter_map(|j| t.tc(e, Cell(i, j)).map(|v| (j, v))));
        if cost_argmin.is_empty() {
            continue;
        }
        let payment_argmin = argmin_set(
            (0..m)
                .filter(|&j| t.is_feasible(Cell(i, j)))
                .map(|j| (j, game.cost2()[Cell(i, j)].clone())),
        );
        if payment_argmin != cost_argmin {
            violations.push(Violation {
                line: Line::Row(i),
                payment_argmin,
                cost_argmin,
            });
        }
    }
    Ok(OptimizerCheck { violations })
}
