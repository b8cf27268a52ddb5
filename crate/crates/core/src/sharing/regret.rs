//! Regret at the optimum and sharing rules built around it.
//!
//! A player's regret is the extra payment at their cheapest executable
//! unilateral deviation from the cost-minimal cell. The balanced design charges each
//! deviating player the whole cost of their deviation cells and picks the
//! optimum share that equalizes both regrets.

use crate::efficiency::minimize_cost;
use crate::error::{Error, Result};
use crate::grid::{Cell, Grid};
use crate::model::{Exposure, TransactionType};
use crate::scalar::Scalar;

use super::game::argmin_set;
use super::rule::{build_game, is_optimizer, SharingRule};

#[derive(Debug, Clone, PartialEq)]
pub struct RegretProfile<T> {
    pub optimum: Cell,
    pub r1: T,
    pub r2: T,
    /// Cheapest deviation for each player, measured in their own payment.
    pub deviation1: Cell,
    pub deviation2: Cell,
    /// Deviation with the smallest total-cost increase. Differs from the
    /// payment-based cell only under unusual rules.
    pub cost_deviation1: Cell,
    pub cost_deviation2: Cell,
    pub balanced: bool,
}

fn unique_optimum<T: Scalar>(t: &TransactionType<T>, e: &Exposure<T>) -> Result<(Cell, T)> {
    let opt = minimize_cost(t, e)?;
    match opt.argmin.as_slice() {
        [c] => Ok((*c, opt.value)),
        cells => Err(Error::MultipleOptima(cells.to_vec())),
    }
}

fn check_deviations(shape: (usize, usize)) -> Result<()> {
    if shape.0 < 2 {
        return Err(Error::NoDeviation(1));
    }
    if shape.1 < 2 {
        return Err(Error::NoDeviation(2));
    }
    Ok(())
}

pub fn regret_profile<T: Scalar>(
    rule: &SharingRule<T>,
    t: &TransactionType<T>,
    e: &Exposure<T>,
    opt: Cell,
) -> Result<RegretProfile<T>> {
    let best = minimize_cost(t, e)?;
    if !best.argmin.contains(&opt) {
        return Err(Error::NotOptimal(opt));
    }
    check_deviations(t.shape())?;
    let game = build_game(t, e, rule)?;
    let (n, m) = t.shape();
    let Cell(io, jo) = opt;

    let rows = || (0..n).filter(|&i| i != io && t.is_feasible(Cell(i, jo)));
    let cols = || (0..m).filter(|&j| j != jo && t.is_feasible(Cell(io, j)));
    let dev1 = *argmin_set(rows().map(|i| (i, game.cost1()[Cell(i, jo)].clone())))
        .first()
        .ok_or(Error::NoDeviation(1))?;
    let dev2 = *argmin_set(cols().map(|j| (j, game.cost2()[Cell(io, j)].clone())))
        .first()
        .ok_or(Error::NoDeviation(2))?;
    let cost_dev1 = Cell(argmin_set(rows().filter_map(|i| t.tc(e, Cell(i, jo)).map(|v| (i, v))))[0], jo);
    let cost_dev2 = Cell(io, argmin_set(cols().filter_map(|j| t.tc(e, Cell(io, j)).map(|v| (j, v))))[0]);

    let r1 = game.cost1()[Cell(dev1, jo)].clone() - game.cost1()[opt].clone();
    let r2 = game.cost2()[Cell(io, dev2)].clone() - game.cost2()[opt].clone();
    let balanced = r1.approx_eq(&r2);
    Ok(RegretProfile {
        optimum: opt,
        r1,
        r2,
        deviation1: Cell(dev1, jo),
        deviation2: Cell(io, dev2),
        cost_deviation1: cost_dev1,
        cost_deviation2: cost_dev2,
        balanced,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BalancedDesign<T> {
    pub rule: SharingRule<T>,
    /// Player 1's share at the optimum and away from the deviation cells.
    pub share: T,
    /// The balancing share fell outside `[0,1]` and was clamped.
    pub clamped: bool,
    pub regret: RegretProfile<T>,
}

impl<T: Scalar> BalancedDesign<T> {
    pub fn residual_imbalance(&self) -> T {
        (self.regret.r1.clone() - self.regret.r2.clone()).abs()
    }
}

/// Maximum-regret rule. Player 1 pays everything when deviating alone along
/// the optimum column, Player 2 when deviating along the optimum row. The
/// optimum share `c` solves `min1 - c*T = min2 - (1-c)*T` where `min_k` is
/// the cheapest feasible deviation cost for player `k` and `T` the optimum
/// cost. When `T` is zero any share balances and `share_hint` (default ½)
/// is used.
pub fn design_balanced_rule<T: Scalar>(
    t: &TransactionType<T>,
    e: &Exposure<T>,
    share_hint: Option<T>,
) -> Result<BalancedDesign<T>> {
    let (opt, total) = unique_optimum(t, e)?;
    check_deviations(t.shape())?;
    let (n, m) = t.shape();
    let Cell(io, jo) = opt;
    let cheapest = |cells: Vec<Cell>, player: u8| {
        cells
            .into_iter()
            .filter_map(|c| t.tc(e, c))
            .reduce(|a, b| if b < a { b } else { a })
            .ok_or(Error::NoDeviation(player))
    };
    let min1 = cheapest((0..n).filter(|&i| i != io).map(|i| Cell(i, jo)).collect(), 1)?;
    let min2 = cheapest((0..m).filter(|&j| j != jo).map(|j| Cell(io, j)).collect(), 2)?;

    let two = T::from_i64(2);
    let raw = if total.is_approx_zero() {
        share_hint.unwrap_or_else(|| T::ratio(1, 2))
    } else {
        (min1 - min2 + total.clone()) / (two * total)
    };
    let (share, clamped) = if raw < T::zero() {
        (T::zero(), true)
    } else if raw > T::one() {
        (T::one(), true)
    } else {
        (raw, false)
    };

    let c1 = Grid::from_fn(n, m, |i, j| {
        if j == jo && i != io {
            T::one()
        } else if i == io && j != jo {
            T::zero()
        } else {
            share.clone()
        }
    });
    let rule = SharingRule::new(c1)?;
    let check = is_optimizer(&rule, t, e)?;
    if let Some(w) = check.witness() {
        return Err(Error::DesignNotOptimizer(format!(
            "share {} gives {}",
            share.display_full(),
            w
        )));
    }
    let regret = regret_profile(&rule, t, e, opt)?;
    Ok(BalancedDesign {
        rule,
        share,
        clamped,
        regret,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct MistakeRule<T> {
    pub rule: SharingRule<T>,
    /// Deviation cells where the deviator's share hit 1.
    pub clamped: Vec<Cell>,
}

/// "Pay for your mistake": at a unilateral deviation the deviator alone
/// carries the cost increase over the optimum, so the other player keeps
/// paying exactly their optimum payment.
pub fn pay_for_mistake_rule<T: Scalar>(
    t: &TransactionType<T>,
    e: &Exposure<T>,
    base_share: T,
) -> Result<MistakeRule<T>> {
    if !(T::zero() < base_share && base_share < T::one()) {
        return Err(Error::InvalidShare(format!(
            "base share {} must lie strictly between 0 and 1",
            base_share.display_full()
        )));
    }
    let (opt, total) = unique_optimum(t, e)?;
    check_deviations(t.shape())?;
    let (n, m) = t.shape();
    let Cell(io, jo) = opt;
    let mut clamped = Vec::new();
    let mut c1 = Grid::from_fn(n, m, |_, _| base_share.clone());
    // deviator's share = (own optimum payment + damage) / deviation cost
    let mut deviator_share = |own: T, dev: T, c: Cell| {
        let s = (own + dev.clone() - total.clone()) / dev;
        if s > T::one() {
            clamped.push(c);
            T::one()
        } else {
            s
        }
    };
    for i in (0..n).filter(|&i| i != io) {
        let c = Cell(i, jo);
        if let Some(dev) = t.tc(e, c) {
            c1[c] = deviator_share(base_share.clone() * total.clone(), dev, c);
        }
    }
    for j in (0..m).filter(|&j| j != jo) {
        let c = Cell(io, j);
        if let Some(dev) = t.tc(e, c) {
            let own = (T::one() - base_share.clone()) * total.clone();
            c1[c] = T::one() - deviator_share(own, dev, c);
        }
    }
    Ok(MistakeRule {
        rule: SharingRule::new(c1)?,
        clamped,
    })
}
