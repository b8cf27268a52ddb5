//! Mixed equilibria by support enumeration.
//!
//! Supports are visited by increasing size, then lexicographically for
//! Player 1 and Player 2. For each equal-size pair the indifference systems
//! are solved exactly (or with partial pivoting in floating point); singular
//! systems are skipped and counted in the report notes.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::grid::{Cell, Grid};
use crate::linalg::solve_square;
use crate::scalar::Scalar;

use super::game::{pure_equilibria, BimatrixGame};

pub const DEFAULT_SUPPORT_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct MixedProfile<T> {
    /// Player 1's probabilities over rows.
    pub p: Vec<T>,
    /// Player 2's probabilities over columns.
    pub q: Vec<T>,
    pub cost1: T,
    pub cost2: T,
}

impl<T: Scalar> MixedProfile<T> {
    /// Expected value of `values` under the product distribution.
    pub fn expectation(&self, values: &Grid<T>) -> T {
        let mut acc = T::zero();
        for (c, v) in values.iter() {
            acc = acc + self.p[c.0].clone() * self.q[c.1].clone() * v.clone();
        }
        acc
    }

    pub fn as_pure(&self) -> Option<Cell> {
        let i = self.p.iter().position(|x| x.approx_eq(&T::one()))?;
        let j = self.q.iter().position(|x| x.approx_eq(&T::one()))?;
        Some(Cell(i, j))
    }

    /// Largest saving any pure deviation offers either player; a verified
    /// equilibrium has slack at most the tolerance.
    pub fn best_response_slack(&self, g: &BimatrixGame<T>) -> T {
        let (n, m) = g.shape();
        let mut worst = T::zero();
        for i in 0..n {
            let dev = (0..m).fold(T::zero(), |acc, j| {
                acc + self.q[j].clone() * g.cost1()[Cell(i, j)].clone()
            });
            let gain = self.cost1.clone() - dev;
            if gain > worst {
                worst = gain;
            }
        }
        for j in 0..m {
            let dev = (0..n).fold(T::zero(), |acc, i| {
                acc + self.p[i].clone() * g.cost2()[Cell(i, j)].clone()
            });
            let gain = self.cost2.clone() - dev;
            if gain > worst {
                worst = gain;
            }
        }
        worst
    }

    fn same_as(&self, other: &MixedProfile<T>) -> bool {
        self.p.iter().zip(&other.p).all(|(a, b)| a.approx_eq(b))
            && self.q.iter().zip(&other.q).all(|(a, b)| a.approx_eq(b))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumReport<T> {
    pub pure: Vec<Cell>,
    pub mixed: Vec<MixedProfile<T>>,
    pub notes: Vec<String>,
}

pub fn mixed_equilibria<T: Scalar>(g: &BimatrixGame<T>) -> Result<EquilibriumReport<T>> {
    mixed_equilibria_capped(g, DEFAULT_SUPPORT_CAP)
}

pub fn mixed_equilibria_capped<T: Scalar>(g: &BimatrixGame<T>, cap: usize) -> Result<EquilibriumReport<T>> {
    let (n, m) = g.shape();
    if n > cap || m > cap {
        return Err(Error::SupportCapExceeded { rows: n, cols: m, cap });
    }
    if g.is_restricted() {
        return Err(Error::RestrictedGame);
    }
    let mut mixed: Vec<MixedProfile<T>> = Vec::new();
    let mut singular = 0usize;
    for k in 1..=n.min(m) {
        for rows in (0..n).combinations(k) {
            for cols in (0..m).combinations(k) {
                match solve_support(g, &rows, &cols) {
                    Support::Singular => singular += 1,
                    Support::Rejected => {}
                    Support::Equilibrium(profile) => {
                        if !mixed.iter().any(|x| x.same_as(&profile)) {
                            mixed.push(profile);
                        }
                    }
                }
            }
        }
    }
    let mut notes = vec![format!(
        "support enumeration over {}x{} game, sizes 1..={}",
        n,
        m,
        n.min(m)
    )];
    if singular > 0 {
        notes.push(format!("{} singular support systems skipped", singular));
    }
    if mixed.is_empty() {
        notes.push("no equilibrium with nonsingular equal-size supports".to_string());
    }
    Ok(EquilibriumReport {
        pure: pure_equilibria(g),
        mixed,
        notes,
    })
}

enum Support<T> {
    Singular,
    Rejected,
    Equilibrium(MixedProfile<T>),
}

/// Mix over `support` making the opponent indifferent across
/// `opponent_support`, plus the opponent's common payment.
/// `payment(own, opp)` is the opponent's payment.
fn indifference<T: Scalar>(
    support: &[usize],
    opponent_support: &[usize],
    payment: impl Fn(usize, usize) -> T,
) -> Option<(Vec<T>, T)> {
    let k = support.len();
    let mut a = Vec::with_capacity(k + 1);
    let mut b = Vec::with_capacity(k + 1);
    for &opp in opponent_support {
        let mut row: Vec<T> = support.iter().map(|&own| payment(own, opp)).collect();
        row.push(-T::one());
        a.push(row);
        b.push(T::zero());
    }
    let mut total = vec![T::one(); k];
    total.push(T::zero());
    a.push(total);
    b.push(T::one());
    let mut x = solve_square(a, b)?;
    let value = x.pop()?;
    Some((x, value))
}

fn solve_support<T: Scalar>(g: &BimatrixGame<T>, rows: &[usize], cols: &[usize]) -> Support<T> {
    let (n, m) = g.shape();
    // Player 2's mix makes Player 1 indifferent over `rows`, and vice versa.
    let Some((q_s, cost1)) = indifference(cols, rows, |j, i| g.cost1()[Cell(i, j)].clone()) else {
        return Support::Singular;
    };
    let Some((p_s, cost2)) = indifference(rows, cols, |i, j| g.cost2()[Cell(i, j)].clone()) else {
        return Support::Singular;
    };
    if p_s.iter().chain(&q_s).any(|x| x.definitely_lt(&T::zero())) {
        return Support::Rejected;
    }
    let clamp = |x: T| if x < T::zero() { T::zero() } else { x };
    let mut p = vec![T::zero(); n];
    for (&i, x) in rows.iter().zip(p_s) {
        p[i] = clamp(x);
    }
    let mut q = vec![T::zero(); m];
    for (&j, x) in cols.iter().zip(q_s) {
        q[j] = clamp(x);
    }
    let profile = MixedProfile { p, q, cost1, cost2 };
    if profile.best_response_slack(g) > T::tolerance() {
        return Support::Rejected;
    }
    Support::Equilibrium(profile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn matching_pennies_mixes_evenly() {
        let q = |n| Rational::from_i64(n);
        let c1 = Grid::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]]).unwrap();
        let c2 = Grid::from_rows(vec![vec![q(1), q(0)], vec![q(0), q(1)]]).unwrap();
        let g = BimatrixGame::new(c1, c2).unwrap();
        let r = mixed_equilibria(&g).unwrap();
        assert!(r.pure.is_empty());
        assert_eq!(r.mixed.len(), 1);
        let half = Rational::ratio(1, 2);
        assert_eq!(r.mixed[0].p, vec![half.clone(), half.clone()]);
        assert_eq!(r.mixed[0].q, vec![half.clone(), half.clone()]);
        assert_eq!(r.mixed[0].cost1, half);
    }

    #[test]
    fn one_by_one_game() {
        let c = Grid::from_rows(vec![vec![2.0]]).unwrap();
        let g = BimatrixGame::new(c.clone(), c).unwrap();
        let r = mixed_equilibria(&g).unwrap();
        assert_eq!(r.mixed.len(), 1);
        assert_eq!(r.mixed[0].as_pure(), Some(Cell(0, 0)));
    }

    #[test]
    fn cap_is_enforced() {
        let c = Grid::from_fn(3, 9, |_, _| 1.0);
        let g = BimatrixGame::new(c.clone(), c).unwrap();
        assert!(matches!(
            mixed_equilibria(&g),
            Err(Error::SupportCapExceeded { rows: 3, cols: 9, cap: 8 })
        ));
        assert!(mixed_equilibria_capped(&g, 9).is_ok());
    }
}
