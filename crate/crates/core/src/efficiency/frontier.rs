//! Relevance filtering of decision pairs.
//!
//! A pair is irrelevant when another pair, or a convex combination of other
//! pairs, costs no more for either player and loses no more, with at least
//! one strict improvement. Irrelevant pairs are never cost-minimal at any
//! exposure, because total cost is a positive combination of the three
//! coordinates.

use crate::grid::Cell;
use crate::lp::{self, LpOutcome, StandardLp};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct DecisionPoint<T> {
    pub cell: Cell,
    pub z1: T,
    pub z2: T,
    pub pl: T,
}

impl<T: Scalar> DecisionPoint<T> {
    fn coords(&self) -> [&T; 3] {
        [&self.z1, &self.z2, &self.pl]
    }

    /// Weakly better in every coordinate and strictly better in one.
    pub fn dominates(&self, other: &DecisionPoint<T>) -> bool {
        let pairs = self.coords().into_iter().zip(other.coords());
        let mut strict = false;
        for (a, b) in pairs {
            if !a.approx_le(b) {
                return false;
            }
            strict |= a.definitely_lt(b);
        }
        strict
    }

    fn same_coords(&self, other: &DecisionPoint<T>) -> bool {
        self.coords()
            .into_iter()
            .zip(other.coords())
            .all(|(a, b)| a.approx_eq(b))
    }

    fn same_cost(&self, other: &DecisionPoint<T>) -> bool {
        self.z1.approx_eq(&other.z1) && self.z2.approx_eq(&other.z2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EliminationReason {
    /// Same direct costs as another pair with a lower loss probability.
    DuplicateCostHigherLoss,
    /// Identical to an earlier pair in all three coordinates.
    ExactDuplicate,
    ParetoDominated,
    AboveConvexHull,
}

impl EliminationReason {
    pub fn as_str(self) -> &'static str {
        match self {
            EliminationReason::DuplicateCostHigherLoss => "duplicate-cost-higher-loss",
            EliminationReason::ExactDuplicate => "exact-duplicate",
            EliminationReason::ParetoDominated => "pareto-dominated",
            EliminationReason::AboveConvexHull => "above-convex-hull",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Certificate<T> {
    /// A single pair that dominates (or duplicates) the eliminated one.
    Dominator(Cell),
    /// Convex weights over other pairs whose combination dominates.
    Weights(Vec<(Cell, T)>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Elimination<T> {
    pub point: DecisionPoint<T>,
    pub reason: EliminationReason,
    pub certificate: Certificate<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RelevantSet<T> {
    pub kept: Vec<DecisionPoint<T>>,
    pub eliminated: Vec<Elimination<T>>,
}

impl<T: Scalar> RelevantSet<T> {
    pub fn kept_cells(&self) -> Vec<Cell> {
        self.kept.iter().map(|p| p.cell).collect()
    }

    pub fn is_kept(&self, c: Cell) -> bool {
        self.kept.iter().any(|p| p.cell == c)
    }

    pub fn elimination(&self, c: Cell) -> Option<&Elimination<T>> {
        self.eliminated.iter().find(|e| e.point.cell == c)
    }
}

fn sorted<T: Clone>(points: &[DecisionPoint<T>]) -> Vec<DecisionPoint<T>> {
    let mut v = points.to_vec();
    v.sort_by_key(|p| p.cell);
    v
}

pub fn dominance_filter<T: Scalar>(points: &[DecisionPoint<T>]) -> RelevantSet<T> {
    let points = sorted(points);
    let mut out = RelevantSet {
        kept: Vec::new(),
        eliminated: Vec::new(),
    };
    for p in &points {
        let others = || points.iter().filter(|q| q.cell != p.cell);
        let same_cost = others().find(|q| q.same_cost(p) && q.dominates(p));
        let any = others().find(|q| q.dominates(p));
        let earlier_twin = others().find(|q| q.cell < p.cell && q.same_coords(p));
        let verdict = same_cost
            .map(|q| (q, EliminationReason::DuplicateCostHigherLoss))
            .or(any.map(|q| (q, EliminationReason::ParetoDominated)))
            .or(earlier_twin.map(|q| (q, EliminationReason::ExactDuplicate)));
        match verdict {
            Some((q, reason)) => out.eliminated.push(Elimination {
                point: p.clone(),
                reason,
                certificate: Certificate::Dominator(q.cell),
            }),
            None => out.kept.push(p.clone()),
        }
    }
    out
}

/// Searches convex weights over `others` whose combination weakly improves
/// on `p` in all coordinates and strictly in one.
///
/// Loss improvement is maximized first with direct costs capped at `p`'s;
/// only when no combination lowers the loss is the cost slack maximized.
pub fn dominating_combination<T: Scalar>(
    p: &DecisionPoint<T>,
    others: &[DecisionPoint<T>],
) -> Option<Vec<(Cell, T)>> {
    if others.is_empty() {
        return None;
    }
    [[false, false, true], [true, true, false]]
        .into_iter()
        .find_map(|weights| max_slack(p, others, weights))
}

fn max_slack<T: Scalar>(
    p: &DecisionPoint<T>,
    others: &[DecisionPoint<T>],
    slack_weights: [bool; 3],
) -> Option<Vec<(Cell, T)>> {
    let k = others.len();
    let unit = |idx: usize| (0..3).map(move |s| if s == idx { T::one() } else { T::zero() });
    // columns: lambda_1..lambda_k, slack_z1, slack_z2, slack_pl
    let mut rows = Vec::with_capacity(4);
    for (coord, target) in p.coords().into_iter().enumerate() {
        let mut row: Vec<T> = others.iter().map(|q| q.coords()[coord].clone()).collect();
        row.extend(unit(coord));
        rows.push((row, target.clone()));
    }
    let mut convexity: Vec<T> = vec![T::one(); k];
    convexity.extend((0..3).map(|_| T::zero()));
    rows.push((convexity, T::one()));

    let mut objective = vec![T::zero(); k];
    objective.extend(slack_weights.iter().map(|&w| if w { T::one() } else { T::zero() }));
    let (rows, rhs) = rows.into_iter().unzip();
    let program = StandardLp { rows, rhs, objective };
    match lp::solve(&program) {
        LpOutcome::Optimal { x, value } if value > T::tolerance() => Some(
            others
                .iter()
                .zip(x)
                .filter(|(_, w)| !w.is_zero())
                .map(|(q, w)| (q.cell, w))
                .collect(),
        ),
        _ => None,
    }
}

pub fn hull_relevance<T: Scalar>(points: &[DecisionPoint<T>]) -> RelevantSet<T> {
    let points = sorted(points);
    let mut out = RelevantSet {
        kept: Vec::new(),
        eliminated: Vec::new(),
    };
    for p in &points {
        let others: Vec<_> = points.iter().filter(|q| q.cell != p.cell).cloned().collect();
        match dominating_combination(p, &others) {
            Some(weights) => out.eliminated.push(Elimination {
                point: p.clone(),
                reason: EliminationReason::AboveConvexHull,
                certificate: Certificate::Weights(weights),
            }),
            None => out.kept.push(p.clone()),
        }
    }
    out
}

/// Re-checks an elimination certificate against the full point list.
pub fn verify_certificate<T: Scalar>(elim: &Elimination<T>, points: &[DecisionPoint<T>]) -> bool {
    let find = |c: Cell| points.iter().find(|q| q.cell == c);
    let p = &elim.point;
    match &elim.certificate {
        Certificate::Dominator(c) => {
            let Some(q) = find(*c) else { return false };
            if *c == p.cell {
                return false;
            }
            match elim.reason {
                EliminationReason::ExactDuplicate => q.cell < p.cell && q.same_coords(p),
                EliminationReason::DuplicateCostHigherLoss => q.same_cost(p) && q.dominates(p),
                _ => q.dominates(p),
            }
        }
        Certificate::Weights(weights) => {
            if weights.is_empty() || weights.iter().any(|(c, w)| *c == p.cell || *w < T::zero()) {
                return false;
            }
            let mut combo = [T::zero(), T::zero(), T::zero()];
            let mut total = T::zero();
            for (c, w) in weights {
                let Some(q) = find(*c) else { return false };
                for (acc, v) in combo.iter_mut().zip(q.coords()) {
                    *acc = acc.clone() + w.clone() * v.clone();
                }
                total = total + w.clone();
            }
            if !total.approx_eq(&T::one()) {
                return false;
            }
            let mut strict = false;
            for (c, v) in combo.iter().zip(p.coords()) {
                if !c.approx_le(v) {
                    return false;
                }
                strict |= c.definitely_lt(v);
            }
            strict
        }
    }
}
