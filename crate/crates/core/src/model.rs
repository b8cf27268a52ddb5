//! Transaction types, exposures and the elementary cost formulas.
//!
//! A [`TransactionType`] fixes both players' choice sets, the direct cost of
//! every choice, which choice pairs can execute, and the probability of loss
//! of every executable pair. Individual transactions of the type differ only
//! in their [`Exposure`]. The total cost of a pair is
//! `z1(i) + z2(j) + Pl(i, j) * e`.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::grid::{Cell, Grid};
use crate::scalar::Scalar;

/// A validation finding, optionally anchored at a cell or choice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub message: String,
}

impl Diagnostic {
    pub fn new(message: impl Into<String>) -> Self {
        Diagnostic {
            message: message.into(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

/// Ordered effort levels of one player with their direct costs.
#[derive(Debug, Clone, PartialEq)]
pub struct ChoiceSet<T> {
    labels: Vec<String>,
    costs: Vec<T>,
}

impl<T: Scalar> ChoiceSet<T> {
    pub fn new(labels: Vec<String>, costs: Vec<T>) -> Result<Self> {
        let set = Self::from_parts(labels, costs);
        let diags = set.validate("player");
        if diags.is_empty() {
            Ok(set)
        } else {
            Err(Error::InvalidType(diags))
        }
    }

    /// Labels each choice with its cost.
    pub fn from_costs(costs: Vec<T>) -> Result<Self> {
        let labels = costs.iter().map(Scalar::display_full).collect();
        Self::new(labels, costs)
    }

    /// Unchecked constructor; pair with [`TransactionType::validate`].
    pub fn from_parts(labels: Vec<String>, costs: Vec<T>) -> Self {
        ChoiceSet { labels, costs }
    }

    pub fn len(&self) -> usize {
        self.costs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.costs.is_empty()
    }

    pub fn cost(&self, i: usize) -> &T {
        &self.costs[i]
    }

    pub fn costs(&self) -> &[T] {
        &self.costs
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    fn validate(&self, who: &str) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        if self.costs.is_empty() {
            out.push(Diagnostic::new(format!("{} has no choices", who)));
        }
        if self.labels.len() != self.costs.len() {
            out.push(Diagnostic::new(format!(
                "{} has {} labels for {} costs",
                who,
                self.labels.len(),
                self.costs.len()
            )));
        }
        for (i, c) in self.costs.iter().enumerate() {
            if !c.is_finite() || *c < T::zero() {
                out.push(Diagnostic::new(format!(
                    "{} choice {} has invalid cost {}",
                    who,
                    i,
                    c.display_full()
                )));
            }
        }
        let mut seen = HashSet::new();
        for label in &self.labels {
            if !seen.insert(label.as_str()) {
                out.push(Diagnostic::new(format!("{} label {:?} is duplicated", who, label)));
            }
        }
        out
    }
}

/// Size of the value at stake; the largest possible loss.
#[derive(Debug, Clone, PartialEq, PartialOrd)]
pub struct Exposure<T>(T);

impl<T: Scalar> Exposure<T> {
    pub fn new(e: T) -> Result<Self> {
        if e.is_finite() && e > T::zero() {
            Ok(Exposure(e))
        } else {
            Err(Error::InvalidExposure(e.display_full()))
        }
    }

    pub fn value(&self) -> &T {
        &self.0
    }

    pub fn into_inner(self) -> T {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CostBreakdown<T> {
    pub z1: T,
    pub z2: T,
    pub expected_loss: T,
    pub total: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TransactionType<T> {
    player1: ChoiceSet<T>,
    player2: ChoiceSet<T>,
    /// Loss probability per cell; `None` marks a pair that cannot execute.
    loss: Grid<Option<T>>,
}

impl<T: Scalar> TransactionType<T> {
    pub fn new(player1: ChoiceSet<T>, player2: ChoiceSet<T>, loss: Grid<Option<T>>) -> Result<Self> {
        let t = Self::from_parts(player1, player2, loss);
        let diags = t.validate();
        if diags.is_empty() {
            Ok(t)
        } else {
            Err(Error::InvalidType(diags))
        }
    }

    /// Every pair feasible; choices labelled by their cost.
    pub fn full_grid(costs1: Vec<T>, costs2: Vec<T>, loss: Vec<Vec<T>>) -> Result<Self> {
        let found = (loss.len(), loss.first().map_or(0, Vec::len));
        let loss = Grid::from_rows(loss.into_iter().map(|r| r.into_iter().map(Some).collect()).collect())
            .ok_or(Error::ShapeMismatch {
                expected: (costs1.len(), costs2.len()),
                found,
            })?;
        Self::new(ChoiceSet::from_costs(costs1)?, ChoiceSet::from_costs(costs2)?, loss)
    }

    /// Unchecked constructor.
    pub fn from_parts(player1: ChoiceSet<T>, player2: ChoiceSet<T>, loss: Grid<Option<T>>) -> Self {
        TransactionType { player1, player2, loss }
    }

    /// Every violated invariant, one diagnostic each. Empty means valid.
    pub fn validate(&self) -> Vec<Diagnostic> {
        let mut out = self.player1.validate("player 1");
        out.extend(self.player2.validate("player 2"));
        let expected = (self.player1.len(), self.player2.len());
        if self.loss.shape() != expected {
            out.push(Diagnostic::new(format!(
                "loss matrix is {}x{} but choice sets are {}x{}",
                self.loss.rows(),
                self.loss.cols(),
                expected.0,
                expected.1
            )));
        }
        if self.loss.iter().all(|(_, v)| v.is_none()) {
            out.push(Diagnostic::new("feasible set empty"));
        }
        for (cell, v) in self.loss.iter() {
            if let Some(pl) = v {
                if !pl.is_finite() || *pl < T::zero() || *pl > T::one() {
                    out.push(Diagnostic::new(format!("loss out of [0,1] at {}", cell)));
                }
            }
        }
        out
    }

    pub fn player1(&self) -> &ChoiceSet<T> {
        &self.player1
    }

    pub fn player2(&self) -> &ChoiceSet<T> {
        &self.player2
    }

    pub fn shape(&self) -> (usize, usize) {
        self.loss.shape()
    }

    pub fn loss_grid(&self) -> &Grid<Option<T>> {
        &self.loss
    }

    pub fn is_feasible(&self, c: Cell) -> bool {
        matches!(self.loss.get(c.0, c.1), Some(Some(_)))
    }

    pub fn loss(&self, c: Cell) -> Option<&T> {
        self.loss.get(c.0, c.1).and_then(Option::as_ref)
    }

    /// Feasible cells in row-major order.
    pub fn feasible_cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.loss.iter().filter(|(_, v)| v.is_some()).map(|(c, _)| c)
    }

    /// Sum of both direct costs at a cell, feasible or not.
    pub fn direct_cost(&self, c: Cell) -> T {
        self.player1.cost(c.0).clone() + self.player2.cost(c.1).clone()
    }

    /// `z1 + z2 + Pl * e`, or `None` when the pair cannot execute.
    pub fn tc(&self, e: &Exposure<T>, c: Cell) -> Option<T> {
        self.loss(c)
            .map(|pl| self.direct_cost(c) + pl.clone() * e.value().clone())
    }

    pub fn total_cost(&self, e: &Exposure<T>, c: Cell) -> Result<CostBreakdown<T>> {
        let pl = self.loss(c).ok_or(Error::InfeasiblePair(c))?;
        let z1 = self.player1.cost(c.0).clone();
        let z2 = self.player2.cost(c.1).clone();
        let expected_loss = pl.clone() * e.value().clone();
        let total = z1.clone() + z2.clone() + expected_loss.clone();
        Ok(CostBreakdown {
            z1,
            z2,
            expected_loss,
            total,
        })
    }

    /// `(1 - Pl) * e`: the part of the exposure the pair is expected to keep.
    pub fn yield_value(&self, e: &Exposure<T>, c: Cell) -> Result<T> {
        let pl = self.loss(c).ok_or(Error::InfeasiblePair(c))?;
        Ok((T::one() - pl.clone()) * e.value().clone())
    }

    /// Same type with every loss probability multiplied by `factor`.
    pub fn with_scaled_losses(&self, factor: &T) -> Self {
        TransactionType {
            player1: self.player1.clone(),
            player2: self.player2.clone(),
            loss: self.loss.map(|_, v| v.as_ref().map(|pl| pl.clone() * factor.clone())),
        }
    }

    /// Converts every number to another backend via its decimal form.
    pub fn convert<U: Scalar>(&self) -> Option<TransactionType<U>> {
        let conv = |x: &T| U::from_f64(x.to_f64());
        let costs1 = self.player1.costs.iter().map(conv).collect::<Option<Vec<_>>>()?;
        let costs2 = self.player2.costs.iter().map(conv).collect::<Option<Vec<_>>>()?;
        let mut cells = Vec::new();
        for (_, v) in self.loss.iter() {
            cells.push(match v {
                Some(pl) => Some(Some(conv(pl)?)),
                None => Some(None),
            });
        }
        let cells: Vec<Option<U>> = cells.into_iter().collect::<Option<Vec<_>>>()?;
        let (n, m) = self.loss.shape();
        let mut it = cells.into_iter();
        let loss = Grid::from_fn(n, m, |_, _| it.next().unwrap());
        Some(TransactionType {
            player1: ChoiceSet::from_parts(self.player1.labels.clone(), costs1),
            player2: ChoiceSet::from_parts(self.player2.labels.clone(), costs2),
            loss,
        })
    }
}
