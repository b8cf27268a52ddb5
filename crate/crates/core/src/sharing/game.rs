use crate::error::{Error, Result};
use crate::grid::{Cell, Grid};
use crate::scalar::Scalar;

/// Two-player game in cost form: each player minimizes their own payment.
#[derive(Debug, Clone, PartialEq)]
pub struct BimatrixGame<T> {
    cost1: Grid<T>,
    cost2: Grid<T>,
    /// Cells outside the strategy space, e.g. undefined dispute outcomes.
    allowed: Option<Grid<bool>>,
    pub notes: Vec<String>,
}

impl<T: Scalar> BimatrixGame<T> {
    pub fn new(cost1: Grid<T>, cost2: Grid<T>) -> Result<Self> {
        if cost1.shape() != cost2.shape() {
            return Err(Error::ShapeMismatch {
                expected: cost1.shape(),
                found: cost2.shape(),
            });
        }
        if let Some((c, _)) = cost1.iter().chain(cost2.iter()).find(|(_, v)| !v.is_finite()) {
            return Err(Error::InvalidShare(format!("non-finite payment at {}", c)));
        }
        Ok(BimatrixGame {
            cost1,
            cost2,
            allowed: None,
            notes: Vec::new(),
        })
    }

    pub fn with_allowed(mut self, allowed: Grid<bool>) -> Result<Self> {
        if allowed.shape() != self.cost1.shape() {
            return Err(Error::ShapeMismatch {
                expected: self.cost1.shape(),
                found: allowed.shape(),
            });
        }
        self.allowed = Some(allowed);
        Ok(self)
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn shape(&self) -> (usize, usize) {
        self.cost1.shape()
    }

    pub fn cost1(&self) -> &Grid<T> {
        &self.cost1
    }

    pub fn cost2(&self) -> &Grid<T> {
        &self.cost2
    }

    pub fn is_allowed(&self, c: Cell) -> bool {
        self.allowed.as_ref().is_none_or(|a| a[c])
    }

    pub fn is_restricted(&self) -> bool {
        self.allowed.as_ref().is_some_and(|a| a.iter().any(|(_, ok)| !ok))
    }

    pub fn allowed_cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cost1.cells().filter(|&c| self.is_allowed(c))
    }

    /// Rows Player 1 may answer with in column `j`.
    pub fn rows_in_col(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.cost1.rows()).filter(move |&i| self.is_allowed(Cell(i, j)))
    }

    /// Columns Player 2 may answer with in row `i`.
    pub fn cols_in_row(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.cost1.cols()).filter(move |&j| self.is_allowed(Cell(i, j)))
    }

    /// No allowed unilateral deviation lowers the deviator's payment.
    pub fn is_pure_equilibrium(&self, c: Cell) -> bool {
        if !self.is_allowed(c) {
            return false;
        }
        let Cell(i, j) = c;
        self.rows_in_col(j)
            .all(|k| self.cost1[c].approx_le(&self.cost1[Cell(k, j)]))
            && self
                .cols_in_row(i)
                .all(|k| self.cost2[c].approx_le(&self.cost2[Cell(i, k)]))
    }
}

/// All mutual-best-response cells, row-major. May be empty.
pub fn pure_equilibria<T: Scalar>(g: &BimatrixGame<T>) -> Vec<Cell> {
    g.allowed_cells().filter(|&c| g.is_pure_equilibrium(c)).collect()
}

/// Lowest-index minimizers of `f` over `items`, within tolerance.
pub(crate) fn argmin_set<T: Scalar>(items: impl IntoIterator<Item = (usize, T)>) -> Vec<usize> {
    let items: Vec<(usize, T)> = items.into_iter().collect();
    let Some(best) = items
        .iter()
        .map(|(_, v)| v.clone())
        .reduce(|a, b| if b < a { b } else { a })
    else {
        return Vec::new();
    };
    items
        .into_iter()
        .filter(|(_, v)| v.approx_eq(&best))
        .map(|(k, _)| k)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prisoners_dilemma_has_one_equilibrium() {
        let c1 = Grid::from_rows(vec![vec![1.0, 3.0], vec![0.0, 2.0]]).unwrap();
        let c2 = Grid::from_rows(vec![vec![1.0, 0.0], vec![3.0, 2.0]]).unwrap();
        let g = BimatrixGame::new(c1, c2).unwrap();
        assert_eq!(pure_equilibria(&g), vec![Cell(1, 1)]);
    }

    #[test]
    fn disallowed_cells_are_not_deviations() {
        let c1 = Grid::from_rows(vec![vec![1.0, 0.0], vec![0.0, 2.0]]).unwrap();
        let c2 = Grid::from_rows(vec![vec![1.0, 0.0], vec![3.0, 2.0]]).unwrap();
        let mask = Grid::from_rows(vec![vec![true, false], vec![false, true]]).unwrap();
        let g = BimatrixGame::new(c1, c2).unwrap().with_allowed(mask).unwrap();
        assert_eq!(pure_equilibria(&g), vec![Cell(0, 0), Cell(1, 1)]);
    }

    #[test]
    fn shape_mismatch() {
        let c1 = Grid::from_rows(vec![vec![1.0, 0.0]]).unwrap();
        let c2 = Grid::from_rows(vec![vec![1.0]]).unwrap();
        assert!(matches!(BimatrixGame::new(c1, c2), Err(Error::ShapeMismatch { .. })));
    }
}
