use crate::error::Result;
use crate::grid::Cell;
use crate::model::{Exposure, TransactionType};
use crate::scalar::Scalar;

use super::relevant_set;

/// One grid cell of the loss and total-cost surfaces. Infeasible cells carry
/// no loss or total.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceRow<T> {
    pub cell: Cell,
    pub z1: T,
    pub z2: T,
    pub pl: Option<T>,
    pub tc: Option<T>,
    pub relevant: bool,
}

pub fn surface_export<T: Scalar>(t: &TransactionType<T>, e: &Exposure<T>) -> Result<Vec<SurfaceRow<T>>> {
    let relevant = relevant_set(t)?;
    let (n, m) = t.shape();
    let mut rows = Vec::with_capacity(n * m);
    for i in 0..n {
        for j in 0..m {
            let c = Cell(i, j);
            rows.push(SurfaceRow {
                cell: c,
                z1: t.player1().cost(i).clone(),
                z2: t.player2().cost(j).clone(),
                pl: t.loss(c).cloned(),
                tc: t.tc(e, c),
                relevant: relevant.is_kept(c),
            });
        }
    }
    Ok(rows)
}
