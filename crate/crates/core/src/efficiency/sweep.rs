//! Exact lower envelope of the affine cost lines `Tc_ij(e) = (z1 + z2) + Pl * e`.

use crate::error::{Error, Result};
use crate::grid::Cell;
use crate::model::TransactionType;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct Segment<T> {
    pub e_lo: T,
    pub e_hi: T,
    /// Cells optimal throughout the open interval; they share one cost line.
    pub argmin: Vec<Cell>,
    pub intercept: T,
    pub slope: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Breakpoint<T> {
    pub exposure: T,
    /// Every cell optimal at the breakpoint itself.
    pub argmin: Vec<Cell>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExposureSweep<T> {
    pub segments: Vec<Segment<T>>,
    pub breakpoints: Vec<Breakpoint<T>>,
}

impl<T: Scalar> ExposureSweep<T> {
    /// Optimal total cost at `e`, if `e` lies in the swept range.
    pub fn value_at(&self, e: &T) -> Option<T> {
        self.segment_at(e)
            .map(|s| s.intercept.clone() + s.slope.clone() * e.clone())
    }

    pub fn segment_at(&self, e: &T) -> Option<&Segment<T>> {
        self.segments
            .iter()
            .find(|s| s.e_lo.approx_le(e) && e.approx_le(&s.e_hi))
    }
}

struct Line<T> {
    cell: Cell,
    intercept: T,
    slope: T,
}

impl<T: Scalar> Line<T> {
    fn at(&self, e: &T) -> T {
        self.intercept.clone() + self.slope.clone() * e.clone()
    }
}

fn min_at<'a, T: Scalar>(lines: &'a [Line<T>], e: &T) -> (T, Vec<&'a Line<T>>) {
    let best = lines
        .iter()
        .map(|l| l.at(e))
        .reduce(|a, b| if b < a { b } else { a })
        .expect("at least one line");
    let tied = lines.iter().filter(|l| l.at(e).approx_eq(&best)).collect();
    (best, tied)
}

pub fn exposure_sweep<T: Scalar>(t: &TransactionType<T>, e_min: T, e_max: T) -> Result<ExposureSweep<T>> {
    if !(T::zero() < e_min && e_min < e_max) {
        return Err(Error::InvalidRange {
            from: e_min.display_full(),
            to: e_max.display_full(),
        });
    }
    let lines: Vec<Line<T>> = t
        .feasible_cells()
        .map(|c| Line {
            cell: c,
            intercept: t.direct_cost(c),
            slope: t.loss(c).cloned().unwrap_or_else(T::zero),
        })
        .collect();
    if lines.is_empty() {
        return Err(Error::EmptyFeasibleSet);
    }

    let mut segments = Vec::new();
    let mut breakpoints = Vec::new();
    let mut e = e_min;
    loop {
        // Right of `e` the optimum follows the flattest of the tied lines.
        let (_, tied) = min_at(&lines, &e);
        let slope = tied
            .iter()
            .map(|l| l.slope.clone())
            .reduce(|a, b| if b < a { b } else { a })
            .expect("tied set is nonempty");
        let current: Vec<&Line<T>> = tied.into_iter().filter(|l| l.slope.approx_eq(&slope)).collect();
        let intercept = current[0].intercept.clone();

        let next = lines
            .iter()
            .filter(|l| l.slope.definitely_lt(&slope))
            .map(|l| (l.intercept.clone() - intercept.clone()) / (slope.clone() - l.slope.clone()))
            .filter(|x| e.definitely_lt(x))
            .reduce(|a, b| if b < a { b } else { a });

        let e_hi = match &next {
            Some(x) if x.definitely_lt(&e_max) => x.clone(),
            _ => e_max.clone(),
        };
        segments.push(Segment {
            e_lo: e.clone(),
            e_hi: e_hi.clone(),
            argmin: current.iter().map(|l| l.cell).collect(),
            intercept,
            slope,
        });
        if !e_hi.definitely_lt(&e_max) {
            break;
        }
        let (_, at_break) = min_at(&lines, &e_hi);
        breakpoints.push(Breakpoint {
            exposure: e_hi.clone(),
            argmin: at_break.iter().map(|l| l.cell).collect(),
        });
        e = e_hi;
    }
    Ok(ExposureSweep {
        segments,
        breakpoints,
    })
}
