//! Dense two-phase simplex for small standard-form programs.
//!
//! Solves `max c·x  s.t.  A x = b, x >= 0`. Bland's rule guarantees
//! termination, and with [`Rational`](crate::scalar::Rational) every pivot is
//! exact.

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome<T> {
    Optimal { x: Vec<T>, value: T },
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone)]
pub struct StandardLp<T> {
    /// Constraint rows, each of length `objective.len()`.
    pub rows: Vec<Vec<T>>,
    pub rhs: Vec<T>,
    pub objective: Vec<T>,
}

struct Tableau<T> {
    a: Vec<Vec<T>>,
    b: Vec<T>,
    basis: Vec<usize>,
}

impl<T: Scalar> Tableau<T> {
    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.a[r][col].clone();
        for v in self.a[r].iter_mut() {
            *v = v.clone() / p.clone();
        }
        self.b[r] = self.b[r].clone() / p;
        for i in 0..self.a.len() {
            if i == r || self.a[i][col].is_zero() {
                continue;
            }
            let f = self.a[i][col].clone();
            for j in 0..self.a[i].len() {
                let delta = f.clone() * self.a[r][j].clone();
                self.a[i][j] = self.a[i][j].clone() - delta;
            }
            self.b[i] = self.b[i].clone() - f * self.b[r].clone();
        }
        self.basis[r] = col;
    }

    fn reduced_cost(&self, cost: &[T], j: usize) -> T {
        let mut d = cost[j].clone();
        for (i, &bv) in self.basis.iter().enumerate() {
            d = d - cost[bv].clone() * self.a[i][j].clone();
        }
        d
    }

    /// Runs simplex iterations over the columns in `allowed`.
    /// Returns `false` when the objective is unbounded.
    fn optimize(&mut self, cost: &[T], allowed: usize) -> bool {
        loop {
            let entering = (0..allowed).find(|&j| {
                !self.basis.contains(&j) && T::tolerance() < self.reduced_cost(cost, j)
            });
            let Some(col) = entering else {
                return true;
            };
            let mut leave: Option<(usize, T)> = None;
            for i in 0..self.a.len() {
                let aij = &self.a[i][col];
                if *aij > T::tolerance() {
                    let ratio = self.b[i].clone() / aij.clone();
                    let better = match &leave {
                        None => true,
                        Some((r, best)) => {
                            ratio.definitely_lt(best)
                                || (ratio.approx_eq(best) && self.basis[i] < self.basis[*r])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, col),
                None => return false,
            }
        }
    }
}

pub fn solve<T: Scalar>(lp: &StandardLp<T>) -> LpOutcome<T> {
    let m = lp.rows.len();
    let n = lp.objective.len();
    debug_assert!(lp.rows.iter().all(|r| r.len() == n));
    debug_assert_eq!(lp.rhs.len(), m);

    // Normalize to b >= 0 and append one artificial per row.
    let mut a = Vec::with_capacity(m);
    let mut b = Vec::with_capacity(m);
    for (i, (row, rhs)) in lp.rows.iter().zip(&lp.rhs).enumerate() {
        let flip = *rhs < T::zero();
        let mut full: Vec<T> = row
            .iter()
            .map(|v| if flip { -v.clone() } else { v.clone() })
            .collect();
        full.extend((0..m).map(|k| if k == i { T::one() } else { T::zero() }));
        a.push(full);
        b.push(if flip { -rhs.clone() } else { rhs.clone() });
    }
    let mut t = Tableau {
        a,
        b,
        basis: (n..n + m).collect(),
    };

    let phase1: Vec<T> = (0..n + m)
        .map(|j| if j < n { T::zero() } else { -T::one() })
        .collect();
    t.optimize(&phase1, n + m);
    let infeasibility = t
        .basis
        .iter()
        .zip(&t.b)
        .filter(|(&bv, _)| bv >= n)
        .fold(T::zero(), |acc, (_, v)| acc + v.clone());
    if infeasibility > T::tolerance() {
        return LpOutcome::Infeasible;
    }
    // Drive zero-level artificials out where a structural column can replace them.
    for r in 0..m {
        if t.basis[r] >= n {
            if let Some(col) = (0..n).find(|&j| !t.a[r][j].is_approx_zero() && !t.basis.contains(&j)) {
                t.pivot(r, col);
            }
        }
    }

    let mut phase2 = lp.objective.clone();
    phase2.extend((0..m).map(|_| T::zero()));
    if !t.optimize(&phase2, n) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![T::zero(); n];
    for (i, &bv) in t.basis.iter().enumerate() {
        if bv < n {
            x[bv] = t.b[i].clone();
        }
    }
    let value = x
        .iter()
        .zip(&lp.objective)
        .fold(T::zero(), |acc, (xi, ci)| acc + xi.clone() * ci.clone());
    LpOutcome::Optimal { x, value }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn small_maximization() {
        // max x + y  s.t. x + 2y + s1 = 4, 3x + y + s2 = 6
        let lp = StandardLp {
            rows: vec![
                vec![q(1), q(2), q(1), q(0)],
                vec![q(3), q(1), q(0), q(1)],
            ],
            rhs: vec![q(4), q(6)],
            objective: vec![q(1), q(1), q(0), q(0)],
        };
        match solve(&lp) {
            LpOutcome::Optimal { x, value } => {
                assert_eq!(value, Rational::ratio(14, 5));
                assert_eq!(x[0], Rational::ratio(8, 5));
                assert_eq!(x[1], Rational::ratio(6, 5));
            }
            other => panic!("{:?}", other),
        }
    }

    #[test]
    fn detects_infeasible() {
        // x + y = 1, x + y = 2
        let lp = StandardLp {
            rows: vec![vec![1.0, 1.0], vec![1.0, 1.0]],
            rhs: vec![1.0, 2.0],
            objective: vec![0.0, 0.0],
        };
        assert_eq!(solve(&lp), LpOutcome::Infeasible);
    }

    #[test]
    fn detects_unbounded() {
        // x - y = 1
        let lp = StandardLp {
            rows: vec![vec![1.0, -1.0]],
            rhs: vec![1.0],
            objective: vec![1.0, 0.0],
        };
        assert_eq!(solve(&lp), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_rows_and_negative_rhs() {
        // -x - y = -2 twice, max x
        let lp = StandardLp {
            rows: vec![vec![-1.0, -1.0], vec![-2.0, -2.0]],
            rhs: vec![-2.0, -4.0],
            objective: vec![1.0, 0.0],
        };
        match solve(&lp) {
            LpOutcome::Optimal { value, .. } => assert!((value - 2.0).abs() < 1e-12),
            other => panic!("{:?}", other),
        }
    }
}
