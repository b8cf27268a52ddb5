#![allow(dead_code)]

pub mod golden;

use proptest::prelude::*;
use tcgame::dispute::{DisputeModel, Institution};
use tcgame::sharing::BimatrixGame;
use tcgame::{Cell, ChoiceSet, Grid, Rational, Scalar, TransactionType};

pub fn q(n: i64, d: i64) -> Rational {
    Rational::ratio(n, d)
}

pub fn table1<T: Scalar>() -> TransactionType<T> {
    let p = |n: i64| T::ratio(n, 100);
    let costs = || vec![T::from_i64(0), T::from_i64(1), T::from_i64(2)];
    TransactionType::full_grid(
        costs(),
        costs(),
        vec![
            vec![p(100), p(5), p(4)],
            vec![p(5), p(3), p(2)],
            vec![p(4), p(2), p(1)],
        ],
    )
    .unwrap()
}

pub fn grid<T: Clone>(rows: Vec<Vec<T>>) -> Grid<T> {
    Grid::from_rows(rows).unwrap()
}

pub fn rational_rows(rows: &[&[f64]]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| r.iter().map(|x| Rational::from_f64(*x).unwrap()).collect())
        .collect()
}

fn labelled<T: Scalar>(costs: Vec<T>) -> ChoiceSet<T> {
    let labels = (0..costs.len()).map(|i| format!("c{}", i)).collect();
    ChoiceSet::new(labels, costs).unwrap()
}

/// Costs are small integers and loss probabilities multiples of 1/100, so
/// duplicates, collinear points and exact ties show up often. About one
/// pair in ten is infeasible.
pub fn arb_transaction(max: usize) -> impl Strategy<Value = TransactionType<Rational>> {
    arb_transaction_with(max, true)
}

/// Every pair feasible.
pub fn arb_full_transaction(max: usize) -> impl Strategy<Value = TransactionType<Rational>> {
    arb_transaction_with(max, false)
}

fn arb_transaction_with(max: usize, holes: bool) -> impl Strategy<Value = TransactionType<Rational>> {
    (1..=max, 1..=max)
        .prop_flat_map(|(n, m)| {
            (
                proptest::collection::vec(0i64..=6, n),
                proptest::collection::vec(0i64..=6, m),
                proptest::collection::vec(proptest::collection::vec((0i64..=100, 0u8..10), m), n),
            )
        })
        .prop_filter_map("needs a feasible pair", move |(c1, c2, loss)| {
            let loss: Vec<Vec<Option<Rational>>> = loss
                .into_iter()
                .map(|r| r.into_iter().map(|(p, f)| (!holes || f > 0).then(|| q(p, 100))).collect())
                .collect();
            if loss.iter().flatten().all(Option::is_none) {
                return None;
            }
            let c1 = c1.into_iter().map(Rational::from_i64).collect();
            let c2 = c2.into_iter().map(Rational::from_i64).collect();
            Some(TransactionType::new(labelled(c1), labelled(c2), grid(loss)).unwrap())
        })
}

pub fn arb_exposure() -> impl Strategy<Value = Rational> {
    (1i64..=50_000, 1i64..=100).prop_map(|(n, d)| q(n, d))
}

pub fn arb_game(max: usize) -> impl Strategy<Value = BimatrixGame<Rational>> {
    (1..=max, 1..=max)
        .prop_flat_map(|(n, m)| {
            proptest::collection::vec(proptest::collection::vec((0i64..=8, 0i64..=8), m), n)
        })
        .prop_map(|rows| {
            let c1 = rows.iter().map(|r| r.iter().map(|x| Rational::from_i64(x.0)).collect()).collect();
            let c2 = rows.iter().map(|r| r.iter().map(|x| Rational::from_i64(x.1)).collect()).collect();
            BimatrixGame::new(grid(c1), grid(c2)).unwrap()
        })
}

/// Pure equilibria by definition: no profitable unilateral move.
pub fn brute_force_equilibria(g: &BimatrixGame<Rational>) -> Vec<Cell> {
    let (n, m) = g.shape();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..m {
            let c = Cell(i, j);
            if !g.is_allowed(c) {
                continue;
            }
            let p1_ok = (0..n)
                .filter(|&k| g.is_allowed(Cell(k, j)))
                .all(|k| g.cost1()[Cell(k, j)] >= g.cost1()[c]);
            let p2_ok = (0..m)
                .filter(|&k| g.is_allowed(Cell(i, k)))
                .all(|k| g.cost2()[Cell(i, k)] >= g.cost2()[c]);
            if p1_ok && p2_ok {
                out.push(c);
            }
        }
    }
    out
}

pub fn arb_institution() -> impl Strategy<Value = Institution<Rational>> {
    prop_oneof![
        Just(Institution::EachPaysOwn),
        Just(Institution::LoserPays),
        (0i64..=20).prop_map(|k| Institution::Proportional { d1: q(k, 20) }),
    ]
}

/// Spend levels start at 0 and increase; `(0,0)` is always defined.
pub fn arb_dispute() -> impl Strategy<Value = DisputeModel<Rational>> {
    (1usize..=4, 1usize..=4)
        .prop_flat_map(|(n, m)| {
            (
                proptest::collection::vec(1i64..=3, n - 1),
                proptest::collection::vec(1i64..=3, m - 1),
                proptest::collection::vec(proptest::collection::vec((0i64..=20, 0u8..8), m), n),
                0i64..=12,
                arb_institution(),
            )
        })
        .prop_map(|(d1, d2, shares, stake, inst)| {
            let levels = |steps: Vec<i64>| {
                let mut acc = 0;
                std::iter::once(Rational::from_i64(0))
                    .chain(steps.into_iter().map(|s| {
                        acc += s;
                        Rational::from_i64(acc)
                    }))
                    .collect::<Vec<_>>()
            };
            let share = shares
                .into_iter()
                .enumerate()
                .map(|(i, r)| {
                    r.into_iter()
                        .enumerate()
                        .map(|(j, (s, f))| ((i, j) == (0, 0) || f > 0).then(|| q(s, 20)))
                        .collect()
                })
                .collect();
            DisputeModel::new(levels(d1), levels(d2), grid(share), Rational::from_i64(stake), inst).unwrap()
        })
}
