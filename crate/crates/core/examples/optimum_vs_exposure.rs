//! Cheapest effort pair for a 3x3 transaction at several exposures, then
//! the whole piecewise-linear optimum curve.

use tcgame::efficiency::{exposure_sweep, minimize_cost};
use tcgame::{Cell, Exposure, Scalar, TransactionType};

fn cells(cs: &[Cell]) -> String {
    cs.iter().map(Cell::to_string).collect::<Vec<_>>().join(" ")
}

fn main() -> tcgame::Result<()> {
    let t = TransactionType::full_grid(
        vec![0.0, 1.0, 2.0],
        vec![0.0, 1.0, 2.0],
        vec![
            vec![1.00, 0.05, 0.04],
            vec![0.05, 0.03, 0.02],
            vec![0.04, 0.02, 0.01],
        ],
    )?;

    for e in [1.0, 60.0, 120.0] {
        let ex = Exposure::new(e)?;
        let best = minimize_cost(&t, &ex)?;
        println!("e = {:>5}: minimum {} at {}", e, best.value.round_display(1), cells(&best.argmin));
        for i in 0..3 {
            let row: Vec<String> = (0..3)
                .map(|j| format!("{:>6}", t.tc(&ex, Cell(i, j)).unwrap().round_display(1)))
                .collect();
            println!("    {}", row.join(""));
        }
    }

    let sweep = exposure_sweep(&t, 0.5, 250.0)?;
    println!("\noptimal cost over e in [0.5, 250]:");
    for s in &sweep.segments {
        println!(
            "  [{:>8.4}, {:>8.4}]  {}  {} + {} e",
            s.e_lo,
            s.e_hi,
            cells(&s.argmin),
            s.intercept,
            s.slope
        );
    }
    for b in &sweep.breakpoints {
        println!("  switch at e = {:.6} among {}", b.exposure, cells(&b.argmin));
    }
    Ok(())
}
