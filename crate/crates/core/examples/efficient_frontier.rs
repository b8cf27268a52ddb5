//! Which effort pairs can ever be optimal? Dominated pairs and pairs above
//! the lower convex hull are dropped, each with a checkable certificate.

use tcgame::efficiency::{decision_points, relevant_set, verify_certificate, Certificate};
use tcgame::{Rational, Scalar, TransactionType};

fn main() -> tcgame::Result<()> {
    let p = |n| Rational::ratio(n, 100);
    let t = TransactionType::full_grid(
        vec![Rational::from_i64(0), Rational::from_i64(1), Rational::from_i64(2)],
        vec![Rational::from_i64(0), Rational::from_i64(1)],
        vec![vec![p(90), p(50)], vec![p(60), p(55)], vec![p(10), p(5)]],
    )?;

    let rs = relevant_set(&t)?;
    let points = decision_points(&t);
    println!("kept:");
    for k in &rs.kept {
        println!("  {}  z1+z2 = {}  pl = {}", k.cell, (k.z1.clone() + k.z2.clone()).display_full(), k.pl.display_full());
    }
    println!("eliminated:");
    for el in &rs.eliminated {
        let why = match &el.certificate {
            Certificate::Dominator(c) => format!("beaten by {}", c),
            Certificate::Weights(w) => w
                .iter()
                .map(|(c, x)| format!("{}*{}", x.display_full(), c))
                .collect::<Vec<_>>()
                .join(" + "),
        };
        println!(
            "  {}  {}  [{}]  verified: {}",
            el.point.cell,
            el.reason.as_str(),
            why,
            verify_certificate(el, &points)
        );
    }
    Ok(())
}
