//! Load a TOML scenario and run CLI subcommands in-process. Pass a path to
//! use your own file; without one a bundled fixture is used.

use std::path::PathBuf;
use tcgame::cli::document::{parse_model, read_source, Scenario};

fn main() {
    let path = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| {
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/paper/table06.toml")
    });

    let doc = match parse_model(&path) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("{}", e);
            std::process::exit(1);
        }
    };
    let src = read_source(&path).unwrap();
    let sc = Scenario::<f64>::from_document(&doc, &src).unwrap();
    println!(
        "{}: transaction {}, rule {}, dispute {}",
        sc.name.as_deref().unwrap_or("(unnamed)"),
        sc.transaction.is_some(),
        sc.rule.is_some(),
        sc.dispute.is_some()
    );

    let file = path.to_string_lossy().into_owned();
    for words in [vec!["optimum", &file], vec!["--format", "csv", "game", "solve", &file]] {
        println!("\n$ tcgame {}", words.join(" "));
        let argv = std::iter::once("tcgame").chain(words.iter().copied());
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = tcgame::cli::run(argv, &mut out, &mut err);
        print!("{}{}", String::from_utf8_lossy(&out), String::from_utf8_lossy(&err));
        println!("(exit {})", code);
    }
}
