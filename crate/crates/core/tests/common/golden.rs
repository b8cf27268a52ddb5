use std::path::{Path, PathBuf};

pub fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/paper")
}

pub struct Case {
    pub name: String,
    pub argv: Vec<String>,
}

/// Reads `commands.txt`: one `tableNN <subcommand words> [--flags]` per line.
/// The fixture path goes after the subcommand words, before the flags.
pub fn cases() -> Vec<Case> {
    let dir = fixture_dir();
    let text = std::fs::read_to_string(dir.join("commands.txt")).unwrap();
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut words = l.split_whitespace();
            let name = words.next().unwrap().to_string();
            let rest: Vec<&str> = words.collect();
            let split = rest.iter().position(|w| w.starts_with("--")).unwrap_or(rest.len());
            let mut argv = vec!["tcgame".to_string(), "--paper-rounding".to_string()];
            argv.extend(rest[..split].iter().map(|s| s.to_string()));
            argv.push(dir.join(format!("{}.toml", name)).display().to_string());
            argv.extend(rest[split..].iter().map(|s| s.to_string()));
            Case { name, argv }
        })
        .collect()
}

pub fn run(argv: &[String]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = tcgame::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

pub fn golden_path(name: &str) -> PathBuf {
    fixture_dir().join(format!("{}.golden", name))
}

/// Runs a case twice and compares both outputs byte for byte with the golden.
pub fn check(case: &Case) -> Result<(), String> {
    let (code, first, err) = run(&case.argv);
    if code != 0 {
        return Err(format!("{}: exit {}: {}", case.name, code, err));
    }
    let (_, second, _) = run(&case.argv);
    if first != second {
        return Err(format!("{}: two runs differ", case.name));
    }
    let want = std::fs::read_to_string(golden_path(&case.name)).map_err(|e| format!("{}: {}", case.name, e))?;
    if first != want {
        return Err(format!("{}: output differs from golden\n--- got\n{}--- want\n{}", case.name, first, want));
    }
    Ok(())
}
