//! Command-line front end: scenario files in, reports out.
//!
//! Exit codes: 0 on success, 1 for unreadable, malformed or invalid input
//! and usage errors, 2 when the request is ill-posed or hits a solver cap.

pub mod document;
pub mod report;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::dispute::{self, DisputeModel, DisputeOutcome, PlayMode, Player};
use crate::efficiency::{self, Certificate};
use crate::error::Error;
use crate::grid::{Cell, Grid};
use crate::model::{Exposure, TransactionType};
use crate::scalar::{Rational, Scalar};
use crate::sharing::{self, BimatrixGame, SharingRule};

pub use document::{parse_model, parse_str, to_toml_string, DocError, ModelDocument, Scenario, Source};
pub use report::{GridBlock, Report, Style, Val};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "tcgame", version, about = "Transaction-cost optimum, sharing games and dispute games")]
pub struct Args {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Show money with 1 decimal and probabilities with 2, rounding half away from zero.
    #[arg(long, global = true)]
    pub paper_rounding: bool,
    /// Exact rational arithmetic.
    #[arg(long, global = true)]
    pub exact: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Relevant decision pairs with elimination certificates.
    Frontier { model: PathBuf },
    /// Total-cost grid and its minimum.
    Optimum {
        model: PathBuf,
        #[arg(long)]
        exposure: Option<String>,
    },
    /// Optimal total cost as a function of exposure.
    Sweep {
        model: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Cost-sharing game built from the scenario's rule.
    Game {
        #[command(subcommand)]
        action: GameAction,
    },
    /// Sharing-rule checks and constructions.
    Rule {
        #[command(subcommand)]
        action: RuleAction,
    },
    /// Dispute games.
    Dispute {
        #[command(subcommand)]
        action: DisputeAction,
    },
    /// Per-pair costs, loss probability, total cost and relevance.
    ExportSurface {
        model: PathBuf,
        #[arg(long)]
        exposure: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum GameAction {
    Solve {
        model: PathBuf,
        #[arg(long)]
        exposure: Option<String>,
        /// Use a fixed share for Player 1 instead of the scenario's rule.
        #[arg(long)]
        share: Option<String>,
        /// Also enumerate mixed equilibria.
        #[arg(long)]
        mixed: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Criterion {
    Balanced,
    PayForMistake,
    Fixed,
}

#[derive(Debug, Subcommand)]
pub enum RuleAction {
    CheckOptimizer {
        model: PathBuf,
        #[arg(long)]
        exposure: Option<String>,
    },
    Design {
        model: PathBuf,
        #[arg(long, value_enum)]
        criterion: Criterion,
        /// Player 1's share at the optimum for pay-for-mistake.
        #[arg(long)]
        base: Option<String>,
        /// Share for the fixed rule; tie-break share for balanced when the optimum costs nothing.
        #[arg(long)]
        share: Option<String>,
        #[arg(long)]
        exposure: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Simultaneous,
    Sequential,
}

#[derive(Debug, Subcommand)]
pub enum DisputeAction {
    Solve {
        model: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Simultaneous)]
        mode: Mode,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        leader: u8,
        /// Override the scenario's stake.
        #[arg(long)]
        stake: Option<String>,
    },
}

#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<DocError> for Failure {
    fn from(e: DocError) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_ill_posed() { 2 } else { 1 },
            message: e.to_string(),
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

/// Parses `argv` (including the program name), runs the command and writes
/// the report. Returns the process exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match run_command(&args) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Runs a parsed command and returns the rendered report.
pub fn run_command(args: &Args) -> Result<String, Failure> {
    let report = if args.exact {
        execute::<Rational>(&args.command)?
    } else {
        execute::<f64>(&args.command)?
    };
    Ok(match args.format {
        Format::Csv => report.render_csv(),
        Format::Table if args.paper_rounding => report.render_text(Style::Paper),
        Format::Table => report.render_text(Style::Short),
    })
}

fn load<T: Scalar>(path: &Path) -> Result<Scenario<T>, Failure> {
    let src = document::read_source(path)?;
    let doc = document::parse_str(&src)?;
    Ok(Scenario::from_document(&doc, &src)?)
}

fn number<T: Scalar>(s: &str, what: &str) -> Result<T, Failure> {
    T::parse_decimal(s.trim())
        .filter(T::is_finite)
        .ok_or_else(|| invalid(format!("{}: {:?} is not a number", what, s)))
}

fn transaction<T: Scalar>(s: &Scenario<T>) -> Result<&TransactionType<T>, Failure> {
    s.transaction
        .as_ref()
        .ok_or_else(|| invalid("scenario has no transaction type ([player1], [player2], [loss])"))
}

fn exposure<T: Scalar>(s: &Scenario<T>, flag: &Option<String>) -> Result<Exposure<T>, Failure> {
    match flag {
        Some(x) => Ok(Exposure::new(number(x, "--exposure")?)?),
        None => s
            .exposure
            .clone()
            .ok_or_else(|| invalid("no exposure: pass --exposure or set `exposure` in the scenario")),
    }
}

fn execute<T: Scalar>(cmd: &Command) -> Result<Report, Failure> {
    match cmd {
        Command::Frontier { model } => frontier::<T>(&load(model)?),
        Command::Optimum { model, exposure: e } => {
            let s = load::<T>(model)?;
            optimum(transaction(&s)?, &exposure(&s, e)?)
        }
        Command::Sweep { model, from, to } => {
            let s = load::<T>(model)?;
            sweep(transaction(&s)?, number(from, "--from")?, number(to, "--to")?)
        }
        Command::Game {
            action: GameAction::Solve {
                model,
                exposure: e,
                share,
                mixed,
            },
        } => {
            let s = load::<T>(model)?;
            let t = transaction(&s)?;
            let rule = match share {
                Some(c) => sharing::fixed_share_rule(number(c, "--share")?, t.shape())?,
                None => s
                    .rule
                    .clone()
                    .ok_or_else(|| invalid("scenario has no [sharing_rule]; pass --share"))?,
            };
            game(t, &exposure(&s, e)?, &rule, *mixed)
        }
        Command::Rule {
            action: RuleAction::CheckOptimizer { model, exposure: e },
        } => {
            let s = load::<T>(model)?;
            let rule = s.rule.as_ref().ok_or_else(|| invalid("scenario has no [sharing_rule]"))?;
            check_optimizer(transaction(&s)?, &exposure(&s, e)?, rule)
        }
        Command::Rule {
            action:
                RuleAction::Design {
                    model,
                    criterion,
                    base,
                    share,
                    exposure: e,
                },
        } => {
            let s = load::<T>(model)?;
            let share = share.as_deref().map(|c| number::<T>(c, "--share")).transpose()?;
            let base = base.as_deref().map(|c| number::<T>(c, "--base")).transpose()?;
            design(transaction(&s)?, &exposure(&s, e)?, *criterion, base, share)
        }
        Command::Dispute {
            action: DisputeAction::Solve {
                model,
                mode,
                leader,
                stake,
            },
        } => {
            let s = load::<T>(model)?;
            let mut d = s.dispute.clone().ok_or_else(|| invalid("scenario has no [dispute]"))?;
            if let Some(st) = stake {
                d = d.with_stake(number(st, "--stake")?)?;
            }
            let leader = if *leader == 1 { Player::One } else { Player::Two };
            dispute_report(&d, *mode, leader)
        }
        Command::ExportSurface { model, exposure: e } => {
            let s = load::<T>(model)?;
            surface(transaction(&s)?, &exposure(&s, e)?)
        }
    }
}

fn cells_text(cells: &[Cell]) -> String {
    if cells.is_empty() {
        "none".into()
    } else {
        cells.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
    }
}

fn indices_text(ix: &[usize]) -> String {
    format!("{{{}}}", ix.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
}

fn idx(c: Cell) -> [Val; 2] {
    [Val::text(c.0.to_string()), Val::text(c.1.to_string())]
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn transaction_grid<T: Scalar>(t: &TransactionType<T>, title: String, f: impl Fn(Cell) -> Vec<Val>) -> GridBlock {
    let (n, m) = t.shape();
    GridBlock {
        title,
        row_labels: t.player1().labels().to_vec(),
        col_labels: t.player2().labels().to_vec(),
        cells: (0..n).map(|i| (0..m).map(|j| f(Cell(i, j))).collect()).collect(),
    }
}

fn frontier<T: Scalar>(s: &Scenario<T>) -> Result<Report, Failure> {
    let t = transaction(s)?;
    let rs = efficiency::relevant_set(t)?;
    let mut r = Report::default();
    r.line(format!(
        "frontier: {} decision pairs, {} relevant, {} eliminated",
        t.feasible_cells().count(),
        rs.kept.len(),
        rs.eliminated.len()
    ));
    r.grid(transaction_grid(t, "loss probability (rows: player 1, columns: player 2)".into(), |c| {
        t.loss(c).map(|p| vec![Val::prob(p)]).unwrap_or_default()
    }));
    let mut rows = Vec::new();
    for p in efficiency::decision_points(t) {
        let mut row: Vec<Val> = idx(p.cell).into();
        row.extend([Val::money(&p.z1), Val::money(&p.z2), Val::prob(&p.pl)]);
        match rs.elimination(p.cell) {
            None => row.extend([Val::text("relevant"), Val::Empty, Val::Empty]),
            Some(el) => {
                let cert = match &el.certificate {
                    Certificate::Dominator(c) => Val::text(c.to_string()),
                    Certificate::Weights(ws) => Val::List(
                        ws.iter()
                            .map(|(c, w)| Val::text(format!("{}*{}", report::short(w), c)))
                            .collect(),
                    ),
                };
                row.extend([Val::text("eliminated"), Val::text(el.reason.as_str()), cert]);
            }
        }
        rows.push(row);
    }
    r.table(
        "decision pairs",
        &["i", "j", "z1", "z2", "pl", "status", "reason", "certificate"],
        rows,
    );
    Ok(r)
}

fn optimum<T: Scalar>(t: &TransactionType<T>, e: &Exposure<T>) -> Result<Report, Failure> {
    let opt = efficiency::minimize_cost(t, e)?;
    let mut r = Report::default();
    r.grid(transaction_grid(
        t,
        format!("total cost at exposure {}", short_text(e.value())),
        |c| t.tc(e, c).map(|v| vec![Val::money(&v)]).unwrap_or_default(),
    ));
    r.para(vec![vec![
        Val::text("minimum "),
        Val::money(&opt.value),
        Val::text(format!(" at {}", cells_text(&opt.argmin))),
    ]]);
    let rows = t
        .feasible_cells()
        .map(|c| {
            let b = t.total_cost(e, c).expect("feasible");
            let mut row: Vec<Val> = idx(c).into();
            row.extend([
                Val::money(&b.z1),
                Val::money(&b.z2),
                Val::prob(t.loss(c).expect("feasible")),
                Val::money(&b.total),
                Val::text(yes_no(opt.argmin.contains(&c))),
            ]);
            row
        })
        .collect();
    r.csv_table("total cost", &["i", "j", "z1", "z2", "pl", "tc", "optimal"], rows);
    Ok(r)
}

fn short_text<T: Scalar>(v: &T) -> String {
    report::short(v)
}

fn sweep<T: Scalar>(t: &TransactionType<T>, from: T, to: T) -> Result<Report, Failure> {
    let sw = efficiency::exposure_sweep(t, from.clone(), to.clone())?;
    let mut r = Report::default();
    r.line(format!(
        "optimal total cost for exposure in [{}, {}]: {} segments, {} breakpoints",
        short_text(&from),
        short_text(&to),
        sw.segments.len(),
        sw.breakpoints.len()
    ));
    let seg_rows = sw
        .segments
        .iter()
        .map(|s| {
            vec![
                Val::money(&s.e_lo),
                Val::money(&s.e_hi),
                Val::text(cells_text(&s.argmin)),
                Val::money(&s.intercept),
                Val::prob(&s.slope),
            ]
        })
        .collect();
    r.table("segments (cost = intercept + slope * exposure)", &["e_lo", "e_hi", "argmin", "intercept", "slope"], seg_rows);
    let bp_rows = sw
        .breakpoints
        .iter()
        .map(|b| vec![Val::money(&b.exposure), Val::text(cells_text(&b.argmin))])
        .collect();
    r.table("breakpoints", &["exposure", "argmin"], bp_rows);
    Ok(r)
}

fn payment_grid<T: Scalar>(g: &BimatrixGame<T>, title: String, rows: &[String], cols: &[String]) -> GridBlock {
    let (n, m) = g.shape();
    GridBlock {
        title,
        row_labels: rows.to_vec(),
        col_labels: cols.to_vec(),
        cells: (0..n)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        let c = Cell(i, j);
                        if g.is_allowed(c) {
                            vec![Val::money(&g.cost1()[c]), Val::money(&g.cost2()[c])]
                        } else {
                            Vec::new()
                        }
                    })
                    .collect()
            })
            .collect(),
    }
}

fn game_rows<T: Scalar>(g: &BimatrixGame<T>, pure: &[Cell]) -> Vec<Vec<Val>> {
    g.allowed_cells()
        .map(|c| {
            let mut row: Vec<Val> = idx(c).into();
            row.extend([
                Val::money(&g.cost1()[c]),
                Val::money(&g.cost2()[c]),
                Val::text(yes_no(pure.contains(&c))),
            ]);
            row
        })
        .collect()
}

fn game<T: Scalar>(t: &TransactionType<T>, e: &Exposure<T>, rule: &SharingRule<T>, mixed: bool) -> Result<Report, Failure> {
    let g = sharing::build_game(t, e, rule)?;
    let pure = sharing::pure_equilibria(&g);
    let mut r = Report::default();
    r.grid(payment_grid(
        &g,
        format!("payments (player 1, player 2) at exposure {}", short_text(e.value())),
        t.player1().labels(),
        t.player2().labels(),
    ));
    let mut lines = vec![vec![Val::text(format!("pure equilibria: {}", cells_text(&pure)))]];
    lines.extend(g.notes.iter().map(|n| vec![Val::text(format!("note: {}", n))]));
    r.para(lines);
    r.csv_table("payments", &["i", "j", "cost1", "cost2", "pure_equilibrium"], game_rows(&g, &pure));
    if mixed {
        let rep = sharing::mixed_equilibria(&g)?;
        let total = Grid::from_fn(g.shape().0, g.shape().1, |i, j| {
            g.cost1()[Cell(i, j)].clone() + g.cost2()[Cell(i, j)].clone()
        });
        let rows = rep
            .mixed
            .iter()
            .enumerate()
            .map(|(k, p)| {
                vec![
                    Val::text((k + 1).to_string()),
                    Val::List(p.p.iter().map(Val::prob).collect()),
                    Val::List(p.q.iter().map(Val::prob).collect()),
                    Val::money(&p.cost1),
                    Val::money(&p.cost2),
                    Val::money(&p.expectation(&total)),
                    Val::prob(&p.best_response_slack(&g)),
                ]
            })
            .collect();
        r.table(
            "equilibria in mixed strategies",
            &["profile", "p", "q", "cost1", "cost2", "total", "slack"],
            rows,
        );
        r.para(rep.notes.iter().map(|n| vec![Val::text(format!("note: {}", n))]).collect());
    }
    Ok(r)
}

fn rule_grid<T: Scalar>(t: &TransactionType<T>, rule: &SharingRule<T>) -> GridBlock {
    transaction_grid(t, "player 1 share c1 (player 2 pays 1 - c1)".into(), |c| {
        vec![Val::prob(rule.c1(c))]
    })
}

fn rule_rows<T: Scalar>(rule: &SharingRule<T>) -> Vec<Vec<Val>> {
    rule.grid()
        .iter()
        .map(|(c, v)| {
            let mut row: Vec<Val> = idx(c).into();
            row.extend([Val::prob(v), Val::prob(&rule.c2(c))]);
            row
        })
        .collect()
}

fn optimizer_section<T: Scalar>(
    r: &mut Report,
    t: &TransactionType<T>,
    e: &Exposure<T>,
    rule: &SharingRule<T>,
) -> Result<(), Failure> {
    let check = sharing::is_optimizer(rule, t, e)?;
    let mut lines = vec![vec![Val::text(format!("optimizer: {}", yes_no(check.is_optimizer())))]];
    if let Some(w) = check.witness() {
        lines.push(vec![Val::text(format!("witness: {}", w))]);
    }
    r.para(lines);
    let rows = check
        .violations
        .iter()
        .map(|v| {
            let (kind, k) = match v.line {
                sharing::Line::Column(j) => ("column", j),
                sharing::Line::Row(i) => ("row", i),
            };
            vec![
                Val::text(kind),
                Val::text(k.to_string()),
                Val::text(indices_text(&v.payment_argmin)),
                Val::text(indices_text(&v.cost_argmin)),
            ]
        })
        .collect::<Vec<_>>();
    if !rows.is_empty() {
        r.table("violations", &["line", "index", "payment_argmin", "cost_argmin"], rows);
    } else {
        r.csv_table("violations", &["line", "index", "payment_argmin", "cost_argmin"], rows);
    }
    Ok(())
}

fn check_optimizer<T: Scalar>(t: &TransactionType<T>, e: &Exposure<T>, rule: &SharingRule<T>) -> Result<Report, Failure> {
    let mut r = Report::default();
    r.grid(rule_grid(t, rule));
    r.csv_table("sharing rule", &["i", "j", "c1", "c2"], rule_rows(rule));
    optimizer_section(&mut r, t, e, rule)?;
    Ok(r)
}

fn regret_section<T: Scalar>(r: &mut Report, p: &sharing::RegretProfile<T>) {
    r.para(vec![vec![
        Val::text(format!("optimum {}; regret balanced: {}", p.optimum, yes_no(p.balanced))),
    ]]);
    r.table(
        "regret at the optimum",
        &["player", "deviation", "regret"],
        vec![
            vec![Val::text("1"), Val::text(p.deviation1.to_string()), Val::money(&p.r1)],
            vec![Val::text("2"), Val::text(p.deviation2.to_string()), Val::money(&p.r2)],
        ],
    );
}

fn design<T: Scalar>(
    t: &TransactionType<T>,
    e: &Exposure<T>,
    criterion: Criterion,
    base: Option<T>,
    share: Option<T>,
) -> Result<Report, Failure> {
    let mut r = Report::default();
    match criterion {
        Criterion::Balanced => {
            let d = sharing::design_balanced_rule(t, e, share)?;
            r.grid(rule_grid(t, &d.rule));
            r.csv_table("sharing rule", &["i", "j", "c1", "c2"], rule_rows(&d.rule));
            let mut line = vec![Val::text("share at the optimum: "), Val::prob(&d.share)];
            if d.clamped {
                line.push(Val::text(" (clamped to [0,1])"));
            }
            r.para(vec![line]);
            optimizer_section(&mut r, t, e, &d.rule)?;
            regret_section(&mut r, &d.regret);
        }
        Criterion::PayForMistake => {
            let base = base.ok_or_else(|| invalid("pay-for-mistake needs --base C"))?;
            let m = sharing::pay_for_mistake_rule(t, e, base)?;
            r.grid(rule_grid(t, &m.rule));
            r.csv_table("sharing rule", &["i", "j", "c1", "c2"], rule_rows(&m.rule));
            if !m.clamped.is_empty() {
                r.line(format!("deviator share clamped to 1 at {}", cells_text(&m.clamped)));
            }
            optimizer_section(&mut r, t, e, &m.rule)?;
            let opt = efficiency::minimize_cost(t, e)?;
            regret_section(&mut r, &sharing::regret_profile(&m.rule, t, e, opt.argmin[0])?);
        }
        Criterion::Fixed => {
            let c = share.ok_or_else(|| invalid("fixed rule needs --share C"))?;
            let rule = sharing::fixed_share_rule(c, t.shape())?;
            r.grid(rule_grid(t, &rule));
            r.csv_table("sharing rule", &["i", "j", "c1", "c2"], rule_rows(&rule));
            optimizer_section(&mut r, t, e, &rule)?;
        }
    }
    Ok(r)
}

fn dispute_report<T: Scalar>(d: &DisputeModel<T>, mode: Mode, leader: Player) -> Result<Report, Failure> {
    let out: DisputeOutcome<T> = match mode {
        Mode::Simultaneous => dispute::simultaneous_equilibria(d)?,
        Mode::Sequential => dispute::sequential_solve(d, leader)?,
    };
    let labels = |v: &[T]| v.iter().map(short_text).collect::<Vec<_>>();
    let mut r = Report::default();
    r.grid(payment_grid(
        &out.game,
        format!(
            "dispute payments (player 1, player 2), institution {}, stake {}",
            d.institution(),
            short_text(d.stake())
        ),
        &labels(d.spend1()),
        &labels(d.spend2()),
    ));
    let head = match out.mode {
        PlayMode::Simultaneous => format!(
            "simultaneous play, equilibria: {}",
            cells_text(&out.outcomes.iter().map(|o| o.cell).collect::<Vec<_>>())
        ),
        PlayMode::Sequential { leader } => format!(
            "sequential play, leader player {}, path: {}",
            if leader == Player::One { 1 } else { 2 },
            cells_text(&out.outcomes.iter().map(|o| o.cell).collect::<Vec<_>>())
        ),
    };
    let mut lines = vec![
        vec![Val::text(head)],
        vec![Val::text(format!("prisoners' dilemma: {}", yes_no(out.prisoners_dilemma)))],
    ];
    lines.extend(d.shape_warnings().into_iter().map(|w| vec![Val::text(format!("warning: {}", w))]));
    r.para(lines);
    let outcome_rows = out
        .outcomes
        .iter()
        .map(|o| {
            let mut row: Vec<Val> = idx(o.cell).into();
            row.extend([
                Val::money(&o.v1),
                Val::money(&o.v2),
                Val::prob(&o.share1),
                Val::money(&o.cost1),
                Val::money(&o.cost2),
                Val::money(&o.total),
            ]);
            row
        })
        .collect();
    r.table("outcomes", &["i", "j", "v1", "v2", "s1", "cost1", "cost2", "total"], outcome_rows);
    if !out.replies.is_empty() {
        let rows = out
            .replies
            .iter()
            .map(|x| {
                vec![
                    Val::text(x.leader_move.to_string()),
                    Val::text(x.follower_move.to_string()),
                    Val::money(&x.leader_cost),
                    Val::money(&x.follower_cost),
                ]
            })
            .collect();
        r.table(
            "follower replies",
            &["leader_move", "follower_move", "leader_cost", "follower_cost"],
            rows,
        );
    }
    let pure: Vec<Cell> = match out.mode {
        PlayMode::Simultaneous => out.outcomes.iter().map(|o| o.cell).collect(),
        PlayMode::Sequential { .. } => sharing::pure_equilibria(&out.game),
    };
    r.csv_table("payments", &["i", "j", "cost1", "cost2", "pure_equilibrium"], game_rows(&out.game, &pure));
    Ok(r)
}

fn surface<T: Scalar>(t: &TransactionType<T>, e: &Exposure<T>) -> Result<Report, Failure> {
    let rows = efficiency::surface_export(t, e)?
        .into_iter()
        .map(|s| {
            let mut row: Vec<Val> = idx(s.cell).into();
            row.extend([
                Val::money(&s.z1),
                Val::money(&s.z2),
                s.pl.as_ref().map_or(Val::Empty, Val::prob),
                s.tc.as_ref().map_or(Val::Empty, Val::money),
                Val::text(yes_no(s.relevant)),
            ]);
            row
        })
        .collect();
    let mut r = Report::default();
    r.table(
        &format!("surface at exposure {}", short_text(e.value())),
        &["i", "j", "z1", "z2", "pl", "tc", "relevant"],
        rows,
    );
    Ok(r)
}
