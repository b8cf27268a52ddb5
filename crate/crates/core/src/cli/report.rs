//! Report blocks rendered either as aligned text or as CSV.
//!
//! Text output shows grids and tables; CSV output shows only the tables,
//! each with a header row, separated by one blank line. CSV always carries
//! full-precision numbers.

use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    /// Exact rationals or up to six decimals.
    Short,
    /// Half-away-from-zero rounding: money to 1 decimal, probabilities to 2.
    Paper,
    Full,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Val {
    Text(String),
    Num { full: String, short: String, paper: String },
    List(Vec<Val>),
    Empty,
}

pub(crate) fn short<T: Scalar>(v: &T) -> String {
    let full = v.display_full();
    if full.len() <= 10 {
        return full;
    }
    let mut s = v.round_display(6);
    while s.ends_with('0') {
        s.pop();
    }
    if s.ends_with('.') {
        s.pop();
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

impl Val {
    pub fn money<T: Scalar>(v: &T) -> Val {
        Val::Num {
            full: v.display_full(),
            short: short(v),
            paper: v.round_display(1),
        }
    }

    pub fn prob<T: Scalar>(v: &T) -> Val {
        Val::Num {
            full: v.display_full(),
            short: short(v),
            paper: v.round_display(2),
        }
    }

    pub fn text(s: impl Into<String>) -> Val {
        Val::Text(s.into())
    }

    pub fn render(&self, style: Style) -> String {
        match self {
            Val::Text(s) => s.clone(),
            Val::Empty => String::new(),
            Val::List(items) => items.iter().map(|v| v.render(style)).collect::<Vec<_>>().join("; "),
            Val::Num { full, short, paper } => match style {
                Style::Short => short.clone(),
                Style::Paper => paper.clone(),
                Style::Full => full.clone(),
            },
        }
    }
}

#[derive(Debug, Clone)]
pub struct GridBlock {
    pub title: String,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    /// Each cell may hold several values, shown comma-separated.
    pub cells: Vec<Vec<Vec<Val>>>,
}

#[derive(Debug, Clone)]
pub struct TableBlock {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<Val>>,
    pub in_text: bool,
}

#[derive(Debug, Clone)]
enum Block {
    Para(Vec<Vec<Val>>),
    Grid(GridBlock),
    Table(TableBlock),
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    blocks: Vec<Block>,
}

impl Report {
    /// Consecutive text lines, each built from several values.
    pub fn para(&mut self, lines: Vec<Vec<Val>>) -> &mut Self {
        if !lines.is_empty() {
            self.blocks.push(Block::Para(lines));
        }
        self
    }

    pub fn line(&mut self, line: impl Into<String>) -> &mut Self {
        self.para(vec![vec![Val::text(line)]])
    }

    pub fn grid(&mut self, grid: GridBlock) -> &mut Self {
        self.blocks.push(Block::Grid(grid));
        self
    }

    /// Table shown in both formats.
    pub fn table(&mut self, title: &str, header: &[&str], rows: Vec<Vec<Val>>) -> &mut Self {
        self.push_table(title, header, rows, true)
    }

    /// Table emitted only in CSV output.
    pub fn csv_table(&mut self, title: &str, header: &[&str], rows: Vec<Vec<Val>>) -> &mut Self {
        self.push_table(title, header, rows, false)
    }

    fn push_table(&mut self, title: &str, header: &[&str], rows: Vec<Vec<Val>>, in_text: bool) -> &mut Self {
        self.blocks.push(Block::Table(TableBlock {
            title: title.to_string(),
            header: header.iter().map(|s| s.to_string()).collect(),
            rows,
            in_text,
        }));
        self
    }

    pub fn render_text(&self, style: Style) -> String {
        let mut parts = Vec::new();
        for b in &self.blocks {
            match b {
                Block::Para(lines) => parts.push(
                    lines
                        .iter()
                        .map(|l| l.iter().map(|v| v.render(style)).collect::<String>())
                        .collect::<Vec<_>>()
                        .join("\n"),
                ),
                Block::Grid(g) => parts.push(render_grid(g, style)),
                Block::Table(t) if t.in_text => parts.push(render_table(t, style)),
                Block::Table(_) => {}
            }
        }
        let mut out = parts.join("\n\n");
        out.push('\n');
        out
    }

    pub fn render_csv(&self) -> String {
        let tables: Vec<String> = self
            .blocks
            .iter()
            .filter_map(|b| match b {
                Block::Table(t) => Some(render_csv_table(t)),
                _ => None,
            })
            .collect();
        let mut out = tables.join("\n");
        if out.is_empty() {
            out.push('\n');
        }
        out
    }
}

fn align(rows: &[Vec<String>], left_first: bool) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    rows.iter()
        .map(|r| {
            let cells: Vec<String> = r
                .iter()
                .enumerate()
                .map(|(c, s)| {
                    if c == 0 && left_first {
                        format!("{:<w$}", s, w = widths[c])
                    } else {
                        format!("{:>w$}", s, w = widths[c])
                    }
                })
                .collect();
            cells.join("  ").trim_end().to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn render_grid(g: &GridBlock, style: Style) -> String {
    let mut rows = vec![std::iter::once(String::new()).chain(g.col_labels.iter().cloned()).collect::<Vec<_>>()];
    for (label, row) in g.row_labels.iter().zip(&g.cells) {
        let mut r = vec![label.clone()];
        r.extend(row.iter().map(|vals| {
            if vals.is_empty() {
                "-".to_string()
            } else {
                vals.iter().map(|v| v.render(style)).collect::<Vec<_>>().join(", ")
            }
        }));
        rows.push(r);
    }
    format!("{}\n{}", g.title, align(&rows, true))
}

fn render_table(t: &TableBlock, style: Style) -> String {
    let mut rows = vec![t.header.clone()];
    rows.extend(t.rows.iter().map(|r| r.iter().map(|v| v.render(style)).collect()));
    format!("{}\n{}", t.title, align(&rows, true))
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn render_csv_table(t: &TableBlock) -> String {
    let mut out = String::new();
    out.push_str(&t.header.iter().map(|h| csv_field(h)).collect::<Vec<_>>().join(","));
    out.push('\n');
    for r in &t.rows {
        out.push_str(&r.iter().map(|v| csv_field(&v.render(Style::Full))).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_fields_and_ignores_grids() {
        let mut r = Report::default();
        r.line("title");
        r.grid(GridBlock {
            title: "g".into(),
            row_labels: vec!["0".into()],
            col_labels: vec!["0".into()],
            cells: vec![vec![vec![Val::money(&1.0)]]],
        });
        r.table("t", &["a", "b"], vec![vec![Val::text("(1,1)"), Val::money(&3.8)]]);
        assert_eq!(r.render_csv(), "a,b\n\"(1,1)\",3.8\n");
    }

    #[test]
    fn rounded_style_keeps_money_to_one_decimal() {
        assert_eq!(Val::money(&1.05).render(Style::Paper), "1.1");
        assert_eq!(Val::prob(&0.05).render(Style::Paper), "0.05");
        assert_eq!(Val::money(&(0.1 + 0.2)).render(Style::Short), "0.3");
        assert_eq!(Val::money(&(0.1 + 0.2)).render(Style::Full), "0.30000000000000004");
    }
}
