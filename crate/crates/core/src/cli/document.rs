//! Scenario files.
//!
//! A scenario is a TOML document. Numbers may be written as TOML integers,
//! TOML floats, or strings holding a decimal or a fraction such as
//! `"20/19"`. The string `"-"` marks an infeasible pair in `loss.matrix`
//! and an undefined cell in `dispute.s1`. The full grammar is in the README.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use toml::Spanned;

use crate::dispute::{DisputeModel, Institution};
use crate::grid::{Cell, Grid};
use crate::model::{ChoiceSet, Exposure, TransactionType};
use crate::scalar::Scalar;
use crate::sharing::SharingRule;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Float(f64),
    Text(String),
}

impl Num {
    fn is_missing(&self) -> bool {
        matches!(self, Num::Text(s) if s.trim() == "-")
    }

    fn value<T: Scalar>(&self) -> Option<T> {
        match self {
            Num::Int(n) => Some(T::from_i64(*n)),
            Num::Float(x) => T::from_f64(*x),
            Num::Text(s) => T::parse_decimal(s.trim()),
        }
    }
}

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Num::Int(n) => write!(f, "{}", n),
            Num::Float(x) => write!(f, "{}", x),
            Num::Text(s) => write!(f, "{:?}", s),
        }
    }
}

pub type Row = Spanned<Vec<Num>>;
pub type Matrix = Spanned<Vec<Row>>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlayerSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Spanned<Vec<String>>>,
    pub costs: Row,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LossSection {
    pub matrix: Matrix,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuleSection {
    pub c1: Matrix,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DisputeSection {
    pub spend1: Row,
    pub spend2: Row,
    pub s1: Matrix,
    pub stake: Spanned<Num>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub institution: Option<Spanned<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d1: Option<Spanned<Num>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exposure: Option<Spanned<Num>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub player1: Option<PlayerSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub player2: Option<PlayerSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub loss: Option<LossSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sharing_rule: Option<RuleSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dispute: Option<DisputeSection>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DocError {
    Io(String),
    Syntax(String),
    Invalid(Vec<String>),
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocError::Io(m) | DocError::Syntax(m) => f.write_str(m),
            DocError::Invalid(diags) => f.write_str(&diags.join("\n")),
        }
    }
}

impl std::error::Error for DocError {}

/// Where a document came from, for line-anchored diagnostics.
#[derive(Debug, Clone)]
pub struct Source {
    pub origin: String,
    pub text: String,
}

impl Source {
    pub fn new(origin: impl Into<String>, text: impl Into<String>) -> Self {
        Source {
            origin: origin.into(),
            text: text.into(),
        }
    }

    fn line_of(&self, offset: usize) -> usize {
        self.text[..offset.min(self.text.len())].matches('\n').count() + 1
    }

    fn at<S>(&self, spanned: &Spanned<S>, message: impl fmt::Display) -> String {
        format!("{}:{}: {}", self.origin, self.line_of(spanned.span().start), message)
    }

    fn bare(&self, message: impl fmt::Display) -> String {
        format!("{}: {}", self.origin, message)
    }
}

pub fn parse_str(src: &Source) -> Result<ModelDocument, DocError> {
    toml::from_str(&src.text).map_err(|e| {
        let line = e.span().map(|s| src.line_of(s.start));
        let msg = e.message().trim().to_string();
        DocError::Syntax(match line {
            Some(l) => format!("{}:{}: {}", src.origin, l, msg),
            None => src.bare(msg),
        })
    })
}

pub fn read_source(path: &Path) -> Result<Source, DocError> {
    let text = std::fs::read_to_string(path).map_err(|e| DocError::Io(format!("{}: {}", path.display(), e)))?;
    Ok(Source::new(path.display().to_string(), text))
}

/// Reads, parses and validates a scenario file.
pub fn parse_model(path: &Path) -> Result<ModelDocument, DocError> {
    let src = read_source(path)?;
    let doc = parse_str(&src)?;
    Scenario::<f64>::from_document(&doc, &src)?;
    Ok(doc)
}

pub fn to_toml_string(doc: &ModelDocument) -> String {
    toml::to_string(doc).expect("scenario documents always serialize")
}

/// A validated scenario in a chosen number type.
#[derive(Debug, Clone)]
pub struct Scenario<T> {
    pub name: Option<String>,
    pub transaction: Option<TransactionType<T>>,
    pub exposure: Option<Exposure<T>>,
    pub rule: Option<SharingRule<T>>,
    pub dispute: Option<DisputeModel<T>>,
}

struct Checker<'a> {
    src: &'a Source,
    diags: Vec<String>,
}

impl<'a> Checker<'a> {
    fn number<T: Scalar>(&mut self, n: &Spanned<Num>, what: &str) -> Option<T> {
        let v = n.get_ref().value::<T>().filter(T::is_finite);
        if v.is_none() {
            self.diags.push(self.src.at(n, format!("{}: {} is not a number", what, n.get_ref())));
        }
        v
    }

    fn vector<T: Scalar>(&mut self, row: &Row, what: &str) -> Option<Vec<T>> {
        let mut out = Vec::new();
        for (k, n) in row.get_ref().iter().enumerate() {
            match n.value::<T>().filter(T::is_finite) {
                Some(v) => out.push(v),
                None => {
                    self.diags.push(self.src.at(row, format!("{}[{}]: {} is not a number", what, k, n)));
                    return None;
                }
            }
        }
        Some(out)
    }

    /// Matrix with optional `"-"` holes and entries in `[0,1]`.
    fn matrix<T: Scalar>(
        &mut self,
        m: &Matrix,
        what: &str,
        shape: Option<(usize, usize)>,
        holes: bool,
    ) -> Option<Grid<Option<T>>> {
        let rows = m.get_ref();
        let before = self.diags.len();
        let n = rows.len();
        let width = rows.first().map_or(0, |r| r.get_ref().len());
        let (en, em) = shape.unwrap_or((n, width));
        if n != en {
            self.diags
                .push(self.src.at(m, format!("{} has {} rows, expected {}", what, n, en)));
        }
        if n == 0 || width == 0 {
            self.diags.push(self.src.at(m, format!("{} is empty", what)));
            return None;
        }
        let mut grid = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            if row.get_ref().len() != em {
                self.diags.push(self.src.at(
                    row,
                    format!("{} row {} has {} entries, expected {}", what, i, row.get_ref().len(), em),
                ));
                continue;
            }
            let mut out = Vec::new();
            for (j, n) in row.get_ref().iter().enumerate() {
                if n.is_missing() {
                    if !holes {
                        self.diags
                            .push(self.src.at(row, format!("{} at ({},{}) must be a number", what, i, j)));
                    }
                    out.push(None);
                    continue;
                }
                match n.value::<T>().filter(T::is_finite) {
                    Some(v) if v >= T::zero() && v <= T::one() => out.push(Some(v)),
                    Some(_) => {
                        self.diags
                            .push(self.src.at(row, format!("{} out of [0,1] at ({},{}): {}", what, i, j, n)));
                        out.push(None);
                    }
                    None => {
                        self.diags
                            .push(self.src.at(row, format!("{} at ({},{}): {} is not a number", what, i, j, n)));
                        out.push(None);
                    }
                }
            }
            grid.push(out);
        }
        if self.diags.len() > before {
            return None;
        }
        Grid::from_rows(grid)
    }

    fn player<T: Scalar>(&mut self, p: &PlayerSection, who: &str) -> Option<ChoiceSet<T>> {
        let costs = self.vector::<T>(&p.costs, &format!("{}.costs", who))?;
        if costs.is_empty() {
            self.diags.push(self.src.at(&p.costs, format!("{} has no choices", who)));
            return None;
        }
        if let Some(k) = costs.iter().position(|c| *c < T::zero()) {
            self.diags
                .push(self.src.at(&p.costs, format!("{}.costs[{}] is negative", who, k)));
            return None;
        }
        let labels = match &p.labels {
            Some(l) if l.get_ref().len() != costs.len() => {
                self.diags.push(self.src.at(
                    l,
                    format!("{} has {} labels for {} costs", who, l.get_ref().len(), costs.len()),
                ));
                return None;
            }
            Some(l) => l.get_ref().clone(),
            None => costs.iter().map(|c| c.display_full()).collect(),
        };
        match ChoiceSet::new(labels, costs) {
            Ok(c) => Some(c),
            Err(e) => {
                self.diags.push(self.src.at(&p.costs, format!("{}: {}", who, e)));
                None
            }
        }
    }
}

impl<T: Scalar> Scenario<T> {
    pub fn from_document(doc: &ModelDocument, src: &Source) -> Result<Self, DocError> {
        let mut ck = Checker {
            src,
            diags: Vec::new(),
        };

        let exposure = doc.exposure.as_ref().and_then(|x| {
            let v = ck.number::<T>(x, "exposure")?;
            match Exposure::new(v) {
                Ok(e) => Some(e),
                Err(e) => {
                    ck.diags.push(src.at(x, e));
                    None
                }
            }
        });

        let transaction = match (&doc.player1, &doc.player2, &doc.loss) {
            (None, None, None) => None,
            (Some(p1), Some(p2), Some(loss)) => {
                let c1 = ck.player::<T>(p1, "player1");
                let c2 = ck.player::<T>(p2, "player2");
                let shape = c1.as_ref().zip(c2.as_ref()).map(|(a, b)| (a.len(), b.len()));
                let grid = ck.matrix::<T>(&loss.matrix, "loss", shape, true);
                match (c1, c2, grid) {
                    (Some(c1), Some(c2), Some(grid)) => match TransactionType::new(c1, c2, grid) {
                        Ok(t) => Some(t),
                        Err(e) => {
                            ck.diags.push(src.at(&loss.matrix, e));
                            None
                        }
                    },
                    _ => None,
                }
            }
            _ => {
                ck.diags.push(src.bare(
                    "a transaction type needs all of [player1], [player2] and [loss]",
                ));
                None
            }
        };

        let rule = doc.sharing_rule.as_ref().and_then(|r| {
            let shape = transaction.as_ref().map(|t| t.shape());
            let grid = ck.matrix::<T>(&r.c1, "sharing_rule.c1", shape, false)?;
            let (n, m) = grid.shape();
            let c1 = Grid::from_fn(n, m, |i, j| grid[Cell(i, j)].clone().expect("no holes"));
            SharingRule::new(c1).ok()
        });

        let dispute = doc.dispute.as_ref().and_then(|d| {
            let s1 = ck.vector::<T>(&d.spend1, "dispute.spend1");
            let s2 = ck.vector::<T>(&d.spend2, "dispute.spend2");
            let shape = s1.as_ref().zip(s2.as_ref()).map(|(a, b)| (a.len(), b.len()));
            let share = ck.matrix::<T>(&d.s1, "dispute.s1", shape, true);
            let stake = ck.number::<T>(&d.stake, "dispute.stake");
            let d1 = d.d1.as_ref().and_then(|x| ck.number::<T>(x, "dispute.d1"));
            let institution = match d.institution.as_ref().map(|s| (s, s.get_ref().as_str())) {
                None | Some((_, "each-pays-own")) => Some(Institution::EachPaysOwn),
                Some((_, "loser-pays")) => Some(Institution::LoserPays),
                Some((s, "proportional")) => match d1.clone() {
                    Some(d1) => Some(Institution::Proportional { d1 }),
                    None => {
                        ck.diags.push(src.at(s, "proportional institution needs d1"));
                        None
                    }
                },
                Some((s, other)) => {
                    ck.diags.push(src.at(
                        s,
                        format!(
                            "unknown institution {:?}; expected each-pays-own, proportional or loser-pays",
                            other
                        ),
                    ));
                    None
                }
            };
            match (s1, s2, share, stake, institution) {
                (Some(s1), Some(s2), Some(share), Some(stake), Some(inst)) => {
                    match DisputeModel::new(s1, s2, share, stake, inst) {
                        Ok(m) => Some(m),
                        Err(e) => {
                            ck.diags.push(src.at(&d.spend1, e));
                            None
                        }
                    }
                }
                _ => None,
            }
        });

        if !ck.diags.is_empty() {
            return Err(DocError::Invalid(ck.diags));
        }
        Ok(Scenario {
            name: doc.name.clone(),
            transaction,
            exposure,
            rule,
            dispute,
        })
    }
}
