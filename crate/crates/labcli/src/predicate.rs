//! Boolean expressions over classifier names, for `scan`.
//!
//! Grammar: `expr := term ('|' term)*`, `term := factor ('&' factor)*`,
//! `factor := '!' factor | '(' expr ')' | name`. `&&` and `||` are accepted.

use ringlab_core::torsion::{RingReport, TorsionKind};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Predicate {
    Name(String),
    Not(Box<Predicate>),
    And(Box<Predicate>, Box<Predicate>),
    Or(Box<Predicate>, Box<Predicate>),
}

pub const NAMES: &[&str] = &[
    "semisimple",
    "local",
    "division",
    "commutative",
    "qf",
    "qf_right",
    "v_ring",
    "kasch",
    "almost_small",
    "right_almost_small",
    "small_ring",
    "semiperfect_product",
    "perp_torsion",
    "teply",
    "socle_lr",
    "socle_rl",
    "splits",
    "cohereditary",
    "stable",
    "goldie_leq_cg",
    "trivial",
    "improper",
    "proper",
];

fn canonical(name: &str) -> String {
    name.to_ascii_lowercase().replace('-', "_")
}

pub fn lookup(report: &RingReport, name: &str) -> Option<bool> {
    let c = &report.classifiers;
    let v = &report.verdict;
    Some(match canonical(name).as_str() {
        "semisimple" => c.semisimple,
        "local" => c.local,
        "division" => c.division,
        "commutative" => c.commutative,
        "qf" => c.qf,
        "qf_right" => c.qf_right,
        "v_ring" => c.v_ring,
        "kasch" => c.kasch,
        "almost_small" => c.almost_small,
        "right_almost_small" => c.right_almost_small,
        "small_ring" => c.small_ring,
        "semiperfect_product" => c.semiperfect_product,
        "perp_torsion" => c.regular_perp_torsion,
        "teply" => report.teply_condition,
        "socle_lr" => report.socle_inclusion_lr,
        "socle_rl" => report.socle_inclusion_rl,
        "splits" => v.splits,
        "cohereditary" => v.cohereditary,
        "stable" => v.stable,
        "goldie_leq_cg" => v.goldie_leq_cg,
        "trivial" => v.kind == TorsionKind::Trivial,
        "improper" => v.kind == TorsionKind::Improper,
        "proper" => v.kind == TorsionKind::Proper,
        _ => return None,
    })
}

impl Predicate {
    pub fn eval(&self, report: &RingReport) -> bool {
        match self {
            Predicate::Name(n) => lookup(report, n).expect("names are checked at parse time"),
            Predicate::Not(p) => !p.eval(report),
            Predicate::And(a, b) => a.eval(report) && b.eval(report),
            Predicate::Or(a, b) => a.eval(report) || b.eval(report),
        }
    }

    /// Names in order of first appearance.
    pub fn names(&self) -> Vec<&str> {
        fn walk<'a>(p: &'a Predicate, out: &mut Vec<&'a str>) {
            match p {
                Predicate::Name(n) => {
                    if !out.contains(&n.as_str()) {
                        out.push(n);
                    }
                }
                Predicate::Not(q) => walk(q, out),
                Predicate::And(a, b) | Predicate::Or(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }
}

struct Parser<'a> {
    s: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&mut self) -> Option<char> {
        while let Some(c) = self.s[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                return Some(c);
            }
        }
        None
    }

    fn err(&self, what: &str) -> CliError {
        CliError::Input(format!("predicate {:?}: {what} at offset {}", self.s, self.pos))
    }

    fn op(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            if self.s[self.pos..].starts_with(c) {
                self.pos += 1;
            }
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Predicate, CliError> {
        let mut e = self.term()?;
        while self.op('|') {
            e = Predicate::Or(Box::new(e), Box::new(self.term()?));
        }
        Ok(e)
    }

    fn term(&mut self) -> Result<Predicate, CliError> {
        let mut e = self.factor()?;
        while self.op('&') {
            e = Predicate::And(Box::new(e), Box::new(self.factor()?));
        }
        Ok(e)
    }

    fn factor(&mut self) -> Result<Predicate, CliError> {
        match self.peek() {
            Some('!') => {
                self.pos += 1;
                Ok(Predicate::Not(Box::new(self.factor()?)))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.s[self.pos..].starts_with(|c: char| c.is_ascii_alphanumeric() || c == '_' || c == '-') {
                    self.pos += 1;
                }
                let name = canonical(&self.s[start..self.pos]);
                if !NAMES.contains(&name.as_str()) {
                    return Err(CliError::Input(format!(
                        "unknown classifier {name:?}; known: {}",
                        NAMES.join(", ")
                    )));
                }
                Ok(Predicate::Name(name))
            }
            _ => Err(self.err("expected a classifier name")),
        }
    }
}

pub fn parse_predicate(s: &str) -> Result<Predicate, CliError> {
    let mut p = Parser { s, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}
