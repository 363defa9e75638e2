//! Boolean formulas compiled to lattices whose game value is the truth value.
//!
//! A true leaf is the one-element lattice and a false leaf the two-element
//! chain. Negation adds a new top. Disjunction glues the two operands into a
//! seven-element frame; conjunction goes through De Morgan.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::lattice::{FiniteLattice, LatticeError};
use crate::par::Exec;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("variable {0} has no value")]
    UnassignedVariable(String),
    #[error("bad assignment {0:?}; expected name=0 or name=1")]
    Assignment(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Var(String),
    Const(bool),
    Not(Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    And(Box<Formula>, Box<Formula>),
}

pub type Assignment = BTreeMap<String, bool>;

impl Formula {
    pub fn var(name: &str) -> Self {
        Formula::Var(name.to_string())
    }

    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Var(v) => {
                out.insert(v.clone());
            }
            Formula::Const(_) => {}
            Formula::Not(a) => a.collect_vars(out),
            Formula::Or(a, b) | Formula::And(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    pub fn eval(&self, assignment: &Assignment) -> Result<bool, FormulaError> {
        Ok(match self {
            Formula::Var(v) => *assignment
                .get(v)
                .ok_or_else(|| FormulaError::UnassignedVariable(v.clone()))?,
            Formula::Const(c) => *c,
            Formula::Not(a) => !a.eval(assignment)?,
            Formula::Or(a, b) => a.eval(assignment)? | b.eval(assignment)?,
            Formula::And(a, b) => a.eval(assignment)? & b.eval(assignment)?,
        })
    }

    /// Counts of (leaves, Not, Or, And).
    pub fn shape_counts(&self) -> (usize, usize, usize, usize) {
        match self {
            Formula::Var(_) | Formula::Const(_) => (1, 0, 0, 0),
            Formula::Not(a) => {
                let (l, n, o, d) = a.shape_counts();
                (l, n + 1, o, d)
            }
            Formula::Or(a, b) | Formula::And(a, b) => {
                let (l1, n1, o1, d1) = a.shape_counts();
                let (l2, n2, o2, d2) = b.shape_counts();
                let is_or = matches!(self, Formula::Or(..)) as usize;
                (l1 + l2, n1 + n2, o1 + o2 + is_or, d1 + d2 + 1 - is_or)
            }
        }
    }

    /// Replaces every `a & b` by `~(~a | ~b)`.
    pub fn without_and(&self) -> Formula {
        match self {
            Formula::Var(_) | Formula::Const(_) => self.clone(),
            Formula::Not(a) => Formula::not(a.without_and()),
            Formula::Or(a, b) => Formula::or(a.without_and(), b.without_and()),
            Formula::And(a, b) => Formula::not(Formula::or(
                Formula::not(a.without_and()),
                Formula::not(b.without_and()),
            )),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(v) => write!(f, "{v}"),
            Formula::Const(c) => write!(f, "{}", *c as u8),
            Formula::Not(a) => write!(f, "~{a}"),
            Formula::Or(a, b) => write!(f, "({a}|{b})"),
            Formula::And(a, b) => write!(f, "({a}&{b})"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn err<T>(&self, message: &str) -> Result<T, FormulaError> {
        Err(FormulaError::Syntax {
            offset: self.pos,
            message: message.to_string(),
        })
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    /// `term [op term]`; chains of binary operators must be parenthesized.
    fn formula(&mut self) -> Result<Formula, FormulaError> {
        let a = self.term()?;
        let op = match self.peek() {
            Some(c @ (b'|' | b'&')) => c,
            _ => return Ok(a),
        };
        self.pos += 1;
        let b = self.term()?;
        if let Some(b'|' | b'&') = self.peek() {
            return self.err("ambiguous operator chain, add parentheses");
        }
        Ok(if op == b'|' {
            Formula::or(a, b)
        } else {
            Formula::and(a, b)
        })
    }

    fn term(&mut self) -> Result<Formula, FormulaError> {
        match self.peek() {
            None => self.err("unexpected end of input"),
            Some(b'~') => {
                self.pos += 1;
                Ok(Formula::not(self.term()?))
            }
            Some(b'(') => {
                self.pos += 1;
                let f = self.formula()?;
                match self.peek() {
                    Some(b')') => self.pos += 1,
                    None => return self.err("unexpected end of input"),
                    Some(_) => return self.err("expected ')'"),
                }
                Ok(f)
            }
            Some(b'0') => {
                self.pos += 1;
                Ok(Formula::Const(false))
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Formula::Const(true))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Ok(Formula::var(name))
            }
            Some(_) => self.err("expected a variable, 0, 1, '~' or '('"),
        }
    }
}

/// Parses `formula := term [('|' | '&') term]` with
/// `term := var | 0 | 1 | ~term | (formula)`.
pub fn parse(text: &str) -> Result<Formula, FormulaError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let f = p.formula()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(f)
}

/// Parses `x=1,y=0`.
pub fn parse_assignment(text: &str) -> Result<Assignment, FormulaError> {
    let mut out = Assignment::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| FormulaError::Assignment(item.to_string()))?;
        let value = match value.trim() {
            "0" => false,
            "1" => true,
            _ => return Err(FormulaError::Assignment(item.to_string())),
        };
        out.insert(name.trim().to_string(), value);
    }
    Ok(out)
}

/// Covers of a partially built lattice with distinguished bottom and top.
struct Piece {
    n: usize,
    covers: Vec<(usize, usize)>,
    bottom: usize,
    top: usize,
}

impl Piece {
    fn leaf(value: bool) -> Piece {
        if value {
            Piece {
                n: 1,
                covers: vec![],
                bottom: 0,
                top: 0,
            }
        } else {
            Piece {
                n: 2,
                covers: vec![(0, 1)],
                bottom: 0,
                top: 1,
            }
        }
    }

    fn negate(mut self) -> Piece {
        let t = self.n;
        self.covers.push((self.top, t));
        self.n += 1;
        self.top = t;
        self
    }

    /// Both operands sit on a shared hub; `join` covers both tops and `side`
    /// closes a three-atom fan through the hub, so `top` is Eeta iff either
    /// operand top is.
    fn disjoin(self, other: Piece) -> Piece {
        let off = self.n;
        let mut covers = self.covers;
        covers.extend(other.covers.iter().map(|&(c, p)| (c + off, p + off)));
        let base = self.n + other.n;
        let [bottom, hub, a1, a2, side, join, top] = std::array::from_fn(|i| base + i);
        covers.extend([
            (bottom, hub),
            (bottom, a1),
            (bottom, a2),
            (hub, self.bottom),
            (hub, other.bottom + off),
            (hub, side),
            (a1, side),
            (a2, side),
            (self.top, join),
            (other.top + off, join),
            (side, top),
            (join, top),
        ]);
        Piece {
            n: base + 7,
            covers,
            bottom,
            top,
        }
    }
}

fn build(f: &Formula, a: &Assignment) -> Result<Piece, FormulaError> {
    Ok(match f {
        Formula::Var(_) | Formula::Const(_) => Piece::leaf(f.eval(a)?),
        Formula::Not(x) => build(x, a)?.negate(),
        Formula::Or(x, y) => build(x, a)?.disjoin(build(y, a)?),
        Formula::And(..) => build(&f.without_and(), a)?,
    })
}

/// Size of the compiled lattice, computed from the formula alone.
pub fn compiled_size(f: &Formula, a: &Assignment) -> Result<usize, FormulaError> {
    Ok(match f {
        Formula::Var(_) | Formula::Const(_) => {
            if f.eval(a)? {
                1
            } else {
                2
            }
        }
        Formula::Not(x) => compiled_size(x, a)? + 1,
        Formula::Or(x, y) => compiled_size(x, a)? + compiled_size(y, a)? + 7,
        Formula::And(x, y) => compiled_size(x, a)? + compiled_size(y, a)? + 10,
    })
}

/// Compiles `f` under `a`; the result is fully validated as a lattice.
pub fn compile(f: &Formula, a: &Assignment) -> Result<FiniteLattice, FormulaError> {
    let piece = build(f, a)?;
    Ok(FiniteLattice::with_limit(piece.n, &piece.covers, None, usize::MAX)?)
}

/// Whether the game value of the compiled lattice equals the truth value.
pub fn check_equivalence(f: &Formula, a: &Assignment) -> Result<bool, FormulaError> {
    let lattice = compile(f, a)?;
    let labels = lattice.solve();
    Ok(labels[lattice.top()].is_eeta() == f.eval(a)?)
}

/// All formulas with at most `max_connectives` connectives over `leaves`.
pub fn enumerate_formulas(max_connectives: usize, leaves: &[Formula]) -> Vec<Formula> {
    let mut by_size: Vec<Vec<Formula>> = vec![leaves.to_vec()];
    for k in 1..=max_connectives {
        let mut level: Vec<Formula> = by_size[k - 1].iter().cloned().map(Formula::not).collect();
        for i in 0..k {
            let j = k - 1 - i;
            for a in &by_size[i] {
                for b in &by_size[j] {
                    level.push(Formula::or(a.clone(), b.clone()));
                    level.push(Formula::and(a.clone(), b.clone()));
                }
            }
        }
        by_size.push(level);
    }
    by_size.into_iter().flatten().collect()
}

/// Every assignment of `vars`, in binary counting order.
pub fn all_assignments(vars: &[String]) -> Vec<Assignment> {
    (0..1usize << vars.len())
        .map(|bits| {
            vars.iter()
                .enumerate()
                .map(|(i, v)| (v.clone(), bits >> i & 1 == 1))
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, Default)]
pub struct EquivalenceReport {
    pub formulas: usize,
    pub checks: usize,
    pub failures: Vec<(String, Assignment)>,
}

/// Checks every formula with at most `max_connectives` connectives over
/// `num_vars` variables and both constants, under every assignment.
pub fn exhaustive_check(max_connectives: usize, num_vars: usize, exec: Exec) -> EquivalenceReport {
    let vars: Vec<String> = (1..=num_vars).map(|i| format!("x{i}")).collect();
    let mut leaves: Vec<Formula> = vars.iter().map(|v| Formula::var(v)).collect();
    leaves.extend([Formula::Const(false), Formula::Const(true)]);
    let formulas = enumerate_formulas(max_connectives, &leaves);
    let assignments = all_assignments(&vars);
    let per = exec.map(&formulas, |f| {
        assignments
            .iter()
            .filter(|a| !matches!(check_equivalence(f, a), Ok(true)))
            .map(|a| (f.to_string(), a.clone()))
            .collect::<Vec<_>>()
    });
    EquivalenceReport {
        formulas: formulas.len(),
        checks: formulas.len() * assignments.len(),
        failures: per.into_iter().flatten().collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::WinLabel;

    fn assign(s: &str) -> Assignment {
        parse_assignment(s).unwrap()
    }

    #[test]
    fn parses() {
        let f = parse("(x1|(x2|~x3))&(x4|x5)").unwrap();
        let want = Formula::and(
            Formula::or(
                Formula::var("x1"),
                Formula::or(Formula::var("x2"), Formula::not(Formula::var("x3"))),
            ),
            Formula::or(Formula::var("x4"), Formula::var("x5")),
        );
        assert_eq!(f, want);
        assert_eq!(parse(" ~ ~ x ").unwrap(), Formula::not(Formula::not(Formula::var("x"))));
        assert_eq!(f.to_string(), "((x1|(x2|~x3))&(x4|x5))");
        assert_eq!(parse(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        assert_eq!(
            parse("(x|"),
            Err(FormulaError::Syntax {
                offset: 3,
                message: "unexpected end of input".into()
            })
        );
        assert!(matches!(parse("(x y)"), Err(FormulaError::Syntax { offset: 3, .. })));
        assert!(matches!(parse("x)"), Err(FormulaError::Syntax { offset: 1, .. })));
        assert!(matches!(parse(""), Err(FormulaError::Syntax { offset: 0, .. })));
    }

    #[test]
    fn leaf_and_negation() {
        let one = compile(&Formula::Const(true), &Assignment::new()).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one.solve()[one.top()], WinLabel::Eeta);
        let neg = compile(&parse("~1").unwrap(), &Assignment::new()).unwrap();
        assert_eq!(neg.len(), 2);
        assert_eq!(neg.solve()[neg.top()], WinLabel::Atniss);
    }

    #[test]
    fn or_of_false() {
        let f = parse("(0|0)").unwrap();
        let l = compile(&f, &Assignment::new()).unwrap();
        assert_eq!(l.len(), 11);
        assert_eq!(l.solve()[l.top()], WinLabel::Atniss);
    }

    #[test]
    fn or_truth_table() {
        let f = parse("(x|y)").unwrap();
        for a in all_assignments(&["x".to_string(), "y".to_string()]) {
            assert!(check_equivalence(&f, &a).unwrap(), "{a:?}");
        }
    }

    #[test]
    fn figure_formula() {
        let f = parse("(x1|(x2|~x3))&(x4|x5)").unwrap();
        let vars: Vec<String> = f.variables().into_iter().collect();
        for a in all_assignments(&vars) {
            assert!(check_equivalence(&f, &a).unwrap());
            assert_eq!(compile(&f, &a).unwrap().len(), compiled_size(&f, &a).unwrap());
        }
    }

    #[test]
    fn unassigned() {
        let f = parse("(x|y)").unwrap();
        assert_eq!(
            compile(&f, &assign("x=1")).unwrap_err(),
            FormulaError::UnassignedVariable("y".into())
        );
        assert!(parse_assignment("x=2").is_err());
    }

    #[test]
    fn small_exhaustive() {
        let rep = exhaustive_check(2, 2, Exec::Parallel);
        assert!(
            rep.failures.is_empty(),
            "{:?}",
            &rep.failures[..rep.failures.len().min(5)]
        );
        assert_eq!(rep.formulas, 4 + (4 + 32) + (36 + 2 * (2 * 4 * 36)));
    }
}
