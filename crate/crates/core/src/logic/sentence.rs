use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

/// A propositional sentence.
///
/// Binary connectives are left-nested when built by the parser or by
/// [`Sentence::conjunction`] / [`Sentence::disjunction`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Sentence {
    Const(bool),
    Atom(String),
    Not(Box<Sentence>),
    And(Box<Sentence>, Box<Sentence>),
    Or(Box<Sentence>, Box<Sentence>),
    Implies(Box<Sentence>, Box<Sentence>),
}

impl Sentence {
    pub fn atom(name: impl Into<String>) -> Self {
        Sentence::Atom(name.into())
    }

    /// `name` if `positive`, otherwise `!name`.
    pub fn literal(name: impl Into<String>, positive: bool) -> Self {
        let a = Sentence::Atom(name.into());
        if positive {
            a
        } else {
            a.negate()
        }
    }

    pub fn negate(self) -> Self {
        Sentence::Not(Box::new(self))
    }

    pub fn and(self, other: Sentence) -> Self {
        Sentence::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Sentence) -> Self {
        Sentence::Or(Box::new(self), Box::new(other))
    }

    pub fn implies(self, other: Sentence) -> Self {
        Sentence::Implies(Box::new(self), Box::new(other))
    }

    /// Left-nested conjunction; `true` when empty.
    pub fn conjunction(parts: impl IntoIterator<Item = Sentence>) -> Self {
        parts
            .into_iter()
            .reduce(Sentence::and)
            .unwrap_or(Sentence::Const(true))
    }

    /// Left-nested disjunction; `false` when empty.
    pub fn disjunction(parts: impl IntoIterator<Item = Sentence>) -> Self {
        parts
            .into_iter()
            .reduce(Sentence::or)
            .unwrap_or(Sentence::Const(false))
    }

    pub(crate) fn visit_atoms<'a>(&'a self, f: &mut impl FnMut(&'a str)) {
        match self {
            Sentence::Const(_) => {}
            Sentence::Atom(name) => f(name),
            Sentence::Not(a) => a.visit_atoms(f),
            Sentence::And(a, b) | Sentence::Or(a, b) | Sentence::Implies(a, b) => {
                a.visit_atoms(f);
                b.visit_atoms(f);
            }
        }
    }

    /// Atom names mentioned in the sentence, sorted.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit_atoms(&mut |name| {
            out.insert(name.to_string());
        });
        out
    }

    /// If the sentence is a conjunction of literals (or `true`), returns
    /// them as `(name, positive)` pairs in order of appearance.
    pub fn as_literal_conjunction(&self) -> Option<Vec<(String, bool)>> {
        fn walk(s: &Sentence, out: &mut Vec<(String, bool)>) -> bool {
            match s {
                Sentence::Atom(name) => {
                    out.push((name.clone(), true));
                    true
                }
                Sentence::Not(inner) => match inner.as_ref() {
                    Sentence::Atom(name) => {
                        out.push((name.clone(), false));
                        true
                    }
                    _ => false,
                },
                Sentence::And(a, b) => walk(a, out) && walk(b, out),
                _ => false,
            }
        }
        if *self == Sentence::Const(true) {
            return Some(Vec::new());
        }
        let mut out = Vec::new();
        walk(self, &mut out).then_some(out)
    }

    fn precedence(&self) -> u8 {
        match self {
            Sentence::Implies(..) => 1,
            Sentence::Or(..) => 2,
            Sentence::And(..) => 3,
            Sentence::Not(_) => 4,
            Sentence::Const(_) | Sentence::Atom(_) => 5,
        }
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, s: &Sentence, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({s})")
    } else {
        write!(f, "{s}")
    }
}

/// Renders in the formula grammar with the fewest parentheses that
/// preserve the tree shape.
impl fmt::Display for Sentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.precedence();
        match self {
            Sentence::Const(v) => write!(f, "{v}"),
            Sentence::Atom(name) => write!(f, "{name}"),
            Sentence::Not(a) => {
                write!(f, "!")?;
                write_operand(f, a, a.precedence() < p)
            }
            Sentence::And(a, b) | Sentence::Or(a, b) => {
                let op = if matches!(self, Sentence::And(..)) {
                    "&"
                } else {
                    "|"
                };
                write_operand(f, a, a.precedence() < p)?;
                write!(f, " {op} ")?;
                write_operand(f, b, b.precedence() <= p)
            }
            Sentence::Implies(a, b) => {
                write_operand(f, a, a.precedence() <= p)?;
                write!(f, " => ")?;
                write_operand(f, b, b.precedence() < p)
            }
        }
    }
}

impl fmt::Debug for Sentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sentence({self})")
    }
}

impl Serialize for Sentence {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
