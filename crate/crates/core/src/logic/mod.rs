//! Propositional sentences and their exact semantics.
//!
//! Every semantic question is answered by enumerating truth assignments.
//! Vocabularies are capped at [`MAX_ATOMS`] atoms so the enumeration stays
//! tractable.

mod parse;
mod sentence;
mod simplify;
mod truth;
mod vocab;

pub use parse::parse_sentence;
pub use sentence::Sentence;
pub use simplify::simplify;
pub use truth::BoolFn;
pub use vocab::{Atom, Language, Vocabulary, World, MAX_ATOMS};

use crate::error::{Error, Result};

/// Truth value of `s` in world `w`.
pub fn evaluate(s: &Sentence, w: &World) -> Result<bool> {
    Ok(match s {
        Sentence::Const(v) => *v,
        Sentence::Atom(name) => w.get(name).ok_or_else(|| {
            Error::VocabularyMismatch(format!("atom `{name}` is not assigned by the world"))
        })?,
        Sentence::Not(a) => !evaluate(a, w)?,
        Sentence::And(a, b) => evaluate(a, w)? && evaluate(b, w)?,
        Sentence::Or(a, b) => evaluate(a, w)? || evaluate(b, w)?,
        Sentence::Implies(a, b) => !evaluate(a, w)? || evaluate(b, w)?,
    })
}

/// All worlds over `vocab` satisfying `s`, in canonical order.
pub fn models(s: &Sentence, vocab: &Vocabulary) -> Result<Vec<World>> {
    let f = vocab.compile(s)?;
    Ok(f.models().map(|k| vocab.world(k)).collect())
}

/// The untagged vocabulary of atoms mentioned by any of `sentences`.
fn shared_vocabulary<'a>(sentences: impl IntoIterator<Item = &'a Sentence>) -> Result<Vocabulary> {
    let mut names = std::collections::BTreeSet::new();
    for s in sentences {
        names.extend(s.atoms());
    }
    Vocabulary::untagged(names)
}

/// `a ⊨ b`, decided over the atoms the two sentences mention.
pub fn entails(a: &Sentence, b: &Sentence) -> Result<bool> {
    let v = shared_vocabulary([a, b])?;
    Ok(v.compile(a)?.entails(&v.compile(b)?))
}

/// `a ≡ b`.
pub fn equivalent(a: &Sentence, b: &Sentence) -> Result<bool> {
    let v = shared_vocabulary([a, b])?;
    Ok(v.compile(a)? == v.compile(b)?)
}

pub fn is_satisfiable(s: &Sentence) -> Result<bool> {
    let v = shared_vocabulary([s])?;
    Ok(!v.compile(s)?.is_contradiction())
}

pub fn is_valid(s: &Sentence) -> Result<bool> {
    let v = shared_vocabulary([s])?;
    Ok(v.compile(s)?.is_tautology())
}

/// Full-vocabulary minterm DNF of `s`: one conjunction of literals per
/// satisfying world, in canonical world order. Unsatisfiable input gives
/// `false` and valid input gives `true`, so the result is unique per
/// equivalence class.
pub fn canonical_form(s: &Sentence, vocab: &Vocabulary) -> Result<Sentence> {
    Ok(to_canonical(&vocab.compile(s)?, vocab))
}

/// Minterm DNF of a truth table.
pub fn to_canonical(f: &BoolFn, vocab: &Vocabulary) -> Sentence {
    if f.is_contradiction() {
        Sentence::Const(false)
    } else if f.is_tautology() {
        Sentence::Const(true)
    } else {
        Sentence::disjunction(f.models().map(|k| vocab.world(k).to_sentence()))
    }
}
