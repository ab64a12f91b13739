use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use super::truth::BoolFn;
use super::Sentence;
use crate::error::{Error, Result};

/// Hard cap on the number of atoms in one vocabulary (2^20 assignments).
pub const MAX_ATOMS: usize = 20;

/// Which of the two disjoint propositional languages an atom belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Language {
    /// The domain language, whose atoms are network nodes.
    Domain,
    /// The objection language.
    Objection,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Atom {
    pub name: String,
    pub language: Language,
}

pub(crate) fn valid_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && name != "true" && name != "false"
}

struct Inner {
    language: Option<Language>,
    names: Vec<String>,
    index: HashMap<String, usize>,
    masks: OnceLock<Vec<BoolFn>>,
}

/// An ordered set of atoms. The order fixes the canonical enumeration of
/// worlds: world `k` makes atom `i` true iff bit `len - 1 - i` of `k` is
/// clear, so world 0 is the all-true assignment and the first atom varies
/// slowest.
///
/// Cloning is cheap.
#[derive(Clone)]
pub struct Vocabulary {
    inner: Arc<Inner>,
}

impl Vocabulary {
    pub fn new<I, S>(language: Language, names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::build(Some(language), names)
    }

    /// A vocabulary with no language tag, used when comparing sentences
    /// over whatever atoms they happen to mention.
    pub fn untagged<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::build(None, names)
    }

    fn build<I, S>(language: Option<Language>, names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_ATOMS {
            return Err(Error::EnumerationLimit {
                atoms: names.len(),
                limit: MAX_ATOMS,
            });
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if !valid_atom_name(name) {
                return Err(Error::InvalidAtomName(name.clone()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateAtom(name.clone()));
            }
        }
        Ok(Vocabulary {
            inner: Arc::new(Inner {
                language,
                names,
                index,
                masks: OnceLock::new(),
            }),
        })
    }

    pub fn language(&self) -> Option<Language> {
        self.inner.language
    }

    pub fn len(&self) -> usize {
        self.inner.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.inner.names[i]
    }

    pub fn atom(&self, i: usize) -> Atom {
        Atom {
            name: self.inner.names[i].clone(),
            language: self.inner.language.unwrap_or(Language::Domain),
        }
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.inner.index.get(name).copied()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.inner.index.contains_key(name)
    }

    pub fn world_count(&self) -> usize {
        1usize << self.len()
    }

    /// All worlds in canonical order.
    pub fn worlds(&self) -> impl Iterator<Item = World> + '_ {
        (0..self.world_count()).map(move |k| World {
            vocab: self.clone(),
            index: k,
        })
    }

    pub fn world(&self, index: usize) -> World {
        assert!(index < self.world_count(), "world index out of range");
        World {
            vocab: self.clone(),
            index,
        }
    }

    /// Fails with [`Error::UnknownAtom`] on the first atom of `s` outside
    /// this vocabulary.
    pub fn check(&self, s: &Sentence) -> Result<()> {
        let mut missing = None;
        s.visit_atoms(&mut |name| {
            if missing.is_none() && !self.contains(name) {
                missing = Some(name.to_string());
            }
        });
        match missing {
            Some(name) => Err(Error::UnknownAtom(name)),
            None => Ok(()),
        }
    }

    /// Truth table of `s` over this vocabulary.
    pub fn compile(&self, s: &Sentence) -> Result<BoolFn> {
        Ok(match s {
            Sentence::Const(true) => BoolFn::tautology(self.len()),
            Sentence::Const(false) => BoolFn::contradiction(self.len()),
            Sentence::Atom(name) => {
                let i = self
                    .position(name)
                    .ok_or_else(|| Error::UnknownAtom(name.clone()))?;
                self.atom_fn(i).clone()
            }
            Sentence::Not(a) => self.compile(a)?.not(),
            Sentence::And(a, b) => self.compile(a)?.and(&self.compile(b)?),
            Sentence::Or(a, b) => self.compile(a)?.or(&self.compile(b)?),
            Sentence::Implies(a, b) => self.compile(a)?.not().or(&self.compile(b)?),
        })
    }

    /// Truth table of the `i`th atom.
    pub fn atom_fn(&self, i: usize) -> &BoolFn {
        &self.inner.masks.get_or_init(|| {
            (0..self.len())
                .map(|i| BoolFn::atom(self.len(), i))
                .collect()
        })[i]
    }
}

impl PartialEq for Vocabulary {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.language == other.inner.language
                && self.inner.names == other.inner.names)
    }
}

impl Eq for Vocabulary {}

impl Hash for Vocabulary {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inner.language.hash(state);
        self.inner.names.hash(state);
    }
}

impl fmt::Debug for Vocabulary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Vocabulary")
            .field("language", &self.inner.language)
            .field("names", &self.inner.names)
            .finish()
    }
}

/// One complete truth assignment over a vocabulary.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct World {
    vocab: Vocabulary,
    index: usize,
}

impl World {
    pub fn from_values(vocab: &Vocabulary, values: &[bool]) -> Result<Self> {
        if values.len() != vocab.len() {
            return Err(Error::VocabularyMismatch(format!(
                "{} truth values given for {} atoms",
                values.len(),
                vocab.len()
            )));
        }
        let n = vocab.len();
        let index = values
            .iter()
            .enumerate()
            .filter(|(_, v)| !**v)
            .fold(0usize, |acc, (i, _)| acc | (1 << (n - 1 - i)));
        Ok(World {
            vocab: vocab.clone(),
            index,
        })
    }

    pub fn vocabulary(&self) -> &Vocabulary {
        &self.vocab
    }

    /// Position of this world in the canonical enumeration.
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn value(&self, i: usize) -> bool {
        let n = self.vocab.len();
        assert!(i < n, "atom index out of range");
        (self.index >> (n - 1 - i)) & 1 == 0
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.vocab.position(name).map(|i| self.value(i))
    }

    pub fn values(&self) -> Vec<bool> {
        (0..self.vocab.len()).map(|i| self.value(i)).collect()
    }

    /// The conjunction of literals true in this world (`true` for an empty
    /// vocabulary).
    pub fn to_sentence(&self) -> Sentence {
        Sentence::conjunction(
            (0..self.vocab.len()).map(|i| Sentence::literal(self.vocab.name(i), self.value(i))),
        )
    }
}

impl fmt::Display for World {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sentence())
    }
}

impl fmt::Debug for World {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "World({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_names_and_duplicates() {
        assert_eq!(
            Vocabulary::new(Language::Domain, ["1x"]).unwrap_err(),
            Error::InvalidAtomName("1x".into())
        );
        assert_eq!(
            Vocabulary::new(Language::Domain, ["true"]).unwrap_err(),
            Error::InvalidAtomName("true".into())
        );
        assert_eq!(
            Vocabulary::new(Language::Domain, ["a", "b", "a"]).unwrap_err(),
            Error::DuplicateAtom("a".into())
        );
    }

    #[test]
    fn enforces_atom_limit() {
        let names: Vec<String> = (0..21).map(|i| format!("x{i}")).collect();
        assert_eq!(
            Vocabulary::new(Language::Objection, names).unwrap_err(),
            Error::EnumerationLimit {
                atoms: 21,
                limit: MAX_ATOMS
            }
        );
    }

    #[test]
    fn canonical_order_starts_all_true() {
        let v = Vocabulary::new(Language::Domain, ["bird", "fly"]).unwrap();
        let shown: Vec<String> = v.worlds().map(|w| w.to_string()).collect();
        assert_eq!(
            shown,
            ["bird & fly", "bird & !fly", "!bird & fly", "!bird & !fly"]
        );
    }

    #[test]
    fn from_values_inverts_values() {
        let v = Vocabulary::new(Language::Domain, ["a", "b", "c"]).unwrap();
        for w in v.worlds() {
            assert_eq!(World::from_values(&v, &w.values()).unwrap(), w);
        }
        assert!(World::from_values(&v, &[true]).is_err());
    }
}
