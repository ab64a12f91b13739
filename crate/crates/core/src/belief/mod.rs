//! Objection-based states of belief.
//!
//! A state maps every sentence of a domain language to an objection, a
//! sentence of a disjoint objection language. It is stored as a world
//! table: one objection per complete domain world. The objection to an
//! arbitrary sentence is the conjunction of the objections of its models,
//! so `Φ(A ∨ B) ≡ Φ(A) ∧ Φ(B)` and invariance under equivalence hold by
//! construction. The only condition left to check is that the tautology
//! gets a contradictory objection.
//!
//! By convention an unsatisfiable sentence has the empty conjunction,
//! `true`, as its objection: contradictions are rejected.

mod order;
mod rules;

pub use order::{EntailmentCheck, OrderingVerdict, Verdict};
pub use rules::{normalize_conditional, product};

use crate::error::{Error, Result};
use crate::logic::{to_canonical, BoolFn, Sentence, Vocabulary, World};

#[derive(Clone, Debug, PartialEq)]
pub struct ObjectionState {
    l_vocab: Vocabulary,
    o_vocab: Vocabulary,
    table: Vec<BoolFn>,
}

pub(crate) fn check_disjoint(l_vocab: &Vocabulary, o_vocab: &Vocabulary) -> Result<()> {
    match l_vocab.names().iter().find(|n| o_vocab.contains(n)) {
        Some(name) => Err(Error::OverlappingVocabularies(name.clone())),
        None => Ok(()),
    }
}

impl ObjectionState {
    /// Builds a state from one objection per domain world.
    pub fn from_world_table<I>(
        l_vocab: &Vocabulary,
        o_vocab: &Vocabulary,
        entries: I,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = (World, Sentence)>,
    {
        check_disjoint(l_vocab, o_vocab)?;
        let mut slots: Vec<Option<BoolFn>> = vec![None; l_vocab.world_count()];
        for (world, objection) in entries {
            if world.vocabulary() != l_vocab {
                return Err(Error::VocabularyMismatch(format!(
                    "world `{world}` is not over the domain vocabulary"
                )));
            }
            let f = o_vocab.compile(&objection)?;
            let slot = &mut slots[world.index()];
            if slot.is_some() {
                return Err(Error::DuplicateWorld(world.to_string()));
            }
            *slot = Some(f);
        }
        let table = slots
            .into_iter()
            .enumerate()
            .map(|(k, f)| f.ok_or_else(|| Error::MissingWorld(l_vocab.world(k).to_string())))
            .collect::<Result<Vec<_>>>()?;
        Self::from_tables(l_vocab.clone(), o_vocab.clone(), table)
    }

    /// Builds a state from compiled objections indexed by world.
    pub fn from_tables(
        l_vocab: Vocabulary,
        o_vocab: Vocabulary,
        table: Vec<BoolFn>,
    ) -> Result<Self> {
        assert_eq!(table.len(), l_vocab.world_count());
        let conj = table
            .iter()
            .fold(BoolFn::tautology(o_vocab.len()), |acc, f| acc.and(f));
        if let Some(k) = conj.first_model() {
            return Err(Error::TautologyObjected {
                witness: o_vocab.world(k).to_string(),
            });
        }
        Ok(ObjectionState {
            l_vocab,
            o_vocab,
            table,
        })
    }

    pub fn domain_vocabulary(&self) -> &Vocabulary {
        &self.l_vocab
    }

    pub fn objection_vocabulary(&self) -> &Vocabulary {
        &self.o_vocab
    }

    /// Compiled objection of a single world.
    pub fn world_fn(&self, w: &World) -> &BoolFn {
        &self.table[w.index()]
    }

    /// Objection of a single world, in canonical form.
    pub fn world_objection(&self, w: &World) -> Sentence {
        to_canonical(self.world_fn(w), &self.o_vocab)
    }

    /// `(world, objection)` for every world in canonical order.
    pub fn worlds(&self) -> impl Iterator<Item = (World, Sentence)> + '_ {
        self.l_vocab.worlds().map(move |w| {
            let o = self.world_objection(&w);
            (w, o)
        })
    }

    pub(crate) fn fn_of_models(&self, models: &BoolFn) -> BoolFn {
        models
            .models()
            .fold(BoolFn::tautology(self.o_vocab.len()), |acc, k| {
                acc.and(&self.table[k])
            })
    }

    /// `Φ(a)` as a truth table over the objection vocabulary.
    pub fn objection_fn(&self, a: &Sentence) -> Result<BoolFn> {
        Ok(self.fn_of_models(&self.l_vocab.compile(a)?))
    }

    /// Compiles an objection-language sentence.
    pub fn compile_objection(&self, alpha: &Sentence) -> Result<BoolFn> {
        self.o_vocab.compile(alpha)
    }

    pub fn render(&self, f: &BoolFn) -> Sentence {
        to_canonical(f, &self.o_vocab)
    }

    /// `Φ(a)`, in canonical form.
    pub fn objection_of(&self, a: &Sentence) -> Result<Sentence> {
        Ok(self.render(&self.objection_fn(a)?))
    }

    /// `Φ(a) ≡ true`.
    pub fn rejects(&self, a: &Sentence) -> Result<bool> {
        Ok(self.objection_fn(a)?.is_tautology())
    }

    /// `Φ(¬a) ≡ true`.
    pub fn accepts(&self, a: &Sentence) -> Result<bool> {
        self.rejects(&a.clone().negate())
    }

    /// `alpha ⊨ Φ(a)`.
    pub fn objects_under(&self, a: &Sentence, alpha: &Sentence) -> Result<bool> {
        Ok(self
            .compile_objection(alpha)?
            .entails(&self.objection_fn(a)?))
    }

    /// `alpha ⊨ ¬Φ(a)`.
    pub fn admits_under(&self, a: &Sentence, alpha: &Sentence) -> Result<bool> {
        Ok(self
            .compile_objection(alpha)?
            .entails(&self.objection_fn(a)?.not()))
    }

    /// The state after observing `a`.
    ///
    /// Each world keeps objection `true` where `Φ(a ∧ w)` is tautologous
    /// (every world outside `a`, in particular) and otherwise becomes
    /// `Φ(a ∧ w) ∧ ¬Φ(a)`. Fails if `a` is rejected.
    pub fn conditionalize(&self, a: &Sentence) -> Result<ObjectionState> {
        let evidence = self.l_vocab.compile(a)?;
        let phi_a = self.fn_of_models(&evidence);
        if phi_a.is_tautology() {
            return Err(Error::RejectedEvidence(a.to_string()));
        }
        let tautology = BoolFn::tautology(self.o_vocab.len());
        let table = self
            .table
            .iter()
            .enumerate()
            .map(|(k, f)| {
                if evidence.get(k) && !f.is_tautology() {
                    f.and_not(&phi_a)
                } else {
                    tautology.clone()
                }
            })
            .collect();
        Ok(ObjectionState {
            l_vocab: self.l_vocab.clone(),
            o_vocab: self.o_vocab.clone(),
            table,
        })
    }

    /// `Υ(a, Φ) = ¬Φ(a) ∧ ¬Φ(¬a)` as a truth table.
    pub fn ignorance_fn(&self, a: &Sentence) -> Result<BoolFn> {
        let models = self.l_vocab.compile(a)?;
        let pos = self.fn_of_models(&models);
        let neg = self.fn_of_models(&models.not());
        Ok(pos.not().and_not(&neg))
    }

    /// The ignorance of the state about `a`, in canonical form.
    pub fn ignorance(&self, a: &Sentence) -> Result<Sentence> {
        Ok(self.render(&self.ignorance_fn(a)?))
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::logic::{equivalent, Language};

    pub(crate) fn p(text: &str) -> Sentence {
        text.parse().unwrap()
    }

    /// The bird/fly state: bird∧fly ↦ ¬normal, bird∧¬fly ↦ normal,
    /// ¬bird∧fly ↦ true, ¬bird∧¬fly ↦ false.
    pub(crate) fn birdfly() -> ObjectionState {
        let l = Vocabulary::new(Language::Domain, ["bird", "fly"]).unwrap();
        let o = Vocabulary::new(Language::Objection, ["normal"]).unwrap();
        let entries = ["!normal", "normal", "true", "false"];
        ObjectionState::from_world_table(&l, &o, l.worlds().zip(entries.iter().map(|e| p(e))))
            .unwrap()
    }

    pub(crate) fn assert_equiv(a: &Sentence, b: &str) {
        assert!(
            equivalent(a, &p(b)).unwrap(),
            "`{a}` is not equivalent to `{b}`"
        );
    }

    #[test]
    fn birdfly_objections() {
        let s = birdfly();
        assert_equiv(&s.objection_of(&p("fly")).unwrap(), "!normal");
        assert_equiv(&s.objection_of(&p("bird")).unwrap(), "false");
        assert_equiv(&s.objection_of(&p("!bird")).unwrap(), "false");
        assert_equiv(&s.objection_of(&p("!fly")).unwrap(), "false");
        assert_equiv(&s.objection_of(&p("true")).unwrap(), "false");
        assert_equiv(&s.objection_of(&p("false")).unwrap(), "true");
    }

    #[test]
    fn condition_one_is_checked_by_brute_force() {
        let l = Vocabulary::new(Language::Domain, ["a", "b"]).unwrap();
        let o = Vocabulary::new(Language::Objection, ["x", "y"]).unwrap();
        // conjunction of four `false` entries is unsatisfiable: a valid state
        assert!(
            ObjectionState::from_world_table(&l, &o, l.worlds().map(|w| (w, p("false")))).is_ok()
        );
        // x | y everywhere: the conjunction is satisfied first by x & y
        let err = ObjectionState::from_world_table(&l, &o, l.worlds().map(|w| (w, p("x | y"))))
            .unwrap_err();
        assert_eq!(
            err,
            Error::TautologyObjected {
                witness: "x & y".into()
            }
        );
    }

    #[test]
    fn one_false_entry_makes_a_state() {
        let l = Vocabulary::new(Language::Domain, ["a", "b"]).unwrap();
        let o = Vocabulary::new(Language::Objection, ["x", "y"]).unwrap();
        let entries = ["x", "x & !y", "false", "true"];
        assert!(ObjectionState::from_world_table(
            &l,
            &o,
            l.worlds().zip(entries.iter().map(|e| p(e)))
        )
        .is_ok());
    }

    #[test]
    fn table_shape_errors() {
        let l = Vocabulary::new(Language::Domain, ["a"]).unwrap();
        let o = Vocabulary::new(Language::Objection, ["x"]).unwrap();
        let w0 = l.world(0);
        assert_eq!(
            ObjectionState::from_world_table(&l, &o, [(w0.clone(), p("false"))]).unwrap_err(),
            Error::MissingWorld("!a".into())
        );
        assert_eq!(
            ObjectionState::from_world_table(&l, &o, [(w0.clone(), p("false")), (w0, p("x"))])
                .unwrap_err(),
            Error::DuplicateWorld("a".into())
        );
        let clash = Vocabulary::new(Language::Objection, ["a"]).unwrap();
        assert_eq!(
            ObjectionState::from_world_table(&l, &clash, l.worlds().map(|w| (w, p("false"))))
                .unwrap_err(),
            Error::OverlappingVocabularies("a".into())
        );
    }

    #[test]
    fn rejection_and_acceptance() {
        let s = birdfly();
        assert!(s.rejects(&p("!bird & fly")).unwrap());
        assert!(s.rejects(&p("false")).unwrap());
        assert!(!s.accepts(&p("bird")).unwrap());
        assert!(s.accepts(&p("!(!bird & fly)")).unwrap());
    }

    fn grass_implication_state() -> ObjectionState {
        // Φ(P3 ⊃ P5) = O4: the only P3⊃P5-violating world is P3∧¬P5, so
        // give the two P3⊃P5 worlds objections whose conjunction is O4.
        let l = Vocabulary::new(Language::Domain, ["P3", "P5"]).unwrap();
        let o = Vocabulary::new(Language::Objection, ["O4"]).unwrap();
        let entries = ["O4", "!O4", "O4", "true"];
        ObjectionState::from_world_table(&l, &o, l.worlds().zip(entries.iter().map(|e| p(e))))
            .unwrap()
    }

    #[test]
    fn objects_and_admits_under() {
        let s = grass_implication_state();
        let imp = p("P3 => P5");
        assert_equiv(&s.objection_of(&imp).unwrap(), "O4");
        assert!(s.objects_under(&imp, &p("O4")).unwrap());
        assert!(!s.objects_under(&imp, &p("!O4")).unwrap());
        assert!(s.admits_under(&imp, &p("!O4")).unwrap());
        assert!(s.objects_under(&imp, &p("false")).unwrap());
        assert!(s.admits_under(&imp, &p("false")).unwrap());
        let phi = s.objection_of(&imp).unwrap();
        assert!(s.objects_under(&imp, &phi).unwrap());
        let b = birdfly();
        // Φ(bird) = false, so bird is admitted under anything
        assert!(b.admits_under(&p("bird"), &p("true")).unwrap());
    }

    #[test]
    fn conditionalize_on_true_is_identity() {
        let s = birdfly();
        let c = s.conditionalize(&p("true")).unwrap();
        for text in ["bird", "fly", "bird | fly", "!bird & fly", "bird => fly"] {
            assert_eq!(
                c.objection_fn(&p(text)).unwrap(),
                s.objection_fn(&p(text)).unwrap()
            );
        }
    }

    #[test]
    fn conditionalize_on_bird() {
        // Φ_bird(fly) = Φ(bird ∧ fly) ∧ ¬Φ(bird) = ¬normal ∧ ¬false
        let c = birdfly().conditionalize(&p("bird")).unwrap();
        assert_equiv(&c.objection_of(&p("fly")).unwrap(), "!normal");
        assert_equiv(&c.objection_of(&p("!fly")).unwrap(), "normal");
        assert_equiv(&c.objection_of(&p("!bird")).unwrap(), "true");
        assert_equiv(&c.objection_of(&p("bird")).unwrap(), "false");
    }

    #[test]
    fn rejected_evidence_is_an_error() {
        assert_eq!(
            birdfly().conditionalize(&p("!bird & fly")).unwrap_err(),
            Error::RejectedEvidence("!bird & fly".into())
        );
    }

    #[test]
    fn ignorance_examples() {
        let s = birdfly();
        assert_equiv(&s.ignorance(&p("fly")).unwrap(), "normal");
        assert_equiv(&s.ignorance(&p("bird")).unwrap(), "true");
        // maximal ignorance: no objection either way
        let l = Vocabulary::new(Language::Domain, ["P1"]).unwrap();
        let o = Vocabulary::new(Language::Objection, ["O1"]).unwrap();
        let flat =
            ObjectionState::from_world_table(&l, &o, l.worlds().map(|w| (w, p("false")))).unwrap();
        assert_equiv(&flat.ignorance(&p("P1")).unwrap(), "true");
        // minimal ignorance: Φ(P1) ≡ ¬Φ(¬P1)
        let sharp =
            ObjectionState::from_world_table(&l, &o, l.worlds().zip([p("O1"), p("!O1")])).unwrap();
        assert_equiv(&sharp.ignorance(&p("P1")).unwrap(), "false");
    }
}
