//! Comparative notions: objectionability, belief and ignorance.

use serde::Serialize;

use super::ObjectionState;
use crate::error::Result;
use crate::logic::{BoolFn, Sentence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Self {
        if b {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }
}

/// One entailment test `premise ⊨ conclusion` between objections.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntailmentCheck {
    pub premise: Sentence,
    pub conclusion: Sentence,
    pub holds: bool,
}

/// Outcome of an ordering query together with the checks it rests on.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderingVerdict {
    pub verdict: Verdict,
    pub checks: Vec<EntailmentCheck>,
}

impl OrderingVerdict {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    fn from_checks(checks: Vec<EntailmentCheck>) -> Self {
        OrderingVerdict {
            verdict: checks.iter().all(|c| c.holds).into(),
            checks,
        }
    }
}

impl ObjectionState {
    fn check(&self, premise: &BoolFn, conclusion: &BoolFn) -> EntailmentCheck {
        EntailmentCheck {
            premise: self.render(premise),
            conclusion: self.render(conclusion),
            holds: premise.entails(conclusion),
        }
    }

    /// `a` is no more objectionable than `b`: `Φ(a) ⊨ Φ(b)`.
    pub fn no_more_objectionable(&self, a: &Sentence, b: &Sentence) -> Result<OrderingVerdict> {
        let (fa, fb) = (self.objection_fn(a)?, self.objection_fn(b)?);
        Ok(OrderingVerdict::from_checks(vec![self.check(&fa, &fb)]))
    }

    /// `a` is no more believed than `b`: `b` is no more objectionable than
    /// `a`, and `¬a` is no more objectionable than `¬b`. Neither half
    /// implies the other.
    pub fn no_more_believed(&self, a: &Sentence, b: &Sentence) -> Result<OrderingVerdict> {
        let (fa, fb) = (self.objection_fn(a)?, self.objection_fn(b)?);
        let na = self.objection_fn(&a.clone().negate())?;
        let nb = self.objection_fn(&b.clone().negate())?;
        Ok(OrderingVerdict::from_checks(vec![
            self.check(&fb, &fa),
            self.check(&na, &nb),
        ]))
    }

    /// `Υ(a) ⊨ Υ(b)`.
    pub fn no_more_ignorant(&self, a: &Sentence, b: &Sentence) -> Result<OrderingVerdict> {
        let (ia, ib) = (self.ignorance_fn(a)?, self.ignorance_fn(b)?);
        Ok(OrderingVerdict::from_checks(vec![self.check(&ia, &ib)]))
    }
}

#[cfg(test)]
mod tests {
    use crate::belief::tests::{birdfly, p};

    #[test]
    fn objectionability_on_birdfly() {
        let s = birdfly();
        assert!(s
            .no_more_objectionable(&p("!bird"), &p("!fly"))
            .unwrap()
            .holds());
        assert!(s
            .no_more_objectionable(&p("bird"), &p("fly"))
            .unwrap()
            .holds());
        let rev = s.no_more_objectionable(&p("fly"), &p("bird")).unwrap();
        assert!(!rev.holds());
        assert_eq!(rev.checks[0].premise.to_string(), "!normal");
        assert_eq!(rev.checks[0].conclusion.to_string(), "false");
        assert!(s
            .no_more_objectionable(&p("fly"), &p("fly"))
            .unwrap()
            .holds());
    }

    #[test]
    fn belief_conditions_are_not_redundant() {
        let s = birdfly();
        let v = s.no_more_believed(&p("fly"), &p("bird")).unwrap();
        assert!(v.holds());
        assert_eq!(v.checks.len(), 2);
        let v = s.no_more_believed(&p("bird"), &p("fly")).unwrap();
        assert!(!v.holds());
        // first half fails (¬normal ⊭ false), second half holds
        assert!(!v.checks[0].holds);
        assert!(v.checks[1].holds);
        assert!(s.no_more_believed(&p("bird"), &p("bird")).unwrap().holds());
    }

    #[test]
    fn ignorance_ordering() {
        let s = birdfly();
        // Υ(fly) = normal ⊨ Υ(bird) = true
        assert!(s.no_more_ignorant(&p("fly"), &p("bird")).unwrap().holds());
        assert!(!s.no_more_ignorant(&p("bird"), &p("fly")).unwrap().holds());
        assert!(s.no_more_ignorant(&p("fly"), &p("fly")).unwrap().holds());
        // Φ(bird ∧ fly) = ¬normal and Φ(¬(bird ∧ fly)) = false, so Υ = normal
        assert!(s
            .no_more_ignorant(&p("bird & fly"), &p("bird"))
            .unwrap()
            .holds());
    }

    #[test]
    fn minimal_ignorance_is_least() {
        // Φ(¬bird ∧ fly) = true, so Υ = false and it entails everything
        let s = birdfly();
        for b in ["bird", "fly", "!fly", "bird | fly"] {
            assert!(s
                .no_more_ignorant(&p("!bird & fly"), &p(b))
                .unwrap()
                .holds());
        }
    }
}
