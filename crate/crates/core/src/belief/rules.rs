use crate::error::{Error, Result};
use crate::logic::{Sentence, Vocabulary};

fn common_vocabulary(a: &Sentence, b: &Sentence) -> Result<Vocabulary> {
    let mut names = a.atoms();
    names.extend(b.atoms());
    Vocabulary::untagged(names)
}

/// Product rule: the objection to `A ∧ B` from the objection to `A` and
/// the conditional objection to `B` given `A`.
///
/// Disjunction plays the part multiplication plays for probabilities. The
/// rule needs `phi_a` not tautologous, and `phi_a_b` either tautologous or
/// inconsistent with `phi_a`; anything else is an assessment that
/// conditionalization could never have produced.
pub fn product(phi_a: &Sentence, phi_a_b: &Sentence) -> Result<Sentence> {
    let v = common_vocabulary(phi_a, phi_a_b)?;
    let a = v.compile(phi_a)?;
    let b = v.compile(phi_a_b)?;
    if a.is_tautology() {
        return Err(Error::RejectedCondition(phi_a.to_string()));
    }
    if !b.is_tautology() {
        if let Some(k) = a.and(&b).first_model() {
            return Err(Error::ContradictoryAssessment {
                conditional: phi_a_b.to_string(),
                condition: phi_a.to_string(),
                witness: v.world(k).to_string(),
            });
        }
    }
    Ok(phi_a_b.clone().or(phi_a.clone()))
}

/// Reads an elicited conditional objection `b` as `b ∧ ¬phi_a`, which
/// always satisfies [`product`]'s side condition.
///
/// A tautologous `b` is returned unchanged.
pub fn normalize_conditional(b: &Sentence, phi_a: &Sentence) -> Result<Sentence> {
    let v = common_vocabulary(b, phi_a)?;
    if v.compile(b)?.is_tautology() {
        return Ok(b.clone());
    }
    Ok(b.clone().and(phi_a.clone().negate()))
}
