//! Irrelevance check: once a node's parents are known, information about
//! its other non-descendants must not change the conditional objection to
//! the node, both computed by conditionalizing the assembled state.

use serde::Serialize;

use super::{assemble_state, CausalNetwork, OcnQuantification};
use crate::belief::ObjectionState;
use crate::error::Result;
use crate::logic::{to_canonical, BoolFn, Sentence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MarkovStatus {
    Verified,
    Violated,
    /// One of the conditioning sentences is rejected, so conditionalization
    /// is undefined.
    Vacuous,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MarkovEntry {
    pub node: String,
    pub literal: Sentence,
    pub parents: Sentence,
    /// Instantiation of the non-descendants outside the parent set.
    pub others: Sentence,
    pub status: MarkovStatus,
    /// Objection to `literal` given `parents`, recorded for violations.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub given_parents: Option<Sentence>,
    /// Objection to `literal` given `parents ∧ others`, recorded for violations.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub given_all: Option<Sentence>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MarkovReport {
    pub entries: Vec<MarkovEntry>,
}

impl MarkovReport {
    pub fn count(&self, status: MarkovStatus) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn violations(&self) -> impl Iterator<Item = &MarkovEntry> {
        self.entries
            .iter()
            .filter(|e| e.status == MarkovStatus::Violated)
    }

    pub fn is_clean(&self) -> bool {
        self.count(MarkovStatus::Violated) == 0
    }
}

/// Conditionalization on compiled model sets: `None` when the evidence is
/// rejected.
fn conditional(state: &ObjectionState, evidence: &BoolFn, target: &BoolFn) -> Option<BoolFn> {
    let phi_e = state.fn_of_models(evidence);
    if phi_e.is_tautology() {
        return None;
    }
    let joint = state.fn_of_models(&evidence.and(target));
    Some(if joint.is_tautology() {
        joint
    } else {
        joint.and_not(&phi_e)
    })
}

/// Checks every node, sign, parent instantiation and instantiation of the
/// remaining non-descendants. Entries come out in declaration order of
/// nodes, positive sign first, then canonical instantiation order.
pub fn markov_check(net: &CausalNetwork, q: &OcnQuantification) -> Result<MarkovReport> {
    let state = assemble_state(net, q)?;
    let l = net.vocabulary();
    let o = q.objection_vocabulary();
    let mut entries = Vec::new();
    for i in 0..net.len() {
        let others = net.others(i);
        for sign in [true, false] {
            let literal = Sentence::literal(net.node_name(i), sign);
            let target = l.compile(&literal)?;
            for inst in net.instantiations(i) {
                let d = inst.to_sentence(net);
                let d_models = l.compile(&d)?;
                let lhs = conditional(&state, &d_models, &target);
                let m = others.len();
                for k in 0..1usize << m {
                    let signs: Vec<bool> = (0..m).map(|j| (k >> (m - 1 - j)) & 1 == 0).collect();
                    let rest = net.conjunction(&others, &signs);
                    let rhs = conditional(&state, &d_models.and(&l.compile(&rest)?), &target);
                    let (status, given_parents, given_all) = match (&lhs, rhs) {
                        (Some(a), Some(b)) if *a == b => (MarkovStatus::Verified, None, None),
                        (Some(a), Some(b)) => (
                            MarkovStatus::Violated,
                            Some(to_canonical(a, o)),
                            Some(to_canonical(&b, o)),
                        ),
                        _ => (MarkovStatus::Vacuous, None, None),
                    };
                    entries.push(MarkovEntry {
                        node: net.node_name(i).to_string(),
                        literal: literal.clone(),
                        parents: d.clone(),
                        others: rest,
                        status,
                        given_parents,
                        given_all,
                    });
                }
            }
        }
    }
    Ok(MarkovReport { entries })
}
