use serde::Serialize;

use super::{CausalNetwork, ObjectionRow, OcnQuantification};
use crate::belief::ObjectionState;
use crate::error::{Error, Result};
use crate::logic::{simplify, BoolFn, Sentence, World};

/// The state of belief defined by a quantified network: each world's
/// objection is the disjunction of the table entries it selects, one per
/// node.
pub fn assemble_state(net: &CausalNetwork, q: &OcnQuantification) -> Result<ObjectionState> {
    let compiled = q.compile(net)?;
    let l = net.vocabulary();
    let o = q.objection_vocabulary();
    let table = l
        .worlds()
        .map(|w| {
            (0..net.len()).fold(BoolFn::contradiction(o.len()), |acc, i| {
                let inst = net.instantiation_in(i, &w).index();
                acc.or(compiled.entry(i, inst, w.value(i)))
            })
        })
        .collect();
    ObjectionState::from_tables(l.clone(), o.clone(), table)
}

/// Objection to `query`, after observing `evidence` if given.
pub fn query(
    net: &CausalNetwork,
    q: &OcnQuantification,
    query: &Sentence,
    evidence: Option<&Sentence>,
) -> Result<Sentence> {
    let state = assemble_state(net, q)?;
    match evidence {
        Some(e) => state.conditionalize(e)?.objection_of(query),
        None => state.objection_of(query),
    }
}

/// One disjunct of a world's objection.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainStep {
    pub node: String,
    /// Parent instantiation; `true` for roots.
    pub condition: Sentence,
    pub literal: Sentence,
    /// The table entry, as written.
    pub objection: Sentence,
}

/// The chain-rule decomposition of `world`'s objection, in declaration
/// order. The disjunction of the `objection` fields is the world's
/// objection in the assembled state.
pub fn explain(
    net: &CausalNetwork,
    q: &OcnQuantification,
    world: &World,
) -> Result<Vec<ChainStep>> {
    if world.vocabulary() != net.vocabulary() {
        return Err(Error::VocabularyMismatch(format!(
            "world `{world}` is not over the network's nodes"
        )));
    }
    (0..net.len())
        .map(|i| {
            let inst = net.instantiation_in(i, world);
            let row = q.row(&inst).ok_or_else(|| {
                Error::InvalidQuantification(format!("missing row for `{}`", net.node_name(i)))
            })?;
            Ok(ChainStep {
                node: net.node_name(i).to_string(),
                condition: inst.to_sentence(net),
                literal: Sentence::literal(net.node_name(i), world.value(i)),
                objection: row.get(world.value(i)).clone(),
            })
        })
        .collect()
}

/// Applies the elicitation remedy to every entry that breaks the product
/// rule's side condition: an entry `b` given `A` that is neither
/// tautologous nor inconsistent with `Φ(A)` becomes `b ∧ ¬Φ(A)`.
///
/// Nodes are processed in topological order. `Φ(A)` only depends on the
/// ancestors of the node, which are already repaired by the time it is
/// needed. Entries that already satisfy the condition are kept verbatim.
pub fn normalize_quantification(
    net: &CausalNetwork,
    q: &OcnQuantification,
) -> Result<OcnQuantification> {
    let report = super::validate_ocn(net, q);
    if let Some(issue) = report.errors().next() {
        return Err(Error::InvalidQuantification(issue.to_string()));
    }
    let o = q.objection_vocabulary();
    let mut out = q.clone();
    for &i in net.topological_order() {
        let state = assemble_state(net, &out)?;
        for inst in net.instantiations(i).collect::<Vec<_>>() {
            let phi_a = state.objection_fn(&inst.to_sentence(net))?;
            let row = out.row(&inst).expect("validated").clone();
            let fix = |b: &Sentence| -> Result<Sentence> {
                let f = o.compile(b)?;
                if f.is_tautology() || f.and(&phi_a).is_contradiction() {
                    Ok(b.clone())
                } else {
                    Ok(b.clone().and(simplify(&phi_a, o).negate()))
                }
            };
            let fixed = ObjectionRow::new(fix(&row.positive)?, fix(&row.negative)?);
            out.set(&inst, fixed);
        }
    }
    Ok(out)
}
