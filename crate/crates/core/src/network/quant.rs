use std::fmt;

use serde::Serialize;

use super::{CausalNetwork, ParentInstantiation};
use crate::belief::check_disjoint;
use crate::error::{Error, Result};
use crate::logic::{BoolFn, Sentence, Vocabulary};

/// Conditional objections to a node and to its negation under one parent
/// instantiation (priors for roots).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ObjectionRow {
    pub positive: Sentence,
    pub negative: Sentence,
}

impl ObjectionRow {
    pub fn new(positive: Sentence, negative: Sentence) -> Self {
        ObjectionRow { positive, negative }
    }

    pub fn get(&self, sign: bool) -> &Sentence {
        if sign {
            &self.positive
        } else {
            &self.negative
        }
    }
}

/// Objection tables for every node of a network.
#[derive(Debug, Clone, PartialEq)]
pub struct OcnQuantification {
    o_vocab: Vocabulary,
    rows: Vec<Vec<Option<ObjectionRow>>>,
}

impl OcnQuantification {
    /// An empty quantification of `net` over the objection vocabulary.
    pub fn new(net: &CausalNetwork, o_vocab: Vocabulary) -> Result<Self> {
        check_disjoint(net.vocabulary(), &o_vocab)?;
        let rows = (0..net.len())
            .map(|i| vec![None; 1 << net.parents(i).len()])
            .collect();
        Ok(OcnQuantification { o_vocab, rows })
    }

    pub fn objection_vocabulary(&self) -> &Vocabulary {
        &self.o_vocab
    }

    /// Sets a row, returning the one it replaces.
    pub fn set(&mut self, inst: &ParentInstantiation, row: ObjectionRow) -> Option<ObjectionRow> {
        self.rows[inst.node][inst.index()].replace(row)
    }

    pub fn row(&self, inst: &ParentInstantiation) -> Option<&ObjectionRow> {
        self.rows[inst.node][inst.index()].as_ref()
    }

    /// Compiles every entry; fails on the first missing row or bad entry.
    pub(crate) fn compile(&self, net: &CausalNetwork) -> Result<Compiled> {
        let mut entries = Vec::with_capacity(net.len());
        for i in 0..net.len() {
            let mut per_node = Vec::with_capacity(self.rows[i].len());
            for inst in net.instantiations(i) {
                let row = self.row(&inst).ok_or_else(|| {
                    Error::InvalidQuantification(format!(
                        "no objections for {}",
                        describe(net, &inst)
                    ))
                })?;
                per_node.push([
                    self.o_vocab.compile(&row.positive)?,
                    self.o_vocab.compile(&row.negative)?,
                ]);
            }
            entries.push(per_node);
        }
        Ok(Compiled { entries })
    }
}

fn describe(net: &CausalNetwork, inst: &ParentInstantiation) -> String {
    let node = net.node_name(inst.node);
    if inst.signs.is_empty() {
        format!("`{node}`")
    } else {
        format!("`{node}` given `{}`", inst.to_sentence(net))
    }
}

pub(crate) struct Compiled {
    /// `[node][instantiation][0 = positive, 1 = negative]`
    entries: Vec<Vec<[BoolFn; 2]>>,
}

impl Compiled {
    pub(crate) fn entry(&self, node: usize, inst: usize, sign: bool) -> &BoolFn {
        &self.entries[node][inst][usize::from(!sign)]
    }
}

/// A problem found by [`validate_ocn`].
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OcnIssue {
    MissingRow {
        node: String,
        condition: Sentence,
    },
    InvalidEntry {
        node: String,
        condition: Sentence,
        message: String,
    },
    /// The two objections of a row can hold together.
    Inconsistent {
        node: String,
        condition: Sentence,
        positive: Sentence,
        negative: Sentence,
        witness: String,
    },
    /// The assembled state objects to the tautology.
    TautologyObjected {
        witness: String,
    },
    /// Warning: a non-tautologous entry is consistent with the objection to
    /// its own condition, so the product rule does not apply to it.
    ContradictoryAssessment {
        node: String,
        condition: Sentence,
        literal: Sentence,
        entry: Sentence,
        condition_objection: Sentence,
        witness: String,
    },
}

impl OcnIssue {
    pub fn is_warning(&self) -> bool {
        matches!(self, OcnIssue::ContradictoryAssessment { .. })
    }
}

impl fmt::Display for OcnIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OcnIssue::MissingRow { node, condition } => {
                write!(f, "missing row: {node} | {condition}")
            }
            OcnIssue::InvalidEntry {
                node,
                condition,
                message,
            } => write!(f, "invalid entry: {node} | {condition}: {message}"),
            OcnIssue::Inconsistent {
                node,
                condition,
                positive,
                negative,
                witness,
            } => write!(
                f,
                "inconsistent row: {node} | {condition}: ({positive}) & ({negative}) is satisfied by {witness}"
            ),
            OcnIssue::TautologyObjected { witness } => {
                write!(f, "assembled state objects to true (satisfied by {witness})")
            }
            OcnIssue::ContradictoryAssessment {
                node,
                condition,
                literal,
                entry,
                condition_objection,
                witness,
            } => write!(
                f,
                "warning: objection `{entry}` to {literal} given {condition} is consistent with the condition's objection `{condition_objection}` (witness {witness}) [{node}]"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OcnReport {
    /// Rows whose pairwise consistency was checked.
    pub checked_rows: usize,
    pub issues: Vec<OcnIssue>,
}

impl OcnReport {
    /// No errors; warnings allowed.
    pub fn is_valid(&self) -> bool {
        self.issues.iter().all(OcnIssue::is_warning)
    }

    pub fn errors(&self) -> impl Iterator<Item = &OcnIssue> {
        self.issues.iter().filter(|i| !i.is_warning())
    }

    pub fn warnings(&self) -> impl Iterator<Item = &OcnIssue> {
        self.issues.iter().filter(|i| i.is_warning())
    }
}

/// Checks table coverage, the pairwise consistency `Φ_A(P) ∧ Φ_A(¬P) ≡ false`
/// of every row, and the assembled state. When those pass, also warns about
/// entries that violate the product rule's side condition.
pub fn validate_ocn(net: &CausalNetwork, q: &OcnQuantification) -> OcnReport {
    let o = &q.o_vocab;
    let mut issues = Vec::new();
    let mut checked_rows = 0;
    for i in 0..net.len() {
        let node = net.node_name(i).to_string();
        for inst in net.instantiations(i) {
            let condition = inst.to_sentence(net);
            let Some(row) = q.row(&inst) else {
                issues.push(OcnIssue::MissingRow {
                    node: node.clone(),
                    condition,
                });
                continue;
            };
            let compiled = o
                .compile(&row.positive)
                .and_then(|p| Ok((p, o.compile(&row.negative)?)));
            let (pos, neg) = match compiled {
                Ok(pair) => pair,
                Err(e) => {
                    issues.push(OcnIssue::InvalidEntry {
                        node: node.clone(),
                        condition,
                        message: e.to_string(),
                    });
                    continue;
                }
            };
            checked_rows += 1;
            if let Some(k) = pos.and(&neg).first_model() {
                issues.push(OcnIssue::Inconsistent {
                    node: node.clone(),
                    condition,
                    positive: row.positive.clone(),
                    negative: row.negative.clone(),
                    witness: o.world(k).to_string(),
                });
            }
        }
    }
    if !issues.is_empty() {
        return OcnReport {
            checked_rows,
            issues,
        };
    }
    let state = match super::assemble_state(net, q) {
        Ok(s) => s,
        Err(Error::TautologyObjected { witness }) => {
            issues.push(OcnIssue::TautologyObjected { witness });
            return OcnReport {
                checked_rows,
                issues,
            };
        }
        Err(e) => unreachable!("validated quantification failed to assemble: {e}"),
    };
    for i in 0..net.len() {
        for inst in net.instantiations(i) {
            let condition = inst.to_sentence(net);
            let phi_a = state
                .objection_fn(&condition)
                .expect("condition is over the network vocabulary");
            let row = q.row(&inst).expect("rows checked above");
            for sign in [true, false] {
                let entry = row.get(sign);
                let b = o.compile(entry).expect("entries compiled above");
                if b.is_tautology() {
                    continue;
                }
                if let Some(k) = b.and(&phi_a).first_model() {
                    issues.push(OcnIssue::ContradictoryAssessment {
                        node: net.node_name(i).to_string(),
                        condition: condition.clone(),
                        literal: Sentence::literal(net.node_name(i), sign),
                        entry: entry.clone(),
                        condition_objection: crate::logic::simplify(&phi_a, o),
                        witness: o.world(k).to_string(),
                    });
                }
            }
        }
    }
    OcnReport {
        checked_rows,
        issues,
    }
}
