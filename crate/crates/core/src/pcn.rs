//! The probabilistic mirror of a network: the same DAG quantified with
//! conditional probabilities. Queries enumerate the joint distribution.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::logic::{Sentence, Vocabulary, World};
use crate::network::{self, CausalNetwork, OcnQuantification, ParentInstantiation};

/// Absolute tolerance for every probability comparison.
pub const TOLERANCE: f64 = 1e-9;

/// `P(node | A)` and, when given explicitly, `P(¬node | A)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProbRow {
    pub positive: f64,
    pub negative: Option<f64>,
}

impl ProbRow {
    pub fn new(positive: f64) -> Self {
        ProbRow {
            positive,
            negative: None,
        }
    }

    pub fn with_negative(positive: f64, negative: f64) -> Self {
        ProbRow {
            positive,
            negative: Some(negative),
        }
    }

    /// Stored complement, or `1 - positive`.
    pub fn negative(&self) -> f64 {
        self.negative.unwrap_or(1.0 - self.positive)
    }

    pub fn get(&self, sign: bool) -> f64 {
        if sign {
            self.positive
        } else {
            self.negative()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PcnQuantification {
    rows: Vec<Vec<Option<ProbRow>>>,
}

impl PcnQuantification {
    pub fn new(net: &CausalNetwork) -> Self {
        PcnQuantification {
            rows: (0..net.len())
                .map(|i| vec![None; 1 << net.parents(i).len()])
                .collect(),
        }
    }

    pub fn set(&mut self, inst: &ParentInstantiation, row: ProbRow) -> Option<ProbRow> {
        self.rows[inst.node][inst.index()].replace(row)
    }

    pub fn row(&self, inst: &ParentInstantiation) -> Option<&ProbRow> {
        self.rows[inst.node][inst.index()].as_ref()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PcnIssue {
    MissingRow {
        node: String,
        condition: Sentence,
    },
    OutOfRange {
        node: String,
        condition: Sentence,
        literal: Sentence,
        value: f64,
    },
    ComplementSum {
        node: String,
        condition: Sentence,
        positive: f64,
        negative: f64,
    },
}

impl fmt::Display for PcnIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PcnIssue::MissingRow { node, condition } => {
                write!(f, "missing probability row: {node} | {condition}")
            }
            PcnIssue::OutOfRange {
                node,
                condition,
                literal,
                value,
            } => write!(
                f,
                "probability out of range: P({literal} | {condition}) = {value} [{node}]"
            ),
            PcnIssue::ComplementSum {
                node,
                condition,
                positive,
                negative,
            } => write!(
                f,
                "complement does not sum to 1: {node} | {condition}: {positive} + {negative}"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PcnReport {
    pub checked_rows: usize,
    pub issues: Vec<PcnIssue>,
}

impl PcnReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

/// Checks coverage, `[0, 1]` range and `P(P|A) + P(¬P|A) = 1`.
pub fn validate_pcn(net: &CausalNetwork, q: &PcnQuantification) -> PcnReport {
    let mut issues = Vec::new();
    let mut checked_rows = 0;
    for i in 0..net.len() {
        let node = net.node_name(i).to_string();
        for inst in net.instantiations(i) {
            let condition = inst.to_sentence(net);
            let Some(row) = q.row(&inst) else {
                issues.push(PcnIssue::MissingRow {
                    node: node.clone(),
                    condition,
                });
                continue;
            };
            checked_rows += 1;
            for sign in [true, false] {
                let value = row.get(sign);
                if !(-TOLERANCE..=1.0 + TOLERANCE).contains(&value) || value.is_nan() {
                    issues.push(PcnIssue::OutOfRange {
                        node: node.clone(),
                        condition: condition.clone(),
                        literal: Sentence::literal(&node, sign),
                        value,
                    });
                }
            }
            if (row.positive + row.negative() - 1.0).abs() > TOLERANCE {
                issues.push(PcnIssue::ComplementSum {
                    node: node.clone(),
                    condition,
                    positive: row.positive,
                    negative: row.negative(),
                });
            }
        }
    }
    PcnReport {
        checked_rows,
        issues,
    }
}

/// Probability of every world over the network's nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct JointDistribution {
    vocab: Vocabulary,
    probs: Vec<f64>,
}

impl JointDistribution {
    pub fn vocabulary(&self) -> &Vocabulary {
        &self.vocab
    }

    pub fn probability(&self, w: &World) -> f64 {
        self.probs[w.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (World, f64)> + '_ {
        self.vocab.worlds().zip(self.probs.iter().copied())
    }

    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }

    /// Sum over the models of `s`.
    pub fn probability_of(&self, s: &Sentence) -> Result<f64> {
        Ok(self.vocab.compile(s)?.models().map(|k| self.probs[k]).sum())
    }

    /// `P(query | evidence)`, or `P(query)` without evidence.
    pub fn conditional(&self, query: &Sentence, evidence: Option<&Sentence>) -> Result<f64> {
        let Some(e) = evidence else {
            return self.probability_of(query);
        };
        let pe = self.probability_of(e)?;
        if pe <= TOLERANCE {
            return Err(Error::ZeroProbabilityEvidence(e.to_string()));
        }
        Ok(self.probability_of(&e.clone().and(query.clone()))? / pe)
    }
}

fn require_valid(net: &CausalNetwork, q: &PcnQuantification) -> Result<()> {
    match validate_pcn(net, q).issues.first() {
        Some(issue) => Err(Error::InvalidQuantification(issue.to_string())),
        None => Ok(()),
    }
}

/// One factor of a world's probability.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Factor {
    pub node: String,
    pub condition: Sentence,
    pub literal: Sentence,
    pub probability: f64,
}

/// The factors whose product is `P(world)`, in declaration order.
pub fn factor_trace(
    net: &CausalNetwork,
    q: &PcnQuantification,
    world: &World,
) -> Result<Vec<Factor>> {
    require_valid(net, q)?;
    if world.vocabulary() != net.vocabulary() {
        return Err(Error::VocabularyMismatch(format!(
            "world `{world}` is not over the network's nodes"
        )));
    }
    Ok((0..net.len())
        .map(|i| {
            let inst = net.instantiation_in(i, world);
            let row = q.row(&inst).expect("validated");
            Factor {
                node: net.node_name(i).to_string(),
                condition: inst.to_sentence(net),
                literal: Sentence::literal(net.node_name(i), world.value(i)),
                probability: row.get(world.value(i)),
            }
        })
        .collect())
}

/// `P(w)` as the product over nodes of the matching table entries.
pub fn assemble_joint(net: &CausalNetwork, q: &PcnQuantification) -> Result<JointDistribution> {
    require_valid(net, q)?;
    let vocab = net.vocabulary().clone();
    let probs = vocab
        .worlds()
        .map(|w| {
            (0..net.len())
                .map(|i| {
                    let inst = net.instantiation_in(i, &w);
                    q.row(&inst).expect("validated").get(w.value(i))
                })
                .product()
        })
        .collect();
    Ok(JointDistribution { vocab, probs })
}

pub fn prob_query(
    net: &CausalNetwork,
    q: &PcnQuantification,
    query: &Sentence,
    evidence: Option<&Sentence>,
) -> Result<f64> {
    assemble_joint(net, q)?.conditional(query, evidence)
}

/// The same question put to both quantifications.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Comparison {
    pub query: Sentence,
    pub evidence: Option<Sentence>,
    /// Canonical form.
    pub objection: Sentence,
    pub probability: f64,
    /// Objection is tautologous.
    pub rejected: bool,
    /// Objection to the negated query is tautologous.
    pub accepted: bool,
    /// `rejected` iff probability 0, and `accepted` iff probability 1.
    /// Reported, not required.
    pub extremes_agree: bool,
}

pub fn compare(
    net: &CausalNetwork,
    ocn: &OcnQuantification,
    pcn: &PcnQuantification,
    query: &Sentence,
    evidence: Option<&Sentence>,
) -> Result<Comparison> {
    let state = network::assemble_state(net, ocn)?;
    let state = match evidence {
        Some(e) => state.conditionalize(e)?,
        None => state,
    };
    let objection = state.objection_of(query)?;
    let rejected = state.rejects(query)?;
    let accepted = state.accepts(query)?;
    let probability = prob_query(net, pcn, query, evidence)?;
    let zero = probability.abs() <= TOLERANCE;
    let one = (probability - 1.0).abs() <= TOLERANCE;
    Ok(Comparison {
        query: query.clone(),
        evidence: evidence.cloned(),
        objection,
        probability,
        rejected,
        accepted,
        extremes_agree: rejected == zero && accepted == one,
    })
}
