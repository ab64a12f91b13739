//! Causal networks quantified with objections.
//!
//! The unquantified network is a DAG over the domain atoms. Each node gets
//! a pair of conditional objections (to the node and to its negation) for
//! every instantiation of its parents. The state of belief the network
//! defines gives each complete world the disjunction, over all nodes, of
//! the entry matching that world.

mod assemble;
mod markov;
mod quant;

pub use assemble::{assemble_state, explain, normalize_quantification, query, ChainStep};
pub use markov::{markov_check, MarkovEntry, MarkovReport, MarkovStatus};
pub use quant::{validate_ocn, ObjectionRow, OcnIssue, OcnQuantification, OcnReport};

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::logic::{Language, Sentence, Vocabulary, World};

/// Most nodes a network may have.
pub const MAX_NODES: usize = 16;

/// An unquantified causal network. Node order is declaration order and
/// fixes the canonical world enumeration.
#[derive(Debug, Clone, PartialEq)]
pub struct CausalNetwork {
    name: String,
    vocab: Vocabulary,
    parents: Vec<Vec<usize>>,
    topo: Vec<usize>,
}

impl CausalNetwork {
    /// `nodes` lists `(name, parent names)` in declaration order.
    pub fn new<N, P, S>(name: impl Into<String>, nodes: N) -> Result<Self>
    where
        N: IntoIterator<Item = (S, P)>,
        P: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let nodes: Vec<(String, Vec<String>)> = nodes
            .into_iter()
            .map(|(n, ps)| (n.into(), ps.into_iter().map(Into::into).collect()))
            .collect();
        if nodes.len() > MAX_NODES {
            return Err(Error::EnumerationLimit {
                atoms: nodes.len(),
                limit: MAX_NODES,
            });
        }
        let vocab = Vocabulary::new(Language::Domain, nodes.iter().map(|(n, _)| n.clone()))?;
        let mut parents = Vec::with_capacity(nodes.len());
        for (node, ps) in &nodes {
            let mut idx = Vec::with_capacity(ps.len());
            for p in ps {
                let j = vocab.position(p).ok_or_else(|| {
                    Error::Structure(format!("parent `{p}` of `{node}` is not a declared node"))
                })?;
                if p == node {
                    return Err(Error::Structure(format!("`{node}` is its own parent")));
                }
                if idx.contains(&j) {
                    return Err(Error::Structure(format!(
                        "`{p}` listed twice as a parent of `{node}`"
                    )));
                }
                idx.push(j);
            }
            parents.push(idx);
        }
        let topo = topological_order(&parents).map_err(|i| {
            Error::Structure(format!("the graph has a cycle through `{}`", vocab.name(i)))
        })?;
        Ok(CausalNetwork {
            name: name.into(),
            vocab,
            parents,
            topo,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vocabulary(&self) -> &Vocabulary {
        &self.vocab
    }

    pub fn len(&self) -> usize {
        self.parents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parents.is_empty()
    }

    pub fn node_name(&self, i: usize) -> &str {
        self.vocab.name(i)
    }

    pub fn node_index(&self, name: &str) -> Option<usize> {
        self.vocab.position(name)
    }

    pub fn parents(&self, i: usize) -> &[usize] {
        &self.parents[i]
    }

    pub fn children(&self, i: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&c| self.parents[c].contains(&i))
            .collect()
    }

    /// Nodes ordered so that parents come before children; ties keep
    /// declaration order.
    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    /// Strict descendants of `i`, in declaration order.
    pub fn descendants(&self, i: usize) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        let mut stack = self.children(i);
        while let Some(n) = stack.pop() {
            if !seen[n] {
                seen[n] = true;
                stack.extend(self.children(n));
            }
        }
        (0..self.len()).filter(|&n| seen[n]).collect()
    }

    /// Non-descendants of `i` other than `i` and its parents, in declaration
    /// order.
    pub fn others(&self, i: usize) -> Vec<usize> {
        let desc = self.descendants(i);
        (0..self.len())
            .filter(|&n| n != i && !desc.contains(&n) && !self.parents[i].contains(&n))
            .collect()
    }

    /// All `2^parents` instantiations of `i`'s parents, in canonical order.
    pub fn instantiations(&self, i: usize) -> impl Iterator<Item = ParentInstantiation> + '_ {
        let m = self.parents[i].len();
        (0..1usize << m).map(move |k| ParentInstantiation {
            node: i,
            signs: (0..m).map(|j| (k >> (m - 1 - j)) & 1 == 0).collect(),
        })
    }

    /// The instantiation of `i`'s parents that holds in `world`.
    pub fn instantiation_in(&self, i: usize, world: &World) -> ParentInstantiation {
        ParentInstantiation {
            node: i,
            signs: self.parents[i].iter().map(|&p| world.value(p)).collect(),
        }
    }

    /// Reads a condition written as a conjunction of parent literals that
    /// mentions every parent exactly once (`true` for roots).
    pub fn instantiation_from_condition(
        &self,
        i: usize,
        condition: &Sentence,
    ) -> Result<ParentInstantiation> {
        let node = self.node_name(i);
        let lits = condition.as_literal_conjunction().ok_or_else(|| {
            Error::Structure(format!(
                "condition `{condition}` for `{node}` is not a conjunction of parent literals"
            ))
        })?;
        let mut signs: HashMap<&str, bool> = HashMap::new();
        for (name, sign) in &lits {
            if !self.parents[i].iter().any(|&p| self.node_name(p) == name) {
                return Err(Error::Structure(format!(
                    "`{name}` is not a parent of `{node}`"
                )));
            }
            if signs.insert(name, *sign).is_some() {
                return Err(Error::Structure(format!(
                    "parent `{name}` appears twice in a condition for `{node}`"
                )));
            }
        }
        let signs = self.parents[i]
            .iter()
            .map(|&p| {
                signs.get(self.node_name(p)).copied().ok_or_else(|| {
                    Error::Structure(format!(
                        "condition `{condition}` for `{node}` does not mention parent `{}`",
                        self.node_name(p)
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ParentInstantiation { node: i, signs })
    }

    /// Conjunction of literals for the given nodes and signs.
    pub fn conjunction(&self, nodes: &[usize], signs: &[bool]) -> Sentence {
        Sentence::conjunction(
            nodes
                .iter()
                .zip(signs)
                .map(|(&n, &s)| Sentence::literal(self.node_name(n), s)),
        )
    }
}

/// Kahn's algorithm, always taking the lowest-numbered ready node. On a
/// cycle returns some node on it.
fn topological_order(parents: &[Vec<usize>]) -> std::result::Result<Vec<usize>, usize> {
    let n = parents.len();
    let mut pending: Vec<usize> = parents.iter().map(Vec::len).collect();
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n).find(|&i| !done[i] && pending[i] == 0);
        let Some(i) = next else {
            return Err((0..n).find(|&i| !done[i]).unwrap());
        };
        done[i] = true;
        order.push(i);
        for (c, ps) in parents.iter().enumerate() {
            if ps.contains(&i) {
                pending[c] -= 1;
            }
        }
    }
    Ok(order)
}

/// One signed conjunction over a node's parents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ParentInstantiation {
    pub node: usize,
    /// One sign per parent, in the node's parent order.
    pub signs: Vec<bool>,
}

impl ParentInstantiation {
    /// Position among the node's instantiations; all-positive is 0.
    pub fn index(&self) -> usize {
        let m = self.signs.len();
        self.signs
            .iter()
            .enumerate()
            .filter(|(_, s)| !**s)
            .fold(0, |acc, (j, _)| acc | 1 << (m - 1 - j))
    }

    pub fn to_sentence(&self, net: &CausalNetwork) -> Sentence {
        net.conjunction(net.parents(self.node), &self.signs)
    }
}
