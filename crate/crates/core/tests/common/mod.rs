//! Shared generators and a brute-force reference evaluator for integration
//! tests. The evaluator walks the syntax tree directly and never touches the
//! library's truth tables.

#![allow(dead_code)]

use std::collections::BTreeMap;

use ocn::logic::{Language, Vocabulary};
use ocn::network::{ObjectionRow, OcnQuantification};
use ocn::{CausalNetwork, ObjectionState, Sentence};
use proptest::prelude::*;
use proptest::sample::select;

pub type Assignment = BTreeMap<String, bool>;

pub fn eval(s: &Sentence, a: &Assignment) -> bool {
    match s {
        Sentence::Const(b) => *b,
        Sentence::Atom(n) => a[n.as_str()],
        Sentence::Not(x) => !eval(x, a),
        Sentence::And(x, y) => eval(x, a) && eval(y, a),
        Sentence::Or(x, y) => eval(x, a) || eval(y, a),
        Sentence::Implies(x, y) => !eval(x, a) || eval(y, a),
    }
}

/// Every assignment to `names`.
pub fn assignments(names: &[String]) -> Vec<Assignment> {
    (0..1u32 << names.len())
        .map(|bits| {
            names
                .iter()
                .enumerate()
                .map(|(i, n)| (n.clone(), bits >> i & 1 == 1))
                .collect()
        })
        .collect()
}

pub fn valid(s: &Sentence, names: &[String]) -> bool {
    assignments(names).iter().all(|a| eval(s, a))
}

pub fn unsatisfiable(s: &Sentence, names: &[String]) -> bool {
    assignments(names).iter().all(|a| !eval(s, a))
}

pub fn equiv(x: &Sentence, y: &Sentence, names: &[String]) -> bool {
    assignments(names).iter().all(|a| eval(x, a) == eval(y, a))
}

pub fn names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

pub fn sentence(names: Vec<String>) -> impl Strategy<Value = Sentence> {
    let leaf = prop_oneof![
        1 => any::<bool>().prop_map(Sentence::Const),
        6 => select(names).prop_map(Sentence::atom),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Sentence::negate),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.and(b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.or(b)),
            (inner.clone(), inner).prop_map(|(a, b)| a.implies(b)),
        ]
    })
}

/// The sentence true exactly on the assignments whose bit is set.
pub fn from_bits(bits: u32, names: &[String]) -> Sentence {
    Sentence::disjunction(
        assignments(names)
            .into_iter()
            .enumerate()
            .filter(|(k, _)| bits >> k & 1 == 1)
            .map(|(_, a)| {
                Sentence::conjunction(a.into_iter().map(|(n, v)| Sentence::literal(n, v)))
            }),
    )
}

/// A state over `l` and `o`, described world by world.
#[derive(Debug, Clone)]
pub struct RandomState {
    pub l: Vec<String>,
    pub o: Vec<String>,
    pub entries: Vec<(Assignment, Sentence)>,
}

impl RandomState {
    pub fn build(&self) -> ObjectionState {
        let lv = Vocabulary::new(Language::Domain, self.l.clone()).unwrap();
        let ov = Vocabulary::new(Language::Objection, self.o.clone()).unwrap();
        let table = lv.worlds().map(|w| {
            let values: Assignment = self.l.iter().cloned().zip(w.values()).collect();
            let entry = self
                .entries
                .iter()
                .find(|(a, _)| *a == values)
                .map(|(_, s)| s.clone())
                .unwrap();
            (w, entry)
        });
        ObjectionState::from_world_table(&lv, &ov, table).unwrap()
    }

    /// `Φ(a)` straight from the entries: the conjunction over models of `a`.
    pub fn objection(&self, a: &Sentence) -> Sentence {
        Sentence::conjunction(
            self.entries
                .iter()
                .filter(|(w, _)| eval(a, w))
                .map(|(_, s)| s.clone()),
        )
    }
}

/// States over at most `max_l` domain and `max_o` objection atoms. Entries
/// are arbitrary; one is then strengthened so that their conjunction is
/// unsatisfiable.
pub fn random_state(max_l: usize, max_o: usize) -> impl Strategy<Value = RandomState> {
    (1..=max_l, 1..=max_o).prop_flat_map(|(n, m)| {
        let l = names("a", n);
        let o = names("o", m);
        let cap = 1u64 << (1 << m);
        (proptest::collection::vec(0..cap, 1 << n), 0..(1usize << n)).prop_map(
            move |(bits, fix)| {
                let worlds = assignments(&l);
                let mut entries: Vec<(Assignment, Sentence)> = worlds
                    .into_iter()
                    .zip(bits)
                    .map(|(w, b)| (w, from_bits(b as u32, &o)))
                    .collect();
                let rest = Sentence::conjunction(
                    entries
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| *k != fix)
                        .map(|(_, (_, s))| s.clone()),
                );
                let e = &mut entries[fix].1;
                *e = e.clone().and(rest.negate());
                RandomState {
                    l: l.clone(),
                    o: o.clone(),
                    entries,
                }
            },
        )
    })
}

/// A quantified network together with its rows keyed by parent values, so
/// that tests can look entries up without the library's indexing.
#[derive(Debug, Clone)]
pub struct RandomNetwork {
    pub nodes: Vec<String>,
    pub parents: Vec<Vec<usize>>,
    pub o: Vec<String>,
    /// `rows[i][parent values] = (Φ(node | ·), Φ(!node | ·))`
    pub rows: Vec<BTreeMap<Vec<bool>, (Sentence, Sentence)>>,
}

impl RandomNetwork {
    pub fn build(&self) -> (CausalNetwork, OcnQuantification) {
        let layout: Vec<(String, Vec<String>)> = self
            .nodes
            .iter()
            .zip(&self.parents)
            .map(|(n, ps)| {
                (
                    n.clone(),
                    ps.iter().map(|&p| self.nodes[p].clone()).collect(),
                )
            })
            .collect();
        let net = CausalNetwork::new("random", layout).unwrap();
        let ov = Vocabulary::new(Language::Objection, self.o.clone()).unwrap();
        let mut q = OcnQuantification::new(&net, ov).unwrap();
        for i in 0..net.len() {
            for inst in net.instantiations(i).collect::<Vec<_>>() {
                let (p, n) = self.rows[i][&inst.signs].clone();
                q.set(&inst, ObjectionRow::new(p, n));
            }
        }
        (net, q)
    }

    /// The objection of one world: the disjunction of the entries it selects.
    pub fn world_objection(&self, w: &Assignment) -> Sentence {
        Sentence::disjunction((0..self.nodes.len()).map(|i| {
            let key: Vec<bool> = self.parents[i].iter().map(|&p| w[&self.nodes[p]]).collect();
            let (pos, neg) = &self.rows[i][&key];
            if w[&self.nodes[i]] {
                pos.clone()
            } else {
                neg.clone()
            }
        }))
    }

    pub fn objection(&self, a: &Sentence) -> Sentence {
        Sentence::conjunction(
            assignments(&self.nodes)
                .iter()
                .filter(|w| eval(a, w))
                .map(|w| self.world_objection(w)),
        )
    }
}

/// Networks with at most `max_nodes` nodes (at most three parents each) and
/// `max_o` objection atoms. Every row pairs a random `p` with `r & !p`.
pub fn random_network(max_nodes: usize, max_o: usize) -> impl Strategy<Value = RandomNetwork> {
    (1..=max_nodes, 1..=max_o).prop_flat_map(|(n, m)| {
        let o = names("o", m);
        let row = (sentence(o.clone()), sentence(o.clone()))
            .prop_map(|(p, r)| (p.clone(), r.and(p.negate())));
        let node = (any::<u8>(), proptest::collection::vec(row, 8));
        proptest::collection::vec(node, n).prop_map(move |drafts| {
            let nodes = names("n", n);
            let mut parents = Vec::new();
            let mut rows = Vec::new();
            for (j, (mask, node_rows)) in drafts.into_iter().enumerate() {
                let ps: Vec<usize> = (0..j).filter(|&k| mask >> k & 1 == 1).take(3).collect();
                let keys = assignments(&names("p", ps.len()));
                let table = keys
                    .into_iter()
                    .map(|a| a.into_values().collect::<Vec<bool>>())
                    .zip(node_rows)
                    .collect();
                parents.push(ps);
                rows.push(table);
            }
            RandomNetwork {
                nodes,
                parents,
                o: o.clone(),
                rows,
            }
        })
    })
}
