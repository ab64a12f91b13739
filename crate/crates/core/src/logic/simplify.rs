//! Cosmetic two-level minimisation for display.
//!
//! Output of this module is for humans only. Anything that compares
//! sentences goes through truth tables.

use std::collections::{BTreeSet, HashSet};

use super::{BoolFn, Sentence, Vocabulary};

/// Above this many essential atoms the canonical form is returned as is.
const MAX_SIMPLIFY_ATOMS: usize = 12;

/// A cube over the support: `mask` marks the atoms that are fixed, `value`
/// their polarity (bit set = atom true).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Cube {
    mask: u32,
    value: u32,
}

impl Cube {
    fn covers(&self, point: u32) -> bool {
        point & self.mask == self.value
    }
}

fn support(f: &BoolFn) -> Vec<usize> {
    let n = f.vars();
    (0..n)
        .filter(|&i| {
            let bit = 1usize << (n - 1 - i);
            (0..1usize << n).any(|k| k & bit == 0 && f.get(k) != f.get(k | bit))
        })
        .collect()
}

fn prime_implicants(ones: &[u32], m: usize) -> Vec<Cube> {
    let full = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    let mut current: BTreeSet<Cube> = ones
        .iter()
        .map(|&v| Cube {
            mask: full,
            value: v,
        })
        .collect();
    let mut primes = BTreeSet::new();
    while !current.is_empty() {
        let mut next = BTreeSet::new();
        let mut merged = HashSet::new();
        let cubes: Vec<Cube> = current.iter().copied().collect();
        for (i, a) in cubes.iter().enumerate() {
            for b in &cubes[i + 1..] {
                if a.mask != b.mask {
                    continue;
                }
                let diff = a.value ^ b.value;
                if diff.count_ones() == 1 {
                    next.insert(Cube {
                        mask: a.mask & !diff,
                        value: a.value & !diff,
                    });
                    merged.insert(*a);
                    merged.insert(*b);
                }
            }
        }
        primes.extend(cubes.into_iter().filter(|c| !merged.contains(c)));
        current = next;
    }
    primes.into_iter().collect()
}

fn cover(primes: &[Cube], ones: &[u32]) -> Vec<Cube> {
    let mut uncovered: BTreeSet<u32> = ones.iter().copied().collect();
    let mut chosen = Vec::new();
    // essential primes
    for &point in ones {
        let covering: Vec<&Cube> = primes.iter().filter(|c| c.covers(point)).collect();
        if covering.len() == 1 && !chosen.contains(covering[0]) {
            chosen.push(*covering[0]);
        }
    }
    for c in &chosen {
        uncovered.retain(|p| !c.covers(*p));
    }
    while !uncovered.is_empty() {
        let best = primes
            .iter()
            .filter(|c| !chosen.contains(c))
            .max_by_key(|c| {
                let gain = uncovered.iter().filter(|p| c.covers(**p)).count();
                (
                    gain,
                    std::cmp::Reverse(c.mask.count_ones()),
                    std::cmp::Reverse(**c),
                )
            })
            .copied()
            .expect("primes cover every minterm");
        uncovered.retain(|p| !best.covers(*p));
        chosen.push(best);
    }
    chosen
}

/// A short DNF equivalent to `f`, over the atoms `f` actually depends on.
pub fn simplify(f: &BoolFn, vocab: &Vocabulary) -> Sentence {
    if f.is_contradiction() {
        return Sentence::Const(false);
    }
    if f.is_tautology() {
        return Sentence::Const(true);
    }
    let vars = support(f);
    if vars.len() > MAX_SIMPLIFY_ATOMS {
        return super::to_canonical(f, vocab);
    }
    let n = f.vars();
    let m = vars.len();
    // Projected point p: bit (m - 1 - j) set iff support atom j is true.
    let ones: Vec<u32> = (0..1u32 << m)
        .filter(|&p| {
            let k = vars.iter().enumerate().fold(0usize, |acc, (j, &i)| {
                let atom_true = (p >> (m - 1 - j)) & 1 == 1;
                if atom_true {
                    acc
                } else {
                    acc | 1 << (n - 1 - i)
                }
            });
            f.get(k)
        })
        .collect();
    let primes = prime_implicants(&ones, m);
    let mut cubes: Vec<Vec<(usize, bool)>> = cover(&primes, &ones)
        .into_iter()
        .map(|c| {
            (0..m)
                .filter(|j| (c.mask >> (m - 1 - j)) & 1 == 1)
                .map(|j| (vars[j], (c.value >> (m - 1 - j)) & 1 == 1))
                .collect()
        })
        .collect();
    cubes.sort_by(|a, b| {
        let key = |c: &Vec<(usize, bool)>| c.iter().map(|(i, s)| (*i, !*s)).collect::<Vec<_>>();
        key(a).cmp(&key(b))
    });
    Sentence::disjunction(cubes.into_iter().map(|c| {
        Sentence::conjunction(
            c.into_iter()
                .map(|(i, s)| Sentence::literal(vocab.name(i), s)),
        )
    }))
}
