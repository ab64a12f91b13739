//! Boolean functions stored as packed truth tables.

/// A boolean function over `vars` atoms, one bit per world in the
/// canonical enumeration of [`Vocabulary`](super::Vocabulary).
///
/// Two functions over the same vocabulary are logically equivalent exactly
/// when they compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolFn {
    vars: usize,
    words: Vec<u64>,
}

fn word_count(vars: usize) -> usize {
    (1usize << vars).div_ceil(64)
}

impl BoolFn {
    pub fn contradiction(vars: usize) -> Self {
        BoolFn {
            vars,
            words: vec![0; word_count(vars)],
        }
    }

    pub fn tautology(vars: usize) -> Self {
        let mut f = BoolFn {
            vars,
            words: vec![!0; word_count(vars)],
        };
        f.mask_tail();
        f
    }

    /// The `i`th atom, true where bit `vars - 1 - i` of the world index is clear.
    pub fn atom(vars: usize, i: usize) -> Self {
        assert!(i < vars);
        let shift = vars - 1 - i;
        let mut f = Self::contradiction(vars);
        for k in 0..(1usize << vars) {
            if (k >> shift) & 1 == 0 {
                f.set(k, true);
            }
        }
        f
    }

    /// Builds a function from its set of satisfying world indices.
    pub fn from_models(vars: usize, models: impl IntoIterator<Item = usize>) -> Self {
        let mut f = Self::contradiction(vars);
        for k in models {
            f.set(k, true);
        }
        f
    }

    fn mask_tail(&mut self) {
        let len = 1usize << self.vars;
        if len < 64 {
            self.words[0] &= (1u64 << len) - 1;
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn get(&self, k: usize) -> bool {
        (self.words[k / 64] >> (k % 64)) & 1 == 1
    }

    pub fn set(&mut self, k: usize, value: bool) {
        let bit = 1u64 << (k % 64);
        if value {
            self.words[k / 64] |= bit;
        } else {
            self.words[k / 64] &= !bit;
        }
    }

    fn zip(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(
            self.vars, other.vars,
            "truth tables over different vocabularies"
        );
        BoolFn {
            vars: self.vars,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| op(*a, *b))
                .collect(),
        }
    }

    pub fn and(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & b)
    }

    pub fn or(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a | b)
    }

    pub fn and_not(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & !b)
    }

    pub fn not(&self) -> Self {
        let mut f = BoolFn {
            vars: self.vars,
            words: self.words.iter().map(|w| !w).collect(),
        };
        f.mask_tail();
        f
    }

    pub fn is_contradiction(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn is_tautology(&self) -> bool {
        *self == Self::tautology(self.vars)
    }

    /// `self ⊨ other`.
    pub fn entails(&self, other: &Self) -> bool {
        assert_eq!(
            self.vars, other.vars,
            "truth tables over different vocabularies"
        );
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// First satisfying world in canonical order.
    pub fn first_model(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn models(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + bit)
            })
        })
    }

    pub fn count_models(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

impl std::fmt::Debug for BoolFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let models: Vec<usize> = self.models().collect();
        write!(f, "BoolFn({} vars, models {:?})", self.vars, models)
    }
}
