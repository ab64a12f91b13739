//! Objection calculus and objection-based causal networks.
//!
//! A state of belief here assigns to every sentence of a domain language an
//! *objection*: a sentence of a separate objection language describing the
//! condition under which the belief fails. Causal networks quantified with
//! objections define such states through a chain rule in which disjunction
//! replaces multiplication. The same network can also carry conditional
//! probabilities for side-by-side comparison.
//!
//! - [`logic`]: sentences, parsing, exact semantics by enumeration.
//! - [`belief`]: objection-based states, conditionalization, orderings.
//! - [`network`]: DAGs, objection tables, chain-rule assembly, irrelevance checks.
//! - [`pcn`]: the probabilistic mirror.
//! - [`format`]: the network and state file formats.

pub mod belief;
pub mod error;
pub mod format;
pub mod logic;
pub mod network;
pub mod pcn;

pub use belief::ObjectionState;
pub use error::{Error, Result};
pub use logic::{Language, Sentence, Vocabulary, World};
pub use network::{CausalNetwork, OcnQuantification};
pub use pcn::PcnQuantification;
