use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("unknown atom `{0}`")]
    UnknownAtom(String),

    #[error("invalid atom name `{0}`")]
    InvalidAtomName(String),

    #[error("duplicate atom `{0}`")]
    DuplicateAtom(String),

    #[error("atom `{0}` appears in both the domain and the objection vocabulary")]
    OverlappingVocabularies(String),

    #[error("vocabulary mismatch: {0}")]
    VocabularyMismatch(String),

    #[error("enumeration limit exceeded: {atoms} atoms requested, at most {limit} allowed")]
    EnumerationLimit { atoms: usize, limit: usize },

    #[error("world table is missing an entry for world {0}")]
    MissingWorld(String),

    #[error("world table has more than one entry for world {0}")]
    DuplicateWorld(String),

    #[error("objection to `true` is satisfiable (counterexample: {witness})")]
    TautologyObjected { witness: String },

    #[error("evidence `{0}` is rejected by the state of belief")]
    RejectedEvidence(String),

    #[error("the condition's objection `{0}` is tautologous")]
    RejectedCondition(String),

    #[error("contradictory assessment: conditional objection `{conditional}` is consistent with the condition's objection `{condition}` (witness: {witness})")]
    ContradictoryAssessment {
        conditional: String,
        condition: String,
        witness: String,
    },

    #[error("evidence `{0}` has probability zero")]
    ZeroProbabilityEvidence(String),

    #[error("network structure: {0}")]
    Structure(String),

    #[error("invalid quantification: {0}")]
    InvalidQuantification(String),

    #[error("line {line}: {message}")]
    File { line: usize, message: String },
}

impl Error {
    /// True for errors caused by malformed input text (formulas or files)
    /// rather than by the content of a well-formed request.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::UnknownAtom(_)
                | Error::InvalidAtomName(_)
                | Error::DuplicateAtom(_)
                | Error::OverlappingVocabularies(_)
                | Error::File { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
