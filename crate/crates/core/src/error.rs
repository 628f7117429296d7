use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cover ({lower}, {upper}) does not raise the rank by one ({lower_rank} -> {upper_rank})")]
    NotGraded {
        lower: usize,
        upper: usize,
        lower_rank: usize,
        upper_rank: usize,
    },

    #[error("poset is not bounded: {0}")]
    NotBounded(String),

    #[error("cover relation contains a cycle through element {0}")]
    CycleDetected(usize),

    #[error("unknown element id {0}")]
    UnknownElement(usize),

    #[error("duplicate element id {0}")]
    DuplicateElement(usize),

    #[error("elements {0} and {1} are not comparable (need lo <= hi)")]
    NotComparable(usize, usize),

    #[error("element {0} is not a coatom")]
    NotACoatom(usize),

    #[error("facet {0} is not a simplex")]
    FacetNotSimplex(usize),

    #[error("lattice has no simplex facet to stack on")]
    NoSimplexFacet,

    #[error("face {0:?} is not in the complex")]
    FaceNotInComplex(Vec<String>),

    #[error("unknown vertex label {0:?}")]
    UnknownVertex(String),

    #[error("spec invariant violated: {0}")]
    SpecInvariantViolated(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("formula out of range: {0}")]
    OutOfFormulaRange(String),

    #[error("size limit exceeded: {what} needs {size}, limit is {limit} (set POLYFACE_SIZE_LIMIT to raise it)")]
    SizeLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
