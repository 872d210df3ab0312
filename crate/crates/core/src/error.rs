use thiserror::Error;

use crate::subset::Subset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("basis family is empty")]
    EmptyFamily,

    #[error("subsets have different cardinalities ({expected} vs {found})")]
    CardinalityMismatch { expected: usize, found: usize },

    #[error("basis exchange fails for A={a:?}, B={b:?}, element {element}")]
    ExchangeAxiomViolation {
        a: Vec<usize>,
        b: Vec<usize>,
        element: usize,
    },

    #[error("element {element} outside ground set of size {n}")]
    OutOfRange { element: usize, n: usize },

    #[error("ground set of size {n} exceeds the supported maximum of {max}")]
    GroundSetTooLarge { n: usize, max: usize },

    #[error("{what}: size {size} exceeds guard {guard}")]
    GuardExceeded {
        what: &'static str,
        size: usize,
        guard: usize,
    },

    #[error("matrix rank {found} is less than its row count {rows}")]
    RankDeficient { rows: usize, found: usize },

    #[error("cyclic flat presentation violates axiom ({axiom}) at X={x:?}, Y={y:?}")]
    AxiomViolation {
        axiom: u8,
        x: Vec<usize>,
        y: Vec<usize>,
    },

    #[error("cyclic flat presentation is not a lattice: {0}")]
    NotALattice(String),

    #[error("map is not an isomorphism: {0}")]
    NotAnIsomorphism(String),

    #[error("graph isomorphism is not induced by a ground-set map: {0}")]
    NotInduced(String),

    #[error("index {index} outside the game alphabet of size {size}")]
    OutOfAlphabet { index: usize, size: usize },

    #[error("structure {structure} does not cover the matroid; element {witness} is uncovered")]
    NotCovering { structure: String, witness: usize },

    #[error("malformed assignment: {0}")]
    MalformedAssignment(String),

    #[error("malformed LBCS: {0}")]
    MalformedLbcs(String),

    #[error("sign assignment domain does not match the cyclic hyperplanes: {0}")]
    SignDomainMismatch(String),

    #[error("matroid is not a rank-3 sparse paving matroid")]
    NotSparsePavingRank3,

    #[error("observables do not pairwise commute: {0}")]
    NonCommuting(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("strategy construction is inconsistent: {0}")]
    ConstructionInconsistency(String),

    #[error("unsupported isomorphism structure for this operation: {0}")]
    UnsupportedKind(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn elems(s: Subset) -> Vec<usize> {
    s.iter().collect()
}
