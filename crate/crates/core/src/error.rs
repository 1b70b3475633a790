use thiserror::Error;

use crate::resolution::BettiTable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("cannot parse field `{0}` (expected a prime or `Q`)")]
    Unparseable(String),
    #[error("empty field list")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("shape must have at least one row")]
    Empty,
    #[error("lambda has {lambda} entries but mu has {mu}")]
    LengthMismatch { lambda: usize, mu: usize },
    #[error("lambda is not a partition (weakly decreasing, last part at least 1)")]
    NotAPartition,
    #[error("mu must satisfy 0 <= mu_1 <= ... <= mu_n < lambda_n")]
    MuOutOfRange,
    #[error("lambda_1 = {m} is smaller than the number of rows n = {n}")]
    WidthLessThanHeight { m: usize, n: usize },
    #[error("mu_{row} = {mu} is smaller than {row} - 1")]
    MuTooSmall { row: usize, mu: usize },
}

impl ShapeError {
    /// Stable machine-readable name of the failure.
    pub fn reason(&self) -> &'static str {
        match self {
            ShapeError::Empty => "Empty",
            ShapeError::LengthMismatch { .. } => "LengthMismatch",
            ShapeError::NotAPartition => "NotAPartition",
            ShapeError::MuOutOfRange => "MuOutOfRange",
            ShapeError::WidthLessThanHeight { .. } => "WidthLessThanHeight",
            ShapeError::MuTooSmall { .. } => "MuTooSmall",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("monomial has {got} exponents but the context has {expected} variables")]
    ArityMismatch { expected: usize, got: usize },
    #[error("unsupported variable name `{0}` (expected x1..xn followed by y1..ym)")]
    BadVariableName(String),
    #[error("ideal does not live in an x/y variable context")]
    NotBipartiteContext,
    #[error("substitution covers {got} y-variables but the context has {expected}")]
    SubstitutionArity { expected: usize, got: usize },
    #[error("substitution target x{0} is out of range")]
    SubstitutionTarget(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("face with rows {rows:?} and cols {cols:?} is malformed")]
    BadFace { rows: Vec<usize>, cols: Vec<usize> },
    #[error("face with rows {rows:?} and cols {cols:?} is missing its facet")]
    NotClosed { rows: Vec<usize>, cols: Vec<usize> },
    #[error("label of face with rows {rows:?} and cols {cols:?} is not the lcm of its vertex labels")]
    LabelMismatch { rows: Vec<usize>, cols: Vec<usize> },
    #[error("degree has {got} entries but the complex has {expected} variables")]
    DegreeArity { expected: usize, got: usize },
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolutionError {
    /// Face counts were computed but no theorem guarantees they are Betti numbers.
    #[error("complex is not guaranteed to support a minimal resolution")]
    NotGuaranteedMinimal { table: BettiTable },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("the zero ideal has no finite invariants report")]
    ZeroIdeal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("edge {{{0}, {0}}} must be given as a loop")]
    SelfEdge(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("duplicate loop at {0}")]
    DuplicateLoop(usize),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph has loops; threshold recognition needs a loop-free graph")]
    HasLoops,
    #[error("vertex ordering does not yield a shape: {0}")]
    NotShapeRepresentable(String),
    #[error("the diagram condition fails for this graph")]
    ConditionFailed,
    #[error("graph is not threshold")]
    NotThreshold,
    #[error("ideal is not generated in degree two")]
    NotDegreeTwo,
}
