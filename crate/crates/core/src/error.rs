use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("root of order {order} is not contained in Q(zeta_{conductor})")]
    RootOrder { order: u32, conductor: u32 },
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GradingError {
    #[error("grading group needs at least one cyclic factor")]
    EmptyGroup,
    #[error("cyclic factor {index} has order 0")]
    ZeroOrder { index: usize },
    #[error("{what} matrix must be {rank}x{rank}")]
    MatrixShape { what: &'static str, rank: usize },
    #[error("conductor {conductor} is not a multiple of root order {root_order}")]
    Conductor { conductor: u32, root_order: u32 },
    #[error("malformed group element {0:?}")]
    BadElement(String),
    #[error("total order must list every group element exactly once")]
    BadTotalOrder,
    #[error("no sigma factor was supplied")]
    NoSigma,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrices live on different graded spaces")]
    SpaceMismatch,
    #[error("matrix unit index ({row}, {col}) out of range for block ({row_degree}, {col_degree})")]
    UnitIndex {
        row_degree: String,
        col_degree: String,
        row: usize,
        col: usize,
    },
    #[error("expected a homogeneous matrix, found parts of degrees {0:?}")]
    NotHomogeneous(Vec<String>),
    #[error("expected {expected} entries, found {found}")]
    Shape { expected: usize, found: usize },
    #[error("bilinear form J is degenerate (rank {rank} of {dim})")]
    DegenerateJ { rank: usize, dim: usize },
    #[error("bilinear form J has nonzero block ({0}, {1}) with nonzero degree sum")]
    JNotDegreeZero(String, String),
    #[error("bilinear form J is not {0}")]
    JSymmetry(&'static str),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("generator {name} is not homogeneous of its declared degree {degree}")]
    Degree { name: String, degree: String },
    #[error("basis elements of degree {degree} are linearly dependent")]
    DependentBasis { degree: String },
    #[error("bracket [{a}, {b}] leaves the span of the basis ({residual} residual entries)")]
    NotClosed {
        a: String,
        b: String,
        residual: usize,
    },
    #[error("duplicate basis name {0}")]
    DuplicateName(String),
    #[error("algebra has no basis elements")]
    Empty,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormError {
    #[error("algebra has no matrix realization")]
    NoRealization,
    #[error("matrix of degree {degree} is not a commutant (fails against {generator})")]
    NotCommutant { degree: String, generator: String },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("form eta^{degree} is degenerate: rank {rank} of {dim}")]
    Degenerate {
        degree: String,
        rank: usize,
        dim: usize,
        /// A nonzero vector v with eta(v, -) = 0, in basis coordinates.
        witness: Vec<crate::CycScalar>,
    },
}

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("spec file is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("scalar {text:?} in {context}: {source}")]
    Scalar {
        text: String,
        context: String,
        source: ScalarError,
    },
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("{0}")]
    Invalid(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownCatalog(String),
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}
