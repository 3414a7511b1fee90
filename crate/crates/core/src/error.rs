use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported root system type {0}{1}")]
    InvalidType(char, usize),

    #[error("mixed-sign or zero coefficient vector {0:?} is not a root")]
    NotARoot(Vec<i32>),

    #[error("simple index {0} out of range for rank {1}")]
    IndexOutOfRange(usize, usize),

    #[error("word {0:?} is not reduced")]
    NonReducedWord(Vec<usize>),

    #[error("marked node {0} is not cominuscule")]
    NotCominuscule(usize),

    #[error("weight {0:?} is not dominant for the Levi subalgebra")]
    NonDominantWeight(Vec<i64>),

    #[error("invalid subdiagram {0:?}: {1}")]
    InvalidSubdiagram(Vec<usize>, &'static str),

    #[error("subdiagram is of type {0}, expected LinearA")]
    WrongType(String),

    #[error("consistency check failed: {0}")]
    ConsistencyFailure(String),

    #[error("fiber {0:?} has several roots of maximal height")]
    NonUniqueMaximum(Vec<u32>),

    #[error("internal contradiction: {0}")]
    InternalContradiction(String),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("Jacobi identity fails: {0}")]
    JacobiFailure(String),

    #[error("sigma_gamma(lambda) = {0:?} does not lie in m")]
    NotInM(Vec<i32>),

    #[error("wedge vanishes: sigma_gamma(lambda) = {0:?} repeats a factor of n_w")]
    DegenerateWedge(Vec<i32>),

    #[error("instance needs {needed} wedge monomials, oracle bound is {bound}")]
    OracleTooLarge { needed: u128, bound: u128 },

    #[error("partition {0:?} does not fit in a {1} x {2} box")]
    OutOfBox(Vec<u32>, usize, usize),

    #[error("content sums to {content}, shape has {boxes} boxes")]
    ContentMismatch { content: u32, boxes: u32 },

    #[error("(p, q) = (1, 1) is excluded")]
    ExcludedCase,

    #[error("unknown output format {0:?}")]
    UnknownFormat(String),

    #[error("cannot parse {what} from {token:?}")]
    Parse { what: &'static str, token: String },

    #[error("{} verdict mismatches found", reports.len())]
    MismatchFound {
        reports: Vec<crate::report::RigidityReport>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
