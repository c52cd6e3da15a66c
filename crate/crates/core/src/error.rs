use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field size {p}^{m} is outside the supported range (q <= 65536)")]
    FieldTooLarge { p: u32, m: u32 },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("zero has no multiplicative order")]
    ZeroElement,
    #[error("no element of multiplicative order {n} in GF({q})")]
    NoElementOfOrder { n: u64, q: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degenerate matrix (determinant zero)")]
    DegenerateMatrix,
    #[error("point {0} is fixed by the map")]
    FixedPoint(String),
    #[error("identity map has no non-trivial orbit")]
    IdentityMap,
    #[error("matrix is not of the required shape: {0}")]
    WrongShape(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("function has a pole at {0}")]
    Pole(String),
    #[error("place {0} is not rational")]
    NotRational(String),
    #[error("invalid place: {0}")]
    InvalidPlace(String),
    #[error("duplicate evaluation place {0}")]
    DuplicatePlace(String),
    #[error("supports of D and G overlap at {0}")]
    SupportOverlap(String),
    #[error("codes have different lengths or fields")]
    CodeMismatch,
    #[error("invalid code: {0}")]
    InvalidCode(String),
    #[error("enumeration needs {needed} items, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("seed {0} is fixed by the map")]
    FixedSeed(String),
    #[error("beta {0} is moved by the map")]
    MovingBeta(String),
    #[error("r = {r} outside 1..={max}")]
    ROutOfRange { r: i64, max: i64 },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("no invariant generator of degree {m} among trace, norm and power sum")]
    DegenerateGenerator { m: u32 },
}
