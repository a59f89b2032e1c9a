use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cyclotomic order {0} is not supported")]
    UnsupportedOrder(u32),
    #[error("field mismatch: Q(z{0}) vs Q(z{1})")]
    FieldMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("expected {expected} coefficients, got {got}")]
    CoefficientLength { expected: usize, got: usize },
    #[error("cannot embed Q(z{from}) into Q(z{to}): order does not divide")]
    EmbeddingOrder { from: u32, to: u32 },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("operator is not invertible")]
    NotInvertible,
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("zero braiding coefficient at ({0}, {1})")]
    ZeroCoefficient(usize, usize),
    #[error("solution is degenerate: {0}")]
    Degenerate(String),
    #[error("not a rack: {0}")]
    NotARack(String),
    #[error("not a braiding: {0}")]
    NotABraiding(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("case table for {table}: pair (a={a}, b={b}) matched {matched} cases")]
    CaseTotality {
        table: &'static str,
        a: usize,
        b: usize,
        matched: usize,
    },
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
