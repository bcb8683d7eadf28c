//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    NvarsMismatch(usize, usize),
    #[error("variable index {0} out of range for {1} variables")]
    VarIndex(usize, usize),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("coordinates have a common projective zero; not a morphism")]
    NotAMorphism,
    #[error("zero polynomial not allowed here")]
    ZeroInput,
    #[error("constant polynomial not allowed here")]
    ConstantInput,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("elimination ideal is not principal up to radical ({0} generators, constant gcd)")]
    EliminationNotPrincipal(usize),
    #[error("fiber contains irrational points: rational multiplicities sum to {found} of {expected}")]
    IrrationalFiberPoint { found: u32, expected: u32 },
    #[error("genericity retries exhausted after {0} attempts")]
    GenericityExhausted(u32),
    #[error("critical point with irrational coordinates")]
    IrrationalCriticalPoint,
    #[error("orbit exceeded step budget {0} without cycling")]
    OrbitBudgetExceeded(u32),
    #[error("enumeration exhausted while searching for a linear form")]
    SearchExhausted,
    #[error("Macaulay denominator minor degenerate for every variable permutation")]
    MacaulayDegenerate,
    #[error("hypersurface is not smooth")]
    NotSmooth,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
