use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the exact-arithmetic routines of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("valuation of zero is infinite")]
    InfiniteValuation,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("expected a nonconstant polynomial")]
    Constant,
    #[error("{0} is not prime")]
    NotPrime(BigInt),
    #[error("phi divides the polynomial exactly (a_0 = 0)")]
    ExactRoot,
    #[error("lift [{lift}] is not congruent to an irreducible factor modulo {p}")]
    BadLift { lift: String, p: BigInt },
    #[error("singular curve: the discriminant vanishes")]
    SingularCurve,
    #[error("point is 2-torsion: the doubling denominator vanishes")]
    TwoTorsion,
    #[error("evaluation hit a pole")]
    Pole,
    #[error("curve has good reduction at {0}")]
    GoodReduction(BigInt),
    #[error("formula is stated for odd n only")]
    EvenIndex,
    #[error("polynomial is reducible over Q")]
    Reducible,
    #[error("factorization budget exhausted")]
    BudgetExceeded,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
