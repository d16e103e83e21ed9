use thiserror::Error;

#[derive(Debug, Error)]
pub enum ArithError {
    #[error("malformed character descriptor: {0}")]
    MalformedCharacter(String),
    #[error("empty range")]
    EmptyRange,
    #[error("sieve of size {n} exceeds memory budget {budget}")]
    SieveBudget { n: u64, budget: u64 },
}

#[derive(Debug, Error)]
pub enum RatFunError {
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("power series expansion at a pole (denominator vanishes at 0)")]
    PoleAtOrigin,
    #[error("p = {0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("{0}")]
    BadLocalCorrection(String),
}

#[derive(Debug, Error)]
pub enum ConstantsError {
    #[error("zeta pole: argument {0} = 1")]
    ZetaPole(f64),
    #[error("gamma argument {0} must be positive")]
    GammaDomain(f64),
    #[error("prime zeta requires s > 1, got {0}")]
    PrimeZetaDomain(f64),
    #[error("prime limit {0} below the validity threshold {1} of the tail bound")]
    PrimeLimitTooSmall(u64, u64),
    #[error("tail order {0} outside supported range [3, 16]")]
    TailOrder(u32),
    #[error("invalid residue parameters: {0}")]
    BadResidueParams(String),
    #[error("independent evaluations disagree for {name}: {delta}")]
    CrossCheckFailed { name: &'static str, delta: f64 },
}

#[derive(Debug, Error)]
pub enum LValueError {
    #[error("d0 = {0} must be odd, squarefree and >= 1")]
    BadD0(u64),
    #[error("smoothing kernel requires y > 0, got {0}")]
    BadKernelArgument(f64),
    #[error("L-value table is missing entries for d in {0:?}")]
    MissingValues(Vec<u64>),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Error)]
pub enum MomentError {
    #[error("x = {0} must be >= 2")]
    BadX(f64),
    #[error("mellin transform requires Re(s) > -3, got {0}")]
    MellinDomain(f64),
    #[error("fit needs at least {need} grid points, got {got}")]
    RankDeficient { need: usize, got: usize },
    #[error(transparent)]
    LValue(#[from] LValueError),
}
