use thiserror::Error;

/// Error type shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("values do not form a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("cannot parse permutation {input:?}: {reason}")]
    ParsePermutation { input: String, reason: String },
    #[error("permutation of length {0} has no proper block decomposition")]
    NoProperDecomposition(usize),
    #[error("inflate needs {expected} blocks (one per quotient entry), got {got}")]
    BlockCountMismatch { expected: usize, got: usize },
    #[error("inflate blocks must be non-empty")]
    EmptyBlock,
    #[error("permutation contains 321; skeletons exist only for 321-avoiders")]
    Contains321,
    #[error("the empty permutation is not represented by a skeleton word")]
    NoWordForEmpty,
    #[error("word rejected by the skeleton grammar: {0}")]
    InvalidWord(String),
    #[error("word has {marks} marks but {labels} labels were given")]
    LabelCountMismatch { marks: usize, labels: usize },
    #[error("cell labels must be positive integers")]
    NonPositiveLabel,
    #[error("cannot parse skeleton word {input:?}: {reason}")]
    ParseWord { input: String, reason: String },
    #[error("division by a series with zero constant term")]
    DivisionByNonUnit,
    #[error("composition needs an inner series with zero constant term")]
    ComposeConstantTerm,
    #[error("series square root needs constant term 1")]
    SqrtConstantTerm,
    #[error("seed {0} does not satisfy the equation at order 0")]
    InconsistentSeed(String),
    #[error("singular branch: the derivative in the unknown vanishes at the seed")]
    SingularBranch,
    #[error("equation has y-dependent coefficients; a univariate solve needs coefficients in x alone")]
    NotUnivariate,
    #[error("narayana(n, k) needs 1 <= k <= n, got n={n}, k={k}")]
    NarayanaRange { n: usize, k: usize },
    #[error("discriminant has no positive real root")]
    NoPositiveRoot,
    #[error("{0}")]
    LimitExceeded(String),
    #[error("fractal depth class D_n needs n >= 1")]
    InvalidDepthClass,
    #[error("checkpoint file error: {0}")]
    Checkpoint(String),
}
