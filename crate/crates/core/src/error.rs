use thiserror::Error;

/// Which clause of the orbit-growing lemma's hypotheses failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RebuildClause {
    /// `delta` fixes `x` or `y`.
    A,
    /// `gamma(x)` is not in the `gamma*delta` orbit of `x`.
    B,
    /// `y` or `gamma(y)` is moved by `gamma*delta`.
    C,
}

impl std::fmt::Display for RebuildClause {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RebuildClause::A => "(a)",
            RebuildClause::B => "(b)",
            RebuildClause::C => "(c)",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid class label: {0}")]
    InvalidLabel(String),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("size mismatch: partitions of {0} and {1}")]
    SizeMismatch(usize, usize),

    #[error("permutation is odd, not in the alternating group")]
    OddPermutation,

    #[error("cycle type {0} does not have distinct odd parts")]
    NotSplit(String),

    #[error("{what} limit exceeded: {value} > {limit}")]
    LimitExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("irrational residue {0} left after cancellation; character table is inconsistent")]
    IrrationalResidue(String),

    #[error("class powers never reach the whole group")]
    NotGenerating,

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("no valid sequence pair found for length {length} and shape {shape}")]
    SearchFailed { length: usize, shape: String },

    #[error("rebuild hypothesis {clause} violated: {detail}")]
    HypothesisViolated {
        clause: RebuildClause,
        detail: String,
    },

    #[error("target decomposes into fixed points and one double transposition only: {0}")]
    OnlyTrivialKinds(String),

    #[error("{target} is not a product of the requested classes {c} and {d}")]
    NotCoverable {
        c: String,
        d: String,
        target: String,
    },

    #[error("search budget of {budget} samples exhausted (seed {seed}, resume with a new seed)")]
    SearchBudgetExceeded { seed: u64, budget: u64 },

    #[error("n = {0} must be odd and at least 7")]
    EvenOrSmallN(usize),

    #[error("table format error at line {line}: {msg}")]
    Format { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
