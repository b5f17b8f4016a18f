use thiserror::Error;

/// Structural problems with a combinatorial map.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("alpha is not an involution at dart {dart}")]
    AlphaNotInvolution { dart: usize },
    #[error("alpha fixes dart {dart}")]
    AlphaFixedPoint { dart: usize },
    #[error("sigma is not a bijection: dart {dart} is hit twice")]
    SigmaNotBijection { dart: usize },
    #[error("dart {dart} is referenced by only one of sigma and alpha")]
    DanglingDart { dart: usize },
    #[error("edge {edge} does not exist")]
    UnknownEdge { edge: usize },
    #[error("vertex {vertex} is out of range")]
    VertexOutOfRange { vertex: usize },
    #[error("expected {expected} edge signs, got {got}")]
    SignCount { expected: usize, got: usize },
}

/// Structural problems with a surface link diagram.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("port {port} is not matched by any arc")]
    UnmatchedPort { port: usize },
    #[error("port {port} appears in more than one arc")]
    DuplicatePort { port: usize },
    #[error("port {port} is paired with itself")]
    SelfPairedPort { port: usize },
    #[error("port {port} is out of range")]
    PortOutOfRange { port: usize },
    #[error("state covers {got} crossings, diagram has {expected}")]
    PartialState { expected: usize, got: usize },
    #[error("orientation names {got} components, diagram has {expected}")]
    IncoherentOrientation { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable `{var}` occurs with negative exponent but is bound to a non-monomial")]
    NegativePowerOfPolynomial { var: alloc::string::String },
    #[error("variable `{var}` occurs with fractional exponent but is bound to a non-monomial")]
    FractionalPowerOfPolynomial { var: alloc::string::String },
    #[error("non-integral power of coefficient while substituting `{var}`")]
    NonIntegralCoefficient { var: alloc::string::String },
    #[error("exponent is not a multiple of 1/4")]
    ExponentNotRepresentable,
    #[error("syntax error at byte {offset}: {message}")]
    Syntax {
        offset: usize,
        message: alloc::string::String,
    },
}

/// Failure of one of the exponential computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComputeError {
    #[error("instance has {size} edges or crossings, limit is {limit}")]
    SizeLimit { size: usize, limit: usize },
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
