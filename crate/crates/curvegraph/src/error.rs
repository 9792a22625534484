use thiserror::Error;

#[derive(Debug, Error)]
pub enum SurfaceError {
    #[error("genus {genus} is out of the supported range 0..=2")]
    GenusOutOfRange { genus: u32 },
    #[error("closed genus-2 surface has no ideal triangulation; its curve graph is that of the 6-punctured sphere, use (0,6) instead")]
    ClosedGenusTwo,
    #[error("surfaces without punctures admit no ideal triangulation")]
    NoPunctures,
    #[error("complexity 3g-3+n = {complexity} for ({genus},{punctures}) is below the supported minimum 2")]
    ComplexityTooLow { genus: u32, punctures: u32, complexity: i64 },
    #[error("edge {edge} is not flippable: its two sides lie in one triangle")]
    UnflippableEdge { edge: usize },
    #[error("malformed complex: {0}")]
    MalformedComplex(String),
}

#[derive(Debug, Error)]
pub enum CurveError {
    #[error("weight vector has {got} entries but the triangulation has {expected} edges")]
    WrongLength { got: usize, expected: usize },
    #[error("triangle {triangle} violates normal-coordinate constraints: side weights {weights:?} ({reason})")]
    BadTriangle { triangle: usize, weights: [u32; 3], reason: &'static str },
    #[error("coordinates trace to {components} components where exactly one is required")]
    NotASingleCurve { components: usize },
    #[error("curve is not essential: {0}")]
    NotEssential(&'static str),
    #[error("curve is empty")]
    Empty,
    #[error("operation requires curves on the same triangulation")]
    TriangulationMismatch,
    #[error("half-twist support must be an outer curve")]
    SupportNotOuter,
    #[error("unknown curve label: {0}")]
    UnknownLabel(String),
}

#[derive(Debug, Error)]
pub enum ExpansionError {
    #[error("determination of the empty set is rejected: every curve is vacuously disjoint from it")]
    EmptySet,
    #[error("witness chain step {step}: {reason}")]
    BadChainStep { step: usize, reason: String },
}

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("family construction for genus {genus} requires at least {min} punctures, got {got}{hint}")]
    TooFewPunctures { genus: u32, min: u32, got: u32, hint: &'static str },
    #[error("unsupported surface for this family: genus {0}")]
    UnsupportedGenus(u32),
    #[error("no separating non-outer curve has the requested type: {0}")]
    UnrealizableType(String),
    #[error("family self-check failed: {0}")]
    SelfCheck(String),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Curve(#[from] CurveError),
}
