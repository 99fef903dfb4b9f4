use std::fmt;

use thiserror::Error;

/// Which hypergroup axiom a structure tensor failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum AxiomKind {
    Negativity,
    RowSum,
    Identity,
    InvolutionSupport,
    InvolutionAntihomomorphism,
    Associativity,
    NotAnInvolution,
}

/// A single failed axiom check, with the offending index tuple and how far off it was.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct AxiomViolation {
    pub kind: AxiomKind,
    pub location: Vec<usize>,
    pub residual: f64,
}

/// Every axiom violation found while validating a tensor.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct AxiomViolationReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomViolationReport {
    pub fn has(&self, kind: AxiomKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }
}

impl fmt::Display for AxiomViolationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} axiom violation(s)", self.violations.len())?;
        for v in self.violations.iter().take(8) {
            write!(f, "; {:?} at {:?} (residual {:.3e})", v.kind, v.location, v.residual)?;
        }
        if self.violations.len() > 8 {
            write!(f, "; ...")?;
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("axiom violation: {0}")]
    AxiomViolation(AxiomViolationReport),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("degenerate Haar weight at element {element}: (x̄*x){{e}} = {mass:e}")]
    DegenerateHaar { element: usize, mass: f64 },

    #[error("hypergroup is not commutative (residual {residual:.3e})")]
    NotCommutative { residual: f64 },

    #[error("character extraction found {found} distinct characters, expected {expected}")]
    CharacterDefect { found: usize, expected: usize },

    #[error("characters are not orthogonal in l2(K, ω) (residual {residual:.3e})")]
    NonOrthogonal { residual: f64 },

    #[error("Fourier matrix is not unitary (residual {residual:.3e})")]
    NotUnitary { residual: f64 },

    #[error("dual is not a hypergroup: coefficient {coefficient:.3e} at {indices:?}")]
    NotStrong { coefficient: f64, indices: [usize; 3] },

    #[error("subhypergroup enumeration capped at order {cap}")]
    CapExceeded { cap: usize },

    #[error("cosets do not partition K: {0}")]
    NotAPartition(String),

    #[error("subset {members:?} is not a subhypergroup")]
    NotClosed { members: Vec<usize> },

    #[error("{family}: parameter constraint violated: {constraint}")]
    ParamOutOfRange { family: &'static str, constraint: String },

    #[error("subset {0:?} is not a subgroup")]
    NotASubgroup(Vec<usize>),

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("Lemma 2.3 equivalence fails for character {character} at coset {coset}")]
    EquivalenceFailure { character: usize, coset: usize },

    #[error("state norm drifted to {norm} during {stage}")]
    NormDrift { stage: &'static str, norm: f64 },

    #[error("HSHP unresolved after {batches} batches: last candidate {candidate:?} ({reason})")]
    Unresolved { batches: usize, candidate: Vec<usize>, reason: String },

    #[error("usage: {0}")]
    Usage(String),

    #[error("document error: {0}")]
    Document(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
