//! Exact computations around the two-loop part of the internally connected
//! graph complex `ICG(1)` and the depth-two quotient of the
//! Grothendieck-Teichmuller Lie algebra `grt1`.
//!
//! - [`exact`]: rationals, sparse polynomials, dense rational linear algebra.
//! - [`sym`]: the three `S3` actions and a basis of sign coinvariants.
//! - [`theta`]: the complex `C0 -> C1 -> C2` of theta graphs, its cohomology,
//!   the `psi` normal form and the induced relations among brackets.
//! - [`depth2`]: Ihara bracket, depth-two encoding and the symmetry criterion
//!   for depth-two relations.
//! - [`graph`]: ordered-edge graphs modulo sign, vertex splitting, insertion
//!   bracket of `GC2`, wheels, bowties and theta shapes.
//! - [`cli`]: report generation and export behind the `grt2` binary.

pub mod cli;
pub mod depth2;
pub mod exact;
pub mod graph;
pub mod sym;
pub mod theta;

pub use exact::Rational;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("d0 is not defined on grade {0} (top of the complex)")]
    TopOfComplex(u8),
    #[error("grade must be 0, 1 or 2, got {0}")]
    BadGrade(u8),
    #[error("monomial x^{0} y^{1} z^{2} is not allowed in grade {3}")]
    GradeParity(u32, u32, u32, u8),
    #[error("psi needs an even polynomial, found x^{0} y^{1}")]
    OddMonomial(u32, u32),
    #[error("weight {0} must be even")]
    OddWeight(u32),
    #[error("weight {0} is below the minimum {1}")]
    WeightTooSmall(u32, u32),
    #[error("relation vector of weight {weight} has {got} coefficients, expected {expected}")]
    RelationLength {
        weight: u32,
        got: usize,
        expected: usize,
    },
    #[error("inadmissible graph: {0}")]
    Inadmissible(String),
    #[error("not a theta shape: {0}")]
    NotTheta(String),
    #[error("wheel needs an odd number of spokes >= 3, got {0}")]
    EvenWheel(usize),
    #[error("graph text, line {line}: {msg}")]
    GraphText { line: usize, msg: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
