//! Crate-wide error type.
//!
//! Variants are fine-grained on purpose: the CLI maps each failure class to
//! a distinct exit code, and tests assert on exact variants.

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// d = 0 defines no quadratic extension.
    #[error("discriminant is zero; expected a nonzero non-square rational")]
    ZeroDiscriminant,

    /// A square d collapses k(sqrt d) down to k.
    #[error("discriminant {0} is a rational square, so it defines no quadratic extension")]
    SquareDiscriminant(String),

    /// Inversion of the zero scalar.
    #[error("division by zero in K")]
    DivisionByZero,

    /// Left product attempted with a matrix that is not symmetric with
    /// respect to the form.
    #[error("matrix is not symmetric with respect to the form; left product undefined")]
    NotSymmetric,

    /// Quotient of forms attempted with a degenerate denominator.
    #[error("denominator form is degenerate (det = 0); quotient undefined")]
    DegenerateDenominator,

    /// The two vectors handed to the orthogonality criterion are linearly
    /// dependent over k.
    #[error("vectors do not form a basis of V over k")]
    NotABasis,

    /// The basis handed to the orthogonality criterion is not orthogonal for
    /// the first form.
    #[error("basis is not orthogonal with respect to the first form")]
    NotPOrthogonal,

    /// K-scaling of forms is defined only on the anti-norm-like subspace.
    #[error("form is not anti-norm-like; K-scaling acts only on A(V)")]
    NotAntiNormLike,

    /// The Beltrami form requires a nonzero K-linear part.
    #[error("linear part vanishes; the Beltrami form requires Lf != 0")]
    VanishingLinearPart,

    /// Only nonzero forms have a conformal class.
    #[error("the zero form has no conformal class")]
    ZeroForm,

    /// Operation defined only on regular classes (the affine chart M(V)).
    #[error("class is exceptional; operation is defined only on regular classes")]
    ExceptionalClass,

    /// The zero map has no conformal dilatation.
    #[error("the zero map has no conformal dilatation")]
    ZeroMap,

    /// Malformed textual input (rational strings, serialized values).
    #[error("{0}")]
    Parse(String),
}
