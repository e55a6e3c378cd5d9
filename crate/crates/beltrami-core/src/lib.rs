//! Exact arithmetic for conformal dilatation over quadratic field extensions.
//!
//! Everything happens over K = k(√d) with k = ℚ and d a nonzero non-square
//! rational of either sign. V is a 1-dimensional K-space, viewed as a
//! 2-dimensional k-space with the fixed basis {v₀, ρv₀} where ρ = √d.
//!
//! Module map:
//! - [`rational`]: the base field k as exact big rationals, plus the shared
//!   "p/q" string format and its serde glue.
//! - [`field_ext`]: scalars a + bρ of K with conjugation, norm, half-trace,
//!   and the trace pairing.
//! - [`quadforms`]: quadratic forms on V as Gram triples; left products,
//!   quotients, orthogonality, and the norm-like ⊕ anti-norm-like splitting.
//! - [`semilinear`]: k-linear maps in the pair presentation f(z) = az + bz̄,
//!   anti-linear endomorphisms with their hermitian composition and canonical
//!   form 𝒟, and Beltrami forms.
//! - [`conformal`]: conformal classes, pullbacks, the dilatation of a map,
//!   and the equivalence between the direct pullback and the Beltrami-form
//!   route, in both the regular and the exceptional case.
//!
//! All values are immutable and every operation is a pure function, so types
//! are freely shareable across threads. There is no floating point anywhere:
//! identities either hold exactly or fail.

pub mod conformal;
pub mod error;
pub mod field_ext;
pub mod quadforms;
pub mod rational;
pub mod semilinear;

pub use conformal::{ClassTag, ConformalClass};
pub use error::Error;
pub use field_ext::{ExtScalar, QuadExtField};
pub use quadforms::{EndoMatrix, QuadraticForm};
pub use rational::Rational;
pub use semilinear::{AntiLinearMap, SemiLinearMap};
