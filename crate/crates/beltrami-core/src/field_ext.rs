//! The quadratic extension K = k(√d).
//!
//! A scalar is written z = a + bρ with a, b ∈ k and ρ a formal square root
//! of the discriminant d. Conjugation z̄ = a − bρ is the unique nontrivial
//! k-automorphism; it induces the norm N(z) = z·z̄ = a² − d·b², the
//! half-trace tr(z) = (z + z̄)/2 = a, and the trace pairing ⟨z, u⟩ = tr(z·ū),
//! which is the polarization of N. Because d is not a square, N is
//! anisotropic: N(z) = 0 only for z = 0, which is what makes every nonzero
//! scalar invertible via z⁻¹ = z̄ / N(z).
//!
//! The line k⊥ = ker tr = {bρ} is the orthogonal complement of k for the
//! pairing; K = k ⊕ k⊥.

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rational::{self, Rational};

/// Field context for K = k(√d). Construction validates that d is nonzero and
/// not a rational square, so the extension really has degree 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadExtField {
    d: Rational,
}

/// Element z = a + bρ of K, relative to an ambient [`QuadExtField`].
///
/// Addition, negation, and conjugation never look at d, so they live on the
/// scalar itself; multiplication, inversion, norm, and the pairing take the
/// field as receiver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtScalar {
    #[serde(with = "crate::rational::serde_str")]
    pub a: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub b: Rational,
}

impl ExtScalar {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    /// Embedding of the base field, r ↦ r + 0ρ.
    pub fn from_rational(a: Rational) -> Self {
        Self::new(a, Rational::zero())
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    /// The distinguished element ρ = √d.
    pub fn rho() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Conjugation a + bρ ↦ a − bρ.
    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -&self.b)
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.a, -&self.b)
    }

    pub fn add(&self, u: &Self) -> Self {
        Self::new(&self.a + &u.a, &self.b + &u.b)
    }

    pub fn sub(&self, u: &Self) -> Self {
        Self::new(&self.a - &u.a, &self.b - &u.b)
    }

    /// Scaling by the base field, r·(a + bρ) = ra + rb·ρ.
    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(r * &self.a, r * &self.b)
    }

    /// Membership in k⊥ = ker tr: true iff a = 0. The zero scalar counts,
    /// k⊥ being a linear subspace.
    pub fn is_in_kperp(&self) -> bool {
        self.a.is_zero()
    }
}

impl QuadExtField {
    /// Build the field context. Rejects d = 0 and square d; everything else,
    /// positive or negative, integral or fractional, is admitted.
    pub fn new(d: Rational) -> Result<Self, Error> {
        if d.is_zero() {
            return Err(Error::ZeroDiscriminant);
        }
        if rational::is_square(&d) {
            return Err(Error::SquareDiscriminant(rational::format_rational(&d)));
        }
        Ok(Self { d })
    }

    /// The discriminant, i.e. ρ².
    pub fn d(&self) -> &Rational {
        &self.d
    }

    /// (a + bρ)(c + eρ) = (ac + d·be) + (ae + bc)ρ.
    pub fn mul(&self, z: &ExtScalar, u: &ExtScalar) -> ExtScalar {
        ExtScalar::new(
            &z.a * &u.a + &self.d * &z.b * &u.b,
            &z.a * &u.b + &z.b * &u.a,
        )
    }

    /// N(z) = z·z̄ = a² − d·b². Multiplicative and anisotropic.
    pub fn norm(&self, z: &ExtScalar) -> Rational {
        &z.a * &z.a - &self.d * &z.b * &z.b
    }

    /// tr(z) = (z + z̄)/2 = a; restricts to the identity on k.
    pub fn trace_half(&self, z: &ExtScalar) -> Rational {
        z.a.clone()
    }

    /// ⟨z, u⟩ = tr(z·ū) = ac − d·be. Symmetric bilinear; ⟨z, z⟩ = N(z).
    pub fn pairing(&self, z: &ExtScalar, u: &ExtScalar) -> Rational {
        &z.a * &u.a - &self.d * &z.b * &u.b
    }

    /// z⁻¹ = z̄ / N(z): anisotropy of N makes the division safe whenever
    /// z ≠ 0.
    pub fn inv(&self, z: &ExtScalar) -> Result<ExtScalar, Error> {
        if z.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm(z);
        Ok(ExtScalar::new(&z.a / &n, -&z.b / &n))
    }

    pub fn div(&self, z: &ExtScalar, u: &ExtScalar) -> Result<ExtScalar, Error> {
        Ok(self.mul(z, &self.inv(u)?))
    }
}
