//! Semi-linear and anti-linear maps between 1-dimensional K-spaces.
//!
//! Every k-linear map f between 1-dimensional K-spaces splits uniquely into
//! a K-linear part and an anti-linear part, f = Lf + Af. After choosing
//! basis vectors v₀ and w₀ this is the pair presentation
//! f(z·v₀) = (a·z + b·z̄)·w₀ stored by [`SemiLinearMap`]: a is the linear
//! part, b the anti-linear part. The pair makes decomposition, composition,
//! and the Beltrami quotient single field operations; the matrix view
//! exists for determinants and Gram-matrix interplay.
//!
//! The anti-linear endomorphisms of V form a 1-dimensional K-space under
//! z·g = m_z ∘ g, carried by [`AntiLinearMap`]. Composing two of them is
//! K-linear, which yields a hermitian pairing ⟨f, g⟩ and the canonical
//! quadratic form 𝒟(f) = ⟨f, f⟩ = N(b_f); a reflection is an anti-linear
//! involution, the b = 1 case in a chosen basis.
//!
//! For f with nonzero linear part, the Beltrami form μ_f = (Lf)⁻¹ ∘ Af is
//! the anti-linear endomorphism of V with value b/a; it vanishes exactly
//! when f is K-linear.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::field_ext::{ExtScalar, QuadExtField};
use crate::quadforms::EndoMatrix;
use crate::rational::{rat, Rational};

/// k-linear map V → W in the pair presentation f(z·v₀) = (a·z + b·z̄)·w₀.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiLinearMap {
    /// K-linear part Lf.
    pub a: ExtScalar,
    /// Anti-linear part Af.
    pub b: ExtScalar,
}

impl SemiLinearMap {
    pub fn from_pair(a: ExtScalar, b: ExtScalar) -> Self {
        Self { a, b }
    }

    pub fn identity() -> Self {
        Self::from_pair(ExtScalar::one(), ExtScalar::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// f(z) = a·z + b·z̄ in coordinates on source and target.
    pub fn apply(&self, k: &QuadExtField, z: &ExtScalar) -> ExtScalar {
        k.mul(&self.a, z).add(&k.mul(&self.b, &z.conj()))
    }

    /// Matrix in the bases {v₀, ρv₀} and {w₀, ρw₀}, row convention: the
    /// rows are the coordinates of f(v₀) = a + b and f(ρv₀) = (a − b)ρ.
    pub fn matrix(&self, k: &QuadExtField) -> EndoMatrix {
        EndoMatrix::new(
            &self.a.a + &self.b.a,
            &self.a.b + &self.b.b,
            (&self.a.b - &self.b.b) * k.d(),
            &self.a.a - &self.b.a,
        )
    }

    /// self ∘ other: pairs compose by
    /// (a_f, b_f)∘(a_g, b_g) = (a_f·a_g + b_f·conj(b_g), a_f·b_g + b_f·conj(a_g)).
    pub fn compose(&self, k: &QuadExtField, other: &Self) -> Self {
        Self::from_pair(
            k.mul(&self.a, &other.a).add(&k.mul(&self.b, &other.b.conj())),
            k.mul(&self.a, &other.b).add(&k.mul(&self.b, &other.a.conj())),
        )
    }
}

/// Anti-linear endomorphism g(z·v₀) = b·z̄·v₀ of V, i.e. g(z·v) = z̄·g(v).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AntiLinearMap {
    pub b: ExtScalar,
}

impl AntiLinearMap {
    pub fn new(b: ExtScalar) -> Self {
        Self { b }
    }

    pub fn zero() -> Self {
        Self::new(ExtScalar::zero())
    }

    /// The conjugation reflection σ relative to the chosen basis (b = 1).
    pub fn reflection() -> Self {
        Self::new(ExtScalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.b.is_zero()
    }

    pub fn apply(&self, k: &QuadExtField, z: &ExtScalar) -> ExtScalar {
        k.mul(&self.b, &z.conj())
    }

    /// Matrix over k: rows are the coordinates of g(v₀) = b and
    /// g(ρv₀) = −bρ. Its determinant is −N(b) = −dcal(g).
    pub fn matrix(&self, k: &QuadExtField) -> EndoMatrix {
        EndoMatrix::new(
            self.b.a.clone(),
            self.b.b.clone(),
            -(&self.b.b * k.d()),
            -self.b.a.clone(),
        )
    }
}

/// Matrix of m_z, multiplication by z, in the basis {v₀, ρv₀}; its
/// determinant is N(z).
pub fn mult_map(k: &QuadExtField, z: &ExtScalar) -> EndoMatrix {
    EndoMatrix::new(
        z.a.clone(),
        z.b.clone(),
        &z.b * k.d(),
        z.a.clone(),
    )
}

/// Recovers the pair (a, b) from a matrix presentation: with u₁ = f(v₀) and
/// u₂ = f(ρv₀) read off the rows,
///
/// a = (u₁ + ρ⁻¹·u₂)/2,  b = (u₁ − ρ⁻¹·u₂)/2.
///
/// These are the unique solutions of u₁ = a + b, u₂ = (a − b)ρ, so the
/// round trip with [`SemiLinearMap::matrix`] is the identity; the value is
/// unchanged if any other ρ′ ∈ k⊥ \ {0} replaces ρ.
pub fn decompose_matrix(k: &QuadExtField, f: &EndoMatrix) -> SemiLinearMap {
    let half = rat(1, 2);
    let u1 = ExtScalar::new(f.f11.clone(), f.f12.clone());
    // rho^-1 * u2 = f22 + (f21/d) * rho
    let rho_inv_u2 = ExtScalar::new(f.f22.clone(), &f.f21 / k.d());
    let m = SemiLinearMap::from_pair(
        u1.add(&rho_inv_u2).scale(&half),
        u1.sub(&rho_inv_u2).scale(&half),
    );
    debug_assert_eq!(m.matrix(k), *f);
    m
}

/// The scalar w = b_f·conj(b_g) with f∘g = m_w (composing two anti-linear
/// maps is K-linear).
pub fn compose_anti(k: &QuadExtField, f: &AntiLinearMap, g: &AntiLinearMap) -> ExtScalar {
    k.mul(&f.b, &g.b.conj())
}

/// Hermitian pairing ⟨f, g⟩ = tr(f∘g)/2 = pairing(b_f, b_g); symmetric
/// bilinear with ⟨f, f⟩ = 𝒟(f).
pub fn pairing_hom(k: &QuadExtField, f: &AntiLinearMap, g: &AntiLinearMap) -> Rational {
    k.pairing(&f.b, &g.b)
}

/// The canonical quadratic form 𝒟(f) = ⟨f, f⟩ = N(b_f). It satisfies
/// f∘f = 𝒟(f)·id and det f = −𝒟(f) over k.
pub fn dcal(k: &QuadExtField, f: &AntiLinearMap) -> Rational {
    k.norm(&f.b)
}

/// Beltrami form μ_f = (Lf)⁻¹ ∘ Af, the anti-linear endomorphism of the
/// source with value b/a. Defined only when the linear part is nonzero;
/// μ_f = 0 exactly when f is K-linear.
pub fn beltrami(k: &QuadExtField, f: &SemiLinearMap) -> Result<AntiLinearMap, Error> {
    if f.a.is_zero() {
        return Err(Error::VanishingLinearPart);
    }
    Ok(AntiLinearMap::new(k.div(&f.b, &f.a)?))
}

/// K-structure on the anti-linear endomorphisms: z·f = m_z ∘ f has value
/// z·b_f.
pub fn scalar_mul_hom(k: &QuadExtField, z: &ExtScalar, f: &AntiLinearMap) -> AntiLinearMap {
    AntiLinearMap::new(k.mul(z, &f.b))
}
