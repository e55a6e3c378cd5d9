//! Quadratic forms on V and the endomorphisms acting on them.
//!
//! V is 1-dimensional over K and carries the fixed k-basis {v₀, ρv₀}; a
//! vector x·v₀ + y·ρv₀ is identified with the scalar x + yρ, so [`ExtScalar`]
//! doubles as the coordinate type. A form is stored as its Gram triple
//! (g11, g12, g22); symmetry is structural.
//!
//! Two distinguished subspaces of the form space Q(V) matter here:
//!
//! * norm-like forms n(zv) = N(z)·n(v), a line spanned by the norm form
//!   with Gram (1, 0, −d);
//! * anti-norm-like forms q(ρ′v) = ρ′²·q(v) for every ρ′ ∈ k⊥, the plane
//!   cut out by g22 = d·g11 (with g12 free).
//!
//! The anti-norm-like Gram condition is exactly det-polarization
//! orthogonality to the norm form, and Q(V) = N(V) ⊕ A(V): [`decompose`]
//! realizes the splitting by solving the two-equation linear system, giving
//! c = (g11 − g22/d)/2 for the norm-like coefficient and
//! α = (g11 + g22/d)/2 for the anti-norm-like diagonal.

use num::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::field_ext::{ExtScalar, QuadExtField};
use crate::rational::{self, Rational};

/// Quadratic form on V via its Gram entries (v₀,v₀), (v₀,ρv₀), (ρv₀,ρv₀).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticForm {
    #[serde(with = "crate::rational::serde_str")]
    pub g11: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub g12: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub g22: Rational,
}

impl QuadraticForm {
    pub fn new(g11: Rational, g12: Rational, g22: Rational) -> Self {
        Self { g11, g12, g22 }
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.g11.is_zero() && self.g12.is_zero() && self.g22.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            &self.g11 + &other.g11,
            &self.g12 + &other.g12,
            &self.g22 + &other.g22,
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(c * &self.g11, c * &self.g12, c * &self.g22)
    }

    /// Gram matrix as an [`EndoMatrix`] (symmetric by construction).
    pub fn gram(&self) -> EndoMatrix {
        EndoMatrix::new(
            self.g11.clone(),
            self.g12.clone(),
            self.g12.clone(),
            self.g22.clone(),
        )
    }
}

/// Matrix of a k-linear endomorphism of V in the basis {v₀, ρv₀}, row
/// convention f(vᵢ) = Σⱼ fᵢⱼ vⱼ (coordinates are row vectors, acting on the
/// right).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoMatrix {
    pub f11: Rational,
    pub f12: Rational,
    pub f21: Rational,
    pub f22: Rational,
}

impl EndoMatrix {
    pub fn new(f11: Rational, f12: Rational, f21: Rational, f22: Rational) -> Self {
        Self { f11, f12, f21, f22 }
    }

    pub fn identity() -> Self {
        Self::new(
            Rational::one(),
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
        )
    }

    pub fn det(&self) -> Rational {
        &self.f11 * &self.f22 - &self.f12 * &self.f21
    }

    pub fn transpose(&self) -> Self {
        Self::new(
            self.f11.clone(),
            self.f21.clone(),
            self.f12.clone(),
            self.f22.clone(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            &self.f11 * &other.f11 + &self.f12 * &other.f21,
            &self.f11 * &other.f12 + &self.f12 * &other.f22,
            &self.f21 * &other.f11 + &self.f22 * &other.f21,
            &self.f21 * &other.f12 + &self.f22 * &other.f22,
        )
    }

    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        if det.is_zero() {
            return None;
        }
        Some(Self::new(
            &self.f22 / &det,
            -&self.f12 / &det,
            -&self.f21 / &det,
            &self.f11 / &det,
        ))
    }

    /// Image of the vector with coordinates (x, y): row vector times matrix.
    pub fn apply(&self, v: &ExtScalar) -> ExtScalar {
        ExtScalar::new(
            &v.a * &self.f11 + &v.b * &self.f21,
            &v.a * &self.f12 + &v.b * &self.f22,
        )
    }
}

// Wire format: row-major array of four rational strings.
impl Serialize for EndoMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [
            rational::format_rational(&self.f11),
            rational::format_rational(&self.f12),
            rational::format_rational(&self.f21),
            rational::format_rational(&self.f22),
        ]
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for EndoMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [f11, f12, f21, f22] = <[String; 4]>::deserialize(d)?;
        let parse = |t: &str| rational::parse_rational(t).map_err(D::Error::custom);
        Ok(Self::new(
            parse(&f11)?,
            parse(&f12)?,
            parse(&f21)?,
            parse(&f22)?,
        ))
    }
}

/// q(x·v₀ + y·ρv₀) = g11·x² + 2·g12·x·y + g22·y².
pub fn evaluate(q: &QuadraticForm, v: &ExtScalar) -> Rational {
    let (x, y) = (&v.a, &v.b);
    &q.g11 * x * x + rational::rat_int(2) * &q.g12 * x * y + &q.g22 * y * y
}

/// Polarization (v, w)_q, the symmetric bilinear form with diagonal q.
pub fn polarize(q: &QuadraticForm, v: &ExtScalar, w: &ExtScalar) -> Rational {
    &q.g11 * &v.a * &w.a + &q.g12 * (&v.a * &w.b + &w.a * &v.b) + &q.g22 * &v.b * &w.b
}

/// det q = g11·g22 − g12².
pub fn det_form(q: &QuadraticForm) -> Rational {
    &q.g11 * &q.g22 - &q.g12 * &q.g12
}

/// Left product f·q, the form with Gram matrix F·M(q). Defined only when
/// that product is symmetric, i.e. when f is symmetric with respect to q;
/// then det(f·q) = det f · det q.
pub fn left_product(f: &EndoMatrix, q: &QuadraticForm) -> Result<QuadraticForm, Error> {
    let m = f.mul(&q.gram());
    if m.f12 != m.f21 {
        return Err(Error::NotSymmetric);
    }
    Ok(QuadraticForm::new(m.f11, m.f12, m.f22))
}

/// Quotient p/n: the unique endomorphism with (v, w)_p = (f(v), w)_n, namely
/// M(p)·M(n)⁻¹. Requires n non-degenerate. Round trips:
/// `left_product(divide(p, n)?, n) = p` and `divide(left_product(f, n)?, n) = f`.
pub fn divide(p: &QuadraticForm, n: &QuadraticForm) -> Result<EndoMatrix, Error> {
    let inv = n.gram().inverse().ok_or(Error::DegenerateDenominator)?;
    Ok(p.gram().mul(&inv))
}

/// Orthogonality of two forms: the polarization of det vanishes on (p, q),
/// equivalently det(p + q) = det p + det q.
pub fn is_orthogonal(p: &QuadraticForm, q: &QuadraticForm) -> bool {
    let cross = (&p.g11 * &q.g22 + &q.g11 * &p.g22) / rational::rat_int(2) - &p.g12 * &q.g12;
    cross.is_zero()
}

/// Orthogonality test through evaluation: given a basis {v, w} orthogonal
/// with respect to p, the forms p and q are orthogonal iff
/// p(v)·q(w) + q(v)·p(w) = 0. Agrees with [`is_orthogonal`] whenever the
/// preconditions hold.
pub fn orthogonality_criterion(
    p: &QuadraticForm,
    q: &QuadraticForm,
    v: &ExtScalar,
    w: &ExtScalar,
) -> Result<bool, Error> {
    if (&v.a * &w.b - &w.a * &v.b).is_zero() {
        return Err(Error::NotABasis);
    }
    if !polarize(p, v, w).is_zero() {
        return Err(Error::NotPOrthogonal);
    }
    let lhs = evaluate(p, v) * evaluate(q, w) + evaluate(q, v) * evaluate(p, w);
    Ok(lhs.is_zero())
}

/// c times the norm form: Gram (c, 0, −d·c). These are exactly the forms
/// with n(zv) = N(z)·n(v); the space N(V) they fill is a line over k.
pub fn norm_like(k: &QuadExtField, c: Rational) -> QuadraticForm {
    let g22 = -(k.d() * &c);
    QuadraticForm::new(c, Rational::zero(), g22)
}

/// Membership in N(V): g12 = 0 and g22 = −d·g11. The zero form counts.
pub fn is_norm_like(k: &QuadExtField, q: &QuadraticForm) -> bool {
    q.g12.is_zero() && q.g22 == -(k.d() * &q.g11)
}

/// Membership in A(V): g22 = d·g11, with g12 unconstrained. This is the
/// det-polarization orthogonality to the norm form, and the zero form counts.
pub fn is_anti_norm_like(k: &QuadExtField, q: &QuadraticForm) -> bool {
    q.g22 == k.d() * &q.g11
}

/// The unique splitting q = n_part + a_part with n_part ∈ N(V) and
/// a_part ∈ A(V).
pub fn decompose(k: &QuadExtField, q: &QuadraticForm) -> (QuadraticForm, QuadraticForm) {
    let half = rational::rat(1, 2);
    let g22_over_d = &q.g22 / k.d();
    let c = (&q.g11 - &g22_over_d) * &half;
    let alpha = (&q.g11 + &g22_over_d) * &half;
    let n_part = norm_like(k, c);
    let a_part = QuadraticForm::new(alpha.clone(), q.g12.clone(), k.d() * &alpha);
    debug_assert_eq!(n_part.add(&a_part), *q);
    (n_part, a_part)
}

/// K-scaling on A(V): z·q = m_z̄·q. Anti-norm-like in, anti-norm-like out,
/// with det(z·q) = N(z)·det q.
pub fn scalar_mul_a(
    k: &QuadExtField,
    z: &ExtScalar,
    q: &QuadraticForm,
) -> Result<QuadraticForm, Error> {
    if !is_anti_norm_like(k, q) {
        return Err(Error::NotAntiNormLike);
    }
    let m = crate::semilinear::mult_map(k, &z.conj());
    // multiplication maps are self-adjoint for anti-norm-like forms, so the
    // left product cannot fail here
    left_product(&m, q).map_err(|_| Error::NotAntiNormLike)
}
