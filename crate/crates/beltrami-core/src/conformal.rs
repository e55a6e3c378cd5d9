//! Conformal structures on V and the conformal dilatation of a map.
//!
//! A conformal structure is a nonzero quadratic form on V up to scaling by
//! k*. The class of the norm form is the canonical structure c_V. A class
//! is exceptional when its representative is anti-norm-like; the regular
//! classes form the affine chart M(V), where every representative splits as
//! n + q with n norm-like nonzero and q anti-norm-like, uniquely up to a
//! common scalar. On M(V):
//!
//! * the quadratic form 𝔻([n + q]) = −det q / det n;
//! * the K-structure z·[n + q] = [n + z·q], with zero c_V;
//! * the identification with anti-linear endomorphisms,
//!   [n + q] ↦ q/n and f ↦ [n + f·n], which exchanges 𝔻 and 𝒟 and is
//!   K-linear.
//!
//! Pulling the target's canonical structure back along a nonzero k-linear
//! map f gives its conformal dilatation c(f) = [f*n]; c(f) = c_V exactly
//! when f is conformal (K-linear or pure anti-linear). When the linear
//! part of f is nonzero, c(f) is computable from the Beltrami form alone:
//! with D = 𝒟(μ_f), either 1 + D ≠ 0 and c(f) is the regular class of
//! (1 + D)·n + 2·(μ·n), reached here through the identification applied to
//! (2/(1+D))·μ, or 1 + D = 0 and c(f) is the exceptional class [2·(μ·n)].
//! [`dilatation_via_beltrami`] implements both branches and always agrees
//! with the direct pullback.

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::field_ext::{ExtScalar, QuadExtField};
use crate::quadforms::{
    decompose, divide, is_anti_norm_like, left_product, norm_like, scalar_mul_a, QuadraticForm,
};
use crate::rational::{rat_int, Rational};
use crate::semilinear::{beltrami, dcal, scalar_mul_hom, AntiLinearMap, SemiLinearMap};

/// Regular/exceptional dichotomy for conformal classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassTag {
    Regular,
    Exceptional,
}

/// Nonzero quadratic form up to k*-scaling. The representative is
/// normalized so its first nonzero Gram entry, in the order
/// (g11, g12, g22), equals 1; equality of classes is equality of
/// representatives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConformalClass {
    pub rep: QuadraticForm,
    pub tag: ClassTag,
}

/// Pullback f*q, the form v ↦ q(f(v)); its Gram matrix is F·M(q)·Fᵀ.
pub fn pullback(k: &QuadExtField, f: &SemiLinearMap, q: &QuadraticForm) -> QuadraticForm {
    let m = f.matrix(k);
    let g = m.mul(&q.gram()).mul(&m.transpose());
    debug_assert_eq!(g.f12, g.f21);
    QuadraticForm::new(g.f11, g.f12, g.f22)
}

/// The class of a nonzero form, with its normalized representative and
/// regular/exceptional tag.
pub fn conformal_class(k: &QuadExtField, q: &QuadraticForm) -> Result<ConformalClass, Error> {
    let leading = [&q.g11, &q.g12, &q.g22]
        .into_iter()
        .find(|c| !c.is_zero())
        .ok_or(Error::ZeroForm)?;
    let rep = q.scale(&(Rational::one() / leading));
    let tag = if is_anti_norm_like(k, &rep) {
        ClassTag::Exceptional
    } else {
        ClassTag::Regular
    };
    Ok(ConformalClass { rep, tag })
}

/// The canonical structure c_V = [n], the class of the norm form and the
/// zero of M(V).
pub fn canonical_structure(k: &QuadExtField) -> ConformalClass {
    conformal_class(k, &norm_like(k, Rational::one()))
        .expect("norm form is nonzero")
}

/// 𝔻 on M(V): split the representative as n + q and return −det q / det n.
pub fn dd(k: &QuadExtField, class: &ConformalClass) -> Result<Rational, Error> {
    let (n_part, a_part) = regular_parts(k, class)?;
    Ok(-crate::quadforms::det_form(&a_part) / crate::quadforms::det_form(&n_part))
}

/// The identification M(V) → Hom_a(V, V): [n + q] ↦ q/n. Satisfies
/// dcal(m_to_hom(c)) = dd(c).
pub fn m_to_hom(k: &QuadExtField, class: &ConformalClass) -> Result<AntiLinearMap, Error> {
    let (n_part, a_part) = regular_parts(k, class)?;
    let m = divide(&a_part, &n_part).expect("norm-like part of a regular class is nonzero");
    let f = AntiLinearMap::new(ExtScalar::new(m.f11.clone(), m.f12.clone()));
    debug_assert_eq!(f.matrix(k), m);
    Ok(f)
}

/// The inverse identification Hom_a(V, V) → M(V): f ↦ [n + f·n]. The
/// result never depends on the norm-like n chosen and is always regular.
pub fn hom_to_m(k: &QuadExtField, f: &AntiLinearMap) -> ConformalClass {
    let n = norm_like(k, Rational::one());
    let fn_part = left_product(&f.matrix(k), &n)
        .expect("anti-linear maps are symmetric with respect to norm-like forms");
    conformal_class(k, &n.add(&fn_part)).expect("norm-like component is nonzero")
}

/// Conformal dilatation c(f) = [f*n], the pullback of the target's
/// canonical structure. Defined for nonzero f; equals c_V exactly when f
/// is K-linear or pure anti-linear.
pub fn dilatation(k: &QuadExtField, f: &SemiLinearMap) -> Result<ConformalClass, Error> {
    if f.is_zero() {
        return Err(Error::ZeroMap);
    }
    let q = pullback(k, f, &norm_like(k, Rational::one()));
    // q(v0) = N(f(v0)) and q(rho v0) = N(f(rho v0)); by anisotropy of N a
    // nonzero f cannot pull the norm form back to zero
    Ok(conformal_class(k, &q).expect("pullback of the norm form by a nonzero map is nonzero"))
}

/// c(f) computed from the Beltrami form alone. With μ = μ_f and
/// D = 𝒟(μ): if 1 + D ≠ 0 the class is regular, the image of (2/(1+D))·μ
/// under the identification; if 1 + D = 0 it is the exceptional class
/// [2·(μ·n)]. Either way the result equals [`dilatation`] (f nonzero since
/// its linear part is).
pub fn dilatation_via_beltrami(
    k: &QuadExtField,
    f: &SemiLinearMap,
) -> Result<ConformalClass, Error> {
    let mu = beltrami(k, f)?;
    let one_plus_d = Rational::one() + dcal(k, &mu);
    if !one_plus_d.is_zero() {
        let w = ExtScalar::from_rational(rat_int(2) / one_plus_d);
        Ok(hom_to_m(k, &scalar_mul_hom(k, &w, &mu)))
    } else {
        let n = norm_like(k, Rational::one());
        let mu_n = left_product(&mu.matrix(k), &n)
            .expect("anti-linear maps are symmetric with respect to norm-like forms");
        let doubled = scalar_mul_a(k, &ExtScalar::from_rational(rat_int(2)), &mu_n)
            .expect("products with norm-like forms are anti-norm-like");
        // 1 + dcal(mu) = 0 forces mu nonzero, and mu's matrix has
        // determinant -dcal(mu) = 1, so mu.n is nonzero
        Ok(conformal_class(k, &doubled).expect("mu.n is nonzero in the exceptional branch"))
    }
}

/// K-structure on M(V): z·[n + q] = [n + z·q].
pub fn scalar_mul_m(
    k: &QuadExtField,
    z: &ExtScalar,
    class: &ConformalClass,
) -> Result<ConformalClass, Error> {
    let (n_part, a_part) = regular_parts(k, class)?;
    let scaled = scalar_mul_a(k, z, &a_part).expect("splitting produced an anti-norm-like part");
    Ok(conformal_class(k, &n_part.add(&scaled))
        .expect("norm-like component is unchanged and nonzero"))
}

/// Splitting of a regular class's representative into its nonzero
/// norm-like part and its anti-norm-like part.
fn regular_parts(
    k: &QuadExtField,
    class: &ConformalClass,
) -> Result<(QuadraticForm, QuadraticForm), Error> {
    if class.tag == ClassTag::Exceptional {
        return Err(Error::ExceptionalClass);
    }
    Ok(decompose(k, &class.rep))
}
