//! Proptest strategies shared by the property suites.
//!
//! Scalars are kept small; all arithmetic is exact, so the ranges only
//! bound how large the intermediate numerators grow.

#![allow(dead_code)]

use beltrami_core::rational::{rat, rat_int};
use beltrami_core::{
    AntiLinearMap, EndoMatrix, ExtScalar, QuadExtField, QuadraticForm, Rational, SemiLinearMap,
};
use num::Zero;
use proptest::prelude::*;

pub fn arb_rational() -> impl Strategy<Value = Rational> {
    (-24i64..=24, 1i64..=8).prop_map(|(n, d)| rat(n, d))
}

pub fn arb_nonzero_rational() -> impl Strategy<Value = Rational> {
    arb_rational().prop_filter("nonzero rational", |r| !r.is_zero())
}

/// Nonzero non-square discriminants of both signs, integral and fractional.
pub fn arb_d() -> impl Strategy<Value = Rational> {
    prop_oneof![
        Just(rat_int(-1)),
        Just(rat_int(2)),
        Just(rat_int(3)),
        Just(rat_int(5)),
        Just(rat_int(-2)),
        Just(rat_int(-5)),
        Just(rat_int(7)),
        Just(rat(1, 2)),
        Just(rat(-4, 3)),
        Just(rat(8, 9)),
    ]
}

pub fn arb_field() -> impl Strategy<Value = QuadExtField> {
    arb_d().prop_map(|d| QuadExtField::new(d).expect("strategy emits valid discriminants"))
}

pub fn arb_scalar() -> impl Strategy<Value = ExtScalar> {
    (arb_rational(), arb_rational()).prop_map(|(a, b)| ExtScalar::new(a, b))
}

pub fn arb_nonzero_scalar() -> impl Strategy<Value = ExtScalar> {
    arb_scalar().prop_filter("nonzero scalar", |z| !z.is_zero())
}

pub fn arb_form() -> impl Strategy<Value = QuadraticForm> {
    (arb_rational(), arb_rational(), arb_rational())
        .prop_map(|(g11, g12, g22)| QuadraticForm::new(g11, g12, g22))
}

pub fn arb_nonzero_form() -> impl Strategy<Value = QuadraticForm> {
    arb_form().prop_filter("nonzero form", |q| !q.is_zero())
}

pub fn arb_nondegenerate_form() -> impl Strategy<Value = QuadraticForm> {
    arb_form().prop_filter("nondegenerate form", |q| {
        !beltrami_core::quadforms::det_form(q).is_zero()
    })
}

/// Binary forms with no nontrivial zero: those whose negated determinant is
/// not a square.
pub fn arb_anisotropic_form() -> impl Strategy<Value = QuadraticForm> {
    arb_form().prop_filter("anisotropic form", |q| {
        !beltrami_core::rational::is_square(&-beltrami_core::quadforms::det_form(q))
    })
}

pub fn arb_map() -> impl Strategy<Value = SemiLinearMap> {
    (arb_scalar(), arb_scalar()).prop_map(|(a, b)| SemiLinearMap::from_pair(a, b))
}

pub fn arb_nonzero_map() -> impl Strategy<Value = SemiLinearMap> {
    arb_map().prop_filter("nonzero map", |f| !f.is_zero())
}

/// Maps with nonzero linear part, the domain of the Beltrami form.
pub fn arb_regularizable_map() -> impl Strategy<Value = SemiLinearMap> {
    (arb_nonzero_scalar(), arb_scalar()).prop_map(|(a, b)| SemiLinearMap::from_pair(a, b))
}

pub fn arb_anti() -> impl Strategy<Value = AntiLinearMap> {
    arb_scalar().prop_map(AntiLinearMap::new)
}

pub fn arb_matrix() -> impl Strategy<Value = EndoMatrix> {
    (arb_rational(), arb_rational(), arb_rational(), arb_rational())
        .prop_map(|(f11, f12, f21, f22)| EndoMatrix::new(f11, f12, f21, f22))
}

pub fn arb_invertible_matrix() -> impl Strategy<Value = EndoMatrix> {
    arb_matrix().prop_filter("invertible matrix", |m| !m.det().is_zero())
}
