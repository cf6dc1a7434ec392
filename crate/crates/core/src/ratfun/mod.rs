//! Rational functions in σ and polynomials in z over them.

pub mod poly;
pub mod rf;
pub mod zpoly;

pub use poly::{cyclotomic, elementary_symmetric, elementary_symmetric_all, Poly};
pub use rf::RationalFunction;
pub use zpoly::ZPolynomial;

/// Taylor coefficients of `f` through σ^L.
pub fn series_coefficients(f: &RationalFunction, order: usize) -> crate::Result<Vec<crate::exactnum::Rational>> {
    f.series(order)
}

pub fn invert_sigma(f: &RationalFunction) -> RationalFunction {
    f.invert_sigma()
}

pub fn reciprocal_zpoly(f: &ZPolynomial) -> ZPolynomial {
    f.reciprocal()
}

pub fn evaluate_at_z(f: &ZPolynomial, z0: &RationalFunction) -> RationalFunction {
    f.evaluate_at_z(z0)
}
