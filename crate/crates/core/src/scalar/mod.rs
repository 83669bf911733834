//! Scalar domains: exact cyclotomic numbers and a double-precision fallback.

mod cyclo;
pub mod poly;

use std::fmt::Debug;

use num_complex::Complex64;

pub use cyclo::{CycloScalar, CyclotomicField, ZETA};
pub use poly::cyclotomic_polynomial;

use crate::error::Result;

/// Arbitrary precision rational, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

/// Complex number in double precision.
pub type ComplexFloat = Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarMode {
    Exact,
    Float,
}

/// Field element usable as a matrix entry.
///
/// Binary operations assume both operands come from the same field; matrix
/// routines check that up front with [`Scalar::same_domain`].
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync {
    const MODE: ScalarMode;

    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn conj(&self) -> Self;
    /// Literal zero test: exact in Q(ζ_N), `== 0.0` for floats.
    fn is_zero(&self) -> bool;
    fn magnitude(&self) -> f64;
    fn same_domain(&self, other: &Self) -> bool;
    fn to_complex(&self) -> ComplexFloat;
    /// Lossless text form, when the domain has one.
    fn exact_string(&self) -> Option<String>;
}

/// A concrete scalar domain that can realize the trigonometric entries of
/// the dihedral representations.
pub trait ScalarField: Clone + Debug + Send + Sync {
    type Elem: Scalar;

    fn mode(&self) -> ScalarMode;
    fn conductor(&self) -> Option<u64>;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, value: i64) -> Self::Elem;
    /// cos(2πk/m)
    fn cos_turn(&self, k: i64, m: u64) -> Result<Self::Elem>;
    /// sin(2πk/m)
    fn sin_turn(&self, k: i64, m: u64) -> Result<Self::Elem>;
}

impl Scalar for ComplexFloat {
    const MODE: ScalarMode = ScalarMode::Float;

    fn zero_like(&self) -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one_like(&self) -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn inv(&self) -> Option<Self> {
        (!Scalar::is_zero(self)).then(|| Complex64::new(1.0, 0.0) / self)
    }

    fn conj(&self) -> Self {
        Complex64::conj(self)
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn magnitude(&self) -> f64 {
        self.norm()
    }

    fn same_domain(&self, _other: &Self) -> bool {
        true
    }

    fn to_complex(&self) -> ComplexFloat {
        *self
    }

    fn exact_string(&self) -> Option<String> {
        None
    }
}

/// Double-precision complex numbers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FloatField;

impl ScalarField for FloatField {
    type Elem = ComplexFloat;

    fn mode(&self) -> ScalarMode {
        ScalarMode::Float
    }

    fn conductor(&self) -> Option<u64> {
        None
    }

    fn zero(&self) -> ComplexFloat {
        Complex64::new(0.0, 0.0)
    }

    fn one(&self) -> ComplexFloat {
        Complex64::new(1.0, 0.0)
    }

    fn from_int(&self, value: i64) -> ComplexFloat {
        Complex64::new(value as f64, 0.0)
    }

    fn cos_turn(&self, k: i64, m: u64) -> Result<ComplexFloat> {
        Ok(Complex64::new(turn(k, m).cos(), 0.0))
    }

    fn sin_turn(&self, k: i64, m: u64) -> Result<ComplexFloat> {
        Ok(Complex64::new(turn(k, m).sin(), 0.0))
    }
}

fn turn(k: i64, m: u64) -> f64 {
    let k = k.rem_euclid(m as i64);
    2.0 * std::f64::consts::PI * k as f64 / m as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_field_trig() {
        let f = FloatField;
        assert!((f.cos_turn(1, 3).unwrap().re + 0.5).abs() < 1e-12);
        assert!((f.sin_turn(-1, 4).unwrap().re + 1.0).abs() < 1e-12);
        assert_eq!(Scalar::inv(&f.zero()), None);
    }

    #[test]
    fn exact_and_float_trig_agree() {
        for m in 3..=24u64 {
            let exact = CyclotomicField::for_dihedral(m as usize);
            for k in 0..m as i64 {
                let c = exact.cos_turn(k, m).unwrap().to_complex();
                assert!((c - FloatField.cos_turn(k, m).unwrap()).norm() < 1e-10);
                let s = exact.sin_turn(k, m).unwrap().to_complex();
                assert!((s - FloatField.sin_turn(k, m).unwrap()).norm() < 1e-10);
            }
        }
    }
}
