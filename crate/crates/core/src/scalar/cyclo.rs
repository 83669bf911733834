//! Exact arithmetic in the cyclotomic field Q(ζ_N), realized as Q[x]/Φ_N.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::poly::{self, RatPoly};
use super::{Rational, Scalar, ScalarField, ScalarMode};
use crate::error::{Error, Result};

/// Variable name used when exact values are written out as text.
pub const ZETA: &str = "zeta";

#[derive(Debug)]
struct FieldData {
    conductor: u64,
    phi: usize,
    modulus: RatPoly,
    // reduced form of x^k for 0 <= k < max(N, 2φ - 1)
    powers: Vec<Vec<Rational>>,
}

/// The field Q(ζ_N). Cheap to clone; all scalars keep a handle to their field.
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    data: Arc<FieldData>,
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.data.conductor == other.data.conductor
    }
}

impl Eq for CyclotomicField {}

impl CyclotomicField {
    pub fn new(conductor: u64) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        let modulus = poly::to_rational(&poly::cyclotomic_polynomial(conductor));
        let phi = modulus.len() - 1;
        let table_len = (conductor as usize).max(2 * phi);
        let mut powers = Vec::with_capacity(table_len);
        let mut cur = vec![Rational::zero(); phi];
        cur[0] = Rational::one();
        for _ in 0..table_len {
            powers.push(cur.clone());
            // multiply by x and reduce with the monic modulus
            let carry = cur.pop().expect("phi >= 1");
            cur.insert(0, Rational::zero());
            if !carry.is_zero() {
                for (c, m) in cur.iter_mut().zip(&modulus) {
                    *c -= &carry * m;
                }
            }
        }
        CyclotomicField {
            data: Arc::new(FieldData { conductor, phi, modulus, powers }),
        }
    }

    /// Smallest conductor holding cos(2π/m), sin(2π/m) and i.
    pub fn for_dihedral(m: usize) -> Self {
        Self::new((m as u64).lcm(&4))
    }

    pub fn conductor(&self) -> u64 {
        self.data.conductor
    }

    /// φ(N), the number of stored coefficients.
    pub fn degree(&self) -> usize {
        self.data.phi
    }

    pub fn modulus(&self) -> &[Rational] {
        &self.data.modulus
    }

    pub fn zero(&self) -> CycloScalar {
        CycloScalar { field: self.clone(), coeffs: vec![Rational::zero(); self.data.phi] }
    }

    pub fn one(&self) -> CycloScalar {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, value: Rational) -> CycloScalar {
        let mut s = self.zero();
        s.coeffs[0] = value;
        s
    }

    pub fn from_int(&self, value: i64) -> CycloScalar {
        self.from_rational(Rational::from_integer(value.into()))
    }

    /// ζ_N^k for any integer k.
    pub fn zeta_pow(&self, k: i64) -> CycloScalar {
        let idx = k.rem_euclid(self.data.conductor as i64) as usize;
        CycloScalar { field: self.clone(), coeffs: self.data.powers[idx].clone() }
    }

    /// Builds a scalar from polynomial coefficients in ζ_N of any length.
    pub fn from_coefficients(&self, coeffs: &[Rational]) -> CycloScalar {
        let phi = self.data.phi;
        let mut out = vec![Rational::zero(); phi];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let red = if k < self.data.powers.len() {
                std::borrow::Cow::Borrowed(&self.data.powers[k])
            } else {
                let mut xk = vec![Rational::zero(); k + 1];
                xk[k] = Rational::one();
                let (_, mut r) = poly::rat_divrem(&xk, &self.data.modulus);
                r.resize(phi, Rational::zero());
                std::borrow::Cow::Owned(r)
            };
            for (o, r) in out.iter_mut().zip(red.iter()) {
                if !r.is_zero() {
                    *o += c * r;
                }
            }
        }
        CycloScalar { field: self.clone(), coeffs: out }
    }

    fn check_angle(&self, m: u64) -> Result<()> {
        if m == 0 || !self.data.conductor.is_multiple_of(m.lcm(&4)) {
            return Err(Error::ConductorTooSmall { conductor: self.data.conductor, m });
        }
        Ok(())
    }

    /// cos(2πk/m) = (ζ^{kN/m} + ζ^{-kN/m}) / 2.
    pub fn embed_cos(&self, k: i64, m: u64) -> Result<CycloScalar> {
        self.check_angle(m)?;
        let step = (self.data.conductor / m) as i64;
        let e = k.rem_euclid(m as i64) * step;
        let half = Rational::new(1.into(), 2.into());
        Ok(self.zeta_pow(e).add(&self.zeta_pow(-e)).scale(&half))
    }

    /// sin(2πk/m) = (ζ^{kN/m} - ζ^{-kN/m}) / (2i), with i = ζ^{N/4}.
    pub fn embed_sin(&self, k: i64, m: u64) -> Result<CycloScalar> {
        self.check_angle(m)?;
        let n = self.data.conductor as i64;
        let step = n / m as i64;
        let e = k.rem_euclid(m as i64) * step;
        // multiplying by 1/(2i) = -ζ^{N/4}/2 only shifts exponents
        let quarter = n / 4;
        let half = Rational::new(1.into(), 2.into());
        Ok(self.zeta_pow(quarter - e).sub(&self.zeta_pow(quarter + e)).scale(&half))
    }

    /// Parses the text form produced by `Display` for [`CycloScalar`].
    pub fn parse(&self, text: &str) -> Result<CycloScalar> {
        let coeffs = poly::parse(text, ZETA).map_err(Error::Parse)?;
        Ok(self.from_coefficients(&coeffs))
    }
}

/// An element of Q(ζ_N) in canonical form: exactly φ(N) rational
/// coefficients of the reduced polynomial in ζ_N.
#[derive(Clone)]
pub struct CycloScalar {
    field: CyclotomicField,
    coeffs: Vec<Rational>,
}

impl PartialEq for CycloScalar {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for CycloScalar {}

impl Hash for CycloScalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.conductor().hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloScalar[N={}]({})", self.field.conductor(), self)
    }
}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&poly::render(&self.coeffs, ZETA))
    }
}

impl CycloScalar {
    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn conductor(&self) -> u64 {
        self.field.conductor()
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Returns the value as a rational if it lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| &self.coeffs[0])
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::ConductorMismatch { left: self.conductor(), right: other.conductor() });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Scalar::add(self, other))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Scalar::sub(self, other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Scalar::mul(self, other))
    }

    pub fn checked_inv(&self) -> Result<Self> {
        Scalar::inv(self).ok_or(Error::DivisionByZero)
    }

    pub fn scale(&self, by: &Rational) -> Self {
        CycloScalar { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * by).collect() }
    }

    /// Complex conjugate, i.e. the automorphism ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        let mut out = self.field.zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let z = self.field.zeta_pow(-(k as i64));
            for (o, r) in out.coeffs.iter_mut().zip(z.coeffs.iter()) {
                if !r.is_zero() {
                    *o += c * r;
                }
            }
        }
        out
    }

    pub fn to_complex_float(&self) -> Complex64 {
        let n = self.field.conductor() as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let theta = 2.0 * std::f64::consts::PI * k as f64 / n;
                Complex64::from_polar(1.0, theta) * c.to_f64().unwrap_or(f64::NAN)
            })
            .sum()
    }
}

impl Scalar for CycloScalar {
    const MODE: ScalarMode = ScalarMode::Exact;

    fn zero_like(&self) -> Self {
        self.field.zero()
    }

    fn one_like(&self) -> Self {
        self.field.one()
    }

    fn add(&self, rhs: &Self) -> Self {
        debug_assert!(self.field == rhs.field);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        CycloScalar { field: self.field.clone(), coeffs }
    }

    fn sub(&self, rhs: &Self) -> Self {
        debug_assert!(self.field == rhs.field);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        CycloScalar { field: self.field.clone(), coeffs }
    }

    fn neg(&self) -> Self {
        CycloScalar { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    fn mul(&self, rhs: &Self) -> Self {
        debug_assert!(self.field == rhs.field);
        if let Some(r) = self.as_rational() {
            return rhs.scale(r);
        }
        if let Some(r) = rhs.as_rational() {
            return self.scale(r);
        }
        let data = &self.field.data;
        let mut prod = vec![Rational::zero(); 2 * data.phi - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let mut coeffs = prod;
        let high = coeffs.split_off(data.phi);
        for (k, c) in high.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, r) in coeffs.iter_mut().zip(&data.powers[data.phi + k]) {
                if !r.is_zero() {
                    *o += c * r;
                }
            }
        }
        CycloScalar { field: self.field.clone(), coeffs }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(self.field.from_rational(r.recip()));
        }
        let mut a = self.coeffs.clone();
        poly::trim(&mut a);
        let inv = poly::rat_inverse_mod(&a, &self.field.data.modulus)?;
        Some(self.field.from_coefficients(&inv))
    }

    fn conj(&self) -> Self {
        CycloScalar::conj(self)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn magnitude(&self) -> f64 {
        self.to_complex_float().norm()
    }

    fn same_domain(&self, other: &Self) -> bool {
        self.field == other.field
    }

    fn to_complex(&self) -> Complex64 {
        self.to_complex_float()
    }

    fn exact_string(&self) -> Option<String> {
        Some(self.to_string())
    }
}

impl ScalarField for CyclotomicField {
    type Elem = CycloScalar;

    fn mode(&self) -> ScalarMode {
        ScalarMode::Exact
    }

    fn conductor(&self) -> Option<u64> {
        Some(CyclotomicField::conductor(self))
    }

    fn zero(&self) -> CycloScalar {
        CyclotomicField::zero(self)
    }

    fn one(&self) -> CycloScalar {
        CyclotomicField::one(self)
    }

    fn from_int(&self, value: i64) -> CycloScalar {
        CyclotomicField::from_int(self, value)
    }

    fn cos_turn(&self, k: i64, m: u64) -> Result<CycloScalar> {
        self.embed_cos(k, m)
    }

    fn sin_turn(&self, k: i64, m: u64) -> Result<CycloScalar> {
        self.embed_sin(k, m)
    }
}
