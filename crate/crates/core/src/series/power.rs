//! Truncated power series with exact rational coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub(crate) fn to_integer(formula: &str, value: &BigRational) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegral { formula: formula.to_string(), value: value.to_string() })
    }
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Power series in `x` truncated after `x^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivariateSeries {
    coeffs: Vec<BigRational>,
}

impl UnivariateSeries {
    pub fn zero(order: usize) -> Self {
        UnivariateSeries { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn constant(order: usize, c: i64) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = rat(c);
        s
    }

    /// Series from integer coefficients, padded or cut to `order`.
    pub fn from_coeffs(order: usize, coeffs: &[i64]) -> Self {
        let mut s = Self::zero(order);
        for (k, &c) in coeffs.iter().enumerate().take(order + 1) {
            s.coeffs[k] = rat(c);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    /// All coefficients as integers; fails on the first non-integral one.
    pub fn integer_coeffs(&self, formula: &str) -> Result<Vec<BigInt>> {
        self.coeffs.iter().map(|c| to_integer(formula, c)).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        UnivariateSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        UnivariateSeries { coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        UnivariateSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (k, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + k] += a * b;
            }
        }
        out
    }

    /// Multiplication by `x`.
    pub fn shift_up(&self) -> Self {
        let mut out = Self::zero(self.order());
        for k in 1..=self.order() {
            out.coeffs[k] = self.coeffs[k - 1].clone();
        }
        out
    }

    /// Division by `x`; the constant term must vanish. Loses one order.
    pub fn shift_down(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonIntegral {
                formula: "division by x".into(),
                value: self.coeffs[0].to_string(),
            });
        }
        Ok(UnivariateSeries { coeffs: self.coeffs[1..].to_vec() })
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Self {
        let c0 = &self.coeffs[0];
        assert!(!c0.is_zero(), "series with zero constant term is not invertible");
        let inv0 = c0.recip();
        let mut out = Self::zero(self.order());
        out.coeffs[0] = inv0.clone();
        for k in 1..=self.order() {
            let mut acc = BigRational::zero();
            for i in 1..=k {
                acc += &self.coeffs[i] * &out.coeffs[k - i];
            }
            out.coeffs[k] = -(acc * &inv0);
        }
        out
    }

    /// Square root of a series with constant term 1.
    pub fn sqrt(&self) -> Self {
        assert!(self.coeffs[0].is_one(), "square root needs constant term 1");
        let two = rat(2);
        let mut out = Self::zero(self.order());
        out.coeffs[0] = BigRational::one();
        for k in 1..=self.order() {
            let mut acc = self.coeffs[k].clone();
            for i in 1..k {
                acc -= &out.coeffs[i] * &out.coeffs[k - i];
            }
            out.coeffs[k] = acc / &two;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// A polynomial in `y`, dense, without trailing zeros.
pub(crate) type YPoly = Vec<BigRational>;

fn trim(p: &mut YPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_add(a: &YPoly, b: &YPoly, sign: i64) -> YPoly {
    let mut out: YPoly = (0..a.len().max(b.len()))
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(k).cloned().unwrap_or_else(BigRational::zero);
            if sign >= 0 {
                x + y
            } else {
                x - y
            }
        })
        .collect();
    trim(&mut out);
    out
}

fn poly_mul(a: &YPoly, b: &YPoly) -> YPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (k, y) in b.iter().enumerate() {
            out[i + k] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Power series in `x` whose coefficients are polynomials in `y`,
/// truncated after `x^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    coeffs: Vec<YPoly>,
}

impl BivariateSeries {
    pub fn zero(order: usize) -> Self {
        BivariateSeries { coeffs: vec![Vec::new(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = vec![BigRational::one()];
        s
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = vec![BigRational::one()];
        }
        s
    }

    /// The series `y`.
    pub fn y(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = vec![BigRational::zero(), BigRational::one()];
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Exact coefficient of `x^n y^m`, zero past the truncation.
    pub fn coeff_rational(&self, n: usize, m: usize) -> BigRational {
        self.coeffs.get(n).and_then(|p| p.get(m)).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Integer coefficient of `x^n y^m`.
    pub fn coeff(&self, n: usize, m: usize) -> Result<BigInt> {
        to_integer(&format!("[x^{n} y^{m}]"), &self.coeff_rational(n, m))
    }

    /// Degree in `y` of the coefficient of `x^n` (0 for a zero coefficient).
    pub fn y_degree(&self, n: usize) -> usize {
        self.coeffs.get(n).map_or(0, |p| p.len().saturating_sub(1))
    }

    /// Substitutes `y = 1`.
    pub fn at_y_one(&self) -> UnivariateSeries {
        let mut out = UnivariateSeries::zero(self.order());
        for (k, p) in self.coeffs.iter().enumerate() {
            out.coeffs[k] = p.iter().fold(BigRational::zero(), |acc, c| acc + c);
        }
        out
    }

    /// Nonzero coefficients as `(n, m, value)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigRational)> {
        self.coeffs.iter().enumerate().flat_map(|(n, p)| {
            p.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(m, c)| (n, m, c))
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| poly_add(a, b, 1)).collect();
        BivariateSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| poly_add(a, b, -1)).collect();
        BivariateSeries { coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_empty() {
                continue;
            }
            for k in 0..=order - i {
                if other.coeffs[k].is_empty() {
                    continue;
                }
                let prod = poly_mul(&self.coeffs[i], &other.coeffs[k]);
                out.coeffs[i + k] = poly_add(&out.coeffs[i + k], &prod, 1);
            }
        }
        out
    }

    /// Multiplicative inverse; the `x^0` coefficient must be a nonzero
    /// constant in `y`.
    pub fn inverse(&self) -> Self {
        let c0 = &self.coeffs[0];
        assert!(c0.len() == 1, "x^0 coefficient must be a nonzero constant");
        let inv0 = c0[0].recip();
        let mut out = Self::zero(self.order());
        out.coeffs[0] = vec![inv0.clone()];
        for k in 1..=self.order() {
            let mut acc: YPoly = Vec::new();
            for i in 1..=k {
                acc = poly_add(&acc, &poly_mul(&self.coeffs[i], &out.coeffs[k - i]), 1);
            }
            let neg = -inv0.clone();
            let mut next: YPoly = acc.iter().map(|c| c * &neg).collect();
            trim(&mut next);
            out.coeffs[k] = next;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Vec::is_empty)
    }
}
