//! Fixed-point solutions of the functional equations for `G`, `B` and `F`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::power::{BivariateSeries, UnivariateSeries};
use crate::error::{Error, Result};

/// Solves `x G^3 + G - G^2 + y (G - 1)^2 = 0` with `G = 1 + O(x)` up to
/// `x^order`, iterating `G <- 1 + (x G^3 + y (G - 1)^2) / G`.
///
/// Each pass fixes one more power of `x`; after `order + 1` passes a further
/// pass must leave the series unchanged.
pub fn solve_g(order: usize) -> Result<BivariateSeries> {
    let one = BivariateSeries::one(order);
    let x = BivariateSeries::x(order);
    let y = BivariateSeries::y(order);
    let step = |g: &BivariateSeries| {
        let cube = g.mul(g).mul(g);
        let g1 = g.sub(&one);
        let num = x.mul(&cube).add(&y.mul(&g1.mul(&g1)));
        one.add(&num.mul(&g.inverse()))
    };
    let mut g = one.clone();
    for _ in 0..=order {
        g = step(&g);
    }
    if step(&g) != g {
        return Err(Error::NoConvergence(order + 1));
    }
    Ok(g)
}

/// `B = (G - 1) / G`.
pub fn solve_b(order: usize) -> Result<BivariateSeries> {
    let g = solve_g(order)?;
    Ok(b_from_g(&g))
}

fn b_from_g(g: &BivariateSeries) -> BivariateSeries {
    g.sub(&BivariateSeries::one(g.order())).mul(&g.inverse())
}

/// Residuals of the four relations between `G` and `B`; each must vanish
/// identically up to the truncation order.
#[derive(Clone, Debug)]
pub struct Residuals {
    /// `G - 1 - x G^2 / (1 - y B)`
    pub g_recursion: BivariateSeries,
    /// `B - x G / (1 - y B)`
    pub b_recursion: BivariateSeries,
    /// `B G - (G - 1)`
    pub b_from_g: BivariateSeries,
    /// `x G^3 + G - G^2 + y (G - 1)^2`
    pub cubic: BivariateSeries,
}

impl Residuals {
    pub fn compute(order: usize) -> Result<Self> {
        let g = solve_g(order)?;
        let b = b_from_g(&g);
        let one = BivariateSeries::one(order);
        let x = BivariateSeries::x(order);
        let y = BivariateSeries::y(order);
        let denom_inv = one.sub(&y.mul(&b)).inverse();
        let g1 = g.sub(&one);
        Ok(Residuals {
            g_recursion: g1.sub(&x.mul(&g).mul(&g).mul(&denom_inv)),
            b_recursion: b.sub(&x.mul(&g).mul(&denom_inv)),
            b_from_g: b.mul(&g).sub(&g1),
            cubic: x.mul(&g).mul(&g).mul(&g).add(&g).sub(&g.mul(&g)).add(&y.mul(&g1.mul(&g1))),
        })
    }

    pub fn all_zero(&self) -> bool {
        self.g_recursion.is_zero() && self.b_recursion.is_zero() && self.b_from_g.is_zero() && self.cubic.is_zero()
    }
}

/// Solves `F = 1 + x F^2 / (1 - x F)` up to `x^order` by fixed-point
/// iteration.
pub fn solve_f(order: usize) -> Result<UnivariateSeries> {
    let one = UnivariateSeries::constant(order, 1);
    let step = |f: &UnivariateSeries| {
        let xf = f.shift_up();
        one.add(&xf.mul(f).mul(&one.sub(&xf).inverse()))
    };
    let mut f = one.clone();
    for _ in 0..=order {
        f = step(&f);
    }
    if step(&f) != f {
        return Err(Error::NoConvergence(order + 1));
    }
    Ok(f)
}

/// Expands `(1 + x - sqrt(1 - 6x + x^2)) / (4x)` up to `x^order`.
pub fn solve_f_sqrt(order: usize) -> Result<UnivariateSeries> {
    let inner = UnivariateSeries::from_coeffs(order + 1, &[1, -6, 1]);
    let numerator = UnivariateSeries::from_coeffs(order + 1, &[1, 1]).sub(&inner.sqrt());
    let quarter = BigRational::new(BigInt::from(1), BigInt::from(4));
    Ok(numerator.shift_down()?.scale(&quarter))
}
