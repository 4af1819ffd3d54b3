//! Closed-form counting formulas, evaluated exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::power::to_integer;
use crate::error::Result;

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn ratio(num: BigInt, den: i64) -> BigRational {
    BigRational::new(num, BigInt::from(den))
}

fn sign(e: i64) -> BigInt {
    if e.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `C_{n,k} = binom(kn, n) / ((k-1)n + 1)`.
pub fn catalan_k(n: u64, k: u64) -> BigInt {
    assert!(k >= 2, "k-Catalan numbers need k >= 2");
    let (n, k) = (n as i64, k as i64);
    let num = binom(k * n, n);
    let den = BigInt::from((k - 1) * n + 1);
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Number of 12312-avoiding matchings on `[2n]` with exactly `m` crossings,
/// by the alternating closed sum over `i = n ..= 2n-1`.
///
/// `n = 0` returns the count for the empty matching.
pub fn crossing_refined_12312(n: u64, m: u64) -> Result<BigInt> {
    if n == 0 {
        return Ok(if m == 0 { BigInt::one() } else { BigInt::zero() });
    }
    let (n, m) = (n as i64, m as i64);
    let mut total = BigRational::zero();
    for i in n..=2 * n - 1 {
        let term = sign(n + m + i) * binom(i, n) * binom(3 * n, i + 1 + n) * binom(i - n, m);
        total += ratio(term, i);
    }
    to_integer(&format!("crossing_refined_12312({n},{m})"), &total)
}

/// Coefficients in `y` of `[x^n] G(x, y)`, from the Lagrange-inversion
/// expansion `1 + sum_i (1/i) sum_j binom(i,j) binom(3j, i+1+j) x^j (y-1)^(i-j)`.
///
/// For `x^n` only `j = n` contributes, and `binom(3n, i+1+n)` vanishes once
/// `i > 2n - 1`, so the outer sum is finite.
pub fn closed_g_polynomial(n: u64) -> Result<Vec<BigInt>> {
    let n = n as i64;
    let mut poly: Vec<BigRational> = vec![BigRational::zero(); n.max(1) as usize];
    if n == 0 {
        poly[0] = BigRational::one();
    }
    for i in n.max(1)..=2 * n - 1 {
        let weight = ratio(binom(i, n) * binom(3 * n, i + 1 + n), i);
        if weight.is_zero() {
            continue;
        }
        // (y - 1)^(i - n) = sum_m binom(i-n, m) (-1)^(i-n-m) y^m
        let e = i - n;
        for m in 0..=e {
            let c = binom(e, m) * sign(e - m);
            poly[m as usize] += &weight * BigRational::from_integer(c);
        }
    }
    let mut out = poly
        .iter()
        .enumerate()
        .map(|(m, c)| to_integer(&format!("closed_g_coeff({n},{m})"), c))
        .collect::<Result<Vec<_>>>()?;
    while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    Ok(out)
}

pub fn closed_g_coeff(n: u64, m: u64) -> Result<BigInt> {
    let poly = closed_g_polynomial(n)?;
    Ok(poly.get(m as usize).cloned().unwrap_or_else(BigInt::zero))
}

/// Checks `sum_{i=n}^{2n-1} ((-1)^(n+i)/i) binom(i,n) binom(3n,i+1+n) = binom(2n,n)/(n+1)`.
pub fn corollary_identity_check(n: u64) -> bool {
    let n = n as i64;
    let mut lhs = BigRational::zero();
    for i in n..=2 * n - 1 {
        lhs += ratio(sign(n + i) * binom(i, n) * binom(3 * n, i + 1 + n), i);
    }
    let rhs = ratio(binom(2 * n, n), n + 1);
    lhs == rhs
}

/// `[x^n] F(x)` by the binomial sum `(1/n) sum_{j=1}^{n} 2^(j-1) binom(n,j) binom(n,j-1)`;
/// `f_0 = 1`.
pub fn closed_f(n: u64) -> Result<BigInt> {
    if n == 0 {
        return Ok(BigInt::one());
    }
    let n = n as i64;
    let mut sum = BigInt::zero();
    for j in 1..=n {
        sum += (BigInt::one() << (j - 1) as usize) * binom(n, j) * binom(n, j - 1);
    }
    to_integer(&format!("closed_f({n})"), &ratio(sum, n))
}

/// `N(n, k) = (1/n) binom(n, k) binom(n, k+1)`: Dyck paths of semilength
/// `n` with `k` high peaks.
pub fn narayana(n: u64, k: u64) -> Result<BigInt> {
    assert!(n >= 1, "narayana needs n >= 1");
    let (n, k) = (n as i64, k as i64);
    to_integer(&format!("narayana({n},{k})"), &ratio(binom(n, k) * binom(n, k + 1), n))
}

/// Number of {12312, 121323}-avoiders on `[2n]` with exactly `m` crossings:
/// `(1/n) binom(n, m) binom(2n - m, n + 1)`.
pub fn refined_double(n: u64, m: u64) -> Result<BigInt> {
    assert!(n >= 1, "refined_double needs n >= 1");
    let (n, m) = (n as i64, m as i64);
    let value = ratio(binom(n, m) * binom(2 * n - m, n + 1), n);
    to_integer(&format!("refined_double({n},{m})"), &value)
}

/// Sum over `k` of `N(n, k) binom(k, m)`: Schröder paths with `m` high peaks
/// and no low peaks, counted through Dyck paths.
pub fn refined_double_by_narayana(n: u64, m: u64) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for k in 0..n {
        total += narayana(n, k)? * binom(k as i64, m as i64);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(6, 3), big(20));
        assert_eq!(binom(3, 4), big(0));
        assert_eq!(binom(3, -1), big(0));
        assert_eq!(binom(0, 0), big(1));
    }

    #[test]
    fn k_catalan_values() {
        assert_eq!(catalan_k(3, 3), big(12));
        for k in 2..6 {
            assert_eq!(catalan_k(1, k), big(1));
        }
        let catalan: Vec<BigInt> = (0..6).map(|n| catalan_k(n, 2)).collect();
        assert_eq!(catalan, [1, 1, 2, 5, 14, 42].map(big));
    }

    #[test]
    fn crossing_refinement_small() {
        assert_eq!(crossing_refined_12312(2, 1).unwrap(), big(1));
        let total: BigInt = (0..6).map(|m| crossing_refined_12312(3, m).unwrap()).sum();
        assert_eq!(total, big(12));
        for n in 1..8 {
            assert_eq!(crossing_refined_12312(n, 0).unwrap(), catalan_k(n, 2));
        }
    }

    #[test]
    fn closed_g_examples() {
        assert_eq!(closed_g_coeff(2, 1).unwrap(), big(1));
        assert_eq!(closed_g_coeff(0, 0).unwrap(), big(1));
        assert_eq!(closed_g_coeff(0, 3).unwrap(), big(0));
    }

    #[test]
    fn corollary_small() {
        assert!(corollary_identity_check(1));
        assert!(corollary_identity_check(2));
        assert!((1..=20).all(corollary_identity_check));
    }

    #[test]
    fn super_catalan_and_narayana() {
        let f: Vec<BigInt> = (0..6).map(|n| closed_f(n).unwrap()).collect();
        assert_eq!(f, [1, 1, 3, 11, 45, 197].map(big));
        assert_eq!(narayana(3, 1).unwrap(), big(3));
        assert_eq!(narayana(5, 0).unwrap(), big(1));
        assert_eq!(refined_double(2, 1).unwrap(), big(1));
        for n in 1..10 {
            for m in 0..n {
                assert_eq!(refined_double(n, m).unwrap(), refined_double_by_narayana(n, m).unwrap());
            }
        }
    }
}
