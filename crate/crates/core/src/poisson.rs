//! Count-distribution example: unbiased estimation of powers of a Poisson
//! rate from sample moments, in the infinite-population regime.
//!
//! Raw moments of a Poisson variable are Stirling polynomials in the rate:
//! `m_i = sum_k S(i,k) rate^k`.  Two estimator routes are built and verified
//! symbolically: inverting the Stirling triangle on the raw-moment vector,
//! and solving the triangular system satisfied by expectations of powers of
//! the sample mean.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrices::{expectation_matrix, Family};
use crate::partition::{partitions, Partition};
use crate::ratfunc::{RatFunc, Var};

/// Stirling numbers of the second kind by the triangle recurrence.
pub fn stirling2(i: u32, k: u32) -> BigInt {
    if k == 0 {
        return if i == 0 { BigInt::one() } else { BigInt::zero() };
    }
    if k > i {
        return BigInt::zero();
    }
    let mut row: Vec<BigInt> = vec![BigInt::one()]; // S(0, 0)
    for n in 1..=i {
        let mut next = vec![BigInt::zero(); n as usize + 1];
        for (j, item) in next.iter_mut().enumerate().skip(1) {
            let carry = if j <= (n - 1) as usize {
                BigInt::from(j as u64) * &row[j]
            } else {
                BigInt::zero()
            };
            let up = if j - 1 < row.len() {
                row[j - 1].clone()
            } else {
                BigInt::zero()
            };
            *item = up + carry;
        }
        row = next;
    }
    row[k as usize].clone()
}

/// Raw moment `m_p` as a polynomial in the rate; index = power of the rate.
fn raw_moment_rate_poly(p: u32) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); p as usize + 1];
    for k in 1..=p {
        out[k as usize] = BigRational::from_integer(stirling2(p, k));
    }
    out
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Coefficient rows of the unbiased estimator of `rate^k` on the raw sample
/// moments, by inverting the Stirling triangle: row `k` gives the weights of
/// `mhat_1 .. mhat_r`.
pub fn rate_power_ue_stirling(r: u32) -> Result<Vec<Vec<BigRational>>> {
    if r == 0 || r > 6 {
        return Err(Error::domain(format!(
            "rate estimators are built for r in 1..=6, got {r}"
        )));
    }
    let rr = r as usize;
    // alpha[i][k] = S(i+1, k+1), lower triangular with unit diagonal
    let alpha: Vec<Vec<BigRational>> = (1..=r)
        .map(|i| {
            (1..=r)
                .map(|k| BigRational::from_integer(stirling2(i, k)))
                .collect()
        })
        .collect();
    // invert by forward substitution
    let mut inv = vec![vec![BigRational::zero(); rr]; rr];
    for k in 0..rr {
        inv[k][k] = BigRational::one();
        for i in k + 1..rr {
            let mut acc = BigRational::zero();
            for (m, inv_row) in inv.iter().enumerate().take(i).skip(k) {
                acc += &alpha[i][m] * &inv_row[k];
            }
            inv[i][k] = -acc; // diagonal of alpha is 1
        }
    }
    // rate^k = sum_i inv[k][i] m_i: row k of the inverse
    Ok(inv)
}

/// `E mhat_1^j` at infinite population as a polynomial in the rate with
/// coefficients rational in `n`: entry `i` multiplies `rate^i`.
pub fn mean_power_expectation(j: u32) -> Result<Vec<RatFunc>> {
    if j == 0 || j > 6 {
        return Err(Error::domain("mean powers supported for 1..=6"));
    }
    let b = expectation_matrix(Family::RawProduct, j)?;
    let row = Partition::new(vec![1; j as usize])?;
    let mut coeffs = vec![RatFunc::zero(); j as usize + 1];
    for col in partitions(j)? {
        let entry = b.entry(&row, &col)?.clone();
        if entry.is_zero() {
            continue;
        }
        // m(col) as a rate polynomial
        let mut poly = vec![BigRational::one()];
        for &p in col.parts() {
            poly = poly_mul(&poly, &raw_moment_rate_poly(p));
        }
        for (i, c) in poly.iter().enumerate() {
            if !c.is_zero() {
                coeffs[i] = coeffs[i].add(&entry.scale(c));
            }
        }
    }
    // infinite-population limit, coefficientwise
    coeffs
        .into_iter()
        .map(|c| c.limit_inf(Var::PopSize))
        .collect()
}

/// Unbiased estimator of `rate^r` as a combination of powers of the sample
/// mean; entry `j` (1-based) multiplies `mhat_1^j`.
#[derive(Debug, Clone)]
pub struct MeanPowerEstimator {
    pub r: u32,
    pub coeffs: Vec<RatFunc>,
}

/// Estimators of `rate^1 .. rate^r` built from products of the sample mean by
/// triangular elimination of the lower rate powers.
pub fn rate_power_ue_products(r: u32) -> Result<Vec<MeanPowerEstimator>> {
    if r == 0 || r > 6 {
        return Err(Error::domain("rate estimators are built for r in 1..=6"));
    }
    let mut out: Vec<MeanPowerEstimator> = Vec::new();
    for j in 1..=r {
        let expect = mean_power_expectation(j)?; // c_{j,i}: coefficient of rate^i
        let mut coeffs = vec![RatFunc::zero(); r as usize + 1];
        coeffs[j as usize] = RatFunc::one(); // start from mhat_1^j
        for i in 1..j {
            // subtract c_{j,i} * (estimator of rate^i)
            let c = &expect[i as usize];
            if c.is_zero() {
                continue;
            }
            let prev = &out[i as usize - 1];
            for (t, w) in prev.coeffs.iter().enumerate() {
                if !w.is_zero() {
                    coeffs[t] = coeffs[t].sub(&c.mul(w));
                }
            }
        }
        let lead = expect[j as usize].recip()?;
        for c in coeffs.iter_mut() {
            *c = c.mul(&lead);
        }
        out.push(MeanPowerEstimator { r: j, coeffs });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::parse_ratfunc;

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(2, 1), BigInt::from(1));
        assert_eq!(stirling2(2, 2), BigInt::from(1));
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(6, 3), BigInt::from(90));
    }

    #[test]
    fn stirling_route_is_exact_inverse() {
        // substituting m_i = sum_k S(i,k) rate^k must give rate^k exactly
        let rows = rate_power_ue_stirling(5).unwrap();
        for (k, row) in rows.iter().enumerate() {
            let mut poly = vec![BigRational::zero(); 6];
            for (i, w) in row.iter().enumerate() {
                for t in 1..=(i + 1) {
                    poly[t] += w * BigRational::from_integer(stirling2(i as u32 + 1, t as u32));
                }
            }
            for (t, c) in poly.iter().enumerate() {
                let expected = if t == k + 1 {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
                assert_eq!(*c, expected, "rate^{} coefficient {t}", k + 1);
            }
        }
    }

    #[test]
    fn mean_square_expectation() {
        // E mhat_1^2 = rate/n + rate^2 at infinite population
        let c = mean_power_expectation(2).unwrap();
        assert!(c[0].is_zero());
        assert_eq!(c[1], parse_ratfunc("1/n").unwrap());
        assert_eq!(c[2], RatFunc::one());
    }

    #[test]
    fn product_route_reproduces_worked_estimator() {
        // estimator of rate^2 is mhat_1^2 - mhat_1/n
        let ests = rate_power_ue_products(2).unwrap();
        let e2 = &ests[1];
        assert_eq!(e2.coeffs[2], RatFunc::one());
        assert_eq!(e2.coeffs[1], parse_ratfunc("-1/n").unwrap());
    }

    #[test]
    fn product_route_symbolically_unbiased() {
        // E theta^_r = sum_t w_t E mhat_1^t must equal rate^r exactly
        let r = 5;
        let ests = rate_power_ue_products(r).unwrap();
        let expects: Vec<Vec<RatFunc>> = (1..=r)
            .map(|j| mean_power_expectation(j).unwrap())
            .collect();
        for est in &ests {
            let mut rate_poly = vec![RatFunc::zero(); r as usize + 1];
            for (t, w) in est.coeffs.iter().enumerate() {
                if t == 0 || w.is_zero() {
                    continue;
                }
                for (i, c) in expects[t - 1].iter().enumerate() {
                    if !c.is_zero() {
                        rate_poly[i] = rate_poly[i].add(&w.mul(c));
                    }
                }
            }
            for (i, c) in rate_poly.iter().enumerate() {
                let expected = if i == est.r as usize {
                    RatFunc::one()
                } else {
                    RatFunc::zero()
                };
                assert_eq!(*c, expected, "rate^{i} term of estimator {}", est.r);
            }
        }
    }

    #[test]
    fn moment_difference_estimator() {
        // mhat_2 - mhat_1 is also unbiased for rate^2: E mhat_2 - E mhat_1 =
        // (rate + rate^2) - rate
        let m2 = raw_moment_rate_poly(2);
        assert_eq!(m2[1], BigRational::one());
        assert_eq!(m2[2], BigRational::one());
    }
}
