//! Moments and cumulants of the sampling distribution of sample moments, and
//! coefficient vectors for their unbiased estimators.
//!
//! For a partition `pi = 1^a 2^b ...` the sampling central moment is
//!
//! ```text
//! mu(pi) = E (Xbar - mu)^a (muhat_2 - E muhat_2)^b ...
//! ```
//!
//! a number depending on (n, N, F).  It expands over population central
//! products without unit parts; the expansion row is assembled from the
//! centered-sample-moment machinery behind the `C` matrices.  The sampling
//! cumulant `kappa(pi)` is the joint cumulant of the same variables, obtained
//! from the central rows by Moebius summation over singleton-free set
//! partitions.  Unbiased estimator coefficients follow by applying the
//! swapped central matrix: `D* = D C(n,N)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::matrices::{gamma_row, oriented_matrix, Family, Orientation};
use crate::moments::{mul_into, PartitionVec};
use crate::partition::{factorial, set_partitions, Partition};
use crate::ratfunc::{RatFunc, Var};

/// Expansion of the sampling central moment `mu(pi)` over population central
/// products (no unit parts).
pub fn sampling_central_row(pi: &Partition) -> Result<PartitionVec> {
    let r = pi.weight();
    if r > 6 {
        return Err(Error::domain(format!(
            "sampling-moment expansions are built for total order <= 6, got {r}"
        )));
    }
    let units = pi.unit_parts();
    let larger: Vec<(u32, u32)> = pi
        .multiplicities()
        .into_iter()
        .filter(|&(_, p)| p > 1)
        .map(|(m, p)| (p, m))
        .collect();

    // binomial expansion over the number j_k <= r_k of kept sample factors
    // per moment order k; the rest contribute (-E muhat_k) constants
    let mut row = PartitionVec::zero();
    let mut choice: Vec<u32> = larger.iter().map(|&(_, m)| m).collect();
    loop {
        let mut kept: Vec<u32> = Vec::new();
        let mut scalar = BigInt::one();
        let mut dropped: Option<PartitionVec> = None;
        for (idx, &(k, r_k)) in larger.iter().enumerate() {
            let j_k = choice[idx];
            scalar *= binom(r_k, j_k);
            if (r_k - j_k) % 2 == 1 {
                scalar = -scalar;
            }
            for _ in 0..j_k {
                kept.push(k);
            }
            if r_k > j_k {
                let mean_row = vec_from_map(gamma_row(0, &[k])?);
                dropped = mul_into(dropped, &mean_row.pow(r_k - j_k));
            }
        }
        // the all-dropped term has an empty expectation E[1] = 1
        let mut term = if units == 0 && kept.is_empty() {
            dropped.expect("nonempty partition leaves at least one factor")
        } else {
            let gamma = vec_from_map(gamma_row(units, &kept)?);
            match dropped {
                None => gamma,
                Some(d) => gamma.mul(&d),
            }
        };
        term = term.scale(&BigRational::from_integer(scalar));
        row = row.add(&term);

        // mixed-radix countdown: decrement the rightmost nonzero digit and
        // reset everything after it to its maximum
        let Some(idx) = choice.iter().rposition(|&c| c > 0) else {
            debug_assert!(row.is_homogeneous(r));
            return Ok(row);
        };
        choice[idx] -= 1;
        for (slot, &(_, m)) in choice.iter_mut().zip(larger.iter()).skip(idx + 1) {
            *slot = m;
        }
    }
}

/// Expansion of the sampling cumulant `kappa(pi)` (the joint cumulant of the
/// sample moments named by `pi`) over population central products.
pub fn sampling_cumulant_row(pi: &Partition) -> Result<PartitionVec> {
    let r = pi.weight();
    if r > 6 {
        return Err(Error::domain(format!(
            "sampling-cumulant expansions are built for total order <= 6, got {r}"
        )));
    }
    if pi.parts_count() == 1 {
        // the cumulant of a single variable of order >= 2 is its central
        // moment; of order 1 it is the mean
        return sampling_central_row(pi);
    }
    let slots: Vec<u32> = pi.parts().to_vec();
    let q = slots.len() as u32;
    let mut row = PartitionVec::zero();
    'outer: for sigma in set_partitions(q)? {
        let mut weight: BigInt = factorial(sigma.block_count() as u32 - 1).into();
        if (sigma.block_count() - 1) % 2 == 1 {
            weight = -weight;
        }
        let mut prod: Option<PartitionVec> = None;
        for block in sigma.blocks() {
            if block.len() == 1 {
                continue 'outer; // centered singleton blocks vanish
            }
            let shape = Partition::new(block.iter().map(|&i| slots[i]).collect())?;
            prod = mul_into(prod, &sampling_central_row(&shape)?);
        }
        let term = prod
            .expect("q >= 2 so sigma has at least one block")
            .scale(&BigRational::from_integer(weight));
        row = row.add(&term);
    }
    Ok(row)
}

/// Apply the swapped central matrix: the coefficients of the unbiased
/// estimator `sum D*_{pi'} muhat(pi')` for a target expanded as
/// `sum D_pi mu(pi)`.
pub fn unbiased_row(d_row: &PartitionVec, r: u32) -> Result<PartitionVec> {
    let c_swapped = oriented_matrix(Family::CentralProduct, r, Orientation::SamplePop)?;
    let mut out = PartitionVec::zero();
    for (pi, coeff) in d_row.iter() {
        if pi.weight() != r {
            return Err(Error::domain(format!(
                "row term {pi} is not a partition of {r}"
            )));
        }
        out = out.add(&c_swapped.row_vec(pi)?.scale_rf(coeff));
    }
    Ok(out)
}

/// Entrywise infinite-population limit of an estimator coefficient row.
pub fn row_limit_infinite(row: &PartitionVec) -> Result<PartitionVec> {
    let mut out = PartitionVec::zero();
    for (pi, coeff) in row.iter() {
        out.insert(pi.clone(), coeff.limit_inf(Var::PopSize)?);
    }
    Ok(out)
}

/// Unbiased-estimator coefficients for a sampling central moment or a product
/// of them, keyed by the partitions of the sample products.
#[derive(Debug, Clone)]
pub struct DStarVector {
    pub r: u32,
    pub coeffs: PartitionVec,
}

impl DStarVector {
    pub fn get(&self, pi: &Partition) -> RatFunc {
        self.coeffs.get(pi)
    }
}

fn vec_from_map(map: std::collections::BTreeMap<Partition, RatFunc>) -> PartitionVec {
    let mut v = PartitionVec::zero();
    for (pi, c) in map {
        v.insert(pi, c);
    }
    v
}

fn binom(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::{expectation_matrix, Family};
    use crate::ratfunc::parse_ratfunc;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn rf(s: &str) -> RatFunc {
        parse_ratfunc(s).unwrap()
    }

    #[test]
    fn variance_of_mean() {
        // mu(1^2) = Var Xbar = C_{1^2,2} mu_2
        let row = sampling_central_row(&p("1^2")).unwrap();
        assert_eq!(row.len(), 1);
        assert_eq!(row.get(&p("2")), rf("(N-n)/(n*(N-1))"));
        // its estimator: D*_2 = (N-n) N^-1 (n-1)^-1
        let u = unbiased_row(&row, 2).unwrap();
        assert_eq!(u.get(&p("2")), rf("(N-n)/(N*(n-1))"));
        assert_eq!(u.get(&p("1^2")), RatFunc::zero());
    }

    #[test]
    fn variance_of_sample_variance_row() {
        // mu(2^2) = Var muhat_2 = M_{2^2,4} mu_4 + (C_{2^2,2^2} - C_{2,2}^2) mu_2^2
        let row = sampling_central_row(&p("2^2")).unwrap();
        let c4 = expectation_matrix(Family::CentralProduct, 4).unwrap();
        let c2 = expectation_matrix(Family::CentralProduct, 2).unwrap();
        let c22 = c2.entry(&p("2"), &p("2")).unwrap().clone();
        assert_eq!(
            row.get(&p("4")),
            c4.entry(&p("2^2"), &p("4")).unwrap().clone()
        );
        let expected = c4
            .entry(&p("2^2"), &p("2^2"))
            .unwrap()
            .sub(&c22.mul(&c22));
        assert_eq!(row.get(&p("2^2")), expected);
    }

    #[test]
    fn third_sampling_moment_of_mean() {
        // mu(1^3) expands as C_{1^3,3} mu_3, and D*_3 = (N-2n)(N-n) N^-2 (n-1)_2^-1
        let row = sampling_central_row(&p("1^3")).unwrap();
        assert_eq!(row.len(), 1);
        let u = unbiased_row(&row, 3).unwrap();
        assert_eq!(u.get(&p("3")), rf("(N-2*n)*(N-n)*N^-2*(n-1)_2^-1"));
    }

    #[test]
    fn sampling_cumulant_of_fourth_order_mean() {
        // kappa(1^4) row: K_{1^4,2^2} = C_{1^4,2^2} - 3 C_{1^2,2}^2
        let row = sampling_cumulant_row(&p("1^4")).unwrap();
        let c4 = expectation_matrix(Family::CentralProduct, 4).unwrap();
        let c2 = expectation_matrix(Family::CentralProduct, 2).unwrap();
        assert_eq!(
            row.get(&p("4")),
            c4.entry(&p("1^4"), &p("4")).unwrap().clone()
        );
        let c12_2 = c2.entry(&p("1^2"), &p("2")).unwrap().clone();
        let expected = c4
            .entry(&p("1^4"), &p("2^2"))
            .unwrap()
            .sub(&c12_2.mul(&c12_2).scale(&crate::ratfunc::brat(3)));
        assert_eq!(row.get(&p("2^2")), expected);
    }

    #[test]
    fn covariance_structure() {
        // mu(23) = Cov(muhat_2, muhat_3) = E muhat_2 muhat_3 - E muhat_2 E muhat_3
        let row = sampling_central_row(&p("2 3")).unwrap();
        let c5 = expectation_matrix(Family::CentralProduct, 5).unwrap();
        let c2 = expectation_matrix(Family::CentralProduct, 2).unwrap();
        let c3 = expectation_matrix(Family::CentralProduct, 3).unwrap();
        let expected = c5.entry(&p("2 3"), &p("2 3")).unwrap().sub(
            &c2.entry(&p("2"), &p("2"))
                .unwrap()
                .mul(c3.entry(&p("3"), &p("3")).unwrap()),
        );
        assert_eq!(row.get(&p("2 3")), expected);
        assert_eq!(
            row.get(&p("5")),
            c5.entry(&p("2 3"), &p("5")).unwrap().clone()
        );
    }
}
