//! Unbiased estimators of products of population cumulants: polykays.
//!
//! A cumulant product `kappa(pi) = kappa_{pi_1} kappa_{pi_2} ...` is a
//! constant vector over the central products of its total order: `a(pi)` on
//! the no-unit basis when `pi` has no unit parts, otherwise `b(pi)` on the
//! full basis.  The estimator row is the vector times the swapped central
//! matrix; its infinite-population limit reproduces the classical
//! k-statistics.

use crate::dstar::{row_limit_infinite, unbiased_row};
use crate::error::{Error, Result};
use crate::moments::{cumulant_product_in_central, PartitionVec};
use crate::partition::Partition;
use crate::ratfunc::RatFunc;

/// Which population-size regime the estimator targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Finite,
    InfinitePopulation,
}

#[derive(Debug, Clone)]
pub struct Polykay {
    /// The cumulant orders, one part per factor.
    pub target: Partition,
    /// Constant expansion of the cumulant product over central products.
    pub weights: PartitionVec,
    /// Coefficients of the unbiased estimator on sample central products.
    pub estimator: PartitionVec,
    pub regime: Regime,
}

impl Polykay {
    /// True when the weight vector avoids unit parts (the `a(pi)` case).
    pub fn is_minus_supported(&self) -> bool {
        self.weights.iter().all(|(pi, _)| !pi.has_unit_part())
    }

    pub fn weight(&self, pi: &Partition) -> RatFunc {
        self.weights.get(pi)
    }

    pub fn estimator_coeff(&self, pi: &Partition) -> RatFunc {
        self.estimator.get(pi)
    }
}

/// Build the polykay for the cumulant product named by `pi`.
pub fn polykay(pi: &Partition, regime: Regime) -> Result<Polykay> {
    let r = pi.weight();
    if r > 6 {
        return Err(Error::domain(format!(
            "polykays are cataloged to total order 6, got {r}"
        )));
    }
    let weights = cumulant_product_in_central(pi);
    let estimator = {
        let row = unbiased_row(&weights, r)?;
        match regime {
            Regime::Finite => row,
            Regime::InfinitePopulation => row_limit_infinite(&row)?,
        }
    };
    Ok(Polykay {
        target: pi.clone(),
        weights,
        estimator,
        regime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::Dataset;
    use crate::estimate::{ue, Factor, TargetExpr};
    use crate::oracle::OraclePopulation;
    use crate::ratfunc::{brat, parse_ratfunc};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn kappa4_weights() {
        let k = polykay(&p("4"), Regime::Finite).unwrap();
        assert!(k.is_minus_supported());
        assert_eq!(k.weight(&p("4")), RatFunc::one());
        assert_eq!(k.weight(&p("2^2")), RatFunc::from_int(-3));
    }

    #[test]
    fn kappa5_weights() {
        let k = polykay(&p("5"), Regime::Finite).unwrap();
        assert_eq!(k.weight(&p("5")), RatFunc::one());
        assert_eq!(k.weight(&p("2 3")), RatFunc::from_int(-10));
    }

    #[test]
    fn kappa2_estimator_is_single_entry() {
        // kappa_2 = mu_2: the row is C_{2,2}(n,N) alone
        let k = polykay(&p("2"), Regime::Finite).unwrap();
        assert_eq!(
            k.estimator_coeff(&p("2")),
            parse_ratfunc("n*(N-1)/(N*(n-1))").unwrap()
        );
        assert!(k.estimator_coeff(&p("1^2")).is_zero());
    }

    #[test]
    fn infinite_kappa4_matches_k_statistic() {
        // k_4 = n^2 [(n+1) muhat_4 - 3(n-1) muhat_2^2] / (n-1)_3
        let k = polykay(&p("4"), Regime::InfinitePopulation).unwrap();
        assert_eq!(
            k.estimator_coeff(&p("4")),
            parse_ratfunc("n^2*(n+1)*(n-1)_3^-1").unwrap()
        );
        assert_eq!(
            k.estimator_coeff(&p("2^2")),
            parse_ratfunc("-3*n^2*(n-1)*(n-1)_3^-1").unwrap()
        );
    }

    #[test]
    fn infinite_kappa23_matches_classical_k_statistics() {
        // k_2 = n/(n-1) muhat_2, k_3 = n^2/((n-1)(n-2)) muhat_3
        let k2 = polykay(&p("2"), Regime::InfinitePopulation).unwrap();
        assert_eq!(
            k2.estimator_coeff(&p("2")),
            parse_ratfunc("n/(n-1)").unwrap()
        );
        let k3 = polykay(&p("3"), Regime::InfinitePopulation).unwrap();
        assert_eq!(
            k3.estimator_coeff(&p("3")),
            parse_ratfunc("n^2*(n-1)_2^-1").unwrap()
        );
    }

    #[test]
    fn polykay_oracle_unbiased() {
        let pop = OraclePopulation::from_ints(&[0, 2, 3, 5, 7, 1]).unwrap();
        for (pi, n) in [("4", 4), ("2^2", 4), ("2 3", 5)] {
            let t = TargetExpr::new(vec![Factor::Cumulant(p(pi))]).unwrap();
            let rep = crate::estimate::verify_unbiased(&t, &pop, n).unwrap();
            assert!(rep.is_equal(), "kappa({pi}) at n={n}");
        }
    }

    #[test]
    fn polykay_estimator_agrees_with_generic_pipeline() {
        let d = Dataset::sample(vec![brat(0), brat(1), brat(3), brat(6), brat(2)], 9).unwrap();
        let k = polykay(&p("2^2"), Regime::Finite).unwrap();
        let mut direct = brat(0);
        for (pi, c) in k.estimator.iter() {
            direct += c.eval(&brat(5), &brat(9)).unwrap() * d.central_product(pi);
        }
        let t = TargetExpr::new(vec![Factor::Cumulant(p("2^2"))]).unwrap();
        assert_eq!(direct, ue(&t, &d).unwrap());
    }
}
