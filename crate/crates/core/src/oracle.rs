//! Ground truth by exhaustive enumeration: the exact average of any statistic
//! over all C(N, n) without-replacement samples of a small population.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ratfunc::brat;

/// Populations are capped so the worst case (order-6 statistics over C(9,4)
/// subsets) stays trivially fast and accidental blowups are rejected.
pub const MAX_ORACLE_POPULATION: usize = 9;

#[derive(Debug, Clone)]
pub struct OraclePopulation {
    values: Vec<BigRational>,
}

impl OraclePopulation {
    pub fn new(values: Vec<BigRational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::domain("population must be nonempty"));
        }
        if values.len() > MAX_ORACLE_POPULATION {
            return Err(Error::domain(format!(
                "oracle population capped at {MAX_ORACLE_POPULATION} values, got {}",
                values.len()
            )));
        }
        Ok(OraclePopulation { values })
    }

    pub fn from_ints(values: &[i64]) -> Result<Self> {
        OraclePopulation::new(values.iter().map(|&v| brat(v)).collect())
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn size(&self) -> usize {
        self.values.len()
    }

    /// Visit every n-subset in lexicographic index order.
    pub fn for_each_sample<F: FnMut(&[BigRational])>(&self, n: usize, mut f: F) -> Result<()> {
        let len = self.values.len();
        if n == 0 || n > len {
            return Err(Error::domain(format!(
                "sample size must be in 1..={len}, got {n}"
            )));
        }
        let mut idx: Vec<usize> = (0..n).collect();
        let mut buf: Vec<BigRational> = idx.iter().map(|&i| self.values[i].clone()).collect();
        loop {
            f(&buf);
            // next combination
            let mut i = n;
            loop {
                if i == 0 {
                    return Ok(());
                }
                i -= 1;
                if idx[i] != i + len - n {
                    break;
                }
                if i == 0 {
                    return Ok(());
                }
            }
            idx[i] += 1;
            for j in i + 1..n {
                idx[j] = idx[j - 1] + 1;
            }
            for j in i..n {
                buf[j] = self.values[idx[j]].clone();
            }
        }
    }

    pub fn sample_count(&self, n: usize) -> BigUint {
        binomial(self.values.len() as u64, n as u64)
    }
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Exact expectation of `stat` over all C(N, n) samples.
pub fn expectation<F>(pop: &OraclePopulation, n: usize, mut stat: F) -> Result<BigRational>
where
    F: FnMut(&[BigRational]) -> Result<BigRational>,
{
    let mut sum = brat(0);
    let mut err = None;
    pop.for_each_sample(n, |sample| {
        if err.is_some() {
            return;
        }
        match stat(sample) {
            Ok(v) => sum += v,
            Err(e) => err = Some(e),
        }
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    let count = pop.sample_count(n);
    Ok(sum / BigRational::from_integer(count.into()))
}

/// Outcome of comparing an exact expectation against a claimed value.
#[derive(Debug, Clone)]
pub struct OracleReport {
    pub statistic: String,
    pub expectation: BigRational,
    pub claimed: BigRational,
}

impl OracleReport {
    pub fn is_equal(&self) -> bool {
        self.expectation == self.claimed
    }

    pub fn difference(&self) -> BigRational {
        self.expectation.clone() - self.claimed.clone()
    }
}

/// Compare E[stat] with `claimed`, exactly.
pub fn check_expectation<F>(
    label: impl Into<String>,
    pop: &OraclePopulation,
    n: usize,
    stat: F,
    claimed: BigRational,
) -> Result<OracleReport>
where
    F: FnMut(&[BigRational]) -> Result<BigRational>,
{
    Ok(OracleReport {
        statistic: label.into(),
        expectation: expectation(pop, n, stat)?,
        claimed,
    })
}

/// Forward identity check: the expectation of a sample moment product equals
/// the matrix row applied to the population vector, exactly.
pub fn verify_expectation_row(
    family: crate::matrices::Family,
    r: u32,
    pi: &crate::partition::Partition,
    pop: &OraclePopulation,
    n: usize,
) -> Result<OracleReport> {
    use crate::data::Dataset;
    use crate::matrices::Family;

    let m = crate::matrices::expectation_matrix(family, r)?;
    let row = m.row_vec(pi)?;
    let popd = Dataset::population(pop.values().to_vec())?;
    let n0 = brat(n as i64);
    let pop0 = brat(pop.size() as i64);

    let pop_stat = |pi: &crate::partition::Partition, d: &Dataset| -> Result<BigRational> {
        Ok(match family {
            Family::RawProduct => d.raw_product(pi),
            Family::CentralProduct => d.central_product(pi),
            Family::CumulantProduct => {
                let w = crate::moments::cumulant_product_in_central(pi);
                let mut acc = brat(0);
                for (p, c) in w.iter() {
                    acc += c.eval(&n0, &pop0)? * d.central_product(p);
                }
                acc
            }
            Family::PowerSum => {
                return Err(Error::domain(
                    "power-sum rows are checked through the raw-product family",
                ))
            }
        })
    };

    let mut claimed = brat(0);
    for (col, coeff) in row.iter() {
        claimed += coeff.eval(&n0, &pop0)? * pop_stat(col, &popd)?;
    }
    check_expectation(
        format!("E of sample {:?}({pi}) row", family),
        pop,
        n,
        |sample| {
            let d = Dataset::population(sample.to_vec())?;
            pop_stat(pi, &d)
        },
        claimed,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forward_rows_match_oracle() {
        use crate::matrices::Family;
        use crate::partition::Partition;
        let pop = OraclePopulation::from_ints(&[0, 1, 2, 3]).unwrap();
        for (fam, pi, n) in [
            (Family::RawProduct, "1^3", 2),
            (Family::CentralProduct, "2", 2),
            (Family::CentralProduct, "1 2", 3),
            (Family::CumulantProduct, "2^2", 3),
        ] {
            let pi: Partition = pi.parse().unwrap();
            let rep = verify_expectation_row(fam, pi.weight(), &pi, &pop, n).unwrap();
            assert!(
                rep.is_equal(),
                "{:?} row {pi} at n={n}: {} vs {}",
                fam,
                rep.expectation,
                rep.claimed
            );
        }
    }

    #[test]
    fn sample_mean_is_unbiased() {
        let pop = OraclePopulation::from_ints(&[0, 1, 2, 5, -3]).unwrap();
        let mean: BigRational = pop.values().iter().sum::<BigRational>() / brat(5);
        for n in 1..=5 {
            let e = expectation(&pop, n, |s| {
                Ok(s.iter().sum::<BigRational>() / brat(n as i64))
            })
            .unwrap();
            assert_eq!(e, mean);
        }
    }

    #[test]
    fn sample_variance_example() {
        // population (0,1,2) at n=2: subsets give mu^_2 of 1/4, 1, 1/4
        let pop = OraclePopulation::from_ints(&[0, 1, 2]).unwrap();
        let e = expectation(&pop, 2, |s| {
            let mean = s.iter().sum::<BigRational>() / brat(2);
            let v = s
                .iter()
                .map(|x| {
                    let d = x - &mean;
                    &d * &d
                })
                .sum::<BigRational>()
                / brat(2);
            Ok(v)
        })
        .unwrap();
        assert_eq!(e, BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn constant_statistic() {
        let pop = OraclePopulation::from_ints(&[3, 1, 4, 1, 5]).unwrap();
        let e = expectation(&pop, 3, |_| Ok(brat(7))).unwrap();
        assert_eq!(e, brat(7));
    }

    #[test]
    fn enumeration_counts() {
        let pop = OraclePopulation::from_ints(&[1, 2, 3, 4, 5, 6, 7, 8, 9]).unwrap();
        let mut count = 0u64;
        pop.for_each_sample(4, |_| count += 1).unwrap();
        assert_eq!(count, 126);
        assert_eq!(pop.sample_count(4), BigUint::from(126u32));
    }

    #[test]
    fn population_caps() {
        assert!(OraclePopulation::from_ints(&[1; 10]).is_err());
        assert!(OraclePopulation::from_ints(&[]).is_err());
        let pop = OraclePopulation::from_ints(&[1, 2]).unwrap();
        assert!(pop.for_each_sample(3, |_| {}).is_err());
        assert!(pop.for_each_sample(0, |_| {}).is_err());
    }
}
