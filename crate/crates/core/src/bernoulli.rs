//! Indicator populations: moments of the sample proportion and unbiased
//! estimation of powers of the population proportion.
//!
//! With `Np` ones and `N(1-p)` zeros every raw moment is `p`, so
//!
//! ```text
//! E phat^r = n^{-r} sum_i a_{r,i}(N,n) (Np)^i,
//! a_{r,i}(N,n) = sum { lambda(pi) P(pi) : q(pi) = i },
//! ```
//!
//! and the triangular coefficient matrices satisfy their own inversion
//! principle `a_r(N,n)^{-1} = a_r(n,N)`, which turns the expansion into an
//! unbiased estimator of `p^r`.

use num_rational::BigRational;

use crate::carver::carver_lambda;
use crate::error::{Error, Result};
use crate::partition::{partition_function, partitions};
use crate::ratfunc::{brat, var_pow, RatFunc, Var};

/// Lower-triangular coefficient table `a_{i,j}` for `i, j in 1..=r`.
#[derive(Debug, Clone)]
pub struct ProportionTable {
    pub r: u32,
    entries: Vec<RatFunc>, // row-major, r x r, indices offset by one
}

impl ProportionTable {
    pub fn at(&self, i: u32, j: u32) -> &RatFunc {
        assert!(1 <= i && i <= self.r && 1 <= j && j <= self.r);
        &self.entries[((i - 1) * self.r + (j - 1)) as usize]
    }

    pub fn swap_orientation(&self) -> ProportionTable {
        ProportionTable {
            r: self.r,
            entries: self.entries.iter().map(|e| e.swap_vars()).collect(),
        }
    }

    /// Product, for the inversion check.
    pub fn mul(&self, other: &ProportionTable) -> ProportionTable {
        let r = self.r as usize;
        let mut entries = vec![RatFunc::zero(); r * r];
        for i in 0..r {
            for k in 0..r {
                if self.entries[i * r + k].is_zero() {
                    continue;
                }
                for j in 0..r {
                    if other.entries[k * r + j].is_zero() {
                        continue;
                    }
                    entries[i * r + j] = entries[i * r + j]
                        .add(&self.entries[i * r + k].mul(&other.entries[k * r + j]));
                }
            }
        }
        ProportionTable { r: self.r, entries }
    }

    pub fn is_identity(&self) -> bool {
        let r = self.r as usize;
        for i in 0..r {
            for j in 0..r {
                let e = &self.entries[i * r + j];
                if i == j && !e.is_one() {
                    return false;
                }
                if i != j && !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Build `a_{i,j}(N, n)` for `i, j <= r`.
pub fn proportion_table(r: u32) -> Result<ProportionTable> {
    if r == 0 || r > 6 {
        return Err(Error::domain(format!(
            "proportion tables are built for r in 1..=6, got {r}"
        )));
    }
    let mut entries = vec![RatFunc::zero(); (r * r) as usize];
    for i in 1..=r {
        for pi in partitions(i)? {
            let q = pi.parts_count();
            let lam = carver_lambda(&pi)?.as_ratfunc();
            let pf = BigRational::from_integer(partition_function(&pi).into());
            let idx = ((i - 1) * r + (q - 1)) as usize;
            entries[idx] = entries[idx].add(&lam.scale(&pf));
        }
    }
    Ok(ProportionTable { r, entries })
}

/// `E phat^r` as a polynomial identity: returns the coefficient of `(Np)^i`
/// including the `n^{-r}` prefactor, for `i = 1..=r`.
pub fn proportion_moment_coeffs(r: u32) -> Result<Vec<RatFunc>> {
    let table = proportion_table(r)?;
    let pre = var_pow(Var::SampleSize, -(r as i32));
    Ok((1..=r).map(|i| table.at(r, i).mul(&pre)).collect())
}

/// Evaluate the unbiased estimator of `p^r` from a sample with `successes`
/// ones out of `n`, drawn from a population of size `pop`.
pub fn proportion_power_ue(
    r: u32,
    successes: u64,
    n: u64,
    pop: u64,
) -> Result<BigRational> {
    if n == 0 || successes > n || n > pop {
        return Err(Error::domain("need 0 <= successes <= n <= N"));
    }
    let table = proportion_table(r)?.swap_orientation();
    let n0 = brat(n as i64);
    let pop0 = brat(pop as i64);
    // b_r(n, N, phat) = N^{-r} sum_i a_{r,i}(n,N) (n phat)^i, and n*phat is
    // the success count
    let mut acc = brat(0);
    let count = brat(successes as i64);
    let mut count_pow = brat(1);
    for i in 1..=r {
        count_pow *= &count;
        let coeff = table.at(r, i).eval(&n0, &pop0)?;
        acc += coeff * &count_pow;
    }
    let mut pop_pow = brat(1);
    for _ in 0..r {
        pop_pow *= &pop0;
    }
    Ok(acc / pop_pow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{check_expectation, OraclePopulation};
    use crate::partition::Partition;
    use num_traits::Zero;

    fn lam(s: &str) -> RatFunc {
        carver_lambda(&s.parse::<Partition>().unwrap())
            .unwrap()
            .as_ratfunc()
    }

    #[test]
    fn c_vector_fixtures() {
        // c_3 = (lambda_3, 3 lambda_12)
        let t = proportion_table(3).unwrap();
        assert_eq!(*t.at(3, 1), lam("3"));
        assert_eq!(*t.at(3, 2), lam("1 2").scale(&brat(3)));
        // diagonal a_{r,r} = lambda_{1^r} = e_r
        for r in 1..=5u32 {
            let t = proportion_table(r).unwrap();
            assert_eq!(*t.at(r, r), crate::ratfunc::e_j(r));
        }
    }

    #[test]
    fn c4_c5_fixtures() {
        // c_4 = (lambda_4, 4 lambda_13 + 3 lambda_22, 6 lambda_{1^2 2})
        let t = proportion_table(4).unwrap();
        assert_eq!(*t.at(4, 1), lam("4"));
        assert_eq!(
            *t.at(4, 2),
            lam("1 3").scale(&brat(4)).add(&lam("2^2").scale(&brat(3)))
        );
        assert_eq!(*t.at(4, 3), lam("1^2 2").scale(&brat(6)));
        // c_5 = (lambda_5, 5 lambda_14 + 10 lambda_23, 10 lambda_113 + 15 lambda_122, 10 lambda_{1^3 2})
        let t = proportion_table(5).unwrap();
        assert_eq!(
            *t.at(5, 2),
            lam("1 4").scale(&brat(5)).add(&lam("2 3").scale(&brat(10)))
        );
        assert_eq!(
            *t.at(5, 3),
            lam("1^2 3")
                .scale(&brat(10))
                .add(&lam("1 2^2").scale(&brat(15)))
        );
        assert_eq!(*t.at(5, 4), lam("1^3 2").scale(&brat(10)));
    }

    #[test]
    fn table_inversion_principle() {
        for r in 1..=6 {
            let t = proportion_table(r).unwrap();
            let prod = t.mul(&t.swap_orientation());
            assert!(prod.is_identity(), "a_{r}(N,n) a_{r}(n,N) != I");
        }
    }

    #[test]
    fn proportion_ue_oracle() {
        // population (1,1,0,0,0): p = 2/5; estimate p^2 over all C(5,2) samples
        let pop = OraclePopulation::from_ints(&[1, 1, 0, 0, 0]).unwrap();
        for (r, n) in [(1u32, 2usize), (2, 2), (2, 3), (3, 3)] {
            let claimed = {
                let p = BigRational::new(2.into(), 5.into());
                let mut acc = brat(1);
                for _ in 0..r {
                    acc *= &p;
                }
                acc
            };
            let rep = check_expectation(
                format!("p^{r} from indicators"),
                &pop,
                n,
                |sample| {
                    let successes = sample.iter().filter(|v| !v.is_zero()).count() as u64;
                    proportion_power_ue(r, successes, n as u64, 5)
                },
                claimed,
            )
            .unwrap();
            assert!(rep.is_equal(), "p^{r} at n={n}: {:?}", rep.difference());
        }
    }
}
