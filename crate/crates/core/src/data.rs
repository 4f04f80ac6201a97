//! Datasets of exact rationals and their moment vectors.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};
use crate::ratfunc::brat;

/// Where the data sits relative to the estimation problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// A without-replacement sample from a finite population of given size.
    Sample { population_size: u64 },
    /// A sample from an infinite population (the limit mode).
    SampleInfinite,
    /// The data is the whole population.
    Population,
}

#[derive(Debug, Clone)]
pub struct Dataset {
    values: Vec<BigRational>,
    role: Role,
}

impl Dataset {
    pub fn new(values: Vec<BigRational>, role: Role) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::domain("dataset must be nonempty"));
        }
        if let Role::Sample { population_size } = role {
            if (values.len() as u64) > population_size {
                return Err(Error::domain(format!(
                    "sample of {} exceeds population size {population_size}",
                    values.len()
                )));
            }
        }
        Ok(Dataset { values, role })
    }

    pub fn population(values: Vec<BigRational>) -> Result<Self> {
        Dataset::new(values, Role::Population)
    }

    pub fn sample(values: Vec<BigRational>, population_size: u64) -> Result<Self> {
        Dataset::new(values, Role::Sample { population_size })
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn mean(&self) -> BigRational {
        self.values.iter().sum::<BigRational>() / brat(self.values.len() as i64)
    }

    /// Raw moment `n^{-1} sum x_i^k`; `k = 0` gives 1.
    pub fn raw_moment(&self, k: u32) -> BigRational {
        let n = brat(self.values.len() as i64);
        self.values.iter().map(|x| pow_rat(x, k)).sum::<BigRational>() / n
    }

    /// Central moment about the dataset's own mean.
    pub fn central_moment(&self, k: u32) -> BigRational {
        let mean = self.mean();
        let n = brat(self.values.len() as i64);
        self.values
            .iter()
            .map(|x| pow_rat(&(x - &mean), k))
            .sum::<BigRational>()
            / n
    }

    /// Product over parts: unit parts are mean factors, so
    /// `mu^(1^2 2) = mean^2 * central_moment(2)`.
    pub fn central_product(&self, pi: &Partition) -> BigRational {
        let mut acc = brat(1);
        for &p in pi.parts() {
            let f = if p == 1 {
                self.mean()
            } else {
                self.central_moment(p)
            };
            acc *= f;
        }
        acc
    }

    /// Product over parts of raw moments.
    pub fn raw_product(&self, pi: &Partition) -> BigRational {
        let mut acc = brat(1);
        for &p in pi.parts() {
            acc *= self.raw_moment(p);
        }
        acc
    }

    /// All raw and central products of total weight `r`, in canonical order.
    pub fn moment_vectors(
        &self,
        r: u32,
    ) -> Result<(BTreeMap<Partition, BigRational>, BTreeMap<Partition, BigRational>)> {
        let mut raw = BTreeMap::new();
        let mut central = BTreeMap::new();
        for pi in partitions(r)? {
            raw.insert(pi.clone(), self.raw_product(&pi));
            central.insert(pi.clone(), self.central_product(&pi));
        }
        Ok((raw, central))
    }
}

pub fn pow_rat(x: &BigRational, k: u32) -> BigRational {
    let mut acc = brat(1);
    for _ in 0..k {
        acc *= x;
    }
    acc
}

/// Parse one rational value: `p/q`, an integer, or a decimal (promoted to the
/// exact binary value of the nearest double).
pub fn parse_value(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::parse("empty value"));
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad numerator in `{s}`")))?;
        let q: BigInt = q
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad denominator in `{s}`")))?;
        if q.is_zero() {
            return Err(Error::parse(format!("zero denominator in `{s}`")));
        }
        return Ok(BigRational::new(p, q));
    }
    if let Ok(i) = s.parse::<BigInt>() {
        return Ok(BigRational::from_integer(i));
    }
    let f: f64 = s
        .parse()
        .map_err(|_| Error::parse(format!("unreadable value `{s}`")))?;
    BigRational::from_float(f).ok_or_else(|| Error::parse(format!("non-finite value `{s}`")))
}

/// Single-column CSV: one value per line, `#` starts a comment, blank lines
/// skipped.
pub fn parse_csv(text: &str) -> Result<Vec<BigRational>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        out.push(parse_value(line).map_err(|e| {
            Error::parse(format!("line {}: {e}", lineno + 1))
        })?);
    }
    if out.is_empty() {
        return Err(Error::parse("no values in input"));
    }
    Ok(out)
}

/// Render a rational exactly (`p/q`) or, when asked, as a decimal with the
/// given number of significant digits (display only).
pub fn render_value(v: &BigRational, float_digits: Option<u32>) -> String {
    use num_traits::One;
    match float_digits {
        None => {
            if v.denom().is_one() {
                v.numer().to_string()
            } else {
                format!("{}/{}", v.numer(), v.denom())
            }
        }
        Some(digits) => {
            let digits = digits.clamp(1, 40) as usize;
            // long division to the requested precision
            let neg = v.is_negative();
            let mut num = v.numer().abs();
            let den = v.denom().abs();
            let int_part = &num / &den;
            num -= &int_part * &den;
            let mut frac = String::new();
            for _ in 0..digits {
                if num.is_zero() {
                    break;
                }
                num *= BigInt::from(10);
                let d = &num / &den;
                frac.push_str(&d.to_string());
                num -= &d * &den;
                if num.is_zero() {
                    break;
                }
            }
            let sign = if neg { "-" } else { "" };
            if frac.is_empty() {
                format!("{sign}{int_part}")
            } else {
                format!("{sign}{int_part}.{frac}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moments_of_small_dataset() {
        let d = Dataset::population(vec![brat(0), brat(1), brat(2)]).unwrap();
        assert_eq!(d.raw_moment(1), brat(1));
        assert_eq!(d.raw_moment(2), BigRational::new(5.into(), 3.into()));
        assert_eq!(d.central_moment(2), BigRational::new(2.into(), 3.into()));
    }

    #[test]
    fn degenerate_sample_central_moments() {
        let d = Dataset::population(vec![brat(1); 4]).unwrap();
        for k in 2..=6 {
            assert_eq!(d.central_moment(k), brat(0));
        }
    }

    #[test]
    fn central_products_with_mean_parts() {
        // data (0, 2): mean 1, mu^_2 = 1: mu(1^2) = 1, mu(2) = 1
        let d = Dataset::population(vec![brat(0), brat(2)]).unwrap();
        assert_eq!(d.central_product(&Partition::of(&[1, 1])), brat(1));
        assert_eq!(d.central_product(&Partition::of(&[2])), brat(1));
    }

    #[test]
    fn csv_and_value_parsing() {
        let vals = parse_csv("1\n2/3 # comment\n\n-0.5\n# full comment\n7\n").unwrap();
        assert_eq!(vals.len(), 4);
        assert_eq!(vals[1], BigRational::new(2.into(), 3.into()));
        assert_eq!(vals[2], BigRational::new((-1).into(), 2.into()));
        assert!(parse_csv("abc\n").is_err());
        assert!(parse_csv("").is_err());
        assert!(parse_value("1/0").is_err());
    }

    #[test]
    fn float_rendering_is_display_only() {
        let v = BigRational::new(1.into(), 3.into());
        assert_eq!(render_value(&v, None), "1/3");
        assert_eq!(render_value(&v, Some(5)), "0.33333");
        assert_eq!(render_value(&brat(-7), Some(4)), "-7");
        assert_eq!(render_value(&BigRational::new((-1).into(), 4.into()), Some(4)), "-0.25");
    }

    #[test]
    fn sample_size_respects_population() {
        assert!(Dataset::sample(vec![brat(1), brat(2)], 1).is_err());
        assert!(Dataset::sample(vec![brat(1), brat(2)], 5).is_ok());
    }
}
