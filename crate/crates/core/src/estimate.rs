//! Targets and their unbiased estimators on concrete data.
//!
//! A target is a product of factors, each of which expands over the central
//! product basis `mu(pi)` of its weight; factor rows multiply by merging
//! partitions.  One pipeline then serves every family: apply the swapped
//! central matrix to get estimator coefficients, evaluate at the concrete
//! `(n, N)`, and dot with the sample's central products.

use std::fmt;

use num_rational::BigRational;

use crate::data::{Dataset, Role};
use crate::dstar::{row_limit_infinite, sampling_central_row, sampling_cumulant_row, unbiased_row};
use crate::error::{Error, Result};
use crate::moments::{
    cumulant_product_in_central, mul_into, raw_product_in_central, PartitionVec,
};
use crate::partition::Partition;
use crate::ratfunc::brat;

/// One multiplicand of a target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factor {
    /// Product of raw population moments `m(pi)`; unit parts are means.
    Raw(Partition),
    /// Product of central population moments `mu(pi)`; unit parts are means.
    Central(Partition),
    /// Product of population cumulants `kappa(pi)` (one cumulant per part).
    Cumulant(Partition),
    /// Central moment of the sampling distribution of sample moments.
    SamplingCentral(Partition),
    /// Cumulant of the sampling distribution of sample moments.
    SamplingCumulant(Partition),
}

impl Factor {
    pub fn weight(&self) -> u32 {
        match self {
            Factor::Raw(p)
            | Factor::Central(p)
            | Factor::Cumulant(p)
            | Factor::SamplingCentral(p)
            | Factor::SamplingCumulant(p) => p.weight(),
        }
    }

    fn row(&self) -> Result<PartitionVec> {
        Ok(match self {
            Factor::Raw(p) => raw_product_in_central(p),
            Factor::Central(p) => PartitionVec::unit(p.clone()),
            Factor::Cumulant(p) => cumulant_product_in_central(p),
            Factor::SamplingCentral(p) => sampling_central_row(p)?,
            Factor::SamplingCumulant(p) => sampling_cumulant_row(p)?,
        })
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Raw(p) => write!(f, "m({p})"),
            Factor::Central(p) => write!(f, "mu({p})"),
            Factor::Cumulant(p) => {
                let mut first = true;
                for part in p.parts() {
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    write!(f, "k({part})")?;
                }
                Ok(())
            }
            Factor::SamplingCentral(p) => write!(f, "sm({p})"),
            Factor::SamplingCumulant(p) => write!(f, "kc({p})"),
        }
    }
}

/// A product of factors; the estimation target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetExpr {
    pub factors: Vec<Factor>,
}

impl TargetExpr {
    pub fn new(factors: Vec<Factor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::domain("target must have at least one factor"));
        }
        let t = TargetExpr { factors };
        if t.total_order() > 6 {
            return Err(Error::domain(format!(
                "target order {} exceeds the catalog cap of 6",
                t.total_order()
            )));
        }
        Ok(t)
    }

    pub fn total_order(&self) -> u32 {
        self.factors.iter().map(Factor::weight).sum()
    }

    /// Expansion of the target over central products of its total order; the
    /// coefficients are exact functions of `(n, N)` (constant for population
    /// functionals).
    pub fn coefficient_row(&self) -> Result<PartitionVec> {
        let mut acc: Option<PartitionVec> = None;
        for f in &self.factors {
            acc = mul_into(acc, &f.row()?);
        }
        Ok(acc.expect("nonempty factor list"))
    }

    /// Coefficients of the unbiased estimator `sum u_pi muhat(pi)`.
    pub fn estimator_row(&self) -> Result<PartitionVec> {
        unbiased_row(&self.coefficient_row()?, self.total_order())
    }

    /// Estimator coefficients in the infinite-population limit.
    pub fn estimator_row_infinite(&self) -> Result<PartitionVec> {
        row_limit_infinite(&self.estimator_row()?)
    }

    /// Exact target value.  Population functionals need only the population;
    /// sampling moments and cumulants also depend on the sample size, passed
    /// as `n_for_sampling`.
    pub fn value(&self, population: &Dataset, n_for_sampling: u64) -> Result<BigRational> {
        let row = self.coefficient_row()?;
        let n0 = brat(n_for_sampling as i64);
        let pop0 = brat(population.len() as i64);
        let mut acc = brat(0);
        for (pi, coeff) in row.iter() {
            let c = coeff.eval(&n0, &pop0)?;
            acc += c * population.central_product(pi);
        }
        Ok(acc)
    }

    /// True when every factor is a population functional (constant row).
    pub fn is_population_functional(&self) -> bool {
        self.factors.iter().all(|f| {
            matches!(f, Factor::Raw(_) | Factor::Central(_) | Factor::Cumulant(_))
        })
    }
}

impl fmt::Display for TargetExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, fac) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{fac}")?;
        }
        Ok(())
    }
}

/// Evaluate the unbiased estimator of `target` on a sample.
pub fn ue(target: &TargetExpr, data: &Dataset) -> Result<BigRational> {
    let n0 = brat(data.len() as i64);
    match data.role() {
        Role::Population => Err(Error::domain(
            "estimation needs a sample role; population data has nothing to estimate",
        )),
        Role::Sample { population_size } => {
            let row = target.estimator_row()?;
            let pop0 = brat(population_size as i64);
            let mut acc = brat(0);
            for (pi, coeff) in row.iter() {
                let c = coeff.eval(&n0, &pop0)?;
                if !num_traits::Zero::is_zero(&c) {
                    acc += c * data.central_product(pi);
                }
            }
            Ok(acc)
        }
        Role::SampleInfinite => {
            let row = target.estimator_row_infinite()?;
            let mut acc = brat(0);
            for (pi, coeff) in row.iter() {
                let c = coeff.eval(&n0, &brat(1))?;
                if !num_traits::Zero::is_zero(&c) {
                    acc += c * data.central_product(pi);
                }
            }
            Ok(acc)
        }
    }
}

// ---------- target grammar ----------

/// How a bare `mu(pi)` should be read: as a product of population central
/// moments (the `estimate` convention) or as a central moment of the
/// sampling distribution (the `dstar` convention).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MuConvention {
    Population,
    Sampling,
}

/// Parse a target expression.
///
/// Grammar: factors joined by `*`, each optionally powered by `^k`:
/// `m(pi)`, `mu(pi)`, `mu`, `k(pi)`, `sm(pi)`, `kc(pi)`, and the alias
/// `E[(mean-mu)^k]` for the k-th sampling central moment of the mean.
pub fn parse_target(input: &str, convention: MuConvention) -> Result<TargetExpr> {
    let mut factors = Vec::new();
    for piece in split_top_level(input)? {
        let piece = piece.trim();
        if piece.is_empty() {
            return Err(Error::parse("empty factor in target"));
        }
        let (body, power) = split_power(piece)?;
        let factor = parse_factor(body, convention)?;
        for _ in 0..power {
            factors.push(factor.clone());
        }
    }
    TargetExpr::new(factors)
}

/// Split `factor^k` at a top-level caret (carets inside parentheses or
/// brackets belong to the partition or alias syntax).
fn split_power(piece: &str) -> Result<(&str, u32)> {
    let mut depth = 0i32;
    for (i, c) in piece.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            '^' if depth == 0 => {
                let k: u32 = piece[i + 1..]
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(format!("bad power in `{piece}`")))?;
                if k == 0 {
                    return Err(Error::parse("zero power in target"));
                }
                return Ok((piece[..i].trim(), k));
            }
            _ => {}
        }
    }
    Ok((piece.trim(), 1))
}

fn split_top_level(s: &str) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            '*' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::parse(format!("unbalanced brackets in `{s}`")));
    }
    out.push(&s[start..]);
    Ok(out)
}

fn parse_factor(body: &str, convention: MuConvention) -> Result<Factor> {
    let body = body.trim();
    if body == "mu" {
        return Ok(Factor::Central(Partition::of(&[1])));
    }
    if let Some(rest) = body.strip_prefix("E[(mean-mu)") {
        // alias E[(mean-mu)^k]
        let rest = rest.trim();
        let inner = rest
            .strip_prefix('^')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::parse(format!("bad alias `{body}`")))?;
        let k: u32 = inner
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad alias power `{body}`")))?;
        if k == 0 {
            return Err(Error::parse("alias power must be positive"));
        }
        return Ok(Factor::SamplingCentral(Partition::new(vec![1; k as usize])?));
    }
    let (name, arg) = body
        .split_once('(')
        .ok_or_else(|| Error::parse(format!("unreadable factor `{body}`")))?;
    let arg = arg
        .strip_suffix(')')
        .ok_or_else(|| Error::parse(format!("missing `)` in `{body}`")))?;
    let pi: Partition = arg.parse()?;
    match name.trim() {
        "m" => Ok(Factor::Raw(pi)),
        "mu" => Ok(match convention {
            MuConvention::Population => Factor::Central(pi),
            MuConvention::Sampling => Factor::SamplingCentral(pi),
        }),
        "k" => Ok(Factor::Cumulant(pi)),
        "sm" => Ok(Factor::SamplingCentral(pi)),
        "kc" => Ok(Factor::SamplingCumulant(pi)),
        other => Err(Error::parse(format!("unknown factor kind `{other}`"))),
    }
}

/// Exhaustive-enumeration check that the estimator of `target` is unbiased
/// for the given population and sample size.
pub fn verify_unbiased(
    target: &TargetExpr,
    pop: &crate::oracle::OraclePopulation,
    n: usize,
) -> Result<crate::oracle::OracleReport> {
    let pop_data = Dataset::population(pop.values().to_vec())?;
    let claimed = target.value(&pop_data, n as u64)?;
    let pop_size = pop.size() as u64;
    crate::oracle::check_expectation(
        target.to_string(),
        pop,
        n,
        move |sample| {
            let d = Dataset::sample(sample.to_vec(), pop_size)?;
            ue(target, &d)
        },
        claimed,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::OraclePopulation;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn ue_of_variance_matches_worked_example() {
        // sample (0,1) from a population of size 3: estimate of mu_2 is 1/3
        let t = parse_target("mu(2)", MuConvention::Population).unwrap();
        let d = Dataset::sample(vec![brat(0), brat(1)], 3).unwrap();
        assert_eq!(ue(&t, &d).unwrap(), rat(1, 3));
    }

    #[test]
    fn census_returns_population_value() {
        // n = N: the estimate is the population functional itself
        let vals = vec![brat(0), brat(1), brat(2), brat(5)];
        let popd = Dataset::population(vals.clone()).unwrap();
        let d = Dataset::sample(vals, 4).unwrap();
        for target in ["m(3)", "mu(2^2)", "k(4)", "mu(1 2)"] {
            let t = parse_target(target, MuConvention::Population).unwrap();
            assert_eq!(
                ue(&t, &d).unwrap(),
                t.value(&popd, 4).unwrap(),
                "census identity for {target}"
            );
        }
    }

    #[test]
    fn oracle_unbiased_small_targets() {
        let pop = OraclePopulation::from_ints(&[0, 1, 2, 4, 7]).unwrap();
        for (target, n) in [
            ("mu(2)", 2),
            ("mu(2)", 3),
            ("m(1^2)", 2),
            ("m(2)", 2),
            ("mu(1 2)", 3),
            ("k(3)", 3),
            ("mu(2^2)", 4),
        ] {
            let t = parse_target(target, MuConvention::Population).unwrap();
            let rep = verify_unbiased(&t, &pop, n).unwrap();
            assert!(
                rep.is_equal(),
                "{target} at n={n}: E = {}, claimed {}",
                rep.expectation,
                rep.claimed
            );
        }
    }

    #[test]
    fn oracle_unbiased_sampling_targets() {
        // estimating Var(Xbar) itself, and the fourth sampling cumulant
        let pop = OraclePopulation::from_ints(&[0, 1, 3, 6, 2]).unwrap();
        for (target, n) in [
            ("E[(mean-mu)^2]", 3),
            ("sm(1^2)", 3),
            ("sm(1^2)^2", 4),
            ("kc(1^4)", 4),
            ("sm(1^2 2)", 4),
        ] {
            let t = parse_target(target, MuConvention::Population).unwrap();
            let rep = verify_unbiased(&t, &pop, n).unwrap();
            assert!(
                rep.is_equal(),
                "{target} at n={n}: E = {}, claimed {}",
                rep.expectation,
                rep.claimed
            );
        }
    }

    #[test]
    fn pole_error_names_minimal_sample_size() {
        // a 4th-order target needs n >= 4
        let t = parse_target("mu(2^2)", MuConvention::Population).unwrap();
        let d = Dataset::sample(vec![brat(0), brat(1)], 9).unwrap();
        let err = ue(&t, &d).unwrap_err();
        match err {
            Error::Pole { hint, .. } => assert_eq!(hint, Some(4)),
            other => panic!("expected pole, got {other:?}"),
        }
    }

    #[test]
    fn estimator_linearity() {
        // ue is linear: estimator row of a product-free sum is the sum; check
        // by evaluating two targets on the same sample
        let d = Dataset::sample(vec![brat(0), brat(2), brat(5)], 6).unwrap();
        let t1 = parse_target("mu(2)", MuConvention::Population).unwrap();
        let t2 = parse_target("m(2)", MuConvention::Population).unwrap();
        let lhs = ue(&t1, &d).unwrap() + ue(&t2, &d).unwrap() * rat(3, 7);
        // manual combined row evaluation
        let row1 = t1.estimator_row().unwrap();
        let row2 = t2.estimator_row().unwrap().scale(&rat(3, 7));
        let combined = row1.add(&row2);
        let mut rhs = brat(0);
        for (pi, c) in combined.iter() {
            rhs += c.eval(&brat(3), &brat(6)).unwrap() * d.central_product(pi);
        }
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn grammar_conventions() {
        let t = parse_target("mu(2^2)", MuConvention::Sampling).unwrap();
        assert_eq!(t.factors, vec![Factor::SamplingCentral(p("2^2"))]);
        let t = parse_target("mu(2^2)", MuConvention::Population).unwrap();
        assert_eq!(t.factors, vec![Factor::Central(p("2^2"))]);
        let t = parse_target("k(4)*k(2)", MuConvention::Population).unwrap();
        assert_eq!(t.total_order(), 6);
        let t = parse_target("mu^2*mu(1^2)", MuConvention::Population).unwrap();
        assert_eq!(t.total_order(), 4);
        assert!(parse_target("mu(1^4 2^2)", MuConvention::Population).is_err()); // order 8
        assert!(parse_target("zz(2)", MuConvention::Population).is_err());
    }
}
