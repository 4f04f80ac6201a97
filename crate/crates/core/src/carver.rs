//! The Carver function and symbolic expansion of expectations of products of
//! sample power sums under without-replacement sampling.
//!
//! For sample power sums `S_a = sum_i X_i^a` the expectation of a product
//! factors over grouping patterns of the exponent slots:
//!
//! ```text
//! E S_{a_1} ... S_{a_s} = sum over set partitions rho of the slots of
//!                         lambda(shape(rho)) * prod_{B in rho} s_{sum of a in B}
//! ```
//!
//! and `lambda(pi) = sum_{j=q(pi)}^{r(pi)} c_j e_j` is derived here from first
//! principles by a double set-partition enumeration: a slot grouping `rho`
//! refined by `sigma` contributes `e_{|sigma|}` with the Moebius weight
//! `prod_B (-1)^{k_B - 1} (k_B - 1)!` of the partition-lattice interval.
//! The printed closed forms are test fixtures, never the source.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::{factorial, partitions, set_partitions, Partition};
use crate::ratfunc::{e_j, var_pow, RatFunc, Var};

/// Maximum total weight accepted by the lambda derivation.
pub const MAX_LAMBDA_WEIGHT: u32 = 8;

/// `lambda(pi)` as an integer combination of the overlap ratios `e_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaExpansion {
    partition: Partition,
    /// (j, c_j) pairs ascending in j, `q(pi) <= j <= r(pi)`.
    coeffs: Vec<(u32, BigInt)>,
}

impl LambdaExpansion {
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn coeffs(&self) -> &[(u32, BigInt)] {
        &self.coeffs
    }

    pub fn coeff(&self, j: u32) -> BigInt {
        self.coeffs
            .iter()
            .find(|(k, _)| *k == j)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigInt::zero)
    }

    /// The expansion as an element of the coefficient field.
    pub fn as_ratfunc(&self) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (j, c) in &self.coeffs {
            acc = acc.add(&e_j(*j).scale(&BigRational::from_integer(c.clone())));
        }
        acc
    }
}

impl fmt::Display for LambdaExpansion {
    /// Renders like `e2 - 2*e3 + e4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (j, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            let piece = if mag.is_one() {
                format!("e{j}")
            } else {
                format!("{mag}*e{j}")
            };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{piece}")?;
        }
        Ok(())
    }
}

/// Moebius-weighted block-count profile of a single part: entry `k` holds
/// `sum over set partitions of a p-set with k blocks of (-1)^(k-1) (k-1)!`.
fn part_profile(p: u32) -> Vec<BigInt> {
    let mut profile = vec![BigInt::zero(); p as usize + 1];
    for sp in set_partitions(p).expect("part size within set-partition cap") {
        let k = sp.block_count();
        let mut w: BigInt = factorial(k as u32 - 1).into();
        if (k - 1) % 2 == 1 {
            w = -w;
        }
        profile[k] += w;
    }
    profile
}

/// Derive `lambda(pi)` by the double set-partition enumeration.
pub fn carver_lambda(pi: &Partition) -> Result<LambdaExpansion> {
    if pi.weight() > MAX_LAMBDA_WEIGHT {
        return Err(Error::domain(format!(
            "lambda derivation capped at weight {MAX_LAMBDA_WEIGHT}, got {}",
            pi.weight()
        )));
    }
    static CACHE: OnceLock<Mutex<HashMap<Partition, LambdaExpansion>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(pi) {
        return Ok(hit.clone());
    }

    // convolve the per-part profiles over the total refined block count
    let mut conv: Vec<BigInt> = vec![BigInt::one()];
    for &p in pi.parts() {
        let profile = part_profile(p);
        let mut next = vec![BigInt::zero(); conv.len() + profile.len() - 1];
        for (i, a) in conv.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in profile.iter().enumerate() {
                if !b.is_zero() {
                    next[i + j] += a * b;
                }
            }
        }
        conv = next;
    }
    let coeffs: Vec<(u32, BigInt)> = conv
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| (j as u32, c))
        .collect();

    let expansion = LambdaExpansion {
        partition: pi.clone(),
        coeffs,
    };
    check_boundary_coeffs(&expansion);
    cache
        .lock()
        .unwrap()
        .insert(pi.clone(), expansion.clone());
    Ok(expansion)
}

/// Construction-time invariants: `c_q = 1` and
/// `c_r = (-1)^(r-q) prod_i (pi_i - 1)!`.
fn check_boundary_coeffs(l: &LambdaExpansion) {
    let q = l.partition.parts_count();
    let r = l.partition.weight();
    assert!(l.coeff(q).is_one(), "c_q(pi) must be 1 for {}", l.partition);
    let mut expected: BigInt = BigInt::one();
    for &p in l.partition.parts() {
        expected *= BigInt::from(factorial(p - 1));
    }
    if (r - q) % 2 == 1 {
        expected = -expected;
    }
    assert_eq!(
        l.coeff(r),
        expected,
        "c_r(pi) boundary coefficient for {}",
        l.partition
    );
}

// ---------- formal power-product expansion ----------

/// A formal sum of exponent symbols with multiplicities, e.g. `2a+b`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExpSum(BTreeMap<char, u32>);

impl ExpSum {
    fn from_slots(symbols: &[char], block: &[usize]) -> Self {
        let mut m = BTreeMap::new();
        for &i in block {
            *m.entry(symbols[i]).or_insert(0) += 1;
        }
        ExpSum(m)
    }
}

impl fmt::Display for ExpSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (sym, mult) in &self.0 {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if *mult == 1 {
                write!(f, "{sym}")?;
            } else {
                write!(f, "{mult}{sym}")?;
            }
        }
        Ok(())
    }
}

/// A product of population power sums with formal exponents, e.g.
/// `s[2a]s[b]`; stored sorted for canonical comparison.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PowerSumTerm(Vec<ExpSum>);

impl PowerSumTerm {
    fn new(mut factors: Vec<ExpSum>) -> Self {
        factors.sort();
        PowerSumTerm(factors)
    }

    pub fn factors(&self) -> &[ExpSum] {
        &self.0
    }
}

impl fmt::Display for PowerSumTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.0 {
            write!(f, "s[{e}]")?;
        }
        Ok(())
    }
}

/// The expansion of `E S_{a_1} ... S_{a_s}` over grouping shapes.
#[derive(Debug, Clone)]
pub struct PowerProductExpansion {
    pub symbols: Vec<char>,
    /// Per shape (canonical partition order): grouped power-sum terms with
    /// multiplicities.  The attached coefficient is `lambda(shape)`.
    pub terms: Vec<(Partition, Vec<(PowerSumTerm, u64)>)>,
}

impl PowerProductExpansion {
    /// Total grouped-term count over all shapes (equals Bell(s)).
    pub fn total_multiplicity(&self) -> u64 {
        self.terms
            .iter()
            .map(|(_, v)| v.iter().map(|(_, m)| m).sum::<u64>())
            .sum()
    }

    pub fn terms_for(&self, shape: &Partition) -> Option<&[(PowerSumTerm, u64)]> {
        self.terms
            .iter()
            .find(|(p, _)| p == shape)
            .map(|(_, v)| v.as_slice())
    }
}

impl fmt::Display for PowerProductExpansion {
    /// Renders like `lambda(3)*( s[a+b+c] ) + lambda(1 2)*( s[2a]s[b] + 2 s[a+b]s[a] ) + ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (shape, terms) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "lambda({shape})*( ")?;
            for (i, (t, m)) in terms.iter().enumerate() {
                if i > 0 {
                    write!(f, " + ")?;
                }
                if *m == 1 {
                    write!(f, "{t}")?;
                } else {
                    write!(f, "{m} {t}")?;
                }
            }
            write!(f, " )")?;
        }
        Ok(())
    }
}

/// Expand `E S_{a_1} ... S_{a_s}` for formal exponent symbols; repeated
/// symbols merge grouping patterns exactly as repeated exponents do.
pub fn expand_power_product(symbols: &[char]) -> Result<PowerProductExpansion> {
    let s = symbols.len() as u32;
    if s == 0 || s > 6 {
        return Err(Error::domain(format!(
            "power-product expansion supports 1..=6 factors, got {s}"
        )));
    }
    let mut by_shape: BTreeMap<Partition, BTreeMap<PowerSumTerm, u64>> = BTreeMap::new();
    for rho in set_partitions(s)? {
        let term = PowerSumTerm::new(
            rho.blocks()
                .iter()
                .map(|b| ExpSum::from_slots(symbols, b))
                .collect(),
        );
        *by_shape
            .entry(rho.shape())
            .or_default()
            .entry(term)
            .or_insert(0) += 1;
    }
    let mut terms = Vec::new();
    for shape in partitions(s)? {
        if let Some(ts) = by_shape.remove(&shape) {
            terms.push((shape, ts.into_iter().collect()));
        }
    }
    Ok(PowerProductExpansion {
        symbols: symbols.to_vec(),
        terms,
    })
}

/// Row of the expectation of a product of population-mean-centered sample
/// moments: with `mu*_a = n^{-1} sum_i (X_i - mu)^a`,
///
/// ```text
/// E prod_i mu*_{a_i} = n^{-s} sum_rho lambda(shape rho) N^{q(rho)}
///                      prod_B mu_{sum of a in B}
/// ```
///
/// Blocks summing to 1 vanish because the population first central moment is
/// zero, so the returned row is supported on partitions without unit parts.
pub fn central_expectation_row(exponents: &[u32]) -> Result<BTreeMap<Partition, RatFunc>> {
    let s = exponents.len() as u32;
    if s == 0 || s > 6 {
        return Err(Error::domain(format!(
            "central expectation supports 1..=6 factors, got {s}"
        )));
    }
    if exponents.iter().any(|&a| a == 0) {
        return Err(Error::domain("exponents must be positive"));
    }
    let prefactor = var_pow(Var::SampleSize, -(s as i32));
    let mut row: BTreeMap<Partition, RatFunc> = BTreeMap::new();
    for rho in set_partitions(s)? {
        let sums: Vec<u32> = rho
            .blocks()
            .iter()
            .map(|b| b.iter().map(|&i| exponents[i]).sum())
            .collect();
        if sums.iter().any(|&v| v == 1) {
            continue;
        }
        let col = Partition::new(sums)?;
        let lam = carver_lambda(&rho.shape())?.as_ratfunc();
        let coeff = lam
            .mul(&var_pow(Var::PopSize, rho.block_count() as i32))
            .mul(&prefactor);
        let entry = row.entry(col).or_insert_with(RatFunc::zero);
        *entry = entry.add(&coeff);
    }
    row.retain(|_, v| !v.is_zero());
    Ok(row)
}

/// Display form of a central-moment expectation, e.g.
/// `E mu*_1 mu*_5 = N/n^2 * lambda(2) mu(6)`.
pub struct CentralExpansion {
    pub exponents: Vec<u32>,
    pub row: BTreeMap<Partition, RatFunc>,
}

/// See [`central_expectation_row`]; wrapper carrying the exponents.
pub fn central_power_expectation(exponents: &[u32]) -> Result<CentralExpansion> {
    Ok(CentralExpansion {
        exponents: exponents.to_vec(),
        row: central_expectation_row(exponents)?,
    })
}

impl fmt::Display for CentralExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.row.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (pi, c) in &self.row {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "[{c}]*mu({pi})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) fn bigint_to_brat(c: &BigInt) -> BigRational {
    BigRational::from_integer(c.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::brat;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn lam(s: &str) -> LambdaExpansion {
        carver_lambda(&p(s)).unwrap()
    }

    fn coeffs(s: &str) -> Vec<(u32, i64)> {
        lam(s)
            .coeffs()
            .iter()
            .map(|(j, c)| (*j, i64::try_from(c).unwrap()))
            .collect()
    }

    #[test]
    fn lambda_small_catalog() {
        assert_eq!(coeffs("3"), vec![(1, 1), (2, -3), (3, 2)]);
        assert_eq!(coeffs("1^3"), vec![(3, 1)]);
        assert_eq!(coeffs("2^2"), vec![(2, 1), (3, -2), (4, 1)]);
        assert_eq!(coeffs("1 2"), vec![(2, 1), (3, -1)]);
        assert_eq!(coeffs("5"), vec![(1, 1), (2, -15), (3, 50), (4, -60), (5, 24)]);
        assert_eq!(
            coeffs("6"),
            vec![(1, 1), (2, -31), (3, 180), (4, -390), (5, 360), (6, -120)]
        );
        assert_eq!(coeffs("2 3"), vec![(2, 1), (3, -4), (4, 5), (5, -2)]);
        assert_eq!(coeffs("1^3 2"), vec![(4, 1), (5, -1)]);
    }

    #[test]
    fn lambda_display() {
        assert_eq!(lam("2^2").to_string(), "e2 - 2*e3 + e4");
        assert_eq!(lam("1^3").to_string(), "e3");
    }

    #[test]
    fn boundary_coefficients_all_partitions() {
        // the construction asserts them; just drive it across the range
        for r in 1..=8u32 {
            if r <= 8 {
                for pi in crate::partition::partitions(r.min(8)).unwrap() {
                    if pi.weight() <= 8 {
                        let _ = carver_lambda(&pi).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn expansion_three_distinct() {
        let e = expand_power_product(&['a', 'b', 'c']).unwrap();
        assert_eq!(e.total_multiplicity(), 5); // Bell(3)
        let shapes: Vec<String> = e.terms.iter().map(|(s, _)| s.to_string()).collect();
        assert_eq!(shapes, vec!["3", "1 2", "1^3"]);
        let t12 = e.terms_for(&p("1 2")).unwrap();
        assert_eq!(t12.len(), 3);
        assert!(t12.iter().all(|(_, m)| *m == 1));
    }

    #[test]
    fn expansion_merges_repeats() {
        // E S_a^2 S_b: lambda(12) attaches to s[2a]s[b] + 2 s[a+b]s[a]
        let e = expand_power_product(&['a', 'a', 'b']).unwrap();
        let t12: BTreeMap<String, u64> = e
            .terms_for(&p("1 2"))
            .unwrap()
            .iter()
            .map(|(t, m)| (t.to_string(), *m))
            .collect();
        assert_eq!(t12.len(), 2);
        assert_eq!(t12["s[2a]s[b]"], 1);
        assert_eq!(t12["s[a]s[a+b]"], 2);
        // and the full-merge term is s[2a+b]
        let t3: Vec<String> = e
            .terms_for(&p("3"))
            .unwrap()
            .iter()
            .map(|(t, _)| t.to_string())
            .collect();
        assert_eq!(t3, vec!["s[2a+b]"]);
    }

    #[test]
    fn expansion_single_factor() {
        let e = expand_power_product(&['a']).unwrap();
        assert_eq!(e.terms.len(), 1);
        assert_eq!(e.terms[0].0, p("1"));
    }

    #[test]
    fn distinct_counts_match_partition_function() {
        let e = expand_power_product(&['a', 'b', 'c', 'd', 'e']).unwrap();
        for (shape, terms) in &e.terms {
            let total: u64 = terms.iter().map(|(_, m)| m).sum();
            assert_eq!(
                num_bigint::BigUint::from(total),
                crate::partition::partition_function(shape),
                "sum over shape {shape}"
            );
        }
    }

    #[test]
    fn central_expectation_examples() {
        // n^2 E mu*_1 mu*_5 = lambda(2) N mu_6
        let row = central_expectation_row(&[1, 5]).unwrap();
        assert_eq!(row.len(), 1);
        let expected = lam("2")
            .as_ratfunc()
            .mul(&var_pow(Var::PopSize, 1))
            .mul(&var_pow(Var::SampleSize, -2));
        assert_eq!(row[&p("6")], expected);

        // n^3 E mu*_1^2 mu*_4 = lambda(3) N mu_6 + lambda(21) N^2 mu_2 mu_4
        let row = central_expectation_row(&[1, 1, 4]).unwrap();
        assert_eq!(row.len(), 2);
        let lam3 = lam("3")
            .as_ratfunc()
            .mul(&var_pow(Var::PopSize, 1))
            .mul(&var_pow(Var::SampleSize, -3));
        assert_eq!(row[&p("6")], lam3);
        let lam21 = lam("1 2")
            .as_ratfunc()
            .mul(&var_pow(Var::PopSize, 2))
            .mul(&var_pow(Var::SampleSize, -3));
        assert_eq!(row[&p("2 4")], lam21);

        // E mu*_2 = mu_2
        let row = central_expectation_row(&[2]).unwrap();
        assert_eq!(row.len(), 1);
        assert_eq!(row[&p("2")], RatFunc::one());
    }

    #[test]
    fn full_census_collapses_lambda() {
        // at n = N every e_j is 1, so lambda(pi) evaluates to sum of c_j
        for pi in crate::partition::partitions(6).unwrap() {
            let l = carver_lambda(&pi).unwrap();
            let v = l.as_ratfunc().eval(&brat(9), &brat(9)).unwrap();
            let expected: BigInt = l.coeffs().iter().map(|(_, c)| c.clone()).sum();
            assert_eq!(v, bigint_to_brat(&expected));
        }
    }
}
