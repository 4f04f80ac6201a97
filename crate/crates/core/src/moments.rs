//! Partition-indexed linear combinations and the classical conversions
//! between noncentral moments, central moments, and cumulants.
//!
//! A `PartitionVec` is a formal sum `sum coeff(pi) * basis(pi)` where the
//! basis elements multiply by merging partitions: `basis(pi) * basis(pi') =
//! basis(pi merge pi')`.  That one rule covers all three product bases
//! (`m(pi)`, `mu(pi)`, `kappa(pi)`).  In the central basis a unit part stands
//! for the mean itself, so `mu(1^2 2) = mu^2 mu_2`.
//!
//! All conversions here are generated by recurrence over set partitions, not
//! transcribed from tables.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::partition::{factorial, set_partitions, Partition};
use crate::ratfunc::RatFunc;

/// Formal sum of partition-indexed basis elements over the coefficient field.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PartitionVec {
    terms: BTreeMap<Partition, RatFunc>,
}

impl PartitionVec {
    pub fn zero() -> Self {
        PartitionVec::default()
    }

    /// The single basis element `basis(pi)`.
    pub fn unit(pi: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(pi, RatFunc::one());
        PartitionVec { terms }
    }

    pub fn term(pi: Partition, coeff: RatFunc) -> Self {
        let mut v = PartitionVec::zero();
        v.insert(pi, coeff);
        v
    }

    pub fn insert(&mut self, pi: Partition, coeff: RatFunc) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(pi).or_insert_with(RatFunc::zero);
        *entry = entry.add(&coeff);
        if entry.is_zero() {
            let keys: Vec<Partition> = self
                .terms
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in keys {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &PartitionVec) -> PartitionVec {
        let mut out = self.clone();
        for (pi, c) in &other.terms {
            out.insert(pi.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PartitionVec) -> PartitionVec {
        self.add(&other.scale_rf(&RatFunc::from_int(-1)))
    }

    pub fn scale(&self, c: &BigRational) -> PartitionVec {
        self.scale_rf(&RatFunc::from_rational(c.clone()))
    }

    pub fn scale_rf(&self, c: &RatFunc) -> PartitionVec {
        if c.is_zero() {
            return PartitionVec::zero();
        }
        PartitionVec {
            terms: self
                .terms
                .iter()
                .map(|(pi, v)| (pi.clone(), v.mul(c)))
                .collect(),
        }
    }

    /// Product in the merge algebra.
    pub fn mul(&self, other: &PartitionVec) -> PartitionVec {
        let mut out = PartitionVec::zero();
        for (pa, ca) in &self.terms {
            for (pb, cb) in &other.terms {
                out.insert(pa.merge(pb), ca.mul(cb));
            }
        }
        out
    }

    /// `k`-fold merge power for `k >= 1`; `pow(0)` is the empty product and
    /// is handled by callers via [`mul_into`].
    pub fn pow(&self, k: u32) -> PartitionVec {
        assert!(k >= 1, "pow(0) has no partition representation");
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn get(&self, pi: &Partition) -> RatFunc {
        self.terms.get(pi).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total weight check: every term a partition of `r`.
    pub fn is_homogeneous(&self, r: u32) -> bool {
        self.terms.keys().all(|pi| pi.weight() == r)
    }

    pub fn map_coeffs<F: Fn(&RatFunc) -> RatFunc>(&self, f: F) -> PartitionVec {
        let mut out = PartitionVec::zero();
        for (pi, c) in &self.terms {
            out.insert(pi.clone(), f(c));
        }
        out
    }
}

/// Fold a factor into an optional accumulator where `None` is the empty
/// product (multiplicative identity).
pub fn mul_into(acc: Option<PartitionVec>, factor: &PartitionVec) -> Option<PartitionVec> {
    Some(match acc {
        None => factor.clone(),
        Some(a) => a.mul(factor),
    })
}

impl fmt::Display for PartitionVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (pi, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "[{c}]*({pi})")?;
        }
        Ok(())
    }
}

/// `m_j` expanded in the central basis (unit parts are mean factors):
/// `m_j = sum_i binom(j, i) mu_i mu^(j-i)` with `mu_0 = 1`, `mu_1 = 0`.
pub fn raw_moment_in_central(j: u32) -> PartitionVec {
    let mut out = PartitionVec::zero();
    for i in 0..=j {
        if i == 1 {
            continue; // mu_1 = 0
        }
        let mut parts: Vec<u32> = vec![1; (j - i) as usize];
        if i >= 2 {
            parts.push(i);
        }
        if parts.is_empty() {
            continue; // j = 0 never queried
        }
        let c = binom_big(j, i);
        out.insert(
            Partition::new(parts).unwrap(),
            RatFunc::from_rational(BigRational::from_integer(c)),
        );
    }
    out
}

/// `mu_j` expanded in the noncentral basis (unit parts are `m_1` factors):
/// `mu_j = sum_i binom(j, i) (-1)^(j-i) m_1^(j-i) m_i` with `m_0 = 1`.
pub fn central_moment_in_raw(j: u32) -> PartitionVec {
    let mut out = PartitionVec::zero();
    for i in 0..=j {
        let mut parts: Vec<u32> = vec![1; (j - i) as usize];
        if i >= 1 {
            parts.push(i);
        }
        if parts.is_empty() {
            continue;
        }
        let mut c = binom_big(j, i);
        if (j - i) % 2 == 1 {
            c = -c;
        }
        out.insert(
            Partition::new(parts).unwrap(),
            RatFunc::from_rational(BigRational::from_integer(c)),
        );
    }
    out
}

/// `kappa_j` in the noncentral basis, by Moebius inversion over set
/// partitions: `kappa_j = sum_sigma (-1)^(|sigma|-1) (|sigma|-1)! prod_B m_|B|`.
pub fn cumulant_in_raw(j: u32) -> PartitionVec {
    let mut out = PartitionVec::zero();
    for sp in set_partitions(j).expect("cumulant order within cap") {
        let k = sp.block_count();
        let mut w: BigInt = factorial(k as u32 - 1).into();
        if (k - 1) % 2 == 1 {
            w = -w;
        }
        let pi = sp.shape();
        out.insert(
            pi,
            RatFunc::from_rational(BigRational::from_integer(w)),
        );
    }
    out
}

/// `kappa_j` in the central basis; for j >= 2 the mean drops out entirely
/// (cumulants above the first are shift invariant), e.g.
/// `kappa_4 = mu_4 - 3 mu_2^2`.
pub fn cumulant_in_central(j: u32) -> PartitionVec {
    if j == 1 {
        return PartitionVec::unit(Partition::of(&[1]));
    }
    let raw = cumulant_in_raw(j);
    let mut out = PartitionVec::zero();
    for (pi, c) in raw.iter() {
        let mut prod = expand_parts(pi, raw_moment_in_central);
        prod = prod.scale_rf(c);
        out = out.add(&prod);
    }
    out
}

/// Expand a product basis element by substituting `f(part)` for each part and
/// multiplying in the merge algebra.
pub fn expand_parts<F: Fn(u32) -> PartitionVec>(pi: &Partition, f: F) -> PartitionVec {
    let mut acc: Option<PartitionVec> = None;
    for &p in pi.parts() {
        let factor = f(p);
        acc = Some(match acc {
            None => factor,
            Some(a) => a.mul(&factor),
        });
    }
    acc.expect("partitions are nonempty")
}

/// Central-basis expansion of the basis element `mu(pi)`; unit parts map to
/// the mean (identity), larger parts stay as they are.
pub fn central_product(pi: &Partition) -> PartitionVec {
    PartitionVec::unit(pi.clone())
}

/// Noncentral-basis expansion of the central product `mu(pi)`.
pub fn central_product_in_raw(pi: &Partition) -> PartitionVec {
    expand_parts(pi, |p| {
        if p == 1 {
            PartitionVec::unit(Partition::of(&[1]))
        } else {
            central_moment_in_raw(p)
        }
    })
}

/// Central-basis expansion of the raw product `m(pi)`.
pub fn raw_product_in_central(pi: &Partition) -> PartitionVec {
    expand_parts(pi, |p| {
        if p == 1 {
            PartitionVec::unit(Partition::of(&[1]))
        } else {
            raw_moment_in_central(p)
        }
    })
}

/// Central-basis expansion of the cumulant product `kappa(pi)`.
pub fn cumulant_product_in_central(pi: &Partition) -> PartitionVec {
    expand_parts(pi, cumulant_in_central)
}

fn binom_big(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn as_int_map(v: &PartitionVec) -> BTreeMap<String, String> {
        v.iter()
            .map(|(pi, c)| (pi.to_string(), c.to_string()))
            .collect()
    }

    #[test]
    fn raw_in_central_small() {
        // m_2 = mu_2 + mu^2
        let m2 = raw_moment_in_central(2);
        assert_eq!(m2.get(&p("2")), RatFunc::one());
        assert_eq!(m2.get(&p("1^2")), RatFunc::one());
        assert_eq!(m2.len(), 2);
        // m_3 = mu_3 + 3 mu_2 mu + mu^3
        let m3 = raw_moment_in_central(3);
        assert_eq!(m3.get(&p("3")), RatFunc::one());
        assert_eq!(m3.get(&p("1 2")), RatFunc::from_int(3));
        assert_eq!(m3.get(&p("1^3")), RatFunc::one());
    }

    #[test]
    fn central_in_raw_small() {
        // mu_2 = m_2 - m_1^2
        let mu2 = central_moment_in_raw(2);
        assert_eq!(mu2.get(&p("2")), RatFunc::one());
        assert_eq!(mu2.get(&p("1^2")), RatFunc::from_int(-1));
        // mu_3 = m_3 - 3 m_2 m_1 + 2 m_1^3
        let mu3 = central_moment_in_raw(3);
        assert_eq!(mu3.get(&p("1 2")), RatFunc::from_int(-3));
        assert_eq!(mu3.get(&p("1^3")), RatFunc::from_int(2));
    }

    #[test]
    fn conversions_are_mutually_inverse() {
        // substituting one into the other must give the bare basis element
        for j in 2..=6u32 {
            let back = {
                let m_in_c = raw_moment_in_central(j);
                let mut acc = PartitionVec::zero();
                for (pi, c) in m_in_c.iter() {
                    acc = acc.add(&expand_parts(pi, |p| {
                        if p == 1 {
                            PartitionVec::unit(Partition::of(&[1]))
                        } else {
                            central_moment_in_raw(p)
                        }
                    })
                    .scale_rf(c));
                }
                acc
            };
            assert_eq!(back, PartitionVec::unit(Partition::of(&[j])), "j={j}");
        }
    }

    #[test]
    fn cumulant_vectors_match_standard_tables() {
        // kappa_2 = mu_2, kappa_3 = mu_3
        assert_eq!(cumulant_in_central(2), PartitionVec::unit(p("2")));
        assert_eq!(cumulant_in_central(3), PartitionVec::unit(p("3")));
        // kappa_4 = mu_4 - 3 mu_2^2
        let k4 = cumulant_in_central(4);
        assert_eq!(k4.get(&p("4")), RatFunc::one());
        assert_eq!(k4.get(&p("2^2")), RatFunc::from_int(-3));
        assert_eq!(k4.len(), 2);
        // kappa_5 = mu_5 - 10 mu_2 mu_3
        let k5 = cumulant_in_central(5);
        assert_eq!(k5.get(&p("5")), RatFunc::one());
        assert_eq!(k5.get(&p("2 3")), RatFunc::from_int(-10));
        assert_eq!(k5.len(), 2);
        // kappa_6 = mu_6 - 15 mu_2 mu_4 - 10 mu_3^2 + 30 mu_2^3
        let k6 = cumulant_in_central(6);
        assert_eq!(k6.get(&p("6")), RatFunc::one());
        assert_eq!(k6.get(&p("2 4")), RatFunc::from_int(-15));
        assert_eq!(k6.get(&p("3^2")), RatFunc::from_int(-10));
        assert_eq!(k6.get(&p("2^3")), RatFunc::from_int(30));
        assert_eq!(k6.len(), 4);
        let _ = as_int_map(&k6);
    }

    #[test]
    fn cumulants_above_first_are_shift_invariant() {
        for j in 2..=6u32 {
            let k = cumulant_in_central(j);
            assert!(
                k.iter().all(|(pi, _)| !pi.has_unit_part()),
                "kappa_{j} has mean terms"
            );
        }
    }

    #[test]
    fn merge_multiplication() {
        let a = PartitionVec::unit(p("2"));
        let b = PartitionVec::unit(p("1 3"));
        assert_eq!(a.mul(&b), PartitionVec::unit(p("1 2 3")));
    }
}
