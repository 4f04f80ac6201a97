//! Integer partitions and set partitions.
//!
//! Partitions index every vector and matrix in this crate, so their canonical
//! order is a frozen contract: partitions of `r` are sorted by number of parts
//! ascending, ties broken by comparing the parts listed in descending order,
//! lexicographically descending.  For r = 4 this gives
//! `(4), (13), (2^2), (1^2 2), (1^4)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Soft cap on partition enumeration; the engine is exercised at r <= 6.
pub const MAX_PARTITION_WEIGHT: u32 = 12;
/// Cap on set-partition enumeration (Bell(8) = 4140 is still tiny).
pub const MAX_SET_PARTITION_SIZE: u32 = 8;

/// A partition of a positive integer: parts stored ascending, e.g. `1^2 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::domain("partition must have at least one part"));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::domain("partition parts must be positive"));
        }
        parts.sort_unstable();
        Ok(Partition { parts })
    }

    /// Panicking constructor for literals in code and tests.
    pub fn of(parts: &[u32]) -> Self {
        Partition::new(parts.to_vec()).expect("valid partition literal")
    }

    /// Parts in ascending order.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Weight r(pi) = sum of parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts q(pi).
    pub fn parts_count(&self) -> u32 {
        self.parts.len() as u32
    }

    /// Multiplicity of `part` in the partition.
    pub fn multiplicity(&self, part: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == part).count() as u32
    }

    /// True when the partition contains at least one unit part.
    pub fn has_unit_part(&self) -> bool {
        self.parts[0] == 1
    }

    /// Number of unit parts.
    pub fn unit_parts(&self) -> u32 {
        self.multiplicity(1)
    }

    /// The partition with all unit parts removed, if any part remains.
    pub fn without_units(&self) -> Option<Partition> {
        let rest: Vec<u32> = self.parts.iter().copied().filter(|&p| p > 1).collect();
        if rest.is_empty() {
            None
        } else {
            Some(Partition { parts: rest })
        }
    }

    /// Disjoint union of parts; indexes the product mu(pi) * mu(pi').
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable();
        Partition { parts }
    }

    /// Prepend `k` unit parts.
    pub fn with_units(&self, k: u32) -> Partition {
        let mut parts = vec![1; k as usize];
        parts.extend_from_slice(&self.parts);
        parts.sort_unstable();
        Partition { parts }
    }

    /// (multiplicity, part) pairs ascending by part.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((m, q)) if *q == p => *m += 1,
                _ => out.push((1, p)),
            }
        }
        out
    }

    /// Canonical-order comparison key: q ascending, then parts listed
    /// descending compared lexicographically descending.
    fn order_key(&self) -> (u32, Vec<i64>) {
        let mut desc: Vec<i64> = self.parts.iter().map(|&p| -(p as i64)).collect();
        desc.sort_unstable();
        (self.parts_count(), desc)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl fmt::Display for Partition {
    /// Ascending with caret multiplicities, e.g. `1^2 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, p) in self.multiplicities() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if m == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `1^2 2`, `1 1 2`, `112`, `2^3`, `6`.
    ///
    /// A bare digit string with no separators or carets is read digit by
    /// digit (`112` is three parts), matching the compact notation.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::parse("empty partition"));
        }
        let compact = !s.contains(|c: char| c.is_whitespace() || c == '^');
        if compact && s.len() > 1 {
            if s.chars().all(|c| c.is_ascii_digit()) {
                let parts: Vec<u32> = s.chars().map(|c| c.to_digit(10).unwrap()).collect();
                return Partition::new(parts);
            }
            return Err(Error::parse(format!("bad partition `{s}`")));
        }
        let mut parts = Vec::new();
        for tok in s.split_whitespace() {
            let (base, mult) = match tok.split_once('^') {
                Some((b, m)) => (b, m),
                None => (tok, "1"),
            };
            let base: u32 = base
                .parse()
                .map_err(|_| Error::parse(format!("bad part `{tok}`")))?;
            let mult: u32 = mult
                .parse()
                .map_err(|_| Error::parse(format!("bad multiplicity `{tok}`")))?;
            if mult == 0 {
                return Err(Error::parse(format!("zero multiplicity `{tok}`")));
            }
            for _ in 0..mult {
                parts.push(base);
            }
        }
        Partition::new(parts)
    }
}

/// All partitions of `r` in canonical order; length is the partition count n_r.
pub fn partitions(r: u32) -> Result<Vec<Partition>> {
    if r == 0 || r > MAX_PARTITION_WEIGHT {
        return Err(Error::domain(format!(
            "partition weight must be in 1..={MAX_PARTITION_WEIGHT}, got {r}"
        )));
    }
    let mut all = Vec::new();
    let mut current = Vec::new();
    gen_partitions(r, 1, &mut current, &mut all);
    all.sort();
    Ok(all)
}

fn gen_partitions(remaining: u32, min: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for p in min..=remaining {
        current.push(p);
        gen_partitions(remaining - p, p, current, out);
        current.pop();
    }
}

/// P(pi) = r! / prod_i (i!^{r_i} r_i!): the number of ways to split r labeled
/// items into unlabeled groups of sizes pi.
pub fn partition_function(pi: &Partition) -> BigUint {
    let r = pi.weight();
    let mut value = factorial(r);
    for (m, p) in pi.multiplicities() {
        let part_fact = factorial(p);
        for _ in 0..m {
            value /= &part_fact;
        }
        value /= factorial(m);
    }
    value
}

pub fn factorial(k: u32) -> BigUint {
    let mut f = BigUint::one();
    for i in 2..=k as u64 {
        f *= BigUint::from(i);
    }
    f
}

/// A partition of the set {0, .., r-1} into disjoint blocks.
///
/// Canonical form sorts each block and orders blocks by least element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// The integer partition formed by the block sizes.
    pub fn shape(&self) -> Partition {
        Partition::new(self.blocks.iter().map(|b| b.len() as u32).collect())
            .expect("set partition blocks are nonempty")
    }
}

/// All set partitions of {0, .., r-1}; count is Bell(r).
///
/// Enumerated via restricted-growth strings, so the output order is
/// deterministic.
pub fn set_partitions(r: u32) -> Result<Vec<SetPartition>> {
    if r == 0 || r > MAX_SET_PARTITION_SIZE {
        return Err(Error::domain(format!(
            "set partition size must be in 1..={MAX_SET_PARTITION_SIZE}, got {r}"
        )));
    }
    let r = r as usize;
    let mut rgs = vec![0usize; r];
    let mut out = Vec::new();
    loop {
        let num_blocks = rgs.iter().copied().max().unwrap() + 1;
        let mut blocks = vec![Vec::new(); num_blocks];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i);
        }
        out.push(SetPartition { blocks });
        // next restricted-growth string
        let mut i = r;
        loop {
            if i == 1 {
                return Ok(out);
            }
            i -= 1;
            let max_prefix = rgs[..i].iter().copied().max().unwrap();
            if rgs[i] <= max_prefix {
                rgs[i] += 1;
                for v in rgs[i + 1..].iter_mut() {
                    *v = 0;
                }
                break;
            }
        }
    }
}

/// Bell numbers by the Bell-triangle recurrence.
pub fn bell(r: u32) -> BigUint {
    let n = r as usize;
    let mut row = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().unwrap().clone());
        for v in &row {
            let last = next.last().unwrap().clone();
            next.push(last + v);
        }
        row = next;
    }
    row[0].clone()
}

/// Set partitions of an arbitrary label slice, reusing the index enumeration.
pub fn set_partitions_of<T: Copy>(items: &[T]) -> Result<Vec<Vec<Vec<T>>>> {
    let sps = set_partitions(items.len() as u32)?;
    Ok(sps
        .iter()
        .map(|sp| {
            sp.blocks()
                .iter()
                .map(|b| b.iter().map(|&i| items[i]).collect())
                .collect()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_order_r4() {
        let got: Vec<String> = partitions(4).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(got, vec!["4", "1 3", "2^2", "1^2 2", "1^4"]);
    }

    #[test]
    fn canonical_order_r5_matches_row_order() {
        let got: Vec<String> = partitions(5).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(got, vec!["5", "1 4", "2 3", "1^2 3", "1 2^2", "1^3 2", "1^5"]);
    }

    #[test]
    fn canonical_order_r6() {
        let ps = partitions(6).unwrap();
        assert_eq!(ps.len(), 11);
        assert_eq!(ps[0].to_string(), "6");
        assert_eq!(ps[10].to_string(), "1^6");
        let got: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
        assert_eq!(
            got,
            vec!["6", "1 5", "2 4", "3^2", "1^2 4", "1 2 3", "2^3", "1^3 3", "1^2 2^2", "1^4 2", "1^6"]
        );
    }

    #[test]
    fn single_partition_for_r1() {
        let ps = partitions(1).unwrap();
        assert_eq!(ps, vec![Partition::of(&[1])]);
    }

    #[test]
    fn weight_zero_and_cap_rejected() {
        assert!(partitions(0).is_err());
        assert!(partitions(13).is_err());
    }

    #[test]
    fn partition_function_examples() {
        assert_eq!(partition_function(&p("1 2")), BigUint::from(3u32));
        assert_eq!(partition_function(&p("1^2 2^2")), BigUint::from(45u32));
        assert_eq!(partition_function(&p("6")), BigUint::from(1u32));
        assert_eq!(partition_function(&p("1^3 3")), BigUint::from(20u32));
        assert_eq!(partition_function(&p("1 2 3")), BigUint::from(60u32));
    }

    #[test]
    fn parse_forms_agree() {
        assert_eq!(p("1^2 2"), p("112"));
        assert_eq!(p("2^3"), Partition::of(&[2, 2, 2]));
        assert_eq!(p("6"), Partition::of(&[6]));
        assert_eq!(p("1 1 2"), p("1^2 2"));
    }

    #[test]
    fn set_partition_counts_match_bell() {
        for r in 1..=8u32 {
            let sps = set_partitions(r).unwrap();
            assert_eq!(BigUint::from(sps.len()), bell(r), "Bell({r})");
        }
        assert_eq!(bell(3), BigUint::from(5u32));
        assert_eq!(bell(4), BigUint::from(15u32));
        assert_eq!(bell(6), BigUint::from(203u32));
    }

    #[test]
    fn shapes_group_into_partition_function_counts() {
        for r in 1..=7u32 {
            let sps = set_partitions(r).unwrap();
            for pi in partitions(r).unwrap() {
                let count = sps.iter().filter(|sp| sp.shape() == pi).count();
                assert_eq!(
                    BigUint::from(count),
                    partition_function(&pi),
                    "P({pi}) at r={r}"
                );
            }
        }
    }

    #[test]
    fn sum_of_partition_function_is_bell() {
        for r in 1..=8u32 {
            let total: BigUint = partitions(r)
                .unwrap()
                .iter()
                .map(partition_function)
                .sum();
            assert_eq!(total, bell(r));
        }
    }

    #[test]
    fn display_roundtrip() {
        for r in 1..=8u32 {
            for pi in partitions(r).unwrap() {
                let back: Partition = pi.to_string().parse().unwrap();
                assert_eq!(back, pi);
            }
        }
    }
}
