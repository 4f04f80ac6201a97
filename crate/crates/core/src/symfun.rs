//! Distinct-index symmetric functions, regrouping relations, and generalized
//! eigenfunctions.
//!
//! For a partition `pi` of `r` and generic exponent slots, `S(pi)` sums one
//! distinct-index bracket over all `P(pi)` groupings of the slots, and
//! `T(pi)` sums the corresponding products of unrestricted sums.  The two
//! families convert into each other by regrouping: products expand over
//! coincidence patterns, and the reverse direction carries the Moebius weight
//! of the partition lattice.  The same relations hold verbatim when the
//! monomial is replaced by an arbitrary kernel, which is what the
//! verification entry points exercise.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::data::Dataset;
use crate::error::{Error, Result};
use crate::matrices::{
    expectation_matrix, central_in_raw_matrix, CheckReport, CoeffMatrix, Family,
};
use crate::moments::PartitionVec;
use crate::oracle::OraclePopulation;
use crate::partition::{factorial, partitions, set_partitions, Partition, SetPartition};
use crate::ratfunc::{brat, RatFunc, Var};

// ---------- exact distinct-index sums on data ----------

/// `[pi]`: the sum over ordered tuples of distinct indices of the monomial
/// with exponents `pi`.
pub fn bracket(pi: &Partition, data: &Dataset) -> BigRational {
    let values = data.values();
    let q = pi.parts_count() as usize;
    let mut acc = brat(0);
    let mut idx: Vec<usize> = Vec::with_capacity(q);
    fn rec(
        parts: &[u32],
        values: &[BigRational],
        idx: &mut Vec<usize>,
        acc: &mut BigRational,
    ) {
        if idx.len() == parts.len() {
            let mut term = brat(1);
            for (slot, &i) in idx.iter().enumerate() {
                term *= crate::data::pow_rat(&values[i], parts[slot]);
            }
            *acc += term;
            return;
        }
        for i in 0..values.len() {
            if idx.contains(&i) {
                continue;
            }
            idx.push(i);
            rec(parts, values, idx, acc);
            idx.pop();
        }
    }
    rec(pi.parts(), values, &mut idx, &mut acc);
    acc
}

/// `<pi> = [pi] / (count)_q`: the standardized distinct-index average, the
/// quantity whose sample expectation equals its population value.
pub fn std_bracket(pi: &Partition, data: &Dataset) -> Result<BigRational> {
    let q = pi.parts_count();
    let count = data.len() as u32;
    if count < q {
        return Err(Error::domain(format!(
            "need at least {q} values for <{pi}>, have {count}"
        )));
    }
    let mut ff = brat(1);
    for i in 0..q {
        ff *= brat((count - i) as i64);
    }
    Ok(bracket(pi, data) / ff)
}

// ---------- formal regrouping relations ----------

/// One side of a regrouping relation: coefficients on the full grouped sums,
/// `S_m(pi)` or `T_m(pi)` with `m = P(pi)` left implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub source: Partition,
    pub terms: Vec<(Partition, BigInt)>,
}

fn moebius_weight(block_counts: &[usize]) -> BigInt {
    let mut w = BigInt::one();
    for &k in block_counts {
        let mut f: BigInt = factorial(k as u32 - 1).into();
        if (k - 1) % 2 == 1 {
            f = -f;
        }
        w *= f;
    }
    w
}

/// Does `rho` refine `sigma` (every rho-block inside one sigma-block)?
fn refines(rho: &SetPartition, sigma_of: &[usize]) -> bool {
    rho.blocks().iter().all(|b| {
        let target = sigma_of[b[0]];
        b.iter().all(|&i| sigma_of[i] == target)
    })
}

fn block_assignment(sigma: &SetPartition, r: usize) -> Vec<usize> {
    let mut of = vec![0usize; r];
    for (bi, b) in sigma.blocks().iter().enumerate() {
        for &i in b {
            of[i] = bi;
        }
    }
    of
}

/// Expand `T(pi)` over the `S(pi')`: the coefficient on `S(pi')` counts the
/// groupings of shape `pi` refining a fixed grouping of shape `pi'`.
pub fn t_in_s(pi: &Partition) -> Result<Relation> {
    regroup(pi, false)
}

/// Expand `S(pi)` over the `T(pi')`, with Moebius signs.
pub fn s_in_t(pi: &Partition) -> Result<Relation> {
    regroup(pi, true)
}

fn regroup(pi: &Partition, signed: bool) -> Result<Relation> {
    let r = pi.weight();
    if r > 6 {
        return Err(Error::domain("regrouping relations are built for r <= 6"));
    }
    let all = set_partitions(r)?;
    let mut terms: BTreeMap<Partition, BigInt> = BTreeMap::new();
    // one representative grouping per coarser shape
    let mut seen: BTreeMap<Partition, usize> = BTreeMap::new();
    for (i, sigma) in all.iter().enumerate() {
        seen.entry(sigma.shape()).or_insert(i);
    }
    for (shape, &rep) in &seen {
        let sigma = &all[rep];
        let sigma_of = block_assignment(sigma, r as usize);
        let mut coeff = BigInt::zero();
        for rho in &all {
            if rho.shape() != *pi || !refines(rho, &sigma_of) {
                continue;
            }
            if signed {
                // Moebius weight of the interval [rho, sigma]
                let counts: Vec<usize> = sigma
                    .blocks()
                    .iter()
                    .map(|b| {
                        rho.blocks()
                            .iter()
                            .filter(|rb| sigma_of[rb[0]] == sigma_of[b[0]] && b.contains(&rb[0]))
                            .count()
                    })
                    .collect();
                coeff += moebius_weight(&counts);
            } else {
                coeff += BigInt::one();
            }
        }
        if !coeff.is_zero() {
            terms.insert(shape.clone(), coeff);
        }
    }
    Ok(Relation {
        source: pi.clone(),
        terms: terms.into_iter().collect(),
    })
}

/// Round-trip matrix product: expanding T in S and S back in T must compose
/// to the identity on formal expressions.
pub fn regroup_roundtrip_identity(r: u32) -> Result<bool> {
    let order = partitions(r)?;
    let d = order.len();
    let mut prod = vec![vec![BigInt::zero(); d]; d];
    for (i, pi) in order.iter().enumerate() {
        let t_rel = t_in_s(pi)?;
        for (mid, c1) in &t_rel.terms {
            let s_rel = s_in_t(mid)?;
            let j_mid = order.iter().position(|p| p == mid).unwrap();
            let _ = j_mid;
            for (out, c2) in &s_rel.terms {
                let j = order.iter().position(|p| p == out).unwrap();
                prod[i][j] += c1 * c2;
            }
        }
    }
    for i in 0..d {
        for j in 0..d {
            let expected = if i == j { BigInt::one() } else { BigInt::zero() };
            if prod[i][j] != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// ---------- numeric evaluation with arbitrary kernels ----------

/// Evaluate `S(pi)` for a kernel on slot-index assignments: sum over
/// groupings of shape `pi` and over distinct population indices per block.
pub fn eval_s<F>(pi: &Partition, pop_size: usize, kernel: &F) -> Result<BigRational>
where
    F: Fn(&[usize]) -> BigRational,
{
    let r = pi.weight();
    let mut acc = brat(0);
    for rho in set_partitions(r)? {
        if rho.shape() != *pi {
            continue;
        }
        let q = rho.block_count();
        let mut assign = vec![usize::MAX; q];
        distinct_tuples(pop_size, q, &mut assign, 0, &mut |assign| {
            let mut slots = vec![0usize; r as usize];
            for (bi, b) in rho.blocks().iter().enumerate() {
                for &s in b {
                    slots[s] = assign[bi];
                }
            }
            acc += kernel(&slots);
        });
    }
    Ok(acc)
}

/// Evaluate `T(pi)`: like `eval_s` but indices per block are unrestricted.
pub fn eval_t<F>(pi: &Partition, pop_size: usize, kernel: &F) -> Result<BigRational>
where
    F: Fn(&[usize]) -> BigRational,
{
    let r = pi.weight();
    let mut acc = brat(0);
    for rho in set_partitions(r)? {
        if rho.shape() != *pi {
            continue;
        }
        let q = rho.block_count();
        let mut assign = vec![0usize; q];
        'tuples: loop {
            let mut slots = vec![0usize; r as usize];
            for (bi, b) in rho.blocks().iter().enumerate() {
                for &s in b {
                    slots[s] = assign[bi];
                }
            }
            acc += kernel(&slots);
            // odometer over unrestricted index tuples
            let mut k = q;
            loop {
                if k == 0 {
                    break 'tuples;
                }
                k -= 1;
                assign[k] += 1;
                if assign[k] < pop_size {
                    break;
                }
                assign[k] = 0;
            }
        }
    }
    Ok(acc)
}

fn distinct_tuples<G: FnMut(&[usize])>(
    pop: usize,
    q: usize,
    assign: &mut Vec<usize>,
    depth: usize,
    f: &mut G,
) {
    if depth == q {
        f(assign);
        return;
    }
    for i in 0..pop {
        if assign[..depth].contains(&i) {
            continue;
        }
        assign[depth] = i;
        distinct_tuples(pop, q, assign, depth + 1, f);
    }
    assign[depth] = usize::MAX;
}

/// Verify one regrouping relation numerically for a kernel: the left side is
/// the plain `T(pi)` or `S(pi)` sum, the right side the expanded relation.
pub fn check_relation_numeric<F>(
    rel: &Relation,
    direction_t_in_s: bool,
    pop_size: usize,
    kernel: &F,
) -> Result<bool>
where
    F: Fn(&[usize]) -> BigRational,
{
    let lhs = if direction_t_in_s {
        eval_t(&rel.source, pop_size, kernel)?
    } else {
        eval_s(&rel.source, pop_size, kernel)?
    };
    let mut rhs = brat(0);
    for (pi, c) in &rel.terms {
        let v = if direction_t_in_s {
            eval_s(pi, pop_size, kernel)?
        } else {
            eval_t(pi, pop_size, kernel)?
        };
        rhs += BigRational::from_integer(c.clone()) * v;
    }
    Ok(lhs == rhs)
}

// ---------- power-sum conversion matrices ----------

/// Integer matrix expressing distinct-index brackets in power-sum products:
/// `[pi] = sum V[pi][pi'] s(pi')`.
pub fn v_matrix(r: u32) -> Result<CoeffMatrix> {
    CoeffMatrix::from_rows(r, None, |pi| {
        let q = pi.parts_count();
        let mut row = PartitionVec::zero();
        for tau in set_partitions(q)? {
            let sums: Vec<u32> = tau
                .blocks()
                .iter()
                .map(|b| b.iter().map(|&i| pi.parts()[i]).sum())
                .collect();
            let counts: Vec<usize> = tau.blocks().iter().map(|b| b.len()).collect();
            let w = moebius_weight(&counts);
            row.insert(
                Partition::new(sums)?,
                RatFunc::from_rational(BigRational::from_integer(w)),
            );
        }
        Ok(row)
    })
}

/// Integer matrix for the reverse direction: `s(pi) = sum W[pi][pi'] [pi']`.
pub fn v_matrix_inverse(r: u32) -> Result<CoeffMatrix> {
    CoeffMatrix::from_rows(r, None, |pi| {
        let q = pi.parts_count();
        let mut row = PartitionVec::zero();
        for tau in set_partitions(q)? {
            let sums: Vec<u32> = tau
                .blocks()
                .iter()
                .map(|b| b.iter().map(|&i| pi.parts()[i]).sum())
                .collect();
            row.insert(Partition::new(sums)?, RatFunc::one());
        }
        Ok(row)
    })
}

/// Rebuild the raw-product and central-product expectation matrices from the
/// standardized-bracket route and compare with the direct construction:
/// `B_r = E_n^{-1} E_N` with `E = Dbar^{-1} V D`, and `C_r` via the constant
/// central-to-raw change of basis.
pub fn proof_pipeline_check(r: u32) -> Result<CheckReport> {
    let v = v_matrix(r)?;
    let w = v_matrix_inverse(r)?;
    // V W = I (unimodular triangular up to the diagonal-permutation grading)
    if !v.mul(&w)?.is_identity() {
        return Ok(CheckReport::fail(
            format!("bracket conversion r={r}"),
            "V * V^-1 != I".to_string(),
        ));
    }
    let diag = |var: Var, falling: bool| -> Result<CoeffMatrix> {
        CoeffMatrix::from_rows(r, None, |pi| {
            let q = pi.parts_count();
            let f = if falling {
                RatFunc::falling(var, q)
            } else {
                crate::ratfunc::var_pow(var, q as i32)
            };
            let mut row = PartitionVec::zero();
            row.insert(pi.clone(), f);
            Ok(row)
        })
    };
    // E_x = Dbar_x^{-1} V D_x; its inverse is D_x^{-1} W Dbar_x
    let e_pop = diag(Var::PopSize, true)?
        .invert()?
        .mul(&v)?
        .mul(&diag(Var::PopSize, false)?)?;
    let e_n_inv = diag(Var::SampleSize, false)?
        .invert()?
        .mul(&w)?
        .mul(&diag(Var::SampleSize, true)?)?;
    let b_check = e_n_inv.mul(&e_pop)?;
    let b = expectation_matrix(Family::RawProduct, r)?;
    for i in 0..b.dim() {
        for j in 0..b.dim() {
            if b.at(i, j) != b_check.at(i, j) {
                return Ok(CheckReport::fail(
                    format!("bracket pipeline r={r}"),
                    format!(
                        "B mismatch at ({}, {})",
                        b.order()[i],
                        b.order()[j]
                    ),
                ));
            }
        }
    }
    // C via F = E G^{-1}: equivalently C = G_c B G_c^{-1}
    let gc = central_in_raw_matrix(r)?;
    let c_check = gc.mul(&b_check)?.mul(&gc.invert()?)?;
    let c = expectation_matrix(Family::CentralProduct, r)?;
    for i in 0..c.dim() {
        for j in 0..c.dim() {
            if c.at(i, j) != c_check.at(i, j) {
                return Ok(CheckReport::fail(
                    format!("bracket pipeline r={r}"),
                    format!(
                        "C mismatch at ({}, {})",
                        c.order()[i],
                        c.order()[j]
                    ),
                ));
            }
        }
    }
    Ok(CheckReport::pass(format!(
        "bracket pipeline reproduces B_{r} and C_{r}"
    )))
}

// ---------- generalized eigenfunctions ----------

/// A kernel supplied as a dense table over population values.
#[derive(Debug, Clone)]
pub struct Kernel {
    pub arity: usize,
    table: BTreeMap<Vec<BigRational>, BigRational>,
}

impl Kernel {
    pub fn new(arity: usize, table: BTreeMap<Vec<BigRational>, BigRational>) -> Result<Self> {
        if arity == 0 || arity > 3 {
            return Err(Error::domain(
                "kernels of arity 1..=3 are supported; higher orders admit no eigenfunctions",
            ));
        }
        if table.keys().any(|k| k.len() != arity) {
            return Err(Error::domain("kernel table key arity mismatch"));
        }
        Ok(Kernel { arity, table })
    }

    pub fn from_fn<F: Fn(&[BigRational]) -> BigRational>(
        arity: usize,
        values: &[BigRational],
        f: F,
    ) -> Result<Self> {
        let mut distinct: Vec<BigRational> = Vec::new();
        for v in values {
            if !distinct.contains(v) {
                distinct.push(v.clone());
            }
        }
        let mut table = BTreeMap::new();
        let mut idx = vec![0usize; arity];
        loop {
            let key: Vec<BigRational> = idx.iter().map(|&i| distinct[i].clone()).collect();
            table.insert(key.clone(), f(&key));
            let mut k = arity;
            loop {
                if k == 0 {
                    return Kernel::new(arity, table);
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < distinct.len() {
                    break;
                }
                idx[k] = 0;
                if k == 0 {
                    return Kernel::new(arity, table);
                }
            }
        }
    }

    pub fn eval(&self, args: &[BigRational]) -> Result<BigRational> {
        self.table
            .get(args)
            .cloned()
            .ok_or_else(|| Error::domain("kernel table does not cover these values".to_string()))
    }
}

/// The generalized central moment `a_s(F)`: expectations over independent
/// draws with replacement, exactly.
///
/// * arity 1: `E t(X)`
/// * arity 2: `E[t(X,X) - t(X,Y)]`
/// * arity 3: `E[t(X,X,X) - t(X,Y,Y) - t(Y,X,Y) - t(Y,Y,X) + 2 t(X,Y,Z)]`
pub fn generalized_moment(kernel: &Kernel, values: &[BigRational]) -> Result<BigRational> {
    let n = values.len();
    let nn = brat(n as i64);
    match kernel.arity {
        1 => {
            let mut acc = brat(0);
            for x in values {
                acc += kernel.eval(std::slice::from_ref(x))?;
            }
            Ok(acc / nn)
        }
        2 => {
            let mut diag = brat(0);
            for x in values {
                diag += kernel.eval(&[x.clone(), x.clone()])?;
            }
            let mut full = brat(0);
            for x in values {
                for y in values {
                    full += kernel.eval(&[x.clone(), y.clone()])?;
                }
            }
            Ok(diag / nn.clone() - full / (nn.clone() * nn))
        }
        3 => {
            let mut acc = brat(0);
            // E t(X,X,X)
            let mut t1 = brat(0);
            for x in values {
                t1 += kernel.eval(&[x.clone(), x.clone(), x.clone()])?;
            }
            acc += t1 / nn.clone();
            // - E t(X,Y,Y) - E t(Y,X,Y) - E t(Y,Y,X)
            let mut t2 = brat(0);
            for x in values {
                for y in values {
                    t2 += kernel.eval(&[x.clone(), y.clone(), y.clone()])?;
                    t2 += kernel.eval(&[y.clone(), x.clone(), y.clone()])?;
                    t2 += kernel.eval(&[y.clone(), y.clone(), x.clone()])?;
                }
            }
            acc -= t2 / (nn.clone() * nn.clone());
            // + 2 E t(X,Y,Z)
            let mut t3 = brat(0);
            for x in values {
                for y in values {
                    for z in values {
                        t3 += kernel.eval(&[x.clone(), y.clone(), z.clone()])?;
                    }
                }
            }
            acc += brat(2) * t3 / (nn.clone() * nn.clone() * nn);
            Ok(acc)
        }
        _ => unreachable!("arity checked at construction"),
    }
}

/// Exhaustively verify `E a_s(Fhat) = C_{s,s}(N, n) a_s(F)` for a kernel on a
/// small population.
pub fn eigen_check(kernel: &Kernel, pop: &OraclePopulation, n: usize) -> Result<CheckReport> {
    let s = kernel.arity as u32;
    let lambda = {
        let c = expectation_matrix(Family::CentralProduct, s)?;
        let pi = Partition::of(&vec![s; 1]);
        c.entry(&pi, &pi)?
            .eval(&brat(n as i64), &brat(pop.size() as i64))?
    };
    let target = generalized_moment(kernel, pop.values())? * lambda;
    let report = crate::oracle::check_expectation(
        format!("generalized moment of arity {s}"),
        pop,
        n,
        |sample| generalized_moment(kernel, sample),
        target,
    )?;
    if report.is_equal() {
        Ok(CheckReport::pass(format!(
            "arity-{s} kernel eigenfunction at n={n}, N={}",
            pop.size()
        )))
    } else {
        Ok(CheckReport::fail(
            format!("arity-{s} kernel eigenfunction"),
            format!(
                "E a(Fhat) = {} but lambda a(F) = {}",
                report.expectation, report.claimed
            ),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn d(vals: &[i64]) -> Dataset {
        Dataset::population(vals.iter().map(|&v| brat(v)).collect()).unwrap()
    }

    #[test]
    fn bracket_identity_on_example() {
        // [1^2] on (0,1,2) is 4, and equals [1]^2 - [2]
        let data = d(&[0, 1, 2]);
        assert_eq!(bracket(&p("1^2"), &data), brat(4));
        let b1 = bracket(&p("1"), &data);
        let b2 = bracket(&p("2"), &data);
        assert_eq!(&b1 * &b1 - b2, brat(4));
    }

    #[test]
    fn std_bracket_invariance_small() {
        // average of <1 1> over samples of size 2 equals the population value
        let pop = OraclePopulation::from_ints(&[0, 1, 2]).unwrap();
        let pop_value =
            std_bracket(&p("1^2"), &d(&[0, 1, 2])).unwrap();
        let e = crate::oracle::expectation(&pop, 2, |sample| {
            let ds = Dataset::population(sample.to_vec()).unwrap();
            std_bracket(&p("1^2"), &ds)
        })
        .unwrap();
        assert_eq!(e, pop_value);
        assert_eq!(pop_value, BigRational::new(2.into(), 3.into()));
    }

    #[test]
    fn relation_fixtures_small() {
        // T(1^2) = S(1^2) + S(2)
        let rel = t_in_s(&p("1^2")).unwrap();
        assert_eq!(
            rel.terms,
            vec![(p("2"), BigInt::one()), (p("1^2"), BigInt::one())]
        );
        // S(1^4) = T(1^4) - T(1^2 2) + T(2^2) + 2 T(1 3) - 6 T(4)
        let rel = s_in_t(&p("1^4")).unwrap();
        let map: BTreeMap<String, i64> = rel
            .terms
            .iter()
            .map(|(pi, c)| (pi.to_string(), i64::try_from(c).unwrap()))
            .collect();
        assert_eq!(map["1^4"], 1);
        assert_eq!(map["1^2 2"], -1);
        assert_eq!(map["2^2"], 1);
        assert_eq!(map["1 3"], 2);
        assert_eq!(map["4"], -6);
    }

    #[test]
    fn t16_contains_printed_multiplicities() {
        // the multiplicity of each grouped sum is P(pi'), carried implicitly;
        // the coefficients are all 1
        let rel = t_in_s(&p("1^6")).unwrap();
        assert_eq!(rel.terms.len(), 11);
        assert!(rel.terms.iter().all(|(_, c)| c.is_one()));
        // and the signed reverse carries the factorial weights
        let rel = s_in_t(&p("1^6")).unwrap();
        let map: BTreeMap<String, i64> = rel
            .terms
            .iter()
            .map(|(pi, c)| (pi.to_string(), i64::try_from(c).unwrap()))
            .collect();
        assert_eq!(map["1^4 2"], -1);
        assert_eq!(map["1^3 3"], 2);
        assert_eq!(map["1^2 2^2"], 1);
        assert_eq!(map["1^2 4"], -6);
        assert_eq!(map["1 2 3"], -2);
        assert_eq!(map["2^3"], -1);
        assert_eq!(map["2 4"], 6);
        assert_eq!(map["1 5"], 24);
        assert_eq!(map["3^2"], 4);
        assert_eq!(map["6"], -120);
    }

    #[test]
    fn roundtrip_identity() {
        for r in 1..=5 {
            assert!(regroup_roundtrip_identity(r).unwrap(), "r={r}");
        }
    }

    #[test]
    fn kernel_relation_check() {
        // power kernel reproduces the symmetric-function identity, and an
        // arbitrary table kernel satisfies the same relation
        let values: Vec<BigRational> = [2i64, 3, 5].iter().map(|&v| brat(v)).collect();
        let power = |slots: &[usize]| -> BigRational {
            let mut acc = brat(1);
            for &i in slots {
                acc *= &values[i];
            }
            acc
        };
        let rel = t_in_s(&p("1^3")).unwrap();
        assert!(check_relation_numeric(&rel, true, 3, &power).unwrap());
        let rel = s_in_t(&p("1^3")).unwrap();
        assert!(check_relation_numeric(&rel, false, 3, &power).unwrap());
        // a lookup-table kernel with no product structure
        let table = |slots: &[usize]| -> BigRational {
            brat((slots[0] as i64 + 2) * (slots[1] as i64 + 5) + 3 * slots[2] as i64)
        };
        let rel = s_in_t(&p("1^3")).unwrap();
        assert!(check_relation_numeric(&rel, false, 3, &table).unwrap());
    }

    #[test]
    fn v_matrix_row_examples() {
        // [1^2] = s_1^2 - s_2
        let v = v_matrix(2).unwrap();
        assert_eq!(*v.entry(&p("1^2"), &p("1^2")).unwrap(), RatFunc::one());
        assert_eq!(*v.entry(&p("1^2"), &p("2")).unwrap(), RatFunc::from_int(-1));
        // [r] = s_r
        assert_eq!(*v.entry(&p("2"), &p("2")).unwrap(), RatFunc::one());
        // [1^3] = s_1^3 - 3 s_1 s_2 + 2 s_3
        let v = v_matrix(3).unwrap();
        assert_eq!(*v.entry(&p("1^3"), &p("1^3")).unwrap(), RatFunc::one());
        assert_eq!(*v.entry(&p("1^3"), &p("1 2")).unwrap(), RatFunc::from_int(-3));
        assert_eq!(*v.entry(&p("1^3"), &p("3")).unwrap(), RatFunc::from_int(2));
    }

    #[test]
    fn v_matrix_inverts() {
        for r in 1..=5 {
            let v = v_matrix(r).unwrap();
            let w = v_matrix_inverse(r).unwrap();
            assert!(v.mul(&w).unwrap().is_identity(), "r={r}");
            assert!(w.mul(&v).unwrap().is_identity(), "r={r}");
        }
    }

    #[test]
    fn proof_pipeline_small() {
        for r in 1..=3 {
            let rep = proof_pipeline_check(r).unwrap();
            assert!(rep.ok, "{}: {}", rep.label, rep.detail);
        }
    }

    #[test]
    fn product_kernel_gives_covariance() {
        // t(x,y) = xy gives a_2 = m_2 - m_1^2 = mu_2 with eigenvalue C_{2,2}
        let pop = OraclePopulation::from_ints(&[0, 1, 2]).unwrap();
        let kernel = Kernel::from_fn(2, pop.values(), |args| (&args[0] * &args[1])).unwrap();
        let a2 = generalized_moment(&kernel, pop.values()).unwrap();
        assert_eq!(a2, BigRational::new(2.into(), 3.into())); // mu_2 of (0,1,2)
        let rep = eigen_check(&kernel, &pop, 2).unwrap();
        assert!(rep.ok, "{}", rep.detail);
    }

    #[test]
    fn arity_three_product_kernel() {
        let pop = OraclePopulation::from_ints(&[0, 1, 2]).unwrap();
        let kernel =
            Kernel::from_fn(3, pop.values(), |args| (&args[0] * &args[1]) * &args[2]).unwrap();
        let rep = eigen_check(&kernel, &pop, 2).unwrap();
        assert!(rep.ok, "{}", rep.detail);
    }

    #[test]
    fn raw_moment_kernels_have_unit_eigenvalue() {
        // arity-1 kernels are means of functions: E a_1(Fhat) = a_1(F)
        let pop = OraclePopulation::from_ints(&[1, 3, 4, 7]).unwrap();
        let kernel = Kernel::from_fn(1, pop.values(), |args| (&args[0] * &args[0])).unwrap();
        let a1 = generalized_moment(&kernel, pop.values()).unwrap();
        let e = crate::oracle::expectation(&pop, 2, |s| generalized_moment(&kernel, s)).unwrap();
        assert_eq!(e, a1);
    }
}
