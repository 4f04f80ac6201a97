//! The errata ledger: printed-table values that the derivation refutes, with
//! mechanical verdicts.
//!
//! The ledger lives in `KNOWN_ERRATA.toml` at the repository root and is
//! embedded at compile time.  The verification suite checks three things:
//! every discrepancy found by the catalog comparisons carries a ledger id,
//! every ledger id is actually exercised by some catalog fixture, and the
//! spot verdicts below reproduce.

use serde::Deserialize;

use crate::error::{Error, Result};

pub const LEDGER_TOML: &str = include_str!("../../../KNOWN_ERRATA.toml");

#[derive(Debug, Clone, Deserialize)]
pub struct Erratum {
    pub id: String,
    pub location: String,
    pub printed: String,
    pub derived: String,
    pub verdict: String,
    pub note: String,
}

#[derive(Debug, Clone, Deserialize)]
struct Ledger {
    erratum: Vec<Erratum>,
}

pub fn ledger() -> Result<Vec<Erratum>> {
    let l: Ledger =
        toml::from_str(LEDGER_TOML).map_err(|e| Error::parse(format!("ledger: {e}")))?;
    Ok(l.erratum)
}

/// Every errata id referenced by the catalog fixtures.
pub fn fixture_errata_ids() -> Vec<&'static str> {
    let mut ids: Vec<&'static str> = Vec::new();
    for f in crate::catalog::LAMBDA_FIXTURES {
        ids.extend(f.errata);
    }
    for f in crate::catalog::POWER_SUM_FIXTURES {
        ids.extend(f.errata);
    }
    ids.push("five-factor-sum-count");
    for f in crate::catalog::CENTRAL_FIXTURES {
        ids.extend(f.errata);
    }
    for f in crate::catalog::limits::FORWARD_LIMIT_FIXTURES {
        ids.extend(f.errata);
    }
    for f in crate::catalog::limits::INVERSE_LIMIT_FIXTURES {
        ids.extend(f.errata);
    }
    ids.push("limit-example-12-3");
    for f in crate::catalog::polykays::POLYKAY_FIXTURES {
        ids.extend(f.errata);
    }
    for f in crate::catalog::dstar_cat::DSTAR_FIXTURES {
        ids.extend(f.errata);
    }
    ids.push("kc16-24-denominator");
    ids.sort_unstable();
    ids.dedup();
    ids
}

/// Ledger-vs-fixtures consistency: ids match in both directions.
pub fn check_ledger_consistency() -> Result<Vec<String>> {
    let ledger = ledger()?;
    let ledger_ids: Vec<&str> = ledger.iter().map(|e| e.id.as_str()).collect();
    let fixture_ids = fixture_errata_ids();
    let mut problems = Vec::new();
    for id in &fixture_ids {
        if !ledger_ids.contains(id) {
            problems.push(format!("fixture id `{id}` missing from the ledger"));
        }
    }
    for id in &ledger_ids {
        if !fixture_ids.contains(id) {
            problems.push(format!("ledger id `{id}` not exercised by any fixture"));
        }
    }
    Ok(problems)
}

/// Spot verdicts that re-derive the adjudications recorded in the ledger.
pub fn check_verdicts() -> Result<Vec<String>> {
    use crate::data::Dataset;
    use crate::estimate::{parse_target, ue, MuConvention};
    use crate::oracle::{expectation, OraclePopulation};
    use crate::ratfunc::{brat, parse_ratfunc};

    let mut failures = Vec::new();
    let mut check = |name: &str, ok: bool| {
        if !ok {
            failures.push(name.to_string());
        }
    };

    // lambda-unit-two: at n = N the weight-3 pattern coefficient must vanish
    {
        let lam = crate::carver::carver_lambda(&"1 2".parse()?)?;
        let census = lam.as_ratfunc().eval(&brat(9), &brat(9))?;
        check("lambda(1 2) census value is 0", census == brat(0));
        // the printed variant e_2 - 2 e_3 gives -1 at census
        let printed = crate::ratfunc::e_j(2).sub(&crate::ratfunc::e_j(3).scale(&brat(2)));
        check(
            "printed lambda(1 2) census value is -1",
            printed.eval(&brat(9), &brat(9))? == brat(-1),
        );
    }

    // powersum-5-last-row: forward oracle for the derived row passes
    {
        let pop = OraclePopulation::from_ints(&[0, 1, 3, 2, 6])?;
        let rep = crate::oracle::verify_expectation_row(
            crate::matrices::Family::RawProduct,
            5,
            &"1^5".parse()?,
            &pop,
            5,
        )?;
        check("derived order-5 last row passes the oracle", rep.is_equal());
    }

    // five-factor-sum-count
    {
        let p = crate::partition::partition_function(&"1 4".parse()?);
        check("P(1 4) = 5", p == 5u32.into());
    }

    // central-1sq2-4-sign: forward identity for the (1^2 2) row
    {
        let pop = OraclePopulation::from_ints(&[0, 2, 3, 7])?;
        let rep = crate::oracle::verify_expectation_row(
            crate::matrices::Family::CentralProduct,
            4,
            &"1^2 2".parse()?,
            &pop,
            3,
        )?;
        check("derived (1^2 2) central row passes the oracle", rep.is_equal());
    }

    // inverse-limit check: forward-limit matrix times inverse-limit matrix
    {
        use crate::matrices::{expectation_matrix, oriented_matrix, Family, Orientation};
        use crate::ratfunc::Var;
        let fwd = expectation_matrix(Family::CentralProduct, 6)?.limit_inf(Var::PopSize)?;
        let inv = oriented_matrix(Family::CentralProduct, 6, Orientation::SamplePop)?
            .limit_inf(Var::PopSize)?;
        check(
            "limit matrices are mutually inverse at r = 6",
            fwd.mul(&inv)?.is_identity(),
        );
    }

    // polykay-k5-infinite: forward expectation of the derived row returns the
    // cumulant weights; the printed row does not
    {
        use crate::matrices::{expectation_matrix, Family};
        use crate::ratfunc::Var;
        use crate::moments::PartitionVec;
        let fwd = expectation_matrix(Family::CentralProduct, 5)?.limit_inf(Var::PopSize)?;
        let apply = |row: &PartitionVec| -> Result<PartitionVec> {
            let mut out = PartitionVec::zero();
            for (pi, c) in row.iter() {
                out = out.add(&fwd.row_vec(pi)?.scale_rf(c));
            }
            Ok(out)
        };
        let derived = crate::polykay::polykay(
            &"5".parse()?,
            crate::polykay::Regime::InfinitePopulation,
        )?;
        let expect_derived = apply(&derived.estimator)?;
        check(
            "derived infinite kappa_5 row is unbiased",
            expect_derived.get(&"5".parse()?).is_one()
                && expect_derived.get(&"2 3".parse()?) == crate::ratfunc::RatFunc::from_int(-10),
        );
        let mut printed = PartitionVec::zero();
        printed.insert(
            "5".parse()?,
            parse_ratfunc("n^3*(n+5)*(n-1)_4^-1")?,
        );
        printed.insert(
            "2 3".parse()?,
            parse_ratfunc("-10*n^3*(n+1)*(n-1)_4^-1")?,
        );
        let expect_printed = apply(&printed)?;
        check(
            "printed infinite kappa_5 row is biased",
            expect_printed.get(&"2 3".parse()?) != crate::ratfunc::RatFunc::from_int(-10),
        );
    }

    // dstar-uncentered-rows: the account reproduces every printed coefficient
    {
        let fails = crate::catalog::dstar_cat::check_uncentered_account()?;
        check("uncentered account matches all printed rows", fails.is_empty());
        // and the derived centered row is what the oracle certifies
        let pop = OraclePopulation::from_ints(&[0, 1, 3, 6, 2, 5, 4])?;
        let t = parse_target("mu(1^2 2)", MuConvention::Sampling)?;
        let rep = crate::estimate::verify_unbiased(&t, &pop, 5)?;
        check("derived centered mu(1^2 2) row is unbiased", rep.is_equal());
        // the printed row is exactly unbiased for the uncentered target
        let printed4 = parse_ratfunc("(N-n)*n^-1*(2*N-n-n^2)*(n-2)_2^-1*N^-2")?
            .eval(&brat(5), &brat(7))?;
        let printed22 = parse_ratfunc(
            "(N-n)*n^-1*(6*N+N*n^2-6*N*n-3*n+3*n^2)*(n-2)_2^-1*N^-2",
        )?
        .eval(&brat(5), &brat(7))?;
        let e_printed = expectation(&pop, 5, |s| {
            let d = Dataset::population(s.to_vec())?;
            Ok(printed4.clone() * d.central_moment(4)
                + printed22.clone() * d.central_moment(2) * d.central_moment(2))
        })?;
        // uncentered target value: E[(Xbar-mu)^2 muhat_2]
        let uncentered = {
            let popd = Dataset::population(pop.values().to_vec())?;
            let mut v = brat(0);
            for (pi, c) in crate::matrices::gamma_row(2, &[2])? {
                v += c.eval(&brat(5), &brat(7))? * popd.central_product(&pi);
            }
            v
        };
        check(
            "printed mu(1^2 2) row estimates the uncentered moment",
            e_printed == uncentered,
        );
    }

    // dstar-product-zero-claims: zeroing the out-of-support columns biases
    {
        let pop = OraclePopulation::from_ints(&[0, 1, 3, 6, 2])?;
        let t = parse_target("mu(1^2)^2", MuConvention::Sampling)?;
        let rep = crate::estimate::verify_unbiased(&t, &pop, 4)?;
        check("derived mu(1^2)^2 row is unbiased", rep.is_equal());
        let row = t.estimator_row()?;
        let c22 = row.get(&"2^2".parse()?).eval(&brat(4), &brat(5))?;
        let e_truncated = expectation(&pop, 4, |s| {
            let d = Dataset::population(s.to_vec())?;
            Ok(c22.clone() * d.central_moment(2) * d.central_moment(2))
        })?;
        let popd = Dataset::population(pop.values().to_vec())?;
        let target = t.value(&popd, 4)?;
        check(
            "zero-claim truncation biases mu(1^2)^2",
            e_truncated != target,
        );
    }

    // dstar-1sq4-row: the derived row passes the oracle
    {
        let pop = OraclePopulation::from_ints(&[0, 1, 3, 6, 2, 5, 4, 7])?;
        let t = parse_target("mu(1^2 4)", MuConvention::Sampling)?;
        let rep = crate::estimate::verify_unbiased(&t, &pop, 6)?;
        check("derived mu(1^2 4) row is unbiased", rep.is_equal());
    }

    // the grand identity behind every verdict: a spot unbiasedness check
    {
        let pop = OraclePopulation::from_ints(&[2, 0, 5, 3, 7, 1])?;
        let t = parse_target("k(4)", MuConvention::Population)?;
        let d_small = Dataset::sample(
            pop.values()[..4].to_vec(),
            pop.size() as u64,
        )?;
        let _ = ue(&t, &d_small)?;
        let rep = crate::estimate::verify_unbiased(&t, &pop, 4)?;
        check("kappa_4 estimator oracle identity", rep.is_equal());
    }

    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ledger_parses_and_is_consistent() {
        let l = ledger().unwrap();
        assert!(l.len() >= 10);
        let problems = check_ledger_consistency().unwrap();
        assert!(problems.is_empty(), "{problems:?}");
    }

    #[test]
    fn verdicts_hold() {
        let failures = check_verdicts().unwrap();
        assert!(failures.is_empty(), "{failures:?}");
    }
}
