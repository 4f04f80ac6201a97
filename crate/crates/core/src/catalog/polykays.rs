//! Published estimator rows for products of cumulants, finite and infinite
//! population.  The infinite rows for single cumulants are the classical
//! k-statistics.

use crate::error::Result;
use crate::partition::Partition;
use crate::polykay::{polykay, Regime};
use crate::ratfunc::parse_ratfunc;

use super::Discrepancy;

pub struct PolykayFixture {
    /// cumulant orders, one part per factor
    pub target: &'static str,
    pub regime: Regime,
    /// common prefactor
    pub scale: &'static str,
    /// estimator coefficients per sample central product
    pub entries: &'static [(&'static str, &'static str)],
    pub errata: Option<&'static str>,
}

pub const POLYKAY_FIXTURES: &[PolykayFixture] = &[
    PolykayFixture {
        target: "4",
        regime: Regime::Finite,
        scale: "n*(N-1)*N^-3*(n-1)_3^-1",
        entries: &[
            ("4", "N^2*n^2-6*N*n^2+6*n^2+6*n+N^2*n-6*N"),
            ("2^2", "-3*(N^2*n^2-N^2*n-4*N*n^2+6*n^2+6*N-6*n)"),
        ],
        errata: None,
    },
    PolykayFixture {
        target: "5",
        regime: Regime::Finite,
        scale: "n^2*(N-1)_2*N^-4*(n-1)_4^-1",
        entries: &[
            ("5", "N^2*n^2-12*N*n^2+12*n^2+5*N^2*n+60*n-60*N"),
            ("2 3", "-10*(N^2*n^2-N^2*n-6*N*n^2+12*n^2+12*N-12*n)"),
        ],
        errata: None,
    },
    PolykayFixture {
        target: "1 4",
        regime: Regime::Finite,
        scale: "n*(N-1)*N^-4*(n-1)_4^-1",
        entries: &[
            ("5", "-(N-n)*(N^2*n^2+5*N^2*n-18*N*n-6*N*n^2-12*N+6*n^2+30*n)"),
            ("2 3", "2*(N-n)*(5*N^2*n^2-5*N^2*n+18*N*n-24*N*n^2+12*N+30*n^2-30*n)"),
            ("1 4", "N*(n-4)*(N^2*n^2-6*N*n^2+6*n^2+6*n+N^2*n-6*N)"),
            ("1 2^2", "-3*N*(n-4)*(N^2*n^2-N^2*n-4*N*n^2+6*n^2+6*N-6*n)"),
            ("1^2 3", "0"),
            ("1^3 2", "0"),
            ("1^5", "0"),
        ],
        errata: None,
    },
    PolykayFixture {
        target: "6",
        regime: Regime::Finite,
        scale: "n*(N-1)*(n-1)_5^-1*N^-5",
        entries: &[
            ("6", "1890*N^2*n^2-1800*N*n-2400*N*n^2+600*N^2*n-90*N^3*n^3+480*N-480*n+480*N^2-120*N^3+1320*n^2+1920*n^3-30*N^3*n^4+N^4*n^4+480*N^2*n^3-1800*N*n^3-390*N^3*n^2-90*N^3*n+150*N^2*n^4-240*N*n^4+16*N^4*n^3+11*N^4*n^2-4*N^4*n+120*n^4"),
            ("2 4", "-15*(6*N^2*n^2+1320*N*n-360*N^2*n-480*N+480*n-480*N^2+120*N^3-840*n^2+240*n^3-16*N^3*n^4+N^4*n^4+36*N^2*n^3-96*N*n^3-26*N^3*n^2+90*N^3*n+78*N^2*n^4-168*N*n^4+2*N^4*n^3-7*N^4*n^2+4*N^4*n+120*n^4)"),
            ("3^2", "-10*(-54*N^2*n^2-1080*N*n+120*N*n^2+240*N^2*n+480*N-480*n+480*N^2-120*N^3+600*n^2-240*n^3-12*N^3*n^4+N^4*n^4-60*N^2*n^3+144*N*n^3+54*N^3*n^2-90*N^3*n+66*N^2*n^4-144*N*n^4-2*N^4*n^3+5*N^4*n^2-4*N^4*n+120*n^4)"),
            ("2^3", "30*n*(N-2)*(9*N^2*n^2-180*N*n-36*N*n^2+36*N^2*n+N^3*n^3+120*N-120*n+180*n^2-60*n^3-9*N^2*n^3+36*N*n^3-3*N^3*n^2+2*N^3*n)"),
        ],
        errata: None,
    },
    PolykayFixture {
        target: "1 5",
        regime: Regime::Finite,
        scale: "n*(N-1)_2*N^-4*(n-1)_4^-1",
        entries: &[
            ("6", "-(n+1)*(N-n)*(n^2*N^2-12*n^2*N+12*n^2+15*n*N^2-60*n*N+180*n-4*N^2-72*N-48)*N^-1*(n-5)^-1"),
            ("2 4", "15*(N-n)*(n^3*N^2-7*n*N^2+4*N^2+2*n^2*N^2-8*n^3*N+72*N-16*n*N+24*n^2+12*n^3+48-84*n)*N^-1*(n-5)^-1"),
            ("3^2", "10*(N-n)*(n^3*N^2+5*n*N^2-4*N^2-2*n^2*N^2+30*n*N-6*n^3*N-72*N-48-24*n^2+12*n^3+60*n)*N^-1*(n-5)^-1"),
            ("2^3", "-30*(N-n)*n*(n^2*N^2-3*n*N^2+2*N^2+12*n*N+6*N-6*n^2*N+12*n^2-36*n+24)*N^-1*(n-5)^-1"),
            ("1 5", "n*(n^2*N^2-12*n^2*N+12*n^2+60*n+5*n*N^2-60*N)"),
            ("1 2 3", "-10*n*(n^2*N^2-n*N^2-6*n^2*N+12*N-12*n+12*n^2)"),
            ("1^2 4", "0"),
            ("1^2 2^2", "0"),
            ("1^3 3", "0"),
            ("1^4 2", "0"),
            ("1^6", "0"),
        ],
        errata: None,
    },
    PolykayFixture {
        target: "1^2 4",
        regime: Regime::Finite,
        scale: "n*(N-1)*N^-5*(n-1)_5^-1",
        entries: &[
            ("6", "(N-n)*(24+174*N*n-28*N^2*n^2+84*N*n^2-83*N^2*n+24*N-66*n-56*N^2+4*N^3-96*n^2-6*n^3+6*N*n^3-N^2*n^3+2*N^3*n^2+18*N^3*n)"),
            ("2 4", "-(N-n)*(-210*N*n-90*N^2*n^2+198*N*n^2-69*N^2*n+N^3*n^3-360*N+630*n+360*N^2-60*N^3-180*n^2-90*n^3+84*N*n^3-21*N^2*n^3+15*N^3*n^2+20*N^3*n-360)"),
            ("3^2", "-2*(N-n)*(-26*N^2*n^2-30*N*n+6*N*n^2+59*N^2*n+120*N-150*n-100*N^2+20*N^3+60*n^2-30*n^3-5*N^2*n^3+24*N*n^3+7*N^3*n^2-15*N^3*n+120)"),
            ("2^3", "3*n*(N-2)*(N-n)*(3*N^2*n-12*N*n^2+12*N*n+30*n^2-90*n+30*N+60-10*N^2+N^2*n^2)"),
            ("1 5", "-2*N*(n-5)*(N-n)*(N^2*n^2+5*N^2*n-18*N*n-6*N*n^2-12*N+6*n^2+30*n)"),
            ("1 2 3", "4*N*(n-5)*(N-n)*(5*N^2*n^2-5*N^2*n+18*N*n-24*N*n^2+12*N+30*n^2-30*n)"),
            ("1^2 4", "N^2*(n-4)_2*(N^2*n^2-6*N*n^2+6*n^2+N^2*n+6*n-6*N)"),
            ("1^2 2^2", "-3*N^2*(n-4)_2*(-N^2*n-4*N*n^2+6*n^2+6*N-6*n+N^2*n^2)"),
            ("1^3 3", "0"),
            ("1^4 2", "0"),
            ("1^6", "0"),
        ],
        errata: None,
    },
    PolykayFixture {
        target: "2 4",
        regime: Regime::Finite,
        scale: "n*(N-1)*(n-1)_5^-1*N^-5",
        entries: &[
            ("6", "-(N-n)*(24-16*N^2*n^2+24*N*n+84*N*n^2-5*N^2*n+N^3*n^3+24*N-66*n+4*N^2+4*N^3-96*n^2-6*n^3-7*N^2*n^3+12*N*n^3+2*N^3*n^2-7*N^3*n)"),
            ("2 4", "-93*N^2*n^2+990*N*n-120*N^2*n+24*N^3*n^3-360*N+360*n-360*N^2-60*N^3-630*n^2-60*N^4+180*n^3-14*N^3*n^4+N^4*n^4+48*N^2*n^3-72*N*n^3-121*N^3*n^2+255*N^3*n+57*N^2*n^4-126*N*n^4-10*N^4*n^2+45*N^4*n+90*n^4"),
            ("3^2", "2*(N-n)*(58*N^2*n^2+30*N*n-66*N*n^2-85*N^2*n+2*N^3*n^3+120*N-150*n+20*N^2+20*N^3+60*n^2-30*n^3-17*N^2*n^3+36*N*n^3-5*N^3*n^2-5*N^3*n+120)"),
            ("2^3", "-3*n*(N-2)*(9*N^2*n^2-90*N*n-18*N*n^2+8*N^2*n+N^3*n^3+60*N-60*n-20*N^3+90*n^2-30*n^3-5*N^2*n^3+18*N*n^3-7*N^3*n^2+20*N^3*n)"),
        ],
        errata: None,
    },
    // infinite-population rows: the k-statistics
    PolykayFixture {
        target: "4",
        regime: Regime::InfinitePopulation,
        scale: "n^2*(n-1)_3^-1",
        entries: &[("4", "n+1"), ("2^2", "-3*(n-1)")],
        errata: None,
    },
    PolykayFixture {
        target: "5",
        regime: Regime::InfinitePopulation,
        scale: "n^3*(n-1)_4^-1",
        entries: &[("5", "n+5"), ("2 3", "-10*(n+1)")],
        errata: Some("polykay-k5-infinite"),
    },
    PolykayFixture {
        target: "1 4",
        regime: Regime::InfinitePopulation,
        scale: "n^2*(n-1)_4^-1",
        entries: &[
            ("5", "-(n+5)"),
            ("2 3", "10*(n-1)"),
            ("1 4", "(n+1)*(n-4)"),
            ("1 2^2", "-3*(n-1)*(n-4)"),
        ],
        errata: None,
    },
    PolykayFixture {
        target: "6",
        regime: Regime::InfinitePopulation,
        scale: "n^2*(n-1)_5^-1",
        entries: &[
            ("6", "(n+1)*(n^2+15*n-4)"),
            ("2 4", "-15*(n+4)*(n-1)^2"),
            ("3^2", "-10*(n^2-n+4)*(n-1)"),
            ("2^3", "30*n*(n-1)_2"),
        ],
        errata: None,
    },
    PolykayFixture {
        target: "1 5",
        regime: Regime::InfinitePopulation,
        scale: "1",
        entries: &[
            ("6", "-n*(n+1)*(n^2-4+15*n)*(n-1)_5^-1"),
            ("2 4", "15*n*(n+4)*(n-1)*(n-2)_4^-1"),
            ("3^2", "10*(n^2-n+4)*n*(n-2)_4^-1"),
            ("2^3", "-30*n^2*(n-3)_3^-1"),
            ("1 5", "n^3*(n+5)*(n-1)_4^-1"),
            ("1 2 3", "-10*n^3*(n-2)_3^-1"),
        ],
        errata: None,
    },
];

pub fn check_polykay_fixtures() -> Result<Vec<Discrepancy>> {
    let mut out = Vec::new();
    for f in POLYKAY_FIXTURES {
        let target: Partition = f.target.parse()?;
        let built = polykay(&target, f.regime)?;
        let scale = parse_ratfunc(f.scale)?;
        let mut mismatches = Vec::new();
        for (col, val) in f.entries {
            let col_pi: Partition = col.parse()?;
            let printed = scale.mul(&parse_ratfunc(val)?);
            let derived = built.estimator_coeff(&col_pi);
            if printed != derived {
                mismatches.push(format!("col {col}: printed {printed}, derived {derived}"));
            }
        }
        if !mismatches.is_empty() {
            out.push(Discrepancy {
                table: "polykay catalog",
                label: format!(
                    "kappa({}) at {:?}",
                    f.target, f.regime
                ),
                printed: mismatches.join("; "),
                derived: String::new(),
                errata: f.errata,
            });
        }
    }
    Ok(out)
}
