//! Infinite-population fixtures: entries of the central catalog as the
//! population size grows without bound, and entries of the inverse (the
//! estimator coefficients) in the same limit.

use crate::error::Result;
use crate::matrices::{expectation_matrix, oriented_matrix, Family, Orientation};
use crate::partition::Partition;
use crate::ratfunc::{parse_ratfunc, Var};

use super::Discrepancy;

pub struct LimitFixture {
    pub row: &'static str,
    pub col: &'static str,
    pub value: &'static str,
    pub errata: Option<&'static str>,
}

macro_rules! lf {
    ($row:literal, $col:literal, $v:literal) => {
        LimitFixture { row: $row, col: $col, value: $v, errata: None }
    };
    ($row:literal, $col:literal, $v:literal, $e:literal) => {
        LimitFixture { row: $row, col: $col, value: $v, errata: Some($e) }
    };
}

/// Values of the central catalog at infinite population size.
pub const FORWARD_LIMIT_FIXTURES: &[LimitFixture] = &[
    lf!("2", "2", "(n-1)*n^-1"),
    lf!("1^2", "2", "n^-1"),
    lf!("1^2", "1^2", "1"),
    lf!("3", "3", "(n-1)_2*n^-2"),
    lf!("1 2", "3", "(n-1)*n^-2"),
    lf!("1 2", "1 2", "(n-1)*n^-1"),
    lf!("1 2", "1^3", "0"),
    lf!("1^3", "3", "n^-2"),
    lf!("1^3", "1 2", "3*n^-1"),
    lf!("1^3", "1^3", "1"),
    lf!("4", "4", "(n-1)*(n^2-3*n+3)*n^-3"),
    lf!("4", "2^2", "3*(n-1)*(2*n-3)*n^-3"),
    lf!("2^2", "4", "(n-1)^2*n^-3"),
    lf!("2^2", "2^2", "(n-1)*(n^2-2*n+3)*n^-3"),
    lf!("1 3", "4", "(n-1)_2*n^-3"),
    lf!("1 3", "2^2", "-3*(n-1)_2*n^-3"),
    lf!("1 3", "1 3", "(n-1)_2*n^-2"),
    lf!("1 3", "1^2 2", "0"),
    lf!("1 3", "1^4", "0"),
    lf!("1^2 2", "4", "(n-1)*n^-3"),
    lf!("1^2 2", "2^2", "(n-1)*(n-3)*n^-3"),
    lf!("1^2 2", "1 3", "2*(n-1)*n^-2"),
    lf!("1^2 2", "1^2 2", "(n-1)*n^-1"),
    lf!("1^2 2", "1^4", "0"),
    lf!("1^4", "4", "n^-3"),
    lf!("1^4", "2^2", "3*(n-1)*n^-3"),
    lf!("1^4", "1 3", "4*n^-2"),
    lf!("1^4", "1^2 2", "6*n^-1"),
    lf!("1^4", "1^4", "1"),
    lf!("5", "5", "(n-1)_2*(n^2-2*n+2)*n^-4"),
    lf!("5", "2 3", "10*(n-1)*(n-2)^2*n^-4"),
    lf!("2 3", "5", "(n-2)*(n-1)^2*n^-4"),
    lf!("2 3", "2 3", "(n-1)_2*(n^2-5*n+10)*n^-4"),
    lf!("1 4", "5", "(n-1)*(n^2-3*n+3)*n^-4"),
    lf!("1 4", "2 3", "-2*(n-1)*(2*n^2-12*n+15)*n^-4"),
    lf!("1 2^2", "5", "(n-1)^2*n^-4"),
    lf!("1 2^2", "2 3", "2*(n-1)*(n^2-4*n+5)*n^-4"),
    lf!("1^2 3", "5", "(n-1)_2*n^-4"),
    lf!("1^2 3", "2 3", "(n-10)*(n-1)_2*n^-4"),
    lf!("1^3 2", "5", "(n-1)*n^-4"),
    lf!("1^3 2", "2 3", "2*(n-1)*(2*n-5)*n^-4"),
    lf!("1^5", "5", "n^-4"),
    lf!("1^5", "2 3", "10*(n-1)*n^-4"),
    // the printed multiplier 15 contradicts the binomial lift from the
    // one-lower row, which carries factor 5
    lf!("1^5", "1 2^2", "45*(n-1)*n^-3", "limit-15-lift"),
    lf!("6", "6", "(n-1)*(n^4-5*n^3+10*n^2-10*n+5)*n^-5"),
    lf!("6", "2 4", "15*(n-1)*(n^3-4*n^2+7*n-5)*n^-5"),
    lf!("6", "3^2", "-10*(n-1)*(2*n^2-6*n+5)*n^-5"),
    lf!("6", "2^3", "15*(3*n-5)*(n-1)_2*n^-5"),
    lf!("2 4", "6", "(n^2-3*n+3)*(n-1)^2*n^-5"),
    lf!("2 4", "2 4", "(n-1)*(n^4-5*n^3+30*n^2-63*n+45)*n^-5"),
    lf!("2 4", "3^2", "-2*(n-1)*(2*n^3-8*n^2+18*n-15)*n^-5"),
    lf!("2 4", "2^3", "3*(n-1)_2*(2*n^2-9*n+15)*n^-5"),
    lf!("3^2", "6", "(n-1)^2*(n-2)^2*n^-5"),
    lf!("3^2", "2 4", "-3*(n-1)*(2*n-5)*(n-2)^2*n^-5"),
    lf!("3^2", "3^2", "(n-1)*(n^2-2*n+10)*(n-2)^2*n^-5"),
    lf!("3^2", "2^3", "3*(n-1)_2*(3*n^2-12*n+20)*n^-5"),
    lf!("2^3", "6", "(n-1)^3*n^-5"),
    lf!("2^3", "2 4", "3*(n^2-2*n+5)*(n-1)^2*n^-5"),
    lf!("2^3", "3^2", "-2*(n-1)*(3*n^2-6*n+5)*n^-5"),
    lf!("2^3", "2^3", "(n-1)_2*(n^3-3*n^2+9*n-15)*n^-5"),
    lf!("1^2 4", "6", "(n-1)*(n^2-3*n+3)*n^-5"),
    lf!("1^2 4", "2 4", "(n-1)*(n-3)*(n^2-9*n+15)*n^-5"),
    lf!("1^2 4", "3^2", "-2*(n-1)*(2*n^2-12*n+15)*n^-5"),
    lf!("1^2 4", "2^3", "9*(2*n-5)*(n-1)_2*n^-5"),
    lf!("1 2 3", "6", "(n-2)*(n-1)^2*n^-5"),
    lf!("1 2 3", "2 4", "(n-1)_2*(n^2-10*n+15)*n^-5"),
    lf!("1 2 3", "3^2", "(n-1)_2*(n^2-5*n+10)*n^-5"),
    lf!("1 2 3", "2^3", "-3*(n-1)_2*(n^2-5*n+10)*n^-5"),
    lf!("1^3 3", "6", "(n-1)_2*n^-5"),
    lf!("1^3 3", "2 4", "3*(n-5)*(n-1)_2*n^-5"),
    lf!("1^3 3", "3^2", "(n-10)*(n-1)_2*n^-5"),
    lf!("1^3 3", "2^3", "-3*(3*n-10)*(n-1)_2*n^-5"),
    lf!("1^2 2^2", "6", "(n-1)^2*n^-5"),
    lf!("1^2 2^2", "2 4", "(3*n-5)*(n-1)*(n-3)*n^-5"),
    lf!("1^2 2^2", "3^2", "2*(n-1)*(n^2-4*n+5)*n^-5"),
    lf!("1^2 2^2", "2^3", "(n-1)_2*(n^2-6*n+15)*n^-5"),
    lf!("1^4 2", "6", "(n-1)*n^-5"),
    lf!("1^4 2", "2 4", "(n-1)*(7*n-15)*n^-5"),
    lf!("1^4 2", "3^2", "2*(n-1)*(2*n-5)*n^-5"),
    lf!("1^4 2", "2^3", "3*(n-5)*(n-1)_2*n^-5"),
    lf!("1^6", "6", "n^-5"),
    lf!("1^6", "2 4", "15*(n-1)*n^-5"),
    lf!("1^6", "3^2", "10*(n-1)*n^-5"),
    lf!("1^6", "2^3", "15*(n-1)_2*n^-5"),
];

/// Estimator-side fixtures: entries of the swapped matrix in the same limit.
pub const INVERSE_LIMIT_FIXTURES: &[LimitFixture] = &[
    lf!("2", "2", "n*(n-1)^-1"),
    lf!("1^2", "2", "-(n-1)^-1"),
    lf!("1^2", "1^2", "1"),
    lf!("3", "3", "(n-1)_2^-1*n^2"),
    lf!("1 2", "3", "-n*(n-1)_2^-1"),
    lf!("1^3", "3", "2*(n-1)_2^-1"),
    lf!("1 2", "1 2", "n*(n-1)^-1"),
    lf!("1 2", "1^3", "0"),
    lf!("1^3", "1 2", "-3*(n-1)^-1"),
    lf!("1^3", "1^3", "1"),
    lf!("4", "4", "n*(n^2-2*n+3)*(n-1)_3^-1"),
    lf!("4", "2^2", "-3*n*(2*n-3)*(n-1)_3^-1"),
    lf!("2^2", "4", "-n*(n-2)_2^-1"),
    lf!("2^2", "2^2", "n*(n^2-3*n+3)*(n-1)_3^-1"),
    lf!("1 3", "4", "-n*(1+n)*(n-1)_3^-1"),
    lf!("1 3", "2^2", "3*n*(n-2)_2^-1"),
    lf!("1^2 2", "4", "2*n*(n-1)_3^-1"),
    lf!("1^2 2", "2^2", "-n^2*(n-1)_3^-1"),
    lf!("1^4", "4", "-6*(n-1)_3^-1"),
    lf!("1^4", "2^2", "3*n*(n-1)_3^-1"),
    lf!("1 3", "1 3", "n^2*(n-1)_2^-1"),
    lf!("1 3", "1^2 2", "0"),
    lf!("1 3", "1^4", "0"),
    lf!("1^2 2", "1 3", "-2*n*(n-1)_2^-1"),
    lf!("1^2 2", "1^2 2", "n*(n-1)^-1"),
    lf!("1^2 2", "1^4", "0"),
    lf!("1^4", "1 3", "8*(n-1)_2^-1"),
    lf!("1^4", "1^2 2", "-6*(n-1)^-1"),
    lf!("1^4", "1^4", "1"),
    lf!("5", "5", "n^2*(n^2-5*n+10)*(n-1)_4^-1"),
    lf!("5", "2 3", "-10*n^2*(n-1)^-1*(n-3)_2^-1"),
    lf!("2 3", "5", "-n^2*(n-2)_3^-1"),
    lf!("2 3", "2 3", "n^2*(n^2-2*n+2)*(n-1)_4^-1"),
    lf!("1 4", "5", "-n*(n^2-n+6)*(n-1)_4^-1"),
    lf!("1 4", "2 3", "2*n*(n+2)*(2*n-3)*(n-1)_4^-1"),
    lf!("1 2^2", "5", "2*n*(n-2)_3^-1"),
    lf!("1 2^2", "2 3", "-2*n*(n^2-2*n+2)*(n-1)_4^-1"),
    lf!("1^2 3", "5", "2*n*(n+2)*(n-1)_4^-1"),
    lf!("1^2 3", "2 3", "-n*(n^2+8*n-8)*(n-1)_4^-1"),
    lf!("1^3 2", "5", "-6*n*(n-1)_4^-1"),
    lf!("1^3 2", "2 3", "5*n^2*(n-1)_4^-1"),
    lf!("1^5", "5", "24*(n-1)_4^-1"),
    lf!("1^5", "2 3", "-20*n*(n-1)_4^-1"),
    lf!("1 4", "1 4", "n*(n^2-2*n+3)*(n-1)_3^-1"),
    lf!("1 4", "1 2^2", "-3*n*(2*n-3)*(n-1)_3^-1"),
    lf!("1 4", "1^2 3", "0"),
    lf!("1 4", "1^3 2", "0"),
    lf!("1 4", "1^5", "0"),
    lf!("1 2^2", "1 4", "-n*(n-2)_2^-1"),
    lf!("1 2^2", "1 2^2", "n*(n^2-3*n+3)*(n-1)_3^-1"),
    lf!("1 2^2", "1^2 3", "0"),
    lf!("1 2^2", "1^3 2", "0"),
    lf!("1 2^2", "1^5", "0"),
    lf!("1^2 3", "1 4", "-2*n*(n+1)*(n-1)_3^-1"),
    lf!("1^2 3", "1 2^2", "6*n*(n-2)_2^-1"),
    lf!("1^2 3", "1^2 3", "n^2*(n-1)_2^-1"),
    lf!("1^2 3", "1^3 2", "0"),
    lf!("1^2 3", "1^5", "0"),
    lf!("1^3 2", "1 4", "6*n*(n-1)_3^-1"),
    lf!("1^3 2", "1 2^2", "-3*n^2*(n-1)_3^-1"),
    lf!("1^3 2", "1^2 3", "-3*n*(n-1)_2^-1"),
    lf!("1^3 2", "1^3 2", "n*(n-1)^-1"),
    lf!("1^3 2", "1^5", "0"),
    lf!("1^5", "1 4", "-30*(n-1)_3^-1"),
    lf!("1^5", "1 2^2", "15*n*(n-1)_3^-1"),
    lf!("1^5", "1^2 3", "20*(n-1)_2^-1"),
    lf!("1^5", "1^3 2", "-10*(n-1)^-1"),
    lf!("1^5", "1^5", "1"),
    lf!("6", "6", "n*(n^4-9*n^3+31*n^2-39*n+40)*(n-1)_5^-1"),
    lf!("6", "2 4", "-15*n*(n^3-8*n^2+29*n-40)*(n-1)_5^-1"),
    lf!("6", "3^2", "-40*n*(n^2-6*n+10)*(n-1)_5^-1"),
    lf!("6", "2^3", "15*n^2*(3*n-10)*(n-1)_5^-1"),
    lf!("2 4", "6", "-n*(n^2-3*n+8)*(n-2)_4^-1"),
    lf!("2 4", "2 4", "n*(n^4-9*n^3+53*n^2-135*n+120)*(n-1)_5^-1"),
    lf!("2 4", "3^2", "4*n*(n^2-5*n+10)*(n-1)^-1*(n-3)_3^-1"),
    lf!("2 4", "2^3", "-3*n^2*(2*n-5)*(n-1)^-1*(n-3)_3^-1"),
    lf!("3^2", "6", "-n*(n^2-n+4)*(n-2)_4^-1"),
    lf!("3^2", "2 4", "3*n*(2*n^3-5*n^2-5*n+20)*(n-1)_5^-1"),
    lf!("3^2", "3^2", "n*(n^4-8*n^3+25*n^2-10*n-40)*(n-1)_5^-1"),
    lf!("3^2", "2^3", "-3*n^2*(3*n^2-15*n+20)*(n-1)_5^-1"),
    lf!("2^3", "6", "2*n*(n-3)_3^-1"),
    lf!("2^3", "2 4", "-3*n*(n^2-5*n+10)*(n-1)^-1*(n-3)_3^-1"),
    lf!("2^3", "3^2", "-2*n*(3*n^2-15*n+20)*(n-1)_5^-1"),
    lf!("2^3", "2^3", "n^2*(n^2-7*n+15)*(n-1)^-1*(n-3)_3^-1"),
    lf!("1^2 4", "6", "2*n*(n^2+11)*(n-1)_5^-1"),
    lf!("1^2 4", "2 4", "-n*(n^3+47*n-90)*(n-1)_5^-1"),
    lf!("1^2 4", "3^2", "-4*(n+5)*n*(n-3)_3^-1*(n-1)^-1", "inverse-limit-1sq4-3sq"),
    lf!("1^2 4", "2^3", "9*n^2*(2*n-5)*(n-1)_5^-1"),
    lf!("1 2 3", "6", "2*(n+1)*n*(n-2)_4^-1"),
    lf!("1 2 3", "2 4", "-n*(n^3+6*n^2-25*n+30)*(n-1)_5^-1"),
    lf!("1 2 3", "3^2", "-n*(n^3+15*n-4*n^2-20)*(n-1)_5^-1"),
    lf!("1 2 3", "2^3", "3*n^2*(n^2-4*n+5)*(n-1)_5^-1"),
    lf!("1^3 3", "6", "-6*n*(3+n)*(n-1)_5^-1"),
    lf!("1^3 3", "2 4", "3*(n+10)*n*(n-2)_4^-1"),
    lf!("1^3 3", "3^2", "2*n^2*(3+n)*(n-1)_5^-1"),
    lf!("1^3 3", "2^3", "-3*n^2*(3*n-5)*(n-1)_5^-1"),
    lf!("1^2 2^2", "6", "-6*n*(n-2)_4^-1"),
    lf!("1^2 2^2", "2 4", "n*(5*n^2-9*n+10)*(n-1)_5^-1"),
    lf!("1^2 2^2", "3^2", "2*n^2*(n-2)_4^-1"),
    lf!("1^2 2^2", "2^3", "-n^2*(n^2-3*n+5)*(n-1)_5^-1"),
    lf!("1^4 2", "6", "24*n*(n-1)_5^-1"),
    lf!("1^4 2", "2 4", "-18*n^2*(n-1)_5^-1"),
    lf!("1^4 2", "3^2", "-8*n^2*(n-1)_5^-1"),
    lf!("1^4 2", "2^3", "3*n^3*(n-1)_5^-1"),
    lf!("1^6", "6", "-120*(n-1)_5^-1"),
    lf!("1^6", "2 4", "90*n*(n-1)_5^-1"),
    lf!("1^6", "3^2", "40*n*(n-1)_5^-1"),
    lf!("1^6", "2^3", "-15*n^2*(n-1)_5^-1"),
];

pub fn check_forward_limits() -> Result<Vec<Discrepancy>> {
    let mut out = Vec::new();
    for f in FORWARD_LIMIT_FIXTURES {
        let row: Partition = f.row.parse()?;
        let col: Partition = f.col.parse()?;
        let derived = expectation_matrix(Family::CentralProduct, row.weight())?
            .entry(&row, &col)?
            .limit_inf(Var::PopSize)?;
        let printed = parse_ratfunc(f.value)?;
        if derived != printed {
            out.push(Discrepancy {
                table: "forward limit catalog",
                label: format!("C[{}][{}] at infinite population", f.row, f.col),
                printed: printed.to_string(),
                derived: derived.to_string(),
                errata: f.errata,
            });
        }
    }
    Ok(out)
}

pub fn check_inverse_limits() -> Result<Vec<Discrepancy>> {
    let mut out = Vec::new();
    for f in INVERSE_LIMIT_FIXTURES {
        let row: Partition = f.row.parse()?;
        let col: Partition = f.col.parse()?;
        let derived = oriented_matrix(Family::CentralProduct, row.weight(), Orientation::SamplePop)?
            .entry(&row, &col)?
            .limit_inf(Var::PopSize)?;
        let printed = parse_ratfunc(f.value)?;
        if derived != printed {
            out.push(Discrepancy {
                table: "inverse limit catalog",
                label: format!("C^[{}][{}] at infinite population", f.row, f.col),
                printed: printed.to_string(),
                derived: derived.to_string(),
                errata: f.errata,
            });
        }
    }
    Ok(out)
}

/// The worked example: the (1 2, 3) entry at both limits.
pub fn check_mixed_limit_example() -> Result<Vec<Discrepancy>> {
    let mut out = Vec::new();
    let row: Partition = "1 2".parse()?;
    let col: Partition = "3".parse()?;
    let entry = expectation_matrix(Family::CentralProduct, 3)?
        .entry(&row, &col)?
        .clone();
    // at infinite population: (n)_1 (n^-1 - n^-2) = (n-1)/n^2
    let pop_inf = entry.limit_inf(Var::PopSize)?;
    if pop_inf != parse_ratfunc("(n-1)*n^-2")? {
        out.push(Discrepancy {
            table: "mixed limit example",
            label: "C[1 2][3] at infinite population".into(),
            printed: "(n-1)/n^2".into(),
            derived: pop_inf.to_string(),
            errata: None,
        });
    }
    // the worked example claims N { 1/(N)_1 + 1/(N)_2 } at infinite sample
    // size and (n)_1 (n^-1 - n^-2) at infinite population; both contradict
    // the closed catalog forms, which the limits above verify
    let n_inf = entry.limit_inf(Var::SampleSize)?;
    let printed = parse_ratfunc("N*((N)_1^-1+(N)_2^-1)")?;
    if n_inf != printed {
        out.push(Discrepancy {
            table: "mixed limit example",
            label: "C[1 2][3] at infinite sample size".into(),
            printed: printed.to_string(),
            derived: n_inf.to_string(),
            errata: Some("limit-example-12-3"),
        });
    }
    Ok(out)
}
