//! The exact coefficient field: rational functions in the sample-size symbol
//! `n` and the population-size symbol `N` over arbitrary-precision rationals.
//!
//! Canonical form: numerator and denominator coprime, denominator a primitive
//! integer polynomial whose leading coefficient under graded-lex(N, n) is
//! positive.  Equality is structural equality of canonical forms.

mod gcd;
mod parse;
mod poly;

pub use parse::parse_ratfunc;
pub use poly::{brat, poly_factored_str, poly_sum_str, Poly2, Var};

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use gcd::{poly_exact_div, poly_gcd};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly2,
    den: Poly2,
}

impl RatFunc {
    pub fn new(num: Poly2, den: Poly2) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::domain("zero denominator"));
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(mut num: Poly2, mut den: Poly2) -> Self {
        if num.is_zero() {
            return RatFunc {
                num: Poly2::zero(),
                den: Poly2::one(),
            };
        }
        let g = poly_gcd(&num, &den);
        if !g.is_one() && !g.is_zero() {
            num = poly_exact_div(&num, &g).expect("gcd divides numerator");
            den = poly_exact_div(&den, &g).expect("gcd divides denominator");
        }
        let c = den.content();
        debug_assert!(!c.is_zero());
        num = num.scale(&c.recip());
        den = den.scale(&c.recip());
        RatFunc { num, den }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly2::zero(),
            den: Poly2::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: Poly2::one(),
            den: Poly2::one(),
        }
    }

    pub fn from_int(i: i64) -> Self {
        RatFunc {
            num: Poly2::constant(brat(i)),
            den: Poly2::one(),
        }
    }

    pub fn from_rational(c: BigRational) -> Self {
        RatFunc {
            num: Poly2::constant(c),
            den: Poly2::one(),
        }
    }

    pub fn from_poly(p: Poly2) -> Self {
        RatFunc {
            num: p,
            den: Poly2::one(),
        }
    }

    pub fn var(v: Var) -> Self {
        RatFunc::from_poly(Poly2::var(v))
    }

    /// Falling factorial `(v)_j` as a polynomial.
    pub fn falling(v: Var, j: u32) -> Self {
        RatFunc::from_poly(Poly2::falling(v, j))
    }

    pub fn numer(&self) -> &Poly2 {
        &self.num
    }

    pub fn denom(&self) -> &Poly2 {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// Constant value if the function is free of both symbols.
    pub fn constant_value(&self) -> Option<BigRational> {
        let n = self.num.constant_value()?;
        let d = self.den.constant_value()?;
        Some(n / d)
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // accumulate over the lcm of the denominators: gcds between
        // denominators are far cheaper than gcds against summed numerators
        let g = poly_gcd(&self.den, &other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            let den = self.den.mul(&other.den);
            // coprime denominators: the sum is already reduced up to content
            return Self::content_normalized(num, den);
        }
        let da = poly_exact_div(&self.den, &g).expect("gcd divides");
        let db = poly_exact_div(&other.den, &g).expect("gcd divides");
        let num = self.num.mul(&db).add(&other.num.mul(&da));
        let den = self.den.mul(&db);
        Self::normalized(num, den)
    }

    /// Normalize content and sign only; used when numerator and denominator
    /// are already known to be coprime.
    fn content_normalized(num: Poly2, den: Poly2) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let c = den.content();
        RatFunc {
            num: num.scale(&c.recip()),
            den: den.scale(&c.recip()),
        }
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        // cross-cancel before multiplying; both inputs are reduced, so the
        // result of the cross-cancelled product is reduced as well
        let g1 = poly_gcd(&self.num, &other.den);
        let g2 = poly_gcd(&other.num, &self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), other.den.clone())
        } else {
            (
                poly_exact_div(&self.num, &g1).expect("gcd divides"),
                poly_exact_div(&other.den, &g1).expect("gcd divides"),
            )
        };
        let (c, b) = if g2.is_one() {
            (other.num.clone(), self.den.clone())
        } else {
            (
                poly_exact_div(&other.num, &g2).expect("gcd divides"),
                poly_exact_div(&self.den, &g2).expect("gcd divides"),
            )
        };
        Self::content_normalized(a.mul(&c), b.mul(&d))
    }

    pub fn scale(&self, c: &BigRational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        if other.is_zero() {
            return Err(Error::domain("division by zero rational function"));
        }
        Ok(Self::normalized(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn recip(&self) -> Result<RatFunc> {
        RatFunc::one().div(self)
    }

    /// Integer power; negative exponents invert (error on zero base).
    pub fn powi(&self, k: i32) -> Result<RatFunc> {
        if k < 0 {
            return self.recip()?.powi(-k);
        }
        let mut acc = RatFunc::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        Ok(acc)
    }

    /// Swap the symbols n and N: the inversion-principle orientation flip.
    pub fn swap_vars(&self) -> RatFunc {
        Self::normalized(self.num.swap_vars(), self.den.swap_vars())
    }

    /// Exact evaluation; a vanishing denominator is a pole error naming the
    /// offending linear factor when one exists.
    pub fn eval(&self, n0: &BigRational, pop0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(n0, pop0);
        if d.is_zero() {
            return Err(self.pole_error(n0, pop0));
        }
        Ok(self.num.eval(n0, pop0) / d)
    }

    fn pole_error(&self, n0: &BigRational, pop0: &BigRational) -> Error {
        let factor = if self.den.eval_var(Var::SampleSize, n0).is_zero() {
            format!("(n - {})", rat_str(n0))
        } else if self.den.eval_var(Var::PopSize, pop0).is_zero() {
            format!("(N - {})", rat_str(pop0))
        } else {
            poly_factored_str(&self.den)
        };
        // smallest sample size that clears every root of the denominator at
        // this population size, when the roots are small integers
        let mut hint = None;
        let mut last_root: Option<u64> = None;
        for k in 1..=64u64 {
            if self
                .den
                .eval(&BigRational::from_integer(k.into()), pop0)
                .is_zero()
            {
                last_root = Some(k);
            }
        }
        if let Some(k) = last_root {
            let candidate = k + 1;
            // only meaningful if the pole is in the n direction
            if self.den.eval_var(Var::SampleSize, n0).is_zero()
                || self
                    .den
                    .eval(&BigRational::from_integer(candidate.into()), pop0)
                    .is_zero()
                    == false
            {
                hint = Some(candidate);
            }
        }
        Error::Pole {
            factor,
            n: rat_str(n0),
            pop: rat_str(pop0),
            hint,
        }
    }

    /// Limit as `v -> infinity`: the ratio of leading coefficients in `v`,
    /// a rational function of the other symbol alone.  Errors if the numerator
    /// degree exceeds the denominator degree.
    pub fn limit_inf(&self, v: Var) -> Result<RatFunc> {
        if self.is_zero() {
            return Ok(RatFunc::zero());
        }
        let dn = self.num.degree(v);
        let dd = self.den.degree(v);
        if dn > dd {
            return Err(Error::Divergence(format!(
                "{self} grows without bound as {v} -> infinity"
            )));
        }
        if dn < dd {
            return Ok(RatFunc::zero());
        }
        let num = self.num.coeff_of(v, dn as u32);
        let den = self.den.coeff_of(v, dd as u32);
        Ok(Self::normalized(num, den))
    }
}

fn rat_str(c: &BigRational) -> String {
    use num_traits::One;
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// `e_j = (n)_j / (N)_j`, the probability that j distinct sample slots land on
/// j fixed distinct population members; `e_0 = 1`.
pub fn e_j(j: u32) -> RatFunc {
    RatFunc::new(
        Poly2::falling(Var::SampleSize, j),
        Poly2::falling(Var::PopSize, j),
    )
    .expect("falling factorial denominator is nonzero")
}

/// `v^k` as a RatFunc, supporting negative k.
pub fn var_pow(v: Var, k: i32) -> RatFunc {
    RatFunc::var(v).powi(k).expect("nonzero base")
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", poly_factored_str(&self.num));
        }
        let num = poly_factored_str(&self.num);
        let den = poly_factored_str(&self.den);
        let den = if is_atomic(&den) {
            den
        } else {
            format!("({den})")
        };
        write!(f, "{num}/{den}")
    }
}

/// True when a rendered factor needs no parentheses as a denominator:
/// a bare symbol/power, an integer, or a single fully parenthesized group.
fn is_atomic(s: &str) -> bool {
    if s.chars().all(|c| c.is_ascii_digit()) {
        return true;
    }
    let bare_power = |s: &str| {
        let mut cs = s.chars();
        matches!(cs.next(), Some('n' | 'N'))
            && (s.len() == 1 || (s[1..].starts_with('^') && s[2..].chars().all(|c| c.is_ascii_digit())))
    };
    if bare_power(s) {
        return true;
    }
    if s.starts_with('(') && s.ends_with(')') {
        let mut depth = 0i32;
        for (i, c) in s.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 && i != s.len() - 1 {
                        return false;
                    }
                }
                _ => {}
            }
        }
        return true;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RatFunc {
        parse_ratfunc(s).unwrap()
    }

    #[test]
    fn e_j_examples() {
        assert_eq!(e_j(0), RatFunc::one());
        assert_eq!(e_j(1), rf("n/N"));
        assert_eq!(e_j(2), rf("n*(n-1)/(N*(N-1))"));
        // full census: e_2 at n = N is 1
        let v = e_j(2).eval(&brat(7), &brat(7)).unwrap();
        assert_eq!(v, brat(1));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(e_j(2).eval(&brat(2), &brat(3)).unwrap(), brat(1) / brat(3));
        let c22 = rf("N*(n-1)/(n*(N-1))");
        assert_eq!(c22.eval(&brat(2), &brat(3)).unwrap(), brat(3) / brat(4));
        // (2)_3 = 0: numerator vanishes, fine
        assert_eq!(e_j(3).eval(&brat(2), &brat(5)).unwrap(), brat(0));
    }

    #[test]
    fn pole_is_an_error_naming_factor() {
        let f = rf("1/(n-1)");
        let err = f.eval(&brat(1), &brat(9)).unwrap_err();
        match err {
            Error::Pole { factor, hint, .. } => {
                assert_eq!(factor, "(n - 1)");
                assert_eq!(hint, Some(2));
            }
            other => panic!("expected pole, got {other:?}"),
        }
    }

    #[test]
    fn limits_match_substitution_rules() {
        // C_{2,2} = N(n-1)/(n(N-1)) -> (n-1)/n as N -> inf
        let c22 = rf("N*(n-1)/(n*(N-1))");
        assert_eq!(c22.limit_inf(Var::PopSize).unwrap(), rf("(n-1)/n"));
        // and -> N/(N-1) as n -> inf
        assert_eq!(c22.limit_inf(Var::SampleSize).unwrap(), rf("N/(N-1)"));
        // N^j e_j -> (n)_j
        let lhs = var_pow(Var::PopSize, 2).mul(&e_j(2));
        assert_eq!(
            lhs.limit_inf(Var::PopSize).unwrap(),
            RatFunc::falling(Var::SampleSize, 2)
        );
        // N^i e_j -> 0 for i < j
        let small = var_pow(Var::PopSize, 1).mul(&e_j(2));
        assert!(small.limit_inf(Var::PopSize).unwrap().is_zero());
        // e_1 -> 0 as N -> inf
        assert!(e_j(1).limit_inf(Var::PopSize).unwrap().is_zero());
        // n^{-j} e_j -> 1/(N)_j
        let lhs = var_pow(Var::SampleSize, -2).mul(&e_j(2));
        assert_eq!(
            lhs.limit_inf(Var::SampleSize).unwrap(),
            RatFunc::falling(Var::PopSize, 2).recip().unwrap()
        );
        // constants survive
        assert_eq!(
            RatFunc::from_int(5).limit_inf(Var::SampleSize).unwrap(),
            RatFunc::from_int(5)
        );
        // divergence is an error
        assert!(var_pow(Var::PopSize, 3)
            .mul(&e_j(2))
            .limit_inf(Var::PopSize)
            .is_err());
    }

    #[test]
    fn canonical_equality_cross_multiplies() {
        // a/b == c/d iff ad == cb
        let a = rf("(N-n)/(n*(N-1))");
        let b = rf("(N*N - n*N)/(n*N*(N-1))");
        assert_eq!(a, b);
    }

    #[test]
    fn swap_vars_roundtrip() {
        let f = rf("N*(n-1)/(n*(N-1))");
        assert_eq!(f.swap_vars().swap_vars(), f);
        assert_eq!(f.swap_vars(), rf("n*(N-1)/(N*(n-1))"));
    }

    #[test]
    fn display_matches_expected_forms() {
        assert_eq!(rf("N*(n-1)/(n*(N-1))").to_string(), "N*(n-1)/(n*(N-1))");
        assert_eq!(rf("(n-1)/n").to_string(), "(n-1)/n");
        assert_eq!(RatFunc::zero().to_string(), "0");
        assert_eq!(RatFunc::from_int(-3).to_string(), "-3");
    }
}
