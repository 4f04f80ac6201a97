//! Sparse bivariate polynomials in the symbols `n` (sample size) and `N`
//! (population size) over arbitrary-precision rationals.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The two symbols of the coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    /// The sample size symbol, printed `n`.
    SampleSize,
    /// The population size symbol, printed `N`.
    PopSize,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::SampleSize => Var::PopSize,
            Var::PopSize => Var::SampleSize,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::SampleSize => write!(f, "n"),
            Var::PopSize => write!(f, "N"),
        }
    }
}

pub fn brat(i: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(i))
}

/// Exponent pair; `.0` is the power of `n`, `.1` the power of `N`.
pub type Exps = (u32, u32);

/// Sparse bivariate polynomial; no stored zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly2 {
    pub(crate) terms: BTreeMap<Exps, BigRational>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2::default()
    }

    pub fn one() -> Self {
        Poly2::constant(brat(1))
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        Poly2 { terms }
    }

    pub fn var(v: Var) -> Self {
        Poly2::monomial(brat(1), exps_for(v, 1))
    }

    pub fn monomial(c: BigRational, e: Exps) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Poly2 { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&(0, 0)))
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(brat(0));
        }
        if self.is_constant() {
            return self.terms.get(&(0, 0)).cloned();
        }
        None
    }

    pub fn degree(&self, v: Var) -> i64 {
        if self.is_zero() {
            return -1;
        }
        self.terms
            .keys()
            .map(|&(dn, dd)| match v {
                Var::SampleSize => dn as i64,
                Var::PopSize => dd as i64,
            })
            .max()
            .unwrap()
    }

    pub fn add(&self, other: &Poly2) -> Poly2 {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(*e).or_insert_with(|| brat(0));
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        Poly2 { terms }
    }

    pub fn neg(&self) -> Poly2 {
        Poly2 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Poly2) -> Poly2 {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly2) -> Poly2 {
        let mut terms: BTreeMap<Exps, BigRational> = BTreeMap::new();
        for (&(a1, a2), ca) in &self.terms {
            for (&(b1, b2), cb) in &other.terms {
                let e = (a1 + b1, a2 + b2);
                let prod = ca * cb;
                let entry = terms.entry(e).or_insert_with(|| brat(0));
                *entry += prod;
                if entry.is_zero() {
                    terms.remove(&e);
                }
            }
        }
        Poly2 { terms }
    }

    pub fn scale(&self, c: &BigRational) -> Poly2 {
        if c.is_zero() {
            return Poly2::zero();
        }
        Poly2 {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly2 {
        let mut acc = Poly2::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Swap the roles of n and N.
    pub fn swap_vars(&self) -> Poly2 {
        Poly2 {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((b, a), c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, n0: &BigRational, pop0: &BigRational) -> BigRational {
        // Horner in N with inner Horner in n over the dense views.
        let mut acc = brat(0);
        for (&(dn, dd), c) in &self.terms {
            acc += c * pow_rat(n0, dn) * pow_rat(pop0, dd);
        }
        acc
    }

    /// Substitute a value for one variable, producing a polynomial in the other.
    pub fn eval_var(&self, v: Var, x: &BigRational) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(dn, dd), c) in &self.terms {
            let (d_sub, d_keep) = match v {
                Var::SampleSize => (dn, dd),
                Var::PopSize => (dd, dn),
            };
            let coeff = c * pow_rat(x, d_sub);
            let e = match v {
                Var::SampleSize => (0, d_keep),
                Var::PopSize => (d_keep, 0),
            };
            out = out.add(&Poly2::monomial(coeff, e));
        }
        out
    }

    /// Coefficient of `v^k`, a polynomial in the other variable.
    pub fn coeff_of(&self, v: Var, k: u32) -> Poly2 {
        let mut terms = BTreeMap::new();
        for (&(dn, dd), c) in &self.terms {
            let (d_v, d_o) = match v {
                Var::SampleSize => (dn, dd),
                Var::PopSize => (dd, dn),
            };
            if d_v == k {
                terms.insert(exps_for(v.other(), d_o), c.clone());
            }
        }
        Poly2 { terms }
    }

    /// Graded-lex leading key: total degree, then N-degree, then n-degree.
    fn leading_exps(&self) -> Option<Exps> {
        self.terms
            .keys()
            .max_by_key(|&&(dn, dd)| (dn + dd, dd, dn))
            .copied()
    }

    /// Leading coefficient under graded-lex(N, n).
    pub fn leading_coeff(&self) -> BigRational {
        match self.leading_exps() {
            Some(e) => self.terms[&e].clone(),
            None => brat(0),
        }
    }

    /// Rational content: gcd of coefficient numerators over lcm of denominators,
    /// signed to match the leading coefficient.
    pub fn content(&self) -> BigRational {
        if self.is_zero() {
            return brat(0);
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_bigint_gcd(&num_gcd, c.numer());
            den_lcm = num_bigint_lcm(&den_lcm, c.denom());
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        if self.leading_coeff().is_negative() {
            content = -content;
        }
        content
    }

    /// `self / content`: integer coefficients, positive leading coefficient.
    pub fn primitive(&self) -> Poly2 {
        if self.is_zero() {
            return Poly2::zero();
        }
        let c = self.content();
        self.scale(&c.recip())
    }

    /// Falling factorial `(x)_j = x (x-1) ... (x-j+1)` with `(x)_0 = 1`.
    pub fn falling(v: Var, j: u32) -> Poly2 {
        let x = Poly2::var(v);
        let mut acc = Poly2::one();
        for i in 0..j {
            acc = acc.mul(&x.sub(&Poly2::constant(brat(i as i64))));
        }
        acc
    }

    /// Falling factorial of an arbitrary polynomial argument.
    pub fn falling_of(base: &Poly2, j: u32) -> Poly2 {
        let mut acc = Poly2::one();
        for i in 0..j {
            acc = acc.mul(&base.sub(&Poly2::constant(brat(i as i64))));
        }
        acc
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &BigRational)> {
        self.terms.iter()
    }
}

pub fn exps_for(v: Var, d: u32) -> Exps {
    match v {
        Var::SampleSize => (d, 0),
        Var::PopSize => (0, d),
    }
}

pub fn pow_rat(x: &BigRational, k: u32) -> BigRational {
    let mut acc = brat(1);
    for _ in 0..k {
        acc *= x;
    }
    acc
}

pub fn num_bigint_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    num_integer::Integer::gcd(a, b)
}

pub fn num_bigint_lcm(a: &BigInt, b: &BigInt) -> BigInt {
    num_integer::Integer::lcm(a, b)
}

// ---------- rendering ----------

fn rational_str(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn monomial_str(e: Exps) -> String {
    let (dn, dd) = e;
    let mut pieces = Vec::new();
    if dn == 1 {
        pieces.push("n".to_string());
    } else if dn > 1 {
        pieces.push(format!("n^{dn}"));
    }
    if dd == 1 {
        pieces.push("N".to_string());
    } else if dd > 1 {
        pieces.push(format!("N^{dd}"));
    }
    pieces.join("*")
}

/// Expanded sum form with terms in graded-lex descending order, e.g.
/// `N^2 - 3*N + 2` or `n*N - n - N + 1`.
pub fn poly_sum_str(p: &Poly2) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut keys: Vec<Exps> = p.terms.keys().copied().collect();
    keys.sort_by_key(|&(dn, dd)| std::cmp::Reverse((dn + dd, dd, dn)));
    let mut out = String::new();
    for (i, e) in keys.iter().enumerate() {
        let c = &p.terms[e];
        let mono = monomial_str(*e);
        let mag = c.abs();
        let piece = if mono.is_empty() {
            rational_str(&mag)
        } else if mag.is_one() {
            mono
        } else {
            format!("{}*{}", rational_str(&mag), mono)
        };
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push('-');
        } else {
            out.push('+');
        }
        out.push_str(&piece);
    }
    out
}

/// Factored-where-possible rendering: rational content, monomial part, then
/// the remaining multi-term polynomial in parentheses.
///
/// Returns the pieces joined by `*`; a bare monomial or constant needs no
/// parentheses.
pub fn poly_factored_str(p: &Poly2) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    if p.terms.len() == 1 {
        let (&e, c) = p.terms.iter().next().unwrap();
        let mono = monomial_str(e);
        if mono.is_empty() {
            return rational_str(c);
        }
        if c.is_one() {
            return mono;
        }
        if (-c.clone()).is_one() {
            return format!("-{mono}");
        }
        return format!("{}*{}", rational_str(c), mono);
    }
    // extract the common monomial
    let min_dn = p.terms.keys().map(|&(dn, _)| dn).min().unwrap();
    let min_dd = p.terms.keys().map(|&(_, dd)| dd).min().unwrap();
    let content = p.content();
    let mut reduced = Poly2 {
        terms: p
            .terms
            .iter()
            .map(|(&(dn, dd), c)| ((dn - min_dn, dd - min_dd), c / &content))
            .collect(),
    };
    let mut pieces: Vec<String> = Vec::new();
    let mut lead = String::new();
    if !content.is_one() {
        if (-content.clone()).is_one() {
            lead = "-".to_string();
        } else {
            pieces.push(rational_str(&content));
        }
    }
    let mono = monomial_str((min_dn, min_dd));
    if !mono.is_empty() {
        pieces.push(mono);
    }
    if reduced.is_one() {
        if pieces.is_empty() {
            return if lead.is_empty() { "1".into() } else { "-1".into() };
        }
    } else {
        if reduced.terms.len() == 1 {
            pieces.push(monomial_str(*reduced.terms.keys().next().unwrap()));
        } else {
            pieces.push(format!("({})", poly_sum_str(&reduced)));
        }
        let _ = &mut reduced;
    }
    format!("{lead}{}", pieces.join("*"))
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", poly_sum_str(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n() -> Poly2 {
        Poly2::var(Var::SampleSize)
    }
    fn pop() -> Poly2 {
        Poly2::var(Var::PopSize)
    }

    #[test]
    fn arithmetic_basics() {
        let p = n().mul(&pop()).sub(&Poly2::one());
        let q = p.mul(&p);
        assert_eq!(q.degree(Var::SampleSize), 2);
        assert_eq!(q.degree(Var::PopSize), 2);
        assert_eq!(
            q.eval(&brat(3), &brat(5)),
            brat(14 * 14)
        );
    }

    #[test]
    fn falling_factorial_expands() {
        let f = Poly2::falling(Var::SampleSize, 3);
        // n(n-1)(n-2) = n^3 - 3n^2 + 2n
        assert_eq!(f.eval(&brat(5), &brat(0)), brat(60));
        assert_eq!(Poly2::falling(Var::SampleSize, 0), Poly2::one());
    }

    #[test]
    fn content_and_primitive() {
        let p = n().scale(&brat(4)).add(&Poly2::constant(brat(6)));
        assert_eq!(p.content(), brat(2));
        let pp = p.primitive();
        assert_eq!(pp.eval(&brat(1), &brat(0)), brat(5));
    }

    #[test]
    fn factored_rendering() {
        // N*(n-1)
        let p = pop().mul(&n().sub(&Poly2::one()));
        assert_eq!(poly_factored_str(&p), "N*(n-1)");
        let q = n().sub(&Poly2::one());
        assert_eq!(poly_factored_str(&q), "(n-1)");
        assert_eq!(poly_factored_str(&n()), "n");
    }
}
