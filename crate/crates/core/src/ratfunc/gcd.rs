//! Exact multivariate gcd and exact division for `Poly2`.
//!
//! The gcd runs over the integers by content/primitive-part recursion: a
//! `Poly2` is viewed as a univariate polynomial in `N` whose coefficients are
//! integer polynomials in `n`, and a primitive pseudo-remainder sequence does
//! the rest.  Sizes here are small (degrees well under 200), so the primitive
//! PRS is plenty.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{brat, num_bigint_gcd, Poly2};

/// Dense univariate integer polynomial in `n` (no trailing zeros).
type P1 = Vec<BigInt>;
/// Dense polynomial in `N` with `P1` coefficients (no trailing zeros).
type P2 = Vec<P1>;

fn p1_trim(mut a: P1) -> P1 {
    while a.last().map(|c| c.is_zero()).unwrap_or(false) {
        a.pop();
    }
    a
}

fn p1_is_zero(a: &P1) -> bool {
    a.is_empty()
}

fn p1_mul(a: &P1, b: &P1) -> P1 {
    if p1_is_zero(a) || p1_is_zero(b) {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    p1_trim(out)
}

fn p1_sub(a: &P1, b: &P1) -> P1 {
    let mut out = a.clone();
    if out.len() < b.len() {
        out.resize(b.len(), BigInt::zero());
    }
    for (i, cb) in b.iter().enumerate() {
        out[i] -= cb;
    }
    p1_trim(out)
}

fn p1_scale(a: &P1, c: &BigInt) -> P1 {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

fn p1_content(a: &P1) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = num_bigint_gcd(&g, c);
    }
    g
}

fn p1_primitive(a: &P1) -> P1 {
    if p1_is_zero(a) {
        return Vec::new();
    }
    let mut g = p1_content(a);
    if a.last().unwrap().is_negative() {
        g = -g;
    }
    a.iter().map(|c| c / &g).collect()
}

/// Primitive-PRS gcd in Z[n]; result is primitive with positive leading coeff.
fn p1_gcd(a: &P1, b: &P1) -> P1 {
    if p1_is_zero(a) {
        return p1_primitive(b);
    }
    if p1_is_zero(b) {
        return p1_primitive(a);
    }
    let ca = p1_content(a);
    let cb = p1_content(b);
    let c = num_bigint_gcd(&ca, &cb);
    let mut x = p1_primitive(a);
    let mut y = p1_primitive(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !p1_is_zero(&y) {
        let r = p1_prem(&x, &y);
        x = y;
        y = p1_primitive(&r);
    }
    p1_scale(&p1_primitive(&x), &c)
}

/// Pseudo-remainder of a by b in Z[n]: lc(b)^(da-db+1) * a mod b.
fn p1_prem(a: &P1, b: &P1) -> P1 {
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    let mut r = a.clone();
    while !p1_is_zero(&r) && r.len() - 1 >= db {
        let dr = r.len() - 1;
        let lead = r.last().unwrap().clone();
        // r = lb * r - lead * b * n^(dr-db)
        let mut scaled = p1_scale(&r, &lb);
        let mut shifted = vec![BigInt::zero(); dr - db];
        shifted.extend(p1_scale(b, &lead));
        scaled = p1_sub(&scaled, &shifted);
        r = scaled;
        if r.len() > dr {
            unreachable!("pseudo-remainder failed to reduce degree");
        }
    }
    r
}

fn p2_trim(mut a: P2) -> P2 {
    while a.last().map(p1_is_zero).unwrap_or(false) {
        a.pop();
    }
    a
}

fn p2_is_zero(a: &P2) -> bool {
    a.is_empty()
}

#[allow(dead_code)]
fn p2_mul(a: &P2, b: &P2) -> P2 {
    if p2_is_zero(a) || p2_is_zero(b) {
        return Vec::new();
    }
    let mut out = vec![Vec::new(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        for (j, cb) in b.iter().enumerate() {
            let prod = p1_mul(ca, cb);
            out[i + j] = p1_sub(&out[i + j], &p1_scale(&prod, &BigInt::from(-1)));
        }
    }
    p2_trim(out)
}

fn p2_sub(a: &P2, b: &P2) -> P2 {
    let mut out = a.clone();
    if out.len() < b.len() {
        out.resize(b.len(), Vec::new());
    }
    for (i, cb) in b.iter().enumerate() {
        out[i] = p1_sub(&out[i], cb);
    }
    p2_trim(out)
}

fn p2_scale1(a: &P2, c: &P1) -> P2 {
    p2_trim(a.iter().map(|x| p1_mul(x, c)).collect())
}

/// Content of a P2 as a polynomial in n.
fn p2_content(a: &P2) -> P1 {
    let mut g: P1 = Vec::new();
    for c in a {
        g = p1_gcd(&g, c);
    }
    g
}

fn p1_exact_div(a: &P1, b: &P1) -> Option<P1> {
    if p1_is_zero(a) {
        return Some(Vec::new());
    }
    if p1_is_zero(b) {
        return None;
    }
    // exact division over Q, then check integrality is not required (caller
    // works over Z but exactness over Q suffices for divisibility tests)
    let mut rem: Vec<BigRational> = a.iter().map(|c| BigRational::from_integer(c.clone())).collect();
    let bq: Vec<BigRational> = b.iter().map(|c| BigRational::from_integer(c.clone())).collect();
    let db = bq.len() - 1;
    let lb = bq.last().unwrap().clone();
    let mut quo = vec![brat(0); rem.len().saturating_sub(db)];
    loop {
        while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
            rem.pop();
        }
        if rem.is_empty() {
            break;
        }
        let dr = rem.len() - 1;
        if dr < db {
            return None;
        }
        let q = rem.last().unwrap() / &lb;
        quo[dr - db] = q.clone();
        for (i, cb) in bq.iter().enumerate() {
            let idx = dr - db + i;
            let delta = &q * cb;
            rem[idx] -= delta;
        }
    }
    // result must be integral for primitive inputs; normalize anyway
    let mut out = Vec::with_capacity(quo.len());
    for c in quo {
        if !c.denom().is_one() {
            return None;
        }
        out.push(c.numer().clone());
    }
    Some(p1_trim(out))
}

fn p2_primitive(a: &P2) -> P2 {
    if p2_is_zero(a) {
        return Vec::new();
    }
    let g = p2_content(a);
    p2_trim(
        a.iter()
            .map(|c| p1_exact_div(c, &g).expect("content divides"))
            .collect(),
    )
}

/// Pseudo-remainder in (Z[n])[N].
fn p2_prem(a: &P2, b: &P2) -> P2 {
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    let mut r = a.clone();
    while !p2_is_zero(&r) && r.len() - 1 >= db {
        let dr = r.len() - 1;
        let lead = r.last().unwrap().clone();
        let scaled = p2_scale1(&r, &lb);
        let mut shifted: P2 = vec![Vec::new(); dr - db];
        shifted.extend(p2_scale1(b, &lead).into_iter());
        r = p2_sub(&scaled, &shifted);
        if r.len() > dr {
            unreachable!("pseudo-remainder failed to reduce degree");
        }
    }
    r
}

fn p2_gcd(a: &P2, b: &P2) -> P2 {
    if p2_is_zero(a) {
        return p2_primitive_signed(b);
    }
    if p2_is_zero(b) {
        return p2_primitive_signed(a);
    }
    let ca = p2_content(a);
    let cb = p2_content(b);
    let c = p1_gcd(&ca, &cb);
    let mut x = p2_primitive(a);
    let mut y = p2_primitive(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !p2_is_zero(&y) {
        let r = p2_prem(&x, &y);
        x = y;
        y = p2_primitive(&r);
    }
    p2_scale1(&p2_primitive(&x), &c)
}

fn p2_primitive_signed(a: &P2) -> P2 {
    let p = p2_primitive(a);
    p
}

// ---------- conversions ----------

/// Clear denominators and strip integer content: returns the primitive
/// integer polynomial and the rational content such that
/// `poly = content * primitive`.
pub fn to_primitive(poly: &Poly2) -> (BigRational, P2) {
    if poly.is_zero() {
        return (brat(0), Vec::new());
    }
    let content = poly.content();
    let prim = poly.scale(&content.recip());
    let deg_pop = prim.degree(super::poly::Var::PopSize) as usize;
    let deg_n = prim.degree(super::poly::Var::SampleSize) as usize;
    let mut out: P2 = vec![vec![BigInt::zero(); deg_n + 1]; deg_pop + 1];
    for (&(dn, dd), c) in prim.terms() {
        debug_assert!(c.denom().is_one());
        out[dd as usize][dn as usize] = c.numer().clone();
    }
    (content, p2_trim(out.into_iter().map(p1_trim).collect()))
}

pub fn from_integer_poly(p: &P2) -> Poly2 {
    let mut out = Poly2::zero();
    for (dd, coeff) in p.iter().enumerate() {
        for (dn, c) in coeff.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&Poly2::monomial(
                    BigRational::from_integer(c.clone()),
                    (dn as u32, dd as u32),
                ));
            }
        }
    }
    out
}

/// Gcd of two `Poly2`, primitive over the integers with positive leading
/// coefficient under graded-lex; gcd(0, 0) = 0.
///
/// A cheap univariate probe runs first: substituting an integer for one
/// variable bounds the gcd degree in the other, and most pairs met in matrix
/// arithmetic are coprime, which the probe detects without any bivariate
/// pseudo-division.
pub fn poly_gcd(a: &Poly2, b: &Poly2) -> Poly2 {
    if a.is_zero() && b.is_zero() {
        return Poly2::zero();
    }
    if a.is_zero() || b.is_zero() {
        let z = if a.is_zero() { b } else { a };
        let mut out = z.primitive();
        if out.leading_coeff().is_negative() {
            out = out.neg();
        }
        return out;
    }
    if a.is_constant() || b.is_constant() {
        return Poly2::one();
    }
    let (_, pa) = to_primitive(a);
    let (_, pb) = to_primitive(b);
    let deg_n_bound = probe_degree(&pa, &pb, true);
    let deg_pop_bound = probe_degree(&pa, &pb, false);
    if deg_n_bound == 0 && deg_pop_bound == 0 {
        return Poly2::one();
    }
    let g = if deg_n_bound == 0 {
        // gcd lies in Z[N]: gcd of the n-direction coefficient polynomials
        content_gcd_in_pop(&pa, &pb)
    } else if deg_pop_bound == 0 {
        // gcd lies in Z[n]
        vec![p1_gcd(&p2_content(&pa), &p2_content(&pb))]
    } else {
        p2_gcd(&pa, &pb)
    };
    let mut out = from_integer_poly(&g);
    if out.leading_coeff().is_negative() {
        out = out.neg();
    }
    out.primitive()
}

/// Upper bound for the gcd degree in one variable: substitute a point for the
/// other variable (avoiding leading-coefficient collapse) and take the degree
/// of the resulting univariate gcd.
fn probe_degree(a: &P2, b: &P2, in_pop: bool) -> usize {
    // points chosen to make accidental degree collapse implausible; the probe
    // only needs an upper bound, and any valid substitution gives one
    for point in [101i64, 307, 1013] {
        let x = BigInt::from(point);
        let (ua, ok_a) = substitute(a, &x, in_pop);
        let (ub, ok_b) = substitute(b, &x, in_pop);
        if !(ok_a && ok_b) {
            continue;
        }
        let g = p1_gcd(&ua, &ub);
        return g.len().saturating_sub(1);
    }
    usize::MAX // no usable point: fall through to the full PRS
}

/// Substitute `x` for one variable of a dense integer bivariate polynomial,
/// returning the univariate image in the other variable and whether the
/// leading term survived.
fn substitute(p: &P2, x: &BigInt, for_pop: bool) -> (P1, bool) {
    if for_pop {
        // image in n: sum over N-degree of coeff * x^dd
        let mut xp = BigInt::from(1);
        let deg_n = p.iter().map(|c| c.len()).max().unwrap_or(0);
        let mut out = vec![BigInt::zero(); deg_n];
        for coeff in p {
            for (i, c) in coeff.iter().enumerate() {
                out[i] += c * &xp;
            }
            xp *= x;
        }
        let acc = p1_trim(out);
        let ok = acc.len() == deg_n;
        (acc, ok)
    } else {
        // image in N: evaluate each coefficient polynomial at x
        let mut out: P1 = Vec::with_capacity(p.len());
        for coeff in p {
            let mut v = BigInt::zero();
            for c in coeff.iter().rev() {
                v = v * x + c;
            }
            out.push(v);
        }
        let acc = p1_trim(out);
        let ok = acc.len() == p.len();
        (acc, ok)
    }
}

/// Gcd constrained to Z[N]: gcd over all n-direction coefficient slices.
fn content_gcd_in_pop(a: &P2, b: &P2) -> P2 {
    // reinterpret as polynomials in n with coefficients in Z[N]
    let slices = |p: &P2| -> Vec<P1> {
        let deg_n = p.iter().map(|c| c.len()).max().unwrap_or(0);
        let mut out = vec![Vec::new(); deg_n];
        for (dd, coeff) in p.iter().enumerate() {
            for (dn, c) in coeff.iter().enumerate() {
                if out[dn].len() <= dd {
                    out[dn].resize(dd + 1, BigInt::zero());
                }
                if !c.is_zero() {
                    out[dn][dd] = c.clone();
                }
            }
        }
        out.into_iter().map(p1_trim).collect()
    };
    let mut g: P1 = Vec::new();
    for s in slices(a).into_iter().chain(slices(b)) {
        g = p1_gcd(&g, &s);
        if g.len() == 1 {
            break;
        }
    }
    // g is a polynomial in N; embed as P2
    p2_trim(g.into_iter().map(|c| p1_trim(vec![c])).collect())
}

/// Exact division `a / b`, if `b` divides `a` over the rationals.
pub fn poly_exact_div(a: &Poly2, b: &Poly2) -> Option<Poly2> {
    if a.is_zero() {
        return Some(Poly2::zero());
    }
    if b.is_zero() {
        return None;
    }
    if let Some(c) = b.constant_value() {
        return Some(a.scale(&c.recip()));
    }
    // long division in N over Q[n]
    let (ca, pa) = to_primitive(a);
    let (cb, pb) = to_primitive(b);
    let mut rem = pa;
    let db = pb.len() - 1;
    let lb = pb.last().unwrap().clone();
    let mut quo: P2 = vec![Vec::new(); rem.len().saturating_sub(db)];
    // coefficients may leave Z transiently, so run over rationals when needed;
    // first try the integer path, falling back on exactness failure
    loop {
        if p2_is_zero(&rem) {
            break;
        }
        let dr = rem.len() - 1;
        if dr < db {
            return None;
        }
        let qc = match p1_exact_div(rem.last().unwrap(), &lb) {
            Some(q) => q,
            None => return poly_exact_div_rational(a, b),
        };
        quo[dr - db] = qc.clone();
        let mut shifted: P2 = vec![Vec::new(); dr - db];
        shifted.extend(p2_scale1(&pb, &qc).into_iter());
        rem = p2_sub(&rem, &shifted);
        if !p2_is_zero(&rem) && rem.len() - 1 >= dr {
            return None;
        }
    }
    let out = from_integer_poly(&quo);
    Some(out.scale(&(ca / cb)))
}

/// Fallback exact division entirely over Q (handles non-monic leading terms
/// whose quotients are non-integral mid-division).
fn poly_exact_div_rational(a: &Poly2, b: &Poly2) -> Option<Poly2> {
    use super::poly::Var;
    let db = b.degree(Var::PopSize);
    let mut rem = a.clone();
    let mut quo = Poly2::zero();
    let lead_b = b.coeff_of(Var::PopSize, db as u32);
    loop {
        if rem.is_zero() {
            return Some(quo);
        }
        let dr = rem.degree(Var::PopSize);
        if dr < db {
            return None;
        }
        let lead_r = rem.coeff_of(Var::PopSize, dr as u32);
        // divide lead_r by lead_b in Q[n]
        let q_n = poly_exact_div_univar(&lead_r, &lead_b)?;
        let q_term = q_n.mul(&Poly2::monomial(brat(1), (0, (dr - db) as u32)));
        quo = quo.add(&q_term);
        rem = rem.sub(&q_term.mul(b));
        if !rem.is_zero() && rem.degree(Var::PopSize) >= dr {
            return None;
        }
    }
}

/// Exact division of polynomials in `n` alone (coefficients rational).
fn poly_exact_div_univar(a: &Poly2, b: &Poly2) -> Option<Poly2> {
    use super::poly::Var;
    if a.is_zero() {
        return Some(Poly2::zero());
    }
    if b.degree(Var::PopSize) > 0 || a.degree(Var::PopSize) > 0 {
        return None;
    }
    let db = b.degree(Var::SampleSize);
    if db < 0 {
        return None;
    }
    let lb = b.coeff_of(Var::SampleSize, db as u32).constant_value()?;
    let mut rem = a.clone();
    let mut quo = Poly2::zero();
    loop {
        if rem.is_zero() {
            return Some(quo);
        }
        let dr = rem.degree(Var::SampleSize);
        if dr < db {
            return None;
        }
        let lr = rem.coeff_of(Var::SampleSize, dr as u32).constant_value()?;
        let q = Poly2::monomial(lr / &lb, ((dr - db) as u32, 0));
        quo = quo.add(&q);
        rem = rem.sub(&q.mul(b));
    }
}

#[cfg(test)]
mod tests {
    use super::super::poly::Var;
    use super::*;

    fn n() -> Poly2 {
        Poly2::var(Var::SampleSize)
    }
    fn pop() -> Poly2 {
        Poly2::var(Var::PopSize)
    }

    #[test]
    fn gcd_univariate() {
        // gcd((n-1)(n-2), (n-1)(n-3)) = n-1
        let a = n().sub(&Poly2::one()).mul(&n().sub(&Poly2::constant(brat(2))));
        let b = n().sub(&Poly2::one()).mul(&n().sub(&Poly2::constant(brat(3))));
        let g = poly_gcd(&a, &b);
        assert_eq!(g, n().sub(&Poly2::one()));
    }

    #[test]
    fn gcd_bivariate() {
        // gcd((N-n)(N-1), (N-n)n) = N-n
        let d = pop().sub(&n());
        let a = d.mul(&pop().sub(&Poly2::one()));
        let b = d.mul(&n());
        let g = poly_gcd(&a, &b);
        assert_eq!(g, d);
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = pop().sub(&n()).mul(&Poly2::falling(Var::PopSize, 3));
        let b = Poly2::falling(Var::PopSize, 3);
        let q = poly_exact_div(&a, &b).unwrap();
        assert_eq!(q, pop().sub(&n()));
        assert!(poly_exact_div(&pop(), &n()).is_none());
    }

    #[test]
    fn gcd_with_rational_content() {
        let a = n().scale(&BigRational::new(1.into(), 2.into()));
        let b = n().mul(&n());
        let g = poly_gcd(&a, &b);
        assert_eq!(g, n());
    }
}
