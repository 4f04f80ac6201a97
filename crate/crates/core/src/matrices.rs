//! Partition-indexed expectation matrices over the coefficient field and the
//! inversion principle.
//!
//! Four families, all indexed by the canonical partition order of `r`:
//!
//! * `A`: `E S(pi) = sum A[pi][pi'] s(pi')` for power-sum products,
//! * `B`: `E m^(pi) = sum B[pi][pi'] m(pi')` for raw moment products,
//! * `C`: `E mu^(pi) = sum C[pi][pi'] mu(pi')` for central moment products
//!   (unit parts are mean factors),
//! * `D`: `E k^(pi) = sum D[pi][pi'] k(pi')` for cumulant products.
//!
//! `B`, `C`, `D` satisfy the inversion principle: the inverse of the matrix
//! at `(N, n)` is the same matrix with the symbols swapped.  The `A` rows are
//! assembled from the Carver expansion; `C` rows come from expectations of
//! products of mean-centered sample moments; `D = G C G^{-1}` for the
//! constant cumulant change of basis `G`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::carver::{carver_lambda, central_expectation_row};
use crate::error::{Error, Result};
use crate::moments::{
    central_product_in_raw, cumulant_in_central, expand_parts, raw_moment_in_central,
    PartitionVec,
};
use crate::partition::{partitions, set_partitions, Partition};
use crate::ratfunc::{brat, var_pow, RatFunc, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `A_r`: power-sum products.
    PowerSum,
    /// `B_r`: raw (noncentral) moment products.
    RawProduct,
    /// `C_r`: central moment products.
    CentralProduct,
    /// `D_r`: cumulant products.
    CumulantProduct,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::PowerSum => 'A',
            Family::RawProduct => 'B',
            Family::CentralProduct => 'C',
            Family::CumulantProduct => 'D',
        }
    }

    pub fn from_letter(c: char) -> Result<Family> {
        match c.to_ascii_uppercase() {
            'A' => Ok(Family::PowerSum),
            'B' => Ok(Family::RawProduct),
            'C' => Ok(Family::CentralProduct),
            'D' => Ok(Family::CumulantProduct),
            other => Err(Error::domain(format!("unknown matrix family `{other}`"))),
        }
    }
}

/// Which symbol plays the population role.  `PopSample` is the natural
/// orientation `(N, n)`; `SamplePop` is the swap used for unbiased
/// estimation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    PopSample,
    SamplePop,
}

impl Orientation {
    pub fn label(self) -> &'static str {
        match self {
            Orientation::PopSample => "N,n",
            Orientation::SamplePop => "n,N",
        }
    }
}

/// Square matrix over the coefficient field, rows and columns indexed by the
/// canonical partition order of `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffMatrix {
    pub r: u32,
    pub family: Option<Family>,
    pub orientation: Orientation,
    order: Vec<Partition>,
    entries: Vec<RatFunc>,
}

impl CoeffMatrix {
    pub fn from_rows<F>(r: u32, family: Option<Family>, mut row_fn: F) -> Result<CoeffMatrix>
    where
        F: FnMut(&Partition) -> Result<PartitionVec>,
    {
        let order = partitions(r)?;
        let mut entries = Vec::with_capacity(order.len() * order.len());
        for pi in &order {
            let row = row_fn(pi)?;
            for (col, coeff) in order.iter().map(|c| (c, row.get(c))) {
                let _ = col;
                entries.push(coeff);
            }
        }
        Ok(CoeffMatrix {
            r,
            family,
            orientation: Orientation::PopSample,
            order,
            entries,
        })
    }

    pub fn identity(r: u32) -> Result<CoeffMatrix> {
        let order = partitions(r)?;
        let d = order.len();
        let mut entries = vec![RatFunc::zero(); d * d];
        for i in 0..d {
            entries[i * d + i] = RatFunc::one();
        }
        Ok(CoeffMatrix {
            r,
            family: None,
            orientation: Orientation::PopSample,
            order,
            entries,
        })
    }

    pub fn dim(&self) -> usize {
        self.order.len()
    }

    pub fn order(&self) -> &[Partition] {
        &self.order
    }

    pub fn index_of(&self, pi: &Partition) -> Option<usize> {
        self.order.iter().position(|p| p == pi)
    }

    pub fn entry(&self, row: &Partition, col: &Partition) -> Result<&RatFunc> {
        let i = self
            .index_of(row)
            .ok_or_else(|| Error::domain(format!("row {row} not a partition of {}", self.r)))?;
        let j = self
            .index_of(col)
            .ok_or_else(|| Error::domain(format!("col {col} not a partition of {}", self.r)))?;
        Ok(&self.entries[i * self.dim() + j])
    }

    pub fn at(&self, i: usize, j: usize) -> &RatFunc {
        &self.entries[i * self.dim() + j]
    }

    /// Row as a partition-indexed vector.
    pub fn row_vec(&self, pi: &Partition) -> Result<PartitionVec> {
        let i = self
            .index_of(pi)
            .ok_or_else(|| Error::domain(format!("row {pi} not a partition of {}", self.r)))?;
        let mut v = PartitionVec::zero();
        for (j, col) in self.order.iter().enumerate() {
            v.insert(col.clone(), self.entries[i * self.dim() + j].clone());
        }
        Ok(v)
    }

    /// Swap the symbols n and N in every entry and flip the orientation tag.
    pub fn swap_orientation(&self) -> CoeffMatrix {
        CoeffMatrix {
            r: self.r,
            family: self.family,
            orientation: match self.orientation {
                Orientation::PopSample => Orientation::SamplePop,
                Orientation::SamplePop => Orientation::PopSample,
            },
            order: self.order.clone(),
            entries: self.entries.iter().map(|e| e.swap_vars()).collect(),
        }
    }

    pub fn mul(&self, other: &CoeffMatrix) -> Result<CoeffMatrix> {
        if self.r != other.r {
            return Err(Error::domain("matrix order mismatch"));
        }
        let d = self.dim();
        let mut entries = vec![RatFunc::zero(); d * d];
        for i in 0..d {
            for k in 0..d {
                let a = &self.entries[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = &other.entries[k * d + j];
                    if b.is_zero() {
                        continue;
                    }
                    entries[i * d + j] = entries[i * d + j].add(&a.mul(b));
                }
            }
        }
        Ok(CoeffMatrix {
            r: self.r,
            family: None,
            orientation: self.orientation,
            order: self.order.clone(),
            entries,
        })
    }

    pub fn sub(&self, other: &CoeffMatrix) -> Result<CoeffMatrix> {
        if self.r != other.r {
            return Err(Error::domain("matrix order mismatch"));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.sub(b))
            .collect();
        Ok(CoeffMatrix {
            r: self.r,
            family: None,
            orientation: self.orientation,
            order: self.order.clone(),
            entries,
        })
    }

    pub fn is_identity(&self) -> bool {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let e = &self.entries[i * d + j];
                if i == j {
                    if !e.is_one() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// First nonzero off-identity residual entry, labeled by partitions.
    pub fn identity_residual(&self) -> Option<(Partition, Partition, RatFunc)> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let e = &self.entries[i * d + j];
                let bad = if i == j { !e.is_one() } else { !e.is_zero() };
                if bad {
                    return Some((self.order[i].clone(), self.order[j].clone(), e.clone()));
                }
            }
        }
        None
    }

    /// Exact inverse over the function field.
    ///
    /// The zero pattern is condensed into strongly connected components
    /// first; the inverse is then assembled by blockwise forward substitution
    /// with plain Gauss-Jordan only inside each diagonal block.  For the
    /// expectation matrices the blocks are small (graded by unit-part count),
    /// which keeps intermediate entries near the size of the inputs; a dense
    /// pattern degenerates to ordinary Gauss-Jordan.
    pub fn invert(&self) -> Result<CoeffMatrix> {
        let d = self.dim();
        let comps = scc_components(d, |i, j| !self.entries[i * d + j].is_zero());
        let mut inv = vec![RatFunc::zero(); d * d];
        // diagonal block inverses
        let mut block_inv: Vec<Vec<RatFunc>> = Vec::with_capacity(comps.len());
        for comp in &comps {
            let s = comp.len();
            let mut block = Vec::with_capacity(s * s);
            for &i in comp {
                for &j in comp {
                    block.push(self.entries[i * d + j].clone());
                }
            }
            block_inv.push(gauss_jordan(&block, s)?);
        }
        for (k, comp_k) in comps.iter().enumerate() {
            let sk = comp_k.len();
            let dk_inv = &block_inv[k];
            // X_kk = D_k^{-1}
            for (a, &i) in comp_k.iter().enumerate() {
                for (b, &j) in comp_k.iter().enumerate() {
                    inv[i * d + j] = dk_inv[a * sk + b].clone();
                }
            }
            // X_kl = -D_k^{-1} sum_{l <= m < k} M_km X_ml
            for (l, comp_l) in comps.iter().enumerate().take(k) {
                let sl = comp_l.len();
                let mut s_block = vec![RatFunc::zero(); sk * sl];
                for comp_m in comps.iter().take(k).skip(l) {
                    for (a, &i) in comp_k.iter().enumerate() {
                        for (c, &mi) in comp_m.iter().enumerate() {
                            let m_km = &self.entries[i * d + mi];
                            if m_km.is_zero() {
                                continue;
                            }
                            for (b, &j) in comp_l.iter().enumerate() {
                                let x_ml = &inv[mi * d + j];
                                if x_ml.is_zero() {
                                    continue;
                                }
                                let _ = c;
                                s_block[a * sl + b] =
                                    s_block[a * sl + b].add(&m_km.mul(x_ml));
                            }
                        }
                    }
                }
                for (a, &i) in comp_k.iter().enumerate() {
                    for (b, &j) in comp_l.iter().enumerate() {
                        let mut acc = RatFunc::zero();
                        for c in 0..sk {
                            let m = &dk_inv[a * sk + c];
                            let v = &s_block[c * sl + b];
                            if !m.is_zero() && !v.is_zero() {
                                acc = acc.add(&m.mul(v));
                            }
                        }
                        inv[i * d + j] = acc.neg();
                    }
                }
            }
        }
        Ok(CoeffMatrix {
            r: self.r,
            family: self.family,
            orientation: self.orientation,
            order: self.order.clone(),
            entries: inv,
        })
    }

    /// Exact determinant by elimination; returns zero as soon as a pivot
    /// column vanishes.
    pub fn det(&self) -> Result<RatFunc> {
        let d = self.dim();
        let mut a = self.entries.clone();
        let mut det = RatFunc::one();
        for col in 0..d {
            let pivot_row = match (col..d).find(|&i| !a[i * d + col].is_zero()) {
                Some(i) => i,
                None => return Ok(RatFunc::zero()),
            };
            if pivot_row != col {
                for j in 0..d {
                    a.swap(pivot_row * d + j, col * d + j);
                }
                det = det.neg();
            }
            let p = a[col * d + col].clone();
            det = det.mul(&p);
            let p_inv = p.recip()?;
            for i in col + 1..d {
                if a[i * d + col].is_zero() {
                    continue;
                }
                let f = a[i * d + col].mul(&p_inv);
                for j in col..d {
                    a[i * d + j] = a[i * d + j].sub(&f.mul(&a[col * d + j]));
                }
            }
        }
        Ok(det)
    }

    /// Entrywise limit as one symbol goes to infinity.
    pub fn limit_inf(&self, v: Var) -> Result<CoeffMatrix> {
        let d = self.dim();
        let mut entries = Vec::with_capacity(d * d);
        for (idx, e) in self.entries.iter().enumerate() {
            let lim = e.limit_inf(v).map_err(|err| {
                let (i, j) = (idx / d, idx % d);
                Error::Divergence(format!(
                    "entry ({}, {}): {err}",
                    self.order[i], self.order[j]
                ))
            })?;
            entries.push(lim);
        }
        Ok(CoeffMatrix {
            r: self.r,
            family: self.family,
            orientation: self.orientation,
            order: self.order.clone(),
            entries,
        })
    }

    /// Numeric evaluation of the whole matrix.
    pub fn eval(&self, n0: &BigRational, pop0: &BigRational) -> Result<Vec<Vec<BigRational>>> {
        let d = self.dim();
        let mut out = vec![vec![BigRational::zero(); d]; d];
        for i in 0..d {
            for j in 0..d {
                out[i][j] = self.entries[i * d + j].eval(n0, pop0)?;
            }
        }
        Ok(out)
    }

    /// Restriction to the rows and columns without unit parts (the `--` block).
    pub fn minus_block(&self) -> CoeffMatrix {
        let keep: Vec<usize> = self
            .order
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.has_unit_part())
            .map(|(i, _)| i)
            .collect();
        let d = self.dim();
        let order: Vec<Partition> = keep.iter().map(|&i| self.order[i].clone()).collect();
        let mut entries = Vec::with_capacity(keep.len() * keep.len());
        for &i in &keep {
            for &j in &keep {
                entries.push(self.entries[i * d + j].clone());
            }
        }
        CoeffMatrix {
            r: self.r,
            family: self.family,
            orientation: self.orientation,
            order,
            entries,
        }
    }

    /// True when every (no-unit row, unit column) entry vanishes.
    pub fn is_block_lower_triangular(&self) -> bool {
        let d = self.dim();
        for i in 0..d {
            if self.order[i].has_unit_part() {
                continue;
            }
            for j in 0..d {
                if self.order[j].has_unit_part() && !self.entries[i * d + j].is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        out.push_str("pi");
        for col in &self.order {
            out.push('\t');
            out.push_str(&col.to_string());
        }
        out.push('\n');
        let d = self.dim();
        for (i, row) in self.order.iter().enumerate() {
            out.push_str(&row.to_string());
            for j in 0..d {
                out.push('\t');
                out.push_str(&self.entries[i * d + j].to_string());
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let d = self.dim();
        let rows: Vec<serde_json::Value> = (0..d)
            .map(|i| {
                serde_json::Value::Array(
                    (0..d)
                        .map(|j| serde_json::Value::String(self.entries[i * d + j].to_string()))
                        .collect(),
                )
            })
            .collect();
        serde_json::json!({
            "family": self.family.map(|f| f.letter().to_string()),
            "r": self.r,
            "orientation": self.orientation.label(),
            "order": self.order.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "entries": rows,
        })
    }

    /// Parse a matrix back from its JSON emission.
    pub fn from_json(v: &serde_json::Value) -> Result<CoeffMatrix> {
        let r = v["r"]
            .as_u64()
            .ok_or_else(|| Error::parse("missing r"))? as u32;
        let family = v["family"]
            .as_str()
            .and_then(|s| s.chars().next())
            .map(Family::from_letter)
            .transpose()?;
        let orientation = match v["orientation"].as_str() {
            Some("n,N") => Orientation::SamplePop,
            _ => Orientation::PopSample,
        };
        let order: Vec<Partition> = v["order"]
            .as_array()
            .ok_or_else(|| Error::parse("missing order"))?
            .iter()
            .map(|s| {
                s.as_str()
                    .ok_or_else(|| Error::parse("order entry not a string"))?
                    .parse()
            })
            .collect::<Result<_>>()?;
        let mut entries = Vec::new();
        for row in v["entries"]
            .as_array()
            .ok_or_else(|| Error::parse("missing entries"))?
        {
            for cell in row.as_array().ok_or_else(|| Error::parse("bad row"))? {
                entries.push(crate::ratfunc::parse_ratfunc(
                    cell.as_str().ok_or_else(|| Error::parse("bad cell"))?,
                )?);
            }
        }
        if entries.len() != order.len() * order.len() {
            return Err(Error::parse("entry count mismatch"));
        }
        Ok(CoeffMatrix {
            r,
            family,
            orientation,
            order,
            entries,
        })
    }
}

// ---------- builders ----------

/// Row of `A_r`: expand `E S_{pi_1} S_{pi_2} ...` over groupings of the parts.
fn power_sum_row(pi: &Partition) -> Result<PartitionVec> {
    let slots: Vec<u32> = pi.parts().to_vec();
    let mut row = PartitionVec::zero();
    for rho in set_partitions(slots.len() as u32)? {
        let sums: Vec<u32> = rho
            .blocks()
            .iter()
            .map(|b| b.iter().map(|&i| slots[i]).sum())
            .collect();
        let col = Partition::new(sums)?;
        let lam = carver_lambda(&rho.shape())?.as_ratfunc();
        row.insert(col, lam);
    }
    Ok(row)
}

/// Row of `C_r` for `pi = 1^i pi_minus`: binomial lift of the expectation of
/// `(Xbar - mu)^(i-j) * prod muhat_k`.
fn central_row(pi: &Partition, order: &[Partition]) -> Result<PartitionVec> {
    let i = pi.unit_parts();
    let rest: Vec<u32> = pi.parts().iter().copied().filter(|&p| p > 1).collect();
    let mut row = PartitionVec::zero();
    for col in order {
        let j = col.unit_parts();
        if j > i {
            continue;
        }
        let col_minus: Vec<u32> = col.parts().iter().copied().filter(|&p| p > 1).collect();
        let coeff = if col_minus.is_empty() {
            // column 1^r: only the diagonal row reaches it
            if rest.is_empty() && i == j {
                RatFunc::one()
            } else {
                RatFunc::zero()
            }
        } else {
            let gamma = gamma_row(i - j, &rest)?;
            let key = Partition::new(col_minus.clone())?;
            let g = gamma.get(&key).cloned().unwrap_or_else(RatFunc::zero);
            g.scale(&BigRational::from_integer(binom_bigint(i, j)))
        };
        row.insert(col.clone(), coeff);
    }
    Ok(row)
}

fn binom_bigint(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Monomials in the mean-centered sample moments `mu*_a`, indexed by the
/// sorted multiset of indices.
type MonoPoly = BTreeMap<Vec<u32>, BigInt>;

fn mono_mul(a: &MonoPoly, b: &MonoPoly) -> MonoPoly {
    let mut out = MonoPoly::new();
    for (ka, ca) in a {
        for (kb, cb) in b {
            let mut k = ka.clone();
            k.extend_from_slice(kb);
            k.sort_unstable();
            let e = out.entry(k).or_insert_with(BigInt::zero);
            *e += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `muhat_k` expanded in mean-centered sample moments:
/// `muhat_k = sum_j binom(k, j) (-delta)^j mu*_{k-j}` with `delta = mu*_1`.
fn sample_central_in_star(k: u32) -> MonoPoly {
    let mut out = MonoPoly::new();
    for j in 0..=k {
        let mut key: Vec<u32> = vec![1; j as usize];
        if k - j >= 1 {
            key.push(k - j);
        }
        key.sort_unstable();
        let mut c = binom_bigint(k, j);
        if j % 2 == 1 {
            c = -c;
        }
        let e = out.entry(key).or_insert_with(BigInt::zero);
        *e += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `E[(Xbar - mu)^units * prod_k muhat_k]` expanded over central products
/// without unit parts.  This is the engine behind the `C` rows and the
/// sampling-moment expansions.
pub fn gamma_row(units: u32, rest: &[u32]) -> Result<BTreeMap<Partition, RatFunc>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, Vec<u32>), BTreeMap<Partition, RatFunc>>>> =
        OnceLock::new();
    let mut key_rest = rest.to_vec();
    key_rest.sort_unstable();
    let key = (units, key_rest.clone());
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }

    let mut mono: MonoPoly = MonoPoly::new();
    mono.insert(vec![1; units as usize], BigInt::one());
    for &k in rest {
        mono = mono_mul(&mono, &sample_central_in_star(k));
    }
    let mut row: BTreeMap<Partition, RatFunc> = BTreeMap::new();
    for (indices, coeff) in &mono {
        if indices.is_empty() {
            continue; // constant term only occurs for the empty query
        }
        let expect = central_expectation_row(indices)?;
        let c = RatFunc::from_rational(BigRational::from_integer(coeff.clone()));
        for (pi, v) in expect {
            let entry = row.entry(pi).or_insert_with(RatFunc::zero);
            *entry = entry.add(&v.mul(&c));
        }
    }
    row.retain(|_, v| !v.is_zero());
    cache.lock().unwrap().insert(key, row.clone());
    Ok(row)
}

/// Constant change of basis: cumulant products expressed in central products.
pub fn cumulant_basis_matrix(r: u32) -> Result<CoeffMatrix> {
    CoeffMatrix::from_rows(r, None, |pi| Ok(expand_parts(pi, cumulant_in_central)))
}

/// Constant change of basis: central products expressed in raw products.
pub fn central_in_raw_matrix(r: u32) -> Result<CoeffMatrix> {
    CoeffMatrix::from_rows(r, None, |pi| Ok(central_product_in_raw(pi)))
}

/// Constant change of basis: raw products expressed in central products.
pub fn raw_in_central_matrix(r: u32) -> Result<CoeffMatrix> {
    CoeffMatrix::from_rows(r, None, |pi| {
        Ok(expand_parts(pi, |p| {
            if p == 1 {
                PartitionVec::unit(Partition::of(&[1]))
            } else {
                raw_moment_in_central(p)
            }
        }))
    })
}

fn build_family(family: Family, r: u32) -> Result<CoeffMatrix> {
    match family {
        Family::PowerSum => {
            let mut m = CoeffMatrix::from_rows(r, Some(Family::PowerSum), power_sum_row)?;
            m.family = Some(Family::PowerSum);
            Ok(m)
        }
        Family::RawProduct => {
            // B = D_n^{-1} A D_N entrywise
            let a = expectation_matrix(Family::PowerSum, r)?;
            let d = a.dim();
            let mut entries = Vec::with_capacity(d * d);
            for i in 0..d {
                let qi = a.order[i].parts_count() as i32;
                for j in 0..d {
                    let qj = a.order[j].parts_count() as i32;
                    let scale = var_pow(Var::SampleSize, -qi).mul(&var_pow(Var::PopSize, qj));
                    entries.push(a.entries[i * d + j].mul(&scale));
                }
            }
            Ok(CoeffMatrix {
                r,
                family: Some(Family::RawProduct),
                orientation: Orientation::PopSample,
                order: a.order.clone(),
                entries,
            })
        }
        Family::CentralProduct => {
            let order = partitions(r)?;
            let mut m = CoeffMatrix::from_rows(r, Some(Family::CentralProduct), |pi| {
                central_row(pi, &order)
            })?;
            m.family = Some(Family::CentralProduct);
            Ok(m)
        }
        Family::CumulantProduct => {
            let g = cumulant_basis_matrix(r)?;
            let c = expectation_matrix(Family::CentralProduct, r)?;
            let g_inv = g.invert()?;
            let mut m = g.mul(&c)?.mul(&g_inv)?;
            m.family = Some(Family::CumulantProduct);
            Ok(m)
        }
    }
}

/// The expectation matrix of a family in the natural `(N, n)` orientation,
/// cached per `(family, r)`.
pub fn expectation_matrix(family: Family, r: u32) -> Result<CoeffMatrix> {
    if r == 0 || r > 6 {
        return Err(Error::domain(format!(
            "expectation matrices are built for r in 1..=6, got {r}"
        )));
    }
    static CACHE: OnceLock<Mutex<HashMap<(Family, u32), CoeffMatrix>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&(family, r)) {
        return Ok(hit.clone());
    }
    let m = build_family(family, r)?;
    cache.lock().unwrap().insert((family, r), m.clone());
    Ok(m)
}

/// Family matrix in either orientation, cached.
pub fn oriented_matrix(family: Family, r: u32, orientation: Orientation) -> Result<CoeffMatrix> {
    let m = expectation_matrix(family, r)?;
    Ok(match orientation {
        Orientation::PopSample => m,
        Orientation::SamplePop => {
            static CACHE: OnceLock<Mutex<HashMap<(Family, u32), CoeffMatrix>>> = OnceLock::new();
            let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
            if let Some(hit) = cache.lock().unwrap().get(&(family, r)) {
                return Ok(hit.clone());
            }
            let s = m.swap_orientation();
            cache.lock().unwrap().insert((family, r), s.clone());
            s
        }
    })
}

// ---------- verification ----------

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub label: String,
    pub ok: bool,
    pub detail: String,
}

impl CheckReport {
    pub fn pass(label: impl Into<String>) -> Self {
        CheckReport {
            label: label.into(),
            ok: true,
            detail: String::new(),
        }
    }

    pub fn fail(label: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckReport {
            label: label.into(),
            ok: false,
            detail: detail.into(),
        }
    }
}

/// `family(N,n) * family(n,N) = I` entrywise, plus the same statement for the
/// `--` blocks.
pub fn verify_inversion_principle(r: u32, family: Family) -> Result<CheckReport> {
    let label = format!("{}_{r}(N,n) * {}_{r}(n,N) = I", family.letter(), family.letter());
    if family == Family::PowerSum {
        return Err(Error::domain(
            "the power-sum family does not satisfy the inversion principle",
        ));
    }
    let m = oriented_matrix(family, r, Orientation::PopSample)?;
    let m_swapped = oriented_matrix(family, r, Orientation::SamplePop)?;
    let prod = m.mul(&m_swapped)?;
    if let Some((pi, pj, e)) = prod.identity_residual() {
        return Ok(CheckReport::fail(
            label,
            format!("residual at ({pi}, {pj}): {e}"),
        ));
    }
    let block = m.minus_block().mul(&m_swapped.minus_block())?;
    if let Some((pi, pj, e)) = block.identity_residual() {
        return Ok(CheckReport::fail(
            format!("{label} (-- block)"),
            format!("residual at ({pi}, {pj}): {e}"),
        ));
    }
    Ok(CheckReport::pass(label))
}

/// Eigenvalues of `B_r` are `nu_i = e_i e_1^{-i}` with multiplicity the
/// number of partitions with `i` parts: the determinant check is symbolic and
/// the multiplicity check is numeric rank at several rational points.
pub fn eigenvalue_check(r: u32) -> Result<CheckReport> {
    use crate::ratfunc::e_j;
    let b = expectation_matrix(Family::RawProduct, r)?;
    let d = b.dim();
    let counts: BTreeMap<u32, usize> = {
        let mut m = BTreeMap::new();
        for pi in b.order() {
            *m.entry(pi.parts_count()).or_insert(0) += 1;
        }
        m
    };
    let points: Vec<(BigRational, BigRational)> = vec![
        (brat(7), brat(23)),
        (brat(5), brat(19)),
        (brat(11), brat(29)),
        (BigRational::new(29.into(), 2.into()), brat(37)),
        (brat(13), BigRational::new(71.into(), 3.into())),
    ];
    for i in 1..=r {
        let nu = e_j(i).mul(&e_j(1).powi(-(i as i32)).unwrap());
        // symbolic det(B - nu I) = 0
        let mut shifted = b.clone();
        for k in 0..d {
            let idx = k * d + k;
            shifted.entries[idx] = shifted.entries[idx].sub(&nu);
        }
        let det = shifted.det()?;
        if !det.is_zero() {
            return Ok(CheckReport::fail(
                format!("eigenvalues of B_{r}"),
                format!("det(B_{r} - nu_{i} I) = {det}, expected 0"),
            ));
        }
        // multiplicity via rank deficiency at random rational points
        let expected = *counts.get(&i).unwrap_or(&0);
        for (n0, pop0) in &points {
            let m = shifted.eval(n0, pop0)?;
            let rank = numeric_rank(m);
            if d - rank != expected {
                return Ok(CheckReport::fail(
                    format!("eigenvalues of B_{r}"),
                    format!(
                        "multiplicity of nu_{i} at (n,N)=({n0},{pop0}): got {}, expected {expected}",
                        d - rank
                    ),
                ));
            }
        }
    }
    Ok(CheckReport::pass(format!(
        "eigenvalues of B_{r} are e_i*e_1^-i with partition-count multiplicities"
    )))
}

/// Plain Gauss-Jordan inverse of a dense block.
fn gauss_jordan(block: &[RatFunc], s: usize) -> Result<Vec<RatFunc>> {
    let mut a = block.to_vec();
    let mut inv = vec![RatFunc::zero(); s * s];
    for i in 0..s {
        inv[i * s + i] = RatFunc::one();
    }
    for col in 0..s {
        let pivot_row = (col..s)
            .find(|&i| !a[i * s + col].is_zero())
            .ok_or_else(|| Error::domain("matrix is symbolically singular"))?;
        if pivot_row != col {
            for j in 0..s {
                a.swap(pivot_row * s + j, col * s + j);
                inv.swap(pivot_row * s + j, col * s + j);
            }
        }
        let p_inv = a[col * s + col].recip()?;
        for j in 0..s {
            a[col * s + j] = a[col * s + j].mul(&p_inv);
            inv[col * s + j] = inv[col * s + j].mul(&p_inv);
        }
        for i in 0..s {
            if i == col || a[i * s + col].is_zero() {
                continue;
            }
            let f = a[i * s + col].clone();
            for j in 0..s {
                a[i * s + j] = a[i * s + j].sub(&f.mul(&a[col * s + j]));
                inv[i * s + j] = inv[i * s + j].sub(&f.mul(&inv[col * s + j]));
            }
        }
    }
    Ok(inv)
}

/// Strongly connected components of the nonzero pattern, emitted so that all
/// components a row depends on come before it (dependencies first).
fn scc_components<F: Fn(usize, usize) -> bool>(d: usize, edge: F) -> Vec<Vec<usize>> {
    // iterative Tarjan; edge i -> j when entry (i, j) is nonzero (i != j)
    struct State {
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        counter: usize,
        comps: Vec<Vec<usize>>,
    }
    let mut st = State {
        index: vec![None; d],
        low: vec![0; d],
        on_stack: vec![false; d],
        stack: Vec::new(),
        counter: 0,
        comps: Vec::new(),
    };
    for start in 0..d {
        if st.index[start].is_some() {
            continue;
        }
        // explicit DFS stack: (node, next neighbor to try)
        let mut dfs: Vec<(usize, usize)> = vec![(start, 0)];
        st.index[start] = Some(st.counter);
        st.low[start] = st.counter;
        st.counter += 1;
        st.stack.push(start);
        st.on_stack[start] = true;
        while let Some(&mut (v, ref mut next)) = dfs.last_mut() {
            if *next < d {
                let w = *next;
                *next += 1;
                if w == v || !edge(v, w) {
                    continue;
                }
                if st.index[w].is_none() {
                    st.index[w] = Some(st.counter);
                    st.low[w] = st.counter;
                    st.counter += 1;
                    st.stack.push(w);
                    st.on_stack[w] = true;
                    dfs.push((w, 0));
                } else if st.on_stack[w] {
                    st.low[v] = st.low[v].min(st.index[w].unwrap());
                }
            } else {
                dfs.pop();
                if let Some(&mut (u, _)) = dfs.last_mut() {
                    st.low[u] = st.low[u].min(st.low[v]);
                }
                if st.low[v] == st.index[v].unwrap() {
                    let mut comp = Vec::new();
                    loop {
                        let w = st.stack.pop().unwrap();
                        st.on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    st.comps.push(comp);
                }
            }
        }
    }
    st.comps
}

fn numeric_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let pivot = (row..rows).find(|&i| !m[i][col].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(row, p);
        let pv = m[row][col].clone();
        for j in col..cols {
            let v = m[row][j].clone();
            m[row][j] = v / pv.clone();
        }
        for i in 0..rows {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..cols {
                    let delta = f.clone() * m[row][j].clone();
                    m[i][j] -= delta;
                }
            }
        }
        row += 1;
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carver::carver_lambda;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn lam(s: &str) -> RatFunc {
        carver_lambda(&p(s)).unwrap().as_ratfunc()
    }

    fn rf(s: &str) -> RatFunc {
        crate::ratfunc::parse_ratfunc(s).unwrap()
    }

    #[test]
    fn a2_matches_printed_form() {
        let a = expectation_matrix(Family::PowerSum, 2).unwrap();
        assert_eq!(*a.entry(&p("2"), &p("2")).unwrap(), lam("1"));
        assert_eq!(*a.entry(&p("2"), &p("1^2")).unwrap(), RatFunc::zero());
        assert_eq!(*a.entry(&p("1^2"), &p("2")).unwrap(), lam("2"));
        assert_eq!(*a.entry(&p("1^2"), &p("1^2")).unwrap(), lam("1^2"));
    }

    #[test]
    fn a4_row_1_1_2() {
        // row (1^2 2) = (lambda_3, 2*lambda_12, lambda_12, lambda_{1^3}, 0)
        let a = expectation_matrix(Family::PowerSum, 4).unwrap();
        let row = p("1^2 2");
        assert_eq!(*a.entry(&row, &p("4")).unwrap(), lam("3"));
        assert_eq!(
            *a.entry(&row, &p("1 3")).unwrap(),
            lam("1 2").scale(&brat(2))
        );
        assert_eq!(*a.entry(&row, &p("2^2")).unwrap(), lam("1 2"));
        assert_eq!(*a.entry(&row, &p("1^2 2")).unwrap(), lam("1^3"));
        assert_eq!(*a.entry(&row, &p("1^4")).unwrap(), RatFunc::zero());
    }

    #[test]
    fn a1_is_e1() {
        let a = expectation_matrix(Family::PowerSum, 1).unwrap();
        assert_eq!(*a.entry(&p("1"), &p("1")).unwrap(), rf("n/N"));
    }

    #[test]
    fn b1_is_identity_and_b2_diagonal() {
        let b = expectation_matrix(Family::RawProduct, 1).unwrap();
        assert!(b.is_identity());
        let b2 = expectation_matrix(Family::RawProduct, 2).unwrap();
        assert_eq!(*b2.entry(&p("2"), &p("2")).unwrap(), RatFunc::one());
        // diagonal of the (1^2) row is e_2 e_1^{-2}
        let expected = crate::ratfunc::e_j(2)
            .mul(&crate::ratfunc::e_j(1).powi(-2).unwrap());
        assert_eq!(*b2.entry(&p("1^2"), &p("1^2")).unwrap(), expected);
    }

    #[test]
    fn b3_row_1cubed() {
        // E m^_1^3 = n^{-3} (lambda_3 N m_3 + 3 lambda_21 N^2 m_2 m_1 + lambda_{1^3} N^3 m_1^3)
        let b = expectation_matrix(Family::RawProduct, 3).unwrap();
        let row = p("1^3");
        let pre = |q: i32| var_pow(Var::SampleSize, -3).mul(&var_pow(Var::PopSize, q));
        assert_eq!(*b.entry(&row, &p("3")).unwrap(), lam("3").mul(&pre(1)));
        assert_eq!(
            *b.entry(&row, &p("1 2")).unwrap(),
            lam("1 2").scale(&brat(3)).mul(&pre(2))
        );
        assert_eq!(
            *b.entry(&row, &p("1^3")).unwrap(),
            lam("1^3").mul(&pre(3))
        );
    }

    #[test]
    fn c2_matches_catalog() {
        let c = expectation_matrix(Family::CentralProduct, 2).unwrap();
        assert_eq!(
            *c.entry(&p("2"), &p("2")).unwrap(),
            rf("N*(n-1)/(n*(N-1))")
        );
        assert_eq!(
            *c.entry(&p("1^2"), &p("2")).unwrap(),
            rf("(N-n)/(n*(N-1))")
        );
        assert_eq!(*c.entry(&p("1^2"), &p("1^2")).unwrap(), RatFunc::one());
        assert_eq!(*c.entry(&p("2"), &p("1^2")).unwrap(), RatFunc::zero());
    }

    #[test]
    fn c3_binomial_lift() {
        let c = expectation_matrix(Family::CentralProduct, 3).unwrap();
        // C_{1^3,12} = 3 C_{1^2,2}
        let lifted = c.entry(&p("1^3"), &p("1 2")).unwrap().clone();
        let base = expectation_matrix(Family::CentralProduct, 2)
            .unwrap()
            .entry(&p("1^2"), &p("2"))
            .unwrap()
            .clone();
        assert_eq!(lifted, base.scale(&brat(3)));
        // C_{12,3} = N(n-1)(N-n) n^-2 (N-1)_2^-1
        assert_eq!(
            *c.entry(&p("1 2"), &p("3")).unwrap(),
            rf("N*(n-1)*(N-n)*n^-2*(N-1)_2^-1")
        );
        // C_{12,12} = C_{2,2}
        assert_eq!(
            *c.entry(&p("1 2"), &p("1 2")).unwrap(),
            rf("N*(n-1)/(n*(N-1))")
        );
        assert_eq!(*c.entry(&p("1 2"), &p("1^3")).unwrap(), RatFunc::zero());
    }

    #[test]
    fn cumulant_basis_matches_vectors() {
        let g = cumulant_basis_matrix(4).unwrap();
        // kappa_4 row: a_4 = (1, -3) on (mu_4, mu_2^2)
        assert_eq!(*g.entry(&p("4"), &p("4")).unwrap(), RatFunc::one());
        assert_eq!(*g.entry(&p("4"), &p("2^2")).unwrap(), RatFunc::from_int(-3));
        // kappa_2 kappa_2 row: mu_2^2
        assert_eq!(*g.entry(&p("2^2"), &p("2^2")).unwrap(), RatFunc::one());
        let g6 = cumulant_basis_matrix(6).unwrap();
        // a_6 = (1, -15, -10, 30)
        assert_eq!(*g6.entry(&p("6"), &p("6")).unwrap(), RatFunc::one());
        assert_eq!(*g6.entry(&p("6"), &p("2 4")).unwrap(), RatFunc::from_int(-15));
        assert_eq!(*g6.entry(&p("6"), &p("3^2")).unwrap(), RatFunc::from_int(-10));
        assert_eq!(*g6.entry(&p("6"), &p("2^3")).unwrap(), RatFunc::from_int(30));
    }

    #[test]
    fn inversion_principle_small() {
        for r in 1..=3 {
            for fam in [
                Family::RawProduct,
                Family::CentralProduct,
                Family::CumulantProduct,
            ] {
                let rep = verify_inversion_principle(r, fam).unwrap();
                assert!(rep.ok, "{}: {}", rep.label, rep.detail);
            }
        }
    }

    #[test]
    fn invert_c2_is_swap() {
        let c = expectation_matrix(Family::CentralProduct, 2).unwrap();
        let inv = c.invert().unwrap();
        let swapped = c.swap_orientation();
        for i in 0..c.dim() {
            for j in 0..c.dim() {
                assert_eq!(inv.at(i, j), swapped.at(i, j));
            }
        }
    }

    #[test]
    fn invert_identity() {
        let id = CoeffMatrix::identity(4).unwrap();
        assert!(id.invert().unwrap().is_identity());
    }

    #[test]
    fn block_triangularity() {
        for r in 2..=4 {
            for fam in [
                Family::RawProduct,
                Family::CentralProduct,
                Family::CumulantProduct,
            ] {
                let m = expectation_matrix(fam, r).unwrap();
                assert!(m.is_block_lower_triangular(), "{:?} r={r}", fam);
            }
        }
    }

    #[test]
    fn census_identity_at_equal_sizes() {
        // sampling the whole population: every matrix is the identity at n = N
        for fam in [
            Family::RawProduct,
            Family::CentralProduct,
            Family::CumulantProduct,
        ] {
            let m = expectation_matrix(fam, 3).unwrap();
            for t in [7i64, 9] {
                let v = m.eval(&brat(t), &brat(t)).unwrap();
                for i in 0..m.dim() {
                    for j in 0..m.dim() {
                        let expected = if i == j { brat(1) } else { brat(0) };
                        assert_eq!(v[i][j], expected, "{:?} at t={t} ({i},{j})", fam);
                    }
                }
            }
        }
    }

    #[test]
    fn eigenvalues_small() {
        for r in 1..=3 {
            let rep = eigenvalue_check(r).unwrap();
            assert!(rep.ok, "{}: {}", rep.label, rep.detail);
        }
    }

    #[test]
    fn consistency_square_c_from_b() {
        // C = G_c B G_c^{-1} where G_c converts central products to raw products
        for r in 2..=4 {
            let b = expectation_matrix(Family::RawProduct, r).unwrap();
            let gc = central_in_raw_matrix(r).unwrap();
            let gc_inv = gc.invert().unwrap();
            let c_alt = gc.mul(&b).unwrap().mul(&gc_inv).unwrap();
            let c = expectation_matrix(Family::CentralProduct, r).unwrap();
            for i in 0..c.dim() {
                for j in 0..c.dim() {
                    assert_eq!(
                        c.at(i, j),
                        c_alt.at(i, j),
                        "r={r} entry ({i},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn json_roundtrip() {
        let c = expectation_matrix(Family::CentralProduct, 3).unwrap();
        let j = c.to_json();
        let back = CoeffMatrix::from_json(&j).unwrap();
        assert_eq!(c, back);
    }

    #[test]
    fn limit_matches_catalog() {
        let c = expectation_matrix(Family::CentralProduct, 2).unwrap();
        let lim = c.limit_inf(Var::PopSize).unwrap();
        assert_eq!(*lim.entry(&p("2"), &p("2")).unwrap(), rf("(n-1)/n"));
        assert_eq!(*lim.entry(&p("1^2"), &p("2")).unwrap(), rf("1/n"));
    }
}
