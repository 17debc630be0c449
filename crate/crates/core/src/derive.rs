//! The cyclic factors of a split metacyclic action.
//!
//! `D_F` describes the normal factor `<F>`: every cone point of order `n_i`
//! downstairs splits into `m/n_i1` cone points of order `n_i/n_i1` on the
//! quotient by `<F>`, permuted by `G`. `D_G` describes the complement `<G>`
//! and is assembled from fixed-point counts of the powers of `G`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::arith::{divisors, mod_inverse, mul_mod, mult_order, units};
use crate::cyclic::{CyclicDataSet, Pair};
use crate::dataset::MetacyclicDataSet;
use crate::error::{Error, Result};
use crate::group::Element;
use crate::oracle::quotient_genus;

/// Signature of the quotient by `<F>`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedSignature {
    pub g1: u64,
    pub periods: Vec<u64>,
}

/// The pair `[D_G; D_F]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicFactors {
    pub dg: CyclicDataSet,
    pub df: CyclicDataSet,
}

impl fmt::Display for CyclicFactors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{};{}]",
            self.dg.to_table_text(),
            self.df.to_table_text()
        )
    }
}

fn require_valid(d: &MetacyclicDataSet) -> Result<u64> {
    let report = d.validate();
    if !report.ok {
        return Err(Error::Invalid(report.failed_clauses().join(", ")));
    }
    d.genus()
}

pub fn induced_signature(d: &MetacyclicDataSet) -> Result<InducedSignature> {
    let genus = require_valid(d)?;
    let m = d.params.m();
    let mut periods = Vec::new();
    for t in &d.triples {
        let q = t.period / t.n1;
        if q > 1 {
            periods.extend(std::iter::repeat_n(q, (m / t.n1) as usize));
        }
    }
    periods.sort_unstable();
    let g1 = quotient_genus(genus, d.params.n(), periods.iter().copied())?;
    Ok(InducedSignature { g1, periods })
}

/// Data set of the normal factor `<F>`.
///
/// For triple `i` with `q = n_i/n_i1 > 1`, `d_i1` solves
/// `d (n/q) = c_i2 (n/n_i2) Σ_{j<n_i1} k^(c_i1 (m/n_i1) j) (mod n)` and the
/// orbit under `G` contributes `d_i1 k^j mod q` for `j < m/n_i1`.
pub fn derive_df(d: &MetacyclicDataSet) -> Result<CyclicDataSet> {
    let sig = induced_signature(d)?;
    let p = &d.params;
    let (m, n) = (p.m(), p.n());
    let mut pairs = Vec::new();
    for (index, t) in d.triples.iter().enumerate() {
        let q = t.period / t.n1;
        if q <= 1 {
            continue;
        }
        // x^(n_i1) = F^e; F^e has order q, so e is a multiple of n/q
        let step = p.k_pow(t.g_exponent(p));
        let mut sum = 0u64;
        let mut power = 1u64;
        for _ in 0..t.n1 {
            sum = (sum + power) % n;
            power = mul_mod(power, step, n);
        }
        let e = mul_mod(t.f_exponent(p), sum, n);
        if !e.is_multiple_of(n / q) {
            return Err(Error::DivisionObstruction { triple: index + 1 });
        }
        let d1 = (e / (n / q)) % q;
        if mod_inverse(d1, q).is_none() {
            return Err(Error::DivisionObstruction { triple: index + 1 });
        }
        let k = p.k() % q;
        let mut c = d1;
        for _ in 0..(m / t.n1) {
            pairs.push((c, q));
            c = mul_mod(c, k, q);
        }
    }
    if pairs.is_empty() {
        return Ok(CyclicDataSet::free(n, sig.g1, 1));
    }
    Ok(CyclicDataSet::new(n, sig.g1, 0, pairs))
}

/// Data set of the complement `<G>`.
///
/// For each divisor `s > 1` of `m` and unit `u` mod `s`, the fixed points of
/// `G^(m/s)` with rotation class `u` number
/// `|C_H(G^(m/s))| Σ 1/n_i` over cone points with `s | n_i` and
/// `G^(m/s) ~ x_i^(n_i u/s)`. Removing points whose stabilizer in `<G>` is
/// larger leaves the exact-stabilizer counts `f`, and each orbit of `m/s`
/// such points is one cone point of the quotient, carrying the pair
/// `(u^-1, s)` since its positive generator is `G^((m/s) u^-1)`.
pub fn derive_dg(d: &MetacyclicDataSet) -> Result<CyclicDataSet> {
    let genus = require_valid(d)?;
    let p = &d.params;
    let m = p.m();
    let images = d.images();
    let mut exact: BTreeMap<(u64, u64), u64> = BTreeMap::new();
    for &s in divisors(m).iter().rev() {
        if s == 1 {
            continue;
        }
        let y = p.pow(p.g(), m / s);
        let centralizer = p.centralizer_order(y);
        for u in units(s) {
            // |C_H(y)| Σ 1/n_i, kept exact as a sum of |C_H(y)|/n_i
            let mut total = 0u64;
            for (x, t) in images.iter().zip(&d.triples) {
                let ni = t.period;
                if ni % s != 0 {
                    continue;
                }
                let power: Element = p.pow(*x, ni / s * u);
                if p.is_conjugate(y, power) {
                    if !centralizer.is_multiple_of(ni) {
                        return Err(Error::NonIntegralMultiplicity { u, order: s });
                    }
                    total += centralizer / ni;
                }
            }
            let larger: u64 = exact
                .iter()
                .filter(|(&(v, t), _)| t != s && t % s == 0 && v % s == u)
                .map(|(_, &f)| f)
                .sum();
            if larger > total {
                return Err(Error::NonIntegralMultiplicity { u, order: s });
            }
            let f = total - larger;
            if f > 0 {
                exact.insert((u, s), f);
            }
        }
    }
    let mut pairs = Vec::new();
    for (&(u, s), &f) in &exact {
        if (s * f) % m != 0 {
            return Err(Error::NonIntegralMultiplicity { u, order: s });
        }
        let c = mod_inverse(u, s).expect("u is a unit");
        for _ in 0..(s * f / m) {
            pairs.push((c, s));
        }
    }
    let g2 = quotient_genus(genus, m, pairs.iter().map(|&(_, s)| s))?;
    if pairs.is_empty() {
        return Ok(CyclicDataSet::free(m, g2, 1));
    }
    Ok(CyclicDataSet::new(m, g2, 0, pairs))
}

pub fn derive_factors(d: &MetacyclicDataSet) -> Result<CyclicFactors> {
    Ok(CyclicFactors {
        dg: derive_dg(d)?,
        df: derive_df(d)?,
    })
}

/// Alternative orbit exponent: least `γ >= 1` with `|k|` dividing `γ m/n_i1`.
pub fn orbit_gamma(k: u64, n: u64, m: u64, n1: u64) -> Result<u64> {
    let order = mult_order(k, n)?;
    let base = m / n1;
    Ok((1..=order)
        .find(|g| (g * base).is_multiple_of(order))
        .unwrap_or(order))
}

/// Pairs in canonical order, for comparisons that ignore listing order.
pub fn canonical_pairs(d: &CyclicDataSet) -> Vec<Pair> {
    d.canonical().pairs
}
