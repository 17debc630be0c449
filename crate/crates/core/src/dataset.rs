//! Split metacyclic data sets.
//!
//! A data set `((m·n,k),g0;[(c11,n11),(c12,n12),n1], ...)` describes an action
//! of `H = Z_n ⋊_k Z_m` on a closed surface: the quotient orbifold has genus
//! `g0`, and the i-th cone point (of order `n_i`) has its standard generator
//! sent to `G^(c_i1 m/n_i1) F^(c_i2 n/n_i2)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{gcd, mul_mod, pow_mod, rem};
use crate::error::{Error, Result};
use crate::group::{Element, GroupParams};
use crate::oracle::EpimorphismWitness;
use crate::text::Cursor;

/// One cone-point entry `[(c1,n1),(c2,n2),period]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub c1: u64,
    pub n1: u64,
    pub c2: u64,
    pub n2: u64,
    pub period: u64,
}

impl Triple {
    pub fn new(c1: u64, n1: u64, c2: u64, n2: u64, period: u64) -> Self {
        Triple {
            c1,
            n1,
            c2,
            n2,
            period,
        }
    }

    /// Encodes the element `x` as the triple whose image is `x`.
    pub fn from_element(p: &GroupParams, x: Element) -> Self {
        let (c1, n1) = encode(x.b, p.m());
        let (c2, n2) = encode(x.a, p.n());
        Triple::new(c1, n1, c2, n2, p.order_of(x))
    }

    /// Exponent of `G` in the image, `c1 m / n1`.
    pub fn g_exponent(&self, p: &GroupParams) -> u64 {
        (self.c1 * (p.m() / self.n1)) % p.m()
    }

    /// Exponent of `F` in the image, `c2 n / n2`.
    pub fn f_exponent(&self, p: &GroupParams) -> u64 {
        (self.c2 * (p.n() / self.n2)) % p.n()
    }

    /// The image `G^(c1 m/n1) F^(c2 n/n2)`. Assumes `n1 | m` and `n2 | n`.
    pub fn image(&self, p: &GroupParams) -> Element {
        Element::new(self.g_exponent(p), self.f_exponent(p))
    }

    fn structural_error(&self, p: &GroupParams) -> Option<String> {
        for (c, d, modulus, side) in [
            (self.c1, self.n1, p.m(), "first"),
            (self.c2, self.n2, p.n(), "second"),
        ] {
            if d == 0 || modulus % d != 0 {
                return Some(format!(
                    "{side} pair ({c},{d}): {d} does not divide {modulus}"
                ));
            }
            if (c == 0) != (d == 1) {
                return Some(format!(
                    "{side} pair ({c},{d}): c = 0 exactly when the order is 1"
                ));
            }
            if c != 0 && (c >= d || gcd(c, d) != 1) {
                return Some(format!("{side} pair ({c},{d}): c is not a unit modulo {d}"));
            }
        }
        if self.period < 1 {
            return Some("period must be positive".into());
        }
        None
    }
}

/// `x ∈ Z_mod` written as `c · (mod/d)` with `d` the order of `x`.
fn encode(x: u64, modulus: u64) -> (u64, u64) {
    if x.is_multiple_of(modulus) {
        return (0, 1);
    }
    let g = gcd(x, modulus);
    (x / g, modulus / g)
}

impl Serialize for Triple {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ((self.c1, self.n1), (self.c2, self.n2), self.period).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Triple {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let ((c1, n1), (c2, n2), period) = <((u64, u64), (u64, u64), u64)>::deserialize(d)?;
        Ok(Triple::new(c1, n1, c2, n2, period))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MetacyclicDataSet {
    pub params: GroupParams,
    pub g0: u64,
    pub triples: Vec<Triple>,
}

impl MetacyclicDataSet {
    /// Sort key: parameters, then `g0` descending, then fewer cone points,
    /// then triples by `(n_i1, c_i1, n_i, F-exponent)`.
    fn order_key(&self) -> impl Ord {
        let p = &self.params;
        (
            (p.m(), p.n(), p.k()),
            std::cmp::Reverse(self.g0),
            self.triples.len(),
            self.triples
                .iter()
                .map(|t| canonical_key(p, t))
                .collect::<Vec<_>>(),
        )
    }
}

impl PartialOrd for MetacyclicDataSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MetacyclicDataSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

#[derive(Serialize, Deserialize)]
struct JsonForm {
    m: u64,
    n: u64,
    k: i64,
    g0: u64,
    triples: Vec<Triple>,
}

impl Serialize for MetacyclicDataSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        JsonForm {
            m: self.params.m(),
            n: self.params.n(),
            k: self.params.k() as i64,
            g0: self.g0,
            triples: self.triples.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MetacyclicDataSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = JsonForm::deserialize(d)?;
        let params = GroupParams::new(raw.m, raw.n, rem(raw.k, raw.n.max(1)))
            .map_err(serde::de::Error::custom)?;
        Ok(MetacyclicDataSet {
            params,
            g0: raw.g0,
            triples: raw.triples,
        })
    }
}

/// Outcome of one clause.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseResult {
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl ClauseResult {
    fn pass() -> Self {
        ClauseResult {
            passed: true,
            detail: None,
        }
    }

    fn pass_with(detail: String) -> Self {
        ClauseResult {
            passed: true,
            detail: Some(detail),
        }
    }

    fn fail(detail: String) -> Self {
        ClauseResult {
            passed: false,
            detail: Some(detail),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    /// Keyed by clause id: `i`, `ii-a`, `ii-b`, `iii`, `iv`, `v`, `vi`.
    pub clauses: BTreeMap<String, ClauseResult>,
    #[serde(rename = "A")]
    pub a: u64,
    pub d: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<EpimorphismWitness>,
}

impl ValidationReport {
    pub fn failed_clauses(&self) -> Vec<&str> {
        self.clauses
            .iter()
            .filter(|(_, r)| !r.passed)
            .map(|(k, _)| k.as_str())
            .collect()
    }
}

/// Least `β >= 1` with `c2 (n/n2) Σ_{i<n1 β} k^(c1 (m/n1) i) = 0 (mod n)`.
pub fn compute_beta(p: &GroupParams, c1: u64, n1: u64, c2: u64, n2: u64) -> u64 {
    let n = p.n();
    let f_exp = (c2 * (n / n2)) % n;
    if f_exp == 0 {
        return 1;
    }
    let step = pow_mod(p.k(), (c1 * (p.m() / n1)) % p.m(), n);
    // running sum of step^i for i < n1 β, advanced n1 terms at a time
    let mut sum = 0u64;
    let mut power = 1u64;
    for beta in 1..=n {
        for _ in 0..n1 {
            sum = (sum + power) % n;
            power = mul_mod(power, step, n);
        }
        if mul_mod(f_exp, sum, n) == 0 {
            return beta;
        }
    }
    n
}

/// `A = Σ_i c_i2 (n/n_i2) Π_{s>i} k^(c_s1 m/n_s1) mod n`.
pub fn compute_a(d: &MetacyclicDataSet) -> u64 {
    let p = &d.params;
    let n = p.n();
    let mut a = 0u64;
    let mut suffix = 1u64;
    for t in d.triples.iter().rev() {
        a = (a + mul_mod(t.f_exponent(p), suffix, n)) % n;
        suffix = mul_mod(suffix, p.k_pow(t.g_exponent(p)), n);
    }
    a
}

/// Genus from `(2g-2)/(mn) = 2 g0 - 2 + Σ (1 - 1/n_i)`.
pub fn genus_of_metacyclic(d: &MetacyclicDataSet) -> Result<u64> {
    let order = d.params.order() as i64;
    let periods: Vec<u64> = d.triples.iter().map(|t| t.period).collect();
    genus_from_signature(order, d.g0, &periods)
}

pub(crate) fn genus_from_signature(order: i64, g0: u64, periods: &[u64]) -> Result<u64> {
    if periods.contains(&0) {
        return Err(Error::NonIntegralGenus {
            detail: "zero period".into(),
        });
    }
    let mut rhs = Ratio::from_integer(2 * g0 as i64 - 2);
    for &q in periods {
        rhs += Ratio::new(q as i64 - 1, q as i64);
    }
    let two_g_minus_2 = rhs * order;
    if !two_g_minus_2.is_integer() || two_g_minus_2.to_integer() % 2 != 0 {
        return Err(Error::NonIntegralGenus {
            detail: format!("2g - 2 = {two_g_minus_2}"),
        });
    }
    let g = two_g_minus_2.to_integer() / 2 + 1;
    if g < 0 {
        return Err(Error::NonIntegralGenus {
            detail: format!("negative genus {g}"),
        });
    }
    Ok(g as u64)
}

impl MetacyclicDataSet {
    pub fn new(params: GroupParams, g0: u64, triples: Vec<Triple>) -> Self {
        MetacyclicDataSet {
            params,
            g0,
            triples,
        }
    }

    /// Builds a data set from explicit cone-point images.
    pub fn from_images(params: GroupParams, g0: u64, images: &[Element]) -> Self {
        let triples = images
            .iter()
            .map(|&x| Triple::from_element(&params, x))
            .collect();
        MetacyclicDataSet {
            params,
            g0,
            triples,
        }
    }

    pub fn images(&self) -> Vec<Element> {
        self.triples.iter().map(|t| t.image(&self.params)).collect()
    }

    pub fn periods(&self) -> Vec<u64> {
        self.triples.iter().map(|t| t.period).collect()
    }

    pub fn genus(&self) -> Result<u64> {
        genus_of_metacyclic(self)
    }

    pub fn validate(&self) -> ValidationReport {
        validate(self)
    }

    /// `m = 2` and `k = -1`.
    pub fn is_dihedral(&self) -> bool {
        self.params.m() == 2 && self.params.k() == self.params.n() - 1
    }

    /// `m = 4`, `n` a power of two at least 4, `k = -1`, and no triple `[(1,2),(1,2),2]`.
    pub fn is_quaternionic(&self) -> bool {
        let p = &self.params;
        let forbidden = Triple::new(1, 2, 1, 2, 2);
        p.m() == 4
            && p.n() >= 4
            && p.n().is_power_of_two()
            && p.k() == p.n() - 1
            && !self.triples.contains(&forbidden)
    }

    /// Per-triple least reachable `F`-exponent, triples sorted.
    pub fn canonical_form(&self) -> MetacyclicDataSet {
        let p = &self.params;
        let mut triples: Vec<Triple> = self
            .triples
            .iter()
            .map(|t| {
                let rep = least_equivalent_exponent(p, t.g_exponent(p), t.f_exponent(p));
                let (c2, n2) = encode(rep, p.n());
                Triple::new(t.c1, t.n1, c2, n2, t.period)
            })
            .collect();
        triples.sort_by_key(|t| canonical_key(p, t));
        MetacyclicDataSet {
            params: p.clone(),
            g0: self.g0,
            triples,
        }
    }

    /// Text in the tabulated style. `unicode` selects `·` over `.`; `compress`
    /// writes runs of equal adjacent triples with a `_t` suffix.
    pub fn to_text(&self, unicode: bool, compress: bool) -> String {
        let p = &self.params;
        let dot = if unicode { "·" } else { "." };
        let k = if p.n() > 2 && p.k() == p.n() - 1 {
            "-1".to_string()
        } else {
            p.k().to_string()
        };
        let mut items = Vec::new();
        let mut i = 0;
        while i < self.triples.len() {
            let t = self.triples[i];
            let mut run = 1;
            if compress {
                while i + run < self.triples.len() && self.triples[i + run] == t {
                    run += 1;
                }
            }
            let mut item = format!("[({},{}),({},{}),{}]", t.c1, t.n1, t.c2, t.n2, t.period);
            if run > 1 {
                item.push_str(&format!("_{run}"));
            }
            items.push(item);
            i += run;
        }
        format!(
            "(({}{}{},{}),{};{})",
            p.m(),
            dot,
            p.n(),
            k,
            self.g0,
            items.join(",")
        )
    }
}

impl fmt::Display for MetacyclicDataSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(false, false))
    }
}

impl FromStr for MetacyclicDataSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.starts_with('{') {
            return serde_json::from_str(trimmed).map_err(|e| Error::Parse {
                pos: e.column(),
                msg: e.to_string(),
            });
        }
        let mut c = Cursor::new(s);
        c.expect('(')?;
        c.expect('(')?;
        let m = c.uint()?;
        c.expect('.')?;
        let n = c.uint()?;
        c.expect(',')?;
        let k = c.int()?;
        c.expect(')')?;
        c.expect(',')?;
        let g0 = c.uint()?;
        c.expect(';')?;
        let mut triples = Vec::new();
        if !c.eat(')') {
            loop {
                c.expect('[')?;
                c.expect('(')?;
                let c1 = c.uint()?;
                c.expect(',')?;
                let n1 = c.uint()?;
                c.expect(')')?;
                c.expect(',')?;
                c.expect('(')?;
                let c2 = c.uint()?;
                c.expect(',')?;
                let n2 = c.uint()?;
                c.expect(')')?;
                c.expect(',')?;
                let period = c.uint()?;
                c.expect(']')?;
                let mut count = 1;
                if c.eat('_') {
                    let braced = c.eat('{');
                    count = c.uint()?;
                    if braced {
                        c.expect('}')?;
                    }
                }
                let t = Triple::new(c1, n1, c2, n2, period);
                triples.extend(std::iter::repeat_n(t, count as usize));
                if c.eat(')') {
                    break;
                }
                c.expect(',')?;
            }
        }
        c.finish()?;
        if n == 0 {
            return Err(Error::Parse {
                pos: 0,
                msg: "n must be positive".into(),
            });
        }
        let params = GroupParams::new(m, n, rem(k, n))?;
        Ok(MetacyclicDataSet {
            params,
            g0,
            triples,
        })
    }
}

fn canonical_key(p: &GroupParams, t: &Triple) -> (u64, u64, u64, u64) {
    (t.n1, t.c1, t.period, t.f_exponent(p))
}

/// Least `a k^s + y (k^b - 1) mod n` over all `s` and `y`: the least
/// `F`-exponent among conjugates of `G^b F^a` with the same `G`-exponent.
pub(crate) fn least_equivalent_exponent(p: &GroupParams, b: u64, a: u64) -> u64 {
    let n = p.n();
    let shift = (p.k_pow(b) + n - 1) % n;
    // the y-multiples of k^b - 1 form the subgroup generated by gcd(shift, n)
    let step = gcd(shift, n);
    let mut best = n;
    let mut scaled = a % n;
    for _ in 0..p.m() {
        best = best.min(scaled % step);
        scaled = mul_mod(scaled, p.k(), n);
    }
    best
}

fn conjugate_exponents(p: &GroupParams, b: u64, a: u64, target: u64) -> bool {
    let n = p.n();
    let step = gcd((p.k_pow(b) + n - 1) % n, n);
    let mut scaled = a % n;
    for _ in 0..p.m() {
        if scaled % step == target % step {
            return true;
        }
        scaled = mul_mod(scaled, p.k(), n);
    }
    false
}

/// Equivalence (same multiset of conjugacy classes) by explicit bijection search between triples.
pub fn equivalent(d: &MetacyclicDataSet, e: &MetacyclicDataSet) -> Result<bool> {
    let (p, q) = (&d.params, &e.params);
    if p.m() != q.m()
        || p.n() != q.n()
        || p.k() != q.k()
        || d.g0 != e.g0
        || d.triples.len() != e.triples.len()
    {
        return Err(Error::ShapeMismatch(format!(
            "{} with {} triples vs {} with {} triples",
            p,
            d.triples.len(),
            q,
            e.triples.len()
        )));
    }
    let matches = |s: &Triple, t: &Triple| {
        s.c1 == t.c1
            && s.n1 == t.n1
            && s.period == t.period
            && conjugate_exponents(p, t.g_exponent(p), t.f_exponent(p), s.f_exponent(p))
    };
    fn assign(
        i: usize,
        left: &[Triple],
        right: &[Triple],
        used: &mut [bool],
        matches: &dyn Fn(&Triple, &Triple) -> bool,
    ) -> bool {
        if i == left.len() {
            return true;
        }
        for j in 0..right.len() {
            if !used[j] && matches(&left[i], &right[j]) {
                used[j] = true;
                if assign(i + 1, left, right, used, matches) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    let mut used = vec![false; d.triples.len()];
    Ok(assign(0, &e.triples, &d.triples, &mut used, &matches))
}

pub fn canonical_form(d: &MetacyclicDataSet) -> MetacyclicDataSet {
    d.canonical_form()
}

pub fn validate(ds: &MetacyclicDataSet) -> ValidationReport {
    let p = &ds.params;
    let (m, n) = (p.m(), p.n());
    let d = p.d();
    let mut clauses = BTreeMap::new();
    let report = |clauses: &mut BTreeMap<String, ClauseResult>,
                  a: u64,
                  genus: Option<u64>,
                  witness: Option<EpimorphismWitness>| {
        let ok = clauses.values().all(|r| r.passed);
        ValidationReport {
            ok,
            clauses: std::mem::take(clauses),
            a,
            d,
            genus,
            witness,
        }
    };

    // (i)
    let genus = match genus_of_metacyclic(ds) {
        Ok(g) if g >= 2 => {
            clauses.insert("i".into(), ClauseResult::pass_with(format!("genus {g}")));
            Some(g)
        }
        Ok(g) => {
            clauses.insert(
                "i".into(),
                ClauseResult::fail(format!("genus {g} is below 2")),
            );
            None
        }
        Err(e) => {
            clauses.insert("i".into(), ClauseResult::fail(e.to_string()));
            None
        }
    };

    // (ii)(a)
    let structural: Vec<String> = ds
        .triples
        .iter()
        .enumerate()
        .filter_map(|(i, t)| {
            t.structural_error(p)
                .map(|e| format!("triple {}: {e}", i + 1))
        })
        .collect();
    if structural.is_empty() {
        clauses.insert("ii-a".into(), ClauseResult::pass());
    } else {
        clauses.insert("ii-a".into(), ClauseResult::fail(structural.join("; ")));
        return report(&mut clauses, 0, genus, None);
    }

    // (ii)(b)
    let bad_periods: Vec<String> = ds
        .triples
        .iter()
        .enumerate()
        .filter_map(|(i, t)| {
            let beta = compute_beta(p, t.c1, t.n1, t.c2, t.n2);
            (t.n1 * beta != t.period)
                .then(|| format!("triple {}: expected n_i = {}", i + 1, t.n1 * beta))
        })
        .collect();
    clauses.insert(
        "ii-b".into(),
        if bad_periods.is_empty() {
            ClauseResult::pass()
        } else {
            ClauseResult::fail(bad_periods.join("; "))
        },
    );

    // (iii)
    let g_sum = ds
        .triples
        .iter()
        .fold(0, |acc, t| (acc + t.g_exponent(p)) % m);
    clauses.insert(
        "iii".into(),
        if g_sum == 0 {
            ClauseResult::pass()
        } else {
            ClauseResult::fail(format!("sum of G-exponents is {g_sum} mod {m}"))
        },
    );

    // (iv)
    let a = compute_a(ds);
    let iv_ok = if ds.g0 == 0 {
        a == 0
    } else {
        a.is_multiple_of(d)
    };
    clauses.insert(
        "iv".into(),
        if iv_ok {
            ClauseResult::pass_with(format!("A = {a}, d = {d}"))
        } else if ds.g0 == 0 {
            ClauseResult::fail(format!("A = {a} is not 0 mod {n}"))
        } else {
            ClauseResult::fail(format!("A = {a} is not a multiple of d = {d}"))
        },
    );

    if clauses.values().any(|r| !r.passed) {
        return report(&mut clauses, a, genus, None);
    }

    let images = ds.images();
    let product = p.product(&images);
    let witness = match ds.g0 {
        0 => {
            let order = p.closure_order(&images);
            if order == p.order() {
                clauses.insert("v".into(), ClauseResult::pass());
                Some(EpimorphismWitness::new(images, Vec::new()))
            } else {
                clauses.insert(
                    "v".into(),
                    ClauseResult::fail(format!("images generate a subgroup of order {order}")),
                );
                None
            }
        }
        1 => match search_torus_generators(p, &images, product) {
            Some((alpha, beta)) => {
                clauses.insert(
                    "vi".into(),
                    ClauseResult::pass_with(format!("alpha = {alpha}, beta = {beta}")),
                );
                Some(EpimorphismWitness::new(
                    images,
                    vec![Element::new(alpha, 0), Element::new(0, beta)],
                ))
            }
            None => {
                clauses.insert(
                    "vi".into(),
                    ClauseResult::fail(
                        "no (alpha, beta) satisfies the long relation and generates".into(),
                    ),
                );
                None
            }
        },
        g0 => higher_genus_witness(p, images, product, g0),
    };
    report(&mut clauses, a, genus, witness)
}

/// First `(α, β)` in lexicographic order with `Π ξ · [G^α, F^β] = 1` and
/// the images together with `G^α, F^β` generating `H`.
fn search_torus_generators(
    p: &GroupParams,
    images: &[Element],
    product: Element,
) -> Option<(u64, u64)> {
    let mut gens = images.to_vec();
    gens.push(Element::IDENTITY);
    gens.push(Element::IDENTITY);
    let len = gens.len();
    for alpha in 0..p.m() {
        for beta in 0..p.n() {
            let x = Element::new(alpha, 0);
            let y = Element::new(0, beta);
            if !p.mul(product, p.commutator(x, y)).is_identity() {
                continue;
            }
            gens[len - 2] = x;
            gens[len - 1] = y;
            if p.generates_whole_group(&gens) {
                return Some((alpha, beta));
            }
        }
    }
    None
}

/// `α_1 ↦ G`, `β_1 ↦ F`, `α_2 ↦ G`, `β_2 ↦ F^β'` with `β'` chosen to close
/// the long relation; remaining handles map to the identity.
fn higher_genus_witness(
    p: &GroupParams,
    images: Vec<Element>,
    product: Element,
    g0: u64,
) -> Option<EpimorphismWitness> {
    let (g, f) = (p.g(), p.f());
    let partial = p.mul(product, p.commutator(g, f));
    let beta = (0..p.n()).find(|&b| {
        p.mul(partial, p.commutator(g, Element::new(0, b)))
            .is_identity()
    })?;
    let mut hyperbolic = vec![g, f, g, Element::new(0, beta)];
    hyperbolic.resize(2 * g0 as usize, Element::IDENTITY);
    Some(EpimorphismWitness::new(images, hyperbolic))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(s: &str) -> MetacyclicDataSet {
        s.parse().unwrap()
    }

    #[test]
    fn beta_examples() {
        let d6 = GroupParams::new(2, 3, 2).unwrap();
        assert_eq!(compute_beta(&d6, 0, 1, 1, 3), 3);
        let q = GroupParams::new(4, 4, 3).unwrap();
        assert_eq!(compute_beta(&q, 0, 1, 1, 2), 2);
        assert_eq!(compute_beta(&q, 1, 4, 0, 1), 1);
    }

    #[test]
    fn beta_matches_element_order() {
        for (m, n, k) in [(2, 8, 5), (4, 5, 2), (3, 7, 2), (2, 12, 5), (4, 4, 3)] {
            let p = GroupParams::new(m, n, k).unwrap();
            for x in p.elements() {
                let t = Triple::from_element(&p, x);
                assert_eq!(t.image(&p), x);
                assert_eq!(
                    t.n1 * compute_beta(&p, t.c1, t.n1, t.c2, t.n2),
                    p.order_of(x)
                );
            }
        }
    }

    #[test]
    fn a_examples() {
        assert_eq!(compute_a(&ds("((2·3,-1),1;[(0,1),(1,3),3])")), 1);
        assert_eq!(compute_a(&ds("((2·3,-1),1;)")), 0);
        assert_eq!(compute_a(&ds("((4·4,-1),1;[(0,1),(1,2),2])")), 2);
    }

    #[test]
    fn validate_examples() {
        let r = ds("((2·3,-1),1;[(0,1),(1,3),3])").validate();
        assert!(r.ok, "{r:?}");
        assert_eq!(r.genus, Some(3));
        let r = ds("((4·4,-1),1;[(0,1),(1,2),2])").validate();
        assert!(r.ok);
        assert_eq!(r.genus, Some(5));
        let r = ds("((2·3,-1),1;[(1,2),(0,1),2])").validate();
        assert!(!r.ok);
        assert!(r.failed_clauses().contains(&"iii"));
        let r = ds("((2·3,-1),1;[(1,2),(1,3),6])").validate();
        assert!(!r.ok);
        assert!(r.failed_clauses().contains(&"iii"));
    }

    #[test]
    fn witnesses_reverify() {
        for s in [
            "((2·3,-1),1;[(0,1),(1,3),3])",
            "((2·3,-1),0;[(1,2),(0,1),2]_3,[(1,2),(1,3),2],[(0,1),(2,3),3])",
            "((2·8,5),0;[(1,2),(0,1),2],[(1,2),(7,8),8],[(0,1),(1,8),8])",
            "((2·3,-1),2;)",
        ] {
            let d = ds(s);
            let r = d.validate();
            assert!(r.ok, "{s}: {r:?}");
            let w = r.witness.unwrap();
            assert!(w.verify(&d.params, &d.periods()), "{s}");
        }
    }

    #[test]
    fn genus_examples() {
        assert_eq!(ds("((2·3,-1),1;[(0,1),(1,3),3])").genus().unwrap(), 3);
        assert_eq!(ds("((4·4,-1),1;[(0,1),(1,2),2])").genus().unwrap(), 5);
        assert_eq!(
            ds("((2·8,5),0;[(1,2),(0,1),2],[(1,2),(7,8),8],[(0,1),(1,8),8])")
                .genus()
                .unwrap(),
            3
        );
    }

    #[test]
    fn dihedral_and_quaternionic() {
        let d = ds("((2·3,-1),1;[(0,1),(1,3),3])");
        assert!(d.is_dihedral());
        assert!(!d.is_quaternionic());
        let q = ds("((4·4,-1),1;[(0,1),(1,2),2])");
        assert!(q.is_quaternionic());
        assert!(!q.is_dihedral());
        let mut bad = q.clone();
        bad.triples.push(Triple::new(1, 2, 1, 2, 2));
        assert!(!bad.is_quaternionic());
    }

    #[test]
    fn equivalence_examples() {
        let a = ds("((2·3,-1),1;[(0,1),(1,3),3])");
        let b = ds("((2·3,-1),1;[(0,1),(2,3),3])");
        assert!(equivalent(&a, &a).unwrap());
        assert!(equivalent(&a, &b).unwrap());
        assert_eq!(a.canonical_form(), b.canonical_form());
        let x = ds("((2·8,5),0;[(1,2),(0,1),2],[(1,2),(7,8),8],[(0,1),(1,8),8])");
        let y = ds("((2·8,5),0;[(1,2),(0,1),2],[(1,2),(1,8),8],[(0,1),(7,8),8])");
        assert!(!equivalent(&x, &y).unwrap());
        assert_ne!(x.canonical_form(), y.canonical_form());
        let z = ds("((2·8,5),1;)");
        assert!(matches!(equivalent(&x, &z), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn least_exponent_is_class_minimum() {
        for (m, n, k) in [(2, 8, 5), (4, 5, 2), (3, 7, 2), (4, 4, 3), (2, 12, 7)] {
            let p = GroupParams::new(m, n, k).unwrap();
            for x in p.elements() {
                let want = p
                    .conjugacy_class(x)
                    .into_iter()
                    .filter(|y| y.b == x.b)
                    .map(|y| y.a)
                    .min();
                assert_eq!(Some(least_equivalent_exponent(&p, x.b, x.a)), want);
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let s = "((2·3,-1),0;[(1,2),(0,1),2]_3,[(1,2),(1,3),2],[(0,1),(2,3),3])^*";
        let d = ds(s);
        assert_eq!(d.triples.len(), 5);
        assert_eq!(
            d.to_text(true, true),
            "((2·3,-1),0;[(1,2),(0,1),2]_3,[(1,2),(1,3),2],[(0,1),(2,3),3])"
        );
        let ascii = d.to_text(false, false);
        assert_eq!(ds(&ascii), d);
        assert_eq!(
            ds("((2.3,-1),0;[(1,2),(0,1),2]_{3},[(1,2),(1,3),2],[(0,1),(2,3),3])"),
            d
        );
        assert!("((2·3,-1),0;[(1,2),(0,1),2]"
            .parse::<MetacyclicDataSet>()
            .is_err());
    }

    #[test]
    fn json_round_trip() {
        let d = ds("((4·4,-1),1;[(0,1),(1,2),2])");
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(
            json,
            r#"{"m":4,"n":4,"k":3,"g0":1,"triples":[[[0,1],[1,2],2]]}"#
        );
        assert_eq!(ds(&json), d);
    }
}
