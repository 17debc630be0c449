//! Data sets of cyclic actions.
//!
//! A data set `(n, g0, r; (c_1,n_1), ..., (c_l,n_l))` encodes the conjugacy
//! class of a `Z_n`-action on a closed surface: the quotient has genus `g0`
//! and one cone point of order `n_i` per pair, where the generator acts near
//! the points over that cone point by the rotation `2π c_i^-1 / n_i`. The
//! residue `r` is nonzero only for free actions (no pairs), which are
//! rotations by `2π r / n`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::arith::{gcd, lcm_all};
use crate::error::{Error, Result};
use crate::text::Cursor;

/// A pair `(c, period)`; serializes as `[c, period]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Pair(pub u64, pub u64);

impl Pair {
    pub fn c(&self) -> u64 {
        self.0
    }

    pub fn period(&self) -> u64 {
        self.1
    }

    /// Canonical order: by period, then by `c`.
    fn key(&self) -> (u64, u64) {
        (self.1, self.0)
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclicDataSet {
    pub n: u64,
    pub g0: u64,
    #[serde(default)]
    pub r: u64,
    #[serde(default)]
    pub pairs: Vec<Pair>,
}

/// One failed clause of the cyclic data-set definition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "kebab-case")]
pub enum CyclicViolation {
    /// `n < 2`, a period below 2, or `c` outside `[1, n_i)`.
    Shape { detail: String },
    /// Free rotation residue inconsistent with the pair list, or not a unit.
    ClauseI { detail: String },
    /// A period does not divide `n`.
    ClauseII { index: usize, period: u64 },
    /// `c_i` is not a unit modulo `n_i`.
    Gcd { index: usize, c: u64, period: u64 },
    /// Omit-one lcms differ, or differ from `n` on a sphere quotient.
    ClauseIII { lcms: Vec<u64> },
    /// `Σ (n/n_j) c_j` is not 0 modulo `n`.
    ClauseIV { sum: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicReport {
    pub ok: bool,
    pub violations: Vec<CyclicViolation>,
}

impl CyclicDataSet {
    /// Builds a data set with pairs in canonical order. `r` must be 0 when pairs are given.
    pub fn new(n: u64, g0: u64, r: u64, pairs: impl IntoIterator<Item = (u64, u64)>) -> Self {
        let mut pairs: Vec<Pair> = pairs.into_iter().map(|(c, p)| Pair(c, p)).collect();
        pairs.sort();
        CyclicDataSet { n, g0, r, pairs }
    }

    /// A free rotation `(n, g0, r;)`.
    pub fn free(n: u64, g0: u64, r: u64) -> Self {
        CyclicDataSet {
            n,
            g0,
            r,
            pairs: Vec::new(),
        }
    }

    pub fn is_free(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Same data set with pairs sorted canonically.
    pub fn canonical(&self) -> Self {
        let mut out = self.clone();
        out.pairs.sort();
        out
    }

    pub fn validate(&self) -> CyclicReport {
        validate_cyclic(self)
    }

    pub fn genus(&self) -> Result<u64> {
        genus_of(self)
    }

    /// Distinct pairs with multiplicities, in canonical order.
    pub fn compact_form(&self) -> Vec<(Pair, usize)> {
        let mut counts: BTreeMap<Pair, usize> = BTreeMap::new();
        for &p in &self.pairs {
            *counts.entry(p).or_default() += 1;
        }
        counts.into_iter().collect()
    }

    /// Inverse of [`CyclicDataSet::compact_form`].
    pub fn expand(n: u64, g0: u64, r: u64, compact: &[(Pair, usize)]) -> Self {
        let pairs = compact
            .iter()
            .flat_map(|&(p, count)| std::iter::repeat_n(p, count));
        let mut pairs: Vec<Pair> = pairs.collect();
        pairs.sort();
        CyclicDataSet { n, g0, r, pairs }
    }

    /// True when the pairs split into couples `{(c, n_i), (n_i - c, n_i)}`.
    pub fn is_inverse_paired(&self) -> bool {
        let mut counts: BTreeMap<Pair, usize> = BTreeMap::new();
        for &p in &self.pairs {
            *counts.entry(p).or_default() += 1;
        }
        counts.iter().all(|(&Pair(c, period), &count)| {
            let partner = Pair((period - c % period) % period, period);
            if partner == Pair(c, period) {
                count % 2 == 0
            } else {
                counts.get(&partner).copied().unwrap_or(0) == count
            }
        })
    }

    /// Table-style text: multiplicity-one pairs as `(c,n_i)`,
    /// repeated pairs as `((c,n_i),α)`, free rotations as `(n,g0,r;)`.
    pub fn to_table_text(&self) -> String {
        if self.pairs.is_empty() {
            return format!("({},{},{};)", self.n, self.g0, self.r);
        }
        let items: Vec<String> = self
            .compact_form()
            .into_iter()
            .map(|(Pair(c, p), count)| {
                if count == 1 {
                    format!("({c},{p})")
                } else {
                    format!("(({c},{p}),{count})")
                }
            })
            .collect();
        format!("({},{};{})", self.n, self.g0, items.join(","))
    }
}

impl fmt::Display for CyclicDataSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_table_text())
    }
}

impl FromStr for CyclicDataSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cursor = Cursor::new(s);
        let parsed = parse_cyclic(&mut cursor)?;
        cursor.finish()?;
        Ok(parsed)
    }
}

/// Parses `(n,g0[,r];items)`; each item is `(c,n_i)` or `((c,n_i),α)`.
pub(crate) fn parse_cyclic(cursor: &mut Cursor<'_>) -> Result<CyclicDataSet> {
    cursor.expect('(')?;
    let n = cursor.uint()?;
    cursor.expect(',')?;
    let g0 = cursor.uint()?;
    let r = if cursor.eat(',') { cursor.uint()? } else { 0 };
    cursor.expect(';')?;
    let mut pairs = Vec::new();
    if !cursor.eat(')') {
        loop {
            cursor.expect('(')?;
            if cursor.eat('(') {
                let c = cursor.uint()?;
                cursor.expect(',')?;
                let p = cursor.uint()?;
                cursor.expect(')')?;
                cursor.expect(',')?;
                let count = cursor.uint()?;
                cursor.expect(')')?;
                pairs.extend(std::iter::repeat_n(Pair(c, p), count as usize));
            } else {
                let c = cursor.uint()?;
                cursor.expect(',')?;
                let p = cursor.uint()?;
                cursor.expect(')')?;
                pairs.push(Pair(c, p));
            }
            if cursor.eat(')') {
                break;
            }
            cursor.expect(',')?;
        }
    }
    if n == 0 {
        return cursor.error("degree must be positive");
    }
    pairs.sort();
    Ok(CyclicDataSet { n, g0, r, pairs })
}

pub fn validate_cyclic(d: &CyclicDataSet) -> CyclicReport {
    let mut violations = Vec::new();
    if d.n < 2 {
        violations.push(CyclicViolation::Shape {
            detail: format!("degree {} is below 2", d.n),
        });
    }
    if d.r >= d.n.max(1) {
        violations.push(CyclicViolation::Shape {
            detail: format!("r = {} is not a residue modulo {}", d.r, d.n),
        });
    }
    for (i, &Pair(c, p)) in d.pairs.iter().enumerate() {
        if p < 2 || c == 0 || c >= p {
            violations.push(CyclicViolation::Shape {
                detail: format!(
                    "pair {} = ({c},{p}) needs period >= 2 and c in [1, period)",
                    i + 1
                ),
            });
        } else if gcd(c, p) != 1 {
            violations.push(CyclicViolation::Gcd {
                index: i + 1,
                c,
                period: p,
            });
        }
    }
    // (i)
    if d.r > 0 && !d.pairs.is_empty() {
        violations.push(CyclicViolation::ClauseI {
            detail: "r > 0 with cone points".into(),
        });
    }
    if d.r == 0 && d.pairs.is_empty() {
        violations.push(CyclicViolation::ClauseI {
            detail: "free action needs r > 0".into(),
        });
    }
    if d.r > 0 && gcd(d.r, d.n) != 1 {
        violations.push(CyclicViolation::ClauseI {
            detail: format!("gcd(r, n) = {} != 1", gcd(d.r, d.n)),
        });
    }
    // (ii)
    for (i, &Pair(_, p)) in d.pairs.iter().enumerate() {
        if p == 0 || !d.n.is_multiple_of(p) {
            violations.push(CyclicViolation::ClauseII {
                index: i + 1,
                period: p,
            });
        }
    }
    // (iii)
    if !d.pairs.is_empty() {
        let lcms: Vec<u64> = (0..d.pairs.len())
            .map(|skip| {
                lcm_all(
                    d.pairs
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != skip)
                        .map(|(_, p)| p.period()),
                )
            })
            .collect();
        let uniform = lcms.windows(2).all(|w| w[0] == w[1]);
        if !uniform || (d.g0 == 0 && lcms[0] != d.n) {
            violations.push(CyclicViolation::ClauseIII { lcms });
        }
    }
    // (iv)
    if d.n >= 1
        && d.pairs
            .iter()
            .all(|p| p.period() > 0 && d.n.is_multiple_of(p.period()))
    {
        let sum = d
            .pairs
            .iter()
            .fold(0u64, |acc, p| (acc + (d.n / p.period()) * p.c()) % d.n);
        if sum != 0 {
            violations.push(CyclicViolation::ClauseIV { sum });
        }
    }
    CyclicReport {
        ok: violations.is_empty(),
        violations,
    }
}

/// Genus from `(2 - 2g)/n = 2 - 2 g0 + Σ (1/n_j - 1)`, in exact arithmetic.
pub fn genus_of(d: &CyclicDataSet) -> Result<u64> {
    if d.n == 0 || d.pairs.iter().any(|p| p.period() == 0) {
        return Err(Error::NonIntegralGenus {
            detail: "zero degree or period".into(),
        });
    }
    let n = d.n as i64;
    let mut rhs = Ratio::from_integer(2 - 2 * d.g0 as i64);
    for p in &d.pairs {
        rhs += Ratio::new(1, p.period() as i64) - 1;
    }
    // 2 - 2g = n * rhs
    let two_minus_2g = rhs * n;
    if !two_minus_2g.is_integer() {
        return Err(Error::NonIntegralGenus {
            detail: format!("2 - 2g = {two_minus_2g}"),
        });
    }
    let two_g = 2 - two_minus_2g.to_integer();
    if two_g < 0 || two_g % 2 != 0 {
        return Err(Error::NonIntegralGenus {
            detail: format!("2g = {two_g}"),
        });
    }
    Ok((two_g / 2) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(s: &str) -> CyclicDataSet {
        s.parse().unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(ds("(3,1;(1,3),(2,3))").validate().ok);
        assert!(ds("(2,2,1;)").validate().ok);
        let report = ds("(4,0;(1,4),(1,4))").validate();
        assert!(!report.ok);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, CyclicViolation::ClauseIV { sum: 2 })));
    }

    #[test]
    fn violations_are_named() {
        let report = ds("(6,0;(2,4),(1,6))").validate();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, CyclicViolation::ClauseII { .. })));
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, CyclicViolation::Gcd { .. })));
        let report = ds("(4,1;)").validate();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, CyclicViolation::ClauseI { .. })));
        let report = ds("(4,2,2;)").validate();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, CyclicViolation::ClauseI { .. })));
        // sphere quotient whose cone points only generate Z_2 inside Z_4
        let report = ds("(4,0;((1,2),4))").validate();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, CyclicViolation::ClauseIII { .. })));
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus_of(&ds("(3,1;(1,3),(2,3))")).unwrap(), 3);
        assert_eq!(genus_of(&ds("(2,2,1;)")).unwrap(), 3);
        assert_eq!(genus_of(&ds("(8,0;(1,4),(1,8),(5,8))")).unwrap(), 3);
        assert!(genus_of(&ds("(4,0;(1,3))")).is_err());
    }

    #[test]
    fn compact_form_examples() {
        let d = ds("(4,1;(1,2),(1,2))");
        assert_eq!(d.compact_form(), vec![(Pair(1, 2), 2)]);
        assert!(ds("(2,2,1;)").compact_form().is_empty());
        assert_eq!(
            ds("(3,0;(1,3),(1,3),(1,3))").compact_form(),
            vec![(Pair(1, 3), 3)]
        );
        assert_eq!(d.to_table_text(), "(4,1;((1,2),2))");
    }

    #[test]
    fn inverse_pairing_examples() {
        assert!(ds("(3,1;(1,3),(2,3))").is_inverse_paired());
        assert!(ds("(4,0;(1,4),(3,4),(1,4),(3,4))").is_inverse_paired());
        assert!(!ds("(7,0;(1,7),(2,7),(4,7))").is_inverse_paired());
        assert!(ds("(4,1;((1,2),2))").is_inverse_paired());
        assert!(!ds("(6,0;(1,2),(1,3),(5,6))").is_inverse_paired());
    }

    #[test]
    fn parses_table_notation() {
        let d = ds("(6,0;((1,2),2),(1,6),(5,6))");
        assert_eq!(d.pairs.len(), 4);
        assert_eq!(d.to_table_text(), "(6,0;((1,2),2),(1,6),(5,6))");
        assert_eq!(
            ds("(12,0;(1,12),(5,12),(1,2))").to_table_text(),
            "(12,0;(1,2),(1,12),(5,12))"
        );
        assert!("(3,1;(1,3)".parse::<CyclicDataSet>().is_err());
    }

    #[test]
    fn json_shape() {
        let d = ds("(3,1;(1,3),(2,3))");
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(json, r#"{"n":3,"g0":1,"r":0,"pairs":[[1,3],[2,3]]}"#);
        let back: CyclicDataSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
    }
}
