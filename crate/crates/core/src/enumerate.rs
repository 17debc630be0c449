//! Exhaustive classification for a fixed genus.
//!
//! Two data sets are equivalent exactly when they have the same shape and the
//! same multiset of conjugacy classes of cone images, so a class is a
//! multiset of conjugacy classes whose element orders match an admissible
//! signature, together with one ordered tuple from those classes that passes
//! validation.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{pow_mod, units};
use crate::dataset::{MetacyclicDataSet, Triple};
use crate::derive::{derive_factors, CyclicFactors};
use crate::error::{Error, Result};
use crate::group::{Element, GroupParams};
use crate::oracle::OrbifoldSignature;
use crate::text::Cursor;

/// Hurwitz bound on the order of a group acting on a surface of genus `g >= 2`.
pub fn hurwitz_bound(g: u64) -> u64 {
    84 * (g - 1)
}

/// All `(g0; periods)` with periods drawn from `orders` (entries > 1) that
/// satisfy Riemann–Hurwitz for a group of the given order on genus `g`.
/// Ordered by `g0` descending, then number of periods, then periods.
pub fn signatures(g: u64, order: u64, orders: &[u64]) -> Vec<OrbifoldSignature> {
    let mut allowed: Vec<u64> = orders.iter().copied().filter(|&q| q > 1).collect();
    allowed.sort_unstable();
    allowed.dedup();
    let chi = Ratio::new(2 * g as i64 - 2, order as i64);
    let mut out = Vec::new();
    let mut g0 = 0i64;
    loop {
        let rest = chi - (2 * g0 - 2);
        if rest < Ratio::from_integer(0) {
            break;
        }
        let mut current = Vec::new();
        collect_periods(&allowed, 0, rest, &mut current, &mut |periods| {
            out.push(OrbifoldSignature::new(g0 as u64, periods.to_vec()));
        });
        g0 += 1;
    }
    out.sort_by(|a, b| {
        b.g0.cmp(&a.g0)
            .then(a.periods.len().cmp(&b.periods.len()))
            .then(a.periods.cmp(&b.periods))
    });
    out
}

fn collect_periods(
    allowed: &[u64],
    start: usize,
    rest: Ratio<i64>,
    current: &mut Vec<u64>,
    emit: &mut dyn FnMut(&[u64]),
) {
    if rest == Ratio::from_integer(0) {
        emit(current);
        return;
    }
    for i in start..allowed.len() {
        let q = allowed[i] as i64;
        let cost = Ratio::new(q - 1, q);
        if cost > rest {
            // costs grow with q
            break;
        }
        current.push(allowed[i]);
        collect_periods(allowed, i, rest - cost, current, emit);
        current.pop();
    }
}

/// A conjugacy class with its canonical triple.
struct ClassInfo {
    members: Vec<Element>,
    member_set: HashSet<Element>,
    key: (u64, u64, u64, u64),
    order: u64,
}

fn class_table(p: &GroupParams) -> Vec<ClassInfo> {
    let mut classes: Vec<ClassInfo> = p
        .conjugacy_classes()
        .into_iter()
        .filter(|c| !c[0].is_identity())
        .map(|members| {
            let t = Triple::from_element(p, members[0]);
            ClassInfo {
                member_set: members.iter().copied().collect(),
                key: (t.n1, t.c1, t.period, members[0].a),
                order: t.period,
                members,
            }
        })
        .collect();
    classes.sort_by_key(|c| c.key);
    classes
}

/// Multisets of class indices (sorted) whose orders are exactly `periods`.
fn class_multisets(classes: &[ClassInfo], periods: &[u64]) -> Vec<Vec<usize>> {
    let mut by_period: BTreeMap<u64, usize> = BTreeMap::new();
    for &q in periods {
        *by_period.entry(q).or_default() += 1;
    }
    let mut partial: Vec<Vec<usize>> = vec![Vec::new()];
    for (&q, &count) in &by_period {
        let pool: Vec<usize> = (0..classes.len())
            .filter(|&i| classes[i].order == q)
            .collect();
        let choices = multichoose(&pool, count);
        let mut next = Vec::new();
        for prefix in &partial {
            for choice in &choices {
                let mut merged = prefix.clone();
                merged.extend(choice);
                next.push(merged);
            }
        }
        partial = next;
    }
    for m in &mut partial {
        m.sort_unstable();
    }
    partial
}

fn multichoose(pool: &[usize], count: usize) -> Vec<Vec<usize>> {
    fn rec(
        pool: &[usize],
        start: usize,
        count: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == count {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            cur.push(pool[i]);
            rec(pool, i, count, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(pool, 0, count, &mut Vec::new(), &mut out);
    out
}

/// First valid ordered tuple (in scan order) drawn from the given classes.
fn find_representative(
    p: &GroupParams,
    g0: u64,
    classes: &[&ClassInfo],
) -> Option<MetacyclicDataSet> {
    let len = classes.len();
    let mut tuple = Vec::with_capacity(len);
    fn rec(
        p: &GroupParams,
        g0: u64,
        classes: &[&ClassInfo],
        prefix: Element,
        tuple: &mut Vec<Element>,
    ) -> Option<MetacyclicDataSet> {
        let i = tuple.len();
        let len = classes.len();
        if i == len {
            let ds = MetacyclicDataSet::from_images(p.clone(), g0, tuple);
            return ds.validate().ok.then_some(ds);
        }
        if g0 == 0 && i == len - 1 {
            // the long relation forces the last image
            let last = p.inv(prefix);
            if !classes[i].member_set.contains(&last) {
                return None;
            }
            tuple.push(last);
            let found = rec(p, g0, classes, Element::IDENTITY, tuple);
            tuple.pop();
            return found;
        }
        // every tuple can be conjugated so its first image is the class minimum,
        // except on torus quotients where the handle images are restricted
        let candidates: &[Element] = if i == 0 && g0 != 1 {
            &classes[0].members[..1]
        } else {
            &classes[i].members
        };
        for &x in candidates {
            tuple.push(x);
            let found = rec(p, g0, classes, p.mul(prefix, x), tuple);
            tuple.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
    if len == 0 {
        let ds = MetacyclicDataSet::new(p.clone(), g0, Vec::new());
        return ds.validate().ok.then_some(ds);
    }
    rec(p, g0, classes, Element::IDENTITY, &mut tuple)
}

/// One weak conjugacy class: a valid representative and its canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumeratedClass {
    pub representative: MetacyclicDataSet,
    pub canonical: MetacyclicDataSet,
}

/// All classes of genus `g` for fixed parameters, sorted by canonical form.
/// `shuffle` permutes the generation order; the output does not depend on it.
pub fn enumerate_classes(g: u64, p: &GroupParams, shuffle: Option<u64>) -> Vec<EnumeratedClass> {
    if g < 2 || p.order() > hurwitz_bound(g) {
        return Vec::new();
    }
    let classes = class_table(p);
    let orders: Vec<u64> = classes.iter().map(|c| c.order).collect();
    let mut jobs: Vec<(u64, Vec<usize>)> = Vec::new();
    for sig in signatures(g, p.order(), &orders) {
        for multiset in class_multisets(&classes, &sig.periods) {
            jobs.push((sig.g0, multiset));
        }
    }
    if let Some(seed) = shuffle {
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        jobs.shuffle(&mut rng);
    }
    let mut found: Vec<EnumeratedClass> = jobs
        .par_iter()
        .filter_map(|(g0, multiset)| {
            let chosen: Vec<&ClassInfo> = multiset.iter().map(|&i| &classes[i]).collect();
            find_representative(p, *g0, &chosen).map(|representative| EnumeratedClass {
                canonical: representative.canonical_form(),
                representative,
            })
        })
        .collect();
    found.sort_by(|a, b| a.canonical.cmp(&b.canonical));
    found.dedup_by(|a, b| a.canonical == b.canonical);
    found
}

/// Valid representatives of every class of genus `g` for fixed parameters.
pub fn enumerate_datasets(g: u64, p: &GroupParams) -> Vec<MetacyclicDataSet> {
    enumerate_classes(g, p, None)
        .into_iter()
        .map(|c| c.representative)
        .collect()
}

/// Every non-abelian parameter triple `(m, n, k)` with `mn <= bound`.
pub fn presentations(bound: u64) -> Vec<GroupParams> {
    let mut out = Vec::new();
    for n in 3..=bound / 2 {
        for m in 2..=bound / n {
            for k in units(n) {
                if k != 1 && pow_mod(k, m, n) == 1 {
                    out.push(GroupParams::new(m, n, k).expect("checked parameters"));
                }
            }
        }
    }
    out
}

/// Non-abelian parameter triples `(m, n, k)` with `mn <= bound`, one per
/// isomorphism class of group. Among presentations of the same group the one
/// with the largest cyclic normal factor is kept, then the least `k`; so
/// `Z7⋊4Z3` folds into `Z7⋊2Z3` and `Z5⋊-1Z6` into `Z15⋊4Z2`.
pub fn parameter_sweep(bound: u64) -> Vec<GroupParams> {
    let mut candidates = presentations(bound);
    candidates.sort_by_key(|p| (p.order(), std::cmp::Reverse(p.n()), p.k()));
    let mut kept: Vec<GroupParams> = Vec::new();
    for p in candidates {
        if !kept.iter().any(|q| q.is_isomorphic(&p)) {
            kept.push(p);
        }
    }
    kept.sort_by_key(|p| (p.n(), p.m(), p.k()));
    kept
}

/// Block key `(m, n, k)`.
pub type BlockKey = (u64, u64, u64);

/// Every nonempty block of genus `g`, keyed by `(m, n, k)`.
pub fn enumerate_all(g: u64) -> BTreeMap<BlockKey, Vec<EnumeratedClass>> {
    if g < 2 {
        return BTreeMap::new();
    }
    parameter_sweep(hurwitz_bound(g))
        .par_iter()
        .map(|p| ((p.m(), p.n(), p.k()), enumerate_classes(g, p, None)))
        .filter(|(_, v)| !v.is_empty())
        .collect()
}

/// Table block order: by group order, then `n`, then `k` descending so
/// that `-1` leads (matching the tabulated layout closely enough for diffs).
pub fn block_order(blocks: &BTreeMap<BlockKey, Vec<EnumeratedClass>>) -> Vec<BlockKey> {
    let mut keys: Vec<BlockKey> = blocks.keys().copied().collect();
    // within one order and n, the inverting (dihedral-type) block comes last
    keys.sort_by_key(|&(m, n, k)| (m * n, n, k == n - 1, std::cmp::Reverse(k)));
    keys
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub genus: u64,
    pub group: String,
    pub m: u64,
    pub n: u64,
    pub k: u64,
    pub g0: u64,
    pub dataset: String,
    pub canonical: String,
    pub df: String,
    pub dg: String,
    pub factors: String,
    pub dihedral: bool,
    pub quaternionic: bool,
}

impl TableRow {
    pub fn from_class(genus: u64, class: &EnumeratedClass, unicode: bool) -> Result<Self> {
        let d = &class.representative;
        let factors = derive_factors(d)?;
        let p = &d.params;
        Ok(TableRow {
            genus,
            group: p.label(unicode),
            m: p.m(),
            n: p.n(),
            k: p.k(),
            g0: d.g0,
            dataset: d.to_text(unicode, false),
            canonical: class.canonical.to_text(unicode, false),
            df: factors.df.to_table_text(),
            dg: factors.dg.to_table_text(),
            factors: factors.to_string(),
            dihedral: d.is_dihedral(),
            quaternionic: d.is_quaternionic(),
        })
    }
}

/// Rows of the classification table of genus `g`, block by block.
pub fn reproduce_table(g: u64, unicode: bool) -> Result<Vec<TableRow>> {
    let blocks = enumerate_all(g);
    let mut rows = Vec::new();
    for key in block_order(&blocks) {
        for class in &blocks[&key] {
            rows.push(TableRow::from_class(g, class, unicode)?);
        }
    }
    Ok(rows)
}

/// Parses `[D_G;D_F]`.
pub fn parse_factors(s: &str) -> Result<CyclicFactors> {
    let mut c = Cursor::new(s);
    c.expect('[')?;
    let dg = crate::cyclic::parse_cyclic(&mut c)?;
    c.expect(';')?;
    let df = crate::cyclic::parse_cyclic(&mut c)?;
    c.expect(']')?;
    c.finish()?;
    Ok(CyclicFactors { dg, df })
}

/// One transcribed row of a reference table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenRow {
    pub group: String,
    pub dataset: MetacyclicDataSet,
    pub factors: CyclicFactors,
}

const GOLDEN_3: &str = include_str!("../tables/genus3.csv");
const GOLDEN_5: &str = include_str!("../tables/genus5.csv");

/// The transcribed reference table for genus 3 or 5.
pub fn golden_rows(g: u64) -> Result<Vec<GoldenRow>> {
    let text = match g {
        3 => GOLDEN_3,
        5 => GOLDEN_5,
        _ => {
            return Err(Error::Precondition(format!(
                "no reference table for genus {g}"
            )))
        }
    };
    parse_golden(text)
}

pub fn parse_golden(text: &str) -> Result<Vec<GoldenRow>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::Parse {
            pos: 0,
            msg: e.to_string(),
        })?;
        let dataset: MetacyclicDataSet = record[1].parse()?;
        let factors = parse_factors(&record[2])?;
        rows.push(GoldenRow {
            group: record[0].to_string(),
            dataset,
            factors,
        });
    }
    Ok(rows)
}

/// Differences between the enumeration and a reference table.
#[derive(Clone, Debug, Default, Serialize)]
pub struct GoldenDiff {
    pub genus: u64,
    pub rows: usize,
    pub golden_rows: usize,
    /// Block sizes `(label, ours, reference)` wherever they differ.
    pub block_mismatches: Vec<(String, usize, usize)>,
    /// Reference rows with no equivalent enumerated class.
    pub missing: Vec<String>,
    /// Enumerated classes absent from the reference table.
    pub surplus: Vec<String>,
    /// Rows whose `[D_G;D_F]` differ: `(data set, ours, reference)`.
    pub factor_mismatches: Vec<(String, String, String)>,
    /// Reference rows whose printed representative fails validation although
    /// its class is realized; informational only.
    pub invalid_reference_rows: Vec<String>,
}

impl GoldenDiff {
    pub fn is_empty(&self) -> bool {
        self.block_mismatches.is_empty()
            && self.missing.is_empty()
            && self.surplus.is_empty()
            && self.factor_mismatches.is_empty()
    }
}

fn canonical_factors(f: &CyclicFactors) -> String {
    CyclicFactors {
        dg: f.dg.canonical(),
        df: f.df.canonical(),
    }
    .to_string()
}

/// Compares the enumeration of genus `g` with the transcribed reference table,
/// matching rows up to equivalence.
pub fn golden_diff(g: u64) -> Result<GoldenDiff> {
    let golden = golden_rows(g)?;
    let blocks = enumerate_all(g);
    let mut ours: BTreeMap<MetacyclicDataSet, (String, CyclicFactors)> = BTreeMap::new();
    let mut our_sizes: BTreeMap<String, usize> = BTreeMap::new();
    for key in block_order(&blocks) {
        for class in &blocks[&key] {
            let factors = derive_factors(&class.representative)?;
            let label = class.representative.params.label(false);
            *our_sizes.entry(label.clone()).or_default() += 1;
            ours.insert(
                class.canonical.clone(),
                (class.representative.to_string(), factors),
            );
        }
    }
    let mut diff = GoldenDiff {
        genus: g,
        rows: ours.len(),
        golden_rows: golden.len(),
        ..GoldenDiff::default()
    };
    let mut golden_sizes: BTreeMap<String, usize> = BTreeMap::new();
    let mut seen = BTreeSet::new();
    for row in &golden {
        *golden_sizes
            .entry(row.dataset.params.label(false))
            .or_default() += 1;
        if !row.dataset.validate().ok {
            diff.invalid_reference_rows.push(row.dataset.to_string());
        }
        let canonical = row.dataset.canonical_form();
        match ours.get(&canonical) {
            None => diff.missing.push(row.dataset.to_string()),
            Some((_, factors)) => {
                seen.insert(canonical);
                let mine = canonical_factors(factors);
                let theirs = canonical_factors(&row.factors);
                if mine != theirs {
                    diff.factor_mismatches
                        .push((row.dataset.to_string(), mine, theirs));
                }
            }
        }
    }
    for (canonical, (text, _)) in &ours {
        if !seen.contains(canonical) {
            diff.surplus.push(text.clone());
        }
    }
    let labels: BTreeSet<&String> = our_sizes.keys().chain(golden_sizes.keys()).collect();
    for label in labels {
        let a = our_sizes.get(label).copied().unwrap_or(0);
        let b = golden_sizes.get(label).copied().unwrap_or(0);
        if a != b {
            diff.block_mismatches.push((label.clone(), a, b));
        }
    }
    Ok(diff)
}

/// CSV with one row per class.
pub fn rows_to_csv(rows: &[TableRow]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record([
            "genus",
            "m",
            "n",
            "k",
            "g0",
            "dataset",
            "df",
            "dg",
            "dihedral",
            "quaternionic",
        ])
        .map_err(|e| Error::Invalid(e.to_string()))?;
    for r in rows {
        writer
            .write_record([
                r.genus.to_string(),
                r.m.to_string(),
                r.n.to_string(),
                r.k.to_string(),
                r.g0.to_string(),
                r.dataset.clone(),
                r.df.clone(),
                r.dg.clone(),
                r.dihedral.to_string(),
                r.quaternionic.to_string(),
            ])
            .map_err(|e| Error::Invalid(e.to_string()))?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| Error::Invalid(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signature_examples() {
        let sigs = signatures(3, 6, &[2, 3]);
        assert!(sigs.contains(&OrbifoldSignature::new(1, vec![3])));
        assert!(sigs.contains(&OrbifoldSignature::new(0, vec![2, 2, 2, 2, 3])));
        assert!(sigs.iter().all(|s| s.genus_for_order(6).unwrap() == 3));
    }

    #[test]
    fn block_examples() {
        let d6 = GroupParams::new(2, 3, 2).unwrap();
        assert_eq!(enumerate_datasets(3, &d6).len(), 2);
        let z12 = GroupParams::new(2, 12, 5).unwrap();
        assert_eq!(enumerate_datasets(3, &z12).len(), 4);
        let big = GroupParams::new(2, 200, 199).unwrap();
        assert!(enumerate_datasets(2, &big).is_empty());
    }

    #[test]
    fn sweep_merges_isomorphic_presentations() {
        let keys: Vec<(u64, u64, u64)> = parameter_sweep(21)
            .iter()
            .map(|p| (p.m(), p.n(), p.k()))
            .collect();
        assert!(keys.contains(&(3, 7, 2)));
        assert!(!keys.contains(&(3, 7, 4)));
        let keys: Vec<(u64, u64, u64)> = parameter_sweep(30)
            .iter()
            .map(|p| (p.m(), p.n(), p.k()))
            .collect();
        assert!(keys.contains(&(2, 15, 4)) && !keys.contains(&(6, 5, 4)));
        assert!(
            keys.contains(&(2, 8, 3)) && keys.contains(&(2, 8, 5)) && keys.contains(&(2, 8, 7))
        );
    }

    #[test]
    fn factors_parse() {
        let f = parse_factors("[(2,1;((1,2),4));(12,0;(1,12),(5,12),(1,2))]").unwrap();
        assert_eq!(
            f.to_string(),
            "[(2,1;((1,2),4));(12,0;(1,2),(1,12),(5,12))]"
        );
    }

    #[test]
    fn shuffled_generation_is_identical() {
        let p = GroupParams::new(2, 4, 3).unwrap();
        let a = enumerate_classes(5, &p, None);
        let b = enumerate_classes(5, &p, Some(7));
        assert_eq!(a, b);
    }
}
