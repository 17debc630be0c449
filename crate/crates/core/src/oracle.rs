//! Brute-force ground truth.
//!
//! Nothing here uses the data-set clauses: existence of an action is decided
//! by searching for a surjection from the orbifold fundamental group onto the
//! concrete group that sends each cone generator to an element of exactly the
//! cone order, and induced cyclic actions are read off a model of the surface
//! built from cosets of the cone-point stabilizers.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::lcm_all;
use crate::cyclic::{CyclicDataSet, Pair};
use crate::dataset::{genus_from_signature, MetacyclicDataSet};
use crate::error::{Error, Result};
use crate::group::{Element, GroupParams};

/// Default cap on relation checks for exhaustive hyperbolic-image searches.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "METACYCLIC_SEARCH_BUDGET";

pub fn budget_from_env() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbifoldSignature {
    pub g0: u64,
    pub periods: Vec<u64>,
}

impl OrbifoldSignature {
    pub fn new(g0: u64, periods: Vec<u64>) -> Self {
        OrbifoldSignature { g0, periods }
    }

    /// Same signature with periods sorted ascending.
    pub fn canonical(&self) -> Self {
        let mut periods = self.periods.clone();
        periods.sort_unstable();
        OrbifoldSignature {
            g0: self.g0,
            periods,
        }
    }

    /// Genus of a surface on which a group of the given order acts with this quotient.
    pub fn genus_for_order(&self, order: u64) -> Result<u64> {
        genus_from_signature(order as i64, self.g0, &self.periods)
    }
}

/// Images of the cone generators and of the handle generators
/// `α_1, β_1, ..., α_g0, β_g0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EpimorphismWitness {
    pub xi_images: Vec<Element>,
    pub hyperbolic_images: Vec<Element>,
}

impl EpimorphismWitness {
    pub fn new(xi_images: Vec<Element>, hyperbolic_images: Vec<Element>) -> Self {
        EpimorphismWitness {
            xi_images,
            hyperbolic_images,
        }
    }

    /// `Π ξ · Π [α_i, β_i]`.
    pub fn long_relation(&self, p: &GroupParams) -> Element {
        let mut acc = p.product(&self.xi_images);
        for pair in self.hyperbolic_images.chunks(2) {
            acc = p.mul(acc, p.commutator(pair[0], pair[1]));
        }
        acc
    }

    /// Checks exact torsion orders, the long relation and generation.
    pub fn verify(&self, p: &GroupParams, periods: &[u64]) -> bool {
        if self.xi_images.len() != periods.len() || !self.hyperbolic_images.len().is_multiple_of(2)
        {
            return false;
        }
        let orders_ok = self
            .xi_images
            .iter()
            .zip(periods)
            .all(|(&x, &q)| p.contains(x) && p.order_of(x) == q);
        let all: Vec<Element> = self
            .xi_images
            .iter()
            .chain(&self.hyperbolic_images)
            .copied()
            .collect();
        orders_ok && self.long_relation(p).is_identity() && p.generates_whole_group(&all)
    }
}

/// Searches for an order-preserving epimorphism with the cone generators sent
/// to `xi_images`. `Ok(None)` means no such epimorphism exists.
pub fn epi_exists_with_prescribed_torsion(
    sig: &OrbifoldSignature,
    p: &GroupParams,
    xi_images: &[Element],
    budget: u64,
) -> Result<Option<EpimorphismWitness>> {
    if xi_images.len() != sig.periods.len() {
        return Err(Error::Precondition(format!(
            "{} images for {} cone points",
            xi_images.len(),
            sig.periods.len()
        )));
    }
    let orders_ok = xi_images
        .iter()
        .zip(&sig.periods)
        .all(|(&x, &q)| p.contains(x) && p.order_of(x) == q);
    if !orders_ok {
        return Ok(None);
    }
    let product = p.product(xi_images);
    let handles = sig.g0 as usize;
    if handles == 0 {
        let ok = product.is_identity() && p.generates_whole_group(xi_images);
        return Ok(ok.then(|| EpimorphismWitness::new(xi_images.to_vec(), Vec::new())));
    }

    let order = p.order();
    let exhaustive_size = (order as f64).powi(2 * handles as i32);
    if exhaustive_size <= budget as f64 {
        return Ok(exhaustive_search(p, xi_images, product, handles));
    }

    // Restricted schedule: α_1 ↦ G, β_1 ↦ F, one more handle balances the relation.
    if (order * order) as f64 > budget as f64 {
        return Err(Error::SearchBudgetExceeded { budget });
    }
    if handles >= 2 {
        let partial = p.mul(product, p.commutator(p.g(), p.f()));
        let target = p.inv(partial);
        for x in p.elements() {
            for y in p.elements() {
                if p.commutator(x, y) == target {
                    let mut hyperbolic = vec![p.g(), p.f(), x, y];
                    hyperbolic.resize(2 * handles, Element::IDENTITY);
                    return Ok(Some(EpimorphismWitness::new(
                        xi_images.to_vec(),
                        hyperbolic,
                    )));
                }
            }
        }
    }
    let target = p.inv(product);
    let mut gens = xi_images.to_vec();
    gens.extend([Element::IDENTITY, Element::IDENTITY]);
    let len = gens.len();
    for x in p.elements() {
        for y in p.elements() {
            if p.commutator(x, y) != target {
                continue;
            }
            gens[len - 2] = x;
            gens[len - 1] = y;
            if p.generates_whole_group(&gens) {
                let mut hyperbolic = vec![x, y];
                hyperbolic.resize(2 * handles, Element::IDENTITY);
                return Ok(Some(EpimorphismWitness::new(
                    xi_images.to_vec(),
                    hyperbolic,
                )));
            }
        }
    }
    Err(Error::SearchBudgetExceeded { budget })
}

/// Scans all `|H|^(2 g0)` handle images in lexicographic order, split by the
/// leading image across threads; the first hit in scan order wins.
fn exhaustive_search(
    p: &GroupParams,
    xi_images: &[Element],
    product: Element,
    handles: usize,
) -> Option<EpimorphismWitness> {
    let order = p.order() as usize;
    let slots = 2 * handles;
    let elements: Vec<Element> = p.elements().collect();
    (0..order).into_par_iter().find_map_first(|lead| {
        let mut digits = vec![0usize; slots];
        digits[0] = lead;
        loop {
            let hyperbolic: Vec<Element> = digits.iter().map(|&i| elements[i]).collect();
            let mut acc = product;
            for pair in hyperbolic.chunks(2) {
                acc = p.mul(acc, p.commutator(pair[0], pair[1]));
            }
            if acc.is_identity() {
                let mut gens = xi_images.to_vec();
                gens.extend(&hyperbolic);
                if p.generates_whole_group(&gens) {
                    return Some(EpimorphismWitness::new(xi_images.to_vec(), hyperbolic));
                }
            }
            // odometer over digits[1..]
            let mut pos = slots;
            loop {
                if pos == 1 {
                    return None;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < order {
                    break;
                }
                digits[pos] = 0;
            }
        }
    })
}

/// Harvey's existence criterion for a cyclic data set: integral genus and an
/// order-preserving surjection onto `Z_n` with `ξ_i ↦ F^((n/n_i) c_i)`.
pub fn harvey_check_cyclic(d: &CyclicDataSet) -> bool {
    if d.n < 2 || d.genus().is_err() {
        return false;
    }
    if d.pairs.is_empty() && d.r == 0 {
        return false;
    }
    let Ok(z) = GroupParams::cyclic(d.n) else {
        return false;
    };
    let mut images = Vec::new();
    for &Pair(c, q) in &d.pairs {
        if q == 0 || !d.n.is_multiple_of(q) {
            return false;
        }
        images.push(Element::new(0, (d.n / q * c) % d.n));
    }
    let sig = OrbifoldSignature::new(d.g0, d.pairs.iter().map(|p| p.period()).collect());
    matches!(
        epi_exists_with_prescribed_torsion(&sig, &z, &images, DEFAULT_BUDGET),
        Ok(Some(_))
    )
}

/// The action of the cyclic subgroup `<y>` on the surface described by `ds`,
/// computed on the coset model: the points over the i-th cone point are the
/// cosets `z <x_i>`, and `<y>` fixes `z p_i` through `<y> ∩ z <x_i> z^-1`.
///
/// Each cone point of the quotient by `<y>` gets the pair `(c, s)` where its
/// stabilizer has order `s` and its positive generator is `y^((|y|/s) c)`.
/// Free actions get `r = 1`.
pub fn induced_cyclic_action(ds: &MetacyclicDataSet, y: Element) -> Result<CyclicDataSet> {
    let p = &ds.params;
    let ord = p.order_of(y);
    // exponent lookup inside <y>
    let mut log: HashMap<Element, u64> = HashMap::new();
    let mut acc = Element::IDENTITY;
    for e in 0..ord {
        log.insert(acc, e);
        acc = p.mul(acc, y);
    }
    // each point over cone i is hit by n_i choices of z, each orbit has |y|/s points
    let mut counted: BTreeMap<(u64, u64), u64> = BTreeMap::new();
    for t in &ds.triples {
        let x = t.image(p);
        let ni = p.order_of(x);
        let mut local: BTreeMap<(u64, u64), u64> = BTreeMap::new();
        for z in p.elements() {
            let w = p.mul(p.mul(z, x), p.inv(z));
            let mut power = w;
            let mut j = 1;
            while !log.contains_key(&power) {
                power = p.mul(power, w);
                j += 1;
            }
            let s = ni / j;
            if s > 1 {
                let c = log[&power] / (ord / s);
                *local.entry((c, s)).or_default() += 1;
            }
        }
        for ((c, s), count) in local {
            let orbits_times = ni * (ord / s);
            if count % orbits_times != 0 {
                return Err(Error::NonIntegralMultiplicity { u: c, order: s });
            }
            *counted.entry((c, s)).or_default() += count / orbits_times;
        }
    }
    let expanded: Vec<(u64, u64)> = counted
        .into_iter()
        .flat_map(|((c, s), count)| std::iter::repeat_n((c, s), count as usize))
        .collect();
    let genus = ds.genus()?;
    let g0 = quotient_genus(genus, ord, expanded.iter().map(|&(_, s)| s))?;
    if expanded.is_empty() {
        return Ok(CyclicDataSet::free(ord, g0, 1));
    }
    Ok(CyclicDataSet::new(ord, g0, 0, expanded))
}

/// Quotient genus `g0` from `2g - 2 = n (2 g0 - 2 + Σ (1 - 1/n_i))`.
pub(crate) fn quotient_genus(
    genus: u64,
    n: u64,
    periods: impl Iterator<Item = u64>,
) -> Result<u64> {
    // 2 g0 = (2g - 2)/n + 2 - Σ (1 - 1/n_i), multiplied through by L = lcm(n, periods)
    let periods: Vec<u64> = periods.collect();
    let l = lcm_all(periods.iter().copied().chain([n])) as i64;
    let mut twice_g0_l = (2 * genus as i64 - 2) * (l / n as i64) + 2 * l;
    for &q in &periods {
        twice_g0_l -= l - l / q as i64;
    }
    if twice_g0_l < 0 || twice_g0_l % (2 * l) != 0 {
        return Err(Error::NonIntegralGenus {
            detail: format!("quotient of genus {genus} by order {n} with periods {periods:?}"),
        });
    }
    Ok((twice_g0_l / (2 * l)) as u64)
}

/// Number of points of the surface fixed by `y`, counted on the coset model.
pub fn fixed_point_count(ds: &MetacyclicDataSet, y: Element) -> u64 {
    let p = &ds.params;
    if y.is_identity() {
        return 0;
    }
    let mut total = 0;
    for t in &ds.triples {
        let x = t.image(p);
        let ni = p.order_of(x);
        let hits = p
            .elements()
            .filter(|&z| {
                let w = p.mul(p.mul(z, x), p.inv(z));
                let mut acc = Element::IDENTITY;
                (0..ni).any(|_| {
                    acc = p.mul(acc, w);
                    acc == y
                })
            })
            .count() as u64;
        total += hits / ni;
    }
    total
}

/// Outcome of comparing the clause validator with the brute-force search.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CrossReport {
    pub group: String,
    pub genus: u64,
    pub candidates: u64,
    pub valid: u64,
    /// Equivalence classes found by the oracle.
    pub oracle_classes: usize,
    /// Classes produced by the enumerator.
    pub enumerated_classes: usize,
    pub inconclusive: u64,
    pub disagreements: Vec<String>,
}

impl CrossReport {
    pub fn agrees(&self) -> bool {
        self.disagreements.is_empty() && self.inconclusive == 0
    }
}

/// Checks the validator against the oracle on every tuple of cone images
/// (with every ordering of every admissible signature) for genus `g`.
pub fn cross_validate(g: u64, p: &GroupParams, budget: u64) -> CrossReport {
    let mut report = CrossReport {
        group: p.label(false),
        genus: g,
        ..CrossReport::default()
    };
    let by_order = elements_by_order(p);
    let orders: Vec<u64> = by_order.keys().copied().collect();
    let mut oracle_classes = std::collections::BTreeSet::new();
    for sig in crate::enumerate::signatures(g, p.order(), &orders) {
        for periods in distinct_permutations(&sig.periods) {
            let pools: Vec<&Vec<Element>> = periods.iter().map(|q| &by_order[q]).collect();
            let tuples = cartesian(&pools);
            let ordered_sig = OrbifoldSignature::new(sig.g0, periods.clone());
            let results: Vec<(bool, Result<Option<EpimorphismWitness>>, MetacyclicDataSet)> =
                tuples
                    .par_iter()
                    .map(|images| {
                        let ds = MetacyclicDataSet::from_images(p.clone(), sig.g0, images);
                        let verdict = ds.validate().ok;
                        let oracle =
                            epi_exists_with_prescribed_torsion(&ordered_sig, p, images, budget);
                        (verdict, oracle, ds)
                    })
                    .collect();
            for (verdict, oracle, ds) in results {
                report.candidates += 1;
                match oracle {
                    Ok(found) => {
                        if let Some(w) = &found {
                            if !w.verify(p, &periods) {
                                report
                                    .disagreements
                                    .push(format!("{ds}: witness fails to verify"));
                            }
                            oracle_classes.insert(ds.canonical_form());
                            report.valid += 1;
                        }
                        if found.is_some() != verdict {
                            report.disagreements.push(format!(
                                "{ds}: validator says {verdict}, oracle says {}",
                                found.is_some()
                            ));
                        }
                    }
                    Err(_) => report.inconclusive += 1,
                }
            }
        }
    }
    let enumerated = crate::enumerate::enumerate_datasets(g, p);
    let enumerated_set: std::collections::BTreeSet<MetacyclicDataSet> =
        enumerated.iter().map(|d| d.canonical_form()).collect();
    report.oracle_classes = oracle_classes.len();
    report.enumerated_classes = enumerated_set.len();
    if enumerated_set != oracle_classes {
        for d in enumerated_set.symmetric_difference(&oracle_classes) {
            report
                .disagreements
                .push(format!("class {d} found by only one side"));
        }
    }
    report
}

pub(crate) fn elements_by_order(p: &GroupParams) -> BTreeMap<u64, Vec<Element>> {
    let mut out: BTreeMap<u64, Vec<Element>> = BTreeMap::new();
    for x in p.elements() {
        out.entry(p.order_of(x)).or_default().push(x);
    }
    out
}

fn cartesian(pools: &[&Vec<Element>]) -> Vec<Vec<Element>> {
    let mut out: Vec<Vec<Element>> = vec![Vec::new()];
    for pool in pools {
        let mut next = Vec::with_capacity(out.len() * pool.len());
        for prefix in &out {
            for &x in pool.iter() {
                let mut t = prefix.clone();
                t.push(x);
                next.push(t);
            }
        }
        out = next;
    }
    out
}

fn distinct_permutations(items: &[u64]) -> Vec<Vec<u64>> {
    let mut sorted = items.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    // next lexicographic permutation
    loop {
        let Some(i) = (1..sorted.len()).rev().find(|&i| sorted[i - 1] < sorted[i]) else {
            return out;
        };
        let j = (i..sorted.len())
            .rev()
            .find(|&j| sorted[j] > sorted[i - 1])
            .unwrap();
        sorted.swap(i - 1, j);
        sorted[i..].reverse();
        out.push(sorted.clone());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d6() -> GroupParams {
        GroupParams::new(2, 3, 2).unwrap()
    }

    #[test]
    fn torus_quotient_with_one_cone_point() {
        let p = d6();
        let sig = OrbifoldSignature::new(1, vec![3]);
        let w = epi_exists_with_prescribed_torsion(&sig, &p, &[p.f()], DEFAULT_BUDGET)
            .unwrap()
            .unwrap();
        assert!(w.verify(&p, &[3]));
    }

    #[test]
    fn two_involutions_cannot_give_d6() {
        let p = d6();
        let sig = OrbifoldSignature::new(0, vec![2, 2]);
        for x in p.elements().filter(|&x| p.order_of(x) == 2) {
            for y in p.elements().filter(|&y| p.order_of(y) == 2) {
                let found =
                    epi_exists_with_prescribed_torsion(&sig, &p, &[x, y], DEFAULT_BUDGET).unwrap();
                assert!(found.is_none());
            }
        }
    }

    #[test]
    fn genus_two_quotient_without_cone_points() {
        let p = GroupParams::new(2, 5, 4).unwrap();
        let sig = OrbifoldSignature::new(2, vec![]);
        let w = epi_exists_with_prescribed_torsion(&sig, &p, &[], 10_000)
            .unwrap()
            .unwrap();
        assert!(w.verify(&p, &[]));
    }

    #[test]
    fn harvey_examples() {
        assert!(harvey_check_cyclic(&"(3,1;(1,3),(2,3))".parse().unwrap()));
        assert!(!harvey_check_cyclic(&"(4,0;(1,4),(1,4))".parse().unwrap()));
        assert!(harvey_check_cyclic(
            &"(7,0;(1,7),(2,7),(4,7))".parse().unwrap()
        ));
        assert!(harvey_check_cyclic(&"(2,2,1;)".parse().unwrap()));
    }

    #[test]
    fn permutations_are_distinct() {
        assert_eq!(distinct_permutations(&[2, 2, 3]).len(), 3);
        assert_eq!(distinct_permutations(&[]).len(), 1);
        assert_eq!(distinct_permutations(&[2, 3, 4]).len(), 6);
    }

    #[test]
    fn coset_model_matches_worked_example() {
        let ds: MetacyclicDataSet = "((4·4,-1),1;[(0,1),(1,2),2])".parse().unwrap();
        let df = induced_cyclic_action(&ds, ds.params.f()).unwrap();
        assert_eq!(df.to_table_text(), "(4,1;((1,2),4))");
        let dg = induced_cyclic_action(&ds, ds.params.g()).unwrap();
        assert_eq!(dg.to_table_text(), "(4,2,1;)");
    }
}
