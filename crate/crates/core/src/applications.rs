//! Decision procedures built on the classification: dihedral partners,
//! lifting cyclic actions through cyclic covers, and the polygon model of
//! irreducible Type 1 actions.

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{gcd, lcm_all, mod_inverse, mul_mod, mult_order, units};
use crate::cyclic::{CyclicDataSet, Pair};
use crate::dataset::MetacyclicDataSet;
use crate::derive::derive_df;
use crate::error::{Error, Result};
use crate::group::{Element, GroupParams};

fn require_valid_cyclic(d: &CyclicDataSet) -> Result<u64> {
    let report = d.validate();
    if !report.ok {
        return Err(Error::Precondition(format!(
            "{d} is not a valid cyclic data set"
        )));
    }
    d.genus()
}

fn checked_witness(d: MetacyclicDataSet) -> Result<MetacyclicDataSet> {
    let report = d.validate();
    if report.ok {
        Ok(d)
    } else {
        Err(Error::WitnessInvalid(format!(
            "{d} fails clauses {}",
            report.failed_clauses().join(", ")
        )))
    }
}

/// Free cyclic data sets carry a rotation residue that the metacyclic data
/// set does not record, so they are compared by degree and quotient genus.
pub fn same_cyclic_action(a: &CyclicDataSet, b: &CyclicDataSet) -> bool {
    if a.is_free() && b.is_free() {
        return a.n == b.n && a.g0 == b.g0;
    }
    a.canonical() == b.canonical()
}

/// One pair out of each inverse couple `{(c, n_i), (-c, n_i)}`, or `None`
/// when the pairs do not split that way.
fn inverse_pair_representatives(d: &CyclicDataSet) -> Option<Vec<Pair>> {
    if !d.is_inverse_paired() {
        return None;
    }
    let mut out = Vec::new();
    for (pair, count) in d.compact_form() {
        let Pair(c, p) = pair;
        let partner = (p - c) % p;
        if partner == c {
            out.extend(std::iter::repeat_n(pair, count / 2));
        } else if c < partner {
            out.extend(std::iter::repeat_n(pair, count));
        }
    }
    Some(out)
}

/// The dihedral data set whose normal factor is `df`, if there is one.
///
/// An involution commuting with `F` up to inversion exists exactly when the
/// pairs of `df` come in inverse couples. The witness lets the involution
/// act on the quotient as a hyperelliptic involution swapping each couple,
/// so its `2 g0 + 2` fixed points become the reflections of the data set.
pub fn dihedral_partner_exists(df: &CyclicDataSet) -> Result<Option<MetacyclicDataSet>> {
    require_valid_cyclic(df)?;
    let Some(reps) = inverse_pair_representatives(df) else {
        return Ok(None);
    };
    let n = df.n;
    if n < 3 {
        return Err(Error::Precondition("a dihedral group needs n >= 3".into()));
    }
    let p = GroupParams::new(2, n, n - 1)?;
    let sum = reps
        .iter()
        .fold(0u64, |acc, &Pair(c, q)| (acc + c * (n / q)) % n);
    let t = 2 * df.g0 + 2;
    let g = p.g();
    let mut images: Vec<Element> = std::iter::repeat_n(g, (t - 2) as usize).collect();
    if df.g0 == 0 {
        images.push(g);
        images.push(p.element(1, -(sum as i64)));
    } else {
        images.push(p.element(1, 1));
        images.push(p.element(1, 1 - sum as i64));
    }
    images.extend(
        reps.iter()
            .map(|&Pair(c, q)| p.element(0, (c * (n / q)) as i64)),
    );
    let witness = checked_witness(MetacyclicDataSet::from_images(p, 0, &images))?;
    let back = derive_df(&witness)?;
    if !same_cyclic_action(&back, df) {
        return Err(Error::WitnessInvalid(format!(
            "{witness} induces {back}, expected {df}"
        )));
    }
    Ok(Some(witness))
}

/// Lift of an involution with data set `dg` to a dihedral action through the
/// `n`-sheeted cyclic cover, as a data set of genus `n (g - 1) + 1`.
pub fn involution_lifts_dihedrally(dg: &CyclicDataSet, n: u64) -> Result<MetacyclicDataSet> {
    require_valid_cyclic(dg)?;
    if dg.n != 2 {
        return Err(Error::Precondition(format!("{dg} does not have degree 2")));
    }
    if n < 3 {
        return Err(Error::Precondition(
            "cover degree must be at least 3".into(),
        ));
    }
    let p = GroupParams::new(2, n, n - 1)?;
    let t = dg.pairs.len();
    let g = p.g();
    let images: Vec<Element> = if dg.is_free() || dg.g0 >= 1 {
        vec![g; t]
    } else {
        // a sphere quotient has t >= 4 here since the genus is at least 2
        let mut v = vec![g; t - 2];
        v.extend([p.element(1, 1), p.element(1, 1)]);
        v
    };
    checked_witness(MetacyclicDataSet::from_images(p, dg.g0, &images))
}

/// A way for an automorphism of the three-pointed sphere to lift.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftOption {
    pub k: u64,
    pub m: u64,
    /// `permutation[i]` is the cone point that cone point `i` is sent to.
    pub permutation: Vec<usize>,
    pub witness: MetacyclicDataSet,
}

/// All `(k, m)` for which an automorphism of order `m` of the quotient
/// sphere lifts so that `F` and the lift generate `Z_n ⋊_k Z_m`.
///
/// `m = 2` swaps two cone points of order `n` whose rotation data differ by
/// the factor `k` and fixes the third; `m = 3` cycles three cone points of
/// order `n`.
pub fn irreducible_lift_check(df: &CyclicDataSet) -> Result<Vec<LiftOption>> {
    require_valid_cyclic(df)?;
    if df.g0 != 0 || df.pairs.len() != 3 {
        return Err(Error::Precondition(format!(
            "{df} is not a sphere with three cone points"
        )));
    }
    let n = df.n;
    let pairs = &df.pairs;
    let mut out: Vec<LiftOption> = Vec::new();
    let mut push = |option: LiftOption| {
        if !out
            .iter()
            .any(|o| o.k == option.k && o.m == option.m && o.permutation == option.permutation)
        {
            out.push(option);
        }
    };
    for k in units(n).into_iter().filter(|&k| k != 1) {
        if mul_mod(k, k, n) == 1 {
            for fixed in 0..3 {
                let (i, j) = match fixed {
                    0 => (1, 2),
                    1 => (0, 2),
                    _ => (0, 1),
                };
                for (a, b) in [(i, j), (j, i)] {
                    let (Pair(ca, pa), Pair(cb, pb)) = (pairs[a], pairs[b]);
                    if pa == n && pb == n && mul_mod(ca, k, n) == cb {
                        let p = GroupParams::new(2, n, k)?;
                        let images = [p.g(), p.element(1, -(ca as i64)), p.element(0, ca as i64)];
                        let witness =
                            checked_witness(MetacyclicDataSet::from_images(p, 0, &images))?;
                        let mut permutation = vec![0, 1, 2];
                        permutation[a] = b;
                        permutation[b] = a;
                        push(LiftOption {
                            k,
                            m: 2,
                            permutation,
                            witness,
                        });
                    }
                }
            }
        }
        if mul_mod(mul_mod(k, k, n), k, n) == 1 && pairs.iter().all(|q| q.period() == n) {
            for start in 0..3 {
                let c = pairs[start].c();
                let next = (0..3).find(|&x| x != start && pairs[x].c() == mul_mod(c, k, n));
                let Some(next) = next else { continue };
                let last = 3 - start - next;
                if pairs[last].c() != mul_mod(mul_mod(c, k, n), k, n) {
                    continue;
                }
                let p = GroupParams::new(3, n, k)?;
                let images = [p.g(), p.element(2, -(c as i64)), p.element(0, c as i64)];
                let witness = checked_witness(MetacyclicDataSet::from_images(p, 0, &images))?;
                let mut permutation = vec![0; 3];
                permutation[start] = next;
                permutation[next] = last;
                permutation[last] = start;
                push(LiftOption {
                    k,
                    m: 3,
                    permutation,
                    witness,
                });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// A lift was constructed.
    Witness,
    /// The whole coefficient range was searched without success; the
    /// criterion is only sufficient, so this says nothing about liftability.
    FailsCriterion,
    /// The search space exceeds the budget.
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LiftCriterion {
    /// Some cone point of the quotient has order `m`.
    OrderMConePoint,
    /// No cone point has order `m`.
    NoOrderMConePoint,
    /// Prime `n` with `|k| = m`, using the closed-form coefficients.
    PrimeShortcut,
}

#[derive(Clone, Debug, Serialize)]
pub struct LiftCheck {
    pub verdict: Verdict,
    pub criterion: LiftCriterion,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<MetacyclicDataSet>,
}

/// Cone points of `dg` as `(G`-exponent`, period)`, reordered so that a cone
/// point of order `m` (if any) comes last.
fn lift_layout(dg: &CyclicDataSet) -> (Vec<(u64, u64)>, bool) {
    let m = dg.n;
    let mut points: Vec<(u64, u64)> = dg
        .pairs
        .iter()
        .map(|q| (q.c() * (m / q.period()), q.period()))
        .collect();
    let has_full = match points.iter().position(|&(_, period)| period == m) {
        Some(i) => {
            let full = points.remove(i);
            points.push(full);
            true
        }
        None => false,
    };
    (points, has_full)
}

/// `Σ a_i (k^(b_i) - 1) Π_{s > i} k^(b_s)` over the first `a.len()` cone points.
fn relation_residue(p: &GroupParams, points: &[(u64, u64)], a: &[u64]) -> u64 {
    let n = p.n();
    let mut total = 0u64;
    for (i, &ai) in a.iter().enumerate() {
        let mut term = mul_mod(ai % n, (p.k_pow(points[i].0) + n - 1) % n, n);
        for s in (i + 1)..a.len() {
            term = mul_mod(term, p.k_pow(points[s].0), n);
        }
        total = (total + term) % n;
    }
    total
}

fn lift_images(p: &GroupParams, points: &[(u64, u64)], a: &[u64]) -> Vec<Element> {
    let n = p.n();
    points
        .iter()
        .enumerate()
        .map(|(i, &(b, _))| {
            let e = a
                .get(i)
                .map_or(0, |&ai| mul_mod(ai, (p.k_pow(b) + n - 1) % n, n));
            Element::new(b, e)
        })
        .collect()
}

/// Whether the coefficients satisfy the criterion for this layout.
fn coefficients_work(p: &GroupParams, points: &[(u64, u64)], has_full: bool, a: &[u64]) -> bool {
    if relation_residue(p, points, a) != 0 {
        return false;
    }
    let images = lift_images(p, points, a);
    if has_full {
        let n = p.n();
        let orders = images[..a.len()].iter().map(|x| n / gcd(x.a, n));
        lcm_all(orders) == n
    } else {
        p.generates_whole_group(&images)
    }
}

/// Closed-form coefficients for prime `n` and `|k| = m`:
/// `(0, ..., 0, 1, -(k^(b') - 1) k^(b) (k^(b) - 1)^-1)` on the last two
/// free coefficients, whose exponents are `b'` and `b`.
pub fn prime_order_shortcut(dg: &CyclicDataSet, n: u64, k: u64) -> Result<Option<Vec<u64>>> {
    let p = lift_params(dg, n, k)?;
    if crate::arith::divisors(n).len() != 2 || mult_order(k, n)? != dg.n {
        return Ok(None);
    }
    let (points, has_full) = lift_layout(dg);
    let len = if has_full {
        points.len() - 1
    } else {
        points.len()
    };
    if len < 2 {
        return Ok(None);
    }
    let (b1, b2) = (points[len - 2].0, points[len - 1].0);
    let (x1, x2) = ((p.k_pow(b1) + n - 1) % n, (p.k_pow(b2) + n - 1) % n);
    let Some(inv) = mod_inverse(x2, n) else {
        return Ok(None);
    };
    let last = (n - mul_mod(mul_mod(x1, p.k_pow(b2), n), inv, n)) % n;
    let mut a = vec![0; len];
    a[len - 2] = 1;
    a[len - 1] = last;
    Ok(Some(a))
}

fn lift_params(dg: &CyclicDataSet, n: u64, k: u64) -> Result<GroupParams> {
    let genus = require_valid_cyclic(dg)?;
    if dg.g0 != 0 {
        return Err(Error::Precondition(format!(
            "{dg} does not have a sphere quotient"
        )));
    }
    if genus < 2 {
        return Err(Error::Precondition(format!("{dg} has genus {genus} < 2")));
    }
    GroupParams::new(dg.n, n, k).map_err(|e| Error::Precondition(e.to_string()))
}

/// Sufficient criteria for an action with sphere quotient and data set `dg`
/// to lift through the `n`-sheeted cyclic cover to `Z_n ⋊_k Z_m`.
///
/// The coefficient search covers `[0, n)` for each free coefficient and is
/// skipped as inconclusive when that space exceeds `budget`.
pub fn sphere_quotient_lift_check(
    dg: &CyclicDataSet,
    n: u64,
    k: u64,
    budget: u64,
) -> Result<LiftCheck> {
    let p = lift_params(dg, n, k)?;
    let (points, has_full) = lift_layout(dg);
    let len = if has_full {
        points.len() - 1
    } else {
        points.len()
    };
    let criterion = if has_full {
        LiftCriterion::OrderMConePoint
    } else {
        LiftCriterion::NoOrderMConePoint
    };
    let found = |a: Vec<u64>, criterion: LiftCriterion| -> Result<LiftCheck> {
        let images = lift_images(&p, &points, &a);
        let witness = checked_witness(MetacyclicDataSet::from_images(p.clone(), 0, &images))?;
        Ok(LiftCheck {
            verdict: Verdict::Witness,
            criterion,
            coefficients: Some(a),
            witness: Some(witness),
        })
    };
    if let Some(a) = prime_order_shortcut(dg, n, k)? {
        if coefficients_work(&p, &points, has_full, &a) {
            return found(a, LiftCriterion::PrimeShortcut);
        }
    }
    let space = (n as f64).powi(len as i32);
    if space > budget as f64 {
        return Ok(LiftCheck {
            verdict: Verdict::Inconclusive,
            criterion,
            coefficients: None,
            witness: None,
        });
    }
    let rest = len.saturating_sub(1) as u32;
    let hit = (0..n.max(1)).into_par_iter().find_map_first(|lead| {
        if len == 0 {
            return coefficients_work(&p, &points, has_full, &[]).then(Vec::new);
        }
        let mut a = vec![0u64; len];
        a[0] = lead;
        for code in 0..n.pow(rest) {
            let mut x = code;
            for slot in a.iter_mut().skip(1) {
                *slot = x % n;
                x /= n;
            }
            if coefficients_work(&p, &points, has_full, &a) {
                return Some(a);
            }
        }
        None
    });
    match hit {
        Some(a) => found(a, criterion),
        None => Ok(LiftCheck {
            verdict: Verdict::FailsCriterion,
            criterion,
            coefficients: None,
            witness: None,
        }),
    }
}

/// A hyperbolic polygon whose rotation realizes an irreducible Type 1 action.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolygonRealization {
    /// Number of sides: `2n`, or `n` when a cone point of order 2 is present.
    pub sides: u64,
    /// `c3^-1 mod n`; the rotation angle is `2π angle_numerator / n`.
    pub angle_numerator: u64,
    pub q: u64,
    pub j: u64,
    /// `pairing[s]` is the side glued to side `s` (sides numbered from 0).
    pub pairing: Vec<usize>,
}

impl PolygonRealization {
    pub fn is_fixed_point_free_involution(&self) -> bool {
        self.pairing
            .iter()
            .enumerate()
            .all(|(s, &t)| t != s && t < self.pairing.len() && self.pairing[t] == s)
    }

    /// Genus of the closed surface obtained by gluing paired sides with
    /// opposite orientations, via `V - E + 1 = 2 - 2g`.
    pub fn glued_genus(&self) -> Option<u64> {
        if !self.is_fixed_point_free_involution() {
            return None;
        }
        let k = self.pairing.len();
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut root = x;
            while parent[root] != root {
                root = parent[root];
            }
            let mut y = x;
            while parent[y] != root {
                let next = parent[y];
                parent[y] = root;
                y = next;
            }
            root
        }
        // side s runs from vertex s to vertex s + 1
        for (s, &t) in self.pairing.iter().enumerate() {
            for (u, v) in [(s, (t + 1) % k), ((s + 1) % k, t)] {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                parent[ru] = rv;
            }
        }
        let vertices = (0..k).filter(|&v| find(&mut parent, v) == v).count() as i64;
        let euler = vertices - (k as i64) / 2 + 1;
        if euler > 2 || (2 - euler) % 2 != 0 {
            return None;
        }
        Some(((2 - euler) / 2) as u64)
    }
}

/// The polygon and side pairing realizing `D_F = (n,0;(c1,n1),(c2,n2),(c3,n))`,
/// where the pairs are read in canonical order with the last of period `n`.
pub fn polygon_word(df: &CyclicDataSet) -> Result<PolygonRealization> {
    let n = df.n;
    if df.g0 != 0 || df.pairs.len() != 3 || n < 3 {
        return Err(Error::NotType1(format!(
            "{df} is not a sphere quotient with three cone points"
        )));
    }
    let [Pair(_, n1), Pair(c2, n2), Pair(c3, n3)] = [df.pairs[0], df.pairs[1], df.pairs[2]];
    if n3 != n || n2 == 0 || !n.is_multiple_of(n2) || c2 >= n2 {
        return Err(Error::NotType1(format!(
            "{df} has no cone point of order {n}"
        )));
    }
    let inverse = mod_inverse(c3, n)
        .ok_or_else(|| Error::NotType1(format!("{c3} is not a unit modulo {n}")))?;
    let q = mul_mod(n / n2, inverse, n);
    let j = n2 - c2;
    let shift = mul_mod(q, j, n);
    let double = n1 != 2 && n2 != 2;
    let sides = if double { 2 * n } else { n };
    let mut pairing = vec![usize::MAX; sides as usize];
    let mut link = |a: u64, b: u64| {
        let (a, b) = (a as usize, b as usize);
        if pairing[a] == usize::MAX {
            pairing[a] = b;
        }
        if pairing[b] == usize::MAX {
            pairing[b] = a;
        }
    };
    for m in 0..n {
        // z in 1..=n
        let z = match (m + shift) % n {
            0 => n,
            z => z,
        };
        if double {
            // a_(2m+1) with a_(2z), shifted to 0-based labels
            link(2 * m, 2 * z - 1);
        } else {
            link(m, z - 1);
        }
    }
    Ok(PolygonRealization {
        sides,
        angle_numerator: inverse,
        q,
        j,
        pairing,
    })
}

/// Valid cyclic data sets of degree `n` and genus in `2..=max_genus`,
/// including free ones with every admissible rotation residue.
pub fn cyclic_data_sets(n: u64, max_genus: u64) -> Vec<CyclicDataSet> {
    let mut out = Vec::new();
    let divisors: Vec<u64> = crate::arith::divisors(n)
        .into_iter()
        .filter(|&d| d > 1)
        .collect();
    let labels: Vec<Pair> = divisors
        .iter()
        .flat_map(|&d| units(d).into_iter().map(move |c| Pair(c, d)))
        .collect();
    for g0 in 0..=max_genus {
        // each cone point adds at least (n/2) to 2g - 2
        let base = n as i64 * (2 * g0 as i64 - 2);
        if base > 2 * max_genus as i64 - 2 {
            break;
        }
        let mut current: Vec<Pair> = Vec::new();
        extend_cyclic(n, g0, base, max_genus, &labels, 0, &mut current, &mut out);
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn extend_cyclic(
    n: u64,
    g0: u64,
    chi: i64,
    max_genus: u64,
    labels: &[Pair],
    start: usize,
    current: &mut Vec<Pair>,
    out: &mut Vec<CyclicDataSet>,
) {
    // chi tracks 2g - 2
    if current.is_empty() {
        for r in units(n) {
            let d = CyclicDataSet::free(n, g0, r);
            if d.validate().ok && matches!(d.genus(), Ok(g) if (2..=max_genus).contains(&g)) {
                out.push(d);
            }
        }
    } else {
        let d = CyclicDataSet::new(n, g0, 0, current.iter().map(|q| (q.0, q.1)));
        if d.validate().ok && matches!(d.genus(), Ok(g) if (2..=max_genus).contains(&g)) {
            out.push(d);
        }
    }
    for (i, &label) in labels.iter().enumerate().skip(start) {
        let step = (n - n / label.period()) as i64;
        if chi + step > 2 * max_genus as i64 - 2 {
            continue;
        }
        current.push(label);
        extend_cyclic(n, g0, chi + step, max_genus, labels, i, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cds(s: &str) -> CyclicDataSet {
        s.parse().unwrap()
    }

    #[test]
    fn dihedral_partner_examples() {
        let w = dihedral_partner_exists(&cds("(3,1,0;(1,3),(2,3))"))
            .unwrap()
            .unwrap();
        assert_eq!(w.genus().unwrap(), 3);
        assert!(w.is_dihedral());
        assert!(dihedral_partner_exists(&cds("(7,0,0;(1,7),(2,7),(4,7))"))
            .unwrap()
            .is_none());
        let w = dihedral_partner_exists(&cds("(4,0,0;(1,4),(3,4),(1,4),(3,4))"))
            .unwrap()
            .unwrap();
        assert_eq!(derive_df(&w).unwrap(), cds("(4,0;(1,4),(3,4),(1,4),(3,4))"));
    }

    #[test]
    fn dihedral_partner_of_free_action() {
        let d = cds("(3,2,1;)");
        let w = dihedral_partner_exists(&d).unwrap().unwrap();
        assert!(same_cyclic_action(&derive_df(&w).unwrap(), &d));
    }

    #[test]
    fn involution_lift_examples() {
        let w = involution_lifts_dihedrally(&cds("(2,1,0;((1,2),4))"), 3).unwrap();
        assert_eq!(w.genus().unwrap(), 7);
        let w = involution_lifts_dihedrally(&cds("(2,2,1;)"), 4).unwrap();
        assert!(w.triples.is_empty());
        assert_eq!(w.genus().unwrap(), 4 * 2 + 1);
        let w = involution_lifts_dihedrally(&cds("(2,0,0;((1,2),6))"), 2);
        assert!(matches!(w, Err(Error::Precondition(_))));
        let w = involution_lifts_dihedrally(&cds("(2,0,0;((1,2),6))"), 3).unwrap();
        assert_eq!(w.genus().unwrap(), 3 + 1);
        assert_eq!(w.triples.len(), 6);
    }

    #[test]
    fn irreducible_lift_examples() {
        let opts = irreducible_lift_check(&cds("(8,0,0;(1,4),(1,8),(5,8))")).unwrap();
        assert!(opts.iter().any(|o| o.k == 5 && o.m == 2));
        for o in &opts {
            assert_eq!(
                derive_df(&o.witness).unwrap(),
                cds("(8,0;(1,4),(1,8),(5,8))")
            );
        }
        let opts = irreducible_lift_check(&cds("(7,0,0;(1,7),(2,7),(4,7))")).unwrap();
        assert!(opts.iter().any(|o| o.k == 2 && o.m == 3));
        assert!(irreducible_lift_check(&cds("(6,0,0;(1,2),(1,3),(1,6))"))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn sphere_lift_examples() {
        let r = sphere_quotient_lift_check(&cds("(2,0;((1,2),6))"), 3, 2, 1_000_000).unwrap();
        assert_eq!(r.verdict, Verdict::Witness);
        let w = r.witness.unwrap();
        assert_eq!(w.genus().unwrap(), 3 + 1);
        assert_eq!(w.params, GroupParams::new(2, 3, 2).unwrap());
        let r = sphere_quotient_lift_check(&cds("(2,0;((1,2),6))"), 5, 4, 1_000_000).unwrap();
        assert_eq!(r.verdict, Verdict::Witness);
        assert_eq!(r.criterion, LiftCriterion::PrimeShortcut);
        assert!(matches!(
            sphere_quotient_lift_check(&cds("(2,0;((1,2),6))"), 5, 1, 1_000_000),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn polygon_examples() {
        let p = polygon_word(&cds("(8,0;(1,4),(1,8),(5,8))")).unwrap();
        assert_eq!((p.sides, p.angle_numerator, p.q, p.j), (16, 5, 5, 7));
        assert!(p.is_fixed_point_free_involution());
        assert_eq!(p.glued_genus(), Some(3));
        let p = polygon_word(&cds("(8,0;(1,2),(1,8),(3,8))")).unwrap();
        assert_eq!(p.sides, 8);
        assert!(matches!(
            polygon_word(&cds("(3,1;(1,3),(2,3))")),
            Err(Error::NotType1(_))
        ));
    }

    #[test]
    fn cyclic_sets_are_valid() {
        let all = cyclic_data_sets(6, 3);
        assert!(all.iter().all(|d| d.validate().ok));
        assert!(all.contains(&cds("(6,0;(1,2),(1,2),(1,6),(5,6))")));
        assert!(cyclic_data_sets(3, 4).contains(&cds("(3,2,2;)")));
        assert!(cyclic_data_sets(2, 2).contains(&cds("(2,0;((1,2),6))")));
    }
}
