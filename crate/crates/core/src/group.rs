//! Exact arithmetic in the split metacyclic group
//! `Z_n ⋊_k Z_m = <F, G | F^n = G^m = 1, G^-1 F G = F^k>`.
//!
//! Elements are kept in the normal form `G^b F^a`. Moving `F^a` past `G^b`
//! uses `F^a G^b = G^b F^(a k^b)`, which gives the multiplication law
//!
//! ```text
//! (G^b1 F^a1)(G^b2 F^a2) = G^(b1+b2) F^(a1 k^b2 + a2)
//! ```
//!
//! Everything here is brute force over the `m*n` elements; the groups that
//! act on surfaces of small genus have at most a few hundred elements.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, mul_mod, pow_mod};
use crate::error::{Error, Result};

/// Parameters `(m, n, k)` of `Z_n ⋊_k Z_m`: `n = |F|`, `m = |G|`, `k` the twist factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupParams {
    m: u64,
    n: u64,
    k: u64,
    k_powers: Vec<u64>,
}

/// The element `G^b F^a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Element {
    /// Exponent of `G`, in `[0, m)`.
    pub b: u64,
    /// Exponent of `F`, in `[0, n)`.
    pub a: u64,
}

impl Element {
    pub const IDENTITY: Element = Element { b: 0, a: 0 };

    pub fn new(b: u64, a: u64) -> Self {
        Element { b, a }
    }

    pub fn is_identity(&self) -> bool {
        self.b == 0 && self.a == 0
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G^{}F^{}", self.b, self.a)
    }
}

impl GroupParams {
    /// Non-abelian parameters: `m, n >= 2`, `gcd(k, n) = 1`, `k^m = 1 (mod n)` and `k != 1`.
    pub fn new(m: u64, n: u64, k: u64) -> Result<Self> {
        let params = Self::allowing_abelian(m, n, k)?;
        if m < 2 || n < 2 {
            return Err(invalid(m, n, k, "m and n must both be at least 2"));
        }
        if params.k == 1 {
            return Err(invalid(m, n, k, "twist factor 1 gives an abelian group"));
        }
        Ok(params)
    }

    /// Like [`GroupParams::new`] but also accepts `m = 1` and `k = 1`.
    ///
    /// Used by the oracle to model a cyclic group `Z_n` as `Z_n ⋊_1 Z_1`.
    pub fn allowing_abelian(m: u64, n: u64, k: u64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(invalid(m, n, k, "m and n must be positive"));
        }
        let k = k % n;
        let k = if n == 1 { 0 } else { k };
        if n > 1 && gcd(k, n) != 1 {
            return Err(invalid(m, n, k, "k is not coprime to n"));
        }
        if n > 1 && pow_mod(k, m, n) != 1 {
            return Err(invalid(m, n, k, "k^m is not 1 modulo n"));
        }
        let k_powers = (0..m).map(|b| pow_mod(k, b, n)).collect();
        Ok(GroupParams { m, n, k, k_powers })
    }

    /// The cyclic group `Z_n`, generated by `F`.
    pub fn cyclic(n: u64) -> Result<Self> {
        Self::allowing_abelian(1, n, 1)
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// `|H| = m n`.
    pub fn order(&self) -> u64 {
        self.m * self.n
    }

    pub fn is_abelian(&self) -> bool {
        self.n == 1 || self.k == 1
    }

    /// `d = gcd(n, k - 1)`; the commutator subgroup is `<F^d>`.
    pub fn d(&self) -> u64 {
        gcd(self.n, (self.k + self.n - 1) % self.n)
    }

    /// `k^e mod n` for any exponent.
    pub fn k_pow(&self, e: u64) -> u64 {
        self.k_powers[(e % self.m) as usize]
    }

    pub fn f(&self) -> Element {
        Element::new(0, 1 % self.n)
    }

    pub fn g(&self) -> Element {
        Element::new(1 % self.m, 0)
    }

    /// `G^b F^a` with both exponents reduced.
    pub fn element(&self, b: i64, a: i64) -> Element {
        Element::new(
            b.rem_euclid(self.m as i64) as u64,
            a.rem_euclid(self.n as i64) as u64,
        )
    }

    pub fn contains(&self, x: Element) -> bool {
        x.b < self.m && x.a < self.n
    }

    /// All elements in lexicographic `(b, a)` order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.m).flat_map(move |b| (0..self.n).map(move |a| Element::new(b, a)))
    }

    /// Dense index `b n + a`, matching the order of [`GroupParams::elements`].
    pub fn index(&self, x: Element) -> usize {
        (x.b * self.n + x.a) as usize
    }

    pub fn from_index(&self, i: usize) -> Element {
        let i = i as u64;
        Element::new(i / self.n, i % self.n)
    }

    pub fn mul(&self, x: Element, y: Element) -> Element {
        Element::new(
            (x.b + y.b) % self.m,
            (mul_mod(x.a, self.k_pow(y.b), self.n) + y.a) % self.n,
        )
    }

    /// `(G^b F^a)^-1 = G^-b F^(-a k^-b)`.
    pub fn inv(&self, x: Element) -> Element {
        let b = (self.m - x.b) % self.m;
        let a = (self.n - mul_mod(x.a, self.k_pow(b), self.n)) % self.n;
        Element::new(b, a)
    }

    pub fn pow(&self, x: Element, e: u64) -> Element {
        let mut result = Element::IDENTITY;
        let mut base = x;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// Product of a word, left to right.
    pub fn product<'a, I: IntoIterator<Item = &'a Element>>(&self, word: I) -> Element {
        word.into_iter()
            .fold(Element::IDENTITY, |acc, &x| self.mul(acc, x))
    }

    /// `z^-1 x z`.
    pub fn conjugate_by(&self, x: Element, z: Element) -> Element {
        self.mul(self.mul(self.inv(z), x), z)
    }

    /// `[x, y] = x^-1 y^-1 x y`.
    pub fn commutator(&self, x: Element, y: Element) -> Element {
        let xy = self.mul(x, y);
        self.mul(self.mul(self.inv(x), self.inv(y)), xy)
    }

    /// Order of `x` by repeated multiplication.
    pub fn order_of(&self, x: Element) -> u64 {
        let mut acc = x;
        let mut t = 1;
        while !acc.is_identity() {
            acc = self.mul(acc, x);
            t += 1;
        }
        t
    }

    pub fn is_conjugate(&self, x: Element, y: Element) -> bool {
        self.elements().any(|z| self.conjugate_by(x, z) == y)
    }

    /// The conjugacy class of `x`, sorted.
    pub fn conjugacy_class(&self, x: Element) -> Vec<Element> {
        let mut seen = vec![false; self.order() as usize];
        let mut class = Vec::new();
        for z in self.elements() {
            let y = self.conjugate_by(x, z);
            let i = self.index(y);
            if !seen[i] {
                seen[i] = true;
                class.push(y);
            }
        }
        class.sort();
        class
    }

    /// Least element of the conjugacy class of `x`.
    pub fn class_representative(&self, x: Element) -> Element {
        self.elements()
            .map(|z| self.conjugate_by(x, z))
            .min()
            .expect("group is nonempty")
    }

    /// All conjugacy classes, each sorted, ordered by their least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<Element>> {
        let mut seen = vec![false; self.order() as usize];
        let mut classes = Vec::new();
        for x in self.elements() {
            if seen[self.index(x)] {
                continue;
            }
            let class = self.conjugacy_class(x);
            for &y in &class {
                seen[self.index(y)] = true;
            }
            classes.push(class);
        }
        classes
    }

    pub fn centralizer_order(&self, x: Element) -> u64 {
        self.elements()
            .filter(|&z| self.mul(z, x) == self.mul(x, z))
            .count() as u64
    }

    /// Subgroup generated by `gens`, by breadth-first product saturation. Sorted.
    pub fn closure(&self, gens: &[Element]) -> Vec<Element> {
        let mut seen = vec![false; self.order() as usize];
        let mut queue = VecDeque::new();
        seen[self.index(Element::IDENTITY)] = true;
        queue.push_back(Element::IDENTITY);
        let mut members = vec![Element::IDENTITY];
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                let i = self.index(y);
                if !seen[i] {
                    seen[i] = true;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort();
        members
    }

    /// Order of the subgroup generated by `gens`.
    pub fn closure_order(&self, gens: &[Element]) -> u64 {
        let mut seen = vec![false; self.order() as usize];
        let mut stack = vec![Element::IDENTITY];
        seen[self.index(Element::IDENTITY)] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                let i = self.index(y);
                if !seen[i] {
                    seen[i] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count
    }

    pub fn generates_whole_group(&self, gens: &[Element]) -> bool {
        self.closure_order(gens) == self.order()
    }

    /// Number of elements of each order, sorted by order.
    pub fn order_statistics(&self) -> Vec<(u64, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for x in self.elements() {
            *counts.entry(self.order_of(x)).or_insert(0usize) += 1;
        }
        counts.into_iter().collect()
    }

    /// Whether `other` presents the same abstract group.
    ///
    /// Looks for `f, g` in `other` with `|f| = n`, `g^m = 1`, `g^-1 f g = f^k`
    /// generating everything; such a pair defines a surjection from this
    /// group, which is a bijection when the orders agree.
    pub fn is_isomorphic(&self, other: &GroupParams) -> bool {
        if self.order() != other.order() || self.order_statistics() != other.order_statistics() {
            return false;
        }
        let fs: Vec<Element> = other
            .elements()
            .filter(|&x| other.order_of(x) == self.n)
            .collect();
        let gs: Vec<Element> = other
            .elements()
            .filter(|&x| other.pow(x, self.m).is_identity())
            .collect();
        fs.iter().any(|&f| {
            let twisted = other.pow(f, self.k);
            gs.iter().any(|&g| {
                other.conjugate_by(f, g) == twisted && other.generates_whole_group(&[f, g])
            })
        })
    }

    /// Parameters of the same abstract group obtained by replacing `G` with `G^u`.
    pub fn regenerated(&self, u: u64) -> Result<Self> {
        if gcd(u, self.m) != 1 {
            return Err(Error::NotAUnit { k: u, n: self.m });
        }
        Self::allowing_abelian(self.m, self.n, pow_mod(self.k, u, self.n))
    }

    /// Label in the style `Z3⋊-1Z2` (or ASCII `Z3x-1Z2`).
    pub fn label(&self, unicode: bool) -> String {
        let twist = if self.n > 2 && self.k == self.n - 1 {
            "-1".to_string()
        } else {
            self.k.to_string()
        };
        let sep = if unicode { "⋊" } else { "x" };
        format!("Z{}{}{}Z{}", self.n, sep, twist, self.m)
    }
}

fn invalid(m: u64, n: u64, k: u64, reason: &str) -> Error {
    Error::InvalidParams {
        m,
        n,
        k,
        reason: reason.to_string(),
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label(false))
    }
}
