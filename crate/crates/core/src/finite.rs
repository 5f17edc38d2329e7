//! Finite nu-semirings given by explicit tables, with exhaustive axiom
//! validation, the bundled generators, JSON I/O and isomorphism search.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::kernel::{FiniteChain, NuElement, Supertropical, Trivial, ValueMonoid};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FiniteError {
    #[error("malformed semiring: {0}")]
    Structure(String),
    #[error("unknown element name `{0}`")]
    UnknownElement(String),
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("unknown generator `{0}` (expected superboolean, str-chain:n or str-trunc:n)")]
    UnknownGenerator(String),
}

/// A finite commutative nu-semiring `(R, T, G, ν)` with a designated prudent
/// subset. Elements are indices `0..n`; `G` is the image of `ν` without zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteNuSemiring {
    names: Vec<String>,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    nu: Vec<usize>,
    zero: usize,
    one: usize,
    tangible: Vec<bool>,
    prudent: Vec<bool>,
}

/// The table-level description used for JSON input and output.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SemiringJson {
    pub elements: Vec<String>,
    pub zero: String,
    pub one: String,
    pub tangible: Vec<String>,
    pub prudent: Vec<String>,
    pub add: Vec<Vec<String>>,
    pub mul: Vec<Vec<String>>,
    pub nu: BTreeMap<String, String>,
}

impl FiniteNuSemiring {
    /// Builds a semiring from index tables. Only shapes and ranges are checked
    /// here; see [`FiniteNuSemiring::validate`] for the axioms.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        names: Vec<String>,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        nu: Vec<usize>,
        zero: usize,
        one: usize,
        tangible: Vec<bool>,
        prudent: Vec<bool>,
    ) -> Result<Self, FiniteError> {
        let n = names.len();
        let bad = |m: &str| Err(FiniteError::Structure(m.to_string()));
        if n == 0 {
            return bad("no elements");
        }
        if names.iter().collect::<BTreeSet<_>>().len() != n {
            return bad("duplicate element names");
        }
        for t in [&add, &mul] {
            if t.len() != n || t.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
                return bad("operation table is not n x n over the elements");
            }
        }
        if nu.len() != n || nu.iter().any(|&x| x >= n) {
            return bad("nu table has wrong size");
        }
        if zero >= n || one >= n || tangible.len() != n || prudent.len() != n {
            return bad("zero, one, tangible or prudent out of range");
        }
        Ok(FiniteNuSemiring { names, add, mul, nu, zero, one, tangible, prudent })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn index_of(&self, name: &str) -> Result<usize, FiniteError> {
        self.names
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| FiniteError::UnknownElement(name.to_string()))
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn nu(&self, a: usize) -> usize {
        self.nu[a]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn e(&self) -> usize {
        self.add(self.one, self.one)
    }

    pub fn is_tangible(&self, a: usize) -> bool {
        self.tangible[a]
    }

    pub fn is_prudent(&self, a: usize) -> bool {
        self.prudent[a]
    }

    /// Membership in `G` (nonzero ghosts).
    pub fn is_ghost(&self, a: usize) -> bool {
        a != self.zero && self.nu[a] == a
    }

    /// Membership in `G_0 = G ∪ {0}`.
    pub fn in_g0(&self, a: usize) -> bool {
        a == self.zero || self.nu[a] == a
    }

    pub fn tangible_set(&self) -> BTreeSet<usize> {
        self.elements().filter(|&a| self.tangible[a]).collect()
    }

    pub fn prudent_set(&self) -> BTreeSet<usize> {
        self.elements().filter(|&a| self.prudent[a]).collect()
    }

    pub fn ghost_set(&self) -> BTreeSet<usize> {
        self.elements().filter(|&a| self.is_ghost(a)).collect()
    }

    pub fn g0_set(&self) -> BTreeSet<usize> {
        self.elements().filter(|&a| self.in_g0(a)).collect()
    }

    /// `a^k` for `k >= 1`.
    pub fn pow(&self, a: usize, k: usize) -> usize {
        assert!(k >= 1);
        (1..k).fold(a, |acc, _| self.mul(acc, a))
    }

    /// `a, a^2, ...` until the sequence repeats.
    pub fn powers(&self, a: usize) -> Vec<usize> {
        let mut seen = Vec::new();
        let mut x = a;
        while !seen.contains(&x) {
            seen.push(x);
            x = self.mul(x, a);
        }
        seen
    }

    pub fn units(&self) -> BTreeSet<usize> {
        self.elements()
            .filter(|&a| self.elements().any(|b| self.mul(a, b) == self.one))
            .collect()
    }

    pub fn is_unit(&self, a: usize) -> bool {
        self.elements().any(|b| self.mul(a, b) == self.one)
    }

    /// Ghost divisors: `a ∉ G_0` with some `b ∉ G_0` such that `ab ∈ G_0`.
    pub fn is_ghost_divisor(&self, a: usize) -> bool {
        !self.in_g0(a)
            && self
                .elements()
                .any(|b| !self.in_g0(b) && self.in_g0(self.mul(a, b)))
    }

    /// Whether some power of `a` lies in `G_0`.
    pub fn is_ghostpotent(&self, a: usize) -> bool {
        self.powers(a).into_iter().any(|x| self.in_g0(x))
    }

    /// Multiplicative closure of a set together with one.
    pub fn monoid_generated(&self, gens: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut out: BTreeSet<usize> = [self.one].into_iter().collect();
        let mut frontier: Vec<usize> = vec![self.one];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if out.insert(y) {
                    frontier.push(y);
                }
            }
        }
        out
    }

    pub fn is_tame(&self) -> bool {
        self.elements().all(|a| self.tame_at(a))
    }

    fn tame_at(&self, a: usize) -> bool {
        if self.tangible[a] || self.in_g0(a) {
            return true;
        }
        let t: Vec<usize> = self.tangible_set().into_iter().collect();
        t.iter()
            .any(|&c| t.iter().any(|&d| self.add(c, self.nu(d)) == a))
    }

    pub fn is_definite(&self) -> bool {
        self.elements().all(|a| self.tangible[a] != self.in_g0(a))
    }

    pub fn is_t_closed(&self) -> bool {
        let t = self.tangible_set();
        t.iter().all(|&a| t.iter().all(|&b| self.tangible[self.mul(a, b)]))
    }

    pub fn is_faithful(&self) -> bool {
        let t: Vec<usize> = self.tangible_set().into_iter().collect();
        t.iter().all(|&a| t.iter().all(|&b| a == b || self.nu(a) != self.nu(b)))
    }

    /// A ν-domain: T-closed and without ghost divisors.
    pub fn is_nu_domain(&self) -> bool {
        self.is_t_closed() && self.elements().all(|a| !self.is_ghost_divisor(a))
    }

    /// Exhaustive check of every axiom instance; records the first
    /// counterexample per axiom.
    pub fn validate(&self) -> ValidationReport {
        let mut failures: BTreeMap<String, String> = BTreeMap::new();
        let n = self.len();
        let nm = |a: usize| self.names[a].as_str();
        let mut fail = |axiom: &str, msg: String| {
            failures.entry(axiom.to_string()).or_insert(msg);
        };
        let (z, o) = (self.zero, self.one);
        for a in 0..n {
            if self.add(z, a) != a {
                fail("additive identity", format!("0 + {} != {}", nm(a), nm(a)));
            }
            if self.mul(z, a) != z {
                fail("zero absorbing", format!("0 * {} != 0", nm(a)));
            }
            if self.mul(o, a) != a {
                fail("multiplicative identity", format!("1 * {} != {}", nm(a), nm(a)));
            }
            if self.nu(self.nu(a)) != self.nu(a) {
                fail("nu idempotent", format!("at {}", nm(a)));
            }
            if self.mul(self.e(), a) != self.nu(a) {
                fail("nu = e*a", format!("at {}", nm(a)));
            }
            if self.add(a, a) != self.nu(a) {
                fail("a + a = nu(a)", format!("at {}", nm(a)));
            }
            if self.tangible[a] && self.in_g0(a) {
                fail("T disjoint from G0", format!("{} is tangible and ghost", nm(a)));
            }
            if self.prudent[a] && !self.tangible[a] {
                fail("prudent within T", format!("{} is prudent but not tangible", nm(a)));
            }
            if self.prudent[a] && self.powers(a).iter().any(|&p| !self.prudent[p]) {
                fail("PSRa", format!("a power of {} is not prudent", nm(a)));
            }
            if self.is_unit(a) && !self.prudent[a] {
                fail("units within prudent", format!("unit {} is not prudent", nm(a)));
            }
            if !self.tame_at(a) {
                fail("tame", format!("{} is not of the form c + d^nu", nm(a)));
            }
            for b in 0..n {
                let s = self.add(a, b);
                if s != self.add(b, a) {
                    fail("additive commutativity", format!("({}, {})", nm(a), nm(b)));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    fail("multiplicative commutativity", format!("({}, {})", nm(a), nm(b)));
                }
                if self.nu(s) != self.add(self.nu(a), self.nu(b)) {
                    fail("nu additive", format!("({}, {})", nm(a), nm(b)));
                }
                if self.in_g0(a) && self.in_g0(b) && !self.in_g0(s) {
                    fail("ghost ideal", format!("{} + {} leaves G0", nm(a), nm(b)));
                }
                if self.in_g0(a) && !self.in_g0(self.mul(a, b)) {
                    fail("ghost ideal", format!("{} * {} leaves G0", nm(a), nm(b)));
                }
                let (na, nb) = (self.nu(a), self.nu(b));
                if na != nb && self.add(na, nb) == na && s != a {
                    fail("NMa", format!("nu({}) > nu({}) but the sum is {}", nm(a), nm(b), nm(s)));
                }
                if na == nb && s != na {
                    fail("NMb", format!("nu({}) = nu({}) but the sum is {}", nm(a), nm(b), nm(s)));
                }
                if !self.in_g0(s) && self.in_g0(self.add(a, nb)) && s != self.add(na, b) {
                    fail("NMc", format!("at ({}, {})", nm(a), nm(b)));
                }
                if self.tangible[s] && s != a && s != b && self.in_g0(self.add(a, nb)) {
                    fail("PSRb", format!("{} + {} is tangible and reduced", nm(a), nm(b)));
                }
                for c in 0..n {
                    if self.add(s, c) != self.add(a, self.add(b, c)) {
                        fail("additive associativity", format!("({}, {}, {})", nm(a), nm(b), nm(c)));
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        fail("multiplicative associativity", format!("({}, {}, {})", nm(a), nm(b), nm(c)));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        fail("distributivity", format!("({}, {}, {})", nm(a), nm(b), nm(c)));
                    }
                }
            }
        }
        if !self.tangible[o] || !self.prudent[o] {
            fail("one prudent", "1 is not prudent".into());
        }
        // `tame` is reported as a property, not an axiom.
        let tame = !failures.contains_key("tame");
        failures.remove("tame");
        ValidationReport {
            ok: failures.is_empty(),
            failures,
            tame,
            definite: self.is_definite(),
            t_closed: self.is_t_closed(),
            faithful: self.is_faithful(),
        }
    }

    /// The same semiring with element `i` renamed and moved to position `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> FiniteNuSemiring {
        let n = self.len();
        let mut inv = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let table = |t: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
            (0..n)
                .map(|a| (0..n).map(|b| perm[t[inv[a]][inv[b]]]).collect())
                .collect()
        };
        FiniteNuSemiring {
            names: (0..n).map(|a| self.names[inv[a]].clone()).collect(),
            add: table(&self.add),
            mul: table(&self.mul),
            nu: (0..n).map(|a| perm[self.nu[inv[a]]]).collect(),
            zero: perm[self.zero],
            one: perm[self.one],
            tangible: (0..n).map(|a| self.tangible[inv[a]]).collect(),
            prudent: (0..n).map(|a| self.prudent[inv[a]]).collect(),
        }
    }

    /// The same tables with a different prudent subset.
    pub fn with_prudent(&self, prudent: &BTreeSet<usize>) -> FiniteNuSemiring {
        let mut out = self.clone();
        out.prudent = self.elements().map(|a| prudent.contains(&a)).collect();
        out
    }

    pub fn with_names(&self, names: Vec<String>) -> FiniteNuSemiring {
        assert_eq!(names.len(), self.len());
        let mut out = self.clone();
        out.names = names;
        out
    }

    pub fn to_json(&self) -> SemiringJson {
        let nm = |a: &usize| self.names[*a].clone();
        let table = |t: &Vec<Vec<usize>>| t.iter().map(|r| r.iter().map(nm).collect()).collect();
        SemiringJson {
            elements: self.names.clone(),
            zero: nm(&self.zero),
            one: nm(&self.one),
            tangible: self.tangible_set().iter().map(nm).collect(),
            prudent: self.prudent_set().iter().map(nm).collect(),
            add: table(&self.add),
            mul: table(&self.mul),
            nu: self.elements().map(|a| (nm(&a), nm(&self.nu[a]))).collect(),
        }
    }

    pub fn from_json(j: &SemiringJson) -> Result<Self, FiniteError> {
        let names = j.elements.clone();
        let idx = |s: &String| {
            names
                .iter()
                .position(|x| x == s)
                .ok_or_else(|| FiniteError::UnknownElement(s.clone()))
        };
        let table = |t: &Vec<Vec<String>>| -> Result<Vec<Vec<usize>>, FiniteError> {
            t.iter().map(|r| r.iter().map(idx).collect()).collect()
        };
        let n = names.len();
        let mut nu = vec![usize::MAX; n];
        for (k, v) in &j.nu {
            nu[idx(k)?] = idx(v)?;
        }
        if nu.contains(&usize::MAX) {
            return Err(FiniteError::Structure("nu map is not total".into()));
        }
        let mut tangible = vec![false; n];
        for s in &j.tangible {
            tangible[idx(s)?] = true;
        }
        let mut prudent = vec![false; n];
        for s in &j.prudent {
            prudent[idx(s)?] = true;
        }
        Self::new(
            names.clone(),
            table(&j.add)?,
            table(&j.mul)?,
            nu,
            idx(&j.zero)?,
            idx(&j.one)?,
            tangible,
            prudent,
        )
    }

    pub fn parse_json(text: &str) -> Result<Self, FiniteError> {
        let j: SemiringJson = serde_json::from_str(text).map_err(|e| FiniteError::Json(e.to_string()))?;
        Self::from_json(&j)
    }

    /// Tables of `STR(M)` for a finite value monoid; every tangible is prudent.
    pub fn from_str_monoid<M: ValueMonoid>(
        sr: &Supertropical<M>,
        name: impl Fn(&NuElement<M::Value>) -> String,
    ) -> FiniteNuSemiring {
        let els = sr.elements().expect("finite value monoid");
        let n = els.len();
        let pos = |x: &NuElement<M::Value>| els.iter().position(|y| y == x).unwrap();
        type BinOp<'a, V> = &'a dyn Fn(&NuElement<V>, &NuElement<V>) -> NuElement<V>;
        let op = |f: BinOp<M::Value>| {
            (0..n)
                .map(|a| (0..n).map(|b| pos(&f(&els[a], &els[b]))).collect())
                .collect()
        };
        let add = op(&|a, b| sr.add(a, b).unwrap());
        let mul = op(&|a, b| sr.mul(a, b).unwrap());
        let tangible: Vec<bool> = els.iter().map(|x| x.is_tangible()).collect();
        FiniteNuSemiring {
            names: els.iter().map(name).collect(),
            add,
            mul,
            nu: els.iter().map(|x| pos(&x.nu())).collect(),
            zero: pos(&sr.zero()),
            one: pos(&sr.one()),
            prudent: tangible.clone(),
            tangible,
        }
    }

    /// The superboolean semifield `{0, 1, 1^ν}` as `STR(Trivial)`.
    pub fn superboolean() -> FiniteNuSemiring {
        Self::from_str_monoid(&Supertropical::new(Trivial), |x| x.to_string())
    }

    /// `STR` of a finite chain monoid with values named `t_i` and ghosts `g_i`.
    pub fn str_of_chain(chain: FiniteChain) -> FiniteNuSemiring {
        Self::from_str_monoid(&Supertropical::new(chain), |x| match x {
            NuElement::Zero => "0".into(),
            NuElement::Tangible(i) => format!("t{i}"),
            NuElement::Ghost(i) => format!("g{i}"),
        })
    }

    /// `STR` of the `n`-chain with index addition where every product that
    /// overflows the chain becomes the top ghost `g_{n-1}`. This is the
    /// quotient of `STR(N)` collapsing all values `>= n` onto `g_{n-1}`; the
    /// literal `STR` of a saturating chain is not distributive for `n >= 2`.
    pub fn str_chain(n: usize) -> FiniteNuSemiring {
        let mut r = Self::str_of_chain(FiniteChain::saturating(n));
        let value = |x: usize| (x - 1) / 2;
        let top_ghost = 2 * n;
        for a in 1..r.len() {
            for b in 1..r.len() {
                if value(a) + value(b) >= n {
                    r.mul[a][b] = top_ghost;
                }
            }
        }
        r.prudent = r
            .elements()
            .map(|a| r.tangible[a] && r.powers(a).iter().all(|&p| r.tangible[p]))
            .collect();
        r
    }

    /// Truncated powers `t_0 > t_1 > ... > t_{n-1}` with `t_i t_j = t_{i+j}`
    /// when `i + j < n` and `0` otherwise, plus their ghosts. Only `t_0` is
    /// prudent.
    pub fn str_trunc(n: usize) -> FiniteNuSemiring {
        assert!(n >= 1);
        // index 0 is zero, 1 + 2i is t_i, 2 + 2i is g_i
        let size = 2 * n + 1;
        let layer = |x: usize| -> (Option<usize>, bool) {
            if x == 0 {
                (None, false)
            } else {
                (Some((x - 1) / 2), (x - 1) % 2 == 1)
            }
        };
        let make = |i: usize, ghost: bool| 1 + 2 * i + ghost as usize;
        let mut add = vec![vec![0; size]; size];
        let mut mul = vec![vec![0; size]; size];
        for a in 0..size {
            for b in 0..size {
                let (la, ga) = layer(a);
                let (lb, gb) = layer(b);
                add[a][b] = match (la, lb) {
                    (None, _) => b,
                    (_, None) => a,
                    (Some(i), Some(j)) if i < j => a,
                    (Some(i), Some(j)) if i > j => b,
                    (Some(i), Some(_)) => make(i, true),
                };
                mul[a][b] = match (la, lb) {
                    (Some(i), Some(j)) if i + j < n => make(i + j, ga || gb),
                    _ => 0,
                };
            }
        }
        let nu = (0..size)
            .map(|x| match layer(x) {
                (None, _) => 0,
                (Some(i), _) => make(i, true),
            })
            .collect();
        let names = (0..size)
            .map(|x| match layer(x) {
                (None, _) => "0".to_string(),
                (Some(i), false) => format!("t{i}"),
                (Some(i), true) => format!("g{i}"),
            })
            .collect();
        let tangible: Vec<bool> = (0..size).map(|x| x != 0 && (x - 1) % 2 == 0).collect();
        let prudent = (0..size).map(|x| x == 1).collect();
        FiniteNuSemiring { names, add, mul, nu, zero: 0, one: 1, tangible, prudent }
    }

    /// Resolves `superboolean`, `str-chain:n` and `str-trunc:n`.
    pub fn generator(name: &str) -> Result<FiniteNuSemiring, FiniteError> {
        let unknown = || FiniteError::UnknownGenerator(name.to_string());
        if name == "superboolean" {
            return Ok(Self::superboolean());
        }
        let (kind, n) = name.split_once(':').ok_or_else(unknown)?;
        let n: usize = n.parse().map_err(|_| unknown())?;
        if n == 0 {
            return Err(unknown());
        }
        match kind {
            "str-chain" => Ok(Self::str_chain(n)),
            "str-trunc" => Ok(Self::str_trunc(n)),
            _ => Err(unknown()),
        }
    }

    /// An isomorphism `self -> other` preserving tables, zero, one, and the
    /// tangible and prudent sets, if one exists.
    pub fn isomorphism(&self, other: &FiniteNuSemiring) -> Option<Vec<usize>> {
        let n = self.len();
        if n != other.len() {
            return None;
        }
        // tangible, prudent, ghost, number of powers, zero, one
        type Signature = (bool, bool, bool, usize, bool, bool);
        let sig = |r: &FiniteNuSemiring, a: usize| -> Signature {
            (r.tangible[a], r.prudent[a], r.is_ghost(a), r.powers(a).len(), a == r.zero, a == r.one)
        };
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        let order: Vec<usize> = (0..n).collect();
        fn go(
            k: usize,
            order: &[usize],
            s: &FiniteNuSemiring,
            o: &FiniteNuSemiring,
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
            sig: &dyn Fn(&FiniteNuSemiring, usize) -> Signature,
        ) -> bool {
            if k == order.len() {
                return true;
            }
            let a = order[k];
            for b in 0..o.len() {
                if used[b] || sig(s, a) != sig(o, b) {
                    continue;
                }
                map[a] = b;
                used[b] = true;
                let consistent = order[..=k].iter().all(|&x| {
                    let mx = map[x];
                    let nux = s.nu(x);
                    (map[nux] == usize::MAX || map[nux] == o.nu(mx))
                        && order[..=k].iter().all(|&y| {
                            let my = map[y];
                            let (sa, pa) = (s.add(x, y), s.mul(x, y));
                            (map[sa] == usize::MAX || map[sa] == o.add(mx, my))
                                && (map[pa] == usize::MAX || map[pa] == o.mul(mx, my))
                        })
                });
                if consistent && go(k + 1, order, s, o, map, used, sig) {
                    return true;
                }
                map[a] = usize::MAX;
                used[b] = false;
            }
            false
        }
        if go(0, &order, self, other, &mut map, &mut used, &sig) && self.is_hom_to(other, &map) {
            Some(map)
        } else {
            None
        }
    }

    pub fn is_isomorphic(&self, other: &FiniteNuSemiring) -> bool {
        self.isomorphism(other).is_some()
    }

    /// Whether `phi` is a unital semiring homomorphism commuting with `ν`.
    pub fn is_hom_to(&self, other: &FiniteNuSemiring, phi: &[usize]) -> bool {
        phi.len() == self.len()
            && phi[self.zero] == other.zero
            && phi[self.one] == other.one
            && self.elements().all(|a| {
                phi[self.nu(a)] == other.nu(phi[a])
                    && self.elements().all(|b| {
                        phi[self.add(a, b)] == other.add(phi[a], phi[b])
                            && phi[self.mul(a, b)] == other.mul(phi[a], phi[b])
                    })
            })
    }

    /// A homomorphism reflecting tangibility: `phi(a) ∈ T'` implies `a ∈ T`.
    pub fn check_q_hom(&self, other: &FiniteNuSemiring, phi: &[usize]) -> Result<(), String> {
        if !self.is_hom_to(other, phi) {
            return Err("not a unital homomorphism commuting with nu".into());
        }
        match self.elements().find(|&a| other.tangible[phi[a]] && !self.tangible[a]) {
            Some(a) => Err(format!("{} is not tangible but maps to a tangible", self.names[a])),
            None => Ok(()),
        }
    }
}

/// Outcome of [`FiniteNuSemiring::validate`] plus structural flags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    /// First counterexample per violated axiom.
    pub failures: BTreeMap<String, String>,
    pub tame: bool,
    pub definite: bool,
    pub t_closed: bool,
    pub faithful: bool,
}

/// The bundled instances: superboolean, two `STR` chains, two truncations.
pub fn bundled_suite() -> Vec<(String, FiniteNuSemiring)> {
    ["superboolean", "str-chain:2", "str-chain:3", "str-trunc:2", "str-trunc:3"]
        .iter()
        .map(|s| (s.to_string(), FiniteNuSemiring::generator(s).unwrap()))
        .collect()
}
