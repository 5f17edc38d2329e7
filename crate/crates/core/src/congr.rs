//! Congruences on finite nu-semirings: closure, ghostification, clusters,
//! classification, enumeration, quotients, localization and radicals.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::finite::{FiniteError, FiniteNuSemiring};

/// Default largest carrier for exhaustive partition enumeration.
pub const DEFAULT_BOUND: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CongrError {
    #[error("not a q-congruence: the unit class {0} is not tangible")]
    NotQCongruence(String),
    #[error("carrier has {size} elements, above the enumeration bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error("not a tangible multiplicative monoid inside the prudent set: {0}")]
    NotTangibleMonoid(String),
    #[error("fraction class {0} has both tangible and ghost numerators")]
    LocalizationConflict(String),
    #[error("constructed semiring fails validation: {0}")]
    InvalidResult(String),
    #[error("not a q-homomorphism: {0}")]
    NotQHom(String),
    #[error("relation is not a congruence on this carrier")]
    NotCongruence,
    #[error(transparent)]
    Finite(#[from] FiniteError),
}

/// An equivalence relation on `0..n`, stored as the least member of each
/// element's class. Equal relations have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Congruence {
    rep: Vec<usize>,
}

impl Congruence {
    pub fn diagonal(n: usize) -> Self {
        Congruence { rep: (0..n).collect() }
    }

    /// The single-class relation (the zero congruence, or the improper
    /// intersection over an empty family).
    pub fn all_pairs(n: usize) -> Self {
        Congruence { rep: vec![0; n] }
    }

    /// From arbitrary class labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut first: BTreeMap<usize, usize> = BTreeMap::new();
        let rep = labels
            .iter()
            .enumerate()
            .map(|(i, l)| *first.entry(*l).or_insert(i))
            .collect();
        Congruence { rep }
    }

    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Self {
        let mut labels: Vec<usize> = (0..n).map(|i| n + i).collect();
        for (k, c) in classes.iter().enumerate() {
            for &a in c {
                labels[a] = k;
            }
        }
        Self::from_labels(&labels)
    }

    fn from_uf(uf: &mut UnionFind) -> Self {
        let n = uf.parent.len();
        let labels: Vec<usize> = (0..n).map(|a| uf.find(a)).collect();
        Self::from_labels(&labels)
    }

    pub fn len(&self) -> usize {
        self.rep.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rep.is_empty()
    }

    pub fn rep(&self, a: usize) -> usize {
        self.rep[a]
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.rep[a] == self.rep[b]
    }

    pub fn class_of(&self, a: usize) -> Vec<usize> {
        (0..self.len()).filter(|&b| self.same(a, b)).collect()
    }

    /// Classes in order of their least member.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut m: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (a, &r) in self.rep.iter().enumerate() {
            m.entry(r).or_default().push(a);
        }
        m.into_values().collect()
    }

    pub fn num_classes(&self) -> usize {
        self.rep.iter().enumerate().filter(|(a, r)| a == *r).count()
    }

    pub fn is_diagonal(&self) -> bool {
        self.rep.iter().enumerate().all(|(a, &r)| a == r)
    }

    /// Containment as sets of pairs.
    pub fn is_subset_of(&self, other: &Congruence) -> bool {
        (0..self.len()).all(|a| other.same(a, self.rep[a]))
    }

    pub fn meet(&self, other: &Congruence) -> Congruence {
        let labels: Vec<usize> = (0..self.len())
            .map(|a| self.rep[a] * self.len() + other.rep[a])
            .collect();
        Self::from_labels(&labels)
    }

    /// Intersection of a family; the all-pairs relation for an empty family.
    pub fn meet_all<'a>(n: usize, family: impl IntoIterator<Item = &'a Congruence>) -> Congruence {
        family
            .into_iter()
            .fold(Congruence::all_pairs(n), |acc, c| acc.meet(c))
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.same(a, b))
            .collect()
    }

    /// Reflexive, symmetric and transitive by construction; this checks
    /// compatibility with both operations.
    pub fn is_congruence_on(&self, r: &FiniteNuSemiring) -> bool {
        self.len() == r.len()
            && r.elements().all(|a| {
                let b = self.rep[a];
                a == b
                    || r.elements().all(|c| {
                        self.same(r.add(a, c), r.add(b, c)) && self.same(r.mul(a, c), r.mul(b, c))
                    })
            })
    }

    /// The tangible projection: tangibles congruent only to tangibles.
    pub fn i_t(&self, r: &FiniteNuSemiring) -> BTreeSet<usize> {
        r.elements()
            .filter(|&a| self.class_of(a).into_iter().all(|b| r.is_tangible(b)))
            .collect()
    }

    /// The ghost projection: `a ≡ ν(a)`.
    pub fn i_g(&self, r: &FiniteNuSemiring) -> BTreeSet<usize> {
        r.elements().filter(|&a| self.same(a, r.nu(a))).collect()
    }

    pub fn to_json(&self, r: &FiniteNuSemiring) -> CongruenceJson {
        let nm = |a: &usize| r.name(*a).to_string();
        CongruenceJson {
            classes: self.classes().iter().map(|c| c.iter().map(nm).collect()).collect(),
        }
    }

    pub fn from_json(r: &FiniteNuSemiring, j: &CongruenceJson) -> Result<Congruence, CongrError> {
        let classes = j
            .classes
            .iter()
            .map(|c| c.iter().map(|s| r.index_of(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let c = Congruence::from_classes(r.len(), &classes);
        if !c.is_congruence_on(r) {
            return Err(CongrError::NotCongruence);
        }
        Ok(c)
    }

    pub fn display(&self, r: &FiniteNuSemiring) -> String {
        let parts: Vec<String> = self
            .classes()
            .iter()
            .map(|c| format!("{{{}}}", c.iter().map(|&a| r.name(a)).collect::<Vec<_>>().join(",")))
            .collect();
        parts.join(" ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct CongruenceJson {
    pub classes: Vec<Vec<String>>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }
}

/// The smallest congruence containing `pairs`.
pub fn cong_closure(r: &FiniteNuSemiring, pairs: &[(usize, usize)]) -> Congruence {
    let mut uf = UnionFind::new(r.len());
    for &(a, b) in pairs {
        uf.union(a, b);
    }
    close(r, uf)
}

/// The smallest congruence containing both arguments.
pub fn join(r: &FiniteNuSemiring, x: &Congruence, y: &Congruence) -> Congruence {
    let pairs: Vec<(usize, usize)> = r
        .elements()
        .flat_map(|a| [(a, x.rep(a)), (a, y.rep(a))])
        .collect();
    cong_closure(r, &pairs)
}

fn close(r: &FiniteNuSemiring, mut uf: UnionFind) -> Congruence {
    loop {
        let mut changed = false;
        for a in r.elements() {
            let b = uf.find(a);
            if a == b {
                continue;
            }
            for c in r.elements() {
                changed |= uf.union(r.add(a, c), r.add(b, c));
                changed |= uf.union(r.mul(a, c), r.mul(b, c));
            }
        }
        if !changed {
            return Congruence::from_uf(&mut uf);
        }
    }
}

/// The congruence generated by `b ≡ ν(b)` for `b ∈ E`.
pub fn ghostify(r: &FiniteNuSemiring, e: &BTreeSet<usize>) -> Congruence {
    let pairs: Vec<(usize, usize)> = e.iter().map(|&b| (b, r.nu(b))).collect();
    cong_closure(r, &pairs)
}

/// `(iT, iG)` of a congruence.
pub fn clusters(r: &FiniteNuSemiring, theta: &Congruence) -> (BTreeSet<usize>, BTreeSet<usize>) {
    (theta.i_t(r), theta.i_g(r))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Flag {
    QCong,
    LCong,
    NuPrime,
    Radical,
    Determined,
    GhostCong,
    TanglyMinimal,
    MaximalL,
}

pub fn is_q_cong(r: &FiniteNuSemiring, theta: &Congruence) -> bool {
    let it = theta.i_t(r);
    r.units().iter().all(|u| it.contains(u))
}

pub fn is_l_cong(r: &FiniteNuSemiring, theta: &Congruence) -> bool {
    let it = theta.i_t(r);
    is_q_cong(r, theta)
        && it.iter().all(|&a| r.is_prudent(a))
        && it.iter().all(|&a| it.iter().all(|&b| it.contains(&r.mul(a, b))))
}

pub fn is_nu_prime(r: &FiniteNuSemiring, theta: &Congruence) -> bool {
    let ig = theta.i_g(r);
    is_l_cong(r, theta)
        && r.elements().filter(|a| !ig.contains(a)).all(|a| {
            r.elements()
                .filter(|b| !ig.contains(b))
                .all(|b| !ig.contains(&r.mul(a, b)))
        })
}

pub fn is_radical(r: &FiniteNuSemiring, theta: &Congruence) -> bool {
    let ig = theta.i_g(r);
    is_q_cong(r, theta)
        && r.elements()
            .all(|a| ig.contains(&a) || r.powers(a).iter().all(|p| !ig.contains(p)))
}

pub fn is_determined(r: &FiniteNuSemiring, theta: &Congruence) -> bool {
    is_q_cong(r, theta)
        && theta.classes().iter().all(|c| {
            c.iter().all(|&a| r.is_tangible(a)) || c.iter().any(|&a| r.in_g0(a))
        })
}

/// Flags decidable without reference to other congruences.
pub fn local_flags(r: &FiniteNuSemiring, theta: &Congruence) -> BTreeSet<Flag> {
    let mut out = BTreeSet::new();
    let checks: [(Flag, bool); 6] = [
        (Flag::QCong, is_q_cong(r, theta)),
        (Flag::LCong, is_l_cong(r, theta)),
        (Flag::NuPrime, is_nu_prime(r, theta)),
        (Flag::Radical, is_radical(r, theta)),
        (Flag::Determined, is_determined(r, theta)),
        (Flag::GhostCong, theta.i_g(r).len() == r.len()),
    ];
    for (f, ok) in checks {
        if ok {
            out.insert(f);
        }
    }
    out
}

/// Every congruence of `r`, by testing all set partitions in
/// restricted-growth order.
pub fn enumerate_congruences(r: &FiniteNuSemiring, bound: usize) -> Result<Vec<Congruence>, CongrError> {
    let n = r.len();
    if n > bound {
        return Err(CongrError::BoundExceeded { size: n, bound });
    }
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    fn rec(k: usize, max: usize, labels: &mut Vec<usize>, r: &FiniteNuSemiring, out: &mut Vec<Congruence>) {
        if k == labels.len() {
            let c = Congruence::from_labels(labels);
            if c.is_congruence_on(r) {
                out.push(c);
            }
            return;
        }
        for l in 0..=max + 1 {
            labels[k] = l;
            rec(k + 1, max.max(l), labels, r, out);
        }
    }
    if n > 0 {
        // labels[0] = 0, and max starts at 0
        rec(1, 0, &mut labels, r, &mut out);
    }
    Ok(out)
}

/// All congruences of a carrier with their flags, including the relative
/// flags `TanglyMinimal` and `MaximalL`.
#[derive(Clone, Debug)]
pub struct Lattice {
    pub ring: FiniteNuSemiring,
    pub all: Vec<Congruence>,
    pub flags: Vec<BTreeSet<Flag>>,
}

impl Lattice {
    pub fn new(r: &FiniteNuSemiring, bound: usize) -> Result<Lattice, CongrError> {
        let all = enumerate_congruences(r, bound)?;
        let mut flags: Vec<BTreeSet<Flag>> = all.iter().map(|c| local_flags(r, c)).collect();
        let lidx: Vec<usize> = (0..all.len()).filter(|&i| flags[i].contains(&Flag::LCong)).collect();
        let its: Vec<BTreeSet<usize>> = all.iter().map(|c| c.i_t(r)).collect();
        for &i in &lidx {
            let minimal = lidx
                .iter()
                .all(|&j| !(its[j].is_subset(&its[i]) && its[j] != its[i]));
            let maximal = lidx
                .iter()
                .all(|&j| j == i || !all[i].is_subset_of(&all[j]));
            if minimal {
                flags[i].insert(Flag::TanglyMinimal);
            }
            if maximal {
                flags[i].insert(Flag::MaximalL);
            }
        }
        Ok(Lattice { ring: r.clone(), all, flags })
    }

    pub fn with_flag(&self, f: Flag) -> Vec<Congruence> {
        self.all
            .iter()
            .zip(&self.flags)
            .filter(|(_, fl)| fl.contains(&f))
            .map(|(c, _)| c.clone())
            .collect()
    }

    pub fn q_congs(&self) -> Vec<Congruence> {
        self.with_flag(Flag::QCong)
    }

    pub fn l_congs(&self) -> Vec<Congruence> {
        self.with_flag(Flag::LCong)
    }

    pub fn primes(&self) -> Vec<Congruence> {
        self.with_flag(Flag::NuPrime)
    }

    pub fn maximal_l(&self) -> Vec<Congruence> {
        self.with_flag(Flag::MaximalL)
    }

    /// Full flag set of any congruence on the carrier.
    pub fn classify(&self, theta: &Congruence) -> BTreeSet<Flag> {
        match self.all.iter().position(|c| c == theta) {
            Some(i) => self.flags[i].clone(),
            None => local_flags(&self.ring, theta),
        }
    }

    /// Intersection of the primes containing `theta`.
    pub fn crad(&self, theta: &Congruence) -> RadicalValue {
        meet_containing(self.ring.len(), theta, &self.primes())
    }

    /// Intersection of the radical q-congruences containing `theta`.
    pub fn crad_via_radicals(&self, theta: &Congruence) -> RadicalValue {
        meet_containing(self.ring.len(), theta, &self.with_flag(Flag::Radical))
    }

    pub fn srad(&self, e: &BTreeSet<usize>) -> RadicalValue {
        self.crad(&ghostify(&self.ring, e))
    }

    pub fn grad(&self) -> RadicalValue {
        self.srad(&gprad(&self.ring))
    }

    pub fn jac(&self, theta: &Congruence) -> RadicalValue {
        meet_containing(self.ring.len(), theta, &self.maximal_l())
    }
}

/// `classify` without a precomputed lattice.
pub fn classify(r: &FiniteNuSemiring, theta: &Congruence) -> Result<BTreeSet<Flag>, CongrError> {
    Ok(Lattice::new(r, DEFAULT_BOUND)?.classify(theta))
}

/// A radical, or the explicit empty marker when no congruence of the
/// relevant kind contains the argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RadicalValue {
    Empty,
    Cong(Congruence),
}

impl RadicalValue {
    pub fn cong(&self) -> Option<&Congruence> {
        match self {
            RadicalValue::Empty => None,
            RadicalValue::Cong(c) => Some(c),
        }
    }
}

fn meet_containing(n: usize, theta: &Congruence, family: &[Congruence]) -> RadicalValue {
    let over: Vec<&Congruence> = family.iter().filter(|p| theta.is_subset_of(p)).collect();
    if over.is_empty() {
        RadicalValue::Empty
    } else {
        RadicalValue::Cong(Congruence::meet_all(n, over))
    }
}

/// Ghostpotent elements: some power lies in `G_0`.
pub fn gprad(r: &FiniteNuSemiring) -> BTreeSet<usize> {
    r.elements().filter(|&a| r.is_ghostpotent(a)).collect()
}

/// `R/Θ` with the canonical surjection. Classes are named by their members
/// joined with `|`.
pub fn quotient(r: &FiniteNuSemiring, theta: &Congruence) -> Result<(FiniteNuSemiring, Vec<usize>), CongrError> {
    let it = theta.i_t(r);
    if let Some(u) = r.units().into_iter().find(|u| !it.contains(u)) {
        let names: Vec<&str> = theta.class_of(u).iter().map(|&a| r.name(a)).collect();
        return Err(CongrError::NotQCongruence(format!("{{{}}}", names.join(","))));
    }
    let classes = theta.classes();
    let index: BTreeMap<usize, usize> = classes.iter().enumerate().map(|(i, c)| (c[0], i)).collect();
    let proj: Vec<usize> = r.elements().map(|a| index[&theta.rep(a)]).collect();
    let k = classes.len();
    let table = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
        classes
            .iter()
            .map(|x| classes.iter().map(|y| proj[f(x[0], y[0])]).collect())
            .collect()
    };
    let add = table(&|a, b| r.add(a, b));
    let mul = table(&|a, b| r.mul(a, b));
    let nu: Vec<usize> = classes.iter().map(|c| proj[r.nu(c[0])]).collect();
    let tangible: Vec<bool> = classes.iter().map(|c| it.contains(&c[0])).collect();
    let prudent: Vec<bool> = (0..k)
        .map(|i| {
            let mut x = i;
            let mut seen = BTreeSet::new();
            while seen.insert(x) {
                if !tangible[x] {
                    return false;
                }
                x = mul[x][i];
            }
            true
        })
        .collect();
    let names = classes
        .iter()
        .map(|c| c.iter().map(|&a| r.name(a)).collect::<Vec<_>>().join("|"))
        .collect();
    let q = FiniteNuSemiring::new(names, add, mul, nu, proj[r.zero()], proj[r.one()], tangible, prudent)?;
    Ok((q, proj))
}

/// `C^{-1}R` together with the canonical map `a ↦ a/1` and the fraction
/// pairs `(a, c)` in each class.
#[derive(Clone, Debug)]
pub struct Localization {
    pub ring: FiniteNuSemiring,
    pub canonical: Vec<usize>,
    pub fractions: Vec<Vec<(usize, usize)>>,
    pub monoid: BTreeSet<usize>,
}

/// Checks that `c` contains one, is closed under products and lies in the
/// prudent set.
pub fn check_tangible_monoid(r: &FiniteNuSemiring, c: &BTreeSet<usize>) -> Result<(), CongrError> {
    let nm = |a: usize| r.name(a).to_string();
    if !c.contains(&r.one()) {
        return Err(CongrError::NotTangibleMonoid("missing 1".into()));
    }
    if let Some(&a) = c.iter().find(|&&a| !r.is_prudent(a)) {
        return Err(CongrError::NotTangibleMonoid(format!("{} is not prudent", nm(a))));
    }
    for &a in c {
        for &b in c {
            if !c.contains(&r.mul(a, b)) {
                return Err(CongrError::NotTangibleMonoid(format!("{} * {} is outside", nm(a), nm(b))));
            }
        }
    }
    Ok(())
}

pub fn localize(r: &FiniteNuSemiring, c: &BTreeSet<usize>) -> Result<Localization, CongrError> {
    check_tangible_monoid(r, c)?;
    let cs: Vec<usize> = c.iter().copied().collect();
    let pairs: Vec<(usize, usize)> = r.elements().flat_map(|a| cs.iter().map(move |&s| (a, s))).collect();
    let pos: BTreeMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let mut uf = UnionFind::new(pairs.len());
    for (i, &(a, s)) in pairs.iter().enumerate() {
        for (j, &(b, t)) in pairs.iter().enumerate().skip(i + 1) {
            if cs.iter().any(|&u| r.mul(r.mul(a, t), u) == r.mul(r.mul(b, s), u)) {
                uf.union(i, j);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (i, p) in pairs.iter().enumerate() {
        groups.entry(uf.find(i)).or_default().push(*p);
    }
    let mut fractions: Vec<Vec<(usize, usize)>> = groups.into_values().collect();
    fractions.sort();
    let class_of: BTreeMap<(usize, usize), usize> = fractions
        .iter()
        .enumerate()
        .flat_map(|(k, f)| f.iter().map(move |p| (*p, k)))
        .collect();
    debug_assert_eq!(class_of.len(), pos.len());
    let k = fractions.len();
    let one = r.one();
    let add = (0..k)
        .map(|x| {
            (0..k)
                .map(|y| {
                    let ((a, s), (b, t)) = (fractions[x][0], fractions[y][0]);
                    class_of[&(r.add(r.mul(t, a), r.mul(s, b)), r.mul(s, t))]
                })
                .collect()
        })
        .collect();
    let mul = (0..k)
        .map(|x| {
            (0..k)
                .map(|y| {
                    let ((a, s), (b, t)) = (fractions[x][0], fractions[y][0]);
                    class_of[&(r.mul(a, b), r.mul(s, t))]
                })
                .collect()
        })
        .collect();
    let nu = (0..k)
        .map(|x| {
            let (a, s) = fractions[x][0];
            class_of[&(r.nu(a), s)]
        })
        .collect();
    let mut tangible = vec![false; k];
    for (x, f) in fractions.iter().enumerate() {
        let t = f.iter().any(|&(a, _)| r.is_tangible(a));
        let g = f.iter().any(|&(a, _)| r.in_g0(a));
        if t && g {
            let (a, s) = f[0];
            return Err(CongrError::LocalizationConflict(format!("{}/{}", r.name(a), r.name(s))));
        }
        tangible[x] = t;
    }
    let canonical: Vec<usize> = r.elements().map(|a| class_of[&(a, one)]).collect();
    let names = fractions
        .iter()
        .map(|f| {
            let whole: Vec<&str> = f.iter().filter(|p| p.1 == one).map(|p| r.name(p.0)).collect();
            if whole.is_empty() {
                format!("{}/{}", r.name(f[0].0), r.name(f[0].1))
            } else {
                whole.join("|")
            }
        })
        .collect();
    let prov = FiniteNuSemiring::new(
        names,
        add,
        mul,
        nu,
        class_of[&(r.zero(), one)],
        class_of[&(one, one)],
        tangible.clone(),
        vec![false; k],
    )?;
    let prudent: BTreeSet<usize> = (0..k)
        .filter(|&x| fractions[x].iter().any(|&(a, _)| r.is_prudent(a)) || prov.is_unit(x))
        .collect();
    let ring = prov.with_prudent(&prudent);
    let report = ring.validate();
    if !report.ok {
        let msg: Vec<String> = report.failures.iter().map(|(k, v)| format!("{k}: {v}")).collect();
        return Err(CongrError::InvalidResult(msg.join("; ")));
    }
    Ok(Localization { ring, canonical, fractions, monoid: c.clone() })
}

impl Localization {
    /// `C^{-1}Θ`: `a/c ≡ b/c'` iff `a c' c'' ≡ b c c''` for some `c''` in `C`,
    /// closed to a congruence. The flag reports whether closing was needed.
    pub fn extend(&self, r: &FiniteNuSemiring, theta: &Congruence) -> (Congruence, bool) {
        let k = self.fractions.len();
        let cs: Vec<usize> = self.monoid.iter().copied().collect();
        let mut uf = UnionFind::new(k);
        for x in 0..k {
            for y in x + 1..k {
                let ((a, s), (b, t)) = (self.fractions[x][0], self.fractions[y][0]);
                if cs
                    .iter()
                    .any(|&u| theta.same(r.mul(r.mul(a, t), u), r.mul(r.mul(b, s), u)))
                {
                    uf.union(x, y);
                }
            }
        }
        let raw = Congruence::from_uf(&mut uf);
        let closed = cong_closure(&self.ring, &raw.pairs());
        let needed = closed != raw;
        (closed, needed)
    }

    /// `Θ'|_R`, the pullback along `a ↦ a/1`.
    pub fn restrict(&self, theta: &Congruence) -> Congruence {
        let labels: Vec<usize> = self.canonical.iter().map(|&x| theta.rep(x)).collect();
        Congruence::from_labels(&labels)
    }
}

/// `a ≡ b` iff `φ(a) ≡' φ(b)`, for a q-homomorphism `φ`.
pub fn pullback(
    r: &FiniteNuSemiring,
    s: &FiniteNuSemiring,
    phi: &[usize],
    theta: &Congruence,
) -> Result<Congruence, CongrError> {
    r.check_q_hom(s, phi).map_err(CongrError::NotQHom)?;
    let labels: Vec<usize> = phi.iter().map(|&x| theta.rep(x)).collect();
    Ok(Congruence::from_labels(&labels))
}
