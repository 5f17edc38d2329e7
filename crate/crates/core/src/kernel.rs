//! Exact arithmetic over supertropical semirings built from ordered value
//! monoids: every nonzero element is a value tagged tangible or ghost, and the
//! semiring operations are a ghost-aware max and the monoid product.

use std::cmp::Ordering;
use std::fmt;
use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Add, Mul};

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact rational numbers used for every value in log notation.
pub type Q = BigRational;

/// Builds the rational `n/d`.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

/// Builds the integer rational `n`.
pub fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KernelError {
    #[error("element does not belong to this value monoid")]
    ForeignElement,
    #[error("zeroth power of a non-invertible element")]
    ZeroPower,
    #[error("value monoid table is invalid: {0}")]
    BadMonoid(String),
}

/// The layer of an element: the absorbing zero, the tangible part `T`, or the
/// ghost ideal `G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Layer {
    Zero,
    Tangible,
    Ghost,
}

impl Layer {
    /// The layer of `nu(a)` when `a` has this layer.
    pub fn nu(self) -> Layer {
        match self {
            Layer::Zero => Layer::Zero,
            _ => Layer::Ghost,
        }
    }
}

/// An element of `STR(M)`: zero, a tangible value `a`, or its ghost `a^nu`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NuElement<V> {
    Zero,
    Tangible(V),
    Ghost(V),
}

impl<V: Clone> NuElement<V> {
    pub fn layer(&self) -> Layer {
        match self {
            NuElement::Zero => Layer::Zero,
            NuElement::Tangible(_) => Layer::Tangible,
            NuElement::Ghost(_) => Layer::Ghost,
        }
    }

    pub fn value(&self) -> Option<&V> {
        match self {
            NuElement::Zero => None,
            NuElement::Tangible(v) | NuElement::Ghost(v) => Some(v),
        }
    }

    /// Rebuilds an element from a value and a layer; `Layer::Zero` ignores the value.
    pub fn with_layer(value: V, layer: Layer) -> Self {
        match layer {
            Layer::Zero => NuElement::Zero,
            Layer::Tangible => NuElement::Tangible(value),
            Layer::Ghost => NuElement::Ghost(value),
        }
    }

    /// The ghost map `a -> a^nu`.
    pub fn nu(&self) -> Self {
        match self {
            NuElement::Zero => NuElement::Zero,
            NuElement::Tangible(v) | NuElement::Ghost(v) => NuElement::Ghost(v.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, NuElement::Zero)
    }

    pub fn is_tangible(&self) -> bool {
        matches!(self, NuElement::Tangible(_))
    }

    pub fn is_ghost(&self) -> bool {
        matches!(self, NuElement::Ghost(_))
    }

    /// Membership in the ghost ideal together with zero, `G_0 = G ∪ {0}`.
    pub fn in_ghost_ideal(&self) -> bool {
        !self.is_tangible()
    }
}

/// Result of comparing two elements by their ghost images only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NuOrdering {
    Less,
    NuEquivalent,
    Greater,
}

/// A totally ordered commutative monoid whose order respects multiplication.
pub trait ValueMonoid {
    type Value: Clone + Eq + Ord + Hash + Debug;

    fn identity(&self) -> Self::Value;
    fn op(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    /// Whether a value belongs to the carrier.
    fn owns(&self, _v: &Self::Value) -> bool {
        true
    }
    fn inverse(&self, v: &Self::Value) -> Option<Self::Value>;
    /// The full carrier in increasing order, when finite.
    fn carrier(&self) -> Option<Vec<Self::Value>> {
        None
    }
}

/// Rationals under addition: the value monoid of the extended tropical
/// semifield in logarithmic notation (`1 = 0`, `0 = -inf`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RationalAdd;

impl ValueMonoid for RationalAdd {
    type Value = Q;
    fn identity(&self) -> Q {
        Q::zero()
    }
    fn op(&self, a: &Q, b: &Q) -> Q {
        a + b
    }
    fn inverse(&self, v: &Q) -> Option<Q> {
        Some(-v)
    }
}

/// The one-element monoid; `STR(Trivial)` is the superboolean semifield.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Trivial;

impl ValueMonoid for Trivial {
    type Value = ();
    fn identity(&self) {}
    fn op(&self, _a: &(), _b: &()) {}
    fn inverse(&self, _v: &()) -> Option<()> {
        Some(())
    }
    fn carrier(&self) -> Option<Vec<()>> {
        Some(vec![()])
    }
}

/// The chain `{0, .., n-1}` in its natural order with an explicit commutative
/// multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteChain {
    identity: usize,
    table: Vec<Vec<usize>>,
}

impl FiniteChain {
    /// Saturating index addition `i*j = min(i+j, n-1)` with identity `0`.
    pub fn saturating(n: usize) -> Self {
        assert!(n >= 1, "chain needs at least one element");
        let table = (0..n)
            .map(|i| (0..n).map(|j| (i + j).min(n - 1)).collect())
            .collect();
        FiniteChain { identity: 0, table }
    }

    /// A chain with a caller-supplied table, checked exhaustively.
    pub fn from_table(table: Vec<Vec<usize>>, identity: usize) -> Result<Self, KernelError> {
        let n = table.len();
        let bad = |m: String| Err(KernelError::BadMonoid(m));
        if n == 0 || identity >= n {
            return bad("empty chain or identity out of range".into());
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return bad("table is not n x n over the carrier".into());
        }
        for a in 0..n {
            if table[identity][a] != a {
                return bad(format!("identity fails at {a}"));
            }
            for b in 0..n {
                if table[a][b] != table[b][a] {
                    return bad(format!("not commutative at ({a},{b})"));
                }
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad(format!("not associative at ({a},{b},{c})"));
                    }
                    if a <= b && table[c][a] > table[c][b] {
                        return bad(format!("order not respected at ({a},{b},{c})"));
                    }
                }
            }
        }
        Ok(FiniteChain { identity, table })
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
}

impl ValueMonoid for FiniteChain {
    type Value = usize;
    fn identity(&self) -> usize {
        self.identity
    }
    fn op(&self, a: &usize, b: &usize) -> usize {
        self.table[*a][*b]
    }
    fn owns(&self, v: &usize) -> bool {
        *v < self.table.len()
    }
    fn inverse(&self, v: &usize) -> Option<usize> {
        (0..self.len()).find(|&w| self.table[*v][w] == self.identity)
    }
    fn carrier(&self) -> Option<Vec<usize>> {
        Some((0..self.len()).collect())
    }
}

/// The semiring `STR(M)`: `M ∪ {0} ∪ M^nu` with ghost-aware max as addition.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Supertropical<M> {
    pub monoid: M,
}

impl<M: ValueMonoid> Supertropical<M> {
    pub fn new(monoid: M) -> Self {
        Supertropical { monoid }
    }

    fn check(&self, a: &NuElement<M::Value>) -> Result<(), KernelError> {
        match a.value() {
            Some(v) if !self.monoid.owns(v) => Err(KernelError::ForeignElement),
            _ => Ok(()),
        }
    }

    pub fn zero(&self) -> NuElement<M::Value> {
        NuElement::Zero
    }

    pub fn one(&self) -> NuElement<M::Value> {
        NuElement::Tangible(self.monoid.identity())
    }

    /// `e = 1 + 1 = 1^nu`.
    pub fn e(&self) -> NuElement<M::Value> {
        NuElement::Ghost(self.monoid.identity())
    }

    pub fn add(
        &self,
        a: &NuElement<M::Value>,
        b: &NuElement<M::Value>,
    ) -> Result<NuElement<M::Value>, KernelError> {
        self.check(a)?;
        self.check(b)?;
        Ok(str_add(a, b))
    }

    pub fn mul(
        &self,
        a: &NuElement<M::Value>,
        b: &NuElement<M::Value>,
    ) -> Result<NuElement<M::Value>, KernelError> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (a, b) {
            (NuElement::Zero, _) | (_, NuElement::Zero) => NuElement::Zero,
            (NuElement::Tangible(x), NuElement::Tangible(y)) => {
                NuElement::Tangible(self.monoid.op(x, y))
            }
            (x, y) => NuElement::Ghost(self.monoid.op(x.value().unwrap(), y.value().unwrap())),
        })
    }

    pub fn nu(&self, a: &NuElement<M::Value>) -> NuElement<M::Value> {
        a.nu()
    }

    pub fn nu_compare(&self, a: &NuElement<M::Value>, b: &NuElement<M::Value>) -> NuOrdering {
        match a.value().cmp(&b.value()) {
            Ordering::Less => NuOrdering::Less,
            Ordering::Equal => NuOrdering::NuEquivalent,
            Ordering::Greater => NuOrdering::Greater,
        }
    }

    /// Ghost surpassing `a ⊨ b`: `a = b + c` for some `c` in `G ∪ {0}`.
    pub fn gs_ge(&self, a: &NuElement<M::Value>, b: &NuElement<M::Value>) -> bool {
        if a == b {
            return true;
        }
        match (a, b) {
            (NuElement::Ghost(_), NuElement::Zero) => true,
            (NuElement::Ghost(x), _) => Some(x) >= b.value(),
            _ => false,
        }
    }

    pub fn is_invertible(&self, a: &NuElement<M::Value>) -> bool {
        match a {
            NuElement::Tangible(v) => self.monoid.inverse(v).is_some(),
            _ => false,
        }
    }

    /// `a^n`; `n = 0` gives `1` for invertible `a` only.
    pub fn pow(&self, a: &NuElement<M::Value>, n: u32) -> Result<NuElement<M::Value>, KernelError> {
        self.check(a)?;
        if n == 0 {
            return if self.is_invertible(a) {
                Ok(self.one())
            } else {
                Err(KernelError::ZeroPower)
            };
        }
        let mut acc = a.clone();
        for _ in 1..n {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// Hyperfield containment `v ∈ P_x`, where `P_a = {a}` for tangible `a`,
    /// `P_{a^nu}` is every tangible-or-zero `b <= a`, and `P_0 = {0}`.
    pub fn hyper_contains(&self, x: &NuElement<M::Value>, v: &NuElement<M::Value>) -> bool {
        match (x, v) {
            (_, NuElement::Ghost(_)) => false,
            (NuElement::Ghost(_), NuElement::Zero) => true,
            (NuElement::Ghost(a), NuElement::Tangible(b)) => b <= a,
            _ => x == v,
        }
    }

    /// Ordinary max of two tangible-or-zero elements (the hyperfield sum of singletons).
    pub fn max_plus(&self, a: &NuElement<M::Value>, b: &NuElement<M::Value>) -> NuElement<M::Value> {
        if a.value() >= b.value() {
            a.clone()
        } else {
            b.clone()
        }
    }

    /// All elements in the order `0 < a < a^nu < b < b^nu < ...`, when finite.
    pub fn elements(&self) -> Option<Vec<NuElement<M::Value>>> {
        let carrier = self.monoid.carrier()?;
        let mut out = vec![NuElement::Zero];
        for v in carrier {
            out.push(NuElement::Tangible(v.clone()));
            out.push(NuElement::Ghost(v));
        }
        Some(out)
    }
}

fn str_add<V: Clone + Ord>(a: &NuElement<V>, b: &NuElement<V>) -> NuElement<V> {
    match (a.value(), b.value()) {
        (None, _) => b.clone(),
        (_, None) => a.clone(),
        (Some(x), Some(y)) => match x.cmp(y) {
            Ordering::Greater => a.clone(),
            Ordering::Less => b.clone(),
            Ordering::Equal => NuElement::Ghost(x.clone()),
        },
    }
}

/// The rational supertropical semifield in logarithmic notation.
pub type RatElem = NuElement<Q>;

impl RatElem {
    pub fn tan(v: Q) -> Self {
        NuElement::Tangible(v)
    }

    pub fn gho(v: Q) -> Self {
        NuElement::Ghost(v)
    }

    pub fn tan_int(n: i64) -> Self {
        NuElement::Tangible(qi(n))
    }

    pub fn gho_int(n: i64) -> Self {
        NuElement::Ghost(qi(n))
    }

    pub fn one() -> Self {
        NuElement::Tangible(Q::zero())
    }

    pub fn pow_n(&self, n: u32) -> Self {
        match self {
            NuElement::Zero => NuElement::Zero,
            NuElement::Tangible(v) => NuElement::Tangible(v * Q::from_integer(n.into())),
            NuElement::Ghost(v) => NuElement::Ghost(v * Q::from_integer(n.into())),
        }
    }
}

impl Add for &RatElem {
    type Output = RatElem;
    fn add(self, rhs: &RatElem) -> RatElem {
        str_add(self, rhs)
    }
}

impl Add for RatElem {
    type Output = RatElem;
    fn add(self, rhs: RatElem) -> RatElem {
        str_add(&self, &rhs)
    }
}

impl Mul for &RatElem {
    type Output = RatElem;
    fn mul(self, rhs: &RatElem) -> RatElem {
        match (self, rhs) {
            (NuElement::Zero, _) | (_, NuElement::Zero) => NuElement::Zero,
            (NuElement::Tangible(x), NuElement::Tangible(y)) => NuElement::Tangible(x + y),
            (x, y) => NuElement::Ghost(x.value().unwrap() + y.value().unwrap()),
        }
    }
}

impl Mul for RatElem {
    type Output = RatElem;
    fn mul(self, rhs: RatElem) -> RatElem {
        &self * &rhs
    }
}

/// Formats a rational as `n` or `n/d`.
pub fn fmt_q(v: &Q) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

impl fmt::Display for RatElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NuElement::Zero => write!(f, "-inf"),
            NuElement::Tangible(v) => write!(f, "{}", fmt_q(v)),
            NuElement::Ghost(v) => write!(f, "{}v", fmt_q(v)),
        }
    }
}

/// Superboolean literals `b0`, `b1`, `b1v`.
impl fmt::Display for NuElement<()> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NuElement::Zero => write!(f, "b0"),
            NuElement::Tangible(()) => write!(f, "b1"),
            NuElement::Ghost(()) => write!(f, "b1v"),
        }
    }
}

/// Absolute value helper for bounding boxes.
pub fn q_abs(v: &Q) -> Q {
    v.abs()
}
