//! Multivariate supertropical polynomials over the rational supertropical
//! semifield (log notation), their evaluation, canonical forms as polynomial
//! functions, and univariate factorization into primitive factors.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::kernel::{fmt_q, qi, NuElement, RatElem, Q};
use crate::lp::{feasible_point, Ineq};

pub type Exponent = Vec<u32>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("the zero polynomial has no canonical form or factorization")]
    ZeroPolynomial,
    #[error("factorization needs a univariate polynomial, got {0} variables")]
    NotUnivariate(usize),
    #[error("a tangible constant has no factorization")]
    NotFactorable,
}

/// `Σ a_i Λ^i` with nonzero coefficients keyed by exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, RatElem>,
}

impl TropPoly {
    pub fn zero(nvars: usize) -> Self {
        TropPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: RatElem) -> Self {
        Self::monomial(c, vec![0; nvars])
    }

    pub fn monomial(c: RatElem, exps: Exponent) -> Self {
        let mut p = TropPoly::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// Builds a polynomial from `(coefficient, exponent)` pairs, summing repeats.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (RatElem, Exponent)>) -> Self {
        let mut p = TropPoly::zero(nvars);
        for (c, e) in terms {
            assert_eq!(e.len(), nvars, "exponent length must equal nvars");
            p.add_term(e, c);
        }
        p
    }

    /// Univariate `λ + a` style constructor from `(coefficient, degree)` pairs.
    pub fn univariate(terms: impl IntoIterator<Item = (RatElem, u32)>) -> Self {
        Self::from_terms(1, terms.into_iter().map(|(c, d)| (c, vec![d])))
    }

    /// The variable `λ_k` among `nvars`.
    pub fn var(nvars: usize, k: usize) -> Self {
        let mut e = vec![0; nvars];
        e[k] = 1;
        Self::monomial(RatElem::one(), e)
    }

    pub fn add_term(&mut self, exps: Exponent, c: RatElem) {
        if c.is_zero() {
            return;
        }
        let merged = match self.terms.remove(&exps) {
            Some(old) => &old + &c,
            None => c,
        };
        if !merged.is_zero() {
            self.terms.insert(exps, merged);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, RatElem> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> RatElem {
        self.terms.get(exps).cloned().unwrap_or(NuElement::Zero)
    }

    /// Same polynomial viewed in `n >= nvars` variables.
    pub fn with_nvars(&self, n: usize) -> Self {
        assert!(n >= self.nvars);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.resize(n, 0);
                (e, c.clone())
            })
            .collect();
        TropPoly { nvars: n, terms }
    }

    /// Pads both operands to a common number of variables.
    pub fn unify(f: &TropPoly, g: &TropPoly) -> (TropPoly, TropPoly) {
        let n = f.nvars.max(g.nvars);
        (f.with_nvars(n), g.with_nvars(n))
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn p_eval(&self, x: &[RatElem]) -> Result<RatElem, PolyError> {
        if x.len() != self.nvars {
            return Err(PolyError::Dimension { expected: self.nvars, got: x.len() });
        }
        let mut acc = NuElement::Zero;
        for (e, c) in &self.terms {
            let mut m = c.clone();
            for (xi, &ei) in x.iter().zip(e) {
                if ei > 0 {
                    m = &m * &xi.pow_n(ei);
                }
            }
            acc = &acc + &m;
        }
        Ok(acc)
    }

    pub fn p_add(&self, g: &TropPoly) -> Result<TropPoly, PolyError> {
        self.same_dim(g)?;
        let mut out = self.clone();
        for (e, c) in &g.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn p_mul(&self, g: &TropPoly) -> Result<TropPoly, PolyError> {
        self.same_dim(g)?;
        let mut out = TropPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &g.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    /// `f^m` by repeated multiplication.
    pub fn pow(&self, m: u32) -> TropPoly {
        let mut acc = TropPoly::constant(self.nvars, RatElem::one());
        for _ in 0..m {
            acc = acc.p_mul(self).expect("same dimension");
        }
        acc
    }

    /// `Σ (a_i Λ^i)^m`, which agrees with `f^m` as a function.
    pub fn frobenius_pow(&self, m: u32) -> TropPoly {
        assert!(m >= 1, "frobenius power needs m >= 1");
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (c.pow_n(m), e.iter().map(|x| x * m).collect()));
        TropPoly::from_terms(self.nvars, terms)
    }

    fn same_dim(&self, g: &TropPoly) -> Result<(), PolyError> {
        if self.nvars != g.nvars {
            return Err(PolyError::Dimension { expected: self.nvars, got: g.nvars });
        }
        Ok(())
    }

    /// The largest absolute coefficient value, used for default plot boxes.
    pub fn max_abs_coefficient(&self) -> Q {
        self.terms
            .values()
            .filter_map(|c| c.value().map(|v| v.abs()))
            .max()
            .unwrap_or_else(Q::zero)
    }

    pub fn essential_exponents(&self) -> BTreeMap<Exponent, Essentiality> {
        self.terms
            .keys()
            .map(|e| (e.clone(), self.essentiality_of(e)))
            .collect()
    }

    /// Rows `ℓ_i(x) - ℓ_j(x) (> or >=) 0` for every other term `j`.
    fn dominance_rows(&self, e: &Exponent, strict: bool) -> Vec<Ineq> {
        let vi = self.terms[e].value().unwrap();
        self.terms
            .iter()
            .filter(|(f, _)| *f != e)
            .map(|(f, c)| {
                let coef = e.iter().zip(f).map(|(a, b)| qi(*a as i64 - *b as i64)).collect();
                Ineq::new(coef, vi - c.value().unwrap(), strict)
            })
            .collect()
    }

    pub fn essentiality_of(&self, e: &Exponent) -> Essentiality {
        if feasible_point(&self.dominance_rows(e, true), self.nvars).is_some() {
            Essentiality::StrictlyEssential
        } else if feasible_point(&self.dominance_rows(e, false), self.nvars).is_some() {
            Essentiality::TieOnly
        } else {
            Essentiality::Unreachable
        }
    }

    /// A rational point where the term `e` strictly dominates all others.
    pub fn strict_witness(&self, e: &Exponent) -> Option<Vec<Q>> {
        feasible_point(&self.dominance_rows(e, true), self.nvars)
    }

    pub fn canonicalize(&self) -> CanonicalForm {
        let mut poly = TropPoly::zero(self.nvars);
        let mut essentiality = BTreeMap::new();
        for (e, c) in &self.terms {
            match self.essentiality_of(e) {
                Essentiality::Unreachable => {}
                Essentiality::StrictlyEssential => {
                    poly.add_term(e.clone(), c.clone());
                    essentiality.insert(e.clone(), Essentiality::StrictlyEssential);
                }
                Essentiality::TieOnly => {
                    poly.add_term(e.clone(), c.nu());
                    essentiality.insert(e.clone(), Essentiality::TieOnly);
                }
            }
        }
        CanonicalForm { poly, essentiality }
    }

    /// Equality as functions on the tangible points of `T^n` (and hence on all
    /// of `R^n`): the strictly essential terms agree in value and layer.
    pub fn func_equal(&self, g: &TropPoly) -> bool {
        let (f, g) = TropPoly::unify(self, g);
        f.canonicalize().function_key() == g.canonicalize().function_key()
    }

    pub fn factor_univariate(&self) -> Result<Vec<Factor>, PolyError> {
        factor_univariate(self)
    }

    pub fn tangible_root(&self) -> Result<Option<Q>, PolyError> {
        tangible_root(self)
    }
}

/// How a term participates in the maximum of the affine forms `ℓ_i(x) = v_i + <i, x>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Essentiality {
    /// Uniquely attains the maximum on an open set.
    StrictlyEssential,
    /// Attains the maximum only where another term ties.
    TieOnly,
    /// Never attains the maximum.
    Unreachable,
}

/// A polynomial with unreachable terms removed and tie-only terms ghosted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub poly: TropPoly,
    pub essentiality: BTreeMap<Exponent, Essentiality>,
}

impl CanonicalForm {
    /// The strictly essential terms, which determine the polynomial function.
    pub fn function_key(&self) -> BTreeMap<Exponent, RatElem> {
        self.poly
            .terms
            .iter()
            .filter(|(e, _)| self.essentiality[*e] == Essentiality::StrictlyEssential)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect()
    }
}

/// Primitive factors of univariate polynomial functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    /// `c λ^d`
    Monomial { coeff: RatElem, degree: u32 },
    /// `λ + a`
    Linear(Q),
    /// `eλ + a`
    GhostLeading(Q),
    /// `λ + a^ν`
    GhostConstant(Q),
    /// `λ² + b^ν λ + a` with `b > a/2`
    Quadratic { b: Q, a: Q },
}

impl Factor {
    pub fn to_poly(&self) -> TropPoly {
        use NuElement::{Ghost, Tangible};
        match self {
            Factor::Monomial { coeff, degree } => TropPoly::univariate([(coeff.clone(), *degree)]),
            Factor::Linear(a) => TropPoly::univariate([(RatElem::one(), 1), (Tangible(a.clone()), 0)]),
            Factor::GhostLeading(a) => {
                TropPoly::univariate([(RatElem::gho_int(0), 1), (Tangible(a.clone()), 0)])
            }
            Factor::GhostConstant(a) => {
                TropPoly::univariate([(RatElem::one(), 1), (Ghost(a.clone()), 0)])
            }
            Factor::Quadratic { b, a } => TropPoly::univariate([
                (RatElem::one(), 2),
                (Ghost(b.clone()), 1),
                (Tangible(a.clone()), 0),
            ]),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Monomial { .. } => write!(f, "{}", self.to_poly()),
            _ => write!(f, "({})", self.to_poly()),
        }
    }
}

/// Product of a factor list.
pub fn product(factors: &[Factor]) -> TropPoly {
    factors
        .iter()
        .fold(TropPoly::constant(1, RatElem::one()), |acc, f| acc.p_mul(&f.to_poly()).unwrap())
}

/// Strict terms of a univariate function in increasing degree, with the
/// breakpoints `r_k` where term `k` hands over to term `k+1`.
type Shape = (Vec<(u32, RatElem)>, Vec<Q>);

fn univariate_shape(f: &TropPoly) -> Result<Shape, PolyError> {
    if f.nvars != 1 {
        return Err(PolyError::NotUnivariate(f.nvars));
    }
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let strict: Vec<(u32, RatElem)> = f
        .canonicalize()
        .function_key()
        .into_iter()
        .map(|(e, c)| (e[0], c))
        .collect();
    let breaks = strict
        .windows(2)
        .map(|w| {
            let (i, a) = (&w[0].0, w[0].1.value().unwrap());
            let (j, b) = (&w[1].0, w[1].1.value().unwrap());
            (a - b) / qi((j - i) as i64)
        })
        .collect();
    Ok((strict, breaks))
}

/// Splits a univariate polynomial function into a monomial unit and
/// primitive factors whose product is the same function.
pub fn factor_univariate(f: &TropPoly) -> Result<Vec<Factor>, PolyError> {
    let (strict, breaks) = univariate_shape(f)?;
    let m = breaks.len();
    let (i0, _) = &strict[0];
    let (_, top) = &strict[m];
    if m == 0 {
        if *i0 == 0 && top.is_tangible() {
            return Err(PolyError::NotFactorable);
        }
        return Ok(vec![Factor::Monomial { coeff: top.clone(), degree: *i0 }]);
    }
    let ghost: Vec<bool> = strict.iter().map(|(_, c)| c.is_ghost()).collect();
    let mut mult: Vec<u32> = strict.windows(2).map(|w| w[1].0 - w[0].0).collect();
    let top_value = top.value().unwrap().clone();
    let mut out = Vec::new();
    if ghost.iter().all(|g| *g) {
        out.push(Factor::Monomial { coeff: NuElement::Ghost(top_value), degree: *i0 });
    } else {
        out.push(Factor::Monomial { coeff: NuElement::Tangible(top_value), degree: *i0 });
        let mut k = 0;
        while k <= m {
            if !ghost[k] {
                k += 1;
                continue;
            }
            let p = k;
            while k < m && ghost[k + 1] {
                k += 1;
            }
            let q = k;
            if p == 0 {
                out.push(Factor::GhostConstant(breaks[q].clone()));
                mult[q] -= 1;
            } else if q == m {
                out.push(Factor::GhostLeading(breaks[p - 1].clone()));
                mult[p - 1] -= 1;
            } else {
                let (lo, hi) = (&breaks[p - 1], &breaks[q]);
                out.push(Factor::Quadratic { b: hi.clone(), a: lo + hi });
                mult[p - 1] -= 1;
                mult[q] -= 1;
            }
            k += 1;
        }
    }
    for (r, &d) in breaks.iter().zip(&mult) {
        for _ in 0..d {
            out.push(Factor::Linear(r.clone()));
        }
    }
    Ok(out)
}

/// A tangible point where `f` evaluates to a ghost, or `None` when `f` is a
/// tangible monomial as a function.
pub fn tangible_root(f: &TropPoly) -> Result<Option<Q>, PolyError> {
    let (strict, breaks) = univariate_shape(f)?;
    if let Some(r) = breaks.first() {
        return Ok(Some(r.clone()));
    }
    Ok(if strict[0].1.is_ghost() { Some(Q::zero()) } else { None })
}

fn var_name(nvars: usize, k: usize) -> String {
    if nvars <= 3 {
        ["x", "y", "z"][k].to_string()
    } else {
        format!("x{}", k + 1)
    }
}

/// Canonical text: terms by decreasing total degree, then decreasing
/// exponent vector; a tangible unit coefficient is omitted.
impl fmt::Display for TropPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "-inf");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let parts: Vec<String> = terms
            .into_iter()
            .map(|(e, c)| {
                let mut pieces = Vec::new();
                let constant = e.iter().all(|&x| x == 0);
                if constant || *c != RatElem::one() {
                    pieces.push(c.to_string());
                }
                for (k, &x) in e.iter().enumerate() {
                    match x {
                        0 => {}
                        1 => pieces.push(var_name(self.nvars, k)),
                        _ => pieces.push(format!("{}^{}", var_name(self.nvars, k), x)),
                    }
                }
                pieces.join("*")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Coefficient text helper shared with JSON output.
pub fn coefficient_text(c: &RatElem) -> String {
    match c.value() {
        Some(v) if c.is_ghost() => format!("{}v", fmt_q(v)),
        Some(v) => fmt_q(v),
        None => "-inf".into(),
    }
}
