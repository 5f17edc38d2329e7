//! Seeded generators for property suites: rational elements, polynomials and
//! small valid finite nu-semirings.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::congr::{quotient, Lattice, DEFAULT_BOUND};
use crate::finite::{bundled_suite, FiniteNuSemiring};
use crate::kernel::{q, FiniteChain, NuElement, RatElem};
use crate::poly::TropPoly;

/// A nonzero element `n/d` with `|n| <= 12`, `d <= 4`, ghost with probability 1/3.
pub fn rat_elem<R: Rng>(rng: &mut R) -> RatElem {
    let v = q(rng.gen_range(-12..=12), rng.gen_range(1..=4));
    if rng.gen_ratio(1, 3) {
        NuElement::Ghost(v)
    } else {
        NuElement::Tangible(v)
    }
}

/// Like [`rat_elem`] but zero with probability 1/10.
pub fn rat_elem_or_zero<R: Rng>(rng: &mut R) -> RatElem {
    if rng.gen_ratio(1, 10) {
        NuElement::Zero
    } else {
        rat_elem(rng)
    }
}

pub fn tangible<R: Rng>(rng: &mut R) -> RatElem {
    NuElement::Tangible(q(rng.gen_range(-12..=12), rng.gen_range(1..=4)))
}

/// Up to `max_terms` terms with exponents of total degree at most `max_deg`.
pub fn poly<R: Rng>(rng: &mut R, nvars: usize, max_terms: usize, max_deg: u32) -> TropPoly {
    let k = rng.gen_range(1..=max_terms);
    let mut out = TropPoly::zero(nvars);
    while out.len() < k {
        let mut e = vec![0u32; nvars];
        let mut budget = rng.gen_range(0..=max_deg);
        for slot in e.iter_mut() {
            let x = rng.gen_range(0..=budget);
            *slot = x;
            budget -= x;
        }
        e.shuffle(rng);
        if !out.terms().contains_key(&e) {
            out.add_term(e, rat_elem(rng));
        }
    }
    out
}

/// A univariate polynomial in canonical form with degree at most `max_deg`
/// whose function is not a tangible constant.
pub fn canonical_univariate<R: Rng>(rng: &mut R, max_deg: u32) -> TropPoly {
    loop {
        let f = poly(rng, 1, max_deg as usize + 1, max_deg);
        let c = f.canonicalize().poly;
        let key = f.canonicalize().function_key();
        let tangible_constant = key.len() == 1
            && key.keys().next().unwrap()[0] == 0
            && key.values().next().unwrap().is_tangible();
        if !tangible_constant {
            return c;
        }
    }
}

/// Random pairs of element indices.
pub fn pairs<R: Rng>(rng: &mut R, n: usize, max: usize) -> Vec<(usize, usize)> {
    let k = rng.gen_range(0..=max);
    (0..k).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect()
}

pub fn subset<R: Rng>(rng: &mut R, n: usize) -> BTreeSet<usize> {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}

/// Valid semirings with 4 to 6 elements: quotients of the bundled instances
/// and the same tables with every admissible smaller prudent set. Literal
/// `STR` tables of two-element chains are left out since they fail validation.
pub fn table_pool() -> Vec<FiniteNuSemiring> {
    let mut base: Vec<FiniteNuSemiring> = Vec::new();
    for (_, r) in bundled_suite() {
        base.push(r.clone());
        if let Ok(lat) = Lattice::new(&r, DEFAULT_BOUND) {
            for theta in lat.q_congs() {
                if let Ok((qr, _)) = quotient(&r, &theta) {
                    base.push(qr);
                }
            }
        }
    }
    base.push(FiniteNuSemiring::str_chain(2));
    let top = FiniteChain::from_table(vec![vec![0, 0], vec![0, 1]], 1).expect("min table");
    base.push(FiniteNuSemiring::str_of_chain(top));
    let mut out: Vec<FiniteNuSemiring> = Vec::new();
    for r in base {
        if !(4..=6).contains(&r.len()) || !r.validate().ok {
            continue;
        }
        let prudent: Vec<usize> = r.prudent_set().into_iter().collect();
        for mask in 0u32..(1 << prudent.len()) {
            let keep: BTreeSet<usize> = prudent
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &a)| a)
                .collect();
            let v = r.with_prudent(&keep);
            if v.validate().ok && !out.contains(&v) {
                out.push(v);
            }
        }
    }
    out
}

/// A pool member under a random relabeling of its elements.
pub fn table<R: Rng>(rng: &mut R, pool: &[FiniteNuSemiring]) -> FiniteNuSemiring {
    let r = pool.choose(rng).expect("nonempty pool");
    let mut perm: Vec<usize> = (0..r.len()).collect();
    perm.shuffle(rng);
    r.relabel(&perm)
}
