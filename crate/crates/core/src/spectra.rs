//! Spectra of nu-prime congruences on finite nu-semirings, their Zariski
//! topology, and sections and stalks of the structure presheaf.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::congr::{
    self, ghostify, localize, CongrError, Congruence, Flag, Lattice, Localization, RadicalValue,
};
use crate::finite::FiniteNuSemiring;

/// A set of spectrum points, by index into [`Spectrum::points`].
pub type ZSet = BTreeSet<usize>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectraError {
    #[error("the carrier is not tame")]
    NotTame,
    #[error("the point set is not closed")]
    NotClosed,
    #[error(transparent)]
    Congr(#[from] CongrError),
}

#[derive(Clone, Debug)]
pub struct Spectrum {
    pub lattice: Lattice,
    pub points: Vec<Congruence>,
    it: Vec<BTreeSet<usize>>,
    ig: Vec<BTreeSet<usize>>,
}

impl Spectrum {
    pub fn new(r: &FiniteNuSemiring, bound: usize) -> Result<Spectrum, SpectraError> {
        Ok(Self::from_lattice(Lattice::new(r, bound)?))
    }

    pub fn from_lattice(lattice: Lattice) -> Spectrum {
        let points = lattice.primes();
        let r = &lattice.ring;
        let it = points.iter().map(|p| p.i_t(r)).collect();
        let ig = points.iter().map(|p| p.i_g(r)).collect();
        Spectrum { lattice, points, it, ig }
    }

    pub fn ring(&self) -> &FiniteNuSemiring {
        &self.lattice.ring
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn all(&self) -> ZSet {
        (0..self.len()).collect()
    }

    pub fn i_t(&self, x: usize) -> &BTreeSet<usize> {
        &self.it[x]
    }

    pub fn i_g(&self, x: usize) -> &BTreeSet<usize> {
        &self.ig[x]
    }

    pub fn index_of(&self, p: &Congruence) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    /// `V(E)`: points ghostifying every element of `E`.
    pub fn v_elems(&self, e: &BTreeSet<usize>) -> ZSet {
        (0..self.len()).filter(|&x| e.is_subset(&self.ig[x])).collect()
    }

    pub fn v_elem(&self, f: usize) -> ZSet {
        self.v_elems(&[f].into_iter().collect())
    }

    /// `V(Θ)`: points containing `Θ`.
    pub fn v_cong(&self, theta: &Congruence) -> ZSet {
        (0..self.len()).filter(|&x| theta.is_subset_of(&self.points[x])).collect()
    }

    /// `D(f) = Spec ∖ V(f)`.
    pub fn d_set(&self, f: usize) -> ZSet {
        (0..self.len()).filter(|&x| !self.ig[x].contains(&f)).collect()
    }

    /// `D(C, f)`: points of `D(f)` keeping `C` tangible.
    pub fn d_c_f(&self, c: &BTreeSet<usize>, f: usize) -> ZSet {
        self.d_set(f)
            .into_iter()
            .filter(|&x| c.is_subset(&self.it[x]))
            .collect()
    }

    /// `I(Y)`; the flag is set when `Y` is empty and the result is the
    /// improper all-pairs relation.
    pub fn i_of(&self, y: &ZSet) -> (Congruence, bool) {
        let n = self.ring().len();
        (Congruence::meet_all(n, y.iter().map(|&x| &self.points[x])), y.is_empty())
    }

    /// All closed sets `V(E)` for `E ⊆ R`.
    pub fn closed_sets(&self) -> BTreeSet<ZSet> {
        let n = self.ring().len();
        (0u64..(1 << n))
            .map(|mask| {
                let e: BTreeSet<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                self.v_elems(&e)
            })
            .collect()
    }

    pub fn is_closed(&self, y: &ZSet) -> bool {
        self.closed_sets().contains(y)
    }

    /// `V(I(Y))`, read through the ghost kernel since closed sets are cut
    /// out by elements.
    pub fn closure_of(&self, y: &ZSet) -> ZSet {
        if y.is_empty() {
            return ZSet::new();
        }
        self.v_elems(&self.i_of(y).0.i_g(self.ring()))
    }

    /// The smallest closed set containing `Y`, from the enumerated topology.
    pub fn topological_closure(&self, y: &ZSet) -> ZSet {
        self.closed_sets()
            .into_iter()
            .filter(|c| y.is_subset(c))
            .fold(self.all(), |acc, c| acc.intersection(&c).copied().collect())
    }

    /// Irreducibility of a closed set decided algebraically (`I(Y)` is
    /// nu-prime) and topologically (no decomposition into two proper closed
    /// subsets); the two answers are returned side by side.
    pub fn irreducible(&self, y: &ZSet) -> Result<Irreducibility, SpectraError> {
        if !self.ring().is_tame() {
            return Err(SpectraError::NotTame);
        }
        let closed = self.closed_sets();
        if !closed.contains(y) {
            return Err(SpectraError::NotClosed);
        }
        let algebraic = !y.is_empty() && congr::is_nu_prime(self.ring(), &self.i_of(y).0);
        let proper: Vec<&ZSet> = closed.iter().filter(|c| c.is_subset(y) && *c != y).collect();
        let decomposable = proper.iter().any(|a| {
            proper
                .iter()
                .any(|b| a.union(b).copied().collect::<ZSet>() == *y)
        });
        let topological = !y.is_empty() && !decomposable;
        Ok(Irreducibility { algebraic, topological })
    }

    /// `p ⊊ q` with `iT(q) ⊊ iT(p)`.
    fn chain_step(&self, p: usize, q: usize) -> bool {
        p != q
            && self.points[p].is_subset_of(&self.points[q])
            && self.it[q].is_subset(&self.it[p])
            && self.it[q] != self.it[p]
    }

    /// Length of the longest admissible chain ending at `x`.
    pub fn height(&self, x: usize) -> usize {
        (0..self.len())
            .filter(|&p| self.chain_step(p, x))
            .map(|p| 1 + self.height(p))
            .max()
            .unwrap_or(0)
    }

    pub fn krull_dim(&self) -> usize {
        (0..self.len()).map(|x| self.height(x)).max().unwrap_or(0)
    }

    /// Covering relations of inclusion among points.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let lt = |a: usize, b: usize| a != b && self.points[a].is_subset_of(&self.points[b]);
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in 0..self.len() {
                if lt(a, b) && !(0..self.len()).any(|c| lt(a, c) && lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn require_tame(&self) -> Result<(), SpectraError> {
        if self.ring().is_tame() {
            Ok(())
        } else {
            Err(SpectraError::NotTame)
        }
    }

    /// `S*(f)`: prudent non-ghost-divisors `h` with `D(f) ⊆ D(h)`.
    pub fn s_star(&self, f: usize) -> Result<BTreeSet<usize>, SpectraError> {
        self.require_tame()?;
        let r = self.ring();
        let df = self.d_set(f);
        Ok(r.elements()
            .filter(|&h| r.is_prudent(h) && !r.is_ghost_divisor(h) && df.is_subset(&self.d_set(h)))
            .collect())
    }

    /// `S(f)`: the monoid generated by `M_f` and `S*(f)`, where `M_f` is the
    /// powers of `f` for prudent `f` and `{1}` otherwise.
    pub fn s_of_f(&self, f: usize) -> Result<BTreeSet<usize>, SpectraError> {
        let r = self.ring();
        let mut gens = self.s_star(f)?;
        if r.is_prudent(f) {
            gens.insert(f);
        }
        Ok(r.monoid_generated(&gens))
    }

    /// Points of `D(f)` whose tangible projection contains `S(f)`.
    pub fn focal_zone(&self, f: usize) -> Result<ZSet, SpectraError> {
        let s = self.s_of_f(f)?;
        Ok(self.d_c_f(&s, f))
    }

    pub fn is_nu_strict(&self, f: usize) -> Result<bool, SpectraError> {
        Ok(self.focal_zone(f)? == self.d_set(f))
    }

    /// Sections over `D(f)`: the localization by `S(f)`.
    pub fn sections(&self, f: usize) -> Result<Localization, SpectraError> {
        let s = self.s_of_f(f)?;
        Ok(localize(self.ring(), &s)?)
    }

    /// The stalk at a point: the localization by its tangible projection.
    pub fn stalk(&self, x: usize) -> Result<Localization, SpectraError> {
        self.require_tame()?;
        Ok(localize(self.ring(), &self.it[x])?)
    }

    /// Whether the stalk at `x` is local with a nu-semifield residue.
    pub fn stalk_report(&self, x: usize, bound: usize) -> Result<StalkReport, SpectraError> {
        let loc = self.stalk(x)?;
        let lat = Lattice::new(&loc.ring, bound)?;
        let minimal_its: BTreeSet<BTreeSet<usize>> = lat
            .with_flag(Flag::TanglyMinimal)
            .iter()
            .map(|c| c.i_t(&loc.ring))
            .collect();
        let local = minimal_its.len() <= 1;
        let (ext, _) = loc.extend(self.ring(), &self.points[x]);
        let (res, _) = congr::quotient(&loc.ring, &ext)?;
        let residue_semifield = res.tangible_set().iter().all(|&t| res.is_unit(t));
        Ok(StalkReport { size: loc.ring.len(), local, residue_semifield })
    }

    /// Whether `f̄(p)` is ghost in the residue semiring of the stalk at `p`.
    pub fn residue_is_ghost(&self, x: usize, f: usize) -> Result<bool, SpectraError> {
        let loc = localize(self.ring(), &self.it[x])?;
        let (ext, _) = loc.extend(self.ring(), &self.points[x]);
        let g = loc.canonical[f];
        Ok(ext.same(g, loc.ring.nu(g)))
    }

    /// For every `f`: `f̄` is ghost on all of `V(Θ)` iff `f ∈ iG(crad(Θ))`.
    pub fn nullstellensatz_check(&self, theta: &Congruence) -> Result<NullstellensatzReport, SpectraError> {
        let r = self.ring();
        let v = self.v_cong(theta);
        let crad = self.lattice.crad(theta);
        let ig_crad: BTreeSet<usize> = match &crad {
            RadicalValue::Cong(c) => c.i_g(r),
            RadicalValue::Empty => r.elements().collect(),
        };
        let mut mismatches = Vec::new();
        for f in r.elements() {
            let mut lhs = true;
            for &x in &v {
                if !self.residue_is_ghost(x, f)? {
                    lhs = false;
                    break;
                }
            }
            if lhs != ig_crad.contains(&f) {
                mismatches.push(r.name(f).to_string());
            }
        }
        Ok(NullstellensatzReport {
            pass: mismatches.is_empty(),
            vacuous: v.is_empty(),
            points_over: v.len(),
            mismatches,
        })
    }

    /// `grad(R) = ⋂ Spec(R)`, together with `srad(∅) = srad(G_0)`.
    pub fn krull_check(&self) -> KrullReport {
        let r = self.ring();
        let n = r.len();
        let grad = self.lattice.grad();
        let inter = Congruence::meet_all(n, &self.points);
        let srad_empty = self.lattice.srad(&BTreeSet::new());
        let srad_g0 = self.lattice.srad(&r.g0_set());
        let grad_c = grad.cong().cloned();
        let pass = grad_c.as_ref() == Some(&inter)
            && srad_empty == grad
            && srad_g0 == grad;
        KrullReport {
            pass,
            grad: grad_c.map(|c| c.display(r)),
            intersection: inter.display(r),
            srad_empty_agrees: srad_empty == grad,
            srad_g0_agrees: srad_g0 == grad,
        }
    }

    /// Every cover of `D(g)` by basic opens `D(f)` has a finite subcover; the
    /// report records the largest irredundant subcover met.
    pub fn quasicompact_check(&self, g: usize) -> QuasiCompactReport {
        let r = self.ring();
        let n = r.len();
        let target = self.d_set(g);
        let ds: Vec<ZSet> = r.elements().map(|f| self.d_set(f)).collect();
        let mut covers = 0;
        let mut largest = 0;
        for mask in 0u64..(1 << n) {
            let fam: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let union: ZSet = fam.iter().flat_map(|&f| ds[f].iter().copied()).collect();
            if !target.is_subset(&union) {
                continue;
            }
            covers += 1;
            // greedy irredundant subcover
            let mut sub = fam.clone();
            let mut i = 0;
            while i < sub.len() {
                let without: ZSet = sub
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .flat_map(|(_, &f)| ds[f].iter().copied())
                    .collect();
                if target.is_subset(&without) {
                    sub.remove(i);
                } else {
                    i += 1;
                }
            }
            largest = largest.max(sub.len());
        }
        QuasiCompactReport { pass: true, covers_checked: covers, largest_irredundant_subcover: largest }
    }

    /// Spec of `C^{-1}R` against the points keeping `C` tangible, via
    /// restriction and extension, with inclusions preserved both ways.
    pub fn localization_bijection_check(
        &self,
        c: &BTreeSet<usize>,
        bound: usize,
    ) -> Result<BijectionReport, SpectraError> {
        let r = self.ring();
        let loc = localize(r, c)?;
        let local_spec = Spectrum::new(&loc.ring, bound)?;
        let expected: ZSet = (0..self.len()).filter(|&x| c.is_subset(&self.it[x])).collect();
        let image: Vec<Option<usize>> = local_spec
            .points
            .iter()
            .map(|q| self.index_of(&loc.restrict(q)))
            .collect();
        let image_set: ZSet = image.iter().flatten().copied().collect();
        let injective = image.iter().all(|i| i.is_some()) && image_set.len() == image.len();
        let back = expected.iter().all(|&x| {
            let (ext, _) = loc.extend(r, &self.points[x]);
            local_spec.index_of(&ext).map(|j| image[j] == Some(x)).unwrap_or(false)
        });
        let order = injective
            && (0..image.len()).all(|a| {
                (0..image.len()).all(|b| {
                    let (pa, pb) = (image[a].unwrap(), image[b].unwrap());
                    local_spec.points[a].is_subset_of(&local_spec.points[b])
                        == self.points[pa].is_subset_of(&self.points[pb])
                })
            });
        let pass = injective && image_set == expected && back && order;
        Ok(BijectionReport { pass, source_points: local_spec.len(), target_points: expected.len() })
    }

    /// `Spec(R/Θ) ↔ V(Θ)` by pullback along the projection, with closed sets
    /// corresponding.
    pub fn quotient_homeomorphism_check(&self, theta: &Congruence, bound: usize) -> Result<BijectionReport, SpectraError> {
        let r = self.ring();
        let (q, proj) = congr::quotient(r, theta)?;
        let qs = Spectrum::new(&q, bound)?;
        let image: Vec<Option<usize>> = qs
            .points
            .iter()
            .map(|p| congr::pullback(r, &q, &proj, p).ok().and_then(|c| self.index_of(&c)))
            .collect();
        let v = self.v_cong(theta);
        let image_set: ZSet = image.iter().flatten().copied().collect();
        let bijective = image.iter().all(|i| i.is_some()) && image_set.len() == image.len() && image_set == v;
        let homeo = bijective && {
            let map = |s: &ZSet| -> ZSet { s.iter().map(|&i| image[i].unwrap()).collect() };
            let pushed: BTreeSet<ZSet> = qs.closed_sets().iter().map(map).collect();
            let restricted: BTreeSet<ZSet> = self
                .closed_sets()
                .iter()
                .map(|c| c.intersection(&v).copied().collect())
                .collect();
            pushed == restricted
        };
        Ok(BijectionReport { pass: bijective && homeo, source_points: qs.len(), target_points: v.len() })
    }

    pub fn to_json(&self) -> SpectrumJson {
        let r = self.ring();
        let names = |s: &BTreeSet<usize>| s.iter().map(|&a| r.name(a).to_string()).collect();
        SpectrumJson {
            points: self
                .points
                .iter()
                .enumerate()
                .map(|(i, p)| PointJson {
                    classes: p.to_json(r).classes,
                    i_t: names(&self.it[i]),
                    i_g: names(&self.ig[i]),
                    flags: self.lattice.classify(p).into_iter().collect(),
                })
                .collect(),
            hasse: self.hasse(),
            krull_dim: self.krull_dim(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Irreducibility {
    pub algebraic: bool,
    pub topological: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StalkReport {
    pub size: usize,
    pub local: bool,
    pub residue_semifield: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NullstellensatzReport {
    pub pass: bool,
    /// No point contains the congruence; the radical is the all-pairs relation.
    pub vacuous: bool,
    pub points_over: usize,
    pub mismatches: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KrullReport {
    pub pass: bool,
    pub grad: Option<String>,
    pub intersection: String,
    pub srad_empty_agrees: bool,
    pub srad_g0_agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiCompactReport {
    pub pass: bool,
    pub covers_checked: usize,
    pub largest_irredundant_subcover: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub pass: bool,
    pub source_points: usize,
    pub target_points: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointJson {
    pub classes: Vec<Vec<String>>,
    pub i_t: Vec<String>,
    pub i_g: Vec<String>,
    pub flags: Vec<Flag>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumJson {
    pub points: Vec<PointJson>,
    pub hasse: Vec<(usize, usize)>,
    pub krull_dim: usize,
}

/// `srad(E)` with `E` given by element names' indices, as a convenience.
pub fn srad(r: &FiniteNuSemiring, e: &BTreeSet<usize>, bound: usize) -> Result<RadicalValue, SpectraError> {
    Ok(Lattice::new(r, bound)?.crad(&ghostify(r, e)))
}
