mod common;

use std::collections::BTreeSet;

use supertrop::congr::*;
use supertrop::finite::{bundled_suite, FiniteNuSemiring};
use supertrop::spectra::*;

fn suite() -> Vec<(String, FiniteNuSemiring)> {
    common::instance_suite()
}

fn spec(r: &FiniteNuSemiring) -> Spectrum {
    Spectrum::new(r, DEFAULT_BOUND).unwrap()
}

/// Subsets of `0..n` as bit masks.
fn subsets(n: usize) -> impl Iterator<Item = BTreeSet<usize>> {
    (0u64..(1 << n)).map(move |m| (0..n).filter(|i| m >> i & 1 == 1).collect())
}

#[test]
fn superboolean_has_a_single_point() {
    let s = spec(&FiniteNuSemiring::superboolean());
    assert_eq!(s.len(), 1);
    assert!(s.points[0].is_diagonal());
    assert_eq!(s.krull_dim(), 0);
    assert!(s.hasse().is_empty());
}

#[test]
fn points_are_exactly_the_brute_force_primes() {
    for (name, r) in suite() {
        let s = spec(&r);
        let brute: BTreeSet<Congruence> = common::brute_congruences(&r)
            .iter()
            .map(|l| Congruence::from_labels(l))
            .filter(|c| {
                let ig = c.i_g(&r);
                let it = c.i_t(&r);
                r.units().is_subset(&it)
                    && r.elements().all(|a| !r.is_prudent(a) || it.contains(&a) || ig.contains(&a))
                    && r.elements().all(|a| r.elements().all(|b| !ig.contains(&r.mul(a, b)) || ig.contains(&a) || ig.contains(&b)))
            })
            .filter(|c| is_l_cong(&r, c))
            .collect();
        let mine: BTreeSet<Congruence> = s.points.iter().cloned().collect();
        assert_eq!(mine, brute, "{name}");
        assert!(!s.is_empty(), "{name}");
    }
}

#[test]
fn vanishing_sets_and_basic_opens() {
    for (name, r) in suite() {
        let s = spec(&r);
        let n = r.len();
        for f in r.elements() {
            let v = s.v_elem(f);
            let d = s.d_set(f);
            assert!(v.is_disjoint(&d));
            assert_eq!(v.len() + d.len(), s.len());
            // D(f^k) = D(f)
            let mut pw = f;
            for _ in 0..3 {
                pw = r.mul(pw, f);
                assert_eq!(s.d_set(pw), d, "{name}");
            }
            for g in r.elements() {
                let both: BTreeSet<usize> = d.intersection(&s.d_set(g)).copied().collect();
                assert_eq!(s.d_set(r.mul(f, g)), both, "{name} {f} {g}");
            }
        }
        // V of a ghostified set equals V of the set itself
        for e in subsets(n).take(64) {
            assert_eq!(s.v_cong(&ghostify(&r, &e)), s.v_elems(&e), "{name} {e:?}");
        }
        assert_eq!(s.v_elems(&BTreeSet::new()), s.all());
        assert!(s.v_elems(&r.elements().collect()).is_empty());
        assert_eq!(s.v_elems(&r.g0_set()), s.all());
    }
}

#[test]
fn ideal_of_vanishing_set_is_the_radical() {
    for (name, r) in suite() {
        let s = spec(&r);
        for e in subsets(r.len()).take(64) {
            let v = s.v_elems(&e);
            let (i, improper) = s.i_of(&v);
            match s.lattice.srad(&e) {
                RadicalValue::Empty => assert!(improper && v.is_empty(), "{name} {e:?}"),
                RadicalValue::Cong(c) => {
                    assert!(!improper);
                    assert_eq!(i, c, "{name} {e:?}");
                }
            }
        }
        assert!(s.i_of(&BTreeSet::new()).0.num_classes() == 1);
    }
}

#[test]
fn closures_agree() {
    for (name, r) in suite() {
        let s = spec(&r);
        let closed = s.closed_sets();
        assert!(closed.contains(&s.all()) && closed.contains(&BTreeSet::new()));
        for a in &closed {
            for b in &closed {
                let u: BTreeSet<usize> = a.union(b).copied().collect();
                assert!(closed.contains(&u), "{name}: finite unions stay closed");
            }
        }
        for y in subsets(s.len()) {
            let c = s.closure_of(&y);
            assert_eq!(c, s.topological_closure(&y), "{name} {y:?}");
            assert!(y.is_subset(&c));
            assert_eq!(s.closure_of(&c), c);
        }
    }
}

#[test]
fn irreducibility_procedures_agree() {
    for (name, r) in suite() {
        let s = spec(&r);
        for y in s.closed_sets() {
            let ir = s.irreducible(&y).unwrap();
            assert_eq!(ir.algebraic, ir.topological, "{name} {y:?}");
            if y.len() == 1 {
                assert!(ir.topological);
            }
        }
        let singleton_closures: Vec<_> = (0..s.len()).map(|x| s.closure_of(&[x].into_iter().collect())).collect();
        for c in singleton_closures {
            assert!(s.irreducible(&c).unwrap().algebraic);
        }
        if s.len() > 1 {
            let odd: BTreeSet<usize> = [s.len() - 1].into_iter().collect();
            if !s.is_closed(&odd) {
                assert_eq!(s.irreducible(&odd), Err(SpectraError::NotClosed));
            }
        }
    }
}

#[test]
fn krull_dimension_from_brute_chains() {
    for (name, r) in suite() {
        let s = spec(&r);
        let k = s.len();
        // longest chain of admissible steps by dynamic programming over a topological order
        let step = |p: usize, q: usize| {
            p != q
                && s.points[p].is_subset_of(&s.points[q])
                && s.i_t(q).is_subset(s.i_t(p))
                && s.i_t(q) != s.i_t(p)
        };
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&x| std::cmp::Reverse(s.points[x].num_classes()));
        let mut best = vec![0usize; k];
        for &q in &order {
            for &p in &order {
                if step(p, q) {
                    best[q] = best[q].max(best[p] + 1);
                }
            }
        }
        assert_eq!(s.krull_dim(), best.iter().copied().max().unwrap_or(0), "{name}");
        let hasse = s.hasse();
        for (a, b) in &hasse {
            assert!(s.points[*a].is_subset_of(&s.points[*b]));
        }
    }
}

#[test]
fn nullstellensatz_holds() {
    for (name, r) in suite() {
        let s = spec(&r);
        let lat = Lattice::new(&r, DEFAULT_BOUND).unwrap();
        for th in lat.q_congs() {
            let rep = s.nullstellensatz_check(&th).unwrap();
            assert!(rep.pass, "{name}: {:?}", rep.mismatches);
            assert_eq!(rep.points_over, s.v_cong(&th).len());
        }
    }
}

#[test]
fn krull_and_quasicompact_checks() {
    for (name, r) in suite() {
        let s = spec(&r);
        let k = s.krull_check();
        assert!(k.pass && k.srad_empty_agrees && k.srad_g0_agrees, "{name}");
        for g in r.elements() {
            let qc = s.quasicompact_check(g);
            assert!(qc.pass);
            assert!(qc.covers_checked >= 1);
            assert!(qc.largest_irredundant_subcover <= s.d_set(g).len().max(1), "{name}");
        }
    }
}

#[test]
fn localization_and_quotient_correspondences() {
    for (name, r) in suite() {
        let s = spec(&r);
        for c in [BTreeSet::from([r.one()]), r.units()] {
            let rep = s.localization_bijection_check(&c, DEFAULT_BOUND).unwrap();
            assert!(rep.pass, "{name}");
            assert_eq!(rep.source_points, rep.target_points);
        }
        let lat = Lattice::new(&r, DEFAULT_BOUND).unwrap();
        for th in lat.q_congs() {
            let rep = s.quotient_homeomorphism_check(&th, DEFAULT_BOUND).unwrap();
            assert!(rep.pass, "{name}");
            assert_eq!(rep.target_points, s.v_cong(&th).len());
        }
    }
}

#[test]
fn section_monoid_properties() {
    for (name, r) in suite() {
        let s = spec(&r);
        for f in r.elements() {
            let sf = s.s_of_f(f).unwrap();
            assert!(sf.contains(&r.one()));
            for &a in &sf {
                assert!(r.is_prudent(a), "{name}");
                for &b in &sf {
                    assert!(sf.contains(&r.mul(a, b)));
                }
            }
            let zone = s.focal_zone(f).unwrap();
            assert!(zone.is_subset(&s.d_set(f)));
            assert_eq!(s.is_nu_strict(f).unwrap(), zone == s.d_set(f));
            let sec = s.sections(f).unwrap();
            assert!(sec.ring.validate().ok, "{name}");
        }
        let sec = s.sections(r.one()).unwrap();
        assert!(sec.ring.is_isomorphic(&r), "{name}: global sections");
    }
}

#[test]
fn stalks_are_local() {
    for (name, r) in bundled_suite() {
        let s = spec(&r);
        for x in 0..s.len() {
            let rep = s.stalk_report(x, DEFAULT_BOUND).unwrap();
            assert!(rep.local && rep.residue_semifield, "{name} at {x}");
            assert!(rep.size >= 1);
        }
    }
}

#[test]
fn json_output() {
    let r = FiniteNuSemiring::str_chain(2);
    let s = spec(&r);
    let j = serde_json::to_value(s.to_json()).unwrap();
    assert_eq!(j["points"].as_array().unwrap().len(), s.len());
    assert_eq!(j["krull_dim"], 0);
    let a = serde_json::to_string(&s.to_json()).unwrap();
    assert_eq!(a, serde_json::to_string(&spec(&r).to_json()).unwrap());
}
