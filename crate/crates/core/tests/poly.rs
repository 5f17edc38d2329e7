mod common;

use proptest::prelude::*;
use rand::Rng;
use supertrop::kernel::{q, qi, NuElement, RatElem, Q};
use supertrop::parse::{parse_poly, parse_poly_in};
use supertrop::poly::{product, Essentiality, Factor, PolyError, TropPoly};
use supertrop::random;

fn p(s: &str) -> TropPoly {
    parse_poly(s).unwrap()
}

fn p2(s: &str) -> TropPoly {
    parse_poly_in(s, 2).unwrap()
}

fn t(n: i64) -> RatElem {
    RatElem::tan_int(n)
}

#[test]
fn eval_examples() {
    let f = p("x^2 + 2*x + 1");
    assert_eq!(f.p_eval(&[t(0)]).unwrap(), t(2));
    let g = p("x + 3");
    assert_eq!(g.p_eval(&[t(3)]).unwrap(), RatElem::gho_int(3));
    assert_eq!(f.p_eval(&[NuElement::Zero]).unwrap(), t(1));
    assert_eq!(f.p_eval(&[RatElem::gho_int(5)]).unwrap(), RatElem::gho_int(10));
    assert!(matches!(f.p_eval(&[t(0), t(1)]), Err(PolyError::Dimension { .. })));
}

#[test]
fn add_mul_examples() {
    let a = q(5, 2);
    let lin = TropPoly::univariate([(RatElem::one(), 1), (RatElem::tan(a.clone()), 0)]);
    let sq = lin.p_mul(&lin).unwrap();
    let expect = TropPoly::univariate([
        (RatElem::one(), 2),
        (RatElem::gho(a.clone()), 1),
        (RatElem::tan(&a + &a), 0),
    ]);
    assert_eq!(sq, expect);
    assert_eq!(lin.p_add(&TropPoly::zero(1)).unwrap(), lin);
    let lhs = p("(x+y+0)*(x+y+x*y)");
    assert_eq!(lhs, p("x^2*y + x*y^2 + x^2 + y^2 + 0v*x*y + x + y"));
    assert!(matches!(lin.p_mul(&p2("x")), Err(PolyError::Dimension { .. })));
}

#[test]
fn essentiality_examples() {
    let f = p("x^2 + 2*x + 1");
    assert!(f.essential_exponents().values().all(|e| *e == Essentiality::StrictlyEssential));
    let g = p("x^2 + 0*x + 1");
    assert_eq!(g.essentiality_of(&vec![1]), Essentiality::Unreachable);
    let h = p("x^2 + 3v*x + 6");
    assert_eq!(h.essentiality_of(&vec![1]), Essentiality::TieOnly);
    assert_eq!(h.essentiality_of(&vec![2]), Essentiality::StrictlyEssential);
}

#[test]
fn essentiality_matches_hull_oracle() {
    let mut rng = common::rng(21);
    for _ in 0..300 {
        let f = random::poly(&mut rng, 1, 7, 8);
        let pts: Vec<(i64, Q)> = f.terms().iter().map(|(e, c)| (e[0] as i64, c.value().unwrap().clone())).collect();
        for (i, (e, _)) in f.terms().iter().enumerate() {
            let expect = match common::hull_class(&pts, i) {
                0 => Essentiality::StrictlyEssential,
                1 => Essentiality::TieOnly,
                _ => Essentiality::Unreachable,
            };
            assert_eq!(f.essentiality_of(e), expect, "{f} at {e:?}");
        }
    }
}

#[test]
fn strict_witness_is_a_strict_point() {
    let mut rng = common::rng(22);
    for _ in 0..100 {
        let f = random::poly(&mut rng, 2, 6, 3);
        for e in f.terms().keys() {
            if let Some(x) = f.strict_witness(e) {
                let at = |ex: &Vec<u32>| f.coeff(ex).value().unwrap() + qi(ex[0] as i64) * &x[0] + qi(ex[1] as i64) * &x[1];
                let mine = at(e);
                assert!(f.terms().keys().filter(|o| *o != e).all(|o| at(o) < mine));
            }
        }
    }
}

#[test]
fn canonicalize_examples() {
    assert_eq!(p("x^2 + 0*x + 1").canonicalize().poly, p("x^2 + 1"));
    let h = p("x^2 + 3v*x + 6");
    assert_eq!(h.canonicalize().poly, h);
    let c = p("x^2 + 2*x + 1").canonicalize();
    assert_eq!(c.poly.canonicalize(), c);
    // a tie-only tangible term is ghosted
    assert_eq!(p("x^2 + 3*x + 6").canonicalize().poly, h);
}

#[test]
fn canonical_form_agrees_with_grid_oracle() {
    let mut rng = common::rng(23);
    for _ in 0..25 {
        let f = random::poly(&mut rng, 2, 6, 3);
        let c = f.canonicalize().poly;
        assert_eq!(common::grid_oracle_disagreements(&f, &c, 25, 101), 0, "{f}");
    }
}

#[test]
fn func_equal_examples() {
    assert!(p("(x+y+0)*(x+y+x*y)").func_equal(&p("(x+0)*(y+0)*(x+y)")));
    assert!(p("(0v*x+0v*y+0)^2").func_equal(&p("(0v*x+y+0)*(x+0v*y+0)")));
    assert!(p("x^2 + 1").func_equal(&p("x^2 + 0*x + 1")));
    assert!(!p("x + 1").func_equal(&p("x + 1v")));
    assert!(!p("x + 1").func_equal(&p("x + 2")));
}

#[test]
fn func_equal_is_a_congruence() {
    let mut rng = common::rng(24);
    for _ in 0..60 {
        let f = random::poly(&mut rng, 2, 4, 2);
        // a term strictly below the segment between two existing terms
        let ts: Vec<_> = f.terms().iter().collect();
        let mut g = f.clone();
        for (i, (e1, c1)) in ts.iter().enumerate() {
            for (e2, c2) in &ts[i + 1..] {
                let mid: Vec<u32> = e1.iter().zip(e2.iter()).map(|(a, b)| a + b).collect();
                if mid.iter().all(|m| m % 2 == 0) {
                    let mid: Vec<u32> = mid.iter().map(|m| m / 2).collect();
                    let low = c1.value().unwrap().min(c2.value().unwrap()) - qi(1);
                    if f.terms().get(&mid).is_none() && g == f {
                        g = f.p_add(&TropPoly::monomial(RatElem::tan(low), mid)).unwrap();
                    }
                }
            }
        }
        assert!(f.func_equal(&g), "{f} vs {g}");
        let h = random::poly(&mut rng, 2, 3, 2);
        assert!(f.p_mul(&h).unwrap().func_equal(&g.p_mul(&h).unwrap()));
        assert!(f.p_add(&h).unwrap().func_equal(&g.p_add(&h).unwrap()));
        let c = f.canonicalize().poly;
        assert!(f.func_equal(&c) && c.func_equal(&f));
    }
}

#[test]
fn evaluation_is_a_homomorphism() {
    let mut rng = common::rng(25);
    for _ in 0..100 {
        let f = random::poly(&mut rng, 2, 4, 3);
        let g = random::poly(&mut rng, 2, 4, 3);
        let sum = f.p_add(&g).unwrap();
        let prod = f.p_mul(&g).unwrap();
        for _ in 0..10 {
            let x = [random::rat_elem(&mut rng), random::rat_elem(&mut rng)];
            let (fx, gx) = (f.p_eval(&x).unwrap(), g.p_eval(&x).unwrap());
            assert_eq!(sum.p_eval(&x).unwrap(), &fx + &gx);
            assert_eq!(prod.p_eval(&x).unwrap(), &fx * &gx);
        }
    }
}

#[test]
fn factor_examples() {
    let a = qi(2);
    let sq = p("x^2 + 2v*x + 4");
    let fs = sq.factor_univariate().unwrap();
    let linears: Vec<_> = fs.iter().filter(|f| **f == Factor::Linear(a.clone())).collect();
    assert_eq!(linears.len(), 2);
    assert!(product(&fs).func_equal(&sq));

    let f = p("x^2 + 3*x + 1");
    let mut roots: Vec<Q> = f
        .factor_univariate()
        .unwrap()
        .into_iter()
        .filter_map(|x| match x {
            Factor::Linear(r) => Some(r),
            _ => None,
        })
        .collect();
    roots.sort();
    assert_eq!(roots, vec![qi(-2), qi(3)]);

    let quad = p("x^2 + 3v*x + 4");
    let fs = quad.factor_univariate().unwrap();
    assert!(fs.contains(&Factor::Quadratic { b: qi(3), a: qi(4) }), "{fs:?}");
    assert!(matches!(p("5").factor_univariate(), Err(PolyError::NotFactorable)));
    assert!(matches!(p2("x+y").factor_univariate(), Err(PolyError::NotUnivariate(2))));
}

#[test]
fn factorization_multiplies_back() {
    let mut rng = common::rng(26);
    for _ in 0..200 {
        let f = random::canonical_univariate(&mut rng, 6);
        let fs = f.factor_univariate().unwrap();
        assert!(product(&fs).func_equal(&f), "{f} -> {fs:?}");
    }
}

#[test]
fn tangible_root_examples() {
    assert_eq!(p("x + 4").tangible_root().unwrap(), Some(qi(4)));
    assert_eq!(p("3*x^2").tangible_root().unwrap(), None);
    let r = p("x^2 + 3*x + 1").tangible_root().unwrap().unwrap();
    assert!(r == qi(3) || r == qi(-2));
    let mut rng = common::rng(27);
    for _ in 0..200 {
        let f = random::canonical_univariate(&mut rng, 5);
        let key = f.canonicalize().function_key();
        if key.len() == 1 && key.values().all(|c| c.is_tangible()) {
            assert_eq!(f.tangible_root().unwrap(), None);
            continue;
        }
        let r = f.tangible_root().unwrap().expect("non-monomial has a root");
        assert!(f.p_eval(&[RatElem::tan(r)]).unwrap().in_ghost_ideal());
    }
}

#[test]
fn frobenius_examples() {
    let f = p("x + 1");
    let fr = f.frobenius_pow(2);
    assert_eq!(fr, p("x^2 + 2"));
    assert!(fr.func_equal(&f.p_mul(&f).unwrap()));
    assert_eq!(f.frobenius_pow(1), f);
    let one = p("x + 0");
    assert!(one.frobenius_pow(2).func_equal(&p("x^2 + 0")));
    let mut rng = common::rng(28);
    for _ in 0..60 {
        let nv = rng.gen_range(1..=2);
        let f = random::poly(&mut rng, nv, 3, 3);
        for m in 1..=4 {
            assert!(f.frobenius_pow(m).func_equal(&f.pow(m)), "{f} m={m}");
        }
    }
}

#[test]
fn print_parse_round_trip() {
    let mut rng = common::rng(29);
    for _ in 0..200 {
        let nv = rng.gen_range(1..=4);
        let f = random::poly(&mut rng, nv, 5, 4);
        let text = f.to_string();
        assert_eq!(parse_poly_in(&text, nv).unwrap(), f, "{text}");
    }
    assert_eq!(p("3v*x*y").to_string(), "3v*x*y");
    assert!(p("-inf").is_zero());
}

#[test]
fn parse_errors_carry_positions() {
    for (bad, pos) in [("x +", 3), ("x ^ 2", 2), ("3/0", 2), ("x1 + y", 5), ("x0", 0), ("(x + 1", 6), ("x $ 1", 2)] {
        let e = parse_poly(bad).unwrap_err();
        assert_eq!(e.pos, pos, "{bad}: {e}");
    }
}

proptest! {
    #[test]
    fn canonicalize_is_idempotent(coeffs in prop::collection::vec((-20i64..20, 1i64..4, any::<bool>()), 1..6)) {
        let f = TropPoly::univariate(coeffs.iter().enumerate().map(|(i, (n, d, g))| {
            let v = q(*n, *d);
            (if *g { RatElem::gho(v) } else { RatElem::tan(v) }, i as u32)
        }));
        let c = f.canonicalize();
        prop_assert_eq!(c.poly.canonicalize().poly, c.poly.clone());
        prop_assert!(c.poly.func_equal(&f));
    }
}
