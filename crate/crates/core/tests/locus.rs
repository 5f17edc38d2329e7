mod common;

use rand::Rng;
use supertrop::kernel::{q, qi, RatElem, Q};
use supertrop::locus::*;
use supertrop::parse::parse_poly_in;
use supertrop::random;
use supertrop::svg::{closed_path_count, render_svg};
use supertrop::TropPoly;

fn polys(src: &[&str]) -> Vec<TropPoly> {
    src.iter().map(|s| parse_poly_in(s, 2).unwrap()).collect()
}

fn complex(src: &[&str]) -> LocusComplex {
    let e = polys(src);
    locus2d(&e, &Box2::default_for(&e)).unwrap()
}

fn elliptic(alpha: &str) -> LocusComplex {
    complex(&[&format!("x^2*y + x*y^2 + {alpha}*x*y + 0")])
}

fn triangle() -> LocusComplex {
    complex(&["2v + x", "2v + y", "0 + -2v*x*y"])
}

fn tp(x: Q, y: Q) -> [RatElem; 2] {
    [RatElem::tan(x), RatElem::tan(y)]
}

#[test]
fn membership_examples() {
    let f = polys(&["x + y + 0"]);
    assert!(z_member(&f, &tp(qi(0), qi(0))));
    assert!(!z_member(&f, &tp(qi(1), qi(0))));
    assert!(z_member(&f, &tp(qi(1), qi(1))));
    let ghostly = polys(&["3v*x^2 + 1v*y + -2v"]);
    let mut rng = common::rng(31);
    for _ in 0..50 {
        assert!(z_member(&ghostly, &[random::rat_elem(&mut rng), random::rat_elem(&mut rng)]));
    }
}

#[test]
fn input_errors() {
    let b = Box2::square(qi(1)).unwrap();
    assert!(matches!(locus2d(&[], &b), Err(LocusError::EmptySet)));
    assert!(matches!(locus2d(&polys(&["x + 1"])[..].iter().map(|f| f.with_nvars(3)).collect::<Vec<_>>(), &b), Err(LocusError::NotBivariate(3))));
    assert!(Box2::new(qi(1), qi(1), qi(0), qi(2)).is_err());
}

#[test]
fn tangible_elliptic_curve_is_one_dimensional_with_one_cycle() {
    let l = elliptic("2");
    let s = l.summary();
    assert_eq!(s.ghost_faces, 0);
    assert_eq!(s.curve_cycles, 1);
    assert_eq!(s.boundary_hits, 3);
    let cyc = l.curve_cycles();
    assert_eq!(cyc.len(), 1);
    let mut got = corners(&cyc[0]);
    got.sort();
    assert_eq!(got, vec![(qi(-4), qi(2)), (qi(2), qi(-4)), (qi(2), qi(2))]);
    assert_eq!(l.grid_disagreements(101), 0);
}

#[test]
fn ghost_alpha_gives_a_filled_region() {
    let l = elliptic("2v");
    let s = l.summary();
    assert_eq!(s.ghost_components, 1);
    assert_eq!(s.curve_cycles, 0);
    assert_eq!(s.boundary_hits, 3);
    let comp = &l.ghost_components()[0];
    let mut got = corners(&l.component_boundary(comp));
    got.sort();
    assert_eq!(got, vec![(qi(-4), qi(2)), (qi(2), qi(-4)), (qi(2), qi(2))]);
    assert_eq!(l.grid_disagreements(101), 0);
}

#[test]
fn binomial_set_is_a_filled_triangle() {
    let l = triangle();
    let s = l.summary();
    assert_eq!(s.ghost_components, 1);
    assert_eq!(s.component_corners, vec![3]);
    assert_eq!(s.curve_edges, 0);
    let mut got = corners(&l.component_boundary(&l.ghost_components()[0]));
    got.sort();
    assert_eq!(got, vec![(qi(0), qi(2)), (qi(2), qi(0)), (qi(2), qi(2))]);
    assert_eq!(l.grid_disagreements(101), 0);
}

#[test]
fn random_interior_points_match_witness_labels() {
    let mut rng = common::rng(32);
    let mut cases = vec![elliptic("2"), elliptic("2v"), triangle()];
    for _ in 0..6 {
        let e = vec![random::poly(&mut rng, 2, 4, 2)];
        cases.push(locus2d(&e, &Box2::default_for(&e)).unwrap());
    }
    for l in &cases {
        for c in &l.cells {
            let label = |p: &Point| z_member(&l.source, &tp(p.0.clone(), p.1.clone()));
            let want = c.label == Region::GhostRegion;
            assert_eq!(label(&c.witness), want);
            for _ in 0..5 {
                let p = match c.kind {
                    CellKind::Vertex => c.polygon[0].clone(),
                    CellKind::Edge => {
                        let t = q(rng.gen_range(1..100), 100);
                        let (a, b) = (&c.polygon[0], &c.polygon[1]);
                        (&a.0 + (&b.0 - &a.0) * &t, &a.1 + (&b.1 - &a.1) * &t)
                    }
                    CellKind::Face => {
                        // a random strictly positive convex combination of the corners
                        let w: Vec<Q> = c.polygon.iter().map(|_| qi(rng.gen_range(1..20))).collect();
                        let tot: Q = w.iter().sum();
                        let x = c.polygon.iter().zip(&w).map(|(p, w)| &p.0 * w).sum::<Q>() / &tot;
                        let y = c.polygon.iter().zip(&w).map(|(p, w)| &p.1 * w).sum::<Q>() / &tot;
                        (x, y)
                    }
                };
                assert_eq!(label(&p), want, "{:?} at {p:?}", c.kind);
            }
        }
    }
}

#[test]
fn cells_partition_the_box() {
    for l in [elliptic("2"), triangle()] {
        let area: Q = l
            .cells_of(CellKind::Face)
            .map(|(_, c)| {
                let n = c.polygon.len();
                (0..n)
                    .map(|i| {
                        let (a, b) = (&c.polygon[i], &c.polygon[(i + 1) % n]);
                        &a.0 * &b.1 - &b.0 * &a.1
                    })
                    .sum::<Q>()
                    / qi(2)
            })
            .sum();
        let b = &l.bbox;
        assert_eq!(area, (&b.xmax - &b.xmin) * (&b.ymax - &b.ymin));
        let s = l.summary();
        // Euler characteristic of a disk
        assert_eq!(s.vertices as i64 - s.edges as i64 + s.faces as i64, 1);
    }
}

#[test]
fn grid_oracle_on_random_sets() {
    let mut rng = common::rng(33);
    for _ in 0..4 {
        let k = rng.gen_range(1..=2);
        let e: Vec<TropPoly> = (0..k).map(|_| random::poly(&mut rng, 2, 4, 2)).collect();
        let l = locus2d(&e, &Box2::default_for(&e)).unwrap();
        assert_eq!(l.grid_disagreements(101), 0);
    }
}

#[test]
fn svg_output() {
    let a = render_svg(&elliptic("2"));
    assert_eq!(a, render_svg(&elliptic("2")));
    assert_eq!(closed_path_count(&a, "ghost-cycle"), 1);
    assert_eq!(closed_path_count(&a, "ghost-face"), 0);
    let t = render_svg(&triangle());
    assert_eq!(closed_path_count(&t, "ghost-face"), 1);
    let empty = complex(&["x + 0"]).cells.iter().any(|c| c.kind == CellKind::Face && c.label == Region::GhostRegion);
    assert!(!empty);
    let none = render_svg(&complex(&["x*y + 0"]).clone());
    assert!(none.contains("class=\"axes\""));
    let blank = locus2d(&polys(&["x + 0"]), &Box2::new(qi(1), qi(2), qi(1), qi(2)).unwrap()).unwrap();
    let s = render_svg(&blank);
    assert!(!s.contains("ghost-"), "{s}");
}

#[test]
fn json_lists_cells_and_box() {
    let j = serde_json::to_value(triangle().to_json()).unwrap();
    assert!(j["cells"].as_array().unwrap().len() > 10);
    assert!(j["box"].is_object() || j["box"].is_array());
    let kinds: Vec<&str> = j["cells"].as_array().unwrap().iter().map(|c| c["kind"].as_str().unwrap()).collect();
    assert!(kinds.contains(&"face") && kinds.contains(&"edge") && kinds.contains(&"vertex"));
}
