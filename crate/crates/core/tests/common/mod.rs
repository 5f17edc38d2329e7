#![allow(dead_code)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use supertrop::finite::FiniteNuSemiring;
use supertrop::random;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Superboolean, the 2-chain and 3-truncation instances, and ten seeded
/// random tables of size 4 to 6.
pub fn instance_suite() -> Vec<(String, FiniteNuSemiring)> {
    let mut out: Vec<(String, FiniteNuSemiring)> = ["superboolean", "str-chain:2", "str-trunc:3"]
        .iter()
        .map(|g| (g.to_string(), FiniteNuSemiring::generator(g).unwrap()))
        .collect();
    let pool = random::table_pool();
    let mut r = rng(0x5eed);
    for i in 0..10 {
        out.push((format!("random-{i}"), random::table(&mut r, &pool)));
    }
    out
}

/// Every set partition of `0..n` as a label vector.
pub fn all_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for l in 0..=max + 1 {
            cur.push(l);
            go(i + 1, n, cur, max.max(l), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return vec![vec![]];
    }
    let mut cur = vec![0];
    go(1, n, &mut cur, 0, &mut out);
    out
}

/// Direct check of the congruence laws on a label vector.
pub fn respects_ops(r: &FiniteNuSemiring, lab: &[usize]) -> bool {
    let n = r.len();
    for a in 0..n {
        for b in 0..n {
            if lab[a] != lab[b] {
                continue;
            }
            for c in 0..n {
                if lab[r.add(a, c)] != lab[r.add(b, c)] || lab[r.mul(a, c)] != lab[r.mul(b, c)] {
                    return false;
                }
            }
        }
    }
    true
}

/// All congruences of `r` by brute force over partitions.
pub fn brute_congruences(r: &FiniteNuSemiring) -> Vec<Vec<usize>> {
    all_partitions(r.len())
        .into_iter()
        .filter(|lab| respects_ops(r, lab))
        .collect()
}

/// Pairs `(a, b)` with `a < b` in the same class.
pub fn pair_set(lab: &[usize]) -> Vec<(usize, usize)> {
    let n = lab.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if lab[a] == lab[b] {
                out.push((a, b));
            }
        }
    }
    out
}

/// `lab1 ⊆ lab2` as relations.
pub fn refines(lab1: &[usize], lab2: &[usize]) -> bool {
    pair_set(lab1).into_iter().all(|(a, b)| lab2[a] == lab2[b])
}

/// Evaluation oracle over integers: coefficients and coordinates scaled by a
/// common factor, returning `(value, ghost)` or `None` for `-inf`.
pub struct ScaledPoly {
    terms: Vec<(Vec<i64>, i64, bool)>,
}

pub const SCALE: i64 = 240;

impl ScaledPoly {
    pub fn new(f: &supertrop::TropPoly) -> ScaledPoly {
        let terms = f
            .terms()
            .iter()
            .map(|(e, c)| {
                let v = c.value().unwrap() * supertrop::kernel::qi(SCALE);
                assert!(v.is_integer(), "coefficient denominators must divide the scale");
                let v: i64 = v.to_integer().try_into().unwrap();
                (e.iter().map(|&k| k as i64).collect(), v, c.is_ghost())
            })
            .collect();
        ScaledPoly { terms }
    }

    /// `x` holds scaled coordinates and per-coordinate ghost flags.
    pub fn eval(&self, x: &[(i64, bool)]) -> Option<(i64, bool)> {
        let mut best: Option<(i64, bool)> = None;
        for (e, v, g) in &self.terms {
            let mut val = *v;
            let mut ghost = *g;
            for (k, &(xi, xg)) in e.iter().zip(x) {
                val += k * xi;
                ghost |= *k > 0 && xg;
            }
            best = match best {
                None => Some((val, ghost)),
                Some((b, _)) if b == val => Some((b, true)),
                Some((b, _)) if b < val => Some((val, ghost)),
                keep => keep,
            };
        }
        best
    }
}

/// Grid points of `[-lim, lim]` with `k` points per axis where `f` and `g`
/// disagree in value or layer; each coordinate is also tried as a ghost on
/// every tenth grid line.
pub fn grid_oracle_disagreements(f: &supertrop::TropPoly, g: &supertrop::TropPoly, lim: i64, k: i64) -> usize {
    let (sf, sg) = (ScaledPoly::new(f), ScaledPoly::new(g));
    let coord = |i: i64| -> i64 {
        let v = (2 * lim * SCALE * i) / (k - 1) - lim * SCALE;
        assert_eq!((2 * lim * SCALE * i) % (k - 1), 0, "grid step must be exact");
        v
    };
    let mut bad = 0;
    for i in 0..k {
        for j in 0..k {
            let (x, y) = (coord(i), coord(j));
            let mut variants = vec![[(x, false), (y, false)]];
            if i % 10 == 0 && j % 10 == 0 {
                variants.extend([[(x, true), (y, false)], [(x, false), (y, true)], [(x, true), (y, true)]]);
            }
            for p in variants {
                if sf.eval(&p) != sg.eval(&p) {
                    bad += 1;
                }
            }
        }
    }
    bad
}

/// Univariate essentiality from the upper hull of `(i, v_i)`:
/// `0` strict, `1` tie only, `2` unreachable.
pub fn hull_class(points: &[(i64, supertrop::kernel::Q)], i: usize) -> u8 {
    let (xi, vi) = &points[i];
    let mut best: Option<supertrop::kernel::Q> = None;
    for (xj, vj) in points {
        for (xk, vk) in points {
            if xj < xi && xi < xk {
                let t = supertrop::kernel::q(xi - xj, xk - xj);
                let interp = vj + (vk - vj) * t;
                if best.as_ref().is_none_or(|b| interp > *b) {
                    best = Some(interp);
                }
            }
        }
    }
    match best {
        None => 0,
        Some(b) if *vi > b => 0,
        Some(b) if *vi == b => 1,
        _ => 2,
    }
}
