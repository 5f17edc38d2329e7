//! Exact feasibility of systems of strict and non-strict linear inequalities
//! over the rationals by Fourier–Motzkin elimination, with witness extraction
//! by back substitution.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::kernel::Q;

/// `coef · x + constant > 0` when `strict`, otherwise `>= 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Ineq {
    pub coef: Vec<Q>,
    pub constant: Q,
    pub strict: bool,
}

impl Ineq {
    pub fn new(coef: Vec<Q>, constant: Q, strict: bool) -> Self {
        Ineq { coef, constant, strict }
    }

    pub fn holds_at(&self, x: &[Q]) -> bool {
        let v = self.eval(x);
        if self.strict {
            v.is_positive()
        } else {
            !v.is_negative()
        }
    }

    pub fn eval(&self, x: &[Q]) -> Q {
        self.coef
            .iter()
            .zip(x)
            .fold(self.constant.clone(), |acc, (a, b)| acc + a * b)
    }

    /// Scales so the first nonzero coefficient has absolute value one.
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.coef.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for c in self.coef.iter_mut() {
                *c /= &lead;
            }
            self.constant /= &lead;
        }
        self
    }

    fn is_constant(&self) -> bool {
        self.coef.iter().all(|c| c.is_zero())
    }

    fn constant_holds(&self) -> bool {
        if self.strict {
            self.constant.is_positive()
        } else {
            !self.constant.is_negative()
        }
    }
}

/// Removes duplicates and trivially true constant rows; `None` when a
/// constant row is false.
fn tidy(rows: impl IntoIterator<Item = Ineq>) -> Option<Vec<Ineq>> {
    let mut set = BTreeSet::new();
    for r in rows {
        let r = r.normalized();
        if r.is_constant() {
            if !r.constant_holds() {
                return None;
            }
            continue;
        }
        set.insert(r);
    }
    // A non-strict row is implied by an identical strict one.
    let strict: BTreeSet<(Vec<Q>, Q)> = set
        .iter()
        .filter(|r| r.strict)
        .map(|r| (r.coef.clone(), r.constant.clone()))
        .collect();
    Some(
        set.into_iter()
            .filter(|r| r.strict || !strict.contains(&(r.coef.clone(), r.constant.clone())))
            .collect(),
    )
}

fn eliminate(rows: &[Ineq], k: usize) -> Option<Vec<Ineq>> {
    let (mut pos, mut neg, mut out) = (Vec::new(), Vec::new(), Vec::new());
    for r in rows {
        if r.coef[k].is_positive() {
            pos.push(r);
        } else if r.coef[k].is_negative() {
            neg.push(r);
        } else {
            out.push(r.clone());
        }
    }
    for p in &pos {
        for n in &neg {
            let a = p.coef[k].clone();
            let b = -n.coef[k].clone();
            let coef = p
                .coef
                .iter()
                .zip(&n.coef)
                .map(|(x, y)| x * &b + y * &a)
                .collect();
            let constant = &p.constant * &b + &n.constant * &a;
            out.push(Ineq::new(coef, constant, p.strict || n.strict));
        }
    }
    tidy(out)
}

/// Returns a rational point satisfying every row, or `None` if the system is
/// infeasible. All rows must have `nvars` coefficients.
pub fn feasible_point(rows: &[Ineq], nvars: usize) -> Option<Vec<Q>> {
    debug_assert!(rows.iter().all(|r| r.coef.len() == nvars));
    let mut stages = vec![tidy(rows.iter().cloned())?];
    for k in (0..nvars).rev() {
        let next = eliminate(stages.last().unwrap(), k)?;
        stages.push(next);
    }
    // stages[nvars - k] still involves variables 0..=k.
    let mut x = vec![Q::zero(); nvars];
    for k in 0..nvars {
        let sys = &stages[nvars - 1 - k];
        let mut lo: Option<(Q, bool)> = None;
        let mut hi: Option<(Q, bool)> = None;
        for r in sys {
            let a = &r.coef[k];
            if a.is_zero() {
                continue;
            }
            let rest = r
                .coef
                .iter()
                .enumerate()
                .filter(|(i, _)| *i < k)
                .fold(r.constant.clone(), |acc, (i, c)| acc + c * &x[i]);
            let bound = -rest / a;
            if a.is_positive() {
                lo = Some(tighter(lo, bound, r.strict, true));
            } else {
                hi = Some(tighter(hi, bound, r.strict, false));
            }
        }
        x[k] = match (lo, hi) {
            (None, None) => Q::zero(),
            (Some((l, _)), None) => l + Q::one(),
            (None, Some((h, _))) => h - Q::one(),
            (Some((l, ls)), Some((h, hs))) => {
                if l == h && !ls && !hs {
                    l
                } else {
                    (l + h) / Q::from_integer(2.into())
                }
            }
        };
    }
    debug_assert!(rows.iter().all(|r| r.holds_at(&x)));
    Some(x)
}

fn tighter(cur: Option<(Q, bool)>, b: Q, strict: bool, lower: bool) -> (Q, bool) {
    match cur {
        None => (b, strict),
        Some((c, cs)) => {
            if b == c {
                (c, cs || strict)
            } else if (lower && b > c) || (!lower && b < c) {
                (b, strict)
            } else {
                (c, cs)
            }
        }
    }
}

pub fn is_feasible(rows: &[Ineq], nvars: usize) -> bool {
    feasible_point(rows, nvars).is_some()
}
