//! Writing an even permutation as a product of two `n`-cycles from chosen
//! `A_n` classes.
//!
//! Surplus fixed points are split off so that the remaining problem lives
//! in `A_m` with `m` odd and at most one fixed point (or `m` = 7 or 5 for
//! elements with very small support). There a random element `c'` of the
//! first class is drawn until `c'^-1 h` lands in the second class, and the
//! solution is lifted back by threading the split-off points through both
//! cycles.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classalgebra::frobenius_count;
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::permutations::{an_class_of, class_representative, random_in_class, ClassLabel, Permutation, SplitSign};

pub const DEFAULT_SEARCH_BUDGET: u64 = 1_000_000;

// Base degrees up to this are certified with the character table first.
const CERTIFY_LIMIT: usize = 11;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub seed: u64,
    pub budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { seed: 0, budget: DEFAULT_SEARCH_BUDGET }
    }
}

/// A factorization `g = c d` into `n`-cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcycleCover {
    pub c: Permutation,
    pub d: Permutation,
    /// Degree of the base problem that was searched.
    pub base_degree: usize,
    /// Random draws used.
    pub samples: u64,
}

/// Base degree for an element of `A_n` (`n` odd) with `k` fixed points.
pub fn base_degree(n: usize, k: usize) -> usize {
    if n <= 5 {
        n
    } else if k + 6 <= n {
        n - 2 * (k / 2)
    } else if k + 3 == n {
        5
    } else {
        7
    }
}

/// `c' = (c_1, ..., c_{m-1}, m)` becomes `(c_1, ..., c_{m-1}, m, m+1, ..., n)`.
pub fn lift_first(c: &Permutation, n: usize) -> Result<Permutation> {
    let m = c.degree();
    let mut terms: Vec<usize> = c.orbit(m).into_iter().cycle().skip(1).take(m).collect();
    terms.extend(m + 1..=n);
    Permutation::cycle(n, &terms)
}

/// `d' = (m, d_1, ..., d_{m-1})` becomes `(n, n-1, ..., m, d_1, ..., d_{m-1})`.
pub fn lift_second(d: &Permutation, n: usize) -> Result<Permutation> {
    let m = d.degree();
    let mut terms: Vec<usize> = (m..=n).rev().collect();
    terms.extend(d.orbit(m).into_iter().skip(1));
    Permutation::cycle(n, &terms)
}

fn restrict(h: &Permutation, m: usize) -> Result<Permutation> {
    Permutation::from_images(&h.images()[..m])
}

/// `c` in class `c_label`, `d` in class `d_label`, both `n`-cycles, with
/// `c d = g`.
pub fn cover_with_ncycles(g: &Permutation, c_label: &ClassLabel, d_label: &ClassLabel, cfg: &SearchConfig) -> Result<NcycleCover> {
    let n = g.degree();
    if n < 5 || n.is_multiple_of(2) {
        return Err(Error::Infeasible(format!("n-cycle covering needs odd n >= 5, got {n}")));
    }
    let ncycle = Partition::row(n);
    for l in [c_label, d_label] {
        if l.n() != n {
            return Err(Error::DegreeMismatch(n, l.n()));
        }
        if *l.cycle_type() != ncycle {
            return Err(Error::InvalidLabel(format!("{l} is not a class of {n}-cycles")));
        }
    }
    let target = an_class_of(g)?;
    if g.is_identity() {
        return Err(Error::Infeasible("the identity is not a product of two n-cycles from given classes in general".into()));
    }

    let m = base_degree(n, g.fix_count());
    // tau sends the moved points, then the fixed points, to 1, 2, ...
    let mut order: Vec<usize> = (1..=n).filter(|&p| g.apply(p) != p).collect();
    order.extend((1..=n).filter(|&p| g.apply(p) == p));
    let mut images = vec![0; n];
    for (i, &p) in order.iter().enumerate() {
        images[p - 1] = i + 1;
    }
    let tau = Permutation::from_images(&images)?;
    let tau_inv = tau.inverse();
    let h = restrict(&g.conjugate(&tau)?, m)?;

    // the lifts and the relabeling act as bijections on the two labels
    let first_label = |s: SplitSign| -> Result<ClassLabel> {
        let rep = class_representative(&ClassLabel::new(Partition::row(m), Some(s))?);
        an_class_of(&lift_first(&rep, n)?.conjugate(&tau_inv)?)
    };
    let second_label = |s: SplitSign| -> Result<ClassLabel> {
        let rep = class_representative(&ClassLabel::new(Partition::row(m), Some(s))?);
        an_class_of(&lift_second(&rep, n)?.conjugate(&tau_inv)?)
    };
    let pick = |want: &ClassLabel, f: &dyn Fn(SplitSign) -> Result<ClassLabel>| -> Result<ClassLabel> {
        let s = if f(SplitSign::Plus)? == *want { SplitSign::Plus } else { SplitSign::Minus };
        ClassLabel::new(Partition::row(m), Some(s))
    };
    let c_base = pick(c_label, &first_label)?;
    let d_base = pick(d_label, &second_label)?;
    let h_label = an_class_of(&h)?;

    let not_coverable = || Error::NotCoverable {
        c: c_label.to_string(),
        d: d_label.to_string(),
        target: target.to_string(),
    };
    if m <= CERTIFY_LIMIT && frobenius_count(&c_base, &d_base, &h_label)? == 0u32.into() {
        return Err(not_coverable());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let base_cycle = Partition::row(m);
    for i in 0..cfg.budget {
        let c1 = random_in_class(&c_base, &mut rng);
        let d1 = &c1.inverse() * &h;
        if d1.cycle_type() != base_cycle || an_class_of(&d1)? != d_base {
            continue;
        }
        let c = lift_first(&c1, n)?.conjugate(&tau_inv)?;
        let d = lift_second(&d1, n)?.conjugate(&tau_inv)?;
        if &c * &d != *g || an_class_of(&c)? != *c_label || an_class_of(&d)? != *d_label {
            return Err(Error::Infeasible(format!("lifted factorization of {g} failed its check")));
        }
        return Ok(NcycleCover { c, d, base_degree: m, samples: i + 1 });
    }
    Err(Error::SearchBudgetExceeded { seed: cfg.seed, budget: cfg.budget })
}
