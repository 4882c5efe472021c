//! Explicit factorizations `gamma * delta` of a prescribed cycle type.
//!
//! Given a cycle type `lambda` (of the factors) and `mu` (of the product),
//! [`construct_witnesses`] returns `gamma`, `delta`, `delta_bar` of type
//! `lambda` with `gamma*delta` and `gamma*delta_bar` of type `mu`, where
//! `delta` and `delta_bar` are conjugate only by odd permutations. When
//! `lambda` splits in `A_n`, one product lies in `C*C` and the other in
//! `C*D`.
//!
//! Outline: `mu` is cut into typed pieces, each non-trivial piece reserves
//! a subinterval of one of the `lambda_j`-blocks, a valid sequence per
//! subinterval spells `delta`, and every long part of `mu` is then grown
//! back from a 4- or 5-orbit two points at a time using points from the
//! free space.

pub mod ncycles;
pub mod packing;
pub mod rebuild;
pub mod sequences;

use serde::Serialize;
use serde_json::json;

pub use ncycles::{cover_with_ncycles, NcycleCover, SearchConfig, DEFAULT_SEARCH_BUDGET};
pub use packing::{greedy_pack, packing_cycle, Interval, PackingPlan};
pub use rebuild::{is_special, rebuild};
pub use sequences::{find_opposite_valid_sequences, SequenceCache, ValidSequence};

use crate::combinatorics::{decompose_subpartitions, Partition, SubpartitionKind, TypedSubpartition};
use crate::error::{Error, Result};
use crate::permutations::{an_class_of, conjugator, ClassLabel, Permutation, SplitSign};

pub const WITNESS_SCHEMA: &str = "anclass.witness/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Require at least `8k + 9` fixed points in `mu`.
    Strict,
    /// Try regardless and report failure.
    BestEffort,
}

#[derive(Clone, Copy, Debug)]
pub struct WitnessOptions {
    pub mode: Mode,
    pub search: SearchConfig,
}

impl Default for WitnessOptions {
    fn default() -> Self {
        WitnessOptions { mode: Mode::Strict, search: SearchConfig::default() }
    }
}

/// Where one piece of `mu` was placed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlacedPiece {
    pub kind: u8,
    pub parts: Partition,
    /// Index of the `lambda` block.
    pub host: usize,
    /// Subinterval in block-local coordinates.
    pub interval: Interval,
    pub sequence: ValidSequence,
    pub opposite: Option<ValidSequence>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "method", rename_all = "kebab-case")]
pub enum Method {
    Packing {
        pieces: Vec<PlacedPiece>,
        /// Index into `pieces` of the piece spelled with its opposite
        /// sequence in `delta_bar`.
        flipped: usize,
        free: Vec<Option<Interval>>,
    },
    /// `mu = 2^2 1^(n-4)`: split the first block off and factor there with
    /// two `lambda_1`-cycles.
    NcycleReduction { seed: u64, base_degree: usize, samples: u64 },
}

/// A verified pair of factorizations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessPair {
    pub lambda: Partition,
    pub mu: Partition,
    pub mode: Mode,
    pub gamma: Permutation,
    pub delta: Permutation,
    pub delta_bar: Permutation,
    /// Block `j` occupies the points `offsets[j] + 1 ..= offsets[j] + lambda_j`.
    pub offsets: Vec<usize>,
    pub method: Method,
    /// `(x, y)` of each rebuild step applied to `delta`.
    pub rebuild_delta: Vec<(usize, usize)>,
    pub rebuild_delta_bar: Vec<(usize, usize)>,
}

/// Rebuild steps needed for `mu`: `sum max(0, floor(mu_i / 2) - 2)`.
pub fn required_rebuilds(mu: &Partition) -> usize {
    mu.parts().iter().map(|&p| (p / 2).saturating_sub(2)).sum()
}

impl WitnessPair {
    pub fn product(&self) -> Permutation {
        &self.gamma * &self.delta
    }

    pub fn product_bar(&self) -> Permutation {
        &self.gamma * &self.delta_bar
    }

    /// Re-checks every claimed property by direct multiplication.
    pub fn check(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Infeasible(format!("witness check failed: {msg}")));
        let n = self.lambda.n();
        for (name, p) in [("gamma", &self.gamma), ("delta", &self.delta), ("delta_bar", &self.delta_bar)] {
            if p.degree() != n {
                return fail(format!("{name} has degree {}", p.degree()));
            }
            if p.cycle_type() != self.lambda {
                return fail(format!("{name} has type {}", p.cycle_type()));
            }
        }
        for (name, p) in [("gamma*delta", self.product()), ("gamma*delta_bar", self.product_bar())] {
            if p.cycle_type() != self.mu {
                return fail(format!("{name} has type {}", p.cycle_type()));
            }
        }
        if self.lambda.is_split_type() && an_class_of(&self.delta)? == an_class_of(&self.delta_bar)? {
            return fail("delta and delta_bar lie in the same class".into());
        }
        let need = required_rebuilds(&self.mu);
        if matches!(self.method, Method::Packing { .. })
            && (self.rebuild_delta.len() != need || self.rebuild_delta_bar.len() != need)
        {
            return fail(format!(
                "{} and {} rebuild steps, expected {need}",
                self.rebuild_delta.len(),
                self.rebuild_delta_bar.len()
            ));
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let label = |p: &Permutation| an_class_of(p).map(|l| l.to_string()).unwrap_or_else(|_| "odd".into());
        json!({
            "schema": WITNESS_SCHEMA,
            "lambda": self.lambda,
            "mu": self.mu,
            "mode": self.mode,
            "gamma": self.gamma.to_string(),
            "delta": self.delta.to_string(),
            "delta_bar": self.delta_bar.to_string(),
            "classes": {
                "gamma": label(&self.gamma),
                "delta": label(&self.delta),
                "delta_bar": label(&self.delta_bar),
                "gamma_delta": label(&self.product()),
                "gamma_delta_bar": label(&self.product_bar()),
            },
            "offsets": self.offsets,
            "construction": self.method,
            "rebuild": {
                "delta": self.rebuild_delta,
                "delta_bar": self.rebuild_delta_bar,
            },
        })
    }

    pub fn to_text(&self) -> String {
        format!(
            "lambda {}\nmu {}\ngamma {}\ndelta {}\ndelta_bar {}\ngamma*delta {}\ngamma*delta_bar {}\n",
            self.lambda,
            self.mu,
            self.gamma,
            self.delta,
            self.delta_bar,
            self.product(),
            self.product_bar()
        )
    }
}

fn block_cycles(lambda: &Partition) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut offsets = Vec::with_capacity(lambda.len());
    let mut cycles = Vec::new();
    let mut o = 0;
    for &l in lambda.parts() {
        offsets.push(o);
        if l > 1 {
            cycles.push((o + 1..=o + l).collect());
        }
        o += l;
    }
    (offsets, cycles)
}

/// Builds and verifies a [`WitnessPair`].
pub fn construct_witnesses(lambda: &Partition, mu: &Partition, opts: &WitnessOptions) -> Result<WitnessPair> {
    let n = lambda.n();
    if mu.n() != n {
        return Err(Error::SizeMismatch(n, mu.n()));
    }
    if !lambda.is_even_type() || !mu.is_even_type() {
        return Err(Error::OddPermutation);
    }
    if mu.fixed_points() == n {
        return Err(Error::Infeasible("the target is the identity".into()));
    }
    let k = lambda.len();
    if opts.mode == Mode::Strict && mu.fixed_points() < 8 * k + 9 {
        return Err(Error::Infeasible(format!(
            "{mu} has {} fixed points; {} parts in {lambda} need at least {}",
            mu.fixed_points(),
            k,
            8 * k + 9
        )));
    }
    let pieces = decompose_subpartitions(mu)?;
    let active: Vec<TypedSubpartition> =
        pieces.into_iter().filter(|p| p.kind() != SubpartitionKind::FixedPoint).collect();
    if active.iter().all(|p| p.kind() == SubpartitionKind::TwoTwos) {
        return ncycle_branch(lambda, mu, opts);
    }
    let w = packing_branch(lambda, mu, &active, opts.mode)?;
    w.check()?;
    Ok(w)
}

struct Seed {
    orbit_min: usize,
    orbit_len: usize,
    target: usize,
}

fn packing_branch(lambda: &Partition, mu: &Partition, active: &[TypedSubpartition], mode: Mode) -> Result<WitnessPair> {
    let n = lambda.n();
    let demands: Vec<usize> = active.iter().map(|p| p.kind().interval_length().expect("non-trivial kind")).collect();
    let plans = greedy_pack(lambda.parts(), &demands)?;
    let (offsets, gamma_cycles) = block_cycles(lambda);
    let gamma = Permutation::from_cycles(n, &gamma_cycles)?;

    let mut placed = Vec::with_capacity(active.len());
    for (j, plan) in plans.iter().enumerate() {
        for (&iv, &d) in plan.subintervals.iter().zip(&plan.demands) {
            let piece = &active[d];
            let kind = piece.kind();
            let (s, bar) = find_opposite_valid_sequences(iv.len(), &kind.interval_shape(), kind != SubpartitionKind::TwoTwos)?;
            placed.push(PlacedPiece {
                kind: kind.number(),
                parts: piece.parts().clone(),
                host: j,
                interval: iv,
                sequence: s.placed_at(iv.a()),
                opposite: bar.map(|b| b.placed_at(iv.a())),
            });
        }
    }
    let flipped = placed
        .iter()
        .position(|p| p.opposite.is_some())
        .ok_or_else(|| Error::OnlyTrivialKinds(mu.to_string()))?;

    let spell = |use_bar: bool| -> Result<Permutation> {
        let mut cycles = Vec::new();
        let mut idx = 0;
        for (j, plan) in plans.iter().enumerate() {
            let seqs: Vec<ValidSequence> = plan
                .subintervals
                .iter()
                .map(|_| {
                    let p = &placed[idx];
                    idx += 1;
                    if use_bar && idx - 1 == flipped {
                        p.opposite.clone().expect("flipped piece has a partner")
                    } else {
                        p.sequence.clone()
                    }
                })
                .collect();
            let local = packing_cycle(plan, &seqs)?;
            let c: Vec<usize> = local.all_cycles().into_iter().next().unwrap_or_default();
            if c.len() > 1 {
                cycles.push(c.into_iter().map(|p| p + offsets[j]).collect());
            }
        }
        Permutation::from_cycles(n, &cycles)
    };
    let delta0 = spell(false)?;
    let delta_bar0 = spell(true)?;

    // shape before rebuilding: each piece's interval shape plus fixed points
    let mut shape: Vec<usize> = active.iter().flat_map(|p| p.kind().interval_shape().parts().to_vec()).collect();
    let moved: usize = shape.iter().sum();
    shape.extend(std::iter::repeat_n(1, n - moved));
    let expected = Partition::from_unsorted(shape)?;
    for d in [&delta0, &delta_bar0] {
        let t = (&gamma * d).cycle_type();
        if t != expected {
            return Err(Error::Infeasible(format!("packing produced {t}, expected {expected}")));
        }
    }

    // seed orbits, in global coordinates
    let mut seeds: Vec<Seed> = Vec::new();
    for p in &placed {
        let o = offsets[p.host];
        let (seed_len, targets): (usize, Vec<usize>) = match p.kind {
            4 => (5, p.parts.parts().to_vec()),
            7 => (4, vec![p.parts.parts()[0]]),
            8 => (4, p.parts.parts().to_vec()),
            _ => continue,
        };
        let gd = &gamma * &delta0;
        let mut orbit_mins: Vec<usize> = p
            .interval
            .points()
            .map(|x| x + o)
            .filter(|&x| {
                let orb = gd.orbit(x);
                orb.len() == seed_len && orb.iter().min() == Some(&x)
            })
            .collect();
        orbit_mins.sort_unstable();
        if orbit_mins.len() != targets.len() {
            return Err(Error::Infeasible(format!("piece {} has {} seed orbits", p.parts, orbit_mins.len())));
        }
        for (m, t) in orbit_mins.into_iter().zip(targets) {
            if t > seed_len {
                seeds.push(Seed { orbit_min: m, orbit_len: seed_len, target: t });
            }
        }
    }
    seeds.sort_by_key(|s| (std::cmp::Reverse(s.target - s.orbit_len), s.orbit_min));

    let mut ys: Vec<usize> = Vec::new();
    for (j, plan) in plans.iter().enumerate() {
        if let Some(f) = plan.free {
            ys.extend((2..f.b()).step_by(2).map(|y| y + offsets[j]));
        }
    }
    let need = required_rebuilds(mu);
    let planned: usize = seeds.iter().map(|s| (s.target - s.orbit_len) / 2).sum();
    if planned != need {
        return Err(Error::Infeasible(format!("seed plan covers {planned} of {need} rebuild steps")));
    }
    if ys.len() < need {
        return Err(Error::Infeasible(format!(
            "{need} rebuild steps but only {} free pairs{}",
            ys.len(),
            if mode == Mode::BestEffort { " (best effort)" } else { "" }
        )));
    }

    let grow = |delta0: Permutation| -> Result<(Permutation, Vec<(usize, usize)>)> {
        let gd = &gamma * &delta0;
        let mut delta = delta0.clone();
        let mut log = Vec::new();
        let mut y_iter = ys.iter();
        for s in &seeds {
            // the orbit containing the seed's least point, in this delta
            let orbit = gd.orbit(s.orbit_min);
            let x = *orbit
                .iter()
                .filter(|&&x| is_special(&gamma, &delta0, x))
                .min()
                .ok_or_else(|| Error::Infeasible(format!("no special point in the orbit of {}", s.orbit_min)))?;
            for _ in 0..(s.target - s.orbit_len) / 2 {
                let &y = y_iter.next().expect("capacity checked");
                delta = rebuild(&gamma, &delta, x, y)?;
                log.push((x, y));
            }
        }
        Ok((delta, log))
    };
    let (delta, rebuild_delta) = grow(delta0)?;
    let (delta_bar, rebuild_delta_bar) = grow(delta_bar0)?;

    let free = plans.iter().map(|p| p.free).collect();
    Ok(WitnessPair {
        lambda: lambda.clone(),
        mu: mu.clone(),
        mode,
        gamma,
        delta,
        delta_bar,
        offsets,
        method: Method::Packing { pieces: placed, flipped, free },
        rebuild_delta,
        rebuild_delta_bar,
    })
}

fn ncycle_branch(lambda: &Partition, mu: &Partition, opts: &WitnessOptions) -> Result<WitnessPair> {
    let n = lambda.n();
    let l1 = lambda.parts()[0];
    if n <= 9 || l1 < 7 || l1.is_multiple_of(2) {
        return Err(Error::OnlyTrivialKinds(format!("{mu} with {lambda}: needs n > 9 and an odd first part >= 7")));
    }
    let g0 = Permutation::from_cycles(l1, &[vec![1, 2], vec![3, 4]])?;
    let plus = ClassLabel::new(Partition::row(l1), Some(SplitSign::Plus))?;
    let minus = plus.partner();
    let first = cover_with_ncycles(&g0, &plus, &plus, &opts.search)?;
    let second = cover_with_ncycles(&g0, &plus, &minus, &opts.search)?;
    // both first factors are in the + class, so an even s aligns them
    let s = conjugator(&second.c, &first.c).expect("same cycle type");
    let d2 = second.d.conjugate(&s)?;

    let (offsets, blocks) = block_cycles(lambda);
    let rest: Vec<Vec<usize>> = blocks.into_iter().filter(|c| c[0] > l1).collect();
    let z = Permutation::from_cycles(n, &rest)?;
    let zi = z.inverse();
    let gamma = &first.c.embed(n)? * &z;
    let delta = &first.d.embed(n)? * &zi;
    let delta_bar = &d2.embed(n)? * &zi;
    let w = WitnessPair {
        lambda: lambda.clone(),
        mu: mu.clone(),
        mode: opts.mode,
        gamma,
        delta,
        delta_bar,
        offsets,
        method: Method::NcycleReduction {
            seed: opts.search.seed,
            base_degree: first.base_degree.max(second.base_degree),
            samples: first.samples + second.samples,
        },
        rebuild_delta: Vec::new(),
        rebuild_delta_bar: Vec::new(),
    };
    w.check()?;
    Ok(w)
}
