//! Greedy packing of host intervals and the long cycles built from them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permutations::Permutation;

use super::sequences::ValidSequence;

/// The integer interval `[a, b]`, `1 <= a <= b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    a: usize,
    b: usize,
}

impl Interval {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == 0 || a > b {
            return Err(Error::Infeasible(format!("[{a},{b}] is not an interval of positive integers")));
        }
        Ok(Interval { a, b })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn len(&self) -> usize {
        1 + self.b - self.a
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: usize) -> bool {
        self.a <= x && x <= self.b
    }

    pub fn points(&self) -> std::ops::RangeInclusive<usize> {
        self.a..=self.b
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// One host interval `[1, L]` with subintervals packed from the right.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingPlan {
    pub host: Interval,
    /// `I_1, ..., I_r`, right to left.
    pub subintervals: Vec<Interval>,
    /// Index into the demand list for each subinterval.
    pub demands: Vec<usize>,
    /// `[1, a_r - 1]` when nonempty.
    pub free: Option<Interval>,
}

impl PackingPlan {
    pub fn empty(length: usize) -> Result<Self> {
        let host = Interval::new(1, length)?;
        Ok(PackingPlan { host, subintervals: Vec::new(), demands: Vec::new(), free: Some(host) })
    }

    pub fn free_len(&self) -> usize {
        self.free.map_or(0, |f| f.len())
    }

    fn push(&mut self, len: usize, demand: usize) {
        let f = self.free.expect("room checked by caller");
        let iv = Interval { a: f.b + 1 - len, b: f.b };
        self.subintervals.push(iv);
        self.demands.push(demand);
        self.free = (iv.a > 1).then(|| Interval { a: 1, b: iv.a - 1 });
    }
}

/// Packs demands into hosts, longest demand first, each into the host with
/// the most free space (lowest index on ties).
pub fn greedy_pack(lengths: &[usize], demands: &[usize]) -> Result<Vec<PackingPlan>> {
    let mut plans = lengths.iter().map(|&l| PackingPlan::empty(l)).collect::<Result<Vec<_>>>()?;
    let mut order: Vec<usize> = (0..demands.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(demands[i]), i));
    for i in order {
        let d = demands[i];
        if d == 0 {
            return Err(Error::Infeasible("zero-length demand".into()));
        }
        let best = (0..plans.len()).max_by_key(|&j| (plans[j].free_len(), std::cmp::Reverse(j)));
        match best {
            Some(j) if plans[j].free_len() >= d => plans[j].push(d, i),
            _ => {
                let left: usize = plans.iter().map(PackingPlan::free_len).max().unwrap_or(0);
                return Err(Error::Infeasible(format!("no room for a subinterval of length {d}; largest free space is {left}")));
            }
        }
    }
    Ok(plans)
}

/// The `L`-cycle spelling `S_1, ..., S_r` and then the free space downward.
pub fn packing_cycle(plan: &PackingPlan, sequences: &[ValidSequence]) -> Result<Permutation> {
    if sequences.len() != plan.subintervals.len() {
        return Err(Error::InvalidPermutation(format!(
            "{} sequences for {} subintervals",
            sequences.len(),
            plan.subintervals.len()
        )));
    }
    let mut terms = Vec::with_capacity(plan.host.len());
    for (s, iv) in sequences.iter().zip(&plan.subintervals) {
        if s.interval() != *iv {
            return Err(Error::InvalidPermutation(format!("sequence {s} does not fill {iv}")));
        }
        terms.extend_from_slice(s.terms());
    }
    if let Some(f) = plan.free {
        terms.extend(f.points().rev());
    }
    Permutation::cycle(plan.host.b(), &terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: usize, b: usize) -> Interval {
        Interval::new(a, b).unwrap()
    }

    #[test]
    fn packing_examples() {
        let p = greedy_pack(&[15], &[8, 4]).unwrap();
        assert_eq!(p[0].subintervals, vec![iv(8, 15), iv(4, 7)]);
        assert_eq!(p[0].free, Some(iv(1, 3)));

        let p = greedy_pack(&[9], &[]).unwrap();
        assert!(p[0].subintervals.is_empty());
        assert_eq!(p[0].free, Some(iv(1, 9)));

        let p = greedy_pack(&[9, 7], &[9, 7]).unwrap();
        assert_eq!(p[0].subintervals, vec![iv(1, 9)]);
        assert_eq!(p[1].subintervals, vec![iv(1, 7)]);
        assert!(p[0].free.is_none() && p[1].free.is_none());

        assert!(matches!(greedy_pack(&[7], &[8]), Err(Error::Infeasible(_))));
    }

    #[test]
    fn spreads_over_hosts() {
        let p = greedy_pack(&[21, 13], &[5, 9, 8, 4]).unwrap();
        assert_eq!(p[0].demands, vec![1, 0, 3]);
        assert_eq!(p[1].demands, vec![2]);
        assert_eq!(p[0].free, Some(iv(1, 3)));
        assert_eq!(p[1].free, Some(iv(1, 5)));
    }

    #[test]
    fn worked_packing_cycle() {
        let plan = greedy_pack(&[15], &[8, 4]).unwrap().remove(0);
        let s1 = ValidSequence::new(vec![8, 1, 3, 5, 6, 2, 7, 4]).unwrap().placed_at(8);
        let s2 = ValidSequence::new(vec![4, 1, 2, 3]).unwrap().placed_at(4);
        let delta = packing_cycle(&plan, &[s1, s2]).unwrap();
        let expect = Permutation::cycle(15, &[15, 8, 10, 12, 13, 9, 14, 11, 7, 4, 5, 6, 3, 2, 1]).unwrap();
        assert_eq!(delta, expect);
    }
}
