//! Murnaghan–Nakayama evaluation on beta-sets.
//!
//! A partition with `k` parts is stored as the strictly decreasing set of
//! first-column hook lengths `lambda_i + k - i`. Removing a rim hook of
//! length `r` moves one bead from `b` to `b - r`, with sign `(-1)^h` where
//! `h` counts beads strictly between.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::combinatorics::Partition;

/// Rim hooks of length `r` removable from `lambda`: the resulting shapes
/// with their leg-length signs.
pub fn remove_rim_hooks(lambda: &[usize], r: usize) -> Vec<(Vec<usize>, i128)> {
    let k = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + (k - 1 - i)).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (k - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((shape, sign));
    }
    out
}

/// Memo table for character values, keyed by (remaining shape, remaining
/// cycle lengths).
#[derive(Default)]
pub struct MnCache {
    memo: HashMap<(Vec<usize>, Vec<usize>), i128>,
}

impl MnCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    /// `chi_lambda` on cycle type `mu`; sizes must agree.
    pub fn value(&mut self, lambda: &Partition, mu: &Partition) -> i128 {
        debug_assert_eq!(lambda.n(), mu.n());
        self.eval(lambda.parts(), mu.parts())
    }

    fn eval(&mut self, lambda: &[usize], mu: &[usize]) -> i128 {
        let Some((&r, rest)) = mu.split_first() else {
            return 1;
        };
        if r == 1 {
            // only fixed points left
            return degree(&Partition::new(lambda.to_vec()).expect("valid shape"))
                .try_into()
                .expect("degree fits i128");
        }
        let key = (lambda.to_vec(), mu.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut total: i128 = 0;
        for (shape, sign) in remove_rim_hooks(lambda, r) {
            let v = self.eval(&shape, rest);
            total = total.checked_add(sign * v).expect("character value overflow");
        }
        self.memo.insert(key, total);
        total
    }
}

/// Hook length formula.
pub fn degree(lambda: &Partition) -> BigUint {
    let t = lambda.transpose();
    let mut num = BigUint::one();
    for i in 2..=lambda.n() {
        num *= i as u64;
    }
    let mut den = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let hook = (row - j - 1) + (t.parts()[j] - i - 1) + 1;
            den *= hook as u64;
        }
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rim_hooks_of_small_shapes() {
        // the two outer boxes of (2,1) are not adjacent
        assert!(remove_rim_hooks(&[2, 1], 2).is_empty());
        assert_eq!(remove_rim_hooks(&[2, 1], 1).len(), 2);
        // (3) minus a 3-hook leaves the empty shape with sign +
        assert_eq!(remove_rim_hooks(&[3], 3), vec![(vec![], 1)]);
        // (1,1,1) minus a 3-hook: leg length 2, sign +
        assert_eq!(remove_rim_hooks(&[1, 1, 1], 3), vec![(vec![], 1)]);
        // (1,1) minus a 2-hook: leg length 1, sign -
        assert_eq!(remove_rim_hooks(&[1, 1], 2), vec![(vec![], -1)]);
        // (2,2) minus its 3-hook leaves (1), leg length 1
        assert_eq!(remove_rim_hooks(&[2, 2], 3), vec![(vec![1], -1)]);
        assert!(remove_rim_hooks(&[2, 2], 4).is_empty());
    }

    #[test]
    fn hook_degrees() {
        let d = |s: &str| degree(&s.parse().unwrap());
        assert_eq!(d("3,1,1"), BigUint::from(6u32));
        assert_eq!(d("4,1"), BigUint::from(4u32));
        assert_eq!(d("2,2"), BigUint::from(2u32));
        assert_eq!(d("7"), BigUint::one());
    }
}
