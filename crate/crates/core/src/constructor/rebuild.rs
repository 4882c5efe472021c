//! Growing one orbit of `gamma * delta` by two points.
//!
//! If `delta` moves `x` and `y`, `gamma(x)` lies in the `gamma*delta`-orbit
//! `O` of `x`, and `gamma*delta` fixes both `y` and `gamma(y)`, then
//! `delta' = (x,y) delta (x,y)` makes `O + {y, gamma(y)}` a single orbit of
//! `gamma*delta'` and changes nothing elsewhere.

use crate::error::{Error, RebuildClause, Result};
use crate::permutations::Permutation;

/// `delta` moves `x` and `gamma(x)` is in the `gamma*delta`-orbit of `x`.
pub fn is_special(gamma: &Permutation, delta: &Permutation, x: usize) -> bool {
    if delta.apply(x) == x {
        return false;
    }
    let gd = gamma * delta;
    gd.orbit(x).contains(&gamma.apply(x))
}

/// `(x,y) delta (x,y)`, after checking the hypotheses and the claimed effect
/// on `gamma * delta`.
pub fn rebuild(gamma: &Permutation, delta: &Permutation, x: usize, y: usize) -> Result<Permutation> {
    let n = gamma.degree();
    if delta.degree() != n {
        return Err(Error::DegreeMismatch(n, delta.degree()));
    }
    for p in [x, y] {
        if p == 0 || p > n {
            return Err(Error::InvalidPermutation(format!("point {p} outside 1..={n}")));
        }
    }
    let violated = |clause, detail: String| Error::HypothesisViolated { clause, detail };
    if x == y {
        return Err(violated(RebuildClause::A, format!("x = y = {x}")));
    }
    if delta.apply(x) == x || delta.apply(y) == y {
        return Err(violated(RebuildClause::A, format!("delta fixes {x} or {y}")));
    }
    let gd = gamma * delta;
    let orbit = gd.orbit(x);
    let gx = gamma.apply(x);
    if !orbit.contains(&gx) {
        return Err(violated(RebuildClause::B, format!("gamma({x}) = {gx} is outside the orbit of {x}")));
    }
    let gy = gamma.apply(y);
    if gd.apply(y) != y || gd.apply(gy) != gy {
        return Err(violated(RebuildClause::C, format!("gamma*delta moves {y} or gamma({y}) = {gy}")));
    }

    let eps = Permutation::cycle(n, &[x, y])?;
    let new = &(&eps * delta) * &eps;

    let gd2 = gamma * &new;
    let mut merged = orbit.clone();
    merged.extend([y, gy]);
    for z in 1..=n {
        if !merged.contains(&z) && gd2.apply(z) != gd.apply(z) {
            return Err(Error::Infeasible(format!("rebuild changed gamma*delta at {z}")));
        }
    }
    let grown = gd2.orbit(x);
    if grown.len() != orbit.len() + 2 || !merged.iter().all(|p| grown.contains(p)) {
        return Err(Error::Infeasible(format!("orbit of {x} did not grow by exactly {{{y}, {gy}}}")));
    }
    Ok(new)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grows_a_five_orbit() {
        // gamma = (1..8), delta chosen so gamma*delta has a 5-cycle on 4..8
        // and fixes 1, 2, 3
        let gamma = Permutation::cycle(8, &[1, 2, 3, 4, 5, 6, 7, 8]).unwrap();
        let s = crate::constructor::find_opposite_valid_sequences(5, &"5".parse().unwrap(), true).unwrap().0;
        let mut terms: Vec<usize> = s.placed_at(4).terms().to_vec();
        terms.extend([3, 2, 1]);
        let delta = Permutation::cycle(8, &terms).unwrap();
        let gd = &gamma * &delta;
        assert_eq!(gd.cycle_type().to_string(), "5,1,1,1");
        let x = (4..=8).find(|&x| is_special(&gamma, &delta, x)).unwrap();
        let new = rebuild(&gamma, &delta, x, 2).unwrap();
        assert_eq!(new.cycle_type(), delta.cycle_type());
        assert_eq!((&gamma * &new).cycle_type().to_string(), "7,1");
        assert!(is_special(&gamma, &new, x));
    }

    #[test]
    fn clauses_are_reported() {
        let gamma = Permutation::cycle(6, &[1, 2, 3, 4, 5, 6]).unwrap();
        let delta = gamma.inverse();
        // gamma*delta is the identity, so clause (b) fails for any x
        match rebuild(&gamma, &delta, 1, 3) {
            Err(Error::HypothesisViolated { clause: RebuildClause::B, .. }) => {}
            other => panic!("{other:?}"),
        }
        let fixed = Permutation::identity(6);
        match rebuild(&gamma, &fixed, 1, 3) {
            Err(Error::HypothesisViolated { clause: RebuildClause::A, .. }) => {}
            other => panic!("{other:?}"),
        }
    }
}
