use std::collections::BTreeMap;

use anclass::bounds::{e_profile, hook_bound, LogForm};
use anclass::characters::mn_value;
use anclass::classalgebra::{class_size, frobenius_count, table};
use anclass::combinatorics::{decompose_subpartitions, SubpartitionKind};
use anclass::constructor::{
    construct_witnesses, find_opposite_valid_sequences, greedy_pack, packing_cycle, required_rebuilds, Mode,
    WitnessOptions,
};
use anclass::oracle::brute_an_conjugate;
use anclass::permutations::{an_class_of, class_representative, random_in_class};
use anclass::verify::random_instance;
use anclass::{ClassLabel, Partition, Permutation};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random partition of `n` with every part at least `min`.
fn random_parts(n: usize, min: usize, r: &mut impl Rng) -> Vec<usize> {
    loop {
        let mut parts = Vec::new();
        let mut rest = n;
        while rest >= min {
            let p = r.gen_range(min..=rest);
            if rest - p != 0 && rest - p < min {
                continue;
            }
            parts.push(p);
            rest -= p;
        }
        if rest == 0 {
            return parts;
        }
    }
}

fn random_even_perm(n: usize, r: &mut ChaCha8Rng) -> Permutation {
    loop {
        let g = Permutation::random(n, r);
        if g.is_even() {
            return g;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn decomposition_reassembles(seed: u64, moved in 2usize..40, ones in 0usize..30) {
        let mut r = rng(seed);
        let mu = Partition::from_unsorted(random_parts(moved, 2, &mut r)).unwrap().with_ones(ones);
        prop_assume!(mu.is_even_type());
        match decompose_subpartitions(&mu) {
            Ok(pieces) => {
                let mut all: Vec<usize> = pieces.iter().flat_map(|p| p.parts().parts().to_vec()).collect();
                all.sort_unstable_by(|a, b| b.cmp(a));
                prop_assert_eq!(all, mu.parts().to_vec());
                let steps: usize = pieces.iter().map(|p| p.growth_steps()).sum();
                prop_assert_eq!(steps, required_rebuilds(&mu));
                for p in &pieces {
                    if let Some(l) = p.kind().interval_length() {
                        prop_assert_eq!(p.kind().interval_shape().n(), l);
                    }
                }
            }
            Err(e) => prop_assert!(matches!(e, anclass::Error::Infeasible(_)), "{e}"),
        }
    }

    #[test]
    fn packing_product_shape(seed: u64, lengths in prop::collection::vec(10usize..50, 1..4)) {
        let mut r = rng(seed);
        let kinds: Vec<SubpartitionKind> =
            SubpartitionKind::ALL.into_iter().filter(|k| k.interval_length().is_some()).collect();
        let count = r.gen_range(1..6);
        let picked: Vec<SubpartitionKind> = (0..count).map(|_| kinds[r.gen_range(0..kinds.len())]).collect();
        let demands: Vec<usize> = picked.iter().map(|k| k.interval_length().unwrap()).collect();
        let Ok(plans) = greedy_pack(&lengths, &demands) else { return Ok(()) };
        for (plan, &len) in plans.iter().zip(&lengths) {
            let mut seqs = Vec::new();
            let mut bars = Vec::new();
            let mut shape = Vec::new();
            for (iv, &d) in plan.subintervals.iter().zip(&plan.demands) {
                let k = picked[d];
                let (s, bar) = find_opposite_valid_sequences(iv.len(), &k.interval_shape(), k != SubpartitionKind::TwoTwos).unwrap();
                seqs.push(s.placed_at(iv.a()));
                bars.push(bar.map(|b| b.placed_at(iv.a())));
                shape.extend_from_slice(k.interval_shape().parts());
            }
            let delta = packing_cycle(plan, &seqs).unwrap();
            let gamma = Permutation::cycle(len, &(1..=len).collect::<Vec<_>>()).unwrap();
            prop_assert_eq!(delta.cycle_type(), Partition::row(len));
            let moved: usize = shape.iter().sum();
            let expected = Partition::from_unsorted(shape).unwrap().with_ones(len - moved);
            prop_assert_eq!((&gamma * &delta).cycle_type(), expected.clone());
            if let Some(i) = bars.iter().position(Option::is_some) {
                let mut flipped = seqs.clone();
                flipped[i] = bars[i].clone().unwrap();
                let delta_bar = packing_cycle(plan, &flipped).unwrap();
                prop_assert_eq!((&gamma * &delta_bar).cycle_type(), expected);
                if len % 2 == 1 {
                    prop_assert_ne!(an_class_of(&delta).unwrap(), an_class_of(&delta_bar).unwrap());
                }
            }
        }
    }

    #[test]
    fn odd_conjugation_swaps_split_classes(seed: u64, n in 3usize..40) {
        let mut r = rng(seed);
        let types: Vec<Partition> = Partition::distinct_parts(n).into_iter().filter(Partition::is_split_type).collect();
        prop_assume!(!types.is_empty());
        let t = &types[r.gen_range(0..types.len())];
        let label = ClassLabel::of_type(t)[0].clone();
        let g = random_in_class(&label, &mut r);
        prop_assert_eq!(an_class_of(&g).unwrap(), label.clone());
        let s = loop {
            let s = Permutation::random(n, &mut r);
            if !s.is_even() { break s; }
        };
        prop_assert_eq!(an_class_of(&g.conjugate(&s).unwrap()).unwrap(), label.partner());
    }

    #[test]
    fn an_labels_match_brute_force(seed: u64, n in 2usize..8) {
        let mut r = rng(seed);
        let g = random_even_perm(n, &mut r);
        let label = an_class_of(&g).unwrap();
        prop_assert!(brute_an_conjugate(&g, &class_representative(&label)).unwrap());
        if label.is_split() && n > 1 {
            prop_assert!(!brute_an_conjugate(&g, &class_representative(&label.partner())).unwrap());
        }
    }

    #[test]
    fn transpose_twists_by_sign(seed: u64, n in 1usize..13) {
        let mut r = rng(seed);
        let lambdas = Partition::all(n);
        let lambda = &lambdas[r.gen_range(0..lambdas.len())];
        let mu = &lambdas[r.gen_range(0..lambdas.len())];
        let sign = if mu.is_even_type() { 1 } else { -1 };
        prop_assert_eq!(mn_value(&lambda.transpose(), mu).unwrap(), sign * mn_value(lambda, mu).unwrap());
    }

    #[test]
    fn hook_bound_dominates(seed: u64, n in 3usize..26) {
        let mut r = rng(seed);
        let k = r.gen_range(1..=n);
        let lambda = Partition::new(vec![n - k + 1]).unwrap().with_ones(k - 1);
        let fixed = r.gen_range(0..=1);
        let mu = Partition::from_unsorted(random_parts(n - fixed, 2, &mut r)).unwrap().with_ones(fixed);
        let v = mn_value(&lambda, &mu).unwrap().unsigned_abs();
        let size = k.min(n - k + 1);
        prop_assert!(BigUint::from(v) <= hook_bound(n, size), "{lambda} at {mu}: {v}");
    }

    #[test]
    fn orbit_profile_matches_counts(seed: u64, n in 2usize..200) {
        let mut r = rng(seed);
        let g = Permutation::random(n, &mut r);
        let e = e_profile(&g).unwrap();
        let lens: Vec<usize> = (1..=n).map(|x| g.orbit(x).len()).collect();
        for k in 1..=n {
            let c = lens.iter().filter(|&&l| l <= k).count() as u64;
            prop_assert_eq!(e.counts()[k - 1], c);
            prop_assert_eq!(e.prefix(k), LogForm::log(n as u64, c));
        }
        let total = e.es().iter().fold(LogForm::zero(n as u64), |a, b| a.add(b));
        prop_assert_eq!(total, LogForm::constant(n as u64, num_traits::One::one()));
        for m in [3, 5, 10] {
            let c = e.check_small_cycle_bound(m);
            if c.hypothesis {
                prop_assert!(c.holds);
                prop_assert!(c.e_approx <= c.bound_approx + 1e-9);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn frobenius_counts_sum_to_pair_count(seed: u64, n in 2usize..12) {
        let mut r = rng(seed);
        let labels = ClassLabel::all(n);
        let c = &labels[r.gen_range(0..labels.len())];
        let d = &labels[r.gen_range(0..labels.len())];
        let mut total = BigUint::from(0u32);
        for g in &labels {
            let k = frobenius_count(c, d, g).unwrap();
            prop_assert_eq!(&k, &frobenius_count(d, c, g).unwrap());
            total += k * class_size(g);
        }
        prop_assert_eq!(total, class_size(c) * class_size(d));
    }

    #[test]
    fn random_constructions_verify(seed: u64) {
        let mut r = rng(seed);
        let (lambda, mu) = random_instance(&mut r);
        let opts = WitnessOptions { mode: Mode::Strict, ..Default::default() };
        let w = construct_witnesses(&lambda, &mu, &opts).unwrap();
        w.check().unwrap();
        prop_assert_eq!(w.product().cycle_type(), mu.clone());
        prop_assert_eq!(w.product_bar().cycle_type(), mu);
        prop_assert_eq!(w.gamma.cycle_type(), lambda);
        prop_assert_ne!(an_class_of(&w.delta).unwrap(), an_class_of(&w.delta_bar).unwrap());
    }
}

#[test]
fn tables_exact_through_13() {
    for n in 2..=13 {
        let t = table(n).unwrap();
        t.check_orthogonality().unwrap();
        t.check_split_sums().unwrap();
        let order: u128 = t.group_order();
        let sum: u128 = (0..t.characters().len()).map(|i| t.degree(i) * t.degree(i)).sum();
        assert_eq!(sum, order, "n = {n}");
    }
}

#[test]
fn split_values_within_bound_through_13() {
    for n in 2..=13 {
        let c = anclass::verify::split_character_bound(n).unwrap();
        assert!(c.pass, "{}", c.detail);
    }
}

#[test]
fn class_sizes_partition_group() {
    for n in 2..=12 {
        let total: BigUint = ClassLabel::all(n).iter().map(class_size).sum();
        let order: BigUint = (1..=n as u64).product::<BigUint>() / 2u32;
        let by_type: BTreeMap<Partition, usize> = ClassLabel::all(n).iter().fold(BTreeMap::new(), |mut m, l| {
            *m.entry(l.cycle_type().clone()).or_default() += 1;
            m
        });
        assert!(by_type.iter().all(|(t, &c)| c == if t.is_split_type() && n > 1 { 2 } else { 1 }));
        assert_eq!(total, order, "n = {n}");
    }
}
