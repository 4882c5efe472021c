//! Class multiplication in `A_n`: Frobenius counts, coverage and covering
//! numbers.
//!
//! The number of pairs `(c, d)` in `C x D` with `cd = g` is
//!
//! ```text
//! |C| |D| / |G| * sum over chi of chi(C) chi(D) conj(chi(g)) / chi(1)
//! ```
//!
//! evaluated exactly. Irrational contributions are accumulated per radicand
//! and must cancel.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{CharacterTable, DEFAULT_TABLE_LIMIT};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::permutations::ClassLabel;

pub const COVERAGE_SCHEMA: &str = "anclass.coverage/1";

/// `n! / z_mu`, halved for split classes.
pub fn class_size(cls: &ClassLabel) -> BigUint {
    let mu = cls.cycle_type();
    let mut z = BigUint::one();
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_default() += 1;
    }
    for (&len, &m) in &counts {
        for i in 1..=m {
            z *= (len as u64) * (i as u64);
        }
    }
    if cls.is_split() {
        z *= 2u32;
    }
    let mut fact = BigUint::one();
    for i in 2..=mu.n() {
        fact *= i as u64;
    }
    fact / z
}

fn tables() -> &'static Mutex<HashMap<usize, Arc<CharacterTable>>> {
    static TABLES: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    TABLES.get_or_init(Default::default)
}

/// Shared table of `A_n`, built on first use (default size limit).
pub fn table(n: usize) -> Result<Arc<CharacterTable>> {
    if let Some(t) = tables().lock().expect("table cache").get(&n) {
        return Ok(t.clone());
    }
    // Built outside the lock; a racing build produces an identical table.
    let t = Arc::new(CharacterTable::build(n, DEFAULT_TABLE_LIMIT)?);
    Ok(tables().lock().expect("table cache").entry(n).or_insert(t).clone())
}

fn index_of(t: &CharacterTable, cls: &ClassLabel) -> Result<usize> {
    if cls.n() != t.n() {
        return Err(Error::DegreeMismatch(t.n(), cls.n()));
    }
    t.class_index(cls).ok_or_else(|| Error::InvalidLabel(format!("{cls} is not a class of A_{}", t.n())))
}

/// Number of `(c, d)` in `C x D` with `cd` equal to a fixed element of `g`.
pub fn frobenius_count(c: &ClassLabel, d: &ClassLabel, g: &ClassLabel) -> Result<BigUint> {
    if c.n() != d.n() || c.n() != g.n() {
        return Err(Error::DegreeMismatch(c.n(), if c.n() != d.n() { d.n() } else { g.n() }));
    }
    let t = table(c.n())?;
    count_in(&t, index_of(&t, c)?, index_of(&t, d)?, index_of(&t, g)?)
}

/// [`frobenius_count`] on class indices of an explicit table.
pub fn count_in(t: &CharacterTable, c: usize, d: usize, g: usize) -> Result<BigUint> {
    let mut rational = BigInt::zero();
    let mut irrational: BTreeMap<i64, BigInt> = BTreeMap::new();
    let order = t.group_order();
    for chi in 0..t.characters().len() {
        let cols = [c, d, g];
        let mut radicand = 1i64;
        for &j in &cols {
            if t.doubled(chi, j).1 != 0 {
                let r = t.column_radicand(j);
                if radicand != 1 && radicand != r {
                    return Err(Error::IrrationalResidue(format!(
                        "{} mixes sqrt({radicand}) and sqrt({r})",
                        t.characters()[chi]
                    )));
                }
                radicand = r;
            }
        }
        let x = t.doubled(chi, c);
        let y = t.doubled(chi, d);
        let (za, zb) = t.doubled(chi, g);
        let z = if radicand < 0 { (za, -zb) } else { (za, zb) };
        let (p, q) = triple_product(x, y, z, radicand);
        // |G| / chi(1) is an integer
        let m = BigInt::from(order / t.degree(chi));
        rational += &p * &m;
        if !q.is_zero() {
            *irrational.entry(radicand).or_default() += &q * &m;
        }
    }
    if let Some((r, v)) = irrational.iter().find(|(_, v)| !v.is_zero()) {
        return Err(Error::IrrationalResidue(format!("{v}*sqrt({r})")));
    }
    // values were doubled three times
    let num = rational * BigInt::from(t.class_size(c)) * BigInt::from(t.class_size(d));
    let den = BigInt::from(8u8) * BigInt::from(order) * BigInt::from(order);
    let (q, rem) = num.div_rem(&den);
    if !rem.is_zero() || q.is_negative() {
        return Err(Error::IrrationalResidue(format!("non-integral count {num}/{den}")));
    }
    Ok(q.to_biguint().expect("nonnegative"))
}

fn triple_product(x: (i128, i128), y: (i128, i128), z: (i128, i128), d: i64) -> (BigInt, BigInt) {
    let (x, y, z) = (big(x), big(y), big(z));
    let d = BigInt::from(d);
    let p = &x.0 * &y.0 + &x.1 * &y.1 * &d;
    let q = &x.0 * &y.1 + &x.1 * &y.0;
    (&p * &z.0 + &q * &z.1 * &d, &p * &z.1 + &q * &z.0)
}

fn big((a, b): (i128, i128)) -> (BigInt, BigInt) {
    (BigInt::from(a), BigInt::from(b))
}

/// Classes `E` with `E` meeting `A * C`.
pub fn product_support(t: &CharacterTable, a: usize, c: usize) -> Result<BTreeSet<usize>> {
    let hits: Vec<Option<usize>> = (0..t.classes().len())
        .into_par_iter()
        .map(|e| count_in(t, a, c, e).map(|k| (!k.is_zero()).then_some(e)))
        .collect::<Result<_>>()?;
    Ok(hits.into_iter().flatten().collect())
}

/// Nontrivial classes missed by a product `CD`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverageReport {
    pub schema: &'static str,
    pub n: usize,
    #[serde(rename = "C")]
    pub c: ClassLabel,
    #[serde(rename = "D")]
    pub d: ClassLabel,
    pub uncovered: Vec<ClassLabel>,
    pub covered: bool,
}

impl CoverageReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "n {}", self.n).unwrap();
        writeln!(s, "C {}", self.c).unwrap();
        writeln!(s, "D {}", self.d).unwrap();
        for u in &self.uncovered {
            writeln!(s, "uncovered {u}").unwrap();
        }
        writeln!(s, "covered {}", self.covered).unwrap();
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }
}

pub fn covers(c: &ClassLabel, d: &ClassLabel) -> Result<CoverageReport> {
    if c.n() != d.n() {
        return Err(Error::DegreeMismatch(c.n(), d.n()));
    }
    let t = table(c.n())?;
    let (ci, di) = (index_of(&t, c)?, index_of(&t, d)?);
    let support = product_support(&t, ci, di)?;
    let uncovered: Vec<ClassLabel> = t
        .classes()
        .iter()
        .enumerate()
        .filter(|(e, l)| !l.is_identity() && !support.contains(e))
        .map(|(_, l)| l.clone())
        .collect();
    Ok(CoverageReport {
        schema: COVERAGE_SCHEMA,
        n: c.n(),
        c: c.clone(),
        d: d.clone(),
        covered: uncovered.is_empty(),
        uncovered,
    })
}

/// Whether `g` lies in `CD` for every pair of classes `C`, `D` of cycle
/// type `lambda`.
pub fn is_covered_by(lambda: &Partition, g: &ClassLabel) -> Result<bool> {
    if lambda.n() != g.n() {
        return Err(Error::SizeMismatch(lambda.n(), g.n()));
    }
    if !lambda.is_even_type() {
        return Err(Error::OddPermutation);
    }
    let labels = ClassLabel::of_type(lambda);
    for c in &labels {
        for d in &labels {
            if frobenius_count(c, d, g)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Least `k` with `C^k = A_n`, by closure of class supports.
pub fn covering_number(c: &ClassLabel) -> Result<usize> {
    let t = table(c.n())?;
    let ci = index_of(&t, c)?;
    let all = t.classes().len();
    let mut memo: HashMap<usize, BTreeSet<usize>> = HashMap::new();
    let mut current: BTreeSet<usize> = BTreeSet::from([ci]);
    let mut seen = BTreeSet::new();
    for k in 1.. {
        if current.len() == all {
            return Ok(k);
        }
        if !seen.insert(current.clone()) {
            return Err(Error::NotGenerating);
        }
        let mut next = BTreeSet::new();
        for &a in &current {
            if let std::collections::hash_map::Entry::Vacant(e) = memo.entry(a) {
                e.insert(product_support(&t, a, ci)?);
            }
            next.extend(memo[&a].iter().copied());
        }
        current = next;
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> ClassLabel {
        s.parse().unwrap()
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(&ClassLabel::identity(7)), BigUint::one());
        assert_eq!(class_size(&l("5:+")), BigUint::from(12u32));
        assert_eq!(class_size(&l("3,1,1")), BigUint::from(20u32));
        for n in 2..=9 {
            let total: BigUint = ClassLabel::all(n).iter().map(class_size).sum();
            let order: BigUint = (3..=n as u64).product::<u64>().into();
            assert_eq!(total, order);
        }
    }

    #[test]
    fn a5_exception() {
        assert!(frobenius_count(&l("5:+"), &l("5:+"), &l("2,2,1")).unwrap().is_zero());
        assert!(!frobenius_count(&l("5:+"), &l("5:-"), &l("2,2,1")).unwrap().is_zero());
        let r = covers(&l("5:+"), &l("5:+")).unwrap();
        assert_eq!(r.uncovered, vec![l("2,2,1")]);
        assert!(!r.covered);
        assert!(covers(&l("5:+"), &l("5:-")).unwrap().covered);
        assert!(!is_covered_by(&"5".parse().unwrap(), &l("2,2,1")).unwrap());
        assert!(is_covered_by(&"5".parse().unwrap(), &l("5:+")).unwrap());
    }

    #[test]
    fn identity_class_counts() {
        let id = ClassLabel::identity(6);
        for d in ClassLabel::all(6) {
            for g in ClassLabel::all(6) {
                let k = frobenius_count(&id, &d, &g).unwrap();
                assert_eq!(k, if d == g { BigUint::one() } else { BigUint::zero() });
            }
        }
    }

    #[test]
    fn counts_sum_to_product_of_sizes() {
        for n in [5, 6, 7] {
            let classes = ClassLabel::all(n);
            for c in &classes {
                for d in &classes {
                    let total: BigUint = classes
                        .iter()
                        .map(|g| frobenius_count(c, d, g).unwrap() * class_size(g))
                        .sum();
                    assert_eq!(total, class_size(c) * class_size(d), "{c} {d}");
                }
            }
        }
    }

    #[test]
    fn covering_numbers_of_long_cycles() {
        assert_eq!(covering_number(&l("5:+")).unwrap(), 3);
        assert_eq!(covering_number(&l("7:+")).unwrap(), 3);
        assert_eq!(covering_number(&l("9:-")).unwrap(), 2);
        assert!(matches!(covering_number(&ClassLabel::identity(5)), Err(Error::NotGenerating)));
    }

    #[test]
    fn report_formats() {
        let r = covers(&l("5:+"), &l("5:+")).unwrap();
        assert_eq!(r.to_text(), "n 5\nC 5:+\nD 5:+\nuncovered 2,2,1\ncovered false\n");
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema"], COVERAGE_SCHEMA);
        assert_eq!(v["C"], "5:+");
        assert_eq!(v["uncovered"][0], "2,2,1");
        assert_eq!(v["covered"], false);
    }
}
