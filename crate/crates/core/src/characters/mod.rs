//! Exact irreducible characters of symmetric and alternating groups.
//!
//! A character `chi_lambda` of `S_n` with `lambda` not self-conjugate
//! restricts irreducibly to `A_n` (and agrees with `chi_lambda'` there).
//! A self-conjugate `lambda` restricts to two constituents; they agree
//! (at half of `chi_lambda`) except on the two classes whose cycle type is
//! the list of diagonal hook lengths `h` of `lambda`, where they take the
//! values `(e +- sqrt(e * prod h)) / 2` with `e = (-1)^((n - m) / 2)` and
//! `m` the number of diagonal hooks.
//!
//! Labeling: the `+` constituent is the one whose value on the class `h:+`
//! has positive `sqrt` coefficient.

mod algebraic;
pub mod mn;
mod table;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use algebraic::{sign_with_root, sign_with_two_roots, squarefree_split, AlgebraicValue, RadicandSum};
pub use table::{an_character_table, CharacterTable, DEFAULT_TABLE_LIMIT};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::permutations::{ClassLabel, SplitSign};

/// `chi_lambda` on the `S_n` class of cycle type `mu`.
pub fn mn_value(lambda: &Partition, mu: &Partition) -> Result<i128> {
    if lambda.n() != mu.n() {
        return Err(Error::SizeMismatch(lambda.n(), mu.n()));
    }
    Ok(mn::MnCache::new().value(lambda, mu))
}

/// `chi_lambda(1)` by the hook length formula.
pub fn degree(lambda: &Partition) -> num_bigint::BigUint {
    mn::degree(lambda)
}

/// For a hook shape, the shorter of its first row and first column.
pub fn hook_size(lambda: &Partition) -> Option<usize> {
    if lambda.is_empty() || !lambda.is_hook() {
        return None;
    }
    Some(lambda.parts()[0].min(lambda.len()))
}

/// An irreducible character of `A_n`.
///
/// For a non-self-conjugate shape the stored partition is the larger of
/// `lambda` and its transpose (so the trivial character is `(n)`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct IrreducibleLabel {
    partition: Partition,
    sign: Option<SplitSign>,
}

impl IrreducibleLabel {
    /// Canonicalizes a non-self-conjugate shape to the larger of it and its
    /// transpose; self-conjugate shapes require a sign.
    pub fn new(partition: Partition, sign: Option<SplitSign>) -> Result<Self> {
        if partition.is_self_conjugate() != sign.is_some() {
            return Err(Error::InvalidLabel(format!(
                "character {partition} {} a sign",
                if sign.is_some() { "does not take" } else { "needs" }
            )));
        }
        let t = partition.transpose();
        let partition = if sign.is_none() && t > partition { t } else { partition };
        Ok(IrreducibleLabel { partition, sign })
    }

    pub fn trivial(n: usize) -> Self {
        let p = Partition::row(n);
        let sign = p.is_self_conjugate().then_some(SplitSign::Plus);
        IrreducibleLabel { partition: p, sign }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn sign(&self) -> Option<SplitSign> {
        self.sign
    }

    pub fn n(&self) -> usize {
        self.partition.n()
    }

    pub fn is_split(&self) -> bool {
        self.sign.is_some()
    }

    /// Diagonal hook lengths, i.e. the cycle type on which a split
    /// character takes irrational values.
    pub fn diagonal_hooks(&self) -> Partition {
        Partition::new(self.partition.frobenius_symbol().diagonal_hooks()).expect("strictly decreasing hooks")
    }

    /// All irreducible characters of `A_n`, trivial first.
    pub fn all(n: usize) -> Vec<IrreducibleLabel> {
        let mut out = Vec::new();
        for p in Partition::all(n) {
            let t = p.transpose();
            if t == p {
                out.push(IrreducibleLabel { partition: p.clone(), sign: Some(SplitSign::Plus) });
                out.push(IrreducibleLabel { partition: p, sign: Some(SplitSign::Minus) });
            } else if p > t {
                out.push(IrreducibleLabel { partition: p, sign: None });
            }
        }
        out
    }
}

impl fmt::Display for IrreducibleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Some(s) => write!(f, "{}:{}", self.partition, s.symbol()),
            None => write!(f, "{}", self.partition),
        }
    }
}

impl fmt::Debug for IrreducibleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IrreducibleLabel({self})")
    }
}

impl FromStr for IrreducibleLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (t, sign) = match s.trim().rsplit_once(':') {
            Some((t, "+")) => (t, Some(SplitSign::Plus)),
            Some((t, "-")) => (t, Some(SplitSign::Minus)),
            Some(_) => return Err(Error::InvalidLabel(format!("bad sign in {s:?}"))),
            None => (s, None),
        };
        IrreducibleLabel::new(t.parse()?, sign)
    }
}

impl TryFrom<String> for IrreducibleLabel {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<IrreducibleLabel> for String {
    fn from(l: IrreducibleLabel) -> String {
        l.to_string()
    }
}

/// `(e, e * prod h)` for a split character: the rational part sign and the
/// radicand of its irrational values.
pub(crate) fn split_parameters(hooks: &Partition) -> (i128, i64) {
    let m = hooks.len();
    let e: i128 = if ((hooks.n() - m) / 2).is_multiple_of(2) { 1 } else { -1 };
    let prod: i64 = hooks.parts().iter().map(|&h| h as i64).product();
    (e, e as i64 * prod)
}

/// Value of `chi` on the class `cls`, computed from the `S_n` character.
pub fn an_character_value(chi: &IrreducibleLabel, cls: &ClassLabel) -> Result<AlgebraicValue> {
    value_with(chi, cls, &mut mn::MnCache::new())
}

pub(crate) fn value_with(chi: &IrreducibleLabel, cls: &ClassLabel, cache: &mut mn::MnCache) -> Result<AlgebraicValue> {
    if chi.n() != cls.n() {
        return Err(Error::DegreeMismatch(chi.n(), cls.n()));
    }
    let Some(chi_sign) = chi.sign else {
        return Ok(AlgebraicValue::from_int(cache.value(&chi.partition, cls.cycle_type())));
    };
    let hooks = chi.diagonal_hooks();
    match cls.sign() {
        Some(cls_sign) if *cls.cycle_type() == hooks => {
            let (e, d) = split_parameters(&hooks);
            let q = if chi_sign == cls_sign { 1 } else { -1 };
            Ok(AlgebraicValue::halves(e, q, d))
        }
        _ => Ok(AlgebraicValue::halves(cache.value(&chi.partition, cls.cycle_type()), 0, 1)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn mn_examples() {
        for mu in Partition::all(6) {
            assert_eq!(mn_value(&Partition::row(6), &mu).unwrap(), 1);
        }
        for lambda in Partition::all(7) {
            let v = mn_value(&lambda, &Partition::row(7)).unwrap();
            if lambda.is_hook() {
                assert!(v == 1 || v == -1);
            } else {
                assert_eq!(v, 0);
            }
        }
        assert_eq!(mn_value(&p("2,2"), &p("2,1,1")).unwrap(), 0);
        assert!(matches!(mn_value(&p("2,2"), &p("2,1")), Err(Error::SizeMismatch(4, 3))));
    }

    #[test]
    fn degree_examples() {
        assert_eq!(degree(&Partition::row(9)), 1u32.into());
        for n in 2..10 {
            let lambda = Partition::new(vec![n - 1, 1]).unwrap();
            assert_eq!(degree(&lambda), ((n - 1) as u32).into());
        }
        assert_eq!(degree(&p("3,1,1")), 6u32.into());
        for lambda in Partition::all(9) {
            let d: i128 = degree(&lambda).try_into().unwrap();
            assert_eq!(mn_value(&lambda, &Partition::column(9)).unwrap(), d);
        }
    }

    #[test]
    fn hook_sizes() {
        assert_eq!(hook_size(&Partition::row(8)), Some(1));
        assert_eq!(hook_size(&Partition::column(8)), Some(1));
        for n in [5usize, 7, 9, 11] {
            let h = n.div_ceil(2);
            let lambda = Partition::new(vec![h]).unwrap().with_ones(h - 1);
            assert_eq!(hook_size(&lambda), Some(h));
        }
        assert_eq!(hook_size(&p("2,2")), None);
    }

    #[test]
    fn a5_split_values() {
        let chi: IrreducibleLabel = "3,1,1:+".parse().unwrap();
        let plus = an_character_value(&chi, &"5:+".parse().unwrap()).unwrap();
        let minus = an_character_value(&chi, &"5:-".parse().unwrap()).unwrap();
        assert_eq!(plus, AlgebraicValue::halves(1, 1, 5));
        assert_eq!(minus, AlgebraicValue::halves(1, -1, 5));
        let v = an_character_value(&chi, &"3,1,1".parse().unwrap()).unwrap();
        assert_eq!(v, AlgebraicValue::halves(mn_value(&p("3,1,1"), &p("3,1,1")).unwrap(), 0, 1));
        let triv = IrreducibleLabel::trivial(5);
        for c in ClassLabel::all(5) {
            assert_eq!(an_character_value(&triv, &c).unwrap(), AlgebraicValue::one());
        }
    }

    #[test]
    fn irreducible_labels() {
        let l: IrreducibleLabel = "1,1,1,1".parse().unwrap();
        assert_eq!(l.to_string(), "4");
        assert!("3,1:+".parse::<IrreducibleLabel>().is_err());
        assert!("2,1:+".parse::<IrreducibleLabel>().is_ok());
        assert!("2,2".parse::<IrreducibleLabel>().is_err());
        assert_eq!(IrreducibleLabel::all(5).len(), ClassLabel::all(5).len());
        for n in 2..=12 {
            assert_eq!(IrreducibleLabel::all(n).len(), ClassLabel::all(n).len(), "n = {n}");
        }
    }
}
