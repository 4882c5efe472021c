//! Integer partitions, their diagram geometry, and the splitting of a cycle
//! type into the small typed pieces used by the witness construction.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` a [`Partition`] accepts unless a different limit is requested.
pub const DEFAULT_SIZE_LIMIT: usize = 10_000;

/// A weakly decreasing sequence of positive integers.
///
/// Used both for cycle types of permutations and for labels of irreducible
/// characters of the symmetric group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        Self::with_limit(parts, DEFAULT_SIZE_LIMIT)
    }

    /// Validates `parts` and checks that their sum does not exceed `limit`.
    pub fn with_limit(parts: Vec<usize>, limit: usize) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        let n = parts.iter().try_fold(0usize, |acc, &p| acc.checked_add(p));
        match n {
            Some(n) if n <= limit => Ok(Partition { parts, n }),
            Some(n) => Err(Error::LimitExceeded { what: "partition size", value: n, limit }),
            None => Err(Error::InvalidPartition("sum overflows".into())),
        }
    }

    /// Sorts the parts before validating them.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new(), n: 0 }
    }

    /// The one-part partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            return Self::empty();
        }
        Partition { parts: vec![n], n }
    }

    /// The partition `1^n`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n], n }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts equal to `size`.
    pub fn multiplicity(&self, size: usize) -> usize {
        self.parts.iter().filter(|&&p| p == size).count()
    }

    /// Number of parts equal to 1, i.e. fixed points of a permutation of
    /// this cycle type.
    pub fn fixed_points(&self) -> usize {
        self.multiplicity(1)
    }

    /// True when a permutation of this cycle type is even.
    pub fn is_even_type(&self) -> bool {
        (self.n - self.parts.len()).is_multiple_of(2)
    }

    /// Parts `>= 2`.
    pub fn moved_parts(&self) -> impl Iterator<Item = usize> + '_ {
        self.parts.iter().copied().filter(|&p| p > 1)
    }

    /// Young-diagram transpose.
    pub fn transpose(&self) -> Partition {
        let Some(&first) = self.parts.first() else {
            return Partition::empty();
        };
        let parts = (1..=first)
            .map(|col| self.parts.iter().take_while(|&&p| p >= col).count())
            .collect();
        Partition { parts, n: self.n }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.transpose()
    }

    /// All parts odd and pairwise distinct. Exactly these cycle types of
    /// even permutations break into two classes of the alternating group.
    pub fn is_split_type(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1) && self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Every box lies in the first row or first column.
    pub fn is_hook(&self) -> bool {
        self.parts.get(1).is_none_or(|&p| p <= 1)
    }

    pub fn frobenius_symbol(&self) -> FrobeniusSymbol {
        let m = self
            .parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count();
        let t = self.transpose();
        let arms = (0..m).map(|i| self.parts[i] - i - 1).collect();
        let legs = (0..m).map(|i| t.parts[i] - i - 1).collect();
        FrobeniusSymbol { arms, legs }
    }

    /// The partition with one part of size `size` removed, if present.
    pub fn without_part(&self, size: usize) -> Option<Partition> {
        let idx = self.parts.iter().position(|&p| p == size)?;
        let mut parts = self.parts.clone();
        parts.remove(idx);
        Some(Partition { parts, n: self.n - size })
    }

    /// Appends `count` parts of size 1.
    pub fn with_ones(&self, count: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend(std::iter::repeat_n(1, count));
        Partition { parts, n: self.n + count }
    }

    /// Multiset union of two partitions.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts, n: self.n + other.n }
    }

    /// Partitions of `n` in reverse lexicographic order, `(n)` first.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>, n: usize) {
            if rest == 0 {
                out.push(Partition { parts: current.clone(), n });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                current.push(p);
                rec(rest - p, p, current, out, n);
                current.pop();
            }
        }
        rec(n, n, &mut current, &mut out, n);
        out
    }

    /// Partitions of `n` into pairwise distinct parts.
    pub fn distinct_parts(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>, n: usize) {
            if rest == 0 {
                out.push(Partition { parts: current.clone(), n });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                current.push(p);
                rec(rest - p, p - 1, current, out, n);
                current.pop();
            }
        }
        rec(n, n, &mut current, &mut out, n);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

/// Parses `"5,3,1"`, `"-"` for the empty partition, and `"1x26"` style
/// shorthand for repeated parts (`"9,4,2,2,1x26"`). Parts may come in any
/// order; they are sorted.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let bad = || Error::InvalidPartition(format!("bad token {token:?} in {s:?}"));
            let (part, count) = match token.split_once('x') {
                Some((p, k)) => (p.trim().parse::<usize>().map_err(|_| bad())?, k.trim().parse::<usize>().map_err(|_| bad())?),
                None => (token.parse::<usize>().map_err(|_| bad())?, 1),
            };
            if count > DEFAULT_SIZE_LIMIT {
                return Err(bad());
            }
            parts.extend(std::iter::repeat_n(part, count));
        }
        Partition::from_unsorted(parts)
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

/// Arm and leg lengths along the main diagonal of a Young diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusSymbol {
    pub arms: Vec<usize>,
    pub legs: Vec<usize>,
}

impl FrobeniusSymbol {
    /// Size of the Durfee square.
    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    /// Principal hook lengths `arm + leg + 1`, strictly decreasing.
    pub fn diagonal_hooks(&self) -> Vec<usize> {
        self.arms.iter().zip(&self.legs).map(|(a, l)| a + l + 1).collect()
    }
}

/// The eight shapes a cycle type is cut into before packing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubpartitionKind {
    /// `1^1`
    FixedPoint,
    /// `1^4 3^1`
    ThreeWithFixed,
    /// `3^3`
    ThreeThrees,
    /// one odd part `m >= 5`
    LongOdd,
    /// `2^2`
    TwoTwos,
    /// `2^4`
    FourTwos,
    /// `2^1` and one even part `m >= 4`
    TwoAndEven,
    /// two even parts `m1 >= m2 >= 4`
    TwoEvens,
}

impl SubpartitionKind {
    pub const ALL: [SubpartitionKind; 8] = [
        SubpartitionKind::FixedPoint,
        SubpartitionKind::ThreeWithFixed,
        SubpartitionKind::ThreeThrees,
        SubpartitionKind::LongOdd,
        SubpartitionKind::TwoTwos,
        SubpartitionKind::FourTwos,
        SubpartitionKind::TwoAndEven,
        SubpartitionKind::TwoEvens,
    ];

    /// Conventional number 1..=8.
    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    /// Length of the subinterval the packing reserves for a piece of this
    /// kind, `None` for fixed points.
    pub fn interval_length(self) -> Option<usize> {
        use SubpartitionKind::*;
        match self {
            FixedPoint => None,
            ThreeWithFixed => Some(7),
            ThreeThrees => Some(9),
            LongOdd => Some(5),
            TwoTwos => Some(4),
            FourTwos => Some(8),
            TwoAndEven => Some(6),
            TwoEvens => Some(8),
        }
    }

    /// Shape produced on the reserved subinterval, i.e. the image under
    /// [`phi`] of any piece of this kind.
    pub fn interval_shape(self) -> Partition {
        use SubpartitionKind::*;
        let parts = match self {
            FixedPoint => vec![],
            ThreeWithFixed => vec![3, 1, 1, 1, 1],
            ThreeThrees => vec![3, 3, 3],
            LongOdd => vec![5],
            TwoTwos => vec![2, 2],
            FourTwos => vec![2, 2, 2, 2],
            TwoAndEven => vec![4, 2],
            TwoEvens => vec![4, 4],
        };
        Partition::new(parts).expect("static shape")
    }

    fn matches(self, parts: &[usize]) -> bool {
        use SubpartitionKind::*;
        match (self, parts) {
            (FixedPoint, [1]) => true,
            (ThreeWithFixed, [3, 1, 1, 1, 1]) => true,
            (ThreeThrees, [3, 3, 3]) => true,
            (LongOdd, [m]) => *m >= 5 && m % 2 == 1,
            (TwoTwos, [2, 2]) => true,
            (FourTwos, [2, 2, 2, 2]) => true,
            (TwoAndEven, [m, 2]) => *m >= 4 && m % 2 == 0,
            (TwoEvens, [a, b]) => *b >= 4 && a % 2 == 0 && b % 2 == 0,
            _ => false,
        }
    }
}

impl fmt::Display for SubpartitionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.number())
    }
}

/// A piece of a cycle type together with its kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypedSubpartition {
    kind: SubpartitionKind,
    parts: Partition,
}

impl TypedSubpartition {
    pub fn new(kind: SubpartitionKind, parts: Partition) -> Result<Self> {
        if !kind.matches(parts.parts()) {
            return Err(Error::InvalidPartition(format!("{parts} is not of kind {kind}")));
        }
        Ok(TypedSubpartition { kind, parts })
    }

    pub fn kind(&self) -> SubpartitionKind {
        self.kind
    }

    pub fn parts(&self) -> &Partition {
        &self.parts
    }

    /// Number of rebuild steps needed to grow this piece's seed orbits
    /// back to full length.
    pub fn growth_steps(&self) -> usize {
        self.parts.parts().iter().map(|&p| (p / 2).saturating_sub(2)).sum()
    }
}

fn piece(kind: SubpartitionKind, parts: Vec<usize>) -> TypedSubpartition {
    TypedSubpartition::new(kind, Partition::new(parts).expect("sorted piece")).expect("piece matches its kind")
}

/// Cuts `mu` into typed pieces.
///
/// Odd parts `>= 5` become single pieces; threes go in triples, with one or
/// two leftover threes each absorbing four fixed points; even parts `>= 4`
/// pair up largest first, a leftover one taking a 2; the remaining 2s go in
/// fours and then at most one pair; everything else is a fixed point.
pub fn decompose_subpartitions(mu: &Partition) -> Result<Vec<TypedSubpartition>> {
    use SubpartitionKind::*;
    let mut out = Vec::new();
    let mut ones = mu.multiplicity(1);
    let mut twos = mu.multiplicity(2);
    let threes = mu.multiplicity(3);

    for &p in mu.parts().iter().filter(|&&p| p >= 5 && p % 2 == 1) {
        out.push(piece(LongOdd, vec![p]));
    }

    for _ in 0..threes / 3 {
        out.push(piece(ThreeThrees, vec![3, 3, 3]));
    }
    for _ in 0..threes % 3 {
        if ones < 4 {
            return Err(Error::Infeasible(format!(
                "{mu}: a leftover 3-part needs four fixed points, only {ones} remain"
            )));
        }
        ones -= 4;
        out.push(piece(ThreeWithFixed, vec![3, 1, 1, 1, 1]));
    }

    let big_even: Vec<usize> = mu.parts().iter().copied().filter(|&p| p >= 4 && p % 2 == 0).collect();
    let mut pairs = big_even.chunks_exact(2);
    for pair in pairs.by_ref() {
        out.push(piece(TwoEvens, pair.to_vec()));
    }
    if let [m] = pairs.remainder() {
        if twos == 0 {
            return Err(Error::Infeasible(format!("{mu}: unpaired even part {m} and no 2-part")));
        }
        twos -= 1;
        out.push(piece(TwoAndEven, vec![*m, 2]));
    }

    for _ in 0..twos / 4 {
        out.push(piece(FourTwos, vec![2, 2, 2, 2]));
    }
    match twos % 4 {
        0 => {}
        2 => out.push(piece(TwoTwos, vec![2, 2])),
        r => {
            return Err(Error::Infeasible(format!("{mu}: {r} unmatched 2-parts (odd permutation?)")));
        }
    }

    for _ in 0..ones {
        out.push(piece(FixedPoint, vec![1]));
    }
    Ok(out)
}

/// Replaces each part `>= 6` of a piece by 4 or 5 of the same parity and
/// drops fixed points.
pub fn phi(s: &TypedSubpartition) -> Partition {
    s.kind.interval_shape()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p("3,1,1").transpose(), p("3,1,1"));
        assert_eq!(Partition::row(6).transpose(), Partition::column(6));
        assert_eq!(p("4,2").transpose(), p("2,2,1,1"));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
    }

    #[test]
    fn transpose_by_counting_boxes() {
        // Column lengths counted box by box from the diagram.
        for lambda in Partition::all(12) {
            let mut cols = vec![0usize; lambda.parts().first().copied().unwrap_or(0)];
            for &row in lambda.parts() {
                for c in cols.iter_mut().take(row) {
                    *c += 1;
                }
            }
            assert_eq!(lambda.transpose().parts(), &cols[..]);
        }
    }

    #[test]
    fn transpose_is_involution_up_to_30() {
        for n in 0..=30 {
            for lambda in Partition::all(n) {
                assert_eq!(lambda.transpose().transpose(), lambda);
            }
        }
    }

    #[test]
    fn frobenius_symbol_examples() {
        let f = p("1").frobenius_symbol();
        assert_eq!(f.arms, vec![0]);
        assert_eq!(f.diagonal_hooks(), vec![1]);
        let f = p("3,1,1").frobenius_symbol();
        assert_eq!(f.arms, vec![2]);
        assert_eq!(f.diagonal_hooks(), vec![5]);
        let f = p("3,2,1").frobenius_symbol();
        assert_eq!(f.arms, vec![2, 0]);
        assert_eq!(f.diagonal_hooks(), vec![5, 1]);
    }

    #[test]
    fn split_type_examples() {
        assert!(p("5,3,1").is_split_type());
        assert!(!p("3,3,1").is_split_type());
        assert!(!p("4,2,1").is_split_type());
    }

    #[test]
    fn diagonal_hooks_biject_with_distinct_odd_parts() {
        for n in 1..=25 {
            let mut from_self_conjugate: Vec<Partition> = Partition::all(n)
                .into_iter()
                .filter(Partition::is_self_conjugate)
                .map(|l| {
                    let f = l.frobenius_symbol();
                    assert_eq!(f.arms, f.legs);
                    Partition::new(f.diagonal_hooks()).unwrap()
                })
                .collect();
            let mut split: Vec<Partition> = Partition::all(n).into_iter().filter(Partition::is_split_type).collect();
            from_self_conjugate.sort();
            split.sort();
            assert_eq!(from_self_conjugate, split, "n = {n}");
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("9,4,2,2,1x3").parts(), &[9, 4, 2, 2, 1, 1, 1]);
        assert_eq!(p("1,3,5").to_string(), "5,3,1");
        assert_eq!(p("-"), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "-");
        assert!("3,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::with_limit(vec![6, 5], 10).is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(Partition::distinct_parts(10).len(), 10);
    }

    fn kinds(mu: &str) -> Vec<SubpartitionKind> {
        decompose_subpartitions(&p(mu)).unwrap().iter().map(|s| s.kind()).collect()
    }

    #[test]
    fn decompose_examples() {
        use SubpartitionKind::*;
        assert_eq!(kinds("1x20"), vec![FixedPoint; 20]);
        let k = kinds("7,1x12");
        assert_eq!(k[0], LongOdd);
        assert!(k[1..].iter().all(|&x| x == FixedPoint));
        let pieces = decompose_subpartitions(&p("4,2,2,2,1x10")).unwrap();
        assert_eq!(pieces[0].kind(), TwoAndEven);
        assert_eq!(pieces[0].parts(), &p("4,2"));
        assert_eq!(pieces[1].kind(), TwoTwos);
        assert_eq!(pieces[1].parts(), &p("2,2"));
        assert_eq!(pieces.len(), 12);
    }

    #[test]
    fn decompose_rejects_short_on_fixed_points() {
        assert!(matches!(decompose_subpartitions(&p("3,1,1,1")), Err(Error::Infeasible(_))));
        assert!(decompose_subpartitions(&p("3,3,1x8")).is_ok());
    }

    #[test]
    fn phi_examples() {
        use SubpartitionKind::*;
        assert_eq!(phi(&piece(FixedPoint, vec![1])), Partition::empty());
        assert_eq!(phi(&piece(LongOdd, vec![7])), p("5"));
        assert_eq!(phi(&piece(TwoEvens, vec![6, 4])), p("4,4"));
        assert_eq!(phi(&piece(ThreeThrees, vec![3, 3, 3])), p("3,3,3"));
    }

    #[test]
    fn typed_piece_template_is_enforced() {
        use SubpartitionKind::*;
        assert!(TypedSubpartition::new(LongOdd, p("3")).is_err());
        assert!(TypedSubpartition::new(TwoAndEven, p("5,2")).is_err());
        assert!(TypedSubpartition::new(TwoEvens, p("6,2")).is_err());
        assert!(TypedSubpartition::new(ThreeWithFixed, p("3,1,1,1,1")).is_ok());
    }
}
