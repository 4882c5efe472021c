//! Permutations of `{1..n}`, cycle structure, and labels for conjugacy
//! classes of the alternating group.
//!
//! Products compose right to left: `a.multiply(&b)` maps `x` to `a(b(x))`.
//! Conjugation `g.conjugate(&s)` is `s g s^-1`.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A bijection of `{1..n}`. Points are 1-based in every public method.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { map: (0..n).collect() }
    }

    /// Builds a permutation from its one-line form: `images[i-1]` is the
    /// image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut map = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of 1..={n}")));
            }
            map.push(x - 1);
        }
        Ok(Permutation { map })
    }

    /// Product of the given disjoint cycles on `n` points.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut map: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                if x == 0 || x > n || std::mem::replace(&mut seen[x - 1], true) {
                    return Err(Error::InvalidPermutation(format!("cycles {cycles:?} are not disjoint within 1..={n}")));
                }
                map[x - 1] = c[(i + 1) % c.len()] - 1;
            }
        }
        Ok(Permutation { map })
    }

    /// A single cycle on `n` points.
    pub fn cycle(n: usize, points: &[usize]) -> Result<Self> {
        Self::from_cycles(n, &[points.to_vec()])
    }

    pub(crate) fn from_map_unchecked(map: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = map.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i == x)
        });
        Permutation { map }
    }

    /// Uniformly random permutation.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut map: Vec<usize> = (0..n).collect();
        map.shuffle(rng);
        Permutation { map }
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.map[x - 1] + 1
    }

    /// One-line form, 1-based.
    pub fn images(&self) -> Vec<usize> {
        self.map.iter().map(|&x| x + 1).collect()
    }

    fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(())
    }

    /// `self * other`, acting as `x -> self(other(x))`.
    pub fn multiply(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(Permutation { map: other.map.iter().map(|&y| self.map[y]).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.map.len()];
        for (i, &x) in self.map.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { map: inv }
    }

    /// `s * self * s^-1`. Relabels every point `x` of `self` as `s(x)`.
    pub fn conjugate(&self, s: &Permutation) -> Result<Permutation> {
        self.check_degree(s)?;
        let mut map = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            map[s.map[x]] = s.map[y];
        }
        Ok(Permutation { map })
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn fix_count(&self) -> usize {
        self.map.iter().enumerate().filter(|&(i, &x)| i == x).count()
    }

    /// All cycles including fixed points, each starting at its smallest
    /// point, ordered by that point.
    pub fn all_cycles(&self) -> Vec<Vec<usize>> {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut c = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                c.push(x + 1);
                x = self.map[x];
            }
            out.push(c);
        }
        out
    }

    /// Cycles of length at least 2.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.all_cycles().into_iter().filter(|c| c.len() > 1).collect()
    }

    fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.map[x];
            }
            out.push(len);
        }
        out
    }

    /// Sorted cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycle_lengths()).expect("cycle lengths form a partition")
    }

    pub fn parity(&self) -> Parity {
        let lens = self.cycle_lengths();
        if (self.map.len() - lens.len()).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    /// Points of the orbit of `x`, starting with `x`.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut out = vec![x];
        let mut y = self.apply(x);
        while y != x {
            out.push(y);
            y = self.apply(y);
        }
        out
    }

    /// The same permutation on `n >= degree` points, fixing the new ones.
    pub fn embed(&self, n: usize) -> Result<Permutation> {
        if n < self.degree() {
            return Err(Error::DegreeMismatch(self.degree(), n));
        }
        let mut map = self.map.clone();
        map.extend(self.map.len()..n);
        Ok(Permutation { map })
    }

    /// Number of cycles whose length is 3 mod 4.
    pub fn kappa(&self) -> usize {
        self.cycle_lengths().into_iter().filter(|l| l % 4 == 3).count()
    }

    /// Whether `self` and its inverse are conjugate in the alternating
    /// group, for elements of split cycle type: that holds exactly when the
    /// number of cycles of length 3 mod 4 is even.
    pub fn is_real_in_an(&self) -> Result<bool> {
        if !self.is_even() {
            return Err(Error::OddPermutation);
        }
        let t = self.cycle_type();
        if !t.is_split_type() {
            return Err(Error::NotSplit(t.to_string()));
        }
        Ok(self.kappa().is_multiple_of(2))
    }

    /// Space-separated one-line form, `"2 3 4 5 1"`.
    pub fn one_line(&self) -> String {
        self.images().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
    }

    /// Parses either cycle notation (`"(1,2,3)(4,5)"`, needs `n`) or the
    /// one-line form (`"2 3 1"`).
    pub fn parse(s: &str, n: Option<usize>) -> Result<Permutation> {
        let s = s.trim();
        if s.starts_with('(') {
            let cycles = parse_cycles(s)?;
            let max = cycles.iter().flatten().copied().max().unwrap_or(0);
            let n = n.unwrap_or(max);
            if max > n {
                return Err(Error::InvalidPermutation(format!("point {max} exceeds degree {n}")));
            }
            Permutation::from_cycles(n, &cycles)
        } else {
            let images = s
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| Error::InvalidPermutation(format!("bad image {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            let p = Permutation::from_images(&images)?;
            match n {
                Some(n) if n != p.degree() => Err(Error::DegreeMismatch(p.degree(), n)),
                _ => Ok(p),
            }
        }
    }
}

fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let bad = || Error::InvalidPermutation(format!("bad cycle notation {s:?}"));
        let body_start = rest.strip_prefix('(').ok_or_else(bad)?;
        let end = body_start.find(')').ok_or_else(bad)?;
        let body = body_start[..end].trim();
        if !body.is_empty() {
            let c = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            cycles.push(c);
        }
        rest = body_start[end + 1..].trim_start();
    }
    Ok(cycles)
}

impl std::ops::Mul for &Permutation {
    type Output = Permutation;

    /// Panics on degree mismatch; use [`Permutation::multiply`] otherwise.
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.multiply(rhs).expect("degree mismatch in product")
    }
}

/// Cycle notation without fixed points; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// Some `s` with `s x s^-1 = y`, built by lining up cycles of equal length.
pub fn conjugator(x: &Permutation, y: &Permutation) -> Option<Permutation> {
    if x.degree() != y.degree() {
        return None;
    }
    let mut cx = x.all_cycles();
    let mut cy = y.all_cycles();
    cx.sort_by_key(|c| std::cmp::Reverse(c.len()));
    cy.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let mut map = vec![usize::MAX; x.degree()];
    for (a, b) in cx.iter().zip(&cy) {
        if a.len() != b.len() {
            return None;
        }
        for (&p, &q) in a.iter().zip(b) {
            map[p - 1] = q - 1;
        }
    }
    (cx.len() == cy.len()).then_some(Permutation { map })
}

/// The two halves of a split class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SplitSign {
    Plus,
    Minus,
}

impl SplitSign {
    pub fn flip(self) -> SplitSign {
        match self {
            SplitSign::Plus => SplitSign::Minus,
            SplitSign::Minus => SplitSign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            SplitSign::Plus => '+',
            SplitSign::Minus => '-',
        }
    }
}

/// A conjugacy class of the alternating group: a cycle type of an even
/// permutation, plus a sign when that type has distinct odd parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ClassLabel {
    cycle_type: Partition,
    sign: Option<SplitSign>,
}

impl ClassLabel {
    pub fn new(cycle_type: Partition, sign: Option<SplitSign>) -> Result<Self> {
        if !cycle_type.is_even_type() {
            return Err(Error::InvalidLabel(format!("{cycle_type} is the cycle type of an odd permutation")));
        }
        if cycle_type.is_split_type() != sign.is_some() {
            return Err(Error::InvalidLabel(format!(
                "{cycle_type} {} a sign",
                if sign.is_some() { "does not take" } else { "needs" }
            )));
        }
        Ok(ClassLabel { cycle_type, sign })
    }

    /// Label for a non-split type, or the `+` half of a split one.
    pub fn principal(cycle_type: Partition) -> Result<Self> {
        let sign = cycle_type.is_split_type().then_some(SplitSign::Plus);
        Self::new(cycle_type, sign)
    }

    pub fn identity(n: usize) -> Self {
        let t = Partition::column(n);
        let sign = t.is_split_type().then_some(SplitSign::Plus);
        ClassLabel { cycle_type: t, sign }
    }

    pub fn cycle_type(&self) -> &Partition {
        &self.cycle_type
    }

    pub fn sign(&self) -> Option<SplitSign> {
        self.sign
    }

    pub fn n(&self) -> usize {
        self.cycle_type.n()
    }

    pub fn is_split(&self) -> bool {
        self.sign.is_some()
    }

    pub fn is_identity(&self) -> bool {
        self.cycle_type.parts().iter().all(|&p| p == 1)
    }

    /// The other half of a split class; a non-split label is its own
    /// partner.
    pub fn partner(&self) -> ClassLabel {
        ClassLabel { cycle_type: self.cycle_type.clone(), sign: self.sign.map(SplitSign::flip) }
    }

    /// Whether the class is closed under inversion.
    pub fn is_real(&self) -> bool {
        !self.is_split() || self.cycle_type.parts().iter().filter(|&&p| p % 4 == 3).count() % 2 == 0
    }

    /// Label of the inverses of the class elements.
    pub fn inverse(&self) -> ClassLabel {
        if self.is_real() {
            self.clone()
        } else {
            self.partner()
        }
    }

    /// All classes of `A_n`: cycle types in increasing lexicographic order
    /// (identity first), `+` before `-`.
    pub fn all(n: usize) -> Vec<ClassLabel> {
        let mut out = Vec::new();
        for t in Partition::all(n).into_iter().rev() {
            if !t.is_even_type() {
                continue;
            }
            if t.is_split_type() {
                out.push(ClassLabel { cycle_type: t.clone(), sign: Some(SplitSign::Plus) });
                out.push(ClassLabel { cycle_type: t, sign: Some(SplitSign::Minus) });
            } else {
                out.push(ClassLabel { cycle_type: t, sign: None });
            }
        }
        out
    }

    /// Every label whose cycle type is `t`.
    pub fn of_type(t: &Partition) -> Vec<ClassLabel> {
        if t.is_split_type() {
            vec![
                ClassLabel { cycle_type: t.clone(), sign: Some(SplitSign::Plus) },
                ClassLabel { cycle_type: t.clone(), sign: Some(SplitSign::Minus) },
            ]
        } else {
            vec![ClassLabel { cycle_type: t.clone(), sign: None }]
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Some(s) => write!(f, "{}:{}", self.cycle_type, s.symbol()),
            None => write!(f, "{}", self.cycle_type),
        }
    }
}

impl fmt::Debug for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClassLabel({self})")
    }
}

/// `"5,3,1:+"`, `"2,2,1"`, `"9:-"`, with `"1xK"` shorthand.
///
/// A split type written without a sign is rejected.
impl FromStr for ClassLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (t, sign) = match s.trim().rsplit_once(':') {
            Some((t, "+")) => (t, Some(SplitSign::Plus)),
            Some((t, "-")) => (t, Some(SplitSign::Minus)),
            Some(_) => return Err(Error::InvalidLabel(format!("bad sign in {s:?}"))),
            None => (s, None),
        };
        ClassLabel::new(t.parse()?, sign)
    }
}

impl TryFrom<String> for ClassLabel {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<ClassLabel> for String {
    fn from(l: ClassLabel) -> String {
        l.to_string()
    }
}

/// Canonical element of a class.
///
/// Cycles are filled with consecutive points, longest cycle first. The `-`
/// half of a split class conjugates the `+` representative by the
/// transposition of the two largest points of its longest cycle.
pub fn class_representative(label: &ClassLabel) -> Permutation {
    let n = label.n();
    let mut map: Vec<usize> = (0..n).collect();
    let mut start = 0;
    for &len in label.cycle_type.parts() {
        for i in 0..len {
            map[start + i] = start + (i + 1) % len;
        }
        start += len;
    }
    let plus = Permutation { map };
    match label.sign {
        Some(SplitSign::Minus) => {
            let top = label.cycle_type.parts()[0];
            let mut t: Vec<usize> = (0..n).collect();
            t.swap(top - 2, top - 1);
            plus.conjugate(&Permutation { map: t }).expect("same degree")
        }
        _ => plus,
    }
}

/// The class of an even permutation.
pub fn an_class_of(g: &Permutation) -> Result<ClassLabel> {
    if !g.is_even() {
        return Err(Error::OddPermutation);
    }
    let t = g.cycle_type();
    if !t.is_split_type() {
        return Ok(ClassLabel { cycle_type: t, sign: None });
    }
    let plus = ClassLabel { cycle_type: t, sign: Some(SplitSign::Plus) };
    let rep = class_representative(&plus);
    // Distinct cycle lengths make the alignment unique up to rotating odd
    // cycles, so its parity is well defined.
    let s = conjugator(&rep, g).expect("same cycle type");
    let sign = match s.parity() {
        Parity::Even => SplitSign::Plus,
        Parity::Odd => SplitSign::Minus,
    };
    Ok(ClassLabel { cycle_type: plus.cycle_type, sign: Some(sign) })
}

/// Uniformly random element of the class.
pub fn random_in_class<R: Rng + ?Sized>(label: &ClassLabel, rng: &mut R) -> Permutation {
    let rep = class_representative(label);
    let n = label.n();
    let mut s = Permutation::random(n, rng);
    if n >= 2 && label.is_split() && s.parity() == Parity::Odd {
        // an even conjugator keeps the half; s(1 2) is uniform on A_n
        s.map.swap(0, 1);
    }
    rep.conjugate(&s).expect("same degree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn label(s: &str) -> ClassLabel {
        s.parse().unwrap()
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(Permutation::identity(5).cycle_type().to_string(), "1,1,1,1,1");
        let c = Permutation::cycle(5, &[1, 2, 3, 4, 5]).unwrap();
        assert_eq!(c.cycle_type().to_string(), "5");
        let d = Permutation::cycle(15, &[15, 8, 10, 12, 13, 9, 14, 11, 7, 4, 5, 6, 3, 2, 1]).unwrap();
        assert_eq!(d.cycle_type().to_string(), "15");
    }

    #[test]
    fn group_operations() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = Permutation::random(9, &mut rng);
        let h = Permutation::random(9, &mut rng);
        assert!(g.multiply(&g.inverse()).unwrap().is_identity());
        assert_eq!(g.multiply(&h).unwrap().parity(), g.parity().combine(h.parity()));
        assert_eq!(g.conjugate(&h).unwrap().cycle_type(), g.cycle_type());
        assert_eq!(g.conjugate(&h).unwrap(), &(&h * &g) * &h.inverse());
        assert_eq!(Permutation::cycle(4, &[1, 3]).unwrap().parity(), Parity::Odd);
        let g = Permutation::from_cycles(10, &[vec![1, 2, 3, 4, 5], vec![6, 7, 8]]).unwrap();
        assert_eq!(g.fix_count(), 2);
        assert!(matches!(g.multiply(&Permutation::identity(9)), Err(Error::DegreeMismatch(10, 9))));
    }

    #[test]
    fn composition_is_right_to_left() {
        let a = Permutation::cycle(3, &[1, 2]).unwrap();
        let b = Permutation::cycle(3, &[2, 3]).unwrap();
        // a(b(2)) = a(3) = 3
        assert_eq!(a.multiply(&b).unwrap().apply(2), 3);
    }

    #[test]
    fn text_formats() {
        let g = Permutation::parse("2 3 4 5 1", None).unwrap();
        assert_eq!(g.to_string(), "(1,2,3,4,5)");
        assert_eq!(Permutation::parse("(1,2,3,4,5)", Some(5)).unwrap(), g);
        assert_eq!(g.one_line(), "2 3 4 5 1");
        let h = Permutation::parse("(1,2)(4,5)", Some(6)).unwrap();
        assert_eq!(h.degree(), 6);
        assert_eq!(Permutation::parse("()", Some(3)).unwrap(), Permutation::identity(3));
        assert!(Permutation::parse("(1,2)(2,3)", Some(3)).is_err());
        assert!(Permutation::parse("2 2 1", None).is_err());
        assert!(Permutation::parse("(1,7)", Some(5)).is_err());
    }

    #[test]
    fn representatives() {
        assert!(class_representative(&label("1x6")).is_identity());
        let plus = class_representative(&label("5:+"));
        assert_eq!(plus.images(), vec![2, 3, 4, 5, 1]);
        let minus = class_representative(&label("5:-"));
        assert_eq!(minus, Permutation::cycle(5, &[1, 2, 3, 5, 4]).unwrap());
        assert_eq!(an_class_of(&plus).unwrap(), label("5:+"));
        assert_eq!(an_class_of(&minus).unwrap(), label("5:-"));
        assert_eq!(an_class_of(&Permutation::cycle(5, &[1, 2, 3]).unwrap()).unwrap(), label("3,1,1"));
        assert!(matches!(an_class_of(&Permutation::cycle(5, &[1, 2]).unwrap()), Err(Error::OddPermutation)));
    }

    #[test]
    fn kappa_and_reality() {
        assert_eq!(Permutation::cycle(7, &[1, 2, 3, 4, 5, 6, 7]).unwrap().kappa(), 1);
        assert_eq!(Permutation::cycle(5, &[1, 2, 3, 4, 5]).unwrap().kappa(), 0);
        let g = class_representative(&label("7,3,1:+"));
        assert_eq!(g.kappa(), 2);
        assert!(class_representative(&label("5:+")).is_real_in_an().unwrap());
        assert!(!class_representative(&label("7:+")).is_real_in_an().unwrap());
        assert!(class_representative(&label("7,3:+")).is_real_in_an().unwrap());
        assert!(matches!(class_representative(&label("3,1,1")).is_real_in_an(), Err(Error::NotSplit(_))));
    }

    #[test]
    fn labels_parse_and_validate() {
        assert_eq!(label("5,3,1:+").to_string(), "5,3,1:+");
        assert!("5,3,1".parse::<ClassLabel>().is_err());
        assert!("2,2,1:+".parse::<ClassLabel>().is_err());
        assert!("2,1,1".parse::<ClassLabel>().is_err());
        assert_eq!(ClassLabel::all(5).iter().map(|l| l.to_string()).collect::<Vec<_>>(), vec![
            "1,1,1,1,1", "2,2,1", "3,1,1", "5:+", "5:-"
        ]);
        assert_eq!(ClassLabel::identity(1).to_string(), "1:+");
    }

    #[test]
    fn random_in_class_lands_in_class() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for l in ClassLabel::all(9) {
            for _ in 0..20 {
                let g = random_in_class(&l, &mut rng);
                assert_eq!(an_class_of(&g).unwrap(), l);
            }
        }
    }

    #[test]
    fn inverse_label_tracks_reality() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 5..=11 {
            for l in ClassLabel::all(n) {
                let g = random_in_class(&l, &mut rng);
                assert_eq!(an_class_of(&g.inverse()).unwrap(), l.inverse(), "{l}");
            }
        }
    }
}
