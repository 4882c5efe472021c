//! Valid sequences and opposite pairs.
//!
//! A valid sequence for `[a, b]` lists every point of the interval once,
//! starting with `b`. Two valid sequences are opposite when the cycles they
//! spell are conjugate by an odd permutation of the interval; equivalently
//! the position-wise map from one to the other is odd.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::permutations::{Parity, Permutation};

use super::packing::Interval;

/// Longest interval the exhaustive search will scan.
pub const SEARCH_LIMIT: usize = 10;

const CACHE_HEADER: &str = "anclass sequence cache";
const CACHE_VERSION: u32 = 1;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct ValidSequence {
    terms: Vec<usize>,
}

impl ValidSequence {
    pub fn new(terms: Vec<usize>) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidPermutation(format!("{terms:?} is not a valid sequence: {msg}"));
        let (Some(&lo), Some(&hi)) = (terms.iter().min(), terms.iter().max()) else {
            return Err(bad("empty"));
        };
        if lo == 0 {
            return Err(bad("points start at 1"));
        }
        if terms[0] != hi {
            return Err(bad("first term must be the right endpoint"));
        }
        let mut sorted = terms.clone();
        sorted.sort_unstable();
        if sorted.iter().enumerate().any(|(i, &x)| x != lo + i) {
            return Err(bad("terms must fill an interval exactly once"));
        }
        Ok(ValidSequence { terms })
    }

    pub fn terms(&self) -> &[usize] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn interval(&self) -> Interval {
        let b = self.terms[0];
        Interval::new(b + 1 - self.terms.len(), b).expect("nonempty")
    }

    /// The same sequence moved onto `[a, a + len - 1]`.
    pub fn placed_at(&self, a: usize) -> ValidSequence {
        let lo = self.interval().a();
        ValidSequence { terms: self.terms.iter().map(|&t| t - lo + a).collect() }
    }

    /// `(a, ..., b)(S)` on the points `1..=b`.
    pub fn interval_product(&self) -> Permutation {
        let iv = self.interval();
        let n = iv.b();
        let run: Vec<usize> = (iv.a()..=iv.b()).collect();
        let c = Permutation::cycle(n, &run).expect("interval cycle");
        let s = Permutation::cycle(n, &self.terms).expect("sequence cycle");
        &c * &s
    }

    /// Shape of [`interval_product`](Self::interval_product) restricted to
    /// the interval.
    pub fn shape(&self) -> Partition {
        let iv = self.interval();
        let g = self.interval_product();
        let lens: Vec<usize> = g
            .all_cycles()
            .into_iter()
            .filter(|c| c[0] >= iv.a())
            .map(|c| c.len())
            .collect();
        Partition::from_unsorted(lens).expect("cycle lengths")
    }

    /// Whether the two sequences are opposite.
    pub fn is_opposite(&self, other: &ValidSequence) -> bool {
        self.interval() == other.interval() && position_map_parity(&self.terms, &other.terms) == Parity::Odd
    }
}

fn position_map_parity(s: &[usize], t: &[usize]) -> Parity {
    let lo = *s.iter().min().expect("nonempty");
    let mut map = vec![0; s.len()];
    for (&x, &y) in s.iter().zip(t) {
        map[x - lo] = y - lo + 1;
    }
    Permutation::from_images(&map).expect("bijection").parity()
}

impl fmt::Display for ValidSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t: Vec<String> = self.terms.iter().map(usize::to_string).collect();
        write!(f, "({})", t.join(","))
    }
}

impl fmt::Debug for ValidSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ValidSequence{self}")
    }
}

impl TryFrom<Vec<usize>> for ValidSequence {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        ValidSequence::new(v)
    }
}

impl From<ValidSequence> for Vec<usize> {
    fn from(s: ValidSequence) -> Vec<usize> {
        s.terms
    }
}

/// Hand-picked sequences for the even lengths.
fn tabulated(length: usize, shape: &Partition) -> Option<(Vec<usize>, Option<Vec<usize>>)> {
    let parts = shape.parts();
    Some(match (length, parts) {
        (4, [2, 2]) => (vec![4, 1, 2, 3], None),
        (8, [2, 2, 2, 2]) => (vec![8, 1, 2, 7, 4, 5, 6, 3], Some(vec![8, 1, 3, 5, 6, 2, 7, 4])),
        (6, [4, 2]) => (vec![6, 1, 2, 4, 5, 3], Some(vec![6, 1, 3, 4, 5, 2])),
        (8, [4, 4]) => (vec![8, 1, 2, 4, 7, 5, 3, 6], Some(vec![8, 1, 2, 5, 7, 3, 6, 4])),
        _ => return None,
    })
}

// Lexicographic walk over sequences on [1, length] that start with `length`.
fn search(length: usize, shape: &Partition) -> Option<(ValidSequence, Option<ValidSequence>)> {
    let mut rest: Vec<usize> = (1..length).collect();
    let mut first: Option<ValidSequence> = None;
    loop {
        let mut terms = vec![length];
        terms.extend_from_slice(&rest);
        let s = ValidSequence { terms };
        if s.shape() == *shape {
            match &first {
                None => first = Some(s),
                Some(f) if f.is_opposite(&s) => return Some((first.unwrap(), Some(s))),
                Some(_) => {}
            }
        }
        let Some(i) = (1..rest.len()).rev().find(|&i| rest[i - 1] < rest[i]) else {
            break;
        };
        let j = (i..rest.len()).rev().find(|&j| rest[j] > rest[i - 1]).expect("successor");
        rest.swap(i - 1, j);
        rest[i..].reverse();
    }
    first.map(|f| (f, None))
}

type Entry = (ValidSequence, Option<ValidSequence>);

/// Memo of opposite pairs keyed by `(length, shape)`, with a versioned
/// on-disk form.
#[derive(Default, Debug, Clone, PartialEq, Eq)]
pub struct SequenceCache {
    entries: BTreeMap<(usize, Partition), Entry>,
}

impl SequenceCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, length: usize, shape: &Partition) -> Option<&Entry> {
        self.entries.get(&(length, shape.clone()))
    }

    /// Records a pair after re-checking it.
    pub fn insert(&mut self, length: usize, shape: Partition, entry: Entry) -> Result<()> {
        check_entry(length, &shape, &entry)?;
        self.entries.insert((length, shape), entry);
        Ok(())
    }

    pub fn export(&self) -> String {
        let mut s = format!("{CACHE_HEADER}\nversion {CACHE_VERSION}\n");
        for ((len, shape), (a, b)) in &self.entries {
            let terms = |v: &ValidSequence| v.terms.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
            let bar = b.as_ref().map_or("-".to_string(), terms);
            s.push_str(&format!("{len} {shape} : {} | {bar}\n", terms(a)));
        }
        s
    }

    pub fn import(text: &str) -> Result<Self> {
        let err = |line: usize, msg: String| Error::Format { line, msg };
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
        match lines.next() {
            Some((_, CACHE_HEADER)) => {}
            other => return Err(err(1, format!("bad header {:?}", other.map(|x| x.1)))),
        }
        match lines.next() {
            Some((_, v)) if v == format!("version {CACHE_VERSION}") => {}
            other => return Err(err(2, format!("unsupported version {:?}", other.map(|x| x.1)))),
        }
        let mut cache = SequenceCache::new();
        for (ln, line) in lines.filter(|(_, l)| !l.is_empty()) {
            let parse_terms = |s: &str| -> Result<ValidSequence> {
                let v = s
                    .split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|e| err(ln, e.to_string())))
                    .collect::<Result<Vec<_>>>()?;
                ValidSequence::new(v).map_err(|e| err(ln, e.to_string()))
            };
            let (key, seqs) = line.split_once(':').ok_or_else(|| err(ln, "missing ':'".into()))?;
            let (len, shape) = key.trim().split_once(' ').ok_or_else(|| err(ln, "expected `<length> <shape>`".into()))?;
            let len: usize = len.parse().map_err(|_| err(ln, format!("bad length {len:?}")))?;
            let shape: Partition = shape.trim().parse().map_err(|e: Error| err(ln, e.to_string()))?;
            let (a, b) = seqs.split_once('|').ok_or_else(|| err(ln, "missing '|'".into()))?;
            let a = parse_terms(a)?;
            let b = if b.trim() == "-" { None } else { Some(parse_terms(b)?) };
            cache.insert(len, shape, (a, b)).map_err(|e| err(ln, e.to_string()))?;
        }
        Ok(cache)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::import(&std::fs::read_to_string(path)?)
    }

    /// Writes through a temporary file so concurrent readers never see a
    /// partial cache.
    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        std::fs::write(&tmp, self.export())?;
        std::fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn merge(&mut self, other: &SequenceCache) {
        for (k, v) in &other.entries {
            self.entries.entry(k.clone()).or_insert_with(|| v.clone());
        }
    }
}

fn check_entry(length: usize, shape: &Partition, (s, bar): &Entry) -> Result<()> {
    let failed = || Error::SearchFailed { length, shape: shape.to_string() };
    if s.len() != length || s.interval().a() != 1 || s.shape() != *shape {
        return Err(failed());
    }
    if let Some(b) = bar {
        if b.len() != length || b.shape() != *shape || !s.is_opposite(b) {
            return Err(failed());
        }
    }
    Ok(())
}

fn global() -> &'static Mutex<SequenceCache> {
    static CACHE: OnceLock<Mutex<SequenceCache>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Adds entries (e.g. loaded from disk) to the process-wide cache.
pub fn preload(cache: &SequenceCache) {
    global().lock().expect("sequence cache").merge(cache);
}

/// Snapshot of the process-wide cache, for persisting.
pub fn cached() -> SequenceCache {
    global().lock().expect("sequence cache").clone()
}

/// A sequence `S` on `[1, length]` with `(1, ..., length)(S)` of the given
/// shape, and an opposite partner when `need_partner`.
///
/// Even lengths use fixed sequences; other lengths are found by exhaustive
/// search, first hit in lexicographic order.
pub fn find_opposite_valid_sequences(length: usize, shape: &Partition, need_partner: bool) -> Result<Entry> {
    if shape.n() != length {
        return Err(Error::SizeMismatch(length, shape.n()));
    }
    if let Some(e) = global().lock().expect("sequence cache").get(length, shape) {
        if e.1.is_some() || !need_partner {
            return Ok(e.clone());
        }
    }
    let entry = match tabulated(length, shape) {
        Some((s, bar)) => (
            ValidSequence::new(s)?,
            bar.map(ValidSequence::new).transpose()?,
        ),
        None => {
            if length > SEARCH_LIMIT {
                return Err(Error::LimitExceeded { what: "valid sequence search length", value: length, limit: SEARCH_LIMIT });
            }
            search(length, shape).ok_or_else(|| Error::SearchFailed { length, shape: shape.to_string() })?
        }
    };
    if need_partner && entry.1.is_none() {
        return Err(Error::SearchFailed { length, shape: shape.to_string() });
    }
    let mut cache = global().lock().expect("sequence cache");
    cache.insert(length, shape.clone(), entry.clone())?;
    Ok(entry)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::SubpartitionKind;

    fn seq(v: &[usize]) -> ValidSequence {
        ValidSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(ValidSequence::new(vec![3, 1, 2]).is_ok());
        assert!(ValidSequence::new(vec![1, 3, 2]).is_err());
        assert!(ValidSequence::new(vec![3, 1, 1]).is_err());
        assert!(ValidSequence::new(vec![]).is_err());
        assert_eq!(seq(&[7, 4, 5, 6]).interval(), Interval::new(4, 7).unwrap());
        assert_eq!(seq(&[4, 1, 2, 3]).placed_at(4).terms(), &[7, 4, 5, 6]);
    }

    #[test]
    fn tabulated_shapes() {
        for kind in SubpartitionKind::ALL {
            let Some(len) = kind.interval_length() else { continue };
            let shape = kind.interval_shape();
            let need = kind != SubpartitionKind::TwoTwos;
            let (s, bar) = find_opposite_valid_sequences(len, &shape, need).unwrap();
            assert_eq!(s.shape(), shape, "{kind}");
            assert_eq!(s.terms()[0], len);
            if let Some(b) = bar {
                assert_eq!(b.shape(), shape);
                assert!(s.is_opposite(&b), "{kind}");
            } else {
                assert!(!need);
            }
        }
    }

    #[test]
    fn known_pairs() {
        let (s, bar) = find_opposite_valid_sequences(6, &"4,2".parse().unwrap(), true).unwrap();
        assert_eq!(s.terms(), &[6, 1, 2, 4, 5, 3]);
        assert_eq!(bar.unwrap().terms(), &[6, 1, 3, 4, 5, 2]);
        let (s, bar) = find_opposite_valid_sequences(4, &"2,2".parse().unwrap(), false).unwrap();
        assert_eq!(s.terms(), &[4, 1, 2, 3]);
        assert!(bar.is_none());
    }

    #[test]
    fn cache_round_trip() {
        let mut c = SequenceCache::new();
        for (len, shape) in [(5, "5"), (7, "3,1,1,1,1"), (6, "4,2")] {
            let shape: Partition = shape.parse().unwrap();
            let e = find_opposite_valid_sequences(len, &shape, true).unwrap();
            c.insert(len, shape, e).unwrap();
        }
        let text = c.export();
        assert_eq!(SequenceCache::import(&text).unwrap(), c);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("seq.cache");
        c.save(&path).unwrap();
        assert_eq!(SequenceCache::load(&path).unwrap(), c);
        // a tampered partner is rejected
        let bad = text.replace("| 6 1 3 4 5 2", "| 6 1 2 4 5 3");
        assert!(SequenceCache::import(&bad).is_err());
    }
}
