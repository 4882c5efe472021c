use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use super::{mn, value_with, AlgebraicValue, IrreducibleLabel};
use crate::classalgebra::class_size;
use crate::error::{Error, Result};
use crate::permutations::{ClassLabel, SplitSign};

/// Largest `n` for which full tables are built unless asked otherwise.
pub const DEFAULT_TABLE_LIMIT: usize = 16;

// Beyond this the i128 fast paths could overflow.
const HARD_TABLE_LIMIT: usize = 24;

const FORMAT_HEADER: &str = "anclass character table";
const FORMAT_VERSION: u32 = 1;

/// Complete exact character table of `A_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    classes: Vec<ClassLabel>,
    characters: Vec<IrreducibleLabel>,
    values: Vec<Vec<AlgebraicValue>>,
    class_sizes: Vec<u128>,
    // (2a, 2b) of every entry, and the radicand shared by each column
    doubled: Vec<Vec<(i128, i128)>>,
    radicands: Vec<i64>,
    degrees: Vec<u128>,
}

/// Builds the table of `A_n` with the default size limit.
pub fn an_character_table(n: usize) -> Result<CharacterTable> {
    CharacterTable::build(n, DEFAULT_TABLE_LIMIT)
}

impl CharacterTable {
    pub fn build(n: usize, limit: usize) -> Result<Self> {
        let limit = limit.min(HARD_TABLE_LIMIT);
        if n > limit {
            return Err(Error::LimitExceeded { what: "character table degree", value: n, limit });
        }
        if n < 2 {
            return Err(Error::Infeasible(format!("character table needs n >= 2, got {n}")));
        }
        let classes = ClassLabel::all(n);
        let characters = IrreducibleLabel::all(n);
        let values: Vec<Vec<AlgebraicValue>> = characters
            .par_iter()
            .map(|chi| {
                let mut cache = mn::MnCache::new();
                classes.iter().map(|c| value_with(chi, c, &mut cache)).collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let class_sizes = classes
            .iter()
            .map(|c| u128::try_from(class_size(c)).expect("class size fits u128"))
            .collect();
        let mut table = Self::assemble(n, classes, characters, values, class_sizes)?;
        if table.check_orthogonality().is_err() {
            table.swap_minus_class_values()?;
        }
        table.check_orthogonality().map_err(Error::IrrationalResidue)?;
        Ok(table)
    }

    fn assemble(
        n: usize,
        classes: Vec<ClassLabel>,
        characters: Vec<IrreducibleLabel>,
        values: Vec<Vec<AlgebraicValue>>,
        class_sizes: Vec<u128>,
    ) -> Result<Self> {
        let bad = |msg: String| Error::Format { line: 0, msg };
        if values.len() != characters.len() || values.iter().any(|r| r.len() != classes.len()) {
            return Err(bad("value matrix has the wrong shape".into()));
        }
        let mut doubled = Vec::with_capacity(values.len());
        for row in &values {
            let r = row
                .iter()
                .map(|v| v.doubled_integers().ok_or_else(|| bad(format!("{v} is not a half-integer combination"))))
                .collect::<Result<Vec<_>>>()?;
            doubled.push(r);
        }
        let mut radicands = vec![1i64; classes.len()];
        for (j, r) in radicands.iter_mut().enumerate() {
            for row in &values {
                let v = &row[j];
                if !v.is_rational() {
                    if *r != 1 && *r != v.d() {
                        return Err(bad(format!("class {} carries two radicands", classes[j])));
                    }
                    *r = v.d();
                }
            }
        }
        let identity = classes.iter().position(ClassLabel::is_identity).ok_or_else(|| bad("no identity class".into()))?;
        let degrees = doubled
            .iter()
            .map(|row| {
                let (a, _) = row[identity];
                u128::try_from(a / 2).map_err(|_| bad("negative degree".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CharacterTable { n, classes, characters, values, class_sizes, doubled, radicands, degrees })
    }

    // Exchanges the two split constituents' values on every `-` class of
    // their diagonal-hook type.
    fn swap_minus_class_values(&mut self) -> Result<()> {
        let mut values = self.values.clone();
        for (i, chi) in self.characters.iter().enumerate() {
            if chi.sign() != Some(SplitSign::Plus) {
                continue;
            }
            let hooks = chi.diagonal_hooks();
            let partner = self
                .characters
                .iter()
                .position(|c| c.partition() == chi.partition() && c.sign() == Some(SplitSign::Minus))
                .expect("split pair");
            for (j, c) in self.classes.iter().enumerate() {
                if c.sign() == Some(SplitSign::Minus) && *c.cycle_type() == hooks {
                    let tmp = values[i][j].clone();
                    values[i][j] = values[partner][j].clone();
                    values[partner][j] = tmp;
                }
            }
        }
        *self = Self::assemble(self.n, self.classes.clone(), self.characters.clone(), values, self.class_sizes.clone())?;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[ClassLabel] {
        &self.classes
    }

    pub fn characters(&self) -> &[IrreducibleLabel] {
        &self.characters
    }

    pub fn value(&self, chi: usize, class: usize) -> &AlgebraicValue {
        &self.values[chi][class]
    }

    pub fn row(&self, chi: usize) -> &[AlgebraicValue] {
        &self.values[chi]
    }

    pub fn class_size(&self, class: usize) -> u128 {
        self.class_sizes[class]
    }

    pub fn class_sizes(&self) -> &[u128] {
        &self.class_sizes
    }

    pub fn degree(&self, chi: usize) -> u128 {
        self.degrees[chi]
    }

    /// `|A_n| = n!/2`.
    pub fn group_order(&self) -> u128 {
        (3..=self.n as u128).product::<u128>()
    }

    pub fn class_index(&self, label: &ClassLabel) -> Option<usize> {
        self.classes.iter().position(|c| c == label)
    }

    pub fn character_index(&self, label: &IrreducibleLabel) -> Option<usize> {
        self.characters.iter().position(|c| c == label)
    }

    /// `(2a, 2b)` for the entry `a + b sqrt(d)`.
    pub fn doubled(&self, chi: usize, class: usize) -> (i128, i128) {
        self.doubled[chi][class]
    }

    /// The radicand every irrational entry of the column uses (1 if none).
    pub fn column_radicand(&self, class: usize) -> i64 {
        self.radicands[class]
    }

    /// Exact row and column orthogonality.
    pub fn check_orthogonality(&self) -> std::result::Result<(), String> {
        let k = self.classes.len();
        let order = self.group_order() as i128;
        for j in 0..k {
            for l in j..k {
                let mut acc = QuadAcc::default();
                for i in 0..self.characters.len() {
                    acc.add_product(self.doubled[i][j], self.radicands[j], conj(self.doubled[i][l], self.radicands[l]), self.radicands[l])?;
                }
                let expect = if j == l { 4 * order / self.class_sizes[j] as i128 } else { 0 };
                if !acc.equals(expect) {
                    return Err(format!("columns {} and {}: {acc:?}, expected {expect}/4", self.classes[j], self.classes[l]));
                }
            }
        }
        for i in 0..self.characters.len() {
            for m in i..self.characters.len() {
                let mut acc = QuadAcc::default();
                for j in 0..k {
                    let d = self.radicands[j];
                    let (a, b) = self.doubled[i][j];
                    let s = self.class_sizes[j] as i128;
                    acc.add_product((a * s, b * s), d, conj(self.doubled[m][j], d), d)?;
                }
                let expect = if i == m { 4 * order } else { 0 };
                if !acc.equals(expect) {
                    return Err(format!("rows {} and {}: {acc:?}", self.characters[i], self.characters[m]));
                }
            }
        }
        Ok(())
    }

    /// Each split pair sums to the restriction of its `S_n` character.
    pub fn check_split_sums(&self) -> std::result::Result<(), String> {
        let mut cache = mn::MnCache::new();
        for (i, chi) in self.characters.iter().enumerate() {
            if chi.sign() != Some(SplitSign::Plus) {
                continue;
            }
            let Some(partner) = self
                .characters
                .iter()
                .position(|c| c.partition() == chi.partition() && c.sign() == Some(SplitSign::Minus))
            else {
                return Err(format!("{chi} has no partner"));
            };
            for (j, c) in self.classes.iter().enumerate() {
                let sum = self.values[i][j].checked_add(&self.values[partner][j]).ok_or("mixed radicands")?;
                let want = AlgebraicValue::from_int(cache.value(chi.partition(), c.cycle_type()));
                if sum != want {
                    return Err(format!("{chi} on {c}: {sum} != {want}"));
                }
            }
        }
        Ok(())
    }

    /// Versioned text form. Each entry is written as `2a 2b d`.
    pub fn export(&self) -> String {
        let mut s = String::new();
        writeln!(s, "{FORMAT_HEADER}").unwrap();
        writeln!(s, "version {FORMAT_VERSION}").unwrap();
        writeln!(s, "n {}", self.n).unwrap();
        writeln!(s, "classes {}", self.classes.len()).unwrap();
        for (c, size) in self.classes.iter().zip(&self.class_sizes) {
            writeln!(s, "{c} {size}").unwrap();
        }
        writeln!(s, "characters {}", self.characters.len()).unwrap();
        for chi in &self.characters {
            writeln!(s, "{chi}").unwrap();
        }
        writeln!(s, "values").unwrap();
        let two = BigRational::from_integer(BigInt::from(2));
        for row in &self.values {
            let entries: Vec<String> =
                row.iter().map(|v| format!("{} {} {}", v.a() * &two, v.b() * &two, v.d())).collect();
            writeln!(s, "{}", entries.join("; ")).unwrap();
        }
        s
    }

    pub fn import(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
        let mut next = |what: &str| {
            lines.next().ok_or_else(|| Error::Format { line: 0, msg: format!("unexpected end of input, wanted {what}") })
        };
        let err = |line: usize, msg: String| Error::Format { line, msg };

        let (ln, header) = next("header")?;
        if header != FORMAT_HEADER {
            return Err(err(ln, format!("bad header {header:?}")));
        }
        let (ln, version) = next("version")?;
        if version != format!("version {FORMAT_VERSION}") {
            return Err(err(ln, format!("unsupported {version:?}")));
        }
        let keyed = |ln: usize, line: &str, key: &str| -> Result<usize> {
            line.strip_prefix(key)
                .and_then(|r| r.trim().parse().ok())
                .ok_or_else(|| err(ln, format!("expected `{key} <count>`, got {line:?}")))
        };
        let (ln, l) = next("n")?;
        let n = keyed(ln, l, "n")?;
        let (ln, l) = next("classes")?;
        let nclasses = keyed(ln, l, "classes")?;
        let mut classes = Vec::with_capacity(nclasses);
        let mut class_sizes = Vec::with_capacity(nclasses);
        for _ in 0..nclasses {
            let (ln, l) = next("class")?;
            let (label, size) = l.split_once(' ').ok_or_else(|| err(ln, "expected `<label> <size>`".into()))?;
            classes.push(label.parse::<ClassLabel>().map_err(|e| err(ln, e.to_string()))?);
            class_sizes.push(size.parse::<u128>().map_err(|e| err(ln, e.to_string()))?);
        }
        let (ln, l) = next("characters")?;
        let nchars = keyed(ln, l, "characters")?;
        let mut characters = Vec::with_capacity(nchars);
        for _ in 0..nchars {
            let (ln, l) = next("character")?;
            characters.push(l.parse::<IrreducibleLabel>().map_err(|e| err(ln, e.to_string()))?);
        }
        let (ln, l) = next("values")?;
        if l != "values" {
            return Err(err(ln, format!("expected `values`, got {l:?}")));
        }
        let two = BigRational::from_integer(BigInt::from(2));
        let mut values = Vec::with_capacity(nchars);
        for _ in 0..nchars {
            let (ln, l) = next("value row")?;
            let row = l
                .split(';')
                .map(|entry| {
                    let f: Vec<&str> = entry.split_whitespace().collect();
                    let [a, b, d] = f[..] else {
                        return Err(err(ln, format!("bad entry {entry:?}")));
                    };
                    let a: BigRational = a.parse().map_err(|_| err(ln, format!("bad number {a:?}")))?;
                    let b: BigRational = b.parse().map_err(|_| err(ln, format!("bad number {b:?}")))?;
                    let d: i64 = d.parse().map_err(|_| err(ln, format!("bad radicand {d:?}")))?;
                    Ok(AlgebraicValue::new(a / &two, b / &two, d))
                })
                .collect::<Result<Vec<_>>>()?;
            values.push(row);
        }
        if classes.iter().any(|c| c.n() != n) || characters.iter().any(|c| c.n() != n) {
            return Err(err(0, "labels disagree with n".into()));
        }
        Self::assemble(n, classes, characters, values, class_sizes)
    }

    pub fn write_to(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.export())?;
        Ok(())
    }

    pub fn read_from(path: &Path) -> Result<Self> {
        Self::import(&std::fs::read_to_string(path)?)
    }
}

fn conj((a, b): (i128, i128), d: i64) -> (i128, i128) {
    if d < 0 {
        (a, -b)
    } else {
        (a, b)
    }
}

/// Integer combination of `1` and square roots of squarefree radicands.
#[derive(Default, Debug)]
struct QuadAcc {
    rational: i128,
    irrational: BTreeMap<i64, i128>,
}

impl QuadAcc {
    fn add_product(&mut self, (a, b): (i128, i128), d: i64, (a2, b2): (i128, i128), d2: i64) -> std::result::Result<(), String> {
        self.rational += a * a2;
        if b != 0 && b2 != 0 {
            if d != d2 {
                return Err(format!("product of sqrt({d}) and sqrt({d2})"));
            }
            self.rational += b * b2 * d as i128;
        }
        if b2 != 0 {
            *self.irrational.entry(d2).or_default() += a * b2;
        }
        if b != 0 {
            *self.irrational.entry(d).or_default() += a2 * b;
        }
        Ok(())
    }

    fn equals(&self, rational: i128) -> bool {
        self.rational == rational && self.irrational.values().all(|&c| c == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn a5_table() {
        let t = an_character_table(5).unwrap();
        assert_eq!(t.classes().len(), 5);
        let mut degrees: Vec<u128> = (0..5).map(|i| t.degree(i)).collect();
        degrees.sort();
        assert_eq!(degrees, vec![1, 3, 3, 4, 5]);
        let five_plus = t.class_index(&"5:+".parse().unwrap()).unwrap();
        let values: BTreeSet<String> = t
            .characters()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_split())
            .map(|(i, _)| t.value(i, five_plus).to_string())
            .collect();
        assert_eq!(values, ["1/2+1/2*sqrt(5)", "1/2-1/2*sqrt(5)"].into_iter().map(String::from).collect());
        t.check_split_sums().unwrap();
    }

    #[test]
    fn a4_table() {
        let t = an_character_table(4).unwrap();
        let mut degrees: Vec<u128> = (0..4).map(|i| t.degree(i)).collect();
        degrees.sort();
        assert_eq!(degrees, vec![1, 1, 1, 3]);
    }

    #[test]
    fn squared_degrees_sum_to_group_order() {
        for n in 2..=10 {
            let t = an_character_table(n).unwrap();
            let s: u128 = (0..t.characters().len()).map(|i| t.degree(i) * t.degree(i)).sum();
            assert_eq!(s, t.group_order(), "n = {n}");
        }
    }

    #[test]
    fn limit_is_enforced() {
        assert!(matches!(an_character_table(17), Err(Error::LimitExceeded { .. })));
        assert!(CharacterTable::build(17, 17).is_ok() || cfg!(debug_assertions));
    }

    #[test]
    fn export_import_round_trip() {
        let t = an_character_table(7).unwrap();
        let text = t.export();
        let back = CharacterTable::import(&text).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.export(), text);
        assert!(CharacterTable::import(&text.replace("version 1", "version 9")).is_err());
        assert!(CharacterTable::import(&text[..text.len() / 2]).is_err());
    }

    #[test]
    fn broken_table_fails_orthogonality() {
        let t = an_character_table(5).unwrap();
        let mut values = t.values.clone();
        values.swap(0, 1);
        values[0].swap(0, 1);
        let broken = CharacterTable::assemble(5, t.classes.clone(), t.characters.clone(), values, t.class_sizes.clone()).unwrap();
        assert!(broken.check_orthogonality().is_err());
    }
}
