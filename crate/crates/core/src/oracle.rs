//! Brute-force ground truth for small `n`.
//!
//! Everything here enumerates group elements directly and shares no code
//! with the character machinery.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::permutations::{an_class_of, class_representative, ClassLabel, Permutation};

/// Largest degree the oracle accepts.
pub const ORACLE_LIMIT: usize = 9;

fn check_limit(n: usize) -> Result<()> {
    if n > ORACLE_LIMIT {
        return Err(Error::LimitExceeded { what: "oracle degree", value: n, limit: ORACLE_LIMIT });
    }
    Ok(())
}

/// Streams the elements of one class of `A_n`.
///
/// Each element is generated once: cycles are opened at the smallest unused
/// point, then a cycle length and the remaining points of that cycle are
/// chosen in turn.
pub struct ClassEnumeration {
    label: ClassLabel,
    n: usize,
    counts: Vec<usize>,
    used: Vec<bool>,
    cycles: Vec<(Vec<usize>, usize)>,
    stack: Vec<Frame>,
    expand: bool,
    done: bool,
}

struct Frame {
    is_length: bool,
    choices: Vec<usize>,
    idx: usize,
}

pub fn enumerate_class(label: &ClassLabel) -> Result<ClassEnumeration> {
    let n = label.n();
    check_limit(n)?;
    let mut counts = vec![0; n + 1];
    for &p in label.cycle_type().parts() {
        counts[p] += 1;
    }
    Ok(ClassEnumeration {
        label: label.clone(),
        n,
        counts,
        used: vec![false; n],
        cycles: Vec::new(),
        stack: Vec::new(),
        expand: true,
        done: n == 0,
    })
}

impl ClassEnumeration {
    pub fn label(&self) -> &ClassLabel {
        &self.label
    }

    fn open(&self) -> bool {
        self.cycles.last().is_some_and(|(c, len)| c.len() < *len)
    }

    fn next_frame(&self) -> Option<Frame> {
        if self.open() {
            let choices = (0..self.n).filter(|&p| !self.used[p]).collect();
            return Some(Frame { is_length: false, choices, idx: 0 });
        }
        self.used.iter().position(|u| !u)?;
        let choices = (1..=self.n).rev().filter(|&l| self.counts[l] > 0).collect();
        Some(Frame { is_length: true, choices, idx: 0 })
    }

    fn apply(&mut self, is_length: bool, choice: usize) {
        if is_length {
            let start = self.used.iter().position(|u| !u).expect("unused point");
            self.used[start] = true;
            self.counts[choice] -= 1;
            self.cycles.push((vec![start], choice));
        } else {
            self.used[choice] = true;
            self.cycles.last_mut().expect("open cycle").0.push(choice);
        }
    }

    fn undo(&mut self, is_length: bool, choice: usize) {
        if is_length {
            let (c, _) = self.cycles.pop().expect("cycle");
            self.used[c[0]] = false;
            self.counts[choice] += 1;
        } else {
            self.cycles.last_mut().expect("open cycle").0.pop();
            self.used[choice] = false;
        }
    }

    fn current(&self) -> Permutation {
        let mut map = vec![0; self.n];
        for (c, _) in &self.cycles {
            for (i, &p) in c.iter().enumerate() {
                map[p] = c[(i + 1) % c.len()];
            }
        }
        Permutation::from_map_unchecked(map)
    }
}

impl Iterator for ClassEnumeration {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        loop {
            if self.done {
                return None;
            }
            if self.expand {
                match self.next_frame() {
                    None => {
                        self.expand = false;
                        let g = self.current();
                        if !self.label.is_split() || an_class_of(&g).ok().as_ref() == Some(&self.label) {
                            return Some(g);
                        }
                    }
                    Some(frame) => {
                        let (is_length, first) = (frame.is_length, frame.choices[0]);
                        self.stack.push(frame);
                        self.apply(is_length, first);
                    }
                }
                continue;
            }
            loop {
                let Some(top) = self.stack.last() else {
                    self.done = true;
                    return None;
                };
                let (is_length, choice, idx, len) = (top.is_length, top.choices[top.idx], top.idx, top.choices.len());
                self.undo(is_length, choice);
                if idx + 1 < len {
                    let top = self.stack.last_mut().expect("frame");
                    top.idx += 1;
                    let next = top.choices[top.idx];
                    self.apply(is_length, next);
                    self.expand = true;
                    break;
                }
                self.stack.pop();
            }
        }
    }
}

/// Pairs `(c, d)` in `C x D` with `cd = g`, by enumerating `C`.
pub fn brute_frobenius(c: &ClassLabel, d: &ClassLabel, g: &Permutation) -> Result<u64> {
    let n = c.n();
    if d.n() != n || g.degree() != n {
        return Err(Error::DegreeMismatch(n, if d.n() != n { d.n() } else { g.degree() }));
    }
    let target_type = d.cycle_type();
    Ok(enumerate_class(c)?
        .par_bridge()
        .filter(|x| {
            let y = &x.inverse() * g;
            y.cycle_type() == *target_type && (!d.is_split() || an_class_of(&y).ok().as_ref() == Some(d))
        })
        .count() as u64)
}

/// Labels of all classes met by `CD`.
pub fn brute_product_labels(c: &ClassLabel, d: &ClassLabel) -> Result<BTreeSet<ClassLabel>> {
    let n = c.n();
    if d.n() != n {
        return Err(Error::DegreeMismatch(n, d.n()));
    }
    check_limit(n)?;
    let labels = ClassLabel::all(n);
    let hits: Vec<Option<ClassLabel>> = labels
        .par_iter()
        .map(|e| {
            let g = class_representative(e);
            let mut elements = enumerate_class(c)?;
            let found = elements.any(|x| {
                let y = &x.inverse() * &g;
                y.cycle_type() == *d.cycle_type() && (!d.is_split() || an_class_of(&y).ok().as_ref() == Some(d))
            });
            Ok(found.then(|| e.clone()))
        })
        .collect::<Result<_>>()?;
    Ok(hits.into_iter().flatten().collect())
}

/// Whether some even `s` has `s x s^-1 = y`.
///
/// Scans all of `A_n` up to degree 7; above that, enumerates every
/// cycle-aligning conjugator and looks for an even one.
pub fn brute_an_conjugate(x: &Permutation, y: &Permutation) -> Result<bool> {
    let n = x.degree();
    if y.degree() != n {
        return Err(Error::DegreeMismatch(n, y.degree()));
    }
    check_limit(n)?;
    if x.cycle_type() != y.cycle_type() {
        return Ok(false);
    }
    if n <= 7 {
        let mut found = false;
        for_each_permutation(n, |s| {
            if s.is_even() && &(&(s * x) * &s.inverse()) == y {
                found = true;
            }
            !found
        });
        return Ok(found);
    }
    let cx = x.all_cycles();
    let cy = y.all_cycles();
    let mut map = vec![usize::MAX; n];
    let mut taken = vec![false; cy.len()];
    Ok(align(&cx, &cy, 0, &mut taken, &mut map))
}

// Extends a partial conjugator cycle by cycle; true once an even one exists.
fn align(cx: &[Vec<usize>], cy: &[Vec<usize>], i: usize, taken: &mut [bool], map: &mut [usize]) -> bool {
    if i == cx.len() {
        return Permutation::from_map_unchecked(map.to_vec()).is_even();
    }
    let a = &cx[i];
    for j in 0..cy.len() {
        if taken[j] || cy[j].len() != a.len() {
            continue;
        }
        taken[j] = true;
        let b = &cy[j];
        for rot in 0..b.len() {
            for (k, &p) in a.iter().enumerate() {
                map[p - 1] = b[(k + rot) % b.len()] - 1;
            }
            if align(cx, cy, i + 1, taken, map) {
                return true;
            }
        }
        taken[j] = false;
    }
    false
}

/// Calls `f` on every permutation of degree `n` until it returns false.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&Permutation) -> bool) {
    let mut map: Vec<usize> = (0..n).collect();
    loop {
        if !f(&Permutation::from_map_unchecked(map.clone())) {
            return;
        }
        // next permutation in lexicographic order
        let Some(i) = (1..n).rev().find(|&i| map[i - 1] < map[i]) else {
            return;
        };
        let j = (i..n).rev().find(|&j| map[j] > map[i - 1]).expect("successor");
        map.swap(i - 1, j);
        map[i..].reverse();
    }
}
