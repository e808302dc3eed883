//! Reduced words in the free group F_n on meridian generators μ_1..μ_n and
//! the right action of the braid group B_n on F_n.
//!
//! Letter `k` stands for μ_{|k|}^{sign k}. The action of a positive Artin
//! generator σ_j is
//!
//! ```text
//! μ_j     ↦ μ_j μ_{j+1} μ_j⁻¹
//! μ_{j+1} ↦ μ_j
//! μ_i     ↦ μ_i              (i ≠ j, j+1)
//! ```
//!
//! and words compose on the right: `act(w, a·b) = act(act(w, a), b)`.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// Appends `letter` to a reduced word, cancelling against the last letter.
#[inline]
pub(crate) fn push_letter(out: &mut Vec<i32>, letter: i32) {
    if out.last() == Some(&-letter) {
        out.pop();
    } else {
        out.push(letter);
    }
}

/// Free reduction of an arbitrary letter sequence.
pub fn reduce(letters: &[i32]) -> Vec<i32> {
    let mut out = Vec::with_capacity(letters.len());
    for &l in letters {
        push_letter(&mut out, l);
    }
    out
}

pub(crate) fn invert(letters: &[i32]) -> Vec<i32> {
    letters.iter().rev().map(|l| -l).collect()
}

fn push_word(out: &mut Vec<i32>, word: &[i32]) {
    for &l in word {
        push_letter(out, l);
    }
}

fn push_word_inverse(out: &mut Vec<i32>, word: &[i32]) {
    for &l in word.iter().rev() {
        push_letter(out, -l);
    }
}

/// Replaces every μ_k in `word` by `images[k-1]` and reduces.
pub(crate) fn substitute(word: &[i32], images: &[Vec<i32>]) -> Vec<i32> {
    let mut out = Vec::new();
    for &l in word {
        let img = &images[(l.unsigned_abs() - 1) as usize];
        if l > 0 {
            push_word(&mut out, img);
        } else {
            push_word_inverse(&mut out, img);
        }
    }
    out
}

/// Applies the automorphism of a single Artin letter to a reduced word.
pub(crate) fn apply_letter(word: &[i32], sigma: i32) -> Vec<i32> {
    let j = sigma.abs();
    let mut out = Vec::with_capacity(word.len() + 4);
    for &l in word {
        let g = l.abs();
        let image: &[i32] = if sigma > 0 {
            if g == j {
                &[j, j + 1, -j]
            } else if g == j + 1 {
                &[j]
            } else {
                push_letter(&mut out, l);
                continue;
            }
        } else if g == j {
            &[j + 1]
        } else if g == j + 1 {
            &[-(j + 1), j, j + 1]
        } else {
            push_letter(&mut out, l);
            continue;
        };
        if l > 0 {
            push_word(&mut out, image);
        } else {
            push_word_inverse(&mut out, image);
        }
    }
    out
}

/// Hurwitz move on a tuple of words at 0-based position `i`:
/// `(a, b) ↦ (a b a⁻¹, a)` for a positive letter, `(a, b) ↦ (b, b⁻¹ a b)` for a negative one.
pub(crate) fn hurwitz_on_words(tuple: &mut [Vec<i32>], i: usize, positive: bool) {
    let a = std::mem::take(&mut tuple[i]);
    let b = std::mem::take(&mut tuple[i + 1]);
    if positive {
        let mut first = a.clone();
        push_word(&mut first, &b);
        push_word_inverse(&mut first, &a);
        tuple[i] = first;
        tuple[i + 1] = a;
    } else {
        let mut second = invert(&b);
        push_word(&mut second, &a);
        push_word(&mut second, &b);
        tuple[i] = b;
        tuple[i + 1] = second;
    }
}

/// Images `act(μ_k, t)` of all generators. Letters are consumed right to
/// left so each letter only touches two tuple entries.
pub(crate) fn generator_images(strands: usize, letters: &[i32]) -> Vec<Vec<i32>> {
    let mut images: Vec<Vec<i32>> = (1..=strands as i32).map(|k| vec![k]).collect();
    for &l in letters.iter().rev() {
        hurwitz_on_words(&mut images, (l.abs() - 1) as usize, l > 0);
    }
    images
}

/// Cyclic reduction: strips matching inverse letters from both ends.
pub(crate) fn cyclic_core(letters: &[i32]) -> &[i32] {
    let (mut lo, mut hi) = (0usize, letters.len());
    while hi - lo >= 2 && letters[lo] == -letters[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    &letters[lo..hi]
}

/// A freely reduced word in F_n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

impl FreeWord {
    /// Builds a word, validating letters and reducing it.
    pub fn new(rank: usize, letters: &[i32]) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroStrands);
        }
        for &l in letters {
            if l == 0 || l.unsigned_abs() as usize > rank {
                return Err(Error::InvalidFreeLetter { letter: l, rank });
            }
        }
        Ok(Self {
            rank,
            letters: reduce(letters),
        })
    }

    pub(crate) fn from_reduced(rank: usize, letters: Vec<i32>) -> Self {
        debug_assert_eq!(reduce(&letters), letters);
        Self { rank, letters }
    }

    pub fn identity(rank: usize) -> Self {
        Self {
            rank,
            letters: Vec::new(),
        }
    }

    /// The generator μ_i (1-based).
    pub fn generator(rank: usize, i: usize) -> Result<Self> {
        Self::new(rank, &[i as i32])
    }

    /// μ_1·μ_2·…·μ_n, fixed by every braid.
    pub fn delta(rank: usize) -> Self {
        Self {
            rank,
            letters: (1..=rank as i32).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self {
            rank: self.rank,
            letters: invert(&self.letters),
        }
    }

    pub fn mul(&self, other: &FreeWord) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::StrandMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let mut letters = self.letters.clone();
        push_word(&mut letters, &other.letters);
        Ok(Self {
            rank: self.rank,
            letters,
        })
    }

    /// Right action `w^t` of a braid.
    pub fn act(&self, t: &BraidWord) -> Result<Self> {
        if self.rank != t.strands() {
            return Err(Error::RankMismatch {
                rank: self.rank,
                strands: t.strands(),
            });
        }
        let images = generator_images(self.rank, t.letters());
        Ok(Self {
            rank: self.rank,
            letters: substitute(&self.letters, &images),
        })
    }

    pub fn cyclically_reduced(&self) -> Self {
        Self {
            rank: self.rank,
            letters: cyclic_core(&self.letters).to_vec(),
        }
    }

    /// If the word is a meridian (a conjugate of some μ_i), returns `i`.
    pub fn meridian_index(&self) -> Option<usize> {
        match cyclic_core(&self.letters) {
            [k] if *k > 0 => Some(*k as usize),
            _ => None,
        }
    }

    /// Exponent vector in the abelianization Z^n.
    pub fn exponent_vector(&self) -> Vec<i64> {
        let mut v = vec![0i64; self.rank];
        for &l in &self.letters {
            v[(l.unsigned_abs() - 1) as usize] += l.signum() as i64;
        }
        v
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

pub(crate) fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[i32]) -> fmt::Result {
    for (i, l) in letters.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{l}")?;
    }
    Ok(())
}

/// `delta_word(n)`: the word μ_1·…·μ_n.
pub fn delta_word(n: usize) -> FreeWord {
    FreeWord::delta(n)
}

/// An ordered n-tuple of words in F_n, a candidate geometric basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeometricTuple {
    rank: usize,
    entries: Vec<FreeWord>,
}

impl GeometricTuple {
    pub fn new(rank: usize, entries: Vec<FreeWord>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroStrands);
        }
        if let Some(e) = entries.iter().find(|e| e.rank != rank) {
            return Err(Error::StrandMismatch {
                left: rank,
                right: e.rank,
            });
        }
        Ok(Self { rank, entries })
    }

    /// The standard basis (μ_1, …, μ_n).
    pub fn standard(rank: usize) -> Self {
        Self {
            rank,
            entries: (1..=rank as i32)
                .map(|k| FreeWord::from_reduced(rank, vec![k]))
                .collect(),
        }
    }

    /// Image of the standard basis under `g`.
    pub fn from_braid(g: &BraidWord) -> Self {
        let rank = g.strands();
        Self {
            rank,
            entries: generator_images(rank, g.letters())
                .into_iter()
                .map(|w| FreeWord::from_reduced(rank, w))
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entries(&self) -> &[FreeWord] {
        &self.entries
    }

    fn total_len(&self) -> usize {
        self.entries.iter().map(FreeWord::len).sum()
    }

    /// Nielsen reduction test: true iff the entries form a free basis of F_n.
    pub fn is_basis(&self) -> bool {
        if self.entries.len() != self.rank {
            return false;
        }
        let words: Vec<Vec<i32>> = self.entries.iter().map(|e| e.letters.clone()).collect();
        nielsen_is_basis(self.rank, words)
    }

    /// Geometric-basis test: distinct meridians whose product is μ_1⋯μ_n and
    /// which form a free basis.
    pub fn is_geometric(&self) -> bool {
        if self.entries.len() != self.rank {
            return false;
        }
        let mut seen = vec![false; self.rank];
        for e in &self.entries {
            match e.meridian_index() {
                Some(i) if !seen[i - 1] => seen[i - 1] = true,
                _ => return false,
            }
        }
        let mut product = Vec::new();
        for e in &self.entries {
            push_word(&mut product, &e.letters);
        }
        if product != FreeWord::delta(self.rank).letters {
            return false;
        }
        self.is_basis()
    }

    /// Finds `g` with `act(standard, g) = self` entrywise, searching over
    /// braid words of length at most `max_len`.
    ///
    /// Left multiplication by σ_i^{±1} is a Hurwitz move on tuple positions,
    /// so the search walks tuples towards the standard basis (shortest total
    /// length first) and inverts the recorded moves.
    pub fn find_braid(&self, max_len: usize) -> Result<Option<BraidWord>> {
        if !self.is_geometric() {
            return Err(Error::NotGeometric);
        }
        let n = self.rank;
        let start: Vec<Vec<i32>> = self.entries.iter().map(|e| e.letters.clone()).collect();
        let goal: Vec<Vec<i32>> = (1..=n as i32).map(|k| vec![k]).collect();

        // state -> (depth, parent, move letter)
        let mut nodes: Vec<(Vec<Vec<i32>>, usize, usize, i32)> = vec![(start.clone(), 0, usize::MAX, 0)];
        let mut best_depth: HashMap<Vec<Vec<i32>>, usize> = HashMap::new();
        best_depth.insert(start.clone(), 0);
        // priority: (total length, depth, insertion id)
        let mut queue: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
        queue.insert((self.total_len(), 0, 0), 0);
        const STATE_BUDGET: usize = 2_000_000;

        while let Some((_, idx)) = queue.pop_first() {
            let (state, depth, _, _) = nodes[idx].clone();
            if best_depth.get(&state).copied() != Some(depth) {
                continue;
            }
            if state == goal {
                let mut moves = Vec::new();
                let mut cur = idx;
                while nodes[cur].2 != usize::MAX {
                    moves.push(nodes[cur].3);
                    cur = nodes[cur].2;
                }
                moves.reverse();
                let letters: Vec<i32> = moves.iter().map(|m| -m).collect();
                return BraidWord::new(n, &letters).map(Some);
            }
            if depth >= max_len {
                continue;
            }
            for i in 1..n {
                for sign in [1i32, -1] {
                    let mut next = state.clone();
                    hurwitz_on_words(&mut next, i - 1, sign > 0);
                    let nd = depth + 1;
                    if best_depth.get(&next).is_some_and(|&d| d <= nd) {
                        continue;
                    }
                    if nodes.len() >= STATE_BUDGET {
                        return Ok(None);
                    }
                    let len: usize = next.iter().map(Vec::len).sum();
                    best_depth.insert(next.clone(), nd);
                    let id = nodes.len();
                    nodes.push((next, nd, idx, sign * i as i32));
                    queue.insert((len, nd, id), id);
                }
            }
        }
        Ok(None)
    }
}

/// Nielsen reduction. Strictly length-decreasing elementary transformations
/// are applied greedily; when none exists a plateau search over
/// length-preserving transformations looks for an exit, which makes the test
/// exact (Nielsen's reduction never needs to increase total length).
fn nielsen_is_basis(rank: usize, mut words: Vec<Vec<i32>>) -> bool {
    loop {
        if words.iter().any(Vec::is_empty) {
            return false;
        }
        let total: usize = words.iter().map(Vec::len).sum();
        if total == rank {
            let mut seen = vec![false; rank];
            for w in &words {
                let g = (w[0].unsigned_abs() - 1) as usize;
                if seen[g] {
                    return false;
                }
                seen[g] = true;
            }
            return true;
        }
        if let Some(next) = nielsen_decrease(&words) {
            words = next;
            continue;
        }
        match nielsen_plateau(&words) {
            Some(next) => words = next,
            None => return false,
        }
    }
}

fn nielsen_neighbours(words: &[Vec<i32>]) -> Vec<Vec<Vec<i32>>> {
    let mut out = Vec::new();
    for i in 0..words.len() {
        for j in 0..words.len() {
            if i == j {
                continue;
            }
            let vj = &words[j];
            let vj_inv = invert(vj);
            for (left, other) in [(false, vj), (false, &vj_inv), (true, vj), (true, &vj_inv)] {
                let mut w = if left { other.clone() } else { words[i].clone() };
                push_word(&mut w, if left { &words[i] } else { other });
                let mut next = words.to_vec();
                next[i] = w;
                out.push(next);
            }
        }
    }
    out
}

fn nielsen_decrease(words: &[Vec<i32>]) -> Option<Vec<Vec<i32>>> {
    let total: usize = words.iter().map(Vec::len).sum();
    nielsen_neighbours(words)
        .into_iter()
        .map(|w| (w.iter().map(Vec::len).sum::<usize>(), w))
        .filter(|(t, _)| *t < total)
        .min_by_key(|(t, _)| *t)
        .map(|(_, w)| w)
}

fn normalize_tuple(words: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let mut v: Vec<Vec<i32>> = words
        .iter()
        .map(|w| {
            let inv = invert(w);
            if inv < *w {
                inv
            } else {
                w.clone()
            }
        })
        .collect();
    v.sort();
    v
}

fn nielsen_plateau(words: &[Vec<i32>]) -> Option<Vec<Vec<i32>>> {
    const PLATEAU_BUDGET: usize = 100_000;
    let total: usize = words.iter().map(Vec::len).sum();
    let mut seen = HashSet::new();
    seen.insert(normalize_tuple(words));
    let mut queue = VecDeque::from([words.to_vec()]);
    while let Some(cur) = queue.pop_front() {
        for next in nielsen_neighbours(&cur) {
            let t: usize = next.iter().map(Vec::len).sum();
            if t < total {
                return Some(next);
            }
            if t == total && seen.insert(normalize_tuple(&next)) {
                if seen.len() > PLATEAU_BUDGET {
                    return None;
                }
                queue.push_back(next);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(rank: usize, l: &[i32]) -> FreeWord {
        FreeWord::new(rank, l).unwrap()
    }

    fn b(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&[1, -1]), Vec::<i32>::new());
        assert_eq!(reduce(&[1, 2, -2, -1]), Vec::<i32>::new());
        assert_eq!(reduce(&[1, 2, -1]), vec![1, 2, -1]);
        let r = reduce(&[3, 1, -1, -3, 2]);
        assert_eq!(reduce(&r), r);
    }

    #[test]
    fn action_on_generators() {
        assert_eq!(w(2, &[1]).act(&b(2, &[1])).unwrap().letters(), &[1, 2, -1]);
        assert_eq!(w(2, &[2]).act(&b(2, &[1])).unwrap().letters(), &[1]);
        assert_eq!(w(3, &[3]).act(&b(3, &[1])).unwrap().letters(), &[3]);
        assert!(w(2, &[1]).act(&b(3, &[1])).is_err());
    }

    #[test]
    fn letterwise_and_image_actions_agree() {
        let t = b(4, &[1, -2, 3, 3, -1, 2]);
        let u = w(4, &[1, 2, -4, 3]);
        let mut cur = u.letters().to_vec();
        for &l in t.letters() {
            cur = apply_letter(&cur, l);
        }
        assert_eq!(u.act(&t).unwrap().letters(), cur.as_slice());
    }

    #[test]
    fn delta_is_fixed() {
        let t = b(4, &[1, 2, -3, 1, -2, 3, 3]);
        assert_eq!(delta_word(4).act(&t).unwrap(), delta_word(4));
    }

    #[test]
    fn meridian_examples() {
        assert_eq!(w(2, &[1, 2, -1]).meridian_index(), Some(2));
        assert_eq!(w(1, &[-1]).meridian_index(), None);
        assert_eq!(w(3, &[1, 2, 3, -2, -1]).meridian_index(), Some(3));
        assert_eq!(w(2, &[1, 2]).meridian_index(), None);
        assert_eq!(FreeWord::identity(2).meridian_index(), None);
    }

    #[test]
    fn basis_examples() {
        assert!(GeometricTuple::standard(3).is_basis());
        let t = GeometricTuple::new(2, vec![w(2, &[1]), w(2, &[1])]).unwrap();
        assert!(!t.is_basis());
        let t = GeometricTuple::new(2, vec![w(2, &[1, 2]), w(2, &[2])]).unwrap();
        assert!(t.is_basis());
        let t = GeometricTuple::new(2, vec![w(2, &[1, 1]), w(2, &[2])]).unwrap();
        assert!(!t.is_basis());
        let t = GeometricTuple::new(2, vec![w(2, &[1, 2, -1]), w(2, &[1, 1, 2, -1])]).unwrap();
        assert!(t.is_basis());
    }

    #[test]
    fn geometric_examples() {
        assert!(GeometricTuple::standard(3).is_geometric());
        let t = GeometricTuple::new(3, vec![w(3, &[1, 2, -1]), w(3, &[1]), w(3, &[3])]).unwrap();
        assert!(t.is_geometric());
        assert_eq!(t, GeometricTuple::from_braid(&b(3, &[1])));
        let t = GeometricTuple::new(3, vec![w(3, &[2]), w(3, &[2]), w(3, &[3])]).unwrap();
        assert!(!t.is_geometric());
        // right meridians, wrong product
        let t = GeometricTuple::new(2, vec![w(2, &[2]), w(2, &[1])]).unwrap();
        assert!(!t.is_geometric());
    }

    #[test]
    fn find_braid_round_trips() {
        let id = GeometricTuple::standard(3).find_braid(4).unwrap().unwrap();
        assert!(id.letters().is_empty());
        for g in [b(3, &[1]), b(3, &[1, 2]), b(3, &[-2, 1, 1, -2])] {
            let found = GeometricTuple::from_braid(&g).find_braid(8).unwrap().unwrap();
            assert!(found.braid_equal(&g).unwrap(), "{g} vs {found}");
        }
        let bad = GeometricTuple::new(2, vec![w(2, &[1]), w(2, &[1])]).unwrap();
        assert_eq!(bad.find_braid(3), Err(Error::NotGeometric));
    }
}
