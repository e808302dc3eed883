//! Words in the Artin generators of the braid group B_n.
//!
//! Letter `k` means σ_{|k|}^{sign k}. Products read left to right: in
//! `a·b` the braid `a` is performed first. Equality is decided through the
//! faithful action on the free group (see [`crate::free_group`]).

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::free_group::{self, write_letters};
use crate::par;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

/// Canonical form of a braid: the reduced images of μ_1..μ_n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidKey(pub(crate) Vec<Vec<i32>>);

impl BraidWord {
    pub fn new(strands: usize, letters: &[i32]) -> Result<Self> {
        if strands == 0 {
            return Err(Error::ZeroStrands);
        }
        for &l in letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::InvalidBraidLetter { letter: l, strands });
            }
        }
        Ok(Self {
            strands,
            letters: letters.to_vec(),
        })
    }

    pub(crate) fn from_vec_unchecked(strands: usize, letters: Vec<i32>) -> Self {
        Self { strands, letters }
    }

    pub fn identity(strands: usize) -> Self {
        Self {
            strands,
            letters: Vec::new(),
        }
    }

    /// σ_i^{±1}.
    pub fn generator(strands: usize, letter: i32) -> Result<Self> {
        Self::new(strands, &[letter])
    }

    /// The full twist Δ_n² = (σ_1⋯σ_{n-1})^n.
    pub fn full_twist(strands: usize) -> Self {
        let row: Vec<i32> = (1..strands as i32).collect();
        Self {
            strands,
            letters: row.repeat(strands),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
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

    fn check_strands(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &BraidWord) -> Result<Self> {
        self.check_strands(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: free_group::invert(&self.letters),
        }
    }

    /// Cancels adjacent σ_i σ_i⁻¹ pairs. The braid is unchanged.
    pub fn free_reduced(&self) -> Self {
        Self {
            strands: self.strands,
            letters: free_group::reduce(&self.letters),
        }
    }

    /// `g · self · g⁻¹`, the convention of the Hurwitz move.
    pub fn conjugate(&self, g: &BraidWord) -> Result<Self> {
        self.check_strands(g)?;
        let mut letters = g.letters.clone();
        letters.extend_from_slice(&self.letters);
        letters.extend(free_group::invert(&g.letters));
        Ok(Self {
            strands: self.strands,
            letters,
        })
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// Image in the symmetric group: `images[i]` is the final position of
    /// the strand starting at position `i`.
    pub fn permutation(&self) -> Permutation {
        let mut pos: Vec<usize> = (0..self.strands).collect();
        // at[p] = strand currently at position p
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let p = (l.unsigned_abs() - 1) as usize;
            at.swap(p, p + 1);
            pos[at[p]] = p;
            pos[at[p + 1]] = p + 1;
        }
        Permutation { images: pos }
    }

    pub fn is_syntactically_positive(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    /// Canonical form via the free-group action.
    pub fn key(&self) -> BraidKey {
        BraidKey(free_group::generator_images(self.strands, &self.letters))
    }

    pub fn braid_equal(&self, other: &BraidWord) -> Result<bool> {
        self.check_strands(other)?;
        Ok(self.key() == other.key())
    }

    /// Shifts every letter by `offset` and moves the word into `strands` strands.
    pub(crate) fn shifted(&self, offset: usize, strands: usize) -> Self {
        let o = offset as i32;
        Self {
            strands,
            letters: self.letters.iter().map(|&l| l + l.signum() * o).collect(),
        }
    }

    /// Bounded search for a conjugator `g` with `g·self·g⁻¹ = target`.
    ///
    /// `None` only means no conjugator of length ≤ `max_len` exists; it is
    /// not a proof that the braids are not conjugate, except when exponent
    /// sums or permutation cycle types already differ.
    pub fn conjugacy_search(&self, target: &BraidWord, max_len: usize) -> Result<Option<BraidWord>> {
        self.check_strands(target)?;
        if self.exponent_sum() != target.exponent_sum()
            || self.permutation().cycle_type() != target.permutation().cycle_type()
        {
            return Ok(None);
        }
        let n = self.strands;
        let target_images = free_group::generator_images(n, &target.letters);
        // g·a = b·g  <=>  act(μ, g a) = act(μ, b g)
        let matches = |g_images: &Vec<Vec<i32>>| -> bool {
            (0..n).all(|i| {
                let mut lhs = g_images[i].clone();
                for &l in &self.letters {
                    lhs = free_group::apply_letter(&lhs, l);
                }
                lhs == free_group::substitute(&target_images[i], g_images)
            })
        };

        let start = free_group::generator_images(n, &[]);
        if matches(&start) {
            return Ok(Some(BraidWord::identity(n)));
        }
        let alphabet: Vec<i32> = (1..n as i32).flat_map(|i| [i, -i]).collect();
        let mut seen: HashSet<Vec<Vec<i32>>> = HashSet::from([start.clone()]);
        let mut frontier: Vec<(Vec<i32>, Vec<Vec<i32>>)> = vec![(Vec::new(), start)];
        for _ in 0..max_len {
            let candidates: Vec<(usize, i32)> = frontier
                .iter()
                .enumerate()
                .flat_map(|(fi, (word, _))| {
                    let last = word.last().copied();
                    alphabet
                        .iter()
                        .filter(move |&&x| Some(-x) != last)
                        .map(move |&x| (fi, x))
                })
                .collect();
            let expanded = par::map(&candidates, |&(fi, x)| {
                let (word, images) = &frontier[fi];
                let next: Vec<Vec<i32>> = images
                    .iter()
                    .map(|img| free_group::apply_letter(img, x))
                    .collect();
                let mut w = word.clone();
                w.push(x);
                let ok = matches(&next);
                (w, next, ok)
            });
            let mut next_frontier = Vec::new();
            for (w, images, ok) in expanded {
                if !seen.insert(images.clone()) {
                    continue;
                }
                if ok {
                    return Ok(Some(BraidWord::from_vec_unchecked(n, w)));
                }
                next_frontier.push((w, images));
            }
            if next_frontier.is_empty() {
                break;
            }
            frontier = next_frontier;
        }
        Ok(None)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

/// Block embedding ∏ B_{m_j} → B_n: part `j` acts on strands
/// `m_1+…+m_{j-1}+1 ..= m_1+…+m_j`; parts are concatenated in order.
pub fn block_embed(parts: &[BraidWord]) -> BraidWord {
    let n: usize = parts.iter().map(BraidWord::strands).sum();
    let mut letters = Vec::new();
    let mut offset = 0;
    for p in parts {
        letters.extend(p.shifted(offset, n).letters);
        offset += p.strands;
    }
    BraidWord::from_vec_unchecked(n.max(1), letters)
}

/// A permutation of {1..n}, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree).collect(),
        }
    }

    /// From 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::InvalidSeries(format!("not a permutation: {images:?}")));
            }
            seen[i - 1] = true;
        }
        Ok(Self {
            images: images.iter().map(|i| i - 1).collect(),
        })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        Self { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 1-based image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub(crate) fn zero_based(&self) -> &[usize] {
        &self.images
    }

    /// `self` then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Cycles of length > 1 in 1-based notation, each starting at its least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur + 1);
                cur = self.images[cur];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Sorted cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                len += 1;
                cur = self.images[cur];
            }
            if len > 0 {
                out.push(len);
            }
        }
        out.sort_unstable();
        out
    }
}

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
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}
