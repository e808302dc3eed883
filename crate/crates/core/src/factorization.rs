//! Braid monodromy factorizations: ordered tuples of braids, the Hurwitz
//! action on them and invariants of Hurwitz orbits.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::braid::{BraidKey, BraidWord, Permutation};
use crate::error::{Error, Result};
use crate::homcount::PermGroup;
use crate::par;
use crate::presentation::{self, AbelianInvariants, Presentation};

/// An ordered tuple (τ_1, …, τ_r) of braids on a common number of strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factorization {
    strands: usize,
    factors: Vec<BraidWord>,
}

/// Opaque key: two factorizations share it iff they are entrywise equal braids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint(Vec<BraidKey>);

impl Factorization {
    pub fn new(strands: usize, factors: Vec<BraidWord>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::ZeroStrands);
        }
        if let Some(f) = factors.iter().find(|f| f.strands() != strands) {
            return Err(Error::StrandMismatch {
                left: strands,
                right: f.strands(),
            });
        }
        Ok(Self { strands, factors })
    }

    /// Convenience constructor from raw letter lists.
    pub fn from_letters(strands: usize, factors: &[&[i32]]) -> Result<Self> {
        let factors = factors
            .iter()
            .map(|l| BraidWord::new(strands, l))
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, factors)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn factors(&self) -> &[BraidWord] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Cancels σ_i σ_i⁻¹ pairs inside every factor.
    pub fn free_reduced(&self) -> Self {
        Self {
            strands: self.strands,
            factors: self.factors.iter().map(BraidWord::free_reduced).collect(),
        }
    }

    /// The pseudo-Coxeter element τ_1·…·τ_r.
    pub fn pseudo_coxeter(&self) -> BraidWord {
        let letters: Vec<i32> = self
            .factors
            .iter()
            .flat_map(|f| f.letters().iter().copied())
            .collect();
        BraidWord::from_vec_unchecked(self.strands, letters)
    }

    /// True iff the pseudo-Coxeter element equals the full twist Δ_n².
    pub fn is_projective(&self) -> bool {
        self.pseudo_coxeter().key() == BraidWord::full_twist(self.strands).key()
    }

    fn check_move_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.factors.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.factors.len().saturating_sub(1),
            });
        }
        Ok(())
    }

    /// Hurwitz move η_i (1-based):
    /// `(…, τ_i, τ_{i+1}, …) ↦ (…, τ_i·τ_{i+1}·τ_i⁻¹, τ_i, …)`.
    pub fn hurwitz_move(&self, i: usize) -> Result<Self> {
        self.check_move_index(i)?;
        let mut factors = self.factors.clone();
        let a = &self.factors[i - 1];
        factors[i - 1] = self.factors[i].conjugate(a)?;
        factors[i] = a.clone();
        Ok(Self {
            strands: self.strands,
            factors,
        })
    }

    /// Inverse move η_i⁻¹: `(…, a, b, …) ↦ (…, b, b⁻¹·a·b, …)`.
    pub fn inverse_hurwitz_move(&self, i: usize) -> Result<Self> {
        self.check_move_index(i)?;
        let mut factors = self.factors.clone();
        let b = &self.factors[i];
        factors[i - 1] = b.clone();
        factors[i] = self.factors[i - 1].conjugate(&b.inverse())?;
        Ok(Self {
            strands: self.strands,
            factors,
        })
    }

    /// Conjugates every factor: τ_k ↦ g·τ_k·g⁻¹.
    pub fn global_conjugate(&self, g: &BraidWord) -> Result<Self> {
        let factors = self
            .factors
            .iter()
            .map(|f| f.conjugate(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            strands: self.strands,
            factors,
        })
    }

    pub fn fingerprint(&self) -> Fingerprint {
        Fingerprint(self.factors.iter().map(BraidWord::key).collect())
    }

    pub fn permutations(&self) -> Vec<Permutation> {
        self.factors.iter().map(BraidWord::permutation).collect()
    }

    /// Order of the subgroup of S_n generated by the factor permutations.
    pub fn perm_monodromy_order(&self) -> Result<u64> {
        const MAX_STRANDS: usize = 9;
        if self.strands > MAX_STRANDS {
            return Err(Error::TooManyStrands {
                n: self.strands,
                max: MAX_STRANDS,
            });
        }
        let gens: Vec<Vec<usize>> = self
            .permutations()
            .iter()
            .map(|p| p.zero_based().to_vec())
            .collect();
        let identity: Vec<usize> = (0..self.strands).collect();
        let mut seen = HashSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(p) = queue.pop_front() {
            for g in &gens {
                let q: Vec<usize> = p.iter().map(|&i| g[i]).collect();
                if seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        Ok(seen.len() as u64)
    }

    /// Number of orbits of {1..n} under the factor permutations; the number
    /// of irreducible components of the curve.
    pub fn orbit_count_components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.strands).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for p in self.permutations() {
            for (i, &j) in p.zero_based().iter().enumerate() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        (0..self.strands).filter(|&i| find(&mut parent, i) == i).count()
    }

    /// Bounded breadth-first closure under the Hurwitz moves η_i^{±1}.
    pub fn hurwitz_orbit(&self, max_states: usize) -> HurwitzOrbit {
        let start = self.clone();
        let mut index: HashMap<Fingerprint, usize> = HashMap::new();
        index.insert(start.fingerprint(), 0);
        let mut elements = vec![start];
        let mut frontier = vec![0usize];
        let r = self.factors.len();
        let mut complete = true;
        'outer: while !frontier.is_empty() {
            let moves: Vec<(usize, usize, bool)> = frontier
                .iter()
                .flat_map(|&e| (1..r).flat_map(move |i| [(e, i, true), (e, i, false)]))
                .collect();
            let children = par::map(&moves, |&(e, i, forward)| {
                let f = &elements[e];
                let child = if forward {
                    f.hurwitz_move(i)
                } else {
                    f.inverse_hurwitz_move(i)
                }
                .expect("move index in range")
                .free_reduced();
                let key = child.fingerprint();
                (child, key)
            });
            let mut next = Vec::new();
            for (child, key) in children {
                if index.contains_key(&key) {
                    continue;
                }
                if elements.len() >= max_states {
                    complete = false;
                    break 'outer;
                }
                index.insert(key, elements.len());
                next.push(elements.len());
                elements.push(child);
            }
            frontier = next;
        }
        HurwitzOrbit {
            elements,
            index,
            complete,
        }
    }

    /// Bounded Hurwitz-equivalence test (moves plus global conjugation).
    ///
    /// `Equivalent` is returned only with an explicit witness inside the
    /// search bounds; `Distinct` only on the strength of an invariant.
    pub fn same_orbit(&self, other: &Factorization, max_states: usize, conj_len: usize) -> Verdict {
        if self.strands != other.strands {
            return Verdict::Distinct(format!(
                "strand counts differ ({} vs {})",
                self.strands, other.strands
            ));
        }
        if self.factors.len() != other.factors.len() {
            return Verdict::Distinct(format!(
                "factor counts differ ({} vs {})",
                self.factors.len(),
                other.factors.len()
            ));
        }
        if let Some(reason) = braid_level_difference(self, other) {
            return Verdict::Distinct(reason);
        }
        if let Some(false) = perm_tuple_orbit_contains(self, other, PERM_ORBIT_BUDGET) {
            return Verdict::Distinct(
                "permutation tuples lie in different Hurwitz/conjugation orbits".into(),
            );
        }

        let orbit = self.hurwitz_orbit(max_states);
        for g in conjugators(self.strands, conj_len) {
            let moved = other.global_conjugate(&g).expect("strands checked");
            if let Some(&idx) = orbit.index.get(&moved.fingerprint()) {
                return Verdict::Equivalent {
                    conjugator: g,
                    orbit_index: idx,
                };
            }
        }

        match group_level_difference(self, other) {
            Some(reason) => Verdict::Distinct(reason),
            None => Verdict::Unknown,
        }
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "[{t}]")?;
        }
        Ok(())
    }
}

/// Result of a bounded Hurwitz-orbit enumeration.
#[derive(Clone, Debug)]
pub struct HurwitzOrbit {
    /// Orbit elements in discovery order; the input comes first.
    pub elements: Vec<Factorization>,
    index: HashMap<Fingerprint, usize>,
    /// Whether the closure finished within the state budget.
    pub complete: bool,
}

impl HurwitzOrbit {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, f: &Factorization) -> bool {
        self.index.contains_key(&f.fingerprint())
    }

    pub fn fingerprints(&self) -> impl Iterator<Item = &Fingerprint> {
        self.index.keys()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equivalent {
        conjugator: BraidWord,
        orbit_index: usize,
    },
    Distinct(String),
    Unknown,
}

const PERM_ORBIT_BUDGET: usize = 500_000;
const HOMCOUNT_BUDGET: f64 = 2.0e7;

/// Conjugacy invariants of the individual factors and of the product.
fn braid_level_difference(a: &Factorization, b: &Factorization) -> Option<String> {
    let classes = |f: &Factorization| {
        let mut v: Vec<(i64, Vec<usize>)> = f
            .factors
            .iter()
            .map(|t| (t.exponent_sum(), t.permutation().cycle_type()))
            .collect();
        v.sort();
        v
    };
    if classes(a) != classes(b) {
        return Some("multisets of factor conjugacy invariants differ".into());
    }
    let (ea, eb) = (a.pseudo_coxeter(), b.pseudo_coxeter());
    if ea.permutation().cycle_type() != eb.permutation().cycle_type() {
        return Some("pseudo-Coxeter permutations have different cycle types".into());
    }
    None
}

/// Whether `b`'s permutation tuple lies in the orbit of `a`'s under Hurwitz
/// moves and simultaneous S_n-conjugation. `None` when the budget runs out.
fn perm_tuple_orbit_contains(a: &Factorization, b: &Factorization, budget: usize) -> Option<bool> {
    let n = a.strands;
    let encode = |f: &Factorization| -> Vec<Vec<usize>> {
        f.permutations().iter().map(|p| p.zero_based().to_vec()).collect()
    };
    let target = encode(b);
    let start = encode(a);
    if start == target {
        return Some(true);
    }
    let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { p.iter().map(|&i| q[i]).collect() };
    let invert = |p: &[usize]| -> Vec<usize> {
        let mut inv = vec![0; p.len()];
        for (i, &j) in p.iter().enumerate() {
            inv[j] = i;
        }
        inv
    };
    let mut conj_gens: Vec<Vec<usize>> = Vec::new();
    if n >= 2 {
        let mut t: Vec<usize> = (0..n).collect();
        t.swap(0, 1);
        conj_gens.push(t);
        conj_gens.push((0..n).map(|i| (i + 1) % n).collect());
    }
    let r = start.len();
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        let mut nexts = Vec::new();
        for i in 0..r.saturating_sub(1) {
            let mut t = cur.clone();
            let (x, y) = (&cur[i], &cur[i + 1]);
            t[i] = compose(&compose(x, y), &invert(x));
            t[i + 1] = x.clone();
            nexts.push(t);
        }
        for g in &conj_gens {
            let gi = invert(g);
            nexts.push(cur.iter().map(|p| compose(&compose(&gi, p), g)).collect());
        }
        for t in nexts {
            if t == target {
                return Some(true);
            }
            if seen.insert(t.clone()) {
                if seen.len() > budget {
                    return None;
                }
                queue.push_back(t);
            }
        }
    }
    Some(false)
}

/// Distinct braid elements of word length ≤ `max_len`, shortest first.
fn conjugators(n: usize, max_len: usize) -> Vec<BraidWord> {
    let mut out = vec![BraidWord::identity(n)];
    let mut seen = HashSet::from([out[0].key()]);
    let mut frontier = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for g in &frontier {
            for i in 1..n as i32 {
                for x in [i, -i] {
                    if g.letters().last() == Some(&-x) {
                        continue;
                    }
                    let mut l = g.letters().to_vec();
                    l.push(x);
                    let h = BraidWord::from_vec_unchecked(n, l);
                    if seen.insert(h.key()) {
                        next.push(h);
                    }
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Isomorphism invariants of G^aff and G^proj: abelianizations and
/// homomorphism counts into S_3 and S_4.
fn group_level_difference(a: &Factorization, b: &Factorization) -> Option<String> {
    let groups = |f: &Factorization| -> (Presentation, Presentation) {
        (
            presentation::tietze_simplify(&presentation::zvk_affine(f), 200),
            presentation::tietze_simplify(&presentation::zvk_projective(f), 200),
        )
    };
    let (aa, ap) = groups(a);
    let (ba, bp) = groups(b);
    let ab = |p: &Presentation| -> AbelianInvariants { presentation::abelianize(p) };
    if ab(&aa) != ab(&ba) {
        return Some(format!(
            "affine abelianizations differ ({} vs {})",
            ab(&aa),
            ab(&ba)
        ));
    }
    if ab(&ap) != ab(&bp) {
        return Some(format!(
            "projective abelianizations differ ({} vs {})",
            ab(&ap),
            ab(&bp)
        ));
    }
    for (label, pa, pb) in [("affine", &aa, &ba), ("projective", &ap, &bp)] {
        for degree in [3usize, 4] {
            let target = PermGroup::symmetric(degree);
            for nonabelian in [true, false] {
                let count = |p: &Presentation| {
                    crate::homcount::count_homs_with_budget(p, &target, nonabelian, HOMCOUNT_BUDGET).ok()
                };
                if let (Some(x), Some(y)) = (count(pa), count(pb)) {
                    if x != y {
                        let kind = if nonabelian { "nonabelian " } else { "" };
                        return Some(format!(
                            "{label} groups have different {kind}homomorphism counts into S{degree} ({x} vs {y})"
                        ));
                    }
                }
            }
        }
    }
    None
}

/// A positive braid on a block of consecutive strands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuiseuxBlock {
    /// 1-based index of the first strand of the block.
    pub start: usize,
    pub width: usize,
    pub beta: BraidWord,
}

impl PuiseuxBlock {
    pub fn new(start: usize, beta: BraidWord) -> Result<Self> {
        if start == 0 {
            return Err(Error::IndexOutOfRange { index: 0, max: 0 });
        }
        if !beta.is_syntactically_positive() {
            return Err(Error::NonPositiveBlock(beta.to_string()));
        }
        Ok(Self {
            start,
            width: beta.strands(),
            beta,
        })
    }

    /// Last strand covered, 1-based inclusive.
    fn end(&self) -> usize {
        self.start + self.width - 1
    }
}

/// One entry (α, (β_1, …, β_s)) of a Puiseux factorization. It expands to
/// α·(β_1⋯β_s)·α⁻¹ with the blocks embedded at their offsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockedPuiseuxFactor {
    pub alpha: BraidWord,
    pub blocks: Vec<PuiseuxBlock>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuiseuxFactorization {
    strands: usize,
    entries: Vec<BlockedPuiseuxFactor>,
}

impl PuiseuxFactorization {
    pub fn new(strands: usize, entries: Vec<BlockedPuiseuxFactor>) -> Result<Self> {
        for e in &entries {
            if e.alpha.strands() != strands {
                return Err(Error::StrandMismatch {
                    left: strands,
                    right: e.alpha.strands(),
                });
            }
            let mut ranges: Vec<(usize, usize)> = e.blocks.iter().map(|b| (b.start, b.end())).collect();
            ranges.sort_unstable();
            for w in ranges.windows(2) {
                if w[1].0 <= w[0].1 {
                    return Err(Error::BlockOverlap(format!(
                        "strands {}..={} and {}..={}",
                        w[0].0, w[0].1, w[1].0, w[1].1
                    )));
                }
            }
            if let Some(last) = ranges.last() {
                if last.1 > strands {
                    return Err(Error::BlockOverlap(format!(
                        "block ends at strand {} but n = {strands}",
                        last.1
                    )));
                }
            }
            for b in &e.blocks {
                if !b.beta.is_syntactically_positive() {
                    return Err(Error::NonPositiveBlock(b.beta.to_string()));
                }
            }
        }
        Ok(Self { strands, entries })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn entries(&self) -> &[BlockedPuiseuxFactor] {
        &self.entries
    }

    /// β_1⋯β_s of an entry embedded in B_n.
    pub fn embedded_beta(&self, entry: &BlockedPuiseuxFactor) -> BraidWord {
        let letters: Vec<i32> = entry
            .blocks
            .iter()
            .flat_map(|b| b.beta.shifted(b.start - 1, self.strands).letters().to_vec())
            .collect();
        BraidWord::from_vec_unchecked(self.strands, letters)
    }

    /// The braid monodromy factorization (α_i·β_i·α_i⁻¹)_i.
    pub fn expand(&self) -> Factorization {
        let factors = self
            .entries
            .iter()
            .map(|e| {
                self.embedded_beta(e)
                    .conjugate(&e.alpha)
                    .expect("strand counts validated")
            })
            .collect();
        Factorization {
            strands: self.strands,
            factors,
        }
    }
}
