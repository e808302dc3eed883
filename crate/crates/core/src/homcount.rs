//! Counting homomorphisms from a finitely presented group into a finite
//! permutation group.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::par;
use crate::presentation::Presentation;

/// Above this many leaf assignments a warning is logged.
const WARN_ASSIGNMENTS: f64 = 1.0e8;

/// A finite permutation group with precomputed multiplication table.
/// Element 0 is the identity.
#[derive(Clone, Debug)]
pub struct PermGroup {
    elements: Vec<Vec<u8>>,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl PermGroup {
    /// Closure of the given permutations (0-based image lists of equal length).
    pub fn generated_by(degree: usize, gens: &[Vec<u8>]) -> Self {
        let id: Vec<u8> = (0..degree as u8).collect();
        let mut index: HashMap<Vec<u8>, usize> = HashMap::from([(id.clone(), 0)]);
        let mut elements = vec![id];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let p: Vec<u8> = elements[i].iter().map(|&x| g[x as usize]).collect();
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }
        let size = elements.len();
        let mut mul = vec![0u32; size * size];
        let mut inv = vec![0u32; size];
        for (a, pa) in elements.iter().enumerate() {
            for (b, pb) in elements.iter().enumerate() {
                // a then b
                let p: Vec<u8> = pa.iter().map(|&x| pb[x as usize]).collect();
                let c = index[&p];
                mul[a * size + b] = c as u32;
                if c == 0 {
                    inv[a] = b as u32;
                }
            }
        }
        Self { elements, mul, inv }
    }

    /// The symmetric group S_n.
    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            let mut t: Vec<u8> = (0..n as u8).collect();
            t.swap(0, 1);
            gens.push(t);
            gens.push((0..n).map(|i| ((i + 1) % n) as u8).collect());
        }
        Self::generated_by(n.max(1), &gens)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.elements.len() + b as usize]
    }

    #[inline]
    fn letter(&self, assignment: &[u32], l: i32) -> u32 {
        let g = assignment[(l.unsigned_abs() - 1) as usize];
        if l > 0 {
            g
        } else {
            self.inv[g as usize]
        }
    }

    fn evaluate(&self, word: &[i32], assignment: &[u32]) -> u32 {
        word.iter().fold(0, |acc, &l| self.mul(acc, self.letter(assignment, l)))
    }

    fn commute(&self, a: u32, b: u32) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }
}

/// Number of homomorphisms from the presented group into `group`; with
/// `nonabelian_only`, only those with nonabelian image.
pub fn count_homs(p: &Presentation, group: &PermGroup, nonabelian_only: bool) -> u64 {
    count_homs_with_budget(p, group, nonabelian_only, f64::INFINITY)
        .expect("unbounded budget")
}

/// Like [`count_homs`] but refuses to start when |G|^generators exceeds
/// `budget`.
pub fn count_homs_with_budget(
    p: &Presentation,
    group: &PermGroup,
    nonabelian_only: bool,
    budget: f64,
) -> Result<u64> {
    let g = p.generators();
    let needed = (group.order() as f64).powi(g as i32);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    if needed > WARN_ASSIGNMENTS {
        log::warn!("homomorphism count enumerates up to {needed:.3e} assignments");
    }
    if g == 0 {
        // only the trivial homomorphism, whose image is abelian
        return Ok(u64::from(!nonabelian_only));
    }
    // each relator is checked once all its generators are assigned
    let mut by_level: Vec<Vec<&[i32]>> = vec![Vec::new(); g];
    for r in p.relators() {
        let top = r.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(1);
        by_level[top - 1].push(r);
    }
    let counts = par::map_range(group.order(), |first| {
        let mut assignment = vec![0u32; g];
        assignment[0] = first as u32;
        if !by_level[0].iter().all(|r| group.evaluate(r, &assignment) == 0) {
            return 0;
        }
        search(group, &by_level, &mut assignment, 1, nonabelian_only)
    });
    Ok(counts.into_iter().sum())
}

fn search(group: &PermGroup, by_level: &[Vec<&[i32]>], assignment: &mut [u32], level: usize, nonabelian_only: bool) -> u64 {
    if level == assignment.len() {
        if nonabelian_only {
            let abelian = (0..assignment.len())
                .all(|i| (i + 1..assignment.len()).all(|j| group.commute(assignment[i], assignment[j])));
            return u64::from(!abelian);
        }
        return 1;
    }
    let mut total = 0;
    for x in 0..group.order() as u32 {
        assignment[level] = x;
        if by_level[level].iter().all(|r| group.evaluate(r, assignment) == 0) {
            total += search(group, by_level, assignment, level + 1, nonabelian_only);
        }
    }
    total
}
