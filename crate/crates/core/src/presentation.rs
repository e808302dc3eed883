//! Finitely presented groups from braid monodromy: Zariski–van Kampen
//! presentations, Tietze simplification and abelianization.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::factorization::{Factorization, PuiseuxFactorization};
use crate::free_group::{self, cyclic_core, invert, reduce, write_letters, FreeWord};
use crate::snf::smith_normal_form;

/// A group presentation ⟨x_1..x_g | relators⟩. Relators are kept freely
/// reduced, nonempty, sorted (by length, then lexicographically) and
/// without exact duplicates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    generators: usize,
    relators: Vec<Vec<i32>>,
}

impl Presentation {
    /// Relators with letters outside `1..=generators` are rejected.
    pub fn new(generators: usize, relators: Vec<Vec<i32>>) -> crate::Result<Self> {
        for r in &relators {
            if let Some(&l) = r.iter().find(|l| **l == 0 || l.unsigned_abs() as usize > generators) {
                return Err(crate::Error::InvalidFreeLetter {
                    letter: l,
                    rank: generators,
                });
            }
        }
        Ok(Self::normalized(generators, relators))
    }

    fn normalized(generators: usize, relators: Vec<Vec<i32>>) -> Self {
        let mut rels: Vec<Vec<i32>> = relators
            .into_iter()
            .map(|r| reduce(&r))
            .filter(|r| !r.is_empty())
            .collect();
        rels.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        rels.dedup();
        Self {
            generators,
            relators: rels,
        }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[Vec<i32>] {
        &self.relators
    }

    pub fn relator_words(&self) -> Vec<FreeWord> {
        self.relators
            .iter()
            .map(|r| FreeWord::from_reduced(self.generators.max(1), r.clone()))
            .collect()
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Vec::len).sum()
    }

    /// Adds relators, keeping the normal form.
    pub fn with_relators(&self, extra: impl IntoIterator<Item = Vec<i32>>) -> Self {
        let mut rels = self.relators.clone();
        rels.extend(extra);
        Self::normalized(self.generators, rels)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens {}", self.generators)?;
        for r in &self.relators {
            f.write_str("rel ")?;
            write_letters(f, r)?;
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Free rank and torsion coefficients of an abelian group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    /// Entries ≥ 2, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank {} torsion [", self.free_rank)?;
        for (i, t) in self.torsion.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str("]")
    }
}

/// Which relators to emit for each factor.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ZvkOptions {
    /// Also emit the relator for the last strand (μ_n, or the last strand of
    /// each block). It is implied by the others because the product of the
    /// meridians is fixed.
    pub include_last: bool,
}

/// Affine presentation ⟨μ_1..μ_n | μ_i^{τ_j}·μ_i⁻¹, i < n⟩.
pub fn zvk_affine(f: &Factorization) -> Presentation {
    zvk_affine_with(f, ZvkOptions::default())
}

pub fn zvk_affine_with(f: &Factorization, opts: ZvkOptions) -> Presentation {
    let n = f.strands();
    let upto = if opts.include_last { n } else { n - 1 };
    let mut rels = Vec::new();
    for t in f.factors() {
        let images = free_group::generator_images(n, t.letters());
        for (i, img) in images.iter().enumerate().take(upto) {
            let mut r = img.clone();
            free_group::push_letter(&mut r, -(i as i32 + 1));
            rels.push(r);
        }
    }
    Presentation::normalized(n, rels)
}

/// Projective presentation: the affine one with μ_1⋯μ_n killed.
pub fn zvk_projective(f: &Factorization) -> Presentation {
    if !f.is_projective() {
        log::warn!("factorization is not projective: pseudo-Coxeter element is not the full twist");
    }
    let n = f.strands();
    zvk_affine(f).with_relators([(1..=n as i32).collect::<Vec<_>>()])
}

/// Presentation from a Puiseux factorization: for every block only the
/// strands `start ≤ k < start + width - 1` contribute, each relator being
/// the block relator μ_k^β·μ_k⁻¹ transported by α⁻¹. With the convention
/// τ = α·β·α⁻¹ this generates the same normal subgroup as
/// [`zvk_affine`] of the expanded factorization.
pub fn zvk_puiseux(p: &PuiseuxFactorization) -> Presentation {
    zvk_puiseux_with(p, ZvkOptions::default())
}

pub fn zvk_puiseux_with(p: &PuiseuxFactorization, opts: ZvkOptions) -> Presentation {
    let n = p.strands();
    let mut rels = Vec::new();
    for e in p.entries() {
        let beta = p.embedded_beta(e);
        let beta_images = free_group::generator_images(n, beta.letters());
        let alpha_inv_images = free_group::generator_images(n, e.alpha.inverse().letters());
        for b in &e.blocks {
            let last = if opts.include_last { b.start + b.width } else { b.start + b.width - 1 };
            for k in b.start..last {
                let mut r = beta_images[k - 1].clone();
                free_group::push_letter(&mut r, -(k as i32));
                rels.push(free_group::substitute(&r, &alpha_inv_images));
            }
        }
    }
    Presentation::normalized(n, rels)
}

/// Abelianization through the Smith normal form of the exponent matrix.
pub fn abelianize(p: &Presentation) -> AbelianInvariants {
    let matrix: Vec<Vec<BigInt>> = p
        .relators
        .iter()
        .map(|r| {
            let mut row = vec![BigInt::zero(); p.generators];
            for &l in r {
                row[(l.unsigned_abs() - 1) as usize] += l.signum();
            }
            row
        })
        .collect();
    let diag = if p.generators == 0 {
        Vec::new()
    } else {
        smith_normal_form(&matrix)
    };
    let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
    AbelianInvariants {
        free_rank: p.generators - nonzero,
        torsion: diag.into_iter().filter(|d| *d > BigInt::one()).collect(),
    }
}

impl AbelianInvariants {
    /// Torsion coefficients as machine integers, when they fit.
    pub fn torsion_u64(&self) -> Option<Vec<u64>> {
        self.torsion.iter().map(ToPrimitive::to_u64).collect()
    }
}

/// Least rotation of the cyclic word or its inverse; equal for relators that
/// define the same normal closure element up to conjugation and inversion.
fn cyclic_canonical(r: &[i32]) -> Vec<i32> {
    let inv = invert(r);
    let mut best: Option<Vec<i32>> = None;
    for w in [r, inv.as_slice()] {
        for k in 0..w.len() {
            let mut rot = w[k..].to_vec();
            rot.extend_from_slice(&w[..k]);
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

fn cyclically_clean(rels: Vec<Vec<i32>>) -> Vec<Vec<i32>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for r in rels {
        let core = cyclic_core(&reduce(&r)).to_vec();
        if core.is_empty() {
            continue;
        }
        if seen.insert(cyclic_canonical(&core)) {
            out.push(core);
        }
    }
    out
}

/// Tries to shorten `target` (a cyclic word) using relator `r`: if some
/// cyclic rotation of `target` contains more than half of a rotation of
/// `r^{±1}`, that piece is replaced by the inverse of the complement.
fn shorten_with(target: &[i32], r: &[i32]) -> Option<Vec<i32>> {
    let len = r.len();
    let inv = invert(r);
    let tl = target.len();
    let mut best: Option<Vec<i32>> = None;
    for w in [r, inv.as_slice()] {
        for k in 0..len {
            let mut rot = w[k..].to_vec();
            rot.extend_from_slice(&w[..k]);
            for piece_len in (len / 2 + 1..=len).rev() {
                if piece_len > tl {
                    continue;
                }
                let piece = &rot[..piece_len];
                let replacement = invert(&rot[piece_len..]);
                for start in 0..tl {
                    if (0..piece_len).all(|i| target[(start + i) % tl] == piece[i]) {
                        let mut out = replacement.clone();
                        for i in piece_len..tl {
                            out.push(target[(start + i) % tl]);
                        }
                        let out = cyclic_core(&reduce(&out)).to_vec();
                        if out.len() < tl && best.as_ref().is_none_or(|b| out.len() < b.len()) {
                            best = Some(out);
                        }
                    }
                }
            }
        }
    }
    best
}

/// Eliminates generator `g` (1-based) using relator `r`, in which `g`
/// occurs exactly once; remaining generators are renumbered down.
fn eliminate(rels: &[Vec<i32>], idx: usize, g: i32) -> Vec<Vec<i32>> {
    let r = &rels[idx];
    let pos = r.iter().position(|l| l.abs() == g).expect("generator occurs");
    // r = u x^e v = 1  =>  x^e = u⁻¹ v⁻¹
    let u = &r[..pos];
    let v = &r[pos + 1..];
    let mut value = invert(u);
    value.extend(invert(v));
    if r[pos] < 0 {
        value = invert(&value);
    }
    let value = reduce(&value);
    let value_inv = invert(&value);
    let renumber = |l: i32| -> i32 {
        if l.abs() > g {
            l - l.signum()
        } else {
            l
        }
    };
    rels.iter()
        .enumerate()
        .filter(|(i, _)| *i != idx)
        .map(|(_, rel)| {
            let mut out = Vec::with_capacity(rel.len());
            for &l in rel {
                if l == g {
                    out.extend(value.iter().map(|&x| renumber(x)));
                } else if l == -g {
                    out.extend(value_inv.iter().map(|&x| renumber(x)));
                } else {
                    out.push(renumber(l));
                }
            }
            reduce(&out)
        })
        .collect()
}

/// Heuristic Tietze simplification, at most `budget` transformations.
/// The result presents an isomorphic group; no minimality is claimed.
pub fn tietze_simplify(p: &Presentation, budget: usize) -> Presentation {
    let mut gens = p.generators;
    let mut rels = cyclically_clean(p.relators.clone());
    let mut steps = 0;
    while steps < budget {
        let mut changed = false;

        // substitute shorter relators into longer ones
        rels.sort_by_key(Vec::len);
        'subst: for i in 0..rels.len() {
            for j in 0..rels.len() {
                if i == j || rels[i].len() > rels[j].len() {
                    continue;
                }
                if let Some(short) = shorten_with(&rels[j], &rels[i]) {
                    rels[j] = short;
                    changed = true;
                    steps += 1;
                    break 'subst;
                }
            }
        }
        rels = cyclically_clean(rels);
        if changed {
            continue;
        }

        // eliminate a generator occurring exactly once in some relator
        let total: usize = rels.iter().map(Vec::len).sum();
        let mut best: Option<(usize, Vec<Vec<i32>>)> = None;
        for (idx, r) in rels.iter().enumerate() {
            for g in 1..=gens as i32 {
                if r.iter().filter(|l| l.abs() == g).count() != 1 {
                    continue;
                }
                let next = cyclically_clean(eliminate(&rels, idx, g));
                let t: usize = next.iter().map(Vec::len).sum();
                if best.as_ref().is_none_or(|(bt, _)| t < *bt) {
                    best = Some((t, next));
                }
            }
        }
        match best {
            Some((t, next)) if t <= 2 * total + 16 => {
                rels = next;
                gens -= 1;
                steps += 1;
            }
            _ => break,
        }
    }
    Presentation::normalized(gens, rels)
}
