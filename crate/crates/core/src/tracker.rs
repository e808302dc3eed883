//! Numerical strand tracking: the local braid of a curve germ read off from
//! the roots of y ↦ f(x, y) as x runs once around |x| = radius.
//!
//! Strand positions are ordered by real part, ties broken by imaginary part.
//! To make the order a continuous function of the strands we sort by
//! `re + TILT·im`, i.e. project onto a direction rotated by a negligible
//! angle. A crossing of adjacent positions p, p+1 (1-based) gives σ_p when
//! the strand moving right is the one with the smaller imaginary part, and
//! σ_p⁻¹ otherwise.

use num_complex::Complex64;

use crate::braid::{block_embed, BraidWord, Permutation};
use crate::error::{Error, Result};
use crate::par;
use crate::puiseux::{LocalCurve, PuiseuxBranch};

const TILT: f64 = 1e-7;
const BISECTION_STEPS: u32 = 60;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrackerConfig {
    /// Radius of the circle |x| = radius traversed counterclockwise from x = radius.
    pub radius: f64,
    /// Sample points per revolution.
    pub samples: usize,
    /// Two strands closer than this count as colliding.
    pub tolerance: f64,
    /// Maximal bisection depth for intervals with several swaps.
    pub max_refinements: u32,
}

impl Default for TrackerConfig {
    fn default() -> Self {
        Self {
            radius: 1.0,
            samples: 1024,
            tolerance: 1e-9,
            max_refinements: 30,
        }
    }
}

impl TrackerConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.radius > 0.0 && self.radius.is_finite()) {
            return Err(Error::InvalidConfig(format!("radius must be positive (got {})", self.radius)));
        }
        if self.samples < 64 {
            return Err(Error::InvalidConfig(format!("need at least 64 samples (got {})", self.samples)));
        }
        if !(self.tolerance > 0.0 && self.tolerance < self.radius) {
            return Err(Error::InvalidConfig(format!(
                "tolerance must lie in (0, radius) (got {})",
                self.tolerance
            )));
        }
        Ok(())
    }
}

/// Result of one tracker run.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalBraid {
    pub word: BraidWord,
    /// Largest distance of a strand from its center over the samples.
    pub max_excursion: f64,
}

/// One strand: strand `k` of `branch`, offset by `center`.
struct Strand<'a> {
    center: Complex64,
    branch: &'a PuiseuxBranch,
    k: u32,
}

impl Strand<'_> {
    fn value(&self, radius: f64, s: f64) -> Complex64 {
        self.center + self.branch.strand_value(radius, s, self.k)
    }
}

fn key(z: Complex64) -> f64 {
    z.re + TILT * z.im
}

/// Strand ids sorted by position.
fn order(values: &[Complex64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| key(values[a]).total_cmp(&key(values[b])).then(a.cmp(&b)));
    idx
}

struct Tracker<'a> {
    strands: Vec<Strand<'a>>,
    cfg: TrackerConfig,
}

impl Tracker<'_> {
    fn eval(&self, s: f64) -> Vec<Complex64> {
        self.strands.iter().map(|st| st.value(self.cfg.radius, s)).collect()
    }

    fn eval_one(&self, id: usize, s: f64) -> Complex64 {
        self.strands[id].value(self.cfg.radius, s)
    }

    /// Emits the letters for the order change over [s0, s1].
    fn interval(&self, s0: f64, s1: f64, v0: &[Complex64], v1: &[Complex64], depth: u32, out: &mut Vec<i32>) -> Result<()> {
        let (o0, o1) = (order(v0), order(v1));
        if o0 == o1 {
            return Ok(());
        }
        let inversions = inversions(&o0, &o1);
        if inversions.len() > 1 && depth < self.cfg.max_refinements {
            let mid = 0.5 * (s0 + s1);
            let vm = self.eval(mid);
            self.interval(s0, mid, v0, &vm, depth + 1, out)?;
            return self.interval(mid, s1, &vm, v1, depth + 1, out);
        }
        self.resolve(s0, s1, o0, &o1, inversions, out)
    }

    /// Orders the swaps of one small interval by their crossing times and
    /// emits them as adjacent transpositions.
    fn resolve(&self, s0: f64, s1: f64, mut current: Vec<usize>, target: &[usize], pairs: Vec<(usize, usize)>, out: &mut Vec<i32>) -> Result<()> {
        let mut pending: Vec<(f64, usize, usize)> = pairs
            .into_iter()
            .map(|(a, b)| (self.crossing_time(a, b, s0, s1), a, b))
            .collect();
        while !pending.is_empty() {
            let pos = |id: usize, cur: &[usize]| cur.iter().position(|&x| x == id).expect("strand present");
            let choice = pending
                .iter()
                .enumerate()
                .filter(|(_, (_, a, b))| pos(*a, &current).abs_diff(pos(*b, &current)) == 1)
                .min_by(|(_, x), (_, y)| x.0.total_cmp(&y.0));
            let Some((i, &(t, a, b))) = choice else {
                return Err(Error::AmbiguousCrossing {
                    s: s0,
                    refinements: self.cfg.max_refinements,
                });
            };
            pending.swap_remove(i);
            let (za, zb) = (self.eval_one(a, t), self.eval_one(b, t));
            if (za - zb).norm() < self.cfg.tolerance {
                return Err(Error::StrandCollision(format!(
                    "strands {} and {} meet near s={t:.6}",
                    a + 1,
                    b + 1
                )));
            }
            let p = pos(a, &current).min(pos(b, &current));
            let moving_right = current[p];
            let lower = if za.im < zb.im { a } else { b };
            out.push(if lower == moving_right { p as i32 + 1 } else { -(p as i32 + 1) });
            current.swap(p, p + 1);
        }
        if current != target {
            return Err(Error::AmbiguousCrossing {
                s: s0,
                refinements: self.cfg.max_refinements,
            });
        }
        Ok(())
    }

    /// Time in [s0, s1] where the keys of strands a and b agree.
    fn crossing_time(&self, a: usize, b: usize, s0: f64, s1: f64) -> f64 {
        let diff = |s: f64| key(self.eval_one(a, s)) - key(self.eval_one(b, s));
        let (mut lo, mut hi) = (s0, s1);
        let lo_sign = diff(lo) < 0.0;
        for _ in 0..BISECTION_STEPS {
            let mid = 0.5 * (lo + hi);
            if (diff(mid) < 0.0) == lo_sign {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }
}

/// Pairs of strands whose relative order differs between two orders.
fn inversions(o0: &[usize], o1: &[usize]) -> Vec<(usize, usize)> {
    let mut rank1 = vec![0; o1.len()];
    for (p, &id) in o1.iter().enumerate() {
        rank1[id] = p;
    }
    let mut out = Vec::new();
    for i in 0..o0.len() {
        for j in i + 1..o0.len() {
            if rank1[o0[i]] > rank1[o0[j]] {
                out.push((o0[i], o0[j]));
            }
        }
    }
    out
}

fn track(strands: Vec<Strand<'_>>, cfg: TrackerConfig) -> Result<(BraidWord, f64, Vec<usize>)> {
    cfg.validate()?;
    let n = strands.len();
    if n == 0 {
        return Err(Error::ZeroStrands);
    }
    let tracker = Tracker { strands, cfg };
    let samples = cfg.samples;
    let values = par::map_range(samples + 1, |i| tracker.eval(i as f64 / samples as f64));

    for a in 0..n {
        for b in a + 1..n {
            if (values[0][a] - values[0][b]).norm() < cfg.tolerance {
                return Err(Error::StrandCollision(format!(
                    "strands {} and {} coincide at s=0; choose another radius",
                    a + 1,
                    b + 1
                )));
            }
        }
    }
    let max_excursion = values
        .iter()
        .flat_map(|v| v.iter().zip(&tracker.strands).map(|(z, st)| (z - st.center).norm()))
        .fold(0.0, f64::max);

    let mut letters = Vec::new();
    for i in 0..samples {
        let (s0, s1) = (i as f64 / samples as f64, (i + 1) as f64 / samples as f64);
        tracker.interval(s0, s1, &values[i], &values[i + 1], 0, &mut letters)?;
    }
    let exponent_sum: i64 = letters.iter().map(|l| i64::from(l.signum())).sum();
    assert_eq!(
        letters.len() as i64 % 2,
        exponent_sum.rem_euclid(2),
        "crossing count parity"
    );
    Ok((BraidWord::from_vec_unchecked(n, letters), max_excursion, order(&values[0])))
}

fn curve_strands(c: &LocalCurve) -> Vec<Strand<'_>> {
    c.branches()
        .iter()
        .flat_map(|b| {
            (0..b.multiplicity()).map(move |k| Strand {
                center: c.center(),
                branch: b,
                k,
            })
        })
        .collect()
}

/// Checks that strand k of every branch ends where strand k+1 started.
fn check_permutation(c: &LocalCurve, word: &BraidWord, start_order: &[usize]) -> Result<()> {
    let n = start_order.len();
    let mut pos0 = vec![0; n];
    for (p, &id) in start_order.iter().enumerate() {
        pos0[id] = p;
    }
    let mut expected = vec![0; n];
    let mut first = 0;
    for b in c.branches() {
        let m = b.multiplicity() as usize;
        for k in 0..m {
            expected[pos0[first + k]] = pos0[first + (k + 1) % m];
        }
        first += m;
    }
    if word.permutation() != Permutation::from_zero_based(expected) {
        return Err(Error::PermutationMismatch);
    }
    Ok(())
}

/// The local braid of a germ, positions indexed lexicographically.
pub fn local_braid(c: &LocalCurve, cfg: &TrackerConfig) -> Result<LocalBraid> {
    let (word, max_excursion, start) = track(curve_strands(c), *cfg)?;
    check_permutation(c, &word, &start)?;
    Ok(LocalBraid { word, max_excursion })
}

/// Local braids of several germs over the same fiber, embedded side by side
/// in the order of their centers (by real part, then imaginary part).
pub fn semilocal_braid(curves: &[LocalCurve], cfg: &TrackerConfig) -> Result<LocalBraid> {
    if curves.is_empty() {
        return Err(Error::ZeroStrands);
    }
    let mut sorted: Vec<&LocalCurve> = curves.iter().collect();
    sorted.sort_by(|a, b| {
        a.center()
            .re
            .total_cmp(&b.center().re)
            .then(a.center().im.total_cmp(&b.center().im))
    });
    for w in sorted.windows(2) {
        if w[0].center() == w[1].center() {
            return Err(Error::ClusterOverlap(format!(
                "two curves share the center {} {}",
                w[0].center().re,
                w[0].center().im
            )));
        }
    }
    let locals = par::map(&sorted, |c| local_braid(c, cfg))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    for a in 0..sorted.len() {
        for b in a + 1..sorted.len() {
            let gap = (sorted[a].center() - sorted[b].center()).norm();
            let reach = locals[a].max_excursion.max(locals[b].max_excursion);
            if gap < 4.0 * reach {
                return Err(Error::ClusterOverlap(format!(
                    "centers {} apart but strands reach {reach} from their centers",
                    gap
                )));
            }
        }
    }
    let parts: Vec<BraidWord> = locals.iter().map(|l| l.word.clone()).collect();
    Ok(LocalBraid {
        word: block_embed(&parts),
        max_excursion: locals.iter().map(|l| l.max_excursion).fold(0.0, f64::max),
    })
}

/// Tracks all strands of several germs together as one system, without
/// splitting into clusters.
pub fn joint_braid(curves: &[LocalCurve], cfg: &TrackerConfig) -> Result<LocalBraid> {
    let strands = curves.iter().flat_map(curve_strands).collect();
    let (word, max_excursion, _) = track(strands, *cfg)?;
    Ok(LocalBraid { word, max_excursion })
}

/// Comparison of the runs at `radius` and `radius / 2`.
#[derive(Clone, Debug, PartialEq)]
pub struct StabilityReport {
    pub full: LocalBraid,
    pub half: LocalBraid,
    pub exponent_sums_agree: bool,
    /// g with g·full·g⁻¹ = half, if one was found.
    pub conjugator: Option<BraidWord>,
}

impl StabilityReport {
    pub fn is_stable(&self) -> bool {
        self.exponent_sums_agree && self.conjugator.is_some()
    }
}

pub fn stability_check(c: &LocalCurve, cfg: &TrackerConfig, conj_bound: usize) -> Result<StabilityReport> {
    let full = local_braid(c, cfg)?;
    let half_cfg = TrackerConfig {
        radius: cfg.radius / 2.0,
        tolerance: cfg.tolerance.min(cfg.radius / 4.0),
        ..*cfg
    };
    let half = local_braid(c, &half_cfg)?;
    let exponent_sums_agree = full.word.exponent_sum() == half.word.exponent_sum();
    let conjugator = if exponent_sums_agree {
        full.word.conjugacy_search(&half.word, conj_bound)?
    } else {
        None
    };
    Ok(StabilityReport {
        full,
        half,
        exponent_sums_agree,
        conjugator,
    })
}
