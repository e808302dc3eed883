//! Puiseux branches of plane-curve germs and their exponent invariants.

use std::cmp::Ordering;
use std::fmt;

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Coefficients below this (relative to the largest coefficient involved)
/// are treated as zero.
const COEFF_TOL: f64 = 1e-9;

/// An x-order: a rational exponent or +∞ (the zero series).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum XOrder {
    Finite(Rational64),
    Infinite,
}

impl PartialOrd for XOrder {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for XOrder {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (XOrder::Finite(a), XOrder::Finite(b)) => a.cmp(b),
            (XOrder::Finite(_), XOrder::Infinite) => Ordering::Less,
            (XOrder::Infinite, XOrder::Finite(_)) => Ordering::Greater,
            (XOrder::Infinite, XOrder::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for XOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XOrder::Finite(r) => write!(f, "{r}"),
            XOrder::Infinite => f.write_str("inf"),
        }
    }
}

/// Order of a fractional power series given as (exponent, coefficient)
/// terms: the least exponent whose coefficient is nonzero.
pub fn nu_x(terms: &[(Rational64, Complex64)]) -> XOrder {
    terms
        .iter()
        .filter(|(_, c)| *c != Complex64::zero())
        .map(|(e, _)| *e)
        .min()
        .map_or(XOrder::Infinite, XOrder::Finite)
}

/// One branch y = h(x^{1/m}) = Σ a·x^e of a curve germ.
#[derive(Clone, Debug, PartialEq)]
pub struct PuiseuxBranch {
    multiplicity: u32,
    terms: Vec<(Rational64, Complex64)>,
}

impl PuiseuxBranch {
    /// Exponents must be positive, strictly increasing and have denominators
    /// dividing `multiplicity`.
    pub fn new(multiplicity: u32, terms: Vec<(Rational64, Complex64)>) -> Result<Self> {
        if multiplicity == 0 {
            return Err(Error::InvalidSeries("multiplicity must be positive".into()));
        }
        let m = i64::from(multiplicity);
        for (i, (e, _)) in terms.iter().enumerate() {
            if *e <= Rational64::zero() {
                return Err(Error::InvalidSeries(format!("exponent {e} is not positive")));
            }
            if m % e.denom() != 0 {
                return Err(Error::InvalidSeries(format!(
                    "exponent {e} has denominator not dividing m={m}"
                )));
            }
            if i > 0 && terms[i - 1].0 >= *e {
                return Err(Error::InvalidSeries("exponents must be strictly increasing".into()));
            }
        }
        let b = Self { multiplicity, terms };
        let g = b
            .numerators()
            .filter(|(_, c)| !is_negligible(*c, b.scale()))
            .fold(m, |g, (l, _)| g.gcd(&l));
        if g != 1 {
            log::warn!("branch with m={m} is not reduced: gcd of m and exponent numerators is {g}");
        }
        Ok(b)
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    pub fn terms(&self) -> &[(Rational64, Complex64)] {
        &self.terms
    }

    /// Exponent numerators over the denominator m.
    fn numerators(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        let m = i64::from(self.multiplicity);
        self.terms
            .iter()
            .map(move |(e, c)| ((e * m).to_integer(), *c))
    }

    fn scale(&self) -> f64 {
        self.terms.iter().map(|(_, c)| c.norm()).fold(0.0, f64::max)
    }

    /// Value of strand `k` (0-based) when x = radius·e^{2πis}.
    pub fn strand_value(&self, radius: f64, s: f64, k: u32) -> Complex64 {
        let m = f64::from(self.multiplicity);
        let m_int = i64::from(self.multiplicity);
        self.terms
            .iter()
            .map(|(e, c)| {
                let l = (e * m_int).to_integer() as f64;
                let angle = std::f64::consts::TAU * l * (s + f64::from(k)) / m;
                let r = radius.powf(*e.numer() as f64 / *e.denom() as f64);
                c * Complex64::from_polar(r, angle)
            })
            .sum()
    }

    /// The characteristic exponents, in increasing order.
    pub fn characteristic_exponents(&self) -> Vec<Rational64> {
        let m = i64::from(self.multiplicity);
        let scale = self.scale();
        let mut d = m;
        let mut out = Vec::new();
        for (l, c) in self.numerators() {
            if d == 1 {
                break;
            }
            if is_negligible(c, scale) {
                continue;
            }
            if l % d != 0 {
                out.push(Rational64::new(l, m));
                d = d.gcd(&l);
            }
        }
        out
    }

    fn keep_exponents(&self, keep: &[Rational64]) -> Self {
        Self {
            multiplicity: self.multiplicity,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep.contains(e))
                .copied()
                .collect(),
        }
    }
}

fn is_negligible(c: Complex64, scale: f64) -> bool {
    c.norm() <= COEFF_TOL * (1.0 + scale)
}

/// Maximal contact order of two branches over all conjugate
/// parametrizations, with ζ_j fixed to 1. `Infinite` means the branches
/// have the same root set.
pub fn coincidence_exponent(bj: &PuiseuxBranch, bk: &PuiseuxBranch) -> XOrder {
    let mk = bk.multiplicity;
    let scale = bj.scale().max(bk.scale());
    let mut best: Option<XOrder> = None;
    for r in 0..mk {
        // ζ_k = e^{2πir/m_k}; the term with numerator ℓ picks up ζ_k^ℓ
        let mut diff: Vec<(Rational64, Complex64)> = bj.terms.clone();
        for (l, c) in bk.numerators() {
            let e = Rational64::new(l, i64::from(mk));
            let zeta = Complex64::from_polar(1.0, std::f64::consts::TAU * (r as f64) * (l as f64) / f64::from(mk));
            let v = -c * zeta;
            match diff.binary_search_by(|(x, _)| x.cmp(&e)) {
                Ok(i) => diff[i].1 += v,
                Err(i) => diff.insert(i, (e, v)),
            }
        }
        let order = diff
            .iter()
            .find(|(_, c)| !is_negligible(*c, scale))
            .map_or(XOrder::Infinite, |(e, _)| XOrder::Finite(*e));
        if best.is_none_or(|b| order > b) {
            best = Some(order);
        }
    }
    best.unwrap_or(XOrder::Infinite)
}

/// A germ: branches around the point (0, center).
#[derive(Clone, Debug, PartialEq)]
pub struct LocalCurve {
    center: Complex64,
    branches: Vec<PuiseuxBranch>,
}

impl LocalCurve {
    /// Rejects pairs of branches with the same root set.
    pub fn new(center: Complex64, branches: Vec<PuiseuxBranch>) -> Result<Self> {
        if branches.is_empty() {
            return Err(Error::InvalidSeries("a curve needs at least one branch".into()));
        }
        for j in 0..branches.len() {
            for k in j + 1..branches.len() {
                if coincidence_exponent(&branches[j], &branches[k]) == XOrder::Infinite {
                    return Err(Error::IdenticalBranches(j + 1, k + 1));
                }
            }
        }
        Ok(Self { center, branches })
    }

    pub fn center(&self) -> Complex64 {
        self.center
    }

    pub fn branches(&self) -> &[PuiseuxBranch] {
        &self.branches
    }

    /// Number of strands Σ m_j.
    pub fn strands(&self) -> usize {
        self.branches.iter().map(|b| b.multiplicity as usize).sum()
    }

    /// Exponents of branch `j` kept by the essential truncation.
    pub fn essential_exponents(&self, j: usize) -> Vec<Rational64> {
        let mut keep = self.branches[j].characteristic_exponents();
        for (k, other) in self.branches.iter().enumerate() {
            if k != j {
                if let XOrder::Finite(e) = coincidence_exponent(&self.branches[j], other) {
                    keep.push(e);
                }
            }
        }
        keep.sort();
        keep.dedup();
        keep
    }

    /// Drops every term that is neither characteristic nor a coincidence
    /// exponent against another branch.
    pub fn essential_truncation(&self) -> LocalCurve {
        let branches = (0..self.branches.len())
            .map(|j| self.branches[j].keep_exponents(&self.essential_exponents(j)))
            .collect();
        LocalCurve {
            center: self.center,
            branches,
        }
    }

    /// The germ of y^n = x^m at the origin: gcd(n, m) branches of
    /// multiplicity n/gcd.
    pub fn quasihomogeneous(n: u32, m: u32) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidSeries("n and m must be positive".into()));
        }
        let d = n.gcd(&m);
        let (n1, m1) = (n / d, m / d);
        let exponent = Rational64::new(i64::from(m1), i64::from(n1));
        let branches = (0..d)
            .map(|l| {
                let c = Complex64::from_polar(1.0, std::f64::consts::TAU * f64::from(l) / f64::from(n));
                PuiseuxBranch::new(n1, vec![(exponent, c)])
            })
            .collect::<Result<Vec<_>>>()?;
        LocalCurve::new(Complex64::zero(), branches)
    }
}

/// Degrees attached to the quasihomogeneous germ y^n = x^m.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuasihomogeneousDegrees {
    /// Expected exponent sum of the local braid, (n−1)·m.
    pub exponent_sum: i64,
    pub milnor: u64,
    /// Local intersection number with the fiber {x = 0}.
    pub intersection: u64,
}

pub fn quasihomogeneous_degree_check(n: u32, m: u32) -> QuasihomogeneousDegrees {
    let (n, m) = (u64::from(n), u64::from(m));
    QuasihomogeneousDegrees {
        exponent_sum: ((n - 1) * m) as i64,
        milnor: (n - 1) * (m - 1),
        intersection: n,
    }
}

/// Parses "p/q" or "p" into an exact rational.
pub fn parse_rational(s: &str) -> Option<Rational64> {
    match s.split_once('/') {
        Some((p, q)) => {
            let (p, q): (i64, i64) = (p.trim().parse().ok()?, q.trim().parse().ok()?);
            (q != 0).then(|| Rational64::new(p, q))
        }
        None => s.trim().parse().ok().map(Rational64::from_integer),
    }
}

impl fmt::Display for PuiseuxBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "branch m={}", self.multiplicity)?;
        for (e, c) in &self.terms {
            let e = if e.denom().is_one() {
                format!("{}/1", e.numer())
            } else {
                e.to_string()
            };
            writeln!(f, "term {e} {} {}", crate::io::fmt_num(c.re), crate::io::fmt_num(c.im))?;
        }
        Ok(())
    }
}

impl fmt::Display for LocalCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "center {} {}",
            crate::io::fmt_num(self.center.re),
            crate::io::fmt_num(self.center.im)
        )?;
        for b in &self.branches {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational64 {
        Rational64::new(p, d)
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn branch(m: u32, terms: &[(i64, i64, f64)]) -> PuiseuxBranch {
        PuiseuxBranch::new(m, terms.iter().map(|&(p, d, a)| (q(p, d), c(a))).collect()).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(nu_x(&[(q(3, 2), c(1.0)), (q(2, 1), c(1.0))]), XOrder::Finite(q(3, 2)));
        assert_eq!(nu_x(&[]), XOrder::Infinite);
        assert_eq!(nu_x(&[(q(1, 1), c(0.0)), (q(5, 3), c(1.0))]), XOrder::Finite(q(5, 3)));
        assert!(XOrder::Finite(q(100, 1)) < XOrder::Infinite);
    }

    #[test]
    fn characteristic() {
        assert!(branch(1, &[(1, 1, 1.0), (2, 1, 3.0)]).characteristic_exponents().is_empty());
        assert_eq!(branch(2, &[(3, 2, 1.0)]).characteristic_exponents(), vec![q(3, 2)]);
        assert_eq!(
            branch(4, &[(3, 2, 1.0), (7, 4, 1.0)]).characteristic_exponents(),
            vec![q(3, 2), q(7, 4)]
        );
        // non-characteristic integer exponent in between
        assert_eq!(
            branch(4, &[(3, 2, 1.0), (2, 1, 1.0), (9, 4, 1.0)]).characteristic_exponents(),
            vec![q(3, 2), q(9, 4)]
        );
    }

    #[test]
    fn validation() {
        assert!(PuiseuxBranch::new(2, vec![(q(1, 3), c(1.0))]).is_err());
        assert!(PuiseuxBranch::new(2, vec![(q(3, 2), c(1.0)), (q(1, 1), c(1.0))]).is_err());
        assert!(PuiseuxBranch::new(1, vec![(q(0, 1), c(1.0))]).is_err());
        assert!(PuiseuxBranch::new(0, vec![]).is_err());
        let x = branch(1, &[(1, 1, 1.0)]);
        assert_eq!(
            LocalCurve::new(Complex64::zero(), vec![x.clone(), x]),
            Err(Error::IdenticalBranches(1, 2))
        );
    }

    #[test]
    fn coincidence() {
        let a = branch(1, &[(2, 1, 1.0)]);
        let b = branch(2, &[(3, 2, 1.0)]);
        assert_eq!(coincidence_exponent(&a, &b), XOrder::Finite(q(3, 2)));
        let x = branch(1, &[(1, 1, 1.0)]);
        let minus_x = branch(1, &[(1, 1, -1.0)]);
        assert_eq!(coincidence_exponent(&x, &minus_x), XOrder::Finite(q(1, 1)));
        let a = branch(2, &[(1, 1, 1.0), (5, 2, 1.0)]);
        let b = branch(3, &[(1, 1, 1.0), (7, 3, 1.0)]);
        assert_eq!(coincidence_exponent(&a, &b), XOrder::Finite(q(7, 3)));
        // conjugate parametrizations of the same branch
        let a = branch(2, &[(3, 2, 1.0)]);
        let b = branch(2, &[(3, 2, -1.0)]);
        assert_eq!(coincidence_exponent(&a, &b), XOrder::Infinite);
    }

    #[test]
    fn truncation() {
        let cusp = LocalCurve::new(Complex64::zero(), vec![branch(2, &[(3, 2, 1.0), (2, 1, 5.0)])]).unwrap();
        assert_eq!(cusp.essential_truncation().branches()[0].terms(), &[(q(3, 2), c(1.0))]);
        let smooth = LocalCurve::new(Complex64::zero(), vec![branch(1, &[(1, 1, 1.0), (2, 1, 1.0)])]).unwrap();
        assert!(smooth.essential_truncation().branches()[0].terms().is_empty());
        let lines = LocalCurve::new(
            Complex64::zero(),
            vec![branch(1, &[(1, 1, 1.0)]), branch(1, &[(1, 1, 2.0)])],
        )
        .unwrap();
        assert_eq!(lines.essential_truncation(), lines);
    }

    #[test]
    fn degrees() {
        let d = quasihomogeneous_degree_check(2, 3);
        assert_eq!((d.milnor, d.intersection, d.exponent_sum), (2, 2, 3));
        let d = quasihomogeneous_degree_check(3, 2);
        assert_eq!((d.milnor, d.intersection, d.exponent_sum), (2, 3, 4));
        let d = quasihomogeneous_degree_check(2, 1);
        assert_eq!((d.milnor, d.intersection, d.exponent_sum), (0, 2, 1));
    }

    #[test]
    fn quasihomogeneous_branches() {
        let c = LocalCurve::quasihomogeneous(4, 2).unwrap();
        assert_eq!(c.branches().len(), 2);
        assert_eq!(c.strands(), 4);
        let c = LocalCurve::quasihomogeneous(3, 2).unwrap();
        assert_eq!((c.branches().len(), c.strands()), (1, 3));
    }

    #[test]
    fn strand_values_close_up() {
        let b = branch(3, &[(2, 3, 1.0), (5, 3, 0.5)]);
        for k in 0..3 {
            let end = b.strand_value(0.7, 1.0, k);
            let next = b.strand_value(0.7, 0.0, (k + 1) % 3);
            assert!((end - next).norm() < 1e-12);
        }
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("3/2"), Some(q(3, 2)));
        assert_eq!(parse_rational("2"), Some(q(2, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }
}
