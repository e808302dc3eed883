//! Text formats for factorizations and curve germs, and number formatting.
//!
//! Factorization file:
//! ```text
//! # conic
//! n 2
//! factor 1
//! factor 1
//! ```
//! Curve file (each `center` line starts a new germ; the first germ may omit it):
//! ```text
//! center 0 0
//! branch m=2
//! term 3/2 1 0
//! ```

use std::path::Path;

use num_complex::Complex64;
use num_rational::Rational64;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::factorization::Factorization;
use crate::puiseux::{parse_rational, LocalCurve, PuiseuxBranch};

/// Formats with 12 significant digits, like C's `%.12g`.
pub fn fmt_num(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..12).contains(&exp) {
        let m = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{m}e{sign}{:02}", exp.abs());
    }
    let decimals = (11 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}"))
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

pub fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("");
        let words: Vec<&str> = l.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

pub fn parse_letters(words: &[&str], line: usize) -> Result<Vec<i32>> {
    words
        .iter()
        .map(|w| w.parse::<i32>().map_err(|_| parse_err(line, format!("bad letter '{w}'"))))
        .collect()
}

pub fn parse_factorization(text: &str) -> Result<Factorization> {
    let mut n: Option<usize> = None;
    let mut factors = Vec::new();
    for (line, words) in lines(text) {
        match words[0] {
            "n" => {
                if n.is_some() {
                    return Err(parse_err(line, "duplicate 'n' line"));
                }
                let value = words
                    .get(1)
                    .and_then(|w| w.parse::<usize>().ok())
                    .filter(|&v| v > 0 && words.len() == 2)
                    .ok_or_else(|| parse_err(line, "expected 'n <positive integer>'"))?;
                n = Some(value);
            }
            "factor" => {
                let n = n.ok_or_else(|| parse_err(line, "'factor' before 'n'"))?;
                let letters = parse_letters(&words[1..], line)?;
                let t = BraidWord::new(n, &letters).map_err(|e| parse_err(line, e.to_string()))?;
                factors.push(t);
            }
            other => return Err(parse_err(line, format!("unknown keyword '{other}'"))),
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "missing 'n' line"))?;
    Factorization::new(n, factors)
}

pub fn write_factorization(f: &Factorization) -> String {
    let mut out = format!("n {}\n", f.strands());
    for t in f.factors() {
        if t.is_empty() {
            out.push_str("factor\n");
        } else {
            out.push_str(&format!("factor {t}\n"));
        }
    }
    out
}

fn parse_f64(w: Option<&&str>, line: usize, what: &str) -> Result<f64> {
    w.and_then(|w| w.parse::<f64>().ok())
        .filter(|x| x.is_finite())
        .ok_or_else(|| parse_err(line, format!("expected {what}")))
}

/// Parses one or more germs.
pub fn parse_curves(text: &str) -> Result<Vec<LocalCurve>> {
    type Terms = Vec<(Rational64, Complex64)>;
    struct Pending {
        center: Complex64,
        line: usize,
        /// (multiplicity, terms, line of the `branch` keyword)
        branches: Vec<(u32, Terms, usize)>,
    }
    let mut curves: Vec<Pending> = Vec::new();
    for (line, words) in lines(text) {
        match words[0] {
            "center" => {
                if words.len() != 3 {
                    return Err(parse_err(line, "expected 'center <re> <im>'"));
                }
                let re = parse_f64(words.get(1), line, "real part")?;
                let im = parse_f64(words.get(2), line, "imaginary part")?;
                curves.push(Pending {
                    center: Complex64::new(re, im),
                    line,
                    branches: Vec::new(),
                });
            }
            "branch" => {
                let m = words
                    .get(1)
                    .and_then(|w| w.strip_prefix("m="))
                    .and_then(|w| w.parse::<u32>().ok())
                    .filter(|_| words.len() == 2)
                    .ok_or_else(|| parse_err(line, "expected 'branch m=<int>'"))?;
                if curves.is_empty() {
                    curves.push(Pending {
                        center: Complex64::new(0.0, 0.0),
                        line,
                        branches: Vec::new(),
                    });
                }
                curves.last_mut().expect("nonempty").branches.push((m, Vec::new(), line));
            }
            "term" => {
                if !(3..=4).contains(&words.len()) {
                    return Err(parse_err(line, "expected 'term <num>/<den> <re> [<im>]'"));
                }
                let e = parse_rational(words[1]).ok_or_else(|| parse_err(line, "bad exponent"))?;
                let re = parse_f64(words.get(2), line, "real part")?;
                let im = if words.len() == 4 {
                    parse_f64(words.get(3), line, "imaginary part")?
                } else {
                    0.0
                };
                let branch = curves
                    .last_mut()
                    .and_then(|c| c.branches.last_mut())
                    .ok_or_else(|| parse_err(line, "'term' before 'branch'"))?;
                branch.1.push((e, Complex64::new(re, im)));
            }
            other => return Err(parse_err(line, format!("unknown keyword '{other}'"))),
        }
    }
    if curves.is_empty() {
        return Err(parse_err(0, "no branches"));
    }
    curves
        .into_iter()
        .map(|c| {
            let branches = c
                .branches
                .into_iter()
                .map(|(m, terms, line)| PuiseuxBranch::new(m, terms).map_err(|e| parse_err(line, e.to_string())))
                .collect::<Result<Vec<_>>>()?;
            LocalCurve::new(c.center, branches).map_err(|e| parse_err(c.line, e.to_string()))
        })
        .collect()
}

pub fn write_curves(curves: &[LocalCurve]) -> String {
    curves.iter().map(ToString::to_string).collect()
}
