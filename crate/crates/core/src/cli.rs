//! Command-line front end. [`run`] parses the arguments, performs one
//! computation and returns the exit code with the report text.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::braid::{block_embed, BraidWord};
use crate::error::{Error, Result};
use crate::factorization::{Factorization, Verdict};
use crate::free_group::FreeWord;
use crate::homcount::{count_homs_with_budget, PermGroup};
use crate::io::{self, fmt_num};
use crate::presentation::{abelianize, tietze_simplify, zvk_affine, zvk_projective, Presentation};
use crate::puiseux::LocalCurve;
use crate::tracker::{local_braid, semilocal_braid, LocalBraid, TrackerConfig};

const TIETZE_BUDGET: usize = 500;
const HOMCOUNT_BUDGET: f64 = 1e9;

#[derive(Parser, Debug)]
#[command(name = "monodromy", version, about = "Braid monodromy and fundamental groups of plane curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Checks a factorization and reports its pseudo-Coxeter element.
    Verify { file: PathBuf },
    /// Prints the Zariski-van Kampen presentation.
    Group {
        file: PathBuf,
        #[command(flatten)]
        kind: GroupKind,
        /// Apply Tietze simplification.
        #[arg(long)]
        simplify: bool,
    },
    /// Abelianizations of the affine and projective groups.
    Abelianize { file: PathBuf },
    /// Counts homomorphisms of the group into a symmetric group.
    Homcount {
        file: PathBuf,
        #[arg(long, value_enum)]
        into: Target,
        /// Only count homomorphisms with nonabelian image.
        #[arg(long)]
        nonabelian: bool,
        /// Use the projective group instead of the affine one.
        #[arg(long)]
        projective: bool,
    },
    /// Enumerates the Hurwitz orbit of a factorization.
    HurwitzOrbit {
        file: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        max: usize,
        /// Print every orbit element.
        #[arg(long)]
        list: bool,
    },
    /// Decides (within bounds) whether two factorizations are equivalent.
    Distinguish {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        max: usize,
        #[arg(long = "conj-len", default_value_t = 2)]
        conj_len: usize,
    },
    /// Local braid of a single germ.
    LocalBraid {
        file: PathBuf,
        #[command(flatten)]
        tracker: TrackerArgs,
    },
    /// Braid of several germs over one fiber.
    Semilocal {
        file: PathBuf,
        #[command(flatten)]
        tracker: TrackerArgs,
    },
    /// Right action of a braid on a free-group word.
    Act {
        /// Braid letters, separated by spaces or commas.
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        /// Free-group letters, separated by spaces or commas.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Block embedding of braids given as STRANDS:LETTERS.
    Embed {
        #[arg(long = "part", required = true, allow_hyphen_values = true)]
        parts: Vec<String>,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GroupKind {
    #[arg(long)]
    affine: bool,
    #[arg(long)]
    projective: bool,
}

#[derive(Args, Debug)]
struct TrackerArgs {
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    radius: f64,
    #[arg(long, default_value_t = 1024)]
    samples: usize,
}

impl TrackerArgs {
    fn config(&self) -> TrackerConfig {
        TrackerConfig {
            radius: self.radius,
            samples: self.samples,
            tolerance: TrackerConfig::default().tolerance.min(self.radius / 2.0),
            ..TrackerConfig::default()
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    S3,
    S4,
    S5,
}

/// Runs one command. Exit codes: 0 success, 1 domain error, 2 usage error.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match execute(cli.command) {
        Ok(out) => (0, out),
        Err(e) => (1, format!("error: {e}\n")),
    }
}

fn execute(cmd: Command) -> Result<String> {
    match cmd {
        Command::Verify { file } => verify(&file),
        Command::Group { file, kind, simplify } => group(&file, kind.projective, simplify),
        Command::Abelianize { file } => abelianize_cmd(&file),
        Command::Homcount {
            file,
            into,
            nonabelian,
            projective,
        } => homcount(&file, into, nonabelian, projective),
        Command::HurwitzOrbit { file, max, list } => hurwitz_orbit(&file, max, list),
        Command::Distinguish { a, b, max, conj_len } => distinguish(&a, &b, max, conj_len),
        Command::LocalBraid { file, tracker } => {
            let curves = read_curves(&file)?;
            if curves.len() != 1 {
                return Err(Error::InvalidSeries(format!(
                    "local-braid expects one center, found {}; use semilocal",
                    curves.len()
                )));
            }
            let lb = local_braid(&curves[0], &tracker.config())?;
            Ok(braid_report(&curves, &tracker.config(), &lb))
        }
        Command::Semilocal { file, tracker } => {
            let curves = read_curves(&file)?;
            let lb = semilocal_braid(&curves, &tracker.config())?;
            Ok(braid_report(&curves, &tracker.config(), &lb))
        }
        Command::Act { braid, word, strands } => act(&braid, &word, strands),
        Command::Embed { parts } => embed(&parts),
    }
}

fn read_factorization(path: &Path) -> Result<Factorization> {
    io::parse_factorization(&io::read_file(path)?)
}

fn read_curves(path: &Path) -> Result<Vec<LocalCurve>> {
    io::parse_curves(&io::read_file(path)?)
}

fn echo(out: &mut String, f: &Factorization) {
    out.push_str("input:\n");
    for line in io::write_factorization(f).lines() {
        let _ = writeln!(out, "  {line}");
    }
}

fn verify(path: &Path) -> Result<String> {
    let f = read_factorization(path)?;
    let mut out = String::new();
    echo(&mut out, &f);
    let e = f.pseudo_coxeter();
    let _ = writeln!(out, "strands: {}", f.strands());
    let _ = writeln!(out, "factors: {}", f.len());
    let _ = writeln!(out, "pseudo_coxeter: {e}");
    let _ = writeln!(out, "exponent_sum: {}", e.exponent_sum());
    let _ = writeln!(out, "permutation: {}", e.permutation());
    let _ = writeln!(out, "projective: {}", f.is_projective());
    Ok(out)
}

fn presentation_of(f: &Factorization, projective: bool, simplify: bool) -> Presentation {
    let p = if projective { zvk_projective(f) } else { zvk_affine(f) };
    if simplify {
        tietze_simplify(&p, TIETZE_BUDGET)
    } else {
        p
    }
}

fn group(path: &Path, projective: bool, simplify: bool) -> Result<String> {
    let f = read_factorization(path)?;
    let mut out = String::new();
    echo(&mut out, &f);
    let p = presentation_of(&f, projective, simplify);
    let _ = writeln!(out, "group: {}", if projective { "projective" } else { "affine" });
    out.push_str(&p.to_string());
    let _ = writeln!(out, "abelianization: {}", abelianize(&p));
    Ok(out)
}

fn abelianize_cmd(path: &Path) -> Result<String> {
    let f = read_factorization(path)?;
    let mut out = String::new();
    echo(&mut out, &f);
    let _ = writeln!(out, "affine: {}", abelianize(&zvk_affine(&f)));
    let _ = writeln!(out, "projective: {}", abelianize(&zvk_projective(&f)));
    Ok(out)
}

fn homcount(path: &Path, into: Target, nonabelian: bool, projective: bool) -> Result<String> {
    let f = read_factorization(path)?;
    let degree = match into {
        Target::S3 => 3,
        Target::S4 => 4,
        Target::S5 => 5,
    };
    let p = presentation_of(&f, projective, true);
    let count = count_homs_with_budget(&p, &PermGroup::symmetric(degree), nonabelian, HOMCOUNT_BUDGET)?;
    let mut out = String::new();
    echo(&mut out, &f);
    let _ = writeln!(out, "group: {}", if projective { "projective" } else { "affine" });
    let _ = writeln!(out, "target: S{degree}");
    let _ = writeln!(out, "image: {}", if nonabelian { "nonabelian" } else { "any" });
    let _ = writeln!(out, "homomorphisms: {count}");
    Ok(out)
}

fn hurwitz_orbit(path: &Path, max: usize, list: bool) -> Result<String> {
    let f = read_factorization(path)?;
    let orbit = f.hurwitz_orbit(max);
    let mut out = String::new();
    echo(&mut out, &f);
    let _ = writeln!(out, "orbit_size: {}", orbit.len());
    let _ = writeln!(out, "complete: {}", orbit.complete);
    if list {
        for (i, g) in orbit.elements.iter().enumerate() {
            let _ = writeln!(out, "{i}: {g}");
        }
    }
    Ok(out)
}

fn distinguish(a: &Path, b: &Path, max: usize, conj_len: usize) -> Result<String> {
    let fa = read_factorization(a)?;
    let fb = read_factorization(b)?;
    let mut out = String::new();
    out.push_str("first ");
    echo(&mut out, &fa);
    out.push_str("second ");
    echo(&mut out, &fb);
    match fa.same_orbit(&fb, max, conj_len) {
        Verdict::Equivalent {
            conjugator,
            orbit_index,
        } => {
            let _ = writeln!(out, "verdict: equivalent");
            if conjugator.is_empty() {
                let _ = writeln!(out, "conjugator: identity");
            } else {
                let _ = writeln!(out, "conjugator: {conjugator}");
            }
            let _ = writeln!(out, "orbit_index: {orbit_index}");
        }
        Verdict::Distinct(reason) => {
            let _ = writeln!(out, "verdict: distinct");
            let _ = writeln!(out, "reason: {reason}");
        }
        Verdict::Unknown => {
            let _ = writeln!(out, "verdict: unknown");
        }
    }
    Ok(out)
}

fn braid_report(curves: &[LocalCurve], cfg: &TrackerConfig, lb: &LocalBraid) -> String {
    let mut out = String::from("input:\n");
    for line in io::write_curves(curves).lines() {
        let _ = writeln!(out, "  {line}");
    }
    let _ = writeln!(out, "radius: {}", fmt_num(cfg.radius));
    let _ = writeln!(out, "samples: {}", cfg.samples);
    let _ = writeln!(out, "strands: {}", lb.word.strands());
    let _ = writeln!(out, "word: {}", lb.word);
    let _ = writeln!(out, "exponent_sum: {}", lb.word.exponent_sum());
    let _ = writeln!(out, "permutation: {}", lb.word.permutation());
    let _ = writeln!(out, "max_excursion: {}", fmt_num(lb.max_excursion));
    out
}

fn letters(s: &str) -> Result<Vec<i32>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|w| !w.is_empty())
        .map(|w| {
            w.parse::<i32>()
                .map_err(|_| Error::InvalidConfig(format!("bad letter '{w}'")))
        })
        .collect()
}

fn act(braid: &str, word: &str, strands: Option<usize>) -> Result<String> {
    let b = letters(braid)?;
    let u = letters(word)?;
    let needed = b
        .iter()
        .map(|l| l.unsigned_abs() as usize + 1)
        .chain(u.iter().map(|l| l.unsigned_abs() as usize))
        .max()
        .unwrap_or(1);
    let n = strands.unwrap_or(needed);
    let t = BraidWord::new(n, &b)?;
    let w = FreeWord::new(n, &u)?;
    let image = w.act(&t)?;
    let mut out = String::new();
    let _ = writeln!(out, "strands: {n}");
    let _ = writeln!(out, "braid: {t}");
    let _ = writeln!(out, "word: {w}");
    let _ = writeln!(out, "image: {image}");
    Ok(out)
}

fn embed(parts: &[String]) -> Result<String> {
    let braids = parts
        .iter()
        .map(|p| {
            let (n, l) = p
                .split_once(':')
                .ok_or_else(|| Error::InvalidConfig(format!("part '{p}' is not STRANDS:LETTERS")))?;
            let n: usize = n
                .trim()
                .parse()
                .map_err(|_| Error::InvalidConfig(format!("bad strand count in '{p}'")))?;
            BraidWord::new(n, &letters(l)?)
        })
        .collect::<Result<Vec<_>>>()?;
    let w = block_embed(&braids);
    let mut out = String::new();
    for (i, b) in braids.iter().enumerate() {
        let _ = writeln!(out, "part {}: {} [{b}]", i + 1, b.strands());
    }
    let _ = writeln!(out, "strands: {}", w.strands());
    let _ = writeln!(out, "word: {w}");
    Ok(out)
}
