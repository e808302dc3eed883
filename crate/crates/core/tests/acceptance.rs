//! End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails or overruns its time budget.
//!
//! Set `UPDATE_GOLDEN=1` to rewrite the CLI golden files.

use std::collections::{HashSet, VecDeque};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use monodromy::braid::BraidKey;
use monodromy::homcount::{count_homs, PermGroup};
use monodromy::presentation::{abelianize, tietze_simplify, zvk_affine, zvk_projective};
use monodromy::snf::smith_normal_form_i64;
use monodromy::{delta_word, BraidWord, Factorization, FreeWord, GeometricTuple, LocalCurve, TrackerConfig, Verdict};
use num_complex::Complex64;
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn braid(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(n, letters).unwrap()
}

fn fact(n: usize, factors: &[&[i32]]) -> Factorization {
    Factorization::from_letters(n, factors).unwrap()
}

fn random_braid(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<i32> = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    braid(n, &letters)
}

fn random_free_word(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> FreeWord {
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<i32> = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..=n as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    FreeWord::new(n, &letters).unwrap()
}

fn c1_artin_relations() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut checked = 0;
    for n in 2..=6usize {
        let words: Vec<FreeWord> = (0..100).map(|_| random_free_word(&mut rng, n, 8)).collect();
        let mut relations = Vec::new();
        for i in 1..n as i32 {
            for j in 1..n as i32 {
                if j == i + 1 {
                    relations.push((braid(n, &[i, j, i]), braid(n, &[j, i, j])));
                } else if (i - j).abs() >= 2 {
                    relations.push((braid(n, &[i, j]), braid(n, &[j, i])));
                }
            }
        }
        for (lhs, rhs) in &relations {
            for w in &words {
                let (a, b) = (w.act(lhs).unwrap(), w.act(rhs).unwrap());
                ensure(a == b, format!("n={n}: {lhs} vs {rhs} differ on {w}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} relation/word pairs"))
}

fn c2_delta_fixed() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..200 {
        let n = rng.gen_range(2..=6);
        let t = random_braid(&mut rng, n, 12);
        let d = delta_word(n);
        ensure(d.act(&t).unwrap() == d, format!("delta moved by {t}"))?;
    }
    Ok("200 braids".into())
}

fn c3_meridian_permutation() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let n = rng.gen_range(2..=6);
        let t = random_braid(&mut rng, n, 12);
        let i = rng.gen_range(1..=n);
        let image = FreeWord::generator(n, i).unwrap().act(&t).unwrap();
        let expected = t.permutation().apply(i);
        ensure(
            image.meridian_index() == Some(expected),
            format!("mu_{i} under {t}: {image}, expected index {expected}"),
        )?;
    }
    Ok("200 pairs".into())
}

fn c4_centrality() -> Check {
    for n in 2..=5usize {
        let delta = BraidWord::full_twist(n);
        for i in 1..n as i32 {
            let s = braid(n, &[i]);
            let ab = delta.compose(&s).unwrap();
            let ba = s.compose(&delta).unwrap();
            ensure(ab.braid_equal(&ba).unwrap(), format!("n={n}, i={i}"))?;
        }
    }
    Ok("n = 2..5".into())
}

fn descending_power(n: usize, m: usize) -> BraidWord {
    let one: Vec<i32> = (1..n as i32).rev().collect();
    braid(n, &one.repeat(m))
}

fn c5_quasihomogeneous() -> Check {
    let cfg = TrackerConfig {
        samples: 2000,
        ..TrackerConfig::default()
    };
    let mut words = Vec::new();
    for (n, m) in [(2u32, 1u32), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)] {
        let curve = LocalCurve::quasihomogeneous(n, m).unwrap();
        let w = monodromy::local_braid(&curve, &cfg).map_err(|e| e.to_string())?.word;
        let expected_sum = i64::from((n - 1) * m);
        ensure(
            w.exponent_sum() == expected_sum,
            format!("({n},{m}): exponent sum {} != {expected_sum}", w.exponent_sum()),
        )?;
        let d = num_integer::gcd(n, m) as usize;
        let cycle_len = n as usize / d;
        let mut ct = w.permutation().cycle_type();
        ct.retain(|&l| l > 1);
        let mut expected_ct = vec![cycle_len; d];
        expected_ct.retain(|&l| l > 1);
        ensure(ct == expected_ct, format!("({n},{m}): cycle type {ct:?}"))?;
        let target = descending_power(n as usize, m as usize);
        ensure(
            w.conjugacy_search(&target, 6).unwrap().is_some(),
            format!("({n},{m}): {w} not conjugate to {target} within bound 6"),
        )?;
        words.push(format!("({n},{m})->[{w}]"));
    }
    Ok(words.join(" "))
}

fn c6_triple_point() -> Check {
    let text = "branch m=1\nbranch m=1\nterm 1 1 0\nbranch m=1\nterm 1 2 0\n";
    let curve = monodromy::io::parse_curves(text).unwrap().remove(0);
    let w = monodromy::local_braid(&curve, &TrackerConfig::default()).map_err(|e| e.to_string())?.word;
    ensure(w.exponent_sum() == 6, format!("exponent sum {}", w.exponent_sum()))?;
    ensure(
        w.conjugacy_search(&BraidWord::full_twist(3), 6).unwrap().is_some(),
        format!("{w} not conjugate to the full twist"),
    )?;
    Ok(format!("[{w}]"))
}

fn c7_truncation() -> Check {
    let q = Rational64::new;
    let c = |x: f64| Complex64::new(x, 0.0);
    let branch = monodromy::PuiseuxBranch::new(2, vec![(q(3, 2), c(1.0)), (q(2, 1), c(5.0)), (q(5, 2), c(-2.0))]).unwrap();
    let full = LocalCurve::new(c(0.0), vec![branch]).unwrap();
    let truncated = full.essential_truncation();
    ensure(
        truncated.branches()[0].terms() == [(q(3, 2), c(1.0))],
        "truncation keeps only the characteristic term",
    )?;
    let cfg = TrackerConfig {
        radius: 0.01,
        ..TrackerConfig::default()
    };
    let a = monodromy::local_braid(&full, &cfg).map_err(|e| e.to_string())?.word;
    let b = monodromy::local_braid(&truncated, &cfg).map_err(|e| e.to_string())?.word;
    ensure(a.exponent_sum() == 3 && b.exponent_sum() == 3, format!("sums {} {}", a.exponent_sum(), b.exponent_sum()))?;
    ensure(a.conjugacy_search(&b, 6).unwrap().is_some(), format!("[{a}] vs [{b}]"))?;
    Ok(format!("[{a}] ~ [{b}]"))
}

// Independent permutation oracle: permutations of {0,1,2} as arrays.
fn s3_elements() -> Vec<[usize; 3]> {
    vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]]
}

fn p_mul(p: &[usize; 3], q: &[usize; 3]) -> [usize; 3] {
    // p then q
    [q[p[0]], q[p[1]], q[p[2]]]
}

fn p_inv(p: &[usize; 3]) -> [usize; 3] {
    let mut r = [0; 3];
    for i in 0..3 {
        r[p[i]] = i;
    }
    r
}

fn eval_oracle(word: &[i32], assignment: &[[usize; 3]]) -> [usize; 3] {
    word.iter().fold([0, 1, 2], |acc, &l| {
        let g = assignment[(l.unsigned_abs() - 1) as usize];
        p_mul(&acc, &if l > 0 { g } else { p_inv(&g) })
    })
}

/// Brute force over all |S3|^g assignments.
fn oracle_count(generators: usize, relators: &[Vec<i32>], nonabelian_only: bool) -> u64 {
    let elems = s3_elements();
    let total = elems.len().pow(generators as u32);
    let mut count = 0;
    for code in 0..total {
        let mut c = code;
        let assignment: Vec<[usize; 3]> = (0..generators)
            .map(|_| {
                let e = elems[c % 6];
                c /= 6;
                e
            })
            .collect();
        if !relators.iter().all(|r| eval_oracle(r, &assignment) == [0, 1, 2]) {
            continue;
        }
        let abelian = assignment
            .iter()
            .all(|a| assignment.iter().all(|b| p_mul(a, b) == p_mul(b, a)));
        if !(nonabelian_only && abelian) {
            count += 1;
        }
    }
    count
}

fn c8_trefoil() -> Check {
    let f = fact(2, &[&[1, 1, 1]]);
    let p = zvk_affine(&f);
    let ab = abelianize(&p);
    ensure(ab.free_rank == 1 && ab.torsion.is_empty(), format!("abelianization {ab}"))?;
    let expected = oracle_count(2, &[vec![1, 2, 1, -2, -1, -2]], false);
    let s3 = PermGroup::symmetric(3);
    let before = count_homs(&p, &s3, false);
    let simplified = tietze_simplify(&p, 200);
    let after = count_homs(&simplified, &s3, false);
    ensure(
        before == expected && after == expected,
        format!("counts {before} / {after}, oracle {expected}"),
    )?;
    Ok(format!("{ab}; homs into S3 = {expected}"))
}

fn c9_conic() -> Check {
    let f = fact(2, &[&[1], &[1]]);
    ensure(f.is_projective(), "not projective")?;
    let a = abelianize(&zvk_affine(&f));
    ensure(a.free_rank == 1 && a.torsion.is_empty(), format!("affine {a}"))?;
    let p = abelianize(&zvk_projective(&f));
    let torsion: Vec<String> = p.torsion.iter().map(ToString::to_string).collect();
    ensure(p.free_rank == 0 && torsion == ["2"], format!("projective {p}"))?;
    Ok(format!("affine {a}; projective {p}"))
}

fn deformed_triple() -> Factorization {
    fact(3, &[&[1, 1], &[-1, 2, 2, 1], &[2, 2]])
}

fn concurrent_triple() -> Factorization {
    fact(3, &[&[1, 2, 1, 2, 1, 2]])
}

fn c10_deformed_triple_point() -> Check {
    let f = deformed_triple();
    ensure(
        f.pseudo_coxeter().braid_equal(&BraidWord::full_twist(3)).unwrap(),
        "pseudo-Coxeter element is not the full twist",
    )?;
    let p = zvk_affine(&f);
    let ab = abelianize(&p);
    ensure(ab.free_rank == 3, format!("abelianization {ab}"))?;
    let count = count_homs(&p, &PermGroup::symmetric(3), true);
    let oracle = oracle_count(p.generators(), p.relators(), true);
    ensure(count == 0 && oracle == 0, format!("nonabelian homs {count}, oracle {oracle}"))?;
    Ok(format!("{ab}; nonabelian homs into S3 = 0"))
}

fn c11_concurrent_triple_point() -> Check {
    let f = concurrent_triple();
    let p = zvk_affine(&f);
    let ab = abelianize(&p);
    ensure(ab.free_rank == 3, format!("abelianization {ab}"))?;
    let count = count_homs(&p, &PermGroup::symmetric(3), true);
    let oracle = oracle_count(p.generators(), p.relators(), true);
    ensure(count > 0 && count == oracle, format!("nonabelian homs {count}, oracle {oracle}"))?;
    let verdict = deformed_triple().same_orbit(&f, 1000, 2);
    ensure(matches!(verdict, Verdict::Distinct(_)), format!("verdict {verdict:?}"))?;
    Ok(format!("{ab}; nonabelian homs into S3 = {count}; distinct"))
}

/// Exhaustive Hurwitz orbit with fingerprints built from braid keys.
fn oracle_orbit(f: &Factorization) -> Vec<Factorization> {
    let key = |f: &Factorization| -> Vec<BraidKey> { f.factors().iter().map(BraidWord::key).collect() };
    let mut seen = HashSet::from([key(f)]);
    let mut out = vec![f.clone()];
    let mut queue = VecDeque::from([f.clone()]);
    while let Some(cur) = queue.pop_front() {
        let t = cur.factors();
        for i in 0..t.len().saturating_sub(1) {
            let (a, b) = (&t[i], &t[i + 1]);
            let forward = (a.compose(b).unwrap().compose(&a.inverse()).unwrap(), a.clone());
            let backward = (b.clone(), b.inverse().compose(a).unwrap().compose(b).unwrap());
            for (x, y) in [forward, backward] {
                let mut next = t.to_vec();
                next[i] = x.free_reduced();
                next[i + 1] = y.free_reduced();
                let g = Factorization::new(cur.strands(), next).unwrap();
                if seen.insert(key(&g)) {
                    out.push(g.clone());
                    queue.push_back(g);
                }
            }
        }
    }
    out
}

fn c12_hurwitz_orbits() -> Check {
    let mut sizes = Vec::new();
    for (f, expected) in [(fact(2, &[&[1], &[1]]), 1usize), (fact(3, &[&[1], &[2]]), 3)] {
        let orbit = f.hurwitz_orbit(10_000);
        let oracle = oracle_orbit(&f);
        ensure(
            orbit.complete && orbit.len() == expected && oracle.len() == expected,
            format!("{f}: orbit {} (complete {}), oracle {}", orbit.len(), orbit.complete, oracle.len()),
        )?;
        ensure(oracle.iter().all(|g| orbit.contains(g)), format!("{f}: oracle element missing"))?;
        let e = f.pseudo_coxeter();
        let ab = abelianize(&zvk_affine(&f));
        for g in &orbit.elements {
            ensure(g.pseudo_coxeter().braid_equal(&e).unwrap(), format!("pseudo-Coxeter changes at {g}"))?;
            ensure(abelianize(&zvk_affine(g)) == ab, format!("abelianization changes at {g}"))?;
        }
        sizes.push(orbit.len().to_string());
    }
    Ok(format!("orbit sizes {}", sizes.join(", ")))
}

fn c13_find_braid() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut total_len = 0;
    for _ in 0..50 {
        let g = random_braid(&mut rng, 3, 10);
        let tuple = GeometricTuple::from_braid(&g);
        let h = tuple
            .find_braid(12)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("no witness for {g}"))?;
        ensure(h.braid_equal(&g).unwrap(), format!("witness {h} differs from {g}"))?;
        total_len += h.len();
    }
    Ok(format!("50 round trips, total witness length {total_len}"))
}

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a.abs(), a.signum(), 0)
    } else {
        let (g, x, y) = egcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// Bezout coefficients, preferring the trivial combination when `a | b`
/// so that an already reduced pivot is left alone.
fn bezout(a: i128, b: i128) -> (i128, i128, i128) {
    if b % a == 0 {
        (a.abs(), a.signum(), 0)
    } else {
        egcd(a, b)
    }
}

/// Smith normal form by unimodular Bezout row and column combinations,
/// followed by gcd/lcm exchanges on the diagonal.
fn snf_oracle(matrix: &[Vec<i64>]) -> Vec<i128> {
    let mut a: Vec<Vec<i128>> = matrix.iter().map(|r| r.iter().map(|&x| i128::from(x)).collect()).collect();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let k = rows.min(cols);
    for t in 0..k {
        let Some((pi, pj)) = (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j))).find(|&(i, j)| a[i][j] != 0) else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            for i in t + 1..rows {
                if a[i][t] != 0 {
                    let (g, x, y) = bezout(a[t][t], a[i][t]);
                    let (p, q) = (a[t][t] / g, a[i][t] / g);
                    let (top, bottom) = a.split_at_mut(i);
                    for (u, v) in top[t].iter_mut().zip(bottom[0].iter_mut()) {
                        (*u, *v) = (x * *u + y * *v, -q * *u + p * *v);
                    }
                }
            }
            for j in t + 1..cols {
                if a[t][j] != 0 {
                    let (g, x, y) = bezout(a[t][t], a[t][j]);
                    let (p, q) = (a[t][t] / g, a[t][j] / g);
                    for row in a.iter_mut() {
                        let (u, v) = (row[t], row[j]);
                        row[t] = x * u + y * v;
                        row[j] = -q * u + p * v;
                    }
                }
            }
            if (t + 1..rows).all(|i| a[i][t] == 0) {
                break;
            }
        }
    }
    let mut d: Vec<i128> = (0..k).map(|i| a[i][i].abs()).collect();
    for i in 0..k {
        for j in i + 1..k {
            let g = egcd(d[i], d[j]).0;
            if g != 0 {
                let l = d[i] / g * d[j];
                d[i] = g;
                d[j] = l;
            }
        }
    }
    let zeros = d.iter().filter(|&&x| x == 0).count();
    d.retain(|&x| x != 0);
    d.extend(std::iter::repeat_n(0, zeros));
    d
}

fn c14_snf_battery() -> Check {
    let m = |rows: &[&[i64]]| -> Vec<Vec<i64>> { rows.iter().map(|r| r.to_vec()).collect() };
    let battery = vec![
        m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]),
        m(&[&[0, 0], &[0, 0]]),
        m(&[&[7]]),
        m(&[&[0]]),
        m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
        m(&[&[2, 0], &[0, 3]]),
        m(&[&[4, 0], &[0, 6]]),
        m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]),
        m(&[&[6, 10, 15]]),
        m(&[&[6], &[10], &[15]]),
        m(&[&[2, 2, 2], &[2, 2, 2]]),
        m(&[&[12, 18], &[18, 12], &[30, 30]]),
        m(&[&[3, 0, 0, 0], &[0, 9, 0, 0], &[0, 0, 27, 0]]),
        m(&[&[-5, 10], &[15, -20]]),
        m(&[&[1, -1, 0], &[0, 1, -1], &[-1, 0, 1]]),
        m(&[&[2, 1, 0, 0], &[1, 2, 1, 0], &[0, 1, 2, 1], &[0, 0, 1, 2]]),
        m(&[&[8, 12, 20], &[4, 6, 10], &[16, 24, 40]]),
        m(&[&[1_000_003, 999_983], &[999_979, 1_000_033]]),
        m(&[&[0, 0, 5], &[0, 7, 0], &[11, 0, 0]]),
        m(&[&[2, 4, 6, 8], &[1, 3, 5, 7], &[0, 0, 0, 0], &[4, 8, 12, 16]]),
    ];
    for mat in &battery {
        let got: Vec<String> = smith_normal_form_i64(mat).iter().map(ToString::to_string).collect();
        let want: Vec<String> = snf_oracle(mat).iter().map(ToString::to_string).collect();
        ensure(got == want, format!("{mat:?}: got {got:?}, oracle {want:?}"))?;
    }
    Ok(format!("{} matrices", battery.len()))
}

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn golden_cases() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        ("verify_conic", vec!["verify", "conic.txt"]),
        ("verify_deformed_triple", vec!["verify", "deformed_triple.txt"]),
        ("group_affine_trefoil", vec!["group", "--affine", "trefoil.txt"]),
        ("group_projective_conic", vec!["group", "--projective", "conic.txt"]),
        ("group_simplified_deformed", vec!["group", "--affine", "--simplify", "deformed_triple.txt"]),
        ("abelianize_concurrent", vec!["abelianize", "concurrent_triple.txt"]),
        ("homcount_trefoil_s3", vec!["homcount", "trefoil.txt", "--into", "s3"]),
        ("homcount_deformed_nonabelian", vec!["homcount", "deformed_triple.txt", "--into", "s3", "--nonabelian"]),
        ("homcount_concurrent_nonabelian", vec!["homcount", "concurrent_triple.txt", "--into", "s3", "--nonabelian"]),
        ("homcount_conic_projective_s4", vec!["homcount", "conic.txt", "--into", "s4", "--projective"]),
        ("hurwitz_orbit_two_points", vec!["hurwitz-orbit", "two_points.txt", "--max", "100", "--list"]),
        ("distinguish_triple_points", vec!["distinguish", "deformed_triple.txt", "concurrent_triple.txt", "--max", "1000", "--conj-len", "2"]),
        ("distinguish_moved", vec!["distinguish", "two_points.txt", "two_points_moved.txt", "--max", "100", "--conj-len", "1"]),
        ("local_braid_cusp", vec!["local-braid", "cusp.txt"]),
        ("local_braid_tangency", vec!["local-braid", "tangency.txt", "--samples", "256"]),
        ("local_braid_triple_point", vec!["local-braid", "triple_point.txt", "--radius", "0.5", "--samples", "512"]),
        ("semilocal_two_nodes", vec!["semilocal", "two_nodes.txt"]),
        ("semilocal_tangency_and_line", vec!["semilocal", "tangency_and_line.txt"]),
        ("act", vec!["act", "--braid", "1 2", "--word", "1"]),
        ("embed", vec!["embed", "--part", "2:1,1", "--part", "2:1,1"]),
    ]
}

fn run_cli(args: &[&str], threads: usize) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_monodromy"))
        .args(args)
        .current_dir(manifest_dir().join("tests/fixtures"))
        .env("MONODROMY_THREADS", threads.to_string())
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "{args:?} exited with {}: {}",
            out.status,
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn c15_cli_golden() -> Check {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let golden_dir = manifest_dir().join("tests/golden");
    let cases = golden_cases();
    for (name, args) in &cases {
        let first = run_cli(args, 1)?;
        let second = run_cli(args, 1)?;
        let parallel = run_cli(args, 4)?;
        ensure(first == second, format!("{name}: output differs between runs"))?;
        ensure(first == parallel, format!("{name}: output differs between 1 and 4 threads"))?;
        let path: PathBuf = golden_dir.join(format!("{name}.out"));
        if update {
            std::fs::write(&path, &first).map_err(|e| e.to_string())?;
        }
        let golden = read_golden(&path)?;
        ensure(golden == first, format!("{name}: output differs from {}", path.display()))?;
    }
    Ok(format!("{} commands", cases.len()))
}

fn read_golden(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e} (run with UPDATE_GOLDEN=1)", path.display()))
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("01 Artin relations act identically", c1_artin_relations, Duration::from_secs(2)),
        ("02 boundary word is fixed", c2_delta_fixed, Duration::from_secs(2)),
        ("03 meridians follow the permutation", c3_meridian_permutation, Duration::from_secs(2)),
        ("04 full twist is central", c4_centrality, Duration::from_secs(1)),
        ("05 local braids of y^n = x^m", c5_quasihomogeneous, Duration::from_secs(30)),
        ("06 ordinary triple point", c6_triple_point, Duration::from_secs(5)),
        ("07 essential truncation", c7_truncation, Duration::from_secs(5)),
        ("08 cusp group and S3 counts", c8_trefoil, Duration::from_secs(1)),
        ("09 smooth conic", c9_conic, Duration::from_secs(1)),
        ("10 three lines in general position", c10_deformed_triple_point, Duration::from_secs(2)),
        ("11 three concurrent lines", c11_concurrent_triple_point, Duration::from_secs(2)),
        ("12 Hurwitz orbits", c12_hurwitz_orbits, Duration::from_secs(2)),
        ("13 find_braid round trip", c13_find_braid, Duration::from_secs(20)),
        ("14 Smith normal form battery", c14_snf_battery, Duration::from_secs(1)),
        ("15 CLI golden files", c15_cli_golden, Duration::from_secs(10)),
    ];
    let mut failures = 0;
    for (name, check, budget) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let (status, detail) = match result {
            Ok(_) if elapsed > budget => ("FAIL", format!("took {elapsed:.2?}, budget {budget:?}")),
            Ok(detail) => ("PASS", detail),
            Err(detail) => ("FAIL", detail),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!("{status} {name} ({elapsed:.2?} / {budget:?}): {detail}");
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
