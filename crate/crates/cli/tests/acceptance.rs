//! Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero when
//! any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use antypes::complex::{self, BuildOptions, Family};
use antypes::gauge::{self, PrimeSet, TrivialityVerdict, Verdict};
use antypes::operad::{self, LevelTester};
use antypes::rational::{factorial, frac, int, Rational};
use antypes::tree::{self, Tree};
use antypes::{Exec, VertexKind};
use num_bigint::BigInt;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<String, String> {
    let t = start.elapsed();
    ensure(t < limit, format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(format!("{t:.2?}"))
}

fn cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_antypes"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(
        out.status.success(),
        format!("{args:?} exited with {}", out.status),
    )?;
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

/// Every CLI invocation this suite relies on.
const CLI_COMMANDS: &[&[&str]] = &[
    &["gauge", "epsilon", "--n", "3"],
    &["gauge", "divisor", "--n", "3"],
    &["--json", "gauge", "divisor", "--n", "3"],
    &["gauge", "congruence", "--primes", "3,5,7,11,13"],
    &[
        "--json", "gauge", "decide", "--k", "5", "--primes", "5", "--n", "2",
    ],
    &[
        "--json", "gauge", "decide", "--k", "3", "--primes", "3", "--n", "2",
    ],
    &[
        "--json", "gauge", "decide", "--k", "9", "--primes", "3", "--n", "2",
    ],
    &[
        "--json", "gauge", "decide", "--k", "1", "--primes", "2,3", "--n", "1",
    ],
    &["gauge", "lower-bound", "--n", "1", "--sharper"],
    &["gauge", "lower-bound", "--n", "3"],
    &["complex", "f-vector", "--family", "K", "--n", "4"],
    &["complex", "f-vector", "--family", "J", "--n", "3"],
    &["complex", "homology", "--family", "L", "--n", "6"],
    &["complex", "export", "--family", "J", "--n", "3"],
    &["trees", "level-test", "--tree", "p(b(*)@1 b(*)@1/2)"],
    &[
        "--json",
        "trees",
        "enumerate",
        "--kind",
        "painted",
        "--leaves",
        "3",
    ],
    &[
        "verify",
        "relations",
        "--max-leaves",
        "5",
        "--samples",
        "0,1/2,1",
    ],
];

fn c1_epsilon_table() -> Check {
    let start = Instant::now();
    let out = cli(&["gauge", "epsilon", "--n", "3"])?;
    ensure(out == "1/6 -1/180 1/1512\n", format!("got {out:?}"))?;
    within(start, Duration::from_secs(1))
}

fn c2_oracle() -> Check {
    let start = Instant::now();
    let eps = gauge::epsilon_sequence(12).map_err(|e| e.to_string())?;
    let oracle = gauge::chern_oracle(12).map_err(|e| e.to_string())?;
    ensure(eps == oracle, "recursion and Chern oracle disagree")?;
    for l in 1..=12 {
        let want = Rational::new(1.into(), factorial(2 * l as u64 + 1));
        ensure(
            gauge::defining_sum(&eps, l) == want,
            format!("back-substitution fails at l={l}"),
        )?;
    }
    within(start, Duration::from_secs(10))
}

fn c3_divisor() -> Check {
    let d = gauge::triviality_divisor(3).map_err(|e| e.to_string())?;
    let f = gauge::format_factorization(&gauge::factorize(&d));
    ensure(d == BigInt::from(7560), format!("divisor {d}"))?;
    ensure(f == "2^3·3^3·5·7", format!("factorization {f}"))?;
    ensure(
        cli(&["gauge", "divisor", "--n", "3"])? == "7560\n",
        "CLI divisor output",
    )?;
    Ok(format!("{d} = {f}"))
}

fn c4_congruences() -> Check {
    let start = Instant::now();
    for p in [3, 5, 7, 11, 13] {
        let r = gauge::epsilon_congruence(p).map_err(|e| e.to_string())?;
        ensure(r.holds(), r.to_string())?;
    }
    within(start, Duration::from_secs(30))
}

fn c5_decisions() -> Check {
    use gauge::Clause::*;
    let cases: [(i64, &str, usize, Verdict, gauge::Clause); 4] = [
        (5, "5", 2, Verdict::Trivial, Half),
        (3, "3", 2, Verdict::NotTrivial, Top),
        (9, "3", 2, Verdict::Trivial, Top),
        (1, "2,3", 1, Verdict::NotTrivial, Necessary),
    ];
    for (k, ps, n, verdict, clause) in cases {
        let primes: PrimeSet = ps.parse().map_err(|e: antypes::Error| e.to_string())?;
        let got =
            gauge::decide_triviality(&BigInt::from(k), &primes, n).map_err(|e| e.to_string())?;
        let want = TrivialityVerdict { verdict, clause };
        ensure(
            got == want,
            format!("k={k} P={{{ps}}} n={n}: got {got}, want {want}"),
        )?;
    }
    let json = cli(&[
        "--json", "gauge", "decide", "--k", "5", "--primes", "5", "--n", "2",
    ])?;
    ensure(
        json == "{\"verdict\":\"trivial\",\"clause\":\"(b)\"}\n",
        format!("JSON {json:?}"),
    )?;
    Ok("4 examples".into())
}

fn c6_counting() -> Check {
    let a = gauge::lower_bound_types(1, true).map_err(|e| e.to_string())?;
    let b = gauge::lower_bound_types(3, false).map_err(|e| e.to_string())?;
    ensure(a == 6u32.into(), format!("sharper n=1 gives {a}"))?;
    ensure(b == 16u32.into(), format!("plain n=3 gives {b}"))?;
    Ok("6 and 16".into())
}

fn f_vector(family: Family, n: usize) -> Result<Vec<usize>, String> {
    Ok(complex::build(family, n, BuildOptions::default())
        .map_err(|e| e.to_string())?
        .f_vector())
}

fn c7_small_polytopes() -> Check {
    let want: [(Family, usize, &[usize]); 6] = [
        (Family::K, 2, &[1]),
        (Family::K, 3, &[2, 1]),
        (Family::K, 4, &[5, 5, 1]),
        (Family::J, 1, &[1]),
        (Family::J, 2, &[2, 1]),
        (Family::J, 3, &[6, 6, 1]),
    ];
    for (family, n, f) in want {
        let got = f_vector(family, n)?;
        ensure(got == f, format!("{family}_{n}: {got:?}"))?;
    }
    ensure(
        cli(&["complex", "f-vector", "--family", "K", "--n", "4"])? == "5 5 1\n",
        "CLI K_4",
    )?;
    Ok("K_2..K_4, J_1..J_3".into())
}

fn c8_k5() -> Check {
    let start = Instant::now();
    let k5 = complex::build_k(5).map_err(|e| e.to_string())?;
    let f = k5.f_vector();
    ensure(f == [14, 21, 9, 1], format!("f-vector {f:?}"))?;
    let binary = tree::binary_unpainted(5).map_err(|e| e.to_string())?.len();
    let planar = tree::planar_trees(5).map_err(|e| e.to_string())?.len();
    ensure(
        f[0] == binary,
        format!("{} vertices vs {binary} binary trees", f[0]),
    )?;
    ensure(
        k5.cells().len() == planar,
        format!("{} cells vs {planar} planar trees", k5.cells().len()),
    )?;
    ensure(k5.euler_characteristic() == 1, "euler characteristic")?;
    within(start, Duration::from_secs(5))
}

fn sphere(d: usize) -> Vec<usize> {
    let mut b = vec![0; d + 1];
    b[0] += 1;
    b[d] += 1;
    b
}

fn c9_spheres() -> Check {
    let start = Instant::now();
    let cases = (4..=7)
        .map(|n| (Family::L, n, n - 3))
        .chain((3..=5).map(|n| (Family::H, n, n - 2)));
    for (family, n, d) in cases {
        let c = complex::build(family, n, BuildOptions::default()).map_err(|e| e.to_string())?;
        c.check_boundary_squared().map_err(|e| e.to_string())?;
        let b = c.homology_ranks(Exec::Parallel);
        ensure(b == sphere(d), format!("{family}_{n}: Betti {b:?}"))?;
    }
    within(start, Duration::from_secs(120))
}

fn c10_relations() -> Check {
    let start = Instant::now();
    let samples = vec![int(0), frac(1, 3), frac(1, 2), int(1)];
    let r =
        operad::verify_graft_relations(6, &samples, Exec::Parallel).map_err(|e| e.to_string())?;
    ensure(r.is_clean(), format!("{} failures", r.failures.len()))?;
    ensure(
        r.checked.len() == 6 && r.checked.values().all(|&n| n > 0),
        "not all six relations were exercised",
    )?;
    let t = within(start, Duration::from_secs(120))?;
    Ok(format!("{} instances, {t}", r.total_checked()))
}

fn c11_level_trees() -> Check {
    let samples = vec![int(0), frac(1, 2), int(1)];
    let mut tester = LevelTester::new();
    let mut count = 0usize;
    let err = |e: antypes::Error| e.to_string();
    for n in 2..=6 {
        for r in 1..n {
            let t = n - r + 1;
            let rhos = operad::j_points(r, &samples, Exec::Parallel).map_err(err)?;
            let sigmas = operad::k_points(t, &samples).map_err(err)?;
            for k in 1..=r {
                for rho in rhos.iter().step_by(7) {
                    for sigma in sigmas.iter().step_by(7) {
                        let g = operad::graft_jk(k, rho, sigma).map_err(err)?;
                        ensure(tester.is_level(&g), format!("δ_{k} output {g} not level"))?;
                        count += 1;
                    }
                }
            }
        }
        for t in 2..=n {
            let taus = operad::k_points(t, &samples).map_err(err)?;
            // r_i = 1 except the last factor
            let last = n - (t - 1);
            let tails = operad::j_points(last, &samples, Exec::Parallel).map_err(err)?;
            let point = Tree::corolla(VertexKind::TypeIII, 1);
            for tau in taus.iter().step_by(5) {
                for tail in tails.iter().step_by(7) {
                    let mut rhos = vec![point.clone(); t - 1];
                    rhos.push(tail.clone());
                    let g = operad::graft_kj(tau, &rhos).map_err(err)?;
                    ensure(tester.is_level(&g), format!("δ output {g} not level"))?;
                    count += 1;
                }
            }
        }
    }
    let bad: Tree = "p(b(*)@1 b(*)@1/2)".parse().map_err(err)?;
    ensure(
        !operad::is_level_tree(&bad),
        "counterexample reported level",
    )?;
    ensure(
        tester.max_depth() <= 2 * 6,
        format!("recursion depth {}", tester.max_depth()),
    )?;
    Ok(format!("{count} grafted level-trees"))
}

fn c12_determinism() -> Check {
    for args in CLI_COMMANDS {
        let a = cli(args)?;
        let b = cli(args)?;
        ensure(a == b, format!("{args:?} differs between runs"))?;
    }
    Ok(format!("{} commands", CLI_COMMANDS.len()))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("1 epsilon table", c1_epsilon_table),
        ("2 oracle equivalence", c2_oracle),
        ("3 triviality divisor", c3_divisor),
        ("4 epsilon congruences", c4_congruences),
        ("5 decision table", c5_decisions),
        ("6 type-count bounds", c6_counting),
        ("7 small polytopes", c7_small_polytopes),
        ("8 K_5 cell structure", c8_k5),
        ("9 sphere certification", c9_spheres),
        ("10 grafting relations", c10_relations),
        ("11 level-tree properties", c11_level_trees),
        ("12 CLI determinism", c12_determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(note) => println!("PASS {name} ({note})"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
