//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use qdirac::dirac::{operator_t, operator_t_tilde, Family, Ratio};
use qdirac::Scalar;
use qdirac_cli::{emit_report, run_checks, CProfile, CValue, CheckConfig, Format, Report, Status};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn config(rank: usize, checks: &[&str]) -> CheckConfig {
    CheckConfig {
        checks: checks.iter().map(|s| s.to_string()).collect(),
        ..CheckConfig::for_rank(rank)
    }
}

fn symbolic(mut c: CheckConfig) -> CheckConfig {
    c.c0 = CValue::Symbolic;
    c.c1 = CValue::Symbolic;
    c
}

fn run(c: &CheckConfig) -> Result<Report, String> {
    run_checks(c).map_err(|e| e.to_string())
}

/// Every selected record passes, and each prefix matched at least once.
fn all_pass(report: &Report, prefixes: &[&str]) -> Result<usize, String> {
    for p in prefixes {
        if !report.checks.iter().any(|r| r.check_id.starts_with(p)) {
            return Err(format!("no check matched {p}"));
        }
    }
    for r in &report.checks {
        if r.status != Status::Pass {
            return Err(format!("{} is {:?}: {}", r.check_id, r.status, r.witness.clone().unwrap_or_default()));
        }
    }
    Ok(report.checks.len())
}

fn over_ranks(ranks: &[usize], prefixes: &[&str], tweak: impl Fn(CheckConfig) -> CheckConfig) -> Verdict {
    let mut total = 0;
    for &n in ranks {
        let report = run(&tweak(config(n, prefixes)))?;
        total += all_pass(&report, prefixes).map_err(|e| format!("N={n}: {e}"))?;
    }
    Ok(format!("{total} checks, N in {ranks:?}"))
}

fn braiding() -> Verdict {
    over_ranks(
        &[2, 3, 4],
        &["qext.braid_equation", "qext.eigenvectors", "qext.relation_quotients"],
        |c| c,
    )
}

fn pairing() -> Verdict {
    over_ranks(&[2, 3, 4], &["qext.raw_pairing", "qext.antisymmetrizer"], |c| c)
}

fn clifford() -> Verdict {
    over_ranks(
        &[2, 3, 4],
        &["qcliff.ei_ij_offdiagonal", "qcliff.quadratic_constant", "qcliff.classical_car"],
        |c| c,
    )
}

fn engine() -> Verdict {
    let relations = over_ranks(&[2, 3, 4], &["uqalg.defining_relations"], |c| c)?;
    for n in [2, 3] {
        let report = run(&config(n, &["uqalg"]))?;
        all_pass(&report, &["uqalg.hopf_axioms", "uqalg.pbw_counts"]).map_err(|e| format!("N={n}: {e}"))?;
        let ids: Vec<&str> = report.checks.iter().map(|r| r.check_id.as_str()).collect();
        let want = [format!("uqalg.hopf_axioms[N={n},deg<=3]"), format!("uqalg.pbw_counts[N={n},height<=6]")];
        if let Some(w) = want.iter().find(|w| !ids.contains(&w.as_str())) {
            return Err(format!("missing {w}"));
        }
    }
    Ok(format!("relations {relations}; Hopf degree 3 and PBW height 6 for N in [2, 3]"))
}

fn root_vectors() -> Verdict {
    over_ranks(&[2, 3], &["rootvec"], |c| c)
}

fn nilpotency() -> Verdict {
    let base = over_ranks(&[2, 3], &["dirac.eth_squared", "dirac.eth_star_squared"], |c| c)?;
    let extended = over_ranks(&[4], &["dirac.eth_squared"], |mut c| {
        c.extended = true;
        c
    })?;
    Ok(format!("{base}; extended {extended}"))
}

fn main_theorem() -> Verdict {
    let ids = ["dirac.offdiagonal_levi", "dirac.main_theorem", "dirac.t_operator"];
    let sym = over_ranks(&[2, 3], &ids, symbolic)?;
    let sampled = over_ranks(&[2, 3], &["dirac.main_theorem_concrete"], |mut c| {
        c.c0 = CValue::Value(Scalar::from_int(3));
        c.c1 = CValue::Value(Scalar::from_int(5));
        c
    })?;
    // c_0 = c_1: both closed forms coincide and T~ = 1.
    let equal = over_ranks(&[2, 3], &ids, |mut c| {
        c.c_profile = CProfile::Printed;
        c
    })?;
    for k in 0..=4 {
        let one = Ratio::Value(Scalar::one());
        if operator_t_tilde(k, &one, Family::Printed) != (Scalar::one(), 0) {
            return Err(format!("T~({k}) != 1 at c0 = c1"));
        }
    }

    // Branch values of T for the printed closed form.
    let s = Ratio::Symbolic;
    let branches = [
        (operator_t(0, &s, Family::Printed), (Scalar::one(), 1)),
        (operator_t(2, &s, Family::Printed), (Scalar::q_pow(-4), 1)),
        (operator_t(3, &s, Family::Printed), (Scalar::q_pow(-6), 0)),
        (operator_t_tilde(1, &s, Family::Printed), (Scalar::one(), 1)),
        (operator_t_tilde(3, &s, Family::Printed), (Scalar::one(), 0)),
    ];
    if branches.iter().any(|(got, want)| got != want) {
        return Err("T branch values differ from the closed-form display".into());
    }

    // The printed closed form agrees with the recursive one at N = 2 and
    // breaks the ratio condition at N = 3 for generic c_1/c_0.
    over_ranks(&[2], &ids, |mut c| {
        c.c_profile = CProfile::Printed;
        symbolic(c)
    })?;
    let mut printed = symbolic(config(3, &["dirac.main_theorem"]));
    printed.c_profile = CProfile::Printed;
    let r = run(&printed)?;
    let rec = r.record("dirac.main_theorem[N=3]").ok_or("missing printed-form record")?;
    if rec.status != Status::Fail {
        return Err("printed closed form unexpectedly passes at N=3".into());
    }

    let mut neg = config(2, &["dirac.negative_control", "dirac.offdiagonal_levi", "dirac.main_theorem"]);
    neg.c_profile = CProfile::AllOnes;
    let r = run(&neg)?;
    all_pass(&r, &["dirac.negative_control", "dirac.offdiagonal_levi", "dirac.main_theorem"])?;
    let witness = r
        .record("dirac.main_theorem[N=2]")
        .and_then(|x| x.witness.clone())
        .ok_or("negative control produced no witness")?;
    Ok(format!(
        "c_k = c_0 s^k q^(-k(k-1)) with symbolic s {sym}; sampled s {sampled}; c0 = c1 {equal}; c_k = (c_1^2/c_0) q^(-k(k-1)) holds at N=2 and fails at N=3 for generic s (ratio condition broken at k=3); c_k = 1 witness {witness}"
    ))
}

fn casimir() -> Verdict {
    over_ranks(
        &[2, 3],
        &[
            "dirac.casimir_commutes",
            "dirac.casimir_tilde_invariant",
            "dirac.antipode_constant",
            "dirac.appendix_subidentities",
        ],
        |c| c,
    )
}

fn determinism() -> Verdict {
    let c = CheckConfig::default();
    let a = emit_report(&run(&c)?, Format::Json);
    let b = emit_report(&run(&c)?, Format::Json);
    if a != b {
        return Err("in-process reports differ".into());
    }
    let bin = env!("CARGO_BIN_EXE_qdirac");
    let outputs: Vec<Vec<u8>> = (0..2)
        .map(|_| {
            Command::new(bin)
                .args(["--format", "json"])
                .output()
                .map_err(|e| e.to_string())
                .and_then(|o| {
                    if o.status.success() {
                        Ok(o.stdout)
                    } else {
                        Err(format!("qdirac exited with {}", o.status))
                    }
                })
        })
        .collect::<Result<_, _>>()?;
    if outputs[0] != outputs[1] {
        return Err("two CLI runs differ".into());
    }
    if outputs[0] != a {
        return Err("CLI report differs from the in-process report".into());
    }
    Ok(format!("{} identical bytes across runs", a.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("braiding", braiding),
        ("pairing value", pairing),
        ("Clifford relations", clifford),
        ("Hopf/PBW engine", engine),
        ("root vectors", root_vectors),
        ("nilpotency", nilpotency),
        ("main theorem", main_theorem),
        ("Casimir", casimir),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let verdict = f();
        let secs = t.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("criterion {} ({name}): PASS [{secs:.1}s] {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL [{secs:.1}s] {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
