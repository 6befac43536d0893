//! End-to-end acceptance run: one pass/fail line per criterion.

use std::sync::Arc;
use std::time::Instant;

use arx_core::artheory::{linear_catalog, tau, trtr_check};
use arx_core::backends::build_category;
use arx_core::lincat::GrowthVerdict;
use arx_core::modrep::{find_iso, minimal_presentation, Module, DEFAULT_BUDGET};
use arx_core::suites::{run_suite, sequence_pool, SuiteReport};
use arx_core::{FieldSpec, Matrix, QCat, Rational};

const MARGIN: usize = 3;

fn cat(spec: &str) -> Arc<QCat> {
    Arc::new(build_category::<Rational>(spec, FieldSpec::Rational).unwrap())
}

fn suite(name: &str, spec: &str) -> SuiteReport {
    run_suite(name, &cat(spec), MARGIN).unwrap()
}

fn failures(r: &SuiteReport, check: &str) -> Vec<String> {
    r.records
        .iter()
        .filter(|x| x.check == check && !x.pass)
        .map(|x| format!("{} {:?} lhs={} rhs={} {:?}", x.check, x.inputs, x.lhs, x.rhs, x.skip_reason))
        .collect()
}

fn count(r: &SuiteReport, check: &str) -> usize {
    r.records.iter().filter(|x| x.check == check && x.skip_reason.is_none()).count()
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(problems: Vec<String>, detail: String) -> Outcome {
    if problems.is_empty() {
        Outcome { ok: true, detail }
    } else {
        Outcome { ok: false, detail: format!("{detail}; {}", problems.join(" | ")) }
    }
}

fn c1() -> Outcome {
    let mut problems = Vec::new();
    let mut n = 0;
    for spec in ["linear:8", "star_ray:6", "fi:4", "vi:2:2"] {
        let r = suite("yoneda", spec);
        n += r.records.len();
        problems.extend(failures(&r, "yoneda_proj"));
        problems.extend(failures(&r, "yoneda_inj"));
    }
    outcome(problems, format!("{n} Hom dimensions"))
}

fn c2_c3() -> (Outcome, Outcome) {
    let r = suite("arformula", "linear:8");
    let n1 = count(&r, "ar_formula_1");
    let n2 = count(&r, "ar_formula_2");
    let mut p1 = failures(&r, "ar_formula_1");
    let p2 = failures(&r, "ar_formula_2");
    if n1 != 45 * 45 {
        p1.push(format!("expected 2025 pairs, got {n1}"));
    }
    let mut p2 = p2;
    // fd N: X_ij with j <= 5, 21 of them
    if n2 != 45 * 21 {
        p2.push(format!("expected 945 pairs, got {n2}"));
    }
    (outcome(p1, format!("{n1} pairs")), outcome(p2, format!("{n2} pairs with fd second argument")))
}

fn c4() -> Outcome {
    let r = suite("tautau", "linear:8");
    let mut problems = failures(&r, "tau_interval");
    problems.extend(failures(&r, "tau_minus_tau"));
    problems.extend(failures(&r, "tau_tau_minus"));
    problems.extend(failures(&r, "tautau"));
    let shifts = count(&r, "tau_interval");
    if shifts != 21 {
        problems.push(format!("expected 21 interval shifts, got {shifts}"));
    }
    outcome(
        problems,
        format!(
            "{shifts} shifts, {} tau_minus_tau, {} tau_tau_minus",
            count(&r, "tau_minus_tau"),
            count(&r, "tau_tau_minus")
        ),
    )
}

fn c5() -> Outcome {
    let r = suite("almostsplit", "linear:8");
    let mut problems = Vec::new();
    for check in ["ass_exact", "ass_non_split", "ass_left_term", "ass_right_almost_split", "ass"] {
        problems.extend(failures(&r, check));
    }
    let n = count(&r, "ass_non_split");
    // non-projective X_ij with j <= 5
    if n != 21 {
        problems.push(format!("expected 21 sequences, got {n}"));
    }
    outcome(problems, format!("{n} sequences against 45 test modules"))
}

fn c6() -> Outcome {
    let r = suite("trtr", "linear:8");
    let mut problems = failures(&r, "trtr");
    let n = count(&r, "trtr");
    if n != 21 {
        problems.push(format!("expected 21 modules, got {n}"));
    }
    let fi = cat("fi:4");
    let s0 = Arc::new(Module::simple(&fi, 0).unwrap());
    let rec = trtr_check("S:0", &s0).unwrap();
    if !rec.pass {
        problems.push("Tr Tr S_0 over fi:4".into());
    }
    outcome(problems, format!("{n} on linear:8 plus S_0 on fi:4"))
}

fn c7() -> Outcome {
    let mut problems = Vec::new();
    let lin = cat("linear:8");
    for a in 0..=8 {
        let g = lin.hom_growth(a, MARGIN).unwrap();
        if g.verdict != GrowthVerdict::Bounded(1) {
            problems.push(format!("linear:8 object {a}: {:?}", g.verdict));
        }
    }
    let star = cat("star_ray:8");
    let dims: Vec<usize> = (1..=8).map(|j| star.hom_dim(0, j)).collect();
    if dims != (1..=8).collect::<Vec<_>>() {
        problems.push(format!("star_ray:8 dim C(0,j) = {dims:?}"));
    }
    if star.hom_growth(0, MARGIN).unwrap().verdict != GrowthVerdict::GrowingAtHorizon {
        problems.push("star_ray:8 growth verdict".into());
    }
    outcome(problems, format!("star_ray:8 dim C(0,j) = {dims:?}"))
}

fn c8() -> Outcome {
    let lin = suite("classify", "linear:8");
    let fi = suite("classify", "fi:4");
    let mut problems = Vec::new();
    for r in [&lin, &fi] {
        problems.extend(failures(r, "r_member"));
        problems.extend(failures(r, "l_member"));
        problems.extend(failures(r, "ext_into_injective"));
        problems.extend(failures(r, "classify"));
    }
    let yes: Vec<&str> = lin
        .records
        .iter()
        .filter(|x| x.check == "l_member" && x.lhs == 1)
        .map(|x| x.inputs[0].as_str())
        .collect();
    if yes.len() != 22 {
        problems.push(format!("expected 22 members on linear:8, got {}", yes.len()));
    }
    let ext_checks = count(&fi, "ext_into_injective");
    if ext_checks == 0 {
        problems.push("no Ext audits into projectives on fi:4".into());
    }
    outcome(
        problems,
        format!("{} members of the left part on linear:8; {ext_checks} Ext checks on fi:4", yes.len()),
    )
}

fn c9() -> Outcome {
    let fi = cat("fi:4");
    let s0 = Arc::new(Module::simple(&fi, 0).unwrap());
    let s1 = Arc::new(Module::simple(&fi, 1).unwrap());
    let pres = minimal_presentation(&s0).unwrap();
    let mut problems = Vec::new();
    let p0: Vec<usize> = pres.p0().summands().iter().map(|s| s.obj).collect();
    let p1: Vec<usize> = pres.p1().summands().iter().map(|s| s.obj).collect();
    if p0 != [0] || p1 != [1] {
        problems.push(format!("summands P0 {p0:?} P1 {p1:?}"));
    }
    // by hand: P_0(n) = k, P_1(n) = k^n, f1 onto P_0(n) for n >= 1
    if pres.p0().module().dims() != [1, 1, 1, 1, 1] || pres.p1().module().dims() != [0, 1, 2, 3, 4] {
        problems.push("presentation dims".into());
    }
    let ranks: Vec<usize> = pres.f1.comps().iter().map(Matrix::rank).collect();
    if ranks != [0, 1, 1, 1, 1] {
        problems.push(format!("f1 ranks {ranks:?}"));
    }
    let t = tau(&s0, MARGIN).unwrap();
    if t.module.dims() != [0, 1, 0, 0, 0] || !find_iso(&t.module, &s1, DEFAULT_BUDGET).unwrap().is_iso() {
        problems.push(format!("tau S_0 dims {:?}", t.module.dims()));
    }
    outcome(problems, "P_1 -> P_0 -> S_0, tau S_0 = S_1".into())
}

fn c10() -> Outcome {
    let mut problems = Vec::new();
    let mut n = 0;
    for spec in ["linear:8", "star_ray:6"] {
        let r = suite("hereditary", spec);
        n += r.records.len();
        problems.extend(failures(&r, "second_syzygy_dim"));
    }
    outcome(problems, format!("{n} modules"))
}

fn c11() -> Outcome {
    let lin = cat("linear:8");
    let r = run_suite("defect", &lin, MARGIN).unwrap();
    let mut problems = failures(&r, "defect");
    let pool = sequence_pool(&linear_catalog(&lin).unwrap(), 24).unwrap();
    if pool.len() < 20 {
        problems.push(format!("pool has only {} sequences", pool.len()));
    }
    // an independent sanity check on the pool: every sequence is exact and non-split
    for (l, s) in &pool {
        if !s.is_exact() || s.is_split().unwrap() {
            problems.push(format!("pool sequence {l}"));
        }
    }
    outcome(problems, format!("{} sequences, {} instances", pool.len(), r.records.len()))
}

fn line(n: &str, o: &Outcome, secs: f64) -> bool {
    println!("criterion {n}: {} ({secs:.2}s) {}", if o.ok { "PASS" } else { "FAIL" }, o.detail);
    o.ok
}

fn timed(n: &str, f: fn() -> Outcome) -> bool {
    let t = Instant::now();
    let o = f();
    line(n, &o, t.elapsed().as_secs_f64())
}

#[test]
fn acceptance() {
    let mut all = timed("1", c1);
    let t = Instant::now();
    let (o2, o3) = c2_c3();
    let secs = t.elapsed().as_secs_f64();
    all &= line("2", &o2, secs);
    all &= line("3", &o3, secs);
    for (n, f) in [("4", c4 as fn() -> Outcome), ("5", c5), ("6", c6), ("7", c7), ("8", c8), ("9", c9), ("10", c10), ("11", c11)] {
        all &= timed(n, f);
    }
    assert!(all, "some acceptance criteria failed");
}
