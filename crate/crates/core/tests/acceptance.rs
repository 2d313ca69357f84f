//! Acceptance criteria. Run with `cargo test -p frameforge-core --test acceptance`.
//!
//! Prints one PASS/FAIL line per criterion, followed by the failing checks,
//! and exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use frameforge::cep::{cep, CepMethod};
use frameforge::clone::{additive_equivalence, additive_members, hs_two_element_check, unary_clone};
use frameforge::congruence::{congruence_generators, is_simple, minimal_nontrivial_congruences};
use frameforge::corpus::{
    hs_sh_factor_pairs, implication_corpus, implication_suite, oracle_corpus, oracle_suite, small_frame_pairs,
};
use frameforge::terms::{check_in, CheckMode, Interpretation};
use frameforge::{
    additive_extension, all_subalgebras, builtin_frame, builtin_property, check_quasi_identity, fraser_horn_check,
    hs_classes, hs_equals_sh, parse_quasi_identity, parse_term, product, AdditiveEquivalence, BooleanFrame,
    Element, Limits, Property, Result,
};

const SEED: u64 = 0;
const CLONE_CAP: usize = 1 << 20;

type Checks = Vec<(String, bool)>;

struct Outcome {
    checks: Checks,
    notes: Vec<String>,
}

fn check(checks: &mut Checks, name: impl Into<String>, ok: bool) {
    checks.push((name.into(), ok));
}

fn within(checks: &mut Checks, name: &str, start: Instant, bound: Duration) {
    let elapsed = start.elapsed();
    check(checks, format!("{name} in {elapsed:.2?} (bound {bound:?})"), elapsed < bound);
}

fn frame(spec: &str) -> BooleanFrame {
    builtin_frame(spec).expect("builtin frame")
}

fn holds(frame: &BooleanFrame, p: Property, limits: &Limits) -> Result<bool> {
    Ok(builtin_property(frame, p, limits)?.holds)
}

fn cep_all(frame: &BooleanFrame, limits: &Limits) -> Result<Vec<frameforge::CepVerdict>> {
    CepMethod::ALL.iter().map(|&m| cep(frame, m, limits)).collect()
}

fn example1(limits: &Limits) -> Result<Outcome> {
    let start = Instant::now();
    let a = frame("example1");
    let mut c = Checks::new();

    let additive = builtin_property(&a, Property::Additive, limits)?;
    check(
        &mut c,
        "additivity fails at x={1}, y={3}",
        !additive.holds && additive.counterexample == Some(vec![("x".into(), 1), ("y".into(), 4)]),
    );
    let star = builtin_property(&a, Property::Star, limits)?;
    check(
        &mut c,
        format!("(*) holds (counterexample: {:?})", star.counterexample),
        star.holds,
    );
    for v in cep_all(&a, limits)? {
        check(&mut c, format!("{} holds", v.method.name()), v.holds);
    }

    let clo = unary_clone(&a, CLONE_CAP);
    check(&mut c, "unary clone complete with 16 members", clo.complete() && clo.len() == 16);
    let tables: Vec<Vec<Element>> = additive_members(&clo).into_iter().map(|m| m.table).collect();
    check(
        &mut c,
        "additive members are 0, 1, x",
        tables == vec![vec![0; 8], vec![7; 8], (0..8).collect::<Vec<_>>()],
    );
    check(
        &mut c,
        "additive_equivalence is not_equivalent",
        additive_equivalence(&a, CLONE_CAP)? == AdditiveEquivalence::NotEquivalent,
    );

    let g = additive_extension(3, &[2, 0, 1])?;
    let interp = Interpretation::with_companion(&a, &g)?;
    let q = parse_quasi_identity("f(x) = x | (g(x) & g(g(x)))")?;
    let v = check_in(interp, &q, limits, CheckMode::Exhaustive)?;
    check(&mut c, "f(x) = x | (g(x) & g(g(x))) at all 8 points", v.holds);
    let con_f = congruence_generators(&a);
    check(
        &mut c,
        "Con(A, g) within Con(A, f)",
        congruence_generators(&g).iter().all(|x| con_f.contains(x)),
    );
    within(&mut c, "example1 suite", start, Duration::from_secs(1));
    Ok(Outcome { checks: c, notes: vec![] })
}

fn example_sh(limits: &Limits) -> Result<Outcome> {
    let start = Instant::now();
    let a = frame("example-sh");
    let mut c = Checks::new();
    check(&mut c, "simple", is_simple(&a)?);
    check(&mut c, "exactly 5 subalgebras", all_subalgebras(&a, limits)?.len() == 5);
    let v = hs_equals_sh(&a, limits)?;
    check(&mut c, "HS = SH with 6 classes", v.holds && v.hs.len() == 6);
    for v in cep_all(&a, limits)? {
        let ok = match &v.witness {
            Some(w) => !v.holds && w.subalgebra == vec![0, 3, 4, 7] && w.generator == 3 && w.reverify(&a)?,
            None => false,
        };
        check(&mut c, format!("{} fails at ({{0,3,4,7}}, 3)", v.method.name()), ok);
    }
    within(&mut c, "example-sh suite", start, Duration::from_secs(1));
    Ok(Outcome { checks: c, notes: vec![] })
}

fn cycles(limits: &Limits) -> Result<Outcome> {
    let mut c = Checks::new();
    let mut notes = Vec::new();
    let s_is_y = parse_quasi_identity("(x & -f(0)) | (y & f(0)) = y")?;
    for n in [3, 4] {
        let start = Instant::now();
        let a = frame(&format!("cycle:{n}"));
        let subs = all_subalgebras(&a, limits)?;
        check(&mut c, format!("cycle:{n} has no proper subalgebras"), subs.len() == 1);
        check(&mut c, format!("cycle:{n} simple"), is_simple(&a)?);
        let hs = hs_classes(&a, limits)?;
        check(
            &mut c,
            format!("cycle:{n} HS = {{1, A}}"),
            hs.len() == 2 && hs.contains(&BooleanFrame::trivial(), limits)? && hs.contains(&a, limits)?,
        );
        check(
            &mut c,
            format!("cycle:{n} has no 2-element frame in HS"),
            hs_two_element_check(&a, limits)?.is_empty(),
        );
        for v in cep_all(&a, limits)? {
            check(&mut c, format!("cycle:{n} {} holds", v.method.name()), v.holds);
        }
        check(
            &mut c,
            format!("cycle:{n} s(x,y) = y"),
            check_quasi_identity(&a, &s_is_y, limits)?.holds,
        );
        within(&mut c, &format!("cycle:{n} suite"), start, Duration::from_secs(5));
    }

    let s_is_x = parse_quasi_identity("(x & -f(0)) | (y & f(0)) = x")?;
    let mut normal = 0;
    let mut all_x = true;
    for f in oracle_corpus(SEED, limits)?.iter().filter(|f| f.f(0) == 0) {
        normal += 1;
        all_x &= check_quasi_identity(f, &s_is_x, limits)?.holds;
    }
    check(&mut c, format!("s(x,y) = x on {normal} normal corpus frames"), all_x && normal > 0);

    let two = frame("cycle:2");
    let gens = congruence_generators(&two);
    check(&mut c, "cycle:2 congruence generators are 0, 2, 3", gens == vec![0, 2, 3]);
    notes.push(format!(
        "open question: cycle:2 is not simple (generators {gens:?}; nontrivial generator 2)"
    ));
    Ok(Outcome { checks: c, notes })
}

fn wheel(limits: &Limits) -> Result<Outcome> {
    let start = Instant::now();
    let a = frame("wheel:5");
    let mut c = Checks::new();
    check(&mut c, "64 elements", a.size() == 64);
    for p in [Property::Additive, Property::Normal, Property::Monotone, Property::Star] {
        check(&mut c, format!("{p} holds"), holds(&a, p, limits)?);
    }
    check(&mut c, "cep_direct holds", cep(&a, CepMethod::Direct, limits)?.holds);
    let minimal = minimal_nontrivial_congruences(&a);
    check(
        &mut c,
        format!("unique minimal nontrivial congruence ({minimal:?})"),
        minimal.len() == 1,
    );
    within(&mut c, "wheel:5 suite", start, Duration::from_secs(60));
    Ok(Outcome { checks: c, notes: vec![] })
}

fn suite_checks(c: &mut Checks, report: &frameforge::corpus::SuiteReport) {
    for (name, tally) in &report.checks {
        check(c, format!("{name}: {} passed, {} failed", tally.passed, tally.failed), tally.failed == 0);
    }
}

fn oracles(limits: &Limits) -> Result<Outcome> {
    let frames = oracle_corpus(SEED, limits)?;
    let mut c = Checks::new();
    check(&mut c, "corpus is 256 + 200 frames", frames.len() == 456);
    let report = oracle_suite(&frames, limits)?;
    suite_checks(&mut c, &report);
    let notes = report
        .failures
        .iter()
        .take(5)
        .map(|f| format!("{}: {:?} {}", f.check, f.frame, f.detail))
        .collect();
    Ok(Outcome { checks: c, notes })
}

fn implications(limits: &Limits) -> Result<Outcome> {
    let frames = implication_corpus(SEED, limits)?;
    let mut c = Checks::new();
    let report = implication_suite(&frames, limits)?;
    let star_frames = report.frames.saturating_sub(556);
    check(
        &mut c,
        format!("{} frames ({star_frames} star-constrained)", report.frames),
        report.frames >= 556 && star_frames <= 100,
    );
    suite_checks(&mut c, &report);
    let sh = frame("example-sh");
    check(
        &mut c,
        "example-sh has HS = SH without CEP",
        hs_equals_sh(&sh, limits)?.holds && !cep(&sh, CepMethod::Direct, limits)?.holds,
    );
    let notes = report
        .failures
        .iter()
        .take(5)
        .map(|f| format!("{}: {:?} {}", f.check, f.frame, f.detail))
        .collect();
    Ok(Outcome { checks: c, notes })
}

fn products(limits: &Limits) -> Result<Outcome> {
    let mut c = Checks::new();
    let mut fh_ok = 0;
    for (a, b) in small_frame_pairs(SEED, 50, limits)? {
        fh_ok += fraser_horn_check(&a, &b, limits)?.holds as usize;
    }
    check(&mut c, format!("Fraser-Horn on {fh_ok}/50 pairs"), fh_ok == 50);

    let pairs = hs_sh_factor_pairs(SEED.wrapping_add(1), 25, 10_000, limits)?;
    let mut preserved = 0;
    for (a, b) in &pairs {
        preserved += hs_equals_sh(&product(a, b)?, limits)?.holds as usize;
    }
    check(
        &mut c,
        format!("HS = SH preserved by products on {preserved}/{} pairs", pairs.len()),
        pairs.len() == 25 && preserved == 25,
    );
    Ok(Outcome { checks: c, notes: vec![] })
}

fn parser(_: &Limits) -> Result<Outcome> {
    let mut c = Checks::new();
    let quasi = [
        "x ^ y <= z => f(x) ^ f(y) <= f(z)",
        "f(x | y) = f(x) | f(y)",
        "x <= y => f(x) <= f(y)",
        "f(0) = 0",
        "x <= f(x)",
        "(x & -f(0)) | (y & f(0)) = x",
        "x = y && y = z => x = z",
        "f(x) = x | (g(x) & g(g(x)))",
        "x -> y -> z = x -> (y -> z)",
        "(x -> y) -> z <= 1",
        "- -x = x  # double complement",
        "-(x & y) = -x | -y",
        "f(-f(-x)) ^ x <= 1",
    ];
    let mut ok = 0;
    for text in quasi {
        let q = parse_quasi_identity(text)?;
        let printed = q.to_string();
        let again = parse_quasi_identity(&printed)?;
        ok += (again == q && again.to_string() == printed) as usize;
    }
    let terms = [
        "(x & -f(0)) | (y & f(0))",
        "(x & f(1)) | (y & -f(1))",
        "x ^ y ^ z",
        "x | y & z",
        "(x | y) & z",
        "-x & f(x)",
        "x & f(-x)",
        "-f(x)",
        "-f(-x)",
    ];
    for text in terms {
        let t = parse_term(text)?;
        let printed = t.to_string();
        ok += (parse_term(&printed)? == t) as usize;
    }
    let total = quasi.len() + terms.len();
    check(&mut c, format!("round-trip {ok}/{total}"), ok == total);

    let errors: [(&str, Option<(usize, usize)>); 8] = [
        ("x <= => y", Some((1, 6))),
        ("x = y &&\n  z <=", Some((2, 7))),
        ("f(x", None),
        ("x & & y = 0", None),
        ("x = y =>", None),
        ("f = x", None),
        ("x $ y = 0", None),
        ("", None),
    ];
    let mut positioned = 0;
    for (text, at) in errors {
        if let Err(e) = parse_quasi_identity(text) {
            let has_position = e.line >= 1 && e.column >= 1 && e.to_string().contains("column");
            let at_ok = at.map_or(true, |p| p == (e.line, e.column));
            positioned += (has_position && at_ok) as usize;
        }
    }
    check(
        &mut c,
        format!("positioned diagnostics {positioned}/{}", errors.len()),
        positioned == errors.len(),
    );
    Ok(Outcome { checks: c, notes: vec![] })
}

type Criterion = (&'static str, fn(&Limits) -> Result<Outcome>);

fn main() -> ExitCode {
    let limits = Limits::default();
    let criteria: [Criterion; 8] = [
        ("example1 suite", example1),
        ("example-sh suite", example_sh),
        ("cycle suite", cycles),
        ("wheel suite", wheel),
        ("oracle equivalences", oracles),
        ("implication suite", implications),
        ("product suite", products),
        ("parser", parser),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run(&limits);
        let elapsed = start.elapsed();
        let (pass, detail) = match &outcome {
            Ok(o) => (o.checks.iter().all(|(_, ok)| *ok), None),
            Err(e) => (false, Some(e.to_string())),
        };
        println!(
            "criterion {}: {} {title} ({elapsed:.2?})",
            i + 1,
            if pass { "PASS" } else { "FAIL" }
        );
        if let Some(e) = detail {
            println!("    error: {e}");
        }
        if let Ok(o) = &outcome {
            for (name, ok) in &o.checks {
                if !ok {
                    println!("    failed: {name}");
                }
            }
            for note in &o.notes {
                println!("    note: {note}");
            }
        }
        failed += !pass as usize;
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
