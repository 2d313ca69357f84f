//! The `frameforge` command line.
//!
//! Exit codes: 0 holds / ran, 1 fails, 2 usage or input error, 3 budget
//! exceeded or inconclusive.

pub mod claims;
pub mod report;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use frameforge::cep::{cep, CepMethod};
use frameforge::clone::{
    additive_equivalence, additive_members, discriminator_term, find_switching_term, hs_two_element_check,
    unary_clone, verify_discriminator, AdditiveEquivalence, SwitchingSearch,
};
use frameforge::congruence::{
    congruence_generators, is_simple, minimal_nontrivial_congruences, principal_closure_trace, quotient,
};
use frameforge::corpus::{implication_corpus, implication_suite, oracle_corpus, oracle_suite, SuiteReport};
use frameforge::frame::product_with_max_atoms;
use frameforge::io::{frame_from_json, frame_to_json, FrameJson};
use frameforge::kripke::complex_algebra_with_max_atoms;
use frameforge::terms::{check_in, CheckMode, Interpretation, Verdict};
use frameforge::{
    all_subalgebras, builtin_frame_with_max_atoms, canonical_form, fraser_horn_check, hs_equals_sh, is_isomorphic,
    parse_quasi_identity, random_frame, relative_frame, BooleanFrame, Constraint, Error, IsoClassSet, KripkeFrame,
    Limits, Modality, Property, QuasiIdentity,
};

use report::{Check, FrameDescriptor, Report, Status};

#[derive(Debug, Parser)]
#[command(name = "frameforge", version, about = "Finite Boolean frames workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    frame: FrameArgs,
    #[command(flatten)]
    output: OutputArgs,
    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Debug, Args)]
struct FrameArgs {
    /// Builtin frame: example1, example-sh, cycle:N, wheel:N, two:id|zero|one|swap.
    #[arg(long, global = true, conflicts_with = "input")]
    builtin: Option<String>,
    /// Frame or Kripke JSON file.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Second frame (companion for `check`, factor for `product`, target for `iso`).
    #[arg(long, global = true, conflicts_with = "with_input")]
    with_builtin: Option<String>,
    #[arg(long, global = true)]
    with_input: Option<PathBuf>,
    /// Modality for wheel builtins and Kripke inputs.
    #[arg(long, global = true, value_enum)]
    modality: Option<ModalityArg>,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Emit `elapsed_ms: null` so reports are byte-identical across runs.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Debug, Args)]
struct LimitArgs {
    #[arg(long, global = true)]
    max_atoms: Option<u32>,
    #[arg(long, global = true)]
    clone_cap: Option<usize>,
    #[arg(long, global = true)]
    eval_budget: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModalityArg {
    Diamond,
    Box,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Direct,
    TwoGen,
    Pcep,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Oracle,
    Implication,
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check named properties or (quasi-)identities.
    Check {
        /// additive, monotone, normal, conormal, extensive or star; repeatable.
        #[arg(long)]
        property: Vec<String>,
        /// A quasi-identity such as "x <= y => f(x) <= f(y)"; repeatable.
        #[arg(long)]
        identity: Vec<String>,
        /// Fail with exit 3 instead of sampling when over budget.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Congruence generators.
    Con {
        /// Also compute the principal congruence of a pair.
        #[arg(long, num_args = 2, value_names = ["X", "Y"])]
        pair: Option<Vec<u32>>,
    },
    /// All subalgebras with their relative frames.
    Sub,
    /// The congruence extension property.
    Cep {
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
    },
    /// The unary term clone.
    Clone {
        #[arg(long)]
        cap: Option<usize>,
        /// List every member, not just the additive ones.
        #[arg(long)]
        members: bool,
    },
    /// Term-equivalence with an additive operation.
    AdditiveEquiv {
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Compare HS and SH up to isomorphism.
    HsSh,
    /// Search for a switching term and check the discriminator built from it.
    Switching {
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Product with the second frame, plus the Fraser-Horn check.
    Product {
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Quotient by a congruence generator.
    Quotient {
        #[arg(long = "gen", value_name = "A")]
        generator: u32,
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Isomorphism test against the second frame.
    Iso,
    /// Seeded random frames.
    Random {
        #[arg(long)]
        atoms: u32,
        #[arg(long, env = "FRAMEFORGE_SEED", default_value_t = 0)]
        seed: u64,
        /// none, normal, additive or star.
        #[arg(long, default_value = "none")]
        constraint: String,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Run every recorded claim about the example frames and corpora.
    VerifyPaper {
        /// Same as `--format json`.
        #[arg(long)]
        json: bool,
        /// Replace a builtin frame by a file, e.g. `example-sh=bad.json`.
        #[arg(long, value_name = "NAME=PATH")]
        substitute: Vec<String>,
    },
    /// Property suites over the seeded corpus.
    Corpus {
        #[arg(long, env = "FRAMEFORGE_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } | Error::TooLarge { .. } | Error::RetryExhausted { .. } => 3,
            _ => 2,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let start = Instant::now();
    let result = execute(&cli).and_then(|mut report| {
        if !cli.output.no_timing {
            report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        }
        emit(&cli, &report)?;
        Ok(report.exit_code())
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

fn emit(cli: &Cli, report: &Report) -> CliResult<()> {
    let json = cli.output.format == Format::Json || matches!(cli.command, Command::VerifyPaper { json: true, .. });
    let text = if json { report.to_json() } else { report.to_text() };
    match &cli.output.out {
        Some(path) => write_file(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))
}

fn limits(args: &LimitArgs) -> Limits {
    let mut l = Limits::default();
    if let Some(v) = args.max_atoms {
        l.max_atoms = v;
    }
    if let Some(v) = args.clone_cap {
        l.clone_cap = v;
    }
    if let Some(v) = args.eval_budget {
        l.eval_budget = v;
    }
    l
}

fn modality(arg: Option<ModalityArg>) -> Option<Modality> {
    arg.map(|m| match m {
        ModalityArg::Diamond => Modality::Diamond,
        ModalityArg::Box => Modality::Box,
    })
}

/// Loads a builtin or a JSON file; returns a source label and the frame.
fn load(
    builtin: Option<&str>,
    input: Option<&Path>,
    modality: Option<Modality>,
    limits: &Limits,
) -> CliResult<Option<(String, BooleanFrame)>> {
    if let Some(spec) = builtin {
        let boxed = modality == Some(Modality::Box);
        if let (true, Some(n)) = (boxed, spec.strip_prefix("wheel:")) {
            let n: u32 = n.parse().map_err(|_| Error::UnknownSpec(spec.to_string()))?;
            let frame = complex_algebra_with_max_atoms(&KripkeFrame::wheel(n)?, Modality::Box, limits.max_atoms)?
                .named(format!("{spec}:box"));
            return Ok(Some((format!("builtin:{spec}:box"), frame)));
        }
        let frame = builtin_frame_with_max_atoms(spec, limits.max_atoms)?;
        return Ok(Some((format!("builtin:{spec}"), frame)));
    }
    let Some(path) = input else {
        return Ok(None);
    };
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    let text = match modality {
        Some(m) => {
            let mut value: Value = serde_json::from_str(&text).map_err(|e| Error::Format(e.to_string()))?;
            if let Some(obj) = value.as_object_mut().filter(|o| o.contains_key("worlds")) {
                obj.insert("modality".into(), serde_json::to_value(m).expect("modality serializes"));
            }
            value.to_string()
        }
        None => text,
    };
    let frame = frame_from_json(&text, limits.max_atoms)?;
    Ok(Some((path.display().to_string(), frame)))
}

struct Context {
    limits: Limits,
    primary: Option<(String, BooleanFrame)>,
    secondary: Option<(String, BooleanFrame)>,
}

impl Context {
    fn frame(&self) -> CliResult<&BooleanFrame> {
        self.primary
            .as_ref()
            .map(|(_, f)| f)
            .ok_or_else(|| CliError::usage("this command needs --builtin or --input"))
    }

    fn second(&self) -> CliResult<&BooleanFrame> {
        self.secondary
            .as_ref()
            .map(|(_, f)| f)
            .ok_or_else(|| CliError::usage("this command needs --with-builtin or --with-input"))
    }

    fn report(&self, command: &str) -> Report {
        let mut r = Report::new(command);
        r.frame = self.primary.as_ref().map(|(s, f)| FrameDescriptor::new(s.clone(), f));
        r.param("max_atoms", self.limits.max_atoms);
        r.param("eval_budget", self.limits.eval_budget);
        r.param("clone_cap", self.limits.clone_cap);
        if let Some((source, f)) = &self.secondary {
            r.param("with", FrameDescriptor::new(source.clone(), f));
        }
        r
    }
}

fn execute(cli: &Cli) -> CliResult<Report> {
    let limits = limits(&cli.limits);
    let m = modality(cli.frame.modality);
    let ctx = Context {
        primary: load(cli.frame.builtin.as_deref(), cli.frame.input.as_deref(), m, &limits)?,
        secondary: load(
            cli.frame.with_builtin.as_deref(),
            cli.frame.with_input.as_deref(),
            m,
            &limits,
        )?,
        limits,
    };
    match &cli.command {
        Command::Check {
            property,
            identity,
            exhaustive,
        } => check_cmd(&ctx, property, identity, *exhaustive),
        Command::Con { pair } => con_cmd(&ctx, pair.as_deref()),
        Command::Sub => sub_cmd(&ctx),
        Command::Cep { method } => cep_cmd(&ctx, *method),
        Command::Clone { cap, members } => clone_cmd(&ctx, cap.unwrap_or(ctx.limits.clone_cap), *members),
        Command::AdditiveEquiv { cap } => additive_equiv_cmd(&ctx, cap.unwrap_or(ctx.limits.clone_cap)),
        Command::HsSh => hs_sh_cmd(&ctx),
        Command::Switching { cap } => switching_cmd(&ctx, cap.unwrap_or(ctx.limits.clone_cap)),
        Command::Product { export } => product_cmd(&ctx, export.as_deref()),
        Command::Quotient { generator, export } => quotient_cmd(&ctx, *generator, export.as_deref()),
        Command::Iso => iso_cmd(&ctx),
        Command::Random {
            atoms,
            seed,
            constraint,
            count,
            export,
        } => random_cmd(&ctx, *atoms, *seed, constraint, *count, export.as_deref()),
        Command::VerifyPaper { substitute, .. } => verify_paper_cmd(&ctx, substitute),
        Command::Corpus { seed, suite } => corpus_cmd(&ctx, *seed, *suite),
    }
}

fn verdict_check(name: &str, v: &Verdict) -> Check {
    let witness = v.counterexample.as_ref().map(|c| {
        c.iter()
            .map(|(k, x)| (k.clone(), json!(x)))
            .collect::<Map<String, Value>>()
    });
    Check::new(name, v.holds).status(v.status.into()).witness(witness)
}

fn check_cmd(ctx: &Context, properties: &[String], identities: &[String], exhaustive: bool) -> CliResult<Report> {
    let frame = ctx.frame()?;
    let mut targets: Vec<(String, QuasiIdentity)> = Vec::new();
    for p in properties {
        let p = Property::from_str(p)?;
        targets.push((p.name().to_string(), p.quasi_identity()));
    }
    for text in identities {
        let q = parse_quasi_identity(text).map_err(Error::from)?;
        targets.push((q.to_string(), q));
    }
    if targets.is_empty() {
        targets = Property::ALL
            .iter()
            .map(|p| (p.name().to_string(), p.quasi_identity()))
            .collect();
    }
    let interp = match &ctx.secondary {
        Some((_, g)) => Interpretation::with_companion(frame, g)?,
        None => Interpretation::new(frame),
    };
    let mode = if exhaustive { CheckMode::Exhaustive } else { CheckMode::Auto };
    let mut r = ctx.report("check");
    r.param("exhaustive", exhaustive);
    r.param("sample_seed", ctx.limits.sample_seed);
    for (name, q) in targets {
        let v = check_in(interp, &q, &ctx.limits, mode)?;
        r.push(verdict_check(&name, &v));
    }
    Ok(r)
}

fn con_cmd(ctx: &Context, pair: Option<&[u32]>) -> CliResult<Report> {
    let frame = ctx.frame()?;
    let mut r = ctx.report("con");
    r.push(Check::result(
        "congruences",
        json!({
            "generators": congruence_generators(frame),
            "minimal_nontrivial": minimal_nontrivial_congruences(frame),
            "simple": is_simple(frame)?,
        }),
    ));
    if let Some(&[x, y]) = pair {
        r.param("pair", [x, y]);
        let trace = principal_closure_trace(frame, x, y)?;
        r.push(Check::result(
            "principal",
            json!({"generator": trace.last(), "trace": trace}),
        ));
    }
    Ok(r)
}

fn frame_value(frame: &BooleanFrame) -> Value {
    serde_json::to_value(FrameJson::from(frame)).expect("frame serializes")
}

fn sub_cmd(ctx: &Context) -> CliResult<Report> {
    let frame = ctx.frame()?;
    let mut subs = Vec::new();
    for s in all_subalgebras(frame, &ctx.limits)? {
        let (rel, _) = relative_frame(frame, &s)?;
        subs.push(json!({"elements": s.elements(), "relative_f": rel.table()}));
    }
    let mut r = ctx.report("sub");
    r.push(Check::result(
        "subalgebras",
        json!({"count": subs.len(), "subalgebras": subs}),
    ));
    Ok(r)
}

fn cep_cmd(ctx: &Context, method: MethodArg) -> CliResult<Report> {
    let frame = ctx.frame()?;
    let methods: Vec<CepMethod> = match method {
        MethodArg::Direct => vec![CepMethod::Direct],
        MethodArg::TwoGen => vec![CepMethod::TwoGenerated],
        MethodArg::Pcep => vec![CepMethod::Pcep],
        MethodArg::All => CepMethod::ALL.to_vec(),
    };
    let mut r = ctx.report("cep");
    r.param("methods", methods.iter().map(|m| m.name()).collect::<Vec<_>>());
    let mut verdicts = Vec::new();
    for m in methods {
        let v = cep(frame, m, &ctx.limits)?;
        r.push(Check::new(m.name(), v.holds).witness(&v.witness));
        verdicts.push(v.holds);
    }
    if verdicts.len() > 1 && verdicts.iter().any(|&v| v != verdicts[0]) {
        r.push(Check::new("agreement", false).witness(&verdicts));
    }
    Ok(r)
}

fn clone_cmd(ctx: &Context, cap: usize, list: bool) -> CliResult<Report> {
    let frame = ctx.frame()?;
    let clo = unary_clone(frame, cap);
    let member = |m: frameforge::UnaryTable| json!({"table": m.table, "term": m.derivation.to_string()});
    let mut result = json!({
        "complete": clo.complete(),
        "size": clo.len(),
        "additive_members": additive_members(&clo).into_iter().map(member).collect::<Vec<_>>(),
    });
    if list {
        result["members"] = clo.members().map(member).collect();
    }
    let mut r = ctx.report("clone");
    r.param("cap", cap);
    let status = if clo.complete() { Status::Exhaustive } else { Status::Inconclusive };
    r.push(Check::result("unary_clone", result).status(status));
    Ok(r)
}

fn additive_equiv_cmd(ctx: &Context, cap: usize) -> CliResult<Report> {
    let frame = ctx.frame()?;
    let mut r = ctx.report("additive-equiv");
    r.param("cap", cap);
    let check = match additive_equivalence(frame, cap)? {
        AdditiveEquivalence::Equivalent { g, g_in_f, f_in_g } => Check::new("additive_equivalence", true).witness(
            json!({"g": g, "g_in_terms_of_f": g_in_f.to_string(), "f_in_terms_of_g": f_in_g.to_string()}),
        ),
        AdditiveEquivalence::NotEquivalent => Check::new("additive_equivalence", false),
        AdditiveEquivalence::Inconclusive => Check::new("additive_equivalence", false).status(Status::Inconclusive),
    };
    r.push(check);
    let present = hs_two_element_check(frame, &ctx.limits)?;
    r.push(Check::result("two_element_frames_in_hs", present));
    Ok(r)
}

fn classes(set: &IsoClassSet) -> Vec<Value> {
    set.frames().map(|f| frame_value(&f)).collect()
}

fn hs_sh_cmd(ctx: &Context) -> CliResult<Report> {
    let frame = ctx.frame()?;
    let v = hs_equals_sh(frame, &ctx.limits)?;
    let mut r = ctx.report("hs-sh");
    r.push(Check::new("hs_equals_sh", v.holds).witness(json!({
        "hs": classes(&v.hs),
        "sh": classes(&v.sh),
        "difference": v.witness.as_ref().map(frame_value),
    })));
    Ok(r)
}

fn switching_cmd(ctx: &Context, cap: usize) -> CliResult<Report> {
    let frame = ctx.frame()?;
    let mut r = ctx.report("switching");
    r.param("cap", cap);
    match find_switching_term(frame, cap)? {
        SwitchingSearch::Found(d) => {
            let t = discriminator_term(&d.derivation);
            r.push(Check::new("switching_term", true).witness(json!({
                "table": d.table,
                "term": d.derivation.to_string(),
            })));
            r.push(Check::new("discriminator", verify_discriminator(frame, &d.table)?).witness(t.to_string()));
        }
        SwitchingSearch::AbsentComplete => r.push(Check::new("switching_term", false)),
        SwitchingSearch::Inconclusive => r.push(Check::new("switching_term", false).status(Status::Inconclusive)),
    }
    Ok(r)
}

fn export(path: Option<&Path>, frames: &[BooleanFrame]) -> CliResult<()> {
    let Some(path) = path else {
        return Ok(());
    };
    let text = match frames {
        [one] => frame_to_json(one),
        many => serde_json::to_string(&many.iter().map(FrameJson::from).collect::<Vec<_>>())
            .expect("frames serialize"),
    };
    write_file(path, &(text + "\n"))
}

fn product_cmd(ctx: &Context, export_to: Option<&Path>) -> CliResult<Report> {
    let (a, b) = (ctx.frame()?, ctx.second()?);
    let p = product_with_max_atoms(a, b, ctx.limits.max_atoms)?;
    let fh = fraser_horn_check(a, b, &ctx.limits)?;
    let mut r = ctx.report("product");
    r.push(Check::result("product", frame_value(&p)));
    r.push(Check::new("fraser_horn", fh.holds).witness(&fh));
    export(export_to, &[p])?;
    Ok(r)
}

fn quotient_cmd(ctx: &Context, generator: u32, export_to: Option<&Path>) -> CliResult<Report> {
    let frame = ctx.frame()?;
    let (q, map) = quotient(frame, generator)?;
    let q = match frame.name() {
        Some(name) => q.named(format!("{name}/{generator}")),
        None => q,
    };
    let mut r = ctx.report("quotient");
    r.param("gen", generator);
    r.push(Check::result("quotient", json!({"frame": frame_value(&q), "map": map})));
    export(export_to, &[q])?;
    Ok(r)
}

fn iso_cmd(ctx: &Context) -> CliResult<Report> {
    let (a, b) = (ctx.frame()?, ctx.second()?);
    let found = is_isomorphic(a, b);
    let mut r = ctx.report("iso");
    r.push(Check::new("isomorphic", found.is_some()).witness(found.map(|p| json!({"atom_images": p.images()}))));
    if a.atoms() <= ctx.limits.max_canonical_atoms && b.atoms() <= ctx.limits.max_canonical_atoms {
        let (ca, cb) = (
            canonical_form(a, ctx.limits.max_canonical_atoms)?,
            canonical_form(b, ctx.limits.max_canonical_atoms)?,
        );
        r.push(Check::result("canonical_forms", json!([ca.table(), cb.table()])));
    }
    Ok(r)
}

fn random_cmd(
    ctx: &Context,
    atoms: u32,
    seed: u64,
    constraint: &str,
    count: usize,
    export_to: Option<&Path>,
) -> CliResult<Report> {
    let c = Constraint::from_str(constraint)?;
    let frames = (0..count as u64)
        .map(|i| random_frame(atoms, seed.wrapping_add(i), c, &ctx.limits))
        .collect::<Result<Vec<_>, _>>()?;
    let mut r = ctx.report("random");
    r.param("atoms", atoms);
    r.param("seed", seed);
    r.param("constraint", c.to_string());
    r.param("count", count);
    r.push(Check::result(
        "frames",
        frames.iter().map(frame_value).collect::<Vec<_>>(),
    ));
    export(export_to, &frames)?;
    Ok(r)
}

fn verify_paper_cmd(ctx: &Context, substitutes: &[String]) -> CliResult<Report> {
    let mut overrides = Vec::new();
    for s in substitutes {
        let (name, path) = s
            .split_once('=')
            .ok_or_else(|| CliError::usage(format!("expected NAME=PATH, got {s}")))?;
        let (_, frame) = load(None, Some(Path::new(path)), None, &ctx.limits)?.expect("path given");
        overrides.push((name.to_string(), frame));
    }
    let mut r = claims::verify_paper(&overrides, &ctx.limits)?;
    r.param("max_atoms", ctx.limits.max_atoms);
    r.param("eval_budget", ctx.limits.eval_budget);
    r.param("clone_cap", ctx.limits.clone_cap);
    if !overrides.is_empty() {
        r.param("substitute", substitutes);
    }
    Ok(r)
}

fn suite_checks(r: &mut Report, suite: &str, report: &SuiteReport) {
    for (name, tally) in &report.checks {
        let failures: Vec<Value> = report
            .failures
            .iter()
            .filter(|f| f.check == *name)
            .take(10)
            .map(|f| json!({"frame": frame_value(&f.frame), "detail": f.detail}))
            .collect();
        r.push(
            Check::new(format!("{suite}.{name}"), tally.failed == 0)
                .witness(json!({"passed": tally.passed, "failed": tally.failed, "failures": failures})),
        );
    }
}

fn corpus_cmd(ctx: &Context, seed: u64, suite: SuiteArg) -> CliResult<Report> {
    let mut r = ctx.report("corpus");
    r.param("seed", seed);
    if matches!(suite, SuiteArg::Oracle | SuiteArg::All) {
        let frames = oracle_corpus(seed, &ctx.limits)?;
        r.param("oracle_frames", frames.len());
        suite_checks(&mut r, "oracle", &oracle_suite(&frames, &ctx.limits)?);
    }
    if matches!(suite, SuiteArg::Implication | SuiteArg::All) {
        let frames = implication_corpus(seed, &ctx.limits)?;
        r.param("implication_frames", frames.len());
        suite_checks(&mut r, "implication", &implication_suite(&frames, &ctx.limits)?);
    }
    Ok(r)
}
