//! The `morphlab` command-line front end.
//!
//! Every command writes either human-readable text or, with
//! `--format machine`, one `key=value` record per line (see
//! [`parse_record`]). Exit codes: 0 on success or a positive decision, 1 on
//! a negative decision or a failed verification, 2 on bad input.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::thread;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::classic::{
    fibonacci, fibonacci_g, fibonacci_word, flipped_thue_morse_word, structural_checks, thue_morse, thue_morse_word,
    NamedMorphism, THUE_MORSE_MAX_ORDER,
};
use crate::error::{Error, Result};
use crate::interference::{
    barrier_certificate, is_strongly_interference_free, IfOptions, InterferenceChecker, InterferenceWitness,
    StrongIf,
};
use crate::matcher::ImageScanner;
use crate::morphisms::Morphism;
use crate::oracles::{brute_force_interference, is_recognizable_on, Budget, Recognizability};
use crate::repeats::{
    compute_mus, compute_net_occurrences, verify_fibonacci_mus, verify_fibonacci_net, verify_occ_lemmas,
    verify_occurrence_preservation_suite, verify_tm_mus, verify_tm_net, InstanceReport,
};
use crate::words::{occurrences, Alphabet, Word};

#[derive(Debug, Parser)]
#[command(name = "morphlab", version, about = "Word morphisms, interference-freeness and repeat structure")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,

    /// Oracle budget, e.g. `max_len=128,max_count=1000000`. Overrides
    /// MORPHLAB_BUDGET.
    #[arg(long, global = true)]
    pub budget: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Fibonacci,
    ThueMorse,
    FlippedThueMorse,
    FibonacciG,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    FibonacciMus,
    TmMus,
    Netocc,
    OccLemmas,
    OccPreserve,
    Structural,
    IfParity,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a morphism is interference-free on a word.
    CheckIf {
        #[arg(long, short)]
        morphism: String,
        #[arg(long, short)]
        word: String,
        /// Run even if the morphism is not injective.
        #[arg(long)]
        allow_non_injective: bool,
        /// Use the brute-force oracle instead of the linear-time decision.
        #[arg(long)]
        oracle: bool,
        /// Also search for a barrier prefix/suffix pair up to this length.
        #[arg(long, num_args = 0..=1, default_missing_value = "8")]
        barrier: Option<usize>,
    },
    /// Decide strong interference-freeness (on every non-empty word).
    CheckStrongIf {
        #[arg(long, short)]
        morphism: String,
    },
    /// Decide whether every rotation of the image has a unique circular
    /// factorization.
    CheckRecognizable {
        #[arg(long, short)]
        morphism: String,
        #[arg(long, short)]
        word: String,
    },
    /// Apply a morphism, optionally several times.
    Apply {
        #[arg(long, short)]
        morphism: String,
        #[arg(long, short)]
        word: String,
        #[arg(long, short, default_value_t = 1)]
        power: usize,
    },
    /// List the occurrences of a pattern in a word.
    Occ {
        #[arg(long, short)]
        pattern: String,
        #[arg(long, short)]
        word: String,
    },
    /// Minimal unique substrings.
    Mus {
        #[arg(long, short, required_unless_present = "family", conflicts_with = "family")]
        word: Option<String>,
        #[arg(long, requires = "order")]
        family: Option<Family>,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Net occurrences.
    Netocc {
        #[arg(long, short, required_unless_present = "family", conflicts_with = "family")]
        word: Option<String>,
        #[arg(long, requires = "order")]
        family: Option<Family>,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Generate a word of a classic family, or list the built-in morphisms.
    Gen {
        #[arg(long, required_unless_present = "list_morphisms", requires = "order")]
        family: Option<Family>,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        list_morphisms: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        min_order: Option<usize>,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Time the interference-freeness decision on words of growing length.
    Bench {
        #[arg(long, short, default_value = "fibonacci")]
        morphism: String,
        #[arg(long, value_enum, default_value_t = Family::Fibonacci)]
        family: Family,
        #[arg(long, default_value_t = 20)]
        from: usize,
        #[arg(long, default_value_t = 25)]
        to: usize,
        #[arg(long, default_value_t = 5)]
        repeats: usize,
        /// Fail when the time ratio between consecutive orders reaches this.
        #[arg(long, default_value_t = 3.0)]
        max_ratio: f64,
    },
    /// Dump the per-position image matches and the prefix/suffix positions
    /// of a word over the target alphabet.
    Scan {
        #[arg(long, short)]
        morphism: String,
        #[arg(long, short)]
        word: String,
    },
}

/// Splits a machine-format line into its `key=value` fields, in order.
/// Returns `None` for a malformed line.
pub fn parse_record(line: &str) -> Option<Vec<(String, String)>> {
    let fields: Option<Vec<_>> = line
        .split_whitespace()
        .map(|f| f.split_once('=').map(|(k, v)| (k.to_string(), v.to_string())))
        .collect();
    fields.filter(|f| f.first().is_some_and(|(k, _)| k == "record"))
}

struct Printer<'a> {
    out: &'a mut dyn Write,
    format: Format,
}

impl Printer<'_> {
    /// One result: `human` in human mode, the fields as a record otherwise.
    fn emit(&mut self, human: &str, record: &str, fields: &[(&str, String)]) -> Result<(), std::io::Error> {
        match self.format {
            Format::Human => writeln!(self.out, "{human}"),
            Format::Machine => {
                let mut line = format!("record={record}");
                for (k, v) in fields {
                    let _ = write!(line, " {k}={v}");
                }
                writeln!(self.out, "{line}")
            }
        }
    }
}

enum Failure {
    Input(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Input(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// Reads `@path` arguments from disk; anything else is taken literally.
fn read_arg(arg: &str) -> Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)
            .map(|s| s.split_whitespace().collect())
            .map_err(|e| Error::MorphismSyntax(format!("cannot read {path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn resolve_morphism(arg: &str) -> Result<Morphism> {
    let text = read_arg(arg)?;
    match text.parse::<NamedMorphism>() {
        Ok(named) => Ok(named.morphism()),
        Err(_) => text.parse(),
    }
}

/// Generated words may be written `fib:<i>`, `tm:<i>`, `ftm:<i>`, `g:<i>`.
fn family_shorthand(text: &str) -> Option<Result<Word>> {
    let (name, order) = text.split_once(':')?;
    let family = match name {
        "fib" => Family::Fibonacci,
        "tm" => Family::ThueMorse,
        "ftm" => Family::FlippedThueMorse,
        "g" => Family::FibonacciG,
        _ => return None,
    };
    let order = order.parse().ok()?;
    Some(generate(family, order))
}

fn resolve_word(arg: &str, alphabet: Option<&Alphabet>) -> Result<Word> {
    let text = read_arg(arg)?;
    let text = if text == "." { String::new() } else { text };
    if let Some(w) = family_shorthand(&text) {
        let w = w?;
        return match alphabet {
            Some(a) => w.rebase(a),
            None => Ok(w),
        };
    }
    match alphabet {
        Some(a) => Word::parse(a, &text),
        None => Word::parse(&Alphabet::of_text(&text)?, &text),
    }
}

fn generate(family: Family, order: usize) -> Result<Word> {
    match family {
        Family::Fibonacci => fibonacci_word(order),
        Family::ThueMorse => thue_morse_word(order),
        Family::FlippedThueMorse => flipped_thue_morse_word(order),
        Family::FibonacciG => fibonacci_g(order),
    }
}

fn family_or_word(word: &Option<String>, family: Option<Family>, order: Option<usize>) -> Result<Word> {
    match (word, family, order) {
        (Some(w), _, _) => resolve_word(w, None),
        (None, Some(f), Some(i)) => generate(f, i),
        _ => Err(Error::EmptyWord("a word or --family/--order")),
    }
}

fn show(w: &Word) -> String {
    if w.is_empty() {
        ".".into()
    } else {
        w.to_string()
    }
}

fn witness_fields(phi: &Morphism, w: &InterferenceWitness) -> Vec<(&'static str, String)> {
    match w {
        InterferenceWitness::Interfered(f) => {
            let y = phi.apply(&f.y_source).map(|y| y.to_string()).unwrap_or_default();
            vec![("witness", "interfered".into()), ("x", f.x.to_string()), ("y", y), ("z", f.z.to_string())]
        }
        InterferenceWitness::Inner { host, offset } => vec![
            ("witness", "inner".into()),
            ("host", phi.source().char_of(*host).to_string()),
            ("offset", offset.to_string()),
        ],
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<bool, Failure> {
    let budget = match &cli.budget {
        Some(spec) => Budget::parse(spec)?,
        None => Budget::from_env()?,
    };
    let mut p = Printer { out, format: cli.format };
    match &cli.command {
        Command::CheckIf { morphism, word, allow_non_injective, oracle, barrier } => {
            let phi = resolve_morphism(morphism)?;
            let u = resolve_word(word, Some(phi.source()))?;
            let (free, witness, violated) = if *oracle {
                if !allow_non_injective {
                    phi.require_injective()?;
                }
                let w = brute_force_interference(&phi, &u, &budget)?;
                (w.is_none(), w, !phi.is_injective())
            } else {
                let opts = IfOptions { allow_non_injective: *allow_non_injective };
                let d = InterferenceChecker::with_options(&phi, opts)?.decide(&u)?;
                (d.interference_free, d.witness, d.precondition_violated)
            };
            let verdict = if free { "IF" } else { "NOT-IF" };
            let mut fields = vec![("decision", verdict.to_string()), ("morphism", phi.to_string())];
            let mut human = verdict.to_string();
            if let Some(w) = &witness {
                fields.extend(witness_fields(&phi, w));
                let _ = write!(human, " witness {}", w.describe(&phi));
            }
            if violated {
                fields.push(("precondition", "non-injective".into()));
                human.push_str(" (morphism is not injective)");
            }
            p.emit(&human, "check-if", &fields)?;
            if let Some(cap) = barrier {
                let cert = barrier_certificate(&phi, &u, (*cap).max(1))?;
                let (human, fields) = match &cert {
                    Some((l, r)) => (
                        format!("barrier left={l} right={r}"),
                        vec![("found", "true".into()), ("left", l.to_string()), ("right", r.to_string())],
                    ),
                    None => (format!("no barrier up to length {cap}"), vec![("found", "false".into())]),
                };
                p.emit(&human, "barrier", &fields)?;
            }
            Ok(free)
        }
        Command::CheckStrongIf { morphism } => {
            let phi = resolve_morphism(morphism)?;
            let r = is_strongly_interference_free(&phi)?;
            match &r {
                StrongIf::StronglyInterferenceFree => {
                    p.emit("STRONGLY-IF", "check-strong-if", &[("decision", "STRONGLY-IF".into())])?
                }
                StrongIf::Fails { symbol, witness } => {
                    let c = phi.source().char_of(*symbol);
                    let mut fields = vec![("decision", "NOT-STRONGLY-IF".into()), ("symbol", c.to_string())];
                    fields.extend(witness_fields(&phi, witness));
                    p.emit(
                        &format!("NOT-STRONGLY-IF symbol={c} witness {}", witness.describe(&phi)),
                        "check-strong-if",
                        &fields,
                    )?
                }
            }
            Ok(r.holds())
        }
        Command::CheckRecognizable { morphism, word } => {
            let phi = resolve_morphism(morphism)?;
            let u = resolve_word(word, Some(phi.source()))?;
            let r = is_recognizable_on(&phi, &u)?;
            match &r {
                Recognizability::Recognizable => {
                    p.emit("RECOGNIZABLE", "check-recognizable", &[("decision", "RECOGNIZABLE".into())])?
                }
                Recognizability::NotRecognizable { rotation, count } => p.emit(
                    &format!("NOT-RECOGNIZABLE rotation={} factorizations={count}", show(rotation)),
                    "check-recognizable",
                    &[
                        ("decision", "NOT-RECOGNIZABLE".into()),
                        ("rotation", rotation.to_string()),
                        ("factorizations", count.to_string()),
                    ],
                )?,
            }
            Ok(r.holds())
        }
        Command::Apply { morphism, word, power } => {
            let phi = resolve_morphism(morphism)?;
            let u = resolve_word(word, Some(phi.source()))?;
            let img = phi.iterate(&u, *power)?;
            p.emit(
                &show(&img),
                "apply",
                &[("power", power.to_string()), ("length", img.len().to_string()), ("image", img.to_string())],
            )?;
            Ok(true)
        }
        Command::Occ { pattern, word } => {
            let (pt, wt) = (read_arg(pattern)?, read_arg(word)?);
            let alphabet = match (family_shorthand(&pt).is_some(), family_shorthand(&wt).is_some()) {
                (false, false) => Alphabet::of_text(&format!("{pt}{wt}"))?,
                _ => Alphabet::binary(),
            };
            let u = resolve_word(&pt, Some(&alphabet))?;
            let w = resolve_word(&wt, Some(&alphabet))?;
            let occ = occurrences(&u, &w)?;
            let listing: Vec<String> = occ.positions.iter().map(usize::to_string).collect();
            p.emit(
                &format!("count={} positions={{{occ}}}", occ.len()),
                "occ",
                &[("count", occ.len().to_string()), ("positions", listing.join(","))],
            )?;
            Ok(true)
        }
        Command::Mus { word, family, order } => {
            let w = family_or_word(word, *family, *order)?;
            for m in compute_mus(&w)? {
                p.emit(
                    &m.to_string(),
                    "mus",
                    &[("start", m.start.to_string()), ("end", m.end.to_string()), ("content", m.content.to_string())],
                )?;
            }
            Ok(true)
        }
        Command::Netocc { word, family, order } => {
            let w = family_or_word(word, *family, *order)?;
            for o in compute_net_occurrences(&w)? {
                let content = w.factor(o.start, o.end);
                p.emit(
                    &format!("{o} {content}"),
                    "netocc",
                    &[("start", o.start.to_string()), ("end", o.end.to_string()), ("content", content.to_string())],
                )?;
            }
            Ok(true)
        }
        Command::Gen { family, order, list_morphisms } => {
            if *list_morphisms {
                for nm in NamedMorphism::ALL {
                    p.emit(
                        &format!("{:<20} {}", nm.name(), nm.spec()),
                        "morphism",
                        &[("name", nm.name().into()), ("spec", nm.spec().into())],
                    )?;
                }
            }
            if let (Some(f), Some(i)) = (family, order) {
                let w = generate(*f, *i)?;
                p.emit(&w.to_string(), "gen", &[("length", w.len().to_string()), ("word", w.to_string())])?;
            }
            Ok(true)
        }
        Command::Verify { suite, max_order, min_order, jobs } => {
            let jobs = jobs.unwrap_or_else(|| thread::available_parallelism().map_or(1, |n| n.get())).max(1);
            let reports = run_suite(*suite, *min_order, *max_order, jobs)?;
            let failed = reports.iter().filter(|r| !r.passed).count();
            for r in &reports {
                p.emit(
                    &r.to_string(),
                    "verify",
                    &[
                        ("suite", r.suite.into()),
                        ("instance", r.label.replace(' ', ",")),
                        ("result", if r.passed { "PASS" } else { "FAIL" }.into()),
                    ],
                )?;
            }
            p.emit(
                &format!("{} passed, {failed} failed", reports.len() - failed),
                "summary",
                &[("passed", (reports.len() - failed).to_string()), ("failed", failed.to_string())],
            )?;
            Ok(failed == 0)
        }
        Command::Bench { morphism, family, from, to, repeats, max_ratio } => {
            let phi = resolve_morphism(morphism)?;
            let checker = InterferenceChecker::new(&phi)?;
            let mut prev: Option<f64> = None;
            let mut ok = true;
            for i in *from..=*to {
                let u = generate(*family, i)?.rebase(phi.source())?;
                let mut best = f64::INFINITY;
                let mut decision = false;
                for _ in 0..(*repeats).max(1) {
                    let start = Instant::now();
                    decision = checker.decide(&u)?.interference_free;
                    best = best.min(start.elapsed().as_secs_f64());
                }
                let ratio = prev.map(|t| best / t);
                prev = Some(best);
                let within = ratio.is_none_or(|r| r < *max_ratio);
                ok &= within;
                let ratio_text = ratio.map_or("-".to_string(), |r| format!("{r:.3}"));
                let image_len: u128 = phi.iterated_image_lengths(1)?.iter().zip(symbol_counts(&u)).map(|(l, c)| l * c).sum();
                p.emit(
                    &format!(
                        "order={i} |u|={} |phi(u)|={image_len} seconds={best:.6} ratio={ratio_text} decision={}",
                        u.len(),
                        if decision { "IF" } else { "NOT-IF" }
                    ),
                    "bench",
                    &[
                        ("order", i.to_string()),
                        ("input_len", u.len().to_string()),
                        ("image_len", image_len.to_string()),
                        ("seconds", format!("{best:.6}")),
                        ("ratio", ratio_text),
                        ("decision", if decision { "IF" } else { "NOT-IF" }.into()),
                    ],
                )?;
            }
            Ok(ok)
        }
        Command::Scan { morphism, word } => {
            let phi = resolve_morphism(morphism)?;
            let w = resolve_word(word, Some(phi.target()))?;
            let scan = ImageScanner::new(&phi)?.scan(&w);
            let chars = |syms: &[u8]| syms.iter().map(|&c| phi.source().char_of(c).to_string()).collect::<Vec<_>>().join(",");
            for i in scan.nonempty_positions() {
                let s = chars(scan.starting_at(i));
                p.emit(&format!("S_{i} = {{{}}}", s), "scan", &[("position", i.to_string()), ("symbols", s)])?;
            }
            let list = |v: Vec<usize>| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            let (pref, suf) = (list(scan.p_pref_positions()), list(scan.p_suf_positions()));
            p.emit(&format!("P_pref = {{{pref}}}"), "p-pref", &[("positions", pref)])?;
            p.emit(&format!("P_suf = {{{suf}}}"), "p-suf", &[("positions", suf)])?;
            p.emit(&format!("occ = {}", scan.occ_total()), "scan-total", &[("occ", scan.occ_total().to_string())])?;
            Ok(true)
        }
    }
}

fn symbol_counts(u: &Word) -> Vec<u128> {
    let mut counts = vec![0u128; u.alphabet().len()];
    for &c in u.symbols() {
        counts[c as usize] += 1;
    }
    counts
}

/// Runs `f` on every item across `jobs` threads; results keep item order.
fn fan_out<T, F>(items: Vec<usize>, jobs: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(usize) -> Result<T> + Sync,
{
    let chunk = items.len().div_ceil(jobs).max(1);
    thread::scope(|s| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| s.spawn(|| part.iter().map(|&i| f(i)).collect::<Result<Vec<T>>>()))
            .collect();
        let mut out = Vec::new();
        for h in handles {
            out.extend(h.join().expect("verification worker panicked")?);
        }
        Ok(out)
    })
}

fn run_suite(suite: Suite, min: Option<usize>, max: usize, jobs: usize) -> Result<Vec<InstanceReport>> {
    let lowest = match suite {
        Suite::FibonacciMus => 6,
        Suite::TmMus | Suite::Netocc | Suite::OccLemmas => 5,
        Suite::OccPreserve | Suite::IfParity => 4,
        Suite::Structural => 7,
    };
    let first = min.unwrap_or(lowest).max(lowest);
    if max < first {
        return Err(Error::OutOfRange { what: "--max-order", value: max, min: first, max: usize::MAX });
    }
    let orders = |default_min: usize| (min.unwrap_or(default_min)..=max).collect::<Vec<_>>();
    let flat = |v: Vec<Vec<InstanceReport>>| v.into_iter().flatten().collect();
    Ok(match suite {
        Suite::FibonacciMus => flat(fan_out(orders(6), jobs, |i| verify_fibonacci_mus(i..=i))?),
        Suite::TmMus => flat(fan_out(orders(5), jobs, |i| verify_tm_mus(i..=i))?),
        Suite::Netocc => {
            let fib = flat(fan_out(orders(7), jobs, |i| verify_fibonacci_net(i..=i))?);
            let tm: Vec<usize> = (min.unwrap_or(5).max(5)..=max.min(THUE_MORSE_MAX_ORDER)).collect();
            let tm: Vec<InstanceReport> = flat(fan_out(tm, jobs, |i| verify_tm_net(i..=i))?);
            fib.into_iter().chain(tm).collect()
        }
        Suite::OccLemmas => {
            let report = verify_occ_lemmas(max, max.min(THUE_MORSE_MAX_ORDER), max)?;
            let mut out = report.instances;
            out.push(InstanceReport {
                suite: "tm2-in-tm5",
                label: "recorded".into(),
                passed: true,
                detail: format!("occ(tm_2, tm_5) = {}", report.tm2_in_tm5),
            });
            out
        }
        Suite::OccPreserve => verify_occurrence_preservation_suite(max)?,
        Suite::Structural => {
            let r = structural_checks(max)?;
            let mut out = vec![InstanceReport {
                suite: "structural",
                label: format!("i=3..{max}"),
                passed: r.passed(),
                detail: format!("checks={} violations={}", r.checks, r.violations.len()),
            }];
            out.extend(r.violations.into_iter().map(|v| InstanceReport {
                suite: "structural",
                label: "violation".into(),
                passed: false,
                detail: v,
            }));
            out
        }
        Suite::IfParity => {
            let fib = fibonacci();
            let tm = thue_morse();
            let fib_orders: Vec<usize> = (min.unwrap_or(4).max(4)..=max).collect();
            let fib_reports = fan_out(fib_orders, jobs, |i| {
                let d = InterferenceChecker::new(&fib)?.decide(&fibonacci_word(i)?)?;
                let expected = i % 2 == 0;
                Ok(InstanceReport {
                    suite: "fibonacci-if-parity",
                    label: format!("i={i}"),
                    passed: d.interference_free == expected,
                    detail: format!("decision={d} expected={}", if expected { "IF" } else { "NOT-IF" }),
                })
            })?;
            let tm_orders: Vec<usize> = (min.unwrap_or(4).max(1)..=max.min(THUE_MORSE_MAX_ORDER)).collect();
            let tm_reports = fan_out(tm_orders, jobs, |i| {
                let d = InterferenceChecker::new(&tm)?.decide(&thue_morse_word(i)?)?;
                Ok(InstanceReport {
                    suite: "tm-if",
                    label: format!("i={i}"),
                    passed: d.interference_free,
                    detail: format!("decision={d} expected=IF"),
                })
            })?;
            fib_reports.into_iter().chain(tm_reports).collect()
        }
    })
}
