//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use morphlab::classic::{
    fibonacci, fibonacci_word, flipped_thue_morse_word, structural_checks, thue_morse, thue_morse_word, NamedMorphism,
};
use morphlab::interference::{is_strongly_interference_free, InterferenceChecker, StrongIf};
use morphlab::oracles::{brute_force_interference, is_recognizable_on, Budget, Recognizability};
use morphlab::repeats::{
    compute_mus, compute_net_occurrences, mus_to_net, verify_fibonacci_mus, verify_fibonacci_net, verify_occ_lemmas,
    verify_occurrence_preservation, verify_tm_mus, verify_tm_net, PreservationCheck,
};
use morphlab::words::occ_count;
use morphlab::{Alphabet, Morphism, Word};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{binary_source_morphisms, strings_over, w, words_up_to};

struct Outcome {
    passed: bool,
    summary: String,
}

fn outcome(passed: bool, summary: impl Into<String>) -> Outcome {
    Outcome { passed, summary: summary.into() }
}

/// One instance of the exhaustive sweep that the decision certified
/// interference-free.
struct IfPositive {
    morphism: usize,
    u: Word,
}

struct Sweep {
    morphisms: Vec<Morphism>,
    instances: usize,
    mismatches: Vec<String>,
    invalid_witnesses: Vec<String>,
    positives: Vec<IfPositive>,
}

fn sweep() -> Sweep {
    let budget = Budget::default();
    let morphisms: Vec<Morphism> =
        binary_source_morphisms(&['a', 'b', 'c'], 3).into_iter().filter(Morphism::is_injective).collect();
    let words = words_up_to(&Alphabet::binary(), 6);
    let mut s = Sweep { morphisms: Vec::new(), instances: 0, mismatches: vec![], invalid_witnesses: vec![], positives: vec![] };
    for (idx, phi) in morphisms.iter().enumerate() {
        let checker = InterferenceChecker::new(phi).unwrap();
        for u in &words {
            s.instances += 1;
            let d = checker.decide(u).unwrap();
            let oracle = brute_force_interference(phi, u, &budget).unwrap();
            if d.interference_free != oracle.is_none() {
                s.mismatches.push(format!("{phi} u={u}: fast={} oracle={}", d.interference_free, oracle.is_none()));
            }
            if let Some(wit) = &d.witness {
                if !wit.is_valid_for(phi, &phi.apply(u).unwrap()) {
                    s.invalid_witnesses.push(format!("{phi} u={u}: {}", wit.describe(phi)));
                }
            }
            if d.interference_free {
                s.positives.push(IfPositive { morphism: idx, u: u.clone() });
            }
        }
    }
    s.morphisms = morphisms;
    s
}

fn criterion_1(s: &Sweep) -> Outcome {
    let ok = s.mismatches.is_empty() && s.invalid_witnesses.is_empty();
    let mut msg = format!(
        "{} injective morphisms, {} instances, {} IF-positive, {} mismatches, {} invalid witnesses",
        s.morphisms.len(),
        s.instances,
        s.positives.len(),
        s.mismatches.len(),
        s.invalid_witnesses.len()
    );
    if let Some(first) = s.mismatches.first().or(s.invalid_witnesses.first()) {
        msg.push_str(&format!("; first: {first}"));
    }
    outcome(ok, msg)
}

fn criterion_2() -> Outcome {
    let (tm, fib) = (thue_morse(), fibonacci());
    let cases: [(&Morphism, &str, &str, usize, usize); 4] = [
        (&tm, "ab", "abaab", 2, 2),
        (&fib, "ab", "abaab", 2, 3),
        (&tm, "aa", "aabbb", 1, 2),
        (&fib, "aa", "aabbb", 1, 1),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (phi, u, v, want_src, want_img) in cases {
        let r = verify_occurrence_preservation(phi, &w(u), &w(v), 1).unwrap();
        ok &= r.occ_source == want_src && r.occ_image == want_img;
        parts.push(format!("({phi}, {u}, {v}) -> {} vs {}", r.occ_source, r.occ_image));
    }
    outcome(ok, parts.join("; "))
}

fn criterion_3() -> Outcome {
    let (fib, tm) = (fibonacci(), thue_morse());
    let fc = InterferenceChecker::new(&fib).unwrap();
    let tc = InterferenceChecker::new(&tm).unwrap();
    let start = Instant::now();
    let mut bad = Vec::new();
    for i in 4..=20 {
        let got = fc.decide(&fibonacci_word(i).unwrap()).unwrap().interference_free;
        if got != (i % 2 == 0) {
            bad.push(format!("F_{i}"));
        }
    }
    for i in 4..=16 {
        if !tc.decide(&thue_morse_word(i).unwrap()).unwrap().interference_free {
            bad.push(format!("tm_{i}"));
        }
        if !tc.decide(&flipped_thue_morse_word(i).unwrap()).unwrap().interference_free {
            bad.push(format!("flip(tm_{i})"));
        }
    }
    let elapsed = start.elapsed();
    outcome(
        bad.is_empty() && elapsed < Duration::from_secs(10),
        format!("F_4..F_20 parity, tm_4..tm_16 and flips; wrong: {bad:?}; {:.2?}", elapsed),
    )
}

fn criterion_4() -> Outcome {
    let expected = [
        (NamedMorphism::MephistoWaltz, None),
        (NamedMorphism::ThueMorseMorse, None),
        (NamedMorphism::LastNonzeroDigit, None),
        (NamedMorphism::Fibonacci, Some('b')),
        (NamedMorphism::ThueMorse, Some('a')),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (nm, want) in expected {
        let phi = nm.morphism();
        let got = match is_strongly_interference_free(&phi).unwrap() {
            StrongIf::StronglyInterferenceFree => None,
            StrongIf::Fails { symbol, .. } => Some(phi.source().char_of(symbol)),
        };
        ok &= got == want;
        parts.push(match got {
            None => format!("{nm}: strongly IF"),
            Some(c) => format!("{nm}: fails on {c}"),
        });
    }
    outcome(ok, parts.join("; "))
}

fn criterion_5(s: &Sweep) -> Outcome {
    let mut failures = Vec::new();
    for p in &s.positives {
        let phi = &s.morphisms[p.morphism];
        if !is_recognizable_on(phi, &p.u).unwrap().holds() {
            failures.push(format!("{phi} u={}", p.u));
        }
    }
    let fib = fibonacci();
    let f5 = fibonacci_word(5).unwrap();
    let fib_ok = is_recognizable_on(&fib, &f5).unwrap().holds()
        && !InterferenceChecker::new(&fib).unwrap().decide(&f5).unwrap().interference_free;
    let tm = thue_morse();
    let tm_rec = is_recognizable_on(&tm, &w("aa")).unwrap();
    let tm_ok = tm.is_injective()
        && tm_rec == Recognizability::NotRecognizable { rotation: w("baba"), count: 2 };
    outcome(
        failures.is_empty() && fib_ok && tm_ok,
        format!(
            "{} IF-positive instances, {} not recognizable; (fib, F_5) recognizable-not-IF={fib_ok}; (mu, aa) -> {tm_rec:?}",
            s.positives.len(),
            failures.len()
        ),
    )
}

fn criterion_6(s: &Sweep) -> Outcome {
    let mut checked = [0usize; 4];
    let mut failures = Vec::new();
    let mut current: Option<(usize, InterferenceChecker<'_>)> = None;
    for (n, p) in s.positives.iter().enumerate() {
        let phi = &s.morphisms[p.morphism];
        if current.as_ref().is_none_or(|(idx, _)| *idx != p.morphism) {
            current = Some((p.morphism, InterferenceChecker::new(phi).unwrap()));
        }
        let checker = &current.as_ref().unwrap().1;
        let k_max = if phi.is_endomorphism() { 3 } else { 1 };
        let pc = PreservationCheck::new(checker, &p.u, k_max).unwrap();
        let mut rng = StdRng::seed_from_u64(0x5eed ^ n as u64);
        for _ in 0..100 {
            let len = rng.gen_range(1..=40);
            let v: String = (0..len).map(|_| if rng.gen_bool(0.5) { 'a' } else { 'b' }).collect();
            let v = w(&v);
            for k in 1..=k_max {
                if !pc.preconditions_hold(k) {
                    break;
                }
                let r = pc.check(&v, k).unwrap();
                checked[k] += 1;
                if !(r.counts_equal() && r.positions_correspond) {
                    failures.push(format!("{phi} u={} v={v} k={k}: {} vs {}", p.u, r.occ_source, r.occ_image));
                }
            }
        }
    }
    let mut msg = format!(
        "checks k=1: {}, k=2: {}, k=3: {}; {} failures",
        checked[1],
        checked[2],
        checked[3],
        failures.len()
    );
    if let Some(f) = failures.first() {
        msg.push_str(&format!("; first: {f}"));
    }
    outcome(failures.is_empty(), msg)
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let fib = verify_fibonacci_mus(6..=18).unwrap();
    let tm = verify_tm_mus(5..=14).unwrap();
    let failed: Vec<String> = fib.iter().chain(&tm).filter(|r| !r.passed).map(|r| r.to_string()).collect();
    let elapsed = start.elapsed();
    outcome(
        failed.is_empty() && elapsed < Duration::from_secs(30),
        format!("F_6..F_18 and tm_5..tm_14; failed: {failed:?}; {elapsed:.2?}"),
    )
}

fn criterion_8() -> Outcome {
    let mut mismatches = Vec::new();
    let mut count = 0;
    for s in strings_over(&['a', 'b'], 1, 14) {
        let word = w(&s);
        count += 1;
        let via_mus = mus_to_net(&compute_mus(&word).unwrap(), word.len()).unwrap();
        if via_mus != compute_net_occurrences(&word).unwrap() {
            mismatches.push(s);
        }
    }
    let fib = verify_fibonacci_net(7..=18).unwrap();
    let tm = verify_tm_net(5..=14).unwrap();
    let failed: Vec<String> = fib.iter().chain(&tm).filter(|r| !r.passed).map(|r| r.to_string()).collect();
    outcome(
        mismatches.is_empty() && failed.is_empty(),
        format!(
            "duality on {count} binary words: {} mismatches; closed forms F_7..F_18, tm_5..tm_14: failed {failed:?}",
            mismatches.len()
        ),
    )
}

fn criterion_9() -> Outcome {
    let report = verify_occ_lemmas(20, 14, 18).unwrap();
    let f4_f6 = occ_count(&fibonacci_word(4).unwrap(), &fibonacci_word(6).unwrap()).unwrap();
    let failed: Vec<String> = report.instances.iter().filter(|r| !r.passed).map(|r| r.to_string()).collect();
    outcome(
        report.passed() && f4_f6 == 3,
        format!(
            "{} constancy/equality groups, failed {failed:?}; occ(F_4, F_6) = {f4_f6}; occ(tm_2, tm_5) = {} (recorded)",
            report.instances.len(),
            report.tm2_in_tm5
        ),
    )
}

fn criterion_10() -> Outcome {
    let fib = fibonacci();
    let checker = InterferenceChecker::new(&fib).unwrap();
    let mut times = Vec::new();
    for i in 20..=25 {
        let u = fibonacci_word(i).unwrap();
        let mut best = Duration::MAX;
        for _ in 0..7 {
            let start = Instant::now();
            std::hint::black_box(checker.decide(&u).unwrap());
            best = best.min(start.elapsed());
        }
        times.push((i, best));
    }
    let ratios: Vec<f64> = times.windows(2).map(|p| p[1].1.as_secs_f64() / p[0].1.as_secs_f64()).collect();
    let last = times.last().unwrap().1;
    let ok = ratios.iter().all(|&r| r < 3.0) && last < Duration::from_secs(1);
    let listing: Vec<String> = times.iter().map(|(i, t)| format!("F_{i}: {:.3}ms", t.as_secs_f64() * 1e3)).collect();
    let ratio_list: Vec<String> = ratios.iter().map(|r| format!("{r:.2}")).collect();
    outcome(ok, format!("{}; ratios [{}]", listing.join(", "), ratio_list.join(", ")))
}

fn criterion_11() -> Outcome {
    let r = structural_checks(20).unwrap();
    outcome(r.passed(), format!("{} checks for i = 3..20, violations: {:?}", r.checks, r.violations))
}

fn main() {
    let start = Instant::now();
    let sweep = sweep();
    let sweep_time = start.elapsed();

    let mut criteria: Vec<(usize, &str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (1, "fast IF decision equals brute-force oracle", Box::new(|| criterion_1(&sweep))),
        (2, "small occurrence-count fixtures", Box::new(criterion_2)),
        (3, "Fibonacci parity and Thue-Morse IF sweeps", Box::new(criterion_3)),
        (4, "strong IF classification of named morphisms", Box::new(criterion_4)),
        (5, "IF implies recognizable; hierarchy witnesses", Box::new(|| criterion_5(&sweep))),
        (6, "occurrence counts and positions preserved", Box::new(|| criterion_6(&sweep))),
        (7, "MUS closed forms", Box::new(criterion_7)),
        (8, "net-occurrence closed forms and MUS duality", Box::new(criterion_8)),
        (9, "occurrence-constancy lemmas", Box::new(criterion_9)),
        (10, "linear-time scaling of the IF decision", Box::new(criterion_10)),
        (11, "structural facts of Fibonacci words", Box::new(criterion_11)),
    ];
    let mut failed = 0;
    for (n, name, run) in criteria.drain(..) {
        let t = Instant::now();
        let mut o = run();
        let mut elapsed = t.elapsed();
        if n == 1 {
            elapsed += sweep_time;
            o.passed &= elapsed < Duration::from_secs(120);
        }
        if !o.passed {
            failed += 1;
        }
        let verdict = if o.passed { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {n:>2} ({name}) [{elapsed:.2?}]: {}", o.summary);
    }
    println!("acceptance: {} passed, {failed} failed", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

