//! Minimal unique substrings, net occurrences, and the occurrence-count
//! verifications built on them.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::RangeInclusive;

use crate::classic::{
    extensions, fibonacci, fibonacci_g, fibonacci_word, thue_morse_word, FIBONACCI_MAX_ORDER,
    THUE_MORSE_MAX_ORDER,
};
use crate::error::{Error, Result};
use crate::interference::InterferenceChecker;
use crate::morphisms::Morphism;
use crate::suffix_array::repeat_lengths;
use crate::words::{flip, longest_proper_prefix, occ_count, occurrences, Word};

/// A minimal unique substring occurrence `[start, end]` (1-based, inclusive).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MusOccurrence {
    pub start: usize,
    pub end: usize,
    pub content: Word,
}

/// A net occurrence `[start, end]` (1-based, inclusive).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NetOccurrence {
    pub start: usize,
    pub end: usize,
}

impl fmt::Display for NetOccurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.start, self.end)
    }
}

impl fmt::Display for MusOccurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}] {}", self.start, self.end, self.content)
    }
}

/// All MUS occurrences of `w`, sorted by start.
///
/// With `R_i` the longest repeated factor starting at `i`, the shortest
/// unique factor starting at `i` is `w[i..i+R_i]`; it is a MUS exactly when
/// its right trim is repeated, i.e. `R_{i+1} >= R_i`.
pub fn compute_mus(w: &Word) -> Result<Vec<MusOccurrence>> {
    if w.is_empty() {
        return Err(Error::EmptyWord("compute_mus"));
    }
    let n = w.len();
    let r = repeat_lengths(w.symbols());
    Ok((0..n)
        .filter(|&i| i + r[i] < n && (r[i] == 0 || r[i + 1] >= r[i]))
        .map(|i| MusOccurrence { start: i + 1, end: i + r[i] + 1, content: w.slice(i..i + r[i] + 1) })
        .collect())
}

/// All net occurrences of `w`, sorted by start. Only non-empty factors are
/// considered.
///
/// A repeated factor starting at `i` has a unique right extension only at
/// length `R_i`, and its left extension is unique iff `R_i >= R_{i-1}`.
pub fn compute_net_occurrences(w: &Word) -> Result<Vec<NetOccurrence>> {
    if w.is_empty() {
        return Err(Error::EmptyWord("compute_net_occurrences"));
    }
    let r = repeat_lengths(w.symbols());
    Ok((0..w.len())
        .filter(|&i| r[i] >= 1 && (i == 0 || r[i] >= r[i - 1]))
        .map(|i| NetOccurrence { start: i + 1, end: i + r[i] })
        .collect())
}

/// Net occurrences from the sorted MUS list:
/// `[1, j_1-1], [i_1+1, j_2-1], …, [i_m+1, n]`, dropping empty intervals.
pub fn mus_to_net(mus: &[MusOccurrence], n: usize) -> Result<Vec<NetOccurrence>> {
    if mus.is_empty() {
        return Err(Error::EmptyMusList);
    }
    let mut out = Vec::with_capacity(mus.len() + 1);
    let mut start = 1;
    for m in mus {
        out.push(NetOccurrence { start, end: m.end - 1 });
        start = m.start + 1;
    }
    out.push(NetOccurrence { start, end: n });
    out.retain(|o| o.end >= o.start);
    Ok(out)
}

/// Cubic reference implementations straight from the definitions.
pub mod naive {
    use super::*;

    fn count(w: &[u8], pat: &[u8]) -> usize {
        if pat.is_empty() {
            return w.len() + 1;
        }
        w.windows(pat.len()).filter(|x| *x == pat).count()
    }

    pub fn mus(w: &Word) -> Vec<MusOccurrence> {
        let s = w.symbols();
        let n = s.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                if count(s, &s[i..=j]) == 1 && count(s, &s[i + 1..=j]) >= 2 && count(s, &s[i..j]) >= 2 {
                    out.push(MusOccurrence { start: i + 1, end: j + 1, content: w.slice(i..j + 1) });
                }
            }
        }
        out
    }

    pub fn net_occurrences(w: &Word) -> Vec<NetOccurrence> {
        let s = w.symbols();
        let n = s.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                let repeated = count(s, &s[i..=j]) >= 2;
                let left_unique = i == 0 || count(s, &s[i - 1..=j]) == 1;
                let right_unique = j == n - 1 || count(s, &s[i..=j + 1]) == 1;
                if repeated && left_unique && right_unique {
                    out.push(NetOccurrence { start: i + 1, end: j + 1 });
                }
            }
        }
        out
    }
}

/// Result of [`verify_occurrence_preservation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreservationReport {
    /// `φ` is interference-free on `φ^i(u)` for every `0 <= i < k`.
    pub preconditions_hold: bool,
    /// Smallest `i` with `φ` not interference-free on `φ^i(u)`.
    pub first_failing_power: Option<usize>,
    pub occ_source: usize,
    pub occ_image: usize,
    /// `{|φ^k(v[1..p-1])| + 1 : p ∈ Occ_u(v)}` equals `Occ_{φ^k(u)}(φ^k(v))`.
    pub positions_correspond: bool,
}

impl PreservationReport {
    pub fn counts_equal(&self) -> bool {
        self.occ_source == self.occ_image
    }

    /// Whenever the preconditions hold, counts and positions are preserved.
    pub fn consistent(&self) -> bool {
        !self.preconditions_hold || (self.counts_equal() && self.positions_correspond)
    }
}

/// Compares `occ_u(v)` with `occ_{φ^k(u)}(φ^k(v))` and reports whether the
/// interference-freeness preconditions hold.
pub fn verify_occurrence_preservation(phi: &Morphism, u: &Word, v: &Word, k: usize) -> Result<PreservationReport> {
    let checker = InterferenceChecker::new(phi)?;
    verify_preservation_with(&checker, u, v, k)
}

pub fn verify_preservation_with(
    checker: &InterferenceChecker<'_>,
    u: &Word,
    v: &Word,
    k: usize,
) -> Result<PreservationReport> {
    PreservationCheck::new(checker, u, k)?.check(v, k)
}

/// The `u`-dependent half of [`verify_occurrence_preservation`]: the
/// interference-freeness of `φ^i(u)` and the images `φ^k(u)` are computed
/// once and reused for many `v`.
#[derive(Debug, Clone)]
pub struct PreservationCheck<'a> {
    phi: &'a Morphism,
    /// `powers[k] = φ^k(u)`.
    powers: Vec<Word>,
    first_failing_power: Option<usize>,
    lens: Vec<Vec<u128>>,
}

impl<'a> PreservationCheck<'a> {
    pub fn new(checker: &InterferenceChecker<'a>, u: &Word, k_max: usize) -> Result<Self> {
        let phi = checker.morphism();
        if k_max == 0 {
            return Err(Error::OutOfRange { what: "power k", value: 0, min: 1, max: usize::MAX });
        }
        if k_max >= 2 && !phi.is_endomorphism() {
            return Err(Error::NotEndomorphism);
        }
        let mut powers = vec![u.clone()];
        let mut first_failing_power = None;
        for i in 0..k_max {
            if first_failing_power.is_none() && !checker.decide(&powers[i])?.interference_free {
                first_failing_power = Some(i);
            }
            powers.push(phi.apply(&powers[i])?);
        }
        let lens = (0..=k_max).map(|k| phi.iterated_image_lengths(k)).collect::<Result<_>>()?;
        Ok(PreservationCheck { phi, powers, first_failing_power, lens })
    }

    /// Whether `φ` is interference-free on `φ^i(u)` for all `i < k`.
    pub fn preconditions_hold(&self, k: usize) -> bool {
        self.first_failing_power.is_none_or(|f| f >= k)
    }

    pub fn check(&self, v: &Word, k: usize) -> Result<PreservationReport> {
        let k_max = self.powers.len() - 1;
        if k == 0 || k > k_max {
            return Err(Error::OutOfRange { what: "power k", value: k, min: 1, max: k_max });
        }
        let u = &self.powers[0];
        let v_k = self.phi.iterate(v, k)?;
        let source = occurrences(u, v)?;
        let image = occurrences(&self.powers[k], &v_k)?;

        let lens = &self.lens[k];
        let mut prefix = Vec::with_capacity(v.len() + 1);
        prefix.push(0u128);
        for &c in v.symbols() {
            prefix.push(prefix.last().unwrap() + lens[c as usize]);
        }
        let mapped: Vec<usize> = source.positions.iter().map(|&p| prefix[p - 1] as usize + 1).collect();

        let first_failing_power = self.first_failing_power.filter(|&f| f < k);
        Ok(PreservationReport {
            preconditions_hold: first_failing_power.is_none(),
            first_failing_power,
            occ_source: source.len(),
            occ_image: image.len(),
            positions_correspond: mapped == image.positions,
        })
    }
}

/// One checked instance of a verification suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceReport {
    pub suite: &'static str,
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for InstanceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} {}: {}", self.suite, self.label, self.detail)
    }
}

fn check_range(what: &'static str, range: &RangeInclusive<usize>, min: usize, max: usize) -> Result<()> {
    for &v in [range.start(), range.end()] {
        if v < min || v > max {
            return Err(Error::OutOfRange { what, value: v, min, max });
        }
    }
    Ok(())
}

fn mus_contents(w: &Word) -> Result<BTreeSet<String>> {
    Ok(compute_mus(w)?.into_iter().map(|m| m.content.to_string()).collect())
}

fn show_set(s: &BTreeSet<String>) -> String {
    format!("{{{}}}", s.iter().cloned().collect::<Vec<_>>().join(","))
}

/// `α_i`: `a` for even `i`, `b` for odd `i`.
fn alpha(i: usize) -> Word {
    Word::binary(if i % 2 == 0 { "a" } else { "b" }).expect("binary")
}

/// Closed-form MUS set of `F_i`, `i >= 6`:
/// `{α_i G_{i-3} α_i, flip(α_i) G_{i-2} flip(α_i)}`.
pub fn fibonacci_mus_closed_form(i: usize) -> Result<BTreeSet<String>> {
    check_range("fibonacci MUS order", &(i..=i), 6, FIBONACCI_MAX_ORDER)?;
    let a = alpha(i);
    let b = flip(&a)?;
    let first = a.concat(&fibonacci_g(i - 3)?)?.concat(&a)?;
    let second = b.concat(&fibonacci_g(i - 2)?)?.concat(&b)?;
    Ok([first.to_string(), second.to_string()].into_iter().collect())
}

/// Closed-form MUS set of `tm_i`, `i >= 5`: `ext(tm_{i-3}) ∪ ext(flip(tm_{i-3}))`.
pub fn thue_morse_mus_closed_form(i: usize) -> Result<BTreeSet<String>> {
    check_range("thue-morse MUS order", &(i..=i), 5, THUE_MORSE_MAX_ORDER)?;
    let t = thue_morse_word(i - 3)?;
    let mut set = BTreeSet::new();
    for w in extensions(&t)?.into_iter().chain(extensions(&flip(&t)?)?) {
        set.insert(w.to_string());
    }
    Ok(set)
}

pub fn verify_fibonacci_mus(range: RangeInclusive<usize>) -> Result<Vec<InstanceReport>> {
    check_range("fibonacci MUS order", &range, 6, FIBONACCI_MAX_ORDER)?;
    range
        .map(|i| {
            let got = mus_contents(&fibonacci_word(i)?)?;
            let want = fibonacci_mus_closed_form(i)?;
            Ok(InstanceReport {
                suite: "fibonacci-mus",
                label: format!("i={i}"),
                passed: got == want,
                detail: format!("mus={} closed_form={}", show_set(&got), show_set(&want)),
            })
        })
        .collect()
}

pub fn verify_tm_mus(range: RangeInclusive<usize>) -> Result<Vec<InstanceReport>> {
    check_range("thue-morse MUS order", &range, 5, THUE_MORSE_MAX_ORDER)?;
    range
        .map(|i| {
            let got = mus_contents(&thue_morse_word(i)?)?;
            let want = thue_morse_mus_closed_form(i)?;
            Ok(InstanceReport {
                suite: "tm-mus",
                label: format!("i={i}"),
                passed: got == want && got.len() == 8,
                detail: format!("count={} matches_closed_form={}", got.len(), got == want),
            })
        })
        .collect()
}

fn intervals_of(u: &Word, w: &Word) -> Result<Vec<NetOccurrence>> {
    Ok(occurrences(u, w)?.intervals().map(|(start, end)| NetOccurrence { start, end }).collect())
}

/// Closed-form net occurrences of `F_i`, `i >= 7`: both occurrences of
/// `G_{i-1}` and the last occurrence of `F_{i-2}`.
pub fn fibonacci_net_closed_form(i: usize) -> Result<BTreeSet<NetOccurrence>> {
    check_range("fibonacci net-occurrence order", &(i..=i), 7, FIBONACCI_MAX_ORDER)?;
    let f = fibonacci_word(i)?;
    let mut set: BTreeSet<NetOccurrence> = intervals_of(&fibonacci_g(i - 1)?, &f)?.into_iter().collect();
    set.extend(intervals_of(&fibonacci_word(i - 2)?, &f)?.last().copied());
    Ok(set)
}

/// Closed-form net occurrences of `tm_i`, `i >= 5`: every occurrence of
/// `tm_{i-2}`, `flip(tm_{i-2})`, `tm_{i-4} flip(tm_{i-3})`, and
/// `flip(tm_{i-4}) tm_{i-3}`.
pub fn thue_morse_net_closed_form(i: usize) -> Result<BTreeSet<NetOccurrence>> {
    check_range("thue-morse net-occurrence order", &(i..=i), 5, THUE_MORSE_MAX_ORDER)?;
    let t = thue_morse_word(i)?;
    let t2 = thue_morse_word(i - 2)?;
    let t3 = thue_morse_word(i - 3)?;
    let t4 = thue_morse_word(i - 4)?;
    let words = [t2.clone(), flip(&t2)?, t4.concat(&flip(&t3)?)?, flip(&t4)?.concat(&t3)?];
    let mut set = BTreeSet::new();
    for u in &words {
        set.extend(intervals_of(u, &t)?);
    }
    Ok(set)
}

fn net_instance(suite: &'static str, i: usize, w: &Word, want: BTreeSet<NetOccurrence>) -> Result<InstanceReport> {
    let direct = compute_net_occurrences(w)?;
    let via_mus = mus_to_net(&compute_mus(w)?, w.len())?;
    let got: BTreeSet<NetOccurrence> = direct.iter().copied().collect();
    let dual = direct == via_mus;
    Ok(InstanceReport {
        suite,
        label: format!("i={i}"),
        passed: dual && got == want,
        detail: format!("net_occurrences={} mus_duality={} matches_closed_form={}", direct.len(), dual, got == want),
    })
}

/// Net-occurrence closed form and MUS duality on `F_i`.
pub fn verify_fibonacci_net(range: RangeInclusive<usize>) -> Result<Vec<InstanceReport>> {
    check_range("fibonacci net-occurrence order", &range, 7, FIBONACCI_MAX_ORDER)?;
    range.map(|i| net_instance("fibonacci-net", i, &fibonacci_word(i)?, fibonacci_net_closed_form(i)?)).collect()
}

/// Net-occurrence closed form and MUS duality on `tm_i`.
pub fn verify_tm_net(range: RangeInclusive<usize>) -> Result<Vec<InstanceReport>> {
    check_range("thue-morse net-occurrence order", &range, 5, THUE_MORSE_MAX_ORDER)?;
    range.map(|i| net_instance("tm-net", i, &thue_morse_word(i)?, thue_morse_net_closed_form(i)?)).collect()
}

/// Results of [`verify_occ_lemmas`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccLemmaReport {
    pub instances: Vec<InstanceReport>,
    /// `occ_{tm_2}(tm_5)` as counted.
    pub tm2_in_tm5: usize,
}

impl OccLemmaReport {
    pub fn passed(&self) -> bool {
        self.instances.iter().all(|r| r.passed)
    }
}

fn constancy(suite: &'static str, d: usize, counts: &[(usize, usize)]) -> InstanceReport {
    let constant = counts.windows(2).all(|p| p[0].1 == p[1].1);
    let listing: Vec<String> = counts.iter().map(|(i, c)| format!("{i}:{c}")).collect();
    InstanceReport { suite, label: format!("d={d}"), passed: constant, detail: format!("counts={}", listing.join(",")) }
}

/// Offset-constancy of occurrence counts:
/// `occ_{F_{i-d}}(F_i)` over `i-d >= 4`, `i <= fib_max`;
/// `occ_{tm_{i-d}}(tm_i)` and `occ_{flip(tm_{i-d})}(tm_i)` over `i-d >= 2`,
/// `i <= tm_max`; and `occ_{F_k^◁}(F_i) = occ_{F_k}(F_i)` for
/// `4 <= k <= i <= lpp_max`.
pub fn verify_occ_lemmas(fib_max: usize, tm_max: usize, lpp_max: usize) -> Result<OccLemmaReport> {
    check_range("fibonacci lemma order", &(fib_max..=fib_max), 4, FIBONACCI_MAX_ORDER)?;
    check_range("thue-morse lemma order", &(tm_max..=tm_max), 5, THUE_MORSE_MAX_ORDER)?;
    check_range("longest-proper-prefix order", &(lpp_max..=lpp_max), 4, FIBONACCI_MAX_ORDER)?;
    let fib: Vec<Word> = (0..=fib_max.max(lpp_max)).map(|i| fibonacci_word(i.max(1))).collect::<Result<_>>()?;
    let tm: Vec<Word> = (0..=tm_max).map(|i| thue_morse_word(i.max(1))).collect::<Result<_>>()?;

    let mut instances = Vec::new();
    for d in 0..=fib_max - 4 {
        let counts: Vec<(usize, usize)> =
            (d + 4..=fib_max).map(|i| Ok((i, occ_count(&fib[i - d], &fib[i])?))).collect::<Result<_>>()?;
        instances.push(constancy("fibonacci-offset", d, &counts));
    }
    for d in 0..=tm_max - 2 {
        let counts: Vec<(usize, usize)> =
            (d + 2..=tm_max).map(|i| Ok((i, occ_count(&tm[i - d], &tm[i])?))).collect::<Result<_>>()?;
        instances.push(constancy("tm-offset", d, &counts));
        let counts: Vec<(usize, usize)> =
            (d + 2..=tm_max).map(|i| Ok((i, occ_count(&flip(&tm[i - d])?, &tm[i])?))).collect::<Result<_>>()?;
        instances.push(constancy("tm-flip-offset", d, &counts));
    }
    for k in 4..=lpp_max {
        let lpp = longest_proper_prefix(&fib[k])?;
        let mut mismatches = Vec::new();
        for i in k..=lpp_max {
            let (short, full) = (occ_count(&lpp, &fib[i])?, occ_count(&fib[k], &fib[i])?);
            if short != full {
                let at_end = if lpp.is_suffix_of(&fib[i]) { ",suffix" } else { "" };
                mismatches.push(format!("i={i}:{short}/{full}{at_end}"));
            }
        }
        instances.push(InstanceReport {
            suite: "fibonacci-lpp",
            label: format!("k={k}"),
            passed: mismatches.is_empty(),
            detail: format!("i={k}..{lpp_max} mismatches=[{}]", mismatches.join(" ")),
        });
    }
    let tm2_in_tm5 = occ_count(&thue_morse_word(2)?, &thue_morse_word(5)?)?;
    Ok(OccLemmaReport { instances, tm2_in_tm5 })
}

/// Occurrence-preservation checks on the classic families: the four small
/// fixtures, then `u = tm_j`, `v = tm_i` under `μ` and `u = F_j`, `v = F_i`
/// (even `j`) under the Fibonacci morphism for `k = 1, 2`, with orders up to
/// `max_order`.
pub fn verify_occurrence_preservation_suite(max_order: usize) -> Result<Vec<InstanceReport>> {
    check_range("occurrence-preservation order", &(max_order..=max_order), 4, 16)?;
    let fib = fibonacci();
    let tm = crate::classic::thue_morse();
    let mut out = Vec::new();

    let fixtures: [(&Morphism, &str, &str, usize, usize, bool); 4] = [
        (&tm, "ab", "abaab", 2, 2, true),
        (&fib, "ab", "abaab", 2, 3, false),
        (&tm, "aa", "aabbb", 1, 2, false),
        (&fib, "aa", "aabbb", 1, 1, true),
    ];
    for (phi, u, v, want_src, want_img, want_if) in fixtures {
        let r = verify_occurrence_preservation(phi, &Word::binary(u)?, &Word::binary(v)?, 1)?;
        out.push(InstanceReport {
            suite: "occ-preserve",
            label: format!("phi={phi} u={u} v={v}"),
            passed: r.occ_source == want_src && r.occ_image == want_img && r.preconditions_hold == want_if,
            detail: format!("occ={} image_occ={} if={}", r.occ_source, r.occ_image, r.preconditions_hold),
        });
    }

    let families: [(&Morphism, &str, fn(usize) -> Result<Word>, usize); 2] =
        [(&tm, "tm", thue_morse_word, 2), (&fib, "fib", fibonacci_word, 4)];
    for (phi, name, gen, min_j) in families {
        let checker = InterferenceChecker::new(phi)?;
        for j in min_j..max_order {
            if name == "fib" && j % 2 == 1 {
                continue;
            }
            let u = gen(j)?;
            for i in j..=max_order {
                let v = gen(i)?;
                for k in 1..=2 {
                    let r = verify_preservation_with(&checker, &u, &v, k)?;
                    out.push(InstanceReport {
                        suite: "occ-preserve",
                        label: format!("{name} u={name}_{j} v={name}_{i} k={k}"),
                        passed: r.consistent(),
                        detail: format!(
                            "occ={} image_occ={} if={} positions={}",
                            r.occ_source, r.occ_image, r.preconditions_hold, r.positions_correspond
                        ),
                    });
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::binary(s).unwrap()
    }

    fn spans(v: &[MusOccurrence]) -> Vec<(usize, usize, String)> {
        v.iter().map(|m| (m.start, m.end, m.content.to_string())).collect()
    }

    fn nets(v: &[NetOccurrence]) -> Vec<(usize, usize)> {
        v.iter().map(|o| (o.start, o.end)).collect()
    }

    #[test]
    fn mus_examples() {
        assert_eq!(spans(&compute_mus(&w("abaababa")).unwrap()), [(3, 4, "aa".into()), (5, 7, "bab".into())]);
        assert_eq!(
            spans(&compute_mus(&w("abaababaabaab")).unwrap()),
            [(5, 7, "bab".into()), (8, 12, "aabaa".into())]
        );
        assert_eq!(spans(&compute_mus(&w("aaaa")).unwrap()), [(1, 4, "aaaa".into())]);
        assert!(compute_mus(&w("")).is_err());
    }

    #[test]
    fn net_examples() {
        assert_eq!(nets(&compute_net_occurrences(&w("abaababaabaab")).unwrap()), [(1, 6), (6, 11), (9, 13)]);
        assert!(compute_net_occurrences(&w("ab")).unwrap().is_empty());
        assert_eq!(nets(&compute_net_occurrences(&w("aa")).unwrap()), [(1, 1), (2, 2)]);
    }

    #[test]
    fn mus_to_net_examples() {
        let f7 = w("abaababaabaab");
        let mus = compute_mus(&f7).unwrap();
        assert_eq!(nets(&mus_to_net(&mus, 13).unwrap()), [(1, 6), (6, 11), (9, 13)]);
        let single = [MusOccurrence { start: 2, end: 4, content: w("bab") }];
        assert_eq!(nets(&mus_to_net(&single, 6).unwrap()), [(1, 3), (3, 6)]);
        assert_eq!(mus_to_net(&[], 4), Err(Error::EmptyMusList));
    }

    #[test]
    fn preservation_fixtures() {
        let tm = crate::classic::thue_morse();
        let fib = fibonacci();
        let r = verify_occurrence_preservation(&tm, &w("ab"), &w("abaab"), 1).unwrap();
        assert!(r.preconditions_hold && r.occ_source == 2 && r.occ_image == 2 && r.positions_correspond);
        let r = verify_occurrence_preservation(&fib, &w("ab"), &w("abaab"), 1).unwrap();
        assert!(!r.preconditions_hold);
        assert_eq!((r.occ_source, r.occ_image), (2, 3));
        let r = verify_occurrence_preservation(&tm, &w("aa"), &w("aabbb"), 1).unwrap();
        assert_eq!((r.preconditions_hold, r.occ_source, r.occ_image), (false, 1, 2));
        let r = verify_occurrence_preservation(&fib, &w("aa"), &w("aabbb"), 1).unwrap();
        assert_eq!((r.occ_source, r.occ_image), (1, 1));
        assert!(verify_occurrence_preservation(&tm, &w("ab"), &w("abaab"), 0).is_err());
    }

    #[test]
    fn uniform_positions_scale() {
        // For 2-uniform μ, p maps to 2^k (p - 1) + 1.
        let tm = crate::classic::thue_morse();
        let (u, v) = (w("abb"), w("abbabaabbaab"));
        for k in 1..=3 {
            let r = verify_occurrence_preservation(&tm, &u, &v, k).unwrap();
            assert!(r.preconditions_hold && r.positions_correspond && r.counts_equal());
            let src = occurrences(&u, &v).unwrap();
            let img = occurrences(&tm.iterate(&u, k).unwrap(), &tm.iterate(&v, k).unwrap()).unwrap();
            let scaled: Vec<usize> = src.positions.iter().map(|p| (1 << k) * (p - 1) + 1).collect();
            assert_eq!(scaled, img.positions);
        }
    }

    #[test]
    fn verify_range_errors() {
        assert!(verify_fibonacci_mus(5..=8).is_err());
        assert!(verify_tm_mus(4..=8).is_err());
        assert!(verify_fibonacci_mus(6..=10).unwrap().iter().all(|r| r.passed));
    }
}
