//! Brute-force factorization enumerators and the bounded recognizability
//! decision.
//!
//! Everything here works by direct slice comparison against the images and
//! shares no code with the automaton-based decision in
//! [`crate::interference`], which it exists to certify.

use std::env;

use crate::error::{Error, Result};
use crate::interference::{InterferedFactorization, InterferenceWitness};
use crate::morphisms::Morphism;
use crate::words::{rotation, Symbol, Word};

/// Limits for the materializing enumerators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_len: usize,
    pub max_count: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_len: 64, max_count: 100_000 }
    }
}

impl Budget {
    /// Environment variable overriding the defaults, e.g.
    /// `max_len=128,max_count=1000000`.
    pub const ENV: &'static str = "MORPHLAB_BUDGET";

    pub fn parse(spec: &str) -> Result<Self> {
        let mut b = Budget::default();
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::BudgetExceeded(format!("malformed budget entry {part:?}")))?;
            let v: usize = v
                .trim()
                .parse()
                .map_err(|_| Error::BudgetExceeded(format!("malformed budget value {v:?}")))?;
            match k.trim() {
                "max_len" => b.max_len = v,
                "max_count" => b.max_count = v,
                other => return Err(Error::BudgetExceeded(format!("unknown budget key {other:?}"))),
            }
        }
        Ok(b)
    }

    pub fn from_env() -> Result<Self> {
        match env::var(Self::ENV) {
            Ok(s) => Budget::parse(&s),
            Err(_) => Ok(Budget::default()),
        }
    }

    fn check_len(&self, w: &Word) -> Result<()> {
        if w.len() > self.max_len {
            return Err(Error::BudgetExceeded(format!("word length {} > {}", w.len(), self.max_len)));
        }
        Ok(())
    }

    fn check_count(&self, count: usize) -> Result<()> {
        if count > self.max_count {
            return Err(Error::BudgetExceeded(format!("more than {} factorizations", self.max_count)));
        }
        Ok(())
    }
}

fn images_of(phi: &Morphism) -> Vec<&[Symbol]> {
    phi.images().iter().map(Word::symbols).collect()
}

/// Number of image factorizations of `text[start..]` ending at each index,
/// saturating.
fn factorization_counts(imgs: &[&[Symbol]], text: &[Symbol], start: usize) -> Vec<u64> {
    let n = text.len();
    let mut count = vec![0u64; n + 1];
    count[start] = 1;
    for i in start..n {
        if count[i] == 0 {
            continue;
        }
        for img in imgs {
            if !img.is_empty() && text[i..].starts_with(img) {
                count[i + img.len()] = count[i + img.len()].saturating_add(count[i]);
            }
        }
    }
    count
}

/// All ways to write `text` as a concatenation of images, as source-symbol
/// sequences in lexicographic order.
fn decompositions(imgs: &[&[Symbol]], text: &[Symbol], budget: &Budget) -> Result<Vec<Vec<Symbol>>> {
    if imgs.iter().any(|x| x.is_empty()) {
        return Err(Error::BudgetExceeded("erasing morphisms have infinitely many factorizations".into()));
    }
    let n = text.len();
    // suffix_ok[i]: text[i..] factors at all, to prune the backtracking.
    let mut suffix_ok = vec![false; n + 1];
    suffix_ok[n] = true;
    for i in (0..n).rev() {
        suffix_ok[i] = imgs.iter().any(|x| text[i..].starts_with(x) && suffix_ok[i + x.len()]);
    }
    let mut out = Vec::new();
    if !suffix_ok[0] {
        return Ok(out);
    }
    fn walk(
        imgs: &[&[Symbol]],
        text: &[Symbol],
        ok: &[bool],
        i: usize,
        acc: &mut Vec<Symbol>,
        out: &mut Vec<Vec<Symbol>>,
        budget: &Budget,
    ) -> Result<()> {
        if i == text.len() {
            out.push(acc.clone());
            return budget.check_count(out.len());
        }
        for (c, x) in imgs.iter().enumerate() {
            if text[i..].starts_with(x) && ok[i + x.len()] {
                acc.push(c as Symbol);
                walk(imgs, text, ok, i + x.len(), acc, out, budget)?;
                acc.pop();
            }
        }
        Ok(())
    }
    walk(imgs, text, &suffix_ok, 0, &mut Vec::new(), &mut out, budget)?;
    Ok(out)
}

/// Every image factorization of `w`, as source words.
pub fn enumerate_image_factorizations(phi: &Morphism, w: &Word, budget: &Budget) -> Result<Vec<Word>> {
    budget.check_len(w)?;
    if w.alphabet() != phi.target() {
        return Err(Error::AlphabetMismatch);
    }
    Ok(decompositions(&images_of(phi), w.symbols(), budget)?
        .into_iter()
        .map(|s| Word::from_symbols_unchecked(phi.source(), s))
        .collect())
}

/// Number of image factorizations of `w` (saturating).
pub fn count_image_factorizations(phi: &Morphism, w: &Word) -> Result<u64> {
    if w.alphabet() != phi.target() {
        return Err(Error::AlphabetMismatch);
    }
    if !phi.is_non_erasing() {
        return Ok(u64::MAX);
    }
    Ok(factorization_counts(&images_of(phi), w.symbols(), 0)[w.len()])
}

fn proper_suffix_donor(imgs: &[&[Symbol]], x: &[Symbol]) -> Option<Symbol> {
    imgs.iter().position(|img| x.len() < img.len() && img.ends_with(x)).map(|c| c as Symbol)
}

fn proper_prefix_donor(imgs: &[&[Symbol]], z: &[Symbol]) -> Option<Symbol> {
    imgs.iter().position(|img| z.len() < img.len() && img.starts_with(z)).map(|c| c as Symbol)
}

/// Every interfered factorization `x·y·z` of `w`, ordered by `|x|`, then
/// `|z|`, then the source word of `y`.
pub fn enumerate_interfered_factorizations(
    phi: &Morphism,
    w: &Word,
    budget: &Budget,
) -> Result<Vec<InterferedFactorization>> {
    if w.is_empty() {
        return Err(Error::EmptyWord("enumerate_interfered_factorizations"));
    }
    budget.check_len(w)?;
    if w.alphabet() != phi.target() {
        return Err(Error::AlphabetMismatch);
    }
    let imgs = images_of(phi);
    let text = w.symbols();
    let n = text.len();
    let mut out = Vec::new();
    for a in 0..=n {
        let donor_x = if a == 0 { None } else { proper_suffix_donor(&imgs, &text[..a]) };
        if a > 0 && donor_x.is_none() {
            continue;
        }
        for b in 0..=n - a {
            if a + b == 0 {
                continue;
            }
            let donor_z = if b == 0 { None } else { proper_prefix_donor(&imgs, &text[n - b..]) };
            if b > 0 && donor_z.is_none() {
                continue;
            }
            for y in decompositions(&imgs, &text[a..n - b], budget)? {
                out.push(InterferedFactorization {
                    x: w.prefix(a),
                    donor_x,
                    y_source: Word::from_symbols_unchecked(phi.source(), y),
                    z: w.suffix(b),
                    donor_z,
                });
                budget.check_count(out.len())?;
            }
        }
    }
    Ok(out)
}

/// `w` is a proper factor of some image and neither a prefix nor a suffix of
/// that image. Returns the host symbol.
pub fn inner_image_host(phi: &Morphism, w: &Word) -> Option<Symbol> {
    let pat = w.symbols();
    images_of(phi)
        .iter()
        .position(|img| {
            pat.len() < img.len()
                && img.windows(pat.len()).any(|win| win == pat)
                && !img.starts_with(pat)
                && !img.ends_with(pat)
        })
        .map(|c| c as Symbol)
}

/// Reference decision for interference-freeness on `{u}` straight from the
/// definition. Returns the first witness found, if any.
pub fn brute_force_interference(phi: &Morphism, u: &Word, budget: &Budget) -> Result<Option<InterferenceWitness>> {
    if u.is_empty() {
        return Err(Error::EmptyWord("brute_force_interference"));
    }
    let w = phi.apply(u)?;
    if let Some(f) = enumerate_interfered_factorizations(phi, &w, budget)?.into_iter().next() {
        return Ok(Some(InterferenceWitness::Interfered(f)));
    }
    Ok(inner_image_host(phi, &w).map(|host| {
        let img = phi.image(host).symbols();
        let offset = (1..img.len()).find(|&s| img[s..].starts_with(w.symbols())).expect("inner occurrence") + 1;
        InterferenceWitness::Inner { host, offset }
    }))
}

/// A circular image factorization `w = q·r·p` with `p·q = φ(split_symbol)`
/// and `p ≠ ε`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircularFactorization {
    pub q: Word,
    pub r_source: Word,
    pub p: Word,
    pub split_symbol: Symbol,
}

impl CircularFactorization {
    pub fn assemble(&self, phi: &Morphism) -> Result<Word> {
        self.q.concat(&phi.apply(&self.r_source)?)?.concat(&self.p)
    }
}

/// Candidate wraps `(split symbol, |p|)` for `w`: `q` a prefix of `w`, `p` a
/// suffix, not overlapping.
fn wraps<'a>(imgs: &'a [&'a [Symbol]], text: &'a [Symbol]) -> impl Iterator<Item = (usize, usize)> + 'a {
    let n = text.len();
    imgs.iter().enumerate().flat_map(move |(c, img)| {
        (1..=img.len()).filter_map(move |t| {
            let (p, q) = img.split_at(t);
            (p.len() + q.len() <= n && text.starts_with(q) && text.ends_with(p)).then_some((c, t))
        })
    })
}

/// Every circular image factorization of `w`.
pub fn enumerate_circular_factorizations(
    phi: &Morphism,
    w: &Word,
    budget: &Budget,
) -> Result<Vec<CircularFactorization>> {
    if w.is_empty() {
        return Err(Error::EmptyWord("enumerate_circular_factorizations"));
    }
    budget.check_len(w)?;
    if w.alphabet() != phi.target() {
        return Err(Error::AlphabetMismatch);
    }
    let imgs = images_of(phi);
    let text = w.symbols();
    let n = text.len();
    let mut out = Vec::new();
    for (c, t) in wraps(&imgs, text) {
        let q_len = imgs[c].len() - t;
        for r in decompositions(&imgs, &text[q_len..n - t], budget)? {
            out.push(CircularFactorization {
                q: w.prefix(q_len),
                r_source: Word::from_symbols_unchecked(phi.source(), r),
                p: w.suffix(t),
                split_symbol: c as Symbol,
            });
            budget.check_count(out.len())?;
        }
    }
    Ok(out)
}

/// Number of circular image factorizations of `w` (saturating), without
/// materializing them.
pub fn count_circular_factorizations(phi: &Morphism, w: &Word) -> Result<u64> {
    if w.alphabet() != phi.target() {
        return Err(Error::AlphabetMismatch);
    }
    if !phi.is_non_erasing() {
        return Ok(u64::MAX);
    }
    let imgs = images_of(phi);
    let text = w.symbols();
    let n = text.len();
    let mut by_q_len: Vec<Option<Vec<u64>>> = vec![None; phi.max_image_len() + 1];
    let mut total = 0u64;
    for (c, t) in wraps(&imgs, text) {
        let q_len = imgs[c].len() - t;
        let counts = by_q_len[q_len].get_or_insert_with(|| factorization_counts(&imgs, text, q_len));
        total = total.saturating_add(counts[n - t]);
    }
    Ok(total)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognizability {
    Recognizable,
    /// A rotation of `φ(u)` with zero or several circular factorizations.
    NotRecognizable { rotation: Word, count: u64 },
}

impl Recognizability {
    pub fn holds(&self) -> bool {
        matches!(self, Recognizability::Recognizable)
    }
}

/// Every rotation of `φ(u)` has exactly one circular image factorization.
pub fn is_recognizable_on(phi: &Morphism, u: &Word) -> Result<Recognizability> {
    phi.require_injective()?;
    recognizability_unchecked(phi, u)
}

/// [`is_recognizable_on`] without the injectivity precondition.
pub fn recognizability_unchecked(phi: &Morphism, u: &Word) -> Result<Recognizability> {
    if u.is_empty() {
        return Err(Error::EmptyWord("is_recognizable_on"));
    }
    let w = phi.apply(u)?;
    if w.is_empty() {
        return Ok(Recognizability::NotRecognizable { rotation: w, count: 0 });
    }
    // Non-trivial shifts first; the unshifted word comes last.
    for i in (2..=w.len()).chain(1..=1) {
        let rot = rotation(&w, i);
        let count = count_circular_factorizations(phi, &rot)?;
        if count != 1 {
            return Ok(Recognizability::NotRecognizable { rotation: rot, count });
        }
    }
    Ok(Recognizability::Recognizable)
}
