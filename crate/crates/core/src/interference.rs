//! Deciding whether a morphism is interference-free on a word.
//!
//! `φ` is interference-free on `{u}` when `φ(u)` has no interfered image
//! factorization `x·y·z` (proper image suffix, concatenation of images,
//! proper image prefix, `x·z ≠ ε`) and is not an inner image factor.
//!
//! The decision runs in `O(m + n + occ)` expected time: one Aho–Corasick
//! scan of `φ(u)` and one of its reversal feed a left-to-right reachability
//! table over prefixes, see [`FactorizableTable`].

use std::fmt;

use crate::error::{Error, Result};
use crate::matcher::{ImageScanner, ScanResult};
use crate::morphisms::Morphism;
use crate::words::{reverse, Symbol, Word};

/// An interfered factorization `x·y·z` of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterferedFactorization {
    /// Proper suffix of `φ(donor_x)`, possibly empty.
    pub x: Word,
    pub donor_x: Option<Symbol>,
    /// Source word whose image is `y`.
    pub y_source: Word,
    /// Proper prefix of `φ(donor_z)`, possibly empty.
    pub z: Word,
    pub donor_z: Option<Symbol>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InterferenceWitness {
    Interfered(InterferedFactorization),
    /// The word sits strictly inside `φ(host)`, starting at the 1-based
    /// `offset`, touching neither end.
    Inner { host: Symbol, offset: usize },
}

impl InterferedFactorization {
    /// `x·φ(y_source)·z`.
    pub fn assemble(&self, phi: &Morphism) -> Result<Word> {
        let y = phi.apply(&self.y_source)?;
        self.x.concat(&y)?.concat(&self.z)
    }

    /// Checks the structural invariants against `w`.
    pub fn is_valid_for(&self, phi: &Morphism, w: &Word) -> bool {
        let proper_suffix = |x: &Word, d: Option<Symbol>| match d {
            None => x.is_empty(),
            Some(c) => x.len() < phi.image(c).len() && x.is_suffix_of(phi.image(c)),
        };
        let proper_prefix = |z: &Word, d: Option<Symbol>| match d {
            None => z.is_empty(),
            Some(c) => z.len() < phi.image(c).len() && z.is_prefix_of(phi.image(c)),
        };
        let x_ok = self.x.is_empty() || proper_suffix(&self.x, self.donor_x);
        let z_ok = self.z.is_empty() || proper_prefix(&self.z, self.donor_z);
        x_ok && z_ok
            && !(self.x.is_empty() && self.z.is_empty())
            && self.assemble(phi).map(|a| &a == w).unwrap_or(false)
    }

    pub fn describe(&self, phi: &Morphism) -> String {
        let show = |w: &Word| if w.is_empty() { ".".to_string() } else { w.to_string() };
        let y = phi.apply(&self.y_source).map(|y| show(&y)).unwrap_or_default();
        format!("x={} y={} z={}", show(&self.x), y, show(&self.z))
    }
}

impl InterferenceWitness {
    pub fn is_valid_for(&self, phi: &Morphism, w: &Word) -> bool {
        match self {
            InterferenceWitness::Interfered(f) => f.is_valid_for(phi, w),
            InterferenceWitness::Inner { host, offset } => {
                let img = phi.image(*host);
                *offset >= 2
                    && offset + w.len() <= img.len()
                    && img.symbols()[offset - 1..offset - 1 + w.len()] == *w.symbols()
            }
        }
    }

    pub fn describe(&self, phi: &Morphism) -> String {
        match self {
            InterferenceWitness::Interfered(f) => f.describe(phi),
            InterferenceWitness::Inner { host, offset } => {
                format!("inner host={} offset={}", phi.source().char_of(*host), offset)
            }
        }
    }
}

/// Reachability table of `factorizable`: `C[j]` holds iff `w[1..j] = x·y`
/// with `x` a possibly empty proper image suffix and `y` a concatenation of
/// images. Index 0 is the empty prefix and always holds.
///
/// Each reachable entry keeps the shortest `x` that reaches it and a back
/// pointer, so a decomposition can be replayed.
#[derive(Debug, Clone)]
pub struct FactorizableTable {
    x_len: Vec<u32>,
    back: Vec<Back>,
}

#[derive(Debug, Clone, Copy)]
enum Back {
    Unreached,
    Origin,
    Seed(Symbol),
    Image { from: u32, symbol: Symbol },
}

const UNREACHED: u32 = u32::MAX;

impl FactorizableTable {
    fn build(scan: &ScanResult, scanner: &ImageScanner) -> Self {
        let n = scan.text_len();
        let mut x_len = vec![UNREACHED; n + 1];
        let mut back = vec![Back::Unreached; n + 1];
        x_len[0] = 0;
        back[0] = Back::Origin;
        for &(i, c) in &scan.p_pref {
            if (i as u32) < x_len[i] {
                x_len[i] = i as u32;
                back[i] = Back::Seed(c);
            }
        }
        for i in 1..=n {
            let from = i - 1;
            if x_len[from] == UNREACHED {
                continue;
            }
            for &c in scan.starting_at(i) {
                let to = from + scanner.image_len(c);
                if to <= n && x_len[from] < x_len[to] {
                    x_len[to] = x_len[from];
                    back[to] = Back::Image { from: from as u32, symbol: c };
                }
            }
        }
        FactorizableTable { x_len, back }
    }

    /// `C[j]`.
    pub fn reachable(&self, j: usize) -> bool {
        self.x_len[j] != UNREACHED
    }

    pub fn len(&self) -> usize {
        self.x_len.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Length of `x` and the image symbols of `y` for a reachable prefix.
    fn decompose(&self, mut j: usize) -> (usize, Option<Symbol>, Vec<Symbol>) {
        let mut y = Vec::new();
        loop {
            match self.back[j] {
                Back::Origin => return (0, None, reversed(y)),
                Back::Seed(c) => return (j, Some(c), reversed(y)),
                Back::Image { from, symbol } => {
                    y.push(symbol);
                    j = from as usize;
                }
                Back::Unreached => unreachable!("decompose on unreachable prefix"),
            }
        }
    }
}

fn reversed(mut v: Vec<Symbol>) -> Vec<Symbol> {
    v.reverse();
    v
}

/// Raw pass result, in the coordinates of the scanned text.
struct PassHit {
    x_len: usize,
    donor_x: Option<Symbol>,
    y: Vec<Symbol>,
    /// 1-based start of `z`.
    z_start: usize,
    donor_z: Symbol,
}

/// One `factorizable` pass: finds `x·y·z` with `z` non-empty. Among all
/// accepting splits, the one with the shortest `x`, then the leftmost `z`.
fn factorizable_pass(scanner: &ImageScanner, text: &[Symbol]) -> Option<PassHit> {
    let scan = scanner.scan_symbols(text);
    let table = FactorizableTable::build(&scan, scanner);
    let (j, donor_z) = scan
        .p_suf
        .iter()
        .filter(|&&(j, _)| table.reachable(j - 1))
        .min_by_key(|&&(j, _)| (table.x_len[j - 1], j))
        .copied()?;
    let (x_len, donor_x, y) = table.decompose(j - 1);
    Some(PassHit { x_len, donor_x, y, z_start: j, donor_z })
}

/// Whether `w = x·y·z` with `x` a possibly empty proper image suffix, `y` a
/// concatenation of images and `z` a non-empty proper image prefix.
pub fn factorizable(phi: &Morphism, w: &Word) -> Result<Option<InterferedFactorization>> {
    if w.is_empty() {
        return Err(Error::EmptyWord("factorizable"));
    }
    if w.alphabet() != phi.target() {
        return Err(Error::AlphabetMismatch);
    }
    let scanner = ImageScanner::new(phi)?;
    Ok(factorizable_pass(&scanner, w.symbols()).map(|hit| forward_witness(phi, w, hit)))
}

/// The reachability table itself, for inspection.
pub fn factorizable_table(phi: &Morphism, w: &Word) -> Result<FactorizableTable> {
    if w.alphabet() != phi.target() {
        return Err(Error::AlphabetMismatch);
    }
    let scanner = ImageScanner::new(phi)?;
    let scan = scanner.scan(w);
    Ok(FactorizableTable::build(&scan, &scanner))
}

fn forward_witness(phi: &Morphism, w: &Word, hit: PassHit) -> InterferedFactorization {
    InterferedFactorization {
        x: w.prefix(hit.x_len),
        donor_x: hit.donor_x,
        y_source: Word::from_symbols_unchecked(phi.source(), hit.y),
        z: w.suffix(w.len() + 1 - hit.z_start),
        donor_z: Some(hit.donor_z),
    }
}

/// Maps a hit on `w^R` under `φ^R` back to a factorization of `w`.
fn backward_witness(phi: &Morphism, w: &Word, hit: PassHit) -> InterferedFactorization {
    let n = w.len();
    let z_rev_len = n + 1 - hit.z_start;
    InterferedFactorization {
        x: w.prefix(z_rev_len),
        donor_x: Some(hit.donor_z),
        y_source: Word::from_symbols_unchecked(phi.source(), reversed(hit.y)),
        z: w.suffix(hit.x_len),
        donor_z: hit.donor_x,
    }
}

/// Host symbol and 1-based offset of an occurrence of `w` strictly inside
/// some image, touching neither end.
pub fn is_inner_image_factor(phi: &Morphism, w: &Word) -> Result<Option<(Symbol, usize)>> {
    if w.is_empty() {
        return Err(Error::EmptyWord("is_inner_image_factor"));
    }
    if w.alphabet() != phi.target() {
        return Err(Error::AlphabetMismatch);
    }
    let pat = w.symbols();
    for (c, img) in phi.images().iter().enumerate() {
        let img = img.symbols();
        if img.len() < pat.len() + 2 {
            continue;
        }
        if let Some(off) = (1..=img.len() - pat.len() - 1).find(|&s| img[s..s + pat.len()] == *pat) {
            return Ok(Some((c as Symbol, off + 1)));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IfOptions {
    /// Run on non-injective morphisms instead of rejecting them. Decisions
    /// made this way are flagged.
    pub allow_non_injective: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IfDecision {
    pub interference_free: bool,
    pub witness: Option<InterferenceWitness>,
    /// Set when the morphism was not injective and the check ran anyway.
    pub precondition_violated: bool,
}

/// Decides interference-freeness of `φ` on many words, reusing the automata.
#[derive(Debug, Clone)]
pub struct InterferenceChecker<'a> {
    phi: &'a Morphism,
    forward: ImageScanner,
    backward: ImageScanner,
    precondition_violated: bool,
}

impl<'a> InterferenceChecker<'a> {
    pub fn new(phi: &'a Morphism) -> Result<Self> {
        Self::with_options(phi, IfOptions::default())
    }

    pub fn with_options(phi: &'a Morphism, opts: IfOptions) -> Result<Self> {
        let injective = phi.is_injective();
        if !injective && !opts.allow_non_injective {
            phi.require_injective()?;
        }
        let forward = ImageScanner::new(phi)?;
        let backward = forward.reversed();
        Ok(InterferenceChecker { phi, forward, backward, precondition_violated: !injective })
    }

    pub fn morphism(&self) -> &'a Morphism {
        self.phi
    }

    pub fn decide(&self, u: &Word) -> Result<IfDecision> {
        if u.is_empty() {
            return Err(Error::EmptyWord("is_interference_free_on"));
        }
        let w = self.phi.apply(u)?;
        Ok(self.decide_image(&w))
    }

    /// Decision on an already computed image `w = φ(u)`.
    pub fn decide_image(&self, w: &Word) -> IfDecision {
        let fwd = factorizable_pass(&self.forward, w.symbols()).map(|h| forward_witness(self.phi, w, h));
        let rev = reverse(w);
        let bwd = factorizable_pass(&self.backward, rev.symbols()).map(|h| backward_witness(self.phi, w, h));
        let witness = match (fwd, bwd) {
            (Some(f), Some(b)) if b.x.len() < f.x.len() => Some(b),
            (Some(f), _) => Some(f),
            (None, b) => b,
        }
        .map(InterferenceWitness::Interfered)
        .or_else(|| {
            is_inner_image_factor(self.phi, w)
                .expect("non-empty image word")
                .map(|(host, offset)| InterferenceWitness::Inner { host, offset })
        });
        IfDecision {
            interference_free: witness.is_none(),
            witness,
            precondition_violated: self.precondition_violated,
        }
    }
}

/// Decides whether `φ` is interference-free on `{u}`.
pub fn is_interference_free_on(phi: &Morphism, u: &Word) -> Result<IfDecision> {
    InterferenceChecker::new(phi)?.decide(u)
}

/// Interference-freeness on a finite language: the first failing member, if
/// any, with its decision.
pub fn is_interference_free_on_all<'w, I>(phi: &Morphism, language: I) -> Result<Option<(Word, IfDecision)>>
where
    I: IntoIterator<Item = &'w Word>,
{
    let checker = InterferenceChecker::new(phi)?;
    for u in language {
        let d = checker.decide(u)?;
        if !d.interference_free {
            return Ok(Some((u.clone(), d)));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrongIf {
    StronglyInterferenceFree,
    /// The first source symbol, in alphabet order, on which `φ` interferes.
    Fails { symbol: Symbol, witness: InterferenceWitness },
}

impl StrongIf {
    pub fn holds(&self) -> bool {
        matches!(self, StrongIf::StronglyInterferenceFree)
    }
}

/// Strong interference-freeness, checked on the single-symbol words.
pub fn is_strongly_interference_free(phi: &Morphism) -> Result<StrongIf> {
    let checker = InterferenceChecker::new(phi)?;
    for c in 0..phi.source().len() {
        let u = Word::from_symbols_unchecked(phi.source(), vec![c as Symbol]);
        let d = checker.decide(&u)?;
        if let Some(witness) = d.witness {
            return Ok(StrongIf::Fails { symbol: c as Symbol, witness });
        }
    }
    Ok(StrongIf::StronglyInterferenceFree)
}

/// Default length cap for [`barrier_certificate`].
pub const DEFAULT_BARRIER_CAP: usize = 8;

/// Shortest prefix `b_L` and shortest suffix `b_R` of `u`, each of length at
/// most `cap`, on which `φ` is interference-free. Such a pair certifies that
/// `φ` is interference-free on `u`; `None` is inconclusive.
pub fn barrier_certificate(phi: &Morphism, u: &Word, cap: usize) -> Result<Option<(Word, Word)>> {
    if u.is_empty() {
        return Err(Error::EmptyWord("barrier_certificate"));
    }
    let checker = InterferenceChecker::new(phi)?;
    let limit = cap.min(u.len());
    let mut left = None;
    for len in 1..=limit {
        let b = u.prefix(len);
        if checker.decide(&b)?.interference_free {
            left = Some(b);
            break;
        }
    }
    let Some(left) = left else { return Ok(None) };
    for len in 1..=limit {
        let b = u.suffix(len);
        if checker.decide(&b)?.interference_free {
            return Ok(Some((left, b)));
        }
    }
    Ok(None)
}

impl fmt::Display for IfDecision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.interference_free { "IF" } else { "NOT-IF" })
    }
}
