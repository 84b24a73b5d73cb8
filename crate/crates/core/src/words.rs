//! Alphabets, words, and the elementary operations on them: occurrences,
//! rotations, reversal, and the binary complement.
//!
//! All positions in the public API are 1-based. A word of length `n` has
//! positions `1..=n`; the factor `w[i..j]` is addressed by the inclusive
//! pair `(i, j)`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

/// Dense index of a symbol inside its alphabet.
pub type Symbol = u8;

const NO_SYMBOL: u8 = u8::MAX;

struct AlphabetInner {
    symbols: Vec<char>,
    ascii: [u8; 128],
}

/// An ordered alphabet of at most 255 distinct characters.
///
/// Cloning is cheap. Two alphabets compare equal when they list the same
/// characters in the same order.
#[derive(Clone)]
pub struct Alphabet(Arc<AlphabetInner>);

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(symbols: I) -> Result<Self> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() || symbols.len() >= NO_SYMBOL as usize {
            return Err(Error::AlphabetSize(symbols.len()));
        }
        let mut ascii = [NO_SYMBOL; 128];
        for (i, &c) in symbols.iter().enumerate() {
            if symbols[..i].contains(&c) {
                return Err(Error::DuplicateSymbol(c));
            }
            if c.is_ascii() {
                ascii[c as usize] = i as u8;
            }
        }
        Ok(Alphabet(Arc::new(AlphabetInner { symbols, ascii })))
    }

    /// The alphabet `{a, b}`.
    pub fn binary() -> Self {
        static BINARY: OnceLock<Alphabet> = OnceLock::new();
        BINARY
            .get_or_init(|| Alphabet::new(['a', 'b']).expect("valid alphabet"))
            .clone()
    }

    /// Alphabet made of the distinct characters of `text`, sorted.
    pub fn of_text(text: &str) -> Result<Self> {
        let mut chars: Vec<char> = text.chars().collect();
        chars.sort_unstable();
        chars.dedup();
        Alphabet::new(chars)
    }

    pub fn len(&self) -> usize {
        self.0.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_binary(&self) -> bool {
        self.len() == 2
    }

    pub fn symbols(&self) -> &[char] {
        &self.0.symbols
    }

    pub fn char_of(&self, s: Symbol) -> char {
        self.0.symbols[s as usize]
    }

    pub fn index_of(&self, c: char) -> Option<Symbol> {
        if c.is_ascii() {
            let i = self.0.ascii[c as usize];
            (i != NO_SYMBOL).then_some(i)
        } else {
            self.0.symbols.iter().position(|&x| x == c).map(|i| i as Symbol)
        }
    }

    /// `true` if every symbol of `self` also belongs to `other`.
    pub fn is_subset_of(&self, other: &Alphabet) -> bool {
        self.symbols().iter().all(|&c| other.index_of(c).is_some())
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.symbols == other.0.symbols
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.symbols().iter().collect();
        write!(f, "Alphabet({s:?})")
    }
}

/// A finite word over an [`Alphabet`].
#[derive(Clone, PartialEq, Eq)]
pub struct Word {
    alphabet: Alphabet,
    syms: Vec<Symbol>,
}

impl Word {
    pub fn empty(alphabet: &Alphabet) -> Self {
        Word { alphabet: alphabet.clone(), syms: Vec::new() }
    }

    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Self> {
        let syms = text
            .chars()
            .map(|c| alphabet.index_of(c).ok_or(Error::UnknownSymbol(c)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word { alphabet: alphabet.clone(), syms })
    }

    /// Parses a word over `{a, b}`.
    pub fn binary(text: &str) -> Result<Self> {
        Word::parse(&Alphabet::binary(), text)
    }

    pub fn from_symbols(alphabet: &Alphabet, syms: Vec<Symbol>) -> Result<Self> {
        if let Some(&bad) = syms.iter().find(|&&s| s as usize >= alphabet.len()) {
            return Err(Error::SymbolOutOfRange(bad));
        }
        Ok(Word { alphabet: alphabet.clone(), syms })
    }

    pub(crate) fn from_symbols_unchecked(alphabet: &Alphabet, syms: Vec<Symbol>) -> Self {
        debug_assert!(syms.iter().all(|&s| (s as usize) < alphabet.len()));
        Word { alphabet: alphabet.clone(), syms }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.syms
    }

    pub fn len(&self) -> usize {
        self.syms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syms.is_empty()
    }

    /// Symbol at 1-based position `i`.
    pub fn at(&self, i: usize) -> Symbol {
        self.syms[i - 1]
    }

    /// The factor `w[i..j]` (1-based, inclusive). `j = i - 1` gives ε.
    pub fn factor(&self, i: usize, j: usize) -> Word {
        assert!(i >= 1 && j + 1 >= i && j <= self.len(), "factor [{i},{j}] out of bounds");
        self.slice(i - 1..j)
    }

    pub(crate) fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word { alphabet: self.alphabet.clone(), syms: self.syms[range].to_vec() }
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.slice(0..len)
    }

    pub fn suffix(&self, len: usize) -> Word {
        self.slice(self.len() - len..self.len())
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        self.same_alphabet(other)?;
        let mut syms = Vec::with_capacity(self.len() + other.len());
        syms.extend_from_slice(&self.syms);
        syms.extend_from_slice(&other.syms);
        Ok(Word { alphabet: self.alphabet.clone(), syms })
    }

    pub(crate) fn same_alphabet(&self, other: &Word) -> Result<()> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    /// Re-expresses the word over `target`, matching symbols by character.
    pub fn rebase(&self, target: &Alphabet) -> Result<Word> {
        if &self.alphabet == target {
            return Ok(self.clone());
        }
        let map = self
            .alphabet
            .symbols()
            .iter()
            .map(|&c| target.index_of(c))
            .collect::<Vec<_>>();
        let syms = self
            .syms
            .iter()
            .map(|&s| map[s as usize].ok_or(Error::UnknownSymbol(self.alphabet.char_of(s))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word { alphabet: target.clone(), syms })
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.syms.starts_with(&self.syms)
    }

    pub fn is_suffix_of(&self, other: &Word) -> bool {
        other.syms.ends_with(&self.syms)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.syms {
            write!(f, "{}", self.alphabet.char_of(s))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.to_string())
    }
}

/// Sorted 1-based start positions of a pattern in a text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccurrenceSet {
    pub pattern_len: usize,
    pub positions: Vec<usize>,
}

impl OccurrenceSet {
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn contains(&self, p: usize) -> bool {
        self.positions.binary_search(&p).is_ok()
    }

    /// Inclusive intervals `[p, p + |u| - 1]`; for ε these are `[p, p - 1]`.
    pub fn intervals(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.positions.iter().map(move |&p| (p, p + self.pattern_len - 1))
    }
}

impl fmt::Display for OccurrenceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.positions.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Knuth–Morris–Pratt failure function: `fail[i]` is the length of the
/// longest proper border of `pattern[..=i]`.
fn borders(pattern: &[Symbol]) -> Vec<usize> {
    let mut fail = vec![0; pattern.len()];
    let mut k = 0;
    for i in 1..pattern.len() {
        while k > 0 && pattern[i] != pattern[k] {
            k = fail[k - 1];
        }
        if pattern[i] == pattern[k] {
            k += 1;
        }
        fail[i] = k;
    }
    fail
}

pub(crate) fn find_all(pattern: &[Symbol], text: &[Symbol]) -> Vec<usize> {
    if pattern.is_empty() {
        return (1..=text.len() + 1).collect();
    }
    let fail = borders(pattern);
    let mut out = Vec::new();
    let mut k = 0;
    for (i, &c) in text.iter().enumerate() {
        while k > 0 && c != pattern[k] {
            k = fail[k - 1];
        }
        if c == pattern[k] {
            k += 1;
        }
        if k == pattern.len() {
            out.push(i + 2 - k);
            k = fail[k - 1];
        }
    }
    out
}

/// All start positions of `u` in `w`. The empty word occurs `|w| + 1` times.
pub fn occurrences(u: &Word, w: &Word) -> Result<OccurrenceSet> {
    u.same_alphabet(w)?;
    Ok(OccurrenceSet { pattern_len: u.len(), positions: find_all(&u.syms, &w.syms) })
}

pub fn occ_count(u: &Word, w: &Word) -> Result<usize> {
    occurrences(u, w).map(|o| o.len())
}

/// Quadratic sliding-window reference for [`occurrences`].
pub fn naive_occurrences(u: &Word, w: &Word) -> Result<OccurrenceSet> {
    u.same_alphabet(w)?;
    let (n, m) = (w.len(), u.len());
    let positions = (0..=n.saturating_sub(m))
        .filter(|&i| m <= n && w.syms[i..i + m] == u.syms[..])
        .map(|i| i + 1)
        .collect();
    Ok(OccurrenceSet { pattern_len: m, positions })
}

/// The rotation starting at 1-based position `i`.
pub fn rotation(w: &Word, i: usize) -> Word {
    let mut syms = Vec::with_capacity(w.len());
    syms.extend_from_slice(&w.syms[i - 1..]);
    syms.extend_from_slice(&w.syms[..i - 1]);
    Word { alphabet: w.alphabet.clone(), syms }
}

/// The multiset of all `|w|` rotations, in order of starting position.
pub fn rotations(w: &Word) -> Result<Vec<Word>> {
    if w.is_empty() {
        return Err(Error::EmptyWord("rotations"));
    }
    Ok((1..=w.len()).map(|i| rotation(w, i)).collect())
}

/// Letterwise complement `a <-> b` of a binary word.
pub fn flip(w: &Word) -> Result<Word> {
    if !w.alphabet.is_binary() {
        return Err(Error::NonBinaryAlphabet("flip"));
    }
    let syms = w.syms.iter().map(|&s| 1 - s).collect();
    Ok(Word { alphabet: w.alphabet.clone(), syms })
}

pub fn reverse(w: &Word) -> Word {
    let mut syms = w.syms.clone();
    syms.reverse();
    Word { alphabet: w.alphabet.clone(), syms }
}

/// `w[1..|w|-1]`, defined for `|w| >= 2`.
pub fn longest_proper_prefix(w: &Word) -> Result<Word> {
    if w.len() < 2 {
        return Err(Error::WordTooShort { op: "longest_proper_prefix", min: 2, len: w.len() });
    }
    Ok(w.prefix(w.len() - 1))
}
