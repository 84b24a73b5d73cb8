//! Morphisms between free monoids: parsing, application, iteration, and
//! structural predicates.
//!
//! A morphism is stored as one image word per source symbol. The text form
//! is `a->ab;b->a`, with `.` standing for the empty image.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::words::{reverse, Alphabet, Symbol, Word};

/// Outcome of the injectivity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Injectivity {
    Injective,
    /// Two distinct source words with the same image. The pair is the
    /// smallest by total length, then lexicographically by `(left, right)`.
    NotInjective { left: Word, right: Word },
}

impl Injectivity {
    pub fn is_injective(&self) -> bool {
        matches!(self, Injectivity::Injective)
    }
}

#[derive(Clone)]
pub struct Morphism {
    source: Alphabet,
    target: Alphabet,
    images: Vec<Word>,
    non_erasing: bool,
    uniform_length: Option<usize>,
    injectivity: OnceLock<Injectivity>,
}

/// The distinct images of a morphism together with `m`, the summed image
/// length taken over every source symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageSet {
    pub images: Vec<Word>,
    pub total_length: usize,
}

impl Morphism {
    /// Builds a morphism from one image per source symbol, in alphabet order.
    pub fn new(source: Alphabet, target: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::MorphismSyntax(format!(
                "expected {} images, got {}",
                source.len(),
                images.len()
            )));
        }
        if images.iter().any(|x| x.alphabet() != &target) {
            return Err(Error::AlphabetMismatch);
        }
        let non_erasing = images.iter().all(|x| !x.is_empty());
        let first = images[0].len();
        let uniform_length = images.iter().all(|x| x.len() == first).then_some(first);
        Ok(Morphism { source, target, images, non_erasing, uniform_length, injectivity: OnceLock::new() })
    }

    /// Builds a morphism from `(symbol, image)` pairs. The source alphabet
    /// follows the order of `rules`; the target alphabet is the source
    /// alphabet extended by any further image characters in order of first
    /// appearance.
    pub fn from_rules(rules: &[(char, &str)]) -> Result<Self> {
        let source = Alphabet::new(rules.iter().map(|&(c, _)| c))?;
        let mut target_chars: Vec<char> = source.symbols().to_vec();
        for &(_, img) in rules {
            for c in img.chars() {
                if !target_chars.contains(&c) {
                    target_chars.push(c);
                }
            }
        }
        let target = if target_chars.len() == source.len() {
            source.clone()
        } else {
            Alphabet::new(target_chars)?
        };
        let images = rules
            .iter()
            .map(|&(_, img)| Word::parse(&target, img))
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(source, target, images)
    }

    pub fn source(&self) -> &Alphabet {
        &self.source
    }

    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    pub fn image(&self, c: Symbol) -> &Word {
        &self.images[c as usize]
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image_set(&self) -> ImageSet {
        let mut images: Vec<Word> = Vec::new();
        for x in &self.images {
            if !images.contains(x) {
                images.push(x.clone());
            }
        }
        ImageSet { images, total_length: self.images.iter().map(Word::len).sum() }
    }

    pub fn max_image_len(&self) -> usize {
        self.images.iter().map(Word::len).max().unwrap_or(0)
    }

    pub fn is_non_erasing(&self) -> bool {
        self.non_erasing
    }

    pub fn uniform_length(&self) -> Option<usize> {
        self.uniform_length
    }

    /// Source and target alphabets coincide, so the morphism can be iterated.
    pub fn is_endomorphism(&self) -> bool {
        self.source == self.target
    }

    pub fn apply(&self, u: &Word) -> Result<Word> {
        if u.alphabet() != &self.source {
            return Err(Error::AlphabetMismatch);
        }
        let len = u.symbols().iter().map(|&c| self.images[c as usize].len()).sum();
        let mut out = Vec::with_capacity(len);
        for &c in u.symbols() {
            out.extend_from_slice(self.images[c as usize].symbols());
        }
        Ok(Word::from_symbols_unchecked(&self.target, out))
    }

    /// `k`-fold application; `iterate(u, 0) = u`.
    pub fn iterate(&self, u: &Word, k: usize) -> Result<Word> {
        if k >= 2 && !self.is_endomorphism() {
            return Err(Error::NotEndomorphism);
        }
        if u.alphabet() != &self.source {
            return Err(Error::AlphabetMismatch);
        }
        let mut w = u.clone();
        for _ in 0..k {
            w = self.apply(&w)?;
        }
        Ok(w)
    }

    /// `|φ^k(c)|` for every source symbol, without materializing the images.
    pub fn iterated_image_lengths(&self, k: usize) -> Result<Vec<u128>> {
        if k >= 2 && !self.is_endomorphism() {
            return Err(Error::NotEndomorphism);
        }
        if k == 0 {
            return Ok(vec![1; self.source.len()]);
        }
        let mut lens = vec![1u128; self.target.len()];
        for _ in 0..k {
            lens = self
                .images
                .iter()
                .map(|x| x.symbols().iter().map(|&s| lens[s as usize]).sum())
                .collect();
        }
        Ok(lens)
    }

    /// The morphism `c ↦ φ(c)^R`.
    pub fn reversal(&self) -> Morphism {
        let images = self.images.iter().map(reverse).collect();
        Morphism::new(self.source.clone(), self.target.clone(), images).expect("same shape")
    }

    /// Injectivity over the free monoid, decided once and cached.
    pub fn injectivity(&self) -> &Injectivity {
        self.injectivity.get_or_init(|| decide_injectivity(self))
    }

    pub fn is_injective(&self) -> bool {
        self.injectivity().is_injective()
    }

    pub(crate) fn require_injective(&self) -> Result<()> {
        match self.injectivity() {
            Injectivity::Injective => Ok(()),
            Injectivity::NotInjective { left, right } => {
                Err(Error::NotInjective { left: left.to_string(), right: right.to_string() })
            }
        }
    }
}

impl PartialEq for Morphism {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.images == other.images
    }
}

impl Eq for Morphism {}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{}->", self.source.char_of(i as Symbol))?;
            if img.is_empty() {
                f.write_str(".")?;
            } else {
                write!(f, "{img}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism({self})")
    }
}

impl FromStr for Morphism {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
        let mut rules: Vec<(char, String)> = Vec::new();
        for rule in compact.split(';').filter(|r| !r.is_empty()) {
            let (lhs, rhs) = rule
                .split_once("->")
                .ok_or_else(|| Error::MorphismSyntax(format!("rule {rule:?} lacks '->'")))?;
            let mut lhs_chars = lhs.chars();
            let c = match (lhs_chars.next(), lhs_chars.next()) {
                (Some(c), None) => c,
                _ => return Err(Error::MorphismSyntax(format!("left side {lhs:?} must be one symbol"))),
            };
            let img = match rhs {
                "." => String::new(),
                "" => return Err(Error::MorphismSyntax(format!("rule {rule:?} has no image; use '.' for ε"))),
                s if s.contains('.') || s.contains('>') => {
                    return Err(Error::MorphismSyntax(format!("bad image {s:?}")))
                }
                s => s.to_string(),
            };
            rules.push((c, img));
        }
        if rules.is_empty() {
            return Err(Error::MorphismSyntax("no rules".into()));
        }
        let borrowed: Vec<(char, &str)> = rules.iter().map(|(c, s)| (*c, s.as_str())).collect();
        Morphism::from_rules(&borrowed)
    }
}

/// Dangling-suffix search for a collision `φ(u) = φ(v)`, `u ≠ v`.
///
/// Two source words are built in lockstep; the state is the part of the
/// longer image not yet matched by the shorter one. That remainder is always
/// a non-empty proper suffix of some image, so the state space is finite. The
/// morphism is injective iff the empty remainder is unreachable, which is the
/// Sardinas–Patterson criterion phrased as graph reachability.
fn decide_injectivity(phi: &Morphism) -> Injectivity {
    let source = phi.source();
    let sigma = source.len();
    if let Some(c) = phi.images.iter().position(Word::is_empty) {
        return Injectivity::NotInjective {
            left: Word::empty(source),
            right: Word::from_symbols_unchecked(source, vec![c as Symbol]),
        };
    }
    let imgs: Vec<&[Symbol]> = phi.images.iter().map(Word::symbols).collect();

    let mut ids: HashMap<&[Symbol], usize> = HashMap::new();
    let mut states: Vec<&[Symbol]> = Vec::new();
    for img in &imgs {
        for off in 1..img.len() {
            let s = &img[off..];
            ids.entry(s).or_insert_with(|| {
                states.push(s);
                states.len() - 1
            });
        }
    }

    // Appending `c` to the lagging word while `rest` is outstanding.
    #[derive(Clone, Copy)]
    enum Step {
        Done,
        Same(usize),
        Swap(usize),
    }
    let step = |rest: &[Symbol], c: usize| -> Option<Step> {
        let x = imgs[c];
        if x == rest {
            Some(Step::Done)
        } else if rest.starts_with(x) {
            Some(Step::Same(ids[&rest[x.len()..]]))
        } else if x.starts_with(rest) {
            Some(Step::Swap(ids[&x[rest.len()..]]))
        } else {
            None
        }
    };

    const INF: usize = usize::MAX;
    let mut dist = vec![INF; states.len()];
    loop {
        let mut changed = false;
        for s in 0..states.len() {
            for c in 0..sigma {
                let cand = match step(states[s], c) {
                    Some(Step::Done) => 1,
                    Some(Step::Same(t)) | Some(Step::Swap(t)) if dist[t] != INF => dist[t] + 1,
                    _ => continue,
                };
                if cand < dist[s] {
                    dist[s] = cand;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }

    // Cheapest opening pair (c, d), c < d, and its total length.
    let opening = |c: usize, d: usize| -> Option<(usize, Option<(usize, bool)>)> {
        let (x, y) = (imgs[c], imgs[d]);
        if x == y {
            Some((2, None))
        } else if y.starts_with(x) {
            let t = ids[&y[x.len()..]];
            (dist[t] != INF).then(|| (2 + dist[t], Some((t, false))))
        } else if x.starts_with(y) {
            let t = ids[&x[y.len()..]];
            (dist[t] != INF).then(|| (2 + dist[t], Some((t, true))))
        } else {
            None
        }
    };
    let mut best_len = INF;
    for c in 0..sigma {
        for d in c + 1..sigma {
            if let Some((l, _)) = opening(c, d) {
                best_len = best_len.min(l);
            }
        }
    }
    if best_len == INF {
        return Injectivity::Injective;
    }

    // Enumerate every collision of minimal total length and keep the
    // lexicographically smallest (left, right).
    struct Search<'a> {
        states: &'a [&'a [Symbol]],
        dist: &'a [usize],
        sigma: usize,
        best: Option<(Vec<Symbol>, Vec<Symbol>)>,
    }
    impl Search<'_> {
        fn offer(&mut self, left: &[Symbol], right: &[Symbol]) {
            let better = match &self.best {
                None => true,
                Some((l, r)) => (left, right) < (l.as_slice(), r.as_slice()),
            };
            if better {
                self.best = Some((left.to_vec(), right.to_vec()));
            }
        }
    }
    fn extend(
        search: &mut Search<'_>,
        step: &dyn Fn(&[Symbol], usize) -> Option<Step>,
        left: &mut Vec<Symbol>,
        right: &mut Vec<Symbol>,
        state: usize,
        left_ahead: bool,
        budget: usize,
    ) {
        for c in 0..search.sigma {
            let lagging = if left_ahead { &mut *right } else { &mut *left };
            lagging.push(c as Symbol);
            match step(search.states[state], c) {
                Some(Step::Done) if budget == 1 => search.offer(left, right),
                Some(Step::Same(t)) if search.dist[t].saturating_add(1) == budget => {
                    extend(search, step, left, right, t, left_ahead, budget - 1)
                }
                Some(Step::Swap(t)) if search.dist[t].saturating_add(1) == budget => {
                    extend(search, step, left, right, t, !left_ahead, budget - 1)
                }
                _ => {}
            }
            let lagging = if left_ahead { &mut *right } else { &mut *left };
            lagging.pop();
        }
    }

    let mut search = Search { states: &states, dist: &dist, sigma, best: None };
    for c in 0..sigma {
        for d in c + 1..sigma {
            match opening(c, d) {
                Some((l, None)) if l == best_len => search.offer(&[c as Symbol], &[d as Symbol]),
                Some((l, Some((t, left_ahead)))) if l == best_len => {
                    let (mut left, mut right) = (vec![c as Symbol], vec![d as Symbol]);
                    extend(&mut search, &step, &mut left, &mut right, t, left_ahead, best_len - 2);
                }
                _ => {}
            }
        }
    }
    let (left, right) = search.best.expect("a minimal collision exists");
    Injectivity::NotInjective {
        left: Word::from_symbols_unchecked(source, left),
        right: Word::from_symbols_unchecked(source, right),
    }
}
