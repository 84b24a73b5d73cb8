//! Aho–Corasick dictionary matching over the image set of a morphism.
//!
//! [`ImageScanner`] pairs an automaton over the images with one over the
//! reversed images and produces, for a text `w`, the three artifacts the
//! interference decision works from:
//!
//! * `S_i(w)`: source symbols whose image starts at position `i`;
//! * `P_pref(w)`: positions `i` with `w[1..i]` a proper suffix of an image;
//! * `P_suf(w)`: positions `i` with `w[i..n]` a proper prefix of an image.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::morphisms::Morphism;
use crate::words::{Symbol, Word};

const ROOT: u32 = 0;
const NONE: u32 = u32::MAX;

#[derive(Debug, Clone)]
struct Node {
    next: HashMap<Symbol, u32>,
    fail: u32,
    /// Nearest node on the failure chain (excluding self) that ends a pattern.
    dict: u32,
    depth: u32,
    /// Ids of patterns ending exactly here.
    outputs: Vec<usize>,
    /// Smallest id of a pattern strictly longer than this node that passes
    /// through it, if any.
    extends: Option<usize>,
}

impl Node {
    fn new(depth: u32) -> Self {
        Node { next: HashMap::new(), fail: ROOT, dict: NONE, depth, outputs: Vec::new(), extends: None }
    }
}

/// Trie with failure and output links over a set of non-empty patterns.
#[derive(Debug, Clone)]
pub struct DictionaryMatcher {
    nodes: Vec<Node>,
    lengths: HashMap<usize, usize>,
}

/// A pattern occurrence reported by [`DictionaryMatcher::find_all`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Match {
    /// 1-based start position.
    pub start: usize,
    pub id: usize,
}

impl DictionaryMatcher {
    pub fn build(patterns: &[(Word, usize)]) -> Result<Self> {
        if patterns.is_empty() {
            return Err(Error::NoPatterns);
        }
        let mut nodes = vec![Node::new(0)];
        let mut lengths = HashMap::new();
        for (pat, id) in patterns {
            if pat.is_empty() {
                return Err(Error::EmptyPattern);
            }
            lengths.insert(*id, pat.len());
            let mut q = ROOT;
            for &c in pat.symbols() {
                let ext = &mut nodes[q as usize].extends;
                *ext = Some(ext.map_or(*id, |e| e.min(*id)));
                let depth = nodes[q as usize].depth + 1;
                q = match nodes[q as usize].next.get(&c) {
                    Some(&t) => t,
                    None => {
                        let t = nodes.len() as u32;
                        nodes.push(Node::new(depth));
                        nodes[q as usize].next.insert(c, t);
                        t
                    }
                };
            }
            nodes[q as usize].outputs.push(*id);
        }
        for node in &mut nodes {
            node.outputs.sort_unstable();
            node.outputs.dedup();
        }

        let mut queue: VecDeque<u32> = VecDeque::new();
        let root_children: Vec<u32> = nodes[0].next.values().copied().collect();
        for t in root_children {
            queue.push_back(t);
        }
        while let Some(q) = queue.pop_front() {
            let edges: Vec<(Symbol, u32)> = nodes[q as usize].next.iter().map(|(&c, &t)| (c, t)).collect();
            for (c, t) in edges {
                let mut f = nodes[q as usize].fail;
                let target = loop {
                    if let Some(&g) = nodes[f as usize].next.get(&c) {
                        if g != t {
                            break g;
                        }
                    }
                    if f == ROOT {
                        break ROOT;
                    }
                    f = nodes[f as usize].fail;
                };
                nodes[t as usize].fail = target;
                nodes[t as usize].dict =
                    if nodes[target as usize].outputs.is_empty() { nodes[target as usize].dict } else { target };
                queue.push_back(t);
            }
        }
        Ok(DictionaryMatcher { nodes, lengths })
    }

    fn step(&self, mut q: u32, c: Symbol) -> u32 {
        loop {
            if let Some(&t) = self.nodes[q as usize].next.get(&c) {
                return t;
            }
            if q == ROOT {
                return ROOT;
            }
            q = self.nodes[q as usize].fail;
        }
    }

    /// Runs the automaton over `text`, calling `report(end, id)` for every
    /// pattern occurrence (1-based end position). Returns the final state.
    fn run(&self, text: &[Symbol], mut report: impl FnMut(usize, usize)) -> u32 {
        let mut q = ROOT;
        for (i, &c) in text.iter().enumerate() {
            q = self.step(q, c);
            let mut o = if self.nodes[q as usize].outputs.is_empty() { self.nodes[q as usize].dict } else { q };
            while o != NONE {
                for &id in &self.nodes[o as usize].outputs {
                    report(i + 1, id);
                }
                o = self.nodes[o as usize].dict;
            }
        }
        q
    }

    /// Every pattern occurrence in `text`, sorted by start then id.
    pub fn find_all(&self, text: &Word) -> Vec<Match> {
        let mut out = Vec::new();
        self.run(text.symbols(), |end, id| out.push(Match { start: end + 1 - self.lengths[&id], id }));
        out.sort_unstable();
        out
    }

    /// Lengths `d >= 1` such that the length-`d` suffix of the text that led
    /// to `state` is a proper prefix of some pattern, longest first, paired
    /// with the id of such a pattern.
    fn proper_prefix_suffixes(&self, mut state: u32) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        while state != ROOT {
            let node = &self.nodes[state as usize];
            if let Some(id) = node.extends {
                out.push((node.depth as usize, id));
            }
            state = node.fail;
        }
        out
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    #[cfg(test)]
    fn check_failure_links(&self) {
        for (q, node) in self.nodes.iter().enumerate().skip(1) {
            assert!(self.nodes[node.fail as usize].depth < node.depth, "node {q}");
        }
        assert_eq!(self.nodes[0].fail, ROOT);
    }
}

/// The per-position matches `S(w)` in compressed-row form, together with
/// `P_pref(w)` and `P_suf(w)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanResult {
    len: usize,
    offsets: Vec<usize>,
    symbols: Vec<Symbol>,
    /// Sorted positions, each with a source symbol whose image has `w[1..i]`
    /// as a proper suffix.
    pub p_pref: Vec<(usize, Symbol)>,
    /// Sorted positions, each with a source symbol whose image has `w[i..n]`
    /// as a proper prefix.
    pub p_suf: Vec<(usize, Symbol)>,
}

impl ScanResult {
    pub fn text_len(&self) -> usize {
        self.len
    }

    /// `S_i(w)` for 1-based `i`, in increasing symbol order.
    pub fn starting_at(&self, i: usize) -> &[Symbol] {
        &self.symbols[self.offsets[i - 1]..self.offsets[i]]
    }

    /// Positions with a non-empty `S_i`.
    pub fn nonempty_positions(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.len).filter(|&i| self.offsets[i] > self.offsets[i - 1])
    }

    /// `Σ_i |S_i(w)|`.
    pub fn occ_total(&self) -> usize {
        self.symbols.len()
    }

    pub fn p_pref_positions(&self) -> Vec<usize> {
        self.p_pref.iter().map(|&(i, _)| i).collect()
    }

    pub fn p_suf_positions(&self) -> Vec<usize> {
        self.p_suf.iter().map(|&(i, _)| i).collect()
    }
}

/// Forward and reversed automata over the images of one morphism.
#[derive(Debug, Clone)]
pub struct ImageScanner {
    forward: Arc<DictionaryMatcher>,
    backward: Arc<DictionaryMatcher>,
    image_lens: Arc<Vec<usize>>,
}

impl ImageScanner {
    /// Fails on erasing morphisms.
    pub fn new(phi: &Morphism) -> Result<Self> {
        let fwd: Vec<(Word, usize)> = phi.images().iter().cloned().zip(0..).collect();
        let bwd: Vec<(Word, usize)> = phi.images().iter().map(crate::words::reverse).zip(0..).collect();
        if let Some(c) = phi.images().iter().position(Word::is_empty) {
            return Err(Error::ErasingImage(phi.source().char_of(c as Symbol)));
        }
        Ok(ImageScanner {
            forward: Arc::new(DictionaryMatcher::build(&fwd)?),
            backward: Arc::new(DictionaryMatcher::build(&bwd)?),
            image_lens: Arc::new(phi.images().iter().map(Word::len).collect()),
        })
    }

    /// The scanner of the reversal morphism, sharing both automata.
    pub fn reversed(&self) -> ImageScanner {
        ImageScanner {
            forward: self.backward.clone(),
            backward: self.forward.clone(),
            image_lens: self.image_lens.clone(),
        }
    }

    pub fn image_len(&self, c: Symbol) -> usize {
        self.image_lens[c as usize]
    }

    pub fn scan(&self, w: &Word) -> ScanResult {
        self.scan_symbols(w.symbols())
    }

    pub(crate) fn scan_symbols(&self, text: &[Symbol]) -> ScanResult {
        let n = text.len();
        let mut hits: Vec<(usize, Symbol)> = Vec::new();
        let last = self.forward.run(text, |end, id| hits.push((end + 1 - self.image_lens[id], id as Symbol)));

        // Counting sort by start position keeps the scan linear in n + occ.
        let mut offsets = vec![0usize; n + 1];
        for &(start, _) in &hits {
            offsets[start] += 1;
        }
        for i in 1..=n {
            offsets[i] += offsets[i - 1];
        }
        let mut symbols = vec![0; hits.len()];
        let mut fill = offsets.clone();
        for &(start, c) in &hits {
            symbols[fill[start - 1]] = c;
            fill[start - 1] += 1;
        }
        for i in 0..n {
            symbols[offsets[i]..offsets[i + 1]].sort_unstable();
        }

        let mut p_suf: Vec<(usize, Symbol)> = self
            .forward
            .proper_prefix_suffixes(last)
            .into_iter()
            .map(|(d, id)| (n - d + 1, id as Symbol))
            .collect();
        p_suf.sort_unstable();

        let mut rev = text.to_vec();
        rev.reverse();
        let last_rev = self.backward.run(&rev, |_, _| {});
        let mut p_pref: Vec<(usize, Symbol)> = self
            .backward
            .proper_prefix_suffixes(last_rev)
            .into_iter()
            .map(|(d, id)| (d, id as Symbol))
            .collect();
        p_pref.sort_unstable();

        ScanResult { len: n, offsets, symbols, p_pref, p_suf }
    }
}
