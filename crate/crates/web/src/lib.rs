//! Browser bindings for the morphlab demo page.
//!
//! Each exported function takes plain strings and returns a JSON document,
//! either the result view or `{"error": "..."}`.

use morphlab::classic::{fibonacci_word, thue_morse_word, NamedMorphism};
use morphlab::interference::{InterferenceChecker, InterferenceWitness};
use morphlab::repeats::{compute_mus, compute_net_occurrences};
use morphlab::{Alphabet, Error, Morphism, Word};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Longest word the page will render.
pub const MAX_DISPLAY_LEN: usize = 4096;

#[derive(Debug, Serialize, PartialEq, Eq)]
pub struct IfView {
    pub morphism: String,
    pub image: String,
    pub interference_free: bool,
    pub witness: Option<WitnessView>,
}

#[derive(Debug, Serialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum WitnessView {
    Interfered { x: String, y: String, z: String },
    Inner { host: char, offset: usize },
}

#[derive(Debug, Serialize, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
    pub content: String,
}

#[derive(Debug, Serialize, PartialEq, Eq)]
pub struct RepeatsView {
    pub word: String,
    pub mus: Vec<Span>,
    pub net: Vec<Span>,
}

#[derive(Debug, Serialize, PartialEq, Eq)]
pub struct IterationView {
    pub morphism: String,
    /// `|φ^k(u)|` for `k = 0..=power`.
    pub lengths: Vec<usize>,
    pub image: String,
    pub truncated: bool,
}

fn parse_morphism(text: &str) -> Result<Morphism, Error> {
    let text = text.trim();
    match text.parse::<NamedMorphism>() {
        Ok(named) => Ok(named.morphism()),
        Err(_) => text.parse(),
    }
}

fn too_long(len: usize) -> Error {
    Error::OutOfRange { what: "word length", value: len, min: 1, max: MAX_DISPLAY_LEN }
}

pub fn interference(morphism: &str, word: &str) -> Result<IfView, Error> {
    let phi = parse_morphism(morphism)?;
    let u = Word::parse(phi.source(), word.trim())?;
    let image = phi.apply(&u)?;
    if image.len() > MAX_DISPLAY_LEN {
        return Err(too_long(image.len()));
    }
    let d = InterferenceChecker::new(&phi)?.decide(&u)?;
    let witness = d.witness.map(|w| match w {
        InterferenceWitness::Interfered(f) => WitnessView::Interfered {
            x: f.x.to_string(),
            y: phi.apply(&f.y_source).map(|y| y.to_string()).unwrap_or_default(),
            z: f.z.to_string(),
        },
        InterferenceWitness::Inner { host, offset } => {
            WitnessView::Inner { host: phi.source().char_of(host), offset }
        }
    });
    Ok(IfView { morphism: phi.to_string(), image: image.to_string(), interference_free: d.interference_free, witness })
}

/// `source` is `fibonacci:<i>`, `thue-morse:<i>`, or a literal word.
pub fn repeat_structure(source: &str) -> Result<RepeatsView, Error> {
    let source = source.trim();
    let word = match source.split_once(':') {
        Some(("fibonacci", i)) => fibonacci_word(parse_order(i)?)?,
        Some(("thue-morse", i)) => thue_morse_word(parse_order(i)?)?,
        _ => Word::parse(&Alphabet::of_text(source)?, source)?,
    };
    if word.len() > MAX_DISPLAY_LEN {
        return Err(too_long(word.len()));
    }
    let span = |start: usize, end: usize| Span { start, end, content: word.factor(start, end).to_string() };
    Ok(RepeatsView {
        mus: compute_mus(&word)?.iter().map(|m| span(m.start, m.end)).collect(),
        net: compute_net_occurrences(&word)?.iter().map(|o| span(o.start, o.end)).collect(),
        word: word.to_string(),
    })
}

fn parse_order(text: &str) -> Result<usize, Error> {
    text.trim().parse().map_err(|_| Error::MorphismSyntax(format!("order {text:?} is not a number")))
}

pub fn iteration(morphism: &str, word: &str, power: usize) -> Result<IterationView, Error> {
    let phi = parse_morphism(morphism)?;
    let u = Word::parse(phi.source(), word.trim())?;
    let mut lengths = Vec::with_capacity(power + 1);
    for k in 0..=power {
        let lens = phi.iterated_image_lengths(k)?;
        let len: u128 = u.symbols().iter().map(|&c| lens[c as usize]).sum();
        lengths.push(usize::try_from(len).unwrap_or(usize::MAX));
    }
    if power >= 2 && !phi.is_endomorphism() {
        return Err(Error::NotEndomorphism);
    }
    // A prefix of w maps to a prefix of φ(w), so truncating every round
    // still yields the true prefix of φ^k(u).
    let mut current = u.prefix(u.len().min(MAX_DISPLAY_LEN));
    for _ in 0..power {
        let next = phi.apply(&current)?;
        current = next.prefix(next.len().min(MAX_DISPLAY_LEN));
    }
    let truncated = lengths[power] > current.len();
    Ok(IterationView { morphism: phi.to_string(), lengths, image: current.to_string(), truncated })
}

fn to_json<T: Serialize>(r: Result<T, Error>) -> String {
    match r {
        Ok(v) => serde_json::to_string(&v).expect("serializable view"),
        Err(e) => serde_json::json!({ "error": e.to_string() }).to_string(),
    }
}

#[wasm_bindgen(js_name = checkInterference)]
pub fn check_interference(morphism: &str, word: &str) -> String {
    to_json(interference(morphism, word))
}

#[wasm_bindgen(js_name = repeatStructure)]
pub fn repeat_structure_json(source: &str) -> String {
    to_json(repeat_structure(source))
}

#[wasm_bindgen(js_name = iterate)]
pub fn iterate_json(morphism: &str, word: &str, power: u32) -> String {
    to_json(iteration(morphism, word, power as usize))
}
