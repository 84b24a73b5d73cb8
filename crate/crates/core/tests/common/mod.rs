#![allow(dead_code)]

use morphlab::{Alphabet, Morphism, Word};

/// All strings over `chars` with length in `min..=max`, shortest first.
pub fn strings_over(chars: &[char], min: usize, max: usize) -> Vec<String> {
    let mut out = Vec::new();
    let mut layer = vec![String::new()];
    for len in 0..=max {
        if len >= min {
            out.extend(layer.iter().cloned());
        }
        layer = layer
            .iter()
            .flat_map(|s| chars.iter().map(move |&c| format!("{s}{c}")))
            .collect();
    }
    out
}

/// Non-empty words over `alphabet` of length at most `max`.
pub fn words_up_to(alphabet: &Alphabet, max: usize) -> Vec<Word> {
    strings_over(alphabet.symbols(), 1, max)
        .iter()
        .map(|s| Word::parse(alphabet, s).unwrap())
        .collect()
}

/// Every morphism on `{a, b}` whose images are words over `image_chars`
/// with lengths `1..=max_len`.
pub fn binary_source_morphisms(image_chars: &[char], max_len: usize) -> Vec<Morphism> {
    let images = strings_over(image_chars, 1, max_len);
    let mut out = Vec::new();
    for x in &images {
        for y in &images {
            out.push(Morphism::from_rules(&[('a', x), ('b', y)]).unwrap());
        }
    }
    out
}

pub fn w(s: &str) -> Word {
    Word::binary(s).unwrap()
}

pub fn m(spec: &str) -> Morphism {
    spec.parse().unwrap()
}

/// Splits `items` over the available cores and concatenates the results.
pub fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let chunk = items.len().div_ceil(jobs).max(1);
    std::thread::scope(|s| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| s.spawn(|| part.iter().map(&f).collect::<Vec<R>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().unwrap()).collect()
    })
}
