//! Fibonacci and Thue–Morse words, and the named morphisms.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::morphisms::Morphism;
use crate::words::{flip, occurrences, Alphabet, Word};

/// Largest Fibonacci order generated by default (`f_30 = 832040`).
pub const FIBONACCI_MAX_ORDER: usize = 30;
/// Largest Thue–Morse order generated by default (`2^21` symbols).
pub const THUE_MORSE_MAX_ORDER: usize = 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedMorphism {
    Fibonacci,
    ThueMorse,
    VariantThueMorse,
    MephistoWaltz,
    ThueMorseMorse,
    LastNonzeroDigit,
}

impl NamedMorphism {
    pub const ALL: [NamedMorphism; 6] = [
        NamedMorphism::Fibonacci,
        NamedMorphism::ThueMorse,
        NamedMorphism::VariantThueMorse,
        NamedMorphism::MephistoWaltz,
        NamedMorphism::ThueMorseMorse,
        NamedMorphism::LastNonzeroDigit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedMorphism::Fibonacci => "fibonacci",
            NamedMorphism::ThueMorse => "thue-morse",
            NamedMorphism::VariantThueMorse => "variant-thue-morse",
            NamedMorphism::MephistoWaltz => "mephisto-waltz",
            NamedMorphism::ThueMorseMorse => "thue-morse-morse",
            NamedMorphism::LastNonzeroDigit => "last-nonzero-digit",
        }
    }

    pub fn spec(self) -> &'static str {
        match self {
            NamedMorphism::Fibonacci => "a->ab;b->a",
            NamedMorphism::ThueMorse => "a->ab;b->ba",
            NamedMorphism::VariantThueMorse => "a->abc;b->ac;c->b",
            NamedMorphism::MephistoWaltz => "a->aab;b->bba",
            NamedMorphism::ThueMorseMorse => "a->abb;b->baa",
            NamedMorphism::LastNonzeroDigit => "a->aba;b->abb",
        }
    }

    pub fn morphism(self) -> Morphism {
        self.spec().parse().expect("built-in morphism spec")
    }
}

impl fmt::Display for NamedMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedMorphism {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedMorphism::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::MorphismSyntax(format!("unknown morphism name {s:?}")))
    }
}

pub fn fibonacci() -> Morphism {
    NamedMorphism::Fibonacci.morphism()
}

pub fn thue_morse() -> Morphism {
    NamedMorphism::ThueMorse.morphism()
}

fn check_order(what: &'static str, i: usize, min: usize, max: usize) -> Result<()> {
    if i < min || i > max {
        return Err(Error::OutOfRange { what, value: i, min, max });
    }
    Ok(())
}

/// `f_i = |F_i|` with `f_1 = f_2 = 1`.
pub fn fibonacci_number(i: usize) -> usize {
    let (mut a, mut b) = (1usize, 1usize);
    for _ in 2..i {
        (a, b) = (b, a + b);
    }
    if i <= 2 {
        1
    } else {
        b
    }
}

/// `F_i` by the recursion `F_i = F_{i-1} F_{i-2}`.
pub fn fibonacci_word(i: usize) -> Result<Word> {
    fibonacci_word_capped(i, FIBONACCI_MAX_ORDER)
}

pub fn fibonacci_word_capped(i: usize, cap: usize) -> Result<Word> {
    check_order("fibonacci order", i, 1, cap)?;
    let (mut older, mut newer) = (vec![1u8], vec![0u8]);
    if i == 1 {
        return Ok(Word::from_symbols_unchecked(&Alphabet::binary(), older));
    }
    for _ in 2..i {
        let mut next = Vec::with_capacity(newer.len() + older.len());
        next.extend_from_slice(&newer);
        next.extend_from_slice(&older);
        older = std::mem::replace(&mut newer, next);
    }
    Ok(Word::from_symbols_unchecked(&Alphabet::binary(), newer))
}

/// `F_i = φ^{i-1}(b)` by iterating the Fibonacci morphism.
pub fn fibonacci_word_by_morphism(i: usize) -> Result<Word> {
    check_order("fibonacci order", i, 1, FIBONACCI_MAX_ORDER)?;
    fibonacci().iterate(&Word::binary("b")?, i - 1)
}

/// `tm_i` by the recursion `tm_i = tm_{i-1} flip(tm_{i-1})`.
pub fn thue_morse_word(i: usize) -> Result<Word> {
    thue_morse_word_capped(i, THUE_MORSE_MAX_ORDER)
}

pub fn thue_morse_word_capped(i: usize, cap: usize) -> Result<Word> {
    check_order("thue-morse order", i, 1, cap)?;
    let mut syms = vec![0u8];
    for _ in 1..i {
        let flipped: Vec<u8> = syms.iter().map(|&s| 1 - s).collect();
        syms.extend(flipped);
    }
    Ok(Word::from_symbols_unchecked(&Alphabet::binary(), syms))
}

/// `tm_i = μ^{i-1}(a)`.
pub fn thue_morse_word_by_morphism(i: usize) -> Result<Word> {
    check_order("thue-morse order", i, 1, THUE_MORSE_MAX_ORDER)?;
    thue_morse().iterate(&Word::binary("a")?, i - 1)
}

/// `G_i`: `F_i` without its last two symbols, for `i >= 3`.
pub fn fibonacci_g(i: usize) -> Result<Word> {
    check_order("G order", i, 3, FIBONACCI_MAX_ORDER)?;
    let f = fibonacci_word(i)?;
    Ok(f.prefix(f.len() - 2))
}

/// `Δ_i`: `ba` for even `i`, `ab` for odd `i`.
pub fn fibonacci_delta(i: usize) -> Word {
    Word::binary(if i % 2 == 0 { "ba" } else { "ab" }).expect("binary")
}

/// `{a·w·a, a·w·b, b·w·a, b·w·b}` in that order.
pub fn extensions(w: &Word) -> Result<[Word; 4]> {
    if !w.alphabet().is_binary() {
        return Err(Error::NonBinaryAlphabet("extensions"));
    }
    let wrap = |l: u8, r: u8| {
        let mut syms = Vec::with_capacity(w.len() + 2);
        syms.push(l);
        syms.extend_from_slice(w.symbols());
        syms.push(r);
        Word::from_symbols_unchecked(w.alphabet(), syms)
    };
    Ok([wrap(0, 0), wrap(0, 1), wrap(1, 0), wrap(1, 1)])
}

/// Outcome of [`structural_checks`]: one line per violated fact.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StructuralReport {
    pub checks: usize,
    pub violations: Vec<String>,
}

impl StructuralReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the classical facts about `F_i` for `3 <= i <= i_max`: no `aaa`
/// or `bb`, `F_i = G_i Δ_i`, and for `i >= 7` the occurrences of `G_{i-1}`
/// in `F_i` are exactly `{1, f_{i-2} + 1}`.
pub fn structural_checks(i_max: usize) -> Result<StructuralReport> {
    check_order("structural check order", i_max, 7, FIBONACCI_MAX_ORDER)?;
    let aaa = Word::binary("aaa")?;
    let bb = Word::binary("bb")?;
    let mut report = StructuralReport::default();
    let mut check = |ok: bool, what: String| {
        report.checks += 1;
        if !ok {
            report.violations.push(what);
        }
    };
    for i in 3..=i_max {
        let f = fibonacci_word(i)?;
        check(occurrences(&aaa, &f)?.is_empty(), format!("aaa occurs in F_{i}"));
        check(occurrences(&bb, &f)?.is_empty(), format!("bb occurs in F_{i}"));
        check(fibonacci_g(i)?.concat(&fibonacci_delta(i))? == f, format!("F_{i} != G_{i} Δ_{i}"));
        if i >= 7 {
            let occ = occurrences(&fibonacci_g(i - 1)?, &f)?;
            let expected = vec![1, fibonacci_number(i - 2) + 1];
            check(occ.positions == expected, format!("Occ(G_{}, F_{i}) = {{{occ}}}", i - 1));
        }
    }
    Ok(report)
}

/// `flip(tm_i)`.
pub fn flipped_thue_morse_word(i: usize) -> Result<Word> {
    flip(&thue_morse_word(i)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_examples() {
        assert_eq!(fibonacci_word(1).unwrap().to_string(), "b");
        assert_eq!(fibonacci_word(2).unwrap().to_string(), "a");
        assert_eq!(fibonacci_word(6).unwrap().to_string(), "abaababa");
        assert!(fibonacci_word(0).is_err());
        assert!(fibonacci_word(31).is_err());
        assert_eq!(fibonacci_word_capped(32, 32).unwrap().len(), fibonacci_number(32));
        for i in 1..=20 {
            assert_eq!(fibonacci_word(i).unwrap(), fibonacci_word_by_morphism(i).unwrap());
            assert_eq!(fibonacci_word(i).unwrap().len(), fibonacci_number(i));
        }
        assert_eq!(fibonacci_number(30), 832040);
    }

    #[test]
    fn thue_morse_examples() {
        assert_eq!(thue_morse_word(3).unwrap().to_string(), "abba");
        assert_eq!(thue_morse_word(4).unwrap().to_string(), "abbabaab");
        assert_eq!(thue_morse_word(5).unwrap().to_string(), "abbabaabbaababba");
        for i in 1..=12 {
            assert_eq!(thue_morse_word(i).unwrap().len(), 1 << (i - 1));
        }
        assert!(thue_morse_word(0).is_err());
    }

    #[test]
    fn g_delta_examples() {
        assert_eq!(fibonacci_g(6).unwrap().to_string(), "abaaba");
        assert_eq!(fibonacci_delta(6).to_string(), "ba");
        assert_eq!(fibonacci_delta(7).to_string(), "ab");
        assert_eq!(fibonacci_g(6).unwrap().concat(&fibonacci_delta(6)).unwrap(), fibonacci_word(6).unwrap());
        let occ = occurrences(&fibonacci_g(6).unwrap(), &fibonacci_word(7).unwrap()).unwrap();
        assert_eq!(occ.positions, vec![1, 6]);
        assert!(fibonacci_g(2).is_err());
        let f9 = fibonacci_word(9).unwrap();
        assert_eq!(fibonacci_g(9).unwrap().concat(&fibonacci_delta(9)).unwrap(), f9);
    }

    #[test]
    fn extensions_examples() {
        let ext: Vec<String> = extensions(&Word::binary("ab").unwrap()).unwrap().iter().map(|w| w.to_string()).collect();
        assert_eq!(ext, ["aaba", "aabb", "baba", "babb"]);
        let ext: Vec<String> = extensions(&Word::binary("").unwrap()).unwrap().iter().map(|w| w.to_string()).collect();
        assert_eq!(ext, ["aa", "ab", "ba", "bb"]);
    }

    #[test]
    fn structural_checks_pass() {
        let r = structural_checks(20).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        assert!(structural_checks(6).is_err());
    }

    #[test]
    fn named_morphisms_round_trip() {
        for nm in NamedMorphism::ALL {
            assert_eq!(nm.morphism().to_string(), nm.spec());
            assert_eq!(nm.name().parse::<NamedMorphism>().unwrap(), nm);
        }
    }
}
