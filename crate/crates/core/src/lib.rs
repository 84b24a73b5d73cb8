//! Words, morphisms, interference-freeness and repetition structure of
//! Fibonacci and Thue–Morse words.

pub mod classic;
pub mod cli;
pub mod error;
pub mod interference;
pub mod matcher;
pub mod morphisms;
pub mod oracles;
pub mod repeats;
mod suffix_array;
pub mod words;

pub use error::{Error, Result};
pub use interference::{is_interference_free_on, IfDecision, InterferenceChecker, InterferenceWitness};
pub use morphisms::{Injectivity, Morphism};
pub use words::{Alphabet, OccurrenceSet, Symbol, Word};
