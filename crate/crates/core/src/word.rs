//! Words over the alphabet `[n] = {1, ..., n}` and their letter histograms.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A single letter. Letters are 1-based: the alphabet of size `n` is `1..=n`.
pub type Letter = u16;

/// Largest alphabet size accepted anywhere in the crate.
pub const MAX_ALPHABET: u32 = Letter::MAX as u32;

/// A fixed-length word over `[n]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Checks that every letter lies in `[1, n]`.
    pub fn check_alphabet(&self, n: u32) -> Result<()> {
        check_letters(&self.0, n)
    }

    /// The word read backwards.
    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Renders the word with the alphabet-dependent convention: digits for
    /// `n <= 9`, comma-separated integers otherwise.
    pub fn render(&self, n: u32) -> String {
        render_letters(&self.0, n)
    }

    /// Parses either a run of digits (`"11223"`) or a comma-separated list
    /// (`"1,10,3"`). An empty string parses to the empty word.
    pub fn parse(text: &str) -> Result<Word> {
        parse_letters(text).map(Word)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl From<&[Letter]> for Word {
    fn from(v: &[Letter]) -> Self {
        Word(v.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let max = self.0.iter().copied().max().unwrap_or(0) as u32;
        f.write_str(&render_letters(&self.0, max))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

pub(crate) fn check_letters(letters: &[Letter], n: u32) -> Result<()> {
    match letters.iter().find(|&&l| l == 0 || l as u32 > n) {
        Some(&letter) => Err(Error::LetterOutOfRange { letter: letter as u32, n }),
        None => Ok(()),
    }
}

pub(crate) fn render_letters(letters: &[Letter], n: u32) -> String {
    if n <= 9 {
        letters.iter().map(|&l| char::from(b'0' + l as u8)).collect()
    } else {
        letters
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

pub(crate) fn parse_letters(text: &str) -> Result<Vec<Letter>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    if text.contains(',') {
        text.split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<Letter>()
                    .map_err(|e| Error::Parse(format!("bad letter {tok:?}: {e}")))
            })
            .collect()
    } else {
        text.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as Letter)
                    .ok_or_else(|| Error::Parse(format!("bad letter {c:?}")))
            })
            .collect()
    }
}

/// Letter multiplicities of a word: `counts[i]` is the number of occurrences
/// of letter `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Histogram {
    pub counts: Vec<usize>,
}

impl Histogram {
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.counts[letter as usize - 1]
    }

    /// Difference between the largest and smallest multiplicity, taken over
    /// all `n` letters (absent letters count as zero).
    pub fn spread(&self) -> usize {
        let max = self.counts.iter().max().copied().unwrap_or(0);
        let min = self.counts.iter().min().copied().unwrap_or(0);
        max - min
    }

    /// Number of distinct letters that occur.
    pub fn support_size(&self) -> usize {
        self.counts.iter().filter(|&&c| c > 0).count()
    }
}

/// Counts the letters of `word` over the alphabet `[n]`.
pub fn letter_histogram(word: &Word, n: u32) -> Result<Histogram> {
    word.check_alphabet(n)?;
    Ok(histogram_unchecked(&word.0, n))
}

pub(crate) fn histogram_unchecked(letters: &[Letter], n: u32) -> Histogram {
    let mut counts = vec![0usize; n as usize];
    for &l in letters {
        counts[l as usize - 1] += 1;
    }
    Histogram { counts }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn histogram_examples() {
        assert_eq!(letter_histogram(&w("1122333"), 3).unwrap().counts, vec![2, 2, 3]);
        assert_eq!(
            letter_histogram(&w("512625454331466"), 6).unwrap().counts,
            vec![2, 2, 2, 3, 3, 3]
        );
        assert_eq!(letter_histogram(&w("111"), 3).unwrap().counts, vec![3, 0, 0]);
    }

    #[test]
    fn histogram_rejects_foreign_letters() {
        assert!(matches!(
            letter_histogram(&w("124"), 3),
            Err(Error::LetterOutOfRange { letter: 4, n: 3 })
        ));
        assert!(letter_histogram(&Word(vec![0, 1]), 3).is_err());
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(w("1,10,3").0, vec![1, 10, 3]);
        assert_eq!(w("1,10,3").render(10), "1,10,3");
        assert_eq!(w("123").render(3), "123");
        assert_eq!(w("").len(), 0);
        assert!(Word::parse("12a").is_err());
        assert_eq!(w("132").reversed(), w("231"));
    }
}
