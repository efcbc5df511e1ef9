//! Cycle file format.
//!
//! One line, trailing newline. For alphabets of size at most 9 the letters
//! are written as consecutive digits (`11100010`); for larger alphabets as
//! comma-separated integers (`1,10,3`).
//!
//! Digit files may also use the 0-based alphabet `0..n-1`: a digit file that
//! contains a `0` is read that way and shifted up by one, so `11100010` over
//! `{0, 1}` reads as `22211121` over `{1, 2}`.

use crate::error::{Error, Result};
use crate::word::{parse_letters, render_letters, Letter};

pub fn render_cycle(letters: &[Letter], n: u32) -> String {
    let mut s = render_letters(letters, n);
    s.push('\n');
    s
}

/// Parses a cycle file. Digit runs are rejected for alphabets above 9 (except a
/// single letter); comma lists are accepted for any alphabet.
pub fn parse_cycle(text: &str, n: u32) -> Result<Vec<Letter>> {
    let digits = parse_cycle_raw(text, n)?;
    let body = text.trim();
    if !body.contains(',') && digits.contains(&0) {
        return Ok(digits.into_iter().map(|d| d + 1).collect());
    }
    Ok(digits)
}

fn parse_cycle_raw(text: &str, n: u32) -> Result<Vec<Letter>> {
    let body = text.trim();
    if body.lines().count() > 1 {
        return Err(Error::Parse("cycle file must hold a single line".into()));
    }
    if n > 9 && !body.contains(',') && body.len() > 1 {
        // a one-letter cycle such as `10`
        return match body.parse::<Letter>() {
            Ok(l) if u32::from(l) <= n && !body.starts_with('0') => Ok(vec![l]),
            _ => Err(Error::Parse(format!("alphabet size {n} needs comma-separated letters"))),
        };
    }
    parse_letters(body)
}
