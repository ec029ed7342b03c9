//! Reduced words in free generators, shared by group elements and relators.
//!
//! Labels are a lowercase ASCII letter with an optional numeric index
//! (`a`, `b_3`). Inverses print as the uppercase label (`A`, `B_3`).
//!
//! Accepted text syntax: letters with optional `^k` / `^-k` / `^{-k}`
//! exponents, uppercase meaning inverse, tokens either contiguous or
//! separated by whitespace or `*`. The empty string and `1` denote the
//! identity.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("syntax error at position {position}: {message}")]
pub struct SyntaxError {
    pub position: usize,
    pub message: String,
}

/// A generator label: a lowercase letter plus an optional index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(String);

impl Label {
    pub fn new(letter: char, index: Option<u32>) -> Result<Self, SyntaxError> {
        if !letter.is_ascii_lowercase() {
            return Err(SyntaxError { position: 0, message: format!("label must start with a lowercase letter, got {letter:?}") });
        }
        Ok(match index {
            Some(i) => Label(format!("{letter}_{i}")),
            None => Label(letter.to_string()),
        })
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The printed form of the inverse letter.
    pub fn inverse_form(&self) -> String {
        let mut chars = self.0.chars();
        let first = chars.next().expect("labels are nonempty").to_ascii_uppercase();
        std::iter::once(first).chain(chars).collect()
    }
}

impl FromStr for Label {
    type Err = SyntaxError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let w: Word = s.parse()?;
        match w.letters() {
            [l] if l.exp == 1 => Ok(l.label.clone()),
            _ => Err(SyntaxError { position: 0, message: format!("{s:?} is not a single generator label") }),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One signed generator occurrence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Letter {
    pub label: Label,
    /// `+1` or `-1`.
    pub exp: i8,
}

impl Letter {
    pub fn new(label: Label, exp: i8) -> Self {
        debug_assert!(exp == 1 || exp == -1);
        Letter { label, exp }
    }

    pub fn inverse(&self) -> Letter {
        Letter { label: self.label.clone(), exp: -self.exp }
    }
}

/// A freely reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    /// Builds a word from arbitrary letters, cancelling adjacent inverse pairs.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last().is_some_and(|last| last.label == l.label && last.exp == -l.exp) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    /// `label^power` as a reduced word.
    pub fn power(label: &Label, power: i64) -> Self {
        let exp = if power < 0 { -1 } else { 1 };
        Word { letters: (0..power.unsigned_abs()).map(|_| Letter::new(label.clone(), exp)).collect() }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|p| !(p[0].label == p[1].label && p[0].exp == -p[1].exp))
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(Letter::inverse).collect() }
    }

    /// Free product `self · other`, reduced.
    pub fn concat(&self, other: &Word) -> Word {
        Word::from_letters(self.letters.iter().chain(other.letters.iter()).cloned())
    }

    /// Cyclic rotation moving the first `k` letters to the end, reduced.
    pub fn rotate(&self, k: usize) -> Word {
        if self.letters.is_empty() {
            return self.clone();
        }
        let k = k % self.letters.len();
        Word::from_letters(self.letters[k..].iter().chain(self.letters[..k].iter()).cloned())
    }

    /// Exponent sum of `label`.
    pub fn exponent_sum(&self, label: &Label) -> i64 {
        self.letters.iter().filter(|l| &l.label == label).map(|l| l.exp as i64).sum()
    }

    /// Renders with `^-1` style exponents, runs collapsed: `a^-1 b^-1 a b c d^-1`.
    pub fn to_exponent_string(&self) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = &self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == *l {
                run += 1;
            }
            let e = run as i64 * l.exp as i64;
            parts.push(if e == 1 { l.label.to_string() } else { format!("{}^{}", l.label, e) });
            i += run;
        }
        parts.join(" ")
    }
}

impl fmt::Display for Word {
    /// Case-convention form, e.g. `ABabcD`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for l in &self.letters {
            if l.exp > 0 {
                f.write_str(l.label.as_str())?;
            } else {
                f.write_str(&l.label.inverse_form())?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = SyntaxError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_string().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses relator text into a reduced word.
pub fn parse_word(text: &str) -> Result<Word, SyntaxError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let err = |position: usize, message: String| SyntaxError { position, message };
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "1" {
        return Ok(Word::identity());
    }

    let mut letters = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, ch) = chars[i];
        if ch.is_whitespace() || ch == '*' || ch == '·' {
            i += 1;
            continue;
        }
        if !ch.is_ascii_alphabetic() {
            return Err(err(pos, format!("expected a generator letter, found {ch:?}")));
        }
        let inverse = ch.is_ascii_uppercase();
        i += 1;

        // optional index: `_12` or `12`
        let mut index = None;
        let save = i;
        if i < chars.len() && chars[i].1 == '_' {
            i += 1;
        }
        let digits_start = i;
        while i < chars.len() && chars[i].1.is_ascii_digit() {
            i += 1;
        }
        if i > digits_start {
            let s: String = chars[digits_start..i].iter().map(|c| c.1).collect();
            index = Some(s.parse::<u32>().map_err(|_| err(chars[digits_start].0, "index out of range".into()))?);
        } else if i != save {
            let at = chars.get(i).map_or(text.len(), |c| c.0);
            return Err(err(at, "expected digits after '_'".into()));
        }

        // optional exponent
        let mut power: i64 = 1;
        if i < chars.len() && chars[i].1 == '^' {
            let caret = chars[i].0;
            i += 1;
            let braced = i < chars.len() && (chars[i].1 == '{' || chars[i].1 == '(');
            let close = if braced { if chars[i].1 == '{' { '}' } else { ')' } } else { ' ' };
            if braced {
                i += 1;
            }
            let mut sign = 1;
            if i < chars.len() && (chars[i].1 == '-' || chars[i].1 == '+' || chars[i].1 == '−') {
                if chars[i].1 != '+' {
                    sign = -1;
                }
                i += 1;
            }
            let ds = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            if i == ds {
                return Err(err(caret, "exponent needs digits".into()));
            }
            let s: String = chars[ds..i].iter().map(|c| c.1).collect();
            power = sign * s.parse::<i64>().map_err(|_| err(chars[ds].0, "exponent out of range".into()))?;
            if braced {
                if i >= chars.len() || chars[i].1 != close {
                    let at = chars.get(i).map_or(text.len(), |c| c.0);
                    return Err(err(at, format!("expected {close:?}")));
                }
                i += 1;
            }
        }

        let label = Label::new(ch.to_ascii_lowercase(), index).map_err(|e| err(pos, e.message))?;
        let exp: i8 = if (power < 0) ^ inverse { -1 } else { 1 };
        for _ in 0..power.unsigned_abs() {
            letters.push(Letter::new(label.clone(), exp));
        }
    }
    Ok(Word::from_letters(letters))
}
