//! Reduced words over `k` free generators and the group elements they name.
//!
//! A symbol is `2i` for generator `i` and `2i + 1` for its inverse, so the
//! inverse of symbol `s` is `s ^ 1`. Words come out in shortlex order with
//! symbols ordered `a, A, b, B, ...`.

use crate::moebius::MoebiusTransform;
use crate::word::{Label, Letter, Word};

pub type Sym = usize;

pub fn inverse_sym(s: Sym) -> Sym {
    s ^ 1
}

pub fn to_word(syms: &[Sym], labels: &[Label]) -> Word {
    Word::from_letters(syms.iter().map(|&s| Letter::new(labels[s / 2].clone(), if s % 2 == 0 { 1 } else { -1 })))
}

/// `1 + Σ_{ℓ=1..depth} 2k (2k-1)^(ℓ-1)`.
pub fn reduced_word_count(k: usize, depth: usize) -> u128 {
    if k == 0 {
        return 1;
    }
    let (first, branch) = (2 * k as u128, 2 * k as u128 - 1);
    let mut total = 1u128;
    let mut level = first;
    for _ in 0..depth {
        total += level;
        level *= branch;
    }
    total
}

/// Streams every reduced word of length `<= depth` over `k` generators.
pub fn enumerate_reduced_words(k: usize, depth: usize) -> ReducedWords {
    ReducedWords { k, depth, current: None }
}

pub struct ReducedWords {
    k: usize,
    depth: usize,
    current: Option<Vec<Sym>>,
}

impl ReducedWords {
    /// Smallest valid symbol `>= from` that may follow `prev`.
    fn first_valid(&self, prev: Option<Sym>, from: Sym) -> Option<Sym> {
        (from..2 * self.k).find(|&s| prev.is_none_or(|p| s != inverse_sym(p)))
    }

    fn smallest_of_len(&self, len: usize) -> Vec<Sym> {
        let mut w = Vec::with_capacity(len);
        for _ in 0..len {
            let s = self.first_valid(w.last().copied(), 0).expect("k >= 1");
            w.push(s);
        }
        w
    }
}

impl Iterator for ReducedWords {
    type Item = Vec<Sym>;

    fn next(&mut self) -> Option<Vec<Sym>> {
        let next = match self.current.take() {
            None => Vec::new(),
            Some(mut w) => {
                if self.k == 0 {
                    return None;
                }
                // Odometer step within the current length.
                let mut i = w.len();
                let mut advanced = false;
                while i > 0 {
                    i -= 1;
                    let prev = if i == 0 { None } else { Some(w[i - 1]) };
                    if let Some(s) = self.first_valid(prev, w[i] + 1) {
                        w[i] = s;
                        for j in i + 1..w.len() {
                            w[j] = self.first_valid(Some(w[j - 1]), 0).expect("k >= 1");
                        }
                        advanced = true;
                        break;
                    }
                }
                if advanced {
                    w
                } else if w.len() < self.depth {
                    self.smallest_of_len(w.len() + 1)
                } else {
                    return None;
                }
            }
        };
        self.current = Some(next.clone());
        Some(next)
    }
}

/// A group element together with the word that produced it.
#[derive(Debug, Clone)]
pub struct Element {
    pub syms: Vec<Sym>,
    pub matrix: MoebiusTransform,
}

/// All reduced words of length `<= depth` evaluated in the group generated
/// by `gens`, in shortlex order. The word `s1 s2 .. sl` denotes
/// `s1 ∘ s2 ∘ .. ∘ sl`.
pub fn elements_up_to(gens: &[MoebiusTransform], depth: usize) -> Vec<Element> {
    let syms: Vec<MoebiusTransform> = gens.iter().flat_map(|g| [*g, g.inverse()]).collect();
    let mut out = vec![Element { syms: Vec::new(), matrix: MoebiusTransform::IDENTITY }];
    let mut level_start = 0;
    for _ in 0..depth {
        let level_end = out.len();
        for idx in level_start..level_end {
            for (s, m) in syms.iter().enumerate() {
                let parent = &out[idx];
                if parent.syms.last().is_some_and(|&l| s == inverse_sym(l)) {
                    continue;
                }
                let mut w = parent.syms.clone();
                w.push(s);
                let matrix = parent.matrix.mul_raw(m).normalize();
                out.push(Element { syms: w, matrix });
            }
        }
        level_start = level_end;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_reduced_words(2, 1).count(), 5);
        assert_eq!(enumerate_reduced_words(2, 2).count(), 17);
        assert_eq!(enumerate_reduced_words(1, 3).count(), 7);
        assert_eq!(enumerate_reduced_words(3, 0).count(), 1);
    }

    #[test]
    fn formula_matches_enumeration() {
        for k in 1..=4 {
            for depth in 0..=8 {
                assert_eq!(enumerate_reduced_words(k, depth).count() as u128, reduced_word_count(k, depth), "k={k} depth={depth}");
            }
        }
    }

    #[test]
    fn shortlex_order_and_labels() {
        let labels: Vec<Label> = vec!["a".parse().unwrap(), "b".parse().unwrap()];
        let words: Vec<String> = enumerate_reduced_words(2, 2).map(|w| to_word(&w, &labels).to_string()).collect();
        assert_eq!(&words[..6], &["1", "a", "A", "b", "B", "aa"]);
        assert!(!words.contains(&"aA".to_string()));
    }

    #[test]
    fn elements_match_words() {
        let a = MoebiusTransform::scaling(4.0).unwrap();
        let b = MoebiusTransform::from_real(2.0, 1.0, 1.0, 1.0).unwrap();
        let els = elements_up_to(&[a, b], 3);
        assert_eq!(els.len() as u128, reduced_word_count(2, 3));
        for (e, w) in els.iter().zip(enumerate_reduced_words(2, 3)) {
            assert_eq!(e.syms, w);
            let direct = w.iter().fold(MoebiusTransform::IDENTITY, |acc, &s| {
                let g = if s == 0 { a } else if s == 1 { a.inverse() } else if s == 2 { b } else { b.inverse() };
                acc.compose(&g)
            });
            assert!(e.matrix.approx_eq(&direct, 1e-9));
        }
    }

    proptest! {
        #[test]
        fn all_enumerated_words_are_reduced(k in 1usize..4, depth in 0usize..5) {
            for w in enumerate_reduced_words(k, depth) {
                prop_assert!(w.windows(2).all(|p| p[1] != inverse_sym(p[0])));
                prop_assert!(w.len() <= depth);
            }
        }
    }
}
