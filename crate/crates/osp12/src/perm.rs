//! Elements of the symmetric group as words in adjacent transpositions.
//!
//! A `Permutation` of degree `n` is stored as a word `[i1, i2, ..., ip]`
//! meaning `s = s_{i1} ∘ s_{i2} ∘ ... ∘ s_{ip}` (the rightmost letter acts
//! first), where `s_i` swaps `i` and `i+1`. The word drives the braided
//! conjugation action; one-line notation is derived on demand.

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation {
    n: usize,
    word: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            n,
            word: Vec::new(),
        }
    }

    /// A single adjacent transposition `s_i` (`1 ≤ i ≤ n-1`).
    pub fn transposition(n: usize, i: usize) -> Result<Self> {
        Self::from_word(n, vec![i])
    }

    /// Build from a word in the letters `s_1..s_{n-1}`; need not be reduced.
    pub fn from_word(n: usize, word: Vec<usize>) -> Result<Self> {
        for &i in &word {
            if i == 0 || i >= n {
                return Err(Error::InvalidWordLetter {
                    letter: i,
                    max: n - 1,
                });
            }
        }
        Ok(Self { n, word })
    }

    /// Build from one-line notation `images[j-1] = s(j)`, producing the
    /// canonical reduced word by leftmost-descent bubble sort.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidSubset(format!(
                    "not a permutation of 1..={n}: {images:?}"
                )));
            }
            seen[v] = true;
        }
        // each swap of adjacent entries at positions (j, j+1) multiplies by
        // s_j on the right; the reduced word is the reversed swap sequence
        let mut arr = images.to_vec();
        let mut swaps = Vec::new();
        while let Some(j) = arr.windows(2).position(|w| w[0] > w[1]) {
            arr.swap(j, j + 1);
            swaps.push(j + 1);
        }
        swaps.reverse();
        Ok(Self { n, word: swaps })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Image of `i` (1-based) under the permutation.
    pub fn image(&self, i: usize) -> usize {
        debug_assert!(i >= 1 && i <= self.n);
        let mut x = i;
        for &letter in self.word.iter().rev() {
            if x == letter {
                x = letter + 1;
            } else if x == letter + 1 {
                x = letter;
            }
        }
        x
    }

    pub fn one_line(&self) -> Vec<usize> {
        (1..=self.n).map(|i| self.image(i)).collect()
    }

    /// Image of a set of indices.
    pub fn image_set(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&i| self.image(i)).collect();
        out.sort_unstable();
        out
    }

    pub fn is_identity(&self) -> bool {
        self.one_line().iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `self ∘ other` (apply `other` first), concatenating words.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n != other.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Ok(Permutation { n: self.n, word })
    }

    /// Inverse permutation (reversed word; letters are involutions).
    pub fn inverse(&self) -> Permutation {
        let mut word = self.word.clone();
        word.reverse();
        Permutation { n: self.n, word }
    }

    /// The canonical shuffle sending the sorted set `from` to the sorted set
    /// `to` elementwise, and the complement of `from` to the complement of
    /// `to` elementwise, as a reduced word.
    pub fn shuffle(n: usize, from: &[usize], to: &[usize]) -> Result<Permutation> {
        if from.len() != to.len() {
            return Err(Error::InvalidSubset(format!(
                "shuffle size mismatch: {from:?} vs {to:?}"
            )));
        }
        let mut images = vec![0usize; n];
        let in_set = |set: &[usize], v: usize| set.binary_search(&v).is_ok();
        for (f, t) in from.iter().zip(to.iter()) {
            if *f == 0 || *f > n || *t == 0 || *t > n {
                return Err(Error::LegOutOfRange {
                    leg: (*f).max(*t),
                    arity: n,
                });
            }
            images[f - 1] = *t;
        }
        let comp_from: Vec<usize> = (1..=n).filter(|v| !in_set(from, *v)).collect();
        let comp_to: Vec<usize> = (1..=n).filter(|v| !in_set(to, *v)).collect();
        for (f, t) in comp_from.iter().zip(comp_to.iter()) {
            images[f - 1] = *t;
        }
        Self::from_one_line(&images)
    }
}
