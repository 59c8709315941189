//! Braid words in Artin generators, quasipositive factorizations and the
//! word-level moves used by the χ_s⁻ lower-bound search.
//!
//! A letter `e > 0` stands for `σ_e`, `e < 0` for `σ_{|e|}⁻¹`. Strands are
//! numbered from 1 on the left.

mod garside;
mod search;

pub use garside::{NormalForm, Permutation};
pub use search::{chi_minus_lower_bound, Move, SearchBudget, SearchOutcome, SearchStep};

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("generator index {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("letter 0 is not a generator")]
    ZeroLetter,
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands < 1 {
            return Err(BraidError::NoStrands);
        }
        for &e in &letters {
            if e == 0 {
                return Err(BraidError::ZeroLetter);
            }
            if e.unsigned_abs() as usize >= strands {
                return Err(BraidError::LetterOutOfRange { letter: e, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1);
        Self { strands, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&e| e > 0)
    }

    pub fn writhe(&self) -> i32 {
        self.letters.iter().map(|e| e.signum()).sum()
    }

    /// The permutation of strand positions (0-based): a strand starting at
    /// position `i` ends at `perm[i]`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &e in &self.letters {
            let i = e.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        // at[p] = strand now at position p
        let mut perm = vec![0; self.strands];
        for (p, &s) in at.iter().enumerate() {
            perm[s] = p;
        }
        perm
    }

    /// Closure components as lists of starting positions, ordered by their
    /// smallest starting position.
    pub fn closure_components(&self) -> Vec<Vec<usize>> {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut comps = Vec::new();
        for s in 0..self.strands {
            if seen[s] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = perm[x];
            }
            comps.push(cyc);
        }
        comps
    }

    pub fn stats(&self) -> BraidStats {
        BraidStats {
            components: self.closure_components().len(),
            writhe: self.writhe(),
            permutation: self.permutation(),
        }
    }

    /// Euler characteristic `n − ℓ` of the Bennequin surface of the closure.
    pub fn bennequin_chi(&self) -> i32 {
        self.strands as i32 - self.letters.len() as i32
    }

    /// Every letter negated; the closure becomes the mirror image.
    pub fn mirror(&self) -> Self {
        Self { strands: self.strands, letters: self.letters.iter().map(|e| -e).collect() }
    }

    /// Letters in reverse order; the closure gets the opposite orientation.
    pub fn reverse(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.reverse();
        Self { strands: self.strands, letters }
    }

    pub fn inverse(&self) -> Self {
        Self { strands: self.strands, letters: self.letters.iter().rev().map(|e| -e).collect() }
    }

    pub fn concat(&self, other: &Self) -> Result<Self, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { strands: self.strands, letters })
    }

    /// Move the first `k` letters to the end (conjugation).
    pub fn rotate(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        Self { strands: self.strands, letters }
    }

    /// Cancel adjacent `e, −e` pairs until none is left.
    pub fn free_reduce(&self) -> Self {
        let mut stack: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &e in &self.letters {
            if stack.last() == Some(&-e) {
                stack.pop();
            } else {
                stack.push(e);
            }
        }
        Self { strands: self.strands, letters: stack }
    }

    /// Free and cyclic reduction: also cancels a pair straddling the end and
    /// the start of the word, which conjugates the braid.
    pub fn reduce_word(&self) -> Self {
        let stack = self.free_reduce().letters;
        let mut lo = 0;
        let mut hi = stack.len();
        while hi - lo >= 2 && stack[lo] == -stack[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        Self { strands: self.strands, letters: stack[lo..hi].to_vec() }
    }

    /// If some generator index `i` occurs exactly once in the word, delete
    /// that letter, giving a word on one fewer strand with the same closure
    /// (Markov destabilization after conjugation). The letters below and
    /// above `i` commute in the original word but not after shifting, so
    /// the result lists the lower letters first, then the upper ones
    /// shifted down. The lowest such index is used.
    pub fn destabilize_isolated(&self) -> Option<Self> {
        if self.strands < 2 {
            return None;
        }
        let mut counts = vec![0usize; self.strands];
        for &e in &self.letters {
            counts[e.unsigned_abs() as usize] += 1;
        }
        let i = (1..self.strands).find(|&i| counts[i] == 1)? as i32;
        let mut letters: Vec<i32> = self.letters.iter().copied().filter(|e| e.abs() < i).collect();
        letters.extend(self.letters.iter().filter(|e| e.abs() > i).map(|&e| e - e.signum()));
        Some(Self { strands: self.strands - 1, letters })
    }

    /// Occurrences of each generator index; slot 0 is unused.
    pub fn generator_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.strands];
        for &e in &self.letters {
            counts[e.unsigned_abs() as usize] += 1;
        }
        counts
    }

    /// The braid word of the closure's sublink made of the given closure
    /// components (indices into [`BraidWord::closure_components`]).
    pub fn sublink(&self, keep_components: &[usize]) -> Self {
        let comps = self.closure_components();
        let mut keep = vec![false; self.strands];
        for &c in keep_components {
            for &s in &comps[c] {
                keep[s] = true;
            }
        }
        // at[p] = starting position of the strand at position p
        let mut at: Vec<usize> = (0..self.strands).collect();
        let mut letters = Vec::new();
        for &e in &self.letters {
            let i = e.unsigned_abs() as usize - 1;
            if keep[at[i]] && keep[at[i + 1]] {
                let rank = (0..i).filter(|&p| keep[at[p]]).count() as i32 + 1;
                letters.push(rank * e.signum());
            }
            at.swap(i, i + 1);
        }
        let strands = keep.iter().filter(|&&k| k).count().max(1);
        Self { strands, letters }
    }

    /// Braid of the split union: `other` placed to the right on fresh strands.
    pub fn split_union(&self, other: &Self) -> Self {
        let shift = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().map(|&e| e + shift * e.signum()));
        Self { strands: self.strands + other.strands, letters }
    }

    /// Braid of a connected sum: the last strand of `self` is merged with
    /// the first strand of `other`.
    pub fn connected_sum(&self, other: &Self) -> Self {
        let shift = self.strands as i32 - 1;
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().map(|&e| e + shift * e.signum()));
        Self { strands: self.strands + other.strands - 1, letters }
    }

    pub fn normal_form(&self) -> NormalForm {
        NormalForm::of(self)
    }
}

/// Whether two words represent the same braid-group element.
pub fn braid_equal(a: &BraidWord, b: &BraidWord) -> Result<bool, BraidError> {
    if a.strands != b.strands {
        return Err(BraidError::StrandMismatch(a.strands, b.strands));
    }
    Ok(a.normal_form() == b.normal_form())
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::notation::render_braid(self))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::notation::render_braid(self))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidStats {
    pub components: usize,
    pub writhe: i32,
    pub permutation: Vec<usize>,
}

/// One factor `w σ_j w⁻¹` of a quasipositive factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPFactor {
    pub conjugator: Vec<i32>,
    pub generator: usize,
}

/// A braid written as a product of conjugates of positive generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPFactorization {
    strands: usize,
    factors: Vec<QPFactor>,
}

impl QPFactorization {
    pub fn new(strands: usize, factors: Vec<QPFactor>) -> Result<Self, BraidError> {
        if strands < 1 {
            return Err(BraidError::NoStrands);
        }
        for f in &factors {
            if f.generator == 0 || f.generator >= strands {
                return Err(BraidError::LetterOutOfRange { letter: f.generator as i32, strands });
            }
            BraidWord::new(strands, f.conjugator.clone())?;
        }
        Ok(Self { strands, factors })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn factors(&self) -> &[QPFactor] {
        &self.factors
    }

    /// Number of factors `k`.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The concatenated word `w₁σ_{j₁}w₁⁻¹ ⋯ w_kσ_{j_k}w_k⁻¹`.
    pub fn expand(&self) -> BraidWord {
        let mut letters = Vec::new();
        for f in &self.factors {
            letters.extend_from_slice(&f.conjugator);
            letters.push(f.generator as i32);
            letters.extend(f.conjugator.iter().rev().map(|e| -e));
        }
        BraidWord { strands: self.strands, letters }
    }

    /// `n − k`: χ_s and χ_s⁻ of the closure of a quasipositive braid.
    pub fn chi(&self) -> i32 {
        self.strands as i32 - self.factors.len() as i32
    }

    /// Trivially conjugated factorization of a positive word.
    pub fn from_positive(word: &BraidWord) -> Option<Self> {
        if !word.is_positive() {
            return None;
        }
        Some(Self {
            strands: word.strands,
            factors: word
                .letters
                .iter()
                .map(|&e| QPFactor { conjugator: Vec::new(), generator: e as usize })
                .collect(),
        })
    }
}

/// Alias kept for callers that prefer the free-function form.
pub fn expand_qp(q: &QPFactorization) -> BraidWord {
    q.expand()
}

pub fn qp_chi(q: &QPFactorization) -> i32 {
    q.chi()
}
