//! Left normal form in the Garside structure of the braid group.
//!
//! A braid is written `Δ^inf · A₁ ⋯ A_r` where each `A_k` is a positive
//! permutation braid different from `1` and `Δ`, and every consecutive
//! pair is left-weighted. The form is a complete invariant of the group
//! element, so it decides the word problem and serves as a memo key.

use super::BraidWord;

/// A positive permutation braid: the strand starting at position `i`
/// ends at position `self.0[i]` (0-based), every pair crossing at most once.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(pub Vec<u8>);

impl Permutation {
    fn identity(n: usize) -> Self {
        Self((0..n as u8).collect())
    }

    fn delta(n: usize) -> Self {
        Self((0..n as u8).rev().collect())
    }

    fn generator(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(i, i + 1);
        p
    }

    fn n(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    pub fn is_delta(&self) -> bool {
        let n = self.n();
        self.0.iter().enumerate().all(|(i, &p)| p as usize == n - 1 - i)
    }

    fn inverse(&self) -> Vec<u8> {
        let mut inv = vec![0u8; self.n()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p as usize] = i as u8;
        }
        inv
    }

    /// `i` such that the braid can start with `σ_i`.
    fn starts_with(&self, i: usize) -> bool {
        self.0[i] > self.0[i + 1]
    }

    /// `i` such that the braid can end with `σ_i`.
    fn finishing_set(&self) -> Vec<bool> {
        let inv = self.inverse();
        (0..self.n() - 1).map(|i| inv[i] > inv[i + 1]).collect()
    }

    /// `self · σ_i`.
    fn append_generator(&mut self, i: usize) {
        for p in self.0.iter_mut() {
            if *p as usize == i {
                *p = (i + 1) as u8;
            } else if *p as usize == i + 1 {
                *p = i as u8;
            }
        }
    }

    /// `σ_i⁻¹ · self`, valid when the braid starts with `σ_i`.
    fn strip_leading_generator(&mut self, i: usize) {
        self.0.swap(i, i + 1);
    }

    /// Conjugation by Δ: `σ_i ↦ σ_{n−i}`.
    fn flip(&self) -> Self {
        let n = self.n();
        Self((0..n).map(|j| (n - 1 - self.0[n - 1 - j] as usize) as u8).collect())
    }

    /// The simple braid `Δ σ_i⁻¹`.
    fn delta_without(n: usize, i: usize) -> Self {
        let mut p = Self::delta(n);
        for x in p.0.iter_mut() {
            if *x as usize == i {
                *x = (i + 1) as u8;
            } else if *x as usize == i + 1 {
                *x = i as u8;
            }
        }
        p
    }
}

/// Make `(a, b)` left-weighted in place; returns whether anything moved.
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let mut changed = false;
    loop {
        let fin = a.finishing_set();
        let Some(i) = (0..fin.len()).find(|&i| b.starts_with(i) && !fin[i]) else {
            return changed;
        };
        a.append_generator(i);
        b.strip_leading_generator(i);
        changed = true;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    pub strands: usize,
    pub infimum: i64,
    pub factors: Vec<Permutation>,
}

impl NormalForm {
    pub fn of(word: &BraidWord) -> Self {
        let n = word.strands();
        if n == 1 {
            return Self { strands: 1, infimum: 0, factors: Vec::new() };
        }
        let mut neg_delta = 0i64;
        let mut factors: Vec<Permutation> = Vec::with_capacity(word.len());
        for &e in word.letters() {
            let i = e.unsigned_abs() as usize - 1;
            if e > 0 {
                factors.push(Permutation::generator(n, i));
            } else {
                // P σ_i⁻¹ = Δ⁻¹ τ(P) (Δσ_i⁻¹)
                for f in factors.iter_mut() {
                    *f = f.flip();
                }
                neg_delta += 1;
                factors.push(Permutation::delta_without(n, i));
            }
        }
        loop {
            let mut changed = false;
            for k in (0..factors.len().saturating_sub(1)).rev() {
                let (left, right) = factors.split_at_mut(k + 1);
                if left_weight(&mut left[k], &mut right[0]) {
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        factors.retain(|f| !f.is_identity());
        let deltas = factors.iter().take_while(|f| f.is_delta()).count();
        factors.drain(..deltas);
        Self { strands: n, infimum: deltas as i64 - neg_delta, factors }
    }

    /// Canonical length.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    /// Whether the element is a positive braid.
    pub fn is_positive(&self) -> bool {
        self.infimum >= 0
    }

    /// A positive word for the element, when there is one.
    pub fn positive_word(&self) -> Option<BraidWord> {
        if self.infimum < 0 {
            return None;
        }
        let n = self.strands;
        let mut letters = Vec::new();
        let delta = Permutation::delta(n);
        let perms = std::iter::repeat(&delta).take(self.infimum as usize).chain(self.factors.iter());
        for p in perms {
            let mut p = p.clone();
            while let Some(i) = (0..n - 1).find(|&i| p.starts_with(i)) {
                letters.push(i as i32 + 1);
                p.strip_leading_generator(i);
            }
        }
        Some(BraidWord::new(n, letters).expect("letters within range"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::braid_equal;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn braid_relation() {
        assert!(braid_equal(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 2])).unwrap());
        assert!(!braid_equal(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 1])).unwrap());
    }

    #[test]
    fn free_cancellation() {
        assert!(braid_equal(&w(2, &[1, -1]), &w(2, &[])).unwrap());
        assert!(braid_equal(&w(4, &[-3, 1, 3, -1]), &w(4, &[])).unwrap());
    }

    #[test]
    fn far_commutation() {
        assert!(braid_equal(&w(4, &[1, 3]), &w(4, &[3, 1])).unwrap());
        assert!(!braid_equal(&w(3, &[1, 2]), &w(3, &[2, 1])).unwrap());
    }

    #[test]
    fn delta_squared_is_central() {
        let d2 = w(3, &[1, 2, 1, 1, 2, 1]);
        let x = w(3, &[1, -2]);
        let a = d2.concat(&x).unwrap();
        let b = x.concat(&d2).unwrap();
        assert!(braid_equal(&a, &b).unwrap());
        let nf = d2.normal_form();
        assert_eq!(nf.infimum, 2);
        assert!(nf.factors.is_empty());
    }

    #[test]
    fn negative_letters_normalise() {
        let nf = w(3, &[-1]).normal_form();
        assert_eq!(nf.infimum, -1);
        assert_eq!(nf.canonical_length(), 1);
    }

    #[test]
    fn positive_representatives() {
        let nf = w(3, &[-1, 2, 1, 2]).normal_form();
        let p = nf.positive_word().unwrap();
        assert_eq!(p.len(), 2);
        assert!(braid_equal(&p, &w(3, &[2, 1])).unwrap());
        let d2 = w(3, &[1, 2, 1, 1, 2, 1]);
        assert!(braid_equal(&d2.normal_form().positive_word().unwrap(), &d2).unwrap());
        assert!(w(2, &[-1]).normal_form().positive_word().is_none());
    }

    #[test]
    fn strand_mismatch_is_an_error() {
        assert!(braid_equal(&w(2, &[]), &w(3, &[])).is_err());
    }
}
