//! Bounded search for lower bounds on χ_s⁻ of a braid closure.
//!
//! Replacing a letter `σ_i⁻¹` by `σ_i` can only lower χ_s⁻, and every
//! all-positive word `β'` reached this way certifies
//! `χ_s⁻(β̂) ≥ χ_s⁻(β̂') = n − ℓ(β')`. The other moves keep the closure
//! unchanged and only serve to shorten positive words.

use std::collections::{HashSet, VecDeque};

use super::{BraidWord, NormalForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    /// Replace the negative letter at this position by its positive.
    Flip(usize),
    /// Free and cyclic reduction.
    Reduce,
    /// Drop an isolated generator and one strand.
    Destabilize,
    /// Move the first letter to the end.
    Rotate,
    /// Rewrite by braid relations and commutations into a positive word.
    Rewrite,
}

impl Move {
    pub fn name(&self) -> String {
        match self {
            Move::Flip(p) => format!("flip@{p}"),
            Move::Reduce => "reduce".into(),
            Move::Destabilize => "destabilize".into(),
            Move::Rotate => "rotate".into(),
            Move::Rewrite => "rewrite".into(),
        }
    }

    pub fn is_flip(&self) -> bool {
        matches!(self, Move::Flip(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: usize,
    pub max_depth: usize,
    pub allow_flips: bool,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self { max_nodes: 100_000, max_depth: 24, allow_flips: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchStep {
    pub mv: Move,
    pub word: BraidWord,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub bound: i32,
    /// Moves from the input word to the scoring positive word.
    pub path: Vec<SearchStep>,
    pub nodes: usize,
    /// False when the search never reached a positive braid and fell back
    /// to flipping every negative letter.
    pub reached_positive: bool,
}

/// Flips that create a cancelling pair come first.
fn flip_order(l: &[i32]) -> Vec<usize> {
    let k = l.len();
    let cancels = |p: usize| {
        let e = -l[p];
        k > 1 && (l[(p + k - 1) % k] == -e || l[(p + 1) % k] == -e)
    };
    let neg: Vec<usize> = (0..k).filter(|&p| l[p] < 0).collect();
    let (mut first, rest): (Vec<usize>, Vec<usize>) = neg.into_iter().partition(|&p| cancels(p));
    first.extend(rest);
    first
}

fn successors(w: &BraidWord, allow_flips: bool) -> Vec<(Move, BraidWord)> {
    let n = w.strands();
    let l = w.letters();
    let mut out = Vec::new();
    let r = w.reduce_word();
    if r.len() != w.len() {
        // Reduction never hurts, so it is the only move offered.
        return vec![(Move::Reduce, r)];
    }
    if let Some(d) = w.destabilize_isolated() {
        out.push((Move::Destabilize, d));
    }
    if allow_flips {
        for p in flip_order(l) {
            let mut m = l.to_vec();
            m[p] = -m[p];
            out.push((Move::Flip(p), BraidWord { strands: n, letters: m }));
        }
    }
    if l.len() >= 2 {
        out.push((Move::Rotate, w.rotate(1)));
    }
    out
}

fn flip_all(w: &BraidWord) -> (BraidWord, Vec<SearchStep>) {
    let mut cur = w.clone();
    let mut path = Vec::new();
    for p in 0..w.len() {
        if cur.letters[p] < 0 {
            cur.letters[p] = -cur.letters[p];
            path.push(SearchStep { mv: Move::Flip(p), word: cur.clone() });
        }
    }
    (cur, path)
}

/// Breadth-first search over the move graph, memoised on
/// `(strands, length, normal form)`. A node scores when its normal form is
/// positive; braid relations and commutations between words of one element
/// are thereby folded into the memo key. Node order is deterministic, so the
/// result is monotone in the budget.
///
/// Ties between equal scores go to the witness on fewer strands.
pub fn chi_minus_lower_bound(word: &BraidWord, budget: SearchBudget) -> SearchOutcome {
    struct Node {
        word: BraidWord,
        nf: NormalForm,
        parent: Option<(usize, Move)>,
        depth: usize,
    }
    let nf0 = NormalForm::of(word);
    let mut arena = vec![Node { word: word.clone(), nf: nf0.clone(), parent: None, depth: 0 }];
    let mut seen = HashSet::new();
    seen.insert((word.strands(), word.len(), nf0));
    let mut queue = VecDeque::from([0usize]);
    let mut best: Option<(i32, usize, usize)> = None;
    let mut nodes = 0;

    while let Some(idx) = queue.pop_front() {
        nodes += 1;
        let node = &arena[idx];
        if node.nf.is_positive() {
            let n = node.word.strands();
            let score = n as i32 - node.word.writhe() as i32;
            let better = best.map_or(true, |(b, bn, _)| score > b || (score == b && n < bn));
            if better {
                best = Some((score, n, idx));
            }
        }
        if nodes >= budget.max_nodes {
            break;
        }
        if node.depth >= budget.max_depth {
            continue;
        }
        let depth = node.depth;
        for (mv, next) in successors(&node.word.clone(), budget.allow_flips) {
            let nf = NormalForm::of(&next);
            if seen.insert((next.strands(), next.len(), nf.clone())) {
                arena.push(Node { word: next, nf, parent: Some((idx, mv)), depth: depth + 1 });
                queue.push_back(arena.len() - 1);
            }
        }
    }

    let trivial = if budget.allow_flips { Some(flip_all(word)) } else { None };
    match best {
        Some((score, _, idx)) if trivial.as_ref().map_or(true, |(t, _)| score >= t.bennequin_chi()) => {
            let mut path = Vec::new();
            let mut cur = idx;
            while let Some((parent, mv)) = arena[cur].parent {
                path.push(SearchStep { mv, word: arena[cur].word.clone() });
                cur = parent;
            }
            path.reverse();
            let end = &arena[idx];
            if !end.word.is_positive() {
                let p = end.nf.positive_word().expect("normal form is positive");
                path.push(SearchStep { mv: Move::Rewrite, word: p });
            }
            SearchOutcome { bound: score, path, nodes, reached_positive: true }
        }
        _ => {
            let (t, path) = trivial.unwrap_or_else(|| (word.clone(), Vec::new()));
            SearchOutcome {
                bound: if t.is_positive() { t.bennequin_chi() } else { i32::MIN },
                path,
                nodes,
                reached_positive: best.is_some(),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn negative_hopf() {
        let out = chi_minus_lower_bound(&w(2, &[-1, -1]), SearchBudget::default());
        assert_eq!(out.bound, 2);
        assert!(out.reached_positive);
    }

    #[test]
    fn figure_eight() {
        let out = chi_minus_lower_bound(&w(3, &[-1, 2, -1, 2]), SearchBudget::default());
        assert_eq!(out.bound, 1);
        let last = out.path.last().unwrap();
        assert_eq!(last.mv, Move::Rewrite);
        assert_eq!(last.word.len(), 2);
    }

    #[test]
    fn worked_chain_of_moves() {
        let out = chi_minus_lower_bound(&w(3, &[1, -2, -1, -1, -2]), SearchBudget::default());
        assert_eq!(out.bound, 2);
        assert!(out.path[0].mv.is_flip());
        assert_eq!(out.path[1].mv, Move::Reduce);
        assert_eq!(out.path[1].word, w(3, &[1, -2, -2]));
        assert!(out.nodes < 1000);
    }

    #[test]
    fn tiny_budget_falls_back_to_flipping_everything() {
        let budget = SearchBudget { max_nodes: 1, ..SearchBudget::default() };
        let out = chi_minus_lower_bound(&w(2, &[-1, -1]), budget);
        assert_eq!(out.bound, 0);
        assert!(!out.reached_positive);
    }

    #[test]
    fn rewrites_alone_reach_conjugated_positive_factors() {
        // σ2 (σ1 σ2 σ1⁻¹): conjugators are positive words
        let word = w(3, &[2, 1, 2, -1]);
        let budget = SearchBudget { allow_flips: false, ..SearchBudget::default() };
        let out = chi_minus_lower_bound(&word, budget);
        assert_eq!(out.bound, 3 - 2);
    }
}
