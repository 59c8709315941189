//! HOMFLY polynomial by skein recursion, normalized by `P(unknot) = 1` and
//! `P₊ = vzP₀ + v²P₋`.
//!
//! Components are traversed from fixed basepoints. At the first crossing
//! met on its under-strand the diagram is switched and smoothed; a diagram
//! with no such crossing is an unlink. Crossing-removing Reidemeister I and
//! II moves are applied at every node.

use std::sync::atomic::{AtomicUsize, Ordering};

use thiserror::Error;

use crate::braid::BraidWord;
use crate::diagram::PDDiagram;
use crate::poly::{LaurentPoly2, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomflyError {
    #[error("skein tree exceeded {limit} nodes")]
    Budget { limit: usize },
}

pub const DEFAULT_SKEIN_BUDGET: usize = 1 << 20;

/// Below this depth the two branches of a node run in parallel.
const PARALLEL_DEPTH: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Active,
    Smoothed,
    Removed,
}

/// Passage slot `2c + s`: strand `s` through crossing `c`, where strand 0
/// was the under-strand in the input diagram.
#[derive(Debug, Clone)]
struct State {
    next: Vec<usize>,
    mode: Vec<Mode>,
    over: Vec<u8>,
    sign: Vec<i8>,
    free_loops: usize,
}

impl State {
    fn new(d: &PDDiagram) -> Self {
        let xs = d.crossings();
        let mut next = vec![0; 2 * xs.len()];
        for (c, x) in xs.iter().enumerate() {
            for (s, out) in [(0, x.under_out()), (1, x.over_out())] {
                let (h, p) = d.head_of(out).expect("every arc has a head");
                next[2 * c + s] = 2 * h + usize::from(p != 0);
            }
        }
        Self {
            next,
            mode: vec![Mode::Active; xs.len()],
            over: vec![1; xs.len()],
            sign: xs.iter().map(|x| x.sign).collect(),
            free_loops: d.free_loops(),
        }
    }

    /// The passage entered after entering `slot`.
    fn succ(&self, slot: usize) -> usize {
        let c = slot / 2;
        let exit = if self.mode[c] == Mode::Smoothed { slot ^ 1 } else { slot };
        self.next[exit]
    }

    /// The next passage through an active crossing, if any is met before
    /// returning to `slot`.
    fn next_active(&self, slot: usize) -> Option<usize> {
        let mut p = self.succ(slot);
        loop {
            if self.mode[p / 2] == Mode::Active {
                return Some(p);
            }
            if p == slot {
                return None;
            }
            p = self.succ(p);
        }
    }

    fn simplify(&mut self) {
        loop {
            let mut changed = false;
            for c in 0..self.mode.len() {
                if self.mode[c] != Mode::Active {
                    continue;
                }
                if self.try_r1(c) || self.try_r2(c) {
                    changed = true;
                }
            }
            if !changed {
                return;
            }
        }
    }

    fn try_r1(&mut self, c: usize) -> bool {
        for s in 0..2 {
            if self.next_active(2 * c + s) == Some(2 * c + (1 - s)) {
                self.mode[c] = Mode::Removed;
                return true;
            }
        }
        false
    }

    fn try_r2(&mut self, c: usize) -> bool {
        for s in 0..2 {
            let Some(t) = self.next_active(2 * c + s) else { continue };
            let (d, x) = (t / 2, t % 2);
            if d == c || self.sign[d] == self.sign[c] {
                continue;
            }
            let parallel = self.next_active(2 * c + (1 - s)) == Some(2 * d + (1 - x));
            let anti = self.next_active(2 * d + (1 - x)) == Some(2 * c + (1 - s));
            let aligned = (s as u8 == self.over[c]) == (x as u8 == self.over[d]);
            if (parallel || anti) && aligned {
                self.mode[c] = Mode::Removed;
                self.mode[d] = Mode::Removed;
                return true;
            }
        }
        false
    }

    /// First crossing met on its under-strand, or the component count when
    /// the diagram is descending.
    fn first_ascending(&self) -> Result<usize, usize> {
        let slots = self.next.len();
        let mut visited = vec![false; slots];
        let mut seen = vec![false; self.mode.len()];
        let mut cycles = 0;
        for start in 0..slots {
            if visited[start] {
                continue;
            }
            cycles += 1;
            let mut p = start;
            while !visited[p] {
                visited[p] = true;
                let c = p / 2;
                if self.mode[c] == Mode::Active && !seen[c] {
                    seen[c] = true;
                    if (p % 2) as u8 != self.over[c] {
                        return Ok(c);
                    }
                }
                p = self.succ(p);
            }
        }
        Err(cycles + self.free_loops)
    }
}

struct Engine {
    nodes: AtomicUsize,
    limit: usize,
}

impl Engine {
    fn eval(&self, mut st: State, depth: usize) -> Result<LaurentPoly2, HomflyError> {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.limit {
            return Err(HomflyError::Budget { limit: self.limit });
        }
        st.simplify();
        let c = match st.first_ascending() {
            Ok(c) => c,
            Err(mu) => return Ok(LaurentPoly2::unlink(mu)),
        };
        let sign = st.sign[c];
        let mut switched = st.clone();
        switched.over[c] ^= 1;
        switched.sign[c] = -sign;
        let mut smoothed = st;
        smoothed.mode[c] = Mode::Smoothed;
        let (ps, p0) = if depth < PARALLEL_DEPTH {
            rayon::join(|| self.eval(switched, depth + 1), || self.eval(smoothed, depth + 1))
        } else {
            (self.eval(switched, depth + 1), self.eval(smoothed, depth + 1))
        };
        let (ps, p0) = (ps?, p0?);
        Ok(if sign > 0 {
            // P₊ = vz P₀ + v² P₋
            p0.mul_monomial(1, 1, 1) + ps.mul_monomial(1, 2, 0)
        } else {
            // P₋ = v⁻² P₊ − v⁻¹z P₀
            ps.mul_monomial(1, -2, 0) - p0.mul_monomial(1, -1, 1)
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomflyResult {
    pub poly: LaurentPoly2,
    pub nodes: usize,
}

pub fn homfly_pd_with_budget(d: &PDDiagram, limit: usize) -> Result<HomflyResult, HomflyError> {
    let engine = Engine { nodes: AtomicUsize::new(0), limit };
    let poly = engine.eval(State::new(d), 0)?;
    Ok(HomflyResult { poly, nodes: engine.nodes.load(Ordering::Relaxed) })
}

pub fn homfly_pd(d: &PDDiagram) -> Result<LaurentPoly2, HomflyError> {
    homfly_pd_with_budget(d, DEFAULT_SKEIN_BUDGET).map(|r| r.poly)
}

pub fn homfly_braid(b: &BraidWord) -> Result<LaurentPoly2, HomflyError> {
    homfly_pd(&PDDiagram::from_braid_closure(b))
}

/// Crossings left after exhaustive crossing-removing R1/R2 moves.
pub fn reduced_crossing_count(d: &PDDiagram) -> usize {
    let mut st = State::new(d);
    st.simplify();
    st.mode.iter().filter(|&&m| m == Mode::Active).count()
}

pub fn ord_v(p: &LaurentPoly2) -> Result<i32, PolyError> {
    p.ord_v()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FwmVerdict {
    /// `ord_v P < 1 − χ_s`: the link is not quasipositive.
    Refuted { ord_v: i32, required: i64 },
    Consistent { ord_v: i32, required: i64 },
}

impl FwmVerdict {
    pub fn is_refuted(&self) -> bool {
        matches!(self, FwmVerdict::Refuted { .. })
    }
}

/// A quasipositive link has `ord_v P ≥ 1 − χ_s`; `chi_s_upper` must be a
/// sound upper bound for `χ_s`.
pub fn fwm_obstruction(p: &LaurentPoly2, chi_s_upper: i64) -> Result<FwmVerdict, PolyError> {
    let ord = p.ord_v()?;
    let required = 1 - chi_s_upper;
    Ok(if (ord as i64) < required {
        FwmVerdict::Refuted { ord_v: ord, required }
    } else {
        FwmVerdict::Consistent { ord_v: ord, required }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_poly;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn unknot_and_unlinks() {
        assert_eq!(homfly_braid(&w(1, &[])).unwrap(), LaurentPoly2::one());
        assert_eq!(homfly_braid(&w(2, &[1])).unwrap(), LaurentPoly2::one());
        assert_eq!(homfly_braid(&w(2, &[-1])).unwrap(), LaurentPoly2::one());
        assert_eq!(homfly_braid(&w(3, &[])).unwrap(), LaurentPoly2::unlink(3));
        assert_eq!(homfly_braid(&w(2, &[1, -1])).unwrap(), LaurentPoly2::unlink(2));
    }

    #[test]
    fn hopf_and_trefoil() {
        let hopf = homfly_braid(&w(2, &[1, 1])).unwrap();
        assert_eq!(hopf, parse_poly("v*z + (v - v^3)/z").unwrap());
        assert_eq!(hopf.ord_v().unwrap(), 1);
        let trefoil = homfly_braid(&w(2, &[1, 1, 1])).unwrap();
        assert_eq!(trefoil, parse_poly("v^2*z^2 + 2*v^2 - v^4").unwrap());
        assert_eq!(homfly_braid(&w(2, &[-1, -1, -1])).unwrap(), trefoil.mirror());
    }

    #[test]
    fn figure_eight_is_amphicheiral() {
        let p = homfly_braid(&w(3, &[-1, 2, -1, 2])).unwrap();
        assert_eq!(p, p.mirror());
    }

    #[test]
    fn kinks_are_removed_before_branching() {
        let d = PDDiagram::from_braid_closure(&w(3, &[1, 2, 2, -2, -1]));
        assert_eq!(reduced_crossing_count(&d), 0);
    }

    #[test]
    fn budget_is_enforced() {
        let d = PDDiagram::from_braid_closure(&w(3, &[1, -2, 1, -2, 1, -2]));
        assert_eq!(homfly_pd_with_budget(&d, 2), Err(HomflyError::Budget { limit: 2 }));
    }

    #[test]
    fn fwm_examples() {
        let hopf = homfly_braid(&w(2, &[1, 1])).unwrap();
        assert!(!fwm_obstruction(&hopf, 0).unwrap().is_refuted());
        let trefoil = homfly_braid(&w(2, &[1, 1, 1])).unwrap();
        assert_eq!(
            fwm_obstruction(&trefoil, -1).unwrap(),
            FwmVerdict::Consistent { ord_v: 2, required: 2 }
        );
        assert!(fwm_obstruction(&LaurentPoly2::zero(), 0).is_err());
    }
}
