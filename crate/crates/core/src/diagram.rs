//! Oriented planar diagrams in PD notation.
//!
//! `X[i,j,k,l]` lists the four arcs at a crossing counterclockwise,
//! starting from the incoming under-strand, so the under-strand runs
//! `i → k`. The crossing is positive when the over-strand runs `l → j` and
//! negative when it runs `j → l`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::braid::BraidWord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("arc {arc} occurs {count} times; every arc must occur exactly twice")]
    ArcCount { arc: u32, count: usize },
    #[error("arc {arc} occupies opposite positions of crossing {crossing}")]
    SelfOpposite { arc: u32, crossing: usize },
    #[error("arc {arc} cannot be oriented consistently")]
    Orientation { arc: u32 },
    #[error("crossing {0} has sign 0")]
    ZeroSign(usize),
    #[error("a diagram needs at least one component")]
    Empty,
    #[error("component {index} out of range for {count} components")]
    BadComponent { index: usize, count: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub arcs: [u32; 4],
    pub sign: i8,
}

impl Crossing {
    pub fn under_in(&self) -> u32 {
        self.arcs[0]
    }

    pub fn under_out(&self) -> u32 {
        self.arcs[2]
    }

    pub fn over_in(&self) -> u32 {
        if self.sign > 0 { self.arcs[3] } else { self.arcs[1] }
    }

    pub fn over_out(&self) -> u32 {
        if self.sign > 0 { self.arcs[1] } else { self.arcs[3] }
    }

    /// Position of the incoming over-strand.
    fn over_in_pos(&self) -> usize {
        if self.sign > 0 { 3 } else { 1 }
    }

    fn is_head(&self, pos: usize) -> bool {
        pos == 0 || pos == self.over_in_pos()
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct PDDiagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
    /// Arcs of each component with crossings, in traversal order, starting
    /// from the smallest label. Components are sorted by that label.
    components: Vec<Vec<u32>>,
    arc_component: HashMap<u32, usize>,
    /// Crossing and position where each arc ends.
    head: HashMap<u32, (usize, usize)>,
}

impl PDDiagram {
    /// Build from crossings whose over-strand direction is given by `sign`.
    pub fn from_oriented(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self, DiagramError> {
        if crossings.is_empty() && free_loops == 0 {
            return Err(DiagramError::Empty);
        }
        let mut occurrences: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
        for (c, x) in crossings.iter().enumerate() {
            if x.sign != 1 && x.sign != -1 {
                return Err(DiagramError::ZeroSign(c));
            }
            for (p, &a) in x.arcs.iter().enumerate() {
                occurrences.entry(a).or_default().push((c, p));
            }
        }
        check_occurrences(&crossings, &occurrences)?;
        let mut head = HashMap::new();
        for (&a, occ) in &occurrences {
            let heads: Vec<_> = occ.iter().filter(|&&(c, p)| crossings[c].is_head(p)).collect();
            if heads.len() != 1 {
                return Err(DiagramError::Orientation { arc: a });
            }
            head.insert(a, *heads[0]);
        }
        let mut components = Vec::new();
        let mut arc_component = HashMap::new();
        for &start in occurrences.keys() {
            if arc_component.contains_key(&start) {
                continue;
            }
            let idx = components.len();
            let mut comp = Vec::new();
            let mut a = start;
            while !arc_component.contains_key(&a) {
                arc_component.insert(a, idx);
                comp.push(a);
                let (c, p) = head[&a];
                a = crossings[c].arcs[(p + 2) % 4];
            }
            components.push(comp);
        }
        Ok(Self { crossings, free_loops, components, arc_component, head })
    }

    /// Build from bare PD tuples, inferring each over-strand direction from
    /// the under-strands around it.
    pub fn from_pd_code(tuples: Vec<[u32; 4]>, free_loops: usize) -> Result<Self, DiagramError> {
        if tuples.is_empty() && free_loops == 0 {
            return Err(DiagramError::Empty);
        }
        let mut occurrences: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
        for (c, t) in tuples.iter().enumerate() {
            for (p, &a) in t.iter().enumerate() {
                occurrences.entry(a).or_default().push((c, p));
            }
        }
        let probe: Vec<Crossing> = tuples.iter().map(|&arcs| Crossing { arcs, sign: 1 }).collect();
        check_occurrences(&probe, &occurrences)?;

        // role[(c, p)] = true when the arc at that slot ends there
        let mut sign: Vec<Option<i8>> = vec![None; tuples.len()];
        let mut role: HashMap<(usize, usize), bool> = HashMap::new();
        let mut queue: Vec<(usize, usize, bool)> = Vec::new();
        for c in 0..tuples.len() {
            queue.push((c, 0, true));
            queue.push((c, 2, false));
        }
        let mut seed = 0;
        loop {
            while let Some((c, p, is_head)) = queue.pop() {
                let arc = tuples[c][p];
                match role.get(&(c, p)) {
                    Some(&r) if r != is_head => return Err(DiagramError::Orientation { arc }),
                    Some(_) => continue,
                    None => {}
                }
                role.insert((c, p), is_head);
                if p % 2 == 1 {
                    let s = if (p == 3) == is_head { 1 } else { -1 };
                    match sign[c] {
                        Some(old) if old != s => return Err(DiagramError::Orientation { arc }),
                        Some(_) => {}
                        None => {
                            sign[c] = Some(s);
                            queue.push((c, 4 - p, !is_head));
                        }
                    }
                }
                let other = occurrences[&arc].iter().copied().find(|&o| o != (c, p)).unwrap();
                queue.push((other.0, other.1, !is_head));
            }
            while seed < tuples.len() && sign[seed].is_some() {
                seed += 1;
            }
            if seed == tuples.len() {
                break;
            }
            // No under-strand fixes this over-strand; follow increasing labels.
            let [_, j, _, l] = tuples[seed];
            let s = if j == l + 1 || l > j + 1 { 1 } else { -1 };
            queue.push((seed, 3, s == 1));
        }
        let crossings = tuples
            .into_iter()
            .zip(sign)
            .map(|(arcs, s)| Crossing { arcs, sign: s.unwrap() })
            .collect();
        Self::from_oriented(crossings, free_loops)
    }

    /// The closure of a braid, drawn with strands going up. Arcs are
    /// numbered consecutively along each closure component, components in
    /// the order of [`BraidWord::closure_components`]; untouched strands
    /// become crossingless loops.
    pub fn from_braid_closure(b: &BraidWord) -> Self {
        let n = b.strands();
        let mut next_label = n as u32 + 1;
        let mut seg: Vec<u32> = (1..=n as u32).collect();
        let mut crossings = Vec::with_capacity(b.len());
        for &e in b.letters() {
            let i = e.unsigned_abs() as usize - 1;
            let (a_in, b_in) = (seg[i], seg[i + 1]);
            let a_out = next_label;
            let b_out = next_label + 1;
            next_label += 2;
            let arcs = if e > 0 { [b_in, a_out, b_out, a_in] } else { [a_in, b_in, a_out, b_out] };
            crossings.push(Crossing { arcs, sign: if e > 0 { 1 } else { -1 } });
            seg[i] = b_out;
            seg[i + 1] = a_out;
        }
        let mut rename: HashMap<u32, u32> = HashMap::new();
        let mut free_loops = 0;
        for (p, &top) in seg.iter().enumerate() {
            if top == p as u32 + 1 {
                free_loops += 1;
            } else {
                rename.insert(top, p as u32 + 1);
            }
        }
        for x in &mut crossings {
            for a in &mut x.arcs {
                if let Some(&r) = rename.get(a) {
                    *a = r;
                }
            }
        }
        if crossings.is_empty() {
            return Self::from_oriented(Vec::new(), free_loops).expect("closure of a braid");
        }
        Self::from_oriented(crossings, free_loops).expect("closure of a braid").relabeled()
    }

    /// Arcs renumbered `1, 2, ..` along each component in turn.
    pub fn relabeled(&self) -> Self {
        let mut map = HashMap::new();
        let mut k = 0;
        for comp in &self.components {
            for &a in comp {
                k += 1;
                map.insert(a, k);
            }
        }
        let crossings = self
            .crossings
            .iter()
            .map(|x| Crossing { arcs: x.arcs.map(|a| map[&a]), sign: x.sign })
            .collect();
        Self::from_oriented(crossings, self.free_loops).expect("relabeling keeps validity")
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// μ, counting crossingless loops.
    pub fn component_count(&self) -> usize {
        self.components.len() + self.free_loops
    }

    /// Components that carry crossings, as arcs in traversal order.
    pub fn components(&self) -> &[Vec<u32>] {
        &self.components
    }

    pub fn component_of_arc(&self, arc: u32) -> Option<usize> {
        self.arc_component.get(&arc).copied()
    }

    /// Crossing and position at which `arc` ends.
    pub fn head_of(&self, arc: u32) -> Option<(usize, usize)> {
        self.head.get(&arc).copied()
    }

    pub fn writhe(&self) -> i32 {
        self.crossings.iter().map(|x| x.sign as i32).sum()
    }

    pub fn linking_matrix(&self) -> LinkingMatrix {
        let mu = self.component_count();
        let mut m = vec![vec![0i64; mu]; mu];
        for x in &self.crossings {
            let i = self.arc_component[&x.under_in()];
            let j = self.arc_component[&x.over_in()];
            if i != j {
                m[i][j] += x.sign as i64;
                m[j][i] += x.sign as i64;
            }
        }
        for row in &mut m {
            for e in row.iter_mut() {
                assert!(*e % 2 == 0, "crossings between two components come in pairs");
                *e /= 2;
            }
        }
        LinkingMatrix(m)
    }

    pub fn mirror(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .map(|x| {
                let [i, j, k, l] = x.arcs;
                let arcs = if x.sign > 0 { [l, i, j, k] } else { [j, k, l, i] };
                Crossing { arcs, sign: -x.sign }
            })
            .collect();
        Self::from_oriented(crossings, self.free_loops).expect("mirror keeps validity")
    }

    pub fn reverse_all(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .map(|x| {
                let [i, j, k, l] = x.arcs;
                Crossing { arcs: [k, l, i, j], sign: x.sign }
            })
            .collect();
        Self::from_oriented(crossings, self.free_loops).expect("reversal keeps validity")
    }

    pub fn reverse_component(&self, c: usize) -> Result<Self, DiagramError> {
        let count = self.component_count();
        if c >= count {
            return Err(DiagramError::BadComponent { index: c, count });
        }
        if c >= self.components.len() {
            return Ok(self.clone());
        }
        let crossings = self
            .crossings
            .iter()
            .map(|x| {
                let under = self.arc_component[&x.under_in()] == c;
                let over = self.arc_component[&x.over_in()] == c;
                let [i, j, k, l] = x.arcs;
                match (under, over) {
                    (true, true) => Crossing { arcs: [k, l, i, j], sign: x.sign },
                    (true, false) => Crossing { arcs: [k, l, i, j], sign: -x.sign },
                    (false, true) => Crossing { arcs: x.arcs, sign: -x.sign },
                    (false, false) => *x,
                }
            })
            .collect();
        Self::from_oriented(crossings, self.free_loops)
    }

    fn max_label(&self) -> u32 {
        self.crossings.iter().flat_map(|x| x.arcs).max().unwrap_or(0)
    }

    fn shifted(&self, by: u32) -> Vec<Crossing> {
        self.crossings
            .iter()
            .map(|x| Crossing { arcs: x.arcs.map(|a| a + by), sign: x.sign })
            .collect()
    }

    pub fn disjoint_sum(&self, other: &Self) -> Self {
        let mut crossings = self.crossings.clone();
        crossings.extend(other.shifted(self.max_label()));
        Self::from_oriented(crossings, self.free_loops + other.free_loops)
            .expect("disjoint sum keeps validity")
            .relabeled()
    }

    /// Band `self`'s component `c1` to `other`'s component `c2` next to
    /// each component's smallest arc label.
    pub fn connected_sum(&self, c1: usize, other: &Self, c2: usize) -> Result<Self, DiagramError> {
        for (d, c) in [(self, c1), (other, c2)] {
            if c >= d.component_count() {
                return Err(DiagramError::BadComponent { index: c, count: d.component_count() });
            }
        }
        let loops = self.free_loops + other.free_loops;
        if c1 >= self.components.len() || c2 >= other.components.len() {
            // summing with a crossingless unknot changes nothing
            let sum = self.disjoint_sum(other);
            return Self::from_oriented(sum.crossings.clone(), loops - 1).map(|d| d.relabeled());
        }
        let shift = self.max_label();
        let mut crossings = self.crossings.clone();
        crossings.extend(other.shifted(shift));
        let a1 = *self.components[c1].iter().min().unwrap();
        let a2 = *other.components[c2].iter().min().unwrap() + shift;
        let (h1c, h1p) = self.head[&a1];
        let (h2c, h2p) = other.head[&(a2 - shift)];
        crossings[h1c].arcs[h1p] = a2;
        crossings[self.crossings.len() + h2c].arcs[h2p] = a1;
        Ok(Self::from_oriented(crossings, loops)?.relabeled())
    }
}

fn check_occurrences(
    crossings: &[Crossing],
    occurrences: &BTreeMap<u32, Vec<(usize, usize)>>,
) -> Result<(), DiagramError> {
    for (&a, occ) in occurrences {
        if occ.len() != 2 {
            return Err(DiagramError::ArcCount { arc: a, count: occ.len() });
        }
        let ((c1, p1), (c2, p2)) = (occ[0], occ[1]);
        if c1 == c2 && (p1 + 2) % 4 == p2 {
            return Err(DiagramError::SelfOpposite { arc: a, crossing: c1 });
        }
    }
    let _ = crossings;
    Ok(())
}

impl fmt::Debug for PDDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::notation::render_pd(self))
    }
}

impl fmt::Display for PDDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::notation::render_pd(self))
    }
}

/// Symmetric integer matrix of pairwise linking numbers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkingMatrix(pub Vec<Vec<i64>>);

impl LinkingMatrix {
    pub fn zeros(mu: usize) -> Self {
        Self(vec![vec![0; mu]; mu])
    }

    pub fn from_rows<const N: usize>(rows: [[i64; N]; N]) -> Self {
        Self(rows.iter().map(|r| r.to_vec()).collect())
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.0[i][j]
    }

    /// Rows and columns reordered: entry `(i, j)` of the result is entry
    /// `(order[i], order[j])` of `self`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        Self(order.iter().map(|&i| order.iter().map(|&j| self.0[i][j]).collect()).collect())
    }

    pub fn negated(&self) -> Self {
        Self(self.0.iter().map(|r| r.iter().map(|e| -e).collect()).collect())
    }

    /// Total linking of component `i` with all others.
    pub fn row_sum(&self, i: usize) -> i64 {
        self.0[i].iter().sum()
    }

    /// Block sum: `other`'s components follow `self`'s.
    pub fn block_sum(&self, other: &Self) -> Self {
        let (a, b) = (self.size(), other.size());
        let mut m = Self::zeros(a + b);
        for i in 0..a {
            m.0[i][..a].copy_from_slice(&self.0[i]);
        }
        for i in 0..b {
            m.0[a + i][a..].copy_from_slice(&other.0[i]);
        }
        m
    }
}

impl fmt::Display for LinkingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .0
            .iter()
            .map(|r| format!("{{{}}}", r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "{{{}}}", rows.join(", "))
    }
}

/// Linking matrix of a braid closure, components in the order of
/// [`BraidWord::closure_components`].
pub fn linking_matrix_of_closure(b: &BraidWord) -> LinkingMatrix {
    let comps = b.closure_components();
    let mut comp_of_start = vec![0; b.strands()];
    for (k, c) in comps.iter().enumerate() {
        for &s in c {
            comp_of_start[s] = k;
        }
    }
    let mut at: Vec<usize> = (0..b.strands()).collect();
    let mut m = LinkingMatrix::zeros(comps.len());
    for &e in b.letters() {
        let i = e.unsigned_abs() as usize - 1;
        let (x, y) = (comp_of_start[at[i]], comp_of_start[at[i + 1]]);
        if x != y {
            m.0[x][y] += e.signum() as i64;
            m.0[y][x] += e.signum() as i64;
        }
        at.swap(i, i + 1);
    }
    for row in &mut m.0 {
        for e in row.iter_mut() {
            *e /= 2;
        }
    }
    m
}

/// Proper nonempty component subsets whose total linking with the
/// complement vanishes, as sorted index lists in bitmask order.
pub fn zero_linking_sublinks(m: &LinkingMatrix) -> Vec<Vec<usize>> {
    let mu = m.size();
    let mut out = Vec::new();
    if mu < 2 || mu > 20 {
        return out;
    }
    for mask in 1u32..(1 << mu) - 1 {
        let mut total = 0;
        for i in 0..mu {
            if mask >> i & 1 == 1 {
                for j in 0..mu {
                    if mask >> j & 1 == 0 {
                        total += m.0[i][j];
                    }
                }
            }
        }
        if total == 0 {
            out.push((0..mu).filter(|&i| mask >> i & 1 == 1).collect());
        }
    }
    out
}

/// Seifert form of the Bennequin surface of a braid closure: one disk per
/// strand and one band per letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertData {
    /// `V[x][y] = lk(x, y⁺)` on the basis of cycles between consecutive
    /// bands of each column.
    pub matrix: Vec<Vec<i64>>,
    /// Connected components of the surface.
    pub surface_components: usize,
}

impl SeifertData {
    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    /// First Betti number of the surface.
    pub fn betti(&self) -> usize {
        self.matrix.len()
    }

    fn symmetrized(&self) -> Vec<Vec<i64>> {
        let n = self.size();
        (0..n).map(|i| (0..n).map(|j| self.matrix[i][j] + self.matrix[j][i]).collect()).collect()
    }
}

pub fn seifert_matrix_of_closure(b: &BraidWord) -> SeifertData {
    let n = b.strands();
    // columns[i] = (position in word, sign) of letters on generator i+1
    let mut columns: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n.saturating_sub(1)];
    for (k, &e) in b.letters().iter().enumerate() {
        columns[e.unsigned_abs() as usize - 1].push((k, e.signum() as i64));
    }
    // cycles: (column, index of lower band)
    let mut cycles = Vec::new();
    for (i, col) in columns.iter().enumerate() {
        for k in 0..col.len().saturating_sub(1) {
            cycles.push((i, k));
        }
    }
    let size = cycles.len();
    let mut v = vec![vec![0i64; size]; size];
    for (x, &(i, k)) in cycles.iter().enumerate() {
        let col = &columns[i];
        let (e1, e2) = (col[k].1, col[k + 1].1);
        v[x][x] = -(e1 + e2) / 2;
        for (y, &(j, m)) in cycles.iter().enumerate() {
            if j == i && m == k + 1 {
                v[x][y] = (1 + e2) / 2;
                v[y][x] = (e2 - 1) / 2;
            }
            if j == i + 1 {
                let (a, bb) = (col[k].0, col[k + 1].0);
                let (c, d) = (columns[j][m].0, columns[j][m + 1].0);
                if a < c && c < bb && bb < d {
                    v[x][y] = -1;
                } else if c < a && a < d && d < bb {
                    v[x][y] = 1;
                }
            }
        }
    }
    let empty_columns = columns.iter().filter(|c| c.is_empty()).count();
    SeifertData { matrix: v, surface_components: empty_columns + 1 }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    pub sigma: i64,
    /// `dim ker(V + Vᵀ)` plus one for each extra surface component.
    pub nullity: i64,
}

fn rational_matrix(m: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    m.iter()
        .map(|r| r.iter().map(|&e| BigRational::from_integer(BigInt::from(e))).collect())
        .collect()
}

/// Signature and kernel dimension of a symmetric integer matrix, by exact
/// congruence diagonalization.
pub fn symmetric_signature(m: &[Vec<i64>]) -> (i64, i64) {
    let mut a = rational_matrix(m);
    let n = a.len();
    let (mut pos, mut neg) = (0i64, 0i64);
    for k in 0..n {
        let pivot = (k..n).find(|&i| !a[i][i].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => {
                let Some((i, j)) = (k..n)
                    .flat_map(|i| (k..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero())
                else {
                    break;
                };
                // row/column j added to i makes a[i][i] = 2·a[i][j] ≠ 0
                for t in 0..n {
                    let v = a[j][t].clone();
                    a[i][t] += v;
                }
                for t in 0..n {
                    let v = a[t][j].clone();
                    a[t][i] += v;
                }
                i
            }
        };
        a.swap(k, pivot);
        for row in a.iter_mut() {
            row.swap(k, pivot);
        }
        let p = a[k][k].clone();
        if p.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &p;
            for t in k..n {
                let v = &f * &a[k][t];
                a[i][t] -= v;
            }
            for t in k..n {
                let v = &f * &a[t][k];
                a[t][i] -= v;
            }
        }
    }
    (pos - neg, n as i64 - pos - neg)
}

/// Determinant of an integer matrix (1 for the empty matrix).
pub fn integer_determinant(m: &[Vec<i64>]) -> BigInt {
    let mut a = rational_matrix(m);
    let n = a.len();
    let mut det = BigRational::from_integer(BigInt::from(1));
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let piv = a[k][k].clone();
        det *= &piv;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &piv;
            for t in k..n {
                let v = &f * &a[k][t];
                a[i][t] -= v;
            }
        }
    }
    det.to_integer()
}

pub fn signature(s: &SeifertData) -> Signature {
    let (sigma, null) = symmetric_signature(&s.symmetrized());
    Signature { sigma, nullity: null + s.surface_components as i64 - 1 }
}

/// `|det(V + Vᵀ)|`, the determinant of the link.
pub fn determinant(s: &SeifertData) -> BigInt {
    integer_determinant(&s.symmetrized()).abs()
}

/// Murasugi's bound `χ_s ≤ 1 − |σ| + η`.
pub fn murasugi_chi_upper(sigma: i64, nullity: i64) -> i64 {
    1 - sigma.abs() + nullity
}
