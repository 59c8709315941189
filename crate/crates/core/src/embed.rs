//! Explicit realization of an oval forest on the unit sphere `S³ ⊂ ℂ²`.
//!
//! Oval `j` with circle `C_j = {c_j + r_j e^{it}}` and winding `a_j`
//! becomes the curve `(z(t), ρ(z(t)) e^{i(a_j t + φ_j)})` with
//! `ρ(z) = √(1 − |z|²)`; a fiber at `c` is `(c, ρ(c) e^{i(t + φ)})`. The
//! curves are projected stereographically to ℝ³, then orthogonally to a
//! plane, and the crossings of the resulting polylines give a PD diagram.
//! This is a numeric oracle: it is checked only through invariants.

use std::f64::consts::TAU;

use rayon::prelude::*;
use thiserror::Error;

use crate::diagram::{Crossing, DiagramError, LinkingMatrix, PDDiagram};
use crate::splice::{Circle, OvalForest};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EmbedError {
    #[error("oval {id} touches the unit circle")]
    Boundary { id: u32 },
    #[error("geometry has {got} circles for {want} ovals")]
    Shape { got: usize, want: usize },
    #[error("curves {a} and {b} come within {dist:e}")]
    TooClose { a: usize, b: usize, dist: f64 },
    #[error("no generic projection found after {attempts} attempts")]
    Degenerate { attempts: usize },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Circles and phases per forest position.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometricOvals {
    pub circles: Vec<Circle>,
    pub phases: Vec<f64>,
}

impl GeometricOvals {
    /// The circles stored in the forest, if it has them.
    pub fn from_forest(f: &OvalForest) -> Option<Self> {
        let circles: Option<Vec<Circle>> = f.ovals().iter().map(|o| o.circle).collect();
        Some(Self { circles: circles?, phases: spread_phases(f.len()) })
    }

    /// Children of a region of radius `R` sit on a circle of radius
    /// `0.55 R` around its center, each of radius `0.35 R / s` for `s`
    /// siblings. Roots live in the unit disk.
    pub fn auto(f: &OvalForest) -> Self {
        let mut circles = vec![Circle { cx: 0.0, cy: 0.0, r: 0.0 }; f.len()];
        let mut stack: Vec<(Vec<usize>, Circle)> = vec![(f.roots(), Circle { cx: 0.0, cy: 0.0, r: 1.0 })];
        while let Some((kids, parent)) = stack.pop() {
            let s = kids.len();
            for (i, &k) in kids.iter().enumerate() {
                let (cx, cy) = if s == 1 {
                    (parent.cx, parent.cy)
                } else {
                    let th = TAU * i as f64 / s as f64;
                    (parent.cx + 0.55 * parent.r * th.cos(), parent.cy + 0.55 * parent.r * th.sin())
                };
                let r = if f.ovals()[k].fiber { 0.0 } else { 0.35 * parent.r / s as f64 };
                circles[k] = Circle { cx, cy, r };
                stack.push((f.children_at(k).to_vec(), circles[k]));
            }
        }
        Self { circles, phases: spread_phases(f.len()) }
    }
}

fn spread_phases(n: usize) -> Vec<f64> {
    (0..n).map(|k| TAU * k as f64 / n.max(1) as f64).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Orientation {
    /// Every oval traversed counterclockwise.
    #[default]
    Counterclockwise,
    /// Counterclockwise iff the oval has even depth.
    Boundary,
}

/// Closed polylines on `S³`, one per oval in forest order.
#[derive(Debug, Clone)]
pub struct SampledCurves {
    pub curves: Vec<Vec<[f64; 4]>>,
    /// Smallest distance between points of different curves.
    pub min_separation: f64,
}

pub fn default_samples(winding: i32) -> usize {
    256.max(64 * (1 + winding.unsigned_abs() as usize))
}

/// Sample every oval; `resolution` multiplies the default sample counts.
pub fn parametrize(
    g: &GeometricOvals,
    f: &OvalForest,
    orientation: Orientation,
    resolution: usize,
) -> Result<SampledCurves, EmbedError> {
    if g.circles.len() != f.len() || g.phases.len() != f.len() {
        return Err(EmbedError::Shape { got: g.circles.len(), want: f.len() });
    }
    let mut curves = Vec::with_capacity(f.len());
    for (k, o) in f.ovals().iter().enumerate() {
        let c = g.circles[k];
        if (c.cx * c.cx + c.cy * c.cy).sqrt() + c.r >= 1.0 - 1e-9 {
            return Err(EmbedError::Boundary { id: o.id });
        }
        let reversed = orientation == Orientation::Boundary && f.boundary_orientation(k) < 0;
        let dir = if reversed { -1.0 } else { 1.0 };
        let a = if o.fiber { 1.0 } else { o.winding as f64 };
        let n = default_samples(o.winding) * resolution.max(1);
        let pts = (0..n)
            .map(|i| {
                let t = dir * TAU * i as f64 / n as f64;
                let (zx, zy) = if o.fiber { (c.cx, c.cy) } else { (c.cx + c.r * t.cos(), c.cy + c.r * t.sin()) };
                let rho = (1.0 - zx * zx - zy * zy).sqrt();
                let arg = if o.fiber { t } else { a * t } + g.phases[k];
                [zx, zy, rho * arg.cos(), rho * arg.sin()]
            })
            .collect();
        curves.push(pts);
    }
    let mut min_separation = f64::INFINITY;
    for a in 0..f.len() {
        for b in a + 1..f.len() {
            let d = circle_gap(&g.circles[a], &g.circles[b]);
            if d < 1e-6 {
                return Err(EmbedError::TooClose { a, b, dist: d });
            }
            min_separation = min_separation.min(d);
        }
    }
    Ok(SampledCurves { curves, min_separation })
}

/// Distance between two disjoint circles in the z-plane, which bounds the
/// distance between the curves above them.
fn circle_gap(p: &Circle, q: &Circle) -> f64 {
    let d = ((p.cx - q.cx).powi(2) + (p.cy - q.cy).powi(2)).sqrt();
    if d >= p.r + q.r {
        d - p.r - q.r
    } else {
        (p.r - q.r).abs() - d
    }
}

/// Stereographic pole on `S³` and viewing direction in ℝ³.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectionConfig {
    pub pole: [f64; 4],
    pub normal: [f64; 3],
    pub seed: u64,
}

/// Radical inverse of `i` in base `b`.
fn halton(mut i: u64, b: u64) -> f64 {
    let (mut f, mut r) = (1.0, 0.0);
    while i > 0 {
        f /= b as f64;
        r += f * (i % b) as f64;
        i /= b;
    }
    r
}

impl ProjectionConfig {
    /// The pole is a small perturbation of `(1, 0)`, which lies on no
    /// curve; the normal ranges over a cap around the `w`-axis.
    pub fn from_seed(seed: u64) -> Self {
        let i = seed + 1;
        let h = |b| halton(i, b) - 0.5;
        let pole = normalize4([1.0, 0.2 * h(2), 0.2 * h(3), 0.2 * h(5)]);
        let normal = normalize3([0.6 * h(7), 0.6 * h(11), 1.0]);
        Self { pole, normal, seed }
    }
}

fn normalize4(v: [f64; 4]) -> [f64; 4] {
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.map(|x| x / n)
}

fn normalize3(v: [f64; 3]) -> [f64; 3] {
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.map(|x| x / n)
}

fn dot4(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn dot3(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn cross3(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn det4(m: [[f64; 4]; 4]) -> f64 {
    let mut a = m;
    let mut d = 1.0;
    for i in 0..4 {
        let p = (i..4).max_by(|&x, &y| a[x][i].abs().total_cmp(&a[y][i].abs())).unwrap();
        if p != i {
            a.swap(p, i);
            d = -d;
        }
        d *= a[i][i];
        if a[i][i] == 0.0 {
            return 0.0;
        }
        for r in i + 1..4 {
            let f = a[r][i] / a[i][i];
            for c in i..4 {
                a[r][c] -= f * a[i][c];
            }
        }
    }
    d
}

/// Orthonormal basis of `pole⊥`, oriented so that `(pole, e₁, e₂, e₃)` is
/// negative: projecting from the pole, the outward normal at the image
/// point is `−pole`, so this keeps the orientation of `S³` as the boundary
/// of the ball.
fn tangent_basis(p: &[f64; 4]) -> [[f64; 4]; 3] {
    let mut basis: Vec<[f64; 4]> = Vec::new();
    for k in 0..4 {
        let mut v = [0.0; 4];
        v[k] = 1.0;
        let mut u = v;
        for b in std::iter::once(p).chain(basis.iter()) {
            let d = dot4(&v, b);
            for i in 0..4 {
                u[i] -= d * b[i];
            }
        }
        let n = dot4(&u, &u).sqrt();
        if n > 0.3 && basis.len() < 3 {
            basis.push(u.map(|x| x / n));
        }
    }
    let mut e = [basis[0], basis[1], basis[2]];
    if det4([*p, e[0], e[1], e[2]]) > 0.0 {
        e[2] = e[2].map(|x| -x);
    }
    e
}

/// A projected diagram with the data needed to draw it.
#[derive(Debug, Clone)]
pub struct Projection {
    pub pd: PDDiagram,
    pub config: ProjectionConfig,
    pub planar: Vec<Vec<[f64; 2]>>,
    /// Crossing locations in the plane.
    pub crossing_points: Vec<[f64; 2]>,
    /// Index into `pd`'s components (free loops last) for each curve.
    pub component_of_curve: Vec<usize>,
}

impl Projection {
    /// Linking matrix with rows in curve order.
    pub fn linking_matrix(&self) -> LinkingMatrix {
        self.pd.linking_matrix().permuted(&self.component_of_curve)
    }
}

struct Hit {
    under: (usize, usize, f64),
    over: (usize, usize, f64),
    sign: i8,
    at: [f64; 2],
}

enum Scan {
    Hits(Vec<Hit>),
    Degenerate,
}

fn scan(planar: &[Vec<[f64; 2]>], depth: &[Vec<f64>]) -> Scan {
    // segments as (curve, index), sorted by left end
    let mut segs: Vec<(usize, usize, f64, f64)> = Vec::new();
    for (c, pts) in planar.iter().enumerate() {
        let n = pts.len();
        for i in 0..n {
            let (a, b) = (pts[i], pts[(i + 1) % n]);
            segs.push((c, i, a[0].min(b[0]), a[0].max(b[0])));
        }
    }
    segs.sort_by(|x, y| x.2.total_cmp(&y.2).then(x.0.cmp(&y.0)).then(x.1.cmp(&y.1)));
    let seg = |c: usize, i: usize| {
        let n = planar[c].len();
        (planar[c][i], planar[c][(i + 1) % n], depth[c][i], depth[c][(i + 1) % n])
    };
    let found: Vec<Option<Vec<Hit>>> = (0..segs.len())
        .into_par_iter()
        .map(|x| {
            let (c1, i1, _, hi) = segs[x];
            let mut hits = Vec::new();
            for &(c2, i2, lo2, _) in &segs[x + 1..] {
                if lo2 > hi {
                    break;
                }
                if c1 == c2 {
                    let n = planar[c1].len();
                    if (i1 + 1) % n == i2 || (i2 + 1) % n == i1 {
                        continue;
                    }
                }
                let (p0, p1, dp0, dp1) = seg(c1, i1);
                let (q0, q1, dq0, dq1) = seg(c2, i2);
                let d1 = [p1[0] - p0[0], p1[1] - p0[1]];
                let d2 = [q1[0] - q0[0], q1[1] - q0[1]];
                let den = d1[0] * d2[1] - d1[1] * d2[0];
                let e = [q0[0] - p0[0], q0[1] - p0[1]];
                let scale = (d1[0].hypot(d1[1]) * d2[0].hypot(d2[1])).max(f64::MIN_POSITIVE);
                if den.abs() < 1e-9 * scale {
                    // parallel: only a problem if they overlap
                    let off = (e[0] * d1[1] - e[1] * d1[0]).abs() / d1[0].hypot(d1[1]).max(f64::MIN_POSITIVE);
                    if off < 1e-12 {
                        return None;
                    }
                    continue;
                }
                let t = (e[0] * d2[1] - e[1] * d2[0]) / den;
                let s = (e[0] * d1[1] - e[1] * d1[0]) / den;
                let margin = 1e-9;
                if t < -margin || t > 1.0 + margin || s < -margin || s > 1.0 + margin {
                    continue;
                }
                if t < margin || t > 1.0 - margin || s < margin || s > 1.0 - margin {
                    return None;
                }
                if den.abs() < 1e-6 * scale {
                    return None;
                }
                let h1 = dp0 + t * (dp1 - dp0);
                let h2 = dq0 + s * (dq1 - dq0);
                if (h1 - h2).abs() < 1e-9 {
                    return None;
                }
                let at = [p0[0] + t * d1[0], p0[1] + t * d1[1]];
                let (under, over, du, dov) = if h1 < h2 {
                    ((c1, i1, t), (c2, i2, s), d1, d2)
                } else {
                    ((c2, i2, s), (c1, i1, t), d2, d1)
                };
                // right-handed: over direction turns counterclockwise onto under
                let sign = if dov[0] * du[1] - dov[1] * du[0] > 0.0 { 1 } else { -1 };
                hits.push(Hit { under, over, sign, at });
            }
            Some(hits)
        })
        .collect();
    let mut all = Vec::new();
    for f in found {
        match f {
            Some(h) => all.extend(h),
            None => return Scan::Degenerate,
        }
    }
    all.sort_by(|a, b| {
        (a.under.0, a.under.1).cmp(&(b.under.0, b.under.1)).then(a.under.2.total_cmp(&b.under.2))
    });
    Scan::Hits(all)
}

fn build_pd(curves: usize, hits: &[Hit]) -> Result<(PDDiagram, Vec<usize>), EmbedError> {
    // passages per curve: (segment, parameter, crossing, is_under)
    let mut passages: Vec<Vec<(usize, f64, usize, bool)>> = vec![Vec::new(); curves];
    for (x, h) in hits.iter().enumerate() {
        passages[h.under.0].push((h.under.1, h.under.2, x, true));
        passages[h.over.0].push((h.over.1, h.over.2, x, false));
    }
    let mut offset = 0u32;
    // (in, out) arcs of the under and over passage of each crossing
    let mut under_arcs = vec![(0u32, 0u32); hits.len()];
    let mut over_arcs = vec![(0u32, 0u32); hits.len()];
    let mut free = Vec::new();
    for (c, ps) in passages.iter_mut().enumerate() {
        ps.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.total_cmp(&b.1)));
        let m = ps.len() as u32;
        if m == 0 {
            free.push(c);
            continue;
        }
        for (k, &(_, _, x, under)) in ps.iter().enumerate() {
            let k = k as u32;
            let arcs = (offset + k + 1, offset + (k + 1) % m + 1);
            if under {
                under_arcs[x] = arcs;
            } else {
                over_arcs[x] = arcs;
            }
        }
        offset += m;
    }
    let crossings = hits
        .iter()
        .enumerate()
        .map(|(x, h)| {
            let (i, k) = under_arcs[x];
            let (oin, oout) = over_arcs[x];
            if h.sign > 0 {
                Crossing { arcs: [i, oout, k, oin], sign: 1 }
            } else {
                Crossing { arcs: [i, oin, k, oout], sign: -1 }
            }
        })
        .collect();
    let pd = PDDiagram::from_oriented(crossings, free.len())?;
    let mut component_of_curve = vec![0; curves];
    let with_crossings = pd.components().len();
    for (c, ps) in passages.iter().enumerate() {
        if let Some(&(_, _, x, under)) = ps.first() {
            let arc = if under { under_arcs[x].0 } else { over_arcs[x].0 };
            component_of_curve[c] = pd.component_of_arc(arc).expect("arc belongs to the diagram");
        }
    }
    for (k, &c) in free.iter().enumerate() {
        component_of_curve[c] = with_crossings + k;
    }
    Ok((pd.relabeled(), component_of_curve))
}

pub const MAX_ATTEMPTS: usize = 16;

/// Project and read off crossings, re-drawing the configuration from the
/// seed sequence when the picture is not generic.
pub fn project_to_diagram(curves: &SampledCurves, cfg: ProjectionConfig) -> Result<Projection, EmbedError> {
    for attempt in 0..MAX_ATTEMPTS {
        let cfg = if attempt == 0 { cfg } else { ProjectionConfig::from_seed(cfg.seed + 1000 * attempt as u64) };
        let e = tangent_basis(&cfg.pole);
        let n = cfg.normal;
        let seed_axis = if n[0].abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
        let u1 = normalize3(cross3(&seed_axis, &n));
        let u2 = cross3(&n, &u1);
        let mut planar = Vec::with_capacity(curves.curves.len());
        let mut depth = Vec::with_capacity(curves.curves.len());
        let mut ok = true;
        for pts in &curves.curves {
            let mut pl = Vec::with_capacity(pts.len());
            let mut dp = Vec::with_capacity(pts.len());
            for x in pts {
                let s = 1.0 - dot4(x, &cfg.pole);
                if s < 1e-6 {
                    ok = false;
                }
                let y = [dot4(x, &e[0]) / s, dot4(x, &e[1]) / s, dot4(x, &e[2]) / s];
                pl.push([dot3(&y, &u1), dot3(&y, &u2)]);
                dp.push(dot3(&y, &n));
            }
            planar.push(pl);
            depth.push(dp);
        }
        if !ok {
            continue;
        }
        if let Scan::Hits(hits) = scan(&planar, &depth) {
            let (pd, component_of_curve) = build_pd(planar.len(), &hits)?;
            let crossing_points = hits.iter().map(|h| h.at).collect();
            return Ok(Projection { pd, config: cfg, planar, crossing_points, component_of_curve });
        }
    }
    Err(EmbedError::Degenerate { attempts: MAX_ATTEMPTS })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmbedOptions {
    pub orientation: Orientation,
    pub seed: u64,
    pub resolution: usize,
}

impl Default for EmbedOptions {
    fn default() -> Self {
        Self { orientation: Orientation::Counterclockwise, seed: 0, resolution: 1 }
    }
}

/// End to end: geometry (stored, given, or automatic), sampling and
/// projection.
pub fn embed_forest(
    f: &OvalForest,
    g: Option<&GeometricOvals>,
    opts: EmbedOptions,
) -> Result<Projection, EmbedError> {
    let g = match g {
        Some(g) => g.clone(),
        None => GeometricOvals::from_forest(f).unwrap_or_else(|| GeometricOvals::auto(f)),
    };
    let curves = parametrize(&g, f, opts.orientation, opts.resolution)?;
    project_to_diagram(&curves, ProjectionConfig::from_seed(opts.seed))
}

pub fn oval_link_pd(f: &OvalForest, g: Option<&GeometricOvals>) -> Result<PDDiagram, EmbedError> {
    embed_forest(f, g, EmbedOptions::default()).map(|p| p.pd)
}

/// Plain SVG drawing of the projected curves with crossings marked.
pub fn render_svg(p: &Projection) -> String {
    let all = p.planar.iter().flatten();
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for q in all {
        for k in 0..2 {
            lo[k] = lo[k].min(q[k]);
            hi[k] = hi[k].max(q[k]);
        }
    }
    let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-9);
    let map = |q: &[f64; 2]| (20.0 + 560.0 * (q[0] - lo[0]) / span, 580.0 - 560.0 * (q[1] - lo[1]) / span);
    let colors = ["#1b6ca8", "#c0392b", "#27ae60", "#8e44ad", "#d35400", "#2c3e50"];
    let mut out = String::from(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n",
    );
    for (c, pts) in p.planar.iter().enumerate() {
        let path: Vec<String> = pts
            .iter()
            .map(|q| {
                let (x, y) = map(q);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        out += &format!(
            "  <polygon points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"/>\n",
            path.join(" "),
            colors[c % colors.len()]
        );
    }
    for q in &p.crossing_points {
        let (x, y) = map(q);
        out += &format!("  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\" fill=\"black\"/>\n");
    }
    out += "</svg>\n";
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homfly::homfly_pd;
    use crate::poly::LaurentPoly2;
    use crate::splice::Oval;

    fn forest(ovals: Vec<Oval>) -> OvalForest {
        OvalForest::new(ovals).unwrap()
    }

    #[test]
    fn single_oval_is_unknot() {
        let f = forest(vec![Oval::new(1, 0, 0)]);
        let d = oval_link_pd(&f, None).unwrap();
        assert_eq!(d.component_count(), 1);
        assert_eq!(homfly_pd(&d).unwrap(), LaurentPoly2::one());
    }

    #[test]
    fn split_roots_are_an_unlink() {
        let f = forest(vec![Oval::new(1, 0, 2), Oval::new(2, 0, -1)]);
        let d = oval_link_pd(&f, None).unwrap();
        assert_eq!(homfly_pd(&d).unwrap(), LaurentPoly2::unlink(2));
    }

    #[test]
    fn hopf_forest() {
        for a in [1, -1] {
            let f = forest(vec![Oval::new(1, 0, a), Oval::fiber(2, 1)]);
            let p = embed_forest(&f, None, EmbedOptions::default()).unwrap();
            assert_eq!(p.linking_matrix().get(0, 1).abs(), 1);
        }
    }

    #[test]
    fn complex_lines_link_positively() {
        let line = |a: f64, b: f64| -> Vec<[f64; 4]> {
            let n = (a * a + b * b).sqrt();
            (0..400)
                .map(|i| {
                    let t = TAU * i as f64 / 400.0;
                    [a / n * t.cos(), a / n * t.sin(), b / n * t.cos(), b / n * t.sin()]
                })
                .collect()
        };
        let curves = SampledCurves { curves: vec![line(1.0, 0.5), line(0.5, 1.0)], min_separation: 0.1 };
        for seed in 0..5 {
            let p = project_to_diagram(&curves, ProjectionConfig::from_seed(seed)).unwrap();
            assert_eq!(p.linking_matrix().get(0, 1), 1);
        }
    }

    #[test]
    fn touching_the_unit_circle_fails() {
        let f = forest(vec![Oval::new(1, 0, 1)]);
        let g = GeometricOvals { circles: vec![Circle { cx: 0.0, cy: 0.0, r: 1.0 }], phases: vec![0.0] };
        assert_eq!(parametrize(&g, &f, Orientation::Counterclockwise, 1).unwrap_err(), EmbedError::Boundary { id: 1 });
    }

    #[test]
    fn points_lie_on_the_sphere() {
        let f = forest(vec![Oval::new(1, 0, 1), Oval::new(2, 1, 1), Oval::new(3, 2, 1)]);
        let c = parametrize(&GeometricOvals::auto(&f), &f, Orientation::Counterclockwise, 1).unwrap();
        for pts in &c.curves {
            for x in pts {
                assert!((dot4(x, x) - 1.0).abs() < 1e-12);
            }
        }
        assert!(c.min_separation > 0.0);
    }

    #[test]
    fn auto_geometry_is_valid() {
        let f = forest(vec![
            Oval::new(1, 0, 1),
            Oval::new(2, 1, 2),
            Oval::new(3, 1, -1),
            Oval::fiber(4, 2),
            Oval::new(5, 0, 3),
        ]);
        let g = GeometricOvals::auto(&f);
        let mut with = f.ovals().to_vec();
        for (o, c) in with.iter_mut().zip(&g.circles) {
            o.circle = Some(*c);
        }
        assert!(OvalForest::new(with).is_ok());
    }
}
