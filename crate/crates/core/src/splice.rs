//! Oval forests, their cabling programs and splice diagrams.
//!
//! An oval forest records the nesting of the circles `C_j = pr₁(K_j)` in
//! the unit disk and the number of turns `a_j` each component makes in the
//! fiber direction. Regions alternate in sign starting from a positive
//! unbounded region, so the region inside an oval of depth `d` is negative
//! iff `d` is even.
//!
//! Windings are stored counterclockwise; the boundary orientation of a
//! component is counterclockwise iff its oval has even depth.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use thiserror::Error;

use crate::diagram::LinkingMatrix;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ForestError {
    #[error("no ovals")]
    Empty,
    #[error("oval id {0} is used twice")]
    DuplicateId(u32),
    #[error("oval {id} has unknown parent {parent}")]
    UnknownParent { id: u32, parent: u32 },
    #[error("parent relation has a cycle through oval {0}")]
    Cycle(u32),
    #[error("fiber {0} cannot contain other ovals")]
    FiberWithChildren(u32),
    #[error("either every oval or none must carry geometry")]
    PartialGeometry,
    #[error("oval {id}: {reason}")]
    Geometry { id: u32, reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    pub cx: f64,
    pub cy: f64,
    pub r: f64,
}

impl Circle {
    fn dist(&self, o: &Circle) -> f64 {
        ((self.cx - o.cx).powi(2) + (self.cy - o.cy).powi(2)).sqrt()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Oval {
    pub id: u32,
    /// 0 for a root.
    pub parent: u32,
    /// Counterclockwise winding in the fiber direction.
    pub winding: i32,
    /// A fiber of `pr₁`: a point rather than a circle, winding 1.
    pub fiber: bool,
    pub circle: Option<Circle>,
}

impl Oval {
    pub fn new(id: u32, parent: u32, winding: i32) -> Self {
        Self { id, parent, winding, fiber: false, circle: None }
    }

    pub fn fiber(id: u32, parent: u32) -> Self {
        Self { id, parent, winding: 1, fiber: true, circle: None }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OvalForest {
    ovals: Vec<Oval>,
    index: BTreeMap<u32, usize>,
    depth: Vec<usize>,
    children: Vec<Vec<usize>>,
}

impl OvalForest {
    pub fn new(ovals: Vec<Oval>) -> Result<Self, ForestError> {
        if ovals.is_empty() {
            return Err(ForestError::Empty);
        }
        let mut index = BTreeMap::new();
        for (k, o) in ovals.iter().enumerate() {
            if index.insert(o.id, k).is_some() {
                return Err(ForestError::DuplicateId(o.id));
            }
        }
        let mut parent = vec![None; ovals.len()];
        for (k, o) in ovals.iter().enumerate() {
            if o.parent != 0 {
                let p = *index
                    .get(&o.parent)
                    .ok_or(ForestError::UnknownParent { id: o.id, parent: o.parent })?;
                parent[k] = Some(p);
            }
        }
        let mut depth = vec![usize::MAX; ovals.len()];
        for k in 0..ovals.len() {
            let mut chain = vec![k];
            let mut x = k;
            while depth[x] == usize::MAX {
                match parent[x] {
                    None => {
                        depth[x] = 0;
                        break;
                    }
                    Some(p) => {
                        if chain.len() > ovals.len() {
                            return Err(ForestError::Cycle(ovals[k].id));
                        }
                        chain.push(p);
                        x = p;
                    }
                }
            }
            for &y in chain.iter().rev() {
                if depth[y] == usize::MAX {
                    depth[y] = depth[parent[y].unwrap()] + 1;
                }
            }
        }
        let mut children = vec![Vec::new(); ovals.len()];
        for (k, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if ovals[p].fiber {
                    return Err(ForestError::FiberWithChildren(ovals[p].id));
                }
                children[p].push(k);
            }
        }
        let f = Self { ovals, index, depth, children };
        f.check_geometry()?;
        Ok(f)
    }

    fn check_geometry(&self) -> Result<(), ForestError> {
        let with = self.ovals.iter().filter(|o| o.circle.is_some()).count();
        if with == 0 {
            return Ok(());
        }
        if with != self.ovals.len() {
            return Err(ForestError::PartialGeometry);
        }
        let bad = |o: &Oval, reason: &str| ForestError::Geometry { id: o.id, reason: reason.into() };
        for (k, o) in self.ovals.iter().enumerate() {
            let c = o.circle.unwrap();
            if c.r < 0.0 || (c.r == 0.0) != o.fiber {
                return Err(bad(o, "only fibers have radius 0"));
            }
            if (c.cx * c.cx + c.cy * c.cy).sqrt() + c.r >= 1.0 {
                return Err(bad(o, "circle leaves the open unit disk"));
            }
            if o.parent != 0 {
                let p = self.ovals[self.index[&o.parent]].circle.unwrap();
                if c.dist(&p) + c.r >= p.r {
                    return Err(bad(o, "circle is not inside its parent"));
                }
            }
            for q in self.ovals.iter().skip(k + 1) {
                if q.parent == o.parent {
                    let d = q.circle.unwrap();
                    if c.dist(&d) <= c.r + d.r {
                        return Err(bad(q, &format!("circle meets oval {}", o.id)));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.ovals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ovals.is_empty()
    }

    pub fn ovals(&self) -> &[Oval] {
        &self.ovals
    }

    /// Position of an oval id in [`OvalForest::ovals`].
    pub fn position(&self, id: u32) -> Option<usize> {
        self.index.get(&id).copied()
    }

    pub fn get(&self, id: u32) -> Option<&Oval> {
        self.position(id).map(|k| &self.ovals[k])
    }

    pub fn depth(&self, id: u32) -> usize {
        self.depth[self.index[&id]]
    }

    pub fn depth_at(&self, k: usize) -> usize {
        self.depth[k]
    }

    /// Children of the oval at position `k`, as positions.
    pub fn children_at(&self, k: usize) -> &[usize] {
        &self.children[k]
    }

    pub fn children(&self, id: u32) -> Vec<u32> {
        self.children[self.index[&id]].iter().map(|&c| self.ovals[c].id).collect()
    }

    pub fn roots(&self) -> Vec<usize> {
        (0..self.ovals.len()).filter(|&k| self.ovals[k].parent == 0).collect()
    }

    pub fn parent_at(&self, k: usize) -> Option<usize> {
        let p = self.ovals[k].parent;
        (p != 0).then(|| self.index[&p])
    }

    /// Whether the oval at `a` strictly contains the oval at `b`.
    pub fn is_ancestor(&self, a: usize, b: usize) -> bool {
        let mut x = self.parent_at(b);
        while let Some(p) = x {
            if p == a {
                return true;
            }
            x = self.parent_at(p);
        }
        false
    }

    /// +1 when the boundary orientation of the component is
    /// counterclockwise (the region inside is negative), −1 otherwise.
    pub fn boundary_orientation(&self, k: usize) -> i32 {
        if self.depth[k] % 2 == 0 { 1 } else { -1 }
    }

    /// Same forest with every winding negated.
    pub fn conjugate(&self) -> Self {
        let mut f = self.clone();
        for o in &mut f.ovals {
            if !o.fiber {
                o.winding = -o.winding;
            }
        }
        f
    }
}

/// Windings measured along the boundary orientation, keyed by oval id.
pub fn signed_windings(f: &OvalForest) -> BTreeMap<u32, i32> {
    f.ovals()
        .iter()
        .enumerate()
        .map(|(k, o)| (o.id, f.boundary_orientation(k) * o.winding))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realizability {
    pub realizable: bool,
    /// Ovals with a positive inside whose winding sum is nonzero, with
    /// the sum.
    pub violations: Vec<(u32, i64)>,
}

/// Data are realizable iff `Σ_{k ∈ {j} ∪ children(j)} a_k = 0` for each
/// oval `j` with a positive inside.
pub fn realizable(f: &OvalForest) -> Realizability {
    let a = signed_windings(f);
    let mut violations = Vec::new();
    for (k, o) in f.ovals().iter().enumerate() {
        if o.fiber || f.depth_at(k) % 2 == 0 {
            continue;
        }
        let sum: i64 = std::iter::once(k)
            .chain(f.children_at(k).iter().copied())
            .map(|c| a[&f.ovals()[c].id] as i64)
            .sum();
        if sum != 0 {
            violations.push((o.id, sum));
        }
    }
    Realizability { realizable: violations.is_empty(), violations }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CableKind {
    /// `(a,1)`-cable, core kept.
    AddRetain(i64),
    /// `(a,1)`-cable, core removed.
    AddRemove(i64),
    /// `(k,0)`-cable, core removed: `k` parallel fibers.
    Split(usize),
    /// `(−1,0)`-cable: the same component with opposite orientation.
    Reverse,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CableOp {
    pub kind: CableKind,
    /// The carrier fiber acted on, or for `Reverse` the component.
    pub target: usize,
    /// Forest position of the oval introduced by an `Add*` op.
    pub oval: Option<usize>,
}

/// Carriers are fibers of `pr₁` numbered in order of creation; each root
/// starts from its own carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CablingProgram {
    pub roots: Vec<usize>,
    pub ops: Vec<CableOp>,
    /// Carriers that stay in the link as fiber components.
    pub fibers: Vec<(usize, usize)>,
    pub components: usize,
}

/// Compile a forest into cable operations. Each oval with children is an
/// `(a,1)`-cable around its carrier keeping the core, followed by a split
/// of the carrier among `k ≥ 2` children; a childless oval consumes its
/// carrier; a fiber oval is the carrier itself. Components whose boundary
/// orientation is clockwise are then reversed.
pub fn cabling_program(f: &OvalForest) -> CablingProgram {
    let mut prog = CablingProgram { roots: Vec::new(), ops: Vec::new(), fibers: Vec::new(), components: f.len() };
    let mut carriers = 0;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for r in f.roots().into_iter().rev() {
        prog.roots.push(carriers);
        stack.push((r, carriers));
        carriers += 1;
    }
    prog.roots.reverse();
    stack.reverse();
    // depth-first, children in forest order
    let mut work: VecDeque<(usize, usize)> = stack.into_iter().collect();
    while let Some((k, carrier)) = work.pop_front() {
        let o = &f.ovals()[k];
        if o.fiber {
            prog.fibers.push((carrier, k));
            continue;
        }
        let kids = f.children_at(k);
        let a = o.winding as i64;
        if kids.is_empty() {
            prog.ops.push(CableOp { kind: CableKind::AddRemove(a), target: carrier, oval: Some(k) });
            continue;
        }
        prog.ops.push(CableOp { kind: CableKind::AddRetain(a), target: carrier, oval: Some(k) });
        let mut next = Vec::new();
        if kids.len() == 1 {
            next.push((kids[0], carrier));
        } else {
            prog.ops.push(CableOp { kind: CableKind::Split(kids.len()), target: carrier, oval: None });
            for &c in kids {
                next.push((c, carriers));
                carriers += 1;
            }
        }
        for item in next.into_iter().rev() {
            work.push_front(item);
        }
    }
    for k in 0..f.len() {
        if f.boundary_orientation(k) < 0 {
            prog.ops.push(CableOp { kind: CableKind::Reverse, target: k, oval: None });
        }
    }
    prog
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Vertex {
    Node,
    Leaf,
    /// Link component with its orientation relative to the cabling.
    Arrow { component: usize, sign: i8 },
    /// A fiber still to be consumed by the program.
    Carrier(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub ends: [usize; 2],
    /// Weight at each end, read at the incident vertex.
    pub weights: [i64; 2],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpliceDiagram {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpliceError {
    #[error("program acts on unknown carrier {0}")]
    UnknownCarrier(usize),
    #[error("carrier {0} is never consumed")]
    DanglingCarrier(usize),
    #[error("component {0} has no arrow")]
    MissingComponent(usize),
    #[error("diagram is not a forest")]
    NotAForest,
}

impl SpliceDiagram {
    fn add_vertex(&mut self, v: Vertex) -> usize {
        self.vertices.push(v);
        self.vertices.len() - 1
    }

    fn add_edge(&mut self, a: usize, wa: i64, b: usize, wb: i64) {
        self.edges.push(Edge { ends: [a, b], weights: [wa, wb] });
    }

    fn incident(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.edges[e].ends.contains(&v)).collect()
    }

    fn weight_at(&self, e: usize, v: usize) -> i64 {
        let edge = &self.edges[e];
        if edge.ends[0] == v { edge.weights[0] } else { edge.weights[1] }
    }

    fn other_end(&self, e: usize, v: usize) -> usize {
        let edge = &self.edges[e];
        if edge.ends[0] == v { edge.ends[1] } else { edge.ends[0] }
    }

    pub fn node_count(&self) -> usize {
        self.vertices.iter().filter(|v| matches!(v, Vertex::Node)).count()
    }

    pub fn arrow_count(&self) -> usize {
        self.vertices.iter().filter(|v| matches!(v, Vertex::Arrow { .. })).count()
    }

    fn arrow_of(&self, component: usize) -> Option<usize> {
        self.vertices
            .iter()
            .position(|v| matches!(v, Vertex::Arrow { component: c, .. } if *c == component))
    }

    /// Replace the carrier at vertex `x` by a cable node: the edge to the
    /// rest gets weight `q` at the node, the core `p`, a new arrow 1.
    fn cable(&mut self, x: usize, p: i64, q: i64) -> usize {
        let v = self.add_vertex(Vertex::Node);
        match self.incident(x).first() {
            Some(&e) => {
                let side = if self.edges[e].ends[0] == x { 0 } else { 1 };
                self.edges[e].ends[side] = v;
                self.edges[e].weights[side] = q;
            }
            None => {
                let l = self.add_vertex(Vertex::Leaf);
                self.add_edge(v, q, l, 1);
            }
        }
        self.add_edge(v, p, x, 1);
        v
    }

    /// Delete vertices with no edges that are not arrows and compact.
    fn compact(&mut self) {
        let mut keep = vec![false; self.vertices.len()];
        for (k, v) in self.vertices.iter().enumerate() {
            keep[k] = matches!(v, Vertex::Arrow { .. }) || !self.incident(k).is_empty();
        }
        let mut map = vec![usize::MAX; self.vertices.len()];
        let mut vertices = Vec::new();
        for (k, v) in self.vertices.iter().enumerate() {
            if keep[k] {
                map[k] = vertices.len();
                vertices.push(*v);
            }
        }
        for e in &mut self.edges {
            e.ends = e.ends.map(|x| map[x]);
        }
        self.vertices = vertices;
    }
}

/// Cable semantics in splice-diagram form. An `(a,1)`-cable on carrier `K`
/// inserts a node whose edge toward the rest of the diagram has weight 1,
/// whose edge toward the core has weight `a`, and which carries the new
/// arrow with weight 1. A split inserts a node with weight 0 toward the
/// rest, a leaf of weight 1 for the removed core and one arrow per fiber.
pub fn splice_from_program(prog: &CablingProgram) -> Result<SpliceDiagram, SpliceError> {
    let mut s = SpliceDiagram { vertices: Vec::new(), edges: Vec::new() };
    let mut carrier_vertex: BTreeMap<usize, usize> = BTreeMap::new();
    for &r in &prog.roots {
        let v = s.add_vertex(Vertex::Carrier(r));
        carrier_vertex.insert(r, v);
    }
    let mut next_carrier = prog.roots.iter().max().map_or(0, |m| m + 1);
    for op in &prog.ops {
        match op.kind {
            CableKind::AddRetain(a) | CableKind::AddRemove(a) => {
                let x = *carrier_vertex.get(&op.target).ok_or(SpliceError::UnknownCarrier(op.target))?;
                let v = s.cable(x, a, 1);
                let y = s.add_vertex(Vertex::Arrow { component: op.oval.unwrap(), sign: 1 });
                s.add_edge(v, 1, y, 1);
                if matches!(op.kind, CableKind::AddRemove(_)) {
                    s.vertices[x] = Vertex::Leaf;
                    carrier_vertex.remove(&op.target);
                }
            }
            CableKind::Split(k) => {
                let x = carrier_vertex.remove(&op.target).ok_or(SpliceError::UnknownCarrier(op.target))?;
                let v = s.cable(x, 1, 0);
                s.vertices[x] = Vertex::Leaf;
                for _ in 0..k {
                    let y = s.add_vertex(Vertex::Carrier(next_carrier));
                    s.add_edge(v, 1, y, 1);
                    carrier_vertex.insert(next_carrier, y);
                    next_carrier += 1;
                }
            }
            CableKind::Reverse => {
                settle_fibers(&mut s, &mut carrier_vertex, prog);
                let y = s.arrow_of(op.target).ok_or(SpliceError::MissingComponent(op.target))?;
                if let Vertex::Arrow { component, sign } = s.vertices[y] {
                    s.vertices[y] = Vertex::Arrow { component, sign: -sign };
                }
            }
        }
    }
    settle_fibers(&mut s, &mut carrier_vertex, prog);
    if let Some((&c, _)) = carrier_vertex.iter().next() {
        return Err(SpliceError::DanglingCarrier(c));
    }
    for k in 0..prog.components {
        if s.arrow_of(k).is_none() {
            return Err(SpliceError::MissingComponent(k));
        }
    }
    Ok(s)
}

/// Fiber carriers are never cabled again once assigned, so they can turn
/// into arrows as soon as they exist.
fn settle_fibers(s: &mut SpliceDiagram, carrier_vertex: &mut BTreeMap<usize, usize>, prog: &CablingProgram) {
    for &(c, k) in &prog.fibers {
        if let Some(x) = carrier_vertex.remove(&c) {
            s.vertices[x] = Vertex::Arrow { component: k, sign: 1 };
        }
    }
}

/// Flip the orientation of one component (the `(−1,0)`-cable along it).
pub fn reverse_component(s: &SpliceDiagram, component: usize) -> Result<SpliceDiagram, SpliceError> {
    let mut t = s.clone();
    let y = t.arrow_of(component).ok_or(SpliceError::MissingComponent(component))?;
    if let Vertex::Arrow { component, sign } = t.vertices[y] {
        t.vertices[y] = Vertex::Arrow { component, sign: -sign };
    }
    Ok(t)
}

/// Linking numbers: for two arrows joined by a path, the product of the
/// weights at path vertices on edges not in the path, times both arrow
/// signs; arrows in different trees do not link.
pub fn lk_from_splice(s: &SpliceDiagram) -> Result<LinkingMatrix, SpliceError> {
    if s.edges.len() >= s.vertices.len() && !s.vertices.is_empty() {
        return Err(SpliceError::NotAForest);
    }
    let arrows: BTreeMap<usize, (usize, i8)> = s
        .vertices
        .iter()
        .enumerate()
        .filter_map(|(v, x)| match x {
            Vertex::Arrow { component, sign } => Some((*component, (v, *sign))),
            _ => None,
        })
        .collect();
    let mu = arrows.keys().max().map_or(0, |m| m + 1);
    if arrows.len() != mu {
        return Err(SpliceError::MissingComponent((0..mu).find(|k| !arrows.contains_key(k)).unwrap()));
    }
    let mut m = LinkingMatrix::zeros(mu);
    for i in 0..mu {
        let (vi, si) = arrows[&i];
        // BFS tree from vi, recording the edge used to reach each vertex
        let mut via = vec![None; s.vertices.len()];
        let mut seen = vec![false; s.vertices.len()];
        seen[vi] = true;
        let mut queue = VecDeque::from([vi]);
        while let Some(u) = queue.pop_front() {
            for e in s.incident(u) {
                let w = s.other_end(e, u);
                if !seen[w] {
                    seen[w] = true;
                    via[w] = Some(e);
                    queue.push_back(w);
                }
            }
        }
        for j in 0..mu {
            let (vj, sj) = arrows[&j];
            if i == j || !seen[vj] {
                continue;
            }
            let mut path_edges = Vec::new();
            let mut x = vj;
            while x != vi {
                let e = via[x].ok_or(SpliceError::NotAForest)?;
                path_edges.push(e);
                x = s.other_end(e, x);
            }
            let mut prod = 1i64;
            // interior vertices of the path
            let mut x = vj;
            for (n, &e) in path_edges.iter().enumerate() {
                let y = s.other_end(e, x);
                if n + 1 < path_edges.len() {
                    let e_next = path_edges[n + 1];
                    for f in s.incident(y) {
                        if f != e && f != e_next {
                            prod *= s.weight_at(f, y);
                        }
                    }
                }
                x = y;
            }
            m.0[i][j] = prod * si as i64 * sj as i64;
        }
    }
    Ok(m)
}

/// Apply until fixpoint: drop a leaf of weight 1 at a node of valence at
/// least 3, and merge the two edges of a valence-2 node whose weights are
/// ±1. Both keep the arrows and every linking number.
pub fn simplify_splice(s: &SpliceDiagram) -> SpliceDiagram {
    let mut t = s.clone();
    loop {
        let mut changed = false;
        for v in 0..t.vertices.len() {
            if t.vertices[v] != Vertex::Node {
                continue;
            }
            let inc = t.incident(v);
            if inc.len() >= 3 {
                if let Some(&e) = inc.iter().find(|&&e| {
                    let o = t.other_end(e, v);
                    t.vertices[o] == Vertex::Leaf && t.weight_at(e, v) == 1
                }) {
                    t.edges.remove(e);
                    changed = true;
                    break;
                }
            }
            if inc.len() == 2 && inc.iter().all(|&e| t.weight_at(e, v).abs() == 1) {
                let (e1, e2) = (inc[0], inc[1]);
                let (a, b) = (t.other_end(e1, v), t.other_end(e2, v));
                let (wa, wb) = (t.weight_at(e1, a), t.weight_at(e2, b));
                let (hi, lo) = if e1 > e2 { (e1, e2) } else { (e2, e1) };
                t.edges.remove(hi);
                t.edges.remove(lo);
                t.add_edge(a, wa, b, wb);
                changed = true;
                break;
            }
        }
        if !changed {
            break;
        }
        t.compact();
    }
    t.compact();
    t
}

fn vertex_name(s: &SpliceDiagram, v: usize) -> String {
    match s.vertices[v] {
        Vertex::Node => format!("n{v}"),
        Vertex::Leaf => format!("l{v}"),
        Vertex::Arrow { component, .. } => format!("K{}", component + 1),
        Vertex::Carrier(c) => format!("f{c}"),
    }
}

/// One line per edge, `a wa -- wb b`, then one `arrow` line per component.
pub fn render_splice(s: &SpliceDiagram) -> String {
    let mut out = String::new();
    for e in &s.edges {
        writeln!(
            out,
            "{} {} -- {} {}",
            vertex_name(s, e.ends[0]),
            e.weights[0],
            e.weights[1],
            vertex_name(s, e.ends[1])
        )
        .unwrap();
    }
    for v in &s.vertices {
        if let Vertex::Arrow { component, sign } = v {
            writeln!(out, "arrow K{} {}", component + 1, if *sign > 0 { "+" } else { "-" }).unwrap();
        }
    }
    out
}

pub fn splice_to_dot(s: &SpliceDiagram) -> String {
    let mut out = String::from("graph splice {\n");
    for (v, x) in s.vertices.iter().enumerate() {
        let attrs = match x {
            Vertex::Node => "shape=point, width=0.12".to_string(),
            Vertex::Leaf => "shape=point, width=0.05".to_string(),
            Vertex::Arrow { sign, .. } => {
                format!("shape=plaintext, label=\"{}{}\"", vertex_name(s, v), if *sign < 0 { "⁻" } else { "" })
            }
            Vertex::Carrier(_) => "shape=circle".to_string(),
        };
        writeln!(out, "  {} [{}];", vertex_name(s, v), attrs).unwrap();
    }
    for e in &s.edges {
        writeln!(
            out,
            "  {} -- {} [taillabel=\"{}\", headlabel=\"{}\"];",
            vertex_name(s, e.ends[0]),
            vertex_name(s, e.ends[1]),
            e.weights[0],
            e.weights[1]
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wermer(a: [i32; 3]) -> OvalForest {
        OvalForest::new(vec![Oval::new(1, 0, a[0]), Oval::new(2, 1, a[1]), Oval::new(3, 2, a[2])]).unwrap()
    }

    #[test]
    fn signed_winding_signs() {
        let w = signed_windings(&wermer([1, 1, 1]));
        assert_eq!(w.values().copied().collect::<Vec<_>>(), vec![1, -1, 1]);
        let single = OvalForest::new(vec![Oval::new(1, 0, 7)]).unwrap();
        assert_eq!(signed_windings(&single)[&1], 7);
    }

    #[test]
    fn realizability() {
        assert!(realizable(&wermer([1, 1, 1])).realizable);
        let r = realizable(&wermer([1, 1, 2]));
        assert_eq!(r.violations, vec![(2, 1)]);
        let roots = OvalForest::new(vec![Oval::new(1, 0, 3), Oval::new(2, 0, -2)]).unwrap();
        assert!(realizable(&roots).realizable);
    }

    #[test]
    fn cycles_and_fibers_are_checked() {
        assert_eq!(
            OvalForest::new(vec![Oval::new(1, 2, 0), Oval::new(2, 1, 0)]),
            Err(ForestError::Cycle(1))
        );
        assert!(OvalForest::new(vec![Oval::fiber(1, 0), Oval::new(2, 1, 0)]).is_err());
    }

    #[test]
    fn hopf_program() {
        let f = OvalForest::new(vec![Oval::new(1, 0, 1), Oval::fiber(2, 1)]).unwrap();
        let prog = cabling_program(&f);
        assert_eq!(prog.ops.len(), 2);
        assert_eq!(prog.ops[0].kind, CableKind::AddRetain(1));
        let s = splice_from_program(&prog).unwrap();
        assert_eq!(s.arrow_count(), 2);
        let lk = lk_from_splice(&s).unwrap();
        assert_eq!(lk.get(0, 1).abs(), 1);
        let t = simplify_splice(&s);
        assert_eq!(lk_from_splice(&t).unwrap(), lk);
    }

    #[test]
    fn unknot_program() {
        let f = OvalForest::new(vec![Oval::new(1, 0, 4)]).unwrap();
        let s = splice_from_program(&cabling_program(&f)).unwrap();
        assert_eq!(s.arrow_count(), 1);
        assert_eq!(lk_from_splice(&s).unwrap(), LinkingMatrix::zeros(1));
    }

    #[test]
    fn wermer_chain_simplifies() {
        let f = wermer([1, 1, 1]);
        let s = splice_from_program(&cabling_program(&f)).unwrap();
        let t = simplify_splice(&s);
        assert!(t.node_count() < s.node_count());
        assert_eq!(lk_from_splice(&t).unwrap(), lk_from_splice(&s).unwrap());
        assert_eq!(simplify_splice(&t), t);
    }

    #[test]
    fn outer_winding_is_irrelevant() {
        let a = lk_from_splice(&splice_from_program(&cabling_program(&wermer([1, 1, 1]))).unwrap()).unwrap();
        let b = lk_from_splice(&splice_from_program(&cabling_program(&wermer([5, 1, 1]))).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn reversal_flips_one_row() {
        let s = splice_from_program(&cabling_program(&wermer([1, 2, 3]))).unwrap();
        let lk = lk_from_splice(&s).unwrap();
        let r = lk_from_splice(&reverse_component(&s, 1).unwrap()).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let flip = if (i == 1) != (j == 1) { -1 } else { 1 };
                assert_eq!(r.get(i, j), flip * lk.get(i, j));
            }
        }
    }
}
