//! Colourings that realise the known upper bounds, and a calculator listing
//! every bound that applies to a given graph.
//!
//! Every construction runs the matching checker before returning; a failed
//! check surfaces as [`ConstructError::ConstructionFailed`].

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::colour::{is_strong_total_thue, is_weak_total_thue, ColourError, TotalColouring, Witness};
use crate::graph::{
    bridge_decomposition, make_path, spanning_tree, Element, Graph, GraphError,
};
use crate::lll::theorem_bounds;
use crate::seqcore::{squarefree_ternary, Colour};
use crate::solver::{exact_number, find_colouring, lower_bound, Budget, Mode, SolveError, ThueParameters};

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("construction failed its own check: {0}")]
    ConstructionFailed(String),
    #[error("graph does not fit this construction: {0}")]
    WrongShape(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Colour(#[from] ColourError),
}

fn failed(what: &str, w: &Witness) -> ConstructError {
    ConstructError::ConstructionFailed(format!("{what}: {:?} square {:?} on {:?}", w.kind, w.square, w.path))
}

fn require_weak(g: &Graph, c: TotalColouring, what: &str) -> Result<TotalColouring, ConstructError> {
    match is_weak_total_thue(g, &c)? {
        None => Ok(c),
        Some(w) => Err(failed(what, &w)),
    }
}

fn require_strong(g: &Graph, c: TotalColouring, what: &str) -> Result<TotalColouring, ConstructError> {
    match is_strong_total_thue(g, &c)? {
        None => Ok(c),
        Some(w) => Err(failed(what, &w)),
    }
}

fn window(offset: usize, len: usize) -> Vec<Colour> {
    squarefree_ternary(offset + len).split_off(offset)
}

/// Weak total Thue colouring of the path on `n` vertices: a square-free
/// ternary word laid along `v0 e1 v1 ... vn`. Uses 3 colours from `n = 3` on,
/// `1 2 1` for `n = 2`.
pub fn colour_path_weak(n: usize) -> Result<TotalColouring, ConstructError> {
    let g = make_path(n)?;
    let c = match n {
        1 => TotalColouring::new(vec![1], vec![]),
        2 => TotalColouring::new(vec![1, 1], vec![2]),
        _ => {
            let word = squarefree_ternary(2 * n - 1);
            TotalColouring::new(
                word.iter().step_by(2).copied().collect(),
                word.iter().skip(1).step_by(2).copied().collect(),
            )
        }
    };
    require_weak(&g, c, "weak path colouring")
}

// ---------------------------------------------------------------------------
// Five-colour total Thue colouring of paths
// ---------------------------------------------------------------------------

/// Colouring of the path `v0 .. v(len)` (`len` divisible by 4), edge `i`
/// joining `v(i)` and `v(i+1)`.
///
/// Colour 4 sits on every fourth vertex; in block `i` (between `v(4i)` and
/// `v(4i+4)`) colour 5 sits on `v(4i + s_i)` for a square-free `s` over
/// `{1,2,3}`. When the two remaining inner vertices of a block are adjacent,
/// the edge between them also gets 5. The other edges follow a second
/// square-free ternary word, and the remaining vertices are filled from
/// `{1,2,3}` by the local rules in [`fill_block`].
#[derive(Debug, Clone)]
struct FivePath {
    len: usize,
    distances: Vec<Colour>,
    colouring: TotalColouring,
}

impl FivePath {
    fn build(len: usize, distance_offset: usize, edge_offset: usize) -> FivePath {
        debug_assert!(len >= 4 && len.is_multiple_of(4));
        let blocks = len / 4;
        let distances = window(distance_offset, blocks);
        let mut vertex = vec![0; len + 1];
        let mut edge = vec![0; len];
        for m in (0..=len).step_by(4) {
            vertex[m] = 4;
        }
        for (i, &s) in distances.iter().enumerate() {
            let base = 4 * i;
            vertex[base + s as usize] = 5;
            match s {
                3 => edge[base + 1] = 5,
                1 => edge[base + 2] = 5,
                _ => {}
            }
        }
        let free: Vec<usize> = (0..len).filter(|&e| edge[e] == 0).collect();
        for (&e, c) in free.iter().zip(window(edge_offset, free.len())) {
            edge[e] = c;
        }
        let mut colouring = TotalColouring::new(vertex, edge);
        for (i, &s) in distances.iter().enumerate() {
            fill_block(&mut colouring, 4 * i, s);
        }
        FivePath {
            len,
            distances,
            colouring,
        }
    }

    /// The two inner vertices left free by the colour-5 vertex, if they are adjacent.
    fn free_pair(&self, block: usize) -> Option<(usize, usize)> {
        let base = 4 * block;
        match self.distances[block] {
            1 => Some((base + 2, base + 3)),
            3 => Some((base + 1, base + 2)),
            _ => None,
        }
    }

    /// Re-colours free vertex pairs touched by violations until the strong
    /// check passes, trying the nine `{1,2,3}` pairs per block.
    fn repair(&mut self, g: &Graph) -> Result<usize, ConstructError> {
        let mut repairs = 0;
        let mut attempts = 0;
        while let Some(w) = is_strong_total_thue(g, &self.colouring)? {
            attempts += 1;
            if attempts > 4 * self.len {
                return Err(failed("five-colour path (repair did not converge)", &w));
            }
            let touched: BTreeSet<usize> = w
                .square_elements()
                .iter()
                .map(|&el| match el {
                    Element::Vertex(v) => v as usize,
                    Element::Edge(e) => e as usize,
                })
                .map(|pos| (pos / 4).min(self.len / 4 - 1))
                .collect();
            let mut fixed = false;
            'blocks: for &b in &touched {
                let Some((x, y)) = self.free_pair(b) else { continue };
                let saved = (self.colouring.vertex[x], self.colouring.vertex[y]);
                for cx in 1..=3 {
                    for cy in 1..=3 {
                        if (cx, cy) == saved {
                            continue;
                        }
                        self.colouring.vertex[x] = cx;
                        self.colouring.vertex[y] = cy;
                        let clean = match is_strong_total_thue(g, &self.colouring)? {
                            None => true,
                            Some(w2) => {
                                let first = w2.square_elements();
                                !first.contains(&Element::Vertex(x as u32))
                                    && !first.contains(&Element::Vertex(y as u32))
                                    && w2 != w
                            }
                        };
                        if clean {
                            fixed = true;
                            repairs += 1;
                            break 'blocks;
                        }
                    }
                }
                self.colouring.vertex[x] = saved.0;
                self.colouring.vertex[y] = saved.1;
            }
            if !fixed {
                return Err(failed("five-colour path", &w));
            }
        }
        Ok(repairs)
    }

    fn restrict(&self, vertices: usize) -> TotalColouring {
        TotalColouring::new(
            self.colouring.vertex[..vertices].to_vec(),
            self.colouring.edge[..vertices.saturating_sub(1)].to_vec(),
        )
    }
}

/// Fills the uncoloured inner vertices of the block starting at `base`.
fn fill_block(c: &mut TotalColouring, base: usize, s: Colour) {
    let third = |a: Colour, b: Colour| (1..=3).find(|&x| x != a && x != b).expect("two colours leave a third");
    let e = |i: usize| c.edge[base + i];
    match s {
        2 => {
            // 4 a x b 5 c y d 4: x and y each see two ternary edges
            c.vertex[base + 1] = third(e(0), e(1));
            c.vertex[base + 3] = third(e(2), e(3));
        }
        1 | 3 => {
            // s = 1:  4 a 5 b x 5 y c 4      s = 3:  4 a x 5 y b 5 c 4
            let (a, b, cc) = if s == 1 { (e(0), e(1), e(3)) } else { (e(0), e(2), e(3)) };
            let (x, y) = if s == 1 { (base + 2, base + 3) } else { (base + 1, base + 2) };
            if a != cc {
                // all three ternary edge colours present
                c.vertex[x] = cc;
                c.vertex[y] = a;
            } else {
                let missing = third(a, b);
                let middle = base + 2;
                let (other, other_edge) = if s == 1 { (base + 3, cc) } else { (base + 1, a) };
                c.vertex[middle] = missing;
                c.vertex[other] = third(missing, other_edge);
            }
        }
        _ => unreachable!("distances are in 1..=3"),
    }
}

fn padded_length(n: usize) -> usize {
    (n.saturating_sub(1)).div_ceil(4).max(1) * 4
}

/// Total Thue colouring of the path on `n` vertices with at most 5 colours.
///
/// The path is padded to a length divisible by 4, coloured there and
/// restricted back. Any `n >= 1` is accepted.
pub fn colour_path_total(n: usize) -> Result<TotalColouring, ConstructError> {
    let (colouring, _) = five_colour_path(n, 0, 0)?;
    Ok(colouring)
}

/// Like [`colour_path_total`], also returning the distance sequence used and
/// the number of local repairs the final check required.
pub fn five_colour_path(
    n: usize,
    distance_offset: usize,
    edge_offset: usize,
) -> Result<(TotalColouring, PathConstructionInfo), ConstructError> {
    let len = padded_length(n);
    let padded = make_path(len + 1)?;
    let mut five = FivePath::build(len, distance_offset, edge_offset);
    let repairs = five.repair(&padded)?;
    let g = make_path(n)?;
    let c = require_strong(&g, five.restrict(n), "five-colour path")?;
    Ok((
        c,
        PathConstructionInfo {
            padded_length: len,
            distances: five.distances,
            repairs,
        },
    ))
}

#[derive(Debug, Clone)]
pub struct PathConstructionInfo {
    pub padded_length: usize,
    pub distances: Vec<Colour>,
    pub repairs: usize,
}

/// Total Thue colouring of the cycle on `n >= 4` vertices with at most 6
/// colours. For `n` divisible by 4 the five-colour path pattern is first
/// wrapped around directly; otherwise (or if that fails every variant) one
/// edge gets a private colour 6 and the rest is coloured as a path.
pub fn colour_cycle_total(n: usize) -> Result<TotalColouring, ConstructError> {
    if n < 4 {
        return Err(ConstructError::WrongShape(format!("cycle needs at least 4 vertices, got {n}")));
    }
    let g = crate::graph::make_cycle(n)?;
    const OFFSETS: [usize; 6] = [0, 1, 2, 3, 5, 8];

    if n.is_multiple_of(4) {
        for &ds in &OFFSETS {
            for &es in &OFFSETS {
                let five = FivePath::build(n, ds, es);
                // v(n) coincides with v(0); edge n-1 of the path is the closing edge
                let c = TotalColouring::new(five.colouring.vertex[..n].to_vec(), five.colouring.edge.clone());
                if is_strong_total_thue(&g, &c)?.is_none() {
                    return Ok(c);
                }
            }
        }
    }

    // Windows of a longer five-colour path: any subpath keeps the colouring
    // valid, and shifting the window moves the colour-4 vertices away from the
    // two ends (both ends would be 4 when n ≡ 1 mod 4).
    let mut last = None;
    for &ds in &OFFSETS {
        for &es in &OFFSETS {
            let path = match five_colour_path(n + 3, ds, es) {
                Ok((c, _)) => c,
                Err(e) => {
                    last = Some(e);
                    continue;
                }
            };
            for r in 0..4 {
                let mut edge = path.edge[r..r + n - 1].to_vec();
                edge.push(6);
                let c = TotalColouring::new(path.vertex[r..r + n].to_vec(), edge);
                match is_strong_total_thue(&g, &c)? {
                    None => return Ok(c),
                    Some(w) => last = Some(failed("cycle colouring", &w)),
                }
            }
        }
    }
    Err(last.unwrap_or_else(|| ConstructError::ConstructionFailed("cycle colouring".into())))
}

/// Total Thue colouring of `K_{1,n}` (`n >= 3`, as built by
/// [`make_star`](crate::graph::make_star)) with `n + 1` colours: edge to leaf
/// `i` gets colour `i`, the centre `n + 1`, and leaf `i` the colour of the
/// edge to leaf `i + 1` (cyclically).
pub fn colour_star_total(n: usize) -> Result<TotalColouring, ConstructError> {
    if n < 3 {
        return Err(ConstructError::WrongShape(format!("star needs at least 3 leaves, got {n}")));
    }
    let g = crate::graph::make_star(n)?;
    let n32 = n as Colour;
    let mut vertex = vec![n32 + 1];
    vertex.extend((1..=n32).map(|i| i % n32 + 1));
    let edge = (1..=n32).collect();
    require_strong(&g, TotalColouring::new(vertex, edge), "star colouring")
}

/// Rainbow vertices plus one further colour on every edge: `n + 1` colours.
pub fn rainbow_plus_one(g: &Graph) -> Result<TotalColouring, ConstructError> {
    let n = g.vertex_count() as Colour;
    let c = TotalColouring::new((1..=n).collect(), vec![n + 1; g.edge_count()]);
    require_weak(g, c, "rainbow plus one")
}

/// Weak total Thue colouring with at most `m - n + 5` colours: a weak
/// 4-colouring of a spanning tree (found by the exact solver) and a private
/// colour on every non-tree edge.
pub fn colour_spanning_tree_bound(g: &Graph, budget: Budget) -> Result<TotalColouring, ConstructError> {
    let tree = spanning_tree(g)?;
    let cert = find_colouring(&tree.graph, Mode::WeakTotal, 4, budget)?.ok_or_else(|| {
        ConstructError::ConstructionFailed("no weak total 4-colouring of the spanning tree".into())
    })?;
    let tc = cert.total().expect("weak-total certificates are total").clone();
    let mut edge = vec![0; g.edge_count()];
    for (local, &parent) in tree.edges.iter().enumerate() {
        edge[parent as usize] = tc.edge[local];
    }
    for (slot, fresh) in edge.iter_mut().filter(|c| **c == 0).zip(5..) {
        *slot = fresh;
    }
    require_weak(g, TotalColouring::new(tc.vertex.clone(), edge), "spanning-tree colouring")
}

/// Result of [`colour_bridge_composition`].
#[derive(Debug, Clone)]
pub struct BridgeColouring {
    pub colouring: TotalColouring,
    /// colours `1..=bridge_colours` are used on bridges only
    pub bridge_colours: u32,
    /// blocks share the palette `bridge_colours + 1 ..= bridge_colours + block_palette`
    pub block_palette: u32,
    /// maximum degree of the tree of 2-edge-connected components
    pub tree_max_degree: usize,
}

/// Colour budget allowed for the bridges: `4Δ(T) - 4`, and at least one colour
/// whenever there is a bridge.
pub fn bridge_colour_allowance(tree_max_degree: usize) -> u32 {
    match tree_max_degree {
        0 => 0,
        d => (4 * d as u32 - 4).max(1),
    }
}

/// Weak total Thue colouring assembled from a nonrepetitive edge colouring of
/// the bridge tree and weak total colourings of the 2-edge-connected
/// components on a shared, disjoint palette.
pub fn colour_bridge_composition<F>(g: &Graph, mut block_colourer: F, budget: Budget) -> Result<BridgeColouring, ConstructError>
where
    F: FnMut(&Graph) -> Result<TotalColouring, ConstructError>,
{
    let bd = bridge_decomposition(g)?;
    let tree_max_degree = bd.quotient_tree.max_degree();
    let allowance = bridge_colour_allowance(tree_max_degree);
    let mut edge = vec![0; g.edge_count()];
    let mut vertex = vec![0; g.vertex_count()];

    let bridge_colours = if bd.bridges.is_empty() {
        0
    } else {
        let sol = exact_number(&bd.quotient_tree, Mode::Edge, budget)?;
        if sol.value > allowance {
            return Err(ConstructError::ConstructionFailed(format!(
                "bridge tree needs {} colours, allowance is {allowance}",
                sol.value
            )));
        }
        let crate::solver::Certificate::Edge(colours) = sol.certificate else {
            unreachable!("edge mode yields edge certificates")
        };
        for (i, &b) in bd.bridges.iter().enumerate() {
            edge[b as usize] = colours[i];
        }
        sol.value
    };

    let mut block_palette = 0;
    for comp in &bd.components {
        let sub = g.induced(comp);
        let local = block_colourer(&sub.graph)?;
        let local = require_weak(&sub.graph, local, "block colouring")?.canonical();
        block_palette = block_palette.max(local.distinct_colours() as u32);
        for (i, &v) in sub.vertices.iter().enumerate() {
            vertex[v as usize] = bridge_colours + local.vertex[i];
        }
        for (i, &e) in sub.edges.iter().enumerate() {
            edge[e as usize] = bridge_colours + local.edge[i];
        }
    }
    let colouring = require_weak(g, TotalColouring::new(vertex, edge), "bridge composition")?;
    Ok(BridgeColouring {
        colouring,
        bridge_colours,
        block_palette,
        tree_max_degree,
    })
}

/// Block colourer using the exact weak total solver.
pub fn exact_block_colourer(budget: Budget) -> impl FnMut(&Graph) -> Result<TotalColouring, ConstructError> {
    move |block: &Graph| {
        let sol = exact_number(block, Mode::WeakTotal, budget)?;
        Ok(sol.certificate.total().expect("total certificate").clone())
    }
}

// ---------------------------------------------------------------------------
// Bounds
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Parameter {
    /// Thue chromatic number
    Pi,
    /// Thue chromatic index
    PiPrime,
    /// weak total Thue number
    PiTw,
    /// total Thue number
    PiT,
    /// total Thue choice number (bounds `π_T` from above)
    TotalChoice,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Upper,
    Lower,
    Exact,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub parameter: Parameter,
    pub kind: BoundKind,
    pub value: f64,
    /// the bound is strict (`<` or `>`)
    pub strict: bool,
    pub tag: String,
    pub note: String,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct BoundsReport {
    pub vertices: usize,
    pub edges: usize,
    pub max_degree: usize,
    pub entries: Vec<BoundEntry>,
    /// bound entries contradicted by supplied exact values
    pub violations: Vec<String>,
}

impl BoundsReport {
    pub fn for_parameter(&self, p: Parameter) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(move |e| e.parameter == p)
    }

    pub fn find(&self, p: Parameter, tag: &str) -> Option<&BoundEntry> {
        self.for_parameter(p).find(|e| e.tag == tag)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("parameter,kind,value,strict,tag,note\n");
        for e in &self.entries {
            let p = serde_json::to_value(e.parameter).expect("enum");
            let k = serde_json::to_value(e.kind).expect("enum");
            out.push_str(&format!(
                "{},{},{},{},{},\"{}\"\n",
                p.as_str().unwrap_or_default(),
                k.as_str().unwrap_or_default(),
                e.value,
                e.strict,
                e.tag,
                e.note.replace('"', "'")
            ));
        }
        out
    }
}

struct Shape {
    connected: bool,
    path: bool,
    cycle: bool,
    star: Option<usize>,
}

fn shape(g: &Graph) -> Shape {
    let n = g.vertex_count();
    let m = g.edge_count();
    let connected = n > 0 && g.is_connected();
    let d = g.max_degree();
    let path = connected && m + 1 == n && d <= 2;
    let cycle = connected && n >= 3 && g.vertices().all(|v| g.degree(v) == 2);
    let star = (connected && m + 1 == n && n >= 3 && d == n - 1).then_some(n - 1);
    Shape {
        connected,
        path,
        cycle,
        star,
    }
}

/// Cheap block value for the bridge-tree bound: exact when a small node budget
/// suffices, otherwise the better of `m - n + 5` and `n + 1`.
fn block_weak_upper(block: &Graph) -> (u32, bool) {
    match exact_number(block, Mode::WeakTotal, Budget::nodes(200_000)) {
        Ok(sol) => (sol.value, true),
        Err(_) => {
            let (n, m) = (block.vertex_count() as u32, block.edge_count() as u32);
            ((m + 5).saturating_sub(n).min(n + 1), false)
        }
    }
}

/// Every bound that applies to `g`. `faces` is the face count of a plane
/// embedding, trusted as given. When exact values are supplied, every entry
/// is checked against them and contradictions are listed in `violations`.
pub fn bounds_report(g: &Graph, faces: Option<u32>, solved: Option<&ThueParameters>) -> BoundsReport {
    let n = g.vertex_count();
    let m = g.edge_count();
    let delta = g.max_degree();
    let sh = shape(g);
    let mut entries = Vec::new();
    let mut add = |parameter, kind, value: f64, strict, tag: &str, note: &str| {
        entries.push(BoundEntry {
            parameter,
            kind,
            value,
            strict,
            tag: tag.to_string(),
            note: note.to_string(),
        })
    };
    use BoundKind::*;
    use Parameter::*;

    // weak total
    if sh.connected {
        add(PiTw, Upper, (m + 5 - n) as f64, false, "spanning-tree", "m - n + 5: weak 4-colouring of a subdivided spanning tree plus private colours on the other edges");
    }
    if let Some(k) = faces {
        if sh.connected {
            add(PiTw, Upper, (3 + k) as f64, false, "plane-faces", "3 + k for a plane graph with k faces");
        }
    }
    if n > 0 {
        add(PiTw, Upper, (n + 1) as f64, false, "rainbow-plus-one", "rainbow vertices and one extra colour on all edges");
    }
    let outerplanar = sh.connected && (n <= 3 || (n == 4 && m < 6) || sh.path || sh.cycle || m + 1 == n);
    if outerplanar {
        if n <= 3 {
            add(PiTw, Exact, n as f64, false, "outerplanar", "connected outerplanar graph on n <= 3 vertices");
        } else if n == 4 {
            add(PiTw, Exact, 3.0, false, "outerplanar", "connected outerplanar graph on 4 vertices");
        } else {
            add(PiTw, Upper, 13f64.min((n + 1) as f64), false, "outerplanar", "min(13, n + 1) for outerplanar graphs");
        }
    }
    if sh.connected {
        if let Ok(bd) = bridge_decomposition(g) {
            if !bd.bridges.is_empty() {
                let td = bd.quotient_tree.max_degree();
                let mut all_exact = true;
                let blocks = bd
                    .components
                    .iter()
                    .map(|c| {
                        let (v, exact) = block_weak_upper(&g.induced(c).graph);
                        all_exact &= exact;
                        v
                    })
                    .max()
                    .unwrap_or(1);
                let note = if all_exact {
                    "4Δ(T) - 4 + max weak value of the 2-edge-connected components (exact block values)"
                } else {
                    "4Δ(T) - 4 + max weak value of the 2-edge-connected components (block values bounded above)"
                };
                add(PiTw, Upper, (bridge_colour_allowance(td) + blocks) as f64, false, "bridge-tree", note);
            }
        }
    }

    // strong total and the single-kind parameters
    if n > 0 {
        add(PiT, Lower, lower_bound(g, Mode::StrongTotal) as f64, false, "proper-total", "strong colourings are proper: Δ + 1, and 4 once a path has three edges");
        add(PiPrime, Lower, delta as f64, false, "adjacent-edges", "edges at a vertex get distinct colours");
    }
    if delta >= 3 {
        let (total, list) = theorem_bounds(delta as u32).expect("delta >= 3");
        let d2 = (delta * delta) as f64;
        add(Pi, Upper, 3.0 * d2, true, "max-degree-vertex", "π < 3Δ² (cited)");
        add(PiPrime, Upper, 12.0 * d2, true, "line-graph", "π' ≤ π(line graph) < 12Δ²");
        add(PiT, Upper, total, true, "max-degree", "π_T < 15Δ² for Δ ≥ 3");
        add(TotalChoice, Upper, list, false, "list-local-lemma", "total Thue choice number ≤ 17.9856Δ² for Δ ≥ 3");
    }
    if let Some(leaves) = sh.star {
        add(PiT, Exact, (leaves + 1) as f64, false, "star", "π_T(K_{1,n}) = n + 1");
        add(PiTw, Exact, 3.0, false, "star", "π_Tw(K_{1,n}) = 3 for n >= 2");
        add(Pi, Exact, 2.0, false, "star", "π(K_{1,n}) = 2");
        add(PiPrime, Exact, leaves as f64, false, "star", "π'(K_{1,n}) = n");
    }
    if sh.path && n >= 4 {
        add(PiT, Lower, 4.0, false, "path", "4 ≤ π_T(P)");
        add(PiT, Upper, 5.0, false, "path", "π_T(P) ≤ 5 by the five-colour construction");
    }
    if sh.path && n >= 3 {
        add(PiTw, Exact, 3.0, false, "path", "weak value of paths on at least 3 vertices");
        add(Pi, Exact, 3.0, false, "path", "square-free ternary words");
    }
    if sh.cycle {
        let weak = if n == 5 || n == 7 { 4.0 } else { 3.0 };
        let vertex = if [5, 7, 9, 10, 14, 17].contains(&n) { 4.0 } else { 3.0 };
        add(Pi, Exact, vertex, false, "cycle", "cycle values 4 for n in {5,7,9,10,14,17}, else 3");
        add(PiTw, Exact, weak, false, "cycle", "weak value 4 for n in {5,7}, else 3");
        if n >= 4 {
            add(PiT, Lower, 4.0, false, "cycle", "4 ≤ π_T(C)");
            add(PiT, Upper, 6.0, false, "cycle", "π_T(C) ≤ 6: one private edge colour plus the path construction");
        }
    }

    if let Some(p) = solved {
        if let (Some(pi), Some(pp)) = (p.pi, p.pi_prime) {
            add(PiTw, Upper, (pi.min(pp) + 1) as f64, false, "vertex-or-edge-plus-one", "min(π, π') + 1");
            add(PiT, Upper, (pi + pp) as f64, false, "vertex-plus-edge", "π + π' on disjoint palettes");
            add(PiT, Lower, pi.max(pp) as f64, false, "vertex-plus-edge", "max(π, π')");
        }
        if let Some(t) = p.pi_t {
            add(PiTw, Upper, t as f64, false, "weak-below-strong", "π_Tw ≤ π_T");
        }
    }

    let mut report = BoundsReport {
        vertices: n,
        edges: m,
        max_degree: delta,
        entries,
        violations: Vec::new(),
    };
    if let Some(p) = solved {
        report.violations = contradictions(&report.entries, p);
    }
    report
}

fn contradictions(entries: &[BoundEntry], p: &ThueParameters) -> Vec<String> {
    let mut out = Vec::new();
    for e in entries {
        let exact = match e.parameter {
            Parameter::Pi => p.pi,
            Parameter::PiPrime => p.pi_prime,
            Parameter::PiTw => p.pi_tw,
            // π_T ≤ choice number, so an upper bound on the latter bounds π_T
            Parameter::PiT => p.pi_t,
            Parameter::TotalChoice => {
                if e.kind == BoundKind::Upper {
                    p.pi_t
                } else {
                    None
                }
            }
        };
        let Some(x) = exact.map(f64::from) else { continue };
        let ok = match (e.kind, e.strict) {
            (BoundKind::Upper, false) => x <= e.value,
            (BoundKind::Upper, true) => x < e.value,
            (BoundKind::Lower, false) => x >= e.value,
            (BoundKind::Lower, true) => x > e.value,
            (BoundKind::Exact, _) => x == e.value,
        };
        if !ok {
            out.push(format!("{:?} {:?} {} ({}) contradicts exact value {x}", e.parameter, e.kind, e.value, e.tag));
        }
    }
    out
}
