//! Exact Thue numbers of small graphs by backtracking, and a naive
//! enumeration oracle.
//!
//! Every mode is reduced to the same problem: colour a list of items so that
//! no "candidate" (an ordered list of items read off a path, of even length)
//! is a square. A sequence contains a square exactly when some even-length
//! run of it is a square, and every such run along a path is itself a
//! candidate, so checking candidates alone is complete. Each candidate is
//! checked once, at the moment its last item (in assignment order) gets a
//! colour.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::colour::{
    is_nonrepetitive_edge, is_nonrepetitive_vertex, is_strong_total_thue, is_weak_total_thue, ColourError,
    ColouringJson, TotalColouring, Witness,
};
use crate::graph::{enumerate_paths, line_graph, subdivide, Graph, VertexId};
use crate::seqcore::{contains_square, Colour};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Vertex,
    Edge,
    WeakTotal,
    StrongTotal,
}

impl Mode {
    pub const ALL: [Mode; 4] = [Mode::Vertex, Mode::Edge, Mode::WeakTotal, Mode::StrongTotal];

    pub fn name(self) -> &'static str {
        match self {
            Mode::Vertex => "vertex",
            Mode::Edge => "edge",
            Mode::WeakTotal => "weak-total",
            Mode::StrongTotal => "strong-total",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Mode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown mode '{s}' (expected vertex, edge, weak-total or strong-total)"))
    }
}

/// Search limits; whichever is hit first stops the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        max_nodes: None,
        max_time: None,
    };

    pub fn nodes(n: u64) -> Self {
        Budget {
            max_nodes: Some(n),
            max_time: None,
        }
    }

    pub fn time(d: Duration) -> Self {
        Budget {
            max_nodes: None,
            max_time: Some(d),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::time(Duration::from_secs(60))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("budget exhausted after {nodes} nodes: value lies in {lower}..={upper}")]
    Exhausted { lower: u32, upper: u32, nodes: u64 },
    #[error("{colourings} colourings to enumerate exceeds the limit of {limit}")]
    TooLarge { colourings: u128, limit: u128 },
    #[error("solver produced a certificate rejected by the checker: {0:?}")]
    CertificateRejected(Box<Witness>),
    #[error(transparent)]
    Colour(#[from] ColourError),
}

/// A valid colouring for one mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Vertex(Vec<Colour>),
    Edge(Vec<Colour>),
    Total(TotalColouring),
}

impl Certificate {
    pub fn colours_used(&self) -> usize {
        let all: Vec<Colour> = match self {
            Certificate::Vertex(c) | Certificate::Edge(c) => c.clone(),
            Certificate::Total(t) => t.vertex.iter().chain(&t.edge).copied().collect(),
        };
        crate::seqcore::distinct_count(&all)
    }

    /// Runs the checker for `mode`; `None` means valid.
    pub fn violation(&self, g: &Graph, mode: Mode) -> Result<Option<Witness>, ColourError> {
        match (self, mode) {
            (Certificate::Vertex(c), Mode::Vertex) => is_nonrepetitive_vertex(g, c),
            (Certificate::Edge(c), Mode::Edge) => is_nonrepetitive_edge(g, c),
            (Certificate::Total(c), Mode::WeakTotal) => is_weak_total_thue(g, c),
            (Certificate::Total(c), Mode::StrongTotal) => is_strong_total_thue(g, c),
            _ => Err(ColourError::UnknownElement(format!("certificate does not match mode {mode}"))),
        }
    }

    pub fn to_json(&self) -> ColouringJson {
        match self {
            Certificate::Vertex(c) => ColouringJson::from_vertices(c),
            Certificate::Edge(c) => ColouringJson::from_edges(c),
            Certificate::Total(t) => ColouringJson::from_total(t),
        }
    }

    pub fn total(&self) -> Option<&TotalColouring> {
        match self {
            Certificate::Total(t) => Some(t),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Solution {
    pub mode: Mode,
    pub value: u32,
    pub certificate: Certificate,
    pub nodes_expanded: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum SolveReport {
    Solved {
        mode: Mode,
        value: u32,
        certificate: ColouringJson,
        nodes_expanded: u64,
        time_ms: u64,
    },
    Exhausted {
        exhausted: bool,
        lower: u32,
        upper: u32,
    },
}

impl From<&Solution> for SolveReport {
    fn from(s: &Solution) -> Self {
        SolveReport::Solved {
            mode: s.mode,
            value: s.value,
            certificate: s.certificate.to_json(),
            nodes_expanded: s.nodes_expanded,
            time_ms: s.elapsed.as_millis() as u64,
        }
    }
}

// ---------------------------------------------------------------------------
// Problem construction
// ---------------------------------------------------------------------------

/// Items are vertices (vertex mode), edges (edge mode), or vertices followed
/// by edges (`n + e`) in the two total modes.
struct Problem {
    items: usize,
    /// position -> item
    order: Vec<u32>,
    /// candidates whose last-assigned item sits at each position, as ranges into `pool`
    checks: Vec<Vec<(u32, u32)>>,
    pool: Vec<u32>,
}

impl Problem {
    fn new(g: &Graph, mode: Mode) -> Problem {
        let n = g.vertex_count() as u32;
        let mut candidates: Vec<Vec<u32>> = Vec::new();
        // graph whose vertices are the items and whose adjacency guides the order
        let item_graph = match mode {
            Mode::Vertex => {
                vertex_candidates(g, &mut candidates);
                g.clone()
            }
            Mode::Edge => {
                for p in enumerate_paths(g, None).filter(|p| p.len() % 2 == 1) {
                    candidates.push(p.windows(2).map(|w| edge_id(g, w[0], w[1])).collect());
                }
                line_graph(g)
            }
            Mode::WeakTotal => {
                let sd = subdivide(g);
                vertex_candidates(&sd.graph, &mut candidates);
                sd.graph
            }
            Mode::StrongTotal => {
                vertex_candidates(g, &mut candidates);
                for p in enumerate_paths(g, None).filter(|p| p.len() % 2 == 1) {
                    candidates.push(p.windows(2).map(|w| n + edge_id(g, w[0], w[1])).collect());
                }
                // total runs are the even-length paths of the subdivision
                let sd = subdivide(g);
                vertex_candidates(&sd.graph, &mut candidates);
                sd.graph
            }
        };

        let items = item_graph.vertex_count();
        let order = search_order(&item_graph);
        let mut position = vec![0u32; items];
        for (p, &it) in order.iter().enumerate() {
            position[it as usize] = p as u32;
        }
        let mut checks = vec![Vec::new(); items];
        let mut pool = Vec::new();
        for cand in candidates {
            let last = cand.iter().map(|&it| position[it as usize]).max().expect("non-empty candidate");
            checks[last as usize].push((pool.len() as u32, cand.len() as u32));
            pool.extend(cand);
        }
        Problem {
            items,
            order,
            checks,
            pool,
        }
    }

    fn violates(&self, position: usize, colours: &[u32]) -> bool {
        self.checks[position].iter().any(|&(start, len)| {
            let s = start as usize;
            let h = len as usize / 2;
            let cand = &self.pool[s..s + 2 * h];
            (0..h).all(|i| colours[cand[i] as usize] == colours[cand[i + h] as usize])
        })
    }

    /// Backtracking for a colouring with colours `0..k`. `Ok(None)` proves none exists.
    fn search(&self, k: u32, meter: &mut Meter) -> Result<Option<Vec<u32>>, ()> {
        let items = self.items;
        if items == 0 {
            return Ok(Some(Vec::new()));
        }
        let mut colours = vec![u32::MAX; items];
        // used[p] = number of distinct colours among positions < p
        let mut used = vec![0u32; items + 1];
        let mut trial = vec![0u32; items];
        let mut p = 0usize;
        loop {
            if p == items {
                return Ok(Some(colours));
            }
            let item = self.order[p] as usize;
            let limit = k.min(used[p] + 1);
            let mut placed = false;
            while trial[p] < limit {
                let c = trial[p];
                trial[p] += 1;
                meter.tick()?;
                colours[item] = c;
                if !self.violates(p, &colours) {
                    placed = true;
                    break;
                }
            }
            if placed {
                used[p + 1] = used[p].max(colours[item] + 1);
                p += 1;
                if p < items {
                    trial[p] = 0;
                }
            } else {
                colours[item] = u32::MAX;
                trial[p] = 0;
                if p == 0 {
                    return Ok(None);
                }
                p -= 1;
            }
        }
    }
}

fn edge_id(g: &Graph, u: VertexId, v: VertexId) -> u32 {
    g.edge_between(u, v).expect("path vertices are adjacent")
}

fn vertex_candidates(g: &Graph, out: &mut Vec<Vec<u32>>) {
    out.extend(enumerate_paths(g, None).filter(|p| p.len() % 2 == 0));
}

/// Breadth-first from the highest-degree item, neighbours by decreasing
/// degree then id; further components start the same way.
fn search_order(g: &Graph) -> Vec<u32> {
    let n = g.vertex_count();
    let mut by_degree: Vec<u32> = g.vertices().collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for &root in &by_degree {
        if seen[root as usize] {
            continue;
        }
        seen[root as usize] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            let mut next: Vec<u32> = g
                .neighbours(u)
                .iter()
                .map(|&(w, _)| w)
                .filter(|&w| !seen[w as usize])
                .collect();
            next.sort_by_key(|&w| (std::cmp::Reverse(g.degree(w)), w));
            for w in next {
                seen[w as usize] = true;
                queue.push_back(w);
            }
        }
    }
    order
}

struct Meter {
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
}

impl Meter {
    fn new(budget: Budget) -> Self {
        Meter {
            nodes: 0,
            max_nodes: budget.max_nodes.unwrap_or(u64::MAX),
            deadline: budget.max_time.map(|d| Instant::now() + d),
        }
    }

    #[inline]
    fn tick(&mut self) -> Result<(), ()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(());
        }
        if self.nodes.is_multiple_of(4096) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Err(());
                }
            }
        }
        Ok(())
    }
}

fn item_count(g: &Graph, mode: Mode) -> usize {
    match mode {
        Mode::Vertex => g.vertex_count(),
        Mode::Edge => g.edge_count(),
        Mode::WeakTotal | Mode::StrongTotal => g.vertex_count() + g.edge_count(),
    }
}

fn certificate_from(g: &Graph, mode: Mode, colours: &[u32]) -> Certificate {
    let shifted: Vec<Colour> = colours.iter().map(|&c| c + 1).collect();
    match mode {
        Mode::Vertex => Certificate::Vertex(shifted),
        Mode::Edge => Certificate::Edge(shifted),
        Mode::WeakTotal | Mode::StrongTotal => {
            let n = g.vertex_count();
            Certificate::Total(TotalColouring::new(shifted[..n].to_vec(), shifted[n..].to_vec()))
        }
    }
}

/// Whether some simple path has three edges.
fn has_three_edge_path(g: &Graph) -> bool {
    g.edges().iter().any(|&(u, v)| {
        g.neighbours(u).iter().any(|&(a, _)| {
            a != v && g.neighbours(v).iter().any(|&(b, _)| b != u && b != a)
        })
    })
}

/// A valid lower bound used to start iterative deepening.
///
/// Strong total colourings are proper, so the edges at a vertex and the
/// vertex itself all differ (`Δ + 1`); and a proper 3-colouring of three
/// consecutive edges with their vertices is forced to read `1 2 3 1 2 3`.
pub fn lower_bound(g: &Graph, mode: Mode) -> u32 {
    match mode {
        Mode::Vertex | Mode::WeakTotal => 1.min(item_count(g, mode) as u32),
        Mode::Edge => g.max_degree() as u32,
        Mode::StrongTotal => {
            if g.vertex_count() == 0 {
                return 0;
            }
            let degree = g.max_degree() as u32 + 1;
            if has_three_edge_path(g) {
                degree.max(4)
            } else {
                degree
            }
        }
    }
}

/// Finds a valid colouring with at most `k` colours, or proves there is none.
pub fn find_colouring(g: &Graph, mode: Mode, k: u32, budget: Budget) -> Result<Option<Certificate>, SolveError> {
    let problem = Problem::new(g, mode);
    let mut meter = Meter::new(budget);
    match problem.search(k, &mut meter) {
        Ok(Some(colours)) => Ok(Some(verified(g, mode, &colours)?)),
        Ok(None) => Ok(None),
        Err(()) => Err(SolveError::Exhausted {
            lower: 0,
            upper: item_count(g, mode) as u32,
            nodes: meter.nodes,
        }),
    }
}

fn verified(g: &Graph, mode: Mode, colours: &[u32]) -> Result<Certificate, SolveError> {
    let cert = certificate_from(g, mode, colours);
    match cert.violation(g, mode)? {
        None => Ok(cert),
        Some(w) => Err(SolveError::CertificateRejected(Box::new(w))),
    }
}

/// Smallest number of colours admitting a valid colouring in `mode`, found by
/// iterative deepening from [`lower_bound`]. The certificate has been checked
/// by the corresponding checker.
pub fn exact_number(g: &Graph, mode: Mode, budget: Budget) -> Result<Solution, SolveError> {
    let started = Instant::now();
    let problem = Problem::new(g, mode);
    let mut meter = Meter::new(budget);
    let upper = problem.items as u32;
    let mut k = lower_bound(g, mode);
    loop {
        match problem.search(k, &mut meter) {
            Ok(Some(colours)) => {
                let certificate = verified(g, mode, &colours)?;
                return Ok(Solution {
                    mode,
                    value: k,
                    certificate,
                    nodes_expanded: meter.nodes,
                    elapsed: started.elapsed(),
                });
            }
            Ok(None) => k += 1,
            Err(()) => {
                return Err(SolveError::Exhausted {
                    lower: k,
                    upper,
                    nodes: meter.nodes,
                })
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Oracle
// ---------------------------------------------------------------------------

pub const BRUTE_FORCE_LIMIT: u128 = 10_000_000;

/// Number of colourings of `items` items with at most `k` colours, counted up
/// to renaming of colours (sum of Stirling numbers of the second kind).
pub fn colourings_up_to_renaming(items: usize, k: usize) -> u128 {
    // stirling[j] = S(i, j) for the current i
    let mut stirling = vec![0u128; k + 1];
    stirling[0] = 1;
    for _ in 0..items {
        for j in (1..=k).rev() {
            stirling[j] = j as u128 * stirling[j] + stirling[j - 1];
        }
        stirling[0] = 0;
    }
    stirling.iter().sum()
}

/// Alternating item sequences of a path, also with one extra edge at either
/// end (possibly leading back onto the path). Their factors are exactly the
/// total runs through the path.
fn extended_runs(g: &Graph, vertices: &[usize], edges: &[usize]) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let ends = |v: usize| -> Vec<Option<usize>> {
        std::iter::once(None)
            .chain(
                g.neighbours(v as VertexId)
                    .iter()
                    .map(|&(_, e)| e as usize)
                    .filter(|e| !edges.contains(e))
                    .map(Some),
            )
            .collect()
    };
    let mut alt = vec![vertices[0]];
    for (i, &e) in edges.iter().enumerate() {
        alt.push(n + e);
        alt.push(vertices[i + 1]);
    }
    let mut out = Vec::new();
    for pre in ends(vertices[0]) {
        for post in ends(*vertices.last().expect("non-empty path")) {
            if pre.is_some() && pre == post {
                continue;
            }
            let mut seq: Vec<usize> = pre.map(|e| n + e).into_iter().collect();
            seq.extend(&alt);
            seq.extend(post.map(|e| n + e));
            out.push(seq);
        }
    }
    out
}

/// Smallest `k <= k_max` admitting a valid colouring, by enumerating every
/// colouring up to renaming of colours and testing each with full sequence
/// scans over every simple path. Orientation-free: weak total colourings are
/// tested on the alternating sequences directly, not via subdivision.
pub fn brute_force_number(g: &Graph, mode: Mode, k_max: u32) -> Result<Option<u32>, SolveError> {
    let n = g.vertex_count();
    let items = item_count(g, mode);
    let colourings = colourings_up_to_renaming(items, k_max as usize);
    if colourings > BRUTE_FORCE_LIMIT {
        return Err(SolveError::TooLarge {
            colourings,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    if items == 0 {
        return Ok(Some(0));
    }

    let mut sequences: Vec<Vec<usize>> = Vec::new();
    for p in enumerate_paths(g, None) {
        let edges: Vec<usize> = p.windows(2).map(|w| edge_id(g, w[0], w[1]) as usize).collect();
        let vertices: Vec<usize> = p.iter().map(|&v| v as usize).collect();
        match mode {
            Mode::Vertex => sequences.push(vertices),
            Mode::Edge => sequences.push(edges),
            Mode::WeakTotal | Mode::StrongTotal => {
                sequences.extend(extended_runs(g, &vertices, &edges));
                if mode == Mode::StrongTotal {
                    sequences.push(vertices);
                    sequences.push(edges.iter().map(|e| n + e).collect());
                }
            }
        }
    }
    sequences.sort_by_key(Vec::len);

    let valid = |colours: &[u32]| {
        sequences.iter().all(|seq| {
            let read: Vec<u32> = seq.iter().map(|&i| colours[i]).collect();
            contains_square(&read).is_none()
        })
    };

    // restricted growth strings: colours[i] <= 1 + max(colours[..i])
    let mut best: Option<u32> = None;
    let mut colours = vec![0u32; items];
    loop {
        let used = colours.iter().max().map_or(0, |&m| m + 1);
        if best.is_none_or(|b| used < b) && valid(&colours) {
            best = Some(used);
        }
        // next string with all values < k_max
        let mut i = items;
        loop {
            if i == 1 {
                return Ok(best);
            }
            i -= 1;
            let prefix_max = colours[..i].iter().max().copied().unwrap_or(0);
            if colours[i] < prefix_max + 1 && colours[i] + 1 < k_max {
                colours[i] += 1;
                colours[i + 1..].iter_mut().for_each(|c| *c = 0);
                break;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// All four parameters
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Default)]
pub struct ThueParameters {
    pub pi: Option<u32>,
    pub pi_prime: Option<u32>,
    pub pi_tw: Option<u32>,
    pub pi_t: Option<u32>,
    pub certificates: BTreeMap<Mode, Certificate>,
}

impl ThueParameters {
    pub fn get(&self, mode: Mode) -> Option<u32> {
        match mode {
            Mode::Vertex => self.pi,
            Mode::Edge => self.pi_prime,
            Mode::WeakTotal => self.pi_tw,
            Mode::StrongTotal => self.pi_t,
        }
    }

    fn set(&mut self, mode: Mode, value: u32) {
        let slot = match mode {
            Mode::Vertex => &mut self.pi,
            Mode::Edge => &mut self.pi_prime,
            Mode::WeakTotal => &mut self.pi_tw,
            Mode::StrongTotal => &mut self.pi_t,
        };
        *slot = Some(value);
    }

    /// Solves each mode independently; modes that exhaust the budget stay `None`.
    pub fn solve(g: &Graph, budget: Budget) -> Self {
        let mut out = ThueParameters::default();
        for mode in Mode::ALL {
            if let Ok(sol) = exact_number(g, mode, budget) {
                out.set(mode, sol.value);
                out.certificates.insert(mode, sol.certificate);
            }
        }
        out
    }

    /// Inequalities between the parameters that fail, for every pair that is known.
    pub fn violated_relations(&self) -> Vec<String> {
        let mut bad = Vec::new();
        if let (Some(p), Some(q), Some(t)) = (self.pi, self.pi_prime, self.pi_t) {
            if p.max(q) > t {
                bad.push(format!("max(pi, pi') = {} > pi_T = {t}", p.max(q)));
            }
            if t > p + q {
                bad.push(format!("pi_T = {t} > pi + pi' = {}", p + q));
            }
        }
        if let (Some(w), Some(t)) = (self.pi_tw, self.pi_t) {
            if w > t {
                bad.push(format!("pi_Tw = {w} > pi_T = {t}"));
            }
        }
        if let (Some(w), Some(p), Some(q)) = (self.pi_tw, self.pi, self.pi_prime) {
            if w > p.min(q) + 1 {
                bad.push(format!("pi_Tw = {w} > min(pi, pi') + 1 = {}", p.min(q) + 1));
            }
        }
        bad
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_cycle, make_diamond, make_path, make_star, random_graph};

    fn value(g: &Graph, mode: Mode) -> u32 {
        exact_number(g, mode, Budget::default()).unwrap().value
    }

    #[test]
    fn mode_names_round_trip() {
        for m in Mode::ALL {
            assert_eq!(m.name().parse::<Mode>().unwrap(), m);
            assert_eq!(serde_json::to_string(&m).unwrap(), format!("\"{}\"", m.name()));
        }
        assert!("total".parse::<Mode>().is_err());
    }

    #[test]
    fn stirling_counts() {
        // Bell numbers
        assert_eq!(colourings_up_to_renaming(5, 5), 52);
        assert_eq!(colourings_up_to_renaming(11, 11), 678_570);
        assert_eq!(colourings_up_to_renaming(4, 2), 8);
        assert_eq!(colourings_up_to_renaming(0, 3), 1);
    }

    #[test]
    fn documented_values() {
        assert_eq!(value(&make_cycle(5).unwrap(), Mode::Vertex), 4);
        assert_eq!(value(&make_cycle(6).unwrap(), Mode::WeakTotal), 3);
        assert_eq!(value(&make_cycle(5).unwrap(), Mode::WeakTotal), 4);
        assert_eq!(value(&make_star(4).unwrap(), Mode::StrongTotal), 5);
        assert_eq!(value(&make_diamond(), Mode::WeakTotal), 3);
        let p5 = value(&make_path(5).unwrap(), Mode::StrongTotal);
        assert!((4..=5).contains(&p5));
        assert_eq!(value(&make_path(2).unwrap(), Mode::WeakTotal), 2);
        assert_eq!(value(&make_path(3).unwrap(), Mode::Vertex), 2);
        assert_eq!(value(&make_path(4).unwrap(), Mode::Vertex), 3);
    }

    #[test]
    fn degenerate_graphs() {
        let single = Graph::new(1, []).unwrap();
        assert_eq!(value(&single, Mode::Vertex), 1);
        assert_eq!(value(&single, Mode::Edge), 0);
        assert_eq!(value(&single, Mode::WeakTotal), 1);
        assert_eq!(value(&single, Mode::StrongTotal), 1);
        let empty = Graph::new(0, []).unwrap();
        assert_eq!(value(&empty, Mode::StrongTotal), 0);
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(lower_bound(&make_star(4).unwrap(), Mode::StrongTotal), 5);
        assert_eq!(lower_bound(&make_path(5).unwrap(), Mode::StrongTotal), 4);
        assert_eq!(lower_bound(&make_path(3).unwrap(), Mode::StrongTotal), 3);
        assert_eq!(lower_bound(&make_complete(3).unwrap(), Mode::StrongTotal), 3);
        for seed in 0..10 {
            let g = random_graph(8, 4, seed).unwrap();
            assert_eq!(lower_bound(&g, Mode::Edge), g.max_degree() as u32);
        }
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_number(&make_path(4).unwrap(), Mode::Vertex, 4).unwrap(), Some(3));
        assert_eq!(brute_force_number(&make_path(2).unwrap(), Mode::WeakTotal, 4).unwrap(), Some(2));
        let k12 = make_star(2).unwrap();
        assert_eq!(
            brute_force_number(&k12, Mode::StrongTotal, 6).unwrap(),
            Some(value(&k12, Mode::StrongTotal))
        );
        // too few colours allowed
        assert_eq!(brute_force_number(&make_cycle(5).unwrap(), Mode::Vertex, 3).unwrap(), None);
        let big = make_complete(6).unwrap();
        assert!(matches!(
            brute_force_number(&big, Mode::StrongTotal, 10),
            Err(SolveError::TooLarge { .. })
        ));
    }

    #[test]
    fn solver_matches_oracle_on_random_small_graphs() {
        for seed in 0..25 {
            let g = random_graph(2 + seed as usize % 4, 3, seed).unwrap();
            for mode in Mode::ALL {
                let items = item_count(&g, mode) as u32;
                let exact = value(&g, mode);
                assert_eq!(brute_force_number(&g, mode, items.max(1)).unwrap(), Some(exact), "{mode} {g:?}");
            }
        }
    }

    #[test]
    fn exhausted_reports_bounds() {
        let g = make_cycle(10).unwrap();
        match exact_number(&g, Mode::StrongTotal, Budget::nodes(10)) {
            Err(SolveError::Exhausted { lower, upper, nodes }) => {
                assert!(lower >= 3 && upper == 20 && nodes > 10);
            }
            other => panic!("expected exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn find_colouring_fixed_k() {
        let c5 = make_cycle(5).unwrap();
        assert!(find_colouring(&c5, Mode::Vertex, 3, Budget::UNLIMITED).unwrap().is_none());
        let cert = find_colouring(&c5, Mode::Vertex, 4, Budget::UNLIMITED).unwrap().unwrap();
        assert!(cert.violation(&c5, Mode::Vertex).unwrap().is_none());
        assert!(cert.colours_used() <= 4);
    }

    #[test]
    fn parameters_satisfy_relations() {
        for g in [make_cycle(5).unwrap(), make_star(3).unwrap(), make_diamond(), make_path(6).unwrap()] {
            let params = ThueParameters::solve(&g, Budget::default());
            assert!(params.violated_relations().is_empty());
            assert_eq!(params.certificates.len(), 4);
            for (&mode, cert) in &params.certificates {
                assert!(cert.violation(&g, mode).unwrap().is_none());
            }
        }
    }

    #[test]
    fn report_json_shapes() {
        let sol = exact_number(&make_path(2).unwrap(), Mode::Vertex, Budget::default()).unwrap();
        let json = serde_json::to_value(SolveReport::from(&sol)).unwrap();
        assert_eq!(json["mode"], "vertex");
        assert_eq!(json["value"], 2);
        assert!(json["certificate"]["vertex_colours"].is_object());
        let ex = SolveReport::Exhausted {
            exhausted: true,
            lower: 3,
            upper: 9,
        };
        assert_eq!(serde_json::to_string(&ex).unwrap(), r#"{"exhausted":true,"lower":3,"upper":9}"#);
    }
}
