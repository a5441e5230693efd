//! Simple undirected graphs with dense vertex and edge ids, the structural
//! transformations used by the constructions, and simple-path enumeration.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type VertexId = u32;
pub type EdgeId = u32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(VertexId),
    #[error("parallel edge between {0} and {1}")]
    ParallelEdge(VertexId, VertexId),
    #[error("edge endpoint {0} is not a vertex")]
    UnknownVertex(VertexId),
    #[error("vertex ids must be exactly 0..{0}")]
    SparseVertexIds(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// A simple undirected graph on vertices `0..n`.
///
/// Edge `i` is `edges[i]`, stored with the smaller endpoint first. Adjacency
/// lists are sorted by neighbour id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
}

impl Graph {
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut seen = BTreeSet::new();
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::Loop(u));
            }
            for w in [u, v] {
                if w as usize >= vertex_count {
                    return Err(GraphError::UnknownVertex(w));
                }
            }
            let (a, b) = (u.min(v), u.max(v));
            if !seen.insert((a, b)) {
                return Err(GraphError::ParallelEdge(a, b));
            }
            let id = list.len() as EdgeId;
            adjacency[a as usize].push((b, id));
            adjacency[b as usize].push((a, id));
            list.push((a, b));
        }
        for adj in &mut adjacency {
            adj.sort_unstable();
        }
        Ok(Graph {
            edges: list,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.vertex_count() as VertexId
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e as usize]
    }

    /// `(neighbour, edge)` pairs sorted by neighbour.
    pub fn neighbours(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v as usize]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v as usize].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let adj = self.neighbours(u);
        adj.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| adj[i].1)
    }

    /// Edges incident to `e` (sharing an endpoint), sorted.
    pub fn adjacent_edges(&self, e: EdgeId) -> Vec<EdgeId> {
        let (u, v) = self.endpoints(e);
        let mut out: Vec<EdgeId> = self
            .neighbours(u)
            .iter()
            .chain(self.neighbours(v))
            .map(|&(_, f)| f)
            .filter(|&f| f != e)
            .collect();
        out.sort_unstable();
        out
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        self.components_without(&[])
    }

    fn components_without(&self, removed: &[EdgeId]) -> Vec<Vec<VertexId>> {
        let mut skip = vec![false; self.edge_count()];
        for &e in removed {
            skip[e as usize] = true;
        }
        let mut label = vec![usize::MAX; self.vertex_count()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if label[s as usize] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut comp = vec![s];
            label[s as usize] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &(w, e) in self.neighbours(u) {
                    if !skip[e as usize] && label[w as usize] == usize::MAX {
                        label[w as usize] = id;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `vertices` (kept in the given order).
    pub fn induced(&self, vertices: &[VertexId]) -> Subgraph {
        self.restricted(vertices, |_| true)
    }

    /// Subgraph on `vertices` keeping only edges accepted by `keep`.
    pub fn restricted(&self, vertices: &[VertexId], keep: impl Fn(EdgeId) -> bool) -> Subgraph {
        let mut local = vec![u32::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v as usize] = i as u32;
        }
        let mut edges = Vec::new();
        let mut pairs = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            let (lu, lv) = (local[u as usize], local[v as usize]);
            if lu != u32::MAX && lv != u32::MAX && keep(e as EdgeId) {
                edges.push(e as EdgeId);
                pairs.push((lu, lv));
            }
        }
        let graph = Graph::new(vertices.len(), pairs).expect("subgraph of a simple graph");
        Subgraph {
            graph,
            vertices: vertices.to_vec(),
            edges,
        }
    }

    /// Graphviz rendering with vertex and edge ids as labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in self.vertices() {
            let _ = writeln!(out, "  {v};");
        }
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            let _ = writeln!(out, "  {u} -- {v} [label=\"e{e}\"];");
        }
        out.push_str("}\n");
        out
    }
}

/// A subgraph together with the ids its elements carry in the parent graph.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: Graph,
    /// local vertex id -> parent vertex id
    pub vertices: Vec<VertexId>,
    /// local edge id -> parent edge id
    pub edges: Vec<EdgeId>,
}

/// `{"vertices":[ids],"edges":[[u,v],...]}`; vertex ids must be `0..n` in some order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<[VertexId; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            vertices: g.vertices().collect(),
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(json: GraphJson) -> Result<Self, GraphError> {
        let n = json.vertices.len();
        let mut present = vec![false; n];
        for &v in &json.vertices {
            match present.get_mut(v as usize) {
                Some(slot) if !*slot => *slot = true,
                _ => return Err(GraphError::SparseVertexIds(n)),
            }
        }
        Graph::new(n, json.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let json = GraphJson::deserialize(d)?;
        Graph::try_from(json).map_err(serde::de::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// Transformations
// ---------------------------------------------------------------------------

/// Vertex `v` keeps id `v`; edge `e` becomes vertex `n + e`. The new edges
/// `2e` and `2e + 1` join the smaller and the larger endpoint of `e`,
/// respectively, to the subdivision vertex.
#[derive(Debug, Clone)]
pub struct Subdivision {
    pub graph: Graph,
    pub original_vertices: usize,
}

impl Subdivision {
    pub fn vertex_of_edge(&self, e: EdgeId) -> VertexId {
        self.original_vertices as VertexId + e
    }

    /// Original element represented by a subdivided-graph vertex.
    pub fn element_of(&self, v: VertexId) -> Element {
        if (v as usize) < self.original_vertices {
            Element::Vertex(v)
        } else {
            Element::Edge(v - self.original_vertices as VertexId)
        }
    }
}

pub fn subdivide(g: &Graph) -> Subdivision {
    let n = g.vertex_count() as VertexId;
    let edges = g
        .edges
        .iter()
        .enumerate()
        .flat_map(|(e, &(u, v))| {
            let x = n + e as VertexId;
            [(u, x), (x, v)]
        });
    Subdivision {
        graph: Graph::new(g.vertex_count() + g.edge_count(), edges).expect("subdivision is simple"),
        original_vertices: g.vertex_count(),
    }
}

/// Vertices are the edges of `g`; two are adjacent when the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Graph {
    let mut pairs = Vec::new();
    for v in g.vertices() {
        let inc = g.neighbours(v);
        for (i, &(_, e)) in inc.iter().enumerate() {
            for &(_, f) in &inc[i + 1..] {
                pairs.push((e.min(f), e.max(f)));
            }
        }
    }
    pairs.sort_unstable();
    Graph::new(g.edge_count(), pairs).expect("line graph of a simple graph is simple")
}

/// Breadth-first spanning tree from vertex 0, neighbours in increasing id order.
pub fn spanning_tree(g: &Graph) -> Result<Subgraph, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let mut in_tree = vec![false; g.edge_count()];
    let mut seen = vec![false; g.vertex_count()];
    if g.vertex_count() > 0 {
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for &(w, e) in g.neighbours(u) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    in_tree[e as usize] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let all: Vec<VertexId> = g.vertices().collect();
    Ok(g.restricted(&all, |e| in_tree[e as usize]))
}

#[derive(Debug, Clone)]
pub struct BridgeDecomposition {
    /// Bridges in increasing edge id order; bridge `i` is edge `i` of `quotient_tree`.
    pub bridges: Vec<EdgeId>,
    /// 2-edge-connected components, ordered by smallest vertex.
    pub components: Vec<Vec<VertexId>>,
    /// Component index of every vertex.
    pub component_of: Vec<usize>,
    /// One vertex per component, one edge per bridge.
    pub quotient_tree: Graph,
}

/// Lowpoint bridge search (iterative DFS) followed by component labelling.
pub fn bridge_decomposition(g: &Graph) -> Result<BridgeDecomposition, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let bridges = find_bridges(g);
    let components = g.components_without(&bridges);
    let mut component_of = vec![0; g.vertex_count()];
    for (i, comp) in components.iter().enumerate() {
        for &v in comp {
            component_of[v as usize] = i;
        }
    }
    let tree_edges = bridges.iter().map(|&b| {
        let (u, v) = g.endpoints(b);
        (component_of[u as usize] as VertexId, component_of[v as usize] as VertexId)
    });
    let quotient_tree = Graph::new(components.len(), tree_edges.collect::<Vec<_>>())
        .expect("contracting 2-edge-connected components yields a tree");
    Ok(BridgeDecomposition {
        bridges,
        components,
        component_of,
        quotient_tree,
    })
}

fn find_bridges(g: &Graph) -> Vec<EdgeId> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut clock = 0;
    let mut bridges = Vec::new();
    for root in g.vertices() {
        if disc[root as usize] != usize::MAX {
            continue;
        }
        disc[root as usize] = clock;
        low[root as usize] = clock;
        clock += 1;
        // (vertex, edge used to enter it, next neighbour index)
        let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        while let Some(&mut (u, parent_edge, ref mut next)) = stack.last_mut() {
            if let Some(&(w, e)) = g.neighbours(u).get(*next) {
                *next += 1;
                if Some(e) == parent_edge {
                    continue;
                }
                if disc[w as usize] == usize::MAX {
                    disc[w as usize] = clock;
                    low[w as usize] = clock;
                    clock += 1;
                    stack.push((w, Some(e), 0));
                } else {
                    low[u as usize] = low[u as usize].min(disc[w as usize]);
                }
            } else {
                stack.pop();
                if let (Some(e), Some(&(p, _, _))) = (parent_edge, stack.last()) {
                    low[p as usize] = low[p as usize].min(low[u as usize]);
                    if low[u as usize] > disc[p as usize] {
                        bridges.push(e);
                    }
                }
            }
        }
    }
    bridges.sort_unstable();
    bridges
}

// ---------------------------------------------------------------------------
// Paths
// ---------------------------------------------------------------------------

/// A vertex or an edge of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "id", rename_all = "lowercase")]
pub enum Element {
    Vertex(VertexId),
    Edge(EdgeId),
}

/// A run of consecutive incident vertices and edges with no vertex or edge
/// repeated, i.e. a path of the subdivision. May start or end at an edge,
/// whose far endpoint may then lie on the run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementPath(pub Vec<Element>);

impl ElementPath {
    /// Alternating `v0 e1 v1 ... ek vk` for a vertex sequence of `g`.
    pub fn from_vertices(g: &Graph, vertices: &[VertexId]) -> Self {
        let mut out = Vec::with_capacity(2 * vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            if i > 0 {
                let e = g
                    .edge_between(vertices[i - 1], v)
                    .expect("consecutive path vertices are adjacent");
                out.push(Element::Edge(e));
            }
            out.push(Element::Vertex(v));
        }
        ElementPath(out)
    }

    pub fn elements(&self) -> &[Element] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().filter_map(|el| match *el {
            Element::Vertex(v) => Some(v),
            Element::Edge(_) => None,
        })
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.0.iter().filter_map(|el| match *el {
            Element::Edge(e) => Some(e),
            Element::Vertex(_) => None,
        })
    }

    /// Consecutive elements incident, elements alternate, and no vertex or
    /// edge repeats.
    pub fn is_simple_path_of(&self, g: &Graph) -> bool {
        let el = &self.0;
        let mut seen = vec![false; g.vertex_count()];
        let mut seen_edge = vec![false; g.edge_count()];
        for (i, x) in el.iter().enumerate() {
            match *x {
                Element::Vertex(v) => {
                    if v as usize >= g.vertex_count() || std::mem::replace(&mut seen[v as usize], true) {
                        return false;
                    }
                }
                Element::Edge(e) => {
                    if e as usize >= g.edge_count() || std::mem::replace(&mut seen_edge[e as usize], true) {
                        return false;
                    }
                }
            }
            if let Some(y) = el.get(i + 1) {
                let ok = match (*x, *y) {
                    (Element::Vertex(v), Element::Edge(e)) | (Element::Edge(e), Element::Vertex(v)) => {
                        let (a, b) = g.endpoints(e);
                        v == a || v == b
                    }
                    _ => false,
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }
}

/// Every simple path with at least one edge, once per undirected path.
///
/// Paths are yielded as vertex sequences oriented from the smaller endpoint.
/// Order: start vertex ascending, then depth-first with neighbours in
/// ascending id order, a path being reported when first reached. With
/// `max_elements`, only paths with at most that many elements (vertices plus
/// edges) are produced.
pub fn enumerate_paths(g: &Graph, max_elements: Option<usize>) -> PathIter<'_> {
    PathIter {
        graph: g,
        max_edges: max_elements.map(|m| m.saturating_sub(1) / 2),
        start: 0,
        stack: Vec::new(),
        path: Vec::new(),
        on_path: vec![false; g.vertex_count()],
    }
}

pub struct PathIter<'g> {
    graph: &'g Graph,
    max_edges: Option<usize>,
    start: VertexId,
    /// next neighbour index for each vertex on the path
    stack: Vec<usize>,
    path: Vec<VertexId>,
    on_path: Vec<bool>,
}

impl Iterator for PathIter<'_> {
    type Item = Vec<VertexId>;

    fn next(&mut self) -> Option<Vec<VertexId>> {
        loop {
            if self.path.is_empty() {
                if self.start as usize >= self.graph.vertex_count() {
                    return None;
                }
                let s = self.start;
                self.start += 1;
                self.path.push(s);
                self.stack.push(0);
                self.on_path[s as usize] = true;
            }
            let u = *self.path.last().expect("non-empty");
            let depth = self.path.len() - 1;
            let next = self.stack.last_mut().expect("parallel to path");
            let nbrs = self.graph.neighbours(u);
            let can_extend = self.max_edges.is_none_or(|m| depth < m);
            let mut advanced = None;
            if can_extend {
                while let Some(&(w, _)) = nbrs.get(*next) {
                    *next += 1;
                    if !self.on_path[w as usize] {
                        advanced = Some(w);
                        break;
                    }
                }
            }
            match advanced {
                Some(w) => {
                    self.path.push(w);
                    self.stack.push(0);
                    self.on_path[w as usize] = true;
                    if w > self.path[0] {
                        return Some(self.path.clone());
                    }
                }
                None => {
                    self.stack.pop();
                    let v = self.path.pop().expect("non-empty");
                    self.on_path[v as usize] = false;
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), GraphError> {
    if cond {
        Ok(())
    } else {
        Err(GraphError::InvalidParameter(msg()))
    }
}

/// Path `0 - 1 - ... - (n-1)`; edge `i` joins `i` and `i + 1`.
pub fn make_path(n: usize) -> Result<Graph, GraphError> {
    require(n >= 1, || "a path needs at least one vertex".into())?;
    Graph::new(n, (1..n as VertexId).map(|i| (i - 1, i)))
}

/// Cycle on `n >= 3` vertices; edge `i` joins `i` and `(i + 1) mod n`.
pub fn make_cycle(n: usize) -> Result<Graph, GraphError> {
    require(n >= 3, || format!("a cycle needs at least 3 vertices, got {n}"))?;
    let n32 = n as VertexId;
    Graph::new(n, (0..n32).map(|i| (i, (i + 1) % n32)))
}

/// `K_{1,n}`: centre `0`, leaves `1..=n`, edge `i - 1` joins the centre and leaf `i`.
pub fn make_star(n: usize) -> Result<Graph, GraphError> {
    require(n >= 1, || "a star needs at least one leaf".into())?;
    Graph::new(n + 1, (1..=n as VertexId).map(|i| (0, i)))
}

pub fn make_complete(n: usize) -> Result<Graph, GraphError> {
    require(n >= 1, || "complete graph needs at least one vertex".into())?;
    let n32 = n as VertexId;
    Graph::new(n, (0..n32).flat_map(|u| (u + 1..n32).map(move |v| (u, v))))
}

/// `K_4` minus the edge `{0, 3}`.
pub fn make_diamond() -> Graph {
    Graph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).expect("diamond")
}

/// Random graph with all degrees at most `max_degree`: candidate pairs are
/// visited in a seeded random order and each is kept with probability 1/2
/// when both endpoints still have room.
pub fn random_graph(n: usize, max_degree: usize, seed: u64) -> Result<Graph, GraphError> {
    require(n >= 1, || "random graph needs at least one vertex".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(VertexId, VertexId)> = (0..n as VertexId)
        .flat_map(|u| (u + 1..n as VertexId).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(&mut rng);
    let mut deg = vec![0usize; n];
    let mut keep = Vec::new();
    for (u, v) in pairs {
        if deg[u as usize] < max_degree && deg[v as usize] < max_degree && rng.gen_bool(0.5) {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
            keep.push((u, v));
        }
    }
    keep.sort_unstable();
    Graph::new(n, keep)
}

/// Random connected graph with degrees at most `max_degree >= 2` (or a single
/// edge when `n = 2`): a random tree grown by attaching each vertex to an
/// earlier one with spare degree, plus up to `extra_edges` random chords.
pub fn random_connected_graph(
    n: usize,
    max_degree: usize,
    extra_edges: usize,
    seed: u64,
) -> Result<Graph, GraphError> {
    require(n >= 1, || "random graph needs at least one vertex".into())?;
    require(max_degree >= 2 || n <= 2, || "connected graphs on 3+ vertices need max degree 2".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut deg = vec![0usize; n];
    let mut edges = BTreeSet::new();
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| deg[u] < max_degree).collect();
        let u = *open.choose(&mut rng).expect("a path always leaves room");
        deg[u] += 1;
        deg[v] += 1;
        edges.insert((u as VertexId, v as VertexId));
    }
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut rng);
    let mut added = 0;
    for (u, v) in pairs {
        if added == extra_edges {
            break;
        }
        if deg[u] < max_degree && deg[v] < max_degree && edges.insert((u as VertexId, v as VertexId)) {
            deg[u] += 1;
            deg[v] += 1;
            added += 1;
        }
    }
    Graph::new(n, edges)
}

/// Connected graph made of `blocks` small 2-edge-connected pieces (single
/// vertices, triangles, 4-cycles, diamonds, 5-cycles) joined into a random
/// tree by bridges.
pub fn random_bridged_graph(blocks: usize, seed: u64) -> Result<Graph, GraphError> {
    require(blocks >= 1, || "need at least one block".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut ranges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut n: VertexId = 0;
    for b in 0..blocks {
        let base = n;
        let piece: Vec<(VertexId, VertexId)> = match rng.gen_range(0..5) {
            0 => vec![],
            1 => vec![(0, 1), (1, 2), (0, 2)],
            2 => vec![(0, 1), (1, 2), (2, 3), (0, 3)],
            3 => make_diamond().edges().to_vec(),
            _ => vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)],
        };
        let size = piece.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(1);
        edges.extend(piece.iter().map(|&(u, v)| (base + u, base + v)));
        n += size;
        ranges.push((base, n));
        if b > 0 {
            let (lo, hi) = ranges[rng.gen_range(0..b)];
            let from = rng.gen_range(lo..hi);
            let to = rng.gen_range(base..n);
            edges.push((from, to));
        }
    }
    Graph::new(n as usize, edges)
}

/// Parses `path:40`, `cycle:12`, `star:6`, `complete:4`, `diamond`,
/// `random:n:max_degree:seed` (the seed may be written `seed7`).
pub fn from_generator_spec(spec: &str) -> Result<Graph, GraphError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let num = |i: usize| -> Result<usize, GraphError> {
        let raw = parts
            .get(i)
            .ok_or_else(|| GraphError::InvalidParameter(format!("missing argument in '{spec}'")))?;
        let raw = raw.strip_prefix("seed").unwrap_or(raw);
        raw.parse()
            .map_err(|_| GraphError::InvalidParameter(format!("bad number '{raw}' in '{spec}'")))
    };
    let arity = |k: usize| require(parts.len() == k + 1, || format!("'{spec}' takes {k} argument(s)"));
    match parts[0] {
        "path" => arity(1).and_then(|_| make_path(num(1)?)),
        "cycle" => arity(1).and_then(|_| make_cycle(num(1)?)),
        "star" => arity(1).and_then(|_| make_star(num(1)?)),
        "complete" => arity(1).and_then(|_| make_complete(num(1)?)),
        "diamond" => arity(0).map(|_| make_diamond()),
        "random" => arity(3).and_then(|_| random_graph(num(1)?, num(2)?, num(3)? as u64)),
        other => Err(GraphError::InvalidParameter(format!("unknown generator '{other}'"))),
    }
}
