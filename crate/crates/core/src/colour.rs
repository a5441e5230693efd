//! Total colourings and the validity checkers.
//!
//! All path checkers share one depth-first walk which visits paths in the
//! same order as [`enumerate_paths`](crate::graph::enumerate_paths) and keeps,
//! for every prefix, whether its colour sequence already contains a square.
//! The reported witness is the first enumerated path whose sequence contains
//! a square, and the square is the leftmost-shortest one in that sequence.
//! Total sequences are walked on the subdivision, in its enumeration order.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{subdivide, Element, ElementPath, Graph, Subdivision, VertexId};
use crate::seqcore::{contains_square, square_suffix, Colour, ColourSequence, Square};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColourError {
    #[error("colouring is incomplete: {0} has no colour")]
    IncompleteColouring(String),
    #[error("colouring refers to {0}, which is not in the graph")]
    UnknownElement(String),
}

/// A colour for every vertex and every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalColouring {
    pub vertex: Vec<Colour>,
    pub edge: Vec<Colour>,
}

impl TotalColouring {
    pub fn new(vertex: Vec<Colour>, edge: Vec<Colour>) -> Self {
        TotalColouring { vertex, edge }
    }

    pub fn colour_of(&self, el: Element) -> Colour {
        match el {
            Element::Vertex(v) => self.vertex[v as usize],
            Element::Edge(e) => self.edge[e as usize],
        }
    }

    pub fn check_complete(&self, g: &Graph) -> Result<(), ColourError> {
        check_len(&self.vertex, g.vertex_count(), "vertex")?;
        check_len(&self.edge, g.edge_count(), "edge")
    }

    pub fn distinct_colours(&self) -> usize {
        self.vertex.iter().chain(&self.edge).collect::<BTreeSet<_>>().len()
    }

    /// Vertex colouring of the subdivision carrying the same colours.
    pub fn to_subdivision(&self) -> Vec<Colour> {
        self.vertex.iter().chain(&self.edge).copied().collect()
    }

    pub fn from_subdivision(sd: &Subdivision, colours: &[Colour]) -> Self {
        let n = sd.original_vertices;
        TotalColouring {
            vertex: colours[..n].to_vec(),
            edge: colours[n..].to_vec(),
        }
    }

    /// Renames colours to `1..=k` in order of first appearance (vertices, then edges).
    pub fn canonical(&self) -> Self {
        let mut map = BTreeMap::new();
        let mut rename = |c: &Colour| {
            let next = map.len() as Colour + 1;
            *map.entry(*c).or_insert(next)
        };
        let vertex = self.vertex.iter().map(&mut rename).collect();
        let edge = self.edge.iter().map(&mut rename).collect();
        TotalColouring { vertex, edge }
    }
}

fn check_len(colours: &[Colour], expected: usize, what: &str) -> Result<(), ColourError> {
    match colours.len() {
        l if l < expected => Err(ColourError::IncompleteColouring(format!("{what} {l}"))),
        l if l > expected => Err(ColourError::UnknownElement(format!("{what} {expected}"))),
        _ => Ok(()),
    }
}

/// `{"vertex_colours":{id:colour},"edge_colours":{id:colour}}`. Either map may be
/// absent for vertex-only or edge-only colourings.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColouringJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_colours: Option<BTreeMap<u32, Colour>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_colours: Option<BTreeMap<u32, Colour>>,
}

fn to_map(colours: &[Colour]) -> BTreeMap<u32, Colour> {
    colours.iter().enumerate().map(|(i, &c)| (i as u32, c)).collect()
}

fn from_map(map: Option<&BTreeMap<u32, Colour>>, count: usize, what: &str) -> Result<Vec<Colour>, ColourError> {
    let empty = BTreeMap::new();
    let map = map.unwrap_or(&empty);
    if let Some((&id, _)) = map.range(count as u32..).next() {
        return Err(ColourError::UnknownElement(format!("{what} {id}")));
    }
    (0..count as u32)
        .map(|i| {
            map.get(&i)
                .copied()
                .ok_or_else(|| ColourError::IncompleteColouring(format!("{what} {i}")))
        })
        .collect()
}

impl ColouringJson {
    pub fn from_total(c: &TotalColouring) -> Self {
        ColouringJson {
            vertex_colours: Some(to_map(&c.vertex)),
            edge_colours: Some(to_map(&c.edge)),
        }
    }

    pub fn from_vertices(colours: &[Colour]) -> Self {
        ColouringJson {
            vertex_colours: Some(to_map(colours)),
            edge_colours: None,
        }
    }

    pub fn from_edges(colours: &[Colour]) -> Self {
        ColouringJson {
            vertex_colours: None,
            edge_colours: Some(to_map(colours)),
        }
    }

    pub fn vertex_colours(&self, g: &Graph) -> Result<Vec<Colour>, ColourError> {
        from_map(self.vertex_colours.as_ref(), g.vertex_count(), "vertex")
    }

    pub fn edge_colours(&self, g: &Graph) -> Result<Vec<Colour>, ColourError> {
        from_map(self.edge_colours.as_ref(), g.edge_count(), "edge")
    }

    pub fn total(&self, g: &Graph) -> Result<TotalColouring, ColourError> {
        Ok(TotalColouring {
            vertex: self.vertex_colours(g)?,
            edge: self.edge_colours(g)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    VertexSeq,
    EdgeSeq,
    TotalSeq,
    ProperViolation,
}

/// A certificate that a colouring is invalid.
///
/// The colour sequence of `path` is read according to `kind`: vertex colours
/// only, edge colours only, all elements, or for a proper-colouring violation
/// the colours of the first and last element. `square` indexes that sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub path: ElementPath,
    pub square: Square,
}

impl Witness {
    pub fn sequence(&self, c: &TotalColouring) -> ColourSequence {
        let els = self.path.elements();
        match self.kind {
            WitnessKind::VertexSeq => self.path.vertices().map(|v| c.vertex[v as usize]).collect(),
            WitnessKind::EdgeSeq => self.path.edges().map(|e| c.edge[e as usize]).collect(),
            WitnessKind::TotalSeq => els.iter().map(|&el| c.colour_of(el)).collect(),
            WitnessKind::ProperViolation => match (els.first(), els.last()) {
                (Some(&a), Some(&b)) => vec![c.colour_of(a), c.colour_of(b)],
                _ => Vec::new(),
            },
        }
    }

    /// Path is simple in `g` and the square is reproduced from the colouring.
    pub fn reverify(&self, g: &Graph, c: &TotalColouring) -> bool {
        let seq = self.sequence(c);
        let square_ok = match self.kind {
            WitnessKind::ProperViolation => seq.len() == 2 && seq[0] == seq[1] && self.path.len() >= 2,
            _ => contains_square(&seq) == Some(self.square),
        };
        self.path.is_simple_path_of(g) && square_ok
    }

    /// The elements covered by the square, in path order.
    pub fn square_elements(&self) -> Vec<Element> {
        let els = self.path.elements();
        let picked: Vec<Element> = match self.kind {
            WitnessKind::VertexSeq => els.iter().copied().filter(|e| matches!(e, Element::Vertex(_))).collect(),
            WitnessKind::EdgeSeq => els.iter().copied().filter(|e| matches!(e, Element::Edge(_))).collect(),
            WitnessKind::TotalSeq => els.to_vec(),
            WitnessKind::ProperViolation => {
                return [els.first(), els.last()].into_iter().flatten().copied().collect();
            }
        };
        picked[self.square.start..self.square.end()].to_vec()
    }
}

/// Which colour sequence a walk reads along each path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum SeqKind {
    Vertex,
    Edge,
    Total,
}

impl SeqKind {
    fn witness_kind(self) -> WitnessKind {
        match self {
            SeqKind::Vertex => WitnessKind::VertexSeq,
            SeqKind::Edge => WitnessKind::EdgeSeq,
            SeqKind::Total => WitnessKind::TotalSeq,
        }
    }
}

/// First path (in enumeration order) whose `kind` colour sequence contains a
/// square, considering only paths with at most `max_elements` elements.
///
/// Total sequences are read along paths of the subdivision, so a run may end
/// at an edge whose far endpoint lies on the run.
pub(crate) fn first_violation(
    g: &Graph,
    vertex: &[Colour],
    edge: &[Colour],
    kind: SeqKind,
    max_elements: Option<usize>,
) -> Option<Witness> {
    if kind == SeqKind::Total {
        let sd = subdivide(g);
        let colours: Vec<Colour> = vertex.iter().chain(edge).copied().collect();
        let w = path_walk(&sd.graph, &colours, &[], SeqKind::Vertex, max_elements)?;
        return Some(Witness {
            kind: WitnessKind::TotalSeq,
            path: ElementPath(w.path.vertices().map(|v| sd.element_of(v)).collect()),
            square: w.square,
        });
    }
    path_walk(g, vertex, edge, kind, max_elements)
}

fn path_walk(
    g: &Graph,
    vertex: &[Colour],
    edge: &[Colour],
    kind: SeqKind,
    max_elements: Option<usize>,
) -> Option<Witness> {
    let max_edges = max_elements.map(|m| m.saturating_sub(1) / 2);
    let mut on_path = vec![false; g.vertex_count()];
    let mut seq: Vec<Colour> = Vec::new();
    let mut elements: Vec<Element> = Vec::new();
    // per path vertex: (vertex, next neighbour index, seq len before, elements len before, prefix has square)
    let mut stack: Vec<(VertexId, usize, usize, usize, bool)> = Vec::new();

    for s in g.vertices() {
        on_path[s as usize] = true;
        elements.push(Element::Vertex(s));
        if kind != SeqKind::Edge {
            seq.push(vertex[s as usize]);
        }
        stack.push((s, 0, 0, 0, false));

        while !stack.is_empty() {
            let depth = stack.len() - 1;
            let (u, ref mut next, _, _, flagged) = stack[depth];
            let nbrs = g.neighbours(u);
            let mut advanced = None;
            if max_edges.is_none_or(|m| depth < m) {
                while let Some(&(w, e)) = nbrs.get(*next) {
                    *next += 1;
                    if !on_path[w as usize] {
                        advanced = Some((w, e));
                        break;
                    }
                }
            }
            match advanced {
                Some((w, e)) => {
                    let (seq_before, el_before) = (seq.len(), elements.len());
                    let mut found = flagged;
                    match kind {
                        SeqKind::Vertex => {
                            seq.push(vertex[w as usize]);
                            found |= square_suffix(&seq).is_some();
                        }
                        SeqKind::Edge => {
                            seq.push(edge[e as usize]);
                            found |= square_suffix(&seq).is_some();
                        }
                        SeqKind::Total => {
                            seq.push(edge[e as usize]);
                            found |= square_suffix(&seq).is_some();
                            seq.push(vertex[w as usize]);
                            found = found || square_suffix(&seq).is_some();
                        }
                    }
                    elements.push(Element::Edge(e));
                    elements.push(Element::Vertex(w));
                    on_path[w as usize] = true;
                    if found && w > s {
                        let square = contains_square(&seq).expect("flagged prefix contains a square");
                        return Some(Witness {
                            kind: kind.witness_kind(),
                            path: ElementPath(elements),
                            square,
                        });
                    }
                    stack.push((w, 0, seq_before, el_before, found));
                }
                None => {
                    let (v, _, seq_before, el_before, _) = stack.pop().expect("non-empty");
                    on_path[v as usize] = false;
                    seq.truncate(seq_before);
                    elements.truncate(el_before);
                }
            }
        }
    }
    None
}

/// Adjacent vertices differ, adjacent edges differ, and no edge shares a
/// colour with an endpoint.
pub fn is_proper_total(g: &Graph, c: &TotalColouring) -> Result<Option<Witness>, ColourError> {
    c.check_complete(g)?;
    let clash = |path: Vec<Element>| Witness {
        kind: WitnessKind::ProperViolation,
        path: ElementPath(path),
        square: Square {
            start: 0,
            half_length: 1,
        },
    };
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let e = e as u32;
        let ce = c.edge[e as usize];
        if c.vertex[u as usize] == c.vertex[v as usize] {
            return Ok(Some(clash(vec![Element::Vertex(u), Element::Edge(e), Element::Vertex(v)])));
        }
        if c.vertex[u as usize] == ce {
            return Ok(Some(clash(vec![Element::Vertex(u), Element::Edge(e)])));
        }
        if c.vertex[v as usize] == ce {
            return Ok(Some(clash(vec![Element::Edge(e), Element::Vertex(v)])));
        }
    }
    for v in g.vertices() {
        let inc = g.neighbours(v);
        for (i, &(_, e)) in inc.iter().enumerate() {
            for &(_, f) in &inc[i + 1..] {
                if c.edge[e as usize] == c.edge[f as usize] {
                    return Ok(Some(clash(vec![Element::Edge(e), Element::Vertex(v), Element::Edge(f)])));
                }
            }
        }
    }
    Ok(None)
}

/// No simple path carries a square in its vertex-colour sequence.
pub fn is_nonrepetitive_vertex(g: &Graph, vertex: &[Colour]) -> Result<Option<Witness>, ColourError> {
    check_len(vertex, g.vertex_count(), "vertex")?;
    Ok(first_violation(g, vertex, &[], SeqKind::Vertex, None))
}

/// No simple path carries a square in its edge-colour sequence.
pub fn is_nonrepetitive_edge(g: &Graph, edge: &[Colour]) -> Result<Option<Witness>, ColourError> {
    check_len(edge, g.edge_count(), "edge")?;
    Ok(first_violation(g, &[], edge, SeqKind::Edge, None))
}

/// No run of consecutive elements (starting and ending at vertices or edges)
/// along a simple path carries a square. Properness is not required.
pub fn is_weak_total_thue(g: &Graph, c: &TotalColouring) -> Result<Option<Witness>, ColourError> {
    c.check_complete(g)?;
    Ok(first_violation(g, &c.vertex, &c.edge, SeqKind::Total, None))
}

/// Weak total Thue, and both induced colourings nonrepetitive. The first failing
/// check (total, then vertex, then edge) provides the witness.
pub fn is_strong_total_thue(g: &Graph, c: &TotalColouring) -> Result<Option<Witness>, ColourError> {
    c.check_complete(g)?;
    Ok(strong_violation(g, c, None))
}

pub(crate) fn strong_violation(g: &Graph, c: &TotalColouring, max_elements: Option<usize>) -> Option<Witness> {
    [SeqKind::Total, SeqKind::Vertex, SeqKind::Edge]
        .into_iter()
        .find_map(|kind| first_violation(g, &c.vertex, &c.edge, kind, max_elements))
}

/// Colour sequence along `p`, alternating vertex and edge colours in path order.
pub fn total_sequence(g: &Graph, c: &TotalColouring, p: &ElementPath) -> Result<ColourSequence, ColourError> {
    c.check_complete(g)?;
    p.elements()
        .iter()
        .map(|&el| {
            let ok = match el {
                Element::Vertex(v) => (v as usize) < g.vertex_count(),
                Element::Edge(e) => (e as usize) < g.edge_count(),
            };
            if ok {
                Ok(c.colour_of(el))
            } else {
                Err(ColourError::UnknownElement(format!("{el:?}")))
            }
        })
        .collect()
}
