use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use indexmap::IndexSet;

use crate::error::{Error, Result};

/// Undirected simple graph over opaque string labels.
///
/// Vertices keep insertion order; neighbor lists are kept sorted by vertex
/// index.
#[derive(Debug, Clone, Default)]
pub struct Graph {
    vertices: IndexSet<String>,
    adjacency: Vec<BTreeSet<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices<I, L>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = L>,
        L: Into<String>,
    {
        let mut g = Self::new();
        for l in labels {
            let l = l.into();
            if g.vertices.contains(&l) {
                return Err(Error::DuplicateLabel(l));
            }
            g.add_vertex(l);
        }
        Ok(g)
    }

    /// Builds a graph from an edge list, creating endpoints as they appear.
    pub fn from_edges<I, L>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (L, L)>,
        L: Into<String>,
    {
        let mut g = Self::new();
        for (a, b) in edges {
            let (a, b) = (a.into(), b.into());
            g.add_vertex(a.clone());
            g.add_vertex(b.clone());
            g.add_edge(&a, &b)?;
        }
        Ok(g)
    }

    /// Adds a vertex if absent and returns its index.
    pub fn add_vertex(&mut self, label: impl Into<String>) -> usize {
        let (index, inserted) = self.vertices.insert_full(label.into());
        if inserted {
            self.adjacency.push(BTreeSet::new());
        }
        index
    }

    pub fn add_edge(&mut self, a: &str, b: &str) -> Result<()> {
        let i = self.require(a)?;
        let j = self.require(b)?;
        self.add_edge_indices(i, j)
    }

    pub(crate) fn add_edge_indices(&mut self, i: usize, j: usize) -> Result<()> {
        if i == j {
            return Err(Error::NotSimple(format!("loop at `{}`", self.label(i))));
        }
        if !self.adjacency[i].insert(j) {
            return Err(Error::NotSimple(format!(
                "duplicate edge {{{}, {}}}",
                self.label(i),
                self.label(j)
            )));
        }
        self.adjacency[j].insert(i);
        self.edge_count += 1;
        Ok(())
    }

    fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_owned()))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = &str> + '_ {
        self.vertices.iter().map(String::as_str)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.vertices.get_index_of(label)
    }

    pub fn contains(&self, label: &str) -> bool {
        self.vertices.contains(label)
    }

    pub fn label(&self, index: usize) -> &str {
        &self.vertices[index]
    }

    pub fn neighbors(&self, index: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[index].iter().copied()
    }

    pub fn degree(&self, label: &str) -> Option<usize> {
        self.index_of(label).map(|i| self.adjacency[i].len())
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.adjacency[i].contains(&j),
            _ => false,
        }
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in index order.
    pub fn edge_indices(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, ns)| ns.range(i + 1..).map(move |&j| (i, j)))
            .collect()
    }

    /// Edges as label pairs, smaller label first, sorted.
    pub fn edges(&self) -> Vec<(String, String)> {
        self.edge_set().into_iter().collect()
    }

    pub fn edge_set(&self) -> BTreeSet<(String, String)> {
        self.edge_indices()
            .into_iter()
            .map(|(i, j)| canonical(self.label(i), self.label(j)))
            .collect()
    }

    /// Connected components as lists of vertex indices, in discovery order.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count()];
        let mut components = Vec::new();
        for start in 0..self.vertex_count() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut component = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        component.push(w);
                        queue.push_back(w);
                    }
                }
            }
            components.push(component);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() > 0 && self.edge_count + 1 == self.vertex_count() && self.is_connected()
    }
}

/// Orders a label pair so that the smaller label comes first.
pub(crate) fn canonical(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_owned(), b.to_owned())
    } else {
        (b.to_owned(), a.to_owned())
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.vertices.iter().all(|v| other.vertices.contains(v))
            && self.edge_set() == other.edge_set()
    }
}

impl Eq for Graph {}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph({} vertices", self.vertex_count())?;
        for (a, b) in self.edges() {
            write!(f, ", {a}-{b}")?;
        }
        f.write_str(")")
    }
}
