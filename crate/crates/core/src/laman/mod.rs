//! Laman graphs and Henneberg constructions.

mod henneberg;
mod search;

pub use henneberg::{apply_henneberg, realize, HennebergMove, HennebergSequence, IPrimeMove};
pub use search::find_type1prime_sequence;

use std::collections::BTreeSet;
use std::fmt;

use crate::{Error, Result};

/// Largest vertex count accepted by the exhaustive subgraph check.
pub const MAX_LAMAN_VERTICES: usize = 12;

/// Normalized unordered edge.
pub fn edge_key(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

/// An undirected graph without loops or parallel edges.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimpleGraph {
    vertices: BTreeSet<String>,
    edges: BTreeSet<(String, String)>,
}

impl SimpleGraph {
    pub fn new() -> SimpleGraph {
        SimpleGraph::default()
    }

    pub fn from_edges(vertices: &[&str], edges: &[(&str, &str)]) -> Result<SimpleGraph> {
        let mut g = SimpleGraph::new();
        for v in vertices {
            g.add_vertex(v)?;
        }
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: &str) -> Result<()> {
        if !self.vertices.insert(v.to_string()) {
            return Err(Error::DuplicateVertex(v.to_string()));
        }
        Ok(())
    }

    pub fn add_edge(&mut self, a: &str, b: &str) -> Result<()> {
        if a == b {
            return Err(Error::SelfLoop(a.to_string()));
        }
        for v in [a, b] {
            if !self.vertices.contains(v) {
                return Err(Error::MissingVertex(v.to_string()));
            }
        }
        if !self.edges.insert(edge_key(a, b)) {
            return Err(Error::Input(format!("parallel edge {{{a},{b}}}")));
        }
        Ok(())
    }

    pub fn remove_edge(&mut self, a: &str, b: &str) -> Result<()> {
        if !self.edges.remove(&edge_key(a, b)) {
            return Err(Error::MissingEdge(a.to_string(), b.to_string()));
        }
        Ok(())
    }

    pub fn remove_vertex(&mut self, v: &str) {
        self.vertices.remove(v);
        self.edges.retain(|(a, b)| a != v && b != v);
    }

    pub fn has_vertex(&self, v: &str) -> bool {
        self.vertices.contains(v)
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        self.edges.contains(&edge_key(a, b))
    }

    pub fn vertices(&self) -> &BTreeSet<String> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(String, String)> {
        &self.edges
    }

    pub fn neighbours(&self, v: &str) -> BTreeSet<String> {
        self.edges
            .iter()
            .filter_map(|(a, b)| {
                if a == v {
                    Some(b.clone())
                } else if b == v {
                    Some(a.clone())
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: &str) -> usize {
        self.edges.iter().filter(|(a, b)| a == v || b == v).count()
    }
}

/// Why a graph fails the Laman condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LamanViolation {
    /// The global count `|E| = 2|V| − 3` fails.
    EdgeCount { edges: usize, vertices: usize },
    /// An induced subgraph carries too many edges.
    Subset { vertices: BTreeSet<String>, edges: usize },
}

impl fmt::Display for LamanViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LamanViolation::EdgeCount { edges, vertices } => {
                let bound = 2 * vertices - 3;
                let rel = if *edges > bound { ">" } else { "<" };
                write!(f, "|E|={edges} {rel} 2|V|-3={bound}")
            }
            LamanViolation::Subset { vertices, edges } => {
                let names: Vec<&str> = vertices.iter().map(String::as_str).collect();
                write!(f, "subgraph on {{{}}} has |E'|={edges} > 2|V'|-3={}", names.join(","), 2 * vertices.len() - 3)
            }
        }
    }
}

/// Result of the Laman test. `violation` is `None` exactly for Laman graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LamanReport {
    pub violation: Option<LamanViolation>,
}

impl LamanReport {
    pub fn is_laman(&self) -> bool {
        self.violation.is_none()
    }
}

/// Exhaustive Laman test over all induced subgraphs with at least two
/// vertices.
pub fn is_laman(g: &SimpleGraph) -> Result<LamanReport> {
    let n = g.vertices.len();
    if n < 2 {
        return Err(Error::TooFewVertices);
    }
    if n > MAX_LAMAN_VERTICES {
        return Err(Error::TooManyVertices { requested: n, limit: MAX_LAMAN_VERTICES });
    }
    if g.edges.len() != 2 * n - 3 {
        return Ok(LamanReport { violation: Some(LamanViolation::EdgeCount { edges: g.edges.len(), vertices: n }) });
    }
    let names: Vec<&String> = g.vertices.iter().collect();
    let index = |v: &String| names.binary_search(&v).expect("edge endpoints are vertices");
    let edge_masks: Vec<u32> = g.edges.iter().map(|(a, b)| (1u32 << index(a)) | (1u32 << index(b))).collect();
    for subset in 1u32..(1u32 << n) {
        let k = subset.count_ones() as usize;
        if k < 2 || k == n {
            continue;
        }
        let inside = edge_masks.iter().filter(|m| *m & subset == **m).count();
        if inside > 2 * k - 3 {
            let vertices = (0..n).filter(|i| subset >> i & 1 == 1).map(|i| names[i].clone()).collect();
            return Ok(LamanReport { violation: Some(LamanViolation::Subset { vertices, edges: inside }) });
        }
    }
    Ok(LamanReport { violation: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn theta() -> SimpleGraph {
        SimpleGraph::from_edges(&["o", "1", "2", "3"], &[("1", "o"), ("1", "2"), ("2", "o"), ("3", "o"), ("3", "2")])
            .unwrap()
    }

    #[test]
    fn small_cases() {
        let edge = SimpleGraph::from_edges(&["o", "1"], &[("o", "1")]).unwrap();
        assert!(is_laman(&edge).unwrap().is_laman());
        assert!(is_laman(&theta()).unwrap().is_laman());
        let k4 = SimpleGraph::from_edges(
            &["1", "2", "3", "4"],
            &[("1", "2"), ("1", "3"), ("1", "4"), ("2", "3"), ("2", "4"), ("3", "4")],
        )
        .unwrap();
        let report = is_laman(&k4).unwrap();
        assert!(!report.is_laman());
        assert_eq!(report.violation.unwrap().to_string(), "|E|=6 > 2|V|-3=5");
    }

    #[test]
    fn dense_subgraph_is_witnessed() {
        // K4 plus two pendant-ish vertices: count is right globally but K4 is too dense.
        let g = SimpleGraph::from_edges(
            &["1", "2", "3", "4", "5", "6"],
            &[("1", "2"), ("1", "3"), ("1", "4"), ("2", "3"), ("2", "4"), ("3", "4"), ("5", "1"), ("5", "6"), ("6", "2")],
        )
        .unwrap();
        match is_laman(&g).unwrap().violation {
            Some(LamanViolation::Subset { vertices, edges }) => {
                assert!(edges > 2 * vertices.len() - 3);
            }
            other => panic!("expected subset witness, got {other:?}"),
        }
    }

    #[test]
    fn too_few_vertices() {
        let g = SimpleGraph::from_edges(&["1"], &[]).unwrap();
        assert_eq!(is_laman(&g), Err(Error::TooFewVertices));
    }
}
