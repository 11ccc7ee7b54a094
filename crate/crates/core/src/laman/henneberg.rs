use serde::{Deserialize, Serialize};

use super::SimpleGraph;
use crate::{Error, Result};

/// One Henneberg move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HennebergMove {
    /// Join a new vertex to two existing vertices.
    I { a: String, b: String, new: String },
    /// Join a new vertex to both endpoints of an existing edge.
    IPrime { a: String, b: String, new: String },
    /// Delete the edge `{a, b}` and join a new vertex to `a`, `b` and `c`.
    II { a: String, b: String, c: String, new: String },
}

fn require_vertex(g: &SimpleGraph, v: &str) -> Result<()> {
    if g.has_vertex(v) {
        Ok(())
    } else {
        Err(Error::MissingVertex(v.to_string()))
    }
}

fn require_edge(g: &SimpleGraph, a: &str, b: &str) -> Result<()> {
    if g.has_edge(a, b) {
        Ok(())
    } else {
        Err(Error::MissingEdge(a.to_string(), b.to_string()))
    }
}

pub fn apply_henneberg(g: &SimpleGraph, mv: &HennebergMove) -> Result<SimpleGraph> {
    let mut out = g.clone();
    match mv {
        HennebergMove::I { a, b, new } => {
            require_vertex(g, a)?;
            require_vertex(g, b)?;
            if a == b {
                return Err(Error::Input("Henneberg I needs two distinct vertices".into()));
            }
            out.add_vertex(new)?;
            out.add_edge(new, a)?;
            out.add_edge(new, b)?;
        }
        HennebergMove::IPrime { a, b, new } => {
            require_edge(g, a, b)?;
            out.add_vertex(new)?;
            out.add_edge(new, a)?;
            out.add_edge(new, b)?;
        }
        HennebergMove::II { a, b, c, new } => {
            require_edge(g, a, b)?;
            require_vertex(g, c)?;
            if c == a || c == b {
                return Err(Error::Input("Henneberg II needs a third vertex off the edge".into()));
            }
            out.remove_edge(a, b)?;
            out.add_vertex(new)?;
            for v in [a, b, c] {
                out.add_edge(new, v)?;
            }
        }
    }
    Ok(out)
}

/// A Henneberg I′ move as stored in a sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IPrimeMove {
    pub parent: (String, String),
    pub new: String,
}

/// A base edge `(o, v)` followed by Henneberg I′ moves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HennebergSequence {
    pub base: (String, String),
    pub moves: Vec<IPrimeMove>,
}

impl HennebergSequence {
    pub fn new(o: &str, v: &str, moves: &[((&str, &str), &str)]) -> HennebergSequence {
        HennebergSequence {
            base: (o.to_string(), v.to_string()),
            moves: moves
                .iter()
                .map(|((a, b), n)| IPrimeMove { parent: (a.to_string(), b.to_string()), new: n.to_string() })
                .collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<HennebergSequence> {
        serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn vertex_count(&self) -> usize {
        2 + self.moves.len()
    }
}

/// Builds the graph of a sequence, reporting the index of a failing move.
pub fn realize(seq: &HennebergSequence) -> Result<SimpleGraph> {
    let (o, v) = &seq.base;
    let mut g = SimpleGraph::new();
    g.add_vertex(o)?;
    g.add_vertex(v)?;
    g.add_edge(o, v)?;
    for (index, m) in seq.moves.iter().enumerate() {
        let mv = HennebergMove::IPrime { a: m.parent.0.clone(), b: m.parent.1.clone(), new: m.new.clone() };
        g = apply_henneberg(&g, &mv).map_err(|e| Error::Move { index, source: Box::new(e) })?;
    }
    Ok(g)
}
