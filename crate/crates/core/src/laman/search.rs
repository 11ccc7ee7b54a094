use std::collections::{BTreeMap, BTreeSet};

use super::{edge_key, HennebergSequence, IPrimeMove, SimpleGraph};
use crate::{Error, Result};

/// Searches for a Henneberg I′ construction of `g` from the base edge
/// `e ∋ o`, by repeatedly deleting a degree-two vertex whose neighbours are
/// adjacent. Candidates are tried in id order with backtracking.
///
/// Parent edges in the result carry the orientation they receive when the
/// sequence is replayed: the base edge points from `v` to `o`, and each new
/// vertex is the tail of its two edges.
pub fn find_type1prime_sequence(g: &SimpleGraph, o: &str, e: (&str, &str)) -> Result<HennebergSequence> {
    let (a, b) = e;
    if !g.has_edge(a, b) {
        return Err(Error::MissingEdge(a.to_string(), b.to_string()));
    }
    let v = if a == o {
        b
    } else if b == o {
        a
    } else {
        return Err(Error::Input(format!("base vertex {o} is not on the edge {{{a},{b}}}")));
    };
    let n = g.vertices().len();
    if g.edges().len() != 2 * n - 3 {
        return Err(Error::NotTypeIPrime);
    }
    let mut failed: BTreeSet<BTreeSet<String>> = BTreeSet::new();
    let mut removed: Vec<(String, String, String)> = Vec::new();
    if !dfs(g, o, v, &mut failed, &mut removed) {
        return Err(Error::NotTypeIPrime);
    }

    let mut orientation: BTreeMap<(String, String), (String, String)> = BTreeMap::new();
    orientation.insert(edge_key(v, o), (v.to_string(), o.to_string()));
    let mut moves = Vec::new();
    for (new, p, q) in removed.into_iter().rev() {
        let parent = orientation[&edge_key(&p, &q)].clone();
        orientation.insert(edge_key(&new, &p), (new.clone(), p.clone()));
        orientation.insert(edge_key(&new, &q), (new.clone(), q.clone()));
        moves.push(IPrimeMove { parent, new });
    }
    Ok(HennebergSequence { base: (o.to_string(), v.to_string()), moves })
}

fn dfs(
    g: &SimpleGraph,
    o: &str,
    v: &str,
    failed: &mut BTreeSet<BTreeSet<String>>,
    removed: &mut Vec<(String, String, String)>,
) -> bool {
    if g.vertices().len() == 2 {
        return g.has_edge(o, v);
    }
    if failed.contains(g.vertices()) {
        return false;
    }
    for cand in g.vertices() {
        if cand == o || cand == v || g.degree(cand) != 2 {
            continue;
        }
        let nb: Vec<String> = g.neighbours(cand).into_iter().collect();
        if !g.has_edge(&nb[0], &nb[1]) {
            continue;
        }
        let mut smaller = g.clone();
        smaller.remove_vertex(cand);
        removed.push((cand.clone(), nb[0].clone(), nb[1].clone()));
        if dfs(&smaller, o, v, failed, removed) {
            return true;
        }
        removed.pop();
    }
    failed.insert(g.vertices().clone());
    false
}
