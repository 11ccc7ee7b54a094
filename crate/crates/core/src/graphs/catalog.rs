use super::{DirectedGraph, Edge};

/// Every connected multigraph on vertices `1..=n` (for `n ≤ max_vertices`)
/// with at most `max_edges` edges, edges oriented from the smaller to the
/// larger label. Labelled graphs are listed, not isomorphism classes.
pub fn connected_multigraphs(max_vertices: usize, max_edges: usize) -> Vec<DirectedGraph> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        for m in 0..=max_edges {
            let mut choice = Vec::with_capacity(m);
            multisets(pairs.len(), m, 0, &mut choice, &mut |picked| {
                let edges = picked
                    .iter()
                    .enumerate()
                    .map(|(k, &p)| Edge {
                        id: format!("e{}", k + 1),
                        tail: vertices[pairs[p].0].clone(),
                        head: vertices[pairs[p].1].clone(),
                    })
                    .collect();
                let g = DirectedGraph::new(vertices.clone(), edges).expect("well formed");
                if g.is_connected() {
                    out.push(g);
                }
            });
        }
    }
    out
}

fn multisets(kinds: usize, size: usize, start: usize, acc: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    if acc.len() == size {
        emit(acc);
        return;
    }
    for k in start..kinds {
        acc.push(k);
        multisets(kinds, size, k, acc, emit);
        acc.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        // One vertex; then the connected two-vertex graphs with 1..=2 edges.
        let graphs = connected_multigraphs(2, 2);
        assert_eq!(graphs.len(), 3);
        // Three vertices, at most two edges: the three labelled paths.
        let three = connected_multigraphs(3, 2).into_iter().filter(|g| g.vertices().len() == 3).count();
        assert_eq!(three, 3);
    }
}
