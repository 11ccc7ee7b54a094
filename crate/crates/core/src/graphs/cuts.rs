use std::collections::BTreeSet;

use super::laplacian::tree_polynomial;
use super::linalg::RatMatrix;
use super::{DirectedGraph, EdgeWeights};
use crate::exactalg::{Poly, RatFun};
use crate::{Error, Result};

/// Does removing `cut` leave exactly two trees, one holding `v1`, the
/// other holding `v2`?
fn splits_into_two_trees(g: &DirectedGraph, cut: u64, v1: &[usize], v2: &[usize]) -> bool {
    let kept = g.full_mask() & !cut;
    let (count, labels) = g.components(kept);
    if count != 2 {
        return false;
    }
    // Two components form a forest exactly when they carry n − 2 edges.
    if kept.count_ones() as usize + 2 != g.vertices().len() {
        return false;
    }
    let side = labels[v1[0]];
    v1.iter().all(|&v| labels[v] == side) && v2.iter().all(|&v| labels[v] != side)
}

fn cut_masks(g: &DirectedGraph, v1: &[usize], v2: &[usize]) -> Vec<u64> {
    let m = g.edges().len();
    let mut out = Vec::new();
    for cut in 0..(1u64 << m) {
        if !splits_into_two_trees(g, cut, v1, v2) {
            continue;
        }
        // Minimality: no proper nonempty subset of `cut` may qualify.
        let mut minimal = true;
        let mut sub = (cut - 1) & cut;
        while sub != 0 {
            if splits_into_two_trees(g, sub, v1, v2) {
                minimal = false;
                break;
            }
            sub = (sub - 1) & cut;
        }
        if minimal {
            out.push(cut);
        }
    }
    out
}

fn indices(g: &DirectedGraph, set: &BTreeSet<String>) -> Result<Vec<usize>> {
    set.iter().map(|v| g.vertex_index(v).ok_or_else(|| Error::MissingVertex(v.clone()))).collect()
}

/// All edge sets `C` whose removal leaves two trees separating `v1` from
/// `v2`, with no proper subset doing the same.
pub fn cut_sets(g: &DirectedGraph, v1: &BTreeSet<String>, v2: &BTreeSet<String>) -> Result<Vec<BTreeSet<String>>> {
    g.require_connected()?;
    if v1.is_empty() || v2.is_empty() {
        return Err(Error::Input("cut sides must be nonempty".into()));
    }
    if !v1.is_disjoint(v2) {
        return Err(Error::Input("cut sides must be disjoint".into()));
    }
    let (a, b) = (indices(g, v1)?, indices(g, v2)?);
    Ok(cut_masks(g, &a, &b).into_iter().map(|m| g.mask_to_ids(m)).collect())
}

/// `Σ_{C} Π_{e∈C} t_e` over the cut sets separating the two sides; zero when
/// the sides overlap.
fn cut_sum(g: &DirectedGraph, w: &EdgeWeights, v1: &[usize], v2: &[usize]) -> Poly {
    let a: BTreeSet<usize> = v1.iter().copied().collect();
    let b: BTreeSet<usize> = v2.iter().copied().collect();
    if !a.is_disjoint(&b) {
        return Poly::zero();
    }
    let (a, b): (Vec<usize>, Vec<usize>) = (a.into_iter().collect(), b.into_iter().collect());
    let mut acc = Poly::zero();
    for cut in cut_masks(g, &a, &b) {
        let mut term = Poly::one();
        for (k, e) in g.edges().iter().enumerate() {
            if cut >> k & 1 == 1 {
                term = &term * &w.poly(&e.id);
            }
        }
        acc += term;
    }
    acc
}

/// The reduced Laplacian inverse from cut sets:
/// `M⁻¹_ij = Σ_{C ∈ Cut({i,j},{n})} Π_C t / Σ_T Π_{e∉T} t_e`.
pub fn laplacian_inverse_by_cuts(g: &DirectedGraph, w: &EdgeWeights) -> Result<RatMatrix> {
    let trees = tree_polynomial(g, w)?;
    let n = g.vertices().len();
    let last = n - 1;
    Ok((0..last)
        .map(|i| {
            (0..last)
                .map(|j| RatFun::new(cut_sum(g, w, &[i, j], &[last]), [(trees.clone(), 1)]))
                .collect()
        })
        .collect())
}

/// Green's function from the cut-difference expansion
/// `[Σ_{Cut({i,t(e)},{n,h(e)})} Π_C t / t_e − Σ_{Cut({i,h(e)},{n,t(e)})} Π_C t / t_e] / Σ_T Π_{e∉T} t_e`.
pub fn green_function_by_cuts(g: &DirectedGraph, w: &EdgeWeights) -> Result<RatMatrix> {
    let trees = tree_polynomial(g, w)?;
    let last = g.vertices().len() - 1;
    Ok(g
        .edges()
        .iter()
        .map(|e| {
            let t = g.vertex_index(&e.tail).expect("validated");
            let h = g.vertex_index(&e.head).expect("validated");
            let te = w.poly(&e.id);
            (0..last)
                .map(|i| {
                    let plus = cut_sum(g, w, &[i, t], &[last, h]);
                    let minus = cut_sum(g, w, &[i, h], &[last, t]);
                    // Every contributing cut contains e, so t_e divides exactly.
                    let num = (plus - minus).div_exact(&te).expect("each cut contains the edge");
                    RatFun::new(num, [(trees.clone(), 1)])
                })
                .collect()
        })
        .collect())
}
