use super::linalg::{determinant, invert, RatMatrix};
use super::{DirectedGraph, EdgeWeights};
use crate::exactalg::{Poly, RatFun};
use crate::{Error, Result};

fn laplacian_on(g: &DirectedGraph, w: &EdgeWeights, keep: usize) -> RatMatrix {
    let rho = g.incidence_matrix();
    let mut m = vec![vec![RatFun::zero(); keep]; keep];
    for (k, e) in g.edges().iter().enumerate() {
        let inv = w.reciprocal(&e.id);
        for i in 0..keep {
            if rho[k][i] == 0 {
                continue;
            }
            for j in 0..keep {
                if rho[k][j] == 0 {
                    continue;
                }
                let term = if rho[k][i] * rho[k][j] > 0 { inv.clone() } else { -&inv };
                m[i][j] = &m[i][j] + &term;
            }
        }
    }
    m
}

/// `M_ij = Σ_e ρ_ei (1/t_e) ρ_ej` over all vertices but the last declared one.
pub fn weighted_laplacian(g: &DirectedGraph, w: &EdgeWeights) -> Result<RatMatrix> {
    g.require_connected()?;
    Ok(laplacian_on(g, w, g.vertices().len().saturating_sub(1)))
}

/// The Laplacian over every vertex, without deleting a row and column.
pub fn full_laplacian(g: &DirectedGraph, w: &EdgeWeights) -> RatMatrix {
    laplacian_on(g, w, g.vertices().len())
}

/// `Σ_T Π_{e∉T} t_e` over spanning trees `T`.
pub fn tree_polynomial(g: &DirectedGraph, w: &EdgeWeights) -> Result<Poly> {
    let mut acc = Poly::zero();
    for mask in g.spanning_tree_masks()? {
        let mut term = Poly::one();
        for (k, e) in g.edges().iter().enumerate() {
            if mask >> k & 1 == 0 {
                term = &term * &w.poly(&e.id);
            }
        }
        acc += term;
    }
    Ok(acc)
}

/// The spanning-tree expansion `(Σ_T Π_{e∉T} t_e) / Π_e t_e`.
pub fn kirchhoff_det(g: &DirectedGraph, w: &EdgeWeights) -> Result<RatFun> {
    let num = tree_polynomial(g, w)?;
    Ok(RatFun::new(num, g.edges().iter().map(|e| (w.poly(&e.id), 1))))
}

/// Inverse of the reduced Laplacian by fraction-free elimination. Its
/// determinant is checked against the spanning-tree expansion first.
pub fn laplacian_inverse(g: &DirectedGraph, w: &EdgeWeights) -> Result<RatMatrix> {
    let m = weighted_laplacian(g, w)?;
    if m.is_empty() {
        return Ok(m);
    }
    debug_assert!(determinant(&m) == kirchhoff_det(g, w)?);
    invert(&m).ok_or(Error::DisconnectedGraph)
}

/// `d⁻¹_ei = Σ_j (1/t_e) ρ_ej M⁻¹_ji`, indexed by edge then by the vertices
/// other than the last.
pub fn green_function(g: &DirectedGraph, w: &EdgeWeights) -> Result<RatMatrix> {
    let inv = laplacian_inverse(g, w)?;
    let rho = g.incidence_matrix();
    let keep = inv.len();
    Ok(g
        .edges()
        .iter()
        .enumerate()
        .map(|(k, e)| {
            let recip = w.reciprocal(&e.id);
            (0..keep)
                .map(|i| {
                    let mut acc = RatFun::zero();
                    for j in 0..keep {
                        match rho[k][j] {
                            1 => acc = &acc + &inv[j][i],
                            -1 => acc = &acc - &inv[j][i],
                            _ => {}
                        }
                    }
                    (&acc * &recip).cancel()
                })
                .collect()
        })
        .collect())
}
