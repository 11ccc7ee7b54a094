//! Exact linear algebra over rational functions by fraction-free
//! elimination.

use std::collections::BTreeMap;

use crate::exactalg::{Poly, RatFun};

pub type RatMatrix = Vec<Vec<RatFun>>;

/// Clears denominators: returns a polynomial matrix `P` and the joint
/// denominator factors `J` with `M = P / ΠJ`.
fn clear_denominators(m: &RatMatrix) -> (Vec<Vec<Poly>>, Vec<(Poly, u32)>) {
    let mut joint: BTreeMap<Poly, u32> = BTreeMap::new();
    for row in m {
        for f in row {
            for (p, e) in f.factors() {
                let slot = joint.entry(p.clone()).or_insert(0);
                *slot = (*slot).max(*e);
            }
        }
    }
    let cleared = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|f| {
                    let mut n = f.numer().clone();
                    for (p, e) in &joint {
                        let have = f.factors().get(p).copied().unwrap_or(0);
                        if *e > have {
                            n = &n * &p.pow(e - have);
                        }
                    }
                    n
                })
                .collect()
        })
        .collect();
    (cleared, joint.into_iter().collect())
}

/// Fraction-free Gauss–Jordan elimination on `[A | I]`. Returns the common
/// diagonal value `d` (equal to `±det A`) and the right block `B` with
/// `A⁻¹ = B / d`; `None` if `A` is singular.
fn bareiss_gauss_jordan(a: Vec<Vec<Poly>>) -> Option<(Poly, Vec<Vec<Poly>>, bool)> {
    let n = a.len();
    let mut m: Vec<Vec<Poly>> = a
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..n).map(|j| if i == j { Poly::one() } else { Poly::zero() }));
            row
        })
        .collect();
    let mut prev = Poly::one();
    let mut odd_swaps = false;
    for k in 0..n {
        let pivot = (k..n).find(|&r| !m[r][k].is_zero())?;
        if pivot != k {
            m.swap(pivot, k);
            odd_swaps = !odd_swaps;
        }
        let pivot_row = m[k].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let factor = row[k].clone();
            for j in 0..2 * n {
                let num = &(&pivot_row[k] * &row[j]) - &(&factor * &pivot_row[j]);
                row[j] = num.div_exact(&prev).expect("fraction-free step divides exactly");
            }
        }
        prev = pivot_row[k].clone();
    }
    let right = m.into_iter().map(|row| row[n..].to_vec()).collect();
    Some((prev, right, odd_swaps))
}

/// Exact determinant.
pub fn determinant(m: &RatMatrix) -> RatFun {
    let n = m.len();
    if n == 0 {
        return RatFun::one();
    }
    let (cleared, joint) = clear_denominators(m);
    let factors: Vec<(Poly, u32)> = joint.into_iter().map(|(p, e)| (p, e * n as u32)).collect();
    match bareiss_gauss_jordan(cleared) {
        None => RatFun::zero(),
        Some((d, _, odd)) => {
            let d = if odd { -d } else { d };
            RatFun::new(d, factors)
        }
    }
}

/// Exact inverse, or `None` when the matrix is singular.
pub fn invert(m: &RatMatrix) -> Option<RatMatrix> {
    let (cleared, joint) = clear_denominators(m);
    let (d, right, _) = bareiss_gauss_jordan(cleared)?;
    let mut scale = Poly::one();
    for (p, e) in &joint {
        scale = &scale * &p.pow(*e);
    }
    Some(
        right
            .into_iter()
            .map(|row| row.into_iter().map(|b| RatFun::new(&scale * &b, [(d.clone(), 1)]).cancel()).collect())
            .collect(),
    )
}
