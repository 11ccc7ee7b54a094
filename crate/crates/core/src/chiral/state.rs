use std::collections::BTreeMap;

use crate::exactalg::{dot2, lambda_vec, vec2_add, vec2_scale, wedge2, zfrak_vec, Poly, Var, Vec2};
use crate::laman::HennebergSequence;
use crate::{Error, Result};

use super::SignConvention;

/// The pair `(W, G)` of the recursion together with the graph it lives on.
///
/// `f[v][e]` is the coefficient of `(λ_v | 𝔷_e)` in `W`, for every non-base
/// vertex `v` and oriented edge `e`. Edges keep their creation orientation:
/// the base edge points from `v` to `o` and every new vertex is the tail of
/// both of its edges.
///
/// `G` is stored as a list of factors. The substitution `λ ↦ λ^▷` is a ring
/// map, so it is applied to each factor and the product is only expanded by
/// [`WeightState::g`].
#[derive(Clone, Debug, PartialEq)]
pub struct WeightState {
    base: String,
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
    f: Vec<Vec<Poly>>,
    g_factors: Vec<Poly>,
    moves_used: u32,
    convention: SignConvention,
}

impl WeightState {
    /// One edge `v → o` with `f_{v,(v,o)} = −1` and `G = 1`.
    pub fn base_state(o: &str, v: &str, convention: SignConvention) -> Result<WeightState> {
        if o == v {
            return Err(Error::DuplicateVertex(v.to_string()));
        }
        Ok(WeightState {
            base: o.to_string(),
            vertices: vec![v.to_string()],
            edges: vec![(v.to_string(), o.to_string())],
            f: vec![vec![Poly::int(-1)]],
            g_factors: Vec::new(),
            moves_used: 0,
            convention,
        })
    }

    /// Folds `extend` over a whole sequence.
    pub fn from_sequence(seq: &HennebergSequence, convention: SignConvention) -> Result<WeightState> {
        let mut st = WeightState::base_state(&seq.base.0, &seq.base.1, convention)?;
        for (index, m) in seq.moves.iter().enumerate() {
            st = st
                .extend((&m.parent.0, &m.parent.1), &m.new)
                .map_err(|e| Error::Move { index, source: Box::new(e) })?;
        }
        Ok(st)
    }

    pub fn base(&self) -> &str {
        &self.base
    }

    /// Non-base vertices in creation order.
    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    /// Oriented edges `(tail, head)` in creation order.
    pub fn edges(&self) -> &[(String, String)] {
        &self.edges
    }

    /// The expanded polynomial `G`.
    pub fn g(&self) -> Poly {
        self.g_factors.iter().fold(Poly::one(), |acc, f| &acc * f)
    }

    /// The factors whose product is `G`, one per move.
    pub fn g_factors(&self) -> &[Poly] {
        &self.g_factors
    }

    pub fn moves_used(&self) -> u32 {
        self.moves_used
    }

    pub fn convention(&self) -> SignConvention {
        self.convention
    }

    /// Coefficient `f_{v,e}`; a reversed orientation negates it.
    pub fn coefficient(&self, v: &str, tail: &str, head: &str) -> Option<Poly> {
        let row = self.vertices.iter().position(|w| w == v)?;
        if let Some(k) = self.edges.iter().position(|(t, h)| t == tail && h == head) {
            return Some(self.f[row][k].clone());
        }
        let k = self.edges.iter().position(|(t, h)| t == head && h == tail)?;
        Some(-&self.f[row][k])
    }

    /// Every box variable allocated so far.
    pub fn box_variables(&self) -> Vec<Var> {
        (0..self.moves_used).flat_map(|k| [Var::BoxR(k + 2), Var::BoxS(k + 2)]).collect()
    }

    /// `W = Σ_v Σ_e f_{v,e} (λ_v | 𝔷_e)`.
    pub fn w_poly(&self) -> Poly {
        let mut w = Poly::zero();
        for (row, v) in self.vertices.iter().enumerate() {
            let lam = lambda_vec(v);
            for (k, (t, h)) in self.edges.iter().enumerate() {
                if self.f[row][k].is_zero() {
                    continue;
                }
                w += &self.f[row][k] * &dot2(&lam, &zfrak_vec(t, h));
            }
        }
        w
    }

    fn has_vertex(&self, v: &str) -> bool {
        v == self.base || self.vertices.iter().any(|w| w == v)
    }

    /// One Henneberg I′ step of the recursion on the parent edge `{a, b}`
    /// with new vertex `star`.
    pub fn extend(&self, parent: (&str, &str), star: &str) -> Result<WeightState> {
        let (a, b) = parent;
        let k = self
            .edges
            .iter()
            .position(|(t, h)| (t == a && h == b) || (t == b && h == a))
            .ok_or_else(|| Error::MissingParentEdge(a.to_string(), b.to_string()))?;
        if self.has_vertex(star) {
            return Err(Error::DuplicateVertex(star.to_string()));
        }
        let (i, j) = self.edges[k].clone();
        let j_is_base = j == self.base;
        let index = self.moves_used + 2;
        let r = Poly::var(Var::BoxR(index));
        let s = Poly::var(Var::BoxS(index));
        let one_r = &Poly::one() - &r;
        let one_s = &Poly::one() - &s;

        // ∂_{𝔷_ij} W as a λ-vector, read before the update.
        let mut dw: Vec2 = [Poly::zero(), Poly::zero()];
        for (row, v) in self.vertices.iter().enumerate() {
            if !self.f[row][k].is_zero() {
                dw = vec2_add(&dw, &vec2_scale(&lambda_vec(v), &self.f[row][k]));
            }
        }

        let mut next = self.clone();
        next.edges.push((star.to_string(), j.clone()));
        next.edges.push((star.to_string(), i.clone()));
        let e_star_j = next.edges.len() - 2;
        let e_star_i = next.edges.len() - 1;
        for row in next.f.iter_mut() {
            let old = row[k].clone();
            row[k] = &r * &old;
            let moved = &one_r * &old;
            row.push(moved.clone());
            row.push(-moved);
        }

        // λ^▷: the new row collects (1−s)·row_i + s·row_j.
        let row_i = next.vertices.iter().position(|w| *w == i).expect("tail is never the base vertex");
        let mut new_row: Vec<Poly> = next.f[row_i].iter().map(|p| &one_s * p).collect();
        if !j_is_base {
            let row_j = next.vertices.iter().position(|w| *w == j).expect("known vertex");
            for (slot, p) in new_row.iter_mut().zip(&next.f[row_j]) {
                *slot += &s * p;
            }
        }
        new_row[e_star_i] -= &one_s;
        new_row[e_star_j] -= &s;
        next.vertices.push(star.to_string());
        next.f.push(new_row);

        // G ← (∂_{𝔷_ij}W ∧ λ_⋆) · r · G(λ^▷).
        let lam_star = lambda_vec(star);
        let mut map = BTreeMap::new();
        for c in 1..=2u8 {
            let idx = (c - 1) as usize;
            map.insert(Var::lambda(&i, c), &lambda_vec(&i)[idx] + &(&one_s * &lam_star[idx]));
            if !j_is_base {
                map.insert(Var::lambda(&j, c), &lambda_vec(&j)[idx] + &(&s * &lam_star[idx]));
            }
        }
        let mut factor = &wedge2(&dw, &lam_star) * &r;
        if self.moves_used == 0 && self.convention == SignConvention::Displayed {
            factor = -factor;
        }
        next.g_factors = self.g_factors.iter().map(|p| p.substitute(&map)).collect();
        next.g_factors.push(factor);
        next.moves_used += 1;
        Ok(next)
    }

    /// Checks `Σ_e ρ(v,e) f_{u,e} = −δ_{uv}` for all non-base `u, v`, where
    /// `ρ(v,e)` is `+1` at the tail and `−1` at the head. Returns the first
    /// failing pair.
    pub fn momentum_violation(&self) -> Option<(String, String, Poly)> {
        for (ru, u) in self.vertices.iter().enumerate() {
            for v in &self.vertices {
                let mut sum = Poly::zero();
                for (k, (t, h)) in self.edges.iter().enumerate() {
                    if t == v {
                        sum += &self.f[ru][k];
                    } else if h == v {
                        sum -= &self.f[ru][k];
                    }
                }
                let expect = if u == v { Poly::int(-1) } else { Poly::zero() };
                if sum != expect {
                    return Some((u.clone(), v.clone(), sum));
                }
            }
        }
        None
    }
}
