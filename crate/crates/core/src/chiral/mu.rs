use std::fmt;

use crate::exactalg::{factorial, rat, Poly};
use crate::laman::HennebergSequence;
use crate::{Error, Result};

use super::{SignConvention, WeightState};

/// Resource guards for the integration routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_order: u32,
    pub max_vertices: usize,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits { max_order: 6, max_vertices: 10 }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MuOptions {
    pub convention: SignConvention,
    pub limits: Limits,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MuMode {
    Constant,
    Truncated(u32),
}

/// An integrated chiral operation: a polynomial in the λ-components, and in
/// the 𝔷-components when truncated.
#[derive(Clone, Debug, PartialEq)]
pub struct MuResult {
    pub mode: MuMode,
    pub value: Poly,
}

impl fmt::Display for MuResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

fn build(seq: &HennebergSequence, opts: &MuOptions) -> Result<WeightState> {
    let n = seq.vertex_count();
    if n > opts.limits.max_vertices {
        return Err(Error::TooManyVertices { requested: n, limit: opts.limits.max_vertices });
    }
    WeightState::from_sequence(seq, opts.convention)
}

pub fn mu_constant(seq: &HennebergSequence) -> Result<MuResult> {
    mu_constant_with(seq, &MuOptions::default())
}

/// Sets 𝔷 = 0 and integrates `G` over every box parameter.
pub fn mu_constant_with(seq: &HennebergSequence, opts: &MuOptions) -> Result<MuResult> {
    let st = build(seq, opts)?;
    Ok(MuResult { mode: MuMode::Constant, value: st.g().box_integrate(&st.box_variables()) })
}

pub fn mu_truncated(seq: &HennebergSequence, n: u32) -> Result<MuResult> {
    mu_truncated_with(seq, n, &MuOptions::default())
}

/// `∫ Σ_{m ≤ N} W^m/m! · G` over the box. `W` is linear in 𝔷, so the
/// `m`-th summand is exactly the 𝔷-degree `m` part.
pub fn mu_truncated_with(seq: &HennebergSequence, n: u32, opts: &MuOptions) -> Result<MuResult> {
    if n > opts.limits.max_order {
        return Err(Error::TruncationTooLarge { requested: n, limit: opts.limits.max_order });
    }
    let st = build(seq, opts)?;
    let boxes = st.box_variables();
    let w = st.w_poly();
    let mut power = st.g();
    let mut total = power.box_integrate(&boxes);
    for m in 1..=n {
        power = &power * &w;
        let inv = rat(1, 1) / factorial(m);
        total += power.box_integrate(&boxes).scale(&inv);
    }
    Ok(MuResult { mode: MuMode::Truncated(n), value: total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{dot2, lambda_vec, wedge2, zfrak_vec, Var};

    fn triangle() -> HennebergSequence {
        HennebergSequence::new("o", "1", &[(("1", "o"), "2")])
    }

    #[test]
    fn triangle_constant() {
        let mu = mu_constant(&triangle()).unwrap();
        assert_eq!(mu.mode, MuMode::Constant);
        let expect = wedge2(&lambda_vec("1"), &lambda_vec("2")).scale(&rat(1, 2));
        assert_eq!(mu.value, expect);
        assert!(mu.value.variables().iter().all(Var::is_lambda));
    }

    #[test]
    fn single_edge_series() {
        let seq = HennebergSequence::new("o", "1", &[]);
        let x = -dot2(&lambda_vec("1"), &zfrak_vec("1", "o"));
        let mut expect = Poly::zero();
        for m in 0..=3u32 {
            expect += x.pow(m).scale(&(rat(1, 1) / factorial(m)));
        }
        assert_eq!(mu_truncated(&seq, 3).unwrap().value, expect);
    }

    #[test]
    fn order_zero_is_constant_term() {
        let seq = HennebergSequence::new("o", "1", &[(("1", "o"), "2"), (("2", "o"), "3")]);
        assert_eq!(mu_truncated(&seq, 0).unwrap().value, mu_constant(&seq).unwrap().value);
    }

    #[test]
    fn guards() {
        let seq = triangle();
        assert_eq!(mu_truncated(&seq, 7), Err(Error::TruncationTooLarge { requested: 7, limit: 6 }));
        let opts = MuOptions { limits: Limits { max_order: 6, max_vertices: 2 }, ..MuOptions::default() };
        assert_eq!(mu_constant_with(&seq, &opts), Err(Error::TooManyVertices { requested: 3, limit: 2 }));
    }
}
