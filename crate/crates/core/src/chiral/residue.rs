use std::collections::BTreeMap;

use crate::exactalg::{factorial, rat, Poly, Var};
use crate::jouanolou::Certificate;
use crate::{Error, Result};

fn z1() -> Var {
    Var::z("1", 1)
}

fn z2() -> Var {
    Var::z("2", 1)
}

fn lambda1() -> Var {
    Var::lambda("1", 1)
}

/// Residue of `g(z₁, z₂)/(z₁ − z₂)^n` in one dimension:
/// `(1/(n−1)!)·((∂_{z₁} + λ₁)^{n−1} g)(z₁ = w, z₂ = w)`.
pub fn residue_d1(g: &Poly, n: u32) -> Result<Poly> {
    if n == 0 {
        return Err(Error::NonpositiveOrder);
    }
    let l1 = Poly::var(lambda1());
    let mut h = g.clone();
    for _ in 1..n {
        h = &h.partial_derivative(&z1()) + &(&l1 * &h);
    }
    let w = Poly::var(Var::W);
    let map: BTreeMap<Var, Poly> = [(z1(), w.clone()), (z2(), w)].into_iter().collect();
    Ok(h.substitute(&map).scale(&(rat(1, 1) / factorial(n - 1))))
}

/// One input `g/(z₁ − z₂)^n` for the D-module check.
#[derive(Clone, Debug, PartialEq)]
pub struct DmoduleSample {
    pub g: Poly,
    pub n: u32,
}

/// Checks that the residue intertwines the left action on the source with
/// the right action on the target, where `z` acts as `w + ∂_λ₁`, `λ₁` acts
/// by multiplication and `λ₂ = λ_⋆ − λ₁` with `λ_⋆` acting as `−∂_w`:
///
/// * `μ(z₁ g, n) = w μ + ∂_{λ₁} μ`
/// * `μ(z₂ g, n) = w μ`
/// * `μ(−∂₁ g, n) + n μ(g, n+1) = λ₁ μ`
/// * `μ(−∂₂ g, n) − n μ(g, n+1) = −∂_w μ − λ₁ μ`
pub fn residue_d1_dmodule_check(samples: &[DmoduleSample]) -> Result<Certificate> {
    let w = Poly::var(Var::W);
    let l1 = Poly::var(lambda1());
    let mut lhs_terms = 0;
    let mut rhs_terms = 0;
    let mut counterexample = None;
    for (idx, smp) in samples.iter().enumerate() {
        let (g, n) = (&smp.g, smp.n);
        let mu = residue_d1(g, n)?;
        let next = residue_d1(g, n + 1)?.scale(&rat(n as i64, 1));
        let rules: [(&str, Poly, Poly); 4] = [
            ("z1", residue_d1(&(&Poly::var(z1()) * g), n)?, &(&w * &mu) + &mu.partial_derivative(&lambda1())),
            ("z2", residue_d1(&(&Poly::var(z2()) * g), n)?, &w * &mu),
            ("lambda1", &residue_d1(&-g.partial_derivative(&z1()), n)? + &next, &l1 * &mu),
            (
                "lambda2",
                &residue_d1(&-g.partial_derivative(&z2()), n)? - &next,
                -(&mu.partial_derivative(&Var::W) + &(&l1 * &mu)),
            ),
        ];
        for (name, lhs, rhs) in rules {
            lhs_terms += lhs.len();
            rhs_terms += rhs.len();
            if counterexample.is_none() && lhs != rhs {
                counterexample = Some(format!("sample {idx} rule {name}: g = {g}, n = {n}: {lhs} != {rhs}"));
            }
        }
    }
    Ok(Certificate { name: "dmodule-d1".to_string(), lhs_terms, rhs_terms, counterexample })
}
