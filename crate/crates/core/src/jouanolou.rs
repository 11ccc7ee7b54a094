//! The Jouanolou algebra in dimension two, realized inside rational forms
//! through `x_ij^s ↦ (z̄_i^s − z̄_j^s)/Q_ij` and `dx ↦ ∂̄x`, with
//! `Q_ij = Σ_s (z_i^s − z_j^s)(z̄_i^s − z̄_j^s)`.
//!
//! Antiholomorphic coordinates are independent formal variables, so every
//! identity reduces to equality of rational functions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exactalg::{factorial, ExtForm, Poly, RatFun, Rational, Var};
use crate::{Error, Result};

/// Dimension of the configuration space coordinates.
pub const DIM: u8 = 2;

/// An element of the embedded Jouanolou algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct JouElement(ExtForm);

impl JouElement {
    pub fn zero() -> JouElement {
        JouElement(ExtForm::zero())
    }

    pub fn one() -> JouElement {
        JouElement::scalar(RatFun::one())
    }

    pub fn scalar(f: RatFun) -> JouElement {
        JouElement(ExtForm::scalar(f))
    }

    pub fn poly(p: Poly) -> JouElement {
        JouElement::scalar(RatFun::from_poly(p))
    }

    pub fn form(&self) -> &ExtForm {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    pub fn scale(&self, c: &Rational) -> JouElement {
        JouElement(self.0.scale(c))
    }

    pub fn term_count(&self) -> usize {
        self.0.numerator_term_count()
    }
}

impl fmt::Display for JouElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Add<&JouElement> for &JouElement {
    type Output = JouElement;
    fn add(self, rhs: &JouElement) -> JouElement {
        JouElement(&self.0 + &rhs.0)
    }
}

impl Sub<&JouElement> for &JouElement {
    type Output = JouElement;
    fn sub(self, rhs: &JouElement) -> JouElement {
        JouElement(&self.0 - &rhs.0)
    }
}

impl Mul<&JouElement> for &JouElement {
    type Output = JouElement;
    fn mul(self, rhs: &JouElement) -> JouElement {
        JouElement(self.0.wedge(&rhs.0))
    }
}

impl Neg for &JouElement {
    type Output = JouElement;
    fn neg(self) -> JouElement {
        JouElement(-&self.0)
    }
}

// ============================================================================
// Generators
// ============================================================================

/// `Q_ij = Σ_s (z_i^s − z_j^s)(z̄_i^s − z̄_j^s)`.
pub fn q_norm(i: &str, j: &str) -> Poly {
    let mut q = Poly::zero();
    for s in 1..=DIM {
        let dz = &Poly::var(Var::z(i, s)) - &Poly::var(Var::z(j, s));
        let dzb = &Poly::var(Var::zbar(i, s)) - &Poly::var(Var::zbar(j, s));
        q += &dz * &dzb;
    }
    q
}

/// The coordinate `z_i^s` as a function.
pub fn z(i: &str, s: u8) -> JouElement {
    JouElement::poly(Poly::var(Var::z(i, s)))
}

/// The coordinate `z̄_i^s` as a function.
pub fn zbar(i: &str, s: u8) -> JouElement {
    JouElement::poly(Poly::var(Var::zbar(i, s)))
}

fn distinct(i: &str, j: &str) -> Result<()> {
    if i == j {
        Err(Error::SelfLoop(i.to_string()))
    } else {
        Ok(())
    }
}

/// Image of `x_ij^s`.
pub fn gen_x(i: &str, j: &str, s: u8) -> Result<JouElement> {
    distinct(i, j)?;
    let num = &Poly::var(Var::zbar(i, s)) - &Poly::var(Var::zbar(j, s));
    Ok(JouElement::scalar(RatFun::new(num, [(q_norm(i, j), 1)])))
}

/// Image of `dx_ij^s`.
pub fn gen_dx(i: &str, j: &str, s: u8) -> Result<JouElement> {
    Ok(dbar(&gen_x(i, j, s)?))
}

/// The Dolbeault differential: `z̄ ↦ dz̄`, `z ↦ 0`, extended by the graded
/// Leibniz rule.
pub fn dbar(a: &JouElement) -> JouElement {
    JouElement(a.0.differential(Var::is_zbar).cancel())
}

/// The holomorphic derivative `∂/∂z_i^t`, applied coefficientwise.
pub fn d_action(a: &JouElement, i: &str, t: u8) -> JouElement {
    let v = Var::z(i, t);
    JouElement(a.0.map_coefficients(|f| f.partial_derivative(&v)))
}

/// `P_ij = x¹ dx² − x² dx¹`.
pub fn propagator(i: &str, j: &str) -> Result<JouElement> {
    let a = &gen_x(i, j, 1)? * &gen_dx(i, j, 2)?;
    let b = &gen_x(i, j, 2)? * &gen_dx(i, j, 1)?;
    Ok(JouElement((&a - &b).0.cancel()))
}

/// The scalar `x_ij ∧ x_kl = x_ij¹ x_kl² − x_ij² x_kl¹`.
pub fn x_wedge(ij: (&str, &str), kl: (&str, &str)) -> Result<JouElement> {
    let a = &gen_x(ij.0, ij.1, 1)? * &gen_x(kl.0, kl.1, 2)?;
    let b = &gen_x(ij.0, ij.1, 2)? * &gen_x(kl.0, kl.1, 1)?;
    Ok(&a - &b)
}

/// The defining relations `Σ_s x^s(z_i^s − z_j^s) − 1` and
/// `Σ_s dx^s(z_i^s − z_j^s)`; both vanish in the embedding.
pub fn defining_relations(i: &str, j: &str) -> Result<(JouElement, JouElement)> {
    let mut first = -&JouElement::one();
    let mut second = JouElement::zero();
    for s in 1..=DIM {
        let diff = &z(i, s) - &z(j, s);
        first = &first + &(&gen_x(i, j, s)? * &diff);
        second = &second + &(&gen_dx(i, j, s)? * &diff);
    }
    Ok((first, second))
}

// ============================================================================
// Certificates
// ============================================================================

/// Outcome of an identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub name: String,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    /// A word and the numerator of the difference there, when the sides
    /// disagree.
    pub counterexample: Option<String>,
}

impl Certificate {
    fn compare(name: &str, lhs: &JouElement, rhs: &JouElement) -> Certificate {
        let counterexample = lhs.0.first_difference(&rhs.0).map(|(word, diff)| {
            let gens: Vec<String> = word.iter().map(|g| format!("d{g}")).collect();
            let lead = diff.leading_term().map(|(m, c)| format!("{c}*{m}")).unwrap_or_default();
            format!("word [{}]: difference numerator leading term {lead}", gens.join(","))
        });
        Certificate {
            name: name.to_string(),
            lhs_terms: lhs.term_count(),
            rhs_terms: rhs.term_count(),
            counterexample,
        }
    }

    fn merge(name: &str, parts: Vec<Certificate>) -> Certificate {
        Certificate {
            name: name.to_string(),
            lhs_terms: parts.iter().map(|c| c.lhs_terms).sum(),
            rhs_terms: parts.iter().map(|c| c.rhs_terms).sum(),
            counterexample: parts.into_iter().find_map(|c| c.counterexample.map(|s| format!("{}: {s}", c.name))),
        }
    }

    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "OK {} (lhs terms {}, rhs terms {})", self.name, self.lhs_terms, self.rhs_terms),
            Some(c) => write!(f, "MISMATCH {}: {c}", self.name),
        }
    }
}

/// The Arnold relation for odd propagators:
/// `P12P13 − P12P23 + P13P23 = d(P13·x12∧x23 + P12·x13∧x23 + P23·x12∧x13)`.
///
/// Since each `P` is a 1-form, the left side is the cyclic sum
/// `−(P12P23 + P23P31 + P31P12)`.
pub fn verify_arnold() -> Certificate {
    let (p12, p13, p23) = three_propagators();
    let lhs = &(&(&p12 * &p13) - &(&p12 * &p23)) + &(&p13 * &p23);
    let w12_23 = x_wedge(("1", "2"), ("2", "3")).expect("distinct");
    let w13_23 = x_wedge(("1", "3"), ("2", "3")).expect("distinct");
    let w12_13 = x_wedge(("1", "2"), ("1", "3")).expect("distinct");
    let inner = &(&(&p13 * &w12_23) + &(&p12 * &w13_23)) + &(&p23 * &w12_13);
    Certificate::compare("arnold", &lhs, &dbar(&inner))
}

/// `P12P13P23 = −d(P23P13·x12∧x23 + P23P12·x13∧x23)`, which is the Arnold
/// relation multiplied on the left by the closed odd form `P23`.
pub fn verify_arnold_corollary() -> Certificate {
    let (p12, p13, p23) = three_propagators();
    let lhs = &(&p12 * &p13) * &p23;
    let w12_23 = x_wedge(("1", "2"), ("2", "3")).expect("distinct");
    let w13_23 = x_wedge(("1", "3"), ("2", "3")).expect("distinct");
    let inner = &(&(&p23 * &p13) * &w12_23) + &(&(&p23 * &p12) * &w13_23);
    Certificate::compare("arnold-cor", &lhs, &-&dbar(&inner))
}

/// With two vertices there is a single propagator and the only quadratic
/// relation is `P12·P12 = 0`.
pub fn verify_arnold_two_vertices() -> Certificate {
    let p = propagator("1", "2").expect("distinct");
    Certificate::compare("arnold-2", &(&p * &p), &JouElement::zero())
}

fn three_propagators() -> (JouElement, JouElement, JouElement) {
    (
        propagator("1", "2").expect("distinct"),
        propagator("1", "3").expect("distinct"),
        propagator("2", "3").expect("distinct"),
    )
}

/// `∂_{z_1^t} x_12^s = −x_12^t x_12^s` for every pair `(t, s)`.
pub fn verify_d_action_rule() -> Certificate {
    let mut parts = Vec::new();
    for t in 1..=DIM {
        for s in 1..=DIM {
            let x = gen_x("1", "2", s).expect("distinct");
            let rhs = -&(&gen_x("1", "2", t).expect("distinct") * &x);
            parts.push(Certificate::compare(&format!("t={t} s={s}"), &d_action(&x, "1", t), &rhs));
        }
    }
    Certificate::merge("d-action", parts)
}

/// `∂_{z_i^t}` commutes with `∂̄` on each element, for every vertex that
/// occurs in it and every component.
pub fn verify_dbar_commutes(elements: &[JouElement], vertices: &[&str]) -> Certificate {
    let mut parts = Vec::new();
    for (k, a) in elements.iter().enumerate() {
        for i in vertices {
            for t in 1..=DIM {
                let lhs = d_action(&dbar(a), i, t);
                let rhs = dbar(&d_action(a, i, t));
                parts.push(Certificate::compare(&format!("element {k} z_{i}^{t}"), &lhs, &rhs));
            }
        }
    }
    Certificate::merge("dbar-commutes", parts)
}

/// Coefficient of `(𝔷¹)^r (𝔷²)^s` in the power series `Σ_k c_k u^k` with
/// `u = −(x12|𝔷)`, for all `r + s ≤ n`.
fn geometric_coefficients(n: u32, weight: impl Fn(u32) -> Rational) -> BTreeMap<(u32, u32), JouElement> {
    let x1 = gen_x("1", "2", 1).expect("distinct");
    let x2 = gen_x("1", "2", 2).expect("distinct");
    // u^k as a map (r, s) ↦ coefficient, built by repeated multiplication.
    let mut power: BTreeMap<(u32, u32), JouElement> = BTreeMap::from([((0, 0), JouElement::one())]);
    let mut out: BTreeMap<(u32, u32), JouElement> = BTreeMap::new();
    let minus_one = Rational::from_integer((-1).into());
    for k in 0..=n {
        for (rs, c) in &power {
            out.insert(*rs, c.scale(&weight(k)));
        }
        let mut next: BTreeMap<(u32, u32), JouElement> = BTreeMap::new();
        for ((r, s), c) in &power {
            for (shift, x) in [((1, 0), &x1), ((0, 1), &x2)] {
                let key = (r + shift.0, s + shift.1);
                let term = (c * x).scale(&minus_one);
                let slot = next.entry(key).or_insert_with(JouElement::zero);
                *slot = &*slot + &term;
            }
        }
        power = next;
    }
    out
}

/// Taylor coefficients `(1/r!s!) ∂_{z_1¹}^r ∂_{z_1²}^s a` for `r + s ≤ n`.
fn taylor_coefficients(a: &JouElement, n: u32) -> BTreeMap<(u32, u32), JouElement> {
    let mut out = BTreeMap::new();
    let mut row = a.clone();
    for r in 0..=n {
        let mut cur = row.clone();
        for s in 0..=(n - r) {
            let norm = Rational::from_integer(1.into()) / (factorial(r) * factorial(s));
            out.insert((r, s), cur.scale(&norm));
            cur = d_action(&cur, "1", 2);
        }
        row = d_action(&row, "1", 1);
    }
    out
}

/// Checks `P12(𝔷) = P12/(1+(x12|𝔷))²` and `x12^σ(𝔷) = x12^σ/(1+(x12|𝔷))`
/// coefficient by coefficient up to total degree `n`.
pub fn generating_series_check(n: u32) -> Certificate {
    let mut parts = Vec::new();
    let p = propagator("1", "2").expect("distinct");
    let p_series = geometric_coefficients(n, |k| Rational::from_integer((k + 1).into()));
    let p_taylor = taylor_coefficients(&p, n);
    for (rs, c) in &p_series {
        let lhs = &p * c;
        parts.push(Certificate::compare(&format!("P12 coefficient {rs:?}"), &lhs, &p_taylor[rs]));
    }
    let x_series = geometric_coefficients(n, |_| Rational::from_integer(1.into()));
    for sigma in 1..=DIM {
        let x = gen_x("1", "2", sigma).expect("distinct");
        let taylor = taylor_coefficients(&x, n);
        for (rs, c) in &x_series {
            let lhs = &x * c;
            parts.push(Certificate::compare(&format!("x12^{sigma} coefficient {rs:?}"), &lhs, &taylor[rs]));
        }
    }
    Certificate::merge(&format!("genseries order {n}"), parts)
}
