//! Rational functions with factored denominators.
//!
//! A `RatFun` is a polynomial numerator over a product of tracked factors.
//! Factors are normalized to leading coefficient one and never merged by a
//! gcd computation; equality is decided by cross-multiplication.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::Poly;
use super::var::Var;
use super::Rational;

#[derive(Clone, Debug)]
pub struct RatFun {
    numer: Poly,
    factors: BTreeMap<Poly, u32>,
}

impl RatFun {
    pub fn zero() -> RatFun {
        RatFun::from_poly(Poly::zero())
    }

    pub fn one() -> RatFun {
        RatFun::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> RatFun {
        RatFun { numer: p, factors: BTreeMap::new() }
    }

    pub fn constant(c: Rational) -> RatFun {
        RatFun::from_poly(Poly::constant(c))
    }

    /// `numer / Π f^e`. Panics if some factor is the zero polynomial.
    pub fn new<I: IntoIterator<Item = (Poly, u32)>>(numer: Poly, factors: I) -> RatFun {
        let mut out = RatFun::from_poly(numer);
        for (f, e) in factors {
            out.push_factor(f, e);
        }
        out
    }

    fn push_factor(&mut self, f: Poly, e: u32) {
        assert!(!f.is_zero(), "zero denominator factor");
        if e == 0 {
            return;
        }
        let lc = f.leading_term().map(|(_, c)| c.clone()).expect("nonzero");
        let inv = Rational::one() / &lc;
        let mut scale = Rational::one();
        for _ in 0..e {
            scale *= &inv;
        }
        self.numer = self.numer.scale(&scale);
        if f.as_constant().is_some() {
            return;
        }
        let monic = f.scale(&inv);
        *self.factors.entry(monic).or_insert(0) += e;
    }

    /// Reassembles a fraction from a numerator and monic factors, as
    /// returned by [`RatFun::into_parts`].
    pub(crate) fn from_parts(numer: Poly, factors: BTreeMap<Poly, u32>) -> RatFun {
        if numer.is_zero() {
            return RatFun::zero();
        }
        RatFun { numer, factors }
    }

    pub(crate) fn into_parts(self) -> (Poly, BTreeMap<Poly, u32>) {
        (self.numer, self.factors)
    }

    pub fn numer(&self) -> &Poly {
        &self.numer
    }

    /// Denominator factors with multiplicities.
    pub fn factors(&self) -> &BTreeMap<Poly, u32> {
        &self.factors
    }

    /// The expanded denominator polynomial.
    pub fn denom(&self) -> Poly {
        let mut d = Poly::one();
        for (f, e) in &self.factors {
            d = &d * &f.pow(*e);
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        if self.factors.is_empty() {
            Some(&self.numer)
        } else {
            None
        }
    }

    fn lift_numer(&self, target: &BTreeMap<Poly, u32>) -> Poly {
        let mut n = self.numer.clone();
        for (f, e) in target {
            let have = self.factors.get(f).copied().unwrap_or(0);
            if *e > have {
                n = &n * &f.pow(e - have);
            }
        }
        n
    }

    fn joint(a: &BTreeMap<Poly, u32>, b: &BTreeMap<Poly, u32>) -> BTreeMap<Poly, u32> {
        let mut out = a.clone();
        for (f, e) in b {
            let slot = out.entry(f.clone()).or_insert(0);
            *slot = (*slot).max(*e);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> RatFun {
        RatFun { numer: self.numer.scale(c), factors: self.factors.clone() }
    }

    pub fn mul_poly(&self, p: &Poly) -> RatFun {
        RatFun { numer: &self.numer * p, factors: self.factors.clone() }
    }

    /// Divides by a nonzero polynomial, which becomes a tracked factor.
    pub fn div_poly(&self, p: &Poly) -> RatFun {
        let mut out = self.clone();
        out.push_factor(p.clone(), 1);
        out
    }

    /// `self / other`, or `None` if `other` is zero.
    pub fn div(&self, other: &RatFun) -> Option<RatFun> {
        if other.is_zero() {
            return None;
        }
        let mut out = RatFun { numer: &self.numer * &other.denom(), factors: self.factors.clone() };
        out.push_factor(other.numer.clone(), 1);
        Some(out)
    }

    /// Removes tracked factors that divide the numerator exactly.
    pub fn cancel(&self) -> RatFun {
        let mut numer = self.numer.clone();
        let mut factors = BTreeMap::new();
        for (f, e) in &self.factors {
            let mut left = *e;
            while left > 0 {
                match numer.div_exact(f) {
                    Some(q) => {
                        numer = q;
                        left -= 1;
                    }
                    None => break,
                }
            }
            if left > 0 {
                factors.insert(f.clone(), left);
            }
        }
        if numer.is_zero() {
            factors.clear();
        }
        RatFun { numer, factors }
    }

    pub fn partial_derivative(&self, v: &Var) -> RatFun {
        // d(n / Π f^e) = (n' Π f − n Σ e f' Π_{g≠f} g) / (Π f^{e+1})
        let dn = self.numer.partial_derivative(v);
        let moving: Vec<(&Poly, u32, Poly)> = self
            .factors
            .iter()
            .map(|(f, e)| (f, *e, f.partial_derivative(v)))
            .filter(|(_, _, df)| !df.is_zero())
            .collect();
        if moving.is_empty() {
            return RatFun { numer: dn, factors: self.factors.clone() };
        }
        let mut prod = Poly::one();
        for (f, _, _) in &moving {
            prod = &prod * *f;
        }
        let mut numer = &dn * &prod;
        for (k, (_, e, df)) in moving.iter().enumerate() {
            let mut others = Poly::one();
            for (m, (g, _, _)) in moving.iter().enumerate() {
                if m != k {
                    others = &others * *g;
                }
            }
            let term = &(&self.numer * df) * &others;
            numer -= term.scale(&Rational::from_integer((*e).into()));
        }
        let mut factors = self.factors.clone();
        for (f, _, _) in &moving {
            *factors.get_mut(*f).expect("present") += 1;
        }
        RatFun { numer, factors }
    }

    pub fn substitute(&self, map: &BTreeMap<Var, Poly>) -> RatFun {
        let mut out = RatFun::from_poly(self.numer.substitute(map));
        for (f, e) in &self.factors {
            out.push_factor(f.substitute(map), *e);
        }
        out
    }

    /// Evaluates at a point. Returns `None` when a denominator vanishes or a
    /// variable is left unassigned.
    pub fn evaluate(&self, values: &BTreeMap<Var, Rational>) -> Option<Rational> {
        let n = self.numer.evaluate(values).as_constant()?;
        let d = self.denom().evaluate(values).as_constant()?;
        if d.is_zero() {
            None
        } else {
            Some(n / d)
        }
    }

    /// The numerator of `self − other` over their joint denominator. Zero
    /// exactly when the two are equal.
    pub fn difference_numer(&self, other: &RatFun) -> Poly {
        let joint = RatFun::joint(&self.factors, &other.factors);
        self.lift_numer(&joint) - other.lift_numer(&joint)
    }
}

impl PartialEq for RatFun {
    fn eq(&self, other: &RatFun) -> bool {
        if self.factors == other.factors {
            return self.numer == other.numer;
        }
        self.difference_numer(other).is_zero()
    }
}

impl Eq for RatFun {}

impl From<Poly> for RatFun {
    fn from(p: Poly) -> RatFun {
        RatFun::from_poly(p)
    }
}

impl Add<&RatFun> for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.factors == rhs.factors {
            return RatFun { numer: &self.numer + &rhs.numer, factors: self.factors.clone() };
        }
        let joint = RatFun::joint(&self.factors, &rhs.factors);
        RatFun { numer: self.lift_numer(&joint) + rhs.lift_numer(&joint), factors: joint }
    }
}

impl Sub<&RatFun> for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { numer: -&self.numer, factors: self.factors.clone() }
    }
}

impl Mul<&RatFun> for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        let numer = &self.numer * &rhs.numer;
        if numer.is_zero() {
            return RatFun::zero();
        }
        let mut factors = self.factors.clone();
        for (f, e) in &rhs.factors {
            *factors.entry(f.clone()).or_insert(0) += e;
        }
        RatFun { numer, factors }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "{}", self.numer);
        }
        write!(f, "({})/(", self.numer)?;
        for (k, (p, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "({p})")?;
            } else {
                write!(f, "({p})^{e}")?;
            }
        }
        write!(f, ")")
    }
}
