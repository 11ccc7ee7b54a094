//! Exterior algebra over rational functions.
//!
//! Generators are labelled by variables: the generator `d(v)` is stored as
//! `v` itself. Words are strictly increasing lists of generators.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::Poly;
use super::ratfun::RatFun;
use super::var::Var;
use super::Rational;

use num_traits::One;

pub type Word = Vec<Var>;

/// Denominator of one summand: monic factors with multiplicities.
type Denominator = BTreeMap<Poly, u32>;

/// A form `Σ_w c_w · dw`. Each coefficient is kept as a sum of fractions
/// grouped by denominator, so that adding forms never expands numerators;
/// a common denominator is only formed when coefficients are compared.
#[derive(Clone, Debug, Default)]
pub struct ExtForm {
    terms: BTreeMap<Word, BTreeMap<Denominator, Poly>>,
}

/// Sign of the permutation sorting `a ++ b`, or `None` if a generator repeats.
fn merge_sign(a: &[Var], b: &[Var]) -> Option<(Word, bool)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut odd = false;
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            // b[j] jumps over the remaining a.len() - i generators of a
            if (a.len() - i) % 2 == 1 {
                odd = !odd;
            }
            out.push(b[j].clone());
            j += 1;
        } else {
            return None;
        }
    }
    Some((out, odd))
}

impl ExtForm {
    pub fn zero() -> ExtForm {
        ExtForm::default()
    }

    /// A degree-zero form.
    pub fn scalar(f: RatFun) -> ExtForm {
        ExtForm::term(Vec::new(), f)
    }

    /// The generator `d(v)` with coefficient one.
    pub fn generator(v: Var) -> ExtForm {
        ExtForm::term(vec![v], RatFun::one())
    }

    /// `f · w` where `w` is given in any order; the word is sorted with sign.
    pub fn term(word: Word, f: RatFun) -> ExtForm {
        let mut out = ExtForm::zero();
        let mut acc: Word = Vec::new();
        let mut odd = false;
        for g in word {
            match merge_sign(&acc, &[g]) {
                Some((w, s)) => {
                    acc = w;
                    odd ^= s;
                }
                None => return out,
            }
        }
        let f = if odd { -&f } else { f };
        out.add_term(acc, f);
        out
    }

    fn add_term(&mut self, w: Word, f: RatFun) {
        if f.is_zero() {
            return;
        }
        let (numer, denom) = f.into_parts();
        let buckets = self.terms.entry(w.clone()).or_default();
        match buckets.remove(&denom) {
            Some(n) => {
                let sum = &n + &numer;
                if !sum.is_zero() {
                    buckets.insert(denom, sum);
                }
            }
            None => {
                buckets.insert(denom, numer);
            }
        }
        if buckets.is_empty() {
            self.terms.remove(&w);
        }
    }

    /// Summands `(word, fraction)`. A word appears once per distinct
    /// denominator in its coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, RatFun)> + '_ {
        self.terms
            .iter()
            .flat_map(|(w, b)| b.iter().map(move |(d, n)| (w, RatFun::from_parts(n.clone(), d.clone()))))
    }

    /// Words whose coefficient is not identically zero.
    pub fn support(&self) -> Vec<Word> {
        self.terms.keys().filter(|w| !self.coefficient(w).is_zero()).cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.keys().all(|w| self.coefficient(w).is_zero())
    }

    /// Degree of a homogeneous form, `None` for zero or mixed degree.
    pub fn degree(&self) -> Option<usize> {
        let support = self.support();
        let mut it = support.iter().map(Vec::len);
        let d = it.next()?;
        if it.all(|e| e == d) {
            Some(d)
        } else {
            None
        }
    }

    /// The full coefficient of a sorted word over a common denominator.
    pub fn coefficient(&self, w: &[Var]) -> RatFun {
        let mut acc = RatFun::zero();
        if let Some(b) = self.terms.get(w) {
            for (d, n) in b {
                acc = &acc + &RatFun::from_parts(n.clone(), d.clone());
            }
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> ExtForm {
        let terms = self
            .terms
            .iter()
            .map(|(w, b)| (w.clone(), b.iter().map(|(d, n)| (d.clone(), n.scale(c))).collect()))
            .collect();
        ExtForm { terms }
    }

    pub fn mul_scalar(&self, f: &RatFun) -> ExtForm {
        let mut out = ExtForm::zero();
        for (w, g) in self.terms() {
            out.add_term(w.clone(), &g * f);
        }
        out
    }

    pub fn mul_poly(&self, p: &Poly) -> ExtForm {
        self.mul_scalar(&RatFun::from_poly(p.clone()))
    }

    /// Koszul-signed exterior product.
    pub fn wedge(&self, other: &ExtForm) -> ExtForm {
        let mut out = ExtForm::zero();
        let rhs: Vec<(&Word, RatFun)> = other.terms().collect();
        for (wa, fa) in self.terms() {
            for (wb, fb) in &rhs {
                if let Some((w, odd)) = merge_sign(wa, wb) {
                    let f = &fa * fb;
                    out.add_term(w, if odd { -&f } else { f });
                }
            }
        }
        out
    }

    /// Applies an additive map to every coefficient, leaving words
    /// untouched. It is applied summand by summand.
    pub fn map_coefficients<F: Fn(&RatFun) -> RatFun>(&self, op: F) -> ExtForm {
        let mut out = ExtForm::zero();
        for (w, f) in self.terms() {
            out.add_term(w.clone(), op(&f));
        }
        out
    }

    /// The de Rham-type differential in the variables selected by `pred`:
    /// `d(f · w) = Σ_v ∂_v f · d(v) ∧ w`.
    pub fn differential<P: Fn(&Var) -> bool>(&self, pred: P) -> ExtForm {
        let mut out = ExtForm::zero();
        for (w, f) in self.terms() {
            let mut vars = f.numer().variables();
            for factor in f.factors().keys() {
                vars.extend(factor.variables());
            }
            for v in vars.into_iter().filter(|v| pred(v)) {
                let df = f.partial_derivative(&v);
                if df.is_zero() {
                    continue;
                }
                if let Some((word, odd)) = merge_sign(&[v], w) {
                    out.add_term(word, if odd { -&df } else { df });
                }
            }
        }
        out
    }

    /// Removes tracked denominator factors dividing each numerator.
    pub fn cancel(&self) -> ExtForm {
        let mut out = ExtForm::zero();
        for (w, f) in self.terms() {
            out.add_term(w.clone(), f.cancel());
        }
        out
    }

    /// Number of numerator monomials over all summands.
    pub fn numerator_term_count(&self) -> usize {
        self.terms.values().flat_map(|b| b.values()).map(Poly::len).sum()
    }

    /// The first word on which `self` and `other` differ, with the numerator
    /// of the difference there.
    pub fn first_difference(&self, other: &ExtForm) -> Option<(Word, Poly)> {
        let words: std::collections::BTreeSet<&Word> = self.terms.keys().chain(other.terms.keys()).collect();
        for w in words {
            let d = self.coefficient(w).difference_numer(&other.coefficient(w));
            if !d.is_zero() {
                return Some((w.clone(), d));
            }
        }
        None
    }
}

impl PartialEq for ExtForm {
    fn eq(&self, other: &ExtForm) -> bool {
        self.first_difference(other).is_none()
    }
}

impl Add<&ExtForm> for &ExtForm {
    type Output = ExtForm;
    fn add(self, rhs: &ExtForm) -> ExtForm {
        let mut out = self.clone();
        for (w, f) in rhs.terms() {
            out.add_term(w.clone(), f);
        }
        out
    }
}

impl Sub<&ExtForm> for &ExtForm {
    type Output = ExtForm;
    fn sub(self, rhs: &ExtForm) -> ExtForm {
        self + &(-rhs)
    }
}

impl Neg for &ExtForm {
    type Output = ExtForm;
    fn neg(self) -> ExtForm {
        self.scale(&-Rational::one())
    }
}

impl Mul<&ExtForm> for &ExtForm {
    type Output = ExtForm;
    fn mul(self, rhs: &ExtForm) -> ExtForm {
        self.wedge(rhs)
    }
}

impl fmt::Display for ExtForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{c}]")?;
            for g in w {
                write!(f, "*d{g}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: &str, s: u8) -> ExtForm {
        ExtForm::generator(Var::zbar(v, s))
    }

    #[test]
    fn repeated_generator_vanishes() {
        assert!(g("1", 1).wedge(&g("1", 1)).is_zero());
    }

    #[test]
    fn degree_one_anticommute() {
        let a = g("1", 1).wedge(&g("1", 2));
        let b = g("1", 2).wedge(&g("1", 1));
        assert_eq!(a, -&b);
        assert!(!a.is_zero());
    }

    #[test]
    fn bilinear_product() {
        let f = RatFun::from_poly(Poly::var(Var::aux("f")));
        let h = RatFun::from_poly(Poly::var(Var::aux("h")));
        let a = g("1", 1).mul_scalar(&f);
        let b = g("2", 1).mul_scalar(&h);
        let expect = ExtForm::term(vec![Var::zbar("1", 1), Var::zbar("2", 1)], &f * &h);
        assert_eq!(a.wedge(&b), expect);
    }

    #[test]
    fn unsorted_word_gets_sign() {
        let t = ExtForm::term(vec![Var::zbar("2", 1), Var::zbar("1", 1)], RatFun::one());
        assert_eq!(t, -&g("1", 1).wedge(&g("2", 1)));
    }
}
