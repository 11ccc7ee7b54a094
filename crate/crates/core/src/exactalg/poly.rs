//! Sparse multivariate polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use rustc_hash::FxHashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::var::Var;
use super::Rational;

// ============================================================================
// Monomials
// ============================================================================

/// A power product of variables, stored as `(var, exponent)` pairs sorted by
/// the variable order with strictly positive exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Monomial {
        Monomial(vec![(v, 1)])
    }

    /// Builds a monomial from arbitrary pairs, merging repeats and dropping
    /// zero exponents.
    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Monomial {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|(_, e)| *e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, v: &Var) -> u32 {
        match self.0.binary_search_by(|(w, _)| w.cmp(v)) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0.clone(), a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `other / self` when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::new();
        let mut j = 0;
        let b = &other.0;
        for (v, e) in &self.0 {
            while j < b.len() && b[j].0 < *v {
                out.push(b[j].clone());
                j += 1;
            }
            if j == b.len() || b[j].0 != *v || b[j].1 < *e {
                return None;
            }
            if b[j].1 > *e {
                out.push((v.clone(), b[j].1 - e));
            }
            j += 1;
        }
        out.extend_from_slice(&b[j..]);
        Some(Monomial(out))
    }

    /// Splits into the part whose variables satisfy `pred` and the rest.
    pub fn split<F: Fn(&Var) -> bool>(&self, pred: F) -> (Monomial, Monomial) {
        let (a, b): (Vec<_>, Vec<_>) = self.0.iter().cloned().partition(|(v, _)| pred(v));
        (Monomial(a), Monomial(b))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic order: total degree first, then the exponent of
    /// the earliest variable decides.
    fn cmp(&self, other: &Self) -> Ordering {
        let d = self.degree().cmp(&other.degree());
        if d != Ordering::Equal {
            return d;
        }
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

// ============================================================================
// Polynomials
// ============================================================================

/// An exact polynomial. Terms are kept in a map keyed by monomial, so
/// iteration follows the graded lexicographic order and zero coefficients
/// never appear.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Poly {
        Poly::term(Monomial::one(), c)
    }

    pub fn int(n: i64) -> Poly {
        Poly::constant(Rational::from_integer(BigInt::from(n)))
    }

    pub fn var(v: Var) -> Poly {
        Poly::term(Monomial::var(v), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> Poly {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Returns the value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.0.iter().map(|(v, _)| v.clone())).collect()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Largest total degree in the variables selected by `pred`.
    pub fn degree_in<F: Fn(&Var) -> bool>(&self, pred: F) -> u32 {
        self.terms
            .keys()
            .map(|m| m.0.iter().filter(|(v, _)| pred(v)).map(|(_, e)| e).sum())
            .max()
            .unwrap_or(0)
    }

    /// Drops every term whose degree in the selected variables exceeds `n`.
    pub fn truncate<F: Fn(&Var) -> bool>(&self, pred: F, n: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0.iter().filter(|(v, _)| pred(v)).map(|(_, e)| e).sum::<u32>() <= n)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Product truncated to degree `n` in the selected variables.
    pub fn mul_truncated<F: Fn(&Var) -> bool>(&self, other: &Poly, pred: F, n: u32) -> Poly {
        let deg = |m: &Monomial| -> u32 { m.0.iter().filter(|(v, _)| pred(v)).map(|(_, e)| e).sum() };
        let rhs: Vec<(&Monomial, &Rational, u32)> = other.terms.iter().map(|(m, c)| (m, c, deg(m))).collect();
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            let da = deg(ma);
            if da > n {
                continue;
            }
            for (mb, cb, db) in &rhs {
                if da + db <= n {
                    out.add_term(ma.mul(mb), ca * *cb);
                }
            }
        }
        out
    }

    /// Simultaneous substitution. Variables absent from `map` are kept.
    pub fn substitute(&self, map: &BTreeMap<Var, Poly>) -> Poly {
        if map.is_empty() {
            return self.clone();
        }
        let mut powers: HashMap<(Var, u32), Poly> = HashMap::new();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (mapped, kept) = m.split(|v| map.contains_key(v));
            let mut factor = Poly::term(kept, c.clone());
            for (v, e) in mapped.0 {
                let key = (v, e);
                if !powers.contains_key(&key) {
                    let p = map[&key.0].pow(e);
                    powers.insert(key.clone(), p);
                }
                factor = &factor * &powers[&key];
                if factor.is_zero() {
                    break;
                }
            }
            out += factor;
        }
        out
    }

    /// Substitutes rational values for some variables.
    pub fn evaluate(&self, values: &BTreeMap<Var, Rational>) -> Poly {
        let map = values.iter().map(|(v, r)| (v.clone(), Poly::constant(r.clone()))).collect();
        self.substitute(&map)
    }

    pub fn partial_derivative(&self, v: &Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let pairs = m.0.iter().map(|(w, k)| (w.clone(), if w == v { k - 1 } else { *k }));
            out.add_term(Monomial::from_pairs(pairs), c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Integrates every listed variable over `[0, 1]`.
    pub fn box_integrate(&self, vars: &[Var]) -> Poly {
        let set: BTreeSet<&Var> = vars.iter().collect();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut denom = BigInt::one();
            let mut kept = Vec::with_capacity(m.0.len());
            for (v, e) in &m.0 {
                if set.contains(v) {
                    denom *= BigInt::from(*e + 1);
                } else {
                    kept.push((v.clone(), *e));
                }
            }
            out.add_term(Monomial(kept), c / Rational::from_integer(denom));
        }
        out
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (lm, lc) = d.leading_term()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&(Rational::one() / c)));
        }
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = lm.divides(rm)?;
            let qc = rc / &lc;
            rem -= d.mul_monomial(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Multiplies by a positive integer so that every coefficient is integral
    /// and the leading coefficient is positive; returns the scale factor used.
    pub fn primitive_scale(&self) -> Rational {
        let mut l = BigInt::one();
        for c in self.terms.values() {
            l = num_integer::lcm(l, c.denom().clone());
        }
        let sign = match self.leading_term() {
            Some((_, c)) if c.is_negative() => -BigInt::one(),
            _ => BigInt::one(),
        };
        Rational::from_integer(l * sign)
    }

    /// Serializes as a map from monomial text to coefficient text.
    pub fn to_json_map(&self) -> BTreeMap<String, String> {
        self.terms.iter().map(|(m, c)| (m.to_string(), c.to_string())).collect()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

// ============================================================================
// Operator impls
// ============================================================================

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign<Poly> for Poly {
    fn add_assign(&mut self, rhs: Poly) {
        if self.terms.len() < rhs.terms.len() {
            let lhs = std::mem::replace(self, rhs);
            for (m, c) in lhs.terms {
                self.add_term(m, c);
            }
        } else {
            for (m, c) in rhs.terms {
                self.add_term(m, c);
            }
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl SubAssign<Poly> for Poly {
    fn sub_assign(&mut self, rhs: Poly) {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += rhs;
        self
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= rhs;
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

/// Product of coefficients, skipping the gcd reduction when both are
/// integers.
fn mul_coeff(a: &Rational, b: &Rational) -> Rational {
    if a.is_integer() && b.is_integer() {
        Rational::from_integer(a.numer() * b.numer())
    } else {
        a * b
    }
}

fn add_coeff(acc: &mut Rational, c: Rational) {
    if acc.is_integer() && c.is_integer() {
        *acc = Rational::from_integer(acc.numer() + c.numer());
    } else {
        *acc += c;
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let (small, large) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut acc: FxHashMap<Monomial, Rational> = FxHashMap::default();
        acc.reserve(small.len() * large.len());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                let m = ma.mul(mb);
                let c = mul_coeff(ca, cb);
                match acc.get_mut(&m) {
                    Some(x) => add_coeff(x, c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Poly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Mul<&Rational> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Rational) -> Poly {
        self.scale(rhs)
    }
}

impl From<Var> for Poly {
    fn from(v: Var) -> Poly {
        Poly::var(v)
    }
}

impl From<i64> for Poly {
    fn from(n: i64) -> Poly {
        Poly::int(n)
    }
}

impl From<Rational> for Poly {
    fn from(r: Rational) -> Poly {
        Poly::constant(r)
    }
}

// ============================================================================
// Two-component pairings
// ============================================================================

/// A two-component vector of polynomials such as `λ_v = (λ_v¹, λ_v²)`.
pub type Vec2 = [Poly; 2];

/// `a¹b² − a²b¹`.
pub fn wedge2(a: &Vec2, b: &Vec2) -> Poly {
    &a[0] * &b[1] - &a[1] * &b[0]
}

/// `a¹b¹ + a²b²`.
pub fn dot2(a: &Vec2, b: &Vec2) -> Poly {
    &a[0] * &b[0] + &a[1] * &b[1]
}

pub fn lambda_vec(vertex: &str) -> Vec2 {
    [Poly::var(Var::lambda(vertex, 1)), Poly::var(Var::lambda(vertex, 2))]
}

pub fn zfrak_vec(tail: &str, head: &str) -> Vec2 {
    [Poly::var(Var::zfrak(tail, head, 1)), Poly::var(Var::zfrak(tail, head, 2))]
}

pub fn vec2_add(a: &Vec2, b: &Vec2) -> Vec2 {
    [&a[0] + &b[0], &a[1] + &b[1]]
}

pub fn vec2_scale(a: &Vec2, c: &Poly) -> Vec2 {
    [&a[0] * c, &a[1] * c]
}
