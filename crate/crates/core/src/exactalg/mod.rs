//! Exact algebra: rationals, polynomials, rational functions and exterior
//! forms.

mod extform;
mod poly;
mod ratfun;
mod var;

pub use extform::{ExtForm, Word};
pub use poly::{dot2, lambda_vec, vec2_add, vec2_scale, wedge2, zfrak_vec, Monomial, Poly, Vec2};
pub use ratfun::RatFun;
pub use var::{Id, Var};

use num_bigint::BigInt;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand constructor for small rationals.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d == BigInt::from(0) {
        return None;
    }
    Some(Rational::new(n, d))
}

/// `n!` as a rational.
pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::from(1);
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from_integer(acc)
}

/// Binomial coefficient as a rational.
pub fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return rat(0, 1);
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_normalize() {
        let r = rat(6, -4);
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(rat(0, 5).to_string(), "0");
        assert_eq!(rat(4, 2).to_string(), "2");
        assert_eq!(parse_rational("3/2"), Some(rat(3, 2)));
        assert_eq!(parse_rational(" -4 "), Some(rat(-4, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("t"), None);
    }

    #[test]
    fn small_combinatorics() {
        assert_eq!(factorial(5), rat(120, 1));
        assert_eq!(binomial(5, 2), rat(10, 1));
    }
}
