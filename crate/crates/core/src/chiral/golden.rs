//! Named sequences and their reference polynomials.

use crate::exactalg::{lambda_vec, rat, vec2_add, vec2_scale, wedge2, Poly};
use crate::laman::HennebergSequence;

/// `λ_a ∧ λ_b`.
pub fn wedge_lambdas(a: &str, b: &str) -> Poly {
    wedge2(&lambda_vec(a), &lambda_vec(b))
}

pub fn triangle_sequence() -> HennebergSequence {
    HennebergSequence::new("o", "1", &[(("1", "o"), "2")])
}

pub fn theta_sequence() -> HennebergSequence {
    HennebergSequence::new("o", "1", &[(("1", "o"), "2"), (("2", "o"), "3")])
}

pub fn threeloop_sequence() -> HennebergSequence {
    HennebergSequence::new("o", "1", &[(("1", "o"), "2"), (("2", "o"), "3"), (("3", "o"), "4")])
}

/// Two orderings of the graph with vertices 2 and 3 both attached to the
/// edge `{1, o}`.
pub fn double_triangle_sequences() -> (HennebergSequence, HennebergSequence) {
    (
        HennebergSequence::new("o", "1", &[(("1", "o"), "2"), (("1", "o"), "3")]),
        HennebergSequence::new("o", "1", &[(("1", "o"), "3"), (("1", "o"), "2")]),
    )
}

/// `(1/24)(λ₁∧(λ₃+2λ₂))(λ₃∧(λ₁+2λ₂))`.
pub fn theta_golden() -> Poly {
    let two = Poly::int(2);
    let (l1, l2, l3) = (lambda_vec("1"), lambda_vec("2"), lambda_vec("3"));
    let a = wedge2(&l1, &vec2_add(&l3, &vec2_scale(&l2, &two)));
    let b = wedge2(&l3, &vec2_add(&l1, &vec2_scale(&l2, &two)));
    (&a * &b).scale(&rat(1, 24))
}

/// Coefficients of the three-loop polynomial as products of `[ab] = μ_a∧μ_b`.
/// Coefficient `num/den` and three λ-wedge index pairs.
type WedgeTerm = (i64, i64, [(u8, u8); 3]);

const THREELOOP_TERMS: [WedgeTerm; 28] = [
    (1, 864, [(1, 2), (1, 2), (1, 2)]),
    (1, 96, [(1, 3), (2, 3), (2, 3)]),
    (-1, 96, [(1, 4), (1, 4), (2, 3)]),
    (1, 96, [(1, 4), (2, 3), (2, 3)]),
    (-1, 96, [(1, 3), (2, 4), (2, 4)]),
    (-1, 96, [(1, 4), (1, 4), (2, 4)]),
    (1, 96, [(1, 3), (1, 3), (2, 4)]),
    (-1, 8, [(1, 3), (2, 4), (3, 4)]),
    (1, 48, [(1, 4), (2, 3), (2, 4)]),
    (-1, 48, [(1, 4), (2, 4), (3, 4)]),
    (-1, 96, [(1, 3), (2, 4), (1, 2)]),
    (-1, 48, [(1, 3), (2, 3), (3, 4)]),
    (1, 16, [(1, 4), (2, 3), (3, 4)]),
    (-1, 48, [(1, 3), (1, 4), (2, 4)]),
    (1, 48, [(1, 3), (2, 3), (2, 4)]),
    (1, 144, [(1, 3), (1, 4), (1, 2)]),
    (-1, 48, [(1, 3), (1, 4), (2, 3)]),
    (-1, 96, [(1, 3), (2, 3), (1, 2)]),
    (-1, 96, [(1, 4), (2, 3), (1, 2)]),
    (-1, 96, [(1, 4), (2, 4), (1, 2)]),
    (1, 144, [(2, 3), (2, 4), (1, 2)]),
    (-1, 288, [(2, 4), (1, 2), (1, 2)]),
    (7, 96, [(3, 4), (3, 4), (1, 2)]),
    (-1, 288, [(2, 3), (1, 2), (1, 2)]),
    (1, 288, [(1, 4), (1, 4), (1, 2)]),
    (1, 288, [(1, 2), (1, 2), (1, 4)]),
    (1, 288, [(1, 2), (1, 2), (1, 3)]),
    (1, 288, [(2, 3), (2, 3), (1, 2)]),
];

/// The reference polynomial for [`threeloop_sequence`]. Its formal
/// momenta `μ₁..μ₄` are the vertices `1, 4, 2, 3` of the sequence.
pub fn threeloop_golden() -> Poly {
    let label = |k: u8| match k {
        1 => "1",
        2 => "4",
        3 => "2",
        _ => "3",
    };
    let mut out = Poly::zero();
    for (num, den, factors) in THREELOOP_TERMS {
        let mut t = Poly::constant(rat(num, den));
        for (a, b) in factors {
            t = &t * &wedge_lambdas(label(a), label(b));
        }
        out += t;
    }
    out
}
