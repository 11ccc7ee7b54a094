use crate::exactalg::{dot2, factorial, lambda_vec, rat, vec2_add, vec2_scale, wedge2, zfrak_vec, Poly};

/// Series expansion of the closed-form one-loop answer
///
/// `−λ₁∧λ₂ · e^{−(λ₂|𝔷_{2o})−(λ₁|𝔷_{1o})} · ∫_{l₁+l₂≤1} e^{−l₁ a + l₂ b}`,
///
/// with `a = (λ₁|𝔷)`, `b = (λ₂|𝔷)` and `𝔷 = 𝔷_{2o} − 𝔷_{21} − 𝔷_{1o}`,
/// truncated at total 𝔷-degree `n`. The simplex moments are
/// `∫ l₁^m l₂^k = m! k!/(m+k+2)!`.
pub fn triangle_oracle(n: u32) -> Poly {
    let (l1, l2) = (lambda_vec("1"), lambda_vec("2"));
    let minus = Poly::int(-1);
    let z = vec2_add(
        &vec2_add(&zfrak_vec("2", "o"), &vec2_scale(&zfrak_vec("2", "1"), &minus)),
        &vec2_scale(&zfrak_vec("1", "o"), &minus),
    );
    let a = dot2(&l1, &z);
    let b = dot2(&l2, &z);
    let x = -(&dot2(&l2, &zfrak_vec("2", "o")) + &dot2(&l1, &zfrak_vec("1", "o")));

    let mut prefactor = Poly::zero();
    for m in 0..=n {
        prefactor += x.pow(m).scale(&(rat(1, 1) / factorial(m)));
    }
    let mut simplex = Poly::zero();
    let neg_a = -&a;
    for m in 0..=n {
        for k in 0..=(n - m) {
            let c = rat(1, 1) / factorial(m + k + 2);
            simplex += (&neg_a.pow(m) * &b.pow(k)).scale(&c);
        }
    }
    let series = prefactor.mul_truncated(&simplex, |v| v.is_zfrak(), n);
    &series * &(-wedge2(&l1, &l2))
}
