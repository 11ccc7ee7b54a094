use std::collections::BTreeMap;

use proptest::prelude::*;

use lamanchiral::chiral::{SignConvention, WeightState};
use lamanchiral::exactalg::{rat, ExtForm, Monomial, Poly, RatFun, Rational, Var};
use lamanchiral::laman::{find_type1prime_sequence, is_laman, realize, HennebergSequence};
use lamanchiral::sampling;

fn vars() -> Vec<Var> {
    vec![Var::lambda("1", 1), Var::lambda("1", 2), Var::BoxR(2), Var::BoxS(2)]
}

fn poly_strategy(max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::array::uniform4(0u32..3), -5i64..=5, 1i64..=3), 0..=max_terms).prop_map(|terms| {
        let vs = vars();
        Poly::from_terms(terms.into_iter().map(|(exps, n, d)| {
            let m = Monomial::from_pairs(vs.iter().cloned().zip(exps));
            (m, rat(n, d))
        }))
    })
}

fn point_strategy() -> impl Strategy<Value = BTreeMap<Var, Rational>> {
    prop::array::uniform4((-7i64..=7, 1i64..=4))
        .prop_map(|vals| vars().into_iter().zip(vals).map(|(v, (n, d))| (v, rat(n, d))).collect())
}

fn eval(p: &Poly, at: &BTreeMap<Var, Rational>) -> Rational {
    p.evaluate(at).as_constant().expect("all variables bound")
}

/// A denominator that never vanishes at the sample points: `x² + c` with `c > 0`.
fn safe_denominator(v: &Var, c: i64) -> Poly {
    &(&Poly::var(v.clone()) * &Poly::var(v.clone())) + &Poly::int(c)
}

fn box_monomial_integral(m: &Monomial) -> Rational {
    m.pairs().iter().fold(rat(1, 1), |acc, (v, e)| if v.is_box() { acc / Rational::from_integer((*e as i64 + 1).into()) } else { acc })
}

fn form_strategy(degree: usize) -> impl Strategy<Value = ExtForm> {
    let gens = vec![Var::z("1", 1), Var::z("1", 2), Var::zbar("1", 1), Var::zbar("2", 1), Var::zbar("2", 2)];
    prop::collection::vec((prop::sample::subsequence(gens, degree), poly_strategy(2)), 1..=3).prop_map(|terms| {
        terms.into_iter().fold(ExtForm::zero(), |acc, (w, p)| &acc + &ExtForm::term(w, RatFun::from_poly(p)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in poly_strategy(4), b in poly_strategy(4), c in poly_strategy(4)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &Poly::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn products_agree_with_pointwise_evaluation(a in poly_strategy(4), b in poly_strategy(4), at in point_strategy()) {
        prop_assert_eq!(eval(&(&a * &b), &at), eval(&a, &at) * eval(&b, &at));
        prop_assert_eq!(eval(&(&a + &b), &at), eval(&a, &at) + eval(&b, &at));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn staged_substitution_equals_composed(p in poly_strategy(4), f in poly_strategy(2), g in poly_strategy(2)) {
        let (l1, r) = (Var::lambda("1", 1), Var::BoxR(2));
        // First stage rewrites λ¹ in terms of everything; second rewrites r.
        let first: BTreeMap<Var, Poly> = [(l1.clone(), f.clone())].into();
        let second: BTreeMap<Var, Poly> = [(r.clone(), g.clone())].into();
        let staged = p.substitute(&first).substitute(&second);
        let composed: BTreeMap<Var, Poly> = [(l1, f.substitute(&second)), (r, g)].into();
        prop_assert_eq!(staged, p.substitute(&composed));
    }

    #[test]
    fn substitution_is_a_ring_map(p in poly_strategy(3), q in poly_strategy(3), f in poly_strategy(2)) {
        let map: BTreeMap<Var, Poly> = [(Var::BoxS(2), f)].into();
        prop_assert_eq!((&p * &q).substitute(&map), &p.substitute(&map) * &q.substitute(&map));
    }

    #[test]
    fn box_integration_matches_monomial_formula(p in poly_strategy(5)) {
        let boxes = [Var::BoxR(2), Var::BoxS(2)];
        let got = p.box_integrate(&boxes);
        // Oracle: integrate term by term, ∫₀¹ x^k dx = 1/(k+1).
        let mut expect = Poly::zero();
        for (m, c) in p.terms() {
            let (_, rest) = m.split(|v| v.is_box());
            expect += Poly::term(rest, c * box_monomial_integral(m));
        }
        prop_assert_eq!(got, expect);
    }

    #[test]
    fn box_integration_linear_and_multiplicative(a in poly_strategy(4), b in poly_strategy(4), c in -4i64..=4) {
        let rs = [Var::BoxR(2), Var::BoxS(2)];
        let lhs = (&a.scale(&rat(c, 1)) + &b).box_integrate(&rs);
        prop_assert_eq!(lhs, &a.box_integrate(&rs).scale(&rat(c, 1)) + &b.box_integrate(&rs));
        // Factors in disjoint box variables integrate independently.
        let shift: BTreeMap<Var, Poly> =
            [(Var::BoxR(2), Poly::var(Var::BoxR(3))), (Var::BoxS(2), Poly::var(Var::BoxS(3)))].into();
        let b3 = b.substitute(&shift);
        let all = [Var::BoxR(2), Var::BoxS(2), Var::BoxR(3), Var::BoxS(3)];
        let together = (&a * &b3).box_integrate(&all);
        prop_assert_eq!(together, &a.box_integrate(&all) * &b3.box_integrate(&all));
    }

    #[test]
    fn graded_commutativity(
        (da, db, a, b) in (0usize..=2, 0usize..=2)
            .prop_flat_map(|(da, db)| (Just(da), Just(db), form_strategy(da), form_strategy(db)))
    ) {
        let ab = a.wedge(&b);
        let ba = b.wedge(&a);
        if (da * db) % 2 == 1 {
            prop_assert_eq!(ab, -&ba);
        } else {
            prop_assert_eq!(ab, ba);
        }
    }

    #[test]
    fn wedge_is_associative(a in form_strategy(1), b in form_strategy(1), c in form_strategy(2)) {
        prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
    }

    #[test]
    fn ratfun_equivalent_representations(p in poly_strategy(3), q in poly_strategy(3), k in 1i64..=5, at in point_strategy()) {
        let den = safe_denominator(&Var::BoxR(2), k);
        let f = RatFun::new(p.clone(), [(den.clone(), 1)]);
        prop_assert_eq!(&f * &RatFun::from_poly(den.clone()), RatFun::from_poly(p.clone()));
        // Multiplying top and bottom by the same factor gives the same function.
        let g = RatFun::new(&p * &den, [(den.clone(), 2)]);
        prop_assert_eq!(&f, &g);
        prop_assert_eq!(f.cancel(), g.cancel());
        // Sums over a shared denominator, checked pointwise.
        let h = RatFun::new(q.clone(), [(den.clone(), 1)]);
        let sum = &f + &h;
        let expect = (eval(&p, &at) + eval(&q, &at)) / eval(&den, &at);
        prop_assert_eq!(sum.evaluate(&at), Some(expect));
    }

    #[test]
    fn ratfun_derivative_matches_quotient_rule(p in poly_strategy(3), k in 1i64..=5) {
        let x = Var::BoxS(2);
        let den = safe_denominator(&x, k);
        let f = RatFun::new(p.clone(), [(den.clone(), 1)]);
        let numer = &(&p.partial_derivative(&x) * &den) - &(&p * &den.partial_derivative(&x));
        let expect = RatFun::new(numer, [(den, 2)]);
        prop_assert_eq!(f.partial_derivative(&x), expect);
    }
}

fn prefix(seq: &HennebergSequence, len: usize) -> HennebergSequence {
    HennebergSequence { base: seq.base.clone(), moves: seq.moves[..len].to_vec() }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn every_prefix_is_laman(seed in any::<u64>(), n in 2usize..=9) {
        let seq = sampling::random_iprime_sequence(&mut sampling::rng(seed), n);
        for len in 0..=seq.moves.len() {
            let g = realize(&prefix(&seq, len)).unwrap();
            prop_assert_eq!(g.vertices().len(), len + 2);
            prop_assert_eq!(g.edges().len(), 2 * (len + 2) - 3);
            prop_assert!(is_laman(&g).unwrap().is_laman());
        }
    }

    #[test]
    fn search_rebuilds_the_graph(seed in any::<u64>(), n in 2usize..=8) {
        let seq = sampling::random_iprime_sequence(&mut sampling::rng(seed), n);
        let g = realize(&seq).unwrap();
        let (o, v) = (&seq.base.0, &seq.base.1);
        let found = find_type1prime_sequence(&g, o, (o, v)).unwrap();
        prop_assert_eq!(realize(&found).unwrap(), g);
    }

    #[test]
    fn momentum_holds_after_every_extend(seed in any::<u64>(), n in 2usize..=7) {
        let seq = sampling::random_iprime_sequence(&mut sampling::rng(seed), n);
        let mut st = WeightState::base_state(&seq.base.0, &seq.base.1, SignConvention::Displayed).unwrap();
        prop_assert!(st.momentum_violation().is_none());
        for m in &seq.moves {
            st = st.extend((&m.parent.0, &m.parent.1), &m.new).unwrap();
            prop_assert!(st.momentum_violation().is_none());
            prop_assert_eq!(st.edges().len(), 2 * (st.vertices().len() + 1) - 3);
        }
    }
}
