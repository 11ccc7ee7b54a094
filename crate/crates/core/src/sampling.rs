//! Seeded random inputs shared by the test suites and the CLI.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::chiral::DmoduleSample;
use crate::exactalg::{rat, Poly, Var};
use crate::graphs::{DirectedGraph, Edge, EdgeWeights, Weight};
use crate::jouanolou::{gen_dx, gen_x, z, zbar, JouElement};
use crate::laman::{realize, HennebergSequence, IPrimeMove};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A connected multigraph on `n ≥ 1` vertices `"1".."n"` with `m ≥ n − 1`
/// edges: a random spanning tree plus random extra edges (parallel edges
/// allowed, no loops) with random orientations.
pub fn random_connected_graph(rng: &mut SampleRng, n: usize, m: usize) -> DirectedGraph {
    assert!(n >= 1 && m + 1 >= n && (n >= 2 || m == 0));
    let names: Vec<String> = (1..=n).map(|k| k.to_string()).collect();
    let mut pairs = Vec::with_capacity(m);
    for k in 1..n {
        pairs.push((k, rng.gen_range(0..k)));
    }
    while pairs.len() < m {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            pairs.push((a, b));
        }
    }
    pairs.shuffle(rng);
    let edges = pairs
        .into_iter()
        .enumerate()
        .map(|(k, (a, b))| {
            let (tail, head) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
            Edge { id: format!("e{}", k + 1), tail: names[tail].clone(), head: names[head].clone() }
        })
        .collect();
    DirectedGraph::new(names, edges).expect("generated graphs are valid")
}

/// Positive weights `p/q` with `1 ≤ p, q ≤ 9`.
pub fn random_positive_weights(rng: &mut SampleRng, g: &DirectedGraph) -> EdgeWeights {
    let map: BTreeMap<String, Weight> = g
        .edges()
        .iter()
        .map(|e| (e.id.clone(), Weight::Value(rat(rng.gen_range(1..=9), rng.gen_range(1..=9)))))
        .collect();
    EdgeWeights::new(g, map).expect("positive weights are valid")
}

/// A Type I′ sequence from base `(o, 1)` with `vertices ≥ 2` vertices in
/// total. Each move picks a uniformly random existing edge, written in a
/// random order.
pub fn random_iprime_sequence(rng: &mut SampleRng, vertices: usize) -> HennebergSequence {
    assert!(vertices >= 2);
    let mut seq = HennebergSequence::new("o", "1", &[]);
    for k in 2..vertices {
        let g = realize(&seq).expect("sequence stays valid");
        let edges: Vec<&(String, String)> = g.edges().iter().collect();
        let (a, b) = (*edges.choose(rng).expect("nonempty")).clone();
        let parent = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
        seq.moves.push(IPrimeMove { parent, new: k.to_string() });
    }
    seq
}

/// A sum of one or two terms. Each term is a small integer multiple of a
/// coordinate times one or two factors drawn from `x`, `dx` on a single
/// vertex pair among `1, 2, 3`; different terms may use different pairs.
pub fn random_jouanolou_element(rng: &mut SampleRng) -> JouElement {
    let pairs = [("1", "2"), ("1", "3"), ("2", "3")];
    let vertices = ["1", "2", "3"];
    let mut out = JouElement::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let c = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let v = *vertices.choose(rng).expect("nonempty");
        let s = rng.gen_range(1..=2u8);
        let coord = if rng.gen_bool(0.5) { z(v, s) } else { zbar(v, s) };
        let mut term = &JouElement::poly(Poly::int(c)) * &coord;
        let (i, j) = *pairs.choose(rng).expect("nonempty");
        for _ in 0..rng.gen_range(1..=2) {
            let s = rng.gen_range(1..=2u8);
            let factor = if rng.gen_bool(0.5) { gen_x(i, j, s) } else { gen_dx(i, j, s) };
            term = &term * &factor.expect("distinct");
        }
        out = &out + &term;
    }
    out
}

/// `g` of total degree at most three in `z₁, z₂` with coefficients in
/// `[−3, 3]`, and `n` in `1..=4`.
pub fn random_residue_sample(rng: &mut SampleRng) -> DmoduleSample {
    let mut g = Poly::zero();
    for a in 0..=3u32 {
        for b in 0..=(3 - a) {
            let c = rng.gen_range(-3..=3i64);
            if c != 0 {
                let m = &Poly::var(Var::z("1", 1)).pow(a) * &Poly::var(Var::z("2", 1)).pow(b);
                g += m.scale(&rat(c, 1));
            }
        }
    }
    DmoduleSample { g, n: rng.gen_range(1..=4) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laman::is_laman;

    #[test]
    fn seeds_are_reproducible() {
        let a = random_iprime_sequence(&mut rng(7), 6);
        let b = random_iprime_sequence(&mut rng(7), 6);
        assert_eq!(a, b);
        assert_eq!(random_residue_sample(&mut rng(3)), random_residue_sample(&mut rng(3)));
    }

    #[test]
    fn generated_objects_are_valid() {
        let mut r = rng(11);
        for n in 1..=5 {
            let m = if n == 1 { 0 } else { n + 1 };
            let g = random_connected_graph(&mut r, n, m);
            assert_eq!(g.edges().len(), m);
            assert!(g.is_connected());
        }
        let seq = random_iprime_sequence(&mut r, 7);
        assert_eq!(seq.vertex_count(), 7);
        assert!(is_laman(&realize(&seq).unwrap()).unwrap().is_laman());
        let g = random_connected_graph(&mut r, 3, 4);
        let w = random_positive_weights(&mut r, &g);
        for e in g.edges() {
            assert!(w.poly(&e.id).as_constant().is_some_and(|c| c > rat(0, 1)));
        }
        let nonzero = (0..10).filter(|_| !random_jouanolou_element(&mut r).is_zero()).count();
        assert!(nonzero >= 5, "only {nonzero} nonzero samples");
    }
}
