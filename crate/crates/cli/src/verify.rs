use std::collections::BTreeMap;

use clap::{Subcommand, ValueEnum};
use rand::Rng;

use lamanchiral::chiral::{
    mu_constant_with, mu_truncated_with, residue_d1, residue_d1_dmodule_check, theta_golden, theta_sequence,
    threeloop_golden, threeloop_sequence, triangle_oracle, triangle_sequence, wedge_lambdas, MuOptions,
    SignConvention, WeightState,
};
use lamanchiral::exactalg::{factorial, rat, Poly, Var};
use lamanchiral::graphs::{determinant, green_function, green_function_by_cuts, kirchhoff_det, weighted_laplacian, EdgeWeights};
use lamanchiral::jouanolou::{
    generating_series_check, verify_arnold, verify_arnold_corollary, verify_d_action_rule, verify_dbar_commutes,
    Certificate,
};
use lamanchiral::sampling::{self, SampleRng};

use crate::{Convention, Failure, Outcome};

const DEFAULT_SEED: u64 = 20240601;

#[derive(Clone, Copy, ValueEnum)]
pub enum Golden {
    Triangle,
    Theta,
    Threeloop,
    D1,
}

#[derive(Subcommand)]
pub enum Suite {
    /// The Arnold relation among three propagators.
    Arnold,
    /// Its cubic corollary.
    ArnoldCor,
    /// Generating series of the 𝔷-shifted propagator and x.
    Genseries {
        #[arg(long, default_value_t = 3)]
        order: u32,
    },
    /// Pinned polynomial values. The pins hold for the displayed convention.
    Golden {
        #[arg(value_enum)]
        which: Golden,
        #[arg(long, value_enum, default_value = "displayed")]
        convention: Convention,
    },
    /// D-module rules on seeded random elements.
    Dmodule {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Kirchhoff's theorem on seeded random graphs.
    MatrixTree {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Green's-function bound and cut formula on seeded random weightings.
    Green {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Momentum conservation after every move of seeded random sequences.
    Momentum {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn certificates(certs: &[Certificate]) -> Outcome {
    let report: String = certs.iter().map(|c| format!("{c}\n")).collect();
    if certs.iter().all(Certificate::holds) {
        Ok(report)
    } else {
        Err(Failure::Mismatch(report))
    }
}

/// Compares two polynomials and reports the leading differing term.
fn compare(name: &str, got: &Poly, expect: &Poly) -> Result<String, String> {
    let diff = got - expect;
    match diff.leading_term() {
        None => Ok(format!("OK golden {name} ({} terms)\n", got.len())),
        Some((m, c)) => Err(format!("MISMATCH golden {name}: computed minus expected has term {c}*{m}\n")),
    }
}

fn collect(parts: Vec<Result<String, String>>) -> Outcome {
    let failed = parts.iter().any(Result::is_err);
    let report: String = parts.into_iter().map(|p| p.unwrap_or_else(|e| e)).collect();
    if failed {
        Err(Failure::Mismatch(report))
    } else {
        Ok(report)
    }
}

fn golden(which: Golden, convention: Convention) -> Outcome {
    let opts = MuOptions { convention: convention.into(), ..MuOptions::default() };
    let mu_constant = |seq| mu_constant_with(seq, &opts);
    let mu_truncated = |seq, n| mu_truncated_with(seq, n, &opts);
    let mut parts = Vec::new();
    match which {
        Golden::Triangle => {
            let seq = triangle_sequence();
            let half = wedge_lambdas("1", "2").scale(&rat(1, 2));
            parts.push(compare("triangle constant", &mu_constant(&seq)?.value, &half));
            for n in 0..=2 {
                let got = mu_truncated(&seq, n)?.value;
                parts.push(compare(&format!("triangle order {n}"), &got, &-triangle_oracle(n)));
            }
        }
        Golden::Theta => parts.push(compare("theta", &mu_constant(&theta_sequence())?.value, &theta_golden())),
        Golden::Threeloop => {
            parts.push(compare("threeloop", &mu_constant(&threeloop_sequence())?.value, &threeloop_golden()))
        }
        Golden::D1 => {
            let l1 = Poly::var(Var::lambda("1", 1));
            for n in 1..=6u32 {
                let expect = l1.pow(n - 1).scale(&(rat(1, 1) / factorial(n - 1)));
                parts.push(compare(&format!("d1 order {n}"), &residue_d1(&Poly::one(), n)?, &expect));
            }
        }
    }
    collect(parts)
}

fn range(rng: &mut SampleRng, lo: usize, hi: usize) -> usize {
    rng.gen_range(lo..=hi)
}

fn dmodule(seed: u64) -> Outcome {
    let mut rng = sampling::rng(seed);
    let elements: Vec<_> = (0..20).map(|_| sampling::random_jouanolou_element(&mut rng)).collect();
    let samples: Vec<_> = (0..20).map(|_| sampling::random_residue_sample(&mut rng)).collect();
    certificates(&[
        verify_d_action_rule(),
        verify_dbar_commutes(&elements, &["1", "2", "3"]),
        residue_d1_dmodule_check(&samples)?,
    ])
}

fn matrix_tree(seed: u64) -> Outcome {
    let mut rng = sampling::rng(seed);
    for k in 0..50 {
        let n = range(&mut rng, 2, 5);
        let m = range(&mut rng, n - 1, n + 3);
        let g = sampling::random_connected_graph(&mut rng, n, m);
        let w = EdgeWeights::symbolic(&g);
        let det = determinant(&weighted_laplacian(&g, &w)?);
        let kirchhoff = kirchhoff_det(&g, &w)?;
        if det != kirchhoff {
            return Err(Failure::Mismatch(format!(
                "MISMATCH matrix-tree on graph {k} {}: det {det} vs spanning-tree sum {kirchhoff}\n",
                g.to_json()
            )));
        }
    }
    Ok("OK matrix-tree (50 graphs)\n".into())
}

fn green(seed: u64) -> Outcome {
    let mut rng = sampling::rng(seed);
    let two = rat(2, 1);
    let mut entries = 0;
    for _ in 0..100 {
        let n = range(&mut rng, 2, 5);
        let m = range(&mut rng, n - 1, n + 3);
        let g = sampling::random_connected_graph(&mut rng, n, m);
        let w = sampling::random_positive_weights(&mut rng, &g);
        let d = green_function(&g, &w)?;
        let cuts = green_function_by_cuts(&g, &w)?;
        for (row, row_cuts) in d.iter().zip(&cuts) {
            for (x, y) in row.iter().zip(row_cuts) {
                let value = x.evaluate(&BTreeMap::new()).expect("numeric weights give constants");
                if value > two || value < -&two || x != y {
                    return Err(Failure::Mismatch(format!(
                        "MISMATCH green on {}: entry {x}, cut formula {y}\n",
                        g.to_json()
                    )));
                }
                entries += 1;
            }
        }
    }
    Ok(format!("OK green ({entries} entries within [-2, 2], cut formula agrees)\n"))
}

fn momentum(seed: u64) -> Outcome {
    let mut rng = sampling::rng(seed);
    let mut moves = 0;
    for _ in 0..25 {
        let n = range(&mut rng, 3, 8);
        let seq = sampling::random_iprime_sequence(&mut rng, n);
        let mut st = WeightState::base_state(&seq.base.0, &seq.base.1, SignConvention::Displayed)?;
        for m in &seq.moves {
            st = st.extend((&m.parent.0, &m.parent.1), &m.new)?;
            moves += 1;
            if let Some((u, v, sum)) = st.momentum_violation() {
                return Err(Failure::Mismatch(format!(
                    "MISMATCH momentum in {} at u={u} v={v}: sum {sum}\n",
                    seq.to_json()
                )));
            }
        }
    }
    Ok(format!("OK momentum (25 sequences, {moves} moves)\n"))
}

pub fn run(suite: Suite) -> Outcome {
    match suite {
        Suite::Arnold => certificates(&[verify_arnold()]),
        Suite::ArnoldCor => certificates(&[verify_arnold_corollary()]),
        Suite::Genseries { order } => certificates(&[generating_series_check(order)]),
        Suite::Golden { which, convention } => golden(which, convention),
        Suite::Dmodule { seed } => dmodule(seed),
        Suite::MatrixTree { seed } => matrix_tree(seed),
        Suite::Green { seed } => green(seed),
        Suite::Momentum { seed } => momentum(seed),
    }
}
