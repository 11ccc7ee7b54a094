//! The weight recursion for Type I′ Laman graphs in two dimensions, exact
//! box integration, the one-dimensional residue and reference values.

mod golden;
mod mu;
mod oracle;
mod residue;
mod state;

pub use golden::{
    double_triangle_sequences, theta_golden, theta_sequence, threeloop_golden, threeloop_sequence, triangle_sequence,
    wedge_lambdas,
};
pub use mu::{mu_constant, mu_constant_with, mu_truncated, mu_truncated_with, Limits, MuMode, MuOptions, MuResult};
pub use oracle::triangle_oracle;
pub use residue::{residue_d1, residue_d1_dmodule_check, DmoduleSample};
pub use state::WeightState;

/// Overall sign of `G`.
///
/// `Literal` applies the update formula verbatim at every move. `Displayed`
/// additionally negates the first move, which gives `G = r₂ λ₁∧λ₂` on the
/// triangle and the reference values for the two- and three-loop graphs.
/// The two differ by exactly one global factor of `−1` once at least one
/// move has been made.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SignConvention {
    #[default]
    Displayed,
    Literal,
}

impl std::str::FromStr for SignConvention {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<SignConvention> {
        match s {
            "displayed" => Ok(SignConvention::Displayed),
            "literal" => Ok(SignConvention::Literal),
            other => Err(crate::Error::Input(format!("unknown sign convention {other}"))),
        }
    }
}
