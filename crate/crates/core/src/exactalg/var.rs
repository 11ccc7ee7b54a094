//! Polynomial variables and their global order.

use std::fmt;
use std::sync::Arc;

/// Shared, cheaply clonable identifier string.
pub type Id = Arc<str>;

/// A polynomial indeterminate.
///
/// The derived `Ord` is the global variable order: first the kind (in the
/// order the variants are declared), then the identifiers compared as
/// strings, then the component.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// Momentum component `λ_v^s`.
    Lambda { vertex: Id, comp: u8 },
    /// Edge coordinate component `𝔷_{tail,head}^s`.
    Zfrak { tail: Id, head: Id, comp: u8 },
    /// Box parameter `r_k`.
    BoxR(u32),
    /// Box parameter `s_k`.
    BoxS(u32),
    /// Holomorphic coordinate `z_v^s`.
    Z { vertex: Id, comp: u8 },
    /// Antiholomorphic coordinate `z̄_v^s`.
    Zbar { vertex: Id, comp: u8 },
    /// Edge weight `t_e`.
    TWeight(Id),
    /// Target coordinate `w` of the one-dimensional residue.
    W,
    /// Free-form auxiliary variable.
    Aux(Id),
}

impl Var {
    pub fn lambda(vertex: &str, comp: u8) -> Var {
        Var::Lambda { vertex: vertex.into(), comp }
    }

    pub fn zfrak(tail: &str, head: &str, comp: u8) -> Var {
        Var::Zfrak { tail: tail.into(), head: head.into(), comp }
    }

    pub fn z(vertex: &str, comp: u8) -> Var {
        Var::Z { vertex: vertex.into(), comp }
    }

    pub fn zbar(vertex: &str, comp: u8) -> Var {
        Var::Zbar { vertex: vertex.into(), comp }
    }

    pub fn t(edge: &str) -> Var {
        Var::TWeight(edge.into())
    }

    pub fn aux(name: &str) -> Var {
        Var::Aux(name.into())
    }

    pub fn is_box(&self) -> bool {
        matches!(self, Var::BoxR(_) | Var::BoxS(_))
    }

    pub fn is_lambda(&self) -> bool {
        matches!(self, Var::Lambda { .. })
    }

    pub fn is_zfrak(&self) -> bool {
        matches!(self, Var::Zfrak { .. })
    }

    pub fn is_zbar(&self) -> bool {
        matches!(self, Var::Zbar { .. })
    }

    /// Component index for the kinds that carry one.
    pub fn component(&self) -> Option<u8> {
        match self {
            Var::Lambda { comp, .. }
            | Var::Zfrak { comp, .. }
            | Var::Z { comp, .. }
            | Var::Zbar { comp, .. } => Some(*comp),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Lambda { vertex, comp } => write!(f, "l_{vertex}_{comp}"),
            Var::Zfrak { tail, head, comp } => write!(f, "zf_{tail}_{head}_{comp}"),
            Var::BoxR(k) => write!(f, "r{k}"),
            Var::BoxS(k) => write!(f, "s{k}"),
            Var::Z { vertex, comp } => write!(f, "z_{vertex}_{comp}"),
            Var::Zbar { vertex, comp } => write!(f, "zb_{vertex}_{comp}"),
            Var::TWeight(e) => write!(f, "t_{e}"),
            Var::W => write!(f, "w"),
            Var::Aux(name) => write!(f, "{name}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!(Var::lambda("1", 2).to_string(), "l_1_2");
        assert_eq!(Var::zfrak("2", "o", 1).to_string(), "zf_2_o_1");
        assert_eq!(Var::BoxR(3).to_string(), "r3");
        assert_eq!(Var::BoxS(2).to_string(), "s2");
        assert_eq!(Var::t("e1").to_string(), "t_e1");
        assert_eq!(Var::zbar("4", 1).to_string(), "zb_4_1");
    }

    #[test]
    fn order_is_kind_then_ids_then_component() {
        assert!(Var::lambda("9", 2) < Var::zfrak("1", "o", 1));
        assert!(Var::lambda("1", 2) < Var::lambda("2", 1));
        assert!(Var::lambda("1", 1) < Var::lambda("1", 2));
        assert!(Var::BoxR(9) < Var::BoxS(1));
        assert!(Var::z("1", 1) < Var::zbar("1", 1));
    }
}
