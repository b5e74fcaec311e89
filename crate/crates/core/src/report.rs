//! Summary of `Aut_R(Λ) = Inn(Λ) ⋊ O_Λ` for one order.

use crate::error::{Error, Result};
use crate::exponent::ExponentMatrix;
use crate::lifting::{liftable_subgroup, LiftableGroup};
use crate::quiver::{valued_quiver, ValuedQuiver};

pub const STRUCTURE: &str = "Aut_R = Inn ⋊ O_Lambda";

#[derive(Clone, Debug)]
pub struct StructureReport {
    pub n: usize,
    pub basic: bool,
    pub zero_one: bool,
    pub quiver: ValuedQuiver,
    pub group: LiftableGroup,
    /// `|O_Λ| = |Aut(Q(Λ))|`.
    pub all_liftable: bool,
    /// Set when the order is basic with exponents in `{0, 1}`, in which case
    /// every quiver automorphism must lift and the report confirms it.
    pub basic_zero_one_confirmed: bool,
}

impl StructureReport {
    pub fn aut_q_order(&self) -> usize {
        self.group.aut_q_order()
    }

    pub fn o_lambda_order(&self) -> usize {
        self.group.order()
    }

    /// One-line description of the semidirect decomposition.
    pub fn structure_line(&self) -> String {
        let kind = match (self.group.is_cyclic(), self.group.is_abelian()) {
            (true, _) => "cyclic",
            (false, true) => "abelian",
            (false, false) => "non-abelian",
        };
        format!(
            "Aut_R(Λ) = Inn(Λ) ⋊ O_Λ with |O_Λ| = {} ({kind})",
            self.o_lambda_order()
        )
    }
}

/// Builds the report. Fails with [`Error::Invariant`] if a basic (0,1)-order
/// ever has a non-liftable quiver automorphism.
pub fn aut_structure_report(a: &ExponentMatrix, max_n: usize) -> Result<StructureReport> {
    let group = liftable_subgroup(a, max_n)?;
    let basic = a.is_basic();
    let zero_one = a.is_zero_one();
    let all_liftable = group.order() == group.aut_q_order();
    let basic_zero_one_confirmed = basic && zero_one;
    if basic_zero_one_confirmed && !all_liftable {
        return Err(Error::Invariant(format!(
            "basic (0,1)-order with |O_Λ| = {} < |Aut(Q)| = {}",
            group.order(),
            group.aut_q_order()
        )));
    }
    Ok(StructureReport {
        n: a.n(),
        basic,
        zero_one,
        quiver: valued_quiver(a),
        group,
        all_liftable,
        basic_zero_one_confirmed,
    })
}
