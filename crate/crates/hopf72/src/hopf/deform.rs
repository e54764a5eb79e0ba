//! The algebra `𝒦_a` (squares `x_t^2 = -Σ_g a_{g⁻¹tg} δ_g`) and its module `M3 = k^{S_3}`.

use serde::Serialize;

use crate::linalg::Matrix;
use crate::presentation::table::StructureTable;
use crate::presentation::Variant;
use crate::repcore::Representation;
use crate::symgroup::{ParamVector, SymGroup};
use crate::Error;

/// `M3` with basis `m_g ∈ M3[g]` and
/// `x_t m_g = m_{tg}` for odd `g`, `-a_{g⁻¹tg} m_{tg}` for even `g`.
pub fn m3_module(a: &ParamVector) -> Representation {
    let grp = SymGroup::new(3);
    let x = (0..3)
        .map(|k| {
            let mut m = Matrix::zeros(6, 6);
            for g in 0..6 {
                let target = grp.mul(grp.trans_elem(k), g);
                let c = if grp.sign(g) == -1 { num::One::one() } else { -a.at(grp.conj_trans(k, g)).clone() };
                m.set(target, g, c);
            }
            m
        })
        .collect();
    let mut r = Representation::new("M3", (0..6).collect(), x);
    r.names = (0..6).map(|g| format!("m{}", grp.name(g))).collect();
    r
}

#[derive(Clone, Debug, Serialize)]
pub struct DeformReport {
    pub parameter: Vec<String>,
    pub dimension: usize,
    pub relators_vanish: bool,
    pub associative: bool,
    pub m3_is_module: bool,
    /// Some `x_t` acts by a nonzero operator, so `𝒦_a` has a nonzero quotient in `End(M3)`.
    pub m3_nonzero_action: bool,
}

impl DeformReport {
    pub fn passes(&self) -> bool {
        self.dimension == 72 && self.relators_vanish && self.associative && self.m3_is_module && self.m3_nonzero_action
    }
}

pub fn deform_report(a: &ParamVector, degree_bound: usize) -> Result<DeformReport, Error> {
    let t = StructureTable::build(a, Variant::K, degree_bound)?;
    let relators_vanish = t.verify_relators().is_ok();
    let associative = t.verify_associativity().is_ok();
    let m3 = m3_module(a);
    Ok(DeformReport {
        parameter: a.to_strings(),
        dimension: t.dim(),
        relators_vanish,
        associative,
        m3_is_module: m3.check_relations(a, Variant::K).is_ok(),
        m3_nonzero_action: m3.x.iter().any(|m| !m.is_zero()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Zero;

    #[test]
    fn m3_satisfies_k_relations_not_a_relations() {
        let a = ParamVector::from_ints(3, &[1, 2, -3]).unwrap();
        let m = m3_module(&a);
        m.check_relations(&a, Variant::K).unwrap();
        assert!(m.check_relations(&a, Variant::A).is_err());
        assert!(!m.x[0].get(1, 0).is_zero());
    }

    #[test]
    fn k_algebra_has_dimension_72() {
        for a in [[0, 0, 0], [2, -1, -1], [1, 2, -3]] {
            let r = deform_report(&ParamVector::from_ints(3, &a).unwrap(), 6).unwrap();
            assert!(r.passes(), "{r:?}");
        }
    }
}
