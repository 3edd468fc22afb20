//! Reference list of non-compact Vogan diagrams, one row per
//! non-equivalent diagram, with the involution recorded as an opaque string.
//!
//! Rows whose involution is `exp iπ ad(p̊_i)` with `a_i` odd carry the
//! painting `{0, i}`, as forced by the action on `e_0`.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::cartan::{AffineType, Family, Perm};
use crate::diagram::{make_diagram, VoganDiagram};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub label: String,
    pub diagram: VoganDiagram,
}

fn row(t: &AffineType, rho: &Perm, painted: &[usize], label: String) -> TableRow {
    let diagram = make_diagram(*t, rho.clone(), painted).expect("reference rows are valid diagrams");
    TableRow { label, diagram }
}

/// Rows for the type, instantiated at its rank.
pub fn table_rows(t: &AffineType) -> Vec<TableRow> {
    let l = t.l();
    let n = t.n();
    let id = Perm::identity(n);
    let mut out = Vec::new();
    match t.family() {
        Family::A2_2 => {
            out.push(row(t, &id, &[0], "μ⊗1".into()));
            out.push(row(t, &id, &[1], "exp iπad(p̊_1) = exp iπad(p_1)".into()));
        }
        Family::A2l_2 => {
            out.push(row(t, &id, &[0], "μ⊗1".into()));
            for i in 1..=l {
                out.push(row(t, &id, &[i], format!("exp iπad(p̊_{i}) = exp iπad(p_{i})")));
            }
        }
        Family::A2lm1_2 => {
            out.push(row(t, &id, &[0], "μ⊗1".into()));
            out.push(row(t, &id, &[l], format!("(μ⊗1)exp iπad(p̊_{l}) = exp iπad(p_{l})")));
            out.push(row(t, &id, &[0, l], format!("exp iπad(p̊_{l})")));
            for i in 1..=l / 2 {
                let ps: Vec<usize> = if i == 1 { vec![0, 1] } else { vec![i] };
                out.push(row(t, &id, &ps, format!("exp iπad(p̊_{i})")));
            }
            let sw = Perm::transposition(n, 0, 1);
            out.push(row(t, &sw, &[], "ρ".into()));
            out.push(row(t, &sw, &[l], format!("ρ(μ²exp iπad(p̊_1)⊗1)exp iπad(p̊_{l})")));
            for i in 2..=l.div_ceil(2) {
                out.push(row(t, &sw, &[i], format!("ρexp iπad(p̊_{i})")));
            }
        }
        Family::Dlp1_2 => {
            out.push(row(t, &id, &[0], "μ⊗1".into()));
            for i in 1..=l / 2 {
                out.push(row(t, &id, &[i], format!("exp iπad(p̊_{i})μ⊗1 = exp iπad(p_{i})")));
            }
            for i in 1..=l {
                out.push(row(t, &id, &[0, i], format!("exp iπad(p̊_{i})")));
            }
            let rev = Perm::from_images((0..n).rev().collect()).unwrap();
            out.push(row(t, &rev, &[], "ρ".into()));
            if l % 2 == 0 {
                let r = l / 2;
                out.push(row(t, &rev, &[r], format!("ρexp iπad(p_{r}) = ρexp iπad(p̊_{r})(μ²exp iπad(p̊_{l})⊗1)")));
            }
        }
        Family::E6_2 => {
            out.push(row(t, &id, &[1], "exp iπad(p̊_1) = exp iπad(p_1)".into()));
            out.push(row(t, &id, &[0, 4], "exp iπad(p̊_4)".into()));
            out.push(row(t, &id, &[4], "(μ⊗1)exp iπad(p̊_4) = exp iπad(p_4)".into()));
            out.push(row(t, &id, &[0], "μ⊗1".into()));
        }
        Family::D4_3 => {
            out.push(row(t, &id, &[0, 2], "exp iπad(p̊_2)".into()));
            out.push(row(t, &id, &[0], "ζ³⊗1".into()));
        }
    }
    out
}
