//! τ-functions of the KP hierarchy in the Schur basis: coefficient tables,
//! the bilinear residue check, and the PDE form of the Plücker relations.

mod pde;
mod residue;
mod table;

pub use pde::{
    pde_for_pair, pde_system, reduce_to_log, relation_to_pde, schur_perp_operator, DerivOp,
    Derivative, DiffExpr, FactoredPde, Monomial, PdeEntry, Target,
};
pub use residue::{evaluable_pairs, residue_check, residue_check_pairs, PairVerdict, Residue};
pub use table::{grassmannian_columns, grassmannian_table, CoeffTable, Matrix};
