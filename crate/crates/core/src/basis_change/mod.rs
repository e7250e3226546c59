//! Partitions, Jacobi–Trudi determinants, the change of basis between the
//! exterior-power characters `e_r` and the Casimir images `G_{n,k}`, and the
//! resulting generation certificate.

mod certificate;
mod jt;
mod partition;
mod triangular;

pub use certificate::{
    certificate_report, extra_indices, fundamental_in_e, generation_certificate, solved_range,
    CertificateReport, Check, CheckStatus, ExtraGenerator,
};
pub use jt::{
    e_symbol, fold_index, hook_matrix_is_hessenberg, jt_character, jt_character_e,
    jt_character_ga, jt_det_ebasis, jt_det_ga, jt_index_matrix, reduction_convention, EBasisExpr,
    JtTarget, JtValue,
};
pub use partition::Partition;
pub use triangular::{
    g_in_e_basis, jacobian, jacobian_determinant, triangular_solve, Coefficient, SolvedStep,
    TriangularSolution,
};
