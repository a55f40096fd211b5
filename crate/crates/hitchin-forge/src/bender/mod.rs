//! Surface-group presentations, bending along separating and non-separating
//! curves, the diagonal bending matrices and Zariski-density certificates.

mod b0;
mod density;
mod fixtures;
mod spec;
mod words;

pub use b0::{b0_family, distinct_bendings, verify_b0, B0Kind, B0Report};
pub use density::{density_certificate, BreakingFlags, DensityCertificate, DensityTarget, Sl2Evidence, DENSITY_ASSUMPTION};
pub use fixtures::{commutator_triple, gamma_free_spec, genus2_spec};
pub use spec::{bend_eval, bend_eval_str, common_field, relator_ok, BendingMode, BendingSpec, CurveSpec, RelatorReport, Role, SurfacePresentation};
pub use words::Word;
