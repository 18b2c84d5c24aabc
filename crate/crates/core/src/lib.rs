//! Exact algebra for truncated power series, Witt vectors and stable
//! elementary matrix manipulations, with checkable derivation logs.

pub mod artifact;
pub mod derivation;
pub mod error;
pub mod k1;
pub mod oracle;
pub mod ring;
pub mod series;
pub mod witt;

pub(crate) mod expr;
pub(crate) mod linalg;

pub use artifact::{parse_artifact, Artifact, Verdict};
pub use derivation::{verify_derivation_log, DerivationLog, RejectReason, Rejection, Step, Subgroup};
pub use error::{Error, Result};
pub use k1::{
    apply_right, elem_apply, evaluate_at_one, has_even_total_degree, higman_linearize, higman_reduce_step,
    mennicke_fixture, mennicke_inverse, nilpotency_index, poly_ring, sk1_det_check, swan_weibel_theta,
    theorem1_derivation, theta_ring, unipotent_normalize, whitehead_word, ElemWord, GradedElem, PolyMatrix,
    StableEquivCert, Transvection, Unipotent, WordCert,
};
pub use oracle::{torsion_scan, TorsionReport};
pub use ring::{ring_arith, RingDescriptor, RingElem, RingKind, RingOp, TruncatedPoly};
pub use series::{canonical_product, lemma3_factor, lemma4_step, trivialize_k_torsion, HypothesisToken};
pub use witt::{ghost, witt_add, witt_coords, witt_mul, witt_neg, witt_series, SeriesUnit, WittVector};
