//! Polynomial matrices, elementary words and certificates of stable
//! equivalence.

mod cert;
mod fixture;
mod higman;
mod matrix;
mod theorem1;
mod theta;
mod word;

pub use cert::{WordCert, CERT_SCHEMA};
pub use fixture::{has_even_total_degree, mennicke_fixture, mennicke_inverse, sk1_det_check};
pub use higman::{
    higman_linearize, higman_reduce_step, nilpotency_index, unipotent_normalize, StableEquivCert, Unipotent,
    DEFAULT_NILPOTENCY_FACTOR,
};
pub use matrix::{poly_ring, PolyMatrix};
pub use theorem1::theorem1_derivation;
pub use theta::{evaluate_at_one, swan_weibel_theta, theta_ring, GradedElem};
pub use word::{apply_right, elem_apply, whitehead_word, ElemWord, Transvection};
