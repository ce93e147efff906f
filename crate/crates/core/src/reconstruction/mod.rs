//! Reconstruction of a codeword from many distinct reads of the same ball.
//!
//! * [`reconstruct_min`] and [`list_reconstruct_min`]: componentwise minimum,
//!   for `k− = 0`.
//! * [`reconstruct_majority`] and [`list_reconstruct_majority`]: thresholded
//!   majority estimate with erasures, for `k− ≥ 1`.
//! * [`list_reconstruct_sauer`]: a coordinate set found through the q-ary
//!   Sauer–Shelah lemma, needing the fewest reads.
//! * [`adversarial_instance`]: read sets lying in many balls at once.
//!
//! Decoders take any [`Code`](crate::Code); unique decoding always runs at
//! radius `δ − 1`.

mod adversarial;
mod formulas;
mod majority;
mod min;
mod reads;
mod sauer;

pub use adversarial::{adversarial_code_size_bound, adversarial_instance, AdversarialInstance};
pub use formulas::{
    list_params_general, list_params_min, list_size_bound_majority, list_size_bound_min, list_size_bound_sauer,
    majority_threshold, reads_required_min, reads_required_sauer, ReadThreshold,
};
pub use majority::{candidate_words, list_reconstruct_majority, majority_estimate, reconstruct_majority};
pub use min::{list_reconstruct_min, reconstruct_min};
pub use reads::{ListParams, ReadSet};
pub use sauer::{list_reconstruct_sauer, sauer_shelah_find};
