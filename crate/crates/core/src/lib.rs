//! Weights of the general linear supergroup `GL(M|N)`: Serganova's algorithm
//! from the standard to the mixed Borel in characteristic `p`, the
//! characterization of its image, relevant-orbit predicates on the affine
//! Grassmannian side, and an exhaustive verification harness tying them
//! together.
//!
//! ```
//! use glmn_core::{forward, order_v1, Modulus, SuperRank, Weight};
//!
//! let rank = SuperRank::new(2, 3).unwrap();
//! let p = Modulus::new(2).unwrap();
//! let w = Weight::new(vec![1, 1], vec![0, 0, 0]);
//! let (image, _trace) = forward(&w, p, &order_v1(2), &rank).unwrap();
//! assert_eq!(image, Weight::new(vec![1, 0], vec![1, 0, 0]));
//! ```

pub mod classify;
pub mod error;
pub mod io;
pub mod oracle;
pub mod roots;
pub mod serganova;
pub mod weight;

pub use classify::{
    condition_b, is_mixed_highest_weight, is_relevant_orbit, is_standard_dominant,
    orbit_representative, GroupConvention, OrbitMatrix,
};
pub use error::{Error, Result};
pub use oracle::{enumerate_box, Harness, Limits, VerificationReport, WeightBox};
pub use roots::{excess_pairs, mixed_word, pair_leq, positive_roots, BorelWord, PairIndex, Root};
pub use serganova::{
    all_linear_extensions, forward, inverse, order_v1, order_v2, Action, Direction, StepOrder,
    StepRecord, Trace,
};
pub use weight::{congruent_zero, split_theta, Modulus, SuperRank, ThetaSplit, Weight};
