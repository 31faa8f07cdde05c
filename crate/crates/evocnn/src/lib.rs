//! Genetic search over CNN hyperparameters with a self-contained trainable
//! network backend.
//!
//! The crate couples a small generational GA (tournament parent selection,
//! group-level two-point crossover, reordering point mutation, worst-λ
//! replacement) with two interchangeable fitness backends: a from-scratch
//! CNN trained on labeled images, and an instant surrogate landscape for
//! exercising search dynamics without training anything.
//!
//! Modules:
//!
//! - [`genome`] — the 16-gene encoding, gene alphabets, and decoding to a
//!   concrete architecture spec.
//! - [`evolution`] — the generational loop and its operators, with fitness
//!   caching, history records, and checkpointable state.
//! - [`neuralnet`] — dense tensors, conv/pool/batchnorm/linear/dropout
//!   layers with hand-written backward passes, Adam, and a
//!   finite-difference gradient checker.
//! - [`fitness`] — the evaluator contract, the CNN-training evaluator with
//!   imbalance-compensating class weights, and the surrogate.
//! - [`dataio`] — PPM/PGM/raw image loading, bilinear resize, seeded
//!   train/validation splitting, synthetic dataset generation, batching.
//! - [`cli`] — run configuration, persistence formats, and the subcommand
//!   entry points used by the `evocnn` binary.
//!
//! The `examples/` directory has one runnable example per capability; the
//! `evocnn` binary wraps the same entry points as subcommands.

pub mod cli;
pub mod dataio;
pub mod error;
pub mod evolution;
pub mod fitness;
pub mod genome;
pub mod neuralnet;
pub mod rng;

pub use error::{Error, Result};
