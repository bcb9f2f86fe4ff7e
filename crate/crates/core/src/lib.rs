//! Labeling codes for DNA data storage.
//!
//! A known reference sequence `S` is labeled by a set of short DNA words.
//! Every occurrence of a label marks its positions with ones, and the
//! observed channel output is the OR of those marks. Information is carried
//! by the choice of label set.
//!
//! The crate provides:
//!
//! * [`labeling`]: the channel itself and unique decodability of codes.
//! * [`analysis`]: periods, repeat-freeness, and exhaustive oracles for
//!   maximum code sizes on small instances.
//! * [`constrained`]: binary words whose runs of ones are at least `ℓ` long,
//!   exact counting, enumerative rank/unrank, and capacity computations.
//! * [`codec`]: the optimal fixed-length-label encoder and decoder over a
//!   repeat-free reference.
//! * [`catalogs`]: de Bruijn references and the non-overlapping-code
//!   (power-set) pathway for short labels.

pub mod analysis;
pub mod bits;
pub mod catalogs;
pub mod codec;
pub mod constrained;
pub mod error;
pub mod labeling;
pub mod seq;

pub use bits::{BinaryWord, LabelingOutput};
pub use codec::LabelingCodec;
pub use constrained::{ConstrainedWord, Enumerator, MessageIndex};
pub use error::{Error, Result};
pub use seq::{Codeset, DnaSequence, Label, LabelingCode, ALPHABET};
