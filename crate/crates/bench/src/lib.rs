//! Benchmarks live in `benches/`; this library only holds shared inputs.

/// Sizes used by the lattice benchmarks.
pub const LATTICE_SIZES: [usize; 3] = [8, 12, 14];
