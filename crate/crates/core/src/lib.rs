//! Anisotropic Rabi model: analytic spectrum from approximate elimination of
//! the counter-rotating terms, plus an exact-diagonalization oracle in a
//! truncated Fock space to check every analytic quantity against.
//!
//! The Hamiltonian is
//!
//! ```text
//! H = ω a⁺a + Ω σz + g (σ₊a + σ₋a⁺) + g′ (σ₋a + σ₊a⁺)
//! ```
//!
//! with `ħ = 1`. The analytic route applies `U = exp[λ σx (a⁺ − a)]`, keeps
//! only the near-diagonal Fock matrix elements of the transformed operator,
//! and picks `λ = λ_n` per doublet so that the counter-rotating coupling
//! inside `{|+z, n−1⟩, |−z, n⟩}` vanishes.
//!
//! Module map:
//!
//! * [`special`]: Laguerre polynomials and displaced-Fock matrix elements.
//! * [`model`]: parameters, the `G_n`/`R_n` coefficients, the `λ_n` root solve.
//! * [`analytic`]: energies, mixing angles, wavefunctions and parity labels.
//! * [`weak`]: the weak counter-rotating limit (modified JC model).
//! * [`observables`]: Bloch-Siegert shift, photon number, inversion, polariton statistics.
//! * [`oracle`]: dense Hamiltonians and an in-house symmetric eigensolver.
//! * [`sweep`]: grid sweeps producing CSV datasets.

pub mod analytic;
pub mod error;
pub mod model;
pub mod observables;
pub mod oracle;
pub mod special;
pub mod sweep;
pub mod weak;

pub use analytic::{
    AnalyticLevel, Branch, Label, LevelKind, MixingAngle, Spin, WavefunctionExpansion,
};
pub use error::{Error, Result};
pub use model::{LambdaSolution, ModelParams};
pub use observables::ObservableSet;
pub use weak::ModifiedJcParams;
