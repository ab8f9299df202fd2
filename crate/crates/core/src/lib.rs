//! Archimedean local zeta integrals on prehomogeneous vector spaces.
//!
//! The crate is organized bottom-up:
//!
//! * [`poly`] and [`weyl`]: exact polynomial and Weyl-algebra calculus
//!   (b-functions, Capelli eigenvalues, Γ-product denominators).
//! * [`registry`]: descriptors of the built-in spaces and their duals.
//! * [`schwartz`]: Gaussian–Hermite test functions with exact Fourier transforms.
//! * [`zeta`]: orbitwise zeta integrals, continuation, poles and residues.
//! * [`gamma_factor`]: γ-matrix extraction and the identity checks.
//! * [`verify`]: the named verification suite, shared by the CLI and tests.
//! * [`cli`]: the `pvzeta` command line.

pub mod cli;
pub mod gamma_factor;
pub mod poly;
pub mod quadrature;
pub mod registry;
pub mod schwartz;
pub mod special;
pub mod verify;
pub mod weyl;
pub mod zeta;
