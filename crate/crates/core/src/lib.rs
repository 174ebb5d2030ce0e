//! Exact symbolic algebra for the Lie algebra of vector fields on
//! `S^1 x C`, i.e. the derivations of `A = Q[t1^{±1}, t2]`.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! * [`APoly`]: the commutative algebra `A` and its partial derivatives.
//! * [`DOp`]: the localized Weyl algebra `Q[t1^{±1}, t2, d1, d2]` in normal order.
//! * [`VField`]: derivations of `A`, the subalgebra of fields vanishing at `(1, 0)`
//!   and its linearization onto `gl_2`.
//! * [`SmashElem`]: the `U`-degree `<= 1` slice of the smash product `A # U(g)`,
//!   where the generators `X_k(m)` live.
//! * [`LElem`]: the jet Lie algebra `L`, its isomorphism onto fields vanishing
//!   at `(1, 0)`, and the lift of `gl_2`-modules to `L`-modules.
//! * [`DLElem`]: the `L`-degree `<= 1` slice of `D ⊗ U(L)` and the maps
//!   [`phi`] and [`rho`] between it and the smash product.
//! * [`JetModule`]: tensor jet modules `P ⊗ V` built from a weight `D`-module
//!   and a `gl_2`-module, with an exhaustive axiom checker.
//!
//! All coefficients are exact rationals; every comparison is structural.

#![no_std]

extern crate alloc;

mod algebra_a;
mod error;
mod grid;
mod jet_lie;
mod jet_modules;
mod lin;
mod matrix;
mod phi_rho;
mod rat;
mod smash;
mod vector_fields;
mod weyl;

pub use algebra_a::{AMono, APoly, Axis};
pub use error::AlgebraError;
pub use grid::ExpGrid;
pub use jet_lie::{basis_keys, l_bracket, lift_gl2, theta, theta_inv, x, GL2Module, LElem, LKey};
pub use jet_modules::{
    check_jet_axioms, jet_cases, m_act_a, m_act_vf, p_act, Axiom, JetAxiomReport, JetCase,
    JetElem, JetFailure, JetKey, JetModule, PElem, PIdx, Variant, WeightDMod,
};
pub use lin::{Lin, Monomial};
pub use matrix::RatMatrix;
pub use phi_rho::{phi, rho, DLElem};
pub use rat::{binomial, falling, frac, int, Rat};
pub use smash::{xk, CoverKey, SmashElem};
pub use vector_fields::{GL2Elem, VField};
pub use weyl::{DMono, DOp};
