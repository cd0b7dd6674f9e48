//! Exact computation of higher Frobenius-Schur indicators of fusion
//! categories.
//!
//! The library computes the indicators ν_n(X) of simple objects X and the
//! Frobenius-Schur exponent FSexp(C) = least n with ν_n(X) = dim X for all
//! simple X, by three independent routes that can be cross-checked against
//! each other:
//!
//! 1. **Pointed categories** C(G, ω): simples are group elements, the
//!    associator is a 3-cocycle ω, and ν_n(V_g) has a closed form as a
//!    product of associator values ([`pointed`]).
//! 2. **Tube algebra**: the finite-dimensional algebra Θ spanned by commuting
//!    pairs of G carries a central element t whose powers evaluate to the
//!    indicators under the functionals φ_g ([`tube`]).
//! 3. **Modular data**: for modular categories, a twist/S-matrix formula of
//!    Bantay type produces ν_n, and the FS-exponent is the order of the twist
//!    θ ([`mtc`]).
//!
//! All arithmetic is exact: values live in cyclotomic fields Q(ζ_n) with
//! rational coefficients ([`cyclo`]), cocycles take values in a finite group
//! μ_m of roots of unity represented by integer exponents mod m
//! ([`cocycle`]), and every comparison in the API and tests is exact
//! equality — no floating point is used except in the optional
//! [`cyclo::Cyclotomic::to_complex`] display helper.
//!
//! The crate is `no_std` (with `alloc`); file formats, builtin object names
//! and the command-line interface live in the companion `fuscat` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cocycle;
pub mod cyclo;
pub mod grp;
pub mod mtc;
pub mod pointed;
pub mod tube;

mod linalg;
