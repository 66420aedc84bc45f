//! Exact-arithmetic library for parking function polytopes.
//!
//! Given a nondecreasing vector `u` of nonnegative rationals (not all zero),
//! the parking function polytope `PF(u)` is the convex hull of all
//! u-parking functions: vectors whose sorted entries are bounded termwise
//! by `u`.  This crate computes the complete combinatorial and enumerative
//! data of `PF(u)` with zero-tolerance rational arithmetic:
//!
//! * vertices, facets, rays, and the normal fan ([`polytope`]),
//! * the face poset via skewed binary partitions ([`partitions`],
//!   [`cones`], [`polytope`]),
//! * f-, h-, and generalized Eulerian polynomials ([`enumerative`]),
//! * Minkowski decompositions, Ehrhart polynomials, and volumes
//!   ([`ehrhart`]),
//! * independent brute-force verifiers for all of the above ([`oracle`]).
//!
//! The crate is `no_std` (with `alloc`) so that the combinatorial engine
//! can be embedded anywhere; the companion `pfpoly` crate provides the
//! command-line interface.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod cones;
pub mod ehrhart;
pub mod enumerative;
pub mod oracle;
pub mod partitions;
pub mod point;
pub mod poly;
pub mod polytope;

pub use point::{LinearInequality, Point};
pub use poly::{Polynomial, Rational};
