//! Small polygons: construction, measurement, and verification.
//!
//! A polygon is *small* when its diameter (largest pairwise vertex distance)
//! equals 1. This crate builds the classical families of small polygons that
//! are extremal or near-extremal for width:
//!
//! * regular small n-gons and Reuleaux-derived equilateral n-gons
//!   ([`families::regular`], [`families::reuleaux_regular`]),
//! * the equilateral octagon of maximal width and its power-of-two
//!   generalizations ([`families::f8`], [`families::f_family`],
//!   [`families::g_family`]),
//! * coordinate fixtures for reference shapes ([`families::fixture`]).
//!
//! [`geometry`] holds the measurement engine (side heights, height graph,
//! width, diameter), [`bounds`] the closed-form width bounds, [`solvers`]
//! scalar root finding and the asymptotic series, and [`verify`] the
//! structural checks and seeded local-search evidence for optimality.

pub mod bounds;
pub mod families;
pub mod geometry;
pub mod solvers;
pub mod verify;
