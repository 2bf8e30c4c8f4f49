//! Exact combinatorial invariants of arithmetically Cohen-Macaulay space
//! curves and the gonality prediction built on them.
//!
//! The pipeline: an [`HVector`] gives the curve's numerical invariants and
//! its biliaison type; linking by the complete intersection `(s, t)` and
//! splitting the linked type at its gaps yields a [`PicardModel`] of the
//! minimal-degree surface; the quadratic form `φ` on that lattice drives the
//! exhaustive search for Bogomolov-destabilizing divisor classes, and
//! [`predict_gonality`] assembles the final report.

pub mod biliaison;
pub mod bounds;
pub mod error;
pub mod gonality;
pub mod hvector;
pub mod picard;
pub mod quadform;
pub mod walkthrough;

pub use biliaison::{
    ci_hvector, enumerate_s_basic, enumerate_s_minimal, link_hvector, BiliaisonType,
    GapDecomposition,
};
pub use bounds::{verify_quadform_bounds, verify_range, VerificationReport};
pub use error::{Error, Result};
pub use gonality::{
    decreasing_type_hvectors, destabilizer_search, predict_gonality, scan_exceptions,
    secant_degree, DestabilizerCandidate, GonalityReport, PencilClass, ScanHit, DELTA_POS_A,
    DELTA_POS_B,
};
pub use hvector::{CurveInvariants, HVector, SecantCase, SecantTag, Speciality};
pub use picard::{DivisorClass, PicardModel};
