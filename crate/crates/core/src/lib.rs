//! Symbolic and numeric analysis of mass-action chemical reaction networks.
//!
//! The crate builds steady-state polynomials with exact integer coefficients
//! and symbolic rate constants, decides whether a 2-reaction network has a
//! nonempty positive steady-state variety (PSSV), classifies the shape of
//! that variety for 2-species networks, enumerates all small networks up to
//! isomorphism, and cross-checks every symbolic answer against a numeric
//! oracle.
//!
//! Entry points:
//! - [`parse_network`] reads the one-reaction-per-line text format.
//! - [`mass_action::steady_state_polynomials`] builds the polynomial system.
//! - [`pssv::pssv_status`] and [`pssv::canonical_binomial`] decide PSSV
//!   nonemptiness for 2-reaction networks.
//! - [`classify::classify_by_reactants`] and [`classify::classify_by_binomial`]
//!   name the variety shape through two independent routes.
//! - [`enumeration::enumerate_networks`] generates the census universe.
//! - [`oracle`] finds and verifies steady states numerically.

pub mod classify;
pub mod enumeration;
pub mod error;
pub mod mass_action;
pub mod network;
pub mod oracle;
pub mod parse;
pub mod pssv;
pub mod report;

pub use classify::{classify_by_binomial, classify_by_reactants, detect_acr, AcrReport, VarietyClass};
pub use enumeration::{census, enumerate_complexes, enumerate_networks, CensusReport};
pub use error::AnalysisError;
pub use mass_action::{
    evaluate, factor_common_monomial, reactant_matrix, steady_state_polynomials,
    stoichiometric_matrix, IntMatrix, MassActionTerm, RateAssignment, SteadyStatePolynomial,
};
pub use network::{Complex, Network, NetworkError, Reaction, SpeciesSet};
pub use oracle::{
    find_positive_steady_state, sample_rates, sample_variety, verify_class, OracleConfig,
    VarietySample,
};
pub use parse::{parse_network, ParseError, ParseErrorKind};
pub use pssv::{
    canonical_binomial, columns_negatively_proportional, pssv_status, CanonicalBinomial,
    PssvStatus, Rational,
};
