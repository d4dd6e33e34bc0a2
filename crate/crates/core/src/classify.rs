//! Shape classification of the PSSV for 2-species, 2-reaction networks.
//!
//! Two independent routes name the curve: [`classify_by_reactants`] reads
//! molecularity and support conditions straight off the reactant complexes,
//! and [`classify_by_binomial`] pattern-matches the normalized exponent
//! vector of the canonical binomial. For at-most-bimolecular networks the
//! two agree; for higher molecularity the reactant conditions are not
//! exhaustive and the binomial route is authoritative.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::AnalysisError;
use crate::mass_action::RateAssignment;
use crate::network::{Complex, Network};
use crate::pssv::{canonical_binomial, pssv_status, CanonicalBinomial, PssvStatus, Rational};

/// The shape of the positive steady-state variety.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VarietyClass {
    #[serde(rename = "EmptyPSSV")]
    EmptyPssv,
    TunedFullOrthant,
    AxisParallelLine,
    LineThroughOrigin,
    Parabola,
    Hyperbola,
    SemicubicalParabola,
    Cubic,
    OtherToricCurve,
}

impl VarietyClass {
    pub const ALL: [VarietyClass; 9] = [
        VarietyClass::EmptyPssv,
        VarietyClass::TunedFullOrthant,
        VarietyClass::AxisParallelLine,
        VarietyClass::LineThroughOrigin,
        VarietyClass::Parabola,
        VarietyClass::Hyperbola,
        VarietyClass::SemicubicalParabola,
        VarietyClass::Cubic,
        VarietyClass::OtherToricCurve,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VarietyClass::EmptyPssv => "EmptyPSSV",
            VarietyClass::TunedFullOrthant => "TunedFullOrthant",
            VarietyClass::AxisParallelLine => "AxisParallelLine",
            VarietyClass::LineThroughOrigin => "LineThroughOrigin",
            VarietyClass::Parabola => "Parabola",
            VarietyClass::Hyperbola => "Hyperbola",
            VarietyClass::SemicubicalParabola => "SemicubicalParabola",
            VarietyClass::Cubic => "Cubic",
            VarietyClass::OtherToricCurve => "OtherToricCurve",
        }
    }

    /// Exponents `(p, q)` of the defining relation `x^p * y^q = c` for the
    /// named curve classes, in the orientation of the class name.
    pub fn relation_exponents(self) -> Option<(i64, i64)> {
        match self {
            VarietyClass::AxisParallelLine => Some((1, 0)),
            VarietyClass::LineThroughOrigin => Some((1, -1)),
            VarietyClass::Parabola => Some((2, -1)),
            VarietyClass::Hyperbola => Some((1, 1)),
            VarietyClass::SemicubicalParabola => Some((3, -2)),
            VarietyClass::Cubic => Some((3, -1)),
            _ => None,
        }
    }
}

impl fmt::Display for VarietyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A positive constant of the form `q * k2/k1` (or `q * k1/k2`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicConstant {
    pub q: Rational,
    pub kappa_inverted: bool,
}

impl SymbolicConstant {
    pub fn value(&self, rates: &RateAssignment) -> f64 {
        use num_traits::ToPrimitive;
        let ratio = if self.kappa_inverted {
            rates.get(1) / rates.get(2)
        } else {
            rates.get(2) / rates.get(1)
        };
        self.q.to_f64().expect("small rational") * ratio
    }
}

impl fmt::Display for SymbolicConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::One;
        let kappa = if self.kappa_inverted { "k1/k2" } else { "k2/k1" };
        if self.q.is_one() {
            f.write_str(kappa)
        } else {
            write!(f, "({})*{kappa}", self.q)
        }
    }
}

/// Absolute concentration robustness: one species holds the same
/// concentration in every positive steady state. Only axis-parallel-line
/// varieties have this property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcrReport {
    pub species_index: usize,
    pub value: SymbolicConstant,
}

fn check_two_by_two(net: &Network) -> Result<(), AnalysisError> {
    if net.species_count() != 2 {
        return Err(AnalysisError::NotTwoSpecies(net.species_count()));
    }
    if net.reaction_count() != 2 {
        return Err(AnalysisError::NotTwoReactions(net.reaction_count()));
    }
    Ok(())
}

/// Classify by the reactant-complex conditions.
///
/// The PSSV status is consulted first; the shape conditions below presuppose
/// a rate-independent nonempty variety. The condition sets are mutually
/// exclusive, so the match order only fixes determinism. Networks beyond the
/// covered molecularity patterns fall through to `OtherToricCurve`.
pub fn classify_by_reactants(net: &Network) -> Result<VarietyClass, AnalysisError> {
    check_two_by_two(net)?;
    match pssv_status(net) {
        PssvStatus::EmptyAllRates => return Ok(VarietyClass::EmptyPssv),
        PssvStatus::TunedFullOrthant { .. } => return Ok(VarietyClass::TunedFullOrthant),
        PssvStatus::NonemptyRateIndependent => {}
        PssvStatus::NotTwoReaction { .. } => unreachable!("checked above"),
    }
    let r1 = &net.reactions()[0].reactant;
    let r2 = &net.reactions()[1].reactant;
    Ok(shape_from_reactants(r1, r2))
}

fn shape_from_reactants(r1: &Complex, r2: &Complex) -> VarietyClass {
    let is_ab = |c: &Complex| c.exponents() == [1, 1];
    let either = |f: &dyn Fn(&Complex, &Complex) -> bool| f(r1, r2) || f(r2, r1);

    let m1 = r1.molecularity();
    let m2 = r2.molecularity();
    let disjoint = r1.support().is_disjoint(&r2.support());
    let molecularities = |a: u32, b: u32| (m1 == a && m2 == b) || (m1 == b && m2 == a);

    if either(&|a, b| is_ab(a) && b.molecularity() == 1) {
        VarietyClass::AxisParallelLine
    } else if either(&|a, b| is_ab(a) && b.is_zero()) {
        VarietyClass::Hyperbola
    } else if molecularities(2, 1) && disjoint {
        VarietyClass::Parabola
    } else if molecularities(3, 2) && disjoint {
        VarietyClass::SemicubicalParabola
    } else if molecularities(3, 1) && disjoint {
        VarietyClass::Cubic
    } else if m1 == m2
        && !r1.support().is_empty()
        && !r2.support().is_empty()
        && r1.support() != r2.support()
    {
        VarietyClass::LineThroughOrigin
    } else {
        VarietyClass::OtherToricCurve
    }
}

/// Classify from the canonical binomial alone: match the normalized `u`
/// against the named relation exponents, up to swapping the two species.
pub fn classify_by_binomial(b: &CanonicalBinomial) -> VarietyClass {
    if b.u.len() != 2 {
        return VarietyClass::OtherToricCurve;
    }
    let direct = (b.u[0], b.u[1]);
    let swapped = normalize_sign((b.u[1], b.u[0]));
    for class in VarietyClass::ALL {
        if let Some(pattern) = class.relation_exponents() {
            if direct == pattern || swapped == pattern {
                return class;
            }
        }
    }
    VarietyClass::OtherToricCurve
}

fn normalize_sign(u: (i64, i64)) -> (i64, i64) {
    let first_nonzero = if u.0 != 0 { u.0 } else { u.1 };
    if first_nonzero < 0 {
        (-u.0, -u.1)
    } else {
        u
    }
}

/// Report the ACR species and its symbolic steady-state value when the
/// variety is an axis-parallel line; `None` for every other class.
pub fn detect_acr(net: &Network) -> Result<Option<AcrReport>, AnalysisError> {
    if classify_by_reactants(net)? != VarietyClass::AxisParallelLine {
        return Ok(None);
    }
    let b = canonical_binomial(net).expect("axis-parallel line implies nonempty status");
    // u is a unit vector here: the relation is x_fixed = c directly.
    debug_assert_eq!(b.root_degree, 1);
    let species_index = b
        .u
        .iter()
        .position(|&v| v != 0)
        .expect("binomial exponent is nonzero");
    debug_assert_eq!(b.u[species_index], 1);
    Ok(Some(AcrReport {
        species_index,
        value: SymbolicConstant {
            q: b.q,
            kappa_inverted: b.kappa_inverted,
        },
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_network;

    fn net(text: &str) -> Network {
        parse_network(text).unwrap()
    }

    #[test]
    fn reactant_classification_examples() {
        assert_eq!(
            classify_by_reactants(&net("A -> 2B\n2B -> A")),
            Ok(VarietyClass::Parabola)
        );
        assert_eq!(
            classify_by_reactants(&net("A + B -> 0\n0 -> A + B")),
            Ok(VarietyClass::Hyperbola)
        );
        assert_eq!(
            classify_by_reactants(&net("3B -> A + 2B\n2A -> A + B")),
            Ok(VarietyClass::SemicubicalParabola)
        );
        // satisfies the nonemptiness condition but none of the named shapes
        assert_eq!(
            classify_by_reactants(&net("4A -> 3A + B\n2B -> A + B")),
            Ok(VarietyClass::OtherToricCurve)
        );
    }

    #[test]
    fn reactant_classification_linear_classes() {
        assert_eq!(
            classify_by_reactants(&net("A + B -> 2B\nB -> A")),
            Ok(VarietyClass::AxisParallelLine)
        );
        assert_eq!(
            classify_by_reactants(&net("A -> B\nB -> A")),
            Ok(VarietyClass::LineThroughOrigin)
        );
        // equal molecularity, distinct but overlapping supports
        assert_eq!(
            classify_by_reactants(&net("2A -> A + B\nA + B -> 2A")),
            Ok(VarietyClass::LineThroughOrigin)
        );
        assert_eq!(
            classify_by_reactants(&net("A -> 3B\n3B -> A")),
            Ok(VarietyClass::Cubic)
        );
    }

    #[test]
    fn reactant_classification_defers_to_status() {
        assert_eq!(
            classify_by_reactants(&net("A -> A + B\nB -> A + B")),
            Ok(VarietyClass::EmptyPssv)
        );
        assert_eq!(
            classify_by_reactants(&net("A + B -> 2A\nA + B -> 2B")),
            Ok(VarietyClass::TunedFullOrthant)
        );
    }

    #[test]
    fn reactant_classification_checks_dimensions() {
        assert_eq!(
            classify_by_reactants(&net("A -> 2A\nA -> 0\n2A -> A")),
            Err(AnalysisError::NotTwoSpecies(1))
        );
        assert_eq!(
            classify_by_reactants(&net("A -> B\nB -> A\nA -> 2B")),
            Err(AnalysisError::NotTwoReactions(3))
        );
    }

    #[test]
    fn binomial_classification_examples() {
        let b = canonical_binomial(&net("A -> 2B\n2B -> A")).unwrap();
        assert_eq!(b.u, vec![1, -2]);
        assert_eq!(classify_by_binomial(&b), VarietyClass::Parabola);

        let b = canonical_binomial(&net("4A -> 3A + B\n2B -> A + B")).unwrap();
        assert_eq!(b.u, vec![2, -1]);
        assert_eq!(classify_by_binomial(&b), VarietyClass::Parabola);

        let b = canonical_binomial(&net("A + B -> 0\n0 -> A + B")).unwrap();
        assert_eq!(b.u, vec![1, 1]);
        assert_eq!(classify_by_binomial(&b), VarietyClass::Hyperbola);
    }

    #[test]
    fn binomial_classification_degree_three() {
        let b = canonical_binomial(&net("3B -> A + 2B\n2A -> A + B")).unwrap();
        assert_eq!(classify_by_binomial(&b), VarietyClass::SemicubicalParabola);

        let b = canonical_binomial(&net("A -> 3B\n3B -> A")).unwrap();
        assert_eq!(classify_by_binomial(&b), VarietyClass::Cubic);
    }

    #[test]
    fn classifiers_are_swap_invariant() {
        let pairs = [
            ("A -> 2B\n2B -> A", "B -> 2A\n2A -> B"),
            ("A + B -> 2B\nB -> A", "A + B -> 2A\nA -> B"),
            ("3B -> A + 2B\n2A -> A + B", "3A -> 2A + B\n2B -> A + B"),
        ];
        for (fwd, swapped) in pairs {
            let a = net(fwd);
            let b = net(swapped);
            assert_eq!(classify_by_reactants(&a), classify_by_reactants(&b));
            assert_eq!(
                classify_by_binomial(&canonical_binomial(&a).unwrap()),
                classify_by_binomial(&canonical_binomial(&b).unwrap())
            );
        }
    }

    #[test]
    fn binomial_route_extends_to_translated_networks() {
        // reduced reactants meet a named condition, so the binomial route
        // classifies the lifted network even though the raw reactants do not
        use crate::network::Complex;
        let base = net("A -> 2B\n2B -> A");
        for m in [[1u32, 0], [2, 1], [3, 3]] {
            let lifted = base.translate(&Complex::new(m.to_vec()));
            assert_eq!(
                classify_by_reactants(&lifted).unwrap(),
                VarietyClass::OtherToricCurve
            );
            let b = canonical_binomial(&lifted).unwrap();
            assert_eq!(classify_by_binomial(&b), VarietyClass::Parabola);
        }
    }

    #[test]
    fn acr_examples() {
        let report = detect_acr(&net("A + B -> 2B\nB -> A")).unwrap().unwrap();
        assert_eq!(report.species_index, 0); // species A is fixed
        assert_eq!(report.value.to_string(), "k2/k1");
        let rates = RateAssignment::new(vec![2.0, 3.0]).unwrap();
        assert!((report.value.value(&rates) - 1.5).abs() < 1e-15);

        assert_eq!(detect_acr(&net("A -> 2B\n2B -> A")), Ok(None));
        assert_eq!(detect_acr(&net("A + B -> 0\n0 -> A + B")), Ok(None));
    }
}
