//! Positive steady-state variety (PSSV) analysis for 2-reaction networks.
//!
//! For two reactions every steady-state polynomial is a binomial built from
//! the same two monomials, so nonemptiness of the PSSV reduces to a sign and
//! proportionality condition on the stoichiometric matrix, and the positive
//! part of the variety collapses to a single monomial relation `x^u = c`.
//! Decisions here are symbolic: they never branch on rate values.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::AnalysisError;
use crate::mass_action::{stoichiometric_matrix, IntMatrix, RateAssignment};
use crate::network::Network;

/// Exact scalar used for column ratios and tuning ratios.
pub type Rational = num_rational::Ratio<i64>;

/// Outcome of the nonemptiness test for a 2-reaction network.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PssvStatus {
    /// Nonempty for every choice of positive rate constants.
    NonemptyRateIndependent,
    /// Empty for every choice of positive rate constants.
    EmptyAllRates,
    /// Identical reactants with negatively proportional columns: the PSSV is
    /// the whole positive orthant exactly when `k1 = ratio * k2`, and empty
    /// for every other rate choice.
    TunedFullOrthant { ratio: Rational },
    /// The test only applies to 2-reaction networks.
    NotTwoReaction { found: usize },
}

impl PssvStatus {
    pub fn is_nonempty_rate_independent(&self) -> bool {
        matches!(self, PssvStatus::NonemptyRateIndependent)
    }
}

impl fmt::Display for PssvStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PssvStatus::NonemptyRateIndependent => {
                write!(f, "nonempty for all rate constants")
            }
            PssvStatus::EmptyAllRates => write!(f, "empty for all rate constants"),
            PssvStatus::TunedFullOrthant { ratio } => {
                write!(f, "full positive orthant exactly when k1 = {ratio}*k2")
            }
            PssvStatus::NotTwoReaction { found } => {
                write!(f, "not a 2-reaction network ({found} reactions)")
            }
        }
    }
}

/// If the two columns of `m` are nonzero negative multiples of each other,
/// return the `lambda > 0` with `col2 = -lambda * col1`.
pub fn columns_negatively_proportional(m: &IntMatrix) -> Result<Option<Rational>, AnalysisError> {
    if m.cols() != 2 {
        return Err(AnalysisError::NotTwoColumns(m.cols()));
    }
    let col1 = m.column(0);
    let col2 = m.column(1);
    let Some(pivot) = col1.iter().position(|&v| v != 0) else {
        return Ok(None); // zero column
    };
    if col2[pivot] == 0 {
        return Ok(None);
    }
    let lambda = -Rational::new(col2[pivot], col1[pivot]);
    if !lambda.is_positive() {
        return Ok(None);
    }
    let consistent = (0..col1.len()).all(|k| {
        Rational::from_integer(col2[k]) == -lambda * Rational::from_integer(col1[k])
    });
    Ok(consistent.then_some(lambda))
}

/// Decide PSSV nonemptiness for a 2-reaction network: nonempty independent
/// of rates iff the stoichiometric columns are negative multiples of each
/// other and the reactant complexes differ; tuned-orthant when the reactants
/// coincide; empty for all rates otherwise.
pub fn pssv_status(net: &Network) -> PssvStatus {
    if net.reaction_count() != 2 {
        return PssvStatus::NotTwoReaction {
            found: net.reaction_count(),
        };
    }
    let n = stoichiometric_matrix(net);
    let lambda = columns_negatively_proportional(&n).expect("2 reactions give 2 columns");
    let reactants_equal = net.reactions()[0].reactant == net.reactions()[1].reactant;
    match (lambda, reactants_equal) {
        (Some(_), false) => PssvStatus::NonemptyRateIndependent,
        (Some(ratio), true) => PssvStatus::TunedFullOrthant { ratio },
        (None, _) => PssvStatus::EmptyAllRates,
    }
}

/// The single monomial relation cutting out the positive part of the
/// steady-state variety of a 2-reaction network: `x^u = c` on `x > 0`.
///
/// `u` is the reactant exponent difference divided by the gcd `g` of its
/// entries, signed so the first nonzero entry is positive. Dividing by `g`
/// keeps the positive solution set intact because positive real roots always
/// exist. The coefficient is `c = (q * k2/k1)^(1/g)`, with the rate ratio
/// flipped to `k1/k2` when the sign normalization inverted the relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalBinomial {
    pub u: Vec<i64>,
    pub q: Rational,
    pub root_degree: u32,
    pub kappa_inverted: bool,
}

impl CanonicalBinomial {
    /// Numeric value of `c` under a concrete rate assignment.
    pub fn coefficient_value(&self, rates: &RateAssignment) -> f64 {
        let ratio = if self.kappa_inverted {
            rates.get(1) / rates.get(2)
        } else {
            rates.get(2) / rates.get(1)
        };
        let base = self.q.to_f64().expect("small rational") * ratio;
        base.powf(1.0 / f64::from(self.root_degree))
    }

    /// Symbolic form of `c`, e.g. `k2/k1` or `((1/2)*k1/k2)^(1/3)`.
    pub fn coefficient_string(&self) -> String {
        let kappa = if self.kappa_inverted { "k1/k2" } else { "k2/k1" };
        let base = if self.q == Rational::one() {
            kappa.to_string()
        } else {
            format!("({})*{kappa}", self.q)
        };
        if self.root_degree == 1 {
            base
        } else {
            format!("({base})^(1/{})", self.root_degree)
        }
    }

    /// The relation with negative exponents moved to the right-hand side,
    /// e.g. `x_A = k2/k1 * x_B^2`.
    pub fn relation_string(&self, species_names: &[String]) -> String {
        let side = |positive: bool| {
            self.u
                .iter()
                .enumerate()
                .filter(|(_, &e)| if positive { e > 0 } else { e < 0 })
                .map(|(k, &e)| {
                    let mag = e.unsigned_abs();
                    if mag == 1 {
                        format!("x_{}", species_names[k])
                    } else {
                        format!("x_{}^{mag}", species_names[k])
                    }
                })
                .collect::<Vec<_>>()
                .join("*")
        };
        let lhs = side(true);
        let rhs = side(false);
        let c = self.coefficient_string();
        if rhs.is_empty() {
            format!("{lhs} = {c}")
        } else {
            format!("{lhs} = {c} * {rhs}")
        }
    }
}

/// The canonical binomial of a 2-reaction network with a rate-independent
/// nonempty PSSV; `None` for any other status.
pub fn canonical_binomial(net: &Network) -> Option<CanonicalBinomial> {
    if !pssv_status(net).is_nonempty_rate_independent() {
        return None;
    }
    let n = stoichiometric_matrix(net);
    let lambda = columns_negatively_proportional(&n)
        .expect("2 columns")
        .expect("status guarantees proportional columns");

    // x^(b1 - b2) = lambda * k2/k1 from any nonzero row; zero rows carry no
    // coefficient information and are skipped inside the lambda computation.
    let d = net.reactions()[0]
        .reactant
        .signed_difference(&net.reactions()[1].reactant);
    debug_assert!(d.iter().any(|&v| v != 0), "distinct reactants");

    let g = d
        .iter()
        .map(|v| v.unsigned_abs())
        .fold(0u64, |acc, v| acc.gcd(&v));
    let mut u: Vec<i64> = d.iter().map(|&v| v / g as i64).collect();
    let first_nonzero = u.iter().find(|&&v| v != 0).copied().unwrap();
    let kappa_inverted = first_nonzero < 0;
    let q = if kappa_inverted {
        for v in &mut u {
            *v = -*v;
        }
        lambda.recip()
    } else {
        lambda
    };
    Some(CanonicalBinomial {
        u,
        q,
        root_degree: g as u32,
        kappa_inverted,
    })
}
