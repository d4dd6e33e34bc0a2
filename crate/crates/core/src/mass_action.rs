//! Mass-action structure of a network: stoichiometric and reactant matrices
//! and the steady-state polynomial system they generate.
//!
//! Coefficients and exponents stay exact (integers); rate constants stay
//! symbolic (1-based indices into a [`RateAssignment`]). Numbers enter only
//! through [`evaluate`].

use std::fmt;

use crate::error::AnalysisError;
use crate::network::{Complex, Network};

/// Dense integer matrix, species rows x reaction columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>, // row-major
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == n_cols), "ragged rows");
        IntMatrix {
            rows: n_rows,
            cols: n_cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        assert!(row < self.rows && col < self.cols, "index out of range");
        self.data[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[i64] {
        &self.data[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> Vec<i64> {
        (0..self.rows).map(|r| self.get(r, col)).collect()
    }

    pub fn to_nested(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .data
            .iter()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", self.get(r, c))?;
            }
            write!(f, "]")?;
            if r + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// One mass-action addend: integer stoichiometric coefficient, one symbolic
/// rate constant, one monomial. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MassActionTerm {
    pub coeff: i64,
    pub rate_index: usize,
    pub monomial: Complex,
}

/// The steady-state polynomial of one species. Each reaction contributes at
/// most one term, whose monomial is that reaction's reactant complex; an
/// empty term list is the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteadyStatePolynomial {
    pub species_index: usize,
    pub terms: Vec<MassActionTerm>,
}

impl SteadyStatePolynomial {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Human-readable form like `-k1*x_A + 2*k2*x_B^2`.
    pub fn format_with(&self, species_names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, t) in self.terms.iter().enumerate() {
            let mag = t.coeff.unsigned_abs();
            if i == 0 {
                if t.coeff < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if t.coeff < 0 { " - " } else { " + " });
            }
            if mag != 1 {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&format!("k{}", t.rate_index));
            for (k, &e) in t.monomial.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                out.push_str(&format!("*x_{}", species_names[k]));
                if e > 1 {
                    out.push_str(&format!("^{e}"));
                }
            }
        }
        out
    }
}

/// Positive rate constants, one per reaction; `get` takes 1-based indices.
#[derive(Clone, Debug, PartialEq)]
pub struct RateAssignment {
    values: Vec<f64>,
}

impl RateAssignment {
    pub fn new(values: Vec<f64>) -> Result<Self, AnalysisError> {
        if values.iter().any(|&v| v <= 0.0 || v.is_nan() || !v.is_finite()) {
            return Err(AnalysisError::NonPositiveRate);
        }
        Ok(RateAssignment { values })
    }

    pub fn ones(n: usize) -> Self {
        RateAssignment {
            values: vec![1.0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, rate_index: usize) -> f64 {
        self.values[rate_index - 1]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Entry `(k, j)` is the net change of species `k` per occurrence of
/// reaction `j`: product minus reactant coefficient.
pub fn stoichiometric_matrix(net: &Network) -> IntMatrix {
    let rows = (0..net.species_count())
        .map(|k| {
            net.reactions()
                .iter()
                .map(|r| i64::from(r.product.exponent(k)) - i64::from(r.reactant.exponent(k)))
                .collect()
        })
        .collect();
    IntMatrix::from_rows(rows)
}

/// Column `j` is the reactant complex of reaction `j`; all entries >= 0.
pub fn reactant_matrix(net: &Network) -> IntMatrix {
    let rows = (0..net.species_count())
        .map(|k| {
            net.reactions()
                .iter()
                .map(|r| i64::from(r.reactant.exponent(k)))
                .collect()
        })
        .collect();
    IntMatrix::from_rows(rows)
}

/// One polynomial per species. Reaction `j` contributes the term
/// `N[k][j] * k_j * x^(reactant_j)` to species `k`; zero coefficients are
/// dropped, so a catalyst-only species gets fewer terms and a species with
/// no net change anywhere gets the zero polynomial.
pub fn steady_state_polynomials(net: &Network) -> Vec<SteadyStatePolynomial> {
    (0..net.species_count())
        .map(|k| {
            let terms = net
                .reactions()
                .iter()
                .filter_map(|r| {
                    let coeff =
                        i64::from(r.product.exponent(k)) - i64::from(r.reactant.exponent(k));
                    (coeff != 0).then(|| MassActionTerm {
                        coeff,
                        rate_index: r.rate_index,
                        monomial: r.reactant.clone(),
                    })
                })
                .collect();
            SteadyStatePolynomial {
                species_index: k,
                terms,
            }
        })
        .collect()
}

/// Factor the largest monomial dividing every term of every nonzero
/// polynomial. Returns the common exponent vector and the polynomials with
/// it divided out; `common.exponents()[i]` is the multiplicity of the
/// coordinate-hyperplane component `x_i = 0`. If all polynomials are zero
/// the common monomial is `0` and nothing changes.
pub fn factor_common_monomial(
    polys: &[SteadyStatePolynomial],
    n_species: usize,
) -> (Complex, Vec<SteadyStatePolynomial>) {
    let common = polys
        .iter()
        .flat_map(|p| p.terms.iter().map(|t| t.monomial.clone()))
        .reduce(|a, b| a.shared(&b))
        .unwrap_or_else(|| Complex::zero(n_species));
    let residuals = polys
        .iter()
        .map(|p| SteadyStatePolynomial {
            species_index: p.species_index,
            terms: p
                .terms
                .iter()
                .map(|t| MassActionTerm {
                    coeff: t.coeff,
                    rate_index: t.rate_index,
                    monomial: t.monomial.minus(&common),
                })
                .collect(),
        })
        .collect();
    (common, residuals)
}

/// Numeric value of a polynomial at a point, with the convention 0^0 = 1.
pub fn evaluate(poly: &SteadyStatePolynomial, rates: &RateAssignment, point: &[f64]) -> f64 {
    poly.terms
        .iter()
        .map(|t| t.coeff as f64 * rates.get(t.rate_index) * monomial_value(&t.monomial, point))
        .sum()
}

/// `point^monomial` with 0^0 = 1.
pub fn monomial_value(monomial: &Complex, point: &[f64]) -> f64 {
    assert_eq!(monomial.dim(), point.len(), "dimension mismatch");
    monomial
        .exponents()
        .iter()
        .zip(point)
        .map(|(&e, &x)| x.powi(e as i32))
        .product()
}

/// Largest magnitude of a single term of `poly` at `point`; the residual
/// scale `1 + term_scale` avoids false failures at large coordinates.
pub fn term_scale(poly: &SteadyStatePolynomial, rates: &RateAssignment, point: &[f64]) -> f64 {
    poly.terms
        .iter()
        .map(|t| (t.coeff as f64 * rates.get(t.rate_index) * monomial_value(&t.monomial, point)).abs())
        .fold(0.0, f64::max)
}

/// Max over species of |f_i(point)| / (1 + largest term magnitude of f_i).
pub fn normalized_residual(
    polys: &[SteadyStatePolynomial],
    rates: &RateAssignment,
    point: &[f64],
) -> f64 {
    polys
        .iter()
        .map(|p| evaluate(p, rates, point).abs() / (1.0 + term_scale(p, rates, point)))
        .fold(0.0, f64::max)
}
