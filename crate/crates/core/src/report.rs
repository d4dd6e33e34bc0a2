//! The machine-readable analysis report: one JSON document per network,
//! with stable key order (struct order) and exact integer payloads.

use serde::{Deserialize, Serialize};

use crate::classify::{classify_by_binomial, classify_by_reactants, detect_acr, VarietyClass};
use crate::error::AnalysisError;
use crate::mass_action::{
    factor_common_monomial, normalized_residual, reactant_matrix, steady_state_polynomials,
    stoichiometric_matrix, RateAssignment, SteadyStatePolynomial,
};
use crate::network::Network;
use crate::oracle::{
    find_positive_steady_state, sample_rates, sample_variety, verify_class, OracleConfig,
    VarietySample,
};
use crate::pssv::{canonical_binomial, pssv_status, PssvStatus};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NetworkJson {
    pub species: Vec<String>,
    pub reactions: Vec<String>,
    pub canonical: String,
}

/// One mass-action term, `coeff * k_rate * x^exponents`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: i64,
    pub rate: usize,
    pub exponents: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BinomialJson {
    pub u: Vec<i64>,
    pub q: String,
    pub g: u32,
    /// Which rate ratio the coefficient multiplies: `k2/k1` or `k1/k2`.
    pub kappa: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PssvJson {
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tuning_ratio: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub binomial: Option<BinomialJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AcrJson {
    pub species: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassificationJson {
    pub class: VarietyClass,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub by_binomial: Option<VarietyClass>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub acr: Option<AcrJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleJson {
    pub rates: Vec<f64>,
    pub steady_state: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_sample_residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub class_verified: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub network: NetworkJson,
    pub stoichiometric_matrix: Vec<Vec<i64>>,
    pub reactant_matrix: Vec<Vec<i64>>,
    pub polynomials: Vec<Vec<TermJson>>,
    pub common_monomial: Vec<u32>,
    pub residual_polynomials: Vec<Vec<TermJson>>,
    pub pssv: PssvJson,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub classification: Option<ClassificationJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle: Option<OracleJson>,
}

#[derive(Clone, Debug, Default)]
pub struct AnalyzeOptions {
    /// Concrete rate constants; enables the oracle section.
    pub rates: Option<RateAssignment>,
    /// Run the oracle even without explicit rates (sampled from `seed`),
    /// including variety sampling and class fitting.
    pub verify: bool,
    pub seed: u64,
}

fn terms_json(polys: &[SteadyStatePolynomial]) -> Vec<Vec<TermJson>> {
    polys
        .iter()
        .map(|p| {
            p.terms
                .iter()
                .map(|t| TermJson {
                    coeff: t.coeff,
                    rate: t.rate_index,
                    exponents: t.monomial.exponents().to_vec(),
                })
                .collect()
        })
        .collect()
}

fn pssv_json(net: &Network) -> PssvJson {
    let status = pssv_status(net);
    let tag = match status {
        PssvStatus::NonemptyRateIndependent => "NonemptyRateIndependent",
        PssvStatus::EmptyAllRates => "EmptyAllRates",
        PssvStatus::TunedFullOrthant { .. } => "TunedFullOrthant",
        PssvStatus::NotTwoReaction { .. } => "NotTwoReaction",
    };
    let tuning_ratio = match &status {
        PssvStatus::TunedFullOrthant { ratio } => Some(ratio.to_string()),
        _ => None,
    };
    let binomial = canonical_binomial(net).map(|b| BinomialJson {
        u: b.u.clone(),
        q: b.q.to_string(),
        g: b.root_degree,
        kappa: if b.kappa_inverted { "k1/k2" } else { "k2/k1" }.to_string(),
    });
    PssvJson {
        status: tag.to_string(),
        tuning_ratio,
        binomial,
    }
}

fn classification_json(net: &Network) -> Result<Option<ClassificationJson>, AnalysisError> {
    if net.species_count() != 2 || net.reaction_count() != 2 {
        return Ok(None);
    }
    let class = classify_by_reactants(net)?;
    let by_binomial = canonical_binomial(net).map(|b| classify_by_binomial(&b));
    let acr = detect_acr(net)?.map(|r| AcrJson {
        species: net.species_names()[r.species_index].clone(),
        value: r.value.to_string(),
    });
    Ok(Some(ClassificationJson {
        class,
        by_binomial,
        acr,
    }))
}

fn oracle_json(
    net: &Network,
    options: &AnalyzeOptions,
) -> Result<Option<OracleJson>, AnalysisError> {
    if options.rates.is_none() && !options.verify {
        return Ok(None);
    }
    let cfg = OracleConfig {
        seed: options.seed,
        ..OracleConfig::default()
    };
    let rates = match &options.rates {
        Some(r) => {
            if r.len() != net.reaction_count() {
                return Err(AnalysisError::RateCountMismatch {
                    expected: net.reaction_count(),
                    found: r.len(),
                });
            }
            r.clone()
        }
        None => sample_rates(net.reaction_count(), &cfg, 0),
    };
    let polys = steady_state_polynomials(net);
    let steady_state = find_positive_steady_state(net, &rates, &cfg)?;
    let witness_residual = steady_state
        .as_ref()
        .map(|p| normalized_residual(&polys, &rates, p));

    let mut samples = None;
    let mut max_sample_residual = None;
    let mut class_verified = None;
    if options.verify && pssv_status(net).is_nonempty_rate_independent() {
        let sample = sample_variety(net, &rates, &cfg)?;
        samples = Some(sample.points.len());
        max_sample_residual = Some(sample.max_residual);
        class_verified = Some(verify_class(net, &sample));
    }
    Ok(Some(OracleJson {
        rates: rates.values().to_vec(),
        steady_state,
        witness_residual,
        samples,
        max_sample_residual,
        class_verified,
    }))
}

/// Run the full symbolic pipeline (plus the oracle when requested) and
/// assemble the report.
pub fn analyze(net: &Network, options: &AnalyzeOptions) -> Result<AnalysisReport, AnalysisError> {
    let polys = steady_state_polynomials(net);
    let (common, residuals) = factor_common_monomial(&polys, net.species_count());
    Ok(AnalysisReport {
        network: NetworkJson {
            species: net.species_names().to_vec(),
            reactions: net
                .to_string()
                .lines()
                .map(str::to_string)
                .collect(),
            canonical: net.canonical_key().replace('\n', ", "),
        },
        stoichiometric_matrix: stoichiometric_matrix(net).to_nested(),
        reactant_matrix: reactant_matrix(net).to_nested(),
        polynomials: terms_json(&polys),
        common_monomial: common.exponents().to_vec(),
        residual_polynomials: terms_json(&residuals),
        pssv: pssv_json(net),
        classification: classification_json(net)?,
        oracle: oracle_json(net, options)?,
    })
}

/// CSV for a variety sample: header `x,y` for two species (otherwise
/// `x1..xs`), one row per point, 17 significant digits.
pub fn sample_csv(sample: &VarietySample, n_species: usize) -> String {
    let mut out = String::new();
    if n_species == 2 {
        out.push_str("x,y\n");
    } else {
        let header: Vec<String> = (1..=n_species).map(|k| format!("x{k}")).collect();
        out.push_str(&header.join(","));
        out.push('\n');
    }
    for point in &sample.points {
        let row: Vec<String> = point.iter().map(|v| format!("{v:.16e}")).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
