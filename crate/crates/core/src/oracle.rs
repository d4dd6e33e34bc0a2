//! Numeric ground truth for the symbolic analysis.
//!
//! The oracle samples rate constants, finds or refutes positive steady
//! states by solving the rate-weighted system directly (never consulting the
//! symbolic status), sweeps points along the variety, and fits sampled
//! points against the canonical curve equations. All randomness is derived
//! from explicit seeds so runs reproduce bit-identically.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::classify::{classify_by_binomial, classify_by_reactants, detect_acr, VarietyClass};
use crate::error::AnalysisError;
use crate::mass_action::{
    normalized_residual, steady_state_polynomials, stoichiometric_matrix, RateAssignment,
};
use crate::network::Network;
use crate::pssv::{canonical_binomial, pssv_status, PssvStatus};

/// Maximum relative spread tolerated when fitting a curve constant to
/// sampled points.
pub const CLASS_FIT_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug)]
pub struct OracleConfig {
    pub seed: u64,
    pub rate_low: f64,
    pub rate_high: f64,
    pub search_box: f64,
    pub tolerance: f64,
    pub samples: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            seed: 0,
            rate_low: 0.1,
            rate_high: 10.0,
            search_box: 100.0,
            tolerance: 1e-9,
            samples: 64,
        }
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn stream_seed(seed: u64, draw: u64) -> u64 {
    splitmix64(seed ^ splitmix64(draw.wrapping_add(0x5155_5555_5555_5555)))
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn log_uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    (lo.ln() + rng.random::<f64>() * (hi.ln() - lo.ln())).exp()
}

/// Log-uniform rate constants in `[rate_low, rate_high]`, a deterministic
/// function of `(cfg.seed, draw)`.
pub fn sample_rates(n_reactions: usize, cfg: &OracleConfig, draw: u64) -> RateAssignment {
    assert!(
        0.0 < cfg.rate_low && cfg.rate_low <= cfg.rate_high,
        "rate bounds must satisfy 0 < low <= high"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(stream_seed(cfg.seed, draw));
    let values = (0..n_reactions)
        .map(|_| log_uniform(&mut rng, cfg.rate_low, cfg.rate_high))
        .collect();
    RateAssignment::new(values).expect("log-uniform values are positive")
}

/// Per-network rate stream: the seed is mixed with a hash of the canonical
/// form, so concurrent runs over many networks reproduce bit-identically
/// regardless of iteration order.
pub fn network_rates(net: &Network, cfg: &OracleConfig, draw: u64) -> RateAssignment {
    let mut keyed = cfg.clone();
    keyed.seed = cfg.seed ^ fnv1a(net.canonical_key().as_bytes());
    sample_rates(net.reaction_count(), &keyed, draw)
}

/// Find a strictly positive steady state, or report that none exists.
///
/// Two-reaction networks (any species count) are solved through the binomial
/// structure of the rate-weighted system; one-species networks (any reaction
/// count) by a sign-change scan with bisection refinement over
/// `[1/search_box, search_box]`. Returned points always satisfy every
/// polynomial to `cfg.tolerance` (normalized).
pub fn find_positive_steady_state(
    net: &Network,
    rates: &RateAssignment,
    cfg: &OracleConfig,
) -> Result<Option<Vec<f64>>, AnalysisError> {
    if rates.len() != net.reaction_count() {
        return Err(AnalysisError::RateCountMismatch {
            expected: net.reaction_count(),
            found: rates.len(),
        });
    }
    if net.reaction_count() == 2 {
        Ok(solve_two_reaction(net, rates, cfg))
    } else if net.species_count() == 1 {
        Ok(scan_univariate(net, rates, cfg))
    } else {
        Err(AnalysisError::Unsupported(format!(
            "{} species and {} reactions",
            net.species_count(),
            net.reaction_count()
        )))
    }
}

/// Every steady-state equation of a 2-reaction network is
/// `c0*k1*x^b1 + c2*k2*x^b2 = 0`. At a positive point each nonzero equation
/// forces `x^(b1-b2)` to a specific positive value, so a steady state exists
/// iff all rows force the same value, which one coordinate then realizes.
fn solve_two_reaction(net: &Network, rates: &RateAssignment, cfg: &OracleConfig) -> Option<Vec<f64>> {
    let s = net.species_count();
    let n = stoichiometric_matrix(net);
    let d = net.reactions()[0]
        .reactant
        .signed_difference(&net.reactions()[1].reactant);

    let mut pivot_row: Option<usize> = None;
    for k in 0..s {
        let (c0, c2) = (n.get(k, 0), n.get(k, 1));
        match (c0 == 0, c2 == 0) {
            (true, true) => continue,
            // a monomial equation has no positive zero
            (true, false) | (false, true) => return None,
            (false, false) => {
                if c0.signum() == c2.signum() {
                    return None; // forced value of x^d would be negative
                }
                if let Some(p) = pivot_row {
                    // rows must force the same value: c2[k]/c0[k] = c2[p]/c0[p]
                    if n.get(k, 1) * n.get(p, 0) != n.get(p, 1) * n.get(k, 0) {
                        return None;
                    }
                } else {
                    pivot_row = Some(k);
                }
            }
        }
    }

    let mut point = vec![1.0; s];
    if let Some(p) = pivot_row {
        let target = -(n.get(p, 1) as f64 * rates.get(2)) / (n.get(p, 0) as f64 * rates.get(1));
        if let Some(pivot) = d.iter().position(|&v| v != 0) {
            point[pivot] = target.powf(1.0 / d[pivot] as f64);
        }
        // identical reactants (d = 0): the residual check below decides
        // whether the rates are tuned so that every positive point works.
    }
    let polys = steady_state_polynomials(net);
    (normalized_residual(&polys, rates, &point) <= cfg.tolerance).then_some(point)
}

fn scan_univariate(net: &Network, rates: &RateAssignment, cfg: &OracleConfig) -> Option<Vec<f64>> {
    let polys = steady_state_polynomials(net);
    let f = |x: f64| crate::mass_action::evaluate(&polys[0], rates, &[x]);
    let accept = |x: f64| normalized_residual(&polys, rates, &[x]) <= cfg.tolerance;

    let (lo, hi) = (1.0 / cfg.search_box, cfg.search_box);
    const GRID: usize = 4096;
    let grid_x = |i: usize| (lo.ln() + i as f64 / (GRID - 1) as f64 * (hi.ln() - lo.ln())).exp();

    let mut prev_x = grid_x(0);
    let mut prev_f = f(prev_x);
    if accept(prev_x) {
        return Some(vec![prev_x]);
    }
    for i in 1..GRID {
        let x = grid_x(i);
        let fx = f(x);
        if accept(x) {
            return Some(vec![x]);
        }
        if prev_f.signum() != fx.signum() {
            let root = bisect(&f, prev_x, x);
            if accept(root) {
                return Some(vec![root]);
            }
        }
        prev_x = x;
        prev_f = fx;
    }
    None
}

fn bisect(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let mut fa = f(a);
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if (b - a) <= f64::EPSILON * m.abs() {
            return m;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if fa.signum() == fm.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// Points on the positive steady-state variety.
#[derive(Clone, Debug, PartialEq)]
pub struct VarietySample {
    pub points: Vec<Vec<f64>>,
    pub max_residual: f64,
}

/// Sample `cfg.samples` points of the variety by sweeping the free
/// coordinate over a log grid on `[1/search_box, search_box]` and solving
/// the canonical binomial for the dependent coordinate. Extra free
/// coordinates (three or more species) are drawn log-uniformly from the
/// seeded stream.
pub fn sample_variety(
    net: &Network,
    rates: &RateAssignment,
    cfg: &OracleConfig,
) -> Result<VarietySample, AnalysisError> {
    if rates.len() != net.reaction_count() {
        return Err(AnalysisError::RateCountMismatch {
            expected: net.reaction_count(),
            found: rates.len(),
        });
    }
    let Some(binomial) = canonical_binomial(net) else {
        return Err(AnalysisError::EmptyPssv);
    };
    let s = net.species_count();
    let u = &binomial.u;
    let c = binomial.coefficient_value(rates);
    let dependent = u.iter().position(|&v| v != 0).expect("u is nonzero");
    let free: Vec<usize> = (0..s).filter(|&k| k != dependent).collect();

    let polys = steady_state_polynomials(net);
    let (lo, hi) = (1.0 / cfg.search_box, cfg.search_box);
    let count = cfg.samples.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(stream_seed(cfg.seed, 0x0076_6172_6965_7479));

    let mut points = Vec::with_capacity(count);
    let mut max_residual: f64 = 0.0;
    for i in 0..count {
        let mut p = vec![1.0; s];
        if let Some(&first_free) = free.first() {
            let t = if count == 1 {
                0.5
            } else {
                i as f64 / (count - 1) as f64
            };
            p[first_free] = (lo.ln() + t * (hi.ln() - lo.ln())).exp();
        }
        for &k in free.iter().skip(1) {
            p[k] = log_uniform(&mut rng, lo, hi);
        }
        let rest: f64 = free
            .iter()
            .filter(|&&k| u[k] != 0)
            .map(|&k| p[k].powi(u[k] as i32))
            .product();
        p[dependent] = (c / rest).powf(1.0 / u[dependent] as f64);
        max_residual = max_residual.max(normalized_residual(&polys, rates, &p));
        points.push(p);
    }
    Ok(VarietySample {
        points,
        max_residual,
    })
}

/// Best-fit constant for `prod x_k^(u_k) = c` over the sample (geometric
/// mean of the pointwise estimates) and the worst relative misfit.
fn fit_relation(points: &[Vec<f64>], u: &[i64]) -> (f64, f64) {
    let logs: Vec<f64> = points
        .iter()
        .map(|p| u.iter().zip(p).map(|(&e, &x)| e as f64 * x.ln()).sum())
        .collect();
    let mean = logs.iter().sum::<f64>() / logs.len() as f64;
    let c = mean.exp();
    let max_rel = logs
        .iter()
        .map(|&l| ((l.exp() - c) / c).abs())
        .fold(0.0, f64::max);
    (c, max_rel)
}

/// True iff the sampled points fit the canonical equation of the class
/// named by [`classify_by_binomial`], with the constant fit by geometric
/// mean and worst relative misfit at most [`CLASS_FIT_TOLERANCE`].
pub fn verify_class(net: &Network, sample: &VarietySample) -> bool {
    let Some(binomial) = canonical_binomial(net) else {
        return false;
    };
    if sample.points.is_empty() {
        return false;
    }
    let (_, misfit) = fit_relation(&sample.points, &binomial.u);
    misfit <= CLASS_FIT_TOLERANCE
}

/// Test a sample against an arbitrary named class, trying both species
/// orientations of its canonical equation.
pub fn fits_class(sample: &VarietySample, class: VarietyClass) -> bool {
    let Some((p, q)) = class.relation_exponents() else {
        return false;
    };
    if sample.points.is_empty() {
        return false;
    }
    [[p, q], [q, p]]
        .iter()
        .any(|u| fit_relation(&sample.points, u).1 <= CLASS_FIT_TOLERANCE)
}

/// One named check of the oracle agreement suite.
#[derive(Clone, Debug)]
pub struct SuiteCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Run the full oracle agreement suite over all genuine 2-species,
/// 2-reaction networks at the given molecularity bound.
pub fn run_verification_suite(
    cfg: &OracleConfig,
    max_molecularity: u32,
    draws: u64,
) -> Vec<SuiteCheck> {
    let nets = crate::enumeration::enumerate_networks(max_molecularity);
    let mut checks = Vec::new();

    // Symbolic classifier agreement.
    {
        let mut mismatches = 0usize;
        let mut other_curves = 0usize;
        for net in &nets {
            let by_reactants = classify_by_reactants(net).expect("census networks are 2x2");
            if let Some(b) = canonical_binomial(net) {
                let by_binomial = classify_by_binomial(&b);
                if by_reactants == VarietyClass::OtherToricCurve {
                    other_curves += 1;
                } else if by_reactants != by_binomial {
                    mismatches += 1;
                }
            }
        }
        let bimolecular_clean = max_molecularity > 2 || other_curves == 0;
        checks.push(SuiteCheck {
            name: "classifier-agreement",
            passed: mismatches == 0 && bimolecular_clean,
            detail: format!(
                "{} networks, {mismatches} route disagreements, {other_curves} unnamed nonempty varieties",
                nets.len()
            ),
        });
    }

    // Witness found iff the symbolic status says the PSSV is nonempty.
    {
        let mut mismatches = 0usize;
        let mut bad_witnesses = 0usize;
        for net in &nets {
            let expect = pssv_status(net).is_nonempty_rate_independent();
            let polys = steady_state_polynomials(net);
            for draw in 0..draws {
                let rates = network_rates(net, cfg, draw);
                let witness = find_positive_steady_state(net, &rates, cfg)
                    .expect("2-reaction networks are supported");
                if witness.is_some() != expect {
                    mismatches += 1;
                }
                if let Some(point) = witness {
                    if normalized_residual(&polys, &rates, &point) > cfg.tolerance {
                        bad_witnesses += 1;
                    }
                }
            }
        }
        checks.push(SuiteCheck {
            name: "status-oracle-agreement",
            passed: mismatches == 0 && bad_witnesses == 0,
            detail: format!(
                "{} networks x {draws} draws, {mismatches} status mismatches, {bad_witnesses} bad witnesses",
                nets.len()
            ),
        });
    }

    // Tuned-orthant networks: at the exact tuning ratio every positive
    // point is a steady state.
    {
        use num_traits::ToPrimitive;
        let mut failures = 0usize;
        let mut tuned = 0usize;
        for net in &nets {
            let PssvStatus::TunedFullOrthant { ratio } = pssv_status(net) else {
                continue;
            };
            tuned += 1;
            let polys = steady_state_polynomials(net);
            let mut rng = ChaCha8Rng::seed_from_u64(stream_seed(cfg.seed, 0x7475_6e65));
            for draw in 0..draws {
                let k2 = sample_rates(1, cfg, draw).get(1);
                let k1 = ratio.to_f64().expect("small rational") * k2;
                let rates = RateAssignment::new(vec![k1, k2]).expect("positive");
                for _ in 0..8 {
                    let point: Vec<f64> = (0..net.species_count())
                        .map(|_| log_uniform(&mut rng, 1.0 / cfg.search_box, cfg.search_box))
                        .collect();
                    if normalized_residual(&polys, &rates, &point) > cfg.tolerance {
                        failures += 1;
                    }
                }
            }
        }
        checks.push(SuiteCheck {
            name: "tuned-orthant",
            passed: failures == 0,
            detail: format!("{tuned} tuned networks, {failures} residual failures"),
        });
    }

    // Nonempty networks: sampled points fit the named curve for every draw.
    {
        let mut failures = 0usize;
        let mut nonempty = 0usize;
        for net in &nets {
            if canonical_binomial(net).is_none() {
                continue;
            }
            nonempty += 1;
            for draw in 0..draws.max(10) {
                let rates = network_rates(net, cfg, draw);
                let sample = sample_variety(net, &rates, cfg).expect("status is nonempty");
                if sample.max_residual > cfg.tolerance || !verify_class(net, &sample) {
                    failures += 1;
                }
            }
        }
        checks.push(SuiteCheck {
            name: "class-agreement",
            passed: failures == 0,
            detail: format!(
                "{nonempty} nonempty networks x {} draws, {failures} fit failures",
                draws.max(10)
            ),
        });
    }

    // ACR: the fixed species holds its symbolic value at sampled steady states.
    {
        let mut failures = 0usize;
        let mut acr_nets = 0usize;
        for net in &nets {
            let Some(report) = detect_acr(net).expect("census networks are 2x2") else {
                continue;
            };
            acr_nets += 1;
            for draw in 0..draws {
                let rates = network_rates(net, cfg, draw);
                let expected = report.value.value(&rates);
                let sample = sample_variety(net, &rates, cfg).expect("axis lines are nonempty");
                let off = sample
                    .points
                    .iter()
                    .map(|p| (p[report.species_index] - expected).abs() / expected)
                    .fold(0.0, f64::max);
                if off > cfg.tolerance {
                    failures += 1;
                }
            }
        }
        checks.push(SuiteCheck {
            name: "acr-numeric",
            passed: failures == 0,
            detail: format!("{acr_nets} ACR networks, {failures} value failures"),
        });
    }

    checks
}
