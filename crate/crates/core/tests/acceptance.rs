//! Acceptance suite: one test per criterion, each asserting the exact
//! expected values and tolerances and printing a PASS line on success.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use crnshape::classify::{classify_by_binomial, classify_by_reactants, detect_acr, VarietyClass};
use crnshape::enumeration::{census, enumerate_networks};
use crnshape::mass_action::{
    factor_common_monomial, steady_state_polynomials, stoichiometric_matrix, RateAssignment,
};
use crnshape::network::{Complex, Network};
use crnshape::oracle::{
    find_positive_steady_state, fits_class, network_rates, sample_variety, verify_class,
    OracleConfig,
};
use crnshape::parse::parse_network;
use crnshape::pssv::{canonical_binomial, pssv_status};

fn net(text: &str) -> Network {
    parse_network(text).unwrap()
}

fn bimolecular_universe() -> &'static [Network] {
    static UNIVERSE: OnceLock<Vec<Network>> = OnceLock::new();
    UNIVERSE.get_or_init(|| enumerate_networks(2))
}

fn nonempty_networks() -> Vec<&'static Network> {
    bimolecular_universe()
        .iter()
        .filter(|n| pssv_status(n).is_nonempty_rate_independent())
        .collect()
}

#[test]
fn criterion_01_enumeration_count() {
    let start = Instant::now();
    let nets = enumerate_networks(2);
    let elapsed = start.elapsed();
    assert_eq!(nets.len(), 210, "bimolecular universe size");
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    println!("PASS criterion 1: enumerate --max-molecularity 2 yields 210 networks ({elapsed:?})");
}

#[test]
fn criterion_02_census_counts() {
    let report = census(bimolecular_universe()).unwrap();
    assert_eq!(report.count(VarietyClass::AxisParallelLine), 3);
    assert_eq!(report.count(VarietyClass::LineThroughOrigin), 7);
    assert_eq!(report.count(VarietyClass::Parabola), 5);
    assert_eq!(report.count(VarietyClass::Hyperbola), 3);
    println!("PASS criterion 2: census counts are 3/7/5/3 for lines/slanted/parabolas/hyperbolas");
}

#[test]
fn criterion_03_classifier_agreement() {
    let mut nonempty = 0;
    for network in bimolecular_universe() {
        let by_reactants = classify_by_reactants(network).unwrap();
        let Some(binomial) = canonical_binomial(network) else {
            assert!(
                matches!(
                    by_reactants,
                    VarietyClass::EmptyPssv | VarietyClass::TunedFullOrthant
                ),
                "no binomial implies no nonempty class"
            );
            continue;
        };
        nonempty += 1;
        let by_binomial = classify_by_binomial(&binomial);
        assert_eq!(by_reactants, by_binomial, "routes disagree on {network}");
        assert_ne!(
            by_reactants,
            VarietyClass::OtherToricCurve,
            "bimolecular network escaped the classification: {network}"
        );
    }
    assert_eq!(nonempty, 18);
    println!("PASS criterion 3: both classification routes agree on all {nonempty} nonempty networks");
}

#[test]
fn criterion_04_status_oracle_equivalence() {
    let start = Instant::now();
    let cfg = OracleConfig::default();
    let mut witnesses = 0;
    for network in bimolecular_universe() {
        let expected = pssv_status(network).is_nonempty_rate_independent();
        let polys = steady_state_polynomials(network);
        for draw in 0..5 {
            let rates = network_rates(network, &cfg, draw);
            let found = find_positive_steady_state(network, &rates, &cfg).unwrap();
            assert_eq!(
                found.is_some(),
                expected,
                "oracle disagrees with status on {network} (draw {draw})"
            );
            if let Some(point) = found {
                witnesses += 1;
                let residual =
                    crnshape::mass_action::normalized_residual(&polys, &rates, &point);
                assert!(residual <= 1e-9, "residual {residual} on {network}");
            }
        }
    }
    let elapsed = start.elapsed();
    assert_eq!(witnesses, 18 * 5);
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!(
        "PASS criterion 4: witness found iff nonempty status over 210 networks x 5 draws ({elapsed:?})"
    );
}

#[test]
fn criterion_05_reversible_pair_worked_example() {
    let network = net("A -> 2B\n2B -> A");
    let n = stoichiometric_matrix(&network);
    assert_eq!(n.to_nested(), vec![vec![-1, 1], vec![2, -2]]);

    let cfg = OracleConfig::default();
    let sample = sample_variety(&network, &RateAssignment::ones(2), &cfg).unwrap();
    assert_eq!(sample.points.len(), 64);
    for p in &sample.points {
        let (x, y) = (p[0], p[1]);
        assert!((x - y * y).abs() / x.max(y * y) <= 1e-9, "point ({x}, {y})");
    }
    println!("PASS criterion 5: N = [[-1,1],[2,-2]] and 64 sampled points satisfy x = y^2");
}

#[test]
fn criterion_06_one_species_rate_dependence() {
    let network = net("A -> 2A\nA -> 0\n2A -> A");
    let cfg = OracleConfig::default();

    let favorable = RateAssignment::new(vec![2.0, 1.0, 1.0]).unwrap();
    let point = find_positive_steady_state(&network, &favorable, &cfg)
        .unwrap()
        .expect("positive steady state exists when k1 > k2");
    assert!((point[0] - 1.0).abs() <= 1e-9, "root {}", point[0]);

    let unfavorable = RateAssignment::new(vec![1.0, 2.0, 1.0]).unwrap();
    assert_eq!(
        find_positive_steady_state(&network, &unfavorable, &cfg).unwrap(),
        None
    );
    println!("PASS criterion 6: univariate solver returns x = 1 at k=(2,1,1) and none at k=(1,2,1)");
}

#[test]
fn criterion_07_semicubical_parabola() {
    let network = net("3B -> A + 2B\n2A -> A + B");
    assert_eq!(
        classify_by_reactants(&network).unwrap(),
        VarietyClass::SemicubicalParabola
    );
    let idx_a = network.species_names().iter().position(|s| s == "A").unwrap();
    let idx_b = network.species_names().iter().position(|s| s == "B").unwrap();

    let cfg = OracleConfig::default();
    let sample = sample_variety(&network, &RateAssignment::ones(2), &cfg).unwrap();
    for p in &sample.points {
        let (x, y) = (p[idx_a], p[idx_b]);
        let lhs = x * x;
        let rhs = y * y * y;
        assert!((lhs - rhs).abs() / lhs.max(rhs) <= 1e-9, "point ({x}, {y})");
    }
    println!("PASS criterion 7: semicubical parabola classified and sampled points satisfy x^2 = y^3");
}

#[test]
fn criterion_08_factoring_and_translation_invariance() {
    // the translated reversible pair factors as x^2 y * (base system)
    let lifted = net("3A + B -> 2A + 3B\n2A + 3B -> 3A + B");
    let polys = steady_state_polynomials(&lifted);
    let (common, residuals) = factor_common_monomial(&polys, 2);
    assert_eq!(common.exponents(), [2, 1], "common monomial is x^2 y");

    let base = steady_state_polynomials(&net("A -> 2B\n2B -> A"));
    assert_eq!(residuals, base, "residuals equal the base system term for term");

    // translation invariance of factored residuals over every m in {0..3}^2
    // for all nonempty-PSSV bimolecular networks
    for network in nonempty_networks() {
        let (_, plain) = factor_common_monomial(
            &steady_state_polynomials(network),
            network.species_count(),
        );
        for ma in 0..=3u32 {
            for mb in 0..=3u32 {
                let shifted = network.translate(&Complex::new(vec![ma, mb]));
                let (_, factored) = factor_common_monomial(
                    &steady_state_polynomials(&shifted),
                    shifted.species_count(),
                );
                assert_eq!(factored, plain, "translation by ({ma},{mb}) changed {network}");
            }
        }
    }
    println!("PASS criterion 8: common monomial x^2 y and residuals invariant under all translations");
}

#[test]
fn criterion_09_quartic_parabola_gap() {
    let network = net("4A -> 3A + B\n2B -> A + B");
    let binomial = canonical_binomial(&network).unwrap();
    assert_eq!(binomial.u, vec![2, -1], "gcd-normalized exponent vector");
    assert_eq!(
        classify_by_reactants(&network).unwrap(),
        VarietyClass::OtherToricCurve,
        "reactant conditions do not name this variety"
    );
    assert_eq!(classify_by_binomial(&binomial), VarietyClass::Parabola);

    let cfg = OracleConfig::default();
    for draw in 0..10 {
        let rates = network_rates(&network, &cfg, draw);
        let sample = sample_variety(&network, &rates, &cfg).unwrap();
        assert!(verify_class(&network, &sample), "draw {draw}");
        assert!(fits_class(&sample, VarietyClass::Parabola), "draw {draw}");
    }
    println!("PASS criterion 9: u = (2,-1), numeric class Parabola, reactant route reports OtherToricCurve");
}

#[test]
fn criterion_10_rate_independent_classes() {
    let cfg = OracleConfig::default();
    let nets = nonempty_networks();
    assert_eq!(nets.len(), 18);
    for network in nets {
        let class = classify_by_binomial(&canonical_binomial(network).unwrap());
        for draw in 0..10 {
            let rates = network_rates(network, &cfg, draw);
            let sample = sample_variety(network, &rates, &cfg).unwrap();
            assert!(
                verify_class(network, &sample),
                "fit failed on {network} draw {draw}"
            );
            assert!(
                fits_class(&sample, class),
                "class changed on {network} draw {draw}"
            );
        }
    }
    println!("PASS criterion 10: variety class identical across 10 rate draws for all 18 networks");
}

#[test]
fn criterion_11_acr() {
    let cfg = OracleConfig::default();
    let mut acr_networks = Vec::new();
    for network in bimolecular_universe() {
        let class = classify_by_reactants(network).unwrap();
        let acr = detect_acr(network).unwrap();
        assert_eq!(
            acr.is_some(),
            class == VarietyClass::AxisParallelLine,
            "ACR iff axis-parallel line on {network}"
        );
        if let Some(report) = acr {
            acr_networks.push((network, report));
        }
    }
    assert_eq!(acr_networks.len(), 3, "exactly three ACR networks");

    for (network, report) in &acr_networks {
        for draw in 0..5 {
            let rates = network_rates(network, &cfg, draw);
            let expected = report.value.value(&rates);
            let sample = sample_variety(network, &rates, &cfg).unwrap();
            for p in &sample.points {
                assert!(
                    (p[report.species_index] - expected).abs() <= 1e-9,
                    "ACR value off on {network} draw {draw}"
                );
            }
            let witness = find_positive_steady_state(network, &rates, &cfg)
                .unwrap()
                .expect("axis-parallel lines have steady states");
            assert!((witness[report.species_index] - expected).abs() <= 1e-9);
        }
    }
    println!("PASS criterion 11: exactly 3 ACR networks, fixed species matches the symbolic value");
}
