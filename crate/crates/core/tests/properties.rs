//! Property tests for the structural invariants: complex arithmetic,
//! canonical forms under relabeling, the matrix form of the polynomial
//! system, factoring soundness, and oracle agreement on random networks.

use proptest::prelude::*;

use crnshape::classify::{classify_by_binomial, classify_by_reactants, VarietyClass};
use crnshape::enumeration::enumerate_networks;
use crnshape::mass_action::{
    evaluate, factor_common_monomial, monomial_value, reactant_matrix,
    steady_state_polynomials, stoichiometric_matrix, MassActionTerm, RateAssignment,
};
use crnshape::network::{Complex, Network};
use crnshape::oracle::{find_positive_steady_state, sample_rates, OracleConfig};
use crnshape::parse::parse_network;
use crnshape::pssv::{canonical_binomial, pssv_status};

fn arb_complex(dim: usize, max_exp: u32) -> impl Strategy<Value = Complex> {
    prop::collection::vec(0..=max_exp, dim).prop_map(Complex::new)
}

fn arb_reaction() -> impl Strategy<Value = (Complex, Complex)> {
    (arb_complex(2, 3), arb_complex(2, 3)).prop_filter("non-diagonal", |(r, p)| r != p)
}

/// Two distinct non-diagonal reactions over two species.
fn arb_network() -> impl Strategy<Value = Network> {
    (arb_reaction(), arb_reaction())
        .prop_filter("distinct reactions", |(a, b)| a != b)
        .prop_map(|(a, b)| Network::new(vec!["A".into(), "B".into()], vec![a, b]).unwrap())
}

fn rates_for(n: usize, seed: u64) -> RateAssignment {
    sample_rates(n, &OracleConfig::default(), seed)
}

proptest! {
    #[test]
    fn molecularity_is_additive(a in arb_complex(3, 6), b in arb_complex(3, 6)) {
        prop_assert_eq!(a.plus(&b).molecularity(), a.molecularity() + b.molecularity());
    }

    #[test]
    fn shared_support_is_support_intersection(a in arb_complex(3, 4), b in arb_complex(3, 4)) {
        prop_assert_eq!(
            a.shared(&b).support(),
            a.support().intersection(&b.support())
        );
    }

    #[test]
    fn reduction_is_translation_invariant(net in arb_network(), m in arb_complex(2, 3)) {
        let (shared, reduced) = net.reduced_reactants();
        let (shifted_shared, shifted_reduced) = net.translate(&m).reduced_reactants();
        prop_assert_eq!(shifted_reduced, reduced);
        prop_assert_eq!(shifted_shared, shared.plus(&m));
    }

    /// Exhaustive over the relabeling group for two species and two
    /// reactions: every presentation shares one canonical form.
    #[test]
    fn canonical_form_is_constant_on_isomorphism_classes(net in arb_network()) {
        let expected = net.canonical_key();
        let r = net.reactions();
        let presentations = [
            [(r[0].reactant.clone(), r[0].product.clone()), (r[1].reactant.clone(), r[1].product.clone())],
            [(r[1].reactant.clone(), r[1].product.clone()), (r[0].reactant.clone(), r[0].product.clone())],
        ];
        let swap = |c: &Complex| Complex::new(vec![c.exponent(1), c.exponent(0)]);
        for pairs in &presentations {
            for apply_swap in [false, true] {
                let pairs: Vec<(Complex, Complex)> = pairs
                    .iter()
                    .map(|(a, b)| {
                        if apply_swap {
                            (swap(a), swap(b))
                        } else {
                            (a.clone(), b.clone())
                        }
                    })
                    .collect();
                let relabeled = Network::new(vec!["A".into(), "B".into()], pairs).unwrap();
                prop_assert_eq!(relabeled.canonical_key(), expected.clone());
                prop_assert_eq!(relabeled.canonical_form(), net.canonical_form());
            }
        }
    }

    #[test]
    fn parse_of_canonical_serialization_is_identity(net in arb_network()) {
        let canonical = net.canonical_form();
        prop_assert_eq!(parse_network(&net.canonical_key()).unwrap(), canonical.clone());
        prop_assert_eq!(parse_network(&canonical.to_string()).unwrap(), canonical);
    }

    /// The polynomial system equals N * diag(k) * x^B expanded term by term
    /// from the two matrices alone.
    #[test]
    fn polynomials_match_the_matrix_product_form(net in arb_network()) {
        let n = stoichiometric_matrix(&net);
        let b = reactant_matrix(&net);
        let polys = steady_state_polynomials(&net);
        for (k, poly) in polys.iter().enumerate() {
            let expected: Vec<MassActionTerm> = (0..n.cols())
                .filter(|&j| n.get(k, j) != 0)
                .map(|j| MassActionTerm {
                    coeff: n.get(k, j),
                    rate_index: j + 1,
                    monomial: Complex::new(
                        (0..b.rows()).map(|i| b.get(i, j) as u32).collect(),
                    ),
                })
                .collect();
            prop_assert_eq!(&poly.terms, &expected);
        }
    }

    /// Proportional rows of N give proportional polynomials term by term.
    #[test]
    fn row_dependency_transfers_to_polynomials(net in arb_network()) {
        let n = stoichiometric_matrix(&net);
        let polys = steady_state_polynomials(&net);
        for k in 0..n.rows() {
            for l in 0..n.rows() {
                // row_k = (num/den) * row_l with den != 0
                let Some(j0) = (0..n.cols()).find(|&j| n.get(l, j) != 0) else {
                    continue;
                };
                let (num, den) = (n.get(k, j0), n.get(l, j0));
                let proportional =
                    (0..n.cols()).all(|j| n.get(k, j) * den == n.get(l, j) * num);
                if !proportional {
                    continue;
                }
                if num == 0 {
                    // c = 0: zero terms are dropped, so f_k is the zero polynomial
                    prop_assert!(polys[k].is_zero());
                    continue;
                }
                prop_assert_eq!(polys[k].terms.len(), polys[l].terms.len());
                for (tk, tl) in polys[k].terms.iter().zip(&polys[l].terms) {
                    prop_assert_eq!(tk.rate_index, tl.rate_index);
                    prop_assert_eq!(&tk.monomial, &tl.monomial);
                    prop_assert_eq!(tk.coeff * den, tl.coeff * num);
                }
            }
        }
    }

    /// evaluate(original) = point^common * evaluate(residual).
    #[test]
    fn factoring_is_numerically_sound(
        net in arb_network(),
        seed in 0u64..1000,
        px in 1u32..400,
        py in 1u32..400,
    ) {
        let rates = rates_for(net.reaction_count(), seed);
        let point = [f64::from(px) / 100.0, f64::from(py) / 100.0];
        let polys = steady_state_polynomials(&net);
        let (common, residuals) = factor_common_monomial(&polys, 2);
        let scale = monomial_value(&common, &point);
        for (original, residual) in polys.iter().zip(&residuals) {
            let direct = evaluate(original, &rates, &point);
            let factored = scale * evaluate(residual, &rates, &point);
            let magnitude = direct.abs().max(factored.abs()).max(1e-300);
            prop_assert!(
                (direct - factored).abs() / magnitude <= 1e-12,
                "direct {direct} vs factored {factored}"
            );
        }
    }

    /// The numeric oracle agrees with the symbolic status on random
    /// 2-reaction networks across several rate draws.
    #[test]
    fn oracle_agrees_with_status(net in arb_network(), base in 0u64..500) {
        let cfg = OracleConfig::default();
        let expected = pssv_status(&net).is_nonempty_rate_independent();
        for draw in 0..5 {
            let rates = sample_rates(2, &cfg, base.wrapping_add(draw));
            let witness = find_positive_steady_state(&net, &rates, &cfg).unwrap();
            prop_assert_eq!(witness.is_some(), expected, "network {}", net);
        }
    }

    /// The binomial, hence the class, only depends on the reduced reactants.
    #[test]
    fn binomial_survives_translation(net in arb_network(), m in arb_complex(2, 3)) {
        let lifted = net.translate(&m);
        prop_assert_eq!(canonical_binomial(&net), canonical_binomial(&lifted));
        if let Some(b) = canonical_binomial(&net) {
            prop_assert_eq!(
                classify_by_binomial(&b),
                classify_by_binomial(&canonical_binomial(&lifted).unwrap())
            );
        }
    }

    /// Both classification routes are invariant under species relabeling
    /// and reaction reordering.
    #[test]
    fn classifiers_are_presentation_invariant(net in arb_network()) {
        let swap = |c: &Complex| Complex::new(vec![c.exponent(1), c.exponent(0)]);
        let r = net.reactions();
        let swapped_species = Network::new(
            vec!["A".into(), "B".into()],
            vec![
                (swap(&r[0].reactant), swap(&r[0].product)),
                (swap(&r[1].reactant), swap(&r[1].product)),
            ],
        )
        .unwrap();
        let swapped_reactions = Network::new(
            vec!["A".into(), "B".into()],
            vec![
                (r[1].reactant.clone(), r[1].product.clone()),
                (r[0].reactant.clone(), r[0].product.clone()),
            ],
        )
        .unwrap();
        for variant in [&swapped_species, &swapped_reactions] {
            prop_assert_eq!(
                classify_by_reactants(&net).unwrap(),
                classify_by_reactants(variant).unwrap()
            );
            match (canonical_binomial(&net), canonical_binomial(variant)) {
                (Some(a), Some(b)) => {
                    prop_assert_eq!(classify_by_binomial(&a), classify_by_binomial(&b));
                }
                (None, None) => {}
                _ => prop_assert!(false, "status changed under relabeling"),
            }
        }
    }
}

/// At molecularity 3 every rate-independent nonempty network lands in a
/// named class or OtherToricCurve via the binomial route, and the routes
/// agree wherever the reactant conditions apply.
#[test]
fn trimolecular_universe_classification_is_consistent() {
    let nets = enumerate_networks(3);
    assert!(nets.len() > 210);
    for net in &nets {
        let by_reactants = classify_by_reactants(net).unwrap();
        match canonical_binomial(net) {
            Some(b) => {
                let by_binomial = classify_by_binomial(&b);
                assert!(
                    by_binomial != VarietyClass::EmptyPssv
                        && by_binomial != VarietyClass::TunedFullOrthant
                );
                if by_reactants != VarietyClass::OtherToricCurve {
                    assert_eq!(by_reactants, by_binomial, "disagreement on {net}");
                }
            }
            None => assert!(
                matches!(
                    by_reactants,
                    VarietyClass::EmptyPssv | VarietyClass::TunedFullOrthant
                ),
                "{net}"
            ),
        }
    }
}

/// Count isomorphism classes of raw reaction pairs at the given
/// molecularity bound whose stoichiometric columns are negative multiples
/// of each other and whose reactant pair satisfies `pred`, quotienting by
/// species swap and reaction order directly (independent of canonical_key
/// and the classifiers).
fn brute_force_class_count(
    max_molecularity: u32,
    pred: impl Fn(&Complex, &Complex) -> bool,
) -> usize {
    let complexes = crnshape::enumeration::enumerate_complexes(2, max_molecularity);
    let mut ordered: Vec<(Complex, Complex)> = Vec::new();
    for r in &complexes {
        for p in &complexes {
            if r != p {
                ordered.push((r.clone(), p.clone()));
            }
        }
    }
    let swap = |c: &Complex| Complex::new(vec![c.exponent(1), c.exponent(0)]);
    let mut orbits: std::collections::BTreeSet<Vec<Vec<u32>>> = std::collections::BTreeSet::new();
    for i in 0..ordered.len() {
        for j in i + 1..ordered.len() {
            let (r1, p1) = &ordered[i];
            let (r2, p2) = &ordered[j];
            let genuine = (0..2).all(|k| {
                [r1, p1, r2, p2].iter().any(|c| c.exponent(k) > 0)
            });
            if !genuine {
                continue;
            }
            // columns negatively proportional, by integer arithmetic
            let col = |p: &Complex, r: &Complex, k: usize| {
                i64::from(p.exponent(k)) - i64::from(r.exponent(k))
            };
            let (a0, a1) = (col(p1, r1, 0), col(p1, r1, 1));
            let (b0, b1) = (col(p2, r2, 0), col(p2, r2, 1));
            let proportional = a0 * b1 == a1 * b0;
            let opposite = a0 * b0 <= 0 && a1 * b1 <= 0 && (a0 * b0 != 0 || a1 * b1 != 0);
            if !(proportional && opposite) {
                continue;
            }
            if r1 == r2 || !pred(r1, r2) {
                continue;
            }
            let key = |a: &(Complex, Complex), b: &(Complex, Complex)| {
                vec![
                    a.0.exponents().to_vec(),
                    a.1.exponents().to_vec(),
                    b.0.exponents().to_vec(),
                    b.1.exponents().to_vec(),
                ]
            };
            let sa = (swap(r1), swap(p1));
            let sb = (swap(r2), swap(p2));
            let candidates = [
                key(&ordered[i], &ordered[j]),
                key(&ordered[j], &ordered[i]),
                key(&sa, &sb),
                key(&sb, &sa),
            ];
            orbits.insert(candidates.iter().min().unwrap().clone());
        }
    }
    orbits.len()
}

/// The trimolecular census picks up the two degree-3 classes. The full
/// table is frozen from an exhaustive run; the semicubical and cubic rows
/// are re-derived here by brute force over raw reaction pairs.
#[test]
fn trimolecular_census_includes_degree_three_classes() {
    let semicubical = brute_force_class_count(3, |r1, r2| {
        let ms = (r1.molecularity(), r2.molecularity());
        (ms == (3, 2) || ms == (2, 3)) && r1.support().is_disjoint(&r2.support())
    });
    let cubic = brute_force_class_count(3, |r1, r2| {
        let ms = (r1.molecularity(), r2.molecularity());
        (ms == (3, 1) || ms == (1, 3)) && r1.support().is_disjoint(&r2.support())
    });
    assert_eq!(semicubical, 11);
    assert_eq!(cubic, 11);

    let report = crnshape::enumeration::census(&enumerate_networks(3)).unwrap();
    assert_eq!(report.total_networks, 1959);
    assert_eq!(report.count(VarietyClass::SemicubicalParabola), semicubical);
    assert_eq!(report.count(VarietyClass::Cubic), cubic);
    assert_eq!(report.count(VarietyClass::AxisParallelLine), 7);
    assert_eq!(report.count(VarietyClass::LineThroughOrigin), 31);
    assert_eq!(report.count(VarietyClass::Parabola), 8);
    assert_eq!(report.count(VarietyClass::Hyperbola), 4);
    assert_eq!(report.count(VarietyClass::OtherToricCurve), 60);
    assert_eq!(report.count(VarietyClass::TunedFullOrthant), 4);
    assert_eq!(
        report.counts.values().sum::<usize>(),
        report.total_networks
    );
}
