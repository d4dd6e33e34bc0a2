//! Exhaustive generation of genuine 2-species, 2-reaction networks up to
//! isomorphism, and the census of their PSSV classes.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::classify::{classify_by_reactants, VarietyClass};
use crate::error::AnalysisError;
use crate::network::{Complex, Network};
use crate::parse::parse_network;

/// All complexes over `n_species` species with molecularity at most
/// `max_molecularity`, graded by molecularity and ordered within each grade
/// by descending exponent vector (`0, A, B, 2A, A+B, 2B, ...`).
pub fn enumerate_complexes(n_species: usize, max_molecularity: u32) -> Vec<Complex> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n_species);
    for total in 0..=max_molecularity {
        compositions(n_species, total, &mut prefix, &mut out);
    }
    out
}

fn compositions(slots: usize, total: u32, prefix: &mut Vec<u32>, out: &mut Vec<Complex>) {
    if slots == 1 {
        prefix.push(total);
        out.push(Complex::new(prefix.clone()));
        prefix.pop();
        return;
    }
    for first in (0..=total).rev() {
        prefix.push(first);
        compositions(slots - 1, total - first, prefix, out);
        prefix.pop();
    }
}

/// All genuine 2-species, 2-reaction networks with complexes of
/// molecularity at most `max_molecularity`, one representative per
/// isomorphism class, ordered by canonical serialization.
///
/// A network here is an unordered pair of distinct non-diagonal reactions;
/// reversible pairs like `A -> 2B, 2B -> A` count as one network.
pub fn enumerate_networks(max_molecularity: u32) -> Vec<Network> {
    let complexes = enumerate_complexes(2, max_molecularity);
    let mut reactions: Vec<(Complex, Complex)> = Vec::new();
    for r in &complexes {
        for p in &complexes {
            if r != p {
                reactions.push((r.clone(), p.clone()));
            }
        }
    }

    let species = vec!["A".to_string(), "B".to_string()];
    let mut keys = BTreeSet::new();
    for i in 0..reactions.len() {
        for j in i + 1..reactions.len() {
            let net = Network::new(
                species.clone(),
                vec![reactions[i].clone(), reactions[j].clone()],
            )
            .expect("distinct non-diagonal reactions");
            if !net.is_genuine() {
                continue;
            }
            keys.insert(net.canonical_key());
        }
    }
    keys.iter()
        .map(|k| parse_network(k).expect("canonical keys reparse"))
        .collect()
}

/// Tally of PSSV classes over a set of networks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub total_networks: usize,
    /// Count per class; classes sum to `total_networks`.
    pub counts: BTreeMap<VarietyClass, usize>,
    /// Canonical serialization (reactions joined by `, `) of every member,
    /// in canonical order.
    pub class_members: BTreeMap<VarietyClass, Vec<String>>,
}

impl CensusReport {
    pub fn count(&self, class: VarietyClass) -> usize {
        self.counts.get(&class).copied().unwrap_or(0)
    }

    /// Aligned text table, one row per class plus a total row.
    pub fn table(&self) -> String {
        let name_width = VarietyClass::ALL
            .iter()
            .map(|c| c.name().len())
            .max()
            .unwrap_or(0)
            .max("total".len());
        let mut out = String::new();
        out.push_str(&format!("{:<name_width$}  count\n", "class"));
        for class in VarietyClass::ALL {
            out.push_str(&format!(
                "{:<name_width$}  {:>5}\n",
                class.name(),
                self.count(class)
            ));
        }
        out.push_str(&format!(
            "{:<name_width$}  {:>5}",
            "total", self.total_networks
        ));
        out
    }
}

/// Classify every network with the reactant-condition route and tally.
pub fn census(nets: &[Network]) -> Result<CensusReport, AnalysisError> {
    let mut counts: BTreeMap<VarietyClass, usize> = BTreeMap::new();
    let mut class_members: BTreeMap<VarietyClass, Vec<String>> = BTreeMap::new();
    for class in VarietyClass::ALL {
        counts.insert(class, 0);
        class_members.insert(class, Vec::new());
    }
    for net in nets {
        let class = classify_by_reactants(net)?;
        *counts.get_mut(&class).unwrap() += 1;
        class_members
            .get_mut(&class)
            .unwrap()
            .push(net.canonical_key().replace('\n', ", "));
    }
    Ok(CensusReport {
        total_networks: nets.len(),
        counts,
        class_members,
    })
}
