//! Species, complexes, reactions, and networks.
//!
//! A network is an ordered species list plus an ordered reaction list; all
//! structure (stoichiometry, monomials, isomorphism) derives from the
//! exponent vectors of the complexes. Values are immutable after
//! construction and every operation here is a pure function.

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

/// A formal nonnegative-integer combination of species, e.g. `2A + B`.
///
/// The exponent vector is indexed by the owning network's species order and
/// doubles as the exponent of a mass-action monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Complex {
    exponents: Vec<u32>,
}

impl Complex {
    pub fn new(exponents: Vec<u32>) -> Self {
        Complex { exponents }
    }

    /// The complex with no species, written `0`.
    pub fn zero(n_species: usize) -> Self {
        Complex {
            exponents: vec![0; n_species],
        }
    }

    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, species: usize) -> u32 {
        self.exponents[species]
    }

    pub fn is_zero(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Total object count: the sum of all coefficients.
    pub fn molecularity(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// The set of species appearing with a positive coefficient.
    pub fn support(&self) -> SpeciesSet {
        SpeciesSet {
            members: self.exponents.iter().map(|&e| e > 0).collect(),
        }
    }

    /// Componentwise minimum: the multiset of species copies present in both
    /// complexes.
    pub fn shared(&self, other: &Complex) -> Complex {
        assert_eq!(self.dim(), other.dim(), "species dimension mismatch");
        Complex {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        }
    }

    pub fn plus(&self, other: &Complex) -> Complex {
        assert_eq!(self.dim(), other.dim(), "species dimension mismatch");
        Complex {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    /// Componentwise difference; `other` must be contained in `self`.
    pub fn minus(&self, other: &Complex) -> Complex {
        assert_eq!(self.dim(), other.dim(), "species dimension mismatch");
        Complex {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| {
                    debug_assert!(a >= b, "complex subtraction would go negative");
                    a - b
                })
                .collect(),
        }
    }

    /// Exponent differences as signed integers, `self - other`.
    pub fn signed_difference(&self, other: &Complex) -> Vec<i64> {
        assert_eq!(self.dim(), other.dim(), "species dimension mismatch");
        self.exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| i64::from(a) - i64::from(b))
            .collect()
    }

    /// Reindex species: entry `i` of the result is entry `perm[i]` of `self`.
    fn permuted(&self, perm: &[usize]) -> Complex {
        Complex {
            exponents: perm.iter().map(|&old| self.exponents[old]).collect(),
        }
    }

    /// Render with the given species names: `2A + B`, or `0` when empty.
    /// Coefficient 1 is implicit; terms follow the species order.
    pub fn format_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| {
                if e == 1 {
                    names[k].clone()
                } else {
                    format!("{e}{}", names[k])
                }
            })
            .join(" + ")
    }
}

/// A subset of a network's species, stored as membership flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpeciesSet {
    members: Vec<bool>,
}

impl SpeciesSet {
    pub fn new(members: Vec<bool>) -> Self {
        SpeciesSet { members }
    }

    pub fn contains(&self, species: usize) -> bool {
        self.members[species]
    }

    pub fn is_empty(&self) -> bool {
        self.members.iter().all(|&m| !m)
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_disjoint(&self, other: &SpeciesSet) -> bool {
        self.members
            .iter()
            .zip(&other.members)
            .all(|(&a, &b)| !(a && b))
    }

    pub fn intersection(&self, other: &SpeciesSet) -> SpeciesSet {
        SpeciesSet {
            members: self
                .members
                .iter()
                .zip(&other.members)
                .map(|(&a, &b)| a && b)
                .collect(),
        }
    }
}

/// One reaction `reactant -> product`, labeled by the 1-based index of its
/// rate constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reaction {
    pub reactant: Complex,
    pub product: Complex,
    pub rate_index: usize,
}

/// Rejected network structure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NetworkError {
    #[error("complex has {found} species entries, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("reaction {index} has identical reactant and product")]
    ReactantEqualsProduct { index: usize },
    #[error("reactions {first} and {second} are identical")]
    DuplicateReaction { first: usize, second: usize },
}

/// A chemical reaction network: named species plus an ordered reaction list.
///
/// Invariants enforced at construction: all complexes share the species
/// dimension, no reaction is diagonal (reactant = product), no two reactions
/// coincide, and rate indices run 1..n in reaction order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Network {
    species_names: Vec<String>,
    reactions: Vec<Reaction>,
}

impl Network {
    /// Build a network from `(reactant, product)` pairs; rate indices are
    /// assigned 1..n in order.
    pub fn new(
        species_names: Vec<String>,
        pairs: Vec<(Complex, Complex)>,
    ) -> Result<Self, NetworkError> {
        let dim = species_names.len();
        for (reactant, product) in &pairs {
            for c in [reactant, product] {
                if c.dim() != dim {
                    return Err(NetworkError::DimensionMismatch {
                        expected: dim,
                        found: c.dim(),
                    });
                }
            }
        }
        for (i, (reactant, product)) in pairs.iter().enumerate() {
            if reactant == product {
                return Err(NetworkError::ReactantEqualsProduct { index: i + 1 });
            }
        }
        for i in 0..pairs.len() {
            for j in i + 1..pairs.len() {
                if pairs[i] == pairs[j] {
                    return Err(NetworkError::DuplicateReaction {
                        first: i + 1,
                        second: j + 1,
                    });
                }
            }
        }
        let reactions = pairs
            .into_iter()
            .enumerate()
            .map(|(i, (reactant, product))| Reaction {
                reactant,
                product,
                rate_index: i + 1,
            })
            .collect();
        Ok(Network {
            species_names,
            reactions,
        })
    }

    pub fn species_names(&self) -> &[String] {
        &self.species_names
    }

    pub fn species_count(&self) -> usize {
        self.species_names.len()
    }

    pub fn reactions(&self) -> &[Reaction] {
        &self.reactions
    }

    pub fn reaction_count(&self) -> usize {
        self.reactions.len()
    }

    /// True iff every species appears with a positive coefficient in at
    /// least one complex of the network (reactant or product).
    pub fn is_genuine(&self) -> bool {
        (0..self.species_count()).all(|k| {
            self.reactions
                .iter()
                .any(|r| r.reactant.exponent(k) > 0 || r.product.exponent(k) > 0)
        })
    }

    /// Add `m` to every reactant and product complex; rate indices are kept.
    pub fn translate(&self, m: &Complex) -> Network {
        assert_eq!(m.dim(), self.species_count(), "species dimension mismatch");
        Network {
            species_names: self.species_names.clone(),
            reactions: self
                .reactions
                .iter()
                .map(|r| Reaction {
                    reactant: r.reactant.plus(m),
                    product: r.product.plus(m),
                    rate_index: r.rate_index,
                })
                .collect(),
        }
    }

    /// The componentwise minimum over all reactant complexes, together with
    /// each reactant minus that shared part.
    pub fn reduced_reactants(&self) -> (Complex, Vec<Complex>) {
        assert!(!self.reactions.is_empty(), "network has no reactions");
        let shared = self
            .reactions
            .iter()
            .map(|r| r.reactant.clone())
            .reduce(|a, b| a.shared(&b))
            .unwrap();
        let reduced = self
            .reactions
            .iter()
            .map(|r| r.reactant.minus(&shared))
            .collect();
        (shared, reduced)
    }

    /// The comparison key for isomorphism: over all species permutations,
    /// the lexicographically least serialization with species renamed to
    /// S1..Ss and reactions sorted by (reactant, product) exponents.
    pub fn canonical_key(&self) -> String {
        let s = self.species_count();
        let names: Vec<String> = (1..=s).map(|i| format!("S{i}")).collect();
        (0..s)
            .permutations(s)
            .map(|perm| {
                let mut pairs: Vec<(Complex, Complex)> = self
                    .reactions
                    .iter()
                    .map(|r| (r.reactant.permuted(&perm), r.product.permuted(&perm)))
                    .collect();
                pairs.sort();
                pairs
                    .iter()
                    .map(|(reactant, product)| {
                        format!(
                            "{} -> {}",
                            reactant.format_with(&names),
                            product.format_with(&names)
                        )
                    })
                    .join("\n")
            })
            .min()
            .expect("network has at least one species")
    }

    /// The canonical representative of this network's isomorphism class.
    ///
    /// Two networks are isomorphic (equal up to species relabeling and
    /// reaction reordering) iff their canonical forms are equal. The result
    /// reparses [`Network::canonical_key`], so parsing the key returns
    /// exactly this network.
    pub fn canonical_form(&self) -> Network {
        crate::parse::parse_network(&self.canonical_key())
            .expect("canonical serialization reparses")
    }

    pub fn is_isomorphic(&self, other: &Network) -> bool {
        self.canonical_key() == other.canonical_key()
    }
}

impl fmt::Display for Network {
    /// One reaction per line, `reactant -> product`, current species names.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for r in &self.reactions {
            if !first {
                writeln!(f)?;
            }
            first = false;
            write!(
                f,
                "{} -> {}",
                r.reactant.format_with(&self.species_names),
                r.product.format_with(&self.species_names)
            )?;
        }
        Ok(())
    }
}
