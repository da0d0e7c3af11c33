//! Finite groups given by Cayley tables.
//!
//! Elements are dense indices `0..n` with the identity relabeled to `0`.
//! Products are looked up in a row-major table, `mul(a, b) = table[a][b]`.
//! Every downstream construction (bundles, gauge quandles, cosets) works on
//! these indices, so a group is validated exhaustively once, at construction.

mod catalog;
mod subgroup;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use catalog::{catalog, catalog_names};
pub use subgroup::{centralizes, cosets, is_normal, normalizer, CosetSide, Subgroup};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest order for which associativity is checked by default.
pub const ASSOCIATIVITY_CAP: usize = 256;

/// The group axiom named in an [`Error::AxiomViolation`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Associativity,
    Identity,
    Inverse,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Associativity => "associativity",
            Axiom::Identity => "identity",
            Axiom::Inverse => "inverse",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AssociativityCheck {
    /// Check all `n³` triples; refused above [`ASSOCIATIVITY_CAP`].
    #[default]
    Exhaustive,
    /// Trust the caller.
    Skip,
}

/// On-disk group format: `{"name", "order", "table"}`, optional `labels`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    #[serde(default)]
    pub name: String,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
    labels: Option<Vec<String>>,
}

/// Validates a Cayley table and returns the group with its identity at `0`.
pub fn group_from_table(table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
    FiniteGroup::from_table("", table, None, AssociativityCheck::Exhaustive)
}

impl FiniteGroup {
    pub fn from_table(
        name: impl Into<String>,
        table: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
        check: AssociativityCheck,
    ) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Shape { row: 0, len: 0, expected: 1 });
        }
        let mut flat = Vec::with_capacity(n * n);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(Error::Shape { row, len: entries.len(), expected: n });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(Error::EntryOutOfRange { row, col, value, size: n });
                }
                flat.push(value);
            }
        }
        if let Some(labels) = &labels {
            if labels.len() != n {
                return Err(Error::Input(format!("{} labels for a group of order {n}", labels.len())));
            }
        }
        let at = |a: usize, b: usize| flat[a * n + b];

        let identity = (0..n).find(|&e| (0..n).all(|a| at(e, a) == a && at(a, e) == a)).ok_or_else(|| {
            let e = (0..n).find(|&e| at(e, e) == e).unwrap_or(0);
            let a = (0..n).find(|&a| at(e, a) != a || at(a, e) != a).unwrap_or(0);
            Error::AxiomViolation { axiom: Axiom::Identity, witness: (e, a, at(e, a)) }
        })?;

        // Swap the identity into slot 0.
        let relabel = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut relabeled = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                relabeled[relabel(a) * n + relabel(b)] = relabel(at(a, b));
            }
        }
        let labels = labels.map(|mut l| {
            l.swap(0, identity);
            l
        });

        let mut inverses = vec![usize::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| relabeled[a * n + b] == 0 && relabeled[b * n + a] == 0) {
                Some(b) => inverses[a] = b,
                None => return Err(Error::AxiomViolation { axiom: Axiom::Inverse, witness: (a, 0, 0) }),
            }
        }

        let group = Self { name: name.into(), order: n, table: relabeled, inverses, labels };
        if check == AssociativityCheck::Exhaustive {
            if n > ASSOCIATIVITY_CAP {
                return Err(Error::TooLargeToCheck { order: n, cap: ASSOCIATIVITY_CAP });
            }
            if let Some(witness) = group.associativity_witness() {
                return Err(Error::AxiomViolation { axiom: Axiom::Associativity, witness });
            }
        }
        Ok(group)
    }

    pub fn from_file(file: GroupFile) -> Result<Self> {
        if file.order != file.table.len() {
            return Err(Error::Input(format!("declared order {} but table has {} rows", file.order, file.table.len())));
        }
        Self::from_table(file.name, file.table, file.labels, AssociativityCheck::Exhaustive)
    }

    pub fn to_file(&self) -> GroupFile {
        GroupFile { name: self.name.clone(), order: self.order, table: self.table_rows(), labels: self.labels.clone() }
    }

    fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    /// Product of a sequence, left to right.
    pub fn product(&self, factors: &[usize]) -> usize {
        factors.iter().fold(0, |acc, &x| self.mul(acc, x))
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g⁻¹ · a · g`.
    #[inline]
    pub fn conjugate(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inverse(g), a), g)
    }

    /// The automorphism `a ↦ g⁻¹ a g`.
    pub fn inner_automorphism(&self, g: usize) -> Permutation {
        Permutation::new(self.elements().map(|a| self.conjugate(a, g)).collect()).expect("conjugation is a bijection")
    }

    /// `Ok` when `sigma` is a bijective homomorphism, otherwise the first failing pair.
    pub fn check_automorphism(&self, sigma: &Permutation) -> Result<()> {
        if sigma.len() != self.order {
            return Err(Error::SizeMismatch { left: sigma.len(), right: self.order });
        }
        for a in self.elements() {
            for b in self.elements() {
                if sigma.apply(self.mul(a, b)) != self.mul(sigma.apply(a), sigma.apply(b)) {
                    return Err(Error::AutomorphismRequired { a, b });
                }
            }
        }
        Ok(())
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Conjugacy classes, each sorted, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut class_of = vec![usize::MAX; self.order];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for a in self.elements() {
            if class_of[a] != usize::MAX {
                continue;
            }
            let mut class: Vec<usize> = self.elements().map(|g| self.conjugate(a, g)).collect();
            class.sort_unstable();
            class.dedup();
            for &x in &class {
                class_of[x] = classes.len();
            }
            classes.push(class);
        }
        classes
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// Accepts an element index or a label.
    pub fn parse_element(&self, token: &str) -> Result<usize> {
        let token = token.trim();
        if let Some(a) = self.element_by_label(token) {
            return Ok(a);
        }
        match token.parse::<usize>() {
            Ok(a) if a < self.order => Ok(a),
            Ok(a) => Err(Error::ElementOutOfRange { element: a, size: self.order }),
            Err(_) => Err(Error::Input(format!("no element `{token}` in group {}", self.name))),
        }
    }

    pub(crate) fn check_element(&self, a: usize) -> Result<()> {
        if a < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { element: a, size: self.order })
        }
    }
}
