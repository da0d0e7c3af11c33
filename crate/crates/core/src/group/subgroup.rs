use serde::{Deserialize, Serialize};

use super::FiniteGroup;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CosetSide {
    /// `gH`
    Left,
    /// `Hg`
    Right,
}

/// A validated subgroup, stored as a sorted element list plus a membership mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    elements: Vec<usize>,
    member: Vec<bool>,
}

impl Subgroup {
    pub fn new(group: &FiniteGroup, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut member = vec![false; group.order()];
        for a in elements {
            group.check_element(a)?;
            member[a] = true;
        }
        if !member[0] {
            return Err(Error::NotASubgroup("missing the identity".into()));
        }
        let elements: Vec<usize> = (0..group.order()).filter(|&a| member[a]).collect();
        for &a in &elements {
            if !member[group.inverse(a)] {
                return Err(Error::NotASubgroup(format!("inverse of {a} missing")));
            }
            for &b in &elements {
                if !member[group.mul(a, b)] {
                    return Err(Error::NotASubgroup(format!("{a}*{b} missing")));
                }
            }
        }
        Ok(Self { elements, member })
    }

    /// Closure of `generators` under multiplication.
    pub fn generated_by(group: &FiniteGroup, generators: &[usize]) -> Result<Self> {
        for &g in generators {
            group.check_element(g)?;
        }
        let mut member = vec![false; group.order()];
        member[0] = true;
        let mut frontier = vec![0];
        while let Some(a) = frontier.pop() {
            for &g in generators {
                let ag = group.mul(a, g);
                if !member[ag] {
                    member[ag] = true;
                    frontier.push(ag);
                }
            }
        }
        Self::new(group, (0..group.order()).filter(|&a| member[a]))
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        Self::new(group, [0]).expect("identity subgroup")
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        Self::new(group, group.elements()).expect("whole group")
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.member.get(a).copied().unwrap_or(false)
    }

    /// `g⁻¹ H g = H`.
    pub fn is_normalized_by(&self, group: &FiniteGroup, g: usize) -> bool {
        self.first_unnormalized(group, g).is_none()
    }

    /// Some `h ∈ H` with `g⁻¹ h g ∉ H`.
    pub fn first_unnormalized(&self, group: &FiniteGroup, g: usize) -> Option<usize> {
        self.elements.iter().copied().find(|&h| !self.contains(group.conjugate(h, g)))
    }

    pub fn normalizer(&self, group: &FiniteGroup) -> Subgroup {
        Subgroup::new(group, group.elements().filter(|&g| self.is_normalized_by(group, g)))
            .expect("normalizers are subgroups")
    }

    pub fn is_normal(&self, group: &FiniteGroup) -> bool {
        group.elements().all(|g| self.is_normalized_by(group, g))
    }

    /// Some `h ∈ H` with `g·h ≠ h·g`.
    pub fn first_noncommuting(&self, group: &FiniteGroup, g: usize) -> Option<usize> {
        self.elements.iter().copied().find(|&h| group.mul(g, h) != group.mul(h, g))
    }

    pub fn is_centralized_by(&self, group: &FiniteGroup, g: usize) -> bool {
        self.first_noncommuting(group, g).is_none()
    }

    /// The coset containing `g`, sorted.
    pub fn coset_of(&self, group: &FiniteGroup, g: usize, side: CosetSide) -> Vec<usize> {
        let mut coset: Vec<usize> = self
            .elements
            .iter()
            .map(|&h| match side {
                CosetSide::Left => group.mul(g, h),
                CosetSide::Right => group.mul(h, g),
            })
            .collect();
        coset.sort_unstable();
        coset
    }

    /// Cosets as sorted blocks, ordered by their smallest element.
    pub fn cosets(&self, group: &FiniteGroup, side: CosetSide) -> Vec<Vec<usize>> {
        let mut covered = vec![false; group.order()];
        let mut blocks = Vec::new();
        for g in group.elements() {
            if covered[g] {
                continue;
            }
            let block = self.coset_of(group, g, side);
            for &x in &block {
                covered[x] = true;
            }
            blocks.push(block);
        }
        blocks
    }
}

/// `{g : g⁻¹ H g = H}`.
pub fn normalizer(group: &FiniteGroup, h: &Subgroup) -> Subgroup {
    h.normalizer(group)
}

pub fn cosets(group: &FiniteGroup, h: &Subgroup, side: CosetSide) -> Vec<Vec<usize>> {
    h.cosets(group, side)
}

pub fn is_normal(group: &FiniteGroup, h: &Subgroup) -> bool {
    h.is_normal(group)
}

/// `g·h = h·g` for every `h ∈ H`.
pub fn centralizes(group: &FiniteGroup, g: usize, h: &Subgroup) -> bool {
    h.is_centralized_by(group, g)
}
