//! Finite magmas, rack and quandle axiom checks, and the standard constructions.
//!
//! A [`MagmaTable`] stores `x ◁ y` at `op[x][y]`. The right translation by `y`
//! is column `y`, read as `x ↦ x ◁ y`; a rack needs every one of them to be a
//! permutation together with right self-distributivity
//! `(x◁y)◁z = (x◁z)◁(y◁z)`. A quandle is a rack with `x◁x = x`.

mod iso;

use serde::{Deserialize, Serialize};

pub use iso::{element_signature, find_isomorphism, ElementSignature};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "QuandleFile", into = "QuandleFile")]
pub struct MagmaTable {
    size: usize,
    op: Vec<usize>,
    labels: Option<Vec<String>>,
}

/// `{"size": n, "op": [[...]], "labels": [...]?}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleFile {
    pub size: usize,
    pub op: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl TryFrom<QuandleFile> for MagmaTable {
    type Error = Error;

    fn try_from(file: QuandleFile) -> Result<Self> {
        if file.size != file.op.len() {
            return Err(Error::Input(format!("declared size {} but table has {} rows", file.size, file.op.len())));
        }
        let table = MagmaTable::from_rows(file.op)?;
        match file.labels {
            Some(labels) => table.with_labels(labels),
            None => Ok(table),
        }
    }
}

impl From<MagmaTable> for QuandleFile {
    fn from(m: MagmaTable) -> Self {
        QuandleFile { size: m.size, op: m.rows(), labels: m.labels }
    }
}

impl MagmaTable {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Shape { row: 0, len: 0, expected: 1 });
        }
        let mut op = Vec::with_capacity(n * n);
        for (row, entries) in rows.into_iter().enumerate() {
            if entries.len() != n {
                return Err(Error::Shape { row, len: entries.len(), expected: n });
            }
            for (col, value) in entries.into_iter().enumerate() {
                if value >= n {
                    return Err(Error::EntryOutOfRange { row, col, value, size: n });
                }
                op.push(value);
            }
        }
        Ok(Self { size: n, op, labels: None })
    }

    /// Tabulates `f(x, y)` for `x, y < size`. Panics if `f` leaves `0..size`.
    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        assert!(size > 0, "empty magma");
        let mut op = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                let v = f(x, y);
                assert!(v < size, "entry {v} out of range at ({x}, {y})");
                op.push(v);
            }
        }
        Self { size, op, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size {
            return Err(Error::SizeMismatch { left: labels.len(), right: self.size });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.op[x * self.size + y]
    }

    /// Overwrites one entry; meant for building counterexamples.
    pub fn set(&mut self, x: usize, y: usize, value: usize) -> Result<()> {
        if x >= self.size || y >= self.size {
            return Err(Error::ElementOutOfRange { element: x.max(y), size: self.size });
        }
        if value >= self.size {
            return Err(Error::EntryOutOfRange { row: x, col: y, value, size: self.size });
        }
        self.op[x * self.size + y] = value;
        Ok(())
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.op.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// The right translation `x ↦ x ◁ y` as an image vector.
    pub fn right_translation(&self, y: usize) -> Vec<usize> {
        (0..self.size).map(|x| self.op(x, y)).collect()
    }

    /// The left translation `z ↦ x ◁ z` as an image vector.
    pub fn left_translation(&self, x: usize) -> Vec<usize> {
        self.op[x * self.size..(x + 1) * self.size].to_vec()
    }

    /// Same table with elements renamed by `f`: `f(x) ◁' f(y) = f(x ◁ y)`.
    pub fn relabeled(&self, f: &Permutation) -> Self {
        assert_eq!(f.len(), self.size);
        let inv = f.inverse();
        Self::from_fn(self.size, |a, b| f.apply(self.op(inv.apply(a), inv.apply(b))))
    }

    /// Orbits of the group generated by right translations, sorted.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.size;
        let mut orbit_of = vec![usize::MAX; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut members = vec![start];
            orbit_of[start] = id;
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                for y in 0..n {
                    let z = self.op(x, y);
                    if orbit_of[z] == usize::MAX {
                        orbit_of[z] = id;
                        members.push(z);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            orbits.push(members);
        }
        orbits
    }

    /// The sub-table on `elements`, re-indexed in the given order.
    /// `None` if `elements` is not closed under the operation.
    pub fn restrict(&self, elements: &[usize]) -> Option<Self> {
        let mut index = vec![usize::MAX; self.size];
        for (i, &x) in elements.iter().enumerate() {
            index[x] = i;
        }
        let mut op = Vec::with_capacity(elements.len() * elements.len());
        for &x in elements {
            for &y in elements {
                let z = index[self.op(x, y)];
                if z == usize::MAX {
                    return None;
                }
                op.push(z);
            }
        }
        let labels = self.labels.as_ref().map(|l| elements.iter().map(|&x| l[x].clone()).collect());
        Some(Self { size: elements.len(), op, labels })
    }

    /// Entrywise equality, ignoring labels.
    pub fn same_operation(&self, other: &MagmaTable) -> bool {
        self.size == other.size && self.op == other.op
    }
}

/// Outcome of an exhaustive axiom scan. Witness lists are sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RackReport {
    pub is_rack: bool,
    pub is_quandle: bool,
    pub sd_violations: Vec<(usize, usize, usize)>,
    pub bijectivity_violations: Vec<usize>,
    pub idem_violations: Vec<usize>,
}

/// Exhaustive rack check over all `n³` triples and all `n` right translations.
///
/// The idempotency scan runs as well, so `is_quandle` is always meaningful.
pub fn verify_rack(m: &MagmaTable) -> RackReport {
    verify_quandle(m)
}

pub fn verify_quandle(m: &MagmaTable) -> RackReport {
    let n = m.size();
    let mut sd_violations = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let xy = m.op(x, y);
            for z in 0..n {
                if m.op(xy, z) != m.op(m.op(x, z), m.op(y, z)) {
                    sd_violations.push((x, y, z));
                }
            }
        }
    }
    let bijectivity_violations: Vec<usize> = (0..n)
        .filter(|&y| {
            let mut seen = vec![false; n];
            (0..n).any(|x| std::mem::replace(&mut seen[m.op(x, y)], true))
        })
        .collect();
    let idem_violations: Vec<usize> = (0..n).filter(|&x| m.op(x, x) != x).collect();
    let is_rack = sd_violations.is_empty() && bijectivity_violations.is_empty();
    RackReport {
        is_rack,
        is_quandle: is_rack && idem_violations.is_empty(),
        sd_violations,
        bijectivity_violations,
        idem_violations,
    }
}

/// `a ◁ b = b⁻¹ a b`.
pub fn conjugation_quandle(g: &FiniteGroup) -> MagmaTable {
    let table = MagmaTable::from_fn(g.order(), |a, b| g.conjugate(a, b));
    attach_group_labels(table, g)
}

/// `x ◁ y = x`.
pub fn trivial_quandle(n: usize) -> MagmaTable {
    MagmaTable::from_fn(n, |x, _| x)
}

/// `g₁ ◁ g₂ = σ(g₁ g₂⁻¹) g₂` for an automorphism `σ`.
pub fn generalized_alexander(g: &FiniteGroup, sigma: &Permutation) -> Result<MagmaTable> {
    g.check_automorphism(sigma)?;
    let table = MagmaTable::from_fn(g.order(), |a, b| g.mul(sigma.apply(g.mul(a, g.inverse(b))), b));
    Ok(attach_group_labels(table, g))
}

fn attach_group_labels(table: MagmaTable, g: &FiniteGroup) -> MagmaTable {
    match g.labels() {
        Some(labels) => table.with_labels(labels.to_vec()).expect("one label per element"),
        None => table,
    }
}

/// `ι(x)`: the unique `y` with `y ◁ x = x`, found by scanning the column of `x`.
pub fn iota(m: &MagmaTable, x: usize) -> Option<usize> {
    let mut hits = (0..m.size()).filter(|&y| m.op(y, x) == x);
    let first = hits.next()?;
    hits.next().is_none().then_some(first)
}

/// The quandle `x ◁^ι y = ι(x) ◁ y` associated with a rack.
pub fn associated_quandle(m: &MagmaTable) -> Result<MagmaTable> {
    if !verify_rack(m).is_rack {
        return Err(Error::NotARack);
    }
    let iotas: Vec<usize> = (0..m.size()).map(|x| iota(m, x).ok_or(Error::NotARack)).collect::<Result<_>>()?;
    let mut table = MagmaTable::from_fn(m.size(), |x, y| m.op(iotas[x], y));
    table.labels = m.labels.clone();
    Ok(table)
}

/// First pair `(x, y)` with `f(x ◁ y) ≠ f(x) ◁ f(y)`.
pub fn morphism_witness(f: &[usize], src: &MagmaTable, dst: &MagmaTable) -> Option<(usize, usize)> {
    assert_eq!(f.len(), src.size(), "map must be total on the source");
    for x in 0..src.size() {
        for y in 0..src.size() {
            if f[src.op(x, y)] != dst.op(f[x], f[y]) {
                return Some((x, y));
            }
        }
    }
    None
}

pub fn is_morphism(f: &[usize], src: &MagmaTable, dst: &MagmaTable) -> bool {
    f.iter().all(|&y| y < dst.size()) && morphism_witness(f, src, dst).is_none()
}
