//! Discrete principal bundles, equivariant maps and gauge transformations.
//!
//! A bundle over a base of size `|M|` with structure group `G` is encoded as
//! `M × G`: point `p = (m, g)` has index `m·|G| + g`, projection `π(p) = m`,
//! chart `ψ_m(p) = g` and right action `(m, g)·h = (m, g·h)`. The canonical
//! section is `s(m) = ψ_m⁻¹(e)`.
//!
//! An equivariant map `f ∈ Map(P,G)^G` is stored by its values `c_m = f(s(m))`;
//! elsewhere `f(m, g) = g⁻¹ c_m g`.
//!
//! Composition convention: `(f₁f₂)(p) = f₁(p)f₂(p)` and `φ_{f₁f₂} = φ_{f₁} ∘ φ_{f₂}`
//! (apply `φ_{f₂}` first), so `f ↦ φ_f` is a homomorphism, not an anti-homomorphism.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{catalog, FiniteGroup, GroupFile};
use crate::perm::Permutation;

/// Default cap on `|G|^|M|` for [`enumerate_maps`].
pub const DEFAULT_ENUMERATION_CAP: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscreteBundle {
    group: Arc<FiniteGroup>,
    base_size: usize,
}

/// Either a catalog name or an inline group table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Name(String),
    Inline(GroupFile),
}

impl GroupSpec {
    pub fn resolve(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Name(name) => catalog(name),
            GroupSpec::Inline(file) => FiniteGroup::from_file(file.clone()),
        }
    }
}

/// `{"group": <name or inline table>, "base_size": int}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleFile {
    pub group: GroupSpec,
    pub base_size: usize,
}

/// `{"section_values": [int, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapFile {
    pub section_values: Vec<usize>,
}

/// The bundle `M × G → M` with right multiplication on fibers.
pub fn trivial_bundle(group: FiniteGroup, base_size: usize) -> Result<DiscreteBundle> {
    DiscreteBundle::new(group, base_size)
}

impl DiscreteBundle {
    pub fn new(group: impl Into<Arc<FiniteGroup>>, base_size: usize) -> Result<Self> {
        if base_size == 0 {
            return Err(Error::Input("base must be nonempty".into()));
        }
        Ok(Self { group: group.into(), base_size })
    }

    pub fn from_file(file: &BundleFile) -> Result<Self> {
        Self::new(file.group.resolve()?, file.base_size)
    }

    /// Serializes with the group inline, or by name when it is the catalog entry.
    pub fn to_file(&self) -> BundleFile {
        let by_name = catalog(self.group.name()).is_ok_and(|g| g == *self.group);
        let group = if by_name {
            GroupSpec::Name(self.group.name().to_string())
        } else {
            GroupSpec::Inline(self.group.to_file())
        };
        BundleFile { group, base_size: self.base_size }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn base_size(&self) -> usize {
        self.base_size
    }

    pub fn total_size(&self) -> usize {
        self.base_size * self.group.order()
    }

    #[inline]
    pub fn point(&self, base: usize, coord: usize) -> usize {
        debug_assert!(base < self.base_size && coord < self.group.order());
        base * self.group.order() + coord
    }

    /// `π(p)`.
    #[inline]
    pub fn base_of(&self, p: usize) -> usize {
        p / self.group.order()
    }

    /// `ψ_{π(p)}(p)`.
    #[inline]
    pub fn coord(&self, p: usize) -> usize {
        p % self.group.order()
    }

    /// `p · g`.
    #[inline]
    pub fn act(&self, p: usize, g: usize) -> usize {
        self.point(self.base_of(p), self.group.mul(self.coord(p), g))
    }

    /// `s(m) = ψ_m⁻¹(e)`.
    pub fn section(&self, base: usize) -> usize {
        self.point(base, self.group.identity())
    }

    /// Points of `π⁻¹(m)` in `ψ_m` order.
    pub fn fiber(&self, base: usize) -> std::ops::Range<usize> {
        let n = self.group.order();
        base * n..(base + 1) * n
    }

    pub fn check_base(&self, base: usize) -> Result<()> {
        if base < self.base_size {
            Ok(())
        } else {
            Err(Error::BaseOutOfRange { base, size: self.base_size })
        }
    }

    /// Re-derives every structural invariant by exhaustion: surjective
    /// projection, fiber charts are bijections, `ψ_m(p·g) = ψ_m(p)·g`,
    /// `π(p·g) = π(p)`, and the action is free and transitive on fibers.
    pub fn check_structure(&self) -> Result<()> {
        let g = self.group();
        let bad = |msg: String| Err(Error::Input(msg));
        let mut hit = vec![false; self.base_size];
        for p in 0..self.total_size() {
            hit[self.base_of(p)] = true;
        }
        if hit.contains(&false) {
            return bad("projection is not surjective".into());
        }
        for m in 0..self.base_size {
            let mut charted = vec![false; g.order()];
            for p in self.fiber(m) {
                if self.base_of(p) != m || std::mem::replace(&mut charted[self.coord(p)], true) {
                    return bad(format!("chart of fiber {m} is not a bijection"));
                }
            }
            for p in self.fiber(m) {
                let mut orbit = vec![false; g.order()];
                for h in g.elements() {
                    let q = self.act(p, h);
                    if self.base_of(q) != m || self.coord(q) != g.mul(self.coord(p), h) {
                        return bad(format!("action moves {p} off its fiber or chart"));
                    }
                    if std::mem::replace(&mut orbit[self.coord(q)], true) {
                        return bad(format!("action is not free at {p}"));
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivariantMap {
    bundle: DiscreteBundle,
    section_values: Vec<usize>,
}

impl EquivariantMap {
    pub fn new(bundle: &DiscreteBundle, section_values: Vec<usize>) -> Result<Self> {
        if section_values.len() != bundle.base_size() {
            return Err(Error::SizeMismatch { left: section_values.len(), right: bundle.base_size() });
        }
        for &c in &section_values {
            bundle.group().check_element(c)?;
        }
        Ok(Self { bundle: bundle.clone(), section_values })
    }

    /// The unit `f ≡ e`.
    pub fn identity(bundle: &DiscreteBundle) -> Self {
        Self { bundle: bundle.clone(), section_values: vec![0; bundle.base_size()] }
    }

    /// Recovers the section values from a full table of `f`, rejecting
    /// tables that are not equivariant.
    pub fn from_total_values(bundle: &DiscreteBundle, values: &[usize]) -> Result<Self> {
        if values.len() != bundle.total_size() {
            return Err(Error::SizeMismatch { left: values.len(), right: bundle.total_size() });
        }
        for &v in values {
            bundle.group().check_element(v)?;
        }
        if let Some(&(point, element)) = check_equivariance(bundle, values).first() {
            return Err(Error::NotEquivariant { point, element });
        }
        Self::new(bundle, (0..bundle.base_size()).map(|m| values[bundle.section(m)]).collect())
    }

    pub fn from_file(bundle: &DiscreteBundle, file: &MapFile) -> Result<Self> {
        Self::new(bundle, file.section_values.clone())
    }

    pub fn to_file(&self) -> MapFile {
        MapFile { section_values: self.section_values.clone() }
    }

    pub fn bundle(&self) -> &DiscreteBundle {
        &self.bundle
    }

    pub fn section_values(&self) -> &[usize] {
        &self.section_values
    }

    /// `f(m, g) = g⁻¹ c_m g`.
    #[inline]
    pub fn eval(&self, p: usize) -> usize {
        let g = self.bundle.coord(p);
        self.bundle.group().conjugate(self.section_values[self.bundle.base_of(p)], g)
    }

    pub fn total_values(&self) -> Vec<usize> {
        (0..self.bundle.total_size()).map(|p| self.eval(p)).collect()
    }

    /// `Im(f)` over all total points, sorted.
    pub fn image(&self) -> Vec<usize> {
        let mut image = self.total_values();
        image.sort_unstable();
        image.dedup();
        image
    }

    /// Pointwise product `p ↦ self(p)·other(p)`.
    pub fn compose(&self, other: &EquivariantMap) -> Result<Self> {
        if self.bundle != other.bundle {
            return Err(Error::BundleMismatch);
        }
        let g = self.bundle.group();
        let values = self.section_values.iter().zip(&other.section_values).map(|(&a, &b)| g.mul(a, b)).collect();
        Ok(Self { bundle: self.bundle.clone(), section_values: values })
    }

    /// Pointwise inverse.
    pub fn inverse(&self) -> Self {
        let g = self.bundle.group();
        let values = self.section_values.iter().map(|&a| g.inverse(a)).collect();
        Self { bundle: self.bundle.clone(), section_values: values }
    }

    /// `φ_f(p) = p · f(p)`.
    pub fn to_gauge(&self) -> GaugeTransformation {
        let images = (0..self.bundle.total_size()).map(|p| self.bundle.act(p, self.eval(p))).collect();
        GaugeTransformation::new(&self.bundle, images).expect("φ_f is a gauge transformation")
    }
}

pub fn eval_map(f: &EquivariantMap, p: usize) -> usize {
    f.eval(p)
}

/// Every `(p, g)` with `f(p·g) ≠ g⁻¹ f(p) g`, for a full table of values.
///
/// This is the augmented-rack condition for `(P, G, f)`.
pub fn check_equivariance(bundle: &DiscreteBundle, values: &[usize]) -> Vec<(usize, usize)> {
    assert_eq!(values.len(), bundle.total_size());
    let g = bundle.group();
    let mut witnesses = Vec::new();
    for p in 0..bundle.total_size() {
        for h in g.elements() {
            if values[bundle.act(p, h)] != g.conjugate(values[p], h) {
                witnesses.push((p, h));
            }
        }
    }
    witnesses
}

pub fn to_gauge(f: &EquivariantMap) -> GaugeTransformation {
    f.to_gauge()
}

pub fn compose_maps(f1: &EquivariantMap, f2: &EquivariantMap) -> Result<EquivariantMap> {
    f1.compose(f2)
}

pub fn invert_map(f: &EquivariantMap) -> EquivariantMap {
    f.inverse()
}

/// `|G|^|M|`, saturating.
pub fn map_count(bundle: &DiscreteBundle) -> u128 {
    let n = bundle.group().order() as u128;
    u32::try_from(bundle.base_size()).ok().and_then(|m| n.checked_pow(m)).unwrap_or(u128::MAX)
}

/// All of `Map(P,G)^G`, in lexicographic order of section values.
pub fn enumerate_maps(bundle: &DiscreteBundle, cap: u128) -> Result<MapIter> {
    let count = map_count(bundle);
    if count > cap {
        return Err(Error::CapExceeded { count, cap });
    }
    Ok(MapIter { bundle: bundle.clone(), next: Some(vec![0; bundle.base_size()]) })
}

pub struct MapIter {
    bundle: DiscreteBundle,
    next: Option<Vec<usize>>,
}

impl Iterator for MapIter {
    type Item = EquivariantMap;

    fn next(&mut self) -> Option<EquivariantMap> {
        let current = self.next.take()?;
        let n = self.bundle.group().order();
        let mut succ = current.clone();
        for digit in succ.iter_mut().rev() {
            *digit += 1;
            if *digit < n {
                self.next = Some(succ);
                break;
            }
            *digit = 0;
        }
        Some(EquivariantMap { bundle: self.bundle.clone(), section_values: current })
    }
}

/// A fiber-preserving, `G`-equivariant permutation of the total space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaugeTransformation {
    bundle: DiscreteBundle,
    images: Permutation,
}

impl GaugeTransformation {
    pub fn new(bundle: &DiscreteBundle, images: Vec<usize>) -> Result<Self> {
        if images.len() != bundle.total_size() {
            return Err(Error::SizeMismatch { left: images.len(), right: bundle.total_size() });
        }
        let images = Permutation::new(images)?;
        for p in 0..bundle.total_size() {
            if bundle.base_of(images.apply(p)) != bundle.base_of(p) {
                return Err(Error::NotAGaugeTransformation(format!("moves {p} to another fiber")));
            }
            for g in bundle.group().elements() {
                if images.apply(bundle.act(p, g)) != bundle.act(images.apply(p), g) {
                    return Err(Error::NotAGaugeTransformation(format!("not equivariant at p = {p}, g = {g}")));
                }
            }
        }
        Ok(Self { bundle: bundle.clone(), images })
    }

    pub fn identity(bundle: &DiscreteBundle) -> Self {
        Self { bundle: bundle.clone(), images: Permutation::identity(bundle.total_size()) }
    }

    pub fn apply(&self, p: usize) -> usize {
        self.images.apply(p)
    }

    pub fn images(&self) -> &Permutation {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        Self { bundle: self.bundle.clone(), images: self.images.inverse() }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &GaugeTransformation) -> Result<Self> {
        if self.bundle != first.bundle {
            return Err(Error::BundleMismatch);
        }
        Ok(Self { bundle: self.bundle.clone(), images: self.images.after(&first.images) })
    }

    pub fn is_identity(&self) -> bool {
        self.images.is_identity()
    }

    /// The `c` with `φ(m, g) = (m, c·g)` for all `g`, if there is one.
    pub fn chart_multiplier(&self, base: usize) -> Option<usize> {
        let b = &self.bundle;
        let c = b.coord(self.apply(b.section(base)));
        b.fiber(base).all(|p| self.apply(p) == b.point(base, b.group().mul(c, b.coord(p)))).then_some(c)
    }

    /// The `f` with `φ_f = self`: `f(p) = ψ(p)⁻¹ ψ(φ(p))`.
    pub fn to_map(&self) -> EquivariantMap {
        let b = &self.bundle;
        let g = b.group();
        let values: Vec<usize> =
            (0..b.total_size()).map(|p| g.mul(g.inverse(b.coord(p)), b.coord(self.apply(p)))).collect();
        EquivariantMap::from_total_values(b, &values).expect("gauge transformations come from equivariant maps")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bundle(name: &str, base: usize) -> DiscreteBundle {
        trivial_bundle(catalog(name).unwrap(), base).unwrap()
    }

    #[test]
    fn bundle_sizes() {
        let b = bundle("S3", 1);
        assert_eq!(b.total_size(), 6);
        b.check_structure().unwrap();
        let b = bundle("trivial", 4);
        assert_eq!(b.total_size(), 4);
        assert!((0..4).all(|p| b.act(p, 0) == p));
        let b = bundle("Z2", 3);
        assert_eq!(b.total_size(), 6);
        assert!((0..3).all(|m| b.fiber(m).len() == 2));
        b.check_structure().unwrap();
        assert!(trivial_bundle(catalog("Z2").unwrap(), 0).is_err());
    }

    #[test]
    fn eval_examples() {
        let b = bundle("S3", 2);
        let g = b.group().clone();
        let f = EquivariantMap::new(&b, vec![3, 1]).unwrap();
        assert_eq!(f.eval(b.section(0)), 3);
        assert_eq!(f.eval(b.section(1)), 1);
        let b1 = bundle("S3", 1);
        let c = g.element_by_label("(1 2 3)").unwrap();
        let f1 = EquivariantMap::new(&b1, vec![c]).unwrap();
        for x in g.elements() {
            assert_eq!(eval_map(&f1, b1.point(0, x)), g.mul(g.mul(g.inverse(x), c), x));
        }
        let e = EquivariantMap::identity(&b);
        assert!(e.total_values().iter().all(|&v| v == 0));
    }

    #[test]
    fn equivariance_checks() {
        let b = bundle("S3", 2);
        assert!(check_equivariance(&b, &EquivariantMap::identity(&b).total_values()).is_empty());
        let f = EquivariantMap::new(&b, vec![4, 2]).unwrap();
        let mut values = f.total_values();
        assert!(check_equivariance(&b, &values).is_empty());
        values[7] = b.group().mul(values[7], 1);
        let witnesses = check_equivariance(&b, &values);
        assert!(!witnesses.is_empty());
        let g = b.group();
        for &(p, h) in &witnesses {
            assert_ne!(values[b.act(p, h)], g.conjugate(values[p], h));
            assert_eq!(b.base_of(p), 1);
        }
        assert!(matches!(EquivariantMap::from_total_values(&b, &values), Err(Error::NotEquivariant { .. })));
        assert_eq!(EquivariantMap::from_total_values(&b, &f.total_values()).unwrap(), f);
    }

    #[test]
    fn gauge_of_identity_map() {
        let b = bundle("D4", 2);
        assert!(EquivariantMap::identity(&b).to_gauge().is_identity());
    }

    #[test]
    fn z4_shift() {
        let b = bundle("Z4", 1);
        let phi = EquivariantMap::new(&b, vec![1]).unwrap().to_gauge();
        for g in 0..4 {
            assert_eq!(phi.apply(b.point(0, g)), b.point(0, (g + 1) % 4));
        }
    }

    #[test]
    fn gauge_inverse_law() {
        let b = bundle("S3", 2);
        for f in enumerate_maps(&b, DEFAULT_ENUMERATION_CAP).unwrap() {
            let inv = f.to_gauge().inverse();
            for p in 0..b.total_size() {
                assert_eq!(inv.apply(p), b.act(p, b.group().inverse(f.eval(p))));
            }
        }
    }

    #[test]
    fn composition_is_homomorphic() {
        let b = bundle("S3", 2);
        let maps: Vec<_> = enumerate_maps(&b, DEFAULT_ENUMERATION_CAP).unwrap().collect();
        for f1 in &maps {
            for f2 in maps.iter().step_by(5) {
                let lhs = compose_maps(f1, f2).unwrap().to_gauge();
                let rhs = f1.to_gauge().after(&f2.to_gauge()).unwrap();
                assert_eq!(lhs, rhs);
            }
            assert_eq!(f1.compose(&invert_map(f1)).unwrap(), EquivariantMap::identity(&b));
        }
    }

    #[test]
    fn z4_composition_adds_shifts() {
        let b = bundle("Z4", 1);
        let f = |c| EquivariantMap::new(&b, vec![c]).unwrap();
        for a in 0..4 {
            for c in 0..4 {
                assert_eq!(f(a).compose(&f(c)).unwrap(), f((a + c) % 4));
            }
        }
    }

    #[test]
    fn bundle_mismatch() {
        let f = EquivariantMap::identity(&bundle("Z2", 1));
        let g = EquivariantMap::identity(&bundle("Z2", 2));
        assert_eq!(f.compose(&g), Err(Error::BundleMismatch));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_maps(&bundle("trivial", 3), 10).unwrap().count(), 1);
        assert_eq!(enumerate_maps(&bundle("S4", 1), 100).unwrap().count(), 24);
        assert_eq!(enumerate_maps(&bundle("Z2", 2), 100).unwrap().count(), 4);
        assert_eq!(
            enumerate_maps(&bundle("S4", 5), DEFAULT_ENUMERATION_CAP).err(),
            Some(Error::CapExceeded { count: 24u128.pow(5), cap: DEFAULT_ENUMERATION_CAP })
        );
    }

    #[test]
    fn enumeration_is_distinct_and_injective() {
        let b = bundle("Q8", 2);
        let maps: Vec<_> = enumerate_maps(&b, 1000).unwrap().collect();
        let mut gauges: Vec<Vec<usize>> = maps.iter().map(|f| f.to_gauge().images().as_slice().to_vec()).collect();
        gauges.sort();
        gauges.dedup();
        assert_eq!(gauges.len(), 64);
    }

    #[test]
    fn gauge_acts_by_left_multiplication_in_charts() {
        let b = bundle("D3", 2);
        for f in enumerate_maps(&b, 1000).unwrap() {
            let phi = f.to_gauge();
            for m in 0..2 {
                assert_eq!(phi.chart_multiplier(m), Some(f.section_values()[m]));
            }
            assert_eq!(phi.to_map(), f);
        }
    }

    #[test]
    fn rejects_non_gauge_permutations() {
        let b = bundle("Z3", 2);
        // swap the two fibers
        let swap: Vec<usize> = (0..6).map(|p| (p + 3) % 6).collect();
        assert!(GaugeTransformation::new(&b, swap).is_err());
        // not equivariant: swap two points in one fiber
        let bad = vec![1, 0, 2, 3, 4, 5];
        assert!(GaugeTransformation::new(&b, bad).is_err());
    }

    #[test]
    fn file_round_trip() {
        let b = bundle("S3", 2);
        let file = b.to_file();
        assert_eq!(serde_json::to_string(&file).unwrap(), r#"{"group":"S3","base_size":2}"#);
        assert_eq!(DiscreteBundle::from_file(&file).unwrap(), b);
        let inline = r#"{"group": {"name": "Z2", "order": 2, "table": [[0,1],[1,0]]}, "base_size": 3}"#;
        let f: BundleFile = serde_json::from_str(inline).unwrap();
        let b2 = DiscreteBundle::from_file(&f).unwrap();
        assert_eq!(b2.total_size(), 6);
    }
}
