//! Racks and quandles induced by gauge transformations.
//!
//! An equivariant map `f` makes `(P, G, f)` an augmented rack, hence the rack
//! `p₁ ◁ p₂ = p₁·f(p₂)`. Its associated quandle is the gauge quandle
//!
//! ```text
//! p₁ ◁ᶠ p₂ = p₁·f(p₁)⁻¹f(p₂) = φ_f⁻¹(p₁)·f(p₂)
//! ```
//!
//! Every fiber is a subquandle, isomorphic through its chart to the
//! generalized Alexander quandle of `G` for the inner automorphism by the
//! section value. Quotients by a subgroup `H` exist whenever `Im(f)` normalizes `H`.

use serde::{Deserialize, Serialize};

use crate::bundle::{enumerate_maps, BundleFile, DiscreteBundle, EquivariantMap};
use crate::error::{Error, Result};
use crate::group::{CosetSide, FiniteGroup, Subgroup};
use crate::rack::{
    element_signature, find_isomorphism, generalized_alexander, verify_quandle, ElementSignature, MagmaTable,
    QuandleFile,
};

/// `p₁ ◁ p₂ = p₁·f(p₂)`; a rack, in general not a quandle.
pub fn rack_from_map(f: &EquivariantMap) -> MagmaTable {
    let b = f.bundle();
    let values = f.total_values();
    with_point_labels(MagmaTable::from_fn(b.total_size(), |p, q| b.act(p, values[q])), b)
}

fn with_point_labels(table: MagmaTable, b: &DiscreteBundle) -> MagmaTable {
    let g = b.group();
    if g.labels().is_none() && b.base_size() == 1 {
        return table;
    }
    let labels =
        (0..b.total_size())
            .map(|p| {
                if b.base_size() == 1 {
                    g.label(b.coord(p))
                } else {
                    format!("{}:{}", b.base_of(p), g.label(b.coord(p)))
                }
            })
            .collect();
    table.with_labels(labels).expect("one label per point")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaugeQuandle {
    map: EquivariantMap,
    table: MagmaTable,
}

/// Quandle file with a provenance block recording how it was built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaugeQuandleFile {
    #[serde(flatten)]
    pub quandle: QuandleFile,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub bundle: BundleFile,
    pub section_values: Vec<usize>,
}

/// The gauge quandle of `f`.
///
/// Both closed forms of the operation are tabulated and compared, and the
/// result is checked exhaustively against the quandle axioms. A failure of
/// either check is an internal error and panics.
pub fn build(f: &EquivariantMap) -> GaugeQuandle {
    let b = f.bundle();
    let g = b.group();
    let values = f.total_values();
    let by_values = MagmaTable::from_fn(b.total_size(), |p, q| b.act(p, g.mul(g.inverse(values[p]), values[q])));
    let phi_inv = f.to_gauge().inverse();
    let by_gauge = MagmaTable::from_fn(b.total_size(), |p, q| b.act(phi_inv.apply(p), values[q]));
    assert!(by_values.same_operation(&by_gauge), "closed forms of the gauge quandle disagree");
    let report = verify_quandle(&by_values);
    assert!(report.is_quandle, "gauge quandle fails the axioms: {report:?}");
    GaugeQuandle { map: f.clone(), table: with_point_labels(by_values, b) }
}

impl GaugeQuandle {
    pub fn bundle(&self) -> &DiscreteBundle {
        self.map.bundle()
    }

    pub fn map(&self) -> &EquivariantMap {
        &self.map
    }

    pub fn table(&self) -> &MagmaTable {
        &self.table
    }

    pub fn to_file(&self) -> GaugeQuandleFile {
        GaugeQuandleFile {
            quandle: self.table.clone().into(),
            provenance: Provenance {
                bundle: self.bundle().to_file(),
                section_values: self.map.section_values().to_vec(),
            },
        }
    }
}

/// The subquandle on `π⁻¹(m)`, indexed in chart order.
pub fn fiber_quandle(q: &GaugeQuandle, base: usize) -> Result<MagmaTable> {
    q.bundle().check_base(base)?;
    let points: Vec<usize> = q.bundle().fiber(base).collect();
    Ok(q.table.restrict(&points).expect("fibers are closed under the gauge quandle operation"))
}

/// A fiber quandle moved onto `G` through its chart `ψ_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberTransport {
    pub base: usize,
    /// Operation on `G`: `g₁ ◁ g₂ = ψ_m(ψ_m⁻¹(g₁) ◁ᶠ ψ_m⁻¹(g₂))`.
    pub table: MagmaTable,
    /// `points[i]` is the `i`-th point of the fiber table.
    pub points: Vec<usize>,
    /// `psi[i] = ψ_m(points[i])`.
    pub psi: Vec<usize>,
}

pub fn transport_fiber(q: &GaugeQuandle, base: usize) -> Result<FiberTransport> {
    let b = q.bundle();
    b.check_base(base)?;
    let g = b.group();
    let points: Vec<usize> = b.fiber(base).collect();
    let psi: Vec<usize> = points.iter().map(|&p| b.coord(p)).collect();
    let mut psi_inv = vec![usize::MAX; g.order()];
    for &p in &points {
        psi_inv[b.coord(p)] = p;
    }
    let mut table = MagmaTable::from_fn(g.order(), |g1, g2| b.coord(q.table.op(psi_inv[g1], psi_inv[g2])));
    if let Some(labels) = g.labels() {
        table = table.with_labels(labels.to_vec())?;
    }
    Ok(FiberTransport { base, table, points, psi })
}

/// The generalized Alexander quandle of `G` for conjugation by `f(s(m))`.
pub fn fiber_alexander(q: &GaugeQuandle, base: usize) -> Result<MagmaTable> {
    q.bundle().check_base(base)?;
    let g = q.bundle().group();
    generalized_alexander(g, &g.inner_automorphism(q.map.section_values()[base]))
}

/// The quotient of a gauge quandle by the right action of a subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedQuandle {
    pub subgroup: Subgroup,
    /// Orbits `p·H`, each sorted, ordered by smallest point.
    pub classes: Vec<Vec<usize>>,
    /// `class_of[p]` indexes `classes`.
    pub class_of: Vec<usize>,
    pub table: MagmaTable,
}

/// `[p₁] ◁ [p₂] = [p₁ ◁ᶠ p₂]` on `P/H`.
///
/// Requires `Im(f)` to lie in the normalizer of `H`, checked on every point.
/// Well-definedness is then re-checked over every pair of representatives.
pub fn reduce(q: &GaugeQuandle, h: &Subgroup) -> Result<ReducedQuandle> {
    let b = q.bundle();
    let g = b.group();
    for p in 0..b.total_size() {
        if let Some(element) = h.first_unnormalized(g, q.map.eval(p)) {
            return Err(Error::NormalizerViolation { point: p, element });
        }
    }

    let mut class_of = vec![usize::MAX; b.total_size()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for p in 0..b.total_size() {
        if class_of[p] != usize::MAX {
            continue;
        }
        let mut class: Vec<usize> = h.elements().iter().map(|&x| b.act(p, x)).collect();
        class.sort_unstable();
        for &x in &class {
            class_of[x] = classes.len();
        }
        classes.push(class);
    }

    let table = MagmaTable::from_fn(classes.len(), |i, j| class_of[q.table.op(classes[i][0], classes[j][0])]);
    for p1 in 0..b.total_size() {
        for p2 in 0..b.total_size() {
            let (i, j) = (class_of[p1], class_of[p2]);
            if class_of[q.table.op(p1, p2)] != table.op(i, j) {
                return Err(Error::NotWellDefined((p1, p2, classes[i][0], classes[j][0])));
            }
        }
    }
    let report = verify_quandle(&table);
    assert!(report.is_quandle, "reduced quandle fails the axioms: {report:?}");
    Ok(ReducedQuandle { subgroup: h.clone(), classes, class_of, table })
}

/// Quandle on right cosets `H\G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousQuandle {
    /// Right cosets `Hg`, sorted, ordered by smallest element.
    pub cosets: Vec<Vec<usize>>,
    pub coset_of: Vec<usize>,
    pub table: MagmaTable,
}

/// `[g₁] ◁ [g₂] = [σ_c(g₁g₂⁻¹)g₂]` on `H\G`, for `c` centralizing `H`.
pub fn homogeneous_quandle(g: &FiniteGroup, h: &Subgroup, c: usize) -> Result<HomogeneousQuandle> {
    g.check_element(c)?;
    if let Some(witness) = h.first_noncommuting(g, c) {
        return Err(Error::CentralizerViolation { element: c, witness });
    }
    let cosets = h.cosets(g, CosetSide::Right);
    let mut coset_of = vec![0; g.order()];
    for (i, coset) in cosets.iter().enumerate() {
        for &x in coset {
            coset_of[x] = i;
        }
    }
    let op = |g1: usize, g2: usize| g.mul(g.conjugate(g.mul(g1, g.inverse(g2)), c), g2);
    let table = MagmaTable::from_fn(cosets.len(), |i, j| coset_of[op(cosets[i][0], cosets[j][0])]);
    for g1 in g.elements() {
        for g2 in g.elements() {
            let (i, j) = (coset_of[g1], coset_of[g2]);
            if coset_of[op(g1, g2)] != table.op(i, j) {
                return Err(Error::NotWellDefined((g1, g2, cosets[i][0], cosets[j][0])));
            }
        }
    }
    let report = verify_quandle(&table);
    assert!(report.is_quandle, "homogeneous quandle fails the axioms: {report:?}");
    Ok(HomogeneousQuandle { cosets, coset_of, table })
}

/// One isomorphism class of gauge quandles found by [`census`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusClass {
    /// Section values of the first map in the class, in enumeration order.
    pub representative: Vec<usize>,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub bundle: BundleFile,
    pub maps: usize,
    pub classes: Vec<CensusClass>,
}

/// Groups the gauge quandles of every equivariant map on `bundle` into
/// isomorphism classes, ordered by first appearance.
pub fn census(bundle: &DiscreteBundle, cap: u128) -> Result<Census> {
    let mut reps: Vec<(Vec<ElementSignature>, MagmaTable)> = Vec::new();
    let mut classes: Vec<CensusClass> = Vec::new();
    let mut maps = 0;
    for f in enumerate_maps(bundle, cap)? {
        maps += 1;
        let table = build(&f).table;
        let n = table.size();
        let mut sig: Vec<ElementSignature> = (0..n).map(|x| element_signature(&table, x)).collect();
        sig.sort();
        let mut found = None;
        for (i, (rep_sig, rep)) in reps.iter().enumerate() {
            if *rep_sig == sig && find_isomorphism(&table, rep)?.is_some() {
                found = Some(i);
                break;
            }
        }
        match found {
            Some(i) => classes[i].size += 1,
            None => {
                reps.push((sig, table));
                classes.push(CensusClass { representative: f.section_values().to_vec(), size: 1 });
            }
        }
    }
    Ok(Census { bundle: bundle.to_file(), maps, classes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundle::{enumerate_maps, trivial_bundle};
    use crate::group::catalog;
    use crate::rack::{associated_quandle, is_morphism, trivial_quandle, verify_rack};

    fn bundle(name: &str, base: usize) -> DiscreteBundle {
        trivial_bundle(catalog(name).unwrap(), base).unwrap()
    }

    fn el(b: &DiscreteBundle, label: &str) -> usize {
        b.group().element_by_label(label).unwrap()
    }

    #[test]
    fn rack_of_identity_map_is_trivial() {
        let b = bundle("S3", 2);
        let r = rack_from_map(&EquivariantMap::identity(&b));
        assert!(r.same_operation(&trivial_quandle(12)));
    }

    #[test]
    fn constant_shift_rack() {
        let b = bundle("Z2", 1);
        let r = rack_from_map(&EquivariantMap::new(&b, vec![1]).unwrap());
        assert_eq!(r.rows(), vec![vec![1, 1], vec![0, 0]]);
        let report = verify_rack(&r);
        assert!(report.is_rack);
        assert!(!report.is_quandle);
        assert_eq!(report.idem_violations, vec![0, 1]);
    }

    #[test]
    fn associated_quandle_of_rack_is_gauge_quandle() {
        let b = bundle("D4", 2);
        for f in enumerate_maps(&b, 100).unwrap() {
            let rack = rack_from_map(&f);
            assert!(verify_rack(&rack).is_rack);
            let q = build(&f);
            assert!(associated_quandle(&rack).unwrap().same_operation(q.table()));
        }
    }

    #[test]
    fn trivial_structure_group() {
        let b = bundle("trivial", 5);
        let q = build(&EquivariantMap::identity(&b));
        assert!(q.table().same_operation(&trivial_quandle(5)));
    }

    #[test]
    fn identity_map_gives_trivial_quandle() {
        let b = bundle("Q8", 3);
        assert!(build(&EquivariantMap::identity(&b)).table().same_operation(&trivial_quandle(24)));
    }

    #[test]
    fn over_a_point_is_generalized_alexander() {
        let b = bundle("S3", 1);
        let g = b.group();
        for c in g.elements() {
            let q = build(&EquivariantMap::new(&b, vec![c]).unwrap());
            let alex = generalized_alexander(g, &g.inner_automorphism(c)).unwrap();
            assert!(q.table().same_operation(&alex));
        }
    }

    #[test]
    fn base_preserved() {
        let b = bundle("S3", 3);
        let f = EquivariantMap::new(&b, vec![1, 3, 5]).unwrap();
        let q = build(&f);
        for p in 0..18 {
            for r in 0..18 {
                assert_eq!(b.base_of(q.table().op(p, r)), b.base_of(p));
            }
        }
    }

    #[test]
    fn fiber_quandles() {
        let b = bundle("S3", 1);
        let q = build(&EquivariantMap::new(&b, vec![4]).unwrap());
        assert_eq!(&fiber_quandle(&q, 0).unwrap(), q.table());

        let b = bundle("trivial", 3);
        let q = build(&EquivariantMap::identity(&b));
        for m in 0..3 {
            assert!(fiber_quandle(&q, m).unwrap().same_operation(&trivial_quandle(1)));
        }
        assert!(matches!(fiber_quandle(&q, 3), Err(Error::BaseOutOfRange { .. })));
    }

    #[test]
    fn s3_fibers_transport_to_alexander() {
        let b = bundle("S3", 2);
        let f = EquivariantMap::new(&b, vec![el(&b, "(1 2)"), el(&b, "(1 2 3)")]).unwrap();
        let q = build(&f);
        for m in 0..2 {
            let fiber = fiber_quandle(&q, m).unwrap();
            assert!(verify_quandle(&fiber).is_quandle);
            let t = transport_fiber(&q, m).unwrap();
            assert!(is_morphism(&t.psi, &fiber, &t.table));
            let alex = fiber_alexander(&q, m).unwrap();
            assert_eq!(t.table, alex);
        }
        // the two fibers are not isomorphic to each other
        let f0 = fiber_quandle(&q, 0).unwrap();
        let f1 = fiber_quandle(&q, 1).unwrap();
        assert!(crate::rack::find_isomorphism(&f0, &f1).unwrap().is_none());
    }

    #[test]
    fn transport_of_identity_map_is_trivial() {
        let b = bundle("D4", 2);
        let q = build(&EquivariantMap::identity(&b));
        assert!(transport_fiber(&q, 1).unwrap().table.same_operation(&trivial_quandle(8)));
    }

    #[test]
    fn reduce_by_trivial_subgroup_is_identity() {
        let b = bundle("S3", 2);
        let q = build(&EquivariantMap::new(&b, vec![1, 4]).unwrap());
        let r = reduce(&q, &Subgroup::trivial(b.group())).unwrap();
        assert!(r.table.same_operation(q.table()));
        assert!(is_morphism(&r.class_of, q.table(), &r.table));
    }

    #[test]
    fn reduce_by_whole_group_collapses_fibers() {
        let b = bundle("S3", 3);
        let q = build(&EquivariantMap::new(&b, vec![1, 4, 0]).unwrap());
        let r = reduce(&q, &Subgroup::whole(b.group())).unwrap();
        assert!(r.table.same_operation(&trivial_quandle(3)));
        assert_eq!(r.classes.len(), 3);
    }

    #[test]
    fn reduce_s3_by_a3() {
        let b = bundle("S3", 1);
        let g = b.group();
        let a3 = Subgroup::generated_by(g, &[el(&b, "(1 2 3)")]).unwrap();
        let q = build(&EquivariantMap::new(&b, vec![el(&b, "(1 2)")]).unwrap());
        let r = reduce(&q, &a3).unwrap();
        assert_eq!(r.classes.len(), 2);
        // brute-force quotient: class of g1 ◁ g2 with classes {even, odd}
        let class = |x: usize| usize::from(!a3.contains(x));
        for g1 in g.elements() {
            for g2 in g.elements() {
                assert_eq!(class(q.table().op(g1, g2)), class(r.table.op(class(g1), class(g2))));
            }
        }
        assert!(r.table.same_operation(&trivial_quandle(2)));
        assert!(is_morphism(&r.class_of, q.table(), &r.table));
    }

    #[test]
    fn normalizer_violation() {
        let b = bundle("S3", 1);
        let g = b.group();
        let t = Subgroup::generated_by(g, &[el(&b, "(1 2)")]).unwrap();
        let q = build(&EquivariantMap::new(&b, vec![el(&b, "(1 2 3)")]).unwrap());
        let Err(Error::NormalizerViolation { point, element }) = reduce(&q, &t) else {
            panic!("expected a normalizer violation");
        };
        assert!(t.contains(element));
        assert!(!t.contains(g.conjugate(element, q.map().eval(point))));
    }

    #[test]
    fn homogeneous_examples() {
        let g = catalog("S3").unwrap();
        let c = g.element_by_label("(1 2 3)").unwrap();
        let h = Subgroup::trivial(&g);
        let hq = homogeneous_quandle(&g, &h, c).unwrap();
        assert!(hq.table.same_operation(&generalized_alexander(&g, &g.inner_automorphism(c)).unwrap()));

        let a3 = Subgroup::generated_by(&g, &[c]).unwrap();
        let hq = homogeneous_quandle(&g, &a3, 0).unwrap();
        assert!(hq.table.same_operation(&trivial_quandle(2)));

        let t = g.element_by_label("(1 2)").unwrap();
        assert_eq!(
            homogeneous_quandle(&g, &a3, t).unwrap_err(),
            Error::CentralizerViolation { element: t, witness: a3.elements()[1] }
        );
    }

    #[test]
    fn provenance_file() {
        let b = bundle("S3", 1);
        let q = build(&EquivariantMap::new(&b, vec![1]).unwrap());
        let json = serde_json::to_value(q.to_file()).unwrap();
        assert_eq!(json["size"], 6);
        assert_eq!(json["provenance"]["bundle"]["group"], "S3");
        assert_eq!(json["provenance"]["section_values"][0], 1);
        // still readable as a plain quandle file
        let plain: MagmaTable = serde_json::from_value(json).unwrap();
        assert!(plain.same_operation(q.table()));
    }

    #[test]
    fn census_regressions() {
        // sizes from a brute-force search over all relabelings
        let sizes = |name: &str, base: usize| -> Vec<usize> {
            census(&bundle(name, base), 10_000).unwrap().classes.iter().map(|c| c.size).collect()
        };
        assert_eq!(sizes("trivial", 3), vec![1]);
        assert_eq!(sizes("Z4", 1), vec![4]);
        assert_eq!(sizes("S3", 1), vec![1, 3, 2]);
        assert_eq!(sizes("Z2", 2), vec![2, 2]);
        assert_eq!(sizes("Z3", 2), vec![3, 6]);
        assert_eq!(sizes("Z2", 3), vec![2, 6]);
    }

    #[test]
    fn census_classes_follow_conjugacy_over_a_point() {
        let b = bundle("S3", 1);
        let c = census(&b, 100).unwrap();
        let g = b.group();
        let reps: Vec<usize> = c.classes.iter().map(|k| g.element_order(k.representative[0])).collect();
        assert_eq!(reps, vec![1, 2, 3]);
        assert_eq!(c.maps, 6);
    }

    #[test]
    fn census_cap() {
        assert!(matches!(census(&bundle("S4", 3), 10_000), Err(Error::CapExceeded { count: 13824, cap: 10_000 })));
    }
}
