//! Isomorphism search between finite magmas.
//!
//! Candidates for each element are restricted to elements with the same
//! [`ElementSignature`]; every tentative assignment is closed under the
//! operation (`f(x◁y)` is forced by `f(x)` and `f(y)`) before branching again.

use super::MagmaTable;
use crate::error::{Error, Result};
use crate::perm::{cycle_type_of, Permutation};

/// Per-element data preserved by every isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSignature {
    idempotent: bool,
    /// Cycle type of `y ↦ y ◁ x`, or `None` when that map is not a bijection.
    right_cycle_type: Option<Vec<usize>>,
    /// Sorted preimage counts of `y ↦ y ◁ x`.
    right_profile: Vec<usize>,
    /// Sorted preimage counts of `y ↦ x ◁ y`.
    left_profile: Vec<usize>,
    left_fixed: usize,
}

fn preimage_profile(images: &[usize]) -> Vec<usize> {
    let mut counts = vec![0; images.len()];
    for &y in images {
        counts[y] += 1;
    }
    counts.sort_unstable();
    counts
}

pub fn element_signature(m: &MagmaTable, x: usize) -> ElementSignature {
    let right = m.right_translation(x);
    let left = m.left_translation(x);
    let right_profile = preimage_profile(&right);
    let bijective = right_profile.iter().all(|&c| c == 1);
    ElementSignature {
        idempotent: m.op(x, x) == x,
        right_cycle_type: bijective.then(|| cycle_type_of(&right)),
        right_profile,
        left_profile: preimage_profile(&left),
        left_fixed: left.iter().enumerate().filter(|&(y, &z)| y == z).count(),
    }
}

const UNSET: usize = usize::MAX;

#[derive(Clone)]
struct State {
    forward: Vec<usize>,
    backward: Vec<usize>,
    assigned: Vec<usize>,
}

struct Search<'a> {
    a: &'a MagmaTable,
    b: &'a MagmaTable,
    sig_a: Vec<ElementSignature>,
    sig_b: Vec<ElementSignature>,
}

impl Search<'_> {
    /// Assigns `x ↦ y` and everything it forces. `false` on contradiction.
    fn assign(&self, state: &mut State, x: usize, y: usize) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            match (state.forward[x], state.backward[y]) {
                (UNSET, UNSET) => {}
                (fy, _) if fy == y => continue,
                _ => return false,
            }
            if self.sig_a[x] != self.sig_b[y] {
                return false;
            }
            state.forward[x] = y;
            state.backward[y] = x;
            state.assigned.push(x);
            for i in 0..state.assigned.len() {
                let u = state.assigned[i];
                let fu = state.forward[u];
                queue.push((self.a.op(u, x), self.b.op(fu, y)));
                queue.push((self.a.op(x, u), self.b.op(y, fu)));
            }
        }
        true
    }

    fn extend(&self, state: State) -> Option<Vec<usize>> {
        let n = self.a.size();
        let backward = &state.backward;
        let candidates = |x: usize| (0..n).filter(move |&y| backward[y] == UNSET && self.sig_a[x] == self.sig_b[y]);
        let next = (0..n).filter(|&x| state.forward[x] == UNSET).min_by_key(|&x| candidates(x).count());
        let Some(x) = next else {
            return Some(state.forward);
        };
        for y in candidates(x).collect::<Vec<_>>() {
            let mut branch = state.clone();
            if self.assign(&mut branch, x, y) {
                if let Some(found) = self.extend(branch) {
                    return Some(found);
                }
            }
        }
        None
    }
}

/// A bijection `f` with `f(x ◁ y) = f(x) ◁ f(y)`, or `None` once the search is exhausted.
pub fn find_isomorphism(a: &MagmaTable, b: &MagmaTable) -> Result<Option<Permutation>> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch { left: a.size(), right: b.size() });
    }
    let n = a.size();
    let sig_a: Vec<ElementSignature> = (0..n).map(|x| element_signature(a, x)).collect();
    let sig_b: Vec<ElementSignature> = (0..n).map(|x| element_signature(b, x)).collect();
    let (mut sorted_a, mut sorted_b) = (sig_a.clone(), sig_b.clone());
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return Ok(None);
    }
    let search = Search { a, b, sig_a, sig_b };
    let state = State { forward: vec![UNSET; n], backward: vec![UNSET; n], assigned: Vec::new() };
    Ok(search.extend(state).map(|f| Permutation::new(f).expect("search yields bijections")))
}
