//! Backtracking search for simplicial maps out of a finite simplicial set.
//!
//! Nondegenerate simplices of the source are assigned in (dimension, index)
//! order; candidates come from the target's simplex table in table order, so
//! solutions are produced in lexicographic order of their image sequences.
//! Candidates are pruned by face compatibility and by optional per-simplex
//! restrictions (a forced value, or an allowed set).

use std::ops::ControlFlow;
use std::sync::Arc;

use super::table::SimplexTable;
use super::{FiniteSimplicialSet, SimplexId, SimplicialMap};

/// Per-simplex restriction on the image: a forced value, and/or the value its
/// image must take under a projection table (`over[d][v]`).
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Restriction {
    pub fixed: Option<u32>,
    pub over: Option<u32>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Partial assignments extended by one simplex.
    pub nodes: u64,
    /// Candidate values tried and rejected, either immediately or after their subtree failed.
    pub refuted: u64,
}

struct Slot {
    dim: usize,
    /// For each face: (slot of its base, the degeneracy word to apply).
    faces: Vec<(usize, Vec<usize>)>,
}

pub(crate) struct MapSearch<'a> {
    table: &'a SimplexTable,
    projection: Option<&'a [Vec<u32>]>,
    slots: Vec<Slot>,
    restrictions: Vec<Restriction>,
}

impl<'a> MapSearch<'a> {
    pub fn new(source: &FiniteSimplicialSet, table: &'a SimplexTable) -> Self {
        let order: Vec<SimplexId> = source.ids().collect();
        let mut offsets = vec![0usize];
        for l in source.levels() {
            offsets.push(offsets.last().unwrap() + l.len());
        }
        let slots = order
            .iter()
            .map(|&id| Slot {
                dim: id.dim,
                faces: source.simplex(id).faces.iter().map(|f| (offsets[f.base.dim] + f.base.index, f.word.clone())).collect(),
            })
            .collect();
        let restrictions = vec![Restriction::default(); order.len()];
        Self { table, projection: None, slots, restrictions }
    }

    /// Sets the projection table used by `Restriction::over`.
    pub fn with_projection(mut self, projection: &'a [Vec<u32>]) -> Self {
        self.projection = Some(projection);
        self
    }

    pub fn restrict(&mut self, slot: usize, r: Restriction) {
        self.restrictions[slot] = r;
    }

    fn face_value(&self, values: &[u32], slot: usize, i: usize) -> u32 {
        let (base_slot, word) = &self.slots[slot].faces[i];
        self.table.apply_word(self.slots[*base_slot].dim, values[*base_slot], word)
    }

    fn admits(&self, values: &[u32], slot: usize, v: u32) -> bool {
        let s = &self.slots[slot];
        let r = self.restrictions[slot];
        if r.fixed.is_some_and(|x| x != v) {
            return false;
        }
        if let (Some(y), Some(proj)) = (r.over, self.projection) {
            if proj[s.dim][v as usize] != y {
                return false;
            }
        }
        if s.dim == 0 {
            return true;
        }
        let faces = &self.table.faces[s.dim][v as usize];
        (0..=s.dim).all(|i| faces[i] == self.face_value(values, slot, i))
    }

    fn candidates(&self, values: &[u32], slot: usize) -> Vec<u32> {
        let s = &self.slots[slot];
        if s.dim > self.table.top() {
            return Vec::new();
        }
        if let Some(x) = self.restrictions[slot].fixed {
            return vec![x];
        }
        if s.dim == 0 {
            (0..self.table.levels[0].len() as u32).collect()
        } else {
            let f0 = self.face_value(values, slot, 0);
            self.table.by_face0[s.dim][f0 as usize].clone()
        }
    }

    fn descend<B>(&self, values: &mut Vec<u32>, stats: &mut SearchStats, visit: &mut impl FnMut(&[u32]) -> ControlFlow<B>) -> ControlFlow<B> {
        let slot = values.len();
        if slot == self.slots.len() {
            return visit(values);
        }
        for v in self.candidates(values, slot) {
            if !self.admits(values, slot, v) {
                stats.refuted += 1;
                continue;
            }
            stats.nodes += 1;
            values.push(v);
            let before = stats.nodes;
            let flow = self.descend(values, stats, visit);
            values.pop();
            flow?;
            // A subtree that produced no complete assignment refutes this value.
            if stats.nodes == before && slot + 1 < self.slots.len() {
                stats.refuted += 1;
            }
        }
        ControlFlow::Continue(())
    }

    /// Runs the search, calling `visit` on each complete assignment in order.
    pub fn run<B>(&self, mut visit: impl FnMut(&[u32]) -> ControlFlow<B>) -> (Option<B>, SearchStats) {
        let mut stats = SearchStats::default();
        let mut values = Vec::with_capacity(self.slots.len());
        let flow = self.descend(&mut values, &mut stats, &mut visit);
        (flow.break_value(), stats)
    }

    /// Converts a complete assignment into a map.
    pub fn to_map(&self, source: &Arc<FiniteSimplicialSet>, target: &Arc<FiniteSimplicialSet>, values: &[u32]) -> SimplicialMap {
        let mut images: Vec<Vec<_>> = source.levels().iter().map(|l| Vec::with_capacity(l.len())).collect();
        for (slot, &v) in values.iter().enumerate() {
            let d = self.slots[slot].dim;
            images[d].push(self.table.levels[d][v as usize].clone());
        }
        SimplicialMap::from_parts(source.clone(), target.clone(), images)
    }
}

/// Every simplicial map `A -> X`, in lexicographic order of generator images.
pub fn enumerate_maps(a: &Arc<FiniteSimplicialSet>, x: &Arc<FiniteSimplicialSet>) -> Vec<SimplicialMap> {
    let table = SimplexTable::new(x, a.dim().unwrap_or(0));
    let search = MapSearch::new(a, &table);
    let mut out = Vec::new();
    search.run::<()>(|values| {
        out.push(search.to_map(a, x, values));
        ControlFlow::Continue(())
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{boundary, simplex};

    /// Number of monotone maps [m] -> [n], counted by direct recursion on the image of 0.
    fn monotone_count(m: usize, lo: usize, n: usize) -> usize {
        if m == 0 {
            return n + 1 - lo;
        }
        (lo..=n).map(|v| monotone_count(m - 1, v, n)).sum()
    }

    #[test]
    fn hom_between_simplices_matches_monotone_count() {
        for m in 0..=3 {
            for n in 0..=3 {
                let a = Arc::new(simplex(m));
                let x = Arc::new(simplex(n));
                let maps = enumerate_maps(&a, &x);
                assert_eq!(maps.len(), monotone_count(m, 0, n), "Hom(Δ{m}, Δ{n})");
                for f in &maps {
                    f.check().unwrap();
                }
            }
        }
    }

    #[test]
    fn hom_examples() {
        assert_eq!(enumerate_maps(&Arc::new(simplex(1)), &Arc::new(simplex(1))).len(), 3);
        assert_eq!(enumerate_maps(&Arc::new(boundary(0)), &Arc::new(simplex(2))).len(), 1);
        assert_eq!(enumerate_maps(&Arc::new(boundary(0)), &Arc::new(FiniteSimplicialSet::empty())).len(), 1);
        assert_eq!(enumerate_maps(&Arc::new(simplex(0)), &Arc::new(simplex(2))).len(), 3);
        assert!(enumerate_maps(&Arc::new(simplex(0)), &Arc::new(FiniteSimplicialSet::empty())).is_empty());
    }

    #[test]
    fn maps_are_distinct_and_ordered() {
        let a = Arc::new(boundary(2));
        let x = Arc::new(simplex(2));
        let maps = enumerate_maps(&a, &x);
        let set: std::collections::HashSet<_> = maps.iter().collect();
        assert_eq!(set.len(), maps.len());
        // Each edge needs f(i) <= f(j), so these are the monotone vertex maps.
        assert_eq!(maps.len(), 10);
        for w in maps.windows(2) {
            assert!(w[0].images() < w[1].images());
        }
        for f in &maps {
            f.check().unwrap();
        }
    }
}
