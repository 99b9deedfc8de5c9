//! Seeded random generators for small simplicial sets, maps and presentations.
#![allow(dead_code)]

use std::sync::Arc;

use itertools::Itertools;
use modelcat::cells::{Attachment, Realization};
use modelcat::simplicial::{enumerate_maps, simplex, Generator, GeneratorSet};
use modelcat::{FiniteSimplicialSet, SimplexRef, SimplicialMap};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Gen {
    pub rng: ChaCha8Rng,
}

/// The map `Δⁿ -> X` classifying `r`. `source` must be a standard n-simplex.
pub fn yoneda(source: &Arc<FiniteSimplicialSet>, x: &Arc<FiniteSimplicialSet>, r: &SimplexRef) -> SimplicialMap {
    let n = r.dim();
    let mut images = Vec::new();
    for d in 0..=n {
        let mut level = Vec::new();
        for set in (0..=n).combinations(d + 1) {
            let mut cur = r.clone();
            for v in (0..=n).rev() {
                if !set.contains(&v) {
                    cur = x.face(&cur, v);
                }
            }
            level.push(cur);
        }
        images.push(level);
    }
    SimplicialMap::new(source.clone(), x.clone(), images).expect("classifying maps are simplicial")
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    pub fn pick<T: Clone>(&mut self, items: &[T]) -> Option<T> {
        items.choose(&mut self.rng).cloned()
    }

    /// A random simplex of dimension `d`, degenerate ones included.
    pub fn simplex_of(&mut self, x: &FiniteSimplicialSet, d: usize) -> Option<SimplexRef> {
        self.pick(&x.enumerate_simplices(d))
    }

    /// A random map `A -> X`, drawn uniformly from the whole hom-set.
    pub fn map_between(&mut self, a: &Arc<FiniteSimplicialSet>, x: &Arc<FiniteSimplicialSet>) -> Option<SimplicialMap> {
        self.pick(&enumerate_maps(a, x))
    }

    /// An attaching map for `g` into `x`: the boundary (or horn) of a random
    /// simplex, or for small targets any map at all.
    pub fn attaching_map(&mut self, g: Generator, x: &Arc<FiniteSimplicialSet>) -> Option<SimplicialMap> {
        let inc = g.inclusion();
        if matches!(g, Generator::I { n: 0 }) {
            return Some(SimplicialMap::from_empty(x).with_source(inc.source().clone()).unwrap());
        }
        if x.size() <= 8 && self.chance(0.5) {
            if let Some(m) = self.map_between(inc.source(), x) {
                return Some(m);
            }
        }
        let r = self.simplex_of(x, g.dim())?;
        Some(yoneda(inc.target(), x, &r).after(&inc).unwrap())
    }

    /// A random object with at most `max_size` nondegenerate simplices, built
    /// from a few vertices by attaching edges and triangles.
    pub fn object(&mut self, max_size: usize) -> Arc<FiniteSimplicialSet> {
        if max_size == 0 {
            return Arc::new(FiniteSimplicialSet::empty());
        }
        let vertices = 1 + self.below(3.min(max_size));
        let mut b = modelcat::simplicial::SimplicialSetBuilder::new();
        for v in 0..vertices {
            b.vertex(format!("x{v}"));
        }
        let mut r = Realization::new(Arc::new(b.build().unwrap()));
        let cells = self.below(max_size - vertices + 1);
        for _ in 0..cells {
            let n = if self.chance(0.6) { 1 } else { 2 };
            let g = Generator::I { n };
            if let Some(a) = self.attaching_map(g, r.current()) {
                r.attach_stage(vec![Attachment::new(g, a).unwrap()]).unwrap();
            }
        }
        r.current().clone()
    }

    /// Any small object, sometimes empty, sometimes a standard simplex.
    pub fn small_object(&mut self, max_size: usize) -> Arc<FiniteSimplicialSet> {
        match self.below(6) {
            0 => Arc::new(simplex(self.below(2))),
            1 if max_size >= 1 => Arc::new(FiniteSimplicialSet::empty()),
            _ => self.object(max_size),
        }
    }

    /// A random cell presentation over `base`.
    pub fn presentation(&mut self, base: Arc<FiniteSimplicialSet>, set: Option<GeneratorSet>, max_stages: usize, max_cells: usize, max_dim: usize) -> Realization {
        let mut r = Realization::new(base);
        let stages = 1 + self.below(max_stages);
        let mut budget = max_cells;
        for _ in 0..stages {
            let want = self.below(4).min(budget);
            let mut atts = Vec::new();
            for _ in 0..want {
                let kind = set.unwrap_or(if self.chance(0.5) { GeneratorSet::I } else { GeneratorSet::J });
                let g = match kind {
                    GeneratorSet::I => Generator::I { n: self.below(max_dim + 1) },
                    GeneratorSet::J => {
                        let n = 1 + self.below(max_dim.max(1));
                        Generator::J { n, k: self.below(n + 1) }
                    }
                };
                if let Some(a) = self.attaching_map(g, r.current()) {
                    atts.push(Attachment::new(g, a).unwrap());
                }
            }
            budget -= atts.len();
            r.attach_stage(atts).unwrap();
        }
        r
    }
}
