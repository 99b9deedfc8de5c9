use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;

use super::{FiniteSimplicialSet, Simplex, SimplexId, SimplexRef, SimplicialMap};
use crate::error::{Error, Result};

/// Which standard object to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StandardKind {
    Simplex(usize),
    Boundary(usize),
    Horn(usize, usize),
}

/// A standard object together with its inclusion into the full simplex, when it has one.
#[derive(Debug, Clone)]
pub struct Standard {
    pub object: Arc<FiniteSimplicialSet>,
    pub inclusion: Option<SimplicialMap>,
}

pub(crate) fn vertex_set_name(set: &[usize]) -> String {
    if set.iter().all(|&v| v < 10) {
        format!("v{}", set.iter().join(""))
    } else {
        format!("v{}", set.iter().join("_"))
    }
}

fn vertex_set_of(name: &str) -> Option<Vec<usize>> {
    let digits = name.strip_prefix('v')?;
    if digits.contains('_') {
        digits.split('_').map(|t| t.parse().ok()).collect()
    } else {
        digits.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
    }
}

/// The map between subobjects of standard simplices induced by an injective
/// vertex map, matching simplices by their vertex-set names.
pub(crate) fn vertex_map(source: &Arc<FiniteSimplicialSet>, target: &Arc<FiniteSimplicialSet>, f: impl Fn(usize) -> usize) -> Option<SimplicialMap> {
    let mut images: Vec<Vec<SimplexRef>> = vec![Vec::new(); source.levels().len()];
    for id in source.ids() {
        let set: Vec<usize> = vertex_set_of(source.name(id))?.into_iter().map(&f).collect();
        images[id.dim].push(SimplexRef::nondegenerate(target.find(&vertex_set_name(&set))?));
    }
    SimplicialMap::new(source.clone(), target.clone(), images).ok()
}

/// Faces of the full n-simplex whose vertex sets satisfy `keep`, as a simplicial set,
/// plus the vertex sets in storage order.
fn subsets_of_simplex(n: usize, keep: impl Fn(&[usize]) -> bool) -> (FiniteSimplicialSet, Vec<Vec<usize>>) {
    let mut index: HashMap<Vec<usize>, SimplexId> = HashMap::new();
    let mut levels: Vec<Vec<Simplex>> = Vec::new();
    let mut order = Vec::new();
    for d in 0..=n {
        let mut level = Vec::new();
        for set in (0..=n).combinations(d + 1) {
            if !keep(&set) {
                continue;
            }
            let faces = if d == 0 {
                Vec::new()
            } else {
                (0..=d)
                    .map(|i| {
                        let mut f = set.clone();
                        f.remove(i);
                        SimplexRef::nondegenerate(index[&f])
                    })
                    .collect()
            };
            index.insert(set.clone(), SimplexId::new(d, level.len()));
            level.push(Simplex { name: vertex_set_name(&set), faces });
            order.push(set);
        }
        levels.push(level);
    }
    (FiniteSimplicialSet::from_levels(levels), order)
}

/// The standard n-simplex: nonempty subsets of `{0..n}`.
pub fn simplex(n: usize) -> FiniteSimplicialSet {
    subsets_of_simplex(n, |_| true).0
}

/// The boundary of the n-simplex; empty for n = 0.
pub fn boundary(n: usize) -> FiniteSimplicialSet {
    subsets_of_simplex(n, |s| s.len() < n + 1).0
}

/// The horn Λⁿ_k: the boundary without the face opposite vertex `k`.
pub fn horn(n: usize, k: usize) -> Result<FiniteSimplicialSet> {
    if n == 0 || k > n {
        return Err(Error::InvalidGenerator(format!("horn({n},{k})")));
    }
    Ok(subsets_of_simplex(n, |s| s.len() < n || (s.len() == n && s.contains(&k))).0)
}

/// Inclusion of a face-closed family of subsets into Δⁿ.
fn subset_inclusion(n: usize, keep: impl Fn(&[usize]) -> bool) -> SimplicialMap {
    let (sub, sets) = subsets_of_simplex(n, keep);
    let full = subsets_of_simplex(n, |_| true);
    let pos: HashMap<&Vec<usize>, usize> = full.1.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut images: Vec<Vec<SimplexRef>> = vec![Vec::new(); sub.levels().len()];
    let mut offsets = vec![0usize; n + 2];
    for d in 0..=n {
        offsets[d + 1] = offsets[d] + full.0.count(d);
    }
    for set in &sets {
        let d = set.len() - 1;
        let flat = pos[set];
        images[d].push(SimplexRef::nondegenerate(SimplexId::new(d, flat - offsets[d])));
    }
    SimplicialMap::from_parts(Arc::new(sub), Arc::new(full.0), images)
}

pub fn boundary_inclusion(n: usize) -> SimplicialMap {
    subset_inclusion(n, |s| s.len() < n + 1)
}

pub fn horn_inclusion(n: usize, k: usize) -> Result<SimplicialMap> {
    if n == 0 || k > n {
        return Err(Error::InvalidGenerator(format!("horn({n},{k})")));
    }
    Ok(subset_inclusion(n, |s| s.len() < n || (s.len() == n && s.contains(&k))))
}

pub fn standard(kind: StandardKind) -> Result<Standard> {
    Ok(match kind {
        StandardKind::Simplex(n) => Standard { object: Arc::new(simplex(n)), inclusion: None },
        StandardKind::Boundary(n) => {
            let inc = boundary_inclusion(n);
            Standard { object: inc.source().clone(), inclusion: Some(inc) }
        }
        StandardKind::Horn(n, k) => {
            let inc = horn_inclusion(n, k)?;
            Standard { object: inc.source().clone(), inclusion: Some(inc) }
        }
    })
}

/// A generating map: a boundary inclusion (I) or a horn inclusion (J).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    I { n: usize },
    J { n: usize, k: usize },
}

impl Generator {
    pub fn dim(self) -> usize {
        match self {
            Generator::I { n } | Generator::J { n, .. } => n,
        }
    }

    pub fn set(self) -> GeneratorSet {
        match self {
            Generator::I { .. } => GeneratorSet::I,
            Generator::J { .. } => GeneratorSet::J,
        }
    }

    /// The inclusion `∂Δⁿ → Δⁿ` or `Λⁿ_k → Δⁿ`.
    pub fn inclusion(self) -> SimplicialMap {
        thread_local! {
            static CACHE: std::cell::RefCell<HashMap<Generator, SimplicialMap>> = Default::default();
        }
        CACHE.with(|c| {
            c.borrow_mut()
                .entry(self)
                .or_insert_with(|| match self {
                    Generator::I { n } => boundary_inclusion(n),
                    Generator::J { n, k } => horn_inclusion(n, k).expect("generator parameters checked on construction"),
                })
                .clone()
        })
    }

    pub fn source(self) -> Arc<FiniteSimplicialSet> {
        self.inclusion().source().clone()
    }

    pub fn target(self) -> Arc<FiniteSimplicialSet> {
        self.inclusion().target().clone()
    }

    pub fn checked(self) -> Result<Self> {
        match self {
            Generator::J { n, k } if n == 0 || k > n => Err(Error::InvalidGenerator(format!("horn({n},{k})"))),
            g => Ok(g),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::I { n } => write!(f, "{n}"),
            Generator::J { n, k } => write!(f, "{n},{k}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorSet {
    I,
    J,
}

impl GeneratorSet {
    /// Generators up to the dimension cap, in (n, k) order.
    pub fn members(self, cap: usize) -> Vec<Generator> {
        match self {
            GeneratorSet::I => (0..=cap).map(|n| Generator::I { n }).collect(),
            GeneratorSet::J => (1..=cap).flat_map(|n| (0..=n).map(move |k| Generator::J { n, k })).collect(),
        }
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeneratorSet::I => "I",
            GeneratorSet::J => "J",
        })
    }
}
