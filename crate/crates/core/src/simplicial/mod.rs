//! Finite simplicial sets stored as nondegenerate simplices with face references
//! in Eilenberg–Zilber normal form, and the maps between them.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

pub(crate) mod map;
pub(crate) mod normal;
pub(crate) mod search;
pub(crate) mod standard;
pub(crate) mod table;

pub use map::SimplicialMap;
pub use search::enumerate_maps;
pub use standard::{boundary, boundary_inclusion, horn, horn_inclusion, simplex, standard, Generator, GeneratorSet, Standard, StandardKind};

use crate::error::{Error, Result};
use normal::{compose_seq, seq_to_word, word_is_normal, word_to_seq};

/// Identifies a nondegenerate simplex by dimension and position within that dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexId {
    pub dim: usize,
    pub index: usize,
}

impl SimplexId {
    pub const fn new(dim: usize, index: usize) -> Self {
        Self { dim, index }
    }
}

impl fmt::Display for SimplexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.dim, self.index)
    }
}

/// A possibly degenerate simplex `s_{w[0]} s_{w[1]} ... base` in normal form:
/// `word` is strictly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexRef {
    pub base: SimplexId,
    pub word: Vec<usize>,
}

impl SimplexRef {
    pub fn nondegenerate(base: SimplexId) -> Self {
        Self { base, word: Vec::new() }
    }

    pub fn new(base: SimplexId, word: Vec<usize>) -> Self {
        Self { base, word }
    }

    pub fn dim(&self) -> usize {
        self.base.dim + self.word.len()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.word.is_empty()
    }

    /// Value sequence of the underlying surjection `[dim] -> [base.dim]`.
    pub(crate) fn seq(&self) -> Vec<usize> {
        word_to_seq(&self.word, self.dim())
    }
}

/// A nondegenerate simplex: a display name and its ordered faces `d_0 .. d_dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simplex {
    pub name: String,
    pub faces: Vec<SimplexRef>,
}

/// A finite simplicial set.
///
/// Equality compares the face structure only; names are labels.
#[derive(Debug, Clone, Default)]
pub struct FiniteSimplicialSet {
    levels: Vec<Vec<Simplex>>,
}

impl PartialEq for FiniteSimplicialSet {
    fn eq(&self, other: &Self) -> bool {
        self.levels.len() == other.levels.len()
            && self.levels.iter().zip(&other.levels).all(|(a, b)| {
                a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.faces == y.faces)
            })
    }
}

impl Eq for FiniteSimplicialSet {}

impl FiniteSimplicialSet {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds without validation. Trailing empty dimensions are dropped.
    pub fn from_levels(mut levels: Vec<Vec<Simplex>>) -> Self {
        while levels.last().is_some_and(|l| l.is_empty()) {
            levels.pop();
        }
        Self { levels }
    }

    /// Builds and validates.
    pub fn new(levels: Vec<Vec<Simplex>>) -> Result<Self> {
        let s = Self::from_levels(levels);
        let report = s.validate();
        if report.is_valid() {
            Ok(s)
        } else {
            Err(Error::InvalidSet(report.to_string()))
        }
    }

    pub fn into_arc(self) -> Arc<Self> {
        Arc::new(self)
    }

    /// Largest dimension with a nondegenerate simplex; `None` for the empty object.
    pub fn dim(&self) -> Option<usize> {
        self.levels.len().checked_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn levels(&self) -> &[Vec<Simplex>] {
        &self.levels
    }

    pub fn count(&self, dim: usize) -> usize {
        self.levels.get(dim).map_or(0, Vec::len)
    }

    /// Total number of nondegenerate simplices.
    pub fn size(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn contains(&self, id: SimplexId) -> bool {
        id.index < self.count(id.dim)
    }

    pub fn simplex(&self, id: SimplexId) -> &Simplex {
        &self.levels[id.dim][id.index]
    }

    pub fn get(&self, id: SimplexId) -> Result<&Simplex> {
        self.levels.get(id.dim).and_then(|l| l.get(id.index)).ok_or(Error::UnknownSimplex(id))
    }

    pub fn name(&self, id: SimplexId) -> &str {
        &self.simplex(id).name
    }

    /// Nondegenerate simplices in (dimension, index) order.
    pub fn ids(&self) -> impl Iterator<Item = SimplexId> + '_ {
        self.levels.iter().enumerate().flat_map(|(d, l)| (0..l.len()).map(move |i| SimplexId::new(d, i)))
    }

    pub fn find(&self, name: &str) -> Option<SimplexId> {
        self.ids().find(|&id| self.name(id) == name)
    }

    pub(crate) fn name_index(&self) -> HashMap<&str, SimplexId> {
        self.ids().map(|id| (self.name(id), id)).collect()
    }

    /// `d_i` of an arbitrary simplex, renormalized.
    pub fn face(&self, r: &SimplexRef, i: usize) -> SimplexRef {
        let d = r.dim();
        assert!(d >= 1 && i <= d, "face index {i} out of range for dimension {d}");
        let seq = r.seq();
        let m = seq[i];
        let mut rest = seq.clone();
        rest.remove(i);
        let still_onto = (i > 0 && seq[i - 1] == m) || (i < d && seq[i + 1] == m);
        if still_onto {
            return SimplexRef::new(r.base, seq_to_word(&rest));
        }
        for v in rest.iter_mut() {
            if *v > m {
                *v -= 1;
            }
        }
        let stored = &self.simplex(r.base).faces[m];
        let composed = compose_seq(&stored.seq(), &rest);
        SimplexRef::new(stored.base, seq_to_word(&composed))
    }

    /// `s_j` of an arbitrary simplex, renormalized.
    pub fn degeneracy(&self, r: &SimplexRef, j: usize) -> SimplexRef {
        degenerate(r, j)
    }

    /// `s_w` applied to `r`, where `w` is a normal-form word for the appropriate dimension.
    pub fn apply_word(r: &SimplexRef, word: &[usize]) -> SimplexRef {
        let inner = r.seq();
        let outer = word_to_seq(word, r.dim() + word.len());
        SimplexRef::new(r.base, seq_to_word(&compose_seq(&inner, &outer)))
    }

    /// All simplices of dimension `d` in normal form, ordered by base dimension,
    /// then base index, then word.
    pub fn enumerate_simplices(&self, d: usize) -> Vec<SimplexRef> {
        let mut out = Vec::new();
        for e in 0..=d.min(self.levels.len().saturating_sub(1)) {
            if self.count(e) == 0 {
                continue;
            }
            let ws = normal::words(e, d - e);
            for index in 0..self.count(e) {
                for w in &ws {
                    out.push(SimplexRef::new(SimplexId::new(e, index), w.clone()));
                }
            }
        }
        out
    }

    /// Displays a reference as `name` or `s[i,j]·name`.
    pub fn ref_name(&self, r: &SimplexRef) -> String {
        let base = if self.contains(r.base) { self.name(r.base).to_string() } else { format!("?{}", r.base) };
        if r.word.is_empty() {
            base
        } else {
            let w: Vec<String> = r.word.iter().map(usize::to_string).collect();
            format!("s[{}]·{}", w.join(","), base)
        }
    }

    /// Checks structure and simplicial identities.
    pub fn validate(&self) -> ValidationReport {
        let mut issues = Vec::new();
        let mut seen: HashMap<&str, SimplexId> = HashMap::new();
        for id in self.ids() {
            let s = self.simplex(id);
            if let Some(prev) = seen.insert(s.name.as_str(), id) {
                issues.push(ValidationIssue::DuplicateName { name: s.name.clone(), first: prev, second: id });
            }
            let expected = if id.dim == 0 { 0 } else { id.dim + 1 };
            if s.faces.len() != expected {
                issues.push(ValidationIssue::FaceCount { simplex: id, expected, found: s.faces.len() });
                continue;
            }
            for (i, f) in s.faces.iter().enumerate() {
                if !self.contains(f.base) {
                    issues.push(ValidationIssue::Dangling { simplex: id, face: i, target: f.base });
                } else if f.dim() + 1 != id.dim {
                    issues.push(ValidationIssue::FaceDimension { simplex: id, face: i });
                } else if !word_is_normal(&f.word, f.base.dim) {
                    issues.push(ValidationIssue::NotNormal { simplex: id, face: i });
                }
            }
        }
        if !issues.is_empty() {
            return ValidationReport { issues };
        }
        for id in self.ids().filter(|id| id.dim >= 2) {
            let faces = &self.simplex(id).faces;
            for j in 1..=id.dim {
                for i in 0..j {
                    let lhs = self.face(&faces[j], i);
                    let rhs = self.face(&faces[i], j - 1);
                    if lhs != rhs {
                        issues.push(ValidationIssue::Identity { simplex: id, i, j });
                    }
                }
            }
        }
        ValidationReport { issues }
    }

    /// Smallest face-closed subobject containing `seed`, with its inclusion.
    pub fn minimal_subcomplex(self: &Arc<Self>, seed: &[SimplexId]) -> Result<(Arc<Self>, SimplicialMap)> {
        let mut keep: Vec<Vec<bool>> = self.levels.iter().map(|l| vec![false; l.len()]).collect();
        let mut stack = Vec::new();
        for &id in seed {
            self.get(id)?;
            stack.push(id);
        }
        while let Some(id) = stack.pop() {
            if std::mem::replace(&mut keep[id.dim][id.index], true) {
                continue;
            }
            for f in &self.simplex(id).faces {
                if !keep[f.base.dim][f.base.index] {
                    stack.push(f.base);
                }
            }
        }
        Ok(self.restrict(&keep))
    }

    /// Subobject on the marked simplices (assumed face-closed) and its inclusion.
    pub(crate) fn restrict(self: &Arc<Self>, keep: &[Vec<bool>]) -> (Arc<Self>, SimplicialMap) {
        let mut new_index: Vec<Vec<Option<usize>>> = Vec::new();
        let mut levels = Vec::new();
        let mut images = Vec::new();
        for (d, level) in self.levels.iter().enumerate() {
            let mut map = Vec::with_capacity(level.len());
            let mut out = Vec::new();
            let mut img = Vec::new();
            for (i, s) in level.iter().enumerate() {
                if keep[d][i] {
                    map.push(Some(out.len()));
                    let faces = s
                        .faces
                        .iter()
                        .map(|f| {
                            let idx = new_index[f.base.dim][f.base.index].expect("subobject not face-closed");
                            SimplexRef::new(SimplexId::new(f.base.dim, idx), f.word.clone())
                        })
                        .collect();
                    out.push(Simplex { name: s.name.clone(), faces });
                    img.push(SimplexRef::nondegenerate(SimplexId::new(d, i)));
                } else {
                    map.push(None);
                }
            }
            new_index.push(map);
            levels.push(out);
            images.push(img);
        }
        let sub = Arc::new(Self::from_levels(levels));
        images.truncate(sub.levels.len());
        let inclusion = SimplicialMap::from_parts(sub.clone(), self.clone(), images);
        (sub, inclusion)
    }
}

pub(crate) fn degenerate(r: &SimplexRef, j: usize) -> SimplexRef {
    let mut seq = r.seq();
    assert!(j < seq.len(), "degeneracy index {j} out of range");
    seq.insert(j, seq[j]);
    SimplexRef::new(r.base, seq_to_word(&seq))
}

/// One failure found by [`FiniteSimplicialSet::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationIssue {
    DuplicateName { name: String, first: SimplexId, second: SimplexId },
    FaceCount { simplex: SimplexId, expected: usize, found: usize },
    Dangling { simplex: SimplexId, face: usize, target: SimplexId },
    FaceDimension { simplex: SimplexId, face: usize },
    NotNormal { simplex: SimplexId, face: usize },
    Identity { simplex: SimplexId, i: usize, j: usize },
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::DuplicateName { name, first, second } => {
                write!(f, "duplicate name {name:?} at {first} and {second}")
            }
            Self::FaceCount { simplex, expected, found } => {
                write!(f, "simplex {simplex} has {found} faces, expected {expected}")
            }
            Self::Dangling { simplex, face, target } => {
                write!(f, "face {face} of {simplex} references missing simplex {target}")
            }
            Self::FaceDimension { simplex, face } => write!(f, "face {face} of {simplex} has wrong dimension"),
            Self::NotNormal { simplex, face } => write!(f, "face {face} of {simplex} is not in normal form"),
            Self::Identity { simplex, i, j } => {
                write!(f, "simplicial identity d{i}d{j} = d{}d{i} fails on {simplex}", j - 1)
            }
        }
    }
}

/// Result of validation; empty iff the object is a valid finite simplicial set.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<ValidationIssue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self.issues.iter().map(ToString::to_string).collect();
        write!(f, "{}", lines.join("; "))
    }
}

/// Builder that assigns ids as simplices are added.
#[derive(Debug, Default)]
pub struct SimplicialSetBuilder {
    levels: Vec<Vec<Simplex>>,
}

impl SimplicialSetBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, name: impl Into<String>, dim: usize, faces: Vec<SimplexRef>) -> SimplexId {
        while self.levels.len() <= dim {
            self.levels.push(Vec::new());
        }
        self.levels[dim].push(Simplex { name: name.into(), faces });
        SimplexId::new(dim, self.levels[dim].len() - 1)
    }

    pub fn vertex(&mut self, name: impl Into<String>) -> SimplexId {
        self.add(name, 0, Vec::new())
    }

    pub fn build(self) -> Result<FiniteSimplicialSet> {
        FiniteSimplicialSet::new(self.levels)
    }

    pub fn build_unchecked(self) -> FiniteSimplicialSet {
        FiniteSimplicialSet::from_levels(self.levels)
    }
}
