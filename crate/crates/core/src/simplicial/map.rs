use std::collections::HashSet;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::normal::word_is_normal;
use super::{FiniteSimplicialSet, SimplexId, SimplexRef};
use crate::error::{Error, Result};

/// A simplicial map, stored as the images of the source's nondegenerate simplices.
#[derive(Debug, Clone)]
pub struct SimplicialMap {
    source: Arc<FiniteSimplicialSet>,
    target: Arc<FiniteSimplicialSet>,
    images: Vec<Vec<SimplexRef>>,
}

impl PartialEq for SimplicialMap {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images && same_object(&self.source, &other.source) && same_object(&self.target, &other.target)
    }
}

impl Eq for SimplicialMap {}

impl Hash for SimplicialMap {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.images.hash(state);
    }
}

pub(crate) fn same_object(a: &Arc<FiniteSimplicialSet>, b: &Arc<FiniteSimplicialSet>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl SimplicialMap {
    /// Builds without checking face compatibility.
    pub fn from_parts(
        source: Arc<FiniteSimplicialSet>,
        target: Arc<FiniteSimplicialSet>,
        mut images: Vec<Vec<SimplexRef>>,
    ) -> Self {
        images.resize(source.levels().len(), Vec::new());
        Self { source, target, images }
    }

    /// Builds and checks that the images define a simplicial map.
    pub fn new(source: Arc<FiniteSimplicialSet>, target: Arc<FiniteSimplicialSet>, images: Vec<Vec<SimplexRef>>) -> Result<Self> {
        let m = Self::from_parts(source, target, images);
        m.check()?;
        Ok(m)
    }

    pub fn identity(s: &Arc<FiniteSimplicialSet>) -> Self {
        let images = s.levels().iter().enumerate().map(|(d, l)| (0..l.len()).map(|i| SimplexRef::nondegenerate(SimplexId::new(d, i))).collect()).collect();
        Self { source: s.clone(), target: s.clone(), images }
    }

    /// The unique map out of the empty object.
    pub fn from_empty(target: &Arc<FiniteSimplicialSet>) -> Self {
        Self { source: Arc::new(FiniteSimplicialSet::empty()), target: target.clone(), images: Vec::new() }
    }

    pub fn source(&self) -> &Arc<FiniteSimplicialSet> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteSimplicialSet> {
        &self.target
    }

    pub fn images(&self) -> &[Vec<SimplexRef>] {
        &self.images
    }

    pub fn image(&self, id: SimplexId) -> &SimplexRef {
        &self.images[id.dim][id.index]
    }

    /// Image of an arbitrary simplex of the source.
    pub fn apply(&self, r: &SimplexRef) -> SimplexRef {
        let img = self.image(r.base);
        if r.word.is_empty() {
            img.clone()
        } else {
            FiniteSimplicialSet::apply_word(img, &r.word)
        }
    }

    /// Face compatibility and well-formedness of every image.
    pub fn check(&self) -> Result<()> {
        for (d, level) in self.source.levels().iter().enumerate() {
            let imgs = self.images.get(d).map_or(&[][..], Vec::as_slice);
            if imgs.len() != level.len() {
                return Err(Error::InvalidMap(format!("dimension {d}: {} images for {} simplices", imgs.len(), level.len())));
            }
            for (i, img) in imgs.iter().enumerate() {
                let id = SimplexId::new(d, i);
                if !self.target.contains(img.base) {
                    return Err(Error::InvalidMap(format!("image of {id} references missing simplex {}", img.base)));
                }
                if img.dim() != d || !word_is_normal(&img.word, img.base.dim) {
                    return Err(Error::InvalidMap(format!("image of {id} has wrong dimension or word")));
                }
            }
        }
        for id in self.source.ids().filter(|id| id.dim > 0) {
            let img = self.image(id);
            for (i, f) in self.source.simplex(id).faces.iter().enumerate() {
                if self.target.face(img, i) != self.apply(f) {
                    return Err(Error::InvalidMap(format!(
                        "face {i} of {} does not commute",
                        self.source.name(id)
                    )));
                }
            }
        }
        Ok(())
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &SimplicialMap) -> Result<SimplicialMap> {
        compose(self, first)
    }

    /// Injective on all simplices: images nondegenerate and pairwise distinct.
    pub fn is_injective(&self) -> bool {
        let mut seen = HashSet::new();
        self.images.iter().flatten().all(|r| !r.is_degenerate() && seen.insert(r.base))
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.source.size() == self.target.size()
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> Option<SimplicialMap> {
        if !self.is_isomorphism() {
            return None;
        }
        let mut images: Vec<Vec<SimplexRef>> = self.target.levels().iter().map(|l| vec![SimplexRef::nondegenerate(SimplexId::new(0, 0)); l.len()]).collect();
        for id in self.source.ids() {
            let img = self.image(id).base;
            images[img.dim][img.index] = SimplexRef::nondegenerate(id);
        }
        Some(Self { source: self.target.clone(), target: self.source.clone(), images })
    }

    /// Retargets a map at an equal object (so pointer identity matches downstream).
    pub fn with_target(&self, target: Arc<FiniteSimplicialSet>) -> Result<SimplicialMap> {
        if !same_object(&self.target, &target) {
            return Err(Error::Mismatch("retarget at a different object".into()));
        }
        Ok(Self { source: self.source.clone(), target, images: self.images.clone() })
    }

    pub fn with_source(&self, source: Arc<FiniteSimplicialSet>) -> Result<SimplicialMap> {
        if !same_object(&self.source, &source) {
            return Err(Error::Mismatch("re-source at a different object".into()));
        }
        Ok(Self { source, target: self.target.clone(), images: self.images.clone() })
    }

    /// Human-readable `name -> ref` listing.
    pub fn describe(&self) -> Vec<(String, String)> {
        self.source.ids().map(|id| (self.source.name(id).to_string(), self.target.ref_name(self.image(id)))).collect()
    }
}

/// `g ∘ f`.
pub fn compose(g: &SimplicialMap, f: &SimplicialMap) -> Result<SimplicialMap> {
    if !same_object(&f.target, &g.source) {
        return Err(Error::Mismatch("target of the first map differs from the source of the second".into()));
    }
    let images = f.images.iter().map(|l| l.iter().map(|r| g.apply(r)).collect()).collect();
    Ok(SimplicialMap { source: f.source.clone(), target: g.target.clone(), images })
}
