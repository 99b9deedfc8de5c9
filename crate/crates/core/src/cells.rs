//! Relative cell complexes: staged attachments of generator cells, their
//! realization as a sequence of pushouts of coproducts, factoring maps from
//! finite objects through a finite stage, and rewriting horn attachments as
//! pairs of boundary attachments.

use std::collections::HashMap;
use std::sync::Arc;

use crate::colimits::{copair, coproduct, coproduct_named, coproduct_of_maps, pushout, pushout_induced, PushoutResult, StageRecord};
use crate::error::{Error, Result};
use crate::simplicial::map::same_object;
use crate::simplicial::standard::{vertex_map, vertex_set_name};
use crate::simplicial::{FiniteSimplicialSet, Generator, GeneratorSet, SimplexRef, SimplicialMap};

/// One cell: a generator and where its source is glued.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attachment {
    pub generator: Generator,
    pub attaching_map: SimplicialMap,
}

impl Attachment {
    pub fn new(generator: Generator, attaching_map: SimplicialMap) -> Result<Self> {
        let generator = generator.checked()?;
        if !same_object(attaching_map.source(), &generator.source()) {
            return Err(Error::Mismatch(format!("attaching map for {generator} does not start at the generator's source")));
        }
        Ok(Self { generator, attaching_map })
    }
}

/// A base object and a list of stages, each a set of attachments into the
/// realization of the earlier stages.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellPresentation {
    pub base: Arc<FiniteSimplicialSet>,
    pub stages: Vec<Vec<Attachment>>,
}

impl CellPresentation {
    pub fn new(base: Arc<FiniteSimplicialSet>) -> Self {
        Self { base, stages: Vec::new() }
    }

    pub fn attachment_count(&self) -> usize {
        self.stages.iter().map(Vec::len).sum()
    }

    /// The generator set used, `None` for a presentation without attachments.
    pub fn kind(&self) -> Result<Option<GeneratorSet>> {
        let mut kinds = self.stages.iter().flatten().map(|a| a.generator.set());
        let Some(first) = kinds.next() else { return Ok(None) };
        if kinds.all(|k| k == first) {
            Ok(Some(first))
        } else {
            Err(Error::MixedPresentation)
        }
    }

    pub fn realize(&self) -> Result<Realization> {
        let mut r = Realization::new(self.base.clone());
        for stage in &self.stages {
            r.attach_stage(stage.clone())?;
        }
        Ok(r)
    }
}

/// A presentation together with its staged colimit.
#[derive(Debug, Clone)]
pub struct Realization {
    pub presentation: CellPresentation,
    pub record: StageRecord,
    /// Pushout computed for each stage.
    pub pushouts: Vec<PushoutResult>,
    /// `cells[s][t]`: characteristic map `Δⁿ -> X_{s+1}` of attachment `t` of stage `s`.
    pub cells: Vec<Vec<SimplicialMap>>,
}

impl Realization {
    pub fn new(base: Arc<FiniteSimplicialSet>) -> Self {
        Self { record: StageRecord::trivial(&base), presentation: CellPresentation::new(base), pushouts: Vec::new(), cells: Vec::new() }
    }

    pub fn current(&self) -> &Arc<FiniteSimplicialSet> {
        self.record.last()
    }

    pub fn stages(&self) -> usize {
        self.record.stages()
    }

    /// `X_0 -> X_m`.
    pub fn composite(&self) -> &SimplicialMap {
        self.record.composite()
    }

    /// Attaches one stage of cells to the current object. Cells are named
    /// `c<stage>.<index>.<vertex set>`.
    pub fn attach_stage(&mut self, attachments: Vec<Attachment>) -> Result<()> {
        let stage = self.stages() + 1;
        let x = self.current().clone();
        let mut attaching = Vec::with_capacity(attachments.len());
        let mut generators = Vec::with_capacity(attachments.len());
        for (index, a) in attachments.iter().enumerate() {
            let bad = |reason: String| Error::BadAttachment { stage, index, reason };
            if !same_object(a.attaching_map.source(), &a.generator.source()) {
                return Err(bad(format!("source is not the source of {}", a.generator)));
            }
            if !same_object(a.attaching_map.target(), &x) {
                return Err(bad("does not land in the previous stage".into()));
            }
            a.attaching_map.check().map_err(|e| bad(e.to_string()))?;
            attaching.push(a.attaching_map.with_target(x.clone())?);
            generators.push(a.generator.inclusion());
        }
        let sources = coproduct(&generators.iter().map(|g| g.source().clone()).collect::<Vec<_>>());
        let cell_objects: Vec<_> = generators.iter().map(|g| g.target().clone()).collect();
        let names: Vec<Vec<Vec<String>>> = cell_objects
            .iter()
            .enumerate()
            .map(|(t, c)| c.levels().iter().map(|l| l.iter().map(|s| format!("c{stage}.{t}.{}", s.name)).collect()).collect())
            .collect();
        let targets = coproduct_named(&cell_objects, &names);
        let attach = copair(&sources, &attaching, &x)?;
        let cells = coproduct_of_maps(&generators, &sources, &targets)?;
        let p = pushout(&attach, &cells)?;
        let chars = targets.injections.iter().map(|inj| p.leg_from_c.after(inj)).collect::<Result<Vec<_>>>()?;

        let mut inclusions = self.record.inclusions.clone();
        inclusions.push(p.leg_from_b.clone());
        self.record = crate::colimits::sequential_colimit(&self.presentation.base, &inclusions)?;
        self.presentation.stages.push(attachments.into_iter().zip(attaching).map(|(a, m)| Attachment { generator: a.generator, attaching_map: m }).collect());
        self.pushouts.push(p);
        self.cells.push(chars);
        Ok(())
    }
}

/// Factors `m: K -> X_m` through the earliest stage containing its image.
pub fn factor_through_stage(record: &StageRecord, m: &SimplicialMap) -> Result<(usize, SimplicialMap)> {
    if !same_object(m.target(), record.last()) {
        return Err(Error::Mismatch("map does not land in the last stage".into()));
    }
    let k = m.images().iter().flatten().map(|r| record.birth_of(r.base)).max().unwrap_or(0);
    Ok((k, factor_through(record, k, m)))
}

/// Factors `m` through stage `k`. Panics unless `factors_through(record, k, m)`.
pub fn factor_through(record: &StageRecord, k: usize, m: &SimplicialMap) -> SimplicialMap {
    let inc = &record.to_final[k];
    let preimage: HashMap<_, _> = inc.source().ids().map(|id| (inc.image(id).base, id)).collect();
    let images = m.images().iter().map(|l| l.iter().map(|r| SimplexRef::new(preimage[&r.base], r.word.clone())).collect()).collect();
    SimplicialMap::from_parts(m.source().clone(), record.objects[k].clone(), images)
}

/// Whether `m` factors through stage `k` at all.
pub fn factors_through(record: &StageRecord, k: usize, m: &SimplicialMap) -> bool {
    m.images().iter().flatten().all(|r| record.birth_of(r.base) <= k)
}

/// `∂Δ^{n-1} -> Λⁿ_k` as the boundary of the face opposite vertex `k`.
fn missing_face_boundary(n: usize, k: usize) -> SimplicialMap {
    let skip = move |v: usize| if v < k { v } else { v + 1 };
    let horn = Generator::J { n, k }.source();
    vertex_map(&Generator::I { n: n - 1 }.source(), &horn, skip).expect("the missing face's boundary lies in the horn")
}

/// Rewrites a horn presentation as a boundary presentation: each stage of
/// horn cells becomes a stage attaching every missing face, then a stage
/// attaching every top cell. Returns the new presentation and an isomorphism
/// from the old realization to the new one under the base.
pub fn j_to_i_presentation(p: &CellPresentation) -> Result<(CellPresentation, SimplicialMap)> {
    if p.kind()? == Some(GeneratorSet::I) {
        return Err(Error::MixedPresentation);
    }
    let mut old = Realization::new(p.base.clone());
    let mut new = Realization::new(p.base.clone());
    // Isomorphism from the current old stage to the current new stage.
    let mut phi = SimplicialMap::identity(&p.base);
    for stage in &p.stages {
        old.attach_stage(stage.clone())?;
        let horns: Vec<(usize, usize, SimplicialMap)> = old.presentation.stages.last().unwrap().iter().map(|a| {
            let Generator::J { n, k } = a.generator else { unreachable!("checked above") };
            (n, k, phi.after(&a.attaching_map).expect("attaching maps land in the old stage"))
        }).collect();

        let faces = horns
            .iter()
            .map(|(n, k, a)| Attachment::new(Generator::I { n: n - 1 }, a.after(&missing_face_boundary(*n, *k))?))
            .collect::<Result<Vec<_>>>()?;
        new.attach_stage(faces)?;
        let step = new.record.inclusions.last().unwrap().clone();
        let face_cells = new.cells.last().unwrap().clone();

        let mut tops = Vec::with_capacity(horns.len());
        for ((n, k, a), face_cell) in horns.iter().zip(&face_cells) {
            let boundary = Generator::I { n: *n }.source();
            let horn_in_boundary = vertex_map(&Generator::J { n: *n, k: *k }.source(), &boundary, |v| v).expect("horn lies in the boundary");
            let horn_part = step.after(a)?;
            let skip = |v: usize| if v < *k { v } else { v + 1 };
            let face_name = vertex_set_name(&(0..*n).map(skip).collect::<Vec<_>>());
            let missing = boundary.find(&face_name).expect("boundary has every proper face");
            let mut images: Vec<Vec<SimplexRef>> = boundary.levels().iter().map(|l| Vec::with_capacity(l.len())).collect();
            let top_face = face_cell.image(crate::simplicial::SimplexId::new(n - 1, 0)).clone();
            let horn_index: HashMap<_, _> = horn_in_boundary.source().ids().map(|id| (horn_in_boundary.image(id).base, id)).collect();
            for id in boundary.ids() {
                let img = if id == missing { top_face.clone() } else { horn_part.image(horn_index[&id]).clone() };
                images[id.dim].push(img);
            }
            let attaching = SimplicialMap::new(boundary, step.target().clone(), images)?;
            tops.push(Attachment::new(Generator::I { n: *n }, attaching)?);
        }
        new.attach_stage(tops)?;
        let last_step = new.record.inclusions.last().unwrap().clone();

        let po = old.pushouts.last().unwrap();
        let u = last_step.after(&step)?.after(&phi)?;
        let top_cells = new.cells.last().unwrap();
        let v = copair_cells(po, top_cells, new.current())?;
        phi = pushout_induced(po, &u, &v)?;
    }
    if !phi.is_isomorphism() {
        return Err(Error::Mismatch("converted realization is not isomorphic".into()));
    }
    Ok((new.presentation, phi))
}

/// The map out of a stage's coproduct of cells given each cell's image.
pub(crate) fn copair_cells(po: &PushoutResult, cells: &[SimplicialMap], target: &Arc<FiniteSimplicialSet>) -> Result<SimplicialMap> {
    // The coproduct of cell simplices is laid out summand by summand per dimension.
    let c = po.g.target();
    let mut images: Vec<Vec<SimplexRef>> = c.levels().iter().map(|l| Vec::with_capacity(l.len())).collect();
    for cell in cells {
        for (d, l) in cell.images().iter().enumerate() {
            images[d].extend(l.iter().cloned());
        }
    }
    SimplicialMap::new(c.clone(), target.clone(), images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{enumerate_maps, simplex, SimplexId};

    fn point() -> Arc<FiniteSimplicialSet> {
        Arc::new(simplex(0))
    }

    /// ∅ + one vertex, then one edge with both ends on it.
    fn circle() -> Realization {
        let mut r = Realization::new(Arc::new(FiniteSimplicialSet::empty()));
        let v = Generator::I { n: 0 };
        r.attach_stage(vec![Attachment::new(v, SimplicialMap::from_empty(r.current()).with_source(v.source()).unwrap()).unwrap()]).unwrap();
        let e = Generator::I { n: 1 };
        let to_vertex = enumerate_maps(&e.source(), r.current()).pop().unwrap();
        r.attach_stage(vec![Attachment::new(e, to_vertex).unwrap()]).unwrap();
        r
    }

    #[test]
    fn empty_presentation_is_identity() {
        let base = Arc::new(simplex(2));
        let r = CellPresentation::new(base.clone()).realize().unwrap();
        assert_eq!(*r.composite(), SimplicialMap::identity(&base));
    }

    #[test]
    fn circle_ordinals() {
        let r = circle();
        let x = r.current();
        assert_eq!((x.count(0), x.count(1)), (1, 1));
        assert_eq!(r.record.birth, vec![vec![1], vec![2]]);
        assert_eq!(x.name(SimplexId::new(1, 0)), "c2.0.v01");
        // The presentation re-realizes to the same object.
        assert_eq!(**r.presentation.realize().unwrap().current(), **x);
    }

    #[test]
    fn horn_filling_gives_simplex() {
        let g = Generator::J { n: 2, k: 1 };
        let base = g.source();
        let p = CellPresentation { base: base.clone(), stages: vec![vec![Attachment::new(g, SimplicialMap::identity(&base)).unwrap()]] };
        let r = p.realize().unwrap();
        let x = r.current();
        assert_eq!((x.count(0), x.count(1), x.count(2)), (3, 3, 1));
        assert!(x.validate().is_valid());
    }

    #[test]
    fn factoring_examples() {
        let r = circle();
        let x = r.current().clone();
        let v = SimplicialMap::new(point(), x.clone(), vec![vec![SimplexRef::nondegenerate(SimplexId::new(0, 0))]]).unwrap();
        let (k, f) = factor_through_stage(&r.record, &v).unwrap();
        assert_eq!(k, 1);
        assert_eq!(r.record.to_final[1].after(&f).unwrap(), v);
        let loop_ = enumerate_maps(&Arc::new(simplex(1)), &x).into_iter().find(|m| !m.image(SimplexId::new(1, 0)).is_degenerate()).unwrap();
        assert_eq!(factor_through_stage(&r.record, &loop_).unwrap().0, 2);
        let rec = StageRecord::trivial(&x);
        assert_eq!(factor_through_stage(&rec, &v).unwrap().0, 0);
    }

    #[test]
    fn bad_attachment_target() {
        let mut r = Realization::new(point());
        let e = Generator::I { n: 1 };
        let wrong = enumerate_maps(&e.source(), &Arc::new(simplex(1))).remove(0);
        assert!(matches!(r.attach_stage(vec![Attachment::new(e, wrong).unwrap()]), Err(Error::BadAttachment { stage: 1, index: 0, .. })));
    }

    #[test]
    fn single_horn_to_two_cells() {
        let g = Generator::J { n: 2, k: 1 };
        let base = g.source();
        let p = CellPresentation { base: base.clone(), stages: vec![vec![Attachment::new(g, SimplicialMap::identity(&base)).unwrap()]] };
        let (q, iso) = j_to_i_presentation(&p).unwrap();
        assert_eq!(q.stages.len(), 2);
        assert_eq!(q.stages[0][0].generator, Generator::I { n: 1 });
        assert_eq!(q.stages[1][0].generator, Generator::I { n: 2 });
        let rq = q.realize().unwrap();
        assert!(iso.is_isomorphism());
        assert_eq!(iso.after(p.realize().unwrap().composite()).unwrap(), *rq.composite());
    }

    #[test]
    fn empty_and_mixed_conversion() {
        let p = CellPresentation::new(point());
        let (q, iso) = j_to_i_presentation(&p).unwrap();
        assert!(q.stages.is_empty());
        assert_eq!(iso, SimplicialMap::identity(&point()));
        let r = circle();
        assert!(matches!(j_to_i_presentation(&r.presentation), Err(Error::MixedPresentation)));
    }

    #[test]
    fn parallel_horns() {
        // Two edges glued at a vertex, each filled as a 1-horn.
        let base = point();
        let h0 = Generator::J { n: 1, k: 0 };
        let h1 = Generator::J { n: 1, k: 1 };
        let a0 = enumerate_maps(&h0.source(), &base).remove(0);
        let a1 = enumerate_maps(&h1.source(), &base).remove(0);
        let p = CellPresentation { base, stages: vec![vec![Attachment::new(h0, a0).unwrap(), Attachment::new(h1, a1).unwrap()]] };
        let (q, iso) = j_to_i_presentation(&p).unwrap();
        assert_eq!(q.attachment_count(), 4);
        assert_eq!(q.stages.len(), 2);
        assert!(iso.is_isomorphism());
        assert_eq!(q.realize().unwrap().current().size(), 5);
    }
}
