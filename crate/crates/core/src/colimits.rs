//! Exact finite colimits: coproducts, pushouts and sequential colimits of inclusions.
//!
//! Pushouts are computed levelwise: in each dimension the quotient of all
//! simplices of `B ⊔ C` by the relation generated by `i(a) ~ g(a)` is formed with
//! union-find, classes containing a degenerate simplex are degenerate, and the
//! remaining classes become the nondegenerate simplices of the corner, listed in
//! order of their least member (B before C, then index).

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::simplicial::normal::{compose_seq, seq_to_word};
use crate::simplicial::table::SimplexTable;
use crate::simplicial::{FiniteSimplicialSet, Simplex, SimplexId, SimplexRef, SimplicialMap};

/// A coproduct with its summand injections.
#[derive(Debug, Clone)]
pub struct Coproduct {
    pub object: Arc<FiniteSimplicialSet>,
    pub injections: Vec<SimplicialMap>,
}

/// Disjoint union. Names that collide across summands get a `@k` suffix.
pub fn coproduct(family: &[Arc<FiniteSimplicialSet>]) -> Coproduct {
    let mut counts: HashMap<&str, usize> = HashMap::new();
    for s in family {
        for id in s.ids() {
            *counts.entry(s.name(id)).or_default() += 1;
        }
    }
    let names: Vec<Vec<Vec<String>>> = family
        .iter()
        .enumerate()
        .map(|(k, s)| {
            s.levels()
                .iter()
                .map(|l| l.iter().map(|x| if counts[x.name.as_str()] > 1 { format!("{}@{k}", x.name) } else { x.name.clone() }).collect())
                .collect()
        })
        .collect();
    coproduct_named(family, &names)
}

/// Disjoint union with caller-chosen names (`names[k][d][i]` for summand `k`).
pub(crate) fn coproduct_named(family: &[Arc<FiniteSimplicialSet>], names: &[Vec<Vec<String>>]) -> Coproduct {
    let top = family.iter().filter_map(|s| s.dim()).max();
    let mut levels: Vec<Vec<Simplex>> = vec![Vec::new(); top.map_or(0, |d| d + 1)];
    let mut offsets: Vec<Vec<usize>> = Vec::new();
    for (k, s) in family.iter().enumerate() {
        let off: Vec<usize> = levels.iter().map(Vec::len).collect();
        for (d, level) in s.levels().iter().enumerate() {
            for (i, x) in level.iter().enumerate() {
                let faces = x.faces.iter().map(|f| SimplexRef::new(SimplexId::new(f.base.dim, f.base.index + off[f.base.dim]), f.word.clone())).collect();
                levels[d].push(Simplex { name: names[k][d][i].clone(), faces });
            }
        }
        offsets.push(off);
    }
    let object = Arc::new(FiniteSimplicialSet::from_levels(levels));
    let injections = family
        .iter()
        .zip(&offsets)
        .map(|(s, off)| {
            let images = s.levels().iter().enumerate().map(|(d, l)| (0..l.len()).map(|i| SimplexRef::nondegenerate(SimplexId::new(d, i + off[d]))).collect()).collect();
            SimplicialMap::from_parts(s.clone(), object.clone(), images)
        })
        .collect();
    Coproduct { object, injections }
}

/// The map out of a coproduct determined by one map per summand.
pub fn copair(cop: &Coproduct, maps: &[SimplicialMap], target: &Arc<FiniteSimplicialSet>) -> Result<SimplicialMap> {
    if maps.len() != cop.injections.len() {
        return Err(Error::Mismatch(format!("{} maps for {} summands", maps.len(), cop.injections.len())));
    }
    let mut images: Vec<Vec<SimplexRef>> = cop.object.levels().iter().map(|l| Vec::with_capacity(l.len())).collect();
    // Summands are laid out contiguously per dimension, in family order.
    for (inj, m) in cop.injections.iter().zip(maps) {
        if !crate::simplicial::map::same_object(inj.source(), m.source()) {
            return Err(Error::Mismatch("copairing map has the wrong source".into()));
        }
        if !crate::simplicial::map::same_object(m.target(), target) {
            return Err(Error::Mismatch("copairing map has the wrong target".into()));
        }
        for (d, l) in m.images().iter().enumerate() {
            images[d].extend(l.iter().cloned());
        }
    }
    Ok(SimplicialMap::from_parts(cop.object.clone(), target.clone(), images))
}

/// `⊔ f_s : ⊔ A_s -> ⊔ B_s`.
pub fn coproduct_of_maps(maps: &[SimplicialMap], source: &Coproduct, target: &Coproduct) -> Result<SimplicialMap> {
    let legs: Vec<SimplicialMap> = maps.iter().zip(&target.injections).map(|(m, inj)| inj.after(m)).collect::<Result<_>>()?;
    copair(source, &legs, &target.object)
}

/// Where a nondegenerate simplex of a pushout corner came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    FromB(SimplexId),
    FromC(SimplexId),
    /// Several nondegenerate simplices identified; representative first.
    Glued(Vec<Side>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    B(SimplexId),
    C(SimplexId),
}

/// Pushout of `i: A -> B` and `g: A -> C`.
#[derive(Debug, Clone)]
pub struct PushoutResult {
    pub i: SimplicialMap,
    pub g: SimplicialMap,
    pub corner: Arc<FiniteSimplicialSet>,
    pub leg_from_b: SimplicialMap,
    pub leg_from_c: SimplicialMap,
    pub provenance: Vec<Vec<Provenance>>,
}

impl PushoutResult {
    pub fn provenance_of(&self, id: SimplexId) -> &Provenance {
        &self.provenance[id.dim][id.index]
    }

    fn representative(&self, id: SimplexId) -> Side {
        match self.provenance_of(id) {
            Provenance::FromB(b) => Side::B(*b),
            Provenance::FromC(c) => Side::C(*c),
            Provenance::Glued(members) => members[0],
        }
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    /// Keeps the smaller index as root, so roots are least members.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

/// Computes the pushout of `i: A -> B` along `g: A -> C`.
pub fn pushout(i: &SimplicialMap, g: &SimplicialMap) -> Result<PushoutResult> {
    if !crate::simplicial::map::same_object(i.source(), g.source()) {
        return Err(Error::Mismatch("pushout legs have different sources".into()));
    }
    let a = i.source();
    let b = i.target();
    let c = g.target();
    let top = b.dim().into_iter().chain(c.dim()).max();
    let Some(top) = top else {
        // B and C empty, hence A empty.
        let corner = Arc::new(FiniteSimplicialSet::empty());
        return Ok(PushoutResult {
            i: i.clone(),
            g: g.clone(),
            corner: corner.clone(),
            leg_from_b: SimplicialMap::from_parts(b.clone(), corner.clone(), Vec::new()),
            leg_from_c: SimplicialMap::from_parts(c.clone(), corner, Vec::new()),
            provenance: Vec::new(),
        });
    };
    let tb = SimplexTable::new(b, top);
    let tc = SimplexTable::new(c, top);
    let ta = SimplexTable::new(a, top);

    // Per dimension: element order is the nondegenerate simplices of B, then of C,
    // then all remaining (degenerate) simplices of B and C.
    struct Level {
        elems: Vec<Side2>,
        pos_b: Vec<usize>,
        pos_c: Vec<usize>,
        root_class: HashMap<usize, usize>,
        classes: Vec<Class>,
    }
    #[derive(Clone, Copy)]
    enum Side2 {
        B(u32),
        C(u32),
    }
    struct Class {
        nondegenerate: bool,
        members: Vec<usize>,
        /// Normal form in the corner (filled in once the corner ids are known).
        normal: Option<SimplexRef>,
    }

    let mut levels_data: Vec<Level> = Vec::new();
    for d in 0..=top {
        let nb = tb.levels[d].len();
        let nc = tc.levels[d].len();
        let mut elems = Vec::with_capacity(nb + nc);
        let mut pos_b = vec![0; nb];
        let mut pos_c = vec![0; nc];
        let nondeg_b: Vec<usize> = (0..nb).filter(|&t| !tb.levels[d][t].is_degenerate()).collect();
        let nondeg_c: Vec<usize> = (0..nc).filter(|&t| !tc.levels[d][t].is_degenerate()).collect();
        // Nondegenerate simplices appear in index order within the table's last block.
        for &t in &nondeg_b {
            pos_b[t] = elems.len();
            elems.push(Side2::B(t as u32));
        }
        for &t in &nondeg_c {
            pos_c[t] = elems.len();
            elems.push(Side2::C(t as u32));
        }
        for t in (0..nb).filter(|&t| tb.levels[d][t].is_degenerate()) {
            pos_b[t] = elems.len();
            elems.push(Side2::B(t as u32));
        }
        for t in (0..nc).filter(|&t| tc.levels[d][t].is_degenerate()) {
            pos_c[t] = elems.len();
            elems.push(Side2::C(t as u32));
        }
        let mut uf = UnionFind::new(elems.len());
        for ar in &ta.levels[d] {
            let x = pos_b[tb.lookup(&i.apply(ar)) as usize];
            let y = pos_c[tc.lookup(&g.apply(ar)) as usize];
            uf.union(x, y);
        }
        let mut root_class = HashMap::new();
        let mut classes: Vec<Class> = Vec::new();
        for e in 0..elems.len() {
            let r = uf.find(e);
            let cls = *root_class.entry(r).or_insert_with(|| {
                classes.push(Class { nondegenerate: true, members: Vec::new(), normal: None });
                classes.len() - 1
            });
            let degenerate = match elems[e] {
                Side2::B(t) => tb.levels[d][t as usize].is_degenerate(),
                Side2::C(t) => tc.levels[d][t as usize].is_degenerate(),
            };
            if degenerate {
                classes[cls].nondegenerate = false;
            }
            classes[cls].members.push(e);
        }
        // Map roots to class ids via the element itself for later lookup.
        let mut elem_class = HashMap::new();
        for e in 0..elems.len() {
            elem_class.insert(e, root_class[&uf.find(e)]);
        }
        levels_data.push(Level { elems, pos_b, pos_c, root_class: elem_class, classes });
    }

    // Assign corner ids to nondegenerate classes, ordered by least member.
    let mut corner_ids: Vec<HashMap<usize, usize>> = Vec::new();
    for lvl in &levels_data {
        let mut nd: Vec<(usize, usize)> = lvl.classes.iter().enumerate().filter(|(_, c)| c.nondegenerate).map(|(k, c)| (c.members[0], k)).collect();
        nd.sort();
        corner_ids.push(nd.iter().enumerate().map(|(idx, &(_, k))| (k, idx)).collect());
    }

    let side_ref = |side: Side2, d: usize| -> SimplexRef {
        match side {
            Side2::B(t) => tb.levels[d][t as usize].clone(),
            Side2::C(t) => tc.levels[d][t as usize].clone(),
        }
    };

    // Normal forms of every class, dimension by dimension.
    for d in 0..=top {
        for k in 0..levels_data[d].classes.len() {
            let normal = if levels_data[d].classes[k].nondegenerate {
                SimplexRef::nondegenerate(SimplexId::new(d, corner_ids[d][&k]))
            } else {
                let lvl = &levels_data[d];
                let e = *lvl.classes[k]
                    .members
                    .iter()
                    .find(|&&e| side_ref(lvl.elems[e], d).is_degenerate())
                    .expect("degenerate class has a degenerate member");
                let r = side_ref(lvl.elems[e], d);
                let bd = r.base.dim;
                let base_elem = match lvl.elems[e] {
                    Side2::B(_) => levels_data[bd].pos_b[tb.lookup(&SimplexRef::nondegenerate(r.base)) as usize],
                    Side2::C(_) => levels_data[bd].pos_c[tc.lookup(&SimplexRef::nondegenerate(r.base)) as usize],
                };
                let base_class = levels_data[bd].root_class[&base_elem];
                let inner = levels_data[bd].classes[base_class].normal.clone().expect("lower dimensions done first");
                let seq = compose_seq(&inner.seq(), &r.seq());
                SimplexRef::new(inner.base, seq_to_word(&seq))
            };
            levels_data[d].classes[k].normal = Some(normal);
        }
    }

    let class_normal = |d: usize, e: usize| -> SimplexRef {
        let lvl = &levels_data[d];
        lvl.classes[lvl.root_class[&e]].normal.clone().unwrap()
    };

    // Build the corner.
    let mut used: HashSet<String> = HashSet::new();
    let mut levels: Vec<Vec<Simplex>> = Vec::new();
    let mut provenance: Vec<Vec<Provenance>> = Vec::new();
    for d in 0..=top {
        let lvl = &levels_data[d];
        let mut order: Vec<(usize, usize)> = corner_ids[d].iter().map(|(&k, &idx)| (idx, k)).collect();
        order.sort();
        let mut level = Vec::new();
        let mut prov = Vec::new();
        for (_, k) in order {
            let class = &lvl.classes[k];
            let rep = class.members[0];
            let (name, faces) = match lvl.elems[rep] {
                Side2::B(t) => {
                    let r = &tb.levels[d][t as usize];
                    let faces = if d == 0 { Vec::new() } else { tb.faces[d][t as usize].iter().map(|&f| class_normal(d - 1, levels_data[d - 1].pos_b[f as usize])).collect() };
                    (b.name(r.base).to_string(), faces)
                }
                Side2::C(t) => {
                    let r = &tc.levels[d][t as usize];
                    let faces = if d == 0 { Vec::new() } else { tc.faces[d][t as usize].iter().map(|&f| class_normal(d - 1, levels_data[d - 1].pos_c[f as usize])).collect() };
                    (c.name(r.base).to_string(), faces)
                }
            };
            let name = fresh_name(&name, &mut used);
            level.push(Simplex { name, faces });
            let sides: Vec<Side> = class
                .members
                .iter()
                .map(|&e| match lvl.elems[e] {
                    Side2::B(t) => Side::B(tb.levels[d][t as usize].base),
                    Side2::C(t) => Side::C(tc.levels[d][t as usize].base),
                })
                .collect();
            prov.push(match sides.as_slice() {
                [Side::B(x)] => Provenance::FromB(*x),
                [Side::C(x)] => Provenance::FromC(*x),
                _ => Provenance::Glued(sides),
            });
        }
        levels.push(level);
        provenance.push(prov);
    }
    let corner = Arc::new(FiniteSimplicialSet::from_levels(levels));
    provenance.truncate(corner.levels().len());

    let leg = |src: &Arc<FiniteSimplicialSet>, table: &SimplexTable, is_b: bool| -> SimplicialMap {
        let images = src
            .levels()
            .iter()
            .enumerate()
            .map(|(d, l)| {
                (0..l.len())
                    .map(|idx| {
                        let t = table.lookup(&SimplexRef::nondegenerate(SimplexId::new(d, idx))) as usize;
                        let e = if is_b { levels_data[d].pos_b[t] } else { levels_data[d].pos_c[t] };
                        class_normal(d, e)
                    })
                    .collect()
            })
            .collect();
        SimplicialMap::from_parts(src.clone(), corner.clone(), images)
    };
    let leg_from_b = leg(b, &tb, true);
    let leg_from_c = leg(c, &tc, false);
    Ok(PushoutResult { i: i.clone(), g: g.clone(), corner, leg_from_b, leg_from_c, provenance })
}

pub(crate) fn fresh_name(name: &str, used: &mut HashSet<String>) -> String {
    let mut candidate = name.to_string();
    while used.contains(&candidate) {
        candidate.push('\'');
    }
    used.insert(candidate.clone());
    candidate
}

/// The unique `h: D -> T` with `h ∘ leg_from_b = u` and `h ∘ leg_from_c = v`.
pub fn pushout_induced(p: &PushoutResult, u: &SimplicialMap, v: &SimplicialMap) -> Result<SimplicialMap> {
    if !crate::simplicial::map::same_object(u.source(), p.i.target()) || !crate::simplicial::map::same_object(v.source(), p.g.target()) {
        return Err(Error::Mismatch("cocone legs have the wrong sources".into()));
    }
    if !crate::simplicial::map::same_object(u.target(), v.target()) {
        return Err(Error::Mismatch("cocone legs have different targets".into()));
    }
    if u.after(&p.i)? != v.after(&p.g)? {
        return Err(Error::CoconeMismatch("u ∘ i differs from v ∘ g".into()));
    }
    let images = p
        .corner
        .ids()
        .fold(vec![Vec::new(); p.corner.levels().len()], |mut acc: Vec<Vec<SimplexRef>>, id| {
            let img = match p.representative(id) {
                Side::B(x) => u.image(x).clone(),
                Side::C(x) => v.image(x).clone(),
            };
            acc[id.dim].push(img);
            acc
        });
    let h = SimplicialMap::from_parts(p.corner.clone(), u.target().clone(), images);
    debug_assert!(h.check().is_ok());
    if h.after(&p.leg_from_b)? != *u || h.after(&p.leg_from_c)? != *v {
        return Err(Error::CoconeMismatch("induced map does not restrict to the cocone".into()));
    }
    Ok(h)
}

/// Staged colimit of a finite sequence of inclusions.
#[derive(Debug, Clone)]
pub struct StageRecord {
    pub objects: Vec<Arc<FiniteSimplicialSet>>,
    pub inclusions: Vec<SimplicialMap>,
    /// `birth[d][i]`: first stage containing nondegenerate simplex `(d, i)` of the last object.
    pub birth: Vec<Vec<usize>>,
    /// Composites `X_k -> X_m`.
    pub to_final: Vec<SimplicialMap>,
}

impl StageRecord {
    /// The single-stage record of an object.
    pub fn trivial(x: &Arc<FiniteSimplicialSet>) -> Self {
        Self {
            objects: vec![x.clone()],
            inclusions: Vec::new(),
            birth: x.levels().iter().map(|l| vec![0; l.len()]).collect(),
            to_final: vec![SimplicialMap::identity(x)],
        }
    }

    pub fn last(&self) -> &Arc<FiniteSimplicialSet> {
        self.objects.last().expect("a stage record has at least one object")
    }

    pub fn stages(&self) -> usize {
        self.objects.len() - 1
    }

    pub fn birth_of(&self, id: SimplexId) -> usize {
        self.birth[id.dim][id.index]
    }

    /// The composite `X_0 -> X_m`.
    pub fn composite(&self) -> &SimplicialMap {
        &self.to_final[0]
    }

    /// `X_j -> X_k` for `j <= k`.
    pub fn inclusion_between(&self, j: usize, k: usize) -> SimplicialMap {
        let mut m = SimplicialMap::identity(&self.objects[j]);
        for s in j..k {
            m = self.inclusions[s].after(&m).expect("stage maps compose");
        }
        m
    }
}

/// Colimit of `X_0 -> X_1 -> ... -> X_m`, each map injective.
pub fn sequential_colimit(first: &Arc<FiniteSimplicialSet>, inclusions: &[SimplicialMap]) -> Result<StageRecord> {
    let mut objects = vec![first.clone()];
    for (k, m) in inclusions.iter().enumerate() {
        if !crate::simplicial::map::same_object(m.source(), objects.last().unwrap()) {
            return Err(Error::Mismatch(format!("stage map {k} does not start at stage {k}")));
        }
        if !m.is_injective() {
            return Err(Error::NonInjectiveStage { stage: k });
        }
        objects.push(m.target().clone());
    }
    let last = objects.last().unwrap().clone();
    let mut to_final = vec![SimplicialMap::identity(&last)];
    for m in inclusions.iter().rev() {
        let next = to_final.last().unwrap().after(m)?;
        to_final.push(next);
    }
    to_final.reverse();
    let mut birth: Vec<Vec<usize>> = last.levels().iter().map(|l| vec![usize::MAX; l.len()]).collect();
    for (k, m) in to_final.iter().enumerate() {
        for img in m.images().iter().flatten() {
            let slot = &mut birth[img.base.dim][img.base.index];
            *slot = (*slot).min(k);
        }
    }
    Ok(StageRecord { objects, inclusions: inclusions.to_vec(), birth, to_final })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{boundary, boundary_inclusion, enumerate_maps, simplex};

    fn point() -> Arc<FiniteSimplicialSet> {
        Arc::new(simplex(0))
    }

    fn circle() -> PushoutResult {
        let inc = boundary_inclusion(1);
        let collapse = enumerate_maps(inc.source(), &point()).pop().unwrap();
        pushout(&inc, &collapse).unwrap()
    }

    #[test]
    fn coproduct_examples() {
        assert_eq!(coproduct(&[point(), point()]).object.size(), 2);
        assert!(coproduct(&[]).object.is_empty());
        let c = coproduct(&[Arc::new(simplex(1)), Arc::new(boundary(1))]);
        assert_eq!(c.object.size(), 5);
        assert!(c.object.validate().is_valid());
        for inj in &c.injections {
            inj.check().unwrap();
            assert!(inj.is_injective());
        }
    }

    #[test]
    fn circle_has_one_vertex_one_edge() {
        let p = circle();
        assert_eq!(p.corner.count(0), 1);
        assert_eq!(p.corner.count(1), 1);
        assert!(p.corner.validate().is_valid());
        p.leg_from_b.check().unwrap();
        p.leg_from_c.check().unwrap();
        assert_eq!(p.leg_from_b.after(&p.i).unwrap(), p.leg_from_c.after(&p.g).unwrap());
    }

    #[test]
    fn pushout_along_identity() {
        let inc = boundary_inclusion(2);
        let id = SimplicialMap::identity(inc.source());
        let p = pushout(&inc, &id).unwrap();
        assert!(p.leg_from_b.is_isomorphism());
        assert_eq!(*p.corner, **inc.target());
    }

    #[test]
    fn pushout_of_empty_is_coproduct() {
        let e = SimplicialMap::from_empty(&point());
        let p = pushout(&e, &e).unwrap();
        assert_eq!(p.corner.count(0), 2);
        assert_eq!(p.provenance[0], vec![Provenance::FromB(SimplexId::new(0, 0)), Provenance::FromC(SimplexId::new(0, 0))]);
    }

    #[test]
    fn pushout_collapsing_edge_makes_it_degenerate() {
        // Gluing Δ¹ to Δ⁰ along the whole edge: the edge dies.
        let d1 = Arc::new(simplex(1));
        let id = SimplicialMap::identity(&d1);
        let collapse = enumerate_maps(&d1, &point()).pop().unwrap();
        let p = pushout(&id, &collapse).unwrap();
        assert_eq!(p.corner.size(), 1);
        assert!(p.leg_from_b.image(SimplexId::new(1, 0)).is_degenerate());
    }

    #[test]
    fn induced_from_legs_is_identity() {
        let p = circle();
        let h = pushout_induced(&p, &p.leg_from_b, &p.leg_from_c).unwrap();
        assert_eq!(h, SimplicialMap::identity(&p.corner));
    }

    #[test]
    fn induced_into_point() {
        let p = circle();
        let u = enumerate_maps(p.i.target(), &point()).pop().unwrap();
        let v = SimplicialMap::identity(p.g.target());
        let h = pushout_induced(&p, &u, &v).unwrap();
        assert_eq!(h.target().size(), 1);
    }

    #[test]
    fn induced_rejects_noncommuting_cocone() {
        // Two distinct vertices glued to a point; cocone sending them apart fails.
        let e = SimplicialMap::from_empty(&point());
        let p = pushout(&e, &e).unwrap();
        let d1 = Arc::new(simplex(1));
        let u = enumerate_maps(&point(), &d1).remove(0);
        let v = enumerate_maps(&point(), &d1).remove(1);
        let h = pushout_induced(&p, &u, &v).unwrap();
        assert_eq!(h.image(SimplexId::new(0, 1)), v.image(SimplexId::new(0, 0)));

        let c = circle();
        let u = enumerate_maps(c.i.target(), &d1).into_iter().find(|m| !m.image(SimplexId::new(1, 0)).is_degenerate()).unwrap();
        let v = enumerate_maps(c.g.target(), &d1).remove(0);
        assert!(matches!(pushout_induced(&c, &u, &v), Err(Error::CoconeMismatch(_))));
    }

    #[test]
    fn glued_edge_into_triangle() {
        // Two edges sharing a vertex, built as a pushout of Δ¹ ← Δ⁰ → Δ¹.
        let d1 = Arc::new(simplex(1));
        let end = enumerate_maps(&point(), &d1);
        let p = pushout(&end[1], &end[0]).unwrap();
        assert_eq!(p.corner.count(0), 3);
        assert_eq!(p.corner.count(1), 2);
        let d2 = Arc::new(simplex(2));
        let edges = enumerate_maps(&d1, &d2);
        let e01 = edges.iter().find(|m| m.target().ref_name(m.image(SimplexId::new(1, 0))) == "v01").unwrap();
        let e12 = edges.iter().find(|m| m.target().ref_name(m.image(SimplexId::new(1, 0))) == "v12").unwrap();
        let h = pushout_induced(&p, e01, e12).unwrap();
        assert_eq!(h.after(&p.leg_from_b).unwrap(), *e01);
        assert_eq!(h.after(&p.leg_from_c).unwrap(), *e12);
    }

    #[test]
    fn stage_records() {
        let pt = point();
        let single = sequential_colimit(&pt, &[]).unwrap();
        assert!(single.birth.iter().flatten().all(|&b| b == 0));

        // ∅ -> Δ⁰ -> circle
        let c = circle();
        let empty = Arc::new(FiniteSimplicialSet::empty());
        let first = SimplicialMap::from_empty(&pt).with_source(empty.clone()).unwrap();
        let rec = sequential_colimit(&empty, &[first, c.leg_from_c.clone()]).unwrap();
        assert_eq!(rec.birth, vec![vec![1], vec![2]]);

        // Δ⁰ -> Δ¹ -> Δ²
        let d1 = Arc::new(simplex(1));
        let d2 = Arc::new(simplex(2));
        let v = enumerate_maps(&pt, &d1).remove(0);
        let e = enumerate_maps(&d1, &d2).into_iter().find(|m| m.is_injective()).unwrap();
        let rec = sequential_colimit(&pt, &[v, e]).unwrap();
        assert_eq!(rec.birth[2], vec![2]);

        let collapse = enumerate_maps(&d1, &pt).remove(0);
        assert!(matches!(sequential_colimit(&d1, &[collapse]), Err(Error::NonInjectiveStage { stage: 0 })));
    }
}
