//! Lifting problems: an exhaustive solver, square enumeration, generator-level
//! right-lifting checks, and constructive transfer of lifts along retracts,
//! pushouts, coproducts and sequential compositions, plus the retract argument.
//!
//! Only the left-lifting halves are implemented. The right-lifting duals
//! (pullbacks of maps with the RLP) would need limits, which nothing here uses.

use std::fmt;
use std::ops::ControlFlow;
use crate::colimits::{copair, coproduct, coproduct_of_maps, pushout_induced, Coproduct, PushoutResult, StageRecord};
use crate::error::{Error, Result};
use crate::simplicial::map::same_object;
use crate::simplicial::normal::word_to_seq;
use crate::simplicial::search::{MapSearch, Restriction, SearchStats};
use crate::simplicial::table::SimplexTable;
use crate::simplicial::{FiniteSimplicialSet, Generator, GeneratorSet, SimplicialMap};

/// A commutative square
///
/// ```text
///  A --top--> X
///  |          |
/// left      right
///  v          v
///  B -bottom> Y
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LiftingProblem {
    pub left: SimplicialMap,
    pub right: SimplicialMap,
    pub top: SimplicialMap,
    pub bottom: SimplicialMap,
}

impl LiftingProblem {
    pub fn new(left: SimplicialMap, right: SimplicialMap, top: SimplicialMap, bottom: SimplicialMap) -> Result<Self> {
        let p = Self { left, right, top, bottom };
        p.check()?;
        Ok(p)
    }

    pub fn check(&self) -> Result<()> {
        if !same_object(self.top.source(), self.left.source())
            || !same_object(self.top.target(), self.right.source())
            || !same_object(self.bottom.source(), self.left.target())
            || !same_object(self.bottom.target(), self.right.target())
        {
            return Err(Error::Mismatch("square edges do not line up".into()));
        }
        if self.right.after(&self.top)? != self.bottom.after(&self.left)? {
            return Err(Error::Mismatch("square does not commute".into()));
        }
        Ok(())
    }

    /// Both triangle equations.
    pub fn is_solved_by(&self, diagonal: &SimplicialMap) -> bool {
        same_object(diagonal.source(), self.left.target())
            && same_object(diagonal.target(), self.right.source())
            && diagonal.check().is_ok()
            && diagonal.after(&self.left).is_ok_and(|m| m == self.top)
            && self.right.after(diagonal).is_ok_and(|m| m == self.bottom)
    }
}

/// A diagonal filler.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lift {
    pub diagonal: SimplicialMap,
}

/// Exhaustive search found no diagonal. Carries search statistics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct NoLift {
    pub stats: SearchStats,
    /// The top map alone already rules out every diagonal.
    pub forced_conflict: bool,
}

impl fmt::Display for NoLift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "no lift: {} partial assignments refuted over {} nodes", self.stats.refuted, self.stats.nodes)?;
        if self.forced_conflict {
            write!(f, " (top map forces conflicting values)")?;
        }
        Ok(())
    }
}

/// Values forced on the nondegenerate simplices of `B` by `h ∘ ... = values`
/// along `left: A -> B`, as indices into `table` (of `values`' target).
/// `None` when two requirements conflict or a degenerate image cannot be matched.
fn forced_values(left: &SimplicialMap, values: &SimplicialMap, table: &SimplexTable) -> Option<Vec<Option<u32>>> {
    let b = left.target();
    let t = values.target();
    let mut out: Vec<Option<u32>> = vec![None; b.size()];
    let offsets: Vec<usize> = b.levels().iter().scan(0, |acc, l| {
        let o = *acc;
        *acc += l.len();
        Some(o)
    }).collect();
    for a in left.source().ids() {
        let img = left.image(a);
        let want = values.image(a);
        let required = if img.word.is_empty() {
            want.clone()
        } else {
            // Undo the degeneracy by keeping the first position of each value.
            let seq = word_to_seq(&img.word, img.dim());
            let mut cur = want.clone();
            for pos in (1..seq.len()).rev() {
                if seq[pos] == seq[pos - 1] {
                    cur = t.face(&cur, pos);
                }
            }
            if FiniteSimplicialSet::apply_word(&cur, &img.word) != *want {
                return None;
            }
            cur
        };
        let slot = offsets[img.base.dim] + img.base.index;
        let idx = *table.index.get(&required)?;
        match out[slot] {
            Some(prev) if prev != idx => return None,
            _ => out[slot] = Some(idx),
        }
    }
    Some(out)
}

/// Cached simplex tables for lifting against a fixed right map `f: X -> Y`.
pub struct LiftSolver {
    right: SimplicialMap,
    x_table: SimplexTable,
    y_table: SimplexTable,
    projection: Vec<Vec<u32>>,
}

impl LiftSolver {
    /// Prepares tables up to dimension `top` (the largest source dimension to be lifted).
    pub fn new(right: &SimplicialMap, top: usize) -> Self {
        let x_table = SimplexTable::new(right.source(), top);
        let y_table = SimplexTable::new(right.target(), top);
        let projection = x_table.map_table(right, &y_table);
        Self { right: right.clone(), x_table, y_table, projection }
    }

    pub fn right(&self) -> &SimplicialMap {
        &self.right
    }

    fn top_dim(&self) -> usize {
        self.x_table.top()
    }

    /// Least diagonal for the square `(left, self.right, top, bottom)`.
    pub fn solve(&self, left: &SimplicialMap, top: &SimplicialMap, bottom: &SimplicialMap) -> std::result::Result<Lift, NoLift> {
        let b = left.target();
        if b.dim().unwrap_or(0) > self.top_dim() {
            return LiftSolver::new(&self.right, b.dim().unwrap_or(0)).solve(left, top, bottom);
        }
        let Some(fixed) = forced_values(left, top, &self.x_table) else {
            return Err(NoLift { stats: SearchStats::default(), forced_conflict: true });
        };
        let mut search = MapSearch::new(b, &self.x_table).with_projection(&self.projection);
        for (slot, id) in b.ids().enumerate() {
            let over = self.y_table.lookup(bottom.image(id));
            search.restrict(slot, Restriction { fixed: fixed[slot], over: Some(over) });
        }
        let (found, stats) = search.run(|values| ControlFlow::Break(values.to_vec()));
        match found {
            Some(values) => Ok(Lift { diagonal: search.to_map(b, self.right.source(), &values) }),
            None => Err(NoLift { stats, forced_conflict: false }),
        }
    }

    pub fn solve_problem(&self, p: &LiftingProblem) -> std::result::Result<Lift, NoLift> {
        self.solve(&p.left, &p.top, &p.bottom)
    }

    /// All commutative squares from `left` to the right map, ordered by (top, bottom).
    pub fn squares(&self, left: &SimplicialMap) -> Vec<LiftingProblem> {
        let a = left.source();
        let b = left.target();
        let x = self.right.source();
        let y = self.right.target();
        let need = a.dim().unwrap_or(0).max(b.dim().unwrap_or(0));
        if need > self.top_dim() {
            return LiftSolver::new(&self.right, need).squares(left);
        }
        let mut out = Vec::new();
        let top_search = MapSearch::new(a, &self.x_table);
        top_search.run::<()>(|tv| {
            let top = top_search.to_map(a, x, tv);
            let Ok(pushed) = self.right.after(&top) else { return ControlFlow::Continue(()) };
            let Some(fixed) = forced_values(left, &pushed, &self.y_table) else { return ControlFlow::Continue(()) };
            let mut bottom_search = MapSearch::new(b, &self.y_table);
            for (slot, v) in fixed.iter().enumerate() {
                bottom_search.restrict(slot, Restriction { fixed: *v, over: None });
            }
            bottom_search.run::<()>(|bv| {
                let bottom = bottom_search.to_map(b, y, bv);
                out.push(LiftingProblem { left: left.clone(), right: self.right.clone(), top: top.clone(), bottom });
                ControlFlow::Continue(())
            });
            ControlFlow::Continue(())
        });
        out
    }
}

/// Solves a lifting problem exhaustively, returning the least diagonal.
pub fn solve_lift(p: &LiftingProblem) -> std::result::Result<Lift, NoLift> {
    LiftSolver::new(&p.right, p.left.target().dim().unwrap_or(0)).solve_problem(p)
}

/// Every commutative square from `i` to `f`.
pub fn enumerate_squares(i: &SimplicialMap, f: &SimplicialMap) -> Vec<LiftingProblem> {
    let top = i.source().dim().unwrap_or(0).max(i.target().dim().unwrap_or(0));
    LiftSolver::new(f, top).squares(i)
}

/// One square of a right-lifting check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RlpEntry {
    pub generator: Generator,
    pub index: usize,
    pub solved: bool,
}

/// Outcome of lifting a map against every generator square up to a cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RlpReport {
    pub generators: GeneratorSet,
    pub cap: usize,
    pub entries: Vec<RlpEntry>,
}

impl RlpReport {
    pub fn passes(&self) -> bool {
        self.entries.iter().all(|e| e.solved)
    }

    pub fn unsolved(&self) -> impl Iterator<Item = &RlpEntry> {
        self.entries.iter().filter(|e| !e.solved)
    }
}

impl fmt::Display for RlpReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unsolved = self.unsolved().count();
        writeln!(
            f,
            "rlp gen={} cap={} squares={} unsolved={} result={}",
            self.generators,
            self.cap,
            self.entries.len(),
            unsolved,
            if unsolved == 0 { "pass" } else { "fail" }
        )?;
        for e in &self.entries {
            writeln!(f, "gen={} square#{} {}", e.generator, e.index, if e.solved { "solved" } else { "unsolved" })?;
        }
        Ok(())
    }
}

/// Lifts `f` against every square from every generator up to `cap`.
pub fn check_rlp(f: &SimplicialMap, generators: GeneratorSet, cap: usize) -> RlpReport {
    let solver = LiftSolver::new(f, cap);
    let mut entries = Vec::new();
    for g in generators.members(cap) {
        for (index, sq) in solver.squares(&g.inclusion()).iter().enumerate() {
            entries.push(RlpEntry { generator: g, index, solved: solver.solve_problem(sq).is_ok() });
        }
    }
    RlpReport { generators, cap, entries }
}

/// `i: A -> B` is a retract of `j: C -> D`:
///
/// ```text
/// A -top_in-> C -top_out-> A
/// |i          |j           |i
/// B -bot_in-> D -bot_out-> B
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RetractDiagram {
    pub i: SimplicialMap,
    pub j: SimplicialMap,
    pub top_in: SimplicialMap,
    pub top_out: SimplicialMap,
    pub bottom_in: SimplicialMap,
    pub bottom_out: SimplicialMap,
}

impl RetractDiagram {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidRetract(m.into()));
        if self.top_out.after(&self.top_in)? != SimplicialMap::identity(self.i.source()) {
            return bad("top row does not compose to the identity");
        }
        if self.bottom_out.after(&self.bottom_in)? != SimplicialMap::identity(self.i.target()) {
            return bad("bottom row does not compose to the identity");
        }
        if self.j.after(&self.top_in)? != self.bottom_in.after(&self.i)? {
            return bad("left square does not commute");
        }
        if self.i.after(&self.top_out)? != self.bottom_out.after(&self.j)? {
            return bad("right square does not commute");
        }
        Ok(())
    }
}

fn verified(problem: &LiftingProblem, diagonal: SimplicialMap, what: &str) -> Result<Lift> {
    if problem.is_solved_by(&diagonal) {
        Ok(Lift { diagonal })
    } else {
        Err(Error::LiftTransfer(format!("{what}: transferred map fails a triangle")))
    }
}

/// Transfers a lift across a retract: solves the induced `j` square and
/// precomposes with the bottom inclusion.
pub fn lift_via_retract(
    r: &RetractDiagram,
    problem: &LiftingProblem,
    solver: impl FnOnce(&LiftingProblem) -> std::result::Result<Lift, NoLift>,
) -> Result<Lift> {
    if problem.left != r.i {
        return Err(Error::Mismatch("square's left map is not the retract".into()));
    }
    let j_problem = LiftingProblem::new(r.j.clone(), problem.right.clone(), problem.top.after(&r.top_out)?, problem.bottom.after(&r.bottom_out)?)?;
    let v = solver(&j_problem).map_err(|e| Error::LiftTransfer(format!("inner square: {e}")))?;
    verified(problem, v.diagonal.after(&r.bottom_in)?, "retract")
}

/// The square for `i` induced by a square for its pushout `j = leg_from_c`.
pub fn pushout_inner_problem(p: &PushoutResult, problem: &LiftingProblem) -> Result<LiftingProblem> {
    if problem.left != p.leg_from_c {
        return Err(Error::Mismatch("square's left map is not the pushout leg".into()));
    }
    LiftingProblem::new(p.i.clone(), problem.right.clone(), problem.top.after(&p.g)?, problem.bottom.after(&p.leg_from_b)?)
}

/// Transfers a lift for `i` to its pushout `j` via the universal property.
pub fn lift_via_pushout(p: &PushoutResult, problem: &LiftingProblem, inner: &Lift) -> Result<Lift> {
    let inner_problem = pushout_inner_problem(p, problem)?;
    if !inner_problem.is_solved_by(&inner.diagonal) {
        return Err(Error::CoconeMismatch("inner lift does not solve the composed square".into()));
    }
    let g = pushout_induced(p, &inner.diagonal, &problem.top)?;
    verified(problem, g, "pushout")
}

/// `⊔ i_s : ⊔ A_s -> ⊔ B_s` together with the coproducts it is built from.
#[derive(Debug, Clone)]
pub struct CoproductOfMaps {
    pub summands: Vec<SimplicialMap>,
    pub sources: Coproduct,
    pub targets: Coproduct,
    pub map: SimplicialMap,
}

impl CoproductOfMaps {
    pub fn new(summands: Vec<SimplicialMap>) -> Result<Self> {
        let sources = coproduct(&summands.iter().map(|m| m.source().clone()).collect::<Vec<_>>());
        let targets = coproduct(&summands.iter().map(|m| m.target().clone()).collect::<Vec<_>>());
        let map = coproduct_of_maps(&summands, &sources, &targets)?;
        Ok(Self { summands, sources, targets, map })
    }

    /// Restrictions of a square on the coproduct to each summand.
    pub fn summand_problems(&self, problem: &LiftingProblem) -> Result<Vec<LiftingProblem>> {
        if problem.left != self.map {
            return Err(Error::Mismatch("square's left map is not this coproduct".into()));
        }
        self.summands
            .iter()
            .enumerate()
            .map(|(s, m)| {
                LiftingProblem::new(
                    m.clone(),
                    problem.right.clone(),
                    problem.top.after(&self.sources.injections[s])?,
                    problem.bottom.after(&self.targets.injections[s])?,
                )
            })
            .collect()
    }
}

/// Assembles summand lifts into a lift on the coproduct.
pub fn lift_via_coproduct(c: &CoproductOfMaps, problem: &LiftingProblem, lifts: &[Option<Lift>]) -> Result<Lift> {
    let problems = c.summand_problems(problem)?;
    if lifts.len() != problems.len() {
        return Err(Error::Mismatch(format!("{} lifts for {} summands", lifts.len(), problems.len())));
    }
    let mut legs = Vec::with_capacity(lifts.len());
    for (index, (lift, sp)) in lifts.iter().zip(&problems).enumerate() {
        let lift = lift.as_ref().ok_or(Error::MissingSummandLift { index })?;
        if !sp.is_solved_by(&lift.diagonal) {
            return Err(Error::LiftTransfer(format!("summand {index} lift does not solve its square")));
        }
        legs.push(lift.diagonal.clone());
    }
    let diagonal = copair(&c.targets, &legs, problem.right.source())?;
    verified(problem, diagonal, "coproduct")
}

/// Lifts a square whose left map is `X_0 -> X_m` by solving stage by stage.
pub fn lift_via_composition(
    stages: &StageRecord,
    problem: &LiftingProblem,
    mut solver: impl FnMut(&LiftingProblem) -> std::result::Result<Lift, NoLift>,
) -> Result<Lift> {
    if problem.left != *stages.composite() {
        return Err(Error::Mismatch("square's left map is not the stage composite".into()));
    }
    let mut current = problem.top.clone();
    for (n, inc) in stages.inclusions.iter().enumerate() {
        let stage_problem = LiftingProblem::new(inc.clone(), problem.right.clone(), current, problem.bottom.after(&stages.to_final[n + 1])?)?;
        current = solver(&stage_problem).map_err(|_| Error::StageUnsolvable { stage: n })?.diagonal;
    }
    verified(problem, current, "composition")
}

/// Given `g = p ∘ i` and a lift `q` in the square `(g, p; i, id)`, exhibits `g`
/// as a retract of `i`.
pub fn retract_argument(g: &SimplicialMap, i: &SimplicialMap, p: &SimplicialMap, q: &Lift) -> Result<RetractDiagram> {
    if p.after(i)? != *g {
        return Err(Error::InvalidRetract("g is not p ∘ i".into()));
    }
    let square = LiftingProblem::new(g.clone(), p.clone(), i.clone(), SimplicialMap::identity(g.target()))?;
    if !square.is_solved_by(&q.diagonal) {
        return Err(Error::InvalidRetract("q does not solve the square (g, p; i, id)".into()));
    }
    let id_x = SimplicialMap::identity(g.source());
    let r = RetractDiagram {
        i: g.clone(),
        j: i.clone(),
        top_in: id_x.clone(),
        top_out: id_x,
        bottom_in: q.diagonal.clone(),
        bottom_out: p.clone(),
    };
    r.validate()?;
    Ok(r)
}

/// Convenience: the identity retract diagram of a map on itself.
pub fn trivial_retract(i: &SimplicialMap) -> RetractDiagram {
    RetractDiagram {
        i: i.clone(),
        j: i.clone(),
        top_in: SimplicialMap::identity(i.source()),
        top_out: SimplicialMap::identity(i.source()),
        bottom_in: SimplicialMap::identity(i.target()),
        bottom_out: SimplicialMap::identity(i.target()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;
    use crate::colimits::pushout;
    use crate::simplicial::{boundary_inclusion, enumerate_maps, horn_inclusion, simplex, SimplexId};

    fn point() -> Arc<FiniteSimplicialSet> {
        Arc::new(simplex(0))
    }

    fn to_point(x: &Arc<FiniteSimplicialSet>) -> SimplicialMap {
        enumerate_maps(x, &point()).pop().unwrap()
    }

    #[test]
    fn identity_right_map_lifts_to_bottom() {
        let i = boundary_inclusion(2);
        let x = i.target().clone();
        let f = SimplicialMap::identity(&x);
        for sq in enumerate_squares(&i, &f) {
            let lift = solve_lift(&sq).unwrap();
            assert_eq!(lift.diagonal, sq.bottom);
        }
    }

    #[test]
    fn boundary_edge_against_two_points_has_no_lift() {
        let i = boundary_inclusion(1);
        let f = to_point(i.source());
        let p = LiftingProblem::new(i.clone(), f.clone(), SimplicialMap::identity(i.source()), to_point(i.target())).unwrap();
        let err = solve_lift(&p).unwrap_err();
        assert!(err.stats.refuted > 0);
        // Brute force agrees.
        assert!(enumerate_maps(i.target(), i.source()).iter().all(|d| !p.is_solved_by(d)));
    }

    #[test]
    fn horn_against_collapse_lifts_degenerately() {
        let i = horn_inclusion(1, 0).unwrap();
        let f = to_point(&Arc::new(simplex(1)));
        for sq in enumerate_squares(&i, &f) {
            let lift = solve_lift(&sq).unwrap();
            assert!(lift.diagonal.image(SimplexId::new(1, 0)).is_degenerate());
            assert!(sq.is_solved_by(&lift.diagonal));
        }
    }

    #[test]
    fn square_counts() {
        let pt = point();
        let e = SimplicialMap::from_empty(&pt);
        assert_eq!(enumerate_squares(&e, &SimplicialMap::identity(&pt)).len(), 1);
        let i = boundary_inclusion(1);
        assert_eq!(enumerate_squares(&i, &to_point(i.source())).len(), 4);
        let empty = Arc::new(FiniteSimplicialSet::empty());
        let into_empty = SimplicialMap::identity(&empty);
        assert!(enumerate_squares(&i, &into_empty).is_empty());
    }

    #[test]
    fn rlp_examples() {
        let id = SimplicialMap::identity(&Arc::new(simplex(2)));
        assert!(check_rlp(&id, GeneratorSet::I, 3).passes());
        let f = to_point(boundary_inclusion(1).source());
        let rep = check_rlp(&f, GeneratorSet::I, 1);
        assert!(!rep.passes());
        let bad: Vec<_> = rep.unsolved().collect();
        assert!(bad.iter().all(|e| e.generator == Generator::I { n: 1 }));
        assert!(check_rlp(&f, GeneratorSet::J, 2).passes());
        assert!(rep.to_string().contains("gen=1 square#"));
    }

    #[test]
    fn retract_of_itself() {
        let i = boundary_inclusion(1);
        let f = SimplicialMap::identity(i.target());
        let r = trivial_retract(&i);
        r.validate().unwrap();
        for sq in enumerate_squares(&i, &f) {
            let w = lift_via_retract(&r, &sq, solve_lift).unwrap();
            assert_eq!(w, solve_lift(&sq).unwrap());
        }
    }

    #[test]
    fn retract_of_sum_with_point_identity() {
        let i = boundary_inclusion(1);
        let idp = SimplicialMap::identity(&point());
        let j = CoproductOfMaps::new(vec![i.clone(), idp]).unwrap();
        // Retractions send the point summand to vertex 0.
        let v0 = enumerate_maps(&point(), i.source()).remove(0);
        let v0b = enumerate_maps(&point(), i.target()).remove(0);
        let r = RetractDiagram {
            i: i.clone(),
            j: j.map.clone(),
            top_in: j.sources.injections[0].clone(),
            top_out: copair(&j.sources, &[SimplicialMap::identity(i.source()), v0], i.source()).unwrap(),
            bottom_in: j.targets.injections[0].clone(),
            bottom_out: copair(&j.targets, &[SimplicialMap::identity(i.target()), v0b], i.target()).unwrap(),
        };
        r.validate().unwrap();
        let f = SimplicialMap::identity(i.target());
        for sq in enumerate_squares(&i, &f) {
            let w = lift_via_retract(&r, &sq, solve_lift).unwrap();
            assert_eq!(w.diagonal, sq.bottom);
        }
    }

    #[test]
    fn pushout_transfer_circle() {
        let i = boundary_inclusion(1);
        let p = pushout(&i, &to_point(i.source())).unwrap();
        let circle = p.corner.clone();
        let f = SimplicialMap::identity(&circle);
        let j = p.leg_from_c.clone();
        let problem = LiftingProblem::new(j, f, p.leg_from_c.clone(), SimplicialMap::identity(&circle)).unwrap();
        let inner = solve_lift(&pushout_inner_problem(&p, &problem).unwrap()).unwrap();
        let g = lift_via_pushout(&p, &problem, &inner).unwrap();
        assert_eq!(g.diagonal, SimplicialMap::identity(&circle));
    }

    #[test]
    fn pushout_transfer_rejects_bad_inner() {
        let i = boundary_inclusion(1);
        let p = pushout(&i, &to_point(i.source())).unwrap();
        let circle = p.corner.clone();
        let f = SimplicialMap::identity(&circle);
        let problem = LiftingProblem::new(p.leg_from_c.clone(), f, p.leg_from_c.clone(), SimplicialMap::identity(&circle)).unwrap();
        let wrong = Lift { diagonal: enumerate_maps(i.target(), &circle).remove(0) };
        assert!(matches!(lift_via_pushout(&p, &problem, &wrong), Err(Error::CoconeMismatch(_))));
    }

    #[test]
    fn coproduct_transfer() {
        let pt = point();
        let e = SimplicialMap::from_empty(&pt);
        let c = CoproductOfMaps::new(vec![e.clone(), e]).unwrap();
        let f = SimplicialMap::identity(&pt);
        let squares = enumerate_squares(&c.map, &f);
        assert_eq!(squares.len(), 1);
        let subs = c.summand_problems(&squares[0]).unwrap();
        let lifts: Vec<_> = subs.iter().map(|s| solve_lift(s).ok()).collect();
        let l = lift_via_coproduct(&c, &squares[0], &lifts).unwrap();
        assert_eq!(l.diagonal.target().size(), 1);
        assert!(matches!(lift_via_coproduct(&c, &squares[0], &[lifts[0].clone(), None]), Err(Error::MissingSummandLift { index: 1 })));
    }

    #[test]
    fn composition_transfer_builds_identity() {
        let i = boundary_inclusion(1);
        let p = pushout(&i, &to_point(i.source())).unwrap();
        let circle = p.corner.clone();
        let empty = Arc::new(FiniteSimplicialSet::empty());
        let first = SimplicialMap::from_empty(p.g.target()).with_source(empty.clone()).unwrap();
        let rec = crate::colimits::sequential_colimit(&empty, &[first, p.leg_from_c.clone()]).unwrap();
        let f = SimplicialMap::identity(&circle);
        let problem = LiftingProblem::new(rec.composite().clone(), f, SimplicialMap::from_empty(&circle).with_source(empty).unwrap(), SimplicialMap::identity(&circle)).unwrap();
        let l = lift_via_composition(&rec, &problem, solve_lift).unwrap();
        assert_eq!(l.diagonal, SimplicialMap::identity(&circle));
    }

    #[test]
    fn retract_argument_identity_and_point() {
        let x = Arc::new(simplex(1));
        let id = SimplicialMap::identity(&x);
        let r = retract_argument(&id, &id, &id, &Lift { diagonal: id.clone() }).unwrap();
        assert_eq!(r.bottom_in, id);

        let pt = point();
        let g = SimplicialMap::from_empty(&pt);
        let p = SimplicialMap::identity(&pt);
        let q = solve_lift(&LiftingProblem::new(g.clone(), p.clone(), g.clone(), p.clone()).unwrap()).unwrap();
        let r = retract_argument(&g, &g, &p, &q).unwrap();
        assert_eq!(r.bottom_in, p);
        assert!(retract_argument(&g, &g, &p, &Lift { diagonal: to_point(&pt) }).is_ok());
    }
}
