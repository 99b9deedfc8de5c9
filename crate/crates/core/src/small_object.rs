//! The small object argument: factor `f: X -> Y` as a relative cell complex
//! `X -> W` followed by a map `W -> Y` with the right lifting property against
//! the generators up to a dimension cap, by repeatedly gluing one cell per
//! lifting problem.
//!
//! Faithful mode attaches a cell for every square at every stage and is what
//! the functoriality construction needs. Reduced mode attaches cells only for
//! squares that have no lift yet, which lets many small inputs converge.

use std::collections::HashMap;
use std::fmt;

use crate::cells::{copair_cells, Attachment, Realization};
use crate::colimits::pushout_induced;
use crate::error::{Error, Result};
use crate::lifting::{check_rlp, LiftSolver, LiftingProblem, RlpReport};
use crate::simplicial::map::same_object;
use crate::simplicial::{Generator, GeneratorSet, SimplicialMap};

pub const DEFAULT_CAP: usize = 2;
pub const DEFAULT_BUDGET: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Faithful,
    Reduced,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Faithful => "faithful",
            Mode::Reduced => "reduced",
        })
    }
}

/// The squares seen in one round, against `W_k -> Y`.
#[derive(Debug, Clone)]
pub struct Round {
    pub squares: Vec<LiftingProblem>,
    /// Generator on the left of each square.
    pub generators: Vec<Generator>,
    /// Indices of the squares that received a cell, in attachment order.
    pub attached: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct FactorizationResult {
    pub input: SimplicialMap,
    /// `X -> W`, the composite of the realization.
    pub left: SimplicialMap,
    /// `W -> Y`.
    pub right: SimplicialMap,
    pub realization: Realization,
    /// `W_k -> Y` for every stage `k`.
    pub rights: Vec<SimplicialMap>,
    pub rounds: Vec<Round>,
    /// Rounds executed, including a final round that found nothing to attach.
    pub stages_run: usize,
    /// Squares against `right` that have no lift.
    pub residual: Vec<LiftingProblem>,
    pub mode: Mode,
    pub generators: GeneratorSet,
    pub cap: usize,
    pub budget: usize,
}

impl FactorizationResult {
    pub fn converged(&self) -> bool {
        self.residual.is_empty()
    }

    /// For every square of round `k`, whether it lifts through `W_{k+1}` (or
    /// `W_k` when the round attached nothing). Returns `(round, square, lifted)`.
    pub fn stage_solvability(&self) -> Vec<(usize, usize, bool)> {
        let mut out = Vec::new();
        let last = self.rights.len() - 1;
        for (k, round) in self.rounds.iter().enumerate() {
            let next = (k + 1).min(last);
            let step = self.realization.record.inclusion_between(k, next);
            let solver = LiftSolver::new(&self.rights[next], self.cap);
            for (s, sq) in round.squares.iter().enumerate() {
                let top = step.after(&sq.top).expect("tops land in their stage");
                out.push((k, s, solver.solve(&sq.left, &top, &sq.bottom).is_ok()));
            }
        }
        out
    }
}

/// Factors `f` by the small object argument against `generators` up to `cap`,
/// running at most `budget` rounds.
pub fn factorize(f: &SimplicialMap, generators: GeneratorSet, cap: usize, mode: Mode, budget: usize) -> Result<FactorizationResult> {
    f.check()?;
    let mut realization = Realization::new(f.source().clone());
    let mut rights = vec![f.clone()];
    let mut rounds = Vec::new();
    let mut converged = false;
    let members = generators.members(cap);
    while rounds.len() < budget {
        let p = rights.last().unwrap();
        let solver = LiftSolver::new(p, cap);
        let (generators_of, squares): (Vec<Generator>, Vec<LiftingProblem>) =
            members.iter().flat_map(|g| solver.squares(&g.inclusion()).into_iter().map(move |sq| (*g, sq))).unzip();
        let attached: Vec<usize> = match mode {
            Mode::Faithful => (0..squares.len()).collect(),
            Mode::Reduced => (0..squares.len()).filter(|&s| solver.solve_problem(&squares[s]).is_err()).collect(),
        };
        if attached.is_empty() {
            rounds.push(Round { squares, generators: generators_of, attached });
            converged = mode == Mode::Reduced || rounds.last().unwrap().squares.is_empty();
            break;
        }
        let attachments = attached
            .iter()
            .map(|&s| Attachment::new(generators_of[s], squares[s].top.clone()))
            .collect::<Result<Vec<_>>>()?;
        realization.attach_stage(attachments)?;
        let po = realization.pushouts.last().unwrap();
        let bottoms: Vec<SimplicialMap> = attached.iter().map(|&s| squares[s].bottom.clone()).collect();
        let v = copair_cells(po, &bottoms, f.target())?;
        let next = pushout_induced(po, p, &v)?;
        rights.push(next);
        rounds.push(Round { squares, generators: generators_of, attached });
    }
    let right = rights.last().unwrap().clone();
    let residual = if converged { Vec::new() } else { unsolved_squares(&right, generators, cap) };
    Ok(FactorizationResult {
        input: f.clone(),
        left: realization.composite().clone(),
        right,
        realization,
        rights,
        stages_run: rounds.len(),
        rounds,
        residual,
        mode,
        generators,
        cap,
        budget,
    })
}

fn unsolved_squares(p: &SimplicialMap, generators: GeneratorSet, cap: usize) -> Vec<LiftingProblem> {
    let solver = LiftSolver::new(p, cap);
    generators
        .members(cap)
        .iter()
        .flat_map(|g| solver.squares(&g.inclusion()))
        .filter(|sq| solver.solve_problem(sq).is_err())
        .collect()
}

/// Stagewise maps `W_k -> W'_k` induced by a square `(a, b): f -> f'`, sending
/// the cell attached for a square to the cell attached for the composed square.
pub fn induced_factorization_map(
    a: &SimplicialMap,
    b: &SimplicialMap,
    r: &FactorizationResult,
    r2: &FactorizationResult,
) -> Result<Vec<SimplicialMap>> {
    if r.mode != Mode::Faithful || r2.mode != Mode::Faithful {
        return Err(Error::Functoriality("reduced-mode factorizations are not functorial".into()));
    }
    if r.generators != r2.generators || r.cap != r2.cap {
        return Err(Error::Functoriality("generator sets or caps differ".into()));
    }
    if !same_object(a.source(), r.input.source()) || !same_object(a.target(), r2.input.source()) || !same_object(b.source(), r.input.target()) || !same_object(b.target(), r2.input.target()) {
        return Err(Error::Mismatch("square does not go from the first input to the second".into()));
    }
    if r2.input.after(a)? != b.after(&r.input)? {
        return Err(Error::Mismatch("square does not commute".into()));
    }
    let stages = r.rights.len().max(r2.rights.len());
    let mut maps = vec![a.with_target(r2.realization.record.objects[0].clone())?];
    for k in 0..stages - 1 {
        let phi = maps.last().unwrap();
        let k2 = (k + 1).min(r2.rights.len() - 1);
        let step2 = r2.realization.record.inclusion_between(k.min(r2.rights.len() - 1), k2);
        let u = step2.after(phi)?;
        let next = if k + 1 < r.rights.len() {
            let round = &r.rounds[k];
            let po = &r.realization.pushouts[k];
            if k + 1 >= r2.rights.len() {
                return Err(Error::Functoriality(format!("target factorization stops before stage {}", k + 1)));
            }
            let round2 = &r2.rounds[k];
            let index: HashMap<_, usize> = round2.squares.iter().enumerate().map(|(s, sq)| ((round2.generators[s], sq.top.images().to_vec(), sq.bottom.images().to_vec()), s)).collect();
            let mut cells = Vec::with_capacity(round.attached.len());
            for &s in &round.attached {
                let sq = &round.squares[s];
                let key = (round.generators[s], phi.after(&sq.top)?.images().to_vec(), b.after(&sq.bottom)?.images().to_vec());
                let s2 = *index.get(&key).ok_or_else(|| Error::Functoriality(format!("composed square of round {k} not found")))?;
                let pos = round2.attached.iter().position(|&x| x == s2).ok_or_else(|| Error::Functoriality("composed square received no cell".into()))?;
                cells.push(r2.realization.cells[k][pos].clone());
            }
            let v = copair_cells(po, &cells, u.target())?;
            pushout_induced(po, &u, &v)?
        } else {
            // The first factorization has stopped: its stage repeats.
            u
        };
        maps.push(next);
    }
    for (k, phi) in maps.iter().enumerate() {
        let p = &r.rights[k.min(r.rights.len() - 1)];
        let p2 = &r2.rights[k.min(r2.rights.len() - 1)];
        if p2.after(phi)? != b.after(p)? {
            return Err(Error::Functoriality(format!("stage {k} map does not commute with the right factors")));
        }
    }
    Ok(maps)
}

/// Checks carried out on a factorization result.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub composite: bool,
    pub presentation: bool,
    pub residual: bool,
    /// Present when the residual is empty.
    pub rlp: Option<RlpReport>,
}

impl VerificationReport {
    pub fn passes(&self) -> bool {
        self.composite && self.presentation && self.residual && self.rlp.as_ref().map_or(true, RlpReport::passes)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = |b: bool| if b { "ok" } else { "FAILED" };
        writeln!(f, "composite: {}", word(self.composite))?;
        writeln!(f, "presentation: {}", word(self.presentation))?;
        writeln!(f, "residual: {}", word(self.residual))?;
        match &self.rlp {
            Some(r) => writeln!(f, "rlp: {}", word(r.passes())),
            None => writeln!(f, "rlp: skipped (residual nonempty)"),
        }
    }
}

pub fn verify_factorization(r: &FactorizationResult) -> VerificationReport {
    let composite = r.right.after(&r.left).is_ok_and(|m| m == r.input);
    let presentation = r
        .realization
        .presentation
        .realize()
        .is_ok_and(|re| *re.composite() == r.left && same_object(re.current(), r.right.source()));
    let recomputed = unsolved_squares(&r.right, r.generators, r.cap);
    let residual = recomputed == r.residual;
    let rlp = r.residual.is_empty().then(|| check_rlp(&r.right, r.generators, r.cap));
    VerificationReport { composite, presentation, residual, rlp }
}
