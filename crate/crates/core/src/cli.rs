//! Command-line front end. `run` does all the work and returns the exit code
//! and output so it can be tested without a process.
//!
//! Exit codes: 0 success or pass, 1 a well-formed negative answer (no lift,
//! failed certificate, nonempty residual, invalid object), 2 bad input.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use crate::cells::{factor_through_stage, j_to_i_presentation};
use crate::colimits::pushout;
use crate::error::Error;
use crate::format::{parse_document, print_map, print_presentation, print_soa, print_sset, Document};
use crate::homology::{homology, weak_equivalence_certificate};
use crate::lifting::{check_rlp, solve_lift, LiftingProblem};
use crate::simplicial::{enumerate_maps, FiniteSimplicialSet, GeneratorSet};
use crate::small_object::{factorize, induced_factorization_map, Mode, DEFAULT_BUDGET, DEFAULT_CAP};

#[derive(Debug, Parser)]
#[command(name = "modelcat", version, about = "Finite simplicial sets: lifting, cell complexes, small object argument, homology")]
struct Cli {
    /// Write the report here instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GenArg {
    I,
    J,
}

impl From<GenArg> for GeneratorSet {
    fn from(g: GenArg) -> Self {
        match g {
            GenArg::I => GeneratorSet::I,
            GenArg::J => GeneratorSet::J,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Faithful,
    Reduced,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Faithful => Mode::Faithful,
            ModeArg::Reduced => Mode::Reduced,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check every object in a document.
    Validate { file: PathBuf },
    /// List all maps between two objects.
    Hom { file: PathBuf, source: String, target: String },
    /// Pushout of two maps with a common source.
    Pushout { file: PathBuf, i: String, g: String },
    /// Solve a lifting problem given by four maps.
    Lift {
        file: PathBuf,
        #[arg(default_value = "left")]
        left: String,
        #[arg(default_value = "right")]
        right: String,
        #[arg(default_value = "top")]
        top: String,
        #[arg(default_value = "bottom")]
        bottom: String,
    },
    /// Lift a map against every generator square up to the cap.
    Rlp {
        file: PathBuf,
        /// Defaults to the last map in the file.
        map: Option<String>,
        #[arg(long = "gen", value_enum, default_value = "i", ignore_case = true)]
        generators: GenArg,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Realize a cell presentation.
    Realize { file: PathBuf, presentation: String },
    /// Factor a map into a realization through its earliest stage.
    FactorStage { file: PathBuf, presentation: String, map: String },
    /// Rewrite a horn presentation with boundary cells.
    J2i { file: PathBuf, presentation: String },
    /// Small object argument factorization.
    Factorize {
        file: PathBuf,
        /// Defaults to the last map in the file.
        map: Option<String>,
        #[arg(long = "gen", value_enum, default_value = "i", ignore_case = true)]
        generators: GenArg,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value = "reduced")]
        mode: ModeArg,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Stagewise maps between faithful factorizations induced by a square `(a, b): f -> f2`.
    Functorial {
        file: PathBuf,
        f: String,
        f2: String,
        a: String,
        b: String,
        #[arg(long = "gen", value_enum, default_value = "i", ignore_case = true)]
        generators: GenArg,
        #[arg(long, default_value_t = 0)]
        cap: usize,
        #[arg(long, default_value_t = 1)]
        budget: usize,
    },
    /// Integer homology of an object.
    Homology {
        file: PathBuf,
        object: String,
        #[arg(long, default_value_t = 3)]
        maxdim: usize,
    },
    /// Homological check that a map could be a weak equivalence.
    WeCert {
        file: PathBuf,
        /// Defaults to the last map in the file.
        map: Option<String>,
        #[arg(long, default_value_t = 3)]
        maxdim: usize,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

type Step<T> = std::result::Result<T, Failure>;

fn load(path: &PathBuf) -> Step<Document> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    parse_document(&text).map_err(|e| Failure(format!("{}:{e}", path.display())))
}

fn get_map<'a>(doc: &'a Document, name: Option<&str>) -> Step<&'a crate::format::MapEntry> {
    match name {
        Some(n) => doc.map_entry(n).ok_or_else(|| Failure(format!("unknown map `{n}`"))),
        None => doc.maps.last().ok_or_else(|| Failure("the file declares no maps".into())),
    }
}

fn get_object(doc: &Document, reference: &str) -> Step<Arc<FiniteSimplicialSet>> {
    let o = doc.resolve_object(reference).map_err(Failure)?;
    let report = o.validate();
    if !report.is_valid() {
        return Err(Failure(format!("`{reference}` is not a valid simplicial set: {report}")));
    }
    Ok(o)
}

/// Objects that must be printed for the references `refs` to resolve.
fn named_objects(doc: &Document, refs: &[&str]) -> Vec<(String, Arc<FiniteSimplicialSet>)> {
    let mut out: Vec<(String, Arc<FiniteSimplicialSet>)> = Vec::new();
    for r in refs {
        if let Some(o) = doc.object(r) {
            if !out.iter().any(|(n, _)| n == r) {
                out.push((r.to_string(), o.clone()));
            }
        }
    }
    out
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() { 2 } else { 0 };
            return if code == 0 { Outcome { code, stdout: text, stderr: String::new() } } else { Outcome { code, stdout: String::new(), stderr: text } };
        }
    };
    let (code, report) = match execute(&cli.command) {
        Ok(x) => x,
        Err(Failure(msg)) => return Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
    };
    match &cli.output {
        Some(path) => match std::fs::write(path, &report) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
            Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {}: {e}\n", path.display()) },
        },
        None => Outcome { code, stdout: report, stderr: String::new() },
    }
}

fn execute(command: &Command) -> Step<(i32, String)> {
    let mut out = String::new();
    let code = match command {
        Command::Validate { file } => {
            let doc = load(file)?;
            let mut ok = true;
            for (name, report) in doc.validate() {
                if report.is_valid() {
                    let _ = writeln!(out, "object {name}: valid");
                } else {
                    ok = false;
                    let _ = writeln!(out, "object {name}: invalid: {report}");
                }
            }
            for e in &doc.maps {
                let _ = writeln!(out, "map {}: valid", e.name);
            }
            for e in &doc.presentations {
                let _ = writeln!(out, "presentation {}: stages={} cells={}", e.name, e.realization.stages(), e.realization.presentation.attachment_count());
            }
            i32::from(!ok)
        }
        Command::Hom { file, source, target } => {
            let doc = load(file)?;
            let (a, x) = (get_object(&doc, source)?, get_object(&doc, target)?);
            let maps = enumerate_maps(&a, &x);
            let _ = writeln!(out, "hom {source} -> {target}: count={}", maps.len());
            for (i, m) in maps.iter().enumerate() {
                out.push('\n');
                out.push_str(&print_map(&format!("hom.{i}"), source, target, m));
            }
            0
        }
        Command::Pushout { file, i, g } => {
            let doc = load(file)?;
            let (ie, ge) = (get_map(&doc, Some(i))?, get_map(&doc, Some(g))?);
            let p = pushout(&ie.map, &ge.map)?;
            let named = named_objects(&doc, &[&ie.target, &ge.target]);
            for (n, o) in &named {
                out.push_str(&print_sset(n, o));
                out.push('\n');
            }
            out.push_str(&print_sset("pushout", &p.corner));
            out.push('\n');
            out.push_str(&print_map("from_b", &ie.target, "pushout", &p.leg_from_b));
            out.push('\n');
            out.push_str(&print_map("from_c", &ge.target, "pushout", &p.leg_from_c));
            0
        }
        Command::Lift { file, left, right, top, bottom } => {
            let doc = load(file)?;
            let [l, r, t, b] = [left, right, top, bottom].map(|n| get_map(&doc, Some(n)));
            let (l, r, t, b) = (l?, r?, t?, b?);
            let problem = LiftingProblem::new(l.map.clone(), r.map.clone(), t.map.clone(), b.map.clone())?;
            match solve_lift(&problem) {
                Ok(lift) => {
                    out.push_str("lift: solved\n\n");
                    out.push_str(&print_map("diagonal", &l.target, &r.source, &lift.diagonal));
                    0
                }
                Err(none) => {
                    let _ = writeln!(out, "lift: none ({none})");
                    1
                }
            }
        }
        Command::Rlp { file, map, generators, cap } => {
            let doc = load(file)?;
            let e = get_map(&doc, map.as_deref())?;
            let report = check_rlp(&e.map, (*generators).into(), *cap);
            out.push_str(&report.to_string());
            i32::from(!report.passes())
        }
        Command::Realize { file, presentation } => {
            let doc = load(file)?;
            let p = doc.presentation_entry(presentation).ok_or_else(|| Failure(format!("unknown presentation `{presentation}`")))?;
            let r = &p.realization;
            let x = r.current();
            let _ = writeln!(out, "realize {presentation}: stages={} cells={}\n", r.stages(), r.presentation.attachment_count());
            out.push_str(&print_sset("realized", x));
            out.push('\n');
            for id in x.ids() {
                let _ = writeln!(out, "birth {} = {}", x.name(id), r.record.birth_of(id));
            }
            out.push('\n');
            out.push_str(&print_map("composite", &p.base, "realized", r.composite()));
            0
        }
        Command::FactorStage { file, presentation, map } => {
            let doc = load(file)?;
            let p = doc.presentation(presentation).ok_or_else(|| Failure(format!("unknown presentation `{presentation}`")))?;
            let e = get_map(&doc, Some(map))?;
            let (k, factored) = factor_through_stage(&p.record, &e.map)?;
            let _ = writeln!(out, "factor-stage {map}: stage={k}\n");
            out.push_str(&print_map("factored", &e.source, &format!("{presentation}@{k}"), &factored));
            0
        }
        Command::J2i { file, presentation } => {
            let doc = load(file)?;
            let p = doc.presentation_entry(presentation).ok_or_else(|| Failure(format!("unknown presentation `{presentation}`")))?;
            let (q, iso) = j_to_i_presentation(&p.realization.presentation)?;
            let name = format!("{presentation}_i");
            let _ = writeln!(out, "j2i {presentation}: cells {} -> {}\n", p.realization.presentation.attachment_count(), q.attachment_count());
            out.push_str(&print_presentation(&name, &q, &p.base));
            out.push('\n');
            out.push_str(&print_map("iso", &format!("{presentation}@end"), &format!("{name}@end"), &iso));
            0
        }
        Command::Factorize { file, map, generators, cap, mode, budget } => {
            let doc = load(file)?;
            let e = get_map(&doc, map.as_deref())?;
            let r = factorize(&e.map, (*generators).into(), *cap, (*mode).into(), *budget)?;
            let named = named_objects(&doc, &[&e.source, &e.target]);
            out.push_str(&print_soa(&r, &named, &e.source, &e.target, "W"));
            i32::from(!r.residual.is_empty())
        }
        Command::Functorial { file, f, f2, a, b, generators, cap, budget } => {
            let doc = load(file)?;
            let [fe, f2e, ae, be] = [f, f2, a, b].map(|n| get_map(&doc, Some(n)));
            let (fe, f2e, ae, be) = (fe?, f2e?, ae?, be?);
            let g: GeneratorSet = (*generators).into();
            let r1 = factorize(&fe.map, g, *cap, Mode::Faithful, *budget)?;
            let r2 = factorize(&f2e.map, g, *cap, Mode::Faithful, *budget)?;
            let maps = induced_factorization_map(&ae.map, &be.map, &r1, &r2)?;
            let _ = writeln!(out, "functorial gen={g} N={cap} budget={budget} stages={}\n", maps.len() - 1);
            for (n, o) in named_objects(&doc, &[&fe.source, &f2e.source]) {
                out.push_str(&print_sset(&n, &o));
                out.push('\n');
            }
            out.push_str(&print_presentation(f, &r1.realization.presentation, &fe.source));
            out.push('\n');
            out.push_str(&print_presentation(f2, &r2.realization.presentation, &f2e.source));
            for (k, m) in maps.iter().enumerate() {
                let k1 = k.min(r1.realization.stages());
                let k2 = k.min(r2.realization.stages());
                out.push('\n');
                out.push_str(&print_map(&format!("stage.{k}"), &format!("{f}@{k1}"), &format!("{f2}@{k2}"), m));
            }
            0
        }
        Command::Homology { file, object, maxdim } => {
            let doc = load(file)?;
            let s = get_object(&doc, object)?;
            for d in 0..=*maxdim {
                let _ = writeln!(out, "H{d}({object}) = {}", homology(&s, d)?);
            }
            0
        }
        Command::WeCert { file, map, maxdim } => {
            let doc = load(file)?;
            let e = get_map(&doc, map.as_deref())?;
            let c = weak_equivalence_certificate(&e.map, *maxdim)?;
            let _ = writeln!(out, "{c}");
            i32::from(!c.passed())
        }
    };
    Ok((code, out))
}
