//! Line-oriented text formats.
//!
//! A document is a sequence of blocks; `#` starts a comment.
//!
//! ```text
//! sset/1 X
//! dim 0: a b
//! dim 1: e
//! face e: b a
//! end
//!
//! map f : X -> simplex(0)
//! a -> v0
//! b -> v0
//! e -> s[0]·v0
//! end
//!
//! map P.1.0 : boundary(1) -> @0
//! v0 -> a
//! v1 -> b
//! end
//!
//! cellpres/1 P base=X stages=1
//! stage=1 gen=I n=1 attach=P.1.0
//! end
//! ```
//!
//! Object references are declared names, `empty`, `simplex(n)`, `boundary(n)`,
//! `horn(n,k)`, `NAME@k` / `NAME@end` for a stage of a declared presentation,
//! and `@k` for a stage of the presentation currently being read (attaching
//! maps only). Simplex references are `name` or `s[i,j,..]·name` (`*` also
//! accepted in place of `·`), with a strictly decreasing degeneracy word.
//!
//! The `soa/1` report is a header line followed by a document.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::sync::Arc;

use crate::cells::{Attachment, CellPresentation, Realization};
use crate::error::{Error, Result};
use crate::simplicial::map::same_object;
use crate::simplicial::normal::word_is_normal;
use crate::simplicial::{boundary, horn, simplex, FiniteSimplicialSet, Generator, GeneratorSet, Simplex, SimplexId, SimplexRef, SimplicialMap, ValidationReport};
use crate::small_object::{FactorizationResult, Mode};

/// A parsed document. Maps whose target is a stage `@k` of the presentation
/// being read only appear inside that presentation.
#[derive(Debug, Clone, Default)]
pub struct Document {
    pub objects: Vec<(String, Arc<FiniteSimplicialSet>)>,
    pub maps: Vec<MapEntry>,
    pub presentations: Vec<PresentationEntry>,
}

/// A declared map with the object references it was declared between.
#[derive(Debug, Clone)]
pub struct MapEntry {
    pub name: String,
    pub source: String,
    pub target: String,
    pub map: SimplicialMap,
}

#[derive(Debug, Clone)]
pub struct PresentationEntry {
    pub name: String,
    pub base: String,
    pub realization: Realization,
}

impl Document {
    pub fn object(&self, name: &str) -> Option<&Arc<FiniteSimplicialSet>> {
        self.objects.iter().find(|(n, _)| n == name).map(|(_, o)| o)
    }

    pub fn map(&self, name: &str) -> Option<&SimplicialMap> {
        self.map_entry(name).map(|e| &e.map)
    }

    pub fn map_entry(&self, name: &str) -> Option<&MapEntry> {
        self.maps.iter().find(|e| e.name == name)
    }

    pub fn presentation(&self, name: &str) -> Option<&Realization> {
        self.presentation_entry(name).map(|e| &e.realization)
    }

    pub fn presentation_entry(&self, name: &str) -> Option<&PresentationEntry> {
        self.presentations.iter().find(|e| e.name == name)
    }

    /// Resolves an object reference outside any presentation.
    pub fn resolve_object(&self, reference: &str) -> std::result::Result<Arc<FiniteSimplicialSet>, String> {
        resolve_object(self, reference, None)
    }

    /// Validation report of every declared object, in declaration order.
    pub fn validate(&self) -> Vec<(String, ValidationReport)> {
        self.objects.iter().map(|(n, o)| (n.clone(), o.validate())).collect()
    }
}

struct Line<'a> {
    no: usize,
    text: &'a str,
}

impl<'a> Line<'a> {
    fn col(&self, part: &str) -> usize {
        let offset = part.as_ptr() as usize - self.text.as_ptr() as usize;
        self.text[..offset].chars().count() + 1
    }

    fn err(&self, part: &str, message: impl Into<String>) -> Error {
        Error::parse(self.no, self.col(part), message)
    }

    fn tokens(&self) -> Vec<&'a str> {
        self.text.split_whitespace().collect()
    }

    /// Splits at the first `:` into the tokens before and after it.
    fn split_colon(&self) -> Option<(Vec<&'a str>, Vec<&'a str>)> {
        let (head, tail) = self.text.split_once(':')?;
        Some((head.split_whitespace().collect(), tail.split_whitespace().collect()))
    }
}

fn significant_lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let t = raw.split('#').next().unwrap_or("");
            (!t.trim().is_empty()).then_some(Line { no: i + 1, text: t })
        })
        .collect()
}

fn check_block_name<'a>(line: &Line<'a>, name: Option<&&'a str>, what: &str) -> Result<&'a str> {
    let Some(&name) = name else {
        return Err(Error::parse(line.no, line.text.len() + 1, format!("{what} needs a name")));
    };
    if name.chars().any(|c| "@():=#".contains(c)) || matches!(name, "empty") {
        return Err(line.err(name, format!("invalid {what} name `{name}`")));
    }
    Ok(name)
}

struct RawMap<'a> {
    header: Line<'a>,
    name: &'a str,
    source: &'a str,
    target: &'a str,
    body: Vec<Line<'a>>,
}

pub fn parse_document(text: &str) -> Result<Document> {
    let lines = significant_lines(text);
    let mut doc = Document::default();
    let mut deferred: HashMap<&str, RawMap<'_>> = HashMap::new();
    let mut seen_maps: HashSet<&str> = HashSet::new();
    let mut i = 0;
    while i < lines.len() {
        let header = &lines[i];
        let end = (i + 1..lines.len())
            .find(|&j| lines[j].text.trim() == "end")
            .ok_or_else(|| Error::parse(header.no, 1, "block is not closed by `end`"))?;
        let body: Vec<Line<'_>> = lines[i + 1..end].iter().map(|l| Line { no: l.no, text: l.text }).collect();
        let toks = header.tokens();
        match toks[0] {
            "sset/1" => {
                let name = check_block_name(header, toks.get(1), "object")?;
                if let Some(extra) = toks.get(2) {
                    return Err(header.err(extra, "unexpected text after object name"));
                }
                if doc.object(name).is_some() {
                    return Err(header.err(name, format!("object `{name}` declared twice")));
                }
                let obj = parse_sset_body(header, &body)?;
                doc.objects.push((name.to_string(), Arc::new(obj)));
            }
            "map" => {
                let raw = parse_map_header(header, body)?;
                if !seen_maps.insert(raw.name) {
                    return Err(header.err(raw.name, format!("map `{}` declared twice", raw.name)));
                }
                if raw.target.starts_with('@') || raw.source.starts_with('@') {
                    deferred.insert(raw.name, raw);
                } else {
                    let src = resolve_checked(&doc, &raw.header, raw.source, None)?;
                    let tgt = resolve_checked(&doc, &raw.header, raw.target, None)?;
                    let m = build_map(&raw, src, tgt)?;
                    doc.maps.push(MapEntry { name: raw.name.to_string(), source: raw.source.to_string(), target: raw.target.to_string(), map: m });
                }
            }
            "cellpres/1" => {
                let name = check_block_name(header, toks.get(1), "presentation")?;
                if doc.presentation(name).is_some() {
                    return Err(header.err(name, format!("presentation `{name}` declared twice")));
                }
                let (base, realization) = parse_cellpres(&doc, &deferred, header, &toks[2..], &body)?;
                doc.presentations.push(PresentationEntry { name: name.to_string(), base: base.to_string(), realization });
            }
            other => return Err(header.err(other, format!("expected `sset/1`, `map` or `cellpres/1`, found `{other}`"))),
        }
        i = end + 1;
    }
    Ok(doc)
}

fn parse_sset_body(header: &Line<'_>, body: &[Line<'_>]) -> Result<FiniteSimplicialSet> {
    let mut levels: Vec<Vec<(String, usize)>> = Vec::new();
    let mut dims_seen = HashSet::new();
    let mut index: HashMap<&str, SimplexId> = HashMap::new();
    let mut face_lines: Vec<&Line<'_>> = Vec::new();
    for line in body {
        let (head, tail) = line.split_colon().ok_or_else(|| line.err(line.text.trim_start(), "expected `dim <d>: ...` or `face <name>: ...`"))?;
        match head.as_slice() {
            ["dim", d] => {
                let dim: usize = d.parse().map_err(|_| line.err(d, format!("`{d}` is not a dimension")))?;
                if !dims_seen.insert(dim) {
                    return Err(line.err(d, format!("dimension {dim} listed twice")));
                }
                if levels.len() <= dim {
                    levels.resize(dim + 1, Vec::new());
                }
                for name in tail {
                    if name.starts_with("s[") {
                        return Err(line.err(name, "simplex names may not start with `s[`"));
                    }
                    let id = SimplexId::new(dim, levels[dim].len());
                    if index.insert(name, id).is_some() {
                        return Err(line.err(name, format!("simplex `{name}` declared twice")));
                    }
                    levels[dim].push((name.to_string(), line.no));
                }
            }
            ["face", _] => face_lines.push(line),
            _ => return Err(line.err(line.text.trim_start(), "expected `dim <d>: ...` or `face <name>: ...`")),
        }
    }
    let mut faces: Vec<Vec<Option<Vec<SimplexRef>>>> = levels.iter().map(|l| vec![None; l.len()]).collect();
    for line in face_lines {
        let (head, tail) = line.split_colon().expect("checked above");
        let name = head[1];
        let id = *index.get(name).ok_or_else(|| line.err(name, format!("unknown simplex `{name}`")))?;
        if id.dim == 0 {
            return Err(line.err(name, "vertices have no faces"));
        }
        if faces[id.dim][id.index].is_some() {
            return Err(line.err(name, format!("faces of `{name}` given twice")));
        }
        if tail.len() != id.dim + 1 {
            return Err(line.err(name, format!("`{name}` has dimension {} and needs {} faces, found {}", id.dim, id.dim + 1, tail.len())));
        }
        let refs = tail
            .iter()
            .map(|t| {
                let r = parse_ref(t, |n| index.get(n).copied()).map_err(|m| line.err(t, m))?;
                if r.dim() + 1 != id.dim {
                    return Err(line.err(t, format!("face `{t}` has dimension {}, expected {}", r.dim(), id.dim - 1)));
                }
                Ok(r)
            })
            .collect::<Result<Vec<_>>>()?;
        faces[id.dim][id.index] = Some(refs);
    }
    let mut out: Vec<Vec<Simplex>> = Vec::with_capacity(levels.len());
    for (d, level) in levels.iter().enumerate() {
        let mut l = Vec::with_capacity(level.len());
        for (i, (name, _)) in level.iter().enumerate() {
            let f = match faces[d][i].take() {
                Some(f) => f,
                None if d == 0 => Vec::new(),
                None => return Err(Error::parse(header.no, 1, format!("simplex `{name}` has no face line"))),
            };
            l.push(Simplex { name: name.clone(), faces: f });
        }
        out.push(l);
    }
    Ok(FiniteSimplicialSet::from_levels(out))
}

/// Parses `name` or `s[i,j]·name`.
fn parse_ref(token: &str, lookup: impl Fn(&str) -> Option<SimplexId>) -> std::result::Result<SimplexRef, String> {
    let (word, name) = match token.strip_prefix("s[") {
        Some(rest) => {
            let (w, after) = rest.split_once(']').ok_or("unterminated degeneracy word")?;
            let name = after.strip_prefix('·').or_else(|| after.strip_prefix('*')).ok_or("expected `·` or `*` after degeneracy word")?;
            let word = w
                .split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| format!("`{x}` is not a degeneracy index")))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            (word, name)
        }
        None => (Vec::new(), token),
    };
    let base = lookup(name).ok_or_else(|| format!("unknown simplex `{name}`"))?;
    if !word_is_normal(&word, base.dim) {
        return Err(format!("degeneracy word in `{token}` must be strictly decreasing and in range"));
    }
    Ok(SimplexRef::new(base, word))
}

fn parse_map_header<'a>(header: &Line<'a>, body: Vec<Line<'a>>) -> Result<RawMap<'a>> {
    let shape = "expected `map NAME : SOURCE -> TARGET`";
    let (head, tail) = header.split_colon().ok_or_else(|| header.err(header.text.trim_start(), shape))?;
    let name = check_block_name(header, head.get(1), "map")?;
    if head.len() != 2 {
        return Err(header.err(head[head.len() - 1], shape));
    }
    match tail.as_slice() {
        [src, "->", tgt] => Ok(RawMap { header: Line { no: header.no, text: header.text }, name, source: src, target: tgt, body }),
        _ => Err(Error::parse(header.no, header.text.find(':').map_or(1, |c| c + 2), shape)),
    }
}

fn resolve_checked(doc: &Document, line: &Line<'_>, reference: &str, local: Option<&Realization>) -> Result<Arc<FiniteSimplicialSet>> {
    let obj = resolve_object(doc, reference, local).map_err(|m| line.err(reference, m))?;
    let report = obj.validate();
    if !report.is_valid() {
        return Err(line.err(reference, format!("`{reference}` is not a valid simplicial set: {report}")));
    }
    Ok(obj)
}

fn resolve_object(doc: &Document, reference: &str, local: Option<&Realization>) -> std::result::Result<Arc<FiniteSimplicialSet>, String> {
    let nums = |inner: &str| -> std::result::Result<Vec<usize>, String> {
        inner.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| format!("`{x}` is not a number"))).collect()
    };
    if reference == "empty" {
        return Ok(Arc::new(FiniteSimplicialSet::empty()));
    }
    for (prefix, arity) in [("simplex(", 1), ("boundary(", 1), ("horn(", 2)] {
        if let Some(rest) = reference.strip_prefix(prefix) {
            let inner = rest.strip_suffix(')').ok_or_else(|| format!("missing `)` in `{reference}`"))?;
            let v = nums(inner)?;
            if v.len() != arity {
                return Err(format!("`{reference}` takes {arity} argument(s)"));
            }
            return match prefix {
                "simplex(" => Ok(Arc::new(simplex(v[0]))),
                "boundary(" => Ok(Arc::new(boundary(v[0]))),
                _ => horn(v[0], v[1]).map(Arc::new).map_err(|e| e.to_string()),
            };
        }
    }
    if let Some((pres, stage)) = reference.split_once('@') {
        let r = if pres.is_empty() {
            local.ok_or_else(|| format!("`{reference}` is only meaningful for attaching maps of a presentation"))?
        } else {
            doc.presentation(pres).ok_or_else(|| format!("unknown presentation `{pres}`"))?
        };
        let k = if stage == "end" { r.stages() } else { stage.parse::<usize>().map_err(|_| format!("`{stage}` is not a stage index"))? };
        return r.record.objects.get(k).cloned().ok_or_else(|| format!("stage {k} does not exist yet"));
    }
    doc.object(reference).cloned().ok_or_else(|| format!("unknown object `{reference}`"))
}

fn build_map(raw: &RawMap<'_>, source: Arc<FiniteSimplicialSet>, target: Arc<FiniteSimplicialSet>) -> Result<SimplicialMap> {
    let src_index = source.name_index();
    let tgt_index = target.name_index();
    let mut images: Vec<Vec<Option<SimplexRef>>> = source.levels().iter().map(|l| vec![None; l.len()]).collect();
    for line in &raw.body {
        let toks = line.tokens();
        let [from, "->", to] = toks.as_slice() else {
            return Err(line.err(line.text.trim_start(), "expected `<simplex> -> <image>`"));
        };
        let id = *src_index.get(from).ok_or_else(|| line.err(from, format!("unknown simplex `{from}` in {}", raw.source)))?;
        let r = parse_ref(to, |n| tgt_index.get(n).copied()).map_err(|m| line.err(to, m))?;
        if r.dim() != id.dim {
            return Err(line.err(to, format!("image of `{from}` must have dimension {}, found {}", id.dim, r.dim())));
        }
        if images[id.dim][id.index].replace(r).is_some() {
            return Err(line.err(from, format!("image of `{from}` given twice")));
        }
    }
    let mut full = Vec::with_capacity(images.len());
    for (d, level) in images.into_iter().enumerate() {
        let mut l = Vec::with_capacity(level.len());
        for (i, r) in level.into_iter().enumerate() {
            match r {
                Some(r) => l.push(r),
                None => {
                    let missing = source.name(SimplexId::new(d, i));
                    return Err(raw.header.err(raw.name, format!("map `{}` gives no image for `{missing}`", raw.name)));
                }
            }
        }
        full.push(l);
    }
    SimplicialMap::new(source, target, full).map_err(|e| raw.header.err(raw.name, format!("map `{}`: {e}", raw.name)))
}

fn parse_cellpres<'a>(doc: &Document, deferred: &HashMap<&str, RawMap<'_>>, header: &Line<'a>, fields: &[&'a str], body: &[Line<'_>]) -> Result<(&'a str, Realization)> {
    let mut base: Option<&str> = None;
    let mut stages: Option<(&str, usize)> = None;
    for &f in fields {
        match f.split_once('=') {
            Some(("base", v)) => base = Some(v),
            Some(("stages", v)) => stages = Some((f, v.parse::<usize>().map_err(|_| header.err(f, format!("`{v}` is not a stage count")))?)),
            _ => return Err(header.err(f, format!("unexpected `{f}`; expected `base=` or `stages=`"))),
        }
    }
    let base = base.ok_or_else(|| Error::parse(header.no, header.text.len() + 1, "presentation needs `base=<object>`"))?;
    let base_obj = resolve_checked(doc, header, base, None)?;

    struct Entry<'a> {
        line: &'a Line<'a>,
        stage: usize,
        generator: Generator,
        attach: &'a str,
    }
    let mut entries = Vec::new();
    for line in body {
        let mut kv: HashMap<&str, &str> = HashMap::new();
        for t in line.tokens() {
            let (k, v) = t.split_once('=').ok_or_else(|| line.err(t, format!("expected `key=value`, found `{t}`")))?;
            if kv.insert(k, v).is_some() {
                return Err(line.err(t, format!("`{k}` given twice")));
            }
        }
        let get = |k: &str| kv.get(k).copied().ok_or_else(|| line.err(line.text.trim_start(), format!("missing `{k}=`")));
        let num = |k: &str| -> Result<usize> {
            let v = get(k)?;
            v.parse().map_err(|_| line.err(v, format!("`{v}` is not a number")))
        };
        let stage = num("stage")?;
        let n = num("n")?;
        let gen = get("gen")?;
        let generator = match gen {
            "I" => {
                if let Some(k) = kv.get("k") {
                    return Err(line.err(k, "boundary cells take no `k=`"));
                }
                Generator::I { n }
            }
            "J" => Generator::J { n, k: num("k")? },
            other => return Err(line.err(other, format!("unknown generator set `{other}`"))),
        };
        let generator = generator.checked().map_err(|e| line.err(gen, e.to_string()))?;
        if let Some(extra) = kv.keys().find(|k| !["stage", "gen", "n", "k", "attach"].contains(k)) {
            return Err(line.err(extra, format!("unknown field `{extra}`")));
        }
        entries.push(Entry { line, stage, generator, attach: get("attach")? });
    }
    let max_stage = entries.iter().map(|e| e.stage).max().unwrap_or(0);
    let stage_count = match stages {
        Some((tok, m)) if m < max_stage => return Err(header.err(tok, format!("an attachment is at stage {max_stage} but stages={m}"))),
        Some((_, m)) => m,
        None => max_stage,
    };
    if let Some(e) = entries.iter().find(|e| e.stage == 0) {
        return Err(e.line.err(e.line.text.trim_start(), "stages are numbered from 1"));
    }

    let mut r = Realization::new(base_obj);
    for s in 1..=stage_count {
        let mut attachments = Vec::new();
        for e in entries.iter().filter(|e| e.stage == s) {
            let source = e.generator.source();
            let map = if let Some(raw) = deferred.get(e.attach) {
                let src = resolve_checked(doc, &raw.header, raw.source, Some(&r))?;
                if !same_object(&src, &source) {
                    return Err(raw.header.err(raw.source, format!("attaching map `{}` must start at the source of generator {}", raw.name, e.generator)));
                }
                let expected = format!("@{}", s - 1);
                if raw.target != expected {
                    return Err(raw.header.err(raw.target, format!("attaching map for stage {s} must land in `{expected}`")));
                }
                build_map(raw, source.clone(), r.current().clone())?
            } else if let Some(m) = doc.map(e.attach) {
                if !same_object(m.source(), &source) || !same_object(m.target(), r.current()) {
                    return Err(e.line.err(e.attach, format!("map `{}` does not go from the generator's source to stage {}", e.attach, s - 1)));
                }
                m.with_source(source.clone())?.with_target(r.current().clone())?
            } else {
                return Err(e.line.err(e.attach, format!("unknown map `{}`", e.attach)));
            };
            attachments.push(Attachment::new(e.generator, map).map_err(|err| e.line.err(e.attach, err.to_string()))?);
        }
        let first = entries.iter().find(|e| e.stage == s).map(|e| e.line);
        r.attach_stage(attachments).map_err(|err| match first {
            Some(l) => l.err(l.text.trim_start(), err.to_string()),
            None => header.err(header.text.trim_start(), err.to_string()),
        })?;
    }
    Ok((base, r))
}

/// `empty`, `simplex(n)`, `boundary(n)` or `horn(n,k)` when `s` is that object
/// with its standard names.
pub fn standard_ref(s: &FiniteSimplicialSet) -> Option<String> {
    if s.is_empty() {
        return Some("empty".into());
    }
    let d = s.dim()?;
    let same = |t: &FiniteSimplicialSet| t.levels() == s.levels();
    if same(&simplex(d)) {
        return Some(format!("simplex({d})"));
    }
    if same(&boundary(d + 1)) {
        return Some(format!("boundary({})", d + 1));
    }
    (0..=d + 1).find(|&k| horn(d + 1, k).is_ok_and(|h| same(&h))).map(|k| format!("horn({},{k})", d + 1))
}

pub fn print_sset(name: &str, s: &FiniteSimplicialSet) -> String {
    let mut out = format!("sset/1 {name}\n");
    for (d, level) in s.levels().iter().enumerate() {
        let names: Vec<&str> = level.iter().map(|x| x.name.as_str()).collect();
        let _ = writeln!(out, "dim {d}:{}{}", if names.is_empty() { "" } else { " " }, names.join(" "));
    }
    for id in s.ids().filter(|id| id.dim > 0) {
        let faces: Vec<String> = s.simplex(id).faces.iter().map(|f| s.ref_name(f)).collect();
        let _ = writeln!(out, "face {}: {}", s.name(id), faces.join(" "));
    }
    out.push_str("end\n");
    out
}

pub fn print_map(name: &str, source: &str, target: &str, m: &SimplicialMap) -> String {
    let mut out = format!("map {name} : {source} -> {target}\n");
    for (from, to) in m.describe() {
        let _ = writeln!(out, "{from} -> {to}");
    }
    out.push_str("end\n");
    out
}

fn generator_ref(g: Generator) -> String {
    match g {
        Generator::I { n } => format!("boundary({n})"),
        Generator::J { n, k } => format!("horn({n},{k})"),
    }
}

/// Attaching maps (named `NAME.<stage>.<index>`) followed by the `cellpres/1` block.
pub fn print_presentation(name: &str, p: &CellPresentation, base: &str) -> String {
    let mut out = String::new();
    let mut lines = String::new();
    for (s, stage) in p.stages.iter().enumerate() {
        for (t, a) in stage.iter().enumerate() {
            let map_name = format!("{name}.{}.{t}", s + 1);
            out.push_str(&print_map(&map_name, &generator_ref(a.generator), &format!("@{s}"), &a.attaching_map));
            out.push('\n');
            let gen = match a.generator {
                Generator::I { n } => format!("gen=I n={n}"),
                Generator::J { n, k } => format!("gen=J n={n} k={k}"),
            };
            let _ = writeln!(lines, "stage={} {gen} attach={map_name}", s + 1);
        }
    }
    let _ = writeln!(out, "cellpres/1 {name} base={base} stages={}", p.stages.len());
    out.push_str(&lines);
    out.push_str("end\n");
    out
}

/// Header fields of a `soa/1` report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoaHeader {
    pub mode: Mode,
    pub generators: GeneratorSet,
    pub cap: usize,
    pub budget: usize,
    pub stages_run: usize,
    pub residual: usize,
}

impl SoaHeader {
    pub fn of(r: &FactorizationResult) -> Self {
        Self { mode: r.mode, generators: r.generators, cap: r.cap, budget: r.budget, stages_run: r.stages_run, residual: r.residual.len() }
    }
}

/// Report for a factorization: the header, any named objects needed by the
/// references, the presentation of `X -> W` (named `name`) and `W -> Y` as `map right`.
pub fn print_soa(r: &FactorizationResult, objects: &[(String, Arc<FiniteSimplicialSet>)], source: &str, target: &str, name: &str) -> String {
    let h = SoaHeader::of(r);
    let mut out = format!(
        "soa/1 mode={} generators={} N={} budget={} stages_run={} residual={}\n\n",
        h.mode, h.generators, h.cap, h.budget, h.stages_run, h.residual
    );
    for (n, o) in objects {
        out.push_str(&print_sset(n, o));
        out.push('\n');
    }
    out.push_str(&print_presentation(name, &r.realization.presentation, source));
    out.push('\n');
    out.push_str(&print_map("right", &format!("{name}@end"), target, &r.right));
    out
}

pub fn parse_soa(text: &str) -> Result<(SoaHeader, Document)> {
    let first = text.lines().next().unwrap_or("");
    let line = Line { no: 1, text: first };
    let toks = line.tokens();
    if toks.first() != Some(&"soa/1") {
        return Err(Error::parse(1, 1, "expected `soa/1` header"));
    }
    let mut kv = HashMap::new();
    for t in &toks[1..] {
        let (k, v) = t.split_once('=').ok_or_else(|| line.err(t, format!("expected `key=value`, found `{t}`")))?;
        kv.insert(k, (*t, v));
    }
    let field = |k: &str| kv.get(k).copied().ok_or_else(|| Error::parse(1, first.len() + 1, format!("missing `{k}=`")));
    let num = |k: &str| -> Result<usize> {
        let (t, v) = field(k)?;
        v.parse().map_err(|_| line.err(t, format!("`{v}` is not a number")))
    };
    let mode = match field("mode")? {
        (_, "faithful") => Mode::Faithful,
        (_, "reduced") => Mode::Reduced,
        (t, v) => return Err(line.err(t, format!("unknown mode `{v}`"))),
    };
    let generators = match field("generators")? {
        (_, "I") => GeneratorSet::I,
        (_, "J") => GeneratorSet::J,
        (t, v) => return Err(line.err(t, format!("unknown generator set `{v}`"))),
    };
    let header = SoaHeader { mode, generators, cap: num("N")?, budget: num("budget")?, stages_run: num("stages_run")?, residual: num("residual")? };
    // Blank out the header so line numbers in the body stay accurate.
    let rest = text.split_once('\n').map_or("", |(_, r)| r);
    let doc = parse_document(&format!("\n{rest}"))?;
    Ok((header, doc))
}
