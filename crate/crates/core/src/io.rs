//! Line-oriented text formats and DOT export.
//!
//! All formats are UTF-8 with `#` comments. Tokens are separated by
//! whitespace, except that a token opening with `(` runs to its
//! balancing parenthesis (tree-shaped generator names contain spaces).
//! Serialization is canonical: sections in a fixed order, entries
//! sorted, so parse ∘ serialize is the identity on parsed data and
//! identical inputs produce identical bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::constructions::{GenGraph, GlobularPresentation};
use crate::kernel::{ElementRef, GenCatPresentation, KernelError, Mode, PresentationBuilder};
use crate::symbol::Symbol;
use crate::transform::{FunctorMap, RawPair, Transformation, Variance};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("{file}:{line}: {message}")]
    Syntax {
        file: String,
        line: usize,
        message: String,
    },
    #[error("{file}: {source}")]
    Invalid {
        file: String,
        #[source]
        source: KernelError,
    },
    #[error("cannot read `{0}`: {1}")]
    Io(PathBuf, String),
    #[error("unsupported file extension for `{0}`")]
    UnknownExtension(PathBuf),
}

fn syntax(file: &str, line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        file: file.to_owned(),
        line,
        message: message.into(),
    }
}

/// Splits a line into tokens, keeping parenthesized names whole.
fn tokenize(file: &str, lineno: usize, line: &str) -> Result<Vec<String>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = line.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        if chars[i].is_whitespace() {
            i += 1;
            continue;
        }
        if chars[i] == '#' {
            break;
        }
        let start = i;
        if chars[i] == '(' {
            let mut depth = 0;
            while i < chars.len() {
                match chars[i] {
                    '(' => depth += 1,
                    ')' => {
                        depth -= 1;
                        if depth == 0 {
                            i += 1;
                            break;
                        }
                    }
                    _ => {}
                }
                i += 1;
            }
            if depth != 0 {
                return Err(syntax(file, lineno, "unbalanced parenthesis"));
            }
        } else {
            while i < chars.len() && !chars[i].is_whitespace() && chars[i] != '#' {
                i += 1;
            }
        }
        out.push(chars[start..i].iter().collect());
    }
    Ok(out)
}

/// Parses an element expression: a generator name or nested `idof(...)`.
pub fn parse_element(expr: &str) -> ElementRef {
    let mut level = 0;
    let mut rest = expr;
    while let Some(inner) = rest.strip_prefix("idof(").and_then(|r| r.strip_suffix(')')) {
        level += 1;
        rest = inner;
    }
    ElementRef::new(rest, level)
}

/// Renders an element in the `idof` expression form used by the formats.
pub fn element_expr(e: &ElementRef) -> String {
    e.to_string()
}

fn parse_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
}

/// Parses the `.gcat` presentation format.
pub fn parse_gcat(file: &str, text: &str) -> Result<GenCatPresentation, ParseError> {
    let mut name: Option<Symbol> = None;
    let mut mode = Mode::Strict;
    let mut idbound: Option<u32> = None;
    let mut objects: Vec<Symbol> = vec![];
    let mut arrows: Vec<(Symbol, Symbol, Symbol)> = vec![];
    let mut orders: Vec<(Symbol, Symbol)> = vec![];
    let mut comps: Vec<(Symbol, Symbol, ElementRef)> = vec![];
    let mut coerce_l: Vec<(Symbol, Symbol, ElementRef)> = vec![];
    let mut coerce_r: Vec<(Symbol, Symbol, ElementRef)> = vec![];
    let mut truncs: Vec<(Symbol, Symbol)> = vec![];

    for (lineno, raw) in parse_lines(text) {
        let toks = tokenize(file, lineno, raw)?;
        let t: Vec<&str> = toks.iter().map(|s| s.as_str()).collect();
        match t.as_slice() {
            ["gencat", n] => name = Some(Symbol::new(*n)),
            ["mode", "strict"] => mode = Mode::Strict,
            ["mode", "lax"] => mode = Mode::Lax,
            ["mode", other] => return Err(syntax(file, lineno, format!("unknown mode `{other}`"))),
            ["idbound", h] => {
                idbound = Some(h.parse().map_err(|_| {
                    syntax(file, lineno, format!("idbound expects an integer, got `{h}`"))
                })?)
            }
            ["object", o] => {
                check_name(file, lineno, o)?;
                objects.push(Symbol::new(*o));
            }
            ["arrow", f, ":", x, "->", y] => {
                check_name(file, lineno, f)?;
                arrows.push((Symbol::new(*f), Symbol::new(*x), Symbol::new(*y)));
            }
            ["order", a, "<=", b] => orders.push((Symbol::new(*a), Symbol::new(*b))),
            ["comp", g, ".", f, "=", h] => {
                comps.push((Symbol::new(*g), Symbol::new(*f), parse_element(h)))
            }
            ["coerce", lhs, ".", f, "=", h] if lhs.starts_with("idof(") => {
                let base = parse_element(lhs);
                if base.level != 1 {
                    return Err(syntax(file, lineno, "coerce expects idof(<generator>)"));
                }
                coerce_l.push((base.generator, Symbol::new(*f), parse_element(h)));
            }
            ["coerce", f, ".", rhs, "=", h] if rhs.starts_with("idof(") => {
                let base = parse_element(rhs);
                if base.level != 1 {
                    return Err(syntax(file, lineno, "coerce expects idof(<generator>)"));
                }
                coerce_r.push((Symbol::new(*f), base.generator, parse_element(h)));
            }
            ["trunc", g, ".", f] => truncs.push((Symbol::new(*g), Symbol::new(*f))),
            _ => {
                return Err(syntax(
                    file,
                    lineno,
                    format!("unrecognized directive `{}`", raw.trim()),
                ))
            }
        }
    }

    let name = name.ok_or_else(|| syntax(file, 1, "missing `gencat NAME` header"))?;
    let mut b = PresentationBuilder::new(name).mode(mode);
    if let Some(h) = idbound {
        b = b.identity_bound(h);
    }
    for o in objects {
        b = b.object(o.as_str());
    }
    for (f, x, y) in arrows {
        b = b.arrow(f.as_str(), x.as_str(), y.as_str());
    }
    for (a, c) in orders {
        b = b.order(a.as_str(), c.as_str());
    }
    for (g, f, h) in comps {
        b = b.comp_elem(g.as_str(), f.as_str(), h);
    }
    for (x, f, h) in coerce_l {
        b = b.coerce_left(x.as_str(), f.as_str(), h);
    }
    for (f, x, h) in coerce_r {
        b = b.coerce_right(f.as_str(), x.as_str(), h);
    }
    for (g, f) in truncs {
        b = b.truncated_pair(g.as_str(), f.as_str());
    }
    b.build().map_err(|source| ParseError::Invalid {
        file: file.to_owned(),
        source,
    })
}

fn check_name(file: &str, lineno: usize, name: &str) -> Result<(), ParseError> {
    if name.starts_with("idof(") {
        return Err(syntax(
            file,
            lineno,
            format!("generator name `{name}` would shadow idof expressions"),
        ));
    }
    Ok(())
}

/// Canonical `.gcat` serialization.
pub fn serialize_gcat(p: &GenCatPresentation) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "gencat {}", p.name());
    let _ = writeln!(
        out,
        "mode {}",
        match p.mode() {
            Mode::Strict => "strict",
            Mode::Lax => "lax",
        }
    );
    let _ = writeln!(out, "idbound {}", p.identity_bound());
    for g in p.generators() {
        if p.is_object_generator(g) {
            let _ = writeln!(out, "object {g}");
        }
    }
    for g in p.generators() {
        if !p.is_object_generator(g) {
            let _ = writeln!(
                out,
                "arrow {g} : {} -> {}",
                p.declared_src(g).unwrap(),
                p.declared_tgt(g).unwrap()
            );
        }
    }
    for (a, b) in p.declared_order() {
        let _ = writeln!(out, "order {a} <= {b}");
    }
    for ((g, f), h) in p.comp_table() {
        let _ = writeln!(out, "comp {g} . {f} = {}", element_expr(h));
    }
    for ((x, f), h) in p.coerce_left_table() {
        let _ = writeln!(out, "coerce idof({x}) . {f} = {}", element_expr(h));
    }
    for ((f, x), h) in p.coerce_right_table() {
        let _ = writeln!(out, "coerce {f} . idof({x}) = {}", element_expr(h));
    }
    for (g, f) in p.truncated_pairs() {
        let _ = writeln!(out, "trunc {g} . {f}");
    }
    out
}

/// Parses the `.ggraph` generalized-graph format.
pub fn parse_ggraph(file: &str, text: &str) -> Result<GenGraph, ParseError> {
    let mut name = Symbol::new(
        Path::new(file)
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "graph".to_owned()),
    );
    let mut edges: Vec<Symbol> = Vec::new();
    let mut src: BTreeMap<Symbol, Symbol> = BTreeMap::new();
    let mut tgt: BTreeMap<Symbol, Symbol> = BTreeMap::new();
    for (lineno, raw) in parse_lines(text) {
        let toks = tokenize(file, lineno, raw)?;
        let t: Vec<&str> = toks.iter().map(|s| s.as_str()).collect();
        match t.as_slice() {
            ["gengraph", n] => name = Symbol::new(*n),
            ["edge", e] => edges.push(Symbol::new(*e)),
            ["src", e, "=", f] => {
                src.insert(Symbol::new(*e), Symbol::new(*f));
            }
            ["tgt", e, "=", f] => {
                tgt.insert(Symbol::new(*e), Symbol::new(*f));
            }
            _ => {
                return Err(syntax(
                    file,
                    lineno,
                    format!("unrecognized directive `{}`", raw.trim()),
                ))
            }
        }
    }
    let mut g = GenGraph::new(name);
    for e in edges {
        let s = src
            .get(&e)
            .ok_or_else(|| syntax(file, 1, format!("edge `{e}` has no src")))?
            .clone();
        let t = tgt
            .get(&e)
            .ok_or_else(|| syntax(file, 1, format!("edge `{e}` has no tgt")))?
            .clone();
        g = g.edge(e.as_str(), s.as_str(), t.as_str());
    }
    Ok(g)
}

pub fn serialize_ggraph(g: &GenGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "gengraph {}", g.name);
    for e in &g.edges {
        let _ = writeln!(out, "edge {e}");
    }
    for e in &g.edges {
        let _ = writeln!(out, "src {e} = {}", g.src[e]);
    }
    for e in &g.edges {
        let _ = writeln!(out, "tgt {e} = {}", g.tgt[e]);
    }
    out
}

/// Parses the `.glob` globular-set format.
pub fn parse_glob(file: &str, text: &str) -> Result<GlobularPresentation, ParseError> {
    let mut g = GlobularPresentation::new(
        Path::new(file)
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "glob".to_owned()),
    );
    for (lineno, raw) in parse_lines(text) {
        let toks = tokenize(file, lineno, raw)?;
        let t: Vec<&str> = toks.iter().map(|s| s.as_str()).collect();
        match t.as_slice() {
            ["globular", n] => g.name = Symbol::new(*n),
            ["cell", n, c] => {
                let dim: u32 = n.parse().map_err(|_| {
                    syntax(file, lineno, format!("cell expects a dimension, got `{n}`"))
                })?;
                g = g.cell(dim, *c);
            }
            ["sigma", c, "=", v] => {
                g.sigma.insert(Symbol::new(*c), Symbol::new(*v));
            }
            ["tau", c, "=", v] => {
                g.tau.insert(Symbol::new(*c), Symbol::new(*v));
            }
            _ => {
                return Err(syntax(
                    file,
                    lineno,
                    format!("unrecognized directive `{}`", raw.trim()),
                ))
            }
        }
    }
    Ok(g)
}

pub fn serialize_glob(g: &GlobularPresentation) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "globular {}", g.name);
    for (dim, cells) in &g.cells {
        for c in cells {
            let _ = writeln!(out, "cell {dim} {c}");
        }
    }
    for (c, v) in &g.sigma {
        let _ = writeln!(out, "sigma {c} = {v}");
    }
    for (c, v) in &g.tau {
        let _ = writeln!(out, "tau {c} = {v}");
    }
    out
}

/// Parses the `.gfun` functor format.
pub fn parse_gfun(file: &str, text: &str) -> Result<FunctorMap, ParseError> {
    let mut header: Option<(Symbol, Symbol, Symbol)> = None;
    let mut variance = Variance::Covariant;
    let mut cellular = false;
    let mut entries: Vec<(Symbol, ElementRef)> = Vec::new();
    for (lineno, raw) in parse_lines(text) {
        let toks = tokenize(file, lineno, raw)?;
        let t: Vec<&str> = toks.iter().map(|s| s.as_str()).collect();
        match t.as_slice() {
            ["functor", f, ":", c, "->", d] => {
                header = Some((Symbol::new(*f), Symbol::new(*c), Symbol::new(*d)))
            }
            ["variance", "co"] => variance = Variance::Covariant,
            ["variance", "contra"] => variance = Variance::Contravariant,
            ["variance", "upto-objects"] => variance = Variance::UpToObjects,
            ["variance", other] => {
                return Err(syntax(file, lineno, format!("unknown variance `{other}`")))
            }
            ["cellular"] => cellular = true,
            ["map", a, "=", x] => entries.push((Symbol::new(*a), parse_element(x))),
            _ => {
                return Err(syntax(
                    file,
                    lineno,
                    format!("unrecognized directive `{}`", raw.trim()),
                ))
            }
        }
    }
    let (name, dom, cod) =
        header.ok_or_else(|| syntax(file, 1, "missing `functor F : C -> D` header"))?;
    let mut f = FunctorMap::new(name, dom, cod, variance);
    f.cellular_morphism_flag = cellular;
    for (a, x) in entries {
        f.insert(a, x);
    }
    Ok(f)
}

pub fn serialize_gfun(f: &FunctorMap) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "functor {} : {} -> {}", f.name, f.dom, f.cod);
    let _ = writeln!(
        out,
        "variance {}",
        match f.variance {
            Variance::Covariant => "co",
            Variance::Contravariant => "contra",
            Variance::UpToObjects => "upto-objects",
        }
    );
    if f.cellular_morphism_flag {
        let _ = writeln!(out, "cellular");
    }
    for (a, x) in f.entries() {
        let _ = writeln!(out, "map {a} = {}", element_expr(x));
    }
    out
}

/// Parses the `.gnat` transformation format (θ-form or raw pair).
pub fn parse_gnat(file: &str, text: &str) -> Result<Transformation, ParseError> {
    let mut header: Option<(Symbol, Symbol, Symbol)> = None;
    let mut theta: Vec<(Symbol, ElementRef)> = Vec::new();
    let mut pair = false;
    let mut theta1: BTreeMap<Symbol, ElementRef> = BTreeMap::new();
    let mut theta2: BTreeMap<Symbol, ElementRef> = BTreeMap::new();
    for (lineno, raw) in parse_lines(text) {
        let toks = tokenize(file, lineno, raw)?;
        let t: Vec<&str> = toks.iter().map(|s| s.as_str()).collect();
        match t.as_slice() {
            ["natural", n, ":", f, "=>", g] => {
                header = Some((Symbol::new(*n), Symbol::new(*f), Symbol::new(*g)))
            }
            ["at", a, "=", x] => theta.push((Symbol::new(*a), parse_element(x))),
            ["pair"] => pair = true,
            ["theta1", a, "=", x] => {
                theta1.insert(Symbol::new(*a), parse_element(x));
            }
            ["theta2", a, "=", x] => {
                theta2.insert(Symbol::new(*a), parse_element(x));
            }
            _ => {
                return Err(syntax(
                    file,
                    lineno,
                    format!("unrecognized directive `{}`", raw.trim()),
                ))
            }
        }
    }
    let (name, f, g) =
        header.ok_or_else(|| syntax(file, 1, "missing `natural t : F => G` header"))?;
    let mut t = Transformation::new(name, f, g);
    for (a, x) in theta {
        t.theta.insert(a, x);
    }
    if pair || !theta1.is_empty() || !theta2.is_empty() {
        t.raw_pair = Some(RawPair { theta1, theta2 });
    }
    Ok(t)
}

pub fn serialize_gnat(t: &Transformation) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "natural {} : {} => {}",
        t.name, t.source_functor, t.target_functor
    );
    for (a, x) in &t.theta {
        let _ = writeln!(out, "at {a} = {}", element_expr(x));
    }
    if let Some(pair) = &t.raw_pair {
        let _ = writeln!(out, "pair");
        for (a, x) in &pair.theta1 {
            let _ = writeln!(out, "theta1 {a} = {}", element_expr(x));
        }
        for (a, x) in &pair.theta2 {
            let _ = writeln!(out, "theta2 {a} = {}", element_expr(x));
        }
    }
    out
}

/// Component references of an adjunction bundle (`.gadj`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjunctionFile {
    pub name: Symbol,
    pub left: Symbol,
    pub right: Symbol,
    pub unit: Symbol,
    pub counit: Symbol,
}

pub fn parse_gadj(file: &str, text: &str) -> Result<AdjunctionFile, ParseError> {
    let mut name = None;
    let mut left = None;
    let mut right = None;
    let mut unit = None;
    let mut counit = None;
    for (lineno, raw) in parse_lines(text) {
        let toks = tokenize(file, lineno, raw)?;
        let t: Vec<&str> = toks.iter().map(|s| s.as_str()).collect();
        match t.as_slice() {
            ["adjunction", n] => name = Some(Symbol::new(*n)),
            ["left", f] => left = Some(Symbol::new(*f)),
            ["right", g] => right = Some(Symbol::new(*g)),
            ["unit", u] => unit = Some(Symbol::new(*u)),
            ["counit", e] => counit = Some(Symbol::new(*e)),
            _ => {
                return Err(syntax(
                    file,
                    lineno,
                    format!("unrecognized directive `{}`", raw.trim()),
                ))
            }
        }
    }
    let missing = |what: &str| syntax(file, 1, format!("missing `{what}` line"));
    Ok(AdjunctionFile {
        name: name.ok_or_else(|| missing("adjunction"))?,
        left: left.ok_or_else(|| missing("left"))?,
        right: right.ok_or_else(|| missing("right"))?,
        unit: unit.ok_or_else(|| missing("unit"))?,
        counit: counit.ok_or_else(|| missing("counit"))?,
    })
}

pub fn serialize_gadj(a: &AdjunctionFile) -> String {
    format!(
        "adjunction {}\nleft {}\nright {}\nunit {}\ncounit {}\n",
        a.name, a.left, a.right, a.unit, a.counit
    )
}

/// A `.gdiag` file: the index and base live in their own files, located
/// relative to the diagram file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramFile {
    pub name: Symbol,
    pub index_path: PathBuf,
    pub base_path: PathBuf,
}

pub fn parse_gdiag(file: &str, text: &str) -> Result<DiagramFile, ParseError> {
    let mut name = None;
    let mut index_path = None;
    let mut base_path = None;
    for (lineno, raw) in parse_lines(text) {
        let toks = tokenize(file, lineno, raw)?;
        let t: Vec<&str> = toks.iter().map(|s| s.as_str()).collect();
        match t.as_slice() {
            ["diagram", n] => name = Some(Symbol::new(*n)),
            ["index", p] => index_path = Some(PathBuf::from(*p)),
            ["base", p] => base_path = Some(PathBuf::from(*p)),
            _ => {
                return Err(syntax(
                    file,
                    lineno,
                    format!("unrecognized directive `{}`", raw.trim()),
                ))
            }
        }
    }
    let missing = |what: &str| syntax(file, 1, format!("missing `{what}` line"));
    Ok(DiagramFile {
        name: name.ok_or_else(|| missing("diagram"))?,
        index_path: index_path.ok_or_else(|| missing("index"))?,
        base_path: base_path.ok_or_else(|| missing("base"))?,
    })
}

/// Everything loaded from a set of input files, keyed by declared name.
#[derive(Debug, Clone, Default)]
pub struct Registry {
    pub presentations: BTreeMap<Symbol, GenCatPresentation>,
    pub graphs: BTreeMap<Symbol, GenGraph>,
    pub globs: BTreeMap<Symbol, GlobularPresentation>,
    pub functors: BTreeMap<Symbol, FunctorMap>,
    pub transformations: BTreeMap<Symbol, Transformation>,
    pub adjunctions: BTreeMap<Symbol, AdjunctionFile>,
    pub diagrams: BTreeMap<Symbol, DiagramFile>,
}

impl Registry {
    pub fn load_file(&mut self, path: &Path) -> Result<(), ParseError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ParseError::Io(path.to_owned(), e.to_string()))?;
        let file = path.to_string_lossy().into_owned();
        match path.extension().and_then(|e| e.to_str()) {
            Some("gcat") => {
                let p = parse_gcat(&file, &text)?;
                self.presentations.insert(p.name().clone(), p);
            }
            Some("ggraph") => {
                let g = parse_ggraph(&file, &text)?;
                self.graphs.insert(g.name.clone(), g);
            }
            Some("glob") => {
                let g = parse_glob(&file, &text)?;
                self.globs.insert(g.name.clone(), g);
            }
            Some("gfun") => {
                let f = parse_gfun(&file, &text)?;
                self.functors.insert(f.name.clone(), f);
            }
            Some("gnat") => {
                let t = parse_gnat(&file, &text)?;
                self.transformations.insert(t.name.clone(), t);
            }
            Some("gadj") => {
                let a = parse_gadj(&file, &text)?;
                self.adjunctions.insert(a.name.clone(), a);
            }
            Some("gdiag") => {
                let d = parse_gdiag(&file, &text)?;
                // Index and base paths resolve relative to the diagram.
                let dir = path.parent().unwrap_or_else(|| Path::new("."));
                self.load_file(&dir.join(&d.index_path))?;
                self.load_file(&dir.join(&d.base_path))?;
                self.diagrams.insert(d.name.clone(), d);
            }
            _ => return Err(ParseError::UnknownExtension(path.to_owned())),
        }
        Ok(())
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT export of a presentation: one node per generator (objects
/// double-circled, their self-loops suppressed), one edge per non-object
/// generator from its source to its target, declared order pairs
/// dashed. Node order is stable.
pub fn export_dot(p: &GenCatPresentation) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", dot_escape(p.name().as_str()));
    for g in p.generators() {
        let shape = if p.is_object_generator(g) {
            " [shape=doublecircle]"
        } else {
            ""
        };
        let _ = writeln!(out, "  \"{}\"{shape};", dot_escape(g.as_str()));
    }
    for g in p.generators() {
        if p.is_object_generator(g) {
            continue;
        }
        let _ = writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{}\"];",
            dot_escape(p.declared_src(g).unwrap().as_str()),
            dot_escape(p.declared_tgt(g).unwrap().as_str()),
            dot_escape(g.as_str()),
        );
    }
    for (a, b) in p.declared_order() {
        let _ = writeln!(
            out,
            "  \"{}\" -> \"{}\" [style=dashed, arrowhead=open];",
            dot_escape(a.as_str()),
            dot_escape(b.as_str()),
        );
    }
    let _ = writeln!(out, "}}");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn gcat_roundtrip_is_canonical() {
        for p in fixtures::passing_fixtures() {
            let text = serialize_gcat(&p);
            let parsed = parse_gcat("mem.gcat", &text).unwrap();
            assert_eq!(&parsed, &p, "round trip changed {}", p.name());
            assert_eq!(serialize_gcat(&parsed), text);
        }
    }

    #[test]
    fn gcat_parses_t1_text() {
        let text = "# simplest non-category\ngencat T1\nobject a\narrow b : a -> b\n";
        let p = parse_gcat("t1.gcat", text).unwrap();
        assert_eq!(p, fixtures::t1());
    }

    #[test]
    fn gcat_parses_empty_presentation() {
        let p = parse_gcat("empty.gcat", "gencat Empty\n").unwrap();
        assert_eq!(p.elements().len(), 0);
    }

    #[test]
    fn gcat_undeclared_reference_names_symbol() {
        let text = "gencat X\nobject a\narrow b : a -> a\ncomp b . b = c\n";
        match parse_gcat("x.gcat", text) {
            Err(ParseError::Invalid { source, .. }) => {
                assert_eq!(source, KernelError::UnknownGenerator(Symbol::new("c")));
            }
            other => panic!("expected invalid, got {other:?}"),
        }
    }

    #[test]
    fn gcat_syntax_error_carries_line() {
        let text = "gencat X\nobject a\nnonsense here\n";
        match parse_gcat("x.gcat", text) {
            Err(ParseError::Syntax { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn element_expr_roundtrip() {
        for expr in ["a", "idof(a)", "idof(idof(long_name))"] {
            assert_eq!(element_expr(&parse_element(expr)), expr);
        }
    }

    #[test]
    fn tokenizer_keeps_tree_names_whole() {
        let toks = tokenize("t", 1, "arrow (m (y) (x)) : (x) -> (y)").unwrap();
        assert_eq!(toks[1], "(m (y) (x))");
        assert_eq!(toks.len(), 6);
    }

    #[test]
    fn dot_export_is_stable_and_marks_objects() {
        let dot1 = export_dot(&fixtures::p2());
        let dot2 = export_dot(&fixtures::p2());
        assert_eq!(dot1, dot2);
        assert!(dot1.contains("doublecircle"));
        assert!(dot1.contains("\"x\" -> \"y\" [label=\"m\"]"));
    }
}
