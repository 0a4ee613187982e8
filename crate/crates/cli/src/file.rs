//! The line-oriented presentation format:
//!
//! ```text
//! name ym2
//! field Q
//! generators 2
//! degree 3
//! rel [0,1,1]:1 [1,0,1]:-2 [1,1,0]:1
//! ```
//!
//! or a single `family <kind> key=value ...` line in place of the `rel`
//! lines. Blank lines and lines starting with `#` are ignored.

use std::fmt;
use std::str::FromStr;

use koszul::exactla::{sparse, Coeff, Field, FieldSpec};
use koszul::families::{self, parse_matrix, FamilyKind, FamilySpec};
use koszul::homalg::Presentation;
use koszul::tensorspace::{word_index, Word};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub word: Vec<usize>,
    pub coeff: Coeff,
}

/// A family line: the kind and its parameters, sorted by key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyLine {
    pub kind: FamilyKind,
    pub params: Vec<(String, String)>,
}

const FAMILY_KEYS: [&str; 6] = ["B", "alpha", "eps", "metric", "s", "zeta"];

impl FamilyLine {
    pub fn new(kind: FamilyKind, params: Vec<(String, String)>) -> Result<Self, String> {
        let mut params: Vec<(String, String)> = params
            .into_iter()
            .map(|(k, v)| (if k == "b" { "B".to_string() } else { k }, v))
            .collect();
        params.sort();
        for w in params.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(format!("duplicate parameter {}", w[0].0));
            }
        }
        if let Some((k, _)) = params.iter().find(|(k, _)| !FAMILY_KEYS.contains(&k.as_str())) {
            return Err(format!("unknown parameter {k:?}"));
        }
        let line = FamilyLine { kind, params };
        line.spec()?;
        Ok(line)
    }

    fn get(&self, key: &str) -> Option<&str> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn spec(&self) -> Result<FamilySpec, String> {
        let default_s = if self.kind.four_dimensional() { 3 } else { 2 };
        let s = match self.get("s") {
            Some(v) => v.parse::<usize>().map_err(|_| format!("bad s {v:?}"))?,
            None => default_s,
        };
        let mut spec = FamilySpec::new(self.kind, s);
        let g = spec.generators();
        let list = |v: &str| -> Result<Vec<Coeff>, String> {
            v.split(',')
                .map(|x| Coeff::from_str(x).map_err(|e| e.to_string()))
                .collect()
        };
        if let Some(v) = self.get("metric") {
            spec = spec.with_metric(parse_matrix(v, g).map_err(|e| e.to_string())?);
        }
        if let Some(v) = self.get("B") {
            spec = spec.with_b(parse_matrix(v, g).map_err(|e| e.to_string())?);
        }
        if let Some(v) = self.get("eps") {
            let eps = match v {
                "1" | "+1" | "+" => 1,
                "-1" | "-" => -1,
                _ => return Err(format!("eps must be ±1, got {v:?}")),
            };
            spec = spec.with_eps(eps);
        }
        if let Some(v) = self.get("zeta") {
            spec = spec.with_zeta(list(v)?);
        }
        if let Some(v) = self.get("alpha") {
            spec = spec.with_alpha(list(v)?);
        }
        spec.validate().map_err(|e| e.to_string())?;
        Ok(spec)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Body {
    Relations(Vec<Vec<Term>>),
    Family(FamilyLine),
}

#[derive(Clone, Debug, PartialEq)]
pub struct PresentationFile {
    pub name: Option<String>,
    pub field: Option<FieldSpec>,
    pub generators: Option<usize>,
    pub degree: Option<usize>,
    pub body: Body,
}

struct Cursor<'a> {
    line: usize,
    text: &'a str,
}

impl Cursor<'_> {
    fn err(&self, offset: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.text[..offset.min(self.text.len())].chars().count() + 1,
            message: message.into(),
        }
    }
}

/// Whitespace-separated tokens with their byte offsets.
fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &text[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out
}

fn parse_term(cur: &Cursor<'_>, offset: usize, tok: &str) -> Result<Term, ParseError> {
    let inner = tok
        .strip_prefix('[')
        .ok_or_else(|| cur.err(offset, format!("expected [word]:coeff, got {tok:?}")))?;
    let close = inner.find(']').ok_or_else(|| cur.err(offset, "unclosed word"))?;
    let letters = &inner[..close];
    let rest = &inner[close + 1..];
    let coeff_text = rest
        .strip_prefix(':')
        .ok_or_else(|| cur.err(offset + close + 2, "expected ':' after the word"))?;
    let mut word = Vec::new();
    if !letters.trim().is_empty() {
        let mut at = offset + 1;
        for part in letters.split(',') {
            let l = part
                .trim()
                .parse::<usize>()
                .map_err(|_| cur.err(at, format!("bad letter {:?}", part.trim())))?;
            word.push(l);
            at += part.len() + 1;
        }
    }
    let coeff = Coeff::from_str(coeff_text)
        .map_err(|_| cur.err(offset + close + 3, format!("malformed coefficient {coeff_text:?}")))?;
    Ok(Term { word, coeff })
}

fn header_value<T: FromStr>(cur: &Cursor<'_>, toks: &[(usize, &str)], what: &str) -> Result<T, ParseError> {
    match toks {
        [_, (off, v)] => v.parse().map_err(|_| cur.err(*off, format!("bad {what} {v:?}"))),
        [(off, _)] => Err(cur.err(*off, format!("missing {what}"))),
        [_, _, (off, _), ..] => Err(cur.err(*off, "unexpected trailing text")),
        [] => unreachable!("blank lines are skipped"),
    }
}

pub fn parse_presentation(text: &str) -> Result<PresentationFile, ParseError> {
    let mut name = None;
    let mut field = None;
    let mut generators: Option<(usize, usize)> = None;
    let mut degree: Option<(usize, usize)> = None;
    let mut relations: Vec<(usize, Vec<(usize, Term)>)> = Vec::new();
    let mut family: Option<FamilyLine> = None;
    for (i, raw) in text.lines().enumerate() {
        let cur = Cursor { line: i + 1, text: raw };
        let toks = tokens(raw);
        let Some(&(off0, keyword)) = toks.first() else { continue };
        if keyword.starts_with('#') {
            continue;
        }
        let once = |seen: bool| {
            if seen {
                Err(cur.err(off0, format!("duplicate {keyword} line")))
            } else {
                Ok(())
            }
        };
        match keyword {
            "name" => {
                once(name.is_some())?;
                name = Some(header_value::<String>(&cur, &toks, "name")?);
            }
            "field" => {
                once(field.is_some())?;
                let (off, v) = *toks.get(1).ok_or_else(|| cur.err(off0, "missing field tag"))?;
                if toks.len() > 2 {
                    return Err(cur.err(toks[2].0, "unexpected trailing text"));
                }
                field = Some(FieldSpec::from_str(v).map_err(|e| cur.err(off, e.to_string()))?);
            }
            "generators" => {
                once(generators.is_some())?;
                generators = Some((header_value(&cur, &toks, "generator count")?, cur.line));
            }
            "degree" => {
                once(degree.is_some())?;
                degree = Some((header_value(&cur, &toks, "degree")?, cur.line));
            }
            "rel" => {
                if family.is_some() {
                    return Err(cur.err(off0, "rel lines cannot follow a family line"));
                }
                let terms = toks[1..]
                    .iter()
                    .map(|&(off, t)| Ok((off, parse_term(&cur, off, t)?)))
                    .collect::<Result<Vec<_>, ParseError>>()?;
                if terms.is_empty() {
                    return Err(cur.err(off0 + 3, "empty relation"));
                }
                relations.push((cur.line, terms));
            }
            "family" => {
                once(family.is_some())?;
                if !relations.is_empty() {
                    return Err(cur.err(off0, "a family line replaces the rel lines"));
                }
                let &(koff, kind) = toks.get(1).ok_or_else(|| cur.err(off0, "missing family kind"))?;
                let kind = FamilyKind::from_str(kind).map_err(|e| cur.err(koff, e.to_string()))?;
                let mut params = Vec::new();
                for &(off, kv) in &toks[2..] {
                    let (k, v) = kv
                        .split_once('=')
                        .ok_or_else(|| cur.err(off, format!("expected key=value, got {kv:?}")))?;
                    params.push((k.to_string(), v.to_string()));
                }
                let line = FamilyLine::new(kind, params).map_err(|m| cur.err(koff, m))?;
                family = Some(line);
            }
            other => return Err(cur.err(off0, format!("unknown keyword {other:?}"))),
        }
    }
    let body = match family {
        Some(fam) => {
            let spec = fam.spec().expect("validated when parsed");
            let at = |l: usize, m: String| ParseError {
                line: l,
                column: 1,
                message: m,
            };
            if let Some((g, l)) = generators {
                if g != spec.generators() {
                    return Err(at(l, format!("{} has {} generators", fam.kind, spec.generators())));
                }
            }
            if let Some((n, l)) = degree {
                if n != fam.kind.relation_degree() {
                    return Err(at(
                        l,
                        format!("{} has relations of degree {}", fam.kind, fam.kind.relation_degree()),
                    ));
                }
            }
            Body::Family(fam)
        }
        None => {
            let missing = |what: &str| ParseError {
                line: text.lines().count().max(1),
                column: 1,
                message: format!("missing {what} line"),
            };
            let (g, _) = generators.ok_or_else(|| missing("generators"))?;
            let (n, _) = degree.ok_or_else(|| missing("degree"))?;
            if g == 0 || n == 0 {
                return Err(missing("positive generators and degree"));
            }
            let mut rels = Vec::with_capacity(relations.len());
            for (line, terms) in relations {
                let raw = text.lines().nth(line - 1).unwrap_or("");
                let cur = Cursor { line, text: raw };
                for (off, t) in &terms {
                    if t.word.len() != n {
                        return Err(cur.err(
                            *off,
                            format!("word of length {} in a degree-{n} presentation", t.word.len()),
                        ));
                    }
                    if let Some(k) = t.word.iter().position(|&l| l >= g) {
                        return Err(cur.err(
                            *off + 1,
                            format!("letter {} at position {k} is not below {g}", t.word[k]),
                        ));
                    }
                }
                rels.push(terms.into_iter().map(|(_, t)| t).collect());
            }
            Body::Relations(rels)
        }
    };
    Ok(PresentationFile {
        name,
        field,
        generators: generators.map(|x| x.0),
        degree: degree.map(|x| x.0),
        body,
    })
}

impl fmt::Display for PresentationFile {
    /// The canonical text, accepted back by [`parse_presentation`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = &self.name {
            writeln!(f, "name {n}")?;
        }
        if let Some(fs) = &self.field {
            writeln!(f, "field {fs}")?;
        }
        if let Some(g) = self.generators {
            writeln!(f, "generators {g}")?;
        }
        if let Some(n) = self.degree {
            writeln!(f, "degree {n}")?;
        }
        match &self.body {
            Body::Relations(rels) => {
                for r in rels {
                    write!(f, "rel")?;
                    for t in r {
                        let w: Vec<String> = t.word.iter().map(usize::to_string).collect();
                        write!(f, " [{}]:{}", w.join(","), t.coeff)?;
                    }
                    writeln!(f)?;
                }
            }
            Body::Family(fam) => {
                write!(f, "family {}", fam.kind)?;
                for (k, v) in &fam.params {
                    write!(f, " {k}={v}")?;
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

pub fn emit(file: &PresentationFile) -> String {
    file.to_string()
}

impl PresentationFile {
    pub fn from_family(line: FamilyLine) -> Self {
        PresentationFile {
            name: None,
            field: None,
            generators: None,
            degree: None,
            body: Body::Family(line),
        }
    }

    pub fn family_spec(&self) -> Option<FamilySpec> {
        match &self.body {
            Body::Family(fam) => Some(fam.spec().expect("validated when parsed")),
            Body::Relations(_) => None,
        }
    }

    /// The field named in the file, or the default for its contents.
    pub fn default_field(&self) -> FieldSpec {
        self.field.unwrap_or(match &self.body {
            Body::Family(fam) if fam.kind.needs_imaginary_unit() => FieldSpec::GaussianRationals,
            _ => FieldSpec::Rationals,
        })
    }

    pub fn generator_count(&self) -> usize {
        match (&self.body, self.generators) {
            (_, Some(g)) => g,
            (Body::Family(fam), None) => fam.spec().expect("validated when parsed").generators(),
            (Body::Relations(_), None) => 0,
        }
    }

    pub fn display_name(&self) -> String {
        match (&self.name, &self.body) {
            (Some(n), _) => n.clone(),
            (None, Body::Family(fam)) => fam.spec().expect("validated when parsed").to_string(),
            (None, Body::Relations(_)) => "presentation".into(),
        }
    }

    pub fn to_presentation<F: Field>(&self, field: &F) -> koszul::Result<Presentation<F>> {
        let p = match &self.body {
            Body::Family(fam) => {
                let spec = fam.spec().map_err(koszul::Error::InvalidParameter)?;
                families::make(field, &spec)?
            }
            Body::Relations(rels) => {
                let g = self.generators.unwrap_or(0);
                let n = self.degree.unwrap_or(0);
                let rows = rels
                    .iter()
                    .map(|r| {
                        let entries = r
                            .iter()
                            .map(|t| Ok((word_index(&Word::new(t.word.clone()), g)?, field.from_coeff(&t.coeff)?)))
                            .collect::<koszul::Result<Vec<_>>>()?;
                        Ok(sparse::collect(field, entries))
                    })
                    .collect::<koszul::Result<Vec<_>>>()?;
                Presentation::from_relations(self.display_name(), field.clone(), g, n, rows)?
            }
        };
        Ok(p.with_name(self.display_name()))
    }
}
