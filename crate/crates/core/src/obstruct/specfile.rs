//! Line-oriented surface description files.
//!
//! ```text
//! # comment
//! surface S
//! type torus
//! construction double_of_ribbon k=1
//! cover_pi1 triangle(2,3,7)
//! h2_cert rank=1 source="H_2 = Z"
//!
//! surface T
//! connected_sum S
//! summand unknotted_rp2 e=-2
//! ```
//!
//! A block starts at `surface <name>`. `construction` is `double_of_ribbon
//! k=<n>`, `two_knot` or `unknotted e=<n>`. `connected_sum` names earlier
//! blocks; `summand unknotted_rp2 e=±2` adds a projective plane. A block with a
//! construction and summands is the sum of both. `indecomposable
//! source="<citation>"` attaches a free-indecomposability certificate for the
//! cover group. `cover_pi1` takes a presentation `<...>`, `triangle(p,q,r)` or
//! `free_product(expr, ...)`.

use std::fmt;

use super::checks::IndecomposabilityCertificate;
use super::surface::{H2Certificate, RibbonDouble, SurfaceSpec, SurfaceType};
use crate::fpgroup::{free_product_all, Presentation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecError {
    /// 1-based.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for SpecError {}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, SpecError> {
    Err(SpecError {
        line,
        message: message.into(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecEntry {
    pub name: String,
    pub surface: SurfaceSpec,
    pub indecomposable: Option<IndecomposabilityCertificate>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpecFile {
    entries: Vec<SpecEntry>,
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<Self, SpecError> {
        let mut blocks: Vec<Block> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = strip_comment(raw).trim();
            if content.is_empty() {
                continue;
            }
            let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
            let rest = rest.trim();
            if keyword == "surface" {
                if rest.is_empty() || rest.contains(char::is_whitespace) {
                    return err(line, "expected `surface <name>`");
                }
                blocks.push(Block::new(rest, line));
                continue;
            }
            let Some(block) = blocks.last_mut() else {
                return err(line, format!("`{keyword}` before any `surface` line"));
            };
            block.field(keyword, rest, line)?;
        }
        let mut file = SpecFile::default();
        for b in blocks {
            if file.get(&b.name).is_some() {
                return err(b.line, format!("duplicate surface `{}`", b.name));
            }
            let entry = b.resolve(&file)?;
            file.entries.push(entry);
        }
        Ok(file)
    }

    pub fn entries(&self) -> &[SpecEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&SpecEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

fn strip_comment(line: &str) -> &str {
    let mut in_quote = false;
    for (i, c) in line.char_indices() {
        match c {
            '"' => in_quote = !in_quote,
            '#' if !in_quote => return &line[..i],
            _ => {}
        }
    }
    line
}

#[derive(Clone, Debug)]
enum Construction {
    Ribbon { k: usize },
    TwoKnot,
    Unknotted { e: i64 },
}

#[derive(Clone, Debug)]
struct Block {
    name: String,
    line: usize,
    surface_type: Option<SurfaceType>,
    construction: Option<(Construction, usize)>,
    cover: Option<Presentation>,
    cert: Option<H2Certificate>,
    indecomposable: Option<String>,
    summands: Vec<(i64, usize)>,
    sum_of: Vec<(String, usize)>,
}

impl Block {
    fn new(name: &str, line: usize) -> Self {
        Block {
            name: name.to_string(),
            line,
            surface_type: None,
            construction: None,
            cover: None,
            cert: None,
            indecomposable: None,
            summands: Vec::new(),
            sum_of: Vec::new(),
        }
    }

    fn field(&mut self, keyword: &str, rest: &str, line: usize) -> Result<(), SpecError> {
        match keyword {
            "type" => {
                set_once(&mut self.surface_type, parse_type(rest, line)?, "type", line)?;
            }
            "construction" => {
                let (kind, args) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                let pairs = key_values(args, line)?;
                let allowed: &[&str] = match kind {
                    "double_of_ribbon" => &["k"],
                    "unknotted" => &["e"],
                    _ => &[],
                };
                allow_keys(&pairs, allowed, line)?;
                let c = match kind {
                    "double_of_ribbon" => Construction::Ribbon {
                        k: parse_num(required(&pairs, "k", line)?, "k", line)?,
                    },
                    "two_knot" => Construction::TwoKnot,
                    "unknotted" => Construction::Unknotted {
                        e: parse_num(required(&pairs, "e", line)?, "e", line)?,
                    },
                    other => return err(line, format!("unknown construction `{other}`")),
                };
                set_once(&mut self.construction, (c, line), "construction", line)?;
            }
            "cover_pi1" => {
                let p = parse_group(rest).map_err(|m| SpecError { line, message: m })?;
                set_once(&mut self.cover, p, "cover_pi1", line)?;
            }
            "h2_cert" => {
                let pairs = key_values(rest, line)?;
                allow_keys(&pairs, &["rank", "source", "assumed"], line)?;
                let rank = parse_num(required(&pairs, "rank", line)?, "rank", line)?;
                let cert = match (lookup(&pairs, "source"), lookup(&pairs, "assumed")) {
                    (Some(s), None) => H2Certificate::literature(rank, s),
                    (None, Some(n)) => H2Certificate::assumed(rank, n),
                    _ => return err(line, "h2_cert needs exactly one of source=\"...\" or assumed=\"...\""),
                };
                set_once(&mut self.cert, cert, "h2_cert", line)?;
            }
            "indecomposable" => {
                let pairs = key_values(rest, line)?;
                allow_keys(&pairs, &["source"], line)?;
                let source = required(&pairs, "source", line)?.to_string();
                set_once(&mut self.indecomposable, source, "indecomposable", line)?;
            }
            "summand" => {
                let (kind, args) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                if kind != "unknotted_rp2" {
                    return err(line, format!("unknown summand `{kind}`"));
                }
                let pairs = key_values(args, line)?;
                allow_keys(&pairs, &["e"], line)?;
                let e = parse_num(required(&pairs, "e", line)?, "e", line)?;
                self.summands.push((e, line));
            }
            "connected_sum" => {
                if rest.is_empty() {
                    return err(line, "connected_sum needs at least one name");
                }
                self.sum_of
                    .extend(rest.split_whitespace().map(|n| (n.to_string(), line)));
            }
            other => return err(line, format!("unknown keyword `{other}`")),
        }
        Ok(())
    }

    fn resolve(self, earlier: &SpecFile) -> Result<SpecEntry, SpecError> {
        let mut parts = Vec::new();
        let mut group = None;
        if let Some((c, line)) = &self.construction {
            let line = *line;
            let s = match c {
                Construction::Ribbon { k } => {
                    let Some(t) = self.surface_type else {
                        return err(line, "double_of_ribbon needs a `type` line");
                    };
                    let Some(cover) = self.cover.clone() else {
                        return err(line, "double_of_ribbon needs a `cover_pi1` line");
                    };
                    let Some(cert) = self.cert.clone() else {
                        return err(line, "double_of_ribbon needs an `h2_cert` line");
                    };
                    group = Some(cover.clone());
                    RibbonDouble::new(self.name.clone(), t, *k, cover, cert)
                        .map(SurfaceSpec::DoubleOfRibbon)
                        .or_else(|e| err(line, e.to_string()))?
                }
                Construction::TwoKnot => SurfaceSpec::two_knot(self.name.clone()),
                Construction::Unknotted { e } => {
                    let Some(t) = self.surface_type else {
                        return err(line, "unknotted needs a `type` line");
                    };
                    SurfaceSpec::unknotted(t, *e).or_else(|e| err(line, e.to_string()))?
                }
            };
            parts.push(s);
        }
        for (name, line) in &self.sum_of {
            match earlier.get(name) {
                Some(e) => parts.push(e.surface.clone()),
                None => return err(*line, format!("unknown surface `{name}`")),
            }
        }
        for &(e, line) in &self.summands {
            parts.push(SurfaceSpec::unknotted_rp2(e).or_else(|x| err(line, x.to_string()))?);
        }
        let surface = match SurfaceSpec::connected_sum(parts) {
            Ok(s) => s,
            Err(_) => return err(self.line, "surface has no construction, summand or connected_sum"),
        };
        if !matches!(self.construction, Some((Construction::Ribbon { .. }, _))) {
            for (what, present) in [("cover_pi1", self.cover.is_some()), ("h2_cert", self.cert.is_some())] {
                if present {
                    return err(self.line, format!("`{what}` only applies to double_of_ribbon"));
                }
            }
        }
        let indecomposable = match (self.indecomposable, group) {
            (None, _) => None,
            (Some(citation), Some(group)) => Some(IndecomposabilityCertificate { group, citation }),
            (Some(_), None) => return err(self.line, "`indecomposable` needs a double_of_ribbon cover group"),
        };
        Ok(SpecEntry {
            name: self.name,
            surface,
            indecomposable,
        })
    }
}

fn set_once<T>(slot: &mut Option<T>, value: T, what: &str, line: usize) -> Result<(), SpecError> {
    if slot.is_some() {
        return err(line, format!("duplicate `{what}`"));
    }
    *slot = Some(value);
    Ok(())
}

fn parse_type(text: &str, line: usize) -> Result<SurfaceType, SpecError> {
    let words: Vec<&str> = text.split_whitespace().collect();
    let t = match words.as_slice() {
        ["torus"] => SurfaceType::TORUS,
        ["klein"] => SurfaceType::KLEIN_BOTTLE,
        ["sphere"] => SurfaceType::SPHERE,
        ["rp2"] => SurfaceType::PROJECTIVE_PLANE,
        ["orientable", arg] => match arg.strip_prefix("g=") {
            Some(g) => SurfaceType::orientable(parse_num(g, "g", line)?),
            None => return err(line, "expected `orientable g=<n>`"),
        },
        ["nonorientable", arg] => match arg.strip_prefix("c=") {
            Some(c) => SurfaceType::nonorientable(parse_num(c, "c", line)?).or_else(|e| err(line, e.to_string()))?,
            None => return err(line, "expected `nonorientable c=<n>`"),
        },
        _ => return err(line, format!("unknown surface type `{text}`")),
    };
    Ok(t)
}

fn parse_num<T: std::str::FromStr>(text: &str, key: &str, line: usize) -> Result<T, SpecError> {
    text.parse()
        .or_else(|_| err(line, format!("invalid value `{text}` for `{key}`")))
}

/// `key=value` pairs; values may be double-quoted.
fn key_values(text: &str, line: usize) -> Result<Vec<(String, String)>, SpecError> {
    let mut out = Vec::new();
    let mut chars = text.trim().chars().peekable();
    loop {
        while chars.next_if(|c| c.is_whitespace()).is_some() {}
        if chars.peek().is_none() {
            return Ok(out);
        }
        let mut key = String::new();
        while let Some(c) = chars.next_if(|&c| c != '=' && !c.is_whitespace()) {
            key.push(c);
        }
        if chars.next() != Some('=') || key.is_empty() {
            return err(line, format!("expected key=value, found `{key}`"));
        }
        let mut value = String::new();
        if chars.next_if_eq(&'"').is_some() {
            loop {
                match chars.next() {
                    Some('"') => break,
                    Some(c) => value.push(c),
                    None => return err(line, "unterminated string"),
                }
            }
        } else {
            while let Some(c) = chars.next_if(|c| !c.is_whitespace()) {
                value.push(c);
            }
        }
        if out.iter().any(|(k, _)| *k == key) {
            return err(line, format!("duplicate key `{key}`"));
        }
        out.push((key, value));
    }
}

fn lookup<'a>(pairs: &'a [(String, String)], key: &str) -> Option<&'a str> {
    pairs.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
}

fn allow_keys(pairs: &[(String, String)], allowed: &[&str], line: usize) -> Result<(), SpecError> {
    match pairs.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
        Some((k, _)) => err(line, format!("unexpected key `{k}`")),
        None => Ok(()),
    }
}

fn required<'a>(pairs: &'a [(String, String)], key: &str, line: usize) -> Result<&'a str, SpecError> {
    lookup(pairs, key).ok_or_else(|| SpecError {
        line,
        message: format!("missing `{key}=`"),
    })
}

/// `<...>`, `triangle(p,q,r)` or `free_product(expr, ...)`.
pub fn parse_group(text: &str) -> Result<Presentation, String> {
    let text = text.trim();
    if text.starts_with('<') {
        return Presentation::parse(text).map_err(|e| e.to_string());
    }
    let (head, args) = text
        .split_once('(')
        .and_then(|(h, rest)| rest.strip_suffix(')').map(|a| (h.trim(), a)))
        .ok_or_else(|| format!("unrecognized group `{text}`"))?;
    let args = split_top_level(args)?;
    match head {
        "triangle" => {
            let nums: Result<Vec<i64>, _> = args.iter().map(|a| a.trim().parse::<i64>()).collect();
            match nums.as_deref() {
                Ok([p, q, r]) => Presentation::triangle(*p, *q, *r).map_err(|e| e.to_string()),
                _ => Err(format!("triangle expects three integers, got `{text}`")),
            }
        }
        "free_product" => {
            let parts = args.iter().map(|a| parse_group(a)).collect::<Result<Vec<_>, _>>()?;
            if parts.is_empty() {
                return Err("free_product needs at least one factor".into());
            }
            Ok(free_product_all(&parts))
        }
        other => Err(format!("unknown group constructor `{other}`")),
    }
}

fn split_top_level(text: &str) -> Result<Vec<&str>, String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' | '<' => depth += 1,
            ')' | '>' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(format!("unbalanced brackets in `{text}`"));
        }
    }
    if depth != 0 {
        return Err(format!("unbalanced brackets in `{text}`"));
    }
    if !text.trim().is_empty() {
        out.push(&text[start..]);
    }
    Ok(out)
}
