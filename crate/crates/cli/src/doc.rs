//! Input and output document formats.
//!
//! Inputs are line-oriented UTF-8 text with `#` comments. An algebra
//! document lists generator names, one relation per line (coefficients in
//! generator order) and sparse structure rows `mul i j -> c1 ... cn` with
//! 1-based indices; omitted products are zero. Bilinear documents carry
//! three generator lists (`gens1`, `gens2`, `gensm`) with their relation
//! lines (`rel1`, `rel2`, `relm`); ideal documents declare `vars` and
//! `poly` lines. Output documents are a flat list of typed fields with a
//! stable ordering, so equal runs print byte-identical documents and
//! `parse(print(doc)) == doc` holds for both directions.

use num_bigint::BigInt;
use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputDocument {
    Algebra(AlgebraDoc),
    Bilinear(BilinearDoc),
    Ideal(IdealDoc),
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AlgebraDoc {
    pub gens: Vec<String>,
    pub relations: Vec<Vec<BigInt>>,
    pub products: Vec<(usize, usize, Vec<BigInt>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BilinearDoc {
    pub gens1: Vec<String>,
    pub gens2: Vec<String>,
    pub gensm: Vec<String>,
    pub rel1: Vec<Vec<BigInt>>,
    pub rel2: Vec<Vec<BigInt>>,
    pub relm: Vec<Vec<BigInt>>,
    pub products: Vec<(usize, usize, Vec<BigInt>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IdealDoc {
    pub vars: Vec<String>,
    pub polys: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

fn parse_int_list(tokens: &[&str], line: usize) -> Result<Vec<BigInt>, ParseError> {
    tokens
        .iter()
        .map(|t| {
            t.parse::<BigInt>()
                .map_err(|_| err(line, format!("bad integer `{t}`")))
        })
        .collect()
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<InputDocument, ParseError> {
        let mut kind: Option<&str> = None;
        let mut algebra = AlgebraDoc::default();
        let mut bilinear = BilinearDoc::default();
        let mut ideal = IdealDoc::default();
        for (num, raw) in text.lines().enumerate() {
            let line = num + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut tokens = content.split_whitespace();
            let head = tokens.next().unwrap();
            let rest: Vec<&str> = tokens.collect();
            if head == "kind" {
                if kind.is_some() {
                    return Err(err(line, "duplicate kind line"));
                }
                match rest.as_slice() {
                    ["algebra"] => kind = Some("algebra"),
                    ["bilinear"] => kind = Some("bilinear"),
                    ["ideal"] => kind = Some("ideal"),
                    _ => return Err(err(line, "kind must be algebra, bilinear or ideal")),
                }
                continue;
            }
            let Some(kind) = kind else {
                return Err(err(line, "first directive must be `kind`"));
            };
            match (kind, head) {
                ("algebra", "gens") => {
                    algebra.gens = rest.iter().map(|s| s.to_string()).collect()
                }
                ("algebra", "rel") => algebra.relations.push(parse_int_list(&rest, line)?),
                ("algebra", "mul") => {
                    algebra.products.push(parse_mul(&rest, algebra.gens.len(), line)?)
                }
                ("bilinear", "gens1") => {
                    bilinear.gens1 = rest.iter().map(|s| s.to_string()).collect()
                }
                ("bilinear", "gens2") => {
                    bilinear.gens2 = rest.iter().map(|s| s.to_string()).collect()
                }
                ("bilinear", "gensm") => {
                    bilinear.gensm = rest.iter().map(|s| s.to_string()).collect()
                }
                ("bilinear", "rel1") => bilinear.rel1.push(parse_int_list(&rest, line)?),
                ("bilinear", "rel2") => bilinear.rel2.push(parse_int_list(&rest, line)?),
                ("bilinear", "relm") => bilinear.relm.push(parse_int_list(&rest, line)?),
                ("bilinear", "mul") => {
                    bilinear.products.push(parse_mul(&rest, bilinear.gensm.len(), line)?)
                }
                ("ideal", "vars") => {
                    ideal.vars = rest.iter().map(|s| s.to_string()).collect()
                }
                ("ideal", "poly") => {
                    // Polynomials may contain spaces: keep the raw tail.
                    let tail = content.strip_prefix("poly").unwrap().trim();
                    if tail.is_empty() {
                        return Err(err(line, "empty polynomial"));
                    }
                    ideal.polys.push(tail.to_string());
                }
                _ => return Err(err(line, format!("unknown directive `{head}` for {kind}"))),
            }
        }
        match kind {
            Some("algebra") => {
                validate_lengths(&algebra.relations, algebra.gens.len())?;
                for (i, j, v) in &algebra.products {
                    if *i >= algebra.gens.len() || *j >= algebra.gens.len() {
                        return Err(err(0, "mul index out of range"));
                    }
                    if v.len() != algebra.gens.len() {
                        return Err(err(0, "mul coefficient count mismatch"));
                    }
                }
                Ok(InputDocument::Algebra(algebra))
            }
            Some("bilinear") => {
                validate_lengths(&bilinear.rel1, bilinear.gens1.len())?;
                validate_lengths(&bilinear.rel2, bilinear.gens2.len())?;
                validate_lengths(&bilinear.relm, bilinear.gensm.len())?;
                for (i, j, v) in &bilinear.products {
                    if *i >= bilinear.gens1.len() || *j >= bilinear.gens2.len() {
                        return Err(err(0, "mul index out of range"));
                    }
                    if v.len() != bilinear.gensm.len() {
                        return Err(err(0, "mul coefficient count mismatch"));
                    }
                }
                Ok(InputDocument::Bilinear(bilinear))
            }
            Some("ideal") => {
                if ideal.vars.is_empty() {
                    return Err(err(0, "ideal document needs a vars line"));
                }
                Ok(InputDocument::Ideal(ideal))
            }
            _ => Err(err(0, "missing kind directive")),
        }
    }

    pub fn print(&self) -> String {
        let mut out = String::new();
        match self {
            InputDocument::Algebra(a) => {
                out.push_str("kind algebra\n");
                writeln!(out, "gens {}", a.gens.join(" ")).unwrap();
                for r in &a.relations {
                    writeln!(out, "rel {}", join_ints(r)).unwrap();
                }
                for (i, j, v) in &a.products {
                    writeln!(out, "mul {} {} -> {}", i + 1, j + 1, join_ints(v)).unwrap();
                }
            }
            InputDocument::Bilinear(b) => {
                out.push_str("kind bilinear\n");
                writeln!(out, "gens1 {}", b.gens1.join(" ")).unwrap();
                writeln!(out, "gens2 {}", b.gens2.join(" ")).unwrap();
                writeln!(out, "gensm {}", b.gensm.join(" ")).unwrap();
                for r in &b.rel1 {
                    writeln!(out, "rel1 {}", join_ints(r)).unwrap();
                }
                for r in &b.rel2 {
                    writeln!(out, "rel2 {}", join_ints(r)).unwrap();
                }
                for r in &b.relm {
                    writeln!(out, "relm {}", join_ints(r)).unwrap();
                }
                for (i, j, v) in &b.products {
                    writeln!(out, "mul {} {} -> {}", i + 1, j + 1, join_ints(v)).unwrap();
                }
            }
            InputDocument::Ideal(i) => {
                out.push_str("kind ideal\n");
                writeln!(out, "vars {}", i.vars.join(" ")).unwrap();
                for p in &i.polys {
                    writeln!(out, "poly {}", p).unwrap();
                }
            }
        }
        out
    }
}

fn parse_mul(
    rest: &[&str],
    ncoeffs: usize,
    line: usize,
) -> Result<(usize, usize, Vec<BigInt>), ParseError> {
    let _ = ncoeffs;
    if rest.len() < 3 || rest[2] != "->" {
        return Err(err(line, "expected `mul i j -> c1 ... cn`"));
    }
    let i: usize = rest[0]
        .parse()
        .map_err(|_| err(line, "bad generator index"))?;
    let j: usize = rest[1]
        .parse()
        .map_err(|_| err(line, "bad generator index"))?;
    if i == 0 || j == 0 {
        return Err(err(line, "generator indices are 1-based"));
    }
    let coeffs = parse_int_list(&rest[3..], line)?;
    Ok((i - 1, j - 1, coeffs))
}

fn validate_lengths(rows: &[Vec<BigInt>], n: usize) -> Result<(), ParseError> {
    for r in rows {
        if r.len() != n {
            return Err(err(0, "relation length does not match generator count"));
        }
    }
    Ok(())
}

fn join_ints(v: &[BigInt]) -> String {
    v.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Typed field of an output document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Field {
    Text(String),
    Num(BigInt),
    Vector(Vec<BigInt>),
    Matrix(Vec<Vec<BigInt>>),
    List(Vec<String>),
}

/// Flat, ordered, machine-readable result document. Printing is
/// deterministic; `parse(print(d)) == d`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct OutputDocument {
    pub entries: Vec<(String, Field)>,
}

impl OutputDocument {
    pub fn push_text(&mut self, key: &str, value: impl Into<String>) {
        self.entries.push((key.to_string(), Field::Text(value.into())));
    }

    pub fn push_num(&mut self, key: &str, value: impl Into<BigInt>) {
        self.entries.push((key.to_string(), Field::Num(value.into())));
    }

    pub fn push_vector(&mut self, key: &str, value: Vec<BigInt>) {
        self.entries.push((key.to_string(), Field::Vector(value)));
    }

    pub fn push_matrix(&mut self, key: &str, value: Vec<Vec<BigInt>>) {
        self.entries.push((key.to_string(), Field::Matrix(value)));
    }

    pub fn push_list(&mut self, key: &str, value: Vec<String>) {
        self.entries.push((key.to_string(), Field::List(value)));
    }

    pub fn print(&self) -> String {
        let mut out = String::from("zalg-output 1\n");
        for (key, field) in &self.entries {
            match field {
                Field::Text(t) => writeln!(out, "t {key} {t}").unwrap(),
                Field::Num(n) => writeln!(out, "n {key} {n}").unwrap(),
                Field::Vector(v) => writeln!(out, "v {key} {}", join_ints(v)).unwrap(),
                Field::Matrix(m) => {
                    writeln!(out, "m {key} {}", m.len()).unwrap();
                    for row in m {
                        writeln!(out, "r {}", join_ints(row)).unwrap();
                    }
                }
                Field::List(l) => {
                    writeln!(out, "l {key} {}", l.len()).unwrap();
                    for item in l {
                        writeln!(out, "i {item}").unwrap();
                    }
                }
            }
        }
        out.push_str("end\n");
        out
    }

    pub fn parse(text: &str) -> Result<OutputDocument, ParseError> {
        let mut lines = text.lines().enumerate();
        let Some((_, header)) = lines.next() else {
            return Err(err(1, "empty document"));
        };
        if header != "zalg-output 1" {
            return Err(err(1, "bad header"));
        }
        let mut entries = Vec::new();
        let mut pending: Option<(String, bool, usize)> = None; // key, is_matrix, remaining
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        let mut items: Vec<String> = Vec::new();
        for (num, raw) in lines {
            let line = num + 1;
            if let Some((key, is_matrix, remaining)) = pending.clone() {
                let (tag, tail) = raw.split_once(' ').unwrap_or((raw, ""));
                if is_matrix {
                    if tag != "r" {
                        return Err(err(line, "expected matrix row"));
                    }
                    let toks: Vec<&str> = tail.split_whitespace().collect();
                    rows.push(parse_int_list(&toks, line)?);
                } else {
                    if tag != "i" {
                        return Err(err(line, "expected list item"));
                    }
                    items.push(tail.to_string());
                }
                if remaining == 1 {
                    if is_matrix {
                        entries.push((key, Field::Matrix(std::mem::take(&mut rows))));
                    } else {
                        entries.push((key, Field::List(std::mem::take(&mut items))));
                    }
                    pending = None;
                } else {
                    pending = Some((key, is_matrix, remaining - 1));
                }
                continue;
            }
            if raw == "end" {
                return Ok(OutputDocument { entries });
            }
            let mut parts = raw.splitn(3, ' ');
            let tag = parts.next().unwrap_or("");
            let key = parts.next().unwrap_or("").to_string();
            let tail = parts.next().unwrap_or("");
            match tag {
                "t" => entries.push((key, Field::Text(tail.to_string()))),
                "n" => entries.push((
                    key,
                    Field::Num(
                        tail.parse()
                            .map_err(|_| err(line, "bad integer field"))?,
                    ),
                )),
                "v" => {
                    let toks: Vec<&str> = tail.split_whitespace().collect();
                    entries.push((key, Field::Vector(parse_int_list(&toks, line)?)));
                }
                "m" | "l" => {
                    let count: usize = tail
                        .trim()
                        .parse()
                        .map_err(|_| err(line, "bad count"))?;
                    if count == 0 {
                        if tag == "m" {
                            entries.push((key, Field::Matrix(Vec::new())));
                        } else {
                            entries.push((key, Field::List(Vec::new())));
                        }
                    } else {
                        pending = Some((key, tag == "m", count));
                    }
                }
                _ => return Err(err(line, format!("unknown tag `{tag}`"))),
            }
        }
        Err(err(0, "missing end marker"))
    }
}
