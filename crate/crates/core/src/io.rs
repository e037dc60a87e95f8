//! Text formats and expression grammars.
//!
//! Matrix-like files are line oriented: a header line followed by rows of
//! integers separated by arbitrary whitespace. `#` starts a comment that
//! runs to the end of the line; blank and comment-only lines are skipped.
//!
//! ```text
//! SEIFERT k=<int> dim=<int>      FORM dim=<int>      FRAMEDLINK dim=<int>
//! <dim rows of dim integers>
//!
//! DISKS n=<int>
//! <target> : <sign>*             one line per disk, sign is + - +1 or -1
//! ```
//!
//! FRAMEDLINK rows carry framings on the diagonal and linking numbers off
//! it. The two expression languages are
//!
//! ```text
//! PROJ ::= base(kummer[,mu=INT]) | stack(PROJ{,PROJ}) | double(PROJ)
//!        | mirror(PROJ) | spin(PROJ)
//! IMM  ::= giller | embedded(INT) | spin(IMM) | connsum(IMM,IMM)
//! ```
//!
//! and are whitespace-insensitive.

use std::fmt;

use thiserror::Error;

use crate::forms::SymForm;
use crate::handles::{DiskSystem, FramedLink};
use crate::projection::{ImmersedSphereExpr, ProjectionExpr, Sign, DEFAULT_MU};
use crate::seifert::SeifertMatrix;

/// A parse failure at a 1-based position.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(" | "))?;
        }
        Ok(())
    }
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self { line, column, message: message.into(), expected: Vec::new() }
    }

    fn expecting(mut self, expected: &[&str]) -> Self {
        self.expected = expected.iter().map(|s| s.to_string()).collect();
        self
    }
}

pub type ParseResult<T> = Result<T, ParseError>;

#[derive(Clone, Debug)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl Token<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.column, message)
    }

    fn int(&self) -> ParseResult<i64> {
        let t = self.text.strip_prefix('+').unwrap_or(self.text);
        t.parse::<i64>().map_err(|_| self.error(format!("invalid integer `{}`", self.text)).expecting(&["integer"]))
    }
}

/// Non-empty lines after comment stripping, tokenised on whitespace with
/// `:` as a token of its own.
struct Lines<'a> {
    lines: Vec<Vec<Token<'a>>>,
    physical: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let mut lines = Vec::new();
        let mut physical = 0;
        for (i, raw) in text.lines().enumerate() {
            physical = i + 1;
            let content = raw.split('#').next().unwrap_or("");
            let mut toks = Vec::new();
            let mut start: Option<usize> = None;
            let push = |s: usize, e: usize, toks: &mut Vec<Token<'a>>| {
                toks.push(Token { text: &content[s..e], line: i + 1, column: content[..s].chars().count() + 1 });
            };
            for (pos, ch) in content.char_indices() {
                if ch.is_whitespace() || ch == ':' {
                    if let Some(s) = start.take() {
                        push(s, pos, &mut toks);
                    }
                    if ch == ':' {
                        push(pos, pos + 1, &mut toks);
                    }
                } else if start.is_none() {
                    start = Some(pos);
                }
            }
            if let Some(s) = start {
                push(s, content.len(), &mut toks);
            }
            if !toks.is_empty() {
                lines.push(toks);
            }
        }
        Self { lines, physical }
    }

    fn eof_error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.physical + 1, 1, message)
    }
}

/// Parses `KEYWORD key=value ...` and returns the values in `keys` order.
fn parse_header(lines: &Lines, keyword: &str, keys: &[&str]) -> ParseResult<Vec<i64>> {
    let Some(header) = lines.lines.first() else {
        return Err(ParseError::new(1, 1, "empty input").expecting(&[keyword]));
    };
    if header[0].text != keyword {
        return Err(header[0].error(format!("unknown header `{}`", header[0].text)).expecting(&[keyword]));
    }
    let mut values = Vec::with_capacity(keys.len());
    for (idx, key) in keys.iter().enumerate() {
        let want = format!("{key}=<int>");
        let Some(tok) = header.get(idx + 1) else {
            let last = header.last().expect("nonempty");
            return Err(ParseError::new(
                last.line,
                last.column + last.text.chars().count(),
                format!("missing `{key}=`"),
            )
            .expecting(&[&want]));
        };
        let Some(v) = tok.text.strip_prefix(key).and_then(|r| r.strip_prefix('=')) else {
            return Err(tok.error(format!("unexpected `{}`", tok.text)).expecting(&[&want]));
        };
        let v_tok = Token { text: v, line: tok.line, column: tok.column + key.len() + 1 };
        let n = v_tok.int()?;
        if n < 0 {
            return Err(v_tok.error(format!("`{key}` must be non-negative")));
        }
        values.push(n);
    }
    if let Some(extra) = header.get(keys.len() + 1) {
        return Err(extra.error(format!("unexpected `{}` in header", extra.text)).expecting(&["end of line"]));
    }
    Ok(values)
}

/// 1-based (line, column) of every matrix entry.
type Positions = Vec<Vec<(usize, usize)>>;

/// Reads `dim` rows of `dim` integers following the header.
fn parse_rows(lines: &Lines, dim: usize) -> ParseResult<(Vec<Vec<i64>>, Positions)> {
    let mut rows = Vec::with_capacity(dim);
    let mut positions = Vec::with_capacity(dim);
    for r in 0..dim {
        let Some(toks) = lines.lines.get(r + 1) else {
            return Err(lines.eof_error(format!("missing row {} of {dim}", r + 1)).expecting(&["row of integers"]));
        };
        if toks.len() < dim {
            let last = toks.last().expect("nonempty");
            return Err(ParseError::new(
                last.line,
                last.column + last.text.chars().count(),
                format!("row {} has {} entries, expected {dim}", r + 1, toks.len()),
            )
            .expecting(&["integer"]));
        }
        if let Some(extra) = toks.get(dim) {
            return Err(extra.error(format!("row {} has more than {dim} entries", r + 1)).expecting(&["end of line"]));
        }
        rows.push(toks.iter().map(Token::int).collect::<ParseResult<Vec<_>>>()?);
        positions.push(toks.iter().map(|t| (t.line, t.column)).collect());
    }
    if let Some(extra) = lines.lines.get(dim + 1) {
        return Err(extra[0].error("unexpected row after matrix").expecting(&["end of input"]));
    }
    Ok((rows, positions))
}

fn checked_dim(lines: &Lines, v: i64) -> ParseResult<usize> {
    usize::try_from(v).ok().filter(|&d| d <= 10_000).ok_or_else(|| lines.lines[0][0].error("dimension too large"))
}

pub fn parse_seifert(text: &str) -> ParseResult<SeifertMatrix> {
    let lines = Lines::new(text);
    let h = parse_header(&lines, "SEIFERT", &["k", "dim"])?;
    let k = u32::try_from(h[0]).map_err(|_| lines.lines[0][1].error("k too large"))?;
    let dim = checked_dim(&lines, h[1])?;
    let (rows, _) = parse_rows(&lines, dim)?;
    Ok(SeifertMatrix::new(k, rows).expect("rows are square"))
}

pub fn parse_form(text: &str) -> ParseResult<SymForm> {
    let (rows, _) = parse_symmetric(text, "FORM")?;
    Ok(SymForm::new(rows).expect("symmetry checked"))
}

pub fn parse_framed_link(text: &str) -> ParseResult<FramedLink> {
    let (rows, _) = parse_symmetric(text, "FRAMEDLINK")?;
    Ok(FramedLink::from_form(&SymForm::new(rows).expect("symmetry checked")))
}

fn parse_symmetric(text: &str, keyword: &str) -> ParseResult<(Vec<Vec<i64>>, Positions)> {
    let lines = Lines::new(text);
    let h = parse_header(&lines, keyword, &["dim"])?;
    let dim = checked_dim(&lines, h[0])?;
    let (rows, positions) = parse_rows(&lines, dim)?;
    for i in 0..dim {
        for j in i + 1..dim {
            if rows[i][j] != rows[j][i] {
                let (line, column) = positions[j][i];
                return Err(ParseError::new(
                    line,
                    column,
                    format!(
                        "matrix is not symmetric: entry ({},{}) = {} but ({},{}) = {}",
                        i + 1,
                        j + 1,
                        rows[i][j],
                        j + 1,
                        i + 1,
                        rows[j][i]
                    ),
                ));
            }
        }
    }
    Ok((rows, positions))
}

fn parse_sign(tok: &Token) -> ParseResult<Sign> {
    match tok.text {
        "+" | "+1" => Ok(Sign::Plus),
        "-" | "-1" => Ok(Sign::Minus),
        other => Err(tok.error(format!("invalid sign `{other}`")).expecting(&["+", "-"])),
    }
}

pub fn parse_disks(text: &str) -> ParseResult<DiskSystem> {
    let lines = Lines::new(text);
    let h = parse_header(&lines, "DISKS", &["n"])?;
    let n = checked_dim(&lines, h[0])?;
    let mut disks = Vec::with_capacity(n);
    let mut targets = Vec::with_capacity(n);
    for d in 0..n {
        let Some(toks) = lines.lines.get(d + 1) else {
            return Err(lines.eof_error(format!("missing disk {} of {n}", d + 1)).expecting(&["<target> : <signs>"]));
        };
        targets.push(toks[0].int()?);
        match toks.get(1) {
            Some(t) if t.text == ":" => {}
            Some(t) => return Err(t.error(format!("unexpected `{}`", t.text)).expecting(&[":"])),
            None => {
                let t = &toks[0];
                return Err(ParseError::new(t.line, t.column + t.text.chars().count(), "missing `:`").expecting(&[":"]));
            }
        }
        disks.push(toks[2..].iter().map(parse_sign).collect::<ParseResult<Vec<_>>>()?);
    }
    if let Some(extra) = lines.lines.get(n + 1) {
        return Err(extra[0].error("unexpected line after disks").expecting(&["end of input"]));
    }
    Ok(DiskSystem::new(disks, targets).expect("lengths agree"))
}

pub fn render_seifert(s: &SeifertMatrix) -> String {
    s.to_string()
}

pub fn render_form(f: &SymForm) -> String {
    format!("FORM dim={}\n{f}", f.size())
}

pub fn render_framed_link(fl: &FramedLink) -> String {
    format!("FRAMEDLINK dim={}\n{}", fl.size(), fl.intersection_form())
}

pub fn render_disks(ds: &DiskSystem) -> String {
    let mut out = format!("DISKS n={}\n", ds.len());
    for (d, t) in ds.disks().iter().zip(ds.targets()) {
        out.push_str(&format!("{t} :"));
        for s in d {
            out.push_str(&format!(" {s}"));
        }
        out.push('\n');
    }
    out
}

pub fn render_proj(p: &ProjectionExpr) -> String {
    format!("{p}\n")
}

pub fn render_imm(e: &ImmersedSphereExpr) -> String {
    format!("{e}\n")
}

/// Character cursor for the expression grammars.
struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
    depth: usize,
}

/// Deepest nesting accepted by the expression grammars.
const MAX_DEPTH: usize = 256;

impl Cursor {
    fn new(src: &str) -> Self {
        Self { chars: src.chars().collect(), pos: 0, line: 1, column: 1, depth: 0 }
    }

    /// Runs `f` one nesting level deeper.
    fn nested<T>(&mut self, f: impl FnOnce(&mut Self) -> ParseResult<T>) -> ParseResult<T> {
        if self.depth == MAX_DEPTH {
            self.peek();
            return Err(self.error(format!("expression nested more than {MAX_DEPTH} levels deep")));
        }
        self.depth += 1;
        let out = f(self);
        self.depth -= 1;
        out
    }

    fn skip_trivia(&mut self) {
        while let Some(&c) = self.chars.get(self.pos) {
            if c == '#' {
                while self.chars.get(self.pos).is_some_and(|&c| c != '\n') {
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn bump(&mut self) {
        if let Some(&c) = self.chars.get(self.pos) {
            self.pos += 1;
            if c == '\n' {
                self.line += 1;
                self.column = 1;
            } else {
                self.column += 1;
            }
        }
    }

    fn here(&self) -> (usize, usize) {
        (self.line, self.column)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.column, message)
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_trivia();
        self.chars.get(self.pos).copied()
    }

    fn describe_next(&mut self) -> String {
        match self.peek() {
            Some(c) => format!("unexpected `{c}`"),
            None => "unexpected end of input".to_string(),
        }
    }

    fn expect(&mut self, ch: char) -> ParseResult<()> {
        if self.peek() == Some(ch) {
            self.bump();
            Ok(())
        } else {
            let msg = self.describe_next();
            Err(self.error(msg).expecting(&[&format!("`{ch}`")]))
        }
    }

    fn eat(&mut self, ch: char) -> bool {
        if self.peek() == Some(ch) {
            self.bump();
            true
        } else {
            false
        }
    }

    /// An identifier and the position where it starts.
    fn ident(&mut self, expected: &[&str]) -> ParseResult<(String, (usize, usize))> {
        self.peek();
        let at = self.here();
        let mut s = String::new();
        while let Some(&c) = self.chars.get(self.pos) {
            if c.is_ascii_alphanumeric() || c == '_' {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if s.is_empty() {
            let msg = self.describe_next();
            return Err(self.error(msg).expecting(expected));
        }
        Ok((s, at))
    }

    fn int(&mut self) -> ParseResult<(i64, (usize, usize))> {
        self.peek();
        let at = self.here();
        let mut s = String::new();
        if self.chars.get(self.pos) == Some(&'-') {
            s.push('-');
            self.bump();
        }
        while let Some(&c) = self.chars.get(self.pos) {
            if c.is_ascii_digit() {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        s.parse::<i64>()
            .map(|v| (v, at))
            .map_err(|_| ParseError::new(at.0, at.1, "invalid integer").expecting(&["integer"]))
    }

    fn finish(&mut self) -> ParseResult<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(format!("unexpected `{c}` after expression")).expecting(&["end of input"])),
        }
    }
}

const PROJ_HEADS: [&str; 5] = ["base", "stack", "double", "mirror", "spin"];

pub fn parse_proj(text: &str) -> ParseResult<ProjectionExpr> {
    parse_proj_with_mu(text, DEFAULT_MU)
}

/// Like [`parse_proj`], with `default_mu` used for bases without `mu=`.
pub fn parse_proj_with_mu(text: &str, default_mu: usize) -> ParseResult<ProjectionExpr> {
    let mut c = Cursor::new(text);
    let (e, _) = proj(&mut c, default_mu)?;
    c.finish()?;
    Ok(e)
}

/// Returns the expression and its dimension.
fn proj(c: &mut Cursor, default_mu: usize) -> ParseResult<(ProjectionExpr, u32)> {
    c.nested(|c| proj_node(c, default_mu))
}

fn proj_node(c: &mut Cursor, default_mu: usize) -> ParseResult<(ProjectionExpr, u32)> {
    let (head, at) = c.ident(&PROJ_HEADS)?;
    let unknown = || ParseError::new(at.0, at.1, format!("unknown constructor `{head}`")).expecting(&PROJ_HEADS);
    if !PROJ_HEADS.contains(&head.as_str()) {
        return Err(unknown());
    }
    c.expect('(')?;
    let out = match head.as_str() {
        "base" => {
            let (template, _) = c.ident(&["kummer"])?;
            if template != "kummer" {
                return Err(
                    ParseError::new(at.0, at.1 + 5, format!("unknown template `{template}`")).expecting(&["kummer"])
                );
            }
            let mut mu = default_mu;
            if c.eat(',') {
                let (key, kat) = c.ident(&["mu"])?;
                if key != "mu" {
                    return Err(ParseError::new(kat.0, kat.1, format!("unknown parameter `{key}`")).expecting(&["mu"]));
                }
                c.expect('=')?;
                let (v, vat) = c.int()?;
                mu = usize::try_from(v)
                    .ok()
                    .filter(|&m| m >= 1)
                    .ok_or_else(|| ParseError::new(vat.0, vat.1, "mu must be a positive integer"))?;
            }
            (ProjectionExpr::base_with_mu(mu), 3)
        }
        "stack" => {
            let (first, dim) = proj(c, default_mu)?;
            let mut parts = vec![first];
            while c.eat(',') {
                c.peek();
                let at = c.here();
                let (p, d) = proj(c, default_mu)?;
                if d != dim {
                    return Err(ParseError::new(
                        at.0,
                        at.1,
                        format!("stack parts must share a dimension: {dim} vs {d}"),
                    ));
                }
                parts.push(p);
            }
            (ProjectionExpr::Stack(parts), dim)
        }
        "double" => {
            let (p, d) = proj(c, default_mu)?;
            (ProjectionExpr::double(p), d)
        }
        "mirror" => {
            let (p, d) = proj(c, default_mu)?;
            (ProjectionExpr::mirror(p), d)
        }
        "spin" => {
            let (p, d) = proj(c, default_mu)?;
            (ProjectionExpr::spin(p), d + 1)
        }
        _ => unreachable!(),
    };
    c.expect(')')?;
    Ok(out)
}

const IMM_HEADS: [&str; 4] = ["giller", "embedded", "spin", "connsum"];

pub fn parse_imm(text: &str) -> ParseResult<ImmersedSphereExpr> {
    let mut c = Cursor::new(text);
    let (e, _) = imm(&mut c)?;
    c.finish()?;
    Ok(e)
}

fn imm(c: &mut Cursor) -> ParseResult<(ImmersedSphereExpr, u32)> {
    c.nested(imm_node)
}

fn imm_node(c: &mut Cursor) -> ParseResult<(ImmersedSphereExpr, u32)> {
    let (head, at) = c.ident(&IMM_HEADS)?;
    match head.as_str() {
        "giller" => Ok((ImmersedSphereExpr::Giller, 2)),
        "embedded" => {
            c.expect('(')?;
            let (n, nat) = c.int()?;
            let n = u32::try_from(n)
                .ok()
                .filter(|&n| (1..=1_000_000).contains(&n))
                .ok_or_else(|| ParseError::new(nat.0, nat.1, "dimension must be a positive integer"))?;
            c.expect(')')?;
            Ok((ImmersedSphereExpr::Embedded(n), n))
        }
        "spin" => {
            c.expect('(')?;
            let (e, d) = imm(c)?;
            c.expect(')')?;
            Ok((ImmersedSphereExpr::spin(e), d + 1))
        }
        "connsum" => {
            c.expect('(')?;
            let (a, da) = imm(c)?;
            c.expect(',')?;
            c.peek();
            let bat = c.here();
            let (b, db) = imm(c)?;
            c.expect(')')?;
            if da != db {
                return Err(ParseError::new(
                    bat.0,
                    bat.1,
                    format!("connected sum of spheres of different dimensions {da} and {db}"),
                ));
            }
            Ok((ImmersedSphereExpr::ConnSum(Box::new(a), Box::new(b)), da))
        }
        _ => Err(ParseError::new(at.0, at.1, format!("unknown constructor `{head}`")).expecting(&IMM_HEADS)),
    }
}
