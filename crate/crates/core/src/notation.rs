//! Text formats: braid words `BR[n, {..}]`, planar diagram codes
//! `PD[X[..], ..]`, Laurent polynomials in `v` and `z`, and line-based oval
//! forests.
//!
//! Every parser either succeeds or returns a [`ParseError`] carrying a
//! 1-based line and column.

use std::fmt::Write as _;

use thiserror::Error;

use crate::braid::BraidWord;
use crate::diagram::{DiagramError, LinkingMatrix, PDDiagram};
use crate::poly::LaurentPoly2;
use crate::splice::{Circle, ForestError, Oval, OvalForest};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourceKind {
    Braid,
    Pd,
    Poly,
    Ovals,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceText {
    pub content: String,
    pub kind: SourceKind,
}

impl SourceText {
    /// Classify by the leading token. Text starting with `BR[` or `PD[`
    /// (after an optional `Name=`) is a braid or PD code; text whose first
    /// non-comment line reads like `id parent winding` is an oval forest; everything else is read as a polynomial.
    pub fn new(content: &str) -> Result<Self, ParseError> {
        if content.trim().is_empty() {
            return Err(ParseError { line: 1, column: 1, message: "empty input".into() });
        }
        let (_, body) = split_assignment(content);
        let head = body.trim_start();
        let kind = if head.starts_with("BR[") {
            SourceKind::Braid
        } else if head.starts_with("PD[") {
            SourceKind::Pd
        } else {
            let first = content
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .find(|l| !l.is_empty())
                .unwrap_or("");
            let fields: Vec<&str> = first.split_whitespace().collect();
            let oval_like = fields.len() >= 3
                && first.starts_with(|c: char| c.is_ascii_digit())
                && !first.contains(|c| matches!(c, '^' | '*' | '(' | '/' | '+'))
                && (fields[2] == "fiber" || fields[2].parse::<i64>().is_ok());
            if oval_like {
                SourceKind::Ovals
            } else {
                SourceKind::Poly
            }
        };
        Ok(Self { content: content.to_string(), kind })
    }
}

/// Split `Name = body;` into the name and the body. Text without `=` is
/// returned whole.
pub fn split_assignment(src: &str) -> (Option<&str>, &str) {
    let trimmed = src.trim().trim_end_matches(';').trim_end();
    match trimmed.find('=') {
        Some(i) if !trimmed[..i].trim().is_empty()
            && trimmed[..i].trim().chars().all(|c| c.is_alphanumeric() || c == '_') =>
        {
            (Some(trimmed[..i].trim()), trimmed[i + 1..].trim())
        }
        _ => (None, trimmed),
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    fn location(&self, pos: usize) -> (usize, usize) {
        let before = &self.src[..pos.min(self.src.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        (line, column)
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> ParseError {
        let (line, column) = self.location(pos);
        ParseError { line, column, message: message.into() }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.pos, message)
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => Err(self.error(format!("expected '{c}', found '{found}'"))),
                None => Err(self.error(format!("expected '{c}', found end of input"))),
            }
        }
    }

    fn expect_word(&mut self, w: &str) -> Result<(), ParseError> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(w) {
            self.pos += w.len();
            Ok(())
        } else {
            Err(self.error(format!("expected '{w}'")))
        }
    }

    fn digits(&mut self) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..].bytes().take_while(|b| b.is_ascii_digit()).count();
        if len == 0 {
            return Err(self.error("expected an integer"));
        }
        self.pos += len;
        Ok(&self.src[start..start + len])
    }

    fn unsigned(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        let d = self.digits()?;
        d.parse().map_err(|_| self.error_at(start, "integer too large"))
    }

    fn signed(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat('-');
        if !neg {
            self.eat('+');
        }
        let start = self.pos;
        let d = self.digits()?;
        let text = if neg { format!("-{d}") } else { d.to_string() };
        text.parse().map_err(|_| self.error_at(start, "integer too large"))
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        if rest.is_empty() || rest == ";" {
            Ok(())
        } else {
            Err(self.error(format!("unexpected trailing input '{}'", rest.chars().next().unwrap())))
        }
    }

    /// Skip an optional `Name =` prefix.
    fn skip_assignment(&mut self) {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let name_len = rest.chars().take_while(|c| c.is_alphanumeric() || *c == '_').count();
        if name_len > 0 {
            let after = rest[name_len..].trim_start();
            if after.starts_with('=') {
                let ws = rest[name_len..].len() - after.len();
                self.pos += name_len + ws + 1;
            }
        }
    }
}

/// Parse `BR[n, {e1, ..., ek}]`, optionally preceded by `Name=`.
pub fn parse_braid(src: &str) -> Result<BraidWord, ParseError> {
    let mut c = Cursor::new(src);
    c.skip_assignment();
    c.expect_word("BR")?;
    c.expect('[')?;
    c.skip_ws();
    let n_pos = c.pos;
    let n = c.unsigned()?;
    c.expect(',')?;
    c.expect('{')?;
    let mut letters = Vec::new();
    if !c.eat('}') {
        loop {
            c.skip_ws();
            let p = c.pos;
            let e = c.signed()?;
            let e = i32::try_from(e).map_err(|_| c.error_at(p, "letter too large"))?;
            if e == 0 {
                return Err(c.error_at(p, "letter 0 is not a generator"));
            }
            if e.unsigned_abs() as u64 >= n {
                return Err(c.error_at(p, format!("generator index {e} out of range for {n} strands")));
            }
            letters.push(e);
            if c.eat('}') {
                break;
            }
            c.expect(',')?;
        }
    }
    c.expect(']')?;
    c.finish()?;
    if n < 1 {
        return Err(c.error_at(n_pos, "a braid needs at least one strand"));
    }
    BraidWord::new(n as usize, letters).map_err(|e| c.error_at(n_pos, e.to_string()))
}

pub fn render_braid(b: &BraidWord) -> String {
    let letters: Vec<String> = b.letters().iter().map(|e| e.to_string()).collect();
    format!("BR[{}, {{{}}}]", b.strands(), letters.join(", "))
}

/// Parse `PD[X[a,b,c,d], ...]`. A crossingless component is written
/// `Loop[k]` for `k` of them; a bare `PD[]` has no components and is
/// rejected.
pub fn parse_pd(src: &str) -> Result<PDDiagram, ParseError> {
    let mut c = Cursor::new(src);
    c.skip_assignment();
    let start = c.pos;
    c.expect_word("PD")?;
    c.expect('[')?;
    let mut tuples: Vec<[u32; 4]> = Vec::new();
    let mut spans: Vec<usize> = Vec::new();
    let mut loops = 0usize;
    if !c.eat(']') {
        loop {
            c.skip_ws();
            let here = c.pos;
            if c.src[c.pos..].starts_with("Loop") {
                c.expect_word("Loop")?;
                c.expect('[')?;
                loops += c.unsigned()? as usize;
                c.expect(']')?;
            } else {
                c.expect_word("X")?;
                c.expect('[')?;
                let mut t = [0u32; 4];
                for (k, slot) in t.iter_mut().enumerate() {
                    if k > 0 {
                        c.expect(',')?;
                    }
                    c.skip_ws();
                    let p = c.pos;
                    let a = c.unsigned()?;
                    if a == 0 || a > u32::MAX as u64 {
                        return Err(c.error_at(p, "arc labels must be positive integers"));
                    }
                    *slot = a as u32;
                }
                c.expect(']')?;
                tuples.push(t);
                spans.push(here);
            }
            if c.eat(']') {
                break;
            }
            c.expect(',')?;
        }
    }
    c.finish()?;
    if tuples.is_empty() && loops == 0 {
        return Err(c.error_at(start, "PD[] has no components; annotate crossingless links with Loop[k]"));
    }
    PDDiagram::from_pd_code(tuples.clone(), loops).map_err(|e| {
        let at = match &e {
            DiagramError::ArcCount { arc, .. }
            | DiagramError::SelfOpposite { arc, .. }
            | DiagramError::Orientation { arc } => tuples
                .iter()
                .position(|t| t.contains(arc))
                .map_or(start, |k| spans[k]),
            _ => start,
        };
        c.error_at(at, e.to_string())
    })
}

pub fn render_pd(d: &PDDiagram) -> String {
    let mut parts: Vec<String> = d
        .crossings()
        .iter()
        .map(|x| format!("X[{},{},{},{}]", x.arcs[0], x.arcs[1], x.arcs[2], x.arcs[3]))
        .collect();
    if d.free_loops() > 0 {
        parts.push(format!("Loop[{}]", d.free_loops()));
    }
    format!("PD[{}]", parts.join(","))
}

/// Parse a polynomial such as `2-3*v^2 + v^4 + z^(-2)-(2*v^2)/z^2`.
/// `*` is optional, exponents may be written `^-2` or `^(-2)`, and
/// division is allowed only by monomials.
pub fn parse_poly(src: &str) -> Result<LaurentPoly2, ParseError> {
    let mut c = Cursor::new(src);
    c.skip_assignment();
    if c.peek().is_none() {
        return Err(c.error("empty polynomial"));
    }
    let p = poly_expr(&mut c)?;
    c.finish()?;
    Ok(p)
}

fn poly_expr(c: &mut Cursor) -> Result<LaurentPoly2, ParseError> {
    let mut acc = poly_term(c)?;
    loop {
        if c.eat('+') {
            acc += &poly_term(c)?;
        } else if c.eat('-') {
            acc = &acc - &poly_term(c)?;
        } else {
            return Ok(acc);
        }
    }
}

fn starts_factor(ch: Option<char>) -> bool {
    matches!(ch, Some(c) if c.is_ascii_digit() || c == 'v' || c == 'z' || c == '(')
}

fn poly_term(c: &mut Cursor) -> Result<LaurentPoly2, ParseError> {
    let mut acc = poly_unary(c)?;
    loop {
        if c.eat('*') {
            acc = &acc * &poly_unary(c)?;
        } else if c.peek() == Some('/') {
            let at = c.pos;
            c.eat('/');
            let d = poly_unary(c)?;
            acc = acc.div_monomial(&d).map_err(|e| c.error_at(at, e.to_string()))?;
        } else if starts_factor(c.peek()) {
            acc = &acc * &poly_power(c)?;
        } else {
            return Ok(acc);
        }
    }
}

fn poly_unary(c: &mut Cursor) -> Result<LaurentPoly2, ParseError> {
    if c.eat('-') {
        Ok(-poly_unary(c)?)
    } else if c.eat('+') {
        poly_unary(c)
    } else {
        poly_power(c)
    }
}

fn poly_power(c: &mut Cursor) -> Result<LaurentPoly2, ParseError> {
    let base = poly_atom(c)?;
    if c.peek() != Some('^') {
        return Ok(base);
    }
    let at = c.pos;
    c.eat('^');
    let e = if c.eat('(') {
        let e = c.signed()?;
        c.expect(')')?;
        e
    } else {
        c.signed()?
    };
    let e = i32::try_from(e).map_err(|_| c.error_at(at, "exponent too large"))?;
    base.powi(e).map_err(|err| c.error_at(at, err.to_string()))
}

fn poly_atom(c: &mut Cursor) -> Result<LaurentPoly2, ParseError> {
    match c.peek() {
        Some('v') => {
            c.pos += 1;
            Ok(LaurentPoly2::v())
        }
        Some('z') => {
            c.pos += 1;
            Ok(LaurentPoly2::z())
        }
        Some('(') => {
            c.pos += 1;
            let p = poly_expr(c)?;
            c.expect(')')?;
            Ok(p)
        }
        Some(ch) if ch.is_ascii_digit() => {
            let at = c.pos;
            let n = c.unsigned()?;
            if c.src[c.pos..].starts_with('.') {
                return Err(c.error("coefficients must be integers"));
            }
            let n = i64::try_from(n).map_err(|_| c.error_at(at, "coefficient too large"))?;
            Ok(LaurentPoly2::constant(n))
        }
        Some(ch) => Err(c.error(format!("unknown symbol '{ch}'"))),
        None => Err(c.error("unexpected end of input")),
    }
}

fn render_power(out: &mut String, var: char, e: i32) {
    match e {
        0 => {}
        1 => out.push(var),
        e if e < 0 => write!(out, "{var}^({e})").unwrap(),
        e => write!(out, "{var}^{e}").unwrap(),
    }
}

/// Terms in decreasing `v`-degree, then decreasing `z`-degree.
pub fn render_poly(p: &LaurentPoly2) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<((i32, i32), i64)> = p.terms().collect();
    terms.sort_by(|a, b| b.0.cmp(&a.0));
    let mut out = String::new();
    for (k, ((i, j), c)) in terms.into_iter().enumerate() {
        if k == 0 {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        let mag = c.unsigned_abs();
        let mut mono = String::new();
        render_power(&mut mono, 'v', i);
        if !mono.is_empty() && j != 0 {
            mono.push('*');
        }
        render_power(&mut mono, 'z', j);
        if mono.is_empty() {
            write!(out, "{mag}").unwrap();
        } else if mag == 1 {
            out.push_str(&mono);
        } else {
            write!(out, "{mag}*{mono}").unwrap();
        }
    }
    out
}

/// Parse an oval forest, one oval per line: `id parent winding [cx cy r]`.
/// `parent` is 0 for roots. The winding field may be `fiber` for a fiber
/// point (a zero-radius oval of winding 1). `#` starts a comment.
pub fn parse_ovals(src: &str) -> Result<OvalForest, ParseError> {
    let mut ovals = Vec::new();
    let mut line_of = Vec::new();
    for (ln, raw) in src.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let mut fields = Vec::new();
        let mut col = 0;
        for tok in line.split_whitespace() {
            let off = line[col..].find(tok).unwrap() + col;
            fields.push((tok, off + 1));
            col = off + tok.len();
        }
        let err = |col: usize, msg: String| ParseError { line: ln + 1, column: col, message: msg };
        if fields.len() != 3 && fields.len() != 6 {
            return Err(err(1, format!("expected 3 or 6 fields, found {}", fields.len())));
        }
        let int = |k: usize| -> Result<i64, ParseError> {
            fields[k].0.parse().map_err(|_| err(fields[k].1, format!("expected an integer, found '{}'", fields[k].0)))
        };
        let id = int(0)?;
        let parent = int(1)?;
        if id <= 0 || id > u32::MAX as i64 {
            return Err(err(fields[0].1, "oval ids must be positive".into()));
        }
        if parent < 0 || parent > u32::MAX as i64 {
            return Err(err(fields[1].1, "parent id must be 0 or positive".into()));
        }
        let (winding, fiber) = if fields[2].0 == "fiber" {
            (1, true)
        } else {
            let w = int(2)?;
            (i32::try_from(w).map_err(|_| err(fields[2].1, "winding too large".into()))?, false)
        };
        let circle = if fields.len() == 6 {
            let mut g = [0f64; 3];
            for (k, slot) in g.iter_mut().enumerate() {
                let (tok, col) = fields[3 + k];
                *slot = tok
                    .parse::<f64>()
                    .ok()
                    .filter(|x| x.is_finite())
                    .ok_or_else(|| err(col, format!("expected a number, found '{tok}'")))?;
            }
            Some(Circle { cx: g[0], cy: g[1], r: g[2] })
        } else {
            None
        };
        let fiber = fiber || circle.map_or(false, |c| c.r == 0.0);
        ovals.push(Oval { id: id as u32, parent: parent as u32, winding, fiber, circle });
        line_of.push(ln + 1);
    }
    if ovals.is_empty() {
        return Err(ParseError { line: 1, column: 1, message: "no ovals".into() });
    }
    let ids: Vec<u32> = ovals.iter().map(|o| o.id).collect();
    OvalForest::new(ovals).map_err(|e| {
        let line = match &e {
            ForestError::DuplicateId(id)
            | ForestError::UnknownParent { id, .. }
            | ForestError::Cycle(id)
            | ForestError::Geometry { id, .. }
            | ForestError::FiberWithChildren(id) => {
                ids.iter().position(|x| x == id).map_or(1, |k| line_of[k])
            }
            _ => 1,
        };
        ParseError { line, column: 1, message: e.to_string() }
    })
}

pub fn render_ovals(f: &OvalForest) -> String {
    let mut out = String::new();
    for o in f.ovals() {
        let w = if o.fiber && o.circle.is_none() { "fiber".to_string() } else { o.winding.to_string() };
        write!(out, "{} {} {}", o.id, o.parent, w).unwrap();
        if let Some(c) = o.circle {
            write!(out, " {} {} {}", c.cx, c.cy, c.r).unwrap();
        }
        out.push('\n');
    }
    out
}

/// Parse a linking matrix `{{0, -1}, {-1, 0}}`, optionally preceded by
/// `Name=`. The matrix must be square, symmetric, with zero diagonal.
pub fn parse_matrix(src: &str) -> Result<LinkingMatrix, ParseError> {
    let mut c = Cursor::new(src);
    c.skip_assignment();
    c.skip_ws();
    let start = c.pos;
    c.expect('{')?;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    loop {
        c.expect('{')?;
        let mut row = Vec::new();
        if !c.eat('}') {
            loop {
                row.push(c.signed()?);
                if c.eat('}') {
                    break;
                }
                c.expect(',')?;
            }
        }
        rows.push(row);
        if c.eat('}') {
            break;
        }
        c.expect(',')?;
    }
    c.finish()?;
    let mu = rows.len();
    for i in 0..mu {
        if rows[i].len() != mu {
            return Err(c.error_at(start, format!("row {} has {} entries, expected {mu}", i + 1, rows[i].len())));
        }
        if rows[i][i] != 0 {
            return Err(c.error_at(start, "diagonal entries must be 0"));
        }
        for j in 0..i {
            if rows[i][j] != rows[j][i] {
                return Err(c.error_at(start, "matrix is not symmetric"));
            }
        }
    }
    Ok(LinkingMatrix(rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    const P00: &str = "2-3*v^2 + v^4 + z^(-2)-(2*v^2)/z^2 + v^4/z^2-v^2*z^2";

    #[test]
    fn braid_round_trip() {
        let b = parse_braid("L6n100=BR[3, {1, -2, 1, 2, -1, 2}]").unwrap();
        assert_eq!(b.strands(), 3);
        assert_eq!(b.letters(), &[1, -2, 1, 2, -1, 2]);
        assert_eq!(parse_braid(&render_braid(&b)).unwrap(), b);
        assert_eq!(parse_braid("BR[1, {}]").unwrap().len(), 0);
    }

    #[test]
    fn braid_errors_have_positions() {
        let e = parse_braid("BR[2, {3}]").unwrap_err();
        assert_eq!((e.line, e.column), (1, 8));
        assert!(e.message.contains("out of range"));
        assert!(parse_braid("BR[2, {0}]").is_err());
        assert!(parse_braid("BR[0, {}]").is_err());
        assert!(parse_braid("BR[2, {1,}]").is_err());
        let e = parse_braid("BR[2,\n {1 1}]").unwrap_err();
        assert_eq!(e.line, 2);
    }

    #[test]
    fn appendix_polynomial() {
        let p = parse_poly(P00).unwrap();
        assert_eq!(p.len(), 7);
        assert_eq!(p.coeff(0, -2), 1);
        assert_eq!(p.coeff(2, -2), -2);
        assert_eq!(p.coeff(2, 2), -1);
        assert_eq!(parse_poly(&render_poly(&p)).unwrap(), p);
    }

    #[test]
    fn polynomial_forms() {
        assert_eq!(parse_poly("1").unwrap(), LaurentPoly2::one());
        let zero = parse_poly("v^0*z^0 - v^0*z^0").unwrap();
        assert!(zero.is_zero());
        assert_eq!(render_poly(&zero), "0");
        assert_eq!(parse_poly("1/(v^8*z^2)").unwrap(), LaurentPoly2::monomial(1, -8, -2));
        assert_eq!(parse_poly("z^-2").unwrap(), parse_poly("1/z^2").unwrap());
        assert_eq!(parse_poly("2v z").unwrap(), LaurentPoly2::monomial(2, 1, 1));
        assert_eq!(render_poly(&parse_poly("-v^(-1)*z + 3").unwrap()), "3 - v^(-1)*z");
        assert!(parse_poly("1/(1+v)").is_err());
        assert!(parse_poly("x^2").is_err());
        assert!(parse_poly("1.5*v").is_err());
        assert!(parse_poly("v^(1/2)").is_err());
    }

    #[test]
    fn pd_parsing() {
        let d = parse_pd("PD[X[1,1,2,2]]").unwrap();
        assert_eq!(d.crossings().len(), 1);
        assert!(parse_pd("PD[X[1,2,1,2]]").is_err());
        assert!(parse_pd("PD[]").is_err());
        assert_eq!(parse_pd("PD[Loop[2]]").unwrap().component_count(), 2);
        let e = parse_pd("PD[X[1,2,3,4], X[2,1,4,5]]").unwrap_err();
        assert!(e.message.contains("arc"));
    }

    #[test]
    fn oval_parsing() {
        let f = parse_ovals("1 0 1\n2 1 1\n3 2 1\n").unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.depth(3), 2);
        assert_eq!(parse_ovals(&render_ovals(&f)).unwrap(), f);
        assert_eq!(parse_ovals("1 0 5").unwrap().len(), 1);
        let e = parse_ovals("1 2 0\n2 1 0").unwrap_err();
        assert!(e.message.contains("cycle"));
        let e = parse_ovals("1 0 1\n2 1 x").unwrap_err();
        assert_eq!((e.line, e.column), (2, 5));
    }

    #[test]
    fn matrix_round_trip() {
        let src = "lk00={{0, -1, 1}, {-1, 0, 1}, {1, 1, 0}};";
        let m = parse_matrix(src).unwrap();
        assert_eq!(m.get(0, 1), -1);
        assert_eq!(m.to_string(), "{{0, -1, 1}, {-1, 0, 1}, {1, 1, 0}}");
        assert!(parse_matrix("{{0, 1}, {2, 0}}").is_err());
        assert!(parse_matrix("{{0, 1}, {1}}").is_err());
    }

    #[test]
    fn source_kind_detection() {
        assert_eq!(SourceText::new("BR[2,{1}]").unwrap().kind, SourceKind::Braid);
        assert_eq!(SourceText::new("K=PD[X[1,1,2,2]]").unwrap().kind, SourceKind::Pd);
        assert_eq!(SourceText::new("1 0 1\n").unwrap().kind, SourceKind::Ovals);
        assert_eq!(SourceText::new(P00).unwrap().kind, SourceKind::Poly);
        assert!(SourceText::new("  ").is_err());
        assert_eq!(split_assignment("P00=1 + v;"), (Some("P00"), "1 + v"));
    }
}
