//! Text grammars for rings, monomials and ideals.
//!
//! ```text
//! ring    := 'ring' item (',' item)*       item := var | var '..' var
//! term    := factor ('*' factor)* | '1'    factor := var ('^' uint)?
//! ideal   := '(' term (',' term)* ')' | '(0)'
//! ```
//!
//! A range item `x1..x6` expands to `x1, x2, ..., x6` and needs a shared
//! alphabetic prefix with numeric suffixes.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::{Monomial, RingContext, MAX_EXPONENT};

/// Character cursor that tracks 1-based line and column.
pub(crate) struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
    _src: &'a str,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Self::at(src, 1, 1)
    }

    /// Cursor whose first character sits at `line:column` of a larger document.
    pub(crate) fn at(src: &'a str, line: usize, column: usize) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
            line,
            column,
            _src: src,
        }
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    pub(crate) fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    pub(crate) fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_none()
    }

    pub(crate) fn expect_end(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error(format!("unexpected `{}`", self.peek().unwrap())))
        }
    }

    pub(crate) fn eat(&mut self, want: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(want) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, want: char) -> Result<()> {
        if self.eat(want) {
            Ok(())
        } else {
            Err(match self.peek() {
                Some(c) => self.error(format!("expected `{want}`, found `{c}`")),
                None => self.error(format!("expected `{want}`, found end of input")),
            })
        }
    }

    pub(crate) fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {}
            Some(c) => return Err(self.error(format!("expected a name, found `{c}`"))),
            None => return Err(self.error("expected a name, found end of input")),
        }
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        Ok(s)
    }

    pub(crate) fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let mut digits = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if digits.is_empty() {
            return Err(self.error("expected an unsigned integer"));
        }
        digits
            .parse::<u64>()
            .map_err(|_| self.error("integer out of range"))
    }

    pub(crate) fn keyword(&mut self, word: &str) -> bool {
        self.skip_ws();
        let end = self.pos + word.chars().count();
        if end > self.chars.len() {
            return false;
        }
        let matches = self.chars[self.pos..end].iter().copied().eq(word.chars());
        let boundary = self
            .chars
            .get(end)
            .is_none_or(|c| !(c.is_ascii_alphanumeric() || *c == '_'));
        if matches && boundary {
            for _ in 0..word.chars().count() {
                self.bump();
            }
            true
        } else {
            false
        }
    }

    pub(crate) fn position(&self) -> (usize, usize) {
        (self.line, self.column)
    }
}

fn split_numeric_suffix(name: &str) -> Option<(&str, u64)> {
    let idx = name.find(|c: char| c.is_ascii_digit())?;
    let (prefix, digits) = name.split_at(idx);
    if prefix.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    Some((prefix, digits.parse().ok()?))
}

/// Parses a ring declaration such as `ring x,y,z` or `ring x1..x6`.
/// The leading keyword is optional.
pub fn parse_ring(src: &str) -> Result<RingContext> {
    let mut cur = Cursor::new(src);
    parse_ring_at(&mut cur)
}

pub(crate) fn parse_ring_at(cur: &mut Cursor<'_>) -> Result<RingContext> {
    cur.keyword("ring");
    let mut names: Vec<String> = Vec::new();
    loop {
        let first = cur.ident()?;
        cur.skip_ws();
        if cur.peek() == Some('.') {
            cur.bump();
            cur.expect('.')?;
            let last = cur.ident()?;
            let (p1, a) = split_numeric_suffix(&first).ok_or_else(|| {
                cur.error(format!("range start `{first}` needs a numeric suffix"))
            })?;
            let (p2, b) = split_numeric_suffix(&last)
                .ok_or_else(|| cur.error(format!("range end `{last}` needs a numeric suffix")))?;
            if p1 != p2 || a > b {
                return Err(cur.error(format!("bad range `{first}..{last}`")));
            }
            names.extend((a..=b).map(|i| format!("{p1}{i}")));
        } else {
            names.push(first);
        }
        if !cur.eat(',') {
            break;
        }
    }
    cur.expect_end()?;
    RingContext::new(&names).map_err(|e| cur.error(e.to_string()))
}

pub(crate) fn parse_term_at(ctx: &RingContext, cur: &mut Cursor<'_>) -> Result<Monomial> {
    cur.skip_ws();
    if cur.peek() == Some('1') {
        cur.bump();
        return Ok(ctx.one());
    }
    let mut exps = vec![0u32; ctx.nvars()];
    loop {
        cur.skip_ws();
        let (line, column) = (cur.line, cur.column);
        let name = cur.ident()?;
        let i = ctx.index_of(&name).ok_or(Error::Parse {
            line,
            column,
            message: format!("unknown variable `{name}`"),
        })?;
        let e = if cur.eat('^') {
            let e = cur.uint()?;
            if e > u64::from(MAX_EXPONENT) {
                return Err(cur.error("exponent overflow"));
            }
            e as u32
        } else {
            1
        };
        exps[i] = exps[i]
            .checked_add(e)
            .filter(|&v| v <= MAX_EXPONENT)
            .ok_or_else(|| cur.error("exponent overflow"))?;
        if !cur.eat('*') {
            break;
        }
    }
    Monomial::new(exps)
}

/// Parses a monomial term like `x^2*y` or `1`.
pub fn parse_monomial(ctx: &RingContext, src: &str) -> Result<Monomial> {
    let mut cur = Cursor::new(src);
    let m = parse_term_at(ctx, &mut cur)?;
    cur.expect_end()?;
    Ok(m)
}

pub(crate) fn parse_ideal_at(
    ctx: &Arc<RingContext>,
    cur: &mut Cursor<'_>,
) -> Result<MonomialIdeal> {
    cur.expect('(')?;
    cur.skip_ws();
    if cur.peek() == Some('0') {
        cur.bump();
        cur.expect(')')?;
        return Ok(MonomialIdeal::zero(ctx));
    }
    let mut gens = Vec::new();
    loop {
        gens.push(parse_term_at(ctx, cur)?);
        if !cur.eat(',') {
            break;
        }
    }
    cur.expect(')')?;
    MonomialIdeal::from_generators(ctx, gens)
}

/// Parses an ideal like `(x^2, x*y)` or `(0)`.
pub fn parse_ideal(ctx: &Arc<RingContext>, src: &str) -> Result<MonomialIdeal> {
    let mut cur = Cursor::new(src);
    let ideal = parse_ideal_at(ctx, &mut cur)?;
    cur.expect_end()?;
    Ok(ideal)
}

/// Parses a comma-separated variable list such as `x,y` or `(x, y)`.
pub fn parse_variable_set(ctx: &RingContext, src: &str) -> Result<Vec<usize>> {
    let mut cur = Cursor::new(src);
    let paren = cur.eat('(');
    let mut out = Vec::new();
    loop {
        cur.skip_ws();
        let (line, column) = (cur.line, cur.column);
        let name = cur.ident()?;
        let i = ctx.index_of(&name).ok_or(Error::Parse {
            line,
            column,
            message: format!("unknown variable `{name}`"),
        })?;
        out.push(i);
        if !cur.eat(',') {
            break;
        }
    }
    if paren {
        cur.expect(')')?;
    }
    cur.expect_end()?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}
