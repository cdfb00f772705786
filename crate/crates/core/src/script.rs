//! Session scripts: one ring, named ideal bindings, and commands.
//!
//! ```text
//! ring x,y,z
//! I = (x^2, x*y)
//! J = I^3 : (x*y) + (z)
//! ass J
//! ass-seq I 4
//! ```
//!
//! Binary operators `+` (sum), `*` (product), `&` (intersection) and `:`
//! (colon) share one precedence level and associate to the left; `^k` binds
//! tighter. Square brackets group, `rad[E]` is the radical. Parentheses
//! always delimit an ideal literal. `#` starts a comment.

use std::collections::HashSet;
use std::sync::Arc;

use crate::assoc::{ass_primes, ass_sequence, corner_elements, socle_colon};
use crate::decompose::irreducible_decomposition;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::parse::{parse_ideal_at, parse_ring_at, Cursor};
use crate::ring::{Limits, RingContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinaryOp {
    Sum,
    Product,
    Intersection,
    Colon,
}

#[derive(Clone, Debug)]
pub enum Expr {
    Literal(MonomialIdeal),
    Name(String),
    Power(Box<Expr>, u32),
    Radical(Box<Expr>),
    Binary(BinaryOp, Box<Expr>, Box<Expr>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verb {
    Print,
    Mingen,
    Ass,
    AssSeq,
    Decompose,
    Radical,
    Socle,
    Corners,
}

impl Verb {
    fn from_word(word: &str) -> Option<Verb> {
        Some(match word {
            "print" => Verb::Print,
            "mingen" => Verb::Mingen,
            "ass" => Verb::Ass,
            "ass-seq" => Verb::AssSeq,
            "decompose" => Verb::Decompose,
            "radical" => Verb::Radical,
            "socle" => Verb::Socle,
            "corners" => Verb::Corners,
            _ => return None,
        })
    }

    fn word(self) -> &'static str {
        match self {
            Verb::Print => "print",
            Verb::Mingen => "mingen",
            Verb::Ass => "ass",
            Verb::AssSeq => "ass-seq",
            Verb::Decompose => "decompose",
            Verb::Radical => "radical",
            Verb::Socle => "socle",
            Verb::Corners => "corners",
        }
    }
}

#[derive(Clone, Debug)]
pub enum Statement {
    Bind {
        name: String,
        expr: Expr,
    },
    Command {
        verb: Verb,
        target: Expr,
        count: Option<u32>,
        line: usize,
    },
}

#[derive(Clone, Debug)]
pub struct SessionScript {
    ring: Arc<RingContext>,
    statements: Vec<Statement>,
}

impl SessionScript {
    /// Parses a whole script. Unbound names, a missing or repeated ring line
    /// and malformed expressions are reported with their line and column.
    pub fn parse(src: &str, limits: Limits) -> Result<Self> {
        let mut ring: Option<Arc<RingContext>> = None;
        let mut bound: HashSet<String> = HashSet::new();
        let mut statements = Vec::new();
        for (k, raw) in src.lines().enumerate() {
            let lineno = k + 1;
            let text = raw.split('#').next().unwrap_or("");
            if text.trim().is_empty() {
                continue;
            }
            let mut cur = Cursor::at(text, lineno, 1);
            if cur.keyword("ring") {
                if ring.is_some() {
                    return Err(cur.error("a script declares exactly one ring"));
                }
                let ctx = parse_ring_at(&mut cur)?.with_limits(limits);
                ring = Some(ctx.into_shared());
                continue;
            }
            let Some(ctx) = ring.as_ref() else {
                return Err(cur.error("the first statement must be a `ring` declaration"));
            };
            let (line, column) = {
                cur.skip_ws();
                cur.position()
            };
            let word = read_word(&mut cur)?;
            if cur.eat('=') {
                if Verb::from_word(&word).is_some() {
                    return Err(Error::Parse {
                        line,
                        column,
                        message: format!("`{word}` is a command and cannot be bound"),
                    });
                }
                let expr = parse_expr(ctx, &mut cur, &bound)?;
                cur.expect_end()?;
                bound.insert(word.clone());
                statements.push(Statement::Bind { name: word, expr });
            } else {
                let verb = Verb::from_word(&word).ok_or(Error::Parse {
                    line,
                    column,
                    message: format!("unknown command `{word}`"),
                })?;
                let target = parse_expr(ctx, &mut cur, &bound)?;
                let count = if verb == Verb::AssSeq {
                    Some(small_uint(&mut cur)?)
                } else {
                    None
                };
                cur.expect_end()?;
                statements.push(Statement::Command {
                    verb,
                    target,
                    count,
                    line: lineno,
                });
            }
        }
        let ring = ring.ok_or(Error::Parse {
            line: 1,
            column: 1,
            message: "script declares no ring".into(),
        })?;
        Ok(SessionScript { ring, statements })
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn statements(&self) -> &[Statement] {
        &self.statements
    }

    /// Executes every statement in order and returns the printed lines.
    pub fn run(&self) -> Result<Vec<String>> {
        let mut env: Vec<(String, MonomialIdeal)> = Vec::new();
        let mut out = Vec::new();
        for st in &self.statements {
            match st {
                Statement::Bind { name, expr } => {
                    let value = eval(expr, &env)?;
                    env.retain(|(n, _)| n != name);
                    env.push((name.clone(), value));
                }
                Statement::Command {
                    verb,
                    target,
                    count,
                    line,
                } => {
                    let ideal = eval(target, &env)?;
                    let text = run_command(*verb, &ideal, *count).map_err(|e| match e {
                        Error::Parse { .. } => e,
                        other => Error::InvalidArgument(format!("line {line}: {other}")),
                    })?;
                    out.push(format!("{}: {text}", verb.word()));
                }
            }
        }
        Ok(out)
    }
}

fn read_word(cur: &mut Cursor<'_>) -> Result<String> {
    let mut word = cur.ident()?;
    while cur.peek() == Some('-') {
        cur.bump();
        word.push('-');
        word.push_str(&cur.ident()?);
    }
    Ok(word)
}

fn small_uint(cur: &mut Cursor<'_>) -> Result<u32> {
    let v = cur.uint()?;
    u32::try_from(v).map_err(|_| cur.error("integer out of range"))
}

fn parse_expr(
    ctx: &Arc<RingContext>,
    cur: &mut Cursor<'_>,
    bound: &HashSet<String>,
) -> Result<Expr> {
    let mut lhs = parse_term(ctx, cur, bound)?;
    loop {
        cur.skip_ws();
        let op = match cur.peek() {
            Some('+') => BinaryOp::Sum,
            Some('*') => BinaryOp::Product,
            Some('&') => BinaryOp::Intersection,
            Some(':') => BinaryOp::Colon,
            _ => return Ok(lhs),
        };
        cur.bump();
        let rhs = parse_term(ctx, cur, bound)?;
        lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
    }
}

fn parse_term(
    ctx: &Arc<RingContext>,
    cur: &mut Cursor<'_>,
    bound: &HashSet<String>,
) -> Result<Expr> {
    let mut e = parse_primary(ctx, cur, bound)?;
    while cur.eat('^') {
        let k = small_uint(cur)?;
        e = Expr::Power(Box::new(e), k);
    }
    Ok(e)
}

fn parse_primary(
    ctx: &Arc<RingContext>,
    cur: &mut Cursor<'_>,
    bound: &HashSet<String>,
) -> Result<Expr> {
    cur.skip_ws();
    match cur.peek() {
        Some('(') => Ok(Expr::Literal(parse_ideal_at(ctx, cur)?)),
        Some('[') => {
            cur.bump();
            let e = parse_expr(ctx, cur, bound)?;
            cur.expect(']')?;
            Ok(e)
        }
        _ => {
            let (line, column) = cur.position();
            let name = cur.ident()?;
            if name == "rad" && cur.eat('[') {
                let e = parse_expr(ctx, cur, bound)?;
                cur.expect(']')?;
                return Ok(Expr::Radical(Box::new(e)));
            }
            if !bound.contains(&name) {
                return Err(Error::Parse {
                    line,
                    column,
                    message: format!("`{name}` is used before it is bound"),
                });
            }
            Ok(Expr::Name(name))
        }
    }
}

fn eval(expr: &Expr, env: &[(String, MonomialIdeal)]) -> Result<MonomialIdeal> {
    Ok(match expr {
        Expr::Literal(i) => i.clone(),
        Expr::Name(n) => env
            .iter()
            .rev()
            .find(|(k, _)| k == n)
            .map(|(_, v)| v.clone())
            .expect("names are checked while parsing"),
        Expr::Power(e, k) => eval(e, env)?.power(*k)?,
        Expr::Radical(e) => eval(e, env)?.radical(),
        Expr::Binary(op, a, b) => {
            let (a, b) = (eval(a, env)?, eval(b, env)?);
            match op {
                BinaryOp::Sum => a.sum(&b)?,
                BinaryOp::Product => a.product(&b)?,
                BinaryOp::Intersection => a.intersection(&b)?,
                BinaryOp::Colon => a.colon_ideal(&b)?,
            }
        }
    })
}

fn run_command(verb: Verb, ideal: &MonomialIdeal, count: Option<u32>) -> Result<String> {
    let ctx = ideal.context();
    Ok(match verb {
        Verb::Print | Verb::Mingen => ideal.to_string(),
        Verb::Radical => ideal.radical().to_string(),
        Verb::Ass => ass_primes(ideal)?.to_string(),
        Verb::AssSeq => {
            let seq = ass_sequence(ideal, count.unwrap_or(1))?;
            seq.sets
                .iter()
                .enumerate()
                .map(|(k, a)| format!("s={} {a}", k + 1))
                .collect::<Vec<_>>()
                .join("; ")
        }
        Verb::Decompose => {
            let comps = irreducible_decomposition(ideal)?;
            comps
                .iter()
                .map(|c| c.display(ctx).to_string())
                .collect::<Vec<_>>()
                .join(" & ")
        }
        Verb::Socle => socle_colon(ideal)?.to_string(),
        Verb::Corners => {
            let corners = corner_elements(ideal)?;
            let texts: Vec<String> = corners.iter().map(|c| c.monomial().to_text(ctx)).collect();
            format!("[{}]", texts.join(", "))
        }
    })
}
