//! Text descriptors for algebras and modules.
//!
//! ```text
//! algebra := simple ("o+" simple)*            simple := "sl2" | "slN"
//! module  := tensor ("o+" tensor)*
//! tensor  := factor ("(x)" factor)*
//! factor  := atom | "(" module ")"
//! atom    := "V(n)" | "adjoint" | "natural" | "trivial(d)"
//! ```
//!
//! `⊕` and `⊗` are accepted for `o+` and `(x)`. A tensor product needs one
//! factor per simple summand of the algebra; factor `i` is a module over
//! summand `i`, and the product is a module over the whole direct sum.

use std::fmt;

use deltaderiv::lie::{sl2, sl2_module, tensor_modules};
use deltaderiv::{
    adjoint_module, direct_sum_algebras, direct_sum_modules, sl_n, trivial_module, LieAlgebra,
    LieError, Representation,
};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    /// Character offset into the input.
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DescriptorError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("semantic error: {0}")]
    Semantic(String),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// `sl(n)`, `n ≥ 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Simple(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraExpr(pub Vec<Simple>);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleAtom {
    Irrep(u32),
    Adjoint,
    Natural,
    Trivial(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleExpr {
    Atom(ModuleAtom),
    /// At least two summands, none of them a sum.
    Sum(Vec<ModuleExpr>),
    /// At least two factors, none of them a tensor.
    Tensor(Vec<ModuleExpr>),
}

impl fmt::Display for Simple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sl{}", self.0)
    }
}

impl fmt::Display for AlgebraExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        join(f, &self.0, " o+ ")
    }
}

impl fmt::Display for ModuleAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleAtom::Irrep(n) => write!(f, "V({n})"),
            ModuleAtom::Adjoint => f.write_str("adjoint"),
            ModuleAtom::Natural => f.write_str("natural"),
            ModuleAtom::Trivial(d) => write!(f, "trivial({d})"),
        }
    }
}

impl fmt::Display for ModuleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleExpr::Atom(a) => a.fmt(f),
            ModuleExpr::Sum(parts) => join(f, parts, " o+ "),
            ModuleExpr::Tensor(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" (x) ")?;
                    }
                    if matches!(p, ModuleExpr::Sum(_)) {
                        write!(f, "({p})")?;
                    } else {
                        p.fmt(f)?;
                    }
                }
                Ok(())
            }
        }
    }
}

fn join<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T], sep: &str) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        x.fmt(f)?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    /// Parenthesised integer argument directly after a word, as in `V(3)`.
    Arg(String),
    Plus,
    Times,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let at = |i: usize, s: &str| {
        s.chars()
            .enumerate()
            .all(|(k, c)| chars.get(i + k) == Some(&c))
    };
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == '⊕' {
            out.push((i, Tok::Plus));
            i += 1;
        } else if c == '⊗' {
            out.push((i, Tok::Times));
            i += 1;
        } else if at(i, "o+") {
            out.push((i, Tok::Plus));
            i += 2;
        } else if at(i, "(x)") {
            out.push((i, Tok::Times));
            i += 3;
        } else if c == '(' {
            // `word(` with no space starts an argument
            if matches!(out.last(), Some((p, Tok::Word(w))) if p + w.chars().count() == i) {
                let start = i;
                let close = (i + 1..chars.len())
                    .find(|&k| chars[k] == ')')
                    .ok_or(ParseError {
                        position: start,
                        message: "unclosed argument".into(),
                    })?;
                let arg: String = chars[i + 1..close].iter().collect();
                out.push((start + 1, Tok::Arg(arg.trim().to_string())));
                i = close + 1;
            } else {
                out.push((i, Tok::Open));
                i += 1;
            }
        } else if c == ')' {
            out.push((i, Tok::Close));
            i += 1;
        } else if c.is_ascii_alphanumeric() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((start, Tok::Word(chars[start..i].iter().collect())));
        } else {
            return Err(ParseError {
                position: i,
                message: format!("unexpected character {c:?}"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: tokenize(text)?,
            pos: 0,
            end: text.chars().count(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.pos < self.toks.len() {
            return self.error("unexpected trailing input");
        }
        Ok(())
    }

    fn integer(&self, arg: &str, position: usize) -> Result<u64, ParseError> {
        arg.parse::<u64>().map_err(|_| ParseError {
            position,
            message: format!("expected a non-negative integer, found {arg:?}"),
        })
    }

    fn algebra(&mut self) -> Result<AlgebraExpr, ParseError> {
        let mut parts = Vec::new();
        loop {
            match self.peek() {
                Some(Tok::Open) => {
                    self.pos += 1;
                    parts.extend(self.algebra()?.0);
                    self.expect_close()?;
                }
                Some(Tok::Word(w)) => {
                    let Some(n) = w.strip_prefix("sl").and_then(|n| n.parse::<usize>().ok()) else {
                        return self.error(format!("expected an algebra `slN`, found {w:?}"));
                    };
                    if n < 2 {
                        return self.error(format!("sl{n} is not simple; need N ≥ 2"));
                    }
                    parts.push(Simple(n));
                    self.pos += 1;
                }
                Some(Tok::Times) => {
                    return self.error("tensor products of algebras are not defined")
                }
                _ => return self.error("expected an algebra"),
            }
            if self.peek() == Some(&Tok::Plus) {
                self.pos += 1;
            } else {
                return Ok(AlgebraExpr(parts));
            }
        }
    }

    fn expect_close(&mut self) -> Result<(), ParseError> {
        if self.peek() == Some(&Tok::Close) {
            self.pos += 1;
            Ok(())
        } else {
            self.error("expected `)`")
        }
    }

    fn module(&mut self) -> Result<ModuleExpr, ParseError> {
        let mut parts = Vec::new();
        loop {
            match self.tensor()? {
                ModuleExpr::Sum(inner) => parts.extend(inner),
                other => parts.push(other),
            }
            if self.peek() == Some(&Tok::Plus) {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            ModuleExpr::Sum(parts)
        })
    }

    fn tensor(&mut self) -> Result<ModuleExpr, ParseError> {
        let mut parts = Vec::new();
        loop {
            match self.factor()? {
                ModuleExpr::Tensor(inner) => parts.extend(inner),
                other => parts.push(other),
            }
            if self.peek() == Some(&Tok::Times) {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            ModuleExpr::Tensor(parts)
        })
    }

    fn factor(&mut self) -> Result<ModuleExpr, ParseError> {
        let word_at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Open) => {
                self.pos += 1;
                let inner = self.module()?;
                self.expect_close()?;
                Ok(inner)
            }
            Some(Tok::Word(w)) => {
                self.pos += 1;
                let arg = match self.peek().cloned() {
                    Some(Tok::Arg(a)) => {
                        let at = self.offset();
                        self.pos += 1;
                        Some((a, at))
                    }
                    _ => None,
                };
                let atom = match (w.as_str(), arg) {
                    ("V", Some((a, at))) => {
                        let n = self.integer(&a, at)?;
                        ModuleAtom::Irrep(u32::try_from(n).map_err(|_| ParseError {
                            position: at,
                            message: "highest weight too large".into(),
                        })?)
                    }
                    ("trivial", Some((a, at))) => {
                        ModuleAtom::Trivial(self.integer(&a, at)? as usize)
                    }
                    ("adjoint", None) => ModuleAtom::Adjoint,
                    ("natural", None) => ModuleAtom::Natural,
                    ("V" | "trivial", None) => {
                        return Err(ParseError {
                            position: word_at,
                            message: format!("`{w}` needs an argument, e.g. `{w}(1)`"),
                        })
                    }
                    (w, _) if w.starts_with("sl") => {
                        return Err(ParseError {
                            position: word_at,
                            message: format!("`{w}` is an algebra, expected a module"),
                        })
                    }
                    (w, _) => {
                        return Err(ParseError {
                            position: word_at,
                            message: format!("unknown module {w:?}"),
                        })
                    }
                };
                Ok(ModuleExpr::Atom(atom))
            }
            _ => self.error("expected a module"),
        }
    }
}

pub fn parse_algebra(text: &str) -> Result<AlgebraExpr, ParseError> {
    let mut p = Parser::new(text)?;
    let a = p.algebra()?;
    p.finish()?;
    Ok(a)
}

pub fn parse_module(text: &str) -> Result<ModuleExpr, ParseError> {
    let mut p = Parser::new(text)?;
    let m = p.module()?;
    p.finish()?;
    Ok(m)
}

/// An algebra and a module over it, both given as descriptors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Descriptor {
    pub algebra: AlgebraExpr,
    pub module: ModuleExpr,
}

/// Parses and checks an algebra/module pair.
pub fn parse_descriptor(algebra: &str, module: &str) -> Result<Descriptor, DescriptorError> {
    let d = Descriptor {
        algebra: parse_algebra(algebra)?,
        module: parse_module(module)?,
    };
    d.check()?;
    Ok(d)
}

fn simple_algebra(s: Simple) -> Result<LieAlgebra, LieError> {
    Ok(if s.0 == 2 { sl2() } else { sl_n(s.0)?.0 })
}

impl AlgebraExpr {
    pub fn build(&self) -> Result<LieAlgebra, DescriptorError> {
        let parts = self
            .0
            .iter()
            .map(|s| simple_algebra(*s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(direct_sum_algebras(&parts.iter().collect::<Vec<_>>())?)
    }
}

/// Where a module expression lives: the whole algebra, or one summand of it.
#[derive(Clone, Copy)]
enum Scope<'a> {
    Whole(&'a [Simple]),
    Summand(Simple),
}

fn semantic<T>(msg: String) -> Result<T, DescriptorError> {
    Err(DescriptorError::Semantic(msg))
}

impl Descriptor {
    /// Validates without building anything.
    pub fn check(&self) -> Result<(), DescriptorError> {
        check_module(&self.module, Scope::Whole(&self.algebra.0))
    }

    pub fn build(&self) -> Result<(LieAlgebra, Representation), DescriptorError> {
        self.check()?;
        let algebra = self.algebra.build()?;
        let module = build_module(&self.module, Scope::Whole(&self.algebra.0), &algebra)?;
        Ok((algebra, module))
    }
}

fn single(scope: Scope<'_>) -> Option<Simple> {
    match scope {
        Scope::Summand(s) => Some(s),
        Scope::Whole([s]) => Some(*s),
        Scope::Whole(_) => None,
    }
}

fn check_module(expr: &ModuleExpr, scope: Scope<'_>) -> Result<(), DescriptorError> {
    match expr {
        ModuleExpr::Atom(a) => match (a, single(scope)) {
            (ModuleAtom::Irrep(_), Some(Simple(2))) => Ok(()),
            (ModuleAtom::Irrep(_), Some(s)) => {
                semantic(format!("{a} is an sl2 module, not an {s} module"))
            }
            (ModuleAtom::Natural, Some(_)) => Ok(()),
            (ModuleAtom::Irrep(_) | ModuleAtom::Natural, None) => semantic(format!(
                "{a} needs a simple algebra; over a direct sum use one tensor factor per summand"
            )),
            (ModuleAtom::Adjoint | ModuleAtom::Trivial(_), _) => Ok(()),
        },
        ModuleExpr::Sum(parts) => parts.iter().try_for_each(|p| check_module(p, scope)),
        ModuleExpr::Tensor(parts) => match scope {
            Scope::Whole(simples) if simples.len() == parts.len() => parts
                .iter()
                .zip(simples)
                .try_for_each(|(p, s)| check_module(p, Scope::Summand(*s))),
            Scope::Whole(simples) => semantic(format!(
                "tensor product has {} factors but the algebra has {} simple summands",
                parts.len(),
                simples.len()
            )),
            Scope::Summand(s) => semantic(format!(
                "tensor product inside a factor over {s}; factors must be modules over one summand"
            )),
        },
    }
}

fn build_module(
    expr: &ModuleExpr,
    scope: Scope<'_>,
    algebra: &LieAlgebra,
) -> Result<Representation, DescriptorError> {
    Ok(match expr {
        ModuleExpr::Atom(a) => match a {
            ModuleAtom::Adjoint => adjoint_module(algebra),
            ModuleAtom::Trivial(d) => trivial_module(algebra, *d),
            ModuleAtom::Irrep(n) => sl2_module(*n as i64)?,
            ModuleAtom::Natural => match single(scope) {
                Some(Simple(2)) => sl2_module(1)?,
                Some(Simple(m)) => sl_n(m)?.1,
                None => unreachable!("checked"),
            },
        },
        ModuleExpr::Sum(parts) => {
            let built = parts
                .iter()
                .map(|p| build_module(p, scope, algebra))
                .collect::<Result<Vec<_>, _>>()?;
            direct_sum_modules(&built.iter().collect::<Vec<_>>())?
        }
        ModuleExpr::Tensor(parts) => {
            let Scope::Whole(simples) = scope else {
                unreachable!("checked")
            };
            let mut built = Vec::with_capacity(parts.len());
            for (p, s) in parts.iter().zip(simples) {
                let local = simple_algebra(*s)?;
                built.push(build_module(p, Scope::Summand(*s), &local)?);
            }
            tensor_modules(&built.iter().collect::<Vec<_>>())?
        }
    })
}
