use std::collections::HashMap;
use std::marker::PhantomData;

use crate::bilattice::{parse_rational, Bilattice, BinOp, ValueError};

use super::ast::{Atom, Formula, Pos, Program, Quantifier, Rule, Term};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("{pos}: syntax error: {message}")]
    Syntax { pos: Pos, message: String },
    #[error("{pos}: function symbol `{name}` is not supported")]
    FunctionSymbol { pos: Pos, name: String },
    #[error("{pos}: variable `{var}` occurs free in the body but not in the head `{head}`")]
    UnboundVariable { pos: Pos, var: String, head: String },
    #[error("{pos}: {source}")]
    Value { pos: Pos, source: ValueError },
    #[error("{pos}: predicate `{predicate}` used with {found} arguments, previously {expected}")]
    ArityMismatch { pos: Pos, predicate: String, expected: usize, found: usize },
}

impl ParseError {
    pub fn pos(&self) -> Pos {
        match self {
            ParseError::Syntax { pos, .. }
            | ParseError::FunctionSymbol { pos, .. }
            | ParseError::UnboundVariable { pos, .. }
            | ParseError::Value { pos, .. }
            | ParseError::ArityMismatch { pos, .. } => *pos,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Var(String),
    Number(String),
    Hash(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Dot,
    Colon,
    Arrow,
    Tilde,
    Amp,
    Bar,
    Star,
    Plus,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) | Tok::Var(s) | Tok::Number(s) => format!("`{s}`"),
            Tok::Hash(s) => format!("`#{s}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Arrow => "`<-`".into(),
            Tok::Tilde => "`~`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Bar => "`|`".into(),
            Tok::Star => "`*`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let mut bracket_depth = 0usize;

    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        let start = i;
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '%' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let next = chars.get(i + 1).copied();
        let tok = if c.is_ascii_digit() || (c == '.' && bracket_depth > 0) {
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.' || chars[i] == '/') {
                i += 1;
            }
            Tok::Number(chars[start..i].iter().collect())
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && is_ident_char(chars[i]) {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            if c.is_ascii_uppercase() || c == '_' {
                Tok::Var(word)
            } else {
                Tok::Ident(word)
            }
        } else if c == '#' {
            i += 1;
            while i < chars.len() && is_ident_char(chars[i]) {
                i += 1;
            }
            Tok::Hash(chars[start + 1..i].iter().collect())
        } else if c == '<' && next == Some('-') {
            i += 2;
            Tok::Arrow
        } else {
            i += 1;
            match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => {
                    bracket_depth += 1;
                    Tok::LBracket
                }
                ']' => {
                    bracket_depth = bracket_depth.saturating_sub(1);
                    Tok::RBracket
                }
                ',' => Tok::Comma,
                '.' => Tok::Dot,
                ':' => Tok::Colon,
                '~' => Tok::Tilde,
                '&' => Tok::Amp,
                '|' => Tok::Bar,
                '*' => Tok::Star,
                '+' => Tok::Plus,
                other => {
                    return Err(ParseError::Syntax { pos, message: format!("unexpected character `{other}`") })
                }
            }
        };
        col += i - start;
        out.push((tok, pos));
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

struct Parser<V> {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    _kind: PhantomData<V>,
}

impl<V: Bilattice> Parser<V> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, expected: &str) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos(),
            message: format!("expected {expected}, found {}", self.peek().describe()),
        })
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.error(&tok.describe())
        }
    }

    fn program(&mut self) -> Result<Program<V>, ParseError> {
        let mut rules = Vec::new();
        while *self.peek() != Tok::Eof {
            rules.push(self.rule()?);
        }
        Ok(Program::new(rules))
    }

    fn rule(&mut self) -> Result<Rule<V>, ParseError> {
        let head = match self.peek() {
            Tok::Ident(_) => self.atom()?,
            _ => return self.error("an atom as rule head"),
        };
        let body = if *self.peek() == Tok::Arrow {
            self.bump();
            self.formula()?
        } else {
            Formula::Const(V::tt())
        };
        self.expect(Tok::Dot)?;

        let head_vars: Vec<&str> = head.vars().collect();
        if let Some(var) = body.free_vars().into_iter().find(|v| !head_vars.contains(&v.as_str())) {
            let pos = body
                .atoms()
                .into_iter()
                .find(|a| a.vars().any(|x| x == var))
                .map(|a| a.pos)
                .unwrap_or(head.pos);
            return Err(ParseError::UnboundVariable { pos, var, head: head.to_string() });
        }
        Ok(Rule { head, body })
    }

    fn formula(&mut self) -> Result<Formula<V>, ParseError> {
        if let Tok::Ident(word) = self.peek() {
            let q = match word.as_str() {
                "exists" => Some(Quantifier::Exists),
                "forall" => Some(Quantifier::Forall),
                _ => None,
            };
            // `exists` is still usable as a predicate name when not followed by a variable
            if let (Some(q), Some((Tok::Var(v), _))) = (q, self.toks.get(self.at + 1)) {
                let v = v.clone();
                self.bump();
                self.bump();
                self.expect(Tok::Colon)?;
                let body = self.formula()?;
                return Ok(Formula::Quant(q, v, Box::new(body)));
            }
        }
        self.binary(1)
    }

    fn binary(&mut self, level: u8) -> Result<Formula<V>, ParseError> {
        if level > 4 {
            return self.unary();
        }
        let (tok, op) = match level {
            1 => (Tok::Plus, BinOp::JoinK),
            2 => (Tok::Star, BinOp::MeetK),
            3 => (Tok::Bar, BinOp::JoinT),
            _ => (Tok::Amp, BinOp::MeetT),
        };
        let mut left = self.binary(level + 1)?;
        while *self.peek() == tok {
            self.bump();
            let right = self.binary(level + 1)?;
            left = Formula::binary(op, left, right);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula<V>, ParseError> {
        match self.peek().clone() {
            Tok::Tilde => {
                self.bump();
                Ok(Formula::neg(self.unary()?))
            }
            Tok::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Tok::Ident(_) => Ok(Formula::Atom(self.atom()?)),
            Tok::Hash(name) => {
                let pos = self.pos();
                self.bump();
                let v = match name.as_str() {
                    "t" => V::tt(),
                    "f" => V::ff(),
                    "top" => V::top(),
                    "bot" => V::bot(),
                    _ => {
                        return Err(ParseError::Syntax { pos, message: format!("unknown constant `#{name}`") })
                    }
                };
                Ok(Formula::Const(v))
            }
            Tok::LBracket => self.interval(),
            _ => self.error("a formula"),
        }
    }

    fn interval(&mut self) -> Result<Formula<V>, ParseError> {
        let pos = self.pos();
        self.expect(Tok::LBracket)?;
        let lo = self.number()?;
        self.expect(Tok::Comma)?;
        let hi = self.number()?;
        self.expect(Tok::RBracket)?;
        let value_err = |source| ParseError::Value { pos, source };
        let lo = parse_rational(&lo).map_err(value_err)?;
        let hi = parse_rational(&hi).map_err(value_err)?;
        V::from_interval(lo, hi).map(Formula::Const).map_err(value_err)
    }

    fn number(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Number(n) => {
                self.bump();
                Ok(n)
            }
            _ => self.error("a number"),
        }
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        let (tok, pos) = self.bump();
        let Tok::Ident(predicate) = tok else { unreachable!("caller checked for an identifier") };
        let mut args = Vec::new();
        if *self.peek() == Tok::LParen {
            self.bump();
            loop {
                args.push(self.term()?);
                match self.peek() {
                    Tok::Comma => {
                        self.bump();
                    }
                    Tok::RParen => {
                        self.bump();
                        break;
                    }
                    _ => return self.error("`,` or `)`"),
                }
            }
        }
        Ok(Atom { predicate, args, pos })
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Var(v) => {
                self.bump();
                Ok(Term::Var(v))
            }
            Tok::Ident(c) => {
                self.bump();
                if *self.peek() == Tok::LParen {
                    return Err(ParseError::FunctionSymbol { pos, name: c });
                }
                Ok(Term::Const(c))
            }
            _ => self.error("a variable or constant"),
        }
    }
}

fn check_arities<V>(program: &Program<V>) -> Result<(), ParseError> {
    let mut seen: HashMap<&str, usize> = HashMap::new();
    let atoms = program.rules.iter().flat_map(|r| std::iter::once(&r.head).chain(r.body.atoms()));
    for a in atoms {
        let expected = *seen.entry(a.predicate.as_str()).or_insert(a.args.len());
        if expected != a.args.len() {
            return Err(ParseError::ArityMismatch {
                pos: a.pos,
                predicate: a.predicate.clone(),
                expected,
                found: a.args.len(),
            });
        }
    }
    Ok(())
}

/// Parses program text. Constants are read in the bilattice `V`, so
/// interval constants are rejected when `V` is [`FourValue`](crate::bilattice::FourValue).
pub fn parse_program<V: Bilattice>(text: &str) -> Result<Program<V>, ParseError> {
    let mut p = Parser { toks: lex(text)?, at: 0, _kind: PhantomData };
    let program = p.program()?;
    check_arities(&program)?;
    Ok(program)
}
