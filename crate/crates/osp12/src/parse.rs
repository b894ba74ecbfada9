//! Surface syntax for algebra expressions.
//!
//! ```text
//! sum    := ['-'] tensor (('+' | '-') tensor)*
//! tensor := term ('#' term)*
//! term   := factor ('*'? factor)*
//! factor := atom ('^' nat)*
//! atom   := rational | ident | '[' sum ',' sum ']' | '{' sum ',' sum '}' | '(' sum ')'
//! ident  := Ep | Em | Fp | Fm | H | P | C
//! ```
//!
//! `#` is the tensor separator; it binds tighter than `+`/`-` and looser than
//! `*`, so `Fp # P + 1 # Fp` is the two-term sum `(Fp⊗P) + (1⊗Fp)`. `*` may
//! be omitted (juxtaposition). Rationals are `p` or `p/q`. Whitespace is
//! insignificant; errors carry line and column.

use crate::error::{Error, Result};
use crate::expr::Expression;
use crate::pbw::Generator;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Hash,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

struct Scanner {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
}

impl Scanner {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> char {
        let c = self.chars[self.pos];
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        c
    }
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let mut sc = Scanner {
        chars: text.chars().collect(),
        pos: 0,
        line: 1,
        col: 1,
    };
    while let Some(c) = sc.peek() {
        let (tline, tcol) = (sc.line, sc.col);
        if c.is_whitespace() {
            sc.bump();
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let mut s = String::new();
            while sc.peek().is_some_and(|c| c.is_ascii_digit()) {
                s.push(sc.bump());
            }
            Tok::Int(s)
        } else if c.is_ascii_alphabetic() {
            let mut s = String::new();
            while sc.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
                s.push(sc.bump());
            }
            Tok::Ident(s)
        } else {
            let sym = sc.bump();
            match sym {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '#' => Tok::Hash,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                other => {
                    return Err(Error::Parse {
                        line: tline,
                        col: tcol,
                        msg: format!("unexpected character {other:?}"),
                    })
                }
            }
        };
        out.push(Spanned {
            tok,
            line: tline,
            col: tcol,
        });
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end_line: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|s| (s.line, s.col))
            .unwrap_or((self.end_line, self.end_col))
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        let (line, col) = self.here();
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn advance(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|s| s.tok.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    fn parse_sum(&mut self) -> Result<Expression> {
        let negated = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut acc = self.parse_tensor()?;
        if negated {
            acc = Expression::Neg(Box::new(acc));
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let rhs = self.parse_tensor()?;
                    acc = Expression::Add(Box::new(acc), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.parse_tensor()?;
                    acc = Expression::Sub(Box::new(acc), Box::new(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_tensor(&mut self) -> Result<Expression> {
        let first = self.parse_term()?;
        if self.peek() != Some(&Tok::Hash) {
            return Ok(first);
        }
        let mut parts = vec![first];
        while self.peek() == Some(&Tok::Hash) {
            self.pos += 1;
            parts.push(self.parse_term()?);
        }
        Ok(Expression::Tensor(parts))
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Int(_))
                | Some(Tok::Ident(_))
                | Some(Tok::LBracket)
                | Some(Tok::LBrace)
                | Some(Tok::LParen)
        )
    }

    fn parse_term(&mut self) -> Result<Expression> {
        let mut acc = self.parse_factor()?;
        loop {
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
                let rhs = self.parse_factor()?;
                acc = Expression::Mul(Box::new(acc), Box::new(rhs));
            } else if self.starts_factor() {
                let rhs = self.parse_factor()?;
                acc = Expression::Mul(Box::new(acc), Box::new(rhs));
            } else {
                return Ok(acc);
            }
        }
    }

    fn parse_factor(&mut self) -> Result<Expression> {
        let mut acc = self.parse_atom()?;
        while self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.advance() {
                Some(Tok::Int(s)) => {
                    let e: u32 = s
                        .parse()
                        .map_err(|_| self.err(format!("exponent {s} out of range")))?;
                    acc = Expression::Pow(Box::new(acc), e);
                }
                _ => return Err(self.err("expected a natural-number exponent after '^'")),
            }
        }
        Ok(acc)
    }

    fn parse_atom(&mut self) -> Result<Expression> {
        match self.peek().cloned() {
            Some(Tok::Int(s)) => {
                self.pos += 1;
                let num: num::BigInt = s.parse().expect("digits");
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.advance() {
                        Some(Tok::Int(d)) => {
                            let den: num::BigInt = d.parse().expect("digits");
                            if den == 0.into() {
                                return Err(self.err("zero denominator"));
                            }
                            Ok(Expression::Scalar(Scalar::new(num, den)))
                        }
                        _ => Err(self.err("expected an integer denominator after '/'")),
                    }
                } else {
                    Ok(Expression::Scalar(Scalar::from_integer(num)))
                }
            }
            Some(Tok::Ident(name)) => {
                let at = self.here();
                self.pos += 1;
                match name.as_str() {
                    "Ep" => Ok(Expression::Gen(Generator::Eplus)),
                    "Em" => Ok(Expression::Gen(Generator::Eminus)),
                    "Fp" => Ok(Expression::Gen(Generator::Fplus)),
                    "Fm" => Ok(Expression::Gen(Generator::Fminus)),
                    "H" => Ok(Expression::Gen(Generator::H)),
                    "P" => Ok(Expression::Gen(Generator::P)),
                    "C" => Ok(Expression::Casimir),
                    other => Err(Error::Parse {
                        line: at.0,
                        col: at.1,
                        msg: format!(
                            "unknown identifier {other:?} (expected Ep, Em, Fp, Fm, H, P or C)"
                        ),
                    }),
                }
            }
            Some(Tok::LBracket) => {
                self.pos += 1;
                let a = self.parse_sum()?;
                self.expect(Tok::Comma, "',' in commutator")?;
                let b = self.parse_sum()?;
                self.expect(Tok::RBracket, "']' closing commutator")?;
                Ok(Expression::Commutator(Box::new(a), Box::new(b)))
            }
            Some(Tok::LBrace) => {
                self.pos += 1;
                let a = self.parse_sum()?;
                self.expect(Tok::Comma, "',' in anticommutator")?;
                let b = self.parse_sum()?;
                self.expect(Tok::RBrace, "'}' closing anticommutator")?;
                Ok(Expression::Anticommutator(Box::new(a), Box::new(b)))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.parse_sum()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            _ => Err(self.err("expected a rational, identifier, bracket or '('")),
        }
    }
}

/// Parse a source string into an expression tree.
pub fn parse_expression(text: &str) -> Result<Expression> {
    let toks = lex(text)?;
    let end_line = text.lines().count().max(1);
    let end_col = text.lines().last().map_or(1, |l| l.chars().count() + 1);
    let mut p = Parser {
        toks,
        pos: 0,
        end_line,
        end_col,
    };
    let e = p.parse_sum()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input after expression"));
    }
    Ok(e)
}
