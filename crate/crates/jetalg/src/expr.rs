//! Expression syntax shared by every algebra.
//!
//! ```text
//! expr    := dotted (('+' | '-') dotted)*
//! dotted  := term (('.' | '(x)' | '⊗') term)?
//! term    := unary ('*' unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' exponent)?
//! exponent:= ['-'] INT | '(' ['-'] INT ')'
//! primary := NUMBER | t1 | t2 | d1 | d2 | X1 '(' pair ')' | X2 '(' pair ')'
//!          | '(' expr ')' | '[' expr ',' expr ']'
//! pair    := sint ',' sint | '(' sint ',' sint ')'
//! ```
//!
//! `NUMBER` is an integer or a rational literal `p/q` written without spaces.

use std::fmt;

use jetalg_core::{Axis, Rat};
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    T1,
    T2,
    D1,
    D2,
    X(Axis, i64, i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Rat),
    Atom(Atom),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Bracket(Box<Expr>, Box<Expr>),
    /// `f . X`, an element of `A ⊗ U(g)`.
    Dot(Box<Expr>, Box<Expr>),
    /// `d (x) y`, an element of `D ⊗ U(L)`.
    Tensor(Box<Expr>, Box<Expr>),
}

impl Expr {
    /// True if `pred` holds for any node in the tree.
    pub fn any(&self, pred: &impl Fn(&Expr) -> bool) -> bool {
        if pred(self) {
            return true;
        }
        match self {
            Expr::Num(_) | Expr::Atom(_) => false,
            Expr::Neg(a) | Expr::Pow(a, _) => a.any(pred),
            Expr::Add(a, b)
            | Expr::Sub(a, b)
            | Expr::Mul(a, b)
            | Expr::Bracket(a, b)
            | Expr::Dot(a, b)
            | Expr::Tensor(a, b) => a.any(pred) || b.any(pred),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("syntax error at {line}:{column}: expected {}, found {found}", .expected.join(" or "))]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ratio(BigInt, BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Dot,
    Tensor,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "integer {}", n),
            Tok::Ratio(p, q) => write!(f, "rational {}/{}", p, q),
            Tok::Ident(s) => write!(f, "'{}'", s),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::LBracket => f.write_str("'['"),
            Tok::RBracket => f.write_str("']'"),
            Tok::Comma => f.write_str("','"),
            Tok::Dot => f.write_str("'.'"),
            Tok::Tensor => f.write_str("'(x)'"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, SyntaxError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, column);
        let mut advance = |n: usize, i: &mut usize| {
            *i += n;
            column += n;
        };
        if c == '\n' {
            i += 1;
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            advance(1, &mut i);
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                advance(1, &mut i);
            }
            let num: String = chars[start..i].iter().collect();
            let num: BigInt = num.parse().expect("digits");
            if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                advance(1, &mut i);
                let s = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    advance(1, &mut i);
                }
                let den: String = chars[s..i].iter().collect();
                let den: BigInt = den.parse().expect("digits");
                if den == BigInt::from(0) {
                    return Err(SyntaxError {
                        line: l0,
                        column: c0,
                        expected: vec!["nonzero denominator".into()],
                        found: "0".into(),
                    });
                }
                Tok::Ratio(num, den)
            } else {
                Tok::Int(num)
            }
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                advance(1, &mut i);
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else {
            let tok = match c {
                '+' => Tok::Plus,
                '-' | '−' => Tok::Minus,
                '*' => Tok::Star,
                '^' => Tok::Caret,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                ',' => Tok::Comma,
                '.' | '·' => Tok::Dot,
                '⊗' => Tok::Tensor,
                '(' => {
                    // "(x)" is the tensor sign; there is no variable named x
                    let rest: String = chars[i + 1..].iter().take(8).collect();
                    let trimmed = rest.trim_start();
                    if let Some(after) = trimmed.strip_prefix('x') {
                        if after.trim_start().starts_with(')') {
                            let ws1 = rest.len() - trimmed.len();
                            let ws2 = after.len() - after.trim_start().len();
                            let n = 1 + ws1 + 1 + ws2 + 1;
                            advance(n, &mut i);
                            out.push(Spanned { tok: Tok::Tensor, line: l0, column: c0 });
                            continue;
                        }
                    }
                    Tok::LParen
                }
                other => {
                    return Err(SyntaxError {
                        line: l0,
                        column: c0,
                        expected: vec!["a token".into()],
                        found: format!("'{}'", other),
                    })
                }
            };
            advance(1, &mut i);
            tok
        };
        out.push(Spanned { tok, line: l0, column: c0 });
    }
    out.push(Spanned { tok: Tok::Eof, line, column });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> SyntaxError {
        let s = &self.toks[self.pos];
        SyntaxError {
            line: s.line,
            column: s.column,
            expected: expected.iter().map(|e| e.to_string()).collect(),
            found: s.tok.to_string(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &str) -> Result<(), SyntaxError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.dotted()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.dotted()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.dotted()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn dotted(&mut self) -> Result<Expr, SyntaxError> {
        let lhs = self.term()?;
        match self.peek() {
            Tok::Dot => {
                self.bump();
                Ok(Expr::Dot(Box::new(lhs), Box::new(self.term()?)))
            }
            Tok::Tensor => {
                self.bump();
                Ok(Expr::Tensor(Box::new(lhs), Box::new(self.term()?)))
            }
            _ => Ok(lhs),
        }
    }

    fn term(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, SyntaxError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, SyntaxError> {
        let base = self.primary()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let n = if *self.peek() == Tok::LParen {
            self.bump();
            let n = self.signed_int()?;
            self.expect(Tok::RParen, "')'")?;
            n
        } else {
            self.signed_int()?
        };
        Ok(Expr::Pow(Box::new(base), n))
    }

    fn signed_int(&mut self) -> Result<i64, SyntaxError> {
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        match self.peek().clone() {
            Tok::Int(n) => {
                let v: i64 = n.try_into().map_err(|_| self.error(&["integer that fits in 64 bits"]))?;
                self.bump();
                Ok(if neg { -v } else { v })
            }
            _ => Err(self.error(&["integer"])),
        }
    }

    fn pair(&mut self) -> Result<(i64, i64), SyntaxError> {
        let wrapped = *self.peek() == Tok::LParen;
        if wrapped {
            self.bump();
        }
        let a = self.signed_int()?;
        self.expect(Tok::Comma, "','")?;
        let b = self.signed_int()?;
        if wrapped {
            self.expect(Tok::RParen, "')'")?;
        }
        Ok((a, b))
    }

    fn primary(&mut self) -> Result<Expr, SyntaxError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Num(Rat::from_integer(n)))
            }
            Tok::Ratio(p, q) => {
                self.bump();
                Ok(Expr::Num(Rat::new(p, q)))
            }
            Tok::Ident(name) => {
                let atom = match name.as_str() {
                    "t1" => Atom::T1,
                    "t2" => Atom::T2,
                    "d1" => Atom::D1,
                    "d2" => Atom::D2,
                    "X1" | "X2" => {
                        self.bump();
                        let k = if name == "X1" { Axis::One } else { Axis::Two };
                        self.expect(Tok::LParen, "'('")?;
                        let (m1, m2) = self.pair()?;
                        self.expect(Tok::RParen, "')'")?;
                        return Ok(Expr::Atom(Atom::X(k, m1, m2)));
                    }
                    _ => return Err(self.error(&["t1", "t2", "d1", "d2", "X1", "X2"])),
                };
                self.bump();
                Ok(Expr::Atom(atom))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::LBracket => {
                self.bump();
                let a = self.expr()?;
                self.expect(Tok::Comma, "','")?;
                let b = self.expr()?;
                self.expect(Tok::RBracket, "']'")?;
                Ok(Expr::Bracket(Box::new(a), Box::new(b)))
            }
            _ => Err(self.error(&["number", "atom", "'('", "'['"])),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr, SyntaxError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(&["operator", "end of input"]));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atoms() {
        assert_eq!(parse_expr("X2(0,1)"), Ok(Expr::Atom(Atom::X(Axis::Two, 0, 1))));
        assert_eq!(parse_expr("X2((0,1))"), Ok(Expr::Atom(Atom::X(Axis::Two, 0, 1))));
        assert_eq!(parse_expr(" X1( -3 , 2 ) "), Ok(Expr::Atom(Atom::X(Axis::One, -3, 2))));
    }

    #[test]
    fn bracket_over_dot() {
        let e = parse_expr("[t1^-1 . t1*d1, t1]").unwrap();
        let Expr::Bracket(a, b) = e else { panic!("not a bracket") };
        assert!(matches!(*a, Expr::Dot(_, _)));
        assert_eq!(*b, Expr::Atom(Atom::T1));
    }

    #[test]
    fn non_integer_exponent_rejected() {
        let err = parse_expr("t1^(1/2)").unwrap_err();
        assert_eq!((err.line, err.column), (1, 5));
        assert_eq!(err.expected, vec!["integer".to_string()]);
    }

    #[test]
    fn precedence() {
        // -t1^2 is -(t1^2); a*b^2 binds the power first
        let e = parse_expr("-t1^2").unwrap();
        assert!(matches!(e, Expr::Neg(ref inner) if matches!(**inner, Expr::Pow(_, 2))));
        let e = parse_expr("1 . t2*d2 - t2 . d2").unwrap();
        let Expr::Sub(a, b) = e else { panic!("not a difference") };
        assert!(matches!(*a, Expr::Dot(_, _)));
        assert!(matches!(*b, Expr::Dot(_, _)));
    }

    #[test]
    fn tensor_sign() {
        let e = parse_expr("(t2*d2) (x) 1 + (1) ( x ) X2(0,1)").unwrap();
        let Expr::Add(a, b) = e else { panic!("not a sum") };
        assert!(matches!(*a, Expr::Tensor(_, _)));
        assert!(matches!(*b, Expr::Tensor(_, _)));
        assert!(matches!(parse_expr("d1 ⊗ X1(1,0)"), Ok(Expr::Tensor(_, _))));
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_expr("t1 +\n  * t2").unwrap_err();
        assert_eq!((err.line, err.column), (2, 3));
        assert!(parse_expr("t3").is_err());
        assert!(parse_expr("[t1, t2").is_err());
        assert!(parse_expr("1/0").is_err());
        assert!(parse_expr("t1 t2").is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_expr("3/6"), Ok(Expr::Num(Rat::new(1.into(), 2.into()))));
    }
}
