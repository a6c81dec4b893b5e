//! Ring and ideal expressions.
//!
//! ```text
//! ring  := Z<n> | prod(ring, ring, ...) | quot(ring, ideal) | idealize(n, d)
//!        | loc(ring, {lit, ...}) | table(path) | @name
//! ideal := (lit, ...) | lit
//! lit   := atom | (lit, lit, ...)
//! ```
//!
//! Atoms are integers or names such as `x+y` for table rings. `@name` is
//! shorthand for `table(@name)`, a bundled catalog ring.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Lit {
    Atom(String),
    /// At least two components.
    Tuple(Vec<Lit>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdealExpr {
    pub gens: Vec<Lit>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingExpr {
    Zn(usize),
    Prod(Vec<RingExpr>),
    Quot(Box<RingExpr>, IdealExpr),
    Idealize(usize, usize),
    Loc(Box<RingExpr>, Vec<Lit>),
    Table(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into `input`.
    pub pos: usize,
    pub message: String,
    pub input: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let col = self.input[..self.pos.min(self.input.len())].chars().count();
        write!(f, "{} at column {}\n  {}\n  {}^", self.message, col + 1, self.input, " ".repeat(col))
    }
}

impl std::error::Error for ParseError {}

impl fmt::Display for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lit::Atom(a) => f.write_str(a),
            Lit::Tuple(items) => write!(f, "({})", join(items)),
        }
    }
}

impl fmt::Display for IdealExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.gens))
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zn(n) => write!(f, "Z{n}"),
            RingExpr::Prod(fs) => write!(f, "prod({})", join(fs)),
            RingExpr::Quot(r, i) => write!(f, "quot({r},{i})"),
            RingExpr::Idealize(n, d) => write!(f, "idealize({n},{d})"),
            RingExpr::Loc(r, s) => write!(f, "loc({r},{{{}}})", join(s)),
            RingExpr::Table(p) => write!(f, "table({p})"),
        }
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn is_atom_char(c: u8) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, b'+' | b'-' | b'*' | b'^' | b'_' | b'.')
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

type PResult<T> = Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn err<T>(&self, pos: usize, message: impl Into<String>) -> PResult<T> {
        Err(ParseError { pos, message: message.into(), input: self.src.to_string() })
    }

    fn ws(&mut self) {
        while self.src.as_bytes().get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.src.as_bytes().get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> PResult<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => self.err(self.pos, format!("expected '{}', found '{}'", c as char, x as char)),
            None => self.err(self.pos, format!("expected '{}', found end of input", c as char)),
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn end(&mut self) -> PResult<()> {
        match self.peek() {
            None => Ok(()),
            Some(_) => self.err(self.pos, "unexpected trailing input"),
        }
    }

    fn word(&mut self) -> &'a str {
        self.ws();
        let start = self.pos;
        while self.src.as_bytes().get(self.pos).is_some_and(|&c| is_atom_char(c)) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn number(&mut self) -> PResult<usize> {
        self.ws();
        let start = self.pos;
        let w = self.word();
        match w.parse::<usize>() {
            Ok(n) => Ok(n),
            Err(_) if w.is_empty() => self.err(start, "expected a number"),
            Err(_) => self.err(start, format!("'{w}' is not a number")),
        }
    }

    fn ring(&mut self) -> PResult<RingExpr> {
        self.ws();
        let start = self.pos;
        if self.eat(b'@') {
            let name = self.word();
            if name.is_empty() {
                return self.err(self.pos, "expected a catalog name after '@'");
            }
            return Ok(RingExpr::Table(format!("@{name}")));
        }
        let w = self.word();
        if let Some(rest) = w.strip_prefix('Z').filter(|r| !r.is_empty() && r.bytes().all(|c| c.is_ascii_digit())) {
            let n: usize = match rest.parse() {
                Ok(n) => n,
                Err(_) => return self.err(start + 1, format!("'{rest}' is too large")),
            };
            if n < 2 {
                return self.err(start + 1, format!("Z{n}: need n >= 2"));
            }
            return Ok(RingExpr::Zn(n));
        }
        match w {
            "prod" | "quot" | "idealize" | "loc" | "table" => {}
            "" => return self.err(start, "expected a ring expression"),
            _ => return self.err(start, format!("unknown constructor '{w}'")),
        }
        self.expect(b'(')?;
        let expr = match w {
            "prod" => {
                let mut fs = vec![self.ring()?];
                while self.eat(b',') {
                    fs.push(self.ring()?);
                }
                if fs.len() < 2 {
                    return self.err(start, format!("prod takes at least 2 factors, got {}", fs.len()));
                }
                RingExpr::Prod(fs)
            }
            "quot" => {
                let r = self.ring()?;
                self.arity_comma(start, "quot", 2)?;
                let i = self.ideal()?;
                RingExpr::Quot(Box::new(r), i)
            }
            "idealize" => {
                let n = self.number()?;
                self.arity_comma(start, "idealize", 2)?;
                let d = self.number()?;
                RingExpr::Idealize(n, d)
            }
            "loc" => {
                let r = self.ring()?;
                self.arity_comma(start, "loc", 2)?;
                self.expect(b'{')?;
                let mut s = vec![self.lit()?];
                while self.eat(b',') {
                    s.push(self.lit()?);
                }
                self.expect(b'}')?;
                RingExpr::Loc(Box::new(r), s)
            }
            _ => {
                self.ws();
                let p0 = self.pos;
                let close = self.src[p0..].find(')').map(|k| p0 + k).unwrap_or(self.src.len());
                let path = self.src[p0..close].trim();
                if path.is_empty() {
                    return self.err(p0, "table needs a file path or @name");
                }
                self.pos = close;
                RingExpr::Table(path.to_string())
            }
        };
        if self.peek() == Some(b',') {
            return self.err(self.pos, format!("too many arguments to {w}"));
        }
        self.expect(b')')?;
        Ok(expr)
    }

    fn arity_comma(&mut self, start: usize, name: &str, n: usize) -> PResult<()> {
        if self.peek() == Some(b')') {
            return self.err(start, format!("{name} takes {n} arguments"));
        }
        self.expect(b',')
    }

    fn lit(&mut self) -> PResult<Lit> {
        if self.eat(b'(') {
            let mut items = vec![self.lit()?];
            while self.eat(b',') {
                items.push(self.lit()?);
            }
            self.expect(b')')?;
            // parentheses around a single literal only group
            return Ok(if items.len() == 1 { items.pop().expect("one item") } else { Lit::Tuple(items) });
        }
        self.ws();
        let start = self.pos;
        let w = self.word();
        if w.is_empty() {
            return match self.peek() {
                Some(c) => self.err(start, format!("expected an element, found '{}'", c as char)),
                None => self.err(start, "expected an element, found end of input"),
            };
        }
        Ok(Lit::Atom(w.to_string()))
    }

    fn ideal(&mut self) -> PResult<IdealExpr> {
        if self.eat(b'(') {
            let mut gens = vec![self.lit()?];
            while self.eat(b',') {
                gens.push(self.lit()?);
            }
            self.expect(b')')?;
            Ok(IdealExpr { gens })
        } else {
            Ok(IdealExpr { gens: vec![self.lit()?] })
        }
    }
}

pub fn parse_ring(text: &str) -> Result<RingExpr, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let r = p.ring()?;
    p.end()?;
    Ok(r)
}

pub fn parse_ideal(text: &str) -> Result<IdealExpr, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let i = p.ideal()?;
    p.end()?;
    Ok(i)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atom(s: &str) -> Lit {
        Lit::Atom(s.into())
    }

    #[test]
    fn rings() {
        assert_eq!(parse_ring("Z6").unwrap(), RingExpr::Zn(6));
        assert_eq!(parse_ring(" idealize( 12 , 6 ) ").unwrap(), RingExpr::Idealize(12, 6));
        assert_eq!(
            parse_ring("prod(Z2,Z2,Z2)").unwrap(),
            RingExpr::Prod(vec![RingExpr::Zn(2), RingExpr::Zn(2), RingExpr::Zn(2)])
        );
        assert_eq!(
            parse_ring("quot(Z12,(4))").unwrap(),
            RingExpr::Quot(Box::new(RingExpr::Zn(12)), IdealExpr { gens: vec![atom("4")] })
        );
        assert_eq!(parse_ring("loc(Z12,{4})").unwrap(), RingExpr::Loc(Box::new(RingExpr::Zn(12)), vec![atom("4")]));
        assert_eq!(parse_ring("@f2xy").unwrap(), RingExpr::Table("@f2xy".into()));
        assert_eq!(parse_ring("table(rings/f4.txt)").unwrap(), RingExpr::Table("rings/f4.txt".into()));
    }

    #[test]
    fn ideals() {
        assert_eq!(parse_ideal("(0)").unwrap().gens, [atom("0")]);
        assert_eq!(parse_ideal("(1,0,0)").unwrap().gens, [atom("1"), atom("0"), atom("0")]);
        assert_eq!(
            parse_ideal("((0,6))").unwrap().gens,
            [Lit::Tuple(vec![atom("0"), atom("6")])]
        );
        assert_eq!(parse_ideal("x+y").unwrap().gens, [atom("x+y")]);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_ring("prod(Z2,foo(3))").unwrap_err();
        assert_eq!((e.pos, e.message.as_str()), (8, "unknown constructor 'foo'"));
        let e = parse_ring("prod(Z2)").unwrap_err();
        assert!(e.message.contains("at least 2 factors"), "{e}");
        let e = parse_ring("idealize(12)").unwrap_err();
        assert_eq!(e.message, "idealize takes 2 arguments");
        let e = parse_ring("Z1").unwrap_err();
        assert_eq!(e.pos, 1);
        let e = parse_ring("Z6 Z7").unwrap_err();
        assert_eq!(e.pos, 3);
        assert!(e.to_string().ends_with("\n  Z6 Z7\n     ^"), "{e}");
        assert!(parse_ring("quot(Z6,(2),(3))").unwrap_err().message.contains("too many"));
    }
}
