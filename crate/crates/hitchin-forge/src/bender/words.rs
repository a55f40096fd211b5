//! Words in named generators: `a1 b1 a1^-1 b1^-1`, `(a1 b2)^3`, `[a1,b1][a2,b2]`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{Matrix, Ring};

/// A parsed group word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Word {
    /// A generator.
    Gen(String),
    /// A product, left to right; the empty product is the identity.
    Prod(Vec<Word>),
    /// An integer power.
    Pow(Box<Word>, i64),
    /// The commutator `[x, y] = x y x^-1 y^-1`.
    Comm(Box<Word>, Box<Word>),
}

impl Word {
    /// Parses a word. Factors are separated by spaces, `*` or `.`.
    pub fn parse(s: &str) -> Result<Word> {
        let mut p = Parser { chars: s.chars().collect(), pos: 0 };
        let w = p.product()?;
        p.skip_separators();
        if p.pos != p.chars.len() {
            return Err(Error::Parse(format!("unexpected {:?} at position {} in {s:?}", p.chars[p.pos], p.pos)));
        }
        Ok(w)
    }

    /// The identity word.
    pub fn identity() -> Word {
        Word::Prod(Vec::new())
    }

    /// The product `x1 x2 ... xk`.
    pub fn product(parts: Vec<Word>) -> Word {
        Word::Prod(parts)
    }

    /// Every generator name in the word, in order of first use.
    pub fn generators(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<String>) {
        match self {
            Word::Gen(g) => {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
            Word::Prod(v) => v.iter().for_each(|w| w.collect(out)),
            Word::Pow(w, _) => w.collect(out),
            Word::Comm(x, y) => {
                x.collect(out);
                y.collect(out);
            }
        }
    }

    /// Number of generator letters after expanding powers and commutators.
    pub fn length(&self) -> u64 {
        match self {
            Word::Gen(_) => 1,
            Word::Prod(v) => v.iter().map(Word::length).sum(),
            Word::Pow(w, k) => w.length() * k.unsigned_abs(),
            Word::Comm(x, y) => 2 * (x.length() + y.length()),
        }
    }

    /// Evaluates the word; `lookup` returns a generator's matrix and its inverse.
    pub fn eval<T: Ring>(
        &self,
        like: &Matrix<T>,
        lookup: &dyn Fn(&str) -> Result<(Matrix<T>, Matrix<T>)>,
    ) -> Result<(Matrix<T>, Matrix<T>)> {
        let id = || Matrix::identity(like.rows(), &like[(0, 0)]);
        match self {
            Word::Gen(g) => lookup(g),
            Word::Prod(v) => {
                let (mut m, mut inv) = (id(), id());
                for w in v {
                    let (x, xi) = w.eval(like, lookup)?;
                    m = &m * &x;
                    inv = &xi * &inv;
                }
                Ok((m, inv))
            }
            Word::Pow(w, k) => {
                let (x, xi) = w.eval(like, lookup)?;
                let e = k.unsigned_abs();
                let (p, pi) = (x.pow(e), xi.pow(e));
                Ok(if *k >= 0 { (p, pi) } else { (pi, p) })
            }
            Word::Comm(x, y) => {
                let (a, ai) = x.eval(like, lookup)?;
                let (b, bi) = y.eval(like, lookup)?;
                let c = &(&(&a * &b) * &ai) * &bi;
                let ci = &(&(&b * &a) * &bi) * &ai;
                Ok((c, ci))
            }
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Gen(g) => f.write_str(g),
            Word::Prod(v) if v.is_empty() => f.write_str("1"),
            Word::Prod(v) => {
                for (i, w) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    match w {
                        Word::Prod(inner) if inner.len() > 1 => write!(f, "({w})")?,
                        _ => write!(f, "{w}")?,
                    }
                }
                Ok(())
            }
            Word::Pow(w, k) => match **w {
                Word::Gen(_) | Word::Comm(..) => write!(f, "{w}^{k}"),
                _ => write!(f, "({w})^{k}"),
            },
            Word::Comm(x, y) => write!(f, "[{x},{y}]"),
        }
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_separators(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace() || c == '*' || c == '.') {
            self.pos += 1;
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn err<T>(&self, what: &str) -> Result<T> {
        Err(Error::Parse(format!("{what} at position {}", self.pos)))
    }

    fn product(&mut self) -> Result<Word> {
        let mut parts = Vec::new();
        loop {
            self.skip_separators();
            match self.peek() {
                None | Some(')') | Some(']') | Some(',') => break,
                _ => parts.push(self.factor()?),
            }
        }
        Ok(if parts.len() == 1 { parts.pop().expect("one") } else { Word::Prod(parts) })
    }

    fn factor(&mut self) -> Result<Word> {
        let atom = self.atom()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            if matches!(self.peek(), Some('-') | Some('+')) {
                self.pos += 1;
            }
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.pos += 1;
            }
            let text: String = self.chars[start..self.pos].iter().collect();
            let k: i64 = text.parse().map_err(|_| Error::Parse(format!("bad exponent {text:?}")))?;
            return Ok(Word::Pow(Box::new(atom), k));
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Word> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let w = self.product()?;
                if self.peek() != Some(')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(w)
            }
            Some('[') => {
                self.pos += 1;
                let x = self.product()?;
                if self.peek() != Some(',') {
                    return self.err("expected ','");
                }
                self.pos += 1;
                let y = self.product()?;
                if self.peek() != Some(']') {
                    return self.err("expected ']'");
                }
                self.pos += 1;
                Ok(Word::Comm(Box::new(x), Box::new(y)))
            }
            Some('1') => {
                self.pos += 1;
                Ok(Word::identity())
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                Ok(Word::Gen(self.chars[start..self.pos].iter().collect()))
            }
            _ => self.err("expected a generator"),
        }
    }
}
