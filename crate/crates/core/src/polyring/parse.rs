use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::MultiPoly;
use super::symbol::Symbol;
use crate::error::Error;
use crate::exactnum::Rational;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Sym(Symbol),
    Op(char),
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, Error> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().map(|(_, c)| c).collect();
            out.push((pos, Tok::Num(text.parse().expect("digits"))));
        } else if c.is_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric()) {
                i += 1;
            }
            let word: String = chars[start..i].iter().map(|(_, c)| c).collect();
            let sym = word
                .parse::<Symbol>()
                .map_err(|_| err(pos, format!("unknown symbol {word:?}")))?;
            out.push((pos, Tok::Sym(sym)));
        } else if "+-*/^()".contains(c) {
            out.push((pos, Tok::Op(c)));
            i += 1;
        } else {
            return Err(err(pos, format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly, Error> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, Error> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc * self.unary()?;
            } else if self.peek() == Some(&Tok::Op('/')) {
                let pos = self.pos();
                self.at += 1;
                let d = self.unary()?;
                let c = d
                    .constant_value()
                    .ok_or_else(|| err(pos, "division only by nonzero constants"))?;
                if c.is_zero() {
                    return Err(err(pos, "division by zero"));
                }
                acc = acc.scale(&c.recip()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly, Error> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPoly, Error> {
        let base = self.atom()?;
        if self.eat('^') {
            let pos = self.pos();
            match self.toks.get(self.at).map(|(_, t)| t.clone()) {
                Some(Tok::Num(n)) => {
                    self.at += 1;
                    let e = u32::try_from(&n).map_err(|_| err(pos, "exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(err(pos, "exponent must be a non-negative integer literal")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly, Error> {
        let pos = self.pos();
        match self.toks.get(self.at).map(|(_, t)| t.clone()) {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(MultiPoly::constant(Rational::from(n)))
            }
            Some(Tok::Sym(s)) => {
                self.at += 1;
                Ok(MultiPoly::var(s))
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(err(self.pos(), "expected ')'"));
                }
                Ok(inner)
            }
            Some(t) => Err(err(pos, format!("unexpected token {t:?}"))),
            None => Err(err(pos, "unexpected end of input")),
        }
    }
}

/// Parses the textual polynomial syntax: integers, the known symbols,
/// `+ - * / ^` and parentheses. Multiplication must be explicit and `/`
/// may only divide by a nonzero constant.
pub fn parse(src: &str) -> Result<MultiPoly, Error> {
    let toks = tokenize(src)?;
    if toks.is_empty() {
        return Err(err(0, "empty input"));
    }
    let mut p = Parser {
        toks,
        at: 0,
        end: src.len(),
    };
    let out = p.expr()?;
    if p.at < p.toks.len() {
        let pos = p.pos();
        let msg = match p.peek() {
            Some(Tok::Num(_)) | Some(Tok::Sym(_)) | Some(Tok::Op('(')) => {
                "implicit multiplication is not allowed; use '*'".to_string()
            }
            Some(t) => format!("unexpected token {t:?}"),
            None => unreachable!(),
        };
        return Err(err(pos, msg));
    }
    Ok(out)
}

impl std::str::FromStr for MultiPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_signs() {
        assert_eq!(parse("-x^2").unwrap(), -parse("x^2").unwrap());
        assert_eq!(parse("2*3^2").unwrap(), MultiPoly::int(18));
        assert_eq!(parse("1 - 2 - 3").unwrap(), MultiPoly::int(-4));
        assert_eq!(parse("(x+1)^2").unwrap(), parse("x^2 + 2*x + 1").unwrap());
    }

    #[test]
    fn alpha_spellings() {
        assert_eq!(parse("α^2").unwrap(), parse("alpha^2").unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        for (src, pos) in [("2x", 1), ("x y", 2), ("x^", 2), ("x + q", 4), ("(x+1", 4), ("x/y", 1), ("", 0)] {
            match parse(src) {
                Err(Error::Parse { pos: p, .. }) => assert_eq!(p, pos, "{src}"),
                other => panic!("{src}: expected parse error, got {other:?}"),
            }
        }
    }
}
