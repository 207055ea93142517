//! Text form of a quadratic irrational:
//!
//! ```text
//! sqrt(D) | (P+sqrt(D))/Q | cf:a0;[a1,...,ak];(b1,...,bl)
//! ```
//!
//! Whitespace is ignored everywhere and `−` (U+2212) is read as `-`.

use std::fmt;

use cfgen_core::cfrac::{expand_surd, ContinuedFraction};
use cfgen_core::exact::{is_square, normalize_surd, QuadraticSurd};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NumberInput {
    Sqrt(BigInt),
    Surd { p: BigInt, q: BigInt, d: BigInt },
    Cf { a0: BigInt, pre: Vec<BigInt>, period: Vec<BigInt> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// character offset into the original text
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

struct Cursor {
    chars: Vec<(usize, char)>,
    at: usize,
    end: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        let chars: Vec<(usize, char)> = text
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i, if c == '\u{2212}' { '-' } else { c }))
            .collect();
        Self {
            chars,
            at: 0,
            end: text.chars().count(),
        }
    }

    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.end, |&(i, _)| i)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(format!("expected '{c}'"))
        }
    }

    fn keyword(&mut self, word: &str) -> bool {
        let n = word.chars().count();
        let matches = self.chars.len() >= self.at + n
            && self.chars[self.at..self.at + n]
                .iter()
                .map(|&(_, c)| c)
                .eq(word.chars());
        if matches {
            self.at += n;
        }
        matches
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.at;
        let negative = self.eat('-');
        let digits_from = self.at;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.at += 1;
        }
        if self.at == digits_from {
            self.at = start;
            return self.fail("expected an integer");
        }
        let digits: String = self.chars[digits_from..self.at].iter().map(|&(_, c)| c).collect();
        let n: BigInt = digits.parse().expect("ascii digits");
        Ok(if negative { -n } else { n })
    }

    fn list(&mut self, open: char, close: char) -> Result<Vec<BigInt>, ParseError> {
        self.expect(open)?;
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            let pos = self.pos();
            let a = self.integer()?;
            if !a.is_positive() {
                return Err(ParseError {
                    pos,
                    msg: "partial quotients must be at least 1".into(),
                });
            }
            out.push(a);
            if self.eat(close) {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }

    fn radicand(&mut self) -> Result<BigInt, ParseError> {
        if !self.keyword("sqrt") {
            return self.fail("expected 'sqrt'");
        }
        self.expect('(')?;
        let pos = self.pos();
        let d = self.integer()?;
        self.expect(')')?;
        if d.is_negative() || is_square(&d) {
            return Err(ParseError {
                pos,
                msg: "rational value".into(),
            });
        }
        Ok(d)
    }
}

pub fn parse_input(text: &str) -> Result<NumberInput, ParseError> {
    let mut c = Cursor::new(text);
    let form = if c.keyword("cf:") {
        let a0 = c.integer()?;
        c.expect(';')?;
        let pre = c.list('[', ']')?;
        c.expect(';')?;
        let pos = c.pos();
        let period = c.list('(', ')')?;
        if period.is_empty() {
            return Err(ParseError {
                pos,
                msg: "period must be nonempty".into(),
            });
        }
        NumberInput::Cf { a0, pre, period }
    } else if c.peek() == Some('(') {
        c.expect('(')?;
        let p = c.integer()?;
        c.expect('+')?;
        let d = c.radicand()?;
        c.expect(')')?;
        c.expect('/')?;
        let pos = c.pos();
        let q = c.integer()?;
        if q.is_zero() {
            return Err(ParseError {
                pos,
                msg: "zero denominator".into(),
            });
        }
        NumberInput::Surd { p, q, d }
    } else if c.peek() == Some('s') {
        NumberInput::Sqrt(c.radicand()?)
    } else {
        return c.fail("expected 'sqrt(', '(' or 'cf:'");
    };
    if c.peek().is_some() {
        return c.fail("trailing input");
    }
    Ok(form)
}

fn join(xs: &[BigInt]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Canonical text, accepted back by [`parse_input`].
pub fn render(form: &NumberInput) -> String {
    match form {
        NumberInput::Sqrt(d) => format!("sqrt({d})"),
        NumberInput::Surd { p, q, d } => format!("({p}+sqrt({d}))/{q}"),
        NumberInput::Cf { a0, pre, period } => format!("cf:{a0};[{}];({})", join(pre), join(period)),
    }
}

impl fmt::Display for NumberInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

impl NumberInput {
    pub fn surd(&self) -> cfgen_core::Result<Option<QuadraticSurd>> {
        match self {
            NumberInput::Sqrt(d) => QuadraticSurd::sqrt(d.clone()).map(Some),
            NumberInput::Surd { p, q, d } => normalize_surd(p.clone(), q.clone(), d.clone()).map(Some),
            NumberInput::Cf { .. } => Ok(None),
        }
    }

    /// Minimal continued fraction of the value.
    pub fn continued_fraction(&self, max_steps: usize) -> cfgen_core::Result<ContinuedFraction> {
        match self {
            NumberInput::Cf { a0, pre, period } => {
                Ok(ContinuedFraction::new(a0.clone(), pre.clone(), period.clone())?.minimized())
            }
            _ => expand_surd(&self.surd()?.expect("surd input"), max_steps),
        }
    }
}

/// Shorthand used by `scan`.
pub fn sqrt_of(d: u64) -> NumberInput {
    NumberInput::Sqrt(BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn examples() {
        assert_eq!(parse_input("sqrt(2)").unwrap(), NumberInput::Sqrt(b(2)));
        assert_eq!(
            parse_input("(−1+sqrt(5))/2").unwrap(),
            NumberInput::Surd { p: b(-1), q: b(2), d: b(5) }
        );
        let cf = parse_input(" cf: 0 ; [ ] ; ( 1 , 2 ) ").unwrap();
        assert_eq!(cf, NumberInput::Cf { a0: b(0), pre: vec![], period: vec![b(1), b(2)] });
        let want = parse_input("(-1+sqrt(3))/1").unwrap().continued_fraction(1000).unwrap();
        assert_eq!(cf.continued_fraction(1000).unwrap(), want);
    }

    #[test]
    fn errors() {
        let e = parse_input("sqrt(9)").unwrap_err();
        assert_eq!((e.pos, e.msg.as_str()), (5, "rational value"));
        assert_eq!(parse_input("sqrt(2").unwrap_err().pos, 6);
        assert_eq!(parse_input("cf:1;[];()").unwrap_err().msg, "period must be nonempty");
        assert_eq!(parse_input("cf:1;[0];(1)").unwrap_err().pos, 6);
        assert_eq!(parse_input("(1+sqrt(2))/0").unwrap_err().msg, "zero denominator");
        assert_eq!(parse_input("sqrt(2)x").unwrap_err().msg, "trailing input");
        assert!(parse_input("pi").is_err());
    }

    #[test]
    fn render_round_trip() {
        for text in ["sqrt(7)", "(-3+sqrt(13))/-2", "cf:-4;[2,3];(1,1,5)"] {
            let form = parse_input(text).unwrap();
            assert_eq!(render(&form), text);
            assert_eq!(parse_input(&render(&form)).unwrap(), form);
        }
        assert_eq!(sqrt_of(5).continued_fraction(100).unwrap().period_len(), 1);
    }
}
