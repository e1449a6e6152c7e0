//! Parsers for the term and arrow-term grammars.
//!
//! ```text
//! term   := factor+
//! factor := 'u' INT | 'n' INT | 's' INT | '1' | 'c'
//!         | 'u[' INT ',' INT ']' | 'n[' INT ',' INT ']' | 'x[' INT ',' INT ']'
//!         | '(' term ')'
//!
//! arrow  := atom ('o' atom)*
//! atom   := 'id' INT | 'phi' INT | 'gamma' INT | 'chi' INT
//!         | 'F(' arrow ')' | '(' arrow ')'
//! ```
//!
//! Positions in syntax errors are byte offsets into the input.

use crate::adjunction::ArrowTerm;
use crate::error::{Error, Result};
use crate::term::{expand_block, BlockSpec, GenKind, Generator, Term};

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.rest().chars().next()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.error(format!("expected `{want}`, found end of input"))),
        }
    }

    /// A decimal integer directly at the cursor, without leading whitespace.
    fn int_here(&mut self) -> Result<u32> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected an integer"));
        }
        let value = self.rest()[..digits]
            .parse()
            .map_err(|_| self.error("integer out of range"))?;
        self.pos += digits;
        Ok(value)
    }

    fn int(&mut self) -> Result<u32> {
        self.skip_ws();
        self.int_here()
    }

    fn index_here(&mut self) -> Result<u32> {
        let start = self.pos;
        let k = self.int_here()?;
        if k == 0 {
            return Err(Error::Syntax {
                pos: start,
                msg: "index 0 is not allowed".into(),
            });
        }
        Ok(k)
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let len = self
            .rest()
            .bytes()
            .take_while(u8::is_ascii_alphabetic)
            .count();
        let w = &self.rest()[..len];
        self.pos += len;
        w
    }
}

pub fn parse_term(text: &str) -> Result<Term> {
    let mut cur = Cursor::new(text);
    let t = term(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.error("unexpected input"));
    }
    Ok(t)
}

fn term(cur: &mut Cursor) -> Result<Term> {
    let mut out = Term::one();
    let mut factors = 0;
    while let Some(c) = cur.peek() {
        if c == ')' {
            break;
        }
        out.extend(&factor(cur)?);
        factors += 1;
    }
    if factors == 0 {
        return Err(cur.error("expected a term"));
    }
    Ok(out)
}

fn block(cur: &mut Cursor) -> Result<(u32, u32)> {
    cur.expect('[')?;
    let a = cur.int()?;
    cur.expect(',')?;
    let b = cur.int()?;
    cur.expect(']')?;
    Ok((a, b))
}

fn factor(cur: &mut Cursor) -> Result<Term> {
    let start = cur.pos;
    let c = cur.bump().ok_or_else(|| cur.error("expected a factor"))?;
    let generator = |cur: &mut Cursor, kind| -> Result<Term> {
        let k = cur.index_here()?;
        Ok(Term::from_generators([Generator::new(kind, k)]))
    };
    let expand = |spec: BlockSpec| {
        expand_block(spec).map_err(|e| Error::Syntax {
            pos: start,
            msg: e.to_string(),
        })
    };
    match c {
        '1' => Ok(Term::one()),
        'c' => Ok(Term::circle()),
        '(' => {
            let t = term(cur)?;
            cur.expect(')')?;
            Ok(t)
        }
        'u' | 'n' | 's' if cur.rest().starts_with(|c: char| c.is_ascii_digit()) => {
            let kind = match c {
                'u' => GenKind::Cup,
                'n' => GenKind::Cap,
                _ => GenKind::Cross,
            };
            generator(cur, kind)
        }
        'u' if cur.rest().starts_with('[') => {
            let (lo, hi) = block(cur)?;
            expand(BlockSpec::cup(lo, hi))
        }
        'n' if cur.rest().starts_with('[') => {
            let (hi, lo) = block(cur)?;
            expand(BlockSpec::cap(hi, lo))
        }
        'x' if cur.rest().starts_with('[') => {
            let (hi, lo) = block(cur)?;
            expand(BlockSpec::cross(hi, lo))
        }
        _ => Err(Error::Syntax {
            pos: start,
            msg: format!("unexpected `{c}`"),
        }),
    }
}

pub fn parse_arrow(text: &str) -> Result<ArrowTerm> {
    let mut cur = Cursor::new(text);
    let f = arrow(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.error("unexpected input"));
    }
    Ok(f)
}

fn arrow(cur: &mut Cursor) -> Result<ArrowTerm> {
    let mut acc = atom(cur)?;
    loop {
        let save = cur.pos;
        if cur.word() == "o" {
            acc = ArrowTerm::comp(acc, atom(cur)?);
        } else {
            cur.pos = save;
            return Ok(acc);
        }
    }
}

fn atom(cur: &mut Cursor) -> Result<ArrowTerm> {
    if cur.peek() == Some('(') {
        cur.bump();
        let f = arrow(cur)?;
        cur.expect(')')?;
        return Ok(f);
    }
    let start = cur.pos;
    let name = cur.word();
    let leaf = |cur: &mut Cursor, make: fn(u32) -> ArrowTerm| Ok(make(cur.int_here()?));
    match name {
        "id" => leaf(cur, ArrowTerm::Id),
        "phi" => leaf(cur, ArrowTerm::Phi),
        "gamma" => leaf(cur, ArrowTerm::Gamma),
        "chi" => leaf(cur, ArrowTerm::Chi),
        "F" => {
            cur.expect('(')?;
            let f = arrow(cur)?;
            cur.expect(')')?;
            Ok(ArrowTerm::f(f))
        }
        "" => Err(cur.error("expected an arrow")),
        other => Err(Error::Syntax {
            pos: start,
            msg: format!("unknown arrow `{other}`"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ArrowTerm::*;

    fn gens(t: &Term) -> String {
        t.to_string()
    }

    #[test]
    fn terms() {
        assert_eq!(gens(&parse_term("s1 s1").unwrap()), "s1 s1");
        assert_eq!(parse_term("c").unwrap(), Term::circle());
        assert_eq!(gens(&parse_term("x[2,1]").unwrap()), "s2 s1");
        assert_eq!(gens(&parse_term("u[1,3]").unwrap()), "u1 s2 s3");
        assert_eq!(gens(&parse_term("n[3,1]").unwrap()), "s3 s2 n1");
        assert_eq!(gens(&parse_term(" (s1 u2)n3 1 ").unwrap()), "s1 u2 n3");
        assert_eq!(parse_term("1").unwrap(), Term::one());
        assert_eq!(gens(&parse_term("s12").unwrap()), "s12");
    }

    #[test]
    fn term_errors() {
        let pos = |s: &str| match parse_term(s) {
            Err(Error::Syntax { pos, .. }) => pos,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(pos("s0"), 1);
        assert_eq!(pos("s1 q2"), 3);
        assert_eq!(pos(""), 0);
        assert_eq!(pos("(s1"), 3);
        assert_eq!(pos("s1 x[1,2]"), 3);
        assert_eq!(pos("u 1"), 0);
        assert_eq!(pos("s1)"), 2);
    }

    #[test]
    fn arrows() {
        assert_eq!(parse_arrow("id0").unwrap(), Id(0));
        let f = parse_arrow("phi1 o F(gamma0)").unwrap();
        assert_eq!(f, ArrowTerm::comp(Phi(1), ArrowTerm::f(Gamma(0))));
        let g = parse_arrow("chi0 o chi0 o chi0").unwrap();
        assert_eq!(g, ArrowTerm::comp(ArrowTerm::comp(Chi(0), Chi(0)), Chi(0)));
        let h = parse_arrow("chi0 o (chi0 o chi0)").unwrap();
        assert_eq!(h, ArrowTerm::comp(Chi(0), ArrowTerm::comp(Chi(0), Chi(0))));
        assert_eq!(parse_arrow(&h.to_string()).unwrap(), h);
        assert_eq!(parse_arrow(&g.to_string()).unwrap(), g);
        assert!(matches!(parse_arrow("psi0"), Err(Error::Syntax { pos: 0, .. })));
        assert!(parse_arrow("F(id0").is_err());
        assert!(parse_arrow("id").is_err());
        assert!(parse_arrow("id0 o").is_err());
    }
}
