//! Words in finitely generated free groups, with commutator subterms.
//!
//! The commutator convention is `[a,b] = a^-1 b^-1 a b`.

use std::fmt;

use crate::error::Error;

/// One letter of a [`GroupWord`]: a generator power or a commutator power.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Letter {
    Gen(String, i64),
    Comm(Box<GroupWord>, Box<GroupWord>, i64),
}

/// A word in a free group, as written: a sequence of generator powers and
/// commutator subterms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GroupWord {
    pub letters: Vec<Letter>,
}

impl GroupWord {
    pub fn empty() -> Self {
        GroupWord { letters: Vec::new() }
    }

    pub fn gen(name: &str, exp: i64) -> Self {
        GroupWord { letters: vec![Letter::Gen(name.to_string(), exp)] }.normalized()
    }

    pub fn comm(u: GroupWord, v: GroupWord) -> Self {
        GroupWord { letters: vec![Letter::Comm(Box::new(u), Box::new(v), 1)] }
    }

    pub fn concat(mut self, other: GroupWord) -> Self {
        self.letters.extend(other.letters);
        self
    }

    pub fn pow(&self, e: i64) -> Self {
        if e == 0 {
            return GroupWord::empty();
        }
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = GroupWord::empty();
        for _ in 0..e.unsigned_abs() {
            out = out.concat(base.clone());
        }
        out
    }

    pub fn inverse(&self) -> Self {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|l| match l {
                Letter::Gen(g, e) => Letter::Gen(g.clone(), -e),
                Letter::Comm(u, v, e) => Letter::Comm(u.clone(), v.clone(), -e),
            })
            .collect();
        GroupWord { letters }
    }

    /// Drops zero-exponent letters and merges adjacent powers of the same
    /// generator.
    pub fn normalized(&self) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in &self.letters {
            let l = match l {
                Letter::Comm(u, v, e) => Letter::Comm(
                    Box::new(u.normalized()),
                    Box::new(v.normalized()),
                    *e,
                ),
                other => other.clone(),
            };
            match (&l, out.last_mut()) {
                (Letter::Gen(_, 0), _) | (Letter::Comm(_, _, 0), _) => {}
                (Letter::Gen(g, e), Some(Letter::Gen(h, f))) if g == h => {
                    *f += e;
                    if *f == 0 {
                        out.pop();
                    }
                }
                _ => out.push(l),
            }
        }
        GroupWord { letters: out }
    }

    /// The alphabet actually used by the word.
    pub fn generators(&self) -> Vec<String> {
        let mut names = Vec::new();
        self.collect_generators(&mut names);
        names
    }

    fn collect_generators(&self, names: &mut Vec<String>) {
        for l in &self.letters {
            match l {
                Letter::Gen(g, _) => {
                    if !names.contains(g) {
                        names.push(g.clone());
                    }
                }
                Letter::Comm(u, v, _) => {
                    u.collect_generators(names);
                    v.collect_generators(names);
                }
            }
        }
    }

    /// Expands commutators and exponents into a flat sequence of
    /// `(generator, +-1)` letters.
    pub fn flatten(&self) -> Vec<(String, i64)> {
        let mut out = Vec::new();
        self.flatten_into(&mut out, false);
        out
    }

    fn flatten_into(&self, out: &mut Vec<(String, i64)>, invert: bool) {
        let iter: Box<dyn Iterator<Item = &Letter>> = if invert {
            Box::new(self.letters.iter().rev())
        } else {
            Box::new(self.letters.iter())
        };
        for l in iter {
            match l {
                Letter::Gen(g, e) => {
                    let e = if invert { -e } else { *e };
                    let s = e.signum();
                    for _ in 0..e.unsigned_abs() {
                        out.push((g.clone(), s));
                    }
                }
                Letter::Comm(u, v, e) => {
                    let e = if invert { -e } else { *e };
                    let forward = e > 0;
                    for _ in 0..e.unsigned_abs() {
                        // [u,v] = u^-1 v^-1 u v; inverse is v^-1 u^-1 v u
                        if forward {
                            u.flatten_into(out, true);
                            v.flatten_into(out, true);
                            u.flatten_into(out, false);
                            v.flatten_into(out, false);
                        } else {
                            v.flatten_into(out, true);
                            u.flatten_into(out, true);
                            v.flatten_into(out, false);
                            u.flatten_into(out, false);
                        }
                    }
                }
            }
        }
    }

    /// Free reduction of the flattened word; true iff it cancels completely.
    pub fn is_freely_trivial(&self) -> bool {
        let mut stack: Vec<(String, i64)> = Vec::new();
        for (g, s) in self.flatten() {
            match stack.last() {
                Some((h, t)) if *h == g && *t == -s => {
                    stack.pop();
                }
                _ => stack.push((g, s)),
            }
        }
        stack.is_empty()
    }

    /// Substitutes a word for each generator; generators without an image are
    /// an error.
    pub fn substitute(
        &self,
        image: &dyn Fn(&str) -> Option<GroupWord>,
    ) -> Result<GroupWord, Error> {
        let mut out = GroupWord::empty();
        for l in &self.letters {
            match l {
                Letter::Gen(g, e) => {
                    let w = image(g).ok_or_else(|| Error::UnknownGenerator(g.clone()))?;
                    out = out.concat(w.pow(*e));
                }
                Letter::Comm(u, v, e) => {
                    let iu = u.substitute(image)?;
                    let iv = v.substitute(image)?;
                    let mut c = GroupWord::comm(iu, iv);
                    if let Letter::Comm(_, _, ex) = &mut c.letters[0] {
                        *ex = *e;
                    }
                    out = out.concat(c.normalized());
                }
            }
        }
        Ok(out.normalized())
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            match l {
                Letter::Gen(g, 1) => write!(f, "{g}")?,
                Letter::Gen(g, e) => write!(f, "{g}^{e}")?,
                Letter::Comm(u, v, 1) => write!(f, "[{u},{v}]")?,
                Letter::Comm(u, v, e) => write!(f, "[{u},{v}]^{e}")?,
            }
        }
        Ok(())
    }
}

/// Parses the word grammar: identifiers, juxtaposition, `^` integer
/// exponents, `[u,v]` commutators, parentheses.
pub fn parse_word(text: &str) -> Result<GroupWord, Error> {
    let mut p = Parser { chars: text.char_indices().peekable(), text };
    let w = p.parse_sequence()?;
    p.skip_ws();
    if let Some(&(pos, _)) = p.chars.peek() {
        return Err(Error::Syntax { pos, msg: "unexpected trailing input".into() });
    }
    Ok(w.normalized())
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some(&(_, c)) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn parse_sequence(&mut self) -> Result<GroupWord, Error> {
        let mut out = GroupWord::empty();
        loop {
            self.skip_ws();
            match self.chars.peek() {
                Some(&(_, c)) if c.is_alphabetic() || c == '[' || c == '(' => {
                    let term = self.parse_term()?;
                    out = out.concat(term);
                }
                _ => break,
            }
        }
        Ok(out)
    }

    fn parse_term(&mut self) -> Result<GroupWord, Error> {
        let atom = self.parse_atom()?;
        self.skip_ws();
        if matches!(self.chars.peek(), Some(&(_, '^'))) {
            self.chars.next();
            let e = self.parse_int()?;
            Ok(atom.pow_symbolic(e))
        } else {
            Ok(atom)
        }
    }

    fn parse_atom(&mut self) -> Result<GroupWord, Error> {
        self.skip_ws();
        match self.chars.peek() {
            Some(&(_, '[')) => {
                self.chars.next();
                let u = self.parse_sequence()?;
                self.expect(',')?;
                let v = self.parse_sequence()?;
                self.expect(']')?;
                Ok(GroupWord::comm(u, v))
            }
            Some(&(_, '(')) => {
                self.chars.next();
                let w = self.parse_sequence()?;
                self.expect(')')?;
                Ok(w)
            }
            Some(&(_, c)) if c.is_alphabetic() => {
                let name = self.parse_ident()?;
                Ok(GroupWord { letters: vec![Letter::Gen(name, 1)] })
            }
            Some(&(pos, c)) => Err(Error::Syntax { pos, msg: format!("unexpected character '{c}'") }),
            None => Err(Error::Syntax { pos: self.text.len(), msg: "unexpected end of input".into() }),
        }
    }

    fn expect(&mut self, want: char) -> Result<(), Error> {
        self.skip_ws();
        match self.chars.next() {
            Some((_, c)) if c == want => Ok(()),
            Some((pos, c)) => Err(Error::Syntax { pos, msg: format!("expected '{want}', found '{c}'") }),
            None => Err(Error::Syntax { pos: self.text.len(), msg: format!("expected '{want}'") }),
        }
    }

    /// Identifier: a letter, then alphanumerics, then an optional `-digits`
    /// subscript (so `a-1` is a single generator name).
    fn parse_ident(&mut self) -> Result<String, Error> {
        let mut name = String::new();
        while matches!(self.chars.peek(), Some(&(_, c)) if c.is_alphanumeric() || c == '_') {
            name.push(self.chars.next().unwrap().1);
        }
        if matches!(self.chars.peek(), Some(&(_, '-'))) {
            let mut lookahead = self.chars.clone();
            lookahead.next();
            if matches!(lookahead.peek(), Some(&(_, c)) if c.is_ascii_digit()) {
                name.push(self.chars.next().unwrap().1);
                while matches!(self.chars.peek(), Some(&(_, c)) if c.is_ascii_digit()) {
                    name.push(self.chars.next().unwrap().1);
                }
            }
        }
        Ok(name)
    }

    fn parse_int(&mut self) -> Result<i64, Error> {
        self.skip_ws();
        let mut s = String::new();
        if matches!(self.chars.peek(), Some(&(_, '-')) | Some(&(_, '+'))) {
            s.push(self.chars.next().unwrap().1);
        }
        let start = self.chars.peek().map(|&(p, _)| p).unwrap_or(self.text.len());
        while matches!(self.chars.peek(), Some(&(_, c)) if c.is_ascii_digit()) {
            s.push(self.chars.next().unwrap().1);
        }
        s.parse()
            .map_err(|_| Error::Syntax { pos: start, msg: "expected integer exponent".into() })
    }
}

impl GroupWord {
    /// Exponentiation that keeps the exponent on the letter when the base is
    /// a single letter, so printing round-trips.
    fn pow_symbolic(&self, e: i64) -> GroupWord {
        if self.letters.len() == 1 {
            let mut l = self.letters[0].clone();
            match &mut l {
                Letter::Gen(_, x) | Letter::Comm(_, _, x) => *x *= e,
            }
            GroupWord { letters: vec![l] }.normalized()
        } else {
            self.pow(e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basic() {
        let w = parse_word("[x,y]^3 z").unwrap();
        assert_eq!(w.letters.len(), 2);
        assert_eq!(w.to_string(), "[x,y]^3 z");
    }

    #[test]
    fn parse_negative_exponent() {
        let w = parse_word("x^-2").unwrap();
        assert_eq!(w.letters, vec![Letter::Gen("x".into(), -2)]);
    }

    #[test]
    fn parse_nested_commutator() {
        let w = parse_word("[x,[y,z]]").unwrap();
        match &w.letters[0] {
            Letter::Comm(u, v, 1) => {
                assert_eq!(u.to_string(), "x");
                assert_eq!(v.to_string(), "[y,z]");
            }
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn parse_subscripted_generator() {
        let w = parse_word("a1 a-1^2").unwrap();
        assert_eq!(
            w.letters,
            vec![Letter::Gen("a1".into(), 1), Letter::Gen("a-1".into(), 2)]
        );
    }

    #[test]
    fn syntax_error_has_position() {
        match parse_word("x ^ q") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn free_reduction() {
        assert!(parse_word("x y y^-1 x^-1").unwrap().is_freely_trivial());
        assert!(parse_word("[x,y] [y,x]").unwrap().is_freely_trivial());
        assert!(!parse_word("x y x^-1").unwrap().is_freely_trivial());
    }

    #[test]
    fn normalization_merges_and_drops() {
        let w = parse_word("x^2 x^-2 y z^0").unwrap();
        assert_eq!(w, parse_word("y").unwrap());
    }

    #[test]
    fn roundtrip_print_parse() {
        for s in ["x y^-3 [x,y] z", "[x,[y,z]]^2", "a1 [a2,a-2]^-1 a-1^4"] {
            let w = parse_word(s).unwrap();
            let reparsed = parse_word(&w.to_string()).unwrap();
            assert_eq!(w, reparsed);
        }
    }
}
