//! Text syntax for words.
//!
//! ```text
//! expr   := term (("." | ";") term)*
//! term   := factor ("^" number)*
//! factor := atom | "(" expr ")"
//! atom   := name "'"? "(" number ("," number)* ")"
//! ```
//!
//! `g . f` is mathematical composition (`f` is applied first) and `f ; g` is
//! application order; both associate to the left at the same precedence.
//! `^p` repeats an endomorphism. The same grammar serves the cylinder
//! generators and the cyclic and annular alphabets, which differ only in
//! their atoms.

use std::fmt;
use std::ops::Range;

use thiserror::Error;

use crate::cyclic::{AtlGen, AtlWord, Flavor, SimplexGen, SimplexWord};
use crate::diagram::{Generator, GeneratorWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed text or unknown token.
    Syntax,
    /// Well-formed text that does not describe a composable word.
    Type,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at {}..{}", span.start, span.end)]
pub struct ParseError {
    pub kind: ErrorKind,
    pub message: String,
    pub span: Range<usize>,
}

impl ParseError {
    fn syntax(message: impl Into<String>, span: Range<usize>) -> Self {
        ParseError { kind: ErrorKind::Syntax, message: message.into(), span }
    }

    fn typing(message: impl Into<String>, span: Range<usize>) -> Self {
        ParseError { kind: ErrorKind::Type, message: message.into(), span }
    }

    /// The message followed by the source line with the span underlined.
    pub fn render(&self, src: &str) -> String {
        let start = self.span.start.min(src.len());
        let width = self.span.end.saturating_sub(start).max(1);
        format!("{}\n  {}\n  {}{}", self.message, src, " ".repeat(start), "^".repeat(width))
    }
}

/// Atoms of one word language.
pub trait Alphabet {
    type Letter: Copy + fmt::Display;

    /// Interprets `name(args)`; `Err` is reported as a syntax error.
    fn letter(name: &str, args: &[usize]) -> Result<Self::Letter, String>;

    /// Index-range check; `Err` is reported as a type error.
    fn check(letter: Self::Letter) -> Result<(), String>;

    fn signature(letter: Self::Letter) -> (usize, usize);
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Typed<L> {
    pub n_in: usize,
    pub n_out: usize,
    pub letters: Vec<L>,
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Name(String),
    Num(usize),
    Dot,
    Semi,
    Caret,
    LParen,
    RParen,
    Comma,
    Prime,
}

fn lex(src: &str) -> Result<Vec<(Token, Range<usize>)>, ParseError> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        let single = match c {
            '.' => Some(Token::Dot),
            ';' => Some(Token::Semi),
            '^' => Some(Token::Caret),
            '(' => Some(Token::LParen),
            ')' => Some(Token::RParen),
            ',' => Some(Token::Comma),
            '\'' => Some(Token::Prime),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, start..start + 1));
            i += 1;
        } else if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n = src[start..i]
                .parse()
                .map_err(|_| ParseError::syntax(format!("number {} is too large", &src[start..i]), start..i))?;
            out.push((Token::Num(n), start..i));
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Token::Name(src[start..i].to_string()), start..i));
        } else {
            let len = c.len_utf8();
            let ch = src[start..].chars().next().unwrap_or(c);
            return Err(ParseError::syntax(format!("unexpected character {ch:?}"), start..start + len.max(ch.len_utf8())));
        }
    }
    Ok(out)
}

struct Parser<'a, A: Alphabet> {
    tokens: &'a [(Token, Range<usize>)],
    pos: usize,
    end: usize,
    _alphabet: std::marker::PhantomData<A>,
}

impl<'a, A: Alphabet> Parser<'a, A> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn span_here(&self) -> Range<usize> {
        self.tokens.get(self.pos).map_or(self.end..self.end, |(_, s)| s.clone())
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<Range<usize>, ParseError> {
        match self.tokens.get(self.pos) {
            Some((t, s)) if *t == want => {
                self.pos += 1;
                Ok(s.clone())
            }
            _ => Err(ParseError::syntax(format!("expected {what}"), self.span_here())),
        }
    }

    fn number(&mut self) -> Result<(usize, Range<usize>), ParseError> {
        match self.tokens.get(self.pos) {
            Some((Token::Num(n), s)) => {
                self.pos += 1;
                Ok((*n, s.clone()))
            }
            _ => Err(ParseError::syntax("expected a number", self.span_here())),
        }
    }

    fn expr(&mut self) -> Result<(Typed<A::Letter>, Range<usize>), ParseError> {
        let (mut acc, mut span) = self.term()?;
        loop {
            let mathematical = match self.peek() {
                Some(Token::Dot) => true,
                Some(Token::Semi) => false,
                _ => break,
            };
            let op = self.span_here();
            self.pos += 1;
            let (rhs, rspan) = self.term()?;
            let (first, second) = if mathematical { (rhs, acc) } else { (acc, rhs) };
            if first.n_out != second.n_in {
                return Err(ParseError::typing(
                    format!(
                        "cannot compose: {} ends at arity {} but {} starts at arity {}",
                        describe(&first),
                        first.n_out,
                        describe(&second),
                        second.n_in
                    ),
                    op,
                ));
            }
            let mut letters = first.letters;
            letters.extend(second.letters);
            acc = Typed { n_in: first.n_in, n_out: second.n_out, letters };
            span = span.start..rspan.end;
        }
        Ok((acc, span))
    }

    fn term(&mut self) -> Result<(Typed<A::Letter>, Range<usize>), ParseError> {
        let (mut acc, mut span) = self.factor()?;
        while self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let (p, pspan) = self.number()?;
            if acc.n_in != acc.n_out {
                return Err(ParseError::typing(
                    format!("power of {} which maps arity {} to {}", describe(&acc), acc.n_in, acc.n_out),
                    span.start..pspan.end,
                ));
            }
            let letters = acc.letters.iter().copied().cycle().take(acc.letters.len() * p).collect();
            acc = Typed { letters, ..acc };
            span = span.start..pspan.end;
        }
        Ok((acc, span))
    }

    fn factor(&mut self) -> Result<(Typed<A::Letter>, Range<usize>), ParseError> {
        match self.peek() {
            Some(Token::LParen) => {
                let open = self.expect(Token::LParen, "(")?;
                let (inner, _) = self.expr()?;
                let close = self.expect(Token::RParen, "')'")?;
                Ok((inner, open.start..close.end))
            }
            Some(Token::Name(_)) => self.atom(),
            _ => Err(ParseError::syntax("expected a generator or '('", self.span_here())),
        }
    }

    fn atom(&mut self) -> Result<(Typed<A::Letter>, Range<usize>), ParseError> {
        let (mut name, start) = match &self.tokens[self.pos] {
            (Token::Name(n), s) => (n.clone(), s.clone()),
            _ => unreachable!("atom called on a name"),
        };
        self.pos += 1;
        if self.peek() == Some(&Token::Prime) {
            self.pos += 1;
            name.push('\'');
        }
        self.expect(Token::LParen, &format!("'(' after {name}"))?;
        let mut args = vec![self.number()?.0];
        while self.peek() == Some(&Token::Comma) {
            self.pos += 1;
            args.push(self.number()?.0);
        }
        let close = self.expect(Token::RParen, "')'")?;
        let span = start.start..close.end;
        let letter = A::letter(&name, &args).map_err(|m| ParseError::syntax(m, span.clone()))?;
        A::check(letter).map_err(|m| ParseError::typing(m, span.clone()))?;
        let (n_in, n_out) = A::signature(letter);
        Ok((Typed { n_in, n_out, letters: vec![letter] }, span))
    }
}

fn describe<L: fmt::Display>(t: &Typed<L>) -> String {
    match t.letters.as_slice() {
        [] => "an identity".into(),
        [g] => g.to_string(),
        [.., last] => format!("a word ending in {last}"),
    }
}

pub fn parse_with<A: Alphabet>(src: &str) -> Result<Typed<A::Letter>, ParseError> {
    let tokens = lex(src)?;
    let mut p = Parser::<A> { tokens: &tokens, pos: 0, end: src.len(), _alphabet: std::marker::PhantomData };
    let (typed, _) = p.expr()?;
    if p.pos < tokens.len() {
        return Err(ParseError::syntax("unexpected trailing input", p.span_here()));
    }
    Ok(typed)
}

fn arity_error(name: &str, want: usize, got: usize) -> String {
    format!("{name} takes {want} argument{}, got {got}", if want == 1 { "" } else { "s" })
}

pub struct CylAlphabet;

impl Alphabet for CylAlphabet {
    type Letter = Generator;

    fn letter(name: &str, args: &[usize]) -> Result<Generator, String> {
        let want = match name {
            "id" | "tw" | "tw'" => 1,
            "b" | "d" => 2,
            _ => return Err(format!("unknown generator {name:?} (expected id, tw, tw', b or d)")),
        };
        if args.len() != want {
            return Err(arity_error(name, want, args.len()));
        }
        Ok(match name {
            "id" => Generator::Id(args[0]),
            "tw" => Generator::Tw(args[0]),
            "tw'" => Generator::TwInv(args[0]),
            "b" => Generator::Birth(args[0], args[1]),
            _ => Generator::Death(args[0], args[1]),
        })
    }

    fn check(g: Generator) -> Result<(), String> {
        g.validate().map(|_| ()).map_err(|_| match g {
            Generator::Birth(k, i) => format!("{g}: birth slot {i} exceeds {} for arity {k}", k + 1),
            Generator::Death(k, _) if k < 2 => format!("{g}: a death needs at least 2 points, arity is {k}"),
            Generator::Death(k, i) => format!("{g}: death slot {i} exceeds {} for arity {k}", k - 1),
            _ => format!("{g} is invalid"),
        })
    }

    fn signature(g: Generator) -> (usize, usize) {
        g.signature()
    }
}

pub fn parse_word(src: &str) -> Result<GeneratorWord, ParseError> {
    let t = parse_with::<CylAlphabet>(src)?;
    GeneratorWord::new(t.n_in, t.letters).map_err(|e| ParseError::typing(e.to_string(), 0..src.len()))
}

/// Mathematical-order rendering; `parse_word(&print_word(w)) == w`.
pub fn print_word(w: &GeneratorWord) -> String {
    if w.is_empty() {
        return format!("id({})^0", w.n_in());
    }
    let mut parts = Vec::new();
    let gens: Vec<Generator> = w.gens().iter().rev().copied().collect();
    let mut i = 0;
    while i < gens.len() {
        let g = gens[i];
        let mut run = 1;
        if g.is_endo() {
            while i + run < gens.len() && gens[i + run] == g {
                run += 1;
            }
        }
        parts.push(if run > 1 { format!("{g}^{run}") } else { g.to_string() });
        i += run;
    }
    parts.join(".")
}

pub struct SimplexAlphabet;

impl Alphabet for SimplexAlphabet {
    type Letter = SimplexGen;

    fn letter(name: &str, args: &[usize]) -> Result<SimplexGen, String> {
        let want = match name {
            "t" | "sqrt_t" => 1,
            "dl" | "s" => 2,
            _ => return Err(format!("unknown generator {name:?} (expected t, sqrt_t, dl or s)")),
        };
        if args.len() != want {
            return Err(arity_error(name, want, args.len()));
        }
        Ok(match name {
            "t" => SimplexGen::Cyc(args[0]),
            "sqrt_t" => SimplexGen::SqrtCyc(args[0]),
            "dl" => SimplexGen::Face(args[0], args[1]),
            _ => SimplexGen::Degen(args[0], args[1]),
        })
    }

    fn check(g: SimplexGen) -> Result<(), String> {
        match g {
            SimplexGen::Face(n, i) if n == 0 || i > n => Err(format!("{g}: face index must be at most {n} and n at least 1")),
            SimplexGen::Degen(n, j) if j > n => Err(format!("{g}: degeneracy index must be at most {n}")),
            _ => Ok(()),
        }
    }

    fn signature(g: SimplexGen) -> (usize, usize) {
        g.signature()
    }
}

pub fn parse_simplex(src: &str, flavor: Flavor) -> Result<SimplexWord, ParseError> {
    let t = parse_with::<SimplexAlphabet>(src)?;
    SimplexWord::new(flavor, t.n_in, t.letters).map_err(|e| ParseError::typing(e.to_string(), 0..src.len()))
}

pub struct AtlAlphabet;

impl Alphabet for AtlAlphabet {
    type Letter = AtlGen;

    fn letter(name: &str, args: &[usize]) -> Result<AtlGen, String> {
        let want = match name {
            "T" => 1,
            "a" | "bb" => 2,
            "loopid" => 3,
            _ => return Err(format!("unknown generator {name:?} (expected a, bb, T or loopid)")),
        };
        if args.len() != want {
            return Err(arity_error(name, want, args.len()));
        }
        Ok(match name {
            "T" => AtlGen::T(args[0]),
            "a" => AtlGen::A(args[0], args[1]),
            "bb" => AtlGen::B(args[0], args[1]),
            _ => AtlGen::LoopId(args[0], args[1] as u64, args[2] as u64),
        })
    }

    fn check(g: AtlGen) -> Result<(), String> {
        match g {
            AtlGen::A(n, i) if n == 0 || i >= n => Err(format!("{g}: cap index must be below {n}")),
            AtlGen::B(n, i) if i > n => Err(format!("{g}: cup index must be at most {n}")),
            _ => Ok(()),
        }
    }

    fn signature(g: AtlGen) -> (usize, usize) {
        g.signature()
    }
}

pub fn parse_atl(src: &str) -> Result<AtlWord, ParseError> {
    let t = parse_with::<AtlAlphabet>(src)?;
    AtlWord::new(t.n_in, t.letters).map_err(|e| ParseError::typing(e.to_string(), 0..src.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{word, Generator::*};

    #[test]
    fn both_composition_orders() {
        let a = parse_word("d(4,1) . b(2,1)").unwrap();
        let b = parse_word("b(2,1) ; d(4,1)").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.gens(), &[Birth(2, 1), Death(4, 1)]);
    }

    #[test]
    fn powers_and_groups() {
        assert_eq!(parse_word("tw(4)^4").unwrap().len(), 4);
        let w = parse_word("(d(2,1).b(0,0))^2").unwrap();
        assert_eq!(w.gens(), &[Birth(0, 0), Death(2, 1), Birth(0, 0), Death(2, 1)]);
        assert_eq!(parse_word("id(3)^0").unwrap(), GeneratorWord::identity(3));
        assert_eq!(parse_word("tw'(3)").unwrap().gens(), &[TwInv(3)]);
    }

    #[test]
    fn errors_carry_kind_and_span() {
        let e = parse_word("b(3,0).b(3,0)").unwrap_err();
        assert_eq!(e.kind, ErrorKind::Type);
        assert_eq!(e.span, 6..7);
        assert!(e.message.contains("arity 5") && e.message.contains("arity 3"), "{}", e.message);

        let e = parse_word("tw(2").unwrap_err();
        assert_eq!(e.kind, ErrorKind::Syntax);
        let e = parse_word("foo(1)").unwrap_err();
        assert_eq!((e.kind, e.span.clone()), (ErrorKind::Syntax, 0..6));
        let e = parse_word("d(1,0)").unwrap_err();
        assert_eq!(e.kind, ErrorKind::Type);
        let e = parse_word("b(2,0)^2").unwrap_err();
        assert_eq!(e.kind, ErrorKind::Type);
        assert!(parse_word("").is_err());
        assert!(parse_word("tw(2) tw(2)").is_err());
    }

    #[test]
    fn printer_round_trips() {
        let w = word(&[Birth(2, 0), Tw(4), Tw(4), Tw(4), Death(4, 3), Id(2), Id(2)]);
        let s = print_word(&w);
        assert_eq!(s, "id(2)^2.d(4,3).tw(4)^3.b(2,0)");
        assert_eq!(parse_word(&s).unwrap(), w);
        let e = GeneratorWord::identity(5);
        assert_eq!(parse_word(&print_word(&e)).unwrap(), e);
    }

    #[test]
    fn other_alphabets() {
        let w = parse_simplex("t(1)", Flavor::Cyclic).unwrap();
        assert_eq!(w.gens(), &[SimplexGen::Cyc(1)]);
        assert!(parse_simplex("sqrt_t(1)", Flavor::Cyclic).is_err());
        let w = parse_simplex("s(0,0).dl(1,1)", Flavor::Simplicial).unwrap();
        assert_eq!(w.gens(), &[SimplexGen::Face(1, 1), SimplexGen::Degen(0, 0)]);
        let a = parse_atl("a(3,2)").unwrap();
        assert_eq!(a.gens(), &[AtlGen::A(3, 2)]);
        assert_eq!(parse_atl("loopid(2,1,1).T(2)").unwrap().gens().len(), 2);
        assert_eq!(parse_atl("q(1)").unwrap_err().kind, ErrorKind::Syntax);
    }

    #[test]
    fn render_underlines_span() {
        let src = "b(3,0).b(3,0)";
        let e = parse_word(src).unwrap_err();
        assert!(e.render(src).ends_with("      ^"));
    }
}
