//! Lexer and recursive-descent parser for the expression grammar.
//!
//! Grammar (whitespace between tokens is ignored):
//!
//! ```text
//! expr     := '-'? term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' natural)? ('/' positive-integer)?
//! base     := rational | 'x' | 'exp' '(' expr ')'
//!           | 'alg' '(' intpoly ',' srat ',' srat ',' srat ',' srat ')'
//!           | '(' expr ')'
//! rational := natural ('/' positive-integer)?
//! srat     := '-'? rational
//! intpoly  := '-'? iterm (('+' | '-') iterm)*
//! iterm    := ifactor ('*' ifactor)*
//! ifactor  := natural | 't' ('^' natural)? | '(' intpoly ')'
//! ```
//!
//! The leading `-` on sums and the trailing `/ n` on factors extend the core
//! grammar so printed normal forms such as `-1 + exp(x)` and `x/2` read back
//! verbatim. Division exists only in those two integer-denominator forms; the
//! ring has no general inverses.
//!
//! `alg(f, a, b, c, d)` denotes the unique root of the integer polynomial
//! `f(t)` inside the complex box `[a, b] x [c, d]`. A flat box (`a = b` or
//! `c = d`) pins an exact coordinate; validation widens it symmetrically
//! until the box isolates the root, so `alg(t^2 - 2, 1, 2, 0, 0)` names the
//! real square root of two. All such constants appearing in one parse share
//! a single working field, built by repeated field joins.

use crate::error::{Error, Result};
use crate::expcore::ExpPoly;
use crate::numberfield::isolate::Rectangle;
use crate::numberfield::{nf_extend, nf_init, FieldElement, NumberField};
use crate::poly::{IntPoly, Poly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Nat(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Nat(n) => format!("number {n}"),
            Tok::Name(s) => format!("name '{s}'"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
        }
    }
}

struct Token {
    tok: Tok,
    pos: usize,
}

fn syntax(pos: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        position: pos,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let pos = i;
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digit run");
                toks.push(Token {
                    tok: Tok::Nat(n),
                    pos,
                });
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                toks.push(Token {
                    tok: Tok::Name(text[start..i].to_string()),
                    pos,
                });
                continue;
            }
            other => {
                return Err(syntax(
                    pos,
                    format!("unexpected character '{}'", char::from(other)),
                ))
            }
        };
        toks.push(Token { tok, pos });
        i += 1;
    }
    Ok(toks)
}

/// An algebraic constant as written: integer minimal polynomial plus the
/// corner coordinates `[re_lo, re_hi, im_lo, im_hi]` of its isolating box.
#[derive(Clone, PartialEq, Eq)]
struct AlgSpec {
    minpoly: IntPoly,
    corners: [BigRational; 4],
}

enum Ast {
    Rat(BigRational),
    X,
    Alg(usize),
    Exp(Box<Ast>),
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
}

struct Parser<'a> {
    toks: Vec<Token>,
    i: usize,
    end: usize,
    algs: &'a mut Vec<AlgSpec>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.tok)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |t| t.pos)
    }

    fn bump(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.i).map(|t| &t.tok);
        if t.is_some() {
            self.i += 1;
        }
        t
    }

    fn eat(&mut self, want: &Tok) -> Result<()> {
        let pos = self.pos();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            Some(t) => Err(syntax(
                pos,
                format!("expected {}, found {}", want.describe(), t.describe()),
            )),
            None => Err(syntax(
                pos,
                format!("expected {}, found end of input", want.describe()),
            )),
        }
    }

    fn natural(&mut self, what: &str) -> Result<BigInt> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Nat(n)) => Ok(n.clone()),
            Some(t) => Err(syntax(
                pos,
                format!("expected {what}, found {}", t.describe()),
            )),
            None => Err(syntax(pos, format!("expected {what}, found end of input"))),
        }
    }

    /// Natural-number exponent for '^', range-checked.
    fn exponent(&mut self) -> Result<u32> {
        let pos = self.pos();
        let n = self.natural("exponent")?;
        n.to_u32()
            .ok_or_else(|| syntax(pos, format!("exponent {n} is too large")))
    }

    /// Strictly positive integer denominator for '/'.
    fn denominator(&mut self) -> Result<BigInt> {
        let pos = self.pos();
        let n = self.natural("denominator")?;
        if n.is_zero() {
            return Err(syntax(pos, "denominator must be positive"));
        }
        Ok(n)
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut acc = if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            Ast::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = Ast::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = Ast::Add(Box::new(acc), Box::new(Ast::Neg(Box::new(self.term()?))));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.bump();
            acc = Ast::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Ast> {
        let mut node = self.base()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            let n = self.exponent()?;
            node = Ast::Pow(Box::new(node), n);
        }
        if matches!(self.peek(), Some(Tok::Slash)) {
            self.bump();
            let d = self.denominator()?;
            node = Ast::Mul(
                Box::new(node),
                Box::new(Ast::Rat(BigRational::new(BigInt::one(), d))),
            );
        }
        Ok(node)
    }

    fn base(&mut self) -> Result<Ast> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Nat(n)) => {
                let n = n.clone();
                if matches!(self.peek(), Some(Tok::Slash)) {
                    self.bump();
                    let d = self.denominator()?;
                    Ok(Ast::Rat(BigRational::new(n, d)))
                } else {
                    Ok(Ast::Rat(BigRational::from_integer(n)))
                }
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.eat(&Tok::RParen)?;
                Ok(e)
            }
            Some(Tok::Name(name)) => match name.as_str() {
                "x" => Ok(Ast::X),
                "exp" => {
                    self.eat(&Tok::LParen)?;
                    let e = self.expr()?;
                    self.eat(&Tok::RParen)?;
                    Ok(Ast::Exp(Box::new(e)))
                }
                "alg" => self.alg(),
                other => Err(syntax(pos, format!("unknown name '{other}'"))),
            },
            Some(t) => Err(syntax(
                pos,
                format!("expected an expression, found {}", t.describe()),
            )),
            None => Err(syntax(pos, "expected an expression, found end of input")),
        }
    }

    fn alg(&mut self) -> Result<Ast> {
        self.eat(&Tok::LParen)?;
        let minpoly = self.intpoly()?;
        let mut corners = Vec::with_capacity(4);
        for _ in 0..4 {
            self.eat(&Tok::Comma)?;
            corners.push(self.srat()?);
        }
        self.eat(&Tok::RParen)?;
        let spec = AlgSpec {
            minpoly,
            corners: [
                corners[0].clone(),
                corners[1].clone(),
                corners[2].clone(),
                corners[3].clone(),
            ],
        };
        let idx = match self.algs.iter().position(|s| *s == spec) {
            Some(i) => i,
            None => {
                self.algs.push(spec);
                self.algs.len() - 1
            }
        };
        Ok(Ast::Alg(idx))
    }

    /// Signed rational literal, used only for box corners.
    fn srat(&mut self) -> Result<BigRational> {
        let neg = if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            true
        } else {
            false
        };
        let n = self.natural("rational")?;
        let q = if matches!(self.peek(), Some(Tok::Slash)) {
            self.bump();
            let d = self.denominator()?;
            BigRational::new(n, d)
        } else {
            BigRational::from_integer(n)
        };
        Ok(if neg { -q } else { q })
    }

    fn intpoly(&mut self) -> Result<IntPoly> {
        let mut acc = if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            -&self.iterm()?
        } else {
            self.iterm()?
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.iterm()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.iterm()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn iterm(&mut self) -> Result<IntPoly> {
        let mut acc = self.ifactor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.bump();
            acc = &acc * &self.ifactor()?;
        }
        Ok(acc)
    }

    fn ifactor(&mut self) -> Result<IntPoly> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Nat(n)) => Ok(Poly::constant(n.clone())),
            Some(Tok::Name(name)) if name == "t" => {
                if matches!(self.peek(), Some(Tok::Caret)) {
                    self.bump();
                    let n = self.exponent()?;
                    Ok(Poly::monomial(BigInt::one(), n as usize))
                } else {
                    Ok(Poly::x())
                }
            }
            Some(Tok::LParen) => {
                let p = self.intpoly()?;
                self.eat(&Tok::RParen)?;
                Ok(p)
            }
            Some(t) => Err(syntax(
                pos,
                format!("expected an integer polynomial in t, found {}", t.describe()),
            )),
            None => Err(syntax(
                pos,
                "expected an integer polynomial in t, found end of input",
            )),
        }
    }
}

fn parse_ast(text: &str, algs: &mut Vec<AlgSpec>) -> Result<Ast> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        i: 0,
        end: text.len(),
        algs,
    };
    let ast = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(syntax(p.pos(), format!("unexpected {}", t.describe())));
    }
    Ok(ast)
}

/// Mark input-shaped field errors as constant-validation failures; resource
/// caps pass through unchanged.
fn as_bad_constant(e: Error) -> Error {
    if e.exit_code() == 1 {
        Error::BadAlgebraicConstant(Box::new(e))
    } else {
        e
    }
}

/// Validate one `alg` constant and build its field. Flat boxes are widened
/// symmetrically, retrying with sharper widenings when the first capture is
/// not isolating.
fn alg_field(spec: &AlgSpec, cfg: &crate::Config) -> Result<NumberField> {
    let [a, b, c, d] = &spec.corners;
    if a > b || c > d {
        return Err(Error::BadAlgebraicConstant(Box::new(Error::BoxNotIsolating)));
    }
    if a < b && c < d {
        let rect = Rectangle::new(a.clone(), b.clone(), c.clone(), d.clone());
        return nf_init(&spec.minpoly, &rect, cfg).map_err(as_bad_constant);
    }
    let span = {
        let w = b - a;
        let h = d - c;
        let m = if w > h { w } else { h };
        if m.is_zero() {
            BigRational::one()
        } else {
            m
        }
    };
    let mut last = Error::BoxNotIsolating;
    for shift in [3u32, 8, 16, 32, 64] {
        let eps = &span / BigRational::from_integer(BigInt::one() << shift);
        let (x0, x1) = if a < b {
            (a.clone(), b.clone())
        } else {
            (a - &eps, b + &eps)
        };
        let (y0, y1) = if c < d {
            (c.clone(), d.clone())
        } else {
            (c - &eps, d + &eps)
        };
        match nf_init(&spec.minpoly, &Rectangle::new(x0, x1, y0, y1), cfg) {
            Ok(f) => return Ok(f),
            Err(Error::BoxNotIsolating) => last = Error::BoxNotIsolating,
            Err(e) => return Err(as_bad_constant(e)),
        }
    }
    Err(Error::BadAlgebraicConstant(Box::new(last)))
}

/// Join the fields of all constants into one working field and return each
/// constant's image there.
fn constant_images(algs: &[AlgSpec], cfg: &crate::Config) -> Result<Vec<FieldElement>> {
    let mut field = NumberField::rationals();
    let mut images: Vec<FieldElement> = Vec::new();
    for spec in algs {
        let fi = alg_field(spec, cfg)?;
        let (joined, old, new) = nf_extend(&field, &fi, cfg)?;
        for img in &mut images {
            *img = old.apply(img);
        }
        images.push(new.gen_image().clone());
        field = joined;
    }
    Ok(images)
}

fn eval_ast(ast: &Ast, images: &[FieldElement]) -> ExpPoly {
    match ast {
        Ast::Rat(q) => ExpPoly::from_element(FieldElement::from_rational(q.clone())),
        Ast::X => ExpPoly::var_x(),
        Ast::Alg(i) => ExpPoly::from_element(images[*i].clone()),
        Ast::Exp(a) => eval_ast(a, images).exp(),
        Ast::Neg(a) => eval_ast(a, images).scale(&FieldElement::from_int(-1)),
        Ast::Add(a, b) => &eval_ast(a, images) + &eval_ast(b, images),
        Ast::Mul(a, b) => &eval_ast(a, images) * &eval_ast(b, images),
        Ast::Pow(a, n) => eval_ast(a, images).pow(*n),
    }
}

/// Parse one expression into its normal form.
pub fn parse(text: &str, cfg: &crate::Config) -> Result<ExpPoly> {
    Ok(parse_many(&[text], cfg)?.pop().expect("one input"))
}

/// Parse several expressions over one shared working field, so constants
/// from different inputs can meet in later arithmetic.
pub fn parse_many(texts: &[&str], cfg: &crate::Config) -> Result<Vec<ExpPoly>> {
    let mut algs = Vec::new();
    let mut asts = Vec::with_capacity(texts.len());
    for t in texts {
        asts.push(parse_ast(t, &mut algs)?);
    }
    let images = constant_images(&algs, cfg)?;
    Ok(asts.iter().map(|a| eval_ast(a, &images)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Config;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn rationals_and_x() {
        let p = parse("1/2 + x - 3", &cfg()).unwrap();
        let q = parse("x - 5/2", &cfg()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn exponent_and_division_forms() {
        let p = parse("x^2/2", &cfg()).unwrap();
        let q = parse("1/2 * x * x", &cfg()).unwrap();
        assert_eq!(p, q);
        assert_eq!(parse("2^3", &cfg()).unwrap(), parse("8", &cfg()).unwrap());
    }

    #[test]
    fn exp_products_merge() {
        let p = parse("exp(1)*exp(x)", &cfg()).unwrap();
        let q = parse("exp(1 + x)", &cfg()).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.terms().len(), 1);
    }

    #[test]
    fn unary_minus_binds_first_term() {
        let p = parse("-1 + exp(x)", &cfg()).unwrap();
        let q = parse("exp(x) - 1", &cfg()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn worked_input_has_height_two() {
        let p = parse("exp(exp(x/2 + x^2)) + x^3", &cfg()).unwrap();
        assert_eq!(p.height(), 2);
    }

    #[test]
    fn empty_exp_is_a_syntax_error_at_offset_four() {
        match parse("exp()", &cfg()) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn trailing_garbage_is_rejected() {
        assert!(matches!(
            parse("x + ", &cfg()),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse("x 2", &cfg()),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse("y", &cfg()),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert!(matches!(parse("1/0", &cfg()), Err(Error::Syntax { .. })));
        assert!(matches!(parse("x/0", &cfg()), Err(Error::Syntax { .. })));
    }

    #[test]
    fn algebraic_constant_sqrt_two() {
        let p = parse("alg(t^2 - 2, 1, 2, 0, 0)^2", &cfg()).unwrap();
        assert_eq!(p, parse("2", &cfg()).unwrap());
    }

    #[test]
    fn flat_box_is_widened_for_real_roots() {
        let p = parse("alg(t^2 - 2, 1, 2, 0, 0) * x", &cfg()).unwrap();
        assert!(p.poly_part().coeff(1).as_rational().is_none());
        assert_eq!(p.poly_part().degree(), Some(1));
    }

    #[test]
    fn two_constants_share_a_working_field() {
        let p = parse(
            "alg(t^2 - 2, 1, 2, 0, 0) + alg(t^2 - 3, 1, 2, 0, 0)",
            &cfg(),
        )
        .unwrap();
        let sq = &p * &p;
        let five = parse("5", &cfg()).unwrap();
        let cross = &sq - &five;
        let crosssq = &cross * &cross;
        assert_eq!(crosssq, parse("24", &cfg()).unwrap());
    }

    #[test]
    fn parse_many_aligns_fields_across_inputs() {
        let ps = parse_many(
            &[
                "alg(t^2 - 2, 1, 2, 0, 0)",
                "alg(t^2 - 2, 1, 2, 0, 0) + 1",
            ],
            &cfg(),
        )
        .unwrap();
        let one = parse("1", &cfg()).unwrap();
        assert_eq!(&ps[0] + &one, ps[1]);
    }

    #[test]
    fn reducible_minpoly_is_a_bad_constant() {
        assert!(matches!(
            parse("alg(t^2 - 1, 1/2, 2, -1, 1)", &cfg()),
            Err(Error::BadAlgebraicConstant(_))
        ));
    }

    #[test]
    fn box_with_no_root_is_a_bad_constant() {
        assert!(matches!(
            parse("alg(t^2 - 2, 3, 4, -1, 1)", &cfg()),
            Err(Error::BadAlgebraicConstant(_))
        ));
    }

    #[test]
    fn imaginary_constant_round_trips_through_arithmetic() {
        let p = parse("alg(t^2 + 1, -1, 1, 1/2, 2)^2", &cfg()).unwrap();
        assert_eq!(p, parse("-1", &cfg()).unwrap());
    }
}
