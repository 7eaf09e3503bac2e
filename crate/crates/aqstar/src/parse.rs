//! Text syntax for elements: surds `p+q*s`, polynomials in `x`, and polynomials in `x`
//! with rational-function coefficients in `y`.

use std::fmt;

use aqstar_core::kxl::{KxlElement, RatFunc};
use aqstar_core::poly::{IntPoly, RatPoly};
use aqstar_core::{FracElement, OrderElement, QuadraticOrder};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub input: String,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot parse {:?}: {}", self.input, self.message)
    }
}

impl std::error::Error for ParseError {}

type Result<T> = std::result::Result<T, String>;

#[derive(Debug, Clone, PartialEq)]
enum Expr {
    Num(BigInt),
    Var(char),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i32),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(char),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(d);
                chars.next();
            }
            out.push(Tok::Num(digits.parse().expect("ascii digits")));
        } else if c.is_ascii_alphabetic() {
            out.push(Tok::Var(c));
            chars.next();
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            chars.next();
        } else {
            return Err(format!("unexpected character {c:?}"));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else if matches!(self.peek(), Some(Tok::Var(_) | Tok::Op('('))) {
                // juxtaposition: 2x, 3(x+1)
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let e: i32 = n.try_into().map_err(|_| "exponent too large".to_string())?;
                Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }))
            }
            _ => Err("expected an integer exponent after '^'".into()),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::Var(v)) => {
                self.pos += 1;
                Ok(Expr::Var(v))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err("missing ')'".into());
                }
                Ok(e)
            }
            Some(t) => Err(format!("unexpected token {t:?}")),
            None => Err("unexpected end of input".into()),
        }
    }
}

fn parse_expr(s: &str) -> Result<Expr> {
    let mut p = Parser { toks: lex(s)?, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(format!("trailing input at token {}", p.pos + 1));
    }
    Ok(e)
}

/// Arithmetic needed to evaluate an expression tree.
trait Eval: Sized + Clone {
    type Ctx;
    fn num(ctx: &Self::Ctx, n: BigInt) -> Self;
    fn var(ctx: &Self::Ctx, c: char) -> Result<Self>;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Result<Self>;
}

fn eval<T: Eval>(ctx: &T::Ctx, e: &Expr) -> Result<T> {
    Ok(match e {
        Expr::Num(n) => T::num(ctx, n.clone()),
        Expr::Var(c) => T::var(ctx, *c)?,
        Expr::Add(a, b) => eval::<T>(ctx, a)?.add(&eval(ctx, b)?),
        Expr::Sub(a, b) => eval::<T>(ctx, a)?.sub(&eval(ctx, b)?),
        Expr::Mul(a, b) => eval::<T>(ctx, a)?.mul(&eval(ctx, b)?),
        Expr::Div(a, b) => eval::<T>(ctx, a)?.div(&eval(ctx, b)?)?,
        Expr::Neg(a) => T::num(ctx, BigInt::zero()).sub(&eval(ctx, a)?),
        Expr::Pow(a, k) => {
            let base = eval::<T>(ctx, a)?;
            let one = T::num(ctx, BigInt::one());
            let p = (0..k.unsigned_abs()).fold(one.clone(), |acc, _| acc.mul(&base));
            if *k < 0 {
                one.div(&p)?
            } else {
                p
            }
        }
    })
}

/// `p + q·s` with `s² = r`.
#[derive(Clone)]
struct Surd {
    p: BigRational,
    q: BigRational,
    r: BigInt,
}

impl Eval for Surd {
    type Ctx = BigInt;
    fn num(r: &BigInt, n: BigInt) -> Self {
        Surd { p: BigRational::from_integer(n), q: BigRational::zero(), r: r.clone() }
    }
    fn var(r: &BigInt, c: char) -> Result<Self> {
        if c != 's' {
            return Err(format!("unknown symbol {c:?}; elements are written in s"));
        }
        Ok(Surd { p: BigRational::zero(), q: BigRational::one(), r: r.clone() })
    }
    fn add(&self, o: &Self) -> Self {
        Surd { p: &self.p + &o.p, q: &self.q + &o.q, r: self.r.clone() }
    }
    fn sub(&self, o: &Self) -> Self {
        Surd { p: &self.p - &o.p, q: &self.q - &o.q, r: self.r.clone() }
    }
    fn mul(&self, o: &Self) -> Self {
        let r = BigRational::from_integer(self.r.clone());
        Surd { p: &self.p * &o.p + &self.q * &o.q * r, q: &self.p * &o.q + &self.q * &o.p, r: self.r.clone() }
    }
    fn div(&self, o: &Self) -> Result<Self> {
        let r = BigRational::from_integer(self.r.clone());
        let n = &o.p * &o.p - &o.q * &o.q * r;
        if n.is_zero() {
            return Err("division by zero".into());
        }
        let conj = Surd { p: &o.p / &n, q: -&o.q / &n, r: self.r.clone() };
        Ok(self.mul(&conj))
    }
}

/// Square of the symbol `s`: `Δ/4` for even `Δ`, else `Δ`.
pub fn surd_radicand(order: &QuadraticOrder) -> BigInt {
    let d = order.disc();
    if (d % 2u8).is_zero() {
        d / 4
    } else {
        d.clone()
    }
}

fn wrap<T>(input: &str, r: Result<T>) -> std::result::Result<T, ParseError> {
    r.map_err(|message| ParseError { input: input.to_string(), message })
}

/// Field element written as `p+q*s`, or integral coordinates `u,v` in the basis `(1, ω)`.
pub fn parse_frac_element(order: &QuadraticOrder, input: &str) -> std::result::Result<FracElement, ParseError> {
    if let Some((u, v)) = input.split_once(',') {
        let coord = |t: &str| t.trim().parse::<BigInt>().map_err(|e| e.to_string());
        let (u, v) = wrap(input, coord(u).and_then(|u| Ok((u, coord(v)?))))?;
        return Ok(OrderElement::new(u, v).into());
    }
    let r = surd_radicand(order);
    let x = wrap(input, parse_expr(input).and_then(|e| eval::<Surd>(&r, &e)))?;
    Ok(order.frac_from_surd(&x.p, &x.q))
}

/// Element of the order; rejects elements outside it.
pub fn parse_element(order: &QuadraticOrder, input: &str) -> std::result::Result<OrderElement, ParseError> {
    let x = parse_frac_element(order, input)?;
    x.as_integral().ok_or_else(|| ParseError {
        input: input.to_string(),
        message: format!("{} is not in the order of discriminant {}", order.format(&x), order.disc()),
    })
}

#[derive(Clone)]
struct Poly(RatPoly);

impl Eval for Poly {
    type Ctx = ();
    fn num(_: &(), n: BigInt) -> Self {
        Poly(RatPoly::constant(BigRational::from_integer(n)))
    }
    fn var(_: &(), c: char) -> Result<Self> {
        match c {
            'x' | 'X' => Ok(Poly(RatPoly::var())),
            _ => Err(format!("unknown variable {c:?}; polynomials are written in x")),
        }
    }
    fn add(&self, o: &Self) -> Self {
        Poly(&self.0 + &o.0)
    }
    fn sub(&self, o: &Self) -> Self {
        Poly(&self.0 - &o.0)
    }
    fn mul(&self, o: &Self) -> Self {
        Poly(&self.0 * &o.0)
    }
    fn div(&self, o: &Self) -> Result<Self> {
        match o.0.as_constant() {
            Some(c) if !c.is_zero() => Ok(Poly(self.0.scale(&c.recip()))),
            Some(_) => Err("division by zero".into()),
            None => Err("division by a non-constant polynomial".into()),
        }
    }
}

/// Polynomial in `x` with rational coefficients, e.g. `3*x^2-1/2*x+4`.
pub fn parse_rat_poly(input: &str) -> std::result::Result<RatPoly, ParseError> {
    wrap(input, parse_expr(input).and_then(|e| eval::<Poly>(&(), &e)).map(|p| p.0))
}

/// Polynomial in `x` with integer coefficients.
pub fn parse_int_poly(input: &str) -> std::result::Result<IntPoly, ParseError> {
    let p = parse_rat_poly(input)?;
    p.to_int().ok_or_else(|| ParseError { input: input.to_string(), message: "coefficients must be integers".into() })
}

#[derive(Clone)]
struct Kxl(KxlElement);

impl Eval for Kxl {
    type Ctx = ();
    fn num(_: &(), n: BigInt) -> Self {
        Kxl(KxlElement::monomial(0, RatFunc::constant(BigRational::from_integer(n))))
    }
    fn var(_: &(), c: char) -> Result<Self> {
        match c {
            'x' => Ok(Kxl(KxlElement::x())),
            'y' => Ok(Kxl(KxlElement::y())),
            _ => Err(format!("unknown variable {c:?}; elements are written in x and y")),
        }
    }
    fn add(&self, o: &Self) -> Self {
        Kxl(&self.0 + &o.0)
    }
    fn sub(&self, o: &Self) -> Self {
        Kxl(&self.0 - &o.0)
    }
    fn mul(&self, o: &Self) -> Self {
        Kxl(&self.0 * &o.0)
    }
    fn div(&self, o: &Self) -> Result<Self> {
        if o.0.degree().is_some_and(|d| d > 0) {
            return Err("division by an element involving x".into());
        }
        let c = o.0.coeff(0).inv().map_err(|_| "division by zero".to_string())?;
        Ok(Kxl(&self.0 * &KxlElement::monomial(0, c)))
    }
}

/// Polynomial in `x` whose coefficients are rational functions of `y`,
/// e.g. `x^2*(y/(y+1)) + x*(3/2)`.
pub fn parse_kxl(input: &str) -> std::result::Result<KxlElement, ParseError> {
    wrap(input, parse_expr(input).and_then(|e| eval::<Kxl>(&(), &e)).map(|k| k.0))
}

/// Renders an integer, keeping the sign on the left.
pub fn signed(n: &BigInt) -> String {
    if n.is_negative() {
        format!("-{}", n.abs())
    } else {
        n.to_string()
    }
}
