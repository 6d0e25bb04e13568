//! Exact arithmetic in the Jack parameter: arbitrary-precision rationals,
//! univariate polynomials in `a` (the parameter alpha), and reduced rational
//! functions in `a`.
//!
//! [`AlphaRat`] is the value type of every coefficient in the engine. Values
//! are kept in a canonical form so that equal values have identical
//! representations and golden-value comparison can be done on rendered text.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

pub type BigRat = BigRational;

/// Convenience: exact rational from a pair of machine integers.
pub fn rat(n: i64, d: i64) -> BigRat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Convenience: exact rational from a machine integer.
pub fn int(n: i64) -> BigRat {
    BigRational::from_integer(BigInt::from(n))
}

/// Errors produced by exact-arithmetic operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgError {
    /// Division by the zero polynomial.
    DivisionByZero,
    /// Evaluation of a rational function at a pole.
    EvalAtPole,
    /// The limit alpha -> 1 does not exist (pole survives reduction).
    LimitDoesNotExist,
    /// Text that does not match the polynomial / rational-function grammar.
    Parse(String),
}

impl fmt::Display for AlgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgError::DivisionByZero => write!(f, "division by zero polynomial"),
            AlgError::EvalAtPole => write!(f, "evaluation at pole"),
            AlgError::LimitDoesNotExist => write!(f, "limit does not exist"),
            AlgError::Parse(s) => write!(f, "parse error: {s}"),
        }
    }
}

impl std::error::Error for AlgError {}

/// A univariate polynomial in the Jack parameter, coefficients ascending by
/// power. The zero polynomial has an empty coefficient vector and trailing
/// zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AlphaPoly {
    coeffs: Vec<BigRat>,
}

impl AlphaPoly {
    pub fn new(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        AlphaPoly { coeffs }
    }

    pub fn zero() -> Self {
        AlphaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        AlphaPoly::constant(int(1))
    }

    pub fn constant(c: BigRat) -> Self {
        AlphaPoly::new(vec![c])
    }

    pub fn from_int(n: i64) -> Self {
        AlphaPoly::constant(int(n))
    }

    /// The parameter itself.
    pub fn alpha() -> Self {
        AlphaPoly::new(vec![int(0), int(1)])
    }

    /// beta = 1 - alpha.
    pub fn beta() -> Self {
        AlphaPoly::lin(1, -1)
    }

    /// The linear polynomial `c + d*a`; hook lengths are all of this shape.
    pub fn lin(c: i64, d: i64) -> Self {
        AlphaPoly::new(vec![int(c), int(d)])
    }

    /// `c + d*a` with big coefficients.
    pub fn lin_big(c: BigRat, d: BigRat) -> Self {
        AlphaPoly::new(vec![c, d])
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRat {
        self.coeffs.get(k).cloned().unwrap_or_else(|| int(0))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRat) -> BigRat {
        let mut acc = int(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> AlphaPoly {
        let mut base = self.clone();
        let mut acc = AlphaPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// True iff every coefficient is a non-negative integer.
    pub fn is_nonneg_integer_poly(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Writes the polynomial over the integers: `(p/q) * primitive` with
    /// `primitive` an integer-coefficient polynomial of content 1 and positive
    /// leading coefficient. The zero polynomial returns (0/1, []).
    fn rational_content_split(&self) -> (BigRat, Vec<BigInt>) {
        if self.is_zero() {
            return (int(0), Vec::new());
        }
        let mut denom_lcm = BigInt::one();
        for c in &self.coeffs {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
        (BigRational::new(content, denom_lcm), prim)
    }

    /// Exact polynomial division; panics if `self` is not a multiple of `d`.
    fn exact_div(&self, d: &AlphaPoly) -> AlphaPoly {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "exact_div: nonzero remainder");
        q
    }

    fn div_rem(&self, d: &AlphaPoly) -> (AlphaPoly, AlphaPoly) {
        assert!(!d.is_zero(), "div_rem by zero polynomial");
        let dd = d.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < d.coeffs.len() {
            return (AlphaPoly::zero(), self.clone());
        }
        let mut quo = vec![int(0); rem.len() - dd];
        let lead = &d.coeffs[dd];
        for k in (dd..rem.len()).rev() {
            let c = &rem[k] / lead;
            if !c.is_zero() {
                for j in 0..dd {
                    let t = &c * &d.coeffs[j];
                    rem[k - dd + j] = &rem[k - dd + j] - t;
                }
            }
            rem[k] = int(0);
            quo[k - dd] = c;
        }
        (AlphaPoly::new(quo), AlphaPoly::new(rem))
    }
}

fn int_poly_degree(p: &[BigInt]) -> usize {
    p.len() - 1
}

fn int_poly_normalize(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn int_poly_content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
    }
    g
}

fn int_poly_primitive(p: Vec<BigInt>) -> Vec<BigInt> {
    if p.is_empty() {
        return p;
    }
    let mut c = int_poly_content(&p);
    if p.last().unwrap().is_negative() {
        c = -c;
    }
    p.into_iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `f` by `g` (lc(g)^(deg f - deg g + 1) * f mod g).
fn int_poly_pseudo_rem(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = f.to_vec();
    let dg = int_poly_degree(g);
    let lg = g.last().unwrap().clone();
    while !r.is_empty() && int_poly_degree(&r) >= dg {
        let dr = int_poly_degree(&r);
        let lr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c = &*c * &lg;
        }
        for j in 0..=dg {
            let t = &lr * &g[j];
            r[dr - dg + j] = &r[dr - dg + j] - t;
        }
        r = int_poly_normalize(r);
    }
    r
}

/// Primitive-PRS gcd of two integer polynomials; result is primitive with
/// positive leading coefficient. Content is handled by the caller.
fn int_poly_gcd(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    let mut f = int_poly_primitive(int_poly_normalize(a));
    let mut g = int_poly_primitive(int_poly_normalize(b));
    if f.is_empty() {
        return g;
    }
    if g.is_empty() {
        return f;
    }
    if int_poly_degree(&f) < int_poly_degree(&g) {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        let r = int_poly_pseudo_rem(&f, &g);
        if r.is_empty() {
            return g;
        }
        if int_poly_degree(&r) == 0 {
            return vec![BigInt::one()];
        }
        f = g;
        g = int_poly_primitive(r);
    }
}

impl Add<&AlphaPoly> for &AlphaPoly {
    type Output = AlphaPoly;
    fn add(self, rhs: &AlphaPoly) -> AlphaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        AlphaPoly::new(out)
    }
}

impl Sub<&AlphaPoly> for &AlphaPoly {
    type Output = AlphaPoly;
    fn sub(self, rhs: &AlphaPoly) -> AlphaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        AlphaPoly::new(out)
    }
}

impl Mul<&AlphaPoly> for &AlphaPoly {
    type Output = AlphaPoly;
    fn mul(self, rhs: &AlphaPoly) -> AlphaPoly {
        if self.is_zero() || rhs.is_zero() {
            return AlphaPoly::zero();
        }
        let mut out = vec![int(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + a * b;
            }
        }
        AlphaPoly::new(out)
    }
}

impl Neg for &AlphaPoly {
    type Output = AlphaPoly;
    fn neg(self) -> AlphaPoly {
        AlphaPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned_binop {
    ($t:ty, $tr:ident, $m:ident) => {
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                (&self).$m(rhs)
            }
        }
        impl $tr<$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(AlphaPoly, Add, add);
forward_owned_binop!(AlphaPoly, Sub, sub);
forward_owned_binop!(AlphaPoly, Mul, mul);

/// A reduced ratio of integer-coefficient polynomials in the Jack parameter.
///
/// Canonical form: numerator and denominator are coprime integer polynomials,
/// the pair has overall content 1, and the denominator's leading coefficient
/// is positive. Equal values always have identical representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlphaRat {
    num: AlphaPoly,
    den: AlphaPoly,
}

impl AlphaRat {
    /// Canonical reduced form of `num/den`. Errors on a zero denominator.
    pub fn reduce(num: AlphaPoly, den: AlphaPoly) -> Result<AlphaRat, AlgError> {
        if den.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(AlphaRat {
                num: AlphaPoly::zero(),
                den: AlphaPoly::one(),
            });
        }
        let (nscale, nprim) = num.rational_content_split();
        let (dscale, dprim) = den.rational_content_split();
        let g = int_poly_gcd(nprim.clone(), dprim.clone());
        let gpoly = AlphaPoly::new(g.iter().map(|c| BigRational::from_integer(c.clone())).collect());
        let nred = AlphaPoly::new(nprim.iter().map(|c| BigRational::from_integer(c.clone())).collect())
            .exact_div(&gpoly);
        let dred = AlphaPoly::new(dprim.iter().map(|c| BigRational::from_integer(c.clone())).collect())
            .exact_div(&gpoly);
        // scale = nscale/dscale = p/q in lowest terms, q > 0 after BigRational
        // normalization; distribute p to the numerator and q to the denominator.
        let scale = nscale / dscale;
        let p = AlphaPoly::constant(BigRational::from_integer(scale.numer().clone()));
        let q = AlphaPoly::constant(BigRational::from_integer(scale.denom().clone()));
        Ok(AlphaRat {
            num: &nred * &p,
            den: &dred * &q,
        })
    }

    pub fn from_poly(p: AlphaPoly) -> AlphaRat {
        AlphaRat::reduce(p, AlphaPoly::one()).unwrap()
    }

    pub fn zero() -> AlphaRat {
        AlphaRat::from_poly(AlphaPoly::zero())
    }

    pub fn one() -> AlphaRat {
        AlphaRat::from_poly(AlphaPoly::one())
    }

    pub fn from_int(n: i64) -> AlphaRat {
        AlphaRat::from_poly(AlphaPoly::from_int(n))
    }

    pub fn from_rat(r: BigRat) -> AlphaRat {
        AlphaRat::from_poly(AlphaPoly::constant(r))
    }

    pub fn alpha() -> AlphaRat {
        AlphaRat::from_poly(AlphaPoly::alpha())
    }

    pub fn beta() -> AlphaRat {
        AlphaRat::from_poly(AlphaPoly::beta())
    }

    pub fn lin(c: i64, d: i64) -> AlphaRat {
        AlphaRat::from_poly(AlphaPoly::lin(c, d))
    }

    pub fn num(&self) -> &AlphaPoly {
        &self.num
    }

    pub fn den(&self) -> &AlphaPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True iff the value is a polynomial (denominator 1 after reduction).
    pub fn as_poly(&self) -> Option<&AlphaPoly> {
        if self.den == AlphaPoly::one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<AlphaRat, AlgError> {
        AlphaRat::reduce(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: u32) -> AlphaRat {
        AlphaRat::reduce(self.num.pow(e), self.den.pow(e)).unwrap()
    }

    /// Exact value at a fixed rational alpha; errors at a pole of the reduced
    /// representation.
    pub fn eval(&self, a: &BigRat) -> Result<BigRat, AlgError> {
        let d = self.den.eval(a);
        if d.is_zero() {
            return Err(AlgError::EvalAtPole);
        }
        Ok(self.num.eval(a) / d)
    }

    /// Value of the reduced representation at alpha = 1; errors when a genuine
    /// pole remains there after reduction.
    pub fn limit_at_one(&self) -> Result<BigRat, AlgError> {
        let one = int(1);
        let d = self.den.eval(&one);
        if d.is_zero() {
            return Err(AlgError::LimitDoesNotExist);
        }
        Ok(self.num.eval(&one) / d)
    }
}

impl Add<&AlphaRat> for &AlphaRat {
    type Output = AlphaRat;
    fn add(self, rhs: &AlphaRat) -> AlphaRat {
        AlphaRat::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .unwrap()
    }
}

impl Sub<&AlphaRat> for &AlphaRat {
    type Output = AlphaRat;
    fn sub(self, rhs: &AlphaRat) -> AlphaRat {
        AlphaRat::reduce(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .unwrap()
    }
}

impl Mul<&AlphaRat> for &AlphaRat {
    type Output = AlphaRat;
    fn mul(self, rhs: &AlphaRat) -> AlphaRat {
        AlphaRat::reduce(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl Div<&AlphaRat> for &AlphaRat {
    type Output = AlphaRat;
    fn div(self, rhs: &AlphaRat) -> AlphaRat {
        AlphaRat::reduce(&self.num * &rhs.den, &self.den * &rhs.num)
            .expect("division by zero rational function")
    }
}

impl Neg for &AlphaRat {
    type Output = AlphaRat;
    fn neg(self) -> AlphaRat {
        AlphaRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

forward_owned_binop!(AlphaRat, Add, add);
forward_owned_binop!(AlphaRat, Sub, sub);
forward_owned_binop!(AlphaRat, Mul, mul);
forward_owned_binop!(AlphaRat, Div, div);

// ---- text rendering and parsing ----

fn write_rat(f: &mut fmt::Formatter<'_>, c: &BigRat) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for AlphaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write_rat(f, &mag)?;
            } else {
                if !mag.is_one() {
                    write_rat(f, &mag)?;
                    write!(f, "*")?;
                }
                if k == 1 {
                    write!(f, "a")?;
                } else {
                    write!(f, "a^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for AlphaRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

struct PolyParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> PolyParser<'a> {
    fn new(s: &'a str) -> Self {
        PolyParser {
            s: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn integer(&mut self) -> Result<BigInt, AlgError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(AlgError::Parse("expected integer".into()));
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(BigInt::from_str(txt).unwrap())
    }

    /// term := rational | rational '*' apow | apow, apow := 'a' ['^' k]
    fn term(&mut self) -> Result<AlphaPoly, AlgError> {
        let mut coef = BigRational::one();
        let mut have_coef = false;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let n = self.integer()?;
            let mut c = BigRational::from_integer(n);
            if self.peek() == Some(b'/') {
                self.bump();
                let d = self.integer()?;
                if d.is_zero() {
                    return Err(AlgError::Parse("zero denominator in coefficient".into()));
                }
                c /= BigRational::from_integer(d);
            }
            coef = c;
            have_coef = true;
            if self.peek() == Some(b'*') {
                self.bump();
            } else if self.peek() != Some(b'a') {
                return Ok(AlphaPoly::constant(coef));
            }
        }
        if self.peek() == Some(b'a') {
            self.bump();
            let mut k: usize = 1;
            if self.peek() == Some(b'^') {
                self.bump();
                let e = self.integer()?;
                k = e.to_string().parse().map_err(|_| {
                    AlgError::Parse("exponent too large".into())
                })?;
            }
            let mut coeffs = vec![int(0); k + 1];
            coeffs[k] = coef;
            Ok(AlphaPoly::new(coeffs))
        } else if have_coef {
            Ok(AlphaPoly::constant(coef))
        } else {
            Err(AlgError::Parse("expected term".into()))
        }
    }

    fn poly(&mut self) -> Result<AlphaPoly, AlgError> {
        let mut neg = false;
        match self.peek() {
            Some(b'-') => {
                self.bump();
                neg = true;
            }
            Some(b'+') => {
                self.bump();
            }
            _ => {}
        }
        let t = self.term()?;
        let mut acc = if neg { -&t } else { t };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(b'-') => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }
}

impl FromStr for AlphaPoly {
    type Err = AlgError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = PolyParser::new(s);
        let poly = p.poly()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(AlgError::Parse(format!("trailing input at byte {}", p.pos)));
        }
        Ok(poly)
    }
}

impl FromStr for AlphaRat {
    type Err = AlgError;
    /// Accepts the rendered form `(<num>)/(<den>)` and also a bare polynomial.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            let close = find_matching_paren(rest)
                .ok_or_else(|| AlgError::Parse("unbalanced parentheses".into()))?;
            let num: AlphaPoly = rest[..close].parse()?;
            let tail = rest[close + 1..].trim_start();
            let tail = tail
                .strip_prefix('/')
                .ok_or_else(|| AlgError::Parse("expected '/' between numerator and denominator".into()))?
                .trim_start();
            let tail = tail
                .strip_prefix('(')
                .ok_or_else(|| AlgError::Parse("expected '(' before denominator".into()))?;
            let close2 = find_matching_paren(tail)
                .ok_or_else(|| AlgError::Parse("unbalanced parentheses".into()))?;
            if !tail[close2 + 1..].trim().is_empty() {
                return Err(AlgError::Parse("trailing input after denominator".into()));
            }
            let den: AlphaPoly = tail[..close2].parse()?;
            AlphaRat::reduce(num, den)
        } else {
            Ok(AlphaRat::from_poly(s.parse()?))
        }
    }
}

fn find_matching_paren(s: &str) -> Option<usize> {
    let mut depth = 1usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

impl Zero for AlphaRat {
    fn zero() -> Self {
        AlphaRat::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for AlphaRat {
    fn one() -> Self {
        AlphaRat::one()
    }
}

/// Coefficient field abstraction: the engine runs either symbolically in the
/// Jack parameter ([`AlphaRat`], context `()`) or over exact rationals at a
/// fixed parameter value ([`BigRat`], context = the alpha value).
///
/// All alpha-dependence enters through [`Coeff::inject`], which maps an
/// integer polynomial in the parameter into the field.
pub trait Coeff:
    Clone + PartialEq + fmt::Debug + Send + Sync + Zero + One + 'static
{
    type Ctx: Clone + PartialEq + fmt::Debug + Send + Sync + 'static;
    fn inject(ctx: &Self::Ctx, p: &AlphaPoly) -> Self;
    fn from_int(n: i64) -> Self;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn div_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

impl Coeff for AlphaRat {
    type Ctx = ();
    fn inject(_ctx: &(), p: &AlphaPoly) -> Self {
        AlphaRat::from_poly(p.clone())
    }
    fn from_int(n: i64) -> Self {
        AlphaRat::from_int(n)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div_ref(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Coeff for BigRat {
    type Ctx = BigRat;
    fn inject(alpha: &BigRat, p: &AlphaPoly) -> Self {
        p.eval(alpha)
    }
    fn from_int(n: i64) -> Self {
        int(n)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div_ref(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}
