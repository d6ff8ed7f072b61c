//! Sparse multivariate polynomials with exact integer coefficients.
//!
//! Variables are jet variables: an ambient axis (`x`, `y`, `z`) together
//! with a jet order, so `x` itself is the order-0 variable `x_0`. A
//! [`Poly`] maps monomials to nonzero big-integer coefficients; all maps
//! are ordered, so iteration, arithmetic, and printing are deterministic.
//!
//! The module also carries the jet-specific primitives: truncated
//! substitution of jet series into an ambient polynomial
//! ([`Poly::substitute_jets`]), reduction modulo a set of vanishing
//! variables, monomial content extraction, and partial derivatives.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::lin::V3;

/// One of the three ambient coordinate axes.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    /// All axes in coordinate order.
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    /// Coordinate index: x is 0, y is 1, z is 2.
    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }

    /// Lower-case name.
    pub fn name(self) -> &'static str {
        match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        }
    }

    /// Parses "x", "y" or "z".
    pub fn from_name(s: &str) -> Option<Axis> {
        match s {
            "x" => Some(Axis::X),
            "y" => Some(Axis::Y),
            "z" => Some(Axis::Z),
            _ => None,
        }
    }
}

/// A jet variable: an axis and a jet order. The ambient variable `x` is
/// `x_0`; the order-`i` jet coordinate of `x` is `x_i`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Var {
    pub axis: Axis,
    pub order: u16,
}

impl Var {
    pub fn new(axis: Axis, order: u16) -> Var {
        Var { axis, order }
    }

    /// The order-0 (ambient) variable on an axis.
    pub fn ambient(axis: Axis) -> Var {
        Var { axis, order: 0 }
    }

    /// Renders the variable name in the requested style.
    pub fn render(self, style: VarStyle) -> String {
        let mut s = String::new();
        match style {
            VarStyle::Ambient if self.order == 0 => s.push_str(self.axis.name()),
            _ => {
                let _ = write!(s, "{}_{}", self.axis.name(), self.order);
            }
        }
        s
    }
}

/// How variable names are printed: `Ambient` renders order-0 variables as
/// bare `x`/`y`/`z` (higher orders fall back to subscripts), `Jet` always
/// renders `x_0`, `y_2`, ….
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VarStyle {
    Ambient,
    Jet,
}

/// A power product of jet variables. Exponents are strictly positive;
/// the empty product is the monomial 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct Monomial(BTreeMap<Var, u32>);

impl Monomial {
    /// The monomial 1.
    pub fn one() -> Monomial {
        Monomial(BTreeMap::new())
    }

    /// The monomial consisting of a single variable.
    pub fn var(v: Var) -> Monomial {
        let mut m = BTreeMap::new();
        m.insert(v, 1);
        Monomial(m)
    }

    /// Builds a monomial from (variable, exponent) pairs; zero exponents
    /// are dropped, repeated variables accumulate.
    pub fn from_exps<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Monomial {
        let mut m = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *m.entry(v).or_insert(0) += e;
            }
        }
        Monomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Exponent of a variable (0 if absent).
    pub fn exponent(&self, v: Var) -> u32 {
        self.0.get(&v).copied().unwrap_or(0)
    }

    /// The variables appearing with positive exponent.
    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0.keys().copied()
    }

    /// (variable, exponent) pairs in variable order.
    pub fn iter(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0.iter().map(|(&v, &e)| (v, e))
    }

    /// Total degree.
    pub fn degree(&self) -> u64 {
        self.0.values().map(|&e| e as u64).sum()
    }

    /// Product of two monomials.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = self.0.clone();
        for (&v, &e) in &other.0 {
            *m.entry(v).or_insert(0) += e;
        }
        Monomial(m)
    }

    /// Exact quotient, if `other` divides `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut m = self.0.clone();
        for (&v, &e) in &other.0 {
            let have = m.get_mut(&v)?;
            if *have < e {
                return None;
            }
            *have -= e;
            if *have == 0 {
                m.remove(&v);
            }
        }
        Some(Monomial(m))
    }

    /// Componentwise gcd (per-variable minimum exponent).
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = BTreeMap::new();
        for (&v, &e) in &self.0 {
            let e2 = other.exponent(v);
            let g = e.min(e2);
            if g > 0 {
                m.insert(v, g);
            }
        }
        Monomial(m)
    }

    /// For a monomial in ambient (order-0) variables only: its exponent
    /// triple. `None` if any higher-order jet variable appears.
    pub fn exponents3(&self) -> Option<V3> {
        let mut e = [0i64; 3];
        for (&v, &k) in &self.0 {
            if v.order != 0 {
                return None;
            }
            e[v.axis.index()] = k as i64;
        }
        Some(e)
    }

    fn render(&self, style: VarStyle, starred: bool, out: &mut String) {
        let mut first = true;
        for (&v, &e) in &self.0 {
            if !first && starred {
                out.push('*');
            }
            first = false;
            out.push_str(&v.render(style));
            if e > 1 {
                let _ = write!(out, "^{}", e);
            }
        }
    }
}

/// A sparse polynomial: monomials mapped to nonzero integer coefficients.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct Poly(BTreeMap<Monomial, BigInt>);

impl Poly {
    /// The zero polynomial.
    pub fn zero() -> Poly {
        Poly(BTreeMap::new())
    }

    /// The constant polynomial 1.
    pub fn one() -> Poly {
        Poly::int(1)
    }

    /// A constant polynomial from a machine integer.
    pub fn int(c: i64) -> Poly {
        Poly::constant(BigInt::from(c))
    }

    /// A constant polynomial.
    pub fn constant(c: BigInt) -> Poly {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(Monomial::one(), c);
        }
        Poly(m)
    }

    /// The polynomial consisting of a single variable.
    pub fn var(v: Var) -> Poly {
        Poly::term(Monomial::var(v), BigInt::one())
    }

    /// The ambient (order-0) variable on an axis.
    pub fn ambient(axis: Axis) -> Poly {
        Poly::var(Var::ambient(axis))
    }

    /// A single term.
    pub fn term(m: Monomial, c: BigInt) -> Poly {
        let mut t = BTreeMap::new();
        if !c.is_zero() {
            t.insert(m, c);
        }
        Poly(t)
    }

    /// Accumulates terms, merging duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(terms: I) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of terms.
    pub fn term_count(&self) -> usize {
        self.0.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> + '_ {
        self.0.iter()
    }

    /// If the polynomial is a single term, that term.
    pub fn as_single_term(&self) -> Option<(&Monomial, &BigInt)> {
        if self.0.len() == 1 {
            self.0.iter().next()
        } else {
            None
        }
    }

    /// If the polynomial is a (possibly zero) constant, its value.
    pub fn as_constant(&self) -> Option<BigInt> {
        if self.0.is_empty() {
            return Some(BigInt::zero());
        }
        let (m, c) = self.0.iter().next()?;
        if self.0.len() == 1 && m.is_one() {
            Some(c.clone())
        } else {
            None
        }
    }

    /// Every variable appearing in some term.
    pub fn variables(&self) -> BTreeSet<Var> {
        let mut vs = BTreeSet::new();
        for m in self.0.keys() {
            vs.extend(m.vars());
        }
        vs
    }

    /// Scales by an integer.
    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly(self.0.iter().map(|(m, k)| (m.clone(), k * c)).collect())
    }

    /// Multiplies by a monomial.
    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly(self.0.iter().map(|(k, c)| (k.mul(m), c.clone())).collect())
    }

    /// Integer power by repeated squaring.
    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Substitutes the truncated jet series `x = sum_i x_i t^i` (and
    /// likewise for `y`, `z`) into an ambient polynomial and collects the
    /// coefficients of `t^0 .. t^m`: the jet equations `F_0 .. F_m`.
    ///
    /// The receiver must involve only order-0 variables.
    pub fn substitute_jets(&self, m: usize) -> Vec<Poly> {
        debug_assert!(
            self.variables().iter().all(|v| v.order == 0),
            "substitute_jets expects an ambient polynomial"
        );
        let series: [Vec<Poly>; 3] = [
            jet_series(Axis::X, m),
            jet_series(Axis::Y, m),
            jet_series(Axis::Z, m),
        ];
        let mut total: Vec<Poly> = (0..=m).map(|_| Poly::zero()).collect();
        for (mono, c) in &self.0 {
            let mut acc: Vec<Poly> = (0..=m).map(|_| Poly::zero()).collect();
            acc[0] = Poly::constant(c.clone());
            for (v, e) in mono.iter() {
                for _ in 0..e {
                    acc = series_mul(&acc, &series[v.axis.index()], m);
                }
            }
            for (t, a) in total.iter_mut().zip(acc) {
                *t = &*t + &a;
            }
        }
        total
    }

    /// Drops every term containing a variable from the vanishing set.
    pub fn reduce_mod_vanishing(&self, vanishing: &BTreeSet<Var>) -> Poly {
        Poly(
            self.0
                .iter()
                .filter(|(m, _)| !m.vars().any(|v| vanishing.contains(&v)))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        )
    }

    /// Splits a nonzero polynomial as (monomial gcd of its terms, content-
    /// free cofactor). Panics on the zero polynomial.
    pub fn monomial_content(&self) -> (Monomial, Poly) {
        assert!(!self.is_zero(), "monomial_content of the zero polynomial");
        let mut iter = self.0.keys();
        let mut g = iter.next().expect("nonzero").clone();
        for m in iter {
            g = g.gcd(m);
            if g.is_one() {
                break;
            }
        }
        let cof = Poly(
            self.0
                .iter()
                .map(|(m, c)| (m.try_div(&g).expect("gcd divides"), c.clone()))
                .collect(),
        );
        (g, cof)
    }

    /// Formal partial derivative with respect to a variable.
    pub fn partial_derivative(&self, v: Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.0 {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let mut reduced: BTreeMap<Var, u32> = m.iter().collect();
            if e == 1 {
                reduced.remove(&v);
            } else {
                reduced.insert(v, e - 1);
            }
            out.add_term(Monomial(reduced), c * BigInt::from(e));
        }
        out
    }

    /// Evaluates at a point; every variable of the polynomial must be
    /// assigned a value.
    pub fn evaluate(&self, values: &BTreeMap<Var, BigInt>) -> BigInt {
        let mut total = BigInt::zero();
        for (m, c) in &self.0 {
            let mut prod = c.clone();
            for (v, e) in m.iter() {
                let val = values.get(&v).expect("evaluate: unassigned variable");
                prod *= val.pow(e);
            }
            total += prod;
        }
        total
    }

    /// The support of an ambient polynomial as exponent triples, sorted
    /// ascending. Panics if a higher-order jet variable appears.
    pub fn support3(&self) -> Vec<V3> {
        let mut pts: Vec<V3> = self
            .0
            .keys()
            .map(|m| m.exponents3().expect("support3 expects an ambient polynomial"))
            .collect();
        pts.sort();
        pts
    }

    /// Builds an ambient polynomial from (exponent triple, coefficient)
    /// pairs.
    pub fn from_support<I: IntoIterator<Item = (V3, BigInt)>>(points: I) -> Poly {
        Poly::from_terms(points.into_iter().map(|(e, c)| {
            let m = Monomial::from_exps(Axis::ALL.iter().enumerate().filter_map(|(i, &a)| {
                let k = e[i];
                assert!(k >= 0, "negative exponent in support");
                if k > 0 {
                    Some((Var::ambient(a), k as u32))
                } else {
                    None
                }
            }));
            (m, c)
        }))
    }

    /// Canonical text form: descending monomial order, explicit `*`
    /// between factors, as in `z^3+y^3*z+x^2*y^2`.
    pub fn to_text(&self, style: VarStyle) -> String {
        self.render(style, true)
    }

    /// Compact text form without `*`, as in `z_2^3+x_1^2y_2^2`. Used for
    /// graph labels.
    pub fn to_compact(&self, style: VarStyle) -> String {
        self.render(style, false)
    }

    fn render(&self, style: VarStyle, starred: bool) -> String {
        if self.0.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.0.iter().rev().enumerate() {
            let neg = c.is_negative();
            if neg {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let mag = c.magnitude();
            if m.is_one() {
                let _ = write!(out, "{}", mag);
            } else {
                if !mag.is_one() {
                    let _ = write!(out, "{}", mag);
                    if starred {
                        out.push('*');
                    }
                }
                m.render(style, starred, &mut out);
            }
        }
        out
    }

    /// Parses an ambient polynomial in `x`, `y`, `z` with integer
    /// coefficients, `+ - * ^` and parentheses; `*` may be omitted.
    pub fn parse(input: &str) -> Result<Poly, ParseError> {
        let mut p = Parser { bytes: input.as_bytes(), pos: 0 };
        let poly = p.expr()?;
        p.skip_ws();
        if p.pos != p.bytes.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(poly)
    }
}

fn jet_series(axis: Axis, m: usize) -> Vec<Poly> {
    (0..=m).map(|i| Poly::var(Var::new(axis, i as u16))).collect()
}

fn series_mul(a: &[Poly], b: &[Poly], m: usize) -> Vec<Poly> {
    let mut out: Vec<Poly> = (0..=m).map(|_| Poly::zero()).collect();
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j > m {
                break;
            }
            if bj.is_zero() {
                continue;
            }
            let prod = ai * bj;
            out[i + j] = &out[i + j] + &prod;
        }
    }
    out
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.0 {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.0 {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.0 {
            for (mb, cb) in &rhs.0 {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly(self.0.iter().map(|(m, c)| (m.clone(), -c)).collect())
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// A parse failure with the byte position where it occurred.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> ParseError {
        ParseError { position: self.pos, message: String::from(message) }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut sign = 1i64;
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
            }
            Some(b'-') => {
                self.pos += 1;
                sign = -1;
            }
            _ => {}
        }
        let mut total = self.product()?.scale(&BigInt::from(sign));
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.product()?;
                    total = &total + &t;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.product()?;
                    total = &total - &t;
                }
                _ => return Ok(total),
            }
        }
    }

    fn product(&mut self) -> Result<Poly, ParseError> {
        let mut total = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.power()?;
                    total = &total * &f;
                }
                // implicit multiplication: a factor starts right away
                Some(c) if c == b'(' || c.is_ascii_digit() || is_var_byte(c) => {
                    let f = self.power()?;
                    total = &total * &f;
                }
                _ => return Ok(total),
            }
        }
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.exponent()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an exponent"));
        }
        let digits = core::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        digits.parse::<u32>().map_err(|_| ParseError {
            position: start,
            message: String::from("exponent out of range"),
        })
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() == Some(b')') {
                    self.pos += 1;
                    Ok(inner)
                } else {
                    Err(self.err("expected ')'"))
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits =
                    core::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
                let c = BigInt::parse_bytes(digits.as_bytes(), 10).ok_or(ParseError {
                    position: start,
                    message: String::from("bad integer"),
                })?;
                Ok(Poly::constant(c))
            }
            Some(c) if is_var_byte(c) => {
                let axis = match c {
                    b'x' => Axis::X,
                    b'y' => Axis::Y,
                    _ => Axis::Z,
                };
                self.pos += 1;
                Ok(Poly::ambient(axis))
            }
            _ => Err(self.err("expected a variable, integer, or '('")),
        }
    }
}

fn is_var_byte(c: u8) -> bool {
    c == b'x' || c == b'y' || c == b'z'
}
