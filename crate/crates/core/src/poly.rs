//! Exact multivariate Laurent polynomials.
//!
//! Exponents live on the lattice `Z/4` ([`QExp`] stores quarters) and
//! coefficients are arbitrary-precision integers. Terms are kept in a
//! `BTreeMap` keyed by the exponent vector, so iteration order is ascending
//! lexicographic in the declared variable order and zero coefficients are
//! never stored.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::PolyError;

/// An exponent that is an integer multiple of 1/4.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QExp(i64);

impl QExp {
    pub const ZERO: QExp = QExp(0);

    pub const fn from_int(n: i64) -> Self {
        QExp(4 * n)
    }

    pub const fn from_quarters(q: i64) -> Self {
        QExp(q)
    }

    /// `num/2`, e.g. the exponent `s(F)` of a signed subgraph.
    pub const fn from_halves(h: i64) -> Self {
        QExp(2 * h)
    }

    pub const fn quarters(self) -> i64 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 4 == 0
    }

    /// The integer value, if the exponent is integral.
    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 4)
    }

    /// Product of two exponents, if it is still a multiple of 1/4.
    pub fn checked_mul(self, other: QExp) -> Option<QExp> {
        let p = self.0 * other.0;
        (p % 4 == 0).then_some(QExp(p / 4))
    }
}

impl Add for QExp {
    type Output = QExp;
    fn add(self, rhs: QExp) -> QExp {
        QExp(self.0 + rhs.0)
    }
}

impl Sub for QExp {
    type Output = QExp;
    fn sub(self, rhs: QExp) -> QExp {
        QExp(self.0 - rhs.0)
    }
}

impl Neg for QExp {
    type Output = QExp;
    fn neg(self) -> QExp {
        QExp(-self.0)
    }
}

impl fmt::Display for QExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.0.gcd(&4);
        let (num, den) = (self.0 / g, 4 / g);
        if den == 1 {
            write!(f, "{num}")
        } else {
            write!(f, "({num}/{den})")
        }
    }
}

/// Exact multivariate Laurent polynomial over `Z` with quarter-integer
/// exponents.
///
/// Equality is mathematical: two polynomials that declare their variables
/// in a different order (or declare unused variables) still compare equal
/// when they denote the same element.
#[derive(Clone, Debug, Default)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<QExp>, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MultiPoly {
            vars: Vec::new(),
            terms,
        }
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(name: &str) -> Self {
        Self::monomial(1, &[(name, QExp::from_int(1))])
    }

    /// `coeff * prod name^exp`. Repeated names multiply.
    pub fn monomial(coeff: impl Into<BigInt>, factors: &[(&str, QExp)]) -> Self {
        let mut vars: Vec<String> = Vec::new();
        for (name, _) in factors {
            if !vars.iter().any(|v| v == name) {
                vars.push((*name).to_string());
            }
        }
        let mut exps = vec![QExp::ZERO; vars.len()];
        for (name, e) in factors {
            let i = vars.iter().position(|v| v == name).unwrap();
            exps[i] = exps[i] + *e;
        }
        let mut p = MultiPoly {
            vars,
            terms: BTreeMap::new(),
        };
        p.add_term(exps, coeff.into());
        p
    }

    /// An empty polynomial over the given variables, to be filled with
    /// [`MultiPoly::add_term`].
    pub fn with_vars<S: AsRef<str>>(vars: &[S]) -> Self {
        MultiPoly {
            vars: vars.iter().map(|s| s.as_ref().to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    /// Adds `coeff * x^exps` in place. `exps` is indexed like [`Self::vars`].
    pub fn add_term(&mut self, exps: Vec<QExp>, coeff: BigInt) {
        assert_eq!(exps.len(), self.vars.len(), "exponent vector length");
        if coeff.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Terms in canonical (ascending lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&[QExp], &BigInt)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Coefficient of the monomial `prod name^exp` (zero if absent).
    pub fn coeff(&self, factors: &[(&str, QExp)]) -> BigInt {
        let mut exps = vec![QExp::ZERO; self.vars.len()];
        for (name, e) in factors {
            match self.var_index(name) {
                Some(i) => exps[i] = exps[i] + *e,
                None if e.is_zero() => {}
                None => return BigInt::zero(),
            }
        }
        self.terms.get(&exps).cloned().unwrap_or_default()
    }

    /// Exponents of `name` over all terms, in term order.
    pub fn exponents_of<'a>(&'a self, name: &str) -> impl Iterator<Item = QExp> + 'a {
        let idx = self.var_index(name);
        self.terms
            .keys()
            .map(move |k| idx.map_or(QExp::ZERO, |i| k[i]))
    }

    /// `(min, max)` exponent of `name`, or `None` for the zero polynomial.
    pub fn degree_range(&self, name: &str) -> Option<(QExp, QExp)> {
        let mut it = self.exponents_of(name);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// Sum of all coefficients, i.e. the value at all variables equal to 1.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Rewrites the variable list so that `order` comes first (in that
    /// order), followed by the remaining variables in their current order.
    /// Names in `order` that do not occur are declared anyway.
    pub fn reorder_vars<S: AsRef<str>>(&self, order: &[S]) -> MultiPoly {
        let mut vars: Vec<String> = order.iter().map(|s| s.as_ref().to_string()).collect();
        for v in &self.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        self.embed(vars)
    }

    /// Drops declared variables that have exponent zero in every term.
    pub fn trim_vars(&self) -> MultiPoly {
        let used: Vec<String> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|k| !k[*i].is_zero()))
            .map(|(_, v)| v.clone())
            .collect();
        self.embed(used)
    }

    /// Re-indexes terms over `vars`, which must contain every variable used.
    fn embed(&self, vars: Vec<String>) -> MultiPoly {
        let map: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v))
            .collect();
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let mut e = vec![QExp::ZERO; vars.len()];
            for (i, x) in k.iter().enumerate() {
                match map[i] {
                    Some(j) => e[j] = *x,
                    None => assert!(x.is_zero(), "variable dropped while in use"),
                }
            }
            terms.insert(e, c.clone());
        }
        MultiPoly { vars, terms }
    }

    fn union_vars(&self, other: &MultiPoly) -> Vec<String> {
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars
    }

    fn aligned(&self, other: &MultiPoly) -> (MultiPoly, MultiPoly) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let vars = self.union_vars(other);
        (self.embed(vars.clone()), other.embed(vars))
    }

    pub fn pow(&self, mut n: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one().embed(self.vars.clone());
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Raises a monomial to a quarter-integer power. Fails if the result
    /// would leave `Z[x^(±1/4)]`.
    fn monomial_pow(&self, e: QExp, var: &str) -> Result<MultiPoly, PolyError> {
        let (exps, c) = self.terms.iter().next().expect("monomial");
        let coeff = match e.to_int() {
            Some(n) if n >= 0 => num_traits::pow(c.clone(), n as usize),
            Some(n) if c.abs().is_one() => {
                if n.is_odd() {
                    c.clone()
                } else {
                    BigInt::one()
                }
            }
            None if c.is_one() => BigInt::one(),
            _ => {
                return Err(PolyError::NonIntegralCoefficient {
                    var: var.to_string(),
                })
            }
        };
        let mut out = Vec::with_capacity(exps.len());
        for x in exps {
            out.push(
                x.checked_mul(e)
                    .ok_or(PolyError::ExponentNotRepresentable)?,
            );
        }
        let mut p = MultiPoly::with_vars(&self.vars);
        p.add_term(out, coeff);
        Ok(p)
    }

    fn power_for_substitution(&self, e: QExp, var: &str) -> Result<MultiPoly, PolyError> {
        if self.is_monomial() {
            return self.monomial_pow(e, var);
        }
        if e.is_zero() {
            return Ok(MultiPoly::one());
        }
        match e.to_int() {
            Some(n) if n > 0 => Ok(self.pow(n as u32)),
            Some(_) => Err(PolyError::NegativePowerOfPolynomial {
                var: var.to_string(),
            }),
            None => Err(PolyError::FractionalPowerOfPolynomial {
                var: var.to_string(),
            }),
        }
    }

    /// Simultaneous substitution `var ↦ value`. Unbound variables pass
    /// through unchanged.
    ///
    /// A variable bound to a polynomial with more than one term may only
    /// occur with nonnegative integer exponents. Monomial bindings accept any
    /// exponent as long as the result stays on the quarter lattice with
    /// integer coefficients.
    pub fn substitute(&self, bindings: &[(&str, &MultiPoly)]) -> Result<MultiPoly, PolyError> {
        let bound: Vec<Option<&MultiPoly>> = self
            .vars
            .iter()
            .map(|v| bindings.iter().find(|(n, _)| n == v).map(|(_, p)| *p))
            .collect();

        let mut out_vars: Vec<String> = self
            .vars
            .iter()
            .zip(&bound)
            .filter(|(_, b)| b.is_none())
            .map(|(v, _)| v.clone())
            .collect();
        for (_, p) in bindings {
            for v in &p.vars {
                if !out_vars.contains(v) {
                    out_vars.push(v.clone());
                }
            }
        }

        let mut cache: BTreeMap<(usize, QExp), MultiPoly> = BTreeMap::new();
        let mut result = MultiPoly::with_vars(&out_vars);
        for (exps, c) in &self.terms {
            let mut free = vec![QExp::ZERO; out_vars.len()];
            let mut factor = MultiPoly::constant(c.clone());
            for (i, e) in exps.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                match bound[i] {
                    None => {
                        let j = out_vars.iter().position(|v| *v == self.vars[i]).unwrap();
                        free[j] = *e;
                    }
                    Some(val) => {
                        if !cache.contains_key(&(i, *e)) {
                            let pw = val.power_for_substitution(*e, &self.vars[i])?;
                            cache.insert((i, *e), pw);
                        }
                        factor = &factor * &cache[&(i, *e)];
                    }
                }
            }
            let mut mono = MultiPoly::with_vars(&out_vars);
            mono.add_term(free, BigInt::one());
            result += &factor * &mono;
        }
        Ok(result.embed(out_vars))
    }

    /// Parses a polynomial, declaring variables in order of first use.
    pub fn parse(text: &str) -> Result<MultiPoly, PolyError> {
        Parser::new(text).parse()
    }

    fn normalized(&self) -> BTreeMap<Vec<(&str, QExp)>, &BigInt> {
        let mut order: Vec<usize> = (0..self.vars.len()).collect();
        order.sort_by(|a, b| self.vars[*a].cmp(&self.vars[*b]));
        self.terms
            .iter()
            .map(|(k, c)| {
                let key = order
                    .iter()
                    .filter(|i| !k[**i].is_zero())
                    .map(|i| (self.vars[*i].as_str(), k[*i]))
                    .collect();
                (key, c)
            })
            .collect()
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        self.terms.len() == other.terms.len() && self.normalized() == other.normalized()
    }
}

impl Eq for MultiPoly {}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut a, b) = self.aligned(rhs);
        for (k, c) in b.terms {
            a.add_term(k, c);
        }
        a
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl AddAssign<MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: MultiPoly) {
        if self.vars == rhs.vars {
            for (k, c) in rhs.terms {
                self.add_term(k, c);
            }
        } else {
            *self = &*self + &rhs;
        }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let (a, b) = self.aligned(rhs);
        let mut out = MultiPoly::with_vars(&a.vars);
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                let k = ka.iter().zip(kb).map(|(x, y)| *x + *y).collect();
                out.add_term(k, ca * cb);
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl core::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> MultiPoly {
        iter.fold(MultiPoly::zero(), |acc, p| acc + p)
    }
}

impl core::iter::Product for MultiPoly {
    fn product<I: Iterator<Item = MultiPoly>>(iter: I) -> MultiPoly {
        iter.fold(MultiPoly::one(), |acc, p| acc * p)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (exps, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if n == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let mag = c.abs();
            let mut first = true;
            if exps.iter().all(|e| e.is_zero()) {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
                first = false;
            }
            for (v, e) in self.vars.iter().zip(exps) {
                if e.is_zero() {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(v)?;
                if *e != QExp::from_int(1) {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for MultiPoly {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MultiPoly::parse(s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: Vec<String>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
            vars: Vec::new(),
        }
    }

    fn err(&self, message: &str) -> PolyError {
        PolyError::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let digits = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse::<BigInt>().unwrap())
    }

    fn small_int(&mut self) -> Result<i64, PolyError> {
        let neg = self.eat(b'-');
        let n = self
            .integer()?
            .to_i64()
            .ok_or_else(|| self.err("exponent too large"))?;
        Ok(if neg { -n } else { n })
    }

    fn exponent(&mut self) -> Result<QExp, PolyError> {
        if self.eat(b'(') {
            let num = self.small_int()?;
            let den = if self.eat(b'/') { self.small_int()? } else { 1 };
            if !self.eat(b')') {
                return Err(self.err("expected `)`"));
            }
            if den <= 0 || (4 * num) % den != 0 {
                return Err(self.err("exponent must be a multiple of 1/4"));
            }
            Ok(QExp::from_quarters(4 * num / den))
        } else {
            Ok(QExp::from_int(self.small_int()?))
        }
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            if self.pos == start && self.src[self.pos].is_ascii_digit() {
                break;
            }
            self.pos += 1;
        }
        (self.pos > start)
            .then(|| String::from(core::str::from_utf8(&self.src[start..self.pos]).unwrap()))
    }

    fn term(&mut self) -> Result<(BigInt, Vec<(String, QExp)>), PolyError> {
        let mut coeff = BigInt::one();
        let mut factors = Vec::new();
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => coeff *= self.integer()?,
                Some(_) => {
                    let name = self.ident().ok_or_else(|| self.err("expected factor"))?;
                    let e = if self.eat(b'^') {
                        self.exponent()?
                    } else {
                        QExp::from_int(1)
                    };
                    if !self.vars.contains(&name) {
                        self.vars.push(name.clone());
                    }
                    factors.push((name, e));
                }
                None => return Err(self.err("unexpected end of input")),
            }
            if !self.eat(b'*') {
                return Ok((coeff, factors));
            }
        }
    }

    fn parse(mut self) -> Result<MultiPoly, PolyError> {
        let mut raw = Vec::new();
        let mut negative = self.eat(b'-');
        loop {
            let (c, f) = self.term()?;
            raw.push((if negative { -c } else { c }, f));
            match self.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return Err(self.err("expected `+` or `-`")),
            }
            self.pos += 1;
        }
        let mut p = MultiPoly::with_vars(&self.vars);
        for (c, factors) in raw {
            let mut e = vec![QExp::ZERO; self.vars.len()];
            for (name, x) in factors {
                let i = self.vars.iter().position(|v| *v == name).unwrap();
                e[i] = e[i] + x;
            }
            p.add_term(e, c);
        }
        Ok(p)
    }
}

/// Multiplicities of exponent triples, the accumulator of the state-sum and
/// subset-sum kernels. Keys are in quarters.
///
/// Tallies from disjoint index ranges merge by addition, so the order in
/// which partial results are combined never changes the final polynomial.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally(BTreeMap<[i64; 3], u64>);

impl Tally {
    pub fn new() -> Self {
        Tally::default()
    }

    pub fn add(&mut self, key: [i64; 3]) {
        *self.0.entry(key).or_insert(0) += 1;
    }

    pub fn merge(&mut self, other: Tally) {
        for (k, c) in other.0 {
            *self.0.entry(k).or_insert(0) += c;
        }
    }

    /// Total number of recorded terms.
    pub fn count(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[i64; 3], &u64)> {
        self.0.iter()
    }

    pub fn into_poly(self, vars: [&str; 3]) -> MultiPoly {
        let mut p = MultiPoly::with_vars(&vars);
        for (k, c) in self.0 {
            p.add_term(
                k.iter().map(|q| QExp::from_quarters(*q)).collect(),
                BigInt::from(c),
            );
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    #[test]
    fn square_of_binomial() {
        let a = p("1 + y");
        assert_eq!(&a * &a, p("1 + 2*y + y^2"));
    }

    #[test]
    fn bracket_of_two_loop_example() {
        let a2 = MultiPoly::monomial(1, &[("A", QExp::from_int(2))]);
        let b2 = MultiPoly::monomial(1, &[("B", QExp::from_int(2))]);
        let abd = MultiPoly::monomial(
            2,
            &[
                ("A", QExp::from_int(1)),
                ("B", QExp::from_int(1)),
                ("d", QExp::from_int(1)),
            ],
        );
        let sum = &(&a2 + &b2) + &abd;
        assert_eq!(sum, p("A^2 + 2*A*B*d + B^2"));
    }

    #[test]
    fn quarter_exponents_cancel() {
        let a = MultiPoly::monomial(1, &[("t", QExp::from_quarters(1))]);
        let b = MultiPoly::monomial(1, &[("t", QExp::from_quarters(-1))]);
        assert_eq!(&a * &b, MultiPoly::one());
    }

    #[test]
    fn canonical_strings() {
        let r = MultiPoly::parse("y^2*z^2 + 1 + 2*y")
            .unwrap()
            .reorder_vars(&["x", "y", "z"]);
        assert_eq!(r.to_string(), "1 + 2*y + y^2*z^2");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        let t = MultiPoly::monomial(1, &[("t", QExp::from_quarters(3))]);
        assert_eq!(t.to_string(), "t^(3/4)");
        let h = MultiPoly::monomial(-3, &[("t", QExp::from_quarters(-2))]);
        assert_eq!(h.to_string(), "-3*t^(-1/2)");
        assert_eq!(p("-t^-4 + t^-3 + t^-1").to_string(), "-t^-4 + t^-3 + t^-1");
        assert_eq!(p("x - 1").to_string(), "-1 + x");
        assert_eq!(MultiPoly::constant(-1).to_string(), "-1");
    }

    #[test]
    fn substitute_into_two_loop_polynomial() {
        let r = p("1 + 2*y + y^2*z^2");
        let x = p("A^-1*B*d");
        let y = p("A*B^-1*d");
        let z = p("d^-1");
        let out = r.substitute(&[("x", &x), ("y", &y), ("z", &z)]).unwrap();
        assert_eq!(out, p("1 + 2*A*B^-1*d + A^2*B^-2"));
    }

    #[test]
    fn substitute_binomial() {
        let d = p("-t^(1/2) - t^(-1/2)");
        let sq = p("d^2").substitute(&[("d", &d)]).unwrap();
        assert_eq!(sq, p("t + 2 + t^-1"));
        let err = p("d^-1").substitute(&[("d", &d)]).unwrap_err();
        assert_eq!(
            err,
            PolyError::NegativePowerOfPolynomial {
                var: "d".to_string()
            }
        );
        assert!(matches!(
            p("d^(1/2)").substitute(&[("d", &d)]),
            Err(PolyError::FractionalPowerOfPolynomial { .. })
        ));
    }

    #[test]
    fn fractional_power_of_monomial() {
        let x = p("A^-1*B*d");
        let out = p("x^(1/2)").substitute(&[("x", &x)]).unwrap();
        assert_eq!(out, p("A^(-1/2)*B^(1/2)*d^(1/2)"));
        let neg = p("-A");
        assert_eq!(p("x^-1").substitute(&[("x", &neg)]).unwrap(), p("-A^-1"));
        assert!(matches!(
            p("x^(1/2)").substitute(&[("x", &neg)]),
            Err(PolyError::NonIntegralCoefficient { .. })
        ));
        let two = p("2*A");
        assert!(p("x^-1").substitute(&[("x", &two)]).is_err());
    }

    #[test]
    fn equality_ignores_declaration_order() {
        let a = p("x*y + 1").reorder_vars(&["y", "x", "w"]);
        assert_eq!(a, p("1 + x*y"));
        assert_ne!(a, p("1 + x"));
        assert_eq!(a.trim_vars().vars(), &["y".to_string(), "x".to_string()]);
    }

    #[test]
    fn parse_errors() {
        assert!(MultiPoly::parse("x^(1/3)").is_err());
        assert!(MultiPoly::parse("x +").is_err());
        assert!(MultiPoly::parse("x ? y").is_err());
        assert_eq!(MultiPoly::parse("0").unwrap(), MultiPoly::zero());
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        let term = (-5i64..=5, proptest::collection::vec(-6i64..=6, 3));
        proptest::collection::vec(term, 0..5).prop_map(|ts| {
            let mut p = MultiPoly::with_vars(&["a", "b", "c"]);
            for (c, e) in ts {
                p.add_term(
                    e.into_iter().map(QExp::from_quarters).collect(),
                    BigInt::from(c),
                );
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn display_parse_round_trip(a in arb_poly()) {
            let text = a.to_string();
            prop_assert_eq!(MultiPoly::parse(&text).unwrap(), a);
        }

        #[test]
        fn identity_substitution(a in arb_poly()) {
            let (va, vb) = (MultiPoly::var("a"), MultiPoly::var("b"));
            prop_assert_eq!(a.substitute(&[("a", &va), ("b", &vb)]).unwrap(), a);
        }

        #[test]
        fn substitution_is_multiplicative(a in arb_poly(), b in arb_poly()) {
            // monomial bindings admit every quarter exponent
            let ba = p("u^2*v^-1");
            let bb = p("v^4");
            let bind = [("a", &ba), ("b", &bb)];
            let lhs = (&a * &b).substitute(&bind).unwrap();
            let rhs = &a.substitute(&bind).unwrap() * &b.substitute(&bind).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
