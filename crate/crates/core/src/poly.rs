//! Sparse exact polynomials in `t, q` and truncated power series in
//! `t, q, u`, over rational or cyclotomic coefficients.
//!
//! Coefficients are a tagged union with one-way promotion: rationals embed
//! into cyclotomics automatically, and cyclotomics over different conductors
//! are lifted to the least common conductor.  Equality of coefficients is
//! semantic (the same field element compares equal regardless of how it is
//! tagged).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};

/// A polynomial coefficient: an exact rational or a cyclotomic number.
#[derive(Clone)]
pub enum Coeff {
    Rat(BigRational),
    Cyclo(Cyclotomic),
}

impl Coeff {
    pub fn zero() -> Self {
        Coeff::Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Coeff::Rat(BigRational::one())
    }

    pub fn from_integer(v: i64) -> Self {
        Coeff::Rat(BigRational::from(BigInt::from(v)))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_zero(),
            Coeff::Cyclo(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_one(),
            Coeff::Cyclo(c) => c.is_one(),
        }
    }

    /// The exact rational value, if the coefficient lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        match self {
            Coeff::Rat(r) => Some(r.clone()),
            Coeff::Cyclo(c) => c.to_rational(),
        }
    }

    pub fn to_cyclotomic(&self, conductor: u64) -> Result<Cyclotomic> {
        match self {
            Coeff::Rat(r) => Ok(Cyclotomic::from_rational_in(conductor, r.clone())),
            Coeff::Cyclo(c) => c.embed(conductor),
        }
    }

    fn lift(a: &Coeff, b: &Coeff) -> (Coeff, Coeff) {
        match (a, b) {
            (Coeff::Rat(_), Coeff::Rat(_)) => (a.clone(), b.clone()),
            (Coeff::Rat(r), Coeff::Cyclo(c)) => (
                Coeff::Cyclo(Cyclotomic::from_rational_in(c.conductor(), r.clone())),
                b.clone(),
            ),
            (Coeff::Cyclo(c), Coeff::Rat(r)) => (
                a.clone(),
                Coeff::Cyclo(Cyclotomic::from_rational_in(c.conductor(), r.clone())),
            ),
            (Coeff::Cyclo(x), Coeff::Cyclo(y)) => {
                let (x, y) = Cyclotomic::lift_pair(x, y);
                (Coeff::Cyclo(x), Coeff::Cyclo(y))
            }
        }
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        match Coeff::lift(self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a + b),
            (Coeff::Cyclo(a), Coeff::Cyclo(b)) => Coeff::Cyclo(a.add(&b).unwrap()),
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        match Coeff::lift(self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a - b),
            (Coeff::Cyclo(a), Coeff::Cyclo(b)) => Coeff::Cyclo(a.sub(&b).unwrap()),
            _ => unreachable!(),
        }
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        match Coeff::lift(self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a * b),
            (Coeff::Cyclo(a), Coeff::Cyclo(b)) => Coeff::Cyclo(a.mul(&b).unwrap()),
            _ => unreachable!(),
        }
    }

    pub fn div(&self, other: &Coeff) -> Result<Coeff> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match Coeff::lift(self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a / b),
            (Coeff::Cyclo(a), Coeff::Cyclo(b)) => Coeff::Cyclo(a.div(&b)?),
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Rat(r) => Coeff::Rat(-r),
            Coeff::Cyclo(c) => Coeff::Cyclo(c.neg()),
        }
    }

    pub fn conj(&self) -> Coeff {
        match self {
            Coeff::Rat(r) => Coeff::Rat(r.clone()),
            Coeff::Cyclo(c) => Coeff::Cyclo(c.conj()),
        }
    }

    /// Serialized form: rationals as `"p/q"` strings, cyclotomics as the
    /// nested object from [`Cyclotomic::to_json`].
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Coeff::Rat(r) => serde_json::Value::String(r.to_string()),
            Coeff::Cyclo(c) => match c.to_rational() {
                Some(r) => serde_json::Value::String(r.to_string()),
                None => c.to_json(),
            },
        }
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Coeff> {
        match v {
            serde_json::Value::String(s) => {
                let r = BigRational::from_str(s)
                    .map_err(|e| Error::InvalidArgument(format!("bad rational: {e}")))?;
                Ok(Coeff::Rat(r))
            }
            _ => Ok(Coeff::Cyclo(Cyclotomic::from_json(v)?)),
        }
    }
}

impl PartialEq for Coeff {
    fn eq(&self, other: &Self) -> bool {
        match Coeff::lift(self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => a == b,
            (Coeff::Cyclo(a), Coeff::Cyclo(b)) => a == b,
            _ => unreachable!(),
        }
    }
}

impl Eq for Coeff {}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rat(r) => write!(f, "{r}"),
            Coeff::Cyclo(c) => write!(f, "({c})"),
        }
    }
}

/// Which polynomial variable an operation targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    T,
    Q,
}

/// Sparse bivariate polynomial in `t, q`; no zero coefficients are stored
/// and terms are kept in lexicographic `(i, j)` order.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Coeff>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(0, 0, c);
        p
    }

    pub fn from_integer(v: i64) -> Self {
        BiPoly::constant(Coeff::from_integer(v))
    }

    pub fn monomial(i: u32, j: u32, c: Coeff) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(i, j, c);
        p
    }

    /// `1 - v^e` for a single variable.
    pub fn one_minus_power(var: Var, e: u32) -> Self {
        let mut p = BiPoly::one();
        let (i, j) = match var {
            Var::T => (e, 0),
            Var::Q => (0, e),
        };
        p.add_term(i, j, Coeff::from_integer(-1));
        p
    }

    /// The q-analogue `[e]_v = 1 + v + ... + v^(e-1)`.
    pub fn q_analog(var: Var, e: u32) -> Self {
        let mut p = BiPoly::zero();
        for a in 0..e {
            let (i, j) = match var {
                Var::T => (a, 0),
                Var::Q => (0, a),
            };
            p.add_term(i, j, Coeff::one());
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((i, j)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Coeff)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, i: u32, j: u32) -> Coeff {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn deg_t(&self) -> u32 {
        self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn deg_q(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                out.add_term(i1 + i2, j1 + j2, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        let mut out = BiPoly::zero();
        for (&(i, j), t) in &self.terms {
            out.add_term(i, j, t.mul(c));
        }
        out
    }

    /// Exact division: returns the quotient iff `self = q * divisor`
    /// exactly, otherwise reports the nonzero remainder.
    ///
    /// Uses lexicographic leading-term elimination; for a single divisor the
    /// division is exact iff every intermediate leading term is divisible.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (&(di, dj), dc) = divisor.terms.iter().next_back().unwrap();
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        while let Some((&(ri, rj), rc)) = rem.terms.iter().next_back() {
            if ri < di || rj < dj {
                return Err(Error::InexactDivision {
                    remainder_terms: rem.num_terms(),
                });
            }
            let (qi, qj) = (ri - di, rj - dj);
            let qc = rc.div(&dc)?;
            for (&(i, j), c) in &divisor.terms {
                rem.add_term(i + qi, j + qj, c.mul(&qc).neg());
            }
            quot.add_term(qi, qj, qc);
        }
        Ok(quot)
    }

    /// Exact substitution of cyclotomic values `t <- a`, `q <- b`, carried
    /// out in the least common conductor.
    pub fn eval_at_roots(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        let mut m = num_integer::lcm(a.conductor(), b.conductor());
        for c in self.terms.values() {
            if let Coeff::Cyclo(x) = c {
                m = num_integer::lcm(m, x.conductor());
            }
        }
        let a = a.embed(m).unwrap();
        let b = b.embed(m).unwrap();
        let mut acc = Cyclotomic::zero(m);
        // Power tables keep repeated monomial evaluations cheap.
        let mut pow_a: Vec<Cyclotomic> = vec![Cyclotomic::one(m)];
        let mut pow_b: Vec<Cyclotomic> = vec![Cyclotomic::one(m)];
        for (&(i, j), c) in &self.terms {
            while pow_a.len() <= i as usize {
                let next = pow_a.last().unwrap().mul(&a).unwrap();
                pow_a.push(next);
            }
            while pow_b.len() <= j as usize {
                let next = pow_b.last().unwrap().mul(&b).unwrap();
                pow_b.push(next);
            }
            let c = c.to_cyclotomic(m).unwrap();
            let term = c
                .mul(&pow_a[i as usize])
                .unwrap()
                .mul(&pow_b[j as usize])
                .unwrap();
            acc = acc.add(&term).unwrap();
        }
        acc
    }

    /// Substitute a cyclotomic value for `t`, leaving a univariate
    /// polynomial in `q`.
    pub fn eval_t_at_root(&self, a: &Cyclotomic) -> Self {
        let mut pow_a: Vec<Cyclotomic> = vec![Cyclotomic::one(a.conductor())];
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            while pow_a.len() <= i as usize {
                let next = pow_a.last().unwrap().mul(a).unwrap();
                pow_a.push(next);
            }
            out.add_term(0, j, c.mul(&Coeff::Cyclo(pow_a[i as usize].clone())));
        }
        out
    }

    /// Evaluate at `t = 1` (fold onto a univariate polynomial in `q`).
    pub fn eval_t_one(&self) -> Self {
        let mut out = BiPoly::zero();
        for (&(_, j), c) in &self.terms {
            out.add_term(0, j, c.clone());
        }
        out
    }

    /// Evaluate at `q = 1` (fold onto a univariate polynomial in `t`).
    pub fn eval_q_one(&self) -> Self {
        let mut out = BiPoly::zero();
        for (&(i, _), c) in &self.terms {
            out.add_term(i, 0, c.clone());
        }
        out
    }

    /// The canonical representative modulo `(t^k - 1, q^l - 1)`: all
    /// t-exponents below `k`, all q-exponents below `l`.
    pub fn reduce_mod_cyclic(&self, k: u32, l: u32) -> Self {
        assert!(k >= 1 && l >= 1);
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(i % k, j % l, c.clone());
        }
        out
    }

    /// True iff the coefficients of `t^i q^j` and `t^(N-i) q^(N-j)` agree
    /// for all `(i, j)`.
    pub fn is_palindromic(&self, n: u32) -> bool {
        for (&(i, j), c) in &self.terms {
            if i > n || j > n {
                return false;
            }
            if self.coefficient(n - i, n - j) != *c {
                return false;
            }
        }
        true
    }

    /// Exchange the roles of `t` and `q`.
    pub fn swap_vars(&self) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    /// All coefficients as rational integers, if the polynomial lies in
    /// `Z[t,q]`.
    pub fn integer_coefficients(&self) -> Result<BTreeMap<(u32, u32), BigInt>> {
        let mut out = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            let r = c.to_rational().ok_or_else(|| {
                Error::NonIntegral(format!("coefficient of t^{i} q^{j} is irrational"))
            })?;
            if !r.is_integer() {
                return Err(Error::NonIntegral(format!(
                    "coefficient of t^{i} q^{j} is {r}"
                )));
            }
            out.insert((i, j), r.to_integer());
        }
        Ok(out)
    }

    /// JSON form `{"vars": ["t","q"], "terms": [[i, j, coeff], ...]}` in
    /// lexicographic term order.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| serde_json::json!([i, j, c.to_json()]))
            .collect();
        serde_json::json!({ "vars": ["t", "q"], "terms": terms })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let terms = v
            .get("terms")
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::InvalidArgument("polynomial: missing terms".into()))?;
        let mut out = BiPoly::zero();
        for t in terms {
            let triple = t
                .as_array()
                .filter(|a| a.len() == 3)
                .ok_or_else(|| Error::InvalidArgument("polynomial: bad term".into()))?;
            let i = triple[0]
                .as_u64()
                .ok_or_else(|| Error::InvalidArgument("polynomial: bad exponent".into()))?;
            let j = triple[1]
                .as_u64()
                .ok_or_else(|| Error::InvalidArgument("polynomial: bad exponent".into()))?;
            out.add_term(i as u32, j as u32, Coeff::from_json(&triple[2])?);
        }
        Ok(out)
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c:?}")?;
            if i > 0 {
                write!(f, "*t^{i}")?;
            }
            if j > 0 {
                write!(f, "*q^{j}")?;
            }
        }
        Ok(())
    }
}

/// `(v; v)_n = (1 - v)(1 - v^2) ... (1 - v^n)`, the q-Pochhammer symbol.
pub fn qpochhammer(n: u32, var: Var) -> BiPoly {
    let mut p = BiPoly::one();
    for e in 1..=n {
        p = p.mul(&BiPoly::one_minus_power(var, e));
    }
    p
}

/// Truncated power series in `t, q, u` with per-variable truncation orders;
/// arithmetic discards everything beyond the bounds.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    bounds: (u32, u32, u32),
    terms: BTreeMap<(u32, u32, u32), Coeff>,
}

impl TruncSeries {
    pub fn zero(bounds: (u32, u32, u32)) -> Self {
        TruncSeries {
            bounds,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(bounds: (u32, u32, u32)) -> Self {
        let mut s = TruncSeries::zero(bounds);
        s.add_term((0, 0, 0), Coeff::one());
        s
    }

    pub fn bounds(&self) -> (u32, u32, u32) {
        self.bounds
    }

    pub fn add_term(&mut self, e: (u32, u32, u32), c: Coeff) {
        if c.is_zero() || e.0 > self.bounds.0 || e.1 > self.bounds.1 || e.2 > self.bounds.2 {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(entry) => {
                entry.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut entry) => {
                let sum = entry.get().add(&c);
                if sum.is_zero() {
                    entry.remove();
                } else {
                    *entry.get_mut() = sum;
                }
            }
        }
    }

    /// A polynomial viewed as a series in `t, q` (u-degree zero), truncated
    /// to the bounds.
    pub fn from_bipoly(p: &BiPoly, bounds: (u32, u32, u32)) -> Self {
        let mut s = TruncSeries::zero(bounds);
        for (&(i, j), c) in p.terms() {
            s.add_term((i, j, 0), c.clone());
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: (u32, u32, u32)) -> Coeff {
        self.terms.get(&e).cloned().unwrap_or_else(Coeff::zero)
    }

    fn check_bounds(&self, other: &Self) -> Result<()> {
        if self.bounds != other.bounds {
            return Err(Error::DimensionMismatch(format!(
                "series bounds {:?} vs {:?}",
                self.bounds, other.bounds
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_bounds(other)?;
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_bounds(other)?;
        let mut out = TruncSeries::zero(self.bounds);
        for (&(a1, b1, c1), x) in &self.terms {
            for (&(a2, b2, c2), y) in &other.terms {
                let e = (a1 + a2, b1 + b2, c1 + c2);
                if e.0 > self.bounds.0 || e.1 > self.bounds.1 || e.2 > self.bounds.2 {
                    continue;
                }
                out.add_term(e, x.mul(y));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        let mut out = TruncSeries::zero(self.bounds);
        for (&e, t) in &self.terms {
            out.add_term(e, t.mul(c));
        }
        out
    }

    /// Multiplicative inverse within the truncation bounds.  Coefficients
    /// are solved in lexicographic exponent order, which refines the
    /// componentwise divisibility order.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = self.coefficient((0, 0, 0));
        if c0.is_zero() {
            return Err(Error::NonInvertibleConstant);
        }
        let inv0 = Coeff::one().div(&c0)?;
        let mut out = TruncSeries::zero(self.bounds);
        for a in 0..=self.bounds.0 {
            for b in 0..=self.bounds.1 {
                for c in 0..=self.bounds.2 {
                    let target = (a, b, c);
                    let mut acc = if target == (0, 0, 0) {
                        Coeff::one()
                    } else {
                        Coeff::zero()
                    };
                    for (&(x, y, z), sc) in &self.terms {
                        if (x, y, z) == (0, 0, 0) || x > a || y > b || z > c {
                            continue;
                        }
                        let prev = out.coefficient((a - x, b - y, c - z));
                        if prev.is_zero() {
                            continue;
                        }
                        acc = acc.sub(&sc.mul(&prev));
                    }
                    out.add_term(target, acc.mul(&inv0));
                }
            }
        }
        Ok(out)
    }

    /// The coefficient of `u^n`, as a polynomial in `t, q`.
    pub fn coefficient_of_u(&self, n: u32) -> BiPoly {
        let mut p = BiPoly::zero();
        for (&(i, j, k), c) in &self.terms {
            if k == n {
                p.add_term(i, j, c.clone());
            }
        }
        p
    }

    /// Convert to a polynomial; requires u-degree zero everywhere.
    pub fn to_bipoly(&self) -> BiPoly {
        let mut p = BiPoly::zero();
        for (&(i, j, k), c) in &self.terms {
            assert_eq!(k, 0, "series has u-terms");
            p.add_term(i, j, c.clone());
        }
        p
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries{:?}{{", self.bounds)?;
        for (&(i, j, k), c) in &self.terms {
            write!(f, " {c:?}*t^{i}q^{j}u^{k}")?;
        }
        write!(f, " }}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_poly(coeffs: &[i64]) -> BiPoly {
        let mut p = BiPoly::zero();
        for (j, &c) in coeffs.iter().enumerate() {
            p.add_term(0, j as u32, Coeff::from_integer(c));
        }
        p
    }

    #[test]
    fn product_examples() {
        // (1 + tq)(1 - tq) = 1 - t^2 q^2
        let one_plus = BiPoly::one().add(&BiPoly::monomial(1, 1, Coeff::one()));
        let one_minus = BiPoly::one().sub(&BiPoly::monomial(1, 1, Coeff::one()));
        let mut expected = BiPoly::one();
        expected.add_term(2, 2, Coeff::from_integer(-1));
        assert_eq!(one_plus.mul(&one_minus), expected);

        // (1+q)(1+q+q^2) = 1 + 2q + 2q^2 + q^3: the S_3 mahonian product
        assert_eq!(
            q_poly(&[1, 1]).mul(&q_poly(&[1, 1, 1])),
            q_poly(&[1, 2, 2, 1])
        );

        // p + 0 = p
        let p = q_poly(&[3, 0, -2]);
        assert_eq!(p.add(&BiPoly::zero()), p);
    }

    #[test]
    fn exact_div_examples() {
        // (1 - q^4)/(1 - q) = 1 + q + q^2 + q^3
        let quot = BiPoly::one_minus_power(Var::Q, 4)
            .exact_div(&BiPoly::one_minus_power(Var::Q, 1))
            .unwrap();
        assert_eq!(quot, q_poly(&[1, 1, 1, 1]));

        // (q;q)_4 / ((q;q)_0 (1-q^2)^2) = (1-q)(1-q^3)(1+q^2)
        let num = qpochhammer(4, Var::Q);
        let den = BiPoly::one_minus_power(Var::Q, 2).mul(&BiPoly::one_minus_power(Var::Q, 2));
        let expected = q_poly(&[1, -1])
            .mul(&q_poly(&[1, 0, 0, -1]))
            .mul(&q_poly(&[1, 0, 1]));
        assert_eq!(num.exact_div(&den).unwrap(), expected);

        // (1+q)/(1-q) is inexact
        let err = q_poly(&[1, 1]).exact_div(&q_poly(&[1, -1]));
        assert!(matches!(err, Err(Error::InexactDivision { .. })));
    }

    #[test]
    fn exact_div_round_trips() {
        let p = q_poly(&[2, 0, 5]).mul(&BiPoly::monomial(2, 1, Coeff::one()).add(&BiPoly::one()));
        let r = q_poly(&[1, 3])
            .mul(&BiPoly::monomial(1, 2, Coeff::from_integer(-2)).add(&BiPoly::one()));
        assert_eq!(p.mul(&r).exact_div(&r).unwrap(), p);
    }

    #[test]
    fn qpochhammer_examples() {
        assert_eq!(qpochhammer(0, Var::Q), BiPoly::one());
        assert_eq!(qpochhammer(2, Var::Q), q_poly(&[1, -1, -1, 1]));
        let mut expect_t = BiPoly::one();
        expect_t.add_term(1, 0, Coeff::from_integer(-1));
        assert_eq!(qpochhammer(1, Var::T), expect_t);
        // degree n(n+1)/2 and constant term 1
        for n in 0..=6u32 {
            let p = qpochhammer(n, Var::Q);
            assert_eq!(p.deg_q(), n * (n + 1) / 2);
            assert!(p.coefficient(0, 0).is_one());
        }
    }

    #[test]
    fn eval_at_roots_examples() {
        let z3 = Cyclotomic::root_of_unity(3, 1);
        let z3sq = Cyclotomic::root_of_unity(3, 2);
        let p = BiPoly::one().add(&BiPoly::monomial(1, 1, Coeff::one()));
        assert_eq!(
            p.eval_at_roots(&z3, &z3sq),
            Cyclotomic::from_integer(2).embed(3).unwrap()
        );

        // S_3's W(t,q) at (z3, z3) = 3
        let s3 = BiPoly::one()
            .add(&BiPoly::monomial(1, 1, Coeff::one()))
            .add(&BiPoly::monomial(1, 2, Coeff::one()))
            .add(&BiPoly::monomial(2, 1, Coeff::one()))
            .add(&BiPoly::monomial(2, 2, Coeff::one()))
            .add(&BiPoly::monomial(3, 3, Coeff::one()));
        assert_eq!(
            s3.eval_at_roots(&z3, &z3),
            Cyclotomic::from_integer(3).embed(3).unwrap()
        );

        // any p at (1, 1) is the coefficient sum
        let one = Cyclotomic::one(1);
        assert_eq!(s3.eval_at_roots(&one, &one), Cyclotomic::from_integer(6));
    }

    #[test]
    fn reduce_mod_cyclic_examples() {
        let t3q3 = BiPoly::monomial(3, 3, Coeff::one());
        assert_eq!(t3q3.reduce_mod_cyclic(3, 3), BiPoly::one());

        let s3 = BiPoly::one()
            .add(&BiPoly::monomial(1, 1, Coeff::one()))
            .add(&BiPoly::monomial(1, 2, Coeff::one()))
            .add(&BiPoly::monomial(2, 1, Coeff::one()))
            .add(&BiPoly::monomial(2, 2, Coeff::one()))
            .add(&BiPoly::monomial(3, 3, Coeff::one()));
        let reduced = s3.reduce_mod_cyclic(3, 3);
        let expected = BiPoly::from_integer(2)
            .add(&BiPoly::monomial(1, 1, Coeff::one()))
            .add(&BiPoly::monomial(1, 2, Coeff::one()))
            .add(&BiPoly::monomial(2, 1, Coeff::one()))
            .add(&BiPoly::monomial(2, 2, Coeff::one()));
        assert_eq!(reduced, expected);

        let five = BiPoly::from_integer(5);
        assert_eq!(five.reduce_mod_cyclic(4, 7), five);
    }

    #[test]
    fn palindromic_examples() {
        let p = BiPoly::one().add(&BiPoly::monomial(1, 1, Coeff::one()));
        assert!(p.is_palindromic(1));

        let q = BiPoly::one()
            .add(&BiPoly::monomial(2, 1, Coeff::one()))
            .add(&BiPoly::monomial(1, 2, Coeff::one()));
        assert!(!q.is_palindromic(3));

        let cyclic3 = BiPoly::one()
            .add(&BiPoly::monomial(1, 1, Coeff::one()))
            .add(&BiPoly::monomial(2, 2, Coeff::one()));
        assert!(cyclic3.is_palindromic(2));
    }

    #[test]
    fn series_reciprocal_examples() {
        // 1/(1-q) to order 3
        let one_minus_q = TruncSeries::from_bipoly(&BiPoly::one_minus_power(Var::Q, 1), (0, 3, 0));
        let rec = one_minus_q.reciprocal().unwrap();
        let expected = TruncSeries::from_bipoly(&q_poly(&[1, 1, 1, 1]), (0, 3, 0));
        assert_eq!(rec, expected);

        // (1-q) * 1/(1-q) = 1 within truncation
        let prod = one_minus_q.mul(&rec).unwrap();
        assert_eq!(prod, TruncSeries::one((0, 3, 0)));

        // 1/(1 - tqu) to bounds (2,2,2)
        let mut s = TruncSeries::one((2, 2, 2));
        s.add_term((1, 1, 1), Coeff::from_integer(-1));
        let rec = s.reciprocal().unwrap();
        let mut expected = TruncSeries::one((2, 2, 2));
        expected.add_term((1, 1, 1), Coeff::one());
        expected.add_term((2, 2, 2), Coeff::one());
        assert_eq!(rec, expected);

        let no_constant = TruncSeries::from_bipoly(&q_poly(&[0, 1]), (0, 3, 0));
        assert!(matches!(
            no_constant.reciprocal(),
            Err(Error::NonInvertibleConstant)
        ));
    }

    #[test]
    fn coeff_semantic_equality() {
        let a = Coeff::from_integer(-1);
        let b = Coeff::Cyclo(Cyclotomic::root_of_unity(4, 2));
        assert_eq!(a, b);
        let c = Coeff::Cyclo(Cyclotomic::root_of_unity(3, 1).embed(6).unwrap());
        let d = Coeff::Cyclo(Cyclotomic::root_of_unity(6, 2));
        assert_eq!(c, d);
    }

    #[test]
    fn json_round_trip_and_order() {
        let p = q_poly(&[1, 2]).add(&BiPoly::monomial(3, 0, Coeff::from_integer(-5)));
        let v = p.to_json();
        assert_eq!(BiPoly::from_json(&v).unwrap(), p);
        let s = serde_json::to_string(&v).unwrap();
        // lexicographic term order: (0,0) before (0,1) before (3,0)
        assert!(s.find("[0,0,").unwrap() < s.find("[0,1,").unwrap());
        assert!(s.find("[0,1,").unwrap() < s.find("[3,0,").unwrap());
    }
}
