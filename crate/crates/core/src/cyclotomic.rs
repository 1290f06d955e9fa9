//! Exact arithmetic in cyclotomic fields `Q(zeta_m)`.
//!
//! Elements are stored by conductor `m` together with their coordinate vector
//! in the power basis `{zeta_m^a : 0 <= a < phi(m)}`, reduced modulo the m-th
//! cyclotomic polynomial.  The representation is canonical: two elements over
//! the same conductor are equal iff their coordinate vectors are equal.
//! Conductor lifting is always explicit via [`Cyclotomic::embed`].

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Euler totient.
pub fn phi(m: u64) -> u64 {
    let mut m = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn divisors(m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m % d == 0 {
            out.push(d);
            if d != m / d {
                out.push(m / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Exact division of integer polynomials (ascending coefficients); the
/// divisor must be monic and divide exactly.
fn div_exact_int(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    assert!(nd >= dd);
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for i in (dd..=nd).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, dc) in den.iter().enumerate() {
            rem[i - dd + j] -= &c * dc;
        }
    }
    assert!(rem.iter().all(BigInt::is_zero), "inexact division");
    quot
}

/// The m-th cyclotomic polynomial as ascending integer coefficients,
/// computed by dividing `x^m - 1` by the cyclotomic polynomials of all
/// proper divisors.  Results are cached process-wide.
pub fn cyclotomic_polynomial(m: u64) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return p.clone();
    }
    let poly = if m == 1 {
        vec![-BigInt::one(), BigInt::one()]
    } else {
        // x^m - 1
        let mut num = vec![BigInt::zero(); m as usize + 1];
        num[0] = -BigInt::one();
        num[m as usize] = BigInt::one();
        let mut num = num;
        for d in divisors(m) {
            if d < m {
                let pd = cyclotomic_polynomial(d);
                num = div_exact_int(&num, &pd);
            }
        }
        num
    };
    debug_assert_eq!(poly.len() as u64 - 1, phi(m));
    let arc = Arc::new(poly);
    cache.lock().unwrap().insert(m, arc.clone());
    arc
}

/// An element of `Q(zeta_m)` in the canonical power basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    /// Reduce an arbitrary-length coefficient vector modulo the m-th
    /// cyclotomic polynomial and pad to length `phi(m)`.
    fn reduced(m: u64, mut coeffs: Vec<BigRational>) -> Self {
        assert!(m >= 1);
        let deg = phi(m) as usize;
        if coeffs.len() > deg {
            let modulus = cyclotomic_polynomial(m);
            let md = modulus.len() - 1;
            for i in (deg..coeffs.len()).rev() {
                let c = std::mem::replace(&mut coeffs[i], BigRational::zero());
                if c.is_zero() {
                    continue;
                }
                // subtract c * x^(i-md) * Phi_m
                for (j, pc) in modulus.iter().enumerate().take(md) {
                    let delta = &c * BigRational::from(pc.clone());
                    coeffs[i - md + j] -= delta;
                }
            }
        }
        coeffs.resize(deg, BigRational::zero());
        Cyclotomic {
            conductor: m,
            coeffs,
        }
    }

    pub fn zero(m: u64) -> Self {
        Cyclotomic::reduced(m, Vec::new())
    }

    pub fn one(m: u64) -> Self {
        Cyclotomic::from_rational_in(m, BigRational::one())
    }

    pub fn from_rational(r: BigRational) -> Self {
        Cyclotomic::from_rational_in(1, r)
    }

    pub fn from_rational_in(m: u64, r: BigRational) -> Self {
        Cyclotomic::reduced(m, vec![r])
    }

    pub fn from_integer(v: i64) -> Self {
        Cyclotomic::from_rational(BigRational::from(BigInt::from(v)))
    }

    /// `zeta_m^a`, with `a` reduced modulo `m`.
    pub fn root_of_unity(m: u64, a: i64) -> Self {
        assert!(m >= 1);
        let a = a.rem_euclid(m as i64) as usize;
        let mut coeffs = vec![BigRational::zero(); a + 1];
        coeffs[a] = BigRational::one();
        Cyclotomic::reduced(m, coeffs)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(BigRational::is_zero)
    }

    /// True iff the element lies in `Q`.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(BigRational::is_zero)
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_same_conductor(&self, other: &Self) -> Result<()> {
        if self.conductor != other.conductor {
            return Err(Error::ConductorMismatch {
                lhs: self.conductor,
                rhs: other.conductor,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_conductor(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Cyclotomic {
            conductor: self.conductor,
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_conductor(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Cyclotomic {
            conductor: self.conductor,
            coeffs,
        })
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_conductor(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Cyclotomic::zero(self.conductor));
        }
        let mut conv = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] += a * b;
            }
        }
        Ok(Cyclotomic::reduced(self.conductor, conv))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|a| a * r).collect(),
        }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against
    /// the (irreducible) modulus.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Work in Q[x]: r0 = Phi_m, r1 = self, track s with r = s * self mod Phi_m.
        let modulus: Vec<BigRational> = cyclotomic_polynomial(self.conductor)
            .iter()
            .map(|c| BigRational::from(c.clone()))
            .collect();
        let trim = |v: &mut Vec<BigRational>| {
            while v.last().map(BigRational::is_zero).unwrap_or(false) {
                v.pop();
            }
        };
        let mut r0 = modulus;
        let mut r1 = self.coeffs.clone();
        trim(&mut r1);
        let mut s0: Vec<BigRational> = vec![];
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while !r1.is_empty() {
            // divide r0 by r1
            let mut rem = r0.clone();
            let mut quo = vec![BigRational::zero(); rem.len().saturating_sub(r1.len()) + 1];
            let lead = r1.last().unwrap().clone();
            while rem.len() >= r1.len() && !rem.is_empty() {
                let c = rem.last().unwrap() / &lead;
                let shift = rem.len() - r1.len();
                quo[shift] = c.clone();
                for (j, b) in r1.iter().enumerate() {
                    let delta = &c * b;
                    rem[shift + j] -= delta;
                }
                trim(&mut rem);
            }
            // s_next = s0 - quo * s1
            let mut s_next = s0.clone();
            s_next.resize(s_next.len().max(quo.len() + s1.len()), BigRational::zero());
            for (i, qc) in quo.iter().enumerate() {
                if qc.is_zero() {
                    continue;
                }
                for (j, sc) in s1.iter().enumerate() {
                    let delta = qc * sc;
                    s_next[i + j] -= delta;
                }
            }
            trim(&mut s_next);
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s_next;
        }
        // r0 is the gcd, a nonzero constant since Phi_m is irreducible.
        assert_eq!(r0.len(), 1, "modulus must be irreducible over Q");
        let inv_gcd = BigRational::one() / &r0[0];
        let coeffs = s0.iter().map(|c| c * &inv_gcd).collect();
        Ok(Cyclotomic::reduced(self.conductor, coeffs))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_same_conductor(other)?;
        self.mul(&other.inverse()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Cyclotomic::one(self.conductor);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Re-express the element over a larger conductor `m'` (requires
    /// `m | m'`).  The field element is unchanged.
    pub fn embed(&self, into: u64) -> Result<Self> {
        if into % self.conductor != 0 {
            return Err(Error::NonDivisibleConductor {
                from: self.conductor,
                into,
            });
        }
        if into == self.conductor {
            return Ok(self.clone());
        }
        let step = (into / self.conductor) as usize;
        let mut coeffs = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (a, c) in self.coeffs.iter().enumerate() {
            coeffs[a * step] = c.clone();
        }
        Ok(Cyclotomic::reduced(into, coeffs))
    }

    /// Lift two elements to their least common conductor.
    pub fn lift_pair(a: &Self, b: &Self) -> (Self, Self) {
        let m = a.conductor.lcm(&b.conductor);
        (a.embed(m).unwrap(), b.embed(m).unwrap())
    }

    /// Least `k >= 1` with `self^k = 1`, or `None` if the element is not a
    /// root of unity.  The torsion subgroup of `Q(zeta_m)^x` has order
    /// `lcm(2, m)`, which bounds the search.
    pub fn mult_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let bound = 2u64.lcm(&self.conductor);
        let mut p = self.clone();
        for k in 1..=bound {
            if k > 1 {
                p = p.mul(self).unwrap();
            }
            if p.is_one() {
                return Some(k);
            }
        }
        None
    }

    /// Complex conjugate (the Galois automorphism with `s = -1`).
    pub fn conj(&self) -> Self {
        GaloisAut::conjugation(self.conductor).apply(self).unwrap()
    }

    /// True iff the element is fixed by complex conjugation, i.e. real.
    pub fn is_fixed_by_conjugation(&self) -> bool {
        self.conj() == *self
    }

    /// JSON form `{"m": m, "coeffs": ["p/q", ...]}` with rationals in lowest
    /// terms.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "m": self.conductor,
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::InvalidArgument("cyclotomic: expected object".into()))?;
        let m = obj
            .get("m")
            .and_then(|x| x.as_u64())
            .ok_or_else(|| Error::InvalidArgument("cyclotomic: missing conductor".into()))?;
        let coeffs = obj
            .get("coeffs")
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::InvalidArgument("cyclotomic: missing coeffs".into()))?;
        let mut parsed = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            let s = c
                .as_str()
                .ok_or_else(|| Error::InvalidArgument("cyclotomic: coeff must be string".into()))?;
            let r = BigRational::from_str(s)
                .map_err(|e| Error::InvalidArgument(format!("cyclotomic: bad rational: {e}")))?;
            parsed.push(r);
        }
        if parsed.len() as u64 != phi(m) {
            return Err(Error::InvalidArgument(format!(
                "cyclotomic: expected {} coeffs for conductor {m}",
                phi(m)
            )));
        }
        Ok(Cyclotomic {
            conductor: m,
            coeffs: parsed,
        })
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (a, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let abs = c.abs();
            if a == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "z{}^{a}", self.conductor)?;
            }
        }
        Ok(())
    }
}

/// The field automorphism of `Q(zeta_m)` sending `zeta_m` to `zeta_m^s`,
/// `gcd(s, m) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisAut {
    conductor: u64,
    s: u64,
}

impl GaloisAut {
    pub fn new(conductor: u64, s: i64) -> Result<Self> {
        assert!(conductor >= 1);
        let s = s.rem_euclid(conductor as i64) as u64;
        let s = if s == 0 && conductor == 1 { 1 } else { s };
        if s.gcd(&conductor) != 1 {
            return Err(Error::InvalidArgument(format!(
                "gcd({s}, {conductor}) != 1: not a Galois automorphism"
            )));
        }
        Ok(GaloisAut { conductor, s })
    }

    pub fn identity(conductor: u64) -> Self {
        GaloisAut { conductor, s: 1 % conductor.max(1) }
    }

    /// Complex conjugation: `s = -1`.
    pub fn conjugation(conductor: u64) -> Self {
        GaloisAut::new(conductor, -1).unwrap()
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// The exponent, reduced modulo the conductor.
    pub fn exponent(&self) -> u64 {
        self.s
    }

    /// The exponent reduced modulo `m` (for `m` dividing the conductor).
    pub fn exponent_mod(&self, m: u64) -> u64 {
        self.s % m
    }

    pub fn is_identity(&self) -> bool {
        self.s % self.conductor == 1 % self.conductor.max(1) || self.conductor == 1
    }

    /// Composition: `(self o other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.conductor != other.conductor {
            return Err(Error::ConductorMismatch {
                lhs: self.conductor,
                rhs: other.conductor,
            });
        }
        GaloisAut::new(self.conductor, ((self.s * other.s) % self.conductor) as i64)
    }

    pub fn inverse(&self) -> Self {
        // s is a unit mod m; brute-force the inverse (conductors are small).
        let m = self.conductor;
        for t in 1..=m {
            if (self.s * t) % m == 1 % m.max(1) || m == 1 {
                return GaloisAut { conductor: m, s: t % m.max(1) };
            }
        }
        unreachable!("unit has an inverse");
    }

    /// Apply to an element whose conductor divides this automorphism's
    /// conductor:  `zeta_m^a  |->  zeta_m^(s a)` extended Q-linearly.
    pub fn apply(&self, x: &Cyclotomic) -> Result<Cyclotomic> {
        let m = x.conductor();
        if self.conductor % m != 0 {
            return Err(Error::NonDivisibleConductor {
                from: m,
                into: self.conductor,
            });
        }
        let s = self.s % m;
        let mut coeffs = vec![BigRational::zero(); m as usize];
        for (a, c) in x.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let target = (a as u64 * s) % m;
            coeffs[target as usize] += c;
        }
        Ok(Cyclotomic::reduced(m, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn cyclotomic_polynomials_are_classical() {
        let as_i64 = |m: u64| -> Vec<i64> {
            cyclotomic_polynomial(m)
                .iter()
                .map(|c| i64::try_from(c).unwrap())
                .collect()
        };
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(2), vec![1, 1]);
        assert_eq!(as_i64(3), vec![1, 1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn phi_of_root_vanishes_up_to_24() {
        for m in 1..=24u64 {
            let z = Cyclotomic::root_of_unity(m, 1);
            let poly = cyclotomic_polynomial(m);
            let mut acc = Cyclotomic::zero(m);
            for (a, c) in poly.iter().enumerate() {
                let term = z.pow(a as i64).unwrap().scale(&BigRational::from(c.clone()));
                acc = acc.add(&term).unwrap();
            }
            assert!(acc.is_zero(), "Phi_{m}(zeta_{m}) != 0");
        }
    }

    #[test]
    fn root_of_unity_basics() {
        assert!(Cyclotomic::root_of_unity(1, 0).is_one());
        assert_eq!(
            Cyclotomic::root_of_unity(4, 2),
            Cyclotomic::from_rational_in(4, rat(-1, 1))
        );
        let z31 = Cyclotomic::root_of_unity(3, 1);
        let z32 = Cyclotomic::root_of_unity(3, 2);
        assert_eq!(
            z31.add(&z32).unwrap(),
            Cyclotomic::from_rational_in(3, rat(-1, 1))
        );
    }

    #[test]
    fn inverse_pairs_multiply_to_one() {
        let z = Cyclotomic::root_of_unity(5, 1);
        let z4 = Cyclotomic::root_of_unity(5, 4);
        assert!(z.mul(&z4).unwrap().is_one());
    }

    #[test]
    fn product_of_one_plus_primitive_cube_roots() {
        // (1 + z3)(1 + z3^2) = 1 + z3 + z3^2 + 1 = 1, using z3^2 + z3 + 1 = 0.
        let one = Cyclotomic::one(3);
        let a = one.add(&Cyclotomic::root_of_unity(3, 1)).unwrap();
        let b = one.add(&Cyclotomic::root_of_unity(3, 2)).unwrap();
        assert!(a.mul(&b).unwrap().is_one());
    }

    #[test]
    fn division_by_one_minus_i() {
        // 1 / (1 - z4) = (1 + z4) / 2
        let one = Cyclotomic::one(4);
        let den = one.sub(&Cyclotomic::root_of_unity(4, 1)).unwrap();
        let q = one.div(&den).unwrap();
        let expected = one
            .add(&Cyclotomic::root_of_unity(4, 1))
            .unwrap()
            .scale(&rat(1, 2));
        assert_eq!(q, expected);
        assert!(q.mul(&den).unwrap().is_one());
    }

    #[test]
    fn division_by_zero_and_conductor_mismatch() {
        let one = Cyclotomic::one(4);
        assert!(matches!(
            one.div(&Cyclotomic::zero(4)),
            Err(Error::DivisionByZero)
        ));
        assert!(matches!(
            one.add(&Cyclotomic::one(3)),
            Err(Error::ConductorMismatch { .. })
        ));
    }

    #[test]
    fn embed_examples() {
        let minus_one = Cyclotomic::from_rational_in(2, rat(-1, 1));
        assert_eq!(
            minus_one.embed(4).unwrap(),
            Cyclotomic::root_of_unity(4, 2)
        );
        assert!(Cyclotomic::one(1).embed(12).unwrap().is_one());
        assert_eq!(
            Cyclotomic::root_of_unity(3, 1).embed(6).unwrap(),
            Cyclotomic::root_of_unity(6, 2)
        );
        assert!(matches!(
            Cyclotomic::one(4).embed(6),
            Err(Error::NonDivisibleConductor { .. })
        ));
    }

    #[test]
    fn galois_examples() {
        let z5 = Cyclotomic::root_of_unity(5, 1);
        let s2 = GaloisAut::new(5, 2).unwrap();
        assert_eq!(s2.apply(&z5).unwrap(), Cyclotomic::root_of_unity(5, 2));

        let x = Cyclotomic::root_of_unity(5, 1)
            .add(&Cyclotomic::root_of_unity(5, 3).scale(&rat(2, 7)))
            .unwrap();
        let conj = GaloisAut::conjugation(5);
        let expected = Cyclotomic::root_of_unity(5, 4)
            .add(&Cyclotomic::root_of_unity(5, 2).scale(&rat(2, 7)))
            .unwrap();
        assert_eq!(conj.apply(&x).unwrap(), expected);
        assert_eq!(GaloisAut::identity(5).apply(&x).unwrap(), x);
    }

    #[test]
    fn galois_is_multiplicative() {
        let s = GaloisAut::new(12, 5).unwrap();
        let x = Cyclotomic::root_of_unity(12, 1)
            .add(&Cyclotomic::one(12))
            .unwrap();
        let y = Cyclotomic::root_of_unity(12, 7)
            .sub(&Cyclotomic::root_of_unity(12, 2).scale(&rat(3, 2)))
            .unwrap();
        let lhs = s.apply(&x.mul(&y).unwrap()).unwrap();
        let rhs = s.apply(&x).unwrap().mul(&s.apply(&y).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mult_order_examples() {
        assert_eq!(Cyclotomic::one(6).mult_order(), Some(1));
        assert_eq!(Cyclotomic::root_of_unity(6, 3).mult_order(), Some(2));
        assert_eq!(Cyclotomic::root_of_unity(12, 4).mult_order(), Some(3));
        assert_eq!(Cyclotomic::from_integer(2).mult_order(), None);
        assert_eq!(Cyclotomic::zero(3).mult_order(), None);
    }

    #[test]
    fn conjugation_fixed_points() {
        let z3 = Cyclotomic::root_of_unity(3, 1);
        let sum = z3.add(&Cyclotomic::root_of_unity(3, 2)).unwrap();
        assert!(sum.is_fixed_by_conjugation());
        assert!(!z3.is_fixed_by_conjugation());
        assert!(Cyclotomic::from_rational(rat(7, 2)).is_fixed_by_conjugation());
    }

    #[test]
    fn json_round_trip() {
        let x = Cyclotomic::root_of_unity(6, 1).scale(&rat(-3, 4));
        let v = x.to_json();
        assert_eq!(Cyclotomic::from_json(&v).unwrap(), x);
        assert_eq!(v["m"], 6);
    }
}
