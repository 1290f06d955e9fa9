//! The mahonian and bimahonian distributions of `G(d,1,n)`, computed by
//! four independent methods:
//!
//! 1. fake degrees: `W^sigma(t,q) = sum_lambda f^(sigma lambda)(t)
//!    f^(lambda-bar)(q)` over multipartition shapes;
//! 2. flag-major sums: `sum_w q^fmaj(w) t^fmaj(sigma(w^-1))` over the group;
//! 3. a Molien-type sum of graded traces over the group;
//! 4. for d = 1, the Wright recurrence.
//!
//! Molien is the reference method: the Galois twist acts entrywise on
//! matrices there, with no convention freedom.  Root-of-unity
//! specializations (Gordon) and the bipartite generating function live here
//! too.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::cyclotomic::{Cyclotomic, GaloisAut};
use crate::error::{Budget, Error, Result};
use crate::poly::{qpochhammer, BiPoly, Coeff, TruncSeries, Var};
use crate::tableaux::{fake_degree, multipartitions};
use crate::wreath::{class_types, degrees, enumerate_group, group_order};

/// Which computation method a [`DistributionRequest`] selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    FakeDegree,
    FmajSum,
    Molien,
    WrightRecurrence,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::FakeDegree => "fake",
            Method::FmajSum => "fmaj",
            Method::Molien => "molien",
            Method::WrightRecurrence => "wright",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "fake" | "fake-degree" => Ok(Method::FakeDegree),
            "fmaj" => Ok(Method::FmajSum),
            "molien" => Ok(Method::Molien),
            "wright" => Ok(Method::WrightRecurrence),
            _ => Err(Error::InvalidArgument(format!("unknown method {s:?}"))),
        }
    }
}

/// A bimahonian computation: group parameters, Galois twist, and method.
#[derive(Debug, Clone)]
pub struct DistributionRequest {
    pub d: u32,
    pub n: usize,
    pub sigma: GaloisAut,
    pub method: Method,
}

impl DistributionRequest {
    pub fn validate(&self) -> Result<()> {
        if self.sigma.conductor() % self.d as u64 != 0 {
            return Err(Error::NonDivisibleConductor {
                from: self.d as u64,
                into: self.sigma.conductor(),
            });
        }
        if self.method == Method::WrightRecurrence && (self.d != 1 || !self.sigma.is_identity()) {
            return Err(Error::InvalidArgument(
                "the recurrence method needs d = 1 and the identity twist".into(),
            ));
        }
        Ok(())
    }

    pub fn compute(&self, budget: &Budget) -> Result<BiPoly> {
        self.validate()?;
        match self.method {
            Method::FakeDegree => bimahonian_fake(self.d, self.n, &self.sigma, budget),
            Method::FmajSum => bimahonian_fmaj(self.d, self.n, &self.sigma, budget),
            Method::Molien => bimahonian_molien(self.d, self.n, &self.sigma, budget),
            Method::WrightRecurrence => wright_recurrence(self.n),
        }
    }
}

/// The mahonian distribution `W(q) = prod_i (1 + q + ... + q^(d_i - 1))`.
pub fn mahonian(d: u32, n: usize) -> BiPoly {
    let (degs, _) = degrees(d, n);
    let mut p = BiPoly::one();
    for &e in &degs {
        p = p.mul(&BiPoly::q_analog(Var::Q, e as u32));
    }
    p
}

fn check_sigma(d: u32, sigma: &GaloisAut) -> Result<()> {
    if sigma.conductor() % d as u64 != 0 {
        return Err(Error::NonDivisibleConductor {
            from: d as u64,
            into: sigma.conductor(),
        });
    }
    Ok(())
}

/// Method 1: `W^sigma(t,q) = sum_lambda f^(sigma lambda)(t)
/// f^(lambda-bar)(q)` over all multipartition shapes with `n` cells.
pub fn bimahonian_fake(d: u32, n: usize, sigma: &GaloisAut, budget: &Budget) -> Result<BiPoly> {
    check_sigma(d, sigma)?;
    let shapes = multipartitions(d, n, budget)?;
    let mut degrees_by_shape = BTreeMap::new();
    for shape in &shapes {
        degrees_by_shape.insert(shape.clone(), fake_degree(shape, budget)?);
    }
    let mut acc = BiPoly::zero();
    for shape in &shapes {
        let twisted = shape.galois_permuted(sigma)?;
        let negated = shape.color_negated();
        let t_part = degrees_by_shape[&twisted].swap_vars();
        let q_part = &degrees_by_shape[&negated];
        acc = acc.add(&t_part.mul(q_part));
    }
    Ok(acc)
}

/// Method 2: `W^sigma(t,q) = sum_w q^fmaj(w) t^fmaj(sigma(w^-1))`.
pub fn bimahonian_fmaj(d: u32, n: usize, sigma: &GaloisAut, budget: &Budget) -> Result<BiPoly> {
    check_sigma(d, sigma)?;
    let mut acc = BiPoly::zero();
    for w in enumerate_group(d, n, budget)? {
        let q_exp = w.fmaj() as u32;
        let t_exp = w.inverse().galois(sigma)?.fmaj() as u32;
        acc.add_term(t_exp, q_exp, Coeff::one());
    }
    Ok(acc)
}

/// Graded trace of an element on the coinvariant algebra:
/// `prod_i (1 - v^(d_i)) / det(1 - v w)`, computed as a truncated series
/// with the proven degree bound `N*` and returned as a polynomial.
fn coinvariant_trace(
    d: u32,
    factors: &[(usize, u32)],
    var: Var,
    numerator: &BiPoly,
    nstar: u32,
) -> BiPoly {
    let bounds = match var {
        Var::T => (nstar, 0, 0),
        Var::Q => (0, nstar, 0),
    };
    let mut det = BiPoly::one();
    for &(l, k) in factors {
        let mut factor = BiPoly::one();
        let zeta = Cyclotomic::root_of_unity(d as u64, k as i64);
        let (i, j) = match var {
            Var::T => (l as u32, 0),
            Var::Q => (0, l as u32),
        };
        factor.add_term(i, j, Coeff::Cyclo(zeta.neg()));
        det = det.mul(&factor);
    }
    let det_reciprocal = TruncSeries::from_bipoly(&det, bounds).reciprocal().unwrap();
    let series = TruncSeries::from_bipoly(numerator, bounds)
        .mul(&det_reciprocal)
        .unwrap();
    series.to_bipoly()
}

fn molien_numerators(d: u32, n: usize) -> (BiPoly, BiPoly, u32) {
    let (degs, nstar) = degrees(d, n);
    let mut num_t = BiPoly::one();
    let mut num_q = BiPoly::one();
    for &e in &degs {
        num_t = num_t.mul(&BiPoly::one_minus_power(Var::T, e as u32));
        num_q = num_q.mul(&BiPoly::one_minus_power(Var::Q, e as u32));
    }
    (num_t, num_q, nstar)
}

fn molien_finish(acc: BiPoly, d: u32, n: usize) -> Result<BiPoly> {
    let order = BigRational::from(BigInt::from(group_order(d, n) as i64));
    let scaled = acc.scale(&Coeff::Rat(BigRational::one() / order));
    // The sum of graded traces must be an integer polynomial.
    let ints = scaled.integer_coefficients()?;
    let mut out = BiPoly::zero();
    for ((i, j), c) in ints {
        out.add_term(i, j, Coeff::Rat(BigRational::from(c)));
    }
    Ok(out)
}

/// Method 3 (the reference): the Molien-type sum
/// `(1/|W|) sum_w prod_i (1-t^(d_i))(1-q^(d_i)) / (det(1-tw) det(1-q sigma(w)))`.
pub fn bimahonian_molien(d: u32, n: usize, sigma: &GaloisAut, budget: &Budget) -> Result<BiPoly> {
    check_sigma(d, sigma)?;
    let (num_t, num_q, nstar) = molien_numerators(d, n);
    let s = sigma.exponent_mod(d as u64);
    let mut trace_cache: HashMap<Vec<(usize, u32)>, (BiPoly, BiPoly)> = HashMap::new();
    let mut acc = BiPoly::zero();
    for w in enumerate_group(d, n, budget)? {
        let factors = w.char_poly_factors();
        let (trace_t, trace_q) = trace_cache
            .entry(factors.clone())
            .or_insert_with(|| {
                let twisted: Vec<(usize, u32)> = factors
                    .iter()
                    .map(|&(l, k)| (l, ((k as u64 * s) % d as u64) as u32))
                    .collect();
                (
                    coinvariant_trace(d, &factors, Var::T, &num_t, nstar),
                    coinvariant_trace(d, &twisted, Var::Q, &num_q, nstar),
                )
            })
            .clone();
        acc = acc.add(&trace_t.mul(&trace_q));
    }
    molien_finish(acc, d, n)
}

/// The Molien sum aggregated over colored cycle types (performance path;
/// asserted against the elementwise sum in tests).
pub fn bimahonian_molien_by_class(
    d: u32,
    n: usize,
    sigma: &GaloisAut,
    budget: &Budget,
) -> Result<BiPoly> {
    check_sigma(d, sigma)?;
    budget.check_group_order("class aggregation", group_order(d, n))?;
    let (num_t, num_q, nstar) = molien_numerators(d, n);
    let s = sigma.exponent_mod(d as u64);
    let mut acc = BiPoly::zero();
    for (ct, size) in class_types(d, n) {
        let factors = ct.0;
        let twisted: Vec<(usize, u32)> = factors
            .iter()
            .map(|&(l, k)| (l, ((k as u64 * s) % d as u64) as u32))
            .collect();
        let trace_t = coinvariant_trace(d, &factors, Var::T, &num_t, nstar);
        let trace_q = coinvariant_trace(d, &twisted, Var::Q, &num_q, nstar);
        let size = Coeff::Rat(BigRational::from(BigInt::from(size)));
        acc = acc.add(&trace_t.mul(&trace_q).scale(&size));
    }
    molien_finish(acc, d, n)
}

/// Method 4 (d = 1 only): the recurrence
/// `S_n = (1/n) sum_m [(t;t)_n (q;q)_n / ((t;t)_(n-m) (q;q)_(n-m))]
/// S_(n-m) / ((1-t^m)(1-q^m))`, every division exact.
pub fn wright_recurrence(n: usize) -> Result<BiPoly> {
    let mut known: Vec<BiPoly> = vec![BiPoly::one()];
    for nn in 1..=n {
        let mut acc = BiPoly::zero();
        for m in 1..=nn {
            // (t;t)_nn / (t;t)_(nn-m) and the q-analogue
            let mut block = known[nn - m].clone();
            for i in (nn - m + 1)..=nn {
                block = block.mul(&BiPoly::one_minus_power(Var::T, i as u32));
                block = block.mul(&BiPoly::one_minus_power(Var::Q, i as u32));
            }
            let block = block
                .exact_div(&BiPoly::one_minus_power(Var::T, m as u32))?
                .exact_div(&BiPoly::one_minus_power(Var::Q, m as u32))?;
            acc = acc.add(&block);
        }
        let over_n = BigRational::new(BigInt::one(), BigInt::from(nn as u64));
        let scaled = acc.scale(&Coeff::Rat(over_n));
        scaled.integer_coefficients()?;
        known.push(scaled);
    }
    Ok(known.pop().unwrap())
}

/// The type-A bimahonian `S_n(t,q)`, via fake degrees.
pub fn type_a_distribution(n: usize, budget: &Budget) -> Result<BiPoly> {
    bimahonian_fake(1, n, &GaloisAut::identity(1), budget)
}

/// Both sides of the root-of-unity factorization of `S_n(omega, q)` for a
/// primitive l-th root `omega`, writing `n = m l + r`:
/// `S_n(omega, q) = [(q;q)_n / ((q;q)_r (1-q^l)^m)] S_r(omega, q)`.
/// Returns `(lhs, rhs)` after checking they agree.
pub fn gordon_specialize(
    n: usize,
    l: u64,
    omega: &Cyclotomic,
    budget: &Budget,
) -> Result<(BiPoly, BiPoly)> {
    let actual = omega.mult_order().unwrap_or(0);
    if actual != l || l == 0 {
        return Err(Error::OrderMismatch {
            expected: l,
            actual,
        });
    }
    let m = n / l as usize;
    let r = n % l as usize;
    let lhs = type_a_distribution(n, budget)?.eval_t_at_root(omega);
    let mut denominator = qpochhammer(r as u32, Var::Q);
    for _ in 0..m {
        denominator = denominator.mul(&BiPoly::one_minus_power(Var::Q, l as u32));
    }
    let prefactor = qpochhammer(n as u32, Var::Q).exact_div(&denominator)?;
    let rhs = prefactor.mul(&type_a_distribution(r, budget)?.eval_t_at_root(omega));
    if lhs != rhs {
        return Err(Error::VerificationFailed(format!(
            "root-of-unity factorization fails for n={n}, l={l}"
        )));
    }
    Ok((lhs, rhs))
}

/// Exact evaluation `S_n(omega, omega')` at a pair of roots of unity.
pub fn gordon_evaluate(
    n: usize,
    omega: &Cyclotomic,
    omega_prime: &Cyclotomic,
    budget: &Budget,
) -> Result<Cyclotomic> {
    Ok(type_a_distribution(n, budget)?.eval_at_roots(omega, omega_prime))
}

/// The closed form of the cyclic-group bimahonian (`n = 1`):
/// `sum t^a q^b` over `0 <= a, b < d` with `a + s b = 0 mod d`.
pub fn cyclic_closed_form(d: u32, sigma: &GaloisAut) -> Result<BiPoly> {
    check_sigma(d, sigma)?;
    let s = sigma.exponent_mod(d as u64);
    let mut p = BiPoly::zero();
    for a in 0..d as u64 {
        for b in 0..d as u64 {
            if (a + s * b) % d as u64 == 0 {
                p.add_term(a as u32, b as u32, Coeff::one());
            }
        }
    }
    Ok(p)
}

/// Verify the bipartite generating function
/// `prod_{i,j >= 0} 1/(1 - t^i q^j u) = sum_n u^n S_n(t,q) / ((t;t)_n (q;q)_n)`
/// as truncated series to u-order `n_max` and `(t,q)`-degree `deg`, and
/// check the u-coefficients of the left side against a brute-force
/// enumeration of exponent-pair multisets.
pub fn genfun_check(n_max: u32, deg: u32, budget: &Budget) -> Result<bool> {
    let bounds = (deg, deg, n_max);

    // Left side: truncate the factor product, then invert once.
    let mut product = TruncSeries::one(bounds);
    for i in 0..=deg {
        for j in 0..=deg {
            let mut factor = TruncSeries::one(bounds);
            factor.add_term((i, j, 1), Coeff::from_integer(-1));
            product = product.mul(&factor)?;
        }
    }
    let lhs = product.reciprocal()?;

    // Right side: sum of u^n S_n / ((t;t)_n (q;q)_n).
    let mut rhs = TruncSeries::zero(bounds);
    for n in 0..=n_max {
        let sn = type_a_distribution(n as usize, budget)?;
        let rec_t = TruncSeries::from_bipoly(&qpochhammer(n, Var::T), bounds).reciprocal()?;
        let rec_q = TruncSeries::from_bipoly(&qpochhammer(n, Var::Q), bounds).reciprocal()?;
        let mut u_shift = TruncSeries::zero(bounds);
        u_shift.add_term((0, 0, n), Coeff::one());
        let term = TruncSeries::from_bipoly(&sn, bounds)
            .mul(&rec_t)?
            .mul(&rec_q)?
            .mul(&u_shift)?;
        rhs = rhs.add(&term)?;
    }
    if lhs != rhs {
        return Ok(false);
    }

    // Independent oracle: the u^n coefficient counts multisets of n
    // exponent pairs by total degree.
    for n in 0..=n_max {
        let mut counts: BTreeMap<(u32, u32), i64> = BTreeMap::new();
        let pairs: Vec<(u32, u32)> = (0..=deg)
            .flat_map(|i| (0..=deg).map(move |j| (i, j)))
            .collect();
        fn rec(
            pairs: &[(u32, u32)],
            start: usize,
            left: u32,
            sum_t: u32,
            sum_q: u32,
            deg: u32,
            counts: &mut BTreeMap<(u32, u32), i64>,
        ) {
            if left == 0 {
                *counts.entry((sum_t, sum_q)).or_insert(0) += 1;
                return;
            }
            for idx in start..pairs.len() {
                let (i, j) = pairs[idx];
                if sum_t + i > deg || sum_q + j > deg {
                    continue;
                }
                rec(pairs, idx, left - 1, sum_t + i, sum_q + j, deg, counts);
            }
        }
        rec(&pairs, 0, n, 0, 0, deg, &mut counts);
        let mut oracle = BiPoly::zero();
        for ((i, j), c) in counts {
            oracle.add_term(i, j, Coeff::from_integer(c));
        }
        if lhs.coefficient_of_u(n) != oracle {
            return Ok(false);
        }
    }
    Ok(true)
}
