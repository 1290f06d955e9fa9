//! Symmetric-group character machinery for d = 1: irreducible characters by
//! the Murnaghan-Nakayama rule, characters induced from a cyclic subgroup,
//! and intertwining numbers.  Values are stored by cycle type.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Budget, Error, Result};
use crate::tableaux::partitions_of;

/// A class function on `S_n`, with one exact value per cycle type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<Vec<usize>, Cyclotomic>,
}

impl ClassFunction {
    pub fn new(n: usize, values: BTreeMap<Vec<usize>, Cyclotomic>) -> Result<Self> {
        let expected = partitions_of(n);
        if values.len() != expected.len() || expected.iter().any(|p| !values.contains_key(p)) {
            return Err(Error::InvalidArgument(
                "class function needs one value per partition".into(),
            ));
        }
        Ok(ClassFunction { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, class: &[usize]) -> Option<&Cyclotomic> {
        self.values.get(class)
    }

    pub fn values(&self) -> impl Iterator<Item = (&Vec<usize>, &Cyclotomic)> {
        self.values.iter()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let values: Vec<serde_json::Value> = self
            .values
            .iter()
            .map(|(class, v)| serde_json::json!({ "class": class, "value": v.to_json() }))
            .collect();
        serde_json::json!({ "n": self.n, "values": values })
    }
}

/// `z_mu = prod_i i^(m_i) m_i!`, the centralizer order of the class `mu`.
pub fn centralizer_order(mu: &[usize]) -> BigUint {
    let mut mult: BTreeMap<usize, u64> = BTreeMap::new();
    for &part in mu {
        *mult.entry(part).or_insert(0) += 1;
    }
    let mut z = BigUint::one();
    for (&part, &m) in &mult {
        z *= BigUint::from(part as u64).pow(m as u32);
        for i in 1..=m {
            z *= BigUint::from(i);
        }
    }
    z
}

/// `|class mu| = n! / z_mu`.
pub fn class_size(mu: &[usize]) -> BigUint {
    let n: usize = mu.iter().sum();
    factorial(n) / centralizer_order(mu)
}

pub fn factorial(n: usize) -> BigUint {
    let mut f = BigUint::one();
    for i in 1..=n as u64 {
        f *= BigUint::from(i);
    }
    f
}

fn check_budget(n: usize, budget: &Budget) -> Result<()> {
    // S_8 is the intended ceiling for character work.
    budget.check_group_order("character table", {
        let f = factorial(n);
        u128::try_from(&f).unwrap_or(u128::MAX)
    })
}

/// Murnaghan-Nakayama value `chi^lambda(mu)`, computed recursively through
/// border-strip removals on the beta-set of `lambda`.
fn mn_value(lambda: &[usize], mu: &[usize]) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let strip = mu[0];
    let rest = &mu[1..];
    // beta-set: distinct values lambda_i + (len - 1 - i)
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (len - 1 - i))
        .collect();
    let mut total = 0i64;
    for (idx, &h) in beta.iter().enumerate() {
        if h < strip {
            continue;
        }
        let target = h - strip;
        if beta.contains(&target) {
            continue;
        }
        // height = number of beta entries strictly between target and h
        let height = beta.iter().filter(|&&b| target < b && b < h).count();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        let mut new_beta = beta.clone();
        new_beta[idx] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let new_len = new_beta.len();
        let mut new_lambda: Vec<usize> = new_beta
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (new_len - 1 - i))
            .collect();
        new_lambda.retain(|&p| p > 0);
        total += sign * mn_value(&new_lambda, rest);
    }
    total
}

/// The irreducible character of `S_n` indexed by the partition `lambda`,
/// with integer values computed by the Murnaghan-Nakayama rule.
pub fn mn_character(lambda: &[usize], budget: &Budget) -> Result<ClassFunction> {
    let n: usize = lambda.iter().sum();
    check_budget(n, budget)?;
    if lambda.windows(2).any(|w| w[0] < w[1]) || lambda.iter().any(|&p| p == 0) {
        return Err(Error::InvalidShape("not a partition".into()));
    }
    let mut values = BTreeMap::new();
    for mu in partitions_of(n) {
        let v = mn_value(lambda, &mu);
        values.insert(mu, Cyclotomic::from_integer(v));
    }
    Ok(ClassFunction { n, values })
}

/// Canonical permutation of cycle type `mu` (consecutive cycles), as the
/// image vector of `0..n`.
fn canonical_of_type(mu: &[usize]) -> Vec<usize> {
    let mut perm = Vec::new();
    let mut offset = 0;
    for &part in mu {
        for i in 0..part {
            perm.push(offset + (i + 1) % part);
        }
        offset += part;
    }
    perm
}

/// Character of `Ind_{C_n}^{S_n} rho^i`, where `C_n` is generated by an
/// n-cycle `c` and `rho(c)` is a primitive n-th root of unity.  Computed by
/// the standard induced-character sum `(1/|C_n|) sum_{x in S_n, x^-1 g x in
/// C_n} rho^i(x^-1 g x)` with exact cyclotomic values.
pub fn induced_cyclic_character(n: usize, i: u32, budget: &Budget) -> Result<ClassFunction> {
    check_budget(n, budget)?;
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let c: Vec<usize> = (0..n).map(|j| (j + 1) % n).collect();
    // exponent lookup for the cyclic subgroup
    let mut cyclic: HashMap<Vec<usize>, u64> = HashMap::new();
    let mut power: Vec<usize> = (0..n).collect();
    for k in 0..n as u64 {
        cyclic.insert(power.clone(), k);
        power = power.iter().map(|&j| c[j]).collect();
    }
    let mut values = BTreeMap::new();
    for mu in partitions_of(n) {
        let g = canonical_of_type(&mu);
        let mut acc = Cyclotomic::zero(n as u64);
        for x in (0..n).permutations(n) {
            let mut xinv = vec![0; n];
            for (a, &b) in x.iter().enumerate() {
                xinv[b] = a;
            }
            // y = x^-1 g x
            let y: Vec<usize> = (0..n).map(|j| xinv[g[x[j]]]).collect();
            if let Some(&k) = cyclic.get(&y) {
                let contrib = Cyclotomic::root_of_unity(n as u64, (i as u64 * k) as i64);
                acc = acc.add(&contrib)?;
            }
        }
        let value = acc.scale(&BigRational::new(BigInt::one(), BigInt::from(n as u64)));
        values.insert(mu, value);
    }
    Ok(ClassFunction { n, values })
}

/// The inner product `<f, g> = (1/n!) sum_mu |class mu| f(mu) conj(g(mu))`.
pub fn intertwining(f: &ClassFunction, g: &ClassFunction) -> Result<Cyclotomic> {
    if f.n != g.n {
        return Err(Error::DimensionMismatch(format!(
            "class functions on S_{} vs S_{}",
            f.n, g.n
        )));
    }
    let mut acc = Cyclotomic::zero(1);
    for (mu, fv) in &f.values {
        let gv = &g.values[mu];
        let size = BigRational::from(BigInt::from(class_size(mu)));
        let (fv, gv) = Cyclotomic::lift_pair(fv, &gv.conj());
        let term = fv.mul(&gv)?.scale(&size);
        let (a, t) = Cyclotomic::lift_pair(&acc, &term);
        acc = a.add(&t)?;
    }
    let order = BigRational::from(BigInt::from(factorial(f.n)));
    Ok(acc.scale(&(BigRational::one() / order)))
}
