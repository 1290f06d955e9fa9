//! Springer-regular elements, the twisted bicyclic action on the group, and
//! the bicyclic sieving checker.
//!
//! A regular element has an eigenvector avoiding every reflecting
//! hyperplane `x_i = zeta_d^k x_j` (plus `x_i = 0` when `d >= 2`).  The
//! monomial-matrix eigenstructure is block-diagonal per cycle, which turns
//! regularity into a terminating exact test: per candidate eigenvalue a
//! cycle is live iff the eigenvalue solves its block, live blocks force the
//! eigenvector up to a scalar, and cross-block scalars are chosen as powers
//! of an auxiliary root of unity of prime order coprime to everything else,
//! so that cross-block coincidences are impossible and only verified
//! exactness remains.

use std::collections::{BTreeMap, HashMap};

use num_integer::Integer;

use crate::cyclotomic::{Cyclotomic, GaloisAut};
use crate::distributions::bimahonian_fake;
use crate::error::{Budget, Error, Result};
use crate::poly::BiPoly;
use crate::wreath::{enumerate_group, WreathElem};

/// Witness that an element is regular: an eigenvalue together with an
/// eigenvector off every reflecting hyperplane.
#[derive(Debug, Clone)]
pub struct RegularCertificate {
    pub element: WreathElem,
    /// The regular eigenvalue, stored over the conductor equal to its order.
    pub eigenvalue: Cyclotomic,
    /// Multiplicative order of the eigenvalue (= order of the element).
    pub order: u64,
    pub witness: Vec<Cyclotomic>,
}

fn smallest_coprime_prime(above: u64, coprime_to: u64) -> u64 {
    let mut p = above.max(2);
    loop {
        let is_prime = p >= 2 && (2..p).take_while(|q| q * q <= p).all(|q| p % q != 0);
        if is_prime && coprime_to % p != 0 {
            return p;
        }
        p += 1;
    }
}

/// Exponent `a` with `x = zeta_k^a`, for a root of unity of order `k`
/// represented over some conductor divisible by `k`.
fn root_exponent(x: &Cyclotomic, k: u64) -> Option<u64> {
    let m = x.conductor();
    if m % k != 0 {
        return None;
    }
    (0..k).find(|&a| {
        Cyclotomic::root_of_unity(k, a as i64)
            .embed(m)
            .map(|z| z == *x)
            .unwrap_or(false)
    })
}

/// All regular certificates of an element, one per regular eigenvalue.
pub fn regular_certificates(c: &WreathElem) -> Vec<RegularCertificate> {
    let d = c.d() as u64;
    let n = c.n();
    if n == 0 {
        return Vec::new();
    }
    let factors = c.char_poly_factors();
    // Candidate eigenvalues: roots of some block polynomial
    // 1 - zeta^(k) t^(l), i.e. zeta_(d l)^(k + d r).
    let conductor = factors
        .iter()
        .fold(1u64, |acc, &(l, _)| acc.lcm(&(d * l as u64)));
    let mut candidates: Vec<Cyclotomic> = Vec::new();
    for &(l, k) in &factors {
        let block_m = d * l as u64;
        for r in 0..l as u64 {
            let lambda = Cyclotomic::root_of_unity(block_m, (k as u64 + d * r) as i64)
                .embed(conductor)
                .unwrap();
            if !candidates.contains(&lambda) {
                candidates.push(lambda);
            }
        }
    }

    let mut out = Vec::new();
    'candidates: for lambda in candidates {
        // A cycle is live iff lambda^l = zeta^k.
        let mut live = Vec::with_capacity(factors.len());
        for &(l, k) in &factors {
            let zeta = Cyclotomic::root_of_unity(d, k as i64).embed(conductor).unwrap();
            live.push(lambda.pow(l as i64).unwrap() == zeta);
        }
        let dead = live.iter().filter(|&&x| !x).count();
        if d >= 2 && dead > 0 {
            continue;
        }
        if d == 1 {
            // Zero coordinates are allowed only on a single fixed point.
            if dead > 1 {
                continue;
            }
            for (idx, &(l, _)) in factors.iter().enumerate() {
                if !live[idx] && l > 1 {
                    continue 'candidates;
                }
            }
        }

        // Witness conductor: adjoin an auxiliary prime so cross-block
        // scalar choices cannot satisfy any hyperplane equation.
        let aux = smallest_coprime_prime(factors.len() as u64 + 1, conductor * d);
        let m = conductor.lcm(&d).lcm(&aux);
        let lambda_m = lambda.embed(m).unwrap();
        let lambda_inv = lambda_m.inverse().unwrap();

        // Rebuild per-position cycles in window order.
        let mut witness = vec![Cyclotomic::zero(m); n];
        let mut seen = vec![false; n];
        let mut block_index = 0u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            // collect the cycle through `start`
            let mut cycle = vec![start];
            let mut i = c.perm()[start];
            while i != start {
                cycle.push(i);
                i = c.perm()[i];
            }
            for &i in &cycle {
                seen[i] = true;
            }
            let len = cycle.len();
            let colorsum: u64 = cycle.iter().map(|&i| c.colors()[i] as u64).sum();
            let zeta = Cyclotomic::root_of_unity(d, (colorsum % d) as i64)
                .embed(m)
                .unwrap();
            let block_live = lambda_m.pow(len as i64).unwrap() == zeta;
            if !block_live {
                continue; // coordinates stay zero (d = 1 fixed point)
            }
            // v_(perm(i)) = zeta^(k_i) lambda^-1 v_i around the cycle,
            // scaled by a fresh power of the auxiliary root.
            let scalar = Cyclotomic::root_of_unity(aux, block_index as i64)
                .embed(m)
                .unwrap();
            block_index += 1;
            let mut value = scalar;
            for &i in &cycle {
                witness[i] = value.clone();
                let step = Cyclotomic::root_of_unity(d, c.colors()[i] as i64)
                    .embed(m)
                    .unwrap();
                value = step.mul(&value).unwrap().mul(&lambda_inv).unwrap();
            }
        }

        // Exact verification: the eigen equation and every hyperplane.
        let image = c.apply_to_vector(&witness).unwrap();
        let scaled: Vec<Cyclotomic> = witness
            .iter()
            .map(|v| lambda_m.mul(v).unwrap())
            .collect();
        if image != scaled {
            continue;
        }
        if d >= 2 && witness.iter().any(|v| v.is_zero()) {
            continue;
        }
        // x_i = zeta^k x_j for some k  iff  x_i^d = x_j^d.
        let powers: Vec<Cyclotomic> = witness
            .iter()
            .map(|v| v.pow(d as i64).unwrap())
            .collect();
        for i in 0..n {
            for j in i + 1..n {
                if powers[i] == powers[j] {
                    continue 'candidates;
                }
            }
        }

        let order = lambda.mult_order().expect("eigenvalue is a root of unity");
        debug_assert_eq!(order, c.order(), "regular eigenvalue order");
        let a = root_exponent(&lambda, order).expect("order divides conductor");
        out.push(RegularCertificate {
            element: c.clone(),
            eigenvalue: Cyclotomic::root_of_unity(order, a as i64),
            order,
            witness,
        });
    }
    out
}

/// Whether the element admits any regular certificate.
pub fn is_regular(c: &WreathElem) -> bool {
    !regular_certificates(c).is_empty()
}

/// A bicyclic sieving instance: the group as a set, two regular generators
/// with their certificates, the Galois twist, and the polynomial.
#[derive(Debug, Clone)]
pub struct BicspInstance {
    pub elements: Vec<WreathElem>,
    pub c: RegularCertificate,
    pub c_prime: RegularCertificate,
    pub sigma: GaloisAut,
    /// `s mod ord(c)` with `sigma(omega) = omega^s`.
    pub s: u64,
    pub poly: BiPoly,
}

impl BicspInstance {
    /// Build the instance for `X = G(d,1,n)` with `X(t,q) = W^sigma(t,q)`.
    pub fn for_group(
        d: u32,
        n: usize,
        c: RegularCertificate,
        c_prime: RegularCertificate,
        sigma: GaloisAut,
        budget: &Budget,
    ) -> Result<Self> {
        if c.element.d() != d
            || c.element.n() != n
            || c_prime.element.d() != d
            || c_prime.element.n() != n
        {
            return Err(Error::DimensionMismatch("certificate group".into()));
        }
        if sigma.conductor() % c.order != 0 {
            return Err(Error::NonDivisibleConductor {
                from: c.order,
                into: sigma.conductor(),
            });
        }
        let elements: Vec<WreathElem> = enumerate_group(d, n, budget)?.collect();
        budget.check_group_order(
            "orbit scan",
            elements.len() as u128 * c.order as u128 * c_prime.order as u128,
        )?;
        let s = sigma.exponent_mod(c.order);
        let poly = bimahonian_fake(d, n, &sigma, budget)?;
        Ok(BicspInstance {
            elements,
            c,
            c_prime,
            sigma,
            s,
            poly,
        })
    }

    /// The twisted action of `(c^i, c'^j)`: `w -> c^(s i) w c'^(-j)`.
    pub fn twisted_action(&self, i: u64, j: u64, w: &WreathElem) -> WreathElem {
        let left = self.c.element.pow((self.s * i) as i64);
        let right = self.c_prime.element.pow(-(j as i64));
        left.mul(w).unwrap().mul(&right).unwrap()
    }
}

/// One orbit of the bicyclic action.
#[derive(Debug, Clone)]
pub struct Orbit {
    /// Indices into the instance's element list.
    pub members: Vec<usize>,
    /// Generators of the stabilizer of a representative, inside
    /// `Z/k x Z/l`.
    pub stabilizer_gens: Vec<(u64, u64)>,
    /// All stabilizer elements.
    pub stabilizer: Vec<(u64, u64)>,
}

/// Full report of a bicyclic sieving check.
#[derive(Debug, Clone)]
pub struct BicspReport {
    pub k: u64,
    pub l: u64,
    /// `X(omega^-i, omega'^-j)` over the full grid.
    pub evaluations: Vec<Vec<Cyclotomic>>,
    /// Fixed-point counts of `(c^i, c'^j)`.
    pub fixed_points: Vec<Vec<u64>>,
    /// Coefficients of the polynomial modulo `(t^k - 1, q^l - 1)`.
    pub a: Vec<Vec<i64>>,
    /// Orbit-counting interpretation of `a(i,j)`.
    pub orbit_counts: Vec<Vec<u64>>,
    pub orbits: Vec<Orbit>,
    pub pass_i: bool,
    pub pass_ii: bool,
}

impl BicspReport {
    pub fn pass(&self) -> bool {
        self.pass_i && self.pass_ii
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "k": self.k,
            "l": self.l,
            "evaluations": self
                .evaluations
                .iter()
                .map(|row| row.iter().map(|v| v.to_json()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "fixed_points": self.fixed_points,
            "a": self.a,
            "orbit_counts": self.orbit_counts,
            "orbits": self
                .orbits
                .iter()
                .map(|o| {
                    serde_json::json!({
                        "size": o.members.len(),
                        "stabilizer_gens": o.stabilizer_gens,
                    })
                })
                .collect::<Vec<_>>(),
            "pass_i": self.pass_i,
            "pass_ii": self.pass_ii,
        })
    }
}

/// Hermite-style generators for a subgroup of `Z/k x Z/l` given all its
/// elements: a basis of the preimage lattice in `Z^2`, reduced modulo the
/// ambient orders.
fn subgroup_generators(elements: &[(u64, u64)], k: u64, l: u64) -> Vec<(u64, u64)> {
    // Lattice rows: (k, 0), (0, l), and every stabilizer element.
    let mut rows: Vec<(i128, i128)> = vec![(k as i128, 0), (0, l as i128)];
    for &(a, b) in elements {
        rows.push((a as i128, b as i128));
    }
    // Column echelon on 2 columns via gcd elimination.
    // First column.
    loop {
        let mut nonzero: Vec<usize> = (0..rows.len()).filter(|&r| rows[r].0 != 0).collect();
        if nonzero.len() <= 1 {
            break;
        }
        nonzero.sort_by_key(|&r| rows[r].0.abs());
        let (pivot, other) = (nonzero[0], nonzero[1]);
        let q = rows[other].0 / rows[pivot].0;
        rows[other].0 -= q * rows[pivot].0;
        rows[other].1 -= q * rows[pivot].1;
    }
    let first = (0..rows.len()).find(|&r| rows[r].0 != 0);
    // Second column among rows with zero first column.
    loop {
        let mut nonzero: Vec<usize> = (0..rows.len())
            .filter(|&r| rows[r].0 == 0 && rows[r].1 != 0)
            .collect();
        if nonzero.len() <= 1 {
            break;
        }
        nonzero.sort_by_key(|&r| rows[r].1.abs());
        let (pivot, other) = (nonzero[0], nonzero[1]);
        let q = rows[other].1 / rows[pivot].1;
        rows[other].1 -= q * rows[pivot].1;
    }
    let second = (0..rows.len()).find(|&r| rows[r].0 == 0 && rows[r].1 != 0);
    let mut gens = Vec::new();
    for r in [first, second].into_iter().flatten() {
        let a = rows[r].0.rem_euclid(k as i128) as u64;
        let b = rows[r].1.rem_euclid(l as i128) as u64;
        if (a, b) != (0, 0) {
            gens.push((a, b));
        }
    }
    gens
}

/// Orbit decomposition of the twisted action, with stabilizers.
pub fn orbits_and_stabilizers(inst: &BicspInstance) -> Vec<Orbit> {
    let k = inst.c.order;
    let l = inst.c_prime.order;
    let index: HashMap<&WreathElem, usize> = inst
        .elements
        .iter()
        .enumerate()
        .map(|(i, w)| (w, i))
        .collect();
    // generator moves: (1,0) and (0,1)
    let gen_left = inst.c.element.pow(inst.s as i64);
    let gen_right = inst.c_prime.element.inverse();
    let mut seen = vec![false; inst.elements.len()];
    let mut orbits = Vec::new();
    for start in 0..inst.elements.len() {
        if seen[start] {
            continue;
        }
        let mut members = vec![start];
        seen[start] = true;
        let mut queue = vec![start];
        while let Some(at) = queue.pop() {
            let w = &inst.elements[at];
            for next in [
                gen_left.mul(w).unwrap(),
                w.mul(&gen_right).unwrap(),
            ] {
                let ni = index[&next];
                if !seen[ni] {
                    seen[ni] = true;
                    members.push(ni);
                    queue.push(ni);
                }
            }
        }
        members.sort_unstable();
        // stabilizer of the representative
        let rep = &inst.elements[members[0]];
        let mut stabilizer = Vec::new();
        for i in 0..k {
            for j in 0..l {
                if inst.twisted_action(i, j, rep) == *rep {
                    stabilizer.push((i, j));
                }
            }
        }
        let stabilizer_gens = subgroup_generators(&stabilizer, k, l);
        orbits.push(Orbit {
            members,
            stabilizer_gens,
            stabilizer,
        });
    }
    orbits
}

/// Run the full bicyclic sieving check: condition (i) compares the
/// evaluation grid with fixed-point counts, condition (ii) compares the
/// reduced coefficients `a(i,j)` with kernel-constrained orbit counts.
pub fn check_bicsp(inst: &BicspInstance) -> Result<BicspReport> {
    let k = inst.c.order;
    let l = inst.c_prime.order;
    let m = k.lcm(&l);
    let omega = inst.c.eigenvalue.embed(m).unwrap();
    let omega_prime = inst.c_prime.eigenvalue.embed(m).unwrap();

    // a(i,j) table from the reduction mod (t^k - 1, q^l - 1).
    let reduced = inst.poly.reduce_mod_cyclic(k as u32, l as u32);
    let a_coeffs = reduced.integer_coefficients()?;
    let mut a = vec![vec![0i64; l as usize]; k as usize];
    for ((i, j), c) in &a_coeffs {
        a[*i as usize][*j as usize] = i64::try_from(c).map_err(|_| {
            Error::NonIntegral("reduced coefficient exceeds i64".into())
        })?;
    }

    // Evaluation grid by discrete Fourier sums over the a-table:
    // X(omega^-i, omega'^-j) = sum a(i',j') omega^(-i i') omega'^(-j j'),
    // so the power tables hold the inverse roots.
    let pow_omega: Vec<Cyclotomic> = power_table(&omega.inverse()?, k, m);
    let pow_omega_prime: Vec<Cyclotomic> = power_table(&omega_prime.inverse()?, l, m);
    // partial[i'][j] = sum_j' a(i',j') omega'^(-j j')
    let mut partial = vec![vec![Cyclotomic::zero(m); l as usize]; k as usize];
    for i in 0..k as usize {
        for j in 0..l as usize {
            let mut acc = Cyclotomic::zero(m);
            for jp in 0..l as usize {
                let coeff = a[i][jp];
                if coeff == 0 {
                    continue;
                }
                let root = &pow_omega_prime[(j * jp) % l as usize];
                acc = acc
                    .add(&root.scale(&num_rational::BigRational::from(
                        num_bigint::BigInt::from(coeff),
                    )))
                    .unwrap();
            }
            partial[i][j] = acc;
        }
    }
    let mut evaluations = vec![vec![Cyclotomic::zero(m); l as usize]; k as usize];
    #[allow(clippy::needless_range_loop)]
    for i in 0..k as usize {
        for j in 0..l as usize {
            let mut acc = Cyclotomic::zero(m);
            for ip in 0..k as usize {
                if partial[ip][j].is_zero() {
                    continue;
                }
                let root = &pow_omega[(i * ip) % k as usize];
                acc = acc.add(&root.mul(&partial[ip][j]).unwrap()).unwrap();
            }
            evaluations[i][j] = acc;
        }
    }

    // Fixed-point grid of (c^i, c'^j).
    let mut fixed_points = vec![vec![0u64; l as usize]; k as usize];
    let mut lefts = Vec::with_capacity(k as usize);
    for i in 0..k {
        lefts.push(inst.c.element.pow((inst.s * i) as i64));
    }
    let mut rights = Vec::with_capacity(l as usize);
    for j in 0..l {
        rights.push(inst.c_prime.element.pow(-(j as i64)));
    }
    for w in &inst.elements {
        for (i, left) in lefts.iter().enumerate() {
            let lw = left.mul(w).unwrap();
            for (j, right) in rights.iter().enumerate() {
                if lw.mul(right).unwrap() == *w {
                    fixed_points[i][j] += 1;
                }
            }
        }
    }

    // Orbits and the kernel-constrained counts.  With omega = zeta_m^e and
    // omega' = zeta_m^e', the character rho^(i,j) sends the stabilizer
    // element (a,b) to zeta_m^-(i a e + j b e'), so membership in the kernel
    // is a congruence mod m.
    let e_omega = root_exponent(&omega, m).expect("eigenvalue exponent");
    let e_omega_prime = root_exponent(&omega_prime, m).expect("eigenvalue exponent");
    let orbits = orbits_and_stabilizers(inst);
    let mut orbit_counts = vec![vec![0u64; l as usize]; k as usize];
    for orbit in &orbits {
        for i in 0..k {
            for j in 0..l {
                let in_kernel = orbit.stabilizer_gens.iter().all(|&(sa, sb)| {
                    ((i * sa) % m * e_omega + (j * sb) % m * e_omega_prime) % m == 0
                });
                if in_kernel {
                    orbit_counts[i as usize][j as usize] += 1;
                }
            }
        }
    }

    // Verdicts.
    let mut pass_i = true;
    let mut pass_ii = true;
    for i in 0..k as usize {
        for j in 0..l as usize {
            let count = Cyclotomic::from_rational_in(
                m,
                num_rational::BigRational::from(num_bigint::BigInt::from(fixed_points[i][j])),
            );
            if evaluations[i][j] != count {
                pass_i = false;
            }
            if a[i][j] < 0 || a[i][j] as u64 != orbit_counts[i][j] {
                pass_ii = false;
            }
        }
    }

    Ok(BicspReport {
        k,
        l,
        evaluations,
        fixed_points,
        a,
        orbit_counts,
        orbits,
        pass_i,
        pass_ii,
    })
}

fn power_table(x: &Cyclotomic, count: u64, m: u64) -> Vec<Cyclotomic> {
    let mut table = Vec::with_capacity(count as usize);
    let mut acc = Cyclotomic::one(m);
    for _ in 0..count {
        table.push(acc.clone());
        acc = acc.mul(x).unwrap();
    }
    table
}

/// All regular cyclic subgroups of `G(d,1,n)`: one canonical generator
/// certificate per distinct cyclic subgroup generated by a regular element.
pub fn regular_cyclic_subgroups(
    d: u32,
    n: usize,
    budget: &Budget,
) -> Result<Vec<RegularCertificate>> {
    let mut subgroups: BTreeMap<Vec<WreathElem>, RegularCertificate> = BTreeMap::new();
    for w in enumerate_group(d, n, budget)? {
        let certs = regular_certificates(&w);
        if certs.is_empty() {
            continue;
        }
        let mut members: Vec<WreathElem> = Vec::new();
        let mut p = WreathElem::identity(d, n);
        loop {
            members.push(p.clone());
            p = p.mul(&w).unwrap();
            if p.is_identity() {
                members.push(p);
                members.dedup();
                break;
            }
        }
        members.sort_unstable();
        members.dedup();
        subgroups.entry(members).or_insert_with(|| certs[0].clone());
    }
    Ok(subgroups.into_values().collect())
}

/// Springer's identity `chi^lambda(c) = f^lambda(omega^-1)` in the
/// sigma-power form `f^(sigma lambda)(omega^-1) = chi^lambda(c^s)`; for
/// d = 1 every sigma fixes the characters, so this is Theorem 4.2 together
/// with its Galois twists.
pub fn verify_sigma_power(
    cert: &RegularCertificate,
    sigma: &GaloisAut,
    budget: &Budget,
) -> Result<bool> {
    let d = cert.element.d();
    if d != 1 {
        return Err(Error::UnsupportedD { required: 1, got: d });
    }
    if sigma.conductor() % cert.order != 0 {
        return Err(Error::NonDivisibleConductor {
            from: cert.order,
            into: sigma.conductor(),
        });
    }
    let n = cert.element.n();
    let s = sigma.exponent_mod(cert.order);
    let power = cert.element.pow(s as i64);
    let class: Vec<usize> = power
        .char_poly_factors()
        .iter()
        .map(|&(l, _)| l)
        .rev()
        .collect();
    let omega_inv = cert.eigenvalue.inverse()?;
    for lambda in crate::tableaux::partitions_of(n) {
        let shape = crate::tableaux::MultiPartition::from_partition(lambda.clone())?;
        let fd = crate::tableaux::fake_degree(&shape, budget)?;
        let lhs = fd.eval_at_roots(&Cyclotomic::one(1), &omega_inv);
        let chi = crate::characters::mn_character(&lambda, budget)?;
        let rhs = chi.value(&class).unwrap();
        let (lhs, rhs) = Cyclotomic::lift_pair(&lhs, rhs);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elem(d: u32, word: &str) -> WreathElem {
        WreathElem::parse_window(d, word).unwrap()
    }

    #[test]
    fn long_cycle_is_regular_with_standard_witness() {
        for n in 2..=5usize {
            let mut window: Vec<String> = (2..=n).map(|j| j.to_string()).collect();
            window.push("1".into());
            let c = elem(1, &window.join(","));
            let certs = regular_certificates(&c);
            // one certificate per power of a primitive n-th root
            assert_eq!(certs.len(), crate::cyclotomic::phi(n as u64) as usize);
            for cert in &certs {
                assert_eq!(cert.order, n as u64);
                assert!(cert.witness.iter().all(|v| !v.is_zero()));
            }
        }
    }

    #[test]
    fn near_cycle_has_zero_coordinate() {
        // (1 2)(3) in S_3 with eigenvalue -1: witness pattern (x, -x, 0)
        let c = elem(1, "2,1,3");
        let certs = regular_certificates(&c);
        assert_eq!(certs.len(), 1);
        let cert = &certs[0];
        assert_eq!(cert.order, 2);
        assert!(cert.witness[2].is_zero());
        assert_eq!(cert.witness[1], cert.witness[0].neg());
    }

    #[test]
    fn transposition_in_s4_is_not_regular() {
        assert!(!is_regular(&elem(1, "2,1,3,4")));
        // but the double transposition is (a power of a 4-cycle)
        assert!(is_regular(&elem(1, "2,1,4,3")));
    }

    #[test]
    fn type_a_classification_small() {
        // regular elements of S_n are exactly the powers of n-cycles and
        // (n-1)-cycles
        let budget = Budget::default();
        for n in 2..=5usize {
            let mut expected = std::collections::HashSet::new();
            for w in enumerate_group(1, n, &budget).unwrap() {
                let factors = w.char_poly_factors();
                let is_full_cycle = factors == vec![(n, 0)];
                let is_near_cycle = n >= 2 && factors == vec![(1, 0), (n - 1, 0)];
                if is_full_cycle || is_near_cycle {
                    for e in 0..w.order() {
                        expected.insert(w.pow(e as i64));
                    }
                }
            }
            for w in enumerate_group(1, n, &budget).unwrap() {
                assert_eq!(
                    is_regular(&w),
                    expected.contains(&w),
                    "regularity of {w:?} in S_{n}"
                );
            }
        }
    }

    #[test]
    fn cyclic_group_elements_are_all_regular() {
        for d in 2..=4u32 {
            for k in 0..d {
                let w = WreathElem::new(d, vec![0], vec![k]).unwrap();
                let certs = regular_certificates(&w);
                assert_eq!(certs.len(), 1, "Z/{d} element color {k}");
                assert_eq!(certs[0].order, w.order());
            }
        }
    }

    #[test]
    fn reflections_of_b2_are_not_regular_but_rotations_are() {
        // diag(-1, 1) has eigenvectors only on hyperplanes
        assert!(!is_regular(&elem(2, "-1,2")));
        // the 2-cycle with one sign is regular (order 4)
        let certs = regular_certificates(&elem(2, "-2,1"));
        assert!(!certs.is_empty());
        assert!(certs.iter().all(|c| c.order == 4));
    }

    #[test]
    fn springer_order_fact() {
        // every certificate's eigenvalue order equals the element order
        let budget = Budget::default();
        for (d, n) in [(1u32, 4usize), (2, 2), (3, 2)] {
            for w in enumerate_group(d, n, &budget).unwrap() {
                for cert in regular_certificates(&w) {
                    assert_eq!(cert.order, w.order(), "order fact at {w:?}");
                    assert_eq!(cert.eigenvalue.mult_order(), Some(cert.order));
                }
            }
        }
    }

    fn first_cert_of_type(d: u32, word: &str) -> RegularCertificate {
        regular_certificates(&elem(d, word)).remove(0)
    }

    #[test]
    fn bicsp_s3_conjugation_smoke() {
        let budget = Budget::default();
        let cert = first_cert_of_type(1, "2,3,1");
        let inst = BicspInstance::for_group(
            1,
            3,
            cert.clone(),
            cert,
            GaloisAut::identity(6),
            &budget,
        )
        .unwrap();
        let report = check_bicsp(&inst).unwrap();
        assert!(report.pass_i, "condition (i)");
        assert!(report.pass_ii, "condition (ii)");

        // the twisted action with c = c' and i = j acts by conjugation
        let w = elem(1, "2,1,3");
        let conj = inst.twisted_action(1, 1, &w);
        assert_eq!(conj, inst.c.element.mul(&w).unwrap().mul(&inst.c.element.inverse()).unwrap());

        // orbit structure: evens and odds, sizes 3 + 3
        let mut sizes: Vec<usize> = report.orbits.iter().map(|o| o.members.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![3, 3]);

        // i = j = 1 diagonal: evaluation 3 = |Cent(c)| fixed points
        assert_eq!(report.fixed_points[1][1], 3);
        let three = Cyclotomic::from_rational_in(
            3,
            num_rational::BigRational::from(num_bigint::BigInt::from(3)),
        );
        assert_eq!(report.evaluations[1][1], three);
    }

    #[test]
    fn bicsp_mixed_orders_vanish() {
        // c a 3-cycle, c' a transposition-type regular element of S_3:
        // nontrivial nonconjugate powers force evaluation 0 = fixed points
        let budget = Budget::default();
        let c3 = first_cert_of_type(1, "2,3,1");
        let c2 = first_cert_of_type(1, "2,1,3");
        let inst =
            BicspInstance::for_group(1, 3, c3, c2, GaloisAut::identity(6), &budget).unwrap();
        let report = check_bicsp(&inst).unwrap();
        assert!(report.pass());
        assert_eq!(report.fixed_points[1][1], 0);
        assert!(report.evaluations[1][1].is_zero());
    }

    #[test]
    fn bicsp_cyclic_group_identity_twist() {
        let budget = Budget::default();
        let cert = first_cert_of_type(3, "1:1");
        let inst = BicspInstance::for_group(
            3,
            1,
            cert.clone(),
            cert,
            GaloisAut::identity(3),
            &budget,
        )
        .unwrap();
        let report = check_bicsp(&inst).unwrap();
        assert!(report.pass());
        // single orbit of size 3; a-table matches Example 2.6
        assert_eq!(report.orbits.len(), 1);
        assert_eq!(report.orbits[0].members.len(), 3);
        assert_eq!(report.a[0][0], 1);
        assert_eq!(report.a[2][1], 1);
        assert_eq!(report.a[1][2], 1);
    }

    #[test]
    fn twisted_action_example_from_cyclic_group() {
        // d=3, n=1, c = c' = color-1, sigma with s=2, i=j=1 on the identity:
        // c^s * e * c'^-1 has color s - 1 = 1.
        let budget = Budget::default();
        let cert = first_cert_of_type(3, "1:1");
        let sigma = GaloisAut::new(3, 2).unwrap();
        let inst =
            BicspInstance::for_group(3, 1, cert.clone(), cert, sigma, &budget).unwrap();
        let moved = inst.twisted_action(1, 1, &WreathElem::identity(3, 1));
        assert_eq!(moved, elem(3, "1:1"));
        // i = j = 0 acts trivially
        let w = elem(3, "2:1");
        assert_eq!(inst.twisted_action(0, 0, &w), w);
    }

    #[test]
    fn trivial_subgroups_give_singleton_orbits() {
        let budget = Budget::default();
        let id_cert = regular_certificates(&WreathElem::identity(1, 3)).remove(0);
        assert_eq!(id_cert.order, 1);
        let inst = BicspInstance::for_group(
            1,
            3,
            id_cert.clone(),
            id_cert,
            GaloisAut::identity(6),
            &budget,
        )
        .unwrap();
        let orbits = orbits_and_stabilizers(&inst);
        assert_eq!(orbits.len(), 6);
        assert!(orbits.iter().all(|o| o.members.len() == 1));
        let report = check_bicsp(&inst).unwrap();
        assert!(report.pass());
    }

    #[test]
    fn sigma_power_identity_for_regular_elements() {
        let budget = Budget::default();
        // 3-cycle in S_3, lambda = (2,1): f^lambda(omega^-1) = -1
        let cert = first_cert_of_type(1, "2,3,1");
        assert!(verify_sigma_power(&cert, &GaloisAut::identity(6), &budget).unwrap());

        // 4-cycle in S_4 (includes the anchored sign check for (1^4))
        let cert = first_cert_of_type(1, "2,3,4,1");
        assert!(verify_sigma_power(&cert, &GaloisAut::identity(12), &budget).unwrap());

        let d_bad = first_cert_of_type(2, "-2,1");
        assert!(matches!(
            verify_sigma_power(&d_bad, &GaloisAut::identity(4), &budget),
            Err(Error::UnsupportedD { .. })
        ));
    }

    #[test]
    fn subgroup_generator_reduction() {
        // diagonal of Z/3 x Z/3
        let all: Vec<(u64, u64)> = vec![(0, 0), (1, 1), (2, 2)];
        let gens = subgroup_generators(&all, 3, 3);
        // the generated subgroup is recovered
        let mut regenerated = std::collections::HashSet::new();
        regenerated.insert((0u64, 0u64));
        loop {
            let mut grew = false;
            let current: Vec<(u64, u64)> = regenerated.iter().copied().collect();
            for &(a, b) in &current {
                for &(ga, gb) in &gens {
                    if regenerated.insert(((a + ga) % 3, (b + gb) % 3)) {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let mut expected: Vec<(u64, u64)> = all.clone();
        expected.sort_unstable();
        let mut got: Vec<(u64, u64)> = regenerated.into_iter().collect();
        got.sort_unstable();
        assert_eq!(got, expected);
    }

    #[test]
    fn regular_subgroup_counts_for_s4() {
        let budget = Budget::default();
        let subs = regular_cyclic_subgroups(1, 4, &budget).unwrap();
        // trivial, <(ab)(cd)> x3, <3-cycle> x4, <4-cycle> x3
        assert_eq!(subs.len(), 11);
    }
}
