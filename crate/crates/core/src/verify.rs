//! Named verification suites over the identities the library computes.
//! Shared by the CLI `verify` subcommand and the acceptance tests.

use num_integer::Integer;

use crate::characters::{induced_cyclic_character, intertwining};
use crate::cyclotomic::{phi, Cyclotomic, GaloisAut};
use crate::distributions::{
    bimahonian_fake, bimahonian_fmaj, bimahonian_molien, cyclic_closed_form, genfun_check,
    gordon_evaluate, gordon_specialize, mahonian, type_a_distribution, wright_recurrence,
};
use crate::error::{Budget, Result};
use crate::poly::BiPoly;
use crate::sieving::{
    check_bicsp, regular_certificates, regular_cyclic_subgroups, verify_sigma_power,
    BicspInstance,
};
use crate::wreath::{degrees, enumerate_group};

/// Outcome of one named check inside a suite.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

/// A suite's worth of checks.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    fn new(suite: impl Into<String>) -> Self {
        SuiteReport {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "suite": self.suite,
            "pass": self.pass(),
            "checks": self
                .checks
                .iter()
                .map(|c| serde_json::json!({ "name": c.name, "pass": c.pass, "detail": c.detail }))
                .collect::<Vec<_>>(),
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "  [{}] {}{}\n",
                if c.pass { "pass" } else { "FAIL" },
                c.name,
                if c.detail.is_empty() {
                    String::new()
                } else {
                    format!(" ({})", c.detail)
                }
            ));
        }
        out.push_str(&format!(
            "suite {}: {}\n",
            self.suite,
            if self.pass() { "pass" } else { "FAIL" }
        ));
        out
    }
}

fn units(m: u64) -> Vec<u64> {
    (1..=m).filter(|s| s.gcd(&m) == 1).collect()
}

/// All primitive roots of each multiplicative order up to `max_order`.
fn roots_of_order_up_to(max_order: u64) -> Vec<(u64, Cyclotomic)> {
    let mut out = Vec::new();
    for ord in 1..=max_order {
        for a in units(ord) {
            out.push((ord, Cyclotomic::root_of_unity(ord, a as i64)));
        }
    }
    out
}

/// The (d, n, s) grid of the cross-method criterion.
fn cross_method_grid() -> Vec<(u32, usize, u64)> {
    let mut grid = Vec::new();
    for n in 0..=6 {
        grid.push((1, n, 1));
    }
    for n in 0..=4 {
        for s in units(2) {
            grid.push((2, n, s));
        }
    }
    for n in 0..=3 {
        for s in units(3) {
            grid.push((3, n, s));
        }
    }
    for n in 0..=2 {
        for s in units(4) {
            grid.push((4, n, s));
        }
    }
    grid
}

/// Criterion 1: the fake-degree, fmaj, and Molien methods agree (and the
/// recurrence too, for d = 1 with the identity twist).
pub fn cross_method(budget: &Budget) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("crossmethod");
    for (d, n, s) in cross_method_grid() {
        let sigma = GaloisAut::new(d as u64, s as i64)?;
        let fake = bimahonian_fake(d, n, &sigma, budget)?;
        let fmaj = bimahonian_fmaj(d, n, &sigma, budget)?;
        let molien = bimahonian_molien(d, n, &sigma, budget)?;
        let mut pass = fake == fmaj && fake == molien;
        let mut detail = String::from("fake = fmaj = molien");
        if d == 1 && s == 1 {
            let wright = wright_recurrence(n)?;
            pass &= wright == fake;
            detail.push_str(" = wright");
        }
        report.checks.push(CheckResult::new(
            format!("W^s(t,q) methods agree: d={d} n={n} s={s}"),
            pass,
            detail,
        ));
    }
    Ok(report)
}

/// Criterion 2: the recurrence reproduces the fake-degree distribution and
/// every intermediate division is exact.
pub fn wright(n_max: usize, budget: &Budget) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("wright");
    for n in 0..=n_max {
        let rec = wright_recurrence(n)?;
        let fake = type_a_distribution(n, budget)?;
        report.checks.push(CheckResult::new(
            format!("recurrence matches fake degrees: n={n}"),
            rec == fake,
            "all divisions exact",
        ));
    }
    Ok(report)
}

/// Criterion 3: the root-of-unity factorization of `S_n(omega, q)` for all
/// primitive l-th roots with `l <= n <= n_max`.
pub fn gordon_lemma(n_max: usize, budget: &Budget) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("gordon-lemma");
    for n in 1..=n_max {
        let mut pass = true;
        let mut count = 0;
        for l in 1..=n as u64 {
            for a in units(l) {
                let omega = Cyclotomic::root_of_unity(l, a as i64);
                match gordon_specialize(n, l, &omega, budget) {
                    Ok(_) => count += 1,
                    Err(_) => pass = false,
                }
            }
        }
        report.checks.push(CheckResult::new(
            format!("factorization at roots of unity: n={n}"),
            pass,
            format!("{count} primitive roots"),
        ));
    }
    Ok(report)
}

/// Criterion 4: the closed-form evaluations `S_n(omega, omega')`.
pub fn gordon_corollary(n_max: usize, budget: &Budget) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("gordon-corollary");
    for n in 2..=n_max {
        let sn = type_a_distribution(n, budget)?;
        let roots = roots_of_order_up_to(n as u64);
        let mut pass = true;
        let mut cells = 0;
        for (ord_a, omega) in &roots {
            for (ord_b, omega_prime) in &roots {
                cells += 1;
                let value = sn.eval_at_roots(omega, omega_prime);
                if ord_a != ord_b {
                    // unequal orders, both at most n: the value vanishes
                    if !value.is_zero() {
                        pass = false;
                    }
                } else {
                    let l = *ord_a as usize;
                    let (m, r) = (n / l, n % l);
                    let mut expected = type_a_distribution(r, budget)?
                        .eval_at_roots(omega, omega_prime);
                    let mut scale = 1i64;
                    for f in 1..=m as i64 {
                        scale *= f * l as i64;
                    }
                    // l^m m! = prod_{f=1..m} (f l)
                    expected = expected.scale(&num_rational::BigRational::from(
                        num_bigint::BigInt::from(scale),
                    ));
                    let (value, expected) = Cyclotomic::lift_pair(&value, &expected);
                    if value != expected {
                        pass = false;
                    }
                }
            }
        }
        report.checks.push(CheckResult::new(
            format!("evaluations at root pairs: n={n}"),
            pass,
            format!("{cells} pairs"),
        ));
    }
    // paper-anchored values
    let z3 = Cyclotomic::root_of_unity(3, 1);
    let v = gordon_evaluate(3, &z3, &z3, budget)?;
    let (v, three) = Cyclotomic::lift_pair(&v, &Cyclotomic::from_integer(3));
    report
        .checks
        .push(CheckResult::new("S_3(z3, z3) = 3", v == three, ""));
    let minus_one = Cyclotomic::root_of_unity(2, 1);
    let v = gordon_evaluate(4, &minus_one, &minus_one, budget)?;
    let (v, eight) = Cyclotomic::lift_pair(&v, &Cyclotomic::from_integer(8));
    report
        .checks
        .push(CheckResult::new("S_4(-1, -1) = 8", v == eight, ""));
    Ok(report)
}

/// Least common multiple of the element orders of `G(d,1,n)` (the paper's
/// conductor for Galois automorphisms).
pub fn element_order_lcm(d: u32, n: usize, budget: &Budget) -> Result<u64> {
    let mut m = 1u64;
    for w in enumerate_group(d, n, budget)? {
        m = m.lcm(&w.order());
    }
    Ok(m)
}

/// Run the bicyclic sieving check over every ordered pair of regular cyclic
/// subgroups of `G(d,1,n)`, for each given Galois twist.  Returns one
/// aggregated check per twist.
pub fn bicsp_group(
    d: u32,
    n: usize,
    sigmas: &[GaloisAut],
    budget: &Budget,
) -> Result<Vec<CheckResult>> {
    let subgroups = regular_cyclic_subgroups(d, n, budget)?;
    let mut results = Vec::new();
    for sigma in sigmas {
        // The polynomial depends only on s mod d; cache it per twist.
        let poly = bimahonian_fake(d, n, sigma, budget)?;
        let mut pass = true;
        let mut pairs = 0;
        let mut agree = true;
        for c in &subgroups {
            for c_prime in &subgroups {
                let inst = BicspInstance {
                    elements: enumerate_group(d, n, budget)?.collect(),
                    c: c.clone(),
                    c_prime: c_prime.clone(),
                    sigma: sigma.clone(),
                    s: sigma.exponent_mod(c.order),
                    poly: poly.clone(),
                };
                budget.check_group_order(
                    "orbit scan",
                    inst.elements.len() as u128 * c.order as u128 * c_prime.order as u128,
                )?;
                let report = check_bicsp(&inst)?;
                pairs += 1;
                if !report.pass() {
                    pass = false;
                }
                if report.pass_i != report.pass_ii {
                    agree = false;
                }
            }
        }
        results.push(CheckResult::new(
            format!(
                "biCSP G({d},1,{n}) s={} ({} subgroups, {pairs} ordered pairs)",
                sigma.exponent(),
                subgroups.len()
            ),
            pass && agree,
            "conditions (i) and (ii)",
        ));
    }
    Ok(results)
}

/// Criterion 5: the biCSP over all regular pairs, for the symmetric groups
/// with the identity twist and the wreath groups with every twist.
pub fn bicsp(budget: &Budget) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("bicsp");
    for n in 1..=5 {
        let m = element_order_lcm(1, n, budget)?;
        let sigmas = vec![GaloisAut::identity(m)];
        report.checks.extend(bicsp_group(1, n, &sigmas, budget)?);
    }
    for d in 1..=3u32 {
        for n in 1..=3usize {
            let m = element_order_lcm(d, n, budget)?;
            let sigmas: Vec<GaloisAut> = units(m)
                .into_iter()
                .map(|s| GaloisAut::new(m, s as i64).unwrap())
                .collect();
            report.checks.extend(bicsp_group(d, n, &sigmas, budget)?);
        }
    }
    Ok(report)
}

/// Criterion 6: Springer's identity and its sigma-power form for every
/// regular certificate of `S_n`, `n <= n_max`.
pub fn springer(n_max: usize, budget: &Budget) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("springer");
    for n in 1..=n_max {
        let mut pass = true;
        let mut certs = 0;
        for w in enumerate_group(1, n, budget)? {
            for cert in regular_certificates(&w) {
                certs += 1;
                for s in units(cert.order) {
                    let sigma = GaloisAut::new(cert.order, s as i64)?;
                    if !verify_sigma_power(&cert, &sigma, budget)? {
                        pass = false;
                    }
                }
            }
        }
        report.checks.push(CheckResult::new(
            format!("chi^lambda(c^s) = f^lambda(omega^-1): n={n}"),
            pass,
            format!("{certs} certificates, all shapes"),
        ));
    }
    Ok(report)
}

/// Criterion 7: reduced coefficients of `S_n(t,q)` mod `(t^n-1, q^n-1)` are
/// the intertwining numbers of induced cyclic characters.
pub fn bss(n_max: usize, budget: &Budget) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("bss");
    for n in 2..=n_max {
        let reduced = type_a_distribution(n, budget)?.reduce_mod_cyclic(n as u32, n as u32);
        let induced: Vec<_> = (0..n as u32)
            .map(|i| induced_cyclic_character(n, i, budget))
            .collect::<Result<_>>()?;
        let mut pass = true;
        for i in 0..n {
            for j in 0..n {
                let a = reduced.coefficient(i as u32, j as u32);
                let ip = intertwining(&induced[i], &induced[j])?;
                let expected = ip.to_rational();
                let got = a.to_rational();
                if expected.is_none() || got != expected {
                    pass = false;
                }
            }
        }
        report.checks.push(CheckResult::new(
            format!("a(i,j) = <Ind rho^i, Ind rho^j>: n={n}"),
            pass,
            format!("{n}x{n} table"),
        ));
    }
    Ok(report)
}

/// Criterion 8: the bipartite generating function, truncated, plus the
/// multiset oracle for its u-coefficients.
pub fn genfun(u_order: u32, degree: u32, budget: &Budget) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("genfun");
    let pass = genfun_check(u_order, degree, budget)?;
    report.checks.push(CheckResult::new(
        format!("product formula to u^{u_order}, (t,q)-degree {degree}"),
        pass,
        "series equality and multiset oracle",
    ));
    Ok(report)
}

/// Structural symmetries: `W^s(q,t) = W^(s^-1)(t,q)`, the specializations
/// at `t = 1` and `q = 1`, and the reality of antidiagonal evaluations.
pub fn symmetry(budget: &Budget) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("symmetry");
    for (d, n, s) in cross_method_grid() {
        let sigma = GaloisAut::new(d as u64, s as i64)?;
        let sigma_inv = sigma.inverse();
        let w_sigma = bimahonian_fake(d, n, &sigma, budget)?;
        let w_inv = bimahonian_fake(d, n, &sigma_inv, budget)?;
        let swapped = w_sigma.swap_vars() == w_inv;

        let w_q = mahonian(d, n);
        let fmaj_dist = {
            let mut p = BiPoly::zero();
            for w in enumerate_group(d, n, budget)? {
                p.add_term(0, w.fmaj() as u32, crate::poly::Coeff::one());
            }
            p
        };
        let specializes =
            w_sigma.eval_t_one() == w_q && w_sigma.eval_q_one().swap_vars() == w_q && fmaj_dist == w_q;

        report.checks.push(CheckResult::new(
            format!("t-q symmetry and specializations: d={d} n={n} s={s}"),
            swapped && specializes,
            "W^s(q,t) = W^(1/s)(t,q); W^s(1,q) = W^s(q,1) = W(q) = sum q^fmaj",
        ));
    }
    // antidiagonal reality: S_n(omega, omega^-1) is real
    for n in 1..=6usize {
        let sn = type_a_distribution(n, budget)?;
        let mut pass = true;
        for (_, omega) in roots_of_order_up_to(n as u64) {
            let value = sn.eval_at_roots(&omega, &omega.inverse()?);
            if !value.is_fixed_by_conjugation() {
                pass = false;
            }
        }
        report.checks.push(CheckResult::new(
            format!("S_n(w, 1/w) is real: n={n}"),
            pass,
            "all roots of order <= n",
        ));
    }
    Ok(report)
}

/// Palindromicity of the conjugation bimahonian at `N*`.
pub fn palindrome(budget: &Budget) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("palindrome");
    for d in 1..=3u32 {
        for n in 0..=3usize {
            let sigma = GaloisAut::conjugation(d as u64);
            let w_bar = bimahonian_fake(d, n, &sigma, budget)?;
            let (_, nstar) = degrees(d, n);
            report.checks.push(CheckResult::new(
                format!("conjugation distribution is palindromic: d={d} n={n}"),
                w_bar.is_palindromic(nstar),
                format!("N* = {nstar}"),
            ));
        }
    }
    Ok(report)
}

/// The cyclic closed forms of Example type (n = 1): all three methods equal
/// the monomial sum over `a + s b = 0 mod d`.
pub fn cyclic(d_max: u32, budget: &Budget) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("cyclic");
    for d in 1..=d_max {
        let mut pass = true;
        for s in units(d as u64) {
            let sigma = GaloisAut::new(d as u64, s as i64)?;
            let closed = cyclic_closed_form(d, &sigma)?;
            pass &= bimahonian_fake(d, 1, &sigma, budget)? == closed;
            pass &= bimahonian_fmaj(d, 1, &sigma, budget)? == closed;
            pass &= bimahonian_molien(d, 1, &sigma, budget)? == closed;
        }
        report.checks.push(CheckResult::new(
            format!("closed form for the cyclic group: d={d}"),
            pass,
            format!("{} twists, three methods", phi(d as u64)),
        ));
    }
    Ok(report)
}

/// Criterion 10: in `S_n` the regular elements are exactly the powers of
/// n-cycles and (n-1)-cycles.
pub fn regular_classification(n_max: usize, budget: &Budget) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("regular");
    for n in 2..=n_max {
        let mut expected = std::collections::HashSet::new();
        for w in enumerate_group(1, n, budget)? {
            let factors = w.char_poly_factors();
            let full = factors == vec![(n, 0)];
            let near = factors == vec![(1, 0), (n - 1, 0)];
            if full || near {
                for e in 0..w.order() {
                    expected.insert(w.pow(e as i64));
                }
            }
        }
        let mut pass = true;
        let mut regular_count = 0;
        for w in enumerate_group(1, n, budget)? {
            let got = !regular_certificates(&w).is_empty();
            if got {
                regular_count += 1;
            }
            if got != expected.contains(&w) {
                pass = false;
            }
        }
        report.checks.push(CheckResult::new(
            format!("regular elements of S_{n} are cycle powers"),
            pass,
            format!("{regular_count} regular elements"),
        ));
    }
    Ok(report)
}

/// Every suite at its acceptance scope.
pub fn all(budget: &Budget) -> Result<Vec<SuiteReport>> {
    Ok(vec![
        cross_method(budget)?,
        wright(6, budget)?,
        gordon_lemma(8, budget)?,
        gordon_corollary(6, budget)?,
        bicsp(budget)?,
        springer(5, budget)?,
        bss(5, budget)?,
        genfun(5, 6, budget)?,
        symmetry(budget)?,
        palindrome(budget)?,
        cyclic(12, budget)?,
        regular_classification(6, budget)?,
    ])
}
