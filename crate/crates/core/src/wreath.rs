//! Elements and word statistics of the wreath products
//! `G(d,1,n) = Z/d wr S_n`.
//!
//! An element is stored in window notation: a permutation of `{1..n}`
//! together with a color in `0..d` per position, where `w` sends `e_i` to
//! `zeta_d^(k_i) e_(perm(i))`.  The window word is `w_1 ... w_n` with letter
//! `w_i = omega^(k_i) j` for `j = perm(i)`.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::cyclotomic::{Cyclotomic, GaloisAut};
use crate::error::{Budget, Error, Result};
use crate::poly::{BiPoly, Coeff, Var};

/// An element of `G(d,1,n)` in window notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathElem {
    d: u32,
    /// 0-based images: position `i` maps to `perm[i]`.
    perm: Vec<usize>,
    /// Color attached to position `i`.
    colors: Vec<u32>,
}

/// Word statistics of a window word under the colored-alphabet order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordStatistics {
    /// Descent positions `i` (1-based, `1 <= i < n`).
    pub des_set: Vec<usize>,
    /// Number of order-inverted pairs (meaningful for d = 1).
    pub inv: u64,
    pub maj: u64,
    pub fmaj: u64,
    /// `r[k]` counts letters in the k-th subalphabet.
    pub r: Vec<u64>,
}

impl WreathElem {
    pub fn new(d: u32, perm: Vec<usize>, colors: Vec<u32>) -> Result<Self> {
        if d < 1 {
            return Err(Error::InvalidArgument("d must be >= 1".into()));
        }
        let n = perm.len();
        if colors.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "perm has {n} entries, colors {}",
                colors.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidArgument("perm is not a bijection".into()));
            }
            seen[p] = true;
        }
        if colors.iter().any(|&k| k >= d) {
            return Err(Error::InvalidArgument("color out of range".into()));
        }
        Ok(WreathElem { d, perm, colors })
    }

    pub fn identity(d: u32, n: usize) -> Self {
        WreathElem {
            d,
            perm: (0..n).collect(),
            colors: vec![0; n],
        }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
            && self.colors.iter().all(|&k| k == 0)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.d != other.d || self.n() != other.n() {
            return Err(Error::DimensionMismatch(format!(
                "G({},1,{}) vs G({},1,{})",
                self.d,
                self.n(),
                other.d,
                other.n()
            )));
        }
        Ok(())
    }

    /// Group product: `(x * y)(v) = x(y(v))` on column vectors.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.n();
        let mut perm = vec![0; n];
        let mut colors = vec![0; n];
        for i in 0..n {
            let mid = other.perm[i];
            perm[i] = self.perm[mid];
            colors[i] = (other.colors[i] + self.colors[mid]) % self.d;
        }
        Ok(WreathElem {
            d: self.d,
            perm,
            colors,
        })
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut perm = vec![0; n];
        let mut colors = vec![0; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            colors[self.perm[i]] = (self.d - self.colors[i]) % self.d;
        }
        WreathElem {
            d: self.d,
            perm,
            colors,
        }
    }

    /// `y^-1 * self * y`.
    pub fn conjugate_by(&self, y: &Self) -> Result<Self> {
        y.inverse().mul(self)?.mul(y)
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = WreathElem::identity(self.d, self.n());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq).unwrap();
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq).unwrap();
            }
        }
        acc
    }

    /// Multiplicative order, from the colored cycle decomposition: a cycle
    /// of length `l` and color sum `k` has order `l * d / gcd(d, k)`.
    pub fn order(&self) -> u64 {
        let mut ord = 1u64;
        for (l, k) in self.char_poly_factors() {
            let zeta_order = self.d as u64 / (self.d as u64).gcd(&(k as u64));
            ord = ord.lcm(&(l as u64 * zeta_order));
        }
        ord
    }

    /// Apply a Galois automorphism entrywise: colors `k -> s k mod d`.
    pub fn galois(&self, aut: &GaloisAut) -> Result<Self> {
        if aut.conductor() % self.d as u64 != 0 {
            return Err(Error::NonDivisibleConductor {
                from: self.d as u64,
                into: aut.conductor(),
            });
        }
        let s = aut.exponent_mod(self.d as u64) as u32;
        Ok(WreathElem {
            d: self.d,
            perm: self.perm.clone(),
            colors: self
                .colors
                .iter()
                .map(|&k| ((k as u64 * s as u64) % self.d as u64) as u32)
                .collect(),
        })
    }

    /// Color negation `w-bar` (entrywise complex conjugation of the matrix).
    pub fn color_negate(&self) -> Self {
        WreathElem {
            d: self.d,
            perm: self.perm.clone(),
            colors: self.colors.iter().map(|&k| (self.d - k) % self.d).collect(),
        }
    }

    /// Rank of the letter `omega^k j` (`j` 1-based) in the order
    /// `omega^(d-1) 1 < ... < omega^(d-1) n < ... < omega^0 1 < ... < omega^0 n`.
    fn letter_rank(&self, pos: usize) -> u64 {
        let n = self.n() as u64;
        let k = self.colors[pos] as u64;
        let j = self.perm[pos] as u64; // 0-based value
        (self.d as u64 - 1 - k) * n + j
    }

    /// Descents, inversions, maj, fmaj and the subalphabet counts of the
    /// window word.
    pub fn word_statistics(&self) -> WordStatistics {
        let n = self.n();
        let ranks: Vec<u64> = (0..n).map(|i| self.letter_rank(i)).collect();
        let mut des_set = Vec::new();
        let mut maj = 0u64;
        for i in 0..n.saturating_sub(1) {
            if ranks[i + 1] < ranks[i] {
                des_set.push(i + 1);
                maj += (i + 1) as u64;
            }
        }
        let mut inv = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                if ranks[i] > ranks[j] {
                    inv += 1;
                }
            }
        }
        let mut r = vec![0u64; self.d as usize];
        for &k in &self.colors {
            r[k as usize] += 1;
        }
        let fmaj =
            self.d as u64 * maj + r.iter().enumerate().map(|(k, &c)| k as u64 * c).sum::<u64>();
        WordStatistics {
            des_set,
            inv,
            maj,
            fmaj,
            r,
        }
    }

    pub fn fmaj(&self) -> u64 {
        self.word_statistics().fmaj
    }

    /// One `(length, color sum mod d)` pair per cycle of the underlying
    /// permutation; `det(1 - t w) = prod_c (1 - zeta^(k_c) t^(l_c))`.
    pub fn char_poly_factors(&self) -> Vec<(usize, u32)> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut factors = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut colorsum = 0u64;
            let mut i = start;
            loop {
                seen[i] = true;
                len += 1;
                colorsum += self.colors[i] as u64;
                i = self.perm[i];
                if i == start {
                    break;
                }
            }
            factors.push((len, (colorsum % self.d as u64) as u32));
        }
        factors.sort_unstable();
        factors
    }

    pub fn colored_cycle_type(&self) -> ColoredCycleType {
        ColoredCycleType(self.char_poly_factors())
    }

    /// `det(1 - v w)` as a polynomial in the chosen variable with
    /// coefficients in `Q(zeta_d)`.
    pub fn char_poly(&self, var: Var) -> BiPoly {
        let mut p = BiPoly::one();
        for (l, k) in self.char_poly_factors() {
            let mut factor = BiPoly::one();
            let zeta = Cyclotomic::root_of_unity(self.d as u64, k as i64);
            let (i, j) = match var {
                Var::T => (l as u32, 0),
                Var::Q => (0, l as u32),
            };
            factor.add_term(i, j, Coeff::Cyclo(zeta.neg()));
            p = p.mul(&factor);
        }
        p
    }

    /// Apply the monomial matrix to a coordinate vector over `Q(zeta_m)`
    /// (the conductor must be divisible by `d`):
    /// `(w v)_(perm(i)) = zeta^(k_i) v_i`.
    pub fn apply_to_vector(&self, v: &[Cyclotomic]) -> Result<Vec<Cyclotomic>> {
        if v.len() != self.n() {
            return Err(Error::DimensionMismatch("vector length".into()));
        }
        let m = v.first().map(|c| c.conductor()).unwrap_or(1);
        if m % self.d as u64 != 0 {
            return Err(Error::NonDivisibleConductor {
                from: self.d as u64,
                into: m,
            });
        }
        let mut out = vec![Cyclotomic::zero(m); v.len()];
        for i in 0..v.len() {
            let zeta = Cyclotomic::root_of_unity(self.d as u64, self.colors[i] as i64)
                .embed(m)
                .unwrap();
            out[self.perm[i]] = zeta.mul(&v[i])?;
        }
        Ok(out)
    }

    /// Parse a window word: comma-separated letters `k:j` meaning
    /// `omega^k j`; for `d <= 2` the signed shorthand `j` / `-j` is also
    /// accepted.
    pub fn parse_window(d: u32, word: &str) -> Result<Self> {
        let mut perm = Vec::new();
        let mut colors = Vec::new();
        for raw in word.split(',') {
            let tok = raw.trim();
            if tok.is_empty() {
                return Err(Error::InvalidWord(format!("empty letter in {word:?}")));
            }
            let (k, j) = if let Some((ks, js)) = tok.split_once(':') {
                let k: u32 = ks
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidWord(format!("bad color in {tok:?}")))?;
                let j: usize = js
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidWord(format!("bad value in {tok:?}")))?;
                (k, j)
            } else {
                let v: i64 = tok
                    .parse()
                    .map_err(|_| Error::InvalidWord(format!("bad letter {tok:?}")))?;
                if v < 0 && d > 2 {
                    return Err(Error::InvalidWord("signed shorthand needs d <= 2".into()));
                }
                if v == 0 {
                    return Err(Error::InvalidWord("letter value must be nonzero".into()));
                }
                (u32::from(v < 0), v.unsigned_abs() as usize)
            };
            if k >= d {
                return Err(Error::InvalidWord(format!(
                    "color {k} out of range for d={d}"
                )));
            }
            if j < 1 {
                return Err(Error::InvalidWord("values are 1-based".into()));
            }
            perm.push(j - 1);
            colors.push(k);
        }
        let n = perm.len();
        if perm.iter().any(|&p| p >= n) {
            return Err(Error::InvalidWord("letter value out of range".into()));
        }
        WreathElem::new(d, perm, colors)
    }

    /// Render in the window-word text format (`k:j` letters, signed
    /// shorthand for `d <= 2`).
    pub fn window_string(&self) -> String {
        (0..self.n())
            .map(|i| {
                let j = self.perm[i] + 1;
                let k = self.colors[i];
                if self.d <= 2 {
                    if k == 0 {
                        format!("{j}")
                    } else {
                        format!("-{j}")
                    }
                } else {
                    format!("{k}:{j}")
                }
            })
            .join(",")
    }
}

impl fmt::Debug for WreathElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.window_string())
    }
}

/// Conjugacy-class datum of `G(d,1,n)`: the multiset of
/// `(cycle length, color sum mod d)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredCycleType(pub Vec<(usize, u32)>);

impl ColoredCycleType {
    pub fn n(&self) -> usize {
        self.0.iter().map(|&(l, _)| l).sum()
    }

    /// Centralizer order: over blocks of equal `(length l, color k)` with
    /// multiplicity `m`, multiply `(l d)^m * m!`.
    pub fn centralizer_order(&self, d: u32) -> BigUint {
        let mut counts: BTreeMap<(usize, u32), u64> = BTreeMap::new();
        for &pair in &self.0 {
            *counts.entry(pair).or_insert(0) += 1;
        }
        let mut z = BigUint::one();
        for (&(l, _), &m) in &counts {
            let base = BigUint::from(l as u64 * d as u64);
            z *= base.pow(m as u32);
            for i in 1..=m {
                z *= BigUint::from(i);
            }
        }
        z
    }
}

/// `|G(d,1,n)| = d^n * n!`.
pub fn group_order(d: u32, n: usize) -> u128 {
    let mut order: u128 = 1;
    for i in 1..=n as u128 {
        order = order.saturating_mul(i).saturating_mul(d as u128);
    }
    order
}

pub fn group_order_big(d: u32, n: usize) -> BigUint {
    let mut order = BigUint::one();
    for i in 1..=n as u64 {
        order *= BigUint::from(i * d as u64);
    }
    order
}

/// Enumerate all of `G(d,1,n)` in a deterministic order (permutations in
/// lexicographic order, colors as little-endian base-d counters).
pub fn enumerate_group(
    d: u32,
    n: usize,
    budget: &Budget,
) -> Result<impl Iterator<Item = WreathElem>> {
    budget.check_group_order("group enumeration", group_order(d, n))?;
    let perms: Vec<Vec<usize>> = if n == 0 {
        vec![Vec::new()]
    } else {
        (0..n).permutations(n).collect()
    };
    let d_usize = d as usize;
    let color_count = d_usize.pow(n as u32);
    Ok(perms.into_iter().flat_map(move |perm| {
        (0..color_count).map(move |mut code| {
            let mut colors = vec![0u32; perm.len()];
            for slot in colors.iter_mut() {
                *slot = (code % d_usize) as u32;
                code /= d_usize;
            }
            WreathElem {
                d,
                perm: perm.clone(),
                colors,
            }
        })
    }))
}

/// Fundamental degrees of `G(d,1,n)` together with `N* = sum (d_i - 1)`,
/// the number of reflections.  For `d = 1` the group is `S_n` acting on all
/// of `C^n` with degrees `1..n`.
pub fn degrees(d: u32, n: usize) -> (Vec<u64>, u32) {
    let list: Vec<u64> = if d == 1 {
        (1..=n as u64).collect()
    } else {
        (1..=n as u64).map(|i| i * d as u64).collect()
    };
    let nstar = list.iter().map(|&x| x - 1).sum::<u64>() as u32;
    (list, nstar)
}

/// All reflections: elements whose fixed space has codimension 1, i.e.
/// exactly one eigenvalue different from 1.
pub fn reflections(d: u32, n: usize, budget: &Budget) -> Result<Vec<WreathElem>> {
    let mut out = Vec::new();
    for w in enumerate_group(d, n, budget)? {
        let nontrivial: usize = w
            .char_poly_factors()
            .iter()
            .map(|&(l, k)| l - usize::from(k == 0))
            .sum();
        if nontrivial == 1 {
            out.push(w);
        }
    }
    Ok(out)
}

/// All colored cycle types of `G(d,1,n)` with their class sizes.
pub fn class_types(d: u32, n: usize) -> Vec<(ColoredCycleType, BigUint)> {
    fn partitions_rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            cur.push(part);
            partitions_rec(n - part, part, cur, out);
            cur.pop();
        }
    }
    let mut parts = Vec::new();
    partitions_rec(n, n.max(1), &mut Vec::new(), &mut parts);

    fn color_multisets(d: u32, m: usize) -> Vec<Vec<u32>> {
        fn rec(d: u32, m: usize, min: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if m == 0 {
                out.push(cur.clone());
                return;
            }
            for k in min..d {
                cur.push(k);
                rec(d, m - 1, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(d, m, 0, &mut Vec::new(), &mut out);
        out
    }

    let order = group_order_big(d, n);
    let mut out = Vec::new();
    for lambda in parts {
        let mut blocks: BTreeMap<usize, usize> = BTreeMap::new();
        for l in lambda {
            *blocks.entry(l).or_insert(0) += 1;
        }
        let mut assignments: Vec<Vec<(usize, u32)>> = vec![Vec::new()];
        for (&l, &m) in &blocks {
            let mut next = Vec::new();
            for base in &assignments {
                for colors in color_multisets(d, m) {
                    let mut a = base.clone();
                    for &k in &colors {
                        a.push((l, k));
                    }
                    next.push(a);
                }
            }
            assignments = next;
        }
        for mut a in assignments {
            a.sort_unstable();
            let ct = ColoredCycleType(a);
            let size = &order / ct.centralizer_order(d);
            out.push((ct, size));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::qpochhammer;

    fn elem(d: u32, word: &str) -> WreathElem {
        WreathElem::parse_window(d, word).unwrap()
    }

    #[test]
    fn parse_and_render() {
        let w = elem(2, "0:2,1:1");
        assert_eq!(w.perm(), &[1, 0]);
        assert_eq!(w.colors(), &[0, 1]);
        assert_eq!(w.window_string(), "2,-1");
        assert_eq!(elem(2, "2,-1"), w);
        let v = elem(3, "1:2,0:1");
        assert_eq!(v.window_string(), "1:2,0:1");
        assert!(WreathElem::parse_window(3, "-1").is_err());
        assert!(WreathElem::parse_window(2, "1,1").is_err());
        assert!(WreathElem::parse_window(2, "3,1").is_err());
    }

    #[test]
    fn group_arithmetic() {
        let x = elem(1, "2,1,3");
        assert_eq!(x.mul(&WreathElem::identity(1, 3)).unwrap(), x);

        // [-1, 2] squared is the identity in G(2,1,2)
        let r = elem(2, "-1,2");
        assert!(r.mul(&r).unwrap().is_identity());

        // inverse of the d=3, n=1 color-1 element has color 2
        let c = elem(3, "1:1");
        assert_eq!(c.inverse(), elem(3, "2:1"));

        // mixed product: apply right factor first
        let a = elem(1, "2,3,1");
        let b = elem(1, "2,1,3");
        let ab = a.mul(&b).unwrap();
        // b sends 1->2, a sends 2->3
        assert_eq!(ab.perm()[0], 2);
    }

    #[test]
    fn conjugation_and_order() {
        let c = elem(1, "2,3,1");
        let t = elem(1, "2,1,3");
        let conj = c.conjugate_by(&t).unwrap();
        assert_eq!(conj.char_poly_factors(), c.char_poly_factors());
        assert_eq!(c.order(), 3);
        assert_eq!(elem(2, "-1,2").order(), 2);
        assert_eq!(elem(2, "-2,1").order(), 4);
        assert_eq!(elem(3, "1:2,0:1").order(), 6);
        assert_eq!(elem(3, "1:2,0:3,0:1").order(), 9);
        assert_eq!(WreathElem::identity(4, 2).order(), 1);
    }

    #[test]
    fn galois_on_elements() {
        let w = elem(3, "1:1,2:2");
        let id = GaloisAut::identity(3);
        assert_eq!(w.galois(&id).unwrap(), w);
        let s2 = GaloisAut::new(3, 2).unwrap();
        assert_eq!(w.galois(&s2).unwrap(), elem(3, "2:1,1:2"));
        // d=2: every valid s acts trivially
        let v = elem(2, "-2,1");
        let s = GaloisAut::new(2, 1).unwrap();
        assert_eq!(v.galois(&s).unwrap(), v);
        // automorphism property on a sample
        let a = elem(3, "1:2,0:1");
        let b = elem(3, "2:1,2:2");
        let lhs = a.mul(&b).unwrap().galois(&s2).unwrap();
        let rhs = a.galois(&s2).unwrap().mul(&b.galois(&s2).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn word_statistics_examples() {
        let id = WreathElem::identity(1, 3);
        let st = id.word_statistics();
        assert_eq!((st.maj, st.inv, st.fmaj), (0, 0, 0));

        // d=2, n=2, window [2, -1]: maj 1, r = (1,1), fmaj 3
        let w = elem(2, "2,-1");
        let st = w.word_statistics();
        assert_eq!(st.des_set, vec![1]);
        assert_eq!(st.maj, 1);
        assert_eq!(st.r, vec![1, 1]);
        assert_eq!(st.fmaj, 3);

        // d=2, n=1, window [-1]: maj 0, r = (0,1), fmaj 1
        let v = elem(2, "-1");
        let st = v.word_statistics();
        assert_eq!(st.maj, 0);
        assert_eq!(st.r, vec![0, 1]);
        assert_eq!(st.fmaj, 1);
    }

    #[test]
    fn enumerate_counts() {
        let budget = Budget::default();
        assert_eq!(enumerate_group(1, 3, &budget).unwrap().count(), 6);
        assert_eq!(enumerate_group(2, 2, &budget).unwrap().count(), 8);
        assert_eq!(enumerate_group(3, 2, &budget).unwrap().count(), 18);
        let tight = Budget {
            max_group_order: 10,
            max_cells: 12,
        };
        assert!(matches!(
            enumerate_group(3, 2, &tight).map(|it| it.count()),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn fmaj_distribution_is_mahonian() {
        // sum over w of q^fmaj(w) = prod (1 + q + ... + q^(d_i - 1))
        let budget = Budget::default();
        for (d, n) in [(1usize, 4usize), (2, 2), (2, 3), (3, 2), (4, 2)] {
            let d = d as u32;
            let mut dist = BiPoly::zero();
            for w in enumerate_group(d, n, &budget).unwrap() {
                dist.add_term(0, w.fmaj() as u32, Coeff::one());
            }
            let (degs, _) = degrees(d, n);
            let mut expected = BiPoly::one();
            for &e in &degs {
                expected = expected.mul(&BiPoly::q_analog(Var::Q, e as u32));
            }
            assert_eq!(dist, expected, "fmaj distribution for G({d},1,{n})");
        }
    }

    #[test]
    fn inv_and_maj_agree_for_type_a() {
        let budget = Budget::default();
        for n in 1..=5usize {
            let mut inv_dist = BiPoly::zero();
            let mut maj_dist = BiPoly::zero();
            for w in enumerate_group(1, n, &budget).unwrap() {
                let st = w.word_statistics();
                inv_dist.add_term(0, st.inv as u32, Coeff::one());
                maj_dist.add_term(0, st.maj as u32, Coeff::one());
            }
            assert_eq!(inv_dist, maj_dist, "inv vs maj for S_{n}");
        }
    }

    #[test]
    fn char_poly_factor_examples() {
        let id = WreathElem::identity(3, 2);
        assert_eq!(id.char_poly_factors(), vec![(1, 0), (1, 0)]);
        assert_eq!(
            id.char_poly(Var::T),
            qpochhammer(1, Var::T).mul(&qpochhammer(1, Var::T))
        );

        let c3 = elem(1, "2,3,1");
        assert_eq!(c3.char_poly_factors(), vec![(3, 0)]);
        assert_eq!(c3.char_poly(Var::T), BiPoly::one_minus_power(Var::T, 3));

        // d=2 element [-2, 1]: one 2-cycle with color sum 1, det = 1 + t^2
        let w = elem(2, "-2,1");
        assert_eq!(w.char_poly_factors(), vec![(2, 1)]);
        let mut expected = BiPoly::one();
        expected.add_term(2, 0, Coeff::one());
        assert_eq!(w.char_poly(Var::T), expected);
    }

    /// Leibniz-formula determinant of `I - t w` over `Q(zeta_d)[t]`, as an
    /// independent oracle for the factored characteristic polynomial.
    fn det_oracle(w: &WreathElem) -> BiPoly {
        let n = w.n();
        let d = w.d() as u64;
        let mut det = BiPoly::zero();
        for (perm, sign) in permutations_with_sign(n) {
            let mut term = BiPoly::from_integer(sign);
            let mut ok = true;
            for c in 0..n {
                let r = perm[c];
                let mut entry = BiPoly::zero();
                if r == c {
                    entry = entry.add(&BiPoly::one());
                }
                if w.perm()[c] == r {
                    let zeta = Cyclotomic::root_of_unity(d, w.colors()[c] as i64);
                    entry.add_term(1, 0, Coeff::Cyclo(zeta.neg()));
                }
                if entry.is_zero() {
                    ok = false;
                    break;
                }
                term = term.mul(&entry);
            }
            if ok {
                det = det.add(&term);
            }
        }
        det
    }

    fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, i64)> {
        (0..n)
            .permutations(n)
            .map(|p| {
                let mut sign = 1i64;
                for i in 0..n {
                    for j in i + 1..n {
                        if p[i] > p[j] {
                            sign = -sign;
                        }
                    }
                }
                (p, sign)
            })
            .collect()
    }

    #[test]
    fn char_poly_matches_determinant_oracle() {
        let budget = Budget::default();
        for d in 1..=3u32 {
            for n in 1..=3usize {
                for w in enumerate_group(d, n, &budget).unwrap() {
                    assert_eq!(
                        w.char_poly(Var::T),
                        det_oracle(&w),
                        "det(1-tw) mismatch for {w:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn degrees_and_reflections() {
        assert_eq!(degrees(1, 3), (vec![1, 2, 3], 3));
        assert_eq!(degrees(2, 2), (vec![2, 4], 4));
        assert_eq!(degrees(3, 1), (vec![3], 2));

        let budget = Budget::default();
        for (d, n) in [(1u32, 3usize), (2, 2), (3, 1), (2, 3), (3, 2)] {
            let refs = reflections(d, n, &budget).unwrap();
            let (_, nstar) = degrees(d, n);
            assert_eq!(
                refs.len(),
                nstar as usize,
                "reflection count for G({d},1,{n})"
            );
        }
        // the three transpositions of S_3
        let refs = reflections(1, 3, &budget).unwrap();
        assert!(refs
            .iter()
            .all(|w| w.char_poly_factors() == vec![(1, 0), (2, 0)]));
        // the two nonidentity elements of Z/3
        let refs = reflections(3, 1, &budget).unwrap();
        assert_eq!(refs.len(), 2);
    }

    #[test]
    fn class_types_partition_the_group() {
        let budget = Budget::default();
        for (d, n) in [(1u32, 4usize), (2, 3), (3, 2)] {
            let types = class_types(d, n);
            let total: BigUint = types.iter().map(|(_, size)| size.clone()).sum();
            assert_eq!(total, group_order_big(d, n));

            // Class sizes agree with brute-force bucketing.
            let mut buckets: BTreeMap<ColoredCycleType, u64> = BTreeMap::new();
            for w in enumerate_group(d, n, &budget).unwrap() {
                *buckets.entry(w.colored_cycle_type()).or_insert(0) += 1;
            }
            assert_eq!(buckets.len(), types.len());
            for (ct, size) in types {
                assert_eq!(
                    BigUint::from(buckets[&ct]),
                    size,
                    "class size of {ct:?} in G({d},1,{n})"
                );
            }
        }
    }

    #[test]
    fn apply_to_vector_matches_window() {
        let w = elem(2, "-2,1");
        let m = 8u64;
        let v = vec![
            Cyclotomic::root_of_unity(m, 1),
            Cyclotomic::root_of_unity(m, 3),
        ];
        let image = w.apply_to_vector(&v).unwrap();
        // w sends e_1 to -e_2 and e_2 to e_1: (w v)_2 = -v_1, (w v)_1 = v_2
        assert_eq!(image[1], v[0].neg());
        assert_eq!(image[0], v[1]);
    }
}
