//! Partitions, d-tuples of partitions, standard Young tableaux of their skew
//! arrangement, the flag-major index on tableaux, fake-degree polynomials,
//! and the colored Robinson-Schensted bijection.
//!
//! The planar arrangement places component `lambda^(k-1)` strictly
//! northeast of `lambda^k`, so `lambda^0` is on top and `lambda^(d-1)` at
//! the bottom; "lower row" comparisons concatenate rows in component order
//! `0, 1, ..., d-1`.

use std::fmt;

use crate::cyclotomic::GaloisAut;
use crate::error::{Budget, Error, Result};
use crate::poly::{BiPoly, Coeff};
use crate::wreath::WreathElem;

/// All partitions of `n` as weakly decreasing part lists, in a
/// deterministic order.
pub fn partitions_of(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            cur.push(part);
            rec(n - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// A d-tuple of partitions `(lambda^0, ..., lambda^(d-1))` with `n` cells
/// in total; component `k` collects the cells of color `k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiPartition {
    components: Vec<Vec<usize>>,
}

impl MultiPartition {
    pub fn new(components: Vec<Vec<usize>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidShape("need at least one component".into()));
        }
        for comp in &components {
            if comp.windows(2).any(|w| w[0] < w[1]) || comp.iter().any(|&p| p == 0) {
                return Err(Error::InvalidShape(
                    "components must be weakly decreasing positive parts".into(),
                ));
            }
        }
        Ok(MultiPartition { components })
    }

    /// Single-component shape (`d = 1`).
    pub fn from_partition(lambda: Vec<usize>) -> Result<Self> {
        MultiPartition::new(vec![lambda])
    }

    pub fn d(&self) -> u32 {
        self.components.len() as u32
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component(&self, k: usize) -> &[usize] {
        &self.components[k]
    }

    pub fn cells(&self) -> usize {
        self.components.iter().flatten().sum()
    }

    /// Cell counts per component (`|lambda^k|`).
    pub fn component_sizes(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.iter().sum()).collect()
    }

    /// Relabel components by `k -> s k mod d` (the Galois action on the
    /// color indices).
    pub fn galois_permuted(&self, aut: &GaloisAut) -> Result<Self> {
        let d = self.d() as u64;
        if aut.conductor() % d != 0 {
            return Err(Error::NonDivisibleConductor {
                from: d,
                into: aut.conductor(),
            });
        }
        let s = aut.exponent_mod(d);
        let mut components = vec![Vec::new(); self.components.len()];
        for (k, comp) in self.components.iter().enumerate() {
            components[((k as u64 * s) % d) as usize] = comp.clone();
        }
        Ok(MultiPartition { components })
    }

    /// Component relabeling by color negation (`s = -1`).
    pub fn color_negated(&self) -> Self {
        let d = self.d() as u64;
        self.galois_permuted(&GaloisAut::conjugation(d)).unwrap()
    }

    /// Global row index of `(component, row)` in the planar arrangement.
    pub fn global_row(&self, k: usize, r: usize) -> usize {
        let above: usize = self.components[..k].iter().map(|c| c.len()).sum();
        above + r
    }

    /// JSON form: array of components in display order
    /// `[lambda^(d-1), ..., lambda^0]`.
    pub fn to_json(&self) -> serde_json::Value {
        let display: Vec<&Vec<usize>> = self.components.iter().rev().collect();
        serde_json::json!(display)
    }

    pub fn from_json(d: u32, v: &serde_json::Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::InvalidShape("expected array of components".into()))?;
        if arr.len() != d as usize {
            return Err(Error::InvalidShape(format!(
                "expected {d} components, got {}",
                arr.len()
            )));
        }
        let mut components = Vec::with_capacity(arr.len());
        for comp in arr.iter().rev() {
            let parts = comp
                .as_array()
                .ok_or_else(|| Error::InvalidShape("component must be an array".into()))?
                .iter()
                .map(|x| {
                    x.as_u64()
                        .map(|p| p as usize)
                        .ok_or_else(|| Error::InvalidShape("parts must be integers".into()))
                })
                .collect::<Result<Vec<usize>>>()?;
            components.push(parts);
        }
        MultiPartition::new(components)
    }
}

impl fmt::Debug for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

/// All multipartitions with `d` components and `n` cells total.
pub fn multipartitions(d: u32, n: usize, budget: &Budget) -> Result<Vec<MultiPartition>> {
    budget.check_cells("multipartition enumeration", n)?;
    fn rec(
        d: usize,
        n: usize,
        cur: &mut Vec<Vec<usize>>,
        out: &mut Vec<MultiPartition>,
    ) {
        if d == 1 {
            for lambda in partitions_of(n) {
                cur.push(lambda);
                out.push(MultiPartition {
                    components: cur.clone(),
                });
                cur.pop();
            }
            return;
        }
        for m in 0..=n {
            for lambda in partitions_of(m) {
                cur.push(lambda);
                rec(d - 1, n - m, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(d as usize, n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Statistics of a standard filling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableauStatistics {
    /// Values `i` such that `i+1` sits in a strictly lower row.
    pub des_set: Vec<usize>,
    pub maj: u64,
    pub fmaj: u64,
}

/// A standard filling of a multipartition shape: the values `1..n` each
/// appear once, increasing along rows and down columns within every
/// component.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewTableau {
    shape: MultiPartition,
    /// `rows[k][r][c]` is the value in component `k`, row `r`, column `c`.
    rows: Vec<Vec<Vec<usize>>>,
}

impl SkewTableau {
    pub fn new(shape: MultiPartition, rows: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let t = SkewTableau { shape, rows };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let n = self.shape.cells();
        if self.rows.len() != self.shape.components().len() {
            return Err(Error::InvalidShape("component count mismatch".into()));
        }
        let mut seen = vec![false; n + 1];
        for (k, comp) in self.rows.iter().enumerate() {
            let lambda = self.shape.component(k);
            if comp.len() != lambda.len() {
                return Err(Error::InvalidShape("row count mismatch".into()));
            }
            for (r, row) in comp.iter().enumerate() {
                if row.len() != lambda[r] {
                    return Err(Error::InvalidShape("row length mismatch".into()));
                }
                for (c, &v) in row.iter().enumerate() {
                    if v < 1 || v > n || seen[v] {
                        return Err(Error::InvalidShape(format!("bad or repeated value {v}")));
                    }
                    seen[v] = true;
                    if c > 0 && row[c - 1] >= v {
                        return Err(Error::InvalidShape("rows must increase".into()));
                    }
                    if r > 0 && comp[r - 1].len() > c && comp[r - 1][c] >= v {
                        return Err(Error::InvalidShape("columns must increase".into()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &MultiPartition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Vec<usize>>] {
        &self.rows
    }

    pub fn cells(&self) -> usize {
        self.shape.cells()
    }

    /// Global planar row of each value `1..n`.
    fn value_rows(&self) -> Vec<usize> {
        let n = self.cells();
        let mut out = vec![0; n + 1];
        for (k, comp) in self.rows.iter().enumerate() {
            for (r, row) in comp.iter().enumerate() {
                for &v in row {
                    out[v] = self.shape.global_row(k, r);
                }
            }
        }
        out
    }

    /// Descent set, major index, and the flag-major index
    /// `fmaj = d maj + sum_k k |lambda^k|`.
    pub fn statistics(&self) -> TableauStatistics {
        let n = self.cells();
        let rows = self.value_rows();
        let mut des_set = Vec::new();
        let mut maj = 0u64;
        for i in 1..n {
            if rows[i + 1] > rows[i] {
                des_set.push(i);
                maj += i as u64;
            }
        }
        let d = self.shape.d() as u64;
        let color_weight: u64 = self
            .shape
            .component_sizes()
            .iter()
            .enumerate()
            .map(|(k, &sz)| k as u64 * sz as u64)
            .sum();
        TableauStatistics {
            des_set,
            maj,
            fmaj: d * maj + color_weight,
        }
    }

    pub fn fmaj(&self) -> u64 {
        self.statistics().fmaj
    }

    /// Relabel components by `k -> s k mod d`.
    pub fn galois_permuted(&self, aut: &GaloisAut) -> Result<Self> {
        let shape = self.shape.galois_permuted(aut)?;
        let d = self.shape.d() as u64;
        let s = aut.exponent_mod(d);
        let mut rows = vec![Vec::new(); self.rows.len()];
        for (k, comp) in self.rows.iter().enumerate() {
            rows[((k as u64 * s) % d) as usize] = comp.clone();
        }
        Ok(SkewTableau { shape, rows })
    }

    /// JSON form: components in display order `[Q^(d-1), ..., Q^0]`, each a
    /// list of rows.
    pub fn to_json(&self) -> serde_json::Value {
        let display: Vec<&Vec<Vec<usize>>> = self.rows.iter().rev().collect();
        serde_json::json!(display)
    }
}

impl fmt::Debug for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

/// Enumerate the standard fillings of a shape by placing `1..n` in order;
/// at each step a value may go in any cell whose west and north neighbors
/// are already filled.
pub fn enumerate_syt(shape: &MultiPartition, budget: &Budget) -> Result<Vec<SkewTableau>> {
    budget.check_cells("tableau enumeration", shape.cells())?;
    let n = shape.cells();
    let d = shape.components().len();
    let mut filled: Vec<Vec<usize>> = (0..d)
        .map(|k| vec![0; shape.component(k).len()])
        .collect();
    let mut rows: Vec<Vec<Vec<usize>>> = (0..d)
        .map(|k| shape.component(k).iter().map(|_| Vec::new()).collect())
        .collect();
    let mut out = Vec::new();

    fn rec(
        shape: &MultiPartition,
        v: usize,
        n: usize,
        filled: &mut Vec<Vec<usize>>,
        rows: &mut Vec<Vec<Vec<usize>>>,
        out: &mut Vec<SkewTableau>,
    ) {
        if v > n {
            out.push(SkewTableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        for k in 0..shape.components().len() {
            let lambda = shape.component(k);
            for r in 0..lambda.len() {
                let c = filled[k][r];
                if c >= lambda[r] {
                    continue;
                }
                if r > 0 && filled[k][r - 1] <= c {
                    continue;
                }
                filled[k][r] += 1;
                rows[k][r].push(v);
                rec(shape, v + 1, n, filled, rows, out);
                rows[k][r].pop();
                filled[k][r] -= 1;
            }
        }
    }
    rec(shape, 1, n, &mut filled, &mut rows, &mut out);
    Ok(out)
}

/// Stembridge's fake-degree polynomial `f^lambda(q) = sum_Q q^fmaj(Q)` over
/// the standard fillings of the shape.
pub fn fake_degree(shape: &MultiPartition, budget: &Budget) -> Result<BiPoly> {
    let mut p = BiPoly::zero();
    for t in enumerate_syt(shape, budget)? {
        p.add_term(0, t.fmaj() as u32, Coeff::one());
    }
    Ok(p)
}

/// Row-insert `value` into a single component; returns the row where a new
/// cell was created.
fn row_insert(comp: &mut Vec<Vec<usize>>, mut value: usize) -> usize {
    let mut r = 0;
    loop {
        if comp.len() == r {
            comp.push(vec![value]);
            return r;
        }
        let row = &mut comp[r];
        match row.iter().position(|&x| x > value) {
            None => {
                row.push(value);
                return r;
            }
            Some(pos) => {
                std::mem::swap(&mut row[pos], &mut value);
                r += 1;
            }
        }
    }
}

/// Reverse a row insertion that created a cell at the end of row `r`;
/// returns the value that was originally inserted.
fn row_uninsert(comp: &mut Vec<Vec<usize>>, r: usize) -> usize {
    let mut value = comp[r].pop().unwrap();
    if comp[r].is_empty() {
        comp.remove(r);
    }
    for row in comp[..r].iter_mut().rev() {
        // Rightmost entry smaller than the incoming value is bumped back up.
        let pos = row.iter().rposition(|&x| x < value).unwrap();
        std::mem::swap(&mut row[pos], &mut value);
    }
    value
}

/// The colored Robinson-Schensted bijection: letters of the k-th
/// subalphabet are row-inserted by value into `P^k` in window order, with
/// positions recorded in `Q^k`.
pub fn colored_rsk(w: &WreathElem) -> (SkewTableau, SkewTableau) {
    let d = w.d() as usize;
    let mut p_rows: Vec<Vec<Vec<usize>>> = vec![Vec::new(); d];
    let mut q_rows: Vec<Vec<Vec<usize>>> = vec![Vec::new(); d];
    for i in 0..w.n() {
        let k = w.colors()[i] as usize;
        let value = w.perm()[i] + 1;
        let r = row_insert(&mut p_rows[k], value);
        if q_rows[k].len() == r {
            q_rows[k].push(Vec::new());
        }
        q_rows[k][r].push(i + 1);
    }
    let components: Vec<Vec<usize>> = p_rows
        .iter()
        .map(|comp| comp.iter().map(|row| row.len()).collect())
        .collect();
    let shape = MultiPartition {
        components,
    };
    let p = SkewTableau {
        shape: shape.clone(),
        rows: p_rows,
    };
    let q = SkewTableau {
        shape,
        rows: q_rows,
    };
    debug_assert!(p.validate().is_ok() && q.validate().is_ok());
    (p, q)
}

/// Inverse of [`colored_rsk`]; the tableaux must share a shape.
pub fn rsk_inverse(p: &SkewTableau, q: &SkewTableau) -> Result<WreathElem> {
    if p.shape != q.shape {
        return Err(Error::ShapeMismatch);
    }
    let d = p.shape.d();
    let n = p.cells();
    let mut p_rows = p.rows.clone();
    let mut q_rows = q.rows.clone();
    let mut perm = vec![0usize; n];
    let mut colors = vec![0u32; n];
    for i in (1..=n).rev() {
        // Position i sits at a removable corner of the component of Q that
        // contains it (it is the largest remaining entry there).
        let mut location = None;
        'search: for (k, comp) in q_rows.iter().enumerate() {
            for (r, row) in comp.iter().enumerate() {
                if row.last() == Some(&i) {
                    location = Some((k, r));
                    break 'search;
                }
            }
        }
        let (k, r) = location.ok_or(Error::ShapeMismatch)?;
        q_rows[k][r].pop();
        if q_rows[k][r].is_empty() {
            q_rows[k].remove(r);
        }
        let value = row_uninsert(&mut p_rows[k], r);
        perm[i - 1] = value - 1;
        colors[i - 1] = k as u32;
    }
    WreathElem::new(d, perm, colors)
}
