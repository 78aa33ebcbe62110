//! Generator-matrix codes over GF(q): Galois inner products and duals, the
//! determinant LCD test, the `[I A A]` / `[I A eta A]` extensions and exact
//! minimum distance.

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{Element, Field, GaloisParam};

/// Dense row-major matrix over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Element>,
}

/// Row echelon data: the reduced matrix and its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Element::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &Field, size: usize) -> Matrix {
        let mut m = Matrix::zeros(field, size, size);
        for i in 0..size {
            m.set(i, i, Element::ONE);
        }
        m
    }

    /// Rows must share a common length; `cols` fixes it when there are none.
    pub fn from_rows(field: &Field, cols: usize, rows: Vec<Vec<Element>>) -> Result<Matrix> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a matrix with {cols} columns",
                bad.len()
            )));
        }
        Ok(Matrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Entries given as prime-field integers.
    pub fn from_ints(field: &Field, rows: &[Vec<i64>]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        Matrix::from_rows(
            field,
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_int(v)).collect())
                .collect(),
        )
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Element {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Element) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Element] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Element>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Element> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(t, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Entrywise `p^j`-th power.
    pub fn frobenius(&self, j: usize) -> Matrix {
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| self.field.frobenius_pow(x, j)).collect(),
        }
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot stack {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot join {} and {} rows",
                self.rows, other.rows
            )));
        }
        let rows = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend_from_slice(other.row(i));
                r
            })
            .collect();
        Matrix::from_rows(&self.field, self.cols + other.cols, rows)
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let rows = (0..self.rows)
            .map(|i| cols.iter().map(|&j| self.get(i, j)).collect())
            .collect();
        Matrix::from_rows(&self.field, cols.len(), rows).expect("consistent widths")
    }

    pub fn scale(&self, c: Element) -> Matrix {
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| self.field.mul(x, c)).collect(),
        }
    }

    /// Reduced row echelon form.
    pub fn echelon(&self) -> Echelon {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(pr) = (rank..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(rank, pr);
            let inv = f.inv(m.get(rank, c)).expect("pivot is nonzero");
            for j in 0..m.cols {
                let v = f.mul(m.get(rank, j), inv);
                m.set(rank, j, v);
            }
            for r in 0..m.rows {
                let factor = m.get(r, c);
                if r == rank || factor.is_zero() {
                    continue;
                }
                for j in 0..m.cols {
                    let v = f.sub(m.get(r, j), f.mul(factor, m.get(rank, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(c);
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        Echelon { reduced: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Determinant of a square matrix; the empty matrix has determinant 1.
    pub fn determinant(&self) -> Result<Element> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let f = &self.field;
        let mut m = self.clone();
        let mut det = Element::ONE;
        for c in 0..m.cols {
            let Some(pr) = (c..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                return Ok(Element::ZERO);
            };
            if pr != c {
                m.swap_rows(c, pr);
                det = f.neg(det);
            }
            let piv = m.get(c, c);
            det = f.mul(det, piv);
            let inv = f.inv(piv)?;
            for r in c + 1..m.rows {
                let factor = f.mul(m.get(r, c), inv);
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(r, j), f.mul(factor, m.get(c, j)));
                    m.set(r, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Basis of `{x : M x^T = 0}` as the rows of a matrix.
    pub fn nullspace(&self) -> Matrix {
        let f = &self.field;
        let Echelon { reduced, pivots } = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let rows = free
            .iter()
            .map(|&fc| {
                let mut v = vec![Element::ZERO; self.cols];
                v[fc] = Element::ONE;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(reduced.get(r, fc));
                }
                v
            })
            .collect();
        Matrix::from_rows(f, self.cols, rows).expect("consistent widths")
    }

    /// `v M` for a row vector `v`.
    pub fn left_apply(&self, v: &[Element]) -> Vec<Element> {
        let f = &self.field;
        let mut out = vec![Element::ZERO; self.cols];
        for (i, &c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(self.row(i)) {
                *o = f.add(*o, f.mul(c, g));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            (0..self.rows)
                .map(|i| {
                    serde_json::Value::Array(
                        self.row(i).iter().map(|&x| self.field.to_json(x)).collect(),
                    )
                })
                .collect(),
        )
    }

    pub fn from_json(field: &Field, v: &serde_json::Value) -> Result<Matrix> {
        let rows = v
            .as_array()
            .ok_or_else(|| Error::Serialization("matrix must be a JSON array of rows".into()))?;
        let parsed = rows
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(|| Error::Serialization("matrix row must be an array".into()))?
                    .iter()
                    .map(|x| field.from_json(x))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let cols = parsed.first().map_or(0, Vec::len);
        Matrix::from_rows(field, cols, parsed)
    }
}

/// A linear code given by a generator matrix with independent rows.
///
/// The zero code is represented by a `0 x n` generator; it arises as the dual
/// of the full space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    gen: Matrix,
}

impl LinearCode {
    pub fn new(gen: Matrix) -> Result<LinearCode> {
        if gen.rank() != gen.rows() {
            return Err(Error::DependentRows);
        }
        Ok(LinearCode { gen })
    }

    /// Code spanned by arbitrary rows (dependent rows are dropped).
    pub fn span(gen: &Matrix) -> LinearCode {
        let Echelon { reduced, pivots } = gen.echelon();
        let rows = (0..pivots.len()).map(|i| reduced.row(i).to_vec()).collect();
        LinearCode {
            gen: Matrix::from_rows(gen.field(), gen.cols(), rows).expect("consistent widths"),
        }
    }

    pub fn zero(field: &Field, n: usize) -> LinearCode {
        LinearCode {
            gen: Matrix::zeros(field, 0, n),
        }
    }

    pub fn full(field: &Field, n: usize) -> LinearCode {
        LinearCode {
            gen: Matrix::identity(field, n),
        }
    }

    pub fn field(&self) -> &Field {
        self.gen.field()
    }

    pub fn length(&self) -> usize {
        self.gen.cols()
    }

    pub fn dimension(&self) -> usize {
        self.gen.rows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    /// Euclidean dual generator, i.e. a parity-check matrix.
    pub fn parity_check(&self) -> Matrix {
        self.gen.nullspace()
    }

    pub fn contains(&self, v: &[Element]) -> bool {
        let Ok(row) = Matrix::from_rows(self.field(), self.length(), vec![v.to_vec()]) else {
            return false;
        };
        self.gen.vstack(&row).expect("same width").rank() == self.dimension()
    }

    /// `dim(C ∩ D)` via `dim C + dim D - dim(C + D)`.
    pub fn intersection_dim(&self, other: &LinearCode) -> Result<usize> {
        let stacked = self.gen.vstack(&other.gen)?;
        Ok(self.dimension() + other.dimension() - stacked.rank())
    }

    /// Equality as subspaces.
    pub fn same_subspace(&self, other: &LinearCode) -> bool {
        self.length() == other.length()
            && self.dimension() == other.dimension()
            && self.intersection_dim(other).is_ok_and(|d| d == self.dimension())
    }
}

/// `[x, y]_k = sum_i x_i y_i^{p^k}`.
pub fn galois_inner_product(field: &Field, x: &[Element], y: &[Element], k: GaloisParam) -> Result<Element> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch(format!(
            "vectors of lengths {} and {}",
            x.len(),
            y.len()
        )));
    }
    Ok(x.iter().zip(y).fold(Element::ZERO, |acc, (&a, &b)| {
        field.add(acc, field.mul(a, field.frobenius_pow(b, k.k())))
    }))
}

/// `C^{p^j}`: generator raised entrywise to the `p^j`-th power.
pub fn p_power_code(code: &LinearCode, j: usize) -> LinearCode {
    LinearCode {
        gen: code.gen.frobenius(j),
    }
}

/// `C^{⊥k}`, computed as the Euclidean dual of `C^{p^{e-k}}`.
pub fn galois_dual(code: &LinearCode, k: GaloisParam) -> LinearCode {
    let j = k.conjugate_exponent(code.field().degree());
    LinearCode {
        gen: code.gen.frobenius(j).nullspace(),
    }
}

/// Result of the determinant LCD test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LcdVerdict {
    pub lcd: bool,
    /// `det(G (G^{(p^{e-k})})^T)`.
    pub det: Element,
}

pub fn is_galois_lcd(code: &LinearCode, k: GaloisParam) -> LcdVerdict {
    let g = &code.gen;
    let j = k.conjugate_exponent(code.field().degree());
    let gram = g
        .mul(&g.frobenius(j).transpose())
        .expect("shapes agree");
    let det = gram.determinant().expect("square");
    LcdVerdict {
        lcd: !det.is_zero(),
        det,
    }
}

/// Which extension of a standard-form generator `[I_l | A]` to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtendMode {
    /// `[I_l | A | A]`, characteristic 2.
    Char2,
    /// `[I_l | A | eta A]` with `eta^2 = -1`, `p = 1 (mod 4)`.
    Pmod4,
}

/// Whether the first `rows` columns form an identity block.
pub fn is_standard_form(g: &Matrix) -> bool {
    let l = g.rows();
    l <= g.cols()
        && (0..l).all(|i| {
            (0..l).all(|j| g.get(i, j) == if i == j { Element::ONE } else { Element::ZERO })
        })
}

/// Row-reduce and permute columns so the generator reads `[I_l | A]`.
/// Returns the new generator and the column order used (`new[j] = old[perm[j]]`).
pub fn standard_form(code: &LinearCode) -> (Matrix, Vec<usize>) {
    let Echelon { reduced, pivots } = code.gen.echelon();
    let mut perm = pivots.clone();
    perm.extend((0..code.length()).filter(|c| !pivots.contains(c)));
    (reduced.select_columns(&perm), perm)
}

pub fn extend_lcd(g: &Matrix, k: GaloisParam, mode: ExtendMode) -> Result<LinearCode> {
    let field = g.field();
    if k.k() >= field.degree() {
        return Err(Error::InvalidContext(format!("k = {} must be < e", k.k())));
    }
    if !is_standard_form(g) {
        return Err(Error::NotStandardForm);
    }
    let p = field.characteristic();
    let l = g.rows();
    let a_cols: Vec<usize> = (l..g.cols()).collect();
    let a = g.select_columns(&a_cols);
    let tail = match mode {
        ExtendMode::Char2 => {
            if p != 2 {
                return Err(Error::WrongCharacteristic(format!(
                    "mode char2 needs characteristic 2, field has {p}"
                )));
            }
            a
        }
        ExtendMode::Pmod4 => {
            if p % 4 != 1 {
                return Err(Error::WrongCharacteristic(format!(
                    "mode pmod4 needs p = 1 (mod 4), field has p = {p}"
                )));
            }
            a.scale(field.sqrt_minus_one()?)
        }
    };
    LinearCode::new(g.hstack(&tail)?)
}

/// Minimum distance, possibly only bracketed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distance {
    Exact(usize),
    Bounds { lo: usize, hi: usize },
    /// The zero code.
    Undefined,
}

/// `[n, dim, d]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodeParams {
    pub n: usize,
    pub dim: usize,
    pub d: Distance,
}

impl CodeParams {
    pub fn exact(&self) -> bool {
        matches!(self.d, Distance::Exact(_))
    }

    pub fn distance(&self) -> Option<usize> {
        match self.d {
            Distance::Exact(d) => Some(d),
            _ => None,
        }
    }

    pub fn singleton(&self) -> usize {
        self.n + 1 - self.dim
    }

    pub fn mds(&self) -> bool {
        self.dim > 0 && self.distance() == Some(self.singleton())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::json!({
            "n": self.n,
            "dim": self.dim,
            "d": self.distance(),
            "exact": self.exact(),
            "mds": self.mds(),
        });
        if let Distance::Bounds { lo, hi } = self.d {
            v["bounds"] = serde_json::json!([lo, hi]);
        }
        v
    }
}

impl std::fmt::Display for CodeParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.d {
            Distance::Exact(d) => write!(f, "[{},{},{}]", self.n, self.dim, d),
            Distance::Bounds { lo, hi } => write!(f, "[{},{},{}..{}]", self.n, self.dim, lo, hi),
            Distance::Undefined => write!(f, "[{},0,-]", self.n),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Auto,
    Messages,
    Supports,
}

/// Work limits for the distance engines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Codewords enumerated (one per projective class).
    pub messages: u64,
    /// Column-subset rank tests.
    pub supports: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            messages: 100_000_000,
            supports: 10_000_000,
        }
    }
}

/// Codewords visited by message enumeration: `(q^l - 1)/(q - 1)`, saturating.
pub fn message_cost(q: u64, l: usize) -> u64 {
    let mut total: u64 = 0;
    let mut pw: u64 = 1;
    for _ in 0..l {
        total = total.saturating_add(pw);
        pw = pw.saturating_mul(q);
    }
    total
}

/// Worst-case rank tests for the support search: all subsets of size at most
/// `n - l + 1`, saturating.
pub fn support_cost(n: usize, l: usize) -> u64 {
    (1..=(n + 1).saturating_sub(l).min(n))
        .fold(0u64, |acc, w| acc.saturating_add(arith::binomial(n as u64, w as u64)))
}

/// Exact minimum distance when the budget allows, otherwise bounds.
///
/// `known_lower` is a proven lower bound (for instance the BCH bound); the
/// search stops as soon as a codeword of that weight is found and bounds
/// start from it.
pub fn min_distance(
    code: &LinearCode,
    strategy: Strategy,
    budget: Budget,
    known_lower: usize,
) -> Result<CodeParams> {
    let n = code.length();
    let l = code.dimension();
    let params = |d| CodeParams { n, dim: l, d };
    if l == 0 {
        return Ok(params(Distance::Undefined));
    }
    let q = code.field().order();
    let singleton = n - l + 1;
    let lower = known_lower.clamp(1, singleton);
    let (mc, sc) = (message_cost(q, l), support_cost(n, l));
    let order: &[Strategy] = match strategy {
        Strategy::Messages => &[Strategy::Messages],
        Strategy::Supports => &[Strategy::Supports],
        Strategy::Auto if mc <= sc => &[Strategy::Messages, Strategy::Supports],
        Strategy::Auto => &[Strategy::Supports, Strategy::Messages],
    };
    let mut best_lo = lower;
    for s in order {
        match s {
            Strategy::Messages if mc <= budget.messages => {
                return Ok(params(Distance::Exact(distance_by_messages(code, lower))));
            }
            Strategy::Supports => match distance_by_supports(code, lower, budget.supports) {
                SupportOutcome::Found(d) => return Ok(params(Distance::Exact(d))),
                SupportOutcome::Exhausted { at_least } => best_lo = best_lo.max(at_least),
            },
            _ => {}
        }
    }
    if best_lo >= singleton {
        return Ok(params(Distance::Exact(singleton)));
    }
    Ok(params(Distance::Bounds {
        lo: best_lo,
        hi: singleton,
    }))
}

/// Smallest weight of a nonzero codeword, visiting one codeword per
/// projective class (leading message coordinate equal to 1).
pub fn distance_by_messages(code: &LinearCode, stop_at: usize) -> usize {
    let f = code.field();
    let g = &code.gen;
    let (n, l) = (code.length(), code.dimension());
    let elems: Vec<Element> = f.elements().collect();
    let q = elems.len();
    let mut best = n;
    for lead in 0..l {
        let mut word: Vec<Element> = g.row(lead).to_vec();
        let mut digits = vec![0usize; l - lead - 1];
        loop {
            let w = word.iter().filter(|c| !c.is_zero()).count();
            if w < best {
                best = w;
                if best <= stop_at.max(1) {
                    return best;
                }
            }
            // odometer over the trailing message coordinates
            let mut pos = 0;
            loop {
                if pos == digits.len() {
                    break;
                }
                let old = elems[digits[pos]];
                digits[pos] = (digits[pos] + 1) % q;
                let delta = f.sub(elems[digits[pos]], old);
                for (c, &gv) in word.iter_mut().zip(g.row(lead + 1 + pos)) {
                    *c = f.add(*c, f.mul(delta, gv));
                }
                if digits[pos] != 0 {
                    break;
                }
                pos += 1;
            }
            if pos == digits.len() {
                break;
            }
        }
    }
    best
}

pub enum SupportOutcome {
    Found(usize),
    /// Budget ran out; every support smaller than `at_least` is independent.
    Exhausted { at_least: usize },
}

/// Least `w` such that some `w` columns of the parity-check matrix are
/// linearly dependent, by iterative deepening over column subsets with
/// incremental elimination. Sizes below `known_lower` are skipped.
pub fn distance_by_supports(code: &LinearCode, known_lower: usize, budget: u64) -> SupportOutcome {
    let n = code.length();
    let l = code.dimension();
    let h = code.parity_check();
    let f = code.field().clone();
    let columns: Vec<Vec<Element>> = (0..n).map(|j| h.column(j)).collect();
    let singleton = n - l + 1;
    let mut search = SupportSearch {
        field: f,
        columns,
        tests: 0,
        budget,
    };
    for w in known_lower.max(1)..singleton {
        match search.has_dependent(w) {
            Some(true) => return SupportOutcome::Found(w),
            Some(false) => {}
            None => return SupportOutcome::Exhausted { at_least: w },
        }
    }
    SupportOutcome::Found(singleton)
}

struct SupportSearch {
    field: Field,
    columns: Vec<Vec<Element>>,
    tests: u64,
    budget: u64,
}

impl SupportSearch {
    /// `Some(true)` if some `w`-subset of columns is dependent, `None` when
    /// the budget runs out first.
    fn has_dependent(&mut self, w: usize) -> Option<bool> {
        let mut basis: Vec<(usize, Vec<Element>)> = Vec::with_capacity(w);
        self.dfs(0, w, &mut basis)
    }

    fn dfs(&mut self, start: usize, w: usize, basis: &mut Vec<(usize, Vec<Element>)>) -> Option<bool> {
        let n = self.columns.len();
        let remaining = w - basis.len();
        for c in start..=n - remaining {
            self.tests += 1;
            if self.tests > self.budget {
                return None;
            }
            let mut v = self.columns[c].clone();
            for (piv, b) in basis.iter() {
                let factor = v[*piv];
                if factor.is_zero() {
                    continue;
                }
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = self.field.sub(*x, self.field.mul(factor, y));
                }
            }
            let Some(piv) = v.iter().position(|x| !x.is_zero()) else {
                // Smaller supports are independent, so this only happens
                // when the subset has exactly w columns.
                return Some(true);
            };
            if remaining == 1 {
                continue;
            }
            let inv = self.field.inv(v[piv]).expect("pivot is nonzero");
            for x in v.iter_mut() {
                *x = self.field.mul(*x, inv);
            }
            basis.push((piv, v));
            let res = self.dfs(c + 1, w, basis);
            basis.pop();
            match res {
                Some(false) => {}
                other => return other,
            }
        }
        Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, e: usize) -> Field {
        Field::new(p, e, None).unwrap()
    }

    fn ex24() -> (Field, LinearCode) {
        let f = gf(2, 3);
        let a = f.generator();
        let (o, z) = (Element::ONE, Element::ZERO);
        let g = Matrix::from_rows(&f, 4, vec![vec![o, z, a, a], vec![z, o, o, a]]).unwrap();
        (f, LinearCode::new(g).unwrap())
    }

    #[test]
    fn inner_product_examples() {
        let f2 = gf(2, 1);
        let one = vec![Element::ONE; 2];
        assert_eq!(
            galois_inner_product(&f2, &one, &one, GaloisParam::euclidean()).unwrap(),
            Element::ZERO
        );
        let f = gf(2, 3);
        let a = f.generator();
        let k1 = f.galois(1).unwrap();
        assert_eq!(
            galois_inner_product(&f, &[a], &[a], k1).unwrap(),
            f.add(Element::ONE, a)
        );
        assert_eq!(
            galois_inner_product(&f, &[a], &[Element::ZERO], k1).unwrap(),
            Element::ZERO
        );
        assert!(galois_inner_product(&f, &[a], &[a, a], k1).is_err());
    }

    #[test]
    fn example_code_determinant_and_params() {
        let (f, c) = ex24();
        let k = f.galois(1).unwrap();
        let v = is_galois_lcd(&c, k);
        assert!(v.lcd);
        assert_eq!(v.det, f.generator());
        let p = min_distance(&c, Strategy::Messages, Budget::default(), 1).unwrap();
        assert_eq!(p.d, Distance::Exact(3));
        assert!(p.mds());
        let dual = galois_dual(&c, k);
        assert_eq!(dual.dimension(), 2);
        assert_eq!(c.intersection_dim(&dual).unwrap(), 0);
        let pc = p_power_code(&c, 2);
        let a = f.generator();
        assert_eq!(pc.generator().get(0, 2), f.pow(a, 4));
    }

    #[test]
    fn trivial_duals() {
        let f = gf(3, 1);
        let full = LinearCode::full(&f, 3);
        let d = galois_dual(&full, GaloisParam::euclidean());
        assert_eq!(d.dimension(), 0);
        assert!(is_galois_lcd(&full, GaloisParam::euclidean()).lcd);
        let f2 = gf(2, 1);
        let rep = LinearCode::new(Matrix::from_ints(&f2, &[vec![1, 1]]).unwrap()).unwrap();
        let d = galois_dual(&rep, GaloisParam::euclidean());
        assert!(d.same_subspace(&rep));
        assert!(!is_galois_lcd(&rep, GaloisParam::euclidean()).lcd);
    }

    #[test]
    fn dependent_rows_rejected() {
        let f = gf(5, 1);
        let g = Matrix::from_ints(&f, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(LinearCode::new(g.clone()), Err(Error::DependentRows));
        assert_eq!(LinearCode::span(&g).dimension(), 1);
    }

    #[test]
    fn extension_examples() {
        let f2 = gf(2, 1);
        let g = Matrix::from_ints(&f2, &[vec![1, 1]]).unwrap();
        let ext = extend_lcd(&g, GaloisParam::euclidean(), ExtendMode::Char2).unwrap();
        assert_eq!(ext.generator(), &Matrix::from_ints(&f2, &[vec![1, 1, 1]]).unwrap());
        let p = min_distance(&ext, Strategy::Auto, Budget::default(), 1).unwrap();
        assert_eq!(p.d, Distance::Exact(3));

        let f5 = gf(5, 1);
        let g = Matrix::from_ints(&f5, &[vec![1, 1]]).unwrap();
        let ext = extend_lcd(&g, GaloisParam::euclidean(), ExtendMode::Pmod4).unwrap();
        assert_eq!(ext.generator(), &Matrix::from_ints(&f5, &[vec![1, 1, 2]]).unwrap());
        let v = is_galois_lcd(&ext, GaloisParam::euclidean());
        assert_eq!(v.det, Element::ONE);

        let id = Matrix::identity(&f5, 2);
        let ext = extend_lcd(&id, GaloisParam::euclidean(), ExtendMode::Pmod4).unwrap();
        assert_eq!(ext.generator(), &id);

        assert!(matches!(
            extend_lcd(&g, GaloisParam::euclidean(), ExtendMode::Char2),
            Err(Error::WrongCharacteristic(_))
        ));
        let f7 = gf(7, 1);
        let g7 = Matrix::from_ints(&f7, &[vec![1, 1]]).unwrap();
        assert!(matches!(
            extend_lcd(&g7, GaloisParam::euclidean(), ExtendMode::Pmod4),
            Err(Error::WrongCharacteristic(_))
        ));
        let ns = Matrix::from_ints(&f5, &[vec![2, 1]]).unwrap();
        assert_eq!(
            extend_lcd(&ns, GaloisParam::euclidean(), ExtendMode::Pmod4),
            Err(Error::NotStandardForm)
        );
    }

    #[test]
    fn identity_code_distance() {
        for (p, e) in [(2, 1), (3, 2), (7, 1)] {
            let f = gf(p, e);
            let c = LinearCode::full(&f, 4);
            for s in [Strategy::Messages, Strategy::Supports, Strategy::Auto] {
                assert_eq!(
                    min_distance(&c, s, Budget::default(), 1).unwrap().d,
                    Distance::Exact(1)
                );
            }
        }
    }

    #[test]
    fn budget_exhaustion_gives_bounds() {
        let (_, c) = ex24();
        let tiny = Budget {
            messages: 1,
            supports: 2,
        };
        let p = min_distance(&c, Strategy::Auto, tiny, 1).unwrap();
        assert_eq!(p.d, Distance::Bounds { lo: 1, hi: 3 });
        assert!(!p.exact());
    }

    #[test]
    fn zero_code_params() {
        let f = gf(3, 1);
        let p = min_distance(&LinearCode::zero(&f, 4), Strategy::Auto, Budget::default(), 1).unwrap();
        assert_eq!(p.d, Distance::Undefined);
        assert_eq!(p.to_json()["d"], serde_json::Value::Null);
    }

    #[test]
    fn standard_form_permutes_pivots_first() {
        let f = gf(3, 1);
        let g = Matrix::from_ints(&f, &[vec![0, 1, 2], vec![0, 2, 2]]).unwrap();
        let c = LinearCode::new(g).unwrap();
        let (s, perm) = standard_form(&c);
        assert!(is_standard_form(&s));
        assert_eq!(perm, vec![1, 2, 0]);
    }

    #[test]
    fn matrix_json_round_trip() {
        let (f, c) = ex24();
        let v = c.generator().to_json();
        assert_eq!(v[0][2], serde_json::json!([0, 1, 0]));
        assert_eq!(&Matrix::from_json(&f, &v).unwrap(), c.generator());
    }
}
