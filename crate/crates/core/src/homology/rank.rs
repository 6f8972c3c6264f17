//! Exact matrix rank over `F_p` and over `Q`.
//!
//! Both routes build a row echelon form one row at a time: each incoming row
//! is reduced against the stored pivot rows by cancelling its leading entry
//! until it either vanishes or starts in a fresh pivot column. Rows are fed
//! shortest first.
//!
//! Over `F_p` pivots are normalized to a leading 1. When the stored pivots
//! fill more than 20% of their positions the remaining work switches to
//! dense rows.
//!
//! Over `Q` the elimination stays inside the integers: a row is combined with
//! a pivot row by cross-multiplying with the cofactors of their leading
//! entries and then divided by its content. Coefficients start as `i64` and
//! the whole computation restarts with arbitrary precision on overflow.
//! Inputs that are dense from the start go to Bareiss elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{FieldSpec, SparseMatrix};

const DENSE_THRESHOLD: f64 = 0.2;
const DENSE_MIN_COLS: usize = 64;

/// Rank of `m` over `field`.
pub fn rank(m: &SparseMatrix, field: FieldSpec) -> usize {
    if field.is_rational() {
        rank_rational(m)
    } else {
        rank_mod_p(m, field.characteristic())
    }
}

fn density(m: &SparseMatrix) -> f64 {
    let area = m.row_count() as f64 * m.col_count() as f64;
    if area == 0.0 {
        0.0
    } else {
        m.nnz() as f64 / area
    }
}

// ---------------------------------------------------------------------------
// F_p

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

#[inline]
fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Rank over `F_p`, `p` prime below `2^31`. Entries are reduced mod `p`.
pub fn rank_mod_p(m: &SparseMatrix, p: u32) -> usize {
    let p = p as u64;
    let cols = m.col_count();
    let mut rows: Vec<Vec<(u32, u64)>> = m
        .rows()
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|(c, v)| (c as u32, v.rem_euclid(p as i64) as u64))
                .filter(|&(_, v)| v != 0)
                .collect::<Vec<_>>()
        })
        .filter(|r| !r.is_empty())
        .collect();
    rows.sort_by_key(Vec::len);

    if density(m) > DENSE_THRESHOLD {
        let mut dense = DenseEchelonModP::new(cols, p);
        for r in rows {
            dense.insert(to_dense(&r, cols));
        }
        return dense.rank();
    }

    let mut sparse = SparseEchelonModP::new(cols, p);
    let mut pending = rows.into_iter();
    for r in pending.by_ref() {
        sparse.insert(r);
        if cols >= DENSE_MIN_COLS && sparse.fill_ratio() > DENSE_THRESHOLD {
            break;
        }
    }
    if pending.len() == 0 {
        return sparse.rank();
    }
    let mut dense = DenseEchelonModP::from_sparse(sparse);
    for r in pending {
        dense.insert(to_dense(&r, cols));
    }
    dense.rank()
}

fn to_dense(row: &[(u32, u64)], cols: usize) -> Vec<u64> {
    let mut d = vec![0; cols];
    for &(c, v) in row {
        d[c as usize] = v;
    }
    d
}

struct SparseEchelonModP {
    p: u64,
    cols: usize,
    pivot_at: Vec<Option<u32>>,
    pivots: Vec<Vec<(u32, u64)>>,
    nnz: usize,
}

impl SparseEchelonModP {
    fn new(cols: usize, p: u64) -> Self {
        SparseEchelonModP {
            p,
            cols,
            pivot_at: vec![None; cols],
            pivots: Vec::new(),
            nnz: 0,
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn fill_ratio(&self) -> f64 {
        if self.pivots.is_empty() {
            return 0.0;
        }
        self.nnz as f64 / (self.pivots.len() as f64 * self.cols as f64)
    }

    fn insert(&mut self, mut row: Vec<(u32, u64)>) -> bool {
        let p = self.p;
        loop {
            let Some(&(lead, v)) = row.first() else {
                return false;
            };
            match self.pivot_at[lead as usize] {
                Some(k) => {
                    // row -= v * pivot, pivot has leading coefficient 1
                    row = axpy_mod(&row, p - v, &self.pivots[k as usize], p);
                }
                None => {
                    let inv = inv_mod(v, p);
                    for e in &mut row {
                        e.1 = mul_mod(e.1, inv, p);
                    }
                    self.nnz += row.len();
                    self.pivot_at[lead as usize] = Some(self.pivots.len() as u32);
                    self.pivots.push(row);
                    return true;
                }
            }
        }
    }
}

/// `a + s * b` over `F_p`, both sorted by column.
fn axpy_mod(a: &[(u32, u64)], s: u64, b: &[(u32, u64)], p: u64) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            out.push((b[j].0, mul_mod(s, b[j].1, p)));
            j += 1;
        } else {
            let v = (a[i].1 + mul_mod(s, b[j].1, p)) % p;
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

struct DenseEchelonModP {
    p: u64,
    pivot_at: Vec<Option<u32>>,
    pivots: Vec<Vec<u64>>,
}

impl DenseEchelonModP {
    fn new(cols: usize, p: u64) -> Self {
        DenseEchelonModP {
            p,
            pivot_at: vec![None; cols],
            pivots: Vec::new(),
        }
    }

    fn from_sparse(s: SparseEchelonModP) -> Self {
        let cols = s.cols;
        DenseEchelonModP {
            p: s.p,
            pivot_at: s.pivot_at,
            pivots: s.pivots.iter().map(|r| to_dense(r, cols)).collect(),
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn insert(&mut self, mut row: Vec<u64>) -> bool {
        let p = self.p;
        let cols = row.len();
        for c in 0..cols {
            let v = row[c];
            if v == 0 {
                continue;
            }
            match self.pivot_at[c] {
                Some(k) => {
                    let piv = &self.pivots[k as usize];
                    let s = p - v;
                    for j in c..cols {
                        if piv[j] != 0 {
                            row[j] = (row[j] + s * piv[j]) % p;
                        }
                    }
                }
                None => {
                    let inv = inv_mod(v, p);
                    for x in &mut row[c..] {
                        *x = mul_mod(*x, inv, p);
                    }
                    self.pivot_at[c] = Some(self.pivots.len() as u32);
                    self.pivots.push(row);
                    return true;
                }
            }
        }
        false
    }
}

// ---------------------------------------------------------------------------
// Q, through integer arithmetic

trait IntCoeff: Clone + std::fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn is_one(&self) -> bool;
    fn neg(&self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
}

impl IntCoeff for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
    fn gcd(&self, other: &Self) -> Self {
        // i64::MIN never survives: neg() above would have overflowed first
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
}

impl IntCoeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
}

struct IntegerEchelon<T> {
    pivot_at: Vec<Option<u32>>,
    pivots: Vec<Vec<(u32, T)>>,
}

impl<T: IntCoeff> IntegerEchelon<T> {
    fn new(cols: usize) -> Self {
        IntegerEchelon {
            pivot_at: vec![None; cols],
            pivots: Vec::new(),
        }
    }

    /// Inserts a row; `None` signals coefficient overflow.
    fn insert(&mut self, mut row: Vec<(u32, T)>) -> Option<bool> {
        loop {
            let Some((lead, b)) = row.first().cloned() else {
                return Some(false);
            };
            match self.pivot_at[lead as usize] {
                Some(k) => {
                    let piv = &self.pivots[k as usize];
                    let a = &piv[0].1; // positive
                    let g = a.gcd(&b);
                    let sa = a.div_exact(&g);
                    let sb = b.div_exact(&g);
                    row = combine(&sa, &row, &sb, piv)?;
                    if !sa.is_one() {
                        make_primitive(&mut row);
                    }
                }
                None => {
                    if b.is_negative() {
                        for e in &mut row {
                            e.1 = e.1.neg()?;
                        }
                    }
                    make_primitive(&mut row);
                    self.pivot_at[lead as usize] = Some(self.pivots.len() as u32);
                    self.pivots.push(row);
                    return Some(true);
                }
            }
        }
    }
}

/// `sa * a - sb * b` for column-sorted rows.
fn combine<T: IntCoeff>(sa: &T, a: &[(u32, T)], sb: &T, b: &[(u32, T)]) -> Option<Vec<(u32, T)>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let scale_a = !sa.is_one();
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            let v = if scale_a { sa.mul(&a[i].1)? } else { a[i].1.clone() };
            out.push((a[i].0, v));
            i += 1;
        } else if take_b {
            out.push((b[j].0, sb.mul(&b[j].1)?.neg()?));
            j += 1;
        } else {
            let left = if scale_a { sa.mul(&a[i].1)? } else { a[i].1.clone() };
            let v = left.sub(&sb.mul(&b[j].1)?)?;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

fn make_primitive<T: IntCoeff>(row: &mut [(u32, T)]) {
    let Some(first) = row.first() else { return };
    let mut g = first.1.gcd(&first.1);
    for e in row.iter().skip(1) {
        if g.is_one() {
            return;
        }
        g = g.gcd(&e.1);
    }
    if !g.is_one() && !g.is_zero() {
        for e in row.iter_mut() {
            e.1 = e.1.div_exact(&g);
        }
    }
}

fn integer_rank<T: IntCoeff>(m: &SparseMatrix) -> Option<usize> {
    let mut rows: Vec<Vec<(u32, T)>> = m
        .rows()
        .into_iter()
        .filter(|r| !r.is_empty())
        .map(|r| r.into_iter().map(|(c, v)| (c as u32, T::from_i64(v))).collect())
        .collect();
    rows.sort_by_key(Vec::len);
    let mut ech = IntegerEchelon::<T>::new(m.col_count());
    for r in rows {
        ech.insert(r)?;
    }
    Some(ech.pivots.len())
}

/// Rank over `Q` by sparse fraction-free integer elimination.
pub fn rank_rational_sparse(m: &SparseMatrix) -> usize {
    integer_rank::<i64>(m)
        .or_else(|| integer_rank::<BigInt>(m))
        .expect("arbitrary precision elimination cannot overflow")
}

/// Rank over `Q` by dense Bareiss elimination with arbitrary precision.
pub fn rank_rational_bareiss(m: &SparseMatrix) -> usize {
    let mut a = vec![vec![BigInt::zero(); m.col_count()]; m.row_count()];
    for &(r, c, v) in m.entries() {
        a[r][c] = BigInt::from(v);
    }
    bareiss_rank(a)
}

fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pivot) = (r..rows).find(|&i| !Zero::is_zero(&a[i][c])) else {
            continue;
        };
        a.swap(r, pivot);
        let (top, bottom) = a.split_at_mut(r + 1);
        let prow = &top[r];
        for row in bottom.iter_mut() {
            for j in c + 1..cols {
                let v = &prow[c] * &row[j] - &row[c] * &prow[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Rank over `Q`: Bareiss for dense inputs, sparse integer elimination
/// otherwise.
pub fn rank_rational(m: &SparseMatrix) -> usize {
    if density(m) > DENSE_THRESHOLD && m.row_count().min(m.col_count()) <= 256 {
        rank_rational_bareiss(m)
    } else {
        rank_rational_sparse(m)
    }
}

/// Largest rank of `m` modulo the given primes.
///
/// Heuristic: this is a lower bound for the rational rank and equals it
/// unless every prime divides the relevant minors.
pub fn rank_multimodular(m: &SparseMatrix, primes: &[u32]) -> usize {
    primes.iter().map(|&p| rank_mod_p(m, p)).max().unwrap_or(0)
}
