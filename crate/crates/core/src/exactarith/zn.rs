//! Affine linear systems over `Z/N`.
//!
//! Systems are brought to diagonal form `U·M·V = D` by unimodular row and
//! column operations carried out modulo `N` (a Smith-style reduction; the
//! divisibility chain on `D` is not enforced because solving does not need
//! it). Every step is invertible over `Z`, hence over `Z/N`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{HopfError, Result};

/// Solution set of `M v ≡ b (mod N)`: `particular + span(kernel_basis)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZnSolution {
    pub modulus: u64,
    pub particular: Option<Vec<u64>>,
    /// Generators of the solution module of the homogeneous system.
    pub kernel_basis: Vec<Vec<u64>>,
    /// Additive order of each kernel generator; the generators are
    /// independent, so the kernel has `Π orders` elements.
    pub kernel_orders: Vec<u64>,
}

impl ZnSolution {
    pub fn is_solvable(&self) -> bool {
        self.particular.is_some()
    }

    /// Number of solutions (saturating).
    pub fn count(&self) -> u128 {
        if self.particular.is_none() {
            return 0;
        }
        self.kernel_orders
            .iter()
            .fold(1u128, |acc, &o| acc.saturating_mul(o as u128))
    }
}

fn xgcd(a: i128, b: i128) -> (i128, i128, i128) {
    let e = a.extended_gcd(&b);
    (e.gcd, e.x, e.y)
}

fn modinv(a: u64, n: u64) -> u64 {
    let (g, x, _) = xgcd(a as i128, n as i128);
    debug_assert_eq!(g, 1);
    x.rem_euclid(n as i128) as u64
}

#[derive(Clone, Copy)]
struct Zn(u64);

impl Zn {
    fn red(self, v: i128) -> u64 {
        v.rem_euclid(self.0 as i128) as u64
    }

    /// `[a; b] <- [[u, v], [s, t]] · [a; b]` on two row vectors.
    fn combine(self, a: &mut [u64], b: &mut [u64], u: i128, v: i128, s: i128, t: i128) {
        for (x, y) in a.iter_mut().zip(b.iter_mut()) {
            let (xi, yi) = (*x as i128, *y as i128);
            *x = self.red(u * xi + v * yi);
            *y = self.red(s * xi + t * yi);
        }
    }

    fn axpy(self, dst: &mut [u64], src: &[u64], k: i128) {
        for (d, s) in dst.iter_mut().zip(src) {
            if *s != 0 {
                *d = self.red(*d as i128 + k * *s as i128);
            }
        }
    }
}

/// Row-reduce a stream of rows into at most `width` pivot rows spanning the
/// same row module over `Z/N`.
fn hermite_stream(rows: impl IntoIterator<Item = Vec<u64>>, width: usize, n: u64) -> Vec<Vec<u64>> {
    let zn = Zn(n);
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; width];
    for mut row in rows {
        let mut col = 0;
        while col < width {
            if row[col] == 0 {
                col += 1;
                continue;
            }
            match &mut pivots[col] {
                None => {
                    pivots[col] = Some(row);
                    break;
                }
                Some(p) => {
                    let (a, b) = (p[col] as i128, row[col] as i128);
                    if b % a == 0 {
                        zn.axpy(&mut row, p, -(b / a));
                    } else {
                        let (g, u, v) = xgcd(a, b);
                        zn.combine(p, &mut row, u, v, -b / g, a / g);
                    }
                    debug_assert_eq!(row[col], 0);
                    col += 1;
                }
            }
        }
    }
    pivots.into_iter().flatten().collect()
}

/// Diagonal form of a system over `Z/N`.
///
/// Rows carry `ncols` coefficient columns followed by augmented columns that
/// only take part in row operations.
#[derive(Clone, Debug)]
pub struct Diagonalization {
    pub modulus: u64,
    pub ncols: usize,
    /// Nonzero diagonal entries `d_0..d_{rank-1}`.
    pub diag: Vec<u64>,
    /// Transformed rows; the first `rank` are diagonal, the remaining ones
    /// have zero coefficient part.
    pub rows: Vec<Vec<u64>>,
    /// Column transform `V` (`ncols × ncols`), original unknowns `v = V·y`.
    pub v: Vec<Vec<u64>>,
    /// `V^{-1}`.
    pub v_inv: Vec<Vec<u64>>,
}

impl Diagonalization {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }
}

pub fn diagonalize(rows: impl IntoIterator<Item = Vec<u64>>, ncols: usize, naug: usize, n: u64) -> Diagonalization {
    let zn = Zn(n);
    let width = ncols + naug;
    let mut m = hermite_stream(
        rows.into_iter().map(|r| r.into_iter().map(|x| x % n).collect()),
        width,
        n,
    );
    let ident = |k: usize| -> Vec<Vec<u64>> {
        (0..k)
            .map(|i| (0..k).map(|j| u64::from(i == j) % n).collect())
            .collect()
    };
    let mut v = ident(ncols);
    let mut v_inv = ident(ncols);
    let mut diag = Vec::new();

    let mut t = 0;
    while t < m.len() && t < ncols {
        // smallest nonzero entry of the remaining block
        let mut best: Option<(u64, usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().take(ncols).skip(t) {
                if x != 0 && best.is_none_or(|(b, _, _)| x < b) {
                    best = Some((x, i, j));
                }
            }
        }
        let Some((_, bi, bj)) = best else { break };
        m.swap(t, bi);
        swap_cols(&mut m, t, bj);
        swap_cols(&mut v, t, bj);
        v_inv.swap(t, bj);

        loop {
            let mut dirty = false;
            for i in t + 1..m.len() {
                let b = m[i][t] as i128;
                if b == 0 {
                    continue;
                }
                let a = m[t][t] as i128;
                let (lo, hi) = split_two(&mut m, t, i);
                if b % a == 0 {
                    zn.axpy(hi, lo, -(b / a));
                } else {
                    let (g, u, w) = xgcd(a, b);
                    zn.combine(lo, hi, u, w, -b / g, a / g);
                }
            }
            for j in t + 1..ncols {
                let b = m[t][j] as i128;
                if b == 0 {
                    continue;
                }
                let a = m[t][t] as i128;
                if b % a == 0 {
                    let k = -(b / a);
                    col_axpy(zn, &mut m, j, t, k);
                    col_axpy(zn, &mut v, j, t, k);
                    // V^{-1} gets the inverse operation: row_t -= k·row_j
                    let (lo, hi) = split_two(&mut v_inv, t, j);
                    zn.axpy(lo, hi, -k);
                } else {
                    let (g, u, w) = xgcd(a, b);
                    let (s, tt) = (-b / g, a / g);
                    col_combine(zn, &mut m, t, j, u, w, s, tt);
                    col_combine(zn, &mut v, t, j, u, w, s, tt);
                    // inverse of [[u, s], [w, tt]] acting on rows (t, j) of V^{-1}
                    let (lo, hi) = split_two(&mut v_inv, t, j);
                    zn.combine(lo, hi, tt, -s, -w, u);
                }
                if m.iter().skip(t + 1).any(|r| r[t] != 0) {
                    dirty = true;
                }
            }
            if !dirty && m.iter().skip(t + 1).all(|r| r[t] == 0) {
                break;
            }
        }
        diag.push(m[t][t]);
        t += 1;
    }
    Diagonalization {
        modulus: n,
        ncols,
        diag,
        rows: m,
        v,
        v_inv,
    }
}

fn split_two<T>(m: &mut [T], lo: usize, hi: usize) -> (&mut T, &mut T) {
    debug_assert!(lo < hi);
    let (a, b) = m.split_at_mut(hi);
    (&mut a[lo], &mut b[0])
}

fn swap_cols(m: &mut [Vec<u64>], a: usize, b: usize) {
    if a != b {
        for r in m.iter_mut() {
            r.swap(a, b);
        }
    }
}

/// `col_dst += k · col_src`.
fn col_axpy(zn: Zn, m: &mut [Vec<u64>], dst: usize, src: usize, k: i128) {
    for r in m.iter_mut() {
        if r[src] != 0 {
            r[dst] = zn.red(r[dst] as i128 + k * r[src] as i128);
        }
    }
}

/// New columns `(c_a, c_b) <- (u·c_a + w·c_b, s·c_a + t·c_b)`.
#[allow(clippy::too_many_arguments)]
fn col_combine(zn: Zn, m: &mut [Vec<u64>], a: usize, b: usize, u: i128, w: i128, s: i128, t: i128) {
    for r in m.iter_mut() {
        let (x, y) = (r[a] as i128, r[b] as i128);
        r[a] = zn.red(u * x + w * y);
        r[b] = zn.red(s * x + t * y);
    }
}

/// Solve `M v ≡ b (mod N)`.
pub fn solve_affine_zn(m: &[Vec<i64>], b: &[i64], n: u64) -> Result<ZnSolution> {
    if n == 0 {
        return Err(HopfError::Precondition("modulus must be positive".into()));
    }
    if m.len() != b.len() {
        return Err(HopfError::Dimension(format!(
            "{} equations but {} right-hand sides",
            m.len(),
            b.len()
        )));
    }
    let ncols = m.first().map_or(0, Vec::len);
    if m.iter().any(|r| r.len() != ncols) {
        return Err(HopfError::Dimension("ragged matrix".into()));
    }
    let rows = m.iter().zip(b).map(|(r, &bi)| {
        r.iter()
            .chain(std::iter::once(&bi))
            .map(|&x| x.rem_euclid(n as i64) as u64)
            .collect::<Vec<_>>()
    });
    Ok(solve_diagonalized(&diagonalize(rows, ncols, 1, n)))
}

/// Read the solution set off a diagonalization with one augmented column.
pub fn solve_diagonalized(d: &Diagonalization) -> ZnSolution {
    let n = d.modulus;
    let ncols = d.ncols;
    let rank = d.rank();
    let unsolvable = ZnSolution {
        modulus: n,
        particular: None,
        kernel_basis: vec![],
        kernel_orders: vec![],
    };
    if d.rows[rank..].iter().any(|r| r[ncols] != 0) {
        return unsolvable;
    }
    let mut y = vec![0u64; ncols];
    let mut gens: Vec<(usize, u64, u64)> = Vec::new(); // (coordinate, multiplier, order)
    for t in 0..rank {
        let dt = d.diag[t];
        let rhs = d.rows[t][ncols];
        let g = dt.gcd(&n);
        if !rhs.is_multiple_of(g) {
            return unsolvable;
        }
        let ng = n / g;
        y[t] = if ng == 1 {
            0
        } else {
            ((rhs / g) as u128 * modinv((dt / g) % ng, ng) as u128 % ng as u128) as u64
        };
        if g > 1 {
            gens.push((t, ng, g));
        }
    }
    if n > 1 {
        for t in rank..ncols {
            gens.push((t, 1, n));
        }
    }
    let apply_v = |coord: usize, mult: u64| -> Vec<u64> {
        (0..ncols)
            .map(|i| (d.v[i][coord] as u128 * mult as u128 % n as u128) as u64)
            .collect()
    };
    let mut particular = vec![0u64; ncols];
    for (t, &yt) in y.iter().enumerate() {
        if yt != 0 {
            for (i, p) in particular.iter_mut().enumerate() {
                *p = ((*p as u128 + d.v[i][t] as u128 * yt as u128) % n as u128) as u64;
            }
        }
    }
    ZnSolution {
        modulus: n,
        particular: Some(particular),
        kernel_basis: gens.iter().map(|&(t, mult, _)| apply_v(t, mult)).collect(),
        kernel_orders: gens.iter().map(|&(_, _, o)| o).collect(),
    }
}

/// Finite quotient `(⊕ Z/o_i) / ⟨relations⟩` of a `Z/N`-module given by
/// generator orders, with an explicit transversal.
#[derive(Clone, Debug)]
pub struct QuotientModule {
    modulus: u64,
    /// Order of each cyclic factor of the quotient.
    pub factor_orders: Vec<u64>,
    w_to_c: Vec<Vec<u64>>,
    c_to_w: Vec<Vec<u64>>,
}

impl QuotientModule {
    /// `orders[i]` must divide `n`; each relation is a coordinate vector in
    /// the generators.
    pub fn new(orders: &[u64], relations: &[Vec<u64>], n: u64) -> QuotientModule {
        let g = orders.len();
        let mut rows: Vec<Vec<u64>> = (0..g)
            .map(|i| {
                let mut r = vec![0u64; g];
                r[i] = orders[i] % n;
                r
            })
            .collect();
        rows.extend(relations.iter().map(|r| r.iter().map(|x| x % n).collect()));
        let d = diagonalize(rows, g, 0, n);
        let mut factor_orders = Vec::with_capacity(g);
        for t in 0..g {
            let o = if t < d.rank() { d.diag[t].gcd(&n) } else { n };
            factor_orders.push(o);
        }
        QuotientModule {
            modulus: n,
            factor_orders,
            w_to_c: d.v_inv,
            c_to_w: d.v,
        }
    }

    pub fn size(&self) -> u128 {
        self.factor_orders
            .iter()
            .fold(1u128, |a, &o| a.saturating_mul(o as u128))
    }

    /// Generator coordinates of the transversal element with quotient
    /// coordinates `w` (`w[t] < factor_orders[t]`).
    pub fn representative(&self, w: &[u64]) -> Vec<u64> {
        let n = self.modulus as u128;
        let g = self.w_to_c.len();
        (0..g)
            .map(|j| {
                let mut acc = 0u128;
                for (t, &wt) in w.iter().enumerate() {
                    acc = (acc + wt as u128 * self.w_to_c[t][j] as u128) % n;
                }
                acc as u64
            })
            .collect()
    }

    /// Quotient coordinates of a generator-coordinate vector, reduced to the
    /// transversal.
    pub fn classify(&self, c: &[u64]) -> Vec<u64> {
        let n = self.modulus as u128;
        (0..self.factor_orders.len())
            .map(|t| {
                let mut acc = 0u128;
                for (j, &cj) in c.iter().enumerate() {
                    acc = (acc + cj as u128 * self.c_to_w[j][t] as u128) % n;
                }
                (acc % self.factor_orders[t] as u128) as u64
            })
            .collect()
    }

    /// All transversal coordinates in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        let orders = self.factor_orders.clone();
        let total = self.size();
        (0..total).map(move |mut k| {
            let mut w = vec![0u64; orders.len()];
            for t in (0..orders.len()).rev() {
                w[t] = (k % orders[t] as u128) as u64;
                k /= orders[t] as u128;
            }
            w
        })
    }
}
