//! Integer lattices: row Hermite normal form with its unimodular transform,
//! kernels, and exact lattice membership.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

/// Row-style Hermite normal form `H = U * A`.
///
/// The first `rank` rows of `H` are nonzero, each with a positive pivot
/// strictly right of the previous row's pivot, and every entry above a
/// pivot lies in `[0, pivot)`. The remaining rows are zero, and the matching
/// rows of `U` form a basis of the left kernel of `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hnf {
    pub rows: Vec<Vec<BigInt>>,
    pub transform: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
}

impl Hnf {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of `{ u : u * A = 0 }`.
    pub fn left_kernel(&self) -> &[Vec<BigInt>] {
        &self.transform[self.rank()..]
    }
}

/// `(g, s, t)` with `s*a + t*b = g = gcd(a, b) >= 0`.
fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    (e.gcd, e.x, e.y)
}

/// `(x, y) <- (s*x + t*y, c*x + d*y)` for two rows.
fn combine(rows: &mut [Vec<BigInt>], i: usize, j: usize, coeffs: [&BigInt; 4]) {
    let [s, t, c, d] = coeffs;
    let (ri, rj) = (rows[i].clone(), rows[j].clone());
    for k in 0..ri.len() {
        rows[i][k] = s * &ri[k] + t * &rj[k];
        rows[j][k] = c * &ri[k] + d * &rj[k];
    }
}

fn axpy(rows: &mut [Vec<BigInt>], target: usize, q: &BigInt, source: usize) {
    let src = rows[source].clone();
    for (x, y) in rows[target].iter_mut().zip(&src) {
        *x -= q * y;
    }
}

fn negate(row: &mut [BigInt]) {
    for x in row {
        *x = -&*x;
    }
}

pub fn hermite_normal_form(a: &[Vec<BigInt>]) -> Hnf {
    let m = a.len();
    let width = a.first().map_or(0, Vec::len);
    let mut h = a.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        if r == m {
            break;
        }
        for i in (r + 1)..m {
            if h[i][col].is_zero() {
                continue;
            }
            if h[r][col].is_zero() {
                h.swap(r, i);
                u.swap(r, i);
                continue;
            }
            let (g, s, t) = extended_gcd(&h[r][col], &h[i][col]);
            let a_ = &h[r][col] / &g;
            let b_ = &h[i][col] / &g;
            let neg_b = -&b_;
            combine(&mut h, r, i, [&s, &t, &neg_b, &a_]);
            combine(&mut u, r, i, [&s, &t, &neg_b, &a_]);
        }
        if h[r][col].is_zero() {
            continue;
        }
        if h[r][col].is_negative() {
            negate(&mut h[r]);
            negate(&mut u[r]);
        }
        for k in 0..r {
            let q = h[k][col].div_floor(&h[r][col]);
            if !q.is_zero() {
                axpy(&mut h, k, &q, r);
                axpy(&mut u, k, &q, r);
            }
        }
        pivots.push(col);
        r += 1;
    }
    Hnf {
        rows: h,
        transform: u,
        pivots,
    }
}

/// Basis of the integer right kernel `{ x : M x = 0 }`.
pub fn integer_kernel(m: &[Vec<BigInt>], columns: usize) -> Vec<Vec<BigInt>> {
    let transposed: Vec<Vec<BigInt>> = (0..columns)
        .map(|c| m.iter().map(|row| row[c].clone()).collect())
        .collect();
    hermite_normal_form(&transposed).left_kernel().to_vec()
}

/// Integer coefficients `c` with `sum_k c[k] * basis[k] = target`, or `None`
/// when `target` is outside the lattice. `basis` must be square and
/// nonsingular; returns `Err(())` otherwise.
#[allow(clippy::result_unit_err)]
pub fn solve_in_lattice(
    basis: &[Vec<BigInt>],
    target: &[BigInt],
) -> Result<Option<Vec<BigInt>>, ()> {
    let n = basis.len();
    if target.len() != n || basis.iter().any(|r| r.len() != n) {
        return Err(());
    }
    let hnf = hermite_normal_form(basis);
    if hnf.rank() != n {
        return Err(());
    }
    // target = d * H, solved column by column along the pivots
    let mut residual = target.to_vec();
    let mut d = vec![BigInt::zero(); n];
    for (k, &col) in hnf.pivots.iter().enumerate() {
        let (q, rem) = residual[col].div_rem(&hnf.rows[k][col]);
        if !rem.is_zero() {
            return Ok(None);
        }
        for (x, y) in residual.iter_mut().zip(&hnf.rows[k]) {
            *x -= &q * y;
        }
        d[k] = q;
    }
    if residual.iter().any(|x| !x.is_zero()) {
        return Ok(None);
    }
    // target = d * U * basis
    let coeffs = (0..n)
        .map(|j| (0..n).map(|k| &d[k] * &hnf.transform[k][j]).sum())
        .collect();
    Ok(Some(coeffs))
}
