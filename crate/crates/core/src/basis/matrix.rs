use crate::ring::GcdDomain;
use crate::spline::Spline;

/// Square matrix whose columns are candidate splines.
///
/// Row 0 holds the values at the last vertex and row `n-1` the values at the
/// first vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplineMatrix<R> {
    rows: Vec<Vec<R>>,
}

impl<R: GcdDomain> SplineMatrix<R> {
    /// Columns are the given vectors, which must all have length `columns.len()`.
    pub fn from_columns<C: AsRef<[R]>>(columns: &[C]) -> Option<Self> {
        let n = columns.len();
        if columns.iter().any(|c| c.as_ref().len() != n) {
            return None;
        }
        let rows = (0..n)
            .rev()
            .map(|vertex| columns.iter().map(|c| c.as_ref()[vertex].clone()).collect())
            .collect();
        Some(SplineMatrix { rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<R>] {
        &self.rows
    }

    /// Cofactor expansion up to 4x4, fraction-free elimination beyond.
    pub fn determinant(&self) -> R {
        if self.size() <= 4 {
            cofactor_determinant(&self.rows)
        } else {
            bareiss_determinant(&self.rows)
        }
    }
}

impl<R> AsRef<[R]> for Spline<R>
where
    R: GcdDomain,
{
    fn as_ref(&self) -> &[R] {
        self.values()
    }
}

/// Determinant by Bareiss fraction-free elimination. Every division is
/// exact in an integral domain, so no fractions appear.
pub fn bareiss_determinant<R: GcdDomain>(rows: &[Vec<R>]) -> R {
    let n = rows.len();
    if n == 0 {
        return R::one();
    }
    let mut a = rows.to_vec();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match ((k + 1)..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return R::zero(),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.exact_div(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// Determinant by Laplace expansion along the first row.
pub fn cofactor_determinant<R: GcdDomain>(rows: &[Vec<R>]) -> R {
    let n = rows.len();
    match n {
        0 => return R::one(),
        1 => return rows[0][0].clone(),
        _ => {}
    }
    let mut det = R::zero();
    for (col, entry) in rows[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<R>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != col)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = entry.mul(&cofactor_determinant(&minor));
        det = if col % 2 == 0 { det.add(&term) } else { det.sub(&term) };
    }
    det
}
